//! Fox colorings by the dihedral quandle `R_r = ℤ/r`, `x * y = 2y − x`.
//!
//! Colorings are solutions mod `r` of an Alexander-type matrix at `t = −1`:
//! the Fox matrix of a presentation, the coloring matrix of a closure
//! diagram, or the fixed-point system of the dihedral transport through a
//! braid. Condition O pins the first generator (arc, strand-top) to color 0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::braid::{braids_commute, BraidWord};
use crate::error::{Error, Result};
use crate::laurent::LaurentMatrix;
use crate::linalg::{enumerate_solutions_mod, solution_count_mod, IntMatrix, DEFAULT_ENUM_CAP};

pub fn dihedral_op(x: u64, y: u64, p: u64) -> u64 {
    ((2 * (y % p) as u128 + p as u128 - (x % p) as u128) % p as u128) as u64
}

/// Counts of `r`-colorings of one object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCensus {
    pub modulus: u64,
    pub total: BigInt,
    /// colorings that are not constant
    pub nontrivial: BigInt,
    /// some coloring's colors generate all of `R_r`
    pub nondegenerate: bool,
    /// colorings with the base color fixed to 0
    pub condition_o: BigInt,
}

/// `A` with the row `e_base` appended, pinning that coordinate to 0.
pub fn pin_base(a: &IntMatrix, base: usize) -> IntMatrix {
    let mut row = IntMatrix::zeros(1, a.cols());
    row.set(0, base, BigInt::from(1));
    a.stack(&row)
}

/// Census of the solutions of `a·x ≡ 0 (mod r)`, whose rows must sum to zero
/// so that constant vectors are colorings.
pub fn census_of_system(a: &IntMatrix, r: u64, cap: u64) -> Result<ColoringCensus> {
    if r < 2 {
        return Err(Error::BadModulus(r.to_string()));
    }
    let total = solution_count_mod(a, r)?;
    if a.cols() == 0 {
        return Ok(ColoringCensus {
            modulus: r,
            total,
            nontrivial: BigInt::zero(),
            nondegenerate: false,
            condition_o: BigInt::from(1),
        });
    }
    let pinned = pin_base(a, 0);
    let condition_o = solution_count_mod(&pinned, r)?;
    // translation by constants is free, so condition-O solutions suffice
    let nondegenerate = enumerate_solutions_mod(&pinned, r, cap)?
        .iter()
        .any(|x| generated_subgroup(x, r) == 1);
    Ok(ColoringCensus {
        modulus: r,
        nontrivial: &total - BigInt::from(r),
        total,
        nondegenerate,
        condition_o,
    })
}

/// Census of the `r`-colorings presented by `m` at `t = −1`.
pub fn coloring_census(m: &LaurentMatrix, r: u64) -> Result<ColoringCensus> {
    census_of_system(&m.eval_at(-1)?, r, DEFAULT_ENUM_CAP)
}

/// The subquandle generated by `colors` is a translate of `dℤ/p`; returns `d`.
///
/// Colors generate `R_p` exactly when `d = 1`.
pub fn generated_subgroup(colors: &[u64], p: u64) -> u64 {
    let Some(&first) = colors.first() else {
        return p;
    };
    colors
        .iter()
        .fold(p, |g, &c| g.gcd(&((c % p + p - first % p) % p)))
}

/// Whether some coloring mod `p` is non-degenerate.
pub fn is_p_colorable(m: &LaurentMatrix, p: u64) -> Result<bool> {
    Ok(coloring_census(m, p)?.nondegenerate)
}

/// Pushes strand-top colors down through `a`: at `σ_i` the strand passing
/// under takes color `2·over − under`.
pub fn dihedral_transport(a: &BraidWord, colors: &[u64], r: u64) -> Result<Vec<u64>> {
    if colors.len() != a.strands() {
        return Err(Error::RankMismatch { left: a.strands(), right: colors.len() });
    }
    if r < 2 {
        return Err(Error::BadModulus(r.to_string()));
    }
    let mut c: Vec<u64> = colors.iter().map(|x| x % r).collect();
    for l in a.letters() {
        let (i, k) = (l.index - 1, l.index);
        if l.positive {
            let (over, under) = (c[i], c[k]);
            c[i] = dihedral_op(under, over, r);
            c[k] = over;
        } else {
            let (over, under) = (c[k], c[i]);
            c[k] = dihedral_op(under, over, r);
            c[i] = over;
        }
    }
    Ok(c)
}

/// The integer matrix `T_a` of the transport (it is linear over `ℤ`).
pub fn transport_matrix(a: &BraidWord) -> IntMatrix {
    let n = a.strands();
    // rows[k] = coefficients of the color now at position k
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|k| (0..n).map(|j| i64::from(j == k)).collect())
        .collect();
    let combine = |over: &[i64], under: &[i64]| -> Vec<i64> {
        over.iter().zip(under).map(|(o, u)| 2 * o - u).collect()
    };
    for l in a.letters() {
        let (i, k) = (l.index - 1, l.index);
        if l.positive {
            let new_i = combine(&rows[i], &rows[k]);
            rows[k] = std::mem::replace(&mut rows[i], new_i);
        } else {
            let new_k = combine(&rows[k], &rows[i]);
            rows[i] = std::mem::replace(&mut rows[k], new_k);
        }
    }
    IntMatrix::from_rows(&rows, n)
}

/// `[T_a − I; T_b − I]`, whose kernel mod `r` is the set of common fixed points.
pub fn fixed_point_system(a: &BraidWord, b: &BraidWord) -> IntMatrix {
    let n = a.strands();
    let shift = |m: IntMatrix| {
        let mut m = m;
        for i in 0..n {
            let v = m.get(i, i) - 1;
            m.set(i, i, v);
        }
        m
    };
    shift(transport_matrix(a)).stack(&shift(transport_matrix(b)))
}

/// Census of colorings of the torus-covering T²-knot `(a, b)`, computed as
/// common fixed points of the transports of `a` and `b`.
pub fn surface_coloring_census(a: &BraidWord, b: &BraidWord, r: u64) -> Result<ColoringCensus> {
    if !braids_commute(a, b)? {
        return Err(Error::NonCommuting);
    }
    census_of_system(&fixed_point_system(a, b), r, DEFAULT_ENUM_CAP)
}

/// `|Col_r^0|` for `r = 2..=r_max` through the transport route.
pub fn colorability_profile(a: &BraidWord, b: &BraidWord, r_max: u64) -> Result<Vec<(u64, BigInt)>> {
    if r_max < 2 {
        return Err(Error::BadModulus(r_max.to_string()));
    }
    if !braids_commute(a, b)? {
        return Err(Error::NonCommuting);
    }
    let pinned = pin_base(&fixed_point_system(a, b), 0);
    (2..=r_max).map(|r| Ok((r, solution_count_mod(&pinned, r)?))).collect()
}

/// Divides a coloring whose colors generate `dℤ/r` down to a non-degenerate
/// coloring mod `r/d`; `None` for trivial colorings.
pub fn reduce_to_nondegenerate(colors: &[u64], r: u64) -> Option<(u64, Vec<u64>)> {
    let d = generated_subgroup(colors, r);
    if d == r {
        return None;
    }
    let first = colors[0] % r;
    let q = r / d;
    Some((q, colors.iter().map(|&c| ((c % r + r - first) % r) / d).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::presentation::{closure_diagram, coloring_matrix};
    use std::collections::BTreeSet;

    fn br(s: &str, n: usize) -> BraidWord {
        parse_braid(s, n).unwrap()
    }

    /// Closure of `colors` under `*`, by iteration.
    fn brute_closure(colors: &[u64], p: u64) -> BTreeSet<u64> {
        let mut set: BTreeSet<u64> = colors.iter().map(|c| c % p).collect();
        loop {
            let mut next = set.clone();
            for &x in &set {
                for &y in &set {
                    next.insert(dihedral_op(x, y, p));
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    #[test]
    fn quandle_axioms() {
        for p in 2..12 {
            for x in 0..p {
                assert_eq!(dihedral_op(x, x, p), x);
                for y in 0..p {
                    let z = dihedral_op(x, y, p);
                    assert_eq!(dihedral_op(z, y, p), x);
                }
            }
        }
        assert_eq!(dihedral_op(0, 1, 3), 2);
    }

    #[test]
    fn subgroup_examples() {
        assert_eq!(generated_subgroup(&[0, 2], 4), 2);
        assert_eq!(generated_subgroup(&[0, 1], 7), 1);
        assert_eq!(generated_subgroup(&[5], 7), 7);
        assert_eq!(generated_subgroup(&[3, 5], 8), 2);
    }

    #[test]
    fn subgroup_matches_closure() {
        for p in 2..=30u64 {
            for a in 0..p {
                for b in [0, 1, p / 2, p - 1] {
                    let colors = [a, b, (a * 7 + 3) % p];
                    let d = generated_subgroup(&colors, p);
                    assert_eq!(brute_closure(&colors, p).len() as u64, p / d, "p={p} {colors:?}");
                }
            }
        }
    }

    #[test]
    fn trefoil_census() {
        let m = coloring_matrix(&closure_diagram(&br("1^3", 2)));
        let c = coloring_census(&m, 3).unwrap();
        assert_eq!(c.total, BigInt::from(9));
        assert_eq!(c.condition_o, BigInt::from(3));
        assert_eq!(c.nontrivial, BigInt::from(6));
        assert!(c.nondegenerate);
        let c = coloring_census(&m, 5).unwrap();
        assert_eq!(c.total, BigInt::from(5));
        assert!(!c.nondegenerate);
        assert!(is_p_colorable(&m, 3).unwrap());
        assert!(!is_p_colorable(&m, 5).unwrap());
    }

    #[test]
    fn unknot_census() {
        let m = coloring_matrix(&closure_diagram(&br("1", 2)));
        for r in 2..9 {
            let c = coloring_census(&m, r).unwrap();
            assert_eq!(c.total, BigInt::from(r));
            assert!(!c.nondegenerate);
        }
    }

    #[test]
    fn transport_examples() {
        assert_eq!(dihedral_transport(&BraidWord::identity(3), &[4, 1, 2], 5).unwrap(), vec![4, 1, 2]);
        assert_eq!(dihedral_transport(&br("1", 2), &[0, 1], 7).unwrap(), vec![6, 0]);
        assert_eq!(dihedral_transport(&br("-1", 2), &[0, 1], 7).unwrap(), vec![1, 2]);
        assert_eq!(dihedral_transport(&br("1^3", 2), &[0, 1], 3).unwrap(), vec![0, 1]);
        assert!(dihedral_transport(&br("1", 2), &[0], 3).is_err());
    }

    #[test]
    fn transport_matrix_agrees_with_transport() {
        let a = br("1 -2 1^2 -3 2", 4);
        let t = transport_matrix(&a);
        let r = 11u64;
        let x = [3u64, 7, 0, 9];
        let direct = dihedral_transport(&a, &x, r).unwrap();
        for (i, &d) in direct.iter().enumerate() {
            let s: BigInt = (0..4).map(|j| t.get(i, j) * BigInt::from(x[j])).sum();
            assert_eq!(s.mod_floor(&BigInt::from(r)), BigInt::from(d));
        }
    }

    #[test]
    fn surface_census_examples() {
        let (c, b) = (br("1^3", 2), br("1^6", 2));
        assert_eq!(surface_coloring_census(&c, &b, 3).unwrap().total, BigInt::from(9));
        assert_eq!(surface_coloring_census(&c, &b, 2).unwrap().total, BigInt::from(2));
        let id = BraidWord::identity(2);
        for r in 2..8 {
            let s = surface_coloring_census(&c, &id, r).unwrap();
            let d = coloring_census(&coloring_matrix(&closure_diagram(&c)), r).unwrap();
            assert_eq!(s.total, d.total);
        }
        assert!(surface_coloring_census(&br("1", 3), &br("2", 3), 3).is_err());
    }

    #[test]
    fn profiles() {
        let (c, b) = (br("1^3", 2), br("1^6", 2));
        for (r, count) in colorability_profile(&c, &b, 12).unwrap() {
            let want = if r % 3 == 0 { 3 } else { 1 };
            assert_eq!(count, BigInt::from(want), "r = {r}");
        }
        let unknot = br("1", 2);
        for (_, count) in colorability_profile(&unknot, &BraidWord::identity(2), 10).unwrap() {
            assert_eq!(count, BigInt::from(1));
        }
        assert!(colorability_profile(&c, &b, 1).is_err());
    }

    #[test]
    fn nondegenerate_reduction() {
        let (q, x) = reduce_to_nondegenerate(&[1, 3, 5], 6).unwrap();
        assert_eq!(q, 3);
        assert_eq!(generated_subgroup(&x, q), 1);
        assert!(reduce_to_nondegenerate(&[2, 2], 6).is_none());
    }
}
