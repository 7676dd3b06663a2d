//! Cross-route checks against brute-force oracles on seeded random inputs.

use std::collections::BTreeSet;

use kreps_core::coloring::{census_of_system, fixed_point_system, reduce_to_nondegenerate};
use kreps_core::presentation::{knot_determinant, minor_gcd, presentation_determinant};
use kreps_core::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_braid(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| BraidLetter::new(rng.gen_range(1..n), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn random_knot_braid(rng: &mut impl Rng, max_n: usize, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(1..=max_n);
        let a = if n == 1 { BraidWord::identity(1) } else { random_braid(rng, n, max_len) };
        if is_knot_closure(&a) {
            return a;
        }
    }
}

/// Number of arc colorings of the closure diagram mod `r`, by exhaustion.
fn brute_diagram_colorings(a: &BraidWord, r: u64) -> (u64, u64) {
    let d = closure_diagram(a);
    let mut total = 0;
    let mut pinned = 0;
    let mut x = vec![0u64; d.arc_count];
    loop {
        let ok = d.crossings.iter().all(|c| {
            (2 * x[c.over] + 2 * r - x[c.incoming] - x[c.outgoing]).is_multiple_of(r)
        });
        if ok {
            total += 1;
            if x[0] == 0 {
                pinned += 1;
            }
        }
        let mut k = 0;
        loop {
            if k == x.len() {
                return (total, pinned);
            }
            x[k] += 1;
            if x[k] < r {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Common fixed points of the transports of `a` and `b`, by exhaustion.
fn brute_fixed_points(a: &BraidWord, b: &BraidWord, r: u64) -> Vec<Vec<u64>> {
    let n = a.strands();
    let mut out = vec![];
    let mut x = vec![0u64; n];
    loop {
        if dihedral_transport(a, &x, r).unwrap() == x && dihedral_transport(b, &x, r).unwrap() == x {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            x[k] += 1;
            if x[k] < r {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn fox_and_burau_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..120 {
        let a = random_knot_braid(&mut rng, 4, 8);
        let fox = elementary_ideal_data(&alexander_matrix(&closure_presentation(&a))).unwrap();
        let burau = burau_alexander(&a).unwrap();
        assert_eq!(fox.alexander_poly, burau, "braid {a}");
        assert_eq!(fox.determinant, burau.at_minus_one().abs(), "braid {a}");
    }
}

#[test]
fn diagram_matrix_matches_fox_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..120 {
        let a = random_knot_braid(&mut rng, 4, 8);
        let fox = alexander_matrix(&closure_presentation(&a));
        let diag = coloring_matrix(&closure_diagram(&a));
        let sf = smith_normal_form(&fox.eval_at(-1).unwrap());
        let sd = smith_normal_form(&diag.eval_at(-1).unwrap());
        assert_eq!(sf.torsion(), sd.torsion(), "braid {a}");
        assert_eq!(fox.cols() - sf.rank(), diag.cols() - sd.rank(), "braid {a}");
        assert_eq!(knot_determinant(&fox).unwrap(), knot_determinant(&diag).unwrap());
        // over Λ the two matrices give the same Alexander polynomial
        let pd = minor_gcd(&diag, diag.cols().saturating_sub(1)).unwrap();
        let pf = minor_gcd(&fox, fox.cols().saturating_sub(1)).unwrap();
        if diag.cols() > 1 {
            assert_eq!(pd, pf, "braid {a}");
        }
    }
}

#[test]
fn colorings_agree_across_routes() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let a = random_knot_braid(&mut rng, 4, 7);
        let fox = alexander_matrix(&closure_presentation(&a));
        let diag = coloring_matrix(&closure_diagram(&a));
        let id = BraidWord::identity(a.strands());
        for r in 2..=7 {
            let (total, pinned) = brute_diagram_colorings(&a, r);
            let c_fox = coloring_census(&fox, r).unwrap();
            let c_diag = coloring_census(&diag, r).unwrap();
            let c_tr = surface_coloring_census(&a, &id, r).unwrap();
            for c in [&c_fox, &c_diag, &c_tr] {
                assert_eq!(c.total, BigInt::from(total), "braid {a}, r = {r}");
                assert_eq!(c.condition_o, BigInt::from(pinned), "braid {a}, r = {r}");
            }
            assert_eq!(c_fox.nondegenerate, c_diag.nondegenerate);
            assert_eq!(c_fox.total, &c_fox.condition_o * BigInt::from(r));
        }
    }
}

fn random_commuting_pair(rng: &mut impl Rng) -> (BraidWord, BraidWord) {
    let a = loop {
        let a = random_knot_braid(rng, 4, 8);
        if a.strands() >= 2 {
            break a;
        }
    };
    let k = rng.gen_range(-2..=2);
    let b = full_twist(a.strands()).unwrap().pow(k);
    (a, b)
}

#[test]
fn surface_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let (a, b) = random_commuting_pair(&mut rng);
        let p = torus_covering_presentation(&a, &b).unwrap();
        let fox = alexander_matrix(&p);
        for r in 2..=9 {
            let via_fox = coloring_census(&fox, r).unwrap();
            let via_transport = surface_coloring_census(&a, &b, r).unwrap();
            assert_eq!(via_fox.total, via_transport.total, "({a}; {b}) r = {r}");
            assert_eq!(via_fox.condition_o, via_transport.condition_o);
            assert_eq!(via_fox.nondegenerate, via_transport.nondegenerate);
            if r <= 5 {
                let brute = brute_fixed_points(&a, &b, r).len();
                assert_eq!(via_transport.total, BigInt::from(brute));
            }
        }
    }
}

#[test]
fn surface_determinants_are_odd() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..60 {
        let (a, b) = random_commuting_pair(&mut rng);
        let p = torus_covering_presentation(&a, &b).unwrap();
        let det = presentation_determinant(&p);
        assert!(det.is_odd(), "({a}; {b}) has determinant {det}");
        let p0 = torus_covering_presentation(&a, &BraidWord::identity(a.strands())).unwrap();
        assert_eq!(presentation_determinant(&p0), presentation_determinant(&closure_presentation(&a)));
    }
}

#[test]
fn colorability_implies_divisibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let (a, b) = random_commuting_pair(&mut rng);
        let m = alexander_matrix(&torus_covering_presentation(&a, &b).unwrap());
        let det = knot_determinant(&m).unwrap();
        for p in 2..=15u64 {
            if is_p_colorable(&m, p).unwrap() {
                assert!(det.is_multiple_of(&BigInt::from(p)), "({a}; {b}) p = {p} det = {det}");
            }
        }
    }
}

fn is_power_of(mut x: BigInt, p: u64) -> bool {
    let pb = BigInt::from(p);
    if x.is_zero() {
        return false;
    }
    while x.is_multiple_of(&pb) {
        x /= &pb;
    }
    x.is_one()
}

#[test]
fn condition_o_counts_are_prime_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..40 {
        let (a, b) = random_commuting_pair(&mut rng);
        for p in [3u64, 5, 7, 11, 13] {
            let c = surface_coloring_census(&a, &b, p).unwrap();
            assert!(is_power_of(c.condition_o.clone(), p), "({a}; {b}) p = {p}");
        }
    }
}

#[test]
fn nontrivial_colorings_reduce_to_nondegenerate_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..30 {
        let (a, b) = random_commuting_pair(&mut rng);
        for r in 2..=6 {
            for x in brute_fixed_points(&a, &b, r) {
                let Some((q, y)) = reduce_to_nondegenerate(&x, r) else { continue };
                assert!(q > 1 && r % q == 0);
                assert_eq!(generated_subgroup(&y, q), 1);
                // still a coloring mod q
                assert_eq!(dihedral_transport(&a, &y, q).unwrap(), y);
                assert_eq!(dihedral_transport(&b, &y, q).unwrap(), y);
            }
        }
    }
}

#[test]
fn rep_classes_match_count_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..40 {
        let (a, b) = random_commuting_pair(&mut rng);
        let p = torus_covering_presentation(&a, &b).unwrap();
        let det = presentation_determinant(&p);
        if det > BigInt::from(2000) {
            continue;
        }
        let classes = enumerate_rep_classes(&p, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(BigInt::from(classes.len()), count_irreducible_metabelian(&det).unwrap());
        let mut seen = BTreeSet::new();
        for c in &classes {
            assert!(verify_representation(&p, &c.assignment));
            assert!(is_irreducible(&c.assignment).unwrap());
            assert!(seen.insert(c.coloring.clone()));
            let neg: Vec<u64> = c.coloring.iter().map(|&x| (c.modulus - x) % c.modulus).collect();
            assert!(!seen.contains(&neg) || neg == c.coloring);
        }
    }
}

#[test]
fn transport_fixed_points_match_system() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..30 {
        let (a, b) = random_commuting_pair(&mut rng);
        let sys = fixed_point_system(&a, &b);
        for r in [3u64, 4, 5] {
            let mut listed = enumerate_solutions_mod(&sys, r, 10_000).unwrap();
            listed.sort();
            assert_eq!(listed, brute_fixed_points(&a, &b, r));
            let c = census_of_system(&sys, r, 10_000).unwrap();
            assert_eq!(c.total, BigInt::from(listed.len()));
        }
    }
}
