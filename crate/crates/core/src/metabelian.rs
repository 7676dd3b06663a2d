//! Irreducible metabelian SU(2)-representations, realized exactly in the
//! binary dihedral group of order `4m` (`m` odd).
//!
//! With `ζ = exp(iπ/m)` the group consists of
//! `D(k) = diag(ζ^k, ζ^-k)` and `R(k) = [[0, ζ^k], [−ζ^-k, 0]]`, `k mod 2m`.
//! A representation of a knot group sends every meridian generator to some
//! `R(k)`; conjugation acts on angles as the dihedral quandle,
//! `R(a)·R(b)·R(a)⁻¹ = R(2a − b)`, which is why `m`-colorings lift to
//! representations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::braid::FreeWord;
use crate::error::{Error, Result};
use crate::linalg::enumerate_solutions_mod;
use crate::coloring::pin_base;
use crate::presentation::{fox_matrix_at_minus_one, presentation_determinant, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Diagonal,
    Antidiagonal,
}

/// `D(angle)` or `R(angle)` in the binary dihedral group with parameter `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryDihedralElt {
    m: u64,
    kind: Kind,
    angle: u64,
}

impl BinaryDihedralElt {
    pub fn diagonal(m: u64, angle: i64) -> Self {
        Self::new(m, Kind::Diagonal, angle)
    }

    pub fn antidiagonal(m: u64, angle: i64) -> Self {
        Self::new(m, Kind::Antidiagonal, angle)
    }

    pub fn identity(m: u64) -> Self {
        Self::diagonal(m, 0)
    }

    fn new(m: u64, kind: Kind, angle: i64) -> Self {
        assert!(m % 2 == 1, "binary dihedral parameter must be odd");
        let angle = angle.rem_euclid(2 * m as i64) as u64;
        BinaryDihedralElt { m, kind, angle }
    }

    /// The angle modulus `2m`.
    pub fn modulus(&self) -> u64 {
        2 * self.m
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn angle(&self) -> u64 {
        self.angle
    }

    pub fn is_identity(&self) -> bool {
        self.kind == Kind::Diagonal && self.angle == 0
    }

    pub fn inverse(&self) -> Self {
        let a = self.angle as i64;
        match self.kind {
            Kind::Diagonal => Self::diagonal(self.m, -a),
            // R(k)^2 = −I
            Kind::Antidiagonal => Self::antidiagonal(self.m, a + self.m as i64),
        }
    }
}

impl fmt::Display for BinaryDihedralElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::Diagonal => 'D',
            Kind::Antidiagonal => 'R',
        };
        write!(f, "{k}({})", self.angle)
    }
}

pub fn bd_mul(x: &BinaryDihedralElt, y: &BinaryDihedralElt) -> Result<BinaryDihedralElt> {
    if x.m != y.m {
        return Err(Error::ModulusMismatch(x.modulus(), y.modulus()));
    }
    let m = x.m;
    let (a, b) = (x.angle as i64, y.angle as i64);
    Ok(match (x.kind, y.kind) {
        (Kind::Diagonal, Kind::Diagonal) => BinaryDihedralElt::diagonal(m, a + b),
        (Kind::Diagonal, Kind::Antidiagonal) => BinaryDihedralElt::antidiagonal(m, a + b),
        (Kind::Antidiagonal, Kind::Diagonal) => BinaryDihedralElt::antidiagonal(m, a - b),
        (Kind::Antidiagonal, Kind::Antidiagonal) => BinaryDihedralElt::diagonal(m, a - b + m as i64),
    })
}

/// `(det − 1)/2` for an odd positive determinant.
pub fn count_irreducible_metabelian(det: &BigInt) -> Result<BigInt> {
    if det < &BigInt::one() || det.is_even() {
        return Err(Error::BadDeterminant(det.to_string()));
    }
    Ok((det - 1) / 2)
}

/// `(|Col_p| − p)/(2p)`.
pub fn count_from_colorings(col_p: &BigInt, p: u64) -> Result<BigInt> {
    let pb = BigInt::from(p);
    if p < 2 || !col_p.is_multiple_of(&pb) || col_p < &pb {
        return Err(Error::InvalidArgument(format!("{col_p} is not a positive multiple of {p}")));
    }
    let (q, r) = (col_p - &pb).div_rem(&(2 * &pb));
    if !r.is_zero() {
        return Err(Error::InvalidArgument(format!("({col_p} - {p}) is not divisible by {}", 2 * p)));
    }
    Ok(q)
}

/// One conjugacy class: its condition-O coloring mod `m` and the binary
/// dihedral image of each generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepClass {
    pub modulus: u64,
    pub coloring: Vec<u64>,
    pub assignment: Vec<BinaryDihedralElt>,
}

impl RepClass {
    pub fn angles(&self) -> Vec<u64> {
        self.assignment.iter().map(|e| e.angle()).collect()
    }
}

fn satisfies(p: &Presentation, coloring: &[u64], m: u64) -> bool {
    let a = fox_matrix_at_minus_one(p);
    let mb = BigInt::from(m);
    (0..a.rows()).all(|i| {
        let s: BigInt = (0..a.cols()).map(|j| a.get(i, j) * BigInt::from(coloring[j])).sum();
        s.is_multiple_of(&mb)
    })
}

/// Lifts each color `c` to the even angle `k ≡ c (mod m)` and sends the
/// generator to `R(k)`.
pub fn build_representation(
    p: &Presentation,
    coloring: &[u64],
    m: u64,
) -> Result<Vec<BinaryDihedralElt>> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("modulus {m} must be odd")));
    }
    if coloring.len() != p.generator_count() {
        return Err(Error::RankMismatch { left: p.generator_count(), right: coloring.len() });
    }
    if !satisfies(p, coloring, m) {
        return Err(Error::InvalidColoring(m));
    }
    Ok(coloring
        .iter()
        .map(|&c| {
            let c = c % m;
            let k = if c.is_multiple_of(2) { c } else { c + m };
            BinaryDihedralElt::antidiagonal(m, k as i64)
        })
        .collect())
}

/// Image of a word under a generator assignment.
pub fn evaluate_word(w: &FreeWord, assignment: &[BinaryDihedralElt]) -> Result<BinaryDihedralElt> {
    let m = assignment.first().map_or(1, |e| e.m);
    let mut acc = BinaryDihedralElt::identity(m);
    for l in w.letters() {
        let g = assignment
            .get(l.generator - 1)
            .ok_or(Error::RankMismatch { left: assignment.len(), right: w.rank() })?;
        let g = if l.positive { *g } else { g.inverse() };
        acc = bd_mul(&acc, &g)?;
    }
    Ok(acc)
}

/// Every relator maps to the identity.
pub fn verify_representation(p: &Presentation, assignment: &[BinaryDihedralElt]) -> bool {
    if assignment.len() != p.generator_count() {
        return false;
    }
    p.relators()
        .iter()
        .all(|r| evaluate_word(r, assignment).is_ok_and(|e| e.is_identity()))
}

/// `R(a)` and `R(b)` share an eigenvector iff `a ≡ b (mod m)`.
pub fn is_irreducible(assignment: &[BinaryDihedralElt]) -> Result<bool> {
    if assignment.iter().any(|e| e.kind == Kind::Diagonal) {
        return Err(Error::DiagonalImage);
    }
    let Some(first) = assignment.first() else {
        return Ok(false);
    };
    Ok(assignment.iter().any(|e| e.angle % e.m != first.angle % first.m))
}

/// Classes of irreducible metabelian representations: nonzero condition-O
/// colorings mod `det`, one representative per `{c, −c}` pair.
pub fn enumerate_rep_classes(p: &Presentation, cap: u64) -> Result<Vec<RepClass>> {
    let det = presentation_determinant(p);
    count_irreducible_metabelian(&det)?;
    if det.is_one() {
        return Ok(vec![]);
    }
    let m = det.to_u64().ok_or_else(|| Error::CapExceeded { count: det.to_string(), cap })?;
    let pinned = pin_base(&fox_matrix_at_minus_one(p), 0);
    let solutions = enumerate_solutions_mod(&pinned, m, cap)?;
    let mut classes = Vec::with_capacity(solutions.len() / 2);
    for x in solutions {
        if x.iter().all(|&c| c == 0) {
            continue;
        }
        let neg: Vec<u64> = x.iter().map(|&c| (m - c) % m).collect();
        if x > neg {
            continue;
        }
        let assignment = build_representation(p, &x, m)?;
        classes.push(RepClass { modulus: m, coloring: x, assignment });
    }
    Ok(classes)
}
