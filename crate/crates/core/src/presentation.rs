//! Group presentations of braid closures and torus-covering T²-knots, Fox
//! calculus, closure diagrams, and the Burau cross-check.
//!
//! Both presentations use the standard generators `t_1, …, t_n` of the free
//! group of the punctured disk. The closure group of `a` is
//! `⟨t_i | t_i = A^a(t_i)⟩`; the torus-covering T²-knot with basis braids
//! `(a, b)` adds the monodromy relations `t_i = A^b(t_i)` of the second
//! circle factor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid::{artin_images, braids_commute, closure_component_count, BraidWord, FreeWord};
use crate::error::{Error, Result};
use crate::laurent::{poly_gcd, LaurentMatrix, LaurentPoly};
use crate::linalg::{determinantal_divisor_from_snf, smith_normal_form, IntMatrix};

/// A finite presentation with an abelianization `x_j ↦ t^{weights[j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<FreeWord>,
    weights: Vec<i64>,
}

impl Presentation {
    /// Validates ranks and weighted exponent sums; identity relators are dropped.
    pub fn new(generator_count: usize, relators: Vec<FreeWord>, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != generator_count {
            return Err(Error::RankMismatch { left: generator_count, right: weights.len() });
        }
        let mut kept = Vec::with_capacity(relators.len());
        for r in relators {
            if r.rank() != generator_count {
                return Err(Error::RankMismatch { left: generator_count, right: r.rank() });
            }
            let weighted: i64 = r.letters().iter().map(|l| l.sign() * weights[l.generator - 1]).sum();
            if weighted != 0 {
                return Err(Error::InvalidArgument(format!(
                    "relator {r} has weighted exponent sum {weighted}"
                )));
            }
            if !r.is_identity() {
                kept.push(r);
            }
        }
        Ok(Presentation { generator_count, relators: kept, weights })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}

fn monodromy_relators(a: &BraidWord) -> Vec<FreeWord> {
    let n = a.strands();
    artin_images(a)
        .into_iter()
        .enumerate()
        .map(|(i, img)| FreeWord::generator(n, i + 1).mul(&img.inverse()))
        .collect()
}

/// `⟨t_1, …, t_n | t_i·A^a(t_i)⁻¹⟩`, all weights `t`.
pub fn closure_presentation(a: &BraidWord) -> Presentation {
    let n = a.strands();
    Presentation::new(n, monodromy_relators(a), vec![1; n])
        .expect("Artin images preserve exponent sums")
}

/// Presentation of the knot group of the torus-covering T²-knot with basis
/// braids `(a, b)`: relators `t_i·A^a(t_i)⁻¹` and `t_i·A^b(t_i)⁻¹`.
pub fn torus_covering_presentation(a: &BraidWord, b: &BraidWord) -> Result<Presentation> {
    if !braids_commute(a, b)? {
        return Err(Error::NonCommuting);
    }
    let components = closure_component_count(a);
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let n = a.strands();
    let mut relators = monodromy_relators(a);
    relators.extend(monodromy_relators(b));
    Presentation::new(n, relators, vec![1; n])
}

/// `ψφ(∂r/∂x_j)` for 1-based `j`.
pub fn fox_derivative_abelianized(r: &FreeWord, j: usize, weights: &[i64]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut prefix = 0i64;
    for l in r.letters() {
        let w = weights[l.generator - 1];
        if l.positive {
            if l.generator == j {
                out.add_term(prefix, BigInt::one());
            }
            prefix += w;
        } else {
            prefix -= w;
            if l.generator == j {
                out.add_term(prefix, -BigInt::one());
            }
        }
    }
    out
}

/// Rows are relators, columns generators.
pub fn alexander_matrix(p: &Presentation) -> LaurentMatrix {
    let m = p.generator_count;
    let mut out = LaurentMatrix::zeros(p.relators.len(), m);
    for (i, r) in p.relators.iter().enumerate() {
        for j in 0..m {
            out.set(i, j, fox_derivative_abelianized(r, j + 1, &p.weights));
        }
    }
    out
}

/// One crossing of a closure diagram; arcs are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub over: usize,
    pub incoming: usize,
    pub outgoing: usize,
    pub sign: i8,
}

/// The closed-braid diagram of a braid word, arcs running between
/// undercrossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureDiagram {
    pub arc_count: usize,
    pub crossings: Vec<Crossing>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Builds the diagram of the closure; a positive `σ_i` has the strand at
/// position `i` passing over to position `i + 1`.
pub fn closure_diagram(a: &BraidWord) -> ClosureDiagram {
    let n = a.strands();
    let mut current: Vec<usize> = (0..n).collect();
    let mut next_id = n;
    let mut raw = Vec::with_capacity(a.len());
    for l in a.letters() {
        let (i, k) = (l.index - 1, l.index);
        let fresh = next_id;
        next_id += 1;
        let (over, incoming) = if l.positive {
            let c = (current[i], current[k]);
            current[k] = c.0;
            current[i] = fresh;
            c
        } else {
            let c = (current[k], current[i]);
            current[i] = c.0;
            current[k] = fresh;
            c
        };
        raw.push(Crossing { over, incoming, outgoing: fresh, sign: if l.positive { 1 } else { -1 } });
    }
    let mut parent: Vec<usize> = (0..next_id).collect();
    for (top, &bottom) in current.iter().enumerate() {
        let (x, y) = (find(&mut parent, top), find(&mut parent, bottom));
        parent[x] = y;
    }
    let mut label = vec![usize::MAX; next_id];
    let mut arc_count = 0;
    let mut relabel = |x: usize, parent: &mut [usize]| {
        let root = find(parent, x);
        if label[root] == usize::MAX {
            label[root] = arc_count;
            arc_count += 1;
        }
        label[root]
    };
    let mut crossings = Vec::with_capacity(raw.len());
    for c in &raw {
        crossings.push(Crossing {
            over: relabel(c.over, &mut parent),
            incoming: relabel(c.incoming, &mut parent),
            outgoing: relabel(c.outgoing, &mut parent),
            sign: c.sign,
        });
    }
    // components without undercrossings still carry one arc each
    for x in 0..n {
        relabel(x, &mut parent);
    }
    ClosureDiagram { arc_count, crossings }
}

/// One row `t·x_i + (1−t)·x_j − x_k` per crossing, where `j` is the over-arc
/// and `(i, k)` are the under-arcs ordered along the over-arc's orientation:
/// `(incoming, outgoing)` for positive crossings, swapped for negative ones.
/// Coinciding indices accumulate.
pub fn coloring_matrix(d: &ClosureDiagram) -> LaurentMatrix {
    let t = LaurentPoly::t();
    let one_minus_t = &LaurentPoly::one() - &t;
    let minus_one = LaurentPoly::constant(-1);
    let mut m = LaurentMatrix::zeros(d.crossings.len(), d.arc_count);
    for (row, c) in d.crossings.iter().enumerate() {
        let (i, k) = if c.sign > 0 { (c.incoming, c.outgoing) } else { (c.outgoing, c.incoming) };
        m.add_to(row, i, &t);
        m.add_to(row, c.over, &one_minus_t);
        m.add_to(row, k, &minus_one);
    }
    m
}

fn burau_generator(n: usize, index: usize, positive: bool) -> LaurentMatrix {
    let size = n - 1;
    let mut m = LaurentMatrix::identity(size);
    let t = LaurentPoly::t();
    let ti = LaurentPoly::monomial(1, -1);
    let one = LaurentPoly::one();
    let i = index - 1;
    // diagonal entry, then the entries above and below it in the same column
    let (diag, above, below) = if positive {
        (-&t, t.clone(), one.clone())
    } else {
        (-&ti, one.clone(), ti.clone())
    };
    m.set(i, i, diag);
    if i > 0 {
        m.set(i - 1, i, above);
    }
    if i + 1 < size {
        m.set(i + 1, i, below);
    }
    m
}

/// Reduced Burau matrix of `a`, `(n−1)×(n−1)` over `Λ`, multiplied in word order.
pub fn reduced_burau(a: &BraidWord) -> LaurentMatrix {
    let n = a.strands();
    let mut m = LaurentMatrix::identity(n.saturating_sub(1));
    for l in a.letters() {
        m = m.mul(&burau_generator(n, l.index, l.positive));
    }
    m
}

/// `Δ(t) = det(I − B̄(a))·(1−t)/(1−tⁿ)`, normalized.
pub fn burau_alexander(a: &BraidWord) -> Result<LaurentPoly> {
    let components = closure_component_count(a);
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let n = a.strands();
    let b = reduced_burau(a);
    let size = n - 1;
    let mut i_minus_b = LaurentMatrix::identity(size);
    for r in 0..size {
        for c in 0..size {
            i_minus_b.add_to(r, c, &-b.get(r, c));
        }
    }
    let det = i_minus_b.determinant()?;
    let num = &det * &LaurentPoly::from_coeffs(0, &[1, -1]);
    let den = &LaurentPoly::one() - &LaurentPoly::monomial(1, n as i64);
    let delta = num
        .div_exact(&den)
        .ok_or_else(|| Error::InexactDivision(format!("Burau quotient for {a}")))?;
    delta.normalize_unit()
}

/// Alexander polynomial (gcd of the `(m−1)`-minors) and knot determinant
/// (the `(m−1)`-th determinantal divisor at `t = −1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryIdealData {
    pub alexander_poly: LaurentPoly,
    pub determinant: BigInt,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// gcd over `Λ` of all `k×k` minors, 0 when there are none or all vanish.
pub fn minor_gcd(m: &LaurentMatrix, k: usize) -> Result<LaurentPoly> {
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    // zero and repeated rows do not change the ideal of minors
    let mut rows: Vec<usize> = vec![];
    for i in 0..m.rows() {
        let r = m.row(i);
        if r.iter().all(|x| x.is_zero()) || rows.iter().any(|&j| m.row(j) == r) {
            continue;
        }
        rows.push(i);
    }
    if rows.len() < k || m.cols() < k {
        return Ok(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::zero();
    let col_sets = combinations(m.cols(), k);
    for rs in combinations(rows.len(), k) {
        let rsel: Vec<usize> = rs.iter().map(|&x| rows[x]).collect();
        for cs in &col_sets {
            let minor = m.submatrix(&rsel, cs).determinant()?;
            if minor.is_zero() {
                continue;
            }
            acc = poly_gcd(&acc, &minor);
            if acc.is_one() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

pub fn elementary_ideal_data(m: &LaurentMatrix) -> Result<ElementaryIdealData> {
    let cols = m.cols();
    if cols == 0 {
        return Err(Error::InvalidArgument("matrix has no columns".into()));
    }
    if cols == 1 {
        return Ok(ElementaryIdealData { alexander_poly: LaurentPoly::one(), determinant: BigInt::one() });
    }
    let alexander_poly = minor_gcd(m, cols - 1)?;
    Ok(ElementaryIdealData { alexander_poly, determinant: knot_determinant(m)? })
}

/// `(m−1)`-th determinantal divisor of the matrix at `t = −1`.
pub fn knot_determinant(m: &LaurentMatrix) -> Result<BigInt> {
    let cols = m.cols();
    if cols <= 1 {
        return Ok(BigInt::one());
    }
    if m.rows() < cols - 1 {
        return Ok(BigInt::zero());
    }
    let snf = smith_normal_form(&m.eval_at(-1)?);
    Ok(determinantal_divisor_from_snf(&snf, cols - 1))
}

/// The integer matrix `A(−1)` of a presentation.
pub fn fox_matrix_at_minus_one(p: &Presentation) -> IntMatrix {
    alexander_matrix(p).eval_at(-1).expect("-1 is a valid evaluation point")
}

/// Knot determinant of a presentation; zero means infinite.
pub fn presentation_determinant(p: &Presentation) -> BigInt {
    knot_determinant(&alexander_matrix(p)).expect("-1 is a valid evaluation point")
}

/// Whether the determinant is an odd positive integer (the surface parity guard).
pub fn is_odd_determinant(d: &BigInt) -> bool {
    !d.is_zero() && d.bit(0)
}
