//! Exact arithmetic in `Λ = ℤ[t, t⁻¹]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// A Laurent polynomial with arbitrary-precision coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `c·t^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `coeffs[k]·t^(low + k)` summed over `k`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(low + k as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Span `max − min` of exponents; `None` for zero.
    pub fn width(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// `f(t⁻¹)`
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Monomial units `±t^k` are the only units of `Λ`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.abs().is_one())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `t = v`; only `v = ±1` keeps `t⁻¹` integral.
    pub fn eval_at(&self, v: i64) -> Result<BigInt> {
        match v {
            1 => Ok(self.terms.values().sum()),
            -1 => Ok(self
                .terms
                .iter()
                .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
                .sum()),
            _ => Err(Error::BadEvaluationPoint(v)),
        }
    }

    /// `f(-1)`, infallible shorthand.
    pub fn at_minus_one(&self) -> BigInt {
        self.eval_at(-1).expect("-1 is a valid evaluation point")
    }

    /// Canonical representative `±t^k·f` with lowest exponent 0 and positive
    /// lowest coefficient.
    pub fn normalize_unit(&self) -> Result<Self> {
        let low = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-low);
        if shifted.terms[&0].is_negative() {
            Ok(-shifted)
        } else {
            Ok(shifted)
        }
    }

    /// Whether `self` and `other` differ by a unit `±t^k`.
    pub fn associate(&self, other: &LaurentPoly) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Exact quotient `self / divisor` in `Λ`, or `None` if it does not exist.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (a_low, a) = self.to_dense();
        let (b_low, b) = divisor.to_dense();
        let q = dense_div_exact(&a, &b)?;
        Some(LaurentPoly::from_dense(a_low - b_low, &q))
    }

    /// Coefficients of `t^(low..)` as a dense vector, with `low` the minimal
    /// exponent.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (Some(low), Some(high)) = (self.min_exp(), self.max_exp()) else {
            return (0, vec![]);
        };
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - low) as usize] = c.clone();
        }
        (low, v)
    }

    fn from_dense(low: i64, coeffs: &[BigInt]) -> Self {
        LaurentPoly::from_terms(
            coeffs.iter().enumerate().map(|(k, c)| (low + k as i64, c.clone())),
        )
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents: `1 - t + t^2`, `t^-2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn degree(v: &[BigInt]) -> usize {
    v.len() - 1
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|x| x.is_negative()) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

/// Exact division in `ℤ[t]` (ascending dense coefficients).
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(vec![]);
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &a[k + b.len() - 1];
        let (qk, rem) = top.div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        if !qk.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                a[k + i] -= &qk * bi;
            }
        }
        q[k] = qk;
    }
    if a.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

/// Pseudo-remainder `lc(b)^(deg a − deg b + 1)·a mod b`.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = degree(b);
    let lb = b.last().unwrap().clone();
    let mut steps = degree(a) as i64 - db as i64 + 1;
    while !r.is_empty() && r.len() > db {
        let dr = degree(&r);
        let lr = r.last().unwrap().clone();
        r.iter_mut().for_each(|x| *x *= &lb);
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bi;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb, steps as usize);
        r.iter_mut().for_each(|x| *x *= &f);
    }
    r
}

/// gcd in `ℤ[t]` via the subresultant remainder sequence.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return primitive_sign(b);
    }
    if b.is_empty() {
        return primitive_sign(a);
    }
    let c = content(&a).gcd(&content(&b));
    let mut f = primitive_part(&a);
    let mut g = primitive_part(&b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut g_lc = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if degree(&g) == 0 {
            return vec![c];
        }
        let delta = degree(&f) - degree(&g);
        let r = pseudo_remainder(&f, &g);
        if r.is_empty() {
            break;
        }
        if degree(&r) == 0 {
            return vec![c];
        }
        let divisor = &g_lc * num_traits::pow(h.clone(), delta);
        f = std::mem::replace(&mut g, r.iter().map(|x| x / &divisor).collect());
        g_lc = f.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g_lc.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
    }
    primitive_part(&g).into_iter().map(|x| x * &c).collect()
}

fn primitive_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.last().is_some_and(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
    v
}

/// gcd in `Λ`, normalized with [`LaurentPoly::normalize_unit`]; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if f.is_zero() && g.is_zero() {
        return LaurentPoly::zero();
    }
    // t-powers are units, so work with the ℤ[t] parts
    let (_, a) = f.to_dense();
    let (_, b) = g.to_dense();
    let d = dense_gcd(&a, &b);
    LaurentPoly::from_dense(0, &d).normalize_unit().expect("gcd of nonzero input is nonzero")
}

/// A dense rectangular matrix over `Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::InvalidArgument("ragged matrix rows".into()));
            }
            entries.extend(row);
        }
        Ok(LaurentMatrix { rows: r, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &LaurentPoly) {
        let slot = &mut self.entries[i * self.cols + j];
        *slot = &*slot + v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = LaurentMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> LaurentMatrix {
        LaurentMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Entrywise substitution `t = v` for `v = ±1`.
    pub fn eval_at(&self, v: i64) -> Result<IntMatrix> {
        let mut data = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            data.push(e.eval_at(v)?);
        }
        Ok(IntMatrix::from_vec(self.rows, self.cols, data))
    }

    /// Submatrix on the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> LaurentMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        LaurentMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact division.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(LaurentPoly::zero());
                };
                a.swap(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).ok_or_else(|| {
                        Error::InexactDivision("Bareiss step over Λ".into())
                    })?;
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
