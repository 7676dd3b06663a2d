//! Integer matrices, Smith normal form, and homogeneous systems mod `r`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of vectors [`enumerate_solutions_mod`] returns.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        IntMatrix { rows, cols, data }
    }

    /// Builds from `i64` rows; an empty row list needs the column count.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: rows.len(), cols: cols.len(), data }
    }

    /// Exact determinant via Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut neg = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                neg = !neg;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if neg { -d } else { d }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k·row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = k * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col[dst] += k·col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = k * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self.data[i * self.cols + j];
            self.data[i * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Smith normal form `P·A·Q = diag(d_1, …, d_rank, 0, …)` with `d_j | d_{j+1}`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub diagonal: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors other than 1, i.e. the torsion part.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut p = IntMatrix::identity(m);
    let mut q = IntMatrix::identity(n);
    let mut factors = Vec::new();

    for t in 0..m.min(n) {
        // minimal nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        p.swap_rows(t, bi);
        d.swap_cols(t, bj);
        q.swap_cols(t, bj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let k = -(d.get(i, t) / d.get(t, t));
                d.add_row(i, t, &k);
                p.add_row(i, t, &k);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let k = -(d.get(t, j) / d.get(t, t));
                d.add_col(j, t, &k);
                q.add_col(j, t, &k);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    let x = d.get(i, t);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let x = d.get(t, j);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                p.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                q.swap_cols(t, best.1);
                continue;
            }
            // the pivot must divide the whole trailing block
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    p.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
        factors.push(d.get(t, t).clone());
    }
    SnfResult { invariant_factors: factors, p, q, diagonal: d }
}

/// gcd of all `k×k` minors, computed as `d_1⋯d_k` (0 past the rank, 1 for `k = 0`).
pub fn determinantal_divisor(a: &IntMatrix, k: usize) -> Result<BigInt> {
    if k > a.rows.min(a.cols) {
        return Err(Error::InvalidArgument(format!(
            "k = {k} exceeds min({}, {})",
            a.rows, a.cols
        )));
    }
    let snf = smith_normal_form(a);
    Ok(determinantal_divisor_from_snf(&snf, k))
}

pub fn determinantal_divisor_from_snf(snf: &SnfResult, k: usize) -> BigInt {
    if k > snf.rank() {
        return BigInt::zero();
    }
    snf.invariant_factors[..k].iter().product()
}

/// `#{x ∈ (ℤ/r)^cols : A·x ≡ 0 (mod r)} = r^(cols − rank)·∏ gcd(d_i, r)`.
pub fn solution_count_mod(a: &IntMatrix, r: u64) -> Result<BigInt> {
    if r < 2 {
        return Err(Error::BadModulus(r.to_string()));
    }
    Ok(solution_count_from_snf(&smith_normal_form(a), a.cols, r))
}

pub fn solution_count_from_snf(snf: &SnfResult, cols: usize, r: u64) -> BigInt {
    let rb = BigInt::from(r);
    let free = num_traits::pow(rb.clone(), cols - snf.rank());
    snf.invariant_factors.iter().fold(free, |acc, d| acc * d.gcd(&rb))
}

/// All solutions of `A·x ≡ 0 (mod r)`, sorted lexicographically.
///
/// Solutions are `Q·x'` where `x'_i` runs over multiples of `r / gcd(d_i, r)`
/// on pivot coordinates and over all residues on free ones.
pub fn enumerate_solutions_mod(a: &IntMatrix, r: u64, cap: u64) -> Result<Vec<Vec<u64>>> {
    if r < 2 {
        return Err(Error::BadModulus(r.to_string()));
    }
    let snf = smith_normal_form(a);
    let count = solution_count_from_snf(&snf, a.cols, r);
    if count > BigInt::from(cap) {
        return Err(Error::CapExceeded { count: count.to_string(), cap });
    }
    let n = a.cols;
    let rb = BigInt::from(r);
    // (step, number of values) per coordinate of x'
    let ranges: Vec<(u64, u64)> = (0..n)
        .map(|i| match snf.invariant_factors.get(i) {
            Some(d) => {
                let g = d.gcd(&rb).to_u64().expect("gcd bounded by r");
                (r / g, g)
            }
            None => (1, r),
        })
        .collect();
    let q: Vec<Vec<u128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| snf.q.get(i, j).mod_floor(&rb).to_u128().expect("reduced mod r"))
                .collect()
        })
        .collect();

    let r128 = r as u128;
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut digits = vec![0u64; n];
    loop {
        let xp: Vec<u128> = (0..n).map(|i| (digits[i] * ranges[i].0) as u128).collect();
        let x: Vec<u64> = (0..n)
            .map(|i| {
                let s = (0..n).fold(0u128, |acc, j| (acc + q[i][j] * xp[j]) % r128);
                s as u64
            })
            .collect();
        out.push(x);
        let mut k = 0;
        loop {
            if k == n {
                out.sort_unstable();
                return Ok(out);
            }
            digits[k] += 1;
            if digits[k] < ranges[k].1 {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&IntMatrix::diagonal(&[2, 3]));
        assert_eq!(s.invariant_factors, big(&[1, 6]));
        let s = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        assert!(s.invariant_factors.is_empty());
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![3]], 1));
        assert_eq!(s.invariant_factors, big(&[3]));
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![-4]], 1));
        assert_eq!(s.invariant_factors, big(&[4]));
    }

    #[test]
    fn snf_reconstructs() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, big(&[2, 6, 12]));
        assert_eq!(s.p.mul(&a).mul(&s.q), s.diagonal);
        assert!(s.p.determinant().abs().is_one());
        assert!(s.q.determinant().abs().is_one());
    }

    #[test]
    fn snf_on_empty_shapes() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(s.rank(), 0);
        assert_eq!(s.q.rows(), 3);
        assert_eq!(solution_count_mod(&IntMatrix::zeros(0, 2), 3).unwrap(), BigInt::from(9));
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(determinantal_divisor(&IntMatrix::diagonal(&[2, 3]), 2).unwrap(), BigInt::from(6));
        assert_eq!(determinantal_divisor(&IntMatrix::diagonal(&[2, 4]), 1).unwrap(), BigInt::from(2));
        assert_eq!(determinantal_divisor(&IntMatrix::diagonal(&[2, 4]), 0).unwrap(), BigInt::from(1));
        assert_eq!(determinantal_divisor(&IntMatrix::diagonal(&[2, 0]), 2).unwrap(), BigInt::zero());
        assert!(determinantal_divisor(&IntMatrix::diagonal(&[2, 4]), 3).is_err());
    }

    #[test]
    fn counting_examples() {
        let three = IntMatrix::from_rows(&[vec![3]], 1);
        assert_eq!(solution_count_mod(&three, 3).unwrap(), BigInt::from(3));
        assert_eq!(solution_count_mod(&IntMatrix::zeros(1, 2), 5).unwrap(), BigInt::from(25));
        assert_eq!(solution_count_mod(&IntMatrix::identity(2), 7).unwrap(), BigInt::from(1));
        assert!(matches!(solution_count_mod(&three, 1), Err(Error::BadModulus(_))));
    }

    #[test]
    fn enumeration_examples() {
        let three = IntMatrix::from_rows(&[vec![3]], 1);
        assert_eq!(enumerate_solutions_mod(&three, 3, 100).unwrap(), vec![vec![0], vec![1], vec![2]]);
        let two = IntMatrix::from_rows(&[vec![2]], 1);
        assert_eq!(enumerate_solutions_mod(&two, 4, 100).unwrap(), vec![vec![0], vec![2]]);
        let a = IntMatrix::from_rows(&[vec![1, -2, 1]], 3);
        let sols = enumerate_solutions_mod(&a, 5, 100).unwrap();
        assert_eq!(sols.len(), 25);
        assert!(sols.contains(&vec![0, 0, 0]));
        assert!(matches!(
            enumerate_solutions_mod(&IntMatrix::zeros(1, 3), 5, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
