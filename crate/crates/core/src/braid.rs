//! Braid words, free-group words and Artin's action of `B_n` on `F_n`.
//!
//! Braid letters are `σ_i^{±1}` with `1 <= i < n`; free-group letters are
//! `t_j^{±1}` with `1 <= j <= n`. Indices are 1-based throughout the public
//! surface, matching the usual notation.
//!
//! The action is fixed by `artin_act(ab, w) = artin_act(a, artin_act(b, w))`
//! together with the generator substitutions
//!
//! ```text
//! σ_i     : t_i ↦ t_i t_{i+1} t_i⁻¹,   t_{i+1} ↦ t_i
//! σ_i⁻¹   : t_i ↦ t_{i+1},             t_{i+1} ↦ t_{i+1}⁻¹ t_i t_{i+1}
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// A single letter `σ_index^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn new(index: usize, positive: bool) -> Self {
        BraidLetter { index, positive }
    }

    pub fn inverse(self) -> Self {
        BraidLetter { index: self.index, positive: !self.positive }
    }

    pub fn sign(self) -> i64 {
        if self.positive { 1 } else { -1 }
    }
}

/// A word in the standard generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: vec![] }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("braid needs at least one strand".into()));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexOutOfRange { index: l.index as i64, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices, `-2` meaning `σ_2⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &s in letters {
            if s == 0 {
                return Err(Error::IndexOutOfRange { index: 0, strands });
            }
            out.push(BraidLetter::new(s.unsigned_abs() as usize, s > 0));
        }
        BraidWord::new(strands, out)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum of the word (the writhe of the closure diagram).
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::RankMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `self^k`; negative `k` powers the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Signed indices, the inverse of [`BraidWord::from_signed`].
    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.sign() * l.index as i64).collect()
    }
}

impl fmt::Display for BraidWord {
    /// Run-length form accepted by [`parse_braid`], e.g. `1^3 -2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let s = if l.positive { "" } else { "-" };
            if j - i > 1 {
                write!(f, "{}{}^{}", s, l.index, j - i)?;
            } else {
                write!(f, "{}{}", s, l.index)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Parses whitespace-separated tokens `±i` or `±i^e` (`e >= 1`).
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => {
                let e: i64 = e.parse().map_err(|_| Error::MalformedToken(token.to_string()))?;
                (b, e)
            }
            None => (token, 1),
        };
        if exp <= 0 {
            return Err(Error::NonPositiveExponent(exp));
        }
        let signed: i64 = base.parse().map_err(|_| Error::MalformedToken(token.to_string()))?;
        if signed == 0 {
            return Err(Error::IndexOutOfRange { index: 0, strands });
        }
        let index = signed.unsigned_abs();
        if index as usize >= strands {
            return Err(Error::IndexOutOfRange { index: signed.abs(), strands });
        }
        let letter = BraidLetter::new(index as usize, signed > 0);
        letters.extend(std::iter::repeat_n(letter, exp as usize));
    }
    BraidWord::new(strands, letters)
}

/// A letter `t_generator^{±1}` of a free group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub generator: usize,
    pub positive: bool,
}

impl FreeLetter {
    pub fn new(generator: usize, positive: bool) -> Self {
        FreeLetter { generator, positive }
    }

    pub fn inverse(self) -> Self {
        FreeLetter { generator: self.generator, positive: !self.positive }
    }

    pub fn sign(self) -> i64 {
        if self.positive { 1 } else { -1 }
    }
}

/// A freely reduced word in `t_1, …, t_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: vec![] }
    }

    pub fn generator(rank: usize, generator: usize) -> Self {
        assert!(generator >= 1 && generator <= rank, "generator out of range");
        FreeWord { rank, letters: vec![FreeLetter::new(generator, true)] }
    }

    /// Builds a word from letters, freely reducing them.
    pub fn new(rank: usize, letters: impl IntoIterator<Item = FreeLetter>) -> Result<Self> {
        let mut w = FreeWord::identity(rank);
        for l in letters {
            if l.generator == 0 || l.generator > rank {
                return Err(Error::IndexOutOfRange { index: l.generator as i64, strands: rank });
            }
            w.push(l);
        }
        Ok(w)
    }

    /// Signed generator indices, `-2` meaning `t_2⁻¹`.
    pub fn from_signed(rank: usize, letters: &[i64]) -> Result<Self> {
        FreeWord::new(
            rank,
            letters.iter().map(|&s| FreeLetter::new(s.unsigned_abs() as usize, s > 0)),
        )
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.sign() * l.generator as i64).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced words are empty exactly when they represent 1.
    pub fn is_identity(&self) -> bool {
        self.is_empty()
    }

    fn push(&mut self, l: FreeLetter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Total exponent sum over all generators.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Exponent sum of a single generator.
    pub fn generator_exponent_sum(&self, generator: usize) -> i64 {
        self.letters.iter().filter(|l| l.generator == generator).map(|l| l.sign()).sum()
    }

    /// Applies the endomorphism `t_j ↦ images[j-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        debug_assert_eq!(images.len(), self.rank);
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = FreeWord::identity(rank);
        for l in &self.letters {
            let img = &images[l.generator - 1];
            if l.positive {
                for &x in &img.letters {
                    out.push(x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    out.push(x.inverse());
                }
            }
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l.positive {
                write!(f, "t{}", l.generator)?;
            } else {
                write!(f, "t{}^-1", l.generator)?;
            }
        }
        Ok(())
    }
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// From a 1-based image list; fails unless it is a bijection.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            image.push(x - 1);
        }
        Ok(Permutation { image })
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    /// Cycles in 1-based notation, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![];
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.image[x];
            }
            out.push(cyc);
        }
        out
    }
}

/// The product of the transpositions `(i i+1)`, one per letter, composed in
/// word order (`perm(ab) = perm(a) ∘ perm(b)`).
pub fn closure_permutation(a: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(a.strands);
    for l in &a.letters {
        let mut t = Permutation::identity(a.strands);
        t.image.swap(l.index - 1, l.index);
        p = p.compose(&t);
    }
    p
}

pub fn closure_component_count(a: &BraidWord) -> usize {
    closure_permutation(a).cycles().len()
}

pub fn is_knot_closure(a: &BraidWord) -> bool {
    closure_component_count(a) == 1
}

/// Images `A^a(t_1), …, A^a(t_n)`.
pub fn artin_images(a: &BraidWord) -> Vec<FreeWord> {
    let n = a.strands;
    let mut img: Vec<FreeWord> = (1..=n).map(|j| FreeWord::generator(n, j)).collect();
    // A^{wσ} = A^w ∘ A^σ, so each new letter rewrites the current images
    for l in &a.letters {
        let i = l.index - 1;
        let (x, y) = (img[i].clone(), img[i + 1].clone());
        if l.positive {
            img[i] = x.mul(&y).mul(&x.inverse());
            img[i + 1] = x;
        } else {
            img[i + 1] = y.inverse().mul(&x).mul(&y);
            img[i] = y;
        }
    }
    img
}

/// Artin's automorphism of `a` applied to `w`.
pub fn artin_act(a: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    if w.rank != a.strands {
        return Err(Error::RankMismatch { left: a.strands, right: w.rank });
    }
    Ok(w.substitute(&artin_images(a)))
}

/// Decides `ab = ba` through Artin's faithful representation.
pub fn braids_commute(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    let ab = a.concat(b)?;
    let ba = b.concat(a)?;
    Ok(artin_images(&ab) == artin_images(&ba))
}

/// `(σ_1 σ_2 … σ_{n-1})^n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let row: Vec<BraidLetter> = (1..n).map(|i| BraidLetter::new(i, true)).collect();
    Ok(BraidWord { strands: n, letters: row }.pow(n as i64))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The pair `(c, τ^{l·m})` with `c = σ_{s(1)}^{ε_1 p} ⋯ σ_{s(n-1)}^{ε_{n-1} p}`,
/// where `l = 2` for odd `n` and `l = p` for even `n`.
///
/// `perm` is the 1-based image list of `s`.
pub fn corollary_family(
    n: usize,
    p: u64,
    signs: &[i8],
    perm: &[usize],
    m: i64,
) -> Result<(BraidWord, BraidWord)> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} is not an odd prime")));
    }
    if signs.len() != n - 1 || perm.len() != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "need {} signs and a permutation of 1..{}",
            n - 1,
            n - 1
        )));
    }
    if signs.iter().any(|&e| e != 1 && e != -1) {
        return Err(Error::InvalidArgument("signs must be +1 or -1".into()));
    }
    let s = Permutation::from_images(perm)?;
    let mut letters = Vec::with_capacity((n - 1) * p as usize);
    for (k, &e) in signs.iter().enumerate() {
        let letter = BraidLetter::new(s.apply(k + 1), e > 0);
        letters.extend(std::iter::repeat_n(letter, p as usize));
    }
    let c = BraidWord::new(n, letters)?;
    let l = if n % 2 == 1 { 2 } else { p as i64 };
    let b = full_twist(n)?.pow(l * m);
    Ok((c, b))
}
