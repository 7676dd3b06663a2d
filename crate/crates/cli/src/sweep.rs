//! Randomized cross-checks between independent routes to the same invariant.

use kreps_core::linalg::{determinantal_divisor_from_snf, solution_count_from_snf};
use kreps_core::presentation::presentation_determinant;
use kreps_core::{
    alexander_matrix, burau_alexander, closure_diagram, closure_presentation, coloring_census,
    coloring_matrix, elementary_ideal_data, enumerate_solutions_mod, full_twist, is_knot_closure,
    smith_normal_form, surface_coloring_census, torus_covering_presentation, BraidLetter, BraidWord,
    ClosureDiagram, IntMatrix, SnfResult,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::Report;

/// Bounds of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_strands: usize,
    pub max_len: usize,
    /// largest modulus for coloring censuses
    pub census_rmax: u64,
    /// largest modulus for the linear-algebra counts
    pub linalg_rmax: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seed: 0, trials: 100, max_strands: 4, max_len: 8, census_rmax: 7, linalg_rmax: 12 }
    }
}

/// A check that failed on one instance, already minimized where possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: usize,
    pub check: &'static str,
    pub instance: String,
}

/// Per-check tallies of a finished sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub braids: usize,
    pub matrices: usize,
    pub surfaces: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn count(&self, check: &str) -> usize {
        self.mismatches.iter().filter(|m| m.check == check).count()
    }

    pub fn into_report(self, cfg: &SweepConfig) -> Report {
        let mut report = Report::new("verify", vec![], cfg.max_strands);
        let detail = |what: &str, n: usize| format!("{n} {what}");
        for name in BRAID_CHECKS {
            report.check(name, self.count(name) == 0, detail("braids", self.braids));
        }
        report.check(MATRIX_CHECK, self.count(MATRIX_CHECK) == 0, detail("matrices", self.matrices));
        report.check(PARITY_CHECK, self.count(PARITY_CHECK) == 0, detail("surfaces", self.surfaces));
        for m in &self.mismatches {
            report.check(m.check, false, format!("trial {}: {}", m.trial, m.instance));
        }
        report
    }
}

const BURAU_CHECK: &str = "burau vs fox";
const DIAGRAM_CHECK: &str = "diagram vs fox divisors";
const CENSUS_CHECK: &str = "coloring censuses";
const MATRIX_CHECK: &str = "smith form vs brute force";
const PARITY_CHECK: &str = "surface parity";
type BraidCheck = fn(&BraidWord, &SweepConfig) -> bool;

const BRAID_CHECKS: [&str; 3] = [BURAU_CHECK, DIAGRAM_CHECK, CENSUS_CHECK];

/// Runs `cfg.trials` independent instances in parallel. Instance `i` draws
/// from its own stream, so the outcome does not depend on scheduling.
pub fn run_sweep(cfg: &SweepConfig) -> SweepOutcome {
    let per_trial: Vec<Vec<Mismatch>> =
        (0..cfg.trials).into_par_iter().map(|i| run_trial(cfg, i)).collect();
    SweepOutcome {
        braids: cfg.trials,
        matrices: cfg.trials,
        surfaces: cfg.trials,
        mismatches: per_trial.into_iter().flatten().collect(),
    }
}

pub fn verify(cfg: &SweepConfig) -> Report {
    run_sweep(cfg).into_report(cfg)
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn run_trial(cfg: &SweepConfig, trial: usize) -> Vec<Mismatch> {
    let mut rng = trial_rng(cfg.seed, trial);
    let mut out = vec![];
    let a = random_knot_braid(&mut rng, cfg.max_strands, cfg.max_len);
    let braid_checks: [(&'static str, BraidCheck); 3] = [
        (BURAU_CHECK, burau_matches_fox),
        (DIAGRAM_CHECK, diagram_matches_fox),
        (CENSUS_CHECK, censuses_agree),
    ];
    for (name, check) in braid_checks {
        if !check(&a, cfg) {
            let small = minimize(&a, |w| !check(w, cfg));
            out.push(Mismatch { trial, check: name, instance: format!("{small} (n = {})", small.strands()) });
        }
    }
    let m = random_matrix(&mut rng, 4, 9);
    if !snf_matches_brute_force(&m, cfg.linalg_rmax) {
        out.push(Mismatch { trial, check: MATRIX_CHECK, instance: format!("{:?}", matrix_rows(&m)) });
    }
    let b_power = rng.gen_range(-2..=2);
    let a2 = loop {
        let a2 = random_knot_braid(&mut rng, cfg.max_strands, cfg.max_len);
        if a2.strands() >= 2 {
            break a2;
        }
    };
    let b = full_twist(a2.strands()).expect("at least 2 strands").pow(b_power);
    if !surface_is_odd(&a2, &b) {
        out.push(Mismatch { trial, check: PARITY_CHECK, instance: format!("({a2}; {b}) n = {}", a2.strands()) });
    }
    out
}

pub fn random_braid(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| BraidLetter::new(rng.gen_range(1..n), rng.gen_bool(0.5))).collect();
    BraidWord::new(n, letters).expect("indices are in range")
}

/// A random braid on at most `max_n` strands whose closure is a knot.
pub fn random_knot_braid(rng: &mut impl Rng, max_n: usize, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(1..=max_n.max(1));
        let a = if n == 1 { BraidWord::identity(1) } else { random_braid(rng, n, max_len) };
        if is_knot_closure(&a) {
            return a;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let data: Vec<Vec<i64>> =
        (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::from_rows(&data, cols)
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

/// Greedily drops one or two letters at a time while the failure persists and
/// the closure stays a knot. Pairs matter: a single deletion changes the
/// parity of the permutation.
fn minimize(a: &BraidWord, fails: impl Fn(&BraidWord) -> bool) -> BraidWord {
    let mut cur = a.clone();
    loop {
        let len = cur.len();
        let drops = (0..len).map(|i| vec![i]).chain((0..len).flat_map(|i| (i + 1..len).map(move |j| vec![i, j])));
        let smaller = drops
            .map(|drop| {
                let letters = cur.letters().iter().enumerate().filter(|(k, _)| !drop.contains(k)).map(|(_, &l)| l);
                BraidWord::new(cur.strands(), letters.collect()).expect("same strands")
            })
            .find(|w| is_knot_closure(w) && fails(w));
        match smaller {
            Some(w) => cur = w,
            None => return cur,
        }
    }
}

pub fn burau_matches_fox(a: &BraidWord, _: &SweepConfig) -> bool {
    let Ok(fox) = elementary_ideal_data(&alexander_matrix(&closure_presentation(a))) else {
        return false;
    };
    burau_alexander(a).is_ok_and(|b| b == fox.alexander_poly && b.at_minus_one().abs() == fox.determinant)
}

/// `E_k = d_{cols−k}`, extended by 1 below zero.
fn elementary_divisor(snf: &SnfResult, cols: usize, k: usize) -> BigInt {
    if k >= cols {
        BigInt::one()
    } else {
        determinantal_divisor_from_snf(snf, cols - k)
    }
}

/// The diagram and Fox matrices at `t = −1` present the same module, so their
/// elementary divisors agree in every codimension.
pub fn diagram_matches_fox(a: &BraidWord, _: &SweepConfig) -> bool {
    let fox = alexander_matrix(&closure_presentation(a)).eval_at(-1).expect("valid point");
    let diag = coloring_matrix(&closure_diagram(a)).eval_at(-1).expect("valid point");
    let (sf, sd) = (smith_normal_form(&fox), smith_normal_form(&diag));
    (0..=fox.cols().max(diag.cols()))
        .all(|k| elementary_divisor(&sf, fox.cols(), k) == elementary_divisor(&sd, diag.cols(), k))
}

/// Diagram brute force, Fox matrix, diagram matrix and transport agree for
/// every `r ≤ census_rmax`.
pub fn censuses_agree(a: &BraidWord, cfg: &SweepConfig) -> bool {
    let fox = alexander_matrix(&closure_presentation(a));
    let diagram = closure_diagram(a);
    let dm = coloring_matrix(&diagram);
    let id = BraidWord::identity(a.strands());
    (2..=cfg.census_rmax).all(|r| {
        let (total, pinned) = count_diagram_colorings(&diagram, r);
        let (total, pinned) = (BigInt::from(total), BigInt::from(pinned));
        [coloring_census(&fox, r), coloring_census(&dm, r), surface_coloring_census(a, &id, r)]
            .into_iter()
            .all(|c| c.is_ok_and(|c| c.total == total && c.condition_o == pinned))
    })
}

/// Arc colorings of a diagram mod `r` by backtracking over arcs, testing each
/// crossing once all three of its arcs are colored. Returns the total and the
/// number with arc 0 colored 0.
pub fn count_diagram_colorings(d: &ClosureDiagram, r: u64) -> (u64, u64) {
    let arcs = d.arc_count;
    // crossings become checkable once their largest arc is assigned
    let mut ready: Vec<Vec<usize>> = vec![vec![]; arcs];
    for (k, c) in d.crossings.iter().enumerate() {
        ready[c.over.max(c.incoming).max(c.outgoing)].push(k);
    }
    let mut colors = vec![0u64; arcs];
    let mut counts = (0, 0);
    fn go(d: &ClosureDiagram, ready: &[Vec<usize>], r: u64, i: usize, colors: &mut [u64], counts: &mut (u64, u64)) {
        if i == colors.len() {
            counts.0 += 1;
            if colors.first().is_none_or(|&c| c == 0) {
                counts.1 += 1;
            }
            return;
        }
        for x in 0..r {
            colors[i] = x;
            let ok = ready[i].iter().all(|&k| {
                let c = &d.crossings[k];
                (2 * colors[c.over] + 2 * r - colors[c.incoming] - colors[c.outgoing]).is_multiple_of(r)
            });
            if ok {
                go(d, ready, r, i + 1, colors, counts);
            }
        }
    }
    go(d, &ready, r, 0, &mut colors, &mut counts);
    counts
}

fn minors_gcd_brute(m: &IntMatrix, k: usize) -> BigInt {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
            .collect()
    }
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            g = g.gcd(&m.submatrix(&rs, &cs).determinant());
        }
    }
    g
}

fn solutions_brute(m: &IntMatrix, r: u64) -> Vec<Vec<u64>> {
    let n = m.cols();
    let total = r.pow(n as u32);
    let rb = BigInt::from(r);
    (0..total)
        .map(|mut code| {
            let mut x = vec![0u64; n];
            for slot in x.iter_mut().rev() {
                *slot = code % r;
                code /= r;
            }
            x
        })
        .filter(|x| {
            (0..m.rows()).all(|i| {
                let s: BigInt = m.row(i).iter().zip(x).map(|(a, &b)| a * BigInt::from(b)).sum();
                s.is_multiple_of(&rb)
            })
        })
        .collect()
}

/// Smith form reconstruction, divisibility, minor gcds and solution counts
/// against exhaustive search.
pub fn snf_matches_brute_force(m: &IntMatrix, rmax: u64) -> bool {
    let snf = smith_normal_form(m);
    if snf.p.mul(m).mul(&snf.q) != snf.diagonal {
        return false;
    }
    let d = &snf.invariant_factors;
    if d.iter().any(|x| !x.is_positive()) || d.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
        return false;
    }
    if (0..=m.rows().min(m.cols())).any(|k| determinantal_divisor_from_snf(&snf, k) != minors_gcd_brute(m, k)) {
        return false;
    }
    (2..=rmax).all(|r| {
        let brute = solutions_brute(m, r);
        solution_count_from_snf(&snf, m.cols(), r) == BigInt::from(brute.len())
            && enumerate_solutions_mod(m, r, u64::MAX).is_ok_and(|e| e == brute)
    })
}

pub fn surface_is_odd(a: &BraidWord, b: &BraidWord) -> bool {
    torus_covering_presentation(a, b).is_ok_and(|p| presentation_determinant(&p).bit(0))
}
