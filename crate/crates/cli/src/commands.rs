use kreps_core::coloring::census_of_system;
use kreps_core::presentation::{presentation_determinant, ElementaryIdealData};
use kreps_core::{
    alexander_matrix, braids_commute, burau_alexander, closure_diagram, closure_presentation,
    coloring_census, coloring_matrix, colorability_profile, corollary_family, count_from_colorings,
    count_irreducible_metabelian, elementary_ideal_data, enumerate_rep_classes, full_twist,
    is_irreducible, is_knot_closure, parse_braid, surface_coloring_census,
    torus_covering_presentation, verify_representation, BraidWord, ColoringCensus, Error,
    Presentation, closure_component_count,
};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::report::{ClassEntry, ColoringEntry, Report};
use crate::CliError;

/// Options shared by every pipeline.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Largest modulus in the coloring table; below 2 disables it.
    pub rmax: u64,
    /// Cap on enumerated solutions when listing classes.
    pub enum_cap: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { rmax: 7, enum_cap: kreps_core::DEFAULT_ENUM_CAP }
    }
}

fn require_knot(a: &BraidWord) -> Result<(), CliError> {
    if is_knot_closure(a) {
        Ok(())
    } else {
        Err(Error::NotAKnot(closure_component_count(a)).into())
    }
}

fn census_entry(c: &ColoringCensus) -> ColoringEntry {
    ColoringEntry {
        r: c.modulus,
        total: c.total.to_string(),
        condition_o: c.condition_o.to_string(),
        nondegenerate: c.nondegenerate,
    }
}

/// Fills `rep_count` and `classes`, and checks the classes against the count.
fn add_classes(report: &mut Report, p: &Presentation, det: &BigInt, opts: Options) {
    let count = match count_irreducible_metabelian(det) {
        Ok(c) => c,
        Err(e) => {
            report.check("rep count", false, e.to_string());
            return;
        }
    };
    report.rep_count = Some(count.to_string());
    match enumerate_rep_classes(p, opts.enum_cap) {
        Ok(classes) => {
            let valid = classes.iter().all(|c| {
                verify_representation(p, &c.assignment) && is_irreducible(&c.assignment).unwrap_or(false)
            });
            report.check(
                "classes verified",
                valid,
                format!("{} classes satisfy every relator with non-abelian image", classes.len()),
            );
            report.check(
                "class count",
                BigInt::from(classes.len()) == count,
                format!("{} listed, (det - 1)/2 = {count}", classes.len()),
            );
            report.classes = classes
                .iter()
                .map(|c| ClassEntry { modulus: c.modulus, coloring: c.coloring.clone(), angles: c.angles() })
                .collect();
        }
        Err(e @ Error::CapExceeded { .. }) => report.classes_skipped = Some(e.to_string()),
        Err(e) => report.check("classes verified", false, e.to_string()),
    }
}

/// Invariants of the closure of `braid` on `n` strands.
pub fn cmd_knot(braid: &str, n: usize, opts: Options) -> Result<Report, CliError> {
    let a = parse_braid(braid, n)?;
    require_knot(&a)?;
    let mut report = Report::new("knot", vec![a.to_string()], n);
    let p = closure_presentation(&a);
    let fox = alexander_matrix(&p);
    let ElementaryIdealData { alexander_poly, determinant } = elementary_ideal_data(&fox)?;
    let burau = burau_alexander(&a)?;
    report.check(
        "burau agrees",
        burau == alexander_poly,
        format!("Burau route gives {burau}"),
    );
    report.determinant = Some(determinant.to_string());
    report.alexander_poly = Some(alexander_poly.to_string());
    add_classes(&mut report, &p, &determinant, opts);

    if opts.rmax >= 2 {
        let diagram = coloring_matrix(&closure_diagram(&a));
        let mut agree = true;
        for r in 2..=opts.rmax {
            let c = coloring_census(&fox, r)?;
            agree &= coloring_census(&diagram, r)? == c;
            report.colorings.push(census_entry(&c));
        }
        report.check(
            "diagram colorings agree",
            agree,
            format!("presentation and diagram censuses match for r <= {}", opts.rmax),
        );
    }
    Ok(report)
}

/// Where `b` comes from on the command line.
#[derive(Debug, Clone)]
pub enum SecondBraid {
    Word(String),
    FullTwist(i64),
}

fn second_braid(b: &SecondBraid, n: usize) -> Result<BraidWord, CliError> {
    Ok(match b {
        SecondBraid::Word(text) => parse_braid(text, n)?,
        SecondBraid::FullTwist(k) if n >= 2 => full_twist(n)?.pow(*k),
        SecondBraid::FullTwist(_) => BraidWord::identity(n),
    })
}

/// Invariants of the torus-covering T²-knot with basis braids `a`, `b`.
pub fn cmd_surface(a: &str, b: &SecondBraid, n: usize, opts: Options) -> Result<Report, CliError> {
    let a = parse_braid(a, n)?;
    let b = second_braid(b, n)?;
    surface_report(&a, &b, opts)
}

pub fn surface_report(a: &BraidWord, b: &BraidWord, opts: Options) -> Result<Report, CliError> {
    require_knot(a)?;
    if !braids_commute(a, b)? {
        return Err(Error::NonCommuting.into());
    }
    let n = a.strands();
    let mut report = Report::new("surface", vec![a.to_string(), b.to_string()], n);
    let p = torus_covering_presentation(a, b)?;
    let det = presentation_determinant(&p);
    report.determinant = Some(det.to_string());
    report.check("odd determinant", det.bit(0), format!("determinant {det}"));
    add_classes(&mut report, &p, &det, opts);

    for r in 2..=opts.rmax {
        report.colorings.push(census_entry(&surface_coloring_census(a, b, r)?));
    }
    if let Some(count) = report.rep_count.clone() {
        closure_determinant_check(&mut report, a, b, &count)?;
        single_prime_check(&mut report, a, b, &det, &count)?;
    }
    Ok(report)
}

/// When the surface is `d`-colorable for `d` the closure determinant of `a`,
/// the count must be `(d − 1)/2`.
fn closure_determinant_check(report: &mut Report, a: &BraidWord, b: &BraidWord, count: &str) -> Result<(), CliError> {
    let d = presentation_determinant(&closure_presentation(a));
    let Some(d) = d.to_u64().filter(|&d| d > 1) else {
        return Ok(());
    };
    let census = census_of_system(&kreps_core::coloring::fixed_point_system(a, b), d, kreps_core::DEFAULT_ENUM_CAP);
    if !matches!(census, Ok(ColoringCensus { nondegenerate: true, .. })) {
        return Ok(());
    }
    let expected = count_irreducible_metabelian(&BigInt::from(d))?;
    report.check(
        "closure-determinant count",
        expected.to_string() == count,
        format!("surface is {d}-colorable, (d - 1)/2 = {expected}"),
    );
    Ok(())
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// When exactly one odd prime `p` colors the surface and the condition-O
/// profile up to `4p` only takes the values 1 and `|Col_p^0|`, the count must
/// be `(|Col_p| − p)/(2p)`.
fn single_prime_check(
    report: &mut Report,
    a: &BraidWord,
    b: &BraidWord,
    det: &BigInt,
    count: &str,
) -> Result<(), CliError> {
    let Some(d) = det.to_u64().filter(|&d| d > 1) else {
        return Ok(());
    };
    let primes = prime_factors(d);
    let [p] = primes[..] else {
        return Ok(());
    };
    let census = surface_coloring_census(a, b, p)?;
    if !census.nondegenerate {
        return Ok(());
    }
    let profile = colorability_profile(a, b, 4 * p)?;
    let only_p = profile.iter().all(|(_, c)| c.is_one() || *c == census.condition_o);
    if !only_p {
        return Ok(());
    }
    let expected = count_from_colorings(&census.total, p)?;
    report.check(
        "single-prime count",
        expected.to_string() == count,
        format!("only {p}-colorable, (|Col_p| - p)/(2p) = {expected}"),
    );
    Ok(())
}

/// Parameters of the family `(σ_{s(1)}^{ε_1 p} ⋯, τ^{l·m})`.
#[derive(Debug, Clone)]
pub struct FamilyParams {
    pub n: usize,
    pub p: u64,
    pub m: i64,
    pub signs: Vec<i8>,
    /// 1-based images of the permutation `s`
    pub perm: Vec<usize>,
}

impl FamilyParams {
    /// All signs `+1` and the identity permutation.
    pub fn standard(n: usize, p: u64, m: i64) -> Self {
        FamilyParams { n, p, m, signs: vec![1; n.saturating_sub(1)], perm: (1..n).collect() }
    }
}

/// Runs the surface pipeline on a family member and checks the closed-form
/// counts. The report is returned even when a check fails.
pub fn cmd_family(params: &FamilyParams, opts: Options) -> Result<Report, CliError> {
    let FamilyParams { n, p, m, .. } = *params;
    let (c, b) = corollary_family(n, p, &params.signs, &params.perm, m)?;
    let mut report = surface_report(&c, &b, opts)?;
    report.input.command = "family".into();

    let pb = BigInt::from(p);
    let expected_count: BigInt = (num_traits::pow(pb.clone(), n - 1) - 1) / 2;
    let got = report.rep_count.clone().unwrap_or_default();
    report.check(
        "family count",
        got == expected_count.to_string(),
        format!("rep count {got}, (p^(n-1) - 1)/2 = {expected_count}"),
    );
    let col_p = surface_coloring_census(&c, &b, p)?.total;
    let expected_col = num_traits::pow(pb, n);
    report.check(
        "family colorings",
        col_p == expected_col,
        format!("|Col_{p}| = {col_p}, p^n = {expected_col}"),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(r: &'a Report, name: &str) -> Option<&'a crate::report::Check> {
        r.checks.iter().find(|c| c.name == name)
    }

    #[test]
    fn trefoil_report() {
        let r = cmd_knot("1^3", 2, Options::default()).unwrap();
        assert_eq!(r.determinant.as_deref(), Some("3"));
        assert_eq!(r.alexander_poly.as_deref(), Some("1 - t + t^2"));
        assert_eq!(r.rep_count.as_deref(), Some("1"));
        assert_eq!(r.classes.len(), 1);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn unknot_has_no_classes() {
        let r = cmd_knot("1", 2, Options::default()).unwrap();
        assert_eq!(r.determinant.as_deref(), Some("1"));
        assert_eq!(r.rep_count.as_deref(), Some("0"));
        assert!(r.classes.is_empty());
    }

    #[test]
    fn errors_map_to_kinds() {
        assert!(matches!(cmd_knot("1^2", 2, Options::default()), Err(CliError::Core(Error::NotAKnot(2)))));
        assert!(matches!(cmd_knot("x", 2, Options::default()), Err(CliError::Core(Error::MalformedToken(_)))));
        let b = SecondBraid::Word("2".into());
        assert!(matches!(
            cmd_surface("1 2", &b, 3, Options::default()),
            Err(CliError::Core(Error::NonCommuting))
        ));
    }

    #[test]
    fn surface_with_empty_b_matches_knot() {
        let k = cmd_knot("1^3", 2, Options::default()).unwrap();
        let s = cmd_surface("1^3", &SecondBraid::Word(String::new()), 2, Options::default()).unwrap();
        assert_eq!(k.determinant, s.determinant);
        assert_eq!(k.rep_count, s.rep_count);
    }

    #[test]
    fn surface_examples() {
        let s = cmd_surface("1^3", &SecondBraid::Word("1^6".into()), 2, Options::default()).unwrap();
        assert_eq!(s.determinant.as_deref(), Some("3"));
        assert_eq!(s.rep_count.as_deref(), Some("1"));
        assert!(find(&s, "closure-determinant count").is_some_and(|c| c.passed));
        assert!(find(&s, "single-prime count").is_some_and(|c| c.passed));

        let s = cmd_surface("1^3 2^3", &SecondBraid::FullTwist(2), 3, Options::default()).unwrap();
        assert_eq!(s.determinant.as_deref(), Some("9"));
        assert_eq!(s.rep_count.as_deref(), Some("4"));
        assert!(s.all_passed(), "{s}");
    }

    #[test]
    fn family_reports() {
        for (n, p, m, count) in [(2, 3, 0, "1"), (2, 3, 1, "1"), (2, 5, 1, "2"), (3, 3, 1, "4")] {
            let r = cmd_family(&FamilyParams::standard(n, p, m), Options::default()).unwrap();
            assert_eq!(r.rep_count.as_deref(), Some(count));
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn family_with_signs_and_permutation() {
        let params = FamilyParams { n: 4, p: 3, m: -1, signs: vec![1, -1, 1], perm: vec![2, 3, 1] };
        let r = cmd_family(&params, Options { rmax: 4, ..Options::default() }).unwrap();
        assert_eq!(r.rep_count.as_deref(), Some("13"));
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(45), vec![3, 5]);
        assert_eq!(prime_factors(27), vec![3]);
    }
}
