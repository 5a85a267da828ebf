//! Named cross-check suites over bounded parameter grids.
//!
//! Each suite produces one [`CaseResult`] per parameter cell; a suite passes
//! when no case fails. Skipped cases are those outside a formula's domain.

use crate::closed_forms::{
    corollary_closed_form, corollary_recurrence_residual, corollary_sum, fixed_count, hyp_chain,
    lemma5_rhs, lemma6_rhs, macmahon_count, p_eval_formula, p_reflection_sign, proportion,
};
use crate::error::{Error, Result};
use crate::exact_math::{rat, rat_int, sign_power, to_rational};
use crate::hexagon::{
    axis_positions, build_region, normalize, AxisIndex, HexagonSpec, RegionKind, RegionLabel,
    TheoremParams,
};
use crate::lgv::{
    check_column_relation, d_determinant, determinant, extract_p_polynomial, matrix_c, matrix_s,
};
use crate::oracle::{Enumerator, DEFAULT_CELL_LIMIT};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    OracleVsTheorems,
    Lemma5,
    Lemma6,
    Factorization,
    Symmetries,
    ColumnRelation,
    PPolynomial,
    Corollary,
    HypChain,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::OracleVsTheorems,
        Suite::Lemma5,
        Suite::Lemma6,
        Suite::Factorization,
        Suite::Symmetries,
        Suite::ColumnRelation,
        Suite::PPolynomial,
        Suite::Corollary,
        Suite::HypChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleVsTheorems => "oracle-vs-theorems",
            Suite::Lemma5 => "lemma5",
            Suite::Lemma6 => "lemma6",
            Suite::Factorization => "factorization",
            Suite::Symmetries => "symmetries",
            Suite::ColumnRelation => "column-relation",
            Suite::PPolynomial => "p-polynomial",
            Suite::Corollary => "corollary",
            Suite::HypChain => "hyp-chain",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Parse(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Grid bounds; `None` selects the suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: Option<u32>,
    pub max_m: Option<u32>,
    pub max_a: Option<u32>,
    pub max_cells: Option<usize>,
}

impl Bounds {
    fn n(&self, default: u32) -> u32 {
        self.max_n.unwrap_or(default)
    }

    fn m(&self, default: u32) -> u32 {
        self.max_m.unwrap_or(default)
    }

    fn a(&self, default: u32) -> u32 {
        self.max_a.unwrap_or(default)
    }

    fn enumerator(&self) -> Enumerator {
        Enumerator::with_limit(self.max_cells.unwrap_or(DEFAULT_CELL_LIMIT))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub outcome: Outcome,
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.label),
            Outcome::Fail(why) => write!(f, "FAIL {}: {why}", self.label),
            Outcome::Skip(why) => write!(f, "SKIP {}: {why}", self.label),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.cases.iter().filter(|c| pred(&c.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| *o == Outcome::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail(_)))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skip(_)))
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn summary(&self) -> String {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        let mut s = format!("{}: {verdict}, {} cases", self.suite, self.passed());
        if self.failed() > 0 {
            s += &format!(", {} failed", self.failed());
        }
        if self.skipped() > 0 {
            s += &format!(", {} skipped", self.skipped());
        }
        s
    }
}

struct Recorder<'a> {
    cases: Vec<CaseResult>,
    log: &'a mut dyn FnMut(&CaseResult),
}

impl Recorder<'_> {
    fn push(&mut self, label: String, outcome: Outcome) {
        let case = CaseResult { label, outcome };
        (self.log)(&case);
        self.cases.push(case);
    }

    /// Records pass/fail of `check`; library errors count as failures.
    fn check(&mut self, label: String, check: impl FnOnce() -> Result<Option<String>>) {
        let outcome = match check() {
            Ok(None) => Outcome::Pass,
            Ok(Some(why)) => Outcome::Fail(why),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        self.push(label, outcome);
    }
}

fn mismatch<T: fmt::Display + PartialEq>(what: &str, left: T, right: T) -> Option<String> {
    (left != right).then(|| format!("{what}: {left} != {right}"))
}

fn ax(l: u32, n: u32) -> AxisIndex {
    AxisIndex::within(l, n).expect("l enumerated within 1..=N")
}

/// Run `suite`, passing each case to `log` as soon as it is decided.
pub fn run_suite(suite: Suite, bounds: &Bounds, log: &mut dyn FnMut(&CaseResult)) -> SuiteReport {
    let mut rec = Recorder {
        cases: Vec::new(),
        log,
    };
    match suite {
        Suite::OracleVsTheorems => oracle_vs_theorems(bounds, &mut rec),
        Suite::Lemma5 => lemma5(bounds, &mut rec),
        Suite::Lemma6 => lemma6(bounds, &mut rec),
        Suite::Factorization => factorization(bounds, &mut rec),
        Suite::Symmetries => symmetries(bounds, &mut rec),
        Suite::ColumnRelation => column_relation(bounds, &mut rec),
        Suite::PPolynomial => p_polynomial(bounds, &mut rec),
        Suite::Corollary => corollary(bounds, &mut rec),
        Suite::HypChain => hypchain(bounds, &mut rec),
    }
    SuiteReport {
        suite,
        cases: rec.cases,
    }
}

fn oracle_vs_theorems(b: &Bounds, rec: &mut Recorder) {
    let oracle = b.enumerator();
    for side_a in 1..=b.a(3) {
        for side_m in 0..=b.m(4) {
            let spec = HexagonSpec::new(side_a, side_m).expect("positive side_a");
            rec.check(format!("total hexagon ({side_a},{side_m})"), || {
                let counted = oracle.count_tilings(&crate::hexagon::hexagon_cells(&spec))?;
                Ok(mismatch(
                    "oracle vs product",
                    counted,
                    macmahon_count(spec.into()),
                ))
            });
            let params = normalize(spec);
            if params.m() == 0 {
                continue;
            }
            let (per_position, _) = match oracle.axis_occupancy(&spec) {
                Ok(v) => v,
                Err(e) => {
                    rec.push(
                        format!("fixed hexagon ({side_a},{side_m})"),
                        Outcome::Fail(e.to_string()),
                    );
                    continue;
                }
            };
            for l in 1..=axis_positions(&params) {
                rec.check(format!("fixed hexagon ({side_a},{side_m}) l={l}"), || {
                    let formula = fixed_count(&params, params.axis(l)?)?;
                    Ok(mismatch(
                        "oracle vs formula",
                        per_position[(l - 1) as usize].clone(),
                        formula,
                    ))
                });
            }
        }
    }
}

fn lemma5(b: &Bounds, rec: &mut Recorder) {
    for n in 1..=b.n(8) {
        for m in 1..=b.m(8) {
            rec.check(format!("N={n} m={m}"), || {
                Ok(mismatch(
                    "det S vs product",
                    determinant(&matrix_s(n, m)),
                    lemma5_rhs(n, m),
                ))
            });
        }
    }
}

fn lemma6(b: &Bounds, rec: &mut Recorder) {
    for n in 1..=b.n(7) {
        for m in 1..=b.m(5) {
            for l in 1..=n {
                rec.check(format!("N={n} m={m} l={l}"), || {
                    let det = determinant(&matrix_c(n, m, ax(l, n)));
                    Ok(mismatch(
                        "det C vs product",
                        det,
                        lemma6_rhs(n, m, ax(l, n))?,
                    ))
                });
            }
        }
    }
}

/// Oracle counts of both halves against the fixed count, and each half
/// against its determinant.
fn factorization(b: &Bounds, rec: &mut Recorder) {
    let oracle = b.enumerator();
    for side_a in 1..=b.a(3) {
        for side_m in 1..=b.m(4) {
            let spec = HexagonSpec::new(side_a, side_m).expect("positive side_a");
            let params = normalize(spec);
            for l in 1..=axis_positions(&params) {
                rec.check(format!("hexagon ({side_a},{side_m}) l={l}"), || {
                    let report = oracle.factorization_check(&spec, l)?;
                    if !report.holds() {
                        return Ok(Some(format!(
                            "fixed {} != product {}",
                            report.fixed,
                            report.product()
                        )));
                    }
                    let RegionLabel::Trimmed { n: un, m: um } =
                        build_region(params, RegionKind::UpperTrimmed, None)?.label
                    else {
                        return Ok(Some("upper region has no trimmed label".into()));
                    };
                    let upper_det = determinant(&matrix_s(un, um));
                    let lower_det = determinant(&matrix_c(params.n(), params.m(), params.axis(l)?));
                    Ok(
                        mismatch("upper vs det", to_rational(&report.upper_count), upper_det)
                            .or_else(|| {
                                mismatch("lower vs det", report.lower_weighted.clone(), lower_det)
                            }),
                    )
                });
            }
        }
    }
}

fn symmetries(b: &Bounds, rec: &mut Recorder) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in 1..=b.n(6) {
        let sign = sign_power((n * (n + 1) / 2) as i64 - 1);
        for l in 1..=n {
            for sample in 0..10 {
                let m = rat(rng.gen_range(-60..=60), rng.gen_range(1..=13));
                rec.check(format!("N={n} l={l} sample {sample} m={m}"), || {
                    let d = d_determinant(&m, n, ax(l, n));
                    let mirrored = d_determinant(&m, n, ax(n + 1 - l, n));
                    let reflected = d_determinant(&(-&m - rat_int(n as i64)), n, ax(l, n));
                    Ok(mismatch("D(l) vs D(N+1-l)", d.clone(), mirrored)
                        .or_else(|| mismatch("D(-N-m) vs sign D(m)", reflected, &sign * &d)))
                });
            }
        }
    }
}

fn column_relation(b: &Bounds, rec: &mut Recorder) {
    for n in 4..=b.n(8) {
        for e in 1..n / 2 {
            for k in 1..=e {
                for l in 1..=n.div_ceil(2) {
                    rec.check(format!("N={n} e={e} k={k} l={l}"), || {
                        Ok((!check_column_relation(n, l, e, k)?)
                            .then(|| "combination is nonzero".to_string()))
                    });
                }
            }
        }
    }
}

fn p_polynomial(b: &Bounds, rec: &mut Recorder) {
    for n in 1..=b.n(6) {
        for l in 1..=n {
            rec.check(format!("N={n} l={l}"), || {
                let p = extract_p_polynomial(n, ax(l, n))?;
                if p.degree().is_some_and(|d| d + 1 > n as usize) {
                    return Ok(Some(format!("degree {:?} exceeds N-1", p.degree())));
                }
                let reflected = p.substitute_affine(&rat_int(-1), &rat_int(-(n as i64)));
                if reflected != p.scale(&p_reflection_sign(n)) {
                    return Ok(Some("P(-N-m) != (-1)^(N+1) P(m)".into()));
                }
                for e in 0..=(n / 2) as i64 {
                    let at = p.eval(&rat_int(-e));
                    if let Some(why) =
                        mismatch(&format!("P(-{e})"), at, p_eval_formula(-e, n, ax(l, n))?)
                    {
                        return Ok(Some(why));
                    }
                }
                Ok(None)
            });
        }
    }
}

fn corollary(b: &Bounds, rec: &mut Recorder) {
    for n in 1..=b.n(10) {
        rec.check(format!("n={n} sum"), || {
            Ok(mismatch("S(n)", corollary_sum(n), corollary_closed_form(n)))
        });
        rec.check(format!("n={n} recurrence"), || {
            Ok(mismatch(
                "residual",
                corollary_recurrence_residual(n),
                rat_int(0),
            ))
        });
        for params in [
            TheoremParams::even(2 * n - 1, n),
            TheoremParams::odd(2 * n - 1, n),
        ] {
            let params = params.expect("valid central parameters");
            let hex = params.hexagon();
            rec.check(
                format!("n={n} hexagon ({},{}) central", hex.side_a(), hex.side_m()),
                || {
                    Ok(mismatch(
                        "proportion",
                        proportion(&params, params.axis(n)?)?,
                        rat(1, 3),
                    ))
                },
            );
        }
    }
}

fn hypchain(b: &Bounds, rec: &mut Recorder) {
    for n in 1..=b.n(5) {
        for m in 1..=b.m(4) {
            for l in 1..=n {
                let label = format!("N={n} m={m} l={l}");
                match hyp_chain(n, m, ax(l, n)) {
                    Ok(chain) if chain.holds() => match chain.expanded {
                        Some(_) => rec.push(label, Outcome::Pass),
                        None => rec.push(
                            label,
                            Outcome::Skip("expanded sum singular; later forms agree".into()),
                        ),
                    },
                    Ok(chain) => {
                        rec.push(label, Outcome::Fail(format!("chain disagrees: {chain:?}")))
                    }
                    Err(e) => rec.push(label, Outcome::Fail(e.to_string())),
                }
            }
        }
    }
}

/// Convenience for callers that only need the tally.
pub fn run_quiet(suite: Suite, bounds: &Bounds) -> SuiteReport {
    run_suite(suite, bounds, &mut |_| {})
}
