//! The feasibility battery: every applicable necessary condition, run
//! against a candidate Seidel spectrum given without a matrix.
//!
//! The battery certifies nonexistence (a necessary condition fails),
//! forces structure (a regular graph must exist in the switching class of
//! any realization), or stays open. It never claims existence: positive
//! existence requires constructions, which are out of computational
//! reach here and only enter through the static facts file.

use crate::algebraic::{sign_one_radical, QuadRoot};
use crate::bounds::{forced_spectrum_even_mu, trace_cube_test, EvenMuOutcome};
use crate::error::{Error, Result};
use crate::lines::line_params_of_spectrum;
use crate::regular::{
    parity_conditions, regular_graph_spectrum_from_seidel, three_walk_condition,
    ThreeEigenvalueData,
};
use crate::spectra::{mod2_charpoly_target, parse_spectrum_text, Spectrum};
use crate::structure::{
    integer_product_pairs, small_diag_classify, DiagRule, EigPair, SmallDiagClassification,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt::Write as _;

/// A parsed, validated candidate spectrum (positive multiplicities, no
/// duplicate eigenvalues, real irrational quadratics, no residual).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSpectrum(Spectrum);

impl CandidateSpectrum {
    pub fn new(spec: Spectrum) -> Result<Self> {
        if spec.residual().is_some() {
            return Err(Error::Precondition(
                "candidate spectra must be fully factored".into(),
            ));
        }
        Ok(CandidateSpectrum(spec))
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }
}

/// Parses the spectrum grammar into a candidate.
pub fn parse_spectrum(text: &str) -> Result<CandidateSpectrum> {
    CandidateSpectrum::new(parse_spectrum_text(text)?)
}

/// External nonexistence facts (literature data, never derived).
#[derive(Clone, Debug, Default)]
pub struct Facts {
    pub graph_nonexistent: Vec<(Spectrum, String)>,
    pub seidel_nonexistent: Vec<(Spectrum, String)>,
}

impl Facts {
    /// The facts shipped with the crate.
    pub fn builtin() -> Facts {
        Facts::parse(include_str!("../data/facts.txt")).expect("shipped facts file parses")
    }

    pub fn empty() -> Facts {
        Facts::default()
    }

    /// Format: `<kind> <spectrum> nonexistent <citation>` per line, with
    /// `#` comments; kind is graph-spectrum or seidel-spectrum.
    pub fn parse(text: &str) -> Result<Facts> {
        let mut facts = Facts::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let err = |msg: &str| Error::Parse {
                line: lineno + 1,
                col: 1,
                msg: msg.to_string(),
            };
            let kind = it.next().ok_or_else(|| err("missing kind"))?;
            let grammar = it.next().ok_or_else(|| err("missing spectrum"))?;
            let marker = it.next().ok_or_else(|| err("missing verdict"))?;
            if marker != "nonexistent" {
                return Err(err("expected the word 'nonexistent'"));
            }
            let citation = it.collect::<Vec<_>>().join(" ");
            if citation.is_empty() {
                return Err(err("missing citation"));
            }
            let spec = parse_spectrum_text(grammar)?;
            match kind {
                "graph-spectrum" => facts.graph_nonexistent.push((spec, citation)),
                "seidel-spectrum" => facts.seidel_nonexistent.push((spec, citation)),
                _ => return Err(err("kind must be graph-spectrum or seidel-spectrum")),
            }
        }
        Ok(facts)
    }

    pub fn lookup_graph(&self, spec: &Spectrum) -> Option<&str> {
        self.graph_nonexistent
            .iter()
            .find(|(s, _)| s == spec)
            .map(|(_, c)| c.as_str())
    }

    pub fn lookup_seidel(&self, spec: &Spectrum) -> Option<&str> {
        self.seidel_nonexistent
            .iter()
            .find(|(s, _)| s == spec)
            .map(|(_, c)| c.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Which mathematical rule an infeasibility verdict came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleKind {
    TraceIdentities,
    Mod2Class,
    OddIrrationalForm,
    SimpleEigenvalue,
    DiagZero,
    DiagParity,
    DiagTwoJ,
    DiagFourTensor,
    DiagSixMultiplicity,
    TraceCube,
    RelativeBound,
    GraphFact,
    SeidelFact,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InfeasibleRule {
    pub kind: RuleKind,
    pub citation: Option<String>,
    pub detail: String,
}

/// One record per condition: id, rule description, verdict and data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionRecord {
    pub id: String,
    pub rule: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Overall {
    Infeasible,
    RegularForced,
    RegularImpossible,
    Open,
}

/// The Regular column: must / must not / may contain a regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegularColumn {
    Yes,
    No,
    Unknown,
}

impl RegularColumn {
    pub fn render(self) -> &'static str {
        match self {
            RegularColumn::Yes => "Y",
            RegularColumn::No => "N",
            RegularColumn::Unknown => "?",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExistsColumn {
    No,
    Unknown,
}

impl ExistsColumn {
    pub fn render(self) -> &'static str {
        match self {
            ExistsColumn::No => "N",
            ExistsColumn::Unknown => "?",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub spectrum: Spectrum,
    pub n: usize,
    pub records: Vec<ConditionRecord>,
    pub overall: Overall,
    pub regular: RegularColumn,
    pub exists: ExistsColumn,
    pub infeasible_rules: Vec<InfeasibleRule>,
    /// Graph spectra forced by regular eigenspaces (θ₀ rendered, spectrum).
    pub forced_graph_spectra: Vec<(String, Spectrum)>,
    pub notes: Vec<String>,
}

impl FeasibilityReport {
    /// Aligned human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "spectrum : {}", self.spectrum.render());
        let _ = writeln!(out, "order    : {}", self.n);
        let id_width = self
            .records
            .iter()
            .map(|r| r.id.len())
            .max()
            .unwrap_or(8)
            .max(8);
        for r in &self.records {
            let v = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::NotApplicable => "n/a ",
            };
            let _ = writeln!(out, "  {:<id_width$}  {}  {}", r.id, v, r.detail);
        }
        for (theta, g) in &self.forced_graph_spectra {
            let _ = writeln!(
                out,
                "  forced graph spectrum (regular eigenspace of {theta}): {}",
                g.render()
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        let _ = writeln!(
            out,
            "overall  : {:?}   regular: {}   exists: {}",
            self.overall,
            self.regular.render(),
            self.exists.render()
        );
        out
    }
}

struct BatteryState {
    records: Vec<ConditionRecord>,
    infeasible: Vec<InfeasibleRule>,
    regular_forced: Vec<String>,
    regular_impossible: Vec<String>,
    forced_graph_spectra: Vec<(String, Spectrum)>,
    notes: Vec<String>,
}

impl BatteryState {
    fn record(&mut self, id: &str, rule: &str, verdict: Verdict, detail: impl Into<String>) {
        self.records.push(ConditionRecord {
            id: id.to_string(),
            rule: rule.to_string(),
            verdict,
            detail: detail.into(),
        });
    }

    fn fail(&mut self, kind: RuleKind, citation: Option<String>, detail: impl Into<String>) {
        self.infeasible.push(InfeasibleRule {
            kind,
            citation,
            detail: detail.into(),
        });
    }
}

/// Runs every applicable condition, in a fixed order; the report is a
/// pure function of the candidate and the facts.
pub fn run_battery(candidate: &CandidateSpectrum, facts: &Facts) -> FeasibilityReport {
    let spec = candidate.spectrum();
    let n = spec.order();
    let distinct = spec
        .distinct_count()
        .expect("candidates are fully factored");
    let mut st = BatteryState {
        records: vec![],
        infeasible: vec![],
        regular_forced: vec![],
        regular_impossible: vec![],
        forced_graph_spectra: vec![],
        notes: vec![],
    };

    check_trace_identities(spec, n, &mut st);
    check_mod2_class(spec, n, &mut st);
    check_odd_irrational_form(spec, n, distinct, &mut st);
    check_simple_eigenvalue(spec, n, distinct, facts, &mut st);
    check_three_walks(spec, n, distinct, &mut st);
    check_parity(spec, n, &mut st);
    check_diag_pairs(spec, n, distinct, facts, &mut st);
    check_trace_cube(spec, n, distinct, &mut st);
    check_relative_bound(spec, n, &mut st);
    check_seidel_facts(spec, facts, &mut st);

    let regular = if !st.regular_forced.is_empty() {
        RegularColumn::Yes
    } else if !st.regular_impossible.is_empty() {
        RegularColumn::No
    } else {
        RegularColumn::Unknown
    };
    let overall = if !st.infeasible.is_empty() {
        Overall::Infeasible
    } else if regular == RegularColumn::Yes {
        Overall::RegularForced
    } else if regular == RegularColumn::No {
        Overall::RegularImpossible
    } else {
        Overall::Open
    };
    let exists = if overall == Overall::Infeasible {
        ExistsColumn::No
    } else {
        ExistsColumn::Unknown
    };
    FeasibilityReport {
        spectrum: spec.clone(),
        n,
        records: st.records,
        overall,
        regular,
        exists,
        infeasible_rules: st.infeasible,
        forced_graph_spectra: st.forced_graph_spectra,
        notes: st.notes,
    }
}

fn check_trace_identities(spec: &Spectrum, n: usize, st: &mut BatteryState) {
    let tr = spec.weighted_trace();
    let tr2 = spec.weighted_square_sum();
    let expected = BigInt::from(n) * (BigInt::from(n) - BigInt::one());
    let ok = tr.is_zero() && tr2 == expected;
    st.record(
        "trace-identities",
        "Σmθ = 0 and Σmθ² = n(n-1)",
        if ok { Verdict::Pass } else { Verdict::Fail },
        format!("Σmθ = {tr}, Σmθ² = {tr2} (need 0 and {expected})"),
    );
    if !ok {
        st.fail(
            RuleKind::TraceIdentities,
            None,
            format!("trace identities fail: Σmθ = {tr}, Σmθ² = {tr2}"),
        );
    }
}

fn check_mod2_class(spec: &Spectrum, n: usize, st: &mut BatteryState) {
    let got = spec.to_poly().mod2();
    let expected = mod2_charpoly_target(n);
    let ok = got == expected;
    let shape = if n % 2 == 0 {
        "(x+1)^n; in particular no even integer eigenvalues"
    } else {
        "x(x+1)^(n-1); even eigenvalue content has total multiplicity exactly 1"
    };
    st.record(
        "mod2-charpoly",
        "characteristic polynomial class mod 2",
        if ok { Verdict::Pass } else { Verdict::Fail },
        format!("χ mod 2 must equal {shape}"),
    );
    if !ok {
        st.fail(
            RuleKind::Mod2Class,
            None,
            "characteristic polynomial has the wrong class mod 2".to_string(),
        );
    }
}

fn check_odd_irrational_form(spec: &Spectrum, n: usize, distinct: usize, st: &mut BatteryState) {
    let has_pair = spec.pair_entries().next().is_some();
    if n % 2 == 0 || !has_pair || distinct != 3 {
        st.record(
            "odd-irrational-form",
            "odd order with an irrational eigenvalue forces {[-√n]^(n-1)/2, [0]^1, [√n]^(n-1)/2}",
            Verdict::NotApplicable,
            "needs odd order, three distinct eigenvalues and an irrational pair",
        );
        return;
    }
    use crate::regular::IrrationalOddForm;
    let (ok, detail) = match crate::regular::irrational_three_ev_form(n) {
        Ok(IrrationalOddForm::Spectrum(forced)) => {
            let ok = *spec == forced;
            (ok, format!("forced form is {}", forced.render()))
        }
        Ok(IrrationalOddForm::RationalCase) => (
            false,
            format!("√{n} is rational, so an irrational pair is impossible"),
        ),
        Err(_) => unreachable!("n is odd here"),
    };
    st.record(
        "odd-irrational-form",
        "odd order with an irrational eigenvalue forces {[-√n]^(n-1)/2, [0]^1, [√n]^(n-1)/2}",
        if ok { Verdict::Pass } else { Verdict::Fail },
        detail.clone(),
    );
    if !ok {
        st.fail(RuleKind::OddIrrationalForm, None, detail);
    }
}

/// Three distinct eigenvalues, one of them simple: the simple eigenspace
/// is regular, so its eigenvalue must be an integer with the right
/// parity, and the mapped strongly-regular-graph spectrum must be
/// integral and not a known nonexistent one.
fn check_simple_eigenvalue(
    spec: &Spectrum,
    n: usize,
    distinct: usize,
    facts: &Facts,
    st: &mut BatteryState,
) {
    const ID: &str = "simple-eigenvalue-regular";
    const RULE: &str = "a simple eigenvalue of a three-eigenvalue matrix has a regular eigenspace";
    if distinct != 3 {
        st.record(ID, RULE, Verdict::NotApplicable, "needs three distinct eigenvalues");
        return;
    }
    let simple_ints: Vec<BigInt> = spec
        .integer_entries()
        .filter(|(_, m)| *m == 1)
        .map(|(v, _)| v.clone())
        .collect();
    let simple_pair = spec.pair_entries().any(|(_, _, m)| m == 1);
    if simple_ints.is_empty() && !simple_pair {
        st.record(ID, RULE, Verdict::NotApplicable, "no simple eigenvalue");
        return;
    }
    if simple_ints.is_empty() && simple_pair {
        let detail = "a simple irrational eigenvalue would have a regular eigenspace, \
                      forcing it to be an integer";
        st.record(ID, RULE, Verdict::Fail, detail);
        st.fail(RuleKind::SimpleEigenvalue, None, detail);
        return;
    }
    for nu in &simple_ints {
        if !parity_conditions(n, nu) {
            let detail = format!(
                "the regular eigenspace of the simple eigenvalue {nu} violates the parity \
                 conditions for n = {n}"
            );
            st.record(ID, RULE, Verdict::Fail, detail.clone());
            st.fail(RuleKind::SimpleEigenvalue, None, detail);
            return;
        }
        match regular_graph_spectrum_from_seidel(spec, nu) {
            Ok(graph_spec) => {
                st.forced_graph_spectra
                    .push((nu.to_string(), graph_spec.clone()));
                st.regular_forced
                    .push(format!("simple eigenvalue {nu} forces a regular eigenspace"));
                st.record(
                    ID,
                    RULE,
                    Verdict::Pass,
                    format!(
                        "regular graph forced; strongly regular spectrum {}",
                        graph_spec.render()
                    ),
                );
                if let Some(citation) = facts.lookup_graph(&graph_spec) {
                    let detail = format!(
                        "forced graph spectrum {} is known not to exist",
                        graph_spec.render()
                    );
                    st.record(
                        "graph-nonexistence-facts",
                        "forced regular graph spectra checked against imported nonexistence facts",
                        Verdict::Fail,
                        format!("{detail} [{citation}]"),
                    );
                    st.fail(RuleKind::GraphFact, Some(citation.to_string()), detail);
                }
            }
            Err(_) => {
                let detail = format!(
                    "the graph spectrum forced by the simple eigenvalue {nu} is not an \
                     algebraic-integer spectrum"
                );
                st.record(ID, RULE, Verdict::Fail, detail.clone());
                st.fail(RuleKind::SimpleEigenvalue, None, detail);
            }
        }
    }
}

fn check_three_walks(spec: &Spectrum, n: usize, distinct: usize, st: &mut BatteryState) {
    const ID: &str = "closed-3-walks";
    const RULE: &str =
        "the per-vertex closed-3-walk count of a regular witness must be a nonnegative integer";
    if distinct != 3 {
        st.record(ID, RULE, Verdict::NotApplicable, "needs three distinct eigenvalues");
        return;
    }
    let data = ThreeEigenvalueData::from_spectrum(spec).expect("three distinct eigenvalues");
    let verdicts = three_walk_condition(n, &data);
    let feasible: Vec<String> = verdicts
        .iter()
        .filter(|v| v.feasible)
        .map(|v| format!("θ={} (k={})", v.theta, v.valency))
        .collect();
    let detail: String = verdicts
        .iter()
        .map(|v| {
            format!(
                "θ={}: k={}, 16·walks={} ({})",
                v.theta,
                v.valency,
                v.numerator,
                if v.feasible { "ok" } else { "ruled out" }
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    if feasible.is_empty() {
        st.record(
            ID,
            RULE,
            Verdict::Fail,
            if detail.is_empty() {
                "no integer eigenvalue of admissible parity".to_string()
            } else {
                detail
            },
        );
        st.regular_impossible
            .push("no admissible valency passes the closed-3-walk count".into());
    } else {
        st.record(ID, RULE, Verdict::Pass, detail);
    }
}

fn check_parity(spec: &Spectrum, n: usize, st: &mut BatteryState) {
    let per: Vec<String> = spec
        .integer_entries()
        .map(|(v, _)| {
            format!(
                "{}: {}",
                v,
                if parity_conditions(n, v) {
                    "admissible"
                } else {
                    "no regular eigenspace"
                }
            )
        })
        .collect();
    st.record(
        "eigenvalue-parity",
        "an eigenvalue with a regular eigenspace satisfies ν ≡ n-1 (mod 2), and mod 4 for odd n",
        Verdict::Pass,
        if per.is_empty() {
            "no integer eigenvalues".to_string()
        } else {
            per.join("; ")
        },
    );
}

fn check_diag_pairs(
    spec: &Spectrum,
    n: usize,
    distinct: usize,
    facts: &Facts,
    st: &mut BatteryState,
) {
    const RULE: &str = "|n-1+λμ| classification of M_S(λ,μ) for even order";
    if distinct != 3 || n % 2 == 1 {
        st.record(
            "diag-pairs",
            RULE,
            Verdict::NotApplicable,
            "needs even order and three distinct eigenvalues",
        );
        return;
    }
    for pair in integer_product_pairs(spec) {
        let c = remaining_multiplicity(spec, &pair);
        let label = pair_label(&pair);
        let (d, class) =
            small_diag_classify(n, &pair.product(), c).expect("even order checked above");
        st.notes
            .push(format!("pair {label}: |n-1+λμ| = {d}, rank c = {c}"));
        let id = format!("diag-pair({label})");
        match class {
            SmallDiagClassification::RegularForced { rule, detail } => {
                st.record(&id, RULE, Verdict::Pass, format!("D = {d}: {detail}"));
                st.regular_forced.push(format!("pair {label}: {detail}"));
                if let Some(nu) = remaining_integer_eigenvalue(spec, &pair) {
                    if let Ok(graph_spec) = regular_graph_spectrum_from_seidel(spec, &nu) {
                        if let Some(citation) = facts.lookup_graph(&graph_spec) {
                            let detail = format!(
                                "forced graph spectrum {} is known not to exist",
                                graph_spec.render()
                            );
                            st.record(
                                "graph-nonexistence-facts",
                                "forced regular graph spectra checked against imported facts",
                                Verdict::Fail,
                                format!("{detail} [{citation}]"),
                            );
                            st.fail(RuleKind::GraphFact, Some(citation.to_string()), detail);
                        }
                        st.forced_graph_spectra.push((nu.to_string(), graph_spec));
                    }
                }
                let _ = rule;
            }
            SmallDiagClassification::Infeasible { rule, detail } => {
                st.record(&id, RULE, Verdict::Fail, format!("D = {d}: {detail}"));
                let kind = match rule {
                    DiagRule::ZeroDiag => RuleKind::DiagZero,
                    DiagRule::Mod2Parity => RuleKind::DiagParity,
                    DiagRule::TwoJ => RuleKind::DiagTwoJ,
                    DiagRule::FourTensor => RuleKind::DiagFourTensor,
                    DiagRule::SixDiag => RuleKind::DiagSixMultiplicity,
                    DiagRule::PrimeRank2 => RuleKind::SimpleEigenvalue,
                };
                st.fail(kind, None, detail);
            }
            SmallDiagClassification::Unknown => {
                st.record(
                    &id,
                    RULE,
                    Verdict::Pass,
                    format!("D = {d}: no structural rule applies"),
                );
            }
        }
    }
}

fn pair_label(pair: &EigPair) -> String {
    match pair {
        EigPair::Integers(a, b) => format!("({a},{b})"),
        EigPair::Conjugate { p, q } => format!("surd({p},{q})"),
    }
}

/// Multiplicity of the eigenvalue not covered by the pair.
fn remaining_multiplicity(spec: &Spectrum, pair: &EigPair) -> usize {
    remaining_entry(spec, pair).map(|(_, m)| m).unwrap_or(0)
}

fn remaining_integer_eigenvalue(spec: &Spectrum, pair: &EigPair) -> Option<BigInt> {
    match remaining_entry(spec, pair)? {
        (crate::algebraic::Eigenvalue::Integer(v), _) => Some(v),
        _ => None,
    }
}

fn remaining_entry(
    spec: &Spectrum,
    pair: &EigPair,
) -> Option<(crate::algebraic::Eigenvalue, usize)> {
    use crate::algebraic::Eigenvalue;
    for (ev, m) in spec.entries() {
        let covered = match (pair, ev) {
            (EigPair::Integers(a, b), Eigenvalue::Integer(v)) => v == a || v == b,
            (EigPair::Conjugate { p, q }, Eigenvalue::QuadraticPair { p: pp, q: qq }) => {
                p == pp && q == qq
            }
            _ => false,
        };
        if !covered {
            return Some((ev.clone(), *m));
        }
    }
    None
}

fn check_trace_cube(spec: &Spectrum, n: usize, distinct: usize, st: &mut BatteryState) {
    const ID: &str = "trace-cube";
    const RULE: &str = "diagonal bound on σS³ for four integer eigenvalues with a simple even one";
    let all_integer = spec.pair_entries().next().is_none();
    if n % 2 == 0 || distinct != 4 || !all_integer {
        st.record(
            ID,
            RULE,
            Verdict::NotApplicable,
            "needs odd order and four distinct integer eigenvalues",
        );
        return;
    }
    match trace_cube_test(spec) {
        Ok(report) => {
            let detail = format!(
                "σ = {}, σθ₀³ = {} vs bound {}",
                report.sigma, report.lhs, report.rhs
            );
            if report.holds {
                st.record(ID, RULE, Verdict::Pass, detail);
            } else {
                st.record(ID, RULE, Verdict::Fail, detail.clone());
                st.fail(RuleKind::TraceCube, None, detail);
            }
        }
        Err(e) => {
            st.record(ID, RULE, Verdict::NotApplicable, e.to_string());
        }
    }
}

fn check_relative_bound(spec: &Spectrum, n: usize, st: &mut BatteryState) {
    const ID: &str = "relative-bound";
    const RULE: &str = "n ≤ d(λ₀²-1)/(λ₀²-d), with the equality spectrum pinned";
    if n < 2 {
        st.record(ID, RULE, Verdict::NotApplicable, "order below 2");
        return;
    }
    let params = match line_params_of_spectrum(spec) {
        Ok(p) => p,
        Err(e) => {
            st.record(ID, RULE, Verdict::NotApplicable, e.to_string());
            return;
        }
    };
    let d = params.d;
    let (lambda0, _) = spec.smallest().expect("candidate is nonempty");
    match lambda0 {
        QuadRoot::Integer(l0) => {
            let l2 = &l0 * &l0;
            if l2 <= BigInt::from(d) {
                st.record(
                    ID,
                    RULE,
                    Verdict::NotApplicable,
                    format!("λ₀² = {l2} ≤ d = {d}: bound vacuous"),
                );
                return;
            }
            let rb = crate::bounds::relative_bound(d, &l0).expect("applicability checked");
            let nn = BigInt::from(n);
            if BigInt::from(n) > rb.floor_bound {
                let detail = format!("n = {n} exceeds the bound {} (d = {d}, λ₀ = {l0})", rb.bound);
                st.record(ID, RULE, Verdict::Fail, detail.clone());
                st.fail(RuleKind::RelativeBound, None, detail);
                return;
            }
            if rb.bound == crate::bounds::BigRat::from_integer(nn) {
                match &rb.equality_spectrum {
                    Some(eq) if eq == spec => {
                        st.record(
                            ID,
                            RULE,
                            Verdict::Pass,
                            format!("bound attained with the equality spectrum {}", eq.render()),
                        );
                    }
                    _ => {
                        let detail = format!(
                            "n attains the bound, so the spectrum must be {}",
                            rb.equality_spectrum
                                .as_ref()
                                .map(|s| s.render())
                                .unwrap_or_else(|| "a two-eigenvalue equality spectrum".into())
                        );
                        st.record(ID, RULE, Verdict::Fail, detail.clone());
                        st.fail(RuleKind::RelativeBound, None, detail);
                    }
                }
                return;
            }
            st.record(
                ID,
                RULE,
                Verdict::Pass,
                format!("n = {n} ≤ {} (d = {d}, λ₀ = {l0})", rb.bound),
            );
        }
        QuadRoot::Surd { p, q, .. } => {
            // λ₀ = (-p-√D)/2 with D = p²-4q; all comparisons by exact signs
            let disc = &p * &p - BigInt::from(4) * &q;
            let dd = BigInt::from(d);
            // λ₀² > d  ⟺  p² + D - 4d + 2p√D > 0
            let applicable = sign_one_radical(
                &(&p * &p + &disc - BigInt::from(4) * &dd),
                &(BigInt::from(2) * &p),
                &disc,
            ) == Ordering::Greater;
            if !applicable {
                st.record(ID, RULE, Verdict::NotApplicable, "λ₀² ≤ d: bound vacuous");
                return;
            }
            // (n-d)λ₀² ≤ d(n-1)
            // 4·[(n-d)λ₀² - d(n-1)] = (n-d)(p²+D) - 4d(n-1) + 2(n-d)p·√D
            let nd = BigInt::from(n) - &dd;
            let a = &nd * (&p * &p + &disc) - BigInt::from(4) * &dd * (BigInt::from(n) - 1);
            let b = BigInt::from(2) * &nd * &p;
            let cmp = sign_one_radical(&a, &b, &disc);
            if cmp == Ordering::Greater {
                let detail = format!("n = {n} exceeds the bound (d = {d}, irrational λ₀)");
                st.record(ID, RULE, Verdict::Fail, detail.clone());
                st.fail(RuleKind::RelativeBound, None, detail);
                return;
            }
            if cmp == Ordering::Equal {
                // equality forces {λ₀^(n-d), [-λ₀(n-d)/d]^d}: with an
                // irrational λ₀ this needs n-d = d and a trace-zero pair
                let ok = nd == dd && p.is_zero() && spec.entries().len() == 1;
                if ok {
                    st.record(ID, RULE, Verdict::Pass, "bound attained by the conjugate pair");
                } else {
                    let detail =
                        "bound attained, but the spectrum is not the conjugate equality pair";
                    st.record(ID, RULE, Verdict::Fail, detail);
                    st.fail(RuleKind::RelativeBound, None, detail);
                }
                return;
            }
            st.record(ID, RULE, Verdict::Pass, format!("n = {n} is below the bound"));
        }
    }
}

fn check_seidel_facts(spec: &Spectrum, facts: &Facts, st: &mut BatteryState) {
    const ID: &str = "seidel-nonexistence-facts";
    const RULE: &str = "candidate checked against imported nonexistence facts";
    match facts.lookup_seidel(spec) {
        Some(citation) => {
            let detail = format!("spectrum {} is known not to exist", spec.render());
            st.record(ID, RULE, Verdict::Fail, format!("{detail} [{citation}]"));
            st.fail(RuleKind::SeidelFact, Some(citation.to_string()), detail);
        }
        None => {
            st.record(ID, RULE, Verdict::Pass, "no matching fact");
        }
    }
}

/// One row of the three-eigenvalue survey table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurveyRow {
    pub n: usize,
    pub d: usize,
    pub spectrum: Spectrum,
    pub regular: RegularColumn,
    pub exists: ExistsColumn,
    pub rules: Vec<String>,
}

/// The fifteen candidate spectra surveyed at orders 28..95.
pub const SURVEY_SPECTRA: [&str; 15] = [
    "-5^14,3^7,7^7",
    "-5^16,5^9,7^5",
    "-5^24,5^6,9^10",
    "-5^24,7^15,15^1",
    "-5^26,7^7,9^9",
    "-5^31,7^8,11^9",
    "-5^32,9^16,16^1",
    "-5^30,3^6,11^12",
    "-5^30,7^16,19^2",
    "-5^36,7^9,13^9",
    "-5^42,11^15,15^3",
    "-5^53,13^16,19^3",
    "-5^56,10^1,15^18",
    "-5^70,13^5,19^15",
    "-5^75,14^1,19^19",
];

/// Runs the battery over the survey spectra and renders the
/// Regular/Exists verdict columns.
pub fn survey_table(facts: &Facts) -> Vec<(SurveyRow, FeasibilityReport)> {
    SURVEY_SPECTRA
        .iter()
        .map(|text| {
            let candidate = parse_spectrum(text).expect("survey spectra parse");
            let report = run_battery(&candidate, facts);
            let d = line_params_of_spectrum(candidate.spectrum())
                .map(|p| p.d)
                .unwrap_or(0);
            let rules = report
                .infeasible_rules
                .iter()
                .map(|r| format!("{:?}", r.kind))
                .collect();
            (
                SurveyRow {
                    n: candidate.order(),
                    d,
                    spectrum: candidate.spectrum().clone(),
                    regular: report.regular,
                    exists: report.exists,
                    rules,
                },
                report,
            )
        })
        .collect()
}

pub fn render_survey_table(rows: &[SurveyRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>3}  {:>2}  {:<24} {:^7} {:^6}", "n", "d", "spectrum", "regular", "exists");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3}  {:>2}  {:<24} {:^7} {:^6}  {}",
            r.n,
            r.d,
            r.spectrum.render(),
            r.regular.render(),
            r.exists.render(),
            r.rules.join(",")
        );
    }
    out
}

/// Exists column of the extremal table: refuted, known construction, or open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalExists {
    No,
    YesKnownConstruction,
    Open,
}

impl ExtremalExists {
    pub fn render(self) -> &'static str {
        match self {
            ExtremalExists::No => "N",
            ExtremalExists::YesKnownConstruction => "Y",
            ExtremalExists::Open => "?",
        }
    }
}

/// Rule that settled an extremal-table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalRule {
    /// The diag-6 multiplicity restriction refuted the forced spectrum.
    SixDiagMultiplicity,
    /// The even-eigenvalue multiplicity cap (mod-2 class) was exceeded.
    EvenMultiplicityBound,
    /// The trace-of-cube diagonal bound refuted the forced spectrum.
    TraceCubeBound,
    /// An imported nonexistence fact applied.
    NonexistenceFact(String),
    /// n is within the known lower bound for N(d): a construction exists.
    KnownConstruction,
    /// Some other battery rule refuted the spectrum.
    OtherInfeasibility(String),
    Open,
}

impl ExtremalRule {
    pub fn render(&self) -> String {
        match self {
            ExtremalRule::SixDiagMultiplicity => "diag-6 multiplicity restriction".into(),
            ExtremalRule::EvenMultiplicityBound => "even-eigenvalue multiplicity bound".into(),
            ExtremalRule::TraceCubeBound => "trace-of-cube bound".into(),
            ExtremalRule::NonexistenceFact(c) => format!("nonexistence fact [{c}]"),
            ExtremalRule::KnownConstruction => "known construction".into(),
            ExtremalRule::OtherInfeasibility(d) => format!("infeasible: {d}"),
            ExtremalRule::Open => "open".into(),
        }
    }
}

/// One row of the extremal table: the spectrum forced at the floor of the
/// relative bound for dimension d, with its verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtremalRow {
    pub d: usize,
    pub lambda0: BigInt,
    pub floor_bound: BigInt,
    pub spectrum: Option<Spectrum>,
    pub exists: ExtremalExists,
    pub rule: ExtremalRule,
}

/// For each dimension in the range: computes ⌊d(λ₀²-1)/(λ₀²-d)⌋, derives
/// the spectrum forced there by the even-μ argument, and settles the row
/// with the battery, the facts file and the known-construction table.
pub fn extremal_table(
    d_range: std::ops::RangeInclusive<usize>,
    lambda0: &BigInt,
    facts: &Facts,
) -> Result<Vec<ExtremalRow>> {
    let known = crate::bounds::known_line_bounds();
    let mut rows = vec![];
    for d in d_range {
        let rb = crate::bounds::relative_bound(d, lambda0)?;
        let outcome = forced_spectrum_even_mu(d, lambda0)?;
        let (spectrum, exists, rule) = match outcome {
            EvenMuOutcome::RuledOut { spectrum, .. } => (
                spectrum,
                ExtremalExists::No,
                ExtremalRule::EvenMultiplicityBound,
            ),
            EvenMuOutcome::NotForced { .. } => (None, ExtremalExists::Open, ExtremalRule::Open),
            EvenMuOutcome::Forced(f) => {
                let candidate = CandidateSpectrum::new(f.spectrum.clone())?;
                let report = run_battery(&candidate, facts);
                if report.overall == Overall::Infeasible {
                    let first = &report.infeasible_rules[0];
                    let rule = match first.kind {
                        RuleKind::DiagSixMultiplicity => ExtremalRule::SixDiagMultiplicity,
                        RuleKind::TraceCube => ExtremalRule::TraceCubeBound,
                        RuleKind::GraphFact | RuleKind::SeidelFact => ExtremalRule::NonexistenceFact(
                            first.citation.clone().unwrap_or_default(),
                        ),
                        RuleKind::Mod2Class => ExtremalRule::EvenMultiplicityBound,
                        _ => ExtremalRule::OtherInfeasibility(first.detail.clone()),
                    };
                    (Some(f.spectrum), ExtremalExists::No, rule)
                } else {
                    let n = f.n;
                    let known_lower = known
                        .iter()
                        .find(|(dd, _, _)| *dd == d)
                        .map(|(_, lo, _)| *lo)
                        .unwrap_or(0);
                    if n <= known_lower {
                        (
                            Some(f.spectrum),
                            ExtremalExists::YesKnownConstruction,
                            ExtremalRule::KnownConstruction,
                        )
                    } else {
                        (Some(f.spectrum), ExtremalExists::Open, ExtremalRule::Open)
                    }
                }
            }
        };
        rows.push(ExtremalRow {
            d,
            lambda0: lambda0.clone(),
            floor_bound: rb.floor_bound,
            spectrum,
            exists,
            rule,
        });
    }
    Ok(rows)
}

pub fn render_extremal_table(rows: &[ExtremalRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:>3}  {:>5}  {:<28} {:^6}  rule",
        "d", "λ0", "⌊n⌋", "spectrum", "exists"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3}  {:>3}  {:>5}  {:<28} {:^6}  {}",
            r.d,
            r.lambda0,
            r.floor_bound,
            r.spectrum.as_ref().map(|s| s.render()).unwrap_or_default(),
            r.exists.render(),
            r.rule.render()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::spectra::spectrum;

    #[test]
    fn parse_and_reject() {
        assert_eq!(parse_spectrum("-5^24,5^6,9^10").unwrap().order(), 40);
        assert!(parse_spectrum("5^2,5^3").is_err());
        assert!(parse_spectrum("garbage").is_err());
    }

    #[test]
    fn builtin_facts_parse() {
        let facts = Facts::builtin();
        assert_eq!(facts.graph_nonexistent.len(), 3);
        assert_eq!(facts.seidel_nonexistent.len(), 2);
        let spec = parse_spectrum_text("-5^16,2^32,16^1").unwrap();
        assert!(facts.lookup_graph(&spec).is_some());
    }

    #[test]
    fn battery_order40_both_failures() {
        let c = parse_spectrum("-5^24,5^6,9^10").unwrap();
        let report = run_battery(&c, &Facts::builtin());
        assert_eq!(report.overall, Overall::Infeasible);
        assert_eq!(report.regular, RegularColumn::No);
        assert!(report
            .infeasible_rules
            .iter()
            .any(|r| r.kind == RuleKind::DiagSixMultiplicity));
        // the closed-3-walk record failed too
        assert!(report
            .records
            .iter()
            .any(|r| r.id == "closed-3-walks" && r.verdict == Verdict::Fail));
    }

    #[test]
    fn battery_order61_trace_cube() {
        let c = parse_spectrum("-5^43,11^9,12^1,13^8").unwrap();
        let report = run_battery(&c, &Facts::builtin());
        assert_eq!(report.overall, Overall::Infeasible);
        assert!(report
            .infeasible_rules
            .iter()
            .any(|r| r.kind == RuleKind::TraceCube));
    }

    #[test]
    fn battery_order49_srg_fact() {
        let c = parse_spectrum("-5^32,9^16,16^1").unwrap();
        let report = run_battery(&c, &Facts::builtin());
        assert_eq!(report.overall, Overall::Infeasible);
        assert_eq!(report.regular, RegularColumn::Yes);
        assert!(report
            .infeasible_rules
            .iter()
            .any(|r| r.kind == RuleKind::GraphFact));
    }

    #[test]
    fn battery_order60_regular_forced() {
        let c = parse_spectrum("-5^42,11^15,15^3").unwrap();
        let report = run_battery(&c, &Facts::builtin());
        assert_eq!(report.overall, Overall::RegularForced);
        assert_eq!(report.exists, ExistsColumn::Unknown);
        let forced: Vec<&str> = report
            .forced_graph_spectra
            .iter()
            .map(|(_, s)| s.render())
            .map(|s| Box::leak(s.into_boxed_str()) as &str)
            .collect();
        assert!(forced.contains(&"-8^2,-6^15,2^42,22^1"));
    }

    #[test]
    fn battery_is_sound_on_realized_spectra() {
        let fixtures: Vec<Spectrum> = vec![
            spectrum(&fixtures::s10()),
            spectrum(&fixtures::s6()),
            spectrum(&fixtures::pentagon_seidel()),
            spectrum(&fixtures::k4_seidel()),
            spectrum(&fixtures::petersen_seidel()),
            spectrum(&fixtures::sk_family(1).unwrap()),
        ];
        for spec in fixtures {
            let c = CandidateSpectrum::new(spec.clone()).unwrap();
            let report = run_battery(&c, &Facts::builtin());
            assert_ne!(
                report.overall,
                Overall::Infeasible,
                "realized spectrum {} misreported",
                spec.render()
            );
        }
    }

    #[test]
    fn battery_open_row_stays_open() {
        let c = parse_spectrum("-5^30,3^6,11^12").unwrap();
        let report = run_battery(&c, &Facts::builtin());
        assert_eq!(report.overall, Overall::Open);
    }

    #[test]
    fn survey_matches_expected_columns() {
        let rows = survey_table(&Facts::builtin());
        let expected: Vec<(usize, &str, RegularColumn, ExistsColumn)> = vec![
            (28, "-5^14,3^7,7^7", RegularColumn::Unknown, ExistsColumn::Unknown),
            (30, "-5^16,5^9,7^5", RegularColumn::Yes, ExistsColumn::No),
            (40, "-5^24,5^6,9^10", RegularColumn::No, ExistsColumn::No),
            (40, "-5^24,7^15,15^1", RegularColumn::Yes, ExistsColumn::Unknown),
            (42, "-5^26,7^7,9^9", RegularColumn::Yes, ExistsColumn::No),
            (48, "-5^31,7^8,11^9", RegularColumn::Unknown, ExistsColumn::Unknown),
            (49, "-5^32,9^16,16^1", RegularColumn::Yes, ExistsColumn::No),
            (48, "-5^30,3^6,11^12", RegularColumn::Unknown, ExistsColumn::Unknown),
            (48, "-5^30,7^16,19^2", RegularColumn::Yes, ExistsColumn::Unknown),
            (54, "-5^36,7^9,13^9", RegularColumn::Unknown, ExistsColumn::Unknown),
            (60, "-5^42,11^15,15^3", RegularColumn::Yes, ExistsColumn::Unknown),
            (72, "-5^53,13^16,19^3", RegularColumn::Yes, ExistsColumn::Unknown),
            (75, "-5^56,10^1,15^18", RegularColumn::Yes, ExistsColumn::No),
            (90, "-5^70,13^5,19^15", RegularColumn::Yes, ExistsColumn::Unknown),
            (95, "-5^75,14^1,19^19", RegularColumn::Yes, ExistsColumn::No),
        ];
        assert_eq!(rows.len(), expected.len());
        for ((row, _), (n, spec, regular, exists)) in rows.iter().zip(&expected) {
            assert_eq!(row.n, *n);
            assert_eq!(row.spectrum.render(), *spec);
            assert_eq!(row.regular, *regular, "regular column for {spec}");
            assert_eq!(row.exists, *exists, "exists column for {spec}");
        }
    }

    #[test]
    fn extremal_rows_14_to_23() {
        let rows = extremal_table(14..=23, &BigInt::from(-5), &Facts::builtin()).unwrap();
        let bounds: Vec<i64> = vec![30, 36, 42, 51, 61, 76, 96, 126, 176, 276];
        for (row, expected_n) in rows.iter().zip(&bounds) {
            assert_eq!(row.floor_bound, BigInt::from(*expected_n), "d = {}", row.d);
        }
        let expected_rules: Vec<ExtremalRule> = vec![
            ExtremalRule::SixDiagMultiplicity,                // d=14
            ExtremalRule::KnownConstruction,                  // d=15
            ExtremalRule::SixDiagMultiplicity,                // d=16
            ExtremalRule::EvenMultiplicityBound,              // d=17
            ExtremalRule::TraceCubeBound,                     // d=18
            ExtremalRule::NonexistenceFact(
                "GKMS-2016-Lemma-5.12-with-Azarija-Marc-2015".into(),
            ),                                                // d=19
            ExtremalRule::NonexistenceFact(
                "GKMS-2016-Lemma-5.12-with-Azarija-Marc-2016".into(),
            ),                                                // d=20
            ExtremalRule::KnownConstruction,                  // d=21
            ExtremalRule::KnownConstruction,                  // d=22
            ExtremalRule::KnownConstruction,                  // d=23
        ];
        for (row, rule) in rows.iter().zip(&expected_rules) {
            assert_eq!(&row.rule, rule, "rule for d = {}", row.d);
        }
        // d=17 must carry the rejected equality spectrum
        assert_eq!(
            rows[3].spectrum.as_ref().unwrap().render(),
            "-5^34,10^17"
        );
        assert_eq!(rows[4].spectrum.as_ref().unwrap().render(), "-5^43,11^9,12^1,13^8");
    }
}
