//! Command execution and report rendering for the CLI and the C API.
//!
//! Every command produces a `Report` with a fixed key set; the JSON
//! rendering is deterministic, so identical inputs give byte-identical
//! output. Failures map to stable error codes and process exit codes.

use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::catalog::NoSuchCase;
use crate::classify3::{raymond_classify, Classify3Error, SeifertOrbitData};
use crate::classify4::{
    enumerate_arc_cases, euler_check, Classify4Error, FixedPointConfig, TwoPointData,
};
use crate::doc::{serialize, Document, ParseError, ParsedDocument, Seifert3Doc};
use crate::intform::{ClassifyError, ElemOp, IntSymMatrix, MatrixError};
use crate::orbit::WeightedOrbitSpace;
use crate::plumbing::{assemble_chain, PlumbingChain, PlumbingError};

/// Stable error codes of the front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCode {
    Parse,
    Legality,
    Unsupported,
    Incompatible,
    NotUnimodular,
    NoSuchCase,
    Internal,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Parse => "E_PARSE",
            ErrorCode::Legality => "E_LEGALITY",
            ErrorCode::Unsupported => "E_UNSUPPORTED",
            ErrorCode::Incompatible => "E_INCOMPATIBLE",
            ErrorCode::NotUnimodular => "E_NOT_UNIMODULAR",
            ErrorCode::NoSuchCase => "E_NO_SUCH_CASE",
            ErrorCode::Internal => "E_INTERNAL",
        }
    }

    /// Process exit code: 2 parse, 3 data errors, 4 unsupported
    /// configuration, 5 internal-invariant failure.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCode::Parse => 2,
            ErrorCode::Legality
            | ErrorCode::Incompatible
            | ErrorCode::NotUnimodular
            | ErrorCode::NoSuchCase => 3,
            ErrorCode::Unsupported => 4,
            ErrorCode::Internal => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("[{}] {message}", code.as_str())]
pub struct CliError {
    pub code: ErrorCode,
    pub message: String,
}

impl CliError {
    fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(ErrorCode::Parse, e.to_string())
    }
}

impl From<PlumbingError> for CliError {
    fn from(e: PlumbingError) -> Self {
        let code = match &e {
            PlumbingError::IllegalWeights { .. } | PlumbingError::IllegalSpace { .. } => {
                ErrorCode::Legality
            }
            PlumbingError::UnsupportedConfiguration { .. } => ErrorCode::Unsupported,
            PlumbingError::IncompatibleWeights { .. } => ErrorCode::Incompatible,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        let code = match &e {
            ClassifyError::NotUnimodular { .. } => ErrorCode::NotUnimodular,
            ClassifyError::NoSuchSum { .. } => ErrorCode::NoSuchCase,
            ClassifyError::TooLarge { .. } => ErrorCode::Unsupported,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<Classify3Error> for CliError {
    fn from(e: Classify3Error) -> Self {
        CliError::new(ErrorCode::Legality, e.to_string())
    }
}

impl From<Classify4Error> for CliError {
    fn from(e: Classify4Error) -> Self {
        match e {
            Classify4Error::Plumbing(p) => p.into(),
            Classify4Error::Form(f) => f.into(),
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::new(ErrorCode::Internal, e.to_string())
    }
}

impl From<NoSuchCase> for CliError {
    fn from(e: NoSuchCase) -> Self {
        CliError::new(ErrorCode::NoSuchCase, e.to_string())
    }
}

/// The CLI commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Validate,
    Classify3,
    Classify4,
    Plumb,
    Reduce,
    Enumerate,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Validate => "validate",
            CommandKind::Classify3 => "classify3",
            CommandKind::Classify4 => "classify4",
            CommandKind::Plumb => "plumb",
            CommandKind::Reduce => "reduce",
            CommandKind::Enumerate => "enumerate",
        }
    }
}

/// Execution options shared by all commands.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Bound on alpha for `enumerate`.
    pub k_max: i64,
    /// Include reduction steps in classification reports.
    pub trace: bool,
    /// Treat notes as errors.
    pub strict: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            k_max: 12,
            trace: false,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputInfo {
    pub kind: String,
    pub canonical: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ViolationInfo {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LegalitySection {
    pub legal: bool,
    pub violations: Vec<ViolationInfo>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ChainSection {
    pub blocks: Vec<String>,
    pub omegas: Vec<i64>,
    pub t: usize,
    pub m: usize,
    pub l: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InvariantsSection {
    pub rank: usize,
    pub signature: [usize; 2],
    pub determinant: Value,
    pub parity: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CaseRow {
    pub b_start: i64,
    pub b_end: i64,
    pub arc: String,
    pub alpha: i64,
    pub beta: i64,
    pub eps_start: i64,
    pub eps_end: i64,
    pub omega1: i64,
    pub omega2: i64,
    #[serde(rename = "QM")]
    pub qm: Vec<Vec<Value>>,
    pub manifold: String,
    pub orientation_partner: [i64; 2],
}

/// A machine-readable report. Keys are fixed; sections not produced by a
/// command are omitted.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Report {
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub legality: Option<LegalitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainSection>,
    #[serde(rename = "B0", skip_serializing_if = "Option::is_none")]
    pub b0: Option<Vec<Vec<Value>>>,
    #[serde(rename = "QM", skip_serializing_if = "Option::is_none")]
    pub qm: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction_steps: Option<Vec<[i64; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub manifold: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extendable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_check: Option<bool>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<Vec<CaseRow>>,
}

impl Report {
    fn bare(kind: &str, canonical: String) -> Report {
        Report {
            input: InputInfo {
                kind: kind.to_string(),
                canonical,
            },
            legality: None,
            chain: None,
            b0: None,
            qm: None,
            invariants: None,
            reduction_steps: None,
            reduced: None,
            manifold: None,
            extendable: None,
            euler_check: None,
            notes: Vec::new(),
            cases: None,
        }
    }

    /// Deterministic JSON rendering.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input ({}):\n", self.input.kind));
        for line in self.input.canonical.lines() {
            out.push_str(&format!("  {line}\n"));
        }
        if let Some(leg) = &self.legality {
            if leg.legal {
                out.push_str("legality: legal\n");
            } else {
                out.push_str("legality: ILLEGAL\n");
                for v in &leg.violations {
                    match v.line {
                        Some(line) => {
                            out.push_str(&format!("  - [{}] (line {line}) {}\n", v.kind, v.message))
                        }
                        None => out.push_str(&format!("  - [{}] {}\n", v.kind, v.message)),
                    }
                }
            }
        }
        if let Some(chain) = &self.chain {
            out.push_str(&format!(
                "chain: {} | omegas {} | t={} m={} l={}\n",
                chain.blocks.join("-"),
                chain
                    .omegas
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                chain.t,
                chain.m,
                chain.l
            ));
        }
        if let Some(b0) = &self.b0 {
            out.push_str("B0:\n");
            push_matrix(&mut out, b0);
        }
        if let Some(qm) = &self.qm {
            out.push_str("QM:\n");
            push_matrix(&mut out, qm);
        }
        if let Some(inv) = &self.invariants {
            out.push_str(&format!(
                "invariants: rank {} signature ({},{}) det {} {}\n",
                inv.rank, inv.signature[0], inv.signature[1], inv.determinant, inv.parity
            ));
        }
        if let Some(steps) = &self.reduction_steps {
            let rendered = steps
                .iter()
                .map(|s| format!("({},{};{})", s[0], s[1], s[2]))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!(
                "reduction: {}\n",
                if rendered.is_empty() {
                    "none"
                } else {
                    &rendered
                }
            ));
        }
        if let Some(reduced) = &self.reduced {
            out.push_str("reduced:\n");
            push_matrix(&mut out, reduced);
        }
        if let Some(m) = &self.manifold {
            out.push_str(&format!("manifold: {m}\n"));
        }
        if let Some(e) = self.extendable {
            out.push_str(&format!("extendable: {e}\n"));
        }
        if let Some(e) = self.euler_check {
            out.push_str(&format!("euler_check: {e}\n"));
        }
        if let Some(cases) = &self.cases {
            out.push_str("cases (b' b'' | eps' eps'' omega1 | alpha beta omega2 | manifold):\n");
            for c in cases {
                out.push_str(&format!(
                    "  {:>2} {:>2} | {:>2} {:>2} {:>2} | {:>2} {:>2} {:>3} | {}\n",
                    c.b_start,
                    c.b_end,
                    c.eps_start,
                    c.eps_end,
                    c.omega1,
                    c.alpha,
                    c.beta,
                    c.omega2,
                    c.manifold
                ));
            }
        }
        if !self.notes.is_empty() {
            out.push_str("notes:\n");
            for n in &self.notes {
                out.push_str(&format!("  - {n}\n"));
            }
        }
        out
    }
}

fn push_matrix(out: &mut String, rows: &[Vec<Value>]) {
    if rows.is_empty() {
        out.push_str("  []\n");
        return;
    }
    for row in rows {
        let line = row
            .iter()
            .map(|v| match v {
                Value::Number(n) => n.to_string(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("  [{line}]\n"));
    }
}

fn bigint_value(v: &num_bigint::BigInt) -> Value {
    match v.to_i64() {
        Some(small) => Value::from(small),
        None => Value::from(v.to_string()),
    }
}

fn matrix_values(m: &IntSymMatrix) -> Vec<Vec<Value>> {
    m.rows()
        .into_iter()
        .map(|row| row.iter().map(bigint_value).collect())
        .collect()
}

fn invariants_section(m: &IntSymMatrix) -> InvariantsSection {
    let inv = m.invariants();
    InvariantsSection {
        rank: inv.rank,
        signature: [inv.positive, inv.negative],
        determinant: bigint_value(&inv.determinant),
        parity: inv.parity.to_string(),
    }
}

fn chain_section(chain: &PlumbingChain) -> ChainSection {
    ChainSection {
        blocks: chain
            .blocks()
            .iter()
            .map(|b| b.family().to_string())
            .collect(),
        omegas: chain.omegas(),
        t: chain.t(),
        m: chain.sphere_count(),
        l: chain.point_count(),
    }
}

fn legality_section(space: &WeightedOrbitSpace, spans: &crate::doc::ItemSpans) -> LegalitySection {
    use crate::orbit::{SegmentLocation, Violation};
    let report = space.validate_legality();
    let violations = report
        .violations
        .iter()
        .map(|v| {
            let line = match v {
                Violation::AdjacencyDeterminant { location, .. } => match location {
                    SegmentLocation::Arc { arc, .. } => spans.arcs.get(*arc).copied(),
                    SegmentLocation::Circle { circle, .. } => spans.circles.get(*circle).copied(),
                },
                Violation::EndpointCondition { arc, .. } => spans.arcs.get(*arc).copied(),
                Violation::WeightSum { .. } => None,
                Violation::CircleForbidden { circle } => spans.circles.get(*circle).copied(),
            };
            ViolationInfo {
                kind: format!("{:?}", v.kind()),
                message: v.to_string(),
                line,
            }
        })
        .collect();
    LegalitySection {
        legal: report.is_legal(),
        violations,
    }
}

/// Result of a successful execution: the report plus the exit code the
/// process should use (validate reports violations rather than failing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub report: Report,
    pub exit_code: i32,
}

/// Execute a command against a parsed document (`enumerate` takes none).
pub fn execute(
    command: CommandKind,
    doc: Option<&ParsedDocument>,
    options: &RunOptions,
) -> Result<RunOutput, CliError> {
    let output = match command {
        CommandKind::Enumerate => run_enumerate(options),
        _ => {
            let parsed = doc.ok_or_else(|| {
                CliError::new(
                    ErrorCode::Unsupported,
                    format!("command `{}` requires an input document", command.name()),
                )
            })?;
            match command {
                CommandKind::Validate => run_validate(parsed),
                CommandKind::Classify3 => run_classify3(parsed),
                CommandKind::Classify4 => run_classify4(parsed, options),
                CommandKind::Plumb => run_plumb(parsed),
                CommandKind::Reduce => run_reduce(parsed),
                CommandKind::Enumerate => unreachable!(),
            }
        }
    }?;
    if options.strict && !output.report.notes.is_empty() {
        return Err(CliError::new(
            ErrorCode::Internal,
            format!(
                "strict mode: {} note(s) treated as errors: {}",
                output.report.notes.len(),
                output.report.notes.join("; ")
            ),
        ));
    }
    Ok(output)
}

fn run_validate(parsed: &ParsedDocument) -> Result<RunOutput, CliError> {
    let Document::OrbitSpace4(space) = &parsed.document else {
        return Err(CliError::new(
            ErrorCode::Unsupported,
            format!(
                "command `validate` requires an orbitspace4 document, found `{}`",
                parsed.document.kind()
            ),
        ));
    };
    let mut report = Report::bare("orbitspace4", serialize(&parsed.document));
    let legality = legality_section(space, &parsed.spans);
    let exit_code = if legality.legal { 0 } else { 3 };
    report.legality = Some(legality);
    Ok(RunOutput { report, exit_code })
}

fn run_classify3(parsed: &ParsedDocument) -> Result<RunOutput, CliError> {
    let Document::Seifert3(raw) = &parsed.document else {
        return Err(CliError::new(
            ErrorCode::Unsupported,
            format!(
                "command `classify3` requires a seifert3 document, found `{}`",
                parsed.document.kind()
            ),
        ));
    };
    let data = seifert_data(raw)?;
    let manifold = raymond_classify(&data)?;
    let mut report = Report::bare("seifert3", serialize(&parsed.document));
    if data.is_twisted_bundle_case() {
        report.notes.push(
            "non-orientable case without special boundary: one twisted bundle plus g+hbar-2 untwisted copies (proof-consistent convention)"
                .to_string(),
        );
    }
    report.manifold = Some(manifold.to_string());
    Ok(RunOutput {
        report,
        exit_code: 0,
    })
}

fn seifert_data(raw: &Seifert3Doc) -> Result<SeifertOrbitData, CliError> {
    Ok(SeifertOrbitData::new(
        raw.b,
        raw.surface,
        raw.genus,
        raw.fixed_circles,
        raw.special_circles,
        raw.exceptional.clone(),
    )?)
}

fn run_classify4(parsed: &ParsedDocument, options: &RunOptions) -> Result<RunOutput, CliError> {
    match &parsed.document {
        Document::Config(config) => {
            let outcome = crate::classify4::classify_config(config)?;
            let passes = euler_check(config, &outcome.manifold);
            let mut report = Report::bare("config", serialize(&parsed.document));
            report.legality = Some(LegalitySection {
                legal: true,
                violations: Vec::new(),
            });
            report.chain = Some(chain_section(&outcome.trace.chain));
            report.b0 = Some(matrix_values(&outcome.trace.intersection_matrix));
            report.qm = Some(matrix_values(&outcome.trace.intersection_form));
            report.invariants = Some(invariants_section(&outcome.trace.intersection_form));
            if options.trace {
                if let Some(reduction) = &outcome.trace.reduction {
                    report.reduction_steps = Some(
                        reduction
                            .steps
                            .iter()
                            .map(|s| [s.i as i64, s.j as i64, s.k])
                            .collect(),
                    );
                    report.reduced = Some(matrix_values(&reduction.matrix));
                }
            }
            report.manifold = Some(outcome.manifold.to_string());
            report.extendable = Some(outcome.extendable);
            report.euler_check = Some(passes);
            report.notes.extend(outcome.trace.notes.iter().cloned());
            if let FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc)) = config {
                if arc.segments().len() > 1 {
                    report.notes.push(MULTI_SEGMENT_NOTE.to_string());
                }
            }
            if !passes {
                return Err(CliError::new(
                    ErrorCode::Internal,
                    "Euler characteristic cross-check failed",
                ));
            }
            Ok(RunOutput {
                report,
                exit_code: 0,
            })
        }
        Document::OrbitSpace4(space) => {
            let space = space.clone().with_simply_connected_target(true);
            let legality = legality_section(&space, &parsed.spans);
            if !legality.legal {
                let messages = legality
                    .violations
                    .iter()
                    .map(|v| v.message.clone())
                    .collect::<Vec<_>>()
                    .join("; ");
                return Err(CliError::new(
                    ErrorCode::Legality,
                    format!("orbit space is not legally weighted: {messages}"),
                ));
            }
            let chain = assemble_chain(&space)?;
            let b0 = chain.intersection_matrix();
            let qm = chain.intersection_form();
            let manifold = qm.classify()?;
            let mut report = Report::bare("orbitspace4", serialize(&parsed.document));
            report.legality = Some(legality);
            report.chain = Some(chain_section(&chain));
            report.b0 = Some(matrix_values(&b0));
            report.qm = Some(matrix_values(&qm));
            report.invariants = Some(invariants_section(&qm));
            if options.trace && qm.size() <= 3 {
                let reduction = qm.reduce_trace()?;
                report.reduction_steps = Some(
                    reduction
                        .steps
                        .iter()
                        .map(|s| [s.i as i64, s.j as i64, s.k])
                        .collect(),
                );
                report.reduced = Some(matrix_values(&reduction.matrix));
                if reduction.exhausted {
                    report.notes.push(
                        "reduction search exhausted; representative derived from invariants".into(),
                    );
                }
            }
            let chi_fixed = 2 * space.spheres().len() as i64
                + space.points().len() as i64
                + space
                    .arcs()
                    .iter()
                    .map(|a| a.segments().len() as i64 + 1)
                    .sum::<i64>();
            let passes = manifold.euler_characteristic4() == Some(chi_fixed);
            report.manifold = Some(manifold.to_string());
            report.extendable = Some(space.circles().is_empty());
            report.euler_check = Some(passes);
            if space.arcs().iter().any(|a| a.segments().len() > 1) {
                report.notes.push(MULTI_SEGMENT_NOTE.to_string());
            }
            if !passes {
                return Err(CliError::new(
                    ErrorCode::Internal,
                    "Euler characteristic cross-check failed",
                ));
            }
            Ok(RunOutput {
                report,
                exit_code: 0,
            })
        }
        other => Err(CliError::new(
            ErrorCode::Unsupported,
            format!(
                "command `classify4` requires an orbitspace4 or config document, found `{}`",
                other.kind()
            ),
        )),
    }
}

const MULTI_SEGMENT_NOTE: &str =
    "multi-segment arc assembly uses the natural vertex-matching rule; derived, not verified against the published tables";

fn run_plumb(parsed: &ParsedDocument) -> Result<RunOutput, CliError> {
    let Document::OrbitSpace4(space) = &parsed.document else {
        return Err(CliError::new(
            ErrorCode::Unsupported,
            format!(
                "command `plumb` requires an orbitspace4 document, found `{}`",
                parsed.document.kind()
            ),
        ));
    };
    let legality = legality_section(space, &parsed.spans);
    if !legality.legal {
        let messages = legality
            .violations
            .iter()
            .map(|v| v.message.clone())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(CliError::new(
            ErrorCode::Legality,
            format!("orbit space is not legally weighted: {messages}"),
        ));
    }
    let chain = assemble_chain(space)?;
    let mut report = Report::bare("orbitspace4", serialize(&parsed.document));
    report.legality = Some(legality);
    report.chain = Some(chain_section(&chain));
    report.b0 = Some(matrix_values(&chain.intersection_matrix()));
    report.qm = Some(matrix_values(&chain.intersection_form()));
    report.invariants = Some(invariants_section(&chain.intersection_form()));
    if space.arcs().iter().any(|a| a.segments().len() > 1) {
        report.notes.push(MULTI_SEGMENT_NOTE.to_string());
    }
    Ok(RunOutput {
        report,
        exit_code: 0,
    })
}

fn run_reduce(parsed: &ParsedDocument) -> Result<RunOutput, CliError> {
    let Document::Matrix(matrix) = &parsed.document else {
        return Err(CliError::new(
            ErrorCode::Unsupported,
            format!(
                "command `reduce` requires a matrix document, found `{}`",
                parsed.document.kind()
            ),
        ));
    };
    let mut report = Report::bare("matrix", serialize(&parsed.document));
    report.qm = Some(matrix_values(matrix));
    report.invariants = Some(invariants_section(matrix));
    let reduction = matrix.reduce_trace()?;
    report.reduction_steps = Some(
        reduction
            .steps
            .iter()
            .map(|s: &ElemOp| [s.i as i64, s.j as i64, s.k])
            .collect(),
    );
    report.reduced = Some(matrix_values(&reduction.matrix));
    if reduction.exhausted {
        report
            .notes
            .push("reduction search exhausted; representative derived from invariants".into());
    }
    if let Ok(manifold) = matrix.classify() {
        report.manifold = Some(manifold.to_string());
    }
    Ok(RunOutput {
        report,
        exit_code: 0,
    })
}

fn run_enumerate(options: &RunOptions) -> Result<RunOutput, CliError> {
    if options.k_max < 2 {
        return Err(CliError::new(
            ErrorCode::Unsupported,
            format!("enumerate requires k-max >= 2, got {}", options.k_max),
        ));
    }
    let cases = enumerate_arc_cases(options.k_max);
    let mut report = Report::bare("enumerate", format!("k_max={}\n", options.k_max));
    report.cases = Some(
        cases
            .iter()
            .map(|c| CaseRow {
                b_start: c.family.0,
                b_end: c.family.1,
                arc: c.arc.to_string(),
                alpha: c.alpha,
                beta: c.beta,
                eps_start: c.eps_start,
                eps_end: c.eps_end,
                omega1: c.omega1,
                omega2: c.omega2,
                qm: matrix_values(&c.intersection_form),
                manifold: c.manifold.to_string(),
                orientation_partner: [c.orientation_partner.0, c.orientation_partner.1],
            })
            .collect(),
    );
    report.notes.push(
        "families (0,-1) and (-1,0) are an orientation pair, as are (0,0) and (-1,-1); alpha/beta columns use the larger-beta orientation"
            .to_string(),
    );
    Ok(RunOutput {
        report,
        exit_code: 0,
    })
}

/// Convenience wrapper: parse bytes and execute, for the C API.
pub fn run_on_bytes(
    command: CommandKind,
    input: Option<&[u8]>,
    options: &RunOptions,
) -> Result<RunOutput, CliError> {
    let parsed = match input {
        Some(bytes) => Some(crate::doc::parse(bytes)?),
        None => None,
    };
    execute(command, parsed.as_ref(), options)
}
