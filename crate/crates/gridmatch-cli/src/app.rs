//! Command dispatch: argument definitions, batch runners, and the
//! expected-finding ledgers that decide the exit status.
//!
//! Exit-status contract: 0 when every executed check matched its expected
//! status, 1 when any check deviated, 2 for usage errors (unknown
//! subcommand, family, identity, sequence, table, or OEIS id).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use gridmatch_core::families::{Catalog, DefectPos, Family, FamilyError, FamilyStatus, LayerPos, PinVerdict};
use gridmatch_core::identities::{check_identity, IdentityCatalog, IdentityError, IdentityReport};
use gridmatch_core::sequences::{AuditVerdict, FormValue, RecurrenceSpec, Registry, SequenceError};

use crate::oeis::{self, MatchVerdict, OeisError};
use crate::render::{Cell, Format, TableDoc};
use crate::tables::{self, TableError};

#[derive(Parser)]
#[command(
    name = "gridmatch",
    version,
    about = "Exact matching counts for layered graph grids, with identity checks, \
             closed-form audits, geometry pins, and OEIS cross-checks"
)]
pub struct Cli {
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Markdown)]
    pub format: FormatArg,

    /// Directory holding the OEIS fixtures and shift table.
    #[arg(long, global = true, value_name = "DIR")]
    pub data_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Markdown,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    /// Layer-sweep dynamic programming (fast, any depth).
    Layered,
    /// Exhaustive branching over all matchings (slow, small graphs only).
    Oracle,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the exact matching count of one family at one index.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Backend::Layered)]
        backend: Backend,
    },
    /// Regenerate one of the eight reference tables from the registry.
    Table {
        /// Table index, 1 through 8.
        index: u32,
    },
    /// Check identity records in printed and corrected forms.
    Verify {
        /// Check a single record instead of the whole catalog.
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, default_value_t = 20)]
        nmax: i64,
    },
    /// Audit published and corrected closed forms against recurrences.
    Audit {
        /// Audit a single sequence instead of every one with a closed form.
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long, default_value_t = 40)]
        nmax: i64,
    },
    /// Recount families with the exhaustive oracle and compare with the
    /// registered sequences.
    Pin {
        /// Pin a single family instead of the whole catalog.
        #[arg(long)]
        family: Option<String>,
        /// Largest index to recount (default: the family's documented range).
        #[arg(long)]
        nmax: Option<i64>,
    },
    /// Match registry sequences against the committed OEIS fixtures.
    Oeis {
        /// Check only the pairings citing this OEIS id (e.g. A001353).
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 20)]
        nmax: i64,
        /// Refetch the b-files first (requires GRIDMATCH_OEIS_NETWORK=1).
        #[arg(long)]
        refresh: bool,
    },
    /// List the sequence registry.
    Registry,
    /// List the family catalog.
    Catalog,
}

/// What a finished command hands back to `main`.
pub struct Outcome {
    pub text: String,
    /// False when some executed check deviated from its expected status.
    pub all_matched: bool,
}

#[derive(Debug)]
pub enum AppError {
    /// Bad request: unknown name or index. Exit status 2.
    Usage(String),
    /// The command itself could not run to completion. Exit status 1.
    Failed(String),
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Usage(msg) | AppError::Failed(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for AppError {}

impl From<SequenceError> for AppError {
    fn from(e: SequenceError) -> Self {
        match e {
            SequenceError::UnknownSequence(_) => AppError::Usage(e.to_string()),
            other => AppError::Failed(other.to_string()),
        }
    }
}

impl From<FamilyError> for AppError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::UnknownFamily(_) => AppError::Usage(e.to_string()),
            other => AppError::Failed(other.to_string()),
        }
    }
}

impl From<IdentityError> for AppError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::UnknownIdentity(_) => AppError::Usage(e.to_string()),
            other => AppError::Failed(other.to_string()),
        }
    }
}

impl From<TableError> for AppError {
    fn from(e: TableError) -> Self {
        match e {
            TableError::UnknownTable(_) => AppError::Usage(e.to_string()),
            other => AppError::Failed(other.to_string()),
        }
    }
}

impl From<OeisError> for AppError {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::BadId(_) | OeisError::MissingFixture { .. } => {
                AppError::Usage(e.to_string())
            }
            other => AppError::Failed(other.to_string()),
        }
    }
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::Failed(e.to_string())
    }
}

/// Runs one parsed command against fresh registry/catalog instances.
pub fn run(cli: Cli) -> Result<Outcome, AppError> {
    let registry = Registry::standard();
    let catalog = Catalog::standard();
    let identities = IdentityCatalog::standard();
    let data_dir = cli
        .data_dir
        .clone()
        .unwrap_or_else(oeis::default_data_dir);
    let format = Format::from(cli.format);

    match &cli.command {
        Command::Count { family, n, backend } => run_count(&catalog, family, *n, *backend),
        Command::Table { index } => {
            let doc = tables::table(*index, &registry, &data_dir)?;
            Ok(Outcome {
                text: doc.render(format)?,
                all_matched: true,
            })
        }
        Command::Verify { identity, nmax } => {
            run_verify(&registry, &identities, identity.as_deref(), *nmax, format)
        }
        Command::Audit { sequence, nmax } => {
            run_audit(&registry, sequence.as_deref(), *nmax, format)
        }
        Command::Pin { family, nmax } => {
            run_pin(&registry, &catalog, family.as_deref(), *nmax, format)
        }
        Command::Oeis { id, nmax, refresh } => run_oeis(
            &registry,
            &data_dir,
            id.as_deref(),
            *nmax,
            *refresh,
            format,
        ),
        Command::Registry => run_registry(&registry, format),
        Command::Catalog => run_catalog(&catalog, format),
    }
}

fn run_count(
    catalog: &Catalog,
    family: &str,
    n: i64,
    backend: Backend,
) -> Result<Outcome, AppError> {
    let count = match backend {
        Backend::Layered => catalog.count_layered(family, n)?,
        Backend::Oracle => catalog.count_oracle(family, n)?,
    };
    Ok(Outcome {
        text: format!("{count}\n"),
        all_matched: true,
    })
}

// --- verify -----------------------------------------------------------

fn failure_text(report: &IdentityReport) -> (String, String) {
    let printed = match &report.printed_failure {
        None => "passes".to_owned(),
        Some(f) => format!("first failure: {f}"),
    };
    let corrected = if !report.has_correction {
        "(no correction needed)".to_owned()
    } else {
        match &report.corrected_failure {
            None => "passes".to_owned(),
            Some(f) => format!("first failure: {f}"),
        }
    };
    (printed, corrected)
}

fn run_verify(
    registry: &Registry,
    identities: &IdentityCatalog,
    identity: Option<&str>,
    nmax: i64,
    format: Format,
) -> Result<Outcome, AppError> {
    let records: Vec<_> = match identity {
        Some(name) => vec![identities
            .get(name)
            .ok_or_else(|| AppError::Usage(format!("unknown identity {name:?}")))?],
        None => identities.records().iter().collect(),
    };

    let mut doc = TableDoc::new(
        format!("Identity checks, n up to {nmax}"),
        &["identity", "expected", "printed", "corrected", "status", "ms"],
    );
    let mut all_matched = true;
    for record in records {
        let started = Instant::now();
        let report = check_identity(registry, record, nmax)?;
        let elapsed = started.elapsed().as_secs_f64() * 1e3;
        let (printed, corrected) = failure_text(&report);
        let status = if report.matches_expectation {
            "as expected"
        } else {
            all_matched = false;
            "UNEXPECTED"
        };
        doc.push_row(vec![
            Cell::text(report.name),
            Cell::text(report.expected.to_string()),
            Cell::text(printed),
            Cell::text(corrected),
            Cell::text(status),
            Cell::text(format!("{elapsed:.1}")),
        ]);
    }
    doc.push_note(summary_note(all_matched, doc.rows.len(), "identity record"));
    Ok(Outcome {
        text: doc.render(format)?,
        all_matched,
    })
}

// --- audit ------------------------------------------------------------

/// The audit findings this build expects: the published closed forms for
/// f, h, V, and N are wrong in known ways; every other published form and
/// every corrected form tracks its recurrence.
enum ExpectedAudit {
    Clean,
    /// First mismatch at `n` with the given rendered value, or any
    /// irrational value when `value` is None.
    MismatchAt { n: i64, value: Option<&'static str> },
}

fn expected_audit(name: &str) -> ExpectedAudit {
    match name {
        // Published conjugate terms joined with the wrong sign: the sqrt(5)
        // parts never cancel, so the value is irrational from the start.
        "f" => ExpectedAudit::MismatchAt { n: 0, value: None },
        // Published exponent n+1 where the values demand n.
        "h" => ExpectedAudit::MismatchAt {
            n: 1,
            value: Some("3"),
        },
        // Published prefactor sqrt(10)/40 with exponent n: off by the
        // factor lost when the two conjugate differences are not shifted.
        "V" => ExpectedAudit::MismatchAt {
            n: 1,
            value: Some("1/2"),
        },
        // Published alternating sign +1/7 where the system demands -1/7.
        "N" => ExpectedAudit::MismatchAt {
            n: 1,
            value: Some("5/7"),
        },
        _ => ExpectedAudit::Clean,
    }
}

fn verdict_matches(expected: &ExpectedAudit, verdict: &AuditVerdict) -> bool {
    match (expected, verdict) {
        (ExpectedAudit::Clean, AuditVerdict::Clean) => true,
        (
            ExpectedAudit::MismatchAt { n, value },
            AuditVerdict::FirstMismatch { n: found_n, found, .. },
        ) => {
            if n != found_n {
                return false;
            }
            match (value, found) {
                (None, FormValue::Irrational(_)) => true,
                (Some(text), FormValue::Rational(r)) => r.to_string() == *text,
                _ => false,
            }
        }
        _ => false,
    }
}

fn verdict_text(verdict: &AuditVerdict) -> String {
    match verdict {
        AuditVerdict::Clean => "clean".to_owned(),
        AuditVerdict::FirstMismatch { n, found, expected } => match found {
            FormValue::Rational(r) => {
                format!("first mismatch at n = {n}: form gives {r}, recurrence gives {expected}")
            }
            FormValue::Irrational(s) => {
                format!("first mismatch at n = {n}: form is irrational ({s})")
            }
        },
    }
}

fn run_audit(
    registry: &Registry,
    sequence: Option<&str>,
    nmax: i64,
    format: Format,
) -> Result<Outcome, AppError> {
    let names: Vec<&str> = match sequence {
        Some(name) => {
            // Force the unknown-name error through the usual path.
            registry
                .get(name)
                .ok_or_else(|| SequenceError::UnknownSequence(name.to_owned()))?;
            vec![registry.get(name).expect("just checked").name]
        }
        None => registry
            .defs()
            .filter(|def| def.closed_form.is_some() || def.published_form.is_some())
            .map(|def| def.name)
            .collect(),
    };

    let mut doc = TableDoc::new(
        format!("Closed-form audits, n up to {nmax}"),
        &["sequence", "range", "published form", "corrected form", "status"],
    );
    let mut all_matched = true;
    for name in names {
        let def = registry.get(name).expect("name comes from the registry");
        let mut range = String::new();

        let published = if def.published_form.is_some() {
            let audit = registry.audit_published_form(name, nmax)?;
            write!(range, "{}..={}", audit.from, audit.to).expect("write to string");
            let matched = verdict_matches(&expected_audit(name), &audit.verdict);
            if !matched {
                all_matched = false;
            }
            (verdict_text(&audit.verdict), matched)
        } else {
            ("(none)".to_owned(), true)
        };

        let corrected = if def.closed_form.is_some() {
            let audit = registry.audit_closed_form(name, nmax)?;
            if range.is_empty() {
                write!(range, "{}..={}", audit.from, audit.to).expect("write to string");
            }
            let matched = audit.verdict == AuditVerdict::Clean;
            if !matched {
                all_matched = false;
            }
            (verdict_text(&audit.verdict), matched)
        } else {
            ("(none)".to_owned(), true)
        };

        if range.is_empty() {
            range = "-".to_owned();
        }
        let status = if published.1 && corrected.1 {
            "as expected"
        } else {
            "UNEXPECTED"
        };
        doc.push_row(vec![
            Cell::text(name),
            Cell::text(range),
            Cell::text(published.0),
            Cell::text(corrected.0),
            Cell::text(status),
        ]);
    }
    doc.push_note(summary_note(all_matched, doc.rows.len(), "closed-form audit"));
    Ok(Outcome {
        text: doc.render(format)?,
        all_matched,
    })
}

// --- pin --------------------------------------------------------------

/// The pin outcomes this build expects. Every established family agrees
/// with its sequence; the candidate q agrees (and is promoted); the
/// candidate S construction is a documented near miss that deviates at
/// n = 2.
enum ExpectedPin {
    Agrees,
    DisagreesAt(i64),
}

fn expected_pin(family: &str) -> ExpectedPin {
    match family {
        "S" => ExpectedPin::DisagreesAt(2),
        _ => ExpectedPin::Agrees,
    }
}

fn pin_matches(expected: &ExpectedPin, verdict: &PinVerdict) -> bool {
    match (expected, verdict) {
        (ExpectedPin::Agrees, PinVerdict::Agrees) => true,
        (ExpectedPin::DisagreesAt(n), PinVerdict::DisagreesAt { n: found, .. }) => n == found,
        _ => false,
    }
}

fn status_text(status: FamilyStatus) -> &'static str {
    match status {
        FamilyStatus::Established => "established",
        FamilyStatus::Candidate => "candidate",
    }
}

fn run_pin(
    registry: &Registry,
    catalog: &Catalog,
    family: Option<&str>,
    nmax: Option<i64>,
    format: Format,
) -> Result<Outcome, AppError> {
    let families: Vec<&Family> = match family {
        Some(name) => vec![catalog
            .get(name)
            .ok_or_else(|| AppError::Usage(format!("unknown family {name:?}")))?],
        None => catalog.families().collect(),
    };

    let mut doc = TableDoc::new(
        "Geometry pins: oracle recounts vs registered sequences",
        &["family", "sequence", "status", "range", "counts", "verdict", "ms"],
    );
    let mut all_matched = true;
    for fam in families {
        let n_max = nmax.unwrap_or(fam.pin_max);
        let started = Instant::now();
        let report = catalog.pin(registry, fam.name, n_max)?;
        let elapsed = started.elapsed().as_secs_f64() * 1e3;

        let counts: Vec<String> = report
            .values
            .iter()
            .map(|(_, count)| count.to_string())
            .collect();
        let verdict = match &report.verdict {
            PinVerdict::Agrees if report.promoted => "agrees (candidate promoted)".to_owned(),
            PinVerdict::Agrees => "agrees".to_owned(),
            PinVerdict::DisagreesAt { n, count, expected } => {
                format!("disagrees at n = {n}: oracle {count}, sequence {expected}")
            }
        };
        if !pin_matches(&expected_pin(fam.name), &report.verdict) {
            all_matched = false;
        }
        doc.push_row(vec![
            Cell::text(fam.name),
            Cell::text(report.sequence),
            Cell::text(status_text(report.status)),
            Cell::text(format!("{}..={}", fam.min_n, n_max)),
            Cell::text(counts.join(", ")),
            Cell::text(verdict),
            Cell::text(format!("{elapsed:.1}")),
        ]);
    }

    if family.is_none() {
        let unresolved = catalog.unresolved_sequences(registry);
        doc.push_note(format!(
            "Unresolved sequences (registry entries with no cataloged construction): {}.",
            unresolved.join(", ")
        ));
    }
    doc.push_note(summary_note(all_matched, doc.rows.len(), "geometry pin"));
    Ok(Outcome {
        text: doc.render(format)?,
        all_matched,
    })
}

// --- oeis -------------------------------------------------------------

fn run_oeis(
    registry: &Registry,
    data_dir: &std::path::Path,
    id: Option<&str>,
    nmax: i64,
    refresh: bool,
    format: Format,
) -> Result<Outcome, AppError> {
    let table = oeis::load_shift_table(data_dir)?;
    let entries: Vec<_> = match id {
        Some(id) => {
            let filtered: Vec<_> = table.iter().filter(|e| e.oeis_id == id).collect();
            if filtered.is_empty() {
                // Either a fixture nobody cites or no fixture at all; the
                // loader distinguishes the two cases in its error.
                oeis::load_fixture(data_dir, id)?;
                return Err(AppError::Usage(format!(
                    "no registered pairing cites {id}"
                )));
            }
            filtered
        }
        None => table.iter().collect(),
    };

    if refresh {
        let mut ids: Vec<&str> = entries.iter().map(|e| e.oeis_id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        for id in ids {
            oeis::fetch_bfile(data_dir, id)?;
        }
    }

    let mut doc = TableDoc::new(
        format!("OEIS prefix checks, n up to {nmax}"),
        &["sequence", "OEIS id", "shift", "checked", "verdict"],
    );
    let mut all_matched = true;
    for entry in entries {
        let fixture = oeis::load_fixture(data_dir, &entry.oeis_id)?;
        let report = oeis::match_prefix(registry, &fixture, &entry.name, entry.shift, nmax)?;
        let verdict = match &report.verdict {
            MatchVerdict::Pass => "pass".to_owned(),
            MatchVerdict::MismatchAt { n, registry, fixture } => {
                all_matched = false;
                format!("mismatch at n = {n}: registry {registry}, fixture {fixture}")
            }
        };
        doc.push_row(vec![
            Cell::text(entry.name.clone()),
            Cell::text(entry.oeis_id.clone()),
            Cell::int(entry.shift),
            Cell::text(format!("{}..={}", report.checked_from, report.checked_to)),
            Cell::text(verdict),
        ]);
    }
    doc.push_note(summary_note(all_matched, doc.rows.len(), "prefix check"));
    Ok(Outcome {
        text: doc.render(format)?,
        all_matched,
    })
}

// --- registry / catalog listings ---------------------------------------

fn recurrence_text(rec: &RecurrenceSpec) -> String {
    let mut text = "s(n) = ".to_owned();
    let mut first = true;
    for (i, &coeff) in rec.coeffs.iter().enumerate() {
        if coeff == 0 {
            continue;
        }
        let magnitude = coeff.abs();
        if first {
            if coeff < 0 {
                text.push('-');
            }
            first = false;
        } else if coeff < 0 {
            text.push_str(" - ");
        } else {
            text.push_str(" + ");
        }
        if magnitude != 1 {
            write!(text, "{magnitude}*").expect("write to string");
        }
        write!(text, "s(n-{})", i + 1).expect("write to string");
    }
    let constant = rec.affine_constant;
    if constant != 0 {
        if first {
            write!(text, "{constant}").expect("write to string");
        } else if constant < 0 {
            write!(text, " - {}", -constant).expect("write to string");
        } else {
            write!(text, " + {constant}").expect("write to string");
        }
    }
    text
}

fn run_registry(registry: &Registry, format: Format) -> Result<Outcome, AppError> {
    let mut doc = TableDoc::new(
        "Sequence registry",
        &["sequence", "recurrence", "first values", "forms", "description"],
    );
    for def in registry.defs() {
        let prefix = registry
            .sequence_prefix(def.name, def.recurrence.index_base + def.recurrence.order as i64)?;
        let initial: Vec<String> = prefix
            .iter()
            .enumerate()
            .map(|(i, v)| format!("s({}) = {}", def.recurrence.index_base + i as i64, v))
            .collect();
        let forms = match (&def.closed_form, &def.published_form) {
            (Some(_), Some(_)) => "corrected + published",
            (Some(_), None) => "corrected",
            (None, Some(_)) => "published",
            (None, None) => "-",
        };
        doc.push_row(vec![
            Cell::text(def.name),
            Cell::text(recurrence_text(&def.recurrence)),
            Cell::text(initial.join(", ")),
            Cell::text(forms),
            Cell::text(def.description),
        ]);
    }
    Ok(Outcome {
        text: doc.render(format)?,
        all_matched: true,
    })
}

fn defect_text(defects: &[DefectPos]) -> String {
    if defects.is_empty() {
        return "-".to_owned();
    }
    let parts: Vec<String> = defects
        .iter()
        .map(|d| match d.layer {
            LayerPos::Abs(layer) => format!("({}, {})", d.base_index, layer),
            LayerPos::Last => format!("({}, last)", d.base_index),
        })
        .collect();
    parts.join(" ")
}

fn run_catalog(catalog: &Catalog, format: Format) -> Result<Outcome, AppError> {
    let mut doc = TableDoc::new(
        "Family catalog",
        &["family", "base", "layers", "defects", "sequence", "status", "pin range", "description"],
    );
    for fam in catalog.families() {
        doc.push_row(vec![
            Cell::text(fam.name),
            Cell::text(fam.base.to_string()),
            Cell::text(fam.layers.to_string()),
            Cell::text(defect_text(&fam.defects)),
            Cell::text(fam.sequence),
            Cell::text(status_text(fam.status)),
            Cell::text(format!("{}..={}", fam.min_n, fam.pin_max)),
            Cell::text(fam.description),
        ]);
    }
    doc.push_note(
        "Defects are (base vertex, layer) pairs removed from the product; \
         `last` resolves to the final layer at each n.",
    );
    Ok(Outcome {
        text: doc.render(format)?,
        all_matched: true,
    })
}

fn summary_note(all_matched: bool, rows: usize, unit: &str) -> String {
    let plural = if rows == 1 { "" } else { "s" };
    if all_matched {
        format!("{rows} {unit}{plural} checked; every outcome matched its expected status.")
    } else {
        format!(
            "{rows} {unit}{plural} checked; AT LEAST ONE OUTCOME DEVIATED from its expected status."
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, AppError> {
        let cli = Cli::try_parse_from(args).expect("arguments parse");
        run(cli)
    }

    #[test]
    fn count_prints_the_bare_integer() {
        let out = run_args(&["gridmatch", "count", "--family", "V", "--n", "4"]).unwrap();
        assert_eq!(out.text, "145\n");
        let out = run_args(&[
            "gridmatch", "count", "--family", "V", "--n", "4", "--backend", "oracle",
        ])
        .unwrap();
        assert_eq!(out.text, "145\n");
    }

    #[test]
    fn verify_matches_expectations_end_to_end() {
        let out = run_args(&["gridmatch", "verify"]).unwrap();
        assert!(out.all_matched);
        assert!(out.text.contains("as expected"));
        assert!(!out.text.contains("UNEXPECTED"));

        let out = run_args(&["gridmatch", "verify", "--identity", "v-product", "--nmax", "12"])
            .unwrap();
        assert!(out.all_matched);
    }

    #[test]
    fn audit_reports_the_four_published_defects() {
        let out = run_args(&["gridmatch", "audit"]).unwrap();
        assert!(out.all_matched, "expected findings should all match");
        assert!(out.text.contains("form gives 1/2"));
        assert!(out.text.contains("form gives 5/7"));
        assert!(out.text.contains("irrational"));
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        assert!(matches!(
            run_args(&["gridmatch", "count", "--family", "nope", "--n", "3"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["gridmatch", "verify", "--identity", "nope"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["gridmatch", "audit", "--sequence", "nope"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["gridmatch", "table", "9"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["gridmatch", "pin", "--family", "nope"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            run_args(&["gridmatch", "oeis", "--id", "A998877"]),
            Err(AppError::Usage(_))
        ));
    }

    #[test]
    fn recurrence_rendering_folds_signs() {
        let rec = RecurrenceSpec {
            order: 3,
            coeffs: vec![3, 3, -1],
            index_base: 1,
            initial_values: vec![2.into(), 9.into(), 32.into()],
            affine_constant: 0,
        };
        assert_eq!(recurrence_text(&rec), "s(n) = 3*s(n-1) + 3*s(n-2) - s(n-3)");

        let rec = RecurrenceSpec {
            order: 2,
            coeffs: vec![4, -1],
            index_base: 1,
            initial_values: vec![2.into(), 6.into()],
            affine_constant: -1,
        };
        assert_eq!(recurrence_text(&rec), "s(n) = 4*s(n-1) - s(n-2) - 1");
    }

    #[test]
    fn pin_single_family_honors_nmax_flag() {
        let out = run_args(&["gridmatch", "pin", "--family", "B", "--nmax", "3"]).unwrap();
        assert!(out.all_matched);
        assert!(out.text.contains("1, 4, 15"));
        assert!(out.text.contains("agrees"));
    }
}
