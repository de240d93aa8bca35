//! OEIS cross-validation, offline-first.
//!
//! Registry sequences are checked against b-file fixtures committed under
//! the data directory, with a per-pairing shift table aligning the two index
//! conventions. Network access happens only in [`fetch_bfile`], only when
//! the `GRIDMATCH_OEIS_NETWORK` environment variable enables it, and never
//! from tests.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use gridmatch_core::sequences::{Registry, SequenceError};

/// Environment variable selecting the fixture directory.
pub const DATA_DIR_ENV: &str = "GRIDMATCH_DATA_DIR";
/// Environment variable that must be set (non-empty, not "0") before any
/// network fetch is attempted.
pub const NETWORK_ENV: &str = "GRIDMATCH_OEIS_NETWORK";

/// One OEIS entry as parsed from a b-file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSequence {
    pub oeis_id: String,
    /// Index of the first term, as printed in the b-file.
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

/// One row of the shift table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftEntry {
    pub name: String,
    pub oeis_id: String,
    /// Registry value s(n) sits at 0-based fixture position `n - 1 + shift`.
    pub shift: i64,
}

/// Verdict of a prefix match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchVerdict {
    Pass,
    MismatchAt {
        n: i64,
        registry: BigInt,
        fixture: BigInt,
    },
}

/// Result of matching one registry sequence against one fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixMatch {
    pub name: String,
    pub oeis_id: String,
    pub shift: i64,
    pub checked_from: i64,
    pub checked_to: i64,
    pub verdict: MatchVerdict,
}

#[derive(Debug)]
pub enum OeisError {
    MissingFixture { oeis_id: String, path: PathBuf },
    MissingShiftTable { path: PathBuf },
    MalformedLine { path: PathBuf, line: usize, text: String },
    EmptyFixture { oeis_id: String },
    BadId(String),
    Io(std::io::Error),
    Sequence(SequenceError),
    EmptyRange { name: String, oeis_id: String },
    NetworkDisabled,
    Network(String),
}

impl fmt::Display for OeisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OeisError::MissingFixture { oeis_id, path } => {
                write!(f, "no fixture for {oeis_id} (expected {})", path.display())
            }
            OeisError::MissingShiftTable { path } => {
                write!(f, "no shift table (expected {})", path.display())
            }
            OeisError::MalformedLine { path, line, text } => {
                write!(f, "{}:{line}: malformed b-file line {text:?}", path.display())
            }
            OeisError::EmptyFixture { oeis_id } => write!(f, "fixture {oeis_id} has no terms"),
            OeisError::BadId(id) => {
                write!(f, "{id:?} is not an OEIS id (expected A followed by digits)")
            }
            OeisError::Io(e) => write!(f, "{e}"),
            OeisError::Sequence(e) => write!(f, "{e}"),
            OeisError::EmptyRange { name, oeis_id } => {
                write!(f, "no overlapping indices between {name} and {oeis_id}")
            }
            OeisError::NetworkDisabled => {
                write!(f, "network fetch disabled; set {NETWORK_ENV}=1 to enable")
            }
            OeisError::Network(e) => write!(f, "network fetch failed: {e}"),
        }
    }
}

impl std::error::Error for OeisError {}

impl From<std::io::Error> for OeisError {
    fn from(e: std::io::Error) -> Self {
        OeisError::Io(e)
    }
}

impl From<SequenceError> for OeisError {
    fn from(e: SequenceError) -> Self {
        OeisError::Sequence(e)
    }
}

/// The fixture directory: `GRIDMATCH_DATA_DIR` when set, the crate's
/// committed `data/` directory otherwise.
pub fn default_data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

fn validate_id(oeis_id: &str) -> Result<&str, OeisError> {
    let digits = oeis_id.strip_prefix('A').unwrap_or("");
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(OeisError::BadId(oeis_id.to_owned()));
    }
    Ok(digits)
}

/// File name for an id: `A006253` -> `b006253.txt`.
pub fn fixture_file_name(oeis_id: &str) -> Result<String, OeisError> {
    Ok(format!("b{}.txt", validate_id(oeis_id)?))
}

/// Parses b-file text: `#` comment lines are ignored, data lines are
/// `n value`, and indices must be consecutive.
pub fn parse_bfile(oeis_id: &str, path: &Path, text: &str) -> Result<FixtureSequence, OeisError> {
    validate_id(oeis_id)?;
    let mut offset = None;
    let mut next_index = 0i64;
    let mut terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::MalformedLine {
            path: path.to_owned(),
            line: lineno + 1,
            text: raw.to_owned(),
        };
        let (index_text, value_text) = line.split_once(char::is_whitespace).ok_or_else(malformed)?;
        let index: i64 = index_text.parse().map_err(|_| malformed())?;
        let value: BigInt = value_text.trim().parse().map_err(|_| malformed())?;
        match offset {
            None => {
                offset = Some(index);
                next_index = index;
            }
            Some(_) if index != next_index => return Err(malformed()),
            Some(_) => {}
        }
        next_index += 1;
        terms.push(value);
    }
    let offset = offset.ok_or_else(|| OeisError::EmptyFixture {
        oeis_id: oeis_id.to_owned(),
    })?;
    Ok(FixtureSequence {
        oeis_id: oeis_id.to_owned(),
        offset,
        terms,
    })
}

/// Renders a fixture back to canonical b-file text.
pub fn render_bfile(fixture: &FixtureSequence) -> String {
    let mut out = String::new();
    for (i, term) in fixture.terms.iter().enumerate() {
        out.push_str(&format!("{} {}\n", fixture.offset + i as i64, term));
    }
    out
}

/// Loads a committed fixture from the data directory.
pub fn load_fixture(data_dir: &Path, oeis_id: &str) -> Result<FixtureSequence, OeisError> {
    let path = data_dir.join(fixture_file_name(oeis_id)?);
    let text = fs::read_to_string(&path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            OeisError::MissingFixture {
                oeis_id: oeis_id.to_owned(),
                path: path.clone(),
            }
        } else {
            OeisError::Io(e)
        }
    })?;
    parse_bfile(oeis_id, &path, &text)
}

/// Loads the shift table (`name oeis_id shift` lines) from the data
/// directory.
pub fn load_shift_table(data_dir: &Path) -> Result<Vec<ShiftEntry>, OeisError> {
    let path = data_dir.join("shifts.txt");
    let text = fs::read_to_string(&path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            OeisError::MissingShiftTable { path: path.clone() }
        } else {
            OeisError::Io(e)
        }
    })?;
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::MalformedLine {
            path: path.clone(),
            line: lineno + 1,
            text: raw.to_owned(),
        };
        let mut fields = line.split_whitespace();
        let name = fields.next().ok_or_else(malformed)?;
        let oeis_id = fields.next().ok_or_else(malformed)?;
        let shift: i64 = fields
            .next()
            .ok_or_else(malformed)?
            .parse()
            .map_err(|_| malformed())?;
        if fields.next().is_some() {
            return Err(malformed());
        }
        validate_id(oeis_id)?;
        entries.push(ShiftEntry {
            name: name.to_owned(),
            oeis_id: oeis_id.to_owned(),
            shift,
        });
    }
    Ok(entries)
}

/// Verifies registry `s(n)` = fixture term at position `n - 1 + shift` for
/// every index both sides cover, up to `n_max`. A value difference is a
/// verdict, not an error.
pub fn match_prefix(
    registry: &Registry,
    fixture: &FixtureSequence,
    name: &str,
    shift: i64,
    n_max: i64,
) -> Result<PrefixMatch, OeisError> {
    let def = registry
        .get(name)
        .ok_or_else(|| SequenceError::UnknownSequence(name.to_owned()))?;
    let index_base = def.recurrence.index_base;
    let checked_from = index_base.max(1 - shift);
    let checked_to = n_max.min(fixture.terms.len() as i64 - shift);
    if checked_from > checked_to {
        return Err(OeisError::EmptyRange {
            name: name.to_owned(),
            oeis_id: fixture.oeis_id.clone(),
        });
    }
    for n in checked_from..=checked_to {
        let registry_value = registry.eval_recurrence(name, n)?;
        let fixture_value = &fixture.terms[(n - 1 + shift) as usize];
        if registry_value != *fixture_value {
            return Ok(PrefixMatch {
                name: name.to_owned(),
                oeis_id: fixture.oeis_id.clone(),
                shift,
                checked_from,
                checked_to,
                verdict: MatchVerdict::MismatchAt {
                    n,
                    registry: registry_value,
                    fixture: fixture_value.clone(),
                },
            });
        }
    }
    Ok(PrefixMatch {
        name: name.to_owned(),
        oeis_id: fixture.oeis_id.clone(),
        shift,
        checked_from,
        checked_to,
        verdict: MatchVerdict::Pass,
    })
}

/// Fetches a b-file from the public OEIS URL scheme and stores it in the
/// data directory. Requires `GRIDMATCH_OEIS_NETWORK` to be enabled; tests
/// never call this.
pub fn fetch_bfile(data_dir: &Path, oeis_id: &str) -> Result<PathBuf, OeisError> {
    let enabled = std::env::var(NETWORK_ENV)
        .map(|v| !v.is_empty() && v != "0")
        .unwrap_or(false);
    if !enabled {
        return Err(OeisError::NetworkDisabled);
    }
    let digits = validate_id(oeis_id)?;
    let url = format!("https://oeis.org/A{digits}/b{digits}.txt");
    let body = ureq::get(&url)
        .call()
        .map_err(|e| OeisError::Network(e.to_string()))?
        .into_string()
        .map_err(|e| OeisError::Network(e.to_string()))?;
    let path = data_dir.join(fixture_file_name(oeis_id)?);
    // Parse before storing so a bad download never clobbers a good fixture.
    parse_bfile(oeis_id, &path, &body)?;
    fs::write(&path, body)?;
    Ok(path)
}
