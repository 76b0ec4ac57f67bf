//! OEIS lookup: bundled b-file fixtures and an opt-in live search.
//!
//! Fixtures use the OEIS b-file layout (`n a(n)` per line, `#` comments) with
//! one file `bNNNNNN.txt` per sequence and an `index.txt` listing
//! `ANNNNNN offset` pairs.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use num_bigint::BigInt;
use thiserror::Error;

/// Prefixes shorter than this match too much to be informative.
pub const MIN_PREFIX: usize = 4;

/// Both this variable (set to `1`) and an explicit caller opt-in are needed
/// before anything touches the network.
pub const ONLINE_ENV: &str = "FIBFORM_ONLINE";

pub const DEFAULT_ENDPOINT: &str = "https://oeis.org/search";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("prefix has {0} terms; at least {MIN_PREFIX} are required")]
    PrefixTooShort(usize),
    #[error("malformed A-number {0:?}")]
    BadANumber(String),
    #[error("b-file line {line}: {message}")]
    BFile { line: usize, message: String },
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("network lookups are disabled (pass the online flag and set {ONLINE_ENV}=1)")]
    NetworkDisabled,
    #[error("request timed out after {0:?}")]
    Timeout(Duration),
    #[error("transport failure: {0}")]
    Transport(String),
    #[error("malformed response: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisEntry {
    pub a_number: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisHit {
    pub entry: OeisEntry,
    /// Position in `entry.terms` where the query starts.
    pub match_start: usize,
}

impl OeisHit {
    /// The sequence index of the first matched term.
    pub fn first_index(&self) -> i64 {
        self.entry.offset + self.match_start as i64
    }
}

pub fn is_a_number(s: &str) -> bool {
    s.len() == 7 && s.starts_with('A') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

fn a_number(s: &str) -> Result<String, OeisError> {
    if is_a_number(s) {
        Ok(s.to_string())
    } else {
        Err(OeisError::BadANumber(s.to_string()))
    }
}

/// `(n, a(n))` pairs of a b-file, comments and blank lines skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, OeisError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| OeisError::BFile { line: i + 1, message };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(format!("expected two fields, got {line:?}")));
        };
        let n: i64 = n.parse().map_err(|_| bad(format!("bad index {n:?}")))?;
        let v: BigInt = v.parse().map_err(|_| bad(format!("bad term {v:?}")))?;
        out.push((n, v));
    }
    Ok(out)
}

impl OeisEntry {
    pub fn new(a_num: &str, offset: i64, terms: Vec<BigInt>) -> Result<Self, OeisError> {
        if terms.is_empty() {
            return Err(OeisError::Fixture(format!("{a_num} has no terms")));
        }
        Ok(OeisEntry { a_number: a_number(a_num)?, offset, terms })
    }

    /// Indices must be consecutive.
    pub fn from_bfile(a_num: &str, text: &str) -> Result<Self, OeisError> {
        let pairs = parse_bfile(text)?;
        let offset = pairs.first().map_or(0, |p| p.0);
        for (k, (n, _)) in pairs.iter().enumerate() {
            if *n != offset + k as i64 {
                return Err(OeisError::Fixture(format!(
                    "{a_num}: index {n} breaks the run starting at {offset}"
                )));
            }
        }
        OeisEntry::new(a_num, offset, pairs.into_iter().map(|p| p.1).collect())
    }

    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            writeln!(out, "{} {}", self.offset + k as i64, t).unwrap();
        }
        out
    }

    /// `bNNNNNN.txt`
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.a_number[1..])
    }

    fn find(&self, prefix: &[BigInt]) -> Option<usize> {
        self.terms.windows(prefix.len()).position(|w| w == prefix)
    }
}

/// Terms `0..=40` of the generated fixtures.
pub const DERIVED_TERMS: i64 = 41;

/// Closed forms behind the generated fixtures: A-number, offset, expression.
pub const DERIVED_FORMULAS: [(&str, i64, &str); 3] = [
    ("A010049", 0, "(2n+3)/5*F(n) - n/5*F(n-1)"),
    ("A054454", 0, "4n/5*F(n+1) + (3n+3)/5*F(n) + 1/2 + 1/2*(-1)^n"),
    ("A129707", 0, "(5n^2-n-4)/25*F(n) + (5n^2+n)/50*F(n-1)"),
];

/// Evaluate `formula` at `offset .. offset + count`; every value must be an integer.
pub fn derived_entry(a_num: &str, offset: i64, formula: &str, count: i64) -> Result<OeisEntry, OeisError> {
    let expr = crate::parser::parse(formula).map_err(|e| OeisError::Fixture(format!("{a_num}: {e}")))?;
    let terms = (offset..offset + count)
        .map(|n| {
            let v = expr.evaluate(n);
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(OeisError::Fixture(format!("{a_num}: value {v} at n = {n} is not an integer")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    OeisEntry::new(a_num, offset, terms)
}

/// b-file text with a provenance header naming the generating formula.
pub fn derived_bfile(a_num: &str, offset: i64, formula: &str) -> Result<String, OeisError> {
    let entry = derived_entry(a_num, offset, formula, DERIVED_TERMS)?;
    Ok(format!("# {a_num}, generated by fibform from\n# {formula}\n{}", entry.to_bfile()))
}

/// A set of entries sorted by A-number.
#[derive(Debug, Clone, Default)]
pub struct FixtureSet {
    entries: Vec<OeisEntry>,
}

const BUNDLED: [(&str, &str); 5] = [
    ("A000045", include_str!("../fixtures/oeis/b000045.txt")),
    ("A001595", include_str!("../fixtures/oeis/b001595.txt")),
    ("A010049", include_str!("../fixtures/oeis/b010049.txt")),
    ("A054454", include_str!("../fixtures/oeis/b054454.txt")),
    ("A129707", include_str!("../fixtures/oeis/b129707.txt")),
];

const BUNDLED_INDEX: &str = include_str!("../fixtures/oeis/index.txt");

fn parse_index(text: &str) -> Result<Vec<(String, i64)>, OeisError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || OeisError::Fixture(format!("index line {}: {line:?}", i + 1));
        let mut f = line.split_whitespace();
        let (Some(a), Some(off), None) = (f.next(), f.next(), f.next()) else {
            return Err(bad());
        };
        out.push((a_number(a)?, off.parse().map_err(|_| bad())?));
    }
    Ok(out)
}

impl FixtureSet {
    pub fn new(mut entries: Vec<OeisEntry>) -> Self {
        entries.sort_by(|a, b| a.a_number.cmp(&b.a_number));
        FixtureSet { entries }
    }

    pub fn entries(&self) -> &[OeisEntry] {
        &self.entries
    }

    pub fn get(&self, a_number: &str) -> Option<&OeisEntry> {
        self.entries.iter().find(|e| e.a_number == a_number)
    }

    /// The fixtures compiled into the crate.
    pub fn bundled() -> Self {
        let index = parse_index(BUNDLED_INDEX).expect("bundled index is valid");
        let entries = BUNDLED
            .iter()
            .map(|(a, text)| {
                let e = OeisEntry::from_bfile(a, text).expect("bundled b-file is valid");
                debug_assert!(index.contains(&(a.to_string(), e.offset)));
                e
            })
            .collect();
        FixtureSet::new(entries)
    }

    /// Load `index.txt` and the b-files it names from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self, OeisError> {
        let index = parse_index(&std::fs::read_to_string(dir.join("index.txt"))?)?;
        let mut entries = Vec::with_capacity(index.len());
        for (a, offset) in index {
            let path = dir.join(format!("b{}.txt", &a[1..]));
            let entry = OeisEntry::from_bfile(&a, &std::fs::read_to_string(path)?)?;
            if entry.offset != offset {
                return Err(OeisError::Fixture(format!(
                    "{a}: index says offset {offset}, b-file starts at {}",
                    entry.offset
                )));
            }
            entries.push(entry);
        }
        Ok(FixtureSet::new(entries))
    }

    pub fn index_text(&self) -> String {
        self.entries.iter().map(|e| format!("{} {}\n", e.a_number, e.offset)).collect()
    }
}

fn check_prefix(prefix: &[BigInt]) -> Result<(), OeisError> {
    if prefix.len() < MIN_PREFIX {
        Err(OeisError::PrefixTooShort(prefix.len()))
    } else {
        Ok(())
    }
}

/// Every fixture containing `prefix` as a contiguous run (first occurrence).
pub fn search_local(prefix: &[BigInt], fixtures: &FixtureSet) -> Result<Vec<OeisHit>, OeisError> {
    check_prefix(prefix)?;
    Ok(fixtures
        .entries
        .iter()
        .filter_map(|e| e.find(prefix).map(|match_start| OeisHit { entry: e.clone(), match_start }))
        .collect())
}

/// Extract hits from an OEIS JSON search response.
///
/// Accepts both the bare-array layout and the older `{"results": [...]}`
/// object; only `number` and `data` are read. Entries whose data does not
/// contain the prefix contiguously are dropped.
pub fn parse_search_response(body: &str, prefix: &[BigInt]) -> Result<Vec<OeisHit>, OeisError> {
    let json: serde_json::Value =
        serde_json::from_str(body).map_err(|e| OeisError::Malformed(e.to_string()))?;
    let results = match &json {
        serde_json::Value::Array(a) => a.as_slice(),
        serde_json::Value::Null => &[],
        serde_json::Value::Object(o) => match o.get("results") {
            Some(serde_json::Value::Array(a)) => a.as_slice(),
            Some(serde_json::Value::Null) | None => &[],
            Some(_) => return Err(OeisError::Malformed("\"results\" is not an array".into())),
        },
        _ => return Err(OeisError::Malformed("unexpected top-level JSON value".into())),
    };
    let mut hits = Vec::new();
    for r in results {
        let number = r
            .get("number")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| OeisError::Malformed("result without integer \"number\"".into()))?;
        let data = r
            .get("data")
            .and_then(serde_json::Value::as_str)
            .ok_or_else(|| OeisError::Malformed(format!("A{number:06} has no \"data\" string")))?;
        let terms = data
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| OeisError::Malformed(format!("A{number:06} data: {e}")))?;
        let entry = OeisEntry::new(&format!("A{number:06}"), 0, terms)?;
        if let Some(match_start) = entry.find(prefix) {
            hits.push(OeisHit { entry, match_start });
        }
    }
    Ok(hits)
}

/// Blocking client for the public OEIS search endpoint.
#[derive(Debug, Clone)]
pub struct OeisClient {
    pub endpoint: String,
    pub timeout: Duration,
}

impl OeisClient {
    pub fn new(timeout: Duration) -> Self {
        OeisClient { endpoint: DEFAULT_ENDPOINT.to_string(), timeout }
    }

    pub fn query_string(prefix: &[BigInt]) -> String {
        prefix.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }

    #[cfg(feature = "remote")]
    pub fn search(&self, prefix: &[BigInt]) -> Result<Vec<OeisHit>, OeisError> {
        check_prefix(prefix)?;
        let agent = ureq::AgentBuilder::new().timeout(self.timeout).build();
        let resp = agent
            .get(&self.endpoint)
            .query("q", &Self::query_string(prefix))
            .query("fmt", "json")
            .call()
            .map_err(|e| self.classify(e))?;
        let body = resp.into_string().map_err(|e| match e.kind() {
            std::io::ErrorKind::TimedOut | std::io::ErrorKind::WouldBlock => {
                OeisError::Timeout(self.timeout)
            }
            _ => OeisError::Transport(e.to_string()),
        })?;
        parse_search_response(&body, prefix)
    }

    #[cfg(not(feature = "remote"))]
    pub fn search(&self, prefix: &[BigInt]) -> Result<Vec<OeisHit>, OeisError> {
        check_prefix(prefix)?;
        Err(OeisError::Transport("built without the `remote` feature".into()))
    }

    #[cfg(feature = "remote")]
    fn classify(&self, e: ureq::Error) -> OeisError {
        match e {
            ureq::Error::Status(code, _) => OeisError::Transport(format!("HTTP status {code}")),
            ureq::Error::Transport(t) => {
                let io_timeout = std::error::Error::source(&t)
                    .and_then(|s| s.downcast_ref::<std::io::Error>())
                    .is_some_and(|io| {
                        matches!(io.kind(), std::io::ErrorKind::TimedOut | std::io::ErrorKind::WouldBlock)
                    });
                if io_timeout || t.to_string().contains("timed out") {
                    OeisError::Timeout(self.timeout)
                } else {
                    OeisError::Transport(t.to_string())
                }
            }
        }
    }
}

/// True when the environment permits live lookups.
pub fn network_permitted() -> bool {
    std::env::var(ONLINE_ENV).is_ok_and(|v| v == "1")
}

/// Live search against oeis.org; refused unless [`network_permitted`].
pub fn search_remote(prefix: &[BigInt], timeout: Duration) -> Result<Vec<OeisHit>, OeisError> {
    check_prefix(prefix)?;
    if !network_permitted() {
        return Err(OeisError::NetworkDisabled);
    }
    OeisClient::new(timeout).search(prefix)
}
