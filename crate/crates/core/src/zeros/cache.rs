//! Zero-cache text format.
//!
//! ```text
//! ZCACHE 1 <digits>
//! <index>\t<ordinate with exactly <digits> significant digits>
//! ```
//!
//! UTF-8, LF line endings, every line terminated, no blank lines.

use std::fs;
use std::io::Write;
use std::path::Path;

use rug::Float;
use thiserror::Error;

use crate::precision::digits_to_bits;

pub const CACHE_MAGIC: &str = "ZCACHE";
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CacheError {
    #[error("malformed cache header on line 1: {content:?}")]
    MalformedHeader { content: String },

    #[error("malformed cache record on line {line}: {content:?}")]
    MalformedRecord { line: usize, content: String },

    /// `index` is the 1-based position of the offending record in the file.
    #[error("non-monotone at index {index} (line {line})")]
    NonMonotone { index: usize, line: usize },

    #[error("digit-count mismatch on line {line}: expected {expected} significant digits, found {found}")]
    DigitMismatch {
        line: usize,
        expected: u32,
        found: u32,
    },

    #[error("cache io: {0}")]
    Io(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroRecord {
    /// 1-based, ordered by ordinate.
    pub index: usize,
    pub ordinate: Float,
    pub certified_digits: u32,
    /// |Z(ordinate)| at certification; `None` for records read from a file.
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCache {
    pub digits: u32,
    pub records: Vec<ZeroRecord>,
}

impl ZeroCache {
    pub fn new(digits: u32) -> Self {
        ZeroCache {
            digits,
            records: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Indices are exactly 1..=len.
    pub fn contiguous(&self) -> bool {
        self.records.iter().enumerate().all(|(i, r)| r.index == i + 1)
    }

    /// The first `m` records.
    pub fn truncated(&self, m: usize) -> ZeroCache {
        ZeroCache {
            digits: self.digits,
            records: self.records.iter().take(m).cloned().collect(),
        }
    }

    /// Checks positivity and strict monotonicity of indices and ordinates.
    pub fn validate(&self) -> Result<(), CacheError> {
        for (pos, r) in self.records.iter().enumerate() {
            let bad = r.index == 0
                || r.ordinate <= 0
                || pos > 0 && {
                    let prev = &self.records[pos - 1];
                    r.index <= prev.index || r.ordinate <= prev.ordinate
                };
            if bad {
                return Err(CacheError::NonMonotone {
                    index: pos + 1,
                    line: pos + 2,
                });
            }
        }
        Ok(())
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{CACHE_MAGIC} {CACHE_FORMAT_VERSION} {}\n", self.digits);
        for r in &self.records {
            out.push_str(&r.index.to_string());
            out.push('\t');
            out.push_str(&format_significant(&r.ordinate, self.digits));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<ZeroCache, CacheError> {
        if text.is_empty() {
            return Ok(ZeroCache::new(0));
        }
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = body.split('\n');
        let header = lines.next().unwrap_or_default();
        let digits = parse_header(header)?;
        let bits = digits_to_bits(digits);
        let mut cache = ZeroCache::new(digits);
        for (i, line) in lines.enumerate() {
            let line_no = i + 2;
            let malformed = || CacheError::MalformedRecord {
                line: line_no,
                content: line.to_string(),
            };
            let (index, value) = line.split_once('\t').ok_or_else(malformed)?;
            if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let index: usize = index.parse().map_err(|_| malformed())?;
            let found = significant_digits(value).ok_or_else(malformed)?;
            if found != digits {
                return Err(CacheError::DigitMismatch {
                    line: line_no,
                    expected: digits,
                    found,
                });
            }
            let ordinate = Float::with_val(bits, Float::parse(value).map_err(|_| malformed())?);
            cache.records.push(ZeroRecord {
                index,
                ordinate,
                certified_digits: digits,
                residual: None,
            });
            let pos = cache.records.len();
            if pos > 1 {
                let (a, b) = (&cache.records[pos - 2], &cache.records[pos - 1]);
                if b.index <= a.index || b.ordinate <= a.ordinate {
                    return Err(CacheError::NonMonotone {
                        index: pos,
                        line: line_no,
                    });
                }
            }
            if index == 0 || cache.records[pos - 1].ordinate <= 0 {
                return Err(CacheError::NonMonotone {
                    index: pos,
                    line: line_no,
                });
            }
        }
        Ok(cache)
    }
}

fn parse_header(line: &str) -> Result<u32, CacheError> {
    let bad = || CacheError::MalformedHeader {
        content: line.to_string(),
    };
    let mut parts = line.split(' ');
    let (Some(magic), Some(version), Some(digits), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err(bad());
    };
    if magic != CACHE_MAGIC || version != CACHE_FORMAT_VERSION.to_string() {
        return Err(bad());
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    match digits.parse::<u32>() {
        Ok(d) if d > 0 => Ok(d),
        _ => Err(bad()),
    }
}

/// Significant digits of a plain positional decimal (`123.450`), or `None`
/// when the text is not of that form.
fn significant_digits(s: &str) -> Option<u32> {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => {
            if f.is_empty() {
                return None;
            }
            (i, f)
        }
        None => (s, ""),
    };
    if int.is_empty() || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all: String = int.chars().chain(frac.chars()).collect();
    let trimmed = all.trim_start_matches('0');
    if trimmed.is_empty() {
        return None;
    }
    Some(trimmed.len() as u32)
}

/// Positional decimal for a positive `x` with exactly `digits` significant
/// digits, rounded to nearest.
pub fn format_significant(x: &Float, digits: u32) -> String {
    assert!(digits > 0, "need at least one significant digit");
    let (neg, mantissa, exp) = x.to_sign_string_exp(10, Some(digits as usize));
    let exp = exp.unwrap_or(0);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let n = mantissa.len() as i32;
    if exp <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-exp) as usize));
        out.push_str(&mantissa);
    } else if exp >= n {
        out.push_str(&mantissa);
        out.extend(std::iter::repeat('0').take((exp - n) as usize));
    } else {
        out.push_str(&mantissa[..exp as usize]);
        out.push('.');
        out.push_str(&mantissa[exp as usize..]);
    }
    out
}

/// Writes to a sibling temporary file and renames it into place.
pub fn cache_store(cache: &ZeroCache, destination: &Path) -> Result<(), CacheError> {
    cache.validate()?;
    let io = |e: std::io::Error| CacheError::Io(format!("{}: {e}", destination.display()));
    let name = destination
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "zeros".into());
    let tmp = destination.with_file_name(format!(".{name}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(cache.to_file_string().as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, destination)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io)
}

pub fn cache_load(source: &Path) -> Result<ZeroCache, CacheError> {
    let text = fs::read_to_string(source)
        .map_err(|e| CacheError::Io(format!("{}: {e}", source.display())))?;
    ZeroCache::parse(&text)
}
