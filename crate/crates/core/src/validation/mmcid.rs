//! MMCID grammar: `DF-MC-` YYYY `-` NNN.
//!
//! The year is four ASCII digits in 1970..=9999 and the serial exactly three
//! ASCII digits (`000` allowed). Matching is case-sensitive.
//!
//! The check is a left-to-right scan over [`ScanState`], so the whole
//! language can be explored state by state rather than string by string.

use super::diagnostic::{Code, Diagnostic};

const PREFIX: &[u8; 6] = b"DF-MC-";
pub const MIN_YEAR: u16 = 1970;

/// Scanner state after consuming a prefix of the candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanState {
    /// `n` characters of `DF-MC-` matched, `n < 6`.
    Prefix(u8),
    /// Inside the year; `digits` read so far with running `value`.
    Year { digits: u8, value: u16 },
    /// Inside the serial; year already accepted.
    Serial { digits: u8 },
    /// No continuation can be valid.
    Reject,
}

impl ScanState {
    pub const START: ScanState = ScanState::Prefix(0);

    pub fn step(self, ch: char) -> ScanState {
        match self {
            ScanState::Prefix(n) => {
                if ch == PREFIX[n as usize] as char {
                    if n as usize + 1 == PREFIX.len() {
                        ScanState::Year {
                            digits: 0,
                            value: 0,
                        }
                    } else {
                        ScanState::Prefix(n + 1)
                    }
                } else {
                    ScanState::Reject
                }
            }
            ScanState::Year { digits: 4, value } => {
                if ch == '-' && value >= MIN_YEAR {
                    ScanState::Serial { digits: 0 }
                } else {
                    ScanState::Reject
                }
            }
            ScanState::Year { digits, value } => match ch.to_digit(10) {
                Some(d) if ch.is_ascii_digit() => ScanState::Year {
                    digits: digits + 1,
                    value: value * 10 + d as u16,
                },
                _ => ScanState::Reject,
            },
            ScanState::Serial { digits } if digits < 3 && ch.is_ascii_digit() => {
                ScanState::Serial { digits: digits + 1 }
            }
            ScanState::Serial { .. } | ScanState::Reject => ScanState::Reject,
        }
    }

    pub fn accepts(self) -> bool {
        self == ScanState::Serial { digits: 3 }
    }
}

pub fn scan(s: &str) -> ScanState {
    s.chars().fold(ScanState::START, ScanState::step)
}

pub fn is_valid_mmcid(s: &str) -> bool {
    scan(s).accepts()
}

/// Checks an MMCID, returning a `DFMC-E001` diagnostic when malformed.
pub fn validate_mmcid(s: &str) -> Result<(), Diagnostic> {
    if is_valid_mmcid(s) {
        Ok(())
    } else {
        Err(Diagnostic::new(
            Code::MalformedMmcid,
            "identification.mmcid",
            format!("`{s}` does not match DF-MC-YYYY-NNN (year 1970-9999, three-digit serial)"),
        ))
    }
}

/// Regular expression equivalent of the grammar, used by the emitted schema.
pub const MMCID_PATTERN: &str = "^DF-MC-(19[7-9][0-9]|[2-9][0-9]{3})-[0-9]{3}$";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(validate_mmcid("DF-MC-2025-001").is_ok());
        assert!(validate_mmcid("DF-MC-1970-000").is_ok());
        assert!(validate_mmcid("DF-MC-9999-999").is_ok());
        let diag = validate_mmcid("DF-MC-2025-1").unwrap_err();
        assert_eq!(diag.code, Code::MalformedMmcid);
        assert_eq!(
            validate_mmcid("df-mc-2025-001").unwrap_err().code,
            Code::MalformedMmcid
        );
    }

    #[test]
    fn rejects_near_misses() {
        for s in [
            "",
            "DF-MC-",
            "DF-MC-1969-001",
            "DF-MC-0999-001",
            "DF-MC-2025-0001",
            "DF-MC-2025001",
            "DF-MC-25-001",
            "DF-MC-2025-00a",
            " DF-MC-2025-001",
            "DF-MC-2025-001 ",
            "DF-MC-２０２５-001",
            "DF-MC-2025-001\n",
            "DFMC-2025-001",
        ] {
            assert!(!is_valid_mmcid(s), "{s:?}");
        }
    }

    #[test]
    fn non_ascii_digits_are_rejected() {
        // U+0663 ARABIC-INDIC DIGIT THREE has a decimal value but is not ASCII.
        assert!(!is_valid_mmcid("DF-MC-2025-00\u{0663}"));
        assert!(!is_valid_mmcid("DF-MC-202\u{0663}-001"));
    }
}
