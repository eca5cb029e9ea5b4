//! Tri-state outcomes for checks at finite truncation order.

use serde::Serialize;
use std::fmt;

/// Outcome of a check that truncated series cannot always decide: a
/// difference with no stored terms is invisible at the working order, so
/// equality-style questions get a third answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SeriesVerdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "indistinguishable-at-order")]
    IndistinguishableAtOrder,
}

impl SeriesVerdict {
    /// Worst-of combination: any failure dominates, then indistinguishable.
    pub fn combine<I: IntoIterator<Item = SeriesVerdict>>(verdicts: I) -> SeriesVerdict {
        let mut out = SeriesVerdict::Holds;
        for v in verdicts {
            match v {
                SeriesVerdict::Fails => return SeriesVerdict::Fails,
                SeriesVerdict::IndistinguishableAtOrder => {
                    out = SeriesVerdict::IndistinguishableAtOrder
                }
                SeriesVerdict::Holds => {}
            }
        }
        out
    }

    pub fn holds(&self) -> bool {
        matches!(self, SeriesVerdict::Holds)
    }
}

impl fmt::Display for SeriesVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesVerdict::Holds => write!(f, "holds"),
            SeriesVerdict::Fails => write!(f, "fails"),
            SeriesVerdict::IndistinguishableAtOrder => write!(f, "indistinguishable-at-order"),
        }
    }
}

/// Result of comparing two series in the total order of the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    IndistinguishableAtOrder,
}

/// How a series classifies against the scale: null means "no stored terms
/// below the knowledge order".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Infinitesimal,
    FiniteAppreciable,
    InfinitelyLarge,
    NullAtOrder,
}
