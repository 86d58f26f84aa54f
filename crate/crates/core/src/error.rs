use core::fmt;

/// Why an input point list is not a valid convex polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectionKind {
    TooFew,
    NonFinite,
    Duplicate,
    Collinear,
    NotConvex,
}

/// An input rejection and the first offending index in the caller's order.
/// For `TooFew` the index is the number of points supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rejection {
    pub kind: RejectionKind,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DispersionError {
    RejectedInput(Rejection),
    /// `k` outside the range the operation accepts for `n` points.
    InvalidK { k: usize, n: usize },
    /// A chord or bisector query with both endpoints on the same vertex.
    DegeneratePair(usize),
    /// Fewer than three vertices where a triple is required.
    TooFew { n: usize },
    /// Exhaustive enumeration would visit more subsets than allowed.
    TooLarge { subsets: u128, limit: u128 },
}

impl fmt::Display for RejectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RejectionKind::TooFew => "fewer than three points",
            RejectionKind::NonFinite => "non-finite coordinate",
            RejectionKind::Duplicate => "duplicate point",
            RejectionKind::Collinear => "three consecutive points are collinear",
            RejectionKind::NotConvex => "points are not in strictly convex order",
        })
    }
}

impl fmt::Display for DispersionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DispersionError::RejectedInput(Rejection { kind, index }) => {
                write!(f, "rejected input: {kind} (at index {index})")
            }
            DispersionError::InvalidK { k, n } => write!(f, "invalid k={k} for n={n} points"),
            DispersionError::DegeneratePair(i) => {
                write!(f, "degenerate pair: both endpoints are vertex {i}")
            }
            DispersionError::TooFew { n } => write!(f, "need at least 3 vertices, got {n}"),
            DispersionError::TooLarge { subsets, limit } => {
                write!(f, "{subsets} subsets exceed the enumeration limit {limit}")
            }
        }
    }
}

impl core::error::Error for DispersionError {}
