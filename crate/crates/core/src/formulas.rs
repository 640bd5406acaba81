//! Literal evaluators for the closed-form expressions stated for degree tuples.
//!
//! These are transcriptions, not index computations: no tree is consulted and
//! anomalous outputs (e.g. a "min" above the "max") are returned as stated.
//! Comparing them against real trees is the claims module's job.
//!
//! Each formula fixes its own tuple orientation and rejects tuples in the other
//! order instead of re-sorting them:
//!
//! | id                | arity | orientation                     |
//! |-------------------|-------|---------------------------------|
//! | `three_c_max/min` | 3     | `d1 >= d2 >= d3`                |
//! | `hyp_four`        | 4     | `d1 >= d2 >= d3 >= d4`          |
//! | `hyp_four_bounds` | 4     | `d1 >= d2 >= d3 >= d4`          |
//! | `cor_diff_bound`  | 4     | `d1 >= d2 >= d3 >= d4`          |
//! | `cor_floor_bound` | 4     | `d1 >= d2 >= d3 >= d4`          |
//! | `sigma_five`      | 5     | `d1 <= d2 <= ... <= d5`         |
//! | `sigma_ordered`   | >= 1  | `d1 <= d2 <= ... <= dn`         |
//! | `cor3_part1`      | 2     | `(d3, d4)`, `3 < d3 <= d4`      |
//! | `figure_two`      | 5     | `(deg v0, deg v0,1 .. v0,4)`    |

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::FormulaError;

/// Degrees above this are rejected so every intermediate fits in `i128`.
pub const MAX_DEGREE: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    ThreeCMax,
    ThreeCMin,
    HypFour,
    HypFourBounds,
    CorDiffBound,
    CorFloorBound,
    SigmaFive,
    SigmaOrdered,
    Cor3Part1,
    FigureTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Orientation {
    NonIncreasing,
    NonDecreasing,
    Free,
}

impl FormulaId {
    pub const ALL: [FormulaId; 10] = [
        FormulaId::ThreeCMax,
        FormulaId::ThreeCMin,
        FormulaId::HypFour,
        FormulaId::HypFourBounds,
        FormulaId::CorDiffBound,
        FormulaId::CorFloorBound,
        FormulaId::SigmaFive,
        FormulaId::SigmaOrdered,
        FormulaId::Cor3Part1,
        FormulaId::FigureTwo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::ThreeCMax => "three_c_max",
            FormulaId::ThreeCMin => "three_c_min",
            FormulaId::HypFour => "hyp_four",
            FormulaId::HypFourBounds => "hyp_four_bounds",
            FormulaId::CorDiffBound => "cor_diff_bound",
            FormulaId::CorFloorBound => "cor_floor_bound",
            FormulaId::SigmaFive => "sigma_five",
            FormulaId::SigmaOrdered => "sigma_ordered",
            FormulaId::Cor3Part1 => "cor3_part1",
            FormulaId::FigureTwo => "figure_two",
        }
    }

    pub fn parse(s: &str) -> Result<FormulaId, FormulaError> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| FormulaError::UnknownId(s.to_string()))
    }

    fn arity(self) -> Option<usize> {
        match self {
            FormulaId::ThreeCMax | FormulaId::ThreeCMin => Some(3),
            FormulaId::HypFour
            | FormulaId::HypFourBounds
            | FormulaId::CorDiffBound
            | FormulaId::CorFloorBound => Some(4),
            FormulaId::SigmaFive | FormulaId::FigureTwo => Some(5),
            FormulaId::Cor3Part1 => Some(2),
            FormulaId::SigmaOrdered => None,
        }
    }

    fn orientation(self) -> Orientation {
        match self {
            FormulaId::SigmaFive | FormulaId::SigmaOrdered | FormulaId::Cor3Part1 => Orientation::NonDecreasing,
            FormulaId::FigureTwo => Orientation::Free,
            _ => Orientation::NonIncreasing,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaValue {
    Int(i64),
    Pair { max: i64, min: i64 },
    Predicate(bool),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub id: FormulaId,
    pub input: Vec<i64>,
    pub value: FormulaValue,
    pub notes: Vec<String>,
}

impl FormulaResult {
    /// The single value, the max of a pair, or 1/0 for a predicate.
    pub fn primary(&self) -> i64 {
        match self.value {
            FormulaValue::Int(v) => v,
            FormulaValue::Pair { max, .. } => max,
            FormulaValue::Predicate(b) => b as i64,
        }
    }

    /// The min of a max/min pair.
    pub fn secondary(&self) -> Option<i64> {
        match self.value {
            FormulaValue::Pair { min, .. } => Some(min),
            _ => None,
        }
    }
}

pub fn evaluate_formula(id: FormulaId, d: &[i64]) -> Result<FormulaResult, FormulaError> {
    check_domain(id, d)?;
    let w: Vec<i128> = d.iter().map(|&x| x as i128).collect();
    let narrow = |v: i128| i64::try_from(v).map_err(|_| FormulaError::Overflow(id.as_str()));
    let mut notes = Vec::new();
    let value = match id {
        FormulaId::ThreeCMax => FormulaValue::Int(narrow(three_c_max(w[0], w[1], w[2]))?),
        FormulaId::ThreeCMin => FormulaValue::Int(narrow(three_c_min(w[0], w[1], w[2]))?),
        FormulaId::HypFour => FormulaValue::Int(narrow(hyp_four(&w))?),
        FormulaId::HypFourBounds => {
            let (max, min) = hyp_four_bounds(&w);
            FormulaValue::Pair {
                max: narrow(max)?,
                min: narrow(min)?,
            }
        }
        FormulaId::CorDiffBound => {
            let (max, min) = hyp_four_bounds(&w);
            notes.push(format!("max - min = {}, 2*d1 = {}", max - min, 2 * w[0]));
            FormulaValue::Predicate(max - min < 2 * w[0])
        }
        FormulaId::CorFloorBound => FormulaValue::Int(narrow(floor_bound(w[0], w[3]))?),
        FormulaId::SigmaFive => FormulaValue::Int(narrow(sigma_five(&w))?),
        FormulaId::SigmaOrdered => FormulaValue::Int(narrow(sigma_ordered(&w))?),
        FormulaId::Cor3Part1 => {
            let (d3, d4) = (d[0] as u128, d[1] as u128);
            let k = 2 + (d4 - 2) / (d3 - 1);
            notes.push(format!(
                "log base {} of {}/{} compared with k = {k}",
                d4 - 2,
                2 * (d4 - 2),
                d3 - 1
            ));
            FormulaValue::Predicate(cor3_part1_holds(d[0], d[1]))
        }
        FormulaId::FigureTwo => FormulaValue::Int(narrow(figure_two(&w))?),
    };
    if matches!(id, FormulaId::ThreeCMax | FormulaId::ThreeCMin) {
        let (max, min) = (three_c_max(w[0], w[1], w[2]), three_c_min(w[0], w[1], w[2]));
        if min > max {
            notes.push(format!("stated min {min} exceeds stated max {max}"));
        }
    }
    Ok(FormulaResult {
        id,
        input: d.to_vec(),
        value,
        notes,
    })
}

fn check_domain(id: FormulaId, d: &[i64]) -> Result<(), FormulaError> {
    let name = id.as_str();
    match id.arity() {
        Some(k) if d.len() != k => {
            return Err(FormulaError::Arity {
                id: name,
                expected: k.to_string(),
                found: d.len(),
            })
        }
        None if d.is_empty() => {
            return Err(FormulaError::Arity {
                id: name,
                expected: "at least 1".into(),
                found: 0,
            })
        }
        _ => {}
    }
    let domain = |reason: String| Err(FormulaError::Domain { id: name, reason });
    if let Some(&x) = d.iter().find(|&&x| !(1..=MAX_DEGREE).contains(&x)) {
        return domain(format!("degree {x} outside 1..={MAX_DEGREE}"));
    }
    match id.orientation() {
        Orientation::NonIncreasing if d.windows(2).any(|w| w[0] < w[1]) => {
            return domain("expects d1 >= d2 >= ...".into());
        }
        Orientation::NonDecreasing if d.windows(2).any(|w| w[0] > w[1]) => {
            return domain("expects d1 <= d2 <= ...".into());
        }
        _ => {}
    }
    if id == FormulaId::Cor3Part1 {
        let (d3, d4) = (d[0], d[1]);
        if d3 <= 3 {
            return domain(format!("needs d3 > 3, got {d3}"));
        }
        if d4 <= 2 {
            return domain(format!("needs d4 > 2, got {d4}"));
        }
    }
    Ok(())
}

/// `(d1-1)^2 + (d2-1)^2 + (d3-1)(d3-2)(d1-d3)(d2-d3)`.
pub fn three_c_max(d1: i128, d2: i128, d3: i128) -> i128 {
    (d1 - 1).pow(2) + (d2 - 1).pow(2) + (d3 - 1) * (d3 - 2) * (d1 - d3) * (d2 - d3)
}

/// `(d1-1)^2 + (d3-1)^2 + (d2-1)(d2-2) + (d1-d3)`.
pub fn three_c_min(d1: i128, d2: i128, d3: i128) -> i128 {
    (d1 - 1).pow(2) + (d3 - 1).pow(2) + (d2 - 1) * (d2 - 2) + (d1 - d3)
}

/// `sum_{i<=3} (d_i-1)^2 + sum_{i<=3} (d4-d_i) + (d4-1)(d4-3)`.
pub fn hyp_four(d: &[i128]) -> i128 {
    let squares: i128 = d[..3].iter().map(|x| (x - 1).pow(2)).sum();
    let gaps: i128 = d[..3].iter().map(|x| d[3] - x).sum();
    squares + gaps + (d[3] - 1) * (d[3] - 3)
}

/// `(max, min)` with common part `sum_{i<=4} (d_i-1)^2`.
pub fn hyp_four_bounds(d: &[i128]) -> (i128, i128) {
    let base: i128 = d[..4].iter().map(|x| (x - 1).pow(2)).sum();
    let max = base + d[0] + d[1] - d[2] - 3 * d[3] + 2;
    let min = base + d[0] - d[1] - d[2] - d[3] + 2;
    (max, min)
}

/// `floor((d1^2 + d4^2) / 2)`.
pub fn floor_bound(d1: i128, d4: i128) -> i128 {
    (d1 * d1 + d4 * d4).div_euclid(2)
}

/// `sum_{i<=3} d_i d_{i+1}^2 + (d1-1)^3 + d4^3 + sum_{i<=4} (d_i - d_{i+1})^2`.
pub fn sigma_five(d: &[i128]) -> i128 {
    let cross: i128 = (0..3).map(|i| d[i] * d[i + 1] * d[i + 1]).sum();
    let steps: i128 = (0..4).map(|i| (d[i] - d[i + 1]).pow(2)).sum();
    cross + (d[0] - 1).pow(3) + d[3].pow(3) + steps
}

/// Ends `{1, n}` weighted `(d+1)(d-1)^2`, interior `(d+2)(d-1)^2`, plus
/// `sum_{i=2}^{n-1} (d_i - d_{i+1})^2 + 2n - 2`.
///
/// Applied to any ordering of the tuple; the orientation check lives in
/// [`evaluate_formula`].
pub fn sigma_ordered(d: &[i128]) -> i128 {
    let n = d.len();
    let cube = |x: i128, w: i128| (x + w) * (x - 1).pow(2);
    // {1, n} is a set: one term when n == 1
    let ends = if n == 1 {
        cube(d[0], 1)
    } else {
        cube(d[0], 1) + cube(d[n - 1], 1)
    };
    let interior: i128 = (1..n.saturating_sub(1)).map(|i| cube(d[i], 2)).sum();
    let steps: i128 = (1..n.saturating_sub(1)).map(|i| (d[i] - d[i + 1]).pow(2)).sum();
    ends + interior + steps + 2 * n as i128 - 2
}

/// `log_{d4-2}((2 d4 - 4) / (d3 - 1)) < 2 + floor((d4 - 2) / (d3 - 1))`,
/// decided exactly as `2 b < (d3 - 1) b^k` with `b = d4 - 2`.
///
/// Callers guarantee `3 < d3 <= d4`, so `b >= 2`.
pub fn cor3_part1_holds(d3: i64, d4: i64) -> bool {
    let b = (d4 - 2) as u128;
    let den = (d3 - 1) as u128;
    let k = 2 + b / den;
    let rhs = u32::try_from(k)
        .ok()
        .and_then(|k| b.checked_pow(k))
        .and_then(|p| p.checked_mul(den));
    match rhs {
        Some(rhs) => 2 * b < rhs,
        None => true,
    }
}

/// `sum_{i=1}^4 |deg v0 - deg v0,i| + 2 |deg v0,3 - 1| + 3 |deg v0,4 - 1|`.
pub fn figure_two(d: &[i128]) -> i128 {
    let spokes: i128 = d[1..5].iter().map(|x| (d[0] - x).abs()).sum();
    spokes + 2 * (d[3] - 1).abs() + 3 * (d[4] - 1).abs()
}
