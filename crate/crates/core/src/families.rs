//! Forbidden cycle-length sets.
//!
//! Textual grammar (whitespace ignored):
//!
//! | form          | meaning                      |
//! |---------------|------------------------------|
//! | `{4,5}`       | explicit finite set          |
//! | `[4,9]`       | closed interval              |
//! | `[5,inf)`     | every length `>= 5`          |
//! | `2Z+2`        | `{2i + 2 : i >= 1}`          |
//!
//! Families are normalized on construction so that equal sets print equally:
//! a contiguous finite set of two or more lengths becomes an interval, a
//! one-element interval becomes a finite set and a step-1 progression becomes
//! a ray.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("cycle length {0} is below 3")]
    TooShort(i64),
    #[error("empty cycle family")]
    EmptySet,
    #[error("interval [{0},{1}] is empty")]
    EmptyInterval(usize, usize),
    #[error("progression step must be at least 1")]
    BadStep,
    #[error("cannot parse cycle family {0:?}")]
    Syntax(String),
}

/// A set `I` of cycle lengths, all at least 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CycleFamily {
    FiniteSet(Vec<usize>),
    Interval(usize, usize),
    Ray(usize),
    /// `{step * i + offset : i >= 1}`.
    Progression { step: usize, offset: i64 },
}

impl CycleFamily {
    pub fn finite<I: IntoIterator<Item = usize>>(lengths: I) -> Result<Self, FamilyError> {
        let mut v: Vec<usize> = lengths.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        match (v.first(), v.last()) {
            (None, _) | (_, None) => Err(FamilyError::EmptySet),
            (Some(&lo), _) if lo < 3 => Err(FamilyError::TooShort(lo as i64)),
            (Some(&lo), Some(&hi)) if v.len() >= 2 && hi - lo + 1 == v.len() => {
                Ok(CycleFamily::Interval(lo, hi))
            }
            _ => Ok(CycleFamily::FiniteSet(v)),
        }
    }

    pub fn interval(lo: usize, hi: usize) -> Result<Self, FamilyError> {
        if lo < 3 {
            return Err(FamilyError::TooShort(lo as i64));
        }
        match hi.cmp(&lo) {
            std::cmp::Ordering::Less => Err(FamilyError::EmptyInterval(lo, hi)),
            std::cmp::Ordering::Equal => Ok(CycleFamily::FiniteSet(vec![lo])),
            std::cmp::Ordering::Greater => Ok(CycleFamily::Interval(lo, hi)),
        }
    }

    pub fn ray(lo: usize) -> Result<Self, FamilyError> {
        if lo < 3 {
            return Err(FamilyError::TooShort(lo as i64));
        }
        Ok(CycleFamily::Ray(lo))
    }

    pub fn progression(step: usize, offset: i64) -> Result<Self, FamilyError> {
        if step == 0 {
            return Err(FamilyError::BadStep);
        }
        let smallest = step as i64 + offset;
        if smallest < 3 {
            return Err(FamilyError::TooShort(smallest));
        }
        if step == 1 {
            return Ok(CycleFamily::Ray(smallest as usize));
        }
        Ok(CycleFamily::Progression { step, offset })
    }

    /// Membership test; lengths below 3 are rejected.
    pub fn contains_length(&self, len: usize) -> Result<bool, FamilyError> {
        if len < 3 {
            return Err(FamilyError::TooShort(len as i64));
        }
        Ok(self.contains(len))
    }

    pub(crate) fn contains(&self, len: usize) -> bool {
        match self {
            CycleFamily::FiniteSet(v) => v.binary_search(&len).is_ok(),
            CycleFamily::Interval(lo, hi) => (*lo..=*hi).contains(&len),
            CycleFamily::Ray(lo) => len >= *lo,
            CycleFamily::Progression { step, offset } => {
                let d = len as i64 - offset;
                d >= *step as i64 && d % *step as i64 == 0
            }
        }
    }

    pub fn min_length(&self) -> usize {
        match self {
            CycleFamily::FiniteSet(v) => v[0],
            CycleFamily::Interval(lo, _) | CycleFamily::Ray(lo) => *lo,
            CycleFamily::Progression { step, offset } => (*step as i64 + offset) as usize,
        }
    }

    /// `I ∩ [3, n]` as a sorted list; possibly empty.
    pub fn truncate(&self, n: usize) -> Vec<usize> {
        (3..=n).filter(|&l| self.contains(l)).collect()
    }
}

impl fmt::Display for CycleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleFamily::FiniteSet(v) => {
                let parts: Vec<String> = v.iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            CycleFamily::Interval(lo, hi) => write!(f, "[{lo},{hi}]"),
            CycleFamily::Ray(lo) => write!(f, "[{lo},inf)"),
            CycleFamily::Progression { step, offset } if *offset < 0 => {
                write!(f, "{step}Z-{}", -offset)
            }
            CycleFamily::Progression { step, offset } => write!(f, "{step}Z+{offset}"),
        }
    }
}

impl FromStr for CycleFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = || FamilyError::Syntax(s.to_string());
        let num = |x: &str| x.parse::<usize>().map_err(|_| syntax());

        if let Some(body) = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            if body.is_empty() {
                return Err(FamilyError::EmptySet);
            }
            let lens = body.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
            return CycleFamily::finite(lens);
        }
        if let Some(body) = t.strip_prefix('[') {
            if let Some(body) = body.strip_suffix(']') {
                let (lo, hi) = body.split_once(',').ok_or_else(syntax)?;
                return CycleFamily::interval(num(lo)?, num(hi)?);
            }
            if let Some(body) = body.strip_suffix(')') {
                let (lo, hi) = body.split_once(',').ok_or_else(syntax)?;
                if !matches!(hi, "inf" | "+inf" | "∞" | "+∞") {
                    return Err(syntax());
                }
                return CycleFamily::ray(num(lo)?);
            }
            return Err(syntax());
        }
        if let Some((step, rest)) = t.split_once('Z') {
            let step = if step.is_empty() { 1 } else { num(step)? };
            let offset = match rest.chars().next() {
                None => 0,
                Some('+') => num(&rest[1..])? as i64,
                Some('-') => -(num(&rest[1..])? as i64),
                Some(_) => return Err(syntax()),
            };
            return CycleFamily::progression(step, offset);
        }
        Err(syntax())
    }
}

impl Serialize for CycleFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycleFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fam(s: &str) -> CycleFamily {
        s.parse().unwrap()
    }

    #[test]
    fn contains_examples() {
        assert!(fam("2Z+2").contains_length(4).unwrap());
        assert!(fam("{4,5}").contains_length(5).unwrap());
        assert!(fam("3Z+1").contains_length(7).unwrap());
        assert!(!fam("3Z+1").contains_length(6).unwrap());
        assert!(!fam("3Z+1").contains_length(3).unwrap());
        assert_eq!(fam("2Z+2").contains_length(2), Err(FamilyError::TooShort(2)));
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(fam("[4,inf)").truncate(6), vec![4, 5, 6]);
        assert_eq!(fam("2Z+2").truncate(7), vec![4, 6]);
        assert_eq!(fam("{4,5}").truncate(3), Vec::<usize>::new());
        assert_eq!(fam("3Z+1").truncate(12), vec![4, 7, 10]);
        assert_eq!(fam("4Z-1").truncate(12), vec![3, 7, 11]);
    }

    #[test]
    fn normalization() {
        assert_eq!(fam("{5,4}"), fam("[4,5]"));
        assert_eq!(fam("{5,4}").to_string(), "[4,5]");
        assert_eq!(fam("{4,6,6}").to_string(), "{4,6}");
        assert_eq!(fam("[7,7]").to_string(), "{7}");
        assert_eq!(fam("Z+3"), fam("[4,inf)"));
        assert_eq!(fam("1Z+4").to_string(), "[5,inf)");
        assert_eq!(fam("3Z").to_string(), "3Z+0");
        assert_eq!(fam("[ 5 , +inf )").to_string(), "[5,inf)");
        assert_eq!(fam("4Z-1").to_string(), "4Z-1");
    }

    #[test]
    fn parse_errors() {
        assert_eq!("{}".parse::<CycleFamily>(), Err(FamilyError::EmptySet));
        assert_eq!("{2,4}".parse::<CycleFamily>(), Err(FamilyError::TooShort(2)));
        assert_eq!("[6,4]".parse::<CycleFamily>(), Err(FamilyError::EmptyInterval(6, 4)));
        assert_eq!("2Z+0".parse::<CycleFamily>(), Err(FamilyError::TooShort(2)));
        assert_eq!("0Z+5".parse::<CycleFamily>(), Err(FamilyError::BadStep));
        assert!(matches!("[4,9)".parse::<CycleFamily>(), Err(FamilyError::Syntax(_))));
        assert!(matches!("4,5".parse::<CycleFamily>(), Err(FamilyError::Syntax(_))));
        assert!(matches!("{a}".parse::<CycleFamily>(), Err(FamilyError::Syntax(_))));
    }

    #[test]
    fn serde_uses_canonical_string() {
        let f = fam("{5,4}");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "\"[4,5]\"");
        assert_eq!(serde_json::from_str::<CycleFamily>(&json).unwrap(), f);
    }

    fn arb_family() -> impl Strategy<Value = CycleFamily> {
        prop_oneof![
            proptest::collection::vec(3usize..25, 1..6).prop_map(|v| CycleFamily::finite(v).unwrap()),
            (3usize..15, 0usize..10).prop_map(|(a, d)| CycleFamily::interval(a, a + d).unwrap()),
            (3usize..15).prop_map(|a| CycleFamily::ray(a).unwrap()),
            (1usize..6, -3i64..8)
                .prop_filter("smallest >= 3", |(a, b)| *a as i64 + b >= 3)
                .prop_map(|(a, b)| CycleFamily::progression(a, b).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn truncate_matches_membership(f in arb_family(), n in 1usize..21) {
            let t = f.truncate(n);
            prop_assert!(t.iter().all(|&l| (3..=n).contains(&l)));
            for l in 3..=20 {
                prop_assert_eq!(t.contains(&l), f.contains_length(l).unwrap() && l <= n);
            }
            prop_assert!(t.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn print_parse_fixpoint(f in arb_family()) {
            let printed = f.to_string();
            let reparsed: CycleFamily = printed.parse().unwrap();
            prop_assert_eq!(&reparsed, &f);
            prop_assert_eq!(reparsed.to_string(), printed);
            prop_assert!(f.min_length() >= 3);
            prop_assert!(f.contains(f.min_length()));
        }
    }
}
