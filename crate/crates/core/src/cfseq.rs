//! Formal quotient sequences `[a₀; a₁, a₂, …]`.
//!
//! A [`Quotients`] value is either a complete terminating sequence or a known
//! prefix of a possibly longer one. Sequences are compared with the
//! alternating-lexicographic rule: at even positions the smaller entry is the
//! smaller sequence, at odd positions the larger entry is. Terminated sequences
//! behave as if `+∞` were appended.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Terminated,
    /// Known prefix of a possibly longer expansion.
    Truncated,
}

/// An element (or prefix of an element) of the sequence space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quotients {
    head: BigInt,
    tail: Vec<BigInt>,
    status: Status,
}

impl Quotients {
    /// Validates tail entries `≥ 1` and, for terminated input, a last tail entry `≥ 2`.
    pub fn new(head: BigInt, tail: Vec<BigInt>, status: Status) -> Result<Self> {
        if let Some((i, _)) = tail.iter().enumerate().find(|(_, a)| !a.is_positive()) {
            return Err(Error::Invalid(alloc::format!(
                "tail entry a_{} must be at least 1",
                i + 1
            )));
        }
        if status == Status::Terminated && tail.last().is_some_and(|a| a.is_one()) {
            return Err(Error::Invalid(
                "terminated sequence cannot end in 1".to_string(),
            ));
        }
        Ok(Quotients { head, tail, status })
    }

    pub fn terminated(head: BigInt, tail: Vec<BigInt>) -> Result<Self> {
        Self::new(head, tail, Status::Terminated)
    }

    pub fn truncated(head: BigInt, tail: Vec<BigInt>) -> Result<Self> {
        Self::new(head, tail, Status::Truncated)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(head: i64, tail: &[i64], status: Status) -> Result<Self> {
        Self::new(
            BigInt::from(head),
            tail.iter().map(|&a| BigInt::from(a)).collect(),
            status,
        )
    }

    /// Builds a formal sequence without the terminal-entry rule. Used for
    /// interval endpoints such as `[a₀; …, aₙ]` with `aₙ = 1`.
    pub(crate) fn formal(head: BigInt, tail: Vec<BigInt>, status: Status) -> Self {
        debug_assert!(tail.iter().all(|a| a.is_positive()));
        Quotients { head, tail, status }
    }

    pub fn head(&self) -> &BigInt {
        &self.head
    }

    pub fn tail(&self) -> &[BigInt] {
        &self.tail
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_terminated(&self) -> bool {
        self.status == Status::Terminated
    }

    /// Number of entries including the head.
    pub fn len(&self) -> usize {
        self.tail.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry `aᵢ`, with `a₀` the head.
    pub fn get(&self, i: usize) -> Option<&BigInt> {
        if i == 0 {
            Some(&self.head)
        } else {
            self.tail.get(i - 1)
        }
    }

    /// The first `n` tail entries as a truncated prefix.
    pub fn prefix(&self, n: usize) -> Quotients {
        let n = n.min(self.tail.len());
        let status = if n == self.tail.len() {
            self.status
        } else {
            Status::Truncated
        };
        Quotients::formal(self.head.clone(), self.tail[..n].to_vec(), status)
    }

    pub fn with_status(mut self, status: Status) -> Result<Self> {
        self.status = status;
        Self::new(self.head, self.tail, status)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AltLex {
    Less,
    Equal,
    Greater,
    /// A truncated prefix does not decide the comparison.
    Unknown,
}

impl AltLex {
    pub fn reverse(self) -> AltLex {
        match self {
            AltLex::Less => AltLex::Greater,
            AltLex::Greater => AltLex::Less,
            other => other,
        }
    }

    fn from_ordering(o: core::cmp::Ordering) -> AltLex {
        match o {
            core::cmp::Ordering::Less => AltLex::Less,
            core::cmp::Ordering::Equal => AltLex::Equal,
            core::cmp::Ordering::Greater => AltLex::Greater,
        }
    }
}

/// Alternating-lexicographic comparison.
pub fn altlex_compare(a: &Quotients, b: &Quotients) -> AltLex {
    let mut i = 0usize;
    loop {
        let odd = i % 2 == 1;
        let oriented = |r: AltLex| if odd { r.reverse() } else { r };
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => {
                if x != y {
                    return oriented(AltLex::from_ordering(x.cmp(y)));
                }
            }
            (None, None) => {
                return if a.is_terminated() && b.is_terminated() {
                    AltLex::Equal
                } else {
                    AltLex::Unknown
                };
            }
            // a ran out: it carries +∞ at index i when terminated
            (None, Some(_)) => {
                return if a.is_terminated() {
                    oriented(AltLex::Greater)
                } else {
                    AltLex::Unknown
                };
            }
            (Some(_), None) => {
                return if b.is_terminated() {
                    oriented(AltLex::Less)
                } else {
                    AltLex::Unknown
                };
            }
        }
        i += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closed {
    /// `[lower, upper)`
    Left,
    /// `(lower, upper]`
    Right,
}

/// The set of sequences sharing a given prefix, as an alt-lex interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixInterval {
    pub lower: Quotients,
    pub upper: Quotients,
    pub closed: Closed,
}

impl PrefixInterval {
    /// `Some(true)` when `q` lies in the interval, `None` when undecidable.
    pub fn contains(&self, q: &Quotients) -> Option<bool> {
        let lo = altlex_compare(&self.lower, q);
        let hi = altlex_compare(q, &self.upper);
        let ok = |r: AltLex, closed_end: bool| match r {
            AltLex::Less => Some(true),
            AltLex::Equal => Some(closed_end),
            AltLex::Greater => Some(false),
            AltLex::Unknown => None,
        };
        let lo_ok = ok(lo, self.closed == Closed::Left)?;
        let hi_ok = ok(hi, self.closed == Closed::Right)?;
        Some(lo_ok && hi_ok)
    }
}

/// Endpoints `[a₀; …, aₙ]` and `[a₀; …, aₙ + 1]` of the sequences extending `p`.
/// The interval is left-closed when `n` is even and right-closed when `n` is odd.
pub fn prefix_interval(p: &Quotients) -> PrefixInterval {
    let n = p.tail.len();
    let base = Quotients::formal(p.head.clone(), p.tail.clone(), Status::Terminated);
    let mut bumped_tail = p.tail.clone();
    let bumped_head = if n == 0 {
        &p.head + 1
    } else {
        bumped_tail[n - 1] += 1;
        p.head.clone()
    };
    let bumped = Quotients::formal(bumped_head, bumped_tail, Status::Terminated);
    if n.is_multiple_of(2) {
        PrefixInterval {
            lower: base,
            upper: bumped,
            closed: Closed::Left,
        }
    } else {
        PrefixInterval {
            lower: bumped,
            upper: base,
            closed: Closed::Right,
        }
    }
}

/// For a terminated `[0; a₁, …, aₙ]` with `aₙ = d + 1 ≥ 2`, returns `d`.
pub fn classify_terminal(q: &Quotients) -> Option<BigInt> {
    if !q.is_terminated() || !q.head.is_zero() {
        return None;
    }
    let last = q.tail.last()?;
    if *last >= BigInt::from(2) {
        Some(last - 1)
    } else {
        None
    }
}

impl fmt::Display for Quotients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.head)?;
        for (i, a) in self.tail.iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}{a}")?;
        }
        if self.status == Status::Truncated {
            let sep = if self.tail.is_empty() { "; " } else { ", " };
            write!(f, "{sep}...")?;
        }
        f.write_str("]")
    }
}

/// Parses `[a0; a1, a2, ...]`; a final `...` marks a truncated prefix.
pub fn parse(text: &str) -> Result<Quotients> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Syntax(alloc::format!("expected [a0; a1, ...], got {t:?}")))?;
    let (head_txt, rest) = match inner.split_once(';') {
        Some((h, r)) => (h, Some(r)),
        None => match inner.split_once(',') {
            // "[a0, ...]" is accepted for a truncated head-only prefix
            Some((h, r)) if r.trim() == "..." => (h, Some(r)),
            Some(_) => {
                return Err(Error::Syntax(
                    "missing ';' after the integer part".to_string(),
                ))
            }
            None => (inner, None),
        },
    };
    let head = parse_int(head_txt)?;
    let mut tail = Vec::new();
    let mut status = Status::Terminated;
    if let Some(rest) = rest {
        let items: Vec<&str> = rest.split(',').map(str::trim).collect();
        for (i, item) in items.iter().enumerate() {
            if *item == "..." {
                if i + 1 != items.len() {
                    return Err(Error::Syntax("'...' must be the last item".to_string()));
                }
                status = Status::Truncated;
            } else {
                tail.push(parse_int(item)?);
            }
        }
        if tail.is_empty() && status == Status::Terminated {
            return Err(Error::Syntax("empty tail after ';'".to_string()));
        }
    }
    Quotients::new(head, tail, status)
}

fn parse_int(s: &str) -> Result<BigInt> {
    let s = s.trim();
    BigInt::from_str(s).map_err(|_| Error::Syntax(alloc::format!("not an integer: {s:?}")))
}

impl FromStr for Quotients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Formats with the canonical spacing, e.g. `[0; 2, 16]`.
pub fn format(q: &Quotients) -> String {
    q.to_string()
}

/// An eventually periodic infinite sequence `[head; preperiod, (period)^∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicSpec {
    head: BigInt,
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl PeriodicSpec {
    /// Stores the minimal repeating block and folds any preperiod suffix that
    /// already matches the period into it.
    pub fn new(head: BigInt, preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Invalid("period must be nonempty".to_string()));
        }
        if preperiod.iter().chain(period.iter()).any(|a| !a.is_positive()) {
            return Err(Error::Invalid("entries must be at least 1".to_string()));
        }
        let n = period.len();
        let minimal = (1..=n)
            .find(|&k| n.is_multiple_of(k) && (k..n).all(|i| period[i] == period[i - k]))
            .unwrap_or(n);
        let mut period: Vec<BigInt> = period[..minimal].to_vec();
        let mut preperiod = preperiod;
        while let Some(last) = preperiod.last() {
            if *last == period[period.len() - 1] {
                preperiod.pop();
                period.rotate_right(1);
            } else {
                break;
            }
        }
        Ok(PeriodicSpec {
            head,
            preperiod,
            period,
        })
    }

    pub fn from_i64(head: i64, preperiod: &[i64], period: &[i64]) -> Result<Self> {
        Self::new(
            BigInt::from(head),
            preperiod.iter().map(|&a| BigInt::from(a)).collect(),
            period.iter().map(|&a| BigInt::from(a)).collect(),
        )
    }

    pub fn head(&self) -> &BigInt {
        &self.head
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// Tail entry `a_i` for `i ≥ 1`.
    pub fn term(&self, i: usize) -> &BigInt {
        assert!(i >= 1, "tail terms are indexed from 1");
        let j = i - 1;
        if j < self.preperiod.len() {
            &self.preperiod[j]
        } else {
            &self.period[(j - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The first `n` tail entries as a truncated prefix.
    pub fn prefix(&self, n: usize) -> Quotients {
        let tail = (1..=n).map(|i| self.term(i).clone()).collect();
        Quotients::formal(self.head.clone(), tail, Status::Truncated)
    }
}

impl fmt::Display for PeriodicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; ", self.head)?;
        for a in &self.preperiod {
            write!(f, "{a}, ")?;
        }
        f.write_str("(")?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")]")
    }
}

/// Parses `[a0; p1, p2, (c1, c2, ...)]`, the form printed by `Display`.
pub fn parse_periodic(text: &str) -> Result<PeriodicSpec> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Syntax(alloc::format!("expected [a0; ..., (period)], got {t:?}")))?;
    let (head_txt, rest) = inner
        .split_once(';')
        .ok_or_else(|| Error::Syntax("missing ';' after the integer part".to_string()))?;
    let (pre_txt, period_txt) = rest
        .split_once('(')
        .ok_or_else(|| Error::Syntax("missing '(' before the period".to_string()))?;
    let period_txt = period_txt
        .trim()
        .strip_suffix(')')
        .ok_or_else(|| Error::Syntax("the period must close the sequence with ')'".to_string()))?;
    let pre_txt = pre_txt.trim().trim_end_matches(',').trim();
    let ints = |s: &str| -> Result<Vec<BigInt>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',').map(parse_int).collect()
    };
    PeriodicSpec::new(parse_int(head_txt)?, ints(pre_txt)?, ints(period_txt)?)
}

impl FromStr for PeriodicSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_periodic(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(head: i64, tail: &[i64], status: Status) -> Quotients {
        Quotients::from_i64(head, tail, status).unwrap()
    }

    fn t(head: i64, tail: &[i64]) -> Quotients {
        q(head, tail, Status::Terminated)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("[0; 2, 16]").unwrap(), t(0, &[2, 16]));
        assert_eq!(parse("[5]").unwrap(), t(5, &[]));
        assert_eq!(
            parse("[0; 1, 1, 2, ...]").unwrap(),
            q(0, &[1, 1, 2], Status::Truncated)
        );
        assert_eq!(parse("[-3;4,5]").unwrap(), t(-3, &[4, 5]));
        assert_eq!(parse("[7; ...]").unwrap(), q(7, &[], Status::Truncated));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("0; 2]"), Err(Error::Syntax(_))));
        assert!(matches!(parse("[0; 2, x]"), Err(Error::Syntax(_))));
        assert!(matches!(parse("[0; ..., 2]"), Err(Error::Syntax(_))));
        assert!(matches!(parse("[0; 2, 0]"), Err(Error::Invalid(_))));
        assert!(matches!(parse("[0; 2, 1]"), Err(Error::Invalid(_))));
        // a truncated prefix may end in 1
        assert!(parse("[0; 2, 1, ...]").is_ok());
    }

    #[test]
    fn format_examples() {
        assert_eq!(
            format(&t(0, &[3, 1098, 2892, 410, 256])),
            "[0; 3, 1098, 2892, 410, 256]"
        );
        assert_eq!(format(&t(1, &[])), "[1]");
        assert_eq!(format(&q(0, &[1, 1], Status::Truncated)), "[0; 1, 1, ...]");
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            altlex_compare(&t(0, &[2, 16]), &q(0, &[1, 1, 2], Status::Truncated)),
            AltLex::Less
        );
        assert_eq!(altlex_compare(&t(1, &[]), &t(1, &[2])), AltLex::Less);
        let p = q(0, &[1], Status::Truncated);
        assert_eq!(altlex_compare(&p, &p), AltLex::Unknown);
        assert_eq!(altlex_compare(&t(0, &[2, 16]), &t(0, &[2, 16])), AltLex::Equal);
        assert_eq!(altlex_compare(&t(-1, &[5]), &t(0, &[])), AltLex::Less);
    }

    #[test]
    fn prefix_interval_examples() {
        let iv = prefix_interval(&t(0, &[2]));
        assert_eq!(iv.closed, Closed::Right);
        assert_eq!(iv.lower, Quotients::formal(0.into(), vec![3.into()], Status::Terminated));
        assert_eq!(iv.upper, t(0, &[2]));
        let iv = prefix_interval(&t(1, &[]));
        assert_eq!(iv.closed, Closed::Left);
        assert_eq!(iv.lower, t(1, &[]));
        assert_eq!(iv.upper, t(2, &[]));
    }

    #[test]
    fn prefix_interval_brackets_extensions() {
        let iv = prefix_interval(&t(0, &[2]));
        for k in 1..=50 {
            let ext = q(0, &[2, k], Status::Truncated);
            assert_eq!(iv.contains(&ext), Some(true), "k = {k}");
            if k >= 2 {
                assert_eq!(iv.contains(&t(0, &[2, k])), Some(true));
            }
        }
        assert_eq!(iv.contains(&t(0, &[3])), Some(false));
        assert_eq!(iv.contains(&t(0, &[1, 5])), Some(false));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_terminal(&t(0, &[2, 16])), Some(15.into()));
        assert_eq!(
            classify_terminal(&t(0, &[3, 1098, 2892, 410, 256])),
            Some(255.into())
        );
        assert_eq!(classify_terminal(&t(1, &[2])), None);
        assert_eq!(classify_terminal(&q(0, &[2, 16], Status::Truncated)), None);
    }

    #[test]
    fn periodic_minimality() {
        let p = PeriodicSpec::from_i64(1, &[], &[1, 1, 2, 1, 1, 1, 2, 1]).unwrap();
        assert_eq!(p.period().len(), 4);
        let p = PeriodicSpec::from_i64(0, &[3, 1, 2], &[1, 2]).unwrap();
        assert_eq!(p.preperiod(), &[BigInt::from(3)]);
        assert_eq!(p.period(), &[BigInt::from(1), BigInt::from(2)]);
        assert_eq!(p.term(1), &BigInt::from(3));
        assert_eq!(p.term(3), &BigInt::from(2));
        assert_eq!(p.term(4), &BigInt::from(1));
        assert!(PeriodicSpec::from_i64(0, &[], &[]).is_err());
    }

    #[test]
    fn periodic_text_roundtrip() {
        for t in ["[1; (1, 1, 2, 1)]", "[0; 3, 4, (2)]", "[-2; (5, 7)]"] {
            let p = parse_periodic(t).unwrap();
            assert_eq!(p.to_string(), t);
        }
        assert!(parse_periodic("[1; 2, 3]").is_err());
        assert!(parse_periodic("[1; ()]").is_err());
    }
}
