//! Proportionally modular semigroups `S(a, b, c) = {x : a·x mod b <= c·x}`,
//! semigroups of rational intervals, and opened modular semigroups.
//!
//! All interval arithmetic is exact: endpoints are reduced fractions and
//! every comparison is a cross-multiplication in `i128`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::dual_of_maximal;
use crate::semigroup::NumericalSemigroup;
use crate::util::{ceil_div, floor_div, gcd};

/// Upper bound on the scanned window when building an interval semigroup.
pub const MAX_SCAN: i64 = 1 << 24;

/// The inequality `a·x mod b <= c·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProportionalInequality {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ProportionalInequality {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 1 || b < 1 || c < 1 {
            return Err(Error::BadParameters(format!(
                "a, b, c must be positive (got {a}, {b}, {c})"
            )));
        }
        Ok(ProportionalInequality { a, b, c })
    }

    pub fn is_satisfied_by(&self, x: i64) -> bool {
        x >= 0
            && (self.a as i128 * x as i128).rem_euclid(self.b as i128) <= self.c as i128 * x as i128
    }
}

impl FromStr for ProportionalInequality {
    type Err = Error;

    /// `a:b:c`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected a:b:c, got {s:?}")));
        }
        let nums: Vec<i64> = parts
            .iter()
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Self::new(nums[0], nums[1], nums[2])
    }
}

/// A reduced positive fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::BadParameters("zero denominator".into()));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ok(Fraction {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    fn cmp_frac(&self, other: &Fraction) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RationalInterval {
    pub lo: Fraction,
    pub hi: Fraction,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl RationalInterval {
    pub fn new(lo: Fraction, hi: Fraction, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo.num <= 0 {
            return Err(Error::BadParameters(format!(
                "left endpoint {lo} must be positive"
            )));
        }
        match lo.cmp_frac(&hi) {
            std::cmp::Ordering::Greater => return Err(Error::EmptyInterval),
            std::cmp::Ordering::Equal if lo_open || hi_open => return Err(Error::EmptyInterval),
            _ => {}
        }
        Ok(RationalInterval {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }

    pub fn closed(lo: Fraction, hi: Fraction) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn open(lo: Fraction, hi: Fraction) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    /// Whether `n` is a sum of `k >= 1` elements of the interval, i.e. lies in
    /// `k·I` for some `k`. `0` is always a member.
    pub fn generates(&self, n: i64) -> bool {
        if n == 0 {
            return true;
        }
        if n < 0 {
            return false;
        }
        let n = n as i128;
        let (ln, ld) = (self.lo.num as i128, self.lo.den as i128);
        let (hn, hd) = (self.hi.num as i128, self.hi.den as i128);
        // k·hi >= n  (strict if open): k >= n·hd/hn
        let k_min = if self.hi_open {
            floor_div(n * hd, hn) + 1
        } else {
            ceil_div(n * hd, hn)
        };
        // k·lo <= n  (strict if open): k <= n·ld/ln
        let k_max = if self.lo_open {
            ceil_div(n * ld, ln) - 1
        } else {
            floor_div(n * ld, ln)
        };
        k_min.max(1) <= k_max
    }

    /// Every integer at or above the returned value is generated.
    fn conductor_bound(&self) -> Option<i64> {
        let (ln, ld) = (self.lo.num as i128, self.lo.den as i128);
        let (hn, hd) = (self.hi.num as i128, self.hi.den as i128);
        // hi - lo = width_num / width_den
        let width_num = hn * ld - ln * hd;
        if width_num <= 0 {
            return None;
        }
        let width_den = hd * ld;
        // k0 > lo / (hi - lo) makes consecutive open dilates (k lo, k hi) overlap
        let k0 = floor_div(ln * width_den, ld * width_num) + 1;
        let bound = floor_div(k0 * ln, ld) + 1;
        i64::try_from(bound).ok()
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}..{}{}",
            if self.lo_open { "(" } else { "[" },
            self.lo,
            self.hi,
            if self.hi_open { ")" } else { "]" }
        )
    }
}

fn parse_fraction(s: &str) -> Result<Fraction> {
    let s = s.trim();
    // accepts `n`, `(n)` and `(x-y)`, so `b/(a-c)` can be written literally
    let parse = |p: &str| -> Result<i64> {
        let inner = p
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        let num = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad number {p:?}: {e}")))
        };
        match inner.char_indices().skip(1).find(|&(_, ch)| ch == '-') {
            Some((i, _)) => Ok(num(&inner[..i])? - num(&inner[i + 1..])?),
            None => num(inner),
        }
    };
    match s.split_once('/') {
        Some((n, d)) => Fraction::new(parse(n)?, parse(d)?),
        None => Fraction::new(parse(s)?, 1),
    }
}

impl FromStr for RationalInterval {
    type Err = Error;

    /// `[p/q..r/s]`, `(p/q..r/s)` or `]p/q..r/s[`; brackets may be mixed and
    /// omitted brackets mean closed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (lo_open, rest) = match s.chars().next() {
            Some('(') | Some(']') => (true, &s[1..]),
            Some('[') => (false, &s[1..]),
            _ => (false, s),
        };
        let (hi_open, body) = match rest.chars().last() {
            Some(')') | Some('[') => (true, &rest[..rest.len() - 1]),
            Some(']') => (false, &rest[..rest.len() - 1]),
            _ => (false, rest),
        };
        let (lo, hi) = body
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("expected lo..hi, got {s:?}")))?;
        Self::new(parse_fraction(lo)?, parse_fraction(hi)?, lo_open, hi_open)
    }
}

/// `S(a, b, c)` by direct scan. Every `x >= ceil((b - 1)/c)` satisfies the
/// inequality because `a·x mod b <= b - 1`.
pub fn solve_inequality(q: &ProportionalInequality) -> Result<NumericalSemigroup> {
    let bound = ceil_div(q.b as i128 - 1, q.c as i128) as i64;
    if bound > MAX_SCAN {
        return Err(Error::TooLarge(format!("scan bound {bound} for {q:?}")));
    }
    NumericalSemigroup::from_membership(|x| q.is_satisfied_by(x), bound)
}

/// `S(I) = <I> ∩ N`.
pub fn semigroup_of_interval(interval: &RationalInterval) -> Result<NumericalSemigroup> {
    let Some(bound) = interval.conductor_bound() else {
        // degenerate [p/q, p/q]: only multiples of p
        return if interval.lo.num == 1 {
            Ok(NumericalSemigroup::whole_line())
        } else {
            Err(Error::NotNumerical(interval.lo.num))
        };
    };
    if bound > MAX_SCAN {
        return Err(Error::TooLarge(format!(
            "scan bound {bound} for {interval}"
        )));
    }
    NumericalSemigroup::from_membership(|n| interval.generates(n), bound)
}

/// `[b/a, b/(a - c)]`, which generates the same semigroup as `S(a, b, c)`.
pub fn interval_of_inequality(q: &ProportionalInequality) -> Result<RationalInterval> {
    if q.c >= q.a {
        return Err(Error::ProportionTooLarge { a: q.a, c: q.c });
    }
    let interval =
        RationalInterval::closed(Fraction::new(q.b, q.a)?, Fraction::new(q.b, q.a - q.c)?)?;
    debug_assert_eq!(semigroup_of_interval(&interval), solve_inequality(q));
    Ok(interval)
}

fn check_opened_params(a: i64, b: i64) -> Result<()> {
    if a < 2 || b < a {
        return Err(Error::BadParameters(format!(
            "need 2 <= a <= b, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// `]b/a, b/(a-1)[`.
pub fn opened_interval(a: i64, b: i64) -> Result<RationalInterval> {
    check_opened_params(a, b)?;
    RationalInterval::open(Fraction::new(b, a)?, Fraction::new(b, a - 1)?)
}

/// `[b/a, b/(a-1)]`.
pub fn closed_interval(a: i64, b: i64) -> Result<RationalInterval> {
    check_opened_params(a, b)?;
    RationalInterval::closed(Fraction::new(b, a)?, Fraction::new(b, a - 1)?)
}

/// `S(]b/a, b/(a-1)[)` for `2 <= a <= b`.
pub fn opened_modular(a: i64, b: i64) -> Result<NumericalSemigroup> {
    semigroup_of_interval(&opened_interval(a, b)?)
}

/// Least `k` in `1..a` with `(k·b mod a) + floor(k·b/a)·c > (c-1)·b + a - c`.
pub fn delta(a: i64, b: i64, c: i64) -> Result<i64> {
    if !(1 <= c && c < a && a < b) {
        return Err(Error::BadParameters(format!(
            "need 1 <= c < a < b, got a = {a}, b = {b}, c = {c}"
        )));
    }
    let (a128, b128, c128) = (a as i128, b as i128, c as i128);
    let rhs = (c128 - 1) * b128 + a128 - c128;
    (1..a)
        .find(|&k| {
            let kb = k as i128 * b128;
            kb % a128 + (kb / a128) * c128 > rhs
        })
        .ok_or(Error::NoDelta { a, b, c })
}

/// `F(S(a, b, c)) = b - floor(δ·b/a) - 1`.
pub fn frobenius_modular(a: i64, b: i64, c: i64) -> Result<i64> {
    let d = delta(a, b, c)?;
    let f = b - ((d as i128 * b as i128) / a as i128) as i64 - 1;
    debug_assert_eq!(
        Ok(f),
        ProportionalInequality::new(a, b, c)
            .and_then(|q| solve_inequality(&q))
            .map(|s| s.frobenius())
    );
    Ok(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OpenedInvariants {
    pub frobenius: i64,
    pub genus: i64,
    #[serde(rename = "type")]
    pub type_: i64,
}

/// `F = b`, `g = (b + d + d' - 1)/2`, `t = d + d' - 1` with `d = gcd(a, b)`
/// and `d' = gcd(a - 1, b)`.
pub fn opened_modular_invariants(a: i64, b: i64) -> Result<OpenedInvariants> {
    check_opened_params(a, b)?;
    let d = gcd(a, b);
    let dp = gcd(a - 1, b);
    let inv = OpenedInvariants {
        frobenius: b,
        genus: (b + d + dp - 1) / 2,
        type_: d + dp - 1,
    };
    debug_assert_eq!((b + d + dp - 1) % 2, 0);
    debug_assert!({
        let h = opened_modular(a, b)?;
        h.frobenius() == inv.frobenius && h.genus() == inv.genus && h.type_of() as i64 == inv.type_
    });
    Ok(inv)
}

/// Genus of `S([b/a, b/(a-1)])`: `(b + 1 - d - d')/2`.
pub fn closed_interval_genus(a: i64, b: i64) -> Result<i64> {
    check_opened_params(a, b)?;
    let g = (b + 1 - gcd(a, b) - gcd(a - 1, b)) / 2;
    debug_assert_eq!(
        Ok(g),
        semigroup_of_interval(&closed_interval(a, b)?).map(|s| s.genus())
    );
    Ok(g)
}

/// Multiplicity of the opened modular semigroup: `floor(δ·b/a) + 1` with δ
/// taken at `c = 1`. The closed form needs `a < b`; for `a = b` the
/// multiplicity is read off the semigroup directly.
pub fn multiplicity_opened_modular(a: i64, b: i64) -> Result<i64> {
    check_opened_params(a, b)?;
    if a == b {
        return Ok(opened_modular(a, b)?.multiplicity());
    }
    let d = delta(a, b, 1)?;
    let m = ((d as i128 * b as i128) / a as i128) as i64 + 1;
    debug_assert_eq!(Ok(m), opened_modular(a, b).map(|h| h.multiplicity()));
    Ok(m)
}

/// `m(H) = F(H) - F(H*)` for the opened modular semigroup, evaluated
/// directly on the semigroup and its dual.
pub fn multiplicity_via_duality(a: i64, b: i64) -> Result<i64> {
    let h = opened_modular(a, b)?;
    Ok(h.frobenius() - dual_of_maximal(&h)?.frobenius())
}

/// An ordering `(a_1, ..., a_n)` of the minimal generators with
/// `gcd(a_i, a_{i+1}) = 1` and `a_{i-1} + a_{i+1} ≡ 0 (mod a_i)`; such an
/// ordering exists exactly when the semigroup is proportionally modular.
pub fn proportionally_modular_arrangement(h: &NumericalSemigroup) -> Option<Vec<i64>> {
    let gens = h.min_generators();
    let n = gens.len();
    let mut used = vec![false; n];
    let mut path = Vec::with_capacity(n);
    fn extend(gens: &[i64], used: &mut [bool], path: &mut Vec<i64>) -> bool {
        if path.len() == gens.len() {
            return true;
        }
        for i in 0..gens.len() {
            if used[i] {
                continue;
            }
            let next = gens[i];
            if let Some(&last) = path.last() {
                if gcd(last, next) != 1 {
                    continue;
                }
                if path.len() >= 2 && (path[path.len() - 2] + next) % last != 0 {
                    continue;
                }
            }
            used[i] = true;
            path.push(next);
            if extend(gens, used, path) {
                return true;
            }
            path.pop();
            used[i] = false;
        }
        false
    }
    extend(gens, &mut used, &mut path).then_some(path)
}
