//! Canonical representation of a numerical semigroup and its basic invariants.
//!
//! A semigroup is stored as its minimal generators together with the Apéry
//! table with respect to the multiplicity, so membership is a single lookup.
//! The conventions for the whole line are `F(N) = -1`, `PF(N) = {-1}` and
//! `t(N) = 1`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::util::gcd;

/// Largest modulus for which a residue table is built.
pub const MAX_MODULUS: i64 = 1 << 22;
/// Apéry elements above this bound are rejected to keep every derived
/// quantity inside `i64`.
pub const MAX_APERY_VALUE: i64 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_generators: Vec<i64>,
    multiplicity_apery: Vec<i64>,
}

/// `Ap(H, n)`: the least element of each residue class modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperySet {
    pub base: i64,
    /// Sorted ascending.
    pub elements: Vec<i64>,
}

impl AperySet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> i64 {
        *self.elements.last().expect("Apéry set always contains 0")
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Shortest representable value in each residue class mod `modulus`, using
/// the given step sizes. Dijkstra over the residue graph.
pub(crate) fn residue_minima(steps: &[i64], modulus: i64) -> Result<Vec<i64>> {
    if modulus <= 0 {
        return Err(Error::BadParameters(format!(
            "modulus {modulus} must be positive"
        )));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::TooLarge(format!(
            "modulus {modulus} exceeds {MAX_MODULUS}"
        )));
    }
    let n = modulus as usize;
    let mut dist = vec![i64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &s in steps {
            let nd = d
                .checked_add(s)
                .filter(|v| *v <= MAX_APERY_VALUE)
                .ok_or_else(|| Error::TooLarge("Apéry element exceeds 2^62".into()))?;
            let nr = ((r as i64 + s) % modulus) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    if dist.contains(&i64::MAX) {
        // only possible when the steps do not generate Z/modulus
        return Err(Error::GcdNotOne(
            steps.iter().fold(modulus, |g, s| gcd(g, *s)),
        ));
    }
    Ok(dist)
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`; the input need not be minimal.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|g| **g <= 0) {
            return Err(Error::NonPositive(bad));
        }
        let g = gens.iter().fold(0, |acc, x| gcd(acc, *x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        // only residues matter for the search; larger duplicates mod m are useless
        let mut steps: Vec<i64> = Vec::new();
        {
            let mut seen = std::collections::HashMap::new();
            for &s in &sorted[1..] {
                seen.entry(s % m).or_insert(s);
            }
            steps.extend(seen.into_values().filter(|s| s % m != 0));
            steps.sort_unstable();
        }
        let apery = residue_minima(&steps, m)?;
        // multiplicity() reads the first generator, so seed it before scanning
        let mut sg = NumericalSemigroup {
            min_generators: vec![m],
            multiplicity_apery: apery,
        };
        // g is redundant iff g - a lies in H for some smaller minimal generator a
        let mut minimal: Vec<i64> = Vec::new();
        for &cand in &sorted {
            if !minimal.iter().any(|&a| sg.contains(cand - a)) {
                minimal.push(cand);
            }
        }
        sg.min_generators = minimal;
        Ok(sg)
    }

    /// The whole line `N = <1>`.
    pub fn whole_line() -> Self {
        NumericalSemigroup {
            min_generators: vec![1],
            multiplicity_apery: vec![0],
        }
    }

    /// Half-line `{0, m, m+1, ...}`.
    pub fn half_line(m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::BadParameters(format!(
                "half-line start {m} must be >= 1"
            )));
        }
        let gens: Vec<i64> = (m..2 * m).collect();
        Self::from_generators(&gens)
    }

    /// Builds the semigroup whose members are exactly the `x >= 0` with
    /// `member(x)`, given that every `x >= conductor_bound` is a member.
    ///
    /// The caller guarantees closure under addition; the result is checked
    /// against the predicate on the scanned window in debug builds.
    pub fn from_membership<F>(member: F, conductor_bound: i64) -> Result<Self>
    where
        F: Fn(i64) -> bool,
    {
        let bound = conductor_bound.max(1);
        let first = (1..=bound).find(|&x| member(x)).unwrap_or(bound);
        let mut gens: Vec<i64> = (1..bound).filter(|&x| member(x)).collect();
        gens.extend(bound..bound + first);
        let sg = Self::from_generators(&gens)?;
        debug_assert!(
            (0..bound + first).all(|x| sg.contains(x) == member(x)),
            "membership predicate is not a numerical semigroup"
        );
        Ok(sg)
    }

    pub fn min_generators(&self) -> &[i64] {
        &self.min_generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.min_generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_generators.len()
    }

    pub fn is_whole_line(&self) -> bool {
        self.multiplicity() == 1
    }

    /// Apéry table with respect to the multiplicity, indexed by residue.
    pub fn multiplicity_apery(&self) -> &[i64] {
        &self.multiplicity_apery
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let m = self.multiplicity();
        x >= self.multiplicity_apery[(x % m) as usize]
    }

    /// `Ap(H, n)` for a nonzero element `n`.
    pub fn apery_set(&self, n: i64) -> Result<AperySet> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        let mut elements = if n == self.multiplicity() {
            self.multiplicity_apery.clone()
        } else {
            residue_minima(&self.min_generators, n)?
        };
        elements.sort_unstable();
        Ok(AperySet { base: n, elements })
    }

    fn multiplicity_apery_set(&self) -> AperySet {
        let mut elements = self.multiplicity_apery.clone();
        elements.sort_unstable();
        AperySet {
            base: self.multiplicity(),
            elements,
        }
    }

    /// Largest gap; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.multiplicity_apery.iter().copied().max().unwrap_or(0) - self.multiplicity()
    }

    /// Smallest `c` with `[c, inf)` contained in the semigroup.
    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    /// Number of gaps, from the Apéry sum `(1/m) sum w - (m-1)/2`.
    pub fn genus(&self) -> i64 {
        let m = self.multiplicity() as i128;
        let sum: i128 = self.multiplicity_apery.iter().map(|&w| w as i128).sum();
        let twice = 2 * sum - m * (m - 1);
        debug_assert_eq!(twice % (2 * m), 0);
        let g = (twice / (2 * m)) as i64;
        debug_assert!(self.frobenius() > 1 << 20 || g == self.gaps().len() as i64);
        g
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Elements of the semigroup in `[lo, hi)`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo.max(0)..hi).filter(|&x| self.contains(x)).collect()
    }

    /// Pseudo-Frobenius numbers: the `<=_H`-maximal elements of `Ap(H, m)`
    /// shifted by `-m`. Sorted ascending; `[-1]` for `N`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let ap = self.multiplicity_apery_set();
        pf_from_apery(self, &ap)
    }

    /// Type `t(H) = |PF(H)|`.
    pub fn type_of(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    pub fn is_maximal_embedding_dimension(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    pub fn is_minimal_generator(&self, x: i64) -> bool {
        self.min_generators.binary_search(&x).is_ok()
    }

    /// Collection of summary values used by the text and JSON outputs.
    pub fn invariants(&self) -> Invariants {
        let pf = self.pseudo_frobenius();
        Invariants {
            generators: self.min_generators.clone(),
            frobenius: self.frobenius(),
            genus: self.genus(),
            type_: pf.len(),
            pf,
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
        }
    }
}

/// `{w - n : w maximal in Ap(H, n) under <=_H}`.
pub(crate) fn pf_from_apery(h: &NumericalSemigroup, ap: &AperySet) -> Vec<i64> {
    let els = &ap.elements;
    let mut pf: Vec<i64> = els
        .iter()
        .filter(|&&w| !els.iter().any(|&v| v != w && h.contains(v - w)))
        .map(|&w| w - ap.base)
        .collect();
    pf.sort_unstable();
    pf
}

/// Shared invariants block of the JSON outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    #[serde(rename = "type")]
    pub type_: usize,
    pub pf: Vec<i64>,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
}

impl fmt::Display for NumericalSemigroup {
    /// Comma-separated minimal generators, e.g. `5,8,11,12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.min_generators.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a comma-separated generator list (whitespace and angle brackets
/// are tolerated).
pub fn parse_generators(s: &str) -> Result<Vec<i64>> {
    let trimmed = s
        .trim()
        .trim_start_matches(['<', '⟨'])
        .trim_end_matches(['>', '⟩']);
    if trimmed.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    trimmed
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad generator {:?}: {e}", p.trim())))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_generators(&parse_generators(s)?)
    }
}
