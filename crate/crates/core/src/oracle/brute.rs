use crate::error::{Error, Result};
use crate::modular::RationalInterval;

/// Largest membership table the oracle will allocate.
pub const MAX_TABLE: usize = 1 << 26;
/// Largest window scanned by [`oracle_interval`]; the scan is quadratic.
const MAX_INTERVAL_SCAN: i64 = 1 << 16;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A numerical semigroup given by an explicit membership table. Every
/// integer at or beyond `table.len()` is a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSemigroup {
    table: Vec<bool>,
    conductor: i64,
    multiplicity: i64,
}

/// Builds the membership table of `<gens>` by dynamic programming.
///
/// The table is sized from a bound on the conductor that does not depend on
/// anything under test: `(p-1)(q-1)` for the best coprime pair of generators,
/// otherwise `(a_1 - 1)(a_n - 1)`. One extra multiplicity period is filled in
/// and checked to be gap-free.
pub fn oracle_semigroup(gens: &[i64]) -> Result<OracleSemigroup> {
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&bad) = gens.iter().find(|g| **g <= 0) {
        return Err(Error::NonPositive(bad));
    }
    let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let first = sorted[0];
    let last = *sorted.last().unwrap();

    let mut bound: Option<i128> = None;
    for (i, &p) in sorted.iter().enumerate() {
        for &q in &sorted[i + 1..] {
            if gcd(p, q) == 1 {
                let b = (p as i128 - 1) * (q as i128 - 1);
                bound = Some(bound.map_or(b, |cur| cur.min(b)));
            }
        }
    }
    let bound = bound.unwrap_or((first as i128 - 1) * (last as i128 - 1));
    let len = bound + first as i128 + 1;
    if len > MAX_TABLE as i128 {
        return Err(Error::TooLarge(format!("oracle table of {len} entries")));
    }
    let len = len as usize;
    let mut table = vec![false; len];
    table[0] = true;
    for x in 1..len {
        table[x] = sorted
            .iter()
            .any(|&g| g as usize <= x && table[x - g as usize]);
    }
    OracleSemigroup::from_table(table, first)
}

/// `S(I)`: the `n >= 0` lying in `k·I` for some integer `k >= 1`, decided by
/// scanning every candidate `k` with exact cross-multiplication.
pub fn oracle_interval(interval: &RationalInterval) -> Result<OracleSemigroup> {
    let (ln, ld) = (interval.lo.num as i128, interval.lo.den as i128);
    let (hn, hd) = (interval.hi.num as i128, interval.hi.den as i128);
    let spread = hn * ld - ln * hd;
    if spread == 0 {
        // only multiples of the numerator
        if ln == 1 {
            return Ok(OracleSemigroup {
                table: vec![true],
                conductor: 0,
                multiplicity: 1,
            });
        }
        return Err(Error::NotNumerical(ln as i64));
    }
    // for n > lo·hi/(hi - lo) the real interval [n/hi, n/lo] is longer than 1
    // and so has an integer strictly inside
    let stable = ln * hn / spread + 1;
    let member = |n: i128| -> bool {
        if n == 0 {
            return true;
        }
        (1..=n * ld / ln).any(|k| {
            let above_lo = if interval.lo_open {
                n * ld > k * ln
            } else {
                n * ld >= k * ln
            };
            let below_hi = if interval.hi_open {
                n * hd < k * hn
            } else {
                n * hd <= k * hn
            };
            above_lo && below_hi
        })
    };
    let first = (1..=stable).find(|&n| member(n)).unwrap_or(stable);
    let len = stable + first + 1;
    if len > MAX_INTERVAL_SCAN as i128 {
        return Err(Error::TooLarge(format!("interval scan of {len} entries")));
    }
    let table: Vec<bool> = (0..len).map(member).collect();
    OracleSemigroup::from_table(table, first as i64)
}

/// `{x >= 0 : (a·x mod b) <= c·x}` by direct evaluation. Every
/// `x >= b - 1` qualifies since `a·x mod b <= b - 1 <= c·x`.
pub fn oracle_inequality(a: i64, b: i64, c: i64) -> Result<OracleSemigroup> {
    if a <= 0 || b <= 0 || c <= 0 {
        return Err(Error::BadParameters(format!(
            "need positive a, b, c, got {a}:{b}:{c}"
        )));
    }
    let member = |x: i64| ((a as i128 * x as i128) % b as i128) <= c as i128 * x as i128;
    let stable = b - 1;
    let first = (1..=stable.max(1))
        .find(|&x| member(x))
        .unwrap_or(stable.max(1));
    let len = stable + first + 1;
    if len > MAX_TABLE as i64 {
        return Err(Error::TooLarge(format!("inequality scan of {len} entries")));
    }
    let table: Vec<bool> = (0..len).map(member).collect();
    OracleSemigroup::from_table(table, first)
}

impl OracleSemigroup {
    /// `table[0..len]` with the last `multiplicity` entries required to be
    /// members, which makes every later integer a member as well.
    fn from_table(mut table: Vec<bool>, multiplicity: i64) -> Result<Self> {
        let m = multiplicity as usize;
        let len = table.len();
        if len < m || !table[len - m..].iter().all(|&b| b) {
            return Err(Error::Inconsistent(
                "oracle table did not stabilise within its bound".into(),
            ));
        }
        let conductor = table.iter().rposition(|&b| !b).map_or(0, |i| i + 1);
        table.truncate(conductor.max(1));
        Ok(OracleSemigroup {
            table,
            conductor: conductor as i64,
            multiplicity,
        })
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        self.table.get(x as usize).copied().unwrap_or(true)
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn is_whole_line(&self) -> bool {
        self.multiplicity == 1
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    pub fn genus(&self) -> i64 {
        self.gaps().len() as i64
    }

    /// Nonzero elements below the conductor.
    fn small_elements(&self) -> Vec<i64> {
        (1..self.conductor).filter(|&x| self.contains(x)).collect()
    }

    /// Elements that are not a sum of two nonzero elements. All of them are
    /// at most `conductor + multiplicity`.
    pub fn min_generators(&self) -> Vec<i64> {
        let top = self.conductor + self.multiplicity;
        let elements: Vec<i64> = (1..=top).filter(|&x| self.contains(x)).collect();
        elements
            .iter()
            .copied()
            .filter(|&x| {
                !elements
                    .iter()
                    .take_while(|&&y| 2 * y <= x)
                    .any(|&y| self.contains(x - y))
            })
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_generators().len()
    }

    /// Gaps `f` with `f + h ∈ H` for every nonzero `h ∈ H`; `[-1]` for `N`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_whole_line() {
            return vec![-1];
        }
        let small = self.small_elements();
        self.gaps()
            .into_iter()
            .filter(|&f| small.iter().all(|&h| self.contains(f + h)))
            .collect()
    }

    pub fn type_of(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// Least element in each residue class modulo `n`, sorted.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        let mut seen = vec![false; n as usize];
        let mut out = Vec::with_capacity(n as usize);
        let mut x = 0;
        while out.len() < n as usize {
            if self.contains(x) && !seen[(x % n) as usize] {
                seen[(x % n) as usize] = true;
                out.push(x);
            }
            x += 1;
        }
        Ok(out)
    }

    /// `x ∈ H` or `F - x ∈ H` for every integer `x`.
    pub fn symmetric_by_definition(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|x| self.contains(x) || self.contains(f - x))
    }

    /// `F` even and `x ∈ H` or `F - x ∈ H` for every `x != F/2`.
    pub fn pseudo_symmetric_by_definition(&self) -> bool {
        let f = self.frobenius();
        f > 0
            && f % 2 == 0
            && !self.contains(f / 2)
            && (0..=f).all(|x| x == f / 2 || self.contains(x) || self.contains(f - x))
    }

    /// Members of `K = {F - x : x ∉ H}` below `F + 1`; every `z > F` is in `K`.
    pub fn canonical_below_conductor(&self) -> Vec<i64> {
        let f = self.frobenius();
        (0..=f).filter(|&z| !self.contains(f - z)).collect()
    }

    /// `K ⊆ M - M`: `k + h ∈ H` for every `k ∈ K` and nonzero `h ∈ H`.
    pub fn almost_symmetric_by_definition(&self) -> bool {
        let small = self.small_elements();
        self.canonical_below_conductor()
            .into_iter()
            .all(|k| small.iter().all(|&h| self.contains(k + h)))
    }

    /// `M - M = {z : z + h ∈ H for all nonzero h ∈ H}`, `None` for `N`, where
    /// it is not contained in the nonnegative integers.
    pub fn dual_of_maximal(&self) -> Option<OracleSemigroup> {
        if self.is_whole_line() {
            return None;
        }
        let m = self.multiplicity;
        // z >= -m for any member, and then z + h >= conductor once h >= conductor + m
        let nonzero: Vec<i64> = (1..self.conductor + m)
            .filter(|&x| self.contains(x))
            .collect();
        let in_dual = |z: i64| nonzero.iter().all(|&h| self.contains(z + h));
        debug_assert!((-m..0).all(|z| !in_dual(z)));
        let table: Vec<bool> = (0..self.conductor + m).map(in_dual).collect();
        let first = (1..)
            .find(|&z| in_dual(z))
            .expect("dual contains the conductor");
        OracleSemigroup::from_table(table, first).ok()
    }

    /// `{a ∈ H : a - m ∉ M - M}` within the first multiplicity period of the
    /// dual's Apéry set.
    pub fn l_set(&self) -> Option<Vec<i64>> {
        let dual = self.dual_of_maximal()?;
        let m = self.multiplicity;
        let top = self.conductor + 2 * m;
        Some(
            (0..top)
                .filter(|&a| self.contains(a) && !dual.contains(a - m))
                .collect(),
        )
    }
}
