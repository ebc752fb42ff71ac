//! Gluings `<x·H1, y·H2>` and complete intersections.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, GluingViolation, Result};
use crate::semigroup::NumericalSemigroup;
use crate::util::{gcd, gcd_all};

/// Two semigroups and multipliers with `gcd(x, y) = 1`, `y ∈ H1` not a
/// minimal generator of `H1`, and `x ∈ H2` not a minimal generator of `H2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingSpec {
    pub h1: NumericalSemigroup,
    pub h2: NumericalSemigroup,
    pub x: i64,
    pub y: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GluingSummary {
    pub h1: Vec<i64>,
    pub h2: Vec<i64>,
    pub x: i64,
    pub y: i64,
}

impl GluingSpec {
    pub fn new(h1: NumericalSemigroup, h2: NumericalSemigroup, x: i64, y: i64) -> Result<Self> {
        let spec = GluingSpec { h1, h2, x, y };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |v| Err(Error::InvalidGluing(v));
        if self.x <= 0 || self.y <= 0 {
            return fail(GluingViolation::NonPositiveMultiplier);
        }
        if gcd(self.x, self.y) != 1 {
            return fail(GluingViolation::NotCoprime {
                x: self.x,
                y: self.y,
            });
        }
        if !self.h1.contains(self.y) {
            return fail(GluingViolation::YNotInFirst(self.y));
        }
        if self.h1.is_minimal_generator(self.y) {
            return fail(GluingViolation::YIsGenerator(self.y));
        }
        if !self.h2.contains(self.x) {
            return fail(GluingViolation::XNotInSecond(self.x));
        }
        if self.h2.is_minimal_generator(self.x) {
            return fail(GluingViolation::XIsGenerator(self.x));
        }
        Ok(())
    }

    /// `x·gens(H1) ∪ y·gens(H2)`, sorted.
    pub fn combined_generators(&self) -> Vec<i64> {
        let mut gens: Vec<i64> = self
            .h1
            .min_generators()
            .iter()
            .map(|a| self.x * a)
            .chain(self.h2.min_generators().iter().map(|b| self.y * b))
            .collect();
        gens.sort_unstable();
        gens
    }

    pub fn summary(&self) -> GluingSummary {
        GluingSummary {
            h1: self.h1.min_generators().to_vec(),
            h2: self.h2.min_generators().to_vec(),
            x: self.x,
            y: self.y,
        }
    }
}

/// `H = <x·H1, y·H2>`. The combined generating set must already be minimal.
pub fn glue(spec: &GluingSpec) -> Result<NumericalSemigroup> {
    spec.validate()?;
    let gens = spec.combined_generators();
    let h = NumericalSemigroup::from_generators(&gens)?;
    if h.min_generators() != gens.as_slice() {
        return Err(Error::InvalidGluing(GluingViolation::NotMinimal(gens)));
    }
    Ok(h)
}

/// `Ap(H, xy) = {x·s + y·t : s ∈ Ap(H1, y), t ∈ Ap(H2, x)}`, sorted.
pub fn apery_of_gluing(spec: &GluingSpec) -> Result<Vec<i64>> {
    spec.validate()?;
    let ap1 = spec.h1.apery_set(spec.y)?;
    let ap2 = spec.h2.apery_set(spec.x)?;
    let mut out: Vec<i64> = ap1
        .elements
        .iter()
        .flat_map(|s| ap2.elements.iter().map(move |t| spec.x * s + spec.y * t))
        .collect();
    out.sort_unstable();
    debug_assert_eq!(out.len() as i64, spec.x * spec.y);
    debug_assert_eq!(
        Ok(&out),
        glue(spec)
            .and_then(|h| h.apery_set(spec.x * spec.y))
            .map(|a| a.elements)
            .as_ref()
    );
    Ok(out)
}

/// `PF(H) = {x·f + y·f' + xy : f ∈ PF(H1), f' ∈ PF(H2)}`, sorted. Uses
/// `PF(N) = {-1}` when a factor is the whole line.
pub fn pf_of_gluing(spec: &GluingSpec) -> Result<Vec<i64>> {
    spec.validate()?;
    let xy = spec.x * spec.y;
    let pf2 = spec.h2.pseudo_frobenius();
    let mut out: Vec<i64> = spec
        .h1
        .pseudo_frobenius()
        .iter()
        .flat_map(|f| pf2.iter().map(move |g| spec.x * f + spec.y * g + xy))
        .collect();
    out.sort_unstable();
    debug_assert_eq!(Ok(&out), glue(spec).map(|h| h.pseudo_frobenius()).as_ref());
    Ok(out)
}

/// `F(H) = x·F(H1) + y·F(H2) + xy`.
pub fn frobenius_of_gluing(spec: &GluingSpec) -> Result<i64> {
    spec.validate()?;
    let f = spec.x * spec.h1.frobenius() + spec.y * spec.h2.frobenius() + spec.x * spec.y;
    debug_assert_eq!(Ok(f), glue(spec).map(|h| h.frobenius()));
    Ok(f)
}

/// Every split of the minimal generators into `A ∪ B` such that
/// `H = <d1·<A/d1>, d2·<B/d2>>` is a valid gluing, with `d1 = gcd(A)` and
/// `d2 = gcd(B)`. The part containing the multiplicity is always `A`.
pub fn find_gluing_decompositions(h: &NumericalSemigroup) -> Vec<GluingSpec> {
    let gens = h.min_generators();
    let e = gens.len();
    if e < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    // bit i set => gens[i] in B; gens[0] stays in A
    for mask in 1u64..(1u64 << (e - 1)) {
        let mask = mask << 1;
        let (a_part, b_part): (Vec<i64>, Vec<i64>) = {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (i, &g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    b.push(g);
                } else {
                    a.push(g);
                }
            }
            (a, b)
        };
        let d1 = gcd_all(&a_part);
        let d2 = gcd_all(&b_part);
        // a multiplier of 1 would have to be a non-generator of N
        if d1 < 2 || d2 < 2 || gcd(d1, d2) != 1 {
            continue;
        }
        let scaled = |part: &[i64], d: i64| -> Vec<i64> { part.iter().map(|g| g / d).collect() };
        let (Ok(h1), Ok(h2)) = (
            NumericalSemigroup::from_generators(&scaled(&a_part, d1)),
            NumericalSemigroup::from_generators(&scaled(&b_part, d2)),
        ) else {
            continue;
        };
        let spec = GluingSpec {
            h1,
            h2,
            x: d1,
            y: d2,
        };
        if spec.validate().is_ok() && glue(&spec).as_ref() == Ok(h) {
            out.push(spec);
        }
    }
    out
}

/// `N` is a complete intersection, and `H != N` is one iff it is a gluing of
/// two complete intersections.
pub fn is_complete_intersection(h: &NumericalSemigroup) -> bool {
    let mut memo = HashMap::new();
    ci_memo(h, &mut memo)
}

fn ci_memo(h: &NumericalSemigroup, memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    if h.is_whole_line() {
        return true;
    }
    if let Some(&known) = memo.get(h.min_generators()) {
        return known;
    }
    let result = find_gluing_decompositions(h)
        .iter()
        .any(|spec| ci_memo(&spec.h1, memo) && ci_memo(&spec.h2, memo));
    memo.insert(h.min_generators().to_vec(), result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn example_spec() -> GluingSpec {
        GluingSpec::new(sg(&[6, 10, 11, 13, 14]), sg(&[7, 8, 10, 13]), 14, 17).unwrap()
    }

    fn small_spec() -> GluingSpec {
        GluingSpec::new(sg(&[2, 3]), NumericalSemigroup::whole_line(), 2, 9).unwrap()
    }

    #[test]
    fn glue_examples() {
        assert_eq!(
            glue(&example_spec()).unwrap().min_generators(),
            &[84, 119, 136, 140, 154, 170, 182, 196, 221]
        );
        assert_eq!(glue(&small_spec()).unwrap(), sg(&[4, 6, 9]));
        for b in [5, 7, 11] {
            let t = sg(&[3, b, 2 * b - 3]);
            let k = 3 * b;
            let spec = GluingSpec::new(t, NumericalSemigroup::whole_line(), 2, k).unwrap();
            assert_eq!(glue(&spec).unwrap(), sg(&[6, 2 * b, 4 * b - 6, k]));
        }
    }

    #[test]
    fn invalid_specs() {
        let err = |h1: &[i64], h2: &[i64], x, y| GluingSpec::new(sg(h1), sg(h2), x, y).unwrap_err();
        assert_eq!(
            err(&[2, 3], &[2, 3], 5, 5),
            Error::InvalidGluing(GluingViolation::NotCoprime { x: 5, y: 5 })
        );
        assert_eq!(
            err(&[2, 3], &[1], 2, 3),
            Error::InvalidGluing(GluingViolation::YIsGenerator(3))
        );
        assert_eq!(
            err(&[3, 4, 5], &[1], 2, 1),
            Error::InvalidGluing(GluingViolation::YNotInFirst(1))
        );
        assert_eq!(
            err(&[2, 3], &[2, 3], 3, 5),
            Error::InvalidGluing(GluingViolation::XIsGenerator(3))
        );
        assert_eq!(
            err(&[2, 3], &[3, 4, 5], 2, 5),
            Error::InvalidGluing(GluingViolation::XNotInSecond(2))
        );
    }

    #[test]
    fn apery_of_glued() {
        let ap = apery_of_gluing(&small_spec()).unwrap();
        assert_eq!(ap.len(), 18);
        assert_eq!(ap, sg(&[4, 6, 9]).apery_set(18).unwrap().elements);
        let spec = example_spec();
        let ap = apery_of_gluing(&spec).unwrap();
        assert_eq!(ap.len(), 238);
        assert_eq!(
            *ap.last().unwrap(),
            spec.x * spec.h1.frobenius() + spec.y * spec.h2.frobenius() + 2 * spec.x * spec.y
        );
    }

    #[test]
    fn pf_of_glued() {
        assert_eq!(example_spec().h1.pseudo_frobenius(), vec![7, 8, 15]);
        assert_eq!(example_spec().h2.pseudo_frobenius(), vec![19]);
        assert_eq!(pf_of_gluing(&example_spec()).unwrap(), vec![659, 673, 771]);
        assert_eq!(pf_of_gluing(&small_spec()).unwrap(), vec![11]);
    }

    #[test]
    fn frobenius_of_glued() {
        assert_eq!(frobenius_of_gluing(&example_spec()), Ok(771));
        assert_eq!(frobenius_of_gluing(&small_spec()), Ok(11));
    }

    #[test]
    fn decompositions() {
        let decs = find_gluing_decompositions(&sg(&[4, 6, 9]));
        let summaries: Vec<GluingSummary> = decs.iter().map(|d| d.summary()).collect();
        assert_eq!(
            summaries,
            vec![
                GluingSummary {
                    h1: vec![2, 3],
                    h2: vec![1],
                    x: 2,
                    y: 9
                },
                GluingSummary {
                    h1: vec![1],
                    h2: vec![2, 3],
                    x: 4,
                    y: 3
                },
            ]
        );
        assert!(find_gluing_decompositions(&sg(&[5, 8, 11, 12])).is_empty());
        assert!(find_gluing_decompositions(&NumericalSemigroup::whole_line()).is_empty());
    }

    #[test]
    fn complete_intersections() {
        assert!(is_complete_intersection(&sg(&[2, 3])));
        assert!(is_complete_intersection(&sg(&[4, 6, 9])));
        assert!(!is_complete_intersection(&sg(&[5, 7, 16])));
        assert!(is_complete_intersection(&NumericalSemigroup::whole_line()));
    }
}
