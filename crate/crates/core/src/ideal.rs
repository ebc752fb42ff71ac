//! Relative ideals, the dual `H* = M - M` of the maximal ideal, and the
//! constructions built on it.

use serde::Serialize;

use crate::classify;
use crate::error::{Error, Result};
use crate::semigroup::{AperySet, NumericalSemigroup};

/// A bounded-below set `I` of integers with `I + H ⊆ I`.
///
/// Stored as the finitely many members below the conductor, plus the
/// conductor itself: every integer `>= conductor` is a member and
/// `conductor - 1` is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeIdeal {
    #[serde(skip)]
    base: NumericalSemigroup,
    below: Vec<i64>,
    conductor: i64,
}

impl RelativeIdeal {
    /// Builds the ideal `{z : member(z)}` given that no `z < lo` is a member
    /// and every `z >= hi` is.
    pub(crate) fn from_window<F>(base: &NumericalSemigroup, lo: i64, hi: i64, member: F) -> Self
    where
        F: Fn(i64) -> bool,
    {
        let ideal = Self::from_window_unchecked(base, lo, hi, member);
        debug_assert!(
            ideal.is_closed(),
            "window predicate is not a relative ideal"
        );
        ideal
    }

    fn from_window_unchecked<F>(base: &NumericalSemigroup, lo: i64, hi: i64, member: F) -> Self
    where
        F: Fn(i64) -> bool,
    {
        let hi = hi.max(lo);
        let conductor = (lo..hi).rev().find(|&z| !member(z)).map_or(lo, |z| z + 1);
        let below: Vec<i64> = (lo..conductor).filter(|&z| member(z)).collect();
        RelativeIdeal {
            base: base.clone(),
            below,
            conductor,
        }
    }

    /// Validating constructor from explicit data.
    pub fn new(base: &NumericalSemigroup, below: &[i64], conductor: i64) -> Result<Self> {
        let mut sorted: Vec<i64> = below.iter().copied().filter(|&z| z < conductor).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let lo = sorted.first().copied().unwrap_or(conductor);
        let ideal = Self::from_window_unchecked(base, lo, conductor, |z| {
            z >= conductor || sorted.binary_search(&z).is_ok()
        });
        if !ideal.is_closed() {
            return Err(Error::BadParameters(
                "set is not closed under adding semigroup elements".into(),
            ));
        }
        Ok(ideal)
    }

    /// `H` regarded as an ideal of itself.
    pub fn principal(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 0, base.conductor(), |z| base.contains(z))
    }

    /// The maximal ideal `M = H \ {0}`.
    pub fn maximal(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 1, base.conductor().max(1), |z| {
            z > 0 && base.contains(z)
        })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn below(&self) -> &[i64] {
        &self.below
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn min(&self) -> i64 {
        self.below.first().copied().unwrap_or(self.conductor)
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.conductor || self.below.binary_search(&z).is_ok()
    }

    fn is_closed(&self) -> bool {
        self.below.iter().all(|&z| {
            self.base
                .min_generators()
                .iter()
                .all(|&a| self.contains(z + a))
        })
    }

    /// Members in `[lo, hi)`.
    fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(self.min())..hi).filter(move |&z| self.contains(z))
    }

    /// `I - J = {z : z + J ⊆ I}`.
    ///
    /// `z + min(J)` must lie in `I`, so `z >= min(I) - min(J)`; for
    /// `z >= conductor(I) - min(J)` every translate lands above the
    /// conductor. Inside that window only `j < conductor(I) - z` need checking.
    pub fn subtract(&self, other: &RelativeIdeal) -> Result<RelativeIdeal> {
        if self.base != other.base {
            return Err(Error::BadParameters(
                "ideals of different semigroups".into(),
            ));
        }
        let lo = self.min() - other.min();
        let hi = self.conductor - other.min();
        Ok(Self::from_window(&self.base, lo, hi, |z| {
            other
                .members_in(other.min(), self.conductor - z)
                .all(|j| self.contains(z + j))
        }))
    }

    pub fn is_subset(&self, other: &RelativeIdeal) -> bool {
        self.min() >= other.min()
            && self.below.iter().all(|&z| other.contains(z))
            && (self.conductor..other.conductor).all(|z| other.contains(z))
    }

    /// Reads the ideal as a numerical semigroup; only valid when it contains
    /// 0, has no negative members and is closed under addition.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.min() != 0 {
            return Err(Error::BadParameters(format!(
                "ideal has minimum {} instead of 0",
                self.min()
            )));
        }
        let sg = NumericalSemigroup::from_membership(|z| self.contains(z), self.conductor)?;
        if self.below.iter().any(|&z| !sg.contains(z)) || sg.conductor() != self.conductor.max(0) {
            return Err(Error::BadParameters(
                "ideal is not additively closed".into(),
            ));
        }
        Ok(sg)
    }
}

/// `H* = M - M`, which equals `H ∪ PF(H)`.
pub fn dual_of_maximal(h: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if h.is_whole_line() {
        return Err(Error::WholeLine);
    }
    let m = RelativeIdeal::maximal(h);
    let dual = m.subtract(&m)?.to_semigroup()?;
    debug_assert!({
        let pf = h.pseudo_frobenius();
        (0..=h.conductor()).all(|z| dual.contains(z) == (h.contains(z) || pf.contains(&z)))
    });
    Ok(dual)
}

/// `L(H) = {a ∈ H : a - m(H) ∉ H*}`; has `m(H) - t(H)` elements.
pub fn l_set(h: &NumericalSemigroup) -> Result<Vec<i64>> {
    let dual = dual_of_maximal(h)?;
    let m = h.multiplicity();
    let l: Vec<i64> = h
        .elements_in(0, h.frobenius() + m + 1)
        .into_iter()
        .filter(|&a| !dual.contains(a - m))
        .collect();
    debug_assert_eq!(l.len() as i64, m - h.type_of() as i64);
    Ok(l)
}

/// `Ap(H*, m(H))`, which coincides with `PF(H) ∪ L(H)`.
pub fn apery_of_dual(h: &NumericalSemigroup) -> Result<AperySet> {
    let dual = dual_of_maximal(h)?;
    let ap = dual.apery_set(h.multiplicity())?;
    debug_assert!({
        let mut union = h.pseudo_frobenius();
        union.extend(l_set(h)?);
        union.sort_unstable();
        union == ap.elements
    });
    Ok(ap)
}

/// `F(H*) = F(H) - m(H)`. For `N` this returns `-1`, since `M - M = N`.
pub fn frobenius_of_dual(h: &NumericalSemigroup) -> i64 {
    if h.is_whole_line() {
        return -1;
    }
    let f = h.frobenius() - h.multiplicity();
    debug_assert_eq!(Ok(f), dual_of_maximal(h).map(|d| d.frobenius()));
    f
}

/// `T = <h, h + w_1, ..., h + w_{h-1}>` where `Ap(H, h) = {0, w_1, ...}`.
/// `T` has maximal embedding dimension and `T* = H`.
pub fn med_cover(h: &NumericalSemigroup, element: i64) -> Result<NumericalSemigroup> {
    let ap = h.apery_set(element)?;
    let gens: Vec<i64> = ap.elements.iter().map(|&w| element + w).collect();
    let t = NumericalSemigroup::from_generators(&gens)?;
    debug_assert!(t.is_maximal_embedding_dimension());
    debug_assert!(t.is_whole_line() || dual_of_maximal(&t).as_ref() == Ok(h));
    Ok(t)
}

/// Almost-symmetry data for `H` and `H*` together with the
/// `m(H) = t(H) + t(H*)` test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub h_almost_symmetric: bool,
    pub dual_almost_symmetric: bool,
    pub multiplicity: i64,
    pub type_h: usize,
    pub type_dual: usize,
    pub type_sum_identity: bool,
}

pub fn dual_almost_symmetry_report(h: &NumericalSemigroup) -> Result<DualReport> {
    let dual = dual_of_maximal(h)?;
    let report = DualReport {
        h_almost_symmetric: classify::is_almost_symmetric(h),
        dual_almost_symmetric: classify::is_almost_symmetric(&dual),
        multiplicity: h.multiplicity(),
        type_h: h.type_of(),
        type_dual: dual.type_of(),
        type_sum_identity: h.multiplicity() == (h.type_of() + dual.type_of()) as i64,
    };
    debug_assert!(
        !report.h_almost_symmetric || report.dual_almost_symmetric == report.type_sum_identity
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn h_minus_m() {
        let h = sg(&[5, 6, 8, 9]);
        let dual = RelativeIdeal::principal(&h)
            .subtract(&RelativeIdeal::maximal(&h))
            .unwrap();
        assert_eq!(dual.below(), &[0]);
        assert_eq!(dual.conductor(), 3);
        for z in -5..20 {
            let want = h.contains(z) || [3, 4, 7].contains(&z);
            assert_eq!(dual.contains(z), want, "z = {z}");
        }
    }

    #[test]
    fn quotient_of_ideal_by_itself_contains_base() {
        let h = sg(&[5, 8, 11, 12]);
        for ideal in [RelativeIdeal::maximal(&h), RelativeIdeal::principal(&h)] {
            let q = ideal.subtract(&ideal).unwrap();
            assert!(RelativeIdeal::principal(&h).is_subset(&q));
        }
    }

    #[test]
    fn ideal_constructor_validates() {
        let h = sg(&[3, 5]);
        assert!(RelativeIdeal::new(&h, &[-2, 1, 3, 4, 6], 7).is_ok());
        assert!(RelativeIdeal::new(&h, &[0], 10).is_err());
        let i = RelativeIdeal::new(&h, &[0, 3, 5, 6], 8).unwrap();
        assert_eq!(i, RelativeIdeal::principal(&h));
        assert_eq!(i.conductor(), 8);
    }

    #[test]
    fn ideal_of_different_bases() {
        let a = RelativeIdeal::principal(&sg(&[2, 3]));
        let b = RelativeIdeal::principal(&sg(&[3, 4, 5]));
        assert!(a.subtract(&b).is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(dual_of_maximal(&sg(&[5, 6, 8, 9])).unwrap(), sg(&[3, 4, 5]));
        assert_eq!(dual_of_maximal(&sg(&[3, 7, 8])).unwrap(), sg(&[3, 4, 5]));
        assert_eq!(
            dual_of_maximal(&sg(&[5, 7, 9, 11, 13])).unwrap(),
            sg(&[2, 5])
        );
        assert_eq!(
            dual_of_maximal(&sg(&[2, 3])).unwrap(),
            NumericalSemigroup::whole_line()
        );
        assert_eq!(dual_of_maximal(&sg(&[1])), Err(Error::WholeLine));
    }

    #[test]
    fn l_sets() {
        assert_eq!(l_set(&sg(&[2, 3])).unwrap(), vec![0]);
        assert_eq!(l_set(&sg(&[3, 4, 5])).unwrap(), vec![0]);
        assert_eq!(l_set(&sg(&[5, 8, 11, 12])).unwrap(), vec![0, 8, 11]);
        assert_eq!(l_set(&sg(&[4, 5, 11])).unwrap().len(), 2);
    }

    #[test]
    fn apery_of_duals() {
        assert_eq!(
            apery_of_dual(&sg(&[3, 4, 5])).unwrap().elements,
            vec![0, 1, 2]
        );
        assert_eq!(apery_of_dual(&sg(&[2, 3])).unwrap().elements, vec![0, 1]);
        let ap = apery_of_dual(&sg(&[5, 6, 8, 9])).unwrap();
        let mut expected = vec![3, 4, 7];
        expected.extend(l_set(&sg(&[5, 6, 8, 9])).unwrap());
        expected.sort_unstable();
        assert_eq!(ap.elements, expected);
    }

    #[test]
    fn dual_frobenius() {
        assert_eq!(frobenius_of_dual(&sg(&[5, 6, 8, 9])), 2);
        assert_eq!(frobenius_of_dual(&sg(&[2, 3])), -1);
        assert_eq!(frobenius_of_dual(&sg(&[5, 7, 8, 9])), 6);
    }

    #[test]
    fn med_covers() {
        assert_eq!(
            med_cover(&sg(&[3, 4, 5]), 5).unwrap(),
            sg(&[5, 8, 9, 11, 12])
        );
        assert_eq!(
            med_cover(&NumericalSemigroup::whole_line(), 2).unwrap(),
            sg(&[2, 3])
        );
        assert_eq!(med_cover(&sg(&[3, 4, 5]), 3).unwrap(), sg(&[3, 7, 8]));
        assert_eq!(med_cover(&sg(&[3, 4, 5]), 2), Err(Error::NotAMember(2)));
    }

    #[test]
    fn dual_reports() {
        let r = dual_almost_symmetry_report(&sg(&[5, 7, 9, 11, 13])).unwrap();
        assert!(r.h_almost_symmetric && r.dual_almost_symmetric && r.type_sum_identity);
        assert_eq!((r.multiplicity, r.type_h, r.type_dual), (5, 4, 1));

        let r = dual_almost_symmetry_report(&sg(&[5, 8, 11, 12])).unwrap();
        assert!(r.h_almost_symmetric && r.dual_almost_symmetric && r.type_sum_identity);
        assert_eq!((r.multiplicity, r.type_h, r.type_dual), (5, 2, 3));

        let r = dual_almost_symmetry_report(&sg(&[4, 5, 11])).unwrap();
        assert!(!r.h_almost_symmetric);

        let r = dual_almost_symmetry_report(&sg(&[3, 4, 5])).unwrap();
        assert_eq!((r.multiplicity, r.type_h, r.type_dual), (3, 2, 1));
        assert!(r.h_almost_symmetric && r.dual_almost_symmetric && r.type_sum_identity);
    }
}
