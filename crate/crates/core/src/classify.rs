//! Symmetric, pseudo-symmetric and almost symmetric semigroups.
//!
//! Almost symmetry is decided by `2g = F + t`. The other characterizations
//! are exposed as separate functions so they can be compared against each
//! other:
//!
//! * [`almost_symmetric_by_pf_symmetry`]: `f_i + f_{t-i} = F` for the sorted
//!   pseudo-Frobenius numbers,
//! * [`almost_symmetric_by_apery_pairing`]: the α/β pairing inside
//!   `Ap(H, n)`,
//! * [`almost_symmetric_by_gap_dichotomy`]: every gap `z` has `F - z ∈ H` or
//!   `z ∈ PF(H)`,
//! * [`almost_symmetric_by_canonical_ideal`]: `K ⊆ M - M`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassKind {
    Symmetric,
    PseudoSymmetric,
    AlmostSymmetricOther,
    NotAlmostSymmetric,
}

impl ClassKind {
    pub fn label(self) -> &'static str {
        match self {
            ClassKind::Symmetric => "symmetric",
            ClassKind::PseudoSymmetric => "pseudo-symmetric",
            ClassKind::AlmostSymmetricOther => "almost-symmetric",
            ClassKind::NotAlmostSymmetric => "none",
        }
    }

    pub fn is_almost_symmetric(self) -> bool {
        self != ClassKind::NotAlmostSymmetric
    }
}

/// Least index `i` (1-based, PF sorted ascending with `f_t = F`) for which
/// `f_i + f_{t-i} != F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PfViolation {
    pub index: usize,
    pub sum: i64,
    pub frobenius: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryClass {
    pub kind: ClassKind,
    #[serde(rename = "type")]
    pub type_: usize,
    pub violation: Option<PfViolation>,
    /// A gap `z` with `F - z ∉ H` and `z ∉ PF(H)`, if any.
    pub gap_witness: Option<i64>,
}

pub fn classify(h: &NumericalSemigroup) -> SymmetryClass {
    let t = h.type_of();
    let kind = if !is_almost_symmetric(h) {
        ClassKind::NotAlmostSymmetric
    } else {
        match t {
            1 => ClassKind::Symmetric,
            2 => ClassKind::PseudoSymmetric,
            _ => ClassKind::AlmostSymmetricOther,
        }
    };
    debug_assert_eq!(kind == ClassKind::Symmetric, is_symmetric(h));
    debug_assert_eq!(kind == ClassKind::PseudoSymmetric, is_pseudo_symmetric(h));
    SymmetryClass {
        kind,
        type_: t,
        violation: pf_symmetry_violation(h),
        gap_witness: gap_dichotomy_witness(h),
    }
}

fn twice_genus_minus_frobenius(h: &NumericalSemigroup) -> i64 {
    2 * h.genus() - h.frobenius()
}

/// `2g = F + 1`.
pub fn is_symmetric(h: &NumericalSemigroup) -> bool {
    let sym = twice_genus_minus_frobenius(h) == 1;
    debug_assert_eq!(sym, h.type_of() == 1);
    debug_assert_eq!(sym, symmetric_by_definition(h));
    sym
}

/// For every `z`, `z ∈ H` or `F - z ∈ H`.
pub fn symmetric_by_definition(h: &NumericalSemigroup) -> bool {
    let f = h.frobenius();
    (0..=f).all(|z| h.contains(z) || h.contains(f - z))
}

/// `2g = F + 2`.
pub fn is_pseudo_symmetric(h: &NumericalSemigroup) -> bool {
    let ps = twice_genus_minus_frobenius(h) == 2;
    debug_assert_eq!(ps, pseudo_symmetric_by_definition(h));
    ps
}

/// `F` even, and for every `z != F/2`, `z ∈ H` or `F - z ∈ H`.
pub fn pseudo_symmetric_by_definition(h: &NumericalSemigroup) -> bool {
    let f = h.frobenius();
    f >= 0
        && f % 2 == 0
        && (0..=f)
            .filter(|&z| 2 * z != f)
            .all(|z| h.contains(z) || h.contains(f - z))
}

/// `2g = F + t`, with the other characterizations checked in debug builds.
pub fn is_almost_symmetric(h: &NumericalSemigroup) -> bool {
    let asym = twice_genus_minus_frobenius(h) == h.type_of() as i64;
    debug_assert_eq!(asym, almost_symmetric_by_pf_symmetry(h));
    debug_assert_eq!(asym, almost_symmetric_by_canonical_ideal(h));
    asym
}

pub fn almost_symmetric_by_pf_symmetry(h: &NumericalSemigroup) -> bool {
    pf_symmetry_violation(h).is_none()
}

/// With `PF = {f_1 < ... < f_t = F}`, the least `i` in `1..t` where
/// `f_i + f_{t-i} != F`, and that sum.
pub fn pf_symmetry_violation(h: &NumericalSemigroup) -> Option<PfViolation> {
    let pf = h.pseudo_frobenius();
    let t = pf.len();
    let f = pf[t - 1];
    (1..t).find_map(|i| {
        let sum = pf[i - 1] + pf[t - i - 1];
        (sum != f).then_some(PfViolation {
            index: i,
            sum,
            frobenius: f,
        })
    })
}

fn gap_dichotomy_witness(h: &NumericalSemigroup) -> Option<i64> {
    let f = h.frobenius();
    let pf = h.pseudo_frobenius();
    (1..=f).find(|&z| !h.contains(z) && !h.contains(f - z) && !pf.contains(&z))
}

/// Every gap `z` has `F - z ∈ H` or `z ∈ PF(H)`.
pub fn almost_symmetric_by_gap_dichotomy(h: &NumericalSemigroup) -> bool {
    gap_dichotomy_witness(h).is_none()
}

/// `K_H = {F(H) - z : z ∉ H}`. Undefined for `N`.
pub fn canonical_ideal(h: &NumericalSemigroup) -> Result<RelativeIdeal> {
    if h.is_whole_line() {
        return Err(Error::WholeLine);
    }
    let f = h.frobenius();
    Ok(RelativeIdeal::from_window(h, 0, f + 1, |x| {
        !h.contains(f - x)
    }))
}

/// `K_H ⊆ M - M`. On `N` the canonical ideal is `N` itself and `M - M = N`.
pub fn almost_symmetric_by_canonical_ideal(h: &NumericalSemigroup) -> bool {
    let Ok(k) = canonical_ideal(h) else {
        return true;
    };
    let m = RelativeIdeal::maximal(h);
    let dual = m.subtract(&m).expect("same base");
    k.is_subset(&dual)
}

/// Splits `Ap(H, n)` into the α part (0, the maximum, and the elements not
/// coming from pseudo-Frobenius numbers) and the β part (`w` below the
/// maximum with `w - n ∈ PF(H)`).
pub fn apery_partition(h: &NumericalSemigroup, n: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let ap = h.apery_set(n)?;
    let pf = h.pseudo_frobenius();
    let top = ap.max();
    let (betas, alphas): (Vec<i64>, Vec<i64>) = ap
        .elements
        .iter()
        .partition(|&&w| w != top && pf.binary_search(&(w - n)).is_ok());
    debug_assert_eq!(alphas.len() + pf.len(), n as usize + 1);
    Ok((alphas, betas))
}

/// `α_i + α_{m-i} = α_m` for `1 <= i < m` and `β_j + β_{t-j} = α_m + n` for
/// `1 <= j < t`, where `α_0 = 0 < α_1 < ... < α_m` and `β_1 < ... < β_{t-1}`.
pub fn almost_symmetric_by_apery_pairing(h: &NumericalSemigroup, n: i64) -> Result<bool> {
    let (alphas, betas) = apery_partition(h, n)?;
    let m = alphas.len() - 1;
    let top = alphas[m];
    let alpha_ok = (1..m).all(|i| alphas[i] + alphas[m - i] == top);
    let k = betas.len();
    let beta_ok = (0..k).all(|j| betas[j] + betas[k - 1 - j] == top + n);
    Ok(alpha_ok && beta_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn arithmetic_family(a: i64) -> NumericalSemigroup {
        let gens: Vec<i64> = (0..a).map(|i| a + 2 * i).collect();
        sg(&gens)
    }

    #[test]
    fn symmetric_examples() {
        assert!(is_symmetric(&sg(&[2, 3])));
        assert!(is_symmetric(&sg(&[5, 7, 8, 9])));
        assert!(!is_symmetric(&sg(&[5, 7, 16])));
        assert!(is_symmetric(&NumericalSemigroup::whole_line()));
    }

    #[test]
    fn pseudo_symmetric_examples() {
        assert!(is_pseudo_symmetric(&sg(&[5, 7, 16])));
        assert!(is_pseudo_symmetric(&sg(&[3, 4, 5])));
        assert!(!is_pseudo_symmetric(&sg(&[2, 3])));
        assert!(!is_pseudo_symmetric(&NumericalSemigroup::whole_line()));
    }

    #[test]
    fn almost_symmetric_examples() {
        assert!(!is_almost_symmetric(&sg(&[4, 5, 11])));
        assert!(is_almost_symmetric(&sg(&[5, 8, 11, 12])));
        for a in (3..=15).step_by(2) {
            assert!(is_almost_symmetric(&arithmetic_family(a)), "a = {a}");
        }
        let glued = sg(&[84, 119, 136, 140, 154, 170, 182, 196, 221]);
        assert!(!is_almost_symmetric(&glued));
    }

    #[test]
    fn pf_violations() {
        assert_eq!(
            pf_symmetry_violation(&sg(&[4, 5, 11])),
            Some(PfViolation {
                index: 1,
                sum: 12,
                frobenius: 7
            })
        );
        assert_eq!(pf_symmetry_violation(&sg(&[5, 7, 9, 11, 13])), None);
        assert_eq!(pf_symmetry_violation(&sg(&[2, 3])), None);
    }

    #[test]
    fn canonical_ideals() {
        let h = sg(&[2, 5]);
        assert_eq!(canonical_ideal(&h).unwrap(), RelativeIdeal::principal(&h));

        // F = 2, gaps {1, 2}: K = {1, 0} ∪ [3, inf)
        let k = canonical_ideal(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(k.below(), &[0, 1]);
        assert_eq!(k.conductor(), 3);

        let h = sg(&[4, 5, 11]);
        let k = canonical_ideal(&h).unwrap();
        let m = RelativeIdeal::maximal(&h);
        assert!(!k.is_subset(&m.subtract(&m).unwrap()));
        assert!(RelativeIdeal::principal(&h).is_subset(&k));

        assert_eq!(
            canonical_ideal(&NumericalSemigroup::whole_line()),
            Err(Error::WholeLine)
        );
    }

    #[test]
    fn apery_partitions() {
        let (a, b) = apery_partition(&sg(&[5, 8, 11, 12]), 5).unwrap();
        assert_eq!(a, vec![0, 8, 11, 19]);
        assert_eq!(b, vec![12]);
        let (a, b) = apery_partition(&sg(&[4, 5, 11]), 4).unwrap();
        assert_eq!(a, vec![0, 5, 11]);
        assert_eq!(b, vec![10]);
        let (a, b) = apery_partition(&NumericalSemigroup::whole_line(), 1).unwrap();
        assert_eq!(a, vec![0]);
        assert!(b.is_empty());
        let (a, b) = apery_partition(&sg(&[3, 4, 5]), 3).unwrap();
        assert_eq!(a, vec![0, 5]);
        assert_eq!(b, vec![4]);
    }

    #[test]
    fn characterizations_agree_on_examples() {
        for gens in [
            &[5, 8, 11, 12][..],
            &[4, 5, 11],
            &[6, 7, 8],
            &[5, 7, 9, 11, 13],
            &[3, 4, 5],
            &[5, 7, 16],
            &[4, 6, 9],
            &[1],
        ] {
            let h = sg(gens);
            let expected = is_almost_symmetric(&h);
            assert_eq!(almost_symmetric_by_pf_symmetry(&h), expected);
            assert_eq!(almost_symmetric_by_gap_dichotomy(&h), expected);
            assert_eq!(almost_symmetric_by_canonical_ideal(&h), expected);
            let m = h.multiplicity();
            assert_eq!(almost_symmetric_by_apery_pairing(&h, m).unwrap(), expected);
            assert_eq!(
                almost_symmetric_by_apery_pairing(
                    &h,
                    m + h.min_generators()[h.embedding_dimension() - 1]
                )
                .unwrap(),
                expected
            );
        }
    }

    #[test]
    fn classification_kinds() {
        assert_eq!(classify(&sg(&[2, 3])).kind, ClassKind::Symmetric);
        assert_eq!(classify(&sg(&[5, 7, 16])).kind, ClassKind::PseudoSymmetric);
        assert_eq!(
            classify(&sg(&[5, 7, 9, 11, 13])).kind,
            ClassKind::AlmostSymmetricOther
        );
        let c = classify(&sg(&[5, 8, 11, 12]));
        assert_eq!(c.kind, ClassKind::PseudoSymmetric);
        assert_eq!(c.type_, 2);
        assert!(c.gap_witness.is_none());
        let c = classify(&sg(&[4, 5, 11]));
        assert_eq!(c.kind, ClassKind::NotAlmostSymmetric);
        assert_eq!(c.type_, 2);
        assert!(c.gap_witness.is_some());
    }
}
