//! Non-symmetric semigroups with three generators.
//!
//! For `H = <a, b, c>` not symmetric, the minimal relations
//! `c1·a = r12·b + r13·c`, `c2·b = r21·a + r23·c`, `c3·c = r31·a + r32·b`
//! have unique, strictly positive coefficients, and they are the 2×2 minors
//! of
//!
//! ```text
//! X^α    Y^β    Z^γ
//! Y^β'   Z^γ'   X^α'
//! ```
//!
//! with `α = r21`, `β = r32`, `γ = r13`, `α' = r31`, `β' = r12`, `γ' = r23`.

use std::fmt;

use serde::Serialize;

use crate::classify;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::util::gcd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HerzogMatrix {
    /// The labeling `(a, b, c)` the exponents refer to.
    pub generators: [i64; 3],
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
}

impl HerzogMatrix {
    /// `a = βγ + β'γ + β'γ'`, `b = γα + γ'α + γ'α'`, `c = αβ + α'β + α'β'`.
    pub fn generator_identities_hold(&self) -> bool {
        let [a, b, c] = self.generators;
        let (x, y, z) = (self.alpha, self.beta, self.gamma);
        let (xp, yp, zp) = (self.alpha_p, self.beta_p, self.gamma_p);
        a == y * z + yp * z + yp * zp
            && b == z * x + zp * x + zp * xp
            && c == x * y + xp * y + xp * yp
    }

    /// The three kernel relations read off the minors.
    pub fn kernel_relations_hold(&self) -> bool {
        let [a, b, c] = self.generators;
        (self.alpha + self.alpha_p) * a == self.beta_p * b + self.gamma * c
            && (self.beta + self.beta_p) * b == self.alpha * a + self.gamma_p * c
            && (self.gamma + self.gamma_p) * c == self.alpha_p * a + self.beta * b
    }

    pub fn rows(&self) -> [[(char, i64); 3]; 2] {
        [
            [('X', self.alpha), ('Y', self.beta), ('Z', self.gamma)],
            [('Y', self.beta_p), ('Z', self.gamma_p), ('X', self.alpha_p)],
        ]
    }
}

impl fmt::Display for HerzogMatrix {
    /// Two rows in the matrix layout; exponent 1 is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |(v, e): (char, i64)| {
            if e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        };
        let rows = self.rows();
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| cell(x)).collect())
            .collect();
        let widths: Vec<usize> = (0..3)
            .map(|j| cells[0][j].len().max(cells[1][j].len()))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            write!(f, "( {} )", line.join("  "))?;
            if i == 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Smallest `k > 0` with `k·p ∈ <q, r>`, and every way of writing `k·p` as
/// `u·q + v·r`.
fn minimal_relation(p: i64, q: i64, r: i64) -> (i64, Vec<(i64, i64)>) {
    // k = q always works (q·p = p·q), so the search is bounded by q
    for k in 1..=q {
        let target = k * p;
        let reps: Vec<(i64, i64)> = (0..=target / r)
            .filter(|v| (target - v * r) % q == 0)
            .map(|v| ((target - v * r) / q, v))
            .collect();
        if !reps.is_empty() {
            return (k, reps);
        }
    }
    unreachable!("q·p is always representable")
}

fn require_three_generated(h: &NumericalSemigroup) -> Result<()> {
    match h.embedding_dimension() {
        3 => Ok(()),
        e => Err(Error::NotThreeGenerated(e)),
    }
}

/// Exponent matrix with respect to the ascending labeling `a < b < c`.
pub fn herzog_matrix(h: &NumericalSemigroup) -> Result<HerzogMatrix> {
    require_three_generated(h)?;
    let g = h.min_generators();
    herzog_matrix_for(h, [g[0], g[1], g[2]])
}

/// Exponent matrix with respect to a chosen labeling of the generators.
pub fn herzog_matrix_for(h: &NumericalSemigroup, labeling: [i64; 3]) -> Result<HerzogMatrix> {
    require_three_generated(h)?;
    let mut sorted = labeling;
    sorted.sort_unstable();
    if sorted[..] != *h.min_generators() {
        return Err(Error::BadParameters(format!(
            "{labeling:?} is not an ordering of the minimal generators {:?}",
            h.min_generators()
        )));
    }
    if classify::is_symmetric(h) {
        return Err(Error::SymmetricInput);
    }
    let [a, b, c] = labeling;
    let unique_positive = |p: i64, q: i64, r: i64| -> Result<(i64, i64, i64)> {
        let (k, reps) = minimal_relation(p, q, r);
        match reps.as_slice() {
            [(u, v)] if *u > 0 && *v > 0 => Ok((k, *u, *v)),
            _ => Err(Error::Inconsistent(format!(
                "minimal relation {k}·{p} in <{q}, {r}> has representations {reps:?}"
            ))),
        }
    };
    let (c1, r12, r13) = unique_positive(a, b, c)?;
    let (c2, r21, r23) = unique_positive(b, a, c)?;
    let (c3, r31, r32) = unique_positive(c, a, b)?;
    let mat = HerzogMatrix {
        generators: labeling,
        alpha: r21,
        beta: r32,
        gamma: r13,
        alpha_p: r31,
        beta_p: r12,
        gamma_p: r23,
    };
    if c1 != r21 + r31 || c2 != r12 + r32 || c3 != r13 + r23 {
        return Err(Error::Inconsistent(format!(
            "minimal multiples ({c1}, {c2}, {c3}) do not split as the matrix {mat:?}"
        )));
    }
    debug_assert!(mat.generator_identities_hold());
    debug_assert!(mat.kernel_relations_hold());
    Ok(mat)
}

/// `{α·a + (γ+γ')·c - N, β'·b + (γ+γ')·c - N}` with `N = a + b + c`, sorted.
pub fn pf_from_matrix(mat: &HerzogMatrix) -> (i64, i64) {
    let [a, b, c] = mat.generators;
    let n = a + b + c;
    let cc = (mat.gamma + mat.gamma_p) * c;
    let first = mat.alpha * a + cc - n;
    let second = mat.beta_p * b + cc - n;
    (first.min(second), first.max(second))
}

/// `αβγ = 1` or `α'β'γ' = 1`.
pub fn is_pseudo_symmetric_by_matrix(h: &NumericalSemigroup) -> Result<bool> {
    let mat = herzog_matrix(h)?;
    let ps = mat.alpha * mat.beta * mat.gamma == 1 || mat.alpha_p * mat.beta_p * mat.gamma_p == 1;
    debug_assert_eq!(ps, classify::is_pseudo_symmetric(h));
    Ok(ps)
}

/// Generators ordered so that `gcd(a, b) = gcd(b, c) = 1` and
/// `d·b = a + c` with `d >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PmThreeGenArrangement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl PmThreeGenArrangement {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if gcd(a, b) != 1 || gcd(b, c) != 1 {
            return Err(Error::BadParameters(format!(
                "need gcd(a, b) = gcd(b, c) = 1 for ({a}, {b}, {c})"
            )));
        }
        if b <= 0 || (a + c) % b != 0 || (a + c) / b < 2 {
            return Err(Error::BadParameters(format!(
                "need a + c = d·b with d >= 2 for ({a}, {b}, {c})"
            )));
        }
        let h = NumericalSemigroup::from_generators(&[a, b, c])?;
        require_three_generated(&h)?;
        Ok(PmThreeGenArrangement {
            a,
            b,
            c,
            d: (a + c) / b,
        })
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&[self.a, self.b, self.c])
            .expect("validated at construction")
    }
}

/// Finds the arrangement for a proportionally modular 3-generated
/// semigroup, with `a < c`; `None` if no ordering qualifies.
pub fn pm_arrangement_3(h: &NumericalSemigroup) -> Result<Option<PmThreeGenArrangement>> {
    require_three_generated(h)?;
    let g = h.min_generators();
    // the natural order first
    for mid in [1, 0, 2] {
        let (x, y) = match mid {
            0 => (g[1], g[2]),
            1 => (g[0], g[2]),
            _ => (g[0], g[1]),
        };
        if let Ok(arr) = PmThreeGenArrangement::new(x, g[mid], y) {
            return Ok(Some(arr));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PmThreeGenReport {
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub frobenius: Option<i64>,
    pub genus: Option<i64>,
}

/// Symmetry is `d = gcd(a, c)`; pseudo-symmetry is `2d = a + 1` or
/// `2d = c + 1`. Closed forms for `F` and `g` are filled in for those two
/// cases.
pub fn classify_pm_threegen(arr: &PmThreeGenArrangement) -> PmThreeGenReport {
    let PmThreeGenArrangement { a, b, c, d } = *arr;
    let symmetric = d == gcd(a, c);
    let pseudo_symmetric = 2 * d == a + 1 || 2 * d == c + 1;
    let (frobenius, genus) = if symmetric {
        let (a, b, c) = (a as i128, b as i128, c as i128);
        let top = a * b * c - a * b - b * c;
        (
            Some((top / (a + c)) as i64),
            Some(((top + a + c) / (2 * (a + c))) as i64),
        )
    } else if pseudo_symmetric {
        // relabel {a, c} so that 2d = a + 1
        let far = if 2 * d == a + 1 { c } else { a };
        (Some(2 * (far - b)), Some(far - b + 1))
    } else {
        (None, None)
    };
    let report = PmThreeGenReport {
        symmetric,
        pseudo_symmetric,
        frobenius,
        genus,
    };
    debug_assert!({
        let h = arr.semigroup();
        report.symmetric == classify::is_symmetric(&h)
            && report.pseudo_symmetric == classify::is_pseudo_symmetric(&h)
            && report.frobenius.is_none_or(|f| f == h.frobenius())
            && report.genus.is_none_or(|g| g == h.genus())
    });
    report
}

/// `βγ = 1` or `α'β' = 1` for the matrix in the arrangement's labeling.
pub fn pm_matrix_condition(arr: &PmThreeGenArrangement) -> Result<bool> {
    let mat = herzog_matrix_for(&arr.semigroup(), [arr.a, arr.b, arr.c])?;
    Ok(mat.beta * mat.gamma == 1 || mat.alpha_p * mat.beta_p == 1)
}

/// Whether `α = γ' = 1` in the arrangement's labeling (non-symmetric case).
pub fn pm_matrix_is_normalized(arr: &PmThreeGenArrangement) -> Result<bool> {
    let mat = herzog_matrix_for(&arr.semigroup(), [arr.a, arr.b, arr.c])?;
    Ok(mat.alpha == 1 && mat.gamma_p == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn exponents(m: &HerzogMatrix) -> (i64, i64, i64, i64, i64, i64) {
        (m.alpha, m.beta, m.gamma, m.alpha_p, m.beta_p, m.gamma_p)
    }

    #[test]
    fn matrix_of_5_7_16() {
        let m = herzog_matrix(&sg(&[5, 7, 16])).unwrap();
        assert_eq!(exponents(&m), (1, 1, 1, 5, 2, 1));
        assert_eq!(5, 1 + 2 + 2);
        assert_eq!(7, 1 + 1 + 5);
        assert_eq!(16, 1 + 5 + 10);
        assert!(m.generator_identities_hold());
        assert!(m.kernel_relations_hold());
        assert_eq!(m.to_string(), "( X    Y  Z   )\n( Y^2  Z  X^5 )");
    }

    #[test]
    fn matrix_of_3_4_5() {
        let m = herzog_matrix(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(exponents(&m), (1, 1, 1, 2, 1, 1));
        assert!(m.generator_identities_hold());
        assert_eq!(pf_from_matrix(&m), (1, 2));
    }

    #[test]
    fn matrix_errors() {
        assert_eq!(
            herzog_matrix(&sg(&[5, 8, 11, 12])),
            Err(Error::NotThreeGenerated(4))
        );
        assert_eq!(herzog_matrix(&sg(&[4, 6, 9])), Err(Error::SymmetricInput));
        assert!(herzog_matrix_for(&sg(&[5, 7, 16]), [5, 7, 17]).is_err());
    }

    #[test]
    fn pf_of_5_7_16() {
        let m = herzog_matrix(&sg(&[5, 7, 16])).unwrap();
        assert_eq!(pf_from_matrix(&m), (9, 18));
    }

    #[test]
    fn pseudo_symmetry_by_matrix() {
        assert_eq!(is_pseudo_symmetric_by_matrix(&sg(&[5, 7, 16])), Ok(true));
        assert_eq!(is_pseudo_symmetric_by_matrix(&sg(&[3, 4, 5])), Ok(true));
        assert_eq!(
            is_pseudo_symmetric_by_matrix(&sg(&[5, 8, 11, 12])),
            Err(Error::NotThreeGenerated(4))
        );
    }

    #[test]
    fn arrangements() {
        let arr = pm_arrangement_3(&sg(&[5, 7, 16])).unwrap().unwrap();
        assert_eq!((arr.a, arr.b, arr.c, arr.d), (5, 7, 16, 3));
        let arr = pm_arrangement_3(&sg(&[3, 4, 5])).unwrap().unwrap();
        assert_eq!((arr.a, arr.b, arr.c, arr.d), (3, 4, 5, 2));
        assert_eq!(pm_arrangement_3(&sg(&[4, 6, 9])), Ok(None));
        assert_eq!(
            pm_arrangement_3(&sg(&[2, 3])),
            Err(Error::NotThreeGenerated(2))
        );
    }

    #[test]
    fn pm_classification() {
        let r = classify_pm_threegen(&PmThreeGenArrangement::new(5, 7, 16).unwrap());
        assert!(r.pseudo_symmetric && !r.symmetric);
        assert_eq!((r.frobenius, r.genus), (Some(18), Some(10)));

        let r = classify_pm_threegen(&PmThreeGenArrangement::new(3, 4, 5).unwrap());
        assert!(r.pseudo_symmetric);
        assert_eq!((r.frobenius, r.genus), (Some(2), Some(2)));

        // <4, 5, 6>: d = 2 = gcd(4, 6); F = (120 - 20 - 30)/10 = 7
        let r = classify_pm_threegen(&PmThreeGenArrangement::new(4, 5, 6).unwrap());
        assert!(r.symmetric);
        assert_eq!((r.frobenius, r.genus), (Some(7), Some(4)));
    }

    #[test]
    fn pm_matrix_conditions() {
        let arr = PmThreeGenArrangement::new(5, 7, 16).unwrap();
        assert_eq!(pm_matrix_condition(&arr), Ok(true));
        assert_eq!(pm_matrix_is_normalized(&arr), Ok(true));
    }
}
