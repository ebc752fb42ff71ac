//! Side-by-side comparison of the fast paths with the brute-force oracle.

use std::fmt::{self, Debug, Write as _};

use serde::Serialize;

use super::brute::{oracle_inequality, oracle_interval, oracle_semigroup, OracleSemigroup};
use crate::classify;
use crate::error::Result;
use crate::ideal;
use crate::modular::{self, Fraction, RationalInterval};
use crate::semigroup::NumericalSemigroup;
use crate::threegen;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub fast: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl OracleReport {
    fn new(subject: String) -> Self {
        OracleReport {
            subject,
            checks: Vec::new(),
        }
    }

    fn push<T: PartialEq + Debug>(&mut self, name: &str, fast: T, oracle: T) {
        self.checks.push(Check {
            name: name.to_string(),
            pass: fast == oracle,
            fast: format!("{fast:?}"),
            oracle: format!("{oracle:?}"),
        });
    }

    /// Records a fast-path error as a failed check.
    fn push_result<T: PartialEq + Debug>(&mut self, name: &str, fast: Result<T>, oracle: T) {
        match fast {
            Ok(v) => self.push(name, v, oracle),
            Err(e) => self.checks.push(Check {
                name: name.to_string(),
                fast: format!("error: {e}"),
                oracle: format!("{oracle:?}"),
                pass: false,
            }),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One `ok N - name` / `not ok N - name` line per check, after a plan
    /// line `1..N`.
    pub fn to_tap(&self) -> String {
        let mut out = format!("# {}\n1..{}\n", self.subject, self.checks.len());
        for (i, c) in self.checks.iter().enumerate() {
            if c.pass {
                let _ = writeln!(out, "ok {} - {}", i + 1, c.name);
            } else {
                let _ = writeln!(
                    out,
                    "not ok {} - {} # fast={} oracle={}",
                    i + 1,
                    c.name,
                    c.fast,
                    c.oracle
                );
            }
        }
        out
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tap())
    }
}

/// Runs every invariant of `h` through both implementations.
pub fn verify(h: &NumericalSemigroup) -> OracleReport {
    let mut report = OracleReport::new(h.to_string());
    let o = match oracle_semigroup(h.min_generators()) {
        Ok(o) => o,
        Err(e) => {
            report.checks.push(Check {
                name: "oracle table".into(),
                fast: h.to_string(),
                oracle: format!("error: {e}"),
                pass: false,
            });
            return report;
        }
    };
    basic_checks(&mut report, h, &o);
    symmetry_checks(&mut report, h, &o);
    if let Some(od) = o.dual_of_maximal() {
        dual_checks(&mut report, h, &o, &od);
    }
    if h.embedding_dimension() == 3 {
        threegen_checks(&mut report, h, &o);
    }
    report
}

fn basic_checks(r: &mut OracleReport, h: &NumericalSemigroup, o: &OracleSemigroup) {
    r.push(
        "minimal generators",
        h.min_generators().to_vec(),
        o.min_generators(),
    );
    r.push("multiplicity", h.multiplicity(), o.multiplicity());
    r.push(
        "embedding dimension",
        h.embedding_dimension(),
        o.embedding_dimension(),
    );
    r.push("frobenius", h.frobenius(), o.frobenius());
    r.push("genus", h.genus(), o.genus());
    r.push("gaps", h.gaps(), o.gaps());
    r.push(
        "pseudo-frobenius",
        h.pseudo_frobenius(),
        o.pseudo_frobenius(),
    );
    r.push("type", h.type_of(), o.type_of());
    let top = o.frobenius() + 2 * o.multiplicity() + 1;
    r.push(
        "membership",
        h.elements_in(0, top),
        (0..top).filter(|&x| o.contains(x)).collect(),
    );
    let m = h.multiplicity();
    r.push_result(
        "apery set mod m",
        h.apery_set(m).map(|a| a.elements),
        o.apery(m).unwrap_or_default(),
    );
    let e = *h.min_generators().last().expect("nonempty");
    if e != m {
        r.push_result(
            "apery set mod largest generator",
            h.apery_set(e).map(|a| a.elements),
            o.apery(e).unwrap_or_default(),
        );
    }
    r.push(
        "maximal embedding dimension",
        h.is_maximal_embedding_dimension(),
        o.embedding_dimension() as i64 == o.multiplicity(),
    );
}

fn symmetry_checks(r: &mut OracleReport, h: &NumericalSemigroup, o: &OracleSemigroup) {
    let oracle_as = o.almost_symmetric_by_definition();
    r.push(
        "symmetric",
        classify::is_symmetric(h),
        o.symmetric_by_definition(),
    );
    r.push(
        "pseudo-symmetric",
        classify::is_pseudo_symmetric(h),
        o.pseudo_symmetric_by_definition(),
    );
    r.push(
        "almost symmetric",
        classify::is_almost_symmetric(h),
        oracle_as,
    );
    r.push(
        "almost symmetric via PF pairing",
        classify::almost_symmetric_by_pf_symmetry(h),
        oracle_as,
    );
    r.push(
        "almost symmetric via gap dichotomy",
        classify::almost_symmetric_by_gap_dichotomy(h),
        oracle_as,
    );
    r.push(
        "almost symmetric via canonical ideal",
        classify::almost_symmetric_by_canonical_ideal(h),
        oracle_as,
    );
    r.push_result(
        "almost symmetric via Apery pairing",
        classify::almost_symmetric_by_apery_pairing(h, h.multiplicity()),
        oracle_as,
    );
    if let Ok(k) = classify::canonical_ideal(h) {
        let f = o.frobenius();
        let fast: Vec<i64> = (0..=f).filter(|&z| k.contains(z)).collect();
        r.push("canonical ideal", fast, o.canonical_below_conductor());
    }
}

fn dual_checks(
    r: &mut OracleReport,
    h: &NumericalSemigroup,
    o: &OracleSemigroup,
    od: &OracleSemigroup,
) {
    r.push_result(
        "dual generators",
        ideal::dual_of_maximal(h).map(|d| d.min_generators().to_vec()),
        od.min_generators(),
    );
    r.push(
        "dual frobenius",
        ideal::frobenius_of_dual(h),
        od.frobenius(),
    );
    r.push_result(
        "dual type",
        ideal::dual_of_maximal(h).map(|d| d.type_of()),
        od.type_of(),
    );
    r.push_result("L set", ideal::l_set(h), o.l_set().unwrap_or_default());
    r.push_result(
        "apery set of dual",
        ideal::apery_of_dual(h).map(|a| a.elements),
        od.apery(o.multiplicity()).unwrap_or_default(),
    );
}

fn threegen_checks(r: &mut OracleReport, h: &NumericalSemigroup, o: &OracleSemigroup) {
    if !o.symmetric_by_definition() {
        let pf = o.pseudo_frobenius();
        r.push_result(
            "PF from exponent matrix",
            threegen::herzog_matrix(h).map(|m| {
                let (x, y) = threegen::pf_from_matrix(&m);
                vec![x, y]
            }),
            pf,
        );
        r.push_result(
            "pseudo-symmetric from exponent matrix",
            threegen::is_pseudo_symmetric_by_matrix(h),
            o.pseudo_symmetric_by_definition(),
        );
    }
    if let Ok(Some(arr)) = threegen::pm_arrangement_3(h) {
        let rep = threegen::classify_pm_threegen(&arr);
        r.push(
            "PM arrangement symmetric",
            rep.symmetric,
            o.symmetric_by_definition(),
        );
        r.push(
            "PM arrangement pseudo-symmetric",
            rep.pseudo_symmetric,
            o.pseudo_symmetric_by_definition(),
        );
        if let (Some(f), Some(g)) = (rep.frobenius, rep.genus) {
            r.push("PM arrangement frobenius", f, o.frobenius());
            r.push("PM arrangement genus", g, o.genus());
        }
    }
}

/// Compares every closed form for `S(]b/a, b/(a-1)[)` with literal interval
/// and inequality scans.
pub fn verify_opened_modular(a: i64, b: i64) -> OracleReport {
    let mut r = OracleReport::new(format!("opened_modular({a}, {b})"));
    let intervals = (|| -> Result<(RationalInterval, RationalInterval)> {
        let lo = Fraction::new(b, a)?;
        let hi = Fraction::new(b, a - 1)?;
        Ok((
            RationalInterval::open(lo, hi)?,
            RationalInterval::closed(lo, hi)?,
        ))
    })();
    let oracles = intervals
        .and_then(|(open, closed)| Ok((oracle_interval(&open)?, oracle_interval(&closed)?)));
    let (o, oc) = match (modular::opened_modular(a, b), oracles) {
        (Ok(_), Ok(pair)) => pair,
        (fast, oracle) => {
            r.checks.push(Check {
                name: "construction".into(),
                fast: format!("{:?}", fast.map(|h| h.to_string())),
                oracle: format!("{:?}", oracle.map(|_| ())),
                pass: false,
            });
            return r;
        }
    };
    let h = modular::opened_modular(a, b).expect("checked above");
    r.subject = format!("opened_modular({a}, {b}) = <{h}>");
    r.push(
        "generators",
        h.min_generators().to_vec(),
        o.min_generators(),
    );
    match modular::opened_modular_invariants(a, b) {
        Ok(inv) => {
            r.push("frobenius formula", inv.frobenius, o.frobenius());
            r.push("genus formula", inv.genus, o.genus());
            r.push("type formula", inv.type_, o.type_of() as i64);
        }
        Err(e) => r.push("invariant formulas", format!("error: {e}"), String::new()),
    }
    r.push_result(
        "multiplicity formula",
        modular::multiplicity_opened_modular(a, b),
        o.multiplicity(),
    );
    r.push_result(
        "multiplicity via dual",
        modular::multiplicity_via_duality(a, b),
        o.multiplicity(),
    );
    r.push_result(
        "closed interval genus",
        modular::closed_interval_genus(a, b),
        oc.genus(),
    );
    r.push_result(
        "dual is closed interval semigroup",
        ideal::dual_of_maximal(&h).map(|d| d.min_generators().to_vec()),
        oc.min_generators(),
    );
    r.push(
        "oracle dual is closed interval semigroup",
        o.dual_of_maximal().map(|d| d.min_generators()),
        Some(oc.min_generators()),
    );
    r.push(
        "almost symmetric",
        classify::is_almost_symmetric(&h),
        o.almost_symmetric_by_definition(),
    );
    if a < b {
        match oracle_inequality(a, b, 1) {
            Ok(oi) => {
                r.push_result(
                    "frobenius of S(a, b, 1)",
                    modular::frobenius_modular(a, b, 1),
                    oi.frobenius(),
                );
                let mult =
                    modular::delta(a, b, 1).map(|d| (d as i128 * b as i128 / a as i128) as i64 + 1);
                r.push_result("multiplicity from delta", mult, o.multiplicity());
                r.push(
                    "S(a, b, 1) is closed interval semigroup",
                    oi.min_generators(),
                    oc.min_generators(),
                );
            }
            Err(e) => r.push("inequality oracle", format!("error: {e}"), String::new()),
        }
    }
    r
}
