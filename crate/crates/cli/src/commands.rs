//! One function per subcommand. Each returns the text and JSON renderings;
//! `main` picks one. `enumerate` and `verify --genus` stream instead.

use std::io::{self, Write};

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use numsgps::classify::{self, canonical_ideal};
use numsgps::gluing::{self, GluingSpec};
use numsgps::ideal::{self, dual_almost_symmetry_report};
use numsgps::modular::{self, delta, frobenius_modular, ProportionalInequality, RationalInterval};
use numsgps::oracle::{self, enumerate_with_cap, OracleReport};
use numsgps::threegen;
use numsgps::{Error, NumericalSemigroup};

use crate::args::{Command, Filter, VerifyArgs};
use crate::config::Settings;

#[derive(Debug)]
pub enum Failure {
    /// Malformed input; exit code 1.
    Usage(String),
    /// Well-formed input violating a mathematical precondition; exit code 2.
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::EmptyInput => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

pub struct Output {
    pub text: String,
    pub json: Value,
    /// False when a `verify` check failed.
    pub ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

type Res<T> = Result<T, Failure>;

fn parse(s: &str) -> Res<NumericalSemigroup> {
    Ok(s.parse::<NumericalSemigroup>()?)
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `F=.. g=.. t=.. m=.. gens=..`
fn line(h: &NumericalSemigroup) -> String {
    format!(
        "F={} g={} t={} m={} gens={}",
        h.frobenius(),
        h.genus(),
        h.type_of(),
        h.multiplicity(),
        h
    )
}

/// The shared invariants block, extended with `extra`'s fields.
fn block(h: &NumericalSemigroup, extra: Value) -> Value {
    let mut obj = match serde_json::to_value(h.invariants()) {
        Ok(Value::Object(m)) => m,
        _ => Map::new(),
    };
    if let Value::Object(more) = extra {
        obj.extend(more);
    }
    Value::Object(obj)
}

pub fn run(command: Command, settings: &Settings, json: bool) -> Res<Option<Output>> {
    let out = match command {
        Command::Info(g) => info(&parse(&g.generators)?)?,
        Command::Classify(g) => classify_cmd(&parse(&g.generators)?),
        Command::Dual(g) => dual(&parse(&g.generators)?)?,
        Command::Medcover {
            generators,
            element,
        } => medcover(&parse(&generators)?, element)?,
        Command::Modular { inequality } => modular_cmd(&inequality)?,
        Command::Opened { a, b } => opened(a, b)?,
        Command::Interval { interval } => interval_cmd(&interval)?,
        Command::Threegen(g) => threegen_cmd(&parse(&g.generators)?)?,
        Command::Glue { h1, h2, x, y } => glue(&parse(&h1)?, &parse(&h2)?, x, y)?,
        Command::Decompose(g) => decompose(&parse(&g.generators)?),
        Command::Ci(g) => ci(&parse(&g.generators)?),
        Command::Verify(v) => match v.genus {
            Some(g) => {
                verify_range(g, settings, json)?;
                return Ok(None);
            }
            None => verify(&v)?,
        },
        Command::Enumerate { genus, filter } => {
            enumerate(genus, filter, settings, json)?;
            return Ok(None);
        }
    };
    Ok(Some(out))
}

fn info(h: &NumericalSemigroup) -> Res<Output> {
    let apery = h.apery_set(h.multiplicity())?.elements;
    let text = format!(
        "{} e={} pf={}",
        line(h),
        h.embedding_dimension(),
        join(&h.pseudo_frobenius())
    );
    let json = block(
        h,
        json!({
            "conductor": h.conductor(),
            "gaps": h.gaps(),
            "apery": apery,
            "maximal_embedding_dimension": h.is_maximal_embedding_dimension(),
        }),
    );
    Ok(Output::new(text, json))
}

fn classify_cmd(h: &NumericalSemigroup) -> Output {
    let c = classify::classify(h);
    let mut text = format!("class={} t={}", c.kind.label(), c.type_);
    if let Some(v) = c.violation {
        text += &format!(
            " violation: f_{} + f_{} = {} != F = {}",
            v.index,
            c.type_ - v.index,
            v.sum,
            v.frobenius
        );
    }
    if let Some(z) = c.gap_witness {
        text += &format!(" gap_witness={z}");
    }
    let json = block(
        h,
        json!({
            "class": c.kind.label(),
            "violation": c.violation,
            "gap_witness": c.gap_witness,
            "almost_symmetric": c.kind.is_almost_symmetric(),
        }),
    );
    Output::new(text, json)
}

fn dual(h: &NumericalSemigroup) -> Res<Output> {
    let d = ideal::dual_of_maximal(h)?;
    let l = ideal::l_set(h)?;
    let r = dual_almost_symmetry_report(h)?;
    let k = canonical_ideal(h)?;
    let text = format!(
        "dual: {}\nL={}\nalmost_symmetric={} dual_almost_symmetric={} m={} t={} t*={} m=t+t*:{}",
        line(&d),
        join(&l),
        r.h_almost_symmetric,
        r.dual_almost_symmetric,
        r.multiplicity,
        r.type_h,
        r.type_dual,
        r.type_sum_identity
    );
    let json = block(
        h,
        json!({
            "dual": d.invariants(),
            "l_set": l,
            "report": r,
            "canonical_ideal": { "below": k.below(), "conductor": k.conductor() },
        }),
    );
    Ok(Output::new(text, json))
}

fn medcover(h: &NumericalSemigroup, element: Option<i64>) -> Res<Output> {
    let n = match element {
        Some(n) => n,
        None if h.is_whole_line() => 2,
        None => h.multiplicity(),
    };
    let t = ideal::med_cover(h, n)?;
    let text = format!("{}\ndual={}", line(&t), h);
    let json = block(&t, json!({ "element": n, "dual": h.min_generators() }));
    Ok(Output::new(text, json))
}

fn modular_cmd(spec: &str) -> Res<Output> {
    let q: ProportionalInequality = spec.parse()?;
    let h = modular::solve_inequality(&q)?;
    let mut text = line(&h);
    let mut extra = Map::new();
    if q.c < q.a {
        let i = modular::interval_of_inequality(&q)?;
        text += &format!("\ninterval={i}");
        extra.insert("interval".into(), json!(i.to_string()));
        if q.a < q.b {
            let d = delta(q.a, q.b, q.c)?;
            let f = frobenius_modular(q.a, q.b, q.c)?;
            text += &format!(" delta={d} F_formula={f}");
            extra.insert("delta".into(), json!(d));
            extra.insert("frobenius_formula".into(), json!(f));
        }
    }
    Ok(Output::new(text, block(&h, Value::Object(extra))))
}

fn opened(a: i64, b: i64) -> Res<Output> {
    let h = modular::opened_modular(a, b)?;
    let inv = modular::opened_modular_invariants(a, b)?;
    let m = modular::multiplicity_opened_modular(a, b)?;
    let text = format!(
        "F={} g={} t={} m={} gens={}",
        inv.frobenius, inv.genus, inv.type_, m, h
    );
    let json = block(
        &h,
        json!({
            "interval": modular::opened_interval(a, b)?.to_string(),
            "formula": { "frobenius": inv.frobenius, "genus": inv.genus, "type": inv.type_, "multiplicity": m },
            "closed_genus": modular::closed_interval_genus(a, b)?,
            "dual": ideal::dual_of_maximal(&h)?.min_generators(),
        }),
    );
    Ok(Output::new(text, json))
}

fn interval_cmd(spec: &str) -> Res<Output> {
    let i: RationalInterval = spec.parse()?;
    let h = modular::semigroup_of_interval(&i)?;
    let text = format!("{}\ninterval={i}", line(&h));
    Ok(Output::new(
        text,
        block(&h, json!({ "interval": i.to_string() })),
    ))
}

fn threegen_cmd(h: &NumericalSemigroup) -> Res<Output> {
    let m = threegen::herzog_matrix(h)?;
    let (p, q) = threegen::pf_from_matrix(&m);
    let ps = threegen::is_pseudo_symmetric_by_matrix(h)?;
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|(v, e)| format!("{v}^{e}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect();
    let [a, b, c] = m.generators;
    let mut text = format!(
        "{}\nX=t^{a} Y=t^{b} Z=t^{c}\npf={},{} pseudo_symmetric={ps}",
        rows.join("\n"),
        p.min(q),
        p.max(q)
    );
    let arr = threegen::pm_arrangement_3(h)?;
    let mut extra = json!({
        "matrix": m,
        "pf_from_matrix": [p.min(q), p.max(q)],
        "pseudo_symmetric": ps,
        "arrangement": Value::Null,
    });
    if let Some(arr) = arr {
        let r = threegen::classify_pm_threegen(&arr);
        text += &format!(
            "\narrangement a={} b={} c={} d={} symmetric={} pseudo_symmetric={}",
            arr.a, arr.b, arr.c, arr.d, r.symmetric, r.pseudo_symmetric
        );
        if let (Some(f), Some(g)) = (r.frobenius, r.genus) {
            text += &format!(" F={f} g={g}");
        }
        extra["arrangement"] =
            json!({ "a": arr.a, "b": arr.b, "c": arr.c, "d": arr.d, "report": r });
    }
    Ok(Output::new(text, block(h, extra)))
}

fn glue(h1: &NumericalSemigroup, h2: &NumericalSemigroup, x: i64, y: i64) -> Res<Output> {
    let spec = GluingSpec::new(h1.clone(), h2.clone(), x, y)?;
    let h = gluing::glue(&spec)?;
    let pf = gluing::pf_of_gluing(&spec)?;
    let f = gluing::frobenius_of_gluing(&spec)?;
    let c = classify::classify(&h);
    let text = format!(
        "{}\npf={} F_formula={f} class={} almost_symmetric={}",
        line(&h),
        join(&pf),
        c.kind.label(),
        c.kind.is_almost_symmetric()
    );
    let json = block(
        &h,
        json!({
            "gluing": spec.summary(),
            "pf_formula": pf,
            "frobenius_formula": f,
            "class": c.kind.label(),
            "almost_symmetric": c.kind.is_almost_symmetric(),
        }),
    );
    Ok(Output::new(text, json))
}

fn decompose(h: &NumericalSemigroup) -> Output {
    let specs = gluing::find_gluing_decompositions(h);
    let text = if specs.is_empty() {
        "no decomposition".to_string()
    } else {
        specs
            .iter()
            .map(|s| format!("x={} H1={} y={} H2={}", s.x, s.h1, s.y, s.h2))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let summaries: Vec<_> = specs.iter().map(|s| s.summary()).collect();
    Output::new(text, block(h, json!({ "decompositions": summaries })))
}

fn ci(h: &NumericalSemigroup) -> Output {
    let ci = gluing::is_complete_intersection(h);
    Output::new(
        format!("complete_intersection={ci}"),
        block(h, json!({ "complete_intersection": ci })),
    )
}

fn verify(v: &VerifyArgs) -> Res<Output> {
    let report = match (&v.generators, &v.opened) {
        (Some(g), _) => oracle::verify(&parse(g)?),
        (None, Some(ab)) => {
            modular::opened_modular(ab[0], ab[1])?;
            oracle::verify_opened_modular(ab[0], ab[1])
        }
        (None, None) => return Err(Failure::Usage("nothing to verify".into())),
    };
    let ok = report.all_pass();
    let text = report.to_tap().trim_end().to_string();
    Ok(Output {
        text,
        json: serde_json::to_value(&report).unwrap_or(Value::Null),
        ok,
    })
}

fn collect_range(genus: u32, settings: &Settings) -> Res<Vec<NumericalSemigroup>> {
    Ok(enumerate_with_cap(genus, settings.genus_cap)?.collect())
}

/// Checks every semigroup up to `genus`; prints failing reports and a
/// summary, and fails with a domain error if any check fails.
fn verify_range(genus: u32, settings: &Settings, json: bool) -> Res<()> {
    let all = collect_range(genus, settings)?;
    let reports: Vec<OracleReport> = all.par_iter().map(oracle::verify).collect();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: Vec<&OracleReport> = reports.iter().filter(|r| !r.all_pass()).collect();
    let mut out = io::stdout().lock();
    let res = if json {
        let v = json!({ "semigroups": all.len(), "checks": checks, "failures": failed });
        writeln!(out, "{v}")
    } else {
        failed
            .iter()
            .try_for_each(|r| write!(out, "{}", r.to_tap()))
            .and_then(|_| {
                writeln!(
                    out,
                    "# {} semigroups, {} checks, {} failing semigroups",
                    all.len(),
                    checks,
                    failed.len()
                )
            })
    };
    ignore_broken_pipe(res)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!(
            "{} semigroups failed verification",
            failed.len()
        )))
    }
}

fn keep(filter: Option<Filter>, h: &NumericalSemigroup) -> bool {
    match filter {
        None => true,
        Some(Filter::Symmetric) => classify::is_symmetric(h),
        Some(Filter::PseudoSymmetric) => classify::is_pseudo_symmetric(h),
        Some(Filter::AlmostSymmetric) => classify::is_almost_symmetric(h),
        Some(Filter::NotAlmostSymmetric) => !classify::is_almost_symmetric(h),
        Some(Filter::Med) => h.is_maximal_embedding_dimension(),
        Some(Filter::Ci) => gluing::is_complete_intersection(h),
    }
}

const CHUNK: usize = 4096;

/// Streams the enumeration in tree order. Filtering runs in parallel per
/// chunk; output order does not depend on the thread count.
fn enumerate(genus: u32, filter: Option<Filter>, settings: &Settings, json: bool) -> Res<()> {
    let mut tree = enumerate_with_cap(genus, settings.genus_cap)?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    loop {
        let chunk: Vec<NumericalSemigroup> = tree.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let lines: Vec<String> = chunk
            .par_iter()
            .filter(|h| keep(filter, h))
            .map(|h| {
                if json {
                    block(h, Value::Null).to_string()
                } else {
                    h.to_string()
                }
            })
            .collect();
        let res = lines.iter().try_for_each(|l| writeln!(out, "{l}"));
        if is_broken_pipe(&res) {
            return Ok(());
        }
        ignore_broken_pipe(res)?;
    }
    ignore_broken_pipe(out.flush())
}

fn is_broken_pipe(res: &io::Result<()>) -> bool {
    matches!(res, Err(e) if e.kind() == io::ErrorKind::BrokenPipe)
}

pub fn ignore_broken_pipe(res: io::Result<()>) -> Res<()> {
    match res {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(Failure::Domain(format!("write failed: {e}")))
        }
        _ => Ok(()),
    }
}
