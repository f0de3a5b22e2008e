//! Command-line front end over the JSON file formats of [`crate::io`].
//!
//! [`run`] parses an argument vector, executes one subcommand, writes a
//! deterministic report to the given writer, and returns the process exit
//! code: 0 success, 1 a law or property violation was found (the report says
//! which), 2 parse or validation error, 3 bound overflow. Human-readable
//! output is the default; `--json` switches to machine form with sorted keys
//! and stable element order.

use crate::error::Error;
use crate::io::{
    category_from_json, family_from_json, generators_from_json, hom_from_json, hom_to_json,
    operad_from_json, operad_to_json, parse_json, simplicial_from_json, simplicial_to_json,
    span_from_json, span_to_json, theory_to_json,
};
use crate::lawvere::{enumerate_models, factor_theory, roundtrip, theory_of};
use crate::monad::{
    check_cartesian, check_monad_laws, check_naturality, enumerate_family_maps, free_algebra,
    free_operad, is_linear, linear_monad, Family, Square,
};
use crate::opcat::{category_of_operators, OperatorCategory};
use crate::operad::{free_symmetric_sequence, ColouredOperad};
use crate::segal::{
    complete_via_e_locality, complete_via_invertibles, is_segal, linear_roundtrip, nerve,
    pinned_operad,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "operadica",
    about = "Spans, operads, free-algebra monads, theories, and nerves at desk scale",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Spans of finite sets as multiplicity matrices
    #[command(subcommand)]
    Span(SpanCmd),
    /// Coloured operads and their categories of operators
    #[command(subcommand)]
    Operad(OperadCmd),
    /// Free-algebra monads: laws, cartesianness, linearity
    #[command(subcommand)]
    Monad(MonadCmd),
    /// Graded algebraic theories of operads
    #[command(subcommand)]
    Theory(TheoryCmd),
    /// Nerves of pinned categories and Segal/completeness checks
    #[command(subcommand)]
    Segal(SegalCmd),
}

#[derive(Subcommand)]
enum SpanCmd {
    /// Compose two spans by pullback (matrix product)
    Compose {
        a: PathBuf,
        b: PathBuf,
        /// Reject composites whose total exceeds this grade
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Factor a span as an inert part followed by an active part
    Factor {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count spans between sets of the given sizes up to a grade bound
    Homcount {
        dom: usize,
        cod: usize,
        #[arg(long, default_value_t = 3)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OperadCmd {
    /// Validate the operad laws, optionally only up to an arity
    Check {
        file: PathBuf,
        /// Check laws only up to this arity (must not exceed the file's own bound)
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Build the category of operators over tuples of colours
    Operators {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        tuples: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// List every morphism, not just the hom sizes
        #[arg(long)]
        terms: bool,
        #[arg(long)]
        json: bool,
    },
    /// The free algebra on a family, graded by degree
    FreeAlgebra {
        file: PathBuf,
        family: PathBuf,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// List the canonical terms, not just their counts
        #[arg(long)]
        terms: bool,
        #[arg(long)]
        json: bool,
    },
    /// The free operad on a generator file, truncated by arity and vertices
    FreeOperad {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        arity: usize,
        /// Vertex budget for composite operations
        #[arg(long, default_value_t = 2)]
        bound: usize,
        /// List the operation names per arity
        #[arg(long)]
        terms: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum MonadCmd {
    /// Unit/associativity laws and naturality on all families up to a size
    Laws {
        file: PathBuf,
        /// Largest value-set size per colour
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Are the unit and multiplication naturality squares pullbacks?
    Cartesian {
        file: PathBuf,
        /// Largest value-set size per colour
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Linearity of an operad, or the linear monad of a pinned category
    Linear {
        /// An operad file (unary criterion) or a category file (monad values)
        file: PathBuf,
        /// Family over the pin labels; defaults to a singleton at every pin
        family: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum TheoryCmd {
    /// The theory of an operad: objects and graded hom counts
    Of {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        tuples: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// List the hom elements, not just their counts
        #[arg(long)]
        terms: bool,
        #[arg(long)]
        json: bool,
    },
    /// Factor a theory hom into inert and active parts
    Factor {
        file: PathBuf,
        hom: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count models of the theory on the given value sets
    Models {
        file: PathBuf,
        family: PathBuf,
        #[arg(long, default_value_t = 2)]
        tuples: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Free algebras vs singleton homs, operator category vs theory
    Roundtrip {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        tuples: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SegalCmd {
    /// The nerve of a pinned category as a truncated simplicial set
    Nerve {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the Segal spine condition of a simplicial-set file
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check completeness of a Segal set by both formulations
    Complete {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Nerve levels vs the Lawvere theory of the linear monad
    Roundtrip {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Execute one invocation. Everything written to `out` is deterministic for
/// a fixed argument vector and fixed file contents.
pub fn run<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            match e {
                Error::Input(_) => 2,
                Error::BoundOverflow(_) => 3,
            }
        }
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Span(c) => span_cmd(c, out),
        Cmd::Operad(c) => operad_cmd(c, out),
        Cmd::Monad(c) => monad_cmd(c, out),
        Cmd::Theory(c) => theory_cmd(c, out),
        Cmd::Segal(c) => segal_cmd(c, out),
    }
}

fn load_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text)
}

fn emit<W: Write>(out: &mut W, v: &Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn report_lines<W: Write>(out: &mut W, report: &[String]) {
    for line in report {
        let _ = writeln!(out, "{line}");
    }
}

fn tuple_label(colours: &[String], t: &[usize]) -> String {
    let parts: Vec<&str> = t.iter().map(|&c| colours[c].as_str()).collect();
    format!("({})", parts.join(","))
}

// ---------------------------------------------------------------------------
// span
// ---------------------------------------------------------------------------

fn span_cmd<W: Write>(cmd: SpanCmd, out: &mut W) -> Result<i32, Error> {
    match cmd {
        SpanCmd::Compose { a, b, bound, json } => {
            let sa = span_from_json(&load_json(&a)?)?;
            let sb = span_from_json(&load_json(&b)?)?;
            let c = sa.compose(&sb)?;
            if let Some(d) = bound {
                if c.total() > d {
                    return Err(Error::overflow(format!(
                        "composite grade {} exceeds bound {d}",
                        c.total()
                    )));
                }
            }
            if json {
                emit(out, &span_to_json(&c));
            } else {
                let _ = writeln!(out, "{}", compact(&json!(c.matrix())));
            }
            Ok(0)
        }
        SpanCmd::Factor { file, json } => {
            let s = span_from_json(&load_json(&file)?)?;
            let (inert, active) = s.factor_inert_active();
            if json {
                emit(
                    out,
                    &json!({ "inert": span_to_json(&inert), "active": span_to_json(&active) }),
                );
            } else {
                let _ = writeln!(out, "inert: {}", compact(&json!(inert.matrix())));
                let _ = writeln!(out, "active: {}", compact(&json!(active.matrix())));
            }
            Ok(0)
        }
        SpanCmd::Homcount {
            dom,
            cod,
            bound,
            json,
        } => {
            let n = crate::finspan::hom_count(dom, cod, bound);
            if json {
                emit(
                    out,
                    &json!({ "dom": dom, "cod": cod, "bound": bound, "count": n }),
                );
            } else {
                let _ = writeln!(out, "{n}");
            }
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------------
// operad
// ---------------------------------------------------------------------------

fn operators_json(o: &ColouredOperad, k: &OperatorCategory, terms: bool) -> Value {
    let objects: Vec<String> = (0..k.num_objects())
        .map(|x| tuple_label(k.colours(), k.object(x)))
        .collect();
    let sizes: Vec<Vec<usize>> = (0..k.num_objects())
        .map(|s| (0..k.num_objects()).map(|t| k.hom_size(s, t)).collect())
        .collect();
    let mut v = json!({ "objects": objects, "hom_sizes": sizes });
    if terms {
        let mut morphisms = Vec::new();
        for (s, t, i) in k.all_morphisms() {
            let d = k.mor((s, t, i));
            let ops: Vec<String> = d.ops.iter().map(|&op| o.op(op).name.clone()).collect();
            morphisms.push(json!({
                "src": s,
                "tgt": t,
                "span": d.span.matrix(),
                "ops": ops,
            }));
        }
        v.as_object_mut()
            .unwrap()
            .insert("morphisms".into(), Value::Array(morphisms));
    }
    v
}

fn operad_cmd<W: Write>(cmd: OperadCmd, out: &mut W) -> Result<i32, Error> {
    match cmd {
        OperadCmd::Check { file, arity, json } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let report = match arity {
                Some(a) if a > o.max_arity() => {
                    return Err(Error::input(format!(
                        "arity bound {a} exceeds the operad's own bound {}",
                        o.max_arity()
                    )));
                }
                Some(a) => o.validate_within(a),
                None => o.validate(),
            };
            if json {
                emit(out, &json!({ "violations": report }));
            } else {
                report_lines(out, &report);
            }
            Ok(if report.is_empty() { 0 } else { 1 })
        }
        OperadCmd::Operators {
            file,
            tuples,
            degree,
            terms,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let k = category_of_operators(&o, tuples, degree)?;
            if json {
                emit(out, &operators_json(&o, &k, terms));
            } else {
                let objects: Vec<String> = (0..k.num_objects())
                    .map(|x| tuple_label(k.colours(), k.object(x)))
                    .collect();
                let _ = writeln!(out, "objects ({}): {}", objects.len(), objects.join(" "));
                let _ = writeln!(out, "hom sizes:");
                for s in 0..k.num_objects() {
                    let row: Vec<usize> =
                        (0..k.num_objects()).map(|t| k.hom_size(s, t)).collect();
                    let _ = writeln!(out, "{} {}", objects[s], compact(&json!(row)));
                }
                if terms {
                    for (s, t, i) in k.all_morphisms() {
                        let d = k.mor((s, t, i));
                        let ops: Vec<String> =
                            d.ops.iter().map(|&op| o.op(op).name.clone()).collect();
                        let _ = writeln!(
                            out,
                            "{} -> {} span {} ops [{}]",
                            objects[s],
                            objects[t],
                            compact(&json!(d.span.matrix())),
                            ops.join(","),
                        );
                    }
                }
            }
            Ok(0)
        }
        OperadCmd::FreeAlgebra {
            file,
            family,
            degree,
            terms,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let f = family_from_json(&load_json(&family)?, o.colours())?;
            let tf = free_algebra(&o, &f, degree)?;
            let counts: Vec<Vec<usize>> = (0..tf.num_colours())
                .map(|c| (0..=degree).map(|g| tf.count(c, g)).collect())
                .collect();
            let term_json = |t: &crate::monad::FlatTerm| {
                json!({ "op": o.op(t.op).name, "args": t.args })
            };
            if json {
                let mut v = json!({
                    "counts": (0..tf.num_colours())
                        .map(|c| (o.colours()[c].clone(), counts[c].clone()))
                        .collect::<std::collections::BTreeMap<_, _>>(),
                });
                if terms {
                    let listing: std::collections::BTreeMap<String, Vec<Value>> = (0..tf
                        .num_colours())
                        .map(|c| {
                            (
                                o.colours()[c].clone(),
                                tf.flatten(c).iter().map(|t| term_json(t)).collect(),
                            )
                        })
                        .collect();
                    v.as_object_mut()
                        .unwrap()
                        .insert("terms".into(), json!(listing));
                }
                emit(out, &v);
            } else {
                for c in 0..tf.num_colours() {
                    let _ = writeln!(
                        out,
                        "{}: {}",
                        o.colours()[c],
                        compact(&json!(counts[c]))
                    );
                    if terms {
                        for t in tf.flatten(c) {
                            let _ = writeln!(
                                out,
                                "  {}{}",
                                o.op(t.op).name,
                                compact(&json!(t.args))
                            );
                        }
                    }
                }
            }
            Ok(0)
        }
        OperadCmd::FreeOperad {
            file,
            arity,
            bound,
            terms,
            json,
        } => {
            let gens = generators_from_json(&load_json(&file)?)?;
            let k = free_symmetric_sequence(&gens)?;
            let o = free_operad(&k, arity, bound)?;
            if json {
                emit(out, &operad_to_json(&o));
            } else {
                let counts: Vec<usize> = (0..=arity)
                    .map(|n| (0..o.num_ops()).filter(|&op| o.arity(op) == n).count())
                    .collect();
                let _ = writeln!(out, "operations by arity: {}", compact(&json!(counts)));
                if terms {
                    for n in 0..=arity {
                        let names: Vec<String> = (0..o.num_ops())
                            .filter(|&op| o.arity(op) == n)
                            .map(|op| o.op(op).name.clone())
                            .collect();
                        let _ = writeln!(out, "arity {n}: {}", names.join(" "));
                    }
                }
            }
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------------
// monad
// ---------------------------------------------------------------------------

/// Every family over `k` colours with all sizes at most `bound`.
fn families_up_to(k: usize, bound: usize) -> Vec<Family> {
    let mut out = Vec::new();
    let mut sizes = vec![0usize; k];
    'odometer: loop {
        out.push(Family::new(sizes.clone()));
        let mut i = k;
        while i > 0 {
            i -= 1;
            sizes[i] += 1;
            if sizes[i] <= bound {
                continue 'odometer;
            }
            sizes[i] = 0;
        }
        break;
    }
    out
}

fn monad_cmd<W: Write>(cmd: MonadCmd, out: &mut W) -> Result<i32, Error> {
    match cmd {
        MonadCmd::Laws {
            file,
            bound,
            degree,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let mut report = Vec::new();
            let families = families_up_to(o.colours().len(), bound);
            for f in &families {
                report.extend(check_monad_laws(&o, f, degree)?);
            }
            for f in &families {
                for g in &families {
                    for phi in enumerate_family_maps(f, g) {
                        report.extend(check_naturality(&o, &phi, degree)?);
                    }
                }
            }
            if json {
                emit(out, &json!({ "violations": report }));
            } else {
                report_lines(out, &report);
            }
            Ok(if report.is_empty() { 0 } else { 1 })
        }
        MonadCmd::Cartesian {
            file,
            bound,
            degree,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let mut report = Vec::new();
            let families = families_up_to(o.colours().len(), bound);
            for f in &families {
                for g in &families {
                    for phi in enumerate_family_maps(f, g) {
                        for (square, name) in [(Square::Unit, "unit"), (Square::Mult, "mult")] {
                            if !check_cartesian(&o, square, &phi, degree)? {
                                report.push(format!(
                                    "{name} square is not a pullback at a map {:?} -> {:?}",
                                    f.sizes, g.sizes
                                ));
                            }
                        }
                    }
                }
            }
            if json {
                emit(out, &json!({ "violations": report }));
            } else {
                report_lines(out, &report);
            }
            Ok(if report.is_empty() { 0 } else { 1 })
        }
        MonadCmd::Linear { file, family, json } => {
            let v = load_json(&file)?;
            let is_operad_file = v
                .as_object()
                .map(|m| m.contains_key("colours"))
                .unwrap_or(false);
            if is_operad_file {
                let o = operad_from_json(&v)?;
                let linear = is_linear(&o);
                if json {
                    emit(out, &json!({ "linear": linear }));
                } else {
                    let _ = writeln!(out, "linear: {linear}");
                }
                Ok(0)
            } else {
                let pc = category_from_json(&v)?;
                let po = pinned_operad(&pc)?;
                let labels = po.colours().to_vec();
                let f = match family {
                    Some(p) => family_from_json(&load_json(&p)?, &labels)?,
                    None => Family::new(vec![1; labels.len()]),
                };
                let rows = linear_monad(&pc, &f)?;
                if json {
                    let elements: std::collections::BTreeMap<String, Vec<Value>> = rows
                        .iter()
                        .enumerate()
                        .map(|(q, row)| {
                            (
                                labels[q].clone(),
                                row.iter()
                                    .map(|&(xp, h, v)| {
                                        json!({
                                            "pin": labels[xp],
                                            "hom": pc.cat.hom(h).name,
                                            "element": v,
                                        })
                                    })
                                    .collect(),
                            )
                        })
                        .collect();
                    emit(out, &json!({ "elements": elements }));
                } else {
                    for (q, row) in rows.iter().enumerate() {
                        let _ = writeln!(out, "{}: {} elements", labels[q], row.len());
                        for &(xp, h, v) in row {
                            let _ = writeln!(
                                out,
                                "  ({}, {}, {v})",
                                labels[xp],
                                pc.cat.hom(h).name
                            );
                        }
                    }
                }
                Ok(0)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// theory
// ---------------------------------------------------------------------------

fn theory_cmd<W: Write>(cmd: TheoryCmd, out: &mut W) -> Result<i32, Error> {
    match cmd {
        TheoryCmd::Of {
            file,
            tuples,
            degree,
            terms,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let th = theory_of(&o, tuples, degree)?;
            if json {
                emit(out, &theory_to_json(&th, terms));
            } else {
                let labels: Vec<String> = (0..th.num_objects())
                    .map(|x| tuple_label(o.colours(), th.object(x)))
                    .collect();
                let _ = writeln!(out, "objects ({}): {}", labels.len(), labels.join(" "));
                let _ = writeln!(out, "pinning: {}", compact(&json!(th.pinning())));
                let _ = writeln!(out, "kleisli hom counts by grade 0..={degree}:");
                for s in 0..th.num_objects() {
                    for t in 0..th.num_objects() {
                        let homs = th.homs(s, t);
                        if homs.is_empty() {
                            continue;
                        }
                        let mut by_grade = vec![0usize; degree + 1];
                        for h in homs {
                            by_grade[h.grade()] += 1;
                        }
                        let _ = writeln!(
                            out,
                            "{} -> {}: {}",
                            labels[s],
                            labels[t],
                            compact(&json!(by_grade))
                        );
                        if terms {
                            for h in homs {
                                let _ = writeln!(out, "  {}", compact(&hom_to_json(h, &o)));
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
        TheoryCmd::Factor { file, hom, json } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let h = hom_from_json(&load_json(&hom)?, &o)?;
            let (inert, active) = factor_theory(&o, &h)?;
            if json {
                emit(
                    out,
                    &json!({ "inert": hom_to_json(&inert, &o), "active": hom_to_json(&active, &o) }),
                );
            } else {
                let _ = writeln!(out, "inert: {}", compact(&hom_to_json(&inert, &o)));
                let _ = writeln!(out, "active: {}", compact(&hom_to_json(&active, &o)));
            }
            Ok(0)
        }
        TheoryCmd::Models {
            file,
            family,
            tuples,
            degree,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let f = family_from_json(&load_json(&family)?, o.colours())?;
            let th = theory_of(&o, tuples, degree)?;
            let models = enumerate_models(&th, &f.sizes)?;
            if json {
                let sizes: Vec<Value> = models.iter().map(|m| json!(m.sizes)).collect();
                emit(out, &json!({ "count": models.len(), "models": sizes }));
            } else {
                let _ = writeln!(out, "models: {}", models.len());
            }
            Ok(0)
        }
        TheoryCmd::Roundtrip {
            file,
            tuples,
            degree,
            json,
        } => {
            let o = operad_from_json(&load_json(&file)?)?;
            let r = roundtrip(&o, tuples, degree)?;
            let th = theory_of(&o, tuples, degree)?;
            let labels: Vec<String> = (0..th.num_objects())
                .map(|x| tuple_label(o.colours(), th.object(x)))
                .collect();
            // gradewise counts of homs out of each singleton
            let mut table = Vec::new();
            for (c, _) in o.colours().iter().enumerate() {
                let s = th.pinning()[c];
                for t in 0..th.num_objects() {
                    let mut by_grade = vec![0usize; degree + 1];
                    for h in th.homs(s, t) {
                        by_grade[h.grade()] += 1;
                    }
                    table.push((labels[s].clone(), labels[t].clone(), by_grade));
                }
            }
            let pass = r.passes();
            if json {
                let rows: Vec<Value> = table
                    .iter()
                    .map(|(s, t, g)| json!({ "src": s, "tgt": t, "by_grade": g }))
                    .collect();
                emit(
                    out,
                    &json!({
                        "grade_table": rows,
                        "grading": r.grading,
                        "category": r.category,
                        "composition": r.composition,
                        "pass": pass,
                    }),
                );
            } else {
                let _ = writeln!(out, "grade table (singleton source, counts by grade 0..={degree}):");
                for (s, t, g) in &table {
                    let _ = writeln!(out, "{s} -> {t}: {}", compact(&json!(g)));
                }
                report_lines(out, &r.grading);
                report_lines(out, &r.category);
                report_lines(out, &r.composition);
                let _ = writeln!(out, "roundtrip: {}", if pass { "pass" } else { "fail" });
            }
            Ok(if pass { 0 } else { 1 })
        }
    }
}

// ---------------------------------------------------------------------------
// segal
// ---------------------------------------------------------------------------

fn segal_cmd<W: Write>(cmd: SegalCmd, out: &mut W) -> Result<i32, Error> {
    match cmd {
        SegalCmd::Nerve { file, level, json } => {
            let pc = category_from_json(&load_json(&file)?)?;
            let t = nerve(&pc, level)?;
            if json {
                emit(out, &simplicial_to_json(&t));
            } else {
                let _ = writeln!(out, "levels: {}", compact(&json!(t.levels)));
            }
            Ok(0)
        }
        SegalCmd::Check { file, json } => {
            let t = simplicial_from_json(&load_json(&file)?)?;
            let segal = is_segal(&t);
            if json {
                emit(out, &json!({ "segal": segal }));
            } else {
                let _ = writeln!(out, "segal: {segal}");
            }
            Ok(if segal { 0 } else { 1 })
        }
        SegalCmd::Complete { file, json } => {
            let t = simplicial_from_json(&load_json(&file)?)?;
            if !is_segal(&t) {
                return Err(Error::input(
                    "the simplicial set is not Segal, so completeness is undefined",
                ));
            }
            let by_invertibles = complete_via_invertibles(&t)?;
            let by_locality = complete_via_e_locality(&t)?;
            if json {
                emit(
                    out,
                    &json!({
                        "complete_via_invertibles": by_invertibles,
                        "complete_via_e_locality": by_locality,
                    }),
                );
            } else {
                let _ = writeln!(out, "complete (invertible-edge test): {by_invertibles}");
                let _ = writeln!(out, "complete (E-locality test): {by_locality}");
            }
            if by_invertibles != by_locality {
                let _ = writeln!(out, "the two completeness tests disagree");
                return Ok(1);
            }
            Ok(if by_invertibles { 0 } else { 1 })
        }
        SegalCmd::Roundtrip { file, level, json } => {
            let pc = category_from_json(&load_json(&file)?)?;
            let r = linear_roundtrip(&pc, level)?;
            let pass = r.passes();
            if json {
                emit(
                    out,
                    &json!({
                        "nerve_levels": r.nerve_levels,
                        "theory_levels": r.theory_levels,
                        "report": r.report,
                        "pass": pass,
                    }),
                );
            } else {
                let _ = writeln!(out, "nerve:  {}", compact(&json!(r.nerve_levels)));
                let _ = writeln!(out, "theory: {}", compact(&json!(r.theory_levels)));
                report_lines(out, &r.report);
                let _ = writeln!(out, "roundtrip: {}", if pass { "pass" } else { "fail" });
            }
            Ok(if pass { 0 } else { 1 })
        }
    }
}
