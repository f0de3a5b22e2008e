//! JSON readers and writers for the file formats the command line speaks.
//!
//! All arrays are 0-indexed. Parsing is strict — unknown fields and dangling
//! names are rejected with a description of the offender — and writers emit
//! the same shapes with sorted keys and stable element order, so
//! parse→serialize→parse is the identity on every well-formed file.
//!
//! - span: `{"dom", "cod", "matrix"}`; a witness file
//!   `{"dom", "cod", "apex", "left", "right"}` is accepted anywhere a span
//!   is expected and canonicalized to its matrix.
//! - operad: `{"colours", "max_arity", "ops", "sym", "comp", "ids"}` with
//!   colours and operations referenced by name.
//! - family: `{"colours", "sets"}`, aligned against a caller-supplied label
//!   list (operad colours or pin labels).
//! - category: `{"objects", "homs", "comp", "ids"}` plus an optional
//!   `"pinning"` array of object names (default: identity pinning).
//! - simplicial set: `{"levels", "faces", "degeneracies"}`.
//! - theory hom: `{"src", "tgt", "terms"}` over an operad.
//! - generators: `{"generators": [g0, g1, ...]}`, counts per arity.

use crate::error::Error;
use crate::finspan::{FinMap, Span, SpanWitness};
use crate::lawvere::{LawvereTheory, TheoryHom};
use crate::monad::{canonical_term, Family, FlatTerm};
use crate::operad::{ColouredOperad, OpData};
use crate::segal::{CategoryData, HomData, PinnedCategory, TruncatedSimplicialSet};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| Error::input(format!("{what} must be a JSON object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array()
        .ok_or_else(|| Error::input(format!("{what} must be a JSON array")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, Error> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::input(format!("{what} must be a non-negative integer")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, Error> {
    v.as_str()
        .ok_or_else(|| Error::input(format!("{what} must be a string")))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value, Error> {
    m.get(key)
        .ok_or_else(|| Error::input(format!("{what} is missing the field {key:?}")))
}

fn check_fields(m: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<(), Error> {
    for k in m.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::input(format!("unexpected field {k:?} in {what}")));
        }
    }
    Ok(())
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>, Error> {
    as_array(v, what)?
        .iter()
        .map(|x| as_usize(x, &format!("entry of {what}")))
        .collect()
}

fn string_list(v: &Value, what: &str) -> Result<Vec<String>, Error> {
    as_array(v, what)?
        .iter()
        .map(|x| as_str(x, &format!("entry of {what}")).map(str::to_string))
        .collect()
}

fn lookup(index: &BTreeMap<String, usize>, name: &str, kind: &str) -> Result<usize, Error> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::input(format!("unknown {kind} {name:?}")))
}

fn name_index(names: &[String]) -> BTreeMap<String, usize> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect()
}

// ---------------------------------------------------------------------------
// Spans
// ---------------------------------------------------------------------------

pub fn span_from_json(v: &Value) -> Result<Span, Error> {
    let m = as_object(v, "a span")?;
    if m.contains_key("apex") {
        check_fields(m, &["dom", "cod", "apex", "left", "right"], "a span witness")?;
        let dom = as_usize(get(m, "dom", "a span witness")?, "dom")?;
        let cod = as_usize(get(m, "cod", "a span witness")?, "cod")?;
        let apex = as_usize(get(m, "apex", "a span witness")?, "apex")?;
        let left = FinMap::new(apex, dom, usize_list(get(m, "left", "a span witness")?, "left")?)?;
        let right =
            FinMap::new(apex, cod, usize_list(get(m, "right", "a span witness")?, "right")?)?;
        Ok(SpanWitness::new(left, right)?.canonicalize())
    } else {
        check_fields(m, &["dom", "cod", "matrix"], "a span")?;
        let dom = as_usize(get(m, "dom", "a span")?, "dom")?;
        let cod = as_usize(get(m, "cod", "a span")?, "cod")?;
        let matrix = as_array(get(m, "matrix", "a span")?, "matrix")?
            .iter()
            .map(|r| usize_list(r, "a matrix row"))
            .collect::<Result<Vec<_>, _>>()?;
        Span::from_matrix_with_shape(dom, cod, matrix)
    }
}

pub fn span_to_json(s: &Span) -> Value {
    json!({ "dom": s.dom(), "cod": s.cod(), "matrix": s.matrix() })
}

// ---------------------------------------------------------------------------
// Operads
// ---------------------------------------------------------------------------

pub fn operad_from_json(v: &Value) -> Result<ColouredOperad, Error> {
    let m = as_object(v, "an operad")?;
    check_fields(
        m,
        &["colours", "max_arity", "ops", "sym", "comp", "ids"],
        "an operad",
    )?;
    let colours = string_list(get(m, "colours", "an operad")?, "colours")?;
    let col_ix = name_index(&colours);
    let max_arity = as_usize(get(m, "max_arity", "an operad")?, "max_arity")?;
    let mut ops = Vec::new();
    let mut op_ix = BTreeMap::new();
    for opv in as_array(get(m, "ops", "an operad")?, "ops")? {
        let om = as_object(opv, "an operation")?;
        check_fields(om, &["name", "inputs", "output"], "an operation")?;
        let name = as_str(get(om, "name", "an operation")?, "name")?.to_string();
        let inputs = string_list(get(om, "inputs", "an operation")?, "inputs")?
            .iter()
            .map(|c| lookup(&col_ix, c, "colour"))
            .collect::<Result<Vec<_>, _>>()?;
        let output = lookup(
            &col_ix,
            as_str(get(om, "output", "an operation")?, "output")?,
            "colour",
        )?;
        op_ix.entry(name.clone()).or_insert(ops.len());
        ops.push(OpData {
            name,
            inputs,
            output,
        });
    }
    let mut sym = Vec::new();
    for sv in as_array(get(m, "sym", "an operad")?, "sym")? {
        let sm = as_object(sv, "a symmetry entry")?;
        check_fields(sm, &["op", "perm", "image"], "a symmetry entry")?;
        sym.push((
            lookup(
                &op_ix,
                as_str(get(sm, "op", "a symmetry entry")?, "op")?,
                "operation",
            )?,
            usize_list(get(sm, "perm", "a symmetry entry")?, "perm")?,
            lookup(
                &op_ix,
                as_str(get(sm, "image", "a symmetry entry")?, "image")?,
                "operation",
            )?,
        ));
    }
    let mut comp = Vec::new();
    for cv in as_array(get(m, "comp", "an operad")?, "comp")? {
        let cm = as_object(cv, "a composition entry")?;
        check_fields(cm, &["outer", "inners", "result"], "a composition entry")?;
        let inners = string_list(get(cm, "inners", "a composition entry")?, "inners")?
            .iter()
            .map(|n| lookup(&op_ix, n, "operation"))
            .collect::<Result<Vec<_>, _>>()?;
        comp.push((
            lookup(
                &op_ix,
                as_str(get(cm, "outer", "a composition entry")?, "outer")?,
                "operation",
            )?,
            inners,
            lookup(
                &op_ix,
                as_str(get(cm, "result", "a composition entry")?, "result")?,
                "operation",
            )?,
        ));
    }
    let ids = as_object(get(m, "ids", "an operad")?, "ids")?;
    let mut idents = Vec::with_capacity(colours.len());
    for c in &colours {
        let idv = ids
            .get(c)
            .ok_or_else(|| Error::input(format!("ids is missing colour {c:?}")))?;
        idents.push(lookup(&op_ix, as_str(idv, "an identity")?, "operation")?);
    }
    for k in ids.keys() {
        if !col_ix.contains_key(k) {
            return Err(Error::input(format!("ids names unknown colour {k:?}")));
        }
    }
    ColouredOperad::new(colours, max_arity, ops, sym, comp, idents)
}

pub fn operad_to_json(o: &ColouredOperad) -> Value {
    let colour = |c: usize| o.colours()[c].clone();
    let op_name = |i: usize| o.op(i).name.clone();
    let ops: Vec<Value> = (0..o.num_ops())
        .map(|i| {
            let d = o.op(i);
            json!({
                "name": d.name,
                "inputs": d.inputs.iter().map(|&c| colour(c)).collect::<Vec<_>>(),
                "output": colour(d.output),
            })
        })
        .collect();
    let sym: Vec<Value> = o
        .sym_entries()
        .into_iter()
        .map(|(op, perm, image)| json!({ "op": op_name(op), "perm": perm, "image": op_name(image) }))
        .collect();
    let comp: Vec<Value> = o
        .comp_entries()
        .into_iter()
        .map(|(outer, inners, result)| {
            json!({
                "outer": op_name(outer),
                "inners": inners.iter().map(|&i| op_name(i)).collect::<Vec<_>>(),
                "result": op_name(result),
            })
        })
        .collect();
    let ids: BTreeMap<String, String> = o
        .idents()
        .iter()
        .enumerate()
        .map(|(c, &i)| (colour(c), op_name(i)))
        .collect();
    json!({
        "colours": o.colours(),
        "max_arity": o.max_arity(),
        "ops": ops,
        "sym": sym,
        "comp": comp,
        "ids": ids,
    })
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// Parse a family file against the label list it must cover — the colours of
/// an operad, or pin labels. The file may list them in any order.
pub fn family_from_json(v: &Value, labels: &[String]) -> Result<Family, Error> {
    let m = as_object(v, "a family")?;
    check_fields(m, &["colours", "sets"], "a family")?;
    let colours = string_list(get(m, "colours", "a family")?, "colours")?;
    let mut file_sorted = colours.clone();
    file_sorted.sort();
    let mut want_sorted = labels.to_vec();
    want_sorted.sort();
    if file_sorted != want_sorted {
        return Err(Error::input(format!(
            "family colours {colours:?} do not match the expected {labels:?}"
        )));
    }
    let sets = as_object(get(m, "sets", "a family")?, "sets")?;
    for k in sets.keys() {
        if !colours.iter().any(|c| c == k) {
            return Err(Error::input(format!("sets names unknown colour {k:?}")));
        }
    }
    let mut sizes = Vec::with_capacity(labels.len());
    for c in labels {
        let sv = sets
            .get(c)
            .ok_or_else(|| Error::input(format!("sets is missing colour {c:?}")))?;
        sizes.push(as_usize(sv, &format!("size of {c:?}"))?);
    }
    Ok(Family::new(sizes))
}

pub fn family_to_json(f: &Family, labels: &[String]) -> Value {
    let sets: BTreeMap<String, usize> = labels
        .iter()
        .cloned()
        .zip(f.sizes.iter().copied())
        .collect();
    json!({ "colours": labels, "sets": sets })
}

// ---------------------------------------------------------------------------
// Categories
// ---------------------------------------------------------------------------

pub fn category_from_json(v: &Value) -> Result<PinnedCategory, Error> {
    let m = as_object(v, "a category")?;
    check_fields(m, &["objects", "homs", "comp", "ids", "pinning"], "a category")?;
    let objects = string_list(get(m, "objects", "a category")?, "objects")?;
    let obj_ix = name_index(&objects);
    let mut homs = Vec::new();
    let mut hom_ix = BTreeMap::new();
    for hv in as_array(get(m, "homs", "a category")?, "homs")? {
        let hm = as_object(hv, "a morphism")?;
        check_fields(hm, &["src", "tgt", "name"], "a morphism")?;
        let name = as_str(get(hm, "name", "a morphism")?, "name")?.to_string();
        let src = lookup(
            &obj_ix,
            as_str(get(hm, "src", "a morphism")?, "src")?,
            "object",
        )?;
        let tgt = lookup(
            &obj_ix,
            as_str(get(hm, "tgt", "a morphism")?, "tgt")?,
            "object",
        )?;
        hom_ix.entry(name.clone()).or_insert(homs.len());
        homs.push(HomData { name, src, tgt });
    }
    let mut comp = Vec::new();
    for cv in as_array(get(m, "comp", "a category")?, "comp")? {
        let triple = string_list(cv, "a composition entry")?;
        if triple.len() != 3 {
            return Err(Error::input(
                "a composition entry must be a [first, second, composite] name triple",
            ));
        }
        comp.push((
            lookup(&hom_ix, &triple[0], "morphism")?,
            lookup(&hom_ix, &triple[1], "morphism")?,
            lookup(&hom_ix, &triple[2], "morphism")?,
        ));
    }
    let ids = as_object(get(m, "ids", "a category")?, "ids")?;
    let mut id_vec = Vec::with_capacity(objects.len());
    for x in &objects {
        let idv = ids
            .get(x)
            .ok_or_else(|| Error::input(format!("ids is missing object {x:?}")))?;
        id_vec.push(lookup(&hom_ix, as_str(idv, "an identity")?, "morphism")?);
    }
    for k in ids.keys() {
        if !obj_ix.contains_key(k) {
            return Err(Error::input(format!("ids names unknown object {k:?}")));
        }
    }
    let cat = CategoryData::new(objects, homs, comp, id_vec)?;
    let pinning = match m.get("pinning") {
        Some(pv) => string_list(pv, "pinning")?
            .iter()
            .map(|n| {
                cat.object_index(n)
                    .ok_or_else(|| Error::input(format!("pinning names unknown object {n:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => (0..cat.num_objects()).collect(),
    };
    PinnedCategory::new(cat, pinning)
}

pub fn category_to_json(pc: &PinnedCategory) -> Value {
    let cat = &pc.cat;
    let obj = |x: usize| cat.object_name(x).to_string();
    let hom = |f: usize| cat.hom(f).name.clone();
    let homs: Vec<Value> = (0..cat.num_homs())
        .map(|f| {
            json!({
                "name": cat.hom(f).name,
                "src": obj(cat.hom(f).src),
                "tgt": obj(cat.hom(f).tgt),
            })
        })
        .collect();
    let comp: Vec<Value> = cat
        .comp_entries()
        .into_iter()
        .map(|(f, g, h)| json!([hom(f), hom(g), hom(h)]))
        .collect();
    let ids: BTreeMap<String, String> = (0..cat.num_objects())
        .map(|x| (obj(x), hom(cat.id_of(x))))
        .collect();
    let objects: Vec<String> = (0..cat.num_objects()).map(obj).collect();
    let pinning: Vec<String> = pc.pinning.iter().map(|&x| obj(x)).collect();
    json!({
        "objects": objects,
        "homs": homs,
        "comp": comp,
        "ids": ids,
        "pinning": pinning,
    })
}

// ---------------------------------------------------------------------------
// Simplicial sets
// ---------------------------------------------------------------------------

pub fn simplicial_from_json(v: &Value) -> Result<TruncatedSimplicialSet, Error> {
    let m = as_object(v, "a simplicial set")?;
    check_fields(m, &["levels", "faces", "degeneracies"], "a simplicial set")?;
    let levels = usize_list(get(m, "levels", "a simplicial set")?, "levels")?;
    let tables = |v: &Value, what: &str| -> Result<Vec<Vec<Vec<usize>>>, Error> {
        as_array(v, what)?
            .iter()
            .map(|block| {
                as_array(block, &format!("a block of {what}"))?
                    .iter()
                    .map(|t| usize_list(t, &format!("a table of {what}")))
                    .collect()
            })
            .collect()
    };
    let faces = tables(get(m, "faces", "a simplicial set")?, "faces")?;
    let degeneracies = tables(get(m, "degeneracies", "a simplicial set")?, "degeneracies")?;
    TruncatedSimplicialSet::new(levels, faces, degeneracies)
}

pub fn simplicial_to_json(t: &TruncatedSimplicialSet) -> Value {
    json!({
        "levels": t.levels,
        "faces": t.faces,
        "degeneracies": t.degeneracies,
    })
}

// ---------------------------------------------------------------------------
// Theory homs and theory dumps
// ---------------------------------------------------------------------------

pub fn hom_from_json(v: &Value, o: &ColouredOperad) -> Result<TheoryHom, Error> {
    let m = as_object(v, "a theory hom")?;
    check_fields(m, &["src", "tgt", "terms"], "a theory hom")?;
    let col_ix = name_index(o.colours());
    let tuple = |v: &Value, what: &str| -> Result<Vec<usize>, Error> {
        string_list(v, what)?
            .iter()
            .map(|c| lookup(&col_ix, c, "colour"))
            .collect()
    };
    let src = tuple(get(m, "src", "a theory hom")?, "src")?;
    let tgt = tuple(get(m, "tgt", "a theory hom")?, "tgt")?;
    let mut terms = Vec::new();
    for tv in as_array(get(m, "terms", "a theory hom")?, "terms")? {
        let tm = as_object(tv, "a term")?;
        check_fields(tm, &["op", "args"], "a term")?;
        let op = o
            .op_index(as_str(get(tm, "op", "a term")?, "op")?)
            .ok_or_else(|| Error::input("a term names an unknown operation"))?;
        let args = usize_list(get(tm, "args", "a term")?, "args")?;
        terms.push(canonical_term(o, &FlatTerm { op, args })?);
    }
    if terms.len() != src.len() {
        return Err(Error::input(format!(
            "a theory hom needs one term per source position: {} terms for {} positions",
            terms.len(),
            src.len()
        )));
    }
    for (i, t) in terms.iter().enumerate() {
        if o.op(t.op).output != src[i] {
            return Err(Error::input(format!(
                "term {i} outputs the wrong colour for its source position"
            )));
        }
        let counts: Vec<usize> = (0..o.colours().len())
            .map(|c| tgt.iter().filter(|&&x| x == c).count())
            .collect();
        for (k, &a) in t.args.iter().enumerate() {
            let c = o.op(t.op).inputs[k];
            if a >= counts[c] {
                return Err(Error::input(format!(
                    "term {i} argument {k} exceeds the number of {}-positions in the target",
                    o.colours()[c]
                )));
            }
        }
    }
    Ok(TheoryHom { src, tgt, terms })
}

pub fn hom_to_json(h: &TheoryHom, o: &ColouredOperad) -> Value {
    let colour = |c: &usize| o.colours()[*c].clone();
    let terms: Vec<Value> = h
        .terms
        .iter()
        .map(|t| json!({ "op": o.op(t.op).name, "args": t.args }))
        .collect();
    json!({
        "src": h.src.iter().map(colour).collect::<Vec<_>>(),
        "tgt": h.tgt.iter().map(colour).collect::<Vec<_>>(),
        "terms": terms,
    })
}

/// Dump a theory: objects, pinning, and per-grade hom cardinalities, plus
/// full hom listings when `with_terms` is set.
pub fn theory_to_json(th: &LawvereTheory, with_terms: bool) -> Value {
    let o = th.operad();
    let objects: Vec<Vec<String>> = (0..th.num_objects())
        .map(|x| th.object(x).iter().map(|&c| o.colours()[c].clone()).collect())
        .collect();
    let mut counts = Vec::with_capacity(th.num_objects());
    let mut listings = Vec::new();
    for s in 0..th.num_objects() {
        let mut row = Vec::with_capacity(th.num_objects());
        for t in 0..th.num_objects() {
            let homs = th.homs(s, t);
            let mut by_grade = vec![0usize; th.grade_bound() + 1];
            for h in homs {
                by_grade[h.grade()] += 1;
            }
            row.push(by_grade);
            if with_terms && !homs.is_empty() {
                listings.push(json!({
                    "src": s,
                    "tgt": t,
                    "elements": homs.iter().map(|h| hom_to_json(h, o)).collect::<Vec<_>>(),
                }));
            }
        }
        counts.push(row);
    }
    let mut out = json!({
        "tuple_bound": th.tuple_bound(),
        "grade_bound": th.grade_bound(),
        "objects": objects,
        "pinning": th.pinning(),
        "hom_counts_by_grade": counts,
    });
    if with_terms {
        out.as_object_mut()
            .unwrap()
            .insert("homs".to_string(), Value::Array(listings));
    }
    out
}

// ---------------------------------------------------------------------------
// Generator files
// ---------------------------------------------------------------------------

/// Parse `{"generators": [g0, g1, ...]}`: the number of generators of each
/// arity for a free symmetric sequence.
pub fn generators_from_json(v: &Value) -> Result<Vec<usize>, Error> {
    let m = as_object(v, "a generator file")?;
    check_fields(m, &["generators"], "a generator file")?;
    usize_list(get(m, "generators", "a generator file")?, "generators")
}

/// Parse a string as JSON, mapping syntax errors into [`Error::Input`].
pub fn parse_json(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("invalid JSON: {e}")))
}
