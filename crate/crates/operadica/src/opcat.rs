//! Categories of operators.
//!
//! The category of operators of a coloured operad has colour tuples as
//! objects; a morphism c̄ → d̄ is a span of finite sets over the tuple
//! lengths (graded by its total, bounded by `grade_bound`) together with one
//! operation per target position whose inputs are the fibre colours — taken
//! up to automorphisms of the span's apex over both legs, so a morphism
//! stores the lexicographically least operation of each target's orbit
//! under the block permutation group of its fibre.
//!
//! Everything here is checked by enumeration, not assumed: cocartesian
//! morphisms, product cones, the pointed-free-category conditions, and
//! functor comparisons all quantify over the finite windows the bounds cut
//! out.

use crate::error::Error;
use crate::finspan::{product_cone, rho_inert, FinMap, Span};
use crate::operad::{all_perms, identity_perm, ColouredOperad, OpId, OperadMorphism};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// (source object, target object, index within that hom set).
pub type MorId = (usize, usize, usize);

/// One morphism: its span, its canonical operation per target (empty for
/// table-backed categories), and a display name (empty for operad-backed
/// ones).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MorData {
    pub span: Span,
    pub ops: Vec<OpId>,
    pub name: String,
}

#[derive(Clone, Debug)]
enum Backend {
    Operad(ColouredOperad),
    Table(HashMap<(MorId, MorId), MorId>),
}

/// A category of operators, either computed from an operad or given by
/// explicit tables.
#[derive(Clone, Debug)]
pub struct OperatorCategory {
    colours: Vec<String>,
    tuple_bound: usize,
    grade_bound: usize,
    objects: Vec<Vec<usize>>,
    obj_index: BTreeMap<Vec<usize>, usize>,
    homs: Vec<Vec<Vec<MorData>>>,
    ids: Vec<MorId>,
    backend: Backend,
}

/// Fibre positions of `span` over target `j`, as (source position, copy)
/// pairs in row-major order — the canonical input order of the operation
/// attached to `j`.
pub(crate) fn fibre_positions(span: &Span, j: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..span.dom() {
        for copy in 0..span.entry(i, j) {
            out.push((i, copy));
        }
    }
    out
}

/// All block permutations of the fibre of `span` over `j`: independent
/// permutations of each cell's copies, as one permutation of the fibre.
fn block_perms(span: &Span, j: usize) -> Vec<Vec<usize>> {
    let mut cell_sizes = Vec::new();
    for i in 0..span.dom() {
        let m = span.entry(i, j);
        if m > 0 {
            cell_sizes.push(m);
        }
    }
    let mut result = vec![Vec::new()];
    let mut offset = 0;
    for m in cell_sizes {
        let perms = all_perms(m);
        let mut next = Vec::with_capacity(result.len() * perms.len());
        for prefix in &result {
            for p in &perms {
                let mut v = prefix.clone();
                v.extend(p.iter().map(|&x| x + offset));
                next.push(v);
            }
        }
        result = next;
        offset += m;
    }
    result
}

/// The least operation in the block-permutation orbit of `op` over target
/// `j` — the canonical representative demanded by orbit equality.
pub(crate) fn canonical_op(o: &ColouredOperad, span: &Span, j: usize, op: OpId) -> Result<OpId, Error> {
    let mut best = op;
    for p in block_perms(span, j) {
        if p == identity_perm(p.len()) {
            continue;
        }
        let moved = o.sym_act(op, &p)?;
        if moved < best {
            best = moved;
        }
    }
    Ok(best)
}

impl OperatorCategory {
    pub fn colours(&self) -> &[String] {
        &self.colours
    }

    pub fn tuple_bound(&self) -> usize {
        self.tuple_bound
    }

    pub fn grade_bound(&self) -> usize {
        self.grade_bound
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object(&self, x: usize) -> &[usize] {
        &self.objects[x]
    }

    pub fn object_index(&self, tuple: &[usize]) -> Option<usize> {
        self.obj_index.get(tuple).copied()
    }

    pub fn hom_size(&self, s: usize, t: usize) -> usize {
        self.homs[s][t].len()
    }

    pub fn morphisms(&self, s: usize, t: usize) -> impl Iterator<Item = MorId> + '_ {
        (0..self.homs[s][t].len()).map(move |i| (s, t, i))
    }

    pub fn all_morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.num_objects()).flat_map(move |s| {
            (0..self.num_objects()).flat_map(move |t| self.morphisms(s, t))
        })
    }

    pub fn mor(&self, m: MorId) -> &MorData {
        &self.homs[m.0][m.1][m.2]
    }

    pub fn grade(&self, m: MorId) -> usize {
        self.mor(m).span.total()
    }

    pub fn identity(&self, x: usize) -> MorId {
        self.ids[x]
    }

    pub fn morphisms_over(&self, s: usize, t: usize, span: &Span) -> Vec<MorId> {
        self.morphisms(s, t)
            .filter(|&m| &self.mor(m).span == span)
            .collect()
    }

    /// Locate a morphism by value.
    pub fn find(&self, s: usize, t: usize, span: &Span, ops: &[OpId]) -> Option<MorId> {
        self.morphisms(s, t).find(|&m| {
            let d = self.mor(m);
            &d.span == span && d.ops == ops
        })
    }

    pub fn find_by_name(&self, name: &str) -> Option<MorId> {
        self.all_morphisms().find(|&m| self.mor(m).name == name)
    }

    /// Diagrammatic composition f then g. Overflowing the grade bound is an
    /// explicit error; a missing table entry is an input error.
    pub fn compose(&self, f: MorId, g: MorId) -> Result<MorId, Error> {
        if f.1 != g.0 {
            return Err(Error::input("morphisms are not composable"));
        }
        let (fd, gd) = (self.mor(f), self.mor(g));
        let u = fd.span.compose(&gd.span)?;
        if u.total() > self.grade_bound {
            return Err(Error::overflow(format!(
                "composite grade {} exceeds bound {}",
                u.total(),
                self.grade_bound
            )));
        }
        match &self.backend {
            Backend::Table(table) => table.get(&(f, g)).copied().ok_or_else(|| {
                Error::input(format!(
                    "composition table has no entry for ({}, {})",
                    fd.name, gd.name
                ))
            }),
            Backend::Operad(o) => {
                let ops = compose_ops(o, &fd.span, &fd.ops, &gd.span, &gd.ops, &u)?;
                self.find(f.0, g.1, &u, &ops)
                    .ok_or_else(|| Error::input("composite not found among morphisms"))
            }
        }
    }

    /// Materialize the composition table, turning any backend into an
    /// explicit one. Pairs that overflow the grade bound stay absent.
    pub fn to_table(&self) -> Result<OperatorCategory, Error> {
        let mut table = HashMap::new();
        for f in self.all_morphisms() {
            for t in 0..self.num_objects() {
                for g in self.morphisms(f.1, t) {
                    match self.compose(f, g) {
                        Ok(h) => {
                            table.insert((f, g), h);
                        }
                        Err(Error::BoundOverflow(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        let mut named = self.homs.clone();
        for (s, row) in named.iter_mut().enumerate() {
            for (t, hom) in row.iter_mut().enumerate() {
                for (i, m) in hom.iter_mut().enumerate() {
                    if m.name.is_empty() {
                        m.name = format!("h_{s}_{t}_{i}");
                    }
                }
            }
        }
        Ok(OperatorCategory {
            colours: self.colours.clone(),
            tuple_bound: self.tuple_bound,
            grade_bound: self.grade_bound,
            objects: self.objects.clone(),
            obj_index: self.obj_index.clone(),
            homs: named,
            ids: self.ids.clone(),
            backend: Backend::Table(table),
        })
    }

    /// The full subcategory on the given objects (table-backed). Composites
    /// leading outside the kept objects are dropped with them.
    pub fn restrict_full(&self, keep: &[usize]) -> Result<OperatorCategory, Error> {
        let t = self.to_table()?;
        let Backend::Table(table) = &t.backend else { unreachable!() };
        let mut new_index = vec![None; t.objects.len()];
        let mut objects = Vec::new();
        for &x in keep {
            if x >= t.objects.len() {
                return Err(Error::input("restriction keeps an unknown object"));
            }
            new_index[x] = Some(objects.len());
            objects.push(t.objects[x].clone());
        }
        let remap_obj = |x: usize| new_index[x];
        let mut homs = vec![vec![Vec::new(); objects.len()]; objects.len()];
        for &s in keep {
            for &tt in keep {
                homs[remap_obj(s).unwrap()][remap_obj(tt).unwrap()] = t.homs[s][tt].clone();
            }
        }
        let remap_mor = |m: MorId| -> Option<MorId> {
            Some((remap_obj(m.0)?, remap_obj(m.1)?, m.2))
        };
        let mut new_table = HashMap::new();
        for (&(f, g), &h) in table {
            if let (Some(f2), Some(g2), Some(h2)) = (remap_mor(f), remap_mor(g), remap_mor(h)) {
                new_table.insert((f2, g2), h2);
            }
        }
        let ids = keep
            .iter()
            .map(|&x| remap_mor(t.ids[x]).unwrap())
            .collect();
        let obj_index = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), i))
            .collect();
        Ok(OperatorCategory {
            colours: t.colours.clone(),
            tuple_bound: t.tuple_bound,
            grade_bound: t.grade_bound,
            objects,
            obj_index,
            homs,
            ids,
            backend: Backend::Table(new_table),
        })
    }

    /// Remove one (non-identity) morphism, reindexing hom sets and dropping
    /// every composition entry that mentions it — a fault-injection helper.
    pub fn with_morphism_removed(&self, victim: MorId) -> Result<OperatorCategory, Error> {
        if self.ids.contains(&victim) {
            return Err(Error::input("refusing to remove an identity"));
        }
        let t = self.to_table()?;
        let Backend::Table(table) = &t.backend else { unreachable!() };
        let mut homs = t.homs.clone();
        homs[victim.0][victim.1].remove(victim.2);
        let remap = |m: MorId| -> Option<MorId> {
            if m == victim {
                None
            } else if m.0 == victim.0 && m.1 == victim.1 && m.2 > victim.2 {
                Some((m.0, m.1, m.2 - 1))
            } else {
                Some(m)
            }
        };
        let mut new_table = HashMap::new();
        for (&(f, g), &h) in table {
            if let (Some(f2), Some(g2), Some(h2)) = (remap(f), remap(g), remap(h)) {
                new_table.insert((f2, g2), h2);
            }
        }
        let ids = t.ids.iter().map(|&i| remap(i).unwrap()).collect();
        Ok(OperatorCategory {
            colours: t.colours.clone(),
            tuple_bound: t.tuple_bound,
            grade_bound: t.grade_bound,
            objects: t.objects.clone(),
            obj_index: t.obj_index.clone(),
            homs,
            ids,
            backend: Backend::Table(new_table),
        })
    }

    /// Category-law report: identities, totality within the grade bound,
    /// span agreement of composites, and associativity where defined.
    pub fn validate(&self) -> Vec<String> {
        let mut report = Vec::new();
        for x in 0..self.num_objects() {
            let id = self.ids[x];
            if id.0 != x || id.1 != x {
                report.push(format!("identity of object {x} has wrong endpoints"));
                continue;
            }
            let d = self.mor(id);
            if !d.span.is_iso() {
                report.push(format!("identity of object {x} is not over an iso span"));
            }
        }
        let mors: Vec<MorId> = self.all_morphisms().collect();
        for &f in &mors {
            let id_s = self.ids[f.0];
            let id_t = self.ids[f.1];
            if self.compose(id_s, f).ok() != Some(f) {
                report.push(format!("left identity fails for {:?}", f));
            }
            if self.compose(f, id_t).ok() != Some(f) {
                report.push(format!("right identity fails for {:?}", f));
            }
        }
        for &f in &mors {
            for &g in &mors {
                if f.1 != g.0 {
                    continue;
                }
                let u = match self.mor(f).span.compose(&self.mor(g).span) {
                    Ok(u) => u,
                    Err(_) => continue,
                };
                if u.total() > self.grade_bound {
                    continue;
                }
                match self.compose(f, g) {
                    Ok(h) => {
                        if self.mor(h).span != u {
                            report.push(format!(
                                "composite of {:?} and {:?} has the wrong span",
                                f, g
                            ));
                        }
                    }
                    Err(_) => {
                        report.push(format!("missing composite of {:?} and {:?}", f, g));
                    }
                }
            }
        }
        for &f in &mors {
            for &g in &mors {
                if f.1 != g.0 {
                    continue;
                }
                let Ok(fg) = self.compose(f, g) else { continue };
                for &h in &mors {
                    if g.1 != h.0 {
                        continue;
                    }
                    let (Ok(gh), Ok(lhs)) = (self.compose(g, h), self.compose(fg, h)) else {
                        continue;
                    };
                    match self.compose(f, gh) {
                        Ok(rhs) if rhs == lhs => {}
                        _ => report.push(format!(
                            "associativity fails at ({:?}, {:?}, {:?})",
                            f, g, h
                        )),
                    }
                }
            }
        }
        report
    }
}

/// Composite operations of (S, α) then (T, β) over the product span `u`:
/// per composite target k, γ(β_k; the α_j for each copy in T's fibre over
/// k), reordered from (j, copy₂, i, copy₁) nesting to the canonical
/// (i, j, copy₁, copy₂) fibre order of `u`, then orbit-canonicalized.
fn compose_ops(
    o: &ColouredOperad,
    s_span: &Span,
    s_ops: &[OpId],
    t_span: &Span,
    t_ops: &[OpId],
    u: &Span,
) -> Result<Vec<OpId>, Error> {
    let mut out = Vec::with_capacity(t_span.cod());
    for k in 0..t_span.cod() {
        let inner: Vec<OpId> = fibre_positions(t_span, k)
            .iter()
            .map(|&(j, _)| s_ops[j])
            .collect();
        let raw = o.compose(t_ops[k], &inner)?;
        // raw input order: (j, m2) outer, then (i, m1) within each α_j
        let mut raw_order = Vec::new();
        for (j, m2) in fibre_positions(t_span, k) {
            for (i, m1) in fibre_positions(s_span, j) {
                raw_order.push((i, j, m1, m2));
            }
        }
        let mut canon_order = raw_order.clone();
        canon_order.sort_unstable();
        let mut sigma = Vec::with_capacity(raw_order.len());
        for c in &canon_order {
            sigma.push(raw_order.iter().position(|r| r == c).unwrap());
        }
        let aligned = o.sym_act(raw, &sigma)?;
        out.push(canonical_op(o, u, k, aligned)?);
    }
    Ok(out)
}

/// The category of operators of an operad: objects are colour tuples of
/// length ≤ `tuple_bound`, morphisms are spans of grade ≤ `grade_bound`
/// with canonical operations per target. Requires grade ≤ arity bound so
/// composites always have operations available.
pub fn category_of_operators(
    o: &ColouredOperad,
    tuple_bound: usize,
    grade_bound: usize,
) -> Result<OperatorCategory, Error> {
    // Composite span columns stay within the arity bound when the grade
    // bound does, and also when every operation is at most unary (columns
    // never exceed 1); anything looser would leave in-window composites
    // without operations.
    let widest_op = (0..o.num_ops()).map(|op| o.arity(op)).max().unwrap_or(0);
    if grade_bound > o.max_arity() && widest_op > 1 {
        return Err(Error::input(
            "grade bound must not exceed the operad's arity bound",
        ));
    }
    let k = o.colours().len();
    let mut objects = Vec::new();
    for len in 0..=tuple_bound {
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for t in &stack {
                for c in 0..k {
                    let mut t2 = t.clone();
                    t2.push(c);
                    next.push(t2);
                }
            }
            stack = next;
        }
        if len > 0 && k == 0 {
            continue;
        }
        objects.extend(stack);
    }
    let obj_index: BTreeMap<Vec<usize>, usize> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (o.clone(), i))
        .collect();
    let mut homs = vec![vec![Vec::new(); objects.len()]; objects.len()];
    for (s, src) in objects.iter().enumerate() {
        for (t, tgt) in objects.iter().enumerate() {
            let mut set: BTreeSet<MorData> = BTreeSet::new();
            for span in crate::finspan::enumerate_spans(src.len(), tgt.len(), grade_bound) {
                // per target: orbit representatives of fitting operations
                let mut per_target: Vec<Vec<OpId>> = Vec::with_capacity(tgt.len());
                let mut empty = false;
                for j in 0..tgt.len() {
                    let profile: Vec<usize> = fibre_positions(&span, j)
                        .iter()
                        .map(|&(i, _)| src[i])
                        .collect();
                    let mut reps = BTreeSet::new();
                    for &op in o.ops_with_profile(&profile, tgt[j]) {
                        reps.insert(canonical_op(o, &span, j, op)?);
                    }
                    if reps.is_empty() {
                        empty = true;
                        break;
                    }
                    per_target.push(reps.into_iter().collect());
                }
                if empty {
                    continue;
                }
                // cartesian product over targets
                let mut pick = vec![0usize; tgt.len()];
                loop {
                    let ops: Vec<OpId> =
                        (0..tgt.len()).map(|j| per_target[j][pick[j]]).collect();
                    set.insert(MorData {
                        span: span.clone(),
                        ops,
                        name: String::new(),
                    });
                    let mut i = 0;
                    while i < tgt.len() {
                        pick[i] += 1;
                        if pick[i] < per_target[i].len() {
                            break;
                        }
                        pick[i] = 0;
                        i += 1;
                    }
                    if i == tgt.len() {
                        break;
                    }
                }
            }
            homs[s][t] = set.into_iter().collect();
        }
    }
    let mut ids = Vec::with_capacity(objects.len());
    for (x, tuple) in objects.iter().enumerate() {
        let span = Span::identity(tuple.len());
        let ops: Vec<OpId> = tuple.iter().map(|&c| o.ident(c)).collect();
        let idx = homs[x][x]
            .iter()
            .position(|m| m.span == span && m.ops == ops)
            .ok_or_else(|| Error::input("identity morphism not generated"))?;
        ids.push((x, x, idx));
    }
    Ok(OperatorCategory {
        colours: o.colours().to_vec(),
        tuple_bound,
        grade_bound,
        objects,
        obj_index,
        homs,
        ids,
        backend: Backend::Operad(o.clone()),
    })
}

/// One named morphism of a table-backed operator category.
pub struct TableMor {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub span: Span,
}

/// Build an operator category from explicit tables. Structural checks only;
/// run [`OperatorCategory::validate`] for the category laws.
pub fn table_category(
    colours: Vec<String>,
    tuple_bound: usize,
    grade_bound: usize,
    objects: Vec<Vec<usize>>,
    morphisms: Vec<TableMor>,
    comp: Vec<(String, String, String)>,
    ids: Vec<String>,
) -> Result<OperatorCategory, Error> {
    let mut obj_index = BTreeMap::new();
    for (i, o) in objects.iter().enumerate() {
        if o.len() > tuple_bound {
            return Err(Error::input("object longer than the tuple bound"));
        }
        if o.iter().any(|&c| c >= colours.len()) {
            return Err(Error::input("object uses an unknown colour"));
        }
        if obj_index.insert(o.clone(), i).is_some() {
            return Err(Error::input("duplicate object"));
        }
    }
    let mut homs = vec![vec![Vec::new(); objects.len()]; objects.len()];
    let mut by_name: HashMap<String, MorId> = HashMap::new();
    // first pass: stable placement in declaration order
    for m in &morphisms {
        if m.src >= objects.len() || m.tgt >= objects.len() {
            return Err(Error::input(format!("morphism {} has unknown endpoints", m.name)));
        }
        if m.span.dom() != objects[m.src].len() || m.span.cod() != objects[m.tgt].len() {
            return Err(Error::input(format!(
                "span of morphism {} does not match its endpoints",
                m.name
            )));
        }
        if m.span.total() > grade_bound {
            return Err(Error::input(format!(
                "morphism {} exceeds the grade bound",
                m.name
            )));
        }
        let idx = homs[m.src][m.tgt].len();
        if by_name
            .insert(m.name.clone(), (m.src, m.tgt, idx))
            .is_some()
        {
            return Err(Error::input(format!("duplicate morphism name {}", m.name)));
        }
        homs[m.src][m.tgt].push(MorData {
            span: m.span.clone(),
            ops: Vec::new(),
            name: m.name.clone(),
        });
    }
    let mut table = HashMap::new();
    for (f, g, h) in comp {
        let (&fm, &gm, &hm) = (
            by_name
                .get(&f)
                .ok_or_else(|| Error::input(format!("unknown morphism {f}")))?,
            by_name
                .get(&g)
                .ok_or_else(|| Error::input(format!("unknown morphism {g}")))?,
            by_name
                .get(&h)
                .ok_or_else(|| Error::input(format!("unknown morphism {h}")))?,
        );
        if fm.1 != gm.0 || hm.0 != fm.0 || hm.1 != gm.1 {
            return Err(Error::input(format!(
                "composition entry ({f}, {g}) = {h} has mismatched endpoints"
            )));
        }
        if let Some(&old) = table.get(&(fm, gm)) {
            if old != hm {
                return Err(Error::input("conflicting composition entries"));
            }
        }
        table.insert((fm, gm), hm);
    }
    if ids.len() != objects.len() {
        return Err(Error::input("one identity per object required"));
    }
    let mut id_ids = Vec::with_capacity(ids.len());
    for (x, name) in ids.iter().enumerate() {
        let &m = by_name
            .get(name)
            .ok_or_else(|| Error::input(format!("unknown identity {name}")))?;
        if m.0 != x || m.1 != x {
            return Err(Error::input(format!("identity {name} has wrong endpoints")));
        }
        id_ids.push(m);
    }
    Ok(OperatorCategory {
        colours,
        tuple_bound,
        grade_bound,
        objects,
        obj_index,
        homs,
        ids: id_ids,
        backend: Backend::Table(table),
    })
}

// ---- cocartesian morphisms and the pointed-free conditions ------------------

/// Whether `f` is cocartesian, by enumeration: for every object ē and every
/// span χ out of f's target with both χ and span(f)·χ within the grade
/// bound, post-composition with f must biject morphisms over χ onto the
/// morphisms over span(f)·χ.
pub fn is_cocartesian(cat: &OperatorCategory, f: MorId) -> bool {
    let fd_span = cat.mor(f).span.clone();
    for e in 0..cat.num_objects() {
        for chi in crate::finspan::enumerate_spans(
            cat.object(f.1).len(),
            cat.object(e).len(),
            cat.grade_bound(),
        ) {
            let Ok(psi) = fd_span.compose(&chi) else { continue };
            if psi.total() > cat.grade_bound() {
                continue;
            }
            let over_chi = cat.morphisms_over(f.1, e, &chi);
            let over_psi = cat.morphisms_over(f.0, e, &psi);
            let mut hit = BTreeSet::new();
            let mut ok = true;
            for g in over_chi {
                match cat.compose(f, g) {
                    Ok(h) => {
                        if cat.mor(h).span != psi || !hit.insert(h) {
                            ok = false; // landed wrong, or not injective
                            break;
                        }
                    }
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok || hit.len() != over_psi.len() {
                return false;
            }
        }
    }
    true
}

/// An inert morphism: one over an inert span that is cocartesian.
pub fn is_inert_morphism(cat: &OperatorCategory, f: MorId) -> bool {
    cat.mor(f).span.is_inert() && is_cocartesian(cat, f)
}

/// Cocartesian morphisms out of `src_obj` lying over `span`, to any target
/// object, in deterministic order.
pub fn cocartesian_over(cat: &OperatorCategory, src_obj: usize, span: &Span) -> Vec<MorId> {
    let mut out = Vec::new();
    for t in 0..cat.num_objects() {
        if cat.object(t).len() != span.cod() {
            continue;
        }
        for m in cat.morphisms_over(src_obj, t, span) {
            if is_cocartesian(cat, m) {
                out.push(m);
            }
        }
    }
    out
}

/// Whether the cone of morphisms `lifts[i]: c̄ → (some singleton)` exhibits
/// its target family as the product of c̄'s components: post-composition
/// must biject Hom(ē, c̄) onto the tuples of total grade ≤ the bound, for
/// every ē.
pub fn cone_exhibits_product(cat: &OperatorCategory, c: usize, lifts: &[MorId]) -> bool {
    let n = cat.object(c).len();
    if lifts.len() != n || lifts.iter().any(|&l| l.0 != c || cat.object(l.1).len() != 1) {
        return false;
    }
    for e in 0..cat.num_objects() {
        let mut images: BTreeSet<Vec<MorId>> = BTreeSet::new();
        let mut total = 0usize;
        let mut ok = true;
        for h in cat.morphisms(e, c) {
            let mut tuple = Vec::with_capacity(n);
            for &l in lifts {
                match cat.compose(h, l) {
                    Ok(g) => tuple.push(g),
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok || !images.insert(tuple) {
                return false; // composition failed or map not injective
            }
            total += 1;
        }
        // count tuples within the grade window
        let mut expected = 0usize;
        let mut stack: Vec<(usize, usize, Vec<MorId>)> = vec![(0, 0, Vec::new())];
        while let Some((i, used, tuple)) = stack.pop() {
            if i == n {
                expected += 1;
                if !images.contains(&tuple) {
                    return false; // not surjective onto the window
                }
                continue;
            }
            for g in cat.morphisms(e, lifts[i].1) {
                let gr = cat.grade(g);
                if used + gr <= cat.grade_bound() {
                    let mut t2 = tuple.clone();
                    t2.push(g);
                    stack.push((i + 1, used + gr, t2));
                }
            }
        }
        if total != expected {
            return false;
        }
    }
    true
}

/// Report for the three pointed-free conditions.
#[derive(Clone, Debug)]
pub struct SpfReport {
    pub cocartesian_lift_failures: Vec<String>,
    pub product_failures: Vec<String>,
    pub surjectivity_failures: Vec<String>,
}

impl SpfReport {
    pub fn passes(&self) -> bool {
        self.cocartesian_lift_failures.is_empty()
            && self.product_failures.is_empty()
            && self.surjectivity_failures.is_empty()
    }
}

/// Check the three conditions that make a category of operators: (1′) every
/// inert span out of an object admits a cocartesian lift, (2′) cocartesian
/// lifts of the single-target inert spans exhibit products, and (3′) every
/// colour tuple within the bound occurs as an object.
pub fn check_spf_conditions(cat: &OperatorCategory) -> SpfReport {
    let mut r = SpfReport {
        cocartesian_lift_failures: Vec::new(),
        product_failures: Vec::new(),
        surjectivity_failures: Vec::new(),
    };
    // (3′) all tuples within bound occur
    let k = cat.colours().len();
    let mut want: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..=cat.tuple_bound() {
        let mut next = Vec::new();
        for t in &stack {
            if t.len() <= cat.tuple_bound() {
                want.insert(t.clone());
            }
            if t.len() < cat.tuple_bound() {
                for c in 0..k {
                    let mut t2 = t.clone();
                    t2.push(c);
                    next.push(t2);
                }
            }
        }
        stack = next;
    }
    for tuple in &want {
        if cat.object_index(tuple).is_none() {
            r.surjectivity_failures
                .push(format!("missing object {:?}", tuple));
        }
    }
    // (1′) inert spans admit cocartesian lifts
    for c in 0..cat.num_objects() {
        let n = cat.object(c).len();
        for t_len in 0..=cat.tuple_bound().min(cat.grade_bound()) {
            for u in crate::finspan::enumerate_maps(t_len, n) {
                let span = Span::inert_from_reverse(&u);
                if cocartesian_over(cat, c, &span).is_empty() {
                    r.cocartesian_lift_failures.push(format!(
                        "object {:?} has no cocartesian lift over the inert span of {:?}",
                        cat.object(c),
                        u.table()
                    ));
                }
            }
        }
    }
    // (2′) the single-target lifts exhibit products
    for c in 0..cat.num_objects() {
        let n = cat.object(c).len();
        let mut lifts = Vec::with_capacity(n);
        let mut missing = false;
        for i in 0..n {
            let span = rho_inert(n, i).expect("rho span");
            match cocartesian_over(cat, c, &span).first() {
                Some(&l) => lifts.push(l),
                None => {
                    missing = true;
                    break;
                }
            }
        }
        if missing {
            r.product_failures.push(format!(
                "object {:?} is missing a single-target cocartesian lift",
                cat.object(c)
            ));
            continue;
        }
        if !cone_exhibits_product(cat, c, &lifts) {
            r.product_failures.push(format!(
                "cocartesian lifts of object {:?} do not exhibit it as a product",
                cat.object(c)
            ));
        }
    }
    r
}

/// Both sides of the inert characterization for `f`: the left is "inert
/// span and cocartesian"; the right is "for every target position, every
/// cocartesian single-target lift of the target post-composes with f to an
/// inert morphism". The suites assert these agree.
pub fn check_inert_char(cat: &OperatorCategory, f: MorId) -> (bool, bool) {
    let lhs = is_inert_morphism(cat, f);
    let n = cat.object(f.1).len();
    let mut rhs = cat.mor(f).span.is_inert();
    'outer: for i in 0..n {
        let span = rho_inert(n, i).expect("rho span");
        for l in cocartesian_over(cat, f.1, &span) {
            match cat.compose(f, l) {
                Ok(c) => {
                    if !is_inert_morphism(cat, c) {
                        rhs = false;
                        break 'outer;
                    }
                }
                Err(_) => {
                    rhs = false;
                    break 'outer;
                }
            }
        }
    }
    (lhs, rhs)
}

// ---- functors between operator categories -----------------------------------

/// A span-preserving functor: objects map to objects of the same length,
/// morphisms map within matching hom sets keeping the underlying span.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanFunctor {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<Vec<Vec<usize>>>,
}

impl SpanFunctor {
    pub fn apply(&self, m: MorId) -> MorId {
        (
            self.obj_map[m.0],
            self.obj_map[m.1],
            self.mor_map[m.0][m.1][m.2],
        )
    }
}

/// Every violated functor condition: object lengths, span preservation,
/// identities, and composition.
pub fn validate_functor(
    src: &OperatorCategory,
    tgt: &OperatorCategory,
    f: &SpanFunctor,
) -> Vec<String> {
    let mut report = Vec::new();
    if f.obj_map.len() != src.num_objects() {
        return vec!["object map has the wrong length".into()];
    }
    for (x, &y) in f.obj_map.iter().enumerate() {
        if y >= tgt.num_objects() || tgt.object(y).len() != src.object(x).len() {
            report.push(format!("object {:?} maps to a different length", src.object(x)));
        }
    }
    if !report.is_empty() {
        return report;
    }
    for m in src.all_morphisms() {
        let i = f.mor_map[m.0][m.1].get(m.2).copied();
        let Some(i) = i else {
            report.push(format!("morphism {:?} has no image", m));
            continue;
        };
        if i >= tgt.hom_size(f.obj_map[m.0], f.obj_map[m.1]) {
            report.push(format!("morphism {:?} maps outside the target hom", m));
            continue;
        }
        if tgt.mor(f.apply(m)).span != src.mor(m).span {
            report.push(format!("morphism {:?} does not keep its span", m));
        }
    }
    if !report.is_empty() {
        return report;
    }
    for x in 0..src.num_objects() {
        if f.apply(src.identity(x)) != tgt.identity(f.obj_map[x]) {
            report.push(format!("identity of object {x} is not preserved"));
        }
    }
    for a in src.all_morphisms() {
        for t in 0..src.num_objects() {
            for b in src.morphisms(a.1, t) {
                let Ok(ab) = src.compose(a, b) else { continue };
                match tgt.compose(f.apply(a), f.apply(b)) {
                    Ok(img) if img == f.apply(ab) => {}
                    _ => report.push(format!(
                        "composition of {:?} and {:?} is not preserved",
                        a, b
                    )),
                }
            }
        }
    }
    report
}

/// All span-preserving functors src → tgt, by backtracking with eager
/// composition checks. Hom indices are unchanged by table materialization,
/// so the functors found here apply to the original categories.
pub fn enumerate_functors(src: &OperatorCategory, tgt: &OperatorCategory) -> Vec<SpanFunctor> {
    let src_table = src.to_table();
    let src = src_table.as_ref().unwrap_or(src);
    let tgt_table = tgt.to_table();
    let tgt = tgt_table.as_ref().unwrap_or(tgt);
    let n = src.num_objects();
    let mut out = Vec::new();
    let mut obj_map = vec![0usize; n];
    fn assign_objects(
        src: &OperatorCategory,
        tgt: &OperatorCategory,
        obj_map: &mut Vec<usize>,
        x: usize,
        out: &mut Vec<SpanFunctor>,
    ) {
        if x == src.num_objects() {
            assign_morphisms(src, tgt, obj_map, out);
            return;
        }
        for y in 0..tgt.num_objects() {
            if tgt.object(y).len() == src.object(x).len() {
                obj_map[x] = y;
                assign_objects(src, tgt, obj_map, x + 1, out);
            }
        }
    }
    fn assign_morphisms(
        src: &OperatorCategory,
        tgt: &OperatorCategory,
        obj_map: &[usize],
        out: &mut Vec<SpanFunctor>,
    ) {
        let mors: Vec<MorId> = src.all_morphisms().collect();
        let mut images: HashMap<MorId, MorId> = HashMap::new();
        // identities are forced
        for x in 0..src.num_objects() {
            images.insert(src.identity(x), tgt.identity(obj_map[x]));
        }
        fn consistent(
            src: &OperatorCategory,
            tgt: &OperatorCategory,
            images: &HashMap<MorId, MorId>,
            m: MorId,
        ) -> bool {
            let check = |a: MorId, b: MorId| -> bool {
                let (Some(&fa), Some(&fb)) = (images.get(&a), images.get(&b)) else {
                    return true;
                };
                match src.compose(a, b) {
                    Ok(c) => match images.get(&c) {
                        Some(&fc) => tgt.compose(fa, fb).ok() == Some(fc),
                        None => tgt.compose(fa, fb).is_ok(),
                    },
                    Err(_) => true,
                }
            };
            let keys: Vec<MorId> = images.keys().copied().collect();
            for &a in &keys {
                if a.1 == m.0 && !check(a, m) {
                    return false;
                }
                if m.1 == a.0 && !check(m, a) {
                    return false;
                }
                // m as a freshly known composite value
                for &b in &keys {
                    if a.1 == b.0 {
                        if let Ok(c) = src.compose(a, b) {
                            if c == m {
                                if let (Some(&fa), Some(&fb)) = (images.get(&a), images.get(&b)) {
                                    if tgt.compose(fa, fb).ok() != Some(images[&m]) {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            true
        }
        fn dfs(
            src: &OperatorCategory,
            tgt: &OperatorCategory,
            obj_map: &[usize],
            mors: &[MorId],
            pos: usize,
            images: &mut HashMap<MorId, MorId>,
            out: &mut Vec<SpanFunctor>,
        ) {
            if pos == mors.len() {
                let mut mor_map = vec![vec![Vec::new(); src.num_objects()]; src.num_objects()];
                for s in 0..src.num_objects() {
                    for t in 0..src.num_objects() {
                        mor_map[s][t] = (0..src.hom_size(s, t))
                            .map(|i| images[&(s, t, i)].2)
                            .collect();
                    }
                }
                let f = SpanFunctor {
                    obj_map: obj_map.to_vec(),
                    mor_map,
                };
                if validate_functor(src, tgt, &f).is_empty() {
                    out.push(f);
                }
                return;
            }
            let m = mors[pos];
            if images.contains_key(&m) {
                dfs(src, tgt, obj_map, mors, pos + 1, images, out);
                return;
            }
            let span = &src.mor(m).span;
            for cand in tgt.morphisms_over(obj_map[m.0], obj_map[m.1], span) {
                images.insert(m, cand);
                if consistent(src, tgt, images, m) {
                    dfs(src, tgt, obj_map, mors, pos + 1, images, out);
                }
                images.remove(&m);
            }
        }
        dfs(src, tgt, obj_map, &mors, 0, &mut images, out);
    }
    assign_objects(src, tgt, &mut obj_map, 0, &mut out);
    out
}

/// Whether the functor sends every inert morphism to an inert morphism.
pub fn preserves_inerts(
    src: &OperatorCategory,
    tgt: &OperatorCategory,
    f: &SpanFunctor,
) -> bool {
    src.all_morphisms()
        .filter(|&m| is_inert_morphism(src, m))
        .all(|m| is_inert_morphism(tgt, f.apply(m)))
}

/// Whether the functor sends every product-exhibiting cone of single-target
/// morphisms to a product-exhibiting cone.
pub fn preserves_products(
    src: &OperatorCategory,
    tgt: &OperatorCategory,
    f: &SpanFunctor,
) -> bool {
    for c in 0..src.num_objects() {
        let n = src.object(c).len();
        // candidate cones: any family over the single-target inert spans
        let mut candidates: Vec<Vec<MorId>> = vec![Vec::new()];
        for i in 0..n {
            let span = rho_inert(n, i).expect("rho span");
            let mut next = Vec::new();
            let mut over = Vec::new();
            for t in 0..src.num_objects() {
                if src.object(t).len() == 1 {
                    over.extend(src.morphisms_over(c, t, &span));
                }
            }
            for prefix in &candidates {
                for &l in &over {
                    let mut v = prefix.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            candidates = next;
        }
        for cone in candidates {
            if cone_exhibits_product(src, c, &cone) {
                let image: Vec<MorId> = cone.iter().map(|&l| f.apply(l)).collect();
                if !cone_exhibits_product(tgt, f.obj_map[c], &image) {
                    return false;
                }
            }
        }
    }
    true
}

/// (preserves inert morphisms, preserves product cones) for one functor.
pub fn check_functor_products_vs_inerts(
    src: &OperatorCategory,
    tgt: &OperatorCategory,
    f: &SpanFunctor,
) -> (bool, bool) {
    (preserves_inerts(src, tgt, f), preserves_products(src, tgt, f))
}

/// The functor of operator categories induced by an operad morphism:
/// colours map componentwise, operations through the operation map (then
/// re-canonicalized).
pub fn operad_morphism_functor(
    m: &OperadMorphism,
    tgt_operad: &ColouredOperad,
    src: &OperatorCategory,
    tgt: &OperatorCategory,
) -> Result<SpanFunctor, Error> {
    let mut obj_map = Vec::with_capacity(src.num_objects());
    for x in 0..src.num_objects() {
        let tuple: Vec<usize> = src.object(x).iter().map(|&c| m.colour_map[c]).collect();
        obj_map.push(
            tgt.object_index(&tuple)
                .ok_or_else(|| Error::input("image object missing in target"))?,
        );
    }
    let mut mor_map = vec![vec![Vec::new(); src.num_objects()]; src.num_objects()];
    for s in 0..src.num_objects() {
        for t in 0..src.num_objects() {
            for i in 0..src.hom_size(s, t) {
                let d = src.mor((s, t, i));
                let mut ops = Vec::with_capacity(d.ops.len());
                for (j, &op) in d.ops.iter().enumerate() {
                    ops.push(canonical_op(tgt_operad, &d.span, j, m.op_map[op])?);
                }
                let img = tgt
                    .find(obj_map[s], obj_map[t], &d.span, &ops)
                    .ok_or_else(|| Error::input("image morphism missing in target"))?;
                mor_map[s][t].push(img.2);
            }
        }
    }
    Ok(SpanFunctor { obj_map, mor_map })
}

// ---- set-valued functors and the monoid check --------------------------------

/// A functor to finite sets: a size per object and a map per morphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetFunctor {
    pub sizes: Vec<usize>,
    pub maps: Vec<Vec<Vec<FinMap>>>,
}

impl SetFunctor {
    pub fn map(&self, m: MorId) -> &FinMap {
        &self.maps[m.0][m.1][m.2]
    }
}

/// Every violated functoriality condition of a set-valued functor.
pub fn validate_set_functor(cat: &OperatorCategory, m: &SetFunctor) -> Vec<String> {
    let mut report = Vec::new();
    if m.sizes.len() != cat.num_objects() {
        return vec!["one size per object required".into()];
    }
    for s in 0..cat.num_objects() {
        for t in 0..cat.num_objects() {
            if m.maps[s][t].len() != cat.hom_size(s, t) {
                return vec![format!("hom ({s}, {t}) is not fully assigned")];
            }
            for (i, f) in m.maps[s][t].iter().enumerate() {
                if f.dom() != m.sizes[s] || f.cod() != m.sizes[t] {
                    report.push(format!("map of morphism {:?} has wrong endpoints", (s, t, i)));
                }
            }
        }
    }
    if !report.is_empty() {
        return report;
    }
    for x in 0..cat.num_objects() {
        if m.map(cat.identity(x)) != &FinMap::identity(m.sizes[x]) {
            report.push(format!("identity of object {x} does not act as identity"));
        }
    }
    for a in cat.all_morphisms() {
        for t in 0..cat.num_objects() {
            for b in cat.morphisms(a.1, t) {
                let Ok(ab) = cat.compose(a, b) else { continue };
                let composed = m.map(a).then(m.map(b)).expect("endpoint-checked");
                if &composed != m.map(ab) {
                    report.push(format!(
                        "functoriality fails at ({:?}, {:?})",
                        a, b
                    ));
                }
            }
        }
    }
    report
}

/// (Segal maps bijective, product cones preserved) for a set-valued
/// functor. Both sides use the first cocartesian lifts over the relevant
/// inert spans; missing lifts are an input error.
pub fn omonoid_check(cat: &OperatorCategory, m: &SetFunctor) -> Result<(bool, bool), Error> {
    // Segal: M(c̄) → ∏ᵢ M((cᵢ)) bijective for every object
    let mut is_monoid = true;
    'objects: for c in 0..cat.num_objects() {
        let n = cat.object(c).len();
        let mut lifts = Vec::with_capacity(n);
        for i in 0..n {
            let span = rho_inert(n, i)?;
            let l = cocartesian_over(cat, c, &span)
                .first()
                .copied()
                .ok_or_else(|| Error::input("missing cocartesian lift for the Segal map"))?;
            lifts.push(l);
        }
        let expected: usize = lifts.iter().map(|&l| m.sizes[l.1]).product();
        if m.sizes[c] != expected {
            is_monoid = false;
            continue;
        }
        let mut seen = BTreeSet::new();
        for x in 0..m.sizes[c] {
            let tuple: Vec<usize> = lifts.iter().map(|&l| m.map(l).apply(x)).collect();
            if !seen.insert(tuple) {
                is_monoid = false;
                continue 'objects;
            }
        }
    }
    // products: M(()) singleton and binary concatenations split
    let mut is_product_preserving = true;
    if let Some(empty) = cat.object_index(&[]) {
        if m.sizes[empty] != 1 {
            is_product_preserving = false;
        }
    }
    for a in 0..cat.num_objects() {
        for b in 0..cat.num_objects() {
            let concat: Vec<usize> = cat
                .object(a)
                .iter()
                .chain(cat.object(b).iter())
                .copied()
                .collect();
            let Some(c) = cat.object_index(&concat) else { continue };
            let (_, pa, pb) = product_cone(cat.object(a).len(), cat.object(b).len());
            let la = first_cocartesian_to(cat, c, a, &pa)?;
            let lb = first_cocartesian_to(cat, c, b, &pb)?;
            if m.sizes[c] != m.sizes[a] * m.sizes[b] {
                is_product_preserving = false;
                continue;
            }
            let mut seen = BTreeSet::new();
            for x in 0..m.sizes[c] {
                let pair = (m.map(la).apply(x), m.map(lb).apply(x));
                if !seen.insert(pair) {
                    is_product_preserving = false;
                    break;
                }
            }
        }
    }
    Ok((is_monoid, is_product_preserving))
}

fn first_cocartesian_to(
    cat: &OperatorCategory,
    src: usize,
    tgt: usize,
    span: &Span,
) -> Result<MorId, Error> {
    cat.morphisms_over(src, tgt, span)
        .into_iter()
        .find(|&l| is_cocartesian(cat, l))
        .ok_or_else(|| Error::input("missing cocartesian projection"))
}

/// The set functor of a commutative monoid on values 0..n: an object of
/// length k carries the k-fold power, and a morphism multiplies each source
/// value into every target slot according to its span multiplicity.
pub fn set_functor_from_comm_monoid(
    cat: &OperatorCategory,
    mult: &[Vec<usize>],
    unit: usize,
) -> Result<SetFunctor, Error> {
    let n = mult.len();
    if unit >= n || mult.iter().any(|r| r.len() != n) {
        return Err(Error::input("malformed monoid table"));
    }
    let sizes: Vec<usize> = (0..cat.num_objects())
        .map(|x| n.pow(cat.object(x).len() as u32))
        .collect();
    // tuples are big-endian: position 0 is the most significant digit
    let decode = |mut v: usize, len: usize| -> Vec<usize> {
        let mut t = vec![0; len];
        for i in (0..len).rev() {
            t[i] = v % n;
            v /= n;
        }
        t
    };
    let encode = |t: &[usize]| -> usize { t.iter().fold(0, |acc, &d| acc * n + d) };
    let mut maps = vec![vec![Vec::new(); cat.num_objects()]; cat.num_objects()];
    for s in 0..cat.num_objects() {
        for t in 0..cat.num_objects() {
            for i in 0..cat.hom_size(s, t) {
                let span = &cat.mor((s, t, i)).span;
                let mut table = Vec::with_capacity(sizes[s]);
                for x in 0..sizes[s] {
                    let src_tuple = decode(x, cat.object(s).len());
                    let mut tgt_tuple = Vec::with_capacity(cat.object(t).len());
                    for j in 0..cat.object(t).len() {
                        let mut acc = unit;
                        for (idx, &v) in src_tuple.iter().enumerate() {
                            for _ in 0..span.entry(idx, j) {
                                acc = mult[acc][v];
                            }
                        }
                        tgt_tuple.push(acc);
                    }
                    table.push(encode(&tgt_tuple));
                }
                maps[s][t].push(FinMap::new(sizes[s], sizes[t], table)?);
            }
        }
    }
    Ok(SetFunctor { sizes, maps })
}

/// All set-valued functors with object sizes ≤ `max_size`, by backtracking
/// with eager functoriality forcing. Morphisms are visited so that one
/// expressible as a composite of earlier ones comes after its factors and
/// is forced rather than guessed.
pub fn enumerate_set_functors(cat: &OperatorCategory, max_size: usize) -> Vec<SetFunctor> {
    let cat_table = cat.to_table();
    let cat = cat_table.as_ref().unwrap_or(cat);
    let nobj = cat.num_objects();
    let mut ordered: Vec<MorId> = (0..nobj).map(|x| cat.identity(x)).collect();
    let mut remaining: BTreeSet<MorId> = cat
        .all_morphisms()
        .filter(|m| !ordered.contains(m))
        .collect();
    while !remaining.is_empty() {
        let forced: Vec<MorId> = remaining
            .iter()
            .copied()
            .filter(|&m| {
                ordered.iter().any(|&a| {
                    ordered
                        .iter()
                        .any(|&b| a.1 == b.0 && cat.compose(a, b).ok() == Some(m))
                })
            })
            .collect();
        if forced.is_empty() {
            let next = *remaining.iter().next().unwrap();
            remaining.remove(&next);
            ordered.push(next);
        } else {
            for m in forced {
                remaining.remove(&m);
                ordered.push(m);
            }
        }
    }
    let mors = ordered;
    let mut out = Vec::new();
    let mut sizes = vec![0usize; nobj];
    fn dfs_sizes(
        cat: &OperatorCategory,
        mors: &[MorId],
        sizes: &mut Vec<usize>,
        x: usize,
        max_size: usize,
        out: &mut Vec<SetFunctor>,
    ) {
        if x == sizes.len() {
            let mut images: HashMap<MorId, FinMap> = HashMap::new();
            for o in 0..cat.num_objects() {
                images.insert(cat.identity(o), FinMap::identity(sizes[o]));
            }
            dfs_maps(cat, mors, sizes, 0, &mut images, out);
            return;
        }
        for s in 0..=max_size {
            sizes[x] = s;
            dfs_sizes(cat, mors, sizes, x + 1, max_size, out);
        }
    }
    fn consistent(
        cat: &OperatorCategory,
        images: &HashMap<MorId, FinMap>,
        m: MorId,
    ) -> bool {
        let keys: Vec<MorId> = images.keys().copied().collect();
        for &a in &keys {
            for &b in &keys {
                if a.1 != b.0 {
                    continue;
                }
                let Ok(c) = cat.compose(a, b) else { continue };
                if let Some(fc) = images.get(&c) {
                    if c == m || a == m || b == m {
                        let composed = images[&a].then(&images[&b]).expect("sizes match");
                        if &composed != fc {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn dfs_maps(
        cat: &OperatorCategory,
        mors: &[MorId],
        sizes: &[usize],
        pos: usize,
        images: &mut HashMap<MorId, FinMap>,
        out: &mut Vec<SetFunctor>,
    ) {
        if pos == mors.len() {
            let mut maps = vec![vec![Vec::new(); cat.num_objects()]; cat.num_objects()];
            for s in 0..cat.num_objects() {
                for t in 0..cat.num_objects() {
                    maps[s][t] = (0..cat.hom_size(s, t))
                        .map(|i| images[&(s, t, i)].clone())
                        .collect();
                }
            }
            let f = SetFunctor {
                sizes: sizes.to_vec(),
                maps,
            };
            if validate_set_functor(cat, &f).is_empty() {
                out.push(f);
            }
            return;
        }
        let m = mors[pos];
        if images.contains_key(&m) {
            dfs_maps(cat, mors, sizes, pos + 1, images, out);
            return;
        }
        // forcing: if m is a composite of two assigned morphisms, its value
        // is determined
        let mut forced: Option<FinMap> = None;
        let keys: Vec<MorId> = images.keys().copied().collect();
        for &a in &keys {
            for &b in &keys {
                if a.1 != b.0 {
                    continue;
                }
                if cat.compose(a, b).ok() == Some(m) {
                    forced = Some(images[&a].then(&images[&b]).expect("sizes match"));
                    break;
                }
            }
            if forced.is_some() {
                break;
            }
        }
        let candidates = match forced {
            Some(f) => vec![f],
            None => crate::finspan::enumerate_maps(sizes[m.0], sizes[m.1]),
        };
        for cand in candidates {
            images.insert(m, cand);
            if consistent(cat, images, m) {
                dfs_maps(cat, mors, sizes, pos + 1, images, out);
            }
            images.remove(&m);
        }
    }
    dfs_sizes(cat, &mors, &mut sizes, 0, max_size, &mut out);
    out
}

// ---- hand-built fixtures ------------------------------------------------------

/// The full subcategory of the trivial operad's category of operators on
/// the one- and two-element tuples: two objects, eight morphisms, every
/// morphism over a reversed-map span.
pub fn pair_projection_category() -> Result<OperatorCategory, Error> {
    let o = crate::operad::trivial_operad(2)?;
    let k = category_of_operators(&o, 2, 2)?;
    let a = k.object_index(&[0]).expect("(c) exists");
    let b = k.object_index(&[0, 0]).expect("(c,c) exists");
    k.restrict_full(&[a, b])
}

/// The pair-projection category with each projection doubled by a
/// non-cocartesian twin: same objects and spans, but the two-element object
/// has four morphisms to the point over the two single-target inert spans.
/// Every cocartesian lift of the smaller category stops being cocartesian
/// here.
pub fn doubled_projection_category() -> Result<OperatorCategory, Error> {
    let span_id1 = Span::identity(1);
    let span_id2 = Span::identity(2);
    let span_mu = Span::from_matrix(vec![vec![1, 1]])?;
    let span_l0 = Span::from_matrix(vec![vec![1], vec![0]])?;
    let span_l1 = Span::from_matrix(vec![vec![0], vec![1]])?;
    let span_swap = Span::from_matrix(vec![vec![0, 1], vec![1, 0]])?;
    let span_n0 = Span::from_matrix(vec![vec![1, 1], vec![0, 0]])?;
    let span_n1 = Span::from_matrix(vec![vec![0, 0], vec![1, 1]])?;
    let m = |name: &str, src: usize, tgt: usize, span: &Span| TableMor {
        name: name.into(),
        src,
        tgt,
        span: span.clone(),
    };
    // objects: 0 = (c), 1 = (c,c)
    let morphisms = vec![
        m("id_a", 0, 0, &span_id1),
        m("mu", 0, 1, &span_mu),
        m("l0", 1, 0, &span_l0),
        m("l1", 1, 0, &span_l1),
        m("b0", 1, 0, &span_l0),
        m("b1", 1, 0, &span_l1),
        m("id_b", 1, 1, &span_id2),
        m("xi", 1, 1, &span_swap),
        m("n_l0", 1, 1, &span_n0),
        m("n_l1", 1, 1, &span_n1),
        m("n_b0", 1, 1, &span_n0),
        m("n_b1", 1, 1, &span_n1),
    ];
    // morphisms B → A carry a position bit and a flavour; composition
    // normalizes through: mu absorbs any B → A back to id_a, xi flips the
    // position bit, and n_x = x;mu for each B → A morphism x.
    let projections = ["l0", "l1", "b0", "b1"];
    let flip = |x: &str| -> String {
        match x {
            "l0" => "l1".into(),
            "l1" => "l0".into(),
            "b0" => "b1".into(),
            "b1" => "b0".into(),
            other => other.into(),
        }
    };
    let mut comp: Vec<(String, String, String)> = Vec::new();
    let add = |comp: &mut Vec<(String, String, String)>, f: &str, g: &str, h: &str| {
        comp.push((f.into(), g.into(), h.into()));
    };
    add(&mut comp, "id_a", "id_a", "id_a");
    add(&mut comp, "id_a", "mu", "mu");
    add(&mut comp, "mu", "id_b", "mu");
    add(&mut comp, "mu", "xi", "mu");
    for x in projections {
        // mu absorbs: A → B → A is the identity
        add(&mut comp, "mu", x, "id_a");
        add(&mut comp, "mu", &format!("n_{x}"), "mu");
        // x;mu is the through morphism
        add(&mut comp, x, "mu", &format!("n_{x}"));
        add(&mut comp, x, "id_a", x);
        add(&mut comp, "id_b", x, x);
        add(&mut comp, "xi", x, &flip(x));
        add(&mut comp, "id_b", &format!("n_{x}"), &format!("n_{x}"));
        add(&mut comp, "xi", &format!("n_{x}"), &format!("n_{}", flip(x)));
        add(&mut comp, &format!("n_{x}"), "id_b", &format!("n_{x}"));
        add(&mut comp, &format!("n_{x}"), "xi", &format!("n_{x}"));
        for y in projections {
            // (x;mu);y = x;(mu;y) = x
            add(&mut comp, &format!("n_{x}"), y, x);
            add(&mut comp, &format!("n_{x}"), &format!("n_{y}"), &format!("n_{x}"));
        }
    }
    add(&mut comp, "id_b", "id_b", "id_b");
    add(&mut comp, "id_b", "xi", "xi");
    add(&mut comp, "xi", "id_b", "xi");
    add(&mut comp, "xi", "xi", "id_b");
    table_category(
        vec!["c".into()],
        2,
        2,
        vec![vec![0], vec![0, 0]],
        morphisms,
        comp,
        vec!["id_a".into(), "id_b".into()],
    )
}
