//! Graded algebraic theories extracted from an operad's free-algebra monad.
//!
//! Objects are colour tuples and a hom `x̄ ⊸ ȳ` is stored in Kleisli form:
//! one canonical term per position of `x̄`, over the indicator family of
//! `ȳ`. The theory proper is the *opposite* of this data — the projection
//! `x̄ ⇒ (xᵢ)` is stored as the single-unit hom `(xᵢ) ⊸ x̄` — and the
//! consumers that need the categorical direction (models, the bridge back
//! to the category of operators) take that opposite explicitly.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::finspan::{enumerate_maps, FinMap, Span};
use crate::monad::{canonical_term, free_algebra, unit_term, Family, FlatTerm};
use crate::opcat::{canonical_op, category_of_operators, MorData};
use crate::operad::{all_perms, collapse_to_comm, ColouredOperad, OpId, OperadMorphism};

// ---- tuples and their indicator families ----------------------------------------

/// Indicator family of a colour tuple: one generator per position, grouped
/// by colour.
pub fn tuple_family(num_colours: usize, tuple: &[usize]) -> Family {
    let mut sizes = vec![0; num_colours];
    for &c in tuple {
        sizes[c] += 1;
    }
    Family::new(sizes)
}

/// Global position of the `local`-th element of `colour` in the tuple.
pub fn position_of_local(tuple: &[usize], colour: usize, local: usize) -> usize {
    let mut seen = 0;
    for (j, &c) in tuple.iter().enumerate() {
        if c == colour {
            if seen == local {
                return j;
            }
            seen += 1;
        }
    }
    panic!("no element {local} of colour {colour} in {tuple:?}");
}

/// Rank of position `pos` among the positions of its own colour.
pub fn local_of_position(tuple: &[usize], pos: usize) -> usize {
    let c = tuple[pos];
    tuple[..pos].iter().filter(|&&x| x == c).count()
}

// ---- homs in Kleisli form --------------------------------------------------------

/// A hom `src ⊸ tgt`: `terms[i]` is the canonical term over the indicator
/// family of `tgt` at the colour of source position `i`. Term arguments are
/// local indices within their colour's block of that family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TheoryHom {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub terms: Vec<FlatTerm>,
}

impl TheoryHom {
    /// Total grade: the sum of the terms' arities.
    pub fn grade(&self) -> usize {
        self.terms.iter().map(|t| t.args.len()).sum()
    }
}

pub fn identity_hom(o: &ColouredOperad, tuple: &[usize]) -> TheoryHom {
    let terms = tuple
        .iter()
        .enumerate()
        .map(|(i, &c)| unit_term(o, c, local_of_position(tuple, i)))
        .collect();
    TheoryHom {
        src: tuple.to_vec(),
        tgt: tuple.to_vec(),
        terms,
    }
}

/// Multiplicity matrix of a hom: entry `(i, j)` counts how often target
/// position `j` appears among the arguments of the `i`-th term.
pub fn hom_matrix(o: &ColouredOperad, h: &TheoryHom) -> Vec<Vec<usize>> {
    let mut m = vec![vec![0; h.tgt.len()]; h.src.len()];
    for (i, t) in h.terms.iter().enumerate() {
        let inputs = &o.op(t.op).inputs;
        for (k, &a) in t.args.iter().enumerate() {
            m[i][position_of_local(&h.tgt, inputs[k], a)] += 1;
        }
    }
    m
}

/// All homs `xs ⊸ ys` of total grade at most `d`, sorted by (grade, terms).
pub fn kleisli_hom(
    o: &ColouredOperad,
    xs: &[usize],
    ys: &[usize],
    d: usize,
) -> Result<Vec<TheoryHom>, Error> {
    let fam = tuple_family(o.colours().len(), ys);
    let ta = free_algebra(o, &fam, d)?;
    let choices: Vec<Vec<FlatTerm>> = (0..o.colours().len())
        .map(|c| ta.flatten(c).into_iter().cloned().collect())
        .collect();
    let mut out = Vec::new();
    let mut picked: Vec<FlatTerm> = Vec::with_capacity(xs.len());
    fill_homs(xs, ys, &choices, d, &mut picked, &mut out);
    out.sort_by_key(|h| (h.grade(), h.terms.clone()));
    Ok(out)
}

fn fill_homs(
    xs: &[usize],
    ys: &[usize],
    choices: &[Vec<FlatTerm>],
    budget: usize,
    picked: &mut Vec<FlatTerm>,
    out: &mut Vec<TheoryHom>,
) {
    if picked.len() == xs.len() {
        out.push(TheoryHom {
            src: xs.to_vec(),
            tgt: ys.to_vec(),
            terms: picked.clone(),
        });
        return;
    }
    for t in &choices[xs[picked.len()]] {
        if t.args.len() > budget {
            continue;
        }
        picked.push(t.clone());
        fill_homs(xs, ys, choices, budget - t.args.len(), picked, out);
        picked.pop();
    }
}

/// Kleisli composition: substitute the terms of `b` for the generators
/// appearing in the terms of `a`. Errors when the tuples do not line up,
/// when the total grade leaves `grade_bound`, or when a single composite
/// operation leaves the operad's arity bound.
pub fn kleisli_compose(
    o: &ColouredOperad,
    a: &TheoryHom,
    b: &TheoryHom,
    grade_bound: usize,
) -> Result<TheoryHom, Error> {
    if a.tgt != b.src {
        return Err(Error::input("homs are not composable: tuples differ"));
    }
    let total: usize = a
        .terms
        .iter()
        .map(|t| {
            let inputs = &o.op(t.op).inputs;
            t.args
                .iter()
                .enumerate()
                .map(|(k, &x)| b.terms[position_of_local(&a.tgt, inputs[k], x)].args.len())
                .sum::<usize>()
        })
        .sum();
    if total > grade_bound {
        return Err(Error::overflow(format!(
            "composite grade {total} exceeds bound {grade_bound}"
        )));
    }
    let mut terms = Vec::with_capacity(a.terms.len());
    for t in &a.terms {
        let inputs = &o.op(t.op).inputs;
        let mut inner_ops = Vec::with_capacity(t.args.len());
        let mut args = Vec::new();
        for (k, &x) in t.args.iter().enumerate() {
            let u = &b.terms[position_of_local(&a.tgt, inputs[k], x)];
            inner_ops.push(u.op);
            args.extend_from_slice(&u.args);
        }
        let op = o.compose(t.op, &inner_ops)?;
        terms.push(canonical_term(o, &FlatTerm { op, args })?);
    }
    Ok(TheoryHom {
        src: a.src.clone(),
        tgt: b.tgt.clone(),
        terms,
    })
}

// ---- the theory of an operad ------------------------------------------------------

/// A graded theory: colour-tuple objects, Kleisli homs of bounded total
/// grade, and the pinning of each colour to its singleton tuple. Homs are
/// stored as `homs[src][tgt]` in the Kleisli direction.
#[derive(Clone, Debug)]
pub struct LawvereTheory {
    operad: ColouredOperad,
    tuple_bound: usize,
    grade_bound: usize,
    objects: Vec<Vec<usize>>,
    obj_index: BTreeMap<Vec<usize>, usize>,
    homs: Vec<Vec<Vec<TheoryHom>>>,
    ids: Vec<usize>,
    pinning: Vec<usize>,
}

pub fn theory_of(
    o: &ColouredOperad,
    tuple_bound: usize,
    grade_bound: usize,
) -> Result<LawvereTheory, Error> {
    if tuple_bound > grade_bound {
        return Err(Error::input(
            "tuple bound exceeds grade bound: long tuples would lose their identities",
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
        .map(|(i, t)| (t.clone(), i))
        .collect();
    // one free algebra per target object, shared across all sources
    let mut choices_per_tgt = Vec::with_capacity(objects.len());
    for tgt in &objects {
        let ta = free_algebra(o, &tuple_family(k, tgt), grade_bound)?;
        let choices: Vec<Vec<FlatTerm>> = (0..k)
            .map(|c| ta.flatten(c).into_iter().cloned().collect())
            .collect();
        choices_per_tgt.push(choices);
    }
    let mut homs = vec![vec![Vec::new(); objects.len()]; objects.len()];
    for (s, src) in objects.iter().enumerate() {
        for (t, tgt) in objects.iter().enumerate() {
            let mut set = Vec::new();
            let mut picked = Vec::with_capacity(src.len());
            fill_homs(src, tgt, &choices_per_tgt[t], grade_bound, &mut picked, &mut set);
            set.sort_by_key(|h| (h.grade(), h.terms.clone()));
            homs[s][t] = set;
        }
    }
    let mut ids = Vec::with_capacity(objects.len());
    for (x, tuple) in objects.iter().enumerate() {
        let id = identity_hom(o, tuple);
        let idx = homs[x][x]
            .iter()
            .position(|h| *h == id)
            .ok_or_else(|| Error::input("identity hom not generated"))?;
        ids.push(idx);
    }
    let pinning = (0..k)
        .map(|c| obj_index[&vec![c]])
        .collect();
    Ok(LawvereTheory {
        operad: o.clone(),
        tuple_bound,
        grade_bound,
        objects,
        obj_index,
        homs,
        ids,
        pinning,
    })
}

impl LawvereTheory {
    pub fn operad(&self) -> &ColouredOperad {
        &self.operad
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

    pub fn homs(&self, src: usize, tgt: usize) -> &[TheoryHom] {
        &self.homs[src][tgt]
    }

    pub fn hom_index(&self, src: usize, tgt: usize, h: &TheoryHom) -> Option<usize> {
        self.homs[src][tgt].iter().position(|x| x == h)
    }

    /// Index of the identity hom within `homs(x, x)`.
    pub fn identity(&self, x: usize) -> usize {
        self.ids[x]
    }

    /// Object index of the singleton tuple of each colour.
    pub fn pinning(&self) -> &[usize] {
        &self.pinning
    }

    /// Stored-direction composite of `homs(a, b)[i]` and `homs(b, c)[j]`;
    /// `None` when the composite is not representable within the window.
    pub fn compose(
        &self,
        a: usize,
        b: usize,
        c: usize,
        i: usize,
        j: usize,
    ) -> Result<Option<usize>, Error> {
        match kleisli_compose(
            &self.operad,
            &self.homs[a][b][i],
            &self.homs[b][c][j],
            self.grade_bound,
        ) {
            Ok(h) => Ok(Some(self.hom_index(a, c, &h).ok_or_else(|| {
                Error::input("composite hom not found in the theory")
            })?)),
            Err(Error::BoundOverflow(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Hom shapes, identities, unit laws, and windowed associativity,
    /// checked exhaustively. Quadratic-and-worse in hom-set sizes: meant
    /// for small bounds.
    pub fn validate(&self) -> Vec<String> {
        let mut report = Vec::new();
        let o = &self.operad;
        for (s, src) in self.objects.iter().enumerate() {
            for (t, tgt) in self.objects.iter().enumerate() {
                for h in &self.homs[s][t] {
                    if h.src != *src || h.tgt != *tgt {
                        report.push(format!("hom in slot ({s}, {t}) has tuples {:?} → {:?}", h.src, h.tgt));
                        continue;
                    }
                    if h.grade() > self.grade_bound {
                        report.push(format!("hom {h:?} exceeds the grade bound"));
                    }
                    for (i, term) in h.terms.iter().enumerate() {
                        if o.op(term.op).output != src[i] {
                            report.push(format!("term {i} of {h:?} has the wrong output colour"));
                        }
                        match canonical_term(o, term) {
                            Ok(c) if c == *term => {}
                            _ => report.push(format!("term {i} of {h:?} is not canonical")),
                        }
                    }
                }
                let mut sorted = self.homs[s][t].clone();
                sorted.sort_by_key(|h| (h.grade(), h.terms.clone()));
                sorted.dedup();
                if sorted != self.homs[s][t] {
                    report.push(format!("hom set ({s}, {t}) is not sorted and deduplicated"));
                }
            }
        }
        for x in 0..self.objects.len() {
            let id = &self.homs[x][x][self.ids[x]];
            if *id != identity_hom(o, &self.objects[x]) {
                report.push(format!("object {x} has a wrong identity index"));
            }
        }
        // unit laws and associativity within the window
        for a in 0..self.objects.len() {
            for b in 0..self.objects.len() {
                for (i, f) in self.homs[a][b].iter().enumerate() {
                    let left = self.compose(a, a, b, self.ids[a], i);
                    if left != Ok(Some(i)) {
                        report.push(format!("id ∘ hom {i}: ({a}, {b}) fails the unit law"));
                    }
                    let right = self.compose(a, b, b, i, self.ids[b]);
                    if right != Ok(Some(i)) {
                        report.push(format!("hom {i} ∘ id: ({a}, {b}) fails the unit law"));
                    }
                    let _ = f;
                }
            }
        }
        for a in 0..self.objects.len() {
            for b in 0..self.objects.len() {
                for c in 0..self.objects.len() {
                    for d in 0..self.objects.len() {
                        for i in 0..self.homs[a][b].len() {
                            for j in 0..self.homs[b][c].len() {
                                for l in 0..self.homs[c][d].len() {
                                    let ij = match self.compose(a, b, c, i, j) {
                                        Ok(v) => v,
                                        Err(e) => {
                                            report.push(format!("composition error: {e}"));
                                            continue;
                                        }
                                    };
                                    let jl = match self.compose(b, c, d, j, l) {
                                        Ok(v) => v,
                                        Err(e) => {
                                            report.push(format!("composition error: {e}"));
                                            continue;
                                        }
                                    };
                                    let lhs = match ij {
                                        Some(x) => self.compose(a, c, d, x, l).unwrap_or(None),
                                        None => None,
                                    };
                                    let rhs = match jl {
                                        Some(x) => self.compose(a, b, d, i, x).unwrap_or(None),
                                        None => None,
                                    };
                                    if let (Some(x), Some(y)) = (lhs, rhs) {
                                        if x != y {
                                            report.push(format!(
                                                "associativity fails at ({a}, {b}, {c}, {d}) homs ({i}, {j}, {l})"
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        report
    }
}

// ---- the inert/active factorization -----------------------------------------------

/// Every term is a unit: the hom is a tuple map.
pub fn is_inert_hom(o: &ColouredOperad, h: &TheoryHom) -> bool {
    h.terms.iter().all(|t| o.idents().contains(&t.op))
}

/// The arguments jointly hit every target position exactly once.
pub fn is_active_hom(o: &ColouredOperad, h: &TheoryHom) -> bool {
    let m = hom_matrix(o, h);
    (0..h.tgt.len()).all(|j| m.iter().map(|row| row[j]).sum::<usize>() == 1)
}

/// Factor `h` through the row-major middle tuple — for each source position
/// in turn, the target positions it consumes, in ascending order — as an
/// active hom followed by an inert one. Returns `(inert, active)` with
/// `h = kleisli_compose(active, inert)`; a tuple-map hom factors as
/// `(h, identity)`.
pub fn factor_theory(
    o: &ColouredOperad,
    h: &TheoryHom,
) -> Result<(TheoryHom, TheoryHom), Error> {
    let m = hom_matrix(o, h);
    let mut middle: Vec<usize> = Vec::new();
    let mut to_tgt: Vec<usize> = Vec::new();
    let mut start = vec![vec![0usize; h.tgt.len()]; h.src.len()];
    for i in 0..h.src.len() {
        for j in 0..h.tgt.len() {
            start[i][j] = middle.len();
            for _ in 0..m[i][j] {
                middle.push(h.tgt[j]);
                to_tgt.push(j);
            }
        }
    }
    let mut active_terms = Vec::with_capacity(h.terms.len());
    for (i, t) in h.terms.iter().enumerate() {
        let inputs = &o.op(t.op).inputs;
        let mut used: BTreeMap<usize, usize> = BTreeMap::new();
        let mut args = Vec::with_capacity(t.args.len());
        for (k, &x) in t.args.iter().enumerate() {
            let j = position_of_local(&h.tgt, inputs[k], x);
            let copy = used.entry(j).or_insert(0);
            let pos = start[i][j] + *copy;
            *copy += 1;
            args.push(local_of_position(&middle, pos));
        }
        active_terms.push(canonical_term(o, &FlatTerm { op: t.op, args })?);
    }
    let inert_terms = to_tgt
        .iter()
        .map(|&j| unit_term(o, h.tgt[j], local_of_position(&h.tgt, j)))
        .collect();
    let inert = TheoryHom {
        src: middle.clone(),
        tgt: h.tgt.clone(),
        terms: inert_terms,
    };
    let active = TheoryHom {
        src: h.src.clone(),
        tgt: middle,
        terms: active_terms,
    };
    Ok((inert, active))
}

// ---- theory morphisms --------------------------------------------------------------

/// A theory morphism induced by colour and operation maps: tuples map
/// componentwise, terms map operation-wise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoryMorphism {
    pub colour_map: Vec<usize>,
    pub op_map: Vec<OpId>,
}

pub fn theory_morphism_of(f: &OperadMorphism) -> TheoryMorphism {
    TheoryMorphism {
        colour_map: f.colour_map.clone(),
        op_map: f.op_map.clone(),
    }
}

/// The comparison morphism to the commutative base, collapsing every
/// operation to the symmetric one of its arity. Image homs carry exactly
/// the multiplicity matrices of their sources.
pub fn to_spanf(
    o: &ColouredOperad,
    comm: &ColouredOperad,
) -> Result<TheoryMorphism, Error> {
    Ok(theory_morphism_of(&collapse_to_comm(o, comm)?))
}

pub fn map_tuple(m: &TheoryMorphism, tuple: &[usize]) -> Vec<usize> {
    tuple.iter().map(|&c| m.colour_map[c]).collect()
}

/// Push a hom along a theory morphism: positions are kept, colours and
/// operations are mapped, arguments are re-ranked within their new colour
/// blocks.
pub fn apply_theory_morphism(
    src_o: &ColouredOperad,
    tgt_o: &ColouredOperad,
    m: &TheoryMorphism,
    h: &TheoryHom,
) -> Result<TheoryHom, Error> {
    let src = map_tuple(m, &h.src);
    let tgt = map_tuple(m, &h.tgt);
    let mut terms = Vec::with_capacity(h.terms.len());
    for t in &h.terms {
        let op = *m
            .op_map
            .get(t.op)
            .ok_or_else(|| Error::input("operation outside the morphism's domain"))?;
        let inputs = &src_o.op(t.op).inputs;
        let args = t
            .args
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                local_of_position(&tgt, position_of_local(&h.tgt, inputs[k], x))
            })
            .collect();
        terms.push(canonical_term(tgt_o, &FlatTerm { op, args })?);
    }
    Ok(TheoryHom { src, tgt, terms })
}

/// Identities, windowed composition, and inertness preservation of a theory
/// morphism, checked exhaustively over all tuples within the bounds.
pub fn check_theory_morphism(
    src_o: &ColouredOperad,
    tgt_o: &ColouredOperad,
    m: &TheoryMorphism,
    tuple_bound: usize,
    grade_bound: usize,
) -> Result<Vec<String>, Error> {
    let mut report = Vec::new();
    let src_th = theory_of(src_o, tuple_bound, grade_bound)?;
    for x in 0..src_th.num_objects() {
        let tuple = src_th.object(x).to_vec();
        let img = apply_theory_morphism(src_o, tgt_o, m, &identity_hom(src_o, &tuple))?;
        if img != identity_hom(tgt_o, &map_tuple(m, &tuple)) {
            report.push(format!("identity of {tuple:?} does not map to an identity"));
        }
    }
    for a in 0..src_th.num_objects() {
        for b in 0..src_th.num_objects() {
            for f in src_th.homs(a, b) {
                let img = apply_theory_morphism(src_o, tgt_o, m, f)?;
                if img.grade() != f.grade() {
                    report.push(format!("image of {f:?} changes grade"));
                }
                if is_inert_hom(src_o, f) && !is_inert_hom(tgt_o, &img) {
                    report.push(format!("image of the inert {f:?} is not inert"));
                }
                if is_active_hom(src_o, f) && !is_active_hom(tgt_o, &img) {
                    report.push(format!("image of the active {f:?} is not active"));
                }
            }
            for c in 0..src_th.num_objects() {
                for f in src_th.homs(a, b) {
                    for g in src_th.homs(b, c) {
                        let comp = match kleisli_compose(src_o, f, g, grade_bound) {
                            Ok(h) => h,
                            Err(Error::BoundOverflow(_)) => continue,
                            Err(e) => return Err(e),
                        };
                        let lhs = apply_theory_morphism(src_o, tgt_o, m, &comp)?;
                        let rhs = kleisli_compose(
                            tgt_o,
                            &apply_theory_morphism(src_o, tgt_o, m, f)?,
                            &apply_theory_morphism(src_o, tgt_o, m, g)?,
                            grade_bound,
                        )?;
                        if lhs != rhs {
                            report.push(format!(
                                "morphism does not commute with composition at {f:?} ; {g:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

// ---- models ------------------------------------------------------------------------

/// A candidate model of a theory: one value-set size per object, and for
/// the theory arrow `ā ⇒ b̄` — stored as `homs(b, a)[k]` — the function
/// `actions[a][b][k] : M(ā) → M(b̄)`. Product objects are encoded
/// big-endian: the tuple value `(v₀, v₁, …)` has index `v₀` scaled by the
/// sizes of the later positions, plus the rest.
#[derive(Clone, Debug)]
pub struct ModelAssignment {
    pub sizes: Vec<usize>,
    pub actions: Vec<Vec<Vec<FinMap>>>,
}

fn encode_tuple(digits: &[usize], sizes: &[usize]) -> usize {
    digits.iter().zip(sizes).fold(0, |acc, (&v, &s)| acc * s + v)
}

fn decode_tuple(mut value: usize, sizes: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        digits[i] = value % sizes[i];
        value /= sizes[i];
    }
    digits
}

fn object_sizes(th: &LawvereTheory, singleton_sizes: &[usize]) -> Vec<usize> {
    (0..th.num_objects())
        .map(|x| th.object(x).iter().map(|&c| singleton_sizes[c]).product())
        .collect()
}

/// Functoriality within the grade window, identity actions, and the Segal
/// condition (the projection actions assemble into bijections onto literal
/// products). One line per violation.
pub fn check_model(th: &LawvereTheory, m: &ModelAssignment) -> Result<Vec<String>, Error> {
    let mut report = Vec::new();
    let n = th.num_objects();
    if m.sizes.len() != n || m.actions.len() != n {
        return Ok(vec!["model shape does not match the theory".into()]);
    }
    for a in 0..n {
        if m.actions[a].len() != n {
            return Ok(vec![format!("action row {a} has the wrong length")]);
        }
        for b in 0..n {
            if m.actions[a][b].len() != th.homs(b, a).len() {
                report.push(format!("actions ({a}, {b}) do not match the hom set"));
                continue;
            }
            for (k, f) in m.actions[a][b].iter().enumerate() {
                if f.dom() != m.sizes[a] || f.cod() != m.sizes[b] {
                    report.push(format!("action ({a}, {b}, {k}) has the wrong shape"));
                }
            }
        }
    }
    if !report.is_empty() {
        return Ok(report);
    }
    for x in 0..n {
        if m.actions[x][x][th.identity(x)] != FinMap::identity(m.sizes[x]) {
            report.push(format!("identity of object {x} does not act as the identity"));
        }
    }
    // M(g ∘ f) = M(g) ∘ M(f) whenever the composite stays within the window
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for k1 in 0..th.homs(b, a).len() {
                    for k2 in 0..th.homs(c, b).len() {
                        if let Some(k3) = th.compose(c, b, a, k2, k1)? {
                            let composite = m.actions[a][b][k1].then(&m.actions[b][c][k2])?;
                            if composite != m.actions[a][c][k3] {
                                report.push(format!(
                                    "functoriality fails at arrows ({a}→{b}: {k1}) then ({b}→{c}: {k2})"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    // Segal: the projections identify M(ā) with the product of the M(aᵢ)
    let singleton_sizes: Vec<usize> = th.pinning().iter().map(|&p| m.sizes[p]).collect();
    for a in 0..n {
        let tuple = th.object(a).to_vec();
        let expected: usize = tuple.iter().map(|&c| singleton_sizes[c]).product();
        if m.sizes[a] != expected {
            report.push(format!(
                "object {a} has {} values instead of the product {expected}",
                m.sizes[a]
            ));
            continue;
        }
        let part_sizes: Vec<usize> = tuple.iter().map(|&c| singleton_sizes[c]).collect();
        let projections: Vec<&FinMap> = (0..tuple.len())
            .map(|i| {
                let proj = TheoryHom {
                    src: vec![tuple[i]],
                    tgt: tuple.clone(),
                    terms: vec![unit_term(&th.operad, tuple[i], local_of_position(&tuple, i))],
                };
                let p = th.pinning()[tuple[i]];
                let k = th
                    .hom_index(p, a, &proj)
                    .expect("projection hom missing from the theory");
                &m.actions[a][p][k]
            })
            .collect();
        let mut seen = vec![false; expected];
        for v in 0..m.sizes[a] {
            let digits: Vec<usize> = projections.iter().map(|f| f.apply(v)).collect();
            let e = encode_tuple(&digits, &part_sizes);
            if std::mem::replace(&mut seen[e], true) {
                report.push(format!("object {a} is not a product: value {v} collides"));
            }
        }
    }
    Ok(report)
}

/// All strict models with the given value set per colour: product objects
/// carry literal product sets, tuple-map arrows act by reindexing, and the
/// remaining actions are searched with composites forced eagerly.
pub fn enumerate_models(
    th: &LawvereTheory,
    singleton_sizes: &[usize],
) -> Result<Vec<ModelAssignment>, Error> {
    if singleton_sizes.len() != th.operad().colours().len() {
        return Err(Error::input("one value set size per colour is required"));
    }
    let n = th.num_objects();
    let sizes = object_sizes(th, singleton_sizes);
    let mut assign: Vec<Vec<Vec<Option<FinMap>>>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| vec![None; th.homs(b, a).len()])
                .collect()
        })
        .collect();
    // tuple-map arrows act by reindexing the literal product coordinates
    for a in 0..n {
        for b in 0..n {
            let src_tuple = th.object(a).to_vec();
            let tgt_tuple = th.object(b).to_vec();
            let src_sizes: Vec<usize> = src_tuple.iter().map(|&c| singleton_sizes[c]).collect();
            let tgt_sizes: Vec<usize> = tgt_tuple.iter().map(|&c| singleton_sizes[c]).collect();
            for (k, h) in th.homs(b, a).iter().enumerate() {
                if !is_inert_hom(th.operad(), h) {
                    continue;
                }
                // h : b̄ ⊸ ā is the tuple map u with u(j) the ā-position
                // consumed by the j-th term
                let u: Vec<usize> = h
                    .terms
                    .iter()
                    .map(|t| {
                        position_of_local(&h.tgt, th.operad().op(t.op).inputs[0], t.args[0])
                    })
                    .collect();
                let table: Vec<usize> = (0..sizes[a])
                    .map(|v| {
                        let digits = decode_tuple(v, &src_sizes);
                        let out: Vec<usize> = u.iter().map(|&j| digits[j]).collect();
                        encode_tuple(&out, &tgt_sizes)
                    })
                    .collect();
                assign[a][b][k] = Some(FinMap::new(sizes[a], sizes[b], table)?);
            }
        }
    }
    // composition table of the theory, computed once
    let mut comp: Vec<((usize, usize, usize, usize, usize), usize)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for k1 in 0..th.homs(b, a).len() {
                    for k2 in 0..th.homs(c, b).len() {
                        if let Some(k3) = th.compose(c, b, a, k2, k1)? {
                            comp.push(((a, b, c, k1, k2), k3));
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    search_models(th, &sizes, &comp, &mut assign, &mut out)?;
    Ok(out)
}

fn propagate_model(
    comp: &[((usize, usize, usize, usize, usize), usize)],
    assign: &mut [Vec<Vec<Option<FinMap>>>],
) -> Result<bool, Error> {
    loop {
        let mut changed = false;
        for &((a, b, c, k1, k2), k3) in comp {
            let (f, g) = match (&assign[a][b][k1], &assign[b][c][k2]) {
                (Some(f), Some(g)) => (f, g),
                _ => continue,
            };
            let composite = f.then(g)?;
            match &assign[a][c][k3] {
                Some(existing) => {
                    if *existing != composite {
                        return Ok(false);
                    }
                }
                None => {
                    assign[a][c][k3] = Some(composite);
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(true);
        }
    }
}

fn search_models(
    th: &LawvereTheory,
    sizes: &[usize],
    comp: &[((usize, usize, usize, usize, usize), usize)],
    assign: &mut Vec<Vec<Vec<Option<FinMap>>>>,
    out: &mut Vec<ModelAssignment>,
) -> Result<(), Error> {
    let saved = assign.clone();
    if !propagate_model(comp, assign)? {
        *assign = saved;
        return Ok(());
    }
    let mut slot = None;
    'scan: for a in 0..assign.len() {
        for b in 0..assign.len() {
            for k in 0..assign[a][b].len() {
                if assign[a][b][k].is_none() {
                    slot = Some((a, b, k));
                    break 'scan;
                }
            }
        }
    }
    match slot {
        None => {
            let actions: Vec<Vec<Vec<FinMap>>> = assign
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|hs| hs.iter().map(|f| f.clone().unwrap()).collect())
                        .collect()
                })
                .collect();
            let candidate = ModelAssignment {
                sizes: sizes.to_vec(),
                actions,
            };
            if check_model(th, &candidate)?.is_empty() {
                out.push(candidate);
            }
        }
        Some((a, b, k)) => {
            // each recursive call restores the assignment it was handed
            for f in enumerate_maps(sizes[a], sizes[b]) {
                assign[a][b][k] = Some(f);
                search_models(th, sizes, comp, assign, out)?;
            }
        }
    }
    *assign = saved;
    Ok(())
}

// ---- algebras ----------------------------------------------------------------------

/// Algebra structures on one value set per colour: a table per operation
/// from the big-endian product of its input sets to its output set,
/// respecting identities, the symmetric-group action, and every stored
/// composition entry.
pub fn enumerate_algebras(
    o: &ColouredOperad,
    sizes: &[usize],
) -> Result<Vec<Vec<FinMap>>, Error> {
    if sizes.len() != o.colours().len() {
        return Err(Error::input("one value set size per colour is required"));
    }
    let mut tables: Vec<Option<FinMap>> = vec![None; o.num_ops()];
    for &i in o.idents() {
        tables[i] = Some(FinMap::identity(sizes[o.op(i).output]));
    }
    let mut out = Vec::new();
    search_algebras(o, sizes, &mut tables, &mut out)?;
    Ok(out)
}

fn op_input_sizes(o: &ColouredOperad, sizes: &[usize], op: OpId) -> Vec<usize> {
    o.op(op).inputs.iter().map(|&c| sizes[c]).collect()
}

fn propagate_algebras(
    o: &ColouredOperad,
    sizes: &[usize],
    tables: &mut [Option<FinMap>],
) -> Result<bool, Error> {
    loop {
        let mut changed = false;
        for (src, perm, img) in o.sym_entries() {
            let f = match &tables[src] {
                Some(f) => f.clone(),
                None => continue,
            };
            // (op · σ) takes its k-th input where op takes its σ(k)-th
            let src_sizes = op_input_sizes(o, sizes, src);
            let img_sizes = op_input_sizes(o, sizes, img);
            let table: Vec<usize> = (0..f.dom())
                .map(|v| {
                    let y = decode_tuple(v, &img_sizes);
                    let mut x = vec![0; y.len()];
                    for (k, &p) in perm.iter().enumerate() {
                        x[p] = y[k];
                    }
                    f.apply(encode_tuple(&x, &src_sizes))
                })
                .collect();
            let expected = FinMap::new(f.dom(), f.cod(), table)?;
            match &tables[img] {
                Some(existing) => {
                    if *existing != expected {
                        return Ok(false);
                    }
                }
                None => {
                    tables[img] = Some(expected);
                    changed = true;
                }
            }
        }
        for (outer, family, result) in o.comp_entries() {
            let fo = match &tables[outer] {
                Some(f) => f.clone(),
                None => continue,
            };
            if family.iter().any(|&i| tables[i].is_none()) {
                continue;
            }
            let fam_tables: Vec<&FinMap> =
                family.iter().map(|&i| tables[i].as_ref().unwrap()).collect();
            let res_sizes = op_input_sizes(o, sizes, result);
            let outer_sizes = op_input_sizes(o, sizes, outer);
            let dom: usize = res_sizes.iter().product();
            let table: Vec<usize> = (0..dom)
                .map(|v| {
                    let digits = decode_tuple(v, &res_sizes);
                    let mut mids = Vec::with_capacity(family.len());
                    let mut offset = 0;
                    for (slot, &inner) in family.iter().enumerate() {
                        let width = o.arity(inner);
                        let block = &digits[offset..offset + width];
                        let inner_sizes = op_input_sizes(o, sizes, inner);
                        mids.push(fam_tables[slot].apply(encode_tuple(block, &inner_sizes)));
                        offset += width;
                    }
                    fo.apply(encode_tuple(&mids, &outer_sizes))
                })
                .collect();
            let expected = FinMap::new(dom, sizes[o.op(result).output], table)?;
            match &tables[result] {
                Some(existing) => {
                    if *existing != expected {
                        return Ok(false);
                    }
                }
                None => {
                    tables[result] = Some(expected);
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(true);
        }
    }
}

fn search_algebras(
    o: &ColouredOperad,
    sizes: &[usize],
    tables: &mut Vec<Option<FinMap>>,
    out: &mut Vec<Vec<FinMap>>,
) -> Result<(), Error> {
    let saved = tables.clone();
    if !propagate_algebras(o, sizes, tables)? {
        *tables = saved;
        return Ok(());
    }
    match tables.iter().position(|t| t.is_none()) {
        None => {
            if algebra_laws_hold(o, sizes, tables)? {
                out.push(tables.iter().map(|t| t.clone().unwrap()).collect());
            }
        }
        Some(op) => {
            let dom: usize = op_input_sizes(o, sizes, op).iter().product();
            for f in enumerate_maps(dom, sizes[o.op(op).output]) {
                tables[op] = Some(f);
                search_algebras(o, sizes, tables, out)?;
                let keep = tables[op].clone();
                *tables = saved.clone();
                tables[op] = keep;
            }
            tables[op] = None;
        }
    }
    *tables = saved;
    Ok(())
}

/// Full recheck of a complete table assignment: identities, every
/// permutation (not only the stored generators), every composition entry.
fn algebra_laws_hold(
    o: &ColouredOperad,
    sizes: &[usize],
    tables: &[Option<FinMap>],
) -> Result<bool, Error> {
    let get = |op: OpId| tables[op].as_ref().unwrap();
    for &i in o.idents() {
        if *get(i) != FinMap::identity(sizes[o.op(i).output]) {
            return Ok(false);
        }
    }
    for op in 0..o.num_ops() {
        let n = o.arity(op);
        let src_sizes = op_input_sizes(o, sizes, op);
        for perm in all_perms(n) {
            let img = o.sym_act(op, &perm)?;
            let img_sizes = op_input_sizes(o, sizes, img);
            let f = get(op);
            let g = get(img);
            for v in 0..g.dom() {
                let y = decode_tuple(v, &img_sizes);
                let mut x = vec![0; n];
                for (k, &p) in perm.iter().enumerate() {
                    x[p] = y[k];
                }
                if g.apply(v) != f.apply(encode_tuple(&x, &src_sizes)) {
                    return Ok(false);
                }
            }
        }
    }
    for (outer, family, result) in o.comp_entries() {
        let res_sizes = op_input_sizes(o, sizes, result);
        let outer_sizes = op_input_sizes(o, sizes, outer);
        let dom: usize = res_sizes.iter().product();
        for v in 0..dom {
            let digits = decode_tuple(v, &res_sizes);
            let mut mids = Vec::with_capacity(family.len());
            let mut offset = 0;
            for &inner in &family {
                let width = o.arity(inner);
                let inner_sizes = op_input_sizes(o, sizes, inner);
                mids.push(get(inner).apply(encode_tuple(&digits[offset..offset + width], &inner_sizes)));
                offset += width;
            }
            if get(result).apply(v) != get(outer).apply(encode_tuple(&mids, &outer_sizes)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counts of algebra structures and of strict theory models on the same
/// value sets; the two families are in bijection at these truncations.
pub fn algebras_vs_models(
    o: &ColouredOperad,
    singleton_sizes: &[usize],
    tuple_bound: usize,
    grade_bound: usize,
) -> Result<(usize, usize), Error> {
    let algs = enumerate_algebras(o, singleton_sizes)?.len();
    let th = theory_of(o, tuple_bound, grade_bound)?;
    let models = enumerate_models(&th, singleton_sizes)?.len();
    Ok((algs, models))
}

// ---- the bridge back to the category of operators -----------------------------------

/// The operator-category morphism carried by a stored hom: the transposed
/// multiplicity matrix as a span, with each term's operation aligned to the
/// span's fibre order over its target (ascending target position; the
/// residual in-cell freedom is a block permutation, which the canonical
/// representative quotients out).
pub fn hom_to_operator(o: &ColouredOperad, h: &TheoryHom) -> Result<MorData, Error> {
    let m = hom_matrix(o, h);
    let mut tm = vec![vec![0; h.src.len()]; h.tgt.len()];
    for i in 0..h.src.len() {
        for (j, row) in tm.iter_mut().enumerate() {
            row[i] = m[i][j];
        }
    }
    let span = Span::from_matrix_with_shape(h.tgt.len(), h.src.len(), tm)?;
    let mut ops = Vec::with_capacity(h.terms.len());
    for (i, t) in h.terms.iter().enumerate() {
        let inputs = &o.op(t.op).inputs;
        let pos: Vec<usize> = (0..t.args.len())
            .map(|k| position_of_local(&h.tgt, inputs[k], t.args[k]))
            .collect();
        let mut order: Vec<usize> = (0..pos.len()).collect();
        order.sort_by_key(|&k| (pos[k], k));
        let aligned = o.sym_act(t.op, &order)?;
        ops.push(canonical_op(o, &span, i, aligned)?);
    }
    Ok(MorData {
        span,
        ops,
        name: String::new(),
    })
}

/// What the reconstruction run found: mismatches in the free-model grading,
/// in the hom-sets of the rebuilt category of operators, and in its
/// composition. All empty means the theory remembers the operad.
#[derive(Clone, Debug)]
pub struct RoundtripReport {
    pub grading: Vec<String>,
    pub category: Vec<String>,
    pub composition: Vec<String>,
}

impl RoundtripReport {
    pub fn passes(&self) -> bool {
        self.grading.is_empty() && self.category.is_empty() && self.composition.is_empty()
    }
}

/// Rebuild operad-level data from the theory and compare: (a) the homs out
/// of singleton tuples reproduce the free algebra grade by grade; (b) homs
/// transposed into spans-with-operations reproduce the category of
/// operators, composition included.
pub fn roundtrip(
    o: &ColouredOperad,
    tuple_bound: usize,
    grade_bound: usize,
) -> Result<RoundtripReport, Error> {
    let th = theory_of(o, tuple_bound, grade_bound)?;
    let k = category_of_operators(o, tuple_bound, grade_bound)?;
    let mut report = RoundtripReport {
        grading: Vec::new(),
        category: Vec::new(),
        composition: Vec::new(),
    };
    // (a) singleton-source homs are the free algebra, grade by grade
    for y in 0..th.num_objects() {
        let fam = tuple_family(o.colours().len(), th.object(y));
        let ta = free_algebra(o, &fam, grade_bound)?;
        for c in 0..o.colours().len() {
            let mut from_theory: Vec<FlatTerm> = th
                .homs(th.pinning()[c], y)
                .iter()
                .map(|h| h.terms[0].clone())
                .collect();
            from_theory.sort();
            let mut from_monad: Vec<FlatTerm> =
                ta.flatten(c).into_iter().cloned().collect();
            from_monad.sort();
            if from_theory != from_monad {
                report.grading.push(format!(
                    "singleton homs into object {y} at colour {c} differ from the free algebra"
                ));
            }
            for g in 0..=grade_bound {
                let counted = th
                    .homs(th.pinning()[c], y)
                    .iter()
                    .filter(|h| h.grade() == g)
                    .count();
                if counted != ta.count(c, g) {
                    report.grading.push(format!(
                        "grade {g} count at object {y}, colour {c}: {counted} vs {}",
                        ta.count(c, g)
                    ));
                }
            }
        }
    }
    // (b) hom-sets match the category of operators under transposition
    if (0..th.num_objects()).map(|x| th.object(x).to_vec()).collect::<Vec<_>>()
        != (0..k.num_objects()).map(|x| k.object(x).to_vec()).collect::<Vec<_>>()
    {
        report.category.push("object lists differ".into());
        return Ok(report);
    }
    for s in 0..k.num_objects() {
        for t in 0..k.num_objects() {
            let mut rebuilt: Vec<MorData> = th
                .homs(t, s)
                .iter()
                .map(|h| hom_to_operator(o, h))
                .collect::<Result<_, _>>()?;
            rebuilt.sort();
            let mut given: Vec<MorData> =
                k.morphisms(s, t).map(|m| k.mor(m).clone()).collect();
            given.sort();
            if rebuilt != given {
                report.category.push(format!(
                    "hom set ({s}, {t}): {} rebuilt vs {} given",
                    rebuilt.len(),
                    given.len()
                ));
            }
        }
    }
    if !report.category.is_empty() {
        return Ok(report);
    }
    // composition agreement: Kleisli composition transposes to operator
    // composition, overflow for overflow
    let mut bridged = vec![vec![Vec::new(); k.num_objects()]; k.num_objects()];
    for s in 0..k.num_objects() {
        for t in 0..k.num_objects() {
            for h in th.homs(t, s) {
                let d = hom_to_operator(o, h)?;
                let m = k
                    .find(s, t, &d.span, &d.ops)
                    .expect("rebuilt morphism vanished");
                bridged[s][t].push(m);
            }
        }
    }
    for s in 0..k.num_objects() {
        for t in 0..k.num_objects() {
            for u in 0..k.num_objects() {
                for (i, hf) in th.homs(t, s).iter().enumerate() {
                    for (j, hg) in th.homs(u, t).iter().enumerate() {
                        let theory_side = kleisli_compose(o, hg, hf, grade_bound);
                        let operator_side = k.compose(bridged[s][t][i], bridged[t][u][j]);
                        match (theory_side, operator_side) {
                            (Ok(h), Ok(m)) => {
                                if hom_to_operator(o, &h)? != *k.mor(m) {
                                    report.composition.push(format!(
                                        "composite of homs ({i}, {j}) at ({s}, {t}, {u}) disagrees"
                                    ));
                                }
                            }
                            (Err(Error::BoundOverflow(_)), Err(Error::BoundOverflow(_))) => {}
                            (a, b) => {
                                report.composition.push(format!(
                                    "composite of homs ({i}, {j}) at ({s}, {t}, {u}): {:?} vs {:?}",
                                    a.map(|_| ()),
                                    b.map(|_| ())
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
