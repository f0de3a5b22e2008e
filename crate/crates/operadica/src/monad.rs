//! Polynomial endofunctors at set level and the free-algebra monad of a
//! coloured operad: terms modulo the symmetric-group identifications, graded
//! by arity, with unit (identity wrapping) and multiplication (grafting).
//! Cartesianness of the unit and multiplication naturality squares is decided
//! by finite pullback checks on flattened maps. The module also provides the
//! terminal monad of multisets with a terminality enumeration, linear monads
//! of pinned categories, a linearity test with its coproduct-preservation
//! counterpart, and free operads on generator sequences via leaf-labelled
//! trees.

use crate::error::Error;
use crate::finspan::{enumerate_maps, is_pullback_square, FinMap};
use crate::operad::{all_perms, perm_inverse, ColouredOperad, OpData, OpId, SymSeq};
use crate::segal::PinnedCategory;
use std::collections::{BTreeMap, BTreeSet};

// ---- indexed families -------------------------------------------------------

/// A finite set for each colour, recorded by size; elements are `0..size`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    pub sizes: Vec<usize>,
}

impl Family {
    pub fn new(sizes: Vec<usize>) -> Self {
        Family { sizes }
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Offset of colour `c` in the disjoint union of all colours.
    pub fn offset(&self, c: usize) -> usize {
        self.sizes[..c].iter().sum()
    }

    pub fn flat(&self, c: usize, x: usize) -> usize {
        self.offset(c) + x
    }
}

/// A map of families over a fixed colour set: one function per colour.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyMap {
    pub maps: Vec<FinMap>,
}

impl FamilyMap {
    pub fn identity(f: &Family) -> Self {
        FamilyMap {
            maps: f.sizes.iter().map(|&n| FinMap::identity(n)).collect(),
        }
    }

    pub fn dom_family(&self) -> Family {
        Family::new(self.maps.iter().map(|m| m.dom()).collect())
    }

    pub fn cod_family(&self) -> Family {
        Family::new(self.maps.iter().map(|m| m.cod()).collect())
    }
}

/// Every colourwise map `f → g`, ordered colour-major then by the underlying
/// function tables.
pub fn enumerate_family_maps(f: &Family, g: &Family) -> Vec<FamilyMap> {
    let mut out = vec![Vec::new()];
    for c in 0..f.sizes.len() {
        let maps = enumerate_maps(f.sizes[c], g.sizes[c]);
        let mut next = Vec::with_capacity(out.len() * maps.len());
        for prefix in &out {
            for m in &maps {
                let mut row = prefix.clone();
                row.push(m.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out.into_iter().map(|maps| FamilyMap { maps }).collect()
}

/// The disjoint union of the colourwise maps as one function.
pub fn flatten_family_map(m: &FamilyMap) -> FinMap {
    let dom = m.dom_family();
    let cod = m.cod_family();
    let mut table = Vec::with_capacity(dom.total());
    for (c, fm) in m.maps.iter().enumerate() {
        for x in 0..fm.dom() {
            table.push(cod.flat(c, fm.apply(x)));
        }
    }
    FinMap::new(dom.total(), cod.total(), table).expect("colourwise maps stay within their colours")
}

// ---- polynomial endofunctors --------------------------------------------------

/// The shape data X ← E → B → X of an operad: `b` lists the operations,
/// `e` their input slots in (operation, slot) order, `s` sends a slot to its
/// colour, `p` to its operation, and `t` an operation to its output colour.
#[derive(Clone, Debug)]
pub struct Polynomial {
    pub b: Vec<OpId>,
    pub e: Vec<(OpId, usize)>,
    pub s: FinMap,
    pub p: FinMap,
    pub t: FinMap,
}

pub fn poly_from_operad(o: &ColouredOperad) -> Polynomial {
    let n_col = o.colours().len();
    let b: Vec<OpId> = (0..o.num_ops()).collect();
    let mut e = Vec::new();
    let mut s_table = Vec::new();
    let mut p_table = Vec::new();
    for &op in &b {
        for (slot, &colour) in o.op(op).inputs.iter().enumerate() {
            e.push((op, slot));
            s_table.push(colour);
            p_table.push(op);
        }
    }
    let t_table: Vec<usize> = b.iter().map(|&op| o.op(op).output).collect();
    Polynomial {
        s: FinMap::new(e.len(), n_col, s_table).expect("slot colours are in range"),
        p: FinMap::new(e.len(), b.len(), p_table).expect("slot operations are in range"),
        t: FinMap::new(b.len(), n_col, t_table).expect("output colours are in range"),
        b,
        e,
    }
}

/// All tuples over the given dimensions, first coordinate slowest.
fn tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for prefix in &out {
            for v in 0..d {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// One colour's worth of Σ_b ∏_{e ∈ p⁻¹(b)} F(s(e)): the ordered,
/// pre-quotient terms, exactly the raw generation layer of [`free_algebra`]
/// before orbit collapse.
pub fn eval_poly(poly: &Polynomial, f: &Family) -> Vec<Vec<FlatTerm>> {
    let mut out = vec![Vec::new(); poly.t.cod()];
    for (bi, &op) in poly.b.iter().enumerate() {
        let dims: Vec<usize> = (0..poly.e.len())
            .filter(|&ei| poly.p.apply(ei) == bi)
            .map(|ei| f.sizes[poly.s.apply(ei)])
            .collect();
        for args in tuples(&dims) {
            out[poly.t.apply(bi)].push(FlatTerm { op, args });
        }
    }
    out
}

// ---- terms and free algebras --------------------------------------------------

/// An operadic term: an operation applied to generator elements, one per
/// input slot. Its grade is the arity of the operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FlatTerm {
    pub op: OpId,
    pub args: Vec<usize>,
}

/// Lexicographically least representative of the orbit
/// (op, args) ~ (op·σ, args∘σ).
pub fn canonical_term(o: &ColouredOperad, t: &FlatTerm) -> Result<FlatTerm, Error> {
    let n = t.args.len();
    if n != o.arity(t.op) {
        return Err(Error::input(format!(
            "term of {} has {} arguments",
            o.op(t.op).name,
            n
        )));
    }
    let mut best: Option<FlatTerm> = None;
    for s in all_perms(n) {
        let op = o.sym_act(t.op, &s)?;
        let args: Vec<usize> = (0..n).map(|i| t.args[s[i]]).collect();
        let cand = FlatTerm { op, args };
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    Ok(best.unwrap())
}

/// The flattened multiset of generator elements a term consumes.
pub fn leaf_multiset(o: &ColouredOperad, f: &Family, t: &FlatTerm) -> Vec<usize> {
    let mut leaves: Vec<usize> = o
        .op(t.op)
        .inputs
        .iter()
        .zip(&t.args)
        .map(|(&c, &x)| f.flat(c, x))
        .collect();
    leaves.sort_unstable();
    leaves
}

/// The free algebra truncation: canonical terms per colour and grade.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedFamily {
    pub levels: Vec<Vec<Vec<FlatTerm>>>,
}

impl GradedFamily {
    pub fn num_colours(&self) -> usize {
        self.levels.len()
    }

    pub fn degree(&self) -> usize {
        self.levels.first().map_or(0, |g| g.len().saturating_sub(1))
    }

    pub fn count(&self, colour: usize, grade: usize) -> usize {
        self.levels[colour].get(grade).map_or(0, Vec::len)
    }

    pub fn colour_total(&self, colour: usize) -> usize {
        self.levels[colour].iter().map(Vec::len).sum()
    }

    /// Per-colour totals, for treating the truncation as a family again.
    pub fn family(&self) -> Family {
        Family::new((0..self.num_colours()).map(|c| self.colour_total(c)).collect())
    }

    /// All of a colour's terms in grade-major order.
    pub fn flatten(&self, colour: usize) -> Vec<&FlatTerm> {
        self.levels[colour].iter().flatten().collect()
    }

    /// Position of a canonical term in the grade-major order of its colour.
    pub fn position(&self, colour: usize, t: &FlatTerm) -> Option<usize> {
        let k = t.args.len();
        if k >= self.levels[colour].len() {
            return None;
        }
        let offset: usize = self.levels[colour][..k].iter().map(Vec::len).sum();
        self.levels[colour][k].binary_search(t).ok().map(|i| offset + i)
    }

    pub fn term_at(&self, colour: usize, index: usize) -> &FlatTerm {
        let mut i = index;
        for grade in &self.levels[colour] {
            if i < grade.len() {
                return &grade[i];
            }
            i -= grade.len();
        }
        panic!("term index out of range");
    }
}

/// Terms of the free algebra over `f`, graded by arity and truncated at
/// `degree`. Grades above the operad's arity bound are empty: the truncated
/// operad has no wider operations, so nothing is dropped silently.
pub fn free_algebra(o: &ColouredOperad, f: &Family, degree: usize) -> Result<GradedFamily, Error> {
    if f.sizes.len() != o.colours().len() {
        return Err(Error::input("family has the wrong number of colours"));
    }
    let n_col = o.colours().len();
    let mut sets: Vec<Vec<BTreeSet<FlatTerm>>> = vec![vec![BTreeSet::new(); degree + 1]; n_col];
    for op in 0..o.num_ops() {
        let k = o.arity(op);
        if k > degree {
            continue;
        }
        let dims: Vec<usize> = o.op(op).inputs.iter().map(|&c| f.sizes[c]).collect();
        for args in tuples(&dims) {
            let t = canonical_term(o, &FlatTerm { op, args })?;
            sets[o.op(op).output][k].insert(t);
        }
    }
    Ok(GradedFamily {
        levels: sets
            .into_iter()
            .map(|grades| grades.into_iter().map(|g| g.into_iter().collect()).collect())
            .collect(),
    })
}

/// The unit: a generator wrapped in its colour's identity operation.
pub fn unit_term(o: &ColouredOperad, colour: usize, x: usize) -> FlatTerm {
    FlatTerm {
        op: o.ident(colour),
        args: vec![x],
    }
}

/// The unit as one function on the flattened generator set.
pub fn unit_finmap(o: &ColouredOperad, f: &Family, tf: &GradedFamily) -> Result<FinMap, Error> {
    let tfam = tf.family();
    let mut table = Vec::with_capacity(f.total());
    for c in 0..f.sizes.len() {
        for x in 0..f.sizes[c] {
            let t = canonical_term(o, &unit_term(o, c, x))?;
            let pos = tf
                .position(c, &t)
                .ok_or_else(|| Error::input("unit term missing from the truncation"))?;
            table.push(tfam.flat(c, pos));
        }
    }
    FinMap::new(f.total(), tfam.total(), table)
}

/// Functorial action on terms: map the arguments colourwise, re-canonicalize.
pub fn free_map(o: &ColouredOperad, m: &FamilyMap, t: &FlatTerm) -> Result<FlatTerm, Error> {
    let inputs = &o.op(t.op).inputs;
    let args: Vec<usize> = inputs
        .iter()
        .zip(&t.args)
        .map(|(&c, &x)| m.maps[c].apply(x))
        .collect();
    canonical_term(o, &FlatTerm { op: t.op, args })
}

/// The action of [`free_map`] on whole truncations, as a family map between
/// the term families.
pub fn free_map_family(
    o: &ColouredOperad,
    m: &FamilyMap,
    tf: &GradedFamily,
    tg: &GradedFamily,
) -> Result<FamilyMap, Error> {
    let mut maps = Vec::with_capacity(tf.num_colours());
    for c in 0..tf.num_colours() {
        let mut table = Vec::with_capacity(tf.colour_total(c));
        for t in tf.flatten(c) {
            let u = free_map(o, m, t)?;
            let pos = tg
                .position(c, &u)
                .ok_or_else(|| Error::input("image term missing from the target truncation"))?;
            table.push(pos);
        }
        maps.push(FinMap::new(tf.colour_total(c), tg.colour_total(c), table)?);
    }
    Ok(FamilyMap { maps })
}

/// Multiplication on one term over a term family: graft the inner terms into
/// the outer operation. Composite grades beyond `degree` (or beyond the
/// operad's arity bound) are an explicit overflow, never a silent drop.
pub fn mult_term(
    o: &ColouredOperad,
    tf: &GradedFamily,
    degree: usize,
    t: &FlatTerm,
) -> Result<FlatTerm, Error> {
    let inputs = &o.op(t.op).inputs;
    let inners: Vec<&FlatTerm> = inputs
        .iter()
        .zip(&t.args)
        .map(|(&c, &i)| tf.term_at(c, i))
        .collect();
    let total: usize = inners.iter().map(|u| u.args.len()).sum();
    if total > degree {
        return Err(Error::overflow(format!(
            "grafted term has grade {total} > degree bound {degree}"
        )));
    }
    let inner_ops: Vec<OpId> = inners.iter().map(|u| u.op).collect();
    let op = o.compose(t.op, &inner_ops)?;
    let args: Vec<usize> = inners.iter().flat_map(|u| u.args.iter().copied()).collect();
    canonical_term(o, &FlatTerm { op, args })
}

/// Multiplication restricted to the window where it is defined: `None` marks
/// a composite past the truncation, other failures propagate.
fn windowed_mult(
    o: &ColouredOperad,
    tf: &GradedFamily,
    degree: usize,
    t: &FlatTerm,
) -> Result<Option<FlatTerm>, Error> {
    match mult_term(o, tf, degree, t) {
        Ok(v) => Ok(Some(v)),
        Err(Error::BoundOverflow(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

// ---- monad laws ---------------------------------------------------------------

/// Unit laws and windowed associativity of the grafting multiplication, on
/// every term within the truncation. Returns one line per violated instance.
pub fn check_monad_laws(
    o: &ColouredOperad,
    f: &Family,
    degree: usize,
) -> Result<Vec<String>, Error> {
    let mut report = Vec::new();
    let tf = free_algebra(o, f, degree)?;
    let tfam = tf.family();
    let ttf = free_algebra(o, &tfam, degree)?;

    for c in 0..tf.num_colours() {
        for t in tf.flatten(c) {
            let idx = tf.position(c, t).unwrap();
            // mult ∘ (unit at T) = identity
            let wrapped = FlatTerm {
                op: o.ident(c),
                args: vec![idx],
            };
            match windowed_mult(o, &tf, degree, &wrapped)? {
                Some(v) if v == *t => {}
                _ => report.push(format!("left unit law fails at {t:?} in colour {c}")),
            }
            // mult ∘ (T unit) = identity
            let args: Option<Vec<usize>> = o
                .op(t.op)
                .inputs
                .iter()
                .zip(&t.args)
                .map(|(&d, &x)| tf.position(d, &unit_term(o, d, x)))
                .collect();
            let Some(args) = args else {
                report.push(format!("unit terms missing under {t:?} in colour {c}"));
                continue;
            };
            let spread = FlatTerm { op: t.op, args };
            match windowed_mult(o, &tf, degree, &spread)? {
                Some(v) if v == *t => {}
                _ => report.push(format!("right unit law fails at {t:?} in colour {c}")),
            }
        }
    }

    // associativity on triple-nested terms, where both graftings stay within
    // the window (nullary collapse can push one side past it, never both the
    // same way)
    let ttfam = ttf.family();
    let tttf = free_algebra(o, &ttfam, degree)?;
    for c in 0..tttf.num_colours() {
        for u in tttf.flatten(c) {
            let one = match windowed_mult(o, &ttf, degree, u)? {
                Some(v) => windowed_mult(o, &tf, degree, &v)?,
                None => None,
            };
            let inner: Option<Vec<usize>> = o
                .op(u.op)
                .inputs
                .iter()
                .zip(&u.args)
                .map(|(&d, &i)| {
                    windowed_mult(o, &tf, degree, ttf.term_at(d, i))
                        .ok()
                        .flatten()
                        .and_then(|w| tf.position(d, &w))
                })
                .collect();
            let two = match inner {
                Some(args) => windowed_mult(o, &tf, degree, &FlatTerm { op: u.op, args })?,
                None => None,
            };
            if let (Some(a), Some(b)) = (one, two) {
                if a != b {
                    report.push(format!(
                        "multiplication associativity fails at {u:?} in colour {c}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Naturality of unit and multiplication at one family map, within the window.
pub fn check_naturality(
    o: &ColouredOperad,
    phi: &FamilyMap,
    degree: usize,
) -> Result<Vec<String>, Error> {
    let mut report = Vec::new();
    let f = phi.dom_family();
    let g = phi.cod_family();
    let tf = free_algebra(o, &f, degree)?;
    let tg = free_algebra(o, &g, degree)?;
    for c in 0..f.sizes.len() {
        for x in 0..f.sizes[c] {
            let lhs = free_map(o, phi, &canonical_term(o, &unit_term(o, c, x))?)?;
            let rhs = canonical_term(o, &unit_term(o, c, phi.maps[c].apply(x)))?;
            if lhs != rhs {
                report.push(format!("unit naturality fails at generator {x} of colour {c}"));
            }
        }
    }
    let tphi = free_map_family(o, phi, &tf, &tg)?;
    let ttf = free_algebra(o, &tf.family(), degree)?;
    for c in 0..ttf.num_colours() {
        for tt in ttf.flatten(c) {
            let lhs = match windowed_mult(o, &tf, degree, tt)? {
                Some(v) => Some(free_map(o, phi, &v)?),
                None => None,
            };
            let rhs = match windowed_mult(o, &tg, degree, &free_map(o, &tphi, tt)?)? {
                Some(v) => Some(v),
                None => None,
            };
            if lhs != rhs {
                report.push(format!(
                    "multiplication naturality fails at {tt:?} in colour {c}"
                ));
            }
        }
    }
    Ok(report)
}

// ---- cartesianness --------------------------------------------------------------

/// Which transformation's naturality square to test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Square {
    Unit,
    Mult,
}

/// Whether the naturality square of the unit or multiplication at `phi` is a
/// pullback of finite sets. The multiplication square is taken on the window
/// where grafting stays within the truncation; the window is preserved by the
/// functorial action, so the square is well formed.
pub fn check_cartesian(
    o: &ColouredOperad,
    square: Square,
    phi: &FamilyMap,
    degree: usize,
) -> Result<bool, Error> {
    let f = phi.dom_family();
    let g = phi.cod_family();
    let tf = free_algebra(o, &f, degree)?;
    let tg = free_algebra(o, &g, degree)?;
    let tphi = free_map_family(o, phi, &tf, &tg)?;
    match square {
        Square::Unit => {
            let pa = unit_finmap(o, &f, &tf)?;
            let pb = flatten_family_map(phi);
            let f_leg = flatten_family_map(&tphi);
            let g_leg = unit_finmap(o, &g, &tg)?;
            is_pullback_square(&pa, &pb, &f_leg, &g_leg)
        }
        Square::Mult => {
            let tffam = tf.family();
            let tgfam = tg.family();
            let ttf = free_algebra(o, &tffam, degree)?;
            let ttg = free_algebra(o, &tgfam, degree)?;
            // windows: the terms whose grafting is defined, colour-major
            let mut wf = Vec::new();
            for c in 0..ttf.num_colours() {
                for tt in ttf.flatten(c) {
                    if let Some(v) = windowed_mult(o, &tf, degree, tt)? {
                        wf.push((c, tt.clone(), v));
                    }
                }
            }
            let mut wg = Vec::new();
            let mut wg_index = BTreeMap::new();
            for c in 0..ttg.num_colours() {
                for tt in ttg.flatten(c) {
                    if let Some(v) = windowed_mult(o, &tg, degree, tt)? {
                        wg_index.insert((c, tt.clone()), wg.len());
                        wg.push((c, tt.clone(), v));
                    }
                }
            }
            let mut pa_table = Vec::with_capacity(wf.len());
            let mut pb_table = Vec::with_capacity(wf.len());
            for (c, tt, v) in &wf {
                pa_table.push(tffam.flat(*c, tf.position(*c, v).unwrap()));
                let image = free_map(o, &tphi, tt)?;
                let w = wg_index
                    .get(&(*c, image))
                    .ok_or_else(|| Error::input("window is not preserved by the family map"))?;
                pb_table.push(*w);
            }
            let mut g_table = Vec::with_capacity(wg.len());
            for (c, _, v) in &wg {
                g_table.push(tgfam.flat(*c, tg.position(*c, v).unwrap()));
            }
            let pa = FinMap::new(wf.len(), tffam.total(), pa_table)?;
            let pb = FinMap::new(wf.len(), wg.len(), pb_table)?;
            let f_leg = flatten_family_map(&tphi);
            let g_leg = FinMap::new(wg.len(), tgfam.total(), g_table)?;
            is_pullback_square(&pa, &pb, &f_leg, &g_leg)
        }
    }
}

// ---- the terminal monad -----------------------------------------------------------

/// Multisets of size `k` over `0..m`, as nondecreasing tuples in
/// lexicographic order.
pub fn multisets_of(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(m: usize, k: usize, least: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in least..m {
            cur.push(v);
            go(m, k, v, cur, out);
            cur.pop();
        }
    }
    go(m, k, 0, &mut cur, &mut out);
    out
}

/// The multiset monad's truncation: grade-`k` layer = sorted multisets of
/// size `k` over a set of the given size.
pub fn sym_monad(size: usize, degree: usize) -> Vec<Vec<Vec<usize>>> {
    (0..=degree).map(|k| multisets_of(size, k)).collect()
}

/// A grade-compatible assignment of a multiset to every term.
pub type TerminalMap = BTreeMap<(usize, FlatTerm), Vec<usize>>;

/// Every grading-compatible map from the term truncation to multisets over
/// the flattened generators that respects the unit, the windowed grafting
/// (image of a graft = union of the argument images), and naturality under
/// all self-maps of the family. Exhaustive over all assignments.
pub fn terminal_grading_maps(
    o: &ColouredOperad,
    f: &Family,
    degree: usize,
) -> Result<Vec<TerminalMap>, Error> {
    let tf = free_algebra(o, f, degree)?;
    let ttf = free_algebra(o, &tf.family(), degree)?;
    let mut keys: Vec<(usize, FlatTerm)> = Vec::new();
    for c in 0..tf.num_colours() {
        for t in tf.flatten(c) {
            keys.push((c, t.clone()));
        }
    }
    let options: Vec<Vec<Vec<usize>>> = keys
        .iter()
        .map(|(_, t)| multisets_of(f.total(), t.args.len()))
        .collect();

    // grafting instances: (colour, union of argument keys, target term)
    let mut graft_instances = Vec::new();
    for c in 0..ttf.num_colours() {
        for tt in ttf.flatten(c) {
            if let Some(v) = windowed_mult(o, &tf, degree, tt)? {
                let arg_keys: Vec<(usize, FlatTerm)> = o
                    .op(tt.op)
                    .inputs
                    .iter()
                    .zip(&tt.args)
                    .map(|(&d, &i)| (d, ttf_arg(&tf, d, i)))
                    .collect();
                graft_instances.push((arg_keys, (c, v)));
            }
        }
    }
    let self_maps = enumerate_family_maps(f, f);

    let mut found = Vec::new();
    let mut pick = vec![0usize; keys.len()];
    'search: loop {
        let assignment: TerminalMap = keys
            .iter()
            .zip(&pick)
            .map(|((c, t), &i)| ((*c, t.clone()), options_at(&options, &keys, c, t)[i].clone()))
            .collect();
        if satisfies_terminal_conditions(o, f, &tf, &assignment, &graft_instances, &self_maps)? {
            found.push(assignment);
        }
        // odometer
        for i in (0..pick.len()).rev() {
            pick[i] += 1;
            if pick[i] < options[i].len() {
                continue 'search;
            }
            pick[i] = 0;
            if i == 0 {
                break 'search;
            }
        }
        if pick.is_empty() {
            break;
        }
    }
    Ok(found)
}

fn ttf_arg(tf: &GradedFamily, colour: usize, index: usize) -> FlatTerm {
    tf.term_at(colour, index).clone()
}

fn options_at<'a>(
    options: &'a [Vec<Vec<usize>>],
    keys: &[(usize, FlatTerm)],
    c: &usize,
    t: &FlatTerm,
) -> &'a Vec<Vec<usize>> {
    let i = keys
        .iter()
        .position(|(kc, kt)| kc == c && kt == t)
        .expect("key is listed");
    &options[i]
}

fn satisfies_terminal_conditions(
    o: &ColouredOperad,
    f: &Family,
    tf: &GradedFamily,
    h: &TerminalMap,
    graft_instances: &[(Vec<(usize, FlatTerm)>, (usize, FlatTerm))],
    self_maps: &[FamilyMap],
) -> Result<bool, Error> {
    // unit: the wrapped generator goes to the singleton multiset
    for c in 0..f.sizes.len() {
        for x in 0..f.sizes[c] {
            let t = canonical_term(o, &unit_term(o, c, x))?;
            if h[&(c, t)] != vec![f.flat(c, x)] {
                return Ok(false);
            }
        }
    }
    // grafting: image of the graft = union of the argument images
    for (arg_keys, target) in graft_instances {
        let mut union: Vec<usize> = arg_keys.iter().flat_map(|k| h[k].iter().copied()).collect();
        union.sort_unstable();
        if h[target] != union {
            return Ok(false);
        }
    }
    // naturality under every self-map of the family
    for phi in self_maps {
        let flat = flatten_family_map(phi);
        for ((c, t), value) in h {
            let image = free_map(o, phi, t)?;
            let mut mapped: Vec<usize> = value.iter().map(|&v| flat.apply(v)).collect();
            mapped.sort_unstable();
            if h[&(*c, image)] != mapped {
                return Ok(false);
            }
        }
    }
    let _ = tf;
    Ok(true)
}

// ---- linear monads -----------------------------------------------------------------

/// (T F)(x) = ⊔_{x′} Hom(p x′, p x) × F(x′), enumerated as
/// (pin, morphism, element) triples in that order.
pub fn linear_monad(
    pc: &PinnedCategory,
    f: &Family,
) -> Result<Vec<Vec<(usize, usize, usize)>>, Error> {
    if f.sizes.len() != pc.pinning.len() {
        return Err(Error::input("family has the wrong number of pins"));
    }
    let mut out = Vec::with_capacity(pc.pinning.len());
    for &obj in &pc.pinning {
        let mut level = Vec::new();
        for (xp, &src_obj) in pc.pinning.iter().enumerate() {
            for h in pc.cat.hom_between(src_obj, obj) {
                for v in 0..f.sizes[xp] {
                    level.push((xp, h, v));
                }
            }
        }
        out.push(level);
    }
    Ok(out)
}

/// True iff every operation is unary.
pub fn is_linear(o: &ColouredOperad) -> bool {
    (0..o.num_ops()).all(|op| o.arity(op) == 1)
}

/// Whether T F ⊔ T G → T(F ⊔ G) is a bijection at the given truncation:
/// term-by-term embedding of both sides, compared against the whole target.
/// Nullary operations break injectivity (both copies of a constant land on
/// the same term), mixing operations of arity ≥ 2 break surjectivity.
pub fn free_algebra_preserves_coproduct(
    o: &ColouredOperad,
    f: &Family,
    g: &Family,
    degree: usize,
) -> Result<bool, Error> {
    if f.sizes.len() != g.sizes.len() {
        return Err(Error::input("families have different colour counts"));
    }
    let fg = Family::new(
        f.sizes
            .iter()
            .zip(&g.sizes)
            .map(|(&a, &b)| a + b)
            .collect(),
    );
    let tf = free_algebra(o, f, degree)?;
    let tg = free_algebra(o, g, degree)?;
    let tfg = free_algebra(o, &fg, degree)?;
    let left = FamilyMap {
        maps: f
            .sizes
            .iter()
            .zip(&fg.sizes)
            .map(|(&n, &m)| FinMap::new(n, m, (0..n).collect()).unwrap())
            .collect(),
    };
    let right = FamilyMap {
        maps: f
            .sizes
            .iter()
            .zip(g.sizes.iter().zip(&fg.sizes))
            .map(|(&n, (&k, &m))| FinMap::new(k, m, (n..n + k).collect()).unwrap())
            .collect(),
    };
    let mut images: Vec<(usize, FlatTerm)> = Vec::new();
    for c in 0..tf.num_colours() {
        for t in tf.flatten(c) {
            images.push((c, free_map(o, &left, t)?));
        }
        for t in tg.flatten(c) {
            images.push((c, free_map(o, &right, t)?));
        }
    }
    images.sort();
    let mut full: Vec<(usize, FlatTerm)> = Vec::new();
    for c in 0..tfg.num_colours() {
        for t in tfg.flatten(c) {
            full.push((c, t.clone()));
        }
    }
    full.sort();
    Ok(images == full)
}

// ---- free operads -------------------------------------------------------------------

/// A rooted tree over one colour: leaves carry global input names, nodes
/// carry (arity, generator index) labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Tree {
    Leaf(usize),
    Node(usize, usize, Vec<Tree>),
}

pub fn tree_arity(t: &Tree) -> usize {
    match t {
        Tree::Leaf(_) => 1,
        Tree::Node(_, _, children) => children.iter().map(tree_arity).sum(),
    }
}

pub fn tree_vertices(t: &Tree) -> usize {
    match t {
        Tree::Leaf(_) => 0,
        Tree::Node(_, _, children) => 1 + children.iter().map(tree_vertices).sum::<usize>(),
    }
}

/// Least representative under the vertex moves
/// (e, children) ~ (e·σ, children∘σ), applied at every node.
pub fn canonical_tree(k: &SymSeq, t: &Tree) -> Tree {
    match t {
        Tree::Leaf(v) => Tree::Leaf(*v),
        Tree::Node(a, e, children) => {
            let ch: Vec<Tree> = children.iter().map(|c| canonical_tree(k, c)).collect();
            let mut best: Option<Tree> = None;
            for s in all_perms(*a) {
                let elem = k.act(*a, *e, &s);
                let moved: Vec<Tree> = (0..*a).map(|i| ch[s[i]].clone()).collect();
                let cand = Tree::Node(*a, elem, moved);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            best.unwrap()
        }
    }
}

fn relabel_leaves(t: &Tree, f: &impl Fn(usize) -> usize) -> Tree {
    match t {
        Tree::Leaf(v) => Tree::Leaf(f(*v)),
        Tree::Node(a, e, ch) => {
            Tree::Node(*a, *e, ch.iter().map(|c| relabel_leaves(c, f)).collect())
        }
    }
}

/// Substitute `inners[v]` into the leaf named `v`, renumbering leaves in
/// block order.
fn graft_tree(outer: &Tree, inners: &[Tree]) -> Tree {
    let offsets: Vec<usize> = inners
        .iter()
        .scan(0, |acc, t| {
            let v = *acc;
            *acc += tree_arity(t);
            Some(v)
        })
        .collect();
    fn go(t: &Tree, inners: &[Tree], offsets: &[usize]) -> Tree {
        match t {
            Tree::Leaf(v) => relabel_leaves(&inners[*v], &|w| offsets[*v] + w),
            Tree::Node(a, e, ch) => Tree::Node(
                *a,
                *e,
                ch.iter().map(|c| go(c, inners, offsets)).collect(),
            ),
        }
    }
    go(outer, inners, &offsets)
}

/// All trees using exactly the given leaf names, with at most `budget`
/// vertices; representatives are not yet canonical.
fn trees_with_leaves(k: &SymSeq, leaves: &[usize], budget: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    if leaves.len() == 1 {
        out.push(Tree::Leaf(leaves[0]));
    }
    if budget == 0 {
        return out;
    }
    for a in 0..=k.max_arity() {
        if k.size(a) == 0 || (a == 0 && !leaves.is_empty()) {
            continue;
        }
        for assignment in tuples(&vec![a; leaves.len()]) {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); a];
            for (i, &slot) in assignment.iter().enumerate() {
                blocks[slot].push(leaves[i]);
            }
            let mut partial: Vec<Vec<Tree>> = vec![Vec::new()];
            let mut spent: Vec<usize> = vec![0];
            for block in &blocks {
                let mut next = Vec::new();
                let mut next_spent = Vec::new();
                for (children, used) in partial.iter().zip(&spent) {
                    for t in trees_with_leaves(k, block, budget - 1 - used) {
                        let v = tree_vertices(&t);
                        let mut row = children.clone();
                        row.push(t);
                        next.push(row);
                        next_spent.push(used + v);
                    }
                }
                partial = next;
                spent = next_spent;
            }
            for e in 0..k.size(a) {
                for children in &partial {
                    out.push(Tree::Node(a, e, children.clone()));
                }
            }
        }
    }
    out
}

fn render_tree(t: &Tree) -> String {
    match t {
        Tree::Leaf(v) => (v + 1).to_string(),
        Tree::Node(a, e, ch) => {
            let inner: Vec<String> = ch.iter().map(render_tree).collect();
            format!("g{a}_{e}({})", inner.join(","))
        }
    }
}

/// The free operad on a one-colour generator sequence: operations at arity
/// `n` are canonical trees with leaves named `1..n` and at most
/// `vertex_bound` vertices; composition grafts. Grafts past the vertex
/// budget have no table entry, so [`ColouredOperad::validate`] reports
/// exactly the out-of-budget composites; within aligned bounds the table is
/// total.
pub fn free_operad(
    k: &SymSeq,
    arity_bound: usize,
    vertex_bound: usize,
) -> Result<ColouredOperad, Error> {
    if arity_bound < 1 || vertex_bound < 1 {
        return Err(Error::input("free operad needs both bounds ≥ 1"));
    }
    let mut by_arity: Vec<Vec<Tree>> = Vec::with_capacity(arity_bound + 1);
    for n in 0..=arity_bound {
        let leaves: Vec<usize> = (0..n).collect();
        let set: BTreeSet<Tree> = trees_with_leaves(k, &leaves, vertex_bound)
            .iter()
            .map(|t| canonical_tree(k, t))
            .collect();
        by_arity.push(set.into_iter().collect());
    }
    let mut ops = Vec::new();
    let mut index: BTreeMap<Tree, OpId> = BTreeMap::new();
    let mut trees = Vec::new();
    for (n, level) in by_arity.iter().enumerate() {
        for t in level {
            index.insert(t.clone(), ops.len());
            ops.push(OpData {
                name: render_tree(t),
                inputs: vec![0; n],
                output: 0,
            });
            trees.push(t.clone());
        }
    }
    let ident = *index
        .get(&Tree::Leaf(0))
        .ok_or_else(|| Error::input("the identity tree is missing"))?;
    let mut sym = Vec::new();
    for (op, t) in trees.iter().enumerate() {
        let n = tree_arity_of_op(t);
        for s in all_perms(n) {
            if s == (0..n).collect::<Vec<_>>() {
                continue;
            }
            let inv = perm_inverse(&s);
            let moved = canonical_tree(k, &relabel_leaves(t, &|v| inv[v]));
            sym.push((op, s, index[&moved]));
        }
    }
    let mut comp = Vec::new();
    for (op, t) in trees.iter().enumerate() {
        let n = tree_arity_of_op(t);
        if n == 0 {
            continue;
        }
        for fam in inner_families(&trees, n, arity_bound) {
            let inners: Vec<Tree> = fam.iter().map(|&p| trees[p].clone()).collect();
            let grafted = graft_tree(t, &inners);
            if tree_vertices(&grafted) > vertex_bound {
                continue;
            }
            comp.push((op, fam, index[&canonical_tree(k, &grafted)]));
        }
    }
    ColouredOperad::new(
        vec!["c".into()],
        arity_bound,
        ops,
        sym,
        comp,
        vec![ident],
    )
}

fn tree_arity_of_op(t: &Tree) -> usize {
    tree_arity(t)
}

/// Families of `slots` operation indices with total arity ≤ `bound`.
fn inner_families(trees: &[Tree], slots: usize, bound: usize) -> Vec<Vec<OpId>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        trees: &[Tree],
        slots: usize,
        left: usize,
        cur: &mut Vec<OpId>,
        out: &mut Vec<Vec<OpId>>,
    ) {
        if cur.len() == slots {
            out.push(cur.clone());
            return;
        }
        for (p, t) in trees.iter().enumerate() {
            let a = tree_arity(t);
            if a <= left {
                cur.push(p);
                go(trees, slots, left - a, cur, out);
                cur.pop();
            }
        }
    }
    go(trees, slots, bound, &mut cur, &mut out);
    out
}
