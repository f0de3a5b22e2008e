//! Finite categories, pinnings, truncated simplicial sets, nerves, and the
//! Segal/completeness checks.
//!
//! A [`CategoryData`] is a fully tabulated finite category. A
//! [`PinnedCategory`] adds a map from an index set onto the objects,
//! surjective up to isomorphism; its [`nerve`] is a truncated simplicial set
//! whose `n`-simplices are chains of `n` composable morphisms together with
//! a lift of each vertex along the pinning. [`is_segal`] checks the spine
//! condition; [`is_complete`] implements two independent completeness tests
//! (locality against the two-object contractible groupoid `E`, and
//! every-invertible-edge-is-degenerate) whose agreement is asserted by the
//! suites rather than assumed.
//!
//! Two bridges tie the module to the rest of the crate: [`operators_of`]
//! builds the category of operators of a plain category directly from tuples,
//! reversed position maps, and componentwise morphisms, and
//! [`linear_roundtrip`] compares the nerve of a pinned category levelwise
//! with the simplex counts predicted by the Lawvere theory of its linear
//! monad.

use crate::error::Error;
use crate::finspan::{enumerate_maps, FinMap, Span};
use crate::lawvere::theory_of;
use crate::monad::{linear_monad, Family};
use crate::opcat::{table_category, OperatorCategory, TableMor};
use crate::operad::{ColouredOperad, OpData};
use std::collections::{BTreeMap, HashMap, HashSet};

/// One morphism of a tabulated category.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomData {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category with explicit composition tables. Composition is
/// stored diagrammatically: the entry for `(f, g)` is `f;g` ("f then g").
#[derive(Clone, Debug)]
pub struct CategoryData {
    objects: Vec<String>,
    homs: Vec<HomData>,
    comp: HashMap<(usize, usize), usize>,
    ids: Vec<usize>,
}

impl CategoryData {
    pub fn new(
        objects: Vec<String>,
        homs: Vec<HomData>,
        comp_entries: Vec<(usize, usize, usize)>,
        ids: Vec<usize>,
    ) -> Result<Self, Error> {
        let n_obj = objects.len();
        let n_hom = homs.len();
        {
            let mut seen = HashSet::new();
            if objects.iter().any(|o| !seen.insert(o.clone())) {
                return Err(Error::input("duplicate object name"));
            }
            let mut seen = HashSet::new();
            if homs.iter().any(|h| !seen.insert(h.name.clone())) {
                return Err(Error::input("duplicate morphism name"));
            }
        }
        for h in &homs {
            if h.src >= n_obj || h.tgt >= n_obj {
                return Err(Error::input(format!(
                    "morphism {} has an out-of-range endpoint",
                    h.name
                )));
            }
        }
        if ids.len() != n_obj {
            return Err(Error::input("one identity per object required"));
        }
        for (x, &i) in ids.iter().enumerate() {
            if i >= n_hom || homs[i].src != x || homs[i].tgt != x {
                return Err(Error::input(format!(
                    "identity of object {} is not an endomorphism of it",
                    objects[x]
                )));
            }
        }
        let mut comp = HashMap::new();
        for (f, g, h) in comp_entries {
            if f >= n_hom || g >= n_hom || h >= n_hom {
                return Err(Error::input("composition entry names unknown morphism"));
            }
            if homs[f].tgt != homs[g].src {
                return Err(Error::input(format!(
                    "composition entry ({}, {}) is not composable",
                    homs[f].name, homs[g].name
                )));
            }
            if homs[h].src != homs[f].src || homs[h].tgt != homs[g].tgt {
                return Err(Error::input(format!(
                    "composite of ({}, {}) has wrong endpoints",
                    homs[f].name, homs[g].name
                )));
            }
            if let Some(&old) = comp.get(&(f, g)) {
                if old != h {
                    return Err(Error::input("conflicting composition entries"));
                }
            }
            comp.insert((f, g), h);
        }
        Ok(CategoryData {
            objects,
            homs,
            comp,
            ids,
        })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn num_homs(&self) -> usize {
        self.homs.len()
    }

    pub fn hom(&self, f: usize) -> &HomData {
        &self.homs[f]
    }

    pub fn hom_index(&self, name: &str) -> Option<usize> {
        self.homs.iter().position(|h| h.name == name)
    }

    pub fn id_of(&self, x: usize) -> usize {
        self.ids[x]
    }

    pub fn comp_entries(&self) -> Vec<(usize, usize, usize)> {
        let mut v: Vec<_> = self.comp.iter().map(|(&(f, g), &h)| (f, g, h)).collect();
        v.sort_unstable();
        v
    }

    /// Diagrammatic composite `f;g`.
    pub fn compose(&self, f: usize, g: usize) -> Result<usize, Error> {
        if self.homs[f].tgt != self.homs[g].src {
            return Err(Error::input(format!(
                "{} and {} are not composable",
                self.homs[f].name, self.homs[g].name
            )));
        }
        self.comp.get(&(f, g)).copied().ok_or_else(|| {
            Error::input(format!(
                "composition table has no entry for ({}, {})",
                self.homs[f].name, self.homs[g].name
            ))
        })
    }

    pub fn hom_between(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.homs.len())
            .filter(|&f| self.homs[f].src == x && self.homs[f].tgt == y)
            .collect()
    }

    /// Category laws: total composition, identity laws, associativity.
    pub fn validate(&self) -> Vec<String> {
        let mut report = Vec::new();
        for f in 0..self.homs.len() {
            for g in 0..self.homs.len() {
                if self.homs[f].tgt != self.homs[g].src {
                    continue;
                }
                let Some(&fg) = self.comp.get(&(f, g)) else {
                    report.push(format!(
                        "missing composite ({}, {})",
                        self.homs[f].name, self.homs[g].name
                    ));
                    continue;
                };
                for h in 0..self.homs.len() {
                    if self.homs[g].tgt != self.homs[h].src {
                        continue;
                    }
                    let (Some(&gh), Some(&fg_h)) =
                        (self.comp.get(&(g, h)), self.comp.get(&(fg, h)))
                    else {
                        continue; // missing entries already reported
                    };
                    if let Some(&f_gh) = self.comp.get(&(f, gh)) {
                        if fg_h != f_gh {
                            report.push(format!(
                                "associativity fails at ({}, {}, {})",
                                self.homs[f].name, self.homs[g].name, self.homs[h].name
                            ));
                        }
                    }
                }
            }
        }
        for f in 0..self.homs.len() {
            let (s, t) = (self.homs[f].src, self.homs[f].tgt);
            if self.comp.get(&(self.ids[s], f)) != Some(&f) {
                report.push(format!("left identity fails at {}", self.homs[f].name));
            }
            if self.comp.get(&(f, self.ids[t])) != Some(&f) {
                report.push(format!("right identity fails at {}", self.homs[f].name));
            }
        }
        report
    }

    /// Whether `f` has a two-sided inverse.
    pub fn is_iso_mor(&self, f: usize) -> bool {
        let (s, t) = (self.homs[f].src, self.homs[f].tgt);
        self.hom_between(t, s).into_iter().any(|g| {
            self.comp.get(&(f, g)) == Some(&self.ids[s])
                && self.comp.get(&(g, f)) == Some(&self.ids[t])
        })
    }

    pub fn objects_isomorphic(&self, x: usize, y: usize) -> bool {
        x == y || self.hom_between(x, y).into_iter().any(|f| self.is_iso_mor(f))
    }

    // ---- stock categories -------------------------------------------------

    pub fn point() -> Self {
        CategoryData::new(
            vec!["*".into()],
            vec![HomData {
                name: "id".into(),
                src: 0,
                tgt: 0,
            }],
            vec![(0, 0, 0)],
            vec![0],
        )
        .unwrap()
    }

    /// Two objects, one non-identity morphism between them.
    pub fn walking_arrow() -> Self {
        CategoryData::new(
            vec!["a".into(), "b".into()],
            vec![
                HomData {
                    name: "id_a".into(),
                    src: 0,
                    tgt: 0,
                },
                HomData {
                    name: "id_b".into(),
                    src: 1,
                    tgt: 1,
                },
                HomData {
                    name: "f".into(),
                    src: 0,
                    tgt: 1,
                },
            ],
            vec![(0, 0, 0), (1, 1, 1), (0, 2, 2), (2, 1, 2)],
            vec![0, 1],
        )
        .unwrap()
    }

    pub fn discrete(n: usize) -> Self {
        let objects = (0..n).map(|i| format!("x{i}")).collect();
        let homs = (0..n)
            .map(|i| HomData {
                name: format!("id_x{i}"),
                src: i,
                tgt: i,
            })
            .collect();
        let comp = (0..n).map(|i| (i, i, i)).collect();
        CategoryData::new(objects, homs, comp, (0..n).collect()).unwrap()
    }

    /// The contractible groupoid on `n` objects: exactly one morphism in
    /// every direction.
    pub fn contractible_groupoid(n: usize) -> Self {
        let objects = (0..n).map(|i| format!("x{i}")).collect();
        let mut homs = Vec::new();
        for s in 0..n {
            for t in 0..n {
                homs.push(HomData {
                    name: format!("u_{s}_{t}"),
                    src: s,
                    tgt: t,
                });
            }
        }
        let mut comp = Vec::new();
        for s in 0..n {
            for m in 0..n {
                for t in 0..n {
                    comp.push((s * n + m, m * n + t, s * n + t));
                }
            }
        }
        let ids = (0..n).map(|i| i * n + i).collect();
        CategoryData::new(objects, homs, comp, ids).unwrap()
    }

    /// Category of a preorder: `related[x][y]` ⇒ one morphism x → y.
    /// The relation must be reflexive and transitive.
    pub fn from_preorder(related: &[Vec<bool>]) -> Result<Self, Error> {
        let n = related.len();
        for x in 0..n {
            if related[x].len() != n || !related[x][x] {
                return Err(Error::input("preorder must be square and reflexive"));
            }
            for y in 0..n {
                for z in 0..n {
                    if related[x][y] && related[y][z] && !related[x][z] {
                        return Err(Error::input("preorder must be transitive"));
                    }
                }
            }
        }
        let objects = (0..n).map(|i| format!("x{i}")).collect();
        let mut homs = Vec::new();
        let mut index = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                if related[x][y] {
                    index.insert((x, y), homs.len());
                    homs.push(HomData {
                        name: format!("le_{x}_{y}"),
                        src: x,
                        tgt: y,
                    });
                }
            }
        }
        let mut comp = Vec::new();
        for (&(x, y), &f) in &index {
            for z in 0..n {
                if related[y][z] {
                    comp.push((f, index[&(y, z)], index[&(x, z)]));
                }
            }
        }
        let ids = (0..n).map(|x| index[&(x, x)]).collect();
        CategoryData::new(objects, homs, comp, ids)
    }

    /// One-object category whose endomorphisms form the given monoid
    /// (`table[a][b]` = a·b, diagrammatically a then b; `unit` its identity).
    pub fn delooping(table: &[Vec<usize>], unit: usize) -> Result<Self, Error> {
        let n = table.len();
        if unit >= n || table.iter().any(|r| r.len() != n) {
            return Err(Error::input("malformed monoid table"));
        }
        let homs = (0..n)
            .map(|i| HomData {
                name: format!("m{i}"),
                src: 0,
                tgt: 0,
            })
            .collect();
        let mut comp = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if table[a][b] >= n {
                    return Err(Error::input("monoid table value out of range"));
                }
                comp.push((a, b, table[a][b]));
            }
        }
        CategoryData::new(vec!["*".into()], homs, comp, vec![unit])
    }
}

/// A category together with a pinning: a map from an index set onto the
/// objects, surjective up to isomorphism.
#[derive(Clone, Debug)]
pub struct PinnedCategory {
    pub cat: CategoryData,
    pub pinning: Vec<usize>,
}

impl PinnedCategory {
    pub fn new(cat: CategoryData, pinning: Vec<usize>) -> Result<Self, Error> {
        if let Some(&x) = pinning.iter().find(|&&x| x >= cat.num_objects()) {
            return Err(Error::input(format!("pinning hits unknown object {x}")));
        }
        let pc = PinnedCategory { cat, pinning };
        if !pc.pinning_surjective_up_to_iso() {
            return Err(Error::input(
                "pinning misses an isomorphism class of objects",
            ));
        }
        Ok(pc)
    }

    pub fn identity_pinning(cat: CategoryData) -> Self {
        let pinning = (0..cat.num_objects()).collect();
        PinnedCategory { cat, pinning }
    }

    pub fn pinning_surjective_up_to_iso(&self) -> bool {
        (0..self.cat.num_objects())
            .all(|x| self.pinning.iter().any(|&p| self.cat.objects_isomorphic(p, x)))
    }
}

/// A simplicial set truncated at level `N`: sets `S_0..S_N` with face and
/// degeneracy tables satisfying the simplicial identities in range.
///
/// `faces[n][i]` is dᵢ: Sₙ → Sₙ₋₁ (present for 1 ≤ n ≤ N, 0 ≤ i ≤ n;
/// `faces[0]` is an empty placeholder), and `degeneracies[n][i]` is
/// sᵢ: Sₙ → Sₙ₊₁ (present for 0 ≤ n < N, 0 ≤ i ≤ n).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSimplicialSet {
    pub levels: Vec<usize>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

impl TruncatedSimplicialSet {
    pub fn new(
        levels: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, Error> {
        let n_max = levels.len().checked_sub(1).ok_or_else(|| {
            Error::input("a simplicial set needs at least level 0")
        })?;
        if faces.len() != n_max + 1 || !faces[0].is_empty() {
            return Err(Error::input(
                "faces must have one (possibly empty) block per level, starting empty",
            ));
        }
        if degeneracies.len() != n_max {
            return Err(Error::input("degeneracies must cover levels 0..N-1"));
        }
        for n in 1..=n_max {
            if faces[n].len() != n + 1 {
                return Err(Error::input(format!("level {n} needs {} face maps", n + 1)));
            }
            for (i, table) in faces[n].iter().enumerate() {
                check_table(table, levels[n], levels[n - 1], &format!("d{i} at level {n}"))?;
            }
        }
        for n in 0..n_max {
            if degeneracies[n].len() != n + 1 {
                return Err(Error::input(format!(
                    "level {n} needs {} degeneracy maps",
                    n + 1
                )));
            }
            for (i, table) in degeneracies[n].iter().enumerate() {
                check_table(table, levels[n], levels[n + 1], &format!("s{i} at level {n}"))?;
            }
        }
        let t = TruncatedSimplicialSet {
            levels,
            faces,
            degeneracies,
        };
        let violations = t.simplicial_identity_violations();
        if let Some(v) = violations.first() {
            return Err(Error::input(format!("simplicial identity fails: {v}")));
        }
        Ok(t)
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.degeneracies[n][i][x]
    }

    /// All violated simplicial identities within the truncation window.
    pub fn simplicial_identity_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n_max = self.max_level();
        // d_i d_j = d_{j-1} d_i for i < j
        for n in 2..=n_max {
            for j in 0..=n {
                for i in 0..j {
                    for x in 0..self.levels[n] {
                        let a = self.face(n - 1, i, self.face(n, j, x));
                        let b = self.face(n - 1, j - 1, self.face(n, i, x));
                        if a != b {
                            out.push(format!("d{i} d{j} ≠ d{} d{i} at level {n}", j - 1));
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i ≤ j
        for n in 0..n_max.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for x in 0..self.levels[n] {
                        let a = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                        let b = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                        if a != b {
                            out.push(format!("s{i} s{j} ≠ s{} s{i} at level {n}", j + 1));
                        }
                    }
                }
            }
        }
        // d_i s_j mixed identities
        for n in 0..n_max {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for x in 0..self.levels[n] {
                        let lhs = self.face(n + 1, i, self.degeneracy(n, j, x));
                        let rhs = if i == j || i == j + 1 {
                            x
                        } else if i < j {
                            self.degeneracy(n - 1, j - 1, self.face(n, i, x))
                        } else {
                            self.degeneracy(n - 1, j, self.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            out.push(format!("d{i} s{j} identity fails at level {n}"));
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// The `k`-th spine edge (vertices k-1, k) of an `n`-simplex, obtained
    /// by face maps: drop vertices above k, then drop vertices below k-1.
    pub fn spine_edge(&self, n: usize, k: usize, x: usize) -> usize {
        debug_assert!(1 <= k && k <= n);
        let mut cur = x;
        for m in (k + 1..=n).rev() {
            cur = self.face(m, m, cur); // drop the top vertex of an m-simplex
        }
        for m in (2..=k).rev() {
            cur = self.face(m, 0, cur); // drop the bottom vertex
        }
        cur
    }
}

fn check_table(table: &[usize], dom: usize, cod: usize, what: &str) -> Result<(), Error> {
    if table.len() != dom {
        return Err(Error::input(format!("{what}: table has wrong length")));
    }
    if table.iter().any(|&v| v >= cod) {
        return Err(Error::input(format!("{what}: value out of range")));
    }
    Ok(())
}

/// Nerve of a pinned category, truncated at level `n_max`: an `n`-simplex is
/// a chain of `n` composable morphisms plus a lift of each vertex along the
/// pinning. Simplices are ordered lexicographically by (lifts, chain).
pub fn nerve(pc: &PinnedCategory, n_max: usize) -> Result<TruncatedSimplicialSet, Error> {
    if n_max < 2 {
        return Err(Error::input("nerve needs truncation level at least 2"));
    }
    let report = pc.cat.validate();
    if let Some(v) = report.first() {
        return Err(Error::input(format!("category laws fail: {v}")));
    }
    // simplices per level, with an index for table building
    let mut simplices: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::new();
    let mut index: Vec<BTreeMap<(Vec<usize>, Vec<usize>), usize>> = Vec::new();
    for n in 0..=n_max {
        let mut level = Vec::new();
        // chains: lifts x_0..x_n, morphisms f_1..f_n with
        // f_i ∈ hom(p(x_{i-1}), p(x_i))
        let mut stack: Vec<(Vec<usize>, Vec<usize>)> =
            (0..pc.pinning.len()).map(|x| (vec![x], vec![])).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for (lifts, chain) in stack {
                let last = pc.pinning[*lifts.last().unwrap()];
                for x in 0..pc.pinning.len() {
                    for f in pc.cat.hom_between(last, pc.pinning[x]) {
                        let mut lifts2 = lifts.clone();
                        lifts2.push(x);
                        let mut chain2 = chain.clone();
                        chain2.push(f);
                        next.push((lifts2, chain2));
                    }
                }
            }
            stack = next;
        }
        stack.sort();
        let idx: BTreeMap<_, _> = stack
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        level.extend(stack);
        index.push(idx);
        simplices.push(level);
    }

    let levels: Vec<usize> = simplices.iter().map(|l| l.len()).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for n in 1..=n_max {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let mut table = Vec::with_capacity(levels[n]);
            for (lifts, chain) in &simplices[n] {
                let mut l2 = lifts.clone();
                let mut c2 = chain.clone();
                if i == 0 {
                    l2.remove(0);
                    c2.remove(0);
                } else if i == n {
                    l2.pop();
                    c2.pop();
                } else {
                    l2.remove(i);
                    let g = c2.remove(i);
                    c2[i - 1] = pc.cat.compose(chain[i - 1], g)?;
                }
                table.push(index[n - 1][&(l2, c2)]);
            }
            per_i.push(table);
        }
        faces.push(per_i);
    }
    let mut degeneracies = Vec::new();
    for n in 0..n_max {
        let mut per_i = Vec::new();
        for i in 0..=n {
            let mut table = Vec::with_capacity(levels[n]);
            for (lifts, chain) in &simplices[n] {
                let mut l2 = lifts.clone();
                l2.insert(i, lifts[i]);
                let mut c2 = chain.clone();
                c2.insert(i, pc.cat.id_of(pc.pinning[lifts[i]]));
                table.push(index[n + 1][&(l2, c2)]);
            }
            per_i.push(table);
        }
        degeneracies.push(per_i);
    }
    TruncatedSimplicialSet::new(levels, faces, degeneracies)
}

/// The object `E`: nerve of the point with a two-element pinning
/// (equivalently of the contractible two-object groupoid). Levels 2^{n+1}.
pub fn e_object(n_max: usize) -> TruncatedSimplicialSet {
    let pc = PinnedCategory::new(CategoryData::point(), vec![0, 0]).unwrap();
    nerve(&pc, n_max).unwrap()
}

/// The terminal simplicial set: a single simplex in every level.
pub fn point_simplicial(n_max: usize) -> TruncatedSimplicialSet {
    nerve(
        &PinnedCategory::identity_pinning(CategoryData::point()),
        n_max,
    )
    .unwrap()
}

/// Spine condition: Sₙ → S₁ ×_{S₀} … ×_{S₀} S₁ is a bijection for every
/// 2 ≤ n ≤ N.
pub fn is_segal(t: &TruncatedSimplicialSet) -> bool {
    for n in 2..=t.max_level() {
        let mut seen = HashSet::new();
        for x in 0..t.levels[n] {
            let spine: Vec<usize> = (1..=n).map(|k| t.spine_edge(n, k, x)).collect();
            if !seen.insert(spine) {
                return false; // spine map not injective
            }
        }
        // compatible spines: consecutive edges share a vertex
        // (d0 = target vertex, d1 = source vertex)
        let mut compatible = 0usize;
        let mut count_chains = vec![1u64; t.levels[0]];
        for _ in 0..n {
            let mut next = vec![0u64; t.levels[0]];
            for e in 0..t.levels[1] {
                let s = t.face(1, 1, e);
                let tt = t.face(1, 0, e);
                next[tt] += count_chains[s];
            }
            count_chains = next;
        }
        compatible += count_chains.iter().sum::<u64>() as usize;
        if seen.len() != compatible {
            return false;
        }
    }
    true
}

/// Composite edge of the spine pair `(e, f)` in a Segal set: the unique
/// 2-simplex with d₂ = e and d₀ = f has d₁ = the composite.
fn segal_composite(t: &TruncatedSimplicialSet, e: usize, f: usize) -> Option<usize> {
    let mut found = None;
    for x in 0..t.levels[2] {
        if t.face(2, 2, x) == e && t.face(2, 0, x) == f {
            if found.is_some() {
                return None; // not unique: not Segal
            }
            found = Some(t.face(2, 1, x));
        }
    }
    found
}

/// Completeness via invertible edges: every 1-simplex with a two-sided
/// Segal inverse is degenerate.
pub fn complete_via_invertibles(t: &TruncatedSimplicialSet) -> Result<bool, Error> {
    if !is_segal(t) {
        return Err(Error::input("completeness requires a Segal set"));
    }
    let degenerate: HashSet<usize> = (0..t.levels[0]).map(|v| t.degeneracy(0, 0, v)).collect();
    for e in 0..t.levels[1] {
        let src = t.face(1, 1, e);
        let tgt = t.face(1, 0, e);
        let invertible = (0..t.levels[1]).any(|f| {
            t.face(1, 1, f) == tgt
                && t.face(1, 0, f) == src
                && segal_composite(t, e, f) == Some(t.degeneracy(0, 0, src))
                && segal_composite(t, f, e) == Some(t.degeneracy(0, 0, tgt))
        });
        if invertible && !degenerate.contains(&e) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All simplicial maps X → T (levelwise tables commuting with every face
/// and degeneracy inside the truncation), by backtracking.
pub fn simplicial_maps(
    x: &TruncatedSimplicialSet,
    t: &TruncatedSimplicialSet,
) -> Result<Vec<Vec<Vec<usize>>>, Error> {
    if x.max_level() != t.max_level() {
        return Err(Error::input("simplicial maps need equal truncation levels"));
    }
    let n_max = x.max_level();
    // assignment order: level by level, element by element
    let mut maps = Vec::new();
    let mut partial: Vec<Vec<Option<usize>>> =
        (0..=n_max).map(|n| vec![None; x.levels[n]]).collect();
    fn consistent(
        x: &TruncatedSimplicialSet,
        t: &TruncatedSimplicialSet,
        partial: &[Vec<Option<usize>>],
        n: usize,
        e: usize,
        v: usize,
    ) -> bool {
        // check every face/degeneracy equation whose other side is assigned
        if n >= 1 {
            for i in 0..=n {
                if let Some(w) = partial[n - 1][x.face(n, i, e)] {
                    if t.face(n, i, v) != w {
                        return false;
                    }
                }
            }
        }
        if n < x.max_level() {
            for i in 0..=n {
                if let Some(w) = partial[n + 1][x.degeneracy(n, i, e)] {
                    if t.degeneracy(n, i, v) != w {
                        return false;
                    }
                }
            }
        }
        // degeneracies of lower simplices landing on e
        if n >= 1 {
            for i in 0..n {
                for lower in 0..x.levels[n - 1] {
                    if x.degeneracy(n - 1, i, lower) == e {
                        if let Some(w) = partial[n - 1][lower] {
                            if t.degeneracy(n - 1, i, w) != v {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
    fn dfs(
        x: &TruncatedSimplicialSet,
        t: &TruncatedSimplicialSet,
        partial: &mut Vec<Vec<Option<usize>>>,
        pos: usize,
        flat: &[(usize, usize)],
        maps: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == flat.len() {
            maps.push(
                partial
                    .iter()
                    .map(|lvl| lvl.iter().map(|v| v.unwrap()).collect())
                    .collect(),
            );
            return;
        }
        let (n, e) = flat[pos];
        for v in 0..t.levels[n] {
            if consistent(x, t, partial, n, e, v) {
                partial[n][e] = Some(v);
                dfs(x, t, partial, pos + 1, flat, maps);
                partial[n][e] = None;
            }
        }
    }
    let flat: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..x.levels[n]).map(move |e| (n, e)))
        .collect();
    dfs(x, t, &mut partial, 0, &flat, &mut maps);
    Ok(maps)
}

/// Completeness via E-locality: restriction Map(E, T) → Map(pt, T) ≅ S₀
/// along either vertex of E is a bijection.
pub fn complete_via_e_locality(t: &TruncatedSimplicialSet) -> Result<bool, Error> {
    if !is_segal(t) {
        return Err(Error::input("completeness requires a Segal set"));
    }
    let e = e_object(t.max_level());
    let maps = simplicial_maps(&e, t)?;
    // restriction to the first vertex of E
    let mut hit = vec![0usize; t.levels[0]];
    for m in &maps {
        hit[m[0][0]] += 1;
    }
    Ok(hit.iter().all(|&c| c == 1))
}

/// Completeness of a Segal set. Runs the E-locality test; the suites assert
/// agreement with [`complete_via_invertibles`] separately.
pub fn is_complete(t: &TruncatedSimplicialSet) -> Result<bool, Error> {
    complete_via_e_locality(t)
}

/// Rebuild a category from a Segal set: objects S₀, morphisms S₁,
/// composition by the unique filler. Errors if the set is not Segal or the
/// resulting tables break a category law (possible only at truncation 2).
pub fn category_from_segal(t: &TruncatedSimplicialSet) -> Result<CategoryData, Error> {
    if !is_segal(t) {
        return Err(Error::input("category extraction requires a Segal set"));
    }
    let objects = (0..t.levels[0]).map(|v| format!("v{v}")).collect();
    let homs = (0..t.levels[1])
        .map(|e| HomData {
            name: format!("e{e}"),
            src: t.face(1, 1, e),
            tgt: t.face(1, 0, e),
        })
        .collect();
    let mut comp = Vec::new();
    for f in 0..t.levels[1] {
        for g in 0..t.levels[1] {
            if t.face(1, 0, f) != t.face(1, 1, g) {
                continue;
            }
            let h = segal_composite(t, f, g)
                .ok_or_else(|| Error::input("Segal filler missing"))?;
            comp.push((f, g, h));
        }
    }
    let ids = (0..t.levels[0]).map(|v| t.degeneracy(0, 0, v)).collect();
    let cat = CategoryData::new(objects, homs, comp, ids)?;
    let report = cat.validate();
    if let Some(v) = report.first() {
        return Err(Error::input(format!("extracted tables break laws: {v}")));
    }
    Ok(cat)
}

/// Isomorphism of finite categories by backtracking over object and
/// morphism bijections.
pub fn categories_isomorphic(a: &CategoryData, b: &CategoryData) -> bool {
    if a.num_objects() != b.num_objects() || a.num_homs() != b.num_homs() {
        return false;
    }
    let n = a.num_objects();
    // object bijection candidates filtered by hom-set sizes
    fn extend(
        a: &CategoryData,
        b: &CategoryData,
        obj_map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        let n = a.num_objects();
        if x == n {
            // try to match morphisms given the object bijection
            let mut mor_map: Vec<Option<usize>> = vec![None; a.num_homs()];
            let mut used_m = vec![false; b.num_homs()];
            return match_homs(a, b, obj_map, &mut mor_map, &mut used_m, 0);
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            obj_map[x] = Some(y);
            used[y] = true;
            let ok = (0..=x).all(|x2| {
                let y2 = obj_map[x2].unwrap();
                a.hom_between(x, x2).len() == b.hom_between(y, y2).len()
                    && a.hom_between(x2, x).len() == b.hom_between(y2, y).len()
            });
            if ok && extend(a, b, obj_map, used, x + 1) {
                return true;
            }
            obj_map[x] = None;
            used[y] = false;
        }
        false
    }
    fn match_homs(
        a: &CategoryData,
        b: &CategoryData,
        obj_map: &[Option<usize>],
        mor_map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        f: usize,
    ) -> bool {
        if f == a.num_homs() {
            // composition and identities
            for x in 0..a.num_objects() {
                if mor_map[a.id_of(x)] != Some(b.id_of(obj_map[x].unwrap())) {
                    return false;
                }
            }
            for p in 0..a.num_homs() {
                for q in 0..a.num_homs() {
                    if a.hom(p).tgt != a.hom(q).src {
                        continue;
                    }
                    let (Ok(pq), Ok(pq_b)) = (
                        a.compose(p, q),
                        b.compose(mor_map[p].unwrap(), mor_map[q].unwrap()),
                    ) else {
                        return false;
                    };
                    if mor_map[pq] != Some(pq_b) {
                        return false;
                    }
                }
            }
            return true;
        }
        let (s, t) = (a.hom(f).src, a.hom(f).tgt);
        let (bs, bt) = (obj_map[s].unwrap(), obj_map[t].unwrap());
        for g in b.hom_between(bs, bt) {
            if used[g] {
                continue;
            }
            mor_map[f] = Some(g);
            used[g] = true;
            if match_homs(a, b, obj_map, mor_map, used, f + 1) {
                return true;
            }
            mor_map[f] = None;
            used[g] = false;
        }
        false
    }
    let mut obj_map = vec![None; n];
    let mut used = vec![false; n];
    extend(a, b, &mut obj_map, &mut used, 0)
}

// ---------------------------------------------------------------------------
// The category of operators of a plain category
// ---------------------------------------------------------------------------

/// All morphisms of tuples over `c`: a reversed map `u` sending target
/// positions to source positions, together with a morphism of `c` from
/// `src[u(j)]` to `tgt[j]` for every target position `j`. Pairs are listed
/// with `u` in [`enumerate_maps`] order and components in odometer order,
/// last position fastest.
pub fn tuple_morphisms(
    c: &CategoryData,
    src: &[usize],
    tgt: &[usize],
) -> Vec<(FinMap, Vec<usize>)> {
    let mut out = Vec::new();
    for u in enumerate_maps(tgt.len(), src.len()) {
        let choices: Vec<Vec<usize>> = (0..tgt.len())
            .map(|j| c.hom_between(src[u.apply(j)], tgt[j]))
            .collect();
        if choices.iter().any(|v| v.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; tgt.len()];
        'odometer: loop {
            let fs: Vec<usize> = (0..tgt.len()).map(|j| choices[j][idx[j]]).collect();
            out.push((u.clone(), fs));
            let mut k = tgt.len();
            while k > 0 {
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'odometer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    out
}

fn tuple_morphism_name(c: &CategoryData, s: usize, t: usize, u: &FinMap, fs: &[usize]) -> String {
    let u_part: Vec<String> = u.table().iter().map(|x| x.to_string()).collect();
    let f_part: Vec<String> = fs.iter().map(|&f| c.hom(f).name.clone()).collect();
    format!("s{s}t{t}:u[{}]:f[{}]", u_part.join(","), f_part.join(","))
}

/// The category of operators of a plain category: objects are tuples of
/// objects of `c` of length at most `tuple_bound`; a morphism is an
/// inert-backward span (the graph of a reversed position map) carrying a
/// morphism of `c` into each target position, composed componentwise. The
/// fibre over a length-`n` tuple shape is the `n`-fold power of `c`, and the
/// whole category satisfies the conditions of
/// [`crate::opcat::check_spf_conditions`].
pub fn operators_of(c: &CategoryData, tuple_bound: usize) -> Result<OperatorCategory, Error> {
    let k = c.num_objects();
    let colours: Vec<String> = (0..k).map(|x| c.object_name(x).to_string()).collect();
    let mut objects = Vec::new();
    for len in 0..=tuple_bound {
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for t in &stack {
                for x in 0..k {
                    let mut t2 = t.clone();
                    t2.push(x);
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
    let tms: Vec<Vec<Vec<(FinMap, Vec<usize>)>>> = objects
        .iter()
        .map(|st| {
            objects
                .iter()
                .map(|tt| tuple_morphisms(c, st, tt))
                .collect()
        })
        .collect();
    let mut morphisms = Vec::new();
    for (s, row) in tms.iter().enumerate() {
        for (t, cell) in row.iter().enumerate() {
            for (u, fs) in cell {
                morphisms.push(TableMor {
                    name: tuple_morphism_name(c, s, t, u, fs),
                    src: s,
                    tgt: t,
                    span: Span::inert_from_reverse(u),
                });
            }
        }
    }
    let ids: Vec<String> = objects
        .iter()
        .enumerate()
        .map(|(x, xt)| {
            let u = FinMap::identity(xt.len());
            let fs: Vec<usize> = xt.iter().map(|&o| c.id_of(o)).collect();
            tuple_morphism_name(c, x, x, &u, &fs)
        })
        .collect();
    let mut comp = Vec::new();
    for s in 0..objects.len() {
        for t in 0..objects.len() {
            for (u, fs) in &tms[s][t] {
                for (w, wt) in objects.iter().enumerate() {
                    for (v, gs) in &tms[t][w] {
                        let cu = v.then(u)?;
                        let mut cs = Vec::with_capacity(wt.len());
                        for j in 0..wt.len() {
                            cs.push(c.compose(fs[v.apply(j)], gs[j])?);
                        }
                        comp.push((
                            tuple_morphism_name(c, s, t, u, fs),
                            tuple_morphism_name(c, t, w, v, gs),
                            tuple_morphism_name(c, s, w, &cu, &cs),
                        ));
                    }
                }
            }
        }
    }
    table_category(
        colours,
        tuple_bound,
        tuple_bound,
        objects,
        morphisms,
        comp,
        ids,
    )
}

// ---------------------------------------------------------------------------
// Linear monads, their theories, and the nerve
// ---------------------------------------------------------------------------

/// The unary operad of a pinned category: one colour per pin and one unary
/// operation per pair of pins and morphism between their pinned objects.
/// Its free-algebra monad is the linear monad of the pinned category.
pub fn pinned_operad(pc: &PinnedCategory) -> Result<ColouredOperad, Error> {
    let cat = &pc.cat;
    let pins = pc.pinning.len();
    let colours: Vec<String> = pc
        .pinning
        .iter()
        .enumerate()
        .map(|(i, &x)| format!("p{i}_{}", cat.object_name(x)))
        .collect();
    let mut op_id = BTreeMap::new();
    let mut ops = Vec::new();
    for p in 0..pins {
        for q in 0..pins {
            for h in cat.hom_between(pc.pinning[p], pc.pinning[q]) {
                op_id.insert((p, q, h), ops.len());
                ops.push(OpData {
                    name: format!("{}_p{p}p{q}", cat.hom(h).name),
                    inputs: vec![p],
                    output: q,
                });
            }
        }
    }
    let mut comp = Vec::new();
    for (&(p, q, f), &fo) in &op_id {
        for r in 0..pins {
            for g in cat.hom_between(pc.pinning[q], pc.pinning[r]) {
                let go = op_id[&(q, r, g)];
                let h = cat.compose(f, g)?;
                comp.push((go, vec![fo], op_id[&(p, r, h)]));
            }
        }
    }
    let idents = (0..pins)
        .map(|p| op_id[&(p, p, cat.id_of(pc.pinning[p]))])
        .collect();
    ColouredOperad::new(colours, 1, ops, vec![], comp, idents)
}

/// Levelwise comparison between the nerve of a pinned category and the
/// simplex counts predicted by the Lawvere theory of its linear monad.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearRoundtrip {
    pub nerve_levels: Vec<usize>,
    pub theory_levels: Vec<usize>,
    pub report: Vec<String>,
}

impl LinearRoundtrip {
    pub fn passes(&self) -> bool {
        self.report.is_empty()
    }
}

/// Round trip from a pinned category through its linear monad and back.
///
/// The singleton homs of the theory of [`pinned_operad`] count the morphisms
/// between pinned objects; those counts are cross-checked against
/// [`linear_monad`] on indicator families. Level `n` of the simplicial set a
/// theory induces counts chains of `n` composable arrows between singletons
/// together with a pin at every vertex, and must match [`nerve`] levelwise.
pub fn linear_roundtrip(pc: &PinnedCategory, n_max: usize) -> Result<LinearRoundtrip, Error> {
    let o = pinned_operad(pc)?;
    let th = theory_of(&o, 1, 1)?;
    let pins = pc.pinning.len();
    let mut report = Vec::new();
    // counts[p][q]: theory arrows from the singleton of pin p to that of q,
    // stored covariantly as homs((q), (p))
    let mut counts = vec![vec![0usize; pins]; pins];
    for p in 0..pins {
        for q in 0..pins {
            counts[p][q] = th.homs(th.pinning()[q], th.pinning()[p]).len();
        }
    }
    for p in 0..pins {
        let mut sizes = vec![0usize; pins];
        sizes[p] = 1;
        let rows = linear_monad(pc, &Family::new(sizes))?;
        for (q, row) in rows.iter().enumerate() {
            if row.len() != counts[p][q] {
                report.push(format!(
                    "linear monad and theory disagree between pins {p} and {q}: {} vs {}",
                    row.len(),
                    counts[p][q]
                ));
            }
        }
    }
    let mut theory_levels = Vec::with_capacity(n_max + 1);
    // chains[r]: chains of the current length ending at pin r
    let mut chains = vec![1usize; pins];
    theory_levels.push(pins);
    for _ in 1..=n_max {
        let mut next = vec![0usize; pins];
        for q in 0..pins {
            for r in 0..pins {
                next[r] += chains[q] * counts[q][r];
            }
        }
        chains = next;
        theory_levels.push(chains.iter().sum());
    }
    let nerve_levels = nerve(pc, n_max)?.levels.clone();
    for n in 0..=n_max {
        if nerve_levels[n] != theory_levels[n] {
            report.push(format!(
                "level {n}: nerve has {} simplices, theory predicts {}",
                nerve_levels[n], theory_levels[n]
            ));
        }
    }
    Ok(LinearRoundtrip {
        nerve_levels,
        theory_levels,
        report,
    })
}
