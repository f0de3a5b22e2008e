//! Finite sets, maps, pullbacks, and the span category.
//!
//! The finite set of size `n` is `0..n`; objects are plain sizes. A span
//! `S ← X → T` lives in two forms: a [`SpanWitness`] records an apex with its
//! two legs, and a [`Span`] is the canonical multiplicity matrix
//! (`matrix[i][j]` = apex elements over `(i, j)`) that classifies witnesses
//! up to apex bijection over fixed feet. Composition is pullback at the
//! witness level and matrix product at the canonical level; their agreement
//! is a tested property of this module, not an assumption.
//!
//! The inert–active factorization: a span is *active* when its backwards leg
//! is an isomorphism (row sums all 1 — graphs of forward maps) and *inert*
//! when its forwards leg is one (column sums all 1 — reversed maps). Every
//! span factors as inert-then-active through the middle object of size
//! `total`, elements ordered row-major by (row, column, multiplicity).

use crate::error::Error;

/// A total map of finite sets `0..dom → 0..cod`, given by its value table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinMap {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

impl FinMap {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self, Error> {
        if table.len() != dom {
            return Err(Error::input(format!(
                "map table has {} entries for a domain of size {dom}",
                table.len()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= cod) {
            return Err(Error::input(format!(
                "map value {v} is not below the codomain size {cod}"
            )));
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn identity(n: usize) -> Self {
        FinMap {
            dom: n,
            cod: n,
            table: (0..n).collect(),
        }
    }

    /// The map `0..dom → 0..1` (empty domain allowed, `cod` must be ≥ 1).
    pub fn constant(dom: usize, cod: usize, value: usize) -> Result<Self, Error> {
        FinMap::new(dom, cod, vec![value; dom])
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Diagrammatic composite: `self` then `g`.
    pub fn then(&self, g: &FinMap) -> Result<FinMap, Error> {
        if self.cod != g.dom {
            return Err(Error::input(format!(
                "cannot compose map into {} with map out of {}",
                self.cod, g.dom
            )));
        }
        Ok(FinMap {
            dom: self.dom,
            cod: g.cod,
            table: self.table.iter().map(|&x| g.table[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_iso(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }

    /// Inverse table, provided the map is an isomorphism.
    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_iso() {
            return None;
        }
        let mut table = vec![0; self.dom];
        for (x, &v) in self.table.iter().enumerate() {
            table[v] = x;
        }
        Some(FinMap {
            dom: self.dom,
            cod: self.dom,
            table,
        })
    }
}

/// All maps `0..dom → 0..cod` in lexicographic table order.
pub fn enumerate_maps(dom: usize, cod: usize) -> Vec<FinMap> {
    let mut out = Vec::new();
    if dom == 0 {
        out.push(FinMap::identity(0).then(&FinMap::new(0, cod, vec![]).unwrap()).unwrap());
        return out;
    }
    if cod == 0 {
        return out; // no maps from a nonempty set into the empty set
    }
    let mut table = vec![0usize; dom];
    loop {
        out.push(FinMap::new(dom, cod, table.clone()).unwrap());
        // increment in base `cod`
        let mut k = dom;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            table[k] += 1;
            if table[k] < cod {
                break;
            }
            table[k] = 0;
        }
    }
}

/// Pullback of `f: A → C` and `g: B → C`: enumerates exactly the pairs
/// `(a, b)` with `f(a) = g(b)` in lexicographic order, and returns the two
/// projections.
pub fn pullback(f: &FinMap, g: &FinMap) -> Result<(usize, FinMap, FinMap), Error> {
    if f.cod() != g.cod() {
        return Err(Error::input(format!(
            "pullback needs a shared codomain, got {} and {}",
            f.cod(),
            g.cod()
        )));
    }
    let mut pa = Vec::new();
    let mut pb = Vec::new();
    for a in 0..f.dom() {
        for b in 0..g.dom() {
            if f.apply(a) == g.apply(b) {
                pa.push(a);
                pb.push(b);
            }
        }
    }
    let size = pa.len();
    Ok((
        size,
        FinMap::new(size, f.dom(), pa)?,
        FinMap::new(size, g.dom(), pb)?,
    ))
}

/// Whether the commuting square
///
/// ```text
///        pa
///      P ──→ A
///   pb │     │ f
///      ↓     ↓
///      B ──→ C
///         g
/// ```
///
/// is a pullback of finite sets: the comparison `P → A ×_C B` must be a
/// bijection. Errors if the square does not commute or the feet mismatch.
pub fn is_pullback_square(
    pa: &FinMap,
    pb: &FinMap,
    f: &FinMap,
    g: &FinMap,
) -> Result<bool, Error> {
    if pa.dom() != pb.dom() || pa.cod() != f.dom() || pb.cod() != g.dom() || f.cod() != g.cod() {
        return Err(Error::input("pullback square has mismatched feet".to_string()));
    }
    for x in 0..pa.dom() {
        if f.apply(pa.apply(x)) != g.apply(pb.apply(x)) {
            return Err(Error::input(format!("square does not commute at element {x}")));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for x in 0..pa.dom() {
        if !seen.insert((pa.apply(x), pb.apply(x))) {
            return Ok(false); // comparison not injective
        }
    }
    let mut matches = 0usize;
    for a in 0..f.dom() {
        for b in 0..g.dom() {
            if f.apply(a) == g.apply(b) {
                matches += 1;
            }
        }
    }
    Ok(matches == pa.dom())
}

/// A span `dom ← apex → cod` with explicit legs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanWitness {
    left: FinMap,
    right: FinMap,
}

impl SpanWitness {
    pub fn new(left: FinMap, right: FinMap) -> Result<Self, Error> {
        if left.dom() != right.dom() {
            return Err(Error::input(format!(
                "span legs disagree on the apex: {} vs {}",
                left.dom(),
                right.dom()
            )));
        }
        Ok(SpanWitness { left, right })
    }

    pub fn identity(n: usize) -> Self {
        SpanWitness {
            left: FinMap::identity(n),
            right: FinMap::identity(n),
        }
    }

    pub fn apex(&self) -> usize {
        self.left.dom()
    }

    pub fn dom(&self) -> usize {
        self.left.cod()
    }

    pub fn cod(&self) -> usize {
        self.right.cod()
    }

    pub fn left(&self) -> &FinMap {
        &self.left
    }

    pub fn right(&self) -> &FinMap {
        &self.right
    }

    /// Composite by pullback of the inner legs: the apex is the pullback of
    /// `self.right` against `other.left`.
    pub fn compose(&self, other: &SpanWitness) -> Result<SpanWitness, Error> {
        if self.cod() != other.dom() {
            return Err(Error::input(format!(
                "span feet mismatch: {} vs {}",
                self.cod(),
                other.dom()
            )));
        }
        let (_, p1, p2) = pullback(&self.right, &other.left)?;
        SpanWitness::new(p1.then(&self.left)?, p2.then(&other.right)?)
    }

    /// The multiplicity matrix of this witness (canonical form of its
    /// iso-class over fixed feet).
    pub fn canonicalize(&self) -> Span {
        let mut span = Span::zero(self.dom(), self.cod());
        for e in 0..self.apex() {
            let i = self.left.apply(e);
            let j = self.right.apply(e);
            span.data[i * span.cod + j] += 1;
        }
        span
    }
}

/// Canonical form of an iso-class of spans: a natural-number matrix of shape
/// `dom × cod`, stored flat row-major. Two witnesses canonicalize to equal
/// `Span` values exactly when an apex bijection identifies them over fixed
/// feet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Span {
    dom: usize,
    cod: usize,
    data: Vec<usize>,
}

impl Span {
    pub fn zero(dom: usize, cod: usize) -> Self {
        Span {
            dom,
            cod,
            data: vec![0; dom * cod],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut s = Span::zero(n, n);
        for i in 0..n {
            s.data[i * n + i] = 1;
        }
        s
    }

    pub fn from_matrix(matrix: Vec<Vec<usize>>) -> Result<Self, Error> {
        let dom = matrix.len();
        let cod = matrix.first().map_or(0, |r| r.len());
        if matrix.iter().any(|r| r.len() != cod) {
            return Err(Error::input("ragged span matrix".to_string()));
        }
        Ok(Span {
            dom,
            cod,
            data: matrix.into_iter().flatten().collect(),
        })
    }

    /// For `dom = 0` the codomain is not recoverable from a nested matrix;
    /// this constructor pins both feet explicitly.
    pub fn from_matrix_with_shape(
        dom: usize,
        cod: usize,
        matrix: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        if matrix.len() != dom {
            return Err(Error::input(format!(
                "span matrix has {} rows for a domain of size {dom}",
                matrix.len()
            )));
        }
        if matrix.iter().any(|r| r.len() != cod) {
            return Err(Error::input(format!(
                "span matrix rows must all have the codomain size {cod}"
            )));
        }
        Ok(Span {
            dom,
            cod,
            data: matrix.into_iter().flatten().collect(),
        })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.data[i * self.cod + j]
    }

    pub fn matrix(&self) -> Vec<Vec<usize>> {
        (0..self.dom)
            .map(|i| self.data[i * self.cod..(i + 1) * self.cod].to_vec())
            .collect()
    }

    /// All entries row-major, without copying.
    pub fn entries(&self) -> &[usize] {
        &self.data
    }

    /// Sum of all entries = size of the canonical apex.
    pub fn total(&self) -> usize {
        self.data.iter().sum()
    }

    pub fn row_total(&self, i: usize) -> usize {
        self.data[i * self.cod..(i + 1) * self.cod].iter().sum()
    }

    pub fn col_total(&self, j: usize) -> usize {
        (0..self.dom).map(|i| self.entry(i, j)).sum()
    }

    /// The canonical witness: apex elements are the triples
    /// `(row, column, multiplicity)` in row-major order.
    pub fn witness(&self) -> SpanWitness {
        let mut left = Vec::with_capacity(self.total());
        let mut right = Vec::with_capacity(self.total());
        for i in 0..self.dom {
            for j in 0..self.cod {
                for _ in 0..self.entry(i, j) {
                    left.push(i);
                    right.push(j);
                }
            }
        }
        let apex = left.len();
        SpanWitness {
            left: FinMap::new(apex, self.dom, left).unwrap(),
            right: FinMap::new(apex, self.cod, right).unwrap(),
        }
    }

    /// Composite span, computed as the matrix product. Equality with the
    /// witness-level pullback composite is a tested property.
    pub fn compose(&self, other: &Span) -> Result<Span, Error> {
        if self.cod != other.dom {
            return Err(Error::input(format!(
                "span feet mismatch: {} vs {}",
                self.cod, other.dom
            )));
        }
        let mut out = Span::zero(self.dom, other.cod);
        let n = other.cod;
        for i in 0..self.dom {
            let row = &self.data[i * self.cod..(i + 1) * self.cod];
            let acc = &mut out.data[i * n..(i + 1) * n];
            for (j, &a) in row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (c, &b) in acc.iter_mut().zip(&other.data[j * n..(j + 1) * n]) {
                    *c += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Inert: the forwards leg of a witness is an isomorphism, i.e. every
    /// column sums to exactly 1 (a reversed map `cod → dom`).
    pub fn is_inert(&self) -> bool {
        (0..self.cod).all(|j| self.col_total(j) == 1)
    }

    /// Active: the backwards leg is an isomorphism, i.e. every row sums to
    /// exactly 1 (the graph of a map `dom → cod`).
    pub fn is_active(&self) -> bool {
        (0..self.dom).all(|i| self.row_total(i) == 1)
    }

    /// Inert and active at once: a permutation matrix.
    pub fn is_iso(&self) -> bool {
        self.is_inert() && self.is_active()
    }

    /// The map `dom → cod` whose graph this span is, when active.
    pub fn active_as_map(&self) -> Option<FinMap> {
        if !self.is_active() {
            return None;
        }
        let table = (0..self.dom)
            .map(|i| (0..self.cod).find(|&j| self.entry(i, j) == 1).unwrap())
            .collect();
        Some(FinMap::new(self.dom, self.cod, table).unwrap())
    }

    /// The reversed map `cod → dom` this span is, when inert.
    pub fn inert_as_reverse_map(&self) -> Option<FinMap> {
        if !self.is_inert() {
            return None;
        }
        let table = (0..self.cod)
            .map(|j| (0..self.dom).find(|&i| self.entry(i, j) == 1).unwrap())
            .collect();
        Some(FinMap::new(self.cod, self.dom, table).unwrap())
    }

    /// The inert span `dom → u.dom()` with backwards leg `u: u.dom() → dom`.
    pub fn inert_from_reverse(u: &FinMap) -> Span {
        let mut s = Span::zero(u.cod(), u.dom());
        for j in 0..u.dom() {
            s.data[u.apply(j) * u.dom() + j] = 1;
        }
        s
    }

    /// The active span that is the graph of `f`.
    pub fn active_from_map(f: &FinMap) -> Span {
        let mut s = Span::zero(f.dom(), f.cod());
        for i in 0..f.dom() {
            s.data[i * f.cod() + f.apply(i)] = 1;
        }
        s
    }

    /// Inert–active factorization through the middle object of size
    /// `total()`, elements ordered row-major by (row, column, multiplicity).
    /// Returns `(inert, active)` with `inert ∘ active = self`.
    pub fn factor_inert_active(&self) -> (Span, Span) {
        let k = self.total();
        let mut inert = Span::zero(self.dom, k);
        let mut active = Span::zero(k, self.cod);
        let mut e = 0usize;
        for i in 0..self.dom {
            for j in 0..self.cod {
                for _ in 0..self.entry(i, j) {
                    inert.data[i * k + e] = 1;
                    active.data[e * self.cod + j] = 1;
                    e += 1;
                }
            }
        }
        (inert, active)
    }
}

/// The inert span `S → 1` picking the element `s` (a single 1 in row `s`).
pub fn rho_inert(s_size: usize, s: usize) -> Result<Span, Error> {
    if s >= s_size {
        return Err(Error::input(format!(
            "element {s} is not in a set of size {s_size}"
        )));
    }
    let mut span = Span::zero(s_size, 1);
    span.data[s] = 1;
    Ok(span)
}

/// A pointed map `S₊ → T₊` as a span: entries mapped to the basepoint are
/// `None`. The span is `S ↩ def(φ) → T`, a 0/1 matrix with row sums ≤ 1.
pub fn embed_pointed_map(phi: &[Option<usize>], cod: usize) -> Result<Span, Error> {
    let dom = phi.len();
    let mut span = Span::zero(dom, cod);
    for (s, v) in phi.iter().enumerate() {
        if let Some(t) = *v {
            if t >= cod {
                return Err(Error::input(format!(
                    "pointed map value {t} is not below the codomain size {cod}"
                )));
            }
            span.data[s * cod + t] = 1;
        }
    }
    Ok(span)
}

/// Composite of partial maps, for checking that [`embed_pointed_map`] is
/// functorial: defined where both stages are.
pub fn compose_pointed(phi: &[Option<usize>], psi: &[Option<usize>]) -> Vec<Option<usize>> {
    phi.iter().map(|v| v.and_then(|t| psi[t])).collect()
}

/// The product of `S` and `T` in the span category: their disjoint union,
/// with the two inert projections restricting to each block.
pub fn product_cone(s: usize, t: usize) -> (usize, Span, Span) {
    let st = s + t;
    let mut pr_s = Span::zero(st, s);
    for i in 0..s {
        pr_s.data[i * s + i] = 1;
    }
    let mut pr_t = Span::zero(st, t);
    for i in 0..t {
        pr_t.data[(s + i) * t + i] = 1;
    }
    (st, pr_s, pr_t)
}

/// Binomial coefficient, exact; panics on overflow past u64 (desk scales
/// never approach it).
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for k in 0..r {
        acc = acc * (n - k) as u128 / (k + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Number of spans `S → T` with matrix total ≤ d: ℕ-matrices of shape
/// `S × T` with entry sum ≤ d, counted by stars and bars as C(d + ST, ST).
pub fn hom_count(s: usize, t: usize, d: usize) -> u64 {
    let cells = s * t;
    binomial(d + cells, cells)
}

/// All spans `dom → cod` with total ≤ `max_total`, ordered by total then by
/// the flattened matrix lexicographically.
pub fn enumerate_spans(dom: usize, cod: usize, max_total: usize) -> Vec<Span> {
    let cells = dom * cod;
    let mut out = Vec::new();
    if cells == 0 {
        out.push(Span::zero(dom, cod));
        return out;
    }
    for total in 0..=max_total {
        let mut data = vec![0usize; cells];
        fill_compositions(&mut data, 0, total, &mut |d| {
            out.push(Span {
                dom,
                cod,
                data: d.to_vec(),
            })
        });
    }
    out
}

fn fill_compositions(data: &mut [usize], pos: usize, remaining: usize, emit: &mut impl FnMut(&[usize])) {
    if pos + 1 == data.len() {
        data[pos] = remaining;
        emit(data);
        return;
    }
    for v in 0..=remaining {
        data[pos] = v;
        fill_compositions(data, pos + 1, remaining - v, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pullback_over_point_is_product() {
        let f = FinMap::constant(2, 1, 0).unwrap();
        let g = FinMap::constant(2, 1, 0).unwrap();
        let (p, _, _) = pullback(&f, &g).unwrap();
        assert_eq!(p, 4);
    }

    #[test]
    fn pullback_of_identities_is_diagonal() {
        let id = FinMap::identity(2);
        let (p, pa, pb) = pullback(&id, &id).unwrap();
        assert_eq!(p, 2);
        assert_eq!(pa, pb);
    }

    #[test]
    fn pullback_enumerates_matching_pairs() {
        let f = FinMap::new(3, 2, vec![0, 0, 1]).unwrap();
        let g = FinMap::identity(2);
        let (p, _, _) = pullback(&f, &g).unwrap();
        assert_eq!(p, 3);
    }

    #[test]
    fn canonicalize_identity_witness() {
        let w = SpanWitness::identity(2);
        assert_eq!(w.canonicalize(), Span::identity(2));
        assert_eq!(Span::identity(2).matrix(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn canonicalize_empty_apex() {
        let w = SpanWitness::new(
            FinMap::new(0, 2, vec![]).unwrap(),
            FinMap::new(0, 3, vec![]).unwrap(),
        )
        .unwrap();
        assert_eq!(w.canonicalize(), Span::zero(2, 3));
    }

    #[test]
    fn canonicalize_counts_fibre_pairs() {
        let w = SpanWitness::new(
            FinMap::new(3, 2, vec![0, 1, 1]).unwrap(),
            FinMap::new(3, 2, vec![0, 0, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(w.canonicalize().matrix(), vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn compose_matches_worked_example() {
        let a = Span::from_matrix(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let b = Span::from_matrix(vec![vec![2, 0], vec![1, 1]]).unwrap();
        assert_eq!(
            a.compose(&b).unwrap().matrix(),
            vec![vec![3, 1], vec![1, 1]]
        );
    }

    #[test]
    fn compose_with_identity_and_zero() {
        let a = Span::from_matrix(vec![vec![2, 0], vec![1, 1]]).unwrap();
        assert_eq!(a.compose(&Span::identity(2)).unwrap(), a);
        assert_eq!(Span::identity(2).compose(&a).unwrap(), a);
        let z = Span::zero(3, 2);
        assert_eq!(z.compose(&a).unwrap(), Span::zero(3, 2));
    }

    #[test]
    fn factorization_of_worked_example() {
        let s = Span::from_matrix(vec![vec![2, 0], vec![1, 1]]).unwrap();
        let (i, a) = s.factor_inert_active();
        assert_eq!(i.cod(), 4);
        assert!(i.is_inert());
        assert!(a.is_active());
        assert_eq!(
            a.active_as_map().unwrap().table(),
            &[0, 0, 0, 1],
            "active part under row-major middle order"
        );
        assert_eq!(i.compose(&a).unwrap(), s);
    }

    #[test]
    fn factorization_of_inert_and_empty() {
        let inert = rho_inert(3, 1).unwrap();
        let (i, a) = inert.factor_inert_active();
        assert_eq!(i, inert);
        assert_eq!(a, Span::identity(1));

        let (i, a) = Span::zero(2, 3).factor_inert_active();
        assert_eq!(i.cod(), 0);
        assert_eq!(a.dom(), 0);
        assert_eq!(i.compose(&a).unwrap(), Span::zero(2, 3));
    }

    #[test]
    fn inert_active_classification() {
        assert!(Span::identity(2).is_inert() && Span::identity(2).is_active());
        let rho = rho_inert(3, 1).unwrap();
        assert_eq!(rho.matrix(), vec![vec![0], vec![1], vec![0]]);
        assert!(rho.is_inert() && !rho.is_active());
        let doubled = Span::from_matrix(vec![vec![2]]).unwrap();
        assert!(!doubled.is_inert() && !doubled.is_active());
        assert_eq!(rho_inert(1, 0).unwrap(), Span::identity(1));
    }

    #[test]
    fn pointed_map_embedding() {
        let id = embed_pointed_map(&[Some(0), Some(1)], 2).unwrap();
        assert_eq!(id, Span::identity(2));
        let collapse = embed_pointed_map(&[None, None], 3).unwrap();
        assert_eq!(collapse, Span::zero(2, 3));
        // ρₛ: S₊ → 1₊ hits the basepoint away from s
        let rho = embed_pointed_map(&[None, Some(0), None], 1).unwrap();
        assert_eq!(rho, rho_inert(3, 1).unwrap());
    }

    #[test]
    fn product_cone_shapes() {
        let (st, pr_s, pr_t) = product_cone(1, 1);
        assert_eq!(st, 2);
        assert_eq!(pr_s.matrix(), vec![vec![1], vec![0]]);
        assert_eq!(pr_t.matrix(), vec![vec![0], vec![1]]);
        assert!(pr_s.is_inert() && pr_t.is_inert());

        let (s0, pr, _) = product_cone(3, 0);
        assert_eq!(s0, 3);
        assert_eq!(pr, Span::identity(3));
    }

    #[test]
    fn hom_count_small_cases() {
        for d in 0..6 {
            assert_eq!(hom_count(1, 1, d), d as u64 + 1);
        }
        assert_eq!(hom_count(2, 1, 1), 3);
        for t in 0..4 {
            for d in 0..4 {
                assert_eq!(hom_count(0, t, d), 1);
            }
        }
    }

    #[test]
    fn enumerate_spans_matches_hom_count() {
        for dom in 0..4 {
            for cod in 0..4 {
                for d in 0..4 {
                    assert_eq!(
                        enumerate_spans(dom, cod, d).len() as u64,
                        hom_count(dom, cod, d),
                        "span count mismatch at {dom}×{cod}, grade {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn rho_composes_with_product_projections() {
        // Restricting the left projection of 2 ⊔ 1 to an element of the
        // first block is again a rho span.
        let (_, pr_s, _) = product_cone(2, 1);
        let composite = pr_s.compose(&rho_inert(2, 1).unwrap()).unwrap();
        assert_eq!(composite, rho_inert(3, 1).unwrap());
    }

    #[test]
    fn pullback_square_detection() {
        let f = FinMap::new(2, 1, vec![0, 0]).unwrap();
        let (p, pa, pb) = pullback(&f, &f).unwrap();
        assert_eq!(p, 4);
        assert!(is_pullback_square(&pa, &pb, &f, &f).unwrap());
        // collapse the apex: no longer a pullback
        let qa = FinMap::new(2, 2, vec![0, 1]).unwrap();
        let qb = FinMap::new(2, 2, vec![0, 1]).unwrap();
        assert!(!is_pullback_square(&qa, &qb, &f, &f).unwrap());
    }
}
