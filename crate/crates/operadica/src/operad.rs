//! Coloured operads with fully tabulated structure, stock examples, operad
//! morphisms, and the composition product of symmetric sequences.
//!
//! Everything is truncated at a declared `max_arity`: symmetry actions are
//! total within the bound, composition is tabulated for every composable
//! family whose total arity stays within the bound, and asking for more is a
//! bound overflow rather than a silent omission.
//!
//! Permutations are image lists: `s[i]` is where input `i` goes under... —
//! concretely, the action is a right action with
//! `act(act(o, s), t) = act(o, compose(s, t))` and
//! `compose(s, t)[i] = s[t[i]]`, and the operation `act(o, s)` has
//! `inputs[i] = o.inputs[s[i]]`.

use crate::error::Error;
use crate::segal::CategoryData;
use std::collections::{BTreeMap, HashMap, HashSet};

pub type OpId = usize;

// ---- permutations ----------------------------------------------------------

/// All permutations of 0..n as image lists, lexicographically.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

pub fn identity_perm(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn is_perm(s: &[usize]) -> bool {
    let n = s.len();
    let mut seen = vec![false; n];
    s.iter().all(|&v| {
        if v < n && !seen[v] {
            seen[v] = true;
            true
        } else {
            false
        }
    })
}

/// `compose(s, t)[i] = s[t[i]]` — "t, then s" on positions, so that the
/// right action satisfies act(act(o, s), t) = act(o, compose(s, t)).
pub fn perm_compose(s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| s[i]).collect()
}

pub fn perm_inverse(s: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; s.len()];
    for (i, &v) in s.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Block sum: acts as `parts[0]` on the first block, `parts[1]` on the
/// second, and so on.
pub fn perm_block_sum(parts: &[Vec<usize>]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut offset = 0;
    for p in parts {
        out.extend(p.iter().map(|&v| v + offset));
        offset += p.len();
    }
    out
}

// ---- coloured operads ------------------------------------------------------

/// One operation: a name, input colours, and an output colour.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpData {
    pub name: String,
    pub inputs: Vec<usize>,
    pub output: usize,
}

/// A coloured operad truncated at `max_arity`, with explicit symmetry and
/// composition tables. Structural malformation (bad indices, conflicting
/// entries, entries beyond the bound) is rejected at construction; law
/// violations are reported by [`ColouredOperad::validate`].
#[derive(Clone, Debug)]
pub struct ColouredOperad {
    colours: Vec<String>,
    max_arity: usize,
    ops: Vec<OpData>,
    sym: HashMap<(OpId, Vec<usize>), OpId>,
    comp: HashMap<(OpId, Vec<OpId>), OpId>,
    idents: Vec<OpId>,
    by_profile: BTreeMap<(Vec<usize>, usize), Vec<OpId>>,
    by_output: Vec<Vec<OpId>>,
}

impl ColouredOperad {
    /// `sym_entries` may be a generating set; it is closed under
    /// composition of permutations. The identity permutation acts as the
    /// identity and needs no entries.
    pub fn new(
        colours: Vec<String>,
        max_arity: usize,
        ops: Vec<OpData>,
        sym_entries: Vec<(OpId, Vec<usize>, OpId)>,
        comp_entries: Vec<(OpId, Vec<OpId>, OpId)>,
        idents: Vec<OpId>,
    ) -> Result<Self, Error> {
        let n_col = colours.len();
        {
            let mut seen = HashSet::new();
            if colours.iter().any(|c| !seen.insert(c.clone())) {
                return Err(Error::input("duplicate colour name"));
            }
            let mut seen = HashSet::new();
            if ops.iter().any(|o| !seen.insert(o.name.clone())) {
                return Err(Error::input("duplicate operation name"));
            }
        }
        for o in &ops {
            if o.inputs.len() > max_arity {
                return Err(Error::input(format!(
                    "operation {} exceeds the arity bound",
                    o.name
                )));
            }
            if o.output >= n_col || o.inputs.iter().any(|&c| c >= n_col) {
                return Err(Error::input(format!(
                    "operation {} uses an unknown colour",
                    o.name
                )));
            }
        }
        if idents.len() != n_col {
            return Err(Error::input("one identity operation per colour required"));
        }
        for (c, &i) in idents.iter().enumerate() {
            let Some(o) = ops.get(i) else {
                return Err(Error::input("identity entry names unknown operation"));
            };
            if o.inputs != [c] || o.output != c {
                return Err(Error::input(format!(
                    "identity of colour {} must be unary on that colour",
                    colours[c]
                )));
            }
        }
        // symmetry: validate generators, then close under composition
        for (o, perm, img) in &sym_entries {
            let (Some(od), Some(im)) = (ops.get(*o), ops.get(*img)) else {
                return Err(Error::input("symmetry entry names unknown operation"));
            };
            if perm.len() != od.inputs.len() || !is_perm(perm) {
                return Err(Error::input(format!(
                    "symmetry entry for {} is not a permutation of its inputs",
                    od.name
                )));
            }
            if im.output != od.output
                || im.inputs.len() != od.inputs.len()
                || (0..perm.len()).any(|i| im.inputs[i] != od.inputs[perm[i]])
            {
                return Err(Error::input(format!(
                    "symmetry image of {} has the wrong profile",
                    od.name
                )));
            }
        }
        let mut sym: HashMap<(OpId, Vec<usize>), OpId> = HashMap::new();
        for (o, perm, img) in &sym_entries {
            if *perm == identity_perm(perm.len()) {
                if img != o {
                    return Err(Error::input("identity permutation must act trivially"));
                }
                continue;
            }
            if let Some(&old) = sym.get(&(*o, perm.clone())) {
                if old != *img {
                    return Err(Error::input("conflicting symmetry entries"));
                }
            }
            sym.insert((*o, perm.clone()), *img);
        }
        // close: derived (o, s) -> p composed with generator (p, t) -> q
        // yields (o, s∘t) -> q; conflicts mean the generators are inconsistent
        let mut queue: Vec<(OpId, Vec<usize>, OpId)> = sym
            .iter()
            .map(|((o, s), &p)| (*o, s.clone(), p))
            .collect();
        let gens: Vec<(OpId, Vec<usize>, OpId)> = queue.clone();
        while let Some((o, s, p)) = queue.pop() {
            for (g_op, g_perm, g_img) in &gens {
                if *g_op != p {
                    continue;
                }
                let st = perm_compose(&s, g_perm);
                if st == identity_perm(st.len()) {
                    if *g_img != o {
                        return Err(Error::input("symmetry entries are inconsistent"));
                    }
                    continue;
                }
                match sym.get(&(o, st.clone())) {
                    Some(&old) if old != *g_img => {
                        return Err(Error::input("symmetry entries are inconsistent"));
                    }
                    Some(_) => {}
                    None => {
                        sym.insert((o, st.clone()), *g_img);
                        queue.push((o, st, *g_img));
                    }
                }
            }
        }
        // composition entries: indices and composability are structural;
        // result profiles are the validator's business
        let mut comp = HashMap::new();
        for (outer, inners, result) in comp_entries {
            let Some(od) = ops.get(outer) else {
                return Err(Error::input("composition entry names unknown operation"));
            };
            if inners.len() != od.inputs.len() {
                return Err(Error::input(format!(
                    "composition entry for {} has the wrong number of inner operations",
                    od.name
                )));
            }
            let mut total = 0;
            for (slot, &p) in inners.iter().enumerate() {
                let Some(pd) = ops.get(p) else {
                    return Err(Error::input("composition entry names unknown operation"));
                };
                if pd.output != od.inputs[slot] {
                    return Err(Error::input(format!(
                        "composition entry for {} plugs {} into a slot of the wrong colour",
                        od.name, pd.name
                    )));
                }
                total += pd.inputs.len();
            }
            if total > max_arity {
                return Err(Error::input(format!(
                    "composition entry for {} lies beyond the arity bound",
                    od.name
                )));
            }
            if ops.get(result).is_none() {
                return Err(Error::input("composition entry names unknown operation"));
            }
            if let Some(&old) = comp.get(&(outer, inners.clone())) {
                if old != result {
                    return Err(Error::input("conflicting composition entries"));
                }
            }
            comp.insert((outer, inners), result);
        }
        let mut by_profile: BTreeMap<(Vec<usize>, usize), Vec<OpId>> = BTreeMap::new();
        let mut by_output = vec![Vec::new(); n_col];
        for (i, o) in ops.iter().enumerate() {
            by_profile
                .entry((o.inputs.clone(), o.output))
                .or_default()
                .push(i);
            by_output[o.output].push(i);
        }
        Ok(ColouredOperad {
            colours,
            max_arity,
            ops,
            sym,
            comp,
            idents,
            by_profile,
            by_output,
        })
    }

    pub fn colours(&self) -> &[String] {
        &self.colours
    }

    pub fn colour_index(&self, name: &str) -> Option<usize> {
        self.colours.iter().position(|c| c == name)
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn num_ops(&self) -> usize {
        self.ops.len()
    }

    pub fn op(&self, o: OpId) -> &OpData {
        &self.ops[o]
    }

    pub fn arity(&self, o: OpId) -> usize {
        self.ops[o].inputs.len()
    }

    pub fn op_index(&self, name: &str) -> Option<OpId> {
        self.ops.iter().position(|o| o.name == name)
    }

    pub fn ident(&self, colour: usize) -> OpId {
        self.idents[colour]
    }

    pub fn ops_with_profile(&self, inputs: &[usize], output: usize) -> &[OpId] {
        self.by_profile
            .get(&(inputs.to_vec(), output))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn ops_with_output(&self, colour: usize) -> &[OpId] {
        &self.by_output[colour]
    }

    pub fn sym_entries(&self) -> Vec<(OpId, Vec<usize>, OpId)> {
        let mut v: Vec<_> = self
            .sym
            .iter()
            .map(|((o, s), &p)| (*o, s.clone(), p))
            .collect();
        v.sort();
        v
    }

    pub fn comp_entries(&self) -> Vec<(OpId, Vec<OpId>, OpId)> {
        let mut v: Vec<_> = self
            .comp
            .iter()
            .map(|((o, ps), &r)| (*o, ps.clone(), r))
            .collect();
        v.sort();
        v
    }

    pub fn idents(&self) -> &[OpId] {
        &self.idents
    }

    /// The symmetry action `o · perm`.
    pub fn sym_act(&self, o: OpId, perm: &[usize]) -> Result<OpId, Error> {
        if perm.len() != self.arity(o) || !is_perm(perm) {
            return Err(Error::input(format!(
                "permutation does not match the arity of {}",
                self.ops[o].name
            )));
        }
        if *perm == identity_perm(perm.len()) {
            return Ok(o);
        }
        self.sym.get(&(o, perm.to_vec())).copied().ok_or_else(|| {
            Error::input(format!(
                "symmetry action of {} is undefined for {:?}",
                self.ops[o].name, perm
            ))
        })
    }

    /// Operadic composition γ(outer; inners). A nullary outer with an empty
    /// family composes to itself; families whose total arity exceeds the
    /// bound are an overflow.
    pub fn compose(&self, outer: OpId, inners: &[OpId]) -> Result<OpId, Error> {
        let od = &self.ops[outer];
        if inners.len() != od.inputs.len() {
            return Err(Error::input(format!(
                "{} takes {} inner operations",
                od.name,
                od.inputs.len()
            )));
        }
        let mut total = 0;
        for (slot, &p) in inners.iter().enumerate() {
            if self.ops[p].output != od.inputs[slot] {
                return Err(Error::input(format!(
                    "{} does not fit slot {} of {}",
                    self.ops[p].name, slot, od.name
                )));
            }
            total += self.arity(p);
        }
        if inners.is_empty() {
            return Ok(outer);
        }
        if total > self.max_arity {
            return Err(Error::overflow(format!(
                "composite of {} has arity {} > bound {}",
                od.name, total, self.max_arity
            )));
        }
        self.comp.get(&(outer, inners.to_vec())).copied().ok_or_else(|| {
            Error::input(format!(
                "composition table has no entry for {} with {:?}",
                od.name,
                inners.iter().map(|&p| &self.ops[p].name).collect::<Vec<_>>()
            ))
        })
    }

    /// All composable inner families for `outer` with total arity ≤ bound.
    fn composable_families(&self, outer: OpId, bound: usize) -> Vec<Vec<OpId>> {
        let slots = self.ops[outer].inputs.clone();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(
            op: &ColouredOperad,
            slots: &[usize],
            bound: usize,
            used: usize,
            cur: &mut Vec<OpId>,
            out: &mut Vec<Vec<OpId>>,
        ) {
            if cur.len() == slots.len() {
                out.push(cur.clone());
                return;
            }
            let colour = slots[cur.len()];
            for &p in op.ops_with_output(colour) {
                if used + op.arity(p) <= bound {
                    cur.push(p);
                    go(op, slots, bound, used + op.arity(p), cur, out);
                    cur.pop();
                }
            }
        }
        go(self, &slots, bound, 0, &mut cur, &mut out);
        out
    }

    /// Every violated law instance within the full arity bound.
    pub fn validate(&self) -> Vec<String> {
        self.validate_within(self.max_arity)
    }

    /// Law report restricted to composites and actions of arity ≤ `bound`.
    pub fn validate_within(&self, bound: usize) -> Vec<String> {
        let mut report = Vec::new();
        let bound = bound.min(self.max_arity);
        // symmetry totality and profiles
        for o in 0..self.ops.len() {
            let n = self.arity(o);
            if n > bound {
                continue;
            }
            for s in all_perms(n) {
                if s == identity_perm(n) {
                    continue;
                }
                let Some(&img) = self.sym.get(&(o, s.clone())) else {
                    report.push(format!(
                        "symmetry action of {} is missing for {:?}",
                        self.ops[o].name, s
                    ));
                    continue;
                };
                let (od, im) = (&self.ops[o], &self.ops[img]);
                if im.output != od.output
                    || im.inputs.len() != n
                    || (0..n).any(|i| im.inputs[i] != od.inputs[s[i]])
                {
                    report.push(format!(
                        "symmetry image of {} under {:?} has the wrong profile",
                        od.name, s
                    ));
                }
            }
        }
        // right-action law
        for o in 0..self.ops.len() {
            let n = self.arity(o);
            if n > bound {
                continue;
            }
            for s in all_perms(n) {
                let Ok(os) = self.sym_act(o, &s) else { continue };
                for t in all_perms(n) {
                    let (Ok(ost), Ok(o_st)) =
                        (self.sym_act(os, &t), self.sym_act(o, &perm_compose(&s, &t)))
                    else {
                        continue;
                    };
                    if ost != o_st {
                        report.push(format!(
                            "action law fails for {} with {:?} then {:?}",
                            self.ops[o].name, s, t
                        ));
                    }
                }
            }
        }
        // composition totality and result profiles
        for o in 0..self.ops.len() {
            if self.arity(o) == 0 {
                continue;
            }
            for fam in self.composable_families(o, bound) {
                let key = (o, fam.clone());
                let Some(&r) = self.comp.get(&key) else {
                    report.push(format!(
                        "composition entry missing for {} with {:?}",
                        self.ops[o].name,
                        fam.iter().map(|&p| &self.ops[p].name).collect::<Vec<_>>()
                    ));
                    continue;
                };
                let expect_inputs: Vec<usize> = fam
                    .iter()
                    .flat_map(|&p| self.ops[p].inputs.iter().copied())
                    .collect();
                if self.ops[r].inputs != expect_inputs
                    || self.ops[r].output != self.ops[o].output
                {
                    report.push(format!(
                        "composite of {} with {:?} has the wrong profile",
                        self.ops[o].name,
                        fam.iter().map(|&p| &self.ops[p].name).collect::<Vec<_>>()
                    ));
                }
            }
        }
        // unit laws
        for o in 0..self.ops.len() {
            if self.arity(o) <= bound {
                let id_out = self.idents[self.ops[o].output];
                match self.comp.get(&(id_out, vec![o])) {
                    Some(&r) if r == o => {}
                    _ => report.push(format!("left unit law fails for {}", self.ops[o].name)),
                }
            }
            let n = self.arity(o);
            if n >= 1 && n <= bound {
                let ids: Vec<OpId> = self.ops[o].inputs.iter().map(|&c| self.idents[c]).collect();
                match self.comp.get(&(o, ids)) {
                    Some(&r) if r == o => {}
                    _ => report.push(format!("right unit law fails for {}", self.ops[o].name)),
                }
            }
        }
        // associativity
        for o in 0..self.ops.len() {
            if self.arity(o) == 0 {
                continue;
            }
            for fam in self.composable_families(o, bound) {
                let Some(&r) = self.comp.get(&(o, fam.clone())) else {
                    continue;
                };
                if self.arity(r) == 0 {
                    continue;
                }
                for qs in self.composable_families(r, bound) {
                    let Some(&lhs) = self.comp.get(&(r, qs.clone())) else {
                        continue;
                    };
                    // split qs into blocks matching the arities of fam
                    let mut inner_results = Vec::with_capacity(fam.len());
                    let mut offset = 0;
                    let mut ok = true;
                    for &p in &fam {
                        let block = &qs[offset..offset + self.arity(p)];
                        offset += self.arity(p);
                        match self.compose(p, block) {
                            Ok(v) => inner_results.push(v),
                            Err(_) => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    match self.comp.get(&(o, inner_results.clone())) {
                        Some(&rhs) if rhs == lhs => {}
                        _ => report.push(format!(
                            "associativity fails for {} with {:?} then {:?}",
                            self.ops[o].name,
                            fam.iter().map(|&p| &self.ops[p].name).collect::<Vec<_>>(),
                            qs.iter().map(|&q| &self.ops[q].name).collect::<Vec<_>>()
                        )),
                    }
                }
            }
        }
        // equivariance
        for o in 0..self.ops.len() {
            let k = self.arity(o);
            if k == 0 {
                continue;
            }
            for fam in self.composable_families(o, bound) {
                let Some(&r) = self.comp.get(&(o, fam.clone())) else {
                    continue;
                };
                let arities: Vec<usize> = fam.iter().map(|&p| self.arity(p)).collect();
                let old_offsets: Vec<usize> = arities
                    .iter()
                    .scan(0, |acc, &a| {
                        let v = *acc;
                        *acc += a;
                        Some(v)
                    })
                    .collect();
                // outer: γ(o·σ; σ*fam) = γ(o; fam)·β
                for s in all_perms(k) {
                    if s == identity_perm(k) {
                        continue;
                    }
                    let Ok(os) = self.sym_act(o, &s) else { continue };
                    let sfam: Vec<OpId> = (0..k).map(|i| fam[s[i]]).collect();
                    let Some(&lhs) = self.comp.get(&(os, sfam.clone())) else {
                        report.push(format!(
                            "composition entry missing for {} with permuted family",
                            self.ops[os].name
                        ));
                        continue;
                    };
                    let mut beta = vec![0; arities.iter().sum()];
                    let mut new_off = 0;
                    for i in 0..k {
                        for t in 0..arities[s[i]] {
                            beta[new_off + t] = old_offsets[s[i]] + t;
                        }
                        new_off += arities[s[i]];
                    }
                    match self.sym_act(r, &beta) {
                        Ok(rhs) if rhs == lhs => {}
                        _ => report.push(format!(
                            "outer equivariance fails for {} with {:?}",
                            self.ops[o].name, s
                        )),
                    }
                }
                // inner: one slot at a time generates the full block group
                for i in 0..k {
                    for t in all_perms(arities[i]) {
                        if t == identity_perm(arities[i]) {
                            continue;
                        }
                        let Ok(pt) = self.sym_act(fam[i], &t) else { continue };
                        let mut fam2 = fam.clone();
                        fam2[i] = pt;
                        let Some(&lhs) = self.comp.get(&(o, fam2)) else {
                            report.push(format!(
                                "composition entry missing for {} with twisted slot {}",
                                self.ops[o].name, i
                            ));
                            continue;
                        };
                        let mut delta = identity_perm(arities.iter().sum());
                        for (u, &v) in t.iter().enumerate() {
                            delta[old_offsets[i] + u] = old_offsets[i] + v;
                        }
                        match self.sym_act(r, &delta) {
                            Ok(rhs) if rhs == lhs => {}
                            _ => report.push(format!(
                                "inner equivariance fails for {} at slot {} with {:?}",
                                self.ops[o].name, i, t
                            )),
                        }
                    }
                }
            }
        }
        report
    }
}

// ---- stock operads ---------------------------------------------------------

/// One colour, one n-ary operation for each n ≤ bound, trivial symmetry.
/// The identity is the unary operation. Requires bound ≥ 1.
pub fn comm_operad(bound: usize) -> Result<ColouredOperad, Error> {
    if bound < 1 {
        return Err(Error::input("the commutative operad needs arity bound ≥ 1"));
    }
    let ops: Vec<OpData> = (0..=bound)
        .map(|n| OpData {
            name: format!("m{n}"),
            inputs: vec![0; n],
            output: 0,
        })
        .collect();
    let mut sym = Vec::new();
    for n in 0..=bound {
        for s in all_perms(n) {
            sym.push((n, s, n));
        }
    }
    let mut comp = Vec::new();
    for k in 1..=bound {
        for fam in compositions_bounded(k, bound) {
            let total: usize = fam.iter().sum();
            comp.push((k, fam, total));
        }
    }
    ColouredOperad::new(vec!["c".into()], bound, ops, sym, comp, vec![1])
}

/// Compositions of any total ≤ bound into exactly `k` non-negative parts,
/// each part ≤ bound.
fn compositions_bounded(k: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(k: usize, bound: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            go(k, bound, left - v, cur, out);
            cur.pop();
        }
    }
    go(k, bound, bound, &mut cur, &mut out);
    out
}

/// One colour; the n-ary operations are the n! orderings of the inputs, as
/// words. `w` applied to x₀,…,x_{n−1} multiplies x_{w[0]}·x_{w[1]}·…
/// Names: "e" for the empty word, otherwise "w" followed by the digits.
pub fn assoc_operad(bound: usize) -> Result<ColouredOperad, Error> {
    if bound < 1 {
        return Err(Error::input("the associative operad needs arity bound ≥ 1"));
    }
    if bound > 6 {
        return Err(Error::input(
            "word names use single digits; arity bound ≤ 6 expected",
        ));
    }
    let mut ops = Vec::new();
    let mut index: BTreeMap<Vec<usize>, OpId> = BTreeMap::new();
    for n in 0..=bound {
        for w in all_perms(n) {
            let name = if n == 0 {
                "e".to_string()
            } else {
                format!("w{}", w.iter().map(|d| d.to_string()).collect::<String>())
            };
            index.insert(w.clone(), ops.len());
            ops.push(OpData {
                name,
                inputs: vec![0; n],
                output: 0,
            });
        }
    }
    let words: Vec<Vec<usize>> = {
        let mut v: Vec<_> = index.keys().cloned().collect();
        v.sort_by_key(|w| (w.len(), w.clone()));
        v
    };
    // w·σ = σ⁻¹ ∘ w: input i of the twisted word is input σ[i] of w
    let mut sym = Vec::new();
    for w in &words {
        for s in all_perms(w.len()) {
            let si = perm_inverse(&s);
            let tw: Vec<usize> = w.iter().map(|&l| si[l]).collect();
            sym.push((index[w], s, index[&tw]));
        }
    }
    // γ(w; v₁..v_k): multiply the blocks in the order w dictates, each
    // block internally in its own order, with offsets by outer slot
    let mut comp = Vec::new();
    for w in &words {
        let k = w.len();
        if k == 0 {
            continue;
        }
        for arities in compositions_bounded(k, bound) {
            let offsets: Vec<usize> = arities
                .iter()
                .scan(0, |acc, &a| {
                    let v = *acc;
                    *acc += a;
                    Some(v)
                })
                .collect();
            let mut choices: Vec<Vec<&Vec<usize>>> = Vec::new();
            for &a in &arities {
                choices.push(words.iter().filter(|v| v.len() == a).collect());
            }
            let mut pick = vec![0usize; k];
            loop {
                let fam: Vec<&Vec<usize>> = (0..k).map(|i| choices[i][pick[i]]).collect();
                let mut composite = Vec::new();
                for &slot in w {
                    composite.extend(fam[slot].iter().map(|&l| offsets[slot] + l));
                }
                comp.push((
                    index[w],
                    fam.iter().map(|v| index[*v]).collect(),
                    index[&composite],
                ));
                // advance the mixed-radix picker
                let mut i = 0;
                loop {
                    if i == k {
                        break;
                    }
                    pick[i] += 1;
                    if pick[i] < choices[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
    }
    let id = index[&vec![0]];
    ColouredOperad::new(vec!["c".into()], bound, ops, sym, comp, vec![id])
}

/// One colour and nothing but its identity operation.
pub fn trivial_operad(bound: usize) -> Result<ColouredOperad, Error> {
    if bound < 1 {
        return Err(Error::input("the trivial operad needs arity bound ≥ 1"));
    }
    ColouredOperad::new(
        vec!["c".into()],
        bound,
        vec![OpData {
            name: "id_c".into(),
            inputs: vec![0],
            output: 0,
        }],
        vec![],
        vec![(0, vec![0], 0)],
        vec![0],
    )
}

/// The operad of a category: colours are objects, operations are unary and
/// are the morphisms, composition is category composition. γ(g; f) = f then
/// g, so the operad composite of g after f is the diagrammatic f;g.
pub fn operad_from_category(c: &CategoryData) -> Result<ColouredOperad, Error> {
    let colours = (0..c.num_objects())
        .map(|x| c.object_name(x).to_string())
        .collect();
    let ops = (0..c.num_homs())
        .map(|f| OpData {
            name: c.hom(f).name.clone(),
            inputs: vec![c.hom(f).src],
            output: c.hom(f).tgt,
        })
        .collect();
    let mut comp = Vec::new();
    for (f, g, h) in c.comp_entries() {
        comp.push((g, vec![f], h));
    }
    let idents = (0..c.num_objects()).map(|x| c.id_of(x)).collect();
    ColouredOperad::new(colours, 1, ops, vec![], comp, idents)
}

// ---- operad morphisms ------------------------------------------------------

/// A map of operads: a colour map plus an operation map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadMorphism {
    pub colour_map: Vec<usize>,
    pub op_map: Vec<OpId>,
}

/// Every violated morphism condition: profiles, identities, symmetry, and
/// composition compatibility within the shared bound.
pub fn validate_operad_morphism(
    src: &ColouredOperad,
    tgt: &ColouredOperad,
    m: &OperadMorphism,
) -> Vec<String> {
    let mut report = Vec::new();
    if m.colour_map.len() != src.colours().len() || m.op_map.len() != src.num_ops() {
        return vec!["morphism tables have the wrong lengths".into()];
    }
    if m.colour_map.iter().any(|&c| c >= tgt.colours().len())
        || m.op_map.iter().any(|&o| o >= tgt.num_ops())
    {
        return vec!["morphism tables point outside the target".into()];
    }
    for o in 0..src.num_ops() {
        let (sd, td) = (src.op(o), tgt.op(m.op_map[o]));
        let want: Vec<usize> = sd.inputs.iter().map(|&c| m.colour_map[c]).collect();
        if td.inputs != want || td.output != m.colour_map[sd.output] {
            report.push(format!("profile of {} is not preserved", sd.name));
        }
    }
    for (c, &i) in src.idents().iter().enumerate() {
        if m.op_map[i] != tgt.ident(m.colour_map[c]) {
            report.push(format!("identity of colour {} is not preserved", src.colours()[c]));
        }
    }
    for (o, s, img) in src.sym_entries() {
        match tgt.sym_act(m.op_map[o], &s) {
            Ok(t) if t == m.op_map[img] => {}
            _ => report.push(format!(
                "symmetry of {} under {:?} is not preserved",
                src.op(o).name,
                s
            )),
        }
    }
    for (o, fam, r) in src.comp_entries() {
        let tfam: Vec<OpId> = fam.iter().map(|&p| m.op_map[p]).collect();
        match tgt.compose(m.op_map[o], &tfam) {
            Ok(t) if t == m.op_map[r] => {}
            _ => report.push(format!(
                "composition of {} with {:?} is not preserved",
                src.op(o).name,
                fam.iter().map(|&p| &src.op(p).name).collect::<Vec<_>>()
            )),
        }
    }
    report
}

/// The collapse onto the commutative operad: every colour to the single
/// colour, every n-ary operation to mₙ. The target bound must cover the
/// source's arities.
pub fn collapse_to_comm(
    src: &ColouredOperad,
    comm: &ColouredOperad,
) -> Result<OperadMorphism, Error> {
    let m1 = comm
        .op_index("m1")
        .ok_or_else(|| Error::input("target is not the commutative operad"))?;
    let _ = m1;
    let colour_map = vec![0; src.colours().len()];
    let mut op_map = Vec::with_capacity(src.num_ops());
    for o in 0..src.num_ops() {
        let n = src.arity(o);
        let img = comm
            .op_index(&format!("m{n}"))
            .ok_or_else(|| Error::overflow(format!("target bound misses arity {n}")))?;
        op_map.push(img);
    }
    Ok(OperadMorphism { colour_map, op_map })
}

// ---- symmetric sequences and the composition product ------------------------

/// A symmetric sequence truncated in arity: a finite set for each arity
/// 0..=max_arity with a right action of the symmetric group.
#[derive(Clone, Debug)]
pub struct SymSeq {
    sizes: Vec<usize>,
    // per arity: full table perm -> (elem -> elem), identity included
    actions: Vec<BTreeMap<Vec<usize>, Vec<usize>>>,
}

impl SymSeq {
    pub fn new(
        sizes: Vec<usize>,
        actions: Vec<BTreeMap<Vec<usize>, Vec<usize>>>,
    ) -> Result<Self, Error> {
        if actions.len() != sizes.len() {
            return Err(Error::input("one action table per arity required"));
        }
        for (n, table) in actions.iter().enumerate() {
            let perms = all_perms(n);
            if table.len() != perms.len() {
                return Err(Error::input(format!(
                    "arity {n} needs a table for every permutation"
                )));
            }
            for s in &perms {
                let Some(row) = table.get(s) else {
                    return Err(Error::input(format!("arity {n} misses a permutation")));
                };
                if row.len() != sizes[n] || row.iter().any(|&v| v >= sizes[n]) {
                    return Err(Error::input(format!("arity {n} has a malformed action row")));
                }
            }
            if table[&identity_perm(n)] != (0..sizes[n]).collect::<Vec<_>>() {
                return Err(Error::input(format!(
                    "identity permutation must act trivially at arity {n}"
                )));
            }
            for s in &perms {
                for t in &perms {
                    let st = perm_compose(s, t);
                    for x in 0..sizes[n] {
                        if table[&st][x] != table[t][table[s][x]] {
                            return Err(Error::input(format!(
                                "action law fails at arity {n}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(SymSeq { sizes, actions })
    }

    pub fn max_arity(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn size(&self, n: usize) -> usize {
        if n < self.sizes.len() {
            self.sizes[n]
        } else {
            0
        }
    }

    pub fn act(&self, n: usize, x: usize, s: &[usize]) -> usize {
        self.actions[n][s][x]
    }

    /// The underlying symmetric sequence of a one-colour operad. Elements
    /// of arity n are that operad's n-ary operations in id order.
    pub fn from_operad(o: &ColouredOperad) -> Result<SymSeq, Error> {
        if o.colours().len() != 1 {
            return Err(Error::input(
                "symmetric sequences are taken over one colour",
            ));
        }
        let mut per_arity: Vec<Vec<OpId>> = vec![Vec::new(); o.max_arity() + 1];
        for i in 0..o.num_ops() {
            per_arity[o.arity(i)].push(i);
        }
        let sizes: Vec<usize> = per_arity.iter().map(|v| v.len()).collect();
        let mut actions = Vec::new();
        for (n, elems) in per_arity.iter().enumerate() {
            let rank: HashMap<OpId, usize> =
                elems.iter().enumerate().map(|(r, &op)| (op, r)).collect();
            let mut table = BTreeMap::new();
            for s in all_perms(n) {
                let mut row = Vec::with_capacity(elems.len());
                for &op in elems {
                    row.push(rank[&o.sym_act(op, &s)?]);
                }
                table.insert(s, row);
            }
            actions.push(table);
        }
        SymSeq::new(sizes, actions)
    }
}

/// The free symmetric sequence on `generators[n]` generators of each arity
/// `n`: level `n` has `generators[n] · n!` elements, indexed generator-major
/// by (generator, permutation) with the regular action on the second slot.
pub fn free_symmetric_sequence(generators: &[usize]) -> Result<SymSeq, Error> {
    let mut sizes = Vec::with_capacity(generators.len());
    let mut actions = Vec::with_capacity(generators.len());
    for (n, &g) in generators.iter().enumerate() {
        let perms = all_perms(n);
        let perm_ix: BTreeMap<Vec<usize>, usize> = perms.iter().cloned().zip(0..).collect();
        sizes.push(g * perms.len());
        let mut table = BTreeMap::new();
        for s in &perms {
            let mut row = Vec::with_capacity(g * perms.len());
            for gen in 0..g {
                for tau in &perms {
                    row.push(gen * perms.len() + perm_ix[&perm_compose(tau, s)]);
                }
            }
            table.insert(s.clone(), row);
        }
        actions.push(table);
    }
    SymSeq::new(sizes, actions)
}

/// A finite right Σₙ-set: the arity-n component of a composition product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSeqLevel {
    pub size: usize,
    pub action: BTreeMap<Vec<usize>, Vec<usize>>,
}

// A tree of depth ≤ 2: a root element of A(k) with k children from B, and a
// bijective leaf labelling. Field order gives the canonical comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct TreeElem {
    arities: Vec<usize>,
    a: usize,
    bs: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

fn tree_orbit_min(a: &SymSeq, b: &SymSeq, t: &TreeElem) -> TreeElem {
    let mut seen: HashSet<TreeElem> = HashSet::new();
    let mut queue = vec![t.clone()];
    seen.insert(t.clone());
    let mut best = t.clone();
    while let Some(cur) = queue.pop() {
        if cur < best {
            best = cur.clone();
        }
        let k = cur.arities.len();
        // root moves: (a, b̄, λ̄) ~ (a·σ, σ*b̄, σ*λ̄)
        for s in all_perms(k) {
            if s == identity_perm(k) {
                continue;
            }
            let moved = TreeElem {
                arities: (0..k).map(|i| cur.arities[s[i]]).collect(),
                a: a.act(k, cur.a, &s),
                bs: (0..k).map(|i| cur.bs[s[i]]).collect(),
                leaves: (0..k).map(|i| cur.leaves[s[i]].clone()).collect(),
            };
            if seen.insert(moved.clone()) {
                queue.push(moved);
            }
        }
        // child moves: (b_i, λ_i) ~ (b_i·τ, λ_i∘τ)
        for i in 0..k {
            for tau in all_perms(cur.arities[i]) {
                if tau == identity_perm(cur.arities[i]) {
                    continue;
                }
                let mut moved = cur.clone();
                moved.bs[i] = b.act(cur.arities[i], cur.bs[i], &tau);
                moved.leaves[i] = tau.iter().map(|&u| cur.leaves[i][u]).collect();
                if seen.insert(moved.clone()) {
                    queue.push(moved);
                }
            }
        }
    }
    best
}

/// The arity-n component of the composition product A∘B, truncating the
/// root arity at `k_bound`: trees with a root from A and one layer of
/// children from B, with leaves named 0..n-1, modulo the symmetry
/// identifications, carrying its right Σₙ-action.
pub fn composition_product(a: &SymSeq, b: &SymSeq, n: usize, k_bound: usize) -> SymSeqLevel {
    let mut reps: Vec<TreeElem> = Vec::new();
    let mut seen: HashSet<TreeElem> = HashSet::new();
    for k in 0..=k_bound.min(a.max_arity()) {
        for a_elem in 0..a.size(k) {
            for arities in compositions_exact(n, k, b.max_arity()) {
                let offsets: Vec<usize> = arities
                    .iter()
                    .scan(0, |acc, &x| {
                        let v = *acc;
                        *acc += x;
                        Some(v)
                    })
                    .collect();
                let sizes: Vec<usize> = arities.iter().map(|&m| b.size(m)).collect();
                if sizes.iter().any(|&s| s == 0) && k > 0 {
                    continue;
                }
                let mut pick = vec![0usize; k];
                loop {
                    for name_perm in all_perms(n) {
                        let leaves: Vec<Vec<usize>> = (0..k)
                            .map(|i| name_perm[offsets[i]..offsets[i] + arities[i]].to_vec())
                            .collect();
                        let t = TreeElem {
                            arities: arities.clone(),
                            a: a_elem,
                            bs: pick.clone(),
                            leaves,
                        };
                        let canon = tree_orbit_min(a, b, &t);
                        if seen.insert(canon.clone()) {
                            reps.push(canon);
                        }
                    }
                    // advance
                    let mut i = 0;
                    while i < k {
                        pick[i] += 1;
                        if pick[i] < sizes[i] {
                            break;
                        }
                        pick[i] = 0;
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                }
            }
        }
    }
    reps.sort();
    let rank: HashMap<TreeElem, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let mut action = BTreeMap::new();
    for p in all_perms(n) {
        let pi = perm_inverse(&p);
        let mut row = Vec::with_capacity(reps.len());
        for t in &reps {
            let mut moved = t.clone();
            for l in moved.leaves.iter_mut() {
                for v in l.iter_mut() {
                    *v = pi[*v];
                }
            }
            row.push(rank[&tree_orbit_min(a, b, &moved)]);
        }
        action.insert(p, row);
    }
    SymSeqLevel {
        size: reps.len(),
        action,
    }
}

/// Compositions of `n` into exactly `k` parts, each ≤ cap.
fn compositions_exact(n: usize, k: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n_left: usize, k_left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k_left == 0 {
            if n_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=n_left.min(cap) {
            cur.push(v);
            go(n_left - v, k_left - 1, cap, cur, out);
            cur.pop();
        }
    }
    go(n, k, cap, &mut cur, &mut out);
    out
}

/// The composition product as a symmetric sequence up to arity `max_n`.
pub fn compose_symseq(
    a: &SymSeq,
    b: &SymSeq,
    max_n: usize,
    k_bound: usize,
) -> Result<SymSeq, Error> {
    let mut sizes = Vec::new();
    let mut actions = Vec::new();
    for n in 0..=max_n {
        let level = composition_product(a, b, n, k_bound);
        sizes.push(level.size);
        actions.push(level.action);
    }
    SymSeq::new(sizes, actions)
}

/// Isomorphism of finite right Σₙ-sets, by comparing orbit stabilizers up
/// to conjugacy.
pub fn levels_isomorphic(x: &SymSeqLevel, y: &SymSeqLevel, n: usize) -> bool {
    if x.size != y.size {
        return false;
    }
    fn signature(l: &SymSeqLevel, n: usize) -> Vec<(usize, Vec<Vec<usize>>)> {
        let perms = all_perms(n);
        let mut seen = vec![false; l.size];
        let mut sig = Vec::new();
        for start in 0..l.size {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < orbit.len() {
                for p in &perms {
                    let img = l.action[p][orbit[i]];
                    if !seen[img] {
                        seen[img] = true;
                        orbit.push(img);
                    }
                }
                i += 1;
            }
            let mut stab: Vec<Vec<usize>> = perms
                .iter()
                .filter(|p| l.action[*p][start] == start)
                .cloned()
                .collect();
            stab.sort();
            // canonical stabilizer: minimum conjugate
            let mut best = stab.clone();
            for g in &perms {
                let gi = perm_inverse(g);
                let mut conj: Vec<Vec<usize>> = stab
                    .iter()
                    .map(|s| perm_compose(&perm_compose(&gi, s), g))
                    .collect();
                conj.sort();
                if conj < best {
                    best = conj;
                }
            }
            sig.push((orbit.len(), best));
        }
        sig.sort();
        sig
    }
    signature(x, n) == signature(y, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_conventions() {
        let s = vec![1, 2, 0];
        let t = vec![2, 0, 1];
        assert_eq!(perm_compose(&s, &perm_inverse(&s)), identity_perm(3));
        // compose(s, t)[i] = s[t[i]]
        assert_eq!(perm_compose(&s, &t), vec![0, 1, 2]);
        assert_eq!(perm_block_sum(&[vec![1, 0], vec![0, 1]]), vec![1, 0, 2, 3]);
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn comm_operad_is_lawful() {
        for bound in 1..=3 {
            let o = comm_operad(bound).unwrap();
            assert!(o.validate().is_empty(), "bound {bound}");
            assert_eq!(o.num_ops(), bound + 1);
        }
    }

    #[test]
    fn assoc_operad_is_lawful() {
        let o = assoc_operad(3).unwrap();
        assert!(o.validate().is_empty());
        assert_eq!(o.num_ops(), 1 + 1 + 2 + 6);
        // w01 · swap = w10
        let w10 = o.op_index("w10").unwrap();
        let w01 = o.op_index("w01").unwrap();
        assert_eq!(o.sym_act(w01, &[1, 0]).unwrap(), w10);
    }

    #[test]
    fn assoc_block_substitution() {
        // γ(w10; w01, w01) moves the second block first
        let o = assoc_operad(4).unwrap();
        let w10 = o.op_index("w10").unwrap();
        let w01 = o.op_index("w01").unwrap();
        let r = o.compose(w10, &[w01, w01]).unwrap();
        assert_eq!(o.op(r).name, "w2301");
    }

    #[test]
    fn trivial_and_category_operads_are_lawful() {
        assert!(trivial_operad(2).unwrap().validate().is_empty());
        let c = CategoryData::walking_arrow();
        let o = operad_from_category(&c).unwrap();
        assert!(o.validate().is_empty());
        assert_eq!(o.num_ops(), 3);
        // γ(f; id_a) = f, i.e. id_a then f
        let f = o.op_index("f").unwrap();
        let id_a = o.op_index("id_a").unwrap();
        assert_eq!(o.compose(f, &[id_a]).unwrap(), f);
    }

    #[test]
    fn corrupted_composition_is_reported() {
        let good = assoc_operad(2).unwrap();
        let mut comp = good.comp_entries();
        let w01 = good.op_index("w01").unwrap();
        let w10 = good.op_index("w10").unwrap();
        let id = good.op_index("w0").unwrap();
        // redirect γ(w01; w0, w0) from w01 to w10
        for e in comp.iter_mut() {
            if *e == (w01, vec![id, id], w01) {
                e.2 = w10;
            }
        }
        let bad = ColouredOperad::new(
            good.colours().to_vec(),
            good.max_arity(),
            (0..good.num_ops()).map(|i| good.op(i).clone()).collect(),
            good.sym_entries(),
            comp,
            good.idents().to_vec(),
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.is_empty());
        assert!(report.iter().any(|l| l.contains("w01")));
    }

    #[test]
    fn nullary_composition_is_definitional() {
        let o = comm_operad(2).unwrap();
        let m0 = o.op_index("m0").unwrap();
        assert_eq!(o.compose(m0, &[]).unwrap(), m0);
    }

    #[test]
    fn overflow_is_an_error() {
        let o = comm_operad(2).unwrap();
        let m2 = o.op_index("m2").unwrap();
        assert!(matches!(
            o.compose(m2, &[m2, m2]),
            Err(Error::BoundOverflow(_))
        ));
    }

    #[test]
    fn collapse_morphism_is_valid() {
        let comm = comm_operad(3).unwrap();
        for src in [assoc_operad(3).unwrap(), trivial_operad(3).unwrap(), comm.clone()] {
            let m = collapse_to_comm(&src, &comm).unwrap();
            assert!(validate_operad_morphism(&src, &comm, &m).is_empty());
        }
    }

    #[test]
    fn morphism_violations_are_reported() {
        let comm = comm_operad(2).unwrap();
        let assoc = assoc_operad(2).unwrap();
        let mut m = collapse_to_comm(&assoc, &comm).unwrap();
        // send the identity somewhere wrong
        m.op_map[assoc.op_index("w0").unwrap()] = comm.op_index("m2").unwrap();
        assert!(!validate_operad_morphism(&assoc, &comm, &m).is_empty());
    }

    #[test]
    fn composition_product_singletons() {
        // A(1) = {a}, B(1) = {b}: one unary tree
        let single = |at: usize| {
            let mut sizes = vec![0; 2];
            sizes[at] = 1;
            let mut actions = Vec::new();
            for n in 0..2 {
                let mut t = BTreeMap::new();
                for s in all_perms(n) {
                    t.insert(s, (0..sizes[n]).collect());
                }
                actions.push(t);
            }
            SymSeq::new(sizes, actions).unwrap()
        };
        let a = single(1);
        let b = single(1);
        let l = composition_product(&a, &b, 1, 1);
        assert_eq!(l.size, 1);
        assert_eq!(composition_product(&a, &b, 2, 1).size, 0);
    }

    #[test]
    fn composition_product_regular_orbit() {
        // A(2) = Σ₂ regular, B(1) = {b}: two trees at arity 2
        let mut a_actions = Vec::new();
        for n in 0..3 {
            let mut t = BTreeMap::new();
            let size = if n == 2 { 2 } else { 0 };
            for s in all_perms(n) {
                if n == 2 && s == vec![1, 0] {
                    t.insert(s, vec![1, 0]);
                } else {
                    t.insert(s, (0..size).collect());
                }
            }
            a_actions.push(t);
        }
        let a = SymSeq::new(vec![0, 0, 2], a_actions).unwrap();
        let mut b_actions = Vec::new();
        for n in 0..2 {
            let mut t = BTreeMap::new();
            let size = if n == 1 { 1 } else { 0 };
            for s in all_perms(n) {
                t.insert(s, (0..size).collect());
            }
            b_actions.push(t);
        }
        let b = SymSeq::new(vec![0, 1], b_actions).unwrap();
        let l = composition_product(&a, &b, 2, 2);
        assert_eq!(l.size, 2);
        // the action is still free
        assert_eq!(l.action[&vec![1, 0]], vec![1, 0]);
    }

    #[test]
    fn symseq_from_comm_has_singletons() {
        let o = comm_operad(3).unwrap();
        let s = SymSeq::from_operad(&o).unwrap();
        assert_eq!((0..=3).map(|n| s.size(n)).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn level_iso_detects_action_difference() {
        // two elements: trivial action vs regular swap
        let mk = |swap: bool| {
            let mut action = BTreeMap::new();
            action.insert(vec![0, 1], vec![0, 1]);
            action.insert(vec![1, 0], if swap { vec![1, 0] } else { vec![0, 1] });
            SymSeqLevel { size: 2, action }
        };
        assert!(!levels_isomorphic(&mk(true), &mk(false), 2));
        assert!(levels_isomorphic(&mk(true), &mk(true), 2));
    }

    #[test]
    fn free_symmetric_sequences_carry_regular_orbits() {
        let k = free_symmetric_sequence(&[0, 0, 1]).unwrap();
        assert_eq!(k.size(2), 2);
        // the transposition swaps the two points of the regular orbit
        assert_eq!(k.act(2, 0, &[1, 0]), 1);
        assert_eq!(k.act(2, 1, &[1, 0]), 0);
        let k3 = free_symmetric_sequence(&[0, 1, 0, 2]).unwrap();
        assert_eq!(k3.size(1), 1);
        assert_eq!(k3.size(2), 0);
        assert_eq!(k3.size(3), 12);
    }
}
