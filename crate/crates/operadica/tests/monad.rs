//! Free-algebra monads checked against independent counting oracles: orbit
//! counts by direct partition refinement, multiset counts by binomials, word
//! counts by powers, tree counts by Catalan numbers, and the monad laws,
//! cartesianness, and terminality quantified over all small family maps.

use operadica::monad::{
    check_cartesian, check_monad_laws, check_naturality, enumerate_family_maps, eval_poly,
    free_algebra, free_algebra_preserves_coproduct, free_operad, is_linear, leaf_multiset,
    linear_monad, poly_from_operad, sym_monad, terminal_grading_maps, Family, FlatTerm, Square,
};
use operadica::operad::{
    all_perms, assoc_operad, comm_operad, operad_from_category, trivial_operad, ColouredOperad,
    SymSeq,
};
use operadica::segal::{CategoryData, PinnedCategory};
use std::collections::BTreeMap;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut v = 1u64;
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    v
}

fn shipped() -> Vec<(&'static str, ColouredOperad, Family)> {
    vec![
        ("comm", comm_operad(2).unwrap(), Family::new(vec![2])),
        ("assoc", assoc_operad(2).unwrap(), Family::new(vec![2])),
        ("trivial", trivial_operad(2).unwrap(), Family::new(vec![2])),
        (
            "walking arrow",
            operad_from_category(&CategoryData::walking_arrow()).unwrap(),
            Family::new(vec![2, 2]),
        ),
    ]
}

#[test]
fn orbit_counts_match_direct_partition_refinement() {
    for (name, o, f) in &shipped() {
        let raw = eval_poly(&poly_from_operad(o), f);
        let tf = free_algebra(o, f, o.max_arity()).unwrap();
        for (c, terms) in raw.iter().enumerate() {
            // union-find over the raw terms under (op, args) ~ (op·σ, args∘σ)
            let index: BTreeMap<&FlatTerm, usize> =
                terms.iter().enumerate().map(|(i, t)| (t, i)).collect();
            let mut parent: Vec<usize> = (0..terms.len()).collect();
            fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
                while parent[i] != i {
                    parent[i] = parent[parent[i]];
                    i = parent[i];
                }
                i
            }
            for (i, t) in terms.iter().enumerate() {
                for s in all_perms(t.args.len()) {
                    let image = FlatTerm {
                        op: o.sym_act(t.op, &s).unwrap(),
                        args: (0..s.len()).map(|j| t.args[s[j]]).collect(),
                    };
                    let j = index[&image];
                    let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                    parent[a] = b;
                }
            }
            let mut classes: Vec<usize> = (0..terms.len())
                .map(|i| root(&mut parent, i))
                .collect();
            classes.sort_unstable();
            classes.dedup();
            assert_eq!(
                classes.len(),
                tf.colour_total(c),
                "{name}: orbit count in colour {c}"
            );
        }
    }
}

#[test]
fn comm_free_algebra_counts_are_binomials() {
    let comm = comm_operad(4).unwrap();
    for n in 0..=3usize {
        let tf = free_algebra(&comm, &Family::new(vec![n]), 4).unwrap();
        for k in 0..=4usize {
            assert_eq!(
                tf.count(0, k) as u64,
                binom((n + k).saturating_sub(1) as u64, k as u64),
                "multisets of size {k} over {n}"
            );
        }
    }
}

#[test]
fn assoc_free_algebra_counts_are_powers() {
    let assoc = assoc_operad(3).unwrap();
    for n in 0..=3usize {
        let tf = free_algebra(&assoc, &Family::new(vec![n]), 3).unwrap();
        for k in 0..=3usize {
            assert_eq!(tf.count(0, k), n.pow(k as u32), "words of length {k} over {n}");
        }
    }
}

#[test]
fn eval_poly_lists_the_raw_terms_in_operation_order() {
    for (name, o, f) in &shipped() {
        let raw = eval_poly(&poly_from_operad(o), f);
        // independent re-derivation straight from the operation profiles
        let mut expect: Vec<Vec<FlatTerm>> = vec![Vec::new(); o.colours().len()];
        for op in 0..o.num_ops() {
            let dims: Vec<usize> = o.op(op).inputs.iter().map(|&c| f.sizes[c]).collect();
            let mut stack = vec![Vec::new()];
            for &d in &dims {
                let mut next = Vec::new();
                for prefix in &stack {
                    for v in 0..d {
                        let mut row: Vec<usize> = prefix.clone();
                        row.push(v);
                        next.push(row);
                    }
                }
                stack = next;
            }
            for args in stack {
                expect[o.op(op).output].push(FlatTerm { op, args });
            }
        }
        assert_eq!(&raw, &expect, "{name}");
    }
}

#[test]
fn monad_laws_and_naturality_hold_for_all_small_maps() {
    for (name, o, f) in &shipped() {
        assert_eq!(
            check_monad_laws(o, f, 2).unwrap(),
            Vec::<String>::new(),
            "{name}"
        );
        for sizes in size_grid(o.colours().len()) {
            let g = Family::new(sizes);
            for phi in enumerate_family_maps(f, &g) {
                assert_eq!(
                    check_naturality(o, &phi, 2).unwrap(),
                    Vec::<String>::new(),
                    "{name} naturality"
                );
            }
        }
    }
}

fn size_grid(colours: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..colours {
        let mut next = Vec::new();
        for prefix in &out {
            for v in 1..=2usize {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

#[test]
fn unit_and_mult_are_cartesian_for_all_small_maps() {
    for (name, o, _) in &shipped() {
        for f_sizes in size_grid(o.colours().len()) {
            for g_sizes in size_grid(o.colours().len()) {
                let f = Family::new(f_sizes.clone());
                let g = Family::new(g_sizes);
                for phi in enumerate_family_maps(&f, &g) {
                    assert!(
                        check_cartesian(o, Square::Unit, &phi, 2).unwrap(),
                        "{name} unit at {phi:?}"
                    );
                    assert!(
                        check_cartesian(o, Square::Mult, &phi, 2).unwrap(),
                        "{name} mult at {phi:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn exactly_one_terminal_map_for_every_shipped_operad() {
    for (name, o, f) in &shipped() {
        let maps = terminal_grading_maps(o, f, 2).unwrap();
        assert_eq!(maps.len(), 1, "{name}");
        for ((_, t), value) in &maps[0] {
            assert_eq!(value, &leaf_multiset(o, f, t), "{name} at {t:?}");
        }
    }
}

#[test]
fn sym_monad_agrees_with_comm_gradewise() {
    let comm = comm_operad(4).unwrap();
    for n in 0..=3usize {
        let tf = free_algebra(&comm, &Family::new(vec![n]), 4).unwrap();
        let sym = sym_monad(n, 4);
        for k in 0..=4usize {
            let terms: Vec<Vec<usize>> = tf.levels[0][k].iter().map(|t| t.args.clone()).collect();
            assert_eq!(terms, sym[k], "grade {k} over {n}");
        }
    }
}

#[test]
fn linear_monads_agree_with_unary_free_algebras() {
    let cats = vec![
        CategoryData::walking_arrow(),
        CategoryData::discrete(2),
        CategoryData::contractible_groupoid(2),
    ];
    for cat in cats {
        let o = operad_from_category(&cat).unwrap();
        let pc = PinnedCategory::identity_pinning(cat.clone());
        let f = Family::new(vec![2; cat.num_objects()]);
        let lin = linear_monad(&pc, &f).unwrap();
        let terms = free_algebra(&o, &f, 1).unwrap();
        for x in 0..cat.num_objects() {
            let mut got: Vec<(usize, usize, usize)> = lin[x].clone();
            got.sort();
            let mut want: Vec<(usize, usize, usize)> = terms
                .flatten(x)
                .iter()
                .map(|t| (o.op(t.op).inputs[0], t.op, t.args[0]))
                .collect();
            want.sort();
            assert_eq!(got, want, "{} at object {x}", cat.object_name(x));
        }
    }
}

#[test]
fn linearity_is_equivalent_to_coproduct_preservation() {
    let singles = vec![
        comm_operad(2).unwrap(),
        comm_operad(1).unwrap(),
        assoc_operad(2).unwrap(),
        trivial_operad(2).unwrap(),
    ];
    let f = Family::new(vec![2]);
    let g = Family::new(vec![2]);
    for o in &singles {
        assert_eq!(
            is_linear(o),
            free_algebra_preserves_coproduct(o, &f, &g, 2).unwrap()
        );
    }
    let arrow = operad_from_category(&CategoryData::walking_arrow()).unwrap();
    assert_eq!(
        is_linear(&arrow),
        free_algebra_preserves_coproduct(
            &arrow,
            &Family::new(vec![2, 2]),
            &Family::new(vec![1, 2]),
            2
        )
        .unwrap()
    );
}

fn free_binary_generator() -> SymSeq {
    let mut arity0 = BTreeMap::new();
    arity0.insert(Vec::new(), Vec::new());
    let mut arity1 = BTreeMap::new();
    arity1.insert(vec![0], Vec::new());
    let mut arity2 = BTreeMap::new();
    arity2.insert(vec![0, 1], vec![0, 1]);
    arity2.insert(vec![1, 0], vec![1, 0]);
    SymSeq::new(vec![0, 0, 2], vec![arity0, arity1, arity2]).unwrap()
}

#[test]
fn free_operad_counts_match_labelled_tree_formulas() {
    // one binary generator with a free Σ₂-action: arity-n operations are
    // leaf-labelled binary trees, n! · Catalan(n − 1) of them
    let o = free_operad(&free_binary_generator(), 3, 2).unwrap();
    let catalan = |n: u64| binom(2 * n, n) / (n + 1);
    for n in 2..=3u64 {
        let count = (0..o.num_ops()).filter(|&op| o.arity(op) == n as usize).count() as u64;
        let factorial: u64 = (1..=n).product();
        assert_eq!(count, factorial * catalan(n - 1), "arity {n}");
    }
    assert_eq!(o.validate(), Vec::<String>::new());

    // grafting: plugging the two one-vertex trees together gives the
    // left-combed three-leaf tree
    let e0 = o.op_index("g2_0(1,2)").unwrap();
    let id = o.op_index("1").unwrap();
    let combed = o.compose(e0, &[e0, id]).unwrap();
    assert_eq!(o.op(combed).name, "g2_0(g2_0(1,2),3)");
}
