//! Span-level law suite: witness/pullback composition against matrix
//! composition, the inert–active factorization, pointed-map embedding,
//! products, and hom counting, each checked against an independent oracle.

use operadica::finspan::{
    compose_pointed, embed_pointed_map, enumerate_maps, enumerate_spans, hom_count, product_cone,
    pullback, rho_inert, FinMap, Span, SpanWitness,
};
use operadica::suite_seed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Oracle composite: count matching pairs directly from the two matrices,
/// never calling the library's pullback or compose.
fn oracle_compose(a: &Span, b: &Span) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0usize; b.cod()]; a.dom()];
    for i in 0..a.dom() {
        for j in 0..a.cod() {
            for k in 0..b.cod() {
                // each apex element of a over (i,j) pairs with each apex
                // element of b over (j,k)
                out[i][k] += a.entry(i, j) * b.entry(j, k);
            }
        }
    }
    out
}

fn all_witnesses(dom: usize, cod: usize, apex: usize) -> Vec<SpanWitness> {
    let mut out = Vec::new();
    for left in enumerate_maps(apex, dom) {
        for right in enumerate_maps(apex, cod) {
            out.push(SpanWitness::new(left.clone(), right).unwrap());
        }
    }
    out
}

#[test]
fn witness_composition_agrees_with_matrix_product() {
    // Exhaustive over small shapes: canonicalize(compose(w1, w2)) must equal
    // compose(canonicalize(w1), canonicalize(w2)).
    for s in 0..3 {
        for t in 0..3 {
            for u in 0..3 {
                for a1 in 0..3 {
                    for a2 in 0..3 {
                        for w1 in all_witnesses(s, t, a1) {
                            for w2 in all_witnesses(t, u, a2) {
                                let via_pullback = w1.compose(&w2).unwrap().canonicalize();
                                let via_matrix =
                                    w1.canonicalize().compose(&w2.canonicalize()).unwrap();
                                assert_eq!(via_pullback, via_matrix);
                                assert_eq!(via_matrix.matrix(), oracle_compose(&w1.canonicalize(), &w2.canonicalize()));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn random_composites_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(suite_seed());
    for _ in 0..500 {
        let s = rng.gen_range(0..6);
        let t = rng.gen_range(0..6);
        let u = rng.gen_range(0..6);
        let a = random_span(&mut rng, s, t, 3);
        let b = random_span(&mut rng, t, u, 3);
        assert_eq!(a.compose(&b).unwrap().matrix(), oracle_compose(&a, &b));
        // and the witness route agrees
        assert_eq!(
            a.witness().compose(&b.witness()).unwrap().canonicalize(),
            a.compose(&b).unwrap()
        );
    }
}

fn random_span(rng: &mut ChaCha8Rng, dom: usize, cod: usize, max_entry: usize) -> Span {
    let matrix = (0..dom)
        .map(|_| (0..cod).map(|_| rng.gen_range(0..=max_entry)).collect())
        .collect();
    Span::from_matrix_with_shape(dom, cod, matrix).unwrap()
}

#[test]
fn composition_is_associative_and_unital() {
    let mut rng = ChaCha8Rng::seed_from_u64(suite_seed() ^ 1);
    for _ in 0..300 {
        let s = rng.gen_range(0..5);
        let t = rng.gen_range(0..5);
        let u = rng.gen_range(0..5);
        let v = rng.gen_range(0..5);
        let a = random_span(&mut rng, s, t, 2);
        let b = random_span(&mut rng, t, u, 2);
        let c = random_span(&mut rng, u, v, 2);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(Span::identity(s).compose(&a).unwrap(), a);
        assert_eq!(a.compose(&Span::identity(t)).unwrap(), a);
    }
}

#[test]
fn factorization_is_inert_active_and_recomposes() {
    for span in spans_up_to(3, 3, 3) {
        let (i, a) = span.factor_inert_active();
        assert!(i.is_inert());
        assert!(a.is_active());
        assert_eq!(i.cod(), span.total());
        assert_eq!(a.dom(), span.total());
        assert_eq!(i.compose(&a).unwrap(), span);
    }
}

fn spans_up_to(max_dom: usize, max_cod: usize, max_total: usize) -> Vec<Span> {
    let mut out = Vec::new();
    for dom in 0..=max_dom {
        for cod in 0..=max_cod {
            out.extend(enumerate_spans(dom, cod, max_total));
        }
    }
    out
}

#[test]
fn factorization_is_unique_up_to_middle_bijection() {
    // Any other inert/active pair through a middle of the same size that
    // recomposes to the span must be a relabeling of the canonical one:
    // the multiset of (backwards-leg value, forwards-map value) pairs over
    // the middle is an invariant, and it determines the canonical pair.
    for span in spans_up_to(2, 2, 3) {
        let k = span.total();
        let (ci, ca) = span.factor_inert_active();
        let canon = middle_profile(&ci, &ca, k);
        // search all inert spans dom→k and active spans k→cod
        for inert in enumerate_spans(span.dom(), k, k) {
            if !inert.is_inert() {
                continue;
            }
            for active in enumerate_spans(k, span.cod(), k) {
                if !active.is_active() {
                    continue;
                }
                if inert.compose(&active).unwrap() == span {
                    assert_eq!(middle_profile(&inert, &active, k), canon);
                }
            }
        }
    }
}

fn middle_profile(inert: &Span, active: &Span, k: usize) -> Vec<(usize, usize)> {
    let u = inert.inert_as_reverse_map().unwrap();
    let f = active.active_as_map().unwrap();
    let mut profile: Vec<(usize, usize)> = (0..k).map(|e| (u.apply(e), f.apply(e))).collect();
    profile.sort_unstable();
    profile
}

#[test]
fn active_spans_are_graphs_and_inerts_are_reversed_maps() {
    for span in spans_up_to(3, 3, 4) {
        assert_eq!(span.is_active(), span.active_as_map().is_some());
        assert_eq!(span.is_inert(), span.inert_as_reverse_map().is_some());
        if let Some(f) = span.active_as_map() {
            assert_eq!(Span::active_from_map(&f), span);
        }
        if let Some(u) = span.inert_as_reverse_map() {
            assert_eq!(Span::inert_from_reverse(&u), span);
        }
    }
    // active ∘ active stays active (functions compose), inert ∘ inert stays inert
    for f in enumerate_maps(2, 3) {
        for g in enumerate_maps(3, 2) {
            let composite = Span::active_from_map(&f)
                .compose(&Span::active_from_map(&g))
                .unwrap();
            assert_eq!(composite, Span::active_from_map(&f.then(&g).unwrap()));
            let composite = Span::inert_from_reverse(&f)
                .compose(&Span::inert_from_reverse(&g))
                .unwrap();
            // reversed maps compose contravariantly
            assert_eq!(composite, Span::inert_from_reverse(&g.then(&f).unwrap()));
        }
    }
}

fn all_pointed_maps(dom: usize, cod: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![vec![]];
    for _ in 0..dom {
        let mut next = Vec::new();
        for prefix in &out {
            for v in std::iter::once(None).chain((0..cod).map(Some)) {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

#[test]
fn pointed_map_embedding_is_a_functor() {
    // identity-on-points ↦ identity span; composition of partial maps ↦
    // composition of spans; embedding is injective with image = inert-graded
    // 0/1 row-sum-≤1 spans.
    for s in 0..4 {
        for t in 0..4 {
            for u in 0..3 {
                for phi in all_pointed_maps(s, t) {
                    let e_phi = embed_pointed_map(&phi, t).unwrap();
                    assert!(e_phi.matrix().iter().all(|row| row.iter().sum::<usize>() <= 1));
                    for psi in all_pointed_maps(t, u) {
                        let e_psi = embed_pointed_map(&psi, u).unwrap();
                        let composed = embed_pointed_map(&compose_pointed(&phi, &psi), u).unwrap();
                        assert_eq!(e_phi.compose(&e_psi).unwrap(), composed);
                    }
                }
            }
        }
    }
    let id: Vec<Option<usize>> = (0..3).map(Some).collect();
    assert_eq!(embed_pointed_map(&id, 3).unwrap(), Span::identity(3));
}

#[test]
fn product_cone_induces_hom_bijection() {
    // Hom(E, S⊔T) ≅ Hom(E, S) × Hom(E, T) by post-composition with the
    // projections; graded by total on both sides.
    for e in 0..3 {
        for s in 0..3 {
            for t in 0..3 {
                let (st, pr_s, pr_t) = product_cone(s, t);
                let d = 3usize;
                let mut seen = std::collections::BTreeMap::new();
                for h in enumerate_spans(e, st, d) {
                    let pair = (
                        h.compose(&pr_s).unwrap(),
                        h.compose(&pr_t).unwrap(),
                    );
                    // grading splits: total = total of the two components
                    assert_eq!(h.total(), pair.0.total() + pair.1.total());
                    assert!(
                        seen.insert(format!("{pair:?}"), ()).is_none(),
                        "post-composition with projections must be injective"
                    );
                }
                // surjectivity by counting: pairs (h1, h2) with
                // total(h1)+total(h2) ≤ d are exactly the image
                let lhs = seen.len() as u64;
                let mut rhs = 0u64;
                for h1 in enumerate_spans(e, s, d) {
                    for h2 in enumerate_spans(e, t, d) {
                        if h1.total() + h2.total() <= d {
                            rhs += 1;
                        }
                    }
                }
                assert_eq!(lhs, rhs, "hom bijection count at E={e}, S={s}, T={t}");
            }
        }
    }
}

#[test]
fn rho_spans_detect_elements() {
    // ρ'ₛ composed after a span picks out column s of the matrix.
    for span in spans_up_to(3, 3, 3) {
        for s in 0..span.cod() {
            let picked = span.compose(&rho_inert(span.cod(), s).unwrap()).unwrap();
            let expected: Vec<Vec<usize>> =
                (0..span.dom()).map(|i| vec![span.entry(i, s)]).collect();
            assert_eq!(picked.matrix(), expected);
        }
    }
}

#[test]
fn hom_count_matches_enumeration_at_larger_shapes() {
    for (s, t, d) in [(3, 2, 4), (2, 3, 4), (4, 1, 5), (1, 4, 5), (0, 3, 2), (3, 0, 2)] {
        assert_eq!(enumerate_spans(s, t, d).len() as u64, hom_count(s, t, d));
    }
}

#[test]
fn pullback_is_a_limit() {
    // The library pullback satisfies the universal property against every
    // competing cone, at small sizes.
    for a in 0..3 {
        for b in 0..3 {
            for c in 1..3 {
                for f in enumerate_maps(a, c) {
                    for g in enumerate_maps(b, c) {
                        let (p, pa, pb) = pullback(&f, &g).unwrap();
                        // cone commutes
                        for x in 0..p {
                            assert_eq!(f.apply(pa.apply(x)), g.apply(pb.apply(x)));
                        }
                        // any cone from a 1-element set factors uniquely
                        for qa in 0..a {
                            for qb in 0..b {
                                if f.apply(qa) != g.apply(qb) {
                                    continue;
                                }
                                let hits: Vec<usize> = (0..p)
                                    .filter(|&x| pa.apply(x) == qa && pb.apply(x) == qb)
                                    .collect();
                                assert_eq!(hits.len(), 1, "unique factorization through pullback");
                            }
                        }
                        let mapped: std::collections::HashSet<(usize, usize)> =
                            (0..p).map(|x| (pa.apply(x), pb.apply(x))).collect();
                        assert_eq!(mapped.len(), p, "projections are jointly injective");
                        let pa_c = FinMap::new(p, a, (0..p).map(|x| pa.apply(x)).collect()).unwrap();
                        assert_eq!(&pa_c, &pa);
                    }
                }
            }
        }
    }
}
