//! Graded hom counts between finite sets, checked against brute
//! enumeration, and the product structure of disjoint union.

use operadica::finspan::{enumerate_spans, hom_count, product_cone};

fn main() {
    let d = 3;
    println!("hom counts up to grade {d}:");
    for s in 0..=3u64 {
        let row: Vec<u64> = (0..=3).map(|t| hom_count(s as usize, t, d)).collect();
        println!("  from a {s}-element set: {row:?}");
    }

    for s in 0..=3 {
        for t in 0..=3 {
            assert_eq!(
                hom_count(s, t, d) as usize,
                enumerate_spans(s, t, d).len(),
                "closed form disagrees with enumeration at ({s},{t})"
            );
        }
    }
    println!("closed form matches enumeration on all shapes up to 3x3");

    // disjoint union is the product: a span into 2 ⊔ 1 is exactly a span
    // into 2 and a span into 1 sharing the grade budget
    let (p, pi1, pi2) = product_cone(2, 1);
    println!(
        "product of sizes 2 and 1: carrier {p}, projections {:?} and {:?}",
        pi1.matrix(),
        pi2.matrix()
    );
    let s = 2;
    let direct = hom_count(s, p, d);
    let mut paired = 0u64;
    for x in enumerate_spans(s, 2, d) {
        for y in enumerate_spans(s, 1, d - x.total()) {
            let _ = y;
            paired += 1;
        }
    }
    assert_eq!(direct, paired);
    println!("hom({s}, 2⊔1) = {direct} = pairs of component spans within the budget");
}
