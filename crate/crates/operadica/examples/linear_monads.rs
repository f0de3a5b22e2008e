//! Linear monads of pinned categories: values are (pin, arrow, element)
//! triples, the operad side has only unary operations, and the nerve
//! levels match the theory's chain counts.

use operadica::monad::{is_linear, linear_monad, Family};
use operadica::segal::{linear_roundtrip, pinned_operad, CategoryData, PinnedCategory};

fn main() {
    // the walking arrow with two pins on its source object
    let pc = PinnedCategory::new(CategoryData::walking_arrow(), vec![0, 0, 1]).unwrap();
    let po = pinned_operad(&pc).unwrap();
    println!("pin labels: {:?}", po.colours());
    assert!(is_linear(&po));

    let f = Family::new(vec![1, 2, 1]);
    let rows = linear_monad(&pc, &f).unwrap();
    for (q, row) in rows.iter().enumerate() {
        let rendered: Vec<String> = row
            .iter()
            .map(|&(p, h, v)| format!("({}, {}, {v})", po.colours()[p], pc.cat.hom(h).name))
            .collect();
        println!(
            "T(F) at {}: {} elements {}",
            po.colours()[q],
            row.len(),
            rendered.join(" ")
        );
    }

    // nerve levels versus chain counts in the associated theory
    for (name, pc) in [
        ("walking arrow, pins (a,a,b)", pc),
        (
            "Z/2 delooping",
            PinnedCategory::identity_pinning(
                CategoryData::delooping(&[vec![0, 1], vec![1, 0]], 0).unwrap(),
            ),
        ),
    ] {
        let r = linear_roundtrip(&pc, 3).unwrap();
        println!(
            "{name}: nerve {:?} theory {:?} pass {}",
            r.nerve_levels,
            r.theory_levels,
            r.passes()
        );
        assert!(r.passes());
    }
}
