//! Nerves of small categories, the Segal condition, and the two
//! formulations of completeness.

use operadica::segal::{
    categories_isomorphic, category_from_segal, complete_via_e_locality,
    complete_via_invertibles, e_object, is_segal, nerve, CategoryData, PinnedCategory,
};

fn main() {
    let cases = [
        ("walking arrow", CategoryData::walking_arrow()),
        ("Z/2 delooping", CategoryData::delooping(&[vec![0, 1], vec![1, 0]], 0).unwrap()),
        ("contractible pair", CategoryData::contractible_groupoid(2)),
    ];
    for (name, cat) in cases {
        let pc = PinnedCategory::identity_pinning(cat.clone());
        let t = nerve(&pc, 3).unwrap();
        let inv = complete_via_invertibles(&t).unwrap();
        let loc = complete_via_e_locality(&t).unwrap();
        println!(
            "{name}: levels {:?}, segal {}, complete {}/{}",
            t.levels,
            is_segal(&t),
            inv,
            loc
        );
        assert_eq!(inv, loc);

        // the nerve remembers its category up to isomorphism
        let back = category_from_segal(&t).unwrap();
        assert!(categories_isomorphic(&cat, &back));
    }
    // a groupoid with two isomorphic objects is Segal but not complete:
    // its isomorphisms are not detected by identities alone — and the
    // freestanding isomorphism interval E behaves the same way
    let e = e_object(3);
    println!(
        "E object: levels {:?}, segal {}, complete {}",
        e.levels,
        is_segal(&e),
        complete_via_e_locality(&e).unwrap()
    );
}
