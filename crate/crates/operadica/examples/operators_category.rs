//! The category of operators of an operad: objects are colour tuples,
//! morphisms are spans whose fibres carry operations.

use operadica::opcat::{category_of_operators, check_spf_conditions, is_inert_morphism};
use operadica::operad::comm_operad;

fn main() {
    let o = comm_operad(2).unwrap();
    let k = category_of_operators(&o, 2, 2).unwrap();

    let label = |x: usize| {
        let parts: Vec<&str> = k.object(x).iter().map(|&c| k.colours()[c].as_str()).collect();
        format!("({})", parts.join(","))
    };
    println!("objects: {}", (0..k.num_objects()).map(label).collect::<Vec<_>>().join(" "));

    println!("hom sizes:");
    for s in 0..k.num_objects() {
        let row: Vec<usize> = (0..k.num_objects()).map(|t| k.hom_size(s, t)).collect();
        println!("  {} {row:?}", label(s));
    }

    let inert = k
        .all_morphisms()
        .filter(|&m| is_inert_morphism(&k, m))
        .count();
    let total = k.all_morphisms().count();
    println!("{inert} of {total} morphisms are inert");

    // validate() checks the category laws; the fibration report checks
    // cocartesian lifts over inerts, fibre products, and surjectivity of
    // the active pieces
    assert!(k.validate().is_empty());
    let spf = check_spf_conditions(&k);
    println!(
        "fibration conditions: lifts {} / products {} / surjectivity {} failures — passes: {}",
        spf.cocartesian_lift_failures.len(),
        spf.product_failures.len(),
        spf.surjectivity_failures.len(),
        spf.passes()
    );
}
