//! Algebra structures on value sets versus strict models of the theory:
//! the two enumerations agree at matching truncations.

use operadica::lawvere::{algebras_vs_models, enumerate_algebras, enumerate_models, theory_of};
use operadica::operad::{assoc_operad, comm_operad, trivial_operad};

fn main() {
    let assoc = assoc_operad(3).unwrap();
    let comm = comm_operad(3).unwrap();
    let trivial = trivial_operad(2).unwrap();

    for (name, o, sizes) in [
        ("assoc", &assoc, vec![2]),
        ("comm", &comm, vec![2]),
        ("trivial", &trivial, vec![2]),
        ("assoc", &assoc, vec![1]),
    ] {
        let (algs, models) = algebras_vs_models(o, &sizes, 2, 3).unwrap();
        println!("{name} on value sets {sizes:?}: {algs} algebras, {models} models");
        assert_eq!(algs, models);
    }

    // the four associative structures on {0, 1} are the four monoid
    // tables; print each binary table row-major
    let structures = enumerate_algebras(&assoc, &[2]).unwrap();
    let w01 = assoc.op_index("w01").unwrap();
    println!("binary tables of the monoids on {{0, 1}}:");
    for tables in &structures {
        println!("  {:?}", tables[w01].table());
    }

    // models store one function per theory hom; their value sets multiply
    // along product objects
    let th = theory_of(&comm, 2, 2).unwrap();
    let models = enumerate_models(&th, &[2]).unwrap();
    println!(
        "comm at truncation (2, 2): {} models, object value sizes {:?}",
        models.len(),
        models[0].sizes
    );
}
