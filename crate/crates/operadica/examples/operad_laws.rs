//! The stock operads, their law checker, and the symmetric-group action
//! on operations.

use operadica::operad::{assoc_operad, comm_operad, trivial_operad};

fn main() {
    let comm = comm_operad(3).unwrap();
    let assoc = assoc_operad(3).unwrap();
    let trivial = trivial_operad(2).unwrap();

    for (name, o) in [("comm", &comm), ("assoc", &assoc), ("trivial", &trivial)] {
        let violations = o.validate();
        println!(
            "{name}: {} colours, {} operations up to arity {}, {} violations",
            o.colours().len(),
            o.num_ops(),
            o.max_arity(),
            violations.len()
        );
    }

    // the transposition swaps the two binary words of assoc and fixes the
    // binary operation of comm
    let w01 = assoc.op_index("w01").unwrap();
    let swapped = assoc.sym_act(w01, &[1, 0]).unwrap();
    println!(
        "assoc: w01 · (1 0) = {}",
        assoc.op(swapped).name
    );
    let m2 = comm.op_index("m2").unwrap();
    assert_eq!(comm.sym_act(m2, &[1, 0]).unwrap(), m2);
    println!("comm:  m2 · (1 0) = m2");

    // every stored composition entry names its result; spot-check one:
    // substituting the unit into either slot of a binary word returns the
    // identity word
    let e = assoc.op_index("e").unwrap();
    let id = assoc.idents()[0];
    for (outer, inners, result) in assoc.comp_entries() {
        if outer == w01 && inners == vec![e, id] {
            println!(
                "assoc: w01 ∘ (e, w0) = {}",
                assoc.op(result).name
            );
        }
    }
}
