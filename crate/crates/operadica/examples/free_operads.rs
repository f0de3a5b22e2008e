//! The free operad on one binary generator, truncated by arity and vertex
//! budget, and the composition product of symmetric sequences.

use operadica::monad::free_operad;
use operadica::operad::{composition_product, free_symmetric_sequence, SymSeq};

fn main() {
    // one generator in arity 2, none elsewhere
    let k = free_symmetric_sequence(&[0, 0, 1]).unwrap();
    println!(
        "generating sequence sizes: {:?}",
        (0..=k.max_arity()).map(|n| k.size(n)).collect::<Vec<_>>()
    );

    let o = free_operad(&k, 3, 2).unwrap();
    let counts: Vec<usize> = (0..=3)
        .map(|n| (0..o.num_ops()).filter(|&op| o.arity(op) == n).count())
        .collect();
    println!("free operad, ≤2 vertices: operations by arity {counts:?}");
    // arity 3: binary trees with one root vertex, one child vertex in
    // either slot, and 3! leaf labellings — 2 · 3! = 12
    assert_eq!(counts, vec![0, 1, 2, 12]);

    // sample names at low arity
    let names: Vec<&str> = (0..o.num_ops())
        .filter(|&op| o.arity(op) == 2)
        .map(|op| o.op(op).name.as_str())
        .collect();
    println!("arity-2 operations: {}", names.join(" "));

    // the two-vertex layer agrees with the composition product K ∘ K⁺,
    // where K⁺ adds a unary unit for leaves passing the root untouched
    let kplus = free_symmetric_sequence(&[0, 1, 1]).unwrap();
    let kk = composition_product(&k, &kplus, 3, 3);
    println!("(K ∘ K⁺) at arity 3 has {} elements", kk.size);
    assert_eq!(kk.size, 12);

    let u = SymSeq::from_operad(&o).unwrap();
    println!(
        "free operad sizes as a symmetric sequence: {:?}",
        (0..=u.max_arity()).map(|n| u.size(n)).collect::<Vec<_>>()
    );
}
