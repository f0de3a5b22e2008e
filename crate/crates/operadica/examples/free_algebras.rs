//! Free algebras, graded by how many generators a term consumes: multisets
//! for the commutative operad, words for the associative one.

use operadica::finspan::binomial;
use operadica::monad::{free_algebra, Family};
use operadica::operad::{assoc_operad, comm_operad};

fn main() {
    let degree = 4;
    let comm = comm_operad(degree).unwrap();
    let assoc = assoc_operad(degree).unwrap();

    for n in 1..=3usize {
        let f = Family::new(vec![n]);
        let tc = free_algebra(&comm, &f, degree).unwrap();
        let counts: Vec<usize> = (0..=degree).map(|g| tc.count(0, g)).collect();
        println!("comm  on {n} generators: {counts:?}");
        for (k, &c) in counts.iter().enumerate() {
            // multisets of size k from n symbols
            assert_eq!(c as u64, binomial(n + k - 1, k));
        }

        let ta = free_algebra(&assoc, &f, degree).unwrap();
        let counts: Vec<usize> = (0..=degree).map(|g| ta.count(0, g)).collect();
        println!("assoc on {n} generators: {counts:?}");
        for (k, &c) in counts.iter().enumerate() {
            // words of length k in n symbols
            assert_eq!(c, n.pow(k as u32));
        }
    }

    // the canonical terms themselves, for two generators at degree 2
    let t = free_algebra(&comm, &Family::new(vec![2]), 2).unwrap();
    let rendered: Vec<String> = t
        .flatten(0)
        .iter()
        .map(|term| format!("{}{:?}", comm.op(term.op).name, term.args))
        .collect();
    println!("comm terms on {{0, 1}} up to degree 2: {}", rendered.join(" "));
}
