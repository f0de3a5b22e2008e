//! The graded algebraic theory of an operad: finite colour tuples as
//! objects, substitution-closed term vectors as homs, and the inert/active
//! factorization of every hom.

use operadica::lawvere::{factor_theory, theory_of};
use operadica::operad::comm_operad;

fn main() {
    let o = comm_operad(3).unwrap();
    let th = theory_of(&o, 2, 3).unwrap();

    let label = |x: usize| {
        let parts: Vec<&str> = th.object(x).iter().map(|&c| o.colours()[c].as_str()).collect();
        format!("({})", parts.join(","))
    };
    println!(
        "objects: {}",
        (0..th.num_objects()).map(label).collect::<Vec<_>>().join(" ")
    );
    println!("pinning of colours into objects: {:?}", th.pinning());

    // homs are stored in the Kleisli direction: an element of homs(b, a)
    // assigns to each position of a a term over the positions of b
    let pair = th.object_index(&[0, 0]).unwrap();
    let single = th.pinning()[0];
    println!("homs from the pair to the singleton, by grade:");
    let mut by_grade = vec![0usize; 4];
    for h in th.homs(single, pair) {
        by_grade[h.grade()] += 1;
    }
    println!("  {by_grade:?}");

    // factor each of them: the inert part reindexes positions, the active
    // part applies operations everywhere
    for h in th.homs(single, pair) {
        if h.grade() != 2 {
            continue;
        }
        let (inert, active) = factor_theory(&o, h).unwrap();
        let render = |hh: &operadica::lawvere::TheoryHom| {
            let ts: Vec<String> = hh
                .terms
                .iter()
                .map(|t| format!("{}{:?}", o.op(t.op).name, t.args))
                .collect();
            ts.join(",")
        };
        println!(
            "  grade-2 hom [{}] = inert [{}] then active [{}]",
            render(h),
            render(&inert),
            render(&active)
        );
    }
}
