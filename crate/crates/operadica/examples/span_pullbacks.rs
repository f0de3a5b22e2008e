//! Spans composed two ways — by pullback of witnesses and by matrix
//! product — and the inert/active factorization of the result.

use operadica::finspan::{pullback, Span};

fn main() {
    let a = Span::from_matrix(vec![vec![1, 1], vec![0, 1]]).unwrap();
    let b = Span::from_matrix(vec![vec![2, 0], vec![1, 1]]).unwrap();

    let c = a.compose(&b).unwrap();
    println!("matrix product:    {:?}", c.matrix());

    // the same composite from the witness side: pull back a's right leg
    // against b's left leg, then canonicalize the resulting zig-zag
    let wa = a.witness();
    let wb = b.witness();
    let wc = wa.compose(&wb).unwrap();
    println!("witness composite: {:?}", wc.canonicalize().matrix());
    assert_eq!(wc.canonicalize(), c);

    let (apex, p, q) = pullback(wa.right(), wb.left()).unwrap();
    println!(
        "pullback apex {apex}, projections {:?} and {:?}",
        p.table(),
        q.table()
    );

    let (inert, active) = c.factor_inert_active();
    println!("inert  part:       {:?}", inert.matrix());
    println!("active part:       {:?}", active.matrix());
    assert!(inert.is_inert() && active.is_active());
    assert_eq!(inert.compose(&active).unwrap(), c);
    println!("factorization recomposes to the original");
}
