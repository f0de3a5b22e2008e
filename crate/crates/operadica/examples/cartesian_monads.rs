//! Monad laws, naturality, and cartesianness of the free-algebra monad:
//! linear operads give cartesian monads, while comm's multiplication
//! square stops being a pullback once a degree-3 collision exists.

use operadica::monad::{
    check_cartesian, check_monad_laws, check_naturality, enumerate_family_maps, Family, Square,
};
use operadica::operad::{comm_operad, operad_from_category, trivial_operad};
use operadica::segal::CategoryData;

fn main() {
    let comm = comm_operad(3).unwrap();
    let trivial = trivial_operad(2).unwrap();
    let arrow = operad_from_category(&CategoryData::walking_arrow()).unwrap();

    for (name, o) in [("comm", &comm), ("trivial", &trivial), ("walking arrow", &arrow)] {
        let mut violations = Vec::new();
        let sizes = [0usize, 1, 2];
        let fams: Vec<Family> = match o.colours().len() {
            1 => sizes.iter().map(|&n| Family::new(vec![n])).collect(),
            2 => sizes
                .iter()
                .flat_map(|&a| sizes.iter().map(move |&b| Family::new(vec![a, b])))
                .collect(),
            _ => unreachable!(),
        };
        for f in &fams {
            violations.extend(check_monad_laws(o, f, 2).unwrap());
        }
        for f in &fams {
            for g in &fams {
                for phi in enumerate_family_maps(f, g) {
                    violations.extend(check_naturality(o, &phi, 2).unwrap());
                }
            }
        }
        println!("{name}: {} law violations on families of size ≤ 2", violations.len());
        assert!(violations.is_empty());
    }

    // the collapse map {0,1} → {0} makes comm's multiplication square fail
    // the pullback test at degree 3: x·x·y and x·y·y collide downstairs
    let collapse = enumerate_family_maps(&Family::new(vec![2]), &Family::new(vec![1]))
        .into_iter()
        .next()
        .unwrap();
    for degree in [2, 3] {
        let unit = check_cartesian(&comm, Square::Unit, &collapse, degree).unwrap();
        let mult = check_cartesian(&comm, Square::Mult, &collapse, degree).unwrap();
        println!("comm at degree {degree}: unit square pullback {unit}, mult square pullback {mult}");
    }

    // a linear operad keeps both squares cartesian
    for degree in [2, 3] {
        let unit = check_cartesian(&arrow, Square::Unit, &collapse_pair(), degree).unwrap();
        let mult = check_cartesian(&arrow, Square::Mult, &collapse_pair(), degree).unwrap();
        assert!(unit && mult);
    }
    println!("walking arrow: both squares stay pullbacks through degree 3");
}

/// A two-colour collapse: (2, 2) → (1, 1).
fn collapse_pair() -> operadica::monad::FamilyMap {
    enumerate_family_maps(&Family::new(vec![2, 2]), &Family::new(vec![1, 1]))
        .into_iter()
        .next()
        .unwrap()
}
