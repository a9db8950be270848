//! Produce genuinely twisted structures by composing a classical
//! bialgebra's maps with one of its automorphisms, and verify the twisted
//! axioms hold exactly.

use homalg::hom::{check_hom_hopf, samples, yau_twist_hopf};

fn main() {
    let kc4 = samples::cyclic_group_hopf(4).unwrap();
    let twisted = yau_twist_hopf(&kc4, &samples::cyclic_inversion(4)).unwrap();
    println!("kC4 twisted along g ↦ g³:");
    println!("  α is the inversion permutation (order 2), not the identity");
    let report = check_hom_hopf(&twisted);
    println!("{report}\n");
    assert!(report.passed());

    let h4 = samples::sweedler_hopf().unwrap();
    let twisted = yau_twist_hopf(&h4, &samples::sweedler_sign_automorphism()).unwrap();
    println!("Sweedler algebra twisted along the sign automorphism:");
    let report = check_hom_hopf(&twisted);
    println!("{report}\n");
    assert!(report.passed());

    // a non-automorphism is rejected with the violated identity named
    let bad = homalg::LinearMap::from_fn(4, 4, |r, c| {
        if r == c {
            homalg::scalar::s_int((r as i64) + 1)
        } else {
            homalg::scalar::s_zero()
        }
    });
    match homalg::hom::yau_twist(&kc4.bialgebra, &bad) {
        Err(e) => println!("non-automorphism rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
