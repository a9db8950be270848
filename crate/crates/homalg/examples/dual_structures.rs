//! Finite-dimensional duality: the dual of a Hom-algebra is a
//! Hom-coalgebra (with the co-opposite twist), the dual of a
//! Hom-bialgebra is again a Hom-bialgebra.

use homalg::hom::{
    check_hom_bialgebra, check_hom_coalgebra, dual_bialgebra, dual_coalgebra, samples,
};

fn main() {
    let twisted = samples::twisted_kc4().unwrap().bialgebra;

    let dual_c = dual_coalgebra(&twisted.algebra).unwrap();
    println!("dual coalgebra of the twisted group algebra:");
    println!("{}\n", check_hom_coalgebra(&dual_c));
    assert!(check_hom_coalgebra(&dual_c).passed());

    let dual_b = dual_bialgebra(&twisted).unwrap();
    println!("dual bialgebra:");
    println!("{}\n", check_hom_bialgebra(&dual_b));
    assert!(check_hom_bialgebra(&dual_b).passed());

    // the double dual is the original up to the evaluation identification
    let double = dual_bialgebra(&dual_b).unwrap();
    println!(
        "double dual comultiplication equals the original: {}",
        double.comult() == twisted.comult()
    );
    println!(
        "double dual multiplication equals the original: {}",
        double.mult() == twisted.mult()
    );
}
