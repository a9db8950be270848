//! Codoubles: the smash coproduct on (A*)^cop ⊗ H attached to an
//! entwining map, and the comodule/module correspondence across it.

use homalg::entwine::{
    canonical_module_ha, codouble, codouble_bialgebra, module_to_smash_comodule,
    smash_comodule_to_module, BialgebraEntwining, EntwiningMap,
};
use homalg::hom::{check_hom_bialgebra, check_hom_coalgebra, check_right_comodule, samples};

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let e = EntwiningMap::flip(b.coalgebra.clone(), b.algebra.clone());

    let d = codouble(&e).unwrap();
    println!("codouble coalgebra (dim {}):", d.dim());
    println!("{}\n", check_hom_coalgebra(&d));

    let datum = BialgebraEntwining::flip(b.clone(), b.clone());
    let d_bi = codouble_bialgebra(&datum).unwrap();
    println!(
        "codouble bialgebra: {}\n",
        check_hom_bialgebra(&d_bi).passed()
    );

    // an entwined module becomes a codouble comodule and back, exactly
    for n in [-1, 0, 1] {
        let u = canonical_module_ha(&e, n).unwrap();
        let com = module_to_smash_comodule(&e, &u).unwrap();
        let valid = check_right_comodule(&com, &d).unwrap().passed();
        let back = smash_comodule_to_module(&e, n, &com).unwrap();
        println!(
            "degree {n:>2}: codouble comodule valid {}  round trip exact {}",
            valid,
            back.action == u.action && back.coaction == u.coaction
        );
    }
}
