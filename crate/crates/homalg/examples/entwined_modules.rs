//! Entwined modules: the canonical carriers H ⊗ A and A ⊗ H satisfy the
//! degree-n compatibility for every n, and tensor products of entwined
//! modules stay entwined exactly when the datum is monoidal.

use homalg::entwine::{
    canonical_module_ah, canonical_module_ha, check_entwined_module, check_entwining_monoidal,
    hopf_module_entwining, tensor_entwined, tensor_entwined_unchecked, BialgebraEntwining,
};
use homalg::hom::{samples, MonoidalContext};

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let datum = BialgebraEntwining::flip(b.clone(), b.clone());
    let e = datum.plain();
    for n in -2..=2 {
        let ha = canonical_module_ha(&e, n).unwrap();
        let ah = canonical_module_ah(&e, n).unwrap();
        println!(
            "degree {n:>2}: H⊗A {}  A⊗H {}",
            check_entwined_module(&ha, &e).unwrap().passed(),
            check_entwined_module(&ah, &e).unwrap().passed()
        );
    }

    // the flip datum is monoidal, so tensors stay entwined
    let ctx = MonoidalContext::new(0, 0);
    let u = canonical_module_ha(&e, 0).unwrap();
    let t = tensor_entwined(ctx, &u, &u, &datum).unwrap();
    println!(
        "tensor over the monoidal flip datum: {}",
        check_entwined_module(&t, &e).unwrap().passed()
    );

    // a non-monoidal datum (E5 broken): the raw tensor fails
    let broken = hopf_module_entwining(&b, 0).unwrap();
    let be = BialgebraEntwining::new(b.clone(), b.clone(), broken.phi.clone()).unwrap();
    println!(
        "Hopf-module datum satisfies E5: {}",
        check_entwining_monoidal(&be).axiom_passed("E5")
    );
    let u = canonical_module_ha(&broken, 0).unwrap();
    let t = tensor_entwined_unchecked(ctx, &u, &u, &b, &b).unwrap();
    println!(
        "tensor over the broken datum still entwined: {}",
        check_entwined_module(&t, &broken)
            .unwrap()
            .axiom_passed("compat")
    );
}
