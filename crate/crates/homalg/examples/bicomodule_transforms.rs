//! Comodules over a smash coproduct split into compatible bicomodules and
//! reassemble exactly; the degree parameter transports by twisting the
//! second coaction with automorphism powers.

use homalg::hom::{regular_comodule, samples};
use homalg::smash::{
    build_smash_coproduct, check_bicomodule, p_functor, q_functor, Bicomodule, Cotwistor,
};
use homalg::LinearMap;

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let c = Cotwistor::flip(b.coalgebra.clone(), b.coalgebra.clone());
    let smash = build_smash_coproduct(&c).unwrap();
    let regular = regular_comodule(&smash);

    for n in -2..=2 {
        let bi = p_functor(&c, n, &regular).unwrap();
        let ok = check_bicomodule(&bi, &c).unwrap().passed();
        let back = q_functor(&c, &bi).unwrap();
        println!(
            "degree {n:>2}: split valid {}  reassembly exact {}",
            ok,
            back.coaction == regular.coaction
        );
    }

    // transport a valid degree-0 bicomodule to degree 2 by twisting the
    // second coaction
    let bi0 = p_functor(&c, 0, &regular).unwrap();
    let transported = Bicomodule {
        carrier: bi0.carrier.clone(),
        h_coaction: bi0.h_coaction.clone(),
        b_coaction: LinearMap::identity(bi0.dim())
            .kron(&c.b.carrier.alpha_pow(2))
            .compose(&bi0.b_coaction)
            .unwrap(),
        n: 2,
    };
    println!(
        "degree 0 -> 2 transport by α²: {}",
        check_bicomodule(&transported, &c).unwrap().passed()
    );
}
