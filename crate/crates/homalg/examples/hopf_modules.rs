//! Hopf modules as entwined modules: over the entwining
//! Φ(h ⊗ g) = α^{-1}(g1) ⊗ α^{-1}(h) α^n(g2) the degree-n entwined
//! modules are exactly the Hopf modules, and the regular one (action =
//! multiplication, coaction = comultiplication) is entwined.

use homalg::entwine::{
    check_entwined_module, check_entwining, hopf_module_entwining, EntwinedModule,
};
use homalg::hom::samples;

fn main() {
    for (name, b) in [
        (
            "classical kC2",
            samples::cyclic_group_hopf(2).unwrap().bialgebra,
        ),
        ("twisted kC4", samples::twisted_kc4().unwrap().bialgebra),
    ] {
        for n in [-1, 0, 1] {
            let e = hopf_module_entwining(&b, n).unwrap();
            let regular = EntwinedModule::new(
                b.carrier().clone(),
                b.mult().clone(),
                b.comult().clone(),
                n,
                b.dim(),
                b.dim(),
            )
            .unwrap();
            println!(
                "{name}, degree {n:>2}: entwining {}  regular Hopf module {}",
                check_entwining(&e).passed(),
                check_entwined_module(&regular, &e).unwrap().passed()
            );
        }
    }
}
