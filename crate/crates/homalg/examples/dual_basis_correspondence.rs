//! The dual-basis bijection between entwining maps H ⊗ A -> A ⊗ H and
//! cotwistors (A*)^cop ⊗ H -> H ⊗ (A*)^cop: exact round trips, and the
//! axiom pairing E_k <-> M_k under single-entry mutations.

use homalg::entwine::{
    check_entwining, cotwistor_from_entwining, entwining_from_cotwistor, hopf_module_entwining,
    EntwiningMap,
};
use homalg::hom::samples;
use homalg::scalar::s_one;
use homalg::smash::check_cotwistor;

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let e = hopf_module_entwining(&b, 1).unwrap();
    println!("entwining axioms: {}", check_entwining(&e).passed());

    let c = cotwistor_from_entwining(&e).unwrap();
    println!("induced cotwistor axioms: {}", check_cotwistor(&c).passed());

    let back = entwining_from_cotwistor(&c, &e.a).unwrap();
    println!("round trip Φ -> φ -> Φ exact: {}", back.phi == e.phi);

    // perturb one entry: each E-axiom verdict mirrors its M-axiom verdict
    let perturbed =
        EntwiningMap::new(e.h.clone(), e.a.clone(), e.phi.perturbed(3, 5, &s_one())).unwrap();
    let e_report = check_entwining(&perturbed);
    let m_report = check_cotwistor(&cotwistor_from_entwining(&perturbed).unwrap());
    for (ea, ma) in [("E1", "M1"), ("E2", "M2"), ("E3", "M3"), ("E4", "M4")] {
        println!(
            "{ea}: {}  <->  {ma}: {}",
            e_report.axiom_passed(ea),
            m_report.axiom_passed(ma)
        );
        assert_eq!(e_report.axiom_passed(ea), m_report.axiom_passed(ma));
    }
}
