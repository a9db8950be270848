//! Cotwistors and the smash coproduct: check the distributive-law axioms
//! M1-M6 for the flip, build the smash coproduct coalgebra and the smash
//! bialgebra, and demonstrate that the product order of the second
//! factors is mathematically visible on non-flip cotwistors.

use homalg::apps::yd_entwining_monoidal;
use homalg::entwine::cotwistor_from_entwining_monoidal;
use homalg::hom::{check_hom_bialgebra, check_hom_coalgebra, samples};
use homalg::smash::{
    build_smash_bialgebra, build_smash_coproduct, check_cotwistor_monoidal,
    smash_bialgebra_unchecked, BialgebraCotwistor, SmashOrder,
};

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let c = BialgebraCotwistor::flip(b.clone(), b);
    println!("flip cotwistor on the twisted pair:");
    println!("{}\n", check_cotwistor_monoidal(&c));

    let smash = build_smash_coproduct(&c.coalgebra_part()).unwrap();
    println!("smash coproduct (dim {}):", smash.dim());
    println!("{}\n", check_hom_coalgebra(&smash));

    let smash_bi = build_smash_bialgebra(&c, SmashOrder::Hg).unwrap();
    println!(
        "smash bialgebra, in-order product (dim {}):",
        smash_bi.dim()
    );
    println!("{}\n", check_hom_bialgebra(&smash_bi));

    // on a non-flip monoidal cotwistor the two product orders differ:
    // in-order passes, reversed fails the multiplicativity of Δ
    let h4 = samples::sweedler_hopf().unwrap();
    let yd_c = cotwistor_from_entwining_monoidal(&yd_entwining_monoidal(&h4, 0).unwrap()).unwrap();
    for (name, order) in [
        ("in-order (hg)", SmashOrder::Hg),
        ("reversed (gh)", SmashOrder::Gh),
    ] {
        let candidate = smash_bialgebra_unchecked(&yd_c, order).unwrap();
        let verdict = check_hom_bialgebra(&candidate).passed();
        println!(
            "non-flip cotwistor, {name} product: {}",
            if verdict {
                "bialgebra"
            } else {
                "NOT a bialgebra"
            }
        );
    }
}
