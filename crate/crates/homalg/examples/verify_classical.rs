//! Verify the classical examples: group algebras of cyclic groups and the
//! 4-dimensional Sweedler Hopf algebra. With the structure automorphism
//! equal to the identity, every Hom-axiom reduces to its classical form.

use homalg::hom::{check_hom_hopf, samples};

fn main() {
    for (name, hopf) in [
        (
            "group algebra of C2",
            samples::cyclic_group_hopf(2).unwrap(),
        ),
        (
            "group algebra of C4",
            samples::cyclic_group_hopf(4).unwrap(),
        ),
        ("Sweedler algebra", samples::sweedler_hopf().unwrap()),
    ] {
        let report = check_hom_hopf(&hopf);
        println!("{name} (dim {}):", hopf.dim());
        println!("{report}");
        println!();
        assert!(report.passed());
    }
    println!("all classical structures pass every checker");
}
