//! Long dimodules and the D-equation: the pair map
//! ξ(u ⊗ v) = α_U^{-1}(u)·α^m(v(1)) ⊗ α_V^{-1}(v(0)) of any two Long
//! dimodules satisfies the associator-twisted commutation identity, and
//! the codouble's bilinear form ζ solves the convolution D-equation.

use homalg::apps::{
    check_d_equation, check_long_dimodule, check_zeta_d_type, d_map_xi, LongDimodule,
};
use homalg::hom::{samples, MonoidalContext};

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let mods = [
        ("regular action", LongDimodule::with_regular_action(&b)),
        ("regular coaction", LongDimodule::with_regular_coaction(&b)),
        ("trivial", LongDimodule::trivial(&b)),
    ];
    for (name, m) in &mods {
        println!("{name}: {}", check_long_dimodule(m, &b).unwrap().passed());
    }

    // the fully regular pair is NOT a Long dimodule
    let not_long =
        LongDimodule::new(b.carrier().clone(), b.mult().clone(), b.comult().clone(), 4).unwrap();
    println!(
        "regular action + regular coaction: {}",
        check_long_dimodule(&not_long, &b).unwrap().passed()
    );

    let ctx = MonoidalContext::new(1, 0);
    let xi = d_map_xi(1, &mods[0].1, &mods[1].1, &b);
    println!("ξ is a {}x{} map", xi.rows(), xi.cols());
    for m_deg in [-1, 0, 1] {
        let report = check_d_equation(ctx, m_deg, &mods[0].1, &mods[1].1, &mods[2].1, &b).unwrap();
        println!("D-equation at m = {m_deg:>2}: {}", report.passed());
        assert!(report.passed());
    }

    for q in [-1, 0, 1] {
        let report = check_zeta_d_type(q, &b).unwrap();
        println!(
            "convolution D-equation for ζ at q = {q:>2}: {}",
            report.passed()
        );
        assert!(report.passed());
    }
}
