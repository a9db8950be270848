//! The Drinfeld codouble of a Hom-Hopf algebra, its coquasitriangular
//! bilinear form, and the agreement of the form-induced braiding with the
//! module braiding through the category correspondence.

use homalg::apps::{
    braiding_tau, coquasi_form, drinfeld_codouble, induced_braiding, yd_entwining, yd_generators,
};
use homalg::entwine::{module_to_smash_comodule, EntwinedModule};
use homalg::hom::{check_hom_bialgebra, samples, MonoidalContext};

fn main() {
    let h = samples::twisted_kc4().unwrap();
    let m_deg = 0;

    let codouble = drinfeld_codouble(&h, m_deg).unwrap();
    println!("Drinfeld codouble (dim {}):", codouble.dim());
    println!("{}\n", check_hom_bialgebra(&codouble));

    let form = coquasi_form(&h, m_deg).unwrap();
    println!(
        "coquasitriangular form: 1 x {} covector",
        form.values.cols()
    );

    // transport the generated modules to codouble comodules and compare
    // the two braidings
    let e = yd_entwining(&h, m_deg).unwrap();
    let generators = yd_generators(&h, m_deg);
    let ctx = MonoidalContext::new(0, 0);
    let dim = h.dim();
    for (un, u) in &generators {
        for (vn, v) in &generators {
            let to_comodule = |m: &homalg::apps::YdModule| {
                let as_entwined = EntwinedModule::new(
                    m.carrier.clone(),
                    m.action.clone(),
                    m.coaction.clone(),
                    0,
                    dim,
                    dim,
                )
                .unwrap();
                module_to_smash_comodule(&e, &as_entwined).unwrap()
            };
            let tau = braiding_tau(ctx, u, v, &h).unwrap();
            let induced = induced_braiding(ctx, &form, &to_comodule(u), &to_comodule(v)).unwrap();
            println!(
                "({un}, {vn}): induced braiding equals τ: {}",
                tau == induced
            );
            assert_eq!(tau, induced);
        }
    }
}
