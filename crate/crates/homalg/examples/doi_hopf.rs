//! Doi-Hopf data: a comodule algebra and a module coalgebra over one
//! Hom-bialgebra induce an entwining map whose degree-n modules are the
//! shifted-degree Doi-Hopf modules, and a codouble that matches the
//! generic one exactly.

use homalg::apps::doi::doi_codouble_via_entwining;
use homalg::apps::{
    check_comodule_algebra, check_doi_hopf_module, check_doi_monoidal, check_module_coalgebra,
    doi_codouble, doi_hopf_entwining, ComoduleAlgebra, DoiHopfDatum, ModuleCoalgebra,
};
use homalg::entwine::{canonical_module_ha, check_entwining, EntwinedModule};
use homalg::hom::samples;

fn main() {
    let b = samples::twisted_kc4().unwrap().bialgebra;
    let datum = DoiHopfDatum::self_datum(&b, 0, 1);
    println!(
        "self-datum components: comodule algebra {}  module coalgebra {}",
        check_comodule_algebra(&datum.a, &b).unwrap().passed(),
        check_module_coalgebra(&datum.c, &b).unwrap().passed()
    );

    let e = doi_hopf_entwining(&datum).unwrap();
    println!("induced entwining: {}", check_entwining(&e).passed());

    // degree bookkeeping: an n-th entwined module is an (m - n)-th
    // Doi-Hopf module
    for n in [-1i64, 0, 1] {
        let u = canonical_module_ha(&e, n).unwrap();
        let doi = EntwinedModule::new(
            u.carrier.clone(),
            u.action.clone(),
            u.coaction.clone(),
            datum.m_deg - n,
            b.dim(),
            b.dim(),
        )
        .unwrap();
        println!(
            "entwined degree {n:>2} satisfies the Doi identity at k = {}: {}",
            datum.m_deg - n,
            check_doi_hopf_module(&doi, &datum).unwrap().passed()
        );
    }

    // the direct dual-basis codouble equals the generic one exactly
    let direct = doi_codouble(&datum).unwrap();
    let generic = doi_codouble_via_entwining(&datum).unwrap();
    println!(
        "codouble built two ways, matrices equal: {}",
        direct.comult == generic.comult
    );

    // monoidality is a genuine extra condition: the fully regular
    // self-datum fails it, a trivial-coaction datum satisfies it
    println!(
        "regular self-datum monoidal: {}",
        check_doi_monoidal(&datum, &b, &b).unwrap().passed()
    );
    let trivial_coaction = b.alpha().kron(b.unit());
    let a = ComoduleAlgebra::new(b.algebra.clone(), trivial_coaction, b.dim()).unwrap();
    let datum2 = DoiHopfDatum::new(b.clone(), a, ModuleCoalgebra::regular(&b), 0, 0).unwrap();
    println!(
        "trivial-coaction datum monoidal: {}",
        check_doi_monoidal(&datum2, &b, &b).unwrap().passed()
    );
}
