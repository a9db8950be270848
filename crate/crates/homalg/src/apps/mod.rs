//! The three application families of the entwining theory, each realized
//! as a specific entwining map plus its codouble and equation checks:
//!
//! * [`doi`]: comodule algebras with module coalgebras (Doi-Hopf data);
//! * [`long`]: Long dimodules, whose pair maps solve the D-equation;
//! * [`yd`]: Yetter-Drinfeld modules, whose braidings solve the
//!   Hom-Yang-Baxter equation.

pub mod doi;
pub mod long;
pub mod yd;

pub use doi::{
    check_comodule_algebra, check_doi_hopf_module, check_doi_monoidal, check_module_coalgebra,
    doi_codouble, doi_hopf_entwining, ComoduleAlgebra, DoiHopfDatum, ModuleCoalgebra,
};
pub use long::{
    check_d_equation, check_long_dimodule, check_zeta_d_type, d_map_xi, long_codouble,
    long_entwining, LongDimodule,
};
pub use yd::{
    braiding_tau, check_hom_ybe, check_yd_module, coquasi_form, drinfeld_codouble,
    induced_braiding, yd_adjoint_regular, yd_candidates, yd_entwining, yd_entwining_monoidal,
    yd_generators, yd_regular_adjoint, BilinearForm, YdModule,
};
