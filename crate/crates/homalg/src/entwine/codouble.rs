//! The codouble of an entwining structure: the smash coproduct on
//! `(A*)^cop ⊗ H` over the induced cotwistor. Its comodules recover the
//! entwined modules through the dual-basis action/coaction swap.

use super::correspond::{cotwistor_from_entwining, cotwistor_from_entwining_monoidal};
use super::modules::EntwinedModule;
use super::{BialgebraEntwining, EntwiningMap};
use crate::error::Result;
use crate::hom::{HomBialgebra, HomCoalgebra, RightHomComodule};
use crate::linmap::LinearMap;
use crate::smash::{
    build_smash_bialgebra, build_smash_coproduct, p_functor, q_functor, Bicomodule, SmashOrder,
};

/// The Hom-coalgebra on `(A*)^cop ⊗ H` induced by an entwining map.
pub fn codouble(e: &EntwiningMap) -> Result<HomCoalgebra> {
    let c = cotwistor_from_entwining(e)?;
    build_smash_coproduct(&c)
}

/// The Hom-bialgebra codouble of a monoidal entwining datum: the smash
/// coproduct coalgebra with product `(f ⊗ x)(f' ⊗ y) = f * f' ⊗ xy` and
/// unit `ε_A ⊗ 1_H`.
pub fn codouble_bialgebra(e: &BialgebraEntwining) -> Result<HomBialgebra> {
    let c = cotwistor_from_entwining_monoidal(e)?;
    build_smash_bialgebra(&c, SmashOrder::Hg)
}

/// View a degree-`n` entwined module as a comodule over the codouble: the
/// action is traded for a coaction along the dual basis,
/// `u ↦ Σ u·e_i ⊗ e^i`, and the resulting bicomodule is reassembled.
pub fn module_to_smash_comodule(e: &EntwiningMap, u: &EntwinedModule) -> Result<RightHomComodule> {
    let c = cotwistor_from_entwining(e)?;
    let (da, du) = (e.a.dim(), u.dim());
    let b_coaction = LinearMap::from_fn(du * da, du, |row, col| {
        let (u_out, i) = (row / da, row % da);
        u.action.entry(u_out, col * da + i).clone()
    });
    let bi = Bicomodule::new(
        u.carrier.clone(),
        u.coaction.clone(),
        b_coaction,
        u.n,
        da,
        e.h.dim(),
    )?;
    q_functor(&c, &bi)
}

/// Recover the degree-`n` entwined module from a codouble comodule: split
/// into a bicomodule, then read the action off the dual-basis coaction,
/// `u · a = Σ u[1](a) u[0]`.
pub fn smash_comodule_to_module(
    e: &EntwiningMap,
    n: i64,
    m: &RightHomComodule,
) -> Result<EntwinedModule> {
    let c = cotwistor_from_entwining(e)?;
    let bi = p_functor(&c, n, m)?;
    let (da, du) = (e.a.dim(), m.dim());
    let action = LinearMap::from_fn(du, du * da, |row, col| {
        let (u_in, a) = (col / da, col % da);
        bi.b_coaction.entry(row * da + a, u_in).clone()
    });
    EntwinedModule::new(m.carrier.clone(), action, bi.h_coaction, n, da, e.h.dim())
}
