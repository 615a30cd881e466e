//! Moving centers between `R_B(A)` and the smash product, and restricting
//! Yetter-Drinfeld structure to a computed center.

use super::{centralizer, Braided, CenterResult, KBraided, Side};
use crate::braided_hopf::ModuleAlgebra;
use crate::constructions::{phi_maps, smash_kmodule, smash_product};
use crate::error::{Error, Result};
use crate::linspace::{BasedSpace, LinearMap, Subspace, Tensor, Vector};
use crate::braid::KModule;
use crate::yd::YDModule;
use std::sync::Arc;

/// Coordinates of `v` in a reduced echelon basis; errors if `v` is outside
/// its span.
fn coords(basis: &[Vector], pivots: &[usize], v: &Vector, what: &str) -> Result<Vector> {
    let mut rest = v.clone();
    let mut out = Vec::new();
    for (k, (&p, b)) in pivots.iter().zip(basis).enumerate() {
        if let Some(c) = v.get(p) {
            rest = rest.add_scaled(b, &c.neg());
            out.push((k, c.clone()));
        }
    }
    if !rest.is_zero() {
        return Err(Error::Inconsistent(format!("{what} leaves the subspace")));
    }
    Ok(Vector::from_sorted(out))
}

/// The YD submodule spanned by a reduced echelon `basis`, on a new space
/// with one basis vector per element of `basis`.
pub fn restrict_yd(yd: &YDModule, basis: &[Vector]) -> Result<YDModule> {
    let h = yd.h.clone();
    let f = h.alg.field();
    let one = f.one();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.leading().map(|(i, _)| *i).ok_or_else(|| Error::InvalidArgument("zero basis vector".into())))
        .collect::<Result<_>>()?;
    let m = basis.len();
    let dv = yd.dim();
    let dh = h.dim();
    let space = BasedSpace::anonymous(&format!("Z({})", yd.space().name()), m);
    let rho: Vec<LinearMap> = yd
        .kmod
        .rho
        .iter()
        .map(|r| {
            let cols = basis
                .iter()
                .map(|b| coords(basis, &pivots, &r.apply(b)?, "K-action"))
                .collect::<Result<Vec<_>>>()?;
            Ok(LinearMap::between(&space, &space, cols))
        })
        .collect::<Result<_>>()?;
    let kmod = KModule { space: space.clone(), rho: Arc::new(rho) };
    let mut hz = h.alg.space().legs();
    hz.push(space.clone());
    let mut action_cols = Vec::with_capacity(dh * m);
    for x in 0..dh {
        for b in basis {
            let v = yd.act(&Vector::unit(x, one.clone()), b)?;
            action_cols.push(Some(coords(basis, &pivots, &v, "H-action")?));
        }
    }
    let action = LinearMap::new(hz.clone(), vec![space.clone()], action_cols);
    let mut coaction_cols = Vec::with_capacity(m);
    for b in basis {
        let d = yd.coact(b)?;
        let mut parts: std::collections::BTreeMap<usize, Vector> = Default::default();
        for (idx, c) in d.iter() {
            let e = parts.entry(idx / dv).or_insert_with(Vector::zero);
            *e = e.add(&Vector::single(idx % dv, c.clone()));
        }
        let mut col = Vector::zero();
        for (x, v) in parts {
            let cv = coords(basis, &pivots, &v, "H-coaction")?;
            col = col.add(&cv.map_indices(|k| x * m + k));
        }
        coaction_cols.push(Some(col));
    }
    let coaction = LinearMap::new(vec![space], hz, coaction_cols);
    Ok(YDModule::new(h, kmod, action, coaction))
}

/// Comparison of `C^l(R_B(A))` with the centralizer of `A` in `A ⋊ H`.
#[derive(Clone, Debug)]
pub struct TransportReport {
    /// Degree window in which both sides were compared.
    pub window: u32,
    pub smash_dim: usize,
    pub centralizer: CenterResult,
    /// `φ⁻¹(Cent_{A⋊H}(A)) = C^l(R_B(A))` inside the window.
    pub subspaces_equal: bool,
    /// `φ(cc') = m_⋊ Ψ⁻¹(φc ⊗ φc')` on all center basis pairs checked.
    pub products_match: bool,
    pub pairs_checked: usize,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.subspaces_equal && self.products_match
    }
}

/// Computes `Cent^l_{A⋊H}(A)` with the braiding of `Mod_K` and compares it,
/// through `φ = (Id ⊗ S⁻¹)Ψ⁻¹_{A,H}`, with `center = C^l(R_B(A))`,
/// both as subspaces and as algebras (the smash side with the product
/// `m Ψ⁻¹`).
pub fn cross_check_smash(a: &ModuleAlgebra, center: &CenterResult) -> Result<TransportReport> {
    let h = &a.h;
    let smash = smash_product(a);
    let kb = KBraided { alg: smash.clone(), k: h.k.clone(), kmod: smash_kmodule(a)? };
    let hl = h.alg.space().legs();
    let al = a.alg.space().legs();
    let gens: Vec<Vector> = super::algebra_generators(&a.alg)?
        .into_iter()
        .map(|g| Tensor::outer(&Tensor::new(al.clone(), g), &Tensor::new(hl.clone(), h.alg.unit().clone())).v)
        .collect();
    let gens = if gens.is_empty() { vec![smash.unit().clone()] } else { gens };
    let cent = centralizer(&kb, &gens, Side::Left)?;
    let (phi, phi_inv) = phi_maps(a)?;
    let window = cent.window.min(center.window);
    let pulled: Vec<Vector> =
        cent.within(window).basis().iter().map(|v| phi_inv.apply(v)).collect::<Result<_>>()?;
    let lhs = Subspace::span(center.ambient.space(), &pulled);
    let rhs = center.within(window);
    let subspaces_equal = lhs == rhs;

    let basis = rhs.basis();
    let rb = &center.ambient;
    let mut pairs_checked = 0;
    let mut products_match = true;
    for c in &basis {
        for d in &basis {
            if rb.bound().is_some_and(|bd| rb.degree_of(c) + rb.degree_of(d) > bd) {
                continue;
            }
            let lhs = phi.apply(&rb.mul(c, d)?)?;
            let rhs = kb.mul_psi_inv(&phi.apply(c)?, &phi.apply(d)?)?;
            pairs_checked += 1;
            if lhs != rhs {
                products_match = false;
            }
        }
    }
    Ok(TransportReport { window, smash_dim: smash.dim(), centralizer: cent, subspaces_equal, products_match, pairs_checked })
}
