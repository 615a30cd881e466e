use crate::algebra::{BasedAlgebra, FnMul, Presentation};
use crate::braid::{braid_at, mul_at, tensor_module, KModule};
use crate::braided_hopf::{BraidedHopf, ModuleAlgebra};
use crate::error::Result;
use crate::linspace::{tensor_space, LinearMap, Tensor};
use crate::yd::{YDAlgebra, YDModule};
use std::sync::Arc;

/// A left `H`-module in `Mod_K`.
#[derive(Clone, Debug)]
pub struct HModule {
    pub h: Arc<BraidedHopf>,
    pub kmod: KModule,
    /// `a : H ⊗ V → V`.
    pub action: LinearMap,
}

impl From<&ModuleAlgebra> for HModule {
    fn from(a: &ModuleAlgebra) -> HModule {
        HModule { h: a.h.clone(), kmod: a.kmod.clone(), action: a.action.clone() }
    }
}

/// `V ⊗ W` with `a = (a_V ⊗ a_W)(Id ⊗ Ψ_{H,V} ⊗ Id)(Δ ⊗ Id ⊗ Id)`.
pub fn h_module_tensor(v: &HModule, w: &HModule) -> Result<HModule> {
    let h = v.h.clone();
    let kmod = tensor_module(&h.k, &v.kmod, &w.kmod)?;
    let lh = h.alg.space().legs().len();
    let lv = v.kmod.space.legs().len();
    let vw = kmod.space.legs();
    let mut dom = h.alg.space().legs();
    dom.extend(vw.iter().cloned());
    let action = LinearMap::from_pipeline(h.alg.field(), dom, vw, |t| {
        let t = t.apply(0, &h.delta)?;
        let t = braid_at(&t, lh, &h.k, &h.kmod, &v.kmod)?;
        let t = t.apply(0, &v.action)?;
        t.apply(lv, &w.action)
    })?;
    Ok(HModule { h, kmod, action })
}

/// The coinduced Yetter-Drinfeld module on `H ⊗ V`: coaction `Δ ⊗ Id` and
/// action `h·(k ⊗ v) = h₁ k S(h₃) ⊗ h₂·v` with the braidings that route
/// `h₂` past `k` and `h₃` around `v`.
pub fn rb_module(v: &HModule) -> Result<YDModule> {
    let h = v.h.clone();
    let f = h.alg.field();
    let kmod = tensor_module(&h.k, &h.kmod, &v.kmod)?;
    let lh = h.alg.space().legs().len();
    let lv = v.kmod.space.legs().len();
    let hv = kmod.space.legs();
    let mut hhv = h.alg.space().legs();
    hhv.extend(hv.iter().cloned());
    let action = LinearMap::from_pipeline(f, hhv.clone(), hv.clone(), |t| {
        // [h, k, v] -> [h1, h2, k, v]
        let t = t.apply(0, &h.delta)?;
        // -> [h1, k', h2', v]
        let t = braid_at(&t, lh, &h.k, &h.kmod, &h.kmod)?;
        // -> [h1 k', h2', v] -> [p, a, b, v]
        let t = mul_at(&t, 0, &h.alg)?;
        let t = t.apply(lh, &h.delta)?;
        // -> [p, a, v', b']
        let t = braid_at(&t, 2 * lh, &h.k, &h.kmod, &v.kmod)?;
        // -> [p, a·v', S b']
        let t = t.apply(lh, &v.action)?;
        let t = t.apply(lh + lv, &h.s)?;
        // -> [p, S b'', w'] -> [p S b'', w']
        let t = braid_at(&t, lh, &h.k, &v.kmod, &h.kmod)?;
        mul_at(&t, 0, &h.alg)
    })?;
    let mut id_v = LinearMap::identity(f, v.kmod.space.legs());
    id_v = id_v.relegged(v.kmod.space.legs(), v.kmod.space.legs());
    let coaction = h.delta.tensor(&id_v);
    Ok(YDModule::new(h, kmod, action, coaction))
}

/// `R_B(A)`: the coinduced module on `H ⊗ A` with product
/// `(m_H ⊗ m_A)(Id ⊗ Ψ_{A,H} ⊗ Id)`.
pub fn rb_algebra(a: &ModuleAlgebra) -> Result<YDAlgebra> {
    let yd = rb_module(&HModule::from(a))?;
    let h = a.h.clone();
    let f = h.alg.field();
    let space = tensor_space(h.alg.space(), a.alg.space());
    let (lh, da) = (h.alg.space().legs().len(), a.alg.dim());
    let legs = space.legs();
    let degrees: Vec<u32> = (0..space.dim()).map(|i| h.alg.degree(i / da) + a.alg.degree(i % da)).collect();
    let unit = Tensor::outer(
        &Tensor::new(h.alg.space().legs(), h.alg.unit().clone()),
        &Tensor::new(a.alg.space().legs(), a.alg.unit().clone()),
    )
    .v;
    let (hh, aa, akmod) = (h.clone(), a.alg.clone(), a.kmod.clone());
    let mul = FnMul(move |x: usize, y: usize| {
        let one = hh.alg.field().one();
        let t = Tensor::outer(&Tensor::basis(legs.clone(), x, one.clone()), &Tensor::basis(legs.clone(), y, one));
        let t = braid_at(&t, lh, &hh.k, &akmod, &hh.kmod).ok()?;
        let t = mul_at(&t, 0, &hh.alg).ok()?;
        mul_at(&t, lh, &aa).ok().map(|t| t.v)
    });
    let name = format!("R({})", a.alg.name());
    let alg = BasedAlgebra::from_product(&name, space, f, unit, degrees, a.alg.bound(), Arc::new(mul));
    Ok(YDAlgebra { yd, alg })
}

/// `H` with the adjoint action `m(m ⊗ S)(Id ⊗ Ψ_{H,H})(Δ ⊗ Id)` and the
/// regular coaction `Δ`.
pub fn adjoint_algebra(h: &Arc<BraidedHopf>) -> Result<YDAlgebra> {
    let f = h.alg.field();
    let lh = h.alg.space().legs().len();
    let hl = h.alg.space().legs();
    let mut dom = hl.clone();
    dom.extend(hl.iter().cloned());
    let action = LinearMap::from_pipeline(f, dom, hl.clone(), |t| {
        let t = t.apply(0, &h.delta)?;
        let t = braid_at(&t, lh, &h.k, &h.kmod, &h.kmod)?;
        let t = t.apply(2 * lh, &h.s)?;
        let t = mul_at(&t, 0, &h.alg)?;
        mul_at(&t, 0, &h.alg)
    })?;
    let yd = YDModule::new(h.clone(), h.kmod.clone(), action, h.delta.clone());
    Ok(YDAlgebra { yd, alg: h.alg.clone() })
}

/// The trivial module algebra `k` over `H`.
pub fn unit_module_algebra(h: &Arc<BraidedHopf>) -> Result<ModuleAlgebra> {
    let f = h.alg.field();
    let alg = BasedAlgebra::from_presentation("k", Presentation::new(f))?;
    let nk = h.k.alg.presentation().map_or(0, |p| p.ngens());
    let nh = h.alg.presentation().map_or(0, |p| p.ngens());
    ModuleAlgebra::from_generators(h.clone(), alg, &vec![vec![]; nk], &vec![vec![]; nh])
}

/// `τ_{V,W} = (m_H ⊗ Id)(Id ⊗ Ψ_{V,H} ⊗ Id) : R(V) ⊗ R(W) → R(V ⊗ W)`.
pub fn tau(v: &HModule, w: &HModule) -> Result<LinearMap> {
    let h = &v.h;
    let f = h.alg.field();
    let lh = h.alg.space().legs().len();
    let mut dom = h.alg.space().legs();
    dom.extend(v.kmod.space.legs());
    dom.extend(h.alg.space().legs());
    dom.extend(w.kmod.space.legs());
    let mut cod = h.alg.space().legs();
    cod.extend(v.kmod.space.legs());
    cod.extend(w.kmod.space.legs());
    LinearMap::from_pipeline(f, dom, cod, |t| {
        let t = braid_at(&t, lh, &h.k, &v.kmod, &h.kmod)?;
        mul_at(&t, 0, &h.alg)
    })
}
