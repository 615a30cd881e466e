//! Yetter-Drinfeld modules over a braided Hopf algebra `H` in `Mod_K`.
//!
//! Structure maps are matrices on atomic legs, so every axiom is evaluated
//! by pushing basis tensors through a pipeline of leg-local maps.

use crate::algebra::BasedAlgebra;
use crate::braid::{braid_at, braid_inv_at, fail, mul_at, tensor_module, unit_index, KModule};
use crate::braided_hopf::{check_k_linear, BraidedHopf};
use crate::error::Result;
use crate::linspace::{legs_dim, tensor_space, BasedSpace, LinearMap, Tensor, Vector};
use crate::par;
use std::sync::Arc;

/// `(V, a, δ)` with `a : H ⊗ V → V` and `δ : V → H ⊗ V`.
#[derive(Clone)]
pub struct YDModule {
    pub h: Arc<BraidedHopf>,
    pub kmod: KModule,
    pub action: LinearMap,
    pub coaction: LinearMap,
}

impl std::fmt::Debug for YDModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "YD({}, dim {})", self.kmod.space.name(), self.dim())
    }
}

impl YDModule {
    pub fn new(h: Arc<BraidedHopf>, kmod: KModule, action: LinearMap, coaction: LinearMap) -> YDModule {
        YDModule { h, kmod, action, coaction }
    }

    /// `H` acting by `ε` and coacting by `1 ⊗ -`.
    pub fn trivial(h: Arc<BraidedHopf>, kmod: KModule) -> YDModule {
        let sp = kmod.space.clone();
        let f = h.alg.field();
        let dv = sp.dim();
        let dh = h.dim();
        let u = unit_index(&h.alg);
        let mut dom = h.alg.space().legs();
        dom.extend(sp.legs());
        let action = LinearMap::new(
            dom.clone(),
            sp.legs(),
            (0..dh * dv).map(|c| Some(Vector::single(c % dv, h.counit(c / dv)))).collect(),
        );
        let coaction = LinearMap::new(sp.legs(), dom, (0..dv).map(|i| Some(Vector::unit(u * dv + i, f.one()))).collect());
        YDModule { h, kmod, action, coaction }
    }

    pub fn space(&self) -> &BasedSpace {
        &self.kmod.space
    }

    pub fn dim(&self) -> usize {
        self.kmod.dim()
    }

    fn hv_legs(&self) -> Vec<BasedSpace> {
        let mut l = self.h.alg.space().legs();
        l.extend(self.space().legs());
        l
    }

    /// Action and coaction axioms, `K`-linearity, and the compatibility
    /// `(m⊗a)(Id⊗Ψ⊗Id)(Δ⊗δ) = (m⊗Id)(Id⊗Ψ)(δ⊗Id)(a⊗Id)(Id⊗Ψ)(Δ⊗Id)` on
    /// every basis element of `H ⊗ V`.
    pub fn check(&self) -> Result<()> {
        let h = &self.h;
        let k = &h.k;
        let name = format!("YD {}", self.space().name());
        let f = h.alg.field();
        let one = f.one();
        let (dh, dv) = (h.dim(), self.dim());
        let lh = h.alg.space().legs().len();
        self.kmod.check(k)?;
        let hv = tensor_module(k, &h.kmod, &self.kmod)?;
        check_k_linear(k, &self.action, &hv, &self.kmod, &format!("action of {name}"))?;
        check_k_linear(k, &self.coaction, &self.kmod, &hv, &format!("coaction of {name}"))?;
        let vlegs = self.space().legs();
        let bad = par::find_first(dv, |i| {
            let t = Tensor::basis(vlegs.clone(), i, one.clone());
            let d = t.apply(0, &self.coaction).ok()?;
            if d.apply(0, &h.delta).ok()? != d.apply(lh, &self.coaction).ok()? {
                return Some("coassociativity of δ");
            }
            if d.apply(0, &h.eps).ok()?.v != t.v {
                return Some("(ε⊗Id)δ = Id");
            }
            let u = Tensor::outer(&Tensor::new(h.alg.space().legs(), h.alg.unit().clone()), &t);
            if u.apply(0, &self.action).ok()?.v != t.v {
                return Some("1·v = v");
            }
            None
        });
        if let Some(what) = bad {
            return Err(fail(&name, what, "comodule/unit"));
        }
        let hvl = self.hv_legs();
        let bad = par::find_first(dh * dv, |c| {
            let t = Tensor::basis(hvl.clone(), c, one.clone());
            // associativity: (h' h)·v = h'·(h·v) for every h'
            let hv1 = t.apply(0, &self.action).ok()?;
            for y in 0..dh {
                let Some(yh) = h.alg.mul_basis(y, c / dv) else { continue };
                let l = Tensor::outer(
                    &Tensor::new(h.alg.space().legs(), yh),
                    &Tensor::basis(vlegs.clone(), c % dv, one.clone()),
                );
                let r = Tensor::outer(&Tensor::basis(h.alg.space().legs(), y, one.clone()), &hv1);
                if l.apply(0, &self.action).ok()?.v != r.apply(0, &self.action).ok()?.v {
                    return Some(c);
                }
            }
            let (l, r) = (self.compat_lhs(&t).ok()?, self.compat_rhs(&t).ok()?);
            (l != r).then_some(c)
        });
        if let Some(c) = bad {
            return Err(fail(&name, "Yetter-Drinfeld compatibility", &tensor_space(h.alg.space(), self.space()).render(c)));
        }
        let _ = legs_dim(&hvl);
        Ok(())
    }

    /// `(m_H ⊗ a_V)(Id ⊗ Ψ_{H,H} ⊗ Id)(Δ_H ⊗ δ_V)` on legs `[H, V]`.
    pub fn compat_lhs(&self, t: &Tensor) -> Result<Vector> {
        let h = &self.h;
        let lh = h.alg.space().legs().len();
        let t = t.apply(0, &h.delta)?;
        let t = t.apply(2 * lh, &self.coaction)?;
        let t = braid_at(&t, lh, &h.k, &h.kmod, &h.kmod)?;
        let t = mul_at(&t, 0, &h.alg)?;
        Ok(t.apply(lh, &self.action)?.v)
    }

    /// `(m⊗Id)(Id⊗Ψ_{V,H})(δ⊗Id)(a⊗Id)(Id⊗Ψ_{H,V})(Δ⊗Id)` on legs `[H, V]`.
    pub fn compat_rhs(&self, t: &Tensor) -> Result<Vector> {
        let h = &self.h;
        let lh = h.alg.space().legs().len();
        let t = t.apply(0, &h.delta)?;
        let t = braid_at(&t, lh, &h.k, &h.kmod, &self.kmod)?;
        let t = t.apply(0, &self.action)?;
        let t = t.apply(0, &self.coaction)?;
        let t = braid_at(&t, lh, &h.k, &self.kmod, &h.kmod)?;
        Ok(mul_at(&t, 0, &h.alg)?.v)
    }

    /// `h·v` on vectors.
    pub fn act(&self, hv: &Vector, v: &Vector) -> Result<Vector> {
        let t = Tensor::outer(&Tensor::new(self.h.alg.space().legs(), hv.clone()), &Tensor::new(self.space().legs(), v.clone()));
        self.action.apply(&t.v)
    }

    /// `δ(v)` on `H ⊗ V`.
    pub fn coact(&self, v: &Vector) -> Result<Vector> {
        self.coaction.apply(v)
    }
}

/// `Ψ^{YD}_{V,W}(e_i ⊗ e_j) = (a_W ⊗ Id)(Id ⊗ Ψ_{V,W})(δ_V ⊗ Id)` on `W ⊗ V`.
pub fn yd_braid_vec(v: &YDModule, w: &YDModule, x: &Vector) -> Result<Vector> {
    let h = &v.h;
    let lh = h.alg.space().legs().len();
    let mut legs = v.space().legs();
    legs.extend(w.space().legs());
    let t = Tensor::new(legs, x.clone());
    let t = t.apply(0, &v.coaction)?;
    let t = braid_at(&t, lh, &h.k, &v.kmod, &w.kmod)?;
    Ok(t.apply(0, &w.action)?.v)
}

/// Inverse of `Ψ^{YD}_{V,W}` on `W ⊗ V`:
/// `Ψ⁻¹_{V,W}(a_W ⊗ Id)(S⁻¹ ⊗ Id ⊗ Id)(Ψ⁻¹_{H,W} ⊗ Id)(Id ⊗ δ_V)`.
pub fn yd_braid_inv_vec(v: &YDModule, w: &YDModule, x: &Vector) -> Result<Vector> {
    let h = &v.h;
    let lw = w.space().legs().len();
    let mut legs = w.space().legs();
    legs.extend(v.space().legs());
    let t = Tensor::new(legs, x.clone());
    let t = t.apply(lw, &v.coaction)?;
    let t = braid_inv_at(&t, 0, &h.k, &h.kmod, &w.kmod)?;
    let t = t.apply(0, &h.s_inv)?;
    let t = t.apply(0, &w.action)?;
    Ok(braid_inv_at(&t, 0, &h.k, &v.kmod, &w.kmod)?.v)
}

/// `Ψ^{YD}_{V,W} : V ⊗ W → W ⊗ V`.
pub fn yd_braiding(v: &YDModule, w: &YDModule) -> Result<LinearMap> {
    let one = v.h.alg.field().one();
    let mut dom = v.space().legs();
    dom.extend(w.space().legs());
    let mut cod = w.space().legs();
    cod.extend(v.space().legs());
    LinearMap::from_fn(dom, cod, |c| yd_braid_vec(v, w, &Vector::unit(c, one.clone())).map(Some))
}

/// `(Ψ^{YD}_{V,W})⁻¹ : W ⊗ V → V ⊗ W`.
pub fn yd_braiding_inv(v: &YDModule, w: &YDModule) -> Result<LinearMap> {
    let one = v.h.alg.field().one();
    let mut dom = w.space().legs();
    dom.extend(v.space().legs());
    let mut cod = v.space().legs();
    cod.extend(w.space().legs());
    LinearMap::from_fn(dom, cod, |c| yd_braid_inv_vec(v, w, &Vector::unit(c, one.clone())).map(Some))
}

/// `V ⊗ W` with `a = (a_V ⊗ a_W)(Id ⊗ Ψ_{H,V} ⊗ Id)(Δ ⊗ Id ⊗ Id)` and
/// `δ = (m_H ⊗ Id ⊗ Id)(Id ⊗ Ψ_{V,H} ⊗ Id)(δ_V ⊗ δ_W)`.
pub fn yd_tensor(v: &YDModule, w: &YDModule) -> Result<YDModule> {
    let h = v.h.clone();
    let f = h.alg.field();
    let kmod = tensor_module(&h.k, &v.kmod, &w.kmod)?;
    let lh = h.alg.space().legs().len();
    let lv = v.space().legs().len();
    let vw = kmod.space.legs();
    let mut hvw = h.alg.space().legs();
    hvw.extend(vw.iter().cloned());
    let action = LinearMap::from_pipeline(f, hvw.clone(), vw.clone(), |t| {
        let t = t.apply(0, &h.delta)?;
        let t = braid_at(&t, lh, &h.k, &h.kmod, &v.kmod)?;
        let t = t.apply(0, &v.action)?;
        t.apply(lv, &w.action)
    })?;
    let coaction = LinearMap::from_pipeline(f, vw, hvw, |t| {
        let t = t.apply(0, &v.coaction)?;
        let t = t.apply(lh + lv, &w.coaction)?;
        let t = braid_at(&t, lh, &h.k, &v.kmod, &h.kmod)?;
        mul_at(&t, 0, &h.alg)
    })?;
    Ok(YDModule { h, kmod, action, coaction })
}

/// An algebra object in `YD^H(Mod_K)` on the module's space.
#[derive(Clone, Debug)]
pub struct YDAlgebra {
    pub yd: YDModule,
    pub alg: BasedAlgebra,
}

impl YDAlgebra {
    /// YD axioms plus: multiplication and unit are module and comodule maps
    /// (on every defined basis product).
    pub fn check(&self) -> Result<()> {
        self.yd.check()?;
        let h = &self.yd.h;
        let name = format!("YD algebra {}", self.alg.name());
        let (dh, da) = (h.dim(), self.alg.dim());
        let one = self.alg.one();
        let lh = h.alg.space().legs().len();
        let la = self.alg.space().legs().len();
        let al = self.alg.space().legs();
        let mut hl = h.alg.space().legs();
        hl.extend(al.iter().cloned());
        // unit
        for x in 0..dh {
            let l = self.yd.act(&Vector::unit(x, one.clone()), self.alg.unit())?;
            if l != self.alg.unit().scale(&h.counit(x)) {
                return Err(fail(&name, "h·1 = ε(h)1", &h.alg.space().render(x)));
            }
        }
        let u = unit_index(&h.alg);
        let du = self.yd.coact(self.alg.unit())?;
        let expect = Tensor::outer(
            &Tensor::basis(h.alg.space().legs(), u, one.clone()),
            &Tensor::new(al.clone(), self.alg.unit().clone()),
        );
        if du != expect.v {
            return Err(fail(&name, "δ(1) = 1 ⊗ 1", "unit"));
        }
        let pairs: Vec<(usize, usize)> = (0..da * da)
            .map(|p| (p / da, p % da))
            .filter(|&(a, b)| self.alg.mul_basis(a, b).is_some())
            .collect();
        let bad = par::find_first(pairs.len(), |p| {
            let (a, b) = pairs[p];
            let ab = self.alg.mul_basis(a, b).unwrap();
            let ea = Tensor::basis(al.clone(), a, one.clone());
            let eb = Tensor::basis(al.clone(), b, one.clone());
            let ab_t = Tensor::outer(&ea, &eb);
            // colinearity: δ(ab) = (m_H ⊗ m_A)(Id ⊗ Ψ_{A,H} ⊗ Id)(δ a ⊗ δ b)
            let t = ab_t.apply(0, &self.yd.coaction).ok()?;
            let t = t.apply(lh + la, &self.yd.coaction).ok()?;
            let t = braid_at(&t, lh, &h.k, &self.yd.kmod, &h.kmod).ok()?;
            let t = mul_at(&t, 0, &h.alg).ok()?;
            let t = mul_at(&t, lh, &self.alg).ok()?;
            if t.v != self.yd.coact(&ab).ok()? {
                return Some(("m is H-colinear", a, b));
            }
            // linearity: h·(ab) = m((a ⊗ a)(Id ⊗ Ψ_{H,A} ⊗ Id)(Δh ⊗ a ⊗ b))
            for x in 0..dh {
                let t = Tensor::outer(&Tensor::basis(h.alg.space().legs(), x, one.clone()), &ab_t);
                let t = t.apply(0, &h.delta).ok()?;
                let t = braid_at(&t, lh, &h.k, &h.kmod, &self.yd.kmod).ok()?;
                let t = t.apply(0, &self.yd.action).ok()?;
                let t = t.apply(la, &self.yd.action).ok()?;
                let r = mul_at(&t, 0, &self.alg).ok()?;
                if r.v != self.yd.act(&Vector::unit(x, one.clone()), &ab).ok()? {
                    return Some(("m is H-linear", a, b));
                }
            }
            None
        });
        if let Some((what, a, b)) = bad {
            return Err(fail(&name, what, &format!("{} · {}", self.alg.space().render(a), self.alg.space().render(b))));
        }
        let _ = hl;
        Ok(())
    }

    /// `m Ψ^{YD}(e_a ⊗ e_b)`.
    pub fn mul_braided(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        let al = self.alg.space().legs();
        let t = Tensor::outer(&Tensor::new(al.clone(), a.clone()), &Tensor::new(al.clone(), b.clone()));
        let psi = yd_braid_vec(&self.yd, &self.yd, &t.v)?;
        let mut legs = al.clone();
        legs.extend(al);
        Ok(mul_at(&Tensor::new(legs, psi), 0, &self.alg)?.v)
    }

    /// `m (Ψ^{YD})⁻¹(e_a ⊗ e_b)`.
    pub fn mul_braided_inv(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        let al = self.alg.space().legs();
        let t = Tensor::outer(&Tensor::new(al.clone(), a.clone()), &Tensor::new(al.clone(), b.clone()));
        let psi = yd_braid_inv_vec(&self.yd, &self.yd, &t.v)?;
        let mut legs = al.clone();
        legs.extend(al);
        Ok(mul_at(&Tensor::new(legs, psi), 0, &self.alg)?.v)
    }

    /// `m Ψ^{YD} = m` on all basis pairs with a defined product; returns the
    /// first failing pair.
    pub fn braided_commutative_witness(&self) -> Result<Option<(usize, usize)>> {
        let d = self.alg.dim();
        let one = self.alg.one();
        let r = par::find_first(d * d, |p| {
            let (a, b) = (p / d, p % d);
            let ab = self.alg.mul_basis(a, b)?;
            let ea = Vector::unit(a, one.clone());
            let eb = Vector::unit(b, one.clone());
            match self.mul_braided(&ea, &eb) {
                Ok(x) if x == ab => None,
                Ok(_) => Some(Some((a, b))),
                Err(_) => None,
            }
        });
        Ok(r.flatten())
    }
}
