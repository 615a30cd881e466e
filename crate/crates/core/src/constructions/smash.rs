use crate::algebra::{BasedAlgebra, FnMul};
use crate::braid::{braid_at, braid_inv_at, fail, mul_at, tensor_module, unit_index, KModule, QTHopf};
use crate::braided_hopf::{action_from_rho, BraidedHopf, ModuleAlgebra};
use crate::error::Result;
use crate::linspace::{rank, tensor_space, Acc, BasisIndex, LinearMap, Tensor, Vector};
use crate::scalars::{q_factorial, Scalar};
use crate::yd::YDModule;
use std::sync::Arc;

use super::rb::{rb_module, HModule};

/// A pairing `ev : H ⊗ H∨ → k` between two Hopf algebras over the same `K`.
#[derive(Clone, Debug)]
pub struct DualPairing {
    pub h: Arc<BraidedHopf>,
    pub dual: Arc<BraidedHopf>,
    /// `[H, H∨] → []`.
    pub ev: LinearMap,
}

impl DualPairing {
    pub fn new(h: Arc<BraidedHopf>, dual: Arc<BraidedHopf>, ev: LinearMap) -> DualPairing {
        DualPairing { h, dual, ev }
    }

    /// Pairing given by its values on basis pairs.
    pub fn from_fn<F>(h: Arc<BraidedHopf>, dual: Arc<BraidedHopf>, f: F) -> DualPairing
    where
        F: Fn(usize, usize) -> Scalar,
    {
        let dd = dual.dim();
        let cols = (0..h.dim() * dd).map(|c| Some(Vector::single(0, f(c / dd, c % dd)))).collect();
        let mut dom = h.alg.space().legs();
        dom.extend(dual.alg.space().legs());
        let ev = LinearMap::new(dom, vec![], cols);
        DualPairing { h, dual, ev }
    }

    /// `k[x_1..x_v]` and `k[d_1..d_v]`, both truncated at `bound`, with
    /// `⟨x^a, d^b⟩ = δ_{ab} a!` (so `⟨x_i, d_j⟩ = δ_{ij}`).
    pub fn weyl(k: Arc<QTHopf>, vars: usize, bound: u32) -> Result<DualPairing> {
        let (xs, ds): (Vec<String>, Vec<String>) = if vars == 1 {
            (vec!["x".into()], vec!["d".into()])
        } else {
            ((1..=vars).map(|i| format!("x{i}")).collect(), (1..=vars).map(|i| format!("d{i}")).collect())
        };
        let xr: Vec<&str> = xs.iter().map(|s| s.as_str()).collect();
        let dr: Vec<&str> = ds.iter().map(|s| s.as_str()).collect();
        let h = Arc::new(BraidedHopf::polynomial(k.clone(), &xr, bound)?);
        let dual = Arc::new(BraidedHopf::polynomial(k, &dr, bound)?);
        let f = h.alg.field();
        let (hs, ds2) = (h.alg.space().clone(), dual.alg.space().clone());
        Ok(DualPairing::from_fn(h, dual, |i, j| {
            let (BasisIndex::Mono(a), BasisIndex::Mono(b)) = (hs.label(i), ds2.label(j)) else { unreachable!() };
            if a != b {
                return f.zero();
            }
            a.iter().fold(f.one(), |acc, &e| acc.mul(&q_factorial(e as i64, &f.one())))
        }))
    }

    /// The nilpotent line `H = k[x]/(x^n)` (weight −1) against
    /// `H∨ = k[x*]/(x*^n)` (weight +1) with `⟨x^i, x*^i⟩ = λ^i [i]_{q²}!`.
    pub fn nilpotent(h: Arc<BraidedHopf>, q: &Scalar, n: u32, lambda: &Scalar) -> Result<DualPairing> {
        let dual = Arc::new(BraidedHopf::nilpotent_line(h.k.clone(), q, n, 1, "x*")?);
        let f = q.field();
        let q2 = q.mul(q);
        let (hs, ds) = (h.alg.space().clone(), dual.alg.space().clone());
        Ok(DualPairing::from_fn(h, dual, |i, j| {
            let (BasisIndex::Mono(a), BasisIndex::Mono(b)) = (hs.label(i), ds.label(j)) else { unreachable!() };
            if a != b {
                return f.zero();
            }
            lambda.pow(a[0] as i64).mul(&q_factorial(a[0] as i64, &q2))
        }))
    }

    /// `⟨e_i, e_j⟩`.
    pub fn value(&self, i: usize, j: usize) -> Scalar {
        let c = i * self.dual.dim() + j;
        self.ev.col(c).and_then(|v| v.get(0).cloned()).unwrap_or(self.h.alg.field().zero())
    }

    /// `⟨h, f⟩` for vectors.
    pub fn eval(&self, h: &Vector, f: &Vector) -> Scalar {
        let mut acc = self.h.alg.field().zero();
        for (i, a) in h.iter() {
            for (j, b) in f.iter() {
                let v = self.value(*i, *j);
                if !v.is_zero() {
                    acc = acc.add(&a.mul(b).mul(&v));
                }
            }
        }
        acc
    }

    /// Nondegeneracy, unit/counit laws, `K`-invariance and the nested
    /// product laws `⟨hg, f⟩ = ⟨g, f₁⟩⟨h, f₂⟩`, `⟨h, fe⟩ = ⟨h₁, e⟩⟨h₂, f⟩`
    /// on every basis triple with a defined product.
    pub fn check(&self) -> Result<()> {
        let (h, d) = (&self.h, &self.dual);
        let name = format!("pairing {} × {}", h.name, d.name);
        let f = h.alg.field();
        let one = f.one();
        let (dh, dd) = (h.dim(), d.dim());
        if dh != dd {
            return Err(fail(&name, "nondegeneracy", "dimensions differ"));
        }
        let mat = LinearMap::from_fn(h.alg.space().legs(), d.alg.space().legs(), |i| {
            Ok(Some(Vector::from_pairs((0..dd).map(|j| (j, self.value(i, j))))))
        })?;
        if rank(&mat)? != dh {
            return Err(fail(&name, "nondegeneracy", "pairing matrix is singular"));
        }
        let (uh, ud) = (unit_index(&h.alg), unit_index(&d.alg));
        for j in 0..dd {
            if self.value(uh, j) != d.counit(j) {
                return Err(fail(&name, "⟨1, f⟩ = ε(f)", &d.alg.space().render(j)));
            }
        }
        for i in 0..dh {
            if self.value(i, ud) != h.counit(i) {
                return Err(fail(&name, "⟨h, 1⟩ = ε(h)", &h.alg.space().render(i)));
            }
        }
        let k = &h.k;
        let dk = k.dim();
        for kk in 0..dk {
            let eps = k.counit(kk);
            for i in 0..dh {
                for j in 0..dd {
                    let mut acc = f.zero();
                    for (idx, c) in k.delta.col(kk).unwrap().iter() {
                        let hv = h.kmod.rho[idx / dk].col(i).unwrap();
                        let fv = d.kmod.rho[idx % dk].col(j).unwrap();
                        acc = acc.add(&c.mul(&self.eval(hv, fv)));
                    }
                    if acc != eps.mul(&self.value(i, j)) {
                        return Err(fail(&name, "K-invariance", &format!(
                            "{} on {} ⊗ {}",
                            k.space().render(kk),
                            h.alg.space().render(i),
                            d.alg.space().render(j)
                        )));
                    }
                }
            }
        }
        for a in 0..dh {
            for b in 0..dh {
                let Some(ab) = h.alg.mul_basis(a, b) else { continue };
                for j in 0..dd {
                    let l = self.eval(&ab, &Vector::unit(j, one.clone()));
                    let mut r = f.zero();
                    for (idx, c) in d.delta.col(j).unwrap().iter() {
                        let (f1, f2) = (idx / dd, idx % dd);
                        r = r.add(&c.mul(&self.value(b, f1)).mul(&self.value(a, f2)));
                    }
                    if l != r {
                        return Err(fail(&name, "⟨hg, f⟩ = ⟨g, f₁⟩⟨h, f₂⟩", &format!(
                            "{} · {} against {}",
                            h.alg.space().render(a),
                            h.alg.space().render(b),
                            d.alg.space().render(j)
                        )));
                    }
                }
            }
        }
        for a in 0..dd {
            for b in 0..dd {
                let Some(ab) = d.alg.mul_basis(a, b) else { continue };
                for i in 0..dh {
                    let l = self.eval(&Vector::unit(i, one.clone()), &ab);
                    let mut r = f.zero();
                    for (idx, c) in h.delta.col(i).unwrap().iter() {
                        let (h1, h2) = (idx / dh, idx % dh);
                        r = r.add(&c.mul(&self.value(h1, b)).mul(&self.value(h2, a)));
                    }
                    if l != r {
                        return Err(fail(&name, "⟨h, fe⟩ = ⟨h₁, e⟩⟨h₂, f⟩", &format!(
                            "{} against {} · {}",
                            h.alg.space().render(i),
                            d.alg.space().render(a),
                            d.alg.space().render(b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `A` with the product `m (Ψ_{A,A})⁻¹`.
pub fn braided_opposite(k: &QTHopf, alg: &BasedAlgebra, kmod: &KModule) -> BasedAlgebra {
    let la = alg.space().legs();
    let (a2, k2, m2) = (alg.clone(), k.clone(), kmod.clone());
    let mut two = la.clone();
    two.extend(la.iter().cloned());
    let mul = FnMul(move |x: usize, y: usize| {
        let t = Tensor::basis(two.clone(), x * a2.dim() + y, a2.one());
        let t = braid_inv_at(&t, 0, &k2, &m2, &m2).ok()?;
        mul_at(&t, 0, &a2).ok().map(|t| t.v)
    });
    BasedAlgebra::from_product(
        &format!("{}^op", alg.name()),
        alg.space().clone(),
        alg.field(),
        alg.unit().clone(),
        alg.degrees().to_vec(),
        alg.bound(),
        Arc::new(mul),
    )
}

/// `H∨` with the opposite product, acted on by `H` through
/// `a^cor = (ev ⊗ Id)(Id ⊗ Δ_{H∨})`.
pub fn coregular_module(p: &DualPairing) -> Result<ModuleAlgebra> {
    let (h, d) = (&p.h, &p.dual);
    let dd = d.dim();
    let alg = braided_opposite(&h.k, &d.alg, &d.kmod);
    let rho: Vec<LinearMap> = (0..h.dim())
        .map(|x| {
            let cols = (0..dd)
                .map(|j| {
                    let mut acc = Acc::new();
                    for (idx, c) in d.delta.col(j).unwrap().iter() {
                        let v = p.value(x, idx / dd);
                        if !v.is_zero() {
                            acc.add(idx % dd, &c.mul(&v));
                        }
                    }
                    acc.finish()
                })
                .collect();
            LinearMap::between(d.alg.space(), d.alg.space(), cols)
        })
        .collect();
    let action = action_from_rho(&h.alg, &alg, &rho);
    Ok(ModuleAlgebra::new(h.clone(), alg, d.kmod.clone(), action))
}

/// `A ⋊ H` on `A ⊗ H` with
/// `m = (m_A ⊗ m_H)(Id ⊗ a ⊗ Id)(Id ⊗ Id ⊗ Ψ_{H,A} ⊗ Id)(Id ⊗ Δ ⊗ Id ⊗ Id)`.
pub fn smash_product(a: &ModuleAlgebra) -> BasedAlgebra {
    let h = a.h.clone();
    let f = h.alg.field();
    let space = tensor_space(a.alg.space(), h.alg.space());
    let (la, lh, dh) = (a.alg.space().legs().len(), h.alg.space().legs().len(), h.dim());
    let degrees: Vec<u32> = (0..space.dim()).map(|i| a.alg.degree(i / dh) + h.alg.degree(i % dh)).collect();
    let unit = Tensor::outer(
        &Tensor::new(a.alg.space().legs(), a.alg.unit().clone()),
        &Tensor::new(h.alg.space().legs(), h.alg.unit().clone()),
    )
    .v;
    let bound = match (a.alg.bound(), h.alg.bound()) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let legs = space.legs();
    let am = a.clone();
    let mul = FnMul(move |x: usize, y: usize| {
        let one = am.alg.one();
        let t = Tensor::outer(&Tensor::basis(legs.clone(), x, one.clone()), &Tensor::basis(legs.clone(), y, one));
        let t = t.apply(la, &am.h.delta).ok()?;
        let t = braid_at(&t, la + lh, &am.h.k, &am.h.kmod, &am.kmod).ok()?;
        let t = t.apply(la, &am.action).ok()?;
        let t = mul_at(&t, 0, &am.alg).ok()?;
        mul_at(&t, la, &am.h.alg).ok().map(|t| t.v)
    });
    let name = format!("{}⋊{}", a.alg.name(), h.name);
    BasedAlgebra::from_product(&name, space, f, unit, degrees, bound, Arc::new(mul))
}

/// The `K`-module `A ⊗ H` underlying the smash product.
pub fn smash_kmodule(a: &ModuleAlgebra) -> Result<KModule> {
    tensor_module(&a.h.k, &a.kmod, &a.h.kmod)
}

/// `φ = (Id ⊗ S⁻¹)(Ψ_{A,H})⁻¹ : H ⊗ A → A ⊗ H` and its inverse
/// `φ⁻¹ = Ψ_{A,H}(Id ⊗ S)`.
pub fn phi_maps(a: &ModuleAlgebra) -> Result<(LinearMap, LinearMap)> {
    let h = &a.h;
    let f = h.alg.field();
    let la = a.alg.space().legs().len();
    let mut ha = h.alg.space().legs();
    ha.extend(a.alg.space().legs());
    let mut ah = a.alg.space().legs();
    ah.extend(h.alg.space().legs());
    let phi = LinearMap::from_pipeline(f, ha.clone(), ah.clone(), |t| {
        let t = braid_inv_at(&t, 0, &h.k, &a.kmod, &h.kmod)?;
        t.apply(la, &h.s_inv)
    })?;
    let phi_inv = LinearMap::from_pipeline(f, ah, ha, |t| {
        let t = t.apply(la, &h.s)?;
        braid_at(&t, 0, &h.k, &a.kmod, &h.kmod)
    })?;
    Ok((phi, phi_inv))
}

/// The coinduced YD structure on `H ⊗ A` moved to `A ⊗ H` along `φ`:
/// `a^⋊ = φ a^R (Id ⊗ φ⁻¹)`, `δ^⋊ = (Id ⊗ φ) δ^R φ⁻¹`.
pub fn transported_yd(a: &ModuleAlgebra) -> Result<YDModule> {
    let h = a.h.clone();
    let f = h.alg.field();
    let r = rb_module(&HModule::from(a))?;
    let (phi, phi_inv) = phi_maps(a)?;
    let kmod = smash_kmodule(a)?;
    let lh = h.alg.space().legs().len();
    let ah = kmod.space.legs();
    let mut hah = h.alg.space().legs();
    hah.extend(ah.iter().cloned());
    let action = LinearMap::from_pipeline(f, hah.clone(), ah.clone(), |t| {
        let t = t.apply(lh, &phi_inv)?;
        let t = t.apply(0, &r.action)?;
        t.apply(0, &phi)
    })?;
    let coaction = LinearMap::from_pipeline(f, ah, hah, |t| {
        let t = t.apply(0, &phi_inv)?;
        let t = t.apply(0, &r.coaction)?;
        t.apply(lh, &phi)
    })?;
    Ok(YDModule::new(h, kmod, action, coaction))
}

/// The transported structure written directly on `A ⊗ H`:
/// `a^⋊(h ⊗ a ⊗ k) = (h₂·(a ⊗ k)) S⁻¹(h₁)` with `H` acting on `A ⊗ H`
/// diagonally (on `H` by left multiplication) and `S⁻¹(h₁)` braided back
/// past `A ⊗ H`; `δ^⋊ = (S ⊗ Id)Ψ_{A⊗H,H}(Id ⊗ Δ)`.
pub fn transported_yd_closed_form(a: &ModuleAlgebra) -> Result<YDModule> {
    let h = a.h.clone();
    let f = h.alg.field();
    let kmod = smash_kmodule(a)?;
    let regular = HModule { h: h.clone(), kmod: h.kmod.clone(), action: h.alg.mul_map() };
    let diag = super::rb::h_module_tensor(&HModule::from(a), &regular)?;
    let (lh, la) = (h.alg.space().legs().len(), a.alg.space().legs().len());
    let ah = kmod.space.legs();
    let mut hah = h.alg.space().legs();
    hah.extend(ah.iter().cloned());
    let action = LinearMap::from_pipeline(f, hah.clone(), ah.clone(), |t| {
        // [h1, h2, a, k] -> [h1, h2·(a ⊗ k)]
        let t = t.apply(0, &h.delta)?;
        let t = t.apply(lh, &diag.action)?;
        let t = t.apply(0, &h.s_inv)?;
        // [S⁻¹h1, a', k'] -> [a'', k'', S⁻¹h1'']
        let t = braid_inv_at(&t, 0, &h.k, &kmod, &h.kmod)?;
        mul_at(&t, la, &h.alg)
    })?;
    let coaction = LinearMap::from_pipeline(f, ah, hah, |t| {
        let t = t.apply(la, &h.delta)?;
        let t = braid_at(&t, 0, &h.k, &kmod, &h.kmod)?;
        t.apply(0, &h.s)
    })?;
    Ok(YDModule::new(h, kmod, action, coaction))
}

/// `H∨^{Ψ⁻¹} ⋊ H`.
pub fn heisenberg_double(p: &DualPairing) -> Result<BasedAlgebra> {
    let m = coregular_module(p)?;
    Ok(smash_product(&m))
}

/// Product of basis elements `a ⊗ g` and `b ⊗ h` of `H∨ ⊗ H` from the
/// closed formula
/// `Σ ⟨g₁, R''⁽²⁾·b₁⟩ m_{H∨}(R⁻⁽¹⁾R'⁽²⁾·b₂ ⊗ R⁻⁽²⁾·a) ⊗ m_H(R''⁽¹⁾R'⁽¹⁾·g₂ ⊗ h)`,
/// with `m_{H∨}` the undeformed product.
pub fn heisenberg_product_formula(p: &DualPairing, x: usize, y: usize) -> Result<Vector> {
    let (h, d) = (&p.h, &p.dual);
    let k = &h.k;
    let (dh, dd) = (h.dim(), d.dim());
    let f = h.alg.field();
    let one = f.one();
    let (a, g) = (x / dh, x % dh);
    let (b, hh) = (y / dh, y % dh);
    let kvec = |i: usize| Vector::unit(i, one.clone());
    let act_h = |kk: &Vector, v: &Vector| -> Result<Vector> {
        let mut acc = Acc::new();
        for (i, c) in kk.iter() {
            acc.add_vec(&h.kmod.rho[*i].apply(v)?, c);
        }
        Ok(acc.finish())
    };
    let act_d = |kk: &Vector, v: &Vector| -> Result<Vector> {
        let mut acc = Acc::new();
        for (i, c) in kk.iter() {
            acc.add_vec(&d.kmod.rho[*i].apply(v)?, c);
        }
        Ok(acc.finish())
    };
    let r = k.r_terms();
    let rinv = k.r_inv_terms();
    let mut acc = Acc::new();
    for (cb, b1, b2) in d.delta.col(b).unwrap().iter().map(|(i, c)| (c, i / dd, i % dd)) {
        for (cg, g1, g2) in h.delta.col(g).unwrap().iter().map(|(i, c)| (c, i / dh, i % dh)) {
            for (c2, t1, t2) in &r {
                let pv = p.eval(&kvec(g1), &d.kmod.rho[*t2].apply(&kvec(b1))?);
                if pv.is_zero() {
                    continue;
                }
                for (c1, s1, s2) in &r {
                    let right_h = h.alg.mul(&act_h(&k.alg.mul(&kvec(*t1), &kvec(*s1))?, &kvec(g2))?, &kvec(hh))?;
                    if right_h.is_zero() {
                        continue;
                    }
                    for (c0, r1, r2) in &rinv {
                        let l1 = act_d(&k.alg.mul(&kvec(*r1), &kvec(*s2))?, &kvec(b2))?;
                        let l2 = d.kmod.rho[*r2].apply(&kvec(a))?;
                        let left = d.alg.mul(&l1, &l2)?;
                        if left.is_zero() {
                            continue;
                        }
                        let coef = cb.mul(cg).mul(c2).mul(c1).mul(c0).mul(&pv);
                        for (i, u) in left.iter() {
                            for (j, v) in right_h.iter() {
                                acc.add(i * dh + j, &coef.mul(u).mul(v));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(acc.finish())
}
