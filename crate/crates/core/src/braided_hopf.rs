//! Hopf algebras and module algebras inside `Mod_K`.

use crate::algebra::{BasedAlgebra, PowerRule, Presentation};
use crate::braid::{
    braid_pair, braiding, check_hopf_maps, extend_counit, extend_on_monomials, fail, mul_at, tensor_module,
    twisted_tensor_mul, unit_index, KModule, QTHopf,
};
use crate::error::{Error, Result};
use crate::linspace::{inverse, Acc, BasisIndex, LinearMap, Tensor, Vector};
use crate::par;
use crate::scalars::{q_binomial, Scalar};
use std::sync::Arc;

/// A Hopf algebra in `Mod_K`: the bialgebra law uses `Ψ_{H,H}`.
#[derive(Clone)]
pub struct BraidedHopf {
    pub name: String,
    pub k: Arc<QTHopf>,
    pub alg: BasedAlgebra,
    pub kmod: KModule,
    pub delta: LinearMap,
    pub eps: LinearMap,
    pub s: LinearMap,
    pub s_inv: LinearMap,
    pub psi: LinearMap,
}

impl std::fmt::Debug for BraidedHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BraidedHopf({}, dim {})", self.name, self.alg.dim())
    }
}

impl BraidedHopf {
    /// Extend generator data: `Δ(ab) = Δ(a)Δ(b)` in the braided tensor
    /// product, `S(ab) = m Ψ(S a ⊗ S b)`.
    pub fn from_generators(
        name: &str,
        k: Arc<QTHopf>,
        alg: BasedAlgebra,
        kmod: KModule,
        delta_gens: &[Vector],
        eps_gens: &[Scalar],
        s_gens: &[Vector],
    ) -> Result<BraidedHopf> {
        let psi = braiding(&k, &kmod, &kmod)?;
        let sp = alg.space().clone();
        let f = alg.field();
        let unit2 = Tensor::outer(
            &Tensor::new(sp.legs(), alg.unit().clone()),
            &Tensor::new(sp.legs(), alg.unit().clone()),
        )
        .v;
        let d_imgs = extend_on_monomials(&alg, delta_gens, unit2, |x, y| twisted_tensor_mul(&alg, &alg, &psi, x, y))?;
        let e_imgs = extend_counit(&alg, eps_gens)?;
        let mut two = sp.legs();
        two.extend(sp.legs());
        let s_imgs = extend_on_monomials(&alg, s_gens, alg.unit().clone(), |x, y| {
            let t = Tensor::new(two.clone(), psi.apply(&tensor_vec(&alg, x, y))?);
            Ok(mul_at(&t, 0, &alg)?.v)
        })?;
        let delta = LinearMap::new(sp.legs(), two.clone(), d_imgs.into_iter().map(Some).collect());
        let eps = LinearMap::new(sp.legs(), vec![], e_imgs.into_iter().map(Some).collect());
        let s = LinearMap::new(sp.legs(), sp.legs(), s_imgs.into_iter().map(Some).collect());
        let s_inv = inverse(&s, &f.one())?;
        Ok(BraidedHopf { name: name.into(), k, alg, kmod, delta, eps, s, s_inv, psi })
    }

    /// `H = k`.
    pub fn trivial(k: Arc<QTHopf>) -> Result<BraidedHopf> {
        let f = k.field();
        let alg = BasedAlgebra::from_presentation("k", Presentation::new(f))?;
        let kmod = KModule::trivial(&k, alg.space());
        BraidedHopf::from_generators("k", k, alg, kmod, &[], &[], &[])
    }

    /// `k[x]/(x^n)` with `g·x = q^{2w} x`, `x` primitive. With
    /// `t = q^{2w²}` the structure maps are
    /// `Δ(x^m) = Σ binom(m,i)_t x^i ⊗ x^{m-i}` and
    /// `S(x^m) = (-1)^m t^{m(m-1)/2} x^m`. `k` must be `k Z_n` on `g`.
    pub fn nilpotent_line(k: Arc<QTHopf>, q: &Scalar, n: u32, weight: i64, gen: &str) -> Result<BraidedHopf> {
        let f = q.field();
        let kp = k
            .alg
            .presentation()
            .ok_or_else(|| Error::InvalidArgument("K must be presented".into()))?;
        if kp.ngens() != 1 || kp.generators[0].power != PowerRule::Cyclic(n) {
            return Err(Error::InvalidArgument(format!("a nilpotent line of order {n} needs K = kZ_{n}")));
        }
        let p = Presentation::new(f).generator(gen, PowerRule::Nilpotent(n), 0);
        let alg = BasedAlgebra::from_presentation(&format!("k[{gen}]/({gen}^{n})"), p)?;
        let sp = alg.space().clone();
        let idx = |m: u32| sp.index_of(&BasisIndex::Mono(vec![m])).unwrap();
        let gm = LinearMap::between(
            &sp,
            &sp,
            (0..sp.dim())
                .map(|i| {
                    let BasisIndex::Mono(e) = sp.label(i) else { unreachable!() };
                    Vector::unit(i, q.pow(2 * weight * e[0] as i64))
                })
                .collect(),
        );
        let kmod = KModule::from_generators(&k, &sp, &[gm])?;
        let t = q.pow(2 * weight * weight);
        let d = alg.dim();
        let mut dcols = vec![None; d];
        let mut scols = vec![None; d];
        let mut ecols = vec![None; d];
        for m in 0..n {
            let mut acc = Acc::new();
            for i in 0..=m {
                acc.add(idx(i) * d + idx(m - i), &q_binomial(m as i64, i as i64, &t)?);
            }
            dcols[idx(m)] = Some(acc.finish());
            let sign = if m % 2 == 0 { f.one() } else { f.int(-1) };
            let mm = m as i64;
            scols[idx(m)] = Some(Vector::single(idx(m), sign.mul(&t.pow(mm * (mm - 1) / 2))));
            ecols[idx(m)] = Some(Vector::single(0, if m == 0 { f.one() } else { f.zero() }));
        }
        let psi = braiding(&k, &kmod, &kmod)?;
        let delta = LinearMap::new(sp.legs(), vec![sp.clone(), sp.clone()], dcols);
        let s = LinearMap::new(sp.legs(), sp.legs(), scols);
        let s_inv = inverse(&s, &f.one())?;
        let eps = LinearMap::new(sp.legs(), vec![], ecols);
        Ok(BraidedHopf { name: format!("k[{gen}]/({gen}^{n})"), k, alg, kmod, delta, eps, s, s_inv, psi })
    }

    /// Polynomial Hopf algebra on primitive generators, truncated at total
    /// degree `bound`, with `K` acting trivially.
    pub fn polynomial(k: Arc<QTHopf>, names: &[&str], bound: u32) -> Result<BraidedHopf> {
        let f = k.field();
        let mut p = Presentation::new(f).truncate_at(bound);
        for nm in names {
            p = p.generator(nm, PowerRule::Free, 1);
        }
        let alg = BasedAlgebra::from_presentation(&names.join(","), p)?;
        let kmod = KModule::trivial(&k, alg.space());
        let d = alg.dim();
        let u = unit_index(&alg);
        let mut dg = Vec::new();
        let mut sg = Vec::new();
        for nm in names {
            let x = alg.mono(nm)?;
            dg.push(Vector::from_pairs([(x * d + u, f.one()), (u * d + x, f.one())]));
            sg.push(Vector::single(x, f.int(-1)));
        }
        let eg = vec![f.zero(); names.len()];
        let name = format!("k[{}]", names.join(","));
        BraidedHopf::from_generators(&name, k, alg, kmod, &dg, &eg, &sg)
    }

    /// An ordinary Hopf algebra viewed over `K = k` (braiding = flip).
    pub fn from_ordinary(hopf: &crate::braid::HopfAlgebra) -> Result<BraidedHopf> {
        let k = Arc::new(QTHopf::trivial(hopf.field())?);
        let kmod = KModule::trivial(&k, hopf.space());
        let psi = braiding(&k, &kmod, &kmod)?;
        Ok(BraidedHopf {
            name: hopf.name.clone(),
            k,
            alg: hopf.alg.clone(),
            kmod,
            delta: hopf.delta.clone(),
            eps: hopf.eps.clone(),
            s: hopf.s.clone(),
            s_inv: hopf.s_inv.clone(),
            psi,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `ε(e_i)`.
    pub fn counit(&self, i: usize) -> Scalar {
        self.eps.col(i).and_then(|c| c.get(0).cloned()).unwrap_or(self.alg.field().zero())
    }

    /// Product in the braided tensor square `H ⊗ H`.
    pub fn mul2(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        twisted_tensor_mul(&self.alg, &self.alg, &self.psi, x, y)
    }

    /// Hopf axioms with `Ψ_{H,H}`, plus `K`-linearity of every structure map.
    pub fn check(&self) -> Result<()> {
        self.kmod.check(&self.k)?;
        check_hopf_maps(&self.name, &self.alg, &self.delta, &self.eps, &self.s, &self.s_inv, &self.psi)?;
        check_k_module_algebra(&self.k, &self.alg, &self.kmod)?;
        let hh = tensor_module(&self.k, &self.kmod, &self.kmod)?;
        let triv = KModule::trivial(&self.k, &crate::linspace::BasedSpace::unit());
        check_k_linear(&self.k, &self.delta, &self.kmod, &hh, &format!("Δ of {}", self.name))?;
        check_k_linear(&self.k, &self.eps, &self.kmod, &triv, &format!("ε of {}", self.name))?;
        check_k_linear(&self.k, &self.s, &self.kmod, &self.kmod, &format!("S of {}", self.name))?;
        Ok(())
    }
}

fn tensor_vec(alg: &BasedAlgebra, x: &Vector, y: &Vector) -> Vector {
    let legs = alg.space().legs();
    Tensor::outer(&Tensor::new(legs.clone(), x.clone()), &Tensor::new(legs, y.clone())).v
}

/// `f ρ_V(k) = ρ_W(k) f` for every basis element `k` of `K`.
pub fn check_k_linear(k: &QTHopf, f: &LinearMap, v: &KModule, w: &KModule, what: &str) -> Result<()> {
    for h in 0..k.dim() {
        let l = f.compose(&v.rho[h].relegged(f.domain().to_vec(), f.domain().to_vec()));
        let r = w.rho[h].relegged(f.codomain().to_vec(), f.codomain().to_vec()).compose(f);
        match (l, r) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(_), Ok(_)) => return Err(fail(what, "K-linearity", &k.space().render(h))),
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Ok(())
}

/// `k·(ab) = (k₁·a)(k₂·b)` on all defined basis products, and `k·1 = ε(k)1`.
pub fn check_k_module_algebra(k: &QTHopf, alg: &BasedAlgebra, kmod: &KModule) -> Result<()> {
    let d = alg.dim();
    let dk = k.dim();
    for h in 0..dk {
        if kmod.rho[h].apply(alg.unit())? != alg.unit().scale(&k.counit(h)) {
            return Err(fail(alg.name(), "K acts on the unit by ε", &k.space().render(h)));
        }
    }
    let bad = par::find_first(d * d, |ab| {
        let (a, b) = (ab / d, ab % d);
        let prod = alg.mul_basis(a, b)?;
        for h in 0..dk {
            let lhs = kmod.rho[h].apply(&prod).ok()?;
            let mut rhs = Vector::zero();
            for (idx, c) in k.delta.col(h).unwrap().iter() {
                let x = kmod.rho[idx / dk].col(a).unwrap();
                let y = kmod.rho[idx % dk].col(b).unwrap();
                rhs = rhs.add_scaled(&alg.mul(x, y).ok()?, c);
            }
            if lhs != rhs {
                return Some((h, a, b));
            }
        }
        None
    });
    if let Some((h, a, b)) = bad {
        return Err(fail(
            alg.name(),
            "K acts by algebra maps",
            &format!("{} on {} · {}", k.space().render(h), alg.space().render(a), alg.space().render(b)),
        ));
    }
    Ok(())
}

/// Extend actions given on generators to every basis monomial, using
/// `h·(M' t) = Σ (h₁·M'')(h₂''·t)` where `Σ M'' ⊗ h₂''` is the image of
/// `h₂ ⊗ M'` under `swap`. Monomials are processed by total exponent so
/// every factor is known before it is needed. Returns `ρ(h)` for each basis
/// element `h` of the acting algebra.
pub(crate) fn extend_action(
    a: &BasedAlgebra,
    acting: &BasedAlgebra,
    delta: &LinearMap,
    counit: &dyn Fn(usize) -> Scalar,
    gen_on_gen: &[Vec<Vector>],
    swap: &(dyn Fn(usize, usize) -> Vector + Sync),
) -> Result<Vec<LinearMap>> {
    let pa = a
        .presentation()
        .ok_or_else(|| Error::InvalidArgument("acted-on algebra must be presented".into()))?;
    let ph = acting
        .presentation()
        .ok_or_else(|| Error::InvalidArgument("acting algebra must be presented".into()))?;
    if gen_on_gen.len() != ph.ngens() || gen_on_gen.iter().any(|r| r.len() != pa.ngens()) {
        return Err(Error::DimensionMismatch("generator action table has the wrong shape".into()));
    }
    let (da, dh) = (a.dim(), acting.dim());
    let mono = |sp: &crate::linspace::BasedSpace, i: usize| -> Vec<u32> {
        match sp.label(i) {
            BasisIndex::Mono(e) => e.clone(),
            _ => unreachable!("presented algebras carry monomial labels"),
        }
    };
    // acting basis: (prefix, last generator)
    let hsplit: Vec<Option<(usize, usize)>> = (0..dh)
        .map(|h| {
            let e = mono(acting.space(), h);
            e.iter().rposition(|&x| x > 0).map(|j| {
                let mut p = e.clone();
                p[j] -= 1;
                (acting.space().index_of(&BasisIndex::Mono(p)).unwrap(), j)
            })
        })
        .collect();
    let mut order: Vec<usize> = (0..da).collect();
    order.sort_by_key(|&i| mono(a.space(), i).iter().sum::<u32>());
    let mut table: Vec<Vec<Option<Vector>>> = vec![vec![None; da]; dh];
    let missing = |what: &str| Error::Unsupported(format!("action cannot be extended: {what}"));
    for &m in &order {
        let e = mono(a.space(), m);
        let total: u32 = e.iter().sum();
        if total == 0 {
            for (h, row) in table.iter_mut().enumerate() {
                row[m] = Some(a.unit().scale(&counit(h)));
            }
            continue;
        }
        let t = e.iter().rposition(|&x| x > 0).unwrap();
        if total == 1 {
            for h in 0..dh {
                let v = match hsplit[h] {
                    None => Vector::unit(m, a.one()),
                    Some((hp, x)) => {
                        let mut acc = Acc::new();
                        for (mm, c) in gen_on_gen[x][t].iter() {
                            let col = table[hp][*mm].as_ref().ok_or_else(|| missing("generator images"))?;
                            acc.add_vec(col, c);
                        }
                        acc.finish()
                    }
                };
                table[h][m] = Some(v);
            }
            continue;
        }
        let mut pe = e.clone();
        pe[t] -= 1;
        let mp = a.space().index_of(&BasisIndex::Mono(pe)).unwrap();
        let mut te = vec![0; e.len()];
        te[t] = 1;
        let ti = a.space().index_of(&BasisIndex::Mono(te)).unwrap();
        let cols: Result<Vec<Vector>> = par::map_range(dh, |h| {
            let mut acc = Acc::new();
            for (idx, c) in delta.col(h).unwrap().iter() {
                let (h1, h2) = (idx / dh, idx % dh);
                for (k2, c2) in swap(h2, mp).iter() {
                    let (m2, h2b) = (k2 / dh, k2 % dh);
                    let x = table[h1][m2].as_ref().ok_or_else(|| missing("factor not yet known"))?;
                    let y = table[h2b][ti].as_ref().ok_or_else(|| missing("generator image"))?;
                    acc.add_vec(&a.mul(x, y)?, &c.mul(c2));
                }
            }
            Ok(acc.finish())
        })
        .into_iter()
        .collect();
        for (h, v) in cols?.into_iter().enumerate() {
            table[h][m] = Some(v);
        }
    }
    let sp = a.space();
    Ok(table
        .into_iter()
        .map(|row| LinearMap::new(sp.legs(), sp.legs(), row.into_iter().map(|c| Some(c.unwrap())).collect()))
        .collect())
}

/// `K`-module structure on a presented algebra making it a `K`-module
/// algebra, from the action of `K`'s generators on the algebra's generators.
pub fn k_module_algebra(k: &QTHopf, alg: &BasedAlgebra, gen_on_gen: &[Vec<Vector>]) -> Result<KModule> {
    let dh = k.dim();
    let flip = |h2: usize, m: usize| Vector::unit(m * dh + h2, k.field().one());
    let rho = extend_action(alg, &k.alg, &k.delta, &|h| k.counit(h), gen_on_gen, &flip)?;
    Ok(KModule { space: alg.space().clone(), rho: Arc::new(rho) })
}

/// A left `H`-module algebra in `Mod_K`.
#[derive(Clone)]
pub struct ModuleAlgebra {
    pub h: Arc<BraidedHopf>,
    pub alg: BasedAlgebra,
    pub kmod: KModule,
    /// `a : H ⊗ A → A`.
    pub action: LinearMap,
}

impl std::fmt::Debug for ModuleAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleAlgebra({} over {})", self.alg.name(), self.h.name)
    }
}

impl ModuleAlgebra {
    pub fn new(h: Arc<BraidedHopf>, alg: BasedAlgebra, kmod: KModule, action: LinearMap) -> ModuleAlgebra {
        ModuleAlgebra { h, alg, kmod, action }
    }

    /// Extend generator data: `k_on_gens[i][j]` is the image of generator
    /// `j` of `A` under generator `i` of `K`, and `h_on_gens` likewise for
    /// `H`. The `H`-action uses `h·(ab) = m(a ⊗ a)(Id ⊗ Ψ_{H,A} ⊗ Id)(Δh ⊗ a ⊗ b)`.
    pub fn from_generators(
        h: Arc<BraidedHopf>,
        alg: BasedAlgebra,
        k_on_gens: &[Vec<Vector>],
        h_on_gens: &[Vec<Vector>],
    ) -> Result<ModuleAlgebra> {
        let kmod = k_module_algebra(&h.k, &alg, k_on_gens)?;
        let dh = h.dim();
        let da = alg.dim();
        let swap = |h2: usize, m: usize| {
            // Ψ_{H,A}(e_h2 ⊗ e_m) lives on A ⊗ H
            let v = braid_pair(&h.k, &h.kmod, &kmod, h2, m);
            debug_assert!(v.iter().all(|(i, _)| *i < da * dh));
            v
        };
        let hh = h.clone();
        let rho = extend_action(&alg, &h.alg, &h.delta, &|i| hh.counit(i), h_on_gens, &swap)?;
        let action = action_from_rho(&h.alg, &alg, &rho);
        Ok(ModuleAlgebra { h, alg, kmod, action })
    }

    /// `h·a` for vectors.
    pub fn act(&self, h: &Vector, a: &Vector) -> Result<Vector> {
        let mut legs = self.h.alg.space().legs();
        legs.extend(self.alg.space().legs());
        let t = Tensor::outer(
            &Tensor::new(self.h.alg.space().legs(), h.clone()),
            &Tensor::new(self.alg.space().legs(), a.clone()),
        );
        self.action.apply(&t.v)
    }

    /// Module, `K`-compatibility and module-algebra axioms on every basis
    /// element of `H` and every defined basis product of `A`.
    pub fn check(&self) -> Result<()> {
        let h = &self.h;
        let k = &h.k;
        let name = format!("{} over {}", self.alg.name(), h.name);
        self.kmod.check(k)?;
        check_k_module_algebra(k, &self.alg, &self.kmod)?;
        let ha = tensor_module(k, &h.kmod, &self.kmod)?;
        check_k_linear(k, &self.action, &ha, &self.kmod, &format!("action on {name}"))?;
        let (dh, da) = (h.dim(), self.alg.dim());
        let one = self.alg.one();
        let uh = unit_index(&h.alg);
        // unit and associativity of the action
        let bad = par::find_first(dh * da, |k2| {
            let (x, v) = (k2 / da, k2 % da);
            let ev = Vector::unit(v, one.clone());
            if x == uh && self.act(&Vector::unit(uh, one.clone()), &ev).ok()? != ev {
                return Some("1·a = a");
            }
            let xv = self.act(&Vector::unit(x, one.clone()), &ev).ok()?;
            for y in 0..dh {
                let Some(yx) = h.alg.mul_basis(y, x) else { continue };
                let l = self.act(&yx, &ev).ok()?;
                let r = self.act(&Vector::unit(y, one.clone()), &xv).ok()?;
                if l != r {
                    return Some("(yx)·a = y·(x·a)");
                }
            }
            None
        });
        if let Some(what) = bad {
            return Err(fail(&name, what, "module axiom"));
        }
        for x in 0..dh {
            let r = self.act(&Vector::unit(x, one.clone()), self.alg.unit())?;
            if r != self.alg.unit().scale(&h.counit(x)) {
                return Err(fail(&name, "h·1 = ε(h)1", &h.alg.space().render(x)));
            }
        }
        let pairs: Vec<(usize, usize)> = (0..da * da)
            .map(|p| (p / da, p % da))
            .filter(|&(a, b)| self.alg.mul_basis(a, b).is_some())
            .collect();
        let bad = par::find_first(pairs.len() * dh, |idx| {
            let (a, b) = pairs[idx / dh];
            let x = idx % dh;
            let ab = self.alg.mul_basis(a, b).unwrap();
            let lhs = self.act(&Vector::unit(x, one.clone()), &ab).ok()?;
            let rhs = self.leibniz(x, a, b).ok()?;
            (lhs != rhs).then_some((x, a, b))
        });
        if let Some((x, a, b)) = bad {
            return Err(fail(
                &name,
                "h·(ab) = (h₁·a)(h₂·b) braided",
                &format!(
                    "{} on {} · {}",
                    h.alg.space().render(x),
                    self.alg.space().render(a),
                    self.alg.space().render(b)
                ),
            ));
        }
        Ok(())
    }

    /// `m(a ⊗ a)(Id ⊗ Ψ_{H,A} ⊗ Id)(Δh ⊗ e_a ⊗ e_b)`.
    fn leibniz(&self, x: usize, a: usize, b: usize) -> Result<Vector> {
        let h = &self.h;
        let (dh, da) = (h.dim(), self.alg.dim());
        let one = self.alg.one();
        let mut acc = Acc::new();
        for (idx, c) in h.delta.col(x).unwrap().iter() {
            let (h1, h2) = (idx / dh, idx % dh);
            for (k2, c2) in braid_pair(&h.k, &h.kmod, &self.kmod, h2, a).iter() {
                let (a2, h2b) = (k2 / dh, k2 % dh);
                let l = self.act(&Vector::unit(h1, one.clone()), &Vector::unit(a2, one.clone()))?;
                let r = self.act(&Vector::unit(h2b, one.clone()), &Vector::unit(b, one.clone()))?;
                acc.add_vec(&self.alg.mul(&l, &r)?, &c.mul(c2));
            }
        }
        let _ = da;
        Ok(acc.finish())
    }
}

/// `a : H ⊗ A → A` from the matrices `ρ(h)`.
pub(crate) fn action_from_rho(h: &BasedAlgebra, a: &BasedAlgebra, rho: &[LinearMap]) -> LinearMap {
    let da = a.dim();
    let cols = (0..h.dim() * da).map(|c| rho[c / da].col(c % da).cloned()).collect();
    let mut dom = h.space().legs();
    dom.extend(a.space().legs());
    LinearMap::new(dom, a.space().legs(), cols)
}

/// `k[u]` truncated at `bound`, with `g·u = q^{2w} u` and `x·u = γ` for the
/// nilpotent line `H = k[x]/(x^n)`.
pub fn polynomial_module_algebra(
    h: Arc<BraidedHopf>,
    q: &Scalar,
    weight: i64,
    gamma: &Scalar,
    bound: u32,
) -> Result<ModuleAlgebra> {
    let f = q.field();
    let p = Presentation::new(f).generator("u", PowerRule::Free, 1).truncate_at(bound);
    let alg = BasedAlgebra::from_presentation("k[u]", p)?;
    let u = alg.mono("u")?;
    let one = unit_index(&alg);
    let kg = vec![vec![Vector::single(u, q.pow(2 * weight))]];
    let hp = h.alg.presentation().ok_or_else(|| Error::InvalidArgument("H must be presented".into()))?;
    let hg: Vec<Vec<Vector>> = (0..hp.ngens()).map(|_| vec![Vector::single(one, gamma.clone())]).collect();
    ModuleAlgebra::from_generators(h, alg, &kg, &hg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{field_new, q_integer, q_root};

    fn setup(n: u32) -> (Scalar, Arc<QTHopf>) {
        let m = if n % 2 == 1 { n } else { 2 * n };
        let f = field_new(m).unwrap();
        let q = q_root(f, n).unwrap();
        let k = Arc::new(QTHopf::cyclic(&q, n).unwrap());
        (q, k)
    }

    #[test]
    fn closed_forms_match_generator_extension() {
        for n in [3u32, 4, 5] {
            let (q, k) = setup(n);
            for w in [-1i64, 1] {
                let h = BraidedHopf::nilpotent_line(k.clone(), &q, n, w, "x").unwrap();
                h.check().unwrap();
                let d = h.dim();
                let x = h.alg.mono("x").unwrap();
                let u = unit_index(&h.alg);
                let f = q.field();
                let ext = BraidedHopf::from_generators(
                    "x",
                    k.clone(),
                    h.alg.clone(),
                    h.kmod.clone(),
                    &[Vector::from_pairs([(x * d + u, f.one()), (u * d + x, f.one())])],
                    &[f.zero()],
                    &[Vector::single(x, f.int(-1))],
                )
                .unwrap();
                assert_eq!(ext.delta, h.delta);
                assert_eq!(ext.s, h.s);
            }
        }
    }

    #[test]
    fn low_degree_coproduct() {
        let (q, k) = setup(3);
        let h = BraidedHopf::nilpotent_line(k, &q, 3, -1, "x").unwrap();
        let d = h.dim();
        let a = &h.alg;
        let (one, x, x2) = (a.mono("1").unwrap(), a.mono("x").unwrap(), a.mono("x^2").unwrap());
        let q2 = q.pow(2);
        let expect = Vector::from_pairs([
            (x2 * d + one, q.field().one()),
            (x * d + x, q.field().one().add(&q2)),
            (one * d + x2, q.field().one()),
        ]);
        assert_eq!(h.delta.col(x2).unwrap(), &expect);
        assert_eq!(h.s.col(x2).unwrap(), &Vector::single(x2, q2));
    }

    #[test]
    fn corrupted_coproduct_is_rejected() {
        let (q, k) = setup(3);
        let mut h = BraidedHopf::nilpotent_line(k, &q, 3, -1, "x").unwrap();
        let d = h.dim();
        let x2 = h.alg.mono("x^2").unwrap();
        let x = h.alg.mono("x").unwrap();
        let mut cols: Vec<Option<Vector>> = h.delta.cols().to_vec();
        // drop the q² from the middle coefficient
        cols[x2] = Some(cols[x2].clone().unwrap().add_scaled(&Vector::unit(x * d + x, q.field().one()), &q.pow(2).neg()));
        h.delta = LinearMap::new(h.delta.domain().to_vec(), h.delta.codomain().to_vec(), cols);
        assert!(matches!(h.check(), Err(Error::AxiomFailure { .. })));
    }

    #[test]
    fn polynomial_action_on_powers() {
        let (q, k) = setup(5);
        let f = q.field();
        let h = Arc::new(BraidedHopf::nilpotent_line(k, &q, 5, -1, "x").unwrap());
        let gamma = f.int(3);
        let a = polynomial_module_algebra(h.clone(), &q, 1, &gamma, 8).unwrap();
        a.check().unwrap();
        let x = h.alg.vec("x").unwrap();
        // Ψ(x ⊗ u) = q⁻² u ⊗ x, so the q-integers are in q⁻²
        let qm2 = q.pow(-2);
        for j in 1..=8u32 {
            let uj = a.alg.vec(&format!("u^{j}")).unwrap();
            let lower = if j == 1 { a.alg.vec("1").unwrap() } else { a.alg.vec(&format!("u^{}", j - 1)).unwrap() };
            let expect = lower.scale(&gamma.mul(&q_integer(j as i64, &qm2)));
            assert_eq!(a.act(&x, &uj).unwrap(), expect, "x·u^{j}");
        }
    }

    #[test]
    fn weyl_hopf_algebra() {
        let f = field_new(1).unwrap();
        let k = Arc::new(QTHopf::trivial(f).unwrap());
        let h = BraidedHopf::polynomial(k, &["x1", "x2"], 4).unwrap();
        assert_eq!(h.dim(), 15);
        h.check().unwrap();
    }
}
