//! Quasi-triangular Hopf algebras `K`, their modules and the braiding
//! `Ψ_{V,W}(v ⊗ w) = R⁽²⁾·w ⊗ R⁽¹⁾·v` on `Mod_K`.

use crate::algebra::{BasedAlgebra, PowerRule, Presentation};
use crate::error::{Error, Result};
use crate::linspace::{inverse, legs_dim, tensor_space, Acc, BasedSpace, LinearMap, Tensor, Vector};
use crate::par;
use crate::scalars::{CycField, Scalar};
use std::sync::Arc;

/// Product on `A ⊗ B` twisted by `Ψ_{B,A}`: `(m_A ⊗ m_B)(Id ⊗ Ψ ⊗ Id)`.
/// `psi_ba` maps legs `[B, A]` to `[A, B]`.
pub fn twisted_tensor_mul(
    a: &BasedAlgebra,
    b: &BasedAlgebra,
    psi_ba: &LinearMap,
    x: &Vector,
    y: &Vector,
) -> Result<Vector> {
    let mut legs = a.space().legs();
    legs.extend(b.space().legs());
    let la = a.space().legs().len();
    let t = Tensor::outer(&Tensor::new(legs.clone(), x.clone()), &Tensor::new(legs, y.clone()));
    let t = t.apply(la, psi_ba)?;
    let t = mul_at(&t, 0, a)?;
    let t = mul_at(&t, la, b)?;
    Ok(t.v)
}

/// Apply the multiplication of `alg` to the two copies of its legs starting
/// at `pos`, without materialising the full product matrix.
pub fn mul_at(t: &Tensor, pos: usize, alg: &BasedAlgebra) -> Result<Tensor> {
    let k = alg.space().legs().len();
    let d = alg.dim();
    if pos + 2 * k > t.legs.len()
        || legs_dim(&t.legs[pos..pos + k]) != d
        || legs_dim(&t.legs[pos + k..pos + 2 * k]) != d
    {
        return Err(Error::DimensionMismatch(format!("cannot multiply {} at leg {pos}", alg.name())));
    }
    let post = legs_dim(&t.legs[pos + 2 * k..]);
    let mut acc = Acc::new();
    for (idx, c) in t.v.iter() {
        let p = idx % post;
        let rest = idx / post;
        let j = rest % d;
        let i = (rest / d) % d;
        let pre = rest / (d * d);
        let prod = alg.mul_basis(i, j).ok_or_else(|| {
            Error::Overflow(format!("{} * {}", alg.space().render(i), alg.space().render(j)))
        })?;
        for (r, x) in prod.iter() {
            acc.add((pre * d + r) * post + p, &x.mul(c));
        }
    }
    let mut legs = t.legs[..pos].to_vec();
    legs.extend(alg.space().legs());
    legs.extend(t.legs[pos + 2 * k..].iter().cloned());
    Ok(Tensor::new(legs, acc.finish()))
}

/// Flip `V ⊗ W → W ⊗ V`.
pub fn flip(field: &'static CycField, v: &BasedSpace, w: &BasedSpace) -> LinearMap {
    let (dv, dw) = (v.dim(), w.dim());
    let cols = (0..dv * dw)
        .map(|k| {
            let (i, j) = (k / dw, k % dw);
            Some(Vector::unit(j * dv + i, field.one()))
        })
        .collect();
    let mut dom = v.legs();
    dom.extend(w.legs());
    let mut cod = w.legs();
    cod.extend(v.legs());
    LinearMap::new(dom, cod, cols)
}

/// Images of every basis monomial under the extension of generator images
/// along `M = M' g`: `image(M) = combine(image(M'), image(g))`.
pub fn extend_on_monomials<F>(
    alg: &BasedAlgebra,
    gen_images: &[Vector],
    unit_image: Vector,
    combine: F,
) -> Result<Vec<Vector>>
where
    F: Fn(&Vector, &Vector) -> Result<Vector>,
{
    let p = alg
        .presentation()
        .ok_or_else(|| Error::InvalidArgument("extension needs a presented algebra".into()))?;
    if gen_images.len() != p.ngens() {
        return Err(Error::DimensionMismatch("one image per generator expected".into()));
    }
    let mut out: Vec<Option<Vector>> = vec![None; alg.dim()];
    // graded order guarantees M' precedes M
    for i in 0..alg.dim() {
        let crate::linspace::BasisIndex::Mono(e) = alg.space().label(i) else {
            return Err(Error::Inconsistent("presented algebra without monomial labels".into()));
        };
        let Some(j) = e.iter().rposition(|&k| k > 0) else {
            out[i] = Some(unit_image.clone());
            continue;
        };
        let mut prev = e.clone();
        prev[j] -= 1;
        let pi = alg
            .space()
            .index_of(&crate::linspace::BasisIndex::Mono(prev))
            .ok_or_else(|| Error::Inconsistent("prefix monomial missing".into()))?;
        let base = out[pi].clone().ok_or_else(|| Error::Inconsistent("basis not graded".into()))?;
        out[i] = Some(combine(&base, &gen_images[j])?);
    }
    Ok(out.into_iter().map(|v| v.unwrap()).collect())
}

/// A finite-dimensional (or truncated) ordinary Hopf algebra.
#[derive(Clone)]
pub struct HopfAlgebra {
    pub name: String,
    pub alg: BasedAlgebra,
    /// `Δ : H → H ⊗ H`.
    pub delta: LinearMap,
    /// `ε : H → k`.
    pub eps: LinearMap,
    pub s: LinearMap,
    pub s_inv: LinearMap,
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hopf({}, dim {})", self.name, self.alg.dim())
    }
}

impl HopfAlgebra {
    /// Build from generator data; `Δ` and `ε` extend multiplicatively and
    /// `S` anti-multiplicatively.
    pub fn from_generators(
        name: &str,
        alg: BasedAlgebra,
        delta_gens: &[Vector],
        eps_gens: &[Scalar],
        s_gens: &[Vector],
    ) -> Result<HopfAlgebra> {
        let f = alg.field();
        let sp = alg.space().clone();
        let fl = flip(f, &sp, &sp);
        let unit2 = Tensor::outer(
            &Tensor::new(sp.legs(), alg.unit().clone()),
            &Tensor::new(sp.legs(), alg.unit().clone()),
        )
        .v;
        let delta_imgs = extend_on_monomials(&alg, delta_gens, unit2, |x, y| {
            twisted_tensor_mul(&alg, &alg, &fl, x, y)
        })?;
        let eps_imgs = extend_counit(&alg, eps_gens)?;
        let s_imgs = extend_on_monomials(&alg, s_gens, alg.unit().clone(), |x, y| alg.mul(y, x))?;
        let mut two = sp.legs();
        two.extend(sp.legs());
        let delta = LinearMap::new(sp.legs(), two, delta_imgs.into_iter().map(Some).collect());
        let eps = LinearMap::new(sp.legs(), vec![], eps_imgs.into_iter().map(Some).collect());
        let s = LinearMap::new(sp.legs(), sp.legs(), s_imgs.into_iter().map(Some).collect());
        let s_inv = inverse(&s, &f.one())?;
        Ok(HopfAlgebra { name: name.into(), alg, delta, eps, s, s_inv })
    }

    pub fn field(&self) -> &'static CycField {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn space(&self) -> &BasedSpace {
        self.alg.space()
    }

    /// `ε(e_k)`.
    pub fn counit(&self, k: usize) -> Scalar {
        self.eps.col(k).and_then(|c| c.get(0).cloned()).unwrap_or(self.field().zero())
    }

    /// Hopf axioms with the flip as braiding.
    pub fn check(&self) -> Result<()> {
        let sp = self.space().clone();
        let fl = flip(self.field(), &sp, &sp);
        check_hopf_maps(&self.name, &self.alg, &self.delta, &self.eps, &self.s, &self.s_inv, &fl)
    }
}

/// `ε` extended multiplicatively from generator values.
pub(crate) fn extend_counit(alg: &BasedAlgebra, eps_gens: &[Scalar]) -> Result<Vec<Vector>> {
    let f = alg.field();
    let eps_vecs: Vec<Vector> = eps_gens.iter().map(|c| Vector::single(0, c.clone())).collect();
    extend_on_monomials(alg, &eps_vecs, Vector::unit(0, f.one()), |x, y| {
        let a = x.get(0).cloned().unwrap_or(f.zero());
        let b = y.get(0).cloned().unwrap_or(f.zero());
        Ok(Vector::single(0, a.mul(&b)))
    })
}

/// A finite-dimensional quasi-triangular Hopf algebra.
#[derive(Clone)]
pub struct QTHopf {
    pub hopf: HopfAlgebra,
    /// `R ∈ K ⊗ K` with index `a * dim K + b` for `e_a ⊗ e_b`.
    pub r: Vector,
    pub r_inv: Vector,
}

impl std::ops::Deref for QTHopf {
    type Target = HopfAlgebra;

    fn deref(&self) -> &HopfAlgebra {
        &self.hopf
    }
}

impl std::fmt::Debug for QTHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QTHopf({}, dim {})", self.name, self.alg.dim())
    }
}

impl QTHopf {
    /// `R⁻¹` is solved for when not given.
    pub fn new(hopf: HopfAlgebra, r: Vector, r_inv: Option<Vector>) -> Result<QTHopf> {
        let alg = &hopf.alg;
        let f = alg.field();
        let sp = alg.space().clone();
        let d = alg.dim();
        let r_inv = match r_inv {
            Some(ri) => ri,
            None => {
                // solve R X = 1 ⊗ 1 via left multiplication by R on K ⊗ K
                let fl = flip(f, &sp, &sp);
                let sq = tensor_space(&sp, &sp);
                let lr = LinearMap::from_fn(sq.legs(), sq.legs(), |k| {
                    twisted_tensor_mul(alg, alg, &fl, &r, &Vector::unit(k, f.one())).map(Some)
                })?;
                let inv = inverse(&lr, &f.one()).map_err(|_| Error::AxiomFailure {
                    check: "invertibility of R".into(),
                    witness: "left multiplication by R is singular".into(),
                })?;
                let u = unit_index(alg);
                inv.col(u * d + u).cloned().unwrap()
            }
        };
        Ok(QTHopf { hopf, r, r_inv })
    }

    /// `k Z_n` with `R = (1/n) Σ q^{-2ij} g^i ⊗ g^j` and
    /// `R⁻¹ = (1/n) Σ q^{-2ij} g^{-i} ⊗ g^j`.
    pub fn cyclic(q: &Scalar, n: u32) -> Result<QTHopf> {
        let f = q.field();
        let p = Presentation::new(f).generator("g", PowerRule::Cyclic(n), 0);
        let alg = BasedAlgebra::from_presentation("kZ", p)?;
        let g = alg.mono("g")?;
        let gi = |i: i64| -> usize {
            let e = i.rem_euclid(n as i64) as u32;
            alg.space().index_of(&crate::linspace::BasisIndex::Mono(vec![e])).unwrap()
        };
        let d = alg.dim();
        let inv_n = f.rat(1, n as i64);
        let mut r = Acc::new();
        let mut r_inv = Acc::new();
        for i in 0..n as i64 {
            for j in 0..n as i64 {
                let c = q.pow(-2 * i * j).mul(&inv_n);
                r.add(gi(i) * d + gi(j), &c);
                r_inv.add(gi(-i) * d + gi(j), &c);
            }
        }
        let dg = Vector::unit(g * d + g, f.one());
        let sg = Vector::unit(gi(-1), f.one());
        let hopf = HopfAlgebra::from_generators("kZn", alg, &[dg], &[f.one()], &[sg])?;
        QTHopf::new(hopf, r.finish(), Some(r_inv.finish()))
    }

    /// The trivial Hopf algebra `k`; braiding is the flip.
    pub fn trivial(field: &'static CycField) -> Result<QTHopf> {
        let alg = BasedAlgebra::from_presentation("k", Presentation::new(field))?;
        let hopf = HopfAlgebra::from_generators("k", alg, &[], &[], &[])?;
        let one = Vector::unit(0, field.one());
        QTHopf::new(hopf, one.clone(), Some(one))
    }

    /// Sweedler's four-dimensional algebra with the family
    /// `R_ξ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + ξ/2 (x⊗x + x⊗gx + gx⊗gx − gx⊗x)`,
    /// `Δ(g) = g⊗g`, `Δ(x) = x⊗g + 1⊗x`.
    pub fn sweedler(field: &'static CycField, xi: &Scalar) -> Result<QTHopf> {
        let f = field;
        let p = Presentation::new(f)
            .generator("g", PowerRule::Cyclic(2), 0)
            .generator("x", PowerRule::Nilpotent(2), 0)
            .swap("x", "g", vec![(f.int(-1), vec![1, 1])])?;
        let alg = BasedAlgebra::from_presentation("T2", p)?;
        let d = alg.dim();
        let (one, g, x, gx) = (alg.mono("1")?, alg.mono("g")?, alg.mono("x")?, alg.mono("g x")?);
        let t = |a: usize, b: usize| a * d + b;
        let half = f.rat(1, 2);
        let hx = xi.mul(&half);
        let r = Vector::from_pairs([
            (t(one, one), half.clone()),
            (t(one, g), half.clone()),
            (t(g, one), half.clone()),
            (t(g, g), half.neg()),
            (t(x, x), hx.clone()),
            (t(x, gx), hx.clone()),
            (t(gx, gx), hx.clone()),
            (t(gx, x), hx.neg()),
        ]);
        let dg = Vector::unit(t(g, g), f.one());
        let dx = Vector::from_pairs([(t(x, g), f.one()), (t(one, x), f.one())]);
        let sg = Vector::unit(g, f.one());
        let sx = Vector::unit(gx, f.one());
        let hopf = HopfAlgebra::from_generators("T2(-1)", alg, &[dg, dx], &[f.one(), f.zero()], &[sg, sx])?;
        QTHopf::new(hopf, r, None)
    }

    /// Ordinary Hopf axioms of `K` and the quasi-triangular identities
    /// `Δ^op = R Δ R⁻¹`, `(Δ⊗Id)R = R13 R23`, `(Id⊗Δ)R = R13 R12`.
    pub fn check(&self) -> Result<()> {
        let f = self.field();
        let sp = self.space().clone();
        let fl = flip(f, &sp, &sp);
        self.hopf.check()?;
        let d = self.dim();
        let mul2 = |x: &Vector, y: &Vector| twisted_tensor_mul(&self.alg, &self.alg, &fl, x, y);
        let u = unit_index(&self.alg);
        let one2 = Vector::unit(u * d + u, f.one());
        if mul2(&self.r, &self.r_inv)? != one2 || mul2(&self.r_inv, &self.r)? != one2 {
            return Err(fail(&self.name, "R R⁻¹ = 1 ⊗ 1", "R⁻¹ is not inverse to R"));
        }
        for h in 0..d {
            let dh = self.delta.col(h).unwrap();
            let lhs = fl.apply(dh)?;
            let rhs = mul2(&mul2(&self.r, dh)?, &self.r_inv)?;
            if lhs != rhs {
                return Err(fail(&self.name, "Δ^op = R Δ R⁻¹", &self.space().render(h)));
            }
        }
        // leg embeddings of R into K^{⊗3}
        let embed = |pos: (usize, usize)| -> Vector {
            Vector::from_pairs(self.r.iter().map(|(k, c)| {
                let (a, b) = (k / d, k % d);
                let mut idx = [u, u, u];
                idx[pos.0] = a;
                idx[pos.1] = b;
                ((idx[0] * d + idx[1]) * d + idx[2], c.clone())
            }))
        };
        let legs3 = vec![sp.clone(), sp.clone(), sp.clone()];
        let mul3 = |x: &Vector, y: &Vector| -> Result<Vector> {
            let t = Tensor::outer(&Tensor::new(legs3.clone(), x.clone()), &Tensor::new(legs3.clone(), y.clone()));
            // [a0 a1 a2 b0 b1 b2] -> [a0 b0 a1 b1 a2 b2]
            let t = t.apply(1, &flip(f, &tensor_space(&sp, &sp), &sp))?;
            let t = t.apply(3, &flip(f, &sp, &sp))?;
            let t = mul_at(&t, 0, &self.alg)?;
            let t = mul_at(&t, 1, &self.alg)?;
            Ok(mul_at(&t, 2, &self.alg)?.v)
        };
        let (r12, r13, r23) = (embed((0, 1)), embed((0, 2)), embed((1, 2)));
        let rt = Tensor::new(vec![sp.clone(), sp.clone()], self.r.clone());
        let d_left = rt.apply(0, &self.delta)?.v;
        let d_right = rt.apply(1, &self.delta)?.v;
        if d_left != mul3(&r13, &r23)? {
            return Err(fail(&self.name, "(Δ⊗Id)R = R13 R23", "mismatch"));
        }
        if d_right != mul3(&r13, &r12)? {
            return Err(fail(&self.name, "(Id⊗Δ)R = R13 R12", "mismatch"));
        }
        Ok(())
    }

    /// `R` as a list of `(c, a, b)` for `c e_a ⊗ e_b`.
    pub fn r_terms(&self) -> Vec<(Scalar, usize, usize)> {
        let d = self.dim();
        self.r.iter().map(|(k, c)| (c.clone(), k / d, k % d)).collect()
    }

    pub fn r_inv_terms(&self) -> Vec<(Scalar, usize, usize)> {
        let d = self.dim();
        self.r_inv.iter().map(|(k, c)| (c.clone(), k / d, k % d)).collect()
    }
}

/// Basis index of the unit of a presented algebra.
pub(crate) fn unit_index(alg: &BasedAlgebra) -> usize {
    alg.unit().iter().next().map(|(i, _)| *i).expect("unit is nonzero")
}

pub(crate) fn fail(obj: &str, check: &str, witness: &str) -> Error {
    Error::AxiomFailure { check: format!("{check} ({obj})"), witness: witness.to_string() }
}

/// Hopf axioms of an algebra in a braided category with self-braiding
/// `psi : X ⊗ X → X ⊗ X` (the flip for ordinary Hopf algebras).
pub fn check_hopf_maps(
    name: &str,
    alg: &BasedAlgebra,
    delta: &LinearMap,
    eps: &LinearMap,
    s: &LinearMap,
    s_inv: &LinearMap,
    psi: &LinearMap,
) -> Result<()> {
    let f = alg.field();
    let sp = alg.space().clone();
    let d = alg.dim();
    let one = f.one();
    alg.check_unit()?;
    alg.check_associative()?;
    let id = LinearMap::identity(f, vec![sp.clone()]);
    // coassociativity and counit
    let bad = par::find_first(d, |i| {
        let t = Tensor::basis(vec![sp.clone()], i, one.clone());
        let dt = t.apply(0, delta).ok()?;
        let l = dt.apply(0, delta).ok()?;
        let r = dt.apply(1, delta).ok()?;
        if l != r {
            return Some(("coassociativity", i));
        }
        let el = dt.apply(0, eps).ok()?;
        let er = dt.apply(1, eps).ok()?;
        if el.v != t.v || er.v != t.v {
            return Some(("counit", i));
        }
        let sl = mul_at(&dt.apply(0, s).ok()?, 0, alg).ok()?;
        let sr = mul_at(&dt.apply(1, s).ok()?, 0, alg).ok()?;
        let e = eps.col(i).and_then(|c| c.get(0).cloned()).unwrap_or(f.zero());
        let expect = alg.unit().scale(&e);
        if sl.v != expect || sr.v != expect {
            return Some(("antipode", i));
        }
        None
    });
    if let Some((what, i)) = bad {
        return Err(fail(name, what, &sp.render(i)));
    }
    if s.compose(s_inv)? != id || s_inv.compose(s)? != id {
        return Err(fail(name, "S S⁻¹ = Id", "antipode inverse mismatch"));
    }
    let unit_t = Tensor::new(vec![sp.clone()], alg.unit().clone());
    let du = unit_t.apply(0, delta)?;
    if du.v != Tensor::outer(&unit_t, &unit_t).v || unit_t.apply(0, eps)?.v != Vector::unit(0, one.clone()) {
        return Err(fail(name, "Δ(1) = 1⊗1, ε(1) = 1", "unit"));
    }
    // bialgebra law on all defined basis products
    let bad = par::find_first(d * d, |k| {
        let (a, b) = (k / d, k % d);
        let ab = alg.mul_basis(a, b)?;
        let lhs = delta.apply(&ab).ok()?;
        let da = delta.col(a)?;
        let db = delta.col(b)?;
        let rhs = twisted_tensor_mul(alg, alg, psi, da, db).ok()?;
        if lhs != rhs {
            return Some(("Δ(ab) = Δ(a)Δ(b)", k));
        }
        let ea = eps.col(a)?.get(0).cloned().unwrap_or(f.zero());
        let eb = eps.col(b)?.get(0).cloned().unwrap_or(f.zero());
        if eps.apply(&ab).ok()? != Vector::single(0, ea.mul(&eb)) {
            return Some(("ε(ab) = ε(a)ε(b)", k));
        }
        None
    });
    if let Some((what, k)) = bad {
        return Err(fail(name, what, &format!("{} · {}", sp.render(k / d), sp.render(k % d))));
    }
    Ok(())
}

/// Left `K`-module: one matrix per basis element of `K`.
#[derive(Clone, Debug)]
pub struct KModule {
    pub space: BasedSpace,
    pub rho: Arc<Vec<LinearMap>>,
}

impl KModule {
    /// Extend generator actions to all of `K` by composing along monomials.
    pub fn from_generators(k: &QTHopf, space: &BasedSpace, gens: &[LinearMap]) -> Result<KModule> {
        let f = k.field();
        let id = LinearMap::identity(f, vec![space.clone()]);
        let p = k
            .alg
            .presentation()
            .ok_or_else(|| Error::InvalidArgument("K must be presented".into()))?;
        if gens.len() != p.ngens() {
            return Err(Error::DimensionMismatch("one matrix per generator of K".into()));
        }
        let mut rho: Vec<Option<LinearMap>> = vec![None; k.dim()];
        for i in 0..k.dim() {
            let crate::linspace::BasisIndex::Mono(e) = k.space().label(i) else { unreachable!() };
            match e.iter().rposition(|&x| x > 0) {
                None => rho[i] = Some(id.clone()),
                Some(j) => {
                    let mut prev = e.clone();
                    prev[j] -= 1;
                    let pi = k.space().index_of(&crate::linspace::BasisIndex::Mono(prev)).unwrap();
                    // (M' g)·v = M'·(g·v)
                    rho[i] = Some(rho[pi].as_ref().unwrap().compose(&gens[j])?);
                }
            }
        }
        let rho: Vec<LinearMap> =
            rho.into_iter().map(|m| m.unwrap().relegged(space.legs(), space.legs())).collect();
        Ok(KModule { space: space.clone(), rho: Arc::new(rho) })
    }

    /// `k` acting through the counit.
    pub fn trivial(k: &QTHopf, space: &BasedSpace) -> KModule {
        let f = k.field();
        let id = LinearMap::identity(f, space.legs());
        let rho = (0..k.dim()).map(|i| id.scale(&k.counit(i))).collect();
        KModule { space: space.clone(), rho: Arc::new(rho) }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `a : K ⊗ V → V`.
    pub fn action_map(&self, k: &QTHopf) -> LinearMap {
        let dv = self.dim();
        let cols = (0..k.dim() * dv).map(|c| self.rho[c / dv].col(c % dv).cloned()).collect();
        let mut dom = k.space().legs();
        dom.extend(self.space.legs());
        LinearMap::new(dom, self.space.legs(), cols)
    }

    /// Module axioms: `ρ(ab) = ρ(a)ρ(b)` and `ρ(1) = Id`.
    pub fn check(&self, k: &QTHopf) -> Result<()> {
        let d = k.dim();
        for a in 0..d {
            for b in 0..d {
                let ab = k.alg.mul_basis(a, b).unwrap();
                let mut lhs = LinearMap::zero(self.space.legs(), self.space.legs());
                for (i, c) in ab.iter() {
                    lhs = lhs.add(&self.rho[*i].scale(c))?;
                }
                if lhs != self.rho[a].compose(&self.rho[b])? {
                    return Err(fail(self.space.name(), "K-action is multiplicative", &format!(
                        "{} · {}",
                        k.space().render(a),
                        k.space().render(b)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `V ⊗ W` with `K` acting through `Δ`.
pub fn tensor_module(k: &QTHopf, v: &KModule, w: &KModule) -> Result<KModule> {
    let space = tensor_space(&v.space, &w.space);
    let dk = k.dim();
    let rho: Result<Vec<LinearMap>> = (0..dk)
        .map(|h| {
            let dh = k.delta.col(h).unwrap();
            let mut acc = LinearMap::zero(space.legs(), space.legs());
            for (idx, c) in dh.iter() {
                let t = v.rho[idx / dk].tensor(&w.rho[idx % dk]).scale(c);
                acc = acc.add(&t)?;
            }
            Ok(acc)
        })
        .collect();
    Ok(KModule { space, rho: Arc::new(rho?) })
}

/// `Ψ_{V,W} : V ⊗ W → W ⊗ V`.
pub fn braiding(k: &QTHopf, v: &KModule, w: &KModule) -> Result<LinearMap> {
    let dw = w.dim();
    let mut dom = v.space.legs();
    dom.extend(w.space.legs());
    let mut cod = w.space.legs();
    cod.extend(v.space.legs());
    LinearMap::from_fn(dom, cod, |col| Ok(Some(braid_pair(k, v, w, col / dw, col % dw))))
}

/// `Ψ⁻¹_{V,W} : W ⊗ V → V ⊗ W`, `w ⊗ v ↦ R⁻¹⁽¹⁾·v ⊗ R⁻¹⁽²⁾·w`.
pub fn braiding_inv(k: &QTHopf, v: &KModule, w: &KModule) -> Result<LinearMap> {
    let dv = v.dim();
    let mut dom = w.space.legs();
    dom.extend(v.space.legs());
    let mut cod = v.space.legs();
    cod.extend(w.space.legs());
    LinearMap::from_fn(dom, cod, |col| Ok(Some(braid_inv_pair(k, v, w, col / dv, col % dv))))
}

/// `Ψ_{V,W}(e_i ⊗ e_j)` as a vector on `W ⊗ V`.
pub fn braid_pair(k: &QTHopf, v: &KModule, w: &KModule, i: usize, j: usize) -> Vector {
    let dk = k.dim();
    let dv = v.dim();
    let mut acc = Acc::new();
    for (idx, c) in k.r.iter() {
        let av = v.rho[idx / dk].col(i).unwrap();
        let bw = w.rho[idx % dk].col(j).unwrap();
        for (y, cy) in bw.iter() {
            for (x, cx) in av.iter() {
                acc.add(y * dv + x, &c.mul(cx).mul(cy));
            }
        }
    }
    acc.finish()
}

/// `Ψ⁻¹_{V,W}(e_j ⊗ e_i)` (with `e_j ∈ W`, `e_i ∈ V`) as a vector on `V ⊗ W`.
pub fn braid_inv_pair(k: &QTHopf, v: &KModule, w: &KModule, j: usize, i: usize) -> Vector {
    let dk = k.dim();
    let dw = w.dim();
    let mut acc = Acc::new();
    for (idx, c) in k.r_inv.iter() {
        let av = v.rho[idx / dk].col(i).unwrap();
        let bw = w.rho[idx % dk].col(j).unwrap();
        for (x, cx) in av.iter() {
            for (y, cy) in bw.iter() {
                acc.add(x * dw + y, &c.mul(cx).mul(cy));
            }
        }
    }
    acc.finish()
}

/// Apply `Ψ_{V,W}` to the legs of `t` starting at `pos` (which must hold
/// `V`'s legs followed by `W`'s), computing images pair by pair.
pub fn braid_at(t: &Tensor, pos: usize, k: &QTHopf, v: &KModule, w: &KModule) -> Result<Tensor> {
    lazy_swap(t, pos, v, w, |i, j| braid_pair(k, v, w, i, j))
}

/// Apply `Ψ⁻¹_{V,W}` to legs `[W, V]` of `t` starting at `pos`.
pub fn braid_inv_at(t: &Tensor, pos: usize, k: &QTHopf, v: &KModule, w: &KModule) -> Result<Tensor> {
    lazy_swap(t, pos, w, v, |j, i| braid_inv_pair(k, v, w, j, i))
}

/// Replace legs `[X, Y]` at `pos` by `[Y, X]` using `pair(i, j) ∈ Y ⊗ X`.
fn lazy_swap<F>(t: &Tensor, pos: usize, x: &KModule, y: &KModule, pair: F) -> Result<Tensor>
where
    F: Fn(usize, usize) -> Vector,
{
    let (lx, ly) = (x.space.legs().len(), y.space.legs().len());
    let (dx, dy) = (x.dim(), y.dim());
    if pos + lx + ly > t.legs.len()
        || legs_dim(&t.legs[pos..pos + lx]) != dx
        || legs_dim(&t.legs[pos + lx..pos + lx + ly]) != dy
    {
        return Err(Error::DimensionMismatch(format!(
            "cannot braid {} and {} at leg {pos}",
            x.space.name(),
            y.space.name()
        )));
    }
    let post = legs_dim(&t.legs[pos + lx + ly..]);
    let mut memo: std::collections::HashMap<(usize, usize), Vector> = std::collections::HashMap::new();
    let mut acc = Acc::new();
    for (idx, c) in t.v.iter() {
        let p = idx % post;
        let rest = idx / post;
        let j = rest % dy;
        let i = (rest / dy) % dx;
        let pre = rest / (dx * dy);
        let img = memo.entry((i, j)).or_insert_with(|| pair(i, j));
        for (r, s) in img.iter() {
            acc.add((pre * dx * dy + r) * post + p, &s.mul(c));
        }
    }
    let mut legs = t.legs[..pos].to_vec();
    legs.extend(t.legs[pos + lx..pos + lx + ly].iter().cloned());
    legs.extend(t.legs[pos..pos + lx].iter().cloned());
    legs.extend(t.legs[pos + lx + ly..].iter().cloned());
    Ok(Tensor::new(legs, acc.finish()))
}

/// Braiding for `k Z_n` when `g` acts diagonally by `q^{2|v|}`:
/// `Ψ(v ⊗ w) = q^{2|v||w|} w ⊗ v`. Errors if the action is not diagonal
/// with eigenvalues in `q^{2Z}`.
pub fn braiding_by_weights(q: &Scalar, n: u32, v: &KModule, w: &KModule, g: usize) -> Result<LinearMap> {
    let wv = weights(q, n, v, g)?;
    let ww = weights(q, n, w, g)?;
    let f = q.field();
    let (dv, dw) = (v.dim(), w.dim());
    let mut dom = v.space.legs();
    dom.extend(w.space.legs());
    let mut cod = w.space.legs();
    cod.extend(v.space.legs());
    let cols = (0..dv * dw)
        .map(|col| {
            let (i, j) = (col / dw, col % dw);
            Some(Vector::single(j * dv + i, q.pow(2 * wv[i] * ww[j])))
        })
        .collect();
    let _ = f;
    Ok(LinearMap::new(dom, cod, cols))
}

/// Integer weights `|v|` with `g·e_i = q^{2|e_i|} e_i`, reduced mod `n`.
pub fn weights(q: &Scalar, n: u32, v: &KModule, g: usize) -> Result<Vec<i64>> {
    let q2 = q.mul(q);
    (0..v.dim())
        .map(|i| {
            let col = v.rho[g].col(i).unwrap();
            let lam = match col.entries() {
                [(r, c)] if *r == i => c.clone(),
                _ => return Err(Error::Unsupported("g does not act diagonally".into())),
            };
            (0..n as i64)
                .find(|&e| q2.pow(e) == lam)
                .ok_or_else(|| Error::Unsupported("eigenvalue outside q^{2Z}".into()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{field_new, q_root};

    #[test]
    fn cyclic_is_quasitriangular() {
        for n in [3u32, 4, 5] {
            let m = if n % 2 == 1 { n } else { 2 * n };
            let f = field_new(m).unwrap();
            let q = q_root(f, n).unwrap();
            let k = QTHopf::cyclic(&q, n).unwrap();
            k.check().unwrap();
        }
    }

    #[test]
    fn sweedler_is_quasitriangular() {
        let f = field_new(1).unwrap();
        for xi in [0, 1, 2, -3] {
            let k = QTHopf::sweedler(f, &f.int(xi)).unwrap();
            k.check().unwrap();
        }
    }

    #[test]
    fn weight_braiding_matches_r_matrix() {
        let f = field_new(5).unwrap();
        let q = q_root(f, 5).unwrap();
        let k = QTHopf::cyclic(&q, 5).unwrap();
        let g = k.alg.mono("g").unwrap();
        let sp = BasedSpace::anonymous("V", 3);
        // weights 0, 1, 3
        let gm = LinearMap::between(
            &sp,
            &sp,
            vec![
                Vector::unit(0, f.one()),
                Vector::unit(1, q.pow(2)),
                Vector::unit(2, q.pow(6)),
            ],
        );
        let v = KModule::from_generators(&k, &sp, &[gm]).unwrap();
        v.check(&k).unwrap();
        let psi = braiding(&k, &v, &v).unwrap();
        assert_eq!(psi, braiding_by_weights(&q, 5, &v, &v, g).unwrap());
        let inv = braiding_inv(&k, &v, &v).unwrap();
        assert_eq!(psi.compose(&inv).unwrap(), LinearMap::identity(f, psi.domain().to_vec()));
    }
}
