//! Coinduced Yetter-Drinfeld algebras over the nilpotent line: relations,
//! structure maps, YD braiding and its inverse, tensor products, adjoint
//! action.

use bcenter::braid::KModule;
use bcenter::constructions::{
    adjoint_algebra, h_module_tensor, rb_algebra, rb_module, tau, unit_module_algebra, HModule,
};
use bcenter::linspace::{LinearMap, Vector};
use bcenter::scenarios::NilpotentSetup;
use bcenter::yd::{yd_braiding, yd_braiding_inv, yd_tensor, YDAlgebra, YDModule};
use bcenter::Error;

fn setup(gamma: i64, degree: u32) -> (NilpotentSetup, YDAlgebra) {
    let s = NilpotentSetup::canonical(3, gamma, degree).unwrap();
    let r = rb_algebra(&s.a).unwrap();
    (s, r)
}

/// `x^i ⊗ u^j` in `H ⊗ A`.
fn yu(s: &NilpotentSetup, i: u32, j: u32) -> usize {
    let hi = s.h.alg.mono(&format!("x^{i}")).unwrap();
    let aj = s.a.alg.mono(&format!("u^{j}")).unwrap();
    hi * s.a.alg.dim() + aj
}

fn e(s: &NilpotentSetup, i: u32, j: u32) -> Vector {
    Vector::unit(yu(s, i, j), s.q.field().one())
}

#[test]
fn coinduced_algebra_relations() {
    let (s, r) = setup(1, 5);
    let q = &s.q;
    let (y, u) = (e(&s, 1, 0), e(&s, 0, 1));
    assert!(r.alg.pow(&y, 3).unwrap().is_zero());
    let yu_ = r.alg.mul(&y, &u).unwrap();
    assert_eq!(yu_, e(&s, 1, 1));
    assert_eq!(r.alg.mul(&u, &y).unwrap(), yu_.scale(&q.pow(-2)));
    r.alg.check_associative().unwrap();
    r.alg.check_unit().unwrap();
}

#[test]
fn coinduced_action_and_coaction() {
    let (s, r) = setup(1, 5);
    let f = s.q.field();
    let q = &s.q;
    let x = s.h.alg.vec("x").unwrap();
    let g = s.k.alg.mono("g").unwrap();
    let (y, u) = (e(&s, 1, 0), e(&s, 0, 1));
    // a(x ⊗ u) = (1 − q⁻⁴) yu + γ
    let expect = e(&s, 1, 1).scale(&f.one().sub(&q.pow(-4))).add(&e(&s, 0, 0).scale(&s.gamma));
    assert_eq!(r.yd.act(&x, &u).unwrap(), expect);
    // a(x ⊗ y) = (1 − q²) y²
    assert_eq!(r.yd.act(&x, &y).unwrap(), e(&s, 2, 0).scale(&f.one().sub(&q.pow(2))));
    // K-weights
    assert_eq!(r.yd.kmod.rho[g].apply(&y).unwrap(), y.scale(&q.pow(-2)));
    assert_eq!(r.yd.kmod.rho[g].apply(&u).unwrap(), u.scale(&q.pow(2)));
    // δ(y) = 1 ⊗ y + x ⊗ 1, δ(u) = 1 ⊗ u
    let d = r.alg.dim();
    let one_h = s.h.alg.mono("1").unwrap();
    let x_h = s.h.alg.mono("x").unwrap();
    let dy = Vector::from_pairs([(one_h * d + yu(&s, 1, 0), f.one()), (x_h * d + yu(&s, 0, 0), f.one())]);
    assert_eq!(r.yd.coact(&y).unwrap(), dy);
    assert_eq!(r.yd.coact(&u).unwrap(), Vector::unit(one_h * d + yu(&s, 0, 1), f.one()));
}

#[test]
fn coinduced_algebra_is_yetter_drinfeld() {
    for gamma in [0, 1] {
        let (_, r) = setup(gamma, 4);
        r.check().unwrap();
    }
}

#[test]
fn corrupted_coaction_is_rejected() {
    let (s, r) = setup(1, 3);
    let mut m = r.yd.clone();
    let y = yu(&s, 1, 0);
    let mut cols = m.coaction.cols().to_vec();
    // drop the x ⊗ 1 term of δ(y)
    let d = r.alg.dim();
    let x_h = s.h.alg.mono("x").unwrap();
    let bad = cols[y].clone().unwrap().sub(&Vector::unit(x_h * d + yu(&s, 0, 0), s.q.field().one()));
    cols[y] = Some(bad);
    m.coaction = LinearMap::new(m.coaction.domain().to_vec(), m.coaction.codomain().to_vec(), cols);
    assert!(matches!(m.check(), Err(Error::AxiomFailure { .. })));
}

#[test]
fn yd_braiding_on_generators() {
    let (s, r) = setup(1, 4);
    let f = s.q.field();
    let q = &s.q;
    let psi = yd_braiding(&r.yd, &r.yd).unwrap();
    let d = r.alg.dim();
    let t = |a: usize, b: usize| a * d + b;
    // Ψ(y ⊗ u) = q⁻² u ⊗ y + a(x ⊗ u) ⊗ 1 = q⁻² u⊗y + ((1 − q⁻⁴) yu + γ) ⊗ 1
    let c = f.one().sub(&q.pow(-4));
    let expect = Vector::from_pairs([
        (t(yu(&s, 0, 1), yu(&s, 1, 0)), q.pow(-2)),
        (t(yu(&s, 1, 1), yu(&s, 0, 0)), c),
        (t(yu(&s, 0, 0), yu(&s, 0, 0)), s.gamma.clone()),
    ]);
    assert_eq!(psi.col(t(yu(&s, 1, 0), yu(&s, 0, 1))).unwrap(), &expect);
    // Ψ(u ⊗ u) = q² u ⊗ u
    let uu = t(yu(&s, 0, 1), yu(&s, 0, 1));
    assert_eq!(psi.col(uu).unwrap(), &Vector::unit(uu, q.pow(2)));
}

#[test]
fn yd_braiding_is_invertible() {
    let (_, r) = setup(1, 3);
    let psi = yd_braiding(&r.yd, &r.yd).unwrap();
    let inv = yd_braiding_inv(&r.yd, &r.yd).unwrap();
    let id = LinearMap::identity(r.alg.field(), psi.domain().to_vec());
    assert_eq!(inv.compose(&psi).unwrap(), id);
    assert_eq!(psi.compose(&inv).unwrap(), id);
    let ad = adjoint_algebra(&r.yd.h).unwrap();
    let p2 = yd_braiding(&r.yd, &ad.yd).unwrap();
    let i2 = yd_braiding_inv(&r.yd, &ad.yd).unwrap();
    assert_eq!(i2.compose(&p2).unwrap(), LinearMap::identity(r.alg.field(), p2.domain().to_vec()));
    assert_eq!(p2.compose(&i2).unwrap(), LinearMap::identity(r.alg.field(), p2.codomain().to_vec()));
}

fn trivial_yd(s: &NilpotentSetup) -> YDModule {
    let sp = bcenter::linspace::BasedSpace::anonymous("I", 1);
    YDModule::trivial(s.h.clone(), KModule::trivial(&s.k, &sp))
}

#[test]
fn yd_tensor_products_and_hexagons() {
    let (s, r) = setup(1, 2);
    let ad = adjoint_algebra(&s.h).unwrap();
    let triv = trivial_yd(&s);
    let objs = [&ad.yd, &r.yd, &triv];
    let rr = yd_tensor(&r.yd, &r.yd).unwrap();
    rr.check().unwrap();
    let f = s.q.field();
    for u in objs {
        for v in objs {
            for w in objs {
                // Ψ_{U,V⊗W} = (Id ⊗ Ψ_{U,W})(Ψ_{U,V} ⊗ Id)
                let vw = yd_tensor(v, w).unwrap();
                let lhs = yd_braiding(u, &vw).unwrap();
                let id_w = LinearMap::identity(f, w.space().legs());
                let id_v = LinearMap::identity(f, v.space().legs());
                let id_u = LinearMap::identity(f, u.space().legs());
                let a = yd_braiding(u, v).unwrap().tensor(&id_w);
                let b = id_v.tensor(&yd_braiding(u, w).unwrap());
                assert_eq!(lhs, b.compose(&a).unwrap(), "hexagon Ψ_(U,V⊗W)");
                // Ψ_{U⊗V,W} = (Ψ_{U,W} ⊗ Id)(Id ⊗ Ψ_{V,W})
                let uv = yd_tensor(u, v).unwrap();
                let lhs = yd_braiding(&uv, w).unwrap();
                let a = id_u.tensor(&yd_braiding(v, w).unwrap());
                let b = yd_braiding(u, w).unwrap().tensor(&id_v);
                assert_eq!(lhs, b.compose(&a).unwrap(), "hexagon Ψ_(U⊗V,W)");
            }
        }
    }
}

#[test]
fn tensor_with_trivial_is_identity() {
    let (s, r) = setup(1, 3);
    let t = yd_tensor(&r.yd, &trivial_yd(&s)).unwrap();
    assert_eq!(t.action.cols(), r.yd.action.cols());
    assert_eq!(t.coaction.cols(), r.yd.coaction.cols());
}

#[test]
fn trivial_coaction_gives_category_braiding() {
    let (s, r) = setup(1, 3);
    let triv = trivial_yd(&s);
    let psi = yd_braiding(&triv, &r.yd).unwrap();
    let b = bcenter::braid::braiding(&s.k, &triv.kmod, &r.yd.kmod).unwrap();
    assert_eq!(psi, b);
}

#[test]
fn adjoint_algebra_is_braided_commutative() {
    for n in [3u32, 5] {
        let s = NilpotentSetup::canonical(n, 1, 2).unwrap();
        let ad = adjoint_algebra(&s.h).unwrap();
        ad.check().unwrap();
        assert_eq!(ad.braided_commutative_witness().unwrap(), None);
        let d = ad.alg.dim();
        let one = s.q.field().one();
        for a in 0..d {
            for b in 0..d {
                let (ea, eb) = (Vector::unit(a, one.clone()), Vector::unit(b, one.clone()));
                let ab = ad.alg.mul(&ea, &eb).unwrap();
                assert_eq!(ad.mul_braided_inv(&ea, &eb).unwrap(), ab);
            }
        }
        // x acts by zero on 1 and 1 acts as the identity
        let x = s.h.alg.vec("x").unwrap();
        assert!(ad.yd.act(&x, ad.alg.unit()).unwrap().is_zero());
        for b in 0..d {
            let eb = Vector::unit(b, one.clone());
            assert_eq!(ad.yd.act(ad.alg.unit(), &eb).unwrap(), eb);
        }
    }
}

#[test]
fn adjoint_equals_coinduced_unit() {
    let s = NilpotentSetup::canonical(3, 1, 2).unwrap();
    let ad = adjoint_algebra(&s.h).unwrap();
    let k = unit_module_algebra(&s.h).unwrap();
    let r = rb_algebra(&k).unwrap();
    // H ⊗ k has the same index set as H
    assert_eq!(r.alg.dim(), ad.alg.dim());
    assert_eq!(r.yd.action.cols(), ad.yd.action.cols());
    assert_eq!(r.yd.coaction.cols(), ad.yd.coaction.cols());
    for a in 0..r.alg.dim() {
        for b in 0..r.alg.dim() {
            assert_eq!(r.alg.mul_basis(a, b), ad.alg.mul_basis(a, b));
        }
    }
}

#[test]
fn tau_is_a_yd_map_with_associativity() {
    let s = NilpotentSetup::canonical(3, 1, 2).unwrap();
    let v = HModule::from(&s.a);
    let w = HModule::from(&unit_module_algebra(&s.h).unwrap());
    let f = s.q.field();
    let (rv, rw) = (rb_module(&v).unwrap(), rb_module(&w).unwrap());
    let vw = h_module_tensor(&v, &w).unwrap();
    let rvw = rb_module(&vw).unwrap();
    let t = tau(&v, &w).unwrap();
    let src = yd_tensor(&rv, &rw).unwrap();
    // action: τ a = a (Id ⊗ τ)
    let l = t.compose(&src.action.relegged(src.action.domain().to_vec(), t.domain().to_vec())).unwrap();
    let r = rvw.action.compose(&LinearMap::identity(f, s.h.alg.space().legs()).tensor(&t)).unwrap();
    assert_eq!(l.cols(), r.cols());
    // coaction: δ τ = (Id ⊗ τ) δ
    let l = rvw.coaction.compose(&t).unwrap();
    let r = LinearMap::identity(f, s.h.alg.space().legs()).tensor(&t).compose(&src.coaction).unwrap();
    assert_eq!(l.cols(), r.cols());
    // associativity square with a third module
    let u = HModule::from(&s.a);
    let ru = rb_module(&u).unwrap();
    let uv = h_module_tensor(&u, &v).unwrap();
    let t_uv_w = tau(&uv, &w).unwrap();
    let t_u_v = tau(&u, &v).unwrap();
    let t_u_vw = tau(&u, &vw).unwrap();
    let id = |m: &YDModule| LinearMap::identity(f, m.space().legs());
    let left = t_uv_w.compose(&t_u_v.tensor(&id(&rw))).unwrap();
    let right = t_u_vw.compose(&id(&ru).tensor(&t)).unwrap();
    assert_eq!(left.cols(), right.cols());
}
