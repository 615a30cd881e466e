//! Smash products, the φ-transport of the coinduced structure, dual
//! pairings and Heisenberg doubles.

use bcenter::braid::QTHopf;
use bcenter::constructions::{
    coregular_module, heisenberg_double, heisenberg_product_formula, phi_maps, smash_product, transported_yd,
    transported_yd_closed_form, DualPairing,
};
use bcenter::linspace::{LinearMap, Vector};
use bcenter::scalars::field_new;
use bcenter::scenarios::NilpotentSetup;
use std::sync::Arc;

fn lambda(s: &NilpotentSetup) -> bcenter::scalars::Scalar {
    s.q.sub(&s.q.pow(-1)).inv().unwrap()
}

#[test]
fn phi_is_invertible_and_fixes_a() {
    let s = NilpotentSetup::canonical(3, 1, 6).unwrap();
    let (phi, phi_inv) = phi_maps(&s.a).unwrap();
    let f = s.q.field();
    assert_eq!(phi_inv.compose(&phi).unwrap(), LinearMap::identity(f, phi.domain().to_vec()));
    assert_eq!(phi.compose(&phi_inv).unwrap(), LinearMap::identity(f, phi_inv.domain().to_vec()));
    let da = s.a.alg.dim();
    let dh = s.h.dim();
    // φ(1 ⊗ a) = a ⊗ 1
    for j in 0..da {
        assert_eq!(phi.col(j).unwrap(), &Vector::unit(j * dh, f.one()));
    }
}

#[test]
fn smash_product_cross_relation() {
    let s = NilpotentSetup::canonical(3, 1, 6).unwrap();
    let sm = smash_product(&s.a);
    sm.check_associative().unwrap();
    sm.check_unit().unwrap();
    let f = s.q.field();
    let dh = s.h.dim();
    let idx = |a: &str, h: &str| s.a.alg.mono(a).unwrap() * dh + s.h.alg.mono(h).unwrap();
    let e = |a: &str, h: &str| Vector::unit(idx(a, h), f.one());
    // (a ⊗ 1)(b ⊗ 1) = ab ⊗ 1
    assert_eq!(sm.mul(&e("u", "1"), &e("u^2", "1")).unwrap(), e("u^3", "1"));
    // (1 ⊗ x)(u ⊗ 1) = γ + q⁻² u ⊗ x
    let lhs = sm.mul(&e("1", "x"), &e("u", "1")).unwrap();
    let expect = e("1", "1").scale(&s.gamma).add(&e("u", "x").scale(&s.q.pow(-2)));
    assert_eq!(lhs, expect);
}

#[test]
fn transported_structure_is_yd_and_matches_closed_form() {
    for gamma in [0, 1] {
        let s = NilpotentSetup::canonical(3, gamma, 4).unwrap();
        let t = transported_yd(&s.a).unwrap();
        t.check().unwrap();
        let c = transported_yd_closed_form(&s.a).unwrap();
        assert_eq!(t.coaction, c.coaction, "coaction, γ = {gamma}");
        assert_eq!(t.action, c.action, "action, γ = {gamma}");
    }
}

#[test]
fn nilpotent_pairing_and_coregular_action() {
    let s = NilpotentSetup::canonical(3, 1, 4).unwrap();
    let lam = lambda(&s);
    let p = DualPairing::nilpotent(s.h.clone(), &s.q, 3, &lam).unwrap();
    p.check().unwrap();
    let m = coregular_module(&p).unwrap();
    m.check().unwrap();
    let x = s.h.alg.vec("x").unwrap();
    let xs = p.dual.alg.vec("x*").unwrap();
    // x·x* = ⟨x, x*⟩ 1
    assert_eq!(m.act(&x, &xs).unwrap(), p.dual.alg.vec("1").unwrap().scale(&lam));
    assert_eq!(m.act(&s.h.alg.vec("1").unwrap(), &xs).unwrap(), xs);
}

#[test]
fn nilpotent_heisenberg_double_matches_formula() {
    let s = NilpotentSetup::canonical(3, 1, 4).unwrap();
    let p = DualPairing::nilpotent(s.h.clone(), &s.q, 3, &lambda(&s)).unwrap();
    let heis = heisenberg_double(&p).unwrap();
    assert_eq!(heis.dim(), 9);
    heis.check_associative().unwrap();
    for a in 0..9 {
        for b in 0..9 {
            let expect = heisenberg_product_formula(&p, a, b).unwrap();
            assert_eq!(heis.mul_basis(a, b).unwrap(), expect, "{a} · {b}");
        }
    }
}

#[test]
fn weyl_pairing_and_commutators() {
    let f = field_new(1).unwrap();
    let k = Arc::new(QTHopf::trivial(f).unwrap());
    for vars in [1usize, 2] {
        let p = DualPairing::weyl(k.clone(), vars, 4).unwrap();
        p.check().unwrap();
        let m = coregular_module(&p).unwrap();
        m.check().unwrap();
        let heis = heisenberg_double(&p).unwrap();
        heis.check_associative().unwrap();
        let dh = p.h.dim();
        let names = |v: usize, base: &str| if vars == 1 { base.to_string() } else { format!("{base}{v}") };
        let e = |d: &str, x: &str| Vector::unit(p.dual.alg.mono(d).unwrap() * dh + p.h.alg.mono(x).unwrap(), f.one());
        for i in 1..=vars {
            for j in 1..=vars {
                let (xi, dj) = (names(i, "x"), names(j, "d"));
                let xd = heis.mul(&e("1", &xi), &e(&dj, "1")).unwrap();
                let dx = heis.mul(&e(&dj, "1"), &e("1", &xi)).unwrap();
                let expect = if i == j { e("1", "1") } else { Vector::zero() };
                assert_eq!(xd.sub(&dx), expect, "[{xi}, {dj}]");
            }
        }
        // generator pairs agree with the closed formula
        let gens: Vec<usize> = std::iter::once(e("1", "1"))
            .chain((1..=vars).map(|i| e("1", &names(i, "x"))))
            .chain((1..=vars).map(|i| e(&names(i, "d"), "1")))
            .map(|v| v.leading().unwrap().0)
            .collect();
        for &a in &gens {
            for &b in &gens {
                assert_eq!(heis.mul_basis(a, b).unwrap(), heisenberg_product_formula(&p, a, b).unwrap());
            }
        }
    }
}
