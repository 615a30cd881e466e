//! Centers of the worked examples: the nilpotent line acting on `k[u]`,
//! Sweedler's algebra, Weyl algebras and adjoint algebras.

use bcenter::braid::QTHopf;
use bcenter::centers::*;
use bcenter::constructions::{adjoint_algebra, coregular_module, heisenberg_double, smash_kmodule, DualPairing};
use bcenter::linspace::{BasedSpace, Subspace, Vector};
use bcenter::scalars::field_new;
use bcenter::scenarios::{NilpotentSetup, SweedlerSetup};
use std::collections::HashMap;
use std::sync::Arc;

/// Re-index `v` from one based space into another by basis labels.
fn relabel(v: &Vector, from: &BasedSpace, to: &BasedSpace) -> Vector {
    let idx: HashMap<String, usize> = (0..to.dim()).map(|i| (to.render(i), i)).collect();
    v.map_indices(|i| idx[&from.render(i)])
}

fn powers_of_z(s: &NilpotentSetup, c: &CenterResult) -> Vec<Vector> {
    let a = &c.ambient;
    let z = z_closed_form(s, 1).unwrap();
    let mut out = vec![a.unit().clone()];
    let mut p = a.unit().clone();
    while let Ok(next) = a.mul(&p, &z) {
        if a.degree_of(&next) > c.safe_degree {
            break;
        }
        out.push(next.clone());
        p = next;
    }
    out
}

#[test]
fn gamma_zero_center_is_h_tensor_u_to_the_n() {
    for n in [3u32, 5] {
        let s = NilpotentSetup::canonical(n, 0, 2 * n + 2).unwrap();
        let c = b_center(&s.a).unwrap().center;
        assert_eq!(c.window, 2 * n + 1);
        assert_eq!(c.safe_degree, n + 1);
        let expect = Subspace::span(c.ambient.space(), &gamma_zero_center(&s, c.safe_degree).unwrap());
        assert_eq!(c.within(c.safe_degree), expect, "n = {n}");
        assert_eq!(expect.dim(), 2 * n as usize);
        assert!(c.algebra_closed && c.commutative);
        // generators y ⊗ 1 and 1 ⊗ u^n
        let one = s.q.field().one();
        let gens: Vec<Vector> =
            [(1, 0), (0, n)].iter().map(|&(i, j)| Vector::unit(rb_index(&s, i, j).unwrap(), one.clone())).collect();
        assert_eq!(c.generators, gens);
    }
}

#[test]
fn nonzero_gamma_center_is_generated_by_z() {
    for n in [3u32, 5] {
        for g in [1i64, 2] {
            let s = NilpotentSetup::canonical(n, g, 2 * n + 2).unwrap();
            let c = b_center(&s.a).unwrap().center;
            let z = z_closed_form(&s, 1).unwrap();
            assert_eq!(c.generators, vec![z.clone()], "n = {n}, γ = {g}");
            assert_eq!(c.safe_degree, n + 1);
            let pw = powers_of_z(&s, &c);
            assert!(pw.len() >= 3, "at least 1, z, z² fit in the safe window");
            assert_eq!(c.within(c.safe_degree), Subspace::span(c.ambient.space(), &pw), "n = {n}, γ = {g}");
            assert!(c.algebra_closed && c.commutative);
        }
    }
}

#[test]
fn z_ell_is_the_ell_th_power_of_z() {
    for n in [3u32, 5] {
        for g in [1i64, 2] {
            let s = NilpotentSetup::canonical(n, g, 2 * n + 2).unwrap();
            let r = bcenter::constructions::rb_algebra(&s.a).unwrap();
            let z = z_closed_form(&s, 1).unwrap();
            let mut certified = 0;
            for l in 1..=2 * n + 2 {
                // z_ℓ exists while u^{ℓ+n−1} fits; z^ℓ while its products are defined
                let (Ok(zl), Ok(p)) = (z_closed_form(&s, l), r.alg.pow(&z, l)) else { continue };
                assert_eq!(zl, p, "z_{l}, n = {n}, γ = {g}");
                certified += 1;
            }
            assert!(certified >= 3, "n = {n}: only {certified} powers certified");
        }
    }
}

#[test]
fn recurrence_oracle_agrees_with_solver() {
    for n in [3u32, 5] {
        for g in [0i64, 1, 2] {
            let s = NilpotentSetup::canonical(n, g, 2 * n + 2).unwrap();
            let c = b_center(&s.a).unwrap().center;
            let o = recurrence_oracle(n, &s.q, &s.gamma, c.window).unwrap();
            let ov = Subspace::span(c.ambient.space(), &o.to_rb(&s).unwrap());
            assert_eq!(ov, c.subspace(), "n = {n}, γ = {g}");
        }
    }
}

#[test]
fn recurrence_free_indices_for_gamma_zero() {
    let s = NilpotentSetup::canonical(3, 0, 8).unwrap();
    let o = recurrence_oracle(3, &s.q, &s.gamma, 7).unwrap();
    // λ_{i,j} free iff j ≡ 0 mod n
    let mut free: Vec<(u32, u32)> = o
        .basis
        .iter()
        .map(|v| {
            assert_eq!(v.len(), 1);
            let p = v.leading().unwrap().0 as u32;
            (p / 8, p % 8)
        })
        .collect();
    free.sort();
    let expect: Vec<(u32, u32)> = (0..3).flat_map(|i| [0, 3, 6].map(|j| (i, j))).collect();
    assert_eq!(free, expect);
}

#[test]
fn recurrence_without_free_indices_is_zero() {
    // window 0 with γ ≠ 0: only λ_{0,0} survives (the unit)
    let s = NilpotentSetup::canonical(3, 1, 8).unwrap();
    let o = recurrence_oracle(3, &s.q, &s.gamma, 0).unwrap();
    assert_eq!(o.basis, vec![Vector::unit(o.unknown(0, 0), s.q.field().one())]);
}

#[test]
fn yd_structure_of_z() {
    let s = NilpotentSetup::canonical(3, 1, 8).unwrap();
    let bc = b_center(&s.a).unwrap();
    let (rb, c) = (&bc.rb, &bc.center);
    let q = &s.q;
    let z = z_closed_form(&s, 1).unwrap();
    let g = s.k.alg.mono("g").unwrap();
    assert_eq!(rb.yd.kmod.rho[g].apply(&z).unwrap(), z.scale(&q.pow(2)));
    let x = s.h.alg.vec("x").unwrap();
    assert_eq!(rb.yd.act(&x, &z).unwrap(), rb.alg.unit().scale(&s.gamma));
    assert_eq!(rb.yd.coact(&z).unwrap(), z_coaction_closed_form(&s, rb, &z).unwrap());
    // the restricted structure is itself Yetter-Drinfeld
    bc.yd.check().unwrap();
    assert_eq!(bc.yd.dim(), c.dim());
}

#[test]
fn center_yd_structures_pass_checks() {
    for n in [3u32, 5] {
        for g in [0i64, 1] {
            let s = NilpotentSetup::canonical(n, g, 2 * n + 2).unwrap();
            b_center(&s.a).unwrap().yd.check().unwrap();
        }
    }
}

#[test]
fn transport_to_smash_product() {
    for g in [0i64, 1] {
        let s = NilpotentSetup::canonical(3, g, 8).unwrap();
        let c = b_center(&s.a).unwrap().center;
        let r = cross_check_smash(&s.a, &c).unwrap();
        assert!(r.subspaces_equal, "γ = {g}");
        assert!(r.products_match, "γ = {g}");
        assert!(r.pairs_checked > 0);
        assert_eq!(r.window, c.window);
    }
}

#[test]
fn sweedler_center_is_u_squared() {
    let f = field_new(1).unwrap();
    let mut first: Option<CenterResult> = None;
    for xi in 0..3 {
        for g in 0..3 {
            let s = SweedlerSetup::new(&f.int(xi), &f.int(g), 8).unwrap();
            let bc = b_center(&s.a).unwrap();
            let c = &bc.center;
            let u = rb_generators(&s.a).unwrap();
            assert_eq!(u.len(), 1);
            let u2 = c.ambient.mul(&u[0], &u[0]).unwrap();
            let evens: Vec<Vector> = (0..=c.safe_degree / 2).map(|k| c.ambient.pow(&u2, k).unwrap()).collect();
            assert_eq!(c.within(c.safe_degree), Subspace::span(c.ambient.space(), &evens), "ξ = {xi}, γ = {g}");
            assert_eq!(c.generators, vec![u2.clone()]);
            let gi = s.k.alg.mono("g").unwrap();
            let xk = s.k.alg.mono("x").unwrap();
            assert_eq!(bc.rb.yd.kmod.rho[gi].apply(&u2).unwrap(), u2);
            assert!(bc.rb.yd.kmod.rho[xk].apply(&u2).unwrap().is_zero());
            match &first {
                None => first = Some(c.clone()),
                Some(c0) => {
                    assert_eq!(c.basis, c0.basis);
                    assert_eq!(compare_centers(c0, c).unwrap(), Comparison::IsomorphicAsGraded { degree: c.safe_degree });
                }
            }
        }
    }
}

#[test]
fn weyl_centralizer_of_derivations() {
    let f = field_new(1).unwrap();
    let k = Arc::new(QTHopf::trivial(f).unwrap());
    for vars in [1usize, 2] {
        let p = DualPairing::weyl(k.clone(), vars, 8).unwrap();
        let m = coregular_module(&p).unwrap();
        let kb = KBraided { alg: heisenberg_double(&p).unwrap(), k: k.clone(), kmod: smash_kmodule(&m).unwrap() };
        let dh = p.h.dim();
        let hu = p.h.alg.mono("1").unwrap();
        let ds: Vec<Vector> = algebra_generators(&p.dual.alg)
            .unwrap()
            .iter()
            .map(|v| v.map_indices(|i| i * dh + hu))
            .collect();
        let c = centralizer(&kb, &ds, Side::Left).unwrap();
        assert_eq!(c.window, 7);
        let expect: Vec<Vector> = (0..p.dual.dim())
            .filter(|&i| p.dual.alg.degree(i) <= c.safe_degree)
            .map(|i| Vector::unit(i * dh + hu, f.one()))
            .collect();
        assert_eq!(c.within(c.safe_degree), Subspace::span(c.ambient.space(), &expect), "vars = {vars}");
        // the whole window is the derivation subalgebra as well
        let all: Vec<Vector> = (0..p.dual.dim())
            .filter(|&i| p.dual.alg.degree(i) <= c.window)
            .map(|i| Vector::unit(i * dh + hu, f.one()))
            .collect();
        assert_eq!(c.subspace(), Subspace::span(c.ambient.space(), &all));
        assert_eq!(c.generators, ds);
        let r = centralizer(&kb, &ds, Side::Right).unwrap();
        assert_eq!(r.basis, c.basis);
    }
}

#[test]
fn adjoint_algebra_is_its_own_center() {
    for n in [3u32, 5] {
        let s = NilpotentSetup::canonical(n, 1, n + 2).unwrap();
        let ad = adjoint_algebra(&s.h).unwrap();
        ad.check().unwrap();
        let all: Vec<Vector> = (0..ad.alg.dim()).map(|i| Vector::unit(i, ad.alg.one())).collect();
        assert!(commutative_on(&ad, &all).unwrap(), "n = {n}");
        let c = left_center(&ad).unwrap();
        assert_eq!(c.dim(), n as usize);
        assert!(c.commutative);
        let r = right_center(&ad).unwrap();
        assert_eq!(r.basis, c.basis);
    }
}

#[test]
fn trivial_module_algebra_gives_adjoint_center() {
    let s = NilpotentSetup::canonical(3, 1, 5).unwrap();
    let a = bcenter::constructions::unit_module_algebra(&s.h).unwrap();
    let bc = b_center(&a).unwrap();
    assert_eq!(bc.center.dim(), 3);
    assert!(bc.center.commutative);
}

#[test]
fn centralizer_of_unit_is_everything() {
    let s = NilpotentSetup::canonical(3, 1, 5).unwrap();
    let rb = bcenter::constructions::rb_algebra(&s.a).unwrap();
    let c = centralizer(&rb, &[rb.alg.unit().clone()], Side::Left).unwrap();
    assert_eq!(c.dim(), rb.alg.dim());
    assert!(centralizer(&rb, &[], Side::Left).is_err());
}

#[test]
fn morita_signatures_distinguish_gamma() {
    let c0 = b_center(&NilpotentSetup::canonical(3, 0, 6).unwrap().a).unwrap().center;
    let c1 = b_center(&NilpotentSetup::canonical(3, 1, 6).unwrap().a).unwrap().center;
    let Comparison::Distinguishable { degree, left, right, .. } = compare_centers(&c0, &c1).unwrap() else {
        panic!("expected distinguishable centers");
    };
    assert_eq!((degree, left, right), (0, 1, 0));
    let s0 = signature(&c0, 0);
    let s1 = signature(&c1, 0);
    assert_eq!(s0.values().sum::<usize>(), 3);
    assert_eq!(s1.values().sum::<usize>(), 1);
    assert_eq!(compare_centers(&c1, &c1).unwrap(), Comparison::IsomorphicAsGraded { degree: c1.safe_degree });
}

#[test]
fn results_are_stable_under_larger_truncation() {
    let check = |small: &CenterResult, big: &CenterResult| {
        let d = small.safe_degree;
        let lifted: Vec<Vector> =
            small.within(d).basis().iter().map(|v| relabel(v, small.ambient.space(), big.ambient.space())).collect();
        assert_eq!(Subspace::span(big.ambient.space(), &lifted), big.within(d));
    };
    for n in [3u32, 5] {
        for g in [0i64, 1, 2] {
            let d = 2 * n + 2;
            let a = b_center(&NilpotentSetup::canonical(n, g, d).unwrap().a).unwrap().center;
            let b = b_center(&NilpotentSetup::canonical(n, g, d + 2).unwrap().a).unwrap().center;
            check(&a, &b);
        }
    }
    let f = field_new(1).unwrap();
    let a = b_center(&SweedlerSetup::new(&f.int(1), &f.int(2), 8).unwrap().a).unwrap().center;
    let b = b_center(&SweedlerSetup::new(&f.int(1), &f.int(2), 10).unwrap().a).unwrap().center;
    check(&a, &b);
}

#[test]
fn center_json_is_deterministic() {
    let s = NilpotentSetup::canonical(3, 1, 8).unwrap();
    let c = b_center(&s.a).unwrap().center;
    let j1 = serde_json::to_string(&c.to_json(&s.qp.format())).unwrap();
    let c2 = b_center(&NilpotentSetup::canonical(3, 1, 8).unwrap().a).unwrap().center;
    let j2 = serde_json::to_string(&c2.to_json(&s.qp.format())).unwrap();
    assert_eq!(j1, j2);
    let v: serde_json::Value = serde_json::from_str(&j1).unwrap();
    assert_eq!(v["schema"], CENTER_SCHEMA);
    // the serialized generator parses back to z
    let fmt = s.qp.format();
    let sp = c.ambient.space();
    let idx: HashMap<String, usize> = (0..sp.dim()).map(|i| (sp.render(i), i)).collect();
    let parsed = Vector::from_pairs(v["generators"][0]["terms"].as_array().unwrap().iter().map(|t| {
        let (l, x) = (t[0].as_str().unwrap(), t[1].as_str().unwrap());
        (idx[l], fmt.parse(x, s.q.field()).unwrap())
    }));
    assert_eq!(parsed, z_closed_form(&s, 1).unwrap());
}
