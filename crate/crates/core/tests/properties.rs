//! Randomized properties: field arithmetic, q-binomials, exact linear
//! algebra, skew-polynomial products, braidings, and centers.

use bcenter::braid::{braiding, braiding_by_weights, braiding_inv, tensor_module, KModule};
use bcenter::centers::{b_center, recurrence_oracle, solve, Braided, Side};
use bcenter::constructions::rb_algebra;
use bcenter::linspace::{kernel_with_one, rank, BasedSpace, LinearMap, Subspace, Vector};
use bcenter::scalars::{field_new, q_binomial, CycField, Rat, Scalar};
use bcenter::scenarios::{NilpotentSetup, SweedlerSetup};
use bcenter::algebra::{BasedAlgebra, PowerRule, Presentation};
use proptest::prelude::*;

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn scalar(f: &'static CycField, c: &[(i64, i64)]) -> Scalar {
    let coeffs = c.iter().take(f.degree()).map(|&(n, d)| Rat::new(n, d)).collect();
    f.from_coeffs(coeffs)
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..20, 1i64..6), 8)
}

fn cols_equal(a: &LinearMap, b: &LinearMap) -> bool {
    a.dom_dim() == b.dom_dim() && (0..a.dom_dim()).all(|j| a.col(j) == b.col(j))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(m in prop::sample::select(CONDUCTORS.to_vec()), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = field_new(m).unwrap();
        let (x, y, z) = (scalar(f, &a), scalar(f, &b), scalar(f, &c));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        } else {
            prop_assert!(x.inv().is_err());
        }
    }

    #[test]
    fn q_binomial_pascal(m in 2i64..=8, i0 in 1i64..8, mm in prop::sample::select(CONDUCTORS.to_vec()), a in coeffs()) {
        let i = 1 + (i0 - 1) % (m - 1);
        let f = field_new(mm).unwrap();
        let t = scalar(f, &a);
        let lhs = q_binomial(m, i, &t).unwrap();
        let rhs = q_binomial(m - 1, i - 1, &t).unwrap().add(&t.pow(i).mul(&q_binomial(m - 1, i, &t).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_and_rank(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-3i64..4, 36)) {
        let f = field_new(3).unwrap();
        let dom = BasedSpace::anonymous("V", cols);
        let cod = BasedSpace::anonymous("W", rows);
        let mut it = entries.into_iter();
        let cs: Vec<Vector> = (0..cols)
            .map(|_| Vector::from_pairs((0..rows).map(|r| (r, f.int(it.next().unwrap())))))
            .collect();
        let map = LinearMap::between(&dom, &cod, cs);
        let ker = kernel_with_one(&map, &f.one()).unwrap();
        for v in &ker {
            prop_assert!(map.apply(v).unwrap().is_zero());
        }
        prop_assert_eq!(ker.len() + rank(&map).unwrap(), cols);
        // the kernel basis is canonical: re-spanning reproduces it
        prop_assert_eq!(Subspace::span(&dom, &ker).basis(), ker);
    }

    #[test]
    fn skew_polynomial_exponent_law(a in 0u32..3, b in 0u32..3, c in 0u32..3, d in 0u32..3) {
        let f = field_new(5).unwrap();
        let q = f.zeta();
        let p = Presentation::new(f)
            .generator("u", PowerRule::Free, 1)
            .generator("y", PowerRule::Free, 1)
            .truncate_at(12)
            .swap("y", "u", vec![(q.clone(), vec![1, 1])])
            .unwrap();
        let alg = BasedAlgebra::from_presentation("skew", p).unwrap();
        let mono = |i: u32, j: u32| alg.vec(&format!("u^{i} y^{j}")).unwrap();
        let lhs = alg.mul(&mono(a, b), &mono(c, d)).unwrap();
        // each of the b·c swaps of y past u contributes one factor q
        prop_assert_eq!(lhs, mono(a + c, b + d).scale(&q.pow((b * c) as i64)));
    }

    #[test]
    fn braidings_invert_and_satisfy_hexagons(fam in 0usize..2, i in 0usize..4, j in 0usize..4, l in 0usize..4) {
        let mods = modules(fam);
        let k = &mods.0;
        let ms = &mods.1;
        let (u, v, w) = (&ms[i], &ms[j], &ms[l]);
        let psi = braiding(k, u, v).unwrap();
        let psi_inv = braiding_inv(k, u, v).unwrap();
        let id = LinearMap::identity(k.field(), [u.space.legs(), v.space.legs()].concat());
        prop_assert!(cols_equal(&psi_inv.compose(&psi).unwrap(), &id));
        let uv = tensor_module(k, u, v).unwrap();
        let lhs = braiding(k, &uv, w).unwrap();
        let idu = LinearMap::identity(k.field(), u.space.legs());
        let idv = LinearMap::identity(k.field(), v.space.legs());
        let rhs = braiding(k, u, w).unwrap().tensor(&idv).compose(&idu.tensor(&braiding(k, v, w).unwrap())).unwrap();
        prop_assert!(cols_equal(&lhs, &rhs));
        let vw = tensor_module(k, v, w).unwrap();
        let lhs = braiding(k, u, &vw).unwrap();
        let idw = LinearMap::identity(k.field(), w.space.legs());
        let rhs = idv.tensor(&braiding(k, u, w).unwrap()).compose(&braiding(k, u, v).unwrap().tensor(&idw)).unwrap();
        prop_assert!(cols_equal(&lhs, &rhs));
    }

    #[test]
    fn weight_shortcut_matches_r_matrix(i in 0usize..4, j in 0usize..4) {
        let (k, ms) = modules(0);
        let g = k.alg.mono("g").unwrap();
        let s = NilpotentSetup::canonical(3, 1, 4).unwrap();
        let by_w = braiding_by_weights(&s.q, 3, &ms[i], &ms[j], g).unwrap();
        prop_assert!(cols_equal(&by_w, &braiding(&k, &ms[i], &ms[j]).unwrap()));
    }
}

/// A quasi-triangular `K` with four of its modules: `k`, `H`, `A`, `R_B(A)`.
fn modules(fam: usize) -> (std::sync::Arc<bcenter::braid::QTHopf>, Vec<KModule>) {
    let (k, h, a) = if fam == 0 {
        let s = NilpotentSetup::canonical(3, 1, 3).unwrap();
        (s.k, s.h, s.a)
    } else {
        let f = field_new(1).unwrap();
        let s = SweedlerSetup::new(&f.int(2), &f.int(1), 3).unwrap();
        (s.k, s.h, s.a)
    };
    let rb = rb_algebra(&a).unwrap();
    let triv = KModule::trivial(&k, &BasedSpace::anonymous("I", 1));
    (k.clone(), vec![triv, h.kmod.clone(), a.kmod.clone(), rb.yd.kmod.clone()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Braided commutativity, the recurrence oracle, and generator
    /// sufficiency: testing against every basis element of degree ≤ t gives
    /// the generator result restricted to the smaller window.
    #[test]
    fn b_center_properties(n in prop::sample::select(vec![3u32, 5]), g in 0i64..4, extra in 0u32..3, t in 1u32..3) {
        let d = n + 2 + extra;
        let s = NilpotentSetup::canonical(n, g, d).unwrap();
        let bc = b_center(&s.a).unwrap();
        let c = &bc.center;
        prop_assert!(c.commutative);
        prop_assert!(c.algebra_closed);
        let o = recurrence_oracle(n, &s.q, &s.gamma, c.window).unwrap();
        prop_assert_eq!(Subspace::span(c.ambient.space(), &o.to_rb(&s).unwrap()), c.subspace());
        let alg = bc.rb.algebra();
        let tests: Vec<Vector> = (0..alg.dim()).filter(|&i| alg.degree(i) <= t).map(|i| Vector::unit(i, alg.one())).collect();
        let full: Vec<Vector> = (0..alg.dim()).map(|i| Vector::unit(i, alg.one())).collect();
        let wide = solve(&bc.rb, &tests, Side::Left, &full).unwrap();
        prop_assert_eq!(wide.subspace(), c.within(d - t));
    }
}
