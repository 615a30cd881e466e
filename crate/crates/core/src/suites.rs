//! Named pass/fail checks gathered into suites: associativity of finite
//! algebras, quasi-triangularity, Hopf and module-algebra axioms, braiding
//! invertibility and hexagons in `Mod_K` and in the Yetter-Drinfeld
//! category.

use crate::algebra::BasedAlgebra;
use crate::braid::{braiding, braiding_inv, tensor_module, KModule, QTHopf};
use crate::constructions::{
    adjoint_algebra, double_iso_uqsl2, heisenberg_double, rb_algebra, smash_product, uqsl2, Bosonization, DrinfeldDouble,
    DualPairing,
};
use crate::error::Result;
use crate::linspace::{BasedSpace, LinearMap};
use crate::scenarios::{NilpotentSetup, SweedlerSetup};
use crate::yd::{yd_braiding, yd_braiding_inv, yd_tensor, YDModule};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// Passes with `detail` on `Ok`, fails with the error text otherwise.
    pub fn from_result(name: impl Into<String>, r: Result<String>) -> Check {
        match r {
            Ok(d) => Check::new(name, true, d),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn associativity(alg: &BasedAlgebra) -> Check {
    Check::from_result(
        format!("associativity of {}", alg.name()),
        alg.check_associative().map(|n| format!("{n} basis triples, dim {}", alg.dim())),
    )
}

fn same(a: &LinearMap, b: &LinearMap) -> bool {
    a.dom_dim() == b.dom_dim() && (0..a.dom_dim()).all(|j| a.col(j) == b.col(j))
}

/// Braiding operations shared by `Mod_K` and Yetter-Drinfeld modules.
trait BraidedObjects {
    type Obj;
    fn legs(&self, v: &Self::Obj) -> Vec<BasedSpace>;
    fn psi(&self, v: &Self::Obj, w: &Self::Obj) -> Result<LinearMap>;
    fn psi_inv(&self, v: &Self::Obj, w: &Self::Obj) -> Result<LinearMap>;
    fn tensor(&self, v: &Self::Obj, w: &Self::Obj) -> Result<Self::Obj>;
    fn field(&self) -> &'static crate::scalars::CycField;
}

struct ModK<'a>(&'a QTHopf);

impl BraidedObjects for ModK<'_> {
    type Obj = KModule;
    fn legs(&self, v: &KModule) -> Vec<BasedSpace> {
        v.space.legs()
    }
    fn psi(&self, v: &KModule, w: &KModule) -> Result<LinearMap> {
        braiding(self.0, v, w)
    }
    fn psi_inv(&self, v: &KModule, w: &KModule) -> Result<LinearMap> {
        braiding_inv(self.0, v, w)
    }
    fn tensor(&self, v: &KModule, w: &KModule) -> Result<KModule> {
        tensor_module(self.0, v, w)
    }
    fn field(&self) -> &'static crate::scalars::CycField {
        self.0.field()
    }
}

struct YD(&'static crate::scalars::CycField);

impl BraidedObjects for YD {
    type Obj = YDModule;
    fn legs(&self, v: &YDModule) -> Vec<BasedSpace> {
        v.space().legs()
    }
    fn psi(&self, v: &YDModule, w: &YDModule) -> Result<LinearMap> {
        yd_braiding(v, w)
    }
    fn psi_inv(&self, v: &YDModule, w: &YDModule) -> Result<LinearMap> {
        yd_braiding_inv(v, w)
    }
    fn tensor(&self, v: &YDModule, w: &YDModule) -> Result<YDModule> {
        yd_tensor(v, w)
    }
    fn field(&self) -> &'static crate::scalars::CycField {
        self.0
    }
}

fn braid_checks<B: BraidedObjects>(b: &B, what: &str, objs: &[(&str, &B::Obj)]) -> Vec<Check> {
    let f = b.field();
    let id = |legs: Vec<BasedSpace>| LinearMap::identity(f, legs);
    let inverse = || -> Result<String> {
        for (nu, u) in objs {
            for (nv, v) in objs {
                let p = b.psi(u, v)?;
                let pi = b.psi_inv(u, v)?;
                let one_uv = id([b.legs(u), b.legs(v)].concat());
                let one_vu = id([b.legs(v), b.legs(u)].concat());
                if !same(&pi.compose(&p)?, &one_uv) || !same(&p.compose(&pi)?, &one_vu) {
                    return Err(crate::Error::AxiomFailure {
                        check: format!("{what} invertibility"),
                        witness: format!("Ψ on {nu} ⊗ {nv}"),
                    });
                }
            }
        }
        Ok(format!("{} ordered pairs", objs.len() * objs.len()))
    };
    let hexagons = || -> Result<String> {
        for (nu, u) in objs {
            for (nv, v) in objs {
                for (nw, w) in objs {
                    let (iu, iv, iw) = (id(b.legs(u)), id(b.legs(v)), id(b.legs(w)));
                    let lhs = b.psi(u, &b.tensor(v, w)?)?;
                    let rhs = iv.tensor(&b.psi(u, w)?).compose(&b.psi(u, v)?.tensor(&iw))?;
                    let lhs2 = b.psi(&b.tensor(u, v)?, w)?;
                    let rhs2 = b.psi(u, w)?.tensor(&iv).compose(&iu.tensor(&b.psi(v, w)?))?;
                    if !same(&lhs, &rhs) || !same(&lhs2, &rhs2) {
                        return Err(crate::Error::AxiomFailure {
                            check: format!("{what} hexagon"),
                            witness: format!("({nu}, {nv}, {nw})"),
                        });
                    }
                }
            }
        }
        Ok(format!("{} ordered triples, both identities", objs.len().pow(3)))
    };
    vec![
        Check::from_result(format!("{what} invertibility"), inverse()),
        Check::from_result(format!("{what} hexagons"), hexagons()),
    ]
}

pub fn mod_k_braiding(k: &QTHopf, objs: &[(&str, &KModule)]) -> Vec<Check> {
    braid_checks(&ModK(k), "Ψ", objs)
}

pub fn yd_braiding_checks(objs: &[(&str, &YDModule)]) -> Vec<Check> {
    let Some((_, first)) = objs.first() else { return Vec::new() };
    braid_checks(&YD(first.h.alg.field()), "Ψ^YD", objs)
}

fn ok(r: Result<()>) -> Result<String> {
    r.map(|_| String::new())
}

/// Everything built over the nilpotent line for one `(n, q, γ, D)`:
/// associativity of `K`, `H`, the bosonization, the double, `u_q(sl₂)`, the
/// Heisenberg double of `H`, and (where defined) `R_B(A)` and `A ⋊ H`; `R` on `K`, Hopf and module-algebra axioms,
/// YD axioms on the induced objects, and both braidings on small objects.
pub fn nilpotent_suite(s: &NilpotentSetup) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let lambda = s.q.sub(&s.q.pow(-1)).inv()?;
    let boson = Bosonization::new(s.h.clone())?;
    let pairing = DualPairing::nilpotent(s.h.clone(), &s.q, s.n, &lambda)?;
    let double = DrinfeldDouble::new(&pairing)?;
    let uq = uqsl2(&s.q, s.n)?;
    let heis = heisenberg_double(&pairing)?;
    let rb = rb_algebra(&s.a)?;
    let smash = smash_product(&s.a);
    for alg in [&s.k.alg, &s.h.alg, &boson.hopf.alg, &double.hopf.alg, &uq.alg, &heis, &rb.alg, &smash] {
        out.push(associativity(alg));
    }
    out.push(Check::from_result("quasi-triangular structure of K", ok(s.k.check())));
    out.push(Check::from_result("braided Hopf axioms of H", ok(s.h.check())));
    out.push(Check::from_result("Hopf axioms of the bosonization", ok(boson.hopf.check())));
    out.push(Check::from_result("Hopf axioms of the double", ok(double.hopf.check())));
    out.push(Check::from_result("Hopf axioms of u_q(sl2)", ok(uq.check())));
    out.push(Check::from_result("pairing axioms", ok(pairing.check())));
    out.push(Check::from_result("module algebra axioms of A", ok(s.a.check())));
    let iso = double_iso_uqsl2(&double, &uq)?;
    out.push(Check::new("double ≅ u_q(sl2)", iso.is_isomorphism(), format!("rank {}", iso.rank)));
    let ad = adjoint_algebra(&s.h)?;
    out.push(Check::from_result("YD algebra axioms of R_B(A)", ok(rb.check())));
    out.push(Check::from_result("YD algebra axioms of adjoint H", ok(ad.check())));
    out.push(Check::from_result("YD axioms of R_B(A) bosonized", ok(boson.bosonize_yd(&rb.yd)?.check())));
    let commutative = ad.braided_commutative_witness()?;
    out.push(Check::new(
        "adjoint H is braided commutative",
        commutative.is_none(),
        commutative.map_or(String::new(), |(i, j)| format!("fails on basis pair ({i}, {j})")),
    ));
    let triv_space = BasedSpace::anonymous("I", 1);
    let triv = KModule::trivial(&s.k, &triv_space);
    out.extend(mod_k_braiding(&s.k, &[("k", &triv), ("H", &s.h.kmod), ("A", &s.a.kmod), ("R_B(A)", &rb.yd.kmod)]));
    let triv_yd = YDModule::trivial(s.h.clone(), triv);
    out.extend(yd_braiding_checks(&[("k", &triv_yd), ("adjoint H", &ad.yd), ("R_B(A)", &rb.yd)]));
    Ok(out)
}

/// Sweedler's `K` with `R_ξ`: quasi-triangularity, module algebra axioms of
/// `A_γ`, and the braiding of `Mod_K` on `k`, `K`-regular and `A`.
pub fn sweedler_suite(s: &SweedlerSetup) -> Result<Vec<Check>> {
    let mut out = vec![associativity(&s.k.alg)];
    out.push(Check::from_result("quasi-triangular structure of K", ok(s.k.check())));
    out.push(Check::from_result("module algebra axioms of A", ok(s.a.check())));
    let rb = rb_algebra(&s.a)?;
    out.push(Check::from_result("YD algebra axioms of R_B(A)", ok(rb.check())));
    let triv_space = BasedSpace::anonymous("I", 1);
    let triv = KModule::trivial(&s.k, &triv_space);
    out.extend(mod_k_braiding(&s.k, &[("k", &triv), ("A", &s.a.kmod)]));
    Ok(out)
}
