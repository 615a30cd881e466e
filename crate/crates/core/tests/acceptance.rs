//! Acceptance run: twelve criteria, each checked with exact equality.
//! Prints one `criterion N: PASS|FAIL` line per criterion and exits nonzero
//! if any fails.

use bcenter::braid::QTHopf;
use bcenter::braided_hopf::ModuleAlgebra;
use bcenter::centers::*;
use bcenter::constructions::{
    adjoint_algebra, coregular_module, double_iso_uqsl2, heisenberg_double, rb_algebra, smash_kmodule, uqsl2,
    DrinfeldDouble, DualPairing,
};
use bcenter::linspace::{inverse, Subspace, Vector};
use bcenter::scalars::{field_new, Scalar};
use bcenter::scenarios::{NilpotentSetup, SweedlerSetup};
use bcenter::suites::{nilpotent_suite, sweedler_suite, Check};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn e<T>(r: bcenter::Result<T>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn setup(n: u32, g: i64, d: u32) -> Result<NilpotentSetup, String> {
    e(NilpotentSetup::canonical(n, g, d))
}

fn center(a: &ModuleAlgebra) -> Result<BCenter, String> {
    e(b_center(a))
}

/// 1, z, z², … while the powers stay within the safe degree.
fn powers_of_z(s: &NilpotentSetup, c: &CenterResult) -> Result<Vec<Vector>, String> {
    let z = e(z_closed_form(s, 1))?;
    Ok(powers_within(&c.ambient, &z, c.safe_degree))
}

fn c1_gamma_zero() -> Outcome {
    let mut times = Vec::new();
    for n in [3u32, 5] {
        let t = Instant::now();
        let s = setup(n, 0, 2 * n + 2)?;
        let c = center(&s.a)?.center;
        let expect = Subspace::span(c.ambient.space(), &e(gamma_zero_center(&s, c.safe_degree))?);
        ensure(c.within(c.safe_degree) == expect, || format!("n = {n}: basis differs from y^i ⊗ u^(kn)"))?;
        times.push(format!("n = {n}: dim {} in {:.1?}", expect.dim(), t.elapsed()));
    }
    Ok(times.join(", "))
}

fn c2_gamma_nonzero() -> Outcome {
    let mut certified = 0;
    for n in [3u32, 5] {
        for g in [1i64, 2] {
            let s = setup(n, g, 2 * n + 2)?;
            let c = center(&s.a)?.center;
            let pw = powers_of_z(&s, &c)?;
            ensure(pw.len() >= 2, || format!("n = {n}, γ = {g}: z not within the safe degree"))?;
            ensure(c.within(c.safe_degree) == Subspace::span(c.ambient.space(), &pw), || {
                format!("n = {n}, γ = {g}: center is not span of powers of z")
            })?;
            let rb = e(rb_algebra(&s.a))?;
            let z = e(z_closed_form(&s, 1))?;
            for l in 1..=2 * n + 2 {
                let (Ok(zl), Ok(p)) = (z_closed_form(&s, l), rb.alg.pow(&z, l)) else { continue };
                ensure(zl == p, || format!("n = {n}, γ = {g}: z_{l} ≠ z^{l}"))?;
                certified += 1;
            }
        }
    }
    Ok(format!("4 configurations, {certified} powers z_ℓ = z^ℓ certified"))
}

fn c3_oracle() -> Outcome {
    let mut count = 0;
    for n in [3u32, 5] {
        for g in [0i64, 1, 2] {
            let s = setup(n, g, 2 * n + 2)?;
            let c = center(&s.a)?.center;
            let o = e(recurrence_oracle(n, &s.q, &s.gamma, c.window))?;
            let ov = Subspace::span(c.ambient.space(), &e(o.to_rb(&s))?);
            ensure(ov == c.subspace(), || format!("n = {n}, γ = {g}: oracle and solver differ"))?;
            count += 1;
        }
    }
    Ok(format!("{count} configurations"))
}

fn c4_yd_of_z() -> Outcome {
    let s = setup(3, 1, 8)?;
    let bc = center(&s.a)?;
    let rb = &bc.rb;
    let z = e(z_closed_form(&s, 1))?;
    let g = e(s.k.alg.mono("g"))?;
    ensure(e(rb.yd.kmod.rho[g].apply(&z))? == z.scale(&s.q.pow(2)), || "g · z ≠ q² z".into())?;
    let x = e(s.h.alg.vec("x"))?;
    ensure(e(rb.yd.act(&x, &z))? == rb.alg.unit().scale(&s.gamma), || "x · z ≠ γ".into())?;
    ensure(e(rb.yd.coact(&z))? == e(z_coaction_closed_form(&s, rb, &z))?, || "coaction of z differs".into())?;
    e(bc.yd.check())?;
    Ok("n = 3, γ = 1".into())
}

fn c5_double() -> Outcome {
    let mut notes = Vec::new();
    for n in [3u32, 5] {
        let t = Instant::now();
        let s = setup(n, 1, 2 * n + 2)?;
        let q = &s.q;
        let lambda: Scalar = e(q.sub(&q.pow(-1)).inv())?;
        let p = e(DualPairing::nilpotent(s.h.clone(), q, n, &lambda))?;
        let d = e(DrinfeldDouble::new(&p))?;
        e(d.hopf.check())?;
        let uq = e(uqsl2(q, n))?;
        let iso = e(double_iso_uqsl2(&d, &uq))?;
        ensure(iso.is_isomorphism() && iso.rank == (n * n * n) as usize, || {
            format!("n = {n}: π not an isomorphism (rank {})", iso.rank)
        })?;
        let bc = center(&s.a)?;
        let m = e(d.module(&bc.rb.yd))?;
        e(m.check())?;
        let pinv = e(inverse(&iso.map, &q.field().one()))?;
        let z = e(z_closed_form(&s, 1))?;
        let z2 = e(bc.rb.alg.mul(&z, &z))?;
        let act = |g: &str| -> Result<Vector, String> { e(m.act(&e(pinv.apply(&e(uq.alg.vec(g))?))?, &z)) };
        ensure(act("e")? == z2.scale(&q.mul(&e(s.gamma.inv())?).neg()), || format!("n = {n}: e · z"))?;
        ensure(act("f")? == bc.rb.alg.unit().scale(&s.gamma), || format!("n = {n}: f · z"))?;
        ensure(act("k")? == z.scale(&q.pow(2)), || format!("n = {n}: k · z"))?;
        notes.push(format!("n = {n}: rank {} in {:.1?}", iso.rank, t.elapsed()));
    }
    Ok(notes.join(", "))
}

fn c6_smash() -> Outcome {
    for g in [0i64, 1] {
        let s = setup(3, g, 8)?;
        let c = center(&s.a)?.center;
        let r = e(cross_check_smash(&s.a, &c))?;
        ensure(r.subspaces_equal, || format!("γ = {g}: subspaces differ"))?;
        ensure(r.products_match && r.pairs_checked > 0, || format!("γ = {g}: products differ"))?;
    }
    Ok("n = 3, γ ∈ {0, 1}".into())
}

fn c7_sweedler() -> Outcome {
    let f = e(field_new(1))?;
    let mut first: Option<CenterResult> = None;
    for xi in 0..3 {
        for g in 0..3 {
            let s = e(SweedlerSetup::new(&f.int(xi), &f.int(g), 8))?;
            let bc = center(&s.a)?;
            let c = &bc.center;
            let u = e(rb_generators(&s.a))?;
            let u2 = e(c.ambient.mul(&u[0], &u[0]))?;
            let evens: Vec<Vector> =
                (0..=c.safe_degree / 2).map(|k| c.ambient.pow(&u2, k)).collect::<bcenter::Result<_>>().map_err(|x| x.to_string())?;
            ensure(c.within(c.safe_degree) == Subspace::span(c.ambient.space(), &evens), || {
                format!("ξ = {xi}, γ = {g}: center is not k[u²]")
            })?;
            let gi = e(s.k.alg.mono("g"))?;
            let xk = e(s.k.alg.mono("x"))?;
            ensure(e(bc.rb.yd.kmod.rho[gi].apply(&u2))? == u2, || "g · u² ≠ u²".into())?;
            ensure(e(bc.rb.yd.kmod.rho[xk].apply(&u2))?.is_zero(), || "x · u² ≠ 0".into())?;
            match &first {
                None => first = Some(c.clone()),
                Some(c0) => ensure(c0.basis == c.basis && c0.window == c.window, || {
                    format!("ξ = {xi}, γ = {g}: result differs from ξ = 0, γ = 0")
                })?,
            }
        }
    }
    Ok("nine parameter pairs, identical".into())
}

fn weyl_centralizer(vars: usize, bound: u32) -> Result<(CenterResult, Vec<Vector>, Vec<Vector>), String> {
    let f = e(field_new(1))?;
    let k = Arc::new(e(QTHopf::trivial(f))?);
    let p = e(DualPairing::weyl(k.clone(), vars, bound))?;
    let m = e(coregular_module(&p))?;
    let kb = KBraided { alg: e(heisenberg_double(&p))?, k, kmod: e(smash_kmodule(&m))? };
    let dh = p.h.dim();
    let hu = e(p.h.alg.mono("1"))?;
    let ds: Vec<Vector> = e(algebra_generators(&p.dual.alg))?.iter().map(|v| v.map_indices(|i| i * dh + hu)).collect();
    let c = e(centralizer(&kb, &ds, Side::Left))?;
    let sub: Vec<Vector> = (0..p.dual.dim())
        .filter(|&i| p.dual.alg.degree(i) <= c.window)
        .map(|i| Vector::unit(i * dh + hu, f.one()))
        .collect();
    Ok((c, ds, sub))
}

fn c8_weyl() -> Outcome {
    for vars in [1usize, 2] {
        let (c, ds, sub) = weyl_centralizer(vars, 8)?;
        ensure(c.subspace() == Subspace::span(c.ambient.space(), &sub), || {
            format!("{vars} variables: centralizer is not the ∂-subalgebra")
        })?;
        ensure(c.generators == ds, || format!("{vars} variables: generators differ"))?;
    }
    Ok("1 and 2 variables, D = 8".into())
}

fn c9_adjoint() -> Outcome {
    for n in [3u32, 5] {
        let s = setup(n, 1, 2)?;
        let ad = e(adjoint_algebra(&s.h))?;
        e(ad.check())?;
        let d = ad.alg.dim();
        let one = ad.alg.one();
        for a in 0..d {
            for b in 0..d {
                let (ea, eb) = (Vector::unit(a, one.clone()), Vector::unit(b, one.clone()));
                let ab = e(ad.alg.mul(&ea, &eb))?;
                ensure(e(ad.mul_braided(&ea, &eb))? == ab, || format!("n = {n}: mΨ ≠ m on ({a}, {b})"))?;
                ensure(e(ad.mul_braided_inv(&ea, &eb))? == ab, || format!("n = {n}: mΨ⁻¹ ≠ m on ({a}, {b})"))?;
            }
        }
    }
    Ok("n ∈ {3, 5}, all basis pairs".into())
}

fn c10_compare() -> Outcome {
    let c0 = center(&setup(3, 0, 8)?.a)?.center;
    let c1 = center(&setup(3, 1, 8)?.a)?.center;
    match e(compare_centers(&c0, &c1))? {
        Comparison::Distinguishable { degree, left, right, .. } => {
            Ok(format!("distinguishable at degree {degree} ({left} vs {right})"))
        }
        other => Err(format!("expected distinguishable, got {other:?}")),
    }
}

fn c11_suites() -> Outcome {
    let mut checks: Vec<Check> = Vec::new();
    let s = setup(3, 1, 5)?;
    checks.extend(e(nilpotent_suite(&s))?);
    let f = e(field_new(1))?;
    for xi in 0..3 {
        let sw = e(SweedlerSetup::new(&f.int(xi), &f.int(1), 8))?;
        checks.extend(e(sweedler_suite(&sw))?);
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} checks", checks.len()))
}

fn c12_stability() -> Outcome {
    let mut count = 0;
    let mut agree = |a: &CenterResult, b: &CenterResult, what: String| -> Result<(), String> {
        count += 1;
        ensure(restriction_agrees(a, b), || format!("{what}: D and D + 2 disagree"))
    };
    for n in [3u32, 5] {
        for g in [0i64, 1, 2] {
            let d = 2 * n + 2;
            let a = center(&setup(n, g, d)?.a)?.center;
            let b = center(&setup(n, g, d + 2)?.a)?.center;
            agree(&a, &b, format!("n = {n}, γ = {g}"))?;
        }
    }
    let f = e(field_new(1))?;
    for xi in 0..3 {
        for g in 0..3 {
            let a = center(&e(SweedlerSetup::new(&f.int(xi), &f.int(g), 8))?.a)?.center;
            let b = center(&e(SweedlerSetup::new(&f.int(xi), &f.int(g), 10))?.a)?.center;
            agree(&a, &b, format!("Sweedler ξ = {xi}, γ = {g}"))?;
        }
    }
    for vars in [1usize, 2] {
        let (a, _, _) = weyl_centralizer(vars, 8)?;
        let (b, _, _) = weyl_centralizer(vars, 10)?;
        agree(&a, &b, format!("Weyl, {vars} variables"))?;
    }
    Ok(format!("{count} results"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("center for γ = 0 is H ⊗ k[u^n]", c1_gamma_zero),
        ("center for γ ≠ 0 is spanned by powers of z", c2_gamma_nonzero),
        ("recurrence oracle matches the solver", c3_oracle),
        ("YD structure of z", c4_yd_of_z),
        ("Drinfeld double, u_q(sl2) and action on z", c5_double),
        ("transport to the smash product", c6_smash),
        ("Sweedler center is k[u^2]", c7_sweedler),
        ("Weyl centralizer of the derivations", c8_weyl),
        ("adjoint H is YD and braided commutative", c9_adjoint),
        ("γ = 0 and γ = 1 centers distinguishable", c10_compare),
        ("property suites", c11_suites),
        ("stability under D + 2", c12_stability),
    ];
    let filter: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS {name} [{detail}] ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL {name} [{why}] ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
