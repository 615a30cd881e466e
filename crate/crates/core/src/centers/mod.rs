//! Braided centers and centralizers.
//!
//! A centralizer is the kernel of `c ↦ m(c ⊗ s) − mΨ(c ⊗ s)` over a set of
//! test elements `s`, restricted to the degree window where every such
//! product is defined in the truncated ambient. The kernel is stored in
//! reduced echelon form, so two centers are equal iff their bases are equal.
//! Every result is re-verified against a full spanning set of test
//! elements before it is returned.

mod compare;
mod nilpotent;
mod transport;

pub use compare::{
    compare_centers, compare_centers_with, restriction_agrees, signature, signature_with, Comparison, Signature,
};
pub use nilpotent::{
    gamma_zero_center, recurrence_oracle, rb_index, z_closed_form, z_coaction_closed_form, RecurrenceSolution,
};
pub use transport::{cross_check_smash, restrict_yd, TransportReport};

use crate::algebra::BasedAlgebra;
use crate::braid::{braid_at, braid_inv_at, mul_at, KModule, QTHopf};
use crate::braided_hopf::ModuleAlgebra;
use crate::constructions::rb_algebra;
use crate::error::{Error, Result};
use crate::linspace::{render_vector, Subspace, Tensor, Vector};
use crate::par;
use crate::scalars::{Scalar, ScalarFormat};
use crate::yd::{YDAlgebra, YDModule};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

pub const CENTER_SCHEMA: &str = "bcenter.center/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `m(c ⊗ s) = mΨ(c ⊗ s)`.
    Left,
    /// `m(c ⊗ s) = mΨ⁻¹(c ⊗ s)`.
    Right,
}

/// An algebra together with a braiding on its tensor square.
pub trait Braided: Sync {
    fn algebra(&self) -> &BasedAlgebra;
    /// `mΨ(a ⊗ b)`.
    fn mul_psi(&self, a: &Vector, b: &Vector) -> Result<Vector>;
    /// `mΨ⁻¹(a ⊗ b)`.
    fn mul_psi_inv(&self, a: &Vector, b: &Vector) -> Result<Vector>;
    /// Eigenvalues of the first generator of `K` on the basis, when it acts
    /// diagonally.
    fn weights(&self) -> Option<Vec<Scalar>> {
        None
    }
}

impl Braided for YDAlgebra {
    fn algebra(&self) -> &BasedAlgebra {
        &self.alg
    }

    fn mul_psi(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.mul_braided(a, b)
    }

    fn mul_psi_inv(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.mul_braided_inv(a, b)
    }

    fn weights(&self) -> Option<Vec<Scalar>> {
        diagonal_weights(&self.yd.h.k, &self.yd.kmod)
    }
}

/// An algebra in `Mod_K` braided by the R-matrix of `K`. With `K = k` this
/// is the flip.
#[derive(Clone, Debug)]
pub struct KBraided {
    pub alg: BasedAlgebra,
    pub k: Arc<QTHopf>,
    pub kmod: KModule,
}

impl KBraided {
    fn square(&self, a: &Vector, b: &Vector) -> Tensor {
        let l = self.alg.space().legs();
        Tensor::outer(&Tensor::new(l.clone(), a.clone()), &Tensor::new(l, b.clone()))
    }
}

impl Braided for KBraided {
    fn algebra(&self) -> &BasedAlgebra {
        &self.alg
    }

    fn mul_psi(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        let t = braid_at(&self.square(a, b), 0, &self.k, &self.kmod, &self.kmod)?;
        Ok(mul_at(&t, 0, &self.alg)?.v)
    }

    fn mul_psi_inv(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        let t = braid_inv_at(&self.square(a, b), 0, &self.k, &self.kmod, &self.kmod)?;
        Ok(mul_at(&t, 0, &self.alg)?.v)
    }

    fn weights(&self) -> Option<Vec<Scalar>> {
        diagonal_weights(&self.k, &self.kmod)
    }
}

fn diagonal_weights(k: &QTHopf, kmod: &KModule) -> Option<Vec<Scalar>> {
    let g = k.alg.space().generator_names().first()?.clone();
    let gi = k.alg.mono(&g).ok()?;
    (0..kmod.dim())
        .map(|i| match kmod.rho[gi].col(i)?.entries() {
            [(r, c)] if *r == i => Some(c.clone()),
            _ => None,
        })
        .collect()
}

/// A computed center or centralizer.
#[derive(Clone, Debug)]
pub struct CenterResult {
    pub ambient: BasedAlgebra,
    pub side: Side,
    /// Reduced echelon basis of the solution inside the window.
    pub basis: Vec<Vector>,
    /// Candidates were all basis elements of degree at most `window`.
    pub window: u32,
    /// `window` minus the largest degree of a generator of the result.
    pub safe_degree: u32,
    pub algebra_closed: bool,
    pub commutative: bool,
    pub generators: Vec<Vector>,
    /// Number of (center element, test element) pairs verified.
    pub verified_pairs: usize,
    pub weights: Option<Vec<Scalar>>,
}

impl CenterResult {
    pub fn subspace(&self) -> Subspace {
        Subspace::span(self.ambient.space(), &self.basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The part of the result spanned by basis elements of degree `≤ deg`.
    pub fn within(&self, deg: u32) -> Subspace {
        let a = &self.ambient;
        self.subspace().restrict(&|i| a.degree(i) <= deg, &a.one())
    }

    pub fn to_json(&self, fmt: &ScalarFormat) -> Value {
        let a = &self.ambient;
        let sp = a.space();
        let elem = |v: &Vector| {
            let terms: Vec<Value> = v.iter().map(|(i, c)| json!([sp.render(*i), fmt.render(c)])).collect();
            json!({
                "degree": a.degree_of(v),
                "terms": terms,
                "text": render_vector(sp, v, fmt),
            })
        };
        json!({
            "schema": CENTER_SCHEMA,
            "field": format!("Q(zeta_{})", a.field().conductor()),
            "scalar_variable": if fmt.q().is_some() { "q" } else { "z" },
            "ambient": {
                "name": a.name(),
                "dim": a.dim(),
                "bound": a.bound(),
                "generators": sp.generator_names(),
            },
            "side": self.side,
            "window": self.window,
            "safe_degree": self.safe_degree,
            "algebra_closed": self.algebra_closed,
            "commutative": self.commutative,
            "verified_pairs": self.verified_pairs,
            "basis": self.basis.iter().map(elem).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(elem).collect::<Vec<_>>(),
        })
    }
}

/// Checks the center condition `m(c ⊗ t) = mΨ^{±1}(c ⊗ t)` for every
/// `c ∈ elems` and `t ∈ tests` whose product is defined. Returns the number
/// of pairs checked; the first failing pair is the witness of the error.
pub fn verify_central<B: Braided + ?Sized>(b: &B, elems: &[Vector], tests: &[Vector], side: Side) -> Result<usize> {
    let alg = b.algebra();
    let degs: Vec<u32> = elems.iter().map(|v| alg.degree_of(v)).collect();
    let vdegs: Vec<u32> = tests.iter().map(|v| alg.degree_of(v)).collect();
    let pairs: Vec<(usize, usize)> = (0..elems.len())
        .flat_map(|c| (0..tests.len()).map(move |t| (c, t)))
        .filter(|&(c, t)| defined(alg, degs[c], vdegs[t]))
        .collect();
    let bad = par::find_first(pairs.len(), |k| {
        let (c, t) = pairs[k];
        let ok = alg
            .mul(&elems[c], &tests[t])
            .and_then(|l| Ok(l == twisted(b, side, &elems[c], &tests[t])?));
        match ok {
            Ok(true) => None,
            Ok(false) => Some(Ok((c, t))),
            Err(e) => Some(Err(e)),
        }
    });
    if let Some(r) = bad {
        let (c, t) = r?;
        let fmt = ScalarFormat::plain();
        return Err(Error::AxiomFailure {
            check: "center condition on the full test set".into(),
            witness: format!(
                "c = {}, t = {}",
                render_vector(alg.space(), &elems[c], &fmt),
                render_vector(alg.space(), &tests[t], &fmt)
            ),
        });
    }
    Ok(pairs.len())
}

/// Elements serialized by [`CenterResult::to_json`] (`[label, scalar]`
/// terms) read back into `alg`.
pub fn elements_from_json(alg: &BasedAlgebra, elems: &Value, fmt: &ScalarFormat) -> Result<Vec<Vector>> {
    let sp = alg.space();
    let idx: std::collections::HashMap<String, usize> = (0..sp.dim()).map(|i| (sp.render(i), i)).collect();
    let bad = |what: &str| Error::Parse(format!("center element: {what}"));
    let arr = elems.as_array().ok_or_else(|| bad("expected a list"))?;
    arr.iter()
        .map(|e| {
            let terms = e["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
            let mut acc = crate::linspace::Acc::new();
            for t in terms {
                let (Some(l), Some(c)) = (t[0].as_str(), t[1].as_str()) else { return Err(bad("malformed term")) };
                let i = *idx.get(l).ok_or_else(|| bad(&format!("unknown basis label '{l}'")))?;
                acc.add(i, &fmt.parse(c, alg.field())?);
            }
            Ok(acc.finish())
        })
        .collect()
}

/// `1, z, z², …` while the powers are defined and of degree `≤ deg`.
pub fn powers_within(alg: &BasedAlgebra, z: &Vector, deg: u32) -> Vec<Vector> {
    let mut out = vec![alg.unit().clone()];
    let mut p = alg.unit().clone();
    while let Ok(next) = alg.mul(&p, z) {
        if next.is_zero() || alg.degree_of(&next) > deg {
            break;
        }
        out.push(next.clone());
        p = next;
    }
    out
}

fn twisted<B: Braided + ?Sized>(b: &B, side: Side, a: &Vector, s: &Vector) -> Result<Vector> {
    match side {
        Side::Left => b.mul_psi(a, s),
        Side::Right => b.mul_psi_inv(a, s),
    }
}

fn defined(alg: &BasedAlgebra, d1: u32, d2: u32) -> bool {
    alg.bound().map_or(true, |bd| d1 + d2 <= bd)
}

/// The subalgebra generated by `gens`, using only products that are defined
/// in the truncation.
pub fn generated_subalgebra(alg: &BasedAlgebra, gens: &[Vector]) -> Result<Subspace> {
    let mut sp = Subspace::span(alg.space(), &[alg.unit().clone()]);
    let mut queue = vec![alg.unit().clone()];
    while let Some(v) = queue.pop() {
        for g in gens {
            if !defined(alg, alg.degree_of(&v), alg.degree_of(g)) {
                continue;
            }
            let p = alg.mul(&v, g)?;
            if sp.insert(&p) {
                queue.push(p);
            }
        }
    }
    Ok(sp)
}

/// Solve `m(c ⊗ s) = mΨ^{±1}(c ⊗ s)` for all `s ∈ gens`, then verify every
/// solution against every element of `verify` with a defined product.
pub fn solve<B: Braided + ?Sized>(b: &B, gens: &[Vector], side: Side, verify: &[Vector]) -> Result<CenterResult> {
    let alg = b.algebra();
    if gens.is_empty() {
        return Err(Error::InvalidArgument("generating set is empty".into()));
    }
    if let Some(v) = gens.iter().chain(verify).find(|v| v.max_index().is_some_and(|m| m >= alg.dim())) {
        return Err(Error::DimensionMismatch(format!("test element {v:?} is outside the ambient")));
    }
    let d = gens.iter().map(|v| alg.degree_of(v)).max().unwrap();
    let window = match alg.bound() {
        Some(bd) => bd.checked_sub(d).ok_or_else(|| {
            Error::Overflow(format!("truncation degree {bd} is below the test degree {d}"))
        })?,
        None => alg.degrees().iter().copied().max().unwrap_or(0),
    };
    let one = alg.one();
    let cand: Vec<usize> = (0..alg.dim()).filter(|&i| alg.degree(i) <= window).collect();
    let cols: Vec<Result<Vec<Vector>>> = par::map_range(cand.len(), |p| {
        let e = Vector::unit(cand[p], one.clone());
        gens.iter().map(|s| Ok(alg.mul(&e, s)?.sub(&twisted(b, side, &e, s)?))).collect()
    });
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (p, col) in cols.into_iter().enumerate() {
        for (si, v) in col?.into_iter().enumerate() {
            for (i, c) in v.into_entries() {
                rows.entry((si, i)).or_default().push((p, c));
            }
        }
    }
    let rows: Vec<Vector> = rows.into_values().map(Vector::from_sorted).collect();
    let kernel = if rows.is_empty() {
        (0..cand.len()).map(|p| Vector::unit(p, one.clone())).collect()
    } else {
        crate::linspace::kernel_of_rows(&rows, cand.len())?
    };
    let lifted: Vec<Vector> = kernel.iter().map(|v| v.map_indices(|p| cand[p])).collect();
    let basis = Subspace::span(alg.space(), &lifted).basis();

    let verified_pairs = verify_central(b, &basis, verify, side)?;

    let (generators, gmax) = extract_generators(alg, &basis, window)?;
    let safe_degree = window - gmax;
    let algebra_closed = closed_under_products(alg, &basis, window)?;
    let commutative = commutative_on(b, &basis)?;
    Ok(CenterResult {
        ambient: alg.clone(),
        side,
        basis,
        window,
        safe_degree,
        algebra_closed,
        commutative,
        generators,
        verified_pairs,
        weights: b.weights(),
    })
}

/// Greedy by degree: at each degree, elements of the result not generated
/// by the earlier generators become generators. Stops once the degree
/// leaves the window that the current generators can certify.
fn extract_generators(alg: &BasedAlgebra, basis: &[Vector], window: u32) -> Result<(Vec<Vector>, u32)> {
    let sub = Subspace::span(alg.space(), basis);
    let one = alg.one();
    let mut gens: Vec<Vector> = Vec::new();
    let mut gmax = 0u32;
    for d in 0..=window {
        if d + gmax > window {
            break;
        }
        let level = sub.restrict(&|i| alg.degree(i) <= d, &one);
        let mut closure = generated_subalgebra(alg, &gens)?;
        for v in level.basis() {
            if !closure.contains(&v) {
                gens.push(v);
                gmax = gmax.max(d);
                closure = generated_subalgebra(alg, &gens)?;
            }
        }
    }
    Ok((gens, gmax))
}

fn closed_under_products(alg: &BasedAlgebra, basis: &[Vector], window: u32) -> Result<bool> {
    let sub = Subspace::span(alg.space(), basis);
    let degs: Vec<u32> = basis.iter().map(|v| alg.degree_of(v)).collect();
    let n = basis.len();
    let bad = par::find_first(n * n, |k| {
        let (i, j) = (k / n, k % n);
        if degs[i] + degs[j] > window {
            return None;
        }
        match alg.mul(&basis[i], &basis[j]) {
            Ok(p) if sub.contains(&p) => None,
            Ok(_) => Some(Ok(())),
            Err(e) => Some(Err(e)),
        }
    });
    match bad {
        None => Ok(true),
        Some(Ok(())) => Ok(false),
        Some(Err(e)) => Err(e),
    }
}

/// `mΨ = m` and `mΨ⁻¹ = m` on all pairs of `basis` with a defined product.
pub fn commutative_on<B: Braided + ?Sized>(b: &B, basis: &[Vector]) -> Result<bool> {
    let alg = b.algebra();
    let degs: Vec<u32> = basis.iter().map(|v| alg.degree_of(v)).collect();
    let n = basis.len();
    let bad = par::find_first(n * n, |k| {
        let (i, j) = (k / n, k % n);
        if !defined(alg, degs[i], degs[j]) {
            return None;
        }
        let check = || -> Result<bool> {
            let m = alg.mul(&basis[i], &basis[j])?;
            Ok(m == b.mul_psi(&basis[i], &basis[j])? && m == b.mul_psi_inv(&basis[i], &basis[j])?)
        };
        match check() {
            Ok(true) => None,
            Ok(false) => Some(Ok(())),
            Err(e) => Some(Err(e)),
        }
    });
    match bad {
        None => Ok(true),
        Some(Ok(())) => Ok(false),
        Some(Err(e)) => Err(e),
    }
}

/// Every basis element, as test set.
fn full_basis(alg: &BasedAlgebra) -> Vec<Vector> {
    (0..alg.dim()).map(|i| Vector::unit(i, alg.one())).collect()
}

/// The presentation generators of an algebra.
pub fn algebra_generators(alg: &BasedAlgebra) -> Result<Vec<Vector>> {
    alg.space().generator_names().iter().map(|g| alg.vec(g)).collect()
}

/// `Cent_A(S)` on the given side, verified against the subalgebra that `S`
/// generates.
pub fn centralizer<B: Braided + ?Sized>(b: &B, s: &[Vector], side: Side) -> Result<CenterResult> {
    let verify = generated_subalgebra(b.algebra(), s)?.basis();
    solve(b, s, side, &verify)
}

/// `C^l(A)` from the presentation generators, verified on the full basis.
pub fn left_center<B: Braided + ?Sized>(b: &B) -> Result<CenterResult> {
    left_center_with(b, &algebra_generators(b.algebra())?)
}

/// `C^l(A)` from explicit algebra generators, verified on the full basis.
pub fn left_center_with<B: Braided + ?Sized>(b: &B, gens: &[Vector]) -> Result<CenterResult> {
    let gens: Vec<Vector> = if gens.is_empty() { vec![b.algebra().unit().clone()] } else { gens.to_vec() };
    solve(b, &gens, Side::Left, &full_basis(b.algebra()))
}

/// `C^r(A)` from the presentation generators, verified on the full basis.
pub fn right_center<B: Braided + ?Sized>(b: &B) -> Result<CenterResult> {
    let mut gens = algebra_generators(b.algebra())?;
    if gens.is_empty() {
        gens.push(b.algebra().unit().clone());
    }
    solve(b, &gens, Side::Right, &full_basis(b.algebra()))
}

/// The B-center `C^l(R_B(A))` with its Yetter-Drinfeld structure.
#[derive(Clone, Debug)]
pub struct BCenter {
    pub rb: YDAlgebra,
    pub center: CenterResult,
    /// The YD structure of `R_B(A)` restricted to the computed window.
    pub yd: YDModule,
}

/// Algebra generators of `R_B(A) = H ⊗ A`: `h ⊗ 1` and `1 ⊗ a`.
pub fn rb_generators(a: &ModuleAlgebra) -> Result<Vec<Vector>> {
    let hl = a.h.alg.space().legs();
    let al = a.alg.space().legs();
    let mut out = Vec::new();
    for g in algebra_generators(&a.h.alg)? {
        out.push(Tensor::outer(&Tensor::new(hl.clone(), g), &Tensor::new(al.clone(), a.alg.unit().clone())).v);
    }
    for g in algebra_generators(&a.alg)? {
        out.push(Tensor::outer(&Tensor::new(hl.clone(), a.h.alg.unit().clone()), &Tensor::new(al.clone(), g)).v);
    }
    Ok(out)
}

pub fn b_center(a: &ModuleAlgebra) -> Result<BCenter> {
    let rb = rb_algebra(a)?;
    let gens = rb_generators(a)?;
    let center = left_center_with(&rb, &gens)?;
    let yd = restrict_yd(&rb.yd, &center.basis)?;
    Ok(BCenter { rb, center, yd })
}
