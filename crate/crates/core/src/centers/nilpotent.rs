//! Closed forms and an independent recurrence solver for the center of
//! `R_B(k[u])` over the nilpotent line.

use crate::error::{Error, Result};
use crate::linspace::{kernel_of_rows, Tensor, Vector};
use crate::scalars::{q_binomial, Scalar};
use crate::scenarios::NilpotentSetup;
use crate::yd::YDAlgebra;

/// Index of `y^i ⊗ u^j` in `R_B(A) = H ⊗ A`.
pub fn rb_index(s: &NilpotentSetup, i: u32, j: u32) -> Result<usize> {
    let hi = s.h.alg.mono(&format!("x^{i}"))?;
    let aj = s.a.alg.mono(&format!("u^{j}"))?;
    Ok(hi * s.a.alg.dim() + aj)
}

fn binom2(k: i64) -> i64 {
    k * (k + 1) / 2
}

fn gamma_pow(s: &NilpotentSetup, e: i64) -> Result<Scalar> {
    if e == 0 {
        return Ok(s.q.field().one());
    }
    if s.gamma.is_zero() {
        return Err(Error::InvalidArgument("closed form needs γ ≠ 0".into()));
    }
    Ok(s.gamma.pow(e))
}

/// `z_ℓ = Σ_{k<n} γ^{−k} binom(ℓ+k−1, k)_{q²} q^{−2(kℓ + C(k+1,2))} (1−q²)^k y^k ⊗ u^{k+ℓ}`.
pub fn z_closed_form(s: &NilpotentSetup, ell: u32) -> Result<Vector> {
    let q = &s.q;
    let q2 = q.mul(q);
    let c = q.field().one().sub(&q2);
    let l = ell as i64;
    let mut out = Vector::zero();
    for k in 0..s.n as i64 {
        let coef = gamma_pow(s, -k)?
            .mul(&q_binomial(l + k - 1, k, &q2)?)
            .mul(&q.pow(-2 * (k * l + binom2(k))))
            .mul(&c.pow(k));
        out = out.add(&Vector::single(rb_index(s, k as u32, (k + l) as u32)?, coef));
    }
    Ok(out)
}

/// `δ^R(z) = Σ_{i<n} γ^{−i} (1−q²)^i q^{−2(C(i+1,2)+i)} x^i ⊗ z^{i+1}` on
/// `H ⊗ R_B(A)`, with the powers of `z` computed in `rb`.
pub fn z_coaction_closed_form(s: &NilpotentSetup, rb: &YDAlgebra, z: &Vector) -> Result<Vector> {
    let q = &s.q;
    let c = q.field().one().sub(&q.mul(q));
    let hl = s.h.alg.space().legs();
    let rl = rb.alg.space().legs();
    let mut out = Vector::zero();
    let mut zp = z.clone();
    for i in 0..s.n as i64 {
        let coef = gamma_pow(s, -i)?.mul(&c.pow(i)).mul(&q.pow(-2 * (binom2(i) + i)));
        let xi = s.h.alg.vec(&format!("x^{i}"))?;
        let t = Tensor::outer(&Tensor::new(hl.clone(), xi), &Tensor::new(rl.clone(), zp.clone()));
        out = out.add_scaled(&t.v, &coef);
        if i + 1 < s.n as i64 {
            zp = rb.alg.mul(&zp, z)?;
        }
    }
    Ok(out)
}

/// `{y^i ⊗ u^{kn}}` of u-degree at most `deg`.
pub fn gamma_zero_center(s: &NilpotentSetup, deg: u32) -> Result<Vec<Vector>> {
    let one = s.q.field().one();
    let mut out = Vec::new();
    for i in 0..s.n {
        for j in (0..=deg).step_by(s.n as usize) {
            out.push(Vector::unit(rb_index(s, i, j)?, one.clone()));
        }
    }
    Ok(out)
}

/// Solutions `λ_{i,j}` (`0 ≤ i < n`, `0 ≤ j ≤ window`) of
/// `(q^{2(j−1)} − 1) λ_{i,j−1} + γ q^{2j} [i+1]_{q²} λ_{i+1,j} = 0`,
/// with `λ_{n,j} = 0` and `λ_{i,window+1} = 0`.
#[derive(Clone, Debug)]
pub struct RecurrenceSolution {
    pub n: u32,
    pub window: u32,
    /// Kernel basis over the unknowns `λ_{i,j}` at position `i(window+1) + j`.
    pub basis: Vec<Vector>,
}

impl RecurrenceSolution {
    pub fn unknown(&self, i: u32, j: u32) -> usize {
        (i * (self.window + 1) + j) as usize
    }

    /// `Σ λ_{i,j} y^i ⊗ u^j` for every solution.
    pub fn to_rb(&self, s: &NilpotentSetup) -> Result<Vec<Vector>> {
        let w = self.window + 1;
        self.basis
            .iter()
            .map(|v| {
                let mut out = Vector::zero();
                for (p, c) in v.iter() {
                    let (i, j) = (*p as u32 / w, *p as u32 % w);
                    out = out.add(&Vector::single(rb_index(s, i, j)?, c.clone()));
                }
                Ok(out)
            })
            .collect()
    }
}

pub fn recurrence_oracle(n: u32, q: &Scalar, gamma: &Scalar, window: u32) -> Result<RecurrenceSolution> {
    let f = q.field();
    let q2 = q.mul(q);
    let one = f.one();
    let w = window + 1;
    let at = |i: u32, j: u32| (i * w + j) as usize;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..=window + 1 {
            let mut e = Vec::new();
            if j >= 1 {
                let a = q2.pow(j as i64 - 1).sub(&one);
                if !a.is_zero() {
                    e.push((at(i, j - 1), a));
                }
            }
            if i + 1 < n && j <= window {
                let b = gamma
                    .mul(&q2.pow(j as i64))
                    .mul(&one.sub(&q2.pow(i as i64 + 1)).div(&one.sub(&q2))?);
                if !b.is_zero() {
                    e.push((at(i + 1, j), b));
                }
            }
            if !e.is_empty() {
                rows.push(Vector::from_pairs(e));
            }
        }
    }
    let unknowns = (n * w) as usize;
    let basis = if rows.is_empty() {
        (0..unknowns).map(|p| Vector::unit(p, one.clone())).collect()
    } else {
        kernel_of_rows(&rows, unknowns)?
    };
    Ok(RecurrenceSolution { n, window, basis })
}
