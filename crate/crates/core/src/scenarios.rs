//! Ready-made configurations: the nilpotent line over `k Z_n` acting on
//! `k[u]`, Sweedler's algebra acting on `k[u]`, and the polynomial Hopf
//! algebra used for Weyl algebras.

use crate::algebra::{BasedAlgebra, PowerRule, Presentation};
use crate::braid::QTHopf;
use crate::braided_hopf::{BraidedHopf, ModuleAlgebra};
use crate::error::{Error, Result};
use crate::linspace::Vector;
use crate::scalars::{QParam, Scalar};
use std::sync::Arc;

/// `K = k Z_n`, `H = k[x]/(x^n)` with `g·x = q⁻²x`, and `A_γ = k[u]`
/// truncated at `degree` with `g·u = q²u`, `x·u = γ`.
#[derive(Clone, Debug)]
pub struct NilpotentSetup {
    pub n: u32,
    pub qp: QParam,
    pub q: Scalar,
    pub gamma: Scalar,
    pub k: Arc<QTHopf>,
    pub h: Arc<BraidedHopf>,
    pub a: ModuleAlgebra,
}

impl NilpotentSetup {
    pub fn new(qp: &QParam, n: u32, gamma: &Scalar, degree: u32) -> Result<NilpotentSetup> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
        }
        let q = qp.q.clone();
        if q.mul(&q).is_one() {
            return Err(Error::InvalidArgument("q² = 1 makes 1 − q² vanish".into()));
        }
        let k = Arc::new(QTHopf::cyclic(&q, n)?);
        let h = Arc::new(BraidedHopf::nilpotent_line(k.clone(), &q, n, -1, "x")?);
        let a = crate::braided_hopf::polynomial_module_algebra(h.clone(), &q, 1, gamma, degree)?;
        Ok(NilpotentSetup { n, qp: qp.clone(), q, gamma: gamma.clone(), k, h, a })
    }

    /// Canonical `q` for `n`.
    pub fn canonical(n: u32, gamma: i64, degree: u32) -> Result<NilpotentSetup> {
        let qp = QParam::canonical(n)?;
        let g = qp.field.int(gamma);
        NilpotentSetup::new(&qp, n, &g, degree)
    }
}

/// `K = T₂(−1)` with `R_ξ`, `H = k`, and `A_γ = k[u]` truncated at
/// `degree` with `g·u = −u`, `x·u = γ`.
#[derive(Clone, Debug)]
pub struct SweedlerSetup {
    pub xi: Scalar,
    pub gamma: Scalar,
    pub k: Arc<QTHopf>,
    pub h: Arc<BraidedHopf>,
    pub a: ModuleAlgebra,
}

impl SweedlerSetup {
    pub fn new(xi: &Scalar, gamma: &Scalar, degree: u32) -> Result<SweedlerSetup> {
        let f = xi.field();
        let k = Arc::new(QTHopf::sweedler(f, xi)?);
        let h = Arc::new(BraidedHopf::trivial(k.clone())?);
        let p = Presentation::new(f).generator("u", PowerRule::Free, 1).truncate_at(degree);
        let alg = BasedAlgebra::from_presentation("k[u]", p)?;
        let u = alg.mono("u")?;
        let one = alg.mono("1")?;
        let kg = vec![vec![Vector::single(u, f.int(-1))], vec![Vector::single(one, gamma.clone())]];
        let a = ModuleAlgebra::from_generators(h.clone(), alg, &kg, &[])?;
        Ok(SweedlerSetup { xi: xi.clone(), gamma: gamma.clone(), k, h, a })
    }
}
