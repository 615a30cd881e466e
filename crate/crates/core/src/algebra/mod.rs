//! Finite and degree-truncated associative algebras.
//!
//! An algebra is a based space with a unit and bilinear structure constants.
//! Structure constants come either from a [`Presentation`] (straightening
//! words into ordered monomials) or from an explicit product formula, as for
//! smash products. Products that would leave a truncation window are
//! reported as overflow rather than silently dropped.

mod presentation;
mod rewrite;

pub use presentation::{
    Generator, GeneratorJson, PowerRule, Presentation, PresentationJson, RuleJson, SwapRule,
};

use crate::error::{Error, Result};
use crate::linspace::{tensor_space, Acc, BasedSpace, BasisIndex, Element, LinearMap, Vector};
use crate::par;
use crate::scalars::{CycField, Scalar};
use rewrite::Rewriter;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Source of structure constants `e_a * e_b`; `None` means overflow.
pub trait MulSource: Send + Sync {
    fn mul_basis(&self, a: usize, b: usize) -> Option<Vector>;
}

struct Table {
    dim: usize,
    cols: Vec<Option<Vector>>,
}

impl MulSource for Table {
    fn mul_basis(&self, a: usize, b: usize) -> Option<Vector> {
        self.cols[a * self.dim + b].clone()
    }
}

/// Right multiplication by generators, applied along the letters of `b`.
struct RightGen {
    right: Vec<LinearMap>,
    letters: Vec<Vec<usize>>,
    one: Scalar,
}

impl MulSource for RightGen {
    fn mul_basis(&self, a: usize, b: usize) -> Option<Vector> {
        let mut v = Vector::unit(a, self.one.clone());
        for &l in &self.letters[b] {
            v = self.right[l].apply(&v).ok()?;
        }
        Some(v)
    }
}

pub struct FnMul<F>(pub F);

impl<F> MulSource for FnMul<F>
where
    F: Fn(usize, usize) -> Option<Vector> + Send + Sync,
{
    fn mul_basis(&self, a: usize, b: usize) -> Option<Vector> {
        (self.0)(a, b)
    }
}

/// Tables are precomputed up to this many basis pairs.
const TABLE_LIMIT: usize = 250_000;

#[derive(Clone)]
pub struct BasedAlgebra {
    name: String,
    space: BasedSpace,
    field: &'static CycField,
    unit: Vector,
    degrees: Arc<Vec<u32>>,
    bound: Option<u32>,
    mul: Arc<dyn MulSource>,
    presentation: Option<Arc<Presentation>>,
}

impl fmt::Debug for BasedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(dim {})", self.name, self.dim())
    }
}

impl BasedAlgebra {
    /// Algebra from an explicit product. `degrees` grade the basis and
    /// `bound` is a degree up to which products never overflow: whenever
    /// `deg a + deg b <= bound` the product `e_a e_b` must be defined.
    pub fn from_product(
        name: &str,
        space: BasedSpace,
        field: &'static CycField,
        unit: Vector,
        degrees: Vec<u32>,
        bound: Option<u32>,
        mul: Arc<dyn MulSource>,
    ) -> BasedAlgebra {
        assert_eq!(degrees.len(), space.dim());
        let mut alg = BasedAlgebra {
            name: name.into(),
            space,
            field,
            unit,
            degrees: Arc::new(degrees),
            bound,
            mul,
            presentation: None,
        };
        alg.tabulate();
        alg
    }

    fn tabulate(&mut self) {
        let d = self.dim();
        if d * d > TABLE_LIMIT {
            return;
        }
        let src = self.mul.clone();
        let cols = par::map_range(d * d, |k| src.mul_basis(k / d, k % d));
        self.mul = Arc::new(Table { dim: d, cols });
    }

    /// Build from a presentation: PBW basis of ordered monomials within the
    /// power bounds and truncation, sorted graded-lexicographically.
    pub fn from_presentation(name: &str, p: Presentation) -> Result<BasedAlgebra> {
        p.validate()?;
        let monos = enumerate_monomials(&p);
        let index: HashMap<Vec<u32>, usize> =
            monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rw = Rewriter::new(&p);
        let space = BasedSpace::new(
            name,
            monos.iter().map(|m| BasisIndex::Mono(m.clone())).collect(),
            p.generators.iter().map(|g| g.name.clone()).collect(),
        );
        let one = p.field.one();
        let mut right = Vec::with_capacity(p.ngens());
        for g in 0..p.ngens() {
            let mut cols = Vec::with_capacity(monos.len());
            for m in &monos {
                let col = match rw.mul_gen(m, g)? {
                    Some(poly) => {
                        let mut acc = Acc::new();
                        for (mono, c) in poly {
                            let i = *index.get(&mono).ok_or_else(|| {
                                Error::Inconsistent(format!("monomial {mono:?} outside the basis"))
                            })?;
                            acc.add(i, &c);
                        }
                        Some(acc.finish())
                    }
                    None => None,
                };
                cols.push(col);
            }
            right.push(LinearMap::new(vec![space.clone()], vec![space.clone()], cols));
        }
        let letters: Vec<Vec<usize>> = monos
            .iter()
            .map(|m| m.iter().enumerate().flat_map(|(g, &k)| std::iter::repeat(g).take(k as usize)).collect())
            .collect();
        let degrees: Vec<u32> = monos.iter().map(|m| p.weighted_degree(m)).collect();
        let unit_idx = index[&vec![0; p.ngens()]];
        let mut alg = BasedAlgebra {
            name: name.into(),
            space,
            field: p.field,
            unit: Vector::unit(unit_idx, one.clone()),
            degrees: Arc::new(degrees),
            bound: p.bound,
            mul: Arc::new(RightGen { right, letters, one }),
            presentation: Some(Arc::new(p)),
        };
        alg.tabulate();
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn one(&self) -> Scalar {
        self.field.one()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Degree of a vector: maximum over its support (0 for zero).
    pub fn degree_of(&self, v: &Vector) -> u32 {
        v.iter().map(|(i, _)| self.degrees[*i]).max().unwrap_or(0)
    }

    /// Products `e_a e_b` with `deg a + deg b` up to this bound are defined.
    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_deref()
    }

    pub fn is_finite(&self) -> bool {
        self.bound.is_none()
    }

    /// Basis index of an ordered monomial given as text, e.g. `"y u^2"`.
    pub fn mono(&self, s: &str) -> Result<usize> {
        let p = self
            .presentation()
            .ok_or_else(|| Error::InvalidArgument("algebra has no presentation".into()))?;
        let e = p.parse_monomial(s)?;
        self.space
            .index_of(&BasisIndex::Mono(e))
            .ok_or_else(|| Error::InvalidArgument(format!("monomial '{s}' is not a basis element")))
    }

    /// Basis vector for a monomial string.
    pub fn vec(&self, s: &str) -> Result<Vector> {
        Ok(Vector::unit(self.mono(s)?, self.one()))
    }

    /// Linear combination from `(coefficient, monomial)` pairs.
    pub fn combo(&self, terms: &[(Scalar, &str)]) -> Result<Vector> {
        let mut acc = Acc::new();
        for (c, m) in terms {
            acc.add(self.mono(m)?, c);
        }
        Ok(acc.finish())
    }

    pub fn element(&self, v: Vector) -> Element {
        Element::new(&self.space, v)
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> Option<Vector> {
        self.mul.mul_basis(a, b)
    }

    /// Bilinear product; overflow if any contributing basis product does.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let mut acc = Acc::new();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                let p = self.mul_basis(*a, *b).ok_or_else(|| {
                    Error::Overflow(format!("{} * {}", self.space.render(*a), self.space.render(*b)))
                })?;
                acc.add_vec(&p, &c.mul(d));
            }
        }
        Ok(acc.finish())
    }

    pub fn pow(&self, x: &Vector, k: u32) -> Result<Vector> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `m : A ⊗ A → A` as a (possibly partial) matrix.
    pub fn mul_map(&self) -> LinearMap {
        let d = self.dim();
        let cols = par::map_range(d * d, |k| self.mul_basis(k / d, k % d));
        LinearMap::new(vec![self.space.clone(), self.space.clone()], vec![self.space.clone()], cols)
    }

    /// `u : k → A`.
    pub fn unit_map(&self) -> LinearMap {
        LinearMap::new(vec![], vec![self.space.clone()], vec![Some(self.unit.clone())])
    }

    /// The flattened space `A ⊗ A`.
    pub fn square_space(&self) -> BasedSpace {
        tensor_space(&self.space, &self.space)
    }

    /// Rebuild a presented algebra with a smaller (or larger) truncation.
    pub fn truncate(&self, bound: u32) -> Result<BasedAlgebra> {
        let p = self
            .presentation()
            .ok_or_else(|| Error::InvalidArgument("only presented algebras can be re-truncated".into()))?;
        let mut p = p.clone();
        p.bound = Some(bound);
        BasedAlgebra::from_presentation(&self.name, p)
    }

    /// `(ab)c = a(bc)` on all basis triples where both sides are defined.
    /// Returns the number of triples checked.
    pub fn check_associative(&self) -> Result<usize> {
        let d = self.dim();
        let counts = par::map_range(d, |a| -> std::result::Result<usize, (usize, usize, usize)> {
            let mut n = 0;
            for b in 0..d {
                let Some(ab) = self.mul_basis(a, b) else { continue };
                for c in 0..d {
                    let Some(bc) = self.mul_basis(b, c) else { continue };
                    let (Ok(l), Ok(r)) = (self.mul(&ab, &Vector::unit(c, self.one())), self.mul(&Vector::unit(a, self.one()), &bc)) else {
                        continue;
                    };
                    if l != r {
                        return Err((a, b, c));
                    }
                    n += 1;
                }
            }
            Ok(n)
        });
        let mut total = 0;
        for r in counts {
            match r {
                Ok(n) => total += n,
                Err((a, b, c)) => {
                    return Err(Error::AxiomFailure {
                        check: format!("associativity of {}", self.name),
                        witness: format!(
                            "({})({})({})",
                            self.space.render(a),
                            self.space.render(b),
                            self.space.render(c)
                        ),
                    })
                }
            }
        }
        Ok(total)
    }

    /// `1 a = a = a 1` for every basis element.
    pub fn check_unit(&self) -> Result<()> {
        for a in 0..self.dim() {
            let e = Vector::unit(a, self.one());
            let l = self.mul(&self.unit, &e)?;
            let r = self.mul(&e, &self.unit)?;
            if l != e || r != e {
                return Err(Error::AxiomFailure {
                    check: format!("unit law of {}", self.name),
                    witness: self.space.render(a),
                });
            }
        }
        Ok(())
    }
}

fn enumerate_monomials(p: &Presentation) -> Vec<Vec<u32>> {
    let ranges: Vec<u32> = p
        .generators
        .iter()
        .map(|g| match g.power {
            PowerRule::Nilpotent(n) | PowerRule::Cyclic(n) => n - 1,
            PowerRule::Free => p.bound.unwrap_or(0) / g.weight.max(1),
        })
        .collect();
    let mut out = vec![vec![]];
    for &r in &ranges {
        let mut next = Vec::new();
        for pre in &out {
            for k in 0..=r {
                let mut e: Vec<u32> = pre.clone();
                e.push(k);
                next.push(e);
            }
        }
        out = next;
    }
    out.retain(|e| p.bound.is_none_or(|b| p.weighted_degree(e) <= b));
    // graded lexicographic: total degree, then larger leading exponents first
    out.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    out
}

/// Group algebra of `Z_{n_1} × … × Z_{n_k}` on generators `g1 … gk`
/// (a single cyclic factor is named `g`).
pub fn group_algebra(field: &'static CycField, orders: &[u32]) -> Result<BasedAlgebra> {
    let mut p = Presentation::new(field);
    for (i, &n) in orders.iter().enumerate() {
        let name = if orders.len() == 1 { "g".to_string() } else { format!("g{}", i + 1) };
        p = p.generator(&name, PowerRule::Cyclic(n), 0);
    }
    BasedAlgebra::from_presentation("kG", p)
}
