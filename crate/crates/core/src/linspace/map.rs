use super::space::{legs_dim, BasedSpace};
use super::vector::{Acc, Vector};
use crate::error::{Error, Result};
use crate::par;
use crate::scalars::{CycField, Scalar};

/// Sparse matrix between tensor products of atomic spaces.
///
/// A column is `None` when the image of that basis vector is undefined
/// because it leaves a truncation window; applying the map to a vector
/// touching such a column yields [`Error::Overflow`].
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    dom: Vec<BasedSpace>,
    cod: Vec<BasedSpace>,
    cols: Vec<Option<Vector>>,
}

fn dims(legs: &[BasedSpace]) -> Vec<usize> {
    legs.iter().map(|l| l.dim()).collect()
}

impl LinearMap {
    pub fn new(dom: Vec<BasedSpace>, cod: Vec<BasedSpace>, cols: Vec<Option<Vector>>) -> LinearMap {
        assert_eq!(cols.len(), legs_dim(&dom), "column count must match domain dimension");
        LinearMap { dom, cod, cols }
    }

    /// Map given on one atomic or flattened space each side.
    pub fn between(dom: &BasedSpace, cod: &BasedSpace, cols: Vec<Vector>) -> LinearMap {
        LinearMap::new(dom.legs(), cod.legs(), cols.into_iter().map(Some).collect())
    }

    /// Build column `j` with `f(j)`; `Ok(None)` marks an undefined column.
    pub fn from_fn<F>(dom: Vec<BasedSpace>, cod: Vec<BasedSpace>, f: F) -> Result<LinearMap>
    where
        F: Fn(usize) -> Result<Option<Vector>> + Sync + Send,
    {
        let n = legs_dim(&dom);
        let cols: Result<Vec<Option<Vector>>> = par::map_range(n, f).into_iter().collect();
        Ok(LinearMap { dom, cod, cols: cols? })
    }

    /// Materialise a composite given as a tensor pipeline. Overflowing
    /// columns become undefined.
    pub fn from_pipeline<F>(
        field: &'static CycField,
        dom: Vec<BasedSpace>,
        cod: Vec<BasedSpace>,
        f: F,
    ) -> Result<LinearMap>
    where
        F: Fn(Tensor) -> Result<Tensor> + Sync + Send,
    {
        let cd = dims(&cod);
        let d2 = dom.clone();
        LinearMap::from_fn(dom, cod, |j| {
            let t = Tensor::basis(d2.clone(), j, field.one());
            match f(t) {
                Ok(out) => {
                    if dims(&out.legs) != cd {
                        return Err(Error::DimensionMismatch(format!(
                            "pipeline produced legs {:?}, expected {:?}",
                            dims(&out.legs),
                            cd
                        )));
                    }
                    Ok(Some(out.v))
                }
                Err(Error::Overflow(_)) => Ok(None),
                Err(e) => Err(e),
            }
        })
    }

    pub fn identity(field: &'static CycField, legs: Vec<BasedSpace>) -> LinearMap {
        let n = legs_dim(&legs);
        let cols = (0..n).map(|i| Some(Vector::unit(i, field.one()))).collect();
        LinearMap { dom: legs.clone(), cod: legs, cols }
    }

    pub fn zero(dom: Vec<BasedSpace>, cod: Vec<BasedSpace>) -> LinearMap {
        let n = legs_dim(&dom);
        LinearMap { dom, cod, cols: vec![Some(Vector::zero()); n] }
    }

    pub fn domain(&self) -> &[BasedSpace] {
        &self.dom
    }

    pub fn codomain(&self) -> &[BasedSpace] {
        &self.cod
    }

    pub fn dom_dim(&self) -> usize {
        self.cols.len()
    }

    pub fn cod_dim(&self) -> usize {
        legs_dim(&self.cod)
    }

    pub fn col(&self, j: usize) -> Option<&Vector> {
        self.cols[j].as_ref()
    }

    pub fn cols(&self) -> &[Option<Vector>] {
        &self.cols
    }

    pub fn is_total(&self) -> bool {
        self.cols.iter().all(|c| c.is_some())
    }

    /// Replace the leg structure of domain and codomain by other legs of
    /// the same total dimension (e.g. `[H, A]` vs the flattened `H⊗A`).
    pub fn relegged(&self, dom: Vec<BasedSpace>, cod: Vec<BasedSpace>) -> LinearMap {
        assert_eq!(legs_dim(&dom), self.dom_dim());
        assert_eq!(legs_dim(&cod), self.cod_dim());
        LinearMap { dom, cod, cols: self.cols.clone() }
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        let mut acc = Acc::new();
        for (j, c) in v.iter() {
            match &self.cols[*j] {
                Some(col) => acc.add_vec(col, c),
                None => return Err(Error::Overflow(format!("column {j} undefined"))),
            }
        }
        Ok(acc.finish())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        if dims(&g.cod) != dims(&self.dom) {
            return Err(Error::DimensionMismatch(format!(
                "compose: {:?} after {:?}",
                dims(&self.dom),
                dims(&g.cod)
            )));
        }
        let cols = par::map_slice(&g.cols, |c| match c {
            Some(v) => self.apply(v).ok(),
            None => None,
        });
        Ok(LinearMap { dom: g.dom.clone(), cod: self.cod.clone(), cols })
    }

    /// `f ⊗ g`.
    pub fn tensor(&self, g: &LinearMap) -> LinearMap {
        let gd = g.dom_dim();
        let gc = g.cod_dim();
        let mut cols = Vec::with_capacity(self.dom_dim() * gd);
        for a in &self.cols {
            for b in &g.cols {
                cols.push(match (a, b) {
                    (Some(a), Some(b)) => {
                        let mut out = Vec::with_capacity(a.len() * b.len());
                        for (i, x) in a.iter() {
                            for (j, y) in b.iter() {
                                out.push((i * gc + j, x.mul(y)));
                            }
                        }
                        Some(Vector::from_sorted(out))
                    }
                    _ => None,
                });
            }
        }
        let mut dom = self.dom.clone();
        dom.extend(g.dom.iter().cloned());
        let mut cod = self.cod.clone();
        cod.extend(g.cod.iter().cloned());
        LinearMap { dom, cod, cols }
    }

    pub fn add(&self, g: &LinearMap) -> Result<LinearMap> {
        if self.dom_dim() != g.dom_dim() || self.cod_dim() != g.cod_dim() {
            return Err(Error::DimensionMismatch("add".into()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&g.cols)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(a.add(b)),
                _ => None,
            })
            .collect();
        Ok(LinearMap { dom: self.dom.clone(), cod: self.cod.clone(), cols })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols: self.cols.iter().map(|col| col.as_ref().map(|v| v.scale(c))).collect(),
        }
    }

    pub fn sub(&self, g: &LinearMap) -> Result<LinearMap> {
        match g.cols.iter().flatten().flat_map(|v| v.iter()).next() {
            Some((_, c)) => self.add(&g.scale(&c.field().int(-1))),
            None => Ok(self.clone()),
        }
    }

    /// First column where the two maps differ.
    pub fn first_difference(&self, g: &LinearMap) -> Option<usize> {
        (0..self.cols.len()).find(|&j| self.cols[j] != g.cols[j])
    }

    /// Entry `(row i, column j)`.
    pub fn entry(&self, i: usize, j: usize) -> Option<Scalar> {
        self.cols[j].as_ref().and_then(|c| c.get(i).cloned())
    }
}

/// Element of a tensor product of atomic spaces, used to evaluate string
/// diagrams one layer at a time.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    pub legs: Vec<BasedSpace>,
    pub v: Vector,
}

impl Tensor {
    pub fn new(legs: Vec<BasedSpace>, v: Vector) -> Tensor {
        Tensor { legs, v }
    }

    pub fn basis(legs: Vec<BasedSpace>, idx: usize, one: Scalar) -> Tensor {
        Tensor { legs, v: Vector::unit(idx, one) }
    }

    /// Pure tensor `a ⊗ b`.
    pub fn outer(a: &Tensor, b: &Tensor) -> Tensor {
        let bd = legs_dim(&b.legs);
        let mut out = Vec::with_capacity(a.v.len() * b.v.len());
        for (i, x) in a.v.iter() {
            for (j, y) in b.v.iter() {
                out.push((i * bd + j, x.mul(y)));
            }
        }
        let mut legs = a.legs.clone();
        legs.extend(b.legs.iter().cloned());
        Tensor { legs, v: Vector::from_sorted(out) }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    /// Apply `f` to the legs starting at `pos`; `f`'s domain must match
    /// them, and they are replaced by `f`'s codomain legs.
    pub fn apply(&self, pos: usize, f: &LinearMap) -> Result<Tensor> {
        let k = f.dom.len();
        if pos + k > self.legs.len() || dims(&self.legs[pos..pos + k]) != dims(&f.dom) {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply map on {:?} at leg {pos} of {:?}",
                dims(&f.dom),
                dims(&self.legs)
            )));
        }
        let post: usize = legs_dim(&self.legs[pos + k..]);
        let mid = f.dom_dim();
        let cd = f.cod_dim();
        let mut acc = Acc::new();
        for (idx, c) in self.v.iter() {
            let p = idx % post;
            let m = (idx / post) % mid;
            let pre = idx / (post * mid);
            match &f.cols[m] {
                Some(col) => {
                    for (r, x) in col.iter() {
                        acc.add((pre * cd + r) * post + p, &x.mul(c));
                    }
                }
                None => return Err(Error::Overflow(format!("undefined column {m}"))),
            }
        }
        let mut legs = self.legs[..pos].to_vec();
        legs.extend(f.cod.iter().cloned());
        legs.extend(self.legs[pos + k..].iter().cloned());
        Ok(Tensor { legs, v: acc.finish() })
    }

    /// Regroup legs without changing coordinates.
    pub fn relegged(self, legs: Vec<BasedSpace>) -> Tensor {
        assert_eq!(legs_dim(&legs), legs_dim(&self.legs));
        Tensor { legs, v: self.v }
    }
}
