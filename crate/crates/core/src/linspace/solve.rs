//! Exact Gaussian elimination on sparse rows.
//!
//! Pivots are the first nonzero coordinate of a row, so the reduced
//! echelon form of a row space is canonical for a fixed basis order.

use super::map::LinearMap;
use super::space::BasedSpace;
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// Incremental row echelon form keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Vector>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduce `v` against the current rows (eliminating every pivot column).
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        // pivot rows may introduce entries at later pivots, so walk forward
        let mut from = 0usize;
        loop {
            let hit = r
                .iter()
                .filter(|(i, _)| *i >= from)
                .find(|(i, _)| self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match hit {
                Some((i, c)) => {
                    r = r.add_scaled(&self.rows[&i], &c.neg());
                    from = i + 1;
                }
                None => return r,
            }
        }
    }

    /// Insert a row; returns the new pivot, or `None` if dependent.
    pub fn insert(&mut self, v: &Vector) -> Option<usize> {
        let r = self.reduce(v);
        let (p, c) = r.leading()?.clone();
        let r = r.scale(&c.inv().expect("nonzero pivot"));
        // keep rows fully reduced: clear column p from existing rows
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let row = &self.rows[&k];
            if let Some(x) = row.get(p).cloned() {
                let nr = row.add_scaled(&r, &x.neg());
                self.rows.insert(k, nr);
            }
        }
        self.rows.insert(p, r);
        Some(p)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Rows in pivot order (reduced echelon form).
    pub fn rows(&self) -> Vec<Vector> {
        self.rows.values().cloned().collect()
    }

    pub fn row(&self, pivot: usize) -> Option<&Vector> {
        self.rows.get(&pivot)
    }
}

/// Transpose the columns of a total map into rows over domain indices.
fn rows_of(map: &LinearMap) -> Result<Vec<Vector>> {
    let mut rows: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (j, col) in map.cols().iter().enumerate() {
        let col = col
            .as_ref()
            .ok_or_else(|| Error::Overflow(format!("kernel of a map with undefined column {j}")))?;
        for (i, c) in col.iter() {
            rows.entry(*i).or_default().push((j, c.clone()));
        }
    }
    Ok(rows.into_values().map(Vector::from_sorted).collect())
}

/// Canonical basis of `ker f` (reduced echelon rows).
pub fn kernel(map: &LinearMap) -> Result<Vec<Vector>> {
    kernel_of_rows(&rows_of(map)?, map.dom_dim())
}

/// Kernel of the matrix with the given rows over `n` unknowns.
pub fn kernel_of_rows(rows: &[Vector], n: usize) -> Result<Vec<Vector>> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    let Some(one) = rows.iter().flat_map(|r| r.iter()).map(|(_, c)| c.field().one()).next() else {
        return Err(Error::InvalidArgument("kernel of zero rows needs a field; use kernel_with_one".into()));
    };
    Ok(kernel_from_echelon(&ech, n, &one))
}

fn kernel_from_echelon(ech: &Echelon, n: usize, one: &Scalar) -> Vec<Vector> {
    let mut basis = Echelon::new();
    let pivots: Vec<usize> = ech.pivots().collect();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..n).filter(|&f| !is_pivot[f]) {
        let mut entries = vec![(f, one.clone())];
        for &p in &pivots {
            if let Some(x) = ech.row(p).and_then(|r| r.get(f)) {
                entries.push((p, x.neg()));
            }
        }
        basis.insert(&Vector::from_pairs(entries));
    }
    basis.rows()
}

/// Kernel with an explicit unit scalar, valid even for the zero map.
pub fn kernel_with_one(map: &LinearMap, one: &Scalar) -> Result<Vec<Vector>> {
    let rows = rows_of(map)?;
    let mut ech = Echelon::new();
    for r in &rows {
        ech.insert(r);
    }
    Ok(kernel_from_echelon(&ech, map.dom_dim(), one))
}

pub fn rank(map: &LinearMap) -> Result<usize> {
    let mut ech = Echelon::new();
    for col in map.cols() {
        let col = col.as_ref().ok_or_else(|| Error::Overflow("rank of partial map".into()))?;
        ech.insert(col);
    }
    Ok(ech.rank())
}

/// Inverse of a square total map by Gauss-Jordan elimination.
pub fn inverse(map: &LinearMap, one: &Scalar) -> Result<LinearMap> {
    let n = map.dom_dim();
    if map.cod_dim() != n {
        return Err(Error::DimensionMismatch("inverse of a non-square map".into()));
    }
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for (j, col) in map.cols().iter().enumerate() {
        let col = col.as_ref().ok_or_else(|| Error::Overflow("inverse of partial map".into()))?;
        for (i, c) in col.iter() {
            rows[*i].push((j, c.clone()));
        }
    }
    let mut ech = Echelon::new();
    for (i, r) in rows.into_iter().enumerate() {
        let mut r = r;
        r.push((n + i, one.clone()));
        ech.insert(&Vector::from_sorted(r));
    }
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for p in 0..n {
        let row = ech
            .row(p)
            .ok_or_else(|| Error::InvalidArgument("map is not invertible".into()))?;
        // row p of the inverse sits in the augmented half
        for (k, c) in row.iter() {
            if *k >= n {
                cols[*k - n].push((p, c.clone()));
            } else if *k != p {
                return Err(Error::InvalidArgument("map is not invertible".into()));
            }
        }
    }
    Ok(LinearMap::new(
        map.codomain().to_vec(),
        map.domain().to_vec(),
        cols.into_iter().map(|c| Some(Vector::from_sorted(c))).collect(),
    ))
}

/// Subspace of a based space in canonical reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: BasedSpace,
    ech: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, o: &Subspace) -> bool {
        self.ambient.dim() == o.ambient.dim() && self.basis() == o.basis()
    }
}

impl Subspace {
    pub fn span(ambient: &BasedSpace, vs: &[Vector]) -> Subspace {
        let mut ech = Echelon::new();
        for v in vs {
            ech.insert(v);
        }
        Subspace { ambient: ambient.clone(), ech }
    }

    pub fn zero(ambient: &BasedSpace) -> Subspace {
        Subspace { ambient: ambient.clone(), ech: Echelon::new() }
    }

    pub fn full(ambient: &BasedSpace, one: &Scalar) -> Subspace {
        let vs: Vec<Vector> = (0..ambient.dim()).map(|i| Vector::unit(i, one.clone())).collect();
        Subspace::span(ambient, &vs)
    }

    pub fn ambient(&self) -> &BasedSpace {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.ech.rows()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.ech.contains(v)
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        self.ech.reduce(v)
    }

    pub fn insert(&mut self, v: &Vector) -> bool {
        self.ech.insert(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.basis().iter().all(|v| self.contains(v))
    }

    /// `U ∩ W`: combinations of `U`'s basis that reduce to zero modulo `W`.
    pub fn intersect(&self, w: &Subspace) -> Subspace {
        let ub = self.basis();
        if ub.is_empty() || w.dim() == 0 {
            return Subspace::zero(&self.ambient);
        }
        if w.dim() == self.ambient.dim() {
            return self.clone();
        }
        let one = ub[0].leading().unwrap().1.field().one();
        let reds: Vec<Vector> = ub.iter().map(|u| w.reduce(u)).collect();
        // rows indexed by ambient coordinate, columns by U-basis position
        let mut rows: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (k, r) in reds.iter().enumerate() {
            for (i, c) in r.iter() {
                rows.entry(*i).or_default().push((k, c.clone()));
            }
        }
        let rows: Vec<Vector> = rows.into_values().map(Vector::from_sorted).collect();
        let mut ech = Echelon::new();
        for r in &rows {
            ech.insert(r);
        }
        let coeffs = kernel_from_echelon(&ech, ub.len(), &one);
        let vs: Vec<Vector> = coeffs
            .iter()
            .map(|a| {
                a.iter().fold(Vector::zero(), |acc, (k, c)| acc.add_scaled(&ub[*k], c))
            })
            .collect();
        Subspace::span(&self.ambient, &vs)
    }

    /// `U + W`.
    pub fn sum(&self, w: &Subspace) -> Subspace {
        let mut out = self.clone();
        for v in w.basis() {
            out.ech.insert(&v);
        }
        out
    }

    /// Basis vectors of this subspace whose support lies in the given set.
    pub fn restrict(&self, allowed: &dyn Fn(usize) -> bool, one: &Scalar) -> Subspace {
        let window: Vec<Vector> = (0..self.ambient.dim())
            .filter(|&i| allowed(i))
            .map(|i| Vector::unit(i, one.clone()))
            .collect();
        self.intersect(&Subspace::span(&self.ambient, &window))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field_new;

    #[test]
    fn two_by_two_kernel() {
        let f = field_new(3).unwrap();
        let q = f.zeta();
        let qi = q.inv().unwrap();
        let sp = BasedSpace::anonymous("V", 2);
        // columns of [[1, q], [q^-1, 1]]
        let m = LinearMap::between(
            &sp,
            &sp,
            vec![
                Vector::from_pairs([(0, f.one()), (1, qi.clone())]),
                Vector::from_pairs([(0, q.clone()), (1, f.one())]),
            ],
        );
        let k = kernel(&m).unwrap();
        assert_eq!(k.len(), 1);
        let expect = Subspace::span(&sp, &[Vector::from_pairs([(0, q.clone()), (1, f.int(-1))])]);
        assert_eq!(Subspace::span(&sp, &k), expect);
        assert_eq!(rank(&m).unwrap(), 1);
        assert!(inverse(&m, &f.one()).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = field_new(4).unwrap();
        let i = f.zeta();
        let sp = BasedSpace::anonymous("V", 3);
        let m = LinearMap::between(
            &sp,
            &sp,
            vec![
                Vector::from_pairs([(0, f.one()), (2, i.clone())]),
                Vector::from_pairs([(1, f.int(2))]),
                Vector::from_pairs([(0, f.int(3)), (2, f.one())]),
            ],
        );
        let inv = inverse(&m, &f.one()).unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(f, vec![sp.clone()]));
        assert_eq!(inv.compose(&m).unwrap(), LinearMap::identity(f, vec![sp]));
    }

    #[test]
    fn intersection_of_planes() {
        let f = field_new(1).unwrap();
        let sp = BasedSpace::anonymous("V", 3);
        let e = |i| Vector::unit(i, f.one());
        let u = Subspace::span(&sp, &[e(0), e(1)]);
        let w = Subspace::span(&sp, &[e(1), e(2)]);
        assert_eq!(u.intersect(&w), Subspace::span(&sp, &[e(1)]));
    }

    #[test]
    fn echelon_is_canonical() {
        let f = field_new(1).unwrap();
        let sp = BasedSpace::anonymous("V", 3);
        let a = Vector::from_pairs([(0, f.int(2)), (1, f.int(4)), (2, f.int(6))]);
        let b = Vector::from_pairs([(1, f.int(1)), (2, f.int(1))]);
        let s1 = Subspace::span(&sp, &[a.clone(), b.clone()]);
        let s2 = Subspace::span(&sp, &[b.add(&a), b.scale(&f.int(3))]);
        assert_eq!(s1.basis(), s2.basis());
        assert_eq!(s1.basis()[0], Vector::from_pairs([(0, f.one()), (2, f.int(1))]));
    }
}
