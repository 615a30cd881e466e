use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// Sparse coordinate vector: sorted `(index, coefficient)` pairs, no zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct Vector {
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { entries: Vec::new() }
    }

    pub fn unit(i: usize, one: Scalar) -> Vector {
        Vector { entries: vec![(i, one)] }
    }

    pub fn single(i: usize, c: Scalar) -> Vector {
        if c.is_zero() {
            Vector::zero()
        } else {
            Vector { entries: vec![(i, c)] }
        }
    }

    /// From arbitrary pairs; duplicates are summed and zeros dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(it: I) -> Vector {
        let mut acc = Acc::new();
        for (i, c) in it {
            acc.add(i, &c);
        }
        acc.finish()
    }

    /// From pairs already sorted by strictly increasing index.
    pub fn from_sorted(entries: Vec<(usize, Scalar)>) -> Vector {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        Vector { entries: entries.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector { entries: self.entries.iter().map(|(i, x)| (*i, x.mul(c))).collect() }
    }

    pub fn neg(&self) -> Vector {
        Vector { entries: self.entries.iter().map(|(i, x)| (*i, x.neg())).collect() }
    }

    /// `self + c * other`, by merging.
    pub fn add_scaled(&self, other: &Vector, c: &Scalar) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.mul(c)));
                        b.next();
                    } else {
                        let s = x.add(&y.mul(c));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.mul(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Vector { entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        if other.is_zero() {
            return self.clone();
        }
        match other.entries.first() {
            Some((_, c)) => self.add_scaled(other, &c.field().one()),
            None => self.clone(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            Some((_, c)) => self.add_scaled(other, &c.field().int(-1)),
            None => self.clone(),
        }
    }

    /// Relabel indices; `f` must be injective on the support.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Vector {
        Vector::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }
}

/// Accumulator for building vectors from unsorted contributions.
#[derive(Default)]
pub struct Acc {
    map: BTreeMap<usize, Scalar>,
}

impl Acc {
    pub fn new() -> Acc {
        Acc { map: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(x) => x.add_assign(c),
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_vec(&mut self, v: &Vector, c: &Scalar) {
        for (i, x) in v.iter() {
            self.add(*i, &x.mul(c));
        }
    }

    pub fn finish(self) -> Vector {
        Vector { entries: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}
