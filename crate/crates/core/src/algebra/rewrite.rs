//! Normal forms in the ordered monomial basis by straightening.

use super::presentation::{PowerRule, Presentation};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use std::collections::{BTreeMap, HashMap};

pub(crate) type Poly = BTreeMap<Vec<u32>, Scalar>;

/// Memoised right multiplication of ordered monomials by single generators.
/// `None` results mark products that leave the truncation window.
pub(crate) struct Rewriter<'a> {
    p: &'a Presentation,
    memo: HashMap<(Vec<u32>, usize), Option<Poly>>,
    steps: usize,
}

fn add_into(acc: &mut Poly, m: Vec<u32>, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(x) => {
            x.add_assign(c);
            if x.is_zero() {
                acc.remove(&m);
            }
        }
        None => {
            acc.insert(m, c.clone());
        }
    }
}

impl<'a> Rewriter<'a> {
    pub fn new(p: &'a Presentation) -> Rewriter<'a> {
        Rewriter { p, memo: HashMap::new(), steps: 0 }
    }

    fn append(&self, m: &[u32], i: usize) -> Option<Poly> {
        let mut e = m.to_vec();
        e[i] += 1;
        match self.p.generators[i].power {
            PowerRule::Nilpotent(n) if e[i] >= n => return Some(Poly::new()),
            PowerRule::Cyclic(n) => e[i] %= n,
            _ => {}
        }
        if let Some(b) = self.p.bound {
            if self.p.weighted_degree(&e) > b {
                return None;
            }
        }
        let mut out = Poly::new();
        out.insert(e, self.p.field.one());
        Some(out)
    }

    /// `m * g_i` in normal form.
    pub fn mul_gen(&mut self, m: &[u32], i: usize) -> Result<Option<Poly>> {
        let key = (m.to_vec(), i);
        if let Some(r) = self.memo.get(&key) {
            return Ok(r.clone());
        }
        self.steps += 1;
        if self.steps > self.p.step_bound {
            return Err(Error::RewriteLimit(format!(
                "more than {} straightening steps",
                self.p.step_bound
            )));
        }
        let last = m.iter().rposition(|&k| k > 0);
        let out = match last {
            Some(j) if j > i => {
                let mut mp = m.to_vec();
                mp[j] -= 1;
                let rhs: Vec<(Scalar, Vec<u32>)> = match self.p.rule(j, i) {
                    Some(r) => r.rhs.clone(),
                    None => {
                        let mut w = vec![0; m.len()];
                        w[i] += 1;
                        w[j] += 1;
                        vec![(self.p.field.one(), w)]
                    }
                };
                let mut acc = Poly::new();
                let mut overflow = false;
                for (c, w) in rhs {
                    if c.is_zero() {
                        continue;
                    }
                    let mut start = Poly::new();
                    start.insert(mp.clone(), c);
                    match self.mul_word(start, &w)? {
                        Some(p) => {
                            for (k, v) in p {
                                add_into(&mut acc, k, &v);
                            }
                        }
                        None => {
                            overflow = true;
                            break;
                        }
                    }
                }
                if overflow {
                    None
                } else {
                    Some(acc)
                }
            }
            _ => self.append(m, i),
        };
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    /// `poly * w` for an ordered monomial `w`, letter by letter.
    pub fn mul_word(&mut self, mut poly: Poly, w: &[u32]) -> Result<Option<Poly>> {
        for (g, &k) in w.iter().enumerate() {
            for _ in 0..k {
                let mut next = Poly::new();
                for (m, c) in &poly {
                    match self.mul_gen(m, g)? {
                        Some(p) => {
                            for (k2, v) in p {
                                add_into(&mut next, k2, &v.mul(c));
                            }
                        }
                        None => return Ok(None),
                    }
                }
                poly = next;
            }
        }
        Ok(Some(poly))
    }
}
