//! Graded comparison of two computed centers.

use super::CenterResult;
use crate::error::Result;
use crate::linspace::Subspace;
use crate::scalars::ScalarFormat;
use serde::Serialize;
use std::collections::BTreeMap;

/// `(weight, degree) ↦ dim(center ∩ F_degree ∩ E_weight)` for every degree
/// up to a cutoff; `F_d` is the span of basis elements of degree `≤ d` and
/// `E_w` the span of basis elements of weight `w`.
pub type Signature = BTreeMap<(String, u32), usize>;

pub fn signature(c: &CenterResult, max_degree: u32) -> Signature {
    signature_with(c, max_degree, &ScalarFormat::plain())
}

/// [`signature`] with weights rendered in `fmt`.
pub fn signature_with(c: &CenterResult, max_degree: u32, fmt: &ScalarFormat) -> Signature {
    let a = &c.ambient;
    let labels: Vec<String> = match &c.weights {
        Some(w) => w.iter().map(|x| fmt.render(x)).collect(),
        None => vec![String::new(); a.dim()],
    };
    let mut names: Vec<&String> = labels.iter().collect();
    names.sort();
    names.dedup();
    let sub = c.subspace();
    let one = a.one();
    let mut out = Signature::new();
    for w in names {
        for d in 0..=max_degree {
            let part = sub.restrict(&|i| a.degree(i) <= d && &labels[i] == w, &one);
            if part.dim() > 0 {
                out.insert((w.clone(), d), part.dim());
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Comparison {
    /// Same labels, same basis, same structure constants within the common
    /// safe degree: the identity on coordinates is a graded isomorphism.
    IsomorphicAsGraded { degree: u32 },
    /// The dimension signatures differ at `(weight, degree)`.
    Distinguishable { weight: String, degree: u32, left: usize, right: usize },
    /// Equal signatures but no explicit isomorphism was found.
    Inconclusive { degree: u32 },
}

/// Compares two centers within their common safe degree. Distinguishable
/// centers rule out an equivalence that would identify them; equal
/// signatures alone prove nothing.
pub fn compare_centers(c1: &CenterResult, c2: &CenterResult) -> Result<Comparison> {
    compare_centers_with(c1, c2, &ScalarFormat::plain())
}

/// [`compare_centers`] with weights rendered in `fmt`.
pub fn compare_centers_with(c1: &CenterResult, c2: &CenterResult, fmt: &ScalarFormat) -> Result<Comparison> {
    let degree = c1.safe_degree.min(c2.safe_degree);
    let (s1, s2) = (signature_with(c1, degree, fmt), signature_with(c2, degree, fmt));
    let keys: std::collections::BTreeSet<&(String, u32)> = s1.keys().chain(s2.keys()).collect();
    for k in keys {
        let (l, r) = (s1.get(k).copied().unwrap_or(0), s2.get(k).copied().unwrap_or(0));
        if l != r {
            return Ok(Comparison::Distinguishable { weight: k.0.clone(), degree: k.1, left: l, right: r });
        }
    }
    if same_structure(c1, c2, degree)? {
        Ok(Comparison::IsomorphicAsGraded { degree })
    } else {
        Ok(Comparison::Inconclusive { degree })
    }
}

fn same_structure(c1: &CenterResult, c2: &CenterResult, degree: u32) -> Result<bool> {
    let (a1, a2) = (&c1.ambient, &c2.ambient);
    if a1.dim() != a2.dim() || a1.field() != a2.field() {
        return Ok(false);
    }
    if (0..a1.dim()).any(|i| a1.space().render(i) != a2.space().render(i) || a1.degree(i) != a2.degree(i)) {
        return Ok(false);
    }
    let (b1, b2): (Subspace, Subspace) = (c1.within(degree), c2.within(degree));
    if b1 != b2 {
        return Ok(false);
    }
    let basis = b1.basis();
    for x in &basis {
        for y in &basis {
            if a1.degree_of(x) + a1.degree_of(y) > degree {
                continue;
            }
            if a1.mul(x, y)? != a2.mul(x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `small`, restricted to its safe degree, equals `big` restricted
/// to the same degree; basis elements are matched by their labels, so the
/// two ambients may be truncated differently.
pub fn restriction_agrees(small: &CenterResult, big: &CenterResult) -> bool {
    let (from, to) = (small.ambient.space(), big.ambient.space());
    let idx: std::collections::HashMap<String, usize> = (0..to.dim()).map(|i| (to.render(i), i)).collect();
    let d = small.safe_degree;
    let mut lifted = Vec::new();
    for v in small.within(d).basis() {
        if v.iter().any(|(i, _)| !idx.contains_key(&from.render(*i))) {
            return false;
        }
        lifted.push(v.map_indices(|i| idx[&from.render(i)]));
    }
    Subspace::span(to, &lifted) == big.within(d)
}
