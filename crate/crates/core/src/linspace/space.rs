use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Label of a basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasisIndex {
    /// Basis of the one-dimensional unit space.
    Unit,
    /// Ordered monomial: exponent per generator.
    Mono(Vec<u32>),
    /// Formal tensor of factor labels.
    Tensor(Vec<BasisIndex>),
    /// Free-form label.
    Named(String),
}

struct SpaceData {
    name: String,
    labels: Vec<BasisIndex>,
    /// Generator names used to render `Mono` labels, per leg.
    gens: Vec<String>,
    /// Atomic tensor factors; `None` for an atomic space.
    legs: Option<Vec<BasedSpace>>,
    lookup: OnceLock<HashMap<BasisIndex, usize>>,
}

/// Vector space with an ordered, labelled basis. Cloning is cheap.
#[derive(Clone)]
pub struct BasedSpace(Arc<SpaceData>);

impl fmt::Debug for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.name, self.dim())
    }
}

impl PartialEq for BasedSpace {
    fn eq(&self, o: &BasedSpace) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
            || (self.0.labels == o.0.labels && self.0.gens == o.0.gens && self.0.legs == o.0.legs)
    }
}

impl BasedSpace {
    /// Atomic space with the given labels; `gens` names the generators that
    /// `Mono` labels refer to.
    pub fn new(name: &str, labels: Vec<BasisIndex>, gens: Vec<String>) -> BasedSpace {
        BasedSpace(Arc::new(SpaceData {
            name: name.to_string(),
            labels,
            gens,
            legs: None,
            lookup: OnceLock::new(),
        }))
    }

    /// Space with `n` anonymous basis vectors `e0 … e{n-1}`.
    pub fn anonymous(name: &str, n: usize) -> BasedSpace {
        BasedSpace::new(name, (0..n).map(|i| BasisIndex::Named(format!("e{i}"))).collect(), vec![])
    }

    /// The ground field as a one-dimensional space; the empty tensor product.
    pub fn unit() -> BasedSpace {
        static UNIT: OnceLock<BasedSpace> = OnceLock::new();
        UNIT.get_or_init(|| {
            BasedSpace(Arc::new(SpaceData {
                name: "k".into(),
                labels: vec![BasisIndex::Unit],
                gens: vec![],
                legs: Some(vec![]),
                lookup: OnceLock::new(),
            }))
        })
        .clone()
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[BasisIndex] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &BasisIndex {
        &self.0.labels[i]
    }

    pub fn generator_names(&self) -> &[String] {
        &self.0.gens
    }

    pub fn index_of(&self, b: &BasisIndex) -> Option<usize> {
        self.0
            .lookup
            .get_or_init(|| self.0.labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect())
            .get(b)
            .copied()
    }

    /// Atomic tensor factors (a single entry for an atomic space).
    pub fn legs(&self) -> Vec<BasedSpace> {
        match &self.0.legs {
            Some(l) => l.clone(),
            None => vec![self.clone()],
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.0.legs.is_none()
    }

    /// Render basis vector `i`.
    pub fn render(&self, i: usize) -> String {
        match &self.0.legs {
            Some(legs) if legs.is_empty() => "1".into(),
            Some(legs) => {
                let mut parts = Vec::with_capacity(legs.len());
                let mut rest = i;
                let dims: Vec<usize> = legs.iter().map(|l| l.dim()).collect();
                let mut idx = vec![0; legs.len()];
                for k in (0..legs.len()).rev() {
                    idx[k] = rest % dims[k];
                    rest /= dims[k];
                }
                for (k, l) in legs.iter().enumerate() {
                    parts.push(l.render(idx[k]));
                }
                parts.join(" ⊗ ")
            }
            None => render_label(&self.0.labels[i], &self.0.gens),
        }
    }
}

/// Render a monomial label like `x*^2 g x`.
pub fn render_label(b: &BasisIndex, gens: &[String]) -> String {
    match b {
        BasisIndex::Unit => "1".into(),
        BasisIndex::Named(s) => s.clone(),
        BasisIndex::Mono(e) => {
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let g = gens.get(i).cloned().unwrap_or_else(|| format!("g{i}"));
                    if k == 1 {
                        g
                    } else {
                        format!("{g}^{k}")
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join(" ")
            }
        }
        BasisIndex::Tensor(ts) => ts.iter().map(|t| render_label(t, gens)).collect::<Vec<_>>().join(" ⊗ "),
    }
}

/// `V ⊗ W` with lexicographic basis order: index `i * dim W + j`.
pub fn tensor_space(v: &BasedSpace, w: &BasedSpace) -> BasedSpace {
    tensor_spaces(&[v.clone(), w.clone()])
}

/// Tensor product of several spaces, flattened into atomic legs.
pub fn tensor_spaces(factors: &[BasedSpace]) -> BasedSpace {
    let legs: Vec<BasedSpace> = factors.iter().flat_map(|f| f.legs()).collect();
    if legs.is_empty() {
        return BasedSpace::unit();
    }
    if legs.len() == 1 {
        return legs[0].clone();
    }
    let mut labels = vec![Vec::new()];
    for l in &legs {
        let mut next = Vec::with_capacity(labels.len() * l.dim());
        for pre in &labels {
            for b in l.labels() {
                let mut t: Vec<BasisIndex> = pre.clone();
                t.push(b.clone());
                next.push(t);
            }
        }
        labels = next;
    }
    let name = legs.iter().map(|l| l.name().to_string()).collect::<Vec<_>>().join("⊗");
    BasedSpace(Arc::new(SpaceData {
        name,
        labels: labels.into_iter().map(BasisIndex::Tensor).collect(),
        gens: vec![],
        legs: Some(legs),
        lookup: OnceLock::new(),
    }))
}

/// Product of leg dimensions.
pub fn legs_dim(legs: &[BasedSpace]) -> usize {
    legs.iter().map(|l| l.dim()).product()
}
