use crate::error::{Error, Result};
use crate::scalars::{CycField, Scalar, ScalarFormat};
use serde::{Deserialize, Serialize};

/// Power relation on a single generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerRule {
    /// `g^N = 0`.
    Nilpotent(u32),
    /// `g^N = 1`.
    Cyclic(u32),
    /// No relation; bounded only by the truncation degree.
    Free,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub name: String,
    pub power: PowerRule,
    /// Weight in the truncation grading. Cyclic generators must weigh 0.
    pub weight: u32,
}

/// `g_hi g_lo -> sum c * (ordered monomial)` for `hi > lo`.
#[derive(Clone, Debug, PartialEq)]
pub struct SwapRule {
    pub hi: usize,
    pub lo: usize,
    pub rhs: Vec<(Scalar, Vec<u32>)>,
}

/// Generators in a fixed order, power relations, straightening rules for
/// out-of-order pairs and an optional truncation bound on the weighted
/// degree. Pairs without a rule commute.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub field: &'static CycField,
    pub generators: Vec<Generator>,
    pub swaps: Vec<SwapRule>,
    pub bound: Option<u32>,
    /// Maximum number of elementary rewriting steps.
    pub step_bound: usize,
}

impl Presentation {
    pub fn new(field: &'static CycField) -> Presentation {
        Presentation { field, generators: Vec::new(), swaps: Vec::new(), bound: None, step_bound: 5_000_000 }
    }

    pub fn generator(mut self, name: &str, power: PowerRule, weight: u32) -> Presentation {
        self.generators.push(Generator { name: name.into(), power, weight });
        self
    }

    pub fn truncate_at(mut self, bound: u32) -> Presentation {
        self.bound = Some(bound);
        self
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator '{name}'")))
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    /// Exponent vector of a single generator.
    pub fn letter(&self, i: usize) -> Vec<u32> {
        let mut e = vec![0; self.ngens()];
        e[i] = 1;
        e
    }

    /// Parse a monomial like `"x*^2 g x"` (already ordered or not; exponents
    /// are simply accumulated, so the caller must list generators in order).
    pub fn parse_monomial(&self, s: &str) -> Result<Vec<u32>> {
        let mut e = vec![0u32; self.ngens()];
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(e);
        }
        let mut last: Option<usize> = None;
        for tok in s.split_whitespace() {
            let (name, pow) = match tok.rsplit_once('^') {
                Some((n, p)) => (
                    n,
                    p.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in '{tok}'")))?,
                ),
                None => (tok, 1),
            };
            let i = self.gen_index(name)?;
            if last.is_some_and(|l| l > i) {
                return Err(Error::Parse(format!("monomial '{s}' is not in generator order")));
            }
            last = Some(i);
            e[i] += pow;
        }
        Ok(e)
    }

    /// Add `g_hi g_lo -> rhs`, replacing an existing rule for the pair.
    pub fn swap(mut self, hi: &str, lo: &str, rhs: Vec<(Scalar, Vec<u32>)>) -> Result<Presentation> {
        let (h, l) = (self.gen_index(hi)?, self.gen_index(lo)?);
        if h <= l {
            return Err(Error::BadRules(format!("rule {hi} {lo}: left side is already ordered")));
        }
        self.swaps.retain(|r| !(r.hi == h && r.lo == l));
        self.swaps.push(SwapRule { hi: h, lo: l, rhs });
        Ok(self)
    }

    pub fn rule(&self, hi: usize, lo: usize) -> Option<&SwapRule> {
        self.swaps.iter().find(|r| r.hi == hi && r.lo == lo)
    }

    /// Degree that rewriting must not increase: cyclic generators count 0.
    pub fn filtration_degree(&self, e: &[u32]) -> u32 {
        e.iter()
            .zip(&self.generators)
            .filter(|(_, g)| !matches!(g.power, PowerRule::Cyclic(_)))
            .map(|(k, _)| *k)
            .sum()
    }

    pub fn weighted_degree(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.generators).map(|(k, g)| k * g.weight).sum()
    }

    /// Structural check: every rule strictly decreases (filtration degree,
    /// inversions) since right-hand sides are ordered, and weights and
    /// exponent ranges are consistent.
    pub fn validate(&self) -> Result<()> {
        for g in &self.generators {
            match g.power {
                PowerRule::Cyclic(n) | PowerRule::Nilpotent(n) if n == 0 => {
                    return Err(Error::BadRules(format!("generator {} has power bound 0", g.name)))
                }
                PowerRule::Cyclic(_) if g.weight != 0 => {
                    return Err(Error::BadRules(format!("cyclic generator {} must have weight 0", g.name)))
                }
                PowerRule::Free if g.weight == 0 || self.bound.is_none() => {
                    return Err(Error::BadRules(format!(
                        "free generator {} needs positive weight and a truncation bound",
                        g.name
                    )))
                }
                _ => {}
            }
        }
        for r in &self.swaps {
            if r.hi <= r.lo || r.hi >= self.ngens() {
                return Err(Error::BadRules(format!("rule ({}, {}) is not an inversion", r.hi, r.lo)));
            }
            let mut lhs = vec![0; self.ngens()];
            lhs[r.hi] += 1;
            lhs[r.lo] += 1;
            let ld = self.filtration_degree(&lhs);
            let lw = self.weighted_degree(&lhs);
            for (c, w) in &r.rhs {
                if w.len() != self.ngens() {
                    return Err(Error::BadRules("rule monomial has wrong arity".into()));
                }
                if c.is_zero() {
                    continue;
                }
                if self.filtration_degree(w) > ld {
                    return Err(Error::BadRules(format!(
                        "rule {} {} raises the filtration degree",
                        self.generators[r.hi].name, self.generators[r.lo].name
                    )));
                }
                if self.weighted_degree(w) > lw {
                    return Err(Error::BadRules(format!(
                        "rule {} {} raises the truncation degree",
                        self.generators[r.hi].name, self.generators[r.lo].name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, fmt: &ScalarFormat) -> PresentationJson {
        let mono = |e: &[u32]| crate::linspace::render_label(
            &crate::linspace::BasisIndex::Mono(e.to_vec()),
            &self.generators.iter().map(|g| g.name.clone()).collect::<Vec<_>>(),
        );
        PresentationJson {
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson { name: g.name.clone(), power: g.power, weight: g.weight })
                .collect(),
            rules: self
                .swaps
                .iter()
                .map(|r| RuleJson {
                    left: format!("{} {}", self.generators[r.hi].name, self.generators[r.lo].name),
                    right: r.rhs.iter().map(|(c, w)| (fmt.render(c), mono(w))).collect(),
                })
                .collect(),
            truncation: self.bound,
        }
    }

    pub fn from_json(j: &PresentationJson, field: &'static CycField, fmt: &ScalarFormat) -> Result<Presentation> {
        let mut p = Presentation::new(field);
        for g in &j.generators {
            p = p.generator(&g.name, g.power, g.weight);
        }
        p.bound = j.truncation;
        for r in &j.rules {
            let names: Vec<&str> = r.left.split_whitespace().collect();
            if names.len() != 2 {
                return Err(Error::Parse(format!("rule left side '{}' must name two generators", r.left)));
            }
            let mut rhs = Vec::new();
            for (c, m) in &r.right {
                rhs.push((fmt.parse(c, field)?, p.parse_monomial(m)?));
            }
            p = p.swap(names[0], names[1], rhs)?;
        }
        p.validate()?;
        Ok(p)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GeneratorJson {
    pub name: String,
    pub power: PowerRule,
    #[serde(default)]
    pub weight: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RuleJson {
    /// Out-of-order pair, e.g. `"u y"`.
    pub left: String,
    /// Terms `(coefficient literal, ordered monomial)`.
    pub right: Vec<(String, String)>,
}

/// Serialized presentation with coefficient literals.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PresentationJson {
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub rules: Vec<RuleJson>,
    #[serde(default)]
    pub truncation: Option<u32>,
}
