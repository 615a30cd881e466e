//! User-supplied `(K, R, H, A)` data as JSON: presentations plus the images
//! of generators under every structure map. Elements are lists of
//! `[coefficient, basis label]` pairs, where labels of tensor products join
//! monomials with `" ⊗ "`, e.g. `["1/3", "g ⊗ g^2"]`.

use crate::algebra::{BasedAlgebra, Presentation, PresentationJson};
use crate::braid::{HopfAlgebra, KModule, QTHopf};
use crate::braided_hopf::{k_module_algebra, BraidedHopf, ModuleAlgebra};
use crate::error::{Error, Result};
use crate::linspace::{Acc, Vector};
use crate::scalars::{field_new, CycField, Scalar, ScalarFormat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

pub const INPUT_SCHEMA: &str = "bcenter.input/1";

/// `[coefficient literal, basis label]` pairs.
pub type Terms = Vec<(String, String)>;
/// Generator name to element.
pub type GenMap = BTreeMap<String, Terms>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct KInput {
    pub presentation: PresentationJson,
    pub coproduct: GenMap,
    pub counit: BTreeMap<String, String>,
    pub antipode: GenMap,
    pub r: Terms,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_inv: Option<Terms>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HInput {
    pub presentation: PresentationJson,
    /// `K` generator to (`H` generator to image).
    pub k_action: BTreeMap<String, GenMap>,
    pub coproduct: GenMap,
    pub counit: BTreeMap<String, String>,
    pub antipode: GenMap,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AInput {
    pub presentation: PresentationJson,
    pub k_action: BTreeMap<String, GenMap>,
    /// `H` generator to (`A` generator to image).
    pub h_action: BTreeMap<String, GenMap>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CustomInput {
    pub schema: String,
    /// Work in `Q(ζ_m)` with `m = conductor`.
    pub conductor: u32,
    /// `(m, e)`: coefficient literals may use `q = ζ_m^e`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<(u32, u32)>,
    pub k: KInput,
    pub h: HInput,
    pub a: AInput,
}

/// Objects built from a [`CustomInput`], each checked against its axioms.
#[derive(Clone, Debug)]
pub struct CustomSetup {
    pub field: &'static CycField,
    pub format: ScalarFormat,
    pub k: Arc<QTHopf>,
    pub h: Arc<BraidedHopf>,
    pub a: ModuleAlgebra,
}

fn format_for(field: &'static CycField, q: Option<(u32, u32)>) -> Result<ScalarFormat> {
    match q {
        None => Ok(ScalarFormat::plain()),
        Some((m, e)) if m == field.conductor() => Ok(ScalarFormat::new(field.zeta_pow(e as i64))),
        Some((m, _)) => Err(Error::InvalidArgument(format!(
            "q is given in Q(zeta_{m}) but the conductor is {}",
            field.conductor()
        ))),
    }
}

fn gen_names(alg: &BasedAlgebra) -> Vec<String> {
    alg.space().generator_names().to_vec()
}

/// Element of `⊗ algs` from labelled terms.
fn parse_terms(terms: &Terms, algs: &[&BasedAlgebra], fmt: &ScalarFormat, what: &str) -> Result<Vector> {
    let field = algs[0].field();
    let mut acc = Acc::new();
    for (c, label) in terms {
        let parts: Vec<&str> = if algs.len() == 1 { vec![label.as_str()] } else { label.split('⊗').collect() };
        if parts.len() != algs.len() {
            return Err(Error::Parse(format!("{what}: label '{label}' needs {} tensor factors", algs.len())));
        }
        let mut idx = 0;
        for (alg, p) in algs.iter().zip(parts) {
            idx = idx * alg.dim() + alg.mono(p.trim()).map_err(|e| Error::Parse(format!("{what}: {e}")))?;
        }
        acc.add(idx, &fmt.parse(c, field)?);
    }
    Ok(acc.finish())
}

fn render_terms(v: &Vector, algs: &[&BasedAlgebra], fmt: &ScalarFormat) -> Terms {
    v.iter()
        .map(|(i, c)| {
            let mut rest = *i;
            let mut parts = vec![String::new(); algs.len()];
            for (k, alg) in algs.iter().enumerate().rev() {
                parts[k] = alg.space().render(rest % alg.dim());
                rest /= alg.dim();
            }
            (fmt.render(c), parts.join(" ⊗ "))
        })
        .collect()
}

fn lookup<'a, T>(m: &'a BTreeMap<String, T>, key: &str, what: &str) -> Result<&'a T> {
    m.get(key).ok_or_else(|| Error::InvalidArgument(format!("{what}: no entry for generator '{key}'")))
}

fn per_generator(m: &GenMap, alg: &BasedAlgebra, algs: &[&BasedAlgebra], fmt: &ScalarFormat, what: &str) -> Result<Vec<Vector>> {
    check_keys(m.keys(), alg, what)?;
    gen_names(alg).iter().map(|g| parse_terms(lookup(m, g, what)?, algs, fmt, &format!("{what}({g})"))).collect()
}

fn check_keys<'a>(keys: impl Iterator<Item = &'a String>, alg: &BasedAlgebra, what: &str) -> Result<()> {
    let names = gen_names(alg);
    for k in keys {
        if !names.contains(k) {
            return Err(Error::InvalidArgument(format!("{what}: '{k}' is not a generator of {}", alg.name())));
        }
    }
    Ok(())
}

/// `action[i][j]`: generator `i` of the acting algebra on generator `j`.
fn action_table(
    m: &BTreeMap<String, GenMap>,
    acting: &BasedAlgebra,
    target: &BasedAlgebra,
    fmt: &ScalarFormat,
    what: &str,
) -> Result<Vec<Vec<Vector>>> {
    check_keys(m.keys(), acting, what)?;
    gen_names(acting)
        .iter()
        .map(|g| per_generator(lookup(m, g, what)?, target, &[target], fmt, &format!("{what} of {g}")))
        .collect()
}

fn counits(m: &BTreeMap<String, String>, alg: &BasedAlgebra, fmt: &ScalarFormat, what: &str) -> Result<Vec<Scalar>> {
    check_keys(m.keys(), alg, what)?;
    gen_names(alg).iter().map(|g| fmt.parse(lookup(m, g, what)?, alg.field())).collect()
}

impl CustomInput {
    pub fn from_json_str(s: &str) -> Result<CustomInput> {
        let c: CustomInput = serde_json::from_str(s)?;
        if c.schema != INPUT_SCHEMA {
            return Err(Error::InvalidArgument(format!("unknown schema '{}', expected '{INPUT_SCHEMA}'", c.schema)));
        }
        Ok(c)
    }

    /// Builds and checks `K`, `H` and `A` in that order; the first failing
    /// axiom aborts with its witness.
    pub fn build(&self) -> Result<CustomSetup> {
        let field = field_new(self.conductor)?;
        let fmt = format_for(field, self.q)?;
        let alg = |name: &str, p: &PresentationJson| {
            BasedAlgebra::from_presentation(name, Presentation::from_json(p, field, &fmt)?)
        };

        let ka = alg("K", &self.k.presentation)?;
        if ka.bound().is_some() {
            return Err(Error::InvalidArgument("K must be finite dimensional".into()));
        }
        let kk = [&ka, &ka];
        let hopf = HopfAlgebra::from_generators(
            "K",
            ka.clone(),
            &per_generator(&self.k.coproduct, &ka, &kk, &fmt, "K coproduct")?,
            &counits(&self.k.counit, &ka, &fmt, "K counit")?,
            &per_generator(&self.k.antipode, &ka, &[&ka], &fmt, "K antipode")?,
        )?;
        let r = parse_terms(&self.k.r, &kk, &fmt, "R")?;
        let r_inv = self.k.r_inv.as_ref().map(|t| parse_terms(t, &kk, &fmt, "R inverse")).transpose()?;
        let k = QTHopf::new(hopf, r, r_inv)?;
        k.check()?;
        let k = Arc::new(k);

        let ha = alg("H", &self.h.presentation)?;
        if ha.bound().is_some() {
            return Err(Error::InvalidArgument("H must be finite dimensional".into()));
        }
        let kmod: KModule = k_module_algebra(&k, &ha, &action_table(&self.h.k_action, &k.alg, &ha, &fmt, "K-action on H")?)?;
        let hh = [&ha, &ha];
        let h = BraidedHopf::from_generators(
            "H",
            k.clone(),
            ha.clone(),
            kmod,
            &per_generator(&self.h.coproduct, &ha, &hh, &fmt, "H coproduct")?,
            &counits(&self.h.counit, &ha, &fmt, "H counit")?,
            &per_generator(&self.h.antipode, &ha, &[&ha], &fmt, "H antipode")?,
        )?;
        h.check()?;
        let h = Arc::new(h);

        let aa = alg("A", &self.a.presentation)?;
        let k_on = action_table(&self.a.k_action, &k.alg, &aa, &fmt, "K-action on A")?;
        let h_on = action_table(&self.a.h_action, &h.alg, &aa, &fmt, "H-action on A")?;
        let a = ModuleAlgebra::from_generators(h.clone(), aa, &k_on, &h_on)?;
        a.check()?;
        Ok(CustomSetup { field, format: fmt, k, h, a })
    }

    /// Generator data of already built objects, in the input format.
    pub fn export(a: &ModuleAlgebra, q: Option<(u32, u32)>) -> Result<CustomInput> {
        let h = &a.h;
        let k = &h.k;
        let field = k.field();
        let fmt = format_for(field, q)?;
        let pres = |alg: &BasedAlgebra| {
            alg.presentation()
                .map(|p| p.to_json(&fmt))
                .ok_or_else(|| Error::InvalidArgument(format!("{} has no presentation", alg.name())))
        };
        let gens = |alg: &BasedAlgebra| -> Result<Vec<(String, usize)>> {
            gen_names(alg).into_iter().map(|g| Ok((g.clone(), alg.mono(&g)?))).collect()
        };
        let col = |m: &crate::linspace::LinearMap, i: usize| m.col(i).cloned().unwrap_or_else(Vector::zero);
        let scalar_of = |v: Vector| v.get(0).cloned().unwrap_or_else(|| field.zero());
        let action = |rho: &[crate::linspace::LinearMap], acting: &BasedAlgebra, target: &BasedAlgebra| -> Result<BTreeMap<String, GenMap>> {
            let tg = gens(target)?;
            gens(acting)?
                .into_iter()
                .map(|(g, gi)| {
                    let m = tg.iter().map(|(t, ti)| (t.clone(), render_terms(&col(&rho[gi], *ti), &[target], &fmt))).collect();
                    Ok((g, m))
                })
                .collect()
        };

        let ka = &k.alg;
        let kg = gens(ka)?;
        let kin = KInput {
            presentation: pres(ka)?,
            coproduct: kg.iter().map(|(g, i)| (g.clone(), render_terms(&col(&k.delta, *i), &[ka, ka], &fmt))).collect(),
            counit: kg.iter().map(|(g, i)| (g.clone(), fmt.render(&scalar_of(col(&k.eps, *i))))).collect(),
            antipode: kg.iter().map(|(g, i)| (g.clone(), render_terms(&col(&k.s, *i), &[ka], &fmt))).collect(),
            r: render_terms(&k.r, &[ka, ka], &fmt),
            r_inv: Some(render_terms(&k.r_inv, &[ka, ka], &fmt)),
        };

        let ha = &h.alg;
        let hg = gens(ha)?;
        let hin = HInput {
            presentation: pres(ha)?,
            k_action: action(&h.kmod.rho, ka, ha)?,
            coproduct: hg.iter().map(|(g, i)| (g.clone(), render_terms(&col(&h.delta, *i), &[ha, ha], &fmt))).collect(),
            counit: hg.iter().map(|(g, i)| (g.clone(), fmt.render(&scalar_of(col(&h.eps, *i))))).collect(),
            antipode: hg.iter().map(|(g, i)| (g.clone(), render_terms(&col(&h.s, *i), &[ha], &fmt))).collect(),
        };

        let aa = &a.alg;
        let ag = gens(aa)?;
        let one = field.one();
        let h_action = hg
            .iter()
            .map(|(g, i)| {
                let m = ag
                    .iter()
                    .map(|(t, ti)| {
                        let v = a.act(&Vector::unit(*i, one.clone()), &Vector::unit(*ti, one.clone()))?;
                        Ok((t.clone(), render_terms(&v, &[aa], &fmt)))
                    })
                    .collect::<Result<GenMap>>()?;
                Ok((g.clone(), m))
            })
            .collect::<Result<_>>()?;
        let ain = AInput { presentation: pres(aa)?, k_action: action(&a.kmod.rho, ka, aa)?, h_action };
        Ok(CustomInput { schema: INPUT_SCHEMA.into(), conductor: field.conductor(), q, k: kin, h: hin, a: ain })
    }
}
