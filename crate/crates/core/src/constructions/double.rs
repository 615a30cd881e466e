use super::smash::DualPairing;
use crate::algebra::{BasedAlgebra, PowerRule, Presentation, SwapRule};
use crate::braid::{extend_on_monomials, fail, unit_index, HopfAlgebra, KModule};
use crate::braided_hopf::BraidedHopf;
use crate::error::{Error, Result};
use crate::linspace::{inverse, rank, Acc, BasedSpace, BasisIndex, LinearMap, Vector};
use crate::scalars::Scalar;
use crate::yd::YDModule;
use std::sync::Arc;

fn exps(alg: &BasedAlgebra, i: usize) -> &[u32] {
    match alg.space().label(i) {
        BasisIndex::Mono(e) => e,
        _ => &[],
    }
}

fn letter_index(alg: &BasedAlgebra, g: usize) -> Result<usize> {
    let p = alg.presentation().ok_or_else(|| Error::Unsupported(format!("{} is not presented", alg.name())))?;
    alg.space()
        .index_of(&BasisIndex::Mono(p.letter(g)))
        .ok_or_else(|| Error::Inconsistent(format!("generator {g} of {} is not a basis element", alg.name())))
}

fn act(m: &KModule, k: &Vector, v: &Vector) -> Result<Vector> {
    let mut acc = Acc::new();
    for (i, c) in k.iter() {
        acc.add_vec(&m.rho[*i].apply(v)?, c);
    }
    Ok(acc.finish())
}

/// Finite presented algebras glued in a fixed order: the generators of all
/// factors, each factor's own rules, and cross rules supplied later. The
/// PBW basis is indexed by tuples of factor basis elements.
struct Glue {
    factors: Vec<BasedAlgebra>,
    offsets: Vec<usize>,
    pres: Presentation,
}

impl Glue {
    fn new(factors: Vec<BasedAlgebra>) -> Result<Glue> {
        let f = factors[0].field();
        let mut pres = Presentation::new(f);
        let mut offsets = Vec::new();
        for a in &factors {
            let p = a.presentation().ok_or_else(|| Error::Unsupported(format!("{} is not presented", a.name())))?;
            if p.bound.is_some() {
                return Err(Error::Unsupported(format!("{} must be finite", a.name())));
            }
            offsets.push(pres.ngens());
            let off = pres.ngens();
            for g in &p.generators {
                pres = pres.generator(&g.name, g.power, g.weight);
            }
            for r in &p.swaps {
                pres.swaps.push(SwapRule { hi: r.hi + off, lo: r.lo + off, rhs: Vec::new() });
            }
        }
        let mut glue = Glue { factors, offsets, pres };
        // shift the factor rules now that the arity is known
        let mut k = 0;
        for (fi, a) in glue.factors.iter().enumerate() {
            for r in &a.presentation().unwrap().swaps {
                glue.pres.swaps[k].rhs = r.rhs.iter().map(|(c, e)| (c.clone(), glue_exps(&glue.offsets, glue.pres.ngens(), fi, e))).collect();
                k += 1;
            }
        }
        Ok(glue)
    }

    fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|a| a.dim()).collect()
    }

    /// Exponents of the tuple `idx` (flattened, first factor slowest).
    fn tuple_exps(&self, mut idx: usize) -> Vec<u32> {
        let dims = self.dims();
        let mut parts = vec![0; dims.len()];
        for i in (0..dims.len()).rev() {
            parts[i] = idx % dims[i];
            idx /= dims[i];
        }
        let mut e = Vec::with_capacity(self.pres.ngens());
        for (a, &p) in self.factors.iter().zip(&parts) {
            e.extend_from_slice(exps(a, p));
        }
        e
    }

    fn terms(&self, v: &Vector) -> Vec<(Scalar, Vec<u32>)> {
        v.iter().map(|(i, c)| (c.clone(), self.tuple_exps(*i))).collect()
    }

    fn rule(&mut self, hi: usize, lo: usize, v: &Vector) {
        let rhs = self.terms(v);
        self.pres.swaps.push(SwapRule { hi, lo, rhs });
    }

    /// Tuple index to basis index of the glued algebra.
    fn index_map(&self, alg: &BasedAlgebra) -> Result<Vec<usize>> {
        let n: usize = self.dims().iter().product();
        (0..n)
            .map(|t| {
                alg.space()
                    .index_of(&BasisIndex::Mono(self.tuple_exps(t)))
                    .ok_or_else(|| Error::Inconsistent("PBW basis is not the tensor product basis".into()))
            })
            .collect()
    }
}

fn glue_exps(offsets: &[usize], n: usize, factor: usize, e: &[u32]) -> Vec<u32> {
    let mut out = vec![0; n];
    out[offsets[factor]..offsets[factor] + e.len()].copy_from_slice(e);
    out
}

/// Tensor of two vectors on glued tuple indices, mapped to `[D, D]`.
fn pair_vec(index: &[usize], d: usize, l: &Vector, r: &Vector) -> Vector {
    let mut acc = Acc::new();
    for (i, a) in l.iter() {
        for (j, b) in r.iter() {
            acc.add(index[*i] * d + index[*j], &a.mul(b));
        }
    }
    acc.finish()
}

fn remap(index: &[usize], v: &Vector) -> Vector {
    Vector::from_pairs(v.iter().map(|(i, c)| (index[*i], c.clone())))
}

/// The bosonization `H ⋊ K` of a Hopf algebra in `Mod_K`: generators of
/// `H` then of `K`, `d b = (d₁·b) d₂`, `Δ(b) = b₁R⁽²⁾ ⊗ R⁽¹⁾·b₂`,
/// `S(b) = S_K(R⁽²⁾)(R⁽¹⁾·S_H(b))`.
#[derive(Clone, Debug)]
pub struct Bosonization {
    pub hopf: HopfAlgebra,
    pub h: Arc<BraidedHopf>,
    /// `(h, k)` tuple index to basis index.
    pub index: Vec<usize>,
}

impl Bosonization {
    pub fn new(h: Arc<BraidedHopf>) -> Result<Bosonization> {
        let k = h.k.clone();
        let f = h.alg.field();
        let one = f.one();
        let (dh, dk) = (h.dim(), k.dim());
        let mut glue = Glue::new(vec![h.alg.clone(), k.alg.clone()])?;
        let (nh, nk) = (glue.factors[0].presentation().unwrap().ngens(), glue.factors[1].presentation().unwrap().ngens());
        for dg in 0..nk {
            let kd = letter_index(&k.alg, dg)?;
            for bg in 0..nh {
                let hb = letter_index(&h.alg, bg)?;
                let mut acc = Acc::new();
                for (idx, c) in k.delta.col(kd).unwrap().iter() {
                    let (d1, d2) = (idx / dk, idx % dk);
                    for (i, x) in h.kmod.rho[d1].col(hb).unwrap().iter() {
                        acc.add(i * dk + d2, &c.mul(x));
                    }
                }
                glue.rule(nh + dg, bg, &acc.finish());
            }
        }
        let alg = BasedAlgebra::from_presentation(&format!("{}⋊{}", h.name, k.name), glue.pres.clone())?;
        let index = glue.index_map(&alg)?;
        let d = alg.dim();
        let (uh, uk) = (unit_index(&h.alg), unit_index(&k.alg));
        let eh = |v: &Vector| remap(&index, &Vector::from_pairs(v.iter().map(|(i, c)| (i * dk + uk, c.clone()))));
        let ek = |v: &Vector| remap(&index, &Vector::from_pairs(v.iter().map(|(i, c)| (uh * dk + i, c.clone()))));
        let mut dg = Vec::new();
        let mut eg = Vec::new();
        let mut sg = Vec::new();
        for bg in 0..nh {
            let b = letter_index(&h.alg, bg)?;
            let mut acc = Acc::new();
            for (idx, c) in h.delta.col(b).unwrap().iter() {
                let (b1, b2) = (idx / dh, idx % dh);
                for (cr, s1, s2) in k.r_terms() {
                    let left = Vector::single(b1 * dk + s2, c.mul(&cr));
                    let right = h.kmod.rho[s1].col(b2).unwrap();
                    let right = Vector::from_pairs(right.iter().map(|(i, x)| (i * dk + uk, x.clone())));
                    acc.add_vec(&pair_vec(&index, d, &left, &right), &one);
                }
            }
            dg.push(acc.finish());
            eg.push(h.counit(b));
            let sb = h.s.col(b).unwrap();
            let mut acc = Acc::new();
            for (cr, s1, s2) in k.r_terms() {
                let kpart = ek(k.s.col(s2).unwrap());
                let hpart = eh(&h.kmod.rho[s1].apply(sb)?);
                acc.add_vec(&alg.mul(&kpart, &hpart)?, &cr);
            }
            sg.push(acc.finish());
        }
        for kg in 0..nk {
            let kd = letter_index(&k.alg, kg)?;
            let mut acc = Acc::new();
            for (idx, c) in k.delta.col(kd).unwrap().iter() {
                let (d1, d2) = (idx / dk, idx % dk);
                acc.add(index[uh * dk + d1] * d + index[uh * dk + d2], c);
            }
            dg.push(acc.finish());
            eg.push(k.counit(kd));
            sg.push(ek(k.s.col(kd).unwrap()));
        }
        let hopf = HopfAlgebra::from_generators(&format!("{}⋊{}", h.name, k.name), alg, &dg, &eg, &sg)?;
        Ok(Bosonization { hopf, h, index })
    }

    /// Basis index of `e_h e_k`.
    pub fn pair(&self, ih: usize, ik: usize) -> usize {
        self.index[ih * self.h.k.dim() + ik]
    }

    /// YD data over `H ⋊ K` from a YD module in `Mod_K`: action
    /// `(b d)·v = b·(d·v)` and coaction `v₍₋₁₎R⁽²⁾ ⊗ R⁽¹⁾·v₍₀₎`, as an
    /// ordinary YD module (over `K = k`).
    pub fn bosonize_yd(&self, v: &YDModule) -> Result<YDModule> {
        let h = &self.h;
        let k = &h.k;
        let f = h.alg.field();
        let (dk, dv) = (k.dim(), v.dim());
        let bh = Arc::new(BraidedHopf::from_ordinary(&self.hopf)?);
        let space = v.space().clone();
        let kmod = KModule::trivial(&bh.k, &space);
        let db = self.hopf.dim();
        let mut inv = vec![0usize; db];
        for (t, &i) in self.index.iter().enumerate() {
            inv[i] = t;
        }
        let mut dom = bh.alg.space().legs();
        dom.extend(space.legs());
        let action = LinearMap::from_fn(dom.clone(), space.legs(), |col| {
            let (bi, vi) = (col / dv, col % dv);
            let (ih, ik) = (inv[bi] / dk, inv[bi] % dk);
            let kv = v.kmod.rho[ik].col(vi).unwrap();
            Ok(Some(v.act(&Vector::unit(ih, f.one()), kv)?))
        })?;
        let coaction = LinearMap::from_fn(space.legs(), dom, |vi| {
            let dvv = v.coact(&Vector::unit(vi, f.one()))?;
            let mut acc = Acc::new();
            for (idx, c) in dvv.iter() {
                let (hm, v0) = (idx / dv, idx % dv);
                for (cr, s1, s2) in k.r_terms() {
                    let bi = self.index[hm * dk + s2];
                    for (w, x) in v.kmod.rho[s1].col(v0).unwrap().iter() {
                        acc.add(bi * dv + w, &c.mul(&cr).mul(x));
                    }
                }
            }
            Ok(Some(acc.finish()))
        })?;
        Ok(YDModule::new(bh, kmod, action, coaction))
    }
}

/// `Drin_K(H*, H)` on `H* ⊗ K ⊗ H` with generators ordered `(H*, K, H)`.
/// The cross rule for `b c` (with `b ∈ H`, `c ∈ H*` generators) is obtained
/// by solving the defining exchange relation for the out-of-order products.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    pub hopf: HopfAlgebra,
    pub pairing: DualPairing,
    /// `(c, d, b)` tuple index to basis index.
    pub index: Vec<usize>,
}

impl DrinfeldDouble {
    pub fn new(p: &DualPairing) -> Result<DrinfeldDouble> {
        let (h, hd) = (p.h.clone(), p.dual.clone());
        let k = h.k.clone();
        let f = h.alg.field();
        let one = f.one();
        let (dc, dk, dh) = (hd.dim(), k.dim(), h.dim());
        let mut glue = Glue::new(vec![hd.alg.clone(), k.alg.clone(), h.alg.clone()])?;
        let nc = hd.alg.presentation().unwrap().ngens();
        let nk = k.alg.presentation().unwrap().ngens();
        let nb = h.alg.presentation().unwrap().ngens();
        let (uc, uk, ub) = (unit_index(&hd.alg), unit_index(&k.alg), unit_index(&h.alg));
        let tri = |c: usize, d: usize, b: usize| (c * dk + d) * dh + b;
        // d c = (d₁·c) d₂ as a tuple vector, for K basis d and H* vector c
        let kc = |d: usize, c: &Vector| -> Vector {
            let mut acc = Acc::new();
            for (idx, x) in k.delta.col(d).unwrap().iter() {
                let (d1, d2) = (idx / dk, idx % dk);
                for (i, y) in hd.kmod.rho[d1].apply(c).unwrap().iter() {
                    acc.add(tri(*i, d2, ub), &x.mul(y));
                }
            }
            acc.finish()
        };
        // b d = d₂ (S⁻¹(d₁)·b)
        let bk = |b: &Vector, d: usize| -> Result<Vector> {
            let mut acc = Acc::new();
            for (idx, x) in k.delta.col(d).unwrap().iter() {
                let (d1, d2) = (idx / dk, idx % dk);
                let sd1 = k.s_inv.col(d1).unwrap();
                for (i, y) in act(&h.kmod, sd1, b)?.iter() {
                    acc.add(tri(uc, d2, *i), &x.mul(y));
                }
            }
            Ok(acc.finish())
        };
        // (c ⊗ d ⊗ 1)(1 ⊗ d' ⊗ b) for tuple vectors of those shapes
        let join = |l: &Vector, r: &Vector| -> Result<Vector> {
            let mut acc = Acc::new();
            for (i, x) in l.iter() {
                let (c, d) = (i / (dk * dh), (i / dh) % dk);
                for (j, y) in r.iter() {
                    let (d2, b) = ((j / dh) % dk, j % dh);
                    let dd = k.alg.mul_basis(d, d2).unwrap();
                    for (m, z) in dd.iter() {
                        acc.add(tri(c, *m, b), &x.mul(y).mul(z));
                    }
                }
            }
            Ok(acc.finish())
        };
        let cgen: Vec<usize> = (0..nc).map(|g| letter_index(&hd.alg, g)).collect::<Result<_>>()?;
        let kgen: Vec<usize> = (0..nk).map(|g| letter_index(&k.alg, g)).collect::<Result<_>>()?;
        let bgen: Vec<usize> = (0..nb).map(|g| letter_index(&h.alg, g)).collect::<Result<_>>()?;
        for (gi, &d) in kgen.iter().enumerate() {
            for (ci, &c) in cgen.iter().enumerate() {
                glue.rule(nc + gi, ci, &kc(d, &Vector::unit(c, one.clone())));
            }
        }
        for (bi, &b) in bgen.iter().enumerate() {
            for (gi, &d) in kgen.iter().enumerate() {
                glue.rule(nc + nk + bi, nc + gi, &bk(&Vector::unit(b, one.clone()), d)?);
            }
        }
        // exchange relation: Σ ⟨c₂, b₁⟩ (r⁻¹₁·b₂)(r⁻¹₂·c₁) = Σ ⟨r⁻¹₂·c₁, s₁·b₂⟩ r⁻¹₁ c₂ b₁ s₂
        let m = nb * nc;
        let unknown = |bi: usize, ci: usize| bi * nc + ci;
        let mut mcols: Vec<Acc> = (0..m).map(|_| Acc::new()).collect();
        let mut rhs: Vec<Vector> = Vec::with_capacity(m);
        let rinv = k.r_inv_terms();
        let r = k.r_terms();
        for &b in &bgen {
            for &c in &cgen {
                let eq = rhs.len();
                let mut known = Acc::new();
                for (idb, xb) in h.delta.col(b).unwrap().iter() {
                    let (b1, b2) = (idb / dh, idb % dh);
                    for (idc, xc) in hd.delta.col(c).unwrap().iter() {
                        let (c1, c2) = (idc / dc, idc % dc);
                        let pv = p.value(b1, c2);
                        if pv.is_zero() {
                            continue;
                        }
                        for (cr, r1, r2) in &rinv {
                            let coef = xb.mul(xc).mul(&pv).mul(cr);
                            let hb = h.kmod.rho[*r1].col(b2).unwrap();
                            let cc = hd.kmod.rho[*r2].col(c1).unwrap();
                            for (i, x) in hb.iter() {
                                for (j, y) in cc.iter() {
                                    let cf = coef.mul(x).mul(y);
                                    if *i == ub {
                                        known.add(tri(*j, uk, ub), &cf);
                                    } else if *j == uc {
                                        known.add(tri(uc, uk, *i), &cf);
                                    } else {
                                        let (Some(bi), Some(ci)) = (
                                            bgen.iter().position(|g| g == i),
                                            cgen.iter().position(|g| g == j),
                                        ) else {
                                            return Err(Error::Unsupported(format!(
                                                "exchange relation reaches {} {} beyond generators",
                                                h.alg.space().render(*i),
                                                hd.alg.space().render(*j)
                                            )));
                                        };
                                        mcols[unknown(bi, ci)].add(eq, &cf);
                                    }
                                }
                            }
                        }
                    }
                }
                let mut right = Acc::new();
                for (idb, xb) in h.delta.col(b).unwrap().iter() {
                    let (b1, b2) = (idb / dh, idb % dh);
                    for (idc, xc) in hd.delta.col(c).unwrap().iter() {
                        let (c1, c2) = (idc / dc, idc % dc);
                        for (cr, r1, r2) in &rinv {
                            let cv = hd.kmod.rho[*r2].col(c1).unwrap();
                            for (cs, s1, s2) in &r {
                                let bv = h.kmod.rho[*s1].col(b2).unwrap();
                                let pv = p.eval(bv, cv);
                                if pv.is_zero() {
                                    continue;
                                }
                                let l = kc(*r1, &Vector::unit(c2, one.clone()));
                                let rr = bk(&Vector::unit(b1, one.clone()), *s2)?;
                                right.add_vec(&join(&l, &rr)?, &xb.mul(xc).mul(cr).mul(cs).mul(&pv));
                            }
                        }
                    }
                }
                rhs.push(right.finish().sub(&known.finish()));
            }
        }
        let usp = BasedSpace::anonymous("pairs", m);
        let mm = LinearMap::between(&usp, &usp, mcols.into_iter().map(|a| a.finish()).collect());
        let minv = inverse(&mm, &one)
            .map_err(|_| Error::Unsupported("exchange relation does not determine the cross products".into()))?;
        for (bi, _) in bgen.iter().enumerate() {
            for (ci, _) in cgen.iter().enumerate() {
                let u = unknown(bi, ci);
                let mut acc = Acc::new();
                for (eq, rv) in rhs.iter().enumerate() {
                    if let Some(c) = minv.col(eq).unwrap().get(u) {
                        acc.add_vec(rv, c);
                    }
                }
                glue.rule(nc + nk + bi, ci, &acc.finish());
            }
        }
        let name = format!("Drin({}, {})", hd.name, h.name);
        let alg = BasedAlgebra::from_presentation(&name, glue.pres.clone())?;
        let index = glue.index_map(&alg)?;
        let d = alg.dim();
        let (mut dg, mut eg, mut sg) = (Vec::new(), Vec::new(), Vec::new());
        for &c in &cgen {
            // Δ(c) = R⁻⁽¹⁾c₂ ⊗ R⁻⁽²⁾·c₁
            let mut acc = Acc::new();
            for (idc, xc) in hd.delta.col(c).unwrap().iter() {
                let (c1, c2) = (idc / dc, idc % dc);
                for (cr, r1, r2) in &rinv {
                    let l = kc(*r1, &Vector::unit(c2, one.clone()));
                    let rv = hd.kmod.rho[*r2].col(c1).unwrap();
                    let rv = Vector::from_pairs(rv.iter().map(|(i, x)| (tri(*i, uk, ub), x.clone())));
                    acc.add_vec(&pair_vec(&index, d, &l, &rv), &xc.mul(cr));
                }
            }
            dg.push(acc.finish());
            eg.push(hd.counit(c));
            // S(c) = S_K(R⁻⁽¹⁾)(R⁻⁽²⁾·S⁻¹(c))
            let sc = hd.s_inv.col(c).unwrap();
            let mut acc = Acc::new();
            for (cr, r1, r2) in &rinv {
                let cv = hd.kmod.rho[*r2].apply(sc)?;
                for (kk, y) in k.s.col(*r1).unwrap().iter() {
                    acc.add_vec(&kc(*kk, &cv), &cr.mul(y));
                }
            }
            sg.push(remap(&index, &acc.finish()));
        }
        for &kd in &kgen {
            let mut acc = Acc::new();
            for (idx, x) in k.delta.col(kd).unwrap().iter() {
                let (d1, d2) = (idx / dk, idx % dk);
                acc.add(index[tri(uc, d1, ub)] * d + index[tri(uc, d2, ub)], x);
            }
            dg.push(acc.finish());
            eg.push(k.counit(kd));
            let sk = k.s.col(kd).unwrap();
            sg.push(remap(&index, &Vector::from_pairs(sk.iter().map(|(i, x)| (tri(uc, *i, ub), x.clone())))));
        }
        for &b in &bgen {
            // Δ(b) = b₁R⁽²⁾ ⊗ R⁽¹⁾·b₂
            let mut acc = Acc::new();
            for (idb, xb) in h.delta.col(b).unwrap().iter() {
                let (b1, b2) = (idb / dh, idb % dh);
                for (cs, s1, s2) in &r {
                    let l = bk(&Vector::unit(b1, one.clone()), *s2)?;
                    let rv = h.kmod.rho[*s1].col(b2).unwrap();
                    let rv = Vector::from_pairs(rv.iter().map(|(i, x)| (tri(uc, uk, *i), x.clone())));
                    acc.add_vec(&pair_vec(&index, d, &l, &rv), &xb.mul(cs));
                }
            }
            dg.push(acc.finish());
            eg.push(h.counit(b));
            // S(b) = S_K(R⁽²⁾)(R⁽¹⁾·S(b))
            let sb = h.s.col(b).unwrap();
            let mut acc = Acc::new();
            for (cs, s1, s2) in &r {
                let bv = h.kmod.rho[*s1].apply(sb)?;
                for (kk, y) in k.s.col(*s2).unwrap().iter() {
                    for (i, z) in bv.iter() {
                        acc.add(tri(uc, *kk, *i), &cs.mul(y).mul(z));
                    }
                }
            }
            sg.push(remap(&index, &acc.finish()));
        }
        let hopf = HopfAlgebra::from_generators(&name, alg, &dg, &eg, &sg)?;
        Ok(DrinfeldDouble { hopf, pairing: p.clone(), index })
    }

    /// Embed `c ∈ H*`, `d ∈ K`, `b ∈ H` (basis indices) as `c d b`.
    pub fn basis(&self, c: usize, d: usize, b: usize) -> usize {
        let (dk, dh) = (self.pairing.h.k.dim(), self.pairing.h.dim());
        self.index[(c * dk + d) * dh + b]
    }

    pub fn embed_dual(&self, v: &Vector) -> Vector {
        let (uk, ub) = (unit_index(&self.pairing.h.k.alg), unit_index(&self.pairing.h.alg));
        Vector::from_pairs(v.iter().map(|(i, c)| (self.basis(*i, uk, ub), c.clone())))
    }

    pub fn embed_k(&self, v: &Vector) -> Vector {
        let (uc, ub) = (unit_index(&self.pairing.dual.alg), unit_index(&self.pairing.h.alg));
        Vector::from_pairs(v.iter().map(|(i, c)| (self.basis(uc, *i, ub), c.clone())))
    }

    pub fn embed_h(&self, v: &Vector) -> Vector {
        let (uc, uk) = (unit_index(&self.pairing.dual.alg), unit_index(&self.pairing.h.k.alg));
        Vector::from_pairs(v.iter().map(|(i, c)| (self.basis(uc, uk, *i), c.clone())))
    }

    /// The module over the double attached to a YD module: `K` and `H`
    /// act as before and `c·v = ⟨c, v₍₋₁₎⟩v₍₀₎`.
    pub fn module(&self, v: &YDModule) -> Result<DoubleModule> {
        let p = &self.pairing;
        let (h, hd) = (&p.h, &p.dual);
        let k = &h.k;
        let f = h.alg.field();
        let one = f.one();
        let dv = v.dim();
        let sp = v.space().clone();
        let mut gens = Vec::new();
        for g in 0..hd.alg.presentation().unwrap().ngens() {
            let c = Vector::unit(letter_index(&hd.alg, g)?, one.clone());
            let cols = (0..dv)
                .map(|i| {
                    let d = v.coact(&Vector::unit(i, one.clone()))?;
                    let mut acc = Acc::new();
                    for (idx, x) in d.iter() {
                        let pv = p.eval(&Vector::unit(idx / dv, one.clone()), &c);
                        if !pv.is_zero() {
                            acc.add(idx % dv, &x.mul(&pv));
                        }
                    }
                    Ok(acc.finish())
                })
                .collect::<Result<Vec<_>>>()?;
            gens.push(LinearMap::between(&sp, &sp, cols));
        }
        for g in 0..k.alg.presentation().unwrap().ngens() {
            gens.push(v.kmod.rho[letter_index(&k.alg, g)?].clone());
        }
        for g in 0..h.alg.presentation().unwrap().ngens() {
            let b = Vector::unit(letter_index(&h.alg, g)?, one.clone());
            let cols = (0..dv).map(|i| v.act(&b, &Vector::unit(i, one.clone()))).collect::<Result<Vec<_>>>()?;
            gens.push(LinearMap::between(&sp, &sp, cols));
        }
        let id = LinearMap::identity(f, sp.legs());
        let rho = extend_maps(&self.hopf.alg, &gens, id)?;
        Ok(DoubleModule { alg: self.hopf.alg.clone(), space: sp, rho })
    }
}

/// Matrices of every basis monomial, composed along `M = M' g`.
fn extend_maps(alg: &BasedAlgebra, gens: &[LinearMap], id: LinearMap) -> Result<Vec<LinearMap>> {
    let mut out: Vec<Option<LinearMap>> = vec![None; alg.dim()];
    for i in 0..alg.dim() {
        let e = exps(alg, i).to_vec();
        match e.iter().rposition(|&x| x > 0) {
            None => out[i] = Some(id.clone()),
            Some(j) => {
                let mut prev = e.clone();
                prev[j] -= 1;
                let pi = alg.space().index_of(&BasisIndex::Mono(prev)).unwrap();
                out[i] = Some(out[pi].as_ref().unwrap().compose(&gens[j])?);
            }
        }
    }
    Ok(out.into_iter().map(|m| m.unwrap()).collect())
}

/// A representation of a presented algebra: one matrix per basis element.
#[derive(Clone, Debug)]
pub struct DoubleModule {
    pub alg: BasedAlgebra,
    pub space: BasedSpace,
    pub rho: Vec<LinearMap>,
}

impl DoubleModule {
    /// `a·v` for vectors.
    pub fn act(&self, a: &Vector, v: &Vector) -> Result<Vector> {
        let mut acc = Acc::new();
        for (i, c) in a.iter() {
            acc.add_vec(&self.rho[*i].apply(v)?, c);
        }
        Ok(acc.finish())
    }

    /// `ρ(ab) = ρ(a)ρ(b)` on every pair of basis elements.
    pub fn check(&self) -> Result<()> {
        let d = self.alg.dim();
        let bad = crate::par::find_first(d * d, |k| {
            let (a, b) = (k / d, k % d);
            let ab = self.alg.mul_basis(a, b)?;
            let mut lhs = LinearMap::zero(self.space.legs(), self.space.legs());
            for (i, c) in ab.iter() {
                lhs = lhs.add(&self.rho[*i].scale(c)).ok()?;
            }
            (lhs != self.rho[a].compose(&self.rho[b]).ok()?).then_some((a, b))
        });
        if let Some((a, b)) = bad {
            let sp = self.alg.space();
            return Err(fail(self.space.name(), "relations of the double act consistently", &format!(
                "{} · {}",
                sp.render(a),
                sp.render(b)
            )));
        }
        Ok(())
    }
}

/// `u_q(sl₂)` on PBW monomials `f^a k^b e^c` with `kf = q⁻²fk`,
/// `ke = q²ek`, `ef − fe = (k − k⁻¹)/(q − q⁻¹)`, `Δ(k) = k⊗k`,
/// `Δ(e) = 1⊗e + e⊗k`, `Δ(f) = k⁻¹⊗f + f⊗1`. `q²` must have order `n`.
pub fn uqsl2(q: &Scalar, n: u32) -> Result<HopfAlgebra> {
    let f = q.field();
    if q.mul(q).order(n) != Some(n) {
        return Err(Error::InvalidArgument(format!("q² must have order {n}")));
    }
    let lam = q.sub(&q.pow(-1)).inv()?;
    let n1 = n - 1;
    let p = Presentation::new(f)
        .generator("f", PowerRule::Nilpotent(n), 0)
        .generator("k", PowerRule::Cyclic(n), 0)
        .generator("e", PowerRule::Nilpotent(n), 0)
        .swap("k", "f", vec![(q.pow(-2), vec![1, 1, 0])])?
        .swap("e", "k", vec![(q.pow(-2), vec![0, 1, 1])])?
        .swap("e", "f", vec![(f.one(), vec![1, 0, 1]), (lam.clone(), vec![0, 1, 0]), (lam.neg(), vec![0, n1, 0])])?;
    let alg = BasedAlgebra::from_presentation("u_q(sl2)", p)?;
    let d = alg.dim();
    let (one, fi, ki, e) = (alg.mono("1")?, alg.mono("f")?, alg.mono("k")?, alg.mono("e")?);
    let kinv = alg.mono(&format!("k^{n1}"))?;
    let t = |a: usize, b: usize| a * d + b;
    let df = Vector::from_pairs([(t(kinv, fi), f.one()), (t(fi, one), f.one())]);
    let dk = Vector::unit(t(ki, ki), f.one());
    let de = Vector::from_pairs([(t(one, e), f.one()), (t(e, ki), f.one())]);
    let sf = alg.mul(&alg.vec("k")?, &alg.vec("f")?)?.neg();
    let sk = alg.vec(&format!("k^{n1}"))?;
    let se = alg.mul(&alg.vec("e")?, &sk)?.neg();
    HopfAlgebra::from_generators("u_q(sl2)", alg, &[df, dk, de], &[f.zero(), f.one(), f.zero()], &[sf, sk, se])
}

/// Outcome of comparing the double with `u_q(sl₂)` along
/// `g ↦ k`, `x ↦ f`, `x* ↦ k⁻¹e`.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub rank: usize,
    pub dim: usize,
    pub double_relations_vanish: bool,
    pub target_relations_vanish: bool,
    pub multiplicative: bool,
    pub comultiplicative: bool,
    /// `π` as a matrix from the double to `u_q(sl₂)`.
    pub map: LinearMap,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.rank == self.dim
            && self.double_relations_vanish
            && self.target_relations_vanish
            && self.multiplicative
            && self.comultiplicative
    }
}

/// Relations `hi·lo − rhs` of a presented algebra, evaluated by `img`
/// on generators inside `target`.
fn relations_vanish(alg: &BasedAlgebra, target: &BasedAlgebra, imgs: &[Vector], basis_img: &LinearMap) -> Result<bool> {
    let p = alg.presentation().unwrap();
    for r in &p.swaps {
        let lhs = target.mul(&imgs[r.hi], &imgs[r.lo])?;
        let mut rhs = Acc::new();
        for (c, e) in &r.rhs {
            let i = alg.space().index_of(&BasisIndex::Mono(e.clone())).unwrap();
            rhs.add_vec(basis_img.col(i).unwrap(), c);
        }
        if lhs != rhs.finish() {
            return Ok(false);
        }
    }
    for (g, gen) in p.generators.iter().enumerate() {
        let (n, target_val) = match gen.power {
            PowerRule::Nilpotent(n) => (n, Vector::zero()),
            PowerRule::Cyclic(n) => (n, target.unit().clone()),
            PowerRule::Free => continue,
        };
        if target.pow(&imgs[g], n)? != target_val {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verify that `g ↦ k`, `x ↦ f`, `x* ↦ k⁻¹e` extends to a Hopf algebra
/// isomorphism `Drin_K(H*, H) → u_q(sl₂)`.
pub fn double_iso_uqsl2(double: &DrinfeldDouble, uq: &HopfAlgebra) -> Result<IsoReport> {
    let da = &double.hopf.alg;
    let ua = &uq.alg;
    let names: Option<Vec<String>> = da.presentation().map(|p| p.generators.iter().map(|g| g.name.clone()).collect());
    if names.as_deref() != Some(&["x*".to_string(), "g".to_string(), "x".to_string()][..]) {
        return Err(Error::Unsupported("expected a double on generators x*, g, x".into()));
    }
    let up = ua.presentation().unwrap();
    let nk = match up.generators[1].power {
        PowerRule::Cyclic(m) => m,
        _ => return Err(Error::Unsupported("u_q(sl2) must have cyclic k".into())),
    };
    let kinv = ua.vec(&format!("k^{}", nk - 1))?;
    let imgs = vec![ua.mul(&kinv, &ua.vec("e")?)?, ua.vec("k")?, ua.vec("f")?];
    let cols = extend_on_monomials(da, &imgs, ua.unit().clone(), |x, y| ua.mul(x, y))?;
    let map = LinearMap::new(da.space().legs(), ua.space().legs(), cols.into_iter().map(Some).collect());
    let dim = da.dim();
    let rk = rank(&map)?;
    let double_relations_vanish = relations_vanish(da, ua, &imgs, &map)?;
    let one = da.one();
    let mut target_relations_vanish = false;
    if rk == dim && ua.dim() == dim {
        let inv = inverse(&map, &one)?;
        let back: Vec<Vector> = ["f", "k", "e"].iter().map(|g| inv.apply(&ua.vec(g)?)).collect::<Result<_>>()?;
        target_relations_vanish = relations_vanish(ua, da, &back, &inv)?;
    }
    let multiplicative = crate::par::find_first(dim * dim, |k| {
        let (a, b) = (k / dim, k % dim);
        let ab = map.apply(&da.mul_basis(a, b)?).ok()?;
        let r = ua.mul(map.col(a)?, map.col(b)?).ok()?;
        (ab != r).then_some(())
    })
    .is_none();
    let mm = map.tensor(&map);
    let comultiplicative = (0..dim).all(|i| {
        let l = mm.apply(double.hopf.delta.col(i).unwrap());
        let r = uq.delta.apply(map.col(i).unwrap());
        matches!((l, r), (Ok(l), Ok(r)) if l == r)
    });
    Ok(IsoReport { rank: rk, dim, double_relations_vanish, target_relations_vanish, multiplicative, comultiplicative, map })
}
