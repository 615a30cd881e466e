//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! Elements are dense rational vectors in the power basis `1, ζ, …, ζ^{φ(m)-1}`,
//! reduced modulo the cyclotomic polynomial `Φ_m`. Fields are interned, so a
//! scalar carries a `&'static` handle and copies of it are cheap.

mod parse;
mod rational;

pub use parse::{parse_scalar, ScalarFormat};
pub use rational::{parse_rat, Rat};

use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Largest supported conductor.
pub const MAX_CONDUCTOR: u32 = 256;

pub struct CycField {
    m: u32,
    deg: usize,
    /// `x^k mod Φ_m` for `k = deg .. 2*deg-1`.
    reduce: Vec<Vec<Rat>>,
    phi: Vec<i64>,
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.m)
    }
}

impl PartialEq for CycField {
    fn eq(&self, o: &CycField) -> bool {
        self.m == o.m
    }
}

fn registry() -> &'static Mutex<HashMap<u32, &'static CycField>> {
    static REG: OnceLock<Mutex<HashMap<u32, &'static CycField>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer polynomial division `a / b`, exact, with `b` monic.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        q[k] = c;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= c * bi;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

/// The field `Q(ζ_m)`; `m` must lie in `1..=MAX_CONDUCTOR`.
pub fn field_new(m: u32) -> Result<&'static CycField> {
    if m == 0 || m > MAX_CONDUCTOR {
        return Err(Error::InvalidArgument(format!(
            "cyclotomic conductor {m} outside 1..={MAX_CONDUCTOR}"
        )));
    }
    let mut reg = registry().lock().unwrap();
    if let Some(f) = reg.get(&m) {
        return Ok(f);
    }
    let phi = cyclotomic_poly(m);
    let deg = phi.len() - 1;
    // x^deg = -sum phi_i x^i, then shift upward
    let mut reduce: Vec<Vec<Rat>> = Vec::with_capacity(deg.max(1));
    let mut cur: Vec<Rat> = phi[..deg].iter().map(|c| Rat::int(-c)).collect();
    for _ in 0..deg.max(1) {
        reduce.push(cur.clone());
        // multiply by x and reduce the overflow coefficient
        let top = cur[deg - 1].clone();
        let mut next = vec![Rat::ZERO; deg];
        for i in 1..deg {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for i in 0..deg {
                next[i] = next[i].add(&top.mul(&Rat::int(-phi[i])));
            }
        }
        cur = next;
    }
    let f: &'static CycField = Box::leak(Box::new(CycField { m, deg, reduce, phi }));
    reg.insert(m, f);
    Ok(f)
}

impl CycField {
    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn cyclotomic(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(&'static self) -> Scalar {
        Scalar { field: self, c: SmallVec::new() }
    }

    pub fn one(&'static self) -> Scalar {
        self.from_rat(Rat::ONE)
    }

    pub fn int(&'static self, n: i64) -> Scalar {
        self.from_rat(Rat::int(n))
    }

    pub fn rat(&'static self, n: i64, d: i64) -> Scalar {
        self.from_rat(Rat::new(n, d))
    }

    pub fn from_rat(&'static self, r: Rat) -> Scalar {
        let mut s = Scalar { field: self, c: SmallVec::new() };
        if !r.is_zero() {
            s.c.push(r);
        }
        s
    }

    /// Build from power-basis coefficients of any length; reduces mod `Φ_m`.
    pub fn from_coeffs(&'static self, coeffs: Vec<Rat>) -> Scalar {
        let mut v: SmallVec<[Rat; 4]> = coeffs.into_iter().collect();
        self.reduce_in_place(&mut v);
        Scalar { field: self, c: v }
    }

    /// `ζ_m^e` for any integer `e`.
    pub fn zeta_pow(&'static self, e: i64) -> Scalar {
        let e = e.rem_euclid(self.m as i64) as usize;
        let mut v = vec![Rat::ZERO; e + 1];
        v[e] = Rat::ONE;
        self.from_coeffs(v)
    }

    pub fn zeta(&'static self) -> Scalar {
        self.zeta_pow(1)
    }

    fn reduce_in_place(&self, v: &mut SmallVec<[Rat; 4]>) {
        let d = self.deg;
        while v.len() > d {
            let k = v.len() - 1;
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            if k < 2 * d {
                let row = &self.reduce[k - d];
                for (i, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        v[i] = v[i].add(&top.mul(r));
                    }
                }
            } else {
                // x^k = x^(k-d) * x^d
                let row = &self.reduce[0];
                for (i, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        let idx = k - d + i;
                        v[idx] = v[idx].add(&top.mul(r));
                    }
                }
            }
        }
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
    }

    /// Order of the group of roots of unity in the field.
    pub fn root_of_unity_group_order(&self) -> u32 {
        if self.m % 2 == 1 {
            2 * self.m
        } else {
            self.m
        }
    }

    /// A fixed generator of the group of roots of unity in the field.
    pub fn root_group_generator(&'static self) -> Scalar {
        if self.m % 2 == 1 {
            // ζ_{2m} = -ζ_m^{(m+1)/2}
            self.zeta_pow(((self.m + 1) / 2) as i64).neg()
        } else {
            self.zeta()
        }
    }

    /// The primitive `k`-th root of unity `ω^{M/k}` for the group generator
    /// `ω`, if the field contains one.
    pub fn primitive_root(&'static self, k: u32) -> Option<Scalar> {
        let big = self.root_of_unity_group_order();
        if k == 0 || big % k != 0 {
            return None;
        }
        Some(self.root_group_generator().pow((big / k) as i64))
    }
}

#[derive(Clone)]
pub struct Scalar {
    field: &'static CycField,
    c: SmallVec<[Rat; 4]>,
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        self.c == o.c && (self.c.is_empty() || std::ptr::eq(self.field, o.field))
    }
}

impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.c.hash(h);
    }
}

impl Scalar {
    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.c.len() {
            0 => Some(Rat::ZERO),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn check(&self, o: &Scalar) {
        debug_assert!(
            std::ptr::eq(self.field, o.field),
            "mixing scalars of {:?} and {:?}",
            self.field,
            o.field
        );
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        self.check(o);
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (i, x) in short.c.iter().enumerate() {
            c[i] = c[i].add(x);
        }
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Scalar { field: self.field, c }
    }

    pub fn add_assign(&mut self, o: &Scalar) {
        self.check(o);
        if o.c.len() > self.c.len() {
            self.c.resize(o.c.len(), Rat::ZERO);
        }
        for (i, x) in o.c.iter().enumerate() {
            self.c[i] = self.c[i].add(x);
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { field: self.field, c: self.c.iter().map(|x| x.neg()).collect() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        self.check(o);
        if self.c.is_empty() || o.c.is_empty() {
            return self.field.zero();
        }
        if self.c.len() == 1 {
            return o.scale_rat(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.scale_rat(&o.c[0]);
        }
        let mut v: SmallVec<[Rat; 4]> = SmallVec::from_elem(Rat::ZERO, self.c.len() + o.c.len() - 1);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        self.field.reduce_in_place(&mut v);
        Scalar { field: self.field, c: v }
    }

    pub fn scale_rat(&self, r: &Rat) -> Scalar {
        if r.is_zero() {
            return self.field.zero();
        }
        Scalar { field: self.field, c: self.c.iter().map(|x| x.mul(r)).collect() }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.c.len() == 1 {
            return Ok(self.field.from_rat(self.c[0].recip()));
        }
        // solve (self * v) = 1 in the power basis
        let d = self.field.deg;
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
        let mut cur = self.clone();
        let x = self.field.zeta();
        for _ in 0..d {
            let mut col = cur.c.to_vec();
            col.resize(d, Rat::ZERO);
            cols.push(col);
            cur = cur.mul(&x);
        }
        // augmented row-major matrix
        let mut a: Vec<Vec<Rat>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rat> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rat::ONE } else { Rat::ZERO });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero()).expect("field element invertible");
            a.swap(col, piv);
            let p = a[col][col].recip();
            for k in col..=d {
                a[col][k] = a[col][k].mul(&p);
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in col..=d {
                        let t = a[col][k].mul(&f);
                        a[r][k] = a[r][k].sub(&t);
                    }
                }
            }
        }
        Ok(self.field.from_coeffs(a.into_iter().map(|mut r| r.pop().unwrap()).collect()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    /// Integer power; negative exponents invert (panics on `0^-k`).
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Multiplicative order, if finite and at most `bound`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let one = self.field.one();
        let mut cur = self.clone();
        for k in 1..=bound {
            if cur == one {
                return Some(k);
            }
            cur = cur.mul(self);
        }
        None
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render_poly(&self.c, "z"))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parameters fixing `q = ζ_m^e` inside `Q(ζ_m)`.
#[derive(Clone, Debug)]
pub struct QParam {
    pub field: &'static CycField,
    pub q: Scalar,
    /// `(m, e)` with `q = ζ_m^e`.
    pub root: (u32, u32),
}

impl QParam {
    /// `q = ζ_m^e` verified to satisfy `ord(q^2) = n`.
    pub fn explicit(m: u32, e: u32, n: u32) -> Result<QParam> {
        let field = field_new(m)?;
        let q = field.zeta_pow(e as i64);
        let ord = q.mul(&q).order(2 * MAX_CONDUCTOR);
        if ord != Some(n) {
            return Err(Error::InvalidArgument(format!(
                "q = zeta_{m}^{e} has ord(q^2) = {}, expected {n}",
                ord.map_or("inf".to_string(), |o| o.to_string())
            )));
        }
        Ok(QParam { field, q, root: (m, e) })
    }

    /// The canonical root of unity for `n` in its smallest field.
    pub fn canonical(n: u32) -> Result<QParam> {
        let m = if n % 2 == 1 { n } else { 2 * n };
        let field = field_new(m)?;
        let q = q_root(field, n)?;
        Ok(QParam { field, q, root: (m, 1) })
    }

    pub fn format(&self) -> ScalarFormat {
        ScalarFormat::new(self.q.clone())
    }
}

/// Canonical `q` with `ord(q^2) = n`: `ζ_n` for odd `n`, `ζ_{2n}` for even.
pub fn q_root(field: &'static CycField, n: u32) -> Result<Scalar> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let k = if n % 2 == 1 { n } else { 2 * n };
    let q = field.primitive_root(k).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "no q with ord(q^2) = {n} in Q(zeta_{})",
            field.conductor()
        ))
    })?;
    // independent check by exhaustive powering
    let q2 = q.mul(&q);
    if q2.order(n) != Some(n) {
        return Err(Error::InvalidArgument(format!("ord(q^2) != {n}")));
    }
    Ok(q)
}

/// `(m choose i)_t = prod_{j<i} (1 - t^{m-j}) / (1 - t^{j+1})`, evaluated
/// from its integer coefficients so that it is defined at every `t`
/// (including roots of unity where the quotient form degenerates).
pub fn q_binomial(m: i64, i: i64, t: &Scalar) -> Result<Scalar> {
    let f = t.field();
    if i < 0 || i > m {
        return Ok(f.zero());
    }
    let coeffs = gaussian_coefficients(m, i)?;
    let mut acc = f.zero();
    for c in coeffs.iter().rev() {
        let c = i64::try_from(*c).map_err(|_| Error::Overflow(format!("({m} choose {i})_t coefficient")))?;
        acc = acc.mul(t).add(&f.int(c));
    }
    Ok(acc)
}

/// Coefficients of the Gaussian polynomial by exact division in `Z[t]`.
fn gaussian_coefficients(m: i64, i: i64) -> Result<Vec<i128>> {
    let overflow = || Error::Overflow(format!("({m} choose {i})_t"));
    let mut p: Vec<i128> = vec![1];
    for j in 0..i {
        // multiply by 1 - t^{m-j}
        let k = (m - j) as usize;
        let mut r = vec![0i128; p.len() + k];
        for (e, c) in p.iter().enumerate() {
            r[e] = r[e].checked_add(*c).ok_or_else(overflow)?;
            r[e + k] = r[e + k].checked_sub(*c).ok_or_else(overflow)?;
        }
        p = r;
    }
    for j in 0..i {
        // divide by 1 - t^{j+1}: (1 - t^k) q = p gives q_e = p_e + q_{e-k}
        let k = (j + 1) as usize;
        let mut q = vec![0i128; p.len() - k];
        for e in 0..q.len() {
            let prev = if e >= k { q[e - k] } else { 0 };
            q[e] = p[e].checked_add(prev).ok_or_else(overflow)?;
        }
        p = q;
    }
    Ok(p)
}

/// `[k]_t = 1 + t + … + t^{k-1}`.
pub fn q_integer(k: i64, t: &Scalar) -> Scalar {
    let f = t.field();
    let mut acc = f.zero();
    let mut p = f.one();
    for _ in 0..k {
        acc = acc.add(&p);
        p = p.mul(t);
    }
    acc
}

/// `[k]_t! = [1]_t [2]_t … [k]_t`.
pub fn q_factorial(k: i64, t: &Scalar) -> Scalar {
    (1..=k).fold(t.field().one(), |acc, j| acc.mul(&q_integer(j, t)))
}
