//! Arithmetic in F_q for the small prime powers used throughout the crate.
//!
//! Elements are encoded as integers `idx = c_0 + c_1 p + ... + c_{e-1} p^{e-1}`
//! where `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is the polynomial
//! representative modulo the fixed Conway polynomial for `q`. All arithmetic
//! goes through precomputed `q × q` tables.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field orders this crate supports.
pub const SUPPORTED_ORDERS: [u32; 18] = [
    2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
];

/// Conway polynomials for the non-prime orders, coefficients low to high.
const CONWAY: [(u32, &[u8]); 7] = [
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[2, 2, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 4, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
];

/// An element of F_q, stored by its base-p encoding.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(pub u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Arithmetic context for F_q.
pub struct FieldSpec {
    q: u32,
    p: u32,
    e: u32,
    irr: Vec<u8>,
    alpha: FieldElement,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    // exp[i] = alpha^i for i in 0..q-1
    exp: Vec<u8>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("e", &self.e)
            .field("irr", &self.irr)
            .field("alpha", &self.alpha)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FieldSpec {}

/// Shared handle to an immutable field context.
pub type Field = Arc<FieldSpec>;

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn is_primitive_root(g: u32, p: u32) -> bool {
    let mut x = 1u32;
    for k in 1..p {
        x = x * g % p;
        if x == 1 {
            return k == p - 1;
        }
    }
    false
}

/// Returns the shared context for `q`, building it on first use.
pub fn field(q: u32) -> Result<Field> {
    static CACHE: OnceLock<Vec<OnceLock<Field>>> = OnceLock::new();
    let slot = SUPPORTED_ORDERS
        .iter()
        .position(|&s| s == q)
        .ok_or(Error::UnsupportedOrder(q))?;
    let cache = CACHE.get_or_init(|| SUPPORTED_ORDERS.iter().map(|_| OnceLock::new()).collect());
    Ok(cache[slot]
        .get_or_init(|| Arc::new(FieldSpec::new(q).expect("supported order")))
        .clone())
}

impl FieldSpec {
    /// Builds the arithmetic context for `q`.
    pub fn new(q: u32) -> Result<Self> {
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(Error::UnsupportedOrder(q));
        }
        let (p, e) = prime_power(q).ok_or(Error::UnsupportedOrder(q))?;
        let irr: Vec<u8> = if e == 1 {
            let g = (1..p).find(|&g| is_primitive_root(g, p)).unwrap_or(1);
            vec![((p - g) % p) as u8, 1]
        } else {
            CONWAY
                .iter()
                .find(|(o, _)| *o == q)
                .map(|(_, c)| c.to_vec())
                .ok_or(Error::UnsupportedOrder(q))?
        };

        let qs = q as usize;
        let digits = |mut x: usize| -> Vec<u32> {
            (0..e)
                .map(|_| {
                    let d = (x % p as usize) as u32;
                    x /= p as usize;
                    d
                })
                .collect()
        };
        let encode = |c: &[u32]| -> u8 {
            c.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u8
        };

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&s);

                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (e as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    for (k, &m) in irr.iter().enumerate() {
                        let t = deg - e as usize + k;
                        prod[t] = (prod[t] + (p - c) * m as u32) % p;
                    }
                }
                mul[a * qs + b] = encode(&prod[..e as usize]);
            }
        }

        let neg: Vec<u8> = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8)
            .collect();
        let inv: Vec<u8> = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u8
                }
            })
            .collect();

        // x is primitive for the Conway polynomials; for prime fields the root of x - g is g.
        let alpha = if e == 1 {
            FieldElement(((p as u8) - irr[0]) % p as u8)
        } else {
            FieldElement(p as u8)
        };
        let mut exp = Vec::with_capacity(qs - 1);
        let mut x = 1u8;
        for _ in 0..qs - 1 {
            exp.push(x);
            x = mul[x as usize * qs + alpha.idx()];
        }
        let mut seen = vec![false; qs];
        for &v in &exp {
            if v == 0 || seen[v as usize] {
                return Err(Error::UnsupportedOrder(q));
            }
            seen[v as usize] = true;
        }

        Ok(FieldSpec { q, p, e, irr, alpha, add, mul, neg, inv, exp })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Coefficients of the monic modulus, lowest degree first.
    pub fn irr(&self) -> &[u8] {
        &self.irr
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn order(&self) -> usize {
        self.q as usize
    }

    pub fn element(&self, idx: u32) -> Result<FieldElement> {
        if idx < self.q {
            Ok(FieldElement(idx as u8))
        } else {
            Err(Error::InvalidElement { idx, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u8).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.idx() * self.q as usize + b.idx()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.idx() * self.q as usize + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.idx()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.inv[a.idx()]))
        }
    }

    /// Dispatches one of the four basic operations; `b` is required for the binary ones.
    pub fn arith(&self, op: FieldOp, a: FieldElement, b: Option<FieldElement>) -> Result<FieldElement> {
        let need = || b.ok_or_else(|| Error::Parse(format!("{op:?} needs two operands")));
        match op {
            FieldOp::Add => Ok(self.add(a, need()?)),
            FieldOp::Mul => Ok(self.mul(a, need()?)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `alpha^i`, with the exponent taken modulo `q - 1`.
    pub fn alpha_pow(&self, i: i64) -> FieldElement {
        let m = self.q as i64 - 1;
        FieldElement(self.exp[i.rem_euclid(m) as usize])
    }

    /// Discrete logarithm to base `alpha`; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<usize> {
        if a.is_zero() {
            return None;
        }
        self.exp.iter().position(|&x| x == a.0)
    }

    /// Base-p coefficient vector `(c_0, ..., c_{e-1})` of an element.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u8> {
        let mut x = a.0 as u32;
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d as u8
            })
            .collect()
    }
}
