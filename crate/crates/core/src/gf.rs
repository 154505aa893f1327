//! Finite fields `GF(p^k)` for odd `p`, and decompositions of their
//! multiplicative groups into cyclic factors whose generators are in
//! arithmetic progression.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! in the polynomial basis `1, z, ..., z^{k-1}`, where `z` is a root of the
//! defining polynomial. Multiplication goes through log tables.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: u64 = 100_000;

/// Standard defining polynomials, constant term first.
const CONWAY: &[(u64, u32, &[i64])] = &[
    (11, 2, &[2, 7, 1]),
    (11, 3, &[9, 2, 0, 1]),
    (19, 2, &[2, -1, 1]),
    (19, 3, &[-2, 4, 0, 1]),
    (23, 2, &[5, -2, 1]),
    (29, 2, &[2, -5, 1]),
];

pub fn conway_polynomial(p: u64, k: u32) -> Option<Vec<u64>> {
    CONWAY
        .iter()
        .find(|(cp, ck, _)| *cp == p && *ck == k)
        .map(|(_, _, c)| normalize(c, p))
}

fn normalize(coeffs: &[i64], p: u64) -> Vec<u64> {
    coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect()
}

#[derive(Debug, Clone)]
pub struct Field {
    p: u64,
    k: u32,
    poly: Vec<u64>,
    q: u64,
    /// `exp[e]` encodes `z^e`, `0 <= e < q - 1`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            let t = &mut r[shift + i];
            *t = (*t + p - (lead * c) % p) % p;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Whether the monic polynomial has a monic factor of degree `1..=deg/2`.
fn has_small_factor(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut f: Vec<u64> = (0..d).map(|i| (code / p.pow(i as u32)) % p).collect();
            f.push(1);
            if poly_rem(poly, &f, p).is_empty() {
                return true;
            }
        }
    }
    false
}

impl Field {
    /// Builds `GF(p^k)`. Without an explicit polynomial the embedded
    /// standard one is used; a polynomial must be monic of degree `k`,
    /// given constant term first.
    pub fn new(p: u64, k: u32, poly: Option<&[i64]>) -> Result<Self> {
        if p == 2 {
            return Err(Error::Characteristic2);
        }
        if !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if k == 0 {
            return Err(Error::Polynomial("degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::OutOfRange {
                value: p.saturating_pow(k),
                limit: MAX_FIELD_ORDER,
            })?;
        let poly = match poly {
            Some(c) => normalize(c, p),
            None if k == 1 => vec![p - smallest_primitive_root(p), 1],
            None => conway_polynomial(p, k).ok_or_else(|| {
                Error::Polynomial(format!("no built-in polynomial for GF({p}^{k}); pass one"))
            })?,
        };
        if poly.len() != k as usize + 1 || poly[k as usize] != 1 {
            return Err(Error::Polynomial(format!(
                "{poly:?} is not monic of degree {k}"
            )));
        }
        if poly[0] == 0 || has_small_factor(&poly, p) {
            return Err(Error::Polynomial(format!("{poly:?} is reducible mod {p}")));
        }

        let pk: Vec<u64> = (0..k).map(|i| p.pow(i)).collect();
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut digits = vec![0u64; k as usize];
        digits[0] = 1;
        for e in 0..q - 1 {
            let code: u64 = digits.iter().zip(&pk).map(|(d, w)| d * w).sum();
            if log[code as usize] != u32::MAX {
                return Err(Error::Polynomial(format!(
                    "{poly:?} is irreducible but its root has order {e} < {}",
                    q - 1
                )));
            }
            log[code as usize] = e as u32;
            exp.push(code as u32);
            // multiply by z: shift up, then reduce z^k = -(c_0 + ... + c_{k-1} z^{k-1})
            let top = digits[k as usize - 1];
            for i in (1..k as usize).rev() {
                digits[i] = digits[i - 1];
            }
            digits[0] = 0;
            for i in 0..k as usize {
                digits[i] = (digits[i] + (p - poly[i]) * top) % p;
            }
        }
        Ok(Self {
            p,
            k,
            poly,
            q,
            exp,
            log,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Defining polynomial, constant term first, coefficients in `[0, p)`.
    pub fn poly(&self) -> &[u64] {
        &self.poly
    }

    pub fn zeta_pow(&self, e: u64) -> u32 {
        self.exp[(e % (self.q - 1)) as usize]
    }

    pub fn log(&self, a: u32) -> Option<u64> {
        (a != 0).then(|| self.log[a as usize] as u64)
    }

    pub fn order(&self, a: u32) -> Option<u64> {
        self.log(a).map(|e| (self.q - 1) / gcd(self.q - 1, e))
    }

    pub fn digits(&self, a: u32) -> Vec<u64> {
        let mut a = a as u64;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn combine(&self, a: u32, b: u32, f: impl Fn(u64, u64) -> u64) -> u32 {
        let (mut a, mut b) = (a as u64, b as u64);
        let (mut out, mut w) = (0u64, 1u64);
        for _ in 0..self.k {
            out += f(a % self.p, b % self.p) % self.p * w;
            a /= self.p;
            b /= self.p;
            w *= self.p;
        }
        out as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.combine(a, b, |x, y| x + y)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        self.combine(a, b, |x, y| x + p - y)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match (self.log(a), self.log(b)) {
            (Some(x), Some(y)) => self.zeta_pow(x + y),
            _ => 0,
        }
    }

    pub fn in_prime_subfield(&self, a: u32) -> bool {
        (a as u64) < self.p
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.log(a).map_or(0, |e| self.zeta_pow(e * self.p))
    }
}

fn smallest_primitive_root(p: u64) -> u64 {
    let m = crate::arith::Modulus::new(p).expect("p is prime");
    (2..p)
        .find(|&g| m.order_of(g).ok() == Some(p - 1))
        .unwrap_or(1)
}

/// A monic primitive polynomial of degree `k` over `GF(p)`, smallest by
/// coefficient encoding. For fields without a built-in polynomial.
pub fn find_primitive_polynomial(p: u64, k: u32) -> Option<Vec<u64>> {
    let count = p.checked_pow(k)?;
    (1..count).find_map(|code| {
        let mut c: Vec<i64> = (0..k).map(|i| ((code / p.pow(i)) % p) as i64).collect();
        c.push(1);
        Field::new(p, k, Some(&c)).ok().map(|f| f.poly)
    })
}

/// `GF(q)^x = <x> x <x+d> x <x+2d>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDecomposition {
    pub elements: [u32; 3],
    /// Logs base the primitive root.
    pub exponents: [u64; 3],
    pub orders: [u64; 3],
}

impl FieldDecomposition {
    fn new(f: &Field, elements: [u32; 3]) -> Option<Self> {
        let exponents = [f.log(elements[0])?, f.log(elements[1])?, f.log(elements[2])?];
        let orders = exponents.map(|e| (f.q - 1) / gcd(f.q - 1, e));
        Some(Self {
            elements,
            exponents,
            orders,
        })
    }

    pub fn from_exponents(f: &Field, exponents: [u64; 3]) -> Option<Self> {
        Self::new(f, exponents.map(|e| f.zeta_pow(e)))
    }

    pub fn reversed(&self) -> Self {
        let mut r = self.clone();
        r.elements.reverse();
        r.exponents.reverse();
        r.orders.reverse();
        r
    }

    pub fn is_ap(&self, f: &Field) -> bool {
        let [a, b, c] = self.elements;
        f.sub(b, a) == f.sub(c, b) && a != b
    }

    /// Whether the factors form a direct product of `GF(q)^x`, using
    /// cyclicity: pairwise coprime orders multiplying to `q - 1`.
    pub fn is_direct_product(&self, f: &Field) -> bool {
        let [a, b, c] = self.orders;
        gcd(a, b) == 1 && gcd(b, c) == 1 && gcd(a, c) == 1 && a * b * c == f.q - 1
    }

    pub fn is_canonical(&self, f: &Field) -> bool {
        let d = f.sub(self.elements[1], self.elements[0]);
        d <= f.sub(0, d)
    }

    pub fn canonical(&self, f: &Field) -> Self {
        if self.is_canonical(f) {
            self.clone()
        } else {
            self.reversed()
        }
    }

    pub fn is_strong(&self) -> bool {
        self.orders.iter().all(|&o| o > 1)
    }
}

impl fmt::Display for FieldDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..3 {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "<z^{}>_{}", self.exponents[i], self.orders[i])?;
        }
        Ok(())
    }
}

/// Generic test: the map `(i, j, l) -> a^i b^j c^l` is injective on the
/// box of orders, checked by enumerating all products as sums of logs.
pub fn is_direct_product_generic(f: &Field, gens: &[u32]) -> bool {
    let m = f.q - 1;
    let Some(logs) = gens.iter().map(|&g| f.log(g)).collect::<Option<Vec<u64>>>() else {
        return false;
    };
    let orders: Vec<u64> = logs.iter().map(|&e| m / gcd(m, e)).collect();
    if orders.iter().product::<u64>() != m {
        return false;
    }
    let mut seen = vec![false; m as usize];
    let mut level = vec![0u64];
    for (e, o) in logs.iter().zip(&orders) {
        let mut next = Vec::with_capacity(level.len() * *o as usize);
        for &s in &level {
            for i in 0..*o {
                next.push((s + i * e) % m);
            }
        }
        level = next;
    }
    level.into_iter().all(|x| !std::mem::replace(&mut seen[x as usize], true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldSearchMode {
    All,
    /// The first decomposition (in search order) for each multiset of orders.
    OnePerOrderList,
}

/// Every strong decomposition in canonical orientation, ordered by the
/// encoded first element and then the difference.
pub fn find_3ap_field(f: &Field, mode: FieldSearchMode) -> Vec<FieldDecomposition> {
    let m = f.q - 1;
    let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    let index = |o: u64| divisors.binary_search(&o).expect("orders divide q - 1");
    let nd = divisors.len();
    // compatible[i * nd + j]: orders i, j nontrivial, coprime, product divides m
    let mut compatible = vec![false; nd * nd];
    for (i, &a) in divisors.iter().enumerate() {
        for (j, &b) in divisors.iter().enumerate() {
            compatible[i * nd + j] = a > 1 && b > 1 && gcd(a, b) == 1 && m % (a * b) == 0;
        }
    }
    let ord_idx: Vec<usize> = (0..f.q as u32)
        .map(|a| f.order(a).map_or(usize::MAX, index))
        .collect();

    let mut out = Vec::new();
    for x in 1..f.q as u32 {
        let ox = ord_idx[x as usize];
        for y in 1..f.q as u32 {
            let oy = ord_idx[y as usize];
            if y == x || !compatible[ox * nd + oy] {
                continue;
            }
            let z = f.sub(f.add(y, y), x);
            if z == 0 {
                continue;
            }
            let d = FieldDecomposition::new(f, [x, y, z]).expect("nonzero");
            if d.is_canonical(f) && d.is_strong() && d.is_direct_product(f) {
                out.push(d);
            }
        }
    }
    out.sort_by_key(|d| (d.elements[0], f.sub(d.elements[1], d.elements[0])));
    if mode == FieldSearchMode::OnePerOrderList {
        let mut seen = HashSet::new();
        out.retain(|d| {
            let mut o = d.orders;
            o.sort_unstable();
            seen.insert(o)
        });
    }
    out
}

/// The sorted order multisets that occur among the decompositions.
pub fn order_lists(decomps: &[FieldDecomposition]) -> BTreeSet<[u64; 3]> {
    decomps
        .iter()
        .map(|d| {
            let mut o = d.orders;
            o.sort_unstable();
            o
        })
        .collect()
}

/// For `q = 7, 31 (mod 36)`: every decomposition with orders
/// `{2, 3, (q-1)/6}` lies in the prime subfield. Vacuously true otherwise.
pub fn prime_subfield_argument_check(f: &Field) -> bool {
    if !matches!(f.q % 36, 7 | 31) {
        return true;
    }
    let mut target = [2, 3, (f.q - 1) / 6];
    target.sort_unstable();
    find_3ap_field(f, FieldSearchMode::All)
        .iter()
        .filter(|d| {
            let mut o = d.orders;
            o.sort_unstable();
            o == target
        })
        .all(|d| d.elements.iter().all(|&e| f.in_prime_subfield(e)))
}
