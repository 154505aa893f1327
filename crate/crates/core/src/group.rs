//! The unit group `U_n`: enumeration, abelian structure and the
//! direct-product test that defines a decomposition.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, mul_mod, Modulus};
use crate::error::{Error, Result};

/// A cyclic subgroup `<generator>` together with its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub generator: u64,
    pub order: u64,
}

impl CyclicFactor {
    pub fn new(m: &Modulus, generator: u64) -> Result<Self> {
        let generator = generator % m.n();
        let order = m.order_of(generator)?;
        Ok(Self { generator, order })
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Cyclic structure of `U_{p^e}` for one prime-power component of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub prime: u64,
    pub exponent: u32,
    pub cyclic_orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupStructure {
    /// `d_1 | d_2 | ... | d_r`, ascending; the last one is `lambda(n)`.
    pub invariant_factors: Vec<u64>,
    pub components: Vec<Component>,
}

impl GroupStructure {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Units of `Z_n` in ascending order.
pub fn units(m: &Modulus) -> Vec<u64> {
    (1..m.n()).filter(|&x| gcd(x, m.n()) == 1).collect()
}

fn component_orders(p: u64, e: u32) -> Vec<u64> {
    match (p, e) {
        (2, 1) => vec![],
        (2, 2) => vec![2],
        (2, _) => vec![2, 1 << (e - 2)],
        _ => vec![(p - 1) * p.pow(e - 1)],
    }
}

pub fn group_structure(m: &Modulus) -> GroupStructure {
    let components: Vec<Component> = m
        .factorization()
        .pairs()
        .iter()
        .map(|&(prime, exponent)| Component {
            prime,
            exponent,
            cyclic_orders: component_orders(prime, exponent),
        })
        .collect();

    // Split every cyclic order into prime-power parts, grouped by prime.
    let mut parts: Vec<(u64, Vec<u64>)> = Vec::new();
    for c in components.iter().flat_map(|c| c.cyclic_orders.iter().copied()) {
        let f = factorize(c).expect("component orders are in range");
        for &(r, e) in f.pairs() {
            let q = r.pow(e);
            match parts.iter_mut().find(|(p, _)| *p == r) {
                Some((_, v)) => v.push(q),
                None => parts.push((r, vec![q])),
            }
        }
    }
    let rank = parts.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut invariant_factors = vec![1u64; rank];
    for (_, v) in &mut parts {
        v.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in v.iter().enumerate() {
            invariant_factors[rank - 1 - i] *= q;
        }
    }
    GroupStructure {
        invariant_factors,
        components,
    }
}

/// Smallest number of cyclic factors of `U_n`, read off from the shape of
/// `n` alone: `k` for odd `n`, `k - 1` for twice odd, `k` for four times odd
/// and `k + 1` otherwise, where `k` counts the distinct prime divisors.
pub fn min_factor_count(m: &Modulus) -> usize {
    let k = m.factorization().len();
    match m.factorization().exponent_of(2) {
        0 => k,
        1 => k - 1,
        2 => k,
        _ => k + 1,
    }
}

/// Orders of every residue modulo `n`; `0` marks a non-unit.
#[derive(Debug, Clone)]
pub struct OrderTable {
    orders: Vec<u32>,
}

impl OrderTable {
    pub fn new(m: &Modulus) -> Self {
        let n = m.n();
        let mut orders = vec![0u32; n as usize];
        for x in 1..n {
            if gcd(x, n) == 1 {
                orders[x as usize] = m.order_of(x).expect("unit") as u32;
            }
        }
        Self { orders }
    }

    #[inline]
    pub fn get(&self, x: u64) -> u64 {
        self.orders[x as usize] as u64
    }

    #[inline]
    pub fn raw(&self) -> &[u32] {
        &self.orders
    }
}

/// Reusable scratch space for the direct-product test. Products are marked
/// in a stamp array so nothing needs clearing between calls.
#[derive(Debug, Clone)]
pub struct ProductChecker {
    n: u64,
    stamp: Vec<u32>,
    epoch: u32,
    level: Vec<u64>,
    next: Vec<u64>,
}

impl ProductChecker {
    pub fn new(n: u64) -> Self {
        Self {
            n,
            stamp: vec![0; n as usize],
            epoch: 0,
            level: Vec::new(),
            next: Vec::new(),
        }
    }

    fn bump(&mut self) -> u32 {
        if self.epoch == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 0;
        }
        self.epoch += 1;
        self.epoch
    }

    /// True iff the `(generator, order)` pairs generate an internal direct
    /// product of order `phi`. Orders must be the true multiplicative orders.
    pub fn is_direct_product(&mut self, phi: u64, factors: &[(u64, u64)]) -> bool {
        let total = factors
            .iter()
            .try_fold(1u64, |acc, &(_, a)| acc.checked_mul(a));
        if total != Some(phi) {
            return false;
        }
        self.level.clear();
        self.level.push(1);
        for &(g, a) in factors {
            if a == 1 {
                continue;
            }
            let epoch = self.bump();
            self.next.clear();
            for &s in &self.level {
                let mut p = s;
                for _ in 0..a {
                    let slot = &mut self.stamp[p as usize];
                    if *slot == epoch {
                        return false;
                    }
                    *slot = epoch;
                    self.next.push(p);
                    p = mul_mod(p, g, self.n);
                }
            }
            std::mem::swap(&mut self.level, &mut self.next);
        }
        true
    }
}

/// Whether `U_n` is the internal direct product of the given cyclic factors.
/// Trivial factors are allowed and skipped.
pub fn is_direct_product(m: &Modulus, gens: &[CyclicFactor]) -> bool {
    if gens.iter().any(|f| !m.is_unit(f.generator)) {
        return false;
    }
    let pairs: Vec<(u64, u64)> = gens.iter().map(|f| (f.generator, f.order)).collect();
    ProductChecker::new(m.n()).is_direct_product(m.phi(), &pairs)
}

/// Order of the subgroup generated by `gens`, by closure.
pub fn subgroup_order(m: &Modulus, gens: &[u64]) -> Result<u64> {
    let n = m.n();
    for &g in gens {
        if !m.is_unit(g) {
            return Err(Error::NotUnit { x: g % n, n });
        }
    }
    let mut seen = vec![false; n as usize];
    let mut frontier = vec![1u64];
    seen[1 % n as usize] = true;
    let mut count = 1u64;
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = mul_mod(x, g, n);
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                frontier.push(y);
            }
        }
    }
    Ok(count)
}
