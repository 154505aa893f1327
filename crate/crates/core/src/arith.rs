//! Integer and modular arithmetic: factorization, totient, Carmichael
//! function, multiplicative orders, CRT and square roots modulo a prime.
//!
//! Everything works on `u64` with `u128` intermediates for products, which
//! is ample for moduli up to [`MAX_MODULUS`].

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest integer accepted by [`factorize`] and [`Modulus::new`].
pub const MAX_MODULUS: u64 = 100_000_000;

const SIEVE_LIMIT: usize = 10_000;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(SIEVE_LIMIT as u64))
}

/// All primes `p <= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Deterministic primality test for `n <= MAX_MODULUS` (trial division).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in small_primes() {
        if p * p > n {
            return true;
        }
        if n % p == 0 {
            return n == p;
        }
    }
    // n exceeds the sieve range squared; fall back to plain trial division.
    let mut d = SIEVE_LIMIT as u64 + 1;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    /// Number of distinct prime divisors.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match e {
                1 => write!(f, "{p}")?,
                _ => write!(f, "{p}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Factorizes `n` by trial division over a precomputed prime table.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 || n > MAX_MODULUS {
        return Err(Error::OutOfRange {
            value: n,
            limit: MAX_MODULUS,
        });
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization(pairs))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed residue into `[0, n)`.
#[inline]
pub fn reduce(a: i64, n: u64) -> u64 {
    a.rem_euclid(n as i64) as u64
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

/// Carmichael function of a single prime power.
pub fn prime_power_lambda(p: u64, e: u32) -> u64 {
    match (p, e) {
        (2, 1) => 1,
        (2, 2) => 2,
        (2, _) => 1 << (e - 2),
        _ => (p - 1) * p.pow(e - 1),
    }
}

/// An integer `n >= 2` with its factorization and the derived group
/// invariants cached. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modulus {
    n: u64,
    factorization: Factorization,
    phi: u64,
    lambda: u64,
    xi: u64,
    lambda_primes: Vec<u64>,
}

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("modulus must be >= 2, got {n}")));
        }
        let factorization = factorize(n)?;
        let phi = factorization
            .pairs()
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product::<u64>();
        let lambda = factorization
            .pairs()
            .iter()
            .fold(1, |acc, &(p, e)| lcm(acc, prime_power_lambda(p, e)));
        let lambda_primes = factorize(lambda)?.primes().collect();
        Ok(Self {
            n,
            factorization,
            phi,
            lambda,
            xi: phi / lambda,
            lambda_primes,
        })
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    #[inline]
    pub fn phi(&self) -> u64 {
        self.phi
    }

    #[inline]
    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    #[inline]
    pub fn xi(&self) -> u64 {
        self.xi
    }

    pub fn is_prime(&self) -> bool {
        self.factorization.pairs() == [(self.n, 1)]
    }

    #[inline]
    pub fn is_unit(&self, x: u64) -> bool {
        gcd(x % self.n, self.n) == 1
    }

    /// Reduces a signed value into `[0, n)`.
    #[inline]
    pub fn residue(&self, x: i64) -> u64 {
        reduce(x, self.n)
    }

    /// Multiplicative order of `x`, found by stripping prime factors off
    /// `lambda` rather than scanning powers.
    pub fn order_of(&self, x: u64) -> Result<u64> {
        let x = x % self.n;
        if !self.is_unit(x) {
            return Err(Error::NotUnit { x, n: self.n });
        }
        let mut t = self.lambda;
        for &r in &self.lambda_primes {
            while t % r == 0 && pow_mod(x, t / r, self.n) == 1 {
                t /= r;
            }
        }
        Ok(t)
    }
}

pub fn euler_phi(m: &Modulus) -> u64 {
    m.phi()
}

pub fn carmichael_lambda(m: &Modulus) -> u64 {
    m.lambda()
}

pub fn xi(m: &Modulus) -> u64 {
    m.xi()
}

pub fn order_mod(x: u64, m: &Modulus) -> Result<u64> {
    m.order_of(x)
}

/// Solves a system of congruences `x = r_i (mod m_i)` with pairwise coprime
/// moduli. Residues may be negative. The result lies in `[0, prod m_i)`.
pub fn crt_combine(congruences: &[(i64, u64)]) -> Result<u64> {
    let mut acc: u64 = 0;
    let mut modulus: u64 = 1;
    for &(r, m) in congruences {
        if m == 0 {
            return Err(Error::Precondition("zero modulus in CRT".into()));
        }
        if gcd(modulus, m) != 1 {
            return Err(Error::NotCoprime { a: modulus, b: m });
        }
        let r = reduce(r, m);
        let combined = modulus.checked_mul(m).ok_or(Error::OutOfRange {
            value: u64::MAX,
            limit: MAX_MODULUS,
        })?;
        // acc + modulus * t = r (mod m)
        let inv = inv_mod(modulus % m, m).unwrap_or(0);
        let diff = reduce(r as i64 - (acc % m) as i64, m);
        let t = mul_mod(diff, inv, m);
        acc = (acc as u128 + modulus as u128 * t as u128) as u64 % combined;
        modulus = combined;
    }
    Ok(acc)
}

/// Both square roots of `a` modulo the odd prime `p`, smaller first, or
/// `None` for a non-residue. Uses the `(p+1)/4` exponent when `p = 3 mod 4`
/// and Tonelli-Shanks otherwise.
pub fn sqrt_mod_prime(a: i64, p: u64) -> Result<Option<(u64, u64)>> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let a = reduce(a, p);
    if a == 0 {
        return Ok(Some((0, 0)));
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return Ok(None);
    }
    let r = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a, p)
    };
    let other = p - r;
    Ok(Some((r.min(other), r.max(other))))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("an odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(x: u64, n: u64) -> u64 {
        let mut y = x % n;
        let mut t = 1;
        while y != 1 {
            y = mul_mod(y, x, n);
            t += 1;
        }
        t
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(91).unwrap().pairs(), &[(7, 1), (13, 1)]);
        assert_eq!(factorize(875).unwrap().pairs(), &[(5, 3), (7, 1)]);
        assert!(factorize(1).unwrap().is_empty());
        assert!(matches!(factorize(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(
            factorize(MAX_MODULUS + 1),
            Err(Error::OutOfRange { .. })
        ));
        assert_eq!(factorize(99_999_989).unwrap().pairs(), &[(99_999_989, 1)]);
    }

    #[test]
    fn totient_lambda_xi_examples() {
        let m = |n| Modulus::new(n).unwrap();
        assert_eq!(euler_phi(&m(91)), 72);
        assert_eq!(euler_phi(&m(2)), 1);
        assert_eq!(euler_phi(&m(31)), 30);
        assert_eq!(carmichael_lambda(&m(105)), 12);
        assert_eq!(carmichael_lambda(&m(8)), 2);
        assert_eq!(carmichael_lambda(&m(2)), 1);
        assert_eq!(carmichael_lambda(&m(4)), 2);
        assert_eq!(carmichael_lambda(&m(64)), 16);
        assert_eq!(xi(&m(105)), 4);
        assert_eq!(xi(&m(31)), 1);
    }

    #[test]
    fn lambda_of_91_is_max_order() {
        let m = Modulus::new(91).unwrap();
        let max = (1..91)
            .filter(|&x| gcd(x, 91) == 1)
            .map(|x| brute_order(x, 91))
            .max()
            .unwrap();
        assert_eq!(max, 12);
        assert_eq!(m.lambda(), max);
    }

    #[test]
    fn xi_of_3613_matches_brute_force() {
        let m = Modulus::new(3613).unwrap();
        let max = (1..3613).map(|x| brute_order(x, 3613)).max().unwrap();
        assert_eq!(m.xi(), 3612 / max);
        assert_eq!(m.xi(), 1);
    }

    #[test]
    fn order_examples() {
        let m = |n| Modulus::new(n).unwrap();
        assert_eq!(order_mod(2, &m(31)).unwrap(), 5);
        assert_eq!(order_mod(1, &m(7)).unwrap(), 1);
        assert_eq!(order_mod(9, &m(61)).unwrap(), 5);
        assert_eq!(order_mod(11, &m(61)).unwrap(), 4);
        assert_eq!(order_mod(13, &m(61)).unwrap(), 3);
        assert_eq!(
            order_mod(14, &m(91)),
            Err(Error::NotUnit { x: 14, n: 91 })
        );
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_combine(&[(1, 7), (-3, 5)]).unwrap(), 22);
        assert_eq!(crt_combine(&[(0, 3)]).unwrap(), 0);
        assert_eq!(crt_combine(&[(1, 19), (-3, 11)]).unwrap(), 96);
        assert_eq!(
            crt_combine(&[(1, 6), (1, 4)]),
            Err(Error::NotCoprime { a: 6, b: 4 })
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod_prime(1, 7).unwrap(), Some((1, 6)));
        // squares mod 7 are {1, 2, 4}
        assert_eq!(sqrt_mod_prime(3, 7).unwrap(), None);
        assert_eq!(sqrt_mod_prime(0, 13).unwrap(), Some((0, 0)));
        assert_eq!(sqrt_mod_prime(4, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(sqrt_mod_prime(4, 15), Err(Error::NotOddPrime(15)));

        // x^2 + 3x + 3 = 0 mod 31 via the discriminant -3
        let (r, _) = sqrt_mod_prime(-3, 31).unwrap().unwrap();
        assert_eq!(mul_mod(r, r, 31), 28);
        let half = inv_mod(2, 31).unwrap();
        let x1 = mul_mod(reduce(-3 + r as i64, 31), half, 31);
        let x2 = mul_mod(reduce(-3 - r as i64, 31), half, 31);
        assert_eq!((x1 + x2) % 31, 28); // -3
        assert_eq!(mul_mod(x1, x2, 31), 3);
        let mut roots = [x1, x2];
        roots.sort();
        let brute: Vec<u64> = (0..31).filter(|x| (x * x + 3 * x + 3) % 31 == 0).collect();
        assert_eq!(roots.to_vec(), brute);
    }

    #[test]
    fn tonelli_shanks_on_1_mod_8_prime() {
        // 17 and 97 have p - 1 divisible by 16 and 32 respectively
        for p in [17u64, 97, 257, 7681] {
            for a in 1..p.min(300) {
                if let Some((r, s)) = sqrt_mod_prime(a as i64, p).unwrap() {
                    assert_eq!(mul_mod(r, r, p), a);
                    assert_eq!((r + s) % p, 0);
                }
            }
        }
    }
}
