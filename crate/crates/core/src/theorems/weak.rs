//! Weak decompositions of `U_n`, `n` prime, with orders `{1, 6, p}`.

use crate::arith::{factorize, inv_mod, is_prime, Modulus};
use crate::error::{Error, Result};
use crate::search::{find_3ap, ApDecomposition};

use super::{Construction, TheoremOutcome};

fn large_prime_factors(n: u64) -> Vec<u64> {
    if n < 7 || (n - 1) % 6 != 0 {
        return Vec::new();
    }
    factorize((n - 1) / 6)
        .map(|f| f.primes().filter(|&r| r > 3).collect())
        .unwrap_or_default()
}

/// All weak decompositions with orders `{1, 6, p}` for primes `p > 3`
/// dividing `(n-1)/6`, canonical orientation. When the trivial factor is in
/// the middle, `<a>_6 x <1> x <c>_p` satisfies `a = (c-1)^-1`; a failure of
/// that identity is reported as an invariant violation.
pub fn order6_weak_class(m: &Modulus) -> Result<Vec<ApDecomposition>> {
    let n = m.n();
    if !m.is_prime() {
        return Err(Error::Precondition(format!("{n} is not prime")));
    }
    let targets = large_prime_factors(n);
    if targets.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for d in find_3ap(m, true).into_iter().filter(|d| d.is_weak()) {
        let mut o = d.orders();
        o.sort_unstable();
        if !(o[0] == 1 && o[1] == 6 && targets.contains(&o[2])) {
            continue;
        }
        if d.factors[1].order == 1 {
            let (a, c) = if d.factors[0].order == 6 {
                (d.factors[0].generator, d.factors[2].generator)
            } else {
                (d.factors[2].generator, d.factors[0].generator)
            };
            if inv_mod((c + n - 1) % n, n) != Some(a) {
                return Err(Error::InvariantViolation(format!(
                    "{d} mod {n}: {a} is not the inverse of {c} - 1"
                )));
            }
        }
        out.push(d);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct Order6Weak;

impl Construction for Order6Weak {
    fn name(&self) -> &'static str {
        "order6-weak"
    }

    fn summary(&self) -> &'static str {
        "weak decompositions with orders {1, 6, p}"
    }

    fn in_family(&self, n: u64) -> bool {
        is_prime(n) && !large_prime_factors(n).is_empty()
    }

    fn apply(&self, m: &Modulus) -> Result<Vec<TheoremOutcome>> {
        let name = self.name();
        if !self.in_family(m.n()) {
            return Ok(vec![TheoremOutcome::out_of_family(
                name,
                m.n(),
                "requires a prime n = 1 mod 6p with p > 3 prime".into(),
            )]);
        }
        let found = order6_weak_class(m)?;
        if found.is_empty() {
            return Ok(vec![TheoremOutcome::failed(
                name,
                m.n(),
                "no weak decomposition with orders {1, 6, p}".into(),
            )]);
        }
        Ok(found
            .into_iter()
            .map(|d| TheoremOutcome::applies(name, d))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn examples() {
        let d = order6_weak_class(&m(43)).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].key(), ApDecomposition::from_generators(&m(43), &[1, 4, 7]).unwrap().key());

        assert_eq!(order6_weak_class(&m(223)).unwrap().len(), 2);

        let d = order6_weak_class(&m(67)).unwrap();
        assert_eq!(d.len(), 1);
        let want = ApDecomposition::from_generators(&m(67), &[1, 30, 59]).unwrap();
        assert_eq!(d[0].key(), want.key());
        assert_eq!(want.orders(), vec![1, 6, 11]);

        assert!(order6_weak_class(&m(37)).unwrap().is_empty());
        assert!(order6_weak_class(&m(91)).is_err());
    }
}
