//! Composite moduli: the nonexistence checks for multiples of 3, the
//! `n = pq` construction from `-3`, the root-pair search for
//! `p = q = 1 (mod 6)`, and the typing of lifts from weak decompositions.

use serde::{Deserialize, Serialize};

use crate::arith::{crt_combine, gcd, is_prime, primes_up_to, Modulus};
use crate::error::{Error, Result};
use crate::search::{find_3ap, ApDecomposition};

use super::prime::raw_roots;
use super::{certify, TheoremOutcome};

/// True when `U_{3p}` has no decomposition, strong or weak. Exhaustive.
pub fn no_decomposition_3p(p: u64) -> Result<bool> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not a prime > 3")));
    }
    Ok(find_3ap(&Modulus::new(3 * p)?, true).is_empty())
}

/// True when no progression `a, a+m, a+2m` with `n = 3m` is a decomposition
/// of `U_n`. Exhaustive over `a`.
pub fn no_decomposition_3m_with_diff_m(n: u64) -> Result<bool> {
    if n % 3 != 0 || n < 3 {
        return Err(Error::Precondition(format!("{n} is not a multiple of 3")));
    }
    let m = Modulus::new(n)?;
    let step = n / 3;
    Ok((1..n).all(|a| ApDecomposition::from_progression(&m, a, step, 3).is_err()))
}

const PQ_MINUS_THREE: &str = "pq-minus-three";

/// `U_pq = <-x-2>_{(p-1)/2} x <-1>_2 x <x>_{q-1}` with `x = 1 (mod p)` and
/// `x = -3 (mod q)`, when `ord_p(-3) = (p-1)/2` and `ord_q(-3) = q-1`.
pub fn pq_minus_three(p: u64, q: u64) -> Result<TheoremOutcome> {
    for r in [p, q] {
        if r <= 3 || !is_prime(r) {
            return Err(Error::Precondition(format!("{r} is not a prime > 3")));
        }
    }
    if p == q || p % 4 != 3 {
        return Err(Error::Precondition(format!(
            "need distinct primes with p = 3 mod 4, got ({p}, {q})"
        )));
    }
    let n = p * q;
    let (mp, mq) = (Modulus::new(p)?, Modulus::new(q)?);
    let (op, oq) = (mp.order_of(p - 3)?, mq.order_of(q - 3)?);
    if op != (p - 1) / 2 || oq != q - 1 {
        return Ok(TheoremOutcome::failed(
            PQ_MINUS_THREE,
            n,
            format!(
                "ord_{p}(-3) = {op} (need {}), ord_{q}(-3) = {oq} (need {})",
                (p - 1) / 2,
                q - 1
            ),
        ));
    }
    let m = Modulus::new(n)?;
    let x = crt_combine(&[(1, p), (-3, q)])?;
    let w = certify(&m, &[(2 * n - x - 2) % n, n - 1, x], PQ_MINUS_THREE)?;
    let reduced: Vec<u64> = w.generators().iter().map(|g| g % p).collect();
    if reduced != vec![p - 3, p - 1, 1] {
        return Err(Error::InvariantViolation(format!(
            "{w} does not reduce to <-3> x <-1> x <1> mod {p}"
        )));
    }
    Ok(TheoremOutcome::applies(PQ_MINUS_THREE, w))
}

/// Every `(p, q)` with `p = 7 (mod 12)`, `q = 2 (mod 3)` and `pq < limit`,
/// in order of `n`, with the outcome of [`pq_minus_three`]. The congruences
/// are forced by the order conditions, so nothing that could apply is skipped.
pub fn pq_minus_three_scan(limit: u64) -> Result<Vec<(u64, u64, TheoremOutcome)>> {
    let primes: Vec<u64> = primes_up_to(limit / 5).into_iter().filter(|&r| r > 3).collect();
    let mut out = Vec::new();
    for &p in primes.iter().filter(|&&p| p % 12 == 7) {
        for &q in primes.iter().filter(|&&q| q % 3 == 2) {
            if q != p && p * q < limit {
                out.push((p, q, pq_minus_three(p, q)?));
            }
        }
    }
    out.sort_by_key(|(p, q, _)| (p * q, *p));
    Ok(out)
}

/// Two decompositions `<2x+3>_m x <x+1>_3 x <-1>_2` for the roots `x` and
/// `-3-x` of `x^2 + 3x + 3`; the second is the first with both
/// `x`-dependent generators negated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPair {
    pub x: u64,
    pub mate: u64,
    pub first: ApDecomposition,
    pub second: ApDecomposition,
}

fn split_pq(n: u64) -> Option<(u64, u64)> {
    let f = crate::arith::factorize(n).ok()?;
    match f.pairs() {
        [(p, 1), (q, 1)] => Some((*p, *q)),
        _ => None,
    }
}

/// `n = pq` with `p = q = 1 (mod 6)` and `gcd(p-1, q-1) = 6`.
pub fn pq_sextic_class(n: u64) -> bool {
    split_pq(n).is_some_and(|(p, q)| p % 6 == 1 && q % 6 == 1 && gcd(p - 1, q - 1) == 6)
}

pub fn pq_root_pairs(m: &Modulus) -> Result<Vec<RootPair>> {
    let n = m.n();
    let Some((p, q)) = split_pq(n).filter(|_| pq_sextic_class(n)) else {
        return Err(Error::Precondition(format!(
            "{n} is not pq with p = q = 1 mod 6 and gcd(p-1, q-1) = 6"
        )));
    };
    let (rp, rq) = match (raw_roots(p)?, raw_roots(q)?) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvariantViolation(format!("-3 is a non-residue mod {p} or {q}"))),
    };
    let mut roots = Vec::new();
    for a in [rp.0, rp.1] {
        for b in [rq.0, rq.1] {
            roots.push(crt_combine(&[(a as i64, p), (b as i64, q)])?);
        }
    }
    roots.sort_unstable();
    let build = |x: u64| {
        ApDecomposition::from_generators(m, &[(2 * x + 3) % n, (x + 1) % n, n - 1]).ok()
    };
    let mut out = Vec::new();
    for &x in &roots {
        let mate = (2 * n - 3 - x) % n;
        if mate < x {
            continue;
        }
        match (build(x), build(mate)) {
            (Some(first), Some(second)) => out.push(RootPair {
                x,
                mate,
                first,
                second,
            }),
            (None, None) => {}
            _ => {
                return Err(Error::InvariantViolation(format!(
                    "roots {x} and {mate} mod {n}: only one gives a decomposition"
                )))
            }
        }
    }
    Ok(out)
}

/// Lift type of a decomposition of `U_pq` lifted from a weak decomposition
/// of `U_q`, by where the generator lifted from 1 sits relative to the one
/// whose image has order 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftType {
    /// Lifted-from-1 generator first, order-4 image in the middle.
    A,
    /// Lifted-from-1 generator in the middle.
    B,
    /// Lifted-from-1 generator first, order-4 image last.
    C,
    /// The weak source has no generator of order 4.
    #[serde(rename = "-")]
    Unclassified,
}

impl LiftType {
    pub fn symbol(self) -> &'static str {
        match self {
            LiftType::A => "A",
            LiftType::B => "B",
            LiftType::C => "C",
            LiftType::Unclassified => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Entry {
    pub p: u64,
    pub q: u64,
    /// Oriented so the generator lifted from 1 comes first when it is at an end.
    pub decomposition: ApDecomposition,
    /// Position of the generator lifted from 1.
    pub starred: usize,
    pub lift_type: LiftType,
}

/// Types `d` relative to its reduction modulo `q`, which must be a weak
/// decomposition of `U_q`. Returns `d` reoriented as in [`Table2Entry`].
pub fn classify_lift_type(d: &ApDecomposition, q: u64) -> Result<Table2Entry> {
    if d.n % q != 0 || d.len() != 3 {
        return Err(Error::Precondition(format!("{q} does not divide {}", d.n)));
    }
    let mq = Modulus::new(q)?;
    let reduced: Vec<u64> = d.generators().iter().map(|g| g % q).collect();
    let source = ApDecomposition::from_generators(&mq, &reduced)
        .ok()
        .filter(|s| s.is_weak())
        .ok_or_else(|| {
            Error::Precondition(format!("{d} does not reduce to a weak decomposition mod {q}"))
        })?;
    let star = reduced.iter().position(|&g| g == 1).expect("weak");
    let d = if star == 2 { d.reversed() } else { d.clone() };
    let src = if star == 2 { source.reversed() } else { source };
    let starred = if star == 1 { 1 } else { 0 };
    let lift_type = match src.orders().iter().position(|&o| o == 4) {
        None => LiftType::Unclassified,
        Some(_) if starred == 1 => LiftType::B,
        Some(1) => LiftType::A,
        Some(_) => LiftType::C,
    };
    Ok(Table2Entry {
        p: d.n / q,
        q,
        decomposition: d,
        starred,
        lift_type,
    })
}

/// `n = pq < limit` with `p = q = 5 (mod 8)`, `q > 5` and
/// `gcd(p-1, q-1) = 4`, as ordered pairs.
pub fn table2_pairs(limit: u64) -> Vec<(u64, u64)> {
    let primes: Vec<u64> = primes_up_to(limit / 5).into_iter().filter(|r| r % 8 == 5).collect();
    let mut out = Vec::new();
    for &p in &primes {
        for &q in &primes {
            if p != q && q > 5 && p * q < limit && gcd(p - 1, q - 1) == 4 {
                out.push((p, q));
            }
        }
    }
    out.sort_by_key(|&(p, q)| (p * q, p));
    out
}

/// Every strong decomposition of `U_pq` for the pairs of [`table2_pairs`]
/// that reduces to a weak decomposition of `U_q`.
pub fn table2_lifts(limit: u64) -> Result<Vec<Table2Entry>> {
    let mut out = Vec::new();
    for (p, q) in table2_pairs(limit) {
        let m = Modulus::new(p * q)?;
        for d in find_3ap(&m, false) {
            if let Ok(e) = classify_lift_type(&d, q) {
                out.push(e);
            }
        }
    }
    Ok(out)
}
