//! Lifting decompositions of `U_n` to `U_{np}` for an odd prime `p`.
//!
//! A lift keeps every generator's residue modulo `n`. Lifts are enumerated
//! directly: choosing lifts of the first two generators fixes the rest of
//! the progression, so there are `p^2` candidates, each pruned by the order
//! product and then checked with the direct-product test. The case analysis
//! (special lifts, spurious lifts, productivity) is reported alongside so the
//! count laws can be checked against the enumeration.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, Modulus, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::group::{CyclicFactor, ProductChecker};
use crate::search::{find_3ap, ApDecomposition, Strength};

/// One lift `x' = x (mod n)` that is a unit modulo `np`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lift {
    pub element: u64,
    pub order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "case")]
pub enum LiftCase {
    /// `p^2` divides `n`.
    PSquaredDivides,
    /// `p` divides `n` exactly once; `divisible` factor orders are multiples of `p`.
    PDividesOnce { divisible: u8 },
    /// `p` does not divide `n`.
    Coprime,
}

impl LiftCase {
    pub fn label(&self) -> String {
        match self {
            LiftCase::PSquaredDivides => "case 1".into(),
            LiftCase::PDividesOnce { divisible } => format!("case 2, subcase 2.{}", divisible + 1),
            LiftCase::Coprime => "case 3".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub source: ApDecomposition,
    pub p: u64,
    pub case: LiftCase,
    /// Per factor: the unique lift keeping the order, when there is exactly one.
    pub special_lifts: Vec<Option<u64>>,
    /// Per factor, case 3 only: the lift divisible by `p`.
    pub spurious_lifts: Vec<Option<u64>>,
    /// Whether the spurious lifts form an AP modulo `np` (case 3 only).
    pub spurious_in_ap: Option<bool>,
    /// Subcase 2.1 only.
    pub productive: Option<bool>,
    /// Every lift that is a (possibly weak) decomposition of `U_{np}`,
    /// written in the source's orientation.
    pub results: Vec<ApDecomposition>,
}

impl LiftReport {
    pub fn strong_results(&self) -> impl Iterator<Item = &ApDecomposition> {
        self.results.iter().filter(|d| d.strength == Strength::Strong)
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

fn lifted_modulus(n: u64, p: u64) -> Result<Modulus> {
    let np = n.checked_mul(p).filter(|&v| v <= MAX_MODULUS).ok_or(Error::OutOfRange {
        value: n.saturating_mul(p),
        limit: MAX_MODULUS,
    })?;
    Modulus::new(np)
}

/// All lifts `x + jn` (`0 <= j < p`) that are units modulo `np`, with orders.
pub fn lifts_of_element(x: u64, m: &Modulus, p: u64) -> Result<Vec<Lift>> {
    check_prime(p)?;
    let n = m.n();
    if !m.is_unit(x) {
        return Err(Error::NotUnit { x: x % n, n });
    }
    let lifted = lifted_modulus(n, p)?;
    Ok(all_lifts(x % n, n, p, &lifted)
        .into_iter()
        .flatten()
        .collect())
}

/// Lifts indexed by `j`; `None` where `x + jn` is not a unit mod `np`.
fn all_lifts(x: u64, n: u64, p: u64, lifted: &Modulus) -> Vec<Option<Lift>> {
    (0..p)
        .map(|j| {
            let element = x + j * n;
            lifted.order_of(element).ok().map(|order| Lift { element, order })
        })
        .collect()
}

fn special_of(lifts: &[Option<Lift>], order: u64) -> Option<u64> {
    let mut keep = lifts.iter().flatten().filter(|l| l.order == order);
    match (keep.next(), keep.next()) {
        (Some(l), None) => Some(l.element),
        _ => None,
    }
}

pub fn classify_case(d: &ApDecomposition, p: u64) -> LiftCase {
    let n = d.n;
    if n % (p * p) == 0 {
        LiftCase::PSquaredDivides
    } else if n % p == 0 {
        let divisible = d.factors.iter().filter(|f| f.order % p == 0).count() as u8;
        LiftCase::PDividesOnce { divisible }
    } else {
        LiftCase::Coprime
    }
}

fn is_ap(terms: &[u64], modulus: u64) -> bool {
    let diff = (terms[1] + modulus - terms[0]) % modulus;
    terms
        .windows(2)
        .all(|w| (w[1] + modulus - w[0]) % modulus == diff)
}

/// Special lifts of every generator of a subcase-2.1 decomposition.
fn special_lifts_21(d: &ApDecomposition, p: u64) -> Result<Vec<u64>> {
    if classify_case(d, p) != (LiftCase::PDividesOnce { divisible: 0 }) {
        return Err(Error::WrongSubcase { n: d.n, p });
    }
    let lifted = lifted_modulus(d.n, p)?;
    d.factors
        .iter()
        .map(|f| {
            special_of(&all_lifts(f.generator, d.n, p, &lifted), f.order).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "{} has no unique order-preserving lift to U_{}",
                    f.generator,
                    lifted.n()
                ))
            })
        })
        .collect()
}

/// A subcase-2.1 decomposition is unproductive when its special lifts are
/// in arithmetic progression modulo `np`.
pub fn is_productive(d: &ApDecomposition, p: u64) -> Result<bool> {
    check_prime(p)?;
    let special = special_lifts_21(d, p)?;
    Ok(!is_ap(&special, d.n * p))
}

pub fn lift_decompositions(d: &ApDecomposition, p: u64) -> Result<LiftReport> {
    check_prime(p)?;
    let n = d.n;
    let lifted = lifted_modulus(n, p)?;
    let np = lifted.n();
    let case = classify_case(d, p);

    let lifts: Vec<Vec<Option<Lift>>> = d
        .factors
        .iter()
        .map(|f| all_lifts(f.generator, n, p, &lifted))
        .collect();
    let special_lifts: Vec<Option<u64>> = d
        .factors
        .iter()
        .zip(&lifts)
        .map(|(f, l)| special_of(l, f.order))
        .collect();
    let (spurious_lifts, spurious_in_ap) = if case == LiftCase::Coprime {
        let s: Vec<Option<u64>> = d
            .factors
            .iter()
            .map(|f| (0..p).map(|j| f.generator + j * n).find(|e| e % p == 0))
            .collect();
        let terms: Vec<u64> = s.iter().flatten().copied().collect();
        let in_ap = terms.len() == s.len() && is_ap(&terms, np);
        (s, Some(in_ap))
    } else {
        (vec![None; d.len()], None)
    };
    let productive = if case == (LiftCase::PDividesOnce { divisible: 0 }) {
        let terms: Option<Vec<u64>> = special_lifts.iter().copied().collect();
        terms.map(|t| !is_ap(&t, np))
    } else {
        None
    };

    let mut checker = ProductChecker::new(np);
    let phi = lifted.phi();
    let len = d.len();
    let mut results = Vec::new();
    let mut pairs = vec![(0u64, 0u64); len];
    for a in lifts[0].iter().flatten() {
        'next: for b in lifts[1].iter().flatten() {
            let step = (b.element + np - a.element) % np;
            let mut term = a.element;
            let mut trivial = 0;
            let mut product = 1u64;
            for (i, slot) in pairs.iter_mut().enumerate() {
                let Some(l) = lifts[i][(term / n) as usize] else {
                    continue 'next;
                };
                debug_assert_eq!(l.element, term);
                trivial += (l.order == 1) as u32;
                product = product.saturating_mul(l.order);
                *slot = (term, l.order);
                term = (term + step) % np;
            }
            if trivial > 1 || product != phi || !checker.is_direct_product(phi, &pairs) {
                continue;
            }
            results.push(ApDecomposition {
                n: np,
                first: a.element,
                diff: step,
                factors: pairs
                    .iter()
                    .map(|&(generator, order)| CyclicFactor { generator, order })
                    .collect(),
                strength: if trivial == 1 {
                    Strength::Weak
                } else {
                    Strength::Strong
                },
            });
        }
    }

    Ok(LiftReport {
        source: d.clone(),
        p,
        case,
        special_lifts,
        spurious_lifts,
        spurious_in_ap,
        productive,
        results,
    })
}

/// Lifts a productive (possibly weak) decomposition of `U_p` to a strong
/// decomposition of `U_{p^alpha}` in which two orders are unchanged and the
/// third is multiplied by `p^(alpha-1)`.
pub fn lift_to_prime_power(d: &ApDecomposition, alpha: u32) -> Result<ApDecomposition> {
    let p = d.n;
    check_prime(p)?;
    if alpha < 2 {
        return Err(Error::Precondition(format!("alpha must be >= 2, got {alpha}")));
    }
    let special = special_lifts_21(d, p)?;
    if is_ap(&special, p * p) {
        return Err(Error::Unproductive {
            n: p,
            p,
            special,
        });
    }
    let mut current = d.clone();
    for level in 2..=alpha {
        let report = lift_decompositions(&current, p)?;
        current = report
            .strong_results()
            .find(|r| {
                let grown = r
                    .factors
                    .iter()
                    .zip(&current.factors)
                    .filter(|(a, b)| a.order != b.order)
                    .count();
                grown == 1
            })
            .cloned()
            .ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "no strong lift of {current} to U_{}^{level}",
                    p
                ))
            })?;
    }
    Ok(current)
}

/// One row of the `n = k p^2` enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub n: u64,
    pub k: u64,
    pub p: u64,
    pub total: usize,
    pub from_strong: usize,
    pub from_weak: usize,
    pub other: usize,
    /// Strong decompositions of `U_{kp}` exist but all have special lifts in AP.
    pub strong_sources_unproductive: bool,
    pub weak_sources_unproductive: bool,
    /// Distinct strong lifts produced by [`lift_decompositions`] from strong
    /// and weak sources; must agree with `from_strong` and `from_weak`.
    pub constructed_from_strong: usize,
    pub constructed_from_weak: usize,
}

/// Moduli `n = k p^2 <= limit` with `k`, `p` distinct primes above 3.
pub fn kp2_moduli(limit: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    let primes: Vec<u64> = (5..=limit / 25).filter(|&q| is_prime(q)).collect();
    for &p in &primes {
        for &k in &primes {
            if k != p && k * p * p <= limit {
                out.push((k * p * p, k, p));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn table3_row(k: u64, p: u64) -> Result<Table3Row> {
    let kp = Modulus::new(k * p)?;
    let n = Modulus::new(k * p * p)?;
    let catalog = find_3ap(&kp, true);
    let decomps = find_3ap(&n, false);

    let (mut from_strong, mut from_weak, mut other) = (0, 0, 0);
    for d in &decomps {
        let reduced: Vec<u64> = d.generators().iter().map(|g| g % kp.n()).collect();
        match ApDecomposition::from_generators(&kp, &reduced) {
            Ok(src) if src.strength == Strength::Strong => from_strong += 1,
            Ok(_) => from_weak += 1,
            Err(_) => other += 1,
        }
    }

    let mut constructed = [BTreeSet::new(), BTreeSet::new()];
    let mut unproductive = [true, true];
    let mut present = [false, false];
    for src in &catalog {
        let slot = (src.strength == Strength::Weak) as usize;
        present[slot] = true;
        let report = lift_decompositions(src, p)?;
        if report.productive != Some(false) {
            unproductive[slot] = false;
        }
        for r in report.strong_results() {
            constructed[slot].insert(r.key());
        }
    }

    Ok(Table3Row {
        n: n.n(),
        k,
        p,
        total: decomps.len(),
        from_strong,
        from_weak,
        other,
        strong_sources_unproductive: present[0] && unproductive[0],
        weak_sources_unproductive: present[1] && unproductive[1],
        constructed_from_strong: constructed[0].len(),
        constructed_from_weak: constructed[1].len(),
    })
}

pub fn table3_report(limit: u64) -> Result<Vec<Table3Row>> {
    kp2_moduli(limit)
        .into_iter()
        .map(|(_, k, p)| table3_row(k, p))
        .collect()
}
