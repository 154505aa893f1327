//! Explicit constructions of decompositions for special families of moduli,
//! and the checks that certify the accompanying nonexistence results.
//!
//! Every family sits behind the [`Construction`] trait so range scans and
//! the CLI can pick one by name from a [`ConstructionRegistry`].

mod composite;
mod prime;
mod weak;

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{primes_up_to, Modulus};
use crate::error::{Error, Result};
use crate::search::ApDecomposition;

pub use composite::{
    classify_lift_type, no_decomposition_3m_with_diff_m, no_decomposition_3p, pq_minus_three,
    pq_minus_three_scan, pq_root_pairs, pq_sextic_class, table2_lifts, table2_pairs, LiftType,
    RootPair, Table2Entry,
};
pub use prime::{
    classify_sextic, halved_root, order5_elements, order5_family, quadratic_roots,
    quartic_first, quartic_last, doubled_root, odd_root, Order5Variant, QuadraticRoots,
    RootLabel, SexticFamily,
};
pub use weak::order6_weak_class;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    Applies,
    HypothesisFailed,
    OutOfFamily,
}

/// Result of trying one construction on one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremOutcome {
    pub family: String,
    pub n: u64,
    pub applicability: Applicability,
    pub witness: Option<ApDecomposition>,
    /// Which root of `x^2 + 3x + 3` the witness was built from, if any.
    pub root: Option<RootLabel>,
    /// Order of that root.
    pub root_order: Option<u64>,
    pub diagnostics: Vec<String>,
}

impl TheoremOutcome {
    pub(crate) fn applies(family: &str, witness: ApDecomposition) -> Self {
        Self {
            family: family.into(),
            n: witness.n,
            applicability: Applicability::Applies,
            witness: Some(witness),
            root: None,
            root_order: None,
            diagnostics: Vec::new(),
        }
    }

    pub(crate) fn failed(family: &str, n: u64, why: String) -> Self {
        Self {
            family: family.into(),
            n,
            applicability: Applicability::HypothesisFailed,
            witness: None,
            root: None,
            root_order: None,
            diagnostics: vec![why],
        }
    }

    pub(crate) fn out_of_family(family: &str, n: u64, why: String) -> Self {
        Self {
            applicability: Applicability::OutOfFamily,
            ..Self::failed(family, n, why)
        }
    }

    pub(crate) fn with_root(mut self, root: RootLabel, order: u64) -> Self {
        self.root = Some(root);
        self.root_order = Some(order);
        self
    }

    pub fn is_applicable(&self) -> bool {
        self.applicability == Applicability::Applies
    }
}

/// Verifies that the given AP is a decomposition, surfacing a failure as an
/// invariant violation since the constructions are proven to succeed.
pub(crate) fn certify(m: &Modulus, gens: &[u64], family: &str) -> Result<ApDecomposition> {
    ApDecomposition::from_generators(m, gens).map_err(|e| {
        Error::InvariantViolation(format!("{family} construction {gens:?} mod {}: {e}", m.n()))
    })
}

/// A family of moduli with an explicit construction.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;

    /// Cheap membership test for the family's congruence conditions.
    fn in_family(&self, n: u64) -> bool;

    /// Every witness the construction yields for `m`. Moduli outside the
    /// family give a single out-of-family outcome.
    fn apply(&self, m: &Modulus) -> Result<Vec<TheoremOutcome>>;
}

/// Outcome of a construction over all primes below a limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub family: String,
    pub limit: u64,
    /// Primes below the limit in the family's congruence class.
    pub in_family: usize,
    /// Those for which the construction applies.
    pub covered: usize,
    pub outcomes: Vec<TheoremOutcome>,
}

impl CoverageReport {
    pub fn covered_moduli(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .outcomes
            .iter()
            .filter(|o| o.is_applicable())
            .map(|o| o.n)
            .collect();
        v.dedup();
        v
    }
}

/// Runs a construction over every prime below `limit`. Only applying
/// outcomes are kept.
pub fn coverage(c: &dyn Construction, limit: u64) -> Result<CoverageReport> {
    let candidates: Vec<u64> = primes_up_to(limit.saturating_sub(1))
        .into_iter()
        .filter(|&p| c.in_family(p))
        .collect();
    let per_prime: Vec<Vec<TheoremOutcome>> = candidates
        .par_iter()
        .map(|&p| {
            let m = Modulus::new(p)?;
            Ok(c.apply(&m)?.into_iter().filter(|o| o.is_applicable()).collect())
        })
        .collect::<Result<_>>()?;
    let covered = per_prime.iter().filter(|v| !v.is_empty()).count();
    Ok(CoverageReport {
        family: c.name().into(),
        limit,
        in_family: candidates.len(),
        covered,
        outcomes: per_prime.into_iter().flatten().collect(),
    })
}

/// Name-indexed set of constructions.
#[derive(Clone)]
pub struct ConstructionRegistry {
    entries: BTreeMap<&'static str, Arc<dyn Construction>>,
}

impl ConstructionRegistry {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, c: Arc<dyn Construction>) {
        self.entries.insert(c.name(), c);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn Construction>> {
        self.entries.get(name).cloned()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        for f in [SexticFamily::OddRoot, SexticFamily::DoubledRoot, SexticFamily::HalvedRoot] {
            r.register(Arc::new(f));
        }
        r.register(Arc::new(prime::QuarticLast));
        r.register(Arc::new(prime::QuarticFirst));
        for v in [Order5Variant::A, Order5Variant::B, Order5Variant::C] {
            r.register(Arc::new(v));
        }
        r.register(Arc::new(weak::Order6Weak));
        r
    }
}
