//! Exhaustive search for decompositions of `U_n` whose generators form an
//! arithmetic progression, plus the classifications built on top of it.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mul_mod, pow_mod, Modulus};
use crate::error::{Error, Result};
use crate::group::{CyclicFactor, OrderTable, ProductChecker};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Strong,
    Weak,
}

/// `U_n = <x> x <x+k> x <x+2k> (x <x+3k>)` with every factor's order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ApDecomposition {
    pub n: u64,
    pub first: u64,
    pub diff: u64,
    pub factors: Vec<CyclicFactor>,
    pub strength: Strength,
}

impl ApDecomposition {
    /// Builds and verifies the progression `first, first+diff, ...` of the
    /// given length. At most one trivial factor is permitted.
    pub fn from_progression(m: &Modulus, first: u64, diff: u64, len: usize) -> Result<Self> {
        let n = m.n();
        let (first, diff) = (first % n, diff % n);
        if diff == 0 {
            return Err(Error::NotDecomposition("common difference is 0".into()));
        }
        let mut factors = Vec::with_capacity(len);
        let mut g = first;
        for _ in 0..len {
            if !m.is_unit(g) {
                return Err(Error::NotUnit { x: g, n });
            }
            factors.push(CyclicFactor::new(m, g)?);
            g = (g + diff) % n;
        }
        let trivial = factors.iter().filter(|f| f.order == 1).count();
        if trivial > 1 {
            return Err(Error::NotDecomposition(format!(
                "{trivial} trivial factors"
            )));
        }
        let pairs: Vec<(u64, u64)> = factors.iter().map(|f| (f.generator, f.order)).collect();
        let ok = if m.lambda() == m.phi() {
            cyclic_direct_product(m.phi(), &pairs)
        } else {
            ProductChecker::new(n).is_direct_product(m.phi(), &pairs)
        };
        if !ok {
            return Err(Error::NotDecomposition(format!(
                "generators {:?} do not give a direct product of U_{n}",
                pairs.iter().map(|p| p.0).collect::<Vec<_>>()
            )));
        }
        Ok(Self {
            n,
            first,
            diff,
            factors,
            strength: if trivial == 1 {
                Strength::Weak
            } else {
                Strength::Strong
            },
        })
    }

    /// Builds a decomposition from explicit generators, which must be in
    /// arithmetic progression modulo `n`.
    pub fn from_generators(m: &Modulus, gens: &[u64]) -> Result<Self> {
        let n = m.n();
        if gens.len() < 2 {
            return Err(Error::NotDecomposition("need at least two generators".into()));
        }
        let g: Vec<u64> = gens.iter().map(|x| x % n).collect();
        let diff = (g[1] + n - g[0]) % n;
        if g.windows(2).any(|w| (w[1] + n - w[0]) % n != diff) {
            return Err(Error::NotDecomposition(format!(
                "{g:?} is not an arithmetic progression mod {n}"
            )));
        }
        Self::from_progression(m, g[0], diff, g.len())
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn generators(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.generator).collect()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order).collect()
    }

    pub fn is_weak(&self) -> bool {
        self.strength == Strength::Weak
    }

    /// The same decomposition written in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut factors = self.factors.clone();
        factors.reverse();
        Self {
            n: self.n,
            first: factors[0].generator,
            diff: self.n - self.diff,
            factors,
            strength: self.strength,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.diff <= self.n - self.diff
    }

    /// `(first, diff)` of the canonical orientation; identifies the
    /// decomposition up to reversal.
    pub fn key(&self) -> (u64, u64) {
        let c = canonicalize(self);
        (c.first, c.diff)
    }
}

impl fmt::Display for ApDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "<{}>_{}", c.generator, c.order)?;
        }
        Ok(())
    }
}

/// In a cyclic group of order `phi`, subgroups of pairwise coprime orders
/// multiplying to `phi` always form a direct product.
fn cyclic_direct_product(phi: u64, pairs: &[(u64, u64)]) -> bool {
    let product = pairs.iter().try_fold(1u64, |acc, &(_, a)| acc.checked_mul(a));
    product == Some(phi)
        && pairs
            .iter()
            .enumerate()
            .all(|(i, a)| pairs[i + 1..].iter().all(|b| gcd(a.1, b.1) == 1))
}

/// Of the two ways of writing a decomposition, the one with the smaller
/// common difference.
pub fn canonicalize(d: &ApDecomposition) -> ApDecomposition {
    if d.is_canonical() {
        d.clone()
    } else {
        d.reversed()
    }
}

/// Whether decompositions are counted once (up to reversal) or once per
/// direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientations {
    #[default]
    Canonical,
    Both,
}

impl Orientations {
    pub fn scale(self, count: u64) -> u64 {
        match self {
            Orientations::Canonical => count,
            Orientations::Both => 2 * count,
        }
    }
}

fn scan_diff<const L: usize>(
    m: &Modulus,
    table: &[u32],
    k: u64,
    allow_weak: bool,
    checker: &mut ProductChecker,
) -> Vec<ApDecomposition> {
    let n = m.n();
    let phi = m.phi();
    let mut out = Vec::new();
    let mut idx = [0u64; L];
    let mut ord = [0u64; L];
    'outer: for x in 1..n {
        let mut g = x;
        let mut product = 1u64;
        let mut trivial = 0;
        for i in 0..L {
            let o = table[g as usize] as u64;
            if o == 0 {
                continue 'outer;
            }
            trivial += (o == 1) as u32;
            product *= o;
            idx[i] = g;
            ord[i] = o;
            g += k;
            if g >= n {
                g -= n;
            }
        }
        if product != phi || trivial > allow_weak as u32 {
            continue;
        }
        let mut pairs = [(0u64, 0u64); L];
        for i in 0..L {
            pairs[i] = (idx[i], ord[i]);
        }
        if checker.is_direct_product(phi, &pairs) {
            out.push(ApDecomposition {
                n,
                first: x,
                diff: k,
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
    out
}

/// All canonical decompositions with `len` generators in AP, sorted by
/// `(diff, first)`. Weak ones are included only when `allow_weak` is set.
pub fn find_ap_with(
    m: &Modulus,
    table: &OrderTable,
    len: usize,
    allow_weak: bool,
) -> Vec<ApDecomposition> {
    let n = m.n();
    if n < 3 {
        return Vec::new();
    }
    let raw = table.raw();
    let per_diff: Vec<Vec<ApDecomposition>> = (1..=n / 2)
        .into_par_iter()
        .map_init(
            || ProductChecker::new(n),
            |checker, k| match len {
                3 => scan_diff::<3>(m, raw, k, allow_weak, checker),
                4 => scan_diff::<4>(m, raw, k, allow_weak, checker),
                _ => unimplemented!("only 3- and 4-term progressions are searched"),
            },
        )
        .collect();
    per_diff.into_iter().flatten().collect()
}

pub fn find_ap(m: &Modulus, len: usize, allow_weak: bool) -> Vec<ApDecomposition> {
    find_ap_with(m, &OrderTable::new(m), len, allow_weak)
}

pub fn find_3ap(m: &Modulus, allow_weak: bool) -> Vec<ApDecomposition> {
    find_ap(m, 3, allow_weak)
}

pub fn find_4ap(m: &Modulus, allow_weak: bool) -> Vec<ApDecomposition> {
    find_ap(m, 4, allow_weak)
}

/// `(strong, weak)` counts of canonical 3AP decompositions.
pub fn count_3ap(m: &Modulus) -> (u64, u64) {
    find_3ap(m, true).iter().fold((0, 0), |(s, w), d| match d.strength {
        Strength::Strong => (s + 1, w),
        Strength::Weak => (s, w + 1),
    })
}

/// Which moduli enter the maximum-count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTableOptions {
    pub odd_only: bool,
    pub orientations: Orientations,
}

impl Default for DTableOptions {
    fn default() -> Self {
        Self {
            odd_only: false,
            orientations: Orientations::Canonical,
        }
    }
}

/// Strong 3AP counts for every modulus `3 <= n <= limit`, as `(n, xi, count)`.
pub fn strong_counts(limit: u64, opts: DTableOptions) -> Vec<(u64, u64, u64)> {
    (3..=limit)
        .filter(|n| !opts.odd_only || n % 2 == 1)
        .map(|n| {
            let m = Modulus::new(n).expect("in range");
            let c = find_3ap(&m, false).len() as u64;
            (n, m.xi(), opts.orientations.scale(c))
        })
        .collect()
}

/// For every `xi` occurring among `n <= limit`, the largest number of strong
/// 3AP decompositions of any such `U_n`.
pub fn d_table(limit: u64, opts: DTableOptions) -> BTreeMap<u64, u64> {
    let mut table = BTreeMap::new();
    for (_, xi, c) in strong_counts(limit, opts) {
        let e = table.entry(xi).or_insert(0);
        *e = (*e).max(c);
    }
    table
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FeatureTags {
    pub orders_in_ap: bool,
    pub consecutive_generators: bool,
    pub x_equals_k: bool,
    pub outer_generators_differ_by_one: bool,
    pub negative_consecutive: bool,
}

pub fn classify_features(d: &ApDecomposition) -> FeatureTags {
    let n = d.n;
    let g = d.generators();
    let o: Vec<i64> = d.orders().iter().map(|&x| x as i64).collect();
    let last = g.len() - 1;
    let steps_by = |step: i64| g.windows(2).all(|w| w[1] as i64 - w[0] as i64 == step);
    let negatives: Vec<u64> = (1..=g.len() as u64).rev().map(|i| n - i).collect();
    let mut rev = g.clone();
    rev.reverse();
    FeatureTags {
        orders_in_ap: o.windows(3).all(|w| w[1] - w[0] == w[2] - w[1]),
        consecutive_generators: steps_by(1) || steps_by(-1),
        x_equals_k: d.first == d.diff || g[last] == n - d.diff,
        outer_generators_differ_by_one: g[0].abs_diff(g[last]) == 1,
        negative_consecutive: g == negatives || rev == negatives,
    }
}

/// Which of the multiplicity phenomena occur among the strong 3AP
/// decompositions of one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhenomenaReport {
    pub n: u64,
    /// [A]: more than one factorisation `phi = a*b*c` is realised.
    pub different_factorisations: bool,
    /// [B]: one factorisation realised with different middle orders.
    pub different_middle_orders: bool,
    /// [C]: one ordered factorisation realised more than once.
    pub repeated_ordered_factorisation: bool,
    pub order_multisets: Vec<Vec<u64>>,
    pub middle_orders: Vec<(Vec<u64>, Vec<u64>)>,
    pub repeated_order_tuples: Vec<(Vec<u64>, usize)>,
}

pub fn multiplicity_phenomena(m: &Modulus) -> PhenomenaReport {
    let decomps = find_3ap(m, false);
    let mut middles: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
    let mut tuples: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for d in &decomps {
        let o = d.orders();
        let mut sorted = o.clone();
        sorted.sort_unstable();
        let mid = middles.entry(sorted).or_default();
        if !mid.contains(&o[1]) {
            mid.push(o[1]);
        }
        let mut r = o.clone();
        r.reverse();
        *tuples.entry(o.min(r)).or_default() += 1;
    }
    for v in middles.values_mut() {
        v.sort_unstable();
    }
    let repeated: Vec<(Vec<u64>, usize)> =
        tuples.into_iter().filter(|&(_, c)| c > 1).collect();
    PhenomenaReport {
        n: m.n(),
        different_factorisations: middles.len() > 1,
        different_middle_orders: middles.values().any(|v| v.len() > 1),
        repeated_ordered_factorisation: !repeated.is_empty(),
        order_multisets: middles.keys().cloned().collect(),
        middle_orders: middles.into_iter().collect(),
        repeated_order_tuples: repeated,
    }
}

/// `b` lies in `<a>` and has the same order, i.e. each is a power of the other.
pub fn same_cyclic_subgroup(m: &Modulus, a: u64, b: u64) -> bool {
    let (Ok(oa), Ok(ob)) = (m.order_of(a), m.order_of(b)) else {
        return false;
    };
    if oa != ob {
        return false;
    }
    let mut p = 1;
    for _ in 0..oa {
        if p == b % m.n() {
            return true;
        }
        p = mul_mod(p, a, m.n());
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BarrelCase {
    /// `<k><k+z><k+2z> = <k-2z><k><k+2z>`
    Case1,
    /// `<k><k+z><k+2z> = <k+z><k+2z><k+3z>`
    Case2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleBarrelled {
    pub case: BarrelCase,
    pub first: ApDecomposition,
    pub second: ApDecomposition,
}

/// Pairs of overlapping strong 3AP decompositions of `U_n` (`n` prime)
/// sharing two generators in one of the two patterns.
pub fn double_barrelled(m: &Modulus) -> Result<Vec<DoubleBarrelled>> {
    if !m.is_prime() {
        return Err(Error::Precondition(format!("{} is not prime", m.n())));
    }
    let n = m.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in find_3ap(m, false) {
        for d in [base.clone(), base.reversed()] {
            let g = d.generators();
            let z = d.diff;
            // case 1: k - 2z must generate the same subgroup as k + z
            let w = (g[0] + 2 * (n - z)) % n;
            if same_cyclic_subgroup(m, w, g[1]) {
                if let Ok(second) = ApDecomposition::from_generators(m, &[w, g[0], g[2]]) {
                    push_pair(&mut out, &mut seen, BarrelCase::Case1, d.clone(), second);
                }
            }
            // case 2: k + 3z must generate the same subgroup as k
            let w = (g[2] + z) % n;
            if same_cyclic_subgroup(m, w, g[0]) {
                if let Ok(second) = ApDecomposition::from_generators(m, &[g[1], g[2], w]) {
                    push_pair(&mut out, &mut seen, BarrelCase::Case2, d.clone(), second);
                }
            }
        }
    }
    Ok(out)
}

/// Case and the two keys of a double-barrelled pair.
type PairKey = (BarrelCase, (u64, u64), (u64, u64));

fn push_pair(
    out: &mut Vec<DoubleBarrelled>,
    seen: &mut HashSet<PairKey>,
    case: BarrelCase,
    first: ApDecomposition,
    second: ApDecomposition,
) {
    let (a, b) = (first.key(), second.key());
    let key = (case, a.min(b), a.max(b));
    if seen.insert(key) {
        out.push(DoubleBarrelled {
            case,
            first,
            second,
        });
    }
}

/// A four-term progression whose two 3-term windows are both decompositions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApChain {
    pub terms: [u64; 4],
    pub orders: [u64; 4],
    /// Whether the last term is the product of the other three.
    pub end_product_holds: bool,
}

/// Every 4-term AP `[a, b, c, d]` of `U_n` with `[a, b, c]` and `[b, c, d]`
/// both strong decompositions, up to reversal.
pub fn ap_chains(m: &Modulus) -> Vec<ApChain> {
    let n = m.n();
    let decomps = find_3ap(m, false);
    let keys: HashSet<(u64, u64)> = decomps.iter().map(|d| (d.first, d.diff)).collect();
    let mut out = Vec::new();
    for base in &decomps {
        for d in [base.clone(), base.reversed()] {
            if !d.is_canonical() {
                // each chain is reported in the direction with the smaller difference
                continue;
            }
            let g = d.generators();
            let next = (g[2] + d.diff) % n;
            // same difference as d, so the shifted window is canonical too
            if keys.contains(&(g[1], d.diff)) {
                let terms = [g[0], g[1], g[2], next];
                let orders = terms.map(|t| m.order_of(t).expect("unit"));
                let prod = mul_mod(mul_mod(g[0], g[1], n), g[2], n);
                out.push(ApChain {
                    terms,
                    orders,
                    end_product_holds: prod == next,
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuartetResult {
    /// `[x, y, z, xyz]`; the first and last three terms are decompositions.
    pub progression: [u64; 4],
    pub partner_progression: [u64; 4],
    /// Unit multipliers `u` for which `[ux, uy, uz]` is again a decomposition.
    pub multipliers: Vec<u64>,
}

impl QuartetResult {
    /// The four 3-term windows, each as generators in progression order.
    pub fn windows(&self) -> [[u64; 3]; 4] {
        let p = self.progression;
        let q = self.partner_progression;
        [
            [p[0], p[1], p[2]],
            [p[1], p[2], p[3]],
            [q[0], q[1], q[2]],
            [q[1], q[2], q[3]],
        ]
    }
}

fn check_quartet_modulus(m: &Modulus) -> Result<()> {
    let f = m.factorization();
    if m.n() % 2 == 0 {
        return Err(Error::Precondition(format!("{} is even", m.n())));
    }
    if f.len() != 3 || f.pairs().iter().any(|&(_, e)| e != 1) {
        return Err(Error::Precondition(format!(
            "{} is not a product of three distinct odd primes",
            m.n()
        )));
    }
    if m.xi() != 4 {
        return Err(Error::Precondition(format!(
            "xi({}) = {}, not 4",
            m.n(),
            m.xi()
        )));
    }
    Ok(())
}

/// Multipliers `u` allowed by the `lambda mod 4` rule for a base
/// `[x, y, z]` with orders `(lambda, 2, 2)`.
pub fn quartet_multipliers(m: &Modulus, base: [u64; 3]) -> Vec<u64> {
    let n = m.n();
    let [x, y, z] = base;
    let lambda = m.lambda();
    let h = pow_mod(x, lambda / 2, n);
    let yz = mul_mod(y, z, n);
    if lambda % 4 == 0 {
        vec![h, yz, mul_mod(h, yz, n)]
    } else {
        vec![mul_mod(h, y, n), mul_mod(h, z, n), yz]
    }
}

/// Quartets of `U_n` for `n` a product of three distinct odd primes with
/// `xi(n) = 4`.
pub fn quartets(m: &Modulus) -> Result<Vec<QuartetResult>> {
    check_quartet_modulus(m)?;
    let n = m.n();
    let lambda = m.lambda();
    let mut bases: Vec<ApDecomposition> = find_3ap(m, false)
        .into_iter()
        .filter_map(|d| match d.orders().as_slice() {
            [a, 2, 2] if *a == lambda => Some(d),
            [2, 2, a] if *a == lambda => Some(d.reversed()),
            _ => None,
        })
        .collect();
    // Prefer the base whose third generator is -1, then the smallest x.
    bases.sort_by_key(|d| (d.factors[2].generator != n - 1, d.first));

    let mut claimed: HashSet<(u64, u64)> = HashSet::new();
    let mut out = Vec::new();
    for base in bases {
        if claimed.contains(&base.key()) {
            continue;
        }
        let [x, y, z] = [
            base.factors[0].generator,
            base.factors[1].generator,
            base.factors[2].generator,
        ];
        let multipliers: Vec<u64> = quartet_multipliers(m, [x, y, z])
            .into_iter()
            .filter(|&u| {
                ApDecomposition::from_generators(
                    m,
                    &[mul_mod(u, x, n), mul_mod(u, y, n), mul_mod(u, z, n)],
                )
                .is_ok()
            })
            .collect();
        let yz = mul_mod(y, z, n);
        let Some(&u) = multipliers.iter().find(|&&u| u != yz) else {
            continue;
        };
        let xyz = mul_mod(x, yz, n);
        let progression = [x, y, z, xyz];
        let (px, py, pz) = (mul_mod(u, x, n), mul_mod(u, y, n), mul_mod(u, z, n));
        let partner_progression = [px, py, pz, mul_mod(mul_mod(px, py, n), pz, n)];
        let result = QuartetResult {
            progression,
            partner_progression,
            multipliers,
        };
        for w in result.windows() {
            if let Ok(d) = ApDecomposition::from_generators(m, &w) {
                claimed.insert(d.key());
            }
        }
        out.push(result);
    }
    Ok(out)
}

/// Groups decompositions by their canonical key; handy for set comparisons.
pub fn key_set(decomps: &[ApDecomposition]) -> HashSet<(u64, u64)> {
    decomps.iter().map(|d| d.key()).collect()
}

/// Decompositions grouped by sorted order multiset.
pub fn by_order_multiset(decomps: &[ApDecomposition]) -> HashMap<Vec<u64>, Vec<ApDecomposition>> {
    let mut out: HashMap<Vec<u64>, Vec<ApDecomposition>> = HashMap::new();
    for d in decomps {
        let mut o = d.orders();
        o.sort_unstable();
        out.entry(o).or_default().push(d.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn dec(n: u64, gens: &[u64]) -> ApDecomposition {
        ApDecomposition::from_generators(&m(n), gens).unwrap()
    }

    #[test]
    fn seventy_one_has_no_strong_decomposition() {
        assert!(find_3ap(&m(71), false).is_empty());
    }

    #[test]
    fn thirty_one_contains_the_k3_example() {
        let found = find_3ap(&m(31), false);
        let d = found
            .iter()
            .find(|d| d.generators() == vec![30, 2, 5])
            .expect("(30, 2, 5) present");
        assert_eq!(d.orders(), vec![2, 5, 3]);
        assert_eq!(d.diff, 3);
    }

    #[test]
    fn results_sorted_and_canonical() {
        for n in [31u64, 91, 105, 175, 104] {
            let found = find_3ap(&m(n), true);
            for w in found.windows(2) {
                assert!((w[0].diff, w[0].first) < (w[1].diff, w[1].first));
            }
            assert!(found.iter().all(|d| d.is_canonical()));
        }
    }

    #[test]
    fn canonicalize_examples() {
        let a = dec(31, &[30, 2, 5]);
        assert_eq!(canonicalize(&a), a);
        let b = dec(31, &[5, 2, 30]);
        assert_eq!(b.diff, 28);
        let c = canonicalize(&b);
        assert_eq!((c.first, c.diff), (30, 3));
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn rejects_zero_diff_and_double_trivial() {
        assert!(ApDecomposition::from_progression(&m(7), 3, 0, 3).is_err());
        assert!(ApDecomposition::from_generators(&m(7), &[1, 4, 0]).is_err());
        assert!(ApDecomposition::from_generators(&m(31), &[5, 25, 14]).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_3ap(&m(175)).0, 6);
        assert_eq!(count_3ap(&m(605)).0, 0);
    }

    #[test]
    fn four_term_example_104() {
        let found = find_4ap(&m(104), false);
        let keys = key_set(&found);
        assert!(keys.contains(&dec(104, &[31, 81, 27, 77]).key()));
        assert!(keys.contains(&dec(104, &[77, 79, 81, 83]).key()));
        assert_eq!(dec(104, &[31, 81, 27, 77]).orders(), vec![4, 3, 2, 2]);
    }

    #[test]
    fn feature_examples() {
        assert!(classify_features(&dec(61, &[9, 11, 13])).orders_in_ap);
        assert!(classify_features(&dec(911, &[196, 550, 904])).orders_in_ap);
        assert!(classify_features(&dec(455, &[92, 93, 94])).consecutive_generators);
        assert!(classify_features(&dec(91, &[9, 18, 27])).x_equals_k);
        assert!(classify_features(&dec(91, &[87, 83, 79])).x_equals_k);
        assert!(classify_features(&dec(65, &[61, 57, 53])).x_equals_k);
        assert!(classify_features(&dec(275, &[136, 274, 137])).outer_generators_differ_by_one);
        assert!(classify_features(&dec(775, &[386, 774, 387])).outer_generators_differ_by_one);
        let t = classify_features(&dec(703, &[700, 701, 702]));
        assert!(t.negative_consecutive && t.consecutive_generators);
        let t = classify_features(&dec(31, &[30, 2, 5]));
        assert_eq!(t, FeatureTags::default());
    }

    #[test]
    fn phenomena_examples() {
        let r = multiplicity_phenomena(&m(211));
        assert!(r.different_factorisations);
        for ms in [vec![5, 6, 7], vec![2, 7, 15], vec![2, 3, 35]] {
            assert!(r.order_multisets.contains(&ms), "{ms:?}");
        }
        assert!(multiplicity_phenomena(&m(547)).different_middle_orders);
        assert!(multiplicity_phenomena(&m(31)).different_middle_orders);
        let r = multiplicity_phenomena(&m(191));
        assert!(r.repeated_ordered_factorisation);
        assert!(r
            .repeated_order_tuples
            .iter()
            .any(|(t, _)| t == &vec![5, 2, 19] || t == &vec![19, 2, 5]));
    }

    #[test]
    fn double_barrelled_examples() {
        let pairs = double_barrelled(&m(67)).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].case, BarrelCase::Case1);
        let keys = [pairs[0].first.key(), pairs[0].second.key()];
        assert!(keys.contains(&dec(67, &[29, 14, 66]).key()));
        assert!(keys.contains(&dec(67, &[59, 29, 66]).key()));

        let pairs = double_barrelled(&m(349)).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].case, BarrelCase::Case2);

        assert!(double_barrelled(&m(31))
            .unwrap()
            .iter()
            .all(|p| p.case != BarrelCase::Case1));
        assert!(double_barrelled(&m(91)).is_err());
    }

    #[test]
    fn quartet_examples() {
        let q = quartets(&m(105)).unwrap();
        let has = |a: [u64; 4], b: [u64; 4]| {
            q.iter()
                .any(|r| r.progression == a && r.partner_progression == b)
        };
        assert!(has([38, 71, 104, 32], [17, 29, 41, 53]), "{q:?}");
        let q = quartets(&m(231)).unwrap();
        assert!(q
            .iter()
            .any(|r| r.progression == [80, 155, 230, 74]
                && r.partner_progression == [179, 188, 197, 206]));
        assert!(matches!(quartets(&m(315)), Err(Error::Precondition(_))));
        assert!(matches!(quartets(&m(91)), Err(Error::Precondition(_))));
    }

    #[test]
    fn chain_counterexample_315() {
        let chains = ap_chains(&m(315));
        let c = chains
            .iter()
            .find(|c| c.terms == [8, 131, 254, 62] || c.terms == [62, 254, 131, 8])
            .expect("chain present");
        let mut o = c.orders;
        if c.terms[0] == 62 {
            o.reverse();
        }
        assert_eq!(o, [4, 6, 6, 4]);
        assert!(!c.end_product_holds);
    }
}
