//! Reproductions of the published tables and lists. Each one recomputes its
//! rows from scratch and, where reference data exists for the requested
//! limit, diffs them against [`crate::golden`].

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, primes_up_to, Modulus};
use crate::error::Result;
use crate::gf::{self, Field, FieldDecomposition, FieldSearchMode};
use crate::golden::{self, CoverageRow, Factors, QuarticRow};
use crate::lifting::table3_report;
use crate::search::{
    ap_chains, double_barrelled, find_3ap, quartets, strong_counts, ApDecomposition, BarrelCase,
    DTableOptions,
};
use crate::theorems::{
    coverage, order6_weak_class, pq_minus_three_scan, pq_root_pairs, pq_sextic_class,
    table2_lifts, Construction, ConstructionRegistry, Order5Variant, SexticFamily,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub id: String,
    pub title: String,
    pub limit: u64,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Headline counts, in display order.
    pub summary: Vec<(String, String)>,
    /// Whether reference data covers this limit.
    pub compared: bool,
    /// Disagreements with the reference data.
    pub diffs: Vec<String>,
}

impl TableReport {
    fn new(t: &dyn ReferenceTable, limit: u64, columns: &[&str]) -> Self {
        Self {
            id: t.id().into(),
            title: t.title().into(),
            limit,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summary: Vec::new(),
            compared: false,
            diffs: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn stat(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.into(), value.to_string()));
    }

    pub fn matches_reference(&self) -> bool {
        self.compared && self.diffs.is_empty()
    }
}

/// A reproducible table, selected by id.
pub trait ReferenceTable: Send + Sync {
    fn id(&self) -> &'static str;
    fn title(&self) -> &'static str;
    fn default_limit(&self) -> u64;
    fn build(&self, limit: u64) -> Result<TableReport>;
}

#[derive(Clone)]
pub struct TableRegistry {
    entries: BTreeMap<&'static str, Arc<dyn ReferenceTable>>,
}

impl TableRegistry {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, t: Arc<dyn ReferenceTable>) {
        self.entries.insert(t.id(), t);
    }

    pub fn get(&self, id: &str) -> Option<Arc<dyn ReferenceTable>> {
        self.entries.get(id).cloned()
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}

impl Default for TableRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(Nonexistence));
        r.register(Arc::new(DTable));
        r.register(Arc::new(Table1));
        r.register(Arc::new(Table2));
        r.register(Arc::new(Table3));
        for f in [SexticFamily::OddRoot, SexticFamily::DoubledRoot, SexticFamily::HalvedRoot] {
            r.register(Arc::new(SexticCoverage(f)));
        }
        r.register(Arc::new(QuarticCoverage { last: true }));
        r.register(Arc::new(QuarticCoverage { last: false }));
        for v in [Order5Variant::A, Order5Variant::B, Order5Variant::C] {
            r.register(Arc::new(Order5Table(v)));
        }
        r.register(Arc::new(DoubleBarrelledTable));
        r.register(Arc::new(QuartetTable));
        r.register(Arc::new(PqMinusThreeTable));
        r.register(Arc::new(Order6WeakTable));
        r.register(Arc::new(FieldTable));
        r
    }
}

fn fmt_factors(f: Factors) -> String {
    f.iter()
        .map(|(g, o)| format!("<{g}>_{o}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Checks a printed decomposition, recording a diff when it is not one or
/// its printed orders are wrong. Returns its canonical key.
fn check_printed(n: u64, f: Factors, diffs: &mut Vec<String>) -> Option<(u64, u64)> {
    let m = Modulus::new(n).ok()?;
    let gens: Vec<u64> = f.iter().map(|&(g, _)| g).collect();
    match ApDecomposition::from_generators(&m, &gens) {
        Err(e) => {
            diffs.push(format!("{n}: printed {} is not a decomposition ({e})", fmt_factors(f)));
            None
        }
        Ok(d) => {
            for (c, &(g, o)) in d.factors.iter().zip(f) {
                if c.order != o {
                    diffs.push(format!(
                        "{n}: printed order {o} for generator {g}, computed {}",
                        c.order
                    ));
                }
            }
            Some(d.key())
        }
    }
}

/// Two-way comparison of printed and computed decompositions by key.
fn compare_decomps<'a>(
    printed: impl IntoIterator<Item = (u64, Factors)>,
    computed: impl IntoIterator<Item = &'a ApDecomposition>,
    diffs: &mut Vec<String>,
) {
    let mut want = BTreeMap::new();
    for (n, f) in printed {
        if let Some(k) = check_printed(n, f, diffs) {
            want.insert((n, k), fmt_factors(f));
        }
    }
    let got: BTreeMap<(u64, (u64, u64)), String> = computed
        .into_iter()
        .map(|d| ((d.n, d.key()), d.to_string()))
        .collect();
    for (k, s) in &want {
        if !got.contains_key(k) {
            diffs.push(format!("{}: printed {s} not reproduced", k.0));
        }
    }
    for (k, s) in &got {
        if !want.contains_key(k) {
            diffs.push(format!("{}: computed {s} not in reference", k.0));
        }
    }
}

fn compare_lists(what: &str, printed: &[u64], computed: &[u64], diffs: &mut Vec<String>) {
    if printed != computed {
        diffs.push(format!("{what}: reference {printed:?}, computed {computed:?}"));
    }
}

fn prime_moduli(limit: u64, keep: impl Fn(u64) -> bool + Sync) -> Vec<u64> {
    primes_up_to(limit.saturating_sub(1)).into_iter().filter(|&p| keep(p)).collect()
}

pub struct Nonexistence;

impl ReferenceTable for Nonexistence {
    fn id(&self) -> &'static str {
        "nonexistence"
    }

    fn title(&self) -> &'static str {
        "primes n with at least three primes in n-1 and no strong decomposition"
    }

    fn default_limit(&self) -> u64 {
        300
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "n-1 factored", "strong"]);
        let candidates = prime_moduli(limit, |p| {
            p > 4 && factorize(p - 1).map(|f| f.len() >= 3).unwrap_or(false)
        });
        let counts: Vec<(u64, usize)> = candidates
            .par_iter()
            .map(|&p| Ok((p, find_3ap(&Modulus::new(p)?, false).len())))
            .collect::<Result<_>>()?;
        let mut missing = Vec::new();
        for (p, c) in counts {
            if c == 0 {
                missing.push(p);
                r.row(vec![p.to_string(), factorize(p - 1)?.to_string(), "0".into()]);
            }
        }
        r.stat("candidates", candidates.len());
        r.stat("without", missing.len());
        if limit == 300 {
            r.compared = true;
            compare_lists("primes", golden::NONEXISTENT_BELOW_300, &missing, &mut r.diffs);
        }
        Ok(r)
    }
}

pub struct DTable;

impl ReferenceTable for DTable {
    fn id(&self) -> &'static str {
        "D"
    }

    fn title(&self) -> &'static str {
        "most strong decompositions of any U_n with a given xi"
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["xi", "D", "attained at"]);
        let mut best: BTreeMap<u64, (u64, Vec<u64>)> = BTreeMap::new();
        for (n, xi, c) in strong_counts(limit, DTableOptions::default()) {
            let e = best.entry(xi).or_insert((0, Vec::new()));
            if c > e.0 {
                *e = (c, vec![n]);
            } else if c == e.0 {
                e.1.push(n);
            }
        }
        for (xi, (d, at)) in &best {
            r.row(vec![xi.to_string(), d.to_string(), join(at)]);
        }
        if limit == 1000 {
            r.compared = true;
            for &(xi, d) in golden::D_TABLE {
                match best.get(&xi) {
                    Some((c, _)) if *c == d => {}
                    Some((c, _)) => r.diffs.push(format!("xi = {xi}: reference {d}, computed {c}")),
                    None => r.diffs.push(format!("xi = {xi}: reference {d}, no modulus")),
                }
            }
            let printed: BTreeSet<u64> = golden::D_TABLE.iter().map(|&(xi, _)| xi).collect();
            for xi in best.keys().filter(|xi| !printed.contains(xi)) {
                r.diffs.push(format!("xi = {xi}: computed but not in reference"));
            }
        }
        Ok(r)
    }
}

pub struct Table1;

impl ReferenceTable for Table1 {
    fn id(&self) -> &'static str {
        "1"
    }

    fn title(&self) -> &'static str {
        "pairs <2x+3>_m x <x+1>_3 x <-1>_2 for n = pq, p = q = 1 mod 6"
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "x", "first", "mate", "second"]);
        let class: Vec<u64> = (1..limit).filter(|&n| pq_sextic_class(n)).collect();
        let mut uncovered = Vec::new();
        let mut pairs = BTreeSet::new();
        for &n in &class {
            let found = pq_root_pairs(&Modulus::new(n)?)?;
            if found.is_empty() {
                uncovered.push(n);
            }
            for p in found {
                r.row(vec![
                    n.to_string(),
                    p.x.to_string(),
                    p.first.to_string(),
                    p.mate.to_string(),
                    p.second.to_string(),
                ]);
                let (a, b) = (p.first.key(), p.second.key());
                pairs.insert((n, a.min(b), a.max(b)));
            }
        }
        r.stat("in class", class.len());
        r.stat("pairs", pairs.len());
        r.stat("uncovered", join(&uncovered));
        if limit == 1000 {
            r.compared = true;
            let mut want = BTreeSet::new();
            for row in golden::TABLE1 {
                for [f, s] in row.pairs {
                    let a = check_printed(row.n, f, &mut r.diffs);
                    let b = check_printed(row.n, s, &mut r.diffs);
                    if let (Some(a), Some(b)) = (a, b) {
                        want.insert((row.n, a.min(b), a.max(b)));
                    }
                }
            }
            for w in want.difference(&pairs) {
                r.diffs.push(format!("{}: printed pair {:?} not reproduced", w.0, (w.1, w.2)));
            }
            for w in pairs.difference(&want) {
                r.diffs.push(format!("{}: computed pair {:?} not in reference", w.0, (w.1, w.2)));
            }
            compare_lists("uncovered", golden::TABLE1_UNCOVERED, &uncovered, &mut r.diffs);
        }
        Ok(r)
    }
}

pub struct Table2;

impl ReferenceTable for Table2 {
    fn id(&self) -> &'static str {
        "2"
    }

    fn title(&self) -> &'static str {
        "lifts from weak decompositions of U_q to U_pq, typed A/B/C"
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "p", "q", "decomposition", "starred", "type"]);
        let entries = table2_lifts(limit)?;
        let mut got = BTreeMap::new();
        for e in &entries {
            let d = &e.decomposition;
            r.row(vec![
                d.n.to_string(),
                e.p.to_string(),
                e.q.to_string(),
                d.to_string(),
                e.starred.to_string(),
                e.lift_type.symbol().into(),
            ]);
            got.insert((d.n, d.key()), (e.starred, e.lift_type.symbol()));
        }
        r.stat("rows", entries.len());
        if limit == 1000 {
            r.compared = true;
            let mut want = BTreeMap::new();
            for row in golden::TABLE2 {
                if let Some(k) = check_printed(row.n, row.factors, &mut r.diffs) {
                    want.insert((row.n, k), (row.starred, row.lift_type, row.factors));
                }
            }
            for (k, (star, ty, f)) in &want {
                match got.get(k) {
                    None => r.diffs.push(format!("{}: printed {} not reproduced", k.0, fmt_factors(f))),
                    Some(&(s, t)) => {
                        if s != *star || t != ty.to_string() {
                            r.diffs.push(format!(
                                "{}: {} printed star {star} type {ty}, computed star {s} type {t}",
                                k.0,
                                fmt_factors(f)
                            ));
                        }
                    }
                }
            }
            // the printed table is a selection, so unlisted lifts are only counted
            let unlisted = got.keys().filter(|k| !want.contains_key(k)).count();
            r.stat("not listed in reference", unlisted);
        }
        Ok(r)
    }
}

pub struct Table3;

impl ReferenceTable for Table3 {
    fn id(&self) -> &'static str {
        "3"
    }

    fn title(&self) -> &'static str {
        "strong decompositions of U_kp^2 by provenance"
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(
            self,
            limit,
            &["n", "k", "p", "total", "from strong", "from weak", "other", "flags"],
        );
        let rows = table3_report(limit)?;
        for t in &rows {
            let flags = match (t.strong_sources_unproductive, t.weak_sources_unproductive) {
                (true, true) => "strong,weak unproductive",
                (true, false) => "strong unproductive",
                (false, true) => "weak unproductive",
                (false, false) => "",
            };
            r.row(vec![
                t.n.to_string(),
                t.k.to_string(),
                t.p.to_string(),
                t.total.to_string(),
                t.from_strong.to_string(),
                t.from_weak.to_string(),
                t.other.to_string(),
                flags.into(),
            ]);
            if t.constructed_from_strong != t.from_strong || t.constructed_from_weak != t.from_weak {
                r.diffs.push(format!(
                    "{}: lifting constructs {}/{} but reduction finds {}/{}",
                    t.n, t.constructed_from_strong, t.constructed_from_weak, t.from_strong, t.from_weak
                ));
            }
        }
        r.stat("rows", rows.len());
        if limit == 1000 {
            r.compared = true;
            for g in golden::TABLE3 {
                let Some(t) = rows.iter().find(|t| t.n == g.n) else {
                    r.diffs.push(format!("{}: printed row not reproduced", g.n));
                    continue;
                };
                let want = (g.total, g.from_strong, g.from_weak, g.other);
                let have = (t.total, t.from_strong, t.from_weak, t.other);
                if want != have {
                    r.diffs.push(format!("{}: reference {want:?}, computed {have:?}", g.n));
                }
                let flags = (t.strong_sources_unproductive, t.weak_sources_unproductive);
                if flags != (g.strong_asterisk, g.weak_asterisk) {
                    r.diffs.push(format!(
                        "{}: reference flags {:?}, computed {flags:?}",
                        g.n,
                        (g.strong_asterisk, g.weak_asterisk)
                    ));
                }
            }
            for t in rows.iter().filter(|t| !golden::TABLE3.iter().any(|g| g.n == t.n)) {
                r.diffs.push(format!(
                    "{}: computed row ({}, {}, {}, {}) not in reference",
                    t.n, t.total, t.from_strong, t.from_weak, t.other
                ));
            }
        }
        Ok(r)
    }
}

fn coverage_rows(r: &mut TableReport, c: &dyn Construction, limit: u64) -> Result<Vec<ApDecomposition>> {
    let rep = coverage(c, limit)?;
    let mut witnesses = Vec::new();
    for o in &rep.outcomes {
        let Some(w) = &o.witness else { continue };
        r.row(vec![
            o.n.to_string(),
            w.to_string(),
            o.root.map(|l| format!("{l:?}").to_lowercase()).unwrap_or_default(),
            o.root_order.map(|x| x.to_string()).unwrap_or_default(),
        ]);
        witnesses.push(w.clone());
    }
    r.stat("in class", rep.in_family);
    r.stat("covered", rep.covered);
    Ok(witnesses)
}

/// In-class primes below `limit` covered by none of `families`.
fn uncovered(families: &[&dyn Construction], limit: u64) -> Result<Vec<u64>> {
    let reports: Vec<_> = families.iter().map(|c| coverage(*c, limit)).collect::<Result<_>>()?;
    let covered: BTreeSet<u64> = reports.iter().flat_map(|r| r.covered_moduli()).collect();
    Ok(prime_moduli(limit, |p| families[0].in_family(p))
        .into_iter()
        .filter(|p| !covered.contains(p))
        .collect())
}

fn printed_rows(rows: &[CoverageRow]) -> impl Iterator<Item = (u64, Factors)> + '_ {
    rows.iter().map(|r| (r.n, r.factors))
}

pub struct SexticCoverage(pub SexticFamily);

impl SexticCoverage {
    fn reference(&self) -> &'static [CoverageRow] {
        match self.0 {
            SexticFamily::OddRoot => golden::ODD_ROOT_COVERAGE,
            SexticFamily::DoubledRoot => golden::DOUBLED_ROOT_COVERAGE,
            SexticFamily::HalvedRoot => golden::HALVED_ROOT_COVERAGE,
        }
    }

    fn reference_count(&self) -> usize {
        let (_, a, b, c) = golden::SEXTIC_COUNTS_1E5;
        match self.0 {
            SexticFamily::OddRoot => a,
            SexticFamily::DoubledRoot => b,
            SexticFamily::HalvedRoot => c,
        }
    }
}

impl ReferenceTable for SexticCoverage {
    fn id(&self) -> &'static str {
        match self.0 {
            SexticFamily::OddRoot => "coverage-2.1",
            SexticFamily::DoubledRoot => "coverage-2.2",
            SexticFamily::HalvedRoot => "coverage-2.3",
        }
    }

    fn title(&self) -> &'static str {
        match self.0 {
            SexticFamily::OddRoot => "coverage of <-x1-2>_3 x <-1>_2 x <x1>_m",
            SexticFamily::DoubledRoot => "coverage of <2x2+3>_m x <x2+1>_3 x <-1>_2",
            SexticFamily::HalvedRoot => "coverage of <z+1>_3 x <z/2>_m x <-1>_2",
        }
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "decomposition", "root", "root order"]);
        let witnesses = coverage_rows(&mut r, &self.0, limit)?;
        let all = [SexticFamily::OddRoot, SexticFamily::DoubledRoot, SexticFamily::HalvedRoot];
        let dyns: Vec<&dyn Construction> = all.iter().map(|f| f as &dyn Construction).collect();
        let missed = uncovered(&dyns, limit)?;
        r.stat("covered by none", if limit <= 1000 { join(&missed) } else { missed.len().to_string() });
        match limit {
            1000 => {
                r.compared = true;
                compare_decomps(printed_rows(self.reference()), &witnesses, &mut r.diffs);
                for g in self.reference().iter().filter(|g| g.root.is_some()) {
                    let want = format!("x{}", g.root.unwrap_or_default());
                    let row = r.rows.iter().find(|row| row[0] == g.n.to_string());
                    if let Some(row) = row.filter(|row| row[2] != want) {
                        r.diffs.push(format!("{}: reference root {want}, computed {}", g.n, row[2]));
                    }
                }
                compare_lists("covered by none", golden::SEXTIC_UNCOVERED, &missed, &mut r.diffs);
            }
            100_000 => {
                r.compared = true;
                let in_class = r.summary[0].1.parse::<usize>().unwrap_or_default();
                let covered = r.summary[1].1.parse::<usize>().unwrap_or_default();
                if in_class != golden::SEXTIC_COUNTS_1E5.0 {
                    r.diffs.push(format!(
                        "in class: reference {}, computed {in_class}",
                        golden::SEXTIC_COUNTS_1E5.0
                    ));
                }
                if covered != self.reference_count() {
                    r.diffs.push(format!(
                        "covered: reference {}, computed {covered}",
                        self.reference_count()
                    ));
                }
            }
            _ => {}
        }
        Ok(r)
    }
}

pub struct QuarticCoverage {
    pub last: bool,
}

impl ReferenceTable for QuarticCoverage {
    fn id(&self) -> &'static str {
        if self.last {
            "coverage-2.5"
        } else {
            "coverage-2.6"
        }
    }

    fn title(&self) -> &'static str {
        if self.last {
            "coverage of <x+1>_3 x <x+1+k>_4 x <x+1+2k>_mu"
        } else {
            "coverage of <x+1-k>_mu x <x+1>_3 x <x+1+k>_4"
        }
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "decomposition", "root", "ord(x)"]);
        let reg = ConstructionRegistry::default();
        let (this, other) = if self.last {
            ("quartic-last", "quartic-first")
        } else {
            ("quartic-first", "quartic-last")
        };
        let c = reg.get(this).expect("registered");
        let witnesses = coverage_rows(&mut r, c.as_ref(), limit)?;
        let o = reg.get(other).expect("registered");
        let missed = uncovered(&[c.as_ref(), o.as_ref()], limit)?;
        r.stat("covered by neither", join(&missed));
        if limit == 1000 {
            r.compared = true;
            let reference: &[QuarticRow] = if self.last {
                golden::QUARTIC_LAST_COVERAGE
            } else {
                golden::QUARTIC_FIRST_COVERAGE
            };
            compare_decomps(reference.iter().map(|q| (q.n, q.factors)), &witnesses, &mut r.diffs);
            for q in reference {
                let key = check_printed(q.n, q.factors, &mut Vec::new());
                let row = r.rows.iter().zip(&witnesses).find(|(_, w)| Some(w.key()) == key && w.n == q.n);
                if let Some((row, _)) = row.filter(|(row, _)| row[3] != q.root_order.to_string()) {
                    r.diffs.push(format!(
                        "{}: reference ord(x) = {}, computed {}",
                        q.n, q.root_order, row[3]
                    ));
                }
            }
            compare_lists("covered by neither", golden::QUARTIC_UNCOVERED, &missed, &mut r.diffs);
        }
        Ok(r)
    }
}

pub struct Order5Table(pub Order5Variant);

impl ReferenceTable for Order5Table {
    fn id(&self) -> &'static str {
        match self.0 {
            Order5Variant::A => "type-2.3a",
            Order5Variant::B => "type-2.3b",
            Order5Variant::C => "type-2.3c",
        }
    }

    fn title(&self) -> &'static str {
        match self.0 {
            Order5Variant::A => "<-z-2>_5 x <-1>_2 x <z>_nu for z of order 5",
            Order5Variant::B => "<2z+1>_nu x <z>_5 x <-1>_2 for z of order 5",
            Order5Variant::C => "<2z+1>_5 x <z>_nu x <-1>_2 for z of order 5",
        }
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "decomposition", "root", "root order"]);
        let witnesses = coverage_rows(&mut r, &self.0, limit)?;
        let all = [Order5Variant::A, Order5Variant::B, Order5Variant::C];
        let dyns: Vec<&dyn Construction> = all.iter().map(|v| v as &dyn Construction).collect();
        let missed = uncovered(&dyns, limit)?;
        r.stat("covered by none", join(&missed));
        if limit == 1000 {
            r.compared = true;
            let reference = match self.0 {
                Order5Variant::A => golden::ORDER5_A,
                Order5Variant::B => golden::ORDER5_B,
                Order5Variant::C => golden::ORDER5_C,
            };
            compare_decomps(printed_rows(reference), &witnesses, &mut r.diffs);
            compare_lists("covered by none", golden::ORDER5_NONE, &missed, &mut r.diffs);
        }
        Ok(r)
    }
}

pub struct DoubleBarrelledTable;

impl ReferenceTable for DoubleBarrelledTable {
    fn id(&self) -> &'static str {
        "double-barrelled"
    }

    fn title(&self) -> &'static str {
        "primes with two overlapping decompositions"
    }

    fn default_limit(&self) -> u64 {
        1000
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "case", "first", "second"]);
        let primes = prime_moduli(limit, |_| true);
        let found: Vec<Vec<_>> = primes
            .par_iter()
            .map(|&p| double_barrelled(&Modulus::new(p)?))
            .collect::<Result<_>>()?;
        let mut got = BTreeSet::new();
        for pair in found.into_iter().flatten() {
            let case = match pair.case {
                BarrelCase::Case1 => 1,
                BarrelCase::Case2 => 2,
            };
            r.row(vec![
                pair.first.n.to_string(),
                case.to_string(),
                pair.first.to_string(),
                pair.second.to_string(),
            ]);
            let (a, b) = (pair.first.key(), pair.second.key());
            got.insert((case, pair.first.n, a.min(b), a.max(b)));
        }
        for case in [1, 2] {
            r.stat(&format!("case {case} moduli"), join(moduli_of(&got, case)));
        }
        if limit == 1000 {
            r.compared = true;
            let mut want = BTreeSet::new();
            for (case, rows) in [(1, golden::DOUBLE_BARRELLED_FIRST), (2, golden::DOUBLE_BARRELLED_SECOND)] {
                for row in rows {
                    let a = check_printed(row.n, row.first, &mut r.diffs);
                    let b = check_printed(row.n, row.second, &mut r.diffs);
                    if let (Some(a), Some(b)) = (a, b) {
                        want.insert((case, row.n, a.min(b), a.max(b)));
                    }
                }
            }
            for w in want.difference(&got) {
                r.diffs.push(format!("{}: printed case-{} pair not reproduced", w.1, w.0));
            }
            for w in got.difference(&want) {
                r.diffs.push(format!("{}: computed case-{} pair {:?} not in reference", w.1, w.0, (w.2, w.3)));
            }
        }
        Ok(r)
    }
}

type BarrelRowKey = (u8, u64, (u64, u64), (u64, u64));

fn moduli_of(got: &BTreeSet<BarrelRowKey>, case: u8) -> Vec<u64> {
    let s: BTreeSet<u64> = got.iter().filter(|g| g.0 == case).map(|g| g.1).collect();
    s.into_iter().collect()
}

pub struct QuartetTable;

impl ReferenceTable for QuartetTable {
    fn id(&self) -> &'static str {
        "quartets"
    }

    fn title(&self) -> &'static str {
        "quartets for n = pqr with xi = 4"
    }

    fn default_limit(&self) -> u64 {
        500
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "lambda", "progression", "partner"]);
        let eligible: Vec<Modulus> = (3..limit)
            .step_by(2)
            .filter_map(|n| Modulus::new(n).ok())
            .filter(|m| {
                m.xi() == 4 && m.factorization().len() == 3 && m.factorization().pairs().iter().all(|&(_, e)| e == 1)
            })
            .collect();
        let mut got = BTreeMap::new();
        for m in &eligible {
            for q in quartets(m)? {
                r.row(vec![
                    m.n().to_string(),
                    m.lambda().to_string(),
                    join(q.progression),
                    join(q.partner_progression),
                ]);
                let mut both = [q.progression, q.partner_progression];
                both.sort_unstable();
                got.insert(m.n(), (m.lambda(), both));
            }
        }
        r.stat("moduli", eligible.len());
        let chain = golden::QUARTET_CHAIN_315;
        let chain_terms: Vec<u64> = chain.2.iter().map(|&(g, _)| g).collect();
        let found_chain = Modulus::new(chain.0)
            .map(|m| ap_chains(&m))?
            .into_iter()
            .find(|c| c.terms.to_vec() == chain_terms);
        r.stat(
            &format!("{} chain end product", chain.0),
            found_chain.as_ref().map_or("absent".into(), |c| c.end_product_holds.to_string()),
        );
        if limit > golden::QUARTETS.iter().map(|q| q.n).max().unwrap_or(0) {
            r.compared = true;
            for g in golden::QUARTETS {
                let mut want = g.progressions;
                want.sort_unstable();
                match got.get(&g.n) {
                    Some((l, have)) if *l == g.lambda && *have == want => {}
                    Some(have) => r.diffs.push(format!(
                        "{}: reference ({}, {:?}), computed {have:?}",
                        g.n, g.lambda, g.progressions
                    )),
                    None => r.diffs.push(format!("{}: printed quartet not reproduced", g.n)),
                }
            }
            match found_chain {
                None => r.diffs.push(format!("{}: chain {chain_terms:?} not found", chain.0)),
                Some(c) => {
                    let orders: Vec<u64> = chain.2.iter().map(|&(_, o)| o).collect();
                    if c.orders.to_vec() != orders || c.end_product_holds {
                        r.diffs.push(format!("{}: chain {:?} orders {:?}", chain.0, c.terms, c.orders));
                    }
                }
            }
        }
        Ok(r)
    }
}

pub struct PqMinusThreeTable;

impl ReferenceTable for PqMinusThreeTable {
    fn id(&self) -> &'static str {
        "pq-minus-three"
    }

    fn title(&self) -> &'static str {
        "<-x-2> x <-1>_2 x <x> with x = 1 mod p, x = -3 mod q"
    }

    fn default_limit(&self) -> u64 {
        300
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "p", "q", "result"]);
        let scan = pq_minus_three_scan(limit)?;
        let mut witnesses = Vec::new();
        let mut failures = Vec::new();
        for (p, q, o) in &scan {
            let text = match &o.witness {
                Some(w) => {
                    witnesses.push(w.clone());
                    w.to_string()
                }
                None => {
                    failures.push((*p, *q));
                    format!("fails: {}", o.diagnostics.join("; "))
                }
            };
            r.row(vec![(p * q).to_string(), p.to_string(), q.to_string(), text]);
        }
        r.stat("applies", witnesses.len());
        r.stat("fails", failures.len());
        if limit == 300 {
            r.compared = true;
            compare_decomps(
                golden::PQ_MINUS_THREE.iter().map(|row| (row.p * row.q, row.factors)),
                &witnesses,
                &mut r.diffs,
            );
            let (p, q, ord) = golden::PQ_MINUS_THREE_FAILURE;
            if failures != [(p, q)] {
                r.diffs.push(format!("failures: reference [({p}, {q})], computed {failures:?}"));
            }
            let have = Modulus::new(q)?.order_of(q - 3)?;
            if have != ord {
                r.diffs.push(format!("ord_{q}(-3): reference {ord}, computed {have}"));
            }
        }
        Ok(r)
    }
}

pub struct Order6WeakTable;

impl ReferenceTable for Order6WeakTable {
    fn id(&self) -> &'static str {
        "section-5"
    }

    fn title(&self) -> &'static str {
        "weak decompositions of prime moduli with orders {1, 6, p}"
    }

    fn default_limit(&self) -> u64 {
        300
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["n", "decomposition"]);
        let reg = ConstructionRegistry::default();
        let c = reg.get("order6-weak").expect("registered");
        let primes = prime_moduli(limit, |p| c.in_family(p));
        let found: Vec<Vec<ApDecomposition>> = primes
            .par_iter()
            .map(|&p| order6_weak_class(&Modulus::new(p)?))
            .collect::<Result<_>>()?;
        let witnesses: Vec<ApDecomposition> = found.into_iter().flatten().collect();
        for w in &witnesses {
            r.row(vec![w.n.to_string(), w.to_string()]);
        }
        r.stat("decompositions", witnesses.len());
        if limit == 300 {
            r.compared = true;
            compare_decomps(golden::ORDER6_WEAK.iter().copied(), &witnesses, &mut r.diffs);
        }
        Ok(r)
    }
}

pub struct FieldTable;

/// Fields with a built-in defining polynomial.
pub const BUILTIN_FIELDS: &[(u64, u32)] = &[(11, 2), (11, 3), (19, 2), (19, 3), (23, 2), (29, 2)];

impl ReferenceTable for FieldTable {
    fn id(&self) -> &'static str {
        "gf"
    }

    fn title(&self) -> &'static str {
        "one decomposition of GF(p^k)^x per order list"
    }

    fn default_limit(&self) -> u64 {
        gf::MAX_FIELD_ORDER
    }

    fn build(&self, limit: u64) -> Result<TableReport> {
        let mut r = TableReport::new(self, limit, &["p", "k", "decomposition", "elements"]);
        let mut fields = BTreeMap::new();
        for &(p, k) in BUILTIN_FIELDS.iter().filter(|&&(p, k)| p.pow(k) <= limit) {
            let f = Field::new(p, k, None)?;
            let all = gf::find_3ap_field(&f, FieldSearchMode::All);
            for d in gf::find_3ap_field(&f, FieldSearchMode::OnePerOrderList) {
                r.row(vec![p.to_string(), k.to_string(), d.to_string(), join(d.elements)]);
            }
            fields.insert((p, k), (f, all));
        }
        r.stat("fields", fields.len());
        if fields.len() == BUILTIN_FIELDS.len() {
            r.compared = true;
            let mut printed_lists: BTreeMap<(u64, u32), BTreeSet<[u64; 3]>> = BTreeMap::new();
            for row in golden::FIELD_DECOMPOSITIONS {
                let (f, all) = &fields[&(row.p, row.k)];
                let exps = [row.factors[0].0, row.factors[1].0, row.factors[2].0];
                let orders = [row.factors[0].1, row.factors[1].1, row.factors[2].1];
                let d = FieldDecomposition::from_exponents(f, exps).expect("nonzero");
                let label = format!("GF({}^{}) {}", row.p, row.k, d);
                if d.orders != orders {
                    r.diffs.push(format!("{label}: printed orders {orders:?}"));
                }
                if !d.is_ap(f) || !d.is_direct_product(f) {
                    r.diffs.push(format!("{label}: not a decomposition"));
                } else if !all.contains(&d.canonical(f)) {
                    r.diffs.push(format!("{label}: not found by search"));
                }
                let mut o = orders;
                o.sort_unstable();
                printed_lists.entry((row.p, row.k)).or_default().insert(o);
            }
            for ((p, k), (_, all)) in &fields {
                let have = gf::order_lists(all);
                let want = printed_lists.get(&(*p, *k)).cloned().unwrap_or_default();
                if have != want {
                    r.diffs.push(format!("GF({p}^{k}): order lists {have:?}, reference {want:?}"));
                }
            }
            let (_, all) = &fields[&(11, 3)];
            let impossible = golden::GF11_3_IMPOSSIBLE;
            let holds = !gf::order_lists(all).contains(&impossible);
            r.stat("GF(11^3) avoids 2,5,133", holds);
            if !holds {
                r.diffs.push(format!("GF(11^3): found orders {impossible:?}"));
            }
        }
        Ok(r)
    }
}
