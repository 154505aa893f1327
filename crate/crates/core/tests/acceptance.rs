//! End-to-end acceptance checks against the published reference values.
//!
//! Runs as a plain binary (`harness = false`) so every criterion prints one
//! PASS/FAIL line regardless of output capture. Criteria listed in
//! `KNOWN_FAILURES` are still reported as FAIL; the process exits non-zero
//! if any other criterion fails, or if a known failure starts passing.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use apdecomp::arith::{factorize, gcd, primes_up_to, Modulus};
use apdecomp::gf::{self, Field, FieldDecomposition, FieldSearchMode};
use apdecomp::golden::{self, Factors};
use apdecomp::group::{is_direct_product, min_factor_count, CyclicFactor};
use apdecomp::lifting::{
    is_productive, lift_decompositions, lift_to_prime_power, table3_report, LiftCase,
};
use apdecomp::search::{canonicalize, d_table, find_3ap, find_4ap, DTableOptions};
use apdecomp::tables::TableRegistry;
use apdecomp::theorems::{classify_sextic, coverage, ConstructionRegistry};
use apdecomp::{ApDecomposition, Strength};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    bound: Duration,
    run: fn() -> Verdict,
}

/// Criteria that cannot match the reference, with the reason.
const KNOWN_FAILURES: &[(u8, &str)] = &[
    (1, "U_281 has no strong decomposition but is absent from the reference list"),
    (6, "U_991 is a case-1 double-barrelled modulus absent from the reference list"),
];

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "nonexistence below 300", bound: secs(10), run: nonexistence },
        Criterion { id: 2, name: "U_273 count and lifts to U_819", bound: secs(30), run: u273 },
        Criterion { id: 3, name: "kp^2 provenance table", bound: secs(120), run: kp2_table },
        Criterion { id: 4, name: "maximum-count table", bound: secs(600), run: max_counts },
        Criterion { id: 5, name: "sextic coverage lists and counts", bound: secs(300), run: sextic },
        Criterion { id: 6, name: "remaining lists and tables", bound: secs(120), run: lists },
        Criterion { id: 7, name: "4AP decompositions", bound: secs(1800), run: four_ap },
        Criterion { id: 8, name: "lifting examples", bound: secs(300), run: lifting },
        Criterion { id: 9, name: "finite fields", bound: secs(60), run: fields },
        Criterion { id: 10, name: "property suites", bound: secs(900), run: properties },
    ]
}

fn main() -> ExitCode {
    let only: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = 0;
    for c in criteria().into_iter().filter(|c| only.is_none_or(|id| id == c.id)) {
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let (mut pass, mut detail) = match verdict {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if elapsed > c.bound {
            pass = false;
            detail = format!("over time bound; {detail}");
        }
        let known = KNOWN_FAILURES.iter().find(|k| k.0 == c.id);
        println!(
            "{} criterion {:>2} {:<34} {:>9.2?} (bound {:?})  {}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed,
            c.bound,
            detail
        );
        match (pass, known) {
            (false, Some((_, why))) => println!("     known deviation: {why}"),
            (true, Some(_)) => {
                println!("     listed as a known failure but passed; update KNOWN_FAILURES");
                unexpected += 1;
            }
            (false, None) => unexpected += 1,
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected result(s)");
        ExitCode::FAILURE
    }
}

fn modulus(n: u64) -> Modulus {
    Modulus::new(n).expect("valid modulus")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gens_of(f: Factors) -> Vec<u64> {
    f.iter().map(|&(g, _)| g).collect()
}

fn orders_of(f: Factors) -> Vec<u64> {
    f.iter().map(|&(_, o)| o).collect()
}

fn table_diffs(id: &str, limit: Option<u64>) -> Result<Vec<String>, String> {
    let t = TableRegistry::default()
        .get(id)
        .ok_or_else(|| format!("no table {id}"))?;
    let r = t
        .build(limit.unwrap_or_else(|| t.default_limit()))
        .map_err(|e| format!("{id}: {e}"))?;
    ensure(r.compared, || format!("{id}: not compared with reference"))?;
    Ok(r.diffs)
}

fn nonexistence() -> Verdict {
    let without: Vec<u64> = primes_up_to(299)
        .into_iter()
        .filter(|&p| p > 4)
        .filter(|&p| factorize(p - 1).map(|f| f.len() >= 3).unwrap_or(false))
        .filter(|&p| find_3ap(&modulus(p), false).is_empty())
        .collect();
    let detail = format!("computed {without:?}");
    if without == golden::NONEXISTENT_BELOW_300 {
        Ok(detail)
    } else {
        Err(format!("{detail}, reference {:?}", golden::NONEXISTENT_BELOW_300))
    }
}

fn u273() -> Verdict {
    let strong = find_3ap(&modulus(273), false);
    ensure(strong.len() == golden::U273_STRONG, || {
        format!("{} strong decompositions of U_273", strong.len())
    })?;
    let mut lifts = HashSet::new();
    let mut total = 0;
    for d in &strong {
        let r = lift_decompositions(d, 3).map_err(|e| e.to_string())?;
        ensure(r.case == (LiftCase::PDividesOnce { divisible: 2 }), || {
            format!("{d} is in {}", r.case.label())
        })?;
        for l in r.strong_results() {
            total += 1;
            lifts.insert(canonicalize(l).key());
        }
    }
    ensure(total == golden::U819_LIFTS && lifts.len() == golden::U819_LIFTS, || {
        format!("{total} lifts, {} distinct", lifts.len())
    })?;
    // Every one of them is a decomposition found by direct search.
    let direct: HashSet<(u64, u64)> = find_3ap(&modulus(819), false).iter().map(|d| d.key()).collect();
    ensure(lifts.is_subset(&direct), || "a lift is missing from the U_819 search".into())?;
    Ok(format!("108 strong, {} lifts", lifts.len()))
}

fn kp2_table() -> Verdict {
    let rows = table3_report(1000).map_err(|e| e.to_string())?;
    for g in golden::TABLE3 {
        let r = rows
            .iter()
            .find(|r| r.n == g.n)
            .ok_or_else(|| format!("row {} missing", g.n))?;
        let got = (r.k, r.p, r.total, r.from_strong, r.from_weak, r.other);
        let want = (g.k, g.p, g.total, g.from_strong, g.from_weak, g.other);
        ensure(got == want, || format!("row {}: computed {got:?}, reference {want:?}", g.n))?;
        let ast = (r.strong_sources_unproductive, r.weak_sources_unproductive);
        ensure(ast == (g.strong_asterisk, g.weak_asterisk), || {
            format!("row {}: unproductive flags {ast:?}", g.n)
        })?;
        ensure(
            r.constructed_from_strong == r.from_strong && r.constructed_from_weak == r.from_weak,
            || format!("row {}: constructed lifts disagree with provenance split", g.n),
        )?;
    }
    let extra: Vec<u64> = rows
        .iter()
        .map(|r| r.n)
        .filter(|n| !golden::TABLE3.iter().any(|g| g.n == *n))
        .collect();
    Ok(format!("{} printed rows exact; extra rows {extra:?}", golden::TABLE3.len()))
}

fn max_counts() -> Verdict {
    let table = d_table(1000, DTableOptions::default());
    let mut wrong = Vec::new();
    for &(xi, d) in golden::D_TABLE {
        let got = table.get(&xi).copied();
        if got != Some(d) {
            wrong.push(format!("xi {xi}: reference {d}, computed {got:?}"));
        }
    }
    if wrong.is_empty() {
        Ok(format!("{} of {} pairs", golden::D_TABLE.len(), golden::D_TABLE.len()))
    } else {
        Err(wrong.join("; "))
    }
}

/// Printed values that provably cannot be reproduced, each reported as a diff.
const SEXTIC_ERRATA: &[&str] = &[
    "103: printed <10>_17 x <46>_3 x <102>_2 is not a decomposition (not a decomposition: [10, 46, 102] is not an arithmetic progression mod 103)",
    "967: printed order 162 for generator 682, computed 161",
    "103: computed <93>_17 x <46>_3 x <102>_2 not in reference",
];

fn sextic() -> Verdict {
    let mut diffs = Vec::new();
    for id in ["coverage-2.1", "coverage-2.2", "coverage-2.3"] {
        diffs.extend(table_diffs(id, Some(1000))?);
    }
    ensure(diffs == SEXTIC_ERRATA, || format!("unexpected diffs {diffs:?}"))?;

    let reg = ConstructionRegistry::default();
    let (classes, a, b, c) = golden::SEXTIC_COUNTS_1E5;
    let mut counts = Vec::new();
    for name in ["odd-root", "doubled-root", "halved-root"] {
        let rep = coverage(reg.get(name).unwrap().as_ref(), 100_000).map_err(|e| e.to_string())?;
        ensure(rep.in_family == classes, || format!("{name}: {} in class", rep.in_family))?;
        counts.push(rep.covered);
    }
    ensure(counts == [a, b, c], || format!("counts {counts:?}"))?;
    Ok(format!(
        "lists exact apart from {} erratum diffs; {classes} primes, counts {counts:?}",
        SEXTIC_ERRATA.len()
    ))
}

const TABLE2_ERRATA: &[&str] = &[
    "377: printed <287>_28 x <57>_4 x <203>_3 is not a decomposition (not a decomposition: [287, 57, 203] is not an arithmetic progression mod 377)",
    "865: <693>_4 x <566>_43 x <439>_4 printed star 0 type -, computed star 0 type C",
];

fn lists() -> Verdict {
    let mut problems = Vec::new();
    for id in [
        "type-2.3a",
        "type-2.3b",
        "type-2.3c",
        "double-barrelled",
        "coverage-2.5",
        "coverage-2.6",
        "1",
        "2",
        "pq-minus-three",
        "section-5",
        "quartets",
    ] {
        let diffs = table_diffs(id, None)?;
        let diffs: Vec<String> = if id == "2" {
            let errata: Vec<&str> = diffs
                .iter()
                .map(String::as_str)
                .filter(|d| TABLE2_ERRATA.contains(d))
                .collect();
            ensure(errata.len() == TABLE2_ERRATA.len(), || {
                "table 2 errata no longer reported".into()
            })?;
            diffs.into_iter().filter(|d| !TABLE2_ERRATA.contains(&d.as_str())).collect()
        } else {
            diffs
        };
        problems.extend(diffs.into_iter().map(|d| format!("{id}: {d}")));
    }
    if problems.is_empty() {
        Ok("11 tables exact (table 2 with 2 erratum diffs)".into())
    } else {
        Err(problems.join("; "))
    }
}

fn four_ap() -> Verdict {
    let primes: Vec<u64> = primes_up_to(golden::FOUR_AP_PRIME_LIMIT - 1)
        .into_iter()
        .filter(|&p| p > 4)
        .collect();
    let with: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| !find_4ap(&modulus(p), false).is_empty())
        .collect();
    ensure(with.is_empty(), || format!("strong 4AP for primes {with:?}"))?;

    let m104 = modulus(104);
    let got = find_4ap(&m104, false);
    for f in golden::U104_STRONG_4AP {
        let d = ApDecomposition::from_generators(&m104, &gens_of(f)).map_err(|e| e.to_string())?;
        ensure(d.orders() == orders_of(f), || format!("U_104 orders {:?}", d.orders()))?;
        let key = canonicalize(&d).key();
        ensure(got.iter().any(|g| canonicalize(g).key() == key), || format!("{d} not found"))?;
    }
    ensure(got.len() == golden::U104_STRONG_4AP.len(), || {
        format!("{} strong 4APs for U_104", got.len())
    })?;

    let m = modulus(3613);
    let w = ApDecomposition::from_generators(&m, &gens_of(golden::U3613_WEAK_4AP))
        .map_err(|e| e.to_string())?;
    ensure(w.is_weak() && w.orders() == orders_of(golden::U3613_WEAK_4AP), || {
        format!("U_3613: {w}")
    })?;
    let key = canonicalize(&w).key();
    ensure(
        find_4ap(&m, true).iter().any(|g| canonicalize(g).key() == key),
        || "U_3613 weak 4AP not found by search".into(),
    )?;
    Ok(format!("{} primes without; U_104 pair and U_3613 weak found", primes.len()))
}

fn dec(n: u64, f: Factors) -> Result<ApDecomposition, String> {
    let d = ApDecomposition::from_generators(&modulus(n), &gens_of(f)).map_err(|e| e.to_string())?;
    ensure(d.orders() == orders_of(f), || format!("{d}: printed orders {:?}", orders_of(f)))?;
    Ok(d)
}

fn gen_set(ds: &[ApDecomposition]) -> BTreeSet<Vec<u64>> {
    ds.iter().map(|d| d.generators()).collect()
}

fn lifting() -> Verdict {
    // U_7 -> U_49 -> U_343
    let u7 = dec(7, golden::LIFT_U7_WEAK)?;
    let u49 = dec(49, golden::LIFT_U49)?;
    let u343 = dec(343, golden::LIFT_U343)?;
    let l49 = lift_to_prime_power(&u7, 2).map_err(|e| e.to_string())?;
    ensure(l49 == u49, || format!("U_49 lift {l49}"))?;
    let from49 = lift_decompositions(&u49, 7).map_err(|e| e.to_string())?;
    ensure(from49.results.contains(&u343), || "U_343 decomposition not a lift of U_49".into())?;
    let l343 = lift_to_prime_power(&u7, 3).map_err(|e| e.to_string())?;
    ensure(l343.strength == Strength::Strong && from49.results.contains(&l343), || {
        format!("U_343 lift {l343}")
    })?;

    // three lifts to U_961
    let r = lift_decompositions(&dec(31, golden::LIFT_U31)?, 31).map_err(|e| e.to_string())?;
    let want: BTreeSet<Vec<u64>> = golden::U961_LIFTS.iter().map(|f| gens_of(f)).collect();
    ensure(gen_set(&r.results) == want, || format!("U_961 lifts {:?}", gen_set(&r.results)))?;

    // eight lifts to U_275, four strong
    let u55 = dec(55, golden::LIFT_U55_WEAK)?;
    let r = lift_decompositions(&u55, 5).map_err(|e| e.to_string())?;
    let strong: Vec<ApDecomposition> = r.strong_results().cloned().collect();
    let want: BTreeSet<Vec<u64>> = golden::U275_STRONG_LIFTS.iter().map(|f| gens_of(f)).collect();
    ensure(r.results.len() == 8 && gen_set(&strong) == want, || {
        format!("U_275: {} lifts, strong {:?}", r.results.len(), gen_set(&strong))
    })?;

    // no lift to U_605
    let other = dec(55, golden::LIFT_U55_WEAK_OTHER)?;
    let mut special = BTreeSet::new();
    for d in [&u55, &other] {
        let r = lift_decompositions(d, 11).map_err(|e| e.to_string())?;
        ensure(r.results.is_empty() && r.productive == Some(false), || format!("{d} lifts to U_605"))?;
        special.extend(r.special_lifts.iter().flatten().copied());
    }
    let want: BTreeSet<u64> = golden::U605_ORDER_PRESERVING.into_iter().collect();
    ensure(special == want, || format!("U_605 order-preserving lifts {special:?}"))?;

    // case 3 to U_155
    let r = lift_decompositions(&dec(31, golden::LIFT_U31)?, 5).map_err(|e| e.to_string())?;
    let spurious: Vec<u64> = r.spurious_lifts.iter().flatten().copied().collect();
    ensure(spurious == golden::U155_SPURIOUS && r.spurious_in_ap == Some(true), || {
        format!("spurious lifts {spurious:?}")
    })?;
    for f in golden::U155_LIFTS {
        let d = dec(155, f)?;
        ensure(r.results.contains(&d), || format!("{d} not among U_155 lifts"))?;
    }

    // unproductive decompositions of prime moduli below 1000
    let mut unproductive = BTreeSet::new();
    for p in primes_up_to(999).into_iter().filter(|&p| p > 4) {
        for d in find_3ap(&modulus(p), true) {
            if !is_productive(&d, p).map_err(|e| e.to_string())? {
                unproductive.insert(canonicalize(&d).key());
            }
        }
    }
    let mut want = BTreeSet::new();
    for (n, f) in [
        (379, golden::LIFT_U379),
        (11, golden::LIFT_U11_WEAK),
        (461, golden::LIFT_U461_WEAK),
    ] {
        want.insert(canonicalize(&dec(n, f)?).key());
    }
    let moduli: BTreeSet<u64> = unproductive.iter().map(|&(first, _)| first).collect();
    ensure(unproductive == want, || {
        format!("unproductive keys {unproductive:?} (first terms {moduli:?})")
    })?;
    Ok("chain, U_961, U_275, U_605, U_155 and the three unproductive cases".into())
}

fn fields() -> Verdict {
    for row in golden::FIELD_DECOMPOSITIONS {
        let f = Field::new(row.p, row.k, None).map_err(|e| e.to_string())?;
        let exps = [row.factors[0].0, row.factors[1].0, row.factors[2].0];
        let d = FieldDecomposition::from_exponents(&f, exps)
            .ok_or_else(|| format!("GF({}^{}): bad exponents {exps:?}", row.p, row.k))?;
        let printed: Vec<u64> = row.factors.iter().map(|x| x.1).collect();
        ensure(d.orders.to_vec() == printed, || {
            format!("GF({}^{}) {d}: printed orders {printed:?}", row.p, row.k)
        })?;
        ensure(d.is_ap(&f) && d.is_direct_product(&f), || format!("{d} is not a decomposition"))?;
        let all = gf::find_3ap_field(&f, FieldSearchMode::All);
        let c = d.canonical(&f);
        ensure(all.contains(&c), || format!("{d} not found by search"))?;
    }

    let f = Field::new(11, 3, None).map_err(|e| e.to_string())?;
    let lists = gf::order_lists(&gf::find_3ap_field(&f, FieldSearchMode::All));
    ensure(!lists.contains(&golden::GF11_3_IMPOSSIBLE), || "GF(11^3) has {2,5,133}".into())?;

    // every proper prime power q <= 20000 with q = 7, 31 (mod 36)
    let mut checked = Vec::new();
    for p in primes_up_to(150).into_iter().skip(1) {
        let mut q = p * p;
        let mut k = 2;
        while q <= 20_000 {
            if matches!(q % 36, 7 | 31) {
                let poly = gf::find_primitive_polynomial(p, k)
                    .map(|v| to_signed(&v))
                    .ok_or_else(|| format!("no primitive polynomial for GF({p}^{k})"))?;
                let f = Field::new(p, k, Some(&poly)).map_err(|e| e.to_string())?;
                ensure(gf::prime_subfield_argument_check(&f), || format!("GF({p}^{k}) fails"))?;
                checked.push(q);
            }
            q *= p;
            k += 1;
        }
    }
    ensure(!checked.is_empty(), || "no field to check".into())?;
    Ok(format!("8 decompositions, no {{2,5,133}} in GF(11^3), subfield property for q in {checked:?}"))
}

fn to_signed(v: &[u64]) -> Vec<i64> {
    v.iter().map(|&c| c as i64).collect()
}

// --- property suites ---

fn brute_order(x: u64, n: u64) -> u64 {
    let mut y = x % n;
    let mut k = 1;
    while y != 1 {
        y = y * x % n;
        k += 1;
    }
    k
}

/// Size of the subgroup generated by `gens`, by closure.
fn closure_size(gens: &[u64], n: u64) -> usize {
    let mut seen = vec![false; n as usize];
    seen[1] = true;
    let mut members = vec![1u64];
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        for &g in gens {
            let b = a * g % n;
            if !seen[b as usize] {
                seen[b as usize] = true;
                members.push(b);
            }
        }
        i += 1;
    }
    members.len()
}

fn direct_product_oracle() -> Result<usize, String> {
    let mut checked = 0;
    for n in 3..=200u64 {
        let m = modulus(n);
        let phi = m.phi();
        let units: Vec<u64> = (1..n).filter(|&x| gcd(x, n) == 1).collect();
        let ord: Vec<u64> = units.iter().map(|&x| brute_order(x, n)).collect();
        let factors: Vec<CyclicFactor> = units
            .iter()
            .zip(&ord)
            .map(|(&generator, &order)| CyclicFactor { generator, order })
            .collect();
        for i in 0..units.len() {
            for j in i..units.len() {
                for k in j..units.len() {
                    let product = ord[i] * ord[j] * ord[k];
                    let oracle = product == phi
                        && closure_size(&[units[i], units[j], units[k]], n) as u64 == phi;
                    let got = is_direct_product(&m, &[factors[i], factors[j], factors[k]]);
                    ensure(got == oracle, || {
                        format!("n = {n}, {:?}: got {got}", [units[i], units[j], units[k]])
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

fn reversal_symmetry() -> Result<usize, String> {
    let mut valid = 0;
    for n in 3..=300u64 {
        let m = modulus(n);
        for x in 0..n {
            for k in 1..n {
                let a = ApDecomposition::from_progression(&m, x, k, 3);
                let b = ApDecomposition::from_progression(&m, x + 2 * k, n - k, 3);
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        let mut f = a.factors.clone();
                        f.reverse();
                        ensure(f == b.factors && a.reversed() == b, || {
                            format!("n = {n}: {a} reversed is not {b}")
                        })?;
                        valid += 1;
                    }
                    (Err(_), Err(_)) => {}
                    (a, b) => return Err(format!("n = {n}, x = {x}, k = {k}: {a:?} vs {b:?}")),
                }
            }
        }
    }
    Ok(valid)
}

fn xi_even() -> Result<(), String> {
    for n in 2..=10_000u64 {
        let m = modulus(n);
        ensure(m.phi() % m.lambda() == 0, || format!("lambda does not divide phi at {n}"))?;
        let xi = m.phi() / m.lambda();
        ensure(xi == 1 || xi % 2 == 0, || format!("xi({n}) = {xi}"))?;
    }
    Ok(())
}

/// Lift instances `(d, p)` with `p` exactly dividing `d.n`, by subcase.
fn lift_pools() -> BTreeMap<u8, Vec<(ApDecomposition, u64)>> {
    let mut pools: BTreeMap<u8, Vec<(ApDecomposition, u64)>> = BTreeMap::new();
    for n in 3..=1000u64 {
        let m = modulus(n);
        let ps: Vec<u64> = m
            .factorization()
            .pairs()
            .iter()
            .filter(|&&(p, e)| p > 2 && e == 1 && p <= 50 && n * p <= 30_000)
            .map(|&(p, _)| p)
            .collect();
        if ps.is_empty() {
            continue;
        }
        let decomps = find_3ap(&m, true);
        for &p in &ps {
            for d in &decomps {
                if let LiftCase::PDividesOnce { divisible } = apdecomp::lifting::classify_case(d, p) {
                    pools.entry(divisible + 1).or_default().push((d.clone(), p));
                }
            }
        }
    }
    pools
}

fn lift_laws() -> Result<String, String> {
    let pools = lift_pools();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut sizes = Vec::new();
    for sub in 1..=3u8 {
        let pool = pools.get(&sub).map(Vec::as_slice).unwrap_or(&[]);
        let productive: Vec<&(ApDecomposition, u64)> = if sub == 1 {
            pool.iter()
                .filter(|(d, p)| is_productive(d, *p).unwrap_or(false))
                .collect()
        } else {
            pool.iter().collect()
        };
        ensure(productive.len() >= 50, || format!("subcase 2.{sub}: only {} instances", productive.len()))?;
        sizes.push(productive.len());
        for (d, p) in productive.choose_multiple(&mut rng, 50) {
            let r = lift_decompositions(d, *p).map_err(|e| e.to_string())?;
            let want = match sub {
                1 => 3,
                2 => 2 * (p - 1),
                _ => p * (p - 1),
            } as usize;
            ensure(r.results.len() == want, || {
                format!("subcase 2.{sub}: {d} with p = {p} gives {} lifts, expected {want}", r.results.len())
            })?;
            for l in &r.results {
                let back: Vec<u64> = l.generators().iter().map(|g| g % d.n).collect();
                ensure(back == d.generators(), || format!("{l} does not reduce to {d}"))?;
            }
        }
    }
    ensure(!pools.contains_key(&4), || "a subcase 2.4 decomposition exists".into())?;
    // Three orders divisible by p force three primes q = 1 (mod p) besides p,
    // so four odd primes and at least four factors are needed.
    for n in (3..=100_000u64).step_by(2) {
        let f = factorize(n).map_err(|e| e.to_string())?;
        for &(p, e) in f.pairs() {
            if e == 1 && f.primes().filter(|q| q % p == 1).count() >= 3 {
                let m = modulus(n);
                ensure(min_factor_count(&m) >= 4, || format!("n = {n}, p = {p}"))?;
            }
        }
    }
    Ok(format!("pools {sizes:?}"))
}

fn sextic_classification() -> Result<usize, String> {
    let mut classified = 0;
    for n in primes_up_to(999).into_iter().filter(|&n| matches!(n % 36, 7 | 31)) {
        let m = modulus(n);
        let mut target = vec![2, 3, (n - 1) / 6];
        target.sort_unstable();
        for d in find_3ap(&m, false) {
            let mut o = d.orders();
            o.sort_unstable();
            if o == target {
                classify_sextic(&m, &d).map_err(|e| e.to_string())?;
                classified += 1;
            }
        }
    }
    Ok(classified)
}

fn properties() -> Verdict {
    let triples = direct_product_oracle()?;
    let reversals = reversal_symmetry()?;
    xi_even()?;
    let laws = lift_laws()?;
    let classified = sextic_classification()?;
    ensure(classified > 0, || "nothing classified".into())?;
    Ok(format!(
        "{triples} triples, {reversals} reversal pairs, xi to 10^4, lift laws {laws}, {classified} sextic classified"
    ))
}
