//! Families of prime moduli whose decompositions are built from the roots of
//! `x^2 + 3x + 3`, square roots of `-1`, or elements of order 5.

use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, is_prime, mul_mod, pow_mod, sqrt_mod_prime, Modulus};
use crate::error::{Error, Result};
use crate::search::ApDecomposition;

use super::{certify, Construction, TheoremOutcome};

/// `x1` has odd order, `x2` even order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootLabel {
    X1,
    X2,
}

/// The two roots of `x^2 + 3x + 3` modulo a prime `n = 7, 31 (mod 36)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticRoots {
    pub n: u64,
    pub x1: u64,
    pub x2: u64,
    pub order_x1: u64,
    pub order_x2: u64,
}

impl QuadraticRoots {
    /// `x1 + 1`, of order 3.
    pub fn y1(&self) -> u64 {
        (self.x1 + 1) % self.n
    }

    pub fn y2(&self) -> u64 {
        (self.x2 + 1) % self.n
    }

    pub fn get(&self, label: RootLabel) -> u64 {
        match label {
            RootLabel::X1 => self.x1,
            RootLabel::X2 => self.x2,
        }
    }

    pub fn order(&self, label: RootLabel) -> u64 {
        match label {
            RootLabel::X1 => self.order_x1,
            RootLabel::X2 => self.order_x2,
        }
    }
}

/// Both roots of `x^2 + 3x + 3` modulo an odd prime `n > 3`, ascending, or
/// `None` when `-3` is a non-residue.
pub(crate) fn raw_roots(n: u64) -> Result<Option<(u64, u64)>> {
    let Some((s, t)) = sqrt_mod_prime(-3, n)? else {
        return Ok(None);
    };
    let half = inv_mod(2, n).expect("n is odd");
    let r = |s: u64| mul_mod((s + n - 3) % n, half, n);
    let (a, b) = (r(s), r(t));
    Ok(Some((a.min(b), a.max(b))))
}

fn sextic_class(n: u64) -> bool {
    n > 7 && matches!(n % 36, 7 | 31) && is_prime(n)
}

fn require_sextic(m: &Modulus) -> Result<()> {
    if sextic_class(m.n()) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{} is not a prime > 7 congruent to 7 or 31 mod 36",
            m.n()
        )))
    }
}

pub fn quadratic_roots(m: &Modulus) -> Result<QuadraticRoots> {
    require_sextic(m)?;
    let n = m.n();
    let (a, b) = raw_roots(n)?.ok_or_else(|| {
        Error::InvariantViolation(format!("-3 is a non-residue mod {n}"))
    })?;
    let (oa, ob) = (m.order_of(a)?, m.order_of(b)?);
    let (x1, x2, order_x1, order_x2) = if oa % 2 == 1 { (a, b, oa, ob) } else { (b, a, ob, oa) };
    if order_x1 % 2 == 0 || order_x2 % 2 == 1 {
        return Err(Error::InvariantViolation(format!(
            "roots {a}, {b} mod {n} do not split into odd and even order"
        )));
    }
    Ok(QuadraticRoots {
        n,
        x1,
        x2,
        order_x1,
        order_x2,
    })
}

/// Constructions for primes with `n - 1 = 2 * 3 * m`, `m` coprime to 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SexticFamily {
    /// `<-x1-2>_3 x <-1>_2 x <x1>_m`, when `ord(x1) = m`.
    OddRoot,
    /// `<2x2+3>_m x <x2+1>_3 x <-1>_2`, when `ord(x1) = (n-1)/2` and `ord(x2) = n-1`.
    DoubledRoot,
    /// `<z+1>_3 x <z/2>_m x <-1>_2` for a root `z` with `ord(z/2) = m`.
    HalvedRoot,
}

impl SexticFamily {
    pub fn name(self) -> &'static str {
        match self {
            SexticFamily::OddRoot => "odd-root",
            SexticFamily::DoubledRoot => "doubled-root",
            SexticFamily::HalvedRoot => "halved-root",
        }
    }

    pub fn construct(self, m: &Modulus) -> Result<TheoremOutcome> {
        match self {
            SexticFamily::OddRoot => odd_root(m),
            SexticFamily::DoubledRoot => doubled_root(m),
            SexticFamily::HalvedRoot => halved_root(m),
        }
    }
}

impl Construction for SexticFamily {
    fn name(&self) -> &'static str {
        SexticFamily::name(*self)
    }

    fn summary(&self) -> &'static str {
        match self {
            SexticFamily::OddRoot => "<-x1-2>_3 x <-1>_2 x <x1>_m",
            SexticFamily::DoubledRoot => "<2x2+3>_m x <x2+1>_3 x <-1>_2",
            SexticFamily::HalvedRoot => "<z+1>_3 x <z/2>_m x <-1>_2",
        }
    }

    fn in_family(&self, n: u64) -> bool {
        sextic_class(n)
    }

    fn apply(&self, m: &Modulus) -> Result<Vec<TheoremOutcome>> {
        if !sextic_class(m.n()) {
            return Ok(vec![TheoremOutcome::out_of_family(
                self.name(),
                m.n(),
                "requires a prime > 7 congruent to 7 or 31 mod 36".into(),
            )]);
        }
        Ok(vec![self.construct(m)?])
    }
}

pub fn odd_root(m: &Modulus) -> Result<TheoremOutcome> {
    let r = quadratic_roots(m)?;
    let n = m.n();
    let sixth = (n - 1) / 6;
    let name = SexticFamily::OddRoot.name();
    if r.order_x1 != sixth {
        return Ok(TheoremOutcome::failed(
            name,
            n,
            format!("ord(x1) = {} but (n-1)/6 = {sixth}", r.order_x1),
        ));
    }
    let w = certify(m, &[(2 * n - r.x1 - 2) % n, n - 1, r.x1], name)?;
    Ok(TheoremOutcome::applies(name, w).with_root(RootLabel::X1, r.order_x1))
}

pub fn doubled_root(m: &Modulus) -> Result<TheoremOutcome> {
    let r = quadratic_roots(m)?;
    let n = m.n();
    let name = SexticFamily::DoubledRoot.name();
    if r.order_x1 != (n - 1) / 2 || r.order_x2 != n - 1 {
        return Ok(TheoremOutcome::failed(
            name,
            n,
            format!(
                "ord(x1) = {}, ord(x2) = {}; need {} and {}",
                r.order_x1,
                r.order_x2,
                (n - 1) / 2,
                n - 1
            ),
        ));
    }
    let w = certify(m, &[(2 * r.x2 + 3) % n, r.y2(), n - 1], name)?;
    Ok(TheoremOutcome::applies(name, w).with_root(RootLabel::X2, r.order_x2))
}

pub fn halved_root(m: &Modulus) -> Result<TheoremOutcome> {
    let r = quadratic_roots(m)?;
    let n = m.n();
    let sixth = (n - 1) / 6;
    let name = SexticFamily::HalvedRoot.name();
    let half = inv_mod(2, n).expect("n is odd");
    let mut found = Vec::new();
    for label in [RootLabel::X1, RootLabel::X2] {
        let z = r.get(label);
        let h = mul_mod(half, z, n);
        let order = m.order_of(h)?;
        if order == sixth {
            found.push((label, z, h));
        }
    }
    let Some(&(label, z, h)) = found.first() else {
        return Ok(TheoremOutcome::failed(
            name,
            n,
            format!("neither x1/2 nor x2/2 has order {sixth}"),
        ));
    };
    let w = certify(m, &[(z + 1) % n, h, n - 1], name)?;
    let mut out = TheoremOutcome::applies(name, w).with_root(label, r.order(label));
    if found.len() > 1 {
        out.diagnostics.push("both roots qualify".into());
    }
    Ok(out)
}

/// Identifies which construction produces a decomposition with orders
/// `{2, 3, (n-1)/6}`. Every such decomposition arises from one of them, so a
/// miss is an invariant violation.
pub fn classify_sextic(m: &Modulus, d: &ApDecomposition) -> Result<SexticFamily> {
    let r = quadratic_roots(m)?;
    let n = m.n();
    let sixth = (n - 1) / 6;
    let mut orders = d.orders();
    orders.sort_unstable();
    if d.n != n || orders != vec![2, 3, sixth] {
        return Err(Error::Precondition(format!(
            "orders {:?} are not {{2, 3, {sixth}}}",
            d.orders()
        )));
    }
    let g = d
        .factors
        .iter()
        .find(|f| f.order == sixth)
        .expect("checked above")
        .generator;
    let half = inv_mod(2, n).expect("n is odd");
    let roots = [r.x1, r.x2];
    if roots.contains(&g) {
        return Ok(SexticFamily::OddRoot);
    }
    if roots.iter().any(|&x| (2 * x + 3) % n == g) {
        return Ok(SexticFamily::DoubledRoot);
    }
    if roots.iter().any(|&x| mul_mod(half, x, n) == g) {
        return Ok(SexticFamily::HalvedRoot);
    }
    Err(Error::InvariantViolation(format!(
        "{d} mod {n} matches none of the three root constructions"
    )))
}

fn quartic_class(n: u64) -> bool {
    n > 13 && matches!(n % 144, 13 | 61 | 85 | 133) && is_prime(n)
}

/// Witnesses `(x, k)` where `x` is a root of `x^2 + 3x + 3` and
/// `(x+1+k)^2 = -1`, for primes `n = 1 (mod 12)`.
fn quartic_candidates(m: &Modulus) -> Result<Vec<(u64, u64)>> {
    let n = m.n();
    let (Some((a, b)), Some((i, j))) = (raw_roots(n)?, sqrt_mod_prime(-1, n)?) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for x in [a, b] {
        for s in [i, j] {
            out.push((x, (s + 2 * n - x - 1) % n));
        }
    }
    Ok(out)
}

fn quartic_apply(
    m: &Modulus,
    name: &str,
    build: impl Fn(u64, u64, u64) -> (u64, [u64; 3]),
) -> Result<Vec<TheoremOutcome>> {
    let n = m.n();
    if !quartic_class(n) {
        return Ok(vec![TheoremOutcome::out_of_family(
            name,
            n,
            "requires a prime > 13 congruent to 13, 61, 85 or 133 mod 144".into(),
        )]);
    }
    let mu = (n - 1) / 12;
    let mut out = Vec::new();
    for (x, k) in quartic_candidates(m)? {
        let (probe, gens) = build(x, k, n);
        if m.order_of(probe)? != mu {
            continue;
        }
        let w = certify(m, &gens, name)?;
        let mut o = TheoremOutcome::applies(name, w);
        o.root_order = Some(m.order_of(x)?);
        out.push(o);
    }
    out.sort_by_key(|o| o.witness.as_ref().map(|w| w.generators()));
    out.dedup_by_key(|o| o.witness.as_ref().map(|w| w.key()));
    if out.is_empty() {
        out.push(TheoremOutcome::failed(
            name,
            n,
            format!("no root and square root of -1 give an element of order {mu}"),
        ));
    }
    Ok(out)
}

/// `<x+1>_3 x <x+1+k>_4 x <x+1+2k>_mu`.
pub fn quartic_last(m: &Modulus) -> Result<Vec<TheoremOutcome>> {
    quartic_apply(m, QuarticLast.name(), |x, k, n| {
        let y = (x + 1) % n;
        let last = (y + 2 * k) % n;
        (last, [y, (y + k) % n, last])
    })
}

/// `<x+1-k>_mu x <x+1>_3 x <x+1+k>_4`.
pub fn quartic_first(m: &Modulus) -> Result<Vec<TheoremOutcome>> {
    quartic_apply(m, QuarticFirst.name(), |x, k, n| {
        let y = (x + 1) % n;
        let first = (y + n - k) % n;
        (first, [first, y, (y + k) % n])
    })
}

#[derive(Debug, Clone, Copy)]
pub struct QuarticLast;

#[derive(Debug, Clone, Copy)]
pub struct QuarticFirst;

impl Construction for QuarticLast {
    fn name(&self) -> &'static str {
        "quartic-last"
    }

    fn summary(&self) -> &'static str {
        "<x+1>_3 x <x+1+k>_4 x <x+1+2k>_mu"
    }

    fn in_family(&self, n: u64) -> bool {
        quartic_class(n)
    }

    fn apply(&self, m: &Modulus) -> Result<Vec<TheoremOutcome>> {
        quartic_last(m)
    }
}

impl Construction for QuarticFirst {
    fn name(&self) -> &'static str {
        "quartic-first"
    }

    fn summary(&self) -> &'static str {
        "<x+1-k>_mu x <x+1>_3 x <x+1+k>_4"
    }

    fn in_family(&self, n: u64) -> bool {
        quartic_class(n)
    }

    fn apply(&self, m: &Modulus) -> Result<Vec<TheoremOutcome>> {
        quartic_first(m)
    }
}

fn order5_class(n: u64) -> bool {
    n > 11 && matches!(n % 100, 11 | 31 | 71 | 91) && is_prime(n)
}

/// The four elements of order 5 modulo a prime `n = 1 (mod 5)`, ascending.
pub fn order5_elements(m: &Modulus) -> Result<Vec<u64>> {
    let n = m.n();
    if !m.is_prime() || (n - 1) % 5 != 0 {
        return Err(Error::Precondition(format!("{n} is not a prime = 1 mod 5")));
    }
    let e = (n - 1) / 5;
    let w = (2..n)
        .map(|a| pow_mod(a, e, n))
        .find(|&w| w != 1)
        .expect("U_n has elements of order 5");
    let mut out: Vec<u64> = (1..5).map(|i| pow_mod(w, i, n)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Decompositions with orders `{2, 5, nu}`, `nu = (n-1)/10`, built from an
/// element `w` of order 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order5Variant {
    /// `<-z-2>_5 x <-1>_2 x <z>_nu`
    A,
    /// `<2z+1>_nu x <z>_5 x <-1>_2`
    B,
    /// `<2z+1>_5 x <z>_nu x <-1>_2`
    C,
}

impl Order5Variant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "a" | "A" => Some(Self::A),
            "b" | "B" => Some(Self::B),
            "c" | "C" => Some(Self::C),
            _ => None,
        }
    }
}

pub fn order5_family(m: &Modulus, variant: Order5Variant) -> Result<Vec<TheoremOutcome>> {
    let n = m.n();
    let name = variant.name();
    if !order5_class(n) {
        return Err(Error::Precondition(format!(
            "{n} is not a prime > 11 congruent to 11, 31, 71 or 91 mod 100"
        )));
    }
    let nu = (n - 1) / 10;
    let half = inv_mod(2, n).expect("n is odd");
    let mut out = Vec::new();
    for w in order5_elements(m)? {
        let (probe, gens) = match variant {
            Order5Variant::A => {
                let z = (2 * n - w - 2) % n;
                (z, [w, n - 1, z])
            }
            Order5Variant::B => {
                let g = (2 * w + 1) % n;
                (g, [g, w, n - 1])
            }
            Order5Variant::C => {
                let z = mul_mod((w + n - 1) % n, half, n);
                (z, [w, z, n - 1])
            }
        };
        if m.order_of(probe)? == nu {
            out.push(TheoremOutcome::applies(name, certify(m, &gens, name)?));
        }
    }
    out.sort_by_key(|o| o.witness.as_ref().map(|w| w.generators()));
    Ok(out)
}

impl Construction for Order5Variant {
    fn name(&self) -> &'static str {
        match self {
            Order5Variant::A => "order5-a",
            Order5Variant::B => "order5-b",
            Order5Variant::C => "order5-c",
        }
    }

    fn summary(&self) -> &'static str {
        match self {
            Order5Variant::A => "<-z-2>_5 x <-1>_2 x <z>_nu",
            Order5Variant::B => "<2z+1>_nu x <z>_5 x <-1>_2",
            Order5Variant::C => "<2z+1>_5 x <z>_nu x <-1>_2",
        }
    }

    fn in_family(&self, n: u64) -> bool {
        order5_class(n)
    }

    fn apply(&self, m: &Modulus) -> Result<Vec<TheoremOutcome>> {
        if !order5_class(m.n()) {
            return Ok(vec![TheoremOutcome::out_of_family(
                self.name(),
                m.n(),
                "requires a prime > 11 congruent to 11, 31, 71 or 91 mod 100".into(),
            )]);
        }
        let out = order5_family(m, *self)?;
        if out.is_empty() {
            return Ok(vec![TheoremOutcome::failed(
                self.name(),
                m.n(),
                "no element of order 5 gives the required order".into(),
            )]);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::find_3ap;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn gens(o: &TheoremOutcome) -> Vec<u64> {
        o.witness.as_ref().unwrap().generators()
    }

    fn orders(o: &TheoremOutcome) -> Vec<u64> {
        o.witness.as_ref().unwrap().orders()
    }

    #[test]
    fn roots_547() {
        let r = quadratic_roots(&m(547)).unwrap();
        assert_eq!((r.x1, r.x2), (505, 39));
        assert_eq!(r.order_x1, 546 / 26);
        assert_eq!(r.order_x2, 546 / 13);
    }

    #[test]
    fn roots_31_brute_force() {
        let r = quadratic_roots(&m(31)).unwrap();
        let brute: Vec<u64> = (0..31).filter(|x| (x * x + 3 * x + 3) % 31 == 0).collect();
        let mut got = vec![r.x1, r.x2];
        got.sort_unstable();
        assert_eq!(got, brute);
        assert_eq!(r.order_x1 % 2, 1);
        assert_eq!(r.order_x2 % 2, 0);
        assert_eq!(m(31).order_of(r.y1()).unwrap(), 3);
        assert_eq!(m(31).order_of(r.y2()).unwrap(), 3);
    }

    #[test]
    fn roots_family_errors() {
        assert!(quadratic_roots(&m(37)).is_err());
        assert!(quadratic_roots(&m(7)).is_err());
        assert!(quadratic_roots(&m(175)).is_err());
    }

    #[test]
    fn odd_root_examples() {
        let o = odd_root(&m(31)).unwrap();
        assert_eq!(gens(&o), vec![25, 30, 4]);
        assert_eq!(orders(&o), vec![3, 2, 5]);
        let o = odd_root(&m(907)).unwrap();
        assert_eq!(gens(&o), vec![522, 906, 383]);
        assert_eq!(orders(&o), vec![3, 2, 151]);
        assert!(!odd_root(&m(139)).unwrap().is_applicable());
    }

    #[test]
    fn doubled_root_examples() {
        let o = doubled_root(&m(67)).unwrap();
        assert_eq!(gens(&o), vec![59, 29, 66]);
        assert_eq!(orders(&o), vec![11, 3, 2]);
        let o = doubled_root(&m(967)).unwrap();
        assert_eq!(gens(&o), vec![682, 824, 966]);
        assert_eq!(orders(&o), vec![161, 3, 2]);
        assert!(!doubled_root(&m(31)).unwrap().is_applicable());
    }

    #[test]
    fn halved_root_examples() {
        let o = halved_root(&m(103)).unwrap();
        assert_eq!(gens(&o), vec![56, 79, 102]);
        assert_eq!(o.root, Some(RootLabel::X1));
        let o = halved_root(&m(211)).unwrap();
        assert_eq!(gens(&o), vec![196, 203, 210]);
        assert_eq!(o.root, Some(RootLabel::X2));
        assert!(!halved_root(&m(43)).unwrap().is_applicable());
    }

    #[test]
    fn classification_examples() {
        let md = m(31);
        let d = ApDecomposition::from_generators(&md, &[25, 30, 4]).unwrap();
        assert_eq!(classify_sextic(&md, &d).unwrap(), SexticFamily::OddRoot);
        let d = ApDecomposition::from_generators(&md, &[5, 2, 30]).unwrap();
        assert_eq!(classify_sextic(&md, &d).unwrap(), SexticFamily::HalvedRoot);
        let md = m(61);
        let d = ApDecomposition::from_generators(&md, &[9, 11, 13]).unwrap();
        assert!(classify_sextic(&md, &d).is_err());
    }

    #[test]
    fn classification_is_exhaustive_below_1000() {
        for n in (11..1000).filter(|&n| sextic_class(n)) {
            let md = m(n);
            let sixth = (n - 1) / 6;
            for d in find_3ap(&md, false) {
                let mut o = d.orders();
                o.sort_unstable();
                if o == vec![2, 3, sixth] {
                    classify_sextic(&md, &d).unwrap();
                }
            }
        }
    }

    #[test]
    fn quartic_examples() {
        let o = quartic_last(&m(61)).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(gens(&o[0]), vec![13, 11, 9]);
        assert_eq!(o[0].root_order, Some(15));

        let o = quartic_last(&m(661)).unwrap();
        let g: Vec<Vec<u64>> = o.iter().map(gens).collect();
        assert_eq!(g, vec![vec![364, 106, 509], vec![364, 555, 85]]);
        assert_eq!(pow_mod(509, 3, 661), 85);

        assert!(!quartic_last(&m(277)).unwrap()[0].is_applicable());

        let o = quartic_first(&m(157)).unwrap();
        assert_eq!(gens(&o[0]), vec![153, 12, 28]);
        assert_eq!(orders(&o[0]), vec![13, 3, 4]);
        assert_eq!(o[0].root_order, Some(39));
        let o = quartic_first(&m(997)).unwrap();
        assert_eq!(gens(&o[0]), vec![226, 692, 161]);
        assert!(!quartic_first(&m(853)).unwrap()[0].is_applicable());
    }

    #[test]
    fn order5_examples() {
        let md = m(191);
        let a = order5_family(&md, Order5Variant::A).unwrap();
        let g: Vec<Vec<u64>> = a.iter().map(gens).collect();
        assert_eq!(g, vec![vec![39, 190, 150], vec![184, 190, 5]]);

        let b = order5_family(&m(131), Order5Variant::B).unwrap();
        assert_eq!(b.iter().map(gens).collect::<Vec<_>>(), vec![vec![107, 53, 130]]);

        for v in [Order5Variant::A, Order5Variant::B, Order5Variant::C] {
            assert!(order5_family(&m(71), v).unwrap().is_empty());
        }
        assert!(order5_family(&m(61), Order5Variant::A).is_err());
    }

    #[test]
    fn order5_elements_sum_and_product() {
        for n in [31u64, 191, 271, 991] {
            let e = order5_elements(&m(n)).unwrap();
            assert_eq!(e.iter().sum::<u64>() % n, n - 1);
            assert_eq!(e.iter().fold(1, |a, &b| mul_mod(a, b, n)), 1);
        }
    }
}
