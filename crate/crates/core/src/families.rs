//! String families with closed-form measure values, their generators and
//! predictors.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::bwt::TransformVariant;
use crate::error::{Error, Result};
use crate::lyndon::is_lyndon_slice;
use crate::measures::MeasureId;
use crate::text::{find_all, NameTable, Symbol, Text};

/// Largest Fibonacci index accepted (f_32 = 2 178 309).
pub const MAX_FIB_INDEX: u64 = 32;
pub const MAX_T_P: u64 = 40;
pub const MAX_LINEAR_PARAM: u64 = 1_000_000;

/// Smallest even `k` for which `r(F_k a) = 4` is predicted.
pub const FIB_PLUS_MIN_K: u64 = 6;

/// A 55-symbol binary string whose LZ parsing has 6 phrases while its
/// reverse needs 14. The `t55` family is the reverse of this string, so
/// that `z(t55) = 14` and `z(t55^R) = 6`.
pub const T55_WITNESS_REV: &str = "abababababaabababaababaaababaaababaaababbababaababaaaba";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Uk,
    UkRev,
    Tp,
    TpRev,
    WSigma,
    WSigmaRev,
    Fib,
    Central,
    FibPlus,
    CFib,
    CFibRev,
    UnaryPlus,
    T55,
}

impl FamilyId {
    pub const ALL: [FamilyId; 13] = [
        FamilyId::Uk,
        FamilyId::UkRev,
        FamilyId::Tp,
        FamilyId::TpRev,
        FamilyId::WSigma,
        FamilyId::WSigmaRev,
        FamilyId::Fib,
        FamilyId::Central,
        FamilyId::FibPlus,
        FamilyId::CFib,
        FamilyId::CFibRev,
        FamilyId::UnaryPlus,
        FamilyId::T55,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FamilyId::Uk => "u_k",
            FamilyId::UkRev => "u_k_rev",
            FamilyId::Tp => "T_p",
            FamilyId::TpRev => "T_p_rev",
            FamilyId::WSigma => "w_sigma",
            FamilyId::WSigmaRev => "w_sigma_rev",
            FamilyId::Fib => "fib",
            FamilyId::Central => "central",
            FamilyId::FibPlus => "fib_plus",
            FamilyId::CFib => "c_fib",
            FamilyId::CFibRev => "c_fib_rev",
            FamilyId::UnaryPlus => "unary_plus",
            FamilyId::T55 => "t55",
        }
    }

    /// The family generating the reverses of this one, if it has a name.
    pub fn twin(self) -> Option<FamilyId> {
        Some(match self {
            FamilyId::Uk => FamilyId::UkRev,
            FamilyId::UkRev => FamilyId::Uk,
            FamilyId::Tp => FamilyId::TpRev,
            FamilyId::TpRev => FamilyId::Tp,
            FamilyId::WSigma => FamilyId::WSigmaRev,
            FamilyId::WSigmaRev => FamilyId::WSigma,
            FamilyId::CFib => FamilyId::CFibRev,
            FamilyId::CFibRev => FamilyId::CFib,
            _ => return None,
        })
    }

    /// Label used for rows describing the reversed orientation.
    pub fn reversed_label(self) -> String {
        match self.twin() {
            Some(t) => t.id().to_string(),
            None => format!("{}_rev", self.id()),
        }
    }

    /// Base family and whether this one is its reversal.
    fn base(self) -> (FamilyId, bool) {
        match self {
            FamilyId::UkRev => (FamilyId::Uk, true),
            FamilyId::TpRev => (FamilyId::Tp, true),
            FamilyId::WSigmaRev => (FamilyId::WSigma, true),
            FamilyId::CFibRev => (FamilyId::CFib, true),
            other => (other, false),
        }
    }

    pub fn takes_param(self) -> bool {
        self != FamilyId::T55
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: FamilyId,
    /// Ignored for `t55`.
    pub param: u64,
}

impl FamilySpec {
    pub fn new(family: FamilyId, param: u64) -> Self {
        FamilySpec { family, param }
    }

    pub fn reversed(self) -> Option<FamilySpec> {
        self.family.twin().map(|family| FamilySpec { family, ..self })
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.param;
        let bad = |reason: &str| {
            Err(Error::InvalidParameter {
                family: self.family.id(),
                param: p,
                reason: reason.to_string(),
            })
        };
        match self.family.base().0 {
            FamilyId::Uk | FamilyId::UnaryPlus if p > MAX_LINEAR_PARAM => {
                bad(&format!("parameter must be at most {MAX_LINEAR_PARAM}"))
            }
            FamilyId::Uk if p < 1 => bad("k must be at least 1"),
            FamilyId::UnaryPlus if p < 2 => bad("n must be at least 2"),
            FamilyId::Tp if !(1..=MAX_T_P).contains(&p) => {
                bad(&format!("p must lie in 1..={MAX_T_P}"))
            }
            FamilyId::WSigma if p % 2 != 0 => bad("σ must be even"),
            FamilyId::WSigma if !(2..=MAX_LINEAR_PARAM).contains(&p) => {
                bad(&format!("σ must lie in 2..={MAX_LINEAR_PARAM}"))
            }
            FamilyId::Fib | FamilyId::FibPlus | FamilyId::CFib
                if !(1..=MAX_FIB_INDEX).contains(&p) =>
            {
                bad(&format!("k must lie in 1..={MAX_FIB_INDEX}"))
            }
            FamilyId::Central if !(4..=MAX_FIB_INDEX).contains(&p) => {
                bad(&format!("k must lie in 4..={MAX_FIB_INDEX}"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.takes_param() {
            write!(f, "{}({})", self.family, self.param)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Text> {
    spec.validate()?;
    let (base, reversed) = spec.family.base();
    let p = spec.param as usize;
    let w = match base {
        FamilyId::Uk => u_k(p),
        FamilyId::Tp => t_p(p),
        FamilyId::WSigma => w_sigma(p),
        FamilyId::Fib => fib_text(fibonacci(p)),
        FamilyId::Central => fib_text(central(p)),
        FamilyId::FibPlus => {
            let mut f = fibonacci(p);
            f.push(A);
            fib_text(f)
        }
        FamilyId::CFib => {
            let mut f = vec![C];
            f.extend(fibonacci(p));
            fib_text(f)
        }
        FamilyId::UnaryPlus => {
            let mut f = vec![A];
            f.resize(p, B);
            fib_text(f)
        }
        FamilyId::T55 => fib_text(
            T55_WITNESS_REV
                .bytes()
                .rev()
                .map(|b| Symbol(u32::from(b - b'a')))
                .collect(),
        ),
        _ => unreachable!("base families only"),
    };
    Ok(if reversed { crate::text::reverse(&w) } else { w })
}

fn named(symbols: Vec<Symbol>, names: Vec<(u32, String)>) -> Text {
    let table = NameTable::new(names).expect("family names are unique");
    Text::with_names(symbols, Arc::new(table))
}

fn u_k_names(k: usize) -> Vec<(u32, String)> {
    let mut names = Vec::with_capacity(2 * k + 2);
    for i in 1..=k as u32 {
        names.push((2 * (i - 1), format!("#_{i}")));
        names.push((2 * i - 1, format!("&_{i}")));
    }
    names.push((2 * k as u32, "a".into()));
    names.push((2 * k as u32 + 1, "b".into()));
    names
}

fn u_k(k: usize) -> Text {
    let k32 = k as u32;
    let (a, b) = (Symbol(2 * k32), Symbol(2 * k32 + 1));
    let mut s = Vec::with_capacity(5 * k);
    for i in 1..=k32 {
        s.extend([b, a, hash(i), a, amp(i)]);
    }
    named(s, u_k_names(k))
}

fn hash(i: u32) -> Symbol {
    Symbol(2 * (i - 1))
}

fn amp(i: u32) -> Symbol {
    Symbol(2 * i - 1)
}

fn t_p_names(p: usize) -> Vec<(u32, String)> {
    let mut names = vec![(0, "x".to_string())];
    for i in 1..=p as u32 {
        names.push((i, format!("a{i}")));
        names.push((p as u32 + i, format!("b{i}")));
    }
    names
}

fn t_a(i: usize) -> Symbol {
    Symbol(i as u32)
}

fn t_b(p: usize, i: usize) -> Symbol {
    Symbol((p + i) as u32)
}

/// `A_p A_{p-1} ... A_1` with `A_i = a_i ... a_1`.
pub fn calligraphic_a(p: usize) -> Text {
    let s = (1..=p).rev().flat_map(|i| (1..=i).rev().map(t_a)).collect();
    named(s, t_p_names(p))
}

/// `B_1 B_2 ... B_p` with `B_i = b_i ... b_1`.
pub fn calligraphic_b(p: usize) -> Text {
    let s = (1..=p).flat_map(|i| (1..=i).rev().map(move |t| t_b(p, t))).collect();
    named(s, t_p_names(p))
}

/// Block `G_j` of `T_p`, `1 <= j <= m_p`.
pub fn t_p_block(p: usize, j: usize) -> Text {
    let (a, b) = (calligraphic_a(p), calligraphic_b(p));
    let m = a.len();
    assert!((1..=m).contains(&j), "block index out of range");
    let (a_part, b_part) = if j < m {
        (&a.symbols()[m - j..], &b.symbols()[..j + 1])
    } else {
        (a.symbols(), b.symbols())
    };
    let mut s = a_part.to_vec();
    s.push(Symbol(0));
    s.extend_from_slice(b_part);
    named(s, t_p_names(p))
}

fn t_p(p: usize) -> Text {
    let m = p * (p + 1) / 2;
    let mut s = Vec::new();
    for j in 1..=m {
        s.extend_from_slice(t_p_block(p, j).symbols());
    }
    named(s, t_p_names(p))
}

fn w_sigma(sigma: usize) -> Text {
    let mut s = Vec::with_capacity(3 * sigma - 2);
    for i in 0..sigma as u32 - 1 {
        s.extend([Symbol(i), Symbol(i + 1)]);
    }
    s.extend((0..sigma as u32).map(Symbol));
    let names = (0..sigma as u32).map(|i| (i, format!("a{}", i + 1))).collect();
    named(s, names)
}

const A: Symbol = Symbol(0);
const B: Symbol = Symbol(1);
const C: Symbol = Symbol(2);

fn fib_text(s: Vec<Symbol>) -> Text {
    let mut names = vec![(0, "a".to_string()), (1, "b".to_string())];
    if s.contains(&C) {
        names.push((2, "c".to_string()));
    }
    named(s, names)
}

/// `F_1 = b`, `F_2 = a`, `F_k = F_{k-1} F_{k-2}`.
fn fibonacci(k: usize) -> Vec<Symbol> {
    let (mut prev, mut cur) = (vec![B], vec![A]);
    if k == 1 {
        return prev;
    }
    for _ in 2..k {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_k` without its last two symbols.
fn central(k: usize) -> Vec<Symbol> {
    let mut f = fibonacci(k);
    f.truncate(f.len().saturating_sub(2));
    f
}

pub fn fibonacci_word(k: u64) -> Result<Text> {
    generate(&FamilySpec::new(FamilyId::Fib, k))
}

pub fn central_word(k: u64) -> Result<Text> {
    generate(&FamilySpec::new(FamilyId::Central, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction {
    pub measure: MeasureId,
    pub value: u64,
    /// Closed form the value comes from.
    pub lemma: &'static str,
}

/// Closed-form value of `measure` on `generate(spec)`, when one is known.
pub fn predict(spec: &FamilySpec, measure: MeasureId) -> Option<Prediction> {
    spec.validate().ok()?;
    let p = spec.param;
    let hit = |value: u64, lemma: &'static str| {
        Some(Prediction {
            measure,
            value,
            lemma,
        })
    };
    use FamilyId as F;
    use MeasureId as M;
    match (spec.family, measure) {
        (F::Uk, M::R) => hit(3 * p + 1, "r(u_k) = 3k+1"),
        (F::Uk, M::RDollar) => hit(3 * p + 2, "r_$(u_k) = r(u_k) + 1"),
        (F::Uk, M::RB) => hit(3 * p + 2, "r_B(u_k) = 3k+2"),
        (F::UkRev, M::R) => hit(4 * p + 1, "r(u_k^R) = 4k+1"),
        (F::UkRev, M::RDollar) => hit(4 * p + 2, "r_$(u_k^R) = r(u_k^R) + 1"),
        (F::UkRev, M::RB) => hit(4 * p + 1, "r_B(u_k^R) = 4k+1"),
        (F::Tp, M::Z) if p >= 2 => hit(3 * p * (p + 1) / 2, "z(T_p) = 3p^2/2 + 3p/2"),
        (F::Tp, M::ZNo) if p >= 2 => hit(3 * p * (p + 1) / 2, "z_no(T_p) = z(T_p)"),
        // z(G_m^R) = 4p - 1 plus one phrase for each remaining block.
        (F::TpRev, M::Z) if p >= 2 => hit((p * p + 9 * p - 4) / 2, "z(T_p^R) = (4p-1) + (m_p-1)"),
        (F::TpRev, M::ZNo) if p >= 2 => hit((p * p + 9 * p - 4) / 2, "z_no(T_p^R) = z(T_p^R)"),
        (F::WSigma, M::Z) => hit(5 * p / 2 - 2, "z(w_σ) = 2σ + σ/2 - 2"),
        (F::WSigma, M::ZNo) => hit(5 * p / 2 - 2, "z_no(w_σ) = z(w_σ)"),
        (F::WSigma, M::ZE) => hit(5 * p / 2 - 2, "z_e(w_σ) = z(w_σ)"),
        (F::WSigma, M::ZEnd) => hit(5 * p / 2 - 2, "z_end(w_σ) = z(w_σ)"),
        (F::WSigma, M::V) => hit(5 * p / 2 - 2, "v(w_σ) = 2σ + σ/2 - 2"),
        (F::WSigmaRev, M::Z) => hit(2 * p - 1, "z(w_σ^R) = 2σ - 1"),
        (F::WSigmaRev, M::ZNo) => hit(2 * p - 1, "z_no(w_σ^R) = z(w_σ^R)"),
        (F::WSigmaRev, M::ZE) => hit(2 * p - 1, "z_e(w_σ^R) = z(w_σ^R)"),
        (F::WSigmaRev, M::ZEnd) => hit(2 * p - 1, "z_end(w_σ^R) = z(w_σ^R)"),
        (F::WSigmaRev, M::V) => hit(2 * p - 1, "v(w_σ^R) = 2σ - 1"),
        (F::CFibRev, M::V) if p % 2 == 1 && p >= 9 => hit(6, "v((cF_k)^R) = 6"),
        (F::FibPlus, M::R) if p % 2 == 0 && p >= FIB_PLUS_MIN_K => hit(4, "r(F_k a) = 4"),
        (F::UnaryPlus, M::E) => hit(p, "e(ab^{n-1}) = n"),
        (F::T55, M::Z) => hit(14, "z(T) = 14"),
        _ => None,
    }
}

/// Closed-form value of `measure` on the reverse of `generate(spec)`.
pub fn predict_reverse(spec: &FamilySpec, measure: MeasureId) -> Option<Prediction> {
    if let Some(rev) = spec.reversed() {
        return predict(&rev, measure);
    }
    spec.validate().ok()?;
    let hit = |value: u64, lemma: &'static str| {
        Some(Prediction {
            measure,
            value,
            lemma,
        })
    };
    match (spec.family, measure) {
        (FamilyId::UnaryPlus, MeasureId::E) => hit(2 * (spec.param - 1), "e(b^{n-1}a) = 2(n-1)"),
        (FamilyId::T55, MeasureId::Z) => hit(6, "z(T^R) = 6"),
        _ => None,
    }
}

/// Closed-form BWT or BBWT of `u_k` or `u_k^R`.
pub fn predict_transform(spec: &FamilySpec, variant: TransformVariant) -> Result<Text> {
    spec.validate()?;
    let k = spec.param as u32;
    let (a, b) = (Symbol(2 * k), Symbol(2 * k + 1));
    let mut s = Vec::with_capacity(5 * k as usize);
    match (spec.family, variant) {
        (FamilyId::Uk, TransformVariant::Plain) => {
            s.extend(std::iter::repeat_n(a, 2 * k as usize));
            for i in 1..=k {
                s.extend([b, hash(i)]);
            }
            s.push(amp(k));
            s.extend((1..k).map(amp));
        }
        (FamilyId::Uk, TransformVariant::Bijective) => {
            s.push(amp(k));
            s.extend(std::iter::repeat_n(a, 2 * k as usize - 1));
            s.push(hash(1));
            for i in 2..=k {
                s.extend([b, hash(i)]);
            }
            s.push(a);
            s.extend((1..k).map(amp));
            s.push(b);
        }
        (FamilyId::UkRev, TransformVariant::Plain) => {
            for _ in 0..k {
                s.extend([a, b]);
            }
            s.extend((1..=k).map(amp));
            s.extend((2..=k).map(hash));
            s.push(hash(1));
            s.extend(std::iter::repeat_n(a, k as usize));
        }
        (FamilyId::UkRev, TransformVariant::Bijective) => {
            for _ in 0..k {
                s.extend([b, a]);
            }
            s.extend((1..=k).map(amp));
            s.extend((1..=k).map(hash));
            s.extend(std::iter::repeat_n(a, k as usize));
        }
        (family, variant) => {
            return Err(Error::Unsupported(format!(
                "no closed-form {} for {family}",
                variant.id()
            )))
        }
    }
    Ok(named(s, u_k_names(k as usize)))
}

/// The five Fibonacci-word properties, each evaluated directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibReport {
    pub k: u64,
    /// `C_k` is a palindrome.
    pub palindrome: bool,
    /// `C_k = F_{k-2} F_{k-3} ... F_2`.
    pub factorization: bool,
    /// `a C_k b` is Lyndon.
    pub lyndon: bool,
    /// `F_{k-2}` occurs in `F_k` exactly at `0`, `f_{k-2}`, `f_{k-1}`.
    pub occurrences: bool,
    /// `F_k` and `F_{k-2} F_{k-1}` end in `ab`/`ba` after `C_k` by parity.
    pub suffixes: bool,
    /// Starting positions (0-based) of `F_{k-2}` in `F_k`.
    pub occurrence_positions: Vec<usize>,
}

impl FibReport {
    pub fn all(&self) -> bool {
        self.palindrome && self.factorization && self.lyndon && self.occurrences && self.suffixes
    }

    pub fn checks(&self) -> [(&'static str, bool); 5] {
        [
            ("palindrome", self.palindrome),
            ("factorization", self.factorization),
            ("lyndon", self.lyndon),
            ("occurrences", self.occurrences),
            ("suffixes", self.suffixes),
        ]
    }
}

pub fn fib_property_check(k: u64) -> Result<FibReport> {
    if !(6..=MAX_FIB_INDEX).contains(&k) {
        return Err(Error::InvalidParameter {
            family: "fib",
            param: k,
            reason: format!("k must lie in 6..={MAX_FIB_INDEX}"),
        });
    }
    let k = k as usize;
    let f = |i: usize| fibonacci(i);
    let fk = f(k);
    let ck = central(k);

    let palindrome = ck.iter().eq(ck.iter().rev());

    let factors: Vec<Symbol> = (2..=k - 2).rev().flat_map(f).collect();
    let factorization = factors == ck;

    let mut acb = vec![A];
    acb.extend_from_slice(&ck);
    acb.push(B);
    let lyndon = is_lyndon_slice(&acb);

    let positions = find_all(&f(k - 2), &fk);
    let occurrences = positions == [0, f(k - 2).len(), f(k - 1).len()];

    let (tail_k, tail_swap) = if k % 2 == 1 { ([A, B], [B, A]) } else { ([B, A], [A, B]) };
    let with_tail = |tail: [Symbol; 2]| {
        let mut v = ck.clone();
        v.extend(tail);
        v
    };
    let mut swapped = f(k - 2);
    swapped.extend(f(k - 1));
    let suffixes = fk == with_tail(tail_k) && swapped == with_tail(tail_swap);

    Ok(FibReport {
        k: k as u64,
        palindrome,
        factorization,
        lyndon,
        occurrences,
        suffixes,
        occurrence_positions: positions,
    })
}
