//! Degree-two cohomology of the Witt algebra with scalar coefficients.
//!
//! A 2-cocycle is consumed through [`CocycleOracle`], a function on pairs of
//! basis indices. The Virasoro cocycle is supported on the whole
//! anti-diagonal, so it is never forced into a finite table; tables loaded from
//! files are oracles with a bounded domain.

mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::report::{symmetric_range, Check, Counterexample, VerificationReport};
use crate::scalar::Scalar;
use crate::witt::{structure_constant, WittVector};
use rayon::prelude::*;

/// A linear functional on the Witt algebra, given by its values on `l(n)`.
///
/// Values outside `[-window, window]` are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct OneCochain {
    values: BTreeMap<i64, Scalar>,
    window: u64,
}

impl OneCochain {
    pub fn zero(window: u64) -> Self {
        OneCochain {
            values: BTreeMap::new(),
            window,
        }
    }

    /// Builds a cochain from `(n, β(l(n)))` pairs. Later pairs overwrite
    /// earlier ones; indices outside the window are rejected.
    pub fn new<I: IntoIterator<Item = (i64, Scalar)>>(window: u64, values: I) -> Result<Self> {
        let mut beta = Self::zero(window);
        for (n, v) in values {
            beta.set(n, v)?;
        }
        Ok(beta)
    }

    pub fn from_fn(window: u64, f: impl Fn(i64) -> Scalar) -> Self {
        let values = symmetric_range(window)
            .map(|n| (n, f(n)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        OneCochain { values, window }
    }

    pub(crate) fn set(&mut self, n: i64, value: Scalar) -> Result<()> {
        if n.unsigned_abs() > self.window {
            return Err(Error::OutsideWindow {
                index: n,
                window: self.window,
            });
        }
        if value.is_zero() {
            self.values.remove(&n);
        } else {
            self.values.insert(n, value);
        }
        Ok(())
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    /// `β(l(n))`.
    pub fn get(&self, n: i64) -> Scalar {
        self.values.get(&n).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero values in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Scalar)> + '_ {
        self.values.iter().map(|(n, v)| (*n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `β(x)` for a Witt vector `x`.
    pub fn eval(&self, x: &WittVector) -> Scalar {
        x.iter().map(|(n, c)| c * self.get(*n)).sum()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        OneCochain::from_fn(self.window, |n| s * self.get(n))
    }

    pub fn add(&self, other: &OneCochain) -> Self {
        let window = self.window.max(other.window);
        OneCochain::from_fn(window, |n| self.get(n) + other.get(n))
    }
}

impl fmt::Debug for OneCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OneCochain")
            .field("window", &self.window)
            .field("values", &self.values)
            .finish()
    }
}

/// An antisymmetric table of values `ω(l(m), l(n))` for `m < n`, with
/// `max(|m|, |n|) <= window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycleTable {
    entries: BTreeMap<(i64, i64), Scalar>,
    window: u64,
}

impl TwoCocycleTable {
    pub fn new(window: u64) -> Self {
        TwoCocycleTable {
            entries: BTreeMap::new(),
            window,
        }
    }

    /// Stores `ω(l(m), l(n)) = value` (and implicitly the antisymmetric
    /// partner). Rejects the diagonal and indices outside the window.
    pub fn set(&mut self, m: i64, n: i64, value: Scalar) -> Result<()> {
        for idx in [m, n] {
            if idx.unsigned_abs() > self.window {
                return Err(Error::OutsideWindow {
                    index: idx,
                    window: self.window,
                });
            }
        }
        let (key, value) = match m.cmp(&n) {
            std::cmp::Ordering::Less => ((m, n), value),
            std::cmp::Ordering::Greater => ((n, m), -value),
            std::cmp::Ordering::Equal => {
                return Err(Error::Table {
                    line: 0,
                    message: format!("diagonal entry ({m}, {m}) must be zero"),
                })
            }
        };
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
        Ok(())
    }

    /// Samples `omega` on every pair in the window.
    pub fn tabulate(omega: &CocycleOracle, window: u64) -> Self {
        let mut table = TwoCocycleTable::new(window);
        for m in symmetric_range(window) {
            for n in (m + 1)..=(window as i64) {
                let v = omega.eval(m, n);
                if !v.is_zero() {
                    table.entries.insert((m, n), v);
                }
            }
        }
        table
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    pub fn get(&self, m: i64, n: i64) -> Scalar {
        match m.cmp(&n) {
            std::cmp::Ordering::Less => self.entries.get(&(m, n)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => -self.entries.get(&(n, m)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    /// Nonzero entries `((m, n), value)` with `m < n`, in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &Scalar)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }
}

type Rule = dyn Fn(i64, i64) -> Scalar + Send + Sync;

/// An antisymmetric scalar function on pairs of basis indices.
///
/// The underlying rule is consulted only for `m < n`; the value for `m > n`
/// is its negation and the diagonal is zero, so antisymmetry holds by
/// construction. `domain` is `None` for rules defined on all of ℤ and
/// `Some(w)` for data that is only meaningful when `|m|, |n| <= w`.
#[derive(Clone)]
pub struct CocycleOracle {
    rule: Arc<Rule>,
    domain: Option<u64>,
    label: String,
}

impl CocycleOracle {
    /// Wraps a rule given on pairs `m < n`.
    pub fn from_rule<F>(label: impl Into<String>, rule: F) -> Self
    where
        F: Fn(i64, i64) -> Scalar + Send + Sync + 'static,
    {
        CocycleOracle {
            rule: Arc::new(rule),
            domain: None,
            label: label.into(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rule("0", |_, _| Scalar::zero())
    }

    /// The Virasoro cocycle `(m³ − m)/12 · δ(m+n, 0)`.
    pub fn virasoro() -> Self {
        Self::from_rule("virasoro", virasoro_cocycle)
    }

    pub fn from_table(table: TwoCocycleTable) -> Self {
        let window = table.window();
        let table = Arc::new(table);
        CocycleOracle {
            rule: Arc::new(move |m, n| table.get(m, n)),
            domain: Some(window),
            label: format!("table(window {window})"),
        }
    }

    /// The same oracle with its values for `|m| <= a`, `|n| <= b` computed once.
    fn cached(&self, a: i64, b: i64) -> Self {
        let width = (2 * b + 1) as usize;
        let values: Vec<Scalar> = (-a..=a)
            .flat_map(|m| (-b..=b).map(move |n| (m, n)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(m, n)| self.eval(m, n))
            .collect();
        let inner = self.clone();
        let values = Arc::new(values);
        let lookup = move |m: i64, n: i64| {
            if m.abs() <= a && n.abs() <= b {
                values[(m + a) as usize * width + (n + b) as usize].clone()
            } else if n.abs() <= a && m.abs() <= b {
                -values[(n + a) as usize * width + (m + b) as usize].clone()
            } else {
                inner.eval(m, n)
            }
        };
        CocycleOracle {
            rule: Arc::new(lookup),
            domain: self.domain,
            label: self.label.clone(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Option<u64> {
        self.domain
    }

    /// Whether `(m, n)` lies in the domain where the oracle's values are meaningful.
    pub fn covers(&self, m: i64, n: i64) -> bool {
        match self.domain {
            None => true,
            Some(w) => m.unsigned_abs() <= w && n.unsigned_abs() <= w,
        }
    }

    /// `ω(l(m), l(n))`.
    pub fn eval(&self, m: i64, n: i64) -> Scalar {
        match m.cmp(&n) {
            std::cmp::Ordering::Less => (self.rule)(m, n),
            std::cmp::Ordering::Greater => -(self.rule)(n, m),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    /// `ω(x, y)` extended bilinearly.
    pub fn eval_bilinear(&self, x: &WittVector, y: &WittVector) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, cm) in x.iter() {
            for (n, cn) in y.iter() {
                let v = self.eval(*m, *n);
                if !v.is_zero() {
                    acc += cm * cn * v;
                }
            }
        }
        acc
    }

    pub fn scaled(&self, r: &Scalar) -> Self {
        let inner = self.clone();
        let r = r.clone();
        let label = format!("{r}*({})", self.label);
        CocycleOracle {
            rule: Arc::new(move |m, n| &r * inner.eval(m, n)),
            domain: self.domain,
            label,
        }
    }

    pub fn plus(&self, other: &CocycleOracle) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let domain = match (self.domain, other.domain) {
            (None, d) | (d, None) => d,
            (Some(x), Some(y)) => Some(x.min(y)),
        };
        CocycleOracle {
            rule: Arc::new(move |m, n| a.eval(m, n) + b.eval(m, n)),
            domain,
            label: format!("{} + {}", self.label, other.label),
        }
    }
}

impl fmt::Debug for CocycleOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CocycleOracle")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .finish()
    }
}

/// The Virasoro cocycle on basis indices: `(m³ − m)/12` if `m + n = 0`, else 0.
pub fn virasoro_cocycle(m: i64, n: i64) -> Scalar {
    if m.checked_add(n) != Some(0) {
        return Scalar::zero();
    }
    let m = BigInt::from(m);
    let cube = &m * &m * &m;
    Scalar::from_bigint(cube - m) / Scalar::from_int(12)
}

/// The coboundary `∂β(l(m), l(n)) = β([l(m), l(n)]) = (m − n)·β(l(m+n))`.
pub fn coboundary(beta: &OneCochain) -> CocycleOracle {
    let beta = beta.clone();
    CocycleOracle::from_rule("coboundary", move |m, n| {
        Scalar::from_int(structure_constant(m, n)) * beta.get(m + n)
    })
}

/// `(m−k)ω(n, m+k) + (k−n)ω(m, n+k) + (n−m)ω(k, n+m)`, which vanishes for
/// every 2-cocycle of the Witt algebra.
pub fn cocycle_identity_defect(omega: &CocycleOracle, n: i64, m: i64, k: i64) -> Scalar {
    let mut acc = Scalar::zero();
    for (c, a, b) in [(m - k, n, m + k), (k - n, m, n + k), (n - m, k, n + m)] {
        if c != 0 {
            let v = omega.eval(a, b);
            if !v.is_zero() {
                acc += Scalar::from_int(c) * v;
            }
        }
    }
    acc
}

fn identity_triples(omega: &CocycleOracle, window: u64) -> Vec<(i64, i64, i64)> {
    let mut triples = Vec::new();
    for n in symmetric_range(window) {
        for m in symmetric_range(window) {
            for k in symmetric_range(window) {
                if omega.covers(n, m + k) && omega.covers(m, n + k) && omega.covers(k, n + m) {
                    triples.push((n, m, k));
                }
            }
        }
    }
    triples
}

/// Checks the cocycle identity for all `|n|, |m|, |k| <= window`.
///
/// For table-backed oracles, triples that reference a pair outside the
/// table's window are not claimed and are skipped.
pub fn check_cocycle_identity(omega: &CocycleOracle, window: u64) -> VerificationReport {
    let triples = identity_triples(omega, window);
    let omega = &omega.cached(window as i64, 2 * window as i64);
    Check::new("cocycle")
        .param("cocycle", omega.label())
        .param("window", window)
        .run(&triples, |&(n, m, k)| {
            let defect = cocycle_identity_defect(omega, n, m, k);
            (!defect.is_zero()).then(|| {
                Counterexample::new()
                    .index("n", n)
                    .index("m", m)
                    .index("k", k)
                    .input("(m-k)w(n,m+k) + (k-n)w(m,n+k) + (n-m)w(k,n+m)")
                    .expected(0)
                    .actual(defect)
            })
        })
}

/// `(2m+n)(n³−n) = (n−m)((n+m)³−(n+m)) + (2n+m)(m³−m)`, the integer identity
/// behind the cocycle property of the Virasoro cocycle.
pub fn virasoro_polynomial_identity(m: i64, n: i64) -> bool {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    let cubic = |x: &BigInt| x * x * x - x;
    let lhs = (BigInt::from(2) * &m + &n) * cubic(&n);
    let s = &m + &n;
    let rhs = (&n - &m) * cubic(&s) + (BigInt::from(2) * &n + &m) * cubic(&m);
    lhs == rhs
}

pub fn check_virasoro_polynomial_identity(bound: u64) -> VerificationReport {
    let pairs: Vec<(i64, i64)> = symmetric_range(bound)
        .flat_map(|m| symmetric_range(bound).map(move |n| (m, n)))
        .collect();
    Check::new("virasoro-polynomial-identity")
        .param("bound", bound)
        .run(&pairs, |&(m, n)| {
            (!virasoro_polynomial_identity(m, n)).then(|| {
                Counterexample::new()
                    .index("m", m)
                    .index("n", n)
                    .input("(2m+n)(n^3-n) - (n-m)((n+m)^3-(n+m)) - (2n+m)(m^3-m)")
                    .expected(0)
                    .actual("nonzero")
            })
        })
}

/// Output of [`reduce_cocycle`]: `ω + ∂β = r·ω_vir` on the window.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub beta: OneCochain,
    pub r: Scalar,
    pub residual: VerificationReport,
}

/// Normalizes a Witt 2-cocycle to a multiple of the Virasoro cocycle.
///
/// `β(l(0)) = −½·ω(l(1), l(−1))` and `β(l(n)) = ω(l(0), l(n))/n` otherwise,
/// then `r = 2·(ω + ∂β)(l(2), l(−2))`. The cochain is built on `[-2W, 2W]`
/// so that `∂β(l(m), l(n))` is exact for every `|m|, |n| <= W`; the residual
/// report checks `(ω + ∂β)(l(m), l(n)) = r·ω_vir(l(m), l(n))` on that window.
///
/// The cocycle identity is verified on the window first; input that fails it
/// is rejected with [`Error::NotACocycle`].
pub fn reduce_cocycle(omega: &CocycleOracle, window: u64) -> Result<Reduction> {
    if window < 2 {
        return Err(Error::WindowTooSmall { window, minimum: 2 });
    }
    let pre = check_cocycle_identity(omega, window);
    if let Some(cx) = pre.counterexample {
        return Err(Error::NotACocycle {
            window,
            triple: (cx.indices["n"], cx.indices["m"], cx.indices["k"]),
        });
    }

    let half = Scalar::ratio(1, 2);
    let beta = OneCochain::from_fn(2 * window, |n| {
        if n == 0 {
            -(&half * omega.eval(1, -1))
        } else {
            omega.eval(0, n) / Scalar::from_int(n)
        }
    });
    let normalized = omega.plus(&coboundary(&beta));
    let r = Scalar::from_int(2) * normalized.eval(2, -2);

    let pairs: Vec<(i64, i64)> = symmetric_range(window)
        .flat_map(|m| symmetric_range(window).map(move |n| (m, n)))
        .filter(|&(m, n)| normalized.covers(m, n))
        .collect();
    let residual = Check::new("reduction-residual")
        .param("cocycle", omega.label())
        .param("r", &r)
        .param("window", window)
        .run(&pairs, |&(m, n)| {
            let actual = normalized.eval(m, n);
            let expected = &r * virasoro_cocycle(m, n);
            (actual != expected).then(|| {
                Counterexample::new()
                    .index("m", m)
                    .index("n", n)
                    .input("(w + dbeta)(l(m), l(n))")
                    .expected(&expected)
                    .actual(&actual)
            })
        });
    Ok(Reduction { beta, r, residual })
}

/// A pair `n1 < n2` at which `ω(l(n), l(−n)) / 2n` takes different values.
///
/// A coboundary `∂β` has `∂β(l(n), l(−n)) = 2n·β(l(0))`, so such a pair
/// certifies that `ω` is not a coboundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n1: i64,
    pub n2: i64,
    pub ratio1: Scalar,
    pub ratio2: Scalar,
}

/// Searches `1 <= n1 < n2 <= window` by increasing `n2`, then increasing `n1`.
pub fn nontriviality_witness(omega: &CocycleOracle, window: u64) -> Option<Witness> {
    let ratio = |n: i64| omega.eval(n, -n) / Scalar::from_int(2 * n);
    let ratios: Vec<Scalar> = (1..=window as i64).map(ratio).collect();
    for n2 in 2..=window as i64 {
        for n1 in 1..n2 {
            let (r1, r2) = (&ratios[(n1 - 1) as usize], &ratios[(n2 - 1) as usize]);
            if r1 != r2 {
                return Some(Witness {
                    n1,
                    n2,
                    ratio1: r1.clone(),
                    ratio2: r2.clone(),
                });
            }
        }
    }
    None
}
