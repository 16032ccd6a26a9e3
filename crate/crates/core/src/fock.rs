//! The charged Fock space `F_α` and the bosonic Sugawara operators on it.
//!
//! Basis vectors are partitions: `(p₁, …, pₘ)` is `J(−p₁)⋯J(−pₘ)|α⟩`. The
//! currents act by
//!
//! * `J(−k)`, `k > 0`: adds a part `k`;
//! * `J(0)`: multiplication by `α`;
//! * `J(k)`, `k > 0`: `k · (multiplicity of k) ·` (one copy of `k` removed),
//!
//! which realizes `[J(k), J(l)] = k·δ(k+l, 0)` with the central element acting
//! as the identity. Every vector is killed by `J(l)` for `l` beyond its largest
//! part, so the Sugawara sums `L(n) = ½ Σ_k :J(n−k) J(k):` are finite on each
//! vector.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::free::{write_terms, FreeVector};
use crate::partition::Partition;
use crate::report::{symmetric_range, Check, Counterexample, VerificationReport};
use crate::scalar::Scalar;

pub type Terms = FreeVector<Partition>;

/// A vector of `F_α`. Vectors of different charge live in different spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    alpha: Scalar,
    terms: Terms,
}

impl FockVector {
    pub fn new(alpha: Scalar, terms: Terms) -> Self {
        FockVector { alpha, terms }
    }

    pub fn zero(alpha: Scalar) -> Self {
        Self::new(alpha, Terms::zero())
    }

    /// The highest weight vector `|α⟩`.
    pub fn vacuum(alpha: Scalar) -> Self {
        Self::basis(alpha, Partition::empty())
    }

    pub fn basis(alpha: Scalar, partition: Partition) -> Self {
        Self::new(alpha, Terms::basis(partition))
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn coeff(&self, partition: &Partition) -> Scalar {
        self.terms.coeff(partition)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn same_space(&self, other: &FockVector) -> Result<()> {
        if self.alpha == other.alpha {
            Ok(())
        } else {
            Err(Error::ChargeMismatch {
                left: Box::new(self.alpha.clone()),
                right: Box::new(other.alpha.clone()),
            })
        }
    }

    pub fn checked_add(&self, other: &FockVector) -> Result<FockVector> {
        self.same_space(other)?;
        Ok(Self::new(self.alpha.clone(), &self.terms + &other.terms))
    }

    pub fn checked_sub(&self, other: &FockVector) -> Result<FockVector> {
        self.same_space(other)?;
        Ok(Self::new(self.alpha.clone(), &self.terms - &other.terms))
    }

    pub fn scale(&self, s: &Scalar) -> FockVector {
        Self::new(self.alpha.clone(), self.terms.scale(s))
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, &self.terms, "J", "|α⟩")
    }
}

pub(crate) fn render_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &Terms,
    symbol: &str,
    ket: &str,
) -> fmt::Result {
    struct Mono<'a>(&'a Partition, &'a str);
    impl fmt::Display for Mono<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            self.0.write_monomial(f, self.1)
        }
    }
    write_terms(
        f,
        terms
            .iter()
            .map(|(p, c)| (c, format!("{}{ket}", Mono(p, symbol)))),
        "·",
    )
}

/// `J(k)` on a single basis vector.
fn j_basis(alpha: &Scalar, k: i64, partition: &Partition) -> Terms {
    match k {
        0 => Terms::term(alpha.clone(), partition.clone()),
        k if k < 0 => Terms::basis(partition.inserted(k.unsigned_abs() as u32)),
        k => {
            let Ok(part) = u32::try_from(k) else {
                return Terms::zero();
            };
            let mult = partition.multiplicity(part);
            match partition.removed(part) {
                Some(rest) => Terms::term(Scalar::from_int(k * mult as i64), rest),
                None => Terms::zero(),
            }
        }
    }
}

fn j_terms(alpha: &Scalar, k: i64, terms: &Terms) -> Terms {
    let mut out = Terms::zero();
    for (p, c) in terms.iter() {
        out.add_scaled(c, &j_basis(alpha, k, p));
    }
    out
}

/// The current `J(k)`.
pub fn j_action(k: i64, v: &FockVector) -> FockVector {
    FockVector::new(v.alpha.clone(), j_terms(&v.alpha, k, &v.terms))
}

fn bound_of(terms: &Terms) -> i64 {
    1 + terms
        .support()
        .filter_map(Partition::max_part)
        .max()
        .unwrap_or(0) as i64
}

/// An `N` with `J(l) v = 0` for every `l >= N`: one more than the largest part
/// occurring in `v` (so `1` for the vacuum and the zero vector).
pub fn truncation_bound(v: &FockVector) -> i64 {
    bound_of(&v.terms)
}

/// `:J(k) J(l):`, the current with the larger index applied first.
fn normal_pair_terms(alpha: &Scalar, k: i64, l: i64, terms: &Terms) -> Terms {
    let (first, second) = if k <= l { (l, k) } else { (k, l) };
    j_terms(alpha, second, &j_terms(alpha, first, terms))
}

/// The normally ordered product `:J(k) J(l):`.
pub fn normal_pair(k: i64, l: i64, v: &FockVector) -> FockVector {
    FockVector::new(v.alpha.clone(), normal_pair_terms(&v.alpha, k, l, &v.terms))
}

fn sugawara_terms(alpha: &Scalar, n: i64, terms: &Terms) -> Terms {
    let bound = bound_of(terms);
    let mut out = Terms::zero();
    for k in (n - bound + 1)..bound {
        let t = normal_pair_terms(alpha, n - k, k, terms);
        out = out + t;
    }
    out.scale(&Scalar::ratio(1, 2))
}

/// The Sugawara operator `L(n) v = ½ Σ_{n−N < k < N} :J(n−k) J(k): v` with
/// `N = truncation_bound(v)`; the remaining terms of the formal sum vanish.
pub fn sugawara_l(n: i64, v: &FockVector) -> FockVector {
    FockVector::new(v.alpha.clone(), sugawara_terms(&v.alpha, n, &v.terms))
}

/// `Σ_{0 <= l < n} (n − l)·l`.
pub fn weighted_sum(n: u64) -> BigInt {
    let n = BigInt::from(n);
    let mut acc = BigInt::from(0);
    let mut l = BigInt::from(0);
    while l < n {
        acc += (&n - &l) * &l;
        l += 1;
    }
    acc
}

/// Whether `Σ_{0 <= l < n} (n − l)·l = (n³ − n)/6`.
pub fn weighted_sum_check(n: u64) -> bool {
    let m = BigInt::from(n);
    let closed = (&m * &m * &m - &m) / BigInt::from(6);
    weighted_sum(n) * BigInt::from(6) == &m * &m * &m - &m && weighted_sum(n) == closed
}

pub fn check_weighted_sums(max_n: u64) -> VerificationReport {
    let cases: Vec<u64> = (0..=max_n).collect();
    Check::new("sum-identity")
        .param("max_index", max_n)
        .run(&cases, |&n| {
            (!weighted_sum_check(n)).then(|| {
                let m = BigInt::from(n);
                Counterexample::new()
                    .index("n", n as i64)
                    .input("sum_{0<=l<n} (n-l) l")
                    .expected(format!("{}", (&m * &m * &m - &m) / BigInt::from(6)))
                    .actual(weighted_sum(n))
            })
        })
}

fn basis_cases(max_level: u64) -> Vec<Partition> {
    Partition::up_to_level(max_level)
}

fn fock_counterexample(alpha: &Scalar, p: &Partition) -> Counterexample {
    Counterexample::new().input(FockVector::basis(alpha.clone(), p.clone()))
}

fn mismatch(
    cx: Counterexample,
    alpha: &Scalar,
    expected: Terms,
    actual: Terms,
) -> Option<Counterexample> {
    (expected != actual).then(|| {
        cx.expected(FockVector::new(alpha.clone(), expected))
            .actual(FockVector::new(alpha.clone(), actual))
    })
}

/// `J(k)J(l) − J(l)J(k) = k·δ(k+l, 0)` on basis vectors of level at most `max_level`.
pub fn check_heisenberg_relations(
    max_index: u64,
    max_level: u64,
    alpha: &Scalar,
) -> VerificationReport {
    let mut cases = Vec::new();
    for k in symmetric_range(max_index) {
        for l in symmetric_range(max_index) {
            for p in basis_cases(max_level) {
                cases.push((k, l, p));
            }
        }
    }
    Check::new("heisenberg")
        .param("alpha", alpha)
        .param("max_index", max_index)
        .param("max_level", max_level)
        .run(&cases, |(k, l, p)| {
            let v = Terms::basis(p.clone());
            let actual = j_terms(alpha, *k, &j_terms(alpha, *l, &v))
                - j_terms(alpha, *l, &j_terms(alpha, *k, &v));
            let expected = if k + l == 0 {
                v.scale(&Scalar::from_int(*k))
            } else {
                Terms::zero()
            };
            mismatch(
                fock_counterexample(alpha, p).index("k", *k).index("l", *l),
                alpha,
                expected,
                actual,
            )
        })
}

/// `J(l) v = 0` for `truncation_bound(v) <= l <= truncation_bound(v) + margin`
/// on basis vectors of level at most `max_level`.
pub fn check_truncation(max_level: u64, margin: u64, alpha: &Scalar) -> VerificationReport {
    let cases = basis_cases(max_level);
    Check::new("truncation")
        .param("alpha", alpha)
        .param("margin", margin)
        .param("max_level", max_level)
        .run(&cases, |p| {
            let v = FockVector::basis(alpha.clone(), p.clone());
            let bound = truncation_bound(&v);
            (bound..=bound + margin as i64).find_map(|l| {
                let w = j_action(l, &v);
                (!w.is_zero()).then(|| {
                    fock_counterexample(alpha, p)
                        .index("l", l)
                        .expected(FockVector::zero(alpha.clone()))
                        .actual(w)
                })
            })
        })
}

/// Symmetry of the normal ordering, `:J(k)J(l): = :J(l)J(k):`, and agreement
/// with the form "`J(k)∘J(l)` if `k < 0`, else `J(l)∘J(k)`".
pub fn check_normal_pair_symmetry(
    max_index: u64,
    max_level: u64,
    alpha: &Scalar,
) -> VerificationReport {
    let mut cases = Vec::new();
    for k in symmetric_range(max_index) {
        for l in symmetric_range(max_index) {
            for p in basis_cases(max_level) {
                cases.push((k, l, p));
            }
        }
    }
    Check::new("normal-pair-symmetry")
        .param("alpha", alpha)
        .param("max_index", max_index)
        .param("max_level", max_level)
        .run(&cases, |(k, l, p)| {
            let (k, l) = (*k, *l);
            let v = Terms::basis(p.clone());
            let kl = normal_pair_terms(alpha, k, l, &v);
            let lk = normal_pair_terms(alpha, l, k, &v);
            let alt = if k < 0 {
                j_terms(alpha, k, &j_terms(alpha, l, &v))
            } else {
                j_terms(alpha, l, &j_terms(alpha, k, &v))
            };
            let cx = || fock_counterexample(alpha, p).index("k", k).index("l", l);
            mismatch(cx(), alpha, kl.clone(), lk).or_else(|| mismatch(cx(), alpha, kl, alt))
        })
}

/// `:J(n−k) J(k): v = 0` for every `k` outside `(n − N, N)`, `N = truncation_bound(v)`,
/// tested up to `margin` beyond each end of the range.
pub fn check_normal_pair_vanishing(
    max_index: u64,
    max_level: u64,
    margin: u64,
    alpha: &Scalar,
) -> VerificationReport {
    let mut cases = Vec::new();
    for n in symmetric_range(max_index) {
        for p in basis_cases(max_level) {
            cases.push((n, p));
        }
    }
    Check::new("normal-pair-vanishing")
        .param("alpha", alpha)
        .param("margin", margin)
        .param("max_index", max_index)
        .param("max_level", max_level)
        .run(&cases, |(n, p)| {
            let n = *n;
            let v = Terms::basis(p.clone());
            let bound = bound_of(&v);
            let margin = margin as i64;
            let below = (n - bound - margin + 1)..=(n - bound);
            let above = bound..=(bound + margin - 1);
            below.chain(above).find_map(|k| {
                let w = normal_pair_terms(alpha, n - k, k, &v);
                (!w.is_zero()).then(|| {
                    fock_counterexample(alpha, p)
                        .index("n", n)
                        .index("k", k)
                        .expected(FockVector::zero(alpha.clone()))
                        .actual(FockVector::new(alpha.clone(), w))
                })
            })
        })
}

/// `[L(n), J(k)] = −k·J(n+k)` on basis vectors of level at most `max_level`.
pub fn check_primary_field(max_index: u64, max_level: u64, alpha: &Scalar) -> VerificationReport {
    let mut cases = Vec::new();
    for n in symmetric_range(max_index) {
        for k in symmetric_range(max_index) {
            for p in basis_cases(max_level) {
                cases.push((n, k, p));
            }
        }
    }
    Check::new("primary-field")
        .param("alpha", alpha)
        .param("max_index", max_index)
        .param("max_level", max_level)
        .run(&cases, |(n, k, p)| {
            let (n, k) = (*n, *k);
            let v = Terms::basis(p.clone());
            let actual = sugawara_terms(alpha, n, &j_terms(alpha, k, &v))
                - j_terms(alpha, k, &sugawara_terms(alpha, n, &v));
            let expected = j_terms(alpha, n + k, &v).scale(&Scalar::from_int(-k));
            mismatch(
                fock_counterexample(alpha, p).index("n", n).index("k", k),
                alpha,
                expected,
                actual,
            )
        })
}

/// The scalar `k(n+k)·δ(n+m, 0)·(𝟙[0 <= k < −n] − 𝟙[−n <= k < 0])`.
pub fn normal_pair_central_term(n: i64, m: i64, k: i64) -> Scalar {
    if n + m != 0 {
        return Scalar::zero();
    }
    let first = i64::from(0 <= k && k < -n);
    let second = i64::from(-n <= k && k < 0);
    Scalar::from_int(k * (n + k) * (first - second))
}

fn normal_pair_commutator_case(
    alpha: &Scalar,
    n: i64,
    m: i64,
    k: i64,
    p: &Partition,
) -> Option<Counterexample> {
    let v = Terms::basis(p.clone());
    let actual = sugawara_terms(alpha, n, &normal_pair_terms(alpha, m - k, k, &v))
        - normal_pair_terms(alpha, m - k, k, &sugawara_terms(alpha, n, &v));
    let mut expected = normal_pair_terms(alpha, m - k, n + k, &v).scale(&Scalar::from_int(-k));
    expected.add_scaled(
        &Scalar::from_int(-(m - k)),
        &normal_pair_terms(alpha, n + m - k, k, &v),
    );
    expected.add_scaled(&normal_pair_central_term(n, m, k), &v);
    mismatch(
        fock_counterexample(alpha, p)
            .index("n", n)
            .index("m", m)
            .index("k", k),
        alpha,
        expected,
        actual,
    )
}

/// `[L(n), :J(m−k) J(k):] = −k :J(m−k) J(n+k): − (m−k) :J(n+m−k) J(k):`
/// `+ k(n+k)·δ(n+m,0)·(𝟙[0 <= k < −n] − 𝟙[−n <= k < 0])` on every basis
/// vector of level at most `max_level`.
pub fn check_normal_pair_commutator(
    n: i64,
    m: i64,
    k: i64,
    max_level: u64,
    alpha: &Scalar,
) -> VerificationReport {
    let cases = basis_cases(max_level);
    Check::new("normal-pair")
        .param("alpha", alpha)
        .param("k", k)
        .param("m", m)
        .param("max_level", max_level)
        .param("n", n)
        .run(&cases, |p| normal_pair_commutator_case(alpha, n, m, k, p))
}

/// [`check_normal_pair_commutator`] for all `|n|, |m| <= max_index` and `|k| <= max_k`.
pub fn check_normal_pair_commutators(
    max_index: u64,
    max_k: u64,
    max_level: u64,
    alpha: &Scalar,
) -> VerificationReport {
    let mut cases = Vec::new();
    for n in symmetric_range(max_index) {
        for m in symmetric_range(max_index) {
            for k in symmetric_range(max_k) {
                for p in basis_cases(max_level) {
                    cases.push((n, m, k, p));
                }
            }
        }
    }
    Check::new("normal-pair")
        .param("alpha", alpha)
        .param("max_index", max_index)
        .param("max_k", max_k)
        .param("max_level", max_level)
        .run(&cases, |(n, m, k, p)| {
            normal_pair_commutator_case(alpha, *n, *m, *k, p)
        })
}

/// `(n³ − n)/12`.
pub(crate) fn central_coefficient(n: i64) -> Scalar {
    let m = BigInt::from(n);
    Scalar::from_bigint(m.pow(3) - &m) / Scalar::from_int(12)
}

/// `[L(n), L(m)] = (n − m) L(n+m) + δ(n+m, 0)·(n³ − n)/12` on basis vectors of
/// level at most `max_level`: the Virasoro relations with central charge 1.
pub fn check_sugawara_commutator(
    max_index: u64,
    max_level: u64,
    alpha: &Scalar,
) -> VerificationReport {
    let mut cases = Vec::new();
    for n in symmetric_range(max_index) {
        for m in symmetric_range(max_index) {
            for p in basis_cases(max_level) {
                cases.push((n, m, p));
            }
        }
    }
    Check::new("sugawara")
        .param("alpha", alpha)
        .param("max_index", max_index)
        .param("max_level", max_level)
        .run(&cases, |(n, m, p)| {
            let (n, m) = (*n, *m);
            let v = Terms::basis(p.clone());
            let actual = sugawara_terms(alpha, n, &sugawara_terms(alpha, m, &v))
                - sugawara_terms(alpha, m, &sugawara_terms(alpha, n, &v));
            let mut expected = sugawara_terms(alpha, n + m, &v).scale(&Scalar::from_int(n - m));
            if n + m == 0 {
                expected.add_scaled(&central_coefficient(n), &v);
            }
            mismatch(
                fock_counterexample(alpha, p).index("n", n).index("m", m),
                alpha,
                expected,
                actual,
            )
        })
}
