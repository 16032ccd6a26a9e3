//! One-dimensional central extensions `g ⊕ F` of ℤ-indexed Lie algebras.
//!
//! An element is a pair `(X, A)`; the bracket is
//! `[(X, A), (Y, B)] = ([X, Y], ω(X, Y))` for a 2-cocycle `ω`. With the Witt
//! algebra and the Virasoro cocycle this is the Virasoro algebra (generators
//! `L(n) = (l(n), 0)`, central `C = (0, 1)`); with the abelian algebra and
//! `ω(k, l) = k·δ(k+l, 0)` it is the Heisenberg algebra (`J(k)`, `K`).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::cohomology::{CocycleOracle, OneCochain};
use crate::free::bilinear_extend;
use crate::report::{symmetric_range, Check, Counterexample, VerificationReport};
use crate::scalar::Scalar;
use crate::witt::{self, l, Render, WittVector};

type BracketRule = dyn Fn(i64, i64) -> WittVector + Send + Sync;

/// A Lie bracket given on pairs of basis indices.
#[derive(Clone)]
pub struct BaseAlgebra {
    name: String,
    rule: Arc<BracketRule>,
}

impl BaseAlgebra {
    pub fn witt() -> Self {
        Self::from_rule("witt", witt::basis_bracket)
    }

    pub fn abelian() -> Self {
        Self::from_rule("abelian", |_, _| WittVector::zero())
    }

    /// An arbitrary rule; nothing is assumed about it until it is checked.
    pub fn from_rule<F>(name: &str, rule: F) -> Self
    where
        F: Fn(i64, i64) -> WittVector + Send + Sync + 'static,
    {
        BaseAlgebra {
            name: name.to_string(),
            rule: Arc::new(rule),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis_bracket(&self, m: i64, n: i64) -> WittVector {
        (self.rule)(m, n)
    }

    pub fn bracket(&self, x: &WittVector, y: &WittVector) -> WittVector {
        bilinear_extend(|m: &i64, n: &i64| (self.rule)(*m, *n), x, y)
    }
}

impl fmt::Debug for BaseAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseAlgebra({})", self.name)
    }
}

/// `(body, center)`, i.e. `X ⊕ A·C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    pub body: WittVector,
    pub center: Scalar,
}

impl ExtElement {
    pub fn new(body: WittVector, center: Scalar) -> Self {
        ExtElement { body, center }
    }

    pub fn zero() -> Self {
        Self::new(WittVector::zero(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero() && self.center.is_zero()
    }

    pub fn add(&self, other: &ExtElement) -> Self {
        Self::new(&self.body + &other.body, &self.center + &other.center)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.body.scale(s), s * &self.center)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊕ {}·C", Render(&self.body), self.center)
    }
}

/// The basis element `(l(n), 0)`, written `L(n)` or `J(n)` depending on the algebra.
pub fn generator(n: i64) -> ExtElement {
    std_section(&l(n))
}

/// The central element `(0, 1)`.
pub fn central() -> ExtElement {
    emb(Scalar::one())
}

pub fn emb(a: Scalar) -> ExtElement {
    ExtElement::new(WittVector::zero(), a)
}

pub fn proj(u: &ExtElement) -> WittVector {
    u.body.clone()
}

pub fn std_section(x: &WittVector) -> ExtElement {
    ExtElement::new(x.clone(), Scalar::zero())
}

/// `[(X, A), (Y, B)] = ([X, Y], ω(X, Y))`; the central parts do not enter.
pub fn ext_bracket(
    base: &BaseAlgebra,
    omega: &CocycleOracle,
    u: &ExtElement,
    v: &ExtElement,
) -> ExtElement {
    ExtElement::new(
        base.bracket(&u.body, &v.body),
        omega.eval_bilinear(&u.body, &v.body),
    )
}

/// `(X, A) ↦ (X, A − β(X))`, an isomorphism from the extension by `ω + ∂β`
/// onto the extension by `ω`.
pub fn twist_by_coboundary(beta: &OneCochain, u: &ExtElement) -> ExtElement {
    ExtElement::new(u.body.clone(), &u.center - beta.eval(&u.body))
}

/// `ω(J(k), J(l)) = k·δ(k+l, 0)`.
pub fn heisenberg_cocycle() -> CocycleOracle {
    CocycleOracle::from_rule("heisenberg", |k, l| {
        if k + l == 0 {
            Scalar::from_int(k)
        } else {
            Scalar::zero()
        }
    })
}

/// `(m³ − m)/12`, computed without going through the cocycle oracle.
fn virasoro_central_coefficient(m: i64) -> Scalar {
    let m = BigInt::from(m);
    Scalar::from_bigint(m.pow(3) - &m) / Scalar::from_int(12)
}

#[derive(Clone, Copy)]
enum StructureCase {
    Pair(i64, i64),
    Central(i64),
}

fn structure_cases(max_index: u64) -> Vec<StructureCase> {
    let r = symmetric_range(max_index);
    let mut cases: Vec<StructureCase> = r
        .clone()
        .flat_map(|m| r.clone().map(move |n| StructureCase::Pair(m, n)))
        .collect();
    cases.extend(r.map(StructureCase::Central));
    cases
}

fn central_case(base: &BaseAlgebra, omega: &CocycleOracle, n: i64) -> Option<Counterexample> {
    let left = ext_bracket(base, omega, &central(), &generator(n));
    let right = ext_bracket(base, omega, &generator(n), &central());
    let bad = if !left.is_zero() { left } else { right };
    (!bad.is_zero()).then(|| {
        Counterexample::new()
            .index("n", n)
            .input("[C, g(n)] and [g(n), C]")
            .expected(ExtElement::zero())
            .actual(bad)
    })
}

/// `[L(m), L(n)] = (m−n)L(m+n) + (m³−m)/12·δ(m+n,0)·C` and `[C, L(n)] = 0`
/// for `|m|, |n| <= max_index`.
pub fn check_virasoro_constants(max_index: u64) -> VerificationReport {
    let base = BaseAlgebra::witt();
    let omega = CocycleOracle::virasoro();
    let cases = structure_cases(max_index);
    Check::new("virasoro-constants")
        .param("max_index", max_index)
        .run(&cases, |case| match *case {
            StructureCase::Pair(m, n) => {
                let actual = ext_bracket(&base, &omega, &generator(m), &generator(n));
                let mut expected = generator(m + n).scale(&Scalar::from_int(m - n));
                if m + n == 0 {
                    expected = expected.add(&central().scale(&virasoro_central_coefficient(m)));
                }
                (actual != expected).then(|| {
                    Counterexample::new()
                        .index("m", m)
                        .index("n", n)
                        .input("[L(m), L(n)]")
                        .expected(&expected)
                        .actual(&actual)
                })
            }
            StructureCase::Central(n) => central_case(&base, &omega, n),
        })
}

/// `[J(k), J(l)] = k·δ(k+l,0)·K` and `[K, J(k)] = 0` for `|k|, |l| <= max_index`.
pub fn check_heisenberg_constants(max_index: u64) -> VerificationReport {
    let base = BaseAlgebra::abelian();
    let omega = heisenberg_cocycle();
    let cases = structure_cases(max_index);
    Check::new("heisenberg-constants")
        .param("max_index", max_index)
        .run(&cases, |case| match *case {
            StructureCase::Pair(k, l) => {
                let actual = ext_bracket(&base, &omega, &generator(k), &generator(l));
                let expected = if k + l == 0 {
                    central().scale(&Scalar::from_int(k))
                } else {
                    ExtElement::zero()
                };
                (actual != expected).then(|| {
                    Counterexample::new()
                        .index("k", k)
                        .index("l", l)
                        .input("[J(k), J(l)]")
                        .expected(&expected)
                        .actual(&actual)
                })
            }
            StructureCase::Central(n) => central_case(&base, &omega, n),
        })
}

#[derive(Clone, Copy)]
enum PredicateCase {
    Central(i64),
    Homomorphism(i64, i64),
    Exactness(i64),
}

/// Window checks that `0 → F → g ⊕ F → g → 0` is a central extension:
///
/// 1. `[emb(1), u] = 0 = [u, emb(1)]` for every basis element `u`;
/// 2. `proj([u, v]) = [proj u, proj v]` for basis elements with nonzero
///    central parts, and the base bracket is alternating on the pair, so that
///    `proj` is a homomorphism onto a Lie algebra;
/// 3. `proj ∘ emb = 0` and `proj ∘ std_section = id`.
pub fn check_extension_predicate(
    base: &BaseAlgebra,
    omega: &CocycleOracle,
    max_index: u64,
) -> VerificationReport {
    let r = symmetric_range(max_index);
    let mut cases: Vec<PredicateCase> = r.clone().map(PredicateCase::Central).collect();
    for m in r.clone() {
        for n in r.clone() {
            cases.push(PredicateCase::Homomorphism(m, n));
        }
    }
    cases.extend(r.map(PredicateCase::Exactness));

    Check::new("extension")
        .param("base", base.name())
        .param("cocycle", omega.label())
        .param("max_index", max_index)
        .run(&cases, |case| match *case {
            PredicateCase::Central(n) => central_case(base, omega, n),
            PredicateCase::Homomorphism(m, n) => {
                let u = ExtElement::new(l(m), Scalar::from_int(m + 1));
                let v = ExtElement::new(l(n), Scalar::ratio(-1, 2));
                let lhs = proj(&ext_bracket(base, omega, &u, &v));
                let rhs = base.bracket(&proj(&u), &proj(&v));
                let swapped = -base.bracket(&proj(&v), &proj(&u));
                let diagonal = base.basis_bracket(m, m);
                let cx = || {
                    Counterexample::new()
                        .index("m", m)
                        .index("n", n)
                        .input("proj([u, v]) against [proj u, proj v] = -[proj v, proj u]")
                };
                if lhs != rhs {
                    Some(cx().expected(Render(&rhs)).actual(Render(&lhs)))
                } else if rhs != swapped || !diagonal.is_zero() {
                    Some(cx().expected(Render(&rhs)).actual(Render(&swapped)))
                } else {
                    None
                }
            }
            PredicateCase::Exactness(n) => {
                let composite = proj(&emb(Scalar::one()));
                let round_trip = proj(&std_section(&l(n)));
                if !composite.is_zero() {
                    Some(
                        Counterexample::new()
                            .index("n", n)
                            .input("proj(emb(1))")
                            .expected("0")
                            .actual(Render(&composite)),
                    )
                } else if round_trip != l(n) {
                    Some(
                        Counterexample::new()
                            .index("n", n)
                            .input("proj(std_section(l(n)))")
                            .expected(Render(&l(n)))
                            .actual(Render(&round_trip)),
                    )
                } else {
                    None
                }
            }
        })
}
