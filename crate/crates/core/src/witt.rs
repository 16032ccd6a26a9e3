//! The Witt algebra with basis `l(n)`, `n ∈ ℤ`, and `[l(m), l(n)] = (m − n)·l(m+n)`.

use std::fmt;

use crate::free::{bilinear_extend, cyclic_triple_sum, write_terms, FreeVector};
use crate::report::{symmetric_range, Check, Counterexample, VerificationReport};
use crate::scalar::Scalar;

/// Coefficient of `l(n)` stored at index `n`.
pub type WittVector = FreeVector<i64>;

/// The basis vector `l(n)`.
pub fn l(n: i64) -> WittVector {
    WittVector::basis(n)
}

/// The coefficient `m − n` in `[l(m), l(n)] = (m − n)·l(m+n)`.
pub fn structure_constant(m: i64, n: i64) -> i64 {
    m - n
}

/// `[l(m), l(n)]` on a pair of basis indices.
pub fn basis_bracket(m: i64, n: i64) -> WittVector {
    WittVector::term(Scalar::from_int(structure_constant(m, n)), m + n)
}

pub fn bracket(x: &WittVector, y: &WittVector) -> WittVector {
    bilinear_extend(|m: &i64, n: &i64| basis_bracket(*m, *n), x, y)
}

/// `[x, [y, z]] + [y, [z, x]] + [z, [x, y]]`.
pub fn jacobiator(x: &WittVector, y: &WittVector, z: &WittVector) -> WittVector {
    let rule = |m: &i64, n: &i64| basis_bracket(*m, *n);
    cyclic_triple_sum(rule, rule, x, y, z)
}

pub fn check_jacobi(x: &WittVector, y: &WittVector, z: &WittVector) -> bool {
    jacobiator(x, y, z).is_zero()
}

/// Exhaustive sweep over basis triples and pairs with indices in `[-N, N]`:
/// Jacobi on every triple, then alternation `[l(m), l(n)] = −[l(n), l(m)]`
/// and `[l(n), l(n)] = 0` on every pair.
pub fn check_witt_axioms(max_index: u64) -> VerificationReport {
    #[derive(Clone, Copy)]
    enum Case {
        Jacobi(i64, i64, i64),
        Alternating(i64, i64),
    }
    let r = symmetric_range(max_index);
    let mut cases: Vec<Case> = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                cases.push(Case::Jacobi(a, b, c));
            }
        }
    }
    for a in r.clone() {
        for b in r.clone() {
            cases.push(Case::Alternating(a, b));
        }
    }
    Check::new("witt-jacobi")
        .param("max_index", max_index)
        .run(&cases, |case| match *case {
            Case::Jacobi(a, b, c) => {
                let j = jacobiator(&l(a), &l(b), &l(c));
                (!j.is_zero()).then(|| {
                    Counterexample::new()
                        .index("x", a)
                        .index("y", b)
                        .index("z", c)
                        .input("jacobiator")
                        .expected("0")
                        .actual(Render(&j))
                })
            }
            Case::Alternating(a, b) => {
                let s = &basis_bracket(a, b) + &basis_bracket(b, a);
                let diag = basis_bracket(a, a);
                (!s.is_zero() || !diag.is_zero()).then(|| {
                    Counterexample::new()
                        .index("m", a)
                        .index("n", b)
                        .input("[l(m), l(n)] + [l(n), l(m)]")
                        .expected("0")
                        .actual(Render(&s))
                })
            }
        })
}

/// Renders a Witt vector as `c*l(n) + ...` in increasing index order.
pub struct Render<'a>(pub &'a WittVector);

impl fmt::Display for Render<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0.iter().map(|(n, c)| (c, format!("l({n})"))), "*")
    }
}
