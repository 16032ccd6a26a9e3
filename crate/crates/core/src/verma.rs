//! Virasoro Verma modules `V(c, h)` on their monomial basis, and the map
//! `V(1, α²/2) → F_α` sending the highest weight vector to the vacuum.
//!
//! A partition `(n_m, …, n_1)` stands for `L(−n_m)⋯L(−n_1)|c,h⟩`. The action of
//! `L(a)` on a monomial moves `L(a)` rightwards past the leading generator with
//! `[L(a), L(−p)] = (a + p)·L(a−p) + δ(a, p)·(a³ − a)/12·c` until it reaches the
//! highest weight vector, which is killed by `L(a)`, `a > 0`, and has `L(0)`
//! eigenvalue `h`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fock::{self, render_terms, FockVector, Terms};
use crate::partition::Partition;
use crate::report::{symmetric_range, Check, Counterexample, VerificationReport};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VermaVector {
    c: Scalar,
    h: Scalar,
    terms: Terms,
}

impl VermaVector {
    pub fn new(c: Scalar, h: Scalar, terms: Terms) -> Self {
        VermaVector { c, h, terms }
    }

    pub fn zero(c: Scalar, h: Scalar) -> Self {
        Self::new(c, h, Terms::zero())
    }

    /// The highest weight vector `|c,h⟩`.
    pub fn highest_weight(c: Scalar, h: Scalar) -> Self {
        Self::basis(c, h, Partition::empty())
    }

    pub fn basis(c: Scalar, h: Scalar, partition: Partition) -> Self {
        Self::new(c, h, Terms::basis(partition))
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn h(&self) -> &Scalar {
        &self.h
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

    fn same_module(&self, other: &VermaVector) -> Result<()> {
        if self.c == other.c && self.h == other.h {
            Ok(())
        } else {
            Err(Error::VermaParameterMismatch {
                left: Box::new((self.c.clone(), self.h.clone())),
                right: Box::new((other.c.clone(), other.h.clone())),
            })
        }
    }

    pub fn checked_add(&self, other: &VermaVector) -> Result<VermaVector> {
        self.same_module(other)?;
        Ok(self.with_terms(&self.terms + &other.terms))
    }

    pub fn checked_sub(&self, other: &VermaVector) -> Result<VermaVector> {
        self.same_module(other)?;
        Ok(self.with_terms(&self.terms - &other.terms))
    }

    pub fn scale(&self, s: &Scalar) -> VermaVector {
        self.with_terms(self.terms.scale(s))
    }

    fn with_terms(&self, terms: Terms) -> VermaVector {
        Self::new(self.c.clone(), self.h.clone(), terms)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, &self.terms, "L", &format!("|{},{}⟩", self.c, self.h))
    }
}

/// Evaluates `L(a)` on monomials, caching results per `(a, monomial)`.
struct Action<'a> {
    c: &'a Scalar,
    h: &'a Scalar,
    cache: HashMap<(i64, Partition), Terms>,
    depth: usize,
    max_depth: usize,
}

impl<'a> Action<'a> {
    fn new(c: &'a Scalar, h: &'a Scalar) -> Self {
        Action {
            c,
            h,
            cache: HashMap::new(),
            depth: 0,
            max_depth: 0,
        }
    }

    fn on_terms(&mut self, a: i64, terms: &Terms) -> Terms {
        let mut out = Terms::zero();
        for (p, coeff) in terms.iter() {
            let image = self.on_basis(a, p);
            out.add_scaled(coeff, &image);
        }
        out
    }

    fn on_basis(&mut self, a: i64, monomial: &Partition) -> Terms {
        if let Some(hit) = self.cache.get(&(a, monomial.clone())) {
            return hit.clone();
        }
        self.depth += 1;
        self.max_depth = self.max_depth.max(self.depth);
        let result = self.compute(a, monomial);
        self.depth -= 1;
        self.cache.insert((a, monomial.clone()), result.clone());
        result
    }

    fn compute(&mut self, a: i64, monomial: &Partition) -> Terms {
        let Some((p, rest)) = monomial.split_first() else {
            return match a {
                0 => Terms::term(self.h.clone(), Partition::empty()),
                a if a > 0 => Terms::zero(),
                a => Terms::basis(Partition::empty().prepended(a.unsigned_abs() as u32)),
            };
        };
        if a < 0 && a.unsigned_abs() >= u64::from(p) {
            return Terms::basis(monomial.prepended(a.unsigned_abs() as u32));
        }
        let p_int = i64::from(p);
        // L(a) L(-p) rest = L(-p) L(a) rest + (a + p) L(a - p) rest + δ(a, p) (a³ - a)/12 c rest
        let inner = self.on_basis(a, &rest);
        let mut out = self.on_terms(-p_int, &inner);
        if a + p_int != 0 {
            let shifted = self.on_basis(a - p_int, &rest);
            out.add_scaled(&Scalar::from_int(a + p_int), &shifted);
        }
        if a == p_int {
            let central = fock::central_coefficient(a) * self.c;
            out.add_term(rest, central);
        }
        out
    }
}

/// `L(a)` acting on `V(c, h)`.
pub fn verma_l_action(a: i64, v: &VermaVector) -> VermaVector {
    verma_l_action_traced(a, v).0
}

/// [`verma_l_action`] together with the deepest nesting of the reordering
/// recursion that was reached.
pub fn verma_l_action_traced(a: i64, v: &VermaVector) -> (VermaVector, usize) {
    let mut action = Action::new(&v.c, &v.h);
    let terms = action.on_terms(a, &v.terms);
    (v.with_terms(terms), action.max_depth)
}

/// The central element, acting as `c`.
pub fn verma_c_action(v: &VermaVector) -> VermaVector {
    v.scale(&v.c)
}

fn verma_counterexample(c: &Scalar, h: &Scalar, p: &Partition) -> Counterexample {
    Counterexample::new().input(VermaVector::basis(c.clone(), h.clone(), p.clone()))
}

/// `L(n)L(m) − L(m)L(n) = (n − m)L(n+m) + δ(n+m, 0)·(n³ − n)/12·c` on basis
/// vectors of level at most `max_level`.
pub fn check_verma_relations(
    max_index: u64,
    max_level: u64,
    c: &Scalar,
    h: &Scalar,
) -> VerificationReport {
    let mut cases = Vec::new();
    for p in Partition::up_to_level(max_level) {
        for n in symmetric_range(max_index) {
            cases.push((n, p.clone()));
        }
    }
    // One case per (n, monomial) so that a single cache serves every m.
    let count = cases.len() as u64 * (2 * max_index + 1);
    let check = Check::new("verma")
        .param("c", c)
        .param("h", h)
        .param("max_index", max_index)
        .param("max_level", max_level);
    let report = check.clone().run(&cases, |(n, p)| {
        let n = *n;
        let mut action = Action::new(c, h);
        let v = Terms::basis(p.clone());
        symmetric_range(max_index).find_map(|m| {
            let lm = action.on_terms(m, &v);
            let ln = action.on_terms(n, &v);
            let actual = &action.on_terms(n, &lm) - &action.on_terms(m, &ln);
            let mut expected = action.on_terms(n + m, &v).scale(&Scalar::from_int(n - m));
            if n + m == 0 {
                expected.add_scaled(&(fock::central_coefficient(n) * c), &v);
            }
            (expected != actual).then(|| {
                verma_counterexample(c, h, p)
                    .index("n", n)
                    .index("m", m)
                    .expected(VermaVector::new(c.clone(), h.clone(), expected))
                    .actual(VermaVector::new(c.clone(), h.clone(), actual))
            })
        })
    });
    check.finish(count, report.counterexample)
}

/// `L(0)` has eigenvalue `h + level` on every basis vector of level at most `max_level`.
pub fn check_verma_grading(max_level: u64, c: &Scalar, h: &Scalar) -> VerificationReport {
    let cases = Partition::up_to_level(max_level);
    Check::new("verma-grading")
        .param("c", c)
        .param("h", h)
        .param("max_level", max_level)
        .run(&cases, |p| {
            let v = VermaVector::basis(c.clone(), h.clone(), p.clone());
            let expected = v.scale(&(h + Scalar::from_int(p.level() as i64)));
            let actual = verma_l_action(0, &v);
            (expected != actual).then(|| {
                verma_counterexample(c, h, p)
                    .expected(expected)
                    .actual(actual)
            })
        })
}

/// Largest generator index checked by [`verma_hw_check`].
pub const HW_CHECK_MAX: i64 = 10;

/// `L(0)|c,h⟩ = h|c,h⟩`, `C|c,h⟩ = c|c,h⟩` and `L(n)|c,h⟩ = 0` for `1 <= n <= 10`.
pub fn verma_hw_check(c: &Scalar, h: &Scalar) -> VerificationReport {
    #[derive(Clone, Copy)]
    enum Case {
        Central,
        L(i64),
    }
    let mut cases = vec![Case::L(0), Case::Central];
    cases.extend((1..=HW_CHECK_MAX).map(Case::L));
    let hw = VermaVector::highest_weight(c.clone(), h.clone());
    Check::new("verma-hw")
        .param("c", c)
        .param("h", h)
        .run(&cases, |case| {
            let (label, expected, actual) = match *case {
                Case::Central => ("C", hw.scale(c), verma_c_action(&hw)),
                Case::L(0) => ("L(0)", hw.scale(h), verma_l_action(0, &hw)),
                Case::L(n) => (
                    "L(n)",
                    VermaVector::zero(c.clone(), h.clone()),
                    verma_l_action(n, &hw),
                ),
            };
            (expected != actual).then(|| {
                let cx = Counterexample::new()
                    .input(format!("{label} on {hw}"))
                    .expected(expected)
                    .actual(actual);
                match *case {
                    Case::L(n) => cx.index("n", n),
                    Case::Central => cx,
                }
            })
        })
}

/// `α²/2`, the conformal weight of the vacuum of `F_α`.
pub fn vacuum_weight(alpha: &Scalar) -> Scalar {
    alpha * alpha * Scalar::ratio(1, 2)
}

/// Images of monomials under the universal map, cached across calls.
struct Universal<'a> {
    alpha: &'a Scalar,
    cache: HashMap<Partition, Terms>,
}

impl<'a> Universal<'a> {
    fn new(alpha: &'a Scalar) -> Self {
        Universal {
            alpha,
            cache: HashMap::new(),
        }
    }

    fn on_basis(&mut self, monomial: &Partition) -> Terms {
        if let Some(hit) = self.cache.get(monomial) {
            return hit.clone();
        }
        let image = match monomial.split_first() {
            None => Terms::basis(Partition::empty()),
            Some((p, rest)) => {
                let inner = FockVector::new(self.alpha.clone(), self.on_basis(&rest));
                fock::sugawara_l(-i64::from(p), &inner).terms().clone()
            }
        };
        self.cache.insert(monomial.clone(), image.clone());
        image
    }

    fn on_terms(&mut self, terms: &Terms) -> Terms {
        let mut out = Terms::zero();
        for (p, coeff) in terms.iter() {
            let image = self.on_basis(p);
            out.add_scaled(coeff, &image);
        }
        out
    }
}

fn check_universal_precondition(alpha: &Scalar, c: &Scalar, h: &Scalar) -> Result<()> {
    let expected_h = vacuum_weight(alpha);
    if c.is_one() && *h == expected_h {
        Ok(())
    } else {
        Err(Error::UniversalMapPrecondition {
            alpha: Box::new(alpha.clone()),
            expected_h: Box::new(expected_h),
            c: Box::new(c.clone()),
            h: Box::new(h.clone()),
        })
    }
}

/// The module map `V(1, α²/2) → F_α` with `|1,α²/2⟩ ↦ |α⟩`: the monomial
/// `L(−n_m)⋯L(−n_1)` goes to the same word in the Sugawara operators applied
/// to the vacuum. Fails unless `c = 1` and `h = α²/2`.
pub fn universal_map(alpha: &Scalar, v: &VermaVector) -> Result<FockVector> {
    check_universal_precondition(alpha, &v.c, &v.h)?;
    let terms = Universal::new(alpha).on_terms(&v.terms);
    Ok(FockVector::new(alpha.clone(), terms))
}

/// `u(L(a) x) = L(a) u(x)` for the universal map `u`, every `|a| <= max_index`
/// and every basis vector `x` of level at most `max_level`.
pub fn check_intertwining(alpha: &Scalar, max_index: u64, max_level: u64) -> VerificationReport {
    let c = Scalar::one();
    let h = vacuum_weight(alpha);
    let mut cases = Vec::new();
    for p in Partition::up_to_level(max_level) {
        for a in symmetric_range(max_index) {
            cases.push((a, p.clone()));
        }
    }
    // Images of monomials are shared by every case; compute them up front.
    let mut universal = Universal::new(alpha);
    for p in Partition::up_to_level(max_level + max_index) {
        universal.on_basis(&p);
    }
    let images = universal.cache;
    let image_of = |terms: &Terms| -> Terms {
        let mut out = Terms::zero();
        for (p, coeff) in terms.iter() {
            out.add_scaled(coeff, &images[p]);
        }
        out
    };
    Check::new("intertwine")
        .param("alpha", alpha)
        .param("max_index", max_index)
        .param("max_level", max_level)
        .run(&cases, |(a, p)| {
            let x = VermaVector::basis(c.clone(), h.clone(), p.clone());
            let lhs = image_of(verma_l_action(*a, &x).terms());
            let rhs = fock::sugawara_l(*a, &FockVector::new(alpha.clone(), image_of(x.terms())));
            let lhs = FockVector::new(alpha.clone(), lhs);
            (lhs != rhs).then(|| {
                Counterexample::new()
                    .index("a", *a)
                    .input(&x)
                    .expected(rhs)
                    .actual(lhs)
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::ratio(p, d)
    }

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn basis(c: &Scalar, h: &Scalar, parts: &[i64]) -> VermaVector {
        VermaVector::basis(c.clone(), h.clone(), part(parts))
    }

    #[test]
    fn action_examples() {
        let (c, h) = (q(1, 2), q(1, 16));
        let hw = VermaVector::highest_weight(c.clone(), h.clone());
        assert_eq!(
            verma_l_action(1, &basis(&c, &h, &[1])),
            hw.scale(&(&h * q(2, 1)))
        );
        assert_eq!(
            verma_l_action(2, &basis(&c, &h, &[2])),
            hw.scale(&(&h * q(4, 1) + &c * q(1, 2)))
        );
        assert_eq!(
            verma_l_action(-2, &basis(&c, &h, &[1])),
            basis(&c, &h, &[2, 1])
        );
        assert_eq!(verma_l_action(-1, &hw), basis(&c, &h, &[1]));
        assert!(verma_l_action(3, &hw).is_zero());
    }

    #[test]
    fn reordering_of_small_negative_index() {
        // L(-1)L(-3)v = L(-3)L(-1)v + 2 L(-4)v.
        let (c, h) = (q(1, 1), q(0, 1));
        let expected = basis(&c, &h, &[3, 1])
            .checked_add(&basis(&c, &h, &[4]).scale(&q(2, 1)))
            .unwrap();
        assert_eq!(verma_l_action(-1, &basis(&c, &h, &[3])), expected);
    }

    #[test]
    fn central_action() {
        let v = basis(&q(-22, 5), &q(-1, 5), &[2, 1]);
        assert_eq!(verma_c_action(&v), v.scale(&q(-22, 5)));
        assert!(verma_c_action(&basis(&q(0, 1), &q(1, 1), &[])).is_zero());
    }

    #[test]
    fn parameter_mismatch() {
        let v = basis(&q(1, 1), &q(0, 1), &[1]);
        let w = basis(&q(1, 1), &q(1, 2), &[1]);
        assert!(matches!(
            v.checked_add(&w),
            Err(Error::VermaParameterMismatch { .. })
        ));
    }

    #[test]
    fn render() {
        let v = basis(&q(1, 2), &q(1, 16), &[2, 1]).scale(&q(-3, 4));
        assert_eq!(v.to_string(), "-3/4·L(-2)L(-1)|1/2,1/16⟩");
    }

    #[test]
    fn universal_map_examples() {
        let a = q(1, 2);
        let (c, h) = (Scalar::one(), vacuum_weight(&a));
        let hw = VermaVector::highest_weight(c.clone(), h.clone());
        assert_eq!(
            universal_map(&a, &hw).unwrap(),
            FockVector::vacuum(a.clone())
        );
        assert_eq!(
            universal_map(&a, &basis(&c, &h, &[1])).unwrap(),
            FockVector::basis(a.clone(), part(&[1])).scale(&a)
        );
        assert!(universal_map(&a, &VermaVector::zero(c, h))
            .unwrap()
            .is_zero());
        let wrong = VermaVector::highest_weight(Scalar::one(), q(1, 2));
        assert!(matches!(
            universal_map(&a, &wrong),
            Err(Error::UniversalMapPrecondition { .. })
        ));
    }

    #[test]
    fn small_sweeps() {
        let (c, h) = (q(1, 2), q(1, 16));
        assert!(check_verma_relations(3, 4, &c, &h).passed());
        assert!(check_verma_grading(5, &c, &h).passed());
        assert!(verma_hw_check(&c, &h).passed());
        assert!(check_intertwining(&q(1, 2), 3, 4).passed());
    }
}
