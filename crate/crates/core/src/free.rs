//! Finitely supported vectors over a basis index type.
//!
//! [`FreeVector`] is the common currency of the crate: Lie algebra elements,
//! module vectors and scalar-valued bilinear forms (with basis `()`) are all
//! free vectors. Zero coefficients are never stored and the support iterates
//! in the order of the basis index, which gives stable output.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeVector<B: Ord> {
    coeffs: BTreeMap<B, Scalar>,
}

impl<B: Ord> Default for FreeVector<B> {
    fn default() -> Self {
        FreeVector {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<B: Ord + std::fmt::Debug> std::fmt::Debug for FreeVector<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

impl<B: Ord + Clone> FreeVector<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `b`.
    pub fn basis(b: B) -> Self {
        Self::term(Scalar::one(), b)
    }

    /// `c · b`.
    pub fn term(c: Scalar, b: B) -> Self {
        let mut v = Self::zero();
        v.add_term(b, c);
        v
    }

    /// Sums the given terms; repeated indices accumulate.
    pub fn from_terms<I: IntoIterator<Item = (B, Scalar)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (b, c) in terms {
            v.add_term(b, c);
        }
        v
    }

    /// Adds `c · b` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `s · v` in place.
    pub fn add_scaled(&mut self, s: &Scalar, v: &FreeVector<B>) {
        if s.is_zero() {
            return;
        }
        for (b, c) in &v.coeffs {
            self.add_term(b.clone(), s * c);
        }
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.coeffs.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of basis vectors with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> + '_ {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> + '_ {
        self.coeffs.keys()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        FreeVector {
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| (b.clone(), s * c))
                .collect(),
        }
    }

    /// Relabels the basis through `f`, summing coefficients that collide.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> FreeVector<C> {
        FreeVector::from_terms(self.coeffs.iter().map(|(b, c)| (f(b), c.clone())))
    }
}

impl FreeVector<()> {
    /// A scalar viewed as an element of the one-dimensional free module.
    pub fn scalar(s: Scalar) -> Self {
        Self::term(s, ())
    }

    pub fn value(&self) -> Scalar {
        self.coeff(&())
    }
}

impl<B: Ord> IntoIterator for FreeVector<B> {
    type Item = (B, Scalar);
    type IntoIter = btree_map::IntoIter<B, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.coeffs.into_iter()
    }
}

impl<B: Ord + Clone> Add<&FreeVector<B>> for &FreeVector<B> {
    type Output = FreeVector<B>;
    fn add(self, rhs: &FreeVector<B>) -> FreeVector<B> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Add for FreeVector<B> {
    type Output = FreeVector<B>;
    fn add(mut self, rhs: FreeVector<B>) -> FreeVector<B> {
        for (b, c) in rhs.coeffs {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Ord + Clone> Sub<&FreeVector<B>> for &FreeVector<B> {
    type Output = FreeVector<B>;
    fn sub(self, rhs: &FreeVector<B>) -> FreeVector<B> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for FreeVector<B> {
    type Output = FreeVector<B>;
    fn sub(mut self, rhs: FreeVector<B>) -> FreeVector<B> {
        for (b, c) in rhs.coeffs {
            self.add_term(b, -c);
        }
        self
    }
}

impl<B: Ord + Clone> Neg for FreeVector<B> {
    type Output = FreeVector<B>;
    fn neg(self) -> FreeVector<B> {
        FreeVector {
            coeffs: self.coeffs.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for &FreeVector<B> {
    type Output = FreeVector<B>;
    fn neg(self) -> FreeVector<B> {
        self.clone().neg()
    }
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for FreeVector<B> {
    fn from_iter<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Extends a map defined on basis vectors linearly: `Σ cᵢ·bᵢ ↦ Σ cᵢ·f(bᵢ)`.
pub fn linear_extend<B, C, F>(basis_op: F, v: &FreeVector<B>) -> FreeVector<C>
where
    B: Ord + Clone,
    C: Ord + Clone,
    F: Fn(&B) -> FreeVector<C>,
{
    let mut out = FreeVector::zero();
    for (b, c) in v.iter() {
        out.add_scaled(c, &basis_op(b));
    }
    out
}

/// Extends a map defined on pairs of basis vectors bilinearly.
pub fn bilinear_extend<B, C, F>(basis_op: F, x: &FreeVector<B>, y: &FreeVector<B>) -> FreeVector<C>
where
    B: Ord + Clone,
    C: Ord + Clone,
    F: Fn(&B, &B) -> FreeVector<C>,
{
    let mut out = FreeVector::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&(ca * cb), &basis_op(a, b));
        }
    }
    out
}

/// `μ(x, ν(y, z)) + μ(y, ν(z, x)) + μ(z, ν(x, y))` for basis-pair rules `μ`, `ν`
/// extended bilinearly.
///
/// With `μ = ν` a bracket this is the Jacobi expression; with `μ` a
/// scalar-valued form (target basis `()`) and `ν` the bracket it is the
/// cocycle expression.
pub fn cyclic_triple_sum<B, C, Mu, Nu>(
    mu: Mu,
    nu: Nu,
    x: &FreeVector<B>,
    y: &FreeVector<B>,
    z: &FreeVector<B>,
) -> FreeVector<C>
where
    B: Ord + Clone,
    C: Ord + Clone,
    Mu: Fn(&B, &B) -> FreeVector<C>,
    Nu: Fn(&B, &B) -> FreeVector<B>,
{
    let term = |a: &FreeVector<B>, b: &FreeVector<B>, c: &FreeVector<B>| {
        bilinear_extend(&mu, a, &bilinear_extend(&nu, b, c))
    };
    term(x, y, z) + term(y, z, x) + term(z, x, y)
}

/// Writes `c₁<sep>b₁ + c₂<sep>b₂ - ...`, or `0` for an empty sum.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Scalar, String)>,
    sep: &str,
) -> fmt::Result {
    let mut first = true;
    for (c, basis) in terms {
        if first {
            write!(f, "{c}{sep}{basis}")?;
            first = false;
        } else if c.numer().sign() == num_bigint::Sign::Minus {
            write!(f, " - {}{sep}{basis}", -c)?;
        } else {
            write!(f, " + {c}{sep}{basis}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
