use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::Rational;

/// Tri-degree `(a, q, t)`: Hochschild, quantum and homological grading.
pub type TriDegree = (i32, i32, i32);

/// Commuting variable kinds.
///
/// `X(tier)` are the polynomial-ring variables: tier 0 is the left action,
/// tier 1 the right action (`x'`), higher tiers appear in iterated tensor
/// factors. `U` are the even tautological generators, `Y` the deformation
/// variables. `Aux` variables carry no intrinsic degree and are used for
/// integration parameters and symmetric-function symbols.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    X(u8),
    U,
    Y,
    Aux,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    pub kind: VarKind,
    pub index: u16,
}

impl Variable {
    pub fn x(i: usize) -> Self {
        Variable { kind: VarKind::X(0), index: i as u16 }
    }

    /// Right variable `x'_i`.
    pub fn xp(i: usize) -> Self {
        Variable { kind: VarKind::X(1), index: i as u16 }
    }

    pub fn x_tier(tier: u8, i: usize) -> Self {
        Variable { kind: VarKind::X(tier), index: i as u16 }
    }

    pub fn u(k: usize) -> Self {
        Variable { kind: VarKind::U, index: k as u16 }
    }

    pub fn y(i: usize) -> Self {
        Variable { kind: VarKind::Y, index: i as u16 }
    }

    pub fn aux(i: usize) -> Self {
        Variable { kind: VarKind::Aux, index: i as u16 }
    }

    pub fn degree(&self) -> TriDegree {
        match self.kind {
            VarKind::X(_) => (0, 2, 0),
            VarKind::U => (0, 2 * self.index as i32, 2),
            VarKind::Y => (0, -2, -2),
            VarKind::Aux => (0, 0, 0),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X(tier) => {
                write!(f, "x{}", self.index)?;
                for _ in 0..tier {
                    write!(f, "'")?;
                }
                Ok(())
            }
            VarKind::U => write!(f, "u{}", self.index),
            VarKind::Y => write!(f, "y{}", self.index),
            VarKind::Aux => write!(f, "t{}", self.index),
        }
    }
}

/// A monomial: sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub SmallVec<[(Variable, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(smallvec::smallvec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(Variable, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut out: SmallVec<[(Variable, u32); 4]> = SmallVec::new();
        for (v, e) in pairs {
            if let Some(last) = out.last_mut() {
                if last.0 == v {
                    last.1 += e;
                    continue;
                }
            }
            out.push((v, e));
        }
        Monomial(out)
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree(&self) -> TriDegree {
        let mut d = (0, 0, 0);
        for &(v, e) in &self.0 {
            let (a, q, t) = v.degree();
            d.0 += a * e as i32;
            d.1 += q * e as i32;
            d.2 += t * e as i32;
        }
        d
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Variable, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let pick_left = match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) => {
                    if a.0 == b.0 {
                        out.push((a.0, a.1 + b.1));
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a.0 < b.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if pick_left {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        Monomial(out)
    }

    pub fn exponent_of(&self, v: Variable) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    /// Remove `v` entirely, returning the remaining monomial and the exponent.
    pub fn split_off(&self, v: Variable) -> (Monomial, u32) {
        let mut out = self.clone();
        let mut e = 0;
        out.0.retain(|&mut (w, ex)| {
            if w == v {
                e = ex;
                false
            } else {
                true
            }
        });
        (out, e)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic order: total exponent first, then the sorted
/// variable/exponent list. Fixed globally for canonical serialization.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_exponent()
            .cmp(&other.total_exponent())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// No zero coefficients are stored; the monomial order is fixed, so equality
/// and serialization are canonical.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::from_term(Monomial::var(v), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The polynomial as a rational scalar, if it is constant.
    pub fn as_scalar(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Tri-degree if homogeneous (zero polynomial reports `Some((0,0,0))`).
    pub fn homogeneous_degree(&self) -> Option<TriDegree> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some((0, 0, 0)),
            Some(m) => m.degree(),
        };
        for m in it {
            if m.degree() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, map: &dyn Fn(Variable) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for &(v, e) in &m.0 {
                match map(v) {
                    Some(p) => term = &term * &p.pow(e),
                    None => term = &term * &Polynomial::var(v).pow(e),
                }
            }
            out += term;
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_of(v);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.split_off(v);
            let m2 = if e > 1 {
                rest.mul(&Monomial::from_pairs(vec![(v, e - 1)]))
            } else {
                rest
            };
            out.add_term(m2, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Exact definite integral over `v` from 0 to 1.
    pub fn integrate_unit(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            out.add_term(rest, c / Rational::from_integer((e + 1).into()));
        }
        out
    }

    /// Coefficients as a univariate polynomial in `v`: index = exponent.
    pub fn coefficients_in(&self, v: Variable) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, Polynomial::zero());
            }
            out[e].add_term(rest, c.clone());
        }
        out
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = Vec::new();
        for m in self.terms.keys() {
            for &(v, _) in &m.0 {
                vs.push(v);
            }
        }
        vs.sort();
        vs.dedup();
        vs
    }

    /// Canonical text form: sorted monomials, explicit `+` and `*`, rational
    /// coefficients as `p/q`.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut s = format_rational(c);
            for &(v, e) in &m.0 {
                s.push('*');
                s.push_str(&v.to_string());
                if e > 1 {
                    s.push_str(&format!("^{}", e));
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

pub(crate) fn format_rational(c: &Rational) -> String {
    if c.denom() == &num_bigint::BigInt::from(1) {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        &self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn x(i: usize) -> Polynomial {
        Polynomial::var(Variable::x(i))
    }

    #[test]
    fn arithmetic_basics() {
        let p = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        let q = &x(1).pow(2) - &x(2).pow(2);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(Polynomial::constant(rat(3, 2)).as_scalar(), Some(rat(3, 2)));
        assert_eq!(x(1).as_scalar(), None);
        assert_eq!(Polynomial::zero().as_scalar(), Some(int(0)));
    }

    #[test]
    fn derivative_and_integral() {
        let t = Variable::aux(0);
        // d/dt (t^2 x1) = 2 t x1, integral over [0,1] of t^2 x1 = x1/3
        let p = &Polynomial::var(t).pow(2) * &x(1);
        let d = p.derivative(t);
        let expected = (&Polynomial::var(t) * &x(1)).scale(&int(2));
        assert_eq!(d, expected);
        assert_eq!(p.integrate_unit(t), x(1).scale(&rat(1, 3)));
    }

    #[test]
    fn substitution() {
        // x1 -> x1 + x2 in x1^2
        let p = x(1).pow(2);
        let s = p.substitute(&|v| {
            (v == Variable::x(1)).then(|| &x(1) + &x(2))
        });
        let expected = &(&x(1).pow(2) + &(&x(1) * &x(2)).scale(&int(2))) + &x(2).pow(2);
        assert_eq!(s, expected);
    }

    #[test]
    fn canonical_text_is_sorted_and_exact() {
        let p = &(&x(2) * &Polynomial::constant(rat(-1, 2))) + &x(1).pow(2);
        assert_eq!(p.canonical_text(), "-1/2*x2 + 1*x1^2");
    }

    #[test]
    fn homogeneous_degrees() {
        let p = &x(1) * &Polynomial::var(Variable::xp(2));
        assert_eq!(p.homogeneous_degree(), Some((0, 4, 0)));
        let q = &x(1) + &Polynomial::var(Variable::y(1));
        assert_eq!(q.homogeneous_degree(), None);
        let u = Polynomial::var(Variable::u(3));
        assert_eq!(u.homogeneous_degree(), Some((0, 6, 2)));
    }
}
