use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::ring::{Polynomial, Rational, TriDegree, Variable};

/// Anticommuting generator kinds: the odd tautological generators, Koszul
/// slot generators, Hochschild exterior generators and the odd deformation
/// directions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OddKind {
    Xi,
    Eta,
    Theta,
    Nu,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OddGen {
    pub kind: OddKind,
    /// tensor factor, 1-based; 0 for single-factor contexts
    pub factor: u8,
    pub index: u16,
}

impl OddGen {
    pub fn xi(factor: u8, index: usize) -> Self {
        OddGen { kind: OddKind::Xi, factor, index: index as u16 }
    }

    pub fn eta(index: usize) -> Self {
        OddGen { kind: OddKind::Eta, factor: 0, index: index as u16 }
    }

    pub fn theta(index: usize) -> Self {
        OddGen { kind: OddKind::Theta, factor: 0, index: index as u16 }
    }

    pub fn nu(index: usize) -> Self {
        OddGen { kind: OddKind::Nu, factor: 0, index: index as u16 }
    }

    pub fn degree(&self) -> TriDegree {
        match self.kind {
            OddKind::Xi | OddKind::Eta => (0, 2, 1),
            OddKind::Theta => (2, -2, 1),
            OddKind::Nu => (0, 2 * self.index as i32, -3),
        }
    }
}

impl fmt::Display for OddGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OddKind::Xi => "xi",
            OddKind::Eta => "eta",
            OddKind::Theta => "th",
            OddKind::Nu => "nu",
        };
        if self.factor > 0 {
            write!(f, "{}{}^({})", name, self.index, self.factor)
        } else {
            write!(f, "{}{}", name, self.index)
        }
    }
}

/// Strictly increasing product of odd generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExtMonomial(pub SmallVec<[OddGen; 4]>);

impl ExtMonomial {
    pub fn one() -> Self {
        ExtMonomial(SmallVec::new())
    }

    pub fn gen(g: OddGen) -> Self {
        ExtMonomial(smallvec::smallvec![g])
    }

    pub fn degree(&self) -> TriDegree {
        let mut d = (0, 0, 0);
        for g in &self.0 {
            let (a, q, t) = g.degree();
            d.0 += a;
            d.1 += q;
            d.2 += t;
        }
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Merge two sorted square-free monomials; returns None if a generator
    /// repeats, otherwise the merged monomial and the Koszul sign.
    pub fn merge(&self, other: &ExtMonomial) -> Option<(ExtMonomial, i32)> {
        let mut out: SmallVec<[OddGen; 4]> = SmallVec::new();
        let (mut i, mut j) = (0usize, 0usize);
        let mut sign = 1i32;
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&a), Some(&b)) => {
                    if a == b {
                        return None;
                    }
                    if a < b {
                        out.push(a);
                        i += 1;
                    } else {
                        // b moves past the remaining elements of self
                        if (self.0.len() - i) % 2 == 1 {
                            sign = -sign;
                        }
                        out.push(b);
                        j += 1;
                    }
                }
                (Some(&a), None) => {
                    out.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (None, None) => break,
            }
        }
        Some((ExtMonomial(out), sign))
    }

    /// Remove the generator at position `pos`; sign is `(-1)^pos`.
    pub fn remove_at(&self, pos: usize) -> (ExtMonomial, i32) {
        let mut v = self.0.clone();
        v.remove(pos);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        (ExtMonomial(v), sign)
    }
}

/// Element of a free graded-commutative superalgebra: sum of terms
/// (polynomial coefficient) x (square-free odd monomial).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SuperPolynomial {
    pub terms: BTreeMap<ExtMonomial, Polynomial>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SuperPolynomial::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(ExtMonomial::one(), p);
        }
        SuperPolynomial { terms }
    }

    pub fn var(v: Variable) -> Self {
        SuperPolynomial::from_poly(Polynomial::var(v))
    }

    pub fn odd(g: OddGen) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExtMonomial::gen(g), Polynomial::one());
        SuperPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: ExtMonomial, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(p);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(m.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(m.clone(), -p);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SuperPolynomial {
        if num_traits::Zero::is_zero(c) {
            return SuperPolynomial::zero();
        }
        SuperPolynomial {
            terms: self.terms.iter().map(|(m, p)| (m.clone(), p.scale(c))).collect(),
        }
    }

    pub fn mul(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &other.terms {
                if let Some((m, sign)) = m1.merge(m2) {
                    let mut p = p1 * p2;
                    if sign < 0 {
                        p = -&p;
                    }
                    out.add_term(m, p);
                }
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &Polynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, q) in &self.terms {
            out.add_term(m.clone(), q * p);
        }
        out
    }

    /// Tri-degree if homogeneous; zero reports `Some((0,0,0))`.
    pub fn homogeneous_degree(&self) -> Option<TriDegree> {
        let mut result: Option<TriDegree> = None;
        for (m, p) in &self.terms {
            let (ma, mq, mt) = m.degree();
            let pd = p.homogeneous_degree()?;
            let d = (ma + pd.0, mq + pd.1, mt + pd.2);
            match result {
                None => result = Some(d),
                Some(r) if r == d => {}
                _ => return None,
            }
        }
        Some(result.unwrap_or((0, 0, 0)))
    }

    /// Apply an algebra homomorphism given by images of the even variables
    /// and the odd generators (extended multiplicatively with Koszul signs).
    pub fn substitute(
        &self,
        even: &dyn Fn(Variable) -> Option<Polynomial>,
        odd: &dyn Fn(OddGen) -> SuperPolynomial,
    ) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, p) in &self.terms {
            let coeff = p.substitute(even);
            let mut term = SuperPolynomial::from_poly(coeff);
            for &g in &m.0 {
                term = term.mul(&odd(g));
            }
            out = out.add(&term);
        }
        out
    }

    /// Apply an algebra homomorphism where even variables may map to even
    /// super-elements (e.g. the coproduct images of the `u` generators).
    pub fn apply_hom(
        &self,
        even: &dyn Fn(Variable) -> Option<SuperPolynomial>,
        odd: &dyn Fn(OddGen) -> SuperPolynomial,
    ) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m, p) in &self.terms {
            for (mono, c) in p.terms() {
                let mut term = SuperPolynomial::from_poly(Polynomial::constant(c.clone()));
                for &(v, e) in &mono.0 {
                    let img = match even(v) {
                        Some(s) => s,
                        None => SuperPolynomial::var(v),
                    };
                    for _ in 0..e {
                        term = term.mul(&img);
                    }
                }
                for &g in &m.0 {
                    term = term.mul(&odd(g));
                }
                out = out.add(&term);
            }
        }
        out
    }

    /// All odd generators appearing.
    pub fn odd_gens(&self) -> Vec<OddGen> {
        let mut v: Vec<OddGen> = self.terms.keys().flat_map(|m| m.0.iter().copied()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, p) in &self.terms {
            let coeff = if p.num_terms() > 1 {
                format!("({})", p.canonical_text())
            } else {
                p.canonical_text()
            };
            let mut s = coeff;
            for g in &m.0 {
                s.push('*');
                s.push_str(&g.to_string());
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}
