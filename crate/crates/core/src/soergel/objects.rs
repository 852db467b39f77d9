use std::collections::BTreeMap;

use crate::gradedlinalg::{ChainComplex, GradedFreeModule, SparseMat};
use crate::ring::{int, power_sum, Polynomial, Variable};
use crate::{Error, Result};

use super::braid::BraidWord;
use super::perm::Perm;

/// A free left module with right-action matrices: a bimodule concentrated in
/// one homological degree.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub n: usize,
    /// (a, q) degrees of the generators.
    pub gens: Vec<(i32, i32)>,
    /// right[i-1]: action of x'_i.
    pub right: Vec<SparseMat>,
}

impl Bimodule {
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Place the bimodule in homological degree `t` as a one-slot complex.
    pub fn at_slot(&self, t: i32) -> ChainComplex {
        let mut slots = BTreeMap::new();
        slots.insert(t, GradedFreeModule { gens: self.gens.clone() });
        let right = self
            .right
            .iter()
            .map(|m| {
                let mut b = BTreeMap::new();
                b.insert(t, m.clone());
                b
            })
            .collect();
        ChainComplex { n: self.n, slots, diff: BTreeMap::new(), right, curvature: Polynomial::zero() }
    }

    /// Right actions pairwise commute and symmetric polynomials of the
    /// relevant parabolic act equally on both sides; checked on p_1, p_2.
    pub fn verify(&self, parabolic: &[usize]) -> Result<()> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let ij = self.right[i].mul(&self.right[j]);
                let ji = self.right[j].mul(&self.right[i]);
                if ij != ji {
                    return Err(Error::Verification(format!(
                        "right actions of x'_{} and x'_{} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let vars: Vec<Variable> = parabolic.iter().map(|&i| Variable::x(i)).collect();
        for k in 1..=2usize {
            let p = power_sum(k, &vars);
            let left = SparseMat::identity(self.rank()).scale_poly(&p);
            let mut right = SparseMat::new(self.rank(), self.rank());
            for &i in parabolic {
                let mut powk = SparseMat::identity(self.rank());
                for _ in 0..k {
                    powk = self.right[i - 1].mul(&powk);
                }
                right = right.add(&powk);
            }
            if left != right {
                return Err(Error::Verification(format!(
                    "p_{} acts differently on the two sides",
                    k
                )));
            }
        }
        Ok(())
    }
}

/// The regular bimodule R.
pub fn bimodule_r(n: usize) -> Bimodule {
    let right = (1..=n)
        .map(|i| {
            let mut m = SparseMat::new(1, 1);
            m.set(0, 0, Polynomial::var(Variable::x(i)));
            m
        })
        .collect();
    Bimodule { n, gens: vec![(0, 0)], right }
}

/// The standard bimodule R_w: rank one, x'_i acting as x_{w(i)}.
pub fn standard_bimodule(n: usize, w: &Perm) -> Bimodule {
    let right = (1..=n)
        .map(|i| {
            let mut m = SparseMat::new(1, 1);
            m.set(0, 0, Polynomial::var(Variable::x(w.apply(i))));
            m
        })
        .collect();
    Bimodule { n, gens: vec![(0, 0)], right }
}

/// The elementary Soergel bimodule B_i with basis {1(x)1, 1(x)x_{i+1}}.
///
/// Right actions are pinned by `x'_i + x'_{i+1} = x_i + x_{i+1}` and
/// `x'_i x'_{i+1} = x_i x_{i+1}`.
pub fn bimodule_bi(n: usize, i: usize) -> Result<Bimodule> {
    if i < 1 || i >= n {
        return Err(Error::IndexOutOfRange(format!(
            "B_{} undefined on {} strands",
            i, n
        )));
    }
    let xi = Polynomial::var(Variable::x(i));
    let xi1 = Polynomial::var(Variable::x(i + 1));
    let e1 = &xi + &xi1;
    let e2 = &xi * &xi1;
    let right = (1..=n)
        .map(|j| {
            let mut m = SparseMat::new(2, 2);
            if j == i + 1 {
                // e0 * x'_{i+1} = e1;  e1 * x'_{i+1} = e1*e1(e1 basis) ...
                // x_{i+1}^2 = e1 x_{i+1} - e2
                m.set(1, 0, Polynomial::one());
                m.set(0, 1, (&e2).scale(&int(-1)));
                m.set(1, 1, e1.clone());
            } else if j == i {
                // x'_i = e1 - x'_{i+1}
                m.set(0, 0, e1.clone());
                m.set(0, 1, e2.clone());
                m.set(1, 0, Polynomial::constant(int(-1)));
            } else {
                m.set(0, 0, Polynomial::var(Variable::x(j)));
                m.set(1, 1, Polynomial::var(Variable::x(j)));
            }
            m
        })
        .collect();
    Ok(Bimodule { n, gens: vec![(0, 0), (0, 2)], right })
}

/// The two-term Rouquier complex of a single crossing.
///
/// `sign = +1`: `[B_i(1) -> R(1)]` with `B_i` in homological degree 0 and
/// the counit `b_i` sending `1(x)1` to 1.
/// `sign = -1`: `[R(-1) -> B_i(1)]` with `B_i` in degree 0 and
/// `b_i^*` sending 1 to `x_i - x'_{i+1}`.
pub fn rouquier_generator(n: usize, i: usize, sign: i32) -> Result<ChainComplex> {
    let bi = bimodule_bi(n, i)?;
    let r = bimodule_r(n);
    let bi_shift: Vec<(i32, i32)> = bi.gens.iter().map(|&(a, q)| (a, q - 1)).collect();
    let mut slots = BTreeMap::new();
    let mut diff = BTreeMap::new();
    let mut right: Vec<BTreeMap<i32, SparseMat>> = vec![BTreeMap::new(); n];
    if sign > 0 {
        // slot 0: B_i(1); slot -1: R(1)
        slots.insert(0, GradedFreeModule { gens: bi_shift });
        slots.insert(-1, GradedFreeModule { gens: vec![(0, -1)] });
        let mut d = SparseMat::new(1, 2);
        // the multiplication map: 1(x)1 -> 1, 1(x)x_{i+1} -> x_{i+1}
        d.set(0, 0, Polynomial::one());
        d.set(0, 1, Polynomial::var(Variable::x(i + 1)));
        diff.insert(0, d);
        for j in 0..n {
            right[j].insert(0, bi.right[j].clone());
            right[j].insert(-1, r.right[j].clone());
        }
    } else {
        // slot 1: R(-1); slot 0: B_i(1)
        slots.insert(1, GradedFreeModule { gens: vec![(0, 1)] });
        slots.insert(0, GradedFreeModule { gens: bi_shift });
        let mut d = SparseMat::new(2, 1);
        // 1 -> x_i - x'_{i+1} = x_i * e0 - e1 in the B_i basis
        d.set(0, 0, Polynomial::var(Variable::x(i)));
        d.set(1, 0, Polynomial::constant(int(-1)));
        diff.insert(1, d);
        for j in 0..n {
            right[j].insert(1, r.right[j].clone());
            right[j].insert(0, bi.right[j].clone());
        }
    }
    Ok(ChainComplex { n, slots, diff, right, curvature: Polynomial::zero() })
}

/// The Rouquier complex of a braid word: iterated tensor product of
/// generator complexes, associated strictly left to right.
pub fn rouquier_complex(beta: &BraidWord) -> Result<ChainComplex> {
    let n = beta.strands;
    let mut acc: Option<ChainComplex> = None;
    for &g in &beta.word {
        let t = rouquier_generator(n, g.unsigned_abs() as usize, g.signum())?;
        acc = Some(match acc {
            None => t,
            Some(c) => c.tensor(&t).0,
        });
    }
    Ok(acc.unwrap_or_else(|| ChainComplex::unit(n)))
}

/// The Koszul object `K_{ij} = [R(-1) --(x_i - x_j)--> R(1)]` with target in
/// homological degree 0. The underlying bimodule of each slot is the regular
/// one; the transposition twist is carried by the module structure (the
/// differentials of the odd generators), where `x_i - x'_j` becomes
/// null-homotopic through the slot map.
pub fn koszul_object(n: usize, i: usize, j: usize) -> Result<ChainComplex> {
    if i == j {
        return Err(Error::Precondition("Koszul object needs i != j".into()));
    }
    if i < 1 || j < 1 || i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("K_{{{},{}}} on {} strands", i, j, n)));
    }
    let mut slots = BTreeMap::new();
    slots.insert(1, GradedFreeModule { gens: vec![(0, 1)] });
    slots.insert(0, GradedFreeModule { gens: vec![(0, -1)] });
    let mut d = SparseMat::new(1, 1);
    d.set(
        0,
        0,
        &Polynomial::var(Variable::x(i)) - &Polynomial::var(Variable::x(j)),
    );
    let mut diff = BTreeMap::new();
    diff.insert(1, d);
    let right = (1..=n)
        .map(|k| {
            let mut b = BTreeMap::new();
            let mut m = SparseMat::new(1, 1);
            m.set(0, 0, Polynomial::var(Variable::x(k)));
            b.insert(0, m.clone());
            b.insert(1, m);
            b
        })
        .collect();
    Ok(ChainComplex { n, slots, diff, right, curvature: Polynomial::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedlinalg::gaussian_simplify;
    use crate::ring::Polynomial;

    #[test]
    fn bi_right_actions() {
        let b = bimodule_bi(2, 1).unwrap();
        b.verify(&[1, 2]).unwrap();
        // x'_1 (1(x)1) = (x1+x2)(1(x)1) - 1(x)x2-basis-entry
        assert_eq!(
            b.right[0].get(0, 0),
            &Polynomial::var(Variable::x(1)) + &Polynomial::var(Variable::x(2))
        );
        assert_eq!(b.right[0].get(1, 0), Polynomial::constant(int(-1)));
        // p_1 acts the same on both sides is covered by verify
        let b3 = bimodule_bi(3, 2).unwrap();
        b3.verify(&[2, 3]).unwrap();
        assert!(bimodule_bi(2, 2).is_err());
    }

    #[test]
    fn generator_complexes_are_consistent() {
        for sign in [1, -1] {
            let t = rouquier_generator(2, 1, sign).unwrap();
            t.verify_homogeneous().unwrap();
            t.verify_d_squared().unwrap();
            t.verify_bimodule().unwrap();
        }
        // negative generator: d(1) = x_1 - x'_2 in the B_1 basis
        let tneg = rouquier_generator(2, 1, -1).unwrap();
        let d = &tneg.diff[&1];
        assert_eq!(d.get(0, 0), Polynomial::var(Variable::x(1)));
        assert_eq!(d.get(1, 0), Polynomial::constant(int(-1)));
    }

    #[test]
    fn empty_word_gives_unit() {
        let b = BraidWord::parse("", 2).unwrap();
        let c = rouquier_complex(&b).unwrap();
        assert_eq!(c.total_rank(), 1);
    }

    #[test]
    fn trefoil_has_eight_slots_before_simplification() {
        let b = BraidWord::parse("1 1 1", 2).unwrap();
        let c = rouquier_complex(&b).unwrap();
        // 2^3 tensor terms, ranks (B=2, R=1): total (2+1)^3 = 27
        assert_eq!(c.total_rank(), 27);
        c.verify_homogeneous().unwrap();
        c.verify_d_squared().unwrap();
        c.verify_bimodule().unwrap();
    }

    #[test]
    fn positive_negative_pair_cancels_to_unit() {
        let b = BraidWord::parse("1 -1", 2).unwrap();
        let c = rouquier_complex(&b).unwrap();
        c.verify_d_squared().unwrap();
        let s = gaussian_simplify(&c).unwrap();
        assert_eq!(s.complex.total_rank(), 1);
        assert_eq!(s.complex.slots[&0].gens[0], (0, 0));
        // the simplified complex is again the regular bimodule
        s.complex.verify_bimodule().unwrap();
        let r = &s.complex.right;
        assert_eq!(r[0][&0].get(0, 0), Polynomial::var(Variable::x(1)));
        assert_eq!(r[1][&0].get(0, 0), Polynomial::var(Variable::x(2)));
    }

    #[test]
    fn full_twist_left_homotopy_type_is_preserved() {
        // the left-module reduction may collapse below the bimodule-minimal
        // form (the bimodule-aware reduction lives in the atoms module); what
        // it must preserve is the homology of the underlying left complex
        let b = BraidWord::parse("1 1", 2).unwrap();
        let c = rouquier_complex(&b).unwrap();
        let s = gaussian_simplify(&c).unwrap();
        let w = crate::gradedlinalg::Window { qmin: -8, qmax: 8, tmin: -3, tmax: 1 };
        let h1 = crate::gradedlinalg::homology_dims(&c, &w, Default::default());
        let h2 = crate::gradedlinalg::homology_dims(&s.complex, &w, Default::default());
        assert_eq!(h1.dims, h2.dims);
    }

    #[test]
    fn koszul_object_shape() {
        let k = koszul_object(3, 1, 3).unwrap();
        k.verify_homogeneous().unwrap();
        k.verify_d_squared().unwrap();
        k.verify_bimodule().unwrap();
        assert!(koszul_object(3, 2, 2).is_err());
        // K_ij = K_ji: same complex up to the sign of the differential entry
        let k2 = koszul_object(3, 3, 1).unwrap();
        assert_eq!(k.right, k2.right);
        assert_eq!(
            k.diff[&1].get(0, 0),
            k2.diff[&1].get(0, 0).scale(&int(-1))
        );
    }
}
