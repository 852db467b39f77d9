use std::collections::BTreeMap;

use crate::ring::{complete_homogeneous, power_sum_jacobian, Polynomial, VarKind, Variable};
use crate::soergel::Perm;
use crate::{Error, Result};

use super::algebra::{decode_u, u_var};
use super::superpoly::{OddGen, OddKind, SuperPolynomial};

/// A dg algebra homomorphism given by generator images.
#[derive(Clone, Debug)]
pub struct HomTable {
    /// image of x_i (1-based index i).
    pub xs: Vec<Polynomial>,
    /// image of xi_i.
    pub xis: Vec<SuperPolynomial>,
    /// image of u_k.
    pub us: Vec<SuperPolynomial>,
}

impl HomTable {
    pub fn apply(&self, e: &SuperPolynomial) -> SuperPolynomial {
        e.apply_hom(
            &|v| match v.kind {
                VarKind::X(0) => Some(SuperPolynomial::from_poly(
                    self.xs[v.index as usize - 1].clone(),
                )),
                VarKind::U => {
                    let (f, k) = decode_u(v.index as usize);
                    assert_eq!(f, 1);
                    Some(self.us[k - 1].clone())
                }
                _ => None,
            },
            &|g| match g.kind {
                OddKind::Xi => self.xis[g.index as usize - 1].clone(),
                _ => panic!("homomorphism table applied to foreign generator {}", g),
            },
        )
    }
}

/// The cycle-collapse homomorphisms for a permutation `w` with `c` cycles:
/// `alpha` sends the w-twisted quotient algebra onto the stabilized algebra
/// on `c` variables, `beta` is its right inverse, with corrections on `u_k`
/// built per cycle so that `beta` is a chain map. Cycle representatives are
/// the minimal elements of each cycle.
pub fn alpha_beta(w: &Perm, k_max: usize) -> (HomTable, HomTable) {
    let n = w.n();
    let cycles = w.cycles();
    let label = w.cycle_of();

    // alpha: CA_w -> CA_{c,n}
    let alpha = HomTable {
        xs: (1..=n)
            .map(|j| Polynomial::var(Variable::x(label[j - 1] + 1)))
            .collect(),
        xis: (1..=n)
            .map(|j| {
                let ci = label[j - 1];
                if cycles[ci][0] == j {
                    SuperPolynomial::odd(OddGen::xi(1, ci + 1))
                } else {
                    SuperPolynomial::zero()
                }
            })
            .collect(),
        us: (1..=k_max).map(|k| SuperPolynomial::var(u_var(1, k))).collect(),
    };

    // beta: CA_{c,n} -> CA_w
    let beta = HomTable {
        xs: (1..=cycles.len())
            .map(|i| Polynomial::var(Variable::x(cycles[i - 1][0])))
            .collect(),
        xis: (1..=cycles.len())
            .map(|i| {
                let mut s = SuperPolynomial::zero();
                for &j in &cycles[i - 1] {
                    s = s.add(&SuperPolynomial::odd(OddGen::xi(1, j)));
                }
                s
            })
            .collect(),
        us: (1..=k_max)
            .map(|k| {
                let mut img = SuperPolynomial::var(u_var(1, k));
                for cyc in &cycles {
                    img = img.add(&cycle_correction(cyc, k));
                }
                img
            })
            .collect(),
    };
    (alpha, beta)
}

/// The telescoping correction for one cycle `c_1, ..., c_m` (ordered so that
/// `w(c_{t+1}) = c_t`):
/// `sum_t h_{k-2}(x_{c_1}, x_{c_t}, x_{c_{t+1}}) xi_{c_t} (xi_{c_{t+1}} + ... + xi_{c_m})`.
fn cycle_correction(cycle: &[usize], k: usize) -> SuperPolynomial {
    let m = cycle.len();
    let mut out = SuperPolynomial::zero();
    if m < 2 || k < 2 {
        return out;
    }
    for t in 0..(m - 1) {
        let h = complete_homogeneous(
            k - 2,
            &[
                Variable::x(cycle[0]),
                Variable::x(cycle[t]),
                Variable::x(cycle[t + 1]),
            ],
        );
        let mut tail = SuperPolynomial::zero();
        for &c in &cycle[(t + 1)..] {
            tail = tail.add(&SuperPolynomial::odd(OddGen::xi(1, c)));
        }
        let term = SuperPolynomial::odd(OddGen::xi(1, cycle[t])).mul(&tail).mul_poly(&h);
        out = out.add(&term);
    }
    out
}

/// The stabilization image of `u_k` under `Phi_mu^N` landing in the algebra
/// with `n = sum(mu)` generators: the identity for `k <= n`, otherwise
/// `sum_l u_l (dp_k/dp_l)(x^mu)`.
pub fn phi_stabilize(mu: &[usize], big_n: usize, k: usize) -> Result<SuperPolynomial> {
    if mu.is_empty() || mu.iter().any(|&m| m == 0) {
        return Err(Error::Precondition("invalid composition".into()));
    }
    let n: usize = mu.iter().sum();
    if big_n <= n {
        return Err(Error::Precondition(format!(
            "stabilization needs N > {}, got {}",
            n, big_n
        )));
    }
    if k > big_n {
        return Err(Error::Precondition(format!("u_{} not defined for N = {}", k, big_n)));
    }
    if k <= n {
        return Ok(SuperPolynomial::var(u_var(1, k)));
    }
    // position j (1-based) in the multiset belongs to component comp(j)
    let mut comp = Vec::with_capacity(n);
    for (ci, &m) in mu.iter().enumerate() {
        for _ in 0..m {
            comp.push(ci + 1);
        }
    }
    let mut out = SuperPolynomial::zero();
    for l in 1..=n {
        let jac = power_sum_jacobian(k, l, n)?;
        let evaluated = jac.substitute(&|v| {
            if v.kind == VarKind::X(0) {
                Some(Polynomial::var(Variable::x(comp[v.index as usize - 1])))
            } else {
                None
            }
        });
        out = out.add(&SuperPolynomial::var(u_var(1, l)).mul_poly(&evaluated));
    }
    Ok(out)
}

/// The double-integral correction for a pair of symmetric polynomials:
/// `C^{f,g}_{ij} = 1/2 (int_0^1 dt int_0^t ds - int_0^1 ds int_0^s dt)
///   (df/dx_i)(s x + (1-s) x') (dg/dx_j)(t x + (1-t) x')`.
pub fn correction_pair(
    f: &Polynomial,
    g: &Polynomial,
    n: usize,
) -> Result<BTreeMap<(usize, usize), Polynomial>> {
    let xs: Vec<Variable> = (1..=n).map(Variable::x).collect();
    if !crate::ring::is_symmetric(f, &xs) || !crate::ring::is_symmetric(g, &xs) {
        return Err(Error::Precondition("correction needs symmetric polynomials".into()));
    }
    let s = Variable::aux(8);
    let t = Variable::aux(9);
    let interp = |p: &Polynomial, time: Variable| {
        let tp = Polynomial::var(time);
        let one_minus = &Polynomial::one() - &tp;
        p.substitute(&|v| {
            if v.kind == VarKind::X(0) {
                let j = v.index as usize;
                Some(
                    &(&tp * &Polynomial::var(Variable::x(j)))
                        + &(&one_minus * &Polynomial::var(Variable::xp(j))),
                )
            } else {
                None
            }
        })
    };
    let mut out = BTreeMap::new();
    for i in 1..=n {
        let fi = interp(&f.derivative(Variable::x(i)), s);
        for j in 1..=n {
            let gj = interp(&g.derivative(Variable::x(j)), t);
            let prod = &fi * &gj;
            // I1 = int_0^1 dt int_0^t ds: inner antiderivative in s from 0 to t
            let inner_s = integrate_0_to(&prod, s, t);
            let i1 = inner_s.integrate_unit(t);
            // I2 = int_0^1 ds int_0^s dt
            let inner_t = integrate_0_to(&prod, t, s);
            let i2 = inner_t.integrate_unit(s);
            let c = (&i1 - &i2).scale(&crate::ring::rat(1, 2));
            if !c.is_zero() {
                out.insert((i, j), c);
            }
        }
    }
    Ok(out)
}

/// Exact integral of `p` over `var` from 0 to `upper`.
fn integrate_0_to(p: &Polynomial, var: Variable, upper: Variable) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let (rest, e) = m.split_off(var);
        let up = Polynomial::var(upper).pow(e + 1);
        let coeff = c / crate::ring::int((e + 1) as i64);
        out += &Polynomial::from_term(rest, coeff) * &up;
    }
    out
}

/// Assemble the full correction table for a product of power sums
/// `Q = p_{k_1} ... p_{k_r}` via `C^{fg} = f C^g + g C^f + C^{f,g}`,
/// together with the derivation part `U(Q) = sum u_k dQ/dp_k`.
///
/// Multiplier coefficients are evaluated as `(f(x) + f(x'))/2`; over the
/// quotient where symmetric polynomials agree on the two sides this is the
/// same as `f`, but it makes the boundary identity hold exactly in the free
/// ring.
pub fn correction_table(
    power_sum_factors: &[usize],
    n: usize,
) -> Result<(SuperPolynomial, BTreeMap<(usize, usize), Polynomial>)> {
    let xs: Vec<Variable> = (1..=n).map(Variable::x).collect();
    let p = |k: usize| crate::ring::power_sum(k, &xs);
    let sym = |h: &Polynomial| -> Polynomial {
        let primed = h.substitute(&|v| {
            (v.kind == VarKind::X(0)).then(|| Polynomial::var(Variable::xp(v.index as usize)))
        });
        (h + &primed).scale(&crate::ring::rat(1, 2))
    };
    match power_sum_factors {
        [] => Ok((SuperPolynomial::zero(), BTreeMap::new())),
        [k] => Ok((SuperPolynomial::var(u_var(1, *k)), BTreeMap::new())),
        [k, rest @ ..] => {
            let f = p(*k);
            let (u_rest, c_rest) = correction_table(rest, n)?;
            let g: Polynomial = rest.iter().fold(Polynomial::one(), |acc, &m| &acc * &p(m));
            let (u_f, _) = correction_table(&[*k], n)?;
            let c_pair = correction_pair(&f, &g, n)?;
            let (sf, sg) = (sym(&f), sym(&g));
            // U(fg) = U(f) g + f U(g)
            let u_total = u_f.mul_poly(&sg).add(&u_rest.mul_poly(&sf));
            // C^{fg} = f C^g + g C^f (C^f = 0 for a single power sum) + C^{f,g}
            let mut c_total: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
            for (&(i, j), cv) in &c_rest {
                let val = cv * &sf;
                if !val.is_zero() {
                    c_total.insert((i, j), val);
                }
            }
            for (&(i, j), cv) in &c_pair {
                let e = c_total.entry((i, j)).or_insert_with(Polynomial::zero);
                *e += cv;
                if e.is_zero() {
                    c_total.remove(&(i, j));
                }
            }
            Ok((u_total, c_total))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aalg::algebra::{differential, AlgebraSpec};
    use crate::ring::{elementary, int, power_sum};

    fn u(k: usize) -> SuperPolynomial {
        SuperPolynomial::var(u_var(1, k))
    }

    #[test]
    fn identity_permutation_beta_is_inclusion() {
        let w = Perm::identity(3);
        let (_, beta) = alpha_beta(&w, 3);
        for k in 1..=3 {
            assert_eq!(beta.us[k - 1], u(k));
        }
        for i in 1..=3usize {
            assert_eq!(beta.xis[i - 1], SuperPolynomial::odd(OddGen::xi(1, i)));
        }
    }

    #[test]
    fn beta_is_chain_map_and_alpha_beta_identity() {
        // for all w in S_4 and k <= 4
        for w in Perm::all(4) {
            let c = w.num_cycles();
            let (alpha, beta) = alpha_beta(&w, 4);
            let spec_w = AlgebraSpec::CAw { n: 4, w: w.clone() };
            let spec_c = AlgebraSpec::CA { c, n: 4 };
            for k in 1..=4usize {
                // d(beta(u_k)) = beta(d u_k)
                let lhs = differential(&beta.apply(&u(k)), &spec_w).unwrap();
                let rhs = beta.apply(&differential(&u(k), &spec_c).unwrap());
                assert!(lhs.sub(&rhs).is_zero(), "beta chain map fails w={} k={}", w, k);
                // alpha(beta(u_k)) = u_k
                let ab = alpha.apply(&beta.apply(&u(k)));
                assert_eq!(ab, u(k), "alpha.beta != id on u_{} for w={}", k, w);
            }
            for i in 1..=c {
                let ab = alpha.apply(&beta.apply(&SuperPolynomial::odd(OddGen::xi(1, i))));
                assert_eq!(ab, SuperPolynomial::odd(OddGen::xi(1, i)));
                let abx =
                    alpha.apply(&beta.apply(&SuperPolynomial::var(Variable::x(i))));
                assert_eq!(abx, SuperPolynomial::var(Variable::x(i)));
            }
        }
    }

    #[test]
    fn explicit_three_cycle_correction() {
        // single 3-cycle with w(j) = j - 1 mod 3: cycle order (1, 2, 3)
        // the correction for u_k is
        // sum_{i=1}^{2} h_{k-2}(x1, x_i, x_{i+1}) xi_i (xi_{i+1} + ... + xi_3)
        let w = Perm(vec![2, 0, 1]); // w(1)=3? check: 0-indexed images
        // we want w(j) = j-1: w(1) = 3, w(2) = 1, w(3) = 2
        let w = {
            let mut v = vec![0; 3];
            v[0] = 2; // 1 -> 3
            v[1] = 0; // 2 -> 1
            v[2] = 1; // 3 -> 2
            let _ = w;
            Perm(v)
        };
        assert_eq!(w.cycles(), vec![vec![1, 2, 3]]);
        let (_, beta) = alpha_beta(&w, 3);
        let k = 3;
        let mut expected = u(k);
        for t in 1..=2usize {
            let h = complete_homogeneous(
                k - 2,
                &[Variable::x(1), Variable::x(t), Variable::x(t + 1)],
            );
            let mut tail = SuperPolynomial::zero();
            for j in (t + 1)..=3 {
                tail = tail.add(&SuperPolynomial::odd(OddGen::xi(1, j)));
            }
            expected = expected
                .add(&SuperPolynomial::odd(OddGen::xi(1, t)).mul(&tail).mul_poly(&h));
        }
        assert_eq!(beta.us[k - 1], expected);
    }

    #[test]
    fn phi_small_cases() {
        // k <= n: identity
        assert_eq!(phi_stabilize(&[1, 1], 3, 2).unwrap(), u(2));
        // mu = (1), N = 2, k = 2: dp_2/dp_1 in one variable = 2 x_1
        let img = phi_stabilize(&[1], 2, 2).unwrap();
        let expected = u(1).mul_poly(&Polynomial::var(Variable::x(1)).scale(&int(2)));
        assert_eq!(img, expected);
        assert!(phi_stabilize(&[], 2, 1).is_err());
        assert!(phi_stabilize(&[2], 2, 1).is_err());
    }

    #[test]
    fn phi_composition_law() {
        // Phi_mu^N . Phi_mu'^{N'} = Phi_mu^{N'} on u_k
        let mu = [1usize, 1];
        let mu_big = [2usize, 2];
        let n: usize = mu.iter().sum();
        let nn: usize = mu_big.iter().sum();
        let big = 6usize;
        for k in 1..=big {
            let inner = phi_stabilize(&mu_big, big, k).unwrap();
            // apply Phi_mu^{N=4} to the u-variables of inner
            let composed = inner.apply_hom(
                &|v| match v.kind {
                    VarKind::U => {
                        let (_, l) = decode_u(v.index as usize);
                        Some(phi_stabilize(&mu, nn, l).unwrap())
                    }
                    _ => None,
                },
                &|g| SuperPolynomial::odd(g),
            );
            let direct = phi_stabilize(&mu, big, k).unwrap();
            assert!(
                composed.sub(&direct).is_zero(),
                "composition law fails at k={}: {} vs {}",
                k,
                composed,
                direct
            );
            let _ = n;
        }
    }

    #[test]
    fn phi_generating_series_oracle() {
        // mu = (1), N = 2: Phi(u_2) solves the condition that
        // (Phi(u_1) t + Phi(u_2)/2 t^2)(1 - t x_1) has no t^2 term:
        // u_1 t + (Phi(u_2)/2 - u_1 x_1) t^2 + ... => Phi(u_2) = 2 x_1 u_1
        let img = phi_stabilize(&[1], 2, 2).unwrap();
        let expected = u(1).mul_poly(&Polynomial::var(Variable::x(1)).scale(&int(2)));
        assert_eq!(img, expected);
    }

    #[test]
    fn correction_pair_constant_f_vanishes() {
        let f = Polynomial::one();
        let g = power_sum(2, &[Variable::x(1), Variable::x(2)]);
        let c = correction_pair(&f, &g, 2).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn correction_vanishes_on_diagonal() {
        // C^{p1 p2}_{ij} lies in the ideal (x - x'): substituting x' = x
        // kills it
        let (_, table) = correction_table(&[1, 2], 2).unwrap();
        assert!(!table.is_empty());
        for c in table.values() {
            let diag = c.substitute(&|v| {
                (v.kind == VarKind::X(1)).then(|| Polynomial::var(Variable::x(v.index as usize)))
            });
            assert!(diag.is_zero(), "correction not in the diagonal ideal");
        }
    }

    #[test]
    fn full_correction_identity_p1p2() {
        // d(U(Q) + sum C_ij xi_i xi_j) = sum_i a_i^Q xi_i for Q = p1 p2, n = 2
        let n = 2;
        let xs: Vec<Variable> = (1..=n).map(Variable::x).collect();
        let q = &power_sum(1, &xs) * &power_sum(2, &xs);
        let (u_part, c_table) = correction_table(&[1, 2], n).unwrap();
        let mut elt = u_part;
        for (&(i, j), c) in &c_table {
            elt = elt.add(
                &SuperPolynomial::odd(OddGen::xi(1, i))
                    .mul(&SuperPolynomial::odd(OddGen::xi(1, j)))
                    .mul_poly(c),
            );
        }
        let spec = AlgebraSpec::untwisted(n);
        let lhs = differential(&elt, &spec).unwrap();
        let a = crate::ring::factorization_coeffs(&q, n).unwrap();
        let mut rhs = SuperPolynomial::zero();
        for i in 1..=n {
            rhs = rhs.add(&SuperPolynomial::odd(OddGen::xi(1, i)).mul_poly(&a[i - 1]));
        }
        let defect = lhs.sub(&rhs);
        assert!(
            defect.is_zero(),
            "correction identity fails: defect {}",
            defect
        );
    }

    #[test]
    fn full_correction_identity_e2_e3() {
        // the same identity through the recursive assembly for Q = p2 p2 and
        // Q = p1 p1 p2 on up to 3 variables
        for (factors, n) in [(vec![2usize, 2], 2usize), (vec![1, 1, 2], 3)] {
            let (u_part, c_table) = correction_table(&factors, n).unwrap();
            let xs: Vec<Variable> = (1..=n).map(Variable::x).collect();
            let q: Polynomial = factors
                .iter()
                .fold(Polynomial::one(), |acc, &m| &acc * &power_sum(m, &xs));
            let mut elt = u_part;
            for (&(i, j), c) in &c_table {
                elt = elt.add(
                    &SuperPolynomial::odd(OddGen::xi(1, i))
                        .mul(&SuperPolynomial::odd(OddGen::xi(1, j)))
                        .mul_poly(c),
                );
            }
            let spec = AlgebraSpec::untwisted(n);
            let lhs = differential(&elt, &spec).unwrap();
            let a = crate::ring::factorization_coeffs(&q, n).unwrap();
            let mut rhs = SuperPolynomial::zero();
            for i in 1..=n {
                rhs = rhs.add(&SuperPolynomial::odd(OddGen::xi(1, i)).mul_poly(&a[i - 1]));
            }
            assert!(lhs.sub(&rhs).is_zero(), "factors {:?} n={}", factors, n);
        }
        let _ = elementary(2, &[Variable::x(1)]);
    }
}
