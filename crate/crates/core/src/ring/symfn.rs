

use super::{int, Polynomial, Rational, Variable};
use crate::{Error, Result};

/// Complete homogeneous symmetric polynomial `h_k` of the given variables.
pub fn complete_homogeneous(k: usize, vars: &[Variable]) -> Polynomial {
    assert!(!vars.is_empty(), "complete_homogeneous needs variables");
    fn rec(vars: &[Variable], k: usize) -> Polynomial {
        if k == 0 {
            return Polynomial::one();
        }
        if vars.len() == 1 {
            return Polynomial::var(vars[0]).pow(k as u32);
        }
        let mut out = Polynomial::zero();
        for e in 0..=k {
            let head = Polynomial::var(vars[0]).pow(e as u32);
            out += &head * &rec(&vars[1..], k - e);
        }
        out
    }
    rec(vars, k)
}

/// Elementary symmetric polynomial `e_k`.
pub fn elementary(k: usize, vars: &[Variable]) -> Polynomial {
    if k > vars.len() {
        return Polynomial::zero();
    }
    fn rec(vars: &[Variable], k: usize) -> Polynomial {
        if k == 0 {
            return Polynomial::one();
        }
        if vars.len() < k {
            return Polynomial::zero();
        }
        // e_k(v0, rest) = v0 e_{k-1}(rest) + e_k(rest)
        let with = &Polynomial::var(vars[0]) * &rec(&vars[1..], k - 1);
        &with + &rec(&vars[1..], k)
    }
    rec(vars, k)
}

/// Power sum `p_k`.
pub fn power_sum(k: usize, vars: &[Variable]) -> Polynomial {
    let mut out = Polynomial::zero();
    for &v in vars {
        out += Polynomial::var(v).pow(k as u32);
    }
    out
}

/// Check symmetry of `p` in the listed variables (adjacent transpositions).
pub fn is_symmetric(p: &Polynomial, vars: &[Variable]) -> bool {
    for w in vars.windows(2) {
        let (a, b) = (w[0], w[1]);
        let swapped = p.substitute(&|v| {
            if v == a {
                Some(Polynomial::var(b))
            } else if v == b {
                Some(Polynomial::var(a))
            } else {
                None
            }
        });
        if swapped != *p {
            return false;
        }
    }
    true
}

/// Express `p_k` in the basis `p_1, ..., p_n` of symmetric functions in `n`
/// variables. The result is a polynomial in `Aux` variables, where `Aux`
/// index `l` stands for `p_l`.
///
/// For `k > n` the Newton identities eliminate `p_k` recursively:
/// `p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... ± e_n p_{k-n}`, with the `e_i`
/// themselves rewritten in power sums.
pub fn power_sum_in_basis(k: usize, n: usize) -> Polynomial {
    assert!(k >= 1 && n >= 1);
    let p_sym = |l: usize| Polynomial::var(Variable::aux(l));
    if k <= n {
        return p_sym(k);
    }
    // e_i in terms of p_1..p_i via i*e_i = sum_{j=1}^{i} (-1)^{j-1} e_{i-j} p_j
    let mut e: Vec<Polynomial> = vec![Polynomial::one()];
    for i in 1..=n {
        let mut acc = Polynomial::zero();
        for j in 1..=i {
            let term = &e[i - j] * &p_sym(j);
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        e.push(acc.scale(&Rational::new(1.into(), (i as i64).into())));
    }
    // p_k = sum_{i=1}^{n} (-1)^{i-1} e_i p_{k-i} for k > n
    let mut memo: Vec<Polynomial> = (0..=n).map(|l| if l == 0 {
        Polynomial::constant(int(n as i64))
    } else {
        p_sym(l)
    }).collect();
    for m in (n + 1)..=k {
        let mut acc = Polynomial::zero();
        for i in 1..=n {
            let term = &e[i] * &memo[m - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        memo.push(acc);
    }
    memo[k].clone()
}

/// The partial derivative of `p_k` with respect to `p_l` in the ring of
/// symmetric functions in `n` variables, expressed in `x_1..x_n`.
pub fn power_sum_jacobian(k: usize, l: usize, n: usize) -> Result<Polynomial> {
    if l < 1 || l > n {
        return Err(Error::InvalidBasisIndex(format!(
            "p_{} is not a basis element for n = {}",
            l, n
        )));
    }
    if k < 1 {
        return Err(Error::Precondition("power sum index must be positive".into()));
    }
    let expr = power_sum_in_basis(k, n);
    let d = expr.derivative(Variable::aux(l));
    let xs: Vec<Variable> = (1..=n).map(Variable::x).collect();
    Ok(d.substitute(&|v| {
        if v.kind == super::VarKind::Aux {
            Some(power_sum(v.index as usize, &xs))
        } else {
            None
        }
    }))
}

/// Canonical factorization coefficients of a symmetric polynomial `q` in
/// `x_1..x_n`: exact integration of `(d q / d x_i)(t x + (1-t) x')` over
/// `t` in `[0,1]`, so that `sum_i a_i (x_i - x'_i) = q(x) - q(x')`.
pub fn factorization_coeffs(q: &Polynomial, n: usize) -> Result<Vec<Polynomial>> {
    let xs: Vec<Variable> = (1..=n).map(Variable::x).collect();
    if !is_symmetric(q, &xs) {
        return Err(Error::Precondition(
            "factorization requires a symmetric polynomial".into(),
        ));
    }
    let t = Variable::aux(0);
    let tp = Polynomial::var(t);
    let one_minus_t = &Polynomial::one() - &tp;
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let di = q.derivative(Variable::x(i));
        let interpolated = di.substitute(&|v| {
            if v.kind == super::VarKind::X(0) {
                let j = v.index as usize;
                let mix = &(&tp * &Polynomial::var(Variable::x(j)))
                    + &(&one_minus_t * &Polynomial::var(Variable::xp(j)));
                Some(mix)
            } else {
                None
            }
        });
        out.push(interpolated.integrate_unit(t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarKind;

    fn xv(n: usize) -> Vec<Variable> {
        (1..=n).map(Variable::x).collect()
    }

    fn xpoly(i: usize) -> Polynomial {
        Polynomial::var(Variable::x(i))
    }

    fn xppoly(i: usize) -> Polynomial {
        Polynomial::var(Variable::xp(i))
    }

    #[test]
    fn h_small_cases() {
        let vars = [Variable::x(1), Variable::xp(1)];
        assert_eq!(complete_homogeneous(0, &vars), Polynomial::one());
        assert_eq!(complete_homogeneous(1, &vars), &xpoly(1) + &xppoly(1));
        let h2 = &(&xpoly(1).pow(2) + &(&xpoly(1) * &xppoly(1))) + &xppoly(1).pow(2);
        assert_eq!(complete_homogeneous(2, &vars), h2);
    }

    #[test]
    fn h_recursion() {
        // h_k(x, x') = x h_{k-1}(x, x') + x'^k
        let vars = [Variable::x(1), Variable::xp(1)];
        for k in 1..=8 {
            let lhs = complete_homogeneous(k, &vars);
            let rhs = &(&xpoly(1) * &complete_homogeneous(k - 1, &vars)) + &xppoly(1).pow(k as u32);
            assert_eq!(lhs, rhs, "failed at k = {}", k);
        }
    }

    #[test]
    fn h_q_degree() {
        let vars = xv(3);
        for k in 0..5 {
            let h = complete_homogeneous(k, &vars);
            assert_eq!(h.homogeneous_degree(), Some((0, 2 * k as i32, 0)));
        }
    }

    #[test]
    fn jacobian_diagonal() {
        assert_eq!(power_sum_jacobian(2, 2, 2).unwrap(), Polynomial::one());
    }

    #[test]
    fn jacobian_one_variable() {
        // p_2 = p_1^2 when n = 1, so dp_2/dp_1 = 2 p_1 = 2 x_1
        assert_eq!(
            power_sum_jacobian(2, 1, 1).unwrap(),
            xpoly(1).scale(&int(2))
        );
    }

    #[test]
    fn jacobian_against_elimination_oracle() {
        // Independent elimination for n = 2: e_1 = p_1, e_2 = (p_1^2 - p_2)/2,
        // p_3 = e_1 p_2 - e_2 p_1 = (3 p_1 p_2 - p_1^3)/2, so
        // d p_3 / d p_1 = (3 p_2 - 3 p_1^2)/2 = -3 x_1 x_2.
        let p1 = Polynomial::var(Variable::aux(1));
        let p2 = Polynomial::var(Variable::aux(2));
        let p3 = (&(&p1 * &p2).scale(&int(3)) - &p1.pow(3)).scale(&crate::ring::rat(1, 2));
        let d = p3.derivative(Variable::aux(1));
        let oracle = d.substitute(&|v| {
            (v.kind == VarKind::Aux).then(|| power_sum(v.index as usize, &xv(2)))
        });
        assert_eq!(power_sum_jacobian(3, 1, 2).unwrap(), oracle);
        // frozen value: -3 x1 x2
        assert_eq!(oracle, (&xpoly(1) * &xpoly(2)).scale(&int(-3)));
    }

    #[test]
    fn factorization_p1() {
        let q = power_sum(1, &xv(3));
        let a = factorization_coeffs(&q, 3).unwrap();
        for ai in &a {
            assert_eq!(*ai, Polynomial::one());
        }
    }

    #[test]
    fn factorization_power_sums_are_h() {
        // a_i for p_k is h_{k-1}(x_i, x'_i)
        for n in 1..=3 {
            for k in 1..=4 {
                let q = power_sum(k, &xv(n));
                let a = factorization_coeffs(&q, n).unwrap();
                for i in 1..=n {
                    let h = complete_homogeneous(k - 1, &[Variable::x(i), Variable::xp(i)]);
                    assert_eq!(a[i - 1], h, "n={} k={} i={}", n, k, i);
                }
            }
        }
    }

    #[test]
    fn factorization_e2_two_vars() {
        // Direct integration oracle: de_2/dx_1 = x_2, integral of
        // t x_2 + (1-t) x_2' over [0,1] is (x_2 + x_2')/2.
        let q = elementary(2, &xv(2));
        let a = factorization_coeffs(&q, 2).unwrap();
        let half = crate::ring::rat(1, 2);
        assert_eq!(a[0], (&xpoly(2) + &xppoly(2)).scale(&half));
        assert_eq!(a[1], (&xpoly(1) + &xppoly(1)).scale(&half));
    }

    #[test]
    fn factorization_telescoping_identity() {
        // sum_i a_i (x_i - x'_i) = q(x) - q(x') for generators p_1..p_4, e_2, e_3
        for n in 1..=3usize {
            let mut gens: Vec<Polynomial> = (1..=4).map(|k| power_sum(k, &xv(n))).collect();
            gens.push(elementary(2, &xv(n)));
            gens.push(elementary(3, &xv(n)));
            for q in gens {
                let a = factorization_coeffs(&q, n).unwrap();
                let mut lhs = Polynomial::zero();
                for i in 1..=n {
                    lhs += &a[i - 1] * &(&xpoly(i) - &xppoly(i));
                }
                let qp = q.substitute(&|v| {
                    (v.kind == VarKind::X(0)).then(|| xppoly(v.index as usize))
                });
                let rhs = &q - &qp;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_symmetric_rejected() {
        let q = xpoly(1).pow(2);
        assert!(factorization_coeffs(&q, 2).is_err());
    }

    #[test]
    fn invalid_basis_index_rejected() {
        assert!(power_sum_jacobian(3, 3, 2).is_err());
    }
}
