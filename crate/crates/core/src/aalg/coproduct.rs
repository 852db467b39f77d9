use crate::ring::{complete_homogeneous, Polynomial, VarKind, Variable};
use crate::soergel::Perm;
use crate::Result;

use super::algebra::{decode_u, differential, u_var, AlgebraSpec};
use super::superpoly::{OddGen, OddKind, SuperPolynomial};

pub(crate) fn relabel(
    e: &SuperPolynomial,
    tier_map: &dyn Fn(u8) -> u8,
    factor_map: &dyn Fn(u8) -> u8,
) -> SuperPolynomial {
    e.substitute(
        &|v| match v.kind {
            VarKind::X(t) => Some(Polynomial::var(Variable::x_tier(tier_map(t), v.index as usize))),
            VarKind::U => {
                let (f, k) = decode_u(v.index as usize);
                Some(Polynomial::var(u_var(factor_map(f), k)))
            }
            _ => None,
        },
        &|g| {
            SuperPolynomial::odd(OddGen { kind: g.kind, factor: factor_map(g.factor), index: g.index })
        },
    )
}

/// Coproduct image of the generator `u_k`, landing in factors `(a, a+1)`
/// with x-tiers `(a-1, a, a+1)` and twist data `(v, w)` for the two factors.
fn delta_u(k: usize, n: usize, a: u8, v: &Perm, w: &Perm) -> SuperPolynomial {
    let vinv = v.inverse();
    let winv = w.inverse();
    let mut img = SuperPolynomial::var(u_var(a, k)).add(&SuperPolynomial::var(u_var(a + 1, k)));
    if k >= 2 {
        for i in 1..=n {
            let h = complete_homogeneous(
                k - 2,
                &[
                    Variable::x_tier(a - 1, i),
                    Variable::x_tier(a, vinv.apply(i)),
                    Variable::x_tier(a + 1, winv.apply(vinv.apply(i))),
                ],
            );
            let xi_pair = SuperPolynomial::odd(OddGen::xi(a, i))
                .mul(&SuperPolynomial::odd(OddGen::xi(a + 1, vinv.apply(i))));
            img = img.add(&xi_pair.mul_poly(&h));
        }
    }
    img
}

/// The twisted coproduct: a B-algebra map from the vw-twisted algebra
/// (tiers 0 and 1, factor 1) into the tensor of the v- and w-twisted
/// algebras (tiers 0, 1, 2; factors 1, 2).
pub fn coproduct(e: &SuperPolynomial, v: &Perm, w: &Perm, n: usize) -> SuperPolynomial {
    let vinv = v.inverse();
    e.apply_hom(
        &|var| match var.kind {
            VarKind::X(0) => None,
            VarKind::X(1) => Some(SuperPolynomial::var(Variable::x_tier(2, var.index as usize))),
            VarKind::X(t) => panic!("coproduct input has unexpected tier {}", t),
            VarKind::U => {
                let (f, k) = decode_u(var.index as usize);
                assert_eq!(f, 1, "coproduct input must be single-factor");
                Some(delta_u(k, n, 1, v, w))
            }
            _ => None,
        },
        &|g| match g.kind {
            OddKind::Xi => SuperPolynomial::odd(OddGen::xi(1, g.index as usize))
                .add(&SuperPolynomial::odd(OddGen::xi(2, vinv.apply(g.index as usize)))),
            _ => panic!("coproduct input has foreign odd generator {}", g),
        },
    )
}

/// Apply the untwisted coproduct at tensor factor `a` of an element of the
/// s-fold tensor algebra: factors above `a` shift up by one, tiers above `a`
/// shift up by one.
pub fn apply_delta_at(e: &SuperPolynomial, n: usize, a: u8) -> SuperPolynomial {
    let id = Perm::identity(n);
    let tier_map = |t: u8| if t >= a { t + 1 } else { t };
    let factor_map_shift = |f: u8| if f > a { f + 1 } else { f };
    e.apply_hom(
        &|var| match var.kind {
            VarKind::X(t) => {
                Some(SuperPolynomial::var(Variable::x_tier(tier_map(t), var.index as usize)))
            }
            VarKind::U => {
                let (f, k) = decode_u(var.index as usize);
                if f == a {
                    Some(delta_u(k, n, a, &id, &id))
                } else {
                    Some(SuperPolynomial::var(u_var(factor_map_shift(f), k)))
                }
            }
            _ => None,
        },
        &|g| {
            if g.factor == a && g.kind == OddKind::Xi {
                SuperPolynomial::odd(OddGen::xi(a, g.index as usize))
                    .add(&SuperPolynomial::odd(OddGen::xi(a + 1, g.index as usize)))
            } else {
                SuperPolynomial::odd(OddGen { factor: factor_map_shift(g.factor), ..g })
            }
        },
    )
}

/// The higher coproduct on the generator `u_k`:
/// `sum_i h_{k-s}(x_i, x'_i, ..., x^{(s)}_i) xi_i^{(1)} ... xi_i^{(s)}`
/// when `s <= k`, zero otherwise.
pub fn higher_coproduct(s: usize, k: usize, n: usize) -> SuperPolynomial {
    assert!(s >= 3, "higher coproducts start at s = 3");
    if s > k {
        return SuperPolynomial::zero();
    }
    let mut out = SuperPolynomial::zero();
    for i in 1..=n {
        let vars: Vec<Variable> = (0..=s as u8).map(|t| Variable::x_tier(t, i)).collect();
        let h = complete_homogeneous(k - s, &vars);
        let mut xis = SuperPolynomial::from_poly(h);
        for f in 1..=s as u8 {
            xis = xis.mul(&SuperPolynomial::odd(OddGen::xi(f, i)));
        }
        out = out.add(&xis);
    }
    out
}

/// The inductive extension of the triple coproduct to arbitrary monomials:
/// right-linear over the outer variables, with
/// `d3(a u_k) = d3(a) D1 D(u_k) + D2 D(a) d3(u_k)` for the largest `u` in
/// the monomial.
pub fn higher_on_element(e: &SuperPolynomial, n: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero();
    for (m, p) in &e.terms {
        for (mono, c) in p.terms() {
            let mut term = SuperPolynomial::from_poly(Polynomial::constant(c.clone()));
            term = term.mul(&SuperPolynomial {
                terms: [(m.clone(), Polynomial::one())].into_iter().collect(),
            });
            let term = SuperPolynomial {
                terms: term
                    .terms
                    .into_iter()
                    .map(|(mm, pp)| (mm, &pp * &Polynomial::from_term(mono.clone(), crate::ring::int(1))))
                    .collect(),
            };
            out = out.add(&higher3_monomial(&term, n));
        }
    }
    out
}

/// delta^(3) of a single monomial term (coefficient x odd monomial).
fn higher3_monomial(term: &SuperPolynomial, n: usize) -> SuperPolynomial {
    debug_assert_eq!(term.terms.len(), 1);
    let (m, p) = term.terms.iter().next().unwrap();
    debug_assert_eq!(p.num_terms(), 1);
    let (mono, coeff) = p.terms().next().unwrap();

    // find the largest u variable
    let u_vars: Vec<Variable> = mono
        .0
        .iter()
        .map(|&(v, _)| v)
        .filter(|v| v.kind == VarKind::U)
        .collect();
    if let Some(&umax) = u_vars.last() {
        let (f, k) = decode_u(umax.index as usize);
        assert_eq!(f, 1);
        // a = term / u_max (one power)
        let rest_poly = {
            let mut pairs: Vec<(Variable, u32)> =
                mono.0.iter().copied().collect();
            for pr in pairs.iter_mut() {
                if pr.0 == umax {
                    pr.1 -= 1;
                }
            }
            Polynomial::from_term(crate::ring::Monomial::from_pairs(pairs), coeff.clone())
        };
        let mut a = SuperPolynomial::zero();
        a.add_term(m.clone(), rest_poly);
        let id = Perm::identity(n);
        let d1d_u = apply_delta_at(&coproduct(&SuperPolynomial::var(u_var(1, k)), &id, &id, n), n, 1);
        let d2d_a = apply_delta_at(&coproduct(&a, &id, &id, n), n, 2);
        return higher_on_element(&a, n)
            .mul(&d1d_u)
            .add(&d2d_a.mul(&higher_coproduct(3, k, n).min_s_guard(k)));
    }

    // no u variables: peel odd generators from the right
    if !m.is_empty() {
        let pos = m.len() - 1;
        let g = m.0[pos];
        if g.kind != OddKind::Xi {
            panic!("triple coproduct extension: foreign generator {}", g);
        }
        let (rest, _sign) = m.remove_at(pos);
        // delta3(a xi_i) = delta3(a) (xi^1 + xi^2 + xi^3)
        let mut a = SuperPolynomial::zero();
        a.add_term(rest, Polynomial::from_term(mono.clone(), coeff.clone()));
        let xi_sum = SuperPolynomial::odd(OddGen::xi(1, g.index as usize))
            .add(&SuperPolynomial::odd(OddGen::xi(2, g.index as usize)))
            .add(&SuperPolynomial::odd(OddGen::xi(3, g.index as usize)));
        return higher3_monomial(&a, n).mul(&xi_sum);
    }

    // pure polynomial in the x variables: delta3 vanishes
    SuperPolynomial::zero()
}

impl SuperPolynomial {
    fn min_s_guard(self, k: usize) -> SuperPolynomial {
        // helper retained for readability: delta^{(3)}(u_k) is already zero
        // when k < 3
        let _ = k;
        self
    }
}

/// Counit: send both tiers of x to tier 0 and all odd/u generators to zero,
/// then compare against the identity after relabeling.
fn counit_at(e: &SuperPolynomial, factor: u8, left_tier: u8) -> SuperPolynomial {
    e.apply_hom(
        &|var| match var.kind {
            VarKind::X(t) if t == left_tier + 1 => {
                Some(SuperPolynomial::var(Variable::x_tier(left_tier, var.index as usize)))
            }
            VarKind::U => {
                let (f, k) = decode_u(var.index as usize);
                if f == factor {
                    Some(SuperPolynomial::zero())
                } else {
                    Some(SuperPolynomial::var(u_var(f, k)))
                }
            }
            _ => None,
        },
        &|g| {
            if g.factor == factor {
                SuperPolynomial::zero()
            } else {
                SuperPolynomial::odd(g)
            }
        },
    )
}

/// `(Id (x) eps) . Delta` on an element of the untwisted algebra; equals the
/// identity.
pub fn counit_right_identity(e: &SuperPolynomial, n: usize) -> SuperPolynomial {
    let id = Perm::identity(n);
    let d = coproduct(e, &id, &id, n);
    // eps on factor 2: tiers (1, 2) fuse to 1, factor-2 generators die
    counit_at(&d, 2, 1)
}

/// `(eps (x) Id) . Delta`, relabeled back to tiers (0, 1) and factor 1.
pub fn counit_left_identity(e: &SuperPolynomial, n: usize) -> SuperPolynomial {
    let id = Perm::identity(n);
    let d = coproduct(e, &id, &id, n);
    // eps on factor 1: tiers (0,1) fuse to 0, factor-1 generators die
    let after = counit_at(&d, 1, 0);
    relabel(
        &after,
        &|t| if t == 2 { 1 } else { t },
        &|f| if f == 2 { 1 } else { f },
    )
}

/// Frozen sign assignments for the A-infinity relations, found once by
/// exhaustive search on the smallest nontrivial instances (see the oracle
/// test) and pinned here. Entry `(m, s, a, sign)` with `t = m + 1 - s`.
pub const AINFTY_SIGNS: &[(usize, usize, u8, i32)] = &[
    (3, 2, 1, 1),
    (3, 2, 2, -1),
    (4, 2, 1, 1),
    (4, 2, 2, -1),
    (4, 2, 3, 1),
    (4, 3, 1, -1),
    (4, 3, 2, -1),
];

fn ainfty_sign(m: usize, s: usize, a: u8) -> i32 {
    for &(mm, ss, aa, sign) in AINFTY_SIGNS {
        if mm == m && ss == s && aa == a {
            return sign;
        }
    }
    panic!("no frozen sign for (m, s, a) = ({}, {}, {})", m, s, a);
}

/// Apply `delta^{(s)}` (s >= 3) at factor `a` of an element of the t-fold
/// tensor algebra; only factor-a `u` generators survive.
pub fn apply_higher_at(e: &SuperPolynomial, n: usize, t_factors: usize, a: u8, s: usize) -> SuperPolynomial {
    let _ = t_factors;
    let mut out = SuperPolynomial::zero();
    let deg_op = (s as i32) - 2; // homological degree of delta^{(s)}
    for (m, p) in &e.terms {
        for (mono, c) in p.terms() {
            // split the even monomial: u's at factor a (apply), others relabel
            let mut u_at_a: Vec<(usize, u32)> = Vec::new();
            let mut rest_pairs: Vec<(Variable, u32)> = Vec::new();
            for &(v, ecount) in &mono.0 {
                match v.kind {
                    VarKind::U => {
                        let (f, k) = decode_u(v.index as usize);
                        if f == a {
                            u_at_a.push((k, ecount));
                        } else {
                            let nf = if f > a { f as usize + s - 1 } else { f as usize };
                            rest_pairs.push((u_var(nf as u8, k), ecount));
                        }
                    }
                    VarKind::X(tier) => {
                        let nt = if tier >= a { tier as usize + s - 1 } else { tier as usize };
                        rest_pairs.push((Variable::x_tier(nt as u8, v.index as usize), ecount));
                    }
                    _ => rest_pairs.push((v, ecount)),
                }
            }
            // no factor-a odd generators may be hit by delta^{(s)} (they map
            // to zero) unless the term has a u at factor a times nothing odd
            // at factor a; delta^{(s)} acts as a derivation-free map on the
            // generator only, so we require exactly one u power at factor a
            // and no odd factor-a generators in the term.
            let odd_at_a: Vec<OddGen> = m.0.iter().copied().filter(|g| g.factor == a).collect();
            let total_u_power: u32 = u_at_a.iter().map(|&(_, e)| e).sum();
            if total_u_power != 1 || !odd_at_a.is_empty() {
                continue; // delta^{(s)} kills this factor
            }
            let (k, _) = u_at_a[0];
            // Koszul sign: delta^{(s)} (degree s-2) moves past odd generators
            // in factors < a
            let earlier_odd = m.0.iter().filter(|g| g.factor < a).count();
            let sign = if (deg_op % 2 != 0) && (earlier_odd % 2 == 1) { -1 } else { 1 };
            // image of u_k^{(a)} under delta^{(s)}: factors a..a+s-1, tiers
            // a-1..a+s-1
            let mut img = SuperPolynomial::zero();
            for i in 1..=n {
                if s > k {
                    break;
                }
                let vars: Vec<Variable> = (0..=s)
                    .map(|j| Variable::x_tier(a - 1 + j as u8, i))
                    .collect();
                let h = complete_homogeneous(k - s, &vars);
                let mut xis = SuperPolynomial::from_poly(h);
                for f in 0..s as u8 {
                    xis = xis.mul(&SuperPolynomial::odd(OddGen::xi(a + f, i)));
                }
                img = img.add(&xis);
            }
            if img.is_zero() {
                continue;
            }
            // reassemble: relabeled rest coefficient and odd monomial
            let rest_mono = crate::ring::Monomial::from_pairs(rest_pairs);
            let mut coeff = Polynomial::from_term(rest_mono, c.clone());
            if sign < 0 {
                coeff = -&coeff;
            }
            let relabeled_odd: Vec<OddGen> = m
                .0
                .iter()
                .filter(|g| g.factor != a)
                .map(|&g| {
                    let nf = if g.factor > a { g.factor + s as u8 - 1 } else { g.factor };
                    OddGen { factor: nf, ..g }
                })
                .collect();
            let mut term = SuperPolynomial::from_poly(coeff);
            for g in relabeled_odd {
                term = term.mul(&SuperPolynomial::odd(g));
            }
            out = out.add(&term.mul(&img));
        }
    }
    out
}

/// LHS - RHS of the A-infinity relation applied to `u_k`; must vanish.
pub fn ainfty_defect(m: usize, k: usize, n: usize) -> Result<SuperPolynomial> {
    assert!(m >= 3);
    let id = Perm::identity(n);
    let mut lhs = SuperPolynomial::zero();
    for s in 2..=(m - 1) {
        let t = m + 1 - s;
        if t < 2 {
            continue;
        }
        // delta^{(t)}(u_k)
        let dt = if t == 2 {
            coproduct(&SuperPolynomial::var(u_var(1, k)), &id, &id, n)
        } else {
            higher_coproduct(t, k, n)
        };
        for a in 1..=t as u8 {
            let applied = if s == 2 {
                apply_delta_at(&dt, n, a)
            } else {
                apply_higher_at(&dt, n, t, a, s)
            };
            let sign = ainfty_sign(m, s, a);
            lhs = if sign >= 0 {
                lhs.add(&applied)
            } else {
                lhs.sub(&applied)
            };
        }
    }
    // RHS: d(delta^{(m)}(u_k)); delta^{(m)}(d u_k) = 0 since d u_k has no u's
    let dm = higher_coproduct(m, k, n);
    let spec = AlgebraSpec::TensorA { n, ws: vec![Perm::identity(n); m] };
    let rhs = differential(&dm, &spec)?;
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aalg::algebra::{differential, is_zero_mod_symmetric, u_var, AlgebraSpec};

    fn u(k: usize) -> SuperPolynomial {
        SuperPolynomial::var(u_var(1, k))
    }

    fn xi(i: usize) -> SuperPolynomial {
        SuperPolynomial::odd(OddGen::xi(1, i))
    }

    #[test]
    fn coproduct_of_xi_and_u1() {
        let n = 2;
        let id = Perm::identity(n);
        let d = coproduct(&xi(1), &id, &id, n);
        let expected = SuperPolynomial::odd(OddGen::xi(1, 1))
            .add(&SuperPolynomial::odd(OddGen::xi(2, 1)));
        assert_eq!(d, expected);
        let du1 = coproduct(&u(1), &id, &id, n);
        let expected1 = SuperPolynomial::var(u_var(1, 1)).add(&SuperPolynomial::var(u_var(2, 1)));
        assert_eq!(du1, expected1);
    }

    #[test]
    fn coproduct_of_u2() {
        // Delta(u_2) = u_2 (x) 1 + 1 (x) u_2 + sum_i xi_i (x) xi_i
        let n = 3;
        let id = Perm::identity(n);
        let d = coproduct(&u(2), &id, &id, n);
        let mut expected = SuperPolynomial::var(u_var(1, 2)).add(&SuperPolynomial::var(u_var(2, 2)));
        for i in 1..=n {
            expected = expected.add(
                &SuperPolynomial::odd(OddGen::xi(1, i)).mul(&SuperPolynomial::odd(OddGen::xi(2, i))),
            );
        }
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_is_chain_map() {
        // Delta . d = d . Delta on u_k, exactly in the free ring
        for n in 1..=3usize {
            let id = Perm::identity(n);
            let spec_in = AlgebraSpec::untwisted(n);
            let spec_out = AlgebraSpec::TensorA { n, ws: vec![id.clone(), id.clone()] };
            for k in 1..=n.min(4) {
                let lhs = differential(&coproduct(&u(k), &id, &id, n), &spec_out).unwrap();
                let rhs = coproduct(&differential(&u(k), &spec_in).unwrap(), &id, &id, n);
                assert!(lhs.sub(&rhs).is_zero(), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn twisted_coproduct_is_chain_map() {
        // same check for all pairs (v, w) in S_3
        let n = 3;
        for v in Perm::all(n) {
            for w in Perm::all(n) {
                let vw = v.compose(&w);
                let spec_in = AlgebraSpec::A { n, w: vw };
                let spec_out = AlgebraSpec::TensorA { n, ws: vec![v.clone(), w.clone()] };
                for k in 1..=3usize {
                    let lhs = differential(&coproduct(&u(k), &v, &w, n), &spec_out).unwrap();
                    let rhs = coproduct(&differential(&u(k), &spec_in).unwrap(), &v, &w, n);
                    assert!(lhs.sub(&rhs).is_zero(), "v={} w={} k={}", v, w, k);
                }
                // and on xi generators
                for i in 1..=n {
                    let lhs = differential(&coproduct(&xi(i), &v, &w, n), &spec_out).unwrap();
                    let rhs = coproduct(&differential(&xi(i), &spec_in).unwrap(), &v, &w, n);
                    assert!(lhs.sub(&rhs).is_zero(), "xi v={} w={} i={}", v, w, i);
                }
            }
        }
    }

    #[test]
    fn counit_identities() {
        let n = 3;
        let mut gens: Vec<SuperPolynomial> = Vec::new();
        for i in 1..=n {
            gens.push(xi(i));
            gens.push(SuperPolynomial::var(Variable::x(i)));
            gens.push(SuperPolynomial::var(Variable::xp(i)));
        }
        for k in 1..=n {
            gens.push(u(k));
        }
        for e in gens {
            assert_eq!(counit_right_identity(&e, n), e, "right counit on {}", e);
            assert_eq!(counit_left_identity(&e, n), e, "left counit on {}", e);
        }
    }

    #[test]
    fn higher_coproduct_examples() {
        // delta^3(u_2) = 0; delta^3(u_3) = sum_i xi^1 xi^2 xi^3; delta^5(u_4) = 0
        let n = 2;
        assert!(higher_coproduct(3, 2, n).is_zero());
        let d3u3 = higher_coproduct(3, 3, n);
        let mut expected = SuperPolynomial::zero();
        for i in 1..=n {
            expected = expected.add(
                &SuperPolynomial::odd(OddGen::xi(1, i))
                    .mul(&SuperPolynomial::odd(OddGen::xi(2, i)))
                    .mul(&SuperPolynomial::odd(OddGen::xi(3, i))),
            );
        }
        assert_eq!(d3u3, expected);
        assert!(higher_coproduct(5, 4, n).is_zero());
    }

    #[test]
    fn associativity_homotopy_on_generators() {
        // Delta_1 Delta - Delta_2 Delta = [d, delta^3] on u_k
        for n in 1..=3usize {
            for k in 1..=n.min(4) {
                let d = ainfty_defect(3, k, n).unwrap();
                assert!(d.is_zero(), "m=3 defect nonzero for k={} n={}", k, n);
            }
        }
    }

    #[test]
    fn associativity_homotopy_on_monomials() {
        // the inductive extension satisfies the same identity on sample
        // monomials: x'_1 u_2, u_1 u_2, xi_1 u_2
        let n = 2;
        let id = Perm::identity(n);
        let spec3 = AlgebraSpec::TensorA { n, ws: vec![id.clone(), id.clone(), id.clone()] };
        let spec1 = AlgebraSpec::untwisted(n);
        let samples = vec![
            u(2).mul(&SuperPolynomial::var(Variable::xp(1))),
            u(1).mul(&u(2)),
            xi(1).mul(&u(2)),
            u(2).mul(&u(2)),
        ];
        for e in samples {
            let d1d = apply_delta_at(&coproduct(&e, &id, &id, n), n, 1);
            let d2d = apply_delta_at(&coproduct(&e, &id, &id, n), n, 2);
            let lhs = d1d.sub(&d2d);
            // [d, delta3] = d delta3 + delta3 d (delta3 is odd)
            let rhs = differential(&higher_on_element(&e, n), &spec3)
                .unwrap()
                .add(&higher_on_element(&differential(&e, &spec1).unwrap(), n));
            let defect = lhs.sub(&rhs);
            assert!(
                is_zero_mod_symmetric(&defect, n, 4),
                "extension defect for {}: {}",
                e,
                defect
            );
        }
    }

    #[test]
    fn ainfty_defects_vanish() {
        for n in 1..=3usize {
            for k in 1..=4usize {
                for m in 3..=k {
                    let d = ainfty_defect(m, k, n).unwrap();
                    assert!(d.is_zero(), "A-infinity defect (m={}, k={}, n={})", m, k, n);
                }
            }
        }
    }

    /// Oracle: exhaustive sign search on the smallest nontrivial instance
    /// confirming the frozen sign table for m = 4.
    #[test]
    fn ainfty_sign_search_oracle() {
        let n = 2;
        let k = 4;
        let m = 4;
        let id = Perm::identity(n);
        // terms: (s=2, a=1..3), (s=3, a=1..2)
        let d3 = higher_coproduct(3, k, n);
        let d2 = coproduct(&u(k), &id, &id, n);
        let terms: Vec<SuperPolynomial> = vec![
            apply_delta_at(&d3, n, 1),
            apply_delta_at(&d3, n, 2),
            apply_delta_at(&d3, n, 3),
            apply_higher_at(&d2, n, 2, 1, 3),
            apply_higher_at(&d2, n, 2, 2, 3),
        ];
        let spec = AlgebraSpec::TensorA { n, ws: vec![id.clone(); m] };
        let rhs = differential(&higher_coproduct(m, k, n), &spec).unwrap();
        let mut found = Vec::new();
        for mask in 0..(1 << terms.len()) {
            let mut lhs = SuperPolynomial::zero();
            for (j, t) in terms.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    lhs = lhs.sub(t);
                } else {
                    lhs = lhs.add(t);
                }
            }
            if lhs.sub(&rhs).is_zero() {
                found.push(mask);
            }
        }
        // the frozen signs correspond to mask with s=2,a=2 negative and
        // s=3 (both a) negative: bits 1, 3, 4
        assert!(
            found.contains(&0b11010),
            "frozen sign table not among solutions {:?}",
            found
        );
    }
}
