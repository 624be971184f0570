use super::*;
use crate::algebra::{rational, Rational};
use crate::sb::Dimension::{Finite, Infinite};

fn vars(n: usize) -> Vec<Polynomial> {
    (0..n).map(|i| Polynomial::var(n, i)).collect()
}

fn int(n: usize, c: i64) -> Polynomial {
    Polynomial::from_int(n, c)
}

fn form(coeffs: Vec<Polynomial>) -> OneForm {
    OneForm::new(coeffs).unwrap()
}

/// `φ = x^3 + yz`, `f = x^2 + y^2 + z^2`, `ω = df + f (z dx + x dy + y dz)`.
fn three_space_case() -> CaseInput {
    let v = vars(3);
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let phi = &x.pow(3) + &(y * z);
    let f = &(&x.pow(2) + &y.pow(2)) + &z.pow(2);
    let eta = form(vec![z.clone(), x.clone(), y.clone()]);
    let omega = OneForm::df_plus_f_eta(&f, &eta).unwrap();
    CaseInput::new(omega, phi, f).unwrap()
}

/// `φ = y^p - x^q`, `f = xy`, `ω = y dx + λ x dy`.
fn quasihomogeneous_case(p: u32, q: u32, lambda: Rational) -> CaseInput {
    let v = vars(2);
    let (x, y) = (&v[0], &v[1]);
    let omega = form(vec![y.clone(), x.scale(&lambda)]);
    CaseInput::new(omega, &y.pow(p) - &x.pow(q), x * y).unwrap()
}

/// `φ = xy`, `f = x^(2m+1) + x^m y^(m+1) + y^(2m)`, `ω = df + f (y dx + x dy)`.
fn family_case(m: u32) -> CaseInput {
    let v = vars(2);
    let (x, y) = (&v[0], &v[1]);
    let f = &(&x.pow(2 * m + 1) + &(&x.pow(m) * &y.pow(m + 1))) + &y.pow(2 * m);
    let eta = form(vec![y.clone(), x.clone()]);
    let omega = OneForm::df_plus_f_eta(&f, &eta).unwrap();
    CaseInput::new(omega, x * y, f).unwrap()
}

#[test]
fn milnor_numbers() {
    let v = vars(2);
    let (x, y) = (&v[0], &v[1]);
    assert_eq!(milnor_number(&form(vec![x.clone(), y.clone()])), Finite(1));
    // quasihomogeneous with weights (1/3, 1/4): (3 - 1)(4 - 1)
    assert_eq!(milnor_number(&OneForm::exact(&(&x.pow(3) + &y.pow(4)))), Finite(6));
    let lambda = rational(-7, 3);
    assert_eq!(milnor_number(&form(vec![y.clone(), x.scale(&lambda)])), Finite(1));
    assert_eq!(milnor_number(&form(vec![x.clone(), Polynomial::zero(2)])), Infinite);
}

#[test]
fn tjurina_numbers() {
    let v = vars(3);
    let f = &(&v[0].pow(2) + &v[1].pow(2)) + &v[2].pow(2);
    assert_eq!(tjurina_hypersurface(&f), Finite(1));
    let w = vars(2);
    for (p, q) in [(2u32, 3u32), (3, 4), (2, 5), (4, 5)] {
        let phi = &w[1].pow(p) - &w[0].pow(q);
        assert_eq!(tjurina_hypersurface(&phi), Finite(u64::from((p - 1) * (q - 1))));
    }
}

#[test]
fn form_tjurina_numbers() {
    let c = three_space_case();
    assert_eq!(tjurina_form(c.omega(), c.f()).unwrap(), Finite(1));
    for lambda in [rational(2, 1), rational(5, 1), rational(-7, 3)] {
        let c = quasihomogeneous_case(2, 3, lambda);
        assert_eq!(tjurina_form(c.omega(), c.f()).unwrap(), Finite(1));
    }
    let w = vars(2);
    let f = &w[1].pow(2) - &w[0].pow(3);
    assert_eq!(tjurina_form(&OneForm::exact(&f), &f).unwrap(), tjurina_hypersurface(&f));
}

#[test]
fn form_tjurina_rejects_non_invariant_hypersurface() {
    let c = quasihomogeneous_case(2, 3, rational(2, 1));
    let err = tjurina_form(c.omega(), c.phi()).unwrap_err();
    match err {
        InvariantError::Hypotheses(h) => assert!(matches!(h[0], Hypothesis::VInvariant { .. })),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn bruce_roberts_numbers() {
    let c = three_space_case();
    let ctx = CaseContext::new(c);
    assert_eq!(ctx.tau_br().unwrap(), Finite(5));
    for (p, q) in [(2u32, 3u32), (3, 4), (2, 5)] {
        let ctx = CaseContext::new(quasihomogeneous_case(p, q, rational(2, 1)));
        assert_eq!(ctx.tau_br().unwrap(), Finite(u64::from(p + q)));
    }
    let expected = [(6, 6), (20, 17), (42, 34), (72, 57)];
    for (m, (mu, tau)) in (1..=4).zip(expected) {
        let ctx = CaseContext::new(family_case(m));
        assert_eq!((ctx.mu_br().unwrap(), ctx.tau_br().unwrap()), (Finite(mu), Finite(tau)), "m={m}");
    }
}

#[test]
fn bruce_roberts_of_smooth_curve() {
    // Θ_X = <x ∂/∂x, ∂/∂y>, so ω(Θ_X) = <x^2, y>
    let v = vars(2);
    let omega = form(v.clone());
    let x = Variety::hypersurface(v[0].clone()).unwrap();
    assert_eq!(mu_br(&omega, &x).unwrap(), Finite(2));
}

#[test]
fn gsv_indices() {
    let w = vars(2);
    let (x, y) = (&w[0], &w[1]);
    let cusp = &y.pow(2) - &x.pow(3);
    // <y^2 - x^3, xy (2 + 3x)> has standard monomials 1, x, x^2, x^3, y;
    // Le-Greuel: mu(cusp) + i(cusp, x^2 + y^2) - 1 = 2 + 4 - 1
    let omega = form(w.clone());
    let x_var = Variety::hypersurface(cusp.clone()).unwrap();
    assert_eq!(gsv_index(&omega, &x_var).unwrap(), Finite(5));
    // two quasihomogeneous curves of weighted degrees meeting in p q points
    for (p, q) in [(2u32, 3u32), (3, 4)] {
        let c = quasihomogeneous_case(p, q, rational(2, 1));
        assert_eq!(gsv_index(c.omega(), c.variety()).unwrap(), Finite(u64::from(p * q)));
        assert_eq!(gsv_index_pair(c.omega(), c.phi(), c.f()).unwrap(), Finite(u64::from(p + q - 1)));
    }
    let c = three_space_case();
    assert_eq!(gsv_index_pair(c.omega(), c.phi(), c.f()).unwrap(), Finite(5));
    let err = gsv_index(&OneForm::exact(&cusp), &x_var).unwrap_err();
    assert_eq!(err, InvariantError::hypothesis(Hypothesis::XNotInvariant));
}

#[test]
fn tjurina_of_x_two_ways() {
    let c = three_space_case();
    let t = tau0_x(c.omega(), c.phi()).unwrap();
    assert_eq!(t.direct, Finite(2));
    assert_eq!(t.indirect, Some(Finite(2)));
    for (p, q) in [(2u32, 3u32), (3, 4), (2, 5)] {
        let c = quasihomogeneous_case(p, q, rational(5, 1));
        let t = tau0_x(c.omega(), c.phi()).unwrap();
        let want = Finite(u64::from((p - 1) * (q - 1)));
        assert_eq!((t.direct, t.indirect), (want, Some(want)));
    }
    let w = vars(2);
    let t = tau0_x(&form(w.clone()), &(&w[0] * &w[1])).unwrap();
    assert_eq!(t.direct, Finite(1));
}

#[test]
fn intersection_quotients() {
    let c = three_space_case();
    let q = intersection_quotient_dim(c.omega(), c.phi(), c.f()).unwrap();
    assert_eq!((q.direct, q.indirect), (Finite(1), Some(Finite(1))));
    for (p, qq) in [(2u32, 3u32), (3, 4)] {
        let c = quasihomogeneous_case(p, qq, rational(2, 1));
        let r = intersection_quotient_dim(c.omega(), c.phi(), c.f()).unwrap();
        let want = Finite(u64::from((p - 1) * (qq - 1)));
        assert_eq!((r.direct, r.indirect), (want, Some(want)));
    }
}

#[test]
fn bar_invariants() {
    let c = quasihomogeneous_case(2, 3, rational(2, 1));
    let ctx = CaseContext::new(c.clone());
    assert_eq!(ctx.mu0(), Finite(1));
    let m = mubar(c.omega(), c.phi()).unwrap();
    assert_eq!(Some(m.direct), difference(ctx.mu_br().unwrap(), Finite(1)));
    let c = three_space_case();
    let t = taubar(c.omega(), c.phi(), c.f()).unwrap();
    assert_eq!((t.direct, t.indirect), (Finite(4), Some(Finite(4))));
}

#[test]
fn bar_invariants_vanish_when_theta_x_is_everything() {
    // X smooth and transverse: Θ_X + H_ω is all of Θ_n
    let w = vars(2);
    let omega = form(vec![int(2, 1), Polynomial::zero(2)]);
    let m = mubar(&omega, &w[1]).unwrap();
    assert_eq!(m.direct, Finite(0));
}

#[test]
fn rf_search() {
    // at m = 1, mu_BR = tau_BR forces f into omega(Theta_X)
    assert_eq!(CaseContext::new(family_case(1)).rf().unwrap(), Rf::Found(1));
    for m in 2..=4 {
        let mut ctx = CaseContext::new(family_case(m));
        assert_eq!(ctx.rf().unwrap(), Rf::Found(2), "m={m}");
        ctx.set_rf_cap(1);
        assert_eq!(ctx.rf().unwrap(), Rf::NotFound { at_least: 2 });
    }
    let w = vars(2);
    let f = &w[0] * &w[1];
    let omega = form(vec![w[0].clone(), f.clone()]);
    assert_eq!(rf(&omega, &w[0], &f, 8).unwrap(), Rf::Found(1));
}

#[test]
fn foliation_gsv() {
    let w = vars(2);
    let f = &w[1].pow(2) - &w[0].pow(3);
    assert_eq!(gsv_foliation(&OneForm::exact(&f), &f).unwrap(), 0);
    let c = quasihomogeneous_case(2, 3, rational(2, 1));
    assert_eq!(gsv_foliation(c.omega(), c.f()).unwrap(), 0);
    let c = family_case(1);
    let ctx = CaseContext::new(c.clone());
    let expected = signed(ctx.tau0_form().unwrap()).unwrap() - signed(ctx.tau0_v()).unwrap();
    assert_eq!(gsv_foliation(c.omega(), c.f()).unwrap(), expected);
    let c = three_space_case();
    assert!(matches!(
        gsv_foliation(c.omega(), c.f()),
        Err(InvariantError::Hypotheses(h)) if h == vec![Hypothesis::Plane { nvars: 3 }]
    ));
}

#[test]
fn decomposition_identity() {
    let r = verify_theorem_a(&CaseContext::new(three_space_case())).unwrap();
    assert_eq!(
        (r.tau_br, r.gsv_pair, r.tau0_form, r.tau0_x, r.intersection_quotient_dim),
        (Finite(5), Finite(5), Finite(1), Finite(2), Finite(1))
    );
    assert_eq!(r.residual, Some(0));
    let r = verify_theorem_a(&CaseContext::new(quasihomogeneous_case(2, 3, rational(2, 1)))).unwrap();
    assert_eq!(
        (r.tau_br, r.gsv_pair, r.tau0_form, r.tau0_x, r.intersection_quotient_dim),
        (Finite(5), Finite(4), Finite(1), Finite(2), Finite(2))
    );
    assert!(r.passed());
    assert!(verify_theorem_a(&CaseContext::new(family_case(1))).unwrap().passed());
}

#[test]
fn decomposition_identity_refuses_invariant_x() {
    let w = vars(2);
    let f = &w[0] * &w[1];
    let c = CaseInput::new(OneForm::exact(&f), f.clone(), f.clone()).unwrap();
    let err = verify_theorem_a(&CaseContext::new(c)).unwrap_err();
    assert_eq!(err, InvariantError::hypothesis(Hypothesis::XNotInvariant));
}

#[test]
fn exact_sequence_identities() {
    for c in [three_space_case(), quasihomogeneous_case(3, 4, rational(5, 1))] {
        let r = verify_prop_5_1(&CaseContext::new(c)).unwrap();
        assert!(r.passed(), "{r:?}");
    }
    let w = vars(2);
    let f = &w[0].pow(2) + &w[1].pow(2);
    let c = CaseInput::new(OneForm::exact(&f), w[0].clone(), f).unwrap();
    assert!(verify_prop_5_1(&CaseContext::new(c)).unwrap().passed());
}

#[test]
fn equality_conditions() {
    let r = verify_equality_conditions(&CaseContext::new(family_case(1))).unwrap();
    assert!(r.condition_1 && r.condition_2 && r.agree, "{r:?}");
    let r = verify_equality_conditions(&CaseContext::new(family_case(2))).unwrap();
    assert!(!r.condition_1 && !r.condition_2 && r.agree, "{r:?}");
}

#[test]
fn ratio_bound() {
    let r = verify_cor_5_4(&CaseContext::new(family_case(2))).unwrap();
    assert_eq!(r.ratio, verify::Ratio::new(20, 17));
    assert_eq!(r.rf, Rf::Found(2));
    assert_eq!(r.holds, Some(true));
    let mut ctx = CaseContext::new(family_case(2));
    ctx.set_rf_cap(1);
    assert_eq!(verify_cor_5_4(&ctx).unwrap().holds, None);
}
