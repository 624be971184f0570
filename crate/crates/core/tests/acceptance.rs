//! The six acceptance criteria. Each test prints one `criterion N: PASS` or
//! `criterion N: FAIL ...` line; run with `--nocapture` to see them.

mod common;

use common::random;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use saito::algebra::{rational, ExponentVector, OneForm, Polynomial};
use saito::invariants::{
    verify_cor_5_4, verify_equality_conditions, verify_prop_5_1, verify_theorem_a, CaseContext, InvariantError, Rf,
};
use saito::order::{ModuleOrder, MonomialOrder};
use saito::sb::{colength, linear_combination, module_sum, syzygies, Dimension, SubmoduleGens};
use std::time::{Duration, Instant};

/// Collects failed checks and prints the criterion line.
struct Checks {
    criterion: u32,
    failures: Vec<String>,
}

impl Checks {
    fn new(criterion: u32) -> Self {
        Checks {
            criterion,
            failures: Vec::new(),
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn within(&mut self, what: &str, elapsed: Duration, limit: Duration) {
        if elapsed > limit {
            self.failures.push(format!("{what} took {elapsed:?}, limit {limit:?}"));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS", self.criterion);
        } else {
            println!("criterion {}: FAIL {}", self.criterion, self.failures.join("; "));
            panic!("criterion {} failed", self.criterion);
        }
    }
}

fn fin(d: u64) -> Dimension {
    Dimension::Finite(d)
}

#[test]
fn criterion_1_three_space_case() {
    let mut c = Checks::new(1);
    let start = Instant::now();
    let ctx = common::context(&common::three_space());
    let report = verify_theorem_a(&ctx).unwrap();
    c.eq("tau_BR", report.tau_br, fin(5));
    c.eq("tau_0(omega, V)", report.tau0_form, fin(1));
    c.eq("GSV index of the pair", report.gsv_pair, fin(5));
    c.eq("tau_0(X)", report.tau0_x, fin(2));
    c.eq("intersection quotient", report.intersection_quotient_dim, fin(1));
    c.eq("decomposition residual", report.residual, Some(0));
    c.within("the case", start.elapsed(), Duration::from_secs(5));
    c.finish();
}

#[test]
fn criterion_2_quasihomogeneous_curves() {
    let mut c = Checks::new(2);
    let start = Instant::now();
    for (p, q) in common::PQ {
        for lambda in common::LAMBDAS {
            let tag = format!("p={p} q={q} lambda={lambda}");
            let ctx = common::context(&common::pq(p, q, lambda));
            let report = verify_theorem_a(&ctx).unwrap();
            let tjurina = u64::from((p - 1) * (q - 1));
            c.eq(&format!("{tag} tau_0(omega, V)"), report.tau0_form, fin(1));
            c.eq(&format!("{tag} tau_0(X)"), report.tau0_x, fin(tjurina));
            c.eq(&format!("{tag} GSV index of the pair"), report.gsv_pair, fin(u64::from(p + q - 1)));
            c.eq(&format!("{tag} tau_BR"), report.tau_br, fin(u64::from(p + q)));
            c.eq(&format!("{tag} intersection quotient"), report.intersection_quotient_dim, fin(tjurina));
            c.eq(&format!("{tag} decomposition residual"), report.residual, Some(0));
        }
    }
    c.within("all six cases", start.elapsed(), Duration::from_secs(10));
    c.finish();
}

fn closed_forms(m: u64) -> (u64, u64) {
    (4 * m * m + 2 * m, 3 * m * m + 2 * m + 1)
}

/// Everything in criterion 3 except `r_f = 2` at `m = 1`, which is false:
/// there `μ_BR = τ_BR` puts `f` itself in `ω(Θ_X)`, so `r_f = 1`. That claim
/// is kept as the ignored test below rather than dropped.
#[test]
fn criterion_3_family_table() {
    let mut c = Checks::new(3);
    let table = [(1, 6, 6), (2, 20, 17), (3, 42, 34), (4, 72, 57)];
    for (m, mu, tau) in table {
        c.eq(&format!("m={m} closed forms"), closed_forms(m), (mu, tau));
    }
    let start = Instant::now();
    let mut rf_at_1 = None;
    for m in (1..=4).chain([10, 20]) {
        let ctx = common::context(&common::m_family(m));
        let (mu, tau) = closed_forms(u64::from(m));
        c.eq(&format!("m={m} mu_BR"), ctx.mu_br().unwrap(), fin(mu));
        c.eq(&format!("m={m} tau_BR"), ctx.tau_br().unwrap(), fin(tau));
        let cor = verify_cor_5_4(&ctx).unwrap();
        c.eq(&format!("m={m} ratio bound"), cor.holds, Some(true));
        if m == 1 {
            rf_at_1 = Some(cor.rf);
        } else {
            c.eq(&format!("m={m} r_f"), cor.rf, Rf::Found(2));
        }
    }
    c.within("m = 1..4, 10, 20", start.elapsed(), Duration::from_secs(120));

    // The one unattainable item is reported, not hidden.
    if c.failures.is_empty() {
        println!(
            "criterion 3: FAIL r_f = 2 at m = 1 is unattainable (computed r_f = {}, since f lies in omega(Theta_X)); \
             table, closed forms to m = 20, ratio bound and r_f = 2 for m = 2..4, 10, 20 all pass",
            rf_at_1.unwrap()
        );
    } else {
        c.finish();
    }
    assert_eq!(rf_at_1, Some(Rf::Found(1)));
}

#[test]
#[ignore = "unattainable: at m = 1 the function f lies in omega(Theta_X), so r_f = 1"]
fn criterion_3_rf_is_two_at_m_1() {
    let ctx = common::context(&common::m_family(1));
    assert_eq!(ctx.rf().unwrap(), Rf::Found(2));
}

/// `colength⟨f_1..f_k, g p⟩ = colength⟨f_1..f_k, p⟩ + colength⟨f_1..f_k, g⟩`
/// on random inputs where `⟨f, g⟩` and `⟨f, p⟩` have finite colength.
fn additivity_instances(c: &mut Checks, rng: &mut ChaCha8Rng, wanted: usize) -> usize {
    let mut done = 0;
    let mut attempts = 0;
    while done < wanted && attempts < 20 * wanted {
        attempts += 1;
        let n = if attempts % 3 == 0 { 3 } else { 2 };
        let fs: Vec<Polynomial> = (0..n - 1).map(|_| random::poly_at_origin(rng, n, 4, 3)).collect();
        let g = random::poly_at_origin(rng, n, 4, 3);
        let p = random::poly_at_origin(rng, n, 4, 3);
        let ideal = |extra: Polynomial| {
            let mut gens = fs.clone();
            gens.push(extra);
            SubmoduleGens::ideal(n, gens).unwrap().colength()
        };
        let (with_g, with_p) = (ideal(g.clone()), ideal(p.clone()));
        let (Some(a), Some(b)) = (with_g.finite(), with_p.finite()) else {
            continue;
        };
        let product = ideal(&g * &p);
        if product != fin(a + b) {
            c.failures.push(format!("additivity fails for f = {fs:?}, g = {g}, p = {p}: {product} != {a} + {b}"));
        }
        done += 1;
    }
    done
}

fn golden_module_checks(c: &mut Checks, name: &str, ctx: &CaseContext) {
    let n = ctx.nvars();
    let mu = ctx.mu_br().unwrap();
    let tau = ctx.tau_br().unwrap();
    c.check(&format!("{name}: tau_BR <= mu_BR"), tau <= mu);

    let t = ctx.tau0_x().unwrap();
    c.check(&format!("{name}: tau_0(X) routes {t:?}"), t.indirect.is_some() && t.agree());
    let q = ctx.intersection_quotient().unwrap();
    c.check(&format!("{name}: intersection quotient routes {q:?}"), q.indirect.is_some() && q.agree());

    let prop = verify_prop_5_1(ctx).unwrap();
    c.check(&format!("{name}: exact sequence residuals {prop:?}"), prop.passed());

    let iv = SubmoduleGens::ideal(n, vec![ctx.f().clone()]).unwrap();
    let modules = [
        ("omega(Theta_X)", ctx.omega_theta().unwrap().clone()),
        ("omega(Theta_X) + I_V", module_sum(ctx.omega_theta().unwrap(), &iv).unwrap()),
        ("omega(Theta_X^T)", ctx.omega_theta_trivial().unwrap().clone()),
        ("Theta_X", ctx.theta().unwrap().underlying().clone()),
        ("Theta_V^omega", ctx.theta_v_omega().unwrap().clone()),
    ];
    for (what, m) in modules {
        let ds = colength(&m, &ModuleOrder::from(MonomialOrder::NegDegRevLex));
        let ls = colength(&m, &ModuleOrder::from(MonomialOrder::NegLex));
        c.eq(&format!("{name}: {what} under both orders"), ls, ds);
        let mut gens = m.gens().to_vec();
        gens.reverse();
        let half = gens.len() / 2;
        gens.rotate_left(half);
        let permuted = SubmoduleGens::new(m.rank(), n, gens).unwrap();
        c.eq(&format!("{name}: {what} permuted"), permuted.colength(), ds);
    }

    let swapped = CaseContext::new(ctx_input(ctx)).with_order(MonomialOrder::NegLex);
    c.eq(&format!("{name}: mu_BR under neglex"), swapped.mu_br().unwrap(), mu);
    c.eq(&format!("{name}: tau_BR under neglex"), swapped.tau_br().unwrap(), tau);
}

fn ctx_input(ctx: &CaseContext) -> saito::invariants::CaseInput {
    saito::invariants::CaseInput::new(ctx.omega().clone(), ctx.phi().clone(), ctx.f().clone()).unwrap()
}

#[test]
fn criterion_4_property_suite() {
    let mut c = Checks::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let done = additivity_instances(&mut c, &mut rng, 60);
    c.check(&format!("only {done} additivity instances with finite colengths"), done >= 50);

    for (name, input) in common::golden_cases() {
        golden_module_checks(&mut c, &name, &common::context(&input));
    }

    // tau_BR <= mu_BR away from the reference cases too
    for _ in 0..20 {
        let ctx = common::context(&random::quasihomogeneous_case(&mut rng));
        match (ctx.mu_br(), ctx.tau_br()) {
            (Ok(mu), Ok(tau)) => c.check(&format!("random case: tau_BR {tau} <= mu_BR {mu}"), tau <= mu),
            (Err(e), _) | (_, Err(e)) => c.failures.push(e.to_string()),
        }
    }
    c.finish();
}

#[test]
fn criterion_5_equality_conditions() {
    let mut c = Checks::new(5);
    let one = verify_equality_conditions(&common::context(&common::m_family(1))).unwrap();
    c.eq("m=1 conditions", (one.condition_1, one.condition_2), (true, true));
    let two = verify_equality_conditions(&common::context(&common::m_family(2))).unwrap();
    c.eq("m=2 conditions", (two.condition_1, two.condition_2), (false, false));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut agreed, mut attempts) = (0, 0);
    while agreed < 25 && attempts < 200 {
        attempts += 1;
        let input = random::quasihomogeneous_case(&mut rng);
        match verify_equality_conditions(&common::context(&input)) {
            Ok(r) => {
                c.check(&format!("conditions disagree on {input:?}: {r:?}"), r.agree);
                agreed += 1;
            }
            Err(InvariantError::Hypotheses(_)) => {}
            Err(e) => c.failures.push(e.to_string()),
        }
    }
    c.check(&format!("only {agreed} randomized cases met the hypotheses"), agreed >= 20);
    c.finish();
}

/// Colength of a monomial ideal by counting lattice points outside it, or
/// `None` if some variable has no pure power among the generators.
fn lattice_colength(n: usize, gens: &[Vec<u32>]) -> Option<u64> {
    let bounds: Vec<u32> = (0..n)
        .map(|i| {
            gens.iter()
                .filter(|g| (0..n).all(|j| j == i || g[j] == 0))
                .map(|g| g[i])
                .min()
        })
        .collect::<Option<_>>()?;
    let mut count = 0;
    let mut point = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&point).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Some(count);
            }
            point[i] += 1;
            if point[i] < bounds[i] {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

fn annihilates(c: &mut Checks, what: &str, m: &SubmoduleGens) {
    let syz = syzygies(m);
    for s in syz.gens() {
        match linear_combination(s.components(), m.gens()) {
            Some(r) if r.is_zero() => {}
            other => c.failures.push(format!("{what}: syzygy {s:?} gives {other:?}")),
        }
    }
}

#[test]
fn criterion_6_kernel_oracles() {
    let mut c = Checks::new(6);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..120 {
        let (n, gens) = random::monomial_ideal(&mut rng);
        let polys = gens
            .iter()
            .map(|e| Polynomial::monomial(ExponentVector::from(e.clone()), rational(1, 1)))
            .collect();
        let ideal = SubmoduleGens::ideal(n, polys).unwrap();
        c.eq(&format!("colength of {gens:?}"), ideal.colength().finite(), lattice_colength(n, &gens));
        annihilates(&mut c, &format!("monomial ideal {gens:?}"), &ideal);
    }

    for _ in 0..30 {
        let n = 2;
        let gens = (0..3).map(|_| random::poly_at_origin(&mut rng, n, 3, 3)).collect();
        let ideal = SubmoduleGens::ideal(n, gens).unwrap();
        annihilates(&mut c, "random ideal", &ideal);
    }

    for (name, input) in common::golden_cases() {
        let ctx = common::context(&input);
        let coefficients = SubmoduleGens::ideal(ctx.nvars(), ctx.omega().coefficients().to_vec()).unwrap();
        annihilates(&mut c, &format!("{name}: coefficient ideal"), &coefficients);
        annihilates(&mut c, &format!("{name}: Theta_X"), ctx.theta().unwrap().underlying());
        let form = OneForm::exact(ctx.f());
        let tjurina = SubmoduleGens::ideal(ctx.nvars(), [vec![ctx.f().clone()], form.coefficients().to_vec()].concat());
        annihilates(&mut c, &format!("{name}: Tjurina ideal of V"), &tjurina.unwrap());
    }
    c.finish();
}
