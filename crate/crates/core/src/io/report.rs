//! Reports: which invariants and identities to evaluate for a case, and their
//! JSON and text renderings.

use super::case::{CaseFile, CaseInstance};
use super::parse::format_rational;
use crate::invariants::{
    verify_cor_5_4, verify_equality_conditions, verify_prop_5_1, verify_theorem_a, CaseContext, InvariantError, Rf,
};
use crate::sb::Dimension;
use serde::{Deserialize, Serialize};
use std::fmt::{self, Write as _};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Mu0,
    Tau0V,
    Tau0OmegaV,
    Tau0X,
    MuBr,
    TauBr,
    GsvX,
    GsvXV,
    Mubar,
    Taubar,
    Rf,
    IntersectionQuotient,
}

impl Invariant {
    pub const ALL: [Invariant; 12] = [
        Invariant::Mu0,
        Invariant::Tau0V,
        Invariant::Tau0OmegaV,
        Invariant::Tau0X,
        Invariant::MuBr,
        Invariant::TauBr,
        Invariant::GsvX,
        Invariant::GsvXV,
        Invariant::Mubar,
        Invariant::Taubar,
        Invariant::Rf,
        Invariant::IntersectionQuotient,
    ];

    /// The key used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Mu0 => "mu0",
            Invariant::Tau0V => "tau0_V",
            Invariant::Tau0OmegaV => "tau0_omega_V",
            Invariant::Tau0X => "tau0_X",
            Invariant::MuBr => "mu_BR",
            Invariant::TauBr => "tau_BR",
            Invariant::GsvX => "gsv_X",
            Invariant::GsvXV => "gsv_XV",
            Invariant::Mubar => "mubar",
            Invariant::Taubar => "taubar",
            Invariant::Rf => "rf",
            Invariant::IntersectionQuotient => "intersection_quotient_dim",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Names are matched ignoring case, with `-` read as `_`.
impl FromStr for Invariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        if key == "intersection_quotient" {
            return Ok(Invariant::IntersectionQuotient);
        }
        Invariant::ALL
            .into_iter()
            .find(|i| i.name().to_ascii_lowercase() == key)
            .ok_or_else(|| {
                let names: Vec<_> = Invariant::ALL.iter().map(|i| i.name()).collect();
                format!("unknown invariant `{s}`; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    TheoremA,
    Prop51,
    Equality,
    Cor54,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::TheoremA, Identity::Prop51, Identity::Equality, Identity::Cor54];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TheoremA => "theorem-a",
            Identity::Prop51 => "prop-5-1",
            Identity::Equality => "equality",
            Identity::Cor54 => "cor-5-4",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct InvariantReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu0: Option<Dimension>,
    #[serde(rename = "tau0_V", skip_serializing_if = "Option::is_none")]
    pub tau0_v: Option<Dimension>,
    #[serde(rename = "tau0_omega_V", skip_serializing_if = "Option::is_none")]
    pub tau0_omega_v: Option<Dimension>,
    #[serde(rename = "tau0_X", skip_serializing_if = "Option::is_none")]
    pub tau0_x: Option<Dimension>,
    #[serde(rename = "mu_BR", skip_serializing_if = "Option::is_none")]
    pub mu_br: Option<Dimension>,
    #[serde(rename = "tau_BR", skip_serializing_if = "Option::is_none")]
    pub tau_br: Option<Dimension>,
    #[serde(rename = "gsv_X", skip_serializing_if = "Option::is_none")]
    pub gsv_x: Option<Dimension>,
    #[serde(rename = "gsv_XV", skip_serializing_if = "Option::is_none")]
    pub gsv_xv: Option<Dimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mubar: Option<Dimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub taubar: Option<Dimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rf: Option<Rf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_quotient_dim: Option<Dimension>,
}

impl InvariantReport {
    /// `(name, value)` pairs of the populated entries, in report order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let dims = [
            (Invariant::Mu0, self.mu0),
            (Invariant::Tau0V, self.tau0_v),
            (Invariant::Tau0OmegaV, self.tau0_omega_v),
            (Invariant::Tau0X, self.tau0_x),
            (Invariant::MuBr, self.mu_br),
            (Invariant::TauBr, self.tau_br),
            (Invariant::GsvX, self.gsv_x),
            (Invariant::GsvXV, self.gsv_xv),
            (Invariant::Mubar, self.mubar),
            (Invariant::Taubar, self.taubar),
        ];
        let mut out: Vec<_> = dims
            .into_iter()
            .filter_map(|(i, d)| d.map(|d| (i.name(), d.to_string())))
            .collect();
        if let Some(rf) = self.rf {
            out.push((Invariant::Rf.name(), rf.to_string()));
        }
        if let Some(d) = self.intersection_quotient_dim {
            out.push((Invariant::IntersectionQuotient.name(), d.to_string()));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub v_invariant: bool,
    pub x_invariant: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityFlags {
    pub condition_1: bool,
    pub condition_2: bool,
    pub agree: bool,
}

/// Residuals (`lhs - rhs`) and truth values of the verified identities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Identities {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop_5_1_mu: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prop_5_1_tau: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cor_5_4: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<EqualityFlags>,
}

/// Why an invariant or identity has no value in the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// The input fails a hypothesis.
    Hypothesis,
    /// An identity does not hold, or two routes to one number disagree.
    Failed,
    /// A search hit its cap before deciding.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Problem {
    pub item: String,
    pub outcome: Outcome,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub ring: Vec<String>,
    #[serde(rename = "X")]
    pub x: String,
    #[serde(rename = "V")]
    pub v: String,
    pub omega: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

impl CaseSummary {
    pub fn new(file: &CaseFile, inst: &CaseInstance) -> Self {
        let input = &inst.input;
        CaseSummary {
            ring: file.vars.clone(),
            x: file.render(input.phi()),
            v: file.render(input.f()),
            omega: input.omega().coefficients().iter().map(|c| file.render(c)).collect(),
            lambda: inst.lambda.as_ref().map(format_rational),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionsSummary {
    pub order: String,
    pub rf_cap: u32,
}

/// Everything computed for one case instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub case: CaseSummary,
    pub options: OptionsSummary,
    pub invariants: InvariantReport,
    pub flags: Flags,
    pub identities: Identities,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<Problem>,
}

impl ReportDocument {
    pub fn has(&self, outcome: Outcome) -> bool {
        self.problems.iter().any(|p| p.outcome == outcome)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The aligned human-readable table.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        let mut out = String::new();
        let c = &self.case;
        let _ = writeln!(out, "ring     {}", c.ring.join(", "));
        let _ = writeln!(out, "X        {}", c.x);
        let _ = writeln!(out, "V        {}", c.v);
        let _ = writeln!(out, "omega    ({})", c.omega.join(", "));
        if let Some(l) = &c.lambda {
            let _ = writeln!(out, "lambda   {l}");
        }
        let _ = writeln!(out, "order    {}, rf cap {}", self.options.order, self.options.rf_cap);
        for (k, v) in self.invariants.entries() {
            rows.push((k.to_string(), v));
        }
        rows.push(("v_invariant".into(), self.flags.v_invariant.to_string()));
        rows.push(("x_invariant".into(), self.flags.x_invariant.to_string()));
        let id = &self.identities;
        let residuals = [
            ("theorem_a residual", id.theorem_a),
            ("prop_5_1_mu residual", id.prop_5_1_mu),
            ("prop_5_1_tau residual", id.prop_5_1_tau),
        ];
        for (k, v) in residuals {
            if let Some(v) = v {
                rows.push((k.into(), v.to_string()));
            }
        }
        if let Some(h) = id.cor_5_4 {
            rows.push(("cor_5_4 holds".into(), h.to_string()));
        }
        if let Some(e) = id.equality {
            rows.push(("equality condition (1)".into(), e.condition_1.to_string()));
            rows.push(("equality condition (2)".into(), e.condition_2.to_string()));
            rows.push(("equality agree".into(), e.agree.to_string()));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            let _ = writeln!(out, "  {k:<width$}  {v}");
        }
        for p in &self.problems {
            let _ = writeln!(out, "  ! {} ({:?}): {}", p.item, p.outcome, p.message);
        }
        out
    }
}

fn problem(item: impl Into<String>, e: &InvariantError) -> Problem {
    let outcome = match e {
        InvariantError::Hypotheses(_) => Outcome::Hypothesis,
        _ => Outcome::Failed,
    };
    Problem {
        item: item.into(),
        outcome,
        message: e.to_string(),
    }
}

/// Evaluates the requested invariants and identities on a prepared context.
/// Failures are recorded in the document rather than aborting it.
pub fn build_report(
    file: &CaseFile,
    inst: &CaseInstance,
    ctx: &CaseContext,
    invariants: &[Invariant],
    identities: &[Identity],
) -> ReportDocument {
    let mut problems = Vec::new();
    let mut inv = InvariantReport::default();
    for &i in invariants {
        let value = match i {
            Invariant::Mu0 => Ok(Value::Dim(ctx.mu0())),
            Invariant::Tau0V => Ok(Value::Dim(ctx.tau0_v())),
            Invariant::Tau0OmegaV => ctx.tau0_form().map(Value::Dim),
            Invariant::Tau0X => ctx.tau0_x().map(|t| Value::Dim(t.direct)),
            Invariant::MuBr => ctx.mu_br().map(Value::Dim),
            Invariant::TauBr => ctx.tau_br().map(Value::Dim),
            Invariant::GsvX => ctx.gsv_x().map(Value::Dim),
            Invariant::GsvXV => ctx.gsv_pair().map(Value::Dim),
            Invariant::Mubar => ctx.mubar().map(|t| Value::Dim(t.direct)),
            Invariant::Taubar => ctx.taubar().map(|t| Value::Dim(t.direct)),
            Invariant::Rf => ctx.rf().map(Value::Rf),
            Invariant::IntersectionQuotient => ctx.intersection_quotient().map(|t| Value::Dim(t.direct)),
        };
        match value {
            Ok(Value::Dim(d)) => {
                let slot = match i {
                    Invariant::Mu0 => &mut inv.mu0,
                    Invariant::Tau0V => &mut inv.tau0_v,
                    Invariant::Tau0OmegaV => &mut inv.tau0_omega_v,
                    Invariant::Tau0X => &mut inv.tau0_x,
                    Invariant::MuBr => &mut inv.mu_br,
                    Invariant::TauBr => &mut inv.tau_br,
                    Invariant::GsvX => &mut inv.gsv_x,
                    Invariant::GsvXV => &mut inv.gsv_xv,
                    Invariant::Mubar => &mut inv.mubar,
                    Invariant::Taubar => &mut inv.taubar,
                    Invariant::IntersectionQuotient => &mut inv.intersection_quotient_dim,
                    Invariant::Rf => unreachable!("rf is not a dimension"),
                };
                *slot = Some(d);
            }
            Ok(Value::Rf(r)) => inv.rf = Some(r),
            Err(e) => problems.push(problem(i.name(), &e)),
        }
    }

    let mut flags = Flags::default();
    match (ctx.v_invariant(), ctx.x_invariant()) {
        (Ok(v), Ok(x)) => flags = Flags { v_invariant: v, x_invariant: x },
        (Err(e), _) | (_, Err(e)) => problems.push(problem("flags", &e)),
    }

    let mut ids = Identities::default();
    for &id in identities {
        let name = id.name();
        let failed = |message: String| Problem {
            item: name.into(),
            outcome: Outcome::Failed,
            message,
        };
        match id {
            Identity::TheoremA => match verify_theorem_a(ctx) {
                Ok(r) => {
                    ids.theorem_a = r.residual;
                    if !r.passed() {
                        problems.push(failed(format!(
                            "tau_BR = {} but gsv_XV + tau0_omega_V - tau0_X + quotient = {} + {} - {} + {}",
                            r.tau_br, r.gsv_pair, r.tau0_form, r.tau0_x, r.intersection_quotient_dim
                        )));
                    }
                }
                Err(e) => problems.push(problem(name, &e)),
            },
            Identity::Prop51 => match verify_prop_5_1(ctx) {
                Ok(r) => {
                    ids.prop_5_1_mu = r.residual_mu;
                    ids.prop_5_1_tau = r.residual_tau;
                    if !r.passed() {
                        problems.push(failed(format!(
                            "mu_BR = {} vs mu0 + mubar = {} + {}; tau_BR = {} vs tau0_omega_V + taubar = {} + {}",
                            r.mu_br, r.mu0, r.mubar, r.tau_br, r.tau0_form, r.taubar
                        )));
                    }
                }
                Err(e) => problems.push(problem(name, &e)),
            },
            Identity::Equality => match verify_equality_conditions(ctx) {
                Ok(r) => {
                    ids.equality = Some(EqualityFlags {
                        condition_1: r.condition_1,
                        condition_2: r.condition_2,
                        agree: r.agree,
                    });
                    if !r.passed() {
                        problems.push(failed(format!(
                            "mu_BR = tau_BR is {} but mu0 = tau0_omega_V and the module condition give {}",
                            r.condition_1, r.condition_2
                        )));
                    }
                }
                Err(e) => problems.push(problem(name, &e)),
            },
            Identity::Cor54 => match verify_cor_5_4(ctx) {
                Ok(r) => {
                    ids.cor_5_4 = r.holds;
                    match r.holds {
                        Some(true) => {}
                        Some(false) => problems.push(failed(format!(
                            "mu_BR / tau_BR = {} exceeds r_f = {}",
                            r.ratio, r.rf
                        ))),
                        None => problems.push(Problem {
                            item: name.into(),
                            outcome: Outcome::Inconclusive,
                            message: format!("r_f {} is beyond the cap; raise it with SAITO_RF_CAP", r.rf),
                        }),
                    }
                }
                Err(e) => problems.push(problem(name, &e)),
            },
        }
    }

    ReportDocument {
        case: CaseSummary::new(file, inst),
        options: OptionsSummary {
            order: ctx.order().name().to_string(),
            rf_cap: ctx.rf_cap(),
        },
        invariants: inv,
        flags,
        identities: ids,
        problems,
    }
}

enum Value {
    Dim(Dimension),
    Rf(Rf),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::case::parse_case;

    #[test]
    fn invariant_names() {
        for i in Invariant::ALL {
            assert_eq!(i.name().parse::<Invariant>().unwrap(), i);
        }
        assert_eq!("TAU-BR".parse::<Invariant>().unwrap(), Invariant::TauBr);
        assert!("nu".parse::<Invariant>().is_err());
    }

    #[test]
    fn report_round_trips_through_json() {
        let file = parse_case("ring x, y; X: x; V: y; omega: coeffs(x, y);").unwrap();
        let inst = &file.instances[0];
        let ctx = CaseContext::new(inst.input.clone());
        let doc = build_report(&file, inst, &ctx, &Invariant::ALL, &Identity::ALL);
        let json = doc.to_json();
        assert!(!json.contains('.'), "{json}");
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        // V = {y = 0} is not invariant by x dx + y dy
        assert!(doc.has(Outcome::Hypothesis));
        assert!(doc.to_text().contains("mu0"));
    }
}
