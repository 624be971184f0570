//! Reading a case file and producing a JSON report.

use saito::invariants::CaseContext;
use saito::io::{build_report, parse_case, Identity, Invariant};

const CASE: &str = "
# a cusp against the coordinate axes, for two values of lambda
ring x, y;
option lambda = 2, 5;
X: y^2 - x^3;
V: x*y;
omega: coeffs(y, lambda*x);
";

fn main() {
    let file = parse_case(CASE).expect("valid case");
    for inst in &file.instances {
        let ctx = CaseContext::new(inst.input.clone());
        let doc = build_report(&file, inst, &ctx, &[Invariant::TauBr, Invariant::GsvXV], &[Identity::TheoremA]);
        println!("{}", doc.to_json());
    }
}
