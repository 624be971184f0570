//! The decomposition of the Bruce-Roberts Tjurina number into a GSV index,
//! Tjurina numbers and an intersection quotient, on a case in three variables.

use saito::invariants::{verify_prop_5_1, verify_theorem_a, CaseContext};
use saito::io::{families, parse_case};

fn main() {
    let file = parse_case(&families::example_3_2()).expect("built-in case");
    let ctx = CaseContext::new(file.instances[0].input.clone());

    let r = verify_theorem_a(&ctx).expect("hypotheses hold");
    println!("tau_BR                 = {}", r.tau_br);
    println!("Ind_GSV(omega; X, V)   = {}", r.gsv_pair);
    println!("tau_0(omega, V)        = {}", r.tau0_form);
    println!("tau_0(X)               = {}", r.tau0_x);
    println!("intersection quotient  = {}", r.intersection_quotient_dim);
    println!("residual               = {:?}", r.residual);

    let p = verify_prop_5_1(&ctx).expect("hypotheses hold");
    println!("mu_BR = mu_0 + mubar:   {} = {} + {}", p.mu_br, p.mu0, p.mubar);
    println!("tau_BR = tau_0 + taubar: {} = {} + {}", p.tau_br, p.tau0_form, p.taubar);
}
