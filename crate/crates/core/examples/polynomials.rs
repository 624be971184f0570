//! Parsing, arithmetic and printing of exact polynomials.

use saito::algebra::{OneForm, Polynomial};
use saito::io::parse_expression;

fn main() {
    let vars: Vec<String> = ["x", "y"].map(String::from).to_vec();
    let f = parse_expression("y^2 - x^3", &vars).expect("valid expression");
    let g = parse_expression("(x + 1/2*y)^2", &vars).expect("valid expression");

    println!("f       = {}", f.to_string_with(&vars));
    println!("g       = {}", g.to_string_with(&vars));
    println!("f * g   = {}", (&f * &g).to_string_with(&vars));
    println!("df/dx   = {}", f.partial_derivative(0).unwrap().to_string_with(&vars));

    let df = OneForm::exact(&f);
    let shown: Vec<String> = df.coefficients().iter().map(|c| c.to_string_with(&vars)).collect();
    println!("df      = ({})", shown.join(", "));

    match parse_expression("2x + y", &vars) {
        Ok(_) => unreachable!("juxtaposition is rejected"),
        Err(e) => println!("2x + y  -> {e}"),
    }
    assert_eq!(Polynomial::var(2, 0).pow(3), parse_expression("x^3", &vars).unwrap());
}
