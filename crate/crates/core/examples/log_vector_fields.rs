//! Logarithmic vector fields of a hypersurface and their image under a 1-form.

use saito::algebra::{OneForm, Polynomial};
use saito::logder::{apply_form, theta_x, theta_x_trivial, Variety};

fn show(v: &[saito::sb::FreeModuleElement]) {
    for g in v {
        let parts: Vec<String> = g.components().iter().map(ToString::to_string).collect();
        println!("    ({})", parts.join(", "));
    }
}

fn main() {
    let (x, y, z) = (Polynomial::var(3, 0), Polynomial::var(3, 1), Polynomial::var(3, 2));
    let phi = &x.pow(3) + &(&y * &z);
    let variety = Variety::hypersurface(phi.clone()).unwrap();

    let theta = theta_x(&variety).unwrap();
    println!("generators of Theta_X for X = {{{phi} = 0}}:");
    show(theta.gens());
    let trivial = theta_x_trivial(&variety);
    println!("trivial fields:");
    show(trivial.gens());
    println!("trivial fields are logarithmic: {}", theta.contains(&trivial).unwrap());

    let f = &(&x.pow(2) + &y.pow(2)) + &z.pow(2);
    let eta = OneForm::new(vec![z.clone(), x.clone(), y.clone()]).unwrap();
    let omega = OneForm::df_plus_f_eta(&f, &eta).unwrap();
    let image = apply_form(&omega, &theta).unwrap();
    println!("mu_BR = dim O / omega(Theta_X) = {}", image.colength());
}
