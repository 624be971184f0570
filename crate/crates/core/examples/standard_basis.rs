//! Standard bases over the local ring: colengths, membership, syzygies and
//! intersections.

use saito::algebra::Polynomial;
use saito::order::{ModuleOrder, MonomialOrder};
use saito::sb::{is_member, module_intersection, subquotient_dim, syzygies, SubmoduleGens};

fn main() {
    let (x, y) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
    let f = &y.pow(2) - &x.pow(3);

    // Tjurina ideal of the cusp
    let tjurina = SubmoduleGens::ideal(2, vec![f.clone(), f.partial_derivative(0).unwrap(), f.partial_derivative(1).unwrap()]).unwrap();
    for order in [MonomialOrder::NegDegRevLex, MonomialOrder::NegLex] {
        let sb = tjurina.std(&ModuleOrder::new(order));
        println!("{order:>12}: colength {}, standard monomials {:?}", sb.colength(), sb.standard_monomials().unwrap().len());
    }

    // x - x^2 is x times a unit, so x lies in the ideal it generates locally
    let unit_multiple = SubmoduleGens::ideal(2, vec![&x - &x.pow(2)]).unwrap();
    println!("x in <x - x^2>: {}", is_member(&x.clone().into(), &unit_multiple).unwrap());

    let koszul = syzygies(&SubmoduleGens::ideal(2, vec![x.clone(), y.clone()]).unwrap());
    println!("syzygies of (x, y): {:?}", koszul.gens());

    let a = SubmoduleGens::ideal(2, vec![x.pow(2), y.pow(2)]).unwrap();
    let b = SubmoduleGens::ideal(2, vec![x.clone(), y.pow(3)]).unwrap();
    let both = module_intersection(&a, &b).unwrap();
    println!("<x^2, y^2> meet <x, y^3> has colength {}", both.colength());
    println!("dim <x^2, y^2> / (<x^2, y^2> meet <x, y^3>) = {}", subquotient_dim(&a, &both).unwrap());
}
