//! Fibers, degree and ramification of a rational function.

use vsl::exactnum::FieldDescriptor;
use vsl::exprio::{format_uni, parse_ratfunc, parse_values};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldDescriptor::rationals();
    let f = parse_ratfunc("-4*z^3/((z-1)^3*(z+1))", &q)?;
    println!("f = {f}, degree {}", f.degree());

    for a in parse_values("0, 1, inf, 2", &q)? {
        let p = f.fiber_profile(&a)?;
        let parts: Vec<String> =
            p.finite_part.factors.iter().map(|(g, m)| format!("({})^{m}", format_uni(g, "z"))).collect();
        println!("fiber over {a}: [{}] + inf^{}  (mass {})", parts.join(" "), p.infinity_multiplicity, p.mass());
    }

    let r = f.ramification()?;
    println!("ramification: finite {}, at inf {}, total {} = 2*deg - 2", r.finite.mass(), r.at_infinity, r.total());
    Ok(())
}
