//! Weighted sharing: a pair sharing 1 CM and 0, inf with weight 0, and the
//! compositions with z^(m+1) that raise the weight at 0 to m.

use vsl::exactnum::{FieldDescriptor, FieldElement};
use vsl::exprio::{parse_ratfunc, parse_values};
use vsl::poly::UniPoly;
use vsl::ratfunc::RationalFunction;
use vsl::sharing::{candidate_values, classify_sharing, shared_value_scan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldDescriptor::rationals();
    let f1 = parse_ratfunc("-4*z^3/((z-1)^3*(z+1))", &q)?;
    let f2 = parse_ratfunc("-4*z/((z-1)*(z+1)^3)", &q)?;
    let values = parse_values("1, 0, inf", &q)?;

    println!("f1 = {f1}\nf2 = {f2}");
    for a in &values {
        println!("  {a}: {}", classify_sharing(&f1, &f2, a)?.status);
    }

    for m in 1..=3 {
        let p = RationalFunction::polynomial(UniPoly::monomial(FieldElement::one(&q), m + 1));
        let (h1, h2) = (f1.compose(&p), f2.compose(&p));
        let s = shared_value_scan(&h1, &h2, &values)?;
        let line: Vec<String> = s.reports.iter().map(|r| format!("{}: {}", r.value, r.status)).collect();
        println!("m = {m}: {}", line.join(", "));
    }

    // Candidates come from rational points where f1 = f2.
    let found = candidate_values(&f1, &f2)?;
    println!("candidates: {}", found.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    Ok(())
}
