//! Exact arithmetic in Q(zeta_8).

use vsl::exactnum::{FieldDescriptor, FieldElement};
use vsl::exprio::parse_element;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldDescriptor::cyclotomic(8)?;
    println!("field {k}, degree {}", k.degree());

    let z = FieldElement::zeta(&k)?;
    let sqrt2 = z.checked_add(&z.pow(7))?;
    println!("zeta + zeta^7 = {sqrt2}");
    println!("(zeta + zeta^7)^2 = {}", sqrt2.pow(2));

    let x = parse_element("1 + 2*i - zeta(8)^3/3", &k)?;
    let inv = x.inverse()?;
    println!("x = {x}");
    println!("1/x = {inv}");
    println!("x * 1/x = {}", x.checked_mul(&inv)?);
    println!("conj(x) = {}, real: {}", x.conjugate(), x.is_real());

    // Q(zeta_4) sits inside Q(zeta_8).
    let i = FieldElement::zeta(&FieldDescriptor::cyclotomic(4)?)?;
    println!("i lifted: {}", i.lift(&k)?);
    Ok(())
}
