//! Hyperelliptic and superelliptic curves where the projection pi and
//! zeta_r * pi share r + 2 values.

use vsl::bounds::{theorem5_bound, theorem9_bound, SurfaceParams};
use vsl::curve::{hyperelliptic_curve, superelliptic_family, verify_rotation_sharing};
use vsl::exactnum::{FieldDescriptor, FieldElement};
use vsl::exprio::parse_values;
use vsl::poly::UniPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldDescriptor::cyclotomic(4)?;
    let pts: Vec<FieldElement> =
        parse_values("1, i, -1, -i, 2, 3", &k)?.into_iter().filter_map(|v| v.finite().cloned()).collect();
    let c = hyperelliptic_curve(&pts)?;
    let check = verify_rotation_sharing(&c, 4)?;
    println!("{c}: genus {:?}, {} values shared", c.genus(), check.summary.shared);

    for (d, m) in [(3, 2), (3, 3), (4, 2)] {
        let r = d * m;
        let k = FieldDescriptor::cyclotomic(r)?;
        let one = FieldElement::one(&k);
        let f = &UniPoly::monomial(one.clone(), r as usize) - &UniPoly::constant(one);
        let c = superelliptic_family(d, m, r, &f)?;
        let g = c.genus().unwrap_or(0);
        let check = verify_rotation_sharing(&c, r)?;
        let p = SurfaceParams::new(g, d as u64, r as u64);
        println!(
            "d = {d}, m = {m}: genus {g}, shared {} (holds: {}), Theorem 5 bound {:?}, r + 2 = {:?}",
            check.summary.shared,
            check.holds(),
            theorem5_bound(p)?.operative,
            theorem9_bound(p)?.operative
        );
    }
    Ok(())
}
