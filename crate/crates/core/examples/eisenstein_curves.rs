//! Plane curves on which the coordinate functions X and Y share
//! prescribed values.

use vsl::curve::{check_curve, normalize_for_theorem1b, theorem1a_curve, theorem1b_curve};
use vsl::exactnum::FieldDescriptor;
use vsl::exprio::parse_values;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldDescriptor::rationals();
    let vals: Vec<_> = parse_values("1, 2, 3", &q)?.into_iter().filter_map(|v| v.finite().cloned()).collect();

    let c = theorem1a_curve(&vals)?;
    let rep = check_curve(&c, None);
    println!("{c}");
    println!(
        "  Eisenstein: {}, fibers verified: {}, degrees {:?}, genus bounds {:?}",
        rep.eisenstein.holds(),
        rep.all_fibers_verified(),
        rep.map_degrees,
        rep.genus_bounds
    );

    let c = theorem1b_curve(&vals[..2])?;
    let rep = check_curve(&c, None);
    println!("{c}");
    println!("  fibers verified: {}, CM at infinity: {:?}", rep.all_fibers_verified(), rep.cm_at_infinity);

    // Values containing 0 and a chosen CM value are moved first.
    let raw = parse_values("0, 5, -1", &q)?;
    let (t, moved) = normalize_for_theorem1b(&raw[..2], &raw[2])?;
    println!("transform {t} sends 0, 5 to {}", moved.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    Ok(())
}
