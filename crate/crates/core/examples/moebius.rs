//! Moebius transforms, cross-ratios and concyclic points.

use vsl::exactnum::FieldDescriptor;
use vsl::exprio::parse_values;
use vsl::ratfunc::{concyclic, cross_ratio, MoebiusTransform};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldDescriptor::cyclotomic(3)?;
    let src = parse_values("0, 1, inf", &k)?;
    let dst = parse_values("1, zeta(3), zeta(3)^2", &k)?;
    let t = MoebiusTransform::through([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]])?;
    println!("T = {t}");
    for p in &src {
        println!("  T({p}) = {}", t.apply(p));
    }

    let pts = parse_values("2, -1, 1/2, 3", &k)?;
    let before = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])?;
    let moved: Vec<_> = pts.iter().map(|p| t.apply(p)).collect();
    let after = cross_ratio(&moved[0], &moved[1], &moved[2], &moved[3])?;
    println!("cross-ratio {before} before, {after} after T");

    let g = FieldDescriptor::cyclotomic(8)?;
    let circle = parse_values("1, zeta(8), i, -1, -i", &g)?;
    let off = parse_values("1, zeta(8), i, -1, 2", &g)?;
    println!("unit circle points concyclic: {}", concyclic(&circle)?);
    println!("with 2 instead of -i: {}", concyclic(&off)?);
    Ok(())
}
