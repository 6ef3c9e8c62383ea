//! Upper bounds on the number of shared values.

use vsl::bounds::{
    hurwitz_ramification_cap, proposition8_parameters, sphere_puncture_bound, theorem5_bound, theorem9_bound,
    theorem_a_bound, SurfaceParams,
};
use vsl::exactnum::FieldDescriptor;
use vsl::exprio::parse_values;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (g, d, cm) in [(1, 2, false), (1, 2, true), (5, 3, false)] {
        let rep = theorem_a_bound(g, d, cm)?;
        println!("compact, g = {g}, d = {d}, one value CM: {cm} -> {:?}", rep.operative);
        for t in &rep.terms {
            println!("    {} = {} ~ {:.3}", t.name, t.raw, t.raw.to_f64());
        }
    }

    let p = SurfaceParams::new(2, 2, 4);
    println!("g = 2, d = 2, r = 4: Theorem 5 {:?}, Theorem 9 {:?}", theorem5_bound(p)?.operative, theorem9_bound(p)?.operative);
    println!("  improves: {:?}", theorem9_bound(p)?.flag("beats_theorem_5"));

    let k = FieldDescriptor::cyclotomic(8)?;
    for text in ["1, zeta(8), i, -1, -i", "1, zeta(8), i, -1, 2"] {
        let pts = parse_values(text, &k)?;
        println!("sphere minus {{{text}}}: {:?}", sphere_puncture_bound(5, Some(&pts))?.operative);
    }

    let p8 = proposition8_parameters(2, 3, 4)?;
    println!("g = 2, d = 3, s = 4: r = {}, {} shared, identity {}", p8.r, p8.shared_count, p8.identity_holds);
    println!("ramification of a degree-3 map from genus 2: {}", hurwitz_ramification_cap(2, 3));
    Ok(())
}
