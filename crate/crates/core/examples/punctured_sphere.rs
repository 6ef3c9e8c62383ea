//! z and zeta_r z share r + 2 values on the sphere minus the r-th roots of
//! unity: 0, inf, and the punctures themselves, which neither function
//! takes there.

use vsl::bounds::sphere_puncture_bound;
use vsl::exactnum::{FieldDescriptor, FieldElement};
use vsl::poly::UniPoly;
use vsl::ratfunc::{ExtendedValue, RationalFunction};
use vsl::sharing::{shared_value_scan, shared_value_scan_on, Domain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in [2, 3, 4, 6] {
        let k = FieldDescriptor::cyclotomic(r)?;
        let w = FieldElement::root_of_unity(&k, r)?;
        let f1 = RationalFunction::identity(&k);
        let f2 = RationalFunction::polynomial(UniPoly::monomial(w.clone(), 1));
        let roots: Vec<ExtendedValue> = (0..r).map(|j| w.pow(j).into()).collect();
        let mut cands = vec![ExtendedValue::Infinity, FieldElement::zero(&k).into()];
        cands.extend(roots.iter().cloned());

        let sphere = shared_value_scan(&f1, &f2, &cands)?;
        let punctured = shared_value_scan_on(&Domain::punctured(roots)?, &f1, &f2, &cands)?;
        let vacuous = punctured.reports.iter().filter(|x| x.vacuous).count();
        let bound = sphere_puncture_bound(r as u64, None)?.operative.unwrap_or(0);
        println!(
            "r = {r}: {} shared on the sphere, {} on the punctured sphere ({vacuous} vacuous), bound {bound}",
            sphere.shared, punctured.cm
        );
    }
    Ok(())
}
