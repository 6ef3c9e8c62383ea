//! Parsing expressions and printing them back.

use vsl::exactnum::FieldDescriptor;
use vsl::exprio::{format_bi, format_ratfunc, infer_field, parse_bipoly, parse_expr, parse_ratfunc};

fn main() {
    let texts = ["(z^2 - 1)/(z - 1)", "zeta(3)*z + i", "-z^2/3"];
    let k = infer_field(&texts, 64).expect("known field");
    println!("field for all inputs: {k}");
    for t in texts {
        let f = parse_ratfunc(t, &k).expect("valid input");
        println!("{t:>20}  ->  {}", format_ratfunc(&f));
    }

    let q = FieldDescriptor::rationals();
    let f = parse_bipoly("(X - Y)^3 + Y*(Y - 1)*(X - 1)", &q).expect("valid input");
    println!("{}", format_bi(&f));

    println!("{:?}", parse_expr("-z^2").map(|e| e.kind));
    for bad in ["2z", "z/(z", "z^", "w + 1"] {
        match parse_ratfunc(bad, &q) {
            Ok(f) => println!("{bad}: {f}"),
            Err(e) => println!("{bad}: {e}"),
        }
    }
}
