//! Text input and output.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' uint)?
//! primary := uint | symbol | '(' expr ')'
//! symbol  := 'z' | 'X' | 'Y' | 'i' | 'zeta' '(' uint ')'
//! ```
//!
//! so `-z^2` is `-(z^2)` and `1/2*z` is `(1/2)*z`. `i` means `zeta(4)`.
//! Implicit multiplication (`2z`) is rejected. Which symbols are allowed
//! depends on what is being parsed; constants are interpreted in a caller
//! supplied field.
//!
//! The formatters print a canonical form that the parser reads back to an
//! equal value.

mod format;
mod parse;

pub use format::{format_bi, format_element, format_ratfunc, format_uni, format_value};
pub use parse::{
    infer_field, parse, parse_bipoly, parse_element, parse_expr, parse_field, parse_poly, parse_ratfunc,
    parse_values, BinOp, Expected, Expr, ExprKind, ParseError, Parsed, Symbol, MAX_EXPONENT,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{FieldDescriptor, FieldElement};
    use crate::poly::{BiPoly, UniPoly, Var};
    use crate::ratfunc::{ExtendedValue, RationalFunction};

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    #[test]
    fn weighted_pair_format() {
        let f = parse_ratfunc("-4*z^3/((z-1)^3*(z+1))", &q()).unwrap();
        assert_eq!(f.degree(), 4);
        let num = UniPoly::from_integers(&q(), &[0, 0, 0, -4]);
        let den = UniPoly::from_integers(&q(), &[-1, 1]).pow(3) * UniPoly::from_integers(&q(), &[1, 1]);
        assert_eq!(f, RationalFunction::new(num, den).unwrap());
        assert_eq!(format_ratfunc(&f), "-4*z^3/(z^4 - 2*z^3 + 2*z - 1)");
    }

    #[test]
    fn eisenstein_curve_text() {
        let f = parse_bipoly("(X-Y)^3 + Y*(Y-1)*(Y-2)*(X-1)*(X-2)", &q()).unwrap();
        let x = BiPoly::var(&q(), Var::X);
        let y = BiPoly::var(&q(), Var::Y);
        let c = |n| BiPoly::constant(FieldElement::from_integer(&q(), n));
        let expected = (&x - &y).pow(3) + &(&(&(&y * &(&y - &c(1))) * &(&y - &c(2))) * &(&x - &c(1))) * &(&x - &c(2));
        assert_eq!(f, expected);
        assert_eq!(parse_bipoly(&format_bi(&f), &q()).unwrap(), f);
    }

    #[test]
    fn positioned_errors() {
        assert_eq!(parse_ratfunc("z/(z", &q()).unwrap_err().offset, 4);
        assert_eq!(parse_ratfunc("2z", &q()).unwrap_err().offset, 1);
        assert_eq!(parse_ratfunc("z + w", &q()).unwrap_err().offset, 4);
        assert_eq!(parse_ratfunc("1/(z-z)", &q()).unwrap_err().offset, 1);
        assert_eq!(parse_element("z", &q()).unwrap_err().offset, 0);
        assert_eq!(parse_ratfunc("X", &q()).unwrap_err().offset, 0);
        assert_eq!(parse_element("zeta(4)", &q()).unwrap_err().offset, 0);
        assert_eq!(parse_element("3 $", &q()).unwrap_err().offset, 2);
        assert!(parse_poly("1/z", &q()).is_err());
        assert!(parse_bipoly("X/Y", &q()).is_err());
        assert!(parse_element("z^-1", &q()).is_err());
        assert!(parse_element("", &q()).is_err());
    }

    #[test]
    fn precedence() {
        let f = parse_ratfunc("-z^2", &q()).unwrap();
        assert_eq!(f.numerator(), &UniPoly::from_integers(&q(), &[0, 0, -1]));
        let e = parse_element("1/2*3", &q()).unwrap();
        assert_eq!(e, FieldElement::from_fraction(&q(), 3, 2).unwrap());
        let e = parse_element("2-3-4", &q()).unwrap();
        assert_eq!(e, FieldElement::from_integer(&q(), -5));
        let e = parse_element("--2^2", &q()).unwrap();
        assert_eq!(e, FieldElement::from_integer(&q(), 4));
    }

    #[test]
    fn canonical_forms() {
        let p = parse_ratfunc("(z+1)*(z-1)", &q()).unwrap();
        assert_eq!(format_ratfunc(&p), "z^2 - 1");
        let f3 = FieldDescriptor::cyclotomic(3).unwrap();
        let w2 = FieldElement::zeta(&f3).unwrap().pow(2);
        assert_eq!(format_element(&w2), "-zeta(3) - 1");
        assert_eq!(format_uni(&UniPoly::zero(&q()), "z"), "0");
        assert_eq!(format_element(&FieldElement::from_fraction(&q(), -3, 4).unwrap()), "-3/4");
    }

    #[test]
    fn cyclotomic_coefficients_round_trip() {
        let f = FieldDescriptor::cyclotomic(12).unwrap();
        for text in [
            "(zeta(12)^3 + 1)*z^2 - zeta(12)*z + zeta(3) - 1/2",
            "i*z/(z - zeta(6))",
            "-zeta(12)^2*z^3 + (2*zeta(4) - 1)/(z^2 + i)",
        ] {
            let v = parse_ratfunc(text, &f).unwrap();
            let printed = format_ratfunc(&v);
            assert_eq!(parse_ratfunc(&printed, &f).unwrap(), v, "{printed}");
        }
        assert_eq!(parse_element("i", &f).unwrap(), FieldElement::zeta(&f).unwrap().pow(3));
    }

    #[test]
    fn values_and_fields() {
        let f4 = parse_field("zeta(4)", 64).unwrap();
        assert_eq!(parse_field("Q(zeta(4))", 64).unwrap(), f4);
        assert_eq!(parse_field("Q", 64).unwrap(), q());
        assert!(parse_field("zeta(100)", 64).is_err());
        assert!(parse_field("R", 64).is_err());
        let vals = parse_values("inf,0,1,i,-1,-i", &f4).unwrap();
        assert_eq!(vals.len(), 6);
        assert_eq!(vals[0], ExtendedValue::Infinity);
        assert_eq!(format_value(&vals[3]), "zeta(4)");
        assert_eq!(parse_values("1, 2, 2z", &q()).unwrap_err().offset, 7);
        assert_eq!(infer_field(&["z", "zeta(3)*z", "i"], 64).unwrap(), FieldDescriptor::cyclotomic(12).unwrap());
        assert_eq!(infer_field(&["z+1"], 64).unwrap(), q());
    }
}
