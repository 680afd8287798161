//! Normal forms in the built-in presentations, with both rewriting orders.

use superrtt::cli::parser::parse_element;
use superrtt::{presentations, Strategy};

fn main() -> superrtt::Result<()> {
    let plane = presentations::a_h1();
    let gl = presentations::gl_h1h2();

    for (p, text) in [
        (&plane, "xi*x"),
        (&plane, "xi*xi*x"),
        (&plane, "(x + xi)^3"),
        (&gl, "d*a"),
        (&gl, "gamma*beta + beta*gamma"),
        (&gl, "(h1*beta)*(h2*gamma)"),
    ] {
        let e = parse_element(text, None)?;
        let left = p.normal_form_with(&e, Strategy::Leftmost)?;
        let right = p.normal_form_with(&e, Strategy::Rightmost)?;
        assert_eq!(left, right);
        println!("{:>8}  {text:<28} = {left}", p.name());
    }

    // with h1h2 = 0 the corner terms of d*a drop out
    let truncated = gl.with_h1h2_zero()?;
    println!(
        "h1h2 = 0  d*a = {}",
        truncated.normal_form(&parse_element("d*a", None)?)?
    );
    Ok(())
}
