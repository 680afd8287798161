//! Reads a presentation from text, orients it and checks confluence.

use superrtt::algebra::confluence_check;
use superrtt::cli::format::{export_presentation, parse_presentation};
use superrtt::cli::parser::parse_element;

const SOURCE: &str = "\
# the dual h2-plane written with relations
presentation dual_plane
generators y:even eta:odd
relation eta*y = y*eta - h2*y^2
relation eta^2 = -h2*eta*y
";

fn main() -> superrtt::Result<()> {
    let p = parse_presentation(SOURCE)?;
    print!("{}", export_presentation(&p));
    println!("{}", confluence_check(&p, 4)?);
    let e = parse_element("eta*eta*y", None)?;
    println!("eta*eta*y = {}", p.normal_form(&e)?);
    Ok(())
}
