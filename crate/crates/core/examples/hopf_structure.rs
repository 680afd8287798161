//! Coproduct, counit and antipode of the two-parameter supergroup.

use superrtt::cli::parser::parse_element;
use superrtt::hopf::{self, LocalizedCoproduct};
use superrtt::presentations;

fn main() -> superrtt::Result<()> {
    let base = presentations::gl_h1h2();
    for g in ["a", "beta", "gamma", "d"] {
        let e = parse_element(g, None)?;
        println!("Δ({g}) = {}", hopf::coproduct(&e)?);
    }

    // a relation maps to zero once both factors are reduced
    let rel = base.relations()[0].clone();
    println!("Δ({rel}) = {}", hopf::coproduct(&rel)?.reduce(&base)?);

    let loc = hopf::localized()?;
    let cop = LocalizedCoproduct::new(loc)?;
    println!("Δ(ainv) = {}", cop.apply(&parse_element("ainv", None)?)?);

    println!("T^-1 =\n{}", hopf::antipode_matrix());
    for report in hopf::hopf_suite()? {
        println!("{report}");
    }
    Ok(())
}
