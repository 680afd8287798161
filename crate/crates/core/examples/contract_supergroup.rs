//! Conjugates the quantum supergroup and its R-matrix by `g_h1 g_h2` and
//! takes `p, q → 1`.

use superrtt::algebra::ideals_equal;
use superrtt::cli::format::export_presentation;
use superrtt::contraction::{contract_rmatrix, contract_supergroup};
use superrtt::{presentations, rmatrix};

fn main() -> superrtt::Result<()> {
    let gl = contract_supergroup()?;
    print!("{}", export_presentation(&gl));
    println!(
        "same ideal as GL_h1h2 up to degree 4: {}",
        ideals_equal(&gl, &presentations::gl_h1h2(), 4)?
    );

    let r = contract_rmatrix()?;
    println!("\ncontracted R:\n{r}");
    println!("equals R_h1h2: {}", r == rmatrix::r_h1h2());
    Ok(())
}
