//! RTT, Yang-Baxter and braid residuals for the h-deformed R-matrices.

use superrtt::{presentations, rmatrix};

fn main() -> superrtt::Result<()> {
    let t = rmatrix::t_matrix(false);
    println!(
        "{}",
        rmatrix::rtt_residual(&rmatrix::r_h1h2(), &t, &presentations::gl_h1h2())?
    );
    println!(
        "{}",
        rmatrix::rtt_residual(
            &rmatrix::r_pq(),
            &rmatrix::t_matrix(true),
            &presentations::gl_pq()
        )?
    );

    for (name, r) in [
        ("R_h1", rmatrix::r_h1()),
        ("R_h2", rmatrix::r_h2()),
        ("R_h1h2", rmatrix::r_h1h2()),
    ] {
        for graded in [true, false] {
            let ybe = rmatrix::ybe_residual(&r, graded)?;
            let braid = rmatrix::braid_residual(&rmatrix::rhat(&r)?, graded)?;
            let tag = if graded { "graded" } else { "ungraded" };
            println!(
                "{name:<7}{tag:<9} YBE {:<5} braid {}",
                ybe.passed, braid.passed
            );
        }
    }

    println!("{}", rmatrix::rhat_involution(&rmatrix::r_h1h2())?);
    println!("{}", rmatrix::factorization_check()?);
    Ok(())
}
