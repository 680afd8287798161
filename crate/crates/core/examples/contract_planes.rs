//! Contracts the q-deformed superplanes to their h-deformed limits.

use superrtt::cli::format::export_presentation;
use superrtt::contraction::{contract_plane, ContractionMatrix};
use superrtt::{presentations, Var};

fn main() -> superrtt::Result<()> {
    let cases = [
        (presentations::a_p(), ContractionMatrix::g_h1(), Var::P),
        (presentations::astar_q(), ContractionMatrix::g_h2(), Var::Q),
        (presentations::lambda_q(), ContractionMatrix::g_h2(), Var::Q),
    ];
    for (source, g, v) in cases {
        println!("# {} with g = {}", source.name(), g.matrix());
        let limit = contract_plane(&source, &g, &[v], &format!("{} contracted", source.name()))?;
        print!("{}", export_presentation(&limit));
        println!();
    }
    Ok(())
}
