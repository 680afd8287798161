//! The superdeterminant: central, group-like, counit one.

use superrtt::hopf;

fn main() -> superrtt::Result<()> {
    let d = hopf::superdet();
    println!("D = {d}");
    println!("ε(D) = {}", hopf::counit(&d)?);
    for report in hopf::superdet_suite()? {
        println!("{report}");
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    Ok(())
}
