//! Expands the index equations of the differential calculus and checks the
//! combined system.

use superrtt::calculus::{self, Family, IndexSlots};
use superrtt::cli::commands::expand_cmd;

fn main() -> superrtt::Result<()> {
    for f in Family::ALL {
        print!("{}", expand_cmd(f.name())?);
    }

    let (placements, printed) = calculus::deriv_deriv_conventions()?;
    let names: Vec<String> = placements.iter().map(IndexSlots::to_string).collect();
    println!("derivative placements that match: {}", names.join(", "));
    println!("printed placement matches: {printed}");

    let p = calculus::calculus_presentation()?;
    let conf = calculus::combined_confluence(&p, 3)?;
    println!("{conf}");
    println!("{}", calculus::signed_reading_report(3)?);
    Ok(())
}
