// Translates between the seven-letter RVT code and subscript code words.
//
// cargo run --example rvt_translation

use monster_strata::codeword;
use monster_strata::{rvt, Result};

pub fn run_example() -> Result<()> {
    let legacy = rvt::parse_rvt("R V T1 V V T1 T1 T1 L1")?;
    let word = rvt::rvt_to_subscript(&legacy);
    println!("{legacy}  ->  {word}");

    // Same trailing symbols, different RVT letters.
    for text in ["R V{2} V{2,3} V{2} V{2}", "R V{2} V{2} V{2} V{2}"] {
        let w = codeword::parse(text, 3)?;
        let back = rvt::subscript_to_rvt(&w)?;
        println!("{w}  ->  {back}");
        assert_eq!(rvt::rvt_to_subscript(&back), w);
    }

    match rvt::parse_rvt("R T1") {
        Err(e) => println!("R T1 is rejected: {e}"),
        Ok(_) => unreachable!("T1 may not follow R"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
