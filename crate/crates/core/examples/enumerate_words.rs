// Lists every code word of small length and shows how rule 3 trims the list.
//
// cargo run --example enumerate_words

use monster_strata::codeword::{self, CodeWord};
use monster_strata::{counting, Result};

pub fn run_example() -> Result<()> {
    for k in 1..=3 {
        println!("length {k}, m = 3:");
        for w in codeword::enumerate(k, 3)? {
            let counts = w.multiplicities();
            println!("  {:<18} n = {:?}", codeword::format(&w), counts.as_slice());
        }
    }

    let with_four: Vec<CodeWord> = codeword::enumerate(4, 4)?.collect();
    let with_three: Vec<CodeWord> = codeword::enumerate(4, 3)?.collect();
    println!("length 4: {} words for m = 4, {} for m = 3", with_four.len(), with_three.len());
    for w in &with_four {
        if w.with_dimension(3).is_err() {
            println!("  dropped at m = 3: {w}");
        }
    }
    assert_eq!(counting::count(4, 3)?, with_three.len().into());

    let rebuilt = codeword::from_multiplicities(&with_four[10].multiplicities(), 4)?;
    assert_eq!(rebuilt, with_four[10]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
