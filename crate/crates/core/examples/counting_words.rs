// Exact word counts from the N(k, r) recurrence, against Stirling numbers.
//
// cargo run --example counting_words

use monster_strata::{counting, Result};

pub fn run_example() -> Result<()> {
    let m = 8;
    println!("N(k, r) for m = {m}");
    for k in 1..=m as usize {
        let table = counting::count_table(k, m)?;
        let row: Vec<String> = table.entries().iter().map(ToString::to_string).collect();
        let stirling: Vec<String> = (1..=m as usize).map(|j| counting::stirling_first(k, j).to_string()).collect();
        assert_eq!(row, stirling);
        println!("  k = {k}: {}  (total {})", row.join(" "), table.total());
    }

    let big = counting::count_table(30, 6)?;
    println!("words of length 30 over a 6-dimensional base: {}", big.total());
    println!("{}", big.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
