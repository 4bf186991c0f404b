// Picks, for every stratum, a chart it meets and checks the equation count.
//
// cargo run --example witness_charts

use monster_strata::codeword;
use monster_strata::{charts, strata, Result};

pub fn run_example() -> Result<()> {
    for w in codeword::enumerate(4, 3)? {
        let chart = charts::witness_chart(&w);
        let eqs = charts::equations(&w, &chart)?;
        assert_eq!(eqs.len(), strata::codimension(&w));
        let names: Vec<String> = eqs.iter().map(ToString::to_string).collect();
        println!("{:<24} C({chart})  {}", w.to_string(), names.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
