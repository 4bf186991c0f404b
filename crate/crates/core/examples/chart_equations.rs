// Coordinate names of a chart and the equations of loci inside it.
//
// cargo run --example chart_equations

use monster_strata::codeword;
use monster_strata::{charts, strata, Chart, Result};

pub fn run_example() -> Result<()> {
    let chart = Chart::parse("32123", 3)?;
    let table = charts::coordinate_table(&chart);
    println!("chart C({chart}); [boxed] names are not shortest, * marks the retained one");
    print!("{}", table.render());
    println!("{} distinct coordinates", table.distinct_coordinates().len());

    let w = codeword::parse("R V{2} V{2} V{2,4} R", 3)?;
    let base = charts::equations(&w, &chart)?;
    println!("\n{}:", strata::locus(&w));
    print!("{}", charts::render_equations(&base));

    for smaller in strata::excision_set(&w) {
        let locus = strata::locus(&smaller);
        match charts::equations(&smaller, &chart) {
            Ok(eqs) => {
                let extra: Vec<String> = eqs.iter().filter(|n| !base.contains(n)).map(|n| format!("{n} = 0")).collect();
                println!("{locus:<18} {}", extra.join(", "));
            }
            Err(_) => println!("{locus:<18} does not meet the chart"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
