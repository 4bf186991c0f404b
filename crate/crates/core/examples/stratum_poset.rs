// Builds the containment poset of strata and prints it as Graphviz.
//
// cargo run --example stratum_poset | dot -Tsvg > strata.svg

use monster_strata::codeword;
use monster_strata::{strata, Result};

pub fn run_example() -> Result<()> {
    let w = codeword::parse("R V{2} V{2} V{2,4} R", 3)?;
    println!(
        "// {w}: locus {}, codimension {}, dimension {} of {}",
        strata::locus(&w),
        strata::codimension(&w),
        strata::stratum_dimension(&w),
        strata::ambient_dimension(w.len(), w.dimension())
    );
    for smaller in strata::excision_set(&w) {
        println!("//   excise {}", strata::locus(&smaller));
    }

    let poset = strata::hasse(3, 3)?;
    let reach = poset.reachability();
    for (a, x) in poset.nodes().iter().enumerate() {
        for (b, y) in poset.nodes().iter().enumerate() {
            assert_eq!(reach[a][b], strata::contains(x, y)?);
        }
    }
    print!("{}", poset.to_dot());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
