// The correspondence between code words and increasing trees.
//
// cargo run --example increasing_trees

use monster_strata::codeword;
use monster_strata::{trees, Result};

pub fn run_example() -> Result<()> {
    let k = 3;
    for w in codeword::enumerate(k, 3)? {
        let t = trees::word_to_tree(&w);
        assert_eq!(trees::tree_to_word(&t, 3)?, w);
        assert_eq!(t.root_degree(), w.symbol(k).len() + 1);
        println!("{:<16} parents {t}", w.to_string());
    }

    // With m = 3 the star on {0..4} has no word.
    let star = trees::IncreasingTree::new(vec![0, 0, 0, 0])?;
    if let Err(e) = trees::tree_to_word(&star, 3) {
        println!("star {star}: {e}");
    }
    print!("{}", trees::word_to_tree(&codeword::parse("R V{2} V{2}", 3)?).to_dot());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
