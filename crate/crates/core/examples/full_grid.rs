//! Exhaustive cross-validation of the strong alt-induced scan: every pair
//! of word sets with at most three words of length at most three over
//! {a, b} whose product is a code (139,697 instances) is compared against
//! the brute-force decomposition search. Takes a minute or two in release.
//!
//! ```sh
//! cargo run --release -p altcodes --example full_grid
//! ```

use std::collections::BTreeSet;

use altcodes::{alt, codes, grid, oracle};
use altcodes::{Alphabet, Language, Word};

fn main() {
    let al = Alphabet::from_str_symbols("ab").unwrap();
    let pool = grid::word_pool(&al, 3);
    let mut sets: Vec<BTreeSet<Word>> = Vec::new();
    let n = pool.len();
    for i in 0..n {
        sets.push(BTreeSet::from([pool[i].clone()]));
        for j in i + 1..n {
            sets.push(BTreeSet::from([pool[i].clone(), pool[j].clone()]));
            for l in j + 1..n {
                sets.push(BTreeSet::from([
                    pool[i].clone(),
                    pool[j].clone(),
                    pool[l].clone(),
                ]));
            }
        }
    }
    eprintln!("{} sets, {} pairs", sets.len(), sets.len() * sets.len());
    let langs: Vec<Language> = sets
        .iter()
        .map(|s| Language::from_words(&al, s.iter()).unwrap())
        .collect();

    let mut tested = 0u64;
    let mut positive = 0u64;
    let mut disagreements = 0u64;
    for (i, x) in langs.iter().enumerate() {
        if i % 50 == 0 {
            eprint!("\r{i}/{} codes so far: {tested}", langs.len());
        }
        for y in &langs {
            let z = x.concat(y).unwrap();
            if !codes::is_code(&z).unwrap().is_code() {
                continue;
            }
            tested += 1;
            let verdict = alt::rsic(&z).unwrap().is_strong_alt_induced();
            if verdict {
                positive += 1;
            }
            let brute = oracle::brute_sai_decompositions(&z).unwrap();
            if verdict != !brute.is_empty() {
                disagreements += 1;
                eprintln!("\ndisagreement on Z = {z}");
            }
        }
    }
    eprintln!();
    println!(
        "full grid: {tested} codes tested, {positive} strong alt-induced, {disagreements} disagreements"
    );
    assert_eq!(disagreements, 0, "scan and oracle must agree everywhere");
}
