// SPDX-License-Identifier: Apache-2.0

// λ-continued fractions: word to period, period to surd, and back.

use hecke_rpf::cf::{cf_expand, period_to_word, surd_of_cf, word_to_period, CF};
use hecke_rpf::group::GenWord;

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for (p, letters) in [(3, vec![1, 2]), (4, vec![2]), (6, vec![1, 3, 5]), (7, vec![2, 6, 3])] {
        let w = GenWord::new(p, &letters)?;
        let period = word_to_period(&w)?;
        let beta = surd_of_cf(&CF::purely_periodic(p, period.clone()))?;
        let back = period_to_word(p, &cf_expand(&beta)?.period)?;
        lines.push(format!("G_{p} {w} -> {} = {} -> {back}", CF::purely_periodic(p, period), beta.to_decimal(15)));
    }
    // a preperiod shifts the point but keeps its class
    let shifted = surd_of_cf(&CF::new(5, vec![1], vec![2]))?;
    lines.push(format!("G_5 [1; (2)] = {} = {}", shifted.to_decimal(15), cf_expand(&shifted)?));
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
