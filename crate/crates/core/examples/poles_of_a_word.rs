// SPDX-License-Identifier: Apache-2.0

// The irreducible system of poles of a generator word, exactly and in decimals.

use hecke_rpf::group::GenWord;
use hecke_rpf::isp::isp_of_word;

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for (p, letters) in [(3, vec![1, 2]), (5, vec![2]), (6, vec![1, 3, 5]), (6, vec![1, 2, 5])] {
        let isp = isp_of_word(&GenWord::new(p, &letters)?)?;
        lines.push(format!("G_{p} {}  D = {}  symmetric: {}", isp.word, isp.d, isp.symmetric));
        for pole in isp.all_poles() {
            lines.push(format!("    {:>24}  {}", pole.to_decimal(20), pole));
        }
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
