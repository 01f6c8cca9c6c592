// SPDX-License-Identifier: Apache-2.0

// Knopp's period function on the modular group, built from its ISP and
// checked exactly against both relations.

use hecke_rpf::group::GenWord;
use hecke_rpf::isp::isp_of_word;
use hecke_rpf::rpf::{build_symmetric_odd, verify};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let isp = isp_of_word(&GenWord::new(3, &[1, 2])?)?;
    let mut lines = Vec::new();
    for k in [1, 3] {
        let q = build_symmetric_odd(k, &isp)?;
        let verdict = verify(&q)?;
        assert!(verdict.is_valid());
        lines.push(format!("weight {}: {}", q.weight(), q.to_latex()));
        lines.push(format!("    {verdict:?}"));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
