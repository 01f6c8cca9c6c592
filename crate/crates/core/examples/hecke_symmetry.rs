// SPDX-License-Identifier: Apache-2.0

// Hecke-symmetry read off the word (W^⊤ a rotation of W) and off the poles.

use hecke_rpf::isp::{enumerate_isps, is_hecke_symmetric, symmetry_via_numbers};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for p in 4..=7 {
        let isps = enumerate_isps(p, 2)?;
        let mut symmetric = Vec::new();
        for isp in &isps {
            assert_eq!(symmetry_via_numbers(isp)?, is_hecke_symmetric(&isp.word));
            if isp.symmetric {
                symmetric.push(isp.word.to_string());
            }
        }
        lines.push(format!("G_{p}: {} of {} two-pole ISPs symmetric: {}", symmetric.len(), isps.len(), symmetric.join(" ")));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
