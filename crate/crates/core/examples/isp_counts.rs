// SPDX-License-Identifier: Apache-2.0

// How many ISPs have n positive poles, by necklace counting.

use hecke_rpf::isp::{count_table, enumerate_isps};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = vec!["  n      G_3      G_4      G_5      G_6      G_7".to_string()];
    let rows: Vec<_> = (3..=7).map(|p| count_table(p, 8)).collect::<Result<_, _>>()?;
    for n in 0..8 {
        let cells: Vec<String> = rows.iter().map(|r| format!("{:>8}", r[n])).collect();
        lines.push(format!("{:>3} {}", n + 1, cells.join(" ")));
    }
    // the counts are exact; listing agrees with them
    let listed = enumerate_isps(5, 3)?.len();
    lines.push(format!("G_5 with 3 positive poles: {listed} ISPs listed"));
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
