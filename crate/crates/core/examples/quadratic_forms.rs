// SPDX-License-Identifier: Apache-2.0

// Matrices, fixed points and λ-BQFs, and what transposition does to them.

use hecke_rpf::group::{word_to_matrix, GenWord};
use hecke_rpf::quadforms::{fixed_points, form_of_matrix, is_simple, transpose_form_identity_check};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for (p, letters) in [(3, vec![1, 2]), (5, vec![2]), (5, vec![3]), (6, vec![1, 2, 5])] {
        let w = GenWord::new(p, &letters)?;
        let m = word_to_matrix(&w);
        let q = form_of_matrix(&m)?;
        let (alpha, conj) = fixed_points(&m)?;
        lines.push(format!("G_{p} {w}: M = {m}"));
        lines.push(format!("    Q = {q} simple: {}  D = {}", is_simple(&q), q.disc()));
        lines.push(format!("    fixed points {} and {}", alpha.to_decimal(12), conj.to_decimal(12)));
        lines.push(format!("    transpose identities hold: {}", transpose_form_identity_check(&m)?));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
