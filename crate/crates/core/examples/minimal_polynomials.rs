// SPDX-License-Identifier: Apache-2.0

// Minimal polynomials of λ_p = 2cos(π/p) for the first few Hecke groups.

use hecke_rpf::field::{minimal_polynomial, HeckeField};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for p in 3..=10 {
        let m = minimal_polynomial(p)?;
        let lambda = HeckeField::get(p)?.lambda_f64();
        lines.push(format!("p = {p:2}  degree {}  λ ≈ {lambda:.6}  {}", m.degree(), m.to_poly_string()));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
