// SPDX-License-Identifier: Apache-2.0

// Solving for the 1/z^n tail when no closed form applies: weight 4 on a
// symmetric ISP and weight 2 on a single nonsymmetric one.

use hecke_rpf::group::GenWord;
use hecke_rpf::isp::isp_of_word;
use hecke_rpf::rpf::{build_ansatz, verify, AnsatzOutcome, Template};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for (p, letters, k, template) in [
        (3, vec![1, 2], 2, Template::Symmetric),
        (4, vec![2], 2, Template::Symmetric),
        (5, vec![2], 1, Template::Nonsymmetric),
    ] {
        let isp = isp_of_word(&GenWord::new(p, &letters)?)?;
        let head = format!("G_{p} {} weight {}", isp.word, 2 * k);
        match build_ansatz(k, &isp, template)? {
            AnsatzOutcome::Unique(q) => {
                lines.push(format!("{head}: c1 = {}", q.tail()[0].to_decimal(12)));
                lines.push(format!("    {}  valid: {}", q.to_latex(), verify(&q)?.is_valid()));
            }
            AnsatzOutcome::SolutionFamily { particular, directions } => {
                lines.push(format!("{head}: {} free direction(s), particular solution", directions.len()));
                lines.push(format!("    {}  valid: {}", particular.to_latex(), verify(&particular)?.is_valid()));
            }
            AnsatzOutcome::NoSolution => lines.push(format!("{head}: no solution")),
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
