// SPDX-License-Identifier: Apache-2.0

// One function for every Hecke group: 1/(z² − λz − 1)^k + 1/(z² + λz − 1)^k.

use hecke_rpf::field::{ExtElem, HeckeField, RingElem};
use hecke_rpf::quadforms::QForm;
use hecke_rpf::rpf::{from_forms, verify};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let mut lines = Vec::new();
    for p in 3..=7 {
        let f = HeckeField::get(p)?;
        let l = RingElem::lambda(&f);
        let one = RingElem::one(&f);
        let plus = QForm::new(one.clone(), l.clone(), -&one)?;
        let minus = QForm::new(one.clone(), -&l, -&one)?;
        let c = ExtElem::one(&plus.disc());
        let q = from_forms(1, &[(c.clone(), minus), (c, plus)])?;
        lines.push(format!("G_{p}: {}  {:?}", q.to_latex(), verify(&q)?));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
