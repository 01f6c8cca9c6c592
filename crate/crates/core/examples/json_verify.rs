// SPDX-License-Identifier: Apache-2.0

// Saving a period function as JSON, reading it back and re-verifying it.
// A broken copy is caught with a witness point.

use hecke_rpf::group::GenWord;
use hecke_rpf::isp::isp_of_word;
use hecke_rpf::rpf::{build_union, from_json, verify, Verdict};

pub fn run_example() -> hecke_rpf::Result<Vec<String>> {
    let isp = isp_of_word(&GenWord::new(6, &[2])?)?;
    let q = build_union(2, &isp)?;
    let text = serde_json::to_string(&q.to_json()).expect("serializable");
    let back = from_json(&serde_json::from_str(&text).expect("valid JSON"))?;
    assert!(back.semantic_eq(&q));
    let mut lines = vec![format!("{} bytes of JSON, reloaded: {:?}", text.len(), verify(&back)?)];

    let broken = back.with_tail(vec![hecke_rpf::field::ExtElem::one(back.disc()); 3])?;
    if let Verdict::Invalid { point, relation, .. } = verify(&broken)? {
        lines.push(format!("with a 1/z tail added: fails {relation:?} at z = {point}"));
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
