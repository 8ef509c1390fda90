//! Tensor-product decompositions on the affine side: the generator ladder
//! over one block, and products of projective covers decomposed by the
//! greedy Verma-flag algorithm.
//!
//! Run with: `cargo run --example fusion_tables`

use fusionkl::klcat::{
    canonicalize, generator_label, projective_cover, tensor, tensor_projective, tensor_v2,
    KLKind, KLObject,
};
use fusionkl::level::make_level;

fn show(o: &KLObject) -> String {
    if o.is_zero() {
        return "0".into();
    }
    o.terms()
        .map(|(l, m)| {
            if m == &num::BigUint::from(1u32) {
                l.to_string()
            } else {
                format!("{m}*{l}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() {
    let lv = make_level(3, 1).expect("3/1 is admissible");
    println!("level k = -2 + 3/1, generator V2\n");

    println!("V2 tensor each canonical label, indices 1..12:");
    for r in 1..=12 {
        for kind in [KLKind::Simple, KLKind::Verma, KLKind::Proj] {
            let label = canonicalize(kind, r, lv).unwrap();
            if label.kind() != kind {
                continue; // aliased away, already listed under its canonical kind
            }
            let out = match tensor_v2(&KLObject::from_label(label)) {
                Ok(o) => show(&o),
                Err(e) => format!("({e})"),
            };
            println!("  V2 x {label:<4} = {out}");
        }
    }

    println!("\nprojective x projective through the greedy flag algorithm:");
    for (a, b) in [(4, 4), (4, 5), (5, 7), (2, 8)] {
        let pa = KLObject::from_label(projective_cover(a, lv).unwrap());
        let pb = KLObject::from_label(projective_cover(b, lv).unwrap());
        let prod = tensor_projective(&pa, &pb).unwrap();
        println!("  P{a} x P{b} = {}", show(&prod));
    }

    println!("\nsimple-ideal fusion and an unsupported pair:");
    let l2 = KLObject::from_label(canonicalize(KLKind::Simple, 2, lv).unwrap());
    let l1 = KLObject::from_label(canonicalize(KLKind::Simple, 1, lv).unwrap());
    let l4 = KLObject::from_label(canonicalize(KLKind::Simple, 4, lv).unwrap());
    println!("  L2 x L2 = {}", show(&tensor(&l2, &l2).unwrap()));
    println!("  L1 x L4 = {}", show(&tensor(&l1, &l4).unwrap()));
    let v4 = KLObject::from_label(canonicalize(KLKind::Verma, 4, lv).unwrap());
    println!("  L2 x V4 -> {}", tensor(&l2, &v4).unwrap_err());

    let _ = generator_label(lv);
}
