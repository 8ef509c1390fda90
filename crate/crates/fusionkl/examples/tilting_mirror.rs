//! The quantum side and the functor dictionary: tensoring with the standard
//! object, tilting products by the Weyl-flag greedy algorithm, and the
//! index-shift correspondence with affine projective covers.
//!
//! Run with: `cargo run --example tilting_mirror`

use fusionkl::klcat::{projective_cover, tensor_projective, KLObject};
use fusionkl::klfunctor::{equivalence_dictionary, functor_object, functor_projective};
use fusionkl::level::make_level;
use fusionkl::qgroup::{q_hom_dim, tilt_tensor, tilting, x_tensor_tilting, QObject};

fn show(o: &QObject) -> String {
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
    println!("quantum sl2 at zeta = exp(pi i/3) (level 3/1)\n");

    println!("standard object against tiltings (canonical names shown):");
    for lambda in 0..=8 {
        let t = tilting(lambda, lv).unwrap();
        let prod = x_tensor_tilting(lambda, lv).unwrap();
        println!("  X x T{lambda} ({t}) = {}", show(&prod));
    }

    println!("\ntilting tensor squares by the greedy Weyl-flag algorithm:");
    for lambda in [3, 4, 6] {
        let t = QObject::from_label(tilting(lambda, lv).unwrap());
        println!("  T{lambda} x T{lambda} = {}", show(&tilt_tensor(&t, &t).unwrap()));
    }

    println!("\nthe dictionary P_r <-> T_(r-1) and its monoidality:");
    for r in 1..=8 {
        println!("  P{r} <-> {}", equivalence_dictionary(r, lv).unwrap());
    }
    let (a, b) = (4, 5);
    let pa = KLObject::from_label(projective_cover(a, lv).unwrap());
    let pb = KLObject::from_label(projective_cover(b, lv).unwrap());
    let affine_prod = tensor_projective(&pa, &pb).unwrap();
    let image = functor_projective(&affine_prod).unwrap();
    let ta = QObject::from_label(tilting(a - 1, lv).unwrap());
    let tb = QObject::from_label(tilting(b - 1, lv).unwrap());
    let quantum_prod = tilt_tensor(&ta, &tb).unwrap();
    println!("\n  F(P{a} x P{b}) = {}", show(&image));
    println!("  T{} x T{}    = {}", a - 1, b - 1, show(&quantum_prod));
    assert_eq!(image, quantum_prod);

    println!("\nmorphism-space dimensions between tiltings:");
    for (a, b) in [(3, 3), (1, 3), (2, 5), (3, 7)] {
        let la = tilting(a, lv).unwrap();
        let ob = QObject::from_label(tilting(b, lv).unwrap());
        println!("  dim hom(T{a}, T{b}) = {}", q_hom_dim(&la, &ob).unwrap());
    }

    println!("\nimages of non-projective objects live in the Grothendieck group:");
    let v4 = KLObject::from_label(
        fusionkl::klcat::canonicalize(fusionkl::klcat::KLKind::Verma, 4, lv).unwrap(),
    );
    let img = functor_object(&v4);
    println!(
        "  [F(V4)] = {}",
        img.gr_part
            .0
            .iter()
            .map(|(i, m)| format!("[Lq{i}]^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
}
