//! Structure reports for the canonical indecomposables: composition factors,
//! Loewy layers, contragredients, logarithmic flags, and twist scalars.
//!
//! Run with: `cargo run --example module_structure`

use fusionkl::cyclotomic::to_complex;
use fusionkl::klcat::{
    canonicalize, composition_factors, contragredient, is_logarithmic, loewy, twist_scalar,
    KLKind, KLObject,
};
use fusionkl::level::{make_level, BraidingVariant};

fn main() {
    let lv = make_level(3, 1).expect("3/1 is admissible");
    println!("level k = -2 + 3/1\n");

    for (kind, r) in [
        (KLKind::Simple, 2),
        (KLKind::Simple, 3),
        (KLKind::Verma, 2),
        (KLKind::CoVerma, 2),
        (KLKind::Proj, 4),
        (KLKind::Proj, 5),
        (KLKind::Proj, 7),
    ] {
        let label = canonicalize(kind, r, lv).unwrap();
        let factors = composition_factors(&label);
        let layers = loewy(&label).layers;
        let dual = contragredient(&KLObject::from_label(label));
        let (twist, log) = twist_scalar(&label, BraidingVariant::STANDARD);
        println!("{label}:");
        println!(
            "  factors: {}",
            factors
                .0
                .iter()
                .map(|(i, m)| format!("L{i}^{m}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
        println!("  loewy layers (head -> socle): {layers:?}");
        println!(
            "  contragredient: {}",
            dual.terms().map(|(l, _)| l.to_string()).collect::<Vec<_>>().join(" + ")
        );
        println!(
            "  twist scalar: {twist} ~ {:.4}{:+.4}i{}",
            to_complex(&twist).re,
            to_complex(&twist).im,
            if log { "  (logarithmic: nilpotent part present)" } else { "" }
        );
        assert_eq!(log, is_logarithmic(&label));
        println!();
    }
}
