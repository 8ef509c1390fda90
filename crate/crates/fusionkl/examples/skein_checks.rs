//! The Temperley-Lieb calculus at the loop value of the level: projectors,
//! braiding elements, the hexagon enumeration, and the rigidity scalars.
//!
//! Run with: `cargo run --example skein_checks`

use fusionkl::cyclotomic::{cyc_root, to_complex};
use fusionkl::level::{make_level, BraidingVariant, Flavor, TwistSign};
use fusionkl::tlskein::{
    braid_coefficients, check_braid_relation, cup_cap_pairing, jones_wenzl, markov_trace,
    r_compose_i_scalar, zigzag_holds,
};

fn main() {
    for (p, q) in [(2i64, 1i64), (3, 1), (5, 2)] {
        let lv = make_level(p, q).unwrap();
        let delta = cup_cap_pairing(lv);
        println!("level {p}/{q}: delta = {delta} ~ {:.6}", to_complex(&delta).re);
        println!("  zig-zag identity: {}", zigzag_holds(lv));

        for n in 1..p as u64 {
            let jw = jones_wenzl(lv, n).unwrap();
            let tr = markov_trace(&jw).unwrap();
            println!("  projector on {n} strand(s): {} diagrams, trace {tr}",
                jw.combo().count());
        }
        if let Err(e) = jones_wenzl(lv, p as u64) {
            println!("  projector on {p} strands: {e}");
        }

        // enumerate hexagon-compatible coefficient pairs among all roots
        let order = lv.root_order() as i64;
        let mut count = 0;
        for s in 0..order {
            for t in 0..order {
                if check_braid_relation(lv, &cyc_root(lv, s), &cyc_root(lv, t)) {
                    count += 1;
                }
            }
        }
        println!("  hexagon-compatible pairs among {} candidates: {count}", order * order);

        for flavor in [Flavor::Standard, Flavor::Twisted, Flavor::Reverse, Flavor::TwistedReverse] {
            let v = BraidingVariant::new(flavor, TwistSign::Plus);
            let (a, b) = braid_coefficients(lv, v);
            let c = r_compose_i_scalar(lv, v);
            println!("  {flavor}: R = ({a})*Id + ({b})*e1, R.cup = ({c}).cup");
        }
        println!();
    }
}
