//! Numerical verification of the hypergeometric machinery: residuals of the
//! four basis solutions in their second-order equations and the connection
//! constant -1/cos(pi q/p) computed along the Gamma and series routes.
//!
//! Run with: `cargo run --example kz_connection`

use fusionkl::kzverify::{connection_constant, ode_residual, report_levels, OdeWhich};

fn main() {
    println!("{:<6} {:>12} {:>14} {:>14} {:>12}", "level", "max residual", "gamma route", "series route", "target");
    for lv in report_levels() {
        let mut worst = 0.0f64;
        for which in [OdeWhich::Phi1, OdeWhich::Phi2] {
            for index in [1, 2] {
                for iz in 1..=9 {
                    let z = iz as f64 / 10.0;
                    worst = worst.max(ode_residual(which, lv, index, z).unwrap());
                }
            }
        }
        let c = connection_constant(lv).unwrap();
        println!(
            "{:<6} {:>12.2e} {:>14.9} {:>14.9} {:>12.9}",
            lv.to_string(),
            worst,
            c.gamma_value,
            c.series_value,
            c.expected
        );
    }
}
