//! Floating-point verification of the analytic inputs behind rigidity: the
//! Gauss hypergeometric series, a Lanczos Gamma function, residuals of the
//! two second-order equations satisfied by the four-point functions of the
//! two-dimensional generator, and the connection constant
//! `-1/cos(pi*q/p)` computed along two independent routes.

use crate::level::Level;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum KzError {
    #[error("hypergeometric series did not converge within {0} terms")]
    NonConvergent(usize),
    #[error("invalid hypergeometric parameter: c = {0} is a nonpositive integer")]
    BadParameter(f64),
    #[error("gamma pole at nonpositive integer {0}")]
    PoleAt(f64),
    #[error("the p = 2 family has logarithmic solutions outside this basis")]
    UnsupportedLogCase,
    #[error("argument z = {0} outside the open interval (0,1)")]
    DomainZ(f64),
    #[error("invalid solution selector {0}; use 1 or 2")]
    BadSolutionIndex(u8),
    #[error("gamma-route degeneracy: {0}")]
    Degenerate(String),
}

/// Parameters for a Gauss hypergeometric evaluation.
#[derive(Debug, Clone, Copy)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
    pub tol: f64,
    pub max_terms: usize,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> HypParams {
        HypParams {
            a,
            b,
            c,
            z,
            tol: 1e-15,
            max_terms: 500_000,
        }
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < 1e-12
}

/// The Gauss series `2F1(a,b;c;z) = sum (a)_n (b)_n / ((c)_n n!) z^n`,
/// truncated when the running term drops below `tol` relative to the partial
/// sum.
pub fn hyp2f1(p: &HypParams) -> Result<f64, KzError> {
    if is_nonpositive_integer(p.c) {
        return Err(KzError::BadParameter(p.c));
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for n in 0..p.max_terms {
        let nf = n as f64;
        term *= (p.a + nf) * (p.b + nf) / ((p.c + nf) * (nf + 1.0)) * p.z;
        sum += term;
        if term.abs() < p.tol * sum.abs().max(1e-300) {
            return Ok(sum);
        }
    }
    Err(KzError::NonConvergent(p.max_terms))
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function by the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula for arguments below one half.
pub fn gamma_fn(x: f64) -> Result<f64, KzError> {
    if is_nonpositive_integer(x) {
        return Err(KzError::PoleAt(x));
    }
    if x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let s = (std::f64::consts::PI * x).sin();
        return Ok(std::f64::consts::PI / (s * gamma_fn(1.0 - x)?));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc)
}

/// Value and first two derivatives of a function at a point.
#[derive(Debug, Clone, Copy)]
struct Jet2 {
    f: f64,
    d1: f64,
    d2: f64,
}

impl Jet2 {
    fn mul(self, o: Jet2) -> Jet2 {
        Jet2 {
            f: self.f * o.f,
            d1: self.f * o.d1 + self.d1 * o.f,
            d2: self.f * o.d2 + 2.0 * self.d1 * o.d1 + self.d2 * o.f,
        }
    }
}

/// `z^alpha` with derivatives.
fn power_jet(z: f64, alpha: f64) -> Jet2 {
    let f = z.powf(alpha);
    Jet2 {
        f,
        d1: alpha * z.powf(alpha - 1.0),
        d2: alpha * (alpha - 1.0) * z.powf(alpha - 2.0),
    }
}

/// `(1-z)^beta` with derivatives in `z`.
fn one_minus_power_jet(z: f64, beta: f64) -> Jet2 {
    let w = 1.0 - z;
    Jet2 {
        f: w.powf(beta),
        d1: -beta * w.powf(beta - 1.0),
        d2: beta * (beta - 1.0) * w.powf(beta - 2.0),
    }
}

/// `2F1(a,b;c;z)` with derivatives via the contiguous relation
/// `d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z)`.
fn hyp_jet(a: f64, b: f64, c: f64, z: f64) -> Result<Jet2, KzError> {
    let f = hyp2f1(&HypParams::new(a, b, c, z))?;
    let d1 = a * b / c * hyp2f1(&HypParams::new(a + 1.0, b + 1.0, c + 1.0, z))?;
    let d2 = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0))
        * hyp2f1(&HypParams::new(a + 2.0, b + 2.0, c + 2.0, z))?;
    Ok(Jet2 { f, d1, d2 })
}

/// Which of the two second-order equations to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OdeWhich {
    Phi1,
    Phi2,
}

fn basis_solution(
    which: OdeWhich,
    lv: Level,
    index: u8,
    z: f64,
) -> Result<Jet2, KzError> {
    let kappa = lv.p() as f64 / lv.q() as f64;
    let h2 = 3.0 / (4.0 * kappa);
    let h3 = 2.0 / kappa;
    let (alpha, a, b, c) = match (which, index) {
        (OdeWhich::Phi1, 1) => (
            -2.0 * h2 + 1.0,
            1.0 - 1.0 / kappa,
            1.0 - 3.0 / kappa,
            2.0 - 2.0 / kappa,
        ),
        (OdeWhich::Phi1, 2) => (-2.0 * h2 + h3, 1.0 / kappa, -1.0 / kappa, 2.0 / kappa),
        (OdeWhich::Phi2, 1) => (
            -2.0 * h2,
            1.0 - 3.0 / kappa,
            -1.0 / kappa,
            1.0 - 2.0 / kappa,
        ),
        (OdeWhich::Phi2, 2) => (
            -2.0 * h2 + h3,
            1.0 - 1.0 / kappa,
            1.0 / kappa,
            1.0 + 2.0 / kappa,
        ),
        (_, i) => return Err(KzError::BadSolutionIndex(i)),
    };
    let pre = power_jet(z, alpha).mul(one_minus_power_jet(z, -2.0 * h2));
    Ok(pre.mul(hyp_jet(a, b, c, z)?))
}

/// Absolute residual of the selected basis solution in the corresponding
/// second-order equation at a point `z` in `(0,1)`. The derivatives are
/// computed analytically (prefactor product rule plus the contiguous
/// relation), never by finite differences.
pub fn ode_residual(which: OdeWhich, lv: Level, index: u8, z: f64) -> Result<f64, KzError> {
    if lv.p() == 2 {
        return Err(KzError::UnsupportedLogCase);
    }
    if !(0.0 < z && z < 1.0) {
        return Err(KzError::DomainZ(z));
    }
    let kappa = lv.p() as f64 / lv.q() as f64;
    let phi = basis_solution(which, lv, index, z)?;
    let residual = match which {
        OdeWhich::Phi1 => {
            kappa * kappa * z * (1.0 - z) * phi.d2 - kappa * ((kappa + 2.0) * z - 1.0) * phi.d1
                + (kappa / (2.0 * z) - 3.0 / (4.0 * z * (1.0 - z))) * phi.f
        }
        OdeWhich::Phi2 => {
            kappa * kappa * z * (1.0 - z) * phi.d2
                + kappa * (kappa + 1.0) * (1.0 - 2.0 * z) * phi.d1
                - (2.0 * kappa + 3.0 / (4.0 * z * (1.0 - z))) * phi.f
        }
    };
    Ok(residual.abs())
}

/// The two routes to the connection constant, both targeting
/// `-1/cos(pi*q/p)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ConnectionConstant {
    pub gamma_value: f64,
    pub series_value: f64,
    pub expected: f64,
}

/// Evaluates the single (2 -> 1)-strand combination of the two fundamental
/// series at `z`.
fn connection_combination(lv: Level, z: f64) -> Result<f64, KzError> {
    let kappa = lv.p() as f64 / lv.q() as f64;
    let k = kappa - 2.0;
    let f1 = hyp2f1(&HypParams::new(
        1.0 - 1.0 / kappa,
        1.0 - 3.0 / kappa,
        2.0 - 2.0 / kappa,
        z,
    ))?;
    let f2 = hyp2f1(&HypParams::new(
        1.0 - 3.0 / kappa,
        -1.0 / kappa,
        1.0 - 2.0 / kappa,
        z,
    ))?;
    Ok(-f1 / k - f2)
}

/// Computes the connection constant along two routes: the closed Gamma
/// combination, and the limit of the series combination at `z -> 1` from
/// samples at `1 - eps` (both series converge there since `c - a - b =
/// 2/kappa > 0`). The limit is extracted by eliminating the two leading
/// correction powers `eps^{2/kappa}` and `eps` from three samples.
pub fn connection_constant(lv: Level) -> Result<ConnectionConstant, KzError> {
    if lv.p() == 2 {
        return Err(KzError::UnsupportedLogCase);
    }
    let kappa = lv.p() as f64 / lv.q() as f64;
    let k = kappa - 2.0;
    if k.abs() < 1e-12 {
        return Err(KzError::Degenerate("kappa = 2 makes 1/(kappa-2) blow up".into()));
    }
    let expected = -1.0 / (std::f64::consts::PI * lv.q() as f64 / lv.p() as f64).cos();

    // Gamma route
    let g = |x: f64| gamma_fn(x);
    let gamma_value = -1.0 / k * g(2.0 - 2.0 / kappa)? * g(2.0 / kappa)?
        / (g(1.0 - 1.0 / kappa)? * g(1.0 + 1.0 / kappa)?)
        - g(1.0 - 2.0 / kappa)? * g(2.0 / kappa)? / (g(1.0 / kappa)? * g(1.0 - 1.0 / kappa)?);

    // Series route: f(1-eps) = L + C1 eps^s + C2 eps + o(eps), s = 2/kappa.
    // Solve the 3x3 system from eps in {1e-2, 1e-3, 1e-4}.
    let s = 2.0 / kappa;
    let eps = [1e-2f64, 1e-3, 1e-4];
    let mut samples = [0.0f64; 3];
    for (i, e) in eps.iter().enumerate() {
        samples[i] = connection_combination(lv, 1.0 - e)?;
    }
    let series_value = extrapolate_two_powers(&eps, &samples, s);

    Ok(ConnectionConstant {
        gamma_value,
        series_value,
        expected,
    })
}

/// Solves `f_i = L + C1 eps_i^s + C2 eps_i` for `L` by Cramer's rule.
fn extrapolate_two_powers(eps: &[f64; 3], f: &[f64; 3], s: f64) -> f64 {
    let m = [
        [1.0, eps[0].powf(s), eps[0]],
        [1.0, eps[1].powf(s), eps[1]],
        [1.0, eps[2].powf(s), eps[2]],
    ];
    let det3 = |a: &[[f64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let d = det3(&m);
    let mut m0 = m;
    for i in 0..3 {
        m0[i][0] = f[i];
    }
    det3(&m0) / d
}

/// One verification record, serialized in the report format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KzRecord {
    pub case: String,
    pub quantity: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl KzRecord {
    pub fn check(case: &str, quantity: &str, expected: f64, computed: f64, tol: f64) -> KzRecord {
        KzRecord {
            case: case.to_string(),
            quantity: quantity.to_string(),
            expected,
            computed,
            tolerance: tol,
            pass: (expected - computed).abs() < tol,
        }
    }
}

/// The level set used by the verification reports.
pub fn report_levels() -> Vec<Level> {
    [(3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)]
        .into_iter()
        .map(|(p, q)| Level::new(p, q).expect("valid report level"))
        .collect()
}

/// Residual records for all four basis solutions at nine interior points.
pub fn residual_report(lv: Level) -> Result<Vec<KzRecord>, KzError> {
    let mut out = vec![];
    for which in [OdeWhich::Phi1, OdeWhich::Phi2] {
        for index in [1u8, 2] {
            for iz in 1..=9 {
                let z = iz as f64 / 10.0;
                let r = ode_residual(which, lv, index, z)?;
                let name = match which {
                    OdeWhich::Phi1 => "phi1",
                    OdeWhich::Phi2 => "phi2",
                };
                out.push(KzRecord::check(
                    &format!("{lv} {name}^({index}) z={z}"),
                    "ode residual",
                    0.0,
                    r,
                    1e-8,
                ));
            }
        }
    }
    Ok(out)
}

/// Connection-constant records for one level.
pub fn connection_report(lv: Level) -> Result<Vec<KzRecord>, KzError> {
    let c = connection_constant(lv)?;
    Ok(vec![
        KzRecord::check(
            &format!("{lv}"),
            "connection constant (gamma route)",
            c.expected,
            c.gamma_value,
            1e-8,
        ),
        KzRecord::check(
            &format!("{lv}"),
            "connection constant (series route)",
            c.expected,
            c.series_value,
            1e-4,
        ),
    ])
}
