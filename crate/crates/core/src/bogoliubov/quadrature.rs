//! Direct evaluation of `A_mn = (ψ_n, ψ̂_m)` on the `t = 0` surface by
//! adaptive Gauss–Kronrod quadrature. Serves as an independent check of the
//! perturbative coefficients.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{CavityGeometry, Frame};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    /// Target absolute error of the whole integral.
    pub target: f64,
    /// Hard cap on the number of panels before giving up.
    pub max_panels: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            target: 1e-10,
            max_panels: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub panels: usize,
}

struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

fn kronrod21<F>(f: &F, lo: f64, hi: f64) -> Panel
where
    F: Fn(f64) -> Complex64,
{
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(centre);
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    for (j, (&x, &w)) in XGK[..10].iter().zip(&WGK[..10]).enumerate() {
        let pair = f(centre - half * x) + f(centre + half * x);
        kronrod += pair * w;
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    Panel {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// Globally adaptive Gauss–Kronrod (10/21) integration of a complex
/// integrand, starting from `initial_panels` equal panels and bisecting the
/// worst panel until the summed error estimate meets the target.
pub fn integrate<F>(
    f: F,
    lo: f64,
    hi: f64,
    initial_panels: usize,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    let initial = initial_panels.max(1);
    let width = (hi - lo) / initial as f64;
    let mut panels: Vec<Panel> = (0..initial)
        .map(|i| {
            let a = lo + width * i as f64;
            let b = if i + 1 == initial { hi } else { a + width };
            kronrod21(&f, a, b)
        })
        .collect();

    loop {
        let total_error: f64 = panels.iter().map(|p| p.error).sum();
        if total_error <= opts.target {
            let value = panels.iter().map(|p| p.value).sum();
            return Ok(QuadratureResult {
                value,
                error_estimate: total_error,
                panels: panels.len(),
            });
        }
        if panels.len() >= opts.max_panels {
            return Err(Error::QuadratureNonConvergence {
                achieved: total_error,
                target: opts.target,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .unwrap();
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        panels.push(kronrod21(&f, p.lo, mid));
        panels.push(kronrod21(&f, mid, p.hi));
    }
}

/// `A_mn`: the overlap of the inertial mode `n` with the Rindler mode `m`
/// of a cavity that starts accelerating at `t = 0`.
pub fn exact_coefficient(
    geom: &CavityGeometry,
    m: i64,
    n: i64,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    let (a, b) = (geom.a(), geom.b());
    let oscillations =
        geom.rindler_frequency(m).abs() * geom.log_ratio() + geom.minkowski_frequency(n).abs() * geom.length();
    let floor = 4 + (oscillations / PI).ceil() as usize;
    let integrand = |z: f64| {
        let z = z.clamp(a, b);
        let (inertial_r, inertial_l) = geom.mode_components_at_t0(n, z, Frame::Minkowski).unwrap();
        let (rindler_r, rindler_l) = geom.mode_components_at_t0(m, z, Frame::Rindler).unwrap();
        inertial_r.conj() * rindler_r + inertial_l.conj() * rindler_l
    };
    integrate(integrand, a, b, floor, opts)
}
