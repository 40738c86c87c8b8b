//! Degradation of entanglement between an inertial cavity (Alice) and a
//! cavity that follows a grafted trajectory (Rob).
//!
//! All degradation functions are returned as coefficients of `h²`; the
//! numeric `h` only enters when a negativity or CHSH value is formed.

mod density;

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::bogoliubov::{first_order_entry, leakage_tail_bound, ClosedFormPhases, TravelScenario};
use crate::error::{Error, Result};
use crate::geometry::CavityGeometry;
use crate::polylog::{q_function, UnitPhase};

pub use density::{
    density_oracle, hermitian_eigenvalues, horodecki_chsh, OracleOutcome, OrderingConvention,
};

/// `|k|h` at or above which the perturbative expansion is no longer trusted.
pub const VALIDITY_THRESHOLD: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StateFamily {
    /// Two-mode Bell state with Rob's mode a particle mode (`k >= 0`).
    TwoModePlus,
    /// Two-mode Bell state with Rob's mode an antiparticle mode (`k < 0`).
    TwoModeMinus,
    /// Entanglement in the charge of a single excitation, `k >= 0 > k'`.
    Charge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BellSign {
    Plus,
    Minus,
}

impl BellSign {
    pub fn value(self) -> f64 {
        match self {
            BellSign::Plus => 1.0,
            BellSign::Minus => -1.0,
        }
    }
}

/// Which initial state is prepared, and in which modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateSpec {
    pub family: StateFamily,
    pub k: i64,
    pub k_prime: Option<i64>,
    pub sign: BellSign,
    pub ordering: OrderingConvention,
}

impl StateSpec {
    pub fn two_mode(k: i64) -> Self {
        let family = if k >= 0 {
            StateFamily::TwoModePlus
        } else {
            StateFamily::TwoModeMinus
        };
        Self {
            family,
            k,
            k_prime: None,
            sign: BellSign::Plus,
            ordering: OrderingConvention::Standard,
        }
    }

    pub fn charge(k: i64, k_prime: i64) -> Self {
        Self {
            family: StateFamily::Charge,
            k,
            k_prime: Some(k_prime),
            sign: BellSign::Plus,
            ordering: OrderingConvention::Standard,
        }
    }

    pub fn with_sign(self, sign: BellSign) -> Self {
        Self { sign, ..self }
    }

    pub fn with_ordering(self, ordering: OrderingConvention) -> Self {
        Self { ordering, ..self }
    }

    /// Checks that the mode labels fit the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentState(msg));
        match (self.family, self.k_prime) {
            (StateFamily::TwoModePlus, None) if self.k >= 0 => Ok(()),
            (StateFamily::TwoModeMinus, None) if self.k < 0 => Ok(()),
            (StateFamily::Charge, Some(kp)) if self.k >= 0 && kp < 0 => Ok(()),
            (StateFamily::Charge, _) => bad(format!(
                "charge state needs k >= 0 and k' < 0, got k = {}, k' = {:?}",
                self.k, self.k_prime
            )),
            (family, Some(_)) => bad(format!("{family:?} takes a single mode index")),
            (family, None) => bad(format!("mode {} does not match {family:?}", self.k)),
        }
    }

    /// Largest `|k|` involved.
    pub fn max_mode(&self) -> u64 {
        let kp = self.k_prime.map_or(0, |k| k.unsigned_abs());
        self.k.unsigned_abs().max(kp)
    }

    pub fn outside_validity(&self, h: f64) -> bool {
        self.max_mode() as f64 * h >= VALIDITY_THRESHOLD
    }
}

/// Weight `|E₁^j - 1|²`, or `|E₁^j - 1|² |(E₁E₂)^j - 1|²` for a one-way
/// trip, multiplying `|A⁽¹⁾|²` for modes `j` apart.
pub fn pair_factor(phases: &ClosedFormPhases, j: i64) -> f64 {
    match *phases {
        ClosedFormPhases::Unaccelerated => 0.0,
        ClosedFormPhases::Single { e1 } => e1.pow(j).distance_sq_from_one(),
        ClosedFormPhases::OneWay { e1, e2 } => {
            e1.pow(j).distance_sq_from_one() * (e1 * e2).pow(j).distance_sq_from_one()
        }
    }
}

/// Truncated leakage sums `(Σ_{p>=0}, Σ_{p<0})` of
/// `pair_factor(k - p) |A⁽¹⁾_kp|²` over `|p| <= window`.
pub fn leakage_series(geom: &CavityGeometry, k: i64, phases: &ClosedFormPhases, window: usize) -> (f64, f64) {
    let w = window as i64;
    let term = |p: i64| pair_factor(phases, k - p) * first_order_entry(k, p, geom.s()).powi(2);
    // Summed from the far ends inwards so that small terms are added first.
    let plus = (0..=w).rev().map(term).sum();
    let minus = (-w..0).map(term).sum();
    (plus, minus)
}

/// `f_k = Σ_p |E₁^{k-p} - 1|² |A⁽¹⁾_kp|²` truncated to `|p| <= window`.
pub fn fk_series(geom: &CavityGeometry, k: i64, e1: UnitPhase, window: usize) -> f64 {
    let (plus, minus) = leakage_series(geom, k, &ClosedFormPhases::Single { e1 }, window);
    plus + minus
}

/// One-way-trip counterpart of [`fk_series`].
pub fn oneway_fk_series(geom: &CavityGeometry, k: i64, e1: UnitPhase, e2: UnitPhase, window: usize) -> f64 {
    let (plus, minus) = leakage_series(geom, k, &ClosedFormPhases::OneWay { e1, e2 }, window);
    plus + minus
}

fn alpha(geom: &CavityGeometry, k: i64) -> f64 {
    2.0 * (k as f64 + geom.s())
}

/// `f_k = 2[Q(α, 1) - Q(α, E₁)]` with `α = 2(k+s)`.
pub fn fk_closed(geom: &CavityGeometry, k: i64, e1: UnitPhase) -> f64 {
    let a = alpha(geom, k);
    (2.0 * (q_function(a, UnitPhase::ONE) - q_function(a, e1))).max(0.0)
}

/// Degradation after accelerating, coasting and braking:
/// `2[2Q(1) - 2Q(E₁) + Q(E₂) - 2Q(E₁E₂) + Q(E₁²E₂)]`.
pub fn oneway_fk(geom: &CavityGeometry, k: i64, e1: UnitPhase, e2: UnitPhase) -> f64 {
    let a = alpha(geom, k);
    let q = |z: UnitPhase| q_function(a, z);
    let e12 = e1 * e2;
    let combo = 2.0 * q(UnitPhase::ONE) - 2.0 * q(e1) + q(e2) - 2.0 * q(e12) + q(e1 * e12);
    (2.0 * combo).max(0.0)
}

/// Degradation coefficient for any scenario shape covered by the closed forms.
pub fn degradation(geom: &CavityGeometry, k: i64, phases: &ClosedFormPhases) -> f64 {
    match *phases {
        ClosedFormPhases::Unaccelerated => 0.0,
        ClosedFormPhases::Single { e1 } => fk_closed(geom, k, e1),
        ClosedFormPhases::OneWay { e1, e2 } => oneway_fk(geom, k, e1, e2),
    }
}

/// `½(1 - f h²)`.
pub fn negativity_two_mode(f: f64, h: f64) -> f64 {
    0.5 * (1.0 - f * h * h)
}

/// `2√2 (1 - ½ f h²)`.
pub fn chsh_max_two_mode(f: f64, h: f64) -> f64 {
    2.0 * SQRT_2 * (1.0 - 0.5 * f * h * h)
}

/// The same CHSH maximum through the Horodecki eigenvalues of
/// `U = diag(1-fh², 1-fh², (1-fh²)²)`.
pub fn chsh_max_eigen_route(f: f64, h: f64) -> f64 {
    let mu = 1.0 - f * h * h;
    let mut eig = [mu, mu, mu * mu];
    eig.sort_by(|x, y| y.total_cmp(x));
    2.0 * (eig[0] + eig[1]).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChargeNegativity {
    pub negativity: f64,
    /// Coefficient of `h²` of the interference contribution, so that
    /// `negativity = ½ - ¼(f_k + f_k')h² + ½ interference_term h²`.
    pub interference_term: f64,
    pub fk: f64,
    pub fk_prime: f64,
}

/// Negativity of the charge-entangled state, with the interference between
/// modes `k` and `k'` reported separately. It vanishes when `k - k'` is even.
pub fn negativity_charge(
    geom: &CavityGeometry,
    k: i64,
    k_prime: i64,
    phases: &ClosedFormPhases,
    h: f64,
) -> Result<ChargeNegativity> {
    StateSpec::charge(k, k_prime).validate()?;
    let fk = degradation(geom, k, phases);
    let fk_prime = degradation(geom, k_prime, phases);
    let interference_term = pair_factor(phases, k - k_prime) * first_order_entry(k, k_prime, geom.s()).powi(2);
    let h2 = h * h;
    Ok(ChargeNegativity {
        negativity: 0.5 - 0.25 * (fk + fk_prime) * h2 + 0.5 * interference_term * h2,
        interference_term,
        fk,
        fk_prime,
    })
}

/// Closed-form evaluation of one scenario and state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntanglementReport {
    /// Degradation coefficient of `h²`: `f_k` for the two-mode family and
    /// `½(f_k + f_k')` for the charge family.
    pub f_coefficient: f64,
    /// Truncated leakage of mode `k` into particle and antiparticle modes.
    pub fk_plus: f64,
    pub fk_minus: f64,
    pub negativity: f64,
    pub chsh_max: Option<f64>,
    pub interference_term: Option<f64>,
    /// Bound on what the truncated leakage sums miss.
    pub tail_estimate: f64,
    pub validity_warning: bool,
}

impl EntanglementReport {
    pub fn closed_form(
        scenario: &TravelScenario,
        state: &StateSpec,
        h: f64,
        window: usize,
    ) -> Result<Self> {
        state.validate()?;
        let phases = scenario.closed_form_phases().ok_or_else(|| {
            Error::Config("the trajectory has no closed form; only the density oracle applies".into())
        })?;
        let geom = scenario.geometry();
        let (fk_plus, fk_minus) = leakage_series(geom, state.k, &phases, window);
        let mut tail_estimate = leakage_tail_bound(state.k, geom.s(), window);
        let factor_max = match phases {
            ClosedFormPhases::OneWay { .. } => 4.0,
            _ => 1.0,
        };
        tail_estimate *= factor_max;
        let validity_warning = state.outside_validity(h);
        match state.family {
            StateFamily::TwoModePlus | StateFamily::TwoModeMinus => {
                let f = degradation(geom, state.k, &phases);
                Ok(Self {
                    f_coefficient: f,
                    fk_plus,
                    fk_minus,
                    negativity: negativity_two_mode(f, h),
                    chsh_max: Some(chsh_max_two_mode(f, h)),
                    interference_term: None,
                    tail_estimate,
                    validity_warning,
                })
            }
            StateFamily::Charge => {
                let kp = state.k_prime.expect("validated");
                let charge = negativity_charge(geom, state.k, kp, &phases, h)?;
                tail_estimate = tail_estimate.max(factor_max * leakage_tail_bound(kp, geom.s(), window));
                Ok(Self {
                    f_coefficient: 0.5 * (charge.fk + charge.fk_prime),
                    fk_plus,
                    fk_minus,
                    negativity: charge.negativity,
                    chsh_max: None,
                    interference_term: Some(charge.interference_term),
                    tail_estimate,
                    validity_warning,
                })
            }
        }
    }
}
