//! Rician link model: channel gain samples, received power, SINR,
//! per-slot Shannon rate, per-frame throughput and the slot demand a
//! flow places on a link.
//!
//! All quantities are linear (watts, ratios); dB conversions happen once
//! at scenario load. Channel state is frozen per frame: one gain sample
//! per (transmitter, receiver, frame) shared by all slots of that frame.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::Real;

#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("distance must be positive, got {0}")]
    NonPositiveDistance(f64),
}

/// Sentinel slot demand for a link that cannot carry the flow at all.
pub const UNSCHEDULABLE_SLOTS: u64 = u64::MAX;

/// Per-link channel parameters, already converted to linear units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams<R: Real> {
    /// Rician factor K as a linear power ratio.
    pub rician_k: R,
    /// Path gain at the 1 m reference distance.
    pub sigma: R,
    /// Path-loss exponent.
    pub gamma: R,
    /// Carrier wavelength in meters.
    pub wavelength: R,
    /// Linear atmospheric attenuation factor for this link.
    pub atmo_zeta: R,
    /// Noise power density in W/Hz.
    pub noise_density: R,
    /// Bandwidth in Hz.
    pub bandwidth: R,
    /// Transceiver efficiency factor in (0, 1).
    pub efficiency: R,
}

/// Transmit power and antenna gains of one link, linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget<R: Real> {
    pub tx_power: R,
    pub tx_gain: R,
    pub rx_gain: R,
}

/// One frozen channel draw for a link in a frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSample<R: Real> {
    pub gain: Complex<R>,
    pub distance: R,
    pub frame: u64,
}

impl<R: Real> ChannelSample<R> {
    pub fn power_gain(&self) -> R {
        self.gain.norm_sqr()
    }
}

/// Linear attenuation factor for `db_per_km` over `distance` meters of
/// path, with the attenuating path length capped at `path_cap` meters
/// (links above the atmosphere only pay for the part inside it).
pub fn atmospheric_factor<R: Real>(db_per_km: R, distance: R, path_cap: R) -> R {
    let thousand = R::from_f64(1000.0).expect("constant fits scalar");
    let ten = R::from_f64(10.0).expect("constant fits scalar");
    let path_km = distance.min(path_cap) / thousand;
    ten.powf(-(db_per_km * path_km) / ten)
}

/// Deterministic line-of-sight gain: magnitude `sqrt(sigma·d^-gamma)`,
/// phase `-2πd/λ`.
pub fn los_gain<R: Real>(
    distance: R,
    params: &ChannelParams<R>,
) -> Result<Complex<R>, ChannelError> {
    if distance <= R::zero() {
        return Err(ChannelError::NonPositiveDistance(
            distance.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let magnitude = (params.sigma * distance.powf(-params.gamma)).sqrt();
    let tau = R::from_f64(std::f64::consts::TAU).expect("constant fits scalar");
    let phase = -tau * distance / params.wavelength;
    Ok(Complex::from_polar(magnitude, phase))
}

/// Rician draw: LoS component weighted by `K/(1+K)` plus a circularly
/// symmetric unit-power scatter term scaled by the same mean path gain.
pub fn sample_channel<R, G>(
    distance: R,
    params: &ChannelParams<R>,
    frame: u64,
    rng: &mut G,
) -> Result<ChannelSample<R>, ChannelError>
where
    R: Real,
    G: Rng + ?Sized,
    StandardNormal: Distribution<R>,
{
    let los = los_gain(distance, params)?;
    let one = R::one();
    let k = params.rician_k;
    let los_weight = (k / (one + k)).sqrt();
    let mean_gain = params.sigma * distance.powf(-params.gamma);
    let scatter_weight = (mean_gain / (one + k)).sqrt();

    // h_nl ~ CN(0,1): unit total power split over the two quadratures.
    let half = (one / (one + one)).sqrt();
    let re: R = StandardNormal.sample(rng);
    let im: R = StandardNormal.sample(rng);
    let scatter = Complex::new(re * half, im * half);

    Ok(ChannelSample {
        gain: los * los_weight + scatter * scatter_weight,
        distance,
        frame,
    })
}

/// Received power in watts.
pub fn received_power<R: Real>(
    budget: &LinkBudget<R>,
    sample: &ChannelSample<R>,
    params: &ChannelParams<R>,
) -> R {
    budget.tx_power * budget.tx_gain * budget.rx_gain * sample.power_gain() * params.atmo_zeta
}

/// Signal to interference-plus-noise ratio.
pub fn sinr<R: Real>(signal: R, interference: R, params: &ChannelParams<R>) -> R {
    signal / (interference + params.noise_density * params.bandwidth)
}

/// Achievable rate of one slot in bits/second; zero when the slot or the
/// transmitter is not active for the flow.
pub fn slot_rate<R: Real>(sinr: R, params: &ChannelParams<R>, active: bool) -> R {
    if !active {
        return R::zero();
    }
    let two = R::one() + R::one();
    params.efficiency * params.bandwidth * (R::one() + sinr).ln() / two.ln()
}

/// Frame timing shared by the channel math and the schedulers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameTiming<R: Real> {
    /// Slot duration Δt in seconds.
    pub slot_time: R,
    /// Scheduling/beacon phase duration in seconds.
    pub beacon: R,
    /// Number of transmission slots per frame.
    pub slots: u64,
}

impl<R: Real> FrameTiming<R> {
    /// Total frame duration including the beacon phase.
    pub fn frame_duration(&self) -> R {
        self.beacon + R::from_u64(self.slots).expect("slots fit scalar") * self.slot_time
    }
}

/// Throughput over one frame: slot payloads averaged over the whole frame
/// duration including the beacon overhead.
pub fn frame_throughput<R: Real>(slot_rates: &[R], timing: &FrameTiming<R>) -> R {
    let payload = slot_rates
        .iter()
        .fold(R::zero(), |acc, &r| acc + r * timing.slot_time);
    payload / timing.frame_duration()
}

/// Number of slots a flow with QoS rate `qos` occupies on a link whose
/// frozen per-slot rate is `per_slot_rate`. Returns
/// [`UNSCHEDULABLE_SLOTS`] when the link carries nothing.
pub fn slot_demand<R: Real>(qos: R, per_slot_rate: R, timing: &FrameTiming<R>) -> u64 {
    if qos <= R::zero() {
        return 0;
    }
    if per_slot_rate <= R::zero() {
        return UNSCHEDULABLE_SLOTS;
    }
    let needed = (qos * timing.frame_duration() / (per_slot_rate * timing.slot_time)).ceil();
    match needed.to_f64() {
        Some(v) if v.is_finite() && v < u64::MAX as f64 => v as u64,
        _ => UNSCHEDULABLE_SLOTS,
    }
}

/// Piecewise-linear Rician K over elevation angle, in dB between two
/// anchor elevations and clamped outside them. Stand-in for measured
/// elevation-dependent K tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElevationKTable {
    pub low_elevation_deg: f64,
    pub low_k_db: f64,
    pub high_elevation_deg: f64,
    pub high_k_db: f64,
}

impl ElevationKTable {
    pub fn k_linear(&self, elevation_rad: f64) -> f64 {
        let deg = elevation_rad.to_degrees();
        let t = ((deg - self.low_elevation_deg)
            / (self.high_elevation_deg - self.low_elevation_deg))
            .clamp(0.0, 1.0);
        let db = self.low_k_db + t * (self.high_k_db - self.low_k_db);
        10f64.powf(db / 10.0)
    }
}
