//! Frame-level simulator for mmWave downlink scheduling to high-speed-rail
//! mobile relays in a combined space-air-ground network.
//!
//! The network has three trackside base stations, one stationary relay
//! airship and one LEO satellite. Every frame the train advances, the
//! satellite moves along its polar orbit, one flow per mobile relay (MR)
//! arrives with a QoS rate requirement and a priority weight, and a
//! scheduler assigns transmission time slots so that as much weighted
//! flow demand as possible is completed.
//!
//! Crate layout:
//!
//! * [`geometry`] — train track, coverage spans, orbit propagation and
//!   transmitter–receiver distances,
//! * [`channel`] — Rician channel samples, link budget, SINR, rates and
//!   slot demands,
//! * [`scenario`] — TOML scenario files, derived quantities and flow
//!   generation,
//! * [`scheduler`] — link selection, the weighted multi-link greedy
//!   scheduler, five reference schedulers and the constraint verifier,
//! * [`oracle`] — exhaustive exact solver for desk-size instances,
//! * [`engine`] — the frame loop and parameter sweeps,
//! * [`report`] — CSV output.
//!
//! The numeric kernels in [`geometry`] and [`channel`] are generic over
//! the scalar type through [`Real`]; everything above them runs on `f64`.

pub mod channel;
pub mod engine;
pub mod geometry;
pub mod oracle;
pub mod report;
pub mod scenario;
pub mod scheduler;

/// Scalar bound for the numeric kernels: `f32` or `f64`.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + std::fmt::Debug + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: num_traits::Float + num_traits::FromPrimitive + std::fmt::Debug + Send + Sync + 'static
{
}

/// Default-precision aliases used by the scenario, scheduler and engine layers.
pub type Position3 = geometry::Position3D<f64>;
pub type GeoPoint = geometry::GeoCoordinate<f64>;
pub type TrainTrack = geometry::TrainPath<f64>;
pub type Orbit = geometry::SatelliteOrbit<f64>;
pub type Coverage = geometry::CoverageModel<f64>;
