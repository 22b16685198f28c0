//! Spatial model: train and MR positions on a straight track, coverage
//! spans of the trackside transmitters, circular polar orbit propagation
//! and slant distances for the satellite links.
//!
//! The track runs along the x axis. Trackside sites (base stations, the
//! airship) live in the local Cartesian frame; the satellite lives on a
//! sphere and is related to the ground through haversine distances. MRs
//! carry a fixed geodetic anchor so the two frames never have to be
//! reconciled beyond that.

use thiserror::Error;

use crate::Real;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("MR index {index} out of range 1..={count}")]
    MrIndexOutOfRange { index: u32, count: u32 },
    #[error("combined coverage span is empty")]
    EmptyCoverage,
    #[error("frame duration must be positive")]
    NonPositiveFrameDuration,
}

/// A point in the local Cartesian frame; `z` is height above ground.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position3D<R: Real> {
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Real> Position3D<R> {
    pub fn new(x: R, y: R, z: R) -> Self {
        Self { x, y, z }
    }
}

/// Geodetic point: latitude/longitude in radians, altitude in meters
/// above the reference sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoCoordinate<R: Real> {
    pub latitude: R,
    pub longitude: R,
    pub altitude: R,
}

impl<R: Real> GeoCoordinate<R> {
    pub fn new(latitude: R, longitude: R, altitude: R) -> Self {
        Self {
            latitude,
            longitude,
            altitude,
        }
    }
}

/// Straight-line train model: MRs are strung out behind the head MR at a
/// fixed spacing and the whole string advances a fixed distance per frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainPath<R: Real> {
    /// Train speed in m/s.
    pub speed: R,
    /// Number of mobile relays on the roof.
    pub mr_count: u32,
    /// Spacing between consecutive MRs in meters.
    pub mr_spacing: R,
    /// x coordinate where the head MR enters the first coverage span.
    pub entry_x: R,
    /// Distance the train covers in one frame, in meters.
    pub frame_advance: R,
    /// MR antenna height in meters.
    pub mr_height: R,
}

/// Circular polar orbit (inclination 90°) with a configurable start point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SatelliteOrbit<R: Real> {
    /// Altitude above the reference sphere in meters.
    pub altitude: R,
    /// Subsatellite start point; `altitude` field mirrors the orbit altitude.
    pub initial_position: GeoCoordinate<R>,
    pub earth: EarthModel<R>,
}

/// Earth constants used by the orbit and haversine math.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EarthModel<R: Real> {
    /// Mean radius in meters.
    pub radius: R,
    /// Mass in kilograms.
    pub mass: R,
    /// Gravitational constant in m³·kg⁻¹·s⁻².
    pub gravitational_constant: R,
}

impl<R: Real> EarthModel<R> {
    fn c(v: f64) -> R {
        R::from_f64(v).expect("constant fits scalar")
    }

    pub fn standard() -> Self {
        Self {
            radius: Self::c(6_371_000.0),
            mass: Self::c(5.972e24),
            gravitational_constant: Self::c(6.674e-11),
        }
    }
}

/// Maximum transmitter–receiver distances at the receiver sensitivity,
/// one per link class. Spans shrink to zero (never an error) when a
/// transmitter sits higher above the receiver than it can reach.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageModel<R: Real> {
    /// BS → MR reach in meters.
    pub bs: R,
    /// Airship → MR reach in meters.
    pub airship: R,
    /// Satellite → MR reach in meters.
    pub satellite: R,
    /// Satellite → airship feeder reach in meters.
    pub feeder: R,
}

/// Length of the track segment covered by a site, from the chord the
/// coverage sphere cuts out of the track line. Zero when the radicand is
/// not positive.
pub fn coverage_span<R: Real>(center: Position3D<R>, d_max: R, receiver_height: R) -> R {
    let dz = center.z - receiver_height;
    let radicand = d_max * d_max - dz * dz - center.y * center.y;
    if radicand > R::zero() {
        (R::one() + R::one()) * radicand.sqrt()
    } else {
        R::zero()
    }
}

/// Position of the `index`-th MR (1-based) in frame `frame` (1-based).
pub fn mr_position<R: Real>(
    path: &TrainPath<R>,
    index: u32,
    frame: u64,
) -> Result<Position3D<R>, GeometryError> {
    if index == 0 || index > path.mr_count {
        return Err(GeometryError::MrIndexOutOfRange {
            index,
            count: path.mr_count,
        });
    }
    let i = R::from_u32(index - 1).expect("index fits scalar");
    let n = R::from_u64(frame - 1).expect("frame fits scalar");
    Ok(Position3D::new(
        path.entry_x - i * path.mr_spacing + n * path.frame_advance,
        R::zero(),
        path.mr_height,
    ))
}

/// Euclidean distance between an MR and a trackside site.
pub fn distance_to_site<R: Real>(mr: Position3D<R>, site: Position3D<R>) -> R {
    let dx = mr.x - site.x;
    let dy = mr.y - site.y;
    let dz = mr.z - site.z;
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Orbital speed of a circular orbit at the configured altitude.
pub fn satellite_speed<R: Real>(orbit: &SatelliteOrbit<R>) -> R {
    let e = &orbit.earth;
    (e.gravitational_constant * e.mass / (e.radius + orbit.altitude)).sqrt()
}

/// Orbital period of a circular orbit at the configured altitude.
pub fn orbital_period<R: Real>(orbit: &SatelliteOrbit<R>) -> R {
    let e = &orbit.earth;
    let r = e.radius + orbit.altitude;
    let two_pi = R::from_f64(std::f64::consts::TAU).expect("constant fits scalar");
    two_pi * (r * r * r / (e.gravitational_constant * e.mass)).sqrt()
}

/// Subsatellite point after `elapsed` seconds on the polar track.
///
/// The orbit phase runs at `v / (R + h)`. On the ascending half the
/// longitude equals the start longitude; over a pole the track continues
/// on the antimeridian.
pub fn propagate_satellite<R: Real>(orbit: &SatelliteOrbit<R>, elapsed: R) -> GeoCoordinate<R> {
    let rate = satellite_speed(orbit) / (orbit.earth.radius + orbit.altitude);
    let pi = R::from_f64(std::f64::consts::PI).expect("constant fits scalar");
    let two_pi = pi + pi;
    let half_pi = pi / (R::one() + R::one());

    // Phase measured from the ascending equator crossing of the start meridian.
    let mut phase = (orbit.initial_position.latitude + rate * elapsed) % two_pi;
    if phase < -pi {
        phase = phase + two_pi;
    } else if phase > pi {
        phase = phase - two_pi;
    }

    let (latitude, on_far_side) = if phase > half_pi {
        (pi - phase, true)
    } else if phase < -half_pi {
        (-pi - phase, true)
    } else {
        (phase, false)
    };
    let longitude = if on_far_side {
        let shifted = orbit.initial_position.longitude + pi;
        if shifted >= pi {
            shifted - two_pi
        } else {
            shifted
        }
    } else {
        orbit.initial_position.longitude
    };

    GeoCoordinate::new(latitude, longitude, orbit.altitude)
}

/// Great-circle (ground) distance between two geodetic points on a sphere
/// of radius `radius`.
pub fn haversine_horizontal<R: Real>(a: GeoCoordinate<R>, b: GeoCoordinate<R>, radius: R) -> R {
    let two = R::one() + R::one();
    let dlat = (a.latitude - b.latitude) / two;
    let dlon = (a.longitude - b.longitude) / two;
    let c = dlat.sin() * dlat.sin()
        + a.latitude.cos() * b.latitude.cos() * dlon.sin() * dlon.sin();
    two * radius * c.sqrt().min(R::one()).asin()
}

/// Line-of-sight distance from horizontal separation and two heights.
pub fn slant_distance<R: Real>(horizontal: R, h_high: R, h_low: R) -> R {
    let dh = h_high - h_low;
    (horizontal * horizontal + dh * dh).sqrt()
}

/// Whether the satellite sits above the ground point's horizon plane.
/// Exactly at the geometric horizon counts as not visible.
pub fn same_side_visible<R: Real>(
    sat: GeoCoordinate<R>,
    ground: GeoCoordinate<R>,
    radius: R,
) -> bool {
    // Central angle between the subsatellite point and the ground point.
    let two = R::one() + R::one();
    let dlat = (sat.latitude - ground.latitude) / two;
    let dlon = (sat.longitude - ground.longitude) / two;
    let c = dlat.sin() * dlat.sin()
        + sat.latitude.cos() * ground.latitude.cos() * dlon.sin() * dlon.sin();
    let central = two * c.sqrt().min(R::one()).asin();
    central < (radius / (radius + sat.altitude)).acos()
}

/// Elevation angle (radians) of a satellite at central angle `central`
/// and altitude `altitude` above a sphere of radius `radius`, as seen
/// from the ground point. 90° when the satellite is at zenith.
pub fn elevation_from_central_angle<R: Real>(central: R, altitude: R, radius: R) -> R {
    if central <= R::zero() {
        return R::from_f64(std::f64::consts::FRAC_PI_2).expect("constant fits scalar");
    }
    let ratio = radius / (radius + altitude);
    ((central.cos() - ratio) / central.sin()).atan()
}

/// Central angle at which a satellite at `altitude` is seen at elevation
/// `elevation` (radians). Inverse of [`elevation_from_central_angle`].
pub fn central_angle_for_elevation<R: Real>(elevation: R, altitude: R, radius: R) -> R {
    let ratio = radius / (radius + altitude);
    (ratio * elevation.cos()).acos() - elevation
}

/// Number of whole frames the train needs to carry every MR across the
/// combined coverage stretch `bh` (meters).
pub fn total_frames<R: Real>(
    path: &TrainPath<R>,
    bh: R,
    frame_duration: R,
) -> Result<u64, GeometryError> {
    if frame_duration <= R::zero() {
        return Err(GeometryError::NonPositiveFrameDuration);
    }
    if bh <= R::zero() {
        return Err(GeometryError::EmptyCoverage);
    }
    let extra = R::from_u32(path.mr_count - 1).expect("count fits scalar") * path.mr_spacing;
    let t_max = (bh + extra) / path.speed;
    let frames = (t_max / frame_duration).floor();
    Ok(frames.to_f64().expect("frame count fits f64") as u64)
}

/// Combined BS coverage stretch: from the head MR entering the first span
/// to leaving the last one.
pub fn coverage_reach<R: Real>(
    first_bs: Position3D<R>,
    first_half_span: R,
    last_bs: Position3D<R>,
    last_half_span: R,
) -> R {
    last_bs.x + last_half_span - first_bs.x + first_half_span
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn orbit(altitude: f64) -> SatelliteOrbit<f64> {
        SatelliteOrbit {
            altitude,
            initial_position: GeoCoordinate::new(0.0, 0.0, altitude),
            earth: EarthModel::standard(),
        }
    }

    fn track() -> TrainPath<f64> {
        TrainPath {
            speed: 138.888_888,
            mr_count: 16,
            mr_spacing: 30.0,
            entry_x: -8071.0,
            frame_advance: 3.0,
            mr_height: 4.0,
        }
    }

    #[test]
    fn coverage_span_tangent_circle_is_zero() {
        // d_max² equals dz² + y² exactly: radicand 0, span 0
        let center = Position3D::new(0.0, 10.0, 15.0);
        let d_max = (11.0f64 * 11.0 + 10.0 * 10.0).sqrt();
        assert_eq!(coverage_span(center, d_max, 4.0), 0.0);
    }

    #[test]
    fn coverage_span_airship_hand_value() {
        // 2·sqrt(2500² − 1996²) computed by hand: 2·sqrt(2 265 984) = 3010.637…
        let span = coverage_span(Position3D::new(0.0, 0.0, 2000.0), 2500.0, 4.0);
        assert_relative_eq!(span, 3010.6370, epsilon = 1e-3);
    }

    #[test]
    fn coverage_span_symmetric_about_center() {
        // the span is a chord centred on the site's x; both edges equidistant
        let center = Position3D::new(-7000.0, 10.0, 15.0);
        let span = coverage_span(center, 1071.0, 4.0);
        let left = center.x - span / 2.0;
        let right = center.x + span / 2.0;
        assert_abs_diff_eq!(center.x - left, right - center.x, epsilon = 1e-9);
    }

    #[test]
    fn coverage_span_never_negative_when_radicand_nonpositive() {
        let center = Position3D::new(0.0, 0.0, 2000.0);
        assert_eq!(coverage_span(center, 100.0, 4.0), 0.0);
        assert_eq!(coverage_span(center, 1996.0, 4.0), 0.0);
    }

    #[test]
    fn mr_position_entry_frame() {
        let p = mr_position(&track(), 1, 1).unwrap();
        assert_eq!(p.x, -8071.0);
        assert_eq!(p.y, 0.0);
        assert_eq!(p.z, 4.0);
    }

    #[test]
    fn mr_position_spacing_and_advance() {
        let t = track();
        assert_eq!(mr_position(&t, 2, 1).unwrap().x, t.entry_x - 30.0);
        assert_eq!(mr_position(&t, 1, 2).unwrap().x, t.entry_x + 3.0);
    }

    #[test]
    fn mr_position_index_out_of_range() {
        assert_eq!(
            mr_position(&track(), 17, 1),
            Err(GeometryError::MrIndexOutOfRange {
                index: 17,
                count: 16
            })
        );
        assert!(mr_position(&track(), 0, 1).is_err());
    }

    #[test]
    fn distance_degenerate_cases() {
        let a = Position3D::new(3.0, -2.0, 5.0);
        assert_eq!(distance_to_site(a, a), 0.0);
        let mr = Position3D::new(0.0, 0.0, 4.0);
        let airship = Position3D::new(0.0, 0.0, 2000.0);
        assert_eq!(distance_to_site(mr, airship), 1996.0);
    }

    /// Literal transcription of the closed-form MR→BS₂ distance used as an
    /// independent check of the Euclidean route.
    fn bs2_distance_literal(
        half_span1: f64,
        x1: f64,
        x2: f64,
        y2: f64,
        h_bs: f64,
        h_mr: f64,
        d_mr: f64,
        d_frame: f64,
        i: u32,
        n: u64,
    ) -> f64 {
        let t = x1 - half_span1 - (i as f64 - 1.0) * d_mr + (n as f64 - 1.0) * d_frame - x2;
        (t * t + y2 * y2 + (h_bs - h_mr) * (h_bs - h_mr)).sqrt()
    }

    #[test]
    fn distance_matches_literal_expansion() {
        let x1 = -7000.0;
        let half_span1 = 1071.0;
        let (x2, y2, h_bs) = (-1200.0, 10.0, 15.0);
        let mut t = track();
        t.entry_x = x1 - half_span1;
        let bs2 = Position3D::new(x2, y2, h_bs);
        for &(i, n) in &[(1u32, 1u64), (5, 100), (16, 3600), (3, 1234)] {
            let mr = mr_position(&t, i, n).unwrap();
            let literal =
                bs2_distance_literal(half_span1, x1, x2, y2, h_bs, 4.0, 30.0, 3.0, i, n);
            assert_relative_eq!(distance_to_site(mr, bs2), literal, max_relative = 1e-12);
        }
    }

    #[test]
    fn satellite_speed_reference_values() {
        // 600 km LEO: ~7.5 km/s
        assert_relative_eq!(satellite_speed(&orbit(600e3)), 7557.8, epsilon = 10.0);
        // GEO altitude: direct evaluation gives ~3.07 km/s
        assert_relative_eq!(satellite_speed(&orbit(35_786e3)), 3074.7, epsilon = 5.0);
        assert!(satellite_speed(&orbit(300e3)) > satellite_speed(&orbit(1500e3)));
    }

    #[test]
    fn orbital_period_reference_values() {
        // 600 km LEO: ~96 min
        assert_relative_eq!(orbital_period(&orbit(600e3)) / 60.0, 96.5, epsilon = 1.0);
        // 1500 km: direct evaluation ≈ 116 min
        assert_relative_eq!(orbital_period(&orbit(1500e3)) / 60.0, 115.8, epsilon = 1.0);
    }

    #[test]
    fn speed_period_circumference_identity() {
        for h in [300e3, 600e3, 1200e3, 35_786e3] {
            let o = orbit(h);
            let circumference = std::f64::consts::TAU * (o.earth.radius + h);
            assert_relative_eq!(
                satellite_speed(&o) * orbital_period(&o),
                circumference,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn propagate_zero_and_full_period() {
        let o = SatelliteOrbit {
            altitude: 600e3,
            initial_position: GeoCoordinate::new(0.3, 1.2, 600e3),
            earth: EarthModel::standard(),
        };
        let start = propagate_satellite(&o, 0.0);
        assert_abs_diff_eq!(start.latitude, 0.3, epsilon = 1e-12);
        assert_abs_diff_eq!(start.longitude, 1.2, epsilon = 1e-12);

        let after = propagate_satellite(&o, orbital_period(&o));
        assert_abs_diff_eq!(after.latitude, 0.3, epsilon = 1e-9);
        assert_abs_diff_eq!(after.longitude, 1.2, epsilon = 1e-9);
    }

    #[test]
    fn propagate_quarter_orbit_reaches_pole() {
        let o = orbit(600e3);
        let q = propagate_satellite(&o, orbital_period(&o) / 4.0);
        assert_abs_diff_eq!(q.latitude, std::f64::consts::FRAC_PI_2, epsilon = 1e-6);
    }

    #[test]
    fn propagate_descending_half_swaps_meridian() {
        let o = SatelliteOrbit {
            altitude: 600e3,
            initial_position: GeoCoordinate::new(0.0, 0.5, 600e3),
            earth: EarthModel::standard(),
        };
        let half = propagate_satellite(&o, orbital_period(&o) * 0.5);
        assert_abs_diff_eq!(half.latitude, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(half.longitude, 0.5 - std::f64::consts::PI, epsilon = 1e-6);
    }

    #[test]
    fn haversine_reference_values() {
        let r = 6_371_000.0;
        let a = GeoCoordinate::new(0.0, 0.0, 0.0);
        assert_eq!(haversine_horizontal(a, a, r), 0.0);
        // one degree of longitude at the equator ≈ 111.195 km
        let b = GeoCoordinate::new(0.0, 1.0f64.to_radians(), 0.0);
        assert_relative_eq!(haversine_horizontal(a, b, r), 111_195.0, epsilon = 10.0);
        // antipodal along the equator: half the circumference
        let c = GeoCoordinate::new(0.0, std::f64::consts::PI, 0.0);
        assert_relative_eq!(
            haversine_horizontal(a, c, r),
            std::f64::consts::PI * r,
            max_relative = 1e-12
        );
    }

    #[test]
    fn slant_distance_cases() {
        assert_eq!(slant_distance(0.0, 600e3, 4.0), 600e3 - 4.0);
        assert_relative_eq!(slant_distance(300.0, 500.0, 100.0), 500.0, epsilon = 1e-9);
        assert_relative_eq!(
            slant_distance(3.0e3, 4.5e3, 0.5e3),
            5.0e3,
            max_relative = 1e-12
        );
    }

    #[test]
    fn visibility_zenith_antipode_and_horizon() {
        let r = 6_371_000.0f64;
        let sat = GeoCoordinate::new(0.2, 0.4, 600e3);
        let under = GeoCoordinate::new(0.2, 0.4, 0.0);
        assert!(same_side_visible(sat, under, r));

        let antipode = GeoCoordinate::new(-0.2, 0.4 - std::f64::consts::PI, 0.0);
        assert!(!same_side_visible(sat, antipode, r));

        // exactly at the horizon limit: strictly not visible
        let limit = (r / (r + 600e3)).acos();
        let on_limit = GeoCoordinate::new(0.2 + limit, 0.4, 0.0);
        assert!(!same_side_visible(sat, on_limit, r));
        let just_inside = GeoCoordinate::new(0.2 + limit - 1e-6, 0.4, 0.0);
        assert!(same_side_visible(sat, just_inside, r));
    }

    #[test]
    fn total_frames_direct_division() {
        let mut t = track();
        t.mr_count = 1;
        t.speed = 10.0;
        assert_eq!(total_frames(&t, 1000.0, 1.0), Ok(100));
    }

    #[test]
    fn total_frames_extra_mrs_extend_time() {
        let mut t = track();
        t.speed = 10.0;
        t.mr_count = 4;
        t.mr_spacing = 30.0;
        // (1000 + 3·30)/10 s at 1 s frames
        assert_eq!(total_frames(&t, 1000.0, 1.0), Ok(109));
    }

    #[test]
    fn total_frames_default_scenario_hand_value() {
        // Table-style geometry: spans from d_max ≈ 1071.1 m around BS₁ (−7000)
        // and BS₃ (+1200); BH = 1200 + 1071.0 + 7000 + 1071.0, 450 m of train,
        // v = 500 km/h, frame 21.586 ms → 3599 whole frames by hand.
        let half = (1071.1f64 * 1071.1 - 11.0 * 11.0 - 10.0 * 10.0).sqrt();
        let bh = coverage_reach(
            Position3D::new(-7000.0, 10.0, 15.0),
            half,
            Position3D::new(1200.0, 10.0, 15.0),
            half,
        );
        let mut t = track();
        t.speed = 500.0 / 3.6;
        let frames = total_frames(&t, bh, 850e-6 + 1152.0 * 18e-6).unwrap();
        assert_eq!(frames, 3599);
    }

    #[test]
    fn total_frames_errors() {
        assert_eq!(
            total_frames(&track(), -1.0, 1.0),
            Err(GeometryError::EmptyCoverage)
        );
        assert_eq!(
            total_frames(&track(), 10.0, 0.0),
            Err(GeometryError::NonPositiveFrameDuration)
        );
    }

    #[test]
    fn elevation_central_angle_round_trip() {
        let r = 6_371_000.0;
        for h in [300e3, 600e3, 1500e3] {
            for el_deg in [5.0, 10.0, 45.0, 80.0] {
                let el = (el_deg as f64).to_radians();
                let psi = central_angle_for_elevation(el, h, r);
                assert_relative_eq!(
                    elevation_from_central_angle(psi, h, r),
                    el,
                    max_relative = 1e-9
                );
            }
        }
        assert_relative_eq!(
            elevation_from_central_angle(0.0, 600e3, r),
            std::f64::consts::FRAC_PI_2,
            max_relative = 1e-12
        );
    }

    proptest! {
        #[test]
        fn haversine_symmetric_and_bounded(
            lat_a in -1.5f64..1.5, lon_a in -3.1f64..3.1,
            lat_b in -1.5f64..1.5, lon_b in -3.1f64..3.1,
        ) {
            let r = 6_371_000.0;
            let a = GeoCoordinate::new(lat_a, lon_a, 0.0);
            let b = GeoCoordinate::new(lat_b, lon_b, 0.0);
            let ab = haversine_horizontal(a, b, r);
            let ba = haversine_horizontal(b, a, r);
            prop_assert_eq!(ab, ba);
            prop_assert!(ab <= std::f64::consts::PI * r * (1.0 + 1e-12));
            prop_assert!(ab >= 0.0);
        }

        #[test]
        fn mr_position_affine_in_frame(i in 1u32..=16, n in 1u64..100_000) {
            let t = track();
            let a = mr_position(&t, i, n).unwrap();
            let b = mr_position(&t, i, n + 1).unwrap();
            prop_assert_eq!(b.x - a.x, t.frame_advance);
        }

        #[test]
        fn coverage_span_nonnegative(
            y in -5e3f64..5e3, z in 0f64..5e3, d_max in 0f64..6e3,
        ) {
            let span = coverage_span(Position3D::new(0.0, y, z), d_max, 4.0);
            prop_assert!(span >= 0.0);
            prop_assert!(span.is_finite());
        }

        #[test]
        fn propagation_periodicity(t in 0f64..20_000.0) {
            let o = SatelliteOrbit {
                altitude: 600e3,
                initial_position: GeoCoordinate::new(0.4, -0.7, 600e3),
                earth: EarthModel::standard(),
            };
            let period = orbital_period(&o);
            let a = propagate_satellite(&o, t);
            let b = propagate_satellite(&o, t + period);
            prop_assert!((a.latitude - b.latitude).abs() < 1e-9);
            prop_assert!((a.longitude - b.longitude).abs() < 1e-9);
        }
    }
}
