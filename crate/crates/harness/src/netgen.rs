//! Random node placement, uniform on a disc.

use rand::Rng;

use stdma_core::{build_network, Error, Network, Result, SimRng};

/// One point uniform on the disc of the given radius, centred on the origin.
/// Radius is `R * sqrt(u)` so area, not radius, is uniform; the angle is a
/// second independent draw. The draw order (radius variate first, then
/// angle) is part of the determinism contract.
fn sample_point(radius: f64, rng: &mut SimRng) -> (f64, f64) {
    let r = radius * rng.gen::<f64>().sqrt();
    let theta = std::f64::consts::TAU * rng.gen::<f64>();
    (r * theta.cos(), r * theta.sin())
}

/// Places `n` nodes i.i.d. uniform on the disc. A point that lands exactly
/// on an already placed one is redrawn, so the returned network never
/// contains coincident nodes.
pub fn generate_network(n: usize, radius: f64, rng: &mut SimRng) -> Result<Network> {
    if !radius.is_finite() {
        return Err(Error::NonFinite { name: "radius", value: radius });
    }
    if radius <= 0.0 {
        return Err(Error::NotPositive { name: "radius", value: radius });
    }
    let mut points: Vec<(f64, f64)> = Vec::with_capacity(n);
    while points.len() < n {
        let p = sample_point(radius, rng);
        if points.contains(&p) {
            continue;
        }
        points.push(p);
    }
    build_network(&points)
}
