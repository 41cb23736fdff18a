//! ODE integration: adaptive Dormand-Prince 5(4) for first-order scalar
//! problems, plus a plain fixed-step RK4 kernel for convergence studies
//! where bitwise-stable stepping matters more than adaptivity.

use crate::Error;

/// One accepted sample of an integration run.
#[derive(Debug, Clone, Copy)]
pub struct OdePoint {
    pub x: f64,
    pub y: f64,
    /// Right-hand side evaluated at (x, y).
    pub dy: f64,
}

/// Integrates `y' = f(x, y)` from `(x0, y0)` toward `x_end` with an embedded
/// 5(4) pair and PI-free step control.
///
/// `max_step` caps the accepted step size (pass infinity for none); flat
/// stretches otherwise produce too few samples for downstream fits.
/// `stop` is checked after every accepted step; returning `true` ends the
/// run early (used for vacuum-approach cutoffs). The right-hand side may
/// fail, which aborts the integration with its error. A step size collapse
/// below `1e-14 * (1 + |x|)` is reported as [`Error::StiffnessAbort`].
pub fn integrate_adaptive<F, S>(
    f: &F,
    x0: f64,
    y0: f64,
    x_end: f64,
    rtol: f64,
    atol: f64,
    max_step: f64,
    mut stop: S,
) -> Result<Vec<OdePoint>, Error>
where
    F: Fn(f64, f64) -> Result<f64, Error>,
    S: FnMut(f64, f64) -> bool,
{
    const A21: f64 = 1.0 / 5.0;
    const A31: f64 = 3.0 / 40.0;
    const A32: f64 = 9.0 / 40.0;
    const A41: f64 = 44.0 / 45.0;
    const A42: f64 = -56.0 / 15.0;
    const A43: f64 = 32.0 / 9.0;
    const A51: f64 = 19372.0 / 6561.0;
    const A52: f64 = -25360.0 / 2187.0;
    const A53: f64 = 64448.0 / 6561.0;
    const A54: f64 = -212.0 / 729.0;
    const A61: f64 = 9017.0 / 3168.0;
    const A62: f64 = -355.0 / 33.0;
    const A63: f64 = 46732.0 / 5247.0;
    const A64: f64 = 49.0 / 176.0;
    const A65: f64 = -5103.0 / 18656.0;
    const B1: f64 = 35.0 / 384.0;
    const B3: f64 = 500.0 / 1113.0;
    const B4: f64 = 125.0 / 192.0;
    const B5: f64 = -2187.0 / 6784.0;
    const B6: f64 = 11.0 / 84.0;
    const E1: f64 = B1 - 5179.0 / 57600.0;
    const E3: f64 = B3 - 7571.0 / 16695.0;
    const E4: f64 = B4 - 393.0 / 640.0;
    const E5: f64 = B5 + 92097.0 / 339200.0;
    const E6: f64 = B6 - 187.0 / 2100.0;
    const E7: f64 = -1.0 / 40.0;
    const C2: f64 = 1.0 / 5.0;
    const C3: f64 = 3.0 / 10.0;
    const C4: f64 = 4.0 / 5.0;
    const C5: f64 = 8.0 / 9.0;

    if x_end == x0 {
        let dy = f(x0, y0)?;
        return Ok(vec![OdePoint { x: x0, y: y0, dy }]);
    }
    let dir = (x_end - x0).signum();
    let span = (x_end - x0).abs();
    let mut x = x0;
    let mut y = y0;
    let mut k1 = f(x, y)?;
    let mut out = vec![OdePoint { x, y, dy: k1 }];
    let mut h = dir * (span / 100.0).min(1e-2).min(max_step).max(1e-6);
    let max_steps = 4_000_000usize;

    for _ in 0..max_steps {
        if dir * (x - x_end) >= 0.0 {
            return Ok(out);
        }
        if dir * (x + h - x_end) > 0.0 {
            h = x_end - x;
        }
        if h.abs() < 1e-14 * (1.0 + x.abs()) {
            return Err(Error::StiffnessAbort);
        }
        let k2 = f(x + C2 * h, y + h * A21 * k1)?;
        let k3 = f(x + C3 * h, y + h * (A31 * k1 + A32 * k2))?;
        let k4 = f(x + C4 * h, y + h * (A41 * k1 + A42 * k2 + A43 * k3))?;
        let k5 = f(
            x + C5 * h,
            y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4),
        )?;
        let k6 = f(
            x + h,
            y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
        )?;
        let y_new = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
        let k7 = f(x + h, y_new)?;
        let err_raw = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
        let scale = atol + rtol * y.abs().max(y_new.abs());
        let err = (err_raw / scale).abs();

        if err <= 1.0 {
            x += h;
            y = y_new;
            k1 = k7;
            out.push(OdePoint { x, y, dy: k1 });
            if stop(x, y) {
                return Ok(out);
            }
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h.abs() > max_step {
            h = dir * max_step;
        }
    }
    Err(Error::StiffnessAbort)
}

/// One classical RK4 step for an autonomous scalar right-hand side.
pub fn rk4_fixed<F>(f: &F, y: f64, h: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let k1 = f(y);
    let k2 = f(y + 0.5 * h * k1);
    let k3 = f(y + 0.5 * h * k2);
    let k4 = f(y + h * k3);
    y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}
