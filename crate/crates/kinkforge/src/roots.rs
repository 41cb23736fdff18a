//! Dense real polynomials and companion-matrix root extraction.
//!
//! Coefficient slices are ordered low to high: `c[k]` multiplies `x^k`.
//! Roots come from the Francis double-shift QR iteration applied to the
//! companion matrix, followed by a Newton polish against the polynomial
//! itself (or its derivative at a multiple root).

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RootError {
    #[error("QR iteration failed to converge")]
    NoConvergence,
    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,
}

/// Horner evaluation of `c[0] + c[1] x + ...`.
pub fn poly_eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

/// Coefficients of the derivative polynomial.
pub fn poly_deriv(c: &[f64]) -> Vec<f64> {
    if c.len() <= 1 {
        return vec![0.0];
    }
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &ck)| k as f64 * ck)
        .collect()
}

/// Drop trailing coefficients that are negligible against the largest one.
pub fn poly_trim(c: &[f64]) -> Vec<f64> {
    let scale = c.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    let mut out: Vec<f64> = c.to_vec();
    while out.len() > 1 {
        if out.last().unwrap().abs() > 1e-14 * scale {
            break;
        }
        out.pop();
    }
    out
}

/// Cauchy bound: every root lies in |x| <= 1 + max |c_k / c_n|.
pub fn cauchy_bound(c: &[f64]) -> f64 {
    let c = poly_trim(c);
    let lead = *c.last().unwrap();
    let m = c[..c.len() - 1]
        .iter()
        .fold(0.0_f64, |m, &v| m.max((v / lead).abs()));
    1.0 + m
}

/// All complex roots `(re, im)` of the trimmed polynomial, unordered.
pub fn complex_roots(coeffs: &[f64]) -> Result<Vec<(f64, f64)>, RootError> {
    let c = poly_trim(coeffs);
    let n = c.len() - 1;
    if n == 0 {
        return if c[0] == 0.0 {
            Err(RootError::ZeroPolynomial)
        } else {
            Ok(Vec::new())
        };
    }
    if n == 1 {
        return Ok(vec![(-c[0] / c[1], 0.0)]);
    }
    if n == 2 {
        return Ok(quadratic_roots(c[0], c[1], c[2]));
    }
    let lead = c[n];
    let mut a = vec![vec![0.0; n]; n];
    for i in 1..n {
        a[i][i - 1] = 1.0;
    }
    for i in 0..n {
        a[i][n - 1] = -c[i] / lead;
    }
    hqr(a)
}

/// Stable quadratic formula, trading the cancelling branch for a division.
fn quadratic_roots(c0: f64, c1: f64, c2: f64) -> Vec<(f64, f64)> {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc >= 0.0 {
        let q = -0.5 * (c1 + disc.sqrt().copysign(c1));
        let r1 = q / c2;
        let r2 = if q != 0.0 { c0 / q } else { -c1 / c2 - r1 };
        vec![(r1, 0.0), (r2, 0.0)]
    } else {
        let re = -c1 / (2.0 * c2);
        let im = (-disc).sqrt() / (2.0 * c2).abs();
        vec![(re, im), (re, -im)]
    }
}

/// Real roots, ascending. A root of any multiplicity appears exactly once.
pub fn real_roots(coeffs: &[f64]) -> Result<Vec<f64>, RootError> {
    let full = poly_trim(coeffs);
    // factor out exact powers of x so origin roots stay exact
    let at_origin = full.iter().take_while(|&&v| v == 0.0).count();
    let c: Vec<f64> = full[at_origin..].to_vec();
    if c.is_empty() {
        return Err(RootError::ZeroPolynomial);
    }
    let all = complex_roots(&c)?;
    let bound = if c.len() > 1 { cauchy_bound(&c) } else { 1.0 };
    let dc = poly_deriv(&c);
    let mut out: Vec<f64> = Vec::new();
    if at_origin > 0 {
        out.push(0.0);
    }
    for &(re, im) in &all {
        // multiple roots surface as tight complex clusters; keep their shadows
        if im.abs() > 1e-5 * bound.max(1.0) {
            continue;
        }
        let r = polish(&c, &dc, re);
        if !residual_ok(&c, r, bound) {
            continue;
        }
        out.push(r);
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // cluster survivors, keeping the best-polished member of each cluster
    let mut merged: Vec<f64> = Vec::new();
    let mut i = 0;
    while i < out.len() {
        let mut j = i + 1;
        while j < out.len() && out[j] - out[j - 1] <= 1e-6 * (1.0 + out[j].abs()) {
            j += 1;
        }
        let best = out[i..j]
            .iter()
            .copied()
            .min_by(|&a, &b| {
                poly_eval(&c, a)
                    .abs()
                    .partial_cmp(&poly_eval(&c, b).abs())
                    .unwrap()
            })
            .unwrap();
        merged.push(best);
        i = j;
    }
    Ok(merged)
}

/// Characteristic coefficient size of the polynomial at |x| ~ rho.
fn coeff_scale(c: &[f64], rho: f64) -> f64 {
    let rho = rho.abs().max(1.0);
    let mut s = 0.0;
    let mut xp = 1.0;
    for &ck in c {
        s += ck.abs() * xp;
        xp *= rho;
    }
    s.max(1e-300)
}

fn polish(c: &[f64], dc: &[f64], mut x: f64) -> f64 {
    for _ in 0..12 {
        let f = poly_eval(c, x);
        // at the evaluation noise floor a Newton step is pure noise
        if f.abs() <= 4.0 * f64::EPSILON * coeff_scale(c, x) {
            break;
        }
        let d = poly_eval(dc, x);
        if d == 0.0 {
            break;
        }
        let step = f / d;
        if !step.is_finite() || step.abs() > 0.1 * (1.0 + x.abs()) {
            break;
        }
        x -= step;
        if step.abs() <= f64::EPSILON * (1.0 + x.abs()) {
            break;
        }
    }
    // multiple root: the derivative has a lower-order zero there; polishing
    // against it converges where plain Newton stalls
    let d2 = poly_deriv(dc);
    let mut y = x;
    for _ in 0..24 {
        let f = poly_eval(dc, y);
        if f.abs() <= 4.0 * f64::EPSILON * coeff_scale(dc, y) {
            break;
        }
        let d = poly_eval(&d2, y);
        if d == 0.0 {
            break;
        }
        let step = f / d;
        if !step.is_finite() || step.abs() > 0.1 * (1.0 + y.abs()) {
            break;
        }
        y -= step;
        if step.abs() <= f64::EPSILON * (1.0 + y.abs()) {
            break;
        }
    }
    if (y - x).abs() <= 1e-2 * (1.0 + x.abs()) && poly_eval(c, y).abs() <= poly_eval(c, x).abs() {
        y
    } else {
        x
    }
}

fn residual_ok(c: &[f64], r: f64, bound: f64) -> bool {
    poly_eval(c, r).abs() <= 1e-7 * coeff_scale(c, r) && r.abs() <= 1.0000001 * bound
}

/// Francis double-shift QR on an upper Hessenberg matrix. Returns eigenvalues.
fn hqr(mut a: Vec<Vec<f64>>) -> Result<Vec<(f64, f64)>, RootError> {
    let n = a.len();
    let mut roots: Vec<(f64, f64)> = Vec::with_capacity(n);
    let eps = f64::EPSILON;
    let mut anorm = 0.0_f64;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[i][j].abs();
        }
    }
    if anorm == 0.0 {
        return Ok(vec![(0.0, 0.0); n]);
    }
    let mut nn = n as i64 - 1;
    let mut t = 0.0_f64;
    while nn >= 0 {
        let mut its = 0;
        loop {
            // find the first negligible subdiagonal entry above the active block
            let mut l = nn;
            while l >= 1 {
                let mut s = a[(l - 1) as usize][(l - 1) as usize].abs()
                    + a[l as usize][l as usize].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[l as usize][(l - 1) as usize].abs() <= eps * s {
                    a[l as usize][(l - 1) as usize] = 0.0;
                    break;
                }
                l -= 1;
            }
            let x = a[nn as usize][nn as usize];
            if l == nn {
                roots.push((x + t, 0.0));
                nn -= 1;
                break;
            }
            let y = a[(nn - 1) as usize][(nn - 1) as usize];
            let w = a[nn as usize][(nn - 1) as usize] * a[(nn - 1) as usize][nn as usize];
            if l == nn - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = q.abs().sqrt();
                let xs = x + t;
                if q >= 0.0 {
                    z = p + z.copysign(if p != 0.0 { p } else { 1.0 });
                    let r1 = xs + z;
                    let r2 = if z != 0.0 { xs - w / z } else { r1 };
                    roots.push((r1, 0.0));
                    roots.push((r2, 0.0));
                } else {
                    roots.push((xs + p, z));
                    roots.push((xs + p, -z));
                }
                nn -= 2;
                break;
            }
            if its == 60 {
                return Err(RootError::NoConvergence);
            }
            let (mut x, mut y, mut w) = (x, y, w);
            if its > 0 && its % 10 == 0 {
                // exceptional shift
                t += x;
                for i in 0..=nn as usize {
                    a[i][i] -= x;
                }
                let s = a[nn as usize][(nn - 1) as usize].abs()
                    + a[(nn - 1) as usize][(nn - 2) as usize].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            // seek two consecutive small subdiagonals working up from the bottom
            let mut m = nn - 2;
            let (mut p, mut q, mut r) = (0.0, 0.0, 0.0);
            while m >= l {
                let z = a[m as usize][m as usize];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[(m + 1) as usize][m as usize] + a[m as usize][(m + 1) as usize];
                q = a[(m + 1) as usize][(m + 1) as usize] - z - rr - ss;
                r = a[(m + 2) as usize][(m + 1) as usize];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[m as usize][(m - 1) as usize].abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a[(m - 1) as usize][(m - 1) as usize].abs()
                        + z.abs()
                        + a[(m + 1) as usize][(m + 1) as usize].abs());
                if u <= eps * v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                a[i as usize][(i - 2) as usize] = 0.0;
                if i != m + 2 {
                    a[i as usize][(i - 3) as usize] = 0.0;
                }
            }
            // double QR sweep on rows/cols m..=nn
            for k in m..nn {
                let mut knorm = 0.0;
                if k != m {
                    p = a[k as usize][(k - 1) as usize];
                    q = a[(k + 1) as usize][(k - 1) as usize];
                    r = if k != nn - 1 {
                        a[(k + 2) as usize][(k - 1) as usize]
                    } else {
                        0.0
                    };
                    knorm = p.abs() + q.abs() + r.abs();
                    if knorm != 0.0 {
                        p /= knorm;
                        q /= knorm;
                        r /= knorm;
                    }
                }
                let s = (p * p + q * q + r * r)
                    .sqrt()
                    .copysign(if p != 0.0 { p } else { 1.0 });
                if s == 0.0 {
                    continue;
                }
                if k == m {
                    if l != m {
                        a[k as usize][(k - 1) as usize] = -a[k as usize][(k - 1) as usize];
                    }
                } else {
                    a[k as usize][(k - 1) as usize] = -s * knorm;
                }
                p += s;
                let xh = p / s;
                let yh = q / s;
                let zh = r / s;
                q /= p;
                r /= p;
                for j in k..=nn {
                    let mut pj = a[k as usize][j as usize] + q * a[(k + 1) as usize][j as usize];
                    if k != nn - 1 {
                        pj += r * a[(k + 2) as usize][j as usize];
                        a[(k + 2) as usize][j as usize] -= pj * zh;
                    }
                    a[(k + 1) as usize][j as usize] -= pj * yh;
                    a[k as usize][j as usize] -= pj * xh;
                }
                let mmin = nn.min(k + 3);
                for i in l..=mmin {
                    let mut pi =
                        xh * a[i as usize][k as usize] + yh * a[i as usize][(k + 1) as usize];
                    if k != nn - 1 {
                        pi += zh * a[i as usize][(k + 2) as usize];
                        a[i as usize][(k + 2) as usize] -= pi * r;
                    }
                    a[i as usize][(k + 1) as usize] -= pi * q;
                    a[i as usize][k as usize] -= pi;
                }
            }
        }
    }
    Ok(roots)
}
