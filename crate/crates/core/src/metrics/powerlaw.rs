//! Power-law fits of a degree distribution, P(k) ~ C k^-gamma.
//!
//! `gamma` is stored as a positive magnitude; the conventional signed
//! exponent is `-gamma`.

use std::fmt;
use std::str::FromStr;

use super::degree::DegreeDistribution;
use crate::error::{Error, Result};

/// Minimum number of samples at or above `kmin` required to fit.
pub const MIN_TAIL_SAMPLES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FitMethod {
    /// Discrete maximum likelihood with a Hurwitz-zeta normaliser.
    #[default]
    Mle,
    /// Least-squares slope of log CCDF against log k; gamma = |slope| + 1.
    OlsCcdf,
}

impl FromStr for FitMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "mle" => Ok(FitMethod::Mle),
            "ols-ccdf" => Ok(FitMethod::OlsCcdf),
            other => Err(format!("unknown fit method `{other}` (expected mle or ols-ccdf)")),
        }
    }
}

impl fmt::Display for FitMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitMethod::Mle => "mle",
            FitMethod::OlsCcdf => "ols-ccdf",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerLawFit {
    /// Exponent magnitude, always > 0.
    pub gamma: f64,
    /// Normaliser: sum of C k^-gamma over k >= kmin equals the empirical
    /// fraction of nodes with degree >= kmin.
    pub c: f64,
    pub kmin: usize,
    pub method: FitMethod,
    /// Kolmogorov–Smirnov distance between the empirical and fitted tail CDFs.
    pub goodness: f64,
    /// Number of samples with degree >= kmin.
    pub tail_count: usize,
}

impl PowerLawFit {
    /// Fitted P(k) for k >= kmin.
    pub fn pk(&self, k: usize) -> f64 {
        self.c * (k as f64).powf(-self.gamma)
    }
}

pub fn fit_power_law(dist: &DegreeDistribution, kmin: usize, method: FitMethod) -> Result<PowerLawFit> {
    let max_degree = dist.max_degree();
    if kmin == 0 || kmin > max_degree {
        return Err(Error::InvalidKmin { kmin, max_degree });
    }
    let tail: Vec<(usize, usize)> = dist
        .degrees()
        .iter()
        .zip(dist.counts())
        .filter(|(&k, _)| k >= kmin)
        .map(|(&k, &c)| (k, c))
        .collect();
    let tail_count: usize = tail.iter().map(|&(_, c)| c).sum();
    if tail_count < MIN_TAIL_SAMPLES {
        return Err(Error::InsufficientData(format!(
            "{tail_count} node(s) with degree >= {kmin}, need at least {MIN_TAIL_SAMPLES}"
        )));
    }
    if tail.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "every node with degree >= {kmin} has the same degree"
        )));
    }

    let gamma = match method {
        FitMethod::Mle => mle_exponent(&tail, tail_count, kmin),
        FitMethod::OlsCcdf => ols_ccdf_exponent(dist, &tail),
    };
    let q = kmin as f64;
    let (zeta_scaled, _) = hurwitz_scaled(gamma, q);
    let mass = tail_count as f64 / dist.node_count() as f64;
    // zeta(gamma, kmin) = zeta_scaled * kmin^-gamma
    let c = mass * q.powf(gamma) / zeta_scaled;
    let goodness = ks_distance(&tail, tail_count, gamma, kmin, zeta_scaled);
    Ok(PowerLawFit {
        gamma,
        c,
        kmin,
        method,
        goodness,
        tail_count,
    })
}

/// Solves -zeta'(g, kmin)/zeta(g, kmin) = mean(ln k) by bisection; the
/// left side is the model's mean log-degree and decreases in g.
fn mle_exponent(tail: &[(usize, usize)], n: usize, kmin: usize) -> f64 {
    let mean_log = tail.iter().map(|&(k, c)| c as f64 * (k as f64).ln()).sum::<f64>() / n as f64;
    let q = kmin as f64;
    let mean_log_model = |s: f64| {
        let (z, dz) = hurwitz_scaled(s, q);
        -dz / z
    };
    let (mut lo, mut hi) = (1.0 + 1e-9, 100.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mean_log_model(mid) > mean_log {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    0.5 * (lo + hi)
}

fn ols_ccdf_exponent(dist: &DegreeDistribution, tail: &[(usize, usize)]) -> f64 {
    let points: Vec<(f64, f64)> = tail
        .iter()
        .map(|&(k, _)| ((k as f64).ln(), dist.ccdf(k).ln()))
        .collect();
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    slope.abs() + 1.0
}

fn ks_distance(tail: &[(usize, usize)], n: usize, gamma: f64, kmin: usize, zeta_scaled: f64) -> f64 {
    let q = kmin as f64;
    let kmax = tail.last().unwrap().0;
    let mut next = tail.iter().peekable();
    let mut empirical = 0usize;
    let mut model = 0.0;
    let mut worst: f64 = 0.0;
    for k in kmin..=kmax {
        if let Some(&&(d, c)) = next.peek() {
            if d == k {
                empirical += c;
                next.next();
            }
        }
        model += (k as f64 / q).powf(-gamma) / zeta_scaled;
        worst = worst.max((empirical as f64 / n as f64 - model).abs());
    }
    worst.min(1.0)
}

/// Hurwitz zeta function zeta(s, q) = sum_{k>=0} (q + k)^-s for s > 1, q > 0.
pub fn hurwitz_zeta(s: f64, q: f64) -> f64 {
    hurwitz_scaled(s, q).0 * q.powf(-s)
}

/// Partial derivative of the Hurwitz zeta function with respect to `s`.
pub fn hurwitz_zeta_ds(s: f64, q: f64) -> f64 {
    hurwitz_scaled(s, q).1 * q.powf(-s)
}

// B_{2j} / (2j)!
const EM_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
];
const EM_DIRECT_TERMS: usize = 12;

/// Euler–Maclaurin evaluation of (zeta(s,q), d/ds zeta(s,q)), both
/// multiplied by q^s to keep large-q, large-s values in range.
fn hurwitz_scaled(s: f64, q: f64) -> (f64, f64) {
    debug_assert!(s > 1.0 && q > 0.0);
    let term = |x: f64| (-s * (x / q).ln()).exp();
    let mut z = 0.0;
    let mut dz = 0.0;
    for k in 0..EM_DIRECT_TERMS {
        let x = q + k as f64;
        let t = term(x);
        z += t;
        dz -= x.ln() * t;
    }
    let a = q + EM_DIRECT_TERMS as f64;
    let ln_a = a.ln();
    let a_s = term(a);
    // Integral tail a^{1-s}/(s-1)
    let integral = a * a_s / (s - 1.0);
    z += integral;
    dz += integral * (-ln_a - 1.0 / (s - 1.0));
    // Half boundary term
    z += 0.5 * a_s;
    dz -= 0.5 * ln_a * a_s;
    // Bernoulli corrections c_j * s(s+1)...(s+2j-2) * a^{-s-2j+1}
    let mut rising = s;
    let mut rising_dlog = 1.0 / s;
    let mut power = a_s / a;
    for (j, &cj) in EM_COEFFS.iter().enumerate() {
        if j > 0 {
            let (u, v) = (s + (2 * j - 1) as f64, s + (2 * j) as f64);
            rising *= u * v;
            rising_dlog += 1.0 / u + 1.0 / v;
        }
        let t = cj * rising * power;
        z += t;
        dz += t * (rising_dlog - ln_a);
        power /= a * a;
    }
    (z, dz)
}
