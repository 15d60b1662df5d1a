// SPDX-License-Identifier: Apache-2.0

//! Spectral period check on the post-oracle input register.
//!
//! Applying a classical oracle to the uniform superposition gives
//! `sum_x |x>|F(x)>`. Conditioning the output register on `y` leaves the
//! uniform superposition over the preimage of `y`; its Fourier spectrum
//! concentrates near multiples of `2^n / p` when `F` has period `p`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::Circuit;
use crate::error::{Error, Result};

/// `4 / pi^2` rounded down: the classic lower bound on the peak mass.
pub const DEFAULT_PEAK_THRESHOLD: f64 = 0.405;

pub const NORM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct RegisterState {
    width: usize,
    amplitudes: Vec<Complex64>,
}

impl RegisterState {
    pub fn new(width: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 1usize << width {
            return Err(Error::InvalidArgument(format!(
                "{} amplitudes for a {width}-qubit register",
                amplitudes.len()
            )));
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "state norm {norm} is not 1"
            )));
        }
        Ok(Self { width, amplitudes })
    }

    /// Equal amplitudes on `support`, zero elsewhere.
    pub fn uniform_over(width: usize, support: &[u64]) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::InvalidArgument("empty support".into()));
        }
        let a = Complex64::new(1.0 / (support.len() as f64).sqrt(), 0.0);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1usize << width];
        for &x in support {
            let slot = amplitudes
                .get_mut(x as usize)
                .ok_or_else(|| Error::InvalidArgument(format!("basis state {x} out of range")))?;
            *slot = a;
        }
        Self::new(width, amplitudes)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    width: usize,
    probabilities: Vec<f64>,
}

#[derive(Serialize)]
struct Bin {
    k: usize,
    probability: f64,
}

impl Spectrum {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// `[{"k": .., "probability": ..}, ...]`
    pub fn to_json(&self) -> String {
        let bins: Vec<Bin> = self
            .probabilities
            .iter()
            .enumerate()
            .map(|(k, &probability)| Bin { k, probability })
            .collect();
        serde_json::to_string(&bins).expect("spectrum serialization cannot fail")
    }

    /// One bar per bin, `width` characters for probability 1.
    pub fn ascii_bars(&self, width: usize) -> String {
        let digits = format!("{}", self.probabilities.len().saturating_sub(1)).len();
        let mut s = String::new();
        for (k, &pr) in self.probabilities.iter().enumerate() {
            let bar = "#".repeat((pr * width as f64).round() as usize);
            s.push_str(&format!("{k:>digits$} {pr:.6} |{bar}\n"));
        }
        s
    }
}

/// Normalized input-register state after measuring output `y`.
pub fn postselect_input_state(circuit: &Circuit, y: u64) -> Result<RegisterState> {
    let table = circuit.truth_table()?;
    let preimage = table.preimage(y);
    if preimage.is_empty() {
        return Err(Error::EmptyPreimage { y });
    }
    RegisterState::uniform_over(table.n(), &preimage)
}

/// `|sum_x a_x exp(2 pi i k x / N)|^2 / N` by direct summation.
pub fn dft(state: &RegisterState) -> Spectrum {
    let size = state.amplitudes.len();
    let scale = 1.0 / size as f64;
    let probabilities = (0..size)
        .map(|k| {
            let sum: Complex64 = state
                .amplitudes
                .iter()
                .enumerate()
                .filter(|(_, a)| a.norm_sqr() != 0.0)
                .map(|(x, a)| {
                    // reduce k*x mod N first so the phase stays exact
                    let phase = 2.0 * PI * ((k * x) % size) as f64 / size as f64;
                    a * Complex64::from_polar(1.0, phase)
                })
                .sum();
            sum.norm_sqr() * scale
        })
        .collect();
    Spectrum {
        width: state.width,
        probabilities,
    }
}

/// Whether bin `k` lies within half a bin of some multiple of `N / p`,
/// wrapping mod `N`. Exact integer test of `|k p - j N| <= p / 2`.
pub fn is_peak_bin(k: u64, size: u64, p: u64) -> bool {
    let kp = k as u128 * p as u128;
    let n = size as u128;
    let j = kp / n;
    let below = kp - j * n;
    let above = (j + 1) * n - kp;
    2 * below.min(above) <= p as u128
}

pub fn period_peak_mass(spectrum: &Spectrum, p: u64) -> Result<f64> {
    let size = spectrum.probabilities.len() as u64;
    if p == 0 || p > size {
        return Err(Error::PeriodOutOfRange { p, max: size });
    }
    Ok(spectrum
        .probabilities
        .iter()
        .enumerate()
        .filter(|(k, _)| is_peak_bin(*k as u64, size, p))
        .map(|(_, pr)| pr)
        .sum())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YMass {
    pub y: u64,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verification {
    pub period: u64,
    pub threshold: f64,
    pub passed: bool,
    /// Peak mass per output value in the image, ascending `y`.
    pub masses: Vec<YMass>,
    /// Set when the claim fails before any spectrum is taken.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verification {
    pub fn min_mass(&self) -> Option<f64> {
        self.masses.iter().map(|m| m.mass).reduce(f64::min)
    }
}

/// Pass iff every postselected spectrum puts at least `threshold` of its mass
/// on the peak bins of `p`. A period longer than the input register can never
/// be exhibited and fails without a spectrum.
pub fn verify_periodicity(circuit: &Circuit, p: u64, threshold: f64) -> Result<Verification> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "threshold must be in (0, 1], got {threshold}"
        )));
    }
    if p == 0 {
        return Err(Error::PeriodOutOfRange { p, max: 0 });
    }
    let table = circuit.truth_table()?;
    let size = table.len() as u64;
    if p > size {
        return Ok(Verification {
            period: p,
            threshold,
            passed: false,
            masses: Vec::new(),
            reason: Some(format!(
                "period {p} exceeds the {size} states of the input register"
            )),
        });
    }
    let mut masses = Vec::new();
    for y in table.image() {
        let state = RegisterState::uniform_over(table.n(), &table.preimage(y))?;
        let mass = period_peak_mass(&dft(&state), p)?;
        masses.push(YMass { y, mass });
    }
    let passed = masses.iter().all(|m| m.mass >= threshold);
    Ok(Verification {
        period: p,
        threshold,
        passed,
        masses,
        reason: None,
    })
}

/// Candidate periods `q != p` in `2..=2^n` that also pass at `threshold`.
/// At one-period register widths the spectra overlap heavily, so this list
/// is usually non-empty.
pub fn confusable_periods(circuit: &Circuit, p: u64, threshold: f64) -> Result<Vec<u64>> {
    let size = 1u64 << circuit.n();
    let mut out = Vec::new();
    for q in 2..=size {
        if q != p && verify_periodicity(circuit, q, threshold)?.passed {
            out.push(q);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peak_bins_for_p3_in_four() {
        let got: Vec<bool> = (0..4).map(|k| is_peak_bin(k, 4, 3)).collect();
        assert_eq!(got, [true, true, false, true]);
    }

    #[test]
    fn boundary_ties_count_as_inside() {
        // N=2, p=1: multiples 0 and 2, bin 1 is a full bin away
        assert!(!is_peak_bin(1, 2, 1));
        // N=3, p=2: bins 1 and 2 sit exactly 1/2 away from 1.5
        assert!(is_peak_bin(1, 3, 2));
        assert!(is_peak_bin(2, 3, 2));
    }

    #[test]
    fn delta_and_uniform_states() {
        let delta = RegisterState::uniform_over(3, &[0]).unwrap();
        let s = dft(&delta);
        for &pr in s.probabilities() {
            assert!((pr - 0.125).abs() < 1e-12);
        }
        let uni = RegisterState::uniform_over(3, &(0..8).collect::<Vec<_>>()).unwrap();
        let s = dft(&uni);
        assert!((s.probabilities()[0] - 1.0).abs() < 1e-12);
        assert!(s.probabilities()[1..].iter().all(|&p| p < 1e-12));
    }

    #[test]
    fn peak_mass_edge_cases() {
        let delta = dft(&RegisterState::uniform_over(2, &[3]).unwrap());
        assert!((period_peak_mass(&delta, 4).unwrap() - 1.0).abs() < 1e-12);
        let uni = dft(&RegisterState::uniform_over(2, &[0, 1, 2, 3]).unwrap());
        for p in 1..=4 {
            assert!((period_peak_mass(&uni, p).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!(period_peak_mass(&uni, 0).is_err());
        assert!(period_peak_mass(&uni, 5).is_err());
    }

    #[test]
    fn state_validation() {
        assert!(RegisterState::new(1, vec![Complex64::new(1.0, 0.0)]).is_err());
        assert!(RegisterState::new(1, vec![Complex64::new(1.0, 0.0); 2]).is_err());
        assert!(RegisterState::uniform_over(1, &[]).is_err());
        assert!(RegisterState::uniform_over(1, &[2]).is_err());
    }

    #[test]
    fn spectrum_json_and_bars() {
        let s = dft(&RegisterState::uniform_over(1, &[0, 1]).unwrap());
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v[1]["k"], 1);
        assert!((v[0]["probability"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(s.ascii_bars(4), "0 1.000000 |####\n1 0.000000 |\n");
    }

    #[test]
    fn threshold_domain() {
        let c = crate::synthesis::synth_two();
        assert!(verify_periodicity(&c, 2, 0.0).is_err());
        assert!(verify_periodicity(&c, 2, 1.5).is_err());
        assert!(verify_periodicity(&c, 2, 1.0).unwrap().passed);
    }
}
