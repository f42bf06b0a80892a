//! Signal primitives shared by the rest of the crate: FFT, analytic-signal
//! completion, windows, resampling and spectral descriptors.
//!
//! Everything here is a pure function over immutable inputs and safe to call
//! from any number of threads.

mod analytic;
mod fft;
mod resample;
mod spectral;
mod window;

pub use analytic::{analytic_completion, discrete_hilbert, hilbert_adjoint};
pub use fft::{fft, ifft};
pub use resample::resample;
pub use spectral::spectral_centroid;
pub use window::hann_window;

use crate::error::{Error, Result};

/// A real-valued signal with its sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal {
    pub samples: Vec<f64>,
    /// Samples per second.
    pub rate: u32,
}

impl RealSignal {
    pub fn new(samples: Vec<f64>, rate: u32) -> Result<Self> {
        if rate == 0 {
            return Err(Error::InvalidInput("sample rate must be positive".into()));
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite("signal contains NaN or Inf".into()));
        }
        Ok(RealSignal { samples, rate })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.rate as f64
    }

    /// Sampled sine tone, handy for fixtures and examples.
    pub fn tone(freq_hz: f64, amplitude: f64, duration_secs: f64, rate: u32) -> Result<Self> {
        let n = (duration_secs * rate as f64).round() as usize;
        let w = 2.0 * std::f64::consts::PI * freq_hz / rate as f64;
        RealSignal::new(
            (0..n).map(|i| amplitude * (w * i as f64).sin()).collect(),
            rate,
        )
    }
}

/// Paired real/imaginary vectors of equal length.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl ComplexVector {
    pub fn new(re: Vec<f64>, im: Vec<f64>) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::ShapeMismatch(format!(
                "re has {} entries, im has {}",
                re.len(),
                im.len()
            )));
        }
        if re.iter().chain(im.iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("complex vector contains NaN or Inf".into()));
        }
        Ok(ComplexVector { re, im })
    }

    pub fn from_real(re: Vec<f64>) -> Self {
        let im = vec![0.0; re.len()];
        ComplexVector { re, im }
    }

    pub fn zeros(len: usize) -> Self {
        ComplexVector {
            re: vec![0.0; len],
            im: vec![0.0; len],
        }
    }

    pub fn len(&self) -> usize {
        self.re.len()
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty()
    }

    pub fn magnitude(&self, i: usize) -> f64 {
        self.re[i].hypot(self.im[i])
    }

    pub fn energy(&self) -> f64 {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(r, i)| r * r + i * i)
            .sum()
    }
}
