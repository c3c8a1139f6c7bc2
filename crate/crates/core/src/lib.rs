//! Exact eigenfunctions of the spiked oscillators
//! `Hₗ = −d²/dx² + x² + l(l+1)/x²`, `l = 0, 1, 2, …`.
//!
//! Eigenfunctions are `f(x)·e^(−x²/2)` where `f` is a finite Laurent series
//! with integer coefficients. They are generated by intertwining operators
//! (changing `l`) and ladder operators (changing `k`), and integrated
//! exactly against Gaussian weights into ℚ + ℚ√π.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use spiked_core::{operators::wavefunction, measure::{bracket_raw, MeasureSpec}, StateLabel};
//!
//! assert_eq!(wavefunction(1, 0).to_string(), "2x + 1/x");
//! let norm = bracket_raw(MeasureSpec::LINEAR, StateLabel::new(7, 1), StateLabel::new(7, 1)).unwrap();
//! assert_eq!(norm.to_decimal(4), "14034.4072");
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactnum;
pub mod laurent;
pub mod measure;
pub mod operators;

pub use exactnum::{BigRational, PiScalar};
pub use laurent::LaurentSeries;
pub use measure::{GramReport, MeasureSpec};
pub use operators::{Energy, Form, StateLabel};
