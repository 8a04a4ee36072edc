//! Exact computations with monomial ideals: symbolic powers `(I^n : J^∞)`,
//! Hilbert series numerators, multiplicities, and quasi-polynomial fits of
//! the function `f(n) = e0(I_n(J) / I^n)`.
//!
//! ```
//! use sympow::{parse_ideal_spec, HilbertEngine, sample_series};
//!
//! let spec = parse_ideal_spec("ring x y z\nI: x*y, y*z, z*x\nJ: x, y, z\n").unwrap();
//! let samples = sample_series(&spec.i, spec.j.as_ref().unwrap(), 4, &HilbertEngine::new()).unwrap();
//! let f: Vec<String> = samples.iter().map(|s| s.f.to_string()).collect();
//! assert_eq!(f[1], "1");
//! ```

pub mod error;
pub mod filtration;
pub mod harness;
pub mod hilbert;
pub mod monomial;
pub mod poly;
pub mod primes;
pub mod quasipoly;

pub use error::{Error, Result};
pub use filtration::{
    check_filtration, dim_stabilization, sample_series, symbolic_power, FiltrationProvider,
    FiltrationReport, FiltrationViolation, FnFiltration, SeriesSample, SymbolicFiltration,
};
pub use harness::corpus::{Corpus, CorpusEntry};
pub use harness::parse::{parse_ideal_spec, parse_monomial, IdealSpec};
pub use harness::report::{Verdict, VerifyRecord};
pub use harness::run::{run_fit, run_series, run_verify, Settings};
pub use hilbert::{
    dim_and_mult, hilbert_function_oracle, numerator_of_quotient, quotient_module_data, Dimension,
    HilbertData, HilbertEngine, PivotStrategy,
};
pub use monomial::{Monomial, MonomialIdeal, RingContext};
pub use poly::IntegerPolynomial;
pub use primes::{dim_quotient, height, minimal_primes, VariableSubset};
pub use quasipoly::{fit, fit_rational, QuasiPolynomial};

// The guide under book/ is compiled as doc tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/monomial-ideals.md")]
    mod monomial_ideals {}
    #[doc = include_str!("../../../book/src/hilbert-series.md")]
    mod hilbert_series {}
    #[doc = include_str!("../../../book/src/symbolic-powers.md")]
    mod symbolic_powers {}
    #[doc = include_str!("../../../book/src/quasi-polynomials.md")]
    mod quasi_polynomials {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
