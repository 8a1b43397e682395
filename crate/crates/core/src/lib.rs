//! Khovanov multicurve invariants of Conway tangles.
//!
//! Bigraded chain complexes over the Bar-Natan quiver algebra, their
//! morphism-space pairing, the intersection-count formula for linear curves,
//! and executable detection checks built on top of them.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod curve;
pub mod detection;
pub mod error;
pub mod examples;
pub mod f2;
pub mod pairing;

pub use algebra::{central_commutes, element_mul, grading_of, word_compose, Element, Vertex, Word, WordKind};
pub use complex::{
    cone_h, direct_sum, gauss_reduce, shift_complex, validate_complex, ComplexB, Generator, ValidationReport,
};
pub use curve::{
    classify_reduced_complex, compile, compile_component, delta, mcg_apply, normalize_slope, CurveComponent, CurveKind,
    Family, Multicurve, Slope,
};
pub use detection::{
    agccc_report, connectivity_check, detect_rational, detect_split, ecsc_scan, split_closure_analysis, AgcccReport,
    ClosureVerdict, Connectivity, EcscReport, SplitVerdict,
};
pub use error::{Error, Result};
pub use pairing::{
    basepoint_action, build_mor_complex, geometric_dim, mor_homology, torsion_witness, BigradedDims, MorClass,
    TorsionReport, TorsionWitness,
};
