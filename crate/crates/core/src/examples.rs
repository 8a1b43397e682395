//! The built-in example library, shipped as embedded JSON files.

use crate::complex::ComplexB;
use crate::curve::Multicurve;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Complex,
    Multicurve,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Complex => "complex",
            Kind::Multicurve => "multicurve",
        })
    }
}

const LIBRARY: &[(&str, Kind, &str)] = &[
    ("a-inf", Kind::Complex, include_str!("../data/a-inf.json")),
    ("a0", Kind::Complex, include_str!("../data/a0.json")),
    ("agccc-zero", Kind::Multicurve, include_str!("../data/agccc-zero.json")),
    ("alpha-2n-0", Kind::Complex, include_str!("../data/alpha-2n-0.json")),
    ("alpha-2n-1", Kind::Complex, include_str!("../data/alpha-2n-1.json")),
    ("alpha-2n-2", Kind::Complex, include_str!("../data/alpha-2n-2.json")),
    ("alpha-2n-3", Kind::Complex, include_str!("../data/alpha-2n-3.json")),
    ("alpha-2n-m1", Kind::Complex, include_str!("../data/alpha-2n-m1.json")),
    ("alpha-2n-m2", Kind::Complex, include_str!("../data/alpha-2n-m2.json")),
    ("alpha-2n-m3", Kind::Complex, include_str!("../data/alpha-2n-m3.json")),
    ("alpha-minus", Kind::Complex, include_str!("../data/alpha-minus.json")),
    ("alpha-minus-n1", Kind::Complex, include_str!("../data/alpha-minus-n1.json")),
    ("alpha-minus-n2", Kind::Complex, include_str!("../data/alpha-minus-n2.json")),
    ("alpha-minus-n3", Kind::Complex, include_str!("../data/alpha-minus-n3.json")),
    ("alpha-minus-n4", Kind::Complex, include_str!("../data/alpha-minus-n4.json")),
    ("alpha-plus", Kind::Complex, include_str!("../data/alpha-plus.json")),
    ("alpha-plus-n1", Kind::Complex, include_str!("../data/alpha-plus-n1.json")),
    ("alpha-plus-n2", Kind::Complex, include_str!("../data/alpha-plus-n2.json")),
    ("alpha-plus-n3", Kind::Complex, include_str!("../data/alpha-plus-n3.json")),
    ("alpha-plus-n4", Kind::Complex, include_str!("../data/alpha-plus-n4.json")),
    ("bn-q13", Kind::Complex, include_str!("../data/bn-q13.json")),
    ("e1", Kind::Complex, include_str!("../data/e1.json")),
    ("e2", Kind::Complex, include_str!("../data/e2.json")),
    ("e3", Kind::Complex, include_str!("../data/e3.json")),
    ("ecsc-two", Kind::Multicurve, include_str!("../data/ecsc-two.json")),
    ("ecsc-zero", Kind::Multicurve, include_str!("../data/ecsc-zero.json")),
    ("p23-curve", Kind::Multicurve, include_str!("../data/p23-curve.json")),
    ("r1-0", Kind::Complex, include_str!("../data/r1-0.json")),
    ("r1-inf", Kind::Complex, include_str!("../data/r1-inf.json")),
    ("trefoil-curve", Kind::Multicurve, include_str!("../data/trefoil-curve.json")),
    ("unknot-curve", Kind::Multicurve, include_str!("../data/unknot-curve.json")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Example {
    Complex(ComplexB),
    Multicurve(Multicurve),
}

/// Names and kinds of all built-in examples, sorted by name.
pub fn example_names() -> Vec<(&'static str, Kind)> {
    LIBRARY.iter().map(|&(name, kind, _)| (name, kind)).collect()
}

/// The raw JSON text of an example.
pub fn example_source(name: &str) -> Result<&'static str> {
    LIBRARY
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|&(_, _, text)| text)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))
}

pub fn load_example(name: &str) -> Result<Example> {
    let text = example_source(name)?;
    let kind = LIBRARY.iter().find(|(n, _, _)| *n == name).map(|&(_, k, _)| k).expect("found above");
    Ok(match kind {
        Kind::Complex => Example::Complex(ComplexB::from_json_str(text)?),
        Kind::Multicurve => Example::Multicurve(Multicurve::from_json_str(text)?),
    })
}

pub fn example_complex(name: &str) -> Result<ComplexB> {
    match load_example(name)? {
        Example::Complex(x) => Ok(x),
        Example::Multicurve(_) => Err(Error::Parse(format!("example `{name}` is a multicurve, not a complex"))),
    }
}

pub fn example_multicurve(name: &str) -> Result<Multicurve> {
    match load_example(name)? {
        Example::Multicurve(c) => Ok(c),
        Example::Complex(_) => Err(Error::Parse(format!("example `{name}` is a complex, not a multicurve"))),
    }
}
