//! Benchmark fixtures.

use macaulay_core::io::parse_dsl;
use macaulay_core::{PDSystem, Rational};

pub const FIXTURES: &[(&str, &str)] = &[
    ("zero_symbol", "n=2\ny[0,3]\ny[1,2]\ny[2,1]\ny[3,0]\ny[0,2]\ny[1,1]"),
    ("gorenstein_8", "n=3\ny[0,0,2]\ny[0,1,1] - y[2,0,0]\ny[0,2,0]"),
    ("two_pure", "n=3\ny[0,0,2]\ny[0,1,1] - y[1,0,1]\ny[0,2,0] - y[1,1,0]"),
    ("divergence", "n=4 m=3\ny1[0,0,0,1]\ny2[0,0,0,1]\ny3[0,0,0,1]\ny3[0,0,1,0] + y2[0,1,0,0] + y1[1,0,0,0]"),
];

pub fn system(text: &str) -> PDSystem<Rational> {
    parse_dsl(text).expect("fixture parses").rational().expect("fixture is rational")
}
