//! Fixed-width number rendering for machine-readable output.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Renders a finite float with exactly 17 significant digits; positional
/// notation for decimal exponents in `-5..=16`, scientific otherwise.
/// Non-finite values render as `null`.
pub fn sig17(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let sci = format!("{x:.16e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-5..=16).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, x)
    } else {
        sci
    }
}

/// A float that serializes to JSON with [`sig17`] formatting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

pub fn nums<const N: usize>(xs: [f64; N]) -> [Num; N] {
    xs.map(Num)
}
