//! Built-in example codes.

use crate::codekit::LinearCode;
use crate::error::Result;
use crate::galois::make_field;

/// Generator of a [28,10,9] code over GF(4) whose hull misbehaves under
/// shortening on the first six coordinates. `w` is a root of x^2 + x + 1.
pub const FIXTURE28_ROWS: &str = "\
    1&0&0&0&0&0&0&0&w&0&0&1&0&w^2&w&w^2&w&w^2&0&0&0&w^2&w&w^2&1&w&1&w
    0&1&0&0&0&0&0&0&1&0&0&1&w&w&w^2&w&1&1&w^2&w^2&w&0&1&0&1&w&1&1
    0&0&1&0&0&0&0&0&w&0&0&w^2&w&w&w&1&0&w&w&w&1&w&1&w&w^2&1&1&0
    0&0&0&1&0&0&0&0&w&0&0&w&1&w^2&w&w&0&0&w^2&w&w&0&0&w^2&w&1&w&w^2
    0&0&0&0&1&0&0&0&1&0&0&w&w^2&0&1&1&0&1&0&1&1&0&w^2&1&0&w&1&w
    0&0&0&0&0&1&0&0&w&0&0&0&1&w^2&0&1&w^2&0&w&w^2&w^2&w&1&w^2&w&w&w^2&w^2
    0&0&0&0&0&0&1&0&w&0&0&1&0&w^2&w^2&1&w^2&w^2&w&0&0&w&w&0&w^2&w&0&w
    0&0&0&0&0&0&0&1&w&0&0&0&w^2&w&1&w^2&0&0&w^2&w&w&w^2&0&w^2&w&0&0&w^2
    0&0&0&0&0&0&0&0&0&1&0&1&w&1&w^2&0&w&1&1&1&0&w^2&w&w&w&w^2&w^2&w
    0&0&0&0&0&0&0&0&0&0&1&0&w&w^2&w&w&w&w^2&0&w^2&w&w^2&1&1&1&w&w^2&w
";

/// Parses `&`-separated rows over GF(4) written with `0`, `1`, `w`, `w^2`.
pub fn parse_gf4_rows(text: &str) -> Result<LinearCode> {
    let f = make_field(2, 2)?;
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split('&').map(|e| f.parse_elem(e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let n = rows.first().map_or(0, Vec::len);
    LinearCode::from_rows(&f, rows, n)
}

pub fn fixture28() -> LinearCode {
    parse_gf4_rows(FIXTURE28_ROWS).expect("built-in fixture parses")
}
