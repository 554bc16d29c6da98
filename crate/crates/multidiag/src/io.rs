//! The on-disk matrix format.
//!
//! ```json
//! {
//!   "n": 2,
//!   "k": 2,
//!   "mode": "exact",
//!   "diagonals": {
//!     "-1": ["1", "0", "0"],
//!     "0": ["2", "3", "4"],
//!     "1": ["1", "0", "0"]
//!   }
//! }
//! ```
//!
//! Offsets are signed integers in units of `k`; a missing offset is a
//! zero diagonal; every listed diagonal carries exactly `n + 1` scalar
//! strings. Emitted files are canonical: offsets ascending, scalars in
//! canonical text form, two-space indentation, trailing newline —
//! identical inputs always produce byte-identical outputs.

use crate::diagvec::DiagVec;
use crate::error::{Error, Result};
use crate::mdmatrix::MdMatrix;
use crate::scalar::{Mode, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    k: usize,
    mode: String,
    diagonals: BTreeMap<isize, Vec<String>>,
}

pub fn to_json(m: &MdMatrix) -> String {
    let diagonals = m
        .diags()
        .map(|(p, d)| (p, d.coords().iter().map(Scalar::to_string).collect()))
        .collect();
    let file = MatrixFile {
        n: m.n(),
        k: m.k(),
        mode: m.mode().to_string(),
        diagonals,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> Result<MdMatrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mode = match file.mode.as_str() {
        "exact" => Mode::Exact,
        "float" => Mode::Float,
        other => return Err(Error::Parse(format!("unknown mode `{other}`"))),
    };
    let mut diags = BTreeMap::new();
    for (p, strings) in file.diagonals {
        let coords = strings
            .iter()
            .map(|s| Scalar::parse(s, mode))
            .collect::<Result<Vec<_>>>()?;
        diags.insert(p, DiagVec::new(coords)?);
    }
    MdMatrix::new(file.n, file.k, mode, diags)
}

pub fn read_matrix(path: &Path) -> Result<MdMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_matrix(path: &Path, m: &MdMatrix) -> Result<()> {
    std::fs::write(path, to_json(m)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> MdMatrix {
        let mut diags = BTreeMap::new();
        diags.insert(-1, DiagVec::from_ints(&[1, 0, 0], Mode::Exact));
        diags.insert(0, DiagVec::from_ints(&[2, 3, 4], Mode::Exact));
        diags.insert(1, DiagVec::from_ints(&[1, 0, 0], Mode::Exact));
        MdMatrix::new(2, 2, Mode::Exact, diags).unwrap()
    }

    #[test]
    fn round_trip_preserves_matrix() {
        let a = fixture();
        assert_eq!(from_json(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn emission_is_deterministic_and_sorted() {
        let text = to_json(&fixture());
        assert_eq!(text, to_json(&fixture()));
        let minus = text.find("\"-1\":").unwrap();
        let zero = text.find("\"0\":").unwrap();
        let plus = text.find("\"1\":").unwrap();
        assert!(minus < zero && zero < plus);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn missing_offsets_are_zero_diagonals() {
        let text = r#"{"n": 2, "k": 2, "mode": "exact", "diagonals": {"0": ["2", "3", "4"]}}"#;
        let m = from_json(text).unwrap();
        assert!(m.diag(1).is_none());
        assert!(m.entry(0, 2).unwrap().is_zero());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(from_json("not json"), Err(Error::Parse(_))));
        let bad_mode = r#"{"n": 2, "k": 2, "mode": "decimal", "diagonals": {}}"#;
        assert!(matches!(from_json(bad_mode), Err(Error::Parse(_))));
        let bad_scalar =
            r#"{"n": 2, "k": 2, "mode": "exact", "diagonals": {"0": ["x", "0", "0"]}}"#;
        assert!(matches!(from_json(bad_scalar), Err(Error::Parse(_))));
        let bad_len = r#"{"n": 2, "k": 2, "mode": "exact", "diagonals": {"0": ["1", "2"]}}"#;
        assert!(matches!(
            from_json(bad_len),
            Err(Error::DiagonalLength { .. })
        ));
        let bad_offset =
            r#"{"n": 2, "k": 2, "mode": "exact", "diagonals": {"2": ["0", "0", "0"]}}"#;
        assert!(matches!(
            from_json(bad_offset),
            Err(Error::OffsetOutOfRange { .. })
        ));
        let bad_padding =
            r#"{"n": 2, "k": 2, "mode": "exact", "diagonals": {"1": ["1", "1", "0"]}}"#;
        assert!(matches!(
            from_json(bad_padding),
            Err(Error::TrailingZero { .. })
        ));
    }

    #[test]
    fn float_matrices_round_trip() {
        let mut diags = BTreeMap::new();
        diags.insert(
            0,
            DiagVec::new(vec![
                Scalar::float(0.1),
                Scalar::complex(1.5, -2.5),
                Scalar::float(3.0),
            ])
            .unwrap(),
        );
        let m = MdMatrix::new(2, 1, Mode::Float, diags).unwrap();
        assert_eq!(from_json(&to_json(&m)).unwrap(), m);
    }
}
