//! Text matrix format: the first line holds `n`, followed by `n` lines of
//! `n` whitespace-separated decimal weights.

use crate::error::{Error, Result};
use crate::metric::DissimilarityMatrix;

/// Parses a matrix file. With `symmetrize`, each mirrored pair is replaced
/// by its larger value before validation.
pub fn parse_matrix(text: &str, symmetrize: bool) -> Result<DissimilarityMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Dimension("empty input".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Dimension(format!("bad size line {:?}", header.trim())))?;
    if n < 2 {
        return Err(Error::TooFewObjects(n));
    }

    let mut data = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Dimension(format!("expected {n} rows, found {row}")))?;
        let before = data.len();
        for (col, tok) in line.split_whitespace().enumerate() {
            if col >= n {
                return Err(Error::Dimension(format!(
                    "row {row} has more than {n} entries"
                )));
            }
            let v: f64 = tok.parse().map_err(|_| Error::BadNumber {
                row,
                col,
                token: tok.to_string(),
            })?;
            if !v.is_finite() {
                return Err(Error::NonFinite { row, col });
            }
            if v < 0.0 {
                return Err(Error::Negative { row, col, value: v });
            }
            data.push(v);
        }
        let got = data.len() - before;
        if got != n {
            return Err(Error::Dimension(format!(
                "row {row} has {got} entries, expected {n}"
            )));
        }
    }
    if lines.next().is_some() {
        return Err(Error::Dimension(format!("more than {n} rows")));
    }

    if symmetrize {
        for i in 0..n {
            for j in 0..i {
                let m = data[i * n + j].max(data[j * n + i]);
                data[i * n + j] = m;
                data[j * n + i] = m;
            }
        }
    }
    DissimilarityMatrix::from_vec(n, data)
}

/// Writes the canonical form: shortest round-trip decimal for every weight,
/// single spaces, one trailing newline per line.
pub fn serialize_matrix(d: &DissimilarityMatrix) -> String {
    let mut out = format!("{}\n", d.len());
    for i in 0..d.len() {
        let row: Vec<String> = d.row(i).iter().map(|w| w.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let d = parse_matrix("2\n0 5\n5 0", false).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.get(0, 1), 5.0);

        assert!(matches!(
            parse_matrix("2\n0 5\n4 0", false),
            Err(Error::Asymmetric { row: 1, col: 0, .. })
        ));
        let d = parse_matrix("2\n0 5\n4 0", true).unwrap();
        assert_eq!(d.get(1, 0), 5.0);
    }

    #[test]
    fn parse_errors_name_the_cell() {
        assert!(matches!(
            parse_matrix("2\n0 -1\n-1 0", false),
            Err(Error::Negative { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("2\n0 inf\ninf 0", false),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
        assert!(matches!(
            parse_matrix("2\n0 x\n1 0", false),
            Err(Error::BadNumber { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            parse_matrix("3\n0 1 1\n1 0", false),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            parse_matrix("2\n0 1 1\n1 0", false),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            parse_matrix("2\n0 1\n1 0\n1 1", false),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(parse_matrix("", false), Err(Error::Dimension(_))));
        assert!(matches!(
            parse_matrix("1\n0", false),
            Err(Error::TooFewObjects(1))
        ));
        assert!(matches!(
            parse_matrix("2\n1 1\n1 0", false),
            Err(Error::NonzeroDiagonal { index: 0, .. })
        ));
    }

    #[test]
    fn canonical_text_round_trips() {
        let text = "3\n0 1.5 2\n1.5 0 0.1\n2 0.1 0\n";
        assert_eq!(serialize_matrix(&parse_matrix(text, false).unwrap()), text);
    }

    proptest! {
        #[test]
        fn round_trip(n in 2usize..7, seed in prop::collection::vec(0.0f64..1e6, 21)) {
            let mut it = seed.into_iter().cycle();
            let d = DissimilarityMatrix::from_fn(n, |_, _| it.next().unwrap()).unwrap();
            let text = serialize_matrix(&d);
            let back = parse_matrix(&text, false).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(serialize_matrix(&back), text);
        }
    }
}
