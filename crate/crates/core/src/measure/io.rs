//! Columnar text format: `#` header lines then one `x y weight` atom per line.

use super::AtomicMeasure;
use crate::error::{domain, Result};
use std::io::{BufRead, Write};

pub fn write_measure(measure: &AtomicMeasure, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "# alpha {:e}", measure.alpha())?;
    writeln!(out, "# generator_tag {}", measure.generator_tag())?;
    if let (Some(c0), Some(c1)) = (measure.c0_est(), measure.c1_est()) {
        writeln!(out, "# c0_est {c0:e}")?;
        writeln!(out, "# c1_est {c1:e}")?;
    }
    writeln!(out, "# truncated {}", measure.is_truncated())?;
    writeln!(out, "# cell_size {:e}", measure.cell_size())?;
    for (p, w) in measure.points().iter().zip(measure.weights()) {
        // `{:e}` prints the shortest round-tripping mantissa
        writeln!(out, "{:e} {:e} {:e}", p[0], p[1], w)?;
    }
    Ok(())
}

pub fn read_measure(input: impl BufRead) -> Result<AtomicMeasure> {
    let mut alpha = None;
    let mut tag = String::from("file");
    let (mut c0, mut c1) = (None, None);
    let mut truncated = false;
    let mut cell = None;
    let mut points = Vec::new();
    let mut weights = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| domain(format!("read error: {e}")))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| domain(format!("line {}: {what}: {line:?}", lineno + 1));
        if let Some(h) = line.strip_prefix('#') {
            let mut it = h.trim().splitn(2, char::is_whitespace);
            let key = it.next().unwrap_or("");
            let val = it.next().unwrap_or("").trim();
            let num = || val.parse::<f64>().map_err(|_| bad("bad header value"));
            match key {
                "alpha" => alpha = Some(num()?),
                "generator_tag" => tag = val.to_string(),
                "c0_est" => c0 = Some(num()?),
                "c1_est" => c1 = Some(num()?),
                "truncated" => truncated = val.parse().map_err(|_| bad("bad flag"))?,
                "cell_size" => cell = Some(num()?),
                _ => {}
            }
            continue;
        }
        let cols: Vec<f64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("expected three numbers"))?;
        if cols.len() != 3 {
            return Err(bad("expected three columns"));
        }
        points.push([cols[0], cols[1]]);
        weights.push(cols[2]);
    }
    let alpha = alpha.ok_or_else(|| domain("missing '# alpha' header"))?;
    let mut m = AtomicMeasure::new(points, weights, alpha, tag)?.with_truncated(truncated);
    if let Some(h) = cell {
        m = m.with_cell_size(h);
    }
    if let (Some(a), Some(b)) = (c0, c1) {
        m = m.with_ahlfors(a, b)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{generate_circle, Point};
    use proptest::prelude::*;

    #[test]
    fn missing_alpha_is_an_error() {
        let err = read_measure("0 0 1\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("alpha"));
        assert!(read_measure("# alpha 1\n0 0\n".as_bytes()).is_err());
    }

    #[test]
    fn circle_round_trip_with_constants() {
        let m = generate_circle([0.1, -0.2], 1.5, 17).unwrap().with_ahlfors(0.9, 2.1).unwrap();
        let mut buf = Vec::new();
        write_measure(&m, &mut buf).unwrap();
        assert_eq!(read_measure(buf.as_slice()).unwrap(), m);
    }

    proptest! {
        #[test]
        fn round_trip(atoms in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3, 1e-9f64..1e3), 1..40),
                      alpha in 0.01f64..=2.0) {
            let pts: Vec<Point> = atoms.iter().map(|a| [a.0, a.1]).collect();
            let w: Vec<f64> = atoms.iter().map(|a| a.2).collect();
            let m = AtomicMeasure::new(pts, w, alpha, "prop").unwrap();
            let mut buf = Vec::new();
            write_measure(&m, &mut buf).unwrap();
            prop_assert_eq!(read_measure(buf.as_slice()).unwrap(), m);
        }
    }
}
