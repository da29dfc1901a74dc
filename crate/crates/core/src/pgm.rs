//! Binary 8-bit PGM rendering of scalogram moduli.

use crate::cwt::Scalogram;

/// P5 image, one row per scale (smallest scale on top), one column per
/// translation, pixel `floor(255 |C| / max |C|)`. An all-zero scalogram
/// renders black.
pub fn render(s: &Scalogram) -> Vec<u8> {
    let modulus = s.map(|c| c.norm());
    let width = s.grid().len();
    let height = modulus.len();
    let max = modulus.iter().flatten().fold(0.0f64, |m, &v| m.max(v));
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.reserve(width * height);
    for row in &modulus {
        out.extend(row.iter().map(|&v| if max > 0.0 { (255.0 * v / max).floor().min(255.0) as u8 } else { 0 }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwt::ScaleRange;
    use crate::grid::make_grid;
    use num_complex::Complex64;

    fn scalogram(rows: Vec<Vec<f64>>) -> Scalogram {
        let n = rows[0].len();
        let scales = ScaleRange::new((1..=rows.len()).map(|a| a as f64).collect()).unwrap();
        let coeffs = rows.into_iter().map(|r| r.into_iter().map(|v| Complex64::new(v, 0.0)).collect()).collect();
        Scalogram::from_rows(scales, make_grid(0.0, 1.0, n).unwrap(), coeffs, 1.0).unwrap()
    }

    #[test]
    fn layout_and_quantization() {
        let img = render(&scalogram(vec![vec![0.0, -2.0], vec![1.0, 0.5]]));
        let header = b"P5\n2 2\n255\n";
        assert_eq!(&img[..header.len()], header);
        assert_eq!(&img[header.len()..], &[0, 255, 127, 63]);
    }

    #[test]
    fn zero_is_black() {
        let img = render(&scalogram(vec![vec![0.0; 4]; 3]));
        assert!(img[img.len() - 12..].iter().all(|&p| p == 0));
    }
}
