use crate::point::PointView;
use crate::table::ColoringTable;

use super::{materialize, need, ColorCode, ConstructError, LazyColoring};

/// `x ↦ (tag, (⌊x(0)/2⌋, …, ⌊x(2k)/2⌋, Σ_{j≤2k} x(j) mod 2))` on `^{2k+1}ω`.
///
/// Each class is a product of blocks `{2l, 2l+1}` cut in half by parity,
/// so it has `2^{2k}` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityColoring {
    pub k: usize,
    pub tag: u64,
}

impl ParityColoring {
    pub fn width(&self) -> usize {
        2 * self.k + 1
    }
}

impl LazyColoring for ParityColoring {
    fn color(&self, x: &dyn PointView) -> Result<ColorCode, ConstructError> {
        let mut payload = Vec::with_capacity(self.width() + 1);
        let mut parity = 0;
        for j in 0..self.width() {
            let v = need(x, j)?;
            payload.push(v / 2);
            parity ^= v & 1;
        }
        payload.push(parity);
        Ok(ColorCode::new(self.tag, payload))
    }

    fn dependency_bound(&self, _: &dyn PointView) -> Result<usize, ConstructError> {
        Ok(self.width())
    }
}

pub fn parity_coloring(k: usize) -> ParityColoring {
    ParityColoring { k, tag: 0 }
}

/// The parity coloring on `^{2k+1}m`, colors numbered by code order.
pub fn parity_table(k: usize, m: usize) -> Result<ColoringTable, ConstructError> {
    if m == 0 || m % 2 == 1 {
        return Err(ConstructError::OddTruncation(m));
    }
    let f = parity_coloring(k);
    Ok(materialize(&f, f.width(), m)?.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::FinitePoint;

    fn fp(v: &[u64]) -> FinitePoint {
        FinitePoint::new(v.to_vec())
    }

    #[test]
    fn codes() {
        let f = parity_coloring(1);
        assert_eq!(
            f.color(&fp(&[0, 0, 0])).unwrap(),
            ColorCode::new(0, vec![0, 0, 0, 0])
        );
        assert_eq!(
            f.color(&fp(&[1, 1, 0])).unwrap(),
            f.color(&fp(&[0, 0, 0])).unwrap()
        );
        assert_eq!(
            f.color(&fp(&[5, 2, 3])).unwrap(),
            ColorCode::new(0, vec![2, 1, 1, 0])
        );
    }

    #[test]
    fn class_of_origin() {
        let t = parity_table(1, 2).unwrap();
        assert_eq!(t.sig().mu(), 2);
        let classes = t.color_classes();
        let origin = t.eval(&fp(&[0, 0, 0])).unwrap();
        assert_eq!(
            classes[&origin],
            vec![
                fp(&[0, 0, 0]),
                fp(&[1, 1, 0]),
                fp(&[1, 0, 1]),
                fp(&[0, 1, 1])
            ]
        );
    }

    #[test]
    fn odd_truncation_is_rejected() {
        assert!(matches!(
            parity_table(1, 3),
            Err(ConstructError::OddTruncation(3))
        ));
        assert!(matches!(
            parity_table(1, 0),
            Err(ConstructError::OddTruncation(0))
        ));
    }
}
