use serde::Serialize;

use super::overpartition::{Overpartition, Part};
use crate::error::{Error, Result};

/// Split of an overpartition along its Durfee rectangle.
///
/// The rectangle has `d` rows and `d + offset` columns. `right` is the
/// conjugate of the region to the right of the rectangle (marks on rows
/// `1..=d` travel with their row), `below` holds rows `d+1..` together with
/// every zero part. When row `d` ends exactly at the rectangle's edge and is
/// overlined, that mark sits on the rectangle's corner and is recorded in
/// `corner_overlined`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DurfeeDecomposition {
    pub d: usize,
    pub offset: i64,
    pub right: Overpartition,
    pub below: Overpartition,
    pub corner_overlined: bool,
}

/// `d = max { k : lambda_k >= k + offset }` over the positive parts.
pub fn durfee(lambda: &Overpartition, offset: i64) -> Result<DurfeeDecomposition> {
    if offset < -1 {
        return Err(Error::BadIndices(format!("durfee offset {offset} < -1")));
    }
    let parts = lambda.parts();
    let d = parts
        .iter()
        .enumerate()
        .take_while(|(i, p)| i64::from(p.value) >= *i as i64 + 1 + offset)
        .count();
    let width = d as i64 + offset;
    let mut rows = Vec::with_capacity(d);
    let mut corner_overlined = false;
    for (i, p) in parts[..d].iter().enumerate() {
        let rest = (i64::from(p.value) - width) as u32;
        if rest == 0 {
            // only the last row of the rectangle can carry a mark here
            corner_overlined = p.overlined;
            debug_assert!(!p.overlined || i + 1 == d);
        } else {
            rows.push(Part {
                value: rest,
                overlined: p.overlined,
            });
        }
    }
    let right_region = Overpartition::new(rows, 0)?;
    let below = Overpartition::new(parts[d..].to_vec(), lambda.zeros())?;
    Ok(DurfeeDecomposition {
        d,
        offset,
        right: right_region.conjugate(),
        below,
        corner_overlined,
    })
}

/// Inverse of [`durfee`]; fails when the pieces do not glue into a valid
/// overpartition with the same rectangle.
pub fn reconstruct(dec: &DurfeeDecomposition) -> Result<Overpartition> {
    let region = dec.right.conjugate();
    if region.num_parts() > dec.d {
        return Err(Error::IllFormedImage(format!(
            "right region {} taller than the rectangle ({})",
            dec.right, dec.d
        )));
    }
    let width = dec.d as i64 + dec.offset;
    if dec.d > 0 && width < 0 {
        return Err(Error::IllFormedImage("negative rectangle width".into()));
    }
    let mut parts = Vec::with_capacity(dec.d + dec.below.num_positive());
    for i in 0..dec.d {
        let (rest, over) = match region.parts().get(i) {
            Some(p) => (p.value, p.overlined),
            None => (0, false),
        };
        let value = (width + i64::from(rest)) as u32;
        let over = over || (i + 1 == dec.d && rest == 0 && dec.corner_overlined);
        if value == 0 {
            return Err(Error::IllFormedImage("zero-width rectangle row".into()));
        }
        parts.push(Part {
            value,
            overlined: over,
        });
    }
    if dec.corner_overlined && (dec.d == 0 || region.num_parts() == dec.d) {
        return Err(Error::IllFormedImage(
            "corner mark without a bare corner".into(),
        ));
    }
    parts.extend_from_slice(dec.below.parts());
    let lambda = Overpartition::new(parts, dec.below.zeros())
        .map_err(|e| Error::IllFormedImage(e.to_string()))?;
    let check = durfee(&lambda, dec.offset)?;
    if check.d != dec.d {
        return Err(Error::IllFormedImage(format!(
            "reassembled {lambda} has Durfee size {} instead of {}",
            check.d, dec.d
        )));
    }
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_overpartitions;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_split() {
        let dec = durfee(&op("5,5~,3,2,0"), 0).unwrap();
        assert_eq!(dec.d, 3);
        assert_eq!(dec.below, op("2,0"));
        assert_eq!(dec.right, op("2,2~"));
        assert!(!dec.corner_overlined);
    }

    #[test]
    fn worked_example_glue() {
        let dec = DurfeeDecomposition {
            d: 3,
            offset: 0,
            right: op("2"),
            below: op("2,2~,0"),
            corner_overlined: false,
        };
        assert_eq!(reconstruct(&dec).unwrap(), op("4,4,3,2,2~,0"));
    }

    #[test]
    fn empty_split() {
        let dec = durfee(&Overpartition::empty(), 0).unwrap();
        assert_eq!(dec.d, 0);
        assert!(dec.right.is_empty() && dec.below.is_empty());
    }

    #[test]
    fn overlined_corner() {
        let sq = op("3,3,3~");
        let dec = durfee(&sq, 0).unwrap();
        assert!(dec.corner_overlined);
        assert!(dec.right.is_empty() && dec.below.is_empty());
        assert_eq!(reconstruct(&dec).unwrap(), sq);
    }

    #[test]
    fn roundtrip_small_boxes() {
        for c in -1..=1 {
            for m in 0..=5 {
                for n in 0..=5 {
                    for x in enumerate_overpartitions(m, n) {
                        let dec = durfee(&x, c).unwrap();
                        assert_eq!(reconstruct(&dec).unwrap(), x, "offset {c}");
                    }
                }
            }
        }
    }
}
