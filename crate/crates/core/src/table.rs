use crate::error::{Error, Result};

/// Index of an element within one algebra's carrier.
pub type ElementId = usize;

/// Largest carrier a table can hold; entries are stored as bytes.
pub const MAX_CARRIER: usize = 255;

/// A total binary operation on `0..size`, stored row-major.
///
/// Row is the left operand, column the right one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BinOpTable {
    size: usize,
    entries: Vec<u8>,
}

impl BinOpTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(ElementId, ElementId) -> ElementId) -> Self {
        assert!(
            size <= MAX_CARRIER,
            "carrier of {size} elements is too large"
        );
        let mut entries = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let v = f(x, y);
                assert!(v < size, "entry {v} out of range for size {size}");
                entries.push(v as u8);
            }
        }
        BinOpTable { size, entries }
    }

    /// Builds a table from explicit rows, rejecting ragged or out-of-range input.
    pub fn from_rows<R: AsRef<[ElementId]>>(rows: &[R]) -> Result<Self> {
        let size = rows.len();
        if size > MAX_CARRIER {
            return Err(Error::Structural(format!(
                "carrier of {size} elements exceeds {MAX_CARRIER}"
            )));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != size {
                return Err(Error::Structural(format!(
                    "row {r} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= size {
                    return Err(Error::Structural(format!(
                        "entry {v} in row {r} is not an element index below {size}"
                    )));
                }
                entries.push(v as u8);
            }
        }
        Ok(BinOpTable { size, entries })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: ElementId, y: ElementId) -> ElementId {
        self.entries[x * self.size + y] as ElementId
    }

    #[inline]
    pub fn set(&mut self, x: ElementId, y: ElementId, v: ElementId) {
        assert!(v < self.size);
        self.entries[x * self.size + y] = v as u8;
    }

    pub fn row(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.entries[x * self.size..(x + 1) * self.size]
            .iter()
            .map(|&v| v as ElementId)
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        (0..self.size).map(|x| self.row(x).collect()).collect()
    }

    /// Raw row-major bytes.
    pub fn as_bytes(&self) -> &[u8] {
        &self.entries
    }

    /// Applies the relabeling `perm[old] = new`.
    pub fn relabel(&self, perm: &[ElementId]) -> Self {
        debug_assert_eq!(perm.len(), self.size);
        let mut out = BinOpTable {
            size: self.size,
            entries: vec![0; self.entries.len()],
        };
        for x in 0..self.size {
            for y in 0..self.size {
                out.set(perm[x], perm[y], perm[self.get(x, y)]);
            }
        }
        out
    }

    /// Restricts to the sorted `carrier`, reindexing elements by their
    /// position in it. Returns the first pair whose value leaves the carrier
    /// as an error.
    pub fn restrict(&self, carrier: &[ElementId]) -> Result<Self, (ElementId, ElementId)> {
        let index = position_map(self.size, carrier);
        let k = carrier.len();
        let mut entries = Vec::with_capacity(k * k);
        for &x in carrier {
            for &y in carrier {
                match index[self.get(x, y)] {
                    Some(i) => entries.push(i as u8),
                    None => return Err((x, y)),
                }
            }
        }
        Ok(BinOpTable { size: k, entries })
    }
}

/// `map[e] = Some(i)` when `carrier[i] == e`.
pub(crate) fn position_map(size: usize, carrier: &[ElementId]) -> Vec<Option<usize>> {
    let mut index = vec![None; size];
    for (i, &e) in carrier.iter().enumerate() {
        index[e] = Some(i);
    }
    index
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_are_structural_errors() {
        let err = BinOpTable::from_rows(&[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let err = BinOpTable::from_rows(&[vec![0, 2], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn relabel_swaps_entries() {
        let t = BinOpTable::from_rows(&[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]]).unwrap();
        let r = t.relabel(&[0, 2, 1]);
        assert_eq!(r.get(2, 2), 2);
        assert_eq!(r.get(1, 2), 2);
        assert_eq!(r.get(1, 1), 1);
    }

    #[test]
    fn restrict_reports_escaping_pair() {
        let t = BinOpTable::from_rows(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]]).unwrap();
        assert_eq!(
            t.restrict(&[0, 1]).unwrap().rows(),
            vec![vec![0, 0], vec![0, 1]]
        );
        assert_eq!(
            t.restrict(&[0, 2]).unwrap().rows(),
            vec![vec![0, 0], vec![0, 1]]
        );
        let t2 = BinOpTable::from_rows(&[vec![0, 2, 0], vec![2, 1, 2], vec![0, 2, 2]]).unwrap();
        assert_eq!(t2.restrict(&[0, 1]), Err((0, 1)));
    }
}
