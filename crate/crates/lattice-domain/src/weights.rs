use std::io::{Read, Write};

use crate::{DomainError, DomainShape, WeightCsvError};

/// Integer weights on the active cells of a shape, stored packed in
/// row-major order. Inactive cells read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    shape: DomainShape,
    offsets: Vec<usize>,
    entries: Vec<u64>,
}

fn row_offsets(shape: &DomainShape) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(shape.rows() + 1);
    let mut acc = 0;
    offsets.push(0);
    for i in 1..=shape.rows() {
        acc += shape.row_len(i);
        offsets.push(acc);
    }
    offsets
}

impl WeightMatrix {
    pub fn zeros(shape: DomainShape) -> Self {
        let offsets = row_offsets(&shape);
        let entries = vec![0; shape.active_count()];
        Self { shape, offsets, entries }
    }

    /// Builds from active-cell weights listed in row-major order.
    pub fn from_entries(shape: DomainShape, entries: Vec<u64>) -> Result<Self, DomainError> {
        let expected = shape.active_count();
        if entries.len() != expected {
            return Err(DomainError::EntryCount { expected, got: entries.len() });
        }
        Ok(Self { offsets: row_offsets(&shape), shape, entries })
    }

    /// Builds from a dense row list, reading only active cells.
    pub fn from_rows(shape: DomainShape, rows: &[Vec<u64>]) -> Result<Self, DomainError> {
        let mut m = Self::zeros(shape);
        for (i, j) in shape.cells() {
            let v = rows.get(i - 1).and_then(|r| r.get(j - 1)).copied().ok_or(DomainError::DimensionMismatch {
                rows: rows.len(),
                cols: rows.get(i - 1).map_or(0, Vec::len),
                need_rows: shape.rows(),
                need_cols: shape.row_len(i),
            })?;
            m.set(i, j, v);
        }
        Ok(m)
    }

    pub fn shape(&self) -> &DomainShape {
        &self.shape
    }

    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn cols(&self) -> usize {
        self.shape.cols()
    }

    /// Weight at `(i, j)`, 1-based; zero outside the active set.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if self.shape.is_active(i, j) {
            self.entries[self.offsets[i - 1] + j - 1]
        } else {
            0
        }
    }

    /// Sets an active cell. Panics on inactive cells.
    pub fn set(&mut self, i: usize, j: usize, w: u64) {
        assert!(self.shape.is_active(i, j), "cell ({i}, {j}) is not active");
        self.entries[self.offsets[i - 1] + j - 1] = w;
    }

    /// Active weights of row `i` (1-based), columns `1..=row_len(i)`.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[self.offsets[i - 1]..self.offsets[i]]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Dense `rows x cols` copy with zeros on inactive cells.
    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        (1..=self.rows()).map(|i| (1..=self.cols()).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Writes `i,j,w` rows for the active cells.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), WeightCsvError> {
        let mut wtr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        wtr.write_record(["i", "j", "w"])?;
        for ((i, j), w) in self.shape.cells().zip(&self.entries) {
            wtr.write_record([i.to_string(), j.to_string(), w.to_string()])?;
        }
        wtr.flush()?;
        Ok(())
    }

    /// Reads the `i,j,w` format. Every active cell must appear exactly once,
    /// in row-major order, and nothing else may appear.
    pub fn read_csv<R: Read>(shape: DomainShape, input: R) -> Result<Self, WeightCsvError> {
        let mut rdr =
            csv::ReaderBuilder::new().has_headers(true).flexible(true).trim(csv::Trim::All).from_reader(input);
        let header = rdr.headers()?.clone();
        if header.iter().collect::<Vec<_>>() != ["i", "j", "w"] {
            return Err(WeightCsvError::Header(header.iter().collect::<Vec<_>>().join(",")));
        }
        let mut expected = shape.cells();
        let mut entries = Vec::with_capacity(shape.active_count());
        for record in rdr.records() {
            let record = record?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() != 3 {
                return Err(WeightCsvError::FieldCount { line, found: record.len() });
            }
            let num = |k: usize| -> Result<u64, WeightCsvError> {
                record[k].parse::<u64>().map_err(|_| WeightCsvError::Number { line, field: record[k].to_string() })
            };
            let (i, j, w) = (num(0)? as usize, num(1)? as usize, num(2)?);
            if !shape.is_active(i, j) {
                return Err(WeightCsvError::InactiveCell { line, i, j });
            }
            match expected.next() {
                Some((ei, ej)) if (ei, ej) == (i, j) => entries.push(w),
                Some((ei, ej)) => return Err(WeightCsvError::Order { line, i, j, ei, ej }),
                None => return Err(WeightCsvError::Extra { line, i, j }),
            }
        }
        if entries.len() != shape.active_count() {
            return Err(WeightCsvError::Truncated { got: entries.len(), expected: shape.active_count() });
        }
        Ok(Self { offsets: row_offsets(&shape), shape, entries })
    }

    pub fn parse_csv(shape: DomainShape, text: &str) -> Result<Self, WeightCsvError> {
        Self::read_csv(shape, text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inactive_reads_zero() {
        let shape = DomainShape::lower_triangular(3).unwrap();
        let m = WeightMatrix::from_entries(shape, vec![1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(m.get(1, 2), 0);
        assert_eq!(m.get(3, 3), 6);
        assert_eq!(m.to_dense(), vec![vec![1, 0, 0], vec![2, 3, 0], vec![4, 5, 6]]);
        assert_eq!(m.row(2), &[2, 3]);
    }

    #[test]
    fn csv_layout() {
        let shape = DomainShape::lower_triangular(2).unwrap();
        let m = WeightMatrix::from_entries(shape, vec![2, 1, 3]).unwrap();
        let mut buf = Vec::new();
        m.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "i,j,w\n1,1,2\n2,1,1\n2,2,3\n");
    }

    #[test]
    fn csv_rejects_bad_input() {
        let shape = DomainShape::lower_triangular(2).unwrap();
        let bad = [
            "i,j,x\n1,1,2\n2,1,1\n2,2,3\n",
            "i,j,w\n1,2,2\n2,1,1\n2,2,3\n",
            "i,j,w\n2,1,1\n1,1,2\n2,2,3\n",
            "i,j,w\n1,1,2\n2,1,1\n",
            "i,j,w\n1,1,-2\n2,1,1\n2,2,3\n",
            "i,j,w\n1,1,2,9\n2,1,1\n2,2,3\n",
            "i,j,w\n1,1,2\n2,1,1\n2,2,3\n2,2,3\n",
            "",
        ];
        for text in bad {
            assert!(WeightMatrix::parse_csv(shape, text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn entry_count_mismatch() {
        let shape = DomainShape::square(2, 2).unwrap();
        assert_eq!(
            WeightMatrix::from_entries(shape, vec![1, 2, 3]),
            Err(DomainError::EntryCount { expected: 4, got: 3 })
        );
    }
}
