use std::fmt;

/// Young tableau stored row by row.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn first_row_len(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows weakly increase, columns strictly increase, shape is a partition.
    pub fn is_semistandard(&self) -> bool {
        let partition =
            self.rows.windows(2).all(|r| r[0].len() >= r[1].len()) && self.rows.iter().all(|r| !r.is_empty());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self.rows.windows(2).all(|r| r[1].iter().zip(&r[0]).all(|(below, above)| above < below));
        partition && rows_ok && cols_ok
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub(crate) fn add_at(&mut self, row: usize, value: u32) {
        if row == self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[row].push(value);
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
