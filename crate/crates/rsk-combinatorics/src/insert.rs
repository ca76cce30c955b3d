use crate::{Biword, Tableau};

/// Row-inserts `x`, bumping the leftmost entry strictly greater than it.
/// Returns the row where a box was added.
fn row_insert(p: &mut Tableau, mut x: u32) -> usize {
    let rows = p.rows_mut();
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&e| e <= x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Column-inserts `x`, bumping the topmost entry `>= x` and moving the bumped
/// letter to the next column. Returns the row where a box was added.
fn column_insert(p: &mut Tableau, mut x: u32) -> usize {
    let rows = p.rows_mut();
    let mut col = 0;
    loop {
        let height = rows.iter().take_while(|r| r.len() > col).count();
        // column entries strictly increase downward
        let pos = (0..height).find(|&r| rows[r][col] >= x);
        match pos {
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                rows[height].push(x);
                return height;
            }
            Some(r) => {
                std::mem::swap(&mut rows[r][col], &mut x);
                col += 1;
            }
        }
    }
}

pub fn row_insert_word(word: &[u32]) -> Tableau {
    let mut p = Tableau::new();
    for &x in word {
        row_insert(&mut p, x);
    }
    p
}

pub fn column_insert_word(word: &[u32]) -> Tableau {
    let mut p = Tableau::new();
    for &x in word {
        column_insert(&mut p, x);
    }
    p
}

/// Row insertion of the bottom word; `Q` records the top letters.
pub fn row_insert_rsk(b: &Biword) -> (Tableau, Tableau) {
    let mut p = Tableau::new();
    let mut q = Tableau::new();
    for &(i, j) in b.pairs() {
        let r = row_insert(&mut p, j);
        q.add_at(r, i);
    }
    (p, q)
}

/// Order in which column insertion reads the bottom letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColumnReading {
    /// Plain lexicographic order of the biword.
    Lexicographic,
    /// Top letters ascending, bottom letters descending within each block of
    /// equal top letter. The first row of `P` then has the length of the
    /// longest down-left chain of the matrix.
    #[default]
    RowReversed,
}

/// Column insertion of the bottom letters with the bump rule "smallest entry
/// `>= x` in the column"; `Q` records the top letters.
///
/// Under this rule the first row of `P` has length equal to the longest
/// weakly decreasing subsequence of the inserted word.
pub fn column_insert_rsk(b: &Biword, reading: ColumnReading) -> (Tableau, Tableau) {
    let mut order: Vec<(u32, u32)> = b.pairs().to_vec();
    if reading == ColumnReading::RowReversed {
        order.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    }
    let mut p = Tableau::new();
    let mut q = Tableau::new();
    for (i, j) in order {
        let r = column_insert(&mut p, j);
        q.add_at(r, i);
    }
    (p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{lnds, lwds};

    #[test]
    fn empty() {
        let (p, q) = row_insert_rsk(&Biword::default());
        assert!(p.is_empty() && q.is_empty());
        let (p, q) = column_insert_rsk(&Biword::default(), ColumnReading::default());
        assert!(p.is_empty() && q.is_empty());
    }

    #[test]
    fn constant_word_is_one_row() {
        let b = Biword::from_pairs(vec![(1, 1), (2, 1), (3, 1)]);
        let (p, q) = row_insert_rsk(&b);
        assert_eq!(p.rows(), &[vec![1, 1, 1]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn decreasing_word_column_inserts_to_one_row() {
        // 3 -> [3]; 2 bumps 3 into column 2 -> [2 3]; 1 bumps 2, 2 bumps 3
        let p = column_insert_word(&[3, 2, 1]);
        assert_eq!(p.rows(), &[vec![1, 2, 3]]);
        let b = Biword::from_pairs(vec![(1, 3), (2, 2), (3, 1)]);
        let (p, q) = column_insert_rsk(&b, ColumnReading::Lexicographic);
        assert_eq!(p.rows(), &[vec![1, 2, 3]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn increasing_word_column_inserts_to_one_column() {
        assert_eq!(column_insert_word(&[1, 2, 3]).rows(), &[vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn row_insertion_bumps() {
        let p = row_insert_word(&[2, 3, 1, 2]);
        assert_eq!(p.rows(), &[vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn column_insertion_matches_reversed_row_insertion() {
        let mut state = 7u64;
        for _ in 0..500 {
            let word: Vec<u32> = (0..15)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    (state >> 61) as u32
                })
                .collect();
            let rev: Vec<u32> = word.iter().rev().copied().collect();
            let p = column_insert_word(&word);
            assert_eq!(p, row_insert_word(&rev));
            assert!(p.is_semistandard());
            assert_eq!(p.first_row_len(), lwds(&word));
            assert_eq!(row_insert_word(&word).first_row_len(), lnds(&word));
        }
    }

    #[test]
    fn readings_differ_within_a_row() {
        // one row holding columns 1 and 2: the reversed reading sees 2, 1
        let b = Biword::from_pairs(vec![(1, 1), (1, 2)]);
        assert_eq!(column_insert_rsk(&b, ColumnReading::Lexicographic).0.first_row_len(), 1);
        assert_eq!(column_insert_rsk(&b, ColumnReading::RowReversed).0.first_row_len(), 2);
    }
}
