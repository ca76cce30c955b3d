/// Length of a longest weakly increasing subsequence, `O(L log L)`.
pub fn lnds(word: &[u32]) -> usize {
    // tails[k] is the least possible last letter of a run of length k + 1
    let mut tails: Vec<u32> = Vec::new();
    for &x in word {
        let pos = tails.partition_point(|&t| t <= x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// Length of a longest weakly decreasing subsequence.
pub fn lwds(word: &[u32]) -> usize {
    let rev: Vec<u32> = word.iter().rev().copied().collect();
    lnds(&rev)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_subsets(word: &[u32]) -> usize {
        let l = word.len();
        (0u32..1 << l)
            .filter(|mask| {
                let picked: Vec<u32> = (0..l).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
                picked.windows(2).all(|p| p[0] <= p[1])
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        assert_eq!(lnds(&[1, 2, 3]), 3);
        assert_eq!(lnds(&[3, 2, 1]), 1);
        assert_eq!(lnds(&[]), 0);
        assert_eq!(lnds(&[2, 2, 1, 2]), 3);
        assert_eq!(lwds(&[3, 2, 2, 5, 1]), 4);
    }

    #[test]
    fn matches_subset_enumeration() {
        // fixed LCG so the test needs no RNG crate
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..2000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let len = (state >> 60) as usize % 13;
            let word: Vec<u32> = (0..len)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 61) as u32
                })
                .collect();
            assert_eq!(lnds(&word), by_subsets(&word), "{word:?}");
        }
    }
}
