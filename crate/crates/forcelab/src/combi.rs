//! Lexicographic k-subset enumeration shared by the solver and the fort
//! enumerator. Internal iteration keeps the hot loops allocation-free.

use std::ops::ControlFlow;

/// Calls `f` on every k-subset of `0..n` in lexicographic order (as sorted
/// id slices). Stops early when `f` breaks; returns whether it broke.
pub(crate) fn for_each_combination<B>(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if let ControlFlow::Break(b) = f(&idx) {
            return Some(b);
        }
        // Advance to the next combination in lex order.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_combination::<()>(n, k, |c| {
            out.push(c.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(
            collect(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn boundary_sizes() {
        assert_eq!(collect(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(collect(3, 3), vec![vec![0, 1, 2]]);
        assert!(collect(2, 3).is_empty());
        assert_eq!(collect(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn counts_match_binomials() {
        assert_eq!(collect(10, 4).len(), 210);
        assert_eq!(collect(8, 8).len(), 1);
    }

    #[test]
    fn early_break() {
        let mut seen = 0;
        let hit = for_each_combination(5, 2, |c| {
            seen += 1;
            if c == [0, 3] {
                ControlFlow::Break(c.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(hit, Some(vec![0, 3]));
        assert_eq!(seen, 3);
    }
}
