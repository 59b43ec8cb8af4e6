//! Small combinatorial helpers shared across modules.

/// All permutations of `0..size` in lexicographic order, each with its sign.
pub(crate) fn signed_permutations(size: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..size).collect();
    loop {
        out.push((perm.clone(), sign_of(&perm)));
        // Next permutation in lexicographic order.
        let Some(i) = (0..size.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..size).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

fn sign_of(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let p3 = signed_permutations(3);
        assert_eq!(p3.len(), 6);
        let total: i64 = p3.iter().map(|(_, s)| s).sum();
        assert_eq!(total, 0);
        assert_eq!(p3[0], (vec![0, 1, 2], 1));
        assert!(p3.contains(&(vec![1, 0, 2], -1)));
        assert!(p3.contains(&(vec![1, 2, 0], 1)));
        assert_eq!(signed_permutations(1), vec![(vec![0], 1)]);
        assert_eq!(signed_permutations(4).len(), 24);
    }
}
