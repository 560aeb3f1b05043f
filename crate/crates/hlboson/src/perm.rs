//! Permutation helpers for group sums and F-matrix bookkeeping.

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_like(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn heap_like(cur: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i32)>) {
    if k == cur.len() {
        out.push((cur.clone(), sign(cur)));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        heap_like(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Sign of a permutation of `0..n`.
pub fn sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Distinct rearrangements of a multiset, in lexicographic order.
pub fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut v = items.to_vec();
    v.sort();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All sign vectors in `{+1,-1}^n`.
pub fn sign_vectors(n: usize) -> Vec<Vec<i32>> {
    (0..(1u32 << n))
        .map(|mask| (0..n).map(|i| if mask & (1 << i) == 0 { 1 } else { -1 }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(permutations_with_sign(3).len(), 6);
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign_vectors(2).len(), 4);
    }
}
