//! Small enumeration helpers: permutations, tuples and set partitions.

/// Advances `perm` to the next permutation in lexicographic order.
/// Returns `false` (leaving `perm` sorted ascending) after the last one.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        current: (0..n).collect(),
        done: false,
    }
}

pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// Calls `visit` with every tuple in `[n]^len` (odometer order, last
/// coordinate fastest). `len == 0` visits the empty tuple once.
pub fn for_each_tuple(n: usize, len: usize, mut visit: impl FnMut(&[usize])) {
    if len == 0 {
        visit(&[]);
        return;
    }
    if n == 0 {
        return;
    }
    let mut tuple = vec![0usize; len];
    loop {
        visit(&tuple);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// Calls `visit` with every tuple of `len` pairwise-distinct elements of `[n]`.
pub fn for_each_injective_tuple(n: usize, len: usize, mut visit: impl FnMut(&[usize])) {
    fn recurse(
        n: usize,
        len: usize,
        tuple: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if tuple.len() == len {
            visit(tuple);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                tuple.push(v);
                recurse(n, len, tuple, used, visit);
                tuple.pop();
                used[v] = false;
            }
        }
    }
    if len > n {
        return;
    }
    let mut used = vec![false; n];
    recurse(n, len, &mut Vec::with_capacity(len), &mut used, &mut visit);
}

/// Every set partition of `0..n` as a restricted growth string: element
/// `i` lies in block `labels[i]`, and block labels appear in first-use order.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn recurse(n: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if labels.len() == n {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            recurse(n, labels, blocks.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    recurse(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
