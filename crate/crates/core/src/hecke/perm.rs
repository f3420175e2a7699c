//! Permutations in one-line notation, `g[i] = g(i)` on `0..n`, composed as
//! functions: `(gh)(i) = g(h(i))`.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn length(g: &[u8]) -> usize {
    let mut c = 0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if g[i] > g[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn inverse(g: &[u8]) -> Perm {
    let mut h = vec![0; g.len()];
    for (i, &v) in g.iter().enumerate() {
        h[v as usize] = i as u8;
    }
    h
}

/// `g s_i`.
pub fn mul_s_right(g: &[u8], i: usize) -> Perm {
    let mut h = g.to_vec();
    h.swap(i, i + 1);
    h
}

/// `s_i g`.
pub fn mul_s_left(g: &[u8], i: usize) -> Perm {
    g.iter()
        .map(|&v| match v as usize {
            x if x == i => (i + 1) as u8,
            x if x == i + 1 => i as u8,
            _ => v,
        })
        .collect()
}

/// Does `g s_i` have greater length than `g`?
pub fn right_ascent(g: &[u8], i: usize) -> bool {
    g[i] < g[i + 1]
}

/// Does `s_i g` have greater length than `g`?
pub fn left_ascent(g: &[u8], i: usize) -> bool {
    let p = g.iter().position(|&v| v as usize == i).unwrap();
    let q = g.iter().position(|&v| v as usize == i + 1).unwrap();
    p < q
}

/// The reduced word `[i_1, ..., i_m]` with `g = s_{i_1} ⋯ s_{i_m}`, obtained
/// by peeling off the leftmost right descent.
pub fn reduced_word(g: &[u8]) -> Vec<usize> {
    let mut h = g.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..h.len().saturating_sub(1)).find(|&i| h[i] > h[i + 1]) {
        h.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// All permutations of `0..n` in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}
