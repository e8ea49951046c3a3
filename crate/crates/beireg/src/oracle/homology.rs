//! Reduced simplicial homology over GF(p), computed from sparse boundary
//! matrices of restricted Stanley-Reisner complexes.
//!
//! Faces are bitmasks over at most 64 ring variables. All complexes are
//! augmented (the empty face is a face), so degree -1 homology comes out
//! of the same machinery.

use std::collections::HashMap;

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Column reduction over GF(p) of a sparse matrix given by columns as
/// (row, value) pairs sorted by row, reducing on the largest row index of
/// each column. Returns the pivot rows; the rank is their count.
pub(crate) fn rank_mod_p(columns: Vec<Vec<(usize, u64)>>, p: u64) -> Vec<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut scratch: Vec<(usize, u64)> = Vec::new();
    for mut col in columns {
        while let Some(&(low, low_val)) = col.last() {
            match pivots.get(&low) {
                Some(pivot) => {
                    // col -= factor * pivot, merging the sorted entry lists;
                    // the leading entries cancel exactly.
                    let factor = low_val * inv_mod(pivot.last().unwrap().1, p) % p;
                    scratch.clear();
                    let (mut i, mut j) = (0, 0);
                    while i < col.len() && j < pivot.len() {
                        let (row_c, val_c) = col[i];
                        let (row_p, val_p) = pivot[j];
                        match row_c.cmp(&row_p) {
                            std::cmp::Ordering::Less => {
                                scratch.push((row_c, val_c));
                                i += 1;
                            }
                            std::cmp::Ordering::Greater => {
                                let v = (p - factor * val_p % p) % p;
                                if v != 0 {
                                    scratch.push((row_p, v));
                                }
                                j += 1;
                            }
                            std::cmp::Ordering::Equal => {
                                let v = (val_c + p - factor * val_p % p) % p;
                                if v != 0 {
                                    scratch.push((row_c, v));
                                }
                                i += 1;
                                j += 1;
                            }
                        }
                    }
                    scratch.extend_from_slice(&col[i..]);
                    for &(row_p, val_p) in &pivot[j..] {
                        let v = (p - factor * val_p % p) % p;
                        if v != 0 {
                            scratch.push((row_p, v));
                        }
                    }
                    std::mem::swap(&mut col, &mut scratch);
                }
                None => {
                    pivots.insert(low, col);
                    break;
                }
            }
        }
    }
    pivots.into_keys().collect()
}

fn collect_faces(
    start: usize,
    cur: u64,
    card: usize,
    vars: &[u32],
    gens_with: &[Vec<u64>],
    by_card: &mut Vec<Vec<u64>>,
) {
    if by_card.len() <= card {
        by_card.push(Vec::new());
    }
    by_card[card].push(cur);
    for t in start..vars.len() {
        let next = cur | 1u64 << vars[t];
        // a set is a face iff it contains no generator support
        if gens_with[t].iter().any(|&g| g & !next == 0) {
            continue;
        }
        collect_faces(t + 1, next, card + 1, vars, gens_with, by_card);
    }
}

/// Reduced homology dimensions of the Stanley-Reisner complex of the
/// generators `gens` (bitmasks), restricted to the variable set `u_mask`.
/// Entry `c` of the result is `dim H~_{c-1}`; trailing zeros are trimmed,
/// so an empty vector means every reduced homology group vanishes. At
/// least one generator must fit inside `u_mask`. The Euler characteristic
/// is recomputed from face counts and asserted to match.
pub(crate) fn homology_dims_mask(u_mask: u64, gens: &[u64], p: u64) -> Vec<usize> {
    let vars: Vec<u32> = (0..64).filter(|&b| u_mask >> b & 1 == 1).collect();
    let contained: Vec<u64> = gens.iter().copied().filter(|&g| g & !u_mask == 0).collect();
    assert!(
        !contained.is_empty(),
        "restriction must exclude at least one generator"
    );
    let gens_with: Vec<Vec<u64>> = vars
        .iter()
        .map(|&v| {
            contained
                .iter()
                .copied()
                .filter(|&g| g >> v & 1 == 1)
                .collect()
        })
        .collect();
    let mut by_card: Vec<Vec<u64>> = Vec::new();
    collect_faces(0, 0, 0, &vars, &gens_with, &mut by_card);
    for level in by_card.iter_mut() {
        level.sort_unstable();
    }
    let max_card = by_card.len() - 1;
    let f: Vec<usize> = by_card.iter().map(|faces| faces.len()).collect();
    let mut ranks = vec![0usize; max_card + 2];
    // Work down from the top boundary map. A pivot row of the reduced map
    // at level c + 1 indexes a column of the level-c map that is already a
    // combination of earlier columns (the maps compose to zero), so those
    // columns are skipped: they cannot contribute to the rank.
    let mut cleared: Vec<usize> = Vec::new();
    for c in (1..=max_card).rev() {
        let rows = &by_card[c - 1];
        let mut skip = vec![false; by_card[c].len()];
        for &j in &cleared {
            skip[j] = true;
        }
        let columns: Vec<Vec<(usize, u64)>> = by_card[c]
            .iter()
            .enumerate()
            .filter(|&(j, _)| !skip[j])
            .map(|(_, &face)| {
                let mut col = Vec::with_capacity(c);
                let mut sign_even = true;
                for b in 0..64 {
                    if face >> b & 1 == 1 {
                        let target = face & !(1u64 << b);
                        let row = rows
                            .binary_search(&target)
                            .expect("facet of a face is a face");
                        col.push((row, if sign_even { 1 } else { p - 1 }));
                        sign_even = !sign_even;
                    }
                }
                col.sort_unstable_by_key(|&(row, _)| row);
                col
            })
            .collect();
        let pivots = rank_mod_p(columns, p);
        ranks[c] = pivots.len();
        cleared = pivots;
    }
    let mut dims = Vec::with_capacity(max_card + 1);
    for c in 0..=max_card {
        let d = f[c] as i64 - ranks[c] as i64 - ranks[c + 1] as i64;
        assert!(d >= 0, "homology dimension must be nonnegative");
        dims.push(d as usize);
    }
    let euler_faces: i64 = (0..=max_card)
        .map(|c| {
            if c % 2 == 0 {
                f[c] as i64
            } else {
                -(f[c] as i64)
            }
        })
        .sum();
    let euler_homology: i64 = dims
        .iter()
        .enumerate()
        .map(|(c, &d)| if c % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum();
    assert_eq!(euler_faces, euler_homology, "Euler characteristic mismatch");
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

/// Reduced homology over GF(p) of the complex on `vertices` whose faces
/// are the sets containing no member of `non_faces`. Entry `c` is
/// `dim H~_{c-1}` (so index 0 is degree -1, index 1 is degree 0, and so
/// on); trailing zeros are trimmed. Vertices must lie in `1..=64`.
pub fn reduced_homology_dims(vertices: &[usize], non_faces: &[Vec<usize>], p: u64) -> Vec<usize> {
    let mask = |set: &[usize]| -> u64 {
        let mut m = 0u64;
        for &v in set {
            assert!((1..=64).contains(&v), "vertex {v} out of the 64-bit range");
            m |= 1u64 << (v - 1);
        }
        m
    };
    let u = mask(vertices);
    let gens: Vec<u64> = non_faces.iter().map(|g| mask(g)).collect();
    if gens.iter().all(|&g| g & !u != 0) {
        // no non-face fits inside: the restriction is a full simplex
        return Vec::new();
    }
    homology_dims_mask(u, &gens, p)
}
