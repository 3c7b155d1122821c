//! Indexable enumerations of vectors over a prime field, integer grids and
//! seeded random samples. Index-based so scans can be split across threads
//! while still reporting the first hit in a fixed order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Vector;
use crate::scalar::FieldSpec;

/// `p^m`, or `None` on overflow.
pub fn all_count(p: u64, m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..m {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// The `idx`-th vector of `GF(p)^m` (base-`p` digits, first coordinate least significant).
pub fn all_point(field: FieldSpec, m: usize, mut idx: u64) -> Vector {
    let p = field.characteristic();
    (0..m)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            field.from_i64(d as i64)
        })
        .collect()
}

/// Number of lines through the origin in `GF(p)^m`.
pub fn projective_count(p: u64, m: usize) -> Option<u64> {
    Some((all_count(p, m)? - 1) / (p - 1))
}

/// The `idx`-th nonzero vector whose first nonzero coordinate is 1.
pub fn projective_point(field: FieldSpec, m: usize, mut idx: u64) -> Vector {
    let p = field.characteristic();
    let mut v = vec![field.zero(); m];
    for lead in 0..m {
        let block = all_count(p, m - lead - 1).expect("checked by projective_count");
        if idx < block {
            v[lead] = field.one();
            let tail = all_point(field, m - lead - 1, idx);
            for (k, x) in tail.into_iter().enumerate() {
                v[lead + 1 + k] = x;
            }
            return v;
        }
        idx -= block;
    }
    panic!("projective index out of range")
}

/// `base^m` grid points with coordinates `0..base`, or `None` on overflow.
pub fn grid_count(base: u64, m: usize) -> Option<u64> {
    all_count(base, m)
}

pub fn grid_point(field: FieldSpec, m: usize, base: u64, mut idx: u64) -> Vector {
    (0..m)
        .map(|_| {
            let d = idx % base;
            idx /= base;
            field.from_i64(d as i64)
        })
        .collect()
}

/// Deterministic nonzero random vectors with small entries.
pub fn sample_vectors(field: FieldSpec, m: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count && m > 0 {
        let v: Vector = (0..m).map(|_| field.random(&mut rng, 5)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_points_are_distinct_lines() {
        let f = FieldSpec::prime(3).unwrap();
        let n = projective_count(3, 3).unwrap();
        assert_eq!(n, 13);
        let pts: std::collections::BTreeSet<String> =
            (0..n).map(|i| format!("{:?}", projective_point(f, 3, i))).collect();
        assert_eq!(pts.len(), 13);
    }

    #[test]
    fn samples_are_reproducible() {
        let f = FieldSpec::Rationals;
        assert_eq!(sample_vectors(f, 3, 5, 9), sample_vectors(f, 3, 5, 9));
    }
}
