//! Smith and Hermite normal forms over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn int_identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect()
}

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "shape mismatch");
            (0..cols)
                .map(|c| {
                    let mut acc = BigInt::zero();
                    for (k, x) in row.iter().enumerate() {
                        acc += x * &b[k][c];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn int_det(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `left * input * right = diag(invariants)` with unimodular transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal entries, `d_i >= 0` and `d_i | d_{i+1}`; length `min(rows, cols)`.
    pub invariants: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let rows = input.len();
    let cols = input.first().map_or(0, Vec::len);
    let mut a = input.clone();
    let mut u = int_identity(rows);
    let mut v = int_identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in 0..cols {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                for j in 0..rows {
                    let s = &q * &u[t][j];
                    u[i][j] -= s;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in 0..rows {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
                for i in 0..cols {
                    let s = &q * &v[i][t];
                    v[i][j] -= s;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in 0..cols {
                        let s = a[i][j].clone();
                        a[t][j] += s;
                    }
                    for j in 0..rows {
                        let s = u[i][j].clone();
                        u[t][j] += s;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for j in 0..cols {
                a[t][j] = -&a[t][j];
            }
            for j in 0..rows {
                u[t][j] = -&u[t][j];
            }
        }
    }

    SmithForm {
        invariants: (0..n).map(|i| a[i][i].clone()).collect(),
        left: u,
        right: v,
    }
}

/// Row-style Hermite normal form of a generating set of a lattice in `Z^m`:
/// pivots positive, entries above each pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteBasis {
    pub ambient: usize,
    pub rows: IntMatrix,
    pub pivot_cols: Vec<usize>,
}

impl HermiteBasis {
    pub fn new(ambient: usize, generators: &[Vec<BigInt>]) -> Self {
        let mut rows: IntMatrix = generators
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        let mut out: IntMatrix = Vec::new();
        let mut pivot_cols = Vec::new();
        for col in 0..ambient {
            // Euclid on the column among remaining rows.
            loop {
                let nonzero: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
                if nonzero.len() <= 1 {
                    break;
                }
                let p = *nonzero
                    .iter()
                    .min_by(|&&x, &&y| rows[x][col].abs().cmp(&rows[y][col].abs()))
                    .unwrap();
                for &r in &nonzero {
                    if r == p {
                        continue;
                    }
                    let q = rows[r][col].div_floor(&rows[p][col]);
                    for j in 0..ambient {
                        let s = &q * &rows[p][j];
                        rows[r][j] -= s;
                    }
                }
            }
            if let Some(p) = (0..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                let mut row = rows.remove(p);
                if row[col].is_negative() {
                    row.iter_mut().for_each(|x| *x = -&*x);
                }
                out.push(row);
                pivot_cols.push(col);
            }
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
        // Reduce above pivots.
        for k in 0..out.len() {
            let c = pivot_cols[k];
            for r in 0..k {
                let q = out[r][c].div_floor(&out[k][c]);
                if !q.is_zero() {
                    for j in 0..ambient {
                        let s = &q * &out[k][j];
                        out[r][j] -= s;
                    }
                }
            }
        }
        HermiteBasis {
            ambient,
            rows: out,
            pivot_cols,
        }
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivot_cols) {
            let q = w[c].div_floor(&row[c]);
            if !q.is_zero() {
                for j in 0..self.ambient {
                    w[j] -= &q * &row[j];
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &[Vec<i64>], expected: &[i64]) {
        let input = int_matrix(m);
        let s = smith_normal_form(&input);
        assert_eq!(s.invariants, big(expected));
        let prod = int_mul(&int_mul(&s.left, &input), &s.right);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j {
                    s.invariants[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*x, want);
            }
        }
        assert_eq!(int_det(&s.left).abs(), BigInt::one());
        assert_eq!(int_det(&s.right).abs(), BigInt::one());
    }

    #[test]
    fn smith_small_cases() {
        check(&[vec![1]], &[1]);
        check(&[vec![0]], &[0]);
        check(&[vec![4, 0], vec![0, 6]], &[2, 12]);
        check(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], &[2, 6, 12]);
        check(&[vec![6]], &[6]);
        check(&[vec![0, 0], vec![0, 3]], &[3, 0]);
    }

    #[test]
    fn hermite_reduction_is_canonical() {
        let h = HermiteBasis::new(2, &[big(&[2, 0]), big(&[0, 3])]);
        assert_eq!(h.reduce(&big(&[5, -1])), big(&[1, 2]));
        assert!(h.contains(&big(&[4, 9])));
        let h = HermiteBasis::new(1, &[big(&[4]), big(&[6])]);
        assert_eq!(h.rows, vec![big(&[2])]);
        let h = HermiteBasis::new(2, &[]);
        assert_eq!(h.reduce(&big(&[7, -3])), big(&[7, -3]));
    }
}
