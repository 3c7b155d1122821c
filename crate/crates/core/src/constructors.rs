//! Named example families.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, TwistedGroupAlgebra};
use crate::group::{GradeGroup, GroupElement};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuaternionGrading {
    /// `deg i = (1,0)`, `deg j = (0,1)`, `deg k = (1,1)`.
    Z2xZ2,
    /// `1, i` in degree 0 and `j, k` in degree 1.
    Z2,
    Trivial,
}

impl std::str::FromStr for QuaternionGrading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z2xz2" | "z/2 x z/2" => Ok(QuaternionGrading::Z2xZ2),
            "z2" | "z/2" => Ok(QuaternionGrading::Z2),
            "trivial" => Ok(QuaternionGrading::Trivial),
            other => Err(Error::InvalidInput(format!("unknown quaternion grading `{other}`"))),
        }
    }
}

impl std::fmt::Display for QuaternionGrading {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            QuaternionGrading::Z2xZ2 => "Z2xZ2",
            QuaternionGrading::Z2 => "Z2",
            QuaternionGrading::Trivial => "trivial",
        })
    }
}

fn check_nonzero(c: &Scalar, what: &str) -> Result<()> {
    if c.is_zero() {
        Err(Error::InvalidInput(format!("{what} must be nonzero")))
    } else {
        Ok(())
    }
}

/// Ungraded quaternion algebra `(a, b)` on the basis `1, i, j, k`.
pub fn quaternion_algebra(field: FieldSpec, a: &Scalar, b: &Scalar) -> Result<Algebra> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidInput(
            "quaternion algebras need characteristic ≠ 2".into(),
        ));
    }
    check_nonzero(a, "a")?;
    check_nonzero(b, "b")?;
    let one = field.one();
    let ab = a * b;
    // (left, right, result, coefficient)
    let rules: Vec<(usize, usize, usize, Scalar)> = vec![
        (0, 0, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (0, 2, 2, one.clone()),
        (0, 3, 3, one.clone()),
        (1, 0, 1, one.clone()),
        (2, 0, 2, one.clone()),
        (3, 0, 3, one.clone()),
        (1, 1, 0, a.clone()),
        (2, 2, 0, b.clone()),
        (3, 3, 0, -&ab),
        (1, 2, 3, one.clone()),
        (2, 1, 3, -&one),
        (1, 3, 2, a.clone()),
        (3, 1, 2, -a),
        (2, 3, 1, -b),
        (3, 2, 1, b.clone()),
    ];
    let labels = ["1", "i", "j", "k"].map(String::from).to_vec();
    let mut unit = vec![field.zero(); 4];
    unit[0] = one;
    Algebra::new(field, labels, rules, Some(unit))
}

/// Quaternion algebra with one of its gradings and inverse witnesses for
/// the homogeneous basis.
pub fn quaternion(field: FieldSpec, a: &Scalar, b: &Scalar, grading: QuaternionGrading) -> Result<GradedAlgebra> {
    let alg = quaternion_algebra(field, a, b)?;
    let (group, degs): (GradeGroup, Vec<Vec<i64>>) = match grading {
        QuaternionGrading::Z2xZ2 => (
            GradeGroup::abelian(0, vec![2, 2])?,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
        ),
        QuaternionGrading::Z2 => (GradeGroup::cyclic(2), vec![vec![0], vec![0], vec![1], vec![1]]),
        QuaternionGrading::Trivial => (GradeGroup::trivial(), vec![vec![]; 4]),
    };
    let degrees = degs.iter().map(|d| group.element(d)).collect::<Result<Vec<_>>>()?;
    let basis_inv = [
        field.one(),
        a.inv().expect("nonzero"),
        b.inv().expect("nonzero"),
        (-(a * b)).inv().expect("nonzero"),
    ];
    let units = (1..4)
        .map(|k| {
            let u = alg.basis_vector(k);
            let v = alg.scalar(&basis_inv[k]);
            let v = alg.mul(&v, &u);
            (u, v)
        })
        .collect();
    GradedAlgebra::new(alg, group, degrees)?.with_units(units)
}

/// `¼(1⊗1 + i⊗i/a + j⊗j/b − k⊗k/(ab))` in `A ⊗ A^op` (index `4p + q`).
pub fn quaternion_separability_idempotent(field: FieldSpec, a: &Scalar, b: &Scalar) -> Result<Vector> {
    let four_inv = field
        .from_i64(4)
        .inv()
        .ok_or_else(|| Error::InvalidInput("4 is not invertible".into()))?;
    let mut e = vec![field.zero(); 16];
    e[0] = four_inv.clone();
    e[5] = &four_inv * &a.inv().ok_or_else(|| Error::InvalidInput("a = 0".into()))?;
    e[10] = &four_inv * &b.inv().ok_or_else(|| Error::InvalidInput("b = 0".into()))?;
    e[15] = -(&four_inv * &(a * b).inv().expect("nonzero"));
    Ok(e)
}

fn monomial_label(i: usize, j: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}{e}"),
    };
    let s = format!("{}{}", part("x", i), part("y", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Symbol algebra: `x^n = a`, `y^n = b`, `xy = ξ yx`, graded by `Z/n × Z/n`
/// with `deg x^i y^j = (i, j)`.
pub fn symbol_algebra(field: FieldSpec, n: usize, a: &Scalar, b: &Scalar, xi: &Scalar) -> Result<GradedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    check_nonzero(a, "a")?;
    check_nonzero(b, "b")?;
    if !xi.pow(n as i64).is_one() || (1..n).any(|k| xi.pow(k as i64).is_one()) {
        return Err(Error::InvalidInput(format!(
            "{xi} is not a primitive {n}-th root of unity"
        )));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let labels: Vec<String> = (0..n * n).map(|t| monomial_label(t / n, t % n)).collect();
    // (x^i y^j)(x^k y^l) = ξ^{-jk} x^{i+k} y^{j+l}
    let rule = |s: usize, t: usize| {
        let (i, j, k, l) = (s / n, s % n, t / n, t % n);
        let mut c = xi.pow(-((j * k) as i64));
        if i + k >= n {
            c = &c * a;
        }
        if j + l >= n {
            c = &c * b;
        }
        let mut v = vec![field.zero(); n * n];
        v[idx((i + k) % n, (j + l) % n)] = c;
        v
    };
    let mut unit = vec![field.zero(); n * n];
    unit[0] = field.one();
    let alg = Algebra::from_fn(field, labels, rule, Some(unit))?;
    let group = GradeGroup::abelian(0, vec![n as u64, n as u64])?;
    let degrees = (0..n * n)
        .map(|t| group.element(&[(t / n) as i64, (t % n) as i64]))
        .collect::<Result<Vec<_>>>()?;
    let units = (1..n * n)
        .map(|t| {
            let (i, j) = (t / n, t % n);
            // (x^i y^j)^{-1} = ξ^{-ij} x^{n-i} y^{n-j} / (x^n y^n) with x^n = a, y^n = b
            let mut v = vec![field.zero(); n * n];
            let mut c = xi.pow(-((i * j) as i64));
            if i > 0 {
                c = &c * &a.inv().expect("nonzero");
            }
            if j > 0 {
                c = &c * &b.inv().expect("nonzero");
            }
            v[idx((n - i) % n, (n - j) % n)] = c;
            (alg.basis_vector(t), v)
        })
        .collect();
    GradedAlgebra::new(alg, group, degrees)?.with_units(units)
}

/// The group algebra `K[G]` graded by `G`.
pub fn group_ring(field: FieldSpec, group: &GradeGroup) -> Result<GradedAlgebra> {
    let elements = group
        .elements()
        .ok_or_else(|| Error::Unsupported("group rings need a finite group".into()))?;
    let labels: Vec<String> = elements
        .iter()
        .map(|g| match group {
            GradeGroup::Table(_) => group.format_element(g),
            GradeGroup::Abelian { .. } => format!("g{}", group.format_element(g)),
        })
        .collect();
    let n = elements.len();
    let pos = |g: &GroupElement| elements.iter().position(|x| x == g).expect("closed");
    let e = pos(&group.identity());
    let alg = Algebra::from_fn(
        field,
        labels,
        |i, j| {
            let mut v = vec![field.zero(); n];
            v[pos(&group.op(&elements[i], &elements[j]))] = field.one();
            v
        },
        Some(
            (0..n)
                .map(|k| if k == e { field.one() } else { field.zero() })
                .collect(),
        ),
    )?;
    let units = (0..n)
        .filter(|&k| k != e)
        .map(|k| (alg.basis_vector(k), alg.basis_vector(pos(&group.inverse(&elements[k])))))
        .collect();
    GradedAlgebra::new(alg, group.clone(), elements)?.with_units(units)
}

/// `M_n(K)` on matrix units `e11, e12, …`, trivially graded by `group`,
/// with the matrix units designated.
pub fn matrix_algebra(field: FieldSpec, n: usize, group: &GradeGroup) -> Result<GradedAlgebra> {
    graded_matrix_units(field, n, group, &vec![group.identity(); n])
}

/// `M_n(K)` on matrix units with `deg e_ij = -γ_i + γ_j`.
pub fn graded_matrix_units(
    field: FieldSpec,
    n: usize,
    group: &GradeGroup,
    gammas: &[GroupElement],
) -> Result<GradedAlgebra> {
    if n == 0 || gammas.len() != n {
        return Err(Error::InvalidInput("need n ≥ 1 and one degree per row".into()));
    }
    let labels: Vec<String> = (0..n * n)
        .map(|t| {
            if n < 10 {
                format!("e{}{}", t / n + 1, t % n + 1)
            } else {
                format!("e{}_{}", t / n + 1, t % n + 1)
            }
        })
        .collect();
    let alg = Algebra::from_fn(
        field,
        labels,
        |s, t| {
            let mut v = vec![field.zero(); n * n];
            if s % n == t / n {
                v[(s / n) * n + t % n] = field.one();
            }
            v
        },
        Some(
            (0..n * n)
                .map(|t| if t / n == t % n { field.one() } else { field.zero() })
                .collect(),
        ),
    )?;
    let degrees = (0..n * n)
        .map(|t| group.op(&group.inverse(&gammas[t / n]), &gammas[t % n]))
        .collect();
    let units = (0..n * n).map(|t| alg.basis_vector(t)).collect();
    GradedAlgebra::new(alg, group.clone(), degrees)?.with_matrix_units(n, units)
}

/// `M_n(K)` on an arbitrary homogeneous basis of matrices. The standard
/// matrix units are designated in that basis.
pub fn graded_matrix_algebra(
    field: FieldSpec,
    group: &GradeGroup,
    basis: Vec<(String, Matrix, GroupElement)>,
) -> Result<GradedAlgebra> {
    let dim = basis.len();
    let n = (1..=dim).find(|k| k * k >= dim).unwrap_or(0);
    if n * n != dim || basis.iter().any(|(_, m, _)| m.nrows() != n || m.ncols() != n) {
        return Err(Error::InvalidInput("need n² matrices of size n×n".into()));
    }
    let flat = |m: &Matrix| -> Vector { (0..n * n).map(|t| m.get(t / n, t % n).clone()).collect() };
    let cols: Vec<Vector> = basis.iter().map(|(_, m, _)| flat(m)).collect();
    let change = Matrix::from_columns(field, n * n, &cols);
    if Subspace::span(field, n * n, cols.clone()).dim() != dim {
        return Err(Error::InvalidInput("matrices are linearly dependent".into()));
    }
    let coords = |m: &Matrix| change.solve(&flat(m)).expect("basis spans");
    let alg = Algebra::from_fn(
        field,
        basis.iter().map(|(l, _, _)| l.clone()).collect(),
        |i, j| coords(&basis[i].1.mul(&basis[j].1)),
        Some(coords(&Matrix::identity(field, n))),
    )?;
    let units = (0..n * n)
        .map(|t| {
            let mut e = Matrix::zeros(field, n, n);
            e.set(t / n, t % n, field.one());
            coords(&e)
        })
        .collect();
    let degrees = basis.into_iter().map(|(_, _, d)| d).collect();
    GradedAlgebra::new(alg, group.clone(), degrees)?.with_matrix_units(n, units)
}

fn int_matrix(field: FieldSpec, rows: &[[i64; 2]; 2]) -> Matrix {
    Matrix::from_rows(
        field,
        rows.iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect(),
    )
}

/// The `Z/2`-grading of `M_2(K)` with diagonal matrices in degree 0 and
/// anti-diagonal ones in degree 1.
pub fn checkerboard_grading(field: FieldSpec) -> Result<GradedAlgebra> {
    let z2 = GradeGroup::cyclic(2);
    graded_matrix_units(field, 2, &z2, &[z2.element(&[0])?, z2.element(&[1])?])
}

/// A `Z/2`-grading of `M_2(K)` in which `e11` is not homogeneous.
pub fn skew_grading(field: FieldSpec) -> Result<GradedAlgebra> {
    let z2 = GradeGroup::cyclic(2);
    let (g0, g1) = (z2.element(&[0])?, z2.element(&[1])?);
    graded_matrix_algebra(
        field,
        &z2,
        vec![
            ("s1".into(), int_matrix(field, &[[1, -1], [0, 0]]), g0.clone()),
            ("s2".into(), int_matrix(field, &[[0, 1], [0, 1]]), g0),
            ("s3".into(), int_matrix(field, &[[0, 1], [0, 0]]), g1.clone()),
            ("s4".into(), int_matrix(field, &[[1, 0], [1, -1]]), g1),
        ],
    )
}

/// Matrix (columns in the skew basis) of `X ↦ P X P⁻¹`, `P = [[1,1],[0,1]]`,
/// from the checkerboard grading to the skew grading.
pub fn checkerboard_to_skew(field: FieldSpec) -> Result<Matrix> {
    let target = skew_grading(field)?;
    let p = int_matrix(field, &[[1, 1], [0, 1]]);
    let pinv = int_matrix(field, &[[1, -1], [0, 1]]);
    let (_, units) = target.matrix_units().expect("designated");
    // P e_ij P⁻¹ expressed through the skew basis: combine the images of matrix units.
    let mut cols = Vec::new();
    for t in 0..4 {
        let mut e = Matrix::zeros(field, 2, 2);
        e.set(t / 2, t % 2, field.one());
        let img = p.mul(&e).mul(&pinv);
        let mut v = vec![field.zero(); 4];
        for s in 0..4 {
            let c = img.get(s / 2, s % 2);
            if !c.is_zero() {
                crate::linalg::axpy(&mut v, c, &units[s]);
            }
        }
        cols.push(v);
    }
    Ok(Matrix::from_columns(field, 4, &cols))
}

/// `K^r` with orthogonal idempotents `f1, …, fr`, trivially graded.
pub fn diagonal_algebra(field: FieldSpec, r: usize) -> Result<Algebra> {
    Algebra::from_fn(
        field,
        (1..=r).map(|k| format!("f{k}")).collect(),
        |i, j| {
            let mut v = vec![field.zero(); r];
            if i == j {
                v[i] = field.one();
            }
            v
        },
        Some(vec![field.one(); r]),
    )
}

/// The one-dimensional algebra `K`.
pub fn field_algebra(field: FieldSpec) -> Algebra {
    Algebra::new(
        field,
        vec!["1".into()],
        [(0, 0, 0, field.one())],
        Some(vec![field.one()]),
    )
    .expect("K is an algebra")
}

/// `K` concentrated in degree `e` of `group`.
pub fn trivially_graded_field(field: FieldSpec, group: &GradeGroup) -> GradedAlgebra {
    GradedAlgebra::trivially_graded(field_algebra(field), group.clone())
}

/// `E[x^k, x^-k]` graded by `Z`.
pub fn laurent(coeff: Algebra, step: i64) -> Result<TwistedGroupAlgebra> {
    TwistedGroupAlgebra::laurent(coeff, step)
}

/// `E[x]` graded by `Z`.
pub fn polynomial(coeff: Algebra) -> Result<TwistedGroupAlgebra> {
    TwistedGroupAlgebra::polynomial(coeff)
}
