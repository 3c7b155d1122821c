//! Reduced characteristic polynomial, reduced trace and norm, and checks
//! relating the reduced trace to additive commutators.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::group::GroupElement;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::verdict::{Strategy, VerdictReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedCharPoly {
    #[serde(skip)]
    pub element: Vector,
    #[serde(serialize_with = "crate::trace::ser_display")]
    pub poly: Poly,
    #[serde(serialize_with = "crate::trace::ser_display")]
    pub trd: Scalar,
    #[serde(serialize_with = "crate::trace::ser_display")]
    pub nrd: Scalar,
}

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Degree `n` of a central algebra of dimension `n²`.
///
/// The center must be the base field. In characteristic 0 a degenerate trace
/// form is rejected, since it exhibits a nonzero radical.
pub fn reduced_degree(a: &Algebra) -> Result<usize> {
    if a.center().dim() != 1 {
        return Err(Error::NotApplicable("the center is larger than the base field".into()));
    }
    let d = a.dim();
    let n = (d as f64).sqrt().round() as usize;
    if n * n != d {
        return Err(Error::NotApplicable(format!("dimension {d} is not a square")));
    }
    if a.field().characteristic() == 0 {
        if let Some(r) = a.trace_form().nullspace().first() {
            return Err(Error::NotApplicable(format!(
                "not simple: {} lies in the radical",
                a.format_element(r)
            )));
        }
    }
    Ok(n)
}

fn char_divides(a: &Algebra, n: usize) -> bool {
    let p = a.field().characteristic();
    p != 0 && (n as u64).is_multiple_of(p)
}

/// The monic `q` of degree `n` with `q^n = charpoly(L_x)`.
///
/// A monic `n`-th root is unique, so any candidate satisfying the identity is
/// the reduced characteristic polynomial. The first candidate is `f^{n/m}` for
/// the minimal polynomial `f` of degree `m | n`; when that fails and the
/// characteristic does not divide `n`, the root is extracted coefficientwise.
pub fn reduced_char_poly(a: &Algebra, x: &[Scalar]) -> Result<ReducedCharPoly> {
    let n = reduced_degree(a)?;
    let f = a.minimal_polynomial(x);
    let m = f.degree().unwrap_or(0);
    let left = a.left_regular_matrix(x).charpoly();
    let from_min = (m > 0 && n % m == 0)
        .then(|| f.pow((n / m) as u32))
        .filter(|q| q.pow(n as u32) == left);
    let q = match from_min {
        Some(q) => q,
        None if !char_divides(a, n) => left.nth_root(n as u32).ok_or_else(|| {
            Error::NotApplicable(format!(
                "{left} has no monic {n}-th root; the algebra is not central simple"
            ))
        })?,
        None if n % m.max(1) != 0 => {
            return Err(Error::NotApplicable(format!(
                "minimal polynomial {f} has degree {m}, which does not divide {n}, and the characteristic divides {n}"
            )))
        }
        None => {
            return Err(Error::NotApplicable(format!(
                "minimal polynomial {f} is reducible and the characteristic divides {n}"
            )))
        }
    };
    let field = a.field();
    let trd = -q.coeff(n - 1);
    let nrd = if n % 2 == 0 { q.coeff(0) } else { -q.coeff(0) };
    if !char_divides(a, n) {
        let via_regular = a.regular_trace(x) * field.from_i64(n as i64).inv().expect("char does not divide n");
        if via_regular != trd {
            return Err(Error::Structural(format!(
                "reduced trace {trd} disagrees with Tr(L)/n = {via_regular}"
            )));
        }
    }
    Ok(ReducedCharPoly {
        element: x.to_vec(),
        poly: q,
        trd,
        nrd,
    })
}

/// `Trd(x)`: from the reduced characteristic polynomial when it applies,
/// otherwise `Tr(L_x)/n` when the characteristic does not divide `n`.
pub fn reduced_trace(a: &Algebra, x: &[Scalar]) -> Result<Scalar> {
    if a.is_commutative() {
        return Err(Error::NotApplicable("commutative: Trd is the identity map".into()));
    }
    match reduced_char_poly(a, x) {
        Ok(r) => Ok(r.trd),
        Err(Error::NotApplicable(why)) => {
            let n = reduced_degree(a)?;
            if char_divides(a, n) {
                return Err(Error::NotApplicable(format!("{why}; the characteristic divides {n}")));
            }
            Ok(a.regular_trace(x) * a.field().from_i64(n as i64).inv().expect("char does not divide n"))
        }
        Err(e) => Err(e),
    }
}

/// `Trd` on the basis, as a row.
pub fn reduced_trace_functional(a: &Algebra) -> Result<Vector> {
    (0..a.dim()).map(|k| reduced_trace(a, &a.basis_vector(k))).collect()
}

pub fn reduced_norm(a: &Algebra, x: &[Scalar]) -> Result<Scalar> {
    Ok(reduced_char_poly(a, x)?.nrd)
}

/// `ker(Trd) = [A,A]` and `dim [A,A] + 1 = dim A`.
pub fn trd_kernel_check(a: &Algebra) -> Result<VerdictReport> {
    const NAME: &str = "trd-kernel";
    let comm = a.commutator_subspace();
    if a.is_commutative() {
        return Ok(VerdictReport::holds(NAME, Strategy::Constructive)
            .with_detail("commutative: Trd is the identity, ker(Trd) = 0 = [A,A]"));
    }
    let row = reduced_trace_functional(a)?;
    let kernel = Subspace::span(a.field(), a.dim(), Matrix::from_rows(a.field(), vec![row]).nullspace());
    let detail = format!(
        "dim ker(Trd) = {}, dim [A,A] = {}, dim A = {}",
        kernel.dim(),
        comm.dim(),
        a.dim()
    );
    if kernel != comm {
        let w = comm
            .basis()
            .iter()
            .find(|v| !kernel.contains(v))
            .map(|v| format!("{} is a commutator combination with nonzero Trd", a.format_element(v)))
            .or_else(|| {
                kernel
                    .basis()
                    .iter()
                    .find(|v| !comm.contains(v))
                    .map(|v| format!("{} has Trd 0 but is not in [A,A]", a.format_element(v)))
            })
            .unwrap_or_default();
        return Ok(VerdictReport::fails(NAME, Strategy::Constructive, w).with_detail(detail));
    }
    if comm.dim() + 1 != a.dim() {
        return Ok(VerdictReport::fails(NAME, Strategy::Constructive, "dim [A,A] + 1 != dim A").with_detail(detail));
    }
    Ok(VerdictReport::holds(NAME, Strategy::Constructive).with_detail(detail))
}

/// `Trd` preserves degrees (the center sits in the identity component) and
/// is onto the base field.
pub fn trd_graded_surjective_check(d: &GradedAlgebra) -> Result<VerdictReport> {
    const NAME: &str = "trd-graded-surjective";
    let a = d.algebra();
    if a.is_commutative() {
        return Ok(VerdictReport::holds(NAME, Strategy::Constructive).with_detail("commutative: Trd is the identity"));
    }
    let row = reduced_trace_functional(a)?;
    let group = d.group();
    let e = group.identity();
    let mut graded = VerdictReport::holds("trd-graded", Strategy::Constructive);
    if let Some(k) = (0..a.dim()).find(|&k| d.degree_of(k) != &e && !row[k].is_zero()) {
        graded = VerdictReport::fails(
            "trd-graded",
            Strategy::Constructive,
            format!(
                "Trd({}) = {} but its degree {} is outside the center's support",
                a.labels()[k],
                row[k],
                group.format_element(d.degree_of(k))
            ),
        );
    }
    let values: Vec<String> = (0..a.dim())
        .map(|k| format!("Trd({}) = {}", a.labels()[k], row[k]))
        .collect();
    let onto = match (0..a.dim()).find(|&k| !row[k].is_zero()) {
        Some(k) => VerdictReport::holds("trd-surjective", Strategy::Constructive).with_detail(format!(
            "Trd({}) = {} spans the base field",
            a.labels()[k],
            row[k]
        )),
        None => VerdictReport::fails(
            "trd-surjective",
            Strategy::Constructive,
            "Trd vanishes on every basis element",
        ),
    };
    Ok(VerdictReport::all_of(NAME, vec![graded, onto]).with_detail(values.join(", ")))
}

/// `Trd(x)·1 - n·x ∈ [A,A]`.
pub fn trd_na_plus_commutator_check(a: &Algebra, x: &[Scalar]) -> Result<VerdictReport> {
    const NAME: &str = "trd-minus-na-in-commutators";
    if a.is_commutative() {
        return Ok(VerdictReport::holds(NAME, Strategy::Constructive).with_detail("commutative: Trd(a) - a = 0"));
    }
    let n = reduced_degree(a)?;
    let t = reduced_trace(a, x)?;
    let field = a.field();
    let nf = field.from_i64(n as i64);
    let diff: Vector = a.scalar(&t).iter().zip(x).map(|(s, v)| s - &(&nf * v)).collect();
    let detail = format!("Trd = {t}, Trd(a)·1 - n·a = {}", a.format_element(&diff));
    Ok(if a.commutator_subspace().contains(&diff) {
        VerdictReport::holds(NAME, Strategy::Constructive).with_detail(detail)
    } else {
        VerdictReport::fails(
            NAME,
            Strategy::Constructive,
            format!("{} is not in [A,A]", a.format_element(&diff)),
        )
        .with_detail(detail)
    })
}

/// Homogeneous spans of commutators of basis elements, by degree.
pub fn commutator_components(d: &GradedAlgebra) -> BTreeMap<GroupElement, Subspace> {
    let a = d.algebra();
    let group = d.group();
    let mut out: BTreeMap<GroupElement, Subspace> = BTreeMap::new();
    for i in 0..a.dim() {
        for j in (i + 1)..a.dim() {
            let c = a.commutator(&a.basis_vector(i), &a.basis_vector(j));
            if c.iter().all(Scalar::is_zero) {
                continue;
            }
            let deg = group.op(d.degree_of(i), d.degree_of(j));
            out.entry(deg)
                .or_insert_with(|| Subspace::zero(a.field(), a.dim()))
                .insert(&c);
        }
    }
    out
}

/// `Supp([D,D])` is a nonempty proper subset avoiding the identity when
/// `D_e = F_e`, and equals `Supp(D)` otherwise.
pub fn commutator_support_check(d: &GradedAlgebra) -> VerdictReport {
    const NAME: &str = "commutator-support";
    let a = d.algebra();
    let group = d.group();
    if a.is_commutative() {
        return VerdictReport::holds(NAME, Strategy::Constructive).with_detail("commutative: [D,D] = 0, nothing to check");
    }
    let e = group.identity();
    let center = d.graded_center();
    if !center.is_graded {
        return VerdictReport::undecided(NAME, "center is not a graded subspace");
    }
    let d0 = d.component_indices(&e).len();
    let f0 = center
        .center
        .basis()
        .iter()
        .filter(|z| d.homogeneous_components(z).keys().all(|g| g == &e))
        .count();
    let totally_ramified = d0 == f0;
    let comm: BTreeSet<GroupElement> = commutator_components(d).into_keys().collect();
    let supp: BTreeSet<GroupElement> = d.support_list().into_iter().collect();
    let fmt = |s: &BTreeSet<GroupElement>| {
        let v: Vec<String> = s.iter().map(|g| group.format_element(g)).collect();
        format!("{{{}}}", v.join(", "))
    };
    let detail = format!(
        "{}; Supp([D,D]) = {}, Supp(D) = {}",
        if totally_ramified {
            "totally ramified"
        } else {
            "not totally ramified"
        },
        fmt(&comm),
        fmt(&supp)
    );
    let ok = if totally_ramified {
        !comm.is_empty() && comm != supp && comm.is_subset(&supp) && !comm.contains(&e)
    } else {
        comm == supp
    };
    if ok {
        VerdictReport::holds(NAME, Strategy::Constructive).with_detail(detail)
    } else {
        VerdictReport::fails(NAME, Strategy::Constructive, detail.clone()).with_detail(detail)
    }
}

/// If every commutator of basis elements is central then `D` is commutative.
pub fn central_commutators_imply_commutative_check(d: &GradedAlgebra) -> VerdictReport {
    const NAME: &str = "central-commutators-commutative";
    let a = d.algebra();
    let center = a.center();
    let mut noncommuting = None;
    for i in 0..a.dim() {
        for j in (i + 1)..a.dim() {
            let c = a.commutator(&a.basis_vector(i), &a.basis_vector(j));
            if c.iter().all(Scalar::is_zero) {
                continue;
            }
            let w = format!("[{},{}] = {}", a.labels()[i], a.labels()[j], a.format_element(&c));
            if !center.contains(&c) {
                return VerdictReport::holds(NAME, Strategy::Constructive)
                    .with_witness(w.clone())
                    .with_detail(format!("hypothesis fails: {w} is not central"));
            }
            noncommuting.get_or_insert(w);
        }
    }
    match noncommuting {
        None => VerdictReport::holds(NAME, Strategy::Constructive).with_detail("commutators vanish; D is commutative"),
        Some(w) => VerdictReport::fails(NAME, Strategy::Constructive, format!("all commutators central but {w}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        field_algebra, matrix_algebra, quaternion, quaternion_algebra, symbol_algebra, trivially_graded_field,
        QuaternionGrading,
    };
    use crate::group::GradeGroup;
    use crate::scalar::FieldSpec;

    fn hamilton() -> Algebra {
        let m1 = FieldSpec::Rationals.from_i64(-1);
        quaternion_algebra(FieldSpec::Rationals, &m1, &m1).unwrap()
    }

    #[test]
    fn quaternion_reduced_polynomials() {
        let h = hamilton();
        let q = FieldSpec::Rationals;
        let i = h.parse_element("i").unwrap();
        let r = reduced_char_poly(&h, &i).unwrap();
        assert_eq!(
            r.poly.to_string(),
            Poly::new(q, vec![q.one(), q.zero(), q.one()]).to_string()
        );
        assert!(r.trd.is_zero() && r.nrd.is_one());
        let r = reduced_char_poly(&h, &h.parse_element("1 + i").unwrap()).unwrap();
        assert_eq!((r.trd.to_i64(), r.nrd.to_i64()), (Some(2), Some(2)));
        let c = h.scalar(&q.from_i64(3));
        let r = reduced_char_poly(&h, &c).unwrap();
        assert_eq!((r.trd.to_i64(), r.nrd.to_i64()), (Some(6), Some(9)));
        assert!(h.eval_poly(&r.poly, &c).iter().all(Scalar::is_zero));
    }

    #[test]
    fn split_elements() {
        let f = FieldSpec::Rationals;
        let m = matrix_algebra(f, 2, &GradeGroup::trivial()).unwrap();
        let e12 = m.algebra().basis_vector(1);
        let r = reduced_char_poly(m.algebra(), &e12).unwrap();
        assert_eq!(r.poly, Poly::monomial(f, f.one(), 2));
        // diag(1,0,0) in M_3: minimal degree 2 does not divide 3.
        let g5 = FieldSpec::prime(5).unwrap();
        let m3 = matrix_algebra(g5, 3, &GradeGroup::trivial()).unwrap();
        let r = reduced_char_poly(m3.algebra(), &m3.algebra().basis_vector(0)).unwrap();
        assert_eq!(r.trd, g5.one());
        assert!(r.nrd.is_zero());
        let g3 = FieldSpec::prime(3).unwrap();
        let m3 = matrix_algebra(g3, 3, &GradeGroup::trivial()).unwrap();
        assert!(matches!(
            reduced_char_poly(m3.algebra(), &m3.algebra().basis_vector(0)),
            Err(Error::NotApplicable(_))
        ));
        assert!(reduced_char_poly(&field_algebra(f), &[f.one()]).is_ok());
    }

    #[test]
    fn kernel_equals_commutators() {
        assert!(trd_kernel_check(&hamilton()).unwrap().is_true());
        let f = FieldSpec::prime(7).unwrap();
        let s = symbol_algebra(f, 3, &f.from_i64(3), &f.from_i64(5), &f.from_i64(2)).unwrap();
        let r = trd_kernel_check(s.algebra()).unwrap();
        assert!(r.is_true(), "{r}");
        assert_eq!(s.algebra().commutator_subspace().dim(), 8);
        let x = s.algebra().parse_element("x").unwrap();
        assert!(trd_na_plus_commutator_check(s.algebra(), &x).unwrap().is_true());
        let k = trivially_graded_field(FieldSpec::Rationals, &GradeGroup::integers());
        assert!(trd_kernel_check(k.algebra()).unwrap().is_true());
    }

    #[test]
    fn graded_trace_and_commutator_support() {
        let m1 = FieldSpec::Rationals.from_i64(-1);
        let h4 = quaternion(FieldSpec::Rationals, &m1, &m1, QuaternionGrading::Z2xZ2).unwrap();
        assert!(trd_graded_surjective_check(&h4).unwrap().is_true());
        let r = commutator_support_check(&h4);
        assert!(r.is_true());
        assert!(
            r.details
                .iter()
                .any(|d| d.contains("totally ramified; Supp([D,D]) = {(0,1), (1,0), (1,1)}")),
            "{r}"
        );
        let h2 = quaternion(FieldSpec::Rationals, &m1, &m1, QuaternionGrading::Z2).unwrap();
        let r = commutator_support_check(&h2);
        assert!(
            r.is_true() && r.details.iter().any(|d| d.contains("not totally ramified")),
            "{r}"
        );
        let c = central_commutators_imply_commutative_check(&h4);
        assert!(c.is_true());
        let w = c.witness.unwrap();
        assert!(w.contains("[i,j] = 2*k"), "{w}");
        let f = FieldSpec::prime(5).unwrap();
        let s = symbol_algebra(f, 2, &f.from_i64(2), &f.from_i64(3), &f.from_i64(4)).unwrap();
        assert!(trd_graded_surjective_check(&s).unwrap().is_true());
        let i = h4.algebra().parse_element("i").unwrap();
        assert!(trd_na_plus_commutator_check(h4.algebra(), &i).unwrap().is_true());
    }
}
