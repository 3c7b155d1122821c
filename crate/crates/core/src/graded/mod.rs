//! Group-graded algebras. Every ring is presented on a homogeneous basis, so
//! a component is a coordinate space and a homogeneous element is a degree
//! plus coordinates in that component's basis.

mod finite;
mod modules;
mod predicates;
mod twisted;

use std::fmt;

pub use finite::{GradedAlgebra, GradedCenter};
pub use modules::{dimension_formula_check, graded_module_basis, quotient_dimension, GradedModuleBasis};
pub use predicates::{
    component_basis, crossed_product_witness, graded_azumaya_csa, homogeneous_center, homogeneous_inverse,
    identity_component, is_crossed_product, is_graded_division, is_graded_simple, is_strongly_graded, specialize,
    strong_grading_certificate, StrongCertificate,
};
pub use twisted::{TwistedGroupAlgebra, TwistedSupport};

use crate::group::{CosetReducer, GradeGroup, GroupElement};
use crate::linalg::{axpy, Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub degree: GroupElement,
    /// Coordinates in the basis of the component of this degree.
    pub coords: Vector,
}

impl Homogeneous {
    pub fn new(degree: GroupElement, coords: Vector) -> Self {
        Homogeneous { degree, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Homogeneous {
        Homogeneous::new(self.degree.clone(), self.coords.iter().map(|x| x * c).collect())
    }
}

/// Where the nonzero components live.
#[derive(Clone, Debug)]
pub enum Support {
    /// Exactly these degrees carry nonzero components.
    Finite(Vec<GroupElement>),
    /// Every degree is `c + p` with `c` one of `classes` (canonical coset
    /// representatives, some possibly with zero component) and `p` in the
    /// subgroup generated by `period`; each period degree carries a central
    /// homogeneous unit, so `R_{c+p} = R_c · u_p`.
    Periodic {
        period: Vec<GroupElement>,
        classes: Vec<GroupElement>,
        reducer: CosetReducer,
    },
    /// The free commutative monoid on `generators` (polynomial rings).
    Monoid { generators: Vec<GroupElement> },
}

impl Support {
    /// Degrees whose components generate the ring and, for `Finite` and
    /// `Periodic`, represent every component up to a central unit.
    pub fn relevant_degrees(&self, group: &GradeGroup) -> Vec<GroupElement> {
        match self {
            Support::Finite(list) => list.clone(),
            Support::Periodic { classes, .. } => classes.clone(),
            Support::Monoid { generators } => {
                let mut v = vec![group.identity()];
                v.extend(generators.iter().cloned());
                v
            }
        }
    }

    /// Whether `relevant_degrees` covers every component up to central units.
    pub fn is_complete(&self) -> bool {
        !matches!(self, Support::Monoid { .. })
    }
}

/// Which subgroup a "for every degree" predicate quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Scope {
    /// The whole grade group.
    #[default]
    Group,
    /// The subgroup generated by the support.
    Support,
}

/// A graded ring whose components are finite-dimensional over the base field.
pub trait GradedRing: Send + Sync + fmt::Debug {
    fn field(&self) -> FieldSpec;
    fn group(&self) -> &GradeGroup;
    fn component_dim(&self, degree: &GroupElement) -> usize;
    fn component_labels(&self, degree: &GroupElement) -> Vec<String>;
    /// Product of homogeneous elements; the result has degree `a.degree · b.degree`.
    fn mul(&self, a: &Homogeneous, b: &Homogeneous) -> Homogeneous;
    fn one(&self) -> Homogeneous;
    fn support(&self) -> Support;
    /// Central homogeneous unit of a period degree, with `u_p u_{-p} = 1`.
    fn period_unit(&self, _degree: &GroupElement) -> Option<Homogeneous> {
        None
    }
    /// Known invertible homogeneous elements with their inverses.
    fn known_units(&self) -> Vec<(Homogeneous, Homogeneous)> {
        Vec::new()
    }
    fn as_finite(&self) -> Option<&GradedAlgebra> {
        None
    }
    fn name(&self) -> String;

    fn zero_at(&self, degree: &GroupElement) -> Homogeneous {
        Homogeneous::new(degree.clone(), vec![self.field().zero(); self.component_dim(degree)])
    }

    fn basis_element(&self, degree: &GroupElement, k: usize) -> Homogeneous {
        let mut h = self.zero_at(degree);
        h.coords[k] = self.field().one();
        h
    }

    fn format_homogeneous(&self, h: &Homogeneous) -> String {
        let labels = self.component_labels(&h.degree);
        let mut parts = Vec::new();
        for (c, l) in h.coords.iter().zip(&labels) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(l.clone());
            } else {
                parts.push(format!("{c}*{l}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Products of basis elements of two fixed components, for fast bilinear
/// evaluation inside scans.
#[derive(Clone, Debug)]
pub(crate) struct ProductTable {
    field: FieldSpec,
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    entries: Vec<Vector>,
}

impl ProductTable {
    pub(crate) fn new(ring: &dyn GradedRing, left: &GroupElement, right: &GroupElement) -> Self {
        let ld = ring.component_dim(left);
        let rd = ring.component_dim(right);
        let out = ring.group().op(left, right);
        let od = ring.component_dim(&out);
        let mut entries = Vec::with_capacity(ld * rd);
        for s in 0..ld {
            let x = ring.basis_element(left, s);
            for t in 0..rd {
                entries.push(ring.mul(&x, &ring.basis_element(right, t)).coords);
            }
        }
        ProductTable {
            field: ring.field(),
            left_dim: ld,
            right_dim: rd,
            out_dim: od,
            entries,
        }
    }

    pub(crate) fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.out_dim];
        for (s, xs) in x.iter().enumerate() {
            if xs.is_zero() {
                continue;
            }
            for (t, yt) in y.iter().enumerate() {
                if yt.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xs * yt), &self.entries[s * self.right_dim + t]);
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub(crate) fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.right_dim)
            .map(|t| {
                let mut out = vec![self.field.zero(); self.out_dim];
                for (s, xs) in x.iter().enumerate() {
                    if !xs.is_zero() {
                        axpy(&mut out, xs, &self.entries[s * self.right_dim + t]);
                    }
                }
                out
            })
            .collect();
        Matrix::from_columns(self.field, self.out_dim, &cols)
    }

    /// Matrix of `x ↦ x·y`.
    pub(crate) fn right_matrix(&self, y: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.left_dim)
            .map(|s| {
                let mut out = vec![self.field.zero(); self.out_dim];
                for (t, yt) in y.iter().enumerate() {
                    if !yt.is_zero() {
                        axpy(&mut out, yt, &self.entries[s * self.right_dim + t]);
                    }
                }
                out
            })
            .collect();
        Matrix::from_columns(self.field, self.out_dim, &cols)
    }
}
