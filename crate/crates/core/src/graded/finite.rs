use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::group::{GradeGroup, GroupElement};
use crate::linalg::{is_zero_vector, Matrix, Subspace, Vector};
use crate::scalar::FieldSpec;
use crate::verdict::{Strategy, VerdictReport};

use super::{GradedRing, Homogeneous, Support};

/// A finite-dimensional algebra with a degree on each basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    algebra: Algebra,
    group: GradeGroup,
    degrees: Vec<GroupElement>,
    components: BTreeMap<GroupElement, Vec<usize>>,
    units: Vec<(Vector, Vector)>,
    matrix_units: Option<(usize, Vec<Vector>)>,
}

/// `Z(A)` together with whether it is spanned by homogeneous elements.
#[derive(Clone, Debug)]
pub struct GradedCenter {
    pub center: Subspace,
    pub is_graded: bool,
    /// A central element with a non-central homogeneous component.
    pub witness: Option<Vector>,
}

impl GradedAlgebra {
    /// Builds and validates the grading.
    pub fn new(algebra: Algebra, group: GradeGroup, degrees: Vec<GroupElement>) -> Result<Self> {
        let g = GradedAlgebra::new_unvalidated(algebra, group, degrees)?;
        let report = g.validate_grading();
        if !report.is_true() {
            return Err(Error::InvalidInput(format!(
                "invalid grading: {}",
                report.witness.unwrap_or_default()
            )));
        }
        Ok(g)
    }

    /// Assigns degrees without checking the grading axioms (see [`Self::validate_grading`]).
    pub fn new_unvalidated(algebra: Algebra, group: GradeGroup, degrees: Vec<GroupElement>) -> Result<Self> {
        if degrees.len() != algebra.dim() {
            return Err(Error::InvalidInput(format!(
                "{} degrees for a {}-dimensional algebra",
                degrees.len(),
                algebra.dim()
            )));
        }
        let mut components: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, d) in degrees.iter().enumerate() {
            if !group.contains_element(d) {
                return Err(Error::Structural(format!(
                    "degree {d:?} of `{}` is not an element of {group}",
                    algebra.labels()[i]
                )));
            }
            components.entry(d.clone()).or_default().push(i);
        }
        Ok(GradedAlgebra {
            algebra,
            group,
            degrees,
            components,
            units: Vec::new(),
            matrix_units: None,
        })
    }

    /// Every algebra graded by the trivial degree.
    pub fn trivially_graded(algebra: Algebra, group: GradeGroup) -> Self {
        let degrees = vec![group.identity(); algebra.dim()];
        GradedAlgebra::new(algebra, group, degrees).expect("trivial grading is valid")
    }

    /// Closure `A_g A_h ⊆ A_{gh}` on basis pairs, and `1 ∈ A_e`.
    pub fn validate_grading(&self) -> VerdictReport {
        let a = &self.algebra;
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let expect = self.group.op(&self.degrees[i], &self.degrees[j]);
                for (k, _) in a.basis_product(i, j) {
                    if self.degrees[*k] != expect {
                        let l = a.labels();
                        return VerdictReport::fails(
                            "valid-grading",
                            Strategy::Exhaustive,
                            format!(
                                "{}·{} has a component on {} (degree {} instead of {})",
                                l[i],
                                l[j],
                                l[*k],
                                self.group.format_element(&self.degrees[*k]),
                                self.group.format_element(&expect)
                            ),
                        );
                    }
                }
            }
        }
        let e = self.group.identity();
        if let Some((k, _)) = a
            .unit()
            .iter()
            .enumerate()
            .find(|(k, c)| !c.is_zero() && self.degrees[*k] != e)
        {
            return VerdictReport::fails(
                "valid-grading",
                Strategy::Exhaustive,
                format!("the unit has a component on `{}` of nonzero degree", a.labels()[k]),
            );
        }
        VerdictReport::holds("valid-grading", Strategy::Exhaustive)
            .with_detail(format!("{} basis products checked", n * n))
    }

    /// Attaches homogeneous unit/inverse pairs (full coordinates), checking them.
    pub fn with_units(mut self, pairs: Vec<(Vector, Vector)>) -> Result<Self> {
        for (u, v) in &pairs {
            let hu = self.to_homogeneous(u);
            let hv = self.to_homogeneous(v);
            if hu.is_none() || hv.is_none() {
                return Err(Error::InvalidInput("unit witness is not homogeneous".into()));
            }
            let one = self.algebra.unit();
            if &self.algebra.mul(u, v) != one || &self.algebra.mul(v, u) != one {
                return Err(Error::InvalidInput(format!(
                    "witness {} is not inverse to {}",
                    self.algebra.format_element(v),
                    self.algebra.format_element(u)
                )));
            }
        }
        self.units.extend(pairs);
        Ok(self)
    }

    /// Designates the matrix units `e_ij` (row-major, full coordinates).
    pub fn with_matrix_units(mut self, n: usize, units: Vec<Vector>) -> Result<Self> {
        if units.len() != n * n || n * n != self.algebra.dim() {
            return Err(Error::InvalidInput("need n² matrix units spanning the algebra".into()));
        }
        let a = &self.algebra;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let p = a.mul(&units[i * n + j], &units[k * n + l]);
                        let want = if j == k { units[i * n + l].clone() } else { a.zero() };
                        if p != want {
                            return Err(Error::InvalidInput(format!(
                                "e{}{}·e{}{} violates the matrix-unit relations",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1
                            )));
                        }
                    }
                }
            }
        }
        self.matrix_units = Some((n, units));
        Ok(self)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree_of(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn units(&self) -> &[(Vector, Vector)] {
        &self.units
    }

    pub fn matrix_units(&self) -> Option<(usize, &[Vector])> {
        self.matrix_units.as_ref().map(|(n, u)| (*n, u.as_slice()))
    }

    pub fn component_indices(&self, degree: &GroupElement) -> &[usize] {
        self.components.get(degree).map_or(&[], Vec::as_slice)
    }

    /// Degrees with a nonzero component, in group-element order.
    pub fn support_list(&self) -> Vec<GroupElement> {
        self.components.keys().cloned().collect()
    }

    /// Homogeneous form of a full coordinate vector, if it is homogeneous
    /// (zero is reported in degree `e`).
    pub fn to_homogeneous(&self, x: &[crate::scalar::Scalar]) -> Option<Homogeneous> {
        let comps = self.homogeneous_components(x);
        match comps.len() {
            0 => Some(self.zero_at(&self.group.identity())),
            1 => {
                let (d, _) = comps.into_iter().next().unwrap();
                let coords = self.component_indices(&d).iter().map(|&i| x[i].clone()).collect();
                Some(Homogeneous::new(d, coords))
            }
            _ => None,
        }
    }

    pub fn from_homogeneous(&self, h: &Homogeneous) -> Vector {
        let mut v = self.algebra.zero();
        for (k, &i) in self.component_indices(&h.degree).iter().enumerate() {
            v[i] = h.coords[k].clone();
        }
        v
    }

    /// Nonzero homogeneous components of `x`, as full vectors.
    pub fn homogeneous_components(&self, x: &[crate::scalar::Scalar]) -> BTreeMap<GroupElement, Vector> {
        let mut out = BTreeMap::new();
        for (d, idx) in &self.components {
            let mut v = self.algebra.zero();
            for &i in idx {
                v[i] = x[i].clone();
            }
            if !is_zero_vector(&v) {
                out.insert(d.clone(), v);
            }
        }
        out
    }

    pub fn is_homogeneous(&self, x: &[crate::scalar::Scalar]) -> bool {
        self.homogeneous_components(x).len() <= 1
    }

    pub fn opposite(&self) -> Result<GradedAlgebra> {
        if !self.group.is_abelian() {
            return Err(Error::Unsupported("opposite grading needs an abelian group".into()));
        }
        // Two-sided inverses stay two-sided inverses in the opposite ring.
        GradedAlgebra::new(self.algebra.opposite(), self.group.clone(), self.degrees.clone())?
            .with_units(self.units.clone())
    }

    /// `A ⊗ B` with `deg(a ⊗ b) = deg a + deg b`.
    pub fn tensor(&self, other: &GradedAlgebra) -> Result<GradedAlgebra> {
        if self.group != other.group {
            return Err(Error::Structural("tensor factors graded by different groups".into()));
        }
        if !self.group.is_abelian() {
            return Err(Error::Unsupported(
                "graded tensor products need an abelian group".into(),
            ));
        }
        let alg = self.algebra.tensor(&other.algebra)?;
        let degrees = self
            .degrees
            .iter()
            .flat_map(|a| other.degrees.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.group.op(a, b))
            .collect();
        GradedAlgebra::new(alg, self.group.clone(), degrees)
    }

    /// The center and whether it is a graded subspace. The witness is the
    /// sparsest canonical central basis element with a non-central component.
    pub fn graded_center(&self) -> GradedCenter {
        let center = self.algebra.center();
        let witness = center
            .basis()
            .iter()
            .filter(|z| self.homogeneous_components(z).values().any(|c| !center.contains(c)))
            .min_by_key(|z| z.iter().filter(|c| !c.is_zero()).count())
            .cloned();
        GradedCenter {
            is_graded: witness.is_none(),
            center,
            witness,
        }
    }

    /// Matrix of a linear map from full coordinates (columns = images of basis vectors).
    pub fn linear_map(&self, images: &[Vector], target_dim: usize) -> Matrix {
        Matrix::from_columns(self.algebra.field(), target_dim, images)
    }
}

impl GradedRing for GradedAlgebra {
    fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    fn group(&self) -> &GradeGroup {
        &self.group
    }

    fn component_dim(&self, degree: &GroupElement) -> usize {
        self.component_indices(degree).len()
    }

    fn component_labels(&self, degree: &GroupElement) -> Vec<String> {
        self.component_indices(degree)
            .iter()
            .map(|&i| self.algebra.labels()[i].clone())
            .collect()
    }

    fn mul(&self, a: &Homogeneous, b: &Homogeneous) -> Homogeneous {
        let x = self.from_homogeneous(a);
        let y = self.from_homogeneous(b);
        let p = self.algebra.mul(&x, &y);
        let d = self.group.op(&a.degree, &b.degree);
        let coords = self.component_indices(&d).iter().map(|&i| p[i].clone()).collect();
        Homogeneous::new(d, coords)
    }

    fn one(&self) -> Homogeneous {
        let e = self.group.identity();
        let u = self.algebra.unit();
        Homogeneous::new(
            e.clone(),
            self.component_indices(&e).iter().map(|&i| u[i].clone()).collect(),
        )
    }

    fn support(&self) -> Support {
        Support::Finite(self.support_list())
    }

    fn known_units(&self) -> Vec<(Homogeneous, Homogeneous)> {
        self.units
            .iter()
            .filter_map(|(u, v)| Some((self.to_homogeneous(u)?, self.to_homogeneous(v)?)))
            .collect()
    }

    fn as_finite(&self) -> Option<&GradedAlgebra> {
        Some(self)
    }

    fn name(&self) -> String {
        format!(
            "{}-dimensional {}-graded algebra over {}",
            self.algebra.dim(),
            self.group,
            self.field()
        )
    }
}
