use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::group::{CosetReducer, GradeGroup, GroupElement, SubgroupSpec};
use crate::scalar::FieldSpec;

use super::{GradedRing, Homogeneous, Support};

/// Degrees carrying a copy of the coefficient algebra.
#[derive(Clone, Debug)]
pub enum TwistedSupport {
    /// A subgroup of finite index (or the trivial subgroup).
    Lattice(SubgroupSpec),
    /// Nonnegative coordinates in `Z^r`: the polynomial ring in `r` variables.
    Polynomial,
}

/// `E[Γ_0] = ⊕_{γ ∈ Γ_0} E·x^γ` with `x^γ x^δ = x^{γ+δ}` and `x^γ` commuting
/// with `E`. Covers Laurent rings `E[x^k, x^-k]` and polynomial rings `E[x]`.
#[derive(Clone, Debug)]
pub struct TwistedGroupAlgebra {
    coeff: Algebra,
    group: GradeGroup,
    support: TwistedSupport,
    reducer: Option<CosetReducer>,
    classes: Vec<GroupElement>,
}

const MAX_CLASSES: usize = 4096;

impl TwistedGroupAlgebra {
    pub fn new(coeff: Algebra, group: GradeGroup, support: TwistedSupport) -> Result<Self> {
        if !group.is_fg_abelian() {
            return Err(Error::Unsupported(
                "twisted group algebras need an abelian group".into(),
            ));
        }
        let (reducer, classes) = match &support {
            TwistedSupport::Lattice(h) => {
                for g in &h.generators {
                    if !group.contains_element(g) {
                        return Err(Error::Structural(format!("support generator {g:?} not in {group}")));
                    }
                }
                if h.generators.iter().all(|g| group.is_identity(g)) {
                    (None, vec![])
                } else {
                    let classes = group.quotient_classes(h, MAX_CLASSES)?;
                    (Some(group.quotient_reducer(h)?), classes)
                }
            }
            TwistedSupport::Polynomial => {
                if let GradeGroup::Abelian { torsion, .. } = &group {
                    if !torsion.is_empty() {
                        return Err(Error::Unsupported("polynomial grading needs a free group".into()));
                    }
                }
                (None, vec![])
            }
        };
        Ok(TwistedGroupAlgebra {
            coeff,
            group,
            support,
            reducer,
            classes,
        })
    }

    /// `E[x^k, x^-k]` graded by `Z`.
    pub fn laurent(coeff: Algebra, step: i64) -> Result<Self> {
        if step < 1 {
            return Err(Error::InvalidInput("Laurent step must be positive".into()));
        }
        let z = GradeGroup::integers();
        let h = SubgroupSpec::new(vec![z.element(&[step])?]);
        TwistedGroupAlgebra::new(coeff, z, TwistedSupport::Lattice(h))
    }

    /// `E[x]` graded by `Z`.
    pub fn polynomial(coeff: Algebra) -> Result<Self> {
        TwistedGroupAlgebra::new(coeff, GradeGroup::integers(), TwistedSupport::Polynomial)
    }

    pub fn coefficients(&self) -> &Algebra {
        &self.coeff
    }

    pub fn support_kind(&self) -> &TwistedSupport {
        &self.support
    }

    pub fn in_support(&self, g: &GroupElement) -> bool {
        match &self.support {
            TwistedSupport::Lattice(_) => match &self.reducer {
                Some(r) => r.contains(g),
                None => self.group.is_identity(g),
            },
            TwistedSupport::Polynomial => g.coords().iter().all(|&c| c >= 0),
        }
    }

    fn monomial(&self, g: &GroupElement) -> String {
        if self.group.is_identity(g) {
            return String::new();
        }
        let c = g.coords();
        if c.len() == 1 {
            if c[0] == 1 {
                "x".into()
            } else {
                format!("x^{}", c[0])
            }
        } else {
            format!("x^{}", self.group.format_element(g))
        }
    }
}

impl GradedRing for TwistedGroupAlgebra {
    fn field(&self) -> FieldSpec {
        self.coeff.field()
    }

    fn group(&self) -> &GradeGroup {
        &self.group
    }

    fn component_dim(&self, degree: &GroupElement) -> usize {
        if self.in_support(degree) {
            self.coeff.dim()
        } else {
            0
        }
    }

    fn component_labels(&self, degree: &GroupElement) -> Vec<String> {
        if !self.in_support(degree) {
            return vec![];
        }
        let m = self.monomial(degree);
        self.coeff
            .labels()
            .iter()
            .map(|l| match (l.as_str(), m.is_empty()) {
                (_, true) => l.clone(),
                ("1", false) => m.clone(),
                (_, false) => format!("{l}{m}"),
            })
            .collect()
    }

    fn mul(&self, a: &Homogeneous, b: &Homogeneous) -> Homogeneous {
        let d = self.group.op(&a.degree, &b.degree);
        if a.coords.is_empty() || b.coords.is_empty() {
            return self.zero_at(&d);
        }
        Homogeneous::new(d, self.coeff.mul(&a.coords, &b.coords))
    }

    fn one(&self) -> Homogeneous {
        Homogeneous::new(self.group.identity(), self.coeff.unit().clone())
    }

    fn support(&self) -> Support {
        match (&self.support, &self.reducer) {
            (TwistedSupport::Lattice(h), Some(r)) => Support::Periodic {
                period: h.generators.clone(),
                classes: self.classes.clone(),
                reducer: r.clone(),
            },
            (TwistedSupport::Lattice(_), None) => Support::Finite(vec![self.group.identity()]),
            (TwistedSupport::Polynomial, _) => {
                let r = self.group.coord_len();
                Support::Monoid {
                    generators: (0..r)
                        .map(|k| {
                            let mut c = vec![0; r];
                            c[k] = 1;
                            GroupElement(c)
                        })
                        .collect(),
                }
            }
        }
    }

    fn period_unit(&self, degree: &GroupElement) -> Option<Homogeneous> {
        match self.support {
            TwistedSupport::Lattice(_) if self.in_support(degree) => {
                Some(Homogeneous::new(degree.clone(), self.coeff.unit().clone()))
            }
            _ => None,
        }
    }

    fn known_units(&self) -> Vec<(Homogeneous, Homogeneous)> {
        match &self.support {
            TwistedSupport::Lattice(h) => h
                .generators
                .iter()
                .map(|g| {
                    let u = self.coeff.unit().clone();
                    (
                        Homogeneous::new(g.clone(), u.clone()),
                        Homogeneous::new(self.group.inverse(g), u),
                    )
                })
                .collect(),
            TwistedSupport::Polynomial => vec![],
        }
    }

    fn name(&self) -> String {
        match &self.support {
            TwistedSupport::Lattice(h) => format!(
                "Laurent ring over a {}-dimensional algebra, support generated by [{}]",
                self.coeff.dim(),
                h.generators
                    .iter()
                    .map(|g| self.group.format_element(g))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            TwistedSupport::Polynomial => format!("polynomial ring over a {}-dimensional algebra", self.coeff.dim()),
        }
    }
}
