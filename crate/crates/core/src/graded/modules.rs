//! Graded modules over a graded division subring, realised inside an ambient
//! graded ring: the module is the span of homogeneous generators under left
//! multiplication by the scalars.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::{Cardinal, GroupElement, SubgroupSpec};
use crate::linalg::Subspace;
use crate::verdict::{Strategy, VerdictReport};

use super::predicates::homogeneous_inverse;
use super::{component_basis, GradedRing, Homogeneous, Support};

#[derive(Clone, Debug)]
pub struct GradedModuleBasis {
    pub basis: Vec<Homogeneous>,
    pub dim: usize,
}

/// Homogeneous scalars grouped by degree, each degree a spanning set.
struct ScalarRing {
    by_degree: BTreeMap<GroupElement, Vec<Homogeneous>>,
}

impl ScalarRing {
    fn new(ring: &dyn GradedRing, scalars: &[Homogeneous]) -> Result<Self> {
        let mut by_degree: BTreeMap<GroupElement, Vec<Homogeneous>> = BTreeMap::new();
        for s in scalars {
            if s.coords.len() != ring.component_dim(&s.degree) {
                return Err(Error::Structural("scalar has the wrong number of coordinates".into()));
            }
            if !s.is_zero() {
                by_degree.entry(s.degree.clone()).or_default().push(s.clone());
            }
        }
        let one = ring.one();
        let e = ring.group().identity();
        let spans_one = by_degree
            .get(&e)
            .map(|v| {
                Subspace::span(ring.field(), one.coords.len(), v.iter().map(|h| h.coords.clone())).contains(&one.coords)
            })
            .unwrap_or(false);
        if !spans_one {
            return Err(Error::Structural("scalars do not contain 1".into()));
        }
        let sr = ScalarRing { by_degree };
        for s in scalars.iter().filter(|s| !s.is_zero()) {
            let inv = homogeneous_inverse(ring, s).ok_or_else(|| {
                Error::Structural(format!(
                    "scalar {} is not invertible; the scalars are not graded division",
                    ring.format_homogeneous(s)
                ))
            })?;
            if !sr.contains(ring, &inv) {
                return Err(Error::Structural(format!(
                    "inverse of scalar {} lies outside the scalar ring",
                    ring.format_homogeneous(s)
                )));
            }
        }
        Ok(sr)
    }

    fn contains(&self, ring: &dyn GradedRing, h: &Homogeneous) -> bool {
        h.is_zero()
            || self.by_degree.get(&h.degree).is_some_and(|v| {
                Subspace::span(ring.field(), h.coords.len(), v.iter().map(|s| s.coords.clone())).contains(&h.coords)
            })
    }

    fn degrees(&self) -> Vec<GroupElement> {
        self.by_degree.keys().cloned().collect()
    }

    /// The degree-`degree` part of the module spanned by `basis`.
    fn span_at(&self, ring: &dyn GradedRing, basis: &[Homogeneous], degree: &GroupElement) -> Subspace {
        let group = ring.group();
        let mut span = Subspace::zero(ring.field(), ring.component_dim(degree));
        for b in basis {
            let need = group.op(degree, &group.inverse(&b.degree));
            for s in self.by_degree.get(&need).into_iter().flatten() {
                span.insert(&ring.mul(s, b).coords);
            }
        }
        span
    }
}

fn extend(
    ring: &dyn GradedRing,
    scalars: &ScalarRing,
    mut basis: Vec<Homogeneous>,
    generators: &[Homogeneous],
) -> Result<Vec<Homogeneous>> {
    for m in generators {
        if m.coords.len() != ring.component_dim(&m.degree) {
            return Err(Error::Structural(
                "generator has the wrong number of coordinates".into(),
            ));
        }
        if m.is_zero() {
            continue;
        }
        if !scalars.span_at(ring, &basis, &m.degree).contains(&m.coords) {
            basis.push(m.clone());
        }
    }
    Ok(basis)
}

/// Homogeneous basis of the module generated by `generators` over the
/// graded division ring spanned by `scalars`. A generator joins the basis
/// when it is not in the span of the earlier basis elements; over a graded
/// division ring that makes the basis linearly independent.
pub fn graded_module_basis(
    ring: &dyn GradedRing,
    scalars: &[Homogeneous],
    generators: &[Homogeneous],
) -> Result<GradedModuleBasis> {
    let sr = ScalarRing::new(ring, scalars)?;
    let basis = extend(ring, &sr, Vec::new(), generators)?;
    let dim = basis.len();
    Ok(GradedModuleBasis { basis, dim })
}

/// Dimension of `M/N` where `N ⊆ M` are generated by the given elements:
/// the number of elements a basis of `N` gains when extended to `M`.
pub fn quotient_dimension(
    ring: &dyn GradedRing,
    scalars: &[Homogeneous],
    sub_generators: &[Homogeneous],
    generators: &[Homogeneous],
) -> Result<usize> {
    let sr = ScalarRing::new(ring, scalars)?;
    let sub = extend(ring, &sr, Vec::new(), sub_generators)?;
    let k = sub.len();
    let all = extend(ring, &sr, sub, generators)?;
    let group = ring.group();
    // N must sit inside M.
    let m_basis = extend(ring, &sr, Vec::new(), generators)?;
    for n in &all[..k] {
        if !sr.span_at(ring, &m_basis, &n.degree).contains(&n.coords) {
            return Err(Error::Precondition(format!(
                "{} (degree {}) is not in the larger module",
                ring.format_homogeneous(n),
                group.format_element(&n.degree)
            )));
        }
    }
    Ok(all.len() - k)
}

fn support_subgroup(ring: &dyn GradedRing) -> Vec<GroupElement> {
    match ring.support() {
        Support::Finite(list) => list,
        Support::Periodic { period, classes, .. } => classes
            .into_iter()
            .filter(|c| ring.component_dim(c) > 0)
            .chain(period)
            .collect(),
        Support::Monoid { generators } => generators,
    }
}

/// `|H : K|` for subgroups generated by the given lists.
fn relative_index(ring: &dyn GradedRing, big: &[GroupElement], small: &[GroupElement]) -> Option<Cardinal> {
    let group = ring.group();
    if group.elements().is_some() {
        let b = group.closure(big).len() as u128;
        let s = group.closure(small).len() as u128;
        return Some(Cardinal::Finite(b / s));
    }
    let ib = group.coset_index(&SubgroupSpec::new(big.to_vec())).ok()?;
    let is = group.coset_index(&SubgroupSpec::new(small.to_vec())).ok()?;
    match (ib, is) {
        (Cardinal::Finite(b), Cardinal::Finite(s)) => Some(Cardinal::Finite(s / b)),
        (Cardinal::Finite(_), Cardinal::Infinite) => Some(Cardinal::Infinite),
        _ => None,
    }
}

/// `[D:F] = [D_e:F_e]·|Γ_D : Γ_F|` for a graded division ring `D` with
/// finite support and a graded subfield `F` spanned by `scalars`.
pub fn dimension_formula_check(ring: &dyn GradedRing, scalars: &[Homogeneous]) -> VerdictReport {
    const NAME: &str = "dimension-formula";
    let degrees = match ring.support() {
        Support::Finite(list) => list,
        _ => {
            return VerdictReport::undecided(NAME, "support is infinite; [D:F] is only computed for finite support");
        }
    };
    let sr = match ScalarRing::new(ring, scalars) {
        Ok(s) => s,
        Err(e) => return VerdictReport::fails(NAME, Strategy::Constructive, e.to_string()),
    };
    let gens: Vec<Homogeneous> = degrees.iter().flat_map(|d| component_basis(ring, d)).collect();
    let total = match extend(ring, &sr, Vec::new(), &gens) {
        Ok(b) => b.len(),
        Err(e) => return VerdictReport::fails(NAME, Strategy::Constructive, e.to_string()),
    };
    let e = ring.group().identity();
    let d0 = ring.component_dim(&e);
    let f0 = sr.span_at(ring, &[ring.one()], &e).dim();
    let residue = d0 / f0;
    let index = relative_index(ring, &support_subgroup(ring), &sr.degrees());
    let detail = format!(
        "[D:F] = {total}, [D_e:F_e] = {d0}/{f0} = {residue}, |Γ_D:Γ_F| = {}",
        index.as_ref().map_or("unknown".into(), |c| c.to_string())
    );
    match index {
        Some(Cardinal::Finite(i)) if d0.is_multiple_of(f0) && total as u128 == residue as u128 * i => {
            VerdictReport::holds(NAME, Strategy::Constructive).with_detail(detail)
        }
        Some(_) => VerdictReport::fails(NAME, Strategy::Constructive, detail),
        None => VerdictReport::undecided(NAME, detail),
    }
}
