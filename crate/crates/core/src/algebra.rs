//! Finite-dimensional unital algebras given by structure constants.

use std::fmt;

use rayon::prelude::*;

use crate::enumerate::{all_count, projective_count, projective_point, sample_vectors};
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, is_zero_vector, scale_vector, sub_vectors, unit_vector, zero_vector, Matrix, Subspace, Vector,
};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};
use crate::verdict::{SearchConfig, Strategy, VerdictReport};

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored sparsely per basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Vector,
}

impl Algebra {
    /// Builds and validates an algebra from `(i, j, k, c)` quadruples.
    /// Repeated quadruples for the same `(i, j, k)` are summed. When `unit`
    /// is `None` it is solved for.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<Vector>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("algebra must have a nonempty basis".into()));
        }
        let mut dense = vec![zero_vector(field, n); n * n];
        for (i, j, k, c) in products {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidInput(format!("product index ({i},{j},{k}) out of range")));
            }
            if c.field() != field {
                return Err(Error::InvalidInput("structure constant from another field".into()));
            }
            dense[i * n + j][k] += &c;
        }
        Algebra::from_dense(field, labels, dense, unit)
    }

    /// Builds from a product rule on basis indices.
    pub fn from_fn(
        field: FieldSpec,
        labels: Vec<String>,
        rule: impl Fn(usize, usize) -> Vector,
        unit: Option<Vector>,
    ) -> Result<Self> {
        let n = labels.len();
        let dense = (0..n * n).map(|ij| rule(ij / n, ij % n)).collect();
        Algebra::from_dense(field, labels, dense, unit)
    }

    fn from_dense(field: FieldSpec, labels: Vec<String>, dense: Vec<Vector>, unit: Option<Vector>) -> Result<Self> {
        let n = labels.len();
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) || !seen.insert(l) {
                return Err(Error::InvalidInput(format!("bad or duplicate basis label `{l}`")));
            }
        }
        let table = dense
            .into_iter()
            .map(|v| {
                assert_eq!(v.len(), n, "product vector length");
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let mut alg = Algebra {
            field,
            labels,
            table,
            unit: zero_vector(field, n),
        };
        alg.check_associativity()?;
        alg.unit = match unit {
            Some(u) => {
                if u.len() != n {
                    return Err(Error::InvalidInput("unit has wrong length".into()));
                }
                u
            }
            None => alg.solve_unit()?,
        };
        alg.check_unit()?;
        Ok(alg)
    }

    pub fn check_associativity(&self) -> Result<()> {
        let n = self.dim();
        let bad = (0..n * n * n).into_par_iter().find_first(|&t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            let ei = unit_vector(self.field, n, i);
            let ej = unit_vector(self.field, n, j);
            let ek = unit_vector(self.field, n, k);
            self.mul(&self.mul(&ei, &ej), &ek) != self.mul(&ei, &self.mul(&ej, &ek))
        });
        match bad {
            None => Ok(()),
            Some(t) => Err(Error::InvalidInput(format!(
                "not associative: ({0}{1}){2} != {0}({1}{2})",
                self.labels[t / (n * n)],
                self.labels[(t / n) % n],
                self.labels[t % n]
            ))),
        }
    }

    fn solve_unit(&self) -> Result<Vector> {
        let n = self.dim();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                // left: Σ_i u_i c[i][j][k] = δ_jk ; right: Σ_i u_i c[j][i][k] = δ_jk
                let left: Vector = (0..n).map(|i| self.coeff(i, j, k)).collect();
                let right: Vector = (0..n).map(|i| self.coeff(j, i, k)).collect();
                let target = if j == k { self.field.one() } else { self.field.zero() };
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        Matrix::from_rows(self.field, rows)
            .solve(&rhs)
            .ok_or_else(|| Error::InvalidInput("algebra has no two-sided unit".into()))
    }

    fn check_unit(&self) -> Result<()> {
        for j in 0..self.dim() {
            let e = self.basis_vector(j);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::InvalidInput(format!(
                    "unit axiom fails on basis element `{}`",
                    self.labels[j]
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim(), i)
    }

    pub fn scalar(&self, c: &Scalar) -> Vector {
        scale_vector(c, &self.unit)
    }

    /// Sparse product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero structure constants in index order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for ij in 0..n * n {
            for (k, c) in &self.table[ij] {
                out.push((ij / n, ij % n, *k, c.clone()));
            }
        }
        out
    }

    /// Validates that `coords` is an element of this algebra.
    pub fn element(&self, coords: Vector) -> Result<Vector> {
        if coords.len() != self.dim() || coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::Structural(format!(
                "element of length {} does not belong to a {}-dimensional algebra over {}",
                coords.len(),
                self.dim(),
                self.field
            )));
        }
        Ok(coords)
    }

    pub fn try_mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.element(x.to_vec())?;
        self.element(y.to_vec())?;
        Ok(self.mul(x, y))
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        debug_assert!(x.len() == n && y.len() == n);
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.table[i * n + j] {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        sub_vectors(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn pow(&self, x: &[Scalar], e: u32) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Column `j` holds the coordinates of `x · e_j`.
    pub fn left_regular_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Column `j` holds the coordinates of `e_j · x`.
    pub fn right_regular_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Trace of left multiplication.
    pub fn regular_trace(&self, x: &[Scalar]) -> Scalar {
        self.left_regular_matrix(x).trace()
    }

    pub fn try_invert(&self, x: &[Scalar]) -> Option<Vector> {
        let y = self.left_regular_matrix(x).solve(&self.unit)?;
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            let e = self.basis_vector(i);
            let m = self.right_regular_matrix(&e);
            let l = self.left_regular_matrix(&e);
            // x ↦ x e_i − e_i x ; row r of (R − L)
            for r in 0..n {
                rows.push((0..n).map(|c| m.get(r, c) - l.get(r, c)).collect());
            }
        }
        Subspace::span(self.field, n, Matrix::from_rows(self.field, rows).nullspace())
    }

    /// Whether `x` commutes with every basis element.
    pub fn is_central(&self, x: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| is_zero_vector(&self.commutator(x, &self.basis_vector(i))))
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut space = Subspace::zero(self.field, n);
        let mut queue: Vec<Vector> = Vec::new();
        for g in gens {
            if space.insert(g) {
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            if space.is_full() {
                break;
            }
            for i in 0..n {
                let e = self.basis_vector(i);
                for w in [self.mul(&e, &v), self.mul(&v, &e)] {
                    if space.insert(&w) {
                        queue.push(w);
                    }
                }
            }
        }
        space
    }

    pub fn generates_whole_algebra(&self, x: &[Scalar]) -> bool {
        self.ideal_closure(&[x.to_vec()]).is_full()
    }

    /// Additive span of all commutators.
    pub fn commutator_subspace(&self) -> Subspace {
        let n = self.dim();
        let mut s = Subspace::zero(self.field, n);
        for i in 0..n {
            for j in i + 1..n {
                s.insert(&self.commutator(&self.basis_vector(i), &self.basis_vector(j)));
            }
        }
        s
    }

    pub fn minimal_polynomial(&self, x: &[Scalar]) -> Poly {
        let mut powers = vec![self.unit.clone()];
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            let m = Matrix::from_columns(self.field, self.dim(), &powers);
            if let Some(c) = m.solve(&next) {
                let mut coeffs: Vec<Scalar> = c.iter().map(|a| -a).collect();
                coeffs.push(self.field.one());
                return Poly::new(self.field, coeffs);
            }
            powers.push(next);
        }
    }

    pub fn eval_poly(&self, p: &Poly, x: &[Scalar]) -> Vector {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            axpy(&mut acc, c, &self.unit);
        }
        acc
    }

    /// Gram matrix of `(x, y) ↦ Tr(L_{xy})` on the basis.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let traces: Vec<Scalar> = (0..n).map(|k| self.regular_trace(&self.basis_vector(k))).collect();
        let mut m = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.field.zero();
                for (k, c) in self.basis_product(i, j) {
                    acc += &(c * &traces[*k]);
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    /// `(A^op)`: structure constants transposed in the first two indices.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let table = (0..n * n).map(|ij| self.table[(ij % n) * n + ij / n].clone()).collect();
        Algebra {
            field: self.field,
            labels: self.labels.clone(),
            table,
            unit: self.unit.clone(),
        }
    }

    /// `A ⊗ B` on the product basis `a_i ⊗ b_j` (index `i * dim B + j`).
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::Structural("tensor factors over different fields".into()));
        }
        let (n, m) = (self.dim(), other.dim());
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let mut table = vec![Vec::new(); n * m * n * m];
        for i1 in 0..n {
            for j1 in 0..m {
                for i2 in 0..n {
                    for j2 in 0..m {
                        let mut entry = Vec::new();
                        for (ka, ca) in self.basis_product(i1, i2) {
                            for (kb, cb) in other.basis_product(j1, j2) {
                                entry.push((ka * m + kb, ca * cb));
                            }
                        }
                        entry.sort_by_key(|(k, _)| *k);
                        table[(i1 * m + j1) * (n * m) + i2 * m + j2] = entry;
                    }
                }
            }
        }
        let mut unit = zero_vector(self.field, n * m);
        for (i, a) in self.unit.iter().enumerate() {
            for (j, b) in other.unit.iter().enumerate() {
                unit[i * m + j] = a * b;
            }
        }
        Ok(Algebra {
            field: self.field,
            labels,
            table,
            unit,
        })
    }

    /// Structure constants of the subalgebra spanned by `basis` (which must
    /// be closed under products and contain 1), in that basis.
    pub fn subalgebra(&self, basis: &[Vector], labels: Vec<String>) -> Result<Algebra> {
        let space = Subspace::span(self.field, self.dim(), basis.to_vec());
        if space.dim() != basis.len() {
            return Err(Error::InvalidInput("subalgebra basis is linearly dependent".into()));
        }
        let coords_in = |v: &Vector| -> Result<Vector> {
            Matrix::from_columns(self.field, self.dim(), basis)
                .solve(v)
                .ok_or_else(|| Error::InvalidInput("subspace is not closed under multiplication".into()))
        };
        let unit = coords_in(&self.unit)?;
        let mut dense = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                dense.push(coords_in(&self.mul(a, b))?);
            }
        }
        Algebra::from_dense(self.field, labels, dense, Some(unit))
    }

    /// Renders an element as `2*i - j + 1/2*k`.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let mut out = String::new();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.as_rational() {
                Some(r) if r < &num_rational::BigRational::from_integer(0.into()) => (true, -c),
                _ => (false, c.clone()),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&self.labels[k]);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    /// Parses `"2*i - j + 3"`. A token equal to a basis label is that basis
    /// element; a bare number is a multiple of 1.
    pub fn parse_element(&self, text: &str) -> Result<Vector> {
        let mut out = self.zero();
        let cleaned = text.replace(' ', "");
        if cleaned.is_empty() {
            return Err(Error::InvalidInput("empty element".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (pos, ch) in cleaned.chars().enumerate() {
            // A sign right after `*`, `/` or `^` belongs to a coefficient or an exponent.
            if (ch == '+' || ch == '-') && pos > 0 && !cur.ends_with(['*', '/', '^']) {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-self.field.one(), b.to_string()),
                None => (self.field.one(), term.trim_start_matches('+').to_string()),
            };
            let (coef, label) = match body.rsplit_once('*') {
                Some((c, l)) => (self.field.parse_scalar(c)?, l.to_string()),
                None => (self.field.one(), body.clone()),
            };
            let coef = sign * coef;
            match self.index_of(&label) {
                Some(k) => out[k] += &coef,
                None => {
                    let c = self
                        .field
                        .parse_scalar(&label)
                        .map_err(|_| Error::InvalidInput(format!("unknown basis label `{label}`")))?;
                    axpy(&mut out, &(coef * c), &self.unit);
                }
            }
        }
        Ok(out)
    }

    /// Central and simple, with a witness for whichever part fails.
    pub fn is_central_simple(&self, cfg: &SearchConfig) -> VerdictReport {
        let center = self.center();
        let central = if center.dim() == 1 {
            VerdictReport::holds("central", Strategy::Constructive).with_detail("dim Z(A) = 1")
        } else {
            let w = center
                .basis()
                .iter()
                .find(|v| Subspace::span(self.field, self.dim(), vec![self.unit.clone(), (*v).clone()]).dim() == 2)
                .cloned()
                .unwrap_or_else(|| self.unit.clone());
            VerdictReport::fails("central", Strategy::Constructive, self.format_element(&w))
                .with_detail(format!("dim Z(A) = {}", center.dim()))
        };
        let simple = self.simplicity(cfg, center.dim() == 1);
        VerdictReport::all_of("central-simple", vec![central, simple])
    }

    fn proper_ideal_witness(&self, x: &[Scalar]) -> Option<VerdictReport> {
        let ideal = self.ideal_closure(&[x.to_vec()]);
        (!ideal.is_zero() && !ideal.is_full()).then(|| {
            VerdictReport::fails("simple", Strategy::Constructive, self.format_element(x))
                .with_detail(format!("generates a proper ideal of dimension {}", ideal.dim()))
        })
    }

    /// No proper nonzero two-sided ideal.
    pub fn simplicity(&self, cfg: &SearchConfig, central: bool) -> VerdictReport {
        let n = self.dim();
        let probes: Vec<Vector> = (0..n)
            .map(|i| self.basis_vector(i))
            .chain(self.center().basis().iter().cloned())
            .collect();
        for v in &probes {
            if let Some(r) = self.proper_ideal_witness(v) {
                return r;
            }
        }
        if let FieldSpec::Prime(p) = self.field {
            if all_count(p, n).is_some_and(|c| c <= cfg.budget) {
                let count = projective_count(p, n).unwrap();
                let hit = (0..count).into_par_iter().find_map_first(|idx| {
                    let v = projective_point(self.field, n, idx);
                    self.proper_ideal_witness(&v)
                });
                return match hit {
                    Some(r) => r.with_detail("exhaustive scan".to_string()),
                    None => VerdictReport::holds("simple", Strategy::Exhaustive).with_detail(format!(
                        "all {} nonzero elements generate A",
                        all_count(p, n).unwrap() - 1
                    )),
                };
            }
        }
        let form = self.trace_form();
        let radical = form.nullspace();
        if radical.is_empty() && central {
            return VerdictReport::holds("simple", Strategy::Constructive)
                .with_detail("trace form nondegenerate (semisimple) and centre is the base field");
        }
        if !radical.is_empty() && self.field.characteristic() == 0 {
            // In characteristic 0 the trace-form kernel is the Jacobson radical.
            if let Some(r) = self.proper_ideal_witness(&radical[0]) {
                return r.with_detail("element of the radical");
            }
        }
        for v in sample_vectors(self.field, n, cfg.samples, cfg.seed) {
            if let Some(r) = self.proper_ideal_witness(&v) {
                return r.with_detail("found by sampling");
            }
        }
        if self.field.is_finite() {
            return VerdictReport::undecided(
                "simple",
                format!(
                    "enumeration budget exceeded; {} seeded samples found no proper ideal",
                    cfg.samples
                ),
            );
        }
        VerdictReport::holds("simple", Strategy::Sampled).with_detail(format!(
            "basis directions and {} seeded samples all generate A",
            cfg.samples
        ))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-dimensional algebra over {} [{}]",
            self.dim(),
            self.field,
            self.labels.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Quaternions over ℚ with basis 1, i, j, k written directly.
    pub(crate) fn hamilton() -> Algebra {
        let f = FieldSpec::Rationals;
        // (row, col) -> (sign, index)
        let t = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let labels = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
        Algebra::from_fn(
            f,
            labels,
            |a, b| {
                let (s, k) = t[a][b];
                let mut v = zero_vector(f, 4);
                v[k] = f.from_i64(s);
                v
            },
            None,
        )
        .unwrap()
    }

    fn matrix_algebra(f: FieldSpec, n: usize) -> Algebra {
        let labels = (0..n * n).map(|t| format!("e{}{}", t / n + 1, t % n + 1)).collect();
        Algebra::from_fn(
            f,
            labels,
            |a, b| {
                let mut v = zero_vector(f, n * n);
                if a % n == b / n {
                    v[(a / n) * n + b % n] = f.one();
                }
                v
            },
            None,
        )
        .unwrap()
    }

    #[test]
    fn quaternion_products_and_inverse() {
        let h = hamilton();
        let i = h.parse_element("i").unwrap();
        let j = h.parse_element("j").unwrap();
        assert_eq!(h.format_element(&h.mul(&i, &j)), "k");
        assert_eq!(h.format_element(&h.try_invert(&i).unwrap()), "-i");
        assert_eq!(h.unit(), &h.parse_element("1").unwrap());
        assert_eq!(h.center().dim(), 1);
        assert_eq!(h.commutator_subspace().dim(), 3);
        assert_eq!(h.minimal_polynomial(&i).to_string(), "t^2 + 1");
        let x = h.parse_element("1 + i").unwrap();
        assert_eq!(h.minimal_polynomial(&x).to_string(), "t^2 - 2*t + 2");
        assert!(h.is_central_simple(&SearchConfig::default()).is_true());
    }

    #[test]
    fn left_regular_of_i() {
        let h = hamilton();
        let l = h.left_regular_matrix(&h.parse_element("i").unwrap());
        // columns: i·1 = i, i·i = -1, i·j = k, i·k = -j
        let cols: Vec<String> = (0..4).map(|c| h.format_element(&l.column(c))).collect();
        assert_eq!(cols, vec!["i", "-1", "k", "-j"]);
    }

    #[test]
    fn matrix_units() {
        let f = FieldSpec::prime(3).unwrap();
        let m = matrix_algebra(f, 2);
        let e11 = m.parse_element("e11").unwrap();
        assert!(m.try_invert(&e11).is_none());
        assert!(m.ideal_closure(&[m.parse_element("e12").unwrap()]).is_full());
        assert_eq!(m.commutator_subspace().dim(), 3);
        let r = m.is_central_simple(&SearchConfig::default());
        assert!(r.is_true());
        assert_eq!(r.find("simple").unwrap().strategy, Strategy::Exhaustive);
        assert_eq!(matrix_algebra(FieldSpec::Rationals, 3).center().dim(), 1);
    }

    #[test]
    fn product_ring_is_not_simple() {
        let f = FieldSpec::Rationals;
        let kk = Algebra::new(
            f,
            vec!["u".into(), "v".into()],
            vec![(0, 0, 0, f.one()), (1, 1, 1, f.one())],
            None,
        )
        .unwrap();
        assert_eq!(kk.format_element(kk.unit()), "u + v");
        let r = kk.is_central_simple(&SearchConfig::default());
        assert!(r.is_false());
        assert!(r.find("simple").unwrap().is_false());
    }

    #[test]
    fn non_associative_rejected() {
        let f = FieldSpec::Rationals;
        // e·e = 1 but with a bogus extra product x·x = e breaking associativity.
        let bad = Algebra::new(
            f,
            vec!["1".into(), "x".into(), "y".into()],
            vec![
                (0, 0, 0, f.one()),
                (0, 1, 1, f.one()),
                (1, 0, 1, f.one()),
                (0, 2, 2, f.one()),
                (2, 0, 2, f.one()),
                (1, 1, 2, f.one()),
                (1, 2, 0, f.one()),
            ],
            None,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn opposite_and_tensor() {
        let h = hamilton();
        let op = h.opposite();
        let i = h.parse_element("i").unwrap();
        let j = h.parse_element("j").unwrap();
        assert_eq!(op.format_element(&op.mul(&i, &j)), "-k");
        assert_eq!(op.opposite(), h);
        let t = h.tensor(&op).unwrap();
        assert_eq!(t.dim(), 16);
        t.check_associativity().unwrap();
    }

    #[test]
    fn labels_with_negative_exponents_parse() {
        let f = FieldSpec::Rationals;
        // K x K on orthogonal idempotents whose labels carry signed exponents.
        let labels = vec!["x^-2".into(), "x^2".into()];
        let c = [(0, 0, 0, f.one()), (1, 1, 1, f.one())];
        let a = Algebra::new(f, labels, c, Some(vec![f.one(), f.one()])).unwrap();
        let x = a.parse_element("3*x^-2 - x^2 + 1").unwrap();
        assert_eq!(x, vec![f.from_i64(4), f.zero()]);
        assert_eq!(a.parse_element(&a.format_element(&x)).unwrap(), x);
    }
}
