//! Symbolic presentation of a general chart U_mu.
//!
//! Multiplication by `x` and `y` on the quotient basis `B_mu` is written as a
//! pair of n-by-n matrices. A shift landing inside the diagram gives an exact
//! unit column; a shift landing on a border monomial gives that monomial's
//! expansion vector. Expansions of complement corners are free variables
//! named `C[r,s][h,k]`; other border expansions are derived from the corners
//! by reduction whenever the rewriting is acyclic (x- and y-shifts landing on
//! the same border monomial therefore share one vector by construction).
//!
//! The commutator entries of `XY - YX` are the chart's consistency relations,
//! and the n entries of `Y^beta e_0` cut out the locus of ideals containing
//! `y^beta`.

use crate::chart_un::ChartIdealN;
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::multipoly::{SparseMultiPoly, VarSet};
use crate::partitions::{
    basis_monomials, border_monomials, complement_corners, Monomial, Partition,
};
use crate::rational::Rational;
use crate::scalar::Scalar;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

pub type Assignment = BTreeMap<String, Rational>;

/// A list of polynomials over a presentation's variables, with one short
/// label per polynomial for reporting.
#[derive(Clone, Debug)]
pub struct RelationSystem {
    vars: Arc<VarSet>,
    polys: Vec<SparseMultiPoly>,
    labels: Vec<String>,
}

impl RelationSystem {
    pub fn polys(&self) -> &[SparseMultiPoly] {
        &self.polys
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    /// Evaluates every relation at a rational point.
    pub fn residuals(&self, assignment: &Assignment) -> Result<Vec<Rational>> {
        self.polys.iter().map(|p| p.eval(assignment)).collect()
    }

    /// True when some relation is a nonzero constant, i.e. the system has no
    /// solutions at all.
    pub fn forces_unit(&self) -> bool {
        self.polys.iter().any(|p| !p.is_zero() && p.is_constant())
    }

    /// Substitutes variables (by rationals or polynomials) in every relation.
    pub fn substitute(
        &self,
        map: &BTreeMap<String, crate::multipoly::Subst>,
    ) -> Result<Vec<SparseMultiPoly>> {
        self.polys.iter().map(|p| p.substitute(map)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ChartPresentation {
    mu: Partition,
    n: usize,
    boxes: Vec<Monomial>,
    box_index: BTreeMap<(usize, usize), usize>,
    border: Vec<Monomial>,
    corners: Vec<Monomial>,
    vars: Arc<VarSet>,
    free_vars: Vec<String>,
    derived: BTreeSet<(usize, usize)>,
    expansions: BTreeMap<(usize, usize), Vec<SparseMultiPoly>>,
    x_mat: Vec<Vec<SparseMultiPoly>>,
    y_mat: Vec<Vec<SparseMultiPoly>>,
}

/// Deterministic variable name for the coefficient of basis box `(h, k)` in
/// the expansion of the border monomial `x^r y^s`.
pub fn variable_name(border: &Monomial, boxm: &Monomial) -> String {
    format!("C[{},{}][{},{}]", border.r, border.s, boxm.r, boxm.s)
}

enum Shift {
    X,
    Y,
}

impl Shift {
    fn apply(&self, m: &Monomial) -> Monomial {
        match self {
            Shift::X => Monomial::new(m.r + 1, m.s),
            Shift::Y => Monomial::new(m.r, m.s + 1),
        }
    }
}

/// Builds the symbolic presentation of U_mu.
pub fn build_presentation(mu: &Partition) -> Result<ChartPresentation> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let n = mu.size();
    let boxes = basis_monomials(mu);
    let box_index: BTreeMap<(usize, usize), usize> = boxes
        .iter()
        .enumerate()
        .map(|(i, m)| ((m.r, m.s), i))
        .collect();
    let border = border_monomials(mu);
    let corners = complement_corners(mu);
    let corner_set: BTreeSet<(usize, usize)> = corners.iter().map(|m| (m.r, m.s)).collect();

    let mut names = Vec::with_capacity(border.len() * n);
    for bm in &border {
        for bx in &boxes {
            names.push(variable_name(bm, bx));
        }
    }
    let vars = VarSet::new(names);

    let symbol_vector = |bm: &Monomial| -> Vec<SparseMultiPoly> {
        boxes
            .iter()
            .map(|bx| SparseMultiPoly::var(Arc::clone(&vars), &variable_name(bm, bx)).unwrap())
            .collect()
    };

    // Corners carry free variables; derive the remaining border expansions by
    // reduction through an already-resolved predecessor, iterating to a fixed
    // point. Monomials left unresolved (the rewriting is cyclic, e.g. fat
    // rectangles) fall back to free variables.
    let mut resolved: BTreeMap<(usize, usize), Vec<SparseMultiPoly>> = BTreeMap::new();
    for c in &corners {
        resolved.insert((c.r, c.s), symbol_vector(c));
    }
    let mut derived = BTreeSet::new();

    let apply_shift = |resolved: &BTreeMap<(usize, usize), Vec<SparseMultiPoly>>,
                       pred: &[SparseMultiPoly],
                       shift: &Shift|
     -> Option<Vec<SparseMultiPoly>> {
        let mut out = vec![SparseMultiPoly::zero(Arc::clone(&vars)); n];
        for (bi, coeff) in pred.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let target = shift.apply(&boxes[bi]);
            if let Some(&ti) = box_index.get(&(target.r, target.s)) {
                out[ti] = out[ti].add(coeff);
            } else {
                let e = resolved.get(&(target.r, target.s))?;
                for (j, ej) in e.iter().enumerate() {
                    out[j] = out[j].add(&coeff.mul(ej));
                }
            }
        }
        Some(out)
    };

    loop {
        let mut progressed = false;
        for m in &border {
            if resolved.contains_key(&(m.r, m.s)) {
                continue;
            }
            let mut routes = Vec::new();
            if m.r >= 1 && !mu.contains_box(m.r - 1, m.s) {
                routes.push((Monomial::new(m.r - 1, m.s), Shift::X));
            }
            if m.s >= 1 && !mu.contains_box(m.r, m.s - 1) {
                routes.push((Monomial::new(m.r, m.s - 1), Shift::Y));
            }
            for (pred, shift) in routes {
                let Some(pred_exp) = resolved.get(&(pred.r, pred.s)).cloned() else {
                    continue;
                };
                if let Some(exp) = apply_shift(&resolved, &pred_exp, &shift) {
                    resolved.insert((m.r, m.s), exp);
                    derived.insert((m.r, m.s));
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            break;
        }
    }
    for m in &border {
        resolved
            .entry((m.r, m.s))
            .or_insert_with(|| symbol_vector(m));
    }

    let mut free_vars = Vec::new();
    for bm in &border {
        if corner_set.contains(&(bm.r, bm.s)) || !derived.contains(&(bm.r, bm.s)) {
            for bx in &boxes {
                free_vars.push(variable_name(bm, bx));
            }
        }
    }

    let column = |boxm: &Monomial, shift: Shift| -> Vec<SparseMultiPoly> {
        let target = shift.apply(boxm);
        if let Some(&ti) = box_index.get(&(target.r, target.s)) {
            let mut col = vec![SparseMultiPoly::zero(Arc::clone(&vars)); n];
            col[ti] = SparseMultiPoly::one(Arc::clone(&vars));
            col
        } else {
            resolved[&(target.r, target.s)].clone()
        }
    };

    let mut x_mat = vec![vec![SparseMultiPoly::zero(Arc::clone(&vars)); n]; n];
    let mut y_mat = vec![vec![SparseMultiPoly::zero(Arc::clone(&vars)); n]; n];
    for (j, boxm) in boxes.iter().enumerate() {
        let xcol = column(boxm, Shift::X);
        let ycol = column(boxm, Shift::Y);
        for i in 0..n {
            x_mat[i][j] = xcol[i].clone();
            y_mat[i][j] = ycol[i].clone();
        }
    }

    Ok(ChartPresentation {
        mu: mu.clone(),
        n,
        boxes,
        box_index,
        border,
        corners,
        vars,
        free_vars,
        derived,
        expansions: resolved,
        x_mat,
        y_mat,
    })
}

impl ChartPresentation {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> &[Monomial] {
        &self.boxes
    }

    pub fn border(&self) -> &[Monomial] {
        &self.border
    }

    pub fn corners(&self) -> &[Monomial] {
        &self.corners
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    /// One symbol per (border monomial, basis box) pair.
    pub fn num_variables(&self) -> usize {
        self.border.len() * self.n
    }

    /// Variables that remain free after derivation.
    pub fn free_variables(&self) -> &[String] {
        &self.free_vars
    }

    /// True when this border monomial's expansion was derived from corners.
    pub fn is_derived(&self, m: &Monomial) -> bool {
        self.derived.contains(&(m.r, m.s))
    }

    /// Expansion vector of a border monomial over the basis.
    pub fn expansion(&self, m: &Monomial) -> Option<&[SparseMultiPoly]> {
        self.expansions.get(&(m.r, m.s)).map(Vec::as_slice)
    }

    pub fn x_matrix(&self) -> &[Vec<SparseMultiPoly>] {
        &self.x_mat
    }

    pub fn y_matrix(&self) -> &[Vec<SparseMultiPoly>] {
        &self.y_mat
    }

    fn box_position(&self, m: &Monomial) -> Option<usize> {
        self.box_index.get(&(m.r, m.s)).copied()
    }

    /// The nonzero entries of `XY - YX`.
    pub fn commutator_relations(&self) -> RelationSystem {
        let n = self.n;
        let mut polys = Vec::new();
        let mut labels = Vec::new();
        for j in 0..n {
            // column j of X*Y and Y*X
            let ycol: Vec<&SparseMultiPoly> = (0..n).map(|i| &self.y_mat[i][j]).collect();
            let xcol: Vec<&SparseMultiPoly> = (0..n).map(|i| &self.x_mat[i][j]).collect();
            for i in 0..n {
                let mut entry = SparseMultiPoly::zero(Arc::clone(&self.vars));
                for k in 0..n {
                    entry = entry.add(&self.x_mat[i][k].mul(ycol[k]));
                    entry = entry.sub(&self.y_mat[i][k].mul(xcol[k]));
                }
                if !entry.is_zero() {
                    labels.push(format!(
                        "coefficient of {} in the two expansions of x*y*{}",
                        self.boxes[i], self.boxes[j]
                    ));
                    polys.push(entry);
                }
            }
        }
        RelationSystem {
            vars: Arc::clone(&self.vars),
            polys,
            labels,
        }
    }

    /// The n entries of `Y^beta e_0`; their vanishing (with the commutator
    /// relations) cuts out the ideals containing `y^beta`.
    pub fn zbeta_equations(&self, beta: usize) -> RelationSystem {
        let mut v = vec![SparseMultiPoly::zero(Arc::clone(&self.vars)); self.n];
        let e0 = self
            .box_position(&Monomial::new(0, 0))
            .expect("nonempty partition");
        v[e0] = SparseMultiPoly::one(Arc::clone(&self.vars));
        for _ in 0..beta {
            let mut next = vec![SparseMultiPoly::zero(Arc::clone(&self.vars)); self.n];
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                for (i, entry) in next.iter_mut().enumerate() {
                    *entry = entry.add(&self.y_mat[i][j].mul(vj));
                }
            }
            v = next;
        }
        let labels = self
            .boxes
            .iter()
            .map(|b| format!("coefficient of {b} in y^{beta}"))
            .collect();
        RelationSystem {
            vars: Arc::clone(&self.vars),
            polys: v,
            labels,
        }
    }

    /// Evaluates the presentation at a rational point. The assignment must
    /// cover every free variable. Returns the numeric multiplication
    /// matrices together with the commutator residuals.
    pub fn substitute_point(
        &self,
        assignment: &Assignment,
    ) -> Result<(RationalMatrix, RationalMatrix, Vec<Rational>)> {
        for name in &self.free_vars {
            if !assignment.contains_key(name) {
                return Err(Error::IncompleteAssignment(name.clone()));
            }
        }
        let eval_mat = |m: &[Vec<SparseMultiPoly>]| -> Result<RationalMatrix> {
            let mut out = RationalMatrix::zeros(self.n, self.n);
            for (i, row) in m.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    out.set(i, j, p.eval(assignment)?);
                }
            }
            Ok(out)
        };
        let x0 = eval_mat(&self.x_mat)?;
        let y0 = eval_mat(&self.y_mat)?;
        let residuals = self.commutator_relations().residuals(assignment)?;
        Ok((x0, y0, residuals))
    }

    /// Chart coordinates of the ideal of n distinct reduced points, obtained
    /// by solving the evaluation linear system. `None` when the basis
    /// monomials are dependent on the chosen points (the ideal then lies
    /// outside this chart).
    pub fn assignment_from_points(&self, points: &[(Rational, Rational)]) -> Option<Assignment> {
        if points.len() != self.n {
            return None;
        }
        let eval_mono = |m: &Monomial, p: &(Rational, Rational)| -> Rational {
            let mut acc: Rational = Scalar::one();
            for _ in 0..m.r {
                acc = &acc * &p.0;
            }
            for _ in 0..m.s {
                acc = &acc * &p.1;
            }
            acc
        };
        let m = RationalMatrix::from_rows(
            points
                .iter()
                .map(|p| self.boxes.iter().map(|b| eval_mono(b, p)).collect())
                .collect(),
        );
        let mut assignment = Assignment::new();
        let free: BTreeSet<&String> = self.free_vars.iter().collect();
        for bm in &self.border {
            let rhs: Vec<Rational> = points.iter().map(|p| eval_mono(bm, p)).collect();
            let coeffs = m.solve(&rhs)?;
            for (bx, c) in self.boxes.iter().zip(coeffs) {
                let name = variable_name(bm, bx);
                if free.contains(&name) {
                    assignment.insert(name, c);
                }
            }
        }
        Some(assignment)
    }

    /// Normal form of an arbitrary monomial on the ideal of n distinct
    /// points, by the same linear solve.
    pub fn normal_form_at_points(
        &self,
        m: &Monomial,
        points: &[(Rational, Rational)],
    ) -> Option<Vec<Rational>> {
        if points.len() != self.n {
            return None;
        }
        let eval_mono = |mm: &Monomial, p: &(Rational, Rational)| -> Rational {
            let mut acc: Rational = Scalar::one();
            for _ in 0..mm.r {
                acc = &acc * &p.0;
            }
            for _ in 0..mm.s {
                acc = &acc * &p.1;
            }
            acc
        };
        let mat = RationalMatrix::from_rows(
            points
                .iter()
                .map(|p| self.boxes.iter().map(|b| eval_mono(b, p)).collect())
                .collect(),
        );
        let rhs: Vec<Rational> = points.iter().map(|p| eval_mono(m, p)).collect();
        mat.solve(&rhs)
    }
}

/// Chart coordinates of an ideal `(a(x), y - b(x))` inside the one-row chart:
/// the x^n expansion carries the coefficients of `x^n mod a` and the y
/// expansion carries the coefficients of `b`.
pub fn embed_un_point(pres: &ChartPresentation, ideal: &ChartIdealN) -> Result<Assignment> {
    let n = ideal.n();
    if pres.n != n || pres.mu.parts() != [n] {
        return Err(Error::LabelMismatch);
    }
    let coords = ideal.chart_coords();
    let mut assignment = Assignment::new();
    for i in 0..n {
        let boxm = Monomial::new(i, 0);
        assignment.insert(
            variable_name(&Monomial::new(n, 0), &boxm),
            coords[i].clone(),
        );
        assignment.insert(
            variable_name(&Monomial::new(0, 1), &boxm),
            coords[n + i].clone(),
        );
    }
    Ok(assignment)
}
