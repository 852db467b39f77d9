use std::collections::BTreeMap;

use crate::ring::Rational;
use crate::{Error, Result};

use super::complex::{ChainComplex, GradedFreeModule, Operator, SparseMat};

/// Result of Gaussian simplification: a homotopy-equivalent complex together
/// with the comparison chain maps. `project` maps the original complex onto
/// the simplified one, `include` the other way; `project . include = Id`
/// exactly, and both are chain maps.
#[derive(Clone, Debug)]
pub struct Simplification {
    pub complex: ChainComplex,
    pub project: Operator,
    pub include: Operator,
}

impl Simplification {
    /// Transport an operator from the original complex to the simplified one.
    pub fn transport(&self, op: &Operator) -> Operator {
        self.project.compose(op).compose(&self.include)
    }
}

/// Repeatedly cancel differential entries that are nonzero rational scalars
/// until none remain. Pivots are chosen to minimize fill-in.
pub fn gaussian_simplify(c: &ChainComplex) -> Result<Simplification> {
    if !c.curvature.is_zero() {
        return Err(Error::NonzeroCurvature(
            "gaussian simplification needs an honest complex".into(),
        ));
    }
    let mut slots: BTreeMap<i32, GradedFreeModule> = c.slots.clone();
    let mut diff: BTreeMap<i32, SparseMat> = c.diff.clone();
    // project: original -> current, include: current -> original
    let mut project = identity_between(&slots);
    let mut include = identity_between(&slots);

    loop {
        let pivot = find_pivot(&diff);
        let (s, b_row, a_col, c_val) = match pivot {
            None => break,
            Some(p) => p,
        };
        elim_step(&mut slots, &mut diff, &mut project, &mut include, s, b_row, a_col, &c_val);
    }

    let right = (1..=c.n)
        .map(|i| {
            let op = Operator { degree: (0, 2, 0), blocks: c.right[i - 1].clone() };
            project.compose(&op).compose(&include).blocks
        })
        .collect();
    let complex = ChainComplex {
        n: c.n,
        slots,
        diff,
        right,
        curvature: c.curvature.clone(),
    };
    Ok(Simplification { complex, project, include })
}

/// Cancel the generator pair `(a_col in slot s, b_row in slot s-1)` against
/// the invertible scalar pivot `c_val`, updating the differential and the
/// accumulated comparison maps in place.
#[allow(clippy::too_many_arguments)]
pub fn elim_step(
    slots: &mut BTreeMap<i32, GradedFreeModule>,
    diff: &mut BTreeMap<i32, SparseMat>,
    project: &mut Operator,
    include: &mut Operator,
    s: i32,
    b_row: usize,
    a_col: usize,
    c_val: &Rational,
) {
    let d_s = diff.get(&s).cloned().unwrap_or_default();
    let rank_s = slots[&s].rank();
    let rank_s1 = slots[&(s - 1)].rank();
    let cinv = Rational::from_integer(1.into()) / c_val;

    // beta: row b of d_s (other columns); gamma: column a of d_s (other rows)
    let mut beta: Vec<(usize, crate::ring::Polynomial)> = Vec::new();
    let mut gamma: Vec<(usize, crate::ring::Polynomial)> = Vec::new();
    for (&(r, col), p) in &d_s.entries {
        if r == b_row && col != a_col {
            beta.push((col, p.clone()));
        }
        if col == a_col && r != b_row {
            gamma.push((r, p.clone()));
        }
    }

    // new differential at slot s: delta - c^{-1} gamma beta, drop (b_row, a_col)
    let mut new_ds = d_s.clone();
    for &(r, ref gp) in &gamma {
        for &(col, ref bp) in &beta {
            let corr = (gp * bp).scale(&-&cinv);
            new_ds.add_to(r, col, &corr);
        }
    }
    let new_ds = new_ds.drop_rows_cols(&[b_row], &[a_col]);
    if new_ds.is_zero() {
        diff.remove(&s);
    } else {
        diff.insert(s, new_ds);
    }
    // slot s+1: drop row a_col; slot s-1: drop column b_row
    if let Some(d_up) = diff.get(&(s + 1)) {
        let nd = d_up.drop_rows_cols(&[a_col], &[]);
        if nd.is_zero() {
            diff.remove(&(s + 1));
        } else {
            diff.insert(s + 1, nd);
        }
    }
    if let Some(d_down) = diff.get(&(s - 1)) {
        let nd = d_down.drop_rows_cols(&[], &[b_row]);
        if nd.is_zero() {
            diff.remove(&(s - 1));
        } else {
            diff.insert(s - 1, nd);
        }
    }

    // step maps between current (with a, b) and next (without)
    // f_step: slot s: drop a; slot s-1: drop b, plus f[y, b] = -c^{-1} gamma_y
    let f_s = drop_identity(rank_s, &[a_col]);
    let f_s1 = {
        let mut m = drop_identity(rank_s1, &[b_row]);
        let rmap = reindex_map(rank_s1, &[b_row]);
        for &(r, ref gp) in &gamma {
            let nr = rmap[&r];
            m.add_to(nr, b_row, &gp.scale(&-&cinv));
        }
        m
    };
    // g_step: slot s: include, plus g[a, x] = -c^{-1} beta_x; slot s-1: include
    let mut g_s = include_identity(rank_s, &[a_col]);
    {
        let cmap = reindex_map(rank_s, &[a_col]);
        for &(col, ref bp) in &beta {
            let nc = cmap[&col];
            g_s.add_to(a_col, nc, &bp.scale(&-&cinv));
        }
    }
    let g_s1 = include_identity(rank_s1, &[b_row]);

    // update accumulated maps: project = f_step . project, include = include . g_step
    let f_step = step_operator(slots, s, f_s, s - 1, f_s1, true);
    let g_step = step_operator(slots, s, g_s, s - 1, g_s1, false);
    *project = f_step.compose(project);
    *include = include.compose(&g_step);

    // update generators
    remove_gen(slots, s, a_col);
    remove_gen(slots, s - 1, b_row);
}

pub fn identity_between(slots: &BTreeMap<i32, GradedFreeModule>) -> Operator {
    let blocks = slots
        .iter()
        .map(|(&t, m)| (t, SparseMat::identity(m.rank())))
        .collect();
    Operator { degree: (0, 0, 0), blocks }
}

/// Identity matrix with given rows dropped (projection).
fn drop_identity(n: usize, dropped: &[usize]) -> SparseMat {
    SparseMat::identity(n).drop_rows_cols(dropped, &[])
}

/// Identity matrix with given columns dropped (inclusion).
fn include_identity(n: usize, dropped: &[usize]) -> SparseMat {
    SparseMat::identity(n).drop_rows_cols(&[], dropped)
}

fn reindex_map(n: usize, dropped: &[usize]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    let mut next = 0;
    for i in 0..n {
        if !dropped.contains(&i) {
            out.insert(i, next);
            next += 1;
        }
    }
    out
}

/// Build the full step operator: identity on all slots except `s` and `s1`,
/// where the provided matrices are used. For the projection direction the
/// matrices shrink, for the inclusion they grow.
fn step_operator(
    slots: &BTreeMap<i32, GradedFreeModule>,
    s: i32,
    mat_s: SparseMat,
    s1: i32,
    mat_s1: SparseMat,
    _projection: bool,
) -> Operator {
    let mut blocks = BTreeMap::new();
    for (&t, m) in slots {
        if t == s {
            blocks.insert(t, mat_s.clone());
        } else if t == s1 {
            blocks.insert(t, mat_s1.clone());
        } else {
            blocks.insert(t, SparseMat::identity(m.rank()));
        }
    }
    Operator { degree: (0, 0, 0), blocks }
}

fn remove_gen(slots: &mut BTreeMap<i32, GradedFreeModule>, t: i32, idx: usize) {
    let m = slots.get_mut(&t).unwrap();
    m.gens.remove(idx);
    if m.gens.is_empty() {
        slots.remove(&t);
    }
}

/// Find a scalar pivot minimizing (row nnz - 1)(col nnz - 1).
fn find_pivot(diff: &BTreeMap<i32, SparseMat>) -> Option<(i32, usize, usize, Rational)> {
    let mut best: Option<(usize, (i32, usize, usize, Rational))> = None;
    for (&t, d) in diff {
        let mut row_nnz: BTreeMap<usize, usize> = BTreeMap::new();
        let mut col_nnz: BTreeMap<usize, usize> = BTreeMap::new();
        for &(r, c) in d.entries.keys() {
            *row_nnz.entry(r).or_default() += 1;
            *col_nnz.entry(c).or_default() += 1;
        }
        for (&(r, c), p) in &d.entries {
            if let Some(scalar) = p.as_scalar() {
                if num_traits::Zero::is_zero(&scalar) {
                    continue;
                }
                let cost = (row_nnz[&r] - 1) * (col_nnz[&c] - 1);
                if best.as_ref().map(|b| cost < b.0).unwrap_or(true) {
                    best = Some((cost, (t, r, c, scalar)));
                    if cost == 0 {
                        return best.map(|b| b.1);
                    }
                }
            }
        }
    }
    best.map(|b| b.1)
}
