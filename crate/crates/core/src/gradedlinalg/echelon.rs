use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ring::Rational;

/// Sparse vector over the rationals.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn sv_axpy(dst: &mut SparseVec, c: &Rational, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&i, v) in src {
        let e = dst.entry(i).or_insert_with(Rational::zero);
        *e += c * v;
        if e.is_zero() {
            dst.remove(&i);
        }
    }
}

/// Incremental exact column-echelon form with combination tracking.
///
/// Columns are pushed one at a time; each is reduced against the recorded
/// pivots. A column that reduces to zero yields a kernel combination in
/// terms of the pushed columns; otherwise it becomes a new pivot. The
/// structure also answers membership queries with explicit coefficients.
#[derive(Default, Clone, Debug)]
pub struct ColEchelon {
    /// Echelonized columns, each with a distinct leading (pivot) row.
    cols: Vec<SparseVec>,
    /// combos[j] expresses cols[j] in terms of the original pushed columns.
    combos: Vec<SparseVec>,
    /// pivot row -> index into `cols`.
    pivots: BTreeMap<usize, usize>,
    pushed: usize,
}

impl ColEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    pub fn pushed(&self) -> usize {
        self.pushed
    }

    /// Reduce `v` against the pivots; returns the residual and the
    /// coefficients (in terms of original pushed columns) used.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut used: SparseVec = SparseVec::new();
        loop {
            let lead = match v.keys().next() {
                None => break,
                Some(&r) => r,
            };
            let j = match self.pivots.get(&lead) {
                None => break,
                Some(&j) => j,
            };
            let pivot_val = &self.cols[j][&lead];
            let c = -(&v[&lead] / pivot_val);
            sv_axpy(&mut v, &c, &self.cols[j]);
            sv_axpy(&mut used, &c, &self.combos[j]);
            debug_assert!(!v.contains_key(&lead));
        }
        (v, used)
    }

    /// Push a column. Returns `Some(kernel_combo)` if the column is dependent
    /// on the previous ones: the combination (over pushed column indices,
    /// including this one with coefficient 1) that gives zero.
    pub fn push(&mut self, v: SparseVec) -> Option<SparseVec> {
        let idx = self.pushed;
        self.pushed += 1;
        let (resid, mut used) = self.reduce(v);
        used.insert(idx, Rational::from_integer(1.into()));
        if resid.is_empty() {
            Some(used)
        } else {
            let lead = *resid.keys().next().unwrap();
            self.pivots.insert(lead, self.cols.len());
            self.cols.push(resid);
            self.combos.push(used);
            None
        }
    }

    /// Is `v` in the span of the pushed columns? If so return coefficients
    /// over the original pushed column indices such that
    /// `v = sum coeff_i * col_i`.
    pub fn express(&self, v: SparseVec) -> Option<SparseVec> {
        let (resid, used) = self.reduce(v);
        if resid.is_empty() {
            let mut out = used;
            for c in out.values_mut() {
                *c = -c.clone();
            }
            Some(out)
        } else {
            None
        }
    }
}

/// Exact rank of a sparse rational matrix given as columns.
pub fn rank_of_columns(cols: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = ColEchelon::new();
    for c in cols {
        e.push(c);
    }
    e.rank()
}

/// Kernel basis of a matrix given as columns (vectors over column indices).
pub fn kernel_of_columns(cols: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut e = ColEchelon::new();
    let mut kernel = Vec::new();
    for c in cols {
        if let Some(k) = e.push(c) {
            kernel.push(k);
        }
    }
    kernel
}

/// A subquotient ker/im of an ambient space, with explicit representative
/// cycles and projection of arbitrary cycles to the chosen basis.
///
/// Coefficients returned by [`ColEchelon::express`] only ever reference
/// pivot columns, so after pushing boundaries first and cycles second, the
/// representative coefficients can be read off directly.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ech: ColEchelon,
    rep_pushed_indices: Vec<usize>,
    /// Representatives as ambient vectors (homology basis lifts).
    pub reps: Vec<SparseVec>,
}

impl Subquotient {
    /// `boundaries`: spanning set of the image; `cycles`: spanning set of the
    /// kernel.
    pub fn new(boundaries: Vec<SparseVec>, cycles: Vec<SparseVec>) -> Self {
        let mut ech = ColEchelon::new();
        for b in boundaries {
            ech.push(b);
        }
        let mut reps = Vec::new();
        let mut rep_pushed_indices = Vec::new();
        for z in cycles {
            let idx = ech.pushed();
            if ech.push(z.clone()).is_none() {
                reps.push(z);
                rep_pushed_indices.push(idx);
            }
        }
        Subquotient { ech, rep_pushed_indices, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Express a cycle in the homology basis (coefficients indexed by
    /// representative number); panics if `v` is not in the span of
    /// boundaries and representatives.
    pub fn project(&self, v: SparseVec) -> SparseVec {
        if v.is_empty() {
            return SparseVec::new();
        }
        let coeffs = self
            .ech
            .express(v)
            .expect("projected vector is not a cycle in the recorded span");
        let mut out = SparseVec::new();
        for (j, &pi) in self.rep_pushed_indices.iter().enumerate() {
            if let Some(c) = coeffs.get(&pi) {
                if !c.is_zero() {
                    out.insert(j, c.clone());
                }
            }
        }
        out
    }
}
