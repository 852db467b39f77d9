use std::fmt;

/// Permutation of {1, ..., n}, stored 0-indexed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n && i != j);
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, j - 1);
        Perm(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Image of i (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// Composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles as sorted-by-minimum lists of 1-indexed entries, each cycle
    /// starting at its minimal element and following `w^{-1}`:
    /// `c_{t+1} = w^{-1}(c_t)`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let inv = self.inverse();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = inv.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = inv.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// 1-indexed cycle label (index into `cycles()`) of each point.
    pub fn cycle_of(&self) -> Vec<usize> {
        let mut label = vec![0; self.n()];
        for (ci, cyc) in self.cycles().iter().enumerate() {
            for &i in cyc {
                label[i - 1] = ci;
            }
        }
        label
    }

    /// All permutations of {1..n}.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(rest: Vec<usize>, acc: Vec<usize>, out: &mut Vec<Perm>) {
            if rest.is_empty() {
                out.push(Perm(acc));
                return;
            }
            for (k, &v) in rest.iter().enumerate() {
                let mut r = rest.clone();
                r.remove(k);
                let mut a = acc.clone();
                a.push(v);
                rec(r, a, out);
            }
        }
        let mut out = Vec::new();
        rec((0..n).collect(), Vec::new(), &mut out);
        out
    }

    /// Minimal number of reflections in a factorization: n - #cycles.
    pub fn reflection_length(&self) -> usize {
        self.n() - self.num_cycles()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 1..=self.n() {
            if i > 1 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.apply(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_cycles() {
        let s1 = Perm::transposition(3, 1, 2);
        let s2 = Perm::transposition(3, 2, 3);
        let w = s1.compose(&s2); // s1(s2(.)): 1->s1(1)... s2: 1->1,2->3,3->2; then s1: -> 2, 3, 1
        assert_eq!(w.apply(1), 2);
        assert_eq!(w.apply(2), 3);
        assert_eq!(w.apply(3), 1);
        assert_eq!(w.num_cycles(), 1);
        assert_eq!(w.reflection_length(), 2);
        // cycle starting at 1 follows w^{-1}: 1 -> 3 -> 2
        assert_eq!(w.cycles(), vec![vec![1, 3, 2]]);
        assert_eq!(w.compose(&w.inverse()), Perm::identity(3));
    }

    #[test]
    fn enumeration() {
        assert_eq!(Perm::all(4).len(), 24);
    }
}
