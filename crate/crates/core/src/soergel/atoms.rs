use std::collections::BTreeMap;

use num_traits::Zero;

use crate::gradedlinalg::{
    elim_step, identity_between, x_monomials, ChainComplex, ColEchelon, GradedFreeModule,
    Operator, Simplification, SparseMat, SparseVec,
};
use crate::ring::{Monomial, Polynomial, Rational, VarKind};
use crate::{Error, Result};

use super::braid::BraidWord;
use super::objects::{bimodule_bi, bimodule_r, rouquier_generator, Bimodule};

/// An indexed summand of a slot: a Bott-Samelson word with a quantum shift.
/// `gens` lists the generator indices of the parent complex belonging to
/// this atom, in the canonical word-tensor order (big-endian over letters).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Atom {
    pub word: Vec<usize>,
    pub shift: i32,
    pub gens: Vec<usize>,
}

/// A chain complex of Bott-Samelson bimodules with the summand structure
/// tracked, so that homotopy reductions can be performed in the bimodule
/// category: cancellations only pair identical summands, and repeated
/// adjacent letters are split off first.
#[derive(Clone, Debug)]
pub struct SoergelComplex {
    pub complex: ChainComplex,
    pub atoms: BTreeMap<i32, Vec<Atom>>,
}

impl SoergelComplex {
    pub fn unit(n: usize) -> Self {
        let complex = ChainComplex::unit(n);
        let mut atoms = BTreeMap::new();
        atoms.insert(0, vec![Atom { word: vec![], shift: 0, gens: vec![0] }]);
        SoergelComplex { complex, atoms }
    }

    pub fn generator(n: usize, i: usize, sign: i32) -> Result<Self> {
        let complex = rouquier_generator(n, i, sign)?;
        let mut atoms = BTreeMap::new();
        if sign > 0 {
            atoms.insert(0, vec![Atom { word: vec![i], shift: 1, gens: vec![0, 1] }]);
            atoms.insert(-1, vec![Atom { word: vec![], shift: 1, gens: vec![0] }]);
        } else {
            atoms.insert(1, vec![Atom { word: vec![], shift: -1, gens: vec![0] }]);
            atoms.insert(0, vec![Atom { word: vec![i], shift: 1, gens: vec![0, 1] }]);
        }
        Ok(SoergelComplex { complex, atoms })
    }

    /// Tensor product with atom bookkeeping.
    pub fn tensor(&self, other: &SoergelComplex) -> SoergelComplex {
        let (complex, index) = self.complex.tensor(&other.complex);
        let mut atoms: BTreeMap<i32, Vec<Atom>> = BTreeMap::new();
        for (&t, gens) in &index.gens {
            let mut list: Vec<Atom> = Vec::new();
            let mut seen: BTreeMap<(i32, usize, i32, usize), usize> = BTreeMap::new();
            for (&t1, atoms1) in &self.atoms {
                for (&t2, atoms2) in &other.atoms {
                    if t1 + t2 != t {
                        continue;
                    }
                    for (a1, atom1) in atoms1.iter().enumerate() {
                        for (a2, atom2) in atoms2.iter().enumerate() {
                            let mut word = atom1.word.clone();
                            word.extend_from_slice(&atom2.word);
                            seen.insert((t1, a1, t2, a2), list.len());
                            list.push(Atom {
                                word,
                                shift: atom1.shift + atom2.shift,
                                gens: vec![usize::MAX; atom1.gens.len() * atom2.gens.len()],
                            });
                        }
                    }
                }
            }
            for (flat, &(t1, i1, t2, i2)) in gens.iter().enumerate() {
                let (a1, p1) = locate(&self.atoms[&t1], i1);
                let (a2, p2) = locate(&other.atoms[&t2], i2);
                let idx = seen[&(t1, a1, t2, a2)];
                let rank2 = other.atoms[&t2][a2].gens.len();
                list[idx].gens[p1 * rank2 + p2] = flat;
            }
            atoms.insert(t, list);
        }
        SoergelComplex { complex, atoms }
    }
}

fn locate(atoms: &[Atom], gen: usize) -> (usize, usize) {
    for (ai, a) in atoms.iter().enumerate() {
        if let Some(p) = a.gens.iter().position(|&g| g == gen) {
            return (ai, p);
        }
    }
    panic!("generator {} not covered by atoms", gen);
}

/// Rouquier complex of a braid word with atom tracking.
pub fn rouquier_soergel(beta: &BraidWord) -> Result<SoergelComplex> {
    let n = beta.strands;
    let mut acc: Option<SoergelComplex> = None;
    for &g in &beta.word {
        let t = SoergelComplex::generator(n, g.unsigned_abs() as usize, g.signum())?;
        acc = Some(match acc {
            None => t,
            Some(c) => c.tensor(&t),
        });
    }
    Ok(acc.unwrap_or_else(|| SoergelComplex::unit(n)))
}

/// The canonical bimodule of a Bott-Samelson word.
pub fn word_bimodule(n: usize, word: &[usize]) -> Result<Bimodule> {
    let mut acc = bimodule_r(n).at_slot(0);
    for &i in word {
        let b = bimodule_bi(n, i)?.at_slot(0);
        acc = acc.tensor(&b).0;
    }
    Ok(Bimodule {
        n,
        gens: acc.slots[&0].gens.clone(),
        right: (0..n).map(|j| acc.right[j][&0].clone()).collect(),
    })
}

/// Basis of degree-homogeneous bimodule maps between word bimodules:
/// matrices over the left polynomial ring commuting with every right action.
pub fn hom_word_maps(n: usize, src: &Bimodule, tgt: &Bimodule, qdeg: i32) -> Vec<SparseMat> {
    let mut unknowns: Vec<(usize, usize, Monomial)> = Vec::new();
    for (r, &(_, dt)) in tgt.gens.iter().enumerate() {
        for (c, &(_, ds)) in src.gens.iter().enumerate() {
            let deg = ds - dt + qdeg;
            if deg < 0 || deg % 2 != 0 {
                continue;
            }
            for m in x_monomials(n, (deg / 2) as u32) {
                unknowns.push((r, c, m));
            }
        }
    }
    let mut rows: BTreeMap<(usize, usize, usize, Monomial), usize> = BTreeMap::new();
    let mut cols: Vec<SparseVec> = vec![SparseVec::new(); unknowns.len()];
    let add = |cols: &mut Vec<SparseVec>,
                   rows: &mut BTreeMap<(usize, usize, usize, Monomial), usize>,
                   u_idx: usize,
                   key: (usize, usize, usize, Monomial),
                   val: Rational| {
        let next = rows.len();
        let row = *rows.entry(key).or_insert(next);
        let e = cols[u_idx].entry(row).or_insert_with(Rational::zero);
        *e += val;
        if e.is_zero() {
            cols[u_idx].remove(&row);
        }
    };
    for j in 0..n {
        let xr = &tgt.right[j];
        let xs = &src.right[j];
        for (u_idx, (r, c, m)) in unknowns.iter().enumerate() {
            for (&(rr, r2), p) in &xr.entries {
                if r2 != *r {
                    continue;
                }
                for (pm, coef) in p.terms() {
                    add(&mut cols, &mut rows, u_idx, (j, rr, *c, pm.mul(m)), coef.clone());
                }
            }
            for (&(c2, cc), p) in &xs.entries {
                if c2 != *c {
                    continue;
                }
                for (pm, coef) in p.terms() {
                    add(&mut cols, &mut rows, u_idx, (j, *r, cc, pm.mul(m)), -coef.clone());
                }
            }
        }
    }
    let mut ech = ColEchelon::new();
    let mut kernel = Vec::new();
    for col in cols {
        if let Some(k) = ech.push(col) {
            kernel.push(k);
        }
    }
    kernel
        .into_iter()
        .map(|k| {
            let mut mat = SparseMat::new(tgt.gens.len(), src.gens.len());
            for (ui, coef) in k {
                let (r, c, m) = &unknowns[ui];
                mat.add_to(*r, *c, &Polynomial::from_term(m.clone(), coef));
            }
            mat
        })
        .collect()
}

struct SplitMaps {
    proj_hi: SparseMat,
    proj_lo: SparseMat,
    incl_hi: SparseMat,
    incl_lo: SparseMat,
}

/// Is the matrix a scalar multiple of the identity? Returns the scalar.
fn as_scalar_identity(m: &SparseMat) -> Option<Rational> {
    if m.rows != m.cols {
        return None;
    }
    let mut c: Option<Rational> = None;
    for (&(r, col), p) in &m.entries {
        if r != col {
            return None;
        }
        let v = p.as_scalar()?;
        match &c {
            None => c = Some(v),
            Some(prev) if *prev == v => {}
            _ => return None,
        }
    }
    if m.entries.len() == m.rows {
        c
    } else {
        None
    }
}

/// Solve the biproduct `B_i B_i = B_i (+) B_i(lower)` locally: pure linear
/// algebra plus one normalization, no search.
fn split_maps_local(n: usize, i: usize) -> Result<SplitMaps> {
    let src = word_bimodule(n, &[i, i])?;
    let hi = word_bimodule(n, &[i])?;
    let lo = Bimodule {
        n,
        gens: hi.gens.iter().map(|&(a, q)| (a, q + 2)).collect(),
        right: hi.right.clone(),
    };
    let find_pair = |tgt: &Bimodule| -> Result<(SparseMat, SparseMat)> {
        let ps = hom_word_maps(n, &src, tgt, 0);
        let is = hom_word_maps(n, tgt, &src, 0);
        for p in &ps {
            for icl in &is {
                if let Some(c) = as_scalar_identity(&p.mul(icl)) {
                    if !c.is_zero() {
                        let cinv = Rational::from_integer(1.into()) / c;
                        return Ok((p.scale(&cinv), icl.clone()));
                    }
                }
            }
        }
        Err(Error::Verification(format!(
            "no split pair found for doubled letter {} on {} strands",
            i, n
        )))
    };
    let (proj_hi, incl_hi) = find_pair(&hi)?;
    let (proj_lo, incl_lo_raw) = find_pair(&lo)?;
    // orthogonalize: incl_lo' = (1 - incl_hi proj_hi) incl_lo
    let e_hi = incl_hi.mul(&proj_hi);
    let id4 = SparseMat::identity(src.gens.len());
    let incl_lo = id4.sub(&e_hi).mul(&incl_lo_raw);
    // verify the biproduct
    let id2 = SparseMat::identity(hi.gens.len());
    if proj_hi.mul(&incl_hi) != id2
        || proj_lo.mul(&incl_lo) != id2
        || !proj_hi.mul(&incl_lo).is_zero()
        || !proj_lo.mul(&incl_hi).is_zero()
        || incl_hi.mul(&proj_hi).add(&incl_lo.mul(&proj_lo)) != id4
    {
        return Err(Error::Verification("biproduct identities failed".into()));
    }
    Ok(SplitMaps { proj_hi, proj_lo, incl_hi, incl_lo })
}

fn eval_on_right(bim: &Bimodule, p: &Polynomial) -> SparseMat {
    let rank = bim.gens.len();
    let mut out = SparseMat::new(rank, rank);
    for (m, coeff) in p.terms() {
        let mut term = SparseMat::identity(rank).scale(coeff);
        for &(v, e) in &m.0 {
            match v.kind {
                VarKind::X(0) => {
                    let mat = &bim.right[v.index as usize - 1];
                    for _ in 0..e {
                        term = mat.mul(&term);
                    }
                }
                _ => panic!("unexpected variable in local split map"),
            }
        }
        out = out.add(&term);
    }
    out
}

/// Lift a local bimodule map (between middle word pieces) through a prefix
/// word and an identity suffix: the polynomial entries act through the
/// prefix right action.
fn lift_through(prefix: &Bimodule, local: &SparseMat, suffix_rank: usize) -> SparseMat {
    let pr = prefix.gens.len();
    let rows = pr * local.rows * suffix_rank;
    let cols = pr * local.cols * suffix_rank;
    let mut out = SparseMat::new(rows, cols);
    for (&(lr, lc), p) in &local.entries {
        let action = eval_on_right(prefix, p);
        for (&(ar, ac), q) in &action.entries {
            for s in 0..suffix_rank {
                let r = (ar * local.rows + lr) * suffix_rank + s;
                let c = (ac * local.cols + lc) * suffix_rank + s;
                out.add_to(r, c, q);
            }
        }
    }
    out
}

/// Base degrees of the canonical word basis (big-endian over letters).
fn word_degrees(word: &[usize]) -> Vec<(i32, i32)> {
    let mut out = vec![(0i32, 0i32)];
    for _ in word {
        let mut next = Vec::with_capacity(out.len() * 2);
        for &(a, q) in &out {
            next.push((a, q));
            next.push((a, q + 2));
        }
        out = next;
    }
    out
}

/// Bimodule-categorical simplification: cancel identical atom pairs joined
/// by invertible scalar blocks; when stuck, split a doubled adjacent letter.
pub fn simplify_soergel(sc: &SoergelComplex) -> Result<Simplification> {
    let n = sc.complex.n;
    let mut atoms = sc.atoms.clone();
    let mut slots = sc.complex.slots.clone();
    let mut diff = sc.complex.diff.clone();
    let mut project = identity_between(&slots);
    let mut include = identity_between(&slots);

    loop {
        if let Some((s, ai, bi, c)) = find_atom_pivot(&atoms, &diff) {
            let rank = atoms[&s][ai].gens.len();
            for _ in 0..rank {
                let a = atoms[&s][ai].gens[0];
                let b = atoms[&(s - 1)][bi].gens[0];
                elim_step(&mut slots, &mut diff, &mut project, &mut include, s, b, a, &c);
                remove_gen_from_atoms(&mut atoms, s, a);
                remove_gen_from_atoms(&mut atoms, s - 1, b);
            }
            if let Some(v) = atoms.get_mut(&s) {
                v.retain(|a| !a.gens.is_empty());
            }
            if let Some(v) = atoms.get_mut(&(s - 1)) {
                v.retain(|a| !a.gens.is_empty());
            }
            atoms.retain(|_, v| !v.is_empty());
            continue;
        }
        if let Some((t, ai, pos)) = find_doubled_letter(&atoms) {
            let atom = atoms[&t][ai].clone();
            let letter = atom.word[pos];
            let local = split_maps_local(n, letter)?;
            apply_split(
                n, &mut atoms, &mut slots, &mut diff, &mut project, &mut include, t, ai, pos,
                &local,
            )?;
            continue;
        }
        break;
    }

    let right = (1..=n)
        .map(|i| {
            let op = Operator { degree: (0, 2, 0), blocks: sc.complex.right[i - 1].clone() };
            project.compose(&op).compose(&include).blocks
        })
        .collect();
    let complex = ChainComplex {
        n,
        slots,
        diff,
        right,
        curvature: sc.complex.curvature.clone(),
    };
    Ok(Simplification { complex, project, include })
}

fn remove_gen_from_atoms(atoms: &mut BTreeMap<i32, Vec<Atom>>, t: i32, gen: usize) {
    if let Some(list) = atoms.get_mut(&t) {
        for a in list.iter_mut() {
            a.gens.retain(|&g| g != gen);
            for g in a.gens.iter_mut() {
                if *g > gen {
                    *g -= 1;
                }
            }
        }
    }
}

fn find_atom_pivot(
    atoms: &BTreeMap<i32, Vec<Atom>>,
    diff: &BTreeMap<i32, SparseMat>,
) -> Option<(i32, usize, usize, Rational)> {
    for (&s, d) in diff {
        let src_atoms = atoms.get(&s)?;
        let tgt_atoms = match atoms.get(&(s - 1)) {
            Some(a) => a,
            None => continue,
        };
        for (ai, a) in src_atoms.iter().enumerate() {
            if a.gens.is_empty() {
                continue;
            }
            for (bi, b) in tgt_atoms.iter().enumerate() {
                if a.word != b.word || a.shift != b.shift || b.gens.is_empty() {
                    continue;
                }
                let mut c: Option<Rational> = None;
                let mut ok = true;
                'outer: for (kr, &gt) in b.gens.iter().enumerate() {
                    for (kc, &gs) in a.gens.iter().enumerate() {
                        let p = d.get(gt, gs);
                        if kr == kc {
                            match p.as_scalar() {
                                Some(v) if !v.is_zero() => match &c {
                                    None => c = Some(v),
                                    Some(prev) if *prev == v => {}
                                    _ => {
                                        ok = false;
                                        break 'outer;
                                    }
                                },
                                _ => {
                                    ok = false;
                                    break 'outer;
                                }
                            }
                        } else if !p.is_zero() {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
                if ok {
                    if let Some(c) = c {
                        return Some((s, ai, bi, c));
                    }
                }
            }
        }
    }
    None
}

fn find_doubled_letter(atoms: &BTreeMap<i32, Vec<Atom>>) -> Option<(i32, usize, usize)> {
    for (&t, list) in atoms {
        for (ai, a) in list.iter().enumerate() {
            for pos in 0..a.word.len().saturating_sub(1) {
                if a.word[pos] == a.word[pos + 1] {
                    return Some((t, ai, pos));
                }
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn apply_split(
    n: usize,
    atoms: &mut BTreeMap<i32, Vec<Atom>>,
    slots: &mut BTreeMap<i32, GradedFreeModule>,
    diff: &mut BTreeMap<i32, SparseMat>,
    project: &mut Operator,
    include: &mut Operator,
    t: i32,
    ai: usize,
    pos: usize,
    local: &SplitMaps,
) -> Result<()> {
    let atom = atoms[&t][ai].clone();
    let prefix: Vec<usize> = atom.word[..pos].to_vec();
    let suffix_rank = 1usize << (atom.word.len() - pos - 2);
    let prefix_bim = word_bimodule(n, &prefix)?;
    let p_hi = lift_through(&prefix_bim, &local.proj_hi, suffix_rank);
    let p_lo = lift_through(&prefix_bim, &local.proj_lo, suffix_rank);
    let i_hi = lift_through(&prefix_bim, &local.incl_hi, suffix_rank);
    let i_lo = lift_through(&prefix_bim, &local.incl_lo, suffix_rank);

    let old_rank = atom.gens.len();
    let half = old_rank / 2;
    let slot_rank = slots[&t].rank();

    // change of basis on the whole slot: u: new -> old, uinv: old -> new
    let mut u = SparseMat::new(slot_rank, slot_rank);
    let mut uinv = SparseMat::new(slot_rank, slot_rank);
    for g in 0..slot_rank {
        if !atom.gens.contains(&g) {
            u.set(g, g, Polynomial::one());
            uinv.set(g, g, Polynomial::one());
        }
    }
    for (&(r, c), p) in &i_hi.entries {
        u.add_to(atom.gens[r], atom.gens[c], p);
    }
    for (&(r, c), p) in &i_lo.entries {
        u.add_to(atom.gens[r], atom.gens[half + c], p);
    }
    for (&(r, c), p) in &p_hi.entries {
        uinv.add_to(atom.gens[r], atom.gens[c], p);
    }
    for (&(r, c), p) in &p_lo.entries {
        uinv.add_to(atom.gens[half + r], atom.gens[c], p);
    }

    if let Some(d) = diff.get_mut(&t) {
        *d = d.mul(&u);
    }
    if let Some(d) = diff.get_mut(&(t + 1)) {
        *d = uinv.mul(d);
    }

    // generator degrees of the two new copies
    let mut new_word = atom.word.clone();
    new_word.remove(pos);
    let base = word_degrees(&new_word);
    {
        let gens = &mut slots.get_mut(&t).unwrap().gens;
        for k in 0..half {
            gens[atom.gens[k]] = (0, base[k].1 - atom.shift);
            gens[atom.gens[half + k]] = (0, base[k].1 + 2 - atom.shift);
        }
    }

    let mut u_op = identity_between(slots);
    let mut uinv_op = identity_between(slots);
    u_op.blocks.insert(t, u);
    uinv_op.blocks.insert(t, uinv);
    *project = uinv_op.compose(project);
    *include = include.compose(&u_op);

    let list = atoms.get_mut(&t).unwrap();
    let hi_atom = Atom {
        word: new_word.clone(),
        shift: atom.shift,
        gens: atom.gens[..half].to_vec(),
    };
    let lo_atom = Atom {
        word: new_word,
        shift: atom.shift - 2,
        gens: atom.gens[half..].to_vec(),
    };
    list.remove(ai);
    list.push(hi_atom);
    list.push(lo_atom);
    Ok(())
}
