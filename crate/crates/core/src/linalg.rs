//! Sparse row echelon forms over an arbitrary [`Field`].
//!
//! Every stored row is monic in its largest column, which is its pivot. Reduction
//! therefore always eliminates the largest surviving column first, and the free
//! columns of a row space are the lexicographically smallest complement.

use std::collections::BTreeMap;

use crate::qfield::Field;

/// Sparse vector as `(index, coefficient)` pairs with strictly increasing indices and
/// no zero coefficients.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn to_map<F: Field>(v: &[(usize, F)]) -> BTreeMap<usize, F> {
    let mut m = BTreeMap::new();
    for (i, c) in v {
        add_into(&mut m, *i, c);
    }
    m
}

pub fn from_map<F: Field>(m: BTreeMap<usize, F>) -> SparseVec<F> {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn add_into<F: Field>(m: &mut BTreeMap<usize, F>, i: usize, c: &F) {
    if c.is_zero() {
        return;
    }
    match m.entry(i) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale<F: Field>(v: &[(usize, F)], c: &F) -> SparseVec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, a.mul(c))).collect()
}

#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    pivot_of: Vec<Option<u32>>,
    rows: Vec<SparseVec<F>>,
    reduced: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_of: vec![None; ncols],
            rows: Vec::new(),
            reduced: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_of[c].is_some()
    }

    pub fn pivot_row(&self, c: usize) -> Option<&SparseVec<F>> {
        self.pivot_of[c].map(|r| &self.rows[r as usize])
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce_map(&self, v: &mut BTreeMap<usize, F>) {
        let mut upper = usize::MAX;
        loop {
            let next = v.range(..upper).next_back().map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            upper = k;
            if let Some(r) = self.pivot_of[k] {
                let row = &self.rows[r as usize];
                for (j, a) in row {
                    add_into(v, *j, &a.mul(&c).neg());
                }
                debug_assert!(!v.contains_key(&k));
            }
        }
    }

    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut m = to_map(v);
        self.reduce_map(&mut m);
        from_map(m)
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Reduces `v` and, if something survives, appends it as a new pivot row.
    pub fn insert_map(&mut self, mut v: BTreeMap<usize, F>) -> bool {
        self.reduce_map(&mut v);
        let Some((&lead, c)) = v.iter().next_back() else {
            return false;
        };
        let inv = c.inv();
        let row: SparseVec<F> = v.into_iter().map(|(j, a)| (j, a.mul(&inv))).collect();
        self.pivot_of[lead] = Some(self.rows.len() as u32);
        self.rows.push(row);
        self.reduced = false;
        true
    }

    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        self.insert_map(to_map(v))
    }

    /// Back-substitution: afterwards every row has only free columns besides its pivot.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        for p in self.pivots() {
            let r = self.pivot_of[p].unwrap() as usize;
            let mut row = std::mem::take(&mut self.rows[r]);
            let lead = row.pop().expect("pivot row is nonempty");
            let mut m = to_map(&row);
            self.reduce_map(&mut m);
            let mut row = from_map(m);
            row.push(lead);
            self.rows[r] = row;
        }
        self.reduced = true;
    }

    /// Basis of `{x : row . x = 0 for all rows}` indexed by free columns.
    pub fn nullspace(&mut self) -> Vec<SparseVec<F>> {
        self.make_reduced();
        let free = self.free_columns();
        let mut cols: BTreeMap<usize, Vec<(usize, F)>> =
            free.iter().map(|&f| (f, Vec::new())).collect();
        for p in self.pivots() {
            let row = self.pivot_row(p).unwrap();
            for (j, a) in &row[..row.len() - 1] {
                cols.get_mut(j).unwrap().push((p, a.neg()));
            }
        }
        cols.into_iter()
            .map(|(f, mut v)| {
                v.push((f, F::one()));
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(ncols: usize, vs: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{Fp, QScalar};

    fn q(v: i64) -> QScalar {
        QScalar::from_int(v)
    }

    #[test]
    fn pivots_are_largest_columns() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[(0, q(1)), (2, q(2))]));
        assert!(e.insert(&[(1, q(1)), (2, q(1))]));
        assert!(!e.insert(
            &[(0, q(1)), (1, q(-2)), (2, q(0))]
                .iter()
                .filter(|x| !x.1.is_zero())
                .cloned()
                .collect::<Vec<_>>()
        ));
        assert_eq!(e.pivots(), vec![1, 2]);
        e.make_reduced();
        // x2 = -x0/2, x1 = -x2 = x0/2
        assert_eq!(e.pivot_row(2).unwrap()[0].0, 0);
        assert_eq!(e.pivot_row(1).unwrap().len(), 2);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], (0, q(1)));
    }

    #[test]
    fn nullspace_annihilates_rows() {
        let rows: Vec<SparseVec<Fp>> = vec![
            vec![(0, Fp(3)), (1, Fp(5)), (4, Fp(1))],
            vec![(1, Fp(2)), (3, Fp(7))],
            vec![(0, Fp(6)), (1, Fp(12)), (3, Fp(7)), (4, Fp(2))],
        ];
        let mut e = Echelon::new(5);
        for r in &rows {
            e.insert(r);
        }
        assert_eq!(e.rank(), 2);
        for k in e.nullspace() {
            for r in &rows {
                let mut s = Fp(0);
                for (i, a) in r {
                    if let Some((_, b)) = k.iter().find(|(j, _)| j == i) {
                        s = Fp::add(s, Fp::mul(*a, *b));
                    }
                }
                assert_eq!(s, Fp(0));
            }
        }
    }
}
