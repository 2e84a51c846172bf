//! Sparse vectors and row-major sparse matrices over a [`Field`].

use crate::field::Field;

/// Sorted `(column, value)` pairs; columns strictly increasing, no stored zeros.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SparseVec<E> {
    entries: Vec<(usize, E)>,
}

impl<E: Clone> SparseVec<E> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds a vector from arbitrary `(column, value)` pairs, summing duplicates
    /// and dropping zeros.
    pub fn from_pairs<F: Field<Elem = E>>(field: &F, mut pairs: Vec<(usize, E)>) -> Self {
        pairs.sort_by_key(|(c, _)| *c);
        let mut entries: Vec<(usize, E)> = Vec::with_capacity(pairs.len());
        for (c, v) in pairs {
            match entries.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = field.add(lv, &v),
                _ => entries.push((c, v)),
            }
        }
        entries.retain(|(_, v)| !field.is_zero(v));
        SparseVec { entries }
    }

    pub fn from_dense<F: Field<Elem = E>>(field: &F, dense: &[E]) -> Self {
        let entries = dense
            .iter()
            .enumerate()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(c, v)| (c, v.clone()))
            .collect();
        SparseVec { entries }
    }

    /// Wraps entries that already satisfy the invariants.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, E)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries }
    }

    pub fn entries(&self) -> &[(usize, E)] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [(usize, E)] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, E)> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest stored column.
    pub fn leading(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    pub fn get(&self, col: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, field: &F, len: usize) -> Vec<E> {
        let mut out = vec![field.zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        if field.is_zero(s) {
            return SparseVec::new();
        }
        let entries = self.entries.iter().map(|(c, v)| (*c, field.mul(v, s))).collect();
        SparseVec { entries }
    }

    /// `a * self + b * other`, merging sorted entries.
    pub fn combine<F: Field<Elem = E>>(&self, field: &F, a: &E, b: &E, other: &Self) -> Self {
        let (x, y) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let take = match (x.get(i), y.get(j)) {
                (Some((cx, _)), Some((cy, _))) => cx.cmp(cy),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match take {
                std::cmp::Ordering::Less => {
                    let v = field.mul(a, &x[i].1);
                    if !field.is_zero(&v) {
                        out.push((x[i].0, v));
                    }
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let v = field.mul(b, &y[j].1);
                    if !field.is_zero(&v) {
                        out.push((y[j].0, v));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = field.add(&field.mul(a, &x[i].1), &field.mul(b, &y[j].1));
                    if !field.is_zero(&v) {
                        out.push((x[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot<F: Field<Elem = E>>(&self, field: &F, dense: &[E]) -> E {
        self.entries
            .iter()
            .fold(field.zero(), |acc, (c, v)| field.add(&acc, &field.mul(v, &dense[*c])))
    }
}

/// Row-major sparse matrix with fixed dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    ncols: usize,
    rows: Vec<SparseVec<E>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| SparseVec::from_sorted_unchecked(vec![(i, field.one())]))
            .collect();
        SparseMatrix { ncols: n, rows }
    }

    pub fn from_dense<F: Field<Elem = E>>(field: &F, ncols: usize, dense: &[Vec<E>]) -> Self {
        let mut m = SparseMatrix::new(ncols);
        for row in dense {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            m.push_row(SparseVec::from_dense(field, row));
        }
        m
    }

    pub fn push_row(&mut self, row: SparseVec<E>) {
        if let Some(c) = row.leading() {
            assert!(c < self.ncols, "column {c} out of range {}", self.ncols);
        }
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec<E>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, E)>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.entries() {
                cols[*c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            ncols: self.rows.len(),
            rows: cols.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.ncols);
        self.rows.iter().map(|row| row.dot(field, v)).collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(mut self, other: SparseMatrix<E>) -> Self {
        assert_eq!(self.ncols, other.ncols);
        self.rows.extend(other.rows);
        self
    }

    /// Maps every entry into another field.
    pub fn map<G: Field>(&self, target: &G, f: impl Fn(&E) -> G::Elem) -> SparseMatrix<G::Elem> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                SparseVec::from_sorted_unchecked(
                    r.entries()
                        .iter()
                        .map(|(c, v)| (*c, f(v)))
                        .filter(|(_, v)| !target.is_zero(v))
                        .collect(),
                )
            })
            .collect();
        SparseMatrix { ncols: self.ncols, rows }
    }
}
