use super::{Field, Scalar, Vector};

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(field: Field, len: usize, v: &[(usize, Scalar)]) -> Vector {
    let mut out = vec![field.zero(); len];
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

/// Sorts by index, merges repeated indices and drops zeros.
pub fn normalize_sparse(mut row: SparseVec) -> SparseVec {
    row.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(row.len());
    for (i, c) in row {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `a - c * b` for sorted sparse vectors.
fn sub_scaled(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) if ia == ib => {
                let v = va - &(c * vb);
                if !v.is_zero() {
                    out.push((*ia, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ia, va)), Some((ib, _))) if ia < ib => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (_, Some((ib, vb))) => {
                out.push((*ib, -(c * vb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incremental row echelon form over sparse rows.
///
/// Rows are inserted in order; each stored row has leading coefficient 1 and
/// its leading column is unique. Pivoting is deterministic: a row becomes the
/// pivot of its leading column the first time that column is reached.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_of: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_of: vec![None; ncols] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_of[col].map(|r| &self.rows[r as usize])
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of[col].is_some()
    }

    /// Leading column of every stored row, in insertion order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| self.pivot_of[*c].is_none()).collect()
    }

    /// Reduces the row's leading entries away; returns the leftover (empty when
    /// the row lies in the span).
    pub fn reduce_sparse(&self, mut row: SparseVec) -> SparseVec {
        let mut start = 0;
        loop {
            let pos = row[start..].iter().position(|(c, _)| self.pivot_of[*c].is_some());
            let Some(off) = pos else { return row };
            let k = start + off;
            let (col, coef) = row[k].clone();
            let prow = &self.rows[self.pivot_of[col].unwrap() as usize];
            row = sub_scaled(&row, &coef, prow);
            start = k;
            if start >= row.len() {
                return row;
            }
        }
    }

    /// Inserts a row; returns `true` when the rank grew.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let mut row = row;
        loop {
            let Some((lead, coef)) = row.first().cloned() else { return false };
            match self.pivot_of[lead] {
                Some(r) => {
                    let prow = &self.rows[r as usize];
                    row = sub_scaled(&row, &coef, prow);
                }
                None => {
                    if !coef.is_one() {
                        let inv = coef.inv();
                        for (_, v) in row.iter_mut() {
                            *v *= &inv;
                        }
                    }
                    self.pivot_of[lead] = Some(self.rows.len() as u32);
                    self.rows.push(row);
                    return true;
                }
            }
        }
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        self.insert(sparse_from_dense(row))
    }

    /// Reduces a dense vector in place so that it vanishes on every pivot
    /// column; returns the multiples of each stored row that were removed.
    pub fn reduce_dense_tracked(&self, x: &mut [Scalar]) -> Vec<(usize, Scalar)> {
        let mut used = Vec::new();
        for col in 0..self.ncols {
            if x[col].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_of[col] {
                let c = x[col].clone();
                for (j, v) in &self.rows[r as usize] {
                    x[*j] -= &(&c * v);
                }
                used.push((r as usize, c));
            }
        }
        used
    }

    pub fn reduce_dense(&self, x: &mut [Scalar]) {
        for col in 0..self.ncols {
            if x[col].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_of[col] {
                let c = x[col].clone();
                for (j, v) in &self.rows[r as usize] {
                    x[*j] -= &(&c * v);
                }
            }
        }
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        let mut y = x.to_vec();
        self.reduce_dense(&mut y);
        y.iter().all(Scalar::is_zero)
    }

    /// Back-substitutes so that every pivot column is zero outside its pivot
    /// row (reduced row echelon form). Rows are reordered by pivot column.
    pub fn into_reduced(mut self) -> Echelon {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        // Reduce from the last pivot upward: rows with larger leads are final first.
        for idx in (0..order.len()).rev() {
            let r = order[idx];
            let mut row = std::mem::take(&mut self.rows[r]);
            let mut k = 1;
            while k < row.len() {
                let (col, coef) = row[k].clone();
                match self.pivot_of[col] {
                    Some(p) if p as usize != r => {
                        row = sub_scaled(&row, &coef, &self.rows[p as usize]);
                    }
                    _ => k += 1,
                }
            }
            self.rows[r] = row;
        }
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut pivot_of = vec![None; self.ncols];
        for r in order {
            pivot_of[self.rows[r][0].0] = Some(rows.len() as u32);
            rows.push(std::mem::take(&mut self.rows[r]));
        }
        Echelon { field: self.field, ncols: self.ncols, rows, pivot_of }
    }

    /// Basis of the null space of the inserted rows, one vector per free
    /// column. Requires reduced form.
    pub fn kernel_basis_reduced(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        for f in self.free_cols() {
            let mut v = vec![self.field.zero(); self.ncols];
            v[f] = self.field.one();
            out.push(v);
        }
        // v[pivot] = -row[f]
        let col_of_free: Vec<Option<usize>> = {
            let mut m = vec![None; self.ncols];
            for (k, f) in self.free_cols().into_iter().enumerate() {
                m[f] = Some(k);
            }
            m
        };
        for row in &self.rows {
            let lead = row[0].0;
            for (c, v) in &row[1..] {
                if let Some(k) = col_of_free[*c] {
                    out[k][lead] = -v;
                }
            }
        }
        out
    }

    /// Rows as dense vectors.
    pub fn dense_rows(&self) -> Vec<Vector> {
        self.rows.iter().map(|r| dense_from_sparse(self.field, self.ncols, r)).collect()
    }
}
