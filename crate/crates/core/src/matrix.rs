//! Polynomial matrices: determinants, minor ideals, Pfaffian ideals and the `G_s` test.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{parse_poly, PolyRing, Polynomial};

/// Above this size determinants switch from memoized Laplace expansion to Bareiss elimination.
const LAPLACE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    nrows: usize,
    ncols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<PolyRing>,
        nrows: usize,
        ncols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        if nrows == 0 || ncols == 0 {
            return Err(Error::Matrix("empty matrix".into()));
        }
        if nrows > 64 || ncols > 64 {
            return Err(Error::Matrix("at most 64 rows and columns".into()));
        }
        if entries.len() != nrows * ncols {
            return Err(Error::Matrix(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !PolyRing::same(e.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            nrows,
            ncols,
            entries,
        })
    }

    /// Rows separated by `;`, entries by `,`: `"x, y; z, w"`.
    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Self> {
        let rows: Vec<Vec<Polynomial>> = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| parse_poly(e, ring))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Matrix("rows have different lengths".into()));
        }
        let nrows = rows.len();
        PolyMatrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.ncols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.ncols {
            for i in 0..self.nrows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            nrows: self.ncols,
            ncols: self.nrows,
            entries,
        }
    }

    /// Square, skew-symmetric, zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|i| {
                self.get(i, i).is_zero()
                    && (0..i).all(|j| (self.get(i, j) + self.get(j, i)).is_zero())
            })
    }

    /// Add `factor` times row `src` to row `dst`.
    pub fn add_row_multiple(&self, dst: usize, src: usize, factor: &Polynomial) -> PolyMatrix {
        let mut out = self.clone();
        for j in 0..self.ncols {
            let v = self.get(dst, j) + &(factor * self.get(src, j));
            out.entries[dst * self.ncols + j] = v;
        }
        out
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.nrows != self.ncols {
            return Err(Error::Matrix("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.nrows).collect();
        if self.nrows <= LAPLACE_LIMIT {
            Ok(self.minor_laplace(&idx, &idx, &mut HashMap::new()))
        } else {
            Ok(self.minor_bareiss(&idx, &idx))
        }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det_laplace(&self) -> Result<Polynomial> {
        if self.nrows != self.ncols {
            return Err(Error::Matrix("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.nrows).collect();
        Ok(self.minor_laplace(&idx, &idx, &mut HashMap::new()))
    }

    /// Determinant by fraction-free Gaussian elimination.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        if self.nrows != self.ncols {
            return Err(Error::Matrix("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.nrows).collect();
        Ok(self.minor_bareiss(&idx, &idx))
    }

    fn minor_laplace(
        &self,
        rows: &[usize],
        cols: &[usize],
        memo: &mut HashMap<(u64, u64), Polynomial>,
    ) -> Polynomial {
        match rows.len() {
            0 => return Polynomial::one(&self.ring),
            1 => return self.get(rows[0], cols[0]).clone(),
            _ => {}
        }
        let key = (mask(rows), mask(cols));
        if let Some(d) = memo.get(&key) {
            return d.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut sub_cols = Vec::with_capacity(cols.len() - 1);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(rows[0], c);
            if a.is_zero() {
                continue;
            }
            sub_cols.clear();
            sub_cols.extend(cols.iter().copied().filter(|&x| x != c));
            let sub = self.minor_laplace(&rows[1..], &sub_cols, memo);
            let term = a * &sub;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        memo.insert(key, acc.clone());
        acc
    }

    fn minor_bareiss(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let n = rows.len();
        let mut m: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Polynomial::zero(&self.ring),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// All `t x t` minors, ordered by (row subset, column subset) lexicographically.
    pub fn minors(&self, t: usize) -> Result<Vec<Polynomial>> {
        if t == 0 || t > self.nrows.min(self.ncols) {
            return Err(Error::OutOfRange(format!(
                "minor size {t} for a {}x{} matrix",
                self.nrows, self.ncols
            )));
        }
        let row_sets = combinations(self.nrows, t);
        let col_sets = combinations(self.ncols, t);
        let mut memo = HashMap::new();
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(if t <= LAPLACE_LIMIT {
                    self.minor_laplace(r, c, &mut memo)
                } else {
                    self.minor_bareiss(r, c)
                });
            }
        }
        Ok(out)
    }

    /// Pfaffian of an alternating matrix of even size, expanded along the first row.
    pub fn pfaffian(&self) -> Result<Polynomial> {
        if !self.is_alternating() {
            return Err(Error::Matrix("Pfaffian of a non-alternating matrix".into()));
        }
        if self.nrows % 2 == 1 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let idx: Vec<usize> = (0..self.nrows).collect();
        Ok(self.pfaffian_of(&idx, &mut HashMap::new()))
    }

    fn pfaffian_of(&self, idx: &[usize], memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        if idx.is_empty() {
            return Polynomial::one(&self.ring);
        }
        let key = mask(idx);
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut rest = Vec::with_capacity(idx.len() - 2);
        for j in 1..idx.len() {
            let a = self.get(idx[0], idx[j]);
            if a.is_zero() {
                continue;
            }
            rest.clear();
            rest.extend(idx[1..].iter().copied().filter(|&x| x != idx[j]));
            let term = a * &self.pfaffian_of(&rest, memo);
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        memo.insert(key, acc.clone());
        acc
    }

    /// Pfaffians of all principal `size x size` submatrices, ordered by index subset.
    pub fn pfaffians(&self, size: usize) -> Result<Vec<Polynomial>> {
        if !self.is_alternating() {
            return Err(Error::Matrix("matrix is not alternating".into()));
        }
        if size == 0 || size % 2 == 1 {
            return Err(Error::Matrix(format!("Pfaffian size {size} must be even and positive")));
        }
        if size > self.nrows {
            return Err(Error::OutOfRange(format!(
                "Pfaffian size {size} exceeds {}",
                self.nrows
            )));
        }
        let mut memo = HashMap::new();
        Ok(combinations(self.nrows, size)
            .iter()
            .map(|s| self.pfaffian_of(s, &mut memo))
            .collect())
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.ncols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The ideal `I_t(M)` of `t x t` minors.
pub fn minor_ideal(m: &PolyMatrix, t: usize) -> Result<Ideal> {
    Ok(Ideal::new(m.ring(), m.minors(t)?)?.minimized())
}

/// The ideal of `size x size` principal Pfaffians of an alternating matrix.
pub fn pfaffian_ideal(m: &PolyMatrix, size: usize) -> Result<Ideal> {
    Ideal::new(m.ring(), m.pfaffians(size)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsRow {
    /// The local dimension bound being tested.
    pub i: usize,
    /// Size of the minors whose ideal is `Fitt_i(I)`: `n - i` for an `n`-rowed presentation.
    pub minor_size: usize,
    /// Height of `Fitt_i(I) + I`; `None` when that ideal is the unit ideal.
    pub height: Option<usize>,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsReport {
    pub holds: bool,
    pub rows: Vec<GsRow>,
}

/// Test condition `G_s` from a presentation matrix.
///
/// With `phi` an `n`-rowed presentation of `I = (f_1, ..., f_n)`, the Fitting ideal
/// `Fitt_i(I) = I_{n-i}(phi)` cuts out the primes where `I` needs more than `i` generators
/// locally. `G_s` asks `mu(I_p) <= dim R_p` whenever `dim R_p <= s - 1`, which holds iff
/// `ht(I_{n-i}(phi) + I) > i` for `1 <= i <= s - 1`. Minor ideals of size above the matrix
/// bounds are zero; those of size `<= 0` are the unit ideal.
///
/// The caller vouches that `phi` really presents the given generators.
pub fn g_s_check(ideal: &Ideal, phi: &PolyMatrix, s: usize) -> Result<GsReport> {
    if !PolyRing::same(ideal.ring(), phi.ring()) {
        return Err(Error::RingMismatch);
    }
    let n = ideal.gens().len();
    if phi.nrows() != n {
        return Err(Error::Matrix(format!(
            "presentation has {} rows but the ideal has {n} generators",
            phi.nrows()
        )));
    }
    let mut rows = Vec::new();
    for i in 1..s {
        let minor_size = n.saturating_sub(i);
        let (height, passes) = if minor_size == 0 {
            (None, true)
        } else {
            let fitting = if minor_size > phi.nrows().min(phi.ncols()) {
                Ideal::zero(phi.ring())
            } else {
                minor_ideal(phi, minor_size)?
            };
            let total = fitting.sum(ideal)?;
            if total.is_unit() {
                (None, true)
            } else {
                let h = total.height()?;
                (Some(h), h > i)
            }
        };
        rows.push(GsRow {
            i,
            minor_size,
            height,
            passes,
        });
    }
    Ok(GsReport {
        holds: rows.iter().all(|r| r.passes),
        rows,
    })
}
