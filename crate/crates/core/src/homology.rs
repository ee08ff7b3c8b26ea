//! Exact integral reduced homology.
//!
//! Boundary matrices are first reduced sparsely on unit pivots; whatever
//! survives is diagonalized densely. All arithmetic is checked 64-bit and the
//! whole computation is repeated with big integers if anything overflows.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::complexes::{order_complex, Face, Poset, SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};

/// One reduced homology group: `Z^rank ⊕ Z/t1 ⊕ Z/t2 ⊕ ..`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Group {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<u64>,
}

impl Group {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Reduced homology in dimensions `-1, 0, 1, ..`; trailing zero groups are
/// trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroups {
    groups: Vec<Group>,
}

impl HomologyGroups {
    pub fn new(mut groups: Vec<Group>) -> Self {
        while groups.last().is_some_and(Group::is_zero) {
            groups.pop();
        }
        HomologyGroups { groups }
    }

    /// Free ranks only, starting in dimension 0.
    pub fn from_ranks(ranks: &[usize]) -> Self {
        let mut groups = vec![Group::default()];
        groups.extend(ranks.iter().map(|&rank| Group {
            rank,
            torsion: Vec::new(),
        }));
        Self::new(groups)
    }

    /// Reduced homology of the empty space.
    pub fn empty_space() -> Self {
        Self::new(vec![Group {
            rank: 1,
            torsion: Vec::new(),
        }])
    }

    pub fn group(&self, dim: isize) -> Group {
        if dim < -1 {
            return Group::default();
        }
        self.groups.get((dim + 1) as usize).cloned().unwrap_or_default()
    }

    pub fn rank(&self, dim: isize) -> usize {
        self.group(dim).rank
    }

    pub fn torsion(&self, dim: isize) -> Vec<u64> {
        self.group(dim).torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// Largest dimension with a nonzero group.
    pub fn top_dimension(&self) -> Option<isize> {
        (!self.groups.is_empty()).then(|| self.groups.len() as isize - 2)
    }

    /// Nonzero groups as `(dim, group)`.
    pub fn nonzero(&self) -> Vec<(isize, &Group)> {
        self.groups
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, g)| (i as isize - 1, g))
            .collect()
    }

    /// Moves every group up by `k` dimensions (`k` may be negative; groups
    /// pushed below dimension -1 are dropped).
    pub fn shifted(&self, k: isize) -> Self {
        let top = self.groups.len() as isize - 1;
        let groups = (-1..=top + k).map(|d| self.group(d - k)).collect();
        Self::new(groups)
    }

    /// `Σ (-1)^i rank H̃_i`, which equals `χ - 1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let dim = i as i64 - 1;
                if dim.rem_euclid(2) == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum()
    }

    /// Reduced homology of `X × Y` from that of `X` and `Y`.
    pub fn product(&self, other: &HomologyGroups) -> Result<HomologyGroups> {
        if self.rank(-1) > 0 || other.rank(-1) > 0 {
            return Ok(HomologyGroups::empty_space());
        }
        let unreduce = |h: &HomologyGroups| -> Vec<Group> {
            let top = h.groups.len().max(2);
            (0..top as isize - 1)
                .map(|d| {
                    let mut g = h.group(d);
                    if d == 0 {
                        g.rank += 1;
                    }
                    g
                })
                .collect()
        };
        let (a, b) = (unreduce(self), unreduce(other));
        let mut ranks = vec![0usize; a.len() + b.len()];
        let mut cyclic: Vec<Vec<u64>> = vec![Vec::new(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                ranks[i + j] += x.rank * y.rank;
                for _ in 0..x.rank {
                    cyclic[i + j].extend(&y.torsion);
                }
                for _ in 0..y.rank {
                    cyclic[i + j].extend(&x.torsion);
                }
                for &p in &x.torsion {
                    for &q in &y.torsion {
                        let g = p.gcd(&q);
                        cyclic[i + j].push(g);
                        cyclic[i + j + 1].push(g);
                    }
                }
            }
        }
        let mut groups = vec![Group::default()];
        for (d, (rank, cyc)) in ranks.into_iter().zip(cyclic).enumerate() {
            let rank = if d == 0 { rank - 1 } else { rank };
            groups.push(Group {
                rank,
                torsion: invariant_factors_u64(cyc),
            });
        }
        Ok(HomologyGroups::new(groups))
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .into_iter()
            .map(|(d, g)| format!("{d}: {g}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Turns a list of cyclic orders into invariant factors, dropping ones.
fn invariant_factors_u64(mut cyc: Vec<u64>) -> Vec<u64> {
    cyc.retain(|&c| c > 1);
    for i in 0..cyc.len() {
        for j in i + 1..cyc.len() {
            let (a, b) = (cyc[i], cyc[j]);
            let g = a.gcd(&b);
            cyc[i] = g;
            cyc[j] = a / g * b;
        }
    }
    cyc.retain(|&c| c > 1);
    cyc
}

/// Sparse integer matrix stored by columns; each column is sorted by row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let ncols = m.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| {
                (0..rows)
                    .filter(|&i| m[i][j] != 0)
                    .map(|i| (i as u32, m[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                m[i as usize][j] = v;
            }
        }
        m
    }

    /// `self * other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        let mut cols = Vec::with_capacity(other.cols.len());
        for c in &other.cols {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for &(k, b) in c {
                for &(i, a) in &self.cols[k as usize] {
                    let e = acc.entry(i).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b)?)?;
                }
            }
            let mut col: Vec<(u32, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
            col.sort_unstable();
            cols.push(col);
        }
        Some(SparseMatrix {
            rows: self.rows,
            cols,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// Free chain complex `.. -> C_1 -> C_0 -> C_{-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainComplex {
    /// `ranks[i]` is the rank of the chain group in dimension `i - 1`.
    pub ranks: Vec<usize>,
    /// `boundaries[i]` maps dimension `i - 1` to dimension `i - 2`;
    /// `boundaries[0]` is the zero map out of dimension -1.
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `∂∂ = 0`.
    pub fn validate(&self) -> Result<()> {
        if self.ranks.len() != self.boundaries.len() {
            return Err(Error::ShapeMismatch("ranks and boundaries differ in length".into()));
        }
        for (i, b) in self.boundaries.iter().enumerate() {
            let rows = if i == 0 { 0 } else { self.ranks[i - 1] };
            if b.cols.len() != self.ranks[i] || b.rows != rows {
                return Err(Error::ShapeMismatch(format!("boundary {i} has the wrong shape")));
            }
        }
        for i in 2..self.boundaries.len() {
            let prod = self.boundaries[i - 1]
                .checked_mul(&self.boundaries[i])
                .ok_or(Error::ArithmeticOverflow)?;
            if !prod.is_zero() {
                return Err(Error::ShapeMismatch(format!(
                    "boundary squared is nonzero in dimension {}",
                    i as isize - 1
                )));
            }
        }
        Ok(())
    }

    pub fn homology(&self) -> Result<HomologyGroups> {
        let mut factors = Vec::with_capacity(self.boundaries.len());
        for b in &self.boundaries {
            factors.push(matrix_invariants(b)?);
        }
        let mut groups = Vec::with_capacity(self.ranks.len());
        for i in 0..self.ranks.len() {
            let out_rank = factors[i].0;
            let (in_rank, torsion) = factors
                .get(i + 1)
                .map_or((0, Vec::new()), |(r, t)| (*r, t.clone()));
            groups.push(Group {
                rank: self.ranks[i] - out_rank - in_rank,
                torsion,
            });
        }
        Ok(HomologyGroups::new(groups))
    }
}

/// Augmented simplicial chains with the faces that index each basis.
#[derive(Clone, Debug)]
pub struct SimplicialChains {
    /// `faces[d]` lists the `d`-dimensional faces in lexicographic order.
    pub faces: Vec<Vec<Face>>,
    pub complex: ChainComplex,
}

/// `∂[v0..vk] = Σ (-1)^j [v0..v̂j..vk]`, augmented by `∂[v] = [∅]`.
pub fn chain_complex(x: &SimplicialComplex, cap: usize) -> Result<SimplicialChains> {
    let faces = x.faces(cap)?;
    let mut ranks = vec![1usize];
    let mut boundaries = vec![SparseMatrix::zero(0, 1)];
    for (d, list) in faces.iter().enumerate() {
        ranks.push(list.len());
        if d == 0 {
            boundaries.push(SparseMatrix {
                rows: 1,
                cols: vec![vec![(0, 1)]; list.len()],
            });
            continue;
        }
        let index: HashMap<&[u32], u32> = faces[d - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i as u32))
            .collect();
        let mut cols = Vec::with_capacity(list.len());
        let mut sub = Vec::with_capacity(d);
        for f in list {
            let mut col = Vec::with_capacity(d + 1);
            for skip in 0..f.len() {
                sub.clear();
                sub.extend(f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v));
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                col.push((index[sub.as_slice()], sign));
            }
            col.sort_unstable();
            cols.push(col);
        }
        boundaries.push(SparseMatrix {
            rows: faces[d - 1].len(),
            cols,
        });
    }
    Ok(SimplicialChains {
        faces,
        complex: ChainComplex { ranks, boundaries },
    })
}

pub fn reduced_homology(x: &SimplicialComplex) -> Result<HomologyGroups> {
    reduced_homology_with_cap(x, DEFAULT_FACE_CAP)
}

pub fn reduced_homology_with_cap(x: &SimplicialComplex, cap: usize) -> Result<HomologyGroups> {
    chain_complex(x, cap)?.complex.homology()
}

/// Homology of the order complex.
pub fn homology_of_poset(p: &Poset) -> Result<HomologyGroups> {
    reduced_homology(&order_complex(p, DEFAULT_FACE_CAP)?)
}

/// Outcome of a Leray check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LerayReport {
    Holds,
    /// The link of `face` has nonzero reduced homology in `dim`.
    Fails { face: Face, dim: isize },
}

impl LerayReport {
    pub fn holds(&self) -> bool {
        matches!(self, LerayReport::Holds)
    }
}

/// Checks `H̃_i(lk σ) = 0` for all `i >= n` and every face `σ`, the empty
/// face included. The void complex has no faces and holds trivially.
pub fn is_n_leray(x: &SimplicialComplex, n: usize) -> Result<LerayReport> {
    if x.is_void() {
        return Ok(LerayReport::Holds);
    }
    let mut faces: Vec<Face> = vec![Vec::new()];
    faces.extend(x.faces(DEFAULT_FACE_CAP)?.into_iter().flatten());
    for face in faces {
        let h = reduced_homology(&x.link(&face)?)?;
        if let Some((dim, _)) = h.nonzero().into_iter().find(|(d, _)| *d >= n as isize) {
            return Ok(LerayReport::Fails { face, dim });
        }
    }
    Ok(LerayReport::Holds)
}

#[derive(Debug)]
struct Overflow;

trait Coeff: Clone + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn mul(&self, other: &Self) -> std::result::Result<Self, Overflow>;
    fn sub(&self, other: &Self) -> std::result::Result<Self, Overflow>;
    /// Quotient rounding toward zero.
    fn quot(&self, other: &Self) -> Self;
    fn abs(&self) -> std::result::Result<Self, Overflow>;
    fn gcd(&self, other: &Self) -> Self;
    fn lcm(&self, other: &Self) -> std::result::Result<Self, Overflow>;
    fn to_u64(&self) -> Option<u64>;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn mul(&self, other: &Self) -> std::result::Result<Self, Overflow> {
        self.checked_mul(*other).ok_or(Overflow)
    }
    fn sub(&self, other: &Self) -> std::result::Result<Self, Overflow> {
        self.checked_sub(*other).ok_or(Overflow)
    }
    fn quot(&self, other: &Self) -> Self {
        self / other
    }
    fn abs(&self) -> std::result::Result<Self, Overflow> {
        self.checked_abs().ok_or(Overflow)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn lcm(&self, other: &Self) -> std::result::Result<Self, Overflow> {
        let g = Integer::gcd(self, other);
        (self / g).checked_mul(*other).map(i64::abs).ok_or(Overflow)
    }
    fn to_u64(&self) -> Option<u64> {
        u64::try_from(*self).ok()
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        Signed::abs(self).is_one()
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn mul(&self, other: &Self) -> std::result::Result<Self, Overflow> {
        Ok(self * other)
    }
    fn sub(&self, other: &Self) -> std::result::Result<Self, Overflow> {
        Ok(self - other)
    }
    fn quot(&self, other: &Self) -> Self {
        self / other
    }
    fn abs(&self) -> std::result::Result<Self, Overflow> {
        Ok(Signed::abs(self))
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn lcm(&self, other: &Self) -> std::result::Result<Self, Overflow> {
        Ok(Integer::lcm(self, other))
    }
    fn to_u64(&self) -> Option<u64> {
        ToPrimitive::to_u64(self)
    }
}

/// Rank and invariant factors (greater than one) of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<(usize, Vec<u64>)> {
    matrix_invariants(m)
}

fn matrix_invariants(m: &SparseMatrix) -> Result<(usize, Vec<u64>)> {
    if let Ok(r) = invariants_in::<i64>(m) {
        return r;
    }
    invariants_in::<BigInt>(m).unwrap_or(Err(Error::ArithmeticOverflow))
}

fn invariants_in<T: Coeff>(m: &SparseMatrix) -> std::result::Result<Result<(usize, Vec<u64>)>, Overflow> {
    let cols: Vec<Vec<(u32, T)>> = m
        .cols
        .iter()
        .map(|c| c.iter().map(|&(r, v)| (r, T::from_i64(v))).collect())
        .collect();
    let (unit_rank, rest) = sparse_unit_reduce(m.rows, cols)?;
    let diag = dense_diagonalize(rest)?;
    let factors = normalize_invariants(diag)?;
    let rank = unit_rank + factors.len();
    let mut torsion = Vec::new();
    for f in factors {
        if f.is_unit() {
            continue;
        }
        match f.to_u64() {
            Some(t) => torsion.push(t),
            None => return Ok(Err(Error::ArithmeticOverflow)),
        }
    }
    Ok(Ok((rank, torsion)))
}

/// Eliminates unit pivots sparsely. Returns the number of pivots and the
/// remaining nonzero submatrix in dense row-major form.
fn sparse_unit_reduce<T: Coeff>(
    rows: usize,
    mut cols: Vec<Vec<(u32, T)>>,
) -> std::result::Result<(usize, Vec<Vec<T>>), Overflow> {
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); rows];
    for (j, c) in cols.iter().enumerate() {
        for &(r, _) in c {
            row_cols[r as usize].push(j as u32);
        }
    }
    let mut col_alive = vec![true; cols.len()];
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&j| cols[j].len());
    let mut rank = 0;
    let mut scratch: Vec<(u32, T)> = Vec::new();
    loop {
        let mut progress = false;
        for &c in &order {
            if !col_alive[c] || cols[c].is_empty() {
                continue;
            }
            let pivot = cols[c]
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(r, _)| row_cols[*r as usize].len())
                .map(|(r, v)| (*r, v.clone()));
            let Some((r, u)) = pivot else { continue };
            progress = true;
            rank += 1;
            col_alive[c] = false;
            let pivot_col = std::mem::take(&mut cols[c]);
            let mut touched = std::mem::take(&mut row_cols[r as usize]);
            touched.sort_unstable();
            touched.dedup();
            for &c2 in &touched {
                let c2 = c2 as usize;
                if c2 == c || !col_alive[c2] {
                    continue;
                }
                let Ok(pos) = cols[c2].binary_search_by_key(&r, |(row, _)| *row) else {
                    continue;
                };
                // c2 -= (a * u) * pivot_col, which clears row r since u*u = 1.
                let factor = cols[c2][pos].1.mul(&u)?;
                scratch.clear();
                let (a, b) = (&cols[c2], &pivot_col);
                let (mut i, mut k) = (0, 0);
                while i < a.len() || k < b.len() {
                    let next = match (a.get(i), b.get(k)) {
                        (Some(x), Some(y)) => x.0.cmp(&y.0),
                        (Some(_), None) => Ordering::Less,
                        _ => Ordering::Greater,
                    };
                    match next {
                        Ordering::Less => {
                            scratch.push(a[i].clone());
                            i += 1;
                        }
                        Ordering::Greater => {
                            let v = T::from_i64(0).sub(&factor.mul(&b[k].1)?)?;
                            row_cols[b[k].0 as usize].push(c2 as u32);
                            scratch.push((b[k].0, v));
                            k += 1;
                        }
                        Ordering::Equal => {
                            let v = a[i].1.sub(&factor.mul(&b[k].1)?)?;
                            if !v.is_zero() {
                                scratch.push((a[i].0, v));
                            }
                            i += 1;
                            k += 1;
                        }
                    }
                }
                std::mem::swap(&mut cols[c2], &mut scratch);
            }
        }
        if !progress {
            break;
        }
    }
    let live: Vec<usize> = (0..cols.len())
        .filter(|&j| col_alive[j] && !cols[j].is_empty())
        .collect();
    let mut row_ids: Vec<u32> = live.iter().flat_map(|&j| cols[j].iter().map(|(r, _)| *r)).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    let row_pos: HashMap<u32, usize> = row_ids.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut dense = vec![vec![T::from_i64(0); live.len()]; row_ids.len()];
    for (jj, &j) in live.iter().enumerate() {
        for (r, v) in &cols[j] {
            dense[row_pos[r]][jj] = v.clone();
        }
    }
    Ok((rank, dense))
}

/// Diagonalizes by row and column operations, pivoting on the entry of
/// smallest absolute value. Returns the nonzero diagonal (absolute values).
fn dense_diagonalize<T: Coeff>(mut a: Vec<Vec<T>>) -> std::result::Result<Vec<T>, Overflow> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].cmp_abs(&a[bi][bj]) == Ordering::Less) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].quot(&p);
                for j in t..cols {
                    let v = a[i][j].sub(&q.mul(&a[t][j])?)?;
                    a[i][j] = v;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quot(&p);
                for i in t..rows {
                    let v = a[i][j].sub(&q.mul(&a[i][t])?)?;
                    a[i][j] = v;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot survived; make it the pivot.
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].cmp_abs(&a[best.0][best.1]) == Ordering::Less {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].cmp_abs(&a[best.0][best.1]) == Ordering::Less {
                    best = (t, j);
                }
            }
            let (bi, bj) = best;
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs()?);
        t += 1;
    }
    Ok(diag)
}

/// Turns a diagonal into invariant factors `d1 | d2 | ..` via gcd/lcm swaps.
fn normalize_invariants<T: Coeff>(mut d: Vec<T>) -> std::result::Result<Vec<T>, Overflow> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j])?;
            d[i] = g;
            d[j] = l;
        }
    }
    Ok(d)
}
