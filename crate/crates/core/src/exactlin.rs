//! Exact rational linear algebra: dense matrices, reduced row echelon
//! form, and subspaces stored by their canonical RREF basis.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += factor * v`
pub(crate) fn axpy(acc: &mut [Rational], factor: &Rational, v: &[Rational]) {
    if factor.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += factor * x;
        }
    }
}

/// Dense row-major matrix over the rationals.
///
/// Linear maps use the column convention: column `j` holds the image of
/// the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RMatrix { rows, cols, data }
    }

    /// Builds a matrix from explicit rows; `cols` fixes the width so that
    /// zero-row matrices keep their shape.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "apply: vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Stacks matrices of equal width on top of each other.
    pub fn vstack(cols: usize, parts: &[&RMatrix]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: p.cols,
                });
            }
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Ok(RMatrix { rows, cols, data })
    }

    /// Σ coeffs[i] * mats[i]; all matrices must share a shape.
    pub fn linear_combination(rows: usize, cols: usize, coeffs: &[Rational], mats: &[RMatrix]) -> Self {
        let mut out = Self::zeros(rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            assert!(m.rows == rows && m.cols == cols, "linear_combination: shape mismatch");
            axpy(&mut out.data, c, &m.data);
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &RMatrix {
    type Output = RMatrix;
    fn mul(self, rhs: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                let start = r * out.cols;
                axpy(&mut out.data[start..start + rhs.cols], a, rhs.row(k));
            }
        }
        out
    }
}

impl Add for &RMatrix {
    type Output = RMatrix;
    fn add(self, rhs: &RMatrix) -> RMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum shape mismatch");
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RMatrix {
    type Output = RMatrix;
    fn sub(self, rhs: &RMatrix) -> RMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix difference shape mismatch");
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RMatrix {
    type Output = RMatrix;
    fn neg(self) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries(self.row_vecs().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_vecs().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with zero rows dropped, plus the pivot columns.
pub fn rref(m: &RMatrix) -> (RMatrix, Vec<usize>) {
    let mut rows: Vec<Vec<Rational>> = m.row_vecs().map(<[Rational]>::to_vec).collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..m.cols {
        if next == rows.len() {
            break;
        }
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && !row[col].is_zero() {
                let f = -row[col].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    let reduced = RMatrix::from_rows(m.cols, rows).expect("rref keeps row width");
    (reduced, pivots)
}

/// Solutions of `m·x = 0` as a subspace of the column space dimension.
pub fn nullspace(m: &RMatrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vec(n, f);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, vectors).expect("nullspace vectors have ambient length")
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &RMatrix) -> Result<Option<RMatrix>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let augmented = RMatrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let (red, pivots) = rref(&augmented);
    if pivots.iter().take(n).filter(|&&p| p < n).count() < n {
        return Ok(None);
    }
    Ok(Some(RMatrix::from_fn(n, n, |r, c| red[(r, n + c)].clone())))
}

/// `true` iff `m^k = 0` where `k` is the size of `m`.
pub fn is_nilpotent_matrix(m: &RMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let k = m.rows;
    if k == 0 {
        return Ok(true);
    }
    // Repeated squaring past k is harmless: m^j = 0 for some j <= k iff m^(2^t) = 0 for 2^t >= k.
    let mut p = m.clone();
    let mut reached = 1;
    while reached < k {
        p = &p * &p;
        reached *= 2;
        if p.is_zero() {
            return Ok(true);
        }
    }
    Ok(p.is_zero())
}

/// A subspace of `Q^ambient_dim`, represented by its unique RREF basis.
/// Two subspaces are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &RMatrix) -> Self {
        let (basis, pivots) = rref(m);
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let m = RMatrix::from_rows(ambient_dim, vectors.into_iter().collect())?;
        Ok(Self::row_space(&m))
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        Self::span(ambient_dim, indices.iter().map(|&i| unit_vec(ambient_dim, i)))
            .expect("coordinate vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient_dim != n {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after elimination against the basis; zero iff `v` is a member.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_ambient(v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.row_vecs().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = -out[p].clone();
                axpy(&mut out, &f, row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let stacked = RMatrix::vstack(self.ambient_dim, &[&self.basis, &other.basis])?;
        Ok(Subspace::row_space(&stacked))
    }

    /// Intersection as the common solution set of both annihilator systems.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let ann_a = nullspace(&self.basis);
        let ann_b = nullspace(&other.basis);
        let constraints = RMatrix::vstack(self.ambient_dim, &[ann_a.basis(), ann_b.basis()])?;
        Ok(nullspace(&constraints))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check_ambient(self.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of the subspace under a linear map given in column convention.
    pub fn image_under(&self, map: &RMatrix) -> Result<Subspace> {
        self.check_ambient(map.cols())?;
        Subspace::span(map.rows(), self.basis_vectors().map(|v| map.apply(v)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .basis_vectors()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Projection onto a quotient `Q^n / d` together with a right inverse.
///
/// The quotient basis is the classes of the coordinates that are not
/// pivots of `d`, in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub projection: RMatrix,
    pub section: RMatrix,
    pub kept: Vec<usize>,
}

pub fn quotient_map(ambient_dim: usize, d: &Subspace) -> Result<QuotientMap> {
    d.check_ambient(ambient_dim)?;
    let mut is_pivot = vec![false; ambient_dim];
    for &p in d.pivots() {
        is_pivot[p] = true;
    }
    let kept: Vec<usize> = (0..ambient_dim).filter(|&i| !is_pivot[i]).collect();
    // Reducing e_j against d leaves only non-pivot coordinates.
    let columns: Vec<Vec<Rational>> = (0..ambient_dim)
        .map(|j| {
            let reduced = d.reduce(&unit_vec(ambient_dim, j)).expect("ambient checked");
            kept.iter().map(|&i| reduced[i].clone()).collect()
        })
        .collect();
    let projection = RMatrix::from_columns(kept.len(), &columns);
    let section = RMatrix::from_fn(ambient_dim, kept.len(), |r, c| {
        if kept[c] == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    Ok(QuotientMap {
        projection,
        section,
        kept,
    })
}

/// Canonical literal: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with `q > 0`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num.parse().map_err(|_| format!("invalid numerator in {s:?}"))?;
    let denom: BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid denominator in {s:?}"))?,
        None => BigInt::one(),
    };
    if !denom.is_positive() {
        return Err(format!("denominator must be positive in {s:?}"));
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&RMatrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, RMatrix::from_i64(&[&[1, 2]]));
        assert_eq!(p, vec![0]);

        let (r, p) = rref(&RMatrix::identity(3));
        assert_eq!(r, RMatrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = rref(&RMatrix::from_i64(&[&[0, 0]]));
        assert_eq!((r.rows(), r.cols()), (0, 2));
        assert!(p.is_empty());
    }

    #[test]
    fn nullspace_examples() {
        let ns = nullspace(&RMatrix::from_i64(&[&[1, 2]]));
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis().row(0), &[rat(1), ratio(-1, 2)]);

        assert!(nullspace(&RMatrix::identity(4)).is_zero());
        assert!(nullspace(&RMatrix::zeros(2, 3)).is_full());
    }

    #[test]
    fn subspace_lattice_examples() {
        let e1 = Subspace::coordinate(2, &[0]);
        let e2 = Subspace::coordinate(2, &[1]);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert!(e1.intersection(&e2).unwrap().is_zero());
        let diag = Subspace::span(2, [v(&[1, 1])]).unwrap();
        assert!(diag.contains(&v(&[1, 1])).unwrap());
        assert!(!diag.contains(&v(&[1, 0])).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.intersection(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.contains(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        // x + y + z = 0 and z = 0 meet in span{[1,-1,0]}
        let p1 = nullspace(&RMatrix::from_i64(&[&[1, 1, 1]]));
        let p2 = Subspace::coordinate(3, &[0, 1]);
        let line = p1.intersection(&p2).unwrap();
        assert_eq!(line, Subspace::span(3, [v(&[1, -1, 0])]).unwrap());
    }

    #[test]
    fn quotient_map_examples() {
        let q = quotient_map(2, &Subspace::coordinate(2, &[0])).unwrap();
        assert_eq!(q.projection, RMatrix::from_i64(&[&[0, 1]]));
        assert_eq!(q.kept, vec![1]);

        let q = quotient_map(3, &Subspace::zero(3)).unwrap();
        assert_eq!(q.projection, RMatrix::identity(3));

        // single relation e1 = e3: coordinates {0, 2, 3} survive, e1 maps to the e3 class
        let d = Subspace::span(4, [v(&[0, 1, 0, -1])]).unwrap();
        let q = quotient_map(4, &d).unwrap();
        assert_eq!(q.kept, vec![0, 2, 3]);
        assert_eq!(q.projection.column(1), v(&[0, 0, 1]));
        assert_eq!(&q.projection * &q.section, RMatrix::identity(3));
        assert!(is_zero_vec(&q.projection.apply(d.basis().row(0))));
    }

    #[test]
    fn nilpotency_examples() {
        let strict = RMatrix::from_i64(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        assert!(is_nilpotent_matrix(&strict).unwrap());
        assert!(!is_nilpotent_matrix(&RMatrix::identity(3)).unwrap());
        assert!(is_nilpotent_matrix(&RMatrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(matches!(
            is_nilpotent_matrix(&RMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        // nilpotent of index exactly 3 in size 3
        let shift = RMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(is_nilpotent_matrix(&shift).unwrap());
    }

    #[test]
    fn inverses() {
        let m = RMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap().unwrap();
        assert_eq!(&m * &inv, RMatrix::identity(2));
        assert_eq!(inverse(&RMatrix::from_i64(&[&[1, 2], &[2, 4]])).unwrap(), None);
        assert_eq!(inverse(&RMatrix::zeros(0, 0)).unwrap(), Some(RMatrix::zeros(0, 0)));
        assert!(inverse(&RMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }
}
