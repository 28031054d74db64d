//! Left Leibniz algebras given by structure constants, and the structural
//! subspaces (Leibniz kernel, centre, left annihilator, series) computed
//! from them.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, quotient_map, unit_vec, zero_vec, RMatrix, Rational, Subspace};

/// Algebra on basis `e_0..e_{n-1}` with `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    constants: Vec<Rational>,
    name: Option<String>,
}

/// One failing instance of `e_i(e_j e_k) = (e_i e_j)e_k + e_j(e_i e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `e_i(e_j e_k) - (e_i e_j)e_k - e_j(e_i e_k)`
    pub residual: Vec<Rational>,
}

impl LeibnizAlgebra {
    /// The abelian algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra {
            dim,
            constants: zero_vec(dim * dim * dim),
            name: None,
        }
    }

    pub fn from_products<I>(dim: usize, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut alg = Self::abelian(dim);
        for (i, j, k, c) in products {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            alg.set_constant(i, j, k, c);
        }
        Ok(alg)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[self.offset(i, j, k)]
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        let o = self.offset(i, j, k);
        self.constants[o] = c;
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = self.offset(i, j, 0);
        &self.constants[start..start + self.dim]
    }

    /// Nonzero structure constants in `(i, j, k)` lexicographic order.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim;
        self.constants
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(o, c)| (o / (n * n), (o / n) % n, o % n, c))
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Bilinear product of two coordinate tuples.
    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.product(u, v))
    }

    pub(crate) fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(ui * vj), self.basis_product(i, j));
            }
        }
        out
    }

    /// Every failing basis triple of the left Leibniz identity.
    pub fn check_leibniz(&self) -> Vec<LeibnizViolation> {
        let n = self.dim;
        let minus_one = -Rational::one();
        let mut out = Vec::new();
        for i in 0..n {
            let ei = unit_vec(n, i);
            for j in 0..n {
                let ej = unit_vec(n, j);
                let eiej = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let ek = unit_vec(n, k);
                    let mut residual = self.product(&ei, self.basis_product(j, k));
                    axpy(&mut residual, &minus_one, &self.product(&eiej, &ek));
                    axpy(&mut residual, &minus_one, &self.product(&ej, self.basis_product(i, k)));
                    if !is_zero_vec(&residual) {
                        out.push(LeibnizViolation { i, j, k, residual });
                    }
                }
            }
        }
        out
    }

    pub fn is_leibniz(&self) -> bool {
        self.check_leibniz().is_empty()
    }

    /// Matrix of `x ↦ e_i x`; column `j` is `e_i e_j`.
    pub fn left_mult(&self, i: usize) -> Result<RMatrix> {
        self.check_index(i)?;
        let n = self.dim;
        Ok(RMatrix::from_fn(n, n, |k, j| self.constant(i, j, k).clone()))
    }

    /// Matrix of `x ↦ x e_i`; column `j` is `e_j e_i`.
    pub fn right_mult(&self, i: usize) -> Result<RMatrix> {
        self.check_index(i)?;
        let n = self.dim;
        Ok(RMatrix::from_fn(n, n, |k, j| self.constant(j, i, k).clone()))
    }

    pub fn left_mults(&self) -> Vec<RMatrix> {
        (0..self.dim).map(|i| self.left_mult(i).expect("in range")).collect()
    }

    pub fn right_mults(&self) -> Vec<RMatrix> {
        (0..self.dim).map(|i| self.right_mult(i).expect("in range")).collect()
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult_of(&self, x: &[Rational]) -> Result<RMatrix> {
        self.check_len(x)?;
        Ok(RMatrix::linear_combination(self.dim, self.dim, x, &self.left_mults()))
    }

    pub fn right_mult_of(&self, x: &[Rational]) -> Result<RMatrix> {
        self.check_len(x)?;
        Ok(RMatrix::linear_combination(self.dim, self.dim, x, &self.right_mults()))
    }

    /// Span of all `x y` with `x` in `s` and `y` in `t`.
    pub fn product_space(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        self.check_subspace(t)?;
        let mut vecs = Vec::new();
        for x in s.basis_vectors() {
            for y in t.basis_vectors() {
                vecs.push(self.product(x, y));
            }
        }
        Subspace::span(self.dim, vecs)
    }

    /// `Leib(L)`: the span of all squares.
    pub fn leibniz_kernel(&self) -> Subspace {
        let n = self.dim;
        let mut vecs = Vec::new();
        for i in 0..n {
            vecs.push(self.basis_product(i, i).to_vec());
            for j in i + 1..n {
                let mut v = self.basis_product(i, j).to_vec();
                axpy(&mut v, &Rational::one(), self.basis_product(j, i));
                vecs.push(v);
            }
        }
        Subspace::span(n, vecs).expect("products have ambient length")
    }

    /// Joint kernel of `x ↦ Σ x_i M_i` over the given matrix families.
    fn joint_kernel(&self, families: &[&[RMatrix]]) -> Subspace {
        let n = self.dim;
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                families
                    .iter()
                    .flat_map(|fam| fam[i].entries().iter().cloned())
                    .collect()
            })
            .collect();
        let height = families.len() * n * n;
        crate::exactlin::nullspace(&RMatrix::from_columns(height, &columns))
    }

    /// Two-sided annihilator `{x | xL = 0 and Lx = 0}`.
    pub fn centre(&self) -> Subspace {
        self.joint_kernel(&[&self.left_mults(), &self.right_mults()])
    }

    /// `{x | xL = 0}`.
    pub fn left_annihilator(&self) -> Subspace {
        self.joint_kernel(&[&self.left_mults()])
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let full = Subspace::full(self.dim);
        Ok(self.product_space(&full, s)?.is_subspace_of(s)? && self.product_space(s, &full)?.is_subspace_of(s)?)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.product_space(s, s)?.is_subspace_of(s)
    }

    /// Algebra induced on `L / ideal`, with the projection as a morphism.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, AlgebraMorphism)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let q = quotient_map(self.dim, ideal)?;
        let qd = q.kept.len();
        let mut out = LeibnizAlgebra::abelian(qd);
        for a in 0..qd {
            for b in 0..qd {
                let prod = q.projection.apply(self.basis_product(q.kept[a], q.kept[b]));
                for (k, c) in prod.into_iter().enumerate() {
                    out.set_constant(a, b, k, c);
                }
            }
        }
        let proj = AlgebraMorphism::new(self.dim, qd, q.projection)?;
        proj.ensure_multiplicative(self, &out)?;
        Ok((out, proj))
    }

    /// The product restricted to `s`, written in the RREF basis of `s`.
    pub fn subalgebra_on(&self, s: &Subspace) -> Result<(LeibnizAlgebra, AlgebraMorphism)> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra);
        }
        let k = s.dim();
        let mut out = LeibnizAlgebra::abelian(k);
        let basis: Vec<&[Rational]> = s.basis_vectors().collect();
        for a in 0..k {
            for b in 0..k {
                let prod = self.product(basis[a], basis[b]);
                let coords = s
                    .coordinates(&prod)?
                    .ok_or_else(|| Error::Internal("subalgebra product left the subspace".into()))?;
                for (c, x) in coords.into_iter().enumerate() {
                    out.set_constant(a, b, c, x);
                }
            }
        }
        let incl = AlgebraMorphism::new(k, self.dim, s.basis().transpose())?;
        incl.ensure_multiplicative(&out, self)?;
        Ok((out, incl))
    }

    /// Smallest two-sided ideal of the subalgebra `within` containing `s`.
    pub fn ideal_closure_within(&self, within: &Subspace, s: &Subspace) -> Result<Subspace> {
        let mut cur = s.clone();
        loop {
            let grown = cur
                .sum(&self.product_space(within, &cur)?)?
                .sum(&self.product_space(&cur, within)?)?;
            if grown.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = grown;
        }
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.ideal_closure_within(&Subspace::full(self.dim), s)
    }

    /// Decides subnormality of the subalgebra `u` with the descending
    /// ideal-closure series `L_0 = L`, `L_{i+1}` = ideal closure of `u` in `L_i`.
    ///
    /// On success the chain is returned ascending, from `u` up to `L`.
    /// On failure the series computed so far is returned, also ascending.
    pub fn is_subnormal(&self, u: &Subspace) -> Result<(bool, Vec<Subspace>)> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotSubalgebra);
        }
        let mut series = vec![Subspace::full(self.dim)];
        for _ in 0..=self.dim {
            let cur = series.last().expect("nonempty");
            if cur == u {
                series.reverse();
                return Ok((true, series));
            }
            let next = self.ideal_closure_within(cur, u)?;
            if &next == cur {
                break;
            }
            series.push(next);
        }
        series.reverse();
        Ok((false, series))
    }

    /// `L^1 = L`, `L^{k+1} = L·L^k + L^k·L`, stopping once a term repeats.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self
                .product_space(&full, last)
                .and_then(|a| a.sum(&self.product_space(last, &full)?))
                .expect("dimensions agree");
            if &next == last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_nilpotent_algebra(&self) -> bool {
        self.lower_central_series().last().map_or(true, Subspace::is_zero)
    }

    /// `e_i e_j = -e_j e_i` for all basis pairs (and so `x^2 = 0` throughout).
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                self.basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }
}

/// Linear map between algebras, matrix in column convention
/// (`target_dim × source_dim`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source_dim: usize,
    target_dim: usize,
    matrix: RMatrix,
}

impl AlgebraMorphism {
    pub fn new(source_dim: usize, target_dim: usize, matrix: RMatrix) -> Result<Self> {
        if matrix.cols() != source_dim {
            return Err(Error::DimensionMismatch {
                expected: source_dim,
                found: matrix.cols(),
            });
        }
        if matrix.rows() != target_dim {
            return Err(Error::DimensionMismatch {
                expected: target_dim,
                found: matrix.rows(),
            });
        }
        Ok(AlgebraMorphism {
            source_dim,
            target_dim,
            matrix,
        })
    }

    pub fn identity(dim: usize) -> Self {
        AlgebraMorphism {
            source_dim: dim,
            target_dim: dim,
            matrix: RMatrix::identity(dim),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.apply(v)
    }

    /// `φ(e_i)`
    pub fn image_of_basis(&self, i: usize) -> Vec<Rational> {
        self.matrix.column(i)
    }

    pub fn image(&self) -> Subspace {
        Subspace::row_space(&self.matrix.transpose())
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source_dim
    }

    /// Basis pairs `(i, j)` with `φ(e_i e_j) ≠ φ(e_i)φ(e_j)`.
    pub fn multiplicativity_failures(&self, source: &LeibnizAlgebra, target: &LeibnizAlgebra) -> Vec<(usize, usize)> {
        assert_eq!(source.dim(), self.source_dim, "source algebra dimension");
        assert_eq!(target.dim(), self.target_dim, "target algebra dimension");
        let images: Vec<Vec<Rational>> = (0..self.source_dim).map(|i| self.image_of_basis(i)).collect();
        let mut bad = Vec::new();
        for i in 0..self.source_dim {
            for j in 0..self.source_dim {
                let lhs = self.apply(source.basis_product(i, j));
                let rhs = target.product(&images[i], &images[j]);
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    pub fn ensure_multiplicative(&self, source: &LeibnizAlgebra, target: &LeibnizAlgebra) -> Result<()> {
        if source.dim() != self.source_dim || target.dim() != self.target_dim {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim,
                found: source.dim(),
            });
        }
        match self.multiplicativity_failures(source, target).first() {
            None => Ok(()),
            Some((i, j)) => Err(Error::NotMultiplicative(format!("fails on basis pair ({i}, {j})"))),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        AlgebraMorphism::new(self.source_dim, next.target_dim, &next.matrix * &self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::fixtures;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn multiply_leib2() {
        let l = fixtures::leib2();
        assert_eq!(l.multiply(&v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[0, 1]));
        assert_eq!(l.multiply(&v(&[1, 1]), &v(&[1, 0])).unwrap(), v(&[0, 1]));
        assert_eq!(l.multiply(&v(&[0, 0]), &v(&[3, -2])).unwrap(), v(&[0, 0]));
        assert!(l.multiply(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn leibniz_identity_checks() {
        assert!(LeibnizAlgebra::abelian(3).check_leibniz().is_empty());
        assert!(fixtures::leib2().check_leibniz().is_empty());
        let bad = fixtures::idempotent1();
        let viol = bad.check_leibniz();
        assert_eq!(viol.len(), 1);
        assert_eq!((viol[0].i, viol[0].j, viol[0].k), (0, 0, 0));
        // e0(e0e0) = e0 against (e0e0)e0 + e0(e0e0) = 2e0
        assert_eq!(viol[0].residual, v(&[-1]));
    }

    #[test]
    fn multiplication_operators() {
        let l = fixtures::leib2();
        let shift = RMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(l.left_mult(0).unwrap(), shift);
        assert_eq!(l.right_mult(0).unwrap(), shift);
        assert!(l.right_mult(1).unwrap().is_zero());
        assert!(matches!(l.left_mult(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn structural_subspaces() {
        let e1 = Subspace::coordinate(2, &[1]);
        let leib2 = fixtures::leib2();
        assert_eq!(leib2.leibniz_kernel(), e1);
        assert_eq!(leib2.centre(), e1);
        assert_eq!(leib2.left_annihilator(), e1);

        let r2 = fixtures::lie_r2();
        assert!(r2.leibniz_kernel().is_zero());
        assert!(r2.centre().is_zero());
        assert!(r2.left_annihilator().is_zero());

        let ab = LeibnizAlgebra::abelian(2);
        assert!(ab.leibniz_kernel().is_zero());
        assert!(ab.centre().is_full());
        assert!(ab.left_annihilator().is_full());
    }

    #[test]
    fn ideals_and_subalgebras() {
        let leib2 = fixtures::leib2();
        assert!(leib2.is_ideal(&leib2.leibniz_kernel()).unwrap());
        let r2 = fixtures::lie_r2();
        let e0 = Subspace::coordinate(2, &[0]);
        assert!(r2.is_subalgebra(&e0).unwrap());
        assert!(!r2.is_ideal(&e0).unwrap());
        assert!(r2.is_ideal(&Subspace::full(2)).unwrap());
    }

    #[test]
    fn quotients() {
        let leib2 = fixtures::leib2();
        let (q, proj) = leib2.quotient_algebra(&Subspace::coordinate(2, &[1])).unwrap();
        assert_eq!(q, LeibnizAlgebra::abelian(1));
        assert_eq!(proj.matrix(), &RMatrix::from_i64(&[&[1, 0]]));

        let r2 = fixtures::lie_r2();
        let (q, proj) = r2.quotient_algebra(&Subspace::zero(2)).unwrap();
        assert_eq!(q, r2.clone().without_name());
        assert_eq!(proj.matrix(), &RMatrix::identity(2));
        let (q, _) = r2.quotient_algebra(&Subspace::full(2)).unwrap();
        assert_eq!(q.dim(), 0);

        assert!(matches!(
            r2.quotient_algebra(&Subspace::coordinate(2, &[0])),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn subalgebras() {
        let r2 = fixtures::lie_r2();
        let (s, incl) = r2.subalgebra_on(&Subspace::coordinate(2, &[0])).unwrap();
        assert_eq!(s, LeibnizAlgebra::abelian(1));
        assert_eq!(incl.matrix(), &RMatrix::from_i64(&[&[1], &[0]]));
        let (s, _) = r2.subalgebra_on(&Subspace::full(2)).unwrap();
        assert_eq!(s, r2.clone().without_name());
        let (s, _) = r2.subalgebra_on(&Subspace::zero(2)).unwrap();
        assert_eq!(s.dim(), 0);

        let heis = fixtures::heis3();
        assert!(matches!(
            heis.subalgebra_on(&Subspace::coordinate(3, &[0, 1])),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn closures_and_subnormality() {
        let r2 = fixtures::lie_r2();
        let e0 = Subspace::coordinate(2, &[0]);
        assert!(r2.ideal_closure(&e0).unwrap().is_full());
        let e1 = Subspace::coordinate(2, &[1]);
        assert_eq!(r2.ideal_closure(&e1).unwrap(), e1);
        assert!(r2.ideal_closure(&Subspace::zero(2)).unwrap().is_zero());

        assert_eq!(r2.is_subnormal(&e1).unwrap(), (true, vec![e1.clone(), Subspace::full(2)]));
        let (ok, series) = r2.is_subnormal(&e0).unwrap();
        assert!(!ok);
        assert_eq!(series, vec![Subspace::full(2)]);
        assert_eq!(r2.is_subnormal(&Subspace::full(2)).unwrap(), (true, vec![Subspace::full(2)]));

        // span{e2} ⊂ span{e1, e2} ⊂ nullfil3 is a two-step chain
        let nf = fixtures::nullfil3();
        let e2 = Subspace::coordinate(3, &[2]);
        let (ok, chain) = nf.is_subnormal(&e2).unwrap();
        assert!(ok);
        assert_eq!(chain.first(), Some(&e2));
        assert_eq!(chain.last(), Some(&Subspace::full(3)));

        assert!(matches!(
            fixtures::heis3().is_subnormal(&Subspace::coordinate(3, &[0, 1])),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn subnormal_but_not_ideal() {
        // In heis3, span{e0} is not an ideal (e1e0 = -e2) but e0 ⊴ span{e0,e2} ⊴ L.
        let heis = fixtures::heis3();
        let e0 = Subspace::coordinate(3, &[0]);
        assert!(!heis.is_ideal(&e0).unwrap());
        let (ok, chain) = heis.is_subnormal(&e0).unwrap();
        assert!(ok);
        assert_eq!(chain, vec![e0, Subspace::coordinate(3, &[0, 2]), Subspace::full(3)]);
    }

    #[test]
    fn lower_central_series_examples() {
        let leib2 = fixtures::leib2();
        assert_eq!(
            leib2.lower_central_series(),
            vec![Subspace::full(2), Subspace::coordinate(2, &[1]), Subspace::zero(2)]
        );
        assert!(leib2.is_nilpotent_algebra());

        let ab = LeibnizAlgebra::abelian(2);
        assert_eq!(ab.lower_central_series(), vec![Subspace::full(2), Subspace::zero(2)]);

        let r2 = fixtures::lie_r2();
        let series = r2.lower_central_series();
        assert_eq!(series.last(), Some(&Subspace::coordinate(2, &[1])));
        assert!(!r2.is_nilpotent_algebra());

        assert!(LeibnizAlgebra::abelian(0).is_nilpotent_algebra());
    }

    #[test]
    fn dimension_zero_is_legal() {
        let z = LeibnizAlgebra::abelian(0);
        assert!(z.check_leibniz().is_empty());
        assert!(z.centre().is_zero());
        assert!(z.leibniz_kernel().is_zero());
        assert_eq!(z.multiply(&[], &[]).unwrap(), Vec::<Rational>::new());
    }
}

#[cfg(test)]
impl LeibnizAlgebra {
    pub(crate) fn without_name(mut self) -> Self {
        self.name = None;
        self
    }
}
