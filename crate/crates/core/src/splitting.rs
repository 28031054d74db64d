//! Splitting algebras for a Leibniz algebra `L` and an ideal `A` with `AL = 0`.
//!
//! A splitting algebra is a Leibniz algebra `M ⊇ L` with an abelian ideal
//! `B` such that `L + B = M`, `L ∩ B = A`, and `M = U ⊕ B` for some
//! subalgebra `U`. It is built here as follows:
//!
//! 1. `W` is a copy of `L` with left action `λ_x = d_x` and trivial right action.
//! 2. `X` is the split extension of `W` by `L`, basis `(e_0.., w_0..)`.
//! 3. `D = {a - π(a)}` and `E = {x - π(x)}` with `π` the coordinate copy `L → W`.
//! 4. `M = X / D`, `B` the image of `W`, `U` the image of `E`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraMorphism, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{RMatrix, Rational, Subspace};
use crate::rep::{check_module_axioms, LeibnizModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingAlgebra {
    /// The ambient algebra `M`.
    pub m: LeibnizAlgebra,
    /// Abelian ideal `B` of `M`.
    pub b: Subspace,
    /// Complement subalgebra `U`, `M = U ⊕ B`.
    pub u: Subspace,
    /// Embedding `ι: L → M`.
    pub emb: AlgebraMorphism,
    /// `ι(A)`
    pub a_bar: Subspace,
}

/// Split extension `L ⋉ V` on basis `(e_0..e_{n-1}, v_0..v_{m-1})`.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    pub algebra: LeibnizAlgebra,
    /// `L → L ⋉ V`
    pub inclusion: AlgebraMorphism,
    /// The ideal spanned by the module coordinates.
    pub module_ideal: Subspace,
}

/// Intermediate objects of [`construct_splitting_traced`], in `X` coordinates.
#[derive(Clone, Debug)]
pub struct SplittingTrace {
    pub x: SplitExtension,
    pub d: Subspace,
    pub e: Subspace,
    /// `X → M`
    pub projection: AlgebraMorphism,
}

/// `W ≅ L` as a left module via left multiplication, with `WL = 0`.
pub fn trivial_right_module(alg: &LeibnizAlgebra) -> LeibnizModule {
    let n = alg.dim();
    LeibnizModule::new(n, n, alg.left_mults(), vec![RMatrix::zeros(n, n); n]).expect("square blocks of size n")
}

/// `(x + v)(x' + v') = xx' + λ_x v' + ρ_{x'} v`
pub fn split_extension(alg: &LeibnizAlgebra, module: &LeibnizModule) -> Result<SplitExtension> {
    let violations = check_module_axioms(alg, module)?;
    if !violations.is_empty() {
        return Err(Error::InvalidModule(violations.len()));
    }
    let n = alg.dim();
    let m = module.mod_dim();
    let total = n + m;
    let mut x = LeibnizAlgebra::abelian(total);
    for (i, j, k, c) in alg.nonzero_constants() {
        x.set_constant(i, j, k, c.clone());
    }
    for i in 0..n {
        for b in 0..m {
            for a in 0..m {
                let l = &module.lambda()[i][(a, b)];
                if !l.is_zero() {
                    x.set_constant(i, n + b, n + a, l.clone());
                }
                let r = &module.rho()[i][(a, b)];
                if !r.is_zero() {
                    x.set_constant(n + b, i, n + a, r.clone());
                }
            }
        }
    }
    let inclusion = AlgebraMorphism::new(
        n,
        total,
        RMatrix::from_fn(total, n, |r, c| if r == c { Rational::one() } else { Rational::zero() }),
    )?;
    let module_ideal = Subspace::coordinate(total, &(n..total).collect::<Vec<_>>());
    Ok(SplitExtension {
        algebra: x,
        inclusion,
        module_ideal,
    })
}

pub fn construct_splitting(alg: &LeibnizAlgebra, a: &Subspace) -> Result<SplittingAlgebra> {
    construct_splitting_traced(alg, a).map(|(s, _)| s)
}

/// Same as [`construct_splitting`], also returning `X`, `D`, `E` and `X → M`.
pub fn construct_splitting_traced(alg: &LeibnizAlgebra, a: &Subspace) -> Result<(SplittingAlgebra, SplittingTrace)> {
    let violations = alg.check_leibniz();
    if !violations.is_empty() {
        return Err(Error::InvalidAlgebra(violations.len()));
    }
    let n = alg.dim();
    if !alg.is_ideal(a)? {
        return Err(Error::NotAnIdeal);
    }
    if !alg.product_space(a, &Subspace::full(n))?.is_zero() {
        return Err(Error::IdealDoesNotAnnihilate);
    }

    let x = split_extension(alg, &trivial_right_module(alg))?;
    let xa = &x.algebra;
    let diff = |v: &[Rational]| -> Vec<Rational> { v.iter().cloned().chain(v.iter().map(|c| -c)).collect() };
    let d = Subspace::span(2 * n, a.basis_vectors().map(diff))?;
    let e = Subspace::span(2 * n, (0..n).map(|i| diff(&crate::exactlin::unit_vec(n, i))))?;

    if !xa.is_ideal(&d)? {
        return Err(Error::Internal("D is not an ideal of the split extension".into()));
    }
    if !xa.product_space(&d, &Subspace::full(2 * n))?.is_zero() {
        return Err(Error::Internal("D·X is not zero".into()));
    }
    if !xa.is_subalgebra(&e)? {
        return Err(Error::Internal("E is not a subalgebra of the split extension".into()));
    }

    let (m, projection) = xa.quotient_algebra(&d)?;
    let b = x.module_ideal.image_under(projection.matrix())?;
    let u = e.image_under(projection.matrix())?;
    let emb = x.inclusion.then(&projection)?;
    let a_bar = a.image_under(emb.matrix())?;

    let s = SplittingAlgebra { m, b, u, emb, a_bar };
    let problems = verify_splitting(alg, a, &s);
    if let Some(first) = problems.first() {
        return Err(Error::Internal(format!("constructed splitting algebra fails verification: {first}")));
    }
    Ok((
        s,
        SplittingTrace {
            x,
            d,
            e,
            projection,
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingViolation {
    Shape(String),
    NotLeibniz { violations: usize },
    EmbeddingNotMultiplicative { pairs: Vec<(usize, usize)> },
    EmbeddingNotInjective,
    BNotIdeal,
    BNotAbelian,
    BTimesMNonzero,
    SumNotFull,
    IntersectionNotA,
    ImageOfAMismatch,
    UNotSubalgebra,
    UPlusBNotFull,
    UMeetsB,
    DimB { expected: usize, found: usize },
}

impl fmt::Display for SplittingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SplittingViolation::*;
        match self {
            Shape(s) => write!(f, "shape mismatch: {s}"),
            NotLeibniz { violations } => write!(f, "M violates the Leibniz identity on {violations} basis triples"),
            EmbeddingNotMultiplicative { pairs } => write!(f, "embedding not multiplicative on {pairs:?}"),
            EmbeddingNotInjective => write!(f, "embedding not injective"),
            BNotIdeal => write!(f, "B is not an ideal of M"),
            BNotAbelian => write!(f, "B is not abelian"),
            BTimesMNonzero => write!(f, "B·M ≠ 0"),
            SumNotFull => write!(f, "L + B ≠ M"),
            IntersectionNotA => write!(f, "L ∩ B ≠ A"),
            ImageOfAMismatch => write!(f, "ι(A) differs from the recorded image of A"),
            UNotSubalgebra => write!(f, "U is not a subalgebra"),
            UPlusBNotFull => write!(f, "U + B ≠ M"),
            UMeetsB => write!(f, "U ∩ B ≠ 0"),
            DimB { expected, found } => write!(f, "dim B = {found}, expected {expected}"),
        }
    }
}

/// Rechecks every defining property of a splitting algebra for `(alg, a)`
/// from scratch. Empty on success.
pub fn verify_splitting(alg: &LeibnizAlgebra, a: &Subspace, s: &SplittingAlgebra) -> Vec<SplittingViolation> {
    use SplittingViolation::*;
    let md = s.m.dim();
    let n = alg.dim();
    let shapes = [
        (a.ambient_dim(), n, "A"),
        (s.b.ambient_dim(), md, "B"),
        (s.u.ambient_dim(), md, "U"),
        (s.a_bar.ambient_dim(), md, "image of A"),
        (s.emb.source_dim(), n, "embedding source"),
        (s.emb.target_dim(), md, "embedding target"),
    ];
    for (found, expected, what) in shapes {
        if found != expected {
            return vec![Shape(format!("{what}: ambient {found}, expected {expected}"))];
        }
    }

    // Every subspace query below has matching ambient dimensions.
    let ok = |r: Result<bool>| r.expect("ambient dimensions checked");
    let sub = |r: Result<Subspace>| r.expect("ambient dimensions checked");

    let mut out = Vec::new();
    let leib = s.m.check_leibniz();
    if !leib.is_empty() {
        out.push(NotLeibniz { violations: leib.len() });
    }
    let pairs = s.emb.multiplicativity_failures(alg, &s.m);
    if !pairs.is_empty() {
        out.push(EmbeddingNotMultiplicative { pairs });
    }
    if !s.emb.is_injective() {
        out.push(EmbeddingNotInjective);
    }

    let full = Subspace::full(md);
    if !ok(s.m.is_ideal(&s.b)) {
        out.push(BNotIdeal);
    }
    if !sub(s.m.product_space(&s.b, &s.b)).is_zero() {
        out.push(BNotAbelian);
    }
    if !sub(s.m.product_space(&s.b, &full)).is_zero() {
        out.push(BTimesMNonzero);
    }

    let image = s.emb.image();
    if !sub(image.sum(&s.b)).is_full() {
        out.push(SumNotFull);
    }
    if sub(image.intersection(&s.b)) != s.a_bar {
        out.push(IntersectionNotA);
    }
    if sub(a.image_under(s.emb.matrix())) != s.a_bar {
        out.push(ImageOfAMismatch);
    }

    if !ok(s.m.is_subalgebra(&s.u)) {
        out.push(UNotSubalgebra);
    }
    if !sub(s.u.sum(&s.b)).is_full() {
        out.push(UPlusBNotFull);
    }
    if !sub(s.u.intersection(&s.b)).is_zero() {
        out.push(UMeetsB);
    }
    if s.b.dim() != n {
        out.push(DimB {
            expected: n,
            found: s.b.dim(),
        });
    }
    out
}
