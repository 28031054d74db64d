//! Leibniz modules as families of left and right action matrices.
//!
//! For a left Leibniz algebra `L` a module `V` carries `λ_x v = xv` and
//! `ρ_x v = vx`, subject to
//!
//! * `λ_x λ_y = λ_{xy} + λ_y λ_x`
//! * `λ_x ρ_y = ρ_y λ_x + ρ_{xy}`
//! * `ρ_{xy} = ρ_y ρ_x + λ_x ρ_y`

use std::fmt;

use crate::algebra::{AlgebraMorphism, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{is_nilpotent_matrix, nullspace, RMatrix, Rational, Subspace};
use crate::sample::{ElementSampler, DEFAULT_SEED};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizModule {
    alg_dim: usize,
    mod_dim: usize,
    lambda: Vec<RMatrix>,
    rho: Vec<RMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `λ_i λ_j = λ_{e_i e_j} + λ_j λ_i`
    LeftLeft,
    /// `λ_i ρ_j = ρ_j λ_i + ρ_{e_i e_j}`
    LeftRight,
    /// `ρ_{e_i e_j} = ρ_j ρ_i + λ_i ρ_j`
    RightRight,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::LeftLeft => "x(yv) = (xy)v + y(xv)",
            Axiom::LeftRight => "x(vy) = (xv)y + v(xy)",
            Axiom::RightRight => "v(xy) = (vx)y + x(vy)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub i: usize,
    pub j: usize,
    /// Left side minus right side of the operator identity.
    pub residual: RMatrix,
}

impl LeibnizModule {
    pub fn new(alg_dim: usize, mod_dim: usize, lambda: Vec<RMatrix>, rho: Vec<RMatrix>) -> Result<Self> {
        for family in [&lambda, &rho] {
            if family.len() != alg_dim {
                return Err(Error::DimensionMismatch {
                    expected: alg_dim,
                    found: family.len(),
                });
            }
            for m in family {
                if m.rows() != mod_dim || m.cols() != mod_dim {
                    return Err(Error::DimensionMismatch {
                        expected: mod_dim,
                        found: if m.rows() != mod_dim { m.rows() } else { m.cols() },
                    });
                }
            }
        }
        Ok(LeibnizModule {
            alg_dim,
            mod_dim,
            lambda,
            rho,
        })
    }

    pub fn zero(alg_dim: usize, mod_dim: usize) -> Self {
        let z = RMatrix::zeros(mod_dim, mod_dim);
        LeibnizModule {
            alg_dim,
            mod_dim,
            lambda: vec![z.clone(); alg_dim],
            rho: vec![z; alg_dim],
        }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn mod_dim(&self) -> usize {
        self.mod_dim
    }

    pub fn lambda(&self) -> &[RMatrix] {
        &self.lambda
    }

    pub fn rho(&self) -> &[RMatrix] {
        &self.rho
    }

    pub fn lambda_mut(&mut self) -> &mut [RMatrix] {
        &mut self.lambda
    }

    pub fn rho_mut(&mut self) -> &mut [RMatrix] {
        &mut self.rho
    }

    fn check_element(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.alg_dim {
            return Err(Error::DimensionMismatch {
                expected: self.alg_dim,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `λ_x` for an arbitrary element `x`.
    pub fn lambda_of(&self, x: &[Rational]) -> Result<RMatrix> {
        self.check_element(x)?;
        Ok(RMatrix::linear_combination(self.mod_dim, self.mod_dim, x, &self.lambda))
    }

    /// `ρ_x` for an arbitrary element `x`.
    pub fn rho_of(&self, x: &[Rational]) -> Result<RMatrix> {
        self.check_element(x)?;
        Ok(RMatrix::linear_combination(self.mod_dim, self.mod_dim, x, &self.rho))
    }
}

/// All failing `(axiom, i, j)` instances with their residual matrices.
pub fn check_module_axioms(alg: &LeibnizAlgebra, module: &LeibnizModule) -> Result<Vec<AxiomViolation>> {
    if alg.dim() != module.alg_dim {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: module.alg_dim,
        });
    }
    let n = alg.dim();
    let (lam, rho) = (&module.lambda, &module.rho);
    let mut out = Vec::new();
    let mut push = |axiom, i, j, residual: RMatrix| {
        if !residual.is_zero() {
            out.push(AxiomViolation { axiom, i, j, residual });
        }
    };
    for i in 0..n {
        for j in 0..n {
            let prod = alg.basis_product(i, j);
            let lam_prod = module.lambda_of(prod)?;
            let rho_prod = module.rho_of(prod)?;

            let lhs = &lam[i] * &lam[j];
            let rhs = &lam_prod + &(&lam[j] * &lam[i]);
            push(Axiom::LeftLeft, i, j, &lhs - &rhs);

            let lhs = &lam[i] * &rho[j];
            let rhs = &(&rho[j] * &lam[i]) + &rho_prod;
            push(Axiom::LeftRight, i, j, &lhs - &rhs);

            let rhs = &(&rho[j] * &rho[i]) + &(&lam[i] * &rho[j]);
            push(Axiom::RightRight, i, j, &rho_prod - &rhs);
        }
    }
    Ok(out)
}

/// `L` acting on itself by left and right multiplication.
pub fn adjoint_module(alg: &LeibnizAlgebra) -> LeibnizModule {
    LeibnizModule {
        alg_dim: alg.dim(),
        mod_dim: alg.dim(),
        lambda: alg.left_mults(),
        rho: alg.right_mults(),
    }
}

/// `{x | λ_x = 0 and ρ_x = 0}`, from one stacked nullspace computation.
pub fn rep_kernel(alg: &LeibnizAlgebra, module: &LeibnizModule) -> Result<Subspace> {
    if alg.dim() != module.alg_dim {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: module.alg_dim,
        });
    }
    let m2 = module.mod_dim * module.mod_dim;
    let columns: Vec<Vec<Rational>> = (0..module.alg_dim)
        .map(|i| {
            module.lambda[i]
                .entries()
                .iter()
                .chain(module.rho[i].entries())
                .cloned()
                .collect()
        })
        .collect();
    Ok(nullspace(&RMatrix::from_columns(2 * m2, &columns)))
}

pub fn is_faithful(alg: &LeibnizAlgebra, module: &LeibnizModule) -> Result<bool> {
    Ok(rep_kernel(alg, module)?.is_zero())
}

/// Pulls a module over `target` back along `emb: source → target`.
pub fn restrict_module(
    target: &LeibnizAlgebra,
    module: &LeibnizModule,
    source: &LeibnizAlgebra,
    emb: &AlgebraMorphism,
) -> Result<LeibnizModule> {
    if module.alg_dim != target.dim() {
        return Err(Error::DimensionMismatch {
            expected: target.dim(),
            found: module.alg_dim,
        });
    }
    emb.ensure_multiplicative(source, target)?;
    let pull = |family: &[RMatrix]| -> Vec<RMatrix> {
        (0..source.dim())
            .map(|i| RMatrix::linear_combination(module.mod_dim, module.mod_dim, &emb.image_of_basis(i), family))
            .collect()
    };
    Ok(LeibnizModule {
        alg_dim: source.dim(),
        mod_dim: module.mod_dim,
        lambda: pull(&module.lambda),
        rho: pull(&module.rho),
    })
}

/// `ρ_x^k = (-1)^(k-1) ρ_x λ_x^(k-1)` for one element and one `k >= 1`.
fn patsourakos_holds(lam: &RMatrix, rho: &RMatrix, k: u32) -> bool {
    let lhs = rho.pow(k);
    let mut rhs = rho * &lam.pow(k - 1);
    if k % 2 == 0 {
        rhs = -&rhs;
    }
    lhs == rhs
}

/// Outcome of the sampled power identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatsourakosReport {
    pub elements_checked: usize,
    /// First failing `(element, k)`, if any.
    pub failure: Option<(Vec<Rational>, u32)>,
}

impl PatsourakosReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `ρ_x^k = (-1)^(k-1) ρ_x λ_x^(k-1)` for `2 <= k <= max_n` on every
/// basis element and on `samples` seeded random combinations.
pub fn check_patsourakos_sampled(module: &LeibnizModule, max_n: u32, samples: usize, seed: u64) -> PatsourakosReport {
    let n = module.alg_dim;
    let basis = (0..n).map(|i| crate::exactlin::unit_vec(n, i));
    let random = ElementSampler::new(n, seed).take(samples);
    let mut checked = 0;
    for x in basis.chain(random) {
        checked += 1;
        let lam = module.lambda_of(&x).expect("element length");
        let rho = module.rho_of(&x).expect("element length");
        for k in 2..=max_n {
            if !patsourakos_holds(&lam, &rho, k) {
                return PatsourakosReport {
                    elements_checked: checked,
                    failure: Some((x, k)),
                };
            }
        }
    }
    PatsourakosReport {
        elements_checked: checked,
        failure: None,
    }
}

/// Basis elements plus 100 seeded combinations under the default seed.
pub fn check_patsourakos(module: &LeibnizModule, max_n: u32) -> bool {
    check_patsourakos_sampled(module, max_n, 100, DEFAULT_SEED).holds()
}

pub fn left_action_nilpotent(module: &LeibnizModule, x: &[Rational]) -> Result<bool> {
    is_nilpotent_matrix(&module.lambda_of(x)?)
}

pub fn right_action_nilpotent(module: &LeibnizModule, x: &[Rational]) -> Result<bool> {
    is_nilpotent_matrix(&module.rho_of(x)?)
}
