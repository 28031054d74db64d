//! Faithful modules of dimension at most `dim L + 1`.
//!
//! If the centre of `L` is zero the adjoint module already works.
//! Otherwise take `A = Ann(L)`, build the splitting algebra `(M, B, U)`
//! and let `M` act on `V = ⟨e⟩ ⊕ B` by
//!
//! ```text
//! λ_{u+b} e = 0,   ρ_{u+b} e = b,   λ_{u+b} b' = u b',   ρ_{u+b} b' = 0
//! ```
//!
//! then restrict to `L` along `ι: L → M`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{inverse, is_nilpotent_matrix, unit_vec, RMatrix, Rational, Subspace};
use crate::rep::{
    adjoint_module, check_module_axioms, check_patsourakos_sampled, rep_kernel, restrict_module, LeibnizModule,
};
use crate::sample::{ElementSampler, DEFAULT_SEED};
use crate::splitting::{construct_splitting, SplittingAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Adjoint,
    Construction,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Adjoint => "adjoint",
            Branch::Construction => "construction",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Results of actually running every checker on the output module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub axioms_ok: bool,
    pub kernel_dim: usize,
    pub dim_bound_ok: bool,
    pub leftnil_ok: bool,
    /// `None` on the adjoint branch, where the check does not apply.
    pub rightnil_ok: Option<bool>,
    pub patsourakos_ok: bool,
}

impl Certificate {
    pub fn passes(&self) -> bool {
        self.axioms_ok
            && self.kernel_dim == 0
            && self.dim_bound_ok
            && self.leftnil_ok
            && self.rightnil_ok.unwrap_or(true)
            && self.patsourakos_ok
    }
}

#[derive(Clone, Debug)]
pub struct FaithfulResult {
    pub module: LeibnizModule,
    pub dim_v: usize,
    pub branch: Branch,
    pub certificate: Certificate,
    /// The splitting algebra used on the construction branch.
    pub splitting: Option<SplittingAlgebra>,
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    /// Use the splitting construction even when the centre is zero.
    pub force_construction: bool,
    pub seed: u64,
    /// Elements with nilpotent left multiplication to test per algebra.
    pub nilpotency_samples: usize,
    /// Random combinations for the power identity, on top of the basis.
    pub patsourakos_samples: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            force_construction: false,
            seed: DEFAULT_SEED,
            nilpotency_samples: 200,
            patsourakos_samples: 100,
        }
    }
}

/// The module `V = ⟨e⟩ ⊕ B` over `M`, on basis `(e, b_1, .., b_k)` where the
/// `b_i` are the RREF basis of `B`.
pub fn construct_v_module(s: &SplittingAlgebra) -> Result<LeibnizModule> {
    let md = s.m.dim();
    let du = s.u.dim();
    let k = s.b.dim();
    if du + k != md {
        return Err(Error::Internal(format!("dim U + dim B = {} but dim M = {md}", du + k)));
    }
    // Columns: U basis then B basis. Its inverse splits any m into (u, b) coordinates.
    let change = RMatrix::from_columns(md, &s.u.basis_vectors().chain(s.b.basis_vectors()).map(<[_]>::to_vec).collect::<Vec<_>>());
    let split = inverse(&change)?.ok_or_else(|| Error::Internal("U and B do not span M directly".into()))?;

    let b_basis: Vec<&[Rational]> = s.b.basis_vectors().collect();
    let mut lambda = Vec::with_capacity(md);
    let mut rho = Vec::with_capacity(md);
    for i in 0..md {
        let coeffs = split.column(i);
        let u_part = s
            .u
            .basis_vectors()
            .zip(&coeffs[..du])
            .fold(vec![Rational::zero(); md], |mut acc, (row, c)| {
                for (a, x) in acc.iter_mut().zip(row) {
                    *a += c * x;
                }
                acc
            });

        let mut lam = RMatrix::zeros(k + 1, k + 1);
        for (c, b) in b_basis.iter().enumerate() {
            let prod = s.m.multiply(&u_part, b)?;
            let coords = s
                .b
                .coordinates(&prod)?
                .ok_or_else(|| Error::Internal("U·B left B".into()))?;
            for (r, x) in coords.into_iter().enumerate() {
                lam[(r + 1, c + 1)] = x;
            }
        }
        let mut r = RMatrix::zeros(k + 1, k + 1);
        for (row, x) in coeffs[du..].iter().enumerate() {
            r[(row + 1, 0)] = x.clone();
        }
        lambda.push(lam);
        rho.push(r);
    }
    let module = LeibnizModule::new(md, k + 1, lambda, rho)?;
    let violations = check_module_axioms(&s.m, &module)?;
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "V fails {} module axiom instances over M",
            violations.len()
        )));
    }
    Ok(module)
}

/// Runs the pipeline and insists that every certificate field passes.
pub fn faithful_representation(alg: &LeibnizAlgebra) -> Result<FaithfulResult> {
    faithful_representation_with(alg, &PipelineOptions::default())
}

pub fn faithful_representation_with(alg: &LeibnizAlgebra, opts: &PipelineOptions) -> Result<FaithfulResult> {
    let result = build_faithful(alg, opts)?;
    if !result.certificate.passes() {
        return Err(Error::Internal(format!("certificate failed: {:?}", result.certificate)));
    }
    Ok(result)
}

/// Runs the pipeline and certifies the output without rejecting a failed
/// certificate, so callers can report it.
pub fn build_faithful(alg: &LeibnizAlgebra, opts: &PipelineOptions) -> Result<FaithfulResult> {
    let violations = alg.check_leibniz();
    if !violations.is_empty() {
        return Err(Error::InvalidAlgebra(violations.len()));
    }
    let n = alg.dim();
    let (module, branch, splitting) = if alg.centre().is_zero() && !opts.force_construction {
        (adjoint_module(alg), Branch::Adjoint, None)
    } else {
        let a = alg.left_annihilator();
        let s = construct_splitting(alg, &a)?;
        let over_m = construct_v_module(&s)?;
        let module = restrict_module(&s.m, &over_m, alg, &s.emb)?;
        (module, Branch::Construction, Some(s))
    };
    let dim_v = module.mod_dim();
    let expected_dim = match branch {
        Branch::Adjoint => n,
        Branch::Construction => n + 1,
    };
    let rightnil_ok = match branch {
        Branch::Adjoint => None,
        Branch::Construction => Some(rho_products_vanish(&module)),
    };
    let certificate = Certificate {
        axioms_ok: check_module_axioms(alg, &module)?.is_empty(),
        kernel_dim: rep_kernel(alg, &module)?.dim(),
        dim_bound_ok: dim_v <= n + 1 && dim_v == expected_dim,
        leftnil_ok: left_nilpotency_transfer(alg, &module, opts.nilpotency_samples, opts.seed)?.holds(),
        rightnil_ok,
        patsourakos_ok: check_patsourakos_sampled(&module, dim_v as u32 + 1, opts.patsourakos_samples, opts.seed)
            .holds(),
    };
    Ok(FaithfulResult {
        module,
        dim_v,
        branch,
        certificate,
        splitting,
    })
}

/// Outcome of testing "`d_x` nilpotent ⇒ `λ_x` nilpotent on `V`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub candidates: usize,
    /// Candidates whose left multiplication on `L` was nilpotent.
    pub premises: usize,
    pub counterexample: Option<Vec<Rational>>,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Draws the basis elements and then seeded random elements until
/// `samples` of the random ones have nilpotent `d_x` (giving up after
/// `100 * samples` draws), and checks that `λ_x` is nilpotent on `V` for
/// each of them.
pub fn left_nilpotency_transfer(
    alg: &LeibnizAlgebra,
    module: &LeibnizModule,
    samples: usize,
    seed: u64,
) -> Result<TransferReport> {
    let n = alg.dim();
    let mut report = TransferReport {
        candidates: 0,
        premises: 0,
        counterexample: None,
    };
    let check = |x: Vec<Rational>, report: &mut TransferReport| -> Result<bool> {
        report.candidates += 1;
        if !is_nilpotent_matrix(&alg.left_mult_of(&x)?)? {
            return Ok(false);
        }
        if !is_nilpotent_matrix(&module.lambda_of(&x)?)? {
            report.counterexample = Some(x);
        }
        Ok(true)
    };
    for i in 0..n {
        check(unit_vec(n, i), &mut report)?;
        if report.counterexample.is_some() {
            return Ok(report);
        }
    }
    let mut sampler = ElementSampler::new(n, seed);
    let mut found = 0;
    let mut draws = 0;
    while found < samples && draws < samples.saturating_mul(100) {
        draws += 1;
        if check(sampler.next_element(), &mut report)? {
            found += 1;
        }
        if report.counterexample.is_some() {
            break;
        }
    }
    report.premises = found;
    Ok(report)
}

pub fn check_left_nilpotency_transfer(alg: &LeibnizAlgebra, result: &FaithfulResult, samples: usize, seed: u64) -> bool {
    left_nilpotency_transfer(alg, &result.module, samples, seed).is_ok_and(|r| r.holds())
}

fn rho_products_vanish(module: &LeibnizModule) -> bool {
    let rho = module.rho();
    rho.iter().all(|a| rho.iter().all(|b| (a * b).is_zero()))
}

/// `ρ_i ρ_j = 0` for every basis pair. Only meaningful on the construction branch.
pub fn check_right_nilpotency(result: &FaithfulResult) -> Result<bool> {
    match result.branch {
        Branch::Adjoint => Err(Error::NotApplicable("right nilpotency is certified on the construction branch only")),
        Branch::Construction => Ok(rho_products_vanish(&result.module)),
    }
}

/// `V_0 = V`, `V_{i+1}` spanned by `λ_x v` and `ρ_x v` for `x` in a basis of
/// `u` and `v` in a basis of `V_i`. Returns `V_0, .., V_{dim V}`.
pub fn action_chain(u: &Subspace, module: &LeibnizModule) -> Result<Vec<Subspace>> {
    let m = module.mod_dim();
    let actions: Vec<RMatrix> = u
        .basis_vectors()
        .map(|x| Ok([module.lambda_of(x)?, module.rho_of(x)?]))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut chain = vec![Subspace::full(m)];
    for _ in 0..m {
        let cur = chain.last().expect("nonempty");
        let next = Subspace::span(
            m,
            cur.basis_vectors()
                .flat_map(|v| actions.iter().map(move |a| a.apply(v)))
                .collect::<Vec<_>>(),
        )?;
        chain.push(next);
    }
    Ok(chain)
}

/// Hypercentrality of `V` for the nilpotent formation: the descending
/// action chain of the subnormal nilpotent subalgebra `u` reaches zero.
pub fn check_hypercentral_nilpotent_proxy(alg: &LeibnizAlgebra, u: &Subspace, module: &LeibnizModule) -> Result<bool> {
    if module.alg_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: module.alg_dim(),
        });
    }
    let (subnormal, _) = alg.is_subnormal(u)?;
    if !subnormal {
        return Err(Error::Precondition("subalgebra is not subnormal".into()));
    }
    let (sub, _) = alg.subalgebra_on(u)?;
    if !sub.is_nilpotent_algebra() {
        return Err(Error::Precondition("subalgebra is not nilpotent".into()));
    }
    Ok(action_chain(u, module)?.last().map_or(true, Subspace::is_zero))
}
