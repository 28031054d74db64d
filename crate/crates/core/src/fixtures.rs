//! Built-in corpus of small Leibniz algebras.

use crate::algebra::LeibnizAlgebra;
use crate::exactlin::rat;
use crate::rep::adjoint_module;
use crate::splitting::split_extension;

fn table(name: &str, dim: usize, products: &[(usize, usize, usize, i64)]) -> LeibnizAlgebra {
    LeibnizAlgebra::from_products(dim, products.iter().map(|&(i, j, k, c)| (i, j, k, rat(c))))
        .expect("fixture indices in range")
        .with_name(name)
}

pub fn abelian(dim: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::abelian(dim).with_name(format!("abelian{dim}"))
}

/// e0e0 = e1: the smallest non-Lie Leibniz algebra.
pub fn leib2() -> LeibnizAlgebra {
    table("leib2", 2, &[(0, 0, 1, 1)])
}

/// Non-abelian two-dimensional Lie algebra: e0e1 = e1, e1e0 = -e1.
pub fn lie_r2() -> LeibnizAlgebra {
    table("lie_r2", 2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

/// Heisenberg algebra: e0e1 = e2, e1e0 = -e2.
pub fn heis3() -> LeibnizAlgebra {
    table("heis3", 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// sl2 on (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
pub fn sl2() -> LeibnizAlgebra {
    table(
        "sl2",
        3,
        &[
            (0, 1, 1, 2),
            (1, 0, 1, -2),
            (0, 2, 2, -2),
            (2, 0, 2, 2),
            (1, 2, 0, 1),
            (2, 1, 0, -1),
        ],
    )
}

/// Null-filiform: e0e0 = e1, e0e1 = e2.
pub fn nullfil3() -> LeibnizAlgebra {
    table("nullfil3", 3, &[(0, 0, 1, 1), (0, 1, 2, 1)])
}

/// leib2 ⊕ abelian1.
pub fn leib2_plus_abelian1() -> LeibnizAlgebra {
    table("leib2+abelian1", 3, &[(0, 0, 1, 1)])
}

/// lie_r2 extended by its own adjoint module.
pub fn lie_r2_split_adjoint() -> LeibnizAlgebra {
    let r2 = lie_r2();
    let module = adjoint_module(&r2);
    split_extension(&r2, &module)
        .expect("adjoint module of a Leibniz algebra is valid")
        .algebra
        .with_name("lie_r2_ad_split")
}

/// Dimension-one algebra with e0e0 = e0. Not Leibniz; used as a negative example.
pub fn idempotent1() -> LeibnizAlgebra {
    table("idempotent1", 1, &[(0, 0, 0, 1)])
}

/// The default corpus, in a fixed order.
pub fn corpus() -> Vec<LeibnizAlgebra> {
    vec![
        abelian(1),
        abelian(2),
        abelian(3),
        leib2(),
        lie_r2(),
        heis3(),
        sl2(),
        nullfil3(),
        leib2_plus_abelian1(),
        lie_r2_split_adjoint(),
    ]
}
