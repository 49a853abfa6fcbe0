use std::sync::OnceLock;

use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

pub type ComplexMatrix4 = Matrix4<Complex64>;
pub type Spinor = Vector4<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// The explicit set of Dirac matrices.
///
/// `gamma[0..3]` are γ₁..γ₃ and `gamma[3]` is γ₄ = β. The Clifford relation is
/// {γ_μ, γ_ν} = 2δ_μν.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracMatrices {
    pub gamma: [ComplexMatrix4; 4],
    pub gamma5: ComplexMatrix4,
    pub beta: ComplexMatrix4,
    pub alpha: [ComplexMatrix4; 3],
    pub sigma: [ComplexMatrix4; 3],
}

/// 2×2 Pauli matrices σ₁, σ₂, σ₃.
pub fn pauli() -> [Matrix2<Complex64>; 3] {
    [
        Matrix2::new(ZERO, ONE, ONE, ZERO),
        Matrix2::new(ZERO, -I, I, ZERO),
        Matrix2::new(ONE, ZERO, ZERO, -ONE),
    ]
}

fn blocks(
    a: &Matrix2<Complex64>,
    b: &Matrix2<Complex64>,
    c: &Matrix2<Complex64>,
    d: &Matrix2<Complex64>,
) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(b);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(c);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}

/// Builds the representation: α = [[0, σ], [σ, 0]], β = diag(1, 1, −1, −1),
/// γ₅ = [[0, −1], [−1, 0]], σ = diag(σ, σ) and γ_i = −iβα_i, γ₄ = β.
pub fn gamma_set() -> DiracMatrices {
    let s = pauli();
    let zero = Matrix2::<Complex64>::zeros();
    let one = Matrix2::<Complex64>::identity();

    let beta = blocks(&one, &zero, &zero, &-one);
    let gamma5 = blocks(&zero, &-one, &-one, &zero);
    let alpha = [0, 1, 2].map(|i| blocks(&zero, &s[i], &s[i], &zero));
    let sigma = [0, 1, 2].map(|i| blocks(&s[i], &zero, &zero, &s[i]));
    // α_i = iβγ_i with β² = 1 gives γ_i = −iβα_i
    let gamma = [
        (beta * alpha[0]) * -I,
        (beta * alpha[1]) * -I,
        (beta * alpha[2]) * -I,
        beta,
    ];

    DiracMatrices { gamma, gamma5, beta, alpha, sigma }
}

/// Shared, lazily built instance of [`gamma_set`].
pub fn dirac() -> &'static DiracMatrices {
    static SET: OnceLock<DiracMatrices> = OnceLock::new();
    SET.get_or_init(gamma_set)
}
