//! Fractional powers of diagonalizable linear operators on C³.
//!
//! A linear operator `L` with a complete eigenbasis `L·Aₘ = aₘ·Aₘ` is raised
//! to a real power α by keeping the eigenvectors and replacing each
//! eigenvalue by its principal-branch power:
//!
//! ```text
//! Lᵅ·G = Σₘ gₘ (aₘ)ᵅ Aₘ        where  G = Σₘ gₘ Aₘ
//! ```
//!
//! The family interpolates between the identity (α = 0) and the operator
//! itself (α = 1), and is additive in α for nonzero eigenvalues.
//!
//! Everything here is fixed at dimension 3: the eigenproblem is solved by
//! closed-form cubic roots with Newton polish, eigenvectors come from a
//! completely pivoted null-space extraction, and all orderings and phases
//! are made deterministic so downstream output is reproducible.

use crate::vec3::ComplexVec3;
use num_complex::Complex64;
use thiserror::Error;

/// Eigenbasis completeness bound: the eigenvector matrix must have a
/// 2-norm condition number below this for the recipe to apply.
pub const MAX_BASIS_CONDITION: f64 = 1e8;

/// Relative residual bound on `L·Aₘ = aₘ·Aₘ` accepted at construction.
pub const MAX_EIGENPAIR_RESIDUAL: f64 = 1e-10;

/// Eigenvalues whose real or imaginary part is below this (relative to the
/// operator's Frobenius norm) are snapped onto the axis. Pins the principal
/// branch for operators whose spectrum lies on the real or imaginary axis
/// up to rounding, e.g. the k-space curl with eigenvalues {±k, 0}.
const AXIS_SNAP_REL: f64 = 1e-12;

/// Roots closer than this (relative) are treated as one eigenvalue cluster
/// and given a joint eigenspace. Cubic roots of a genuine double eigenvalue
/// carry O(√ε) dirt, so the threshold sits well above that.
const CLUSTER_REL: f64 = 1e-6;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum LinOpError {
    #[error("operator entries must be finite")]
    NonFiniteOperator,
    #[error(
        "no complete eigenbasis within tolerance (basis condition {condition:.2e}, \
         worst eigenpair residual {residual:.2e}); the fractionalization recipe does not apply"
    )]
    DefectiveOperator { condition: f64, residual: f64 },
}

/// Principal-branch complex power aᵅ = exp(α(ln|a| + i·Arg a)), Arg ∈ (−π, π].
///
/// Conventions chosen so the fractional-operator axioms hold:
/// a⁰ = 1 for every a (including a = 0), and 0ᵅ = 0 for α > 0.
/// A signed-zero imaginary part is normalized so that negative reals take
/// Arg = +π, not −π.
pub fn principal_pow(a: Complex64, alpha: f64) -> Complex64 {
    if alpha == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    if a.re == 0.0 && a.im == 0.0 {
        return if alpha > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        };
    }
    // atan2(-0.0, x<0) = -π would flip the branch; force +0.0.
    let a = if a.im == 0.0 { Complex64::new(a.re, 0.0) } else { a };
    let (r, theta) = a.to_polar();
    Complex64::from_polar(r.powf(alpha), alpha * theta)
}

/// A 3×3 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix3(pub [[Complex64; 3]; 3]);

impl ComplexMatrix3 {
    pub const ZERO: ComplexMatrix3 = ComplexMatrix3([[Complex64::new(0.0, 0.0); 3]; 3]);

    pub fn identity() -> Self {
        let mut m = Self::ZERO;
        for i in 0..3 {
            m.0[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: [[Complex64; 3]; 3]) -> Self {
        ComplexMatrix3(rows)
    }

    pub fn from_columns(cols: [ComplexVec3; 3]) -> Self {
        let mut m = Self::ZERO;
        for (j, c) in cols.iter().enumerate() {
            for i in 0..3 {
                m.0[i][j] = c.0[i];
            }
        }
        m
    }

    pub fn diagonal(d: [Complex64; 3]) -> Self {
        let mut m = Self::ZERO;
        for (i, &v) in d.iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn column(&self, j: usize) -> ComplexVec3 {
        ComplexVec3([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn apply(&self, v: &ComplexVec3) -> ComplexVec3 {
        let mut out = ComplexVec3::ZERO;
        for i in 0..3 {
            out.0[i] = self.0[i][0] * v.0[0] + self.0[i][1] * v.0[1] + self.0[i][2] * v.0[2];
        }
        out
    }

    pub fn mul(&self, other: &ComplexMatrix3) -> ComplexMatrix3 {
        let mut out = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                let mut s = Complex64::new(0.0, 0.0);
                for l in 0..3 {
                    s += self.0[i][l] * other.0[l][j];
                }
                out.0[i][j] = s;
            }
        }
        out
    }

    pub fn sub(&self, other: &ComplexMatrix3) -> ComplexMatrix3 {
        let mut out = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.0[i][j] - other.0[i][j];
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn hermitian_transpose(&self) -> ComplexMatrix3 {
        let mut out = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn determinant(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse via the adjugate; returns `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<ComplexMatrix3> {
        let det = self.determinant();
        if det.norm() == 0.0 || !det.re.is_finite() || !det.im.is_finite() {
            return None;
        }
        let m = &self.0;
        let mut adj = Self::ZERO;
        // adj[j][i] = cofactor(i, j)
        for i in 0..3 {
            for j in 0..3 {
                let r0 = (i + 1) % 3;
                let r1 = (i + 2) % 3;
                let c0 = (j + 1) % 3;
                let c1 = (j + 2) % 3;
                adj.0[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            }
        }
        let inv_det = Complex64::new(1.0, 0.0) / det;
        for i in 0..3 {
            for j in 0..3 {
                adj.0[i][j] *= inv_det;
            }
        }
        Some(adj)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_entry_norm(&self) -> f64 {
        self.0.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Monic characteristic polynomial coefficients (c₂, c₁, c₀) of
    /// λ³ + c₂λ² + c₁λ + c₀ = −det(L − λI).
    fn characteristic(&self) -> (Complex64, Complex64, Complex64) {
        let tr = self.0[0][0] + self.0[1][1] + self.0[2][2];
        let m2 = self.mul(self);
        let tr2 = m2.0[0][0] + m2.0[1][1] + m2.0[2][2];
        let det = self.determinant();
        let c2 = -tr;
        let c1 = (tr * tr - tr2) * 0.5;
        let c0 = -det;
        (c2, c1, c0)
    }

    /// Eigendecompose this operator; entry point of the fractionalization
    /// recipe. Eigenvalues are ordered by descending real part (ties by
    /// descending imaginary part) and eigenvectors are unit-norm with a
    /// fixed phase, so results are deterministic.
    pub fn eigendecompose(&self) -> Result<EigenSystem, LinOpError> {
        EigenSystem::new(self)
    }
}

/// Eigenvalues and a complete eigenvector basis of an operator on C³ — the
/// substrate from which fractional powers are built.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    eigenvalues: [Complex64; 3],
    eigenvectors: [ComplexVec3; 3],
    basis_condition: f64,
    /// Inverse of the eigenvector matrix, cached for coefficient expansion.
    inverse: ComplexMatrix3,
}

impl EigenSystem {
    pub fn new(m: &ComplexMatrix3) -> Result<Self, LinOpError> {
        if !m.is_finite() {
            return Err(LinOpError::NonFiniteOperator);
        }

        let scale = m.frobenius_norm();
        let (c2, c1, c0) = m.characteristic();
        let mut roots = cubic_roots(c2, c1, c0);
        for r in roots.iter_mut() {
            *r = polish_root(*r, c2, c1, c0);
            *r = snap_to_axes(*r, AXIS_SNAP_REL * scale);
        }
        sort_descending(&mut roots);

        // Cluster equal-within-tolerance roots and extract a joint
        // eigenspace per cluster; the cluster mean cancels the symmetric
        // splitting error of a multiple cubic root.
        let mut eigenvalues = [Complex64::new(0.0, 0.0); 3];
        let mut eigenvectors = [ComplexVec3::ZERO; 3];
        let cluster_tol = CLUSTER_REL * scale;
        let mut i = 0;
        while i < 3 {
            let mut j = i + 1;
            while j < 3 && (roots[j] - roots[i]).norm() <= cluster_tol {
                j += 1;
            }
            let mult = j - i;
            let mean = roots[i..j].iter().sum::<Complex64>() / mult as f64;
            let mean = snap_to_axes(mean, AXIS_SNAP_REL * scale);
            let shifted = m.sub(&ComplexMatrix3::diagonal([mean; 3]));
            let basis = null_space_basis(&shifted, mult);
            for (l, v) in basis.into_iter().enumerate() {
                eigenvalues[i + l] = mean;
                eigenvectors[i + l] = v;
            }
            i = j;
        }

        // Unit norm plus a fixed phase: largest component made real positive.
        for v in eigenvectors.iter_mut() {
            *v = canonical_unit(v);
        }

        let vmat = ComplexMatrix3::from_columns(eigenvectors);
        let basis_condition = condition_number(&vmat);
        let mut residual: f64 = 0.0;
        let denom = if scale > 0.0 { scale } else { 1.0 };
        for l in 0..3 {
            let r = (m.apply(&eigenvectors[l]) - eigenvectors[l].scale(eigenvalues[l])).norm();
            residual = residual.max(r / denom);
        }
        if !basis_condition.is_finite()
            || basis_condition >= MAX_BASIS_CONDITION
            || residual > MAX_EIGENPAIR_RESIDUAL
        {
            return Err(LinOpError::DefectiveOperator {
                condition: basis_condition,
                residual,
            });
        }
        let inverse = vmat
            .inverse()
            .ok_or(LinOpError::DefectiveOperator { condition: basis_condition, residual })?;

        Ok(EigenSystem {
            eigenvalues,
            eigenvectors,
            basis_condition,
            inverse,
        })
    }

    pub fn eigenvalues(&self) -> &[Complex64; 3] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &[ComplexVec3; 3] {
        &self.eigenvectors
    }

    /// 2-norm condition number of the eigenvector matrix.
    pub fn basis_condition(&self) -> f64 {
        self.basis_condition
    }

    /// Expansion coefficients gₘ of `v` in the eigenbasis.
    pub fn coefficients(&self, v: &ComplexVec3) -> ComplexVec3 {
        self.inverse.apply(v)
    }

    /// The matrix of the fractional operator: same eigenvectors, eigenvalues
    /// raised to the principal-branch power α.
    pub fn fractional_power(&self, alpha: f64) -> ComplexMatrix3 {
        let d = ComplexMatrix3::diagonal([
            principal_pow(self.eigenvalues[0], alpha),
            principal_pow(self.eigenvalues[1], alpha),
            principal_pow(self.eigenvalues[2], alpha),
        ]);
        ComplexMatrix3::from_columns(self.eigenvectors)
            .mul(&d)
            .mul(&self.inverse)
    }

    /// Apply the fractional operator to a vector: Σₘ gₘ (aₘ)ᵅ Aₘ.
    pub fn apply_fractional(&self, alpha: f64, v: &ComplexVec3) -> ComplexVec3 {
        let g = self.coefficients(v);
        let mut out = ComplexVec3::ZERO;
        for m in 0..3 {
            out = out + self.eigenvectors[m].scale(g.0[m] * principal_pow(self.eigenvalues[m], alpha));
        }
        out
    }
}

/// Normalize to unit norm and rotate the phase so the largest-magnitude
/// component is real positive (first index wins ties).
fn canonical_unit(v: &ComplexVec3) -> ComplexVec3 {
    let n = v.norm();
    if n == 0.0 {
        return *v;
    }
    let mut best = 0;
    for i in 1..3 {
        if v.0[i].norm() > v.0[best].norm() {
            best = i;
        }
    }
    let phase = v.0[best].conj() / v.0[best].norm();
    v.scale(phase / n)
}

fn snap_to_axes(a: Complex64, tol: f64) -> Complex64 {
    let re = if a.re.abs() <= tol { 0.0 } else { a.re };
    let im = if a.im.abs() <= tol { 0.0 } else { a.im };
    Complex64::new(re, im)
}

fn sort_descending(roots: &mut [Complex64; 3]) {
    roots.sort_by(|a, b| {
        b.re.partial_cmp(&a.re)
            .unwrap()
            .then(b.im.partial_cmp(&a.im).unwrap())
    });
}

/// Roots of the monic cubic λ³ + c₂λ² + c₁λ + c₀ via the depressed-cubic
/// Cardano formula in complex arithmetic.
fn cubic_roots(c2: Complex64, c1: Complex64, c0: Complex64) -> [Complex64; 3] {
    let one = Complex64::new(1.0, 0.0);
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = c2 * c2 * c2 * (2.0 / 27.0) - c2 * c1 / 3.0 + c0;

    let half_q = q * 0.5;
    let disc = half_q * half_q + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let sd = disc.sqrt();
    // Pick the branch that avoids cancellation in -q/2 ± √disc.
    let u3 = {
        let a = -half_q + sd;
        let b = -half_q - sd;
        if a.norm() >= b.norm() {
            a
        } else {
            b
        }
    };

    let omega = Complex64::new(-0.5, 0.75_f64.sqrt()); // primitive cube root of unity
    if u3.norm() == 0.0 {
        // p = q = 0 (triple root) or the cube-root trick degenerates;
        // fall back to t³ = -q.
        let t = (-q).cbrt();
        let mut w = one;
        let mut out = [Complex64::new(0.0, 0.0); 3];
        for r in out.iter_mut() {
            *r = t * w - shift;
            w *= omega;
        }
        return out;
    }

    let u = u3.cbrt();
    let mut out = [Complex64::new(0.0, 0.0); 3];
    let mut w = one;
    for r in out.iter_mut() {
        let uk = u * w;
        *r = uk - p / (uk * 3.0) - shift;
        w *= omega;
    }
    out
}

/// A few Newton steps on the characteristic polynomial; recovers full f64
/// accuracy for simple roots and stalls harmlessly on multiple ones.
fn polish_root(mut x: Complex64, c2: Complex64, c1: Complex64, c0: Complex64) -> Complex64 {
    for _ in 0..8 {
        let f = ((x + c2) * x + c1) * x + c0;
        let df = (x * 3.0 + c2 * 2.0) * x + c1;
        if df.norm() == 0.0 {
            break;
        }
        let step = f / df;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        x -= step;
        if step.norm() <= f64::EPSILON * (1.0 + x.norm()) {
            break;
        }
    }
    x
}

/// Extract `dim` null-space basis vectors of `b` by Gaussian elimination
/// with complete pivoting, treating the `dim` smallest pivots as zero.
/// The free-variable construction makes the vectors exactly independent.
fn null_space_basis(b: &ComplexMatrix3, dim: usize) -> Vec<ComplexVec3> {
    let mut u = b.0;
    let mut col_perm = [0usize, 1, 2];

    let rank = 3 - dim;
    for step in 0..rank {
        // Complete pivot over the trailing submatrix; first maximum wins.
        let (mut pi, mut pj, mut pmax) = (step, step, -1.0);
        for (i, row) in u.iter().enumerate().skip(step) {
            for (j, entry) in row.iter().enumerate().skip(step) {
                let a = entry.norm();
                if a > pmax {
                    pmax = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        u.swap(step, pi);
        if pj != step {
            for row in u.iter_mut() {
                row.swap(step, pj);
            }
            col_perm.swap(step, pj);
        }
        let pivot = u[step][step];
        if pivot.norm() == 0.0 {
            continue;
        }
        let pivot_row = u[step];
        for row in u.iter_mut().skip(step + 1) {
            let f = row[step] / pivot;
            for (j, cell) in row.iter_mut().enumerate().skip(step) {
                *cell -= f * pivot_row[j];
            }
        }
    }

    // Back-substitute one basis vector per free column.
    let mut basis = Vec::with_capacity(dim);
    for free in rank..3 {
        let mut x = [Complex64::new(0.0, 0.0); 3];
        x[free] = Complex64::new(1.0, 0.0);
        for i in (0..rank).rev() {
            let mut s = Complex64::new(0.0, 0.0);
            for j in (i + 1)..3 {
                s += u[i][j] * x[j];
            }
            let pivot = u[i][i];
            x[i] = if pivot.norm() > 0.0 {
                -s / pivot
            } else {
                Complex64::new(0.0, 0.0)
            };
        }
        let mut v = ComplexVec3::ZERO;
        for i in 0..3 {
            v.0[col_perm[i]] = x[i];
        }
        basis.push(v);
    }

    // Orthonormalize within the eigenspace for conditioning (any basis of
    // the space is an eigenbasis).
    for i in 0..basis.len() {
        for j in 0..i {
            let proj = basis[j].hdot(&basis[i]);
            basis[i] = basis[i] - basis[j].scale(proj);
        }
        let n = basis[i].norm();
        if n > 0.0 {
            basis[i] = basis[i].scale(Complex64::new(1.0 / n, 0.0));
        }
    }
    basis
}

/// 2-norm condition number via the (real, nonnegative) eigenvalues of VᴴV.
fn condition_number(v: &ComplexMatrix3) -> f64 {
    let g = v.hermitian_transpose().mul(v);
    let (c2, c1, c0) = g.characteristic();
    let mut roots = cubic_roots(c2, c1, c0);
    for r in roots.iter_mut() {
        *r = polish_root(*r, c2, c1, c0);
    }
    let s: Vec<f64> = roots.iter().map(|r| r.re.max(0.0)).collect();
    let max = s.iter().cloned().fold(0.0, f64::max);
    let min = s.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        f64::INFINITY
    } else {
        (max / min).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec3::ComplexVec3;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel_err_vec(got: &ComplexVec3, want: &ComplexVec3) -> f64 {
        let denom = want.norm().max(1e-300);
        (*got - *want).norm() / denom
    }

    fn random_matrix(rng: &mut impl Rng) -> ComplexMatrix3 {
        let mut m = ComplexMatrix3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        m
    }

    /// Random matrices with iid entries are almost surely diagonalizable;
    /// keep only well-conditioned eigenbases so 1e-10 assertions have
    /// headroom.
    fn random_diagonalizable(rng: &mut impl Rng) -> (ComplexMatrix3, EigenSystem) {
        loop {
            let m = random_matrix(rng);
            if let Ok(sys) = m.eigendecompose() {
                if sys.basis_condition() < 1e3 {
                    return (m, sys);
                }
            }
        }
    }

    #[test]
    fn identity_has_unit_eigenvalues_and_orthonormal_basis() {
        let sys = ComplexMatrix3::identity().eigendecompose().unwrap();
        for a in sys.eigenvalues() {
            assert!((a - c(1.0, 0.0)).norm() < 1e-14);
        }
        for i in 0..3 {
            assert!((sys.eigenvectors()[i].norm() - 1.0).abs() < 1e-12);
            for j in 0..i {
                assert!(sys.eigenvectors()[j].hdot(&sys.eigenvectors()[i]).norm() < 1e-12);
            }
        }
        assert!(sys.basis_condition() < 1.0 + 1e-10);
    }

    #[test]
    fn diagonal_matrix_sorted_by_descending_real_then_imag() {
        let m = ComplexMatrix3::diagonal([c(2.0, 0.0), c(0.0, 3.0), c(-1.0, 0.0)]);
        let sys = m.eigendecompose().unwrap();
        // descending real part: 2, 0(+3i), -1
        assert!((sys.eigenvalues()[0] - c(2.0, 0.0)).norm() < 1e-12);
        assert!((sys.eigenvalues()[1] - c(0.0, 3.0)).norm() < 1e-12);
        assert!((sys.eigenvalues()[2] - c(-1.0, 0.0)).norm() < 1e-12);
        // standard basis vectors up to phase; the phase convention makes
        // them exactly e_i here
        assert!(rel_err_vec(&sys.eigenvectors()[0], &ComplexVec3::unit(0)) < 1e-12);
        assert!(rel_err_vec(&sys.eigenvectors()[1], &ComplexVec3::unit(1)) < 1e-12);
        assert!(rel_err_vec(&sys.eigenvectors()[2], &ComplexVec3::unit(2)) < 1e-12);
    }

    #[test]
    fn fractional_power_of_diagonal_takes_scalar_roots() {
        let m = ComplexMatrix3::diagonal([c(4.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let sys = m.eigendecompose().unwrap();
        let half = sys.fractional_power(0.5);
        let want = ComplexMatrix3::diagonal([c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        for i in 0..3 {
            for j in 0..3 {
                assert!((half.0[i][j] - want.0[i][j]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn alpha_zero_gives_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let (_, sys) = random_diagonalizable(&mut rng);
            let id = sys.fractional_power(0.0);
            let want = ComplexMatrix3::identity();
            for i in 0..3 {
                for j in 0..3 {
                    assert!((id.0[i][j] - want.0[i][j]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn alpha_one_recovers_operator() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let (m, sys) = random_diagonalizable(&mut rng);
            let back = sys.fractional_power(1.0);
            for i in 0..3 {
                for j in 0..3 {
                    assert!(
                        (back.0[i][j] - m.0[i][j]).norm() < 1e-10,
                        "entry ({i},{j}) differs"
                    );
                }
            }
        }
    }

    #[test]
    fn apply_matches_matrix_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let (_, sys) = random_diagonalizable(&mut rng);
            let v = ComplexVec3::new(
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            );
            let alpha = rng.gen_range(0.0..1.0);
            let direct = sys.apply_fractional(alpha, &v);
            let via_matrix = sys.fractional_power(alpha).apply(&v);
            assert!(rel_err_vec(&direct, &via_matrix) < 1e-12);
        }
    }

    #[test]
    fn additivity_in_alpha() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..20 {
            let (_, sys) = random_diagonalizable(&mut rng);
            let a1 = rng.gen_range(0.0..1.0);
            let a2 = rng.gen_range(0.0..1.0);
            let lhs = sys.fractional_power(a1).mul(&sys.fractional_power(a2));
            let rhs = sys.fractional_power(a1 + a2);
            let denom = rhs.frobenius_norm().max(1e-300);
            let mut err: f64 = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    err = err.max((lhs.0[i][j] - rhs.0[i][j]).norm());
                }
            }
            assert!(err / denom < 1e-10, "additivity error {err}");
        }
    }

    #[test]
    fn defective_jordan_block_is_rejected() {
        // [[1 1 0], [0 1 0], [0 0 2]] has a 2x2 Jordan block at eigenvalue 1.
        let m = ComplexMatrix3::from_rows([
            [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
        ]);
        assert!(matches!(
            m.eigendecompose(),
            Err(LinOpError::DefectiveOperator { .. })
        ));
    }

    #[test]
    fn non_finite_operator_is_rejected() {
        let mut m = ComplexMatrix3::identity();
        m.0[1][2] = c(f64::NAN, 0.0);
        assert_eq!(m.eigendecompose().unwrap_err(), LinOpError::NonFiniteOperator);
    }

    #[test]
    fn principal_branch_of_negative_real() {
        // (-8)^(1/3) on the principal branch is 2·e^{iπ/3}, not -2.
        let got = principal_pow(c(-8.0, 0.0), 1.0 / 3.0);
        let want = Complex64::from_polar(2.0, std::f64::consts::FRAC_PI_3);
        assert!((got - want).norm() < 1e-14);
        // signed zero must not flip the branch
        let got = principal_pow(c(-8.0, -0.0), 1.0 / 3.0);
        assert!((got - want).norm() < 1e-14);
    }

    #[test]
    fn zero_eigenvalue_power_rules() {
        assert_eq!(principal_pow(c(0.0, 0.0), 0.5), c(0.0, 0.0));
        assert_eq!(principal_pow(c(0.0, 0.0), 0.0), c(1.0, 0.0));
        assert_eq!(principal_pow(c(3.0, -4.0), 0.0), c(1.0, 0.0));
    }

    #[test]
    fn zero_matrix_decomposes_to_zero_spectrum() {
        let sys = ComplexMatrix3::ZERO.eigendecompose().unwrap();
        for a in sys.eigenvalues() {
            assert_eq!(*a, c(0.0, 0.0));
        }
        assert!(sys.basis_condition() < 1.0 + 1e-10);
    }

    #[test]
    fn repeated_semisimple_eigenvalue_gets_full_eigenspace() {
        let m = ComplexMatrix3::diagonal([c(2.0, 1.0), c(2.0, 1.0), c(-3.0, 0.0)]);
        let sys = m.eigendecompose().unwrap();
        assert!((sys.eigenvalues()[0] - c(2.0, 1.0)).norm() < 1e-10);
        assert!((sys.eigenvalues()[1] - c(2.0, 1.0)).norm() < 1e-10);
        assert!((sys.eigenvalues()[2] - c(-3.0, 0.0)).norm() < 1e-10);
        assert!(sys.basis_condition() < 10.0);
    }

    proptest! {
        // Axiom I: alpha = 1 reproduces the operator's action.
        #[test]
        fn axiom_one(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (m, sys) = random_diagonalizable(&mut rng);
            let v = ComplexVec3::new(
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            );
            let got = sys.apply_fractional(1.0, &v);
            let want = m.apply(&v);
            // scale-correct residual: ||m|| ||v|| keeps the bound meaningful
            // when v is nearly annihilated by m
            let denom = (m.frobenius_norm() * v.norm()).max(1e-300);
            prop_assert!((got - want).norm() / denom < 1e-10);
        }

        // Axiom II: alpha = 0 is the identity.
        #[test]
        fn axiom_two(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1000));
            let (_, sys) = random_diagonalizable(&mut rng);
            let v = ComplexVec3::new(
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            );
            let got = sys.apply_fractional(0.0, &v);
            prop_assert!(rel_err_vec(&got, &v) < 1e-10);
        }
    }
}
