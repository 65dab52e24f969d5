//! Fixed-size 3-vectors over the complex numbers, plus the few real-vector
//! helpers the k-space machinery needs.

use num_complex::Complex64;
use std::ops::{Add, Index, Mul, Neg, Sub};

/// A real 3-vector; carries wavevectors and rotation axes.
pub type RealVec3 = [f64; 3];

/// Cross product of two real 3-vectors.
pub fn real_cross(a: RealVec3, b: RealVec3) -> RealVec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Euclidean norm of a real 3-vector.
pub fn real_norm(a: RealVec3) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

/// A 3-component complex vector; carries field phasors and expansion
/// coefficients in eigenbases of operators on C³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVec3(pub [Complex64; 3]);

impl ComplexVec3 {
    pub const ZERO: ComplexVec3 = ComplexVec3([Complex64::new(0.0, 0.0); 3]);

    pub fn new(x: Complex64, y: Complex64, z: Complex64) -> Self {
        ComplexVec3([x, y, z])
    }

    pub fn from_real(v: RealVec3) -> Self {
        ComplexVec3([
            Complex64::new(v[0], 0.0),
            Complex64::new(v[1], 0.0),
            Complex64::new(v[2], 0.0),
        ])
    }

    /// Unit vector along coordinate axis `i` (0 = x, 1 = y, 2 = z).
    pub fn unit(i: usize) -> Self {
        let mut v = Self::ZERO;
        v.0[i] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn x(&self) -> Complex64 {
        self.0[0]
    }

    pub fn y(&self) -> Complex64 {
        self.0[1]
    }

    pub fn z(&self) -> Complex64 {
        self.0[2]
    }

    /// Unconjugated dot product a·b = Σ aᵢbᵢ (bilinear, used for
    /// transversality checks against real wavevectors).
    pub fn dot(&self, other: &ComplexVec3) -> Complex64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    /// Hermitian inner product ⟨a|b⟩ = Σ āᵢbᵢ.
    pub fn hdot(&self, other: &ComplexVec3) -> Complex64 {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1] + self.0[2].conj() * other.0[2]
    }

    pub fn cross(&self, other: &ComplexVec3) -> ComplexVec3 {
        ComplexVec3([
            self.0[1] * other.0[2] - self.0[2] * other.0[1],
            self.0[2] * other.0[0] - self.0[0] * other.0[2],
            self.0[0] * other.0[1] - self.0[1] * other.0[0],
        ])
    }

    /// Euclidean norm √Σ|vᵢ|².
    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest component magnitude max |vᵢ|.
    pub fn max_component(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> ComplexVec3 {
        ComplexVec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn conj(&self) -> ComplexVec3 {
        ComplexVec3([self.0[0].conj(), self.0[1].conj(), self.0[2].conj()])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

impl Index<usize> for ComplexVec3 {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

impl Add for ComplexVec3 {
    type Output = ComplexVec3;
    fn add(self, rhs: ComplexVec3) -> ComplexVec3 {
        ComplexVec3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl Sub for ComplexVec3 {
    type Output = ComplexVec3;
    fn sub(self, rhs: ComplexVec3) -> ComplexVec3 {
        ComplexVec3([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

impl Neg for ComplexVec3 {
    type Output = ComplexVec3;
    fn neg(self) -> ComplexVec3 {
        ComplexVec3([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<Complex64> for ComplexVec3 {
    type Output = ComplexVec3;
    fn mul(self, s: Complex64) -> ComplexVec3 {
        self.scale(s)
    }
}

impl Mul<f64> for ComplexVec3 {
    type Output = ComplexVec3;
    fn mul(self, s: f64) -> ComplexVec3 {
        self.scale(Complex64::new(s, 0.0))
    }
}
