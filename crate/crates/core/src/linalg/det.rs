use super::eigen::jacobi;
use super::matrix::{ComplexMatrix, C64};
use super::LinalgError;

/// Determinant as `mantissa * 2^exponent`, with `0.5 <= |mantissa| < 1` or a zero mantissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Determinant {
    pub mantissa: C64,
    pub exponent: i64,
}

impl Determinant {
    fn one() -> Self {
        Self {
            mantissa: C64::new(1.0, 0.0),
            exponent: 0,
        }
    }

    fn mul(mut self, z: C64) -> Self {
        self.mantissa *= z;
        self.normalize()
    }

    fn normalize(mut self) -> Self {
        let m = self.mantissa.norm();
        if m == 0.0 || !m.is_finite() {
            if m == 0.0 {
                self.exponent = 0;
            }
            return self;
        }
        let e = m.log2().floor() as i64 + 1;
        self.mantissa *= 2f64.powi(-e as i32);
        self.exponent += e;
        // guard against log2 rounding at exact powers of two
        let m = self.mantissa.norm();
        if m >= 1.0 {
            self.mantissa *= 0.5;
            self.exponent += 1;
        } else if m < 0.5 {
            self.mantissa *= 2.0;
            self.exponent -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.norm() == 0.0
    }

    /// `ln |det|`, `-inf` for a zero determinant.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.mantissa.norm().ln() + self.exponent as f64 * std::f64::consts::LN_2
    }

    /// The determinant as a complex number (may under/overflow).
    pub fn value(&self) -> C64 {
        self.mantissa * 2f64.powf(self.exponent as f64)
    }
}

/// Product of eigenvalues for Hermitian input; LU with partial pivoting otherwise.
pub fn det(x: &ComplexMatrix) -> Result<Determinant, LinalgError> {
    x.ensure_finite()?;
    if x.hermitian_defect() == 0.0 {
        let e = jacobi(x)?;
        return Ok(e
            .eigenvalues
            .values()
            .iter()
            .fold(Determinant::one(), |d, &l| d.mul(C64::new(l, 0.0))));
    }
    let n = x.dim();
    let mut a = x.clone();
    let mut d = Determinant::one();
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm()))
            .unwrap();
        if a[(pivot, k)].norm() == 0.0 {
            return Ok(Determinant {
                mantissa: C64::new(0.0, 0.0),
                exponent: 0,
            });
        }
        if pivot != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(pivot, j)];
                a[(pivot, j)] = tmp;
            }
            d = d.mul(C64::new(-1.0, 0.0));
        }
        let akk = a[(k, k)];
        d = d.mul(akk);
        for i in (k + 1)..n {
            let f = a[(i, k)] / akk;
            for j in (k + 1)..n {
                let akj = a[(k, j)];
                a[(i, j)] -= f * akj;
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn diagonal() {
        let d = det(&ComplexMatrix::from_real_diag(&[2.0, 3.0])).unwrap();
        assert_relative_eq!(d.value().re, 6.0, epsilon = 1e-14);
        assert_eq!(d.value().im, 0.0);
    }

    #[test]
    fn general_complex_lu() {
        // det [[0, i], [2, 1]] = -2i
        let x = ComplexMatrix::from_rows(&[
            vec![C64::new(0.0, 0.0), C64::new(0.0, 1.0)],
            vec![C64::new(2.0, 0.0), C64::new(1.0, 0.0)],
        ])
        .unwrap();
        let d = det(&x).unwrap();
        assert_relative_eq!(d.value().re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(d.value().im, -2.0, epsilon = 1e-14);
    }

    #[test]
    fn huge_determinant_does_not_overflow() {
        let x = ComplexMatrix::from_real_diag(&[1e200, 1e200, 1e200]);
        let d = det(&x).unwrap();
        assert!(d.value().re.is_infinite());
        assert_relative_eq!(d.ln_abs(), 600.0 * 10f64.ln(), max_relative = 1e-14);
        let y = ComplexMatrix::from_real_diag(&[1e-200, 1e-200, -1e-200]);
        let d = det(&y).unwrap();
        assert!(d.mantissa.re < 0.0);
        assert_relative_eq!(d.ln_abs(), -600.0 * 10f64.ln(), max_relative = 1e-14);
    }

    #[test]
    fn singular_lu() {
        let x = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        let x = &x * &ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert!(det(&x).unwrap().is_zero() || det(&x).unwrap().ln_abs() < -30.0);
    }
}
