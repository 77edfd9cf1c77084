//! Independent oracles shared by the integration tests. Nothing here calls
//! the code path it is used to check.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

use boostent::ComplexMatrix;

pub type Mat4 = [[f64; 4]; 4];

fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut c = [[0.0; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            for j in 0..4 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Pure Lorentz boost of rapidity `eta` along spatial axis `axis` (1 = x, 2 = y).
pub fn axis_boost(axis: usize, eta: f64) -> Mat4 {
    let mut m = [[0.0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m[0][0] = eta.cosh();
    m[axis][axis] = eta.cosh();
    m[0][axis] = eta.sinh();
    m[axis][0] = eta.sinh();
    m
}

/// Pure boost taking the rest frame to four-velocity `u` (`u·u = 1`).
fn boost_from_velocity(u: [f64; 4]) -> Mat4 {
    let g = u[0];
    let mut m = [[0.0; 4]; 4];
    m[0][0] = g;
    for i in 1..4 {
        m[0][i] = u[i];
        m[i][0] = u[i];
        for j in 1..4 {
            m[i][j] = f64::from(u8::from(i == j)) + u[i] * u[j] / (1.0 + g);
        }
    }
    m
}

/// Wigner angle of two perpendicular boosts: composes `B_x(ξ)·B_y(δ)`,
/// factors it as `B(u)·R` with `B(u)` the pure boost carrying the same
/// four-velocity, and reads the rotation angle of `R` about z.
pub fn wigner_angle_by_composition(xi: f64, delta: f64) -> f64 {
    let lam = mat4_mul(&axis_boost(1, xi), &axis_boost(2, delta));
    let u = [lam[0][0], lam[1][0], lam[2][0], lam[3][0]];
    let inv = boost_from_velocity([u[0], -u[1], -u[2], -u[3]]);
    let r = mat4_mul(&inv, &lam);
    (r[2][1] - r[1][2]).atan2(r[1][1] + r[2][2]).abs()
}

/// Wootters' closed formula for X-shaped two-qubit states.
pub fn x_state_concurrence(rho: &ComplexMatrix) -> f64 {
    let d = |i: usize| rho[(i, i)].re;
    let a = rho[(0, 3)].norm() - (d(1) * d(2)).sqrt();
    let b = rho[(1, 2)].norm() - (d(0) * d(3)).sqrt();
    2.0 * a.max(b).max(0.0)
}

fn cmul(a: &[Complex64; 16], b: &[Complex64; 16]) -> [Complex64; 16] {
    let mut c = [Complex64::new(0.0, 0.0); 16];
    for i in 0..4 {
        for k in 0..4 {
            for j in 0..4 {
                c[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
            }
        }
    }
    c
}

/// Concurrence from the characteristic polynomial of `ρ ρ̃`: coefficients by
/// Faddeev–LeVerrier, roots by Durand–Kerner followed by Newton polishing.
pub fn wootters_by_char_poly(rho: &ComplexMatrix) -> f64 {
    let mut r = [Complex64::new(0.0, 0.0); 16];
    for i in 0..4 {
        for j in 0..4 {
            r[i * 4 + j] = rho[(i, j)];
        }
    }
    // σy⊗σy is real antidiagonal (-1, 1, 1, -1): (ỸMỸ)_{ij} = s_i s_j M_{3-i, 3-j}
    let s = [-1.0, 1.0, 1.0, -1.0];
    let mut tilde = [Complex64::new(0.0, 0.0); 16];
    for i in 0..4 {
        for j in 0..4 {
            tilde[i * 4 + j] = r[(3 - i) * 4 + (3 - j)].conj() * (s[i] * s[j]);
        }
    }
    let m = cmul(&r, &tilde);

    // Faddeev–LeVerrier: p(x) = x⁴ + c1 x³ + c2 x² + c3 x + c4
    let mut coeffs = [Complex64::new(1.0, 0.0); 5];
    let mut mk = m;
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        let tr: Complex64 = (0..4).map(|i| mk[i * 4 + i]).sum();
        let ck = -tr / (k as f64);
        *c = ck;
        if k < 4 {
            let mut shifted = mk;
            for i in 0..4 {
                shifted[i * 4 + i] += ck;
            }
            mk = cmul(&m, &shifted);
        }
    }
    let eval = |x: Complex64| {
        coeffs
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
    };
    let deriv = |x: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in coeffs[..4].iter().enumerate() {
            acc = acc * x + c * ((4 - k) as f64);
        }
        acc
    };

    let mut roots: Vec<Complex64> = (0..4)
        .map(|k| Complex64::new(0.4, 0.9).powu(k as u32) * 0.5)
        .collect();
    for _ in 0..500 {
        let prev = roots.clone();
        for i in 0..4 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
        if roots.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-18) {
            break;
        }
    }
    for z in roots.iter_mut() {
        for _ in 0..5 {
            let d = deriv(*z);
            if d.norm() == 0.0 {
                break;
            }
            *z -= eval(*z) / d;
        }
    }
    let mut lam: Vec<f64> = roots.iter().map(|z| z.re.max(0.0).sqrt()).collect();
    lam.sort_by(|a, b| b.total_cmp(a));
    (lam[0] - lam[1] - lam[2] - lam[3]).max(0.0)
}

/// Random full-rank density matrix `G G† / tr(G G†)`.
pub fn random_density<R: Rng>(rng: &mut R) -> ComplexMatrix {
    let mut g = Vec::with_capacity(16);
    for _ in 0..16 {
        g.push(Complex64::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ));
    }
    let g = ComplexMatrix::from_rows(4, &g).unwrap();
    let rho = &g * &g.adjoint();
    let tr = rho.trace().re;
    rho.scale(1.0 / tr)
}

/// Random Hermitian 4×4 with entries in [-1, 1].
pub fn random_hermitian<R: Rng>(rng: &mut R) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4).unwrap();
    for i in 0..4 {
        m[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..4 {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}
