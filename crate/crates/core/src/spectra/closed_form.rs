//! Closed-form signless Laplacian spectra for the prime coprime graphs of
//! `Z_n` and `D_n` when `n` is a prime, a product of two distinct primes, or a
//! prime power, together with the vertex partitions and quotient matrices
//! behind them.

use serde::{Deserialize, Serialize};

use super::{SpectrumResult, Surd};
use crate::error::{Result, ThetaError};
use crate::numtheory::{euler_phi, factorize, gcd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumFamily {
    Cyclic,
    Dihedral,
}

/// The arithmetic shapes of `n` that admit a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberShape {
    Prime(u64),
    /// `p < q`
    TwoPrimes(u64, u64),
    /// `p^m`, `m >= 2`
    PrimePower(u64, u32),
}

impl NumberShape {
    pub fn of(n: u64) -> Result<Self> {
        let unsupported = || {
            ThetaError::Unsupported(format!(
                "no closed form for n = {n}; supported shapes are n = p, n = pq (distinct primes) and n = p^m (m >= 2)"
            ))
        };
        if n < 2 {
            return Err(unsupported());
        }
        let f = factorize(n)?;
        match f.factors() {
            [(p, 1)] => Ok(NumberShape::Prime(*p)),
            [(p, m)] => Ok(NumberShape::PrimePower(*p, *m)),
            [(p, 1), (q, 1)] => Ok(NumberShape::TwoPrimes(*p, *q)),
            _ => Err(unsupported()),
        }
    }
}

fn int(x: u64) -> Surd {
    Surd::integer(x as i64)
}

/// Exact spectrum of `Q(Θ(Z_n))` or `Q(Θ(D_n))`.
pub fn closed_form_spectrum(family: SpectrumFamily, n: u64) -> Result<SpectrumResult> {
    let shape = NumberShape::of(n)?;
    let values: Vec<(Surd, usize)> = match (family, shape) {
        (SpectrumFamily::Cyclic, NumberShape::Prime(_)) => {
            // complete graph: (n-2)I + J
            vec![(int(2 * (n - 1)), 1), (int(n - 2), (n - 1) as usize)]
        }
        (SpectrumFamily::Cyclic, NumberShape::TwoPrimes(p, q)) => {
            let b = (p * q + 2 * p + 2 * q - 4) as i64;
            let c = (2 * (p + q - 1) * (p + q - 2)) as i64;
            let (hi, lo) = Surd::quadratic_roots(b, c);
            vec![
                (int(p + q - 1), (p * q - p - q) as usize),
                (int(p * q - 2), (p + q - 2) as usize),
                (hi, 1),
                (lo, 1),
            ]
        }
        (SpectrumFamily::Cyclic, NumberShape::PrimePower(p, _)) => {
            let b = (n + 2 * p - 2) as i64;
            let c = (2 * p * (p - 1)) as i64;
            let (hi, lo) = Surd::quadratic_roots(b, c);
            vec![
                (int(p), (n - p - 1) as usize),
                (int(n - 2), (p - 1) as usize),
                (hi, 1),
                (lo, 1),
            ]
        }
        (SpectrumFamily::Dihedral, NumberShape::Prime(_)) => {
            // complete graph on 2n vertices
            vec![(int(2 * (2 * n - 1)), 1), (int(2 * n - 2), (2 * n - 1) as usize)]
        }
        (SpectrumFamily::Dihedral, NumberShape::TwoPrimes(..)) => {
            let phi = euler_phi(n);
            let a = (3 * n - phi - 1) as i64;
            let rad = n * n + 2 * phi * n - phi * phi - 2 * n + 1;
            vec![
                (int(2 * (n - 1)), (2 * n - phi - 1) as usize),
                (int(2 * n - phi), (phi - 1) as usize),
                (Surd::new(a, 1, rad, 1), 1),
                (Surd::new(a, -1, rad, 1), 1),
            ]
        }
        (SpectrumFamily::Dihedral, NumberShape::PrimePower(p, _)) => {
            let a = (2 * n + p - 1) as i64;
            let rad = 2 * n * n - 2 * n - p * p + 1;
            vec![
                (int(2 * n - 2), (n + p - 1) as usize),
                (int(p + n), (n - p - 1) as usize),
                (Surd::new(a, 1, rad, 1), 1),
                (Surd::new(a, -1, rad, 1), 1),
            ]
        }
    };
    Ok(SpectrumResult::from_exact(values))
}

/// Vertex partition used to derive the closed form, in the vertex order of
/// [`crate::groups::GroupSpec::cyclic`] / [`crate::groups::GroupSpec::dihedral`].
///
/// * `Z_pq`: identity and non-generators | generators
/// * `Z_{p^m}`: identity and elements of order `p` | the rest
/// * `D_n`: the cyclic split of the rotations, then all reflections
pub fn theorem_partition(family: SpectrumFamily, n: u64) -> Result<Vec<Vec<usize>>> {
    let shape = NumberShape::of(n)?;
    let rotations: Vec<Vec<usize>> = match shape {
        NumberShape::TwoPrimes(..) => {
            let (first, second): (Vec<usize>, Vec<usize>) =
                (0..n as usize).partition(|&k| k == 0 || gcd(k as u64, n) != 1);
            vec![first, second]
        }
        NumberShape::PrimePower(p, _) => {
            let step = n / p;
            let (first, second): (Vec<usize>, Vec<usize>) =
                (0..n as usize).partition(|&k| (k as u64).is_multiple_of(step));
            vec![first, second]
        }
        NumberShape::Prime(_) => {
            return Err(ThetaError::Unsupported(
                "prime n gives a complete graph; no partition is needed".into(),
            ))
        }
    };
    Ok(match family {
        SpectrumFamily::Cyclic => rotations,
        SpectrumFamily::Dihedral => {
            let mut blocks = rotations;
            blocks.push((n as usize..2 * n as usize).collect());
            blocks
        }
    })
}

/// The quotient matrix of [`theorem_partition`] in closed form.
pub fn closed_form_quotient(family: SpectrumFamily, n: u64) -> Result<Vec<Vec<i64>>> {
    let shape = NumberShape::of(n)?;
    let n_ = n as i64;
    Ok(match (family, shape) {
        (_, NumberShape::Prime(_)) => {
            return Err(ThetaError::Unsupported(
                "prime n gives a complete graph; no partition is needed".into(),
            ))
        }
        (SpectrumFamily::Cyclic, NumberShape::TwoPrimes(..)) => {
            let phi = euler_phi(n) as i64;
            vec![vec![2 * n_ - phi - 2, phi], vec![n_ - phi, n_ - phi]]
        }
        (SpectrumFamily::Cyclic, NumberShape::PrimePower(p, _)) => {
            let p = p as i64;
            vec![vec![n_ + p - 2, n_ - p], vec![p, p]]
        }
        (SpectrumFamily::Dihedral, NumberShape::TwoPrimes(..)) => {
            let phi = euler_phi(n) as i64;
            vec![
                vec![3 * n_ - 2 - phi, phi, n_],
                vec![n_ - phi, 2 * n_ - phi, n_],
                vec![n_ - phi, phi, 3 * n_ - 2],
            ]
        }
        (SpectrumFamily::Dihedral, NumberShape::PrimePower(p, _)) => {
            let p = p as i64;
            vec![
                vec![2 * (n_ - 1) + p, n_ - p, n_],
                vec![p, n_ + p, n_],
                vec![p, n_ - p, 3 * n_ - 2],
            ]
        }
    })
}
