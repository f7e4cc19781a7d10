//! Modular screening configuration.
//!
//! Laurent-matrix identities are screened by specializing `q, t` to residues
//! at deterministic pseudo-random points over several odd primes. A screened
//! mismatch proves non-identity; agreement at every point is only evidence,
//! so "trivial" verdicts always go through exact confirmation (unless the
//! caller explicitly turns confirmation off).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default screening primes: three well-known 30-bit NTT primes.
pub const DEFAULT_PRIMES: [u64; 3] = [998244353, 1004535809, 754974721];

/// Environment variable holding a comma-separated prime list.
pub const PRIMES_ENV: &str = "MAPCLASS_SCREEN_PRIMES";

/// Environment variable toggling exact confirmation ("1"/"0").
pub const EXACT_ENV: &str = "MAPCLASS_EXACT";

/// One specialization point: `q -> q0`, `t -> t0` over `Z/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScreenPoint {
    pub prime: u64,
    pub q0: u64,
    pub t0: u64,
}

#[derive(Clone, Debug)]
pub struct ScreenConfig {
    primes: Vec<u64>,
    points_per_prime: usize,
}

impl Default for ScreenConfig {
    fn default() -> Self {
        ScreenConfig {
            primes: DEFAULT_PRIMES.to_vec(),
            points_per_prime: 2,
        }
    }
}

impl ScreenConfig {
    /// Validates the prime list: at least two distinct odd primes.
    pub fn new(primes: Vec<u64>, points_per_prime: usize) -> Result<Self> {
        let mut sorted = primes.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() < 2 {
            return Err(Error::Parse(
                "screening needs at least 2 distinct primes".into(),
            ));
        }
        if sorted.len() != primes.len() {
            return Err(Error::Parse("screening primes must be distinct".into()));
        }
        for &p in &primes {
            if p.is_multiple_of(2) || !is_prime_u64(p) {
                return Err(Error::Parse(format!("{p} is not an odd prime")));
            }
            if p >= 1 << 63 {
                return Err(Error::Parse(format!(
                    "screening prime {p} too large (must fit in 63 bits)"
                )));
            }
        }
        if points_per_prime == 0 {
            return Err(Error::Parse("need at least one point per prime".into()));
        }
        Ok(ScreenConfig {
            primes,
            points_per_prime,
        })
    }

    /// Reads `MAPCLASS_SCREEN_PRIMES` if set, defaults otherwise.
    pub fn from_env() -> Result<Self> {
        match std::env::var(PRIMES_ENV) {
            Ok(raw) => {
                let primes = raw
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad prime {s:?} in {PRIMES_ENV}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ScreenConfig::new(primes, 2)
            }
            Err(_) => Ok(ScreenConfig::default()),
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Deterministic specialization points, seeded per prime so output is
    /// reproducible for fixed inputs. Points avoid 0 and ±1.
    pub fn points(&self) -> Vec<ScreenPoint> {
        let mut out = Vec::with_capacity(self.primes.len() * self.points_per_prime);
        for &p in &self.primes {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_7063_6c73 ^ p);
            for _ in 0..self.points_per_prime {
                let q0 = rng.gen_range(2..p - 1);
                let t0 = rng.gen_range(2..p - 1);
                out.push(ScreenPoint { prime: p, q0, t0 });
            }
        }
        out
    }
}

/// Whether exact confirmation is enabled (`MAPCLASS_EXACT`, default on).
pub fn exactness_from_env() -> bool {
    match std::env::var(EXACT_ENV) {
        Ok(v) => !matches!(v.trim(), "0" | "false" | "off"),
        Err(_) => true,
    }
}

/// Deterministic Miller–Rabin for u64 (the base set below decides all u64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_prime() {
        for p in DEFAULT_PRIMES {
            assert!(is_prime_u64(p), "{p}");
        }
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(998244353 * 3));
        assert!(is_prime_u64(2));
        assert!(is_prime_u64((1 << 61) - 1));
    }

    #[test]
    fn config_validation() {
        assert!(ScreenConfig::new(vec![998244353], 2).is_err());
        assert!(ScreenConfig::new(vec![998244353, 998244353], 2).is_err());
        assert!(ScreenConfig::new(vec![998244353, 1004535810], 2).is_err());
        assert!(ScreenConfig::new(vec![7, 11], 1).is_ok());
        assert!(ScreenConfig::new(vec![7, 11], 0).is_err());
    }

    #[test]
    fn points_are_deterministic() {
        let c = ScreenConfig::default();
        assert_eq!(c.points(), c.points());
        assert_eq!(c.points().len(), 6);
        for pt in c.points() {
            assert!(pt.q0 >= 2 && pt.q0 < pt.prime - 1);
            assert!(pt.t0 >= 2 && pt.t0 < pt.prime - 1);
        }
    }
}
