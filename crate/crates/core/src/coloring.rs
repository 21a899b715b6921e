//! Colorings of `Z_n`.
//!
//! A [`TwoColoring`] is good when antipodal residues `a` and `a + n/2` get
//! opposite colors. A [`PGoodColoring`] takes values in `Z_n` and is p-good
//! when every progression `a, a + n/p, ..., a + (p-1) n/p` sums to zero.
//! The two notions differ for `p = 2`; [`TwoColoring::to_p_good`] is the
//! bridge between them.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "B")]
    Black,
    #[serde(rename = "W")]
    White,
}

impl Color {
    pub fn weight(self) -> i64 {
        match self {
            Color::Black => 1,
            Color::White => -1,
        }
    }

    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Black/white coloring of `Z_n`. Serializes as `["B", "W", ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwoColoring {
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn new(colors: Vec<Color>) -> TwoColoring {
        assert!(!colors.is_empty(), "coloring of Z_0");
        TwoColoring { colors }
    }

    /// Parses a string of `B`/`W` characters.
    pub fn from_pattern(s: &str) -> Option<TwoColoring> {
        let colors: Option<Vec<Color>> = s
            .chars()
            .map(|c| match c {
                'B' | 'b' => Some(Color::Black),
                'W' | 'w' => Some(Color::White),
                _ => None,
            })
            .collect();
        colors.filter(|c| !c.is_empty()).map(TwoColoring::new)
    }

    pub fn n(&self) -> u64 {
        self.colors.len() as u64
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, a: i64) -> Color {
        self.colors[a.rem_euclid(self.colors.len() as i64) as usize]
    }

    pub fn is_good(&self) -> bool {
        let n = self.colors.len();
        n.is_multiple_of(2) && (0..n).all(|a| self.colors[a] != self.colors[(a + n / 2) % n])
    }

    /// Black as `1`, white as `n - 1`. The result is 2-good.
    pub fn to_p_good(&self) -> PGoodColoring {
        let n = self.n();
        PGoodColoring {
            p: 2,
            colors: self
                .colors
                .iter()
                .map(|c| match c {
                    Color::Black => 1,
                    Color::White => n - 1,
                })
                .collect(),
        }
    }

    pub fn pattern(&self) -> String {
        self.colors
            .iter()
            .map(|c| match c {
                Color::Black => 'B',
                Color::White => 'W',
            })
            .collect()
    }
}

/// The coloring `c_i`: black on `i, i+1, ..., i + n/2 - 1`, white elsewhere.
pub fn standard_coloring(i: u64, n: u64) -> Result<TwoColoring> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidModulus {
            n,
            reason: "good colorings need an even modulus",
        });
    }
    if i >= n / 2 {
        return Err(Error::OutOfRange {
            what: "coloring index",
            value: i as i64,
            expected: format!("0 <= i < {}", n / 2),
        });
    }
    Ok(TwoColoring::new(
        (0..n)
            .map(|a| {
                if (a + n - i) % n < n / 2 {
                    Color::Black
                } else {
                    Color::White
                }
            })
            .collect(),
    ))
}

pub const ENUMERATION_GUARD: u64 = 24;

/// All `2^(n/2)` good colorings of `Z_n`: free on `[0, n/2)`, forced after.
pub fn enumerate_good_colorings(n: u64) -> Result<Vec<TwoColoring>> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidModulus {
            n,
            reason: "good colorings need an even modulus",
        });
    }
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            what: "enumeration modulus",
            limit: ENUMERATION_GUARD,
        });
    }
    let half = (n / 2) as usize;
    Ok((0u64..1 << half)
        .map(|mask| good_coloring_from_mask(n, mask))
        .collect())
}

fn good_coloring_from_mask(n: u64, mask: u64) -> TwoColoring {
    let half = (n / 2) as usize;
    let mut colors = vec![Color::White; n as usize];
    for a in 0..half {
        let c = if mask >> a & 1 == 1 {
            Color::Black
        } else {
            Color::White
        };
        colors[a] = c;
        colors[a + half] = c.flip();
    }
    TwoColoring::new(colors)
}

pub fn random_good_coloring<R: Rng>(rng: &mut R, n: u64) -> TwoColoring {
    assert!(n >= 2 && n.is_multiple_of(2) && n <= 64);
    good_coloring_from_mask(n, rng.random::<u64>())
}

/// Black terms minus white terms in `a, a + b, ..., a + (len-1) b` read mod `n`.
pub fn progression_balance(c: &TwoColoring, a: i64, b: i64, len: u64) -> i64 {
    (0..len as i64).map(|t| c.color(a + t * b).weight()).sum()
}

/// `Z_n`-valued coloring. Serializes as an integer array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PGoodColoring {
    p: u64,
    colors: Vec<u64>,
}

impl PGoodColoring {
    /// Validates that `n = colors.len()` is a power of the prime `p` and that
    /// the p-good condition holds.
    pub fn new(p: u64, colors: Vec<u64>) -> Result<PGoodColoring> {
        let n = colors.len() as u64;
        if !is_prime(p) || prime_power_exponent(n, p).is_none() {
            return Err(Error::InvalidModulus {
                n,
                reason: "p-good colorings need n = p^k with p prime and k >= 1",
            });
        }
        let colors: Vec<u64> = colors.into_iter().map(|c| c % n).collect();
        let c = PGoodColoring { p, colors };
        if !c.is_p_good() {
            return Err(Error::CheckFailed(
                "coloring violates the p-good condition".into(),
            ));
        }
        Ok(c)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.colors.len() as u64
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn color(&self, a: i64) -> u64 {
        self.colors[a.rem_euclid(self.colors.len() as i64) as usize]
    }

    pub fn is_p_good(&self) -> bool {
        let n = self.n();
        let step = n / self.p;
        (0..step).all(|a| {
            (0..self.p)
                .map(|t| self.colors[(a + t * step) as usize])
                .fold(0u64, |s, c| (s + c) % n)
                == 0
        })
    }
}

/// A random p-good coloring of `Z_n`: colors are free except for one residue
/// in each class mod `n/p`, which balances the class.
pub fn random_p_good_coloring<R: Rng>(rng: &mut R, p: u64, n: u64) -> PGoodColoring {
    let step = n / p;
    let mut colors = vec![0u64; n as usize];
    for a in 0..step {
        let mut sum = 0;
        for t in 0..p - 1 {
            let c = rng.random_range(0..n);
            colors[(a + t * step) as usize] = c;
            sum = (sum + c) % n;
        }
        colors[(a + (p - 1) * step) as usize] = (n - sum) % n;
    }
    PGoodColoring::new(p, colors).expect("balanced by construction")
}

/// `Σ c(a + t b)` for `t < len`, reduced mod `n`.
pub fn p_good_progression_sum(c: &PGoodColoring, a: i64, b: i64, len: u64) -> u64 {
    let n = c.n();
    (0..len as i64).fold(0, |s, t| (s + c.color(a + t * b)) % n)
}

/// Partition of `[0, n)` into `p`-term progressions of difference `d`, or
/// `None` unless `p d` divides `n`. Each block `[k pd, (k+1) pd)` is split
/// into the `d` progressions starting at its first `d` elements.
pub fn matching_oracle(n: u64, d: u64, p: u64) -> Option<Vec<Vec<u64>>> {
    if d == 0 || p == 0 || !n.is_multiple_of(p * d) {
        return None;
    }
    let parts: Vec<Vec<u64>> = (0..n)
        .step_by((p * d) as usize)
        .flat_map(|base| (0..d).map(move |off| (0..p).map(|t| base + off + t * d).collect()))
        .collect();
    let mut seen = vec![false; n as usize];
    for part in &parts {
        assert_eq!(part.len() as u64, p);
        assert!(part.windows(2).all(|w| w[1] - w[0] == d));
        for &e in part {
            assert!(!seen[e as usize], "element {e} matched twice");
            seen[e as usize] = true;
        }
    }
    assert!(seen.iter().all(|&s| s));
    Some(parts)
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `k` with `n = p^k`, `k >= 1`.
pub(crate) fn prime_power_exponent(n: u64, p: u64) -> Option<u32> {
    if p < 2 || n < p {
        return None;
    }
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

/// `k` with `n = 2^k`, `k >= min_k`.
pub(crate) fn two_power_exponent(n: u64, min_k: u32) -> Result<u32> {
    match prime_power_exponent(n, 2) {
        Some(k) if k >= min_k => Ok(k),
        _ => Err(Error::InvalidModulus {
            n,
            reason: if min_k >= 3 {
                "expected n = 2^k with k >= 3"
            } else {
                "expected n = 2^k with k >= 2"
            },
        }),
    }
}
