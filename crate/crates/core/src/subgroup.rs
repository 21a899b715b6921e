//! Orders of subgroups of `(Z_n)^r`.
//!
//! The subgroup generated by `g_1, ..., g_k` is `(L + nZ^r) / nZ^r` where `L`
//! is the integer span of lifts of the generators, so its order is `n^r`
//! divided by the order of `Z^r / (L + nZ^r)`. The latter is the product of
//! the Smith invariants of the lattice.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::coloring::two_power_exponent;
use crate::error::{Error, Result};
use crate::intmat::{log2_exact, smith_divisors, HermiteBasis};
use crate::invariant::{
    cotainf_family, cotainf_family_with, gamma_orbits, lambda_value, omega, omega_bar_of_poly,
    omega_of_poly, InvariantSpec,
};
use crate::laurent::LaurentPoly;
use crate::word::{parse_word, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueVectorSet {
    n: u64,
    r: usize,
    generators: Vec<Vec<u64>>,
}

impl ResidueVectorSet {
    pub fn new(n: u64, r: usize) -> ResidueVectorSet {
        assert!(n >= 1, "modulus must be positive");
        ResidueVectorSet {
            n,
            r,
            generators: Vec::new(),
        }
    }

    pub fn from_generators(
        n: u64,
        r: usize,
        gens: impl IntoIterator<Item = Vec<u64>>,
    ) -> ResidueVectorSet {
        let mut s = ResidueVectorSet::new(n, r);
        for g in gens {
            s.push(g);
        }
        s
    }

    /// Adds a generator, reducing its entries mod `n`.
    pub fn push(&mut self, g: Vec<u64>) {
        assert_eq!(g.len(), self.r, "generator has the wrong length");
        self.generators
            .push(g.into_iter().map(|a| a % self.n).collect());
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }
}

/// Order of the generated subgroup.
pub fn subgroup_order(set: &ResidueVectorSet) -> BigUint {
    let n = BigInt::from(set.n);
    let mut lattice = HermiteBasis::scaled_identity(set.r, &n);
    for g in &set.generators {
        lattice.insert(g.iter().map(|&a| BigInt::from(a)).collect());
    }
    let index: BigInt = smith_divisors(&lattice).into_iter().product();
    let total = BigUint::from(set.n).pow(set.r as u32);
    total / index.magnitude()
}

pub const BFS_LIMIT: u64 = 1_000_000;

/// Closure of the generators under addition, by breadth-first search. Only
/// runs when `n^r <= 10^6`.
pub fn subgroup_order_bfs(set: &ResidueVectorSet) -> Option<u64> {
    let size = set.n.checked_pow(set.r as u32)?;
    if size > BFS_LIMIT {
        return None;
    }
    let encode = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &a| acc * set.n + a);
    let gens: Vec<Vec<u64>> = set.generators.clone();
    let mut seen = vec![false; size as usize];
    let zero = vec![0u64; set.r];
    seen[encode(&zero) as usize] = true;
    let mut queue = vec![zero];
    let mut count = 1u64;
    while let Some(v) = queue.pop() {
        for g in &gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(a, b)| (a + b) % set.n).collect();
            let k = encode(&w) as usize;
            if !seen[k] {
                seen[k] = true;
                count += 1;
                queue.push(w);
            }
        }
    }
    Some(count)
}

/// `Ω` of every unit square in `[0, n)^2`; these generate `Im(Ω)`.
pub fn omega_image_generators(n: u64) -> Result<ResidueVectorSet> {
    two_power_exponent(n, 2)?;
    let mut set = ResidueVectorSet::new(n, n as usize);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            set.push(omega_of_poly(&LaurentPoly::monomial(i, j, 1), n)?.to_vec());
        }
    }
    Ok(set)
}

/// As [`omega_image_generators`] with the area prepended. The area lives in
/// `Z_{n/2}` and is embedded in `Z_n` by doubling.
pub fn omega_bar_image_generators(n: u64) -> Result<ResidueVectorSet> {
    two_power_exponent(n, 2)?;
    let mut set = ResidueVectorSet::new(n, n as usize + 1);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let (a, o) = omega_bar_of_poly(&LaurentPoly::monomial(i, j, 1), n)?;
            let mut g = vec![2 * a];
            g.extend(o.to_vec());
            set.push(g);
        }
    }
    Ok(set)
}

pub fn omega_image_order(n: u64) -> Result<BigUint> {
    Ok(subgroup_order(&omega_image_generators(n)?))
}

pub fn omega_bar_image_order(n: u64) -> Result<BigUint> {
    Ok(subgroup_order(&omega_bar_image_generators(n)?))
}

/// The nine tuples listed for the `R(2, 8)` bound.
pub fn listed_r28_tuples() -> Vec<Vec<u64>> {
    let halves = [[4, 0, 0, 4], [4, 4, 0, 0], [0, 4, 4, 0]];
    let mut out = Vec::new();
    for a in &halves {
        for b in &halves {
            out.push(a.iter().chain(b).copied().collect());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedBurnsideBound {
    /// `z = (x^4 (x^-1 y)^4 y^-4)^2`.
    pub z: String,
    pub omega_z: Vec<u64>,
    /// `Ω` of `x^i y^j z y^-j x^-i` for `i, j` in `0..3`, `i` outer.
    pub conjugate_tuples: Vec<Vec<u64>>,
    /// Whether the computed tuples are, as a set, the listed ones.
    pub matches_listed_tuples: bool,
    #[serde(serialize_with = "crate::intmat::decimal")]
    pub subgroup_order: BigUint,
    pub subgroup_exponent: u64,
    /// Order of `B(2, 4)` is `2^12`.
    pub burnside_2_4_exponent: u64,
    /// Schreier rank of `F2^4`: `1 + [F2 : F2^4]`.
    pub schreier_rank_exponent: u64,
    pub base_exponent: u64,
    pub total_exponent: u64,
}

const BURNSIDE_2_4_LOG2: u64 = 12;

/// Lower bound `|R(2, 8)| >= 2^4109 · |subgroup|`.
pub fn restricted_burnside_bound() -> Result<RestrictedBurnsideBound> {
    let z = parse_word("(x^4(x^-1y)^4y^-4)^2")?;
    let omega_z = omega(&z, 8)?.to_vec();
    let mut tuples = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let c = Word::conjugate(&Word::monomial(i, j), &z);
            tuples.push(omega(&c, 8)?.to_vec());
        }
    }
    let computed: HashSet<&Vec<u64>> = tuples.iter().collect();
    let listed = listed_r28_tuples();
    let listed: HashSet<&Vec<u64>> = listed.iter().collect();
    let set = ResidueVectorSet::from_generators(8, 8, tuples.iter().cloned());
    let order = subgroup_order(&set);
    let sub_exp = log2_exact(&order)
        .ok_or_else(|| Error::CheckFailed(format!("subgroup order {order} is not a power of 2")))?;
    // F2 / (F2^4)^2 is an extension of B(2, 4) by (Z_2)^rank(F2^4).
    let rank = 1 + (1u64 << BURNSIDE_2_4_LOG2);
    let base = BURNSIDE_2_4_LOG2 + rank;
    Ok(RestrictedBurnsideBound {
        z: z.to_folded_string(),
        omega_z,
        matches_listed_tuples: computed == listed,
        conjugate_tuples: tuples,
        subgroup_order: order,
        subgroup_exponent: sub_exp,
        burnside_2_4_exponent: BURNSIDE_2_4_LOG2,
        schreier_rank_exponent: rank,
        base_exponent: base,
        total_exponent: base + sub_exp,
    })
}

pub const COTAINF_GUARD: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CotainfImage {
    pub n: u64,
    pub family_size: usize,
    pub orbit_count: usize,
    #[serde(serialize_with = "crate::intmat::decimal")]
    pub order: BigUint,
    /// `n^2 / 16`.
    pub lower_bound_exponent: u64,
}

impl CotainfImage {
    pub fn holds(&self) -> bool {
        self.order >= BigUint::one() << self.lower_bound_exponent
    }
}

/// Image of `ψ` on even pieces, generated by `ψ(2 X^i Y^j)` for `(i, j)` in
/// `[0, n)^2`.
pub fn cotainf_image_order_with(n: u64, specs: &[InvariantSpec]) -> BigUint {
    let mut set = ResidueVectorSet::new(n, specs.len());
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let p = LaurentPoly::monomial(i, j, 2);
            set.push(specs.iter().map(|s| lambda_value(s, &p)).collect());
        }
    }
    subgroup_order(&set)
}

pub fn cotainf_image_check(n: u64) -> Result<CotainfImage> {
    two_power_exponent(n, 3)?;
    if n > COTAINF_GUARD {
        return Err(Error::GuardExceeded {
            what: "cotainf modulus",
            limit: COTAINF_GUARD,
        });
    }
    let specs = cotainf_family(n)?;
    let orbits = gamma_orbits(n)?;
    let image = CotainfImage {
        n,
        family_size: specs.len(),
        orbit_count: orbits.len(),
        order: cotainf_image_order_with(n, &specs),
        lower_bound_exponent: n * n / 16,
    };
    if !image.holds() {
        return Err(Error::CheckFailed(format!(
            "cotainf image order {} is below 2^{}",
            image.order, image.lower_bound_exponent
        )));
    }
    Ok(image)
}

/// Image order with every orbit represented by its `k`-th element instead of
/// the smallest one.
pub fn cotainf_image_order_shifted(n: u64, k: usize) -> Result<BigUint> {
    let reps: Vec<(u64, u64)> = gamma_orbits(n)?.iter().map(|o| o[k % o.len()]).collect();
    Ok(cotainf_image_order_with(n, &cotainf_family_with(n, &reps)?))
}
