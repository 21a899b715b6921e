//! Relation lattices on the `n x n` torus window.
//!
//! The winding invariant identifies `M(2, n)'` with the quotient of the
//! Laurent ring by the ideal generated by windings of relators. Since
//! `1 - X^n` and `1 - Y^n` are relator windings, the ideal contains every
//! polynomial whose torus reduction vanishes, and the quotient is
//! `Z^{n^2} / L` where `L` is spanned by the cyclic translates of the reduced
//! relator windings. [`RelationLattice`] holds `L` in Hermite normal form;
//! its Smith invariants give the quotient and its pivots give canonical
//! representatives.
//!
//! Only the relators supplied are used, so the order computed is an upper
//! bound for `|M(2, n)'|` that is exact when the relators generate the ideal.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::coloring::{prime_power_exponent, two_power_exponent};
use crate::error::{Error, Result};
use crate::intmat::{factored, smith_divisors, HermiteBasis};
use crate::invariant::derived_part;
use crate::laurent::{json_int, TorusPiece};
use crate::winding::winding_invariant;
use crate::word::{completed_relator_family, named_relator_family, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationLattice {
    n: usize,
    relators: Vec<String>,
    basis: HermiteBasis,
}

impl RelationLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relators(&self) -> &[String] {
        &self.relators
    }

    pub fn basis(&self) -> &HermiteBasis {
        &self.basis
    }

    pub fn is_finite(&self) -> bool {
        self.basis.rank() == self.basis.dim()
    }
}

/// Largest window the command line builds without `--allow-large`.
pub const DEFAULT_WINDOW_GUARD: usize = 8;

/// Winding → torus reduction → all `n^2` cyclic translates → Hermite basis.
///
/// Relators must lie in `F2'`. That they are products of `n`-th powers is
/// not checked.
pub fn build_lattice(relators: &[(String, Word)], n: usize) -> Result<RelationLattice> {
    if n < 2 {
        return Err(Error::InvalidModulus {
            n: n as u64,
            reason: "torus window needs n >= 2",
        });
    }
    let pieces: Vec<TorusPiece> = relators
        .par_iter()
        .map(|(_, w)| Ok(winding_invariant(w)?.reduce_mod_torus(n)))
        .collect::<Result<_>>()?;
    let translates: Vec<Vec<Vec<BigInt>>> = pieces
        .par_iter()
        .map(|p| {
            let mut seen = HashSet::new();
            (0..n as i64)
                .flat_map(|i| (0..n as i64).map(move |j| (i, j)))
                .map(|t| p.translate(t).into_entries())
                .filter(|e| seen.insert(e.clone()))
                .collect()
        })
        .collect();
    let mut basis = HermiteBasis::new(n * n);
    let mut inserted = HashSet::new();
    for v in translates.into_iter().flatten() {
        if v.iter().any(|e| !e.is_zero()) && inserted.insert(v.clone()) {
            basis.insert(v);
        }
    }
    basis.canonicalize();
    Ok(RelationLattice {
        n,
        relators: relators.iter().map(|(name, _)| name.clone()).collect(),
        basis,
    })
}

/// The symmetric relator family for `M(2, n)`.
pub fn family_lattice(n: usize) -> Result<RelationLattice> {
    build_lattice(&named_relator_family(n as u64)?, n)
}

/// Lattice of [`completed_relator_family`].
pub fn completed_lattice(n: usize) -> Result<RelationLattice> {
    build_lattice(&completed_relator_family(n as u64)?, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSummary {
    pub n: usize,
    pub relators: Vec<String>,
    /// Invariant factors greater than one, then a zero per free summand.
    pub elementary_divisors: Vec<BigInt>,
    /// `None` when the quotient is infinite.
    pub order: Option<BigUint>,
}

impl QuotientSummary {
    pub fn order_factored(&self) -> String {
        match &self.order {
            Some(o) => factored(o),
            None => "infinite".into(),
        }
    }
}

impl Serialize for QuotientSummary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QuotientSummary", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("relators", &self.relators)?;
        let divs: Vec<serde_json::Value> = self.elementary_divisors.iter().map(json_int).collect();
        st.serialize_field("elementary_divisors", &divs)?;
        let order = self
            .order
            .as_ref()
            .map_or_else(|| "infinite".to_string(), BigUint::to_string);
        st.serialize_field("order", &order)?;
        st.serialize_field("order_factored", &self.order_factored())?;
        st.end()
    }
}

pub fn quotient_order(lat: &RelationLattice) -> QuotientSummary {
    let divs = smith_divisors(&lat.basis);
    let order = lat.is_finite().then(|| {
        divs.iter()
            .map(|d| d.magnitude().clone())
            .product::<BigUint>()
    });
    QuotientSummary {
        n: lat.n,
        relators: lat.relators.clone(),
        elementary_divisors: divs,
        order,
    }
}

/// Canonical representative of `piece + L`.
pub fn normal_form(lat: &RelationLattice, piece: &TorusPiece) -> TorusPiece {
    assert_eq!(piece.n(), lat.n, "piece and lattice use different windows");
    TorusPiece::from_entries(lat.n, lat.basis.reduce(piece.entries()))
}

fn m24_lattice() -> &'static RelationLattice {
    static LATTICE: OnceLock<RelationLattice> = OnceLock::new();
    LATTICE.get_or_init(|| family_lattice(4).expect("n = 4 family is valid"))
}

/// Word problem in `M(2, 4)` by normal forms.
pub fn m24_word_problem_nf(u: &Word) -> bool {
    match derived_part(u, 4) {
        None => false,
        Some(v) => {
            let piece = winding_invariant(&v)
                .expect("derived part lies in F2'")
                .reduce_mod_torus(4);
            normal_form(m24_lattice(), &piece).is_zero()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub formula: &'static str,
    /// Lower or upper bound on `|M(d, n)|` (or on `|M(2, n)'|` where noted).
    pub kind: &'static str,
    pub applicable: bool,
    #[serde(serialize_with = "optional_decimal")]
    pub value: Option<BigUint>,
    pub factored: Option<String>,
}

fn optional_decimal<S: Serializer>(
    x: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn bound(
    name: &'static str,
    formula: &'static str,
    kind: &'static str,
    value: Option<BigUint>,
) -> Bound {
    Bound {
        name,
        formula,
        kind,
        applicable: value.is_some(),
        factored: value.as_ref().map(factored),
        value,
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Closed-form bounds for `|M(d, n)|`. Bounds whose hypotheses fail are
/// listed with `applicable = false` and no value.
pub fn closed_form_bounds(d: u64, n: u64) -> Vec<Bound> {
    let pk = (2..=n)
        .find(|p| n.is_multiple_of(*p))
        .and_then(|p| prime_power_exponent(n, p).map(|k| (p, k)));
    let two = d == 2;
    let k2 = two_power_exponent(n, 2).ok().filter(|_| two);
    let pow = |b: u64, e: u64| -> BigUint { Pow::pow(big(b), e) };
    vec![
        bound(
            "newman_upper",
            "n^(1+d+(d-1)n^d)",
            "upper",
            (n >= 2 && d >= 1)
                .then(|| n.checked_pow(d as u32))
                .flatten()
                .map(|nd| pow(n, 1 + d + (d - 1) * nd)),
        ),
        bound(
            "newman_lower",
            "p^(1+d(k-1)+(d-1)p^((k-1)d)), n = p^k",
            "lower",
            pk.filter(|_| d >= 1).and_then(|(p, k)| {
                let k = k as u64;
                p.checked_pow(((k - 1) * d) as u32)
                    .map(|q| pow(p, 1 + d * (k - 1) + (d - 1) * q))
            }),
        ),
        bound(
            "newman_two_generator_lower",
            "n^2 2^(n^2/4 - 1), n = 2^k",
            "lower",
            k2.map(|_| pow(n, 2) * pow(2, n * n / 4 - 1)),
        ),
        bound(
            "newman_two_generator_upper",
            "n^(n^2+3)",
            "upper",
            (two && n >= 2).then(|| pow(n, n * n + 3)),
        ),
        bound(
            "omega_bar_lower",
            "n^2 (n/2)^(n+1), n = 2^k, k >= 2",
            "lower",
            k2.map(|_| pow(n, 2) * pow(n / 2, n + 1)),
        ),
        bound(
            "cotainf_lower",
            "n^2 2^(5n^2/16 - 1), n = 2^k, k >= 3",
            "lower",
            k2.filter(|&k| k >= 3)
                .map(|_| pow(n, 2) * pow(2, 5 * n * n / 16 - 1)),
        ),
        bound(
            "cotasup_upper",
            "n^((n-1)^2), n >= 3",
            "upper",
            (two && n >= 3).then(|| pow(n, (n - 1) * (n - 1))),
        ),
    ]
}

/// Known orders quoted for context. They are not computed here.
pub fn literature_notes(d: u64, n: u64) -> Vec<&'static str> {
    let mut notes = Vec::new();
    if d == 2 {
        match n {
            4 => notes.push("|M(2,4)| = 2^10 (Gupta and Tobin)"),
            8 => notes.push("|M(2,8)| = 2^63 (Hermanns); M(2,8) has class 12"),
            16 => notes.push("2^87 <= |M(2,16)| <= 2^376"),
            _ => {}
        }
    }
    notes
}

/// `|M(2, n)| = n^2 |M(2, n)'|` for `n = 2^k`.
pub fn group_order_from_derived(n: u64, derived: &BigUint) -> BigUint {
    big(n) * big(n) * derived
}

pub fn is_power_of_two_multiple(x: &BigUint, e: u64) -> bool {
    let m = BigUint::one() << e;
    !x.is_zero() && (x % &m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::log2_exact;
    use crate::word::{parse_word, random_nth_power_product};

    fn named(ws: &[&str]) -> Vec<(String, Word)> {
        ws.iter()
            .map(|s| (s.to_string(), parse_word(s).unwrap()))
            .collect()
    }

    #[test]
    fn commutator_power_only() {
        for n in [2usize, 3, 4] {
            let lat = build_lattice(&named(&[&format!("[x,y]^{n}")]), n).unwrap();
            let q = quotient_order(&lat);
            assert_eq!(q.order, Some(BigUint::from(n).pow((n * n) as u32)));
        }
    }

    #[test]
    fn empty_family_is_infinite() {
        let lat = build_lattice(&[], 3).unwrap();
        let q = quotient_order(&lat);
        assert_eq!(q.order, None);
        assert_eq!(q.order_factored(), "infinite");
        assert_eq!(q.elementary_divisors.len(), 9);
    }

    #[test]
    fn rejects_words_outside_derived_subgroup() {
        assert!(build_lattice(&named(&["x^4"]), 4).is_err());
    }

    #[test]
    fn m24_quotient() {
        let lat = family_lattice(4).unwrap();
        let q = quotient_order(&lat);
        assert_eq!(q.order, Some(BigUint::from(64u32)));
        assert_eq!(
            log2_exact(&group_order_from_derived(4, q.order.as_ref().unwrap())),
            Some(10)
        );
        for row in lat.basis().rows() {
            let p = TorusPiece::from_entries(4, row.to_vec());
            assert!(normal_form(&lat, &p).is_zero());
        }
        for seed in 0..30 {
            let z = random_nth_power_product(4, 3, 6, seed);
            let p = winding_invariant(&z).unwrap().reduce_mod_torus(4);
            assert!(normal_form(&lat, &p).is_zero(), "seed {seed}");
        }
    }

    #[test]
    fn completed_family() {
        let full = completed_lattice(4).unwrap();
        assert_eq!(full.basis(), family_lattice(4).unwrap().basis());
        let partial = family_lattice(8).unwrap();
        let full = completed_lattice(8).unwrap();
        assert_eq!(quotient_order(&partial).order_factored(), "2^71");
        assert_eq!(quotient_order(&full).order_factored(), "2^57");
        for row in partial.basis().rows() {
            assert!(normal_form(&full, &TorusPiece::from_entries(8, row.to_vec())).is_zero());
        }
    }

    #[test]
    fn m24_nf_decider() {
        assert!(!m24_word_problem_nf(&parse_word("[x,y]^2").unwrap()));
        assert!(m24_word_problem_nf(&parse_word("x^4").unwrap()));
        assert!(!m24_word_problem_nf(&parse_word("x").unwrap()));
        assert!(m24_word_problem_nf(&crate::word::engel_word(5).unwrap()));
    }

    #[test]
    fn order_independence() {
        let mut family = named_relator_family(4).unwrap();
        let a = build_lattice(&family, 4).unwrap();
        family.reverse();
        let b = build_lattice(&family, 4).unwrap();
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn bounds_table() {
        let get = |d, n, name| {
            closed_form_bounds(d, n)
                .into_iter()
                .find(|b| b.name == name)
                .unwrap()
        };
        assert_eq!(
            get(2, 4, "newman_upper").value,
            Some(BigUint::from(4u32).pow(19u32))
        );
        assert_eq!(get(2, 8, "cotainf_lower").factored.as_deref(), Some("2^25"));
        assert_eq!(
            get(2, 16, "cotainf_lower").factored.as_deref(),
            Some("2^87")
        );
        assert_eq!(get(2, 4, "cotasup_upper").factored.as_deref(), Some("2^18"));
        assert!(!get(2, 4, "cotainf_lower").applicable);
        assert_eq!(get(2, 8, "newman_lower").factored.as_deref(), Some("2^21"));
        assert!(is_power_of_two_multiple(&BigUint::from(128u32), 7));
    }
}
