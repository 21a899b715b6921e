use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use windlab_core::invariant::{lambda_of_word, omega};
use windlab_core::quotient::{build_lattice, family_lattice, normal_form, quotient_order};
use windlab_core::word::{named_relator_family, random_word};
use windlab_core::{
    winding_invariant, winding_oracle, InvariantSpec, Symmetry, TorusPiece, TwoColoring, Word,
};

fn derived(seed: u64, max_len: usize) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = random_word(&mut rng, max_len);
    let (a, b) = u.exponents();
    u.concat(&Word::monomial(-a, -b))
}

fn piece(n: usize, entries: &[i64]) -> TorusPiece {
    TorusPiece::from_entries(n, entries.iter().map(|&e| e.into()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn winding_is_a_homomorphism(s in any::<u64>(), t in any::<u64>()) {
        let (a, b) = (derived(s, 40), derived(t, 40));
        let lhs = winding_invariant(&a.concat(&b)).unwrap();
        let rhs = &winding_invariant(&a).unwrap() + &winding_invariant(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_translates(s in any::<u64>(), i in -5i64..5, j in -5i64..5) {
        let z = derived(s, 40);
        let c = Word::conjugate(&Word::monomial(i, j), &z);
        prop_assert_eq!(winding_invariant(&c).unwrap(), winding_invariant(&z).unwrap().translate((i, j)));
    }

    #[test]
    fn fast_path_matches_oracle(s in any::<u64>()) {
        let z = derived(s, 80);
        prop_assert_eq!(winding_invariant(&z).unwrap(), winding_oracle(&z).unwrap());
    }

    #[test]
    fn inverse_negates(s in any::<u64>()) {
        let z = derived(s, 40);
        prop_assert_eq!(winding_invariant(&z.inverse()).unwrap(), -&winding_invariant(&z).unwrap());
    }

    #[test]
    fn symmetries_preserve_membership(s in any::<u64>()) {
        let z = derived(s, 40);
        for sym in Symmetry::ALL {
            let w = z.apply_symmetry(sym);
            prop_assert!(w.in_derived_subgroup());
            prop_assert_eq!(w.apply_symmetry(sym), z.clone());
        }
    }

    #[test]
    fn normal_form_is_linear(a in prop::collection::vec(-9i64..9, 16), b in prop::collection::vec(-9i64..9, 16)) {
        let lat = family_lattice(4).unwrap();
        let (a, b) = (piece(4, &a), piece(4, &b));
        let lhs = normal_form(&lat, &a.add(&b));
        let rhs = normal_form(&lat, &normal_form(&lat, &a).add(&normal_form(&lat, &b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_translation_invariant_on_relators(s in any::<u64>(), i in 0i64..4, j in 0i64..4) {
        let lat = family_lattice(4).unwrap();
        let z = derived(s, 30);
        let p = winding_invariant(&z).unwrap().reduce_mod_torus(4);
        let q = winding_invariant(&z.pow(4)).unwrap().reduce_mod_torus(4);
        prop_assert!(normal_form(&lat, &q.translate((i, j))).is_zero());
        prop_assert_eq!(normal_form(&lat, &p).is_zero(), normal_form(&lat, &p.translate((i, j))).is_zero());
    }
}

#[test]
fn lattice_ignores_relator_order() {
    let mut family = named_relator_family(4).unwrap();
    let forward = build_lattice(&family, 4).unwrap();
    family.reverse();
    let backward = build_lattice(&family, 4).unwrap();
    assert_eq!(forward.basis(), backward.basis());
}

#[test]
fn swapped_relators_give_same_order() {
    for n in [4usize, 8] {
        let family = named_relator_family(n as u64).unwrap();
        let swapped: Vec<_> = family
            .iter()
            .map(|(name, w)| (name.clone(), w.apply_symmetry(Symmetry::SwapXY)))
            .collect();
        let a = quotient_order(&build_lattice(&family, n).unwrap());
        let b = quotient_order(&build_lattice(&swapped, n).unwrap());
        assert_eq!(a.order, b.order, "n = {n}");
    }
}

#[test]
fn partial_family_is_larger() {
    let family = named_relator_family(4).unwrap();
    let partial: Vec<_> = family
        .into_iter()
        .filter(|(name, _)| name == "w" || name.starts_with('u'))
        .collect();
    let full = quotient_order(&family_lattice(4).unwrap()).order.unwrap();
    let part = quotient_order(&build_lattice(&partial, 4).unwrap())
        .order
        .unwrap();
    assert!(part > full);
    assert_eq!(&part % &full, 0u32.into());
}

#[test]
fn omega_detects_commutator_powers() {
    let c = Word::commutator(&Word::x(), &Word::y());
    for k in 1..4 {
        assert!(!omega(&c.pow(k), 4).unwrap().is_zero(), "[x,y]^{k}");
    }
    assert!(omega(&c.pow(4), 4).unwrap().is_zero());
}

#[test]
fn lambda_of_translated_word() {
    let c = TwoColoring::from_pattern("BBWW").unwrap();
    let spec = InvariantSpec::new(4, (1, 1), (2, -1), c).unwrap();
    let z = derived(11, 30);
    let zero = spec.with_translate((0, 0));
    let shifted = Word::conjugate(&Word::monomial(-2, 1), &z);
    assert_eq!(
        lambda_of_word(&spec, &z).unwrap(),
        lambda_of_word(&zero, &shifted).unwrap()
    );
}

// Reflections reverse orientation, so the substituted polynomial changes
// sign; inverting a generator also moves each square by one unit.
#[test]
fn word_symmetries_act_on_windings() {
    for seed in 0..20 {
        let z = derived(500 + seed, 60);
        let p = winding_invariant(&z).unwrap();
        let img = |sym| winding_invariant(&z.apply_symmetry(sym)).unwrap();
        assert_eq!(img(Symmetry::SwapXY), -&p.apply_symmetry(Symmetry::SwapXY));
        assert_eq!(
            img(Symmetry::InvX),
            -&p.apply_symmetry(Symmetry::InvX).translate((-1, 0))
        );
        assert_eq!(
            img(Symmetry::InvY),
            -&p.apply_symmetry(Symmetry::InvY).translate((0, -1))
        );
    }
}
