//! Property tests over randomly generated reduced words and shadows.

use proptest::prelude::*;

use gtsh::{compose, enumerate_closed, inverse, psi_eval, Gen, Shadow, Word};

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec((prop::bool::ANY, -5i64..=5), 0..40).prop_map(|letters| {
        let mut w = Word::empty();
        for (is_x, e) in letters {
            if e != 0 {
                w.push(if is_x { Gen::X } else { Gen::Y }, e);
            }
        }
        w
    })
}

fn shadow_strategy(n: u32) -> impl Strategy<Value = Shadow> {
    let all = enumerate_closed(n).unwrap();
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn concat_is_associative(a in word_strategy(), b in word_strategy(), c in word_strategy()) {
        prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
    }

    #[test]
    fn inverse_cancels(a in word_strategy()) {
        prop_assert!(a.concat(&a.invert()).is_empty());
        prop_assert_eq!(a.invert().invert(), a);
    }

    #[test]
    fn display_parse_roundtrip(a in word_strategy()) {
        prop_assert_eq!(a.to_string().parse::<Word>().unwrap(), a);
    }

    #[test]
    fn theta_and_tau_are_homomorphisms(a in word_strategy(), b in word_strategy()) {
        let ab = a.concat(&b);
        prop_assert_eq!(ab.apply_theta(), a.apply_theta().concat(&b.apply_theta()));
        prop_assert_eq!(ab.apply_tau(), a.apply_tau().concat(&b.apply_tau()));
        prop_assert_eq!(a.apply_tau().apply_tau().apply_tau(), a.clone());
        prop_assert_eq!(a.apply_theta().apply_theta(), a);
    }

    #[test]
    fn endo_e_is_a_homomorphism(a in word_strategy(), b in word_strategy(),
                                m in -3i64..=3, f in word_strategy()) {
        let ab = a.concat(&b);
        prop_assert_eq!(ab.endo_e(m, &f), a.endo_e(m, &f).concat(&b.endo_e(m, &f)));
    }

    #[test]
    fn abelianize_adds(a in word_strategy(), b in word_strategy()) {
        let (ax, ay) = a.abelianize();
        let (bx, by) = b.abelianize();
        prop_assert_eq!(a.concat(&b).abelianize(), (ax + bx, ay + by));
    }

    #[test]
    fn psi_is_a_homomorphism(a in word_strategy(), b in word_strategy(), n in 3u32..=12) {
        prop_assert_eq!(
            psi_eval(n, &a.concat(&b)),
            psi_eval(n, &a).mul(&psi_eval(n, &b))
        );
        prop_assert_eq!(psi_eval(n, &a.invert()), psi_eval(n, &a).inv());
    }

    #[test]
    fn composition_group_laws_sampled(
        a in shadow_strategy(12), b in shadow_strategy(12), c in shadow_strategy(12)
    ) {
        let id = Shadow::identity(12).unwrap();
        prop_assert_eq!(
            compose(&compose(&a, &b).unwrap(), &c).unwrap(),
            compose(&a, &compose(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(compose(&a, &id).unwrap(), a);
        prop_assert_eq!(compose(&a, &inverse(&a)).unwrap(), id);
    }

    #[test]
    fn enumeration_is_closed_under_composition(a in shadow_strategy(16), b in shadow_strategy(16)) {
        let all = enumerate_closed(16).unwrap();
        prop_assert!(all.contains(&compose(&a, &b).unwrap()));
    }
}
