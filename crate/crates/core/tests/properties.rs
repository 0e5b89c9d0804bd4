use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsymkit::composition::{compositions, Composition};
use qsymkit::families::counterexamples::combination;
use qsymkit::json::{qsym_from_json, qsym_to_json};
use qsymkit::posets::{Equivalence, LabeledPoset, Poset};
use qsymkit::ppartitions::{kp_psi, kpd_psi, kpe_psi, Route};
use qsymkit::ring::{Mono, ParamPoly, Rational, Var};
use qsymkit::search::KpPool;
use qsymkit::sym::{to_sym, SymBasis};
use qsymkit::textfmt::{parse_qsym_text, qsym_to_text};
use qsymkit::{Basis, QSymElement};

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::M), Just(Basis::F), Just(Basis::Psi)]
}

/// A random element of degree 1..=5 with small rational coefficients, some
/// carrying a power of q.
fn element() -> impl Strategy<Value = QSymElement> {
    (1usize..=5, basis(), prop::collection::vec((any::<prop::sample::Index>(), -6i64..=6, 1i64..=4, 0u32..3), 0..6))
        .prop_map(|(n, b, terms)| {
            let comps = compositions(n);
            let mut e = QSymElement::zero(n, b);
            for (i, num, den, qexp) in terms {
                let c = ParamPoly::monomial(Rational::new(num.into(), den.into()), Mono::var(Var::Q, qexp));
                e.add_term(comps[i.index(comps.len())].clone(), &c).unwrap();
            }
            e
        })
}

/// A poset on at most `max` elements, up to isomorphism.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = Poset::all_up_to_iso(n);
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_roundtrip(e in element(), normalized in any::<bool>()) {
        let t = qsym_to_text(&e, normalized);
        prop_assert_eq!(parse_qsym_text(&t, Some(e.degree())).unwrap(), e);
    }

    #[test]
    fn json_roundtrip(e in element()) {
        prop_assert_eq!(qsym_from_json(&qsym_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn basis_roundtrip(e in element(), via in basis()) {
        prop_assert_eq!(e.convert(via).convert(e.basis()), e.clone());
        prop_assert_eq!(e.convert(Basis::Psi), e.convert_via_m(Basis::Psi));
    }

    #[test]
    fn omega_is_an_involution(e in element()) {
        prop_assert_eq!(e.omega().omega(), e.clone());
        if e.basis() == Basis::Psi {
            prop_assert_eq!(e.omega_psi().unwrap(), e.omega());
        }
    }

    #[test]
    fn singleton_classes_give_k_p(p in poset(5)) {
        let lp = LabeledPoset::natural(p.clone());
        let plain = kp_psi(&lp, Route::OStar).unwrap().element;
        let e = kpe_psi(&lp, &Equivalence::singletons(p.len()), Route::All).unwrap();
        prop_assert!(e.all_checks_passed());
        prop_assert_eq!(e.element, plain);
    }

    #[test]
    fn unit_weights_give_k_p(p in poset(5)) {
        let lp = LabeledPoset::natural(p.clone());
        let plain = kp_psi(&lp, Route::OStar).unwrap().element;
        let d = kpd_psi(&lp, &vec![1; p.len()], Route::All).unwrap();
        prop_assert!(d.all_checks_passed());
        prop_assert_eq!(d.element, plain);
    }

    #[test]
    fn k_p_certificates_count_linear_extensions(p in poset(5)) {
        // the Psi[1^n] certificate counts O*_{1^n} = all linear extensions
        let r = kp_psi(&LabeledPoset::natural(p.clone()), Route::All).unwrap();
        prop_assert!(r.all_checks_passed());
        let ones = Composition(vec![1; p.len()]);
        let c = r.certificates.get(&ones).cloned().unwrap_or_default();
        prop_assert_eq!(c, ParamPoly::int(p.count_linear_extensions() as i64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// A positive combination of K_P that happens to be symmetric is
    /// p-positive. Symmetric draws are rare, so each case samples many.
    #[test]
    fn symmetric_positive_combinations_are_p_positive(n in 2usize..=4, seed in any::<u64>()) {
        let pool = KpPool::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..300 {
            let mut coeffs = vec![0i64; pool.len()];
            for _ in 0..rng.gen_range(2..=4) {
                coeffs[rng.gen_range(0..pool.len())] += rng.gen_range(1..=3);
            }
            let e = combination(&pool.posets, &coeffs);
            if e.is_zero() || !e.is_symmetric() {
                continue;
            }
            let p = to_sym(&e, SymBasis::P).unwrap();
            prop_assert!(p.terms().all(|(_, c)| !c.has_negative_coeff()), "{:?}", coeffs);
        }
    }
}
