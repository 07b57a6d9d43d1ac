//! Property tests for the set algebra, the distance bounds and metric
//! axioms, the similarity theorems and the float/oracle agreement.

mod common;

use common::*;
use ifsoft::algebra::*;
use ifsoft::metrics::{effective_parameter_count, ifss_distance_with};
use ifsoft::oracle::{int, oracle_ifss_distance, oracle_ifss_similarity, ratio, Rational};
use ifsoft::similarity::{ifss_similarity_prime, ifss_similarity_with};
use ifsoft::{
    diagnose, parse_dataset, serialize_dataset, validate, DiagnosisConfig, DistanceKind, Grade,
    IfSoftSet, IfValue, IntuitionisticFuzzySet, NormalizeOver, SimilarityReading, Universe, Verdict,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn arb_ifs(n: usize) -> impl Strategy<Value = IntuitionisticFuzzySet<Rational>> {
    prop::collection::vec(arb_cell(), n).prop_map(move |cells| {
        let u = Universe::new((1..=n).map(|j| format!("u{j}"))).unwrap();
        IntuitionisticFuzzySet::from_values(&u, cells.into_iter().map(to_value).collect()).unwrap()
    })
}

fn arb_ifs_triple() -> impl Strategy<Value = [IntuitionisticFuzzySet<Rational>; 3]> {
    (1usize..=8).prop_flat_map(|n| (arb_ifs(n), arb_ifs(n), arb_ifs(n)).prop_map(|(a, b, c)| [a, b, c]))
}

fn closed(set: &IntuitionisticFuzzySet<Rational>) -> bool {
    set.values().iter().all(|v| IfValue::new(v.mu().clone(), v.nu().clone()).is_ok())
}

/// `sqrt(x) <= sqrt(y) + sqrt(z)` decided exactly.
fn sqrt_triangle(x: &Rational, y: &Rational, z: &Rational) -> bool {
    let slack = x - y - z;
    slack <= Rational::zero() || &slack * &slack <= int(4) * y * z
}

fn distance_exact(a: &IfSoftSet<Rational>, b: &IfSoftSet<Rational>, kind: DistanceKind, over: NormalizeOver) -> Rational {
    oracle_ifss_distance(a, b, kind, over).unwrap()
}

fn triangle_holds(sets: &[IfSoftSet<Rational>; 3], kind: DistanceKind, over: NormalizeOver) -> bool {
    let [a, b, c] = sets;
    let ac = distance_exact(a, c, kind, over);
    let ab = distance_exact(a, b, kind, over);
    let bc = distance_exact(b, c, kind, over);
    if kind.is_euclidean() {
        sqrt_triangle(&ac, &ab, &bc)
    } else {
        ac <= ab + bc
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn algebra_closure_and_laws([a, b, c] in arb_ifs_triple()) {
        let ops: [fn(&_, &_) -> _; 4] = [if_union, if_intersection, if_sum, if_product];
        for op in ops {
            let ab = op(&a, &b).unwrap();
            prop_assert!(closed(&ab));
            prop_assert_eq!(&ab, &op(&b, &a).unwrap());
            let left = op(&ab, &c).unwrap();
            let right = op(&a, &op(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
        prop_assert_eq!(if_union(&a, &a).unwrap(), a.clone());
        prop_assert_eq!(if_intersection(&a, &a).unwrap(), a.clone());
        prop_assert!(closed(&if_complement(&a)));
        prop_assert_eq!(if_complement(&if_complement(&a)), a.clone());
    }

    #[test]
    fn de_morgan([a, b, _c] in arb_ifs_triple()) {
        let (na, nb) = (if_complement(&a), if_complement(&b));
        prop_assert_eq!(
            if_complement(&if_union(&a, &b).unwrap()),
            if_intersection(&na, &nb).unwrap()
        );
        prop_assert_eq!(
            if_complement(&if_intersection(&a, &b).unwrap()),
            if_union(&na, &nb).unwrap()
        );
        prop_assert_eq!(
            if_complement(&if_sum(&a, &b).unwrap()),
            if_product(&na, &nb).unwrap()
        );
        prop_assert_eq!(
            if_complement(&if_product(&a, &b).unwrap()),
            if_sum(&na, &nb).unwrap()
        );
    }

    #[test]
    fn subset_is_a_partial_order([a, b, c] in arb_ifs_triple()) {
        prop_assert!(if_subset(&a, &a).unwrap());
        let both = if_subset(&a, &b).unwrap() && if_subset(&b, &a).unwrap();
        prop_assert_eq!(both, if_equal(&a, &b).unwrap());
        // intersections and unions build chains
        let low = if_intersection(&a, &b).unwrap();
        let high = if_union(&low, &c).unwrap();
        prop_assert!(if_subset(&low, &a).unwrap());
        prop_assert!(if_subset(&low, &high).unwrap());
        if if_subset(&a, &b).unwrap() && if_subset(&b, &c).unwrap() {
            prop_assert!(if_subset(&a, &c).unwrap());
        }
    }

    #[test]
    fn distance_bounds((a, b) in arb_pair()) {
        let n = int(a.universe().len() as i64);
        for over in [NormalizeOver::Support, NormalizeOver::Full] {
            prop_assert!(distance_exact(&a, &b, DistanceKind::Hamming, over) <= n);
            prop_assert!(distance_exact(&a, &b, DistanceKind::NormalizedHamming, over) <= int(1));
            // squared: e^2 <= n, q^2 <= 1
            prop_assert!(distance_exact(&a, &b, DistanceKind::Euclidean, over) <= n);
            prop_assert!(distance_exact(&a, &b, DistanceKind::NormalizedEuclidean, over) <= int(1));
        }
    }

    #[test]
    fn metric_axioms_full_normalization(sets in arb_triple()) {
        let over = NormalizeOver::Full;
        let [a, b, _] = &sets;
        for kind in DistanceKind::ALL {
            let ab = distance_exact(a, b, kind, over);
            prop_assert!(ab >= Rational::zero());
            prop_assert_eq!(&ab, &distance_exact(b, a, kind, over));
            prop_assert_eq!(ab.is_zero(), a.same_approximations(b));
            prop_assert!(distance_exact(a, a, kind, over).is_zero());
            prop_assert!(triangle_holds(&sets, kind, over));
        }
    }

    #[test]
    fn metric_axioms_shared_support(sets in arb_triple_shared()) {
        let over = NormalizeOver::Support;
        let [a, b, _] = &sets;
        for kind in DistanceKind::ALL {
            let ab = distance_exact(a, b, kind, over);
            prop_assert_eq!(&ab, &distance_exact(b, a, kind, over));
            prop_assert_eq!(ab.is_zero(), a.same_approximations(b));
            prop_assert!(triangle_holds(&sets, kind, over));
        }
    }

    #[test]
    fn float_path_matches_oracle((a, b) in arb_pair()) {
        let (af, bf) = (a.to_f64(), b.to_f64());
        for over in [NormalizeOver::Support, NormalizeOver::Full] {
            for kind in DistanceKind::ALL {
                let exact = distance_exact(&a, &b, kind, over).to_f64();
                let float = ifss_distance_with(&af, &bf, kind, over).unwrap();
                let float = if kind.is_euclidean() { float * float } else { float };
                prop_assert!(agrees(float, exact), "{kind} {over}: {float} vs {exact}");
            }
        }
    }

    #[test]
    fn scaling_relations((a, b) in arb_pair()) {
        let (af, bf) = (a.to_f64(), b.to_f64());
        let n = a.universe().len() as f64;
        let d = |k| ifss_distance_with(&af, &bf, k, NormalizeOver::Support).unwrap();
        prop_assert!((d(DistanceKind::NormalizedHamming) - d(DistanceKind::Hamming) / n).abs() < 1e-12);
        prop_assert!((d(DistanceKind::NormalizedEuclidean) - d(DistanceKind::Euclidean) / n.sqrt()).abs() < 1e-12);
        let nr = int(a.universe().len() as i64);
        let s = NormalizeOver::Support;
        prop_assert_eq!(
            distance_exact(&a, &b, DistanceKind::NormalizedHamming, s),
            distance_exact(&a, &b, DistanceKind::Hamming, s) / &nr
        );
        prop_assert_eq!(
            distance_exact(&a, &b, DistanceKind::NormalizedEuclidean, s),
            distance_exact(&a, &b, DistanceKind::Euclidean, s) / nr
        );
    }

    #[test]
    fn ifs_similarity_theorem((a, b) in arb_pair_shared()) {
        for reading in [SimilarityReading::Dot, SimilarityReading::Elementwise] {
            let ab = oracle_ifss_similarity(&a, &b, reading).unwrap();
            prop_assert!(ab >= Rational::zero() && ab <= Rational::one());
            prop_assert_eq!(&ab, &oracle_ifss_similarity(&b, &a, reading).unwrap());
            prop_assert!(oracle_ifss_similarity(&a, &a, reading).unwrap().is_one());
            let float = ifss_similarity_with(&a.to_f64(), &b.to_f64(), reading).unwrap();
            prop_assert!(agrees(float, ab.to_f64()));
        }
    }

    #[test]
    fn s_prime_theorem((a, b) in arb_pair()) {
        let (af, bf) = (a.to_f64(), b.to_f64());
        let s = ifss_similarity_prime(&af, &bf).unwrap();
        prop_assert!(s > 0.0 && s <= 1.0);
        prop_assert_eq!(s, ifss_similarity_prime(&bf, &af).unwrap());
        let d = distance_exact(&a, &b, DistanceKind::Hamming, NormalizeOver::Support);
        let exact = int(1) / (int(1) + d);
        prop_assert_eq!(exact.is_one(), a.same_approximations(&b));
        prop_assert!(agrees(s, exact.to_f64()));
    }

    #[test]
    fn diagnosis_is_symmetric_and_follows_distance((a, b) in arb_pair()) {
        let (af, bf) = (a.to_f64(), b.to_f64());
        let config = DiagnosisConfig::default();
        let ab = diagnose(&af, &bf, &config).unwrap();
        let ba = diagnose(&bf, &af, &config).unwrap();
        prop_assert_eq!(ab.distance, ba.distance);
        prop_assert_eq!(ab.similarity, ba.similarity);
        prop_assert_eq!(ab.verdict, ba.verdict);
        let d = distance_exact(&a, &b, DistanceKind::Hamming, NormalizeOver::Support);
        prop_assert_eq!(ab.verdict == Verdict::Similar, d < int(1));
        prop_assert_eq!(ab.effective_m, effective_parameter_count(&af, &bf, NormalizeOver::Support));
    }

    #[test]
    fn sets_validate_and_round_trip((a, b) in arb_pair()) {
        for set in [&a, &b] {
            prop_assert!(validate(set).is_valid());
            for i in (0..set.parameters().len()).filter(|&i| !set.in_support(i)) {
                prop_assert!(set.approx(i).is_empty());
            }
        }
        let text = dataset_text(&[("a", &a), ("b", &b)]);
        let doc = parse_dataset(&text).unwrap();
        prop_assert_eq!(&doc.exact_set("a").unwrap(), &a.clone().with_label("a"));
        prop_assert_eq!(&doc.exact_set("b").unwrap(), &b.clone().with_label("b"));
        let canonical = serialize_dataset(&doc);
        prop_assert_eq!(parse_dataset(&canonical).unwrap(), doc);
    }
}

fn dataset_text(sets: &[(&str, &IfSoftSet<Rational>)]) -> String {
    let first = sets[0].1;
    let mut out = format!(
        "universe: {}\nparameters: {}\n",
        first.universe().names().join(" "),
        first.parameters().names().join(" ")
    );
    for (name, set) in sets {
        out.push_str(&format!("set {name}\n  support: {}\n", set.support_names().join(" ")));
        for i in (0..set.parameters().len()).filter(|&i| set.in_support(i)) {
            out.push_str(&format!("  {}:", set.parameters().name(i)));
            for (j, v) in set.approx(i).values().iter().enumerate() {
                let dec = |r: &Rational| ifsoft::dataset::format_decimal(r).unwrap();
                out.push_str(&format!(" ({}, {}, {})", set.universe().name(j), dec(v.mu()), dec(v.nu())));
            }
            out.push('\n');
        }
        out.push_str("end\n");
    }
    out
}

#[test]
fn support_normalization_is_not_a_metric_across_supports() {
    // Widening the support of the middle set shrinks both of its distances.
    let (u, e) = frame(1, 2);
    let set = |support: Vec<bool>, x1: (i64, i64)| {
        let rows = vec![vec![to_value(x1)], vec![IfValue::empty()]];
        IfSoftSet::from_parts_unchecked(&u, &e, support, rows, Default::default()).unwrap()
    };
    let a = set(vec![true, false], (100, 0));
    let c = set(vec![true, false], (0, 100));
    let b = set(vec![true, true], (50, 50));
    let s = NormalizeOver::Support;
    let ac = distance_exact(&a, &c, DistanceKind::Hamming, s);
    let ab = distance_exact(&a, &b, DistanceKind::Hamming, s);
    let bc = distance_exact(&b, &c, DistanceKind::Hamming, s);
    assert_eq!((ac.clone(), ab.clone(), bc.clone()), (int(1), ratio(1, 4), ratio(1, 4)));
    assert!(ac > ab + bc);
    assert!(triangle_holds(&[a, b, c], DistanceKind::Hamming, NormalizeOver::Full));
}
