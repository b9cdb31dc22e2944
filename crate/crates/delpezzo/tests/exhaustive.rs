//! Exhaustive sweeps of small coefficient boxes.

use delpezzo::criteria::{certifies_very_ample, greedy_normalize, is_conic_class, is_very_ample};
use delpezzo::lattice::{coefficient_box, DivisorClass};
use delpezzo::weyl::{Permutation, Triple, WeylGenerator};

#[test]
fn adjunction_and_genus_forms_agree_on_box() {
    for class in coefficient_box(2) {
        // arithmetic_genus asserts agreement of its two closed forms
        let genus = class.arithmetic_genus();
        assert_eq!(
            2 * genus - 2,
            class.intersect(class + DivisorClass::CANONICAL)
        );
        assert_eq!(class.degree(), class.intersect(DivisorClass::HYPERPLANE));
    }
}

#[test]
fn certificate_implies_positive_line_pairings() {
    for class in coefficient_box(3) {
        if certifies_very_ample(class) {
            assert!(
                is_very_ample(class),
                "certificate passed but a line pairing fails: {class}"
            );
        }
    }
}

#[test]
fn very_ample_classes_normalize_into_the_cone() {
    for class in coefficient_box(3) {
        if is_very_ample(class) {
            let (word, image) = greedy_normalize(class);
            assert_eq!(word.apply(class), image);
            assert!(certifies_very_ample(image), "{class} normalized to {image}");
        }
    }
}

#[test]
fn very_ample_needs_positive_square_and_degree_four() {
    for class in coefficient_box(3) {
        if is_very_ample(class) {
            assert!(class.self_intersection() > 0);
            assert!(class.degree() >= 4);
        }
    }
}

#[test]
fn ten_effective_conic_classes_in_box() {
    let conics: Vec<DivisorClass> = coefficient_box(4)
        .filter(|class| class.b.iter().all(|&bi| bi >= 0) && is_conic_class(*class))
        .collect();
    assert_eq!(conics.len(), 10);
    let pencils = conics.iter().filter(|c| c.a == 1).count();
    let four_point = conics.iter().filter(|c| c.a == 2).count();
    assert_eq!((pencils, four_point), (5, 5));
}

#[test]
fn verdict_case_is_invariant_under_all_generators_on_box() {
    let mut generators: Vec<WeylGenerator> = Triple::all()
        .into_iter()
        .map(WeylGenerator::Quadratic)
        .collect();
    for i in 1..5 {
        generators.push(WeylGenerator::Permute(Permutation::transposition(i, i + 1)));
    }
    for class in coefficient_box(2) {
        let word = delpezzo::contains_irreducible(class).word();
        for g in &generators {
            assert_eq!(delpezzo::contains_irreducible(g.apply(class)).word(), word);
        }
    }
}
