//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `--nocapture` to see them). Every check is exact;
//! the underlying statements are integer combinatorics with no tolerances.

use std::collections::BTreeSet;
use std::process::Command;

use delpezzo::criteria::{certifies_very_ample, decompose, greedy_normalize, is_very_ample};
use delpezzo::lattice::{coefficient_box, DivisorClass};
use delpezzo::lines::{
    canonical_lines, classify_line, incidence_graph, skew_five_tuples, LineKind,
};
use delpezzo::weyl::{group_closure, Permutation, Triple, WeylGenerator};
use delpezzo::{blowdown_marking, contains_irreducible, enumerate_lines, IrreducibleVerdict};

#[test]
fn criterion_01_line_census() {
    let lines = enumerate_lines();
    assert_eq!(lines.len(), 16);
    let mut counts = (0, 0, 0);
    for &line in &lines {
        assert_eq!(line.degree(), 1);
        assert_eq!(line.self_intersection(), -1);
        assert_eq!(line.arithmetic_genus(), 0);
        match classify_line(line).expect("census classes classify") {
            LineKind::Exceptional(_) => counts.0 += 1,
            LineKind::Secant(_, _) => counts.1 += 1,
            LineKind::Conic => counts.2 += 1,
        }
    }
    assert_eq!(counts, (5, 10, 1));
    println!("criterion 1: PASS: 16 lines, partitioned 5 E / 10 F / 1 G, all (deg, D², p_a) = (1, −1, 0)");
}

#[test]
fn criterion_02_negative_square_classes_are_exactly_the_lines() {
    let mut matches: Vec<DivisorClass> = Vec::new();
    for class in coefficient_box(6) {
        if class.self_intersection() < 0 && contains_irreducible(class) != IrreducibleVerdict::No {
            matches.push(class);
        }
    }
    matches.sort();
    let mut lines: Vec<DivisorClass> = canonical_lines().to_vec();
    lines.sort();
    assert_eq!(matches, lines);
    println!("criterion 2: PASS: in the |a|,|bᵢ| ≤ 6 box the irreducible classes with D² < 0 are exactly the 16 lines");
}

#[test]
fn criterion_03_euler_characteristic_spot_checks() {
    assert_eq!(DivisorClass::HYPERPLANE.scale(2).euler_characteristic(), 13);
    assert_eq!(DivisorClass::ZERO.euler_characteristic(), 1);
    println!("criterion 3: PASS: χ(2h) = 13 and χ(0) = 1");
}

#[test]
fn criterion_04_group_closure_order_and_action() {
    let closure = group_closure();
    assert_eq!(closure.len(), 1920);
    let line_set: BTreeSet<DivisorClass> = canonical_lines().into_iter().collect();
    for element in &closure {
        assert_eq!(
            element.apply(DivisorClass::CANONICAL),
            DivisorClass::CANONICAL
        );
        let images: BTreeSet<DivisorClass> = canonical_lines()
            .into_iter()
            .map(|line| element.apply(line))
            .collect();
        assert_eq!(images, line_set);
    }
    println!(
        "criterion 4: PASS: closure has 1920 elements, all fixing K and permuting the 16 lines"
    );
}

#[test]
fn criterion_05_cremona_anchors() {
    let q123 = WeylGenerator::quadratic(1, 2, 3);
    assert_eq!(
        q123.apply(DivisorClass::secant(1, 2)),
        DivisorClass::exceptional(3)
    );
    assert_eq!(
        q123.apply(DivisorClass::conic()),
        DivisorClass::secant(4, 5)
    );
    println!("criterion 5: PASS: q(1,2,3) sends F12 to E3 and G to F45");
}

#[test]
fn criterion_06_marking_completeness() {
    let tuples = skew_five_tuples();
    assert_eq!(tuples.len(), 16);

    let lines = canonical_lines();
    let orderings = Permutation::all();
    let mut checked = 0usize;
    for tuple in &tuples {
        for ordering in &orderings {
            let ordered: [DivisorClass; 5] =
                core::array::from_fn(|slot| lines[tuple[ordering.image_of(slot + 1) - 1]]);
            let word = blowdown_marking(ordered).expect("census tuple is five skew lines");
            for (n, &class) in ordered.iter().enumerate() {
                assert_eq!(word.apply(class), DivisorClass::exceptional(n + 1));
            }
            assert!(word.len() <= 10, "marking word too long: {word}");
            checked += 1;
        }
    }
    assert_eq!(checked, 16 * 120);

    // independent oracle: the group closure reaches every ordered skew
    // tuple from the exceptional frame exactly once
    let frame = [1, 2, 3, 4, 5].map(DivisorClass::exceptional);
    let reached: BTreeSet<[DivisorClass; 5]> = group_closure()
        .iter()
        .map(|g| frame.map(|e| g.apply(e)))
        .collect();
    assert_eq!(reached.len(), 1920);
    for tuple in &tuples {
        for ordering in &orderings {
            let ordered: [DivisorClass; 5] =
                core::array::from_fn(|slot| lines[tuple[ordering.image_of(slot + 1) - 1]]);
            assert!(reached.contains(&ordered));
        }
    }
    println!("criterion 6: PASS: all 16 tuples × 120 orderings marked constructively and confirmed by the closure oracle");
}

#[test]
fn criterion_07_ampleness_equivalence_sweep() {
    let mut very_ample_count = 0usize;
    for class in coefficient_box(4) {
        if certifies_very_ample(class) {
            assert!(
                is_very_ample(class),
                "certificate holds but a line pairing fails: {class}"
            );
        }
        if is_very_ample(class) {
            very_ample_count += 1;
            assert!(class.self_intersection() > 0);
            assert!(class.degree() >= 4);
            let (word, image) = greedy_normalize(class);
            assert_eq!(word.apply(class), image);
            assert!(
                certifies_very_ample(image),
                "{class} normalizes to {image} outside the cone"
            );
        }
    }
    assert!(
        very_ample_count > 0,
        "sweep box must contain very ample classes"
    );
    println!("criterion 7: PASS: zero mismatches over |a|,|bᵢ| ≤ 4 ({very_ample_count} very ample classes normalized)");
}

#[test]
fn criterion_08_incidence_structure() {
    let graph = incidence_graph();
    for i in 0..16 {
        assert_eq!(graph.vertex_degree(i), 5);
    }
    assert_eq!(graph.edges().len(), 40);
    for i in 0..16 {
        for j in (i + 1)..16 {
            for k in (j + 1)..16 {
                assert!(
                    !(graph.adjacent(i, j) && graph.adjacent(j, k) && graph.adjacent(i, k)),
                    "triangle at ({i}, {j}, {k})"
                );
            }
        }
    }
    println!("criterion 8: PASS: incidence graph is 5-regular with 40 edges and triangle-free");
}

#[test]
fn criterion_09_sweep_determinism() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_delpezzo"))
            .args(["sweep", "--bound", "2"])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    let first = run();
    let second = run();
    assert!(!first.is_empty());
    assert_eq!(first, second, "consecutive sweeps differ");
    println!(
        "criterion 9: PASS: two `sweep --bound 2` runs are byte-identical ({} bytes)",
        first.len()
    );
}

#[test]
fn criterion_10_property_suites_on_exhaustive_boxes() {
    let generators: Vec<WeylGenerator> = Permutation::all()
        .into_iter()
        .map(WeylGenerator::Permute)
        .chain(Triple::all().into_iter().map(WeylGenerator::Quadratic))
        .collect();

    // adjunction and decomposition-reconstruction, exhaustive at B = 3
    for class in coefficient_box(3) {
        assert_eq!(
            2 * class.arithmetic_genus() - 2,
            class.intersect(class + DivisorClass::CANONICAL)
        );
        assert_eq!(decompose(class).reconstruct(), class);
    }

    // quadratic generators are involutions, exhaustive at B = 3
    for class in coefficient_box(3) {
        for triple in Triple::all() {
            let g = WeylGenerator::Quadratic(triple);
            assert_eq!(g.apply(g.apply(class)), class);
        }
    }

    // pairing symmetry and bilinearity, exhaustive over pairs at B = 1
    // with the third argument ranging over the lattice basis and ±h
    let mut probes: Vec<DivisorClass> = vec![DivisorClass::PLANE_LINE];
    probes.extend((1..=5).map(DivisorClass::exceptional));
    probes.push(DivisorClass::HYPERPLANE);
    probes.push(DivisorClass::CANONICAL);
    for d1 in coefficient_box(1) {
        for d2 in coefficient_box(1) {
            assert_eq!(d1.intersect(d2), d2.intersect(d1));
            for &d3 in &probes {
                assert_eq!((d1 + d2).intersect(d3), d1.intersect(d3) + d2.intersect(d3));
            }
        }
    }

    // every generator preserves the pairing: exact Gram check on the basis,
    // plus exhaustive pairs at B = 1 for the quadratic generators
    for g in &generators {
        for &x in &probes[..6] {
            for &y in &probes[..6] {
                assert_eq!(g.apply(x).intersect(g.apply(y)), x.intersect(y));
            }
        }
    }
    for triple in Triple::all() {
        let g = WeylGenerator::Quadratic(triple);
        for d1 in coefficient_box(1) {
            for d2 in coefficient_box(1) {
                assert_eq!(g.apply(d1).intersect(g.apply(d2)), d1.intersect(d2));
            }
        }
    }

    // permutation generators compose as the symmetric group
    let permutation_maps: BTreeSet<_> = Permutation::all()
        .into_iter()
        .map(|p| delpezzo::weyl::LatticeMap::from_generator(&WeylGenerator::Permute(p)))
        .collect();
    assert_eq!(permutation_maps.len(), 120);
    for f in &permutation_maps {
        for g in &permutation_maps {
            assert!(permutation_maps.contains(&f.compose(g)));
        }
    }

    println!("criterion 10: PASS: pairing, adjunction, involution, preservation and reconstruction suites all exhaustive-clean");
}
