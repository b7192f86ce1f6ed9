use ohmnet_core::rational::ratio;
use ohmnet_core::{
    closed_form, conjecture_delta_scan, covers, linear3tree_sequences, recursion_form,
    reduce_to_pair, resistance_det, resistance_matrix, resistance_solve, Family, FamilySpec,
    Verdict,
};

fn instances(max_vertices: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let mut size = family.min_size();
        loop {
            let spec = FamilySpec::new(family, size).unwrap();
            if spec.vertex_count() > max_vertices {
                break;
            }
            out.push(spec);
            size += 1;
        }
    }
    out
}

#[test]
fn all_methods_agree_on_small_families() {
    for spec in instances(12) {
        let g = spec.generate();
        let n = g.vertex_count();
        let r = resistance_matrix(&g).unwrap();
        for i in 1..=n {
            for j in i + 1..=n {
                let det = resistance_det(&g, i, j).unwrap();
                assert_eq!(det, resistance_solve(&g, i, j).unwrap(), "{spec} ({i},{j})");
                assert_eq!(det, reduce_to_pair(&g, i, j).unwrap().0, "{spec} ({i},{j})");
                assert_eq!(&det, r.get(i - 1, j - 1));
                if covers(&spec, i, j) {
                    assert_eq!(det, closed_form(&spec, i, j).unwrap(), "{spec} ({i},{j})");
                    assert_eq!(
                        det,
                        recursion_form(&spec, i, j).unwrap(),
                        "{spec} ({i},{j})"
                    );
                }
            }
        }
    }
}

#[test]
fn reference_values() {
    let fan = FamilySpec::new(Family::Fan, 5).unwrap();
    assert_eq!(closed_form(&fan, 2, 5).unwrap(), ratio(10, 21));
    let wheel = FamilySpec::new(Family::Wheel, 5).unwrap();
    for i in 1..5 {
        assert_eq!(recursion_form(&wheel, i, 5).unwrap(), ratio(7, 15));
    }
    let ladder = FamilySpec::new(Family::Ladder, 2).unwrap();
    assert_eq!(closed_form(&ladder, 1, 2).unwrap(), ratio(3, 4));
    assert!(closed_form(&ladder, 1, 4).is_err());
}

#[test]
fn linear3tree_recursions_hold_early() {
    let seqs = linear3tree_sequences(40).unwrap();
    let starts = [
        seqs.numerator_verdict.unwrap(),
        seqs.denominator_verdict.unwrap(),
    ];
    for verdict in starts {
        match verdict {
            Verdict::HoldsFrom(n) => assert!(n <= 10),
            other => panic!("{other:?}"),
        }
    }
    assert_eq!(seqs.denominators.get(9).unwrap(), &ratio(29085, 1));
}

#[test]
fn delta_scan_converges() {
    let rows = conjecture_delta_scan(80).unwrap();
    assert_eq!(rows.len(), 77);
    assert!(rows.last().unwrap().abs_err < ratio(1, 1_000_000));
}
