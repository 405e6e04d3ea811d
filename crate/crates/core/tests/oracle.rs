use algroup::abelian::FinGenAbGroup;
use algroup::oracle::{
    berkovich_cardinality_sweep, betti_sum_check, catalog, eckmann_hilton_search, eh_sweep,
    exterior_square_bruteforce, groups_of_order, hom_count_bruteforce, hom_sweep, run_suite,
    wedge_sweep, DescriptorGrid, FiniteGroupTable, OracleError, Suite,
};

#[test]
fn every_catalog_group_is_a_group() {
    for e in catalog() {
        let t = &e.table;
        // re-validate from the raw table
        FiniteGroupTable::new(t.name(), t.order(), t.table().to_vec()).unwrap();
    }
}

#[test]
fn eckmann_hilton_on_whole_catalog() {
    for e in catalog() {
        let found = eckmann_hilton_search(&e.table).unwrap();
        if e.abelian {
            assert_eq!(found, vec![e.table.table().to_vec()], "{}", e.table.name());
        } else {
            assert!(found.is_empty(), "{}", e.table.name());
        }
    }
    let v = eh_sweep(12).unwrap();
    assert!(v.passed());
    assert_eq!(v.cases_run, 24);
}

#[test]
fn abelian_groups_of_order_up_to_12_match_catalog() {
    // each abelian catalog entry is counted once among the invariant-factor chains
    for n in 1..=12u64 {
        let abelian = catalog()
            .iter()
            .filter(|e| e.abelian && e.table.order() as u64 == n)
            .count();
        assert_eq!(abelian, groups_of_order(n).len(), "order {n}");
    }
}

#[test]
fn hom_count_small_cases() {
    let g = |f: &[i64]| FinGenAbGroup::from_invariants(0, f.iter().copied()).unwrap();
    // Hom((Z/2)^2, (Z/2)^2) is 2 x 2 matrices over F_2
    assert_eq!(hom_count_bruteforce(&g(&[2, 2]), &g(&[2, 2])).unwrap(), 16);
    assert_eq!(hom_count_bruteforce(&g(&[4]), &g(&[2, 4])).unwrap(), 8);
    assert!(matches!(
        hom_count_bruteforce(&g(&[128]), &g(&[2])),
        Err(OracleError::TooLarge { .. })
    ));
}

#[test]
fn wedge_oracle_on_elementary_groups() {
    // Λ²((Z/p)^k) = (Z/p)^{C(k,2)}
    for (p, k) in [
        (2i64, 1usize),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 2),
        (3, 3),
        (5, 2),
    ] {
        let w = exterior_square_bruteforce(&FinGenAbGroup::elementary(p, k)).unwrap();
        assert_eq!(w, FinGenAbGroup::elementary(p, k * (k.max(1) - 1) / 2));
    }
}

#[test]
fn sweeps_pass() {
    assert!(wedge_sweep(64).unwrap().passed());
    assert!(hom_sweep(32).unwrap().passed());
    assert!(betti_sum_check(0..=12).unwrap().passed());
    let grid = DescriptorGrid {
        chars: vec![0, 3],
        n_values: vec![2, 4, 5],
        ..Default::default()
    };
    assert!(berkovich_cardinality_sweep(&grid).passed());
}

#[test]
fn guards() {
    assert!(eh_sweep(13).is_err());
    assert!(hom_sweep(65).is_err());
    assert!(run_suite(Suite::Eh, Some(100)).is_err());
    assert_eq!(run_suite(Suite::Eh, Some(8)).unwrap()[0].cases_run, 14);
}
