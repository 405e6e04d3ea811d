use algroup::descriptors::{
    coprimality_guard, Descriptor, DescriptorFields, GroupDescriptor, HomSpaceDescriptor,
    Strictness, NON_CONNECTED_STABILIZER,
};
use proptest::prelude::*;

fn fields_strategy() -> impl Strategy<Value = DescriptorFields> {
    (
        prop::option::of(prop::sample::select(vec![0u64, 1, 2, 4, 5, 9, 11])),
        prop::option::of(0u32..4),
        prop::option::of(0u32..4),
        prop::option::of(0u32..3),
        prop::option::of(0u64..30),
        prop::option::of(any::<bool>()),
        (
            prop::option::of(0u32..4),
            prop::option::of(0u32..4),
            prop::option::of(any::<bool>()),
        ),
    )
        .prop_map(
            |(char_p, g, r, u, rho, commutative, (g_h, r_h, sc))| DescriptorFields {
                kind: None,
                label: None,
                char_p,
                g,
                r,
                u,
                rho,
                commutative,
                g_h,
                r_h,
                stabilizer_connected: sc,
            },
        )
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).all(|d| !n.is_multiple_of(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn validate_is_idempotent(f in fields_strategy()) {
        if let Ok(d) = f.validate(Strictness::Lenient) {
            prop_assert_eq!(d.validate().unwrap(), d.clone());
            prop_assert_eq!(d.to_fields().validate(Strictness::Lenient).unwrap(), d);
        }
    }

    #[test]
    fn accepted_descriptors_satisfy_invariants(f in fields_strategy()) {
        let Ok(d) = f.validate(Strictness::Lenient) else { return Ok(()) };
        let g = d.group();
        prop_assert!(g.char_p == 0 || is_prime(g.char_p));
        prop_assert_eq!(g.rho == 0, g.g == 0);
        let m = u64::from(2 * g.g + g.r);
        prop_assert!(g.rho <= m * m.saturating_sub(1) / 2);
        if let Descriptor::HomSpace(h) = &d {
            prop_assert!(h.g_h <= g.g && h.r_h <= g.r);
            prop_assert!(h.stabilizer_connected);
        }
        // defaults
        prop_assert_eq!(g.u, f.u.unwrap_or(0));
        prop_assert_eq!(g.commutative, f.commutative.unwrap_or(false));
        // strict mode additionally enforces the soft bound
        let strict = f.validate(Strictness::Strict);
        let soft_ok = g.g == 0 || u128::from(g.rho) <= g.rho_soft_bound();
        prop_assert_eq!(strict.is_ok(), soft_ok);
    }

    #[test]
    fn each_violation_names_its_field(p in 0u64..12, g in 0u32..3, r in 0u32..3, rho in 0u64..20) {
        let d = GroupDescriptor::new(p, g, r, rho, true);
        if let Err(e) = d.validate() {
            let fields = e.fields();
            prop_assert!(!fields.is_empty());
            prop_assert_eq!(fields.contains(&"char"), !(p == 0 || is_prime(p)));
        }
    }
}

#[test]
fn spec_examples() {
    assert!(GroupDescriptor::new(0, 1, 0, 1, true).validate().is_ok());
    let e = GroupDescriptor::new(5, 0, 2, 1, true)
        .validate()
        .unwrap_err();
    assert_eq!(e.fields(), vec!["rho"]);
    let h = HomSpaceDescriptor {
        group: GroupDescriptor::new(0, 0, 3, 0, false),
        g_h: 0,
        r_h: 0,
        stabilizer_connected: false,
    };
    let e = h.validate().unwrap_err();
    assert_eq!(e.violations[0].message, NON_CONNECTED_STABILIZER);
    assert!(e.to_string().contains("is just Γ"));
    assert!(coprimality_guard(&GroupDescriptor::new(5, 1, 0, 1, true), 10).is_err());
    assert!(coprimality_guard(&GroupDescriptor::new(0, 1, 0, 1, true), 10).is_ok());
    assert!(coprimality_guard(&GroupDescriptor::new(7, 1, 0, 1, true), 12).is_ok());
}

#[test]
fn violations_are_reported_individually() {
    // bad characteristic, rho with g = 0, and rho above the corank bound
    let e = GroupDescriptor::new(4, 0, 1, 3, true)
        .validate()
        .unwrap_err();
    let fields = e.fields();
    assert!(fields.contains(&"char"));
    assert!(fields.iter().filter(|&&f| f == "rho").count() >= 2, "{e}");
}

#[test]
fn soft_bound_is_a_warning() {
    // g = 1, r = 2: C(4, 2) = 6 allows rho = 3 but g(2g - 1) = 1 does not
    let d = GroupDescriptor::new(0, 1, 2, 3, true);
    assert!(d.validate().is_ok());
    assert_eq!(d.warnings().len(), 1);
    assert!(d.validate_with(Strictness::Strict).is_err());
}
