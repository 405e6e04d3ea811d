//! Runs the examples in `examples/` so they stay in working order.

mod snf {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/snf.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod abelian_groups {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/abelian_groups.rs"
    ));

    #[test]
    fn runs() {
        main();
    }
}

mod functors {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/functors.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod pi1_reports {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/pi1_reports.rs"
    ));

    #[test]
    fn runs() {
        main();
    }
}

mod berkovich {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/berkovich.rs"
    ));

    #[test]
    fn runs() {
        main();
    }
}

mod brauer_corank {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/brauer_corank.rs"
    ));

    #[test]
    fn runs() {
        main();
    }
}

mod homspace {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/homspace.rs"));

    #[test]
    fn runs() {
        main();
    }
}

mod eckmann_hilton {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/eckmann_hilton.rs"
    ));

    #[test]
    fn runs() {
        main();
    }
}

mod descriptor_files {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/descriptor_files.rs"
    ));

    #[test]
    fn runs() {
        main();
    }
}
