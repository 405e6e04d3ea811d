// Reads a descriptor file, validates it and produces both report formats.

use algroup::cli::{corpus, invariants_report, parse_fields, to_text, Report};
use algroup::descriptors::{Descriptor, Strictness};

const TEXT: &str = "\
# an abelian surface in characteristic 3
kind = group
label = surface
char = 3
g = 2
r = 0
rho = 2
commutative = true
";

fn main() {
    let d = parse_fields(TEXT)
        .expect("well formed")
        .validate(Strictness::Lenient)
        .expect("valid");
    let Descriptor::Group(g) = &d else {
        unreachable!("kind = group")
    };
    let report = invariants_report(g, Some(4), Some(2)).expect("4 is prime to 3");
    print!("{report}");
    let json = report.to_json();
    println!("\n{json}");
    let back = Report::from_json(&json).expect("re-parses");
    assert_eq!(back.to_json(), json);
    println!("canonical file form:\n{}", to_text(&d));

    let typo = parse_fields("g = 1\nrh0 = 1\n").unwrap_err();
    println!("typo: {typo}");
    let invalid = parse_fields("char = 5\ng = 0\nr = 2\nrho = 1\n")
        .unwrap()
        .validate(Strictness::Lenient)
        .unwrap_err();
    println!("{invalid}");
    println!("\nbundled descriptors:");
    for e in corpus::CORPUS {
        println!("  {}", e.name);
    }
}
