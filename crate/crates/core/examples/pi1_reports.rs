// Prime-to-p fundamental groups of tori, abelian varieties and a
// non-commutative group.

use algroup::descriptors::GroupDescriptor;
use algroup::invariants::{homotopy_sequence_ranks, pi1_report, tate_rank};

fn main() {
    let cases = [
        ("G_m", GroupDescriptor::new(0, 0, 1, 0, true)),
        ("G_m^3", GroupDescriptor::new(0, 0, 3, 0, true)),
        ("elliptic curve", GroupDescriptor::new(0, 1, 0, 1, true)),
        (
            "abelian surface, char 7",
            GroupDescriptor::new(7, 2, 0, 1, true),
        ),
        (
            "semi-abelian, g = 1, r = 2",
            GroupDescriptor::new(0, 1, 2, 1, true),
        ),
        ("SO(4)", GroupDescriptor::new(0, 0, 2, 0, false)),
    ];
    for (name, d) in &cases {
        let p = pi1_report(d).expect("valid descriptor");
        let h = homotopy_sequence_ranks(d).expect("valid descriptor");
        print!("{name:<28} {:?}", p.exactness);
        match p.free_rank {
            Some(k) => print!(", free of rank {k}"),
            None => print!(
                ", at most {} generators, torsion possible",
                p.generator_bound
            ),
        }
        println!(
            "  [affine part ≤ {}, abelian part {}]",
            h.affine_part_bound, h.abelian_part_rank
        );
    }
    let e = &cases[2].1;
    println!(
        "\nTate module rank of an elliptic curve at ℓ = 3: {}",
        tate_rank(e, 3).unwrap()
    );
    println!(
        "at ℓ = 7 in characteristic 7: {}",
        tate_rank(&cases[3].1, 7).unwrap_err()
    );
}
