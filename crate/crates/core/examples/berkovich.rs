// The sequence 0 → Pic G/n → Hom(Λ²(ₙG), μₙ) → ₙBr G → 0 for a few groups.

use algroup::descriptors::GroupDescriptor;
use algroup::invariants::{berkovich_sequence, cohomology_profile, n_torsion_group};

fn main() {
    let cases = [
        ("elliptic curve", GroupDescriptor::new(0, 1, 0, 1, true), 2),
        (
            "semi-abelian g = 1, r = 1",
            GroupDescriptor::new(0, 1, 1, 1, true),
            2,
        ),
        ("abelian surface", GroupDescriptor::new(0, 2, 0, 1, true), 6),
        ("G_m^3", GroupDescriptor::new(0, 0, 3, 0, true), 4),
        (
            "abelian 3-fold, char 5",
            GroupDescriptor::new(5, 3, 0, 3, true),
            12,
        ),
    ];
    for (name, d, n) in &cases {
        let b = berkovich_sequence(d, *n).expect("valid and coprime");
        println!("{name} (n = {n}):");
        println!("  ₙG = {}", n_torsion_group(d, *n).unwrap());
        println!("  betti = {:?}", cohomology_profile(d, *n).unwrap().betti);
        println!("  {} → {} → {}", b.left, b.middle, b.right);
        let c = &b.certificate;
        println!("  exact: {} (orders {:?})", b.is_exact(), c.orders);
    }

    let char5 = GroupDescriptor::new(5, 1, 0, 1, true);
    println!(
        "\nn = 10 in characteristic 5: {}",
        berkovich_sequence(&char5, 10).unwrap_err()
    );
}
