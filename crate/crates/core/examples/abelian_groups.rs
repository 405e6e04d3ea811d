// Finitely generated abelian groups: canonical forms, maps between them,
// kernels, images, cokernels and short exact sequences.

use algroup::abelian::{
    direct_sum, group_from_presentation, n_torsion, verify_short_exact, FinGenAbGroup, GroupHom,
    IntegerMatrix,
};
use num_bigint::BigInt;

fn main() {
    // ⟨x, y, z | 2x + 4y, 6y + 12z, 4x⟩
    let rel = IntegerMatrix::from_rows(3, vec![vec![2, 4, 0], vec![0, 6, 12], vec![4, 0, 0]])
        .expect("3 columns");
    let a = group_from_presentation(3, &rel).expect("3 generators");
    println!("presented group: {a}");
    println!("elementary divisors: {:?}", a.elementary_divisors());

    // Z/6 ⊕ Z/4 is not in canonical form; the chain is Z/2 ⊕ Z/12
    let b = FinGenAbGroup::from_cyclic_orders(1, [6, 4]);
    println!("Z ⊕ Z/6 ⊕ Z/4 = {b}");
    println!("torsion subgroup: {}", b.torsion_subgroup());
    println!(
        "2-torsion: {}",
        n_torsion(&b, &BigInt::from(2)).expect("n > 0")
    );
    println!(
        "(Z/2)^2 ⊕ Z/3 = {}",
        direct_sum(&FinGenAbGroup::elementary(2, 2), &FinGenAbGroup::cyclic(3))
    );

    // multiplication by 2 on Z/12
    let z12 = FinGenAbGroup::cyclic(12);
    let two = GroupHom::scalar(&z12, 2);
    println!(
        "\n×2 on Z/12: kernel {}, image {}, cokernel {}",
        two.kernel(),
        two.image(),
        two.cokernel()
    );

    // 0 → Z/2 → Z/4 → Z/2 → 0
    let z2 = FinGenAbGroup::cyclic(2);
    let z4 = FinGenAbGroup::cyclic(4);
    let f = GroupHom::new(
        z2.clone(),
        z4.clone(),
        IntegerMatrix::from_rows(1, vec![vec![2]]).unwrap(),
    )
    .expect("1 ↦ 2 is well defined");
    let g = GroupHom::new(z4, z2, IntegerMatrix::from_rows(1, vec![vec![1]]).unwrap())
        .expect("reduction mod 2");
    let cert = verify_short_exact(&f, &g).expect("composable");
    println!("\n0 → Z/2 → Z/4 → Z/2 → 0");
    println!(
        "  injective {}, surjective {}, g∘f = 0 {}, exact in the middle {}",
        cert.injective, cert.surjective, cert.composite_zero, cert.exact_at_middle
    );
    println!("  exact: {}", cert.is_exact());

    // a map that is not well defined is rejected
    let bad = GroupHom::new(
        FinGenAbGroup::cyclic(3),
        FinGenAbGroup::cyclic(4),
        IntegerMatrix::from_rows(1, vec![vec![1]]).unwrap(),
    );
    println!("\nZ/3 → Z/4, 1 ↦ 1: {}", bad.unwrap_err());
}
