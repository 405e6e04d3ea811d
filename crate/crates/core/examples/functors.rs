// Hom, tensor product and exterior square, checked against enumeration.

use algroup::abelian::{exterior_square, hom_group, tensor_product, FinGenAbGroup};
use algroup::oracle::{exterior_square_bruteforce, groups_of_order, hom_count_bruteforce};

fn main() {
    let a = FinGenAbGroup::from_invariants(0, [2, 6]).expect("2 | 6");
    let b = FinGenAbGroup::from_invariants(1, [4]).expect("chain");
    println!("A = {a}, B = {b}");
    println!("Hom(A, B) = {}", hom_group(&a, &b).expect("A is finite"));
    println!(
        "Hom(B, Z/6) = {}",
        hom_group(&b, &FinGenAbGroup::cyclic(6)).expect("Z/6 is finite")
    );
    println!("A ⊗ B = {}", tensor_product(&a, &b));
    println!("Λ²A = {}", exterior_square(&a).expect("A is finite"));
    println!(
        "Λ²((Z/3)^4) = {}",
        exterior_square(&FinGenAbGroup::elementary(3, 4)).unwrap()
    );

    println!("\nΛ² of every abelian group of order 16:");
    for g in groups_of_order(16) {
        let closed = exterior_square(&g).unwrap();
        let brute = exterior_square_bruteforce(&g).unwrap();
        println!(
            "  {:<18} {:<10} enumeration agrees: {}",
            g.to_string(),
            closed.to_string(),
            closed == brute
        );
    }

    let (x, y) = (FinGenAbGroup::cyclic(6), FinGenAbGroup::cyclic(4));
    let count = hom_count_bruteforce(&x, &y).unwrap();
    let h = hom_group(&x, &y).unwrap();
    println!(
        "\n|Hom(Z/6, Z/4)|: {} by enumeration, {} from {h}",
        count,
        h.order().unwrap()
    );
}
