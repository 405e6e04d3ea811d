// Coranks of the ℓ-primary Brauer group over a grid of (g, r).

use algroup::descriptors::GroupDescriptor;
use algroup::invariants::brauer_ell_corank;

fn main() {
    println!("corank with ρ = 1 (ρ = 0 when g = 0), ℓ = 2");
    print!("{:>6}", "g \\ r");
    for r in 0..=4 {
        print!("{r:>5}");
    }
    println!();
    for g in 0..=4u32 {
        print!("{g:>6}");
        for r in 0..=4u32 {
            let rho = u64::from(g > 0);
            let d = GroupDescriptor::new(0, g, r, rho, true);
            print!("{:>5}", brauer_ell_corank(&d, 2).unwrap());
        }
        println!();
    }

    let surface = GroupDescriptor::new(0, 2, 0, 1, true);
    for ell in [2, 3, 5, 7] {
        println!(
            "abelian surface, ρ = 1, ℓ = {ell}: {}",
            brauer_ell_corank(&surface, ell).unwrap()
        );
    }
    let too_big = GroupDescriptor::new(0, 1, 0, 2, true);
    println!(
        "\nelliptic curve with ρ = 2:\n{}",
        brauer_ell_corank(&too_big, 2).unwrap_err()
    );
}
