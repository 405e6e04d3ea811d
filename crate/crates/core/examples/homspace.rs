// Generator bounds for π₁ of homogeneous spaces G/H.

use algroup::descriptors::{GroupDescriptor, HomSpaceDescriptor};
use algroup::invariants::homspace_pi1_bound;

fn space(g: GroupDescriptor, g_h: u32, r_h: u32, connected: bool) -> HomSpaceDescriptor {
    HomSpaceDescriptor {
        group: g,
        g_h,
        r_h,
        stabilizer_connected: connected,
    }
}

fn main() {
    for n in 2..=4 {
        let flags = space(GroupDescriptor::new(0, 0, n, 0, false), 0, n, true);
        println!(
            "GL({n})/B: bound {}",
            homspace_pi1_bound(&flags).unwrap().bound
        );
    }
    let torus = space(GroupDescriptor::new(0, 0, 3, 0, false), 0, 1, true);
    println!(
        "GL(3)/GL(1): bound {}",
        homspace_pi1_bound(&torus).unwrap().bound
    );

    let semi = GroupDescriptor::new(0, 1, 2, 1, true);
    let trivial = space(semi.clone(), 0, 0, true);
    println!(
        "G acting on itself, 2g + r = {}: bound {}",
        semi.m(),
        homspace_pi1_bound(&trivial).unwrap().bound
    );

    let gamma = space(GroupDescriptor::new(0, 0, 3, 0, false), 0, 0, false);
    println!("\nGL(3)/Γ:\n{}", homspace_pi1_bound(&gamma).unwrap_err());
}
