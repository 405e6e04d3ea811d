// Smith normal form of an integer matrix, with the unimodular transforms.

use algroup::abelian::{smith_normal_form, IntegerMatrix};

fn main() {
    let m = IntegerMatrix::from_rows(
        4,
        vec![vec![2, 4, 4, 8], vec![-6, 6, 12, 0], vec![10, -4, -16, 2]],
    )
    .expect("rows of length 4");
    let s = smith_normal_form(&m);

    println!("M =\n{m}\n");
    println!("D =\n{}\n", s.d);
    println!("U =\n{}\n", s.u);
    println!("V =\n{}\n", s.v);
    assert_eq!(&(&s.u * &m) * &s.v, s.d);

    let factors: Vec<String> = s
        .invariant_factors()
        .iter()
        .map(|d| d.to_string())
        .collect();
    println!("invariant factors: {}", factors.join(" | "));
    println!("rank: {}", s.rank());

    // entries far beyond 64 bits are handled without loss
    let big = IntegerMatrix::from_rows(2, vec![vec![i128::MAX, 3], vec![6, i128::MAX - 1]])
        .expect("2 x 2");
    let s = smith_normal_form(&big);
    println!("\nlarge entries: diag = {:?}", s.d.diagonal_entries());
}
