//! Exhaustive search for a second group law compatible with the first.
//!
//! A binary operation `m` on `G` that is unital (`m(1, g) = m(g, 1) = g`) and
//! a homomorphism `G × G → G` must satisfy
//! `hg = m(1,h)m(g,1) = m(g,h) = m(g,1)m(1,h) = gh`, so it exists only for
//! abelian `G` and then equals the group law. The search below does not use
//! that argument; it backtracks over all tables and prunes with the
//! interchange law `m(a,b)·m(c,d) = m(ac, bd)`.

use super::{FiniteGroupTable, OracleError};

/// Largest group the search accepts.
pub const MAX_EH_ORDER: usize = 12;

const UNSET: usize = usize::MAX;

pub fn eckmann_hilton_search(g: &FiniteGroupTable) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.order();
    if n > MAX_EH_ORDER {
        return Err(OracleError::TooLarge {
            what: "Eckmann–Hilton search",
            size: n,
            limit: MAX_EH_ORDER,
        });
    }
    let e = g.identity();
    let mut m = vec![UNSET; n * n];
    for a in 0..n {
        m[e * n + a] = a;
        m[a * n + e] = a;
    }
    let cells: Vec<usize> = (0..n * n).filter(|&k| m[k] == UNSET).collect();
    let mut found = Vec::new();
    search(g, &mut m, &cells, 0, &mut found);
    Ok(found)
}

fn search(
    g: &FiniteGroupTable,
    m: &mut [usize],
    cells: &[usize],
    depth: usize,
    found: &mut Vec<Vec<usize>>,
) {
    let n = g.order();
    if depth == cells.len() {
        if interchange_holds(g, m) {
            found.push(m.to_vec());
        }
        return;
    }
    let cell = cells[depth];
    for v in 0..n {
        m[cell] = v;
        if consistent_at(g, m, cell) {
            search(g, m, cells, depth + 1, found);
        }
    }
    m[cell] = UNSET;
}

/// Checks every instance of the interchange law in which `cell` takes part
/// and all three cells involved are assigned.
fn consistent_at(g: &FiniteGroupTable, m: &[usize], cell: usize) -> bool {
    let n = g.order();
    let (x, y) = (cell / n, cell % n);
    let get = |a: usize, b: usize| m[a * n + b];
    let law = |a: usize, b: usize, c: usize, d: usize| {
        let (l, r, p) = (get(a, b), get(c, d), get(g.mul(a, c), g.mul(b, d)));
        l == UNSET || r == UNSET || p == UNSET || g.mul(l, r) == p
    };
    for c in 0..n {
        for d in 0..n {
            // cell as the left factor, as the right factor
            if !law(x, y, c, d) || !law(c, d, x, y) {
                return false;
            }
        }
    }
    // cell as the product: m(x, y) = m(a, b) m(c, d) whenever ac = x, bd = y
    for a in 0..n {
        for b in 0..n {
            let c = left_quotient(g, a, x);
            let d = left_quotient(g, b, y);
            if !law(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// The unique `c` with `a c = x`.
fn left_quotient(g: &FiniteGroupTable, a: usize, x: usize) -> usize {
    (0..g.order())
        .find(|&c| g.mul(a, c) == x)
        .expect("group tables are Latin squares")
}

fn interchange_holds(g: &FiniteGroupTable, m: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                (0..n)
                    .all(|d| g.mul(m[a * n + b], m[c * n + d]) == m[g.mul(a, c) * n + g.mul(b, d)])
            })
        })
    })
}
