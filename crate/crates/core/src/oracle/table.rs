//! Finite groups given by explicit multiplication tables.

use std::collections::HashMap;

use super::OracleError;

/// A finite group as a Cayley table on `0..order`. The group axioms are
/// checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    order: usize,
    op: Vec<usize>,
    identity: usize,
}

impl FiniteGroupTable {
    pub fn new(name: impl Into<String>, order: usize, op: Vec<usize>) -> Result<Self, OracleError> {
        let name = name.into();
        let bad = |why: String| OracleError::NotAGroup {
            name: name.clone(),
            why,
        };
        if order == 0 {
            return Err(bad("empty carrier".into()));
        }
        if op.len() != order * order {
            return Err(bad(format!(
                "table has {} cells, expected {}",
                op.len(),
                order * order
            )));
        }
        if let Some(x) = op.iter().find(|&&x| x >= order) {
            return Err(bad(format!("entry {x} out of range")));
        }
        let at = |a: usize, b: usize| op[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| bad("no identity".into()))?;
        for a in 0..order {
            if !(0..order).any(|b| at(a, b) == identity && at(b, a) == identity) {
                return Err(bad(format!("element {a} has no inverse")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(bad(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(Self {
            name,
            order,
            op,
            identity,
        })
    }

    /// Closes a set of elements of some ambient group under `mul` and
    /// tabulates the result.
    fn generated<T, F>(name: &str, identity: T, gens: &[T], mul: F) -> Result<Self, OracleError>
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for s in gens {
                let x = mul(&elems[i], s);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elems.len());
                    elems.push(x);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut op = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                op.push(index[&mul(a, b)]);
            }
        }
        Self::new(name, n, op)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.op
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn cyclic(n: usize) -> Self {
        let op = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::new(format!("Z/{n}"), n, op).expect("cyclic group")
    }

    pub fn product(a: &Self, b: &Self) -> Self {
        let (m, n) = (a.order, b.order);
        let mut op = Vec::with_capacity(m * n * m * n);
        for x in 0..m * n {
            for y in 0..m * n {
                op.push(a.mul(x / n, y / n) * n + b.mul(x % n, y % n));
            }
        }
        Self::new(format!("{} × {}", a.name, b.name), m * n, op).expect("direct product")
    }

    /// Dihedral group of order `2n` as symmetries of an n-gon.
    pub fn dihedral(n: usize) -> Self {
        // (k, s) is rotation by k followed by reflection if s
        let mul = move |&(k1, s1): &(usize, bool), &(k2, s2): &(usize, bool)| {
            let k = if s1 { (k1 + n - k2) % n } else { (k1 + k2) % n };
            (k, s1 ^ s2)
        };
        let name = if n == 3 {
            "S3".to_string()
        } else {
            format!("D{n}")
        };
        Self::generated(&name, (0, false), &[(1, false), (0, true)], mul).expect("dihedral group")
    }

    /// Dicyclic group of order `4n`: `⟨a, x | a^{2n}, x² = a^n, x a x⁻¹ = a⁻¹⟩`.
    /// `n = 2` gives the quaternion group.
    pub fn dicyclic(n: usize) -> Self {
        let m = 2 * n;
        let mul = move |&(k1, s1): &(usize, bool), &(k2, s2): &(usize, bool)| match (s1, s2) {
            (false, _) => ((k1 + k2) % m, s2),
            (true, false) => ((k1 + m - k2) % m, true),
            (true, true) => ((k1 + m - k2 + n) % m, false),
        };
        let name = if n == 2 {
            "Q8".to_string()
        } else {
            format!("Dic{n}")
        };
        Self::generated(&name, (0, false), &[(1, false), (0, true)], mul).expect("dicyclic group")
    }

    /// Alternating group on four letters.
    pub fn alternating4() -> Self {
        let compose = |a: &[u8; 4], b: &[u8; 4]| -> [u8; 4] {
            [
                a[b[0] as usize],
                a[b[1] as usize],
                a[b[2] as usize],
                a[b[3] as usize],
            ]
        };
        Self::generated("A4", [0, 1, 2, 3], &[[1, 2, 0, 3], [1, 0, 3, 2]], compose).expect("A4")
    }
}

/// An entry of the built-in catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub table: FiniteGroupTable,
    /// Known commutativity, recorded independently of the table.
    pub abelian: bool,
}

/// Every group of order at most 12, up to isomorphism.
pub fn catalog() -> Vec<CatalogEntry> {
    use FiniteGroupTable as T;
    let c = T::cyclic;
    let mut out: Vec<(T, bool)> = (1..=12).map(|n| (c(n), true)).collect();
    out.extend([
        (T::product(&c(2), &c(2)), true),
        (T::dihedral(3), false),
        (T::product(&c(2), &c(4)), true),
        (T::product(&T::product(&c(2), &c(2)), &c(2)), true),
        (T::dihedral(4), false),
        (T::dicyclic(2), false),
        (T::product(&c(3), &c(3)), true),
        (T::dihedral(5), false),
        (T::product(&c(2), &c(6)), true),
        (T::alternating4(), false),
        (T::dihedral(6), false),
        (T::dicyclic(3), false),
    ]);
    let mut entries: Vec<CatalogEntry> = out
        .into_iter()
        .map(|(table, abelian)| {
            let table = match table.name() {
                "Z/2 × Z/2" => rename(table, "V4"),
                _ => table,
            };
            CatalogEntry { table, abelian }
        })
        .collect();
    entries.sort_by_key(|e| e.table.order());
    entries
}

fn rename(t: FiniteGroupTable, name: &str) -> FiniteGroupTable {
    FiniteGroupTable {
        name: name.into(),
        ..t
    }
}
