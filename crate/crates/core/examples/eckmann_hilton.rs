// Searches every group of order at most 8 for a second unital law that
// satisfies the interchange law with the first.

use algroup::oracle::{catalog, eckmann_hilton_search};

fn main() {
    for entry in catalog().iter().filter(|e| e.table.order() <= 8) {
        let t = &entry.table;
        let found = eckmann_hilton_search(t).expect("order at most 8");
        let verdict = match found.as_slice() {
            [] => "none".to_string(),
            [m] if m == t.table() => "only the group law itself".to_string(),
            other => format!("{} laws", other.len()),
        };
        println!(
            "{:<16} order {:>2}  abelian {:<5}  compatible laws: {verdict}",
            t.name(),
            t.order(),
            entry.abelian
        );
    }
}
