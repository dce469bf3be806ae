//! Lists every identity with its contour, domain and closed form.

use legfrac::verify::list_identities;

fn main() {
    for e in list_identities() {
        println!("{} [{:?}] {}", e.id, e.contour, e.description);
        println!("    {}", e.formula);
        let conds: Vec<String> = e.conditions.iter().map(|c| c.label()).collect();
        if !conds.is_empty() {
            println!("    valid for {}", conds.join(", "));
        }
        for n in &e.notes {
            println!("    note: {n}");
        }
    }
}
