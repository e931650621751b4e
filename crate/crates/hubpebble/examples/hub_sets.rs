use hubpebble::graph::index_to_label;
use hubpebble::hubs::minimal_sets_guarded;
use hubpebble::{is_dominating_set, is_hub_set, is_strong_hub_set, make_cycle, make_path, SetKind, VertexSet};

fn main() {
    let p4 = make_path(4).unwrap();
    let mid = VertexSet::from_iter([1, 2]);
    println!(
        "P4 {{v2,v3}}: hub={} strong={} dominating={}",
        is_hub_set(&p4, mid),
        is_strong_hub_set(&p4, mid),
        is_dominating_set(&p4, mid)
    );

    // endpoints only: vertices v2, v3 can't route through it
    let ends = VertexSet::from_iter([0, 3]);
    println!(
        "P4 {{v1,v4}}: hub={} strong={}",
        is_hub_set(&p4, ends),
        is_strong_hub_set(&p4, ends)
    );

    for (g, kind) in [
        (make_path(6).unwrap(), SetKind::StrongHub),
        (make_cycle(6).unwrap(), SetKind::StrongHub),
        (make_cycle(6).unwrap(), SetKind::Dominating),
    ] {
        let sets = minimal_sets_guarded(&g, kind, 20).unwrap();
        let pretty: Vec<String> = sets
            .iter()
            .map(|s| {
                let labels: Vec<String> = s.iter().map(|v| index_to_label(&g, v)).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        println!("{} minimal {:?} sets: {}", g.family_tag(), kind, pretty.join(" "));
    }
}
