use hubpebble::graph::index_to_label;
use hubpebble::solver::{derive_flow_certificate, SolverLimits};
use hubpebble::{
    check_move_certificate, is_solvable, make_book, PebbleConfig, TargetFamily, Verdict,
};

fn main() {
    let g = make_book(2).unwrap();
    let family = TargetFamily::StrongHubSets;
    let limits = SolverLimits::default();

    // one pebble short of the strong-hub-cover number, placed adversarially
    for text in ["u1:5,v2:1", "u1:5,v1:1", "a:3,b:3"] {
        let c = PebbleConfig::parse(&g, text).unwrap();
        let out = is_solvable(&g, &c, &family, limits).unwrap();
        println!(
            "{} on {}: {:?} ({} nodes)",
            text,
            g.family_tag(),
            out.verdict,
            out.stats.nodes_expanded
        );
        if out.verdict != Verdict::Solvable {
            continue;
        }

        let cert = out.certificate.as_ref().unwrap();
        let moves: Vec<String> = cert
            .moves
            .iter()
            .map(|&(f, t)| format!("{}->{}", index_to_label(&g, f), index_to_label(&g, t)))
            .collect();
        println!("  moves: {}", moves.join(" "));
        check_move_certificate(&g, &c, &family, cert).unwrap();

        if let Some(flow) = derive_flow_certificate(&g, cert) {
            let arcs: Vec<String> = flow
                .flow
                .iter()
                .map(|&(f, t, k)| {
                    format!("{}->{}x{}", index_to_label(&g, f), index_to_label(&g, t), k)
                })
                .collect();
            println!("  flow: {}", arcs.join(" "));
        }
    }
}
