use hubpebble::{
    generalized_cover_pebbling_number, make_book, make_cycle, make_path, make_star,
    pebbling_number, EngineOptions, TargetFamily,
};

fn main() {
    let opts = EngineOptions::default();

    for g in [
        make_path(5).unwrap(),
        make_star(6).unwrap(),
        make_book(2).unwrap(),
        make_cycle(6).unwrap(),
    ] {
        for family in [
            TargetFamily::StrongHubSets,
            TargetFamily::HubSets,
            TargetFamily::FullCover,
        ] {
            let r = generalized_cover_pebbling_number(&g, &family, &opts).unwrap();
            println!(
                "{} {:>10}: {:>3}  witness={:<20} examined={:<7} orbit-skipped={:<8} {}ms",
                g.family_tag(),
                family.name(),
                r.value,
                r.witness_text.as_deref().unwrap_or("-"),
                r.configs_examined,
                r.configs_skipped_by_symmetry,
                r.elapsed_ms
            );
        }
        let r = pebbling_number(&g, &opts).unwrap();
        println!("{} {:>10}: {:>3}", g.family_tag(), "pebbling", r.value);
    }
}
