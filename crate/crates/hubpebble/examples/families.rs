use hubpebble::{make_book, make_cycle, make_path, make_star, parse_graph};

fn main() {
    for g in [
        make_path(5).unwrap(),
        make_star(4).unwrap(),
        make_book(3).unwrap(),
        make_cycle(6).unwrap(),
    ] {
        println!(
            "{}: n={} m={} tree={} automorphisms={}",
            g.family_tag(),
            g.n(),
            g.edges().len(),
            g.is_tree(),
            g.automorphisms().len()
        );
        let dist = g.distance_matrix();
        let diameter = dist.iter().flatten().max().unwrap();
        println!("  diameter {diameter}");

        // text form round-trips
        let reparsed = parse_graph(&g.render()).unwrap();
        assert_eq!(reparsed.edges(), g.edges());
    }

    // arbitrary graphs come from an edge list: header line "n", then pairs
    let g = parse_graph("5\n0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n").unwrap();
    println!("custom: n={} m={}", g.n(), g.edges().len());
}
