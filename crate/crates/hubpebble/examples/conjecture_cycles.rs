use hubpebble::verify::{conjecture_cycles, conjectured_cycle_value};
use hubpebble::EngineOptions;

fn main() {
    // closed form under test: 2^k + 2^{k-1} - 3 for n=2k, 2^{k+1} - 3 for n=2k+1
    for n in 4..=12 {
        println!("n={n}: conjectured {}", conjectured_cycle_value(n));
    }

    println!("\ncomputing exact values up to the guard size:");
    for row in conjecture_cycles(8, &EngineOptions::default()) {
        println!(
            "C_{}: conjectured={} computed={} agrees={} stacked-witness-unsolvable={}",
            row.n,
            row.conjectured,
            row.computed.map_or("-".into(), |v| v.to_string()),
            row.agrees.map_or("-".into(), |b: bool| b.to_string()),
            row.witness_unsolvable
                .map_or("-".into(), |b: bool| b.to_string()),
        );
    }
}
