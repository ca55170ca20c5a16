// Scratch benchmark for the windowed engine on the large codes.
use f4codes::catalog;
use f4codes::minweight::{count_words_of_weight, verify_no_word_below, EngineConfig, VerifyOutcome};
use std::time::Instant;

fn main() {
    let cfg = EngineConfig::default();
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(|s| s.as_str()).unwrap_or("verify");
    let name = args.get(2).map(|s| s.as_str()).unwrap_or("C66");
    let x: u32 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(17);
    let entry = catalog::lookup(name).unwrap();
    let code = entry.code();
    let t = Instant::now();
    match mode {
        "verify" => {
            let out = verify_no_word_below(&code, x, &cfg).unwrap();
            match out {
                VerifyOutcome::Holds(cert) => {
                    println!("{name}: min weight >= {x} HOLDS in {:.1?}", t.elapsed());
                    println!("{}", cert.to_text());
                }
                VerifyOutcome::Refuted(w) => {
                    println!("{name}: REFUTED, weight {} word, {:.1?}", w.weight(), t.elapsed());
                }
            }
        }
        "count" => {
            let r = count_words_of_weight(&code, x, &cfg).unwrap();
            println!(
                "{name}: A_{x} = {} exhaustive={} in {:.1?}",
                r.count,
                r.exhaustive,
                t.elapsed()
            );
        }
        other => eprintln!("unknown mode {other}"),
    }
}
