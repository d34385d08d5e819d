//! Deterministic document generation for benchmarks.

const POOL: &[&str] = &[
    "amber", "basil", "cobalt", "dune", "ember", "fjord", "garnet", "harbor", "indigo",
    "juniper", "kelp", "lagoon", "meadow", "nectar", "onyx", "pebble", "quartz", "reef",
    "saffron", "tundra", "umber", "violet", "willow", "xenon", "yarrow", "zephyr",
];

const CONNECTIVES: &[&str] = &["but", "yet", "therefore", "so", "however"];
const LEXEMES: &[&str] = &["work", "weather", "outing", "job", "nice"];

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 16
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Text of at least `target_bytes` with a frequency skew, occasional
/// connectives, and occasional topos lexemes. Same seed, same bytes.
pub fn synthetic_text(seed: u64, target_bytes: usize) -> String {
    let mut lcg = Lcg(seed);
    let mut text = String::with_capacity(target_bytes + 128);
    while text.len() < target_bytes {
        let words = 6 + lcg.below(9);
        for w in 0..words {
            if w > 0 {
                text.push(' ');
            }
            let roll = lcg.below(100);
            if roll < 4 {
                text.push_str(CONNECTIVES[lcg.below(CONNECTIVES.len())]);
            } else if roll < 8 {
                text.push_str(LEXEMES[lcg.below(LEXEMES.len())]);
            } else {
                let pick = lcg.below(POOL.len()).min(lcg.below(POOL.len()));
                text.push_str(POOL[pick]);
            }
        }
        text.push_str(". ");
    }
    text
}
