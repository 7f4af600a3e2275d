//! Certifies a family of braids in parallel with an on-disk cache.

use legcert::pipeline::{Config, Family, batch, summary_table};

fn main() {
    let cache = std::env::temp_dir().join("legcert-example-cache");
    let config = Config::default();
    for family in [
        Family::Torus { pmax: 4, qmax: 7 },
        Family::Twisted {
            ps: vec![3, 4],
            qs: vec![1, 2, 3],
            rs: vec![1, 2],
        },
    ] {
        let items = batch(&family, &config, Some(&cache));
        print!("{}", summary_table(&items));
        println!(
            "{} of {} served from {}\n",
            items.iter().filter(|i| i.cached).count(),
            items.len(),
            cache.display()
        );
    }
}
