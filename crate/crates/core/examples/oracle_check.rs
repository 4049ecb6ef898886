//! Compare a brute-force scan of small matrices with the tree-side
//! enumeration, and run the counting report.

use rblab::cli::{cmd_count, cmd_oracle, Config, CountSelection, Format};

fn main() -> rblab::Result<()> {
    let cfg = Config {
        jobs: 4,
        ..Config::default()
    };
    for n in 1..=3 {
        let r = cmd_oracle(n, &cfg)?;
        println!(
            "n={n}: oracle {} enumeration {} same set {}",
            r.results["oracle_count"], r.results["enumerated_count"], r.results["sets_equal"]
        );
    }
    let sel = CountSelection {
        labeled: true,
        unlabeled: true,
    };
    print!("{}", cmd_count(4, sel, &cfg)?.to_string(Format::Csv)?);
    Ok(())
}
