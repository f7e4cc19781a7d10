//! The two-channel word-problem oracle for the genus-2 mapping class group,
//! plus the dimension audit of the linear embeddings.
//!
//! ```bash
//! cargo run --example hyperelliptic_oracle
//! ```

use mapclass::hyper::{dims, j_word, p_image, HyperOracle};
use mapclass::screen::ScreenConfig;
use mapclass::words::{Context, Word};

fn main() -> mapclass::Result<()> {
    let g = 2;
    let oracle = HyperOracle::build(g, &ScreenConfig::default())?;
    println!("genus-{g} oracle ready: sphere channel has {} punctures", 2 * g + 2);

    let j = j_word(g);
    println!(
        "involution word \"{j}\" projects to the sphere word \"{}\"",
        p_image(&j)?
    );

    let cases = [
        ("empty word", Word::empty(Context::Chain { genus: g })),
        ("involution word", j.clone()),
        ("involution word squared", j.concat(&j)?),
        ("t_1", Word::parse(Context::Chain { genus: g }, "1")?),
        (
            "braid relation t1 t2 t1 t2^-1 t1^-1 t2^-1",
            Word::parse(Context::Chain { genus: g }, "1 2 1 -2 -1 -2")?,
        ),
        (
            "involution conjugated by t3",
            Word::parse(Context::Chain { genus: g }, "3")?
                .concat(&j)?
                .concat(&Word::parse(Context::Chain { genus: g }, "-3")?)?,
        ),
    ];
    for (label, w) in cases {
        let report = oracle.trivial(&w, true)?;
        println!("  {label}: {}", serde_json::to_string(&report.to_json()).unwrap());
    }

    println!("\ndimension audit:");
    for genus in 1..=3 {
        let report = dims(genus);
        let factors: Vec<String> = report
            .factorization
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        println!(
            "  g={genus}: sphere dim {}, |Sp({},3)| = {}, product {} = {}",
            report.m0n_dim,
            2 * genus,
            report.sp_order,
            report.hyper_dim,
            factors.join(" * ")
        );
    }
    Ok(())
}
