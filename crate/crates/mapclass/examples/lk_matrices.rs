//! The Lawrence–Krammer representation: dimensions, generator matrices, and
//! the exact relation battery.
//!
//! ```bash
//! cargo run --example lk_matrices
//! ```

use mapclass::braid::{braid_relation_words, lk_representation};
use mapclass::words::{Context, Word};

fn main() -> mapclass::Result<()> {
    for n in 2..=6 {
        let rep = lk_representation(n)?;
        println!(
            "B_{n}: dimension {} = {n}({n}-1)/2, {} defining relations",
            rep.dim(),
            braid_relation_words(n).len()
        );
    }

    let rep = lk_representation(3)?;
    println!("\nimage of sigma_1 in B_3 (basis v_12, v_13, v_23):");
    let m = rep.generator_image(1, false);
    for r in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|c| m.get(r, c).to_string()).collect();
        println!("  [ {} ]", row.join(" | "));
    }

    println!("\nits inverse (verified by multiplication at construction):");
    let mi = rep.generator_image(1, true);
    for r in 0..mi.dim() {
        let row: Vec<String> = (0..mi.dim()).map(|c| mi.get(r, c).to_string()).collect();
        println!("  [ {} ]", row.join(" | "));
    }

    for w in braid_relation_words(4) {
        let image = lk_representation(4)?.eval(&w)?;
        println!("relation {w}: identity = {}", image.is_identity());
    }

    // both sides of the braid relation give the same matrix
    let ctx = Context::Braid { strings: 3 };
    let lhs = rep.eval(&Word::parse(ctx, "1 2 1")?)?;
    let rhs = rep.eval(&Word::parse(ctx, "2 1 2")?)?;
    println!("\nsigma1 sigma2 sigma1 == sigma2 sigma1 sigma2: {}", lhs == rhs);
    println!("JSON dump of that image:\n{}", serde_json::to_string_pretty(&lhs.to_json()).unwrap());
    Ok(())
}
