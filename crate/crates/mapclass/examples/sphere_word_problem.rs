//! The word problem in the mapping class group of the punctured sphere:
//! relation battery, torsion ladder, and the capped braid group's center.
//!
//! ```bash
//! cargo run --example sphere_word_problem
//! ```

use mapclass::braid::full_twist_word;
use mapclass::screen::ScreenConfig;
use mapclass::sphere::{braid_to_sphere, sphere_relation_words, torsion_words, SphereRep};
use mapclass::words::{Context, Word};

fn main() -> mapclass::Result<()> {
    let screen = ScreenConfig::default();
    let rep = SphereRep::build(4, &screen)?;
    println!(
        "sphere with 4 punctures: faithful representation of dimension {}",
        rep.dense_dim()
    );

    println!("\nrelation battery (exact):");
    for (name, w) in sphere_relation_words(4) {
        println!("  {name} = \"{w}\": identity = {}", rep.eval(&w)?.is_identity());
    }

    println!("\ntorsion ladder (tau1 tau2 tau3)^k:");
    for (k, w) in torsion_words(4).iter().enumerate() {
        let report = rep.trivial(w, true)?;
        println!(
            "  k={}: {}",
            k + 1,
            serde_json::to_string(&report.to_json()).unwrap()
        );
    }

    // the full twist generates the kernel of the capped-disc homomorphism
    let ft = braid_to_sphere(&full_twist_word(3))?;
    let report = rep.trivial(&ft, true)?;
    println!(
        "\nimage of the B_3 full twist: {}",
        serde_json::to_string(&report.to_json()).unwrap()
    );

    // a word that needs the exact channel: trivial permutation, zero
    // exponent sum, still nontrivial
    let w = Word::parse(Context::Sphere { punctures: 4 }, "1 2 -1 -2 1 2 -1 -2 1 2 -1 -2")?;
    let report = rep.trivial(&w, true)?;
    println!(
        "commutator cube: {}",
        serde_json::to_string(&report.to_json()).unwrap()
    );
    Ok(())
}
