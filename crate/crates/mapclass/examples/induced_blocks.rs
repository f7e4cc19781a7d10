//! Anatomy of the induced representation: the Schreier transversal, the
//! rewriting table, block-monomial images, and the dense audit form.
//!
//! ```bash
//! cargo run --example induced_blocks
//! ```

use mapclass::screen::ScreenConfig;
use mapclass::sphere::{coset_system, stab_to_braid, transversal, SphereRep};
use mapclass::words::{Context, Word};

fn main() -> mapclass::Result<()> {
    let n = 4;
    println!("transversal of the puncture-{n} stabilizer:");
    for (i, c) in transversal(n).iter().enumerate() {
        let image = c.perm()?.apply(n);
        println!("  c_{} = \"{c}\"  (sends puncture {n} to {image})", i + 1);
    }

    let sys = coset_system(n)?;
    println!("\nrewriting table entries for tau_3 (coset -> braid word):");
    for i in 1..=n {
        let perm_image = sys.generator_perm(3).apply(i);
        println!(
            "  c_{perm_image}^-1 tau_3 c_{i} = \"{}\"",
            sys.block_word(3, false, i)
        );
    }

    println!("\nSchreier rewriting of stabilizer words:");
    for text in ["1 1", "3 3", "2 3 3 -2"] {
        let w = Word::parse(Context::Sphere { punctures: n }, text)?;
        println!("  \"{text}\" -> \"{}\"", stab_to_braid(&w)?);
    }

    let rep = SphereRep::build(n, &ScreenConfig::default())?;
    let w = Word::parse(Context::Sphere { punctures: n }, "1 3 -2")?;
    let image = rep.eval(&w)?;
    println!(
        "\nblock-monomial image of \"{w}\": coset permutation {:?}",
        image.coset_perm().one_based_images()
    );
    for i in 1..=n {
        let b = image.block(i);
        println!(
            "  block at coset {i}: {}x{} pair, identity = {}",
            b.base_dim(),
            b.base_dim(),
            b.is_identity()
        );
    }

    // dense audit: one nonzero 9x9 block per block row/column of the 36x36
    let dense = rep.dense(&w, 200)?;
    println!("\ndense audit matrix: {}x{}; block sparsity pattern:", dense.dim(), dense.dim());
    let k = 9;
    for bi in 0..n {
        let mut row = String::new();
        for bj in 0..n {
            let nonzero = (0..k).any(|r| (0..k).any(|c| !dense.get(bi * k + r, bj * k + c).is_zero()));
            row.push(if nonzero { '#' } else { '.' });
        }
        println!("  {row}");
    }
    Ok(())
}
