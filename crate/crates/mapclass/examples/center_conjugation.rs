//! The center-killing construction: the full twist generates the center of
//! the braid group, maps to a scalar matrix, and dies in the conjugation
//! representation, while every generator survives.
//!
//! ```bash
//! cargo run --example center_conjugation
//! ```

use mapclass::braid::{full_twist_word, lk_representation};
use mapclass::conj::ConjRep;
use mapclass::words::{Context, Word};

fn main() -> mapclass::Result<()> {
    for n in [3, 4] {
        let rep = lk_representation(n)?;
        let conj = ConjRep::new(rep.clone());
        let ft = full_twist_word(n);
        println!("B_{n}: full twist = ({})^{n}, {} letters",
                 (1..n).map(|k| k.to_string()).collect::<Vec<_>>().join(" "), ft.len());

        let image = rep.eval(&ft)?;
        match image.is_scalar() {
            Some(c) => println!("  LK image is the scalar matrix ({c}) * I_{}", image.dim()),
            None => println!("  LK image is NOT scalar (unexpected)"),
        }

        let pair = conj.eval(&ft)?;
        println!("  conjugation image is the identity: {}", pair.is_identity());
        let materialized = pair.materialize()?;
        println!(
            "  materialized conjugation image: {}x{} identity = {}",
            materialized.dim(),
            materialized.dim(),
            materialized.is_identity()
        );

        for k in 1..n {
            let g = Word::from_signed(Context::Braid { strings: n }, &[k as i64])?;
            println!(
                "  conj image of sigma_{k} is the identity: {}",
                conj.eval(&g)?.is_identity()
            );
        }
    }

    // the kernel law in one line: conj(w) = I iff LK(w) is scalar
    let rep = lk_representation(3)?;
    let conj = ConjRep::new(rep.clone());
    let ctx = Context::Braid { strings: 3 };
    for text in ["1 2 -1 -2", "1 2 1 2 1 2", "1 -1"] {
        let w = Word::parse(ctx, text)?;
        let scalar = rep.eval(&w)?.is_scalar().is_some();
        let trivial = conj.eval(&w)?.is_identity();
        println!("w = \"{text}\": scalar={scalar}, conj-trivial={trivial}");
        assert_eq!(scalar, trivial);
    }
    Ok(())
}
