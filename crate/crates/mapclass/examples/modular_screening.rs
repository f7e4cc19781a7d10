//! Modular screening: how verdicts short-circuit through residue fields and
//! why "trivial" still requires exact confirmation.
//!
//! ```bash
//! cargo run --example modular_screening
//! ```

use mapclass::laurent::LaurentPoly;
use mapclass::ring::ModRing;
use mapclass::screen::ScreenConfig;
use mapclass::sphere::SphereRep;
use mapclass::words::{Context, Word};

fn main() -> mapclass::Result<()> {
    let screen = ScreenConfig::default();
    println!("screening primes: {:?}", screen.primes());
    for pt in screen.points() {
        println!("  point: q -> {}, t -> {} over Z/{}", pt.q0, pt.t0, pt.prime);
    }

    // specialization is a ring homomorphism
    let p = &(&LaurentPoly::q() - &LaurentPoly::one()) * &(&LaurentPoly::q() + &LaurentPoly::one());
    let ring = ModRing::new(7);
    println!(
        "\n(q-1)(q+1) = {p}; at q=2 over Z/7 it evaluates to {}",
        p.eval_mod(2, 1, &ring)?
    );

    // a deep word: trivial permutation and zero exponent sum, but screened
    // evaluation exposes it instantly without exact arithmetic
    let rep = SphereRep::build(4, &screen)?;
    let w = Word::parse(
        Context::Sphere { punctures: 4 },
        "1 2 -1 -2 1 2 -1 -2 1 2 -1 -2",
    )?;
    println!("\ncommutator cube \"{w}\":");
    println!("  permutation trivial: {}", w.perm()?.is_identity());
    println!("  exponent sum: {}", w.exponent_sum());
    let (pt, image) = rep.eval_screened(&w, 0)?;
    println!(
        "  screened identity mod {}: {}",
        pt.prime,
        image.is_identity()
    );
    let report = rep.trivial(&w, true)?;
    println!("  verdict: {}", serde_json::to_string(&report.to_json()).unwrap());

    // and a genuinely trivial word: screening passes at every point, then the
    // exact channel confirms before the verdict is issued
    let r4 = Word::parse(Context::Sphere { punctures: 4 }, "1 2 3 1 2 3 1 2 3 1 2 3")?;
    println!("\nrelation word \"{r4}\":");
    for idx in 0..rep.screen_point_count() {
        let (pt, image) = rep.eval_screened(&r4, idx)?;
        println!(
            "  identity mod {} (q0={}, t0={}): {}",
            pt.prime, pt.q0, pt.t0,
            image.is_identity()
        );
    }
    let report = rep.trivial(&r4, true)?;
    println!("  verdict: {}", serde_json::to_string(&report.to_json()).unwrap());
    Ok(())
}
