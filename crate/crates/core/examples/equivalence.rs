//! Canonical labels under the code equivalence group: a random coordinate
//! permutation plus translation leaves the label unchanged.
//!
//!     cargo run --release --example equivalence

use codecert::canon::{code_automorphisms, code_label, Equivalence};
use codecert::golay::build_shortened;
use codecert::Word;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> codecert::Result<()> {
    let b = build_shortened(4)?.to_code()?;
    let label = code_label(&b)?;
    println!("B: {} words, label {}", b.size(), label.digest());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let mut perm: Vec<usize> = (0..20).collect();
        perm.shuffle(&mut rng);
        let flip = Word::from_packed(20, rng.gen::<u64>() & ((1 << 20) - 1))?;
        let image = Equivalence { perm, flip }.apply_code(&b)?;
        let same = code_label(&image)? == label;
        println!(
            "image with first word {}: same label {same}",
            image.words()[0]
        );
    }

    let gens = code_automorphisms(&b)?;
    println!("{} automorphism generators found for B", gens.len());
    Ok(())
}
