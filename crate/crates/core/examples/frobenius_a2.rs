//! Checks the residue congruences and the homomorphism property of the
//! restriction map on `A2` for `l = 2` at a few prime powers.

use hallfrob::hall::{check_q_homomorphism, check_residue, preset, word_pairs_up_to, words_up_to, FrobeniusSetup};

fn main() -> hallfrob::Result<()> {
    let quiver = preset("A2")?;
    for q in [3, 5] {
        let setup = FrobeniusSetup::new(&quiver, 2, q)?;
        let words = words_up_to(&[4, 4]);
        let mut bad = 0;
        for w in &words {
            bad += usize::from(!check_residue(&setup, w)?.passed);
        }
        let hom = check_q_homomorphism(&setup, &word_pairs_up_to(&[4, 4]))?;
        println!(
            "q = {q}: {} words, {bad} residue failures; {} pairs ({} nontrivial), {} homomorphism failures",
            words.len(),
            hom.pairs,
            hom.nontrivial,
            hom.failures
        );
    }
    Ok(())
}
