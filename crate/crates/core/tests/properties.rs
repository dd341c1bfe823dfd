use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schubert_core::pipedream::{enumerate_all, max_pivot_box, rothe_diagram};
use schubert_core::tableau::reduced_word_tableaux;
use schubert_core::{eg_insert, BumplessPipedream, Permutation, StandardTableau, Word};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// A uniformly chosen descent is peeled off at each step, so the result is
/// some reduced word of w without listing all of them.
fn random_reduced_word(w: &Permutation, rng: &mut impl Rng) -> Word {
    let mut cur = w.clone();
    let mut letters = Vec::new();
    while let Some(&d) = cur.descents().choose(rng) {
        letters.push(d);
        cur = cur.apply_transposition(d, d + 1).unwrap();
    }
    letters.reverse();
    Word::new(letters, w.n()).unwrap()
}

fn p_rev_is_rt(a: &Word, w: &Permutation) -> bool {
    let (p, _) = eg_insert(&a.reverse()).unwrap();
    p.is_reduced_word_tableau(w)
}

proptest! {
    #[test]
    fn code_sums_to_length(w in permutation(7)) {
        prop_assert_eq!(w.lehmer_code().iter().sum::<usize>(), w.length());
        prop_assert_eq!(Permutation::from_lehmer_code(&w.lehmer_code()).unwrap(), w);
    }

    #[test]
    fn inverse_and_complement_are_involutions(w in permutation(8)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.complement().complement(), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.complement().length(), w.length());
    }

    #[test]
    fn dominance_tests_agree(w in permutation(7)) {
        let code = w.lehmer_code();
        let decreasing = code.windows(2).all(|p| p[0] >= p[1]);
        prop_assert_eq!(w.is_dominant(), decreasing);
        prop_assert_eq!(w.is_dominant(), w.avoids_132());
    }

    #[test]
    fn random_words_are_reduced(w in permutation(7), seed in any::<u64>()) {
        let a = random_reduced_word(&w, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(a.is_reduced());
        prop_assert_eq!(a.evaluate(), w.clone());
        prop_assert_eq!(a.len(), w.length());
        prop_assert_eq!(a.complement().evaluate(), w.complement());
        prop_assert_eq!(a.reverse().evaluate(), w.inverse());
    }

    #[test]
    fn insertion_tableau_carries_the_word(w in permutation(7), seed in any::<u64>()) {
        let a = random_reduced_word(&w, &mut ChaCha8Rng::seed_from_u64(seed));
        let (p, q) = eg_insert(&a).unwrap();
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(p.row_reading_word(w.n()).unwrap().evaluate() == w);
        // inserting the reverse transposes the insertion tableau
        let (p_rev, _) = eg_insert(&a.reverse()).unwrap();
        prop_assert_eq!(p_rev, p.transpose());
        // column words of insertion tableaux read the inverse
        prop_assert!(p.is_reduced_word_tableau(&w.inverse()));
        prop_assert!(p_rev_is_rt(&a, &w));
    }

    /// θ at the maximal pivot box of u: descents and the recording tableau
    /// survive, and the inverse undoes it.
    #[test]
    fn little_map_round_trip(w in permutation(6), seed in any::<u64>()) {
        prop_assume!(!w.is_dominant());
        let (p, q) = max_pivot_box(&w).unwrap();
        let a = random_reduced_word(&w, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = a.little_map(p, w.at(q)).unwrap();
        prop_assert!(b.is_reduced());
        prop_assert_eq!(b.len(), a.len());
        prop_assert_eq!(b.descent_set(), a.descent_set());
        prop_assert_eq!(eg_insert(&b).unwrap().1, eg_insert(&a).unwrap().1);
        prop_assert_eq!(b.little_map_inverse(p, w.at(q)).unwrap(), a);
    }

    #[test]
    fn bump_paths_terminate(w in permutation(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_reduced_word(&w, &mut rng);
        // a bump starts where deleting the letter keeps the word reduced
        let starts: Vec<usize> = (1..=a.len()).filter(|&t| a.without(t).is_reduced()).collect();
        prop_assume!(!starts.is_empty());
        let t = starts[rng.gen_range(0..starts.len())];
        let (b, times) = a.little_bump_path(t).unwrap();
        prop_assert!(b.is_reduced());
        prop_assert_eq!(times[0], t);
    }

    #[test]
    fn rothe_diagram_has_length_boxes(w in permutation(6)) {
        prop_assert_eq!(rothe_diagram(&w).len(), w.length());
        let r = BumplessPipedream::rothe(&w);
        prop_assert!(r.nw_elbows().is_empty());
        prop_assert_eq!(r.permutation(), &w);
    }
}

#[test]
fn longest_element_of_s4_has_16_words() {
    assert_eq!(Permutation::longest(4).reduced_words().len(), 16);
}

#[test]
fn reduced_word_count_recursion() {
    for w in Permutation::all(5) {
        let total: u128 = w
            .descents()
            .into_iter()
            .map(|d| w.apply_transposition(d, d + 1).unwrap().count_reduced_words())
            .sum();
        let expect = if w.is_identity() { 1 } else { total };
        assert_eq!(w.count_reduced_words(), expect, "{w}");
        assert_eq!(w.reduced_words().len() as u128, expect);
    }
}

#[test]
fn insertion_is_injective_on_s5() {
    for w in Permutation::all(5) {
        let words = w.reduced_words();
        let mut pairs: Vec<_> = words.iter().map(|a| eg_insert(a).unwrap()).collect();
        for (p, q) in &pairs {
            assert_eq!(p.shape(), q.shape());
            assert_eq!(p.column_reading_word(5).unwrap().evaluate(), w.inverse());
        }
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.rows().cmp(b.1.rows())));
        pairs.dedup();
        assert_eq!(pairs.len(), words.len(), "{w}");
        let counted: u128 = reduced_word_tableaux(&w)
            .iter()
            .map(|t| StandardTableau::count(&t.shape()))
            .sum();
        assert_eq!(counted, words.len() as u128, "{w}");
    }
}

#[test]
fn droops_add_one_nw_elbow() {
    for s in ["2413", "3142", "2431", "1432", "24153", "31524"] {
        let w: Permutation = s.parse().unwrap();
        for pd in enumerate_all(&w) {
            let empties = pd.empty_boxes();
            for &e in &pd.se_elbows() {
                for &t in &empties {
                    let Ok(d) = pd.droop(e, t) else { continue };
                    assert_eq!(d.permutation(), &w);
                    assert_eq!(d.nw_elbows().len(), pd.nw_elbows().len() + 1);
                    assert_eq!(d.reverse_droop(t).unwrap(), pd, "{s}");
                }
            }
        }
    }
}
