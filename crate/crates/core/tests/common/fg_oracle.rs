//! Brute-force free-group oracles over small words.

use std::collections::{BTreeSet, HashMap};

use graphvol_core::freegroup::{Alphabet, Letter, Word};

pub const MAX_LEN: usize = 6;
pub const CONJUGATOR_DEPTH: usize = 12;

pub fn ab() -> Alphabet {
    Alphabet::new(['a', 'b']).unwrap()
}

/// Every reduced word of length at most `max` over `alphabet`, shortest first.
pub fn corpus(alphabet: &Alphabet, max: usize) -> Vec<Word> {
    let letters: Vec<Letter> = alphabet.letters().collect();
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.letters().last().is_some_and(|&last| last.cancels(l)) {
                    continue;
                }
                next.push(w.concat(&Word::reduce(alphabet, [l]).unwrap()));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All words `c·u·c⁻¹` with `|c| ≤ depth` and length at most `max`, by
/// conjugating one letter at a time. A branch is cut once the word is too
/// long to come back under `max` in the remaining steps.
pub fn conjugates_within(alphabet: &Alphabet, u: &Word, max: usize, depth: usize) -> BTreeSet<Word> {
    let letters: Vec<Word> = alphabet
        .letters()
        .map(|l| Word::reduce(alphabet, [l]).unwrap())
        .collect();
    let mut best: HashMap<Word, usize> = HashMap::new();
    let mut found = BTreeSet::new();
    let mut stack = vec![(u.clone(), depth)];
    while let Some((w, remaining)) = stack.pop() {
        if w.len() > max + 2 * remaining {
            continue;
        }
        match best.get(&w) {
            Some(&r) if r >= remaining => continue,
            _ => {
                best.insert(w.clone(), remaining);
            }
        }
        if w.len() <= max {
            found.insert(w.clone());
        }
        if remaining > 0 {
            for l in &letters {
                stack.push((w.conjugate_by(l), remaining - 1));
            }
        }
    }
    found
}

/// Rank by greedy Nielsen reduction: shorten elements by multiplying with
/// others (on either side, either sign) until nothing shortens, dropping
/// identities. What survives is a free basis.
pub fn nielsen_rank(words: &[Word]) -> usize {
    let mut s: Vec<Word> = words.iter().filter(|w| !w.is_empty()).cloned().collect();
    loop {
        let mut changed = false;
        'scan: for i in 0..s.len() {
            for j in 0..s.len() {
                if i == j {
                    continue;
                }
                for v in [s[j].clone(), s[j].inverse()] {
                    for cand in [s[i].concat(&v), v.concat(&s[i])] {
                        if cand.len() < s[i].len() {
                            s[i] = cand;
                            changed = true;
                            break 'scan;
                        }
                    }
                }
            }
        }
        s.retain(|w| !w.is_empty());
        if !changed {
            return s.len();
        }
    }
}

/// Rank of a two-generator subgroup from first principles: elements of a
/// free group commute exactly when they are powers of a common element.
pub fn pair_rank(u: &Word, v: &Word) -> usize {
    match (u.is_empty(), v.is_empty()) {
        (true, true) => 0,
        (true, false) | (false, true) => 1,
        _ if u.concat(v) == v.concat(u) => 1,
        _ => 2,
    }
}
