//! Finite-index subgroups given as point stabilizers of a permutation action.
//!
//! Words act on the left: `(uv)·c = u·(v·c)`, so the rightmost letter is
//! applied first. The subgroup Δ is the stabilizer of coset 0 and the
//! representative of coset `i` is a word `γ_i` with `γ_i·0 = i`.

use std::collections::VecDeque;
use std::fmt;

use super::{Presentation, Word, WordsError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, WordsError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(WordsError::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Parses cycle notation on `{0, …, degree-1}`: `(0 1)(2 3 4)`, `(0,1)`, or `()`.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self, WordsError> {
        let bad = || WordsError::InvalidPermutation(text.to_string());
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(bad)?;
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let cycle: Vec<usize> = rest[1..inner_end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree || touched[p] {
                    return Err(bad());
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A Schreier generator `γ_{g·c}⁻¹ · g · γ_c` of the stabilizer of coset 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub coset: usize,
    pub generator: usize,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    action: Vec<Permutation>,
    inverse_action: Vec<Permutation>,
    representatives: Vec<Word>,
}

/// Builds the coset table of the stabilizer of 0 under the action
/// `generator i ↦ images[i]`. Representatives come from a breadth-first
/// search from coset 0 that tries `g0, g0⁻¹, g1, g1⁻¹, …` in order.
pub fn coset_table(p: &Presentation, images: &[Permutation]) -> Result<CosetTable, WordsError> {
    if images.len() != p.generator_count() {
        return Err(WordsError::ImageCount {
            expected: p.generator_count(),
            got: images.len(),
        });
    }
    let degree = images.first().map_or(1, Permutation::degree);
    if degree == 0 || images.iter().any(|perm| perm.degree() != degree) {
        return Err(WordsError::InvalidPermutation(
            "images must share a positive degree".into(),
        ));
    }
    let inverse_action: Vec<Permutation> = images.iter().map(Permutation::inverse).collect();
    let mut table = CosetTable {
        action: images.to_vec(),
        inverse_action,
        representatives: Vec::new(),
    };
    for (index, r) in p.relators().iter().enumerate() {
        if (0..degree).any(|c| table.act(r, c) != c) {
            return Err(WordsError::RelatorViolated {
                index,
                relator: p.word_to_string(r),
            });
        }
    }

    let mut reps: Vec<Option<Word>> = vec![None; degree];
    reps[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let rep = reps[c].clone().expect("queued cosets have representatives");
        for g in 0..images.len() {
            for s in [1i64, -1] {
                let next = table.act_letter(g, s, c);
                if reps[next].is_none() {
                    let mut w = Word::power_of(g, s);
                    w = &w * &rep;
                    reps[next] = Some(w);
                    queue.push_back(next);
                }
            }
        }
    }
    table.representatives = reps
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or(WordsError::NotTransitive(i)))
        .collect::<Result<_, _>>()?;
    Ok(table)
}

impl CosetTable {
    /// Index of the subgroup.
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Word] {
        &self.representatives
    }

    pub fn action(&self) -> &[Permutation] {
        &self.action
    }

    pub fn generator_count(&self) -> usize {
        self.action.len()
    }

    fn act_letter(&self, g: usize, sign: i64, c: usize) -> usize {
        if sign > 0 {
            self.action[g].apply(c)
        } else {
            self.inverse_action[g].apply(c)
        }
    }

    /// `w · coset`.
    pub fn act(&self, w: &Word, coset: usize) -> usize {
        w.letters()
            .rev()
            .fold(coset, |c, (g, s)| self.act_letter(g, s, c))
    }

    pub fn stabilizes_base(&self, w: &Word) -> bool {
        self.act(w, 0) == 0
    }

    /// Writes `γ·γ_j = γ_i·δ` with δ in the subgroup; returns `(i, δ)`.
    pub fn rewrite(&self, gamma: &Word, j: usize) -> (usize, Word) {
        let i = self.act(gamma, j);
        let delta = &(&self.representatives[i].inverse() * gamma) * &self.representatives[j];
        (i, delta)
    }

    /// Nontrivial Schreier generators, ordered by (generator, coset).
    pub fn schreier_generators(&self) -> Vec<SchreierGenerator> {
        let mut out = Vec::new();
        for generator in 0..self.action.len() {
            for coset in 0..self.index() {
                let (_, word) = self.rewrite(&Word::generator(generator), coset);
                if !word.is_identity() {
                    out.push(SchreierGenerator {
                        coset,
                        generator,
                        word,
                    });
                }
            }
        }
        out
    }

    /// Reidemeister rewriting of a subgroup element as a product of Schreier
    /// generators. Returns `(position in schreier_generators(), ±1)` pairs in
    /// left-to-right product order, or `None` if `w` does not fix coset 0.
    pub fn reidemeister(&self, w: &Word) -> Option<Vec<(usize, i64)>> {
        if !self.stabilizes_base(w) {
            return None;
        }
        let gens = self.schreier_generators();
        let lookup =
            |g: usize, c: usize| gens.iter().position(|s| s.generator == g && s.coset == c);
        let mut factors = Vec::new();
        let mut c = 0;
        for (g, s) in w.letters().rev() {
            if s > 0 {
                if let Some(k) = lookup(g, c) {
                    factors.push((k, 1));
                }
                c = self.action[g].apply(c);
            } else {
                let prev = self.inverse_action[g].apply(c);
                if let Some(k) = lookup(g, prev) {
                    factors.push((k, -1));
                }
                c = prev;
            }
        }
        factors.reverse();
        Some(factors)
    }
}

/// Reidemeister–Schreier presentation of the stabilizer of coset 0.
///
/// Generators are the nontrivial Schreier generators, named `s1, s2, …` in
/// the order of [`CosetTable::schreier_generators`]; relators are the
/// rewritten conjugates `γ_c r γ_c⁻¹` of each relator `r` of `p`.
pub fn subgroup_presentation(p: &Presentation, table: &CosetTable) -> Presentation {
    let names: Vec<String> = (1..=table.schreier_generators().len())
        .map(|k| format!("s{k}"))
        .collect();
    let mut relators: Vec<Word> = Vec::new();
    for r in p.relators() {
        for c in 0..table.index() {
            let (_, delta) = table.rewrite(r, c);
            let factors = table
                .reidemeister(&delta)
                .expect("relators fix every coset");
            let w = Word::from_runs(factors);
            if !w.is_identity() && !relators.contains(&w) {
                relators.push(w);
            }
        }
    }
    Presentation::new(names, relators).expect("generator indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_presentation;

    fn z() -> Presentation {
        parse_presentation("<a|>").unwrap()
    }

    #[test]
    fn index_two_in_z() {
        let t = coset_table(&z(), &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap();
        assert_eq!(t.index(), 2);
        assert_eq!(t.representatives(), &[Word::identity(), Word::generator(0)]);
    }

    #[test]
    fn trivial_action() {
        let t = coset_table(&z(), &[Permutation::identity(1)]).unwrap();
        assert_eq!(t.index(), 1);
        assert_eq!(t.representatives(), &[Word::identity()]);
    }

    #[test]
    fn free_group_index_two() {
        let p = parse_presentation("<a,b|>").unwrap();
        let t = coset_table(
            &p,
            &[
                Permutation::from_cycles(2, "(0 1)").unwrap(),
                Permutation::identity(2),
            ],
        )
        .unwrap();
        assert_eq!(t.representatives(), &[Word::identity(), Word::generator(0)]);
    }

    #[test]
    fn bfs_prefers_inverse_over_longer_words() {
        let t = coset_table(&z(), &[Permutation::from_cycles(3, "(0 1 2)").unwrap()]).unwrap();
        assert_eq!(
            t.representatives(),
            &[Word::identity(), Word::generator(0), Word::power_of(0, -1)]
        );
    }

    #[test]
    fn rewrite_examples() {
        let t = coset_table(&z(), &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap();
        let a = Word::generator(0);
        assert_eq!(t.rewrite(&a, 0), (1, Word::identity()));
        assert_eq!(t.rewrite(&a, 1), (0, Word::power_of(0, 2)));
        assert_eq!(t.rewrite(&Word::identity(), 1), (1, Word::identity()));
    }

    #[test]
    fn relator_violation_is_reported() {
        let p = parse_presentation("<a|a^3>").unwrap();
        let err = coset_table(&p, &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap_err();
        assert!(matches!(err, WordsError::RelatorViolated { index: 0, .. }));
    }

    #[test]
    fn intransitive_action_rejected() {
        let err = coset_table(&z(), &[Permutation::identity(2)]).unwrap_err();
        assert_eq!(err, WordsError::NotTransitive(1));
    }

    #[test]
    fn schreier_generators_of_2z() {
        let t = coset_table(&z(), &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap();
        let s = t.schreier_generators();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].word, Word::power_of(0, 2));
        assert_eq!(
            t.reidemeister(&Word::power_of(0, -4)),
            Some(vec![(0, -1), (0, -1)])
        );
        assert_eq!(t.reidemeister(&Word::generator(0)), None);
    }

    #[test]
    fn subgroup_presentations() {
        let t = coset_table(&z(), &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap();
        let sub = subgroup_presentation(&z(), &t);
        assert_eq!(sub.generator_count(), 1);
        assert!(sub.is_free());

        // index 2 in F_2 is free of rank 3 (Schreier index formula 1 + d(r-1))
        let f2 = parse_presentation("<a,b|>").unwrap();
        let t = coset_table(
            &f2,
            &[
                Permutation::from_cycles(2, "(0 1)").unwrap(),
                Permutation::identity(2),
            ],
        )
        .unwrap();
        assert_eq!(subgroup_presentation(&f2, &t).generator_count(), 3);

        // ⟨a²⟩ in Z/4 is Z/2
        let z4 = parse_presentation("<a|a^4>").unwrap();
        let t = coset_table(&z4, &[Permutation::from_cycles(2, "(0 1)").unwrap()]).unwrap();
        let sub = subgroup_presentation(&z4, &t);
        assert_eq!(sub.relators(), &[Word::power_of(0, 2)]);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::from_cycles(5, "(0 3)(1,2,4)").unwrap();
        assert_eq!(p.to_string(), "(0 3)(1 2 4)");
        assert_eq!(Permutation::from_cycles(5, &p.to_string()).unwrap(), p);
        assert!(Permutation::from_cycles(3, "(0 3)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1)(1 2)").is_err());
    }
}
