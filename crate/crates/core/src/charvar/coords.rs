use crate::words::Word;

/// Words whose traces serve as coordinates on the character variety.
///
/// From the reduced words of length ≤ `max_len` we keep one representative
/// per class under cyclic rotation and inversion (traces are invariant under
/// both), and drop non-cyclically-reduced words and proper powers. The
/// identity word comes first and carries no variable (its trace is `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCoordinateSystem {
    generators: Vec<String>,
    words: Vec<Word>,
}

fn letter_key((g, s): (usize, i64)) -> usize {
    2 * g + usize::from(s < 0)
}

fn letters(w: &Word) -> Vec<(usize, i64)> {
    w.letters().collect()
}

fn is_cyclically_reduced(w: &Word) -> bool {
    let l = letters(w);
    match (l.first(), l.last()) {
        (Some(a), Some(b)) if l.len() > 1 => !(a.0 == b.0 && a.1 == -b.1),
        _ => true,
    }
}

fn is_proper_power(w: &Word) -> bool {
    let l = letters(w);
    let n = l.len();
    (1..n).any(|p| n.is_multiple_of(p) && (p..n).all(|i| l[i] == l[i - p]))
}

/// Smallest key sequence among rotations of `w` and of `w⁻¹`.
fn canonical_key(w: &Word) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for v in [w.clone(), w.inverse()] {
        let keys: Vec<usize> = letters(&v).into_iter().map(letter_key).collect();
        for r in 0..keys.len().max(1) {
            let mut rot = keys[r..].to_vec();
            rot.extend_from_slice(&keys[..r]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

impl TraceCoordinateSystem {
    pub fn new(generators: &[String], max_len: usize) -> Self {
        let mut keys: Vec<Vec<usize>> = Vec::new();
        let mut words = vec![Word::identity()];
        for w in Word::enumerate(generators.len(), max_len) {
            if w.is_identity() || !is_cyclically_reduced(&w) || is_proper_power(&w) {
                continue;
            }
            let key = canonical_key(&w);
            if keys.contains(&key) {
                continue;
            }
            if letters(&w).into_iter().map(letter_key).collect::<Vec<_>>() != key {
                continue;
            }
            keys.push(key);
            words.push(w);
        }
        TraceCoordinateSystem {
            generators: generators.to_vec(),
            words,
        }
    }

    /// All words, identity first.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Words that get a trace variable.
    pub fn trace_words(&self) -> &[Word] {
        &self.words[1..]
    }

    /// `t_<letters>` with inverse letters suffixed by `i`, e.g. `t_a_bi`.
    pub fn trace_var_names(&self) -> Vec<String> {
        self.trace_words()
            .iter()
            .map(|w| {
                let parts: Vec<String> = w
                    .letters()
                    .map(|(g, s)| {
                        let name = &self.generators[g];
                        if s > 0 {
                            name.clone()
                        } else {
                            format!("{name}i")
                        }
                    })
                    .collect();
                format!("t_{}", parts.join("_"))
            })
            .collect()
    }

    /// `delta_<generator>` for each generator.
    pub fn delta_var_names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| format!("delta_{g}"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> Vec<String> {
        ["a", "b", "c"][..k].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rank_two_length_two() {
        let tc = TraceCoordinateSystem::new(&names(2), 2);
        assert_eq!(tc.trace_var_names(), vec!["t_a", "t_b", "t_a_b", "t_a_bi"]);
        assert!(tc.words()[0].is_identity());
    }

    #[test]
    fn cyclic_length_one() {
        let tc = TraceCoordinateSystem::new(&names(1), 3);
        assert_eq!(tc.trace_var_names(), vec!["t_a"]);
        assert_eq!(tc.delta_var_names(), vec!["delta_a"]);
    }

    #[test]
    fn rank_two_length_three() {
        let tc = TraceCoordinateSystem::new(&names(2), 3);
        // length 3 adds a²b, a²b⁻¹, ab², ab⁻²
        let n = tc.trace_words().len();
        assert_eq!(n, 4 + 4);
        let mut keys: Vec<_> = tc.trace_words().iter().map(canonical_key).collect();
        keys.dedup();
        assert_eq!(keys.len(), n);
    }

    #[test]
    fn powers_and_non_cyclic_words_dropped() {
        assert!(is_proper_power(&Word::power_of(0, 2)));
        assert!(is_proper_power(&Word::from_runs([
            (0, 1),
            (1, 1),
            (0, 1),
            (1, 1)
        ])));
        assert!(!is_proper_power(&Word::from_runs([(0, 2), (1, 1)])));
        assert!(!is_cyclically_reduced(&Word::from_runs([
            (0, 1),
            (1, 1),
            (0, -1)
        ])));
    }
}
