use std::cmp::Ordering;

/// Exponent vector with trailing zeros trimmed, so a monomial does not
/// depend on the size of the ambient ring. The derived `Ord` is lex with
/// variable 0 largest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Monomial::from_exponents(v)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of variable `i` (0 past the stored length).
    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// One past the largest variable index that occurs.
    pub fn var_bound(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (x, y) in v.iter_mut().zip(&short.0) {
            *x += y;
        }
        Monomial(v)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut v = self.0.clone();
        for (x, y) in v.iter_mut().zip(&other.0) {
            *x -= y;
        }
        Some(Monomial::from_exponents(v))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial((0..n).map(|i| self.exp(i).max(other.exp(i))).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|x| x * e).collect())
    }

    /// True if any of the variables `0..k` occurs.
    pub fn involves_prefix(&self, k: usize) -> bool {
        self.0.iter().take(k).any(|&e| e > 0)
    }

    /// Drops variables `0..k` (which must not occur) and renumbers the rest.
    pub fn shift_down(&self, k: usize) -> Monomial {
        debug_assert!(!self.involves_prefix(k));
        Monomial(self.0.iter().skip(k).copied().collect())
    }

    /// Renumbers the variables up by `k`.
    pub fn shift_up(&self, k: usize) -> Monomial {
        if self.is_one() {
            return Monomial::one();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        Monomial(v)
    }
}

/// Monomial orders. `Block` compares the first `split` variables with `first`
/// and breaks ties on the remaining variables with `second`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Grevlex-grevlex block order eliminating the first `k` variables.
    pub fn elimination(k: usize) -> Self {
        MonomialOrder::Block {
            split: k,
            first: Box::new(MonomialOrder::GrevLex),
            second: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.0.len().max(b.0.len());
        self.cmp_range(a, b, 0, n)
    }

    fn cmp_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        match self {
            MonomialOrder::Lex => (lo..hi)
                .map(|i| a.exp(i).cmp(&b.exp(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            MonomialOrder::GrevLex => {
                let da: u32 = (lo..hi).map(|i| a.exp(i)).sum();
                let db: u32 = (lo..hi).map(|i| b.exp(i)).sum();
                da.cmp(&db).then_with(|| {
                    (lo..hi)
                        .rev()
                        .map(|i| b.exp(i).cmp(&a.exp(i)))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let mid = (lo + split).min(hi);
                first
                    .cmp_range(a, b, lo, mid)
                    .then_with(|| second.cmp_range(a, b, mid, hi))
            }
        }
    }

    /// Whether a Gröbner basis under this order restricts to one of the
    /// elimination ideal for the first `k` variables.
    pub fn eliminates(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::GrevLex => false,
            MonomialOrder::Block { split, first, .. } => {
                k == *split || (k < *split && first.eliminates(k))
            }
        }
    }

    /// The order induced on the variables after dropping the first `k`.
    pub fn tail(&self, k: usize) -> MonomialOrder {
        match self {
            MonomialOrder::Block {
                split,
                first,
                second,
            } if k >= *split => second.tail(k - split),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => MonomialOrder::Block {
                split: split - k,
                first: Box::new(first.tail(k)),
                second: second.clone(),
            },
            other => other.clone(),
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => write!(f, "block({split}; {first}, {second})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn trimming_makes_ambient_size_irrelevant() {
        assert_eq!(m(&[1, 0, 0]), m(&[1]));
        assert_eq!(m(&[0, 0]), Monomial::one());
        assert_eq!(m(&[2, 1]).div(&m(&[0, 1])), Some(m(&[2])));
        assert_eq!(m(&[1]).div(&m(&[0, 1])), None);
    }

    #[test]
    fn lex_and_grevlex() {
        use Ordering::*;
        let lex = MonomialOrder::Lex;
        let grl = MonomialOrder::GrevLex;
        // x > y^5 in lex, y^5 > x in grevlex
        assert_eq!(lex.cmp(&m(&[1]), &m(&[0, 5])), Greater);
        assert_eq!(grl.cmp(&m(&[1]), &m(&[0, 5])), Less);
        // x*z vs y^2 in grevlex: equal degree, last variable exponent decides
        assert_eq!(grl.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Greater);
        assert_eq!(lex.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Less);
        // derived Ord is lex
        assert_eq!(m(&[0, 2, 0]).cmp(&m(&[1, 0, 1])), Less);
    }

    #[test]
    fn block_order_eliminates() {
        let o = MonomialOrder::elimination(1);
        // anything with x beats anything without it
        assert_eq!(o.cmp(&m(&[1]), &m(&[0, 9, 9])), Ordering::Greater);
        assert!(o.eliminates(1));
        assert!(!o.eliminates(2));
        assert!(!MonomialOrder::GrevLex.eliminates(1));
        assert!(MonomialOrder::Lex.eliminates(3));
        assert_eq!(o.tail(1), MonomialOrder::GrevLex);
    }
}
