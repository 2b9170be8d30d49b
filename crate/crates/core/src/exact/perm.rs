//! Permutations of {0, …, n−1}.

use crate::error::{Error, Result};

/// A bijection of `{0, …, n−1}`, stored as its value table.
///
/// The matrix convention is `P[j,k] = 1` iff `j = σ(k)`, so `(M P_σ)[j,k] =
/// M[j, σ(k)]` and `(P_σᵀ M)[j,k] = M[σ(j), k]`; see
/// [`ExponentMatrix::permuted`](crate::ExponentMatrix::permuted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its value table, rejecting non-bijections.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{map:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({a} {b}) out of range for size {n}"
            )));
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Ok(Self { map })
    }

    /// The multiplicative permutation `j ↦ m·j mod n`, defined when `m` is a
    /// unit of `Z_n`. Negative `m` is reduced modulo `n` first.
    pub fn multiplicative(n: usize, m: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("empty domain".into()));
        }
        let mr = m.rem_euclid(n as i64) as u64;
        if gcd(mr, n as u64) != 1 {
            return Err(Error::NonUnit {
                m: m.unsigned_abs(),
                n: n as u64,
            });
        }
        let map = (0..n).map(|j| (j as u64 * mr % n as u64) as usize).collect();
        Ok(Self { map })
    }

    /// Parses 0-indexed disjoint cycle notation such as `"(1 2)(3 4)"`.
    /// The empty string and `"()"` denote the identity.
    pub fn from_cycles(n: usize, input: &str) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let s = input.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self { map });
        }
        let err = |reason: &str| Error::CycleParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(err("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let elems: Vec<usize> = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| err("not an integer")))
                .collect::<Result<_>>()?;
            if elems.is_empty() {
                continue;
            }
            for &e in &elems {
                if e >= n {
                    return Err(err(&format!("index {e} out of range for size {n}")));
                }
                if moved[e] {
                    return Err(err(&format!("index {e} appears twice")));
                }
                moved[e] = true;
            }
            for w in 0..elems.len() {
                map[elems[w]] = elems[(w + 1) % elems.len()];
            }
        }
        Self::from_map(map)
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.map[j]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Self {
            map: (0..self.size()).map(|j| self.apply(other.apply(j))).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.size()];
        for (j, &v) in self.map.iter().enumerate() {
            map[v] = j;
        }
        Self { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(j, &v)| j == v)
    }

    pub fn fixes(&self, j: usize) -> bool {
        self.map[j] == j
    }

    /// True iff the permutation is an involution distinct from the identity.
    pub fn has_order_two(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.map.iter().enumerate().filter(|(j, &v)| *j == v).count()
    }

    /// Renders disjoint cycle notation; the identity renders as `"()"`.
    pub fn to_cycles_string(&self) -> String {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.map[cur];
            }
            out.push('(');
            out.push_str(
                &cyc.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// All permutations of `{0, …, n−1}` that fix 0, in lexicographic order.
    pub fn all_fixing_zero(n: usize) -> Vec<Self> {
        use itertools::Itertools;
        if n == 0 {
            return vec![];
        }
        (1..n)
            .permutations(n - 1)
            .map(|tail| {
                let mut map = Vec::with_capacity(n);
                map.push(0);
                map.extend(tail);
                Self { map }
            })
            .collect()
    }

    /// All permutations of `{0, …, n−1}`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(|map| Self { map })
            .collect()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicative_examples() {
        let p = Permutation::multiplicative(5, 2).unwrap();
        assert_eq!(p.as_slice(), &[0, 2, 4, 1, 3]);

        let p = Permutation::multiplicative(12, 5).unwrap();
        assert_eq!(p.as_slice(), &[0, 5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7]);

        assert_eq!(
            Permutation::multiplicative(6, 2).unwrap_err(),
            Error::NonUnit { m: 2, n: 6 }
        );
    }

    #[test]
    fn compose_inverse_roundtrip() {
        let a = Permutation::from_map(vec![2, 0, 1, 4, 3]).unwrap();
        let b = Permutation::from_map(vec![1, 2, 3, 4, 0]).unwrap();
        let ab = a.compose(&b);
        assert!(ab.compose(&ab.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn cycle_parse_and_render() {
        let p = Permutation::from_cycles(5, "(1 2)(3 4)").unwrap();
        assert_eq!(p.as_slice(), &[0, 2, 1, 4, 3]);
        assert_eq!(p.to_cycles_string(), "(1 2)(3 4)");
        assert!(Permutation::from_cycles(5, "").unwrap().is_identity());
        assert!(Permutation::from_cycles(3, "(0 5)").is_err());
        assert!(Permutation::from_cycles(4, "(0 1)(1 2)").is_err());
        let q = Permutation::from_cycles(4, "(0 1 2 3)").unwrap();
        assert_eq!(q.as_slice(), &[1, 2, 3, 0]);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_map(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_map(vec![0, 3]).is_err());
    }

    #[test]
    fn order_two_detection() {
        assert!(Permutation::from_cycles(5, "(1 2)(3 4)").unwrap().has_order_two());
        assert!(!Permutation::identity(5).has_order_two());
        assert!(!Permutation::from_cycles(5, "(1 2 3)").unwrap().has_order_two());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all_fixing_zero(5).len(), 24);
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::all_fixing_zero(5).iter().all(|p| p.fixes(0)));
    }
}
