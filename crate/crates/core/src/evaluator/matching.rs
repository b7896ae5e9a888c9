use std::fmt;

/// A noncrossing perfect matching of boundary points `0..k`, stored as a
/// partner table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PlanarMatching(Vec<u8>);

impl PlanarMatching {
    pub fn empty() -> Self {
        PlanarMatching(Vec::new())
    }

    /// Parses balanced parentheses, e.g. `(())()`.
    pub fn from_parens(s: &str) -> Option<Self> {
        let mut partner = vec![0u8; s.len()];
        let mut open = Vec::new();
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '(' => open.push(i),
                ')' => {
                    let j = open.pop()?;
                    partner[i] = j as u8;
                    partner[j] = i as u8;
                }
                _ => return None,
            }
        }
        open.is_empty().then_some(PlanarMatching(partner))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Whether `i` and `i+1` are matched to each other.
    pub fn is_turnback(&self, i: usize) -> bool {
        self.partner(i) == i + 1
    }

    /// Inserts a new pair at `i, i+1`.
    pub fn cup(&self, i: usize) -> Self {
        let shift = |p: u8| if (p as usize) < i { p } else { p + 2 };
        let mut out = Vec::with_capacity(self.0.len() + 2);
        for (idx, &p) in self.0.iter().enumerate() {
            if idx == i {
                out.push(i as u8 + 1);
                out.push(i as u8);
            }
            out.push(shift(p));
        }
        if i == self.0.len() {
            out.push(i as u8 + 1);
            out.push(i as u8);
        }
        PlanarMatching(out)
    }

    /// Joins points `i, i+1` and removes them. If they were matched to each
    /// other a closed loop is formed and `true` is returned.
    pub fn cap(&self, i: usize) -> (Self, bool) {
        let closes = self.is_turnback(i);
        let mut partner = self.0.clone();
        if !closes {
            let a = partner[i] as usize;
            let b = partner[i + 1] as usize;
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        let squeeze = |p: u8| if (p as usize) < i { p } else { p - 2 };
        let out = partner
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != i && idx != i + 1)
            .map(|(_, &p)| squeeze(p))
            .collect();
        (PlanarMatching(out), closes)
    }

    /// Applies the Temperley-Lieb generator `e_i` (cap then cup at `i`).
    pub fn hook(&self, i: usize) -> (Self, bool) {
        let (capped, closes) = self.cap(i);
        (capped.cup(i), closes)
    }

    pub fn is_noncrossing(&self) -> bool {
        let n = self.0.len();
        (0..n).all(|a| {
            let b = self.partner(a);
            b != a
                && self.partner(b) == a
                && (a.min(b) + 1..a.max(b)).all(|c| {
                    let d = self.partner(c);
                    d > a.min(b) && d < a.max(b)
                })
        })
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &p) in self.0.iter().enumerate() {
            f.write_str(if (p as usize) > i { "(" } else { ")" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarMatching({self})")
    }
}

pub fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Every noncrossing matching on `k` points.
pub fn all_matchings(k: usize) -> Vec<PlanarMatching> {
    if k % 2 == 1 {
        return Vec::new();
    }
    fn rec(prefix: &mut String, open: usize, remaining: usize, out: &mut Vec<PlanarMatching>) {
        if remaining == 0 {
            out.push(PlanarMatching::from_parens(prefix).unwrap());
            return;
        }
        if open < remaining {
            prefix.push('(');
            rec(prefix, open + 1, remaining - 1, out);
            prefix.pop();
        }
        if open > 0 {
            prefix.push(')');
            rec(prefix, open - 1, remaining - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut String::new(), 0, k, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_table() {
        let known = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, &c) in known.iter().enumerate() {
            assert_eq!(catalan(n), c);
            assert_eq!(all_matchings(2 * n).len() as u64, c);
        }
    }

    #[test]
    fn parens_round_trip() {
        for m in all_matchings(8) {
            assert!(m.is_noncrossing());
            assert_eq!(PlanarMatching::from_parens(&m.to_string()), Some(m));
        }
        assert_eq!(PlanarMatching::from_parens("(()"), None);
        assert_eq!(PlanarMatching::from_parens(")("), None);
    }

    #[test]
    fn operations_preserve_planarity() {
        for k in [2usize, 4, 6, 8] {
            for m in all_matchings(k) {
                for i in 0..=k {
                    assert!(m.cup(i).is_noncrossing());
                }
                for i in 0..k - 1 {
                    let (c, _) = m.cap(i);
                    assert!(c.is_noncrossing());
                    assert_eq!(c.len(), k - 2);
                    let (h, closes) = m.hook(i);
                    assert!(h.is_noncrossing() && h.is_turnback(i));
                    assert_eq!(closes, m.is_turnback(i));
                }
            }
        }
    }

    #[test]
    fn cap_joins_partners() {
        let m = PlanarMatching::from_parens("()()").unwrap();
        let (c, closes) = m.cap(1);
        assert!(!closes);
        assert_eq!(c.to_string(), "()");
        let (c, closes) = m.cap(0);
        assert!(closes);
        assert_eq!(c.to_string(), "()");
        assert_eq!(PlanarMatching::empty().cup(0).to_string(), "()");
        assert_eq!(m.cup(2).to_string(), "()()()");
        assert_eq!(m.cup(1).to_string(), "(())()");
    }
}
