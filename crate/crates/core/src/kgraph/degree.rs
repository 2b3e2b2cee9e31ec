//! Multidegrees in `N^k` and grades in `Z^k`.

use std::fmt;

/// An element of `N^k`. Coordinate `i` counts color `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(coords: Vec<u32>) -> Self {
        MultiDegree(coords)
    }

    pub fn zero(k: usize) -> Self {
        MultiDegree(vec![0; k])
    }

    /// The generator `e_color` (colors are 1-based).
    pub fn unit(k: usize, color: usize) -> Self {
        let mut d = Self::zero(k);
        d.0[color - 1] = 1;
        d
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Coordinate of a 1-based color.
    pub fn get(&self, color: usize) -> u32 {
        self.0[color - 1]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.k(), other.k());
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn bump(&mut self, color: usize) {
        self.0[color - 1] += 1;
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        MultiDegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self <= other` componentwise.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - other`, defined when `other <= self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if !other.dominated_by(self) {
            return None;
        }
        Some(MultiDegree(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Signed difference `self - other` as a grade.
    pub fn grade_minus(&self, other: &Self) -> Grade {
        Grade(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| i64::from(*a) - i64::from(*b))
                .collect(),
        )
    }

    /// The colors in canonical block order, one entry per unit of degree.
    pub fn color_sequence(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i + 1, n as usize))
            .collect()
    }

    /// Every multidegree of the given length whose total is at most `max_total`.
    pub fn all_up_to(k: usize, max_total: u32) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; k];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if i == cur.len() {
                out.push(MultiDegree(cur.clone()));
                return;
            }
            for n in 0..=left {
                cur[i] = n;
                rec(i + 1, left - n, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, max_total, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of `Z^k`; the gauge grade `d(mu) - d(nu)` of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(pub Vec<i64>);

impl Grade {
    pub fn zero(k: usize) -> Self {
        Grade(vec![0; k])
    }

    pub fn add(&self, other: &Self) -> Self {
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `sum |g_i|`
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|g| g.unsigned_abs()).sum()
    }

    pub fn from_degree(d: &MultiDegree) -> Self {
        Grade(d.coords().iter().map(|&c| i64::from(c)).collect())
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
