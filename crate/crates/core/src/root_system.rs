//! Root systems of irreducible Cartan types, with the canonical orders used
//! for generators of the congruence kernel.
//!
//! Simple roots follow Bourbaki numbering. Roots are stored as coefficient
//! vectors over the simple roots and sorted by signed height; equal heights
//! are ordered so that a larger coefficient on an earlier simple root comes
//! first (so `a1` precedes `a2`, and `-a1` precedes `-a2`).

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidCartanType(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Gram matrix of the simple roots, scaled so all entries are integers.
    fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                (0..l).for_each(|i| g[i][i] = 2);
                (0..l - 1).for_each(|i| link(&mut g, i, i + 1, -1));
            }
            Family::B => {
                (0..l).for_each(|i| g[i][i] = 2);
                g[l - 1][l - 1] = 1;
                (0..l - 1).for_each(|i| link(&mut g, i, i + 1, -1));
            }
            Family::C => {
                (0..l).for_each(|i| g[i][i] = 2);
                g[l - 1][l - 1] = 4;
                (0..l - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                link(&mut g, l - 2, l - 1, -2);
            }
            Family::D => {
                (0..l).for_each(|i| g[i][i] = 2);
                (0..l - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                link(&mut g, l - 3, l - 1, -1);
            }
            Family::E => {
                (0..l).for_each(|i| g[i][i] = 2);
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                (2..l - 1).for_each(|i| link(&mut g, i, i + 1, -1));
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank_str = chars.as_str();
        if rank_str.is_empty() || !rank_str.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank = rank_str.parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

/// A root as its coefficient vector over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Self { coeffs }
    }

    pub fn simple(rank: usize, index: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[index] = 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scaled_add(&self, k: i32, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    /// `i * self + j * other`.
    pub fn combine(&self, i: i32, other: &Root, j: i32) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| i * a + j * b)
                .collect(),
        )
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.scaled_add(1, rhs)
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height().cmp(&other.height()).then_with(|| {
            let a = self.coeffs.iter().map(|c| c.abs());
            let b = other.coeffs.iter().map(|c| c.abs());
            b.cmp(a)
        })
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    NegRoot(Root),
    /// Index into the simple roots.
    Torus(usize),
    PosRoot(Root),
}

/// A generator of the ordered basis together with its global position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorLabel {
    pub position: usize,
    pub kind: GeneratorKind,
}

impl GeneratorLabel {
    pub fn root(&self) -> Option<&Root> {
        match &self.kind {
            GeneratorKind::NegRoot(r) | GeneratorKind::PosRoot(r) => Some(r),
            GeneratorKind::Torus(_) => None,
        }
    }

    pub fn simple_index(&self) -> Option<usize> {
        match self.kind {
            GeneratorKind::Torus(i) => Some(i),
            _ => None,
        }
    }

    /// `V(coeffs)` for root variables, `W<k>` (1-based) for torus variables.
    pub fn name(&self) -> String {
        match &self.kind {
            GeneratorKind::NegRoot(r) | GeneratorKind::PosRoot(r) => format!("V{r}"),
            GeneratorKind::Torus(i) => format!("W{}", i + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan_matrix: Vec<Vec<i32>>,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    positive: Vec<usize>,
    highest: usize,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let l = cartan_type.rank();
        let gram = cartan_type.gram_matrix();
        let cartan_matrix: Vec<Vec<i32>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| (2 * gram[i][j] / gram[j][j]) as i32)
                    .collect()
            })
            .collect();

        // Close the simple roots under the simple reflections.
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
        while let Some(r) = queue.pop_front() {
            if seen.contains_key(&r) {
                continue;
            }
            for j in 0..l {
                let pairing: i32 = (0..l).map(|i| r.coeffs[i] * cartan_matrix[i][j]).sum();
                let reflected = r.scaled_add(-pairing, &Root::simple(l, j));
                if !seen.contains_key(&reflected) {
                    queue.push_back(reflected);
                }
            }
            seen.insert(r, ());
        }
        let mut roots: Vec<Root> = seen.into_keys().collect();
        roots.sort();
        let index: HashMap<Root, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let positive: Vec<usize> = (0..roots.len())
            .filter(|&i| roots[i].is_positive())
            .collect();
        let highest = *positive.last().expect("nonempty root system");
        Self {
            cartan_type,
            cartan_matrix,
            gram,
            roots,
            index,
            positive,
            highest,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan_matrix
    }

    /// All roots in canonical order: `-highest` first, `highest` last.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        self.positive.iter().map(move |&i| &self.roots[i])
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        self.roots.iter().filter(|r| !r.is_positive())
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub(crate) fn check(&self, r: &Root) -> Result<()> {
        if r.coeffs.len() == self.rank() && self.contains(r) {
            Ok(())
        } else {
            Err(Error::NotARoot(r.coeffs.clone()))
        }
    }

    /// `a + b` when it is a root.
    pub fn sum_root(&self, a: &Root, b: &Root) -> Option<Root> {
        let s = a + b;
        self.contains(&s).then_some(s)
    }

    /// Invariant inner product in the integral scaling of the Gram matrix.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            for j in 0..l {
                s += a.coeffs[i] as i64 * self.gram[i][j] * b.coeffs[j] as i64;
            }
        }
        s
    }

    pub fn norm2(&self, a: &Root) -> i64 {
        self.inner(a, a)
    }

    /// `(u, v)` such that `g2 + i*g1` is a root exactly for `-v <= i <= u`.
    pub fn root_string(&self, g2: &Root, g1: &Root) -> Result<(u32, u32)> {
        self.check(g2)?;
        self.check(g1)?;
        if g2 == g1 || *g2 == -g1 {
            return Err(Error::ProportionalRoots(
                g2.coeffs.clone(),
                g1.coeffs.clone(),
            ));
        }
        let mut u = 0;
        while self.contains(&g2.scaled_add(u as i32 + 1, g1)) {
            u += 1;
        }
        let mut v = 0;
        while self.contains(&g2.scaled_add(-(v as i32) - 1, g1)) {
            v += 1;
        }
        Ok((u, v))
    }

    /// `g2(H_{g1})`, read off the root string through `g2` in direction `g1`.
    pub fn pairing(&self, g2: &Root, g1: &Root) -> Result<i32> {
        self.check(g2)?;
        self.check(g1)?;
        if g2 == g1 {
            return Ok(2);
        }
        if *g2 == -g1 {
            return Ok(-2);
        }
        let (u, v) = self.root_string(g2, g1)?;
        Ok(v as i32 - u as i32)
    }

    /// Generators in canonical order: negative roots by increasing signed
    /// height, then the torus generators, then positive roots by height.
    pub fn generator_order(&self) -> Vec<GeneratorLabel> {
        let negatives = self.negative_roots().cloned().map(GeneratorKind::NegRoot);
        let torus = (0..self.rank()).map(GeneratorKind::Torus);
        let positives = self.positive_roots().cloned().map(GeneratorKind::PosRoot);
        negatives
            .chain(torus)
            .chain(positives)
            .enumerate()
            .map(|(position, kind)| GeneratorLabel { position, kind })
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.roots.len() + self.rank()
    }
}

pub fn build_root_system(ct: CartanType) -> RootSystem {
    RootSystem::new(ct)
}
