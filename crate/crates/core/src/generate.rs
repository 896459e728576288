//! Seeded graph families for tests and benchmarks.
//!
//! Generated vertices are labeled `1..=n`. Randomness comes from SplitMix64
//! with unbiased rejection sampling for bounded draws, so a spec yields the
//! same edge list on every platform.

use std::fmt;
use std::str::FromStr;

use crate::error::GenError;
use crate::graph::Graph;

/// SplitMix64 (Steele, Lea, Flood). `below` rejects draws from the final
/// partial block so every residue is equally likely.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let span = 1u128 << 64;
        let limit = span - span % bound as u128;
        loop {
            let x = self.next_u64();
            if (x as u128) < limit {
                return x % bound;
            }
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    RandomTree,
    RandomGirth5,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::RandomTree => "tree",
            Family::RandomGirth5 => "girth5",
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "tree" | "random-tree" | "randomtree" => Ok(Family::RandomTree),
            "girth5" | "random-girth5" | "randomgirth5" => Ok(Family::RandomGirth5),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    /// Target edge count; used by `RandomGirth5` only.
    pub m: Option<usize>,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GenSpec { family, n, m: None, seed }
    }

    pub fn girth5(n: usize, m: usize, seed: u64) -> Self {
        GenSpec { family: Family::RandomGirth5, n, m: Some(m), seed }
    }
}

/// Parses `family n [m] seed`.
impl FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str, what: &str| t.parse::<u64>().map_err(|_| format!("bad {what} `{t}`"));
        let (family, n, m, seed) = match fields.as_slice() {
            [f, n, seed] => (f, num(n, "n")?, None, num(seed, "seed")?),
            [f, n, m, seed] => (f, num(n, "n")?, Some(num(m, "m")? as usize), num(seed, "seed")?),
            _ => return Err(format!("expected `family n [m] seed`, got `{s}`")),
        };
        Ok(GenSpec { family: family.parse()?, n: n as usize, m, seed })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "{} {} {} {}", self.family, self.n, m, self.seed),
            None => write!(f, "{} {} {}", self.family, self.n, self.seed),
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    let n = spec.n;
    let mut rng = SplitMix64::new(spec.seed);
    let pairs: Vec<(u32, u32)> = match spec.family {
        Family::Path => (1..n as u32).map(|i| (i - 1, i)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(GenError::InfeasibleSpec(format!("cycle needs n >= 3, got {n}")));
            }
            (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect()
        }
        Family::Star => (1..n as u32).map(|i| (0, i)).collect(),
        Family::RandomTree => (1..n as u32).map(|i| (rng.below(i as u64) as u32, i)).collect(),
        Family::RandomGirth5 => {
            let m = spec.m.ok_or_else(|| GenError::InfeasibleSpec("girth5 needs a target edge count".into()))?;
            girth5_edges(n, m, &mut rng)?
        }
    };
    Ok(Graph::from_indexed(n, &pairs).expect("generated edge lists are simple"))
}

/// Adds uniformly proposed non-edges whose endpoints are at distance >= 4,
/// which keeps every cycle at length >= 5.
fn girth5_edges(n: usize, m: usize, rng: &mut SplitMix64) -> Result<Vec<(u32, u32)>, GenError> {
    if m == 0 {
        return Ok(Vec::new());
    }
    if n < 2 {
        return Err(GenError::InfeasibleSpec(format!("{m} edges on {n} vertices")));
    }
    let budget = 100u64 * n as u64 * m as u64;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut pairs = Vec::with_capacity(m);
    let mut seen = vec![u64::MAX; n];
    let mut frontier = Vec::new();
    let mut grown = Vec::new();
    let mut proposals = 0u64;
    while pairs.len() < m {
        if proposals == budget {
            return Err(GenError::InfeasibleSpec(format!(
                "reached {} of {m} edges on {n} vertices within {budget} proposals",
                pairs.len()
            )));
        }
        proposals += 1;
        let u = rng.below(n as u64) as u32;
        let v = rng.below(n as u64) as u32;
        if u == v {
            continue;
        }
        // Depth-3 search from u; v must stay out of reach.
        let stamp = proposals;
        seen[u as usize] = stamp;
        frontier.clear();
        frontier.push(u);
        let mut near = false;
        'depth: for _ in 0..3 {
            grown.clear();
            for &x in &frontier {
                for &y in &adj[x as usize] {
                    if y == v {
                        near = true;
                        break 'depth;
                    }
                    if seen[y as usize] != stamp {
                        seen[y as usize] = stamp;
                        grown.push(y);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut grown);
        }
        if near {
            continue;
        }
        adj[u as usize].push(v);
        adj[v as usize].push(u);
        pairs.push((u, v));
    }
    Ok(pairs)
}
