//! Necessary conditions on a pair `(g, h)` with `G/H` seven-dimensional and
//! `h` a subalgebra of `g2`, and the exhaustive candidate enumeration.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{g2_subgroup_table, AlgebraMeta};

/// Compact simple algebras of dimension at most 21.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SimpleFactor {
    Su2,
    Su3,
    So5,
    G2,
    Su4,
    So7,
    Sp3,
}

pub const SIMPLE_INVENTORY: [SimpleFactor; 7] = [
    SimpleFactor::Su2,
    SimpleFactor::Su3,
    SimpleFactor::So5,
    SimpleFactor::G2,
    SimpleFactor::Su4,
    SimpleFactor::So7,
    SimpleFactor::Sp3,
];

impl SimpleFactor {
    pub fn dim(self) -> usize {
        match self {
            SimpleFactor::Su2 => 3,
            SimpleFactor::Su3 => 8,
            SimpleFactor::So5 => 10,
            SimpleFactor::G2 => 14,
            SimpleFactor::Su4 => 15,
            SimpleFactor::So7 | SimpleFactor::Sp3 => 21,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            SimpleFactor::Su2 => 1,
            SimpleFactor::Su3 | SimpleFactor::So5 | SimpleFactor::G2 => 2,
            SimpleFactor::Su4 | SimpleFactor::So7 | SimpleFactor::Sp3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SimpleFactor::Su2 => "su(2)",
            SimpleFactor::Su3 => "su(3)",
            SimpleFactor::So5 => "so(5)",
            SimpleFactor::G2 => "g2",
            SimpleFactor::Su4 => "su(4)",
            SimpleFactor::So7 => "so(7)",
            SimpleFactor::Sp3 => "sp(3)",
        }
    }

    /// Simple algebras of the inventory containing a copy of `self`, when that
    /// is restrictive (`su(3)` and `g2`); `None` for factors that embed widely.
    pub fn hosts(self) -> Option<&'static [SimpleFactor]> {
        use SimpleFactor::*;
        match self {
            Su3 => Some(&[Su3, G2, Su4, So7, Sp3]),
            G2 => Some(&[G2, So7]),
            _ => None,
        }
    }
}

/// `⊕ simple ⊕ u(1)^abelian`, simple factors sorted by decreasing dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompactAlgebra {
    pub simple: Vec<SimpleFactor>,
    pub abelian: usize,
}

impl CompactAlgebra {
    pub fn new(mut simple: Vec<SimpleFactor>, abelian: usize) -> Self {
        simple.sort_by(|a, b| b.dim().cmp(&a.dim()).then(b.cmp(a)));
        CompactAlgebra { simple, abelian }
    }

    pub fn dim(&self) -> usize {
        self.simple.iter().map(|s| s.dim()).sum::<usize>() + self.abelian
    }

    pub fn rank(&self) -> usize {
        self.simple.iter().map(|s| s.rank()).sum::<usize>() + self.abelian
    }

    pub fn meta(&self) -> AlgebraMeta {
        AlgebraMeta { name: self.to_string(), dim: self.dim(), rank: self.rank(), center_dim: self.abelian }
    }
}

impl fmt::Display for CompactAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.simple.len() {
            let s = self.simple[i];
            let run = self.simple[i..].iter().take_while(|t| **t == s).count();
            parts.push(if run == 1 { s.name().to_string() } else { format!("{run}{}", s.name()) });
            i += run;
        }
        match self.abelian {
            0 => {}
            1 => parts.push("u(1)".into()),
            k => parts.push(format!("{k}u(1)")),
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// `rank g ≢ rank h (mod 2)`: the roots of `g` not in `h` come in pairs and
/// `m` has odd dimension, so `m` contains an odd number of `h`-trivial directions
/// coming from the Cartan subalgebra.
pub fn rank_parity_filter(g: &AlgebraMeta, h: &AlgebraMeta) -> bool {
    (g.rank + h.rank) % 2 == 1
}

/// The center of `g` injects into the trivial `h`-submodule of `m`, which inside
/// `Im(O)` is at most 3-dimensional for a circle and 1-dimensional for a rank-2 `h`.
pub fn center_bound_filter(h_rank: usize, z_dim: usize) -> Result<bool> {
    match h_rank {
        0 => Ok(true),
        1 => Ok(z_dim <= 3),
        2 => Ok(z_dim <= 1),
        r => Err(Error::InvalidInput(format!("an isotropy algebra inside g2 has rank at most 2, got {r}"))),
    }
}

/// Abstract isotropy algebra for a subalgebra dimension of `g2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropyType {
    pub meta: AlgebraMeta,
    /// Non-abelian simple factors with a restricted set of hosts.
    pub simple: Vec<SimpleFactor>,
    /// Largest trivial submodule of `Im(O)` over the table rows of this dimension.
    pub max_trivial: usize,
}

pub const ISOTROPY_DIMS: [usize; 8] = [0, 1, 2, 3, 4, 6, 8, 14];

pub fn isotropy_type(dim_h: usize) -> Result<IsotropyType> {
    let (name, rank, center, simple): (&str, usize, usize, Vec<SimpleFactor>) = match dim_h {
        0 => ("{e}", 0, 0, vec![]),
        1 => ("u(1)", 1, 1, vec![]),
        2 => ("2u(1)", 2, 2, vec![]),
        3 => ("su(2)", 1, 0, vec![SimpleFactor::Su2]),
        4 => ("su(2)+u(1)", 2, 1, vec![SimpleFactor::Su2]),
        6 => ("2su(2)", 2, 0, vec![SimpleFactor::Su2, SimpleFactor::Su2]),
        8 => ("su(3)", 2, 0, vec![SimpleFactor::Su3]),
        14 => ("g2", 2, 0, vec![SimpleFactor::G2]),
        d => {
            return Err(Error::InvalidInput(format!(
                "{d} is not the dimension of a subalgebra of g2 (expected one of {ISOTROPY_DIMS:?})"
            )))
        }
    };
    let max_trivial = g2_subgroup_table().iter().filter(|e| e.dim == dim_h).map(|e| e.max_trivial).max().unwrap_or(0);
    Ok(IsotropyType {
        meta: AlgebraMeta { name: name.into(), dim: dim_h, rank, center_dim: center },
        simple,
        max_trivial,
    })
}

pub const FILTER_NAMES: [&str; 5] = ["dimension", "rank_parity", "center_bound", "weight_match", "embedding"];

/// Outcome of the filters for one candidate `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateFilterResult {
    pub g_name: String,
    pub h_name: String,
    pub g: AlgebraMeta,
    pub passed: Vec<String>,
    pub failed: Option<String>,
    /// False when every possible image of a simple factor of `h` is a whole simple ideal of `g`.
    pub almost_effective: bool,
    pub status: String,
}

impl CandidateFilterResult {
    pub fn survives(&self) -> bool {
        self.failed.is_none()
    }
}

fn apply_filters(g: &CompactAlgebra, h: &IsotropyType, dim_h: usize) -> (Vec<String>, Option<String>) {
    let gm = g.meta();
    let checks: [(&str, bool); 5] = [
        ("dimension", gm.dim == dim_h + 7),
        ("rank_parity", rank_parity_filter(&gm, &h.meta)),
        ("center_bound", center_bound_filter(h.meta.rank, gm.center_dim).unwrap_or(false)),
        ("weight_match", gm.center_dim <= h.max_trivial),
        (
            "embedding",
            h.simple.iter().all(|f| match f.hosts() {
                Some(hosts) => g.simple.iter().any(|s| hosts.contains(s)),
                None => true,
            }),
        ),
    ];
    let mut passed = Vec::new();
    for (name, ok) in checks {
        if !ok {
            return (passed, Some(name.into()));
        }
        passed.push(name.into());
    }
    (passed, None)
}

fn almost_effective(g: &CompactAlgebra, h: &IsotropyType) -> bool {
    h.simple.iter().all(|f| match f.hosts() {
        Some(hosts) => g.simple.iter().any(|s| hosts.contains(s) && s != f),
        None => true,
    })
}

fn partitions(budget: usize, from: usize, prefix: &mut Vec<SimpleFactor>, out: &mut Vec<Vec<SimpleFactor>>) {
    out.push(prefix.clone());
    for (i, f) in SIMPLE_INVENTORY.iter().enumerate().skip(from) {
        if f.dim() <= budget {
            prefix.push(*f);
            partitions(budget - f.dim(), i, prefix, out);
            prefix.pop();
        }
    }
}

/// Every compact `g` of dimension `dim_h + 7` with the filters applied in
/// order; the first failing filter is recorded.
pub fn enumerate_candidates(dim_h: usize) -> Result<Vec<CandidateFilterResult>> {
    let h = isotropy_type(dim_h)?;
    let total = dim_h + 7;
    let mut shapes = Vec::new();
    partitions(total, 0, &mut Vec::new(), &mut shapes);
    let mut algebras: Vec<CompactAlgebra> = shapes
        .into_iter()
        .map(|s| {
            let used: usize = s.iter().map(|f| f.dim()).sum();
            CompactAlgebra::new(s, total - used)
        })
        .collect();
    algebras.sort();
    algebras.dedup();
    algebras.sort_by(|a, b| b.simple.iter().map(|s| s.dim()).cmp(a.simple.iter().map(|s| s.dim())).then(a.cmp(b)));
    Ok(algebras
        .iter()
        .map(|g| {
            let (passed, failed) = apply_filters(g, &h, dim_h);
            let effective = almost_effective(g, &h);
            let status = match (&failed, effective) {
                (Some(f), _) => format!("rejected by {f}"),
                (None, true) => "survivor".into(),
                (None, false) => "survivor, not almost effective".into(),
            };
            CandidateFilterResult {
                g_name: g.to_string(),
                h_name: h.meta.name.clone(),
                g: g.meta(),
                passed,
                failed,
                almost_effective: effective,
                status,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta(dim: usize, rank: usize) -> AlgebraMeta {
        AlgebraMeta { name: String::new(), dim, rank, center_dim: 0 }
    }

    #[test]
    fn parity_examples() {
        assert!(rank_parity_filter(&meta(9, 3), &meta(2, 2)));
        assert!(rank_parity_filter(&meta(8, 2), &meta(1, 1)));
        assert!(!rank_parity_filter(&meta(10, 2), &meta(2, 2)));
    }

    #[test]
    fn center_bounds() {
        assert!(!center_bound_filter(1, 5).unwrap());
        assert!(center_bound_filter(2, 1).unwrap());
        assert!(!center_bound_filter(2, 2).unwrap());
        assert!(center_bound_filter(0, 40).unwrap());
        assert!(center_bound_filter(3, 0).is_err());
    }

    #[test]
    fn names() {
        let g = CompactAlgebra::new(vec![SimpleFactor::Su2, SimpleFactor::So5, SimpleFactor::Su2], 3);
        assert_eq!(g.to_string(), "so(5)+2su(2)+3u(1)");
        assert_eq!(g.dim(), 19);
        assert_eq!(CompactAlgebra::new(vec![], 7).to_string(), "7u(1)");
    }

    fn survivors(d: usize) -> Vec<String> {
        enumerate_candidates(d).unwrap().into_iter().filter(|c| c.survives()).map(|c| c.g_name).collect()
    }

    #[test]
    fn trivial_isotropy_survivors() {
        assert_eq!(survivors(0), vec!["2su(2)+u(1)", "su(2)+4u(1)", "7u(1)"]);
    }

    #[test]
    fn survivors_by_dimension() {
        assert_eq!(survivors(1), vec!["su(3)", "2su(2)+2u(1)"]);
        assert_eq!(survivors(2), vec!["su(3)+u(1)", "3su(2)"]);
        assert_eq!(survivors(3), vec!["so(5)", "su(3)+2u(1)", "3su(2)+u(1)"]);
        assert_eq!(survivors(4), vec!["so(5)+u(1)", "su(3)+su(2)"]);
        assert_eq!(survivors(6), vec!["so(5)+su(2)"]);
        assert_eq!(survivors(8), vec!["su(4)", "g2+u(1)", "su(3)+2su(2)+u(1)"]);
        assert_eq!(survivors(14), vec!["so(7)"]);
    }

    #[test]
    fn ideal_inside_isotropy_is_flagged() {
        let c = enumerate_candidates(8).unwrap();
        let bad = c.iter().find(|c| c.g_name == "su(3)+2su(2)+u(1)").unwrap();
        assert!(bad.survives() && !bad.almost_effective);
        assert!(c.iter().find(|c| c.g_name == "su(4)").unwrap().almost_effective);
    }

    #[test]
    fn bad_dimension() {
        assert!(enumerate_candidates(5).is_err());
    }
}
