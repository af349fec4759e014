//! JSON exports. Every export type deserializes back to an equal value, and
//! the map export can be rebuilt into a live `CompressionMap`.

use serde::{Deserialize, Serialize};

use crate::compression::{canonical_compression, CompressionMap, MapExport};
use crate::e6::E6Model;
use crate::e7::E7Model;
use crate::error::{Error, Result};
use crate::fp::{FpForm, FpSpace};
use crate::ideals::{IdealLattice, IdealsExport};
use crate::roots::{Family, Root, RootSystem, Stratum};

/// "E7", "e7", "D4", "a2", ...
pub fn parse_system(name: &str) -> Result<RootSystem> {
    let name = name.trim();
    let mut chars = name.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('D') => Family::D,
        Some('E') => Family::E,
        _ => return Err(Error::Parse(name.to_string())),
    };
    let rank = chars.as_str().parse().map_err(|_| Error::Parse(name.to_string()))?;
    RootSystem::build(family, rank)
}

/// The standard map for E7 (p = 2) and E6 (p = 3), otherwise the canonical
/// quotient modulo p.
pub fn compression_for(sys: &RootSystem, p: Option<u32>) -> Result<CompressionMap> {
    match (sys.family(), sys.rank(), p) {
        (Family::E, 7, None | Some(2)) => Ok(E7Model::standard().map().clone()),
        (Family::E, 6, None | Some(3)) => Ok(E6Model::standard().map().clone()),
        (_, _, Some(p)) => canonical_compression(sys, p),
        (_, _, None) => {
            // smallest prime factor of det A; det = 1 falls through to 2 and is rejected there
            let det = sys.cartan_det().unsigned_abs() as u32;
            let p = (2..=det).find(|q| det.is_multiple_of(*q)).unwrap_or(2);
            canonical_compression(sys, p)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsExport {
    pub system: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    /// Sorted by height, then coefficients; negatives first.
    pub roots: Vec<Root>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRow {
    pub s: Stratum,
    pub roots: Vec<String>,
    /// Images under the standard map, when there is one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub images: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataExport {
    pub system: String,
    pub strata: Vec<StratumRow>,
}

/// W(E6) acting on Γ₇⁺ by the reflections in α₁…α₆.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupExport {
    pub points: Vec<String>,
    pub generators: Vec<Vec<u8>>,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Export {
    Roots(RootsExport),
    Map(MapExport),
    Strata(StrataExport),
    Ideals(IdealsExport),
    Group(GroupExport),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportKind {
    Roots,
    Map,
    Strata,
    Ideals,
    Group,
}

impl std::str::FromStr for ExportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "roots" => Ok(Self::Roots),
            "map" => Ok(Self::Map),
            "strata" => Ok(Self::Strata),
            "ideals" => Ok(Self::Ideals),
            "group" => Ok(Self::Group),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

pub fn roots(sys: &RootSystem) -> RootsExport {
    RootsExport { system: sys.name(), rank: sys.rank(), cartan: sys.cartan().to_vec(), roots: sys.roots().to_vec() }
}

pub fn strata(sys: &RootSystem) -> Result<StrataExport> {
    if sys.family() != Family::E {
        return Err(Error::UnsupportedSystem { family: sys.family(), rank: sys.rank() });
    }
    let map = match sys.rank() {
        6 | 7 => Some(compression_for(sys, None)?),
        _ => None,
    };
    let strata = Stratum::up_to(sys.rank())
        .map(|s| {
            let roots = sys.stratum_roots(s)?;
            Ok(StratumRow {
                s,
                images: map.as_ref().map(|m| roots.iter().map(|r| m.apply(r).to_string()).collect()),
                roots: roots.iter().map(Root::to_string).collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(StrataExport { system: sys.name(), strata })
}

pub fn ideals(s: Stratum) -> Result<IdealsExport> {
    Ok(IdealLattice::new(s)?.export())
}

pub fn group() -> Result<GroupExport> {
    let m = E7Model::standard();
    let generators = (1..=6).map(|i| m.reflection_perm(&m.system().simple_root(i))).collect::<Result<_>>()?;
    Ok(GroupExport {
        points: m.gamma_plus(Stratum::new(7)?).iter().map(|x| x.to_string()).collect(),
        generators,
        order: m.weyl_e6_closure().order(),
    })
}

/// Builds one export. `s` only matters for ideals (default 7); `p` only for maps.
pub fn export(kind: ExportKind, sys: &RootSystem, p: Option<u32>, s: Option<Stratum>) -> Result<Export> {
    Ok(match kind {
        ExportKind::Roots => Export::Roots(roots(sys)),
        ExportKind::Map => Export::Map(compression_for(sys, p)?.to_export()),
        ExportKind::Strata => Export::Strata(strata(sys)?),
        ExportKind::Ideals => Export::Ideals(ideals(s.unwrap_or(Stratum::new(7)?))?),
        ExportKind::Group => Export::Group(group()?),
    })
}

impl Export {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl MapExport {
    /// Rebuilds the map from system, form and S, and checks the table.
    pub fn import(&self) -> Result<CompressionMap> {
        let sys = parse_system(&self.system)?;
        let gram: Vec<Vec<i64>> = self.gram.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let space = FpSpace::new(FpForm::from_gram(self.p, &gram)?, self.notation)?;
        let s = self.s.iter().map(|t| space.parse(t)).collect::<Result<Vec<_>>>()?;
        let map = CompressionMap::new(sys, space, s)?;
        if map.to_export() != *self {
            return Err(Error::InvalidImages("table does not match S".into()));
        }
        Ok(map)
    }
}
