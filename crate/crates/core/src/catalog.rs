//! Data-driven catalog of irreducible symmetric spaces of noncompact type
//! and product-space assembly.
//!
//! Each catalog row records a named family member by its restricted root
//! type, the multiplicity of each root length class, and the dimension of
//! the space. The loader independently recomputes `dim = rank + sum of
//! multiplicities over positive roots` and rejects rows failing it, which
//! catches transcription errors in the data file.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::rootsys::{build_root_system, Family, LengthClass, RootSystem, RootSystemType};
use crate::scalar::Scalar;

pub const CATALOG_DATA: &str = include_str!("../data/catalog.dat");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog line {line}: {reason}")]
    BadRow { line: usize, reason: String },
    #[error("unknown space '{name}'; known names: {known}")]
    UnknownName { name: String, known: String },
    #[error("no catalog entry {name}({params:?}); shipped entries: {available}")]
    UnknownParams {
        name: String,
        params: Vec<i64>,
        available: String,
    },
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("({m_simple}, {m_double}) is not the multiplicity pair of a rank-one symmetric space")]
    NotRankOne { m_simple: u32, m_double: u32 },
    #[error("bad raw descriptor: {0}")]
    BadRawDescriptor(String),
}

/// Multiplicity per root length class; 0 means the class is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mult {
    pub short: u32,
    pub long: u32,
    pub double: u32,
}

impl Mult {
    pub fn of_class(&self, class: LengthClass) -> u32 {
        match class {
            LengthClass::Short => self.short,
            LengthClass::Long => self.long,
            LengthClass::Double => self.double,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub name: String,
    pub params: Vec<i64>,
    pub root_type: RootSystemType,
    pub mult: Mult,
    pub dim: usize,
}

#[derive(Debug)]
pub struct Catalog {
    rows: Vec<CatalogRow>,
    /// Distinct names with identical (root type, multiplicities); reported,
    /// not rejected, since the catalog keys congruence on names.
    pub warnings: Vec<String>,
}

impl Catalog {
    /// The catalog bundled with the crate.
    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(CATALOG_DATA).expect("bundled catalog is valid"))
    }

    /// Parses catalog text: one `name | params | root | m_short | m_long |
    /// m_double | dim` record per line, `#` comments, blank lines ignored.
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut rows: Vec<CatalogRow> = Vec::new();
        let mut types: HashMap<RootSystemType, ClassCounts> = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let bad = |reason: String| CatalogError::BadRow { line, reason };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split('|').map(str::trim).collect();
            if fields.len() != 7 {
                return Err(bad(format!("expected 7 fields, got {}", fields.len())));
            }
            let name = fields[0].to_string();
            let params: Vec<i64> = if fields[1].is_empty() {
                Vec::new()
            } else {
                fields[1]
                    .split(',')
                    .map(|p| p.trim().parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| bad(format!("bad params: {e}")))?
            };
            let root_type = parse_root_type(fields[2]).map_err(|e| bad(e))?;
            let canonical = RootSystemType::new(root_type.family, root_type.rank)
                .map_err(|e| bad(e.to_string()))?;
            if canonical != root_type {
                return Err(bad(format!(
                    "non-canonical root type {root_type}; write {canonical}"
                )));
            }
            let m: Vec<u32> = fields[3..6]
                .iter()
                .map(|f| f.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|e| bad(format!("bad multiplicity: {e}")))?;
            let mult = Mult {
                short: m[0],
                long: m[1],
                double: m[2],
            };
            let dim: usize = fields[6]
                .parse()
                .map_err(|e| bad(format!("bad dimension: {e}")))?;

            let counts = types
                .entry(root_type)
                .or_insert_with(|| ClassCounts::of(root_type));
            counts.validate_mult(&mult).map_err(bad)?;
            let expect = root_type.rank + counts.weighted_sum(&mult);
            if expect != dim {
                return Err(bad(format!(
                    "dimension identity failed: rank + sum of multiplicities = {expect}, row says {dim}"
                )));
            }
            if rows.iter().any(|r| r.name == name && r.params == params) {
                return Err(bad(format!("duplicate entry {name}({params:?})")));
            }
            rows.push(CatalogRow {
                name,
                params,
                root_type,
                mult,
                dim,
            });
        }

        let mut warnings = Vec::new();
        for (i, a) in rows.iter().enumerate() {
            for b in rows.iter().skip(i + 1) {
                if a.name != b.name && a.root_type == b.root_type && a.mult == b.mult {
                    warnings.push(format!(
                        "{} and {} share root data ({}, m=({},{},{})); congruence keys on names",
                        display_name(&a.name, &a.params),
                        display_name(&b.name, &b.params),
                        a.root_type,
                        a.mult.short,
                        a.mult.long,
                        a.mult.double
                    ));
                }
            }
        }
        Ok(Catalog { rows, warnings })
    }

    pub fn rows(&self) -> &[CatalogRow] {
        &self.rows
    }

    pub fn known_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for r in &self.rows {
            if !names.contains(&r.name) {
                names.push(r.name.clone());
            }
        }
        names
    }

    fn entries_summary(&self, name: &str) -> String {
        let params: Vec<String> = self
            .rows
            .iter()
            .filter(|r| r.name == name)
            .map(|r| {
                let ps: Vec<String> = r.params.iter().map(|p| p.to_string()).collect();
                format!("({})", ps.join(","))
            })
            .collect();
        format!("{name} {}", params.join(" "))
    }

    pub fn lookup<S: Scalar>(
        &self,
        name: &str,
        params: &[i64],
    ) -> Result<IrreducibleSpace<S>, CatalogError> {
        let known: Vec<&CatalogRow> = self.rows.iter().filter(|r| r.name == name).collect();
        if known.is_empty() {
            return Err(CatalogError::UnknownName {
                name: name.to_string(),
                known: self.known_names().join(", "),
            });
        }
        let row = known
            .iter()
            .find(|r| r.params == params)
            .ok_or_else(|| CatalogError::UnknownParams {
                name: name.to_string(),
                params: params.to_vec(),
                available: self.entries_summary(name),
            })?;
        Ok(IrreducibleSpace {
            name: row.name.clone(),
            params: row.params.clone(),
            rs: build_root_system(row.root_type),
            mult: row.mult,
            dim: row.dim,
        })
    }
}

struct ClassCounts {
    short_pos: usize,
    long_pos: usize,
    double_pos: usize,
}

impl ClassCounts {
    fn of(t: RootSystemType) -> Self {
        // Counting via the actual system keeps this table-free.
        let rs = build_root_system::<num_rational::Rational64>(t);
        let mut c = ClassCounts {
            short_pos: 0,
            long_pos: 0,
            double_pos: 0,
        };
        for i in 0..rs.n_positive() {
            match rs.length_class(i) {
                LengthClass::Short => c.short_pos += 1,
                LengthClass::Long => c.long_pos += 1,
                LengthClass::Double => c.double_pos += 1,
            }
        }
        c
    }

    fn validate_mult(&self, m: &Mult) -> Result<(), String> {
        if m.short == 0 {
            return Err("m_short must be positive".into());
        }
        if (self.long_pos > 0) != (m.long > 0) {
            return Err(format!(
                "m_long must be {} for this type",
                if self.long_pos > 0 { "positive" } else { "zero" }
            ));
        }
        if (self.double_pos > 0) != (m.double > 0) {
            return Err(format!(
                "m_double must be {} for this type",
                if self.double_pos > 0 { "positive" } else { "zero" }
            ));
        }
        Ok(())
    }

    fn weighted_sum(&self, m: &Mult) -> usize {
        self.short_pos * m.short as usize
            + self.long_pos * m.long as usize
            + self.double_pos * m.double as usize
    }
}

fn parse_root_type(s: &str) -> Result<RootSystemType, String> {
    let (family, rank_str) = if let Some(rest) = s.strip_prefix("BC") {
        (Family::BC, rest)
    } else {
        let mut chars = s.chars();
        let f = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            other => return Err(format!("unknown root family in '{s}' ({other:?})")),
        };
        (f, chars.as_str())
    };
    let rank: usize = rank_str
        .parse()
        .map_err(|_| format!("bad rank in root type '{s}'"))?;
    RootSystemType::new(family, rank).map_err(|e| e.to_string())
}

fn display_name(name: &str, params: &[i64]) -> String {
    if params.len() == 1 && matches!(name, "RH" | "CH" | "HH" | "OH") {
        format!("{}^{}", name, params[0])
    } else if params.is_empty() {
        name.to_string()
    } else {
        let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        format!("{}({})", name, ps.join(","))
    }
}

/// One irreducible factor: a catalog entry (or raw descriptor) together with
/// its built restricted root system.
#[derive(Debug, Clone)]
pub struct IrreducibleSpace<S> {
    pub name: String,
    pub params: Vec<i64>,
    pub rs: RootSystem<S>,
    pub mult: Mult,
    pub dim: usize,
}

impl<S: Scalar> IrreducibleSpace<S> {
    /// A factor given directly by root type and multiplicities, bypassing
    /// the catalog. The dimension is defined by the Iwasawa identity.
    pub fn from_raw(t: RootSystemType, m: &[u32]) -> Result<Self, CatalogError> {
        let rs = build_root_system::<S>(t);
        let mut short_pos = 0;
        let mut long_pos = 0;
        let mut double_pos = 0;
        for i in 0..rs.n_positive() {
            match rs.length_class(i) {
                LengthClass::Short => short_pos += 1,
                LengthClass::Long => long_pos += 1,
                LengthClass::Double => double_pos += 1,
            }
        }
        let n_classes = 1 + usize::from(long_pos > 0) + usize::from(double_pos > 0);
        let mult = match (m.len(), long_pos > 0, double_pos > 0) {
            (1, _, _) => Mult {
                short: m[0],
                long: if long_pos > 0 { m[0] } else { 0 },
                double: if double_pos > 0 { m[0] } else { 0 },
            },
            (2, true, false) => Mult {
                short: m[0],
                long: m[1],
                double: 0,
            },
            (2, false, true) => Mult {
                short: m[0],
                long: 0,
                double: m[1],
            },
            (3, true, true) => Mult {
                short: m[0],
                long: m[1],
                double: m[2],
            },
            _ => {
                return Err(CatalogError::BadRawDescriptor(format!(
                    "{t} has {n_classes} length class(es); got {} multiplicities",
                    m.len()
                )))
            }
        };
        if mult.short == 0 || (long_pos > 0 && mult.long == 0) || (double_pos > 0 && mult.double == 0)
        {
            return Err(CatalogError::BadRawDescriptor(
                "multiplicities must be positive".into(),
            ));
        }
        let dim = t.rank
            + short_pos * mult.short as usize
            + long_pos * mult.long as usize
            + double_pos * mult.double as usize;
        let mut ms = vec![mult.short];
        if long_pos > 0 {
            ms.push(mult.long);
        }
        if double_pos > 0 {
            ms.push(mult.double);
        }
        let name = format!(
            "root({t}; m={})",
            ms.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(IrreducibleSpace {
            name,
            params: Vec::new(),
            rs,
            mult,
            dim,
        })
    }

    pub fn display_name(&self) -> String {
        if self.name.starts_with("root(") {
            self.name.clone()
        } else {
            display_name(&self.name, &self.params)
        }
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Is every multiplicity 1? These factors admit the split Chevalley model.
    pub fn is_split(&self) -> bool {
        let mut ok = self.mult.short == 1;
        for i in 0..self.rs.n_positive() {
            ok = ok && self.mult.of_class(self.rs.length_class(i)) == 1;
        }
        ok
    }

    pub fn dim_n(&self) -> usize {
        self.dim - self.rank()
    }
}

/// An ordered product of irreducible factors with a global simple-root
/// index: factor order first, Bourbaki order within each factor.
#[derive(Debug, Clone)]
pub struct SymmetricSpace<S> {
    factors: Vec<IrreducibleSpace<S>>,
    offsets: Vec<usize>,
    rank: usize,
    dim: usize,
    /// Factors with distinct names but identical root data, if any.
    pub warnings: Vec<String>,
}

/// Assembles a product space. The global simple-root index runs over the
/// factors in order.
pub fn product<S: Scalar>(
    factors: Vec<IrreducibleSpace<S>>,
) -> Result<SymmetricSpace<S>, CatalogError> {
    if factors.is_empty() {
        return Err(CatalogError::EmptyProduct);
    }
    let mut offsets = Vec::with_capacity(factors.len());
    let mut rank = 0;
    let mut dim = 0;
    for f in &factors {
        offsets.push(rank);
        rank += f.rank();
        dim += f.dim;
    }
    let mut warnings = Vec::new();
    for i in 0..factors.len() {
        for j in (i + 1)..factors.len() {
            let (a, b) = (&factors[i], &factors[j]);
            if a.name != b.name || a.params != b.params {
                if a.rs.rs_type() == b.rs.rs_type() && a.mult == b.mult {
                    warnings.push(format!(
                        "factors {} and {} have identical root data but different names; \
                         they are treated as non-isometric",
                        a.display_name(),
                        b.display_name()
                    ));
                }
            }
        }
    }
    Ok(SymmetricSpace {
        factors,
        offsets,
        rank,
        dim,
        warnings,
    })
}

impl<S: Scalar> SymmetricSpace<S> {
    pub fn factors(&self) -> &[IrreducibleSpace<S>] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dim_n(&self) -> usize {
        self.factors.iter().map(|f| f.dim_n()).sum()
    }

    pub fn display_name(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.display_name())
            .collect::<Vec<_>>()
            .join(" * ")
    }

    /// Global index of local simple root `i` of factor `f`.
    pub fn global_index(&self, f: usize, i: usize) -> usize {
        self.offsets[f] + i
    }

    /// (factor, local index) of a global simple-root index.
    pub fn factor_of(&self, global: usize) -> (usize, usize) {
        assert!(global < self.rank, "global simple-root index out of range");
        let f = self
            .offsets
            .iter()
            .rposition(|&off| off <= global)
            .unwrap();
        (f, global - self.offsets[f])
    }

    /// Do factors `i` and `j` come from the same catalog entry? The name
    /// comparison is the source of truth; equality of root data is asserted
    /// as an internal consistency check.
    pub fn isometric_factors(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.factors[i], &self.factors[j]);
        let same_name = a.name == b.name && a.params == b.params;
        if same_name {
            assert!(
                a.rs.rs_type() == b.rs.rs_type() && a.mult == b.mult,
                "catalog corruption: same name, different root data"
            );
        }
        same_name
    }

    /// Iterates positive roots of the whole space as (factor, local root
    /// index) pairs.
    pub fn global_positives(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(f, fac)| (0..fac.rs.n_positive()).map(move |i| (f, i)))
    }

    /// Global coefficient vector of a factor-local root.
    pub fn global_coeffs(&self, f: usize, root_idx: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        let local = &self.factors[f].rs.root(root_idx).coeffs;
        v[self.offsets[f]..self.offsets[f] + local.len()].copy_from_slice(local);
        v
    }

    /// Looks up a global coefficient vector; the support must lie in a
    /// single factor block.
    pub fn find_global_root(&self, coeffs: &[i64]) -> Option<(usize, usize)> {
        assert_eq!(coeffs.len(), self.rank);
        let first = coeffs.iter().position(|&c| c != 0)?;
        let (f, _) = self.factor_of(first);
        let lo = self.offsets[f];
        let hi = lo + self.factors[f].rank();
        if coeffs[..lo].iter().any(|&c| c != 0) || coeffs[hi..].iter().any(|&c| c != 0) {
            return None;
        }
        let local = &coeffs[lo..hi];
        self.factors[f].rs.index_of(local).map(|idx| (f, idx))
    }

    /// Multiplicity of a factor-local root, resolved through its length class.
    pub fn multiplicity(&self, f: usize, root_idx: usize) -> u32 {
        let fac = &self.factors[f];
        fac.mult.of_class(fac.rs.length_class(root_idx))
    }

    /// Multiplicity data of a global simple root: (m_simple, m_double).
    pub fn simple_mults(&self, global: usize) -> (u32, u32) {
        let (f, i) = self.factor_of(global);
        let fac = &self.factors[f];
        let idx = fac.rs.simple_index(i);
        let m = self.multiplicity(f, idx);
        let double: Vec<i64> = fac.rs.root(idx).coeffs.iter().map(|c| 2 * c).collect();
        let md = fac
            .rs
            .index_of(&double)
            .map(|d| self.multiplicity(f, d))
            .unwrap_or(0);
        (m, md)
    }
}

/// Hyperbolic space over one of the four real normed division algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperbolicSpace {
    Real(u32),
    Complex(u32),
    Quaternionic(u32),
    Octonionic,
}

impl std::fmt::Display for HyperbolicSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HyperbolicSpace::Real(n) => write!(f, "RH^{n}"),
            HyperbolicSpace::Complex(n) => write!(f, "CH^{n}"),
            HyperbolicSpace::Quaternionic(n) => write!(f, "HH^{n}"),
            HyperbolicSpace::Octonionic => write!(f, "OH^2"),
        }
    }
}

impl HyperbolicSpace {
    pub fn dim(&self) -> usize {
        match self {
            HyperbolicSpace::Real(n) => *n as usize,
            HyperbolicSpace::Complex(n) => 2 * *n as usize,
            HyperbolicSpace::Quaternionic(n) => 4 * *n as usize,
            HyperbolicSpace::Octonionic => 16,
        }
    }
}

/// Identifies the rank-one space with simple-root multiplicity `m_simple`
/// and double-root multiplicity `m_double`.
pub fn rank_one_identify(m_simple: u32, m_double: u32) -> Result<HyperbolicSpace, CatalogError> {
    let err = Err(CatalogError::NotRankOne { m_simple, m_double });
    match m_double {
        0 if m_simple >= 1 => Ok(HyperbolicSpace::Real(m_simple + 1)),
        1 if m_simple >= 2 && m_simple % 2 == 0 => Ok(HyperbolicSpace::Complex(m_simple / 2 + 1)),
        3 if m_simple >= 4 && m_simple % 4 == 0 => {
            Ok(HyperbolicSpace::Quaternionic(m_simple / 4 + 1))
        }
        7 if m_simple == 8 => Ok(HyperbolicSpace::Octonionic),
        _ => err,
    }
}
