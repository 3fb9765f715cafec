use crate::cert::CliError;
use bigal::families::{CoidealKind, Family};
use bigal::group::{AbelianGroup, Subgroup};
use bigal::twist::{Cocycle2, Exponents};
use bigal::{Field, Scalar};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Everything a run depends on. Loaded from `--config`, then overridden by
/// flags; echoed verbatim into the certificate.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub n: Option<u32>,
    /// `N` with `n | N`; defaults to `n`
    pub conductor: Option<u32>,
    /// values of `χ1` at `(g,1)` and `(1,g)`
    pub chi1: Option<[String; 2]>,
    pub chi2: Option<[String; 2]>,
    pub family: Option<FamilyConfig>,
    pub coideal: Option<CoidealConfig>,
    /// bicharacter exponent matrices for `twist`
    pub psi: Vec<Exponents>,
    /// `(ξ, μ)` pairs for `grouplaw` and `bigal-equiv`
    pub lhs: Option<[String; 2]>,
    pub rhs: Option<[String; 2]>,
    pub neutral: bool,
    /// `ξ` samples for `atlas`
    pub xi: Option<Vec<String>>,
    /// largest dimension for which `atlas` runs the simplicity and lifting checks
    pub max_dim: Option<usize>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct FamilyConfig {
    /// `L`, `K11`, `K01`, `K10` or `TGA`
    pub kind: String,
    pub xi: Option<String>,
    pub mu: Option<String>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub subgroup: Option<String>,
    pub psi: Option<Exponents>,
    /// `(i, j)` for the g-twist by `(g^i, g^j)`
    pub g_twist: Option<[i64; 2]>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct CoidealConfig {
    pub xi: Option<String>,
    /// `(δ1, δ2)`; ignored when `xi` is set
    pub delta: Option<[u8; 2]>,
    pub subgroup: Option<String>,
    /// twist by `σ_ψ⁻¹` and compare with the family member
    pub psi: Option<Exponents>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
        if json {
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        } else {
            toml::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
    }
}

/// Resolved field data.
pub struct Ctx {
    pub n: u32,
    pub field: Field,
    pub q: Scalar,
    pub group: AbelianGroup,
}

impl Ctx {
    pub fn new(cfg: &RunConfig) -> Result<Ctx, CliError> {
        let n = cfg.n.unwrap_or(2);
        if n < 2 {
            return Err(CliError::Input(format!("n must be at least 2, got {n}")));
        }
        let conductor = cfg.conductor.unwrap_or(n);
        if conductor % n != 0 {
            return Err(CliError::Input(format!("n = {n} does not divide N = {conductor}")));
        }
        let field = Field::new(conductor)?;
        let q = field.primitive_root(n)?;
        Ok(Ctx { n, field, q, group: AbelianGroup::square(n) })
    }

    /// Scalar literal; `q` names the primitive `n`-th root.
    pub fn scalar(&self, text: &str) -> Result<Scalar, CliError> {
        self.field
            .parse_with(text, &[("q", self.q.clone())])
            .map_err(|e| CliError::Input(format!("scalar `{text}`: {e}")))
    }

    pub fn opt_scalar(&self, text: &Option<String>) -> Result<Scalar, CliError> {
        match text {
            Some(t) => self.scalar(t),
            None => Ok(self.field.zero()),
        }
    }

    /// `trivial`, `diag`, `anti`, `whole`, or generators `i,j;i,j`.
    pub fn subgroup(&self, text: Option<&str>, default: &str) -> Result<Subgroup, CliError> {
        let g = self.group;
        let t = text.unwrap_or(default).trim();
        Ok(match t {
            "trivial" | "1" => g.generate(&[]),
            "diag" => g.diagonal(),
            "anti" => g.generate(&[g.elem(1, -1)]),
            "whole" | "G" => g.whole(),
            _ => {
                let mut gens = Vec::new();
                for part in t.split(';').filter(|p| !p.trim().is_empty()) {
                    let [i, j] = parse_pair(part)?;
                    gens.push(g.elem(i, j));
                }
                g.generate(&gens)
            }
        })
    }

    pub fn bicharacter(&self, sub: Subgroup, m: Exponents) -> Result<Cocycle2, CliError> {
        Ok(Cocycle2::bicharacter(&self.field, sub, m)?)
    }

    pub fn family(&self, c: &FamilyConfig) -> Result<Family, CliError> {
        Ok(match c.kind.to_ascii_uppercase().as_str() {
            "L" => Family::L { xi: self.scalar(c.xi.as_deref().unwrap_or("1"))?, mu: self.opt_scalar(&c.mu)? },
            "K11" => Family::K11 { a: self.opt_scalar(&c.a)?, b: self.opt_scalar(&c.b)?, xi: self.opt_scalar(&c.xi)? },
            "K01" => Family::K01 { a: self.opt_scalar(&c.a)? },
            "K10" => Family::K10 { b: self.opt_scalar(&c.b)? },
            "TGA" => Family::Tga,
            other => return Err(CliError::Input(format!("unknown family `{other}`"))),
        })
    }

    pub fn coideal_kind(&self, c: &CoidealConfig) -> Result<CoidealKind, CliError> {
        Ok(match (&c.xi, c.delta) {
            (Some(x), _) => CoidealKind::Xi(self.scalar(x)?),
            (None, Some([a, b])) if a <= 1 && b <= 1 => CoidealKind::Delta(a == 1, b == 1),
            (None, Some(d)) => return Err(CliError::Input(format!("δ must be 0/1, got {d:?}"))),
            (None, None) => return Err(CliError::Input("coideal needs `xi` or `delta`".into())),
        })
    }

    pub fn pair(&self, p: &Option<[String; 2]>, what: &str) -> Result<(Scalar, Scalar), CliError> {
        let p = p.as_ref().ok_or_else(|| CliError::Input(format!("missing {what}")))?;
        Ok((self.scalar(&p[0])?, self.scalar(&p[1])?))
    }
}

pub fn parse_pair(text: &str) -> Result<[i64; 2], CliError> {
    let v: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("`{text}`: {e}")))?;
    v.try_into().map_err(|_| CliError::Input(format!("`{text}`: expected two integers")))
}

/// `a,b;c,d`.
pub fn parse_exponents(text: &str) -> Result<Exponents, CliError> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 2 {
        return Err(CliError::Input(format!("`{text}`: expected `a,b;c,d`")));
    }
    Ok([parse_pair(rows[0])?, parse_pair(rows[1])?])
}
