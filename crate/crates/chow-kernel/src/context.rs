use std::fmt;

use crate::error::{ChowError, Result};

/// The five multidegrees of complete-intersection Calabi-Yau threefolds.
pub const FIVE_CICYS: [&[u32]; 5] = [&[5], &[2, 4], &[3, 3], &[2, 2, 3], &[2, 2, 2, 2]];

/// How strictly a multidegree is validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Only the five CICY multidegrees are accepted.
    #[default]
    Strict,
    /// Any multidegree with trivial canonical class is accepted, with warnings.
    Lax,
}

impl Mode {
    /// Reads the mode from a string such as the value of an environment variable.
    pub fn parse(s: &str) -> Option<Mode> {
        match s.trim().to_ascii_lowercase().as_str() {
            "strict" | "" => Some(Mode::Strict),
            "lax" => Some(Mode::Lax),
            _ => None,
        }
    }
}

/// A complete-intersection threefold with `Pic = Z·H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CicyContext {
    multidegree: Vec<u32>,
    ambient_dim: u32,
    u: i64,
    v: i64,
}

impl CicyContext {
    pub fn new(multidegree: &[u32], mode: Mode) -> Result<Self> {
        if multidegree.is_empty() {
            return Err(ChowError::InvalidMultidegree("empty multidegree".into()));
        }
        if multidegree.contains(&0) {
            return Err(ChowError::InvalidMultidegree(
                "degrees must be positive".into(),
            ));
        }
        let mut md = multidegree.to_vec();
        md.sort_unstable();
        let k = md.len() as u32;
        let n = k + 3;
        let sum: u32 = md.iter().sum();
        if sum != n + 1 {
            return Err(ChowError::InvalidMultidegree(format!(
                "sum of degrees {sum} differs from n+1 = {} (canonical class not trivial)",
                n + 1
            )));
        }
        let u: i64 = md.iter().map(|&d| d as i64).product();
        let v = u.div_euclid(4);
        let ctx = CicyContext {
            multidegree: md,
            ambient_dim: n,
            u,
            v,
        };
        if mode == Mode::Strict {
            if !ctx.is_standard() {
                return Err(unknown(&ctx.label()));
            }
            if v + 4 != n as i64 + 1 {
                return Err(ChowError::InvalidMultidegree(format!(
                    "floor(u/4) + 4 = {} differs from n+1 = {}",
                    v + 4,
                    n + 1
                )));
            }
        }
        Ok(ctx)
    }

    pub fn quintic() -> Self {
        Self::new(&[5], Mode::Strict).unwrap()
    }

    pub fn x24() -> Self {
        Self::new(&[2, 4], Mode::Strict).unwrap()
    }

    pub fn x33() -> Self {
        Self::new(&[3, 3], Mode::Strict).unwrap()
    }

    pub fn x223() -> Self {
        Self::new(&[2, 2, 3], Mode::Strict).unwrap()
    }

    pub fn x2222() -> Self {
        Self::new(&[2, 2, 2, 2], Mode::Strict).unwrap()
    }

    /// All five CICY threefolds in increasing codimension.
    pub fn all_five() -> Vec<Self> {
        FIVE_CICYS
            .iter()
            .map(|md| Self::new(md, Mode::Strict).unwrap())
            .collect()
    }

    /// Parses "5", "2,4", "(2,4)", "X_{2,4}", or a degree alias "X8".
    pub fn parse(input: &str, mode: Mode) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = s.to_ascii_lowercase();
        if lower == "quintic" {
            return Ok(Self::quintic());
        }
        let body = lower
            .trim_start_matches("x_")
            .trim_start_matches('x')
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim_start_matches('(')
            .trim_end_matches(')');
        let is_alias = lower.starts_with('x') && !body.contains(',');
        let parts: std::result::Result<Vec<u32>, _> =
            body.split(',').map(|p| p.parse::<u32>()).collect();
        let parts = parts.map_err(|_| unknown(input))?;
        if is_alias {
            // X_u names a threefold by its degree; only the five CICYs are addressable.
            let deg = parts[0] as i64;
            let hits: Vec<Self> = Self::all_five().into_iter().filter(|c| c.u == deg).collect();
            return match hits.len() {
                1 => Ok(hits[0].clone()),
                _ => Err(unknown(input)),
            };
        }
        Self::new(&parts, mode).map_err(|e| match (mode, e) {
            (Mode::Strict, ChowError::UnknownThreefold { .. }) => unknown(input),
            (_, other) => other,
        })
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    /// Dimension n of the ambient projective space.
    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    /// Degree of X, the product of the multidegree.
    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn is_standard(&self) -> bool {
        FIVE_CICYS.contains(&self.multidegree.as_slice())
    }

    /// Warnings emitted for lax-mode threefolds.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if !self.is_standard() {
            w.push(format!(
                "{} is not one of the five CICY threefolds; results are unverified",
                self.display_name()
            ));
        }
        if self.v + 4 != self.ambient_dim as i64 + 1 {
            w.push(format!(
                "floor(u/4) + 4 = {} but n + 1 = {}; the Euler characteristic formula may not apply",
                self.v + 4,
                self.ambient_dim + 1
            ));
        }
        w
    }

    /// Comma-separated multidegree, e.g. "2,4".
    pub fn label(&self) -> String {
        self.multidegree
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Subscripted name, e.g. "X_{2,4}".
    pub fn display_name(&self) -> String {
        format!("X_{{{}}}", self.label())
    }
}

impl fmt::Display for CicyContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name())
    }
}

fn unknown(input: &str) -> ChowError {
    ChowError::UnknownThreefold {
        input: input.to_string(),
        options: FIVE_CICYS
            .iter()
            .map(|md| {
                md.iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(" | "),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_contexts() {
        let dims: Vec<(u32, i64, i64)> = CicyContext::all_five()
            .iter()
            .map(|c| (c.ambient_dim(), c.u(), c.v()))
            .collect();
        assert_eq!(
            dims,
            vec![(4, 5, 1), (5, 8, 2), (5, 9, 2), (6, 12, 3), (7, 16, 4)]
        );
        for c in CicyContext::all_five() {
            assert_eq!(c.v() + 4, c.ambient_dim() as i64 + 1);
            assert!(c.warnings().is_empty());
        }
    }

    #[test]
    fn strict_rejects_unknown() {
        let err = CicyContext::new(&[2, 2, 2, 2, 2], Mode::Strict);
        assert!(err.is_err());
        // (1,5) is the quintic written in a hyperplane; CY but not standard
        let err = CicyContext::parse("1,5", Mode::Strict).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2,2,2,2") && msg.contains("3,3"), "{msg}");
        assert!(CicyContext::new(&[2, 3], Mode::Strict).is_err());
    }

    #[test]
    fn lax_accepts_with_warning() {
        let c = CicyContext::new(&[1, 5], Mode::Lax).unwrap();
        assert_eq!(c.ambient_dim(), 5);
        assert!(!c.warnings().is_empty());
        assert!(CicyContext::new(&[2, 3], Mode::Lax).is_err());
    }

    #[test]
    fn parse_forms() {
        let x24 = CicyContext::x24();
        for s in ["2,4", "4,2", "(2,4)", "X_{2,4}", "X8", "x8", " 2, 4 "] {
            assert_eq!(CicyContext::parse(s, Mode::Strict).unwrap(), x24, "{s}");
        }
        assert_eq!(
            CicyContext::parse("quintic", Mode::Strict).unwrap(),
            CicyContext::quintic()
        );
        assert_eq!(
            CicyContext::parse("X12", Mode::Strict).unwrap(),
            CicyContext::x223()
        );
        assert!(CicyContext::parse("X7", Mode::Strict).is_err());
        assert!(CicyContext::parse("abc", Mode::Strict).is_err());
    }

    #[test]
    fn mode_parse() {
        assert_eq!(Mode::parse("LAX"), Some(Mode::Lax));
        assert_eq!(Mode::parse("strict"), Some(Mode::Strict));
        assert_eq!(Mode::parse("loose"), None);
    }
}
