use super::PresentationError;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

/// On-disk form of a presentation (TOML).
///
/// ```toml
/// name = "g11"
/// rank = 2
///
/// [[base_gens]]
/// name = "a"
/// vector = [1, 0]
///
/// [[stable_rules]]
/// name = "s"
/// u = { gen = "a", power = 1 }
/// v = { gen = "c", power = 1 }
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub name: String,
    pub rank: usize,
    pub base_gens: Vec<BaseGenFile>,
    pub stable_rules: Vec<StableRuleFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseGenFile {
    pub name: String,
    pub vector: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StableRuleFile {
    pub name: String,
    pub u: AxisFile,
    pub v: AxisFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisFile {
    pub gen: String,
    pub power: i64,
}

fn gen(name: &str, vector: &[i64]) -> BaseGenFile {
    BaseGenFile { name: name.into(), vector: vector.to_vec() }
}

fn rule(name: &str, u: &str, v: &str) -> StableRuleFile {
    StableRuleFile {
        name: name.into(),
        u: AxisFile { gen: u.into(), power: 1 },
        v: AxisFile { gen: v.into(), power: 1 },
    }
}

impl PresentationFile {
    /// Rank two, king-move base generators, `s^-1 a s = c`, `t^-1 a t = d`.
    pub fn g11() -> Self {
        PresentationFile {
            name: "g11".into(),
            rank: 2,
            base_gens: vec![gen("a", &[1, 0]), gen("b", &[0, 1]), gen("c", &[1, 1]), gen("d", &[1, -1])],
            stable_rules: vec![rule("s", "a", "c"), rule("t", "a", "d")],
        }
    }

    /// Rank two with `d = (2,2)`, `s^-1 a s = d`, `t^-1 b t = d`.
    pub fn gw() -> Self {
        PresentationFile {
            name: "gw".into(),
            rank: 2,
            base_gens: vec![gen("a", &[1, 0]), gen("b", &[0, 1]), gen("c", &[1, 1]), gen("d", &[2, 2])],
            stable_rules: vec![rule("s", "a", "d"), rule("t", "b", "d")],
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, PresentationError> {
        let f: PresentationFile = toml::from_str(text)?;
        f.validate()?;
        Ok(f)
    }

    pub fn to_toml(&self) -> Result<String, PresentationError> {
        Ok(toml::to_string(self)?)
    }

    pub fn load(path: &Path) -> Result<Self, PresentationError> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<(), PresentationError> {
        std::fs::write(path, self.to_toml()?)?;
        Ok(())
    }

    pub fn hash(&self) -> String {
        let canonical = serde_json::to_string(self).expect("plain data serializes");
        let digest = Sha256::digest(canonical.as_bytes());
        hex::encode(&digest[..16])
    }

    pub fn validate(&self) -> Result<(), PresentationError> {
        let invalid = |m: String| Err(PresentationError::Invalid(m));
        if self.rank == 0 {
            return invalid("rank must be positive".into());
        }
        let mut names: Vec<&str> = Vec::new();
        for n in self.base_gens.iter().map(|g| &g.name).chain(self.stable_rules.iter().map(|r| &r.name)) {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return invalid(format!("bad generator name `{n}`"));
            }
            if names.contains(&n.as_str()) {
                return invalid(format!("duplicate generator name `{n}`"));
            }
            names.push(n);
        }
        for g in &self.base_gens {
            if g.vector.len() != self.rank {
                return invalid(format!("generator `{}` has {} coordinates, rank is {}", g.name, g.vector.len(), self.rank));
            }
            if g.vector.iter().all(|&x| x == 0) {
                return invalid(format!("generator `{}` is zero", g.name));
            }
        }
        if !generates_lattice(self.rank, self.base_gens.iter().map(|g| g.vector.clone()).collect()) {
            return invalid(format!("base generators do not generate Z^{}", self.rank));
        }
        for r in &self.stable_rules {
            for a in [&r.u, &r.v] {
                if !self.base_gens.iter().any(|g| g.name == a.gen) {
                    return invalid(format!("rule `{}` names unknown base generator `{}`", r.name, a.gen));
                }
                if a.power == 0 {
                    return invalid(format!("rule `{}` has a zero power", r.name));
                }
            }
        }
        Ok(())
    }
}

/// Whether the integer row span of `rows` is all of `Z^rank`.
fn generates_lattice(rank: usize, mut rows: Vec<Vec<i64>>) -> bool {
    let mut pivot_row = 0;
    for col in 0..rank {
        // Euclid on the column below pivot_row until one nonzero entry remains.
        loop {
            let nz: Vec<usize> = (pivot_row..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let &m = nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            for &i in &nz {
                if i != m {
                    let q = rows[i][col] / rows[m][col];
                    let pm = rows[m].clone();
                    for (x, y) in rows[i].iter_mut().zip(pm) {
                        *x -= q * y;
                    }
                }
            }
        }
        let Some(i) = (pivot_row..rows.len()).find(|&i| rows[i][col] != 0) else {
            return false;
        };
        if rows[i][col].abs() != 1 {
            return false;
        }
        rows.swap(i, pivot_row);
        pivot_row += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_roundtrip_is_exact() {
        for f in [PresentationFile::g11(), PresentationFile::gw()] {
            let text = f.to_toml().unwrap();
            let back = PresentationFile::from_toml(&text).unwrap();
            assert_eq!(back, f);
            assert_eq!(back.to_toml().unwrap(), text);
            assert_eq!(back.hash(), f.hash());
        }
        assert_ne!(PresentationFile::g11().hash(), PresentationFile::gw().hash());
    }

    #[test]
    fn rejects_bad_files() {
        let mut f = PresentationFile::g11();
        f.base_gens.truncate(1);
        assert!(f.validate().is_err());
        let mut f = PresentationFile::g11();
        f.stable_rules[0].u.gen = "z".into();
        assert!(f.validate().is_err());
        let mut f = PresentationFile::g11();
        f.base_gens = vec![gen("a", &[2, 0]), gen("b", &[0, 1])];
        f.stable_rules.clear();
        assert!(f.validate().is_err());
        assert!(PresentationFile::from_toml("rank = 2").is_err());
    }

    #[test]
    fn lattice_check() {
        assert!(generates_lattice(2, vec![vec![2, 1], vec![3, 2]]));
        assert!(!generates_lattice(2, vec![vec![2, 0], vec![0, 2], vec![2, 2]]));
        assert!(generates_lattice(2, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 2]]));
    }
}
