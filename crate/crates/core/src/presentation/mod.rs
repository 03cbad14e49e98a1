//! Presentations of multiple HNN extensions of a free abelian group,
//! words over their generators, Britton reduction and normal forms.
//!
//! Every stable letter `s` carries a rule `s^-1 u s = v` where `u` and `v`
//! are powers of base generators. The cyclic subgroup generated by `u` is
//! the *U side* of `s` and the one generated by `v` is the *V side*.

mod file;
mod metric;
mod normal_form;
mod vector;
mod word;

pub use file::{AxisFile, BaseGenFile, PresentationFile, StableRuleFile};
pub use metric::BaseMetric;
pub use normal_form::{britton_reduce, find_pinch, free_reduce, NormalForm, PinchReport, Segment, StableLetter};
pub use vector::BaseVector;
pub use word::{BaseGenId, Letter, LetterKind, Sign, StableId, Word};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("unknown presentation `{0}` (built-ins: g11, gw)")]
    UnknownPresentation(String),
    #[error("bad token `{token}` at position {position}: {reason}")]
    BadWord { token: String, position: usize, reason: String },
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("cannot read presentation file: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse presentation file: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("cannot serialize presentation: {0}")]
    Serialize(#[from] toml::ser::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGenerator {
    pub name: String,
    pub vector: BaseVector,
}

/// A cyclic subgroup generator given as a power of a base generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub generator: BaseGenId,
    pub power: i64,
    pub vector: BaseVector,
}

/// The side of a stable letter's relation a line belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Side {
    U,
    V,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableRule {
    pub name: String,
    pub u: Axis,
    pub v: Axis,
}

impl StableRule {
    pub fn axis(&self, side: Side) -> &Axis {
        match side {
            Side::U => &self.u,
            Side::V => &self.v,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub name: String,
    pub rank: usize,
    pub base_gens: Vec<BaseGenerator>,
    pub stable_rules: Vec<StableRule>,
    metric: BaseMetric,
    source: PresentationFile,
}

impl PartialEq for GroupPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
    }
}

impl GroupPresentation {
    pub fn from_file(file: PresentationFile) -> Result<Self, PresentationError> {
        file.validate()?;
        let base_gens: Vec<BaseGenerator> = file
            .base_gens
            .iter()
            .map(|g| BaseGenerator { name: g.name.clone(), vector: BaseVector::from_slice(&g.vector) })
            .collect();
        let axis = |a: &AxisFile| -> Axis {
            let i = file.base_gens.iter().position(|g| g.name == a.gen).expect("validated");
            Axis {
                generator: BaseGenId(i as u16),
                power: a.power,
                vector: base_gens[i].vector.scale(a.power),
            }
        };
        let stable_rules = file
            .stable_rules
            .iter()
            .map(|r| StableRule { name: r.name.clone(), u: axis(&r.u), v: axis(&r.v) })
            .collect();
        let vectors: Vec<BaseVector> = base_gens.iter().map(|g| g.vector.clone()).collect();
        Ok(GroupPresentation {
            name: file.name.clone(),
            rank: file.rank,
            base_gens,
            stable_rules,
            metric: BaseMetric::for_generators(file.rank, &vectors),
            source: file,
        })
    }

    /// Looks up a built-in presentation by name.
    pub fn builtin(name: &str) -> Result<Self, PresentationError> {
        match name {
            "g11" => Self::from_file(PresentationFile::g11()),
            "gw" => Self::from_file(PresentationFile::gw()),
            other => Err(PresentationError::UnknownPresentation(other.to_string())),
        }
    }

    pub fn g11() -> Self {
        Self::builtin("g11").expect("built-in")
    }

    pub fn gw() -> Self {
        Self::builtin("gw").expect("built-in")
    }

    pub fn file(&self) -> &PresentationFile {
        &self.source
    }

    /// Stable hash of the canonical file form, as 32 hex digits.
    pub fn hash(&self) -> String {
        self.source.hash()
    }

    pub fn metric(&self) -> &BaseMetric {
        &self.metric
    }

    /// All letters, base generators first, each followed by its inverse.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in 0..self.base_gens.len() {
            out.push(Letter::base(i as u16, Sign::Pos));
            out.push(Letter::base(i as u16, Sign::Neg));
        }
        for i in 0..self.stable_rules.len() {
            out.push(Letter::stable(i as u16, Sign::Pos));
            out.push(Letter::stable(i as u16, Sign::Neg));
        }
        out
    }

    pub fn base_letter_vector(&self, id: BaseGenId, sign: Sign) -> BaseVector {
        self.base_gens[id.0 as usize].vector.scale(sign.value())
    }

    pub fn rule(&self, id: StableId) -> &StableRule {
        &self.stable_rules[id.0 as usize]
    }

    /// Sum of the base letters of `w`, or `None` if `w` has stable letters.
    pub fn base_word_vector(&self, w: &Word) -> Option<BaseVector> {
        let mut v = BaseVector::zero(self.rank);
        for l in w.letters() {
            match l.kind {
                LetterKind::Base(g) => v.add_assign_scaled(&self.base_gens[g.0 as usize].vector, l.sign.value()),
                LetterKind::Stable(_) => return None,
            }
        }
        Some(v)
    }

    /// Word length of a base group element with respect to the base generators.
    pub fn base_word_metric(&self, v: &BaseVector) -> u64 {
        self.metric.norm(v)
    }

    /// A geodesic base word for `v`.
    pub fn base_geodesic(&self, v: &BaseVector) -> Word {
        self.metric.geodesic(v)
    }

    /// Stable letters of `w` in order, with their signs.
    pub fn stable_letter_sequence(&self, w: &Word) -> Vec<StableLetter> {
        w.letters()
            .iter()
            .filter_map(|l| l.stable_id().map(|rule| StableLetter { rule, sign: l.sign }))
            .collect()
    }

    /// Normal form of the element represented by `w`.
    pub fn normalize(&self, w: &Word) -> NormalForm {
        let mut nf = NormalForm::identity(self.rank);
        for &l in w.letters() {
            nf.mul_letter(self, l);
        }
        nf
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.normalize(w).is_identity()
    }

    /// Relators: base commutators `x y x' y'`, `x y` times a geodesic for
    /// its inverse, and `s' u s v'` for every stable letter.
    pub fn relators(&self) -> Vec<Word> {
        let power = |w: &mut Word, a: &Axis, sign: Sign| {
            let s = if a.power < 0 { sign.flip() } else { sign };
            w.push_power(Letter::base(a.generator.0, s), a.power.unsigned_abs() as usize);
        };
        let mut out = Vec::new();
        let n = self.base_gens.len() as u16;
        for i in 0..n {
            for j in i + 1..n {
                out.push(Word(vec![
                    Letter::base(i, Sign::Pos),
                    Letter::base(j, Sign::Pos),
                    Letter::base(i, Sign::Neg),
                    Letter::base(j, Sign::Neg),
                ]));
                let mut w = Word(vec![Letter::base(i, Sign::Pos), Letter::base(j, Sign::Pos)]);
                let v = &self.base_gens[i as usize].vector + &self.base_gens[j as usize].vector;
                w.0.extend(self.base_geodesic(&-&v).0);
                out.push(w);
            }
        }
        for (i, r) in self.stable_rules.iter().enumerate() {
            let mut w = Word(vec![Letter::stable(i as u16, Sign::Neg)]);
            power(&mut w, &r.u, Sign::Pos);
            w.push(Letter::stable(i as u16, Sign::Pos));
            power(&mut w, &r.v, Sign::Neg);
            out.push(w);
        }
        out
    }

    /// The side of `rule` that a strip entered through `letter` lands on.
    pub fn landing_side(sign: Sign) -> Side {
        match sign {
            Sign::Pos => Side::V,
            Sign::Neg => Side::U,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_and_unknown() {
        let p = GroupPresentation::g11();
        assert_eq!(p.base_gens.len(), 4);
        assert_eq!(p.stable_rules.len(), 2);
        assert!(matches!(
            GroupPresentation::builtin("bs12"),
            Err(PresentationError::UnknownPresentation(_))
        ));
    }

    #[test]
    fn word_syntax_roundtrip() {
        let p = GroupPresentation::g11();
        let w = p.parse_word("b' s s a s' d^4").unwrap();
        assert_eq!(w.len(), 9);
        assert_eq!(p.format_word(&w), "b' s^2 a s' d^4");
        assert_eq!(p.parse_word(&p.format_word(&w)).unwrap(), w);
        assert_eq!(p.parse_word("1").unwrap(), Word::empty());
        assert_eq!(p.parse_word("  ").unwrap(), Word::empty());
        assert_eq!(p.parse_word("a'^3").unwrap().len(), 3);
        assert!(p.parse_word("x").is_err());
        assert!(p.parse_word("a^").is_err());
        assert!(p.parse_word("a^-2").is_err());
    }

    #[test]
    fn relations_hold() {
        for p in [GroupPresentation::g11(), GroupPresentation::gw()] {
            for r in &p.stable_rules {
                let name = &r.name;
                let u = &p.base_gens[r.u.generator.0 as usize].name;
                let v = &p.base_gens[r.v.generator.0 as usize].name;
                let rel = format!("{name}' {u}^{} {name} {v}'^{}", r.u.power, r.v.power);
                assert!(p.is_identity(&p.parse_word(&rel).unwrap()), "{rel}");
            }
        }
    }
}
