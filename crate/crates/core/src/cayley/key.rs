//! Compact byte encoding of normal forms, used as hash keys in balls.
//!
//! Layout: for each segment its representative coordinates followed by one
//! code byte `2 * rule + (sign == Neg)`; then the tail coordinates.
//! Coordinates are zigzag varints.

use crate::presentation::{BaseVector, GroupPresentation, Letter, LetterKind, NormalForm, Segment, Sign, StableId, StableLetter};
use smallvec::SmallVec;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NfKey(pub(crate) SmallVec<[u8; 30]>);

impl NfKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(b: &[u8]) -> Self {
        NfKey(SmallVec::from_slice(b))
    }
}

fn put_int(out: &mut SmallVec<[u8; 30]>, x: i64) {
    let mut z = ((x << 1) ^ (x >> 63)) as u64;
    loop {
        let b = (z & 0x7f) as u8;
        z >>= 7;
        if z == 0 {
            out.push(b);
            return;
        }
        out.push(b | 0x80);
    }
}

fn get_int(b: &[u8], pos: &mut usize) -> Option<i64> {
    let mut z: u64 = 0;
    let mut shift = 0;
    loop {
        let byte = *b.get(*pos)?;
        *pos += 1;
        z |= ((byte & 0x7f) as u64) << shift;
        if byte & 0x80 == 0 {
            break;
        }
        shift += 7;
        if shift > 63 {
            return None;
        }
    }
    Some(((z >> 1) as i64) ^ -((z & 1) as i64))
}

fn put_vector(out: &mut SmallVec<[u8; 30]>, v: &BaseVector) {
    for &x in v.0.iter() {
        put_int(out, x);
    }
}

fn code(x: StableLetter) -> u8 {
    (x.rule.0 as u8) * 2 + (x.sign == Sign::Neg) as u8
}

pub fn encode(nf: &NormalForm) -> NfKey {
    let mut out = SmallVec::new();
    for s in &nf.segments {
        put_vector(&mut out, &s.rep);
        out.push(code(s.letter));
    }
    put_vector(&mut out, &nf.tail);
    NfKey(out)
}

pub fn decode(key: &NfKey, rank: usize) -> Option<NormalForm> {
    let b = key.as_bytes();
    let mut pos = 0;
    let mut segments = Vec::new();
    loop {
        let mut v = BaseVector::zero(rank);
        for i in 0..rank {
            v.0[i] = get_int(b, &mut pos)?;
        }
        if pos == b.len() {
            return Some(NormalForm { segments, tail: v });
        }
        let c = b[pos];
        pos += 1;
        let letter = StableLetter {
            rule: StableId((c / 2) as u16),
            sign: if c % 2 == 1 { Sign::Neg } else { Sign::Pos },
        };
        segments.push(Segment { rep: v, letter });
    }
}

/// Computes keys of right multiples `g x` of one element without building
/// the products.
pub struct Expander<'p> {
    p: &'p GroupPresentation,
    nf: NormalForm,
    prefix: SmallVec<[u8; 30]>,
    last_start: usize,
}

impl<'p> Expander<'p> {
    pub fn new(p: &'p GroupPresentation) -> Self {
        Expander { p, nf: NormalForm::identity(p.rank), prefix: SmallVec::new(), last_start: 0 }
    }

    pub fn load(&mut self, nf: NormalForm) {
        self.prefix.clear();
        self.last_start = 0;
        for s in &nf.segments {
            self.last_start = self.prefix.len();
            put_vector(&mut self.prefix, &s.rep);
            self.prefix.push(code(s.letter));
        }
        self.nf = nf;
    }

    pub fn current(&self) -> &NormalForm {
        &self.nf
    }

    /// Writes the key of `g l` into `out` and returns the length of its
    /// plane prefix (everything before the tail coordinates).
    pub fn product(&self, l: Letter, out: &mut NfKey) -> usize {
        let o = &mut out.0;
        o.clear();
        match l.kind {
            LetterKind::Base(g) => {
                o.extend_from_slice(&self.prefix);
                let plane = o.len();
                let mut t = self.nf.tail.clone();
                t.add_assign_scaled(&self.p.base_gens[g.0 as usize].vector, l.sign.value());
                put_vector(o, &t);
                plane
            }
            LetterKind::Stable(rule) => {
                let x = StableLetter { rule, sign: l.sign };
                let r = self.p.rule(rule);
                let from = x.absorbing_side();
                let (h, image) = (&r.axis(from).vector, &r.axis(from.other()).vector);
                if let Some(last) = self.nf.segments.last() {
                    if last.letter.rule == rule && last.letter.sign != l.sign {
                        if let Some(k) = self.nf.tail.multiple_of(h) {
                            o.extend_from_slice(&self.prefix[..self.last_start]);
                            let plane = o.len();
                            let mut t = last.rep.clone();
                            t.add_assign_scaled(image, k);
                            put_vector(o, &t);
                            return plane;
                        }
                    }
                }
                let (rep, k) = self.nf.tail.split_along(h);
                o.extend_from_slice(&self.prefix);
                put_vector(o, &rep);
                o.push(code(x));
                let plane = o.len();
                put_vector(o, &image.scale(k));
                plane
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_products_agree() {
        let p = GroupPresentation::g11();
        let w = p.parse_word("b' s^2 a s' d^4 s' d^2 s' d t a'^300").unwrap();
        let mut ex = Expander::new(&p);
        let mut nf = NormalForm::identity(2);
        let mut key = NfKey::default();
        for &l in w.letters() {
            ex.load(nf.clone());
            ex.product(l, &mut key);
            nf.mul_letter(&p, l);
            assert_eq!(key, encode(&nf));
            assert_eq!(decode(&key, 2).unwrap(), nf);
        }
    }
}
