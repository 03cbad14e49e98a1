use super::{BaseVector, GroupPresentation, Letter, LetterKind, Side, Sign, StableId, Word};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StableLetter {
    pub rule: StableId,
    pub sign: Sign,
}

impl StableLetter {
    pub fn letter(self) -> Letter {
        Letter { kind: LetterKind::Stable(self.rule), sign: self.sign }
    }

    /// Side whose subgroup passes through this letter from the left.
    pub fn absorbing_side(self) -> Side {
        match self.sign {
            Sign::Pos => Side::U,
            Sign::Neg => Side::V,
        }
    }
}

/// A coset representative followed by a stable letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub rep: BaseVector,
    pub letter: StableLetter,
}

/// `g0 x1 g1 x2 ... xm gm` with every `g(i-1)` the canonical representative
/// of its coset of the subgroup absorbed by `xi`, and no pinches.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub segments: Vec<Segment>,
    pub tail: BaseVector,
}

impl NormalForm {
    pub fn identity(rank: usize) -> Self {
        NormalForm { segments: Vec::new(), tail: BaseVector::zero(rank) }
    }

    pub fn from_base(v: BaseVector) -> Self {
        NormalForm { segments: Vec::new(), tail: v }
    }

    pub fn is_identity(&self) -> bool {
        self.segments.is_empty() && self.tail.is_zero()
    }

    /// Number of stable letters, which is the depth of the element's plane
    /// in the plane tree.
    pub fn depth(&self) -> usize {
        self.segments.len()
    }

    pub fn stable_letters(&self) -> Vec<StableLetter> {
        self.segments.iter().map(|s| s.letter).collect()
    }

    pub fn mul_letter(&mut self, p: &GroupPresentation, l: Letter) {
        match l.kind {
            LetterKind::Base(g) => self.tail.add_assign_scaled(&p.base_gens[g.0 as usize].vector, l.sign.value()),
            LetterKind::Stable(rule) => self.mul_stable(p, StableLetter { rule, sign: l.sign }),
        }
    }

    pub fn mul_vector(&mut self, v: &BaseVector) {
        self.tail.add_assign_scaled(v, 1);
    }

    fn mul_stable(&mut self, p: &GroupPresentation, x: StableLetter) {
        let r = p.rule(x.rule);
        let from = x.absorbing_side();
        let (h, image) = (&r.axis(from).vector, &r.axis(from.other()).vector);
        if let Some(last) = self.segments.last() {
            if last.letter.rule == x.rule && last.letter.sign != x.sign {
                if let Some(k) = self.tail.multiple_of(h) {
                    let mut tail = self.segments.pop().expect("nonempty").rep;
                    tail.add_assign_scaled(image, k);
                    self.tail = tail;
                    return;
                }
            }
        }
        let (rep, k) = self.tail.split_along(h);
        self.segments.push(Segment { rep, letter: x });
        self.tail = image.scale(k);
    }

    pub fn mul_word(&mut self, p: &GroupPresentation, w: &Word) {
        for &l in w.letters() {
            self.mul_letter(p, l);
        }
    }

    pub fn times(&self, p: &GroupPresentation, w: &Word) -> NormalForm {
        let mut out = self.clone();
        out.mul_word(p, w);
        out
    }

    /// A word for this element using geodesic base words between stable letters.
    pub fn to_word(&self, p: &GroupPresentation) -> Word {
        let mut w = Word::empty();
        for s in &self.segments {
            w.0.extend(p.base_geodesic(&s.rep).0);
            w.push(s.letter.letter());
        }
        w.0.extend(p.base_geodesic(&self.tail).0);
        w
    }

    /// The normal-form prefix identifying this element's plane.
    pub fn plane(&self) -> &[Segment] {
        &self.segments
    }
}

/// Cancels adjacent inverse letters until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

/// A subword `x^-e u x^e` with `u` a base word in the subgroup `x^e` absorbs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinchReport {
    /// Index of the opening stable letter.
    pub start: usize,
    /// Index of the closing stable letter (inclusive).
    pub end: usize,
    pub rule: StableId,
    /// Base word equal to the pinch.
    pub replacement: Word,
}

/// Finds the leftmost pinch in `w`.
pub fn find_pinch(p: &GroupPresentation, w: &Word) -> Option<PinchReport> {
    let ls = w.letters();
    let stable_at: Vec<usize> = (0..ls.len()).filter(|&i| ls[i].is_stable()).collect();
    for pair in stable_at.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        let (open, close) = (ls[i], ls[j]);
        if open.kind != close.kind || open.sign == close.sign {
            continue;
        }
        let rule_id = close.stable_id().expect("stable");
        let x = StableLetter { rule: rule_id, sign: close.sign };
        let rule = p.rule(rule_id);
        let h = rule.axis(x.absorbing_side());
        let inner = Word(ls[i + 1..j].to_vec());
        let v = p.base_word_vector(&inner).expect("no stable letters between consecutive stable letters");
        if let Some(k) = v.multiple_of(&h.vector) {
            let image = rule.axis(x.absorbing_side().other());
            let n = k * image.power;
            let sign = if n >= 0 { Sign::Pos } else { Sign::Neg };
            let mut replacement = Word::empty();
            replacement.push_power(Letter { kind: LetterKind::Base(image.generator), sign }, n.unsigned_abs() as usize);
            return Some(PinchReport { start: i, end: j, rule: rule_id, replacement });
        }
    }
    None
}

/// Free reduction and pinch removal until neither applies.
pub fn britton_reduce(p: &GroupPresentation, w: &Word) -> Word {
    let mut cur = free_reduce(w);
    while let Some(r) = find_pinch(p, &cur) {
        let mut next = cur.0[..r.start].to_vec();
        next.extend(r.replacement.0);
        next.extend_from_slice(&cur.0[r.end + 1..]);
        cur = free_reduce(&Word(next));
    }
    cur
}
