use super::{BaseVector, Letter, Sign, Word};
use rustc_hash::FxHashMap;
use std::collections::VecDeque;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Generators `±(1,0), ±(0,1), ±(1,1), ±(1,-1)`: the Chebyshev norm.
    King,
    /// Generators `±(1,0), ±(0,1), ±(1,1), ±(2,2)`.
    DoubledDiagonal,
    /// Anything else: breadth-first search in the base lattice.
    Search,
}

/// Word metric on the base group.
#[derive(Clone, Debug)]
pub struct BaseMetric {
    shape: Shape,
    gens: Vec<BaseVector>,
}

fn same_generating_set(gens: &[BaseVector], target: &[[i64; 2]]) -> bool {
    if gens.len() != target.len() || gens.iter().any(|g| g.rank() != 2) {
        return false;
    }
    target.iter().all(|t| {
        gens.iter().any(|g| (g.0[0] == t[0] && g.0[1] == t[1]) || (g.0[0] == -t[0] && g.0[1] == -t[1]))
    })
}

impl BaseMetric {
    pub fn for_generators(rank: usize, gens: &[BaseVector]) -> Self {
        let shape = if rank == 2 && same_generating_set(gens, &[[1, 0], [0, 1], [1, 1], [1, -1]]) {
            Shape::King
        } else if rank == 2 && same_generating_set(gens, &[[1, 0], [0, 1], [1, 1], [2, 2]]) {
            Shape::DoubledDiagonal
        } else {
            Shape::Search
        };
        BaseMetric { shape, gens: gens.to_vec() }
    }

    /// Whether the norm is computed from a closed form.
    pub fn is_closed_form(&self) -> bool {
        self.shape != Shape::Search
    }

    pub fn norm(&self, v: &BaseVector) -> u64 {
        match self.shape {
            Shape::King => v.0[0].unsigned_abs().max(v.0[1].unsigned_abs()),
            Shape::DoubledDiagonal => {
                let (x, y) = (v.0[0], v.0[1]);
                if (x >= 0) == (y >= 0) || x == 0 || y == 0 {
                    let (p, q) = (x.unsigned_abs().max(y.unsigned_abs()), x.unsigned_abs().min(y.unsigned_abs()));
                    p - q + q.div_ceil(2)
                } else {
                    x.unsigned_abs() + y.unsigned_abs()
                }
            }
            Shape::Search => self.search_norm(v),
        }
    }

    /// Whether this is the Chebyshev norm of the king-move generators.
    pub fn is_king(&self) -> bool {
        self.shape == Shape::King
    }

    /// Norm by breadth-first search over the lattice; exact for any generating set.
    pub fn search_norm(&self, v: &BaseVector) -> u64 {
        self.search(v).len() as u64
    }

    fn letter_for(&self, step: &BaseVector) -> Letter {
        for (i, g) in self.gens.iter().enumerate() {
            if g == step {
                return Letter::base(i as u16, Sign::Pos);
            }
            if &-g == step {
                return Letter::base(i as u16, Sign::Neg);
            }
        }
        unreachable!("step {step:?} is not a generator")
    }

    fn search(&self, v: &BaseVector) -> Word {
        let origin = BaseVector::zero(v.rank());
        let mut parent: FxHashMap<BaseVector, Letter> = FxHashMap::default();
        let mut seen: FxHashMap<BaseVector, ()> = FxHashMap::default();
        seen.insert(origin.clone(), ());
        let mut queue = VecDeque::from([origin]);
        let steps: Vec<(Letter, BaseVector)> = self
            .gens
            .iter()
            .enumerate()
            .flat_map(|(i, g)| [(Letter::base(i as u16, Sign::Pos), g.clone()), (Letter::base(i as u16, Sign::Neg), -g)])
            .collect();
        while let Some(p) = queue.pop_front() {
            if &p == v {
                break;
            }
            for (l, s) in &steps {
                let q = &p + s;
                if seen.insert(q.clone(), ()).is_none() {
                    parent.insert(q.clone(), *l);
                    queue.push_back(q);
                }
            }
        }
        let mut word = Vec::new();
        let mut cur = v.clone();
        while let Some(&l) = parent.get(&cur) {
            word.push(l);
            let step = &steps.iter().find(|(m, _)| *m == l).expect("recorded step").1;
            cur = &cur - step;
        }
        word.reverse();
        Word(word)
    }

    /// A geodesic word over the base generators.
    pub fn geodesic(&self, v: &BaseVector) -> Word {
        let mut w = Word::empty();
        let mut push = |step: [i64; 2], k: i64| {
            if k > 0 {
                let l = self.letter_for(&BaseVector::from_slice(&step));
                w.push_power(l, k as usize);
            }
        };
        match self.shape {
            Shape::King => {
                let (x, y) = (v.0[0], v.0[1]);
                let diag = x.abs().min(y.abs());
                push([x.signum(), y.signum()], diag);
                if x.abs() > y.abs() {
                    push([x.signum(), 0], x.abs() - diag);
                } else {
                    push([0, y.signum()], y.abs() - diag);
                }
            }
            Shape::DoubledDiagonal => {
                let (x, y) = (v.0[0], v.0[1]);
                if x != 0 && y != 0 && (x > 0) != (y > 0) {
                    push([x.signum(), 0], x.abs());
                    push([0, y.signum()], y.abs());
                } else {
                    let sg = if x < 0 || y < 0 { -1 } else { 1 };
                    let q = x.abs().min(y.abs());
                    push([2 * sg, 2 * sg], q / 2);
                    push([sg, sg], q % 2);
                    if x.abs() > y.abs() {
                        push([sg, 0], x.abs() - q);
                    } else {
                        push([0, sg], y.abs() - q);
                    }
                }
            }
            Shape::Search => return self.search(v),
        }
        w
    }
}
