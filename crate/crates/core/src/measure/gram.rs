use alloc::vec::Vec;

use super::{inner, MeasureSpec};
use crate::exactnum::PiScalar;
use crate::laurent::LaurentSeries;
use crate::operators::{wavefunctions, Wavefunctions};

/// Outcome of the staggered-basis search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// The admissible `k` split into residue classes mod `step`, each one
    /// mutually orthogonal and continuing past `kmax`.
    Staggered { step: u32 },
    /// No consistent progression. `violation` is the first pair that should
    /// have been orthogonal under the best candidate step, when there is one.
    Inconsistent { violation: Option<(u32, u32)> },
}

#[derive(Clone, Debug)]
pub struct GramReport {
    pub spec: MeasureSpec,
    pub l: u32,
    /// Admissible excitation indices `k ≤ kmax`, ascending.
    pub ks: Vec<u32>,
    /// `matrix[i][j] = ⟨l,ks[i] | l,ks[j]⟩`, unnormalized.
    pub matrix: Vec<Vec<PiScalar>>,
    /// Greedy grouping into mutually orthogonal classes, in seed order.
    pub classes: Vec<Vec<u32>>,
    pub pattern: Pattern,
}

impl GramReport {
    /// The classes, if they form a consistent staggered pattern.
    pub fn partition(&self) -> Option<&[Vec<u32>]> {
        match self.pattern {
            Pattern::Staggered { .. } => Some(&self.classes),
            Pattern::Inconsistent { .. } => None,
        }
    }

    pub fn step(&self) -> Option<u32> {
        match self.pattern {
            Pattern::Staggered { step } => Some(step),
            Pattern::Inconsistent { .. } => None,
        }
    }

    pub fn entry(&self, k1: u32, k2: u32) -> Option<&PiScalar> {
        let i = self.ks.iter().position(|&k| k == k1)?;
        let j = self.ks.iter().position(|&k| k == k2)?;
        Some(&self.matrix[i][j])
    }
}

/// Lazily generated wavefunctions of one oscillator.
struct States {
    stream: Wavefunctions,
    cache: Vec<LaurentSeries>,
}

impl States {
    fn new(l: u32) -> Self {
        States { stream: wavefunctions(l), cache: Vec::new() }
    }

    fn get(&mut self, k: u32) -> &LaurentSeries {
        while self.cache.len() <= k as usize {
            let next = self.stream.next().unwrap_or_default();
            self.cache.push(next);
        }
        &self.cache[k as usize]
    }

    fn bracket(&mut self, spec: MeasureSpec, k1: u32, k2: u32) -> PiScalar {
        let f = self.get(k1).clone();
        let g = self.get(k2);
        // Both states are admissible, so lowest(f) + lowest(g) + n − 1 ≥ 0.
        inner(spec, &f, g).expect("bracket of admissible states is integrable")
    }
}

/// Gram matrix of the admissible states `(l, k)`, `k ≤ kmax`, and the
/// staggered-basis partition it implies.
///
/// Classes are seeded greedily by the smallest unassigned `k` and grown by
/// every later `k` orthogonal to all current members. The grouping counts as
/// a pattern only if, for the step `Δ` of the first multi-member class,
///
/// * the classes are exactly the residue classes of the admissible `k` mod `Δ`;
/// * every class continues: its next term past `kmax` is admissible and
///   orthogonal to all members.
pub fn gram(spec: MeasureSpec, l: u32, kmax: u32) -> GramReport {
    let mut states = States::new(l);
    let ks: Vec<u32> = (0..=kmax).filter(|&k| spec.admits(states.get(k))).collect();
    let mut matrix = alloc::vec![alloc::vec![PiScalar::zero(); ks.len()]; ks.len()];
    for i in 0..ks.len() {
        for j in i..ks.len() {
            let v = states.bracket(spec, ks[i], ks[j]);
            matrix[j][i] = v.clone();
            matrix[i][j] = v;
        }
    }
    let index = |k: u32| ks.iter().position(|&x| x == k).unwrap_or(usize::MAX);
    let orthogonal = |a: u32, b: u32| matrix[index(a)][index(b)].is_zero();
    let classes = greedy_classes(&ks, orthogonal);
    let pattern = verify_pattern(&ks, &classes, |a, b| {
        if !spec.admits(states.get(b)) {
            return None;
        }
        Some(states.bracket(spec, a, b).is_zero())
    });
    GramReport { spec, l, ks, matrix, classes, pattern }
}

pub(crate) fn greedy_classes(ks: &[u32], orthogonal: impl Fn(u32, u32) -> bool) -> Vec<Vec<u32>> {
    let mut assigned = alloc::vec![false; ks.len()];
    let mut classes = Vec::new();
    for (i, &seed) in ks.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut class = alloc::vec![seed];
        for (j, &k) in ks.iter().enumerate().skip(i + 1) {
            if !assigned[j] && class.iter().all(|&m| orthogonal(m, k)) {
                assigned[j] = true;
                class.push(k);
            }
        }
        classes.push(class);
    }
    classes
}

/// `orthogonal(a, b)` answers `None` when `b` is not an admissible state.
pub(crate) fn verify_pattern(
    ks: &[u32],
    classes: &[Vec<u32>],
    mut orthogonal: impl FnMut(u32, u32) -> Option<bool>,
) -> Pattern {
    let Some(step) = classes.iter().find(|c| c.len() >= 2).map(|c| c[1] - c[0]) else {
        let violation = (ks.len() >= 2).then(|| (ks[0], ks[1]));
        return Pattern::Inconsistent { violation };
    };
    let mut residues: Vec<Vec<u32>> = Vec::new();
    for &k in ks {
        match residues.iter_mut().find(|r| r[0] % step == k % step) {
            Some(r) => r.push(k),
            None => residues.push(alloc::vec![k]),
        }
    }
    if residues != classes {
        for r in &residues {
            for (i, &a) in r.iter().enumerate() {
                for &b in &r[i + 1..] {
                    if orthogonal(a, b) == Some(false) {
                        return Pattern::Inconsistent { violation: Some((a, b)) };
                    }
                }
            }
        }
        return Pattern::Inconsistent { violation: None };
    }
    for class in classes {
        let next = class[class.len() - 1] + step;
        for &m in class {
            match orthogonal(m, next) {
                Some(true) => {}
                Some(false) => return Pattern::Inconsistent { violation: Some((m, next)) },
                None => return Pattern::Inconsistent { violation: None },
            }
        }
    }
    Pattern::Staggered { step }
}
