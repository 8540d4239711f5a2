//! Truncated completion: critical pairs are processed by degree, then by
//! overlap word, so the outcome depends only on the input and the order.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use super::{add_to_pool, orient_element, Measure, RewriteError, RewriteRule};
use crate::algebra::{Element, Letter, Word};
use crate::coeff::Coeff;

enum Kind {
    Seed(usize),
    Pair { a: usize, b: usize, k: usize },
}

struct Task {
    degree: usize,
    word: Word,
    seq: u64,
    kind: Kind,
}

impl PartialEq for Task {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Task {}
impl PartialOrd for Task {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Task {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, &self.word, self.seq).cmp(&(other.degree, &other.word, other.seq))
    }
}

struct Completer {
    measure: Measure,
    bound: usize,
    cap: usize,
    rules: Vec<Option<RewriteRule>>,
    index: HashMap<Word, usize>,
    lens: BTreeMap<usize, usize>,
    queue: BinaryHeap<Reverse<Task>>,
    seeds: Vec<Option<Element>>,
    seq: u64,
}

impl Completer {
    fn push(&mut self, degree: usize, word: Word, kind: Kind) {
        self.seq += 1;
        self.queue.push(Reverse(Task {
            degree,
            word,
            seq: self.seq,
            kind,
        }));
    }

    fn push_seed(&mut self, x: Element) {
        let Some((w, _)) = x.leading() else { return };
        let (degree, word) = (self.degree_of(&x), w.clone());
        self.seeds.push(Some(x));
        self.push(degree, word, Kind::Seed(self.seeds.len() - 1));
    }

    fn degree_of(&self, x: &Element) -> usize {
        x.terms().map(|(w, _)| self.measure.of(w)).max().unwrap_or(0)
    }

    fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &l in self.lens.keys() {
                if start + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[start..start + l]) {
                    return Some((start, r));
                }
            }
        }
        None
    }

    fn reduce(&self, x: Element) -> Element {
        let mut pool: BTreeMap<Word, Coeff> = x.into_terms();
        let mut out = Element::zero();
        while let Some((w, c)) = pool.pop_last() {
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, r)) => {
                    let rule = self.rules[r].as_ref().expect("indexed rules are alive");
                    let (pre, post) = (&w[..pos], &w[pos + rule.lhs.len()..]);
                    for (v, a) in rule.rhs.terms() {
                        let mut nw: Vec<Letter> = Vec::with_capacity(pre.len() + v.len() + post.len());
                        nw.extend_from_slice(pre);
                        nw.extend_from_slice(v);
                        nw.extend_from_slice(post);
                        add_to_pool(&mut pool, nw.into(), &c * a);
                    }
                }
            }
        }
        out
    }

    fn kill(&mut self, r: usize) {
        let rule = self.rules[r].take().expect("rule alive");
        self.index.remove(&rule.lhs);
        let n = self.lens.get_mut(&rule.lhs.len()).expect("length tracked");
        *n -= 1;
        if *n == 0 {
            self.lens.remove(&rule.lhs.len());
        }
        self.push_seed(Element::word(rule.lhs).sub(&rule.rhs));
    }

    fn add_rule(&mut self, x: &Element) -> Result<(), RewriteError> {
        let rule = orient_element(x).expect("nonzero");
        let lhs_deg = self.measure.of(&rule.lhs);
        if rule.rhs.terms().any(|(w, _)| self.measure.of(w) > lhs_deg) {
            return Err(RewriteError::NonMonotone {
                lhs: rule.lhs.to_string(),
            });
        }
        if rule.lhs.len() > self.cap {
            return Err(RewriteError::Diverged {
                len: rule.lhs.len(),
                cap: self.cap,
            });
        }
        // rules whose left side contains the new one are superseded
        let doomed: Vec<usize> = self
            .rules
            .iter()
            .enumerate()
            .filter_map(|(k, r)| {
                r.as_ref()
                    .filter(|r| r.lhs.find(&rule.lhs).is_some())
                    .map(|_| k)
            })
            .collect();
        for k in doomed {
            self.kill(k);
        }
        let id = self.rules.len();
        self.index.insert(rule.lhs.clone(), id);
        *self.lens.entry(rule.lhs.len()).or_insert(0) += 1;
        let lhs = rule.lhs.clone();
        self.rules.push(Some(rule));

        let alive: Vec<(usize, Word)> = self
            .rules
            .iter()
            .enumerate()
            .filter_map(|(k, r)| r.as_ref().map(|r| (k, r.lhs.clone())))
            .collect();
        for (k, other) in alive {
            self.overlaps(id, &lhs, k, &other);
            if k != id {
                self.overlaps(k, &other, id, &lhs);
            }
        }
        Ok(())
    }

    /// Proper overlaps where a suffix of `la` is a prefix of `lb`.
    fn overlaps(&mut self, a: usize, la: &Word, b: usize, lb: &Word) {
        let max = la.len().min(lb.len());
        for k in 1..max {
            if la[la.len() - k..] == lb[..k] {
                let w = la.concat(&lb[k..]);
                let degree = self.measure.of(&w);
                if degree <= self.bound {
                    self.push(degree, w, Kind::Pair { a, b, k });
                }
            }
        }
    }

    fn s_element(&self, a: usize, b: usize, k: usize) -> Option<Element> {
        let ra = self.rules[a].as_ref()?;
        let rb = self.rules[b].as_ref()?;
        let c = Word::from(&rb.lhs[k..]);
        let pre = Word::from(&ra.lhs[..ra.lhs.len() - k]);
        let mut s = Element::zero();
        for (w, x) in ra.rhs.terms() {
            s.add_term(w.concat(&c), x.clone());
        }
        for (w, x) in rb.rhs.terms() {
            s.add_term(pre.concat(w), -x);
        }
        Some(s)
    }

    fn run(&mut self) -> Result<(), RewriteError> {
        while let Some(Reverse(task)) = self.queue.pop() {
            let x = match task.kind {
                Kind::Seed(id) => match self.seeds[id].take() {
                    Some(x) => x,
                    None => continue,
                },
                Kind::Pair { a, b, k } => match self.s_element(a, b, k) {
                    Some(x) => x,
                    None => continue,
                },
            };
            let r = self.reduce(x);
            if !r.is_zero() {
                self.add_rule(&r)?;
            }
        }
        Ok(())
    }
}

/// Completes the relations `seeds` up to `bound` under `measure`.
pub(super) fn run(
    seeds: Vec<Element>,
    measure: Measure,
    bound: usize,
) -> Result<Vec<RewriteRule>, RewriteError> {
    let mut c = Completer {
        measure,
        bound,
        cap: 4 * bound + 8,
        rules: Vec::new(),
        index: HashMap::new(),
        lens: BTreeMap::new(),
        queue: BinaryHeap::new(),
        seeds: Vec::new(),
        seq: 0,
    };
    for s in seeds {
        c.push_seed(s);
    }
    c.run()?;
    // inter-reduce right sides
    let alive: Vec<RewriteRule> = c.rules.iter().flatten().cloned().collect();
    let mut out = Vec::with_capacity(alive.len());
    for r in alive {
        let rhs = c.reduce(r.rhs);
        out.push(RewriteRule { lhs: r.lhs, rhs });
    }
    out.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    Ok(out)
}
