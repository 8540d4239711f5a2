//! Linear-algebra dimension count, independent of the completion code.
//!
//! The quotient of `span{words of length <= m}` by `span{u r v : |u|+|r|+|v| <= m}`
//! is computed block by block (one block per multidegree) with exact rational
//! elimination after substituting a value for `q`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{Letter, Presentation, Word};
use crate::coeff::{CoeffError, Rational};

type Row = Vec<(u32, Rational)>;

fn all_words(letters: &[Letter], maxlen: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in letters {
                next.push(w.concat(&[l]));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Rank of a set of sparse rows by forward elimination on the largest column.
fn rank(mut rows: Vec<Row>) -> usize {
    let mut pivots: HashMap<u32, Row> = HashMap::new();
    for row in rows.drain(..) {
        let mut work: BTreeMap<u32, Rational> = row.into_iter().collect();
        while let Some((&lead, _)) = work.iter().next_back() {
            match pivots.get(&lead) {
                Some(p) => {
                    let c = work[&lead].clone();
                    for (col, a) in p {
                        let v = work.entry(*col).or_insert_with(Rational::zero);
                        *v -= &c * a;
                        if v.is_zero() {
                            work.remove(col);
                        }
                    }
                }
                None => {
                    let inv = work[&lead].recip();
                    let row: Row = work.into_iter().rev().map(|(k, v)| (k, v * &inv)).collect();
                    debug_assert!(row[0].1.is_one());
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dimension of each multidegree component of words of length at most
/// `maxlen` modulo the two-sided relation span truncated at `maxlen`.
pub fn dimension_oracle(
    p: &Presentation,
    maxlen: usize,
    qval: &Rational,
) -> Result<BTreeMap<Vec<i32>, u64>, CoeffError> {
    let n = p.rank();
    let letters = Letter::alphabet(n);
    let words = all_words(&letters, maxlen);

    let mut blocks: BTreeMap<Vec<i32>, Vec<Word>> = BTreeMap::new();
    for w in &words {
        blocks.entry(w.multidegree(n)).or_default().push(w.clone());
    }
    let mut ids: HashMap<Word, (Vec<i32>, u32)> = HashMap::new();
    for (deg, ws) in blocks.iter_mut() {
        ws.sort();
        for (k, w) in ws.iter().enumerate() {
            ids.insert(w.clone(), (deg.clone(), k as u32));
        }
    }

    let mut rels: Vec<(usize, Vec<(Word, Rational)>)> = Vec::new();
    for r in p.elements() {
        let mut terms = Vec::new();
        for (w, c) in r.terms() {
            let v = c.eval_at(qval)?;
            if !v.is_zero() {
                terms.push((w.clone(), v));
            }
        }
        if !terms.is_empty() {
            rels.push((r.max_len(), terms));
        }
    }

    let mut rows: BTreeMap<Vec<i32>, Vec<Row>> = BTreeMap::new();
    for (len, terms) in &rels {
        if *len > maxlen {
            continue;
        }
        let slack = maxlen - len;
        for u in words.iter().filter(|u| u.len() <= slack) {
            for v in words.iter().filter(|v| u.len() + v.len() <= slack) {
                let mut row: Row = Vec::with_capacity(terms.len());
                let mut deg = None;
                for (w, c) in terms {
                    let full = u.concat(w).concat(v);
                    let (d, id) = &ids[&full];
                    deg.get_or_insert_with(|| d.clone());
                    row.push((*id, c.clone()));
                }
                rows.entry(deg.expect("nonempty relation")).or_default().push(row);
            }
        }
    }

    let dims: Vec<(Vec<i32>, u64)> = blocks
        .par_iter()
        .map(|(deg, ws)| {
            let r = rows.get(deg).cloned().map(rank).unwrap_or(0);
            (deg.clone(), (ws.len() - r) as u64)
        })
        .collect();
    Ok(dims.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TypeSequence;
    use crate::cartan::CartanData;
    use crate::coeff::rat;

    #[test]
    fn free_algebra_counts_every_word() {
        assert_eq!(all_words(&[Letter::J], 3).len(), 4);
        let mut p = Presentation::build(
            &CartanData::from_name("A1").unwrap(),
            &TypeSequence::uniform(1, true),
        );
        p.relations.clear();
        let dims = dimension_oracle(&p, 2, &rat(5, 3)).unwrap();
        assert_eq!(dims.values().sum::<u64>(), 1 + 5 + 25);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let r = |v: &[(u32, i64)]| -> Row { v.iter().map(|&(k, c)| (k, rat(c, 1))).collect() };
        let rows = vec![r(&[(2, 1), (1, 1)]), r(&[(1, 1), (0, 1)]), r(&[(2, 1), (0, -1)])];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn a1_torus_block() {
        let p = Presentation::build(
            &CartanData::from_name("A1").unwrap(),
            &TypeSequence::uniform(1, true),
        );
        let dims = dimension_oracle(&p, 2, &rat(5, 3)).unwrap();
        // 15 degree-0 words of length <= 2, six independent relations among them
        assert_eq!(dims[&vec![0]], 9);
        // E, E*Kb, E*K, E*J, Kb*E, K*E, J*E and two type-1 relations
        assert_eq!(dims[&vec![1]], 7 - 2);
    }
}
