//! Cartan matrices, root systems and reduced words.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("not a Cartan matrix: {0}")]
    Shape(String),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("matrix is not of finite type")]
    NotFinite,
    #[error("unknown Cartan type '{0}'")]
    UnknownType(String),
    #[error("index {0} out of range")]
    Index(usize),
}

/// A finite-type symmetrizable Cartan matrix together with its minimal symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanData {
    pub n: usize,
    pub a: Vec<Vec<i32>>,
    pub d: Vec<i32>,
    pub name: Option<String>,
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{:?}", self.a),
        }
    }
}

impl CartanData {
    /// Checks the shape, computes the minimal symmetrizer and tests finite type.
    pub fn validate(a: Vec<Vec<i32>>) -> Result<CartanData, CartanError> {
        let n = a.len();
        if n == 0 {
            return Err(CartanError::Shape("empty matrix".into()));
        }
        if a.iter().any(|row| row.len() != n) {
            return Err(CartanError::Shape("matrix is not square".into()));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(CartanError::Shape(format!("a_{0}{0} != 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(CartanError::Shape(format!("a_{}{} > 0", i + 1, j + 1)));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(CartanError::Shape(format!(
                        "a_{}{} and a_{}{} differ in vanishing",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let d = symmetrizer(&a).ok_or(CartanError::NotSymmetrizable)?;
        let c = CartanData {
            n,
            a,
            d,
            name: None,
        };
        if !c.is_positive_definite() {
            return Err(CartanError::NotFinite);
        }
        Ok(c)
    }

    /// Named types `A1`..`A4`, `B2`, `B3`, `C3`, `D4`, `G2` (other ranks of A-D also work).
    pub fn from_name(name: &str) -> Result<CartanData, CartanError> {
        let unknown = || CartanError::UnknownType(name.to_string());
        let name = name.trim();
        let (kind, rank) = name.split_at(1.min(name.len()));
        let n: usize = rank.parse().map_err(|_| unknown())?;
        let mut a = vec![vec![0i32; n]; n];
        let chain = |a: &mut Vec<Vec<i32>>| {
            for i in 0..n {
                a[i][i] = 2;
                if i + 1 < n {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
            }
        };
        match kind {
            "A" if n >= 1 => chain(&mut a),
            "B" if n >= 2 => {
                chain(&mut a);
                a[n - 1][n - 2] = -2;
            }
            "C" if n >= 2 => {
                chain(&mut a);
                a[n - 2][n - 1] = -2;
            }
            "D" if n >= 4 => {
                chain(&mut a);
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            "G" if n == 2 => {
                a = vec![vec![2, -1], vec![-3, 2]];
            }
            _ => return Err(unknown()),
        }
        let mut c = Self::validate(a)?;
        c.name = Some(name.to_string());
        Ok(c)
    }

    /// `q_i = q^{d_i}` exponent for node `i` (0-based).
    pub fn di(&self, i: usize) -> u32 {
        self.d[i] as u32
    }

    /// `(α_i, α_j) = d_i a_ij`.
    pub fn sym(&self, i: usize, j: usize) -> i32 {
        self.d[i] * self.a[i][j]
    }

    /// Symmetrized form `Σ d_i u_i (Σ_j a_ij v_j)`.
    pub fn inner(&self, u: &[i32], v: &[i32]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.n {
            for j in 0..self.n {
                s += (u[i] as i64) * (self.sym(i, j) as i64) * (v[j] as i64);
            }
        }
        s
    }

    fn is_positive_definite(&self) -> bool {
        let n = self.n;
        let m: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| self.sym(i, j) as i128).collect())
            .collect();
        (1..=n).all(|k| bareiss_det(&m, k) > 0)
    }

    /// Simple reflection `s_i(v) = v - (Σ_j a_ij v_j) α_i`, `i` 0-based.
    pub fn reflect(&self, i: usize, v: &[i32]) -> Vec<i32> {
        let c: i32 = (0..self.n).map(|j| self.a[i][j] * v[j]).sum();
        let mut w = v.to_vec();
        w[i] -= c;
        w
    }

    pub fn simple_root(&self, i: usize) -> Vec<i32> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    pub fn positive_roots(&self) -> RootSystem {
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..self.n {
            let r = self.simple_root(i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..self.n {
                let s = self.reflect(i, &r);
                if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && seen.insert(s.clone())
                {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<Vec<i32>> = seen.into_iter().collect();
        roots.sort_by(|x, y| {
            let hx: i32 = x.iter().sum();
            let hy: i32 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });
        RootSystem { roots }
    }

    /// Applies the Weyl word `w = s_{i_1} ... s_{i_k}` to `v` (rightmost first).
    pub fn apply_word(&self, word: &[usize], v: &[i32]) -> Vec<i32> {
        word.iter().rev().fold(v.to_vec(), |acc, &i| self.reflect(i, &acc))
    }

    /// Reduced word for the longest element, built by always appending the
    /// smallest index that lengthens the current element.
    pub fn longest_word(&self) -> WeylWord {
        let mut word: Vec<usize> = Vec::new();
        loop {
            // w s_i is longer than w iff w(α_i) > 0
            let next = (0..self.n).find(|&i| {
                let img = self.apply_word(&word, &self.simple_root(i));
                img.iter().all(|&x| x >= 0)
            });
            match next {
                Some(i) => word.push(i),
                None => break,
            }
        }
        WeylWord {
            indices: word,
            reduced: true,
        }
    }

    /// Roots `β_k = s_{i_1}...s_{i_{k-1}}(α_{i_k})` along a word.
    pub fn roots_along(&self, word: &[usize]) -> Vec<Vec<i32>> {
        (0..word.len())
            .map(|k| self.apply_word(&word[..k], &self.simple_root(word[k])))
            .collect()
    }

    /// Number of positive roots made negative by `s_{i_1}...s_{i_k}`.
    pub fn inversions(&self, word: &[usize]) -> usize {
        self.positive_roots()
            .roots
            .iter()
            .filter(|r| self.apply_word(word, r).iter().any(|&x| x < 0))
            .count()
    }

    /// Order of `s_i s_j` for `i != j`.
    pub fn order_m(&self, i: usize, j: usize) -> Result<u32, CartanError> {
        if i == j {
            return Err(CartanError::Index(i + 1));
        }
        Ok(match self.a[i][j] * self.a[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => return Err(CartanError::NotFinite),
        })
    }

    /// Number of multisets of positive roots summing to `nu`.
    pub fn kostant_count(&self, nu: &[i32]) -> u64 {
        kostant_with(&self.positive_roots().roots, nu)
    }

    /// Cartan submatrix on the given 0-based nodes.
    pub fn restrict(&self, nodes: &[usize]) -> CartanData {
        let a = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.a[i][j]).collect())
            .collect();
        let d = nodes.iter().map(|&i| self.d[i]).collect();
        CartanData {
            n: nodes.len(),
            a,
            d,
            name: None,
        }
    }

    /// Connected components of the Dynkin graph restricted to `support` (0-based).
    pub fn equivalence_classes(&self, support: &[usize]) -> Vec<Vec<usize>> {
        let mut nodes: Vec<usize> = support.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let mut comp: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &s in &nodes {
            if comp.contains_key(&s) {
                continue;
            }
            let id = classes.len();
            let mut class = vec![];
            let mut stack = vec![s];
            comp.insert(s, id);
            while let Some(x) = stack.pop() {
                class.push(x);
                for &y in &nodes {
                    if self.a[x][y] != 0 && !comp.contains_key(&y) {
                        comp.insert(y, id);
                        stack.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Stable identifier used in cache keys.
    pub fn key(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => {
                use sha2::{Digest, Sha256};
                let text = serde_json::to_string(&self.a).expect("matrix serializes");
                let digest = Sha256::digest(text.as_bytes());
                let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
                format!("m{hex}")
            }
        }
    }
}

/// Multiset count of `roots` summing to `nu`, by dynamic programming over roots.
pub fn kostant_with(roots: &[Vec<i32>], nu: &[i32]) -> u64 {
    if nu.iter().any(|&x| x < 0) {
        return 0;
    }
    let dims: Vec<usize> = nu.iter().map(|&x| x as usize + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[i32]| -> usize {
        let mut idx = 0;
        for (k, &x) in v.iter().enumerate() {
            idx = idx * dims[k] + x as usize;
        }
        idx
    };
    let decode = |mut idx: usize| -> Vec<i32> {
        let mut v = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            v[k] = (idx % dims[k]) as i32;
            idx /= dims[k];
        }
        v
    };
    let mut ways = vec![0u64; size];
    ways[0] = 1;
    for r in roots {
        // unbounded knapsack: iterate targets in increasing order
        for idx in 0..size {
            let v = decode(idx);
            let prev: Vec<i32> = v.iter().zip(r).map(|(a, b)| a - b).collect();
            if prev.iter().all(|&x| x >= 0) {
                ways[idx] += ways[index(&prev)];
            }
        }
    }
    ways[size - 1]
}

fn symmetrizer(a: &[Vec<i32>]) -> Option<Vec<i32>> {
    let n = a.len();
    // d_j / d_i = a_ij / a_ji along edges; propagate rationals by BFS per component.
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        num[s] = 1;
        den[s] = 1;
        comp[s] = ncomp;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let (nj, dj) = reduce(num[i] * a[i][j] as i64, den[i] * a[j][i] as i64);
                if comp[j] == usize::MAX {
                    comp[j] = ncomp;
                    num[j] = nj;
                    den[j] = dj;
                    queue.push_back(j);
                } else if num[j] * dj != nj * den[j] {
                    return None;
                }
            }
        }
        ncomp += 1;
    }
    let mut d = vec![0i32; n];
    for c in 0..ncomp {
        let members: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
        let l = members.iter().fold(1i64, |acc, &i| acc.lcm(&den[i]));
        let vals: Vec<i64> = members.iter().map(|&i| num[i] * (l / den[i])).collect();
        let g = vals.iter().fold(0i64, |acc, &v| acc.gcd(&v));
        for (k, &i) in members.iter().enumerate() {
            let v = vals[k] / g;
            if v <= 0 {
                return None;
            }
            d[i] = v as i32;
        }
    }
    Some(d)
}

fn reduce(n: i64, d: i64) -> (i64, i64) {
    let g = n.gcd(&d);
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    (n, d)
}

/// Leading principal `k x k` minor by fraction-free elimination.
fn bareiss_det(m: &[Vec<i128>], k: usize) -> i128 {
    let mut a: Vec<Vec<i128>> = (0..k).map(|i| m[i][..k].to_vec()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            let Some(r) = (p + 1..k).find(|&r| a[r][p] != 0) else {
                return 0;
            };
            a.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    /// Positive roots in the simple-root basis, ordered by height.
    pub roots: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn ell0(&self) -> usize {
        self.roots.len()
    }
}

/// A word in the simple reflections, 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylWord {
    pub indices: Vec<usize>,
    pub reduced: bool,
}

impl WeylWord {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// 1-based indices, as printed.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrizers() {
        assert_eq!(CartanData::from_name("A2").unwrap().d, vec![1, 1]);
        let b2 = CartanData::validate(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(b2.d, vec![1, 2]);
        assert_eq!(b2.d[0] * b2.a[0][1], b2.d[1] * b2.a[1][0]);
        assert_eq!(CartanData::from_name("G2").unwrap().d, vec![3, 1]);
        assert_eq!(CartanData::from_name("B3").unwrap().d, vec![2, 2, 1]);
        assert_eq!(CartanData::from_name("C3").unwrap().d, vec![1, 1, 2]);
        assert_eq!(CartanData::from_name("D4").unwrap().d, vec![1, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(matches!(
            CartanData::validate(vec![vec![2, -1], vec![0, 2]]),
            Err(CartanError::Shape(_))
        ));
        // affine A1
        assert_eq!(
            CartanData::validate(vec![vec![2, -2], vec![-2, 2]]),
            Err(CartanError::NotFinite)
        );
        // a cycle whose products of ratios do not close up
        assert_eq!(
            CartanData::validate(vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]),
            Err(CartanError::NotSymmetrizable)
        );
        assert!(CartanData::from_name("X9").is_err());
    }

    #[test]
    fn reflections() {
        let a2 = CartanData::from_name("A2").unwrap();
        assert_eq!(a2.reflect(0, &[1, 0]), vec![-1, 0]);
        assert_eq!(a2.reflect(0, &[0, 1]), vec![1, 1]);
    }

    #[test]
    fn root_counts() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
        ] {
            let c = CartanData::from_name(name).unwrap();
            assert_eq!(c.positive_roots().ell0(), count, "{name}");
            let w = c.longest_word();
            assert_eq!(w.len(), count, "{name}");
            assert_eq!(c.inversions(&w.indices), count, "{name}");
        }
        let a2 = CartanData::from_name("A2").unwrap();
        assert_eq!(
            a2.positive_roots().roots,
            vec![vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        assert_eq!(a2.longest_word().one_based(), vec![1, 2, 1]);
    }

    #[test]
    fn roots_along_longest_word_are_all_positive_roots() {
        for name in ["A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
            let c = CartanData::from_name(name).unwrap();
            let mut along = c.roots_along(&c.longest_word().indices);
            along.sort();
            let mut all = c.positive_roots().roots;
            all.sort();
            assert_eq!(along, all, "{name}");
        }
    }

    #[test]
    fn kostant_examples() {
        let a2 = CartanData::from_name("A2").unwrap();
        assert_eq!(a2.kostant_count(&[1, 1]), 2);
        assert_eq!(a2.kostant_count(&[2, 2]), 3);
        assert_eq!(a2.kostant_count(&[2, 1]), 2);
        assert_eq!(a2.kostant_count(&[0, 0]), 1);
        assert_eq!(CartanData::from_name("G2").unwrap().kostant_count(&[0, 0]), 1);
    }

    #[test]
    fn braid_orders() {
        assert_eq!(CartanData::from_name("A2").unwrap().order_m(0, 1), Ok(3));
        assert_eq!(CartanData::from_name("B2").unwrap().order_m(0, 1), Ok(4));
        assert_eq!(CartanData::from_name("G2").unwrap().order_m(0, 1), Ok(6));
        assert_eq!(CartanData::from_name("A3").unwrap().order_m(0, 2), Ok(2));
        assert!(CartanData::from_name("A3").unwrap().order_m(1, 1).is_err());
    }

    #[test]
    fn classes() {
        let a3 = CartanData::from_name("A3").unwrap();
        assert_eq!(a3.equivalence_classes(&[0, 2]), vec![vec![0], vec![2]]);
        assert_eq!(a3.equivalence_classes(&[0, 1, 2]), vec![vec![0, 1, 2]]);
        assert!(a3.equivalence_classes(&[]).is_empty());
        let a2 = CartanData::from_name("A2").unwrap();
        assert_eq!(a2.equivalence_classes(&[0, 1]), vec![vec![0, 1]]);
    }

    #[test]
    fn matrix_key_is_stable() {
        let mut b2 = CartanData::from_name("B2").unwrap();
        b2.name = None;
        assert_eq!(b2.key(), b2.clone().key());
        assert!(b2.key().starts_with('m'));
    }
}
