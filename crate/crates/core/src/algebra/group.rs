use super::AlgebraError;

/// A finite group by multiplication table, `table[i][j]` being the index of
/// `g_i g_j`. Element 0 is not assumed to be the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    names: Vec<String>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, AlgebraError> {
        let n = table.len();
        let bad = |msg: String| AlgebraError::NotAGroup(msg);
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {i} has length {}", row.len())));
            }
            if let Some(x) = row.iter().find(|&&x| x >= n) {
                return Err(bad(format!("entry {x} out of range in row {i}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| bad(format!("element {g} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => return Err(bad(format!("{} names for {n} elements", v.len()))),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(Group { table, names, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Group::from_table(table, Some(names)).expect("cyclic table")
    }

    /// The symmetric group on `n` points, elements listed in lexicographic order
    /// of their image tuples (so the identity is first). Products compose right
    /// to left: `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&x| s[x]).collect())).collect())
            .collect();
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        Group::from_table(table, Some(names)).expect("symmetric table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Closure of a generating set.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut elems = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !elems.contains(&y) {
                    elems.push(y);
                    frontier.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        (0..self.order()).all(|g| sub.iter().all(|&n| sub.contains(&self.mul(self.mul(g, n), self.inverse(g)))))
    }

    /// Right cosets `Ng`, each listed by sorted members, ordered by smallest member.
    pub fn right_cosets(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut c: Vec<usize> = sub.iter().map(|&n| self.mul(n, g)).collect();
            c.sort_unstable();
            for &x in &c {
                seen[x] = true;
            }
            out.push(c);
        }
        out
    }

    /// Quotient group `G/N` for normal `N`; returns the quotient and the
    /// map sending each element to its coset index.
    pub fn quotient(&self, normal: &[usize]) -> Result<(Group, Vec<usize>), AlgebraError> {
        if !self.is_normal(normal) {
            return Err(AlgebraError::NotAGroup("subgroup is not normal".into()));
        }
        let cosets = self.right_cosets(normal);
        let mut coset_of = vec![0; self.order()];
        for (k, c) in cosets.iter().enumerate() {
            for &g in c {
                coset_of[g] = k;
            }
        }
        let table = cosets
            .iter()
            .map(|a| cosets.iter().map(|b| coset_of[self.mul(a[0], b[0])]).collect())
            .collect();
        let names = cosets.iter().map(|c| format!("{}N", self.names[c[0]])).collect();
        Ok((Group::from_table(table, Some(names))?, coset_of))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        s.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            s.push_str(&(x + 1).to_string());
            x = p[x];
        }
        s.push(')');
    }
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three() {
        let g = Group::symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.names()[0], "e");
        let r = g.index_of("(123)").unwrap();
        let r2 = g.index_of("(132)").unwrap();
        assert_eq!(g.mul(r, r), r2);
        let a3 = g.subgroup_generated(&[r]);
        assert_eq!(a3.len(), 3);
        assert!(g.is_normal(&a3));
        let t = g.index_of("(12)").unwrap();
        assert!(!g.is_normal(&g.subgroup_generated(&[t])));
        let (q, _) = g.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(Group::from_table(vec![vec![0, 0], vec![0, 0]], None).is_err());
        assert!(Group::from_table(vec![vec![0, 1], vec![1, 2]], None).is_err());
    }
}
