//! Graded Betti numbers of `S/I` from Koszul homology.
//!
//! `β_{i,a}(S/I) = dim H_i(x_1..y_n; S/I)_a`, computed degree by degree in the
//! `Z^n × Z^2` grading `deg x_v = (e_v, 1, 0)`, `deg y_v = (e_v, 0, 1)`, using
//! the normal-form basis of `S/I`. Only degrees below the lcm of the leading
//! monomials can carry homology (the initial ideal's Taylor complex bounds
//! them), so the search is finite. Shares nothing with the resolution code
//! beyond the Gröbner basis.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use bei::poly::{Coeff, Ideal, Monomial, Polynomial, PrimeField};

type Grade = (Vec<u32>, u32);

struct Setup {
    n: usize,
    nvars: usize,
    field: PrimeField,
    gb_leads: Vec<Monomial>,
}

impl Setup {
    fn vertex(&self, var: usize) -> usize {
        var % self.n
    }

    fn is_x(&self, var: usize) -> bool {
        var < self.n
    }

    fn grade_of_set(&self, set: &[usize]) -> Grade {
        let mut a = vec![0; self.n];
        let mut dx = 0;
        for &v in set {
            a[self.vertex(v)] += 1;
            dx += self.is_x(v) as u32;
        }
        (a, dx)
    }

    /// Standard monomials of grade `(a, dx)`.
    fn standard(&self, grade: &Grade) -> Vec<Monomial> {
        let (a, dx) = grade;
        let mut out = Vec::new();
        let mut xs = vec![0u32; self.n];
        self.split(0, a, *dx, &mut xs, &mut out);
        out
    }

    fn split(&self, v: usize, a: &[u32], left: u32, xs: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == self.n {
            if left == 0 {
                let mut exps = vec![0u32; self.nvars];
                for u in 0..self.n {
                    exps[u] = xs[u];
                    exps[self.n + u] = a[u] - xs[u];
                }
                let m = Monomial::from_exponents(&exps);
                if !self.gb_leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
            }
            return;
        }
        for k in 0..=a[v].min(left) {
            xs[v] = k;
            self.split(v + 1, a, left - k, xs, out);
        }
    }
}

fn subsets(nvars: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, nvars: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..nvars {
            cur.push(v);
            go(v + 1, nvars, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, nvars, size, &mut Vec::new(), &mut out);
    out
}

fn rank(field: PrimeField, mut rows: Vec<Vec<Coeff>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]);
        let pivot: Vec<Coeff> = rows[r].iter().map(|&x| field.mul(x, inv)).collect();
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in c..cols {
                    rows[i][k] = field.sub(rows[i][k], field.mul(f, pivot[k]));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Basis of `C_i` in one grade: pairs (variable subset, standard monomial).
fn chain_basis(s: &Setup, grade: &Grade, sets: &[Vec<usize>]) -> Vec<(usize, Monomial)> {
    let mut basis = Vec::new();
    for (k, set) in sets.iter().enumerate() {
        let (sa, sdx) = s.grade_of_set(set);
        if sdx > grade.1 || sa.iter().zip(&grade.0).any(|(x, y)| x > y) {
            continue;
        }
        let rest = (grade.0.iter().zip(&sa).map(|(x, y)| x - y).collect(), grade.1 - sdx);
        for m in s.standard(&rest) {
            basis.push((k, m));
        }
    }
    basis
}

/// Graded Betti numbers `β_{i,j}(S/I)` of a homogeneous binomial-type ideal in
/// `k[x_1..x_n, y_1..y_n]`.
pub fn koszul_betti(ideal: &Ideal) -> BTreeMap<(usize, u32), u64> {
    let ring = ideal.ring();
    let (n, nvars, field) = (ring.n(), ring.nvars(), ring.field());
    let mut out = BTreeMap::new();
    if ideal.is_zero() {
        out.insert((0, 0), 1);
        return out;
    }
    let gb = ideal.gb();
    let s = Setup { n, nvars, field, gb_leads: gb.leading_monomials() };
    let bound: Vec<u32> = (0..nvars).map(|v| s.gb_leads.iter().map(|l| l.exponent(v)).max().unwrap_or(0)).collect();

    // every grade reachable from a fine degree below the bound
    let mut grades: BTreeSet<Grade> = BTreeSet::new();
    let mut fine = vec![0u32; nvars];
    loop {
        let mut a = vec![0; n];
        let mut dx = 0;
        for v in 0..nvars {
            a[s.vertex(v)] += fine[v];
            if s.is_x(v) {
                dx += fine[v];
            }
        }
        grades.insert((a, dx));
        let Some(v) = (0..nvars).find(|&v| fine[v] < bound[v]) else { break };
        fine[v] += 1;
        fine[..v].iter_mut().for_each(|e| *e = 0);
    }

    let sets: Vec<Vec<Vec<usize>>> = (0..=nvars).map(|i| subsets(nvars, i)).collect();
    let set_index: Vec<HashMap<Vec<usize>, usize>> = sets
        .iter()
        .map(|level| level.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect())
        .collect();

    for grade in &grades {
        let bases: Vec<Vec<(usize, Monomial)>> = (0..=nvars).map(|i| chain_basis(&s, grade, &sets[i])).collect();
        // ranks[i] = rank of d_i : C_i -> C_{i-1}
        let mut ranks = vec![0usize; nvars + 2];
        for i in 1..=nvars {
            if bases[i].is_empty() || bases[i - 1].is_empty() {
                continue;
            }
            let target: HashMap<(usize, Monomial), usize> =
                bases[i - 1].iter().enumerate().map(|(c, b)| (*b, c)).collect();
            let rows = bases[i]
                .iter()
                .map(|(k, m)| {
                    let mut row = vec![0; bases[i - 1].len()];
                    let set = &sets[i][*k];
                    for (pos, &v) in set.iter().enumerate() {
                        let mut smaller = set.clone();
                        smaller.remove(pos);
                        let face = set_index[i - 1][&smaller];
                        let sign = if pos % 2 == 0 { 1 } else { field.neg(1) };
                        let prod = Polynomial::monomial(1, *m).mul_term(field, 1, Monomial::var(v));
                        for t in gb.normal_form(&prod).terms() {
                            let c = target[&(face, t.mono)];
                            row[c] = field.add(row[c], field.mul(sign, t.coeff));
                        }
                    }
                    row
                })
                .collect();
            ranks[i] = rank(field, rows);
        }
        let j: u32 = grade.0.iter().sum();
        for i in 0..=nvars {
            let beta = bases[i].len() - ranks[i] - ranks[i + 1];
            if beta > 0 {
                *out.entry((i, j)).or_insert(0) += beta as u64;
            }
        }
    }
    out
}
