//! Character tables by Dixon's method.
//!
//! The class sums act on the centre of the group algebra; their simultaneous
//! eigenvectors are the central characters. We diagonalize the structure-constant
//! matrices over `F_p` for a prime `p ≡ 1 (mod exp G)`, recover each character mod `p`,
//! and lift to `Q(ζ_e)` through the eigenvalue multiplicities of each element.

use num_integer::Integer;
use num_rational::Ratio;

use super::cyclotomic::{factorize, Cyclotomic};
use super::table::{CharacterTable, TableClass};
use crate::error::{Error, Result};
use crate::perm::{ClassPartition, IndexedGroup, PermGroup};

pub fn dixon_table(g: &PermGroup, cap: usize) -> Result<CharacterTable> {
    let ig = IndexedGroup::new(g, cap)?;
    let classes = ClassPartition::new(&ig);
    table_of_indexed(&ig, &classes)
}

/// Character table with columns in the order of `classes`.
pub fn table_of_indexed(ig: &IndexedGroup, classes: &ClassPartition) -> Result<CharacterTable> {
    let order = ig.len() as u64;
    let r = classes.len();
    let exponent = classes
        .classes
        .iter()
        .fold(1u64, |acc, c| acc.lcm(&c.element_order));
    let table_classes: Vec<TableClass> = classes
        .classes
        .iter()
        .map(|c| TableClass {
            size: c.size() as u128,
            rep_order: c.element_order,
        })
        .collect();

    if r == 1 {
        return Ok(CharacterTable {
            group_order: order as u128,
            classes: table_classes,
            irreducibles: vec![vec![Cyclotomic::one(exponent as u32)]],
        });
    }

    // c[i][j][k] = #{x in C_i : x^-1 g_k in C_j}
    let mut structure = vec![vec![vec![0u64; r]; r]; r];
    for (k, ck) in classes.classes.iter().enumerate() {
        for x in 0..ig.len() as u32 {
            let i = classes.class_of[x as usize] as usize;
            let j = classes.class_of[ig.mul(ig.inv(x), ck.rep) as usize] as usize;
            structure[i][j][k] += 1;
        }
    }

    let floor_sqrt = (order as f64).sqrt() as u64 + 1;
    let mut p = exponent + 1;
    while p <= 2 * floor_sqrt || !is_prime(p) {
        p += exponent;
    }
    let mut last_err = None;
    for _ in 0..16 {
        match attempt(ig, classes, &structure, exponent, p, &table_classes) {
            Ok(t) => return Ok(t),
            Err(e) => last_err = Some(e),
        }
        p += exponent;
        while !is_prime(p) {
            p += exponent;
        }
    }
    Err(last_err.unwrap())
}

fn attempt(
    ig: &IndexedGroup,
    classes: &ClassPartition,
    structure: &[Vec<Vec<u64>>],
    exponent: u64,
    p: u64,
    table_classes: &[TableClass],
) -> Result<CharacterTable> {
    let r = classes.len();
    let order = ig.len() as u64;
    let fail = |m: &str| Error::Inconsistency(format!("Dixon splitting mod {p}: {m}"));

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity(r)];
    for mat in structure.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat: Vec<Vec<u64>> = mat.iter().map(|row| row.iter().map(|&v| v % p).collect()).collect();
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let split = split_space(&mat, &basis, p).ok_or_else(|| fail("matrix not diagonalizable"))?;
            next.extend(split);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(fail("class sums do not separate characters"));
    }

    let inv_class: Vec<usize> = (0..r).map(|k| classes.inverse_class(ig, k)).collect();
    let sizes: Vec<u64> = classes.classes.iter().map(|c| c.size() as u64).collect();
    let root = primitive_root(p);
    let z = pow_mod(root, (p - 1) / exponent, p);
    let n = exponent as u32;

    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(fail("central character vanishes at the identity"));
        }
        let v0 = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| x * v0 % p).collect();
        let mut s = 0u64;
        for k in 0..r {
            s = (s + w[k] * w[inv_class[k]] % p * inv_mod(sizes[k] % p, p)) % p;
        }
        if s == 0 {
            return Err(fail("degenerate norm"));
        }
        let d2 = order % p * inv_mod(s, p) % p;
        let d = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| d * d % p == d2 && order.is_multiple_of(d))
            .ok_or_else(|| fail("no admissible degree"))?;
        let chi: Vec<u64> = (0..r)
            .map(|k| w[k] * (d % p) % p * inv_mod(sizes[k] % p, p) % p)
            .collect();

        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = classes.classes[k].element_order;
            let zo = pow_mod(z, exponent / o, p);
            let zo_inv = inv_mod(zo, p);
            let powers: Vec<u64> = (0..o).map(|j| chi[classes.power_class(ig, k, j)]).collect();
            let o_inv = inv_mod(o % p, p);
            let mut terms = Vec::new();
            for l in 0..o {
                let step = pow_mod(zo_inv, l, p);
                let mut acc = 0u64;
                let mut t = 1u64;
                for &val in &powers {
                    acc = (acc + val * t) % p;
                    t = t * step % p;
                }
                let mu = acc * o_inv % p;
                if mu > d {
                    return Err(fail("eigenvalue multiplicity out of range"));
                }
                if mu > 0 {
                    terms.push(((l * (exponent / o)) as i64, Ratio::from_integer(mu as i128)));
                }
            }
            row.push(Cyclotomic::from_powers(n, terms));
        }
        rows.push(row);
    }

    rows.sort_by(|a, b| {
        let da = a[0].as_integer();
        let db = b[0].as_integer();
        let ta = a.iter().all(|x| x.as_integer() == Some(1));
        let tb = b.iter().all(|x| x.as_integer() == Some(1));
        da.cmp(&db).then(tb.cmp(&ta)).then_with(|| a.cmp(b))
    });
    let table = CharacterTable {
        group_order: order as u128,
        classes: table_classes.to_vec(),
        irreducibles: rows,
    };
    table.validate()?;
    Ok(table)
}

fn identity(r: usize) -> Vec<Vec<u64>> {
    (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()
}

/// Splits the span of `basis` (rows, in reduced echelon form) into eigenspaces of the
/// transpose action `v ↦ M v` restricted to it.
fn split_space(mat: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let r = mat.len();
    let d = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).unwrap())
        .collect();
    // Column s of `restricted` holds the coordinates of M b_s.
    let mut restricted = vec![vec![0u64; d]; d];
    for (s, b) in basis.iter().enumerate() {
        let image: Vec<u64> = (0..r)
            .map(|row| mat[row].iter().zip(b).fold(0, |acc, (&m, &x)| (acc + m * x) % p))
            .collect();
        for (t, &pv) in pivots.iter().enumerate() {
            restricted[t][s] = image[pv];
        }
    }
    let eigen = eigenvalues(&restricted, p);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in eigen {
        let mut shifted = restricted.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + p - lambda) % p;
        }
        let kernel = nullspace(&shifted, p);
        total += kernel.len();
        let vectors: Vec<Vec<u64>> = kernel
            .iter()
            .map(|coords| {
                let mut v = vec![0u64; r];
                for (c, b) in coords.iter().zip(basis) {
                    for (vi, &bi) in v.iter_mut().zip(b) {
                        *vi = (*vi + c * bi) % p;
                    }
                }
                v
            })
            .collect();
        out.push(echelon(vectors, p));
    }
    (total == d).then_some(out)
}

/// Distinct roots in `F_p` of the characteristic polynomial.
fn eigenvalues(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let poly = charpoly(m, p);
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

/// Characteristic polynomial by Hessenberg reduction, lowest degree first.
fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m.to_vec();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = inv_mod(h[col + 1][col], p);
        for i in col + 2..n {
            let f = h[i][col] * inv % p;
            if f == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = (h[i][j] + p - f * h[col + 1][j] % p) % p;
            }
            for row in h.iter_mut() {
                row[col + 1] = (row[col + 1] + f * row[i]) % p;
            }
        }
    }
    // polys[k] = charpoly of leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let mut next = vec![0u64; k + 2];
        // (x - h[k][k]) * polys[k]
        for (i, &c) in polys[k].iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - h[k][k] * c % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = prod * h[i + 1][i] % p;
            let coeff = prod * h[i][k] % p;
            for (t, &c) in polys[i].iter().enumerate() {
                next[t] = (next[t] + p - coeff * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..n).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(row, piv);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..n {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - f * a[row][j] % p) % p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - a[i][f]) % p;
            }
            v
        })
        .collect()
}

fn echelon(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primitive_root(p: u64) -> u64 {
    let factors: Vec<u64> = factorize((p - 1) as u32).into_iter().map(|(q, _)| q as u64).collect();
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::named;

    fn degrees(g: &PermGroup) -> Vec<i128> {
        dixon_table(g, 10_000).unwrap().degrees()
    }

    #[test]
    fn small_groups() {
        assert_eq!(degrees(&named::symmetric(3)), vec![1, 1, 2]);
        assert_eq!(degrees(&named::alternating(5)), vec![1, 3, 3, 4, 5]);
        assert_eq!(degrees(&named::symmetric(4)), vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees(&named::dihedral(4)), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn cyclic_four_has_powers_of_i() {
        let t = dixon_table(&named::cyclic(4), 100).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1);
        let mut found = 0;
        for row in &t.irreducibles {
            for (k, x) in row.iter().enumerate() {
                let ok = (0..4).any(|e| i.pow(e) == *x);
                assert!(ok, "entry {x} in class {k}");
            }
            if row.iter().any(|x| x.as_rational().is_none()) {
                found += 1;
            }
        }
        assert_eq!(found, 2);
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of x^2 - 3x + 2 over F_7
        let m = vec![vec![0, 5], vec![1, 3]];
        assert_eq!(charpoly(&m, 7), vec![2, 4, 1]);
        let mut e = eigenvalues(&m, 7);
        e.sort();
        assert_eq!(e, vec![1, 2]);
    }
}
