//! ASMs rebuilt from monotone triangles, an enumeration independent of the
//! library's own generator.

use std::collections::BTreeSet;

use refine_core::asm::{count_asms, enumerate_asms};

/// Rows of strictly increasing integers in `1..=n`, each interlacing the
/// next, ending with `1..=n`. Built bottom up.
fn monotone_triangles(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn shorter(row: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for w in row.windows(2) {
            let mut next = Vec::new();
            for prefix in &out {
                for v in w[0]..=w[1] {
                    if prefix.last().is_none_or(|&p| p < v) {
                        let mut p = prefix.clone();
                        p.push(v);
                        next.push(p);
                    }
                }
            }
            out = next;
        }
        out
    }
    let mut partial = vec![vec![(1..=n).collect::<Vec<_>>()]];
    for _ in 1..n {
        partial = partial
            .into_iter()
            .flat_map(|t| {
                shorter(t.last().unwrap()).into_iter().map(move |r| {
                    let mut t = t.clone();
                    t.push(r);
                    t
                })
            })
            .collect();
    }
    partial
        .into_iter()
        .map(|mut t| {
            t.reverse();
            t
        })
        .collect()
}

fn to_asm(n: usize, t: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let mut prev = vec![0i64; n];
    t.iter()
        .map(|row| {
            let mut cur = vec![0i64; n];
            for &v in row {
                cur[v - 1] = 1;
            }
            let r: Vec<i64> = cur.iter().zip(&prev).map(|(a, b)| a - b).collect();
            prev = cur;
            r
        })
        .collect()
}

#[test]
fn same_matrices_as_the_generator() {
    for n in 1..=5 {
        let from_triangles: BTreeSet<_> = monotone_triangles(n).iter().map(|t| to_asm(n, t)).collect();
        let generated: BTreeSet<_> = enumerate_asms(n).map(|a| a.to_rows()).collect();
        assert_eq!(from_triangles.len() as u128, count_asms(n), "n={n}");
        assert_eq!(from_triangles, generated, "n={n}");
    }
}
