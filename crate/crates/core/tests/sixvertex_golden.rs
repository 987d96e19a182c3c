//! The seven order-3 domain-wall configurations, as arrows on every edge.
//! Vertical edges are listed top to bottom, horizontal edges left to right.

use std::collections::BTreeSet;

use refine_core::sixvertex::{enumerate_sv, SvConfig};

const ORDER_THREE: [&str; 7] = [
    "^^^ v^^ vv^ vvv | ><<< >><< >>><",
    "^^^ ^^v ^vv vvv | >>>< >><< ><<<",
    "^^^ v^^ v^v vvv | ><<< >>>< >><<",
    "^^^ ^^v v^v vvv | >>>< ><<< >><<",
    "^^^ ^v^ vv^ vvv | >><< ><<< >>><",
    "^^^ ^v^ ^vv vvv | >><< >>>< ><<<",
    "^^^ ^v^ v^v vvv | >><< ><>< >><<",
];

fn arrows(c: &SvConfig) -> String {
    let n = c.n();
    let vertical: Vec<String> =
        (0..=n).map(|k| (0..n).map(|j| if c.vertical_edge(k, j) == 0 { '^' } else { 'v' }).collect()).collect();
    let horizontal: Vec<String> =
        (0..n).map(|i| (0..=n).map(|k| if c.horizontal_edge(i, k) == 0 { '>' } else { '<' }).collect()).collect();
    format!("{} | {}", vertical.join(" "), horizontal.join(" "))
}

#[test]
fn order_three_arrows() {
    let got: BTreeSet<String> = enumerate_sv(3).iter().map(arrows).collect();
    let want: BTreeSet<String> = ORDER_THREE.iter().map(|s| s.to_string()).collect();
    assert_eq!(got, want);
}

#[test]
fn order_three_asm_images_are_distinct() {
    let asms: BTreeSet<Vec<Vec<i64>>> = enumerate_sv(3).iter().map(|c| c.to_asm().to_rows()).collect();
    assert_eq!(asms.len(), 7);
}
