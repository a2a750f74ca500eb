use num::integer::Roots;
use std::time::Instant;
use sumfree::census::{count_sum_free, max_sum_free, SearchBudget};
use sumfree::geometry::{big_stripe, lattice_points, rat, Bounds};
use sumfree::gseries::g_oracle;
use sumfree::schur::{schur_hypergraph_stats, PointSet};

fn main() {
    let budget = SearchBudget::new(2_000_000_000, 600);

    // Rational over-approximation of Delta(H, n^{-1/4}) * sqrt(n) for d=1:
    // use tau_hat <= n^{-1/4} (making Delta larger) and sqrt_hat >= sqrt(n).
    let mut worst = 0.0f64;
    let mut worst_n = 0;
    for n in 10u32..=200 {
        let st = schur_hypergraph_stats(n, 1).unwrap();
        let quarter = (((n as u128) << 80).nth_root(4) + 1) as i128; // >= n^{1/4} 2^20
        let tau = rat(1 << 20, quarter);
        let sqrt_hi = (((n as u128) << 40).sqrt() + 1) as i128; // >= sqrt(n) 2^20
        let v = st.delta_of_tau(tau).unwrap() * rat(sqrt_hi, 1 << 20);
        let f = *v.numer() as f64 / *v.denom() as f64;
        if f > worst {
            worst = f;
            worst_n = n;
        }
    }
    println!("max over n in [10,200] of bound: {worst:.4} at n={worst_n}");

    for n in 1..=6u32 {
        let g = PointSet::grid(n, 2);
        let t = Instant::now();
        let c = count_sum_free(&g, &budget).unwrap();
        let tc = t.elapsed();
        let t = Instant::now();
        let m = max_sum_free(&g, &budget).unwrap();
        let tm = t.elapsed();
        let stripe = lattice_points(&big_stripe(n), Bounds::square(1, n as i64)).unwrap();
        println!(
            "[{n}]^2: sf={} ({tc:?}), max={} ({tm:?}, {} nodes), stripe={}",
            c.count,
            m.size,
            m.stats.nodes,
            stripe.len()
        );
    }

    let t = Instant::now();
    let g10 = g_oracle(10, None, false);
    println!("g_oracle(10) = {} in {:?}", g10.to_decimal_string(), t.elapsed());
}
