use std::time::Instant;
use sumfree::census::{count_sum_free, sample_sum_free, SearchBudget};
use sumfree::geometry::{lattice_points_all, region_l, region_r, LatticePoint};
use sumfree::schur::PointSet;

fn main() {
    let budget = SearchBudget::new(2_000_000_000, 600);

    for n in [8u32, 10, 12] {
        let rl = lattice_points_all(&region_r(n))
            .unwrap()
            .union(&lattice_points_all(&region_l(n)).unwrap());
        let t = Instant::now();
        let r = count_sum_free(&rl, &budget).unwrap();
        println!(
            "R∪L n={n}: {} pts, count={} ({} bits), nodes={}, {:?}",
            rl.len(),
            r.count,
            r.count.bits(),
            r.stats.nodes,
            t.elapsed()
        );
        let t = Instant::now();
        let s = sample_sum_free(&rl, 7, &budget).unwrap();
        println!("  sample: {} pts in {:?}", s.len(), t.elapsed());
    }

    for n in [4u32, 5, 6] {
        let g = PointSet::grid(n, 2);
        let t = Instant::now();
        let r = count_sum_free(&g, &budget).unwrap();
        println!(
            "[{}]^2: count={}, nodes={}, {:?}",
            n,
            r.count,
            r.stats.nodes,
            t.elapsed()
        );
    }

    for n in [8u32, 10, 12] {
        let mut pts = Vec::new();
        for x in [1i64, 3, 4] {
            for y in 1..=n as i64 {
                pts.push(LatticePoint::xy(x, y));
            }
        }
        let s134 = PointSet::from_points(2, pts);
        let t = Instant::now();
        let r = count_sum_free(&s134, &budget).unwrap();
        println!(
            "s({n}): count={}, nodes={}, {:?}",
            r.count,
            r.stats.nodes,
            t.elapsed()
        );
    }
}
