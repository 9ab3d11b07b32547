use spherical_core::catalog::small_rank_specs;
use spherical_core::crosscheck::crosscheck;
use spherical_core::{frac, int, PairSpec};

fn main() {
    let max: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let filter = std::env::args().nth(2);
    let specs = if filter.as_deref() == Some("bc") {
        let mut v = Vec::new();
        for (r, s) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            v.push(PairSpec::bc(int(-1), r, s));
            v.push(PairSpec::bc(frac(-1, 2), r, s));
        }
        for k in [int(2), int(-3), frac(1, 2)] {
            v.push(PairSpec::c(k, 1, 1));
        }
        v
    } else {
        small_rank_specs()
            .into_iter()
            .filter(|s| filter.as_ref().is_none_or(|f| s.family_id() == f))
            .collect()
    };
    for spec in specs {
        let t = std::time::Instant::now();
        let r = crosscheck(&spec, max).unwrap();
        println!(
            "{spec}: checked {} spherical {} undetermined {} disagreements {} ({:?})",
            r.checked,
            r.spherical,
            r.undetermined,
            r.disagreements.len(),
            t.elapsed()
        );
        for d in r.disagreements.iter().take(6) {
            println!(
                "    {} procedure={} oracle={}",
                d.weight, d.procedure, d.oracle
            );
        }
    }
}
