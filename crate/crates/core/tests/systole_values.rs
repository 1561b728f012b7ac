use std::time::Instant;

use regma::exact::rat;
use regma::graph::catalog;
use regma::graph::EdgeWeights;
use regma::optimize::{systole, systole_bruteforce, systole_weighted};

#[test]
fn catalog_extremals() {
    let cases = [
        ("theta", rat(2, 3)),
        ("k4", rat(1, 2)),
        ("k33", rat(4, 9)),
        ("g54", rat(3, 8)),
        ("petersen", rat(1, 3)),
        ("heawood", rat(2, 7)),
        ("f12", rat(2, 7)),
        ("f13", rat(8, 27)),
        ("f14", rat(3, 10)),
    ];
    for (name, v) in cases {
        let g = catalog(name).unwrap();
        let t = Instant::now();
        let s = systole(&g).unwrap();
        eprintln!("{name}: {} in {:?}", s.value, t.elapsed());
        assert_eq!(s.value, v, "{name}");
        s.verify(&g).unwrap();
    }
}

#[test]
fn weighted_witnesses() {
    for (name, v) in [("petersen", rat(1, 3)), ("heawood", rat(2, 7))] {
        let g = catalog(name).unwrap();
        let (x, c) = systole_weighted(&g, &EdgeWeights::ones(g.m())).unwrap();
        assert_eq!(x, v, "{name}");
        assert_eq!(rat(c.len() as i64, g.m() as i64), v);
    }
    let f14 = catalog("f14").unwrap();
    let m = f14.m();
    let w: Vec<_> = (0..m).map(|e| if e + 2 >= m { rat(1, 10) } else { rat(1, 20) }).collect();
    let (x, _) = systole_weighted(&f14, &EdgeWeights::new(w).unwrap()).unwrap();
    assert_eq!(x, rat(3, 10));
    assert!(systole_weighted(&f14, &EdgeWeights::new(vec![rat(0, 1); m]).unwrap()).is_err());
}

#[test]
fn cutting_planes_match_bruteforce() {
    for name in ["k4", "k33", "g54", "petersen", "f13", "f14"] {
        let g = catalog(name).unwrap();
        assert_eq!(systole(&g).unwrap().value, systole_bruteforce(&g).unwrap().0, "{name}");
    }
}
