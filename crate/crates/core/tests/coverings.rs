mod common;

use common::*;
use gemkit::code::parse_code;
use gemkit::covering::*;
use gemkit::graph::{ColoredGraph, COLORS, COLOR_PAIRS};
use gemkit::topology::{boundary_profile, first_homology};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_voltages<R: Rng>(g: &ColoredGraph, n: u32, rng: &mut R) -> VoltageAssignment {
    let triples: Vec<VoltageTriple> = g
        .oriented_edges()
        .into_iter()
        .map(|e| (e.tail, e.color, rng.gen_range(0..n)))
        .collect();
    VoltageAssignment::from_triples(g.clone(), n, &triples).unwrap()
}

fn cycle_length_profile(g: &ColoredGraph) -> Vec<Vec<usize>> {
    COLOR_PAIRS
        .iter()
        .map(|&(a, b)| {
            let mut l: Vec<usize> = g.bicolored_cycles(a, b).iter().map(|c| c.len()).collect();
            l.sort();
            l
        })
        .collect()
}

#[test]
fn admissibility_iff_zero_holonomy_on_random_voltages() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = (0, 0);
    for code in [GAMMA1, GAMMA2, GAMMA3] {
        let g = parse_code(code).unwrap();
        let cycles = g.all_bicolored_cycles();
        for n in [2, 3] {
            for trial in 0..200 {
                let va = if trial % 4 == 0 {
                    // zero-holonomy assignments are rare among random ones
                    let sols = find_admissible_cyclic_coverings(&g, n, 50).unwrap();
                    sols[rng.gen_range(0..sols.len())].clone()
                } else {
                    random_voltages(&g, n, &mut rng)
                };
                let (total, map) = derived_graph(&va);
                assert_eq!(verify_covering(&map), Ok(n as usize));
                let zero = cycles.iter().all(|c| holonomy(&va, c) == 0);
                assert_eq!(is_admissible(&map).unwrap(), zero);
                if zero {
                    seen.0 += 1;
                } else {
                    seen.1 += 1;
                }
                // each base cycle lifts to cycles of length len * ord(holonomy)
                for cyc in &cycles {
                    let h = holonomy(&va, cyc);
                    let ord = n / h.gcd(&n);
                    let lifted = total.bicolored_cycles(cyc.colors.0, cyc.colors.1);
                    for lift in lifted.iter().filter(|l| map.projection[l.vertices[0]] == cyc.vertices[0]) {
                        assert_eq!(lift.len(), cyc.len() * ord as usize);
                    }
                }
            }
        }
    }
    assert!(seen.0 > 0 && seen.1 > 0);
}

#[test]
fn holonomy_is_independent_of_start_up_to_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = parse_code(GAMMA1).unwrap();
    let n = 7;
    let va = random_voltages(&g, n, &mut rng);
    for cyc in g.all_bicolored_cycles() {
        let h = holonomy(&va, &cyc);
        // rotate by two steps: same colors first, same holonomy
        let mut rotated = cyc.clone();
        rotated.vertices.rotate_left(2 % cyc.len());
        assert_eq!(holonomy(&va, &rotated), h);
        // start one step later: traversal runs the other way round
        let v1 = cyc.vertices[1];
        let mut rev = vec![v1];
        let (a, b) = cyc.colors;
        let mut v = v1;
        for k in 0..cyc.len() - 1 {
            v = g.neighbor(v, if k % 2 == 0 { a } else { b });
            rev.push(v);
        }
        let reversed = gemkit::graph::BicoloredCycle {
            colors: cyc.colors,
            vertices: rev,
        };
        assert_eq!((holonomy(&va, &reversed) + h) % n, 0);
    }
}

#[test]
fn solver_solutions_are_admissible_connected_and_distinct() {
    for code in [GAMMA1, GAMMA2, GAMMA3] {
        let g = parse_code(code).unwrap();
        for n in 1..=5u32 {
            let sols = find_admissible_cyclic_coverings(&g, n, 20).unwrap();
            assert!(!sols.is_empty(), "{code} n={n}");
            let mut triples: Vec<Vec<VoltageTriple>> = Vec::new();
            for va in &sols {
                let (total, map) = derived_graph(va);
                assert_eq!(total.order(), 12 * n as usize);
                assert!(total.is_connected());
                assert!(total.is_bipartite());
                assert_eq!(verify_covering(&map), Ok(n as usize));
                assert!(is_admissible(&map).unwrap());
                let t = free_edge_triples(va);
                assert!(!triples.contains(&t));
                triples.push(t);
            }
        }
    }
}

#[test]
fn solver_is_deterministic() {
    let g = parse_code(GAMMA3).unwrap();
    let a = find_admissible_cyclic_coverings(&g, 4, 30).unwrap();
    let b = find_admissible_cyclic_coverings(&g, 4, 30).unwrap();
    assert_eq!(a, b);
}

#[test]
fn solution_count_matches_homology() {
    // zero-holonomy assignments with tree gauge are Hom(H1, Z_n); the
    // connected ones are the surjections. For free H1 of rank r that is
    // the number of r-tuples in Z_n generating Z_n.
    for code in [GAMMA1, GAMMA2, GAMMA3] {
        let g = parse_code(code).unwrap();
        let h1 = first_homology(&g).unwrap();
        assert!(h1.is_free());
        for n in 2..=3u32 {
            let all = find_admissible_cyclic_coverings(&g, n, usize::MAX).unwrap();
            let r = h1.rank as u32;
            let brute = (0..n.pow(r))
                .filter(|&k| {
                    let mut x = k;
                    let mut gg = n;
                    for _ in 0..r {
                        gg = gg.gcd(&(x % n));
                        x /= n;
                    }
                    gg == 1
                })
                .count();
            assert_eq!(all.len(), brute, "{code} n={n}");
        }
    }
}

#[test]
fn admissible_coverings_multiply_cycles_and_keep_tori() {
    for code in [GAMMA1, GAMMA2, GAMMA3] {
        let g = parse_code(code).unwrap();
        let base_profile = cycle_length_profile(&g);
        let base_bnd = boundary_profile(&g).unwrap();
        for n in 2..=4u32 {
            for va in find_admissible_cyclic_coverings(&g, n, 3).unwrap() {
                let (total, _) = derived_graph(&va);
                let profile = cycle_length_profile(&total);
                for (base, lifted) in base_profile.iter().zip(&profile) {
                    let mut expected: Vec<usize> = base
                        .iter()
                        .flat_map(|&l| std::iter::repeat(l).take(n as usize))
                        .collect();
                    expected.sort();
                    assert_eq!(lifted, &expected);
                }
                let bnd = boundary_profile(&total).unwrap();
                assert!(bnd.all_tori());
                let k = base_bnd.components.len();
                assert!((k..=n as usize * k).contains(&bnd.components.len()));
            }
        }
    }
}

#[test]
fn voltage_triples_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = parse_code(GAMMA2).unwrap();
    let va = random_voltages(&g, 5, &mut rng);
    let rebuilt = VoltageAssignment::from_triples(g.clone(), 5, &va.edge_triples()).unwrap();
    assert_eq!(rebuilt, va);
    for v in 0..g.order() {
        for c in COLORS {
            assert_eq!((va.voltage(v, c) + va.voltage(g.neighbor(v, c), c)) % 5, 0);
        }
    }
}

#[test]
fn bounds_report() {
    let g = parse_code(GAMMA1).unwrap();
    for n in 1..=5u32 {
        let b = complexity_bounds_report(&g, 10, n).unwrap();
        assert_eq!(b.lower, 10 * n as usize);
        assert_eq!(b.upper, 12 * n as usize);
        assert_eq!(b.witness_order, b.upper);
    }
    let b = complexity_bounds_report(&g, 12, 5).unwrap();
    assert_eq!((b.lower, b.upper), (60, 60));
}
