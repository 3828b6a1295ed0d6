//! Randomized property runners shared between the per-module suites and
//! the acceptance gate. Each runner panics with diagnostics on the first
//! violated case and returns the number of checks it performed.

#![allow(dead_code)]

use super::{
    brute_force_witness, linalg_member, random_poly, seeded, small_rational, verify_witness,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use symorb::equivariant::{
    fixed_point_generators, grassmannian_seq_ideal, hypersurface_family, orbit_closure_generators,
    orbit_closure_member, rank_family, seq_ideal_level, vandermonde_seq_ideal, ComponentSpec,
    Multiplicity, OrbitClosureSpec, SequencePrefixDescriptor,
};
use symorb::semialg::{decide_nonempty, Decision, EquivariantSignSystem};
use symorb::{rat_int, BigRational, FinitePermutation, Ideal, Monomial, MonomialOrder, Poly, VarIndex};

fn random_perm(rng: &mut ChaCha8Rng, degree: u32) -> FinitePermutation {
    let mut images: Vec<u32> = (1..=degree).collect();
    images.shuffle(rng);
    FinitePermutation::from_mapping((1..=degree).zip(images)).expect("images are a permutation")
}

/// Group-action and ring-automorphism laws for the row action, plus
/// canonical-form uniqueness and the row_embed/transposition identity.
pub fn run_action_law_cases(cases: usize) -> usize {
    let mut rng = seeded(0x7031);
    let vars: Vec<VarIndex> = (1..=5)
        .map(|r| VarIndex::main(r, 1))
        .chain((1..=2).map(|r| VarIndex::main(r, 2)))
        .collect();
    for case in 0..cases {
        let f = random_poly(&mut rng, &vars, 3, 4);
        let g = random_poly(&mut rng, &vars, 2, 3);
        let h = random_poly(&mut rng, &vars, 3, 3);
        let sigma = random_perm(&mut rng, 5);
        let tau = random_perm(&mut rng, 5);

        let two_steps = f.apply_perm(&tau).apply_perm(&sigma);
        let one_step = f.apply_perm(&sigma.compose(&tau));
        assert_eq!(two_steps, one_step, "case {case}: composition law");

        assert_eq!(f.apply_perm(&FinitePermutation::identity()), f, "case {case}: identity law");

        let lhs = (&(&f * &g) + &h).apply_perm(&sigma);
        let rhs = &(&f.apply_perm(&sigma) * &g.apply_perm(&sigma)) + &h.apply_perm(&sigma);
        assert_eq!(lhs, rhs, "case {case}: automorphism law");

        let mut terms: Vec<(Monomial, BigRational)> =
            f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.shuffle(&mut rng);
        let rebuilt = Poly::from_terms(terms);
        assert_eq!(rebuilt, f, "case {case}: canonical form under term reordering");
        assert!((&f - &rebuilt).is_zero(), "case {case}: difference canonicalizes to zero");
        let bumped = &f + &Poly::var(VarIndex::main(1, 1));
        assert_ne!(bumped, f, "case {case}: distinct polynomials compare unequal");
        assert!(!(&f - &bumped).is_zero(), "case {case}: nonzero difference");

        let row_one_vars = [VarIndex::main(1, 1), VarIndex::main(1, 2)];
        let h1 = random_poly(&mut rng, &row_one_vars, 3, 3);
        let i = rng.random_range(2..=5);
        assert_eq!(
            h1.row_embed(i).expect("row-1 support"),
            h1.apply_perm(&FinitePermutation::transposition(1, i)),
            "case {case}: row_embed agrees with a transposition"
        );
    }
    cases * 7
}

/// Groebner membership against the degree-bounded linear-algebra oracle.
/// Oracle acceptance proves membership, so the two directions are: a
/// normal-form zero must be certified at some generous bound, and a
/// nonzero normal form must never be contradicted by a certificate.
pub fn run_gb_membership_cases(cases: usize) -> usize {
    let mut rng = seeded(0x6201);
    for case in 0..cases {
        let nvars = rng.random_range(2..=3);
        let vars: Vec<VarIndex> = (1..=nvars).map(|r| VarIndex::main(r, 1)).collect();
        let ngens = rng.random_range(1..=3);
        let gens: Vec<Poly> = (0..ngens)
            .map(|_| random_poly(&mut rng, &vars, 2, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(gens.clone(), MonomialOrder::Grevlex);
        let f = if rng.random_bool(0.5) {
            let mut combo = Poly::zero();
            for g in &gens {
                let exps: Vec<(VarIndex, u32)> = vars
                    .iter()
                    .map(|&v| (v, rng.random_range(0..=1)))
                    .collect();
                combo = &combo + &g.mul_term(&Monomial::from_exps(exps), &small_rational(&mut rng, 2));
            }
            combo
        } else {
            random_poly(&mut rng, &vars, 4, 4)
        };
        let in_ideal = ideal.contains(&f).expect("desk-scale basis");
        if in_ideal {
            let certified = [4u32, 6, 8]
                .iter()
                .any(|&b| linalg_member(&f, &gens, &vars, b.max(f.total_degree())));
            assert!(certified, "case {case}: normal form is zero but no certificate up to degree 8 for {f}");
        } else {
            assert!(
                !linalg_member(&f, &gens, &vars, 6.max(f.total_degree())),
                "case {case}: certificate exists but normal form of {f} is nonzero"
            );
        }
    }
    cases
}

/// A random configuration of 2-3 distinct integer points, the first with
/// unbounded capacity, the rest capped. Returns the spec plus the points.
pub fn random_point_spec(
    rng: &mut ChaCha8Rng,
    n: u32,
) -> (OrbitClosureSpec, Vec<Vec<BigRational>>) {
    let npoints = rng.random_range(2..=3);
    let mut points: Vec<Vec<BigRational>> = Vec::new();
    while points.len() < npoints {
        let p: Vec<BigRational> = (0..n).map(|_| rat_int(rng.random_range(-2..=2))).collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    // vanishing generators for the whole configuration: one per-coordinate
    // product over all points
    let vp: Vec<Poly> = (1..=n)
        .map(|j| {
            let mut prod = Poly::one();
            for p in &points {
                let lin = &Poly::var(VarIndex::main(1, j)) - &Poly::constant(p[j as usize - 1].clone());
                prod = &prod * &lin;
            }
            prod
        })
        .collect();
    // a complement generator for point c: per other point, one linear form
    // in a coordinate where they differ
    let complement_of = |c: usize| -> Poly {
        let mut prod = Poly::one();
        for (o, other) in points.iter().enumerate() {
            if o == c {
                continue;
            }
            let j = (0..n as usize)
                .find(|&j| other[j] != points[c][j])
                .expect("points are distinct");
            let lin = &Poly::var(VarIndex::main(1, j as u32 + 1)) - &Poly::constant(other[j].clone());
            prod = &prod * &lin;
        }
        prod
    };
    let components: Vec<ComponentSpec> = points
        .iter()
        .enumerate()
        .map(|(c, p)| ComponentSpec {
            complement_generators: if c == 0 { Vec::new() } else { vec![complement_of(c)] },
            multiplicity: if c == 0 {
                Multiplicity::Infinite
            } else {
                Multiplicity::Finite(rng.random_range(1..=2))
            },
            point: Some(p.clone()),
        })
        .collect();
    let spec = OrbitClosureSpec::new(n, vp, components).expect("validated by construction");
    (spec, points)
}

fn minimal_level(spec: &OrbitClosureSpec) -> u32 {
    spec.components()
        .iter()
        .filter_map(|c| match c.multiplicity {
            Multiplicity::Finite(nu) => Some(nu + 1),
            Multiplicity::Infinite => None,
        })
        .max()
        .unwrap_or(1)
}

/// Exhaustive comparison of the level-k vanishing locus with membership of
/// the corresponding sequences (explicit prefix parked on the unbounded
/// point). Returns the number of sequences compared.
pub fn check_spec_equivalence(
    spec: &OrbitClosureSpec,
    points: &[Vec<BigRational>],
    max_len: u32,
) -> usize {
    let n = spec.ncols();
    let tail = points[0].clone();
    let mut compared = 0;
    for level in minimal_level(spec)..=max_len {
        let ideal = orbit_closure_generators(spec, level).expect("level covers every capacity");
        let mut choice = vec![0usize; level as usize];
        loop {
            let seq: Vec<Vec<BigRational>> = choice.iter().map(|&c| points[c].clone()).collect();
            let assignment: std::collections::BTreeMap<VarIndex, BigRational> = seq
                .iter()
                .enumerate()
                .flat_map(|(i, p)| {
                    p.iter().enumerate().map(move |(j, v)| {
                        (VarIndex::main(i as u32 + 1, j as u32 + 1), v.clone())
                    })
                })
                .collect();
            let vanishes = ideal
                .generators()
                .iter()
                .all(|g| num_traits::Zero::is_zero(&g.evaluate(&assignment).expect("all rows set")));
            let descriptor = SequencePrefixDescriptor::new(n, seq, Some(tail.clone()))
                .expect("arity matches");
            let member = orbit_closure_member(spec, &descriptor).expect("point components");
            assert_eq!(
                vanishes, member,
                "level {level}, choice {choice:?}: ideal locus and membership disagree"
            );
            compared += 1;
            // odometer over point choices
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    break;
                }
                choice[pos] += 1;
                if choice[pos] < points.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
    }
    compared
}

/// Sym(k)-stability of every equivariant ideal output: each transposition
/// image of each generator reduces to normal form zero.
pub fn run_sym_stability_checks(min_checks: usize) -> usize {
    let mut rng = seeded(0x51ab);
    let mut ideals: Vec<(String, Ideal, u32)> = vec![
        ("vandermonde(1,1,3)".into(), vandermonde_seq_ideal(1, 1, 3), 3),
        ("vandermonde(2,1,4)".into(), vandermonde_seq_ideal(2, 1, 4), 4),
        ("vandermonde(1,2,3)".into(), vandermonde_seq_ideal(1, 2, 3), 3),
        ("grassmannian(1,2,2)".into(), grassmannian_seq_ideal(1, 2, 2), 2),
        ("grassmannian(1,2,3)".into(), grassmannian_seq_ideal(1, 2, 3), 3),
        ("grassmannian(1,3,3)".into(), grassmannian_seq_ideal(1, 3, 3), 3),
        (
            "seq_ideal(hypersurface(1,1), 3)".into(),
            seq_ideal_level(&hypersurface_family(1, 1), 3).expect("level is positive"),
            3,
        ),
        (
            "seq_ideal(rank(1,2), 2)".into(),
            seq_ideal_level(&rank_family(1, 2), 2).expect("level is positive"),
            2,
        ),
    ];
    for i in 0..4 {
        let n = rng.random_range(1..=2);
        let (spec, _) = random_point_spec(&mut rng, n);
        let k = minimal_level(&spec).max(3);
        ideals.push((
            format!("orbit_closure#{i}"),
            orbit_closure_generators(&spec, k).expect("level covers capacities"),
            k,
        ));
    }
    for i in 0..4 {
        let vars = [VarIndex::main(1, 1), VarIndex::main(1, 2)];
        let gens: Vec<Poly> = (0..rng.random_range(1..=2))
            .map(|_| random_poly(&mut rng, &vars, 2, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        ideals.push((
            format!("fixed_point#{i}"),
            fixed_point_generators(&gens, 3).expect("row-1 generators"),
            3,
        ));
    }
    let mut checks = 0;
    for (name, ideal, k) in &ideals {
        for i in 1..=*k {
            for j in i + 1..=*k {
                let swap = FinitePermutation::transposition(i, j);
                for g in ideal.generators() {
                    assert!(
                        ideal.contains(&g.apply_perm(&swap)).expect("desk-scale basis"),
                        "{name}: image of {g} under ({i} {j}) left the ideal"
                    );
                    checks += 1;
                }
            }
        }
    }
    assert!(checks >= min_checks, "only {checks} stability checks, wanted {min_checks}");
    checks
}

fn random_sign_system(rng: &mut ChaCha8Rng) -> EquivariantSignSystem {
    let vars = [VarIndex::main(1, 1), VarIndex::main(2, 1)];
    loop {
        let weak: Vec<Poly> = (0..rng.random_range(0..=2))
            .map(|_| random_poly(rng, &vars, 2, 3))
            .filter(|p| !p.is_zero())
            .collect();
        let strict: Vec<Poly> = (0..rng.random_range(0..=2))
            .map(|_| random_poly(rng, &vars, 2, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if weak.is_empty() && strict.is_empty() {
            continue;
        }
        return EquivariantSignSystem::new(weak, strict).expect("single-column by construction");
    }
}

/// Witness soundness, subsequence closure, and permutation/scaling
/// invariance of the decision procedure on random two-row systems.
pub fn run_decision_soundness_cases(cases: usize) -> usize {
    let mut rng = seeded(0x4d4d);
    let mut checks = 0;
    for case in 0..cases {
        let sys = random_sign_system(&mut rng);
        let m = sys.rows();
        let decision = decide_nonempty(&sys).expect("two-row systems are in range");
        match &decision {
            Decision::NonEmpty { witness, .. } => {
                assert!(
                    witness.len() >= (3 * m as usize).max(6),
                    "case {case}: witness shorter than the contract"
                );
                assert!(
                    verify_witness(sys.weak(), sys.strict(), m, witness),
                    "case {case}: witness failed independent verification for {sys:?}"
                );
                // subsequence closure: dropping any single entry keeps a
                // valid (shorter) prefix
                for drop in 0..witness.len() {
                    let mut shorter = witness.clone();
                    shorter.remove(drop);
                    assert!(
                        verify_witness(sys.weak(), sys.strict(), m, &shorter),
                        "case {case}: dropping entry {drop} broke the witness"
                    );
                }
                checks += 1 + witness.len();
            }
            Decision::Empty => {}
            Decision::Unsupported { reason } => {
                panic!("case {case}: unexpected Unsupported ({reason}) at two rows")
            }
        }
        // relabel rows and rescale by positive rationals: the emptiness
        // class must not move
        let swap = FinitePermutation::transposition(1, 2);
        let rescale = |p: &Poly, rng: &mut ChaCha8Rng| {
            let c = BigRational::new(
                rng.random_range(1..=5).into(),
                rng.random_range(1..=5).into(),
            );
            p.apply_perm(&swap).scale(&c)
        };
        let transformed = EquivariantSignSystem::new(
            sys.weak().iter().map(|p| rescale(p, &mut rng)).collect(),
            sys.strict().iter().map(|p| rescale(p, &mut rng)).collect(),
        )
        .expect("still single-column");
        let transformed_decision = decide_nonempty(&transformed).expect("still two rows");
        assert_eq!(
            decision.is_nonempty(),
            transformed_decision.is_nonempty(),
            "case {case}: relabeling or rescaling changed the answer for {sys:?}"
        );
        checks += 1;
    }
    checks
}

/// Brute-force cross-check: whenever grid search finds a verified witness
/// the decision must be NonEmpty, and NonEmpty witnesses must verify.
pub fn run_sampler_cross_checks(cases: usize) -> (usize, usize) {
    let mut rng = seeded(0xb07e);
    let mut found = 0;
    for case in 0..cases {
        let sys = random_sign_system(&mut rng);
        let m = sys.rows();
        let decision = decide_nonempty(&sys).expect("two-row systems are in range");
        if let Some(entries) = brute_force_witness(sys.weak(), sys.strict(), m) {
            found += 1;
            assert!(
                decision.is_nonempty(),
                "case {case}: grid search found witness {entries:?} but the decision was Empty for {sys:?}"
            );
        }
        if let Decision::NonEmpty { witness, .. } = &decision {
            assert!(
                verify_witness(sys.weak(), sys.strict(), m, witness),
                "case {case}: reported witness failed verification"
            );
        }
    }
    (cases, found)
}

/// Removing one explicit entry from a member descriptor must keep it a
/// member: the accepted set is closed under subsequences.
pub fn run_member_monotonicity_cases(cases: usize) -> usize {
    let mut rng = seeded(0x3a21);
    let mut members_seen = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=2);
        let (spec, points) = random_point_spec(&mut rng, n);
        let len = rng.random_range(2..=4);
        let seq: Vec<Vec<BigRational>> = (0..len)
            .map(|_| points[rng.random_range(0..points.len())].clone())
            .collect();
        let tail = Some(points[0].clone());
        let desc = SequencePrefixDescriptor::new(n, seq.clone(), tail.clone()).expect("arity");
        if !orbit_closure_member(&spec, &desc).expect("point components") {
            continue;
        }
        members_seen += 1;
        for drop in 0..seq.len() {
            let mut shorter = seq.clone();
            shorter.remove(drop);
            let sub = SequencePrefixDescriptor::new(n, shorter, tail.clone()).expect("arity");
            assert!(
                orbit_closure_member(&spec, &sub).expect("point components"),
                "removing entry {drop} destroyed membership"
            );
        }
    }
    members_seen
}

/// Reduced bases are canonical: rebuilding from the basis or shuffling the
/// generator list reproduces the same basis, bit for bit.
pub fn run_gb_determinism_cases(cases: usize) -> usize {
    let mut rng = seeded(0x9d9d);
    for case in 0..cases {
        let vars: Vec<VarIndex> = (1..=3).map(|r| VarIndex::main(r, 1)).collect();
        let mut gens: Vec<Poly> = (0..rng.random_range(1..=3))
            .map(|_| random_poly(&mut rng, &vars, 2, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let first = Ideal::new(gens.clone(), MonomialOrder::Grevlex);
        let basis: Vec<Poly> = first.groebner_basis().expect("desk scale").to_vec();
        let again = Ideal::new(gens.clone(), MonomialOrder::Grevlex);
        assert_eq!(again.groebner_basis().expect("desk scale"), &basis[..], "case {case}: rerun");
        gens.shuffle(&mut rng);
        let shuffled = Ideal::new(gens, MonomialOrder::Grevlex);
        assert_eq!(
            shuffled.groebner_basis().expect("desk scale"),
            &basis[..],
            "case {case}: generator order leaked into the reduced basis"
        );
        let rebuilt = Ideal::new(basis.clone(), MonomialOrder::Grevlex);
        assert_eq!(
            rebuilt.groebner_basis().expect("desk scale"),
            &basis[..],
            "case {case}: basis of the basis differs"
        );
    }
    cases * 3
}

/// Ideals built to vanish on two known points: the elimination ideal must
/// vanish on the projections of both.
pub fn run_elimination_soundness_cases(cases: usize) -> usize {
    let mut rng = seeded(0xe113);
    let mut checks = 0;
    for _ in 0..cases {
        let vars: Vec<VarIndex> = (1..=3).map(|r| VarIndex::main(r, 1)).collect();
        let a: Vec<BigRational> = (0..3).map(|_| rat_int(rng.random_range(-2..=2))).collect();
        let b: Vec<BigRational> = (0..3).map(|_| rat_int(rng.random_range(-2..=2))).collect();
        let gens: Vec<Poly> = (0..rng.random_range(2..=4))
            .map(|_| {
                let j = rng.random_range(0..3);
                let l = rng.random_range(0..3);
                let left = &Poly::var(vars[j]) - &Poly::constant(a[j].clone());
                let right = &Poly::var(vars[l]) - &Poly::constant(b[l].clone());
                &left * &right
            })
            .collect();
        let ideal = Ideal::new(gens, MonomialOrder::Grevlex);
        let keep: BTreeSet<VarIndex> = [vars[0]].into();
        let eliminated = ideal.elimination_ideal(&keep).expect("desk scale");
        for point in [&a, &b] {
            let assignment: std::collections::BTreeMap<VarIndex, BigRational> =
                [(vars[0], point[0].clone())].into();
            for g in eliminated.generators() {
                let v = g.partial_eval(&assignment);
                assert!(
                    v.is_zero(),
                    "projection of a common zero escaped the elimination ideal: {g}"
                );
            }
            checks += 1;
        }
    }
    checks
}
