use hlboson::algebra::{det, pfaffian, truncate_graded, LaurentPoly, Matrix, RatFn, Var};
use hlboson::hl_an::{hl_p_branching, hl_p_group_sum, hl_q_branching};
use hlboson::hl_bcn::{k_hyperoctahedral, l_from_k};
use hlboson::partitions::{b_coeff, enumerate, Partition};
use hlboson::tboson::tiles::step_row;
use hlboson::tboson::transfer::{k_lattice_raw, l_lattice_raw, skew_row_element};
use hlboson::tboson::{hl_p_lattice, k_lattice, l_lattice, transfer_element, BosonState, BoundaryParams, RowKind, Tile};
use hlboson::tboson::{HOLE, PARTICLE};
use proptest::prelude::*;
use std::collections::HashMap;

fn x(i: usize) -> LaurentPoly {
    LaurentPoly::x(i)
}

fn t() -> LaurentPoly {
    LaurentPoly::t()
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

/// Small polynomial in x1, x2, t with integer coefficients.
fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, 0i32..3, 0i32..3, 0i32..2), 0..5).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (c, a, b, e)| {
            let m = &(&x(1).pow(a as u32) * &x(2).pow(b as u32)) * &t().pow(e as u32);
            &acc + &(&int(c) * &m)
        })
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Polynomial with constant term 1 in `S`, so it is invertible as a series.
fn unit_series() -> impl Strategy<Value = LaurentPoly> {
    (poly(), poly()).prop_map(|(a, b)| {
        let s = LaurentPoly::var(Var::S);
        &(&LaurentPoly::one() + &(&s * &a)) + &(&s.pow(2) * &b)
    })
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn partitions(len: usize, max: u32) -> impl Strategy<Value = Partition> {
    prop::sample::select(enumerate(len, max, false))
}

fn swap_vars(p: &LaurentPoly, a: Var, b: Var) -> LaurentPoly {
    p.rename(&[(a, b), (b, a)])
}

fn invert(p: &LaurentPoly, i: usize) -> LaurentPoly {
    p.subs(Var::x(i), &x(i).pow_signed(-1)).unwrap()
}

fn at_t0(p: &LaurentPoly) -> LaurentPoly {
    p.subs(Var::T, &LaurentPoly::zero()).unwrap()
}

/// Bialternant `det[x_i^{λ_j+n-j}] / det[x_i^{n-j}]`.
fn schur(l: &Partition) -> LaurentPoly {
    let n = l.len();
    let lp = l.parts();
    let num = det(&Matrix::from_fn(n, |i, j| x(i + 1).pow(lp[j] + (n - 1 - j) as u32)));
    let den = det(&Matrix::from_fn(n, |i, j| x(i + 1).pow((n - 1 - j) as u32)));
    num.exact_divide(&den).unwrap()
}

/// Weyl character of `Sp(2n)`: `det[x^{λ_j+n-j+1} - x̄^{λ_j+n-j+1}]` over the
/// same determinant at `λ = 0`.
fn symplectic(l: &Partition) -> LaurentPoly {
    let n = l.len();
    let lp = l.parts();
    let alt = |e: &dyn Fn(usize) -> i32| {
        det(&Matrix::from_fn(n, |i, j| &x(i + 1).pow_signed(e(j)) - &x(i + 1).pow_signed(-e(j))))
    };
    let num = alt(&|j| (lp[j] as usize + n - j) as i32);
    let den = alt(&|j| (n - j) as i32);
    num.exact_divide(&den).unwrap()
}

fn slow_partitions(len: usize, weight: u32, cap: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if weight == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=cap.min(weight)).rev() {
        for mut rest in slow_partitions(len - 1, weight - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `⟨λ| T_+(x_n)…T_+(x_1) |0⟩ / ∏x_i` on an explicit width.
fn p_at_width(l: &Partition, width: usize) -> LaurentPoly {
    let n = l.len();
    let mut states = HashMap::new();
    states.insert(vec![0; width], LaurentPoly::one());
    for i in 1..=n {
        let tiles: Vec<Tile> = (0..width).map(|k| Tile::dark(&x(i)).with_shift(k == 0)).collect();
        states = step_row(&states, &tiles, HOLE, PARTICLE);
    }
    let target = BosonState::from_partition(l, width, true).occ;
    let px = (1..=n).fold(LaurentPoly::one(), |a, i| &a * &x(i));
    states.remove(&target).unwrap_or_default().exact_divide(&px).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn det_with_repeated_row_vanishes(e in prop::collection::vec(poly(), 9), r in 0usize..3, s in 0usize..3) {
        prop_assume!(r != s);
        let m = Matrix::from_fn(3, |i, j| {
            let row = if i == s { r } else { i };
            e[3 * row + j].clone()
        });
        prop_assert!(det(&m).is_zero());
    }

    #[test]
    fn pfaffian_squares_to_det(e in prop::collection::vec(poly(), 6)) {
        let idx = |i: usize, j: usize| [[0, 0, 1, 2], [0, 0, 3, 4], [0, 0, 0, 5]][i][j];
        let m = Matrix::from_fn(4, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => e[idx(i, j)].clone(),
            std::cmp::Ordering::Greater => -e[idx(j, i)].clone(),
            std::cmp::Ordering::Equal => LaurentPoly::zero(),
        });
        let pf = pfaffian(&m);
        prop_assert_eq!(&pf * &pf, det(&m));
    }

    #[test]
    fn truncation_is_multiplicative(fa in poly(), fb in unit_series(), ga in poly(), gb in unit_series(), order in 0i32..4) {
        let f = RatFn::new(fa, &fb).unwrap();
        let g = RatFn::new(ga, &gb).unwrap();
        let whole = truncate_graded(&(&f * &g), Var::S, order).unwrap();
        let tf = truncate_graded(&f, Var::S, order).unwrap();
        let tg = truncate_graded(&g, Var::S, order).unwrap();
        prop_assert_eq!(whole, tf.mul_truncated(&tg, Var::S, order));
    }

    #[test]
    fn ratfn_equality_is_an_equivalence(p in poly(), q in nonzero_poly(), r in nonzero_poly(), s in nonzero_poly()) {
        let a = RatFn::new(p.clone(), &q).unwrap();
        let b = RatFn::new(&p * &r, &(&q * &r)).unwrap();
        let c = RatFn::new(&(&p * &r) * &s, &(&(&q * &r) * &s)).unwrap();
        prop_assert_eq!(&a, &a);
        prop_assert_eq!(a == b, b == a);
        prop_assert!(a == b && b == c && a == c);
        let d = RatFn::new(&p + &q, &q).unwrap();
        prop_assert!(a != d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplicities_sum_to_length(l in (1usize..5).prop_flat_map(|n| partitions(n, 7))) {
        let total: usize = (0..=l.largest()).map(|j| l.multiplicity(j)).sum();
        prop_assert_eq!(total, l.len());
    }

    #[test]
    fn even_partitions_have_even_conjugates(n in 1usize..5, w in 0u32..8) {
        let evens = enumerate(n, w, true);
        for l in enumerate(n, w, false) {
            let conj = l.conjugate();
            // zero parts count too: ℓ(λ) - λ'_1 is m_0
            let zeros_even = (l.len() as u32 - conj.first().copied().unwrap_or(0)).is_multiple_of(2);
            let conj_even = conj.iter().all(|c| c % 2 == 0) && zeros_even;
            prop_assert_eq!(conj_even, evens.contains(&l), "{}", l);
        }
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free(n in 0usize..5, w in 0u32..8) {
        let fast: Vec<Vec<u32>> = enumerate(n, w, false).iter().map(|p| p.parts().to_vec()).collect();
        let mut slow: Vec<Vec<u32>> = (0..=w).flat_map(|k| slow_partitions(n, k, k)).collect();
        let mut sorted = fast.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), fast.len());
        slow.sort();
        prop_assert_eq!(sorted, slow);
    }

    #[test]
    fn p_is_symmetric_and_homogeneous(l in (1usize..4).prop_flat_map(|n| partitions(n, 5))) {
        let n = l.len();
        let p = hl_p_branching(&l, n).unwrap();
        for i in 1..n {
            prop_assert_eq!(swap_vars(&p, Var::x(i), Var::x(i + 1)), p.clone());
        }
        for (m, _) in p.terms() {
            let deg: i32 = (1..=n).map(|i| m.exp(Var::x(i))).sum();
            prop_assert_eq!(deg, l.weight() as i32);
        }
    }

    #[test]
    fn p_routes_and_q(l in (1usize..4).prop_flat_map(|n| partitions(n, 5))) {
        let n = l.len();
        let p = hl_p_branching(&l, n).unwrap();
        prop_assert_eq!(hl_p_group_sum(&l, n, false).unwrap(), p.clone());
        prop_assert_eq!(hl_p_lattice(&l, n).unwrap(), p.clone());
        prop_assert_eq!(hl_q_branching(&l, n).unwrap(), &b_coeff(&l) * &p);
    }

    #[test]
    fn p_at_t0_is_schur(l in (1usize..4).prop_flat_map(|n| partitions(n, 5))) {
        prop_assert_eq!(at_t0(&hl_p_branching(&l, l.len()).unwrap()), schur(&l));
    }

    #[test]
    fn k_is_hyperoctahedral(l in (1usize..3).prop_flat_map(|n| partitions(n, 3))) {
        let n = l.len();
        let k = k_hyperoctahedral(&l, n, &BoundaryParams::formal(), false).unwrap();
        for i in 1..=n {
            prop_assert_eq!(invert(&k, i), k.clone());
        }
        if n == 2 {
            prop_assert_eq!(swap_vars(&k, Var::x(1), Var::x(2)), k.clone());
        }
    }

    #[test]
    fn k_at_t0_is_symplectic(l in (1usize..3).prop_flat_map(|n| partitions(n, 4))) {
        let k = k_hyperoctahedral(&l, l.len(), &BoundaryParams::zero(), false).unwrap();
        prop_assert_eq!(at_t0(&k), symplectic(&l));
    }

    #[test]
    fn l_from_k_matches_lattice(l in partitions(2, 3)) {
        let bp = BoundaryParams::zero();
        let k = k_hyperoctahedral(&l, 2, &bp, false).unwrap();
        prop_assert_eq!(l_from_k(&l, &k), l_lattice(&l, 2, &bp).unwrap());
    }
}

fn state(occ: Vec<i32>) -> BosonState {
    BosonState { occ, shifted0: false }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn particles_are_conserved(
        inp in prop::collection::vec(0i32..3, 3),
        out in prop::collection::vec(0i32..3, 3),
        k in 0usize..4,
    ) {
        let kind = [RowKind::TPlus, RowKind::TMinus, RowKind::TStarPlus, RowKind::TStarMinus][k];
        let (l, r, _) = kind.edges();
        let w = transfer_element(kind, &x(1), &state(out.clone()), &state(inp.clone()));
        let balance = out.iter().sum::<i32>() + l as i32 - inp.iter().sum::<i32>() - r as i32;
        if balance != 0 {
            prop_assert!(w.is_zero());
        }
    }

    #[test]
    fn rows_need_interlacing(a in partitions(3, 6), b in partitions(3, 6)) {
        let w = skew_row_element(true, &x(1), &a, &b);
        let (lp, mp) = (a.parts(), b.parts());
        let interlaced = (0..3).all(|i| lp[i] >= mp[i] && lp.get(i + 1).is_none_or(|&nx| mp[i] >= nx));
        if !interlaced {
            prop_assert!(w.is_zero(), "{} {}", a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn lattice_width_is_irrelevant(l in (1usize..4).prop_flat_map(|n| partitions(n, 4)), extra in 1usize..3) {
        let w = l.largest() as usize + 1;
        let base = p_at_width(&l, w);
        prop_assert_eq!(p_at_width(&l, w + extra), base.clone());
        prop_assert_eq!(hl_p_lattice(&l, l.len()).unwrap(), base);
    }

    #[test]
    fn double_row_width_is_irrelevant(l in partitions(2, 3), extra in 1usize..3) {
        let xs = [x(1), x(2)];
        let bp = BoundaryParams::formal();
        let w = l.largest() as usize + 1;
        prop_assert_eq!(k_lattice_raw(&l, &xs, &bp, w + extra), k_lattice_raw(&l, &xs, &bp, w));
        prop_assert_eq!(l_lattice_raw(&l, &xs, &bp, w + extra), l_lattice_raw(&l, &xs, &bp, w));
    }

    #[test]
    fn one_row_k_is_inversion_symmetric(p in 0u32..5) {
        let l = part(&[p]);
        let k = k_lattice(&l, 1, &BoundaryParams::formal()).unwrap();
        prop_assert_eq!(invert(&k, 1), k);
    }
}
