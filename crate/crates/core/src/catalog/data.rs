use super::{Binding, CatalogEntry, DerivedParam, Domain, Hermitian, ParamSpec, Params, RicciSupport, Split};
use crate::exact::{int, one, rat, zero, Matrix, Rational};

fn p(params: &Params, name: &str) -> Rational {
    params.get(name).cloned().unwrap_or_else(|| panic!("parameter {name} not resolved"))
}

fn sq(x: &Rational) -> Rational {
    x * x
}

/// (1 + psi11^2) / psi12, the entry forced by J^2 = -I on the leading block.
fn q(params: &Params) -> Rational {
    (one() + sq(&p(params, "psi11"))) / p(params, "psi12")
}

fn vec6(terms: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![zero(); 6];
    for (k, c) in terms {
        v[k - 1] += c;
    }
    v
}

fn from_images(images: [Vec<(usize, Rational)>; 6]) -> Matrix {
    let cols: Vec<Vec<Rational>> = images.iter().map(|t| vec6(t)).collect();
    Matrix::from_fn(6, 6, |r, c| cols[c][r].clone())
}

fn from_rows(rows: [[Rational; 6]; 6]) -> Matrix {
    Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).expect("6x6 rows")
}

/// -1/2 * [[a, b], [b, c]] in the upper-left corner.
fn neg_half_block(a: Rational, b: Rational, c: Rational) -> Matrix {
    let h = rat(-1, 2);
    let mut m = Matrix::zeros(6, 6);
    m[(0, 0)] = &h * a;
    m[(0, 1)] = &h * &b;
    m[(1, 0)] = &h * b;
    m[(1, 1)] = &h * c;
    m
}

fn first_entry(a: Rational) -> Matrix {
    let mut m = Matrix::zeros(6, 6);
    m[(0, 0)] = a;
    m
}

fn leading_pair(params: &Params) -> [Vec<(usize, Rational)>; 2] {
    let (a, b) = (p(params, "psi11"), p(params, "psi12"));
    [vec![(1, a.clone()), (2, -q(params))], vec![(1, b), (2, -a)]]
}

// G1 ---------------------------------------------------------------------

fn g1_form(x: &Params) -> Vec<(usize, usize, Rational)> {
    let t = p(x, "t");
    vec![(1, 6, one()), (2, 5, one() - &t), (3, 4, t)]
}

fn g1_acs(x: &Params) -> Matrix {
    let [c1, c2] = leading_pair(x);
    let (a, b, u, s) = (p(x, "psi11"), p(x, "psi12"), p(x, "t") - one(), p(x, "psi34"));
    from_images([
        c1,
        c2,
        vec![(4, -s.recip())],
        vec![(3, s)],
        vec![(5, a.clone()), (6, -q(x) * &u)],
        vec![(5, b / u), (6, -a)],
    ])
}

fn g1_shown(x: &Params) -> Vec<(usize, Vec<Rational>)> {
    let (a, b, u) = (p(x, "psi11"), p(x, "psi12"), p(x, "t") - one());
    vec![
        (2, vec6(&[(1, b.clone()), (2, -a.clone())])),
        (4, vec6(&[(3, p(x, "psi34"))])),
        (6, vec6(&[(5, b / u), (6, -a)])),
    ]
}

fn g1_ricci(x: &Params) -> Matrix {
    let (a, b, u2, s) = (p(x, "psi11"), p(x, "psi12"), sq(&(p(x, "t") - one())), p(x, "psi34"));
    neg_half_block((sq(&a) * sq(&b) + &u2 * sq(&s)) / &u2, &a * &b * &b * &b / &u2, sq(&sq(&b)) / &u2)
}

fn g1_psi34(x: &Params) -> Rational {
    p(x, "psi12") / (p(x, "t") - one())
}

fn g1_hermitian(x: &Params) -> bool {
    sq(&p(x, "psi34")) == sq(&g1_psi34(x))
}

fn g1_riem_acs(_: &Params) -> Matrix {
    from_images([
        vec![(6, one())],
        vec![(5, one())],
        vec![(4, one())],
        vec![(3, -one())],
        vec![(2, -one())],
        vec![(1, -one())],
    ])
}

// G2, G3 ------------------------------------------------------------------

fn g2_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 6, one()), (2, 4, one()), (2, 5, -one()), (3, 4, one())]
}

fn g2_acs(x: &Params) -> Matrix {
    let (a, b, s, qq) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi34"), q(x));
    let z = zero;
    let si = s.recip();
    from_rows([
        [a.clone(), b.clone(), z(), z(), z(), z()],
        [-qq.clone(), -a.clone(), z(), z(), z(), z()],
        [z(), z(), z(), s, z(), z()],
        [z(), z(), -si.clone(), z(), z(), z()],
        [z(), z(), -si, -a.clone(), a.clone(), b],
        [z(), z(), z(), qq.clone(), -qq, -a],
    ])
}

fn ricci_psi34_first(x: &Params) -> Matrix {
    let (a, b, s) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi34"));
    neg_half_block(sq(&a) * sq(&b) + sq(&s), &a * &b * &b * &b, sq(&sq(&b)))
}

fn psi34_is_psi12(x: &Params) -> Rational {
    p(x, "psi12")
}

fn psi34_pm_psi12(x: &Params) -> bool {
    sq(&p(x, "psi34")) == sq(&p(x, "psi12"))
}

fn g3_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 6, one()), (2, 5, -one()), (3, 4, one())]
}

fn g3_acs(x: &Params) -> Matrix {
    let [c1, c2] = leading_pair(x);
    let (a, b, s) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi34"));
    from_images([c1, c2, vec![(4, -s.recip())], vec![(3, s)], vec![(5, a.clone()), (6, -q(x))], vec![(5, b), (6, -a)]])
}

fn g3_shown(x: &Params) -> Vec<(usize, Vec<Rational>)> {
    let (a, b) = (p(x, "psi11"), p(x, "psi12"));
    vec![(2, vec6(&[(1, b.clone()), (2, -a.clone())])), (4, vec6(&[(3, p(x, "psi34"))])), (6, vec6(&[(5, b), (6, -a)]))]
}

// G4, G5 ------------------------------------------------------------------

fn g4_form(x: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 4, one()), (1, 5, p(x, "t")), (1, 6, one()), (2, 5, one()), (3, 4, one())]
}

fn g4_acs(x: &Params) -> Matrix {
    let (a, b, s, t, qq) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi34"), p(x, "t"), q(x));
    let z = zero;
    let bt = &b * &t;
    let corner = (one() + sq(&a) + sq(&bt) - int(2) * &a * &bt) / &b;
    from_rows([
        [a.clone(), b.clone(), z(), z(), z(), z()],
        [-qq, -a.clone(), z(), z(), z(), z()],
        [z(), z(), z(), s.clone(), z(), z()],
        [z(), z(), -s.recip(), z(), z(), z()],
        [z(), z(), z(), -b.clone(), &a - &bt, -b],
        [z(), z(), s.recip(), &bt - &a, corner, &bt - &a],
    ])
}

fn g4_ricci(x: &Params) -> Matrix {
    let (a, b, s) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi34"));
    neg_half_block(sq(&a) * sq(&b), &a * &b * &b * &b, sq(&sq(&b)) + sq(&s))
}

fn g5_1_form(x: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 4, p(x, "t")), (1, 5, one()), (1, 6, one()), (2, 4, one()), (3, 5, one())]
}

fn g5_1_acs(x: &Params) -> Matrix {
    let (a, b, s, t, qq) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi35"), p(x, "t"), q(x));
    let z = zero;
    let bt = &b * &t;
    let corner = (one() + sq(&a) + sq(&bt) - int(2) * &a * &bt) / &b;
    from_rows([
        [a.clone(), b.clone(), z(), z(), z(), z()],
        [-qq, -a.clone(), z(), z(), z(), z()],
        [z(), z(), z(), z(), s.clone(), z()],
        [z(), z(), z(), &a - &bt, -b.clone(), -b],
        [z(), z(), -s.recip(), z(), z(), z()],
        [z(), z(), s.recip(), corner, &bt - &a, &bt - &a],
    ])
}

fn g5_1_ricci(x: &Params) -> Matrix {
    let (a, b, s) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi35"));
    neg_half_block(sq(&a) * sq(&b), &a * &b * &b * &b, sq(&sq(&b)) + sq(&s))
}

/// psi12^2 + 1, the recurring factor of the second to fourth G5 structures.
fn s5(x: &Params) -> Rational {
    sq(&p(x, "psi12")) + one()
}

fn g5_psi34(x: &Params) -> Rational {
    s5(x) / (int(4) * p(x, "psi12"))
}

fn g5_2_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 5, int(-2)), (1, 6, one()), (2, 4, int(-2)), (2, 6, one()), (3, 4, one()), (3, 5, one())]
}

fn g5_2_acs(x: &Params) -> Matrix {
    let (pp, s, f) = (p(x, "psi12"), s5(x), p(x, "psi34"));
    let z = zero;
    let h = (sq(&pp) - one()) / (int(2) * &pp);
    from_rows([
        [z(), pp.clone(), z(), z(), z(), z()],
        [-pp.recip(), z(), z(), z(), z(), z()],
        [int(-2) / &pp, z(), z(), f.clone(), f.clone(), z()],
        [z(), z(), int(-4) * &pp / &s, z(), -h.clone(), f.clone()],
        [z(), int(8) * &pp / &s, z(), z(), h.clone(), -f],
        [int(-32) * &pp / sq(&s), int(16) * (sq(&pp) - one()) * &pp / sq(&s), z(), z(), &s / &pp, -h],
    ])
}

fn g5_3_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![
        (1, 4, one()),
        (1, 5, -one()),
        (1, 6, one()),
        (2, 4, -one()),
        (2, 5, one()),
        (2, 6, one()),
        (3, 4, one()),
        (3, 5, one()),
    ]
}

fn g5_3_acs(x: &Params) -> Matrix {
    let (pp, s, f) = (p(x, "psi12"), s5(x), p(x, "psi34"));
    let z = zero;
    let h = (sq(&pp) - one()) / (int(2) * &pp);
    let ip = pp.recip();
    from_rows([
        [z(), pp.clone(), z(), z(), z(), z()],
        [-ip.clone(), z(), z(), z(), z(), z()],
        [z(), -(&s / &pp), ip.clone(), f.clone(), f.clone(), z()],
        [z(), z(), int(-4) * &ip, -ip.clone(), -(&s / (int(2) * &pp)), f.clone()],
        [int(-4) * &ip, int(4) * &ip, z(), z(), h.clone(), -f],
        [int(-8) * &ip, int(-8) * &ip, z(), z(), &s / &pp, -h],
    ])
}

fn g5_4_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 4, int(2)), (1, 6, one()), (2, 5, int(2)), (2, 6, one()), (3, 4, one()), (3, 5, one())]
}

fn g5_4_acs(x: &Params) -> Matrix {
    let (pp, s, f) = (p(x, "psi12"), s5(x), p(x, "psi34"));
    let z = zero;
    let m = sq(&pp) - one();
    let h = &m / (int(2) * &pp);
    let j61 = int(-16) * &pp * &pp * &pp * &m / sq(&s);
    from_rows([
        [z(), pp.clone(), z(), z(), z(), z()],
        [-pp.recip(), z(), z(), z(), z(), z()],
        [int(2) * &pp, z(), z(), f.clone(), f.clone(), z()],
        [z(), z(), int(2) * &pp * &m / &s, z(), -h.clone(), f.clone()],
        [z(), int(-8) * &pp * &pp * &pp / &s, int(-2) * &pp, z(), h.clone(), -f],
        [j61.clone(), j61, int(-4) * &pp * &m / &s, int(-2) * &pp, -(&m / &pp), -h],
    ])
}

fn g5_ricci(x: &Params) -> Matrix {
    let (pp, s) = (p(x, "psi12"), s5(x));
    let s3 = &s * &s * &s;
    let mut m = Matrix::zeros(6, 6);
    m[(0, 0)] = -(&s3 / (int(32) * sq(&sq(&pp))));
    m[(1, 1)] = -(s3 / (int(32) * sq(&pp)));
    m
}

fn fixed_zero(_: &Params) -> Rational {
    zero()
}

// G6 ----------------------------------------------------------------------

fn g6_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 6, one()), (2, 4, one()), (2, 5, one()), (3, 4, -one())]
}

fn g6_acs(x: &Params) -> Matrix {
    let (c, d) = (p(x, "psi33"), p(x, "psi43"));
    let z = zero;
    from_rows([
        [z(), one(), z(), z(), z(), z()],
        [-one(), z(), z(), z(), z(), z()],
        [z(), z(), c.clone(), -(one() + sq(&c)) / &d, z(), z()],
        [z(), z(), d.clone(), -c.clone(), z(), z()],
        [z(), z(), -d, c, z(), -one()],
        [z(), z(), z(), one(), one(), z()],
    ])
}

fn g6_ricci(x: &Params) -> Matrix {
    let (c, d) = (p(x, "psi33"), p(x, "psi43"));
    first_entry(-(sq(&(one() + sq(&c))) / (int(2) * sq(&d))))
}

// G7, G9, G19 -------------------------------------------------------------

fn g7_1_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 3, one()), (2, 6, one()), (4, 5, -one())]
}

fn g7_1_acs(x: &Params) -> Matrix {
    let [c1, c2] = leading_pair(x);
    let (a, b, f) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi45"));
    from_images([c1, c2, vec![(3, -a.clone()), (6, -b)], vec![(5, -f.recip())], vec![(4, f)], vec![(3, q(x)), (6, a)]])
}

fn g7_1_shown(x: &Params) -> Vec<(usize, Vec<Rational>)> {
    let (a, b) = (p(x, "psi11"), p(x, "psi12"));
    vec![
        (2, vec6(&[(1, b.clone()), (2, -a.clone())])),
        (3, vec6(&[(3, -a), (6, -b)])),
        (5, vec6(&[(4, p(x, "psi45"))])),
    ]
}

fn g7_1_ricci(x: &Params) -> Matrix {
    let (a, b, f) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi45"));
    let m = one() + sq(&a);
    let m2 = sq(&m);
    neg_half_block((sq(&m2) + sq(&f) * sq(&sq(&b))) / sq(&sq(&b)), &m2 * &m * &a / (&b * &b * &b), m2 * sq(&a) / sq(&b))
}

/// Lower-right block with J(e6) = -psi12 e5 - psi11 e6; the middle pair maps
/// J(e4) = psi34 e3.
fn middle_lower_acs(x: &Params) -> Matrix {
    let [c1, c2] = leading_pair(x);
    let (a, b, s) = (p(x, "psi11"), p(x, "psi12"), p(x, "psi34"));
    from_images([c1, c2, vec![(4, -s.recip())], vec![(3, s)], vec![(5, a.clone()), (6, q(x))], vec![(5, -b), (6, -a)]])
}

fn middle_lower_shown(x: &Params) -> Vec<(usize, Vec<Rational>)> {
    let (a, b) = (p(x, "psi11"), p(x, "psi12"));
    vec![
        (2, vec6(&[(1, b.clone()), (2, -a.clone())])),
        (4, vec6(&[(3, p(x, "psi34"))])),
        (6, vec6(&[(5, -b), (6, -a)])),
    ]
}

fn ricci_lower(x: &Params) -> Matrix {
    let (a, b) = (p(x, "psi11"), p(x, "psi12"));
    neg_half_block(sq(&a) * sq(&b), &a * &b * &b * &b, sq(&sq(&b)))
}

fn g8_ricci(x: &Params) -> Matrix {
    ricci_psi34_first(x)
}

fn fixed_one(_: &Params) -> Rational {
    one()
}

fn fixed_minus_one(_: &Params) -> Rational {
    -one()
}

fn std_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 6, one()), (2, 5, one()), (3, 4, -one())]
}

fn g19_acs(x: &Params) -> Matrix {
    let f = p(x, "psi45");
    from_images([
        vec![(2, -one())],
        vec![(1, one())],
        vec![(6, -one())],
        vec![(5, -f.recip())],
        vec![(4, f)],
        vec![(3, one())],
    ])
}

fn g19_shown(x: &Params) -> Vec<(usize, Vec<Rational>)> {
    vec![(2, vec6(&[(1, one())])), (5, vec6(&[(4, p(x, "psi45"))])), (6, vec6(&[(3, one())]))]
}

fn g19_ricci(x: &Params) -> Matrix {
    first_entry(rat(-1, 2) * sq(&p(x, "psi45")))
}

// G20, G22 ----------------------------------------------------------------

fn g20_acs(x: &Params) -> Matrix {
    let s = p(x, "psi34");
    from_images([
        vec![(2, -one())],
        vec![(1, one())],
        vec![(4, -s.recip())],
        vec![(3, s)],
        vec![(6, one())],
        vec![(5, -one())],
    ])
}

fn g20_shown(x: &Params) -> Vec<(usize, Vec<Rational>)> {
    vec![(2, vec6(&[(1, one())])), (4, vec6(&[(3, p(x, "psi34"))])), (5, vec6(&[(6, one())]))]
}

fn g20_ricci(x: &Params) -> Matrix {
    first_entry(rat(-1, 2) * sq(&p(x, "psi34")))
}

fn g22_form(_: &Params) -> Vec<(usize, usize, Rational)> {
    vec![(1, 6, one()), (2, 5, one()), (3, 4, one())]
}

// -------------------------------------------------------------------------

const G1_BRACKETS: &[(usize, usize, usize, i64)] =
    &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 5, 1), (2, 4, 6, 1)];
const G2_BRACKETS: &[(usize, usize, usize, i64)] =
    &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 6, 1)];
const G3_BRACKETS: &[(usize, usize, usize, i64)] = &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1)];
const G4_BRACKETS: &[(usize, usize, usize, i64)] =
    &[(1, 2, 3, 1), (1, 3, 5, 1), (1, 5, 6, 1), (2, 3, 4, 1), (2, 4, 6, 1)];
const G5_BRACKETS: &[(usize, usize, usize, i64)] =
    &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 6, -1), (2, 3, 5, 1), (2, 5, 6, 1)];
const G6_BRACKETS: &[(usize, usize, usize, i64)] = &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (2, 3, 6, 1)];
const G7_BRACKETS: &[(usize, usize, usize, i64)] =
    &[(1, 2, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 6, 1), (2, 4, 6, 1)];
const G8_BRACKETS: &[(usize, usize, usize, i64)] =
    &[(1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 5, 1), (2, 4, 6, 1)];
const G9_BRACKETS: &[(usize, usize, usize, i64)] = &[(1, 2, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 6, 1)];
const G19_BRACKETS: &[(usize, usize, usize, i64)] = &[(1, 2, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1)];
const G20_BRACKETS: &[(usize, usize, usize, i64)] = &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (2, 3, 5, 1)];
const G22_BRACKETS: &[(usize, usize, usize, i64)] = &[(1, 2, 5, 1), (1, 5, 6, 1)];

const PSI: &[ParamSpec] =
    &[ParamSpec { name: "psi11", domain: Domain::Any }, ParamSpec { name: "psi12", domain: Domain::NonZero }];
const G1_PARAMS: &[ParamSpec] = &[
    ParamSpec { name: "t", domain: Domain::AvoidZeroOne },
    ParamSpec { name: "psi11", domain: Domain::Any },
    ParamSpec { name: "psi12", domain: Domain::NonZero },
];
const G4_PARAMS: &[ParamSpec] = &[
    ParamSpec { name: "t", domain: Domain::Any },
    ParamSpec { name: "psi11", domain: Domain::Any },
    ParamSpec { name: "psi12", domain: Domain::NonZero },
    ParamSpec { name: "psi34", domain: Domain::NonZero },
];
const G5_1_PARAMS: &[ParamSpec] = &[
    ParamSpec { name: "t", domain: Domain::Any },
    ParamSpec { name: "psi11", domain: Domain::Any },
    ParamSpec { name: "psi12", domain: Domain::NonZero },
    ParamSpec { name: "psi35", domain: Domain::NonZero },
];
const G5_PARAMS: &[ParamSpec] = &[ParamSpec { name: "psi12", domain: Domain::NonZero }];
const G6_PARAMS: &[ParamSpec] =
    &[ParamSpec { name: "psi33", domain: Domain::Any }, ParamSpec { name: "psi43", domain: Domain::NonZero }];
const G7_PARAMS: &[ParamSpec] = &[
    ParamSpec { name: "psi11", domain: Domain::Any },
    ParamSpec { name: "psi12", domain: Domain::NonZero },
    ParamSpec { name: "psi45", domain: Domain::NonZero },
];
const G19_PARAMS: &[ParamSpec] = &[ParamSpec { name: "psi45", domain: Domain::NonZero }];
const G20_PARAMS: &[ParamSpec] = &[ParamSpec { name: "psi34", domain: Domain::NonZero }];
const RIEM_PARAMS: &[ParamSpec] = &[ParamSpec { name: "t", domain: Domain::OpenUnit }];

const G1_DERIVED: &[DerivedParam] = &[DerivedParam {
    name: "psi34",
    binding: Binding::Default,
    domain: Domain::NonZero,
    rule: "psi12/(t-1)",
    value: g1_psi34,
}];
const PSI34_DEFAULT: &[DerivedParam] = &[DerivedParam {
    name: "psi34",
    binding: Binding::Default,
    domain: Domain::NonZero,
    rule: "psi12",
    value: psi34_is_psi12,
}];
const G5_DERIVED: &[DerivedParam] = &[
    DerivedParam { name: "psi11", binding: Binding::Fixed, domain: Domain::Any, rule: "0", value: fixed_zero },
    DerivedParam {
        name: "psi34",
        binding: Binding::Fixed,
        domain: Domain::NonZero,
        rule: "(1+psi12^2)/(4*psi12)",
        value: g5_psi34,
    },
];
const PSI34_ONE: &[DerivedParam] =
    &[DerivedParam { name: "psi34", binding: Binding::Fixed, domain: Domain::NonZero, rule: "1", value: fixed_one }];
const PSI34_MINUS_ONE: &[DerivedParam] = &[DerivedParam {
    name: "psi34",
    binding: Binding::Fixed,
    domain: Domain::NonZero,
    rule: "-1",
    value: fixed_minus_one,
}];

const E56: &[&[(usize, i64)]] = &[&[(5, 1)], &[(6, 1)]];
const E36: &[&[(usize, i64)]] = &[&[(3, 1)], &[(6, 1)]];
const E46: &[&[(usize, i64)]] = &[&[(4, 1)], &[(6, 1)]];
const E4M5_6: &[&[(usize, i64)]] = &[&[(4, 1), (5, -1)], &[(6, 1)]];

const PAIRS: Split = Split { a: &[1, 2], b: &[3, 4], c: &[5, 6], asserted: false };

const LEADING_IMAGES: &[&str] = &["J(e1) = psi11 e1 - (1+psi11^2)/psi12 e2", "J(e2) = psi12 e1 - psi11 e2"];

const G5_NOTE: &str = "psi11 is fixed to 0 and psi34 = (1+psi12^2)/(4*psi12); the Ricci tensor is J-Hermitian";

pub(super) static ENTRIES: [CatalogEntry; 17] = [
    CatalogEntry {
        id: "G1",
        group: "G1",
        summary: "filiform, omega = e1^e6 + (1-t) e2^e5 + t e3^e4, pseudo-Riemannian metric",
        brackets: G1_BRACKETS,
        params: G1_PARAMS,
        derived: G1_DERIVED,
        form_text: "e1^e6 + (1-t) e2^e5 + t e3^e4",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = -1/psi34 e4",
            "J(e4) = psi34 e3",
            "J(e5) = psi11 e5 - (t-1)(1+psi11^2)/psi12 e6",
            "J(e6) = psi12/(t-1) e5 - psi11 e6",
        ],
        hermitian: Hermitian::When { rule: "psi34 = +-psi12/(t-1)", holds: g1_hermitian },
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: Some(Split { asserted: true, ..PAIRS }),
        reference: &[("t", 1, 2), ("psi11", 1, 1), ("psi12", 2, 1)],
        notes: &["the almost complex structure is almost nilpotent for the chain span{e5,e6} < span{e3,...,e6} < g"],
        form: g1_form,
        acs: g1_acs,
        shown: Some(g1_shown),
        ricci: Some(g1_ricci),
    },
    CatalogEntry {
        id: "G1.riem",
        group: "G1",
        summary: "filiform, omega = e1^e6 + (1-t) e2^e5 + t e3^e4 with 0 < t < 1, Riemannian metric",
        brackets: G1_BRACKETS,
        params: RIEM_PARAMS,
        derived: &[],
        form_text: "e1^e6 + (1-t) e2^e5 + t e3^e4",
        acs_text: &["J(e1) = e6, J(e2) = e5, J(e3) = e4", "J(e4) = -e3, J(e5) = -e2, J(e6) = -e1"],
        hermitian: Hermitian::Unstated,
        support: RicciSupport::Unstated,
        riemannian: true,
        chain_base: &[],
        decomposition: None,
        reference: &[("t", 1, 2)],
        notes: &[
            "positive definite associated metric for t in (0,1)",
            "no closed forms are stated for this variant; curvature values are computed only",
        ],
        form: g1_form,
        acs: g1_riem_acs,
        shown: None,
        ricci: None,
    },
    CatalogEntry {
        id: "G2",
        group: "G2",
        summary: "filiform, omega = e1^e6 + e2^e4 - e2^e5 + e3^e4",
        brackets: G2_BRACKETS,
        params: PSI,
        derived: PSI34_DEFAULT,
        form_text: "e1^e6 + e2^e4 - e2^e5 + e3^e4",
        acs_text: &[
            "row 1: psi11, psi12, 0, 0, 0, 0",
            "row 2: -(1+psi11^2)/psi12, -psi11, 0, 0, 0, 0",
            "row 3: 0, 0, 0, psi34, 0, 0",
            "row 4: 0, 0, -1/psi34, 0, 0, 0",
            "row 5: 0, 0, -1/psi34, -psi11, psi11, psi12",
            "row 6: 0, 0, 0, (1+psi11^2)/psi12, -(1+psi11^2)/psi12, -psi11",
        ],
        hermitian: Hermitian::When { rule: "psi34 = +-psi12", holds: psi34_pm_psi12 },
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: Some(PAIRS),
        reference: &[("psi11", 0, 1), ("psi12", 1, 1)],
        notes: &["also listed as the family lambda*(e1^e6 + e2^e4 + e3^e4 - e2^e5), lambda != 0; use the lambda parameter to scale"],
        form: g2_form,
        acs: g2_acs,
        shown: None,
        ricci: Some(ricci_psi34_first),
    },
    CatalogEntry {
        id: "G3",
        group: "G3",
        summary: "filiform, omega = e1^e6 - e2^e5 + e3^e4",
        brackets: G3_BRACKETS,
        params: PSI,
        derived: PSI34_DEFAULT,
        form_text: "e1^e6 - e2^e5 + e3^e4",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = -1/psi34 e4",
            "J(e4) = psi34 e3",
            "J(e5) = psi11 e5 - (1+psi11^2)/psi12 e6",
            "J(e6) = psi12 e5 - psi11 e6",
        ],
        hermitian: Hermitian::When { rule: "psi34 = +-psi12", holds: psi34_pm_psi12 },
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: Some(PAIRS),
        reference: &[("psi11", 0, 1), ("psi12", 1, 1)],
        notes: &["C1g is J-invariant"],
        form: g3_form,
        acs: g3_acs,
        shown: Some(g3_shown),
        ricci: Some(ricci_psi34_first),
    },
    CatalogEntry {
        id: "G4",
        group: "G4",
        summary: "omega = e1^e4 + t e1^e5 + e1^e6 + e2^e5 + e3^e4",
        brackets: G4_BRACKETS,
        params: G4_PARAMS,
        derived: &[],
        form_text: "e1^e4 + t e1^e5 + e1^e6 + e2^e5 + e3^e4",
        acs_text: &[
            "row 1: psi11, psi12, 0, 0, 0, 0",
            "row 2: -(1+psi11^2)/psi12, -psi11, 0, 0, 0, 0",
            "row 3: 0, 0, 0, psi34, 0, 0",
            "row 4: 0, 0, -1/psi34, 0, 0, 0",
            "row 5: 0, 0, 0, -psi12, psi11 - psi12 t, -psi12",
            "row 6: 0, 0, 1/psi34, psi12 t - psi11, (1 + psi11^2 + psi12^2 t^2 - 2 psi11 psi12 t)/psi12, psi12 t - psi11",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: None,
        reference: &[("t", 1, 1), ("psi11", 0, 1), ("psi12", 1, 1), ("psi34", 1, 1)],
        notes: &["basis with e4 and e5 exchanged relative to the listing [e1,e4] = e6, [e2,e3] = e5, [e2,e5] = e6"],
        form: g4_form,
        acs: g4_acs,
        shown: None,
        ricci: Some(g4_ricci),
    },
    CatalogEntry {
        id: "G5.1",
        group: "G5",
        summary: "omega = t e1^e4 + e1^e5 + e1^e6 + e2^e4 + e3^e5",
        brackets: G5_BRACKETS,
        params: G5_1_PARAMS,
        derived: &[],
        form_text: "t e1^e4 + e1^e5 + e1^e6 + e2^e4 + e3^e5",
        acs_text: &[
            "row 1: psi11, psi12, 0, 0, 0, 0",
            "row 2: -(1+psi11^2)/psi12, -psi11, 0, 0, 0, 0",
            "row 3: 0, 0, 0, 0, psi35, 0",
            "row 4: 0, 0, 0, psi11 - psi12 t, -psi12, -psi12",
            "row 5: 0, 0, -1/psi35, 0, 0, 0",
            "row 6: 0, 0, 1/psi35, (1 + psi11^2 + psi12^2 t^2 - 2 psi11 psi12 t)/psi12, psi12 t - psi11, psi12 t - psi11",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E46,
        decomposition: None,
        reference: &[("t", 1, 1), ("psi11", 0, 1), ("psi12", 1, 1), ("psi35", 1, 1)],
        notes: &[],
        form: g5_1_form,
        acs: g5_1_acs,
        shown: None,
        ricci: Some(g5_1_ricci),
    },
    CatalogEntry {
        id: "G5.2",
        group: "G5",
        summary: "omega = e1^e6 - 2 e1^e5 - 2 e2^e4 + e2^e6 + e3^e4 + e3^e5",
        brackets: G5_BRACKETS,
        params: G5_PARAMS,
        derived: G5_DERIVED,
        form_text: "e1^e6 - 2 e1^e5 - 2 e2^e4 + e2^e6 + e3^e4 + e3^e5",
        acs_text: &[
            "row 1: 0, psi12, 0, 0, 0, 0",
            "row 2: -1/psi12, 0, 0, 0, 0, 0",
            "row 3: -2/psi12, 0, 0, psi34, psi34, 0",
            "row 4: 0, 0, -4 psi12/s, 0, (1-psi12^2)/(2 psi12), psi34",
            "row 5: 0, 8 psi12/s, 0, 0, (psi12^2-1)/(2 psi12), -psi34",
            "row 6: -32 psi12/s^2, 16 psi12 (psi12^2-1)/s^2, 0, 0, s/psi12, (1-psi12^2)/(2 psi12)",
            "where s = 1 + psi12^2",
        ],
        hermitian: Hermitian::Always,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E4M5_6,
        decomposition: None,
        reference: &[("psi12", 2, 1)],
        notes: &[G5_NOTE],
        form: g5_2_form,
        acs: g5_2_acs,
        shown: None,
        ricci: Some(g5_ricci),
    },
    CatalogEntry {
        id: "G5.3",
        group: "G5",
        summary: "omega = e1^e4 - e1^e5 + e1^e6 - e2^e4 + e2^e5 + e2^e6 + e3^e4 + e3^e5",
        brackets: G5_BRACKETS,
        params: G5_PARAMS,
        derived: G5_DERIVED,
        form_text: "e1^e4 - e1^e5 + e1^e6 - e2^e4 + e2^e5 + e2^e6 + e3^e4 + e3^e5",
        acs_text: &[
            "row 1: 0, psi12, 0, 0, 0, 0",
            "row 2: -1/psi12, 0, 0, 0, 0, 0",
            "row 3: 0, -s/psi12, 1/psi12, psi34, psi34, 0",
            "row 4: 0, 0, -4/psi12, -1/psi12, -s/(2 psi12), psi34",
            "row 5: -4/psi12, 4/psi12, 0, 0, (psi12^2-1)/(2 psi12), -psi34",
            "row 6: -8/psi12, -8/psi12, 0, 0, s/psi12, (1-psi12^2)/(2 psi12)",
            "where s = 1 + psi12^2",
        ],
        hermitian: Hermitian::Always,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E4M5_6,
        decomposition: None,
        reference: &[("psi12", 2, 1)],
        notes: &[
            G5_NOTE,
            "the (4,5) entry is -s/(2 psi12), reconstructed from J^2 = -I and compatibility",
        ],
        form: g5_3_form,
        acs: g5_3_acs,
        shown: None,
        ricci: Some(g5_ricci),
    },
    CatalogEntry {
        id: "G5.4",
        group: "G5",
        summary: "omega = 2 e1^e4 + e1^e6 + 2 e2^e5 + e2^e6 + e3^e4 + e3^e5",
        brackets: G5_BRACKETS,
        params: G5_PARAMS,
        derived: G5_DERIVED,
        form_text: "2 e1^e4 + e1^e6 + 2 e2^e5 + e2^e6 + e3^e4 + e3^e5",
        acs_text: &[
            "row 1: 0, psi12, 0, 0, 0, 0",
            "row 2: -1/psi12, 0, 0, 0, 0, 0",
            "row 3: 2 psi12, 0, 0, psi34, psi34, 0",
            "row 4: 0, 0, 2 psi12 m/s, 0, -m/(2 psi12), psi34",
            "row 5: 0, -8 psi12^3/s, -2 psi12, 0, m/(2 psi12), -psi34",
            "row 6: -16 psi12^3 m/s^2, -16 psi12^3 m/s^2, -4 psi12 m/s, -2 psi12, -m/psi12, -m/(2 psi12)",
            "where s = 1 + psi12^2, m = psi12^2 - 1",
        ],
        hermitian: Hermitian::Always,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E4M5_6,
        decomposition: None,
        reference: &[("psi12", 2, 1)],
        notes: &[G5_NOTE],
        form: g5_4_form,
        acs: g5_4_acs,
        shown: None,
        ricci: Some(g5_ricci),
    },
    CatalogEntry {
        id: "G6",
        group: "G6",
        summary: "omega = e1^e6 + e2^e4 + e2^e5 - e3^e4",
        brackets: G6_BRACKETS,
        params: G6_PARAMS,
        derived: &[],
        form_text: "e1^e6 + e2^e4 + e2^e5 - e3^e4",
        acs_text: &[
            "row 1: 0, 1, 0, 0, 0, 0",
            "row 2: -1, 0, 0, 0, 0, 0",
            "row 3: 0, 0, psi33, -(1+psi33^2)/psi43, 0, 0",
            "row 4: 0, 0, psi43, -psi33, 0, 0",
            "row 5: 0, 0, -psi43, psi33, 0, -1",
            "row 6: 0, 0, 0, 1, 1, 0",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::FirstEntry,
        riemannian: false,
        chain_base: E56,
        decomposition: None,
        reference: &[("psi33", 0, 1), ("psi43", 1, 1)],
        notes: &["the negated form -omega is also symplectic and gives no new structure"],
        form: g6_form,
        acs: g6_acs,
        shown: None,
        ricci: Some(g6_ricci),
    },
    CatalogEntry {
        id: "G7.1",
        group: "G7",
        summary: "omega = e1^e3 + e2^e6 - e4^e5",
        brackets: G7_BRACKETS,
        params: G7_PARAMS,
        derived: &[],
        form_text: "e1^e3 + e2^e6 - e4^e5",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = -psi11 e3 - psi12 e6",
            "J(e4) = -1/psi45 e5",
            "J(e5) = psi45 e4",
            "J(e6) = (1+psi11^2)/psi12 e3 + psi11 e6",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E36,
        decomposition: None,
        reference: &[("psi11", 0, 1), ("psi12", 1, 1), ("psi45", 1, 1)],
        notes: &["the form family carries a global scale lambda != 0"],
        form: g7_1_form,
        acs: g7_1_acs,
        shown: Some(g7_1_shown),
        ricci: Some(g7_1_ricci),
    },
    CatalogEntry {
        id: "G7.2",
        group: "G7",
        summary: "omega = e1^e6 + e2^e5 - e3^e4",
        brackets: G7_BRACKETS,
        params: PSI,
        derived: PSI34_ONE,
        form_text: "e1^e6 + e2^e5 - e3^e4",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = -e4",
            "J(e4) = e3",
            "J(e5) = psi11 e5 + (1+psi11^2)/psi12 e6",
            "J(e6) = -psi12 e5 - psi11 e6",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: None,
        reference: &[("psi11", 0, 1), ("psi12", 1, 1)],
        notes: &["the form family carries a global scale lambda != 0"],
        form: std_form,
        acs: middle_lower_acs,
        shown: Some(middle_lower_shown),
        ricci: Some(ricci_lower),
    },
    CatalogEntry {
        id: "G8",
        group: "G8",
        summary: "omega = e1^e6 + e2^e5 - e3^e4",
        brackets: G8_BRACKETS,
        params: PSI,
        derived: PSI34_DEFAULT,
        form_text: "e1^e6 + e2^e5 - e3^e4",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = -1/psi34 e4",
            "J(e4) = psi34 e3",
            "J(e5) = psi11 e5 + (1+psi11^2)/psi12 e6",
            "J(e6) = -psi12 e5 - psi11 e6",
        ],
        hermitian: Hermitian::When { rule: "psi34 = +-psi12", holds: psi34_pm_psi12 },
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: None,
        reference: &[("psi11", 0, 1), ("psi12", 1, 1)],
        notes: &[],
        form: std_form,
        acs: middle_lower_acs,
        shown: Some(middle_lower_shown),
        ricci: Some(g8_ricci),
    },
    CatalogEntry {
        id: "G9",
        group: "G9",
        summary: "omega = e1^e3 + e2^e6 - e4^e5",
        brackets: G9_BRACKETS,
        params: G7_PARAMS,
        derived: &[],
        form_text: "e1^e3 + e2^e6 - e4^e5",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = -psi11 e3 - psi12 e6",
            "J(e4) = -1/psi45 e5",
            "J(e5) = psi45 e4",
            "J(e6) = (1+psi11^2)/psi12 e3 + psi11 e6",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E36,
        decomposition: None,
        reference: &[("psi11", 0, 1), ("psi12", 1, 1), ("psi45", 1, 1)],
        notes: &["the form family carries a global scale lambda != 0"],
        form: g7_1_form,
        acs: g7_1_acs,
        shown: Some(g7_1_shown),
        ricci: Some(g7_1_ricci),
    },
    CatalogEntry {
        id: "G19",
        group: "G19",
        summary: "omega = e1^e3 + e2^e6 - e4^e5",
        brackets: G19_BRACKETS,
        params: G19_PARAMS,
        derived: &[],
        form_text: "e1^e3 + e2^e6 - e4^e5",
        acs_text: &[
            "J(e1) = -e2, J(e2) = e1",
            "J(e3) = -e6, J(e6) = e3",
            "J(e4) = -1/psi45 e5, J(e5) = psi45 e4",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::FirstEntry,
        riemannian: false,
        chain_base: E36,
        decomposition: None,
        reference: &[("psi45", 2, 1)],
        notes: &[],
        form: g7_1_form,
        acs: g19_acs,
        shown: Some(g19_shown),
        ricci: Some(g19_ricci),
    },
    CatalogEntry {
        id: "G20",
        group: "G20",
        summary: "omega = e1^e6 + e2^e5 - e3^e4",
        brackets: G20_BRACKETS,
        params: G20_PARAMS,
        derived: &[],
        form_text: "e1^e6 + e2^e5 - e3^e4",
        acs_text: &[
            "J(e1) = -e2, J(e2) = e1",
            "J(e3) = -1/psi34 e4, J(e4) = psi34 e3",
            "J(e5) = e6, J(e6) = -e5",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::FirstEntry,
        riemannian: false,
        chain_base: E56,
        decomposition: None,
        reference: &[("psi34", 1, 1)],
        notes: &[],
        form: std_form,
        acs: g20_acs,
        shown: Some(g20_shown),
        ricci: Some(g20_ricci),
    },
    CatalogEntry {
        id: "G22",
        group: "G22",
        summary: "omega = e1^e6 + e2^e5 + e3^e4",
        brackets: G22_BRACKETS,
        params: PSI,
        derived: PSI34_MINUS_ONE,
        form_text: "e1^e6 + e2^e5 + e3^e4",
        acs_text: &[
            LEADING_IMAGES[0],
            LEADING_IMAGES[1],
            "J(e3) = e4",
            "J(e4) = -e3",
            "J(e5) = psi11 e5 + (1+psi11^2)/psi12 e6",
            "J(e6) = -psi12 e5 - psi11 e6",
        ],
        hermitian: Hermitian::Never,
        support: RicciSupport::UpperBlock,
        riemannian: false,
        chain_base: E56,
        decomposition: None,
        reference: &[("psi11", 0, 1), ("psi12", 1, 1)],
        notes: &[],
        form: g22_form,
        acs: middle_lower_acs,
        shown: Some(middle_lower_shown),
        ricci: Some(ricci_lower),
    },
];
