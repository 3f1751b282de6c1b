use std::f64::consts::{FRAC_PI_3, PI};

use super::checks as c;
use super::{
    CheckDef, CheckKind, Domain, Expected, OpClass, ParamSpec, Params, Reference, Slot, Witness, WitnessInstance,
};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector, C64};

const ANY: &[OpClass] = &OpClass::ALL;
const POSITIVE: &[OpClass] = &[OpClass::Positive];
const NORMAL: &[OpClass] = &[OpClass::Normal, OpClass::SelfAdjoint, OpClass::Positive, OpClass::Unitary];
const HERMITIAN_OR_NILPOTENT: &[OpClass] = &[OpClass::SelfAdjoint, OpClass::SquareZero];

const fn any(name: &'static str) -> Slot {
    Slot { name, classes: ANY }
}

const S_A: &[Slot] = &[any("A")];
const S_T: &[Slot] = &[any("T")];
const S_B: &[Slot] = &[any("B")];
const S_AB: &[Slot] = &[any("A"), any("B")];
const S_XY: &[Slot] = &[any("X"), any("Y")];
const S_TS: &[Slot] = &[any("T"), any("S")];
const S_BC: &[Slot] = &[any("B"), any("C")];
const S_ABCD: &[Slot] = &[any("A"), any("B"), any("C"), any("D")];
const S_ABXY: &[Slot] = &[any("A"), any("B"), any("X"), any("Y")];
const S_TS_POS: &[Slot] = &[Slot { name: "T", classes: POSITIVE }, Slot { name: "S", classes: POSITIVE }];
const S_TS_NORMAL: &[Slot] = &[Slot { name: "T", classes: NORMAL }, Slot { name: "S", classes: NORMAL }];
const S_C214: &[Slot] = &[any("A"), Slot { name: "B", classes: HERMITIAN_OR_NILPOTENT }];

const EXP_GRID: &[f64] = &[1.0, 1.5, 2.0, 3.0];
const FRACTION_GRID: &[f64] = &[0.25, 0.5, 0.75];
const ALUTHGE_GRID: &[f64] = &[0.0, 0.25, 0.5, 0.75, 1.0];

const fn exponent(name: &'static str) -> ParamSpec {
    ParamSpec { name, domain: Domain::AtLeast { min: 1.0 }, grid: EXP_GRID, default: 1.0 }
}

const fn fraction(name: &'static str) -> ParamSpec {
    ParamSpec { name, domain: Domain::Open { lo: 0.0, hi: 1.0 }, grid: FRACTION_GRID, default: 0.5 }
}

const R: ParamSpec = exponent("r");
const P: ParamSpec = exponent("p");
const S_EXP: ParamSpec = exponent("s");
const ALPHA: ParamSpec = fraction("alpha");
const NU: ParamSpec = fraction("nu");
const S_ALUTHGE: ParamSpec =
    ParamSpec { name: "s", domain: Domain::Closed { lo: 0.0, hi: 1.0 }, grid: ALUTHGE_GRID, default: 0.5 };
const THETA: ParamSpec = ParamSpec { name: "theta", domain: Domain::Angle, grid: &[0.0, FRAC_PI_3, PI], default: 0.0 };
const N_POW_POWER: ParamSpec =
    ParamSpec { name: "n_pow", domain: Domain::Integer { min: 1.0 }, grid: &[2.0, 3.0], default: 2.0 };
const N_POW: ParamSpec =
    ParamSpec { name: "n_pow", domain: Domain::Integer { min: 1.0 }, grid: &[1.0, 2.0, 3.0], default: 2.0 };

const PS: &[ParamSpec] = &[P, S_ALUTHGE];

/// `m ⊕ 0` in dimension `n ≥ 2`, from a real 2×2 block.
fn pad(rows: [[f64; 2]; 2], n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| if i < 2 && j < 2 { C64::new(rows[i][j], 0.0) } else { C64::new(0.0, 0.0) })
}

fn basis(n: usize, k: usize) -> ComplexVector {
    ComplexVector::from_fn(n, |i, _| if i == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
}

fn scalar(c: f64, n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n).scale_re(c)
}

fn instance(ops: Vec<ComplexMatrix>, params: Params) -> Option<WitnessInstance> {
    Some(WitnessInstance { ops, params, vectors: None })
}

const J: [[f64; 2]; 2] = [[0.0, 1.0], [0.0, 0.0]];
const HALF_J: [[f64; 2]; 2] = [[0.0, 0.5], [0.0, 0.0]];

fn w_l2_11(n: usize) -> Option<WitnessInstance> {
    (n >= 2).then(|| WitnessInstance {
        ops: vec![pad(HALF_J, n), pad(J, n)],
        params: Params::new(),
        vectors: Some(vec![basis(n, 1)]),
    })
}

fn w_t2_12(n: usize) -> Option<WitnessInstance> {
    if n < 2 {
        return None;
    }
    instance(vec![pad(HALF_J, n), pad(J, n)], Params::new())
}

fn w_c3_6(n: usize) -> Option<WitnessInstance> {
    instance(vec![scalar(0.5, n), scalar(0.5, n)], Params::new().with("p", 1.0).with("s", 1.0))
}

fn w_c3_8(n: usize) -> Option<WitnessInstance> {
    instance(vec![scalar(2.0, n), scalar(2.0, n)], Params::new().with("p", 1.0).with("s", 0.5))
}

fn w_c3_9(n: usize) -> Option<WitnessInstance> {
    if n < 2 {
        return None;
    }
    instance(vec![pad(J, n), pad(J, n)], Params::new().with("p", 1.0).with("s", 0.5))
}

fn w_kt_c3_9p(n: usize) -> Option<WitnessInstance> {
    instance(vec![scalar(1.0, n), scalar(1.0, n)], Params::new().with("p", 1.0))
}

fn w_c3_10(n: usize) -> Option<WitnessInstance> {
    instance(vec![scalar(1.0, n), scalar(1.0, n)], Params::new().with("p", 3.0).with("s", 0.5))
}

fn w_t4_7(n: usize) -> Option<WitnessInstance> {
    if n < 2 {
        return None;
    }
    instance(vec![scalar(1.0, n), pad(J, n)], Params::new().with("n_pow", 1.0))
}

fn w_buzano(n: usize) -> Option<WitnessInstance> {
    Some(WitnessInstance {
        ops: vec![scalar(0.5, n), scalar(0.5, n)],
        params: Params::new().with("r", 1.0).with("nu", 0.5),
        vectors: Some(vec![basis(n, 0)]),
    })
}

const fn literal_witness(description: &'static str, build: fn(usize) -> Option<WitnessInstance>) -> Witness {
    Witness { description, literal_only: true, build }
}

macro_rules! check {
    (
        $id:expr, $statement:expr, $slots:expr, $params:expr, $kind:ident, $expected:ident,
        $anchor:expr, $quote:expr, $literal:expr, $notes:expr, $witnesses:expr, $eval:expr
    ) => {
        CheckDef {
            id: $id,
            statement: $statement,
            slots: $slots,
            params: $params,
            kind: CheckKind::$kind,
            expected: Expected::$expected,
            reference: Reference { anchor: $anchor, quote: $quote },
            literal: $literal,
            notes: $notes,
            witnesses: $witnesses,
            eval: $eval,
        }
    };
}

static CHECKS: [CheckDef; 34] = [
    check!(
        "N1", "1/2 ||A|| <= w(A) <= ||A||", S_A, &[], Operator, Pass,
        "introduction", "essentially equivalent. The inequalities", None, "", &[], c::n1
    ),
    check!(
        "REF1", "w(T^n) <= w(T)^n", S_T, &[N_POW_POWER], Operator, Pass,
        "introduction", "the power inequality, which states", None, "", &[], c::ref1
    ),
    check!(
        "N2", "w(A) <= 1/2 || |A| + |A*| || <= 1/2 (||A|| + ||A^2||^{1/2})", S_A, &[], Operator, Pass,
        "introduction", "the subsequent inequalities are valid", None,
        "parts `left` and `right` bracket the middle term", &[], c::n2
    ),
    check!(
        "N3", "1/4 ||A*A + AA*|| <= w^2(A) <= 1/2 ||A*A + AA*||", S_A, &[], Operator, Pass,
        "introduction", "the subsequent inequalities are valid", None, "", &[], c::n3
    ),
    check!(
        "T2.5",
        "|<Xx,x>|^r + |<Yx,x>|^s <= 1/2 || |X|^{2r alpha} + |X*|^{2r(1-alpha)} + |Y|^{2s alpha} + |Y*|^{2s(1-alpha)} ||",
        S_XY, &[R, S_EXP, ALPHA], Vector, Pass,
        "Theorem 2.5", "satisfy the relation $f(t)g(t)=t$", None,
        "f(t) = t^alpha, g(t) = t^(1-alpha); the doubled relation sign is read as one inequality", &[], c::t2_5
    ),
    check!(
        "C2.6", "w(A^2) <= 1/2 || |A^2| + |(A^2)*| ||", S_A, &[], Operator, Pass,
        "Corollary 2.6", "letting $X=Y=A^2$", None, "", &[], c::c2_6
    ),
    check!(
        "C2.7", "w^r(B*A) <= 1/2 || |B*A|^r + |A*B|^r ||", S_AB, &[R], Operator, Pass,
        "Corollary 2.7", "setting $X=Y=B^*A$", None, "", &[], c::c2_7
    ),
    check!(
        "T2.8",
        "|<Ax,x>|^r |<Bx,x>|^s <= 1/2 || alpha(|A|^{2r nu/alpha} + |A*|^{2r(1-nu)/alpha}) + (1-alpha)(|B|^{2s nu/(1-alpha)} + |B*|^{2s(1-nu)/(1-alpha)}) ||",
        S_AB, &[R, S_EXP, ALPHA, NU], Vector, Pass,
        "Theorem 2.8", "$0<\\alpha<1$", None, "f(t) = t^nu, g(t) = t^(1-nu)", &[], c::t2_8
    ),
    check!(
        "F1", "w^{2r}(A) <= 1/2 || |A|^{2r} + |A*|^{2r} ||", S_A, &[R], Operator, Pass,
        "Remark 2.9", "considering the supremum over all", None, "", &[], c::f1
    ),
    check!(
        "L2.11",
        "|<a,b>| <= sqrt(||a||^2 - <a,e>^2) sqrt(||b||^2 - <b,e>^2) + |<a,e><e,b>|, a = Ax, b = Bx, e = x",
        S_AB, &[], Vector, Pass,
        "Lemma 2.11", "Let $a,b,e\\in\\mathcal{H}$",
        Some("also <= min{||a|| sqrt(||a||^2 - <a,e>^2), ||b|| sqrt(||b||^2 - <b,e>^2)} + |<a,e><e,b>|"),
        "a and b are rotated by unit scalars so that <a,e>, <b,e> >= 0",
        &[literal_witness("A = J/2 (+) 0, B = J (+) 0, x = e2: min-form gives 1/4 < 1/2", w_l2_11)], c::l2_11
    ),
    check!(
        "T2.12",
        "w(B*A) <= sqrt(||A||^2 + c^2(A)) sqrt(||B||^2 + c^2(B)) + w(A)w(B); w(A^2) <= ||A||^2 + c^2(A) + w^2(A)",
        S_AB, &[], Operator, Pass,
        "Theorem 2.12", "In particular, if $A=B$",
        Some("also <= min{||A|| sqrt(||A||^2 + c^2(A)), ||B|| sqrt(||B||^2 + c^2(B))} + w(A)w(B)"),
        "c(.) is the Crawford number",
        &[literal_witness("A = J/2 (+) 0, B = J (+) 0: min-form gives 0.375 < 0.5", w_t2_12)], c::t2_12
    ),
    check!(
        "T2.13",
        "w^2(AB +- BA*) <= 2||A||^2 (w(X^2) + w(Y^2) + sqrt((w(X^2) - w(Y^2))^2 + w^2(XY + YX))), B = X + iY",
        S_AB, &[], Operator, Pass,
        "Theorem 2.13", "Cartesian decomposition of $B$", None, "", &[], c::t2_13
    ),
    check!(
        "C2.14",
        "(i) XY + YX = 0: w(AB +- BA*) <= 2||A|| max{w^{1/2}(X^2), w^{1/2}(Y^2)}; (ii) B = B*: w(AB +- BA*) <= 2||A|| w^{1/2}(X^2); (iii) B = B*: w(AB) <= ||A|| w^{1/2}(X^2)",
        S_C214, &[], Operator, Pass,
        "Corollary 2.14", "If $XY+YX=0$", None,
        "parts whose hypothesis fails on an instance are skipped", &[], c::c2_14
    ),
    check!(
        "T2.15",
        "w(AB +- BA) <= w^{1/2}(A*A + AA*) w^{1/2}(B*B + BB*); w(AB +- BA) <= w^{1/2}(A*A + B*B) w^{1/2}(AA* + BB*)",
        S_AB, &[], Operator, Pass,
        "Theorem 2.15", "by the Cauchy-Schwarz inequality", None, "", &[], c::t2_15
    ),
    check!(
        "C2.16", "w^2(B) <= 1/2 w(B*B + BB*); w^2(B) <= 1/4 w(I + B*B) w(I + BB*)", S_B, &[], Operator, Pass,
        "Corollary 2.16", "For the special case $A=I$", None, "", &[], c::c2_16
    ),
    check!(
        "T3.1", "w^p(T) <= 1/2 (w^p(D_{s,t}(T)) + ||T||^p)", S_T, PS, Operator, Pass,
        "Theorem 3.1", "nondecreasing continuous convex function", None,
        "h(x) = x^p; D_{s,t} is the (s,t)-Aluthge transform, t = 1 - s", &[], c::t3_1
    ),
    check!(
        "L3.2", "r(AB + CD) <= 1/2 (w(BA) + w(DC)) + 1/2 sqrt((w(BA) - w(DC))^2 + 4||BC|| ||DA||)", S_ABCD, &[],
        Operator, Pass, "Lemma 3.2", "$r(AB+CD)\\leq$", None, "", &[], c::l3_2
    ),
    check!(
        "L3.3", "w(T) = max_theta ||Re(e^{i theta} T)||; w([[0, T], [0, 0]]) = ||T||/2", S_T, &[], Operator, Pass,
        "Lemma 3.3", "$\\frac{1}{2}\\norm{T}$", None, "identities", &[], c::l3_3
    ),
    check!(
        "C3.4", "w^p(T) <= 1/4 || |T|^{2tp} + |T|^{2sp} || + 1/2 w^p(D_{s,t}(T))", S_T, PS, Operator, Pass,
        "Corollary 3.4", "arithmetic-geometric inequality", None, "h(x) = x^p, t = 1 - s", &[], c::c3_4
    ),
    check!(
        "T3.5",
        "w^p([[0, T], [S, 0]]) <= 1/4 max{|| |T|^{2sp} + |T|^{2tp} ||, || |S|^{2tp} + |S|^{2sp} ||} + 1/4 (|| |S|^s |T*|^t ||^p + || |T|^s |S*|^t ||^p)",
        S_TS, PS, Operator, Pass,
        "Theorem 3.5", "polar decompositions of $T$ and $S$", None, "h(x) = x^p, t = 1 - s", &[], c::t3_5
    ),
    check!(
        "C3.6",
        "w^p([[0, T], [S, 0]]) <= 1/2 max{||T||^p, ||S||^p} + 1/4 (|| |S|^s |T*|^t ||^p + || |T|^s |S*|^t ||^p)",
        S_TS, PS, Operator, Pass,
        "Corollary 3.6", "where $p\\geq 1$",
        Some("printed last term || |T|^s |S*|^s ||^p"),
        "the exponent of |S*| in the last term is t",
        &[literal_witness("T = S = I/2, p = 1, s = 1: printed form gives 7/16 < 1/2", w_c3_6)], c::c3_6
    ),
    check!(
        "C3.7",
        "w^{p/2}(TS) <= 1/4 max{|| |T|^{2sp} + |T|^{2tp} ||, || |S|^{2sp} + |S|^{2tp} ||} + 1/4 (|| |T|^s |S*|^t ||^p + || |S|^s |T*|^t ||^p)",
        S_TS, PS, Operator, Pass,
        "Corollary 3.7", "power inequality of the numerical radius", None, "t = 1 - s", &[], c::c3_7
    ),
    check!(
        "C3.8",
        "||T^{1/2} S^{1/2}||^p <= 1/4 max{||T^{2sp} + T^{2tp}||, ||S^{2sp} + S^{2tp}||} + 1/4 (||T^s S^t||^p + ||S^s T^t||^p), T, S >= 0",
        S_TS_POS, PS, Operator, Pass,
        "Corollary 3.8", "spectral radius of any operator is dominated",
        Some("printed powers T^{sp} + T^{tp}, S^{sp} + S^{tp}"),
        "powers 2sp, 2tp as obtained from the operator-matrix bound with |T| = T, |S*| = S",
        &[literal_witness("T = S = 2I, p = 1, s = 1/2: printed form gives 1 + 1/sqrt(2) < 2", w_c3_8)], c::c3_8
    ),
    check!(
        "C3.9",
        "||T + S||^p <= 1/4 max{||(2|T|^{2s})^p + (2|T|^{2t})^p||, ||(2|S*|^{2s})^p + (2|S*|^{2t})^p||} + 1/4 ((2|| |T|^s |S|^t ||)^p + (2|| |S*|^s |T*|^t ||)^p)",
        S_TS, PS, Operator, Pass,
        "Corollary 3.9", "In particular, if $T$ and $S$ are normal",
        Some("printed with |S*|^{2s} twice and first cross term || |T*|^s |S|^t ||"),
        "h(x) = x^p; obtained from the off-diagonal bound with S replaced by S*",
        &[literal_witness("T = S = J (+) 0, p = 1, s = 1/2: printed form gives 1.5 < 2", w_c3_9)], c::c3_9
    ),
    check!(
        "KT-C3.9p",
        "||T + S||^p <= 1/4 max{(2||T||)^p, (2||S||)^p} + 1/4 (2||TS||^{1/2})^p, T, S normal",
        S_TS_NORMAL, &[P], Operator, KnownTypo,
        "Corollary 3.9", "In particular, if $T$ and $S$ are normal", None,
        "printed normal case; false",
        &[Witness { description: "T = S = I, p = 1: lhs 2, rhs 1", literal_only: false, build: w_kt_c3_9p }],
        c::kt_c3_9p
    ),
    check!(
        "C3.10",
        "||T + S||^p <= 2^{p-2} max{|| |T|^{2tp} + |T|^{2sp} ||, || |S*|^{2tp} + |S*|^{2sp} ||} + 2^{p-2} (|| |T|^t |S|^s ||^p + || |S*|^t |T*|^s ||^p)",
        S_TS, PS, Operator, Pass,
        "Corollary 3.10", "for the convex function $h(x)=x^p$",
        Some("printed constant 1/2^{2-r}, read with r = 1"),
        "the constant is 2^{p-2}",
        &[literal_witness("T = S = I, p = 3: printed constant gives 2 < 8", w_c3_10)], c::c3_10
    ),
    check!(
        "T3.11", "w^{2r}(B*A) <= || nu |A|^{2r/nu} + (1-nu) |B|^{2r/(1-nu)} ||", S_AB, &[R, NU], Operator, Pass,
        "Theorem 3.11", "by Young's Inequality", None, "", &[], c::t3_11
    ),
    check!(
        "T4.2/C4.3",
        "w^r([[A, B], [C, D]]) <= 4^{r-1} w([[w^r(A), ||B||^r], [||C||^r, w^r(D)]]); same with ||A||^r, ||D||^r",
        S_ABCD, &[R], Operator, Pass,
        "Theorem 4.2", "for all $r\\geq 1$", None, "", &[], c::t4_2
    ),
    check!(
        "C4.5/C4.6",
        "w([[A, B], [C, D]]) <= r([c_ij]) <= 1/2 (w(A) + w(D) + sqrt((w(A) - w(D))^2 + (||B|| + ||C||)^2)); same with norms",
        S_ABCD, &[], Operator, Pass,
        "Corollary 4.5", "where $c_{11}=w(A)$", None, "c_12 = c_21 = (||B|| + ||C||)/2", &[], c::c4_5
    ),
    check!(
        "T4.7", "w([[0, A], [B, 0]]) >= max{w((AB)^n), w((BA)^n)}^{1/(2n)}", S_AB, &[N_POW], Operator, Pass,
        "Theorem 4.7", "Using Lemma \\ref{lemma5.1} and inequality",
        Some("printed root of max{(AB)^n, (BA)^n}, read with operator norms"),
        "w(.) is applied before the root",
        &[literal_witness("A = I, B = J (+) 0, n = 1: norms give 1 > w", w_t4_7)], c::t4_7
    ),
    check!(
        "T4.8/C4.9",
        "1/2 max{w(A - B), w(A + B)} <= w([[0, A], [B, 0]]) <= 1/2 (w(A - B) + w(A + B)); 1/2 w(A) <= w([[0, X], [e^{i theta} Y, 0]]) <= w(A), A = X + iY",
        S_AB, &[THETA], Operator, Pass,
        "Theorem 4.8", "max\\set{w(A-B),w(A+B)}", None, "", &[], c::t4_8
    ),
    check!(
        "L4.10/T4.11/C4.12/T4.13/T4.14",
        "w([[A, B], [C, D]]) >= w(A (+) D), w([[0, B], [C, 0]]); max{w(A), w(B)} <= w([[A, B], [-B, -A]]) <= w(A) + w(B); w(A) <= w([[A, A], [-A, -A]]) <= 2w(A); max{w(A), w(D), w(B +- C)/2} <= w([[A, B], [C, D]]) <= max{w(A), w(D)} + (w(B + C) + w(B - C))/2; w([[0, A], [B, 0]]) + |w(A + B) - w(A - B)|/2 <= w(A) + w(B)",
        S_ABCD, &[], Operator, Pass,
        "Lemma 4.10", "By virtue of Lemma", None, "", &[], c::l4_10
    ),
    check!(
        "T4.15", "w(X*AY + Y*BX) <= 2||X|| ||Y|| w([[0, A], [B, 0]]); w(X*AY + Y*AX) <= 2||X|| ||Y|| w(A)", S_ABXY, &[],
        Operator, Pass, "Theorem 4.15", "Taking the supremum over", None, "", &[], c::t4_15
    ),
    check!(
        "L4.16/L4.17/T4.18/T4.19/R4.20",
        "|<a,e><e,b>|^r <= 1/2 (||a||^r ||b||^r + |<a,b>|^r); w^{2r}([[0, B], [C, 0]]) <= 1/4 max{|| |C|^{2r} + |B*|^{2r} ||, || |B|^{2r} + |C*|^{2r} ||} + 1/2 max{w^r(|B*||C|), w^r(|C*||B|)}; w^{4r}([[0, B], [C, 0]]) <= 1/2 max{|| nu |C|^{2r/nu} + (1-nu) |B*|^{2r/(1-nu)} ||, || nu |B|^{2r/nu} + (1-nu) |C*|^{2r/(1-nu)} ||} + 1/2 max{w^{2r}(|B*||C|), w^{2r}(|C*||B|)}; w^{4r}(B) <= 1/2 N + 1/2 w^{2r}(|B*||B|) <= N",
        S_BC, &[R, NU], Mixed, Pass,
        "Lemma 4.16", "Buzano\u{2019}s extension of Schwarz",
        Some("printed left-hand powers w^r, w^{2r} and w^{2r}(B)"),
        "a = Bx, b = Cx, e = x; N = || nu |B|^{2r/nu} + (1-nu) |B*|^{2r/(1-nu)} ||; the left-hand powers are those the mixed Schwarz step yields",
        &[literal_witness("B = C = I/2, r = 1, nu = 1/2: printed w^2(B) = 1/4 > 1/16", w_buzano)], c::buzano
    ),
];

static IDENTITIES: [CheckDef; 4] = [
    check!(
        "L4.1a",
        "w(T (+) S) = max{w(T), w(S)}",
        S_TS,
        &[],
        Operator,
        Pass,
        "Lemma 4.1",
        "\\max\\set{w(T),w(S)}",
        None,
        "identity",
        &[],
        c::l4_1a
    ),
    check!(
        "L4.1b",
        "w([[0, T], [S, 0]]) = w([[0, S], [T, 0]])",
        S_TS,
        &[],
        Operator,
        Pass,
        "Lemma 4.1",
        "w\\bra{\\begin{bmatrix} 0 &S \\\\ T & 0",
        None,
        "identity",
        &[],
        c::l4_1b
    ),
    check!(
        "L4.1c",
        "w([[0, T], [S, 0]]) = w([[0, T], [e^{i theta} S, 0]])",
        S_TS,
        &[THETA],
        Operator,
        Pass,
        "Lemma 4.1",
        "e^{i\\theta} S & 0",
        None,
        "identity",
        &[],
        c::l4_1c
    ),
    check!(
        "L4.1d",
        "w([[T, S], [S, T]]) = max{w(T - S), w(T + S)}; w([[0, S], [S, 0]]) = w(S)",
        S_TS,
        &[],
        Operator,
        Pass,
        "Lemma 4.1",
        "\\max\\set{w(T-S),w(T+S)}",
        None,
        "identity",
        &[],
        c::l4_1d
    ),
];

/// The inequality catalog in its stable order.
pub fn list_checks() -> &'static [CheckDef] {
    &CHECKS
}

/// Block-operator identities, evaluated like checks but kept out of the main catalog.
pub fn identity_checks() -> &'static [CheckDef] {
    &IDENTITIES
}

/// Looks a check up by id in both catalogs.
pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    CHECKS.iter().chain(IDENTITIES.iter()).find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}
