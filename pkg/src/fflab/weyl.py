"""Weyl-differencing counters and the inequality suite.

The counting functions all have the shape

    #{(u_1,...,u_{d-1}) in boxes : || alpha Psi_i(u) || < q^{-m} for all i}

where box j allows C_j coefficients per coordinate (|u_j| < q^{C_j}) and the
norm looks at the coefficients of t^{-1},...,t^{-m}.  The count is computed
by enumerating all but one block and counting the last block as an F_q-linear
solution space: for fixed prefix the map u -> (alpha Psi_i(prefix,u) tail
coefficients) is linear in the coefficients of u.  Since the Psi_i are
symmetric in their slots, the largest box is always moved to the linear slot.

A fully naive enumerator (no linear algebra, direct norm tests) is kept as
the independent oracle.

Instances: N (boxes e+1, m = e+1), N_eta (boxes (e+1)eta, m =
(e+1)(d - (d-1)eta)), M^(v) (first v-1 boxes constant), curly-N (boxes
kappa+1, m = de+1-kappa(d-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .audit import eta_choice, gamma_budget, kappa_of
from .circle import ArcPoint, CountingProblem
from .cyclotomic import CyclotomicValue, compare_abs_power, real_sign
from .errors import BudgetExceededError, ConfigError, PrecisionError
from .laurent import LaurentElement
from .linalg import batched_rank, rank_mod_q
from .polys import Polynomial


# -- core counting ----------------------------------------------------------------


def _tail_array(alpha, depth: int):
    """alpha coefficients at t^{-1}..t^{-depth} (index 0 unused)."""
    if isinstance(alpha, tuple):
        if len(alpha) < depth:
            raise PrecisionError(
                f"tail of length {len(alpha)} shorter than needed {depth}")
        return [0] + [alpha[k] for k in range(depth)]
    return [0] + [alpha.coeff(-k) for k in range(1, depth + 1)]


def approx_zero_count(prob: CountingProblem, alpha, box_list, m: int) -> int:
    """The boxed norm-condition count described in the module docstring."""
    if len(box_list) != prob.d - 1:
        raise ValueError(f"need {prob.d - 1} boxes")
    if any(c < 0 for c in box_list):
        raise ValueError("negative box size")
    q, n = prob.spec.q, prob.n
    total_coeffs = sum(box_list) * n
    if m <= 0 or 0 in box_list:
        # vacuous conditions, or a forced-zero block makes every Psi_i vanish
        return q ** total_coeffs
    boxes = sorted(box_list)
    c_last = boxes[-1]
    prefix_boxes = boxes[:-1]
    depth = m + (c_last - 1) + sum(c - 1 for c in prefix_boxes)
    tail = _tail_array(alpha, depth)
    prefix_total = q ** (sum(prefix_boxes) * n)
    prob._charge(prefix_total, "approx-zero count")
    if prob.d == 3 and prob.spec.f == 1 and prefix_total >= 512:
        return _count_fast_d3(prob, tail, prefix_boxes[0], c_last, m)
    return _count_generic(prob, tail, prefix_boxes, c_last, m)


def _count_generic(prob, tail, prefix_boxes, c_last, m) -> int:
    import itertools
    spec = prob.spec
    q, n = spec.q, prob.n
    ml = prob.form.multilinear()
    mul, add = spec.tables["mul"], spec.tables["add"]
    blocks = []
    for c in prefix_boxes:
        polys = [Polynomial(spec, cs)
                 for cs in itertools.product(range(q), repeat=c)]
        blocks.append([list(v) for v in itertools.product(polys, repeat=n)])
    count = 0
    for prefix in itertools.product(*blocks) if blocks else [()]:
        mat = ml.coefficient_matrix(list(prefix))
        rows = []
        for i in range(n):
            for w in range(1, m + 1):
                row = []
                for k in range(n):
                    poly = mat[i][k]
                    for s in range(c_last):
                        acc = 0
                        for sp, coeff in enumerate(poly.coeffs):
                            if coeff:
                                acc = add[acc][mul[coeff][tail[w + s + sp]]]
                        row.append(acc)
                rows.append(row)
        rank = rank_mod_q(spec, rows) if rows else 0
        count += q ** (n * c_last - rank)
    return count


def _count_fast_d3(prob, tail, c1, c_last, m) -> int:
    """d = 3, prime q: the condition matrix is linear in the prefix block, so
    all prefixes are processed as one integer matrix product mod q."""
    spec = prob.spec
    q, n = spec.q, prob.n
    import itertools
    tensor = prob.form.tensor
    # G[i][k][j] = symmetric tensor entry at {i, j, k}
    g = [[[0] * n for _ in range(n)] for _ in range(n)]
    for rep, c in tensor.items():
        for perm in set(itertools.permutations(rep)):
            g[perm[0]][perm[1]][perm[2]] = c
    nrows = n * m
    ncols = n * c_last
    kmat = np.zeros((n * c1, nrows * ncols), dtype=np.int64)
    for j in range(n):
        for sp in range(c1):
            prow = kmat[j * c1 + sp]
            for i in range(n):
                for w in range(1, m + 1):
                    for k in range(n):
                        gv = g[i][k][j]
                        if not gv:
                            continue
                        for s in range(c_last):
                            prow[(i * m + (w - 1)) * ncols + k * c_last + s] \
                                = gv * tail[w + s + sp] % q
    prefix_total = q ** (n * c1)
    count = 0
    chunk = 1 << 16
    ar = np.arange(prefix_total, dtype=np.int64)
    for start in range(0, prefix_total, chunk):
        idx = ar[start:start + chunk]
        u = np.empty((idx.shape[0], n * c1), dtype=np.int64)
        for col in range(n * c1):
            u[:, col] = (idx // q ** col) % q
        amat = (u @ kmat) % q
        amat = amat.reshape(idx.shape[0], nrows, ncols).astype(np.int16)
        ranks = batched_rank(spec, amat)
        counts = np.bincount(ranks, minlength=ncols + 1)
        for r, cnt in enumerate(counts):
            if cnt:
                count += int(cnt) * q ** (ncols - r)
    return count


def naive_approx_zero_count(prob: CountingProblem, alpha, box_list,
                            m: int) -> int:
    """Independent oracle: enumerate every tuple and test the norms directly
    through Laurent arithmetic.  Exponentially slower; test use only."""
    import itertools
    spec = prob.spec
    q, n = spec.q, prob.n
    if len(box_list) != prob.d - 1:
        raise ValueError(f"need {prob.d - 1} boxes")
    cost = q ** (sum(box_list) * n)
    prob._charge(cost, "naive approx-zero count")
    ml = prob.form.multilinear()
    if isinstance(alpha, tuple):
        alpha_l = LaurentElement.from_tail(spec, alpha)
    else:
        alpha_l = alpha
    blocks = []
    for c in box_list:
        polys = [Polynomial(spec, cs)
                 for cs in itertools.product(range(q), repeat=c)]
        blocks.append([list(v) for v in itertools.product(polys, repeat=n)])
    count = 0
    for tup in itertools.product(*blocks):
        ok = True
        for i in range(n):
            val = ml.eval(i, list(tup))
            prod = alpha_l * LaurentElement.from_poly(val)
            if not prod.norm_less_than(m):
                ok = False
                break
        if ok:
            count += 1
    return count


# -- the named counters ------------------------------------------------------------


def count_N(prob: CountingProblem, alpha, oracle: bool = False) -> int:
    fn = naive_approx_zero_count if oracle else approx_zero_count
    return fn(prob, alpha, [prob.e + 1] * (prob.d - 1), prob.e + 1)


def _eta_box(prob, eta) -> int:
    c = Fraction(eta) * (prob.e + 1)
    if c.denominator != 1 or c < 0:
        raise ConfigError(f"(e+1)*eta = {c} must be a nonnegative integer")
    return int(c)


def count_N_eta(prob: CountingProblem, alpha, eta, oracle: bool = False) -> int:
    c = _eta_box(prob, eta)
    m = (prob.e + 1) * prob.d - (prob.d - 1) * c
    fn = naive_approx_zero_count if oracle else approx_zero_count
    return fn(prob, alpha, [c] * (prob.d - 1), m)


def count_M_v(prob: CountingProblem, alpha, v: int,
              oracle: bool = False) -> int:
    if not 1 <= v <= prob.d:
        raise ValueError(f"v must be in 1..{prob.d}")
    boxes = [1] * (v - 1) + [prob.e + 1] * (prob.d - v)
    fn = naive_approx_zero_count if oracle else approx_zero_count
    return fn(prob, alpha, boxes, prob.e + 1)


def count_curly_N(prob: CountingProblem, alpha, kappa: int = None,
                  oracle: bool = False) -> int:
    if kappa is None:
        kappa = kappa_of(prob.e)
    if kappa not in (0, 1):
        raise ValueError("kappa must be 0 or 1")
    m = prob.d * prob.e + 1 - kappa * (prob.d - 1)
    fn = naive_approx_zero_count if oracle else approx_zero_count
    return fn(prob, alpha, [kappa + 1] * (prob.d - 1), m)


# -- inequality checks ------------------------------------------------------------


@dataclass(frozen=True)
class InequalityReport:
    passed: bool
    name: str
    lhs_desc: str
    rhs_desc: str
    details: dict

    def __bool__(self):
        return self.passed


def check_weyl(prob: CountingProblem, alpha) -> InequalityReport:
    """|S(alpha)|^(2^(d-1)) <= |P|^((2^(d-1)-d+1)n) N(alpha), exactly."""
    d, n, q = prob.d, prob.n, prob.spec.q
    s_val = prob.exp_sum(alpha)
    n_count = count_N(prob, alpha)
    power = 1 << (d - 1)
    bound = Fraction(q) ** ((prob.e + 1) * (power - d + 1) * n) * n_count
    cmp = compare_abs_power(s_val, power, bound)
    return InequalityReport(
        cmp <= 0, "weyl",
        f"|S|^{power}", f"q^{(prob.e + 1) * (power - d + 1) * n} * N",
        {"S": s_val, "N": n_count, "bound": bound, "cmp": cmp})


def check_shrink(prob: CountingProblem, alpha, eta) -> InequalityReport:
    """N(alpha) <= |P|^((n - eta n)(d-1)) N_eta(alpha) under the parity
    hypothesis (e+1)(eta+1)/2 integral."""
    eta = Fraction(eta)
    hyp = (prob.e + 1) * (eta + 1) / 2
    if hyp.denominator != 1:
        raise ConfigError(f"(e+1)(eta+1)/2 = {hyp} is not an integer")
    if not 0 <= eta <= 1:
        raise ConfigError("eta must lie in [0, 1]")
    big_n = count_N(prob, alpha)
    small_n = count_N_eta(prob, alpha, eta)
    exp = (prob.e + 1) * (prob.d - 1) * prob.n * (1 - eta)
    assert exp.denominator == 1
    rhs = Fraction(prob.spec.q) ** int(exp) * small_n
    return InequalityReport(
        big_n <= rhs, "shrink",
        "N", f"q^{int(exp)} * N_eta",
        {"N": big_n, "N_eta": small_n, "eta": eta, "rhs": rhs})


def check_smallbox_chain(prob: CountingProblem, alpha,
                         kappa: int = None) -> InequalityReport:
    """|S|^(2^(d-1)) <= |P|^(2^(d-1) n) q^(-(1+kappa)(d-1)n) curly-N."""
    if kappa is None:
        kappa = kappa_of(prob.e)
    d, n, q = prob.d, prob.n, prob.spec.q
    power = 1 << (d - 1)
    s_val = prob.exp_sum(alpha)
    curly = count_curly_N(prob, alpha, kappa)
    exp = (prob.e + 1) * power * n - (1 + kappa) * (d - 1) * n
    bound = Fraction(q) ** exp * curly
    cmp = compare_abs_power(s_val, power, bound)
    return InequalityReport(
        cmp <= 0, "smallbox-chain",
        f"|S|^{power}", f"q^{exp} * curlyN",
        {"S": s_val, "curlyN": curly, "kappa": kappa, "cmp": cmp})


# -- pointwise lemma instrumentation -------------------------------------------------


@dataclass(frozen=True)
class PointwiseReport:
    """Measured data for one pointwise bound: |S| against q^sigma.

    The lemma constants are unspecified upstream, so nothing is asserted
    here; the exact pair (|S|^2, sigma) supports cross-q regression
    comparisons via compare_pointwise."""
    lemma: str
    hypothesis_ok: bool
    reason: str
    q: int
    power_denom: int           # 2^{d-1}; |S|^{2^{d-1}} clears sigma's denominator
    s_value: CyclotomicValue = None
    sigma: Fraction = None     # bound exponent: ratio = |S| / q^sigma

    def ratio_float(self) -> float:
        if not self.hypothesis_ok:
            raise ValueError(f"hypotheses failed: {self.reason}")
        mag = abs(self.s_value.to_complex(80))
        return mag / float(self.q) ** float(self.sigma)


def eta_from_arc(prob, alpha_deg, beta):
    """(e+1)*eta for an arc with |r| = q^alpha_deg and |theta| = q^-beta
    (beta None for theta = 0), or None when undefined."""
    return eta_choice(gamma_budget(prob.d, prob.e, alpha_deg, beta), prob.e)


def _theta_beta(theta_tail) -> int:
    """|theta| = q^-beta from a tail; None for theta = 0."""
    for k, c in enumerate(theta_tail, start=1):
        if c:
            return k
    return None


def measure_pointwise(prob: CountingProblem, arc: ArcPoint, theta_tail,
                      lemma: str) -> PointwiseReport:
    """Measured |S| vs the shape of one of the three pointwise bounds.

    lemma is one of 'generic' (any arc; bound q^{(e+1)n - L(e+1)eta}),
    'deg-r-positive' (bound q^{(e+1)n - L}), 'deg-r-zero' (same bound,
    r = 1 with a theta window)."""
    d, e, n, q = prob.d, prob.e, prob.n, prob.spec.q
    kappa = kappa_of(e)
    power = 1 << (d - 1)
    ell = Fraction(n, power)
    a_deg = arc.deg_r
    beta = _theta_beta(theta_tail)
    if lemma == "generic":
        eta_c = eta_from_arc(prob, a_deg, beta)
        if eta_c is None:
            return PointwiseReport(lemma, False, "eta undefined (Gamma < 1 "
                                   "with even e)", q, power)
        sigma = (e + 1) * n - ell * eta_c
    elif lemma == "deg-r-positive":
        in_i = (a_deg >= 1 and a_deg < d * e + 1 - kappa * (d - 1)
                and (beta is None or a_deg - beta < -kappa * (d - 1)))
        # theta = 0 gives |r theta| = 0 < any positive radius
        in_ii = (e == 1 and 2 <= a_deg <= d
                 and (beta is None or a_deg - beta <= -d))
        if not (in_i or in_ii):
            return PointwiseReport(lemma, False,
                                   f"|r|=q^{a_deg}, |theta|=q^-{beta} outside "
                                   "both hypothesis branches", q, power)
        sigma = (e + 1) * n - ell
    elif lemma == "deg-r-zero":
        if a_deg != 0:
            return PointwiseReport(lemma, False, "needs r = 1", q, power)
        if beta is None or not (1 + kappa * (d - 1) <= beta <= d * e + 1):
            return PointwiseReport(lemma, False,
                                   f"|theta|=q^-{beta} outside the window",
                                   q, power)
        sigma = (e + 1) * n - ell
    else:
        raise ValueError(f"unknown lemma {lemma!r}")
    alpha = prob.alpha_from_arc(arc, theta_tail)
    s_val = prob.exp_sum(alpha)
    return PointwiseReport(lemma, True, "", q, power, s_val, sigma)


def compare_scaled_reals(x_a: CyclotomicValue, s_a: Fraction,
                         x_b: CyclotomicValue, s_b: Fraction) -> int:
    """Sign of x_a*s_a - x_b*s_b for totally real cyclotomic x's, possibly
    living in different fields.  Exact: same-field differences are decided
    algebraically; cross-field equal values must both be rational (the
    fields intersect in Q), so interval refinement always terminates."""
    if x_a.p == x_b.p:
        return real_sign(x_a * s_a - x_b * s_b)
    if x_a.is_rational() and x_b.is_rational():
        diff = x_a.to_rational() * s_a - x_b.to_rational() * s_b
        return (diff > 0) - (diff < 0)
    import mpmath
    prec = 64
    while prec <= (1 << 16):
        ra, _ = x_a.interval_parts(prec)
        rb, _ = x_b.interval_parts(prec)
        saved = mpmath.iv.prec
        mpmath.iv.prec = prec
        try:
            iva = ra * (mpmath.iv.mpf(s_a.numerator)
                        / mpmath.iv.mpf(s_a.denominator))
            ivb = rb * (mpmath.iv.mpf(s_b.numerator)
                        / mpmath.iv.mpf(s_b.denominator))
            diff = iva - ivb
            if diff.a > 0:
                return 1
            if diff.b < 0:
                return -1
        finally:
            mpmath.iv.prec = saved
        prec *= 2
    raise PrecisionError("cross-field comparison did not separate")


def compare_pointwise(rep_a: PointwiseReport,
                      rep_b: PointwiseReport) -> int:
    """Sign of ratio(rep_a) - ratio(rep_b), decided exactly.

    Compares |S_a|/q_a^sigma_a with |S_b|/q_b^sigma_b by raising both to
    the 2^{d-1} power, which clears every denominator."""
    if not (rep_a.hypothesis_ok and rep_b.hypothesis_ok):
        raise ValueError("cannot compare failed-hypothesis reports")
    power = rep_a.power_denom
    if power != rep_b.power_denom:
        raise ValueError("mismatched lemma powers")
    ea = rep_a.sigma * power
    eb = rep_b.sigma * power
    assert ea.denominator == 1 and eb.denominator == 1
    half = power // 2
    xa = rep_a.s_value.abs_squared() ** half
    xb = rep_b.s_value.abs_squared() ** half
    return compare_scaled_reals(xa, Fraction(rep_a.q) ** -int(ea),
                                xb, Fraction(rep_b.q) ** -int(eb))


def max_shape_ratio(prob: CountingProblem, lemma: str, r_degree: int,
                    beta) -> PointwiseReport:
    """Worst case of a pointwise bound over an arc shape.

    Enumerates every point alpha = a/r + theta with r monic of the given
    degree, a coprime, and |theta| = q^-beta exactly (beta None for theta
    = 0), and returns the report of the |S|-maximizing point.  The max is
    what any admissible lemma constant has to dominate, so it is the
    quantity tracked across q."""
    spec = prob.spec
    q, b = spec.q, prob.char_depth
    best = None
    probe_arc = None
    for r_poly in prob.monic_polys(r_degree):
        arc = ArcPoint(r_poly, Polynomial.zero(spec), r_degree + prob.arc_floor)
        for a_poly in prob.coprime_residues(r_poly):
            arc_a = ArcPoint(r_poly, a_poly, r_degree + prob.arc_floor)
            for tail in _tails_at_valuation(q, b, beta):
                rep = measure_pointwise(prob, arc_a, tail, lemma)
                if not rep.hypothesis_ok:
                    return rep
                if best is None or real_sign(
                        rep.s_value.abs_squared()
                        - best.s_value.abs_squared()) > 0:
                    best = rep
    return best


def canonical_point(prob: CountingProblem, r_degree: int, beta):
    """The canonical point of an arc shape: r = t^deg, a = 1 (a = 0 when
    r = 1), theta = t^-beta.  Returns (arc, theta_tail)."""
    spec = prob.spec
    r_poly = Polynomial.one(spec).shift(r_degree)
    a_poly = Polynomial.one(spec) if r_degree else Polynomial.zero(spec)
    arc = ArcPoint(r_poly, a_poly, r_degree + prob.arc_floor)
    b = prob.char_depth
    if beta is None:
        tail = (0,) * b
    else:
        if not 1 <= beta <= b:
            raise ValueError("beta out of the representable window")
        tail = tuple(1 if k == beta else 0 for k in range(1, b + 1))
    return arc, tail


def canonical_shape_report(prob: CountingProblem, lemma: str, r_degree: int,
                           beta) -> PointwiseReport:
    """measure_pointwise at the canonical point of the shape."""
    arc, tail = canonical_point(prob, r_degree, beta)
    return measure_pointwise(prob, arc, tail, lemma)


def _tails_at_valuation(q: int, depth: int, beta):
    import itertools
    if beta is None:
        yield (0,) * depth
        return
    if not 1 <= beta <= depth:
        raise ValueError("beta out of the representable window")
    for lead in range(1, q):
        for rest in itertools.product(range(q), repeat=depth - beta):
            yield (0,) * (beta - 1) + (lead,) + rest


# -- flat solution-count measurement --------------------------------------------------


def measure_flat_count(prob: CountingProblem, eta) -> tuple:
    """(count, count * |P|^{-eta(d-2)n}) where count = #{u in boxes
    |P|^eta : Psi_i(u) = 0 identically for all i}.  Recorded, not asserted:
    the upstream bound's constant is unspecified."""
    import itertools
    c = _eta_box(prob, eta)
    spec = prob.spec
    q, n = spec.q, prob.n
    if c == 0:
        count = 1
    else:
        prob._charge(q ** (c * n * (prob.d - 2)), "flat count")
        ml = prob.form.multilinear()
        polys = [Polynomial(spec, cs)
                 for cs in itertools.product(range(q), repeat=c)]
        vectors = [list(v) for v in itertools.product(polys, repeat=n)]
        count = 0
        for prefix in itertools.product(vectors, repeat=prob.d - 2):
            mat = ml.coefficient_matrix(list(prefix))
            rows = []
            for i in range(n):
                width = max(len(mat[i][k].coeffs) for k in range(n))
                for w in range(width + c - 1):
                    rows.append([mat[i][k].coeff(w - s) if 0 <= w - s else 0
                                 for k in range(n) for s in range(c)])
            rank = rank_mod_q(spec, rows) if rows else 0
            count += q ** (n * c - rank)
    scale = Fraction(1, q ** (c * (prob.d - 2) * n))
    return count, count * scale
