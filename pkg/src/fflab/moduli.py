"""Counting degree-e morphisms P^1 -> X directly, with extension fields.

A tuple of n binary forms of degree e over F_{q^l} gives a morphism to the
hypersurface X = {F = 0} exactly when F(f_1,...,f_n) vanishes identically
(a binary form of degree de, i.e. de+1 coefficient conditions) and the f_i
share no projective zero.  This module counts

  * the affine cone: nonzero tuples with F(f) = 0, common factors allowed;
  * morphisms: coprime tuples with F(f) = 0, divided by the free scalar
    action of F_{q^l}^*;

over F_{q^l} for l >= 1, plus an independent line-enumeration oracle for
degree 1 (a plane lies on X iff F vanishes at d+1 distinct points of the
parameter line, since a nonzero binary d-form has at most d roots), and
ratio reports of counts against the expected dimension powers.

Counting routes, kept separate so they can cross-check each other:

  enumerate  walk every tuple, test the de+1 conditions, filter coprimality
             by a gcd cascade (common projective zero iff the dehomogenized
             gcd is non-constant or every form is divisible by v);
  convolve   for diagonal forms only: F(f) = sum_i c_i f_i^d means the
             condition vector is a sum of independent per-coordinate
             contributions, so the count is a group convolution over
             F_{q^l}^{de+1}, folded coordinate by coordinate;
  factor     every nonzero solution tuple splits uniquely as (normalized
             common factor) x (coprime solution of lower degree), so
             coprime counts follow from total counts by subtracting
             P_j * coprime(e-j) over the projective form counts P_j.

The resultant criterion for coprimality (some pencil pair g = sum a_i f_i,
h = sum b_i f_i has nonzero resultant) is kept as a sampled cross-check;
for q^l > e it is exact, because the bad locus has degree <= e per pencil
coefficient block.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .audit import dims
from .errors import BudgetExceededError, ConfigError
from .fields import FieldSpec
from .forms import HypersurfaceForm, symmetrize
from .linalg import rank_mod_q
from .polys import BinaryForm, poly_gcd

# dense convolution arrays and enumerations are capped at this many cells
_MAX_CELLS = 1 << 24


# -- extension embedding ----------------------------------------------------------


def extend_spec(spec: FieldSpec, ell: int, modulus=None) -> FieldSpec:
    """F_{q^ell} over a prime base field, with a reproducible modulus."""
    if ell == 1 and modulus is None:
        return spec
    if spec.f != 1:
        raise ConfigError(
            "extension towers are only built over prime base fields")
    return FieldSpec(spec.p, ell, modulus)


def embed_form(form: HypersurfaceForm, ext: FieldSpec) -> HypersurfaceForm:
    """The same form read over an extension field.

    Base coefficients are indices below p, which name the same prime-field
    constants inside the extension's coefficient-vector indexing."""
    if ext == form.spec:
        return form
    if form.spec.f != 1 or ext.p != form.spec.p:
        raise ConfigError("can only embed forms from the prime base field")
    return symmetrize(ext, form.n, form.d, dict(form.monomials))


# -- tuples and coprimality -------------------------------------------------------


@dataclass(frozen=True)
class MorphismTuple:
    """n binary forms of one degree; a morphism when coprime and F(f) = 0."""
    forms: tuple

    def __post_init__(self):
        if not self.forms:
            raise ConfigError("empty tuple")
        degree = self.forms[0].e
        if any(f.e != degree for f in self.forms):
            raise ConfigError("mixed degrees in a morphism tuple")

    @property
    def degree(self) -> int:
        return self.forms[0].e

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.forms)

    def is_coprime(self) -> bool:
        return gcd_coprime(self.forms)

    def image_form(self, form: HypersurfaceForm) -> BinaryForm:
        """F(f_1,...,f_n), a binary form of degree d*e."""
        if len(self.forms) != form.n:
            raise ConfigError("tuple length does not match the form")
        return form.eval_form(list(self.forms))

    def satisfies(self, form: HypersurfaceForm) -> bool:
        return self.image_form(form).is_zero()


def gcd_coprime(forms) -> bool:
    """No common projective zero, by a gcd cascade.

    Affine zeros (a:1) are common roots of the dehomogenizations; the zero
    at infinity (1:0) is common exactly when every u^e coefficient dies,
    i.e. every dehomogenization has degree < e."""
    degree = forms[0].e
    polys = [f.dehomogenize() for f in forms if not f.is_zero()]
    if not polys:
        return False
    if all(p.degree() < degree for p in polys):
        return False
    g = polys[0]
    for p in polys[1:]:
        if g.degree() == 0:
            break
        g = poly_gcd(g, p)
    return g.degree() == 0


def _sylvester_rank_full(f: BinaryForm, g: BinaryForm) -> bool:
    """Res(f, g) != 0, read off the Sylvester matrix rank."""
    e = f.e
    size = 2 * e
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for k in range(e):
        rows.append([0] * k + fc + [0] * (e - 1 - k))
    for k in range(e):
        rows.append([0] * k + gc + [0] * (e - 1 - k))
    return rank_mod_q(f.spec, rows) == size


def resultant_coprime(forms) -> bool:
    """Pencil-resultant coprimality: some pair of F_q-combinations of the
    tuple has nonzero resultant.

    Exact for q > e: if the tuple is coprime, a combination g avoiding any
    fixed root exists because each root cuts one hyperplane out of the
    pencil and q > e hyperplanes cannot cover it."""
    spec = forms[0].spec
    degree = forms[0].e
    if degree < 1:
        return any(not f.is_zero() for f in forms)
    if spec.q <= degree:
        raise ConfigError(
            f"resultant criterion needs q > e, got q={spec.q}, e={degree}")
    n = len(forms)
    reps = _projective_reps(spec.q, n)
    combos = []
    for vec in reps:
        acc = BinaryForm.zero(spec, degree)
        for c, f in zip(vec, forms):
            if c:
                acc = acc + f.scale_idx(c)
        combos.append(acc)
    for ga, gb in itertools.combinations(combos, 2):
        if ga.is_zero() or gb.is_zero():
            continue
        if _sylvester_rank_full(ga, gb):
            return True
    return False


def _projective_reps(q: int, n: int):
    """Nonzero vectors in F_q^n with first nonzero entry 1."""
    out = []
    for lead in range(n):
        for tail in itertools.product(range(q), repeat=n - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


@dataclass(frozen=True)
class AgreementReport:
    passed: bool
    checked: int
    disagreements: tuple

    def __bool__(self) -> bool:
        return self.passed


def check_coprimality_criteria(spec: FieldSpec, n: int, e: int,
                               samples: int, seed: int) -> AgreementReport:
    """gcd-cascade verdict == pencil-resultant verdict on sampled tuples.

    Half the samples are random tuples, half are random tuples multiplied
    by a random common linear factor (guaranteed non-coprime), so both
    verdicts get exercised."""
    rng = random.Random(seed)
    bad = []
    for trial in range(samples):
        if trial % 2 == 0 or e < 2:
            forms = tuple(
                BinaryForm(spec, e, [rng.randrange(spec.q)
                                     for _ in range(e + 1)])
                for _ in range(n))
        else:
            factor = BinaryForm(spec, 1, [rng.randrange(spec.q), 1])
            forms = tuple(
                factor * BinaryForm(spec, e - 1,
                                    [rng.randrange(spec.q)
                                     for _ in range(e)])
                for _ in range(n))
        if all(f.is_zero() for f in forms):
            continue
        via_gcd = gcd_coprime(forms)
        via_res = resultant_coprime(forms)
        if via_gcd != via_res:
            bad.append((trial, tuple(f.coeffs for f in forms),
                        via_gcd, via_res))
    return AgreementReport(not bad, samples, tuple(bad[:5]))


# -- total solution counts --------------------------------------------------------


def _is_diagonal(form: HypersurfaceForm) -> bool:
    return all(sum(1 for e in exps if e) == 1 for exps in form.monomials)


def _charge(budget_cells: int, what: str):
    if budget_cells > _MAX_CELLS:
        raise BudgetExceededError(
            f"{what} needs {budget_cells} cells (cap {_MAX_CELLS})")


def _total_enumerate(spec: FieldSpec, form: HypersurfaceForm, e: int) -> int:
    """#{tuples of degree-e forms, zero included, with F(f) = 0}."""
    q, n = spec.q, form.n
    _charge(q ** ((e + 1) * n), "morphism-space enumeration")
    coeff_space = list(itertools.product(range(q), repeat=e + 1))
    count = 0
    for tup in itertools.product(coeff_space, repeat=n):
        forms = [BinaryForm(spec, e, cs) for cs in tup]
        if form.eval_form(forms).is_zero():
            count += 1
    return count


def _axis_shifts(spec: FieldSpec, vec_idx, width: int):
    """Per-axis roll amounts for adding a fixed F_q^width vector, on a dense
    array reshaped to (p,) * (f*width) in C order (last axis = lowest digit)."""
    p, f = spec.p, spec.f
    naxes = f * width
    shifts = [0] * naxes
    for pos in range(width):
        idx = vec_idx[pos]
        for dig in range(f):
            shifts[naxes - 1 - (pos * f + dig)] = idx % p
            idx //= p
    return tuple(shifts)


def _total_convolve(spec: FieldSpec, form: HypersurfaceForm, e: int) -> int:
    """Diagonal forms: the condition vector of F(f) = sum c_i f_i^d splits
    per coordinate, so fold the per-coordinate distributions by group
    convolution over F_q^{de+1} (dense array + rolls)."""
    if not _is_diagonal(form):
        raise ConfigError("convolution route needs a diagonal form")
    q, n, d = spec.q, form.n, form.d
    width = d * e + 1
    cells = q ** width
    _charge(cells * (n - 1), "cone convolution")
    coeff = {}
    for exps, c in form.monomials.items():
        coeff[next(i for i, v in enumerate(exps) if v)] = c
    p, f = spec.p, spec.f
    shape = (p,) * (f * width)
    dists = []
    for i in range(form.n):
        dist = {}
        for cs in itertools.product(range(q), repeat=e + 1):
            g = BinaryForm(spec, e, cs)
            power = g
            for _ in range(d - 1):
                power = power * g
            vec = power.scale_idx(coeff.get(i, 0)).coeffs
            key = 0
            for pos, idx in enumerate(vec):
                key += idx * q ** pos
            dist[key] = dist.get(key, 0) + 1
        dists.append(dist)
    acc = np.zeros(cells, dtype=np.int64)
    for key, mult in dists[0].items():
        acc[key] = mult
    acc = acc.reshape(shape)
    for dist in dists[1:]:
        nxt = np.zeros(shape, dtype=np.int64)
        for key, mult in dist.items():
            vec_idx = [(key // q ** pos) % q for pos in range(width)]
            nxt += mult * np.roll(acc, _axis_shifts(spec, vec_idx, width),
                                  axis=tuple(range(len(shape))))
        acc = nxt
    return int(acc.reshape(-1)[0])


def total_solutions(spec: FieldSpec, form: HypersurfaceForm, e: int,
                    method: str = "auto") -> int:
    """All degree-e tuples (zero and non-coprime included) with F(f) = 0."""
    if e < 0:
        raise ConfigError("tuple degree must be >= 0")
    if method == "auto":
        method = "convolve" if _is_diagonal(form) else "enumerate"
    if method == "convolve":
        return _total_convolve(spec, form, e)
    if method == "enumerate":
        return _total_enumerate(spec, form, e)
    raise ConfigError(f"unknown counting method {method}")


# -- cone and morphism counts -----------------------------------------------------


def count_cone(prob, ell: int = 1, method: str = "auto",
               modulus=None) -> int:
    """Nonzero degree-e tuples over F_{q^ell} with F(f) = 0 identically;
    common factors allowed."""
    ext = extend_spec(prob.spec, ell, modulus)
    form = embed_form(prob.form, ext)
    return total_solutions(ext, form, prob.e, method) - 1


def _coprime_solutions(spec: FieldSpec, form: HypersurfaceForm, e: int,
                       method: str) -> int:
    """#{coprime tuples with F(f) = 0}, by the unique-factorization recursion
    over the normalized common factor:

        total(j) - 1 = sum_{i=0..j} P_i * coprime(j - i),

    P_i = (q^{i+1}-1)/(q-1) the number of degree-i forms up to scalar."""
    q = spec.q
    coprime = []
    for j in range(e + 1):
        nonzero = total_solutions(spec, form, j, method) - 1
        for i in range(1, j + 1):
            nonzero -= ((q ** (i + 1) - 1) // (q - 1)) * coprime[j - i]
        coprime.append(nonzero)
    return coprime[e]


def _morphisms_enumerate(spec: FieldSpec, form: HypersurfaceForm,
                         e: int) -> int:
    q, n = spec.q, form.n
    _charge(q ** ((e + 1) * n), "morphism enumeration")
    coeff_space = list(itertools.product(range(q), repeat=e + 1))
    count = 0
    for tup in itertools.product(coeff_space, repeat=n):
        forms = [BinaryForm(spec, e, cs) for cs in tup]
        if not form.eval_form(forms).is_zero():
            continue
        if gcd_coprime(forms):
            count += 1
    if count % (q - 1):
        raise ConfigError("scalar orbits do not divide the coprime count")
    return count // (q - 1)


def count_morphisms(prob, ell: int = 1, method: str = "auto",
                    modulus=None) -> int:
    """#Mor_e(P^1, X)(F_{q^ell}): coprime tuples with F(f) = 0, up to scalar.

    method "enumerate" walks tuples and filters by the gcd cascade;
    "factor" subtracts common-factor orbits from total counts (required
    when the tuple space is too large to walk); "auto" picks factor for
    diagonal forms and enumeration otherwise."""
    ext = extend_spec(prob.spec, ell, modulus)
    form = embed_form(prob.form, ext)
    e = prob.e
    if method == "auto":
        method = "factor" if _is_diagonal(form) else "enumerate"
    if method == "enumerate":
        return _morphisms_enumerate(ext, form, e)
    if method == "factor":
        coprime = _coprime_solutions(ext, form, e, "auto")
        if coprime % (ext.q - 1):
            raise ConfigError("scalar orbits do not divide the coprime count")
        return coprime // (ext.q - 1)
    raise ConfigError(f"unknown counting method {method}")


# -- line oracle ------------------------------------------------------------------


def _rref_plane_blocks(q: int, n: int):
    """Reduced 2 x n row patterns, one block per pivot pair (i, j):
    free positions for each row, in column order."""
    for i in range(n):
        for j in range(i + 1, n):
            free1 = [k for k in range(i + 1, n) if k != j]
            free2 = [k for k in range(j + 1, n)]
            yield i, j, free1, free2


def enumerate_lines(prob, ell: int = 1, modulus=None) -> int:
    """Lines on X over F_{q^ell}, by direct Grassmannian enumeration.

    A plane spanned by a, b lies on X iff the binary form F(s a + t b)
    vanishes; having degree d, it vanishes identically iff it vanishes at
    d+1 distinct points of P^1, so d+1 evaluations decide each plane."""
    ext = extend_spec(prob.spec, ell, modulus)
    form = embed_form(prob.form, ext)
    n, d, q = form.n, form.d, ext.q
    if q < d:
        raise ConfigError("need q >= d distinct parameter points")
    add_t = np.array(ext.tables["add"], dtype=np.int32)
    mul_t = np.array(ext.tables["mul"], dtype=np.int32)
    one = ext.element(1).idx
    pow_tables = {1: np.arange(q, dtype=np.int32)}
    for k in range(2, d + 1):
        pow_tables[k] = mul_t[pow_tables[k - 1], np.arange(q)]

    def eval_form_batch(coords):
        acc = np.zeros(coords[0].shape, dtype=np.int32)
        for exps, c in form.monomials.items():
            term = np.full(coords[0].shape, c, dtype=np.int32)
            for i, e in enumerate(exps):
                if e:
                    term = mul_t[term, pow_tables[e][coords[i]]]
            acc = add_t[acc, term]
        return acc

    # d+1 distinct parameter points (s:t): (1:0), (0:1), (1:c) for d-1 values
    params = [(one, 0), (0, one)]
    field_scalars = [k for k in range(1, q)]
    for c in field_scalars[:d - 1]:
        params.append((one, c))

    total = 0
    for i, j, free1, free2 in _rref_plane_blocks(q, n):
        nfree = len(free1) + len(free2)
        block = q ** nfree
        _charge(block * n, "line enumeration block")
        row1 = [np.zeros(block, dtype=np.int32) for _ in range(n)]
        row2 = [np.zeros(block, dtype=np.int32) for _ in range(n)]
        row1[i][:] = one
        row2[j][:] = one
        idx = np.arange(block)
        for pos, col in enumerate(free1 + free2):
            digit = ((idx // q ** pos) % q).astype(np.int32)
            if pos < len(free1):
                row1[col] = digit
            else:
                row2[col] = digit
        on_x = np.ones(block, dtype=bool)
        for s, t in params:
            coords = [add_t[mul_t[s, row1[k]], mul_t[t, row2[k]]]
                      for k in range(n)]
            on_x &= eval_form_batch(coords) == 0
            if not on_x.any():
                break
        total += int(on_x.sum())
    return total


# -- reports ----------------------------------------------------------------------


@dataclass(frozen=True)
class CountReport:
    ell: int
    raw_cone: int
    morphisms: int
    ratio_cone: Fraction
    ratio_morphisms: Fraction


def langweil_report(prob, ell_max: int, method: str = "auto",
                    moduli=None) -> list:
    """Counts and dimension-normalized ratios for ell = 1..ell_max.

    The cone is compared against q^{ell * mu_hat} and the morphism count
    against q^{ell * mu} with mu = (n-d)e + n - 2; both reported as exact
    rationals, never asserted against a threshold."""
    report = dims(prob.n, prob.d, prob.e, convention="affine")
    rows = []
    for ell in range(1, ell_max + 1):
        modulus = None if moduli is None else moduli.get(ell)
        cone = count_cone(prob, ell, method, modulus)
        mor = count_morphisms(prob, ell, method, modulus)
        q_ell = Fraction(prob.spec.q) ** ell
        rows.append(CountReport(
            ell, cone, mor,
            Fraction(cone, 1) / q_ell ** report.mu_hat,
            Fraction(mor, 1) / q_ell ** report.mu_affine))
    return rows
