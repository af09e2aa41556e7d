"""Degree-d forms in n variables as symmetric tensors.

A form is stored twice: as the sparse monomial map the user wrote down, and
as the symmetric tensor c indexed by sorted d-tuples of variable indices with

    F(x) = sum over ALL ordered tuples (i_1,...,i_d) of c_{i_1...i_d} x_{i_1}...x_{i_d}.

Building the tensor divides each monomial coefficient by the number of
orderings of its index multiset, which is invertible precisely when p > d.

The derived multilinear system is the n forms in d-1 vector arguments

    Psi_i(u^(1),...,u^(d-1)) = sum c_{i_1,...,i_{d-1},i} u^(1)_{i_1}...u^(d-1)_{i_{d-1}},

satisfying sum_i x_i Psi_i(x,...,x) = F(x) identically.

Evaluation is ring-generic: vectors of field elements, Polynomial, BinaryForm
or LaurentElement all work (anything with +, * and scale_idx).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod

from .errors import BudgetExceededError, ConfigError
from .fields import FieldElement, FieldSpec


def _multiplicity(rep) -> int:
    """Number of distinct orderings of an index multiset."""
    counts = {}
    for i in rep:
        counts[i] = counts.get(i, 0) + 1
    return factorial(len(rep)) // prod(factorial(c) for c in counts.values())


def _exps_to_rep(exps):
    """Exponent vector -> sorted index tuple, e.g. (2,1) -> (0,0,1)."""
    rep = []
    for i, e in enumerate(exps):
        rep.extend([i] * e)
    return tuple(rep)


class HypersurfaceForm:
    """Immutable degree-d form; construct via symmetrize()."""

    __slots__ = ("spec", "n", "d", "monomials", "tensor", "_grad")

    def __init__(self, spec: FieldSpec, n: int, d: int, monomials, tensor):
        self.spec = spec
        self.n = n
        self.d = d
        self.monomials = monomials
        self.tensor = tensor
        self._grad = None

    def __repr__(self):
        return f"HypersurfaceForm(n={self.n}, d={self.d}, {len(self.monomials)} monomials)"

    def __eq__(self, other):
        return (isinstance(other, HypersurfaceForm) and self.spec == other.spec
                and (self.n, self.d) == (other.n, other.d)
                and self.monomials == other.monomials)

    def __hash__(self):
        return hash((self.spec, self.n, self.d,
                     tuple(sorted(self.monomials.items()))))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        return self.eval_form(x)

    def eval_form(self, x):
        """F at a length-n vector of field elements or ring elements."""
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(x)}")
        if all(isinstance(c, (FieldElement, int)) for c in x):
            return self._eval_field([self.spec.element(c).idx for c in x])
        return self._eval_ring(x)

    def _eval_field(self, idxs):
        spec = self.spec
        mul, add = spec.tables["mul"], spec.tables["add"]
        acc = 0
        for exps, c in self.monomials.items():
            term = c
            for i, e in enumerate(exps):
                xi = idxs[i]
                for _ in range(e):
                    term = mul[term][xi]
                    if term == 0:
                        break
                if term == 0:
                    break
            acc = add[acc][term]
        return spec.from_index(acc)

    def _eval_ring(self, x):
        acc = None
        for exps, c in self.monomials.items():
            term = None
            for i, e in enumerate(exps):
                for _ in range(e):
                    term = x[i] if term is None else term * x[i]
            term = term.scale_idx(c)
            acc = term if acc is None else acc + term
        return acc

    # -- gradient and smoothness -----------------------------------------------

    def gradient_monomials(self):
        """List of n sparse monomial maps for the partial derivatives."""
        if self._grad is None:
            spec = self.spec
            grads = [dict() for _ in range(self.n)]
            add, mul = spec.tables["add"], spec.tables["mul"]
            for exps, c in self.monomials.items():
                for i, e in enumerate(exps):
                    if e == 0:
                        continue
                    newexps = exps[:i] + (e - 1,) + exps[i + 1:]
                    dc = mul[c][spec.element(e).idx]
                    prev = grads[i].get(newexps, 0)
                    grads[i][newexps] = add[prev][dc]
            self._grad = [{k: v for k, v in g.items() if v} for g in grads]
        return self._grad

    def gradient_at(self, idxs, spec=None):
        """Gradient vector (as indices) at a point given by indices; pass a
        larger spec to evaluate over an extension with prime-subfield
        coefficients."""
        spec = spec or self.spec
        mul, add = spec.tables["mul"], spec.tables["add"]
        out = []
        for g in self.gradient_monomials():
            acc = 0
            for exps, c in g.items():
                term = c  # coefficient indices < p embed unchanged
                for i, e in enumerate(exps):
                    for _ in range(e):
                        term = mul[term][idxs[i]]
                        if term == 0:
                            break
                    if term == 0:
                        break
                acc = add[acc][term]
            out.append(acc)
        return out

    def eval_indices(self, idxs, spec):
        """F at a point of an extension field, coordinates as indices."""
        mul, add = spec.tables["mul"], spec.tables["add"]
        acc = 0
        for exps, c in self.monomials.items():
            term = c
            for i, e in enumerate(exps):
                for _ in range(e):
                    term = mul[term][idxs[i]]
                    if term == 0:
                        break
                if term == 0:
                    break
            acc = add[acc][term]
        return acc

    def multilinear(self) -> "MultilinearSystem":
        return MultilinearSystem(self)


class MultilinearSystem:
    """The n polarized forms Psi_i in d-1 vector slots."""

    __slots__ = ("form",)

    def __init__(self, form: HypersurfaceForm):
        self.form = form

    @property
    def n(self):
        return self.form.n

    @property
    def d(self):
        return self.form.d

    def eval(self, i: int, vectors):
        """Psi_i at d-1 length-n vectors (0-based i)."""
        form = self.form
        if len(vectors) != form.d - 1:
            raise ValueError(f"need {form.d - 1} vectors")
        for v in vectors:
            if len(v) != form.n:
                raise ValueError("vector length mismatch")
        if all(isinstance(c, (FieldElement, int)) for v in vectors for c in v):
            vecs = [[form.spec.element(c) for c in v] for v in vectors]
        else:
            vecs = vectors
        acc = None
        for rep, c in form.tensor.items():
            if i not in rep:
                continue
            rem = list(rep)
            rem.remove(i)
            for arr in set(itertools.permutations(rem)):
                term = None
                for slot, j in enumerate(arr):
                    term = (vecs[slot][j] if term is None
                            else term * vecs[slot][j])
                term = (term.scale_idx(c) if hasattr(term, "scale_idx")
                        else term * form.spec.from_index(c))
                acc = term if acc is None else acc + term
        if acc is None:
            z = vecs[0][0]
            acc = (z.zero_like() if hasattr(z, "zero_like")
                   else form.spec.zero)
        return acc

    def coefficient_matrix(self, fixed_vectors):
        """n x n matrix M with M[i][k] = Psi_i(fixed..., e_k).

        fixed_vectors are d-2 vectors over any ring; M is symmetric, and
        u -> (Psi_i(fixed..., u))_i is the linear map with matrix M."""
        form = self.form
        if len(fixed_vectors) != form.d - 2:
            raise ValueError(f"need {form.d - 2} fixed vectors")
        if all(isinstance(c, (FieldElement, int))
               for v in fixed_vectors for c in v):
            fixed_vectors = [[form.spec.element(c) for c in v]
                             for v in fixed_vectors]
        n = form.n
        out = [[None] * n for _ in range(n)]
        for rep, c in form.tensor.items():
            for i in sorted(set(rep)):
                rem1 = list(rep)
                rem1.remove(i)
                for k in sorted(set(rem1)):
                    rem = list(rem1)
                    rem.remove(k)
                    for arr in set(itertools.permutations(rem)):
                        term = None
                        for slot, j in enumerate(arr):
                            x = fixed_vectors[slot][j]
                            term = x if term is None else term * x
                        term = (term.scale_idx(c)
                                if hasattr(term, "scale_idx") else
                                term * form.spec.from_index(c))
                        prev = out[i][k]
                        out[i][k] = term if prev is None else prev + term
        probe = fixed_vectors[0][0]
        zero = probe.zero_like() if hasattr(probe, "zero_like") else form.spec.zero
        for i in range(n):
            for k in range(n):
                if out[i][k] is None:
                    out[i][k] = zero
        return out


def symmetrize(spec: FieldSpec, n: int, d: int, monomials) -> HypersurfaceForm:
    """Build the form from {exponent tuple: coefficient}.

    Coefficients may be ints, coordinate vectors, or field elements; they are
    divided by the ordering multiplicity to populate the symmetric tensor.
    Needs p > d and d >= 3."""
    if d < 3:
        raise ConfigError(f"degree must be >= 3, got {d}")
    if spec.p <= d:
        raise ConfigError(
            f"characteristic {spec.p} must exceed the degree {d}")
    mono = {}
    for exps, c in monomials.items():
        exps = tuple(int(e) for e in exps)
        if len(exps) != n:
            raise ConfigError(f"exponent vector {exps} has wrong length")
        if any(e < 0 for e in exps) or sum(exps) != d:
            raise ConfigError(f"monomial {exps} does not have degree {d}")
        cidx = spec.element(c).idx
        if cidx:
            mono[exps] = cidx
    if not mono:
        raise ConfigError("form has no nonzero monomials")
    tensor = {}
    for exps, c in mono.items():
        rep = _exps_to_rep(exps)
        mult = _multiplicity(rep) % spec.p
        # p > d guarantees the multiplicity is a unit
        tensor[rep] = spec.mul(c, spec.inv(spec.element(mult).idx))
    return HypersurfaceForm(spec, n, d, mono, tensor)


def fermat_form(spec: FieldSpec, n: int, d: int) -> HypersurfaceForm:
    """x_1^d + ... + x_n^d."""
    mono = {}
    for i in range(n):
        exps = [0] * n
        exps[i] = d
        mono[tuple(exps)] = 1
    return symmetrize(spec, n, d, mono)


@dataclass(frozen=True)
class ProbeResult:
    passed: bool
    searched_up_to: int
    witness_extension: int = 0
    witness: tuple = ()

    def __bool__(self):
        return self.passed


def smoothness_probe(form: HypersurfaceForm, k_max: int,
                     budget: int = 10 ** 9) -> ProbeResult:
    """Search for a singular point (F = 0 and grad F = 0, x != 0) over every
    extension F_{q^k}, k <= k_max.  Exhaustive, so only a certificate up to
    the probed degree; the fixtures' smoothness is known independently."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    base = form.spec
    if base.f != 1:
        raise ConfigError("smoothness probe supports prime base fields only")
    for k in range(1, k_max + 1):
        cost = (base.p ** k) ** form.n
        if cost > budget:
            raise BudgetExceededError(cost, budget,
                                      f"smoothness probe at extension {k}")
        spec = base if k == 1 else FieldSpec(base.p, k)
        qk = spec.q
        for code in range(1, qk ** form.n):
            idxs = []
            rest = code
            for _ in range(form.n):
                idxs.append(rest % qk)
                rest //= qk
            if form.eval_indices(idxs, spec):
                continue
            if any(form.gradient_at(idxs, spec)):
                continue
            return ProbeResult(False, k_max, k, tuple(idxs))
    return ProbeResult(True, k_max)


def parse_form_file(path, spec: FieldSpec, n: int, d: int) -> HypersurfaceForm:
    """Read a form from a text file: one monomial per line,

        e_1 e_2 ... e_n : c

    with sum e_i = d; c is an integer or a parenthesized power-basis vector
    like (2,1).  '#' starts a comment."""
    mono = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise ConfigError(f"{path}:{lineno}: missing ':'")
            left, right = line.split(":", 1)
            try:
                exps = tuple(int(tok) for tok in left.split())
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad exponent: {exc}")
            if len(exps) != n:
                raise ConfigError(
                    f"{path}:{lineno}: expected {n} exponents, got {len(exps)}")
            if sum(exps) != d:
                raise ConfigError(
                    f"{path}:{lineno}: monomial degree {sum(exps)} != {d}")
            right = right.strip()
            try:
                if right.startswith("("):
                    coeff = [int(tok) for tok in
                             right.strip("()").split(",") if tok.strip()]
                else:
                    coeff = int(right)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad coefficient: {exc}")
            if exps in mono:
                raise ConfigError(f"{path}:{lineno}: duplicate monomial {exps}")
            mono[exps] = coeff
    return symmetrize(spec, n, d, mono)
