"""Weyl differencing bound checked on every atom of the torus.

For the binary fixture the character depth is B = de + 1 = 4, so the
torus splits into 5^4 = 625 atoms.  On each one we compare
|S(alpha)|^(2^(d-1)) against the counting bound coming from two rounds
of squaring.  The comparison is exact: both sides live in Q(zeta_5).
"""

import itertools
import time

from fflab.circle import CountingProblem
from fflab.fields import FieldSpec
from fflab.forms import fermat_form
from fflab.laurent import LaurentElement
from fflab.weyl import check_weyl


def main():
    spec = FieldSpec(5)
    prob = CountingProblem(spec, fermat_form(spec, 2, 3), 1)
    depth = prob.d * prob.e + 1

    start = time.monotonic()
    tight = 0
    passed = 0
    for tail in itertools.product(range(spec.q), repeat=depth):
        alpha = LaurentElement.from_tail(spec, tail)
        rep = check_weyl(prob, alpha)
        passed += rep.passed
        if rep.details["cmp"] == 0:
            tight += 1
    elapsed = time.monotonic() - start

    total = spec.q ** depth
    print(f"atoms checked: {total}")
    print(f"inequality holds on: {passed} / {total}")
    print(f"atoms where the bound is tight (equality): {tight}")
    print(f"elapsed: {elapsed:.2f}s")


if __name__ == "__main__":
    main()
