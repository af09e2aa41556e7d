"""Shrinking the counting box costs a controlled power of q.

count_N(alpha) counts pairs in the full coefficient box whose
differenced phase vanishes; count_N_eta shrinks the box by a factor
q^(-eta(e+1)) per coordinate.  The inequality

    N(alpha) <= q^((e+1)(d-1)n(1-eta)) * N_eta(alpha)

requires the parity condition (e+1)(eta+1)/2 integral, so the menu of
admissible eta depends on e in a parity-sensitive way.
"""

from fractions import Fraction

from fflab.circle import CountingProblem
from fflab.errors import ConfigError
from fflab.fields import FieldSpec
from fflab.forms import fermat_form
from fflab.laurent import LaurentElement
from fflab.weyl import check_shrink, count_N, count_N_eta


def admissible(e):
    return [Fraction(k, e + 1) for k in range(e + 2)
            if (k + e + 1) % 2 == 0]


def main():
    for e in (1, 2, 3, 4):
        print(f"e = {e}: admissible eta = {[str(x) for x in admissible(e)]}")

    spec = FieldSpec(5)
    prob = CountingProblem(spec, fermat_form(spec, 2, 3), 1)
    print()
    for tail in [(0, 0, 0, 0), (1, 0, 0, 0), (0, 2, 1, 3)]:
        alpha = LaurentElement.from_tail(spec, tail)
        big = count_N(prob, alpha)
        for eta in admissible(1):
            small = count_N_eta(prob, alpha, eta)
            rep = check_shrink(prob, alpha, eta)
            print(f"alpha tail {tail}, eta={eta}: "
                  f"N = {big}, N_eta = {small}, bound = {rep.details['rhs']}, "
                  f"holds: {rep.passed}")

    print()
    try:
        check_shrink(prob, LaurentElement.from_tail(spec, (1, 0, 0, 0)),
                     Fraction(1, 2))
    except ConfigError as exc:
        print(f"eta = 1/2 at e = 1 is rejected: {exc}")


if __name__ == "__main__":
    main()
