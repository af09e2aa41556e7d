"""Tour of the special lattice pair attached to a symmetric phase matrix.

A symmetric gamma over F_q((1/t)) defines a pair of dual lattices in
dimension 2n.  We inspect successive minima under both counting
conventions, confirm the duality and symmetry identities, then exercise
the ratio and cape lemmas that control point counts in skew boxes.
"""

from fractions import Fraction

from fflab.fields import FieldSpec
from fflab.latgon import (SpecialLatticePair, check_cape, check_ratio_lemma,
                          check_sandwich, random_symmetric_gamma)


def main():
    spec = FieldSpec(5)

    gamma = random_symmetric_gamma(spec, 2, 7)
    pair = SpecialLatticePair(spec, gamma, 2)
    closed = pair.minima("M", convention="closed", method="reduce")
    opened = pair.minima("M", convention="open", method="reduce")
    enum = pair.minima("M", convention="closed", method="enumerate")
    print(f"seed 7, m = 2")
    print(f"  minima (closed): {closed.exponents}  "
          f"reduce == enumerate: {closed.exponents == enum.exponents}")
    print(f"  minima (open):   {opened.exponents}")
    print(f"  duality check:   {pair.check_duality().passed}")
    print(f"  symmetry closed: {pair.check_minima_symmetry('closed', 'reduce').passed}, "
          f"open: {pair.check_minima_symmetry('open', 'reduce').passed}")

    print("ratio lemma across box pairs:")
    for z1, z2 in [(-1, 0), (-2, 0), (-2, -1), (0, 0)]:
        rep = check_ratio_lemma(pair, z1, z2)
        det = rep.details
        print(f"  z = ({z1}, {z2}): counts ({det['count1']}, {det['count2']}), "
              f"case {det['case']!r}, holds: {rep.passed}")

    a = Fraction(5, 2)
    cape = check_cape(spec, gamma, a, -1, 0)
    sand = check_sandwich(spec, gamma, a, 0)
    print(f"cape lemma at a = {a}: K = {cape.details['K']}, "
          f"counts ({cape.details['count1']}, {cape.details['count2']}), "
          f"holds: {cape.passed}")
    print(f"sandwich at a = {a}, z = 0: holds: {sand.passed}")

    print("minima profiles over 100 seeded matrices (closed convention):")
    histogram = {}
    for seed in range(100):
        g = random_symmetric_gamma(spec, 2, seed)
        p = SpecialLatticePair(spec, g, 1 + (seed % 2))
        prof = p.minima("M", convention="closed", method="reduce")
        histogram[prof.exponents] = histogram.get(prof.exponents, 0) + 1
    for profile, freq in sorted(histogram.items(), key=lambda kv: -kv[1]):
        print(f"  {profile}: {freq}")


if __name__ == "__main__":
    main()
