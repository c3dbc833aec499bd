from fractions import Fraction

import sympy as sp
from hypothesis import settings

from quadfactor.arith import UniPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

X = sp.Symbol("x")


def to_sympy(f: UniPoly, var=X):
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)] or [0], var, domain="QQ")


def from_sympy(e, var=X) -> UniPoly:
    P = sp.Poly(e, var)
    return UniPoly([Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1]))
                    for c in reversed(P.all_coeffs())])
