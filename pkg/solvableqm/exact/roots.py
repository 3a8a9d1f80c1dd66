"""
Exact real-root counting by Sturm sequences.
"""

from typing import Optional, Tuple

from sympy import Poly, Rational, oo

from solvableqm.errors import UsageError

from .poly import as_poly

Interval = Tuple[Optional[Rational], Optional[Rational]]


def _finite(end) -> Optional[Rational]:
    if end is None or end in (oo, -oo):
        return None
    return Rational(end)


def real_root_count(p: Poly, interval: Interval = (None, None)) -> int:
    """
    Number of distinct real roots of p in the open interval (lo, hi).
    None (or +-oo) marks an infinite end.
    """
    p = as_poly(p)
    if p.is_zero:
        raise UsageError("Root count of the zero polynomial")
    if p.degree() == 0:
        return 0

    lo, hi = (_finite(e) for e in interval)
    if lo is not None and hi is not None and lo >= hi:
        raise UsageError(f"Empty interval ({lo}, {hi})")

    count = p.count_roots(lo, hi)

    # count_roots works on the closed interval
    for end in (lo, hi):
        if end is not None and p.eval(end) == 0:
            count -= 1

    return count
