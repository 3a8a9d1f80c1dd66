"""
Exact Wronskian determinants of polynomials and prefactored functions.
"""

from typing import List, Optional, Sequence

from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from solvableqm.errors import UsageError

from .poly import RatFunc, as_poly
from .prefactored import FACTORS, PrefactoredFunction


def poly_det(rows: Sequence[Sequence[Poly]]) -> Poly:
    """
    Determinant of a square matrix of polynomials in one variable, by
    fraction-free elimination over QQ[v].
    """
    n = len(rows)
    if n == 0:
        raise UsageError("Determinant of an empty matrix")

    gen = rows[0][0].gen
    ring = QQ[gen]
    elements = [[ring.from_sympy(p.as_expr()) for p in row] for row in rows]
    det = DomainMatrix(elements, (n, n), ring).det()

    return Poly(ring.to_sympy(det), gen, domain=QQ)


def poly_wronskian(fs: Sequence[Poly]) -> Poly:
    """
    W[f_1, ..., f_n] = det(d^(j-1) f_k / dv^(j-1)) for polynomials in v.
    """
    fs = [as_poly(f) for f in fs]
    if not fs:
        raise UsageError("Wronskian of an empty sequence")

    gens = {f.gen for f in fs}
    if len(gens) > 1:
        raise UsageError(f"Wronskian entries use different variables {gens}")

    rows: List[List[Poly]] = [fs]
    for _ in range(len(fs) - 1):
        rows.append([f.diff() for f in rows[-1]])

    return poly_det(rows)


def _raise_order(
    r: RatFunc,
    q_prime: RatFunc,
    exponents: Sequence,
    basis: Sequence[str],
    lam: RatFunc,
) -> RatFunc:
    """
    One differentiation of G * R written as G' * Lambda**-1 * D(R), where
    G carries the given exponents and Lambda is the full basis product.
    """
    body = (r.diff() + r * q_prime) * lam
    for name, a in zip(basis, exponents):
        if a != 0:
            ell = FACTORS[name]
            body = body + r * (lam / RatFunc(ell)) * (a * ell.diff().LC())
    return body


def prefactored_wronskian(
    fs: Sequence[PrefactoredFunction],
    variable: str = "eta",
    eta_prime: Optional[PrefactoredFunction] = None,
) -> PrefactoredFunction:
    """
    Wronskian of prefactored functions.

    With G_k the prefactor of f_k and Lambda the product of the basis
    factors, the j-th derivative of f_k is G_k Lambda**-j r_jk for rational
    r_jk, so W = prod G_k * Lambda**(-n(n-1)/2) * det(r_jk).  For
    variable "x" the eta Wronskian is multiplied by eta'**(n(n-1)/2).
    """
    fs = list(fs)
    if not fs:
        raise UsageError("Wronskian of an empty sequence")

    basis = fs[0].basis
    for f in fs[1:]:
        if f.basis != basis:
            raise UsageError(
                f"incompatible factor bases: {basis} vs {f.basis}"
            )

    n = len(fs)
    lam = RatFunc(1)
    for name in basis:
        lam = lam * RatFunc(FACTORS[name])

    columns = []
    for f in fs:
        q_prime = RatFunc(f.exp.diff())
        exps = list(f.exponents)
        entries = [f.ratfunc]
        for _ in range(n - 1):
            entries.append(
                _raise_order(entries[-1], q_prime, exps, basis, lam)
            )
            exps = [a - 1 for a in exps]
        columns.append(entries)

    # clear the denominators column by column so the determinant stays in
    # the polynomial ring
    dens = []
    poly_columns = []
    for entries in columns:
        common = entries[0].den
        for e in entries[1:]:
            common = common.lcm(e.den)
        dens.append(common)
        poly_columns.append([(e * RatFunc(common)).as_poly() for e in entries])

    rows = [[poly_columns[k][j] for k in range(n)] for j in range(n)]
    det = RatFunc(poly_det(rows))
    for d in dens:
        det = det / RatFunc(d)

    shift = n * (n - 1) // 2
    exps = [
        sum((f.exponents[i] for f in fs), 0) - shift
        for i in range(len(basis))
    ]
    exp = fs[0].exp
    for f in fs[1:]:
        exp = exp + f.exp

    result = PrefactoredFunction(det, exp, basis, exps)

    if variable == "x":
        if eta_prime is None:
            raise UsageError("An x Wronskian needs eta'(x)")
        result = result * eta_prime**shift
    elif variable != "eta":
        raise UsageError(f"Unknown Wronskian variable {variable!r}")

    return result
