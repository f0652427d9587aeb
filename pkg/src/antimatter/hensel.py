"""Lifting coprime factorizations from F_p[t] to R[t].

Each round takes the error ``e = f - u*v`` (which lies in M[t]), picks the
monomials of minimal potential in it and solves

    ubar * dv + vbar * du = e_mu        (in F_p[t], one monomial mu at a time)

with the Bezout pair of ``(ubar, vbar)``.  Cross terms created by the
update have strictly larger potential, so the minimal potential of the
error grows every round.  Inside A(vars, d, p) potentials are multiples of
1/d, hence at most d rounds are needed.
"""

from __future__ import annotations

from typing import Optional

from .errors import NotCoprime, NotInSubring, ReductionMismatch
from .fp import FpPoly, fp_bezout, fp_gcd
from .ring import RingElem
from .rpoly import RPoly, lift_fp, reduce_mod_M
from .subring import SubringSpec, ambient_subring

__all__ = ["hensel_split", "HenselTrace"]


class HenselTrace(list):
    """Minimal error potential seen at the start of each round."""


def _scale_mono(fbar: FpPoly, mono, p: int) -> RPoly:
    return RPoly([RingElem(p, 0, [(mono, c)]) for c in fbar.coeffs], p)


def hensel_split(
    f: RPoly,
    u_bar: FpPoly,
    v_bar: FpPoly,
    spec: Optional[SubringSpec] = None,
    trace: Optional[HenselTrace] = None,
) -> tuple[RPoly, RPoly]:
    """Return ``(u, v)`` with ``u*v == f`` and images associate to the inputs.

    ``u`` reduces to ``monic(u_bar)``; ``v`` reduces to ``c*monic(v_bar)``
    where ``c`` is the leading coefficient of ``reduce_mod_M(f)``.
    """
    p = f.p
    if spec is None:
        spec = ambient_subring(f)
    if not spec.contains_poly(f):
        raise NotInSubring(f"{f} is not in {spec}")
    if fp_gcd(u_bar, v_bar).degree != 0:
        raise NotCoprime(f"gcd({u_bar}, {v_bar}) != 1")
    fbar = reduce_mod_M(f)
    if fbar.is_zero() or (u_bar * v_bar).monic() != fbar.monic():
        raise ReductionMismatch(f"{u_bar} * {v_bar} is not associate to {fbar}")
    ub = u_bar.monic()
    vb = v_bar.monic() * fbar.lc()
    s, r = fp_bezout(ub, vb)
    u, v = lift_fp(ub), lift_fp(vb)

    for _ in range(spec.denominator + 1):
        e = f - u * v
        if e.is_zero():
            break
        m = e.min_potential()
        if trace is not None:
            trace.append(m)
        assert m > 0, "error term must lie in M[t]"
        monos = {mono for c in e.coeffs for mono in c.terms if mono.potential == m}
        du, dv = RPoly.zero(p), RPoly.zero(p)
        for mono in sorted(monos, key=lambda x: x.deglex_key()):
            e_mu = FpPoly([c.coefficient(mono) for c in e.coeffs], p)
            dv_mu = (s * e_mu) % vb
            du_mu, rem = divmod(e_mu - ub * dv_mu, vb)
            assert rem.is_zero()
            du = du + _scale_mono(du_mu, mono, p)
            dv = dv + _scale_mono(dv_mu, mono, p)
        u, v = u + du, v + dv
    else:
        raise AssertionError("Hensel lifting exceeded d+1 rounds")  # pragma: no cover
    if u * v != f:
        raise AssertionError("Hensel lifting produced a wrong product")  # pragma: no cover
    return u, v
