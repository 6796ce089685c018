"""Sparse Laurent polynomials in L with integer coefficients.

A Laurent polynomial is a plain ``dict`` from exponent to nonzero integer
coefficient.  Helpers here never mutate their arguments.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Laurent = dict[int, int]


def lp_clean(terms: Mapping[int, int]) -> Laurent:
    """Drop zero coefficients."""
    return {e: c for e, c in terms.items() if c}


def lp_monomial(exponent: int, coeff: int = 1) -> Laurent:
    return {exponent: coeff} if coeff else {}


def lp_add(a: Mapping[int, int], b: Mapping[int, int]) -> Laurent:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return lp_clean(out)


def lp_scale(a: Mapping[int, int], k: int) -> Laurent:
    return lp_clean({e: c * k for e, c in a.items()})


def lp_shift(a: Mapping[int, int], k: int) -> Laurent:
    """Multiply by L^k."""
    return {e + k: c for e, c in a.items()}


def lp_mul(a: Mapping[int, int], b: Mapping[int, int]) -> Laurent:
    out: Laurent = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return lp_clean(out)


def lp_one_minus(a: int) -> Laurent:
    """The factor (1 - L^-a)."""
    return {0: 1, -a: -1}


def lp_denominator(factors: Iterable[int]) -> Laurent:
    """Product of (1 - L^-a) over *factors*."""
    out: Laurent = {0: 1}
    for a in factors:
        out = lp_mul(out, lp_one_minus(a))
    return out


def lp_divide_one_minus(n: Mapping[int, int], a: int) -> Laurent | None:
    """Exact quotient n / (1 - L^-a), or None when it is not a Laurent polynomial.

    From n = q (1 - L^-a) we get q[e] = n[e] + q[e + a], filled from the top.
    """
    if not n:
        return {}
    top = max(n)
    bottom = min(n)
    q: Laurent = {}
    for e in range(top, bottom + a - 1, -1):
        c = n.get(e, 0) + q.get(e + a, 0)
        if c:
            q[e] = c
    if lp_mul(q, lp_one_minus(a)) != lp_clean(n):
        return None
    return q


def lp_max_exponent(a: Mapping[int, int]) -> int | None:
    return max(a) if a else None


def lp_min_exponent(a: Mapping[int, int]) -> int | None:
    return min(a) if a else None


def lp_sorted_terms(a: Mapping[int, int]) -> list[tuple[int, int]]:
    """Terms by descending exponent."""
    return sorted(((e, c) for e, c in a.items() if c), key=lambda t: -t[0])


def lp_render(a: Mapping[int, int]) -> str:
    """Render as ``2*L^3 - L + 1`` (descending powers, ``L^-2`` for negatives)."""
    terms = lp_sorted_terms(a)
    if not terms:
        return "0"
    parts: list[str] = []
    for i, (e, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "L" if e == 1 else f"L^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if i == 0:
            parts.append(f"-{body}" if sign == "-" else body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
