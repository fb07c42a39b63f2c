"""Negative (Hirzebruch-Jung) continued fractions.

``[a1, ..., ak]`` stands for ``a1 - 1/(a2 - 1/(... - 1/ak))`` with every
``ai >= 2``.  Values are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence


class ContFracError(ValueError):
    pass


def _check(cf: Sequence[int]) -> list[int]:
    cf = [int(a) for a in cf]
    if not cf:
        raise ContFracError("empty continued fraction")
    if any(a < 2 for a in cf):
        raise ContFracError(f"entries must be >= 2: {cf}")
    return cf


def eval_cf(cf: Sequence[int]) -> Fraction:
    """Exact value, evaluated back to front."""
    cf = _check(cf)
    value = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        value = a - 1 / value
    return value


def expand_cf(r) -> list[int]:
    """Unique expansion of a rational ``r > 1``."""
    r = Fraction(r)
    if r <= 1:
        raise ContFracError(f"{r} is not > 1")
    out = []
    p, q = r.numerator, r.denominator
    while True:
        a = -(-p // q)  # ceil
        out.append(a)
        # a - p/q = (aq - p)/q; next value is q / (aq - p)
        rem = a * q - p
        if rem == 0:
            return out
        p, q = q, rem


def reversed_value(cf: Sequence[int]) -> Fraction:
    """Value of the reversed expansion.

    If ``cf`` evaluates to ``u/v`` the reversal evaluates to ``u/v'`` with
    ``v * v' == 1 (mod u)``.
    """
    cf = _check(cf)
    forward = eval_cf(cf)
    back = eval_cf(cf[::-1])
    u = forward.numerator
    assert back.numerator == u
    assert u == 1 or (forward.denominator * back.denominator) % u == 1
    return back


def is_gpq_value(r) -> tuple[int, int] | None:
    """``(p, q)`` with ``r = p^2/(pq - 1)``, ``p > q > 0`` coprime, if any."""
    r = Fraction(r)
    if r <= 1:
        return None
    u, v = r.numerator, r.denominator
    p = isqrt(u)
    if p * p != u:
        return None
    if (v + 1) % p:
        return None
    q = (v + 1) // p
    if 0 < q < p and gcd(p, q) == 1:
        return p, q
    return None


def gr_step_left(cf: Sequence[int]) -> list[int]:
    """``(a1..ak) -> (2, a1, .., ak + 1)``."""
    cf = _check(cf)
    out = [2] + cf
    out[-1] += 1
    return out


def gr_step_right(cf: Sequence[int]) -> list[int]:
    """``(a1..ak) -> (a1 + 1, .., ak, 2)``."""
    cf = _check(cf)
    out = cf + [2]
    out[0] += 1
    return out


def gr_reduce(cf: Sequence[int]) -> list[str] | None:
    """Undo left/right steps back to ``[4]``.

    Returns the forward word (``"L"``/``"R"``, in application order from
    ``[4]``) or ``None`` if ``cf`` is not reachable.  For length >= 2 at most
    one inverse step applies, so the reduction is forced.
    """
    cf = _check(cf)
    word: list[str] = []
    while len(cf) > 1:
        first, last = cf[0], cf[-1]
        if first == 2 and last > 2:
            cf = cf[1:]
            cf[-1] -= 1
            word.append("L")
        elif last == 2 and first > 2:
            cf = cf[:-1]
            cf[0] -= 1
            word.append("R")
        else:
            return None
    if cf != [4]:
        return None
    return word[::-1]


def apply_word(word: Sequence[str], start: Sequence[int] = (4,)) -> list[int]:
    cf = list(start)
    for step in word:
        if step == "L":
            cf = gr_step_left(cf)
        elif step == "R":
            cf = gr_step_right(cf)
        else:
            raise ContFracError(f"unknown step {step!r}")
    return cf


def gpq_cf(p: int, q: int) -> list[int]:
    """Expansion of ``p^2/(pq - 1)`` for coprime ``p > q > 0``."""
    if not (0 < q < p) or gcd(p, q) != 1:
        raise ContFracError(f"need coprime p > q > 0, got ({p}, {q})")
    return expand_cf(Fraction(p * p, p * q - 1))
