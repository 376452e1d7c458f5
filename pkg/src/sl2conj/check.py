"""Brute-force 2x2 matrix arithmetic used to re-verify results.

Nothing here reuses the coordinate formulas of :mod:`sl2conj.sl2`; matrices
are plain 4-tuples ``(m11, m12, m21, m22)`` multiplied out directly.
"""

from __future__ import annotations

from .poly import Poly, is_unit


def full(Z) -> tuple:
    """``MatSL2`` or ``MatGL2`` as a 4-tuple."""
    if hasattr(Z, "p11"):
        return (Z.p11, Z.p12, Z.p21, Z.p22)
    return (Z.a, Z.b, Z.c, -Z.a)


def mul(A, B) -> tuple:
    a, b, c, d = A
    e, f, g, h = B
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def sub(A, B) -> tuple:
    return tuple(x - y for x, y in zip(A, B))


def add(A, B) -> tuple:
    return tuple(x + y for x, y in zip(A, B))


def scale(A, k) -> tuple:
    return tuple(x.scale(k) for x in A)


def inv(A) -> tuple | None:
    a, b, c, d = A
    u = is_unit(a * d - b * c)
    if u is None:
        return None
    return (d * u, -b * u, -c * u, a * u)


def conj(P, Z) -> tuple:
    """``P^-1 Z P`` for 4-tuples."""
    return mul(mul(inv(P), Z), P)


def commutator(A, B) -> tuple:
    return sub(mul(A, B), mul(B, A))


def same(A, B) -> bool:
    return all(x == y for x, y in zip(A, B))


def basis(ring):
    z, o = ring.zero, ring.one
    return (z, o, z, z), (o, z, z, -o), (z, z, o, z)


def is_triple(X, H, Y) -> bool:
    return (
        same(commutator(H, X), scale(X, 2))
        and same(commutator(H, Y), scale(Y, -2))
        and same(commutator(X, Y), H)
        and not all(x.is_zero() for x in X)
    )


def entrywise(A, fn) -> tuple:
    return tuple(fn(x) for x in A)


def is_zero(A) -> bool:
    return all(x.is_zero() for x in A)


def det(A) -> Poly:
    a, b, c, d = A
    return a * d - b * c
