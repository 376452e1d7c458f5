"""JSON encodings.

Polynomials travel as canonical strings, ``sl2`` elements as
``{"a", "b", "c"}`` for ``[[a, b], [c, -a]]``, GL2 matrices as nested rows.
"""

from __future__ import annotations

import json

from .automorphisms import LieAut, LieDer, RingAut, RingDer
from .errors import PayloadError
from .poly import BezoutCert, Poly, PolyRing
from .sl2 import MatGL2, MatSL2, Sl2Triple


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- encoding ---------------------------------------------------------------


def enc_poly(p: Poly) -> str:
    return str(p)


def enc_sl2(M: MatSL2) -> dict:
    return {"a": str(M.a), "b": str(M.b), "c": str(M.c)}


def enc_gl2(P: MatGL2) -> list:
    return [[str(P.p11), str(P.p12)], [str(P.p21), str(P.p22)]]


def enc_triple(T: Sl2Triple) -> dict:
    return {"X": enc_sl2(T.X), "H": enc_sl2(T.H), "Y": enc_sl2(T.Y)}


def enc_cert(c: BezoutCert) -> dict:
    return {"r": str(c.r), "s": str(c.s)}


def enc_var_map(variables, images) -> dict:
    return {v: str(p) for v, p in zip(variables, images)}


def enc_aut(sigma: LieAut) -> dict:
    names = sigma.ring.variables
    return {
        "P": enc_gl2(sigma.P),
        "rho": enc_var_map(names, sigma.rho.images),
        "rho_inv": enc_var_map(names, sigma.rho.inverse_images),
    }


def enc_der(D: LieDer) -> dict:
    return {"Z": enc_sl2(D.Z), "delta": enc_var_map(D.delta.ring.variables, D.delta.images)}


# -- decoding ---------------------------------------------------------------


def _require(payload: dict, key: str):
    if not isinstance(payload, dict) or key not in payload:
        raise PayloadError(f"missing field {key!r}")
    return payload[key]


def dec_poly(value, ring: PolyRing) -> Poly:
    if isinstance(value, bool):
        raise PayloadError(f"expected a polynomial, got {value!r}")
    if isinstance(value, int):
        return ring.const(value)
    if not isinstance(value, str):
        raise PayloadError(f"expected a polynomial string, got {value!r}")
    return ring.parse(value)


def dec_sl2(value, ring: PolyRing) -> MatSL2:
    if isinstance(value, list) and len(value) == 3:
        return MatSL2(*(dec_poly(v, ring) for v in value))
    if not isinstance(value, dict):
        raise PayloadError(f"expected {{'a', 'b', 'c'}}, got {value!r}")
    return MatSL2(*(dec_poly(_require(value, k), ring) for k in "abc"))


def dec_gl2(value, ring: PolyRing) -> MatGL2:
    if isinstance(value, list) and len(value) == 2 and all(isinstance(r, list) for r in value):
        flat = value[0] + value[1]
    else:
        flat = value
    if not isinstance(flat, list) or len(flat) != 4:
        raise PayloadError(f"expected [[p11, p12], [p21, p22]], got {value!r}")
    return MatGL2(*(dec_poly(v, ring) for v in flat))


def dec_var_map(value, variables, ring: PolyRing) -> list[Poly]:
    if not isinstance(value, dict):
        raise PayloadError(f"expected a variable map, got {value!r}")
    extra = set(value) - set(variables)
    if extra:
        raise PayloadError(f"unknown variables {sorted(extra)} in map")
    return [dec_poly(_require(value, v), ring) for v in variables]


def dec_cert(value, ring: PolyRing):
    if value is None:
        return None
    if isinstance(value, list) and len(value) == 2:
        return (dec_poly(value[0], ring), dec_poly(value[1], ring))
    return (dec_poly(_require(value, "r"), ring), dec_poly(_require(value, "s"), ring))


def dec_aut(value, ring: PolyRing) -> LieAut:
    P = dec_gl2(_require(value, "P"), ring)
    names = ring.variables
    images = dec_var_map(_require(value, "rho"), names, ring)
    inv = value.get("rho_inv")
    inverse = dec_var_map(inv, names, ring) if inv is not None else None
    return LieAut(P, RingAut(ring, images, inverse))


def dec_der(value, ring: PolyRing) -> LieDer:
    Z = dec_sl2(_require(value, "Z"), ring)
    images = dec_var_map(_require(value, "delta"), ring.variables, ring)
    return LieDer(Z, RingDer(ring, images))


def dec_sl2_list(value, ring: PolyRing) -> list[MatSL2]:
    if not isinstance(value, list):
        raise PayloadError(f"expected a list of matrices, got {value!r}")
    return [dec_sl2(v, ring) for v in value]
