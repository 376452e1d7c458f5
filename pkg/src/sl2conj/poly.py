"""Sparse multivariate polynomials over an exact field.

A :class:`Poly` is an immutable map from exponent tuples to nonzero field
elements.  Terms are ordered graded-lexicographically with the declared
variable order ``x1 > x2 > ...``; that order fixes leading terms, monic
normalization and the canonical printed form.
"""

from __future__ import annotations

from operator import add as _add
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    MultivariateUnsupported,
    NotDivisible,
    UnknownVariable,
)
from .field import QQ, RATIONAL_TYPES, Field


def _glex(m: tuple[int, ...]):
    return (sum(m), m)


class PolyRing:
    """``F[x1, ..., xn]`` with a fixed variable order."""

    def __init__(self, field: Field = QQ, variables: Sequence[str] = ("t",)):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise UnknownVariable(f"duplicate variable names in {variables}")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self._unit_exp = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._unit_exp: field.elem(1)})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"PolyRing({self.field.config!r}, {list(self.variables)!r})"

    def const(self, value) -> Poly:
        c = self.field.elem(value)
        if not c:
            return self.zero
        return Poly(self, {self._unit_exp: c})

    def gen(self, which: int | str) -> Poly:
        if isinstance(which, str):
            try:
                which = self.variables.index(which)
            except ValueError:
                raise UnknownVariable(which) from None
        exp = tuple(1 if i == which else 0 for i in range(self.nvars))
        return Poly(self, {exp: self.field.elem(1)})

    def gens(self) -> list[Poly]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exp: Sequence[int], coeff=1) -> Poly:
        c = self.field.elem(coeff)
        if not c:
            return self.zero
        return Poly(self, {tuple(exp): c})

    def from_terms(self, terms: dict) -> Poly:
        red = self.field.elem
        out = {}
        for m, c in terms.items():
            if len(m) != self.nvars:
                raise FieldMismatch(f"exponent {m} has wrong length for {self}")
            c = red(c)
            if c:
                out[tuple(m)] = c
        return Poly(self, out)

    def coerce(self, value) -> Poly:
        if isinstance(value, Poly):
            if value.ring != self:
                raise FieldMismatch(f"{value.ring} vs {self}")
            return value
        if isinstance(value, RATIONAL_TYPES):
            return self.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def parse(self, text: str) -> Poly:
        from .parse import parse_poly

        return parse_poly(text, self)


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        # trusted constructor: terms must already be canonical
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._unit_exp in self.terms)

    def constant_value(self):
        """The field element if constant, else ``None``."""
        if not self.terms:
            return self.ring.field.elem(0)
        if self.is_constant():
            return self.terms[self.ring._unit_exp]
        return None

    def leading_monomial(self) -> tuple[int, ...]:
        return max(self.terms, key=_glex)

    def leading_coefficient(self):
        if not self.terms:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def variables_used(self) -> set[int]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _glex(mc[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _other(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise FieldMismatch(f"{other.ring} vs {self.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._other(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        red = self.ring.field.reduce
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                s = red(v + c)
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.reduce
        return Poly(self.ring, {m: red(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._other(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        get = acc.get
        if self.ring.nvars == 1:
            for (mb,), cb in b.items():
                for (ma,), ca in a.items():
                    k = (ma + mb,)
                    acc[k] = get(k, 0) + ca * cb
        else:
            for mb, cb in b.items():
                for ma, ca in a.items():
                    k = tuple(map(_add, ma, mb))
                    acc[k] = get(k, 0) + ca * cb
        red = self.ring.field.reduce
        out = {}
        for m, c in acc.items():
            c = red(c)
            if c:
                out[m] = c
        return Poly(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> Poly:
        field = self.ring.field
        c = field.elem(c)
        if not c:
            return self.ring.zero
        red = field.reduce
        return Poly(self.ring, {m: red(v * c) for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp: Sequence[int], c=1) -> Poly:
        field = self.ring.field
        c = field.elem(c)
        red = field.reduce
        return Poly(
            self.ring,
            {tuple(map(_add, m, exp)): red(v * c) for m, v in self.terms.items()},
        )

    def monic(self) -> Poly:
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(self.ring.field.inv(lc))

    def divexact(self, other) -> Poly:
        """Exact quotient; raises :class:`NotDivisible` on a nonzero remainder."""
        other = self._other(other)
        if not other.terms:
            raise DivisionByZero("division by the zero polynomial")
        field = self.ring.field
        if other.is_constant():
            return self.scale(field.inv(other.constant_value()))
        red = field.reduce
        lm_b = other.leading_monomial()
        inv_lc = field.inv(other.terms[lm_b])
        rest = [(m, c) for m, c in other.terms.items() if m != lm_b]
        r = dict(self.terms)
        q = {}
        while r:
            m = max(r, key=_glex)
            qm = tuple(x - y for x, y in zip(m, lm_b))
            if min(qm) < 0:
                raise NotDivisible(f"({self}) is not divisible by ({other})")
            qc = red(r.pop(m) * inv_lc)
            q[qm] = qc
            for mb, cb in rest:
                k = tuple(map(_add, qm, mb))
                v = red(r.get(k, 0) - qc * cb)
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return Poly(self.ring, q)

    def divides(self, other) -> bool:
        other = self._other(other)
        if not self.terms:
            return not other.terms
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    # -- calculus / substitution ------------------------------------------

    def derivative(self, i: int) -> Poly:
        red = self.ring.field.reduce
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                v = red(c * e)
                if v:
                    out[m[:i] + (e - 1,) + m[i + 1:]] = v
        return Poly(self.ring, out)

    def substitute(self, images: Sequence[Poly], target: PolyRing | None = None) -> Poly:
        """Ring homomorphism ``x_i -> images[i]`` (images may live in another ring)."""
        if len(images) != self.ring.nvars:
            raise UnknownVariable(
                f"expected {self.ring.nvars} images, got {len(images)}"
            )
        if target is None:
            target = images[0].ring if images else self.ring
        if target.field != self.ring.field:
            raise FieldMismatch("substitution across different fields")
        powers: list[dict[int, Poly]] = [{0: target.one, 1: img} for img in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                half = pw(i, k // 2)
                cache[k] = half * half if k % 2 == 0 else half * half * cache[1]
            return cache[k]

        acc: dict = {}
        red = target.field.reduce
        get = acc.get
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    term = pw(i, e) if term is None else term * pw(i, e)
            if term is None:
                k = target._unit_exp
                acc[k] = get(k, 0) + c
                continue
            for tm, tc in term.terms.items():
                acc[tm] = get(tm, 0) + c * tc
        out = {}
        for m, c in acc.items():
            c = red(c)
            if c:
                out[m] = c
        return Poly(target, out)

    # -- univariate views --------------------------------------------------

    def coeffs_in(self, i: int) -> dict[int, Poly]:
        """Coefficients as a polynomial in ``x_i`` (each free of ``x_i``)."""
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = c
        return {d: Poly(self.ring, t) for d, t in parts.items()}

    def coeff_in(self, i: int, d: int) -> Poly:
        out = {}
        for m, c in self.terms.items():
            if m[i] == d:
                out[m[:i] + (0,) + m[i + 1:]] = c
        return Poly(self.ring, out)

    # -- comparison / printing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, RATIONAL_TYPES):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_poly(p: Poly) -> str:
    """Canonical text: terms in descending graded-lex order."""
    if not p.terms:
        return "0"
    field = p.ring.field
    names = p.ring.variables
    pieces = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        neg = field.is_negative(c)
        if neg:
            c = -c
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
        )
        cs = field.format(c)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if idx == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# unit test, gcd, extended gcd


def is_unit(a: Poly) -> Poly | None:
    """Inverse of ``a`` if it is a unit of ``F[x1..xn]`` (a nonzero constant)."""
    if a.is_zero() or not a.is_constant():
        return None
    return a.ring.const(a.ring.field.inv(a.constant_value()))


def _only_var(a: Poly, b: Poly):
    used = a.variables_used() | b.variables_used()
    if len(used) == 1:
        return used.pop()
    return None


def _dense(p: Poly, v: int) -> list:
    deg = p.degree_in(v)
    out = [0] * (deg + 1)
    for m, c in p.terms.items():
        out[m[v]] = c
    return out


def _undense(ring: PolyRing, v: int, coeffs: list) -> Poly:
    out = {}
    base = [0] * ring.nvars
    for d, c in enumerate(coeffs):
        if c:
            base[v] = d
            out[tuple(base)] = c
    return Poly(ring, out)


def _dtrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _ddivmod(a: list, b: list, field: Field):
    red = field.reduce
    a = list(a)
    db = len(b) - 1
    inv = field.inv(b[-1])
    if len(a) - 1 < db:
        return [], _dtrim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if not c:
            continue
        c = red(c * inv)
        q[k] = c
        for j in range(db + 1):
            a[k + j] = red(a[k + j] - c * b[j])
    return _dtrim(q), _dtrim(a[:db])


def _dmonic(a: list, field: Field) -> list:
    inv = field.inv(a[-1])
    red = field.reduce
    return [red(c * inv) for c in a]


def _dgcd(a: list, b: list, field: Field) -> list:
    a, b = _dmonic(a, field), _dmonic(b, field)
    while b:
        _, r = _ddivmod(a, b, field)
        a, b = b, (_dmonic(r, field) if r else r)
    return a


def _dsub_mul(x: list, q: list, y: list, field: Field) -> list:
    # x - q*y
    red = field.reduce
    n = max(len(x), len(q) + len(y) - 1 if q and y else 0)
    out = list(x) + [0] * (n - len(x))
    for i, qi in enumerate(q):
        if qi:
            for j, yj in enumerate(y):
                out[i + j] = red(out[i + j] - qi * yj)
    return _dtrim(out)


def _content_in(p: Poly, v: int) -> Poly:
    g = None
    for c in sorted(p.coeffs_in(v).values(), key=lambda q: len(q.terms)):
        g = c.monic() if g is None else _gcd_nonzero(g, c).monic()
        if g.is_constant():
            return p.ring.one
    return g


def _prem(a: Poly, b: Poly, v: int) -> Poly:
    db = b.degree_in(v)
    lcb = b.coeff_in(v, db)
    r = a
    exp = [0] * a.ring.nvars
    while r.terms:
        dr = r.degree_in(v)
        if dr < db:
            break
        lcr = r.coeff_in(v, dr)
        exp[v] = dr - db
        r = r * lcb - (lcr * b).mul_monomial(exp)
    return r


def _gcd_nonzero(a: Poly, b: Poly) -> Poly:
    """Some associate of gcd(a, b) for nonzero a, b."""
    if a.is_constant() or b.is_constant():
        return a.ring.one
    ua, ub = a.variables_used(), b.variables_used()
    v = min(ua | ub)
    if v not in ua:
        return _gcd_nonzero(a, _content_in(b, v))
    if v not in ub:
        return _gcd_nonzero(_content_in(a, v), b)
    if len(ua | ub) == 1:
        field = a.ring.field
        return _undense(a.ring, v, _dgcd(_dense(a, v), _dense(b, v), field))
    ca, cb = _content_in(a, v), _content_in(b, v)
    c = _gcd_nonzero(ca, cb) if not (ca.is_constant() and cb.is_constant()) else a.ring.one
    pa, pb = a.divexact(ca), b.divexact(cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    # primitive remainder sequence in x_v
    while True:
        r = _prem(pa, pb, v)
        if r.is_zero():
            g = pb
            break
        if r.degree_in(v) == 0:
            g = a.ring.one
            break
        pa, pb = pb, r.divexact(_content_in(r, v)).monic()
    return c * g


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd under graded-lex; ``gcd(0, 0) = 0``."""
    b = a._other(b)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return _gcd_nonzero(a, b).monic()


def poly_gcd_many(polys: Iterable[Poly], ring: PolyRing) -> Poly:
    g = ring.zero
    for p in polys:
        g = poly_gcd(g, p)
        if g == 1:
            break
    return g


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, r, s)`` with ``r*a + s*b = g = poly_gcd(a, b)``; univariate only."""
    b = a._other(b)
    ring = a.ring
    if ring.nvars > 1:
        raise MultivariateUnsupported(
            "extended gcd is only available over F[t]; supply a Bezout certificate"
        )
    field = ring.field
    if ring.nvars == 0:
        if a:
            return ring.one, ring.const(field.inv(a.constant_value())), ring.zero
        if b:
            return ring.one, ring.zero, ring.const(field.inv(b.constant_value()))
        return ring.zero, ring.zero, ring.zero
    r0, r1 = _dense(a, 0), _dense(b, 0)
    s0, s1 = [field.elem(1)], []
    t0, t1 = [], [field.elem(1)]
    while r1:
        q, r = _ddivmod(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, _dsub_mul(s0, q, s1, field)
        t0, t1 = t1, _dsub_mul(t0, q, t1, field)
    if not r0:
        return ring.zero, ring.zero, ring.zero
    inv = field.inv(r0[-1])
    red = field.reduce
    g = _undense(ring, 0, [red(c * inv) for c in r0])
    r = _undense(ring, 0, [red(c * inv) for c in s0])
    s = _undense(ring, 0, [red(c * inv) for c in t0])
    return g, r, s


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def poly_divexact(a: Poly, b: Poly) -> Poly:
    return a.divexact(b)


class BezoutCert:
    """Witness ``r*g2 + s*g3 = 1`` that ``(g2) + (g3) = R``."""

    __slots__ = ("r", "s", "targets")

    def __init__(self, r: Poly, s: Poly, targets: tuple[Poly, Poly]):
        from .errors import BadCertificate

        g2, g3 = targets
        if r * g2 + s * g3 != 1:
            raise BadCertificate(f"({r})*({g2}) + ({s})*({g3}) != 1")
        self.r, self.s, self.targets = r, s, (g2, g3)

    def __eq__(self, other):
        return (
            isinstance(other, BezoutCert)
            and (self.r, self.s, self.targets) == (other.r, other.s, other.targets)
        )

    def __repr__(self):
        return f"BezoutCert(r={self.r}, s={self.s})"


def comaximal_certificate(g2: Poly, g3: Poly, cert=None) -> BezoutCert:
    """Verified certificate for ``(g2) + (g3) = R``.

    ``cert`` may be a :class:`BezoutCert` or an ``(r, s)`` pair.  Without one the
    certificate is derived by the extended Euclidean algorithm, which is only
    available in at most one variable.
    """
    from .errors import BadCertificate, NotComaximal

    if cert is None:
        g, r, s = poly_ext_gcd(g2, g3)
        if g != 1:
            raise NotComaximal(f"gcd({g2}, {g3}) = {g} is not a unit")
        return BezoutCert(r, s, (g2, g3))
    if isinstance(cert, BezoutCert):
        if cert.targets != (g2, g3):
            raise BadCertificate("certificate was issued for different targets")
        return cert
    r, s = cert
    return BezoutCert(g2.ring.coerce(r), g2.ring.coerce(s), (g2, g3))
