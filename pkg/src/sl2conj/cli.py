"""Command-line front end.

Every command reads a JSON payload (``--json FILE`` or ``-`` for stdin),
prints a JSON result on stdout and exits with 0 on success, 1 on bad input
or configuration, 2 when a mathematical hypothesis fails and 3 if an
internal check fails.  Successful results carry ``"verified": true`` only
after the answer has been re-checked with plain 2x2 matrix arithmetic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import check
from .automorphisms import (
    LieAut,
    RingIso,
    aut_apply,
    aut_compose,
    decompose_derivation,
    der_apply,
    recognize_automorphism,
    transport_ring_iso,
)
from .conjugacy import (
    bezout_from_conjugation,
    diagonalize_involution,
    ideal_correspondence,
    jacobson_morozov,
    mad_normalize,
    nilpotent_to_standard,
    sl2F_membership,
    standardize_triple,
    triple_from_involution,
)
from .errors import InternalShapeViolation, PayloadError, Sl2Error
from .field import field_from_config
from .harness import KINDS, GenConfig, stream
from .poly import PolyRing, poly_ext_gcd, poly_gcd_many
from .serialize import (
    dec_aut,
    dec_cert,
    dec_der,
    dec_gl2,
    dec_poly,
    dec_sl2,
    dec_sl2_list,
    dec_var_map,
    dumps,
    enc_aut,
    enc_cert,
    enc_der,
    enc_gl2,
    enc_sl2,
    enc_triple,
    _require,
)
from .sl2 import MatSL2, lemma_identities, standard_basis, verify_triple


class Unverified(InternalShapeViolation):
    """A result failed its independent re-check."""


def _confirm(ok: bool, what: str):
    if not ok:
        raise Unverified(f"re-check failed: {what}")


def _log(args, msg: str):
    if args.verbose:
        print(msg, file=sys.stderr)


def _triple_ok(T) -> bool:
    return check.is_triple(check.full(T.X), check.full(T.H), check.full(T.Y))


# -- commands ---------------------------------------------------------------


def cmd_verify_triple(args, ring, payload):
    X, H, Y = (dec_sl2(_require(payload, k), ring) for k in "XHY")
    verify_triple(X, H, Y)
    ids = lemma_identities(X, H, Y)
    _confirm(check.is_triple(check.full(X), check.full(H), check.full(Y)), "bracket relations")
    identity = (ring.one, ring.zero, ring.zero, ring.one)
    _confirm(check.same(check.mul(check.full(H), check.full(H)), identity), "H^2 = I")
    return {"identities": ids}


def cmd_triple_from_involution(args, ring, payload):
    H = dec_sl2(_require(payload, "H"), ring)
    T = triple_from_involution(H)
    _confirm(_triple_ok(T) and T.H == H, "triple relations")
    return enc_triple(T)


def cmd_diagonalize(args, ring, payload):
    H = dec_sl2(_require(payload, "H"), ring)
    P = diagonalize_involution(H)
    _confirm(check.same(check.conj(check.full(P), check.full(H)), check.basis(ring)[1]), "P^-1 H P = diag(1,-1)")
    return {"P": enc_gl2(P)}


def cmd_standardize_triple(args, ring, payload):
    X, H, Y = (dec_sl2(_require(payload, k), ring) for k in "XHY")
    P = standardize_triple(verify_triple(X, H, Y))
    fP = check.full(P)
    for Z, S in zip((X, H, Y), check.basis(ring)):
        _confirm(check.same(check.conj(fP, check.full(Z)), S), "P^-1 (X,H,Y) P = (e,h,f)")
    return {"P": enc_gl2(P)}


def cmd_jm(args, ring, payload):
    X = dec_sl2(_require(payload, "X"), ring)
    T = jacobson_morozov(X, dec_cert(payload.get("cert"), ring))
    _confirm(_triple_ok(T) and T.X == X, "triple relations")
    return enc_triple(T)


def cmd_nilpotent_standardize(args, ring, payload):
    X = dec_sl2(_require(payload, "X"), ring)
    P = nilpotent_to_standard(X, dec_cert(payload.get("cert"), ring))
    _confirm(check.same(check.conj(check.full(P), check.full(X)), check.basis(ring)[0]), "P^-1 X P = e")
    return {"P": enc_gl2(P), "det": str(P.det)}


def cmd_bezout_cert(args, ring, payload):
    P = dec_gl2(_require(payload, "P"), ring)
    cert = bezout_from_conjugation(P)
    fP = check.full(P)
    fX = check.mul(check.mul(fP, check.basis(ring)[0]), check.inv(fP))
    _confirm(cert.r * fX[1] + cert.s * fX[2] == 1, "r X2 + s X3 = 1")
    return {"X": enc_sl2(MatSL2(fX[0], fX[1], fX[2])), "cert": enc_cert(cert)}


def cmd_mad(args, ring, payload):
    H = dec_sl2(_require(payload, "H"), ring)
    lam, P = mad_normalize(H)
    L = ring.const(lam)
    _confirm(check.same(check.conj(check.full(P), check.full(H)), (L, ring.zero, ring.zero, -L)), "P^-1 H' P = diag(l,-l)")
    return {"lambda": ring.field.format(lam), "P": enc_gl2(P)}


def cmd_membership(args, ring, payload):
    Z = dec_sl2(_require(payload, "Z"), ring)
    w = sl2F_membership(Z, dec_cert(payload.get("cert"), ring))
    cx, ch, cy = w.coefficients(Z)
    T = w.triple
    combo = check.add(
        check.add(check.scale(check.full(T.X), cx), check.scale(check.full(T.H), ch)),
        check.scale(check.full(T.Y), cy),
    )
    _confirm(_triple_ok(T) and check.same(combo, check.full(Z)), "Z = xX + hH + yY")
    fmt = ring.field.format
    return {
        "kind": w.kind,
        "triple": enc_triple(T),
        "coefficients": {"X": fmt(cx), "H": fmt(ch), "Y": fmt(cy)},
    }


def cmd_ideal_member(args, ring, payload):
    gens = _require(payload, "gens")
    if not isinstance(gens, list):
        raise PayloadError("gens must be a list of polynomials")
    gens = [dec_poly(g, ring) for g in gens]
    Z = dec_sl2(_require(payload, "Z"), ring)
    member = ideal_correspondence(gens, Z)
    g = poly_gcd_many(gens, ring)
    # certify g as an element of the ideal: g = sum c_i gens_i
    acc, cof = ring.zero, []
    for p in gens:
        acc, r, s = poly_ext_gcd(acc, p)
        cof = [c * r for c in cof] + [s]
    _confirm(sum((c * p for c, p in zip(cof, gens)), ring.zero) == g, "gcd lies in the ideal")
    inside = all(g.divides(x) for x in Z.coords()) if g else Z.is_zero()
    _confirm(inside == member, "entries divisible by the ideal generator")
    return {"member": member, "generator": str(g), "cofactors": [str(c) for c in cof]}


def _apply_full(sigma: LieAut, Z: MatSL2):
    fP = check.full(sigma.P)
    return check.mul(check.mul(fP, check.entrywise(check.full(Z), sigma.rho)), check.inv(fP))


def cmd_aut_apply(args, ring, payload):
    sigma = dec_aut(_require(payload, "aut"), ring)
    Z = dec_sl2(_require(payload, "Z"), ring)
    W = aut_apply(sigma, Z)
    _confirm(check.same(check.full(W), _apply_full(sigma, Z)), "P rho(Z) P^-1")
    return {"result": enc_sl2(W)}


def _probe(ring):
    """``e, h, f`` and ``x_i h``: the data that pins down an automorphism."""
    e, h, f = standard_basis(ring)
    return [e, h, f] + [h.scale(x) for x in ring.gens()]


def cmd_aut_compose(args, ring, payload):
    s1 = dec_aut(_require(payload, "first"), ring)
    s2 = dec_aut(_require(payload, "second"), ring)
    s = aut_compose(s1, s2)
    for Z in _probe(ring):
        inner = check.full(aut_apply(s2, Z))
        fP1 = check.full(s1.P)
        outer = check.mul(check.mul(fP1, check.entrywise(inner, s1.rho)), check.inv(fP1))
        _confirm(check.same(_apply_full(s, Z), outer), "(s1 o s2)(Z) = s1(s2(Z))")
    return {"aut": enc_aut(s)}


def cmd_aut_recognize(args, ring, payload):
    X, H, Y = (dec_sl2(_require(payload, k), ring) for k in "XHY")
    diag = dec_sl2_list(_require(payload, "diag"), ring)
    inv = payload.get("inverse")
    inverse_data = None
    if inv is not None:
        inverse_data = tuple(dec_sl2(_require(inv, k), ring) for k in "XHY") + (
            dec_sl2_list(_require(inv, "diag"), ring),
        )
    sigma = recognize_automorphism(X, H, Y, diag, inverse_data)
    for Z, W in zip(_probe(ring), [X, H, Y] + diag):
        _confirm(check.same(_apply_full(sigma, Z), check.full(W)), "sigma reproduces the data")
    return {"aut": enc_aut(sigma)}


def _der_full(D, Z: MatSL2):
    fM = check.full(Z)
    return check.add(check.commutator(check.full(D.Z), fM), check.entrywise(fM, D.delta))


def cmd_der_apply(args, ring, payload):
    D = dec_der(_require(payload, "der"), ring)
    M = dec_sl2(_require(payload, "M"), ring)
    W = der_apply(D, M)
    _confirm(check.same(check.full(W), _der_full(D, M)), "[Z,M] + delta(M)")
    return {"result": enc_sl2(W)}


def cmd_der_decompose(args, ring, payload):
    De = dec_sl2(_require(payload, "De"), ring)
    Df = dec_sl2(_require(payload, "Df"), ring)
    diag = dec_sl2_list(_require(payload, "diag"), ring)
    D = decompose_derivation(De, Df, diag)
    probe = _probe(ring)
    for Z, W in zip([probe[0], probe[2]] + probe[3:], [De, Df] + diag):
        _confirm(check.same(_der_full(D, Z), check.full(W)), "D reproduces the data")
    return {"der": enc_der(D)}


def cmd_transport(args, ring, payload):
    names = _require(payload, "source_vars")
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise PayloadError("source_vars must be a list of variable names")
    source = PolyRing(ring.field, names)
    images = dec_var_map(_require(payload, "phi"), names, ring)
    inv = payload.get("phi_inv")
    inverse = dec_var_map(inv, ring.variables, source) if inv is not None else None
    if inverse is None and source.variables != ring.variables:
        raise PayloadError("phi_inv is required when source and target variables differ")
    phi = RingIso(source, ring, images, inverse)
    M = dec_sl2(_require(payload, "M"), source)
    W = transport_ring_iso(phi, M)
    back = check.entrywise(check.full(W), phi.inverse())
    _confirm(check.same(back, check.full(M)), "phi^-1(phi(M)) = M")
    return {"result": enc_sl2(W)}


def _enc_instance(kind, obj, ring):
    if kind == "gl2":
        return {"P": enc_gl2(obj), "det": str(obj.det)}
    if kind == "involution":
        H, P = obj
        return {"H": enc_sl2(H), "P": enc_gl2(P)}
    if kind == "nilpotent":
        X, P, c = obj
        return {"X": enc_sl2(X), "P": enc_gl2(P), "cert": enc_cert(c)}
    if kind == "triple":
        T, P = obj
        return dict(enc_triple(T), P=enc_gl2(P))
    if kind == "sl2":
        return {"Z": enc_sl2(obj)}
    if kind == "aut":
        return enc_aut(obj)
    return enc_der(obj)


def _check_instance(kind, obj, ring) -> bool:
    e, h, f = check.basis(ring)
    if kind == "gl2":
        return check.inv(check.full(obj)) is not None
    if kind == "involution":
        H, P = obj
        return check.same(check.conj(check.full(P), h), check.full(H))
    if kind == "nilpotent":
        X, P, c = obj
        fP = check.full(P)
        fX = check.mul(check.mul(fP, e), check.inv(fP))
        return check.same(fX, check.full(X)) and c.r * X.b + c.s * X.c == 1
    if kind == "triple":
        T, P = obj
        fP = check.full(P)
        return all(
            check.same(check.conj(check.inv(fP), B), check.full(Z))
            for B, Z in zip((e, h, f), (T.X, T.H, T.Y))
        )
    if kind == "sl2":
        return not obj.is_zero()
    if kind == "aut":
        rho = obj.rho
        return all(p.substitute(rho.inverse_images, ring) == x for p, x in zip(rho.images, ring.gens()))
    return True


def cmd_gen(args, ring, payload):
    if args.count < 0:
        raise PayloadError("--count must be non-negative")
    try:
        cfg = GenConfig(
            seed=args.seed,
            nvars=ring.nvars,
            max_degree=args.max_degree,
            max_terms=args.max_terms,
            coeff_bound=args.coeff_bound,
            word_length=args.word_length,
            field=ring.field.config,
        variables=ring.variables,
        )
    except ValueError as exc:
        raise PayloadError(str(exc)) from None
    items = stream(cfg, args.kind, args.count)
    for obj in items:
        _confirm(_check_instance(args.kind, obj, ring), f"{args.kind} certificate")
    return {
        "config": cfg.as_dict(),
        "kind": args.kind,
        "instances": [_enc_instance(args.kind, obj, ring) for obj in items],
    }


COMMANDS = {
    "verify-triple": cmd_verify_triple,
    "triple-from-involution": cmd_triple_from_involution,
    "diagonalize": cmd_diagonalize,
    "standardize-triple": cmd_standardize_triple,
    "jm": cmd_jm,
    "nilpotent-standardize": cmd_nilpotent_standardize,
    "bezout-cert": cmd_bezout_cert,
    "mad": cmd_mad,
    "membership": cmd_membership,
    "ideal-member": cmd_ideal_member,
    "aut-apply": cmd_aut_apply,
    "aut-compose": cmd_aut_compose,
    "aut-recognize": cmd_aut_recognize,
    "der-apply": cmd_der_apply,
    "der-decompose": cmd_der_decompose,
    "transport": cmd_transport,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="'q' or 'fp:<p>' with p an odd prime")
    common.add_argument("--vars", default="t", help="comma-separated variable names")
    common.add_argument("--json", default="-", metavar="FILE", help="payload file, '-' for stdin")
    common.add_argument("-v", "--verbose", action="store_true", help="transcript on stderr")

    parser = argparse.ArgumentParser(
        prog="sl2conj", description="Exact conjugacy computations in sl2 over F[x1..xn]."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "gen":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--kind", choices=KINDS, default="involution")
            p.add_argument("--count", type=int, default=5)
            p.add_argument("--max-degree", type=int, default=2)
            p.add_argument("--max-terms", type=int, default=3)
            p.add_argument("--coeff-bound", type=int, default=3)
            p.add_argument("--word-length", type=int, default=4)
    return parser


def _read_payload(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise PayloadError(f"cannot read {path}: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise PayloadError("payload must be a JSON object")
    return payload


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv``, execute, and return ``(exit_code, response)``."""
    args = build_parser().parse_args(argv)
    try:
        field = field_from_config(args.field)
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
        ring = PolyRing(field, names)
        payload = {} if args.command == "gen" else _read_payload(args.json)
        _log(args, f"{args.command} over {field.config}[{', '.join(names)}]")
        out = COMMANDS[args.command](args, ring, payload)
        out["verified"] = True
        _log(args, "result re-checked with direct 2x2 arithmetic")
        return 0, out
    except Sl2Error as exc:
        _log(args, f"{exc.code}: {exc}")
        return exc.exit_code, {"error": exc.code, "detail": str(exc)}
    except Exception as exc:  # a bug, not bad input
        _log(args, f"internal error: {exc!r}")
        return 3, {"error": "InternalError", "detail": f"{type(exc).__name__}: {exc}"}


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
