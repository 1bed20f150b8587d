"""JSON forms for fields, polynomials, key material, and statistics.

Output is canonical: keys sorted, one trailing newline, so equal objects
always serialize to identical bytes.  Field elements are digit arrays in
the field's little-endian digit convention.  Twisted polynomials carry
their twist step under the key "s".  Parsing is strict: missing or
unknown keys, wrong JSON types, and out-of-range digits all raise
ParseError; semantic problems (a reducible modulus, a non-prime p) are
left to the constructors and surface as domain errors instead.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .decompose import Decomposition, SplitStats
from .errors import ParseError
from .fields import FiniteField, FqElem
from .hfe import (
    DOPoly,
    HFEKeyPair,
    HFEPublicKey,
    HFESecretKey,
    MultivariateKey,
)
from .linpoly import LinPoly
from .skew import SkewPoly


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def parse_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


# ----------------------------------------------------------------------
# schema helpers


def _need_dict(obj: Any, what: str, required: set, optional: set = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    keys = set(obj)
    missing = required - keys
    if missing:
        raise ParseError(f"{what} is missing key(s): {', '.join(sorted(missing))}")
    extra = keys - required - optional
    if extra:
        raise ParseError(f"{what} has unknown key(s): {', '.join(sorted(extra))}")
    return obj


def _need_int(obj: Any, what: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise ParseError(f"{what} must be an integer")
    return obj


def _need_list(obj: Any, what: str) -> list:
    if not isinstance(obj, list):
        raise ParseError(f"{what} must be an array")
    return obj


# ----------------------------------------------------------------------
# fields and elements


def field_to_obj(field: FiniteField) -> dict:
    out: dict[str, Any] = {
        "p": field.p,
        "e": field.e,
        "modulus": list(field.modulus),
    }
    if not field._default_basis:
        out["basis"] = [list(b.digits) for b in field.basis]
    return out


def field_from_obj(obj: Any) -> FiniteField:
    obj = _need_dict(obj, "field", {"p", "e", "modulus"}, {"basis"})
    p = _need_int(obj["p"], "field.p")
    e = _need_int(obj["e"], "field.e")
    modulus = [_need_int(c, "field.modulus entry") for c in _need_list(obj["modulus"], "field.modulus")]
    basis = None
    if "basis" in obj:
        basis = [
            [_need_int(d, "field.basis digit") for d in _need_list(row, "field.basis row")]
            for row in _need_list(obj["basis"], "field.basis")
        ]
    return FiniteField(p, e, modulus, basis)


def element_to_obj(x: FqElem) -> list[int]:
    return list(x.digits)


def element_from_obj(field: FiniteField, obj: Any) -> FqElem:
    digits = [_need_int(d, "element digit") for d in _need_list(obj, "element")]
    if len(digits) != field.e:
        raise ParseError(f"element needs {field.e} digits, got {len(digits)}")
    if any(not (0 <= d < field.p) for d in digits):
        raise ParseError(f"element digits must lie in [0, {field.p})")
    return field.element(tuple(digits))


# ----------------------------------------------------------------------
# twisted polynomials


def linpoly_to_obj(L: LinPoly) -> dict:
    return {"s": L.twist, "coeffs": [list(c.digits) for c in L.coeffs]}


def _twisted_from_obj(field: FiniteField, obj: Any, what: str):
    obj = _need_dict(obj, what, {"s", "coeffs"})
    twist = _need_int(obj["s"], f"{what}.s")
    if twist < 1:
        raise ParseError(f"{what}.s must be at least 1")
    coeffs = [
        element_from_obj(field, c) for c in _need_list(obj["coeffs"], f"{what}.coeffs")
    ]
    return twist, coeffs


def linpoly_from_obj(field: FiniteField, obj: Any) -> LinPoly:
    twist, coeffs = _twisted_from_obj(field, obj, "additive polynomial")
    return LinPoly(field, coeffs, twist)


def skewpoly_to_obj(f: SkewPoly) -> dict:
    return {"s": f.twist, "coeffs": [list(c.digits) for c in f.coeffs]}


def skewpoly_from_obj(field: FiniteField, obj: Any) -> SkewPoly:
    twist, coeffs = _twisted_from_obj(field, obj, "skew polynomial")
    return SkewPoly(field, coeffs, twist)


# ----------------------------------------------------------------------
# DO polynomials


def dopoly_to_obj(D: DOPoly) -> dict:
    return {
        "quad": [[i, j, list(c.digits)] for (i, j), c in sorted(D.quad.items())],
        "lin": None if D.lin.is_zero else linpoly_to_obj(D.lin),
        "const": list(D.const.digits),
    }


def dopoly_from_obj(field: FiniteField, obj: Any) -> DOPoly:
    obj = _need_dict(obj, "DO polynomial", {"quad", "lin", "const"})
    quad: dict[tuple[int, int], FqElem] = {}
    for entry in _need_list(obj["quad"], "quad terms"):
        entry = _need_list(entry, "quad term")
        if len(entry) != 3:
            raise ParseError("quad term must be [i, j, digits]")
        i = _need_int(entry[0], "quad index")
        j = _need_int(entry[1], "quad index")
        if i < 0 or j < 0:
            raise ParseError("quad indices must be nonnegative")
        c = element_from_obj(field, entry[2])
        key = (i, j) if i <= j else (j, i)
        if key in quad:
            raise ParseError(f"duplicate quad term for indices {key}")
        quad[key] = c
    lin = LinPoly.zero(field) if obj["lin"] is None else linpoly_from_obj(field, obj["lin"])
    if lin.twist != 1:
        raise ParseError("DO polynomial additive part must have s = 1")
    const = element_from_obj(field, obj["const"])
    return DOPoly(field, quad, lin, const)


# ----------------------------------------------------------------------
# multivariate key


def multivariate_to_obj(M: MultivariateKey) -> dict:
    return {
        "p": M.p,
        "n_vars": M.n_vars,
        "quad": [
            [[s, t, c] for (s, t), c in sorted(M.quad[k].items())] for k in range(M.n_vars)
        ],
        "lin": [[[s, c] for s, c in sorted(M.lin[k].items())] for k in range(M.n_vars)],
        "const": list(M.const),
    }


def multivariate_from_obj(obj: Any) -> MultivariateKey:
    obj = _need_dict(obj, "multivariate key", {"p", "n_vars", "quad", "lin", "const"})
    p = _need_int(obj["p"], "multivariate.p")
    n = _need_int(obj["n_vars"], "multivariate.n_vars")
    quads = _need_list(obj["quad"], "multivariate.quad")
    lins = _need_list(obj["lin"], "multivariate.lin")
    consts = _need_list(obj["const"], "multivariate.const")
    if len(quads) != n or len(lins) != n or len(consts) != n:
        raise ParseError("multivariate arrays must have n_vars entries")
    quad_out = []
    for row in quads:
        d: dict[tuple[int, int], int] = {}
        for entry in _need_list(row, "multivariate quad row"):
            entry = _need_list(entry, "multivariate quad term")
            if len(entry) != 3:
                raise ParseError("multivariate quad term must be [s, t, c]")
            s, t, c = (_need_int(v, "multivariate quad term entry") for v in entry)
            d[(s, t)] = c % p
        quad_out.append(d)
    lin_out = []
    for row in lins:
        d2: dict[int, int] = {}
        for entry in _need_list(row, "multivariate lin row"):
            entry = _need_list(entry, "multivariate lin term")
            if len(entry) != 2:
                raise ParseError("multivariate lin term must be [s, c]")
            s, c = (_need_int(v, "multivariate lin term entry") for v in entry)
            d2[s] = c % p
        lin_out.append(d2)
    const_out = tuple(_need_int(c, "multivariate const entry") % p for c in consts)
    return MultivariateKey(
        p=p, n_vars=n, quad=tuple(quad_out), lin=tuple(lin_out), const=const_out
    )


# ----------------------------------------------------------------------
# key material


def public_to_obj(pub: HFEPublicKey) -> dict:
    return {
        "field": field_to_obj(pub.field),
        "E": dopoly_to_obj(pub.poly),
        "multivariate": multivariate_to_obj(pub.multivariate),
    }


def public_from_obj(obj: Any) -> HFEPublicKey:
    obj = _need_dict(obj, "public key", {"field", "E", "multivariate"})
    field = field_from_obj(obj["field"])
    poly = dopoly_from_obj(field, obj["E"])
    mv = multivariate_from_obj(obj["multivariate"])
    if mv.p != field.p or mv.n_vars != field.e:
        raise ParseError("multivariate key does not match the field shape")
    return HFEPublicKey(field, poly, mv)


def secret_to_obj(sec: HFESecretKey) -> dict:
    return {
        "S": linpoly_to_obj(sec.outer),
        "D": dopoly_to_obj(sec.core),
        "T": linpoly_to_obj(sec.inner),
        "d": sec.bound,
    }


def secret_from_obj(field: FiniteField, obj: Any) -> HFESecretKey:
    obj = _need_dict(obj, "secret key", {"S", "D", "T", "d"})
    outer = linpoly_from_obj(field, obj["S"])
    core = dopoly_from_obj(field, obj["D"])
    inner = linpoly_from_obj(field, obj["T"])
    bound = _need_int(obj["d"], "secret.d")
    return HFESecretKey(field, outer, core, inner, bound)


def keypair_to_obj(kp: HFEKeyPair) -> dict:
    return {
        "public": public_to_obj(kp.public),
        "secret": secret_to_obj(kp.secret),
    }


def keypair_from_obj(obj: Any) -> HFEKeyPair:
    obj = _need_dict(obj, "key pair", {"public", "secret"})
    public = public_from_obj(obj["public"])
    secret = secret_from_obj(public.field, obj["secret"])
    return HFEKeyPair(public, secret)


# ----------------------------------------------------------------------
# results


def stats_to_obj(st: SplitStats) -> dict:
    return {
        "trials": st.trials,
        "first_try_successes": st.first_try_successes,
        "mean_tries": st.mean_tries,
        "ci95": [st.ci95[0], st.ci95[1]],
        "seed": st.seed,
    }


def decomposition_to_obj(dec: Decomposition) -> dict:
    return {
        "unit": list(dec.unit.digits),
        "factors": [skewpoly_to_obj(g) for g in dec.factors],
        "certified": dec.certified,
    }
