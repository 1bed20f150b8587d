"""Dembowski-Ostrom polynomials, a desk-scale HFE scheme, and its attack.

A DO polynomial is sum c_ij X^(p^i + p^j) plus an additive part plus a
constant.  Terms are stored structurally: a dict over index pairs
(i, j) with i <= j, a twist-1 LinPoly, and a constant.  In
characteristic 2 a diagonal pair is linear (X^(2^i + 2^i) = X^(2^(i+1)))
and is migrated into the additive part on construction, so stored quad
entries are genuinely quadratic.  reduce() folds indices through
x^(p^e) = x; a reduced polynomial has ordinary degree below q, so two
reduced polynomials are equal exactly when they agree as functions.

The difference operator t -> t(X + a) - t(X) - t(a) sends a constant-free
DO polynomial to an additive polynomial in X, computed symbolically here
and cross-checkable against the dense route in fqpoly.  A constant term
c would contribute -c, which no additive polynomial matches, so
difference_poly insists on a zero constant.  check_do_shape goes the
other way: it parses exponents of a dense polynomial of degree below q,
and when parsing fails it exhibits a concrete additivity failure of
x -> f(x+a) - f(x) - f(a) + f(0) for some shift a.

The HFE scheme publishes E = S . D . T for secret additive permutations
S, T and a secret constant-free DO core D of ordinary degree at most a
bound d.  Decryption inverts S and T and walks preimages of D by table
lookup, so field size is capped by a policy bound.  The attack takes
greatest common left divisor factors of difference polynomials of E
(they share the left factor S), and tries to peel a candidate left
factor off E leaving a low-degree core; on success the recovered pair
decrypts without the secret key.  Reduction modulo x^q - x does not
always respect exact left divisibility, so honest instances may resist;
failures are reported, never hidden.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import _linalg
from .errors import (
    AttackFailedError,
    ContextMismatchError,
    DegreeBoundTooSmallError,
    DegreeTooLargeError,
    PolicyBoundError,
    ShapeViolationError,
    TwistMismatchError,
)
from .fields import FiniteField, FqElem
from .fqpoly import FqPoly
from .linpoly import NEG_INF, LinPoly
from .skew import gcldf

POLICY_MAX_Q = 1 << 16


class DOPoly:
    """Structured DO + additive + constant polynomial."""

    __slots__ = ("field", "quad", "lin", "const")

    def __init__(
        self,
        field: FiniteField,
        quad: Mapping[tuple[int, int], FqElem],
        lin: Optional[LinPoly] = None,
        const: Optional[FqElem] = None,
    ):
        if lin is None:
            lin = LinPoly.zero(field)
        if const is None:
            const = field.zero()
        if lin.field != field:
            raise ContextMismatchError("additive part belongs to a different field")
        if lin.twist != 1:
            raise TwistMismatchError("additive part of a DO polynomial must have twist 1")
        if not isinstance(const, FqElem) or const.field != field:
            raise ContextMismatchError("constant term belongs to a different field")
        zero = field.zero()
        qd: dict[tuple[int, int], FqElem] = {}
        migrated: dict[int, FqElem] = {}
        for (i, j), c in quad.items():
            if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
                raise ValueError(f"quad indices must be ints >= 0, got {(i, j)!r}")
            if not isinstance(c, FqElem) or c.field != field:
                raise ContextMismatchError("quad coefficient belongs to a different field")
            if not c:
                continue
            if i > j:
                i, j = j, i
            if i == j and field.p == 2:
                migrated[i + 1] = migrated.get(i + 1, zero) + c
            else:
                qd[(i, j)] = qd.get((i, j), zero) + c
        qd = {k: v for k, v in qd.items() if v}
        if any(migrated.values()):
            coeffs = list(lin.coeffs)
            top = max(migrated)
            if len(coeffs) <= top:
                coeffs += [zero] * (top + 1 - len(coeffs))
            for k, v in migrated.items():
                coeffs[k] = coeffs[k] + v
            lin = LinPoly(field, coeffs, 1)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "quad", qd)
        object.__setattr__(self, "lin", lin)
        object.__setattr__(self, "const", const)

    def __setattr__(self, name, value):
        raise AttributeError("DOPoly is immutable")

    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FiniteField) -> "DOPoly":
        return cls(field, {})

    @property
    def is_zero(self) -> bool:
        return not self.quad and self.lin.is_zero and not self.const

    @property
    def has_quadratic(self) -> bool:
        return bool(self.quad)

    @property
    def degree(self):
        p = self.field.p
        best = NEG_INF
        for i, j in self.quad:
            best = max(best, p**i + p**j)
        best = max(best, self.lin.degree)
        if self.const:
            best = max(best, 0)
        return best

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DOPoly)
            and self.field == other.field
            and self.quad == other.quad
            and self.lin == other.lin
            and self.const == other.const
        )

    def __repr__(self) -> str:
        qd = {k: list(v.digits) for k, v in sorted(self.quad.items())}
        return f"DOPoly(quad={qd}, lin={self.lin!r}, const={list(self.const.digits)})"

    def __add__(self, other: "DOPoly") -> "DOPoly":
        if not isinstance(other, DOPoly):
            raise TypeError(f"expected DOPoly, got {type(other).__name__}")
        if self.field != other.field:
            raise ContextMismatchError("polynomials over different fields")
        qd = dict(self.quad)
        zero = self.field.zero()
        for k, v in other.quad.items():
            qd[k] = qd.get(k, zero) + v
        return DOPoly(self.field, qd, self.lin + other.lin, self.const + other.const)

    def __neg__(self) -> "DOPoly":
        return DOPoly(
            self.field,
            {k: -v for k, v in self.quad.items()},
            -self.lin,
            -self.const,
        )

    def __sub__(self, other: "DOPoly") -> "DOPoly":
        return self + (-other)

    def __call__(self, x: FqElem) -> FqElem:
        if x.field != self.field:
            raise ContextMismatchError("evaluation point from a different field")
        acc = self.const + self.lin(x)
        for (i, j), c in self.quad.items():
            acc = acc + c * x.frobenius(i) * x.frobenius(j)
        return acc

    def reduce(self) -> "DOPoly":
        """Fold indices through x^(p^e) = x; result has degree below q."""
        field, e, p = self.field, self.field.e, self.field.p
        zero = field.zero()
        lin_arr = [zero] * e
        for i, c in enumerate(self.lin.reduce().coeffs):
            lin_arr[i] = c
        qd: dict[tuple[int, int], FqElem] = {}
        for (i, j), c in self.quad.items():
            ii, jj = i % e, j % e
            if ii > jj:
                ii, jj = jj, ii
            if ii == jj and p == 2:
                k = (ii + 1) % e
                lin_arr[k] = lin_arr[k] + c
            else:
                qd[(ii, jj)] = qd.get((ii, jj), zero) + c
        return DOPoly(field, qd, LinPoly(field, lin_arr, 1), self.const)

    def to_fqpoly(self) -> FqPoly:
        """Dense form; distinct structural slots land on distinct exponents."""
        p = self.field.p
        terms: dict[int, FqElem] = {}
        zero = self.field.zero()
        for (i, j), c in self.quad.items():
            exp = p**i + p**j
            terms[exp] = terms.get(exp, zero) + c
        for k, b in enumerate(self.lin.coeffs):
            if b:
                exp = p**k
                terms[exp] = terms.get(exp, zero) + b
        if self.const:
            terms[0] = terms.get(0, zero) + self.const
        return FqPoly.from_monomials(self.field, terms)


def lin_to_dense(L: LinPoly) -> FqPoly:
    p = L.field.p
    return FqPoly.from_monomials(
        L.field, {p ** (L.twist * i): c for i, c in enumerate(L.coeffs) if c}
    )


# ----------------------------------------------------------------------
# difference operator


def difference_poly(t: DOPoly, a: FqElem) -> LinPoly:
    """Symbolic t(X + a) - t(X) - t(a) as a twist-1 additive polynomial.

    The additive part of t drops out exactly and each quadratic term
    polarises into two additive terms.  A nonzero constant would leave
    the non-additive remainder -const, so it is rejected.
    """
    if a.field != t.field:
        raise ContextMismatchError("shift from a different field")
    if t.const:
        raise ShapeViolationError(
            "difference of a polynomial with a nonzero constant term is not additive"
        )
    field = t.field
    zero = field.zero()
    size = max((j + 1 for (_, j) in t.quad), default=0)
    out = [zero] * size
    two = field.scalar(2 % field.p)
    for (i, j), c in t.quad.items():
        if i == j:
            out[i] = out[i] + two * c * a.frobenius(i)
        else:
            out[i] = out[i] + c * a.frobenius(j)
            out[j] = out[j] + c * a.frobenius(i)
    return LinPoly(field, out, 1)


def dense_difference(f: FqPoly, a: FqElem) -> FqPoly:
    """f(X + a) - f(X) - f(a) on dense polynomials, the brute-force route."""
    return f.shift(a) - f - FqPoly.constant(f(a))


# ----------------------------------------------------------------------
# shape recognition


@dataclass(frozen=True)
class FailedLinearity:
    """Concrete additivity failure: g(x + y) != g(x) + g(y) for the shift a."""

    a: FqElem
    x: FqElem
    y: FqElem


@dataclass(frozen=True, eq=False)
class DOShapeResult:
    ok: bool
    value: Optional[DOPoly]
    offender: Optional[int]
    witness: Optional[FailedLinearity]


def _parse_exponent(exp: int, p: int) -> Optional[tuple[str, tuple[int, ...]]]:
    """Classify exp as p^i ('lin') or p^i + p^j ('quad'), else None."""
    digits: list[tuple[int, int]] = []
    pos = 0
    n = exp
    while n:
        d = n % p
        if d:
            digits.append((pos, d))
        n //= p
        pos += 1
    if len(digits) == 1:
        i, d = digits[0]
        if d == 1:
            return ("lin", (i,))
        if d == 2 and p > 2:
            return ("quad", (i, i))
        return None
    if len(digits) == 2 and digits[0][1] == 1 and digits[1][1] == 1:
        return ("quad", (digits[0][0], digits[1][0]))
    return None


def check_do_shape(f: FqPoly) -> DOShapeResult:
    """Decide whether f is DO + additive + constant, with evidence either way.

    Requires deg f < q.  On success the parsed structure is returned; on
    failure the smallest offending exponent is reported together with a
    pointwise witness (a, x, y) against additivity of the centred
    difference g(x) = f(x+a) - f(x) - f(a) + f(0), which the shape
    characterisation guarantees to exist below degree q.
    """
    field = f.field
    q, p = field.q, field.p
    if f.degree != NEG_INF and f.degree >= q:
        raise DegreeTooLargeError(f"shape check needs degree < {q}, got {f.degree}")
    zero = field.zero()
    quad: dict[tuple[int, int], FqElem] = {}
    lin_terms: dict[int, FqElem] = {}
    const = zero
    offender: Optional[int] = None
    for exp in sorted(f.monomials()):
        c = f.coeffs[exp]
        if exp == 0:
            const = c
            continue
        parsed = _parse_exponent(exp, p)
        if parsed is None:
            offender = exp
            break
        kind, idx = parsed
        if kind == "lin":
            lin_terms[idx[0]] = c
        else:
            quad[(idx[0], idx[1])] = c
    if offender is None:
        top = max(lin_terms, default=-1)
        coeffs = [lin_terms.get(k, zero) for k in range(top + 1)]
        value = DOPoly(field, quad, LinPoly(field, coeffs, 1), const)
        return DOShapeResult(ok=True, value=value, offender=None, witness=None)
    f0 = f(zero)
    for a in field.elements():
        if not a:
            continue
        g = f.shift(a) - f - FqPoly.constant(f(a)) + FqPoly.constant(f0)
        values = {x.digits: g(x) for x in field.elements()}
        for x in field.elements():
            for y in field.elements():
                if values[(x + y).digits] != values[x.digits] + values[y.digits]:
                    return DOShapeResult(
                        ok=False,
                        value=None,
                        offender=offender,
                        witness=FailedLinearity(a=a, x=x, y=y),
                    )
    raise AssertionError("structural offender without a pointwise witness")


# ----------------------------------------------------------------------
# composition with additive polynomials


def do_compose_lin(L: LinPoly, D: DOPoly, side: str, reduce: bool = False) -> DOPoly:
    """Compose an additive polynomial with a DO polynomial, symbolically.

    side='left' gives L(D(X)); side='right' gives D(L(X)).  Both stay in
    DO + additive + constant shape.
    """
    if L.field != D.field:
        raise ContextMismatchError("operands over different fields")
    if L.twist != 1:
        raise TwistMismatchError("composition requires a twist-1 additive polynomial")
    field = D.field
    zero = field.zero()
    qd: dict[tuple[int, int], FqElem] = {}
    if side == "left":
        for (i, j), c in D.quad.items():
            for k, b in enumerate(L.coeffs):
                if b:
                    key = (i + k, j + k)
                    qd[key] = qd.get(key, zero) + b * c.frobenius(k)
        lin = L.compose(D.lin)
        const = L(D.const)
    elif side == "right":
        for (i, j), c in D.quad.items():
            for k, bk in enumerate(L.coeffs):
                if not bk:
                    continue
                for m, bm in enumerate(L.coeffs):
                    if not bm:
                        continue
                    key = (k + i, m + j) if k + i <= m + j else (m + j, k + i)
                    qd[key] = qd.get(key, zero) + c * bk.frobenius(i) * bm.frobenius(j)
        lin = D.lin.compose(L)
        const = D.const
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    out = DOPoly(field, qd, lin, const)
    return out.reduce() if reduce else out


# ----------------------------------------------------------------------
# multivariate view


class MultivariateKey:
    """Per-coordinate quadratic forms over Z_p in the basis coordinates.

    Writing X = sum x_s basis_s, coordinate k of E(X) is
    const[k] + sum lin[k][s] x_s + sum quad[k][(s,t)] x_s x_t mod p.
    For p = 2 squares are reduced via x^2 = x, so diagonal pairs vanish.
    """

    __slots__ = ("p", "n_vars", "quad", "lin", "const")

    def __init__(
        self,
        p: int,
        n_vars: int,
        quad: tuple[dict[tuple[int, int], int], ...],
        lin: tuple[dict[int, int], ...],
        const: tuple[int, ...],
    ):
        self.p = p
        self.n_vars = n_vars
        self.quad = quad
        self.lin = lin
        self.const = const

    def term_count(self, k: int) -> int:
        return len(self.quad[k]) + len(self.lin[k]) + (1 if self.const[k] else 0)

    @property
    def max_terms(self) -> int:
        return max(self.term_count(k) for k in range(self.n_vars))

    def evaluate(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} coordinates, got {len(coords)}")
        p = self.p
        xs = [c % p for c in coords]
        out = []
        for k in range(self.n_vars):
            v = self.const[k]
            for s, c in self.lin[k].items():
                v += c * xs[s]
            for (s, t), c in self.quad[k].items():
                v += c * xs[s] * xs[t]
            out.append(v % p)
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultivariateKey)
            and self.p == other.p
            and self.n_vars == other.n_vars
            and self.quad == other.quad
            and self.lin == other.lin
            and self.const == other.const
        )

    def __repr__(self) -> str:
        return f"MultivariateKey(p={self.p}, n_vars={self.n_vars}, max_terms={self.max_terms})"


def to_multivariate(E: DOPoly) -> MultivariateKey:
    """Expand a (reduced) DO polynomial into coordinate quadratic forms."""
    E = E.reduce()
    field = E.field
    e, p = field.e, field.p
    zero = field.zero()
    frob = [[field.basis[s].frobenius(u) for s in range(e)] for u in range(e)]
    qcoef: dict[tuple[int, int], FqElem] = {}
    for (i, j), c in E.quad.items():
        for s in range(e):
            ci = c * frob[i][s]
            for t in range(e):
                key = (s, t) if s <= t else (t, s)
                qcoef[key] = qcoef.get(key, zero) + ci * frob[j][t]
    lincoef = [E.lin(field.basis[s]) for s in range(e)]
    quad_out: list[dict[tuple[int, int], int]] = [dict() for _ in range(e)]
    lin_out: list[dict[int, int]] = [dict() for _ in range(e)]
    for (s, t), v in qcoef.items():
        coords = field.coordinates(v)
        for k in range(e):
            d = coords[k]
            if not d:
                continue
            if s == t and p == 2:
                lin_out[k][s] = (lin_out[k].get(s, 0) + d) % p
            else:
                quad_out[k][(s, t)] = d
    for s, v in enumerate(lincoef):
        coords = field.coordinates(v)
        for k in range(e):
            if coords[k]:
                lin_out[k][s] = (lin_out[k].get(s, 0) + coords[k]) % p
    const_out = field.coordinates(E.const)
    lin_out = [{s: c for s, c in d.items() if c} for d in lin_out]
    return MultivariateKey(
        p=p,
        n_vars=e,
        quad=tuple(quad_out),
        lin=tuple(lin_out),
        const=tuple(const_out),
    )


# ----------------------------------------------------------------------
# HFE keys


class HFEPublicKey:
    __slots__ = ("field", "poly", "multivariate")

    def __init__(self, field: FiniteField, poly: DOPoly, multivariate: MultivariateKey):
        self.field = field
        self.poly = poly
        self.multivariate = multivariate

    def __repr__(self) -> str:
        return f"HFEPublicKey(field={self.field!r}, terms={self.multivariate.max_terms})"


class HFESecretKey:
    """outer . core . inner with additive permutations around a DO core."""

    def __init__(
        self, field: FiniteField, outer: LinPoly, core: DOPoly, inner: LinPoly, bound: int
    ):
        self.field = field
        self.outer = outer
        self.core = core
        self.inner = inner
        self.bound = bound
        self._outer_inv: Optional[LinPoly] = None
        self._inner_inv: Optional[LinPoly] = None
        self._table: Optional[dict[tuple[int, ...], list[FqElem]]] = None

    def outer_inverse(self) -> LinPoly:
        if self._outer_inv is None:
            self._outer_inv = self.outer.inverse()
        return self._outer_inv

    def inner_inverse(self) -> LinPoly:
        if self._inner_inv is None:
            self._inner_inv = self.inner.inverse()
        return self._inner_inv

    def core_table(self) -> dict[tuple[int, ...], list[FqElem]]:
        if self._table is None:
            table: dict[tuple[int, ...], list[FqElem]] = {}
            for x in self.field.elements():
                table.setdefault(self.core(x).digits, []).append(x)
            self._table = table
        return self._table

    def __repr__(self) -> str:
        return f"HFESecretKey(field={self.field!r}, bound={self.bound})"


class HFEKeyPair:
    __slots__ = ("public", "secret")

    def __init__(self, public: HFEPublicKey, secret: HFESecretKey):
        self.public = public
        self.secret = secret


def _random_permutation_poly(field: FiniteField, rng: random.Random) -> LinPoly:
    while True:
        L = LinPoly(field, [field.random_element(rng) for _ in range(field.e)], 1)
        if not L.is_zero and L.is_permutation():
            return L


def hfe_keygen(
    field: FiniteField, rng: random.Random, degree_bound: Optional[int] = None
) -> HFEKeyPair:
    """Sample a key pair: E = outer . core . inner, reduced, constant-free.

    The core is a uniformly random constant-free DO polynomial supported
    on exponents at most degree_bound (default p^4), resampled until a
    genuinely quadratic term is present.
    """
    p, e = field.p, field.e
    d = p**4 if degree_bound is None else degree_bound
    if d < p * p:
        raise DegreeBoundTooSmallError(f"degree bound {d} is below p^2 = {p * p}")
    pairs = [
        (i, j)
        for i in range(e)
        for j in range(i, e)
        if p**i + p**j <= d and not (p == 2 and i == j)
    ]
    lin_idx = [k for k in range(e) if p**k <= d]
    if not pairs:
        raise DegreeBoundTooSmallError(
            f"degree bound {d} admits no quadratic exponent for this field"
        )
    zero = field.zero()
    for _ in range(1000):
        quad = {pr: field.random_element(rng) for pr in pairs}
        coeffs = [zero] * e
        for k in lin_idx:
            coeffs[k] = field.random_element(rng)
        core = DOPoly(field, quad, LinPoly(field, coeffs, 1), zero)
        if core.has_quadratic:
            break
    else:
        raise AssertionError("failed to sample a quadratic core")
    outer = _random_permutation_poly(field, rng)
    inner = _random_permutation_poly(field, rng)
    E = do_compose_lin(outer, do_compose_lin(inner, core, "right"), "left").reduce()
    assert E.has_quadratic and not E.const
    public = HFEPublicKey(field, E, to_multivariate(E))
    secret = HFESecretKey(field, outer, core, inner, d)
    return HFEKeyPair(public, secret)


def hfe_encrypt(public: HFEPublicKey, m: FqElem) -> FqElem:
    if m.field != public.field:
        raise ContextMismatchError("plaintext from a different field")
    return public.poly(m)


def hfe_decrypt(
    secret: HFESecretKey, y: FqElem, max_q: Optional[int] = None
) -> list[FqElem]:
    """All plaintexts mapping to y, sorted by element index."""
    cap = POLICY_MAX_Q if max_q is None else max_q
    if secret.field.q > cap:
        raise PolicyBoundError(f"field size {secret.field.q} exceeds decrypt cap {cap}")
    if y.field != secret.field:
        raise ContextMismatchError("ciphertext from a different field")
    z = secret.outer_inverse()(y)
    inner_inv = secret.inner_inverse()
    ms = [inner_inv(u) for u in secret.core_table().get(z.digits, [])]
    return sorted(ms, key=lambda m: m.as_int())


def core_preimages(
    D: DOPoly, z: FqElem, max_q: Optional[int] = None
) -> list[FqElem]:
    """Exhaustive preimages of z under D, in element-index order."""
    cap = POLICY_MAX_Q if max_q is None else max_q
    if D.field.q > cap:
        raise PolicyBoundError(f"field size {D.field.q} exceeds preimage cap {cap}")
    if z.field != D.field:
        raise ContextMismatchError("target from a different field")
    return [x for x in D.field.elements() if D(x) == z]


# ----------------------------------------------------------------------
# key recovery


def _do_slots(field: FiniteField, bound: int) -> list[tuple[str, tuple[int, ...]]]:
    """Reduced-form slots whose exponent does not exceed bound."""
    p, e = field.p, field.e
    slots: list[tuple[str, tuple[int, ...]]] = []
    for i in range(e):
        for j in range(i, e):
            if p == 2 and i == j:
                continue
            if p**i + p**j <= bound:
                slots.append(("quad", (i, j)))
    for k in range(e):
        if p**k <= bound:
            slots.append(("lin", (k,)))
    slots.append(("const", ()))
    return slots


def _do_flatten(D: DOPoly) -> list[int]:
    """Digit vector of a reduced DO polynomial over the full slot space."""
    field = D.field
    zero = field.zero()
    out: list[int] = []
    for kind, idx in _do_slots(field, 2 * field.q):
        if kind == "quad":
            c = D.quad.get((idx[0], idx[1]), zero)
        elif kind == "lin":
            k = idx[0]
            c = D.lin.coeffs[k] if k < len(D.lin.coeffs) else zero
        else:
            c = D.const
        out.extend(c.digits)
    return out


def _do_from_slot_digit(
    field: FiniteField, kind: str, idx: tuple[int, ...], digit: int
) -> DOPoly:
    digits = [0] * field.e
    digits[digit] = 1
    c = field.element(tuple(digits))
    if kind == "quad":
        return DOPoly(field, {(idx[0], idx[1]): c})
    if kind == "lin":
        return DOPoly(field, {}, LinPoly.monomial(field, idx[0], c, 1))
    return DOPoly(field, {}, None, c)


def try_left_factor(L: LinPoly, E: DOPoly, bound: int) -> Optional[DOPoly]:
    """Search for a DO polynomial f with L . f = E (reduced) and deg f <= bound.

    A permutation candidate is peeled off directly; otherwise the
    coefficients of f are solved for as a Z_p-linear system over the
    slots allowed by the bound.  Returns the reduced f, or None.
    """
    if L.field != E.field:
        raise ContextMismatchError("operands over different fields")
    E = E.reduce()
    Lr = L.reduce()
    if Lr.is_zero:
        return None
    if Lr.is_permutation():
        f = do_compose_lin(Lr.inverse(), E, "left").reduce()
        if f.degree != NEG_INF and f.degree > bound:
            return None
    else:
        field, p, e = E.field, E.field.p, E.field.e
        slots = _do_slots(field, bound)
        cols: list[list[int]] = []
        for kind, idx in slots:
            for d in range(e):
                g = _do_from_slot_digit(field, kind, idx, d)
                cols.append(_do_flatten(do_compose_lin(Lr, g, "left").reduce()))
        target = _do_flatten(E)
        rows = [[col[r] for col in cols] for r in range(len(target))]
        sol = _linalg.solve(rows, target, p)
        if sol is None:
            return None
        f = DOPoly.zero(field)
        for n, (kind, idx) in enumerate(slots):
            digits = tuple(sol[n * e + d] for d in range(e))
            if any(digits):
                c = field.element(digits)
                if kind == "quad":
                    f = f + DOPoly(field, {(idx[0], idx[1]): c})
                elif kind == "lin":
                    f = f + DOPoly(field, {}, LinPoly.monomial(field, idx[0], c, 1))
                else:
                    f = f + DOPoly(field, {}, None, c)
        f = f.reduce()
    assert do_compose_lin(Lr, f, "left", reduce=True) == E
    return f


@dataclass(eq=False)
class AttackResult:
    left: LinPoly
    core: DOPoly
    rounds: int


def gcldf_attack(
    E: DOPoly, bound: int, rng: random.Random, max_rounds: int = 16
) -> AttackResult:
    """Key recovery from common left divisor factors of differences of E.

    Differences of E = S . G share the additive left factor S, so their
    running greatest common left divisor factor is refined with fresh
    difference polynomials each round; whenever the running factor
    permutes the field, the attack tries to peel it off leaving a core
    within the degree bound.  Raises AttackFailedError after max_rounds
    checks (or when fresh shift points run out).  The recovered pair is
    verified to recompose to E before being returned.
    """
    E = E.reduce()
    field = E.field
    if E.const:
        raise ShapeViolationError("attack input must be constant-free")
    if not E.has_quadratic:
        raise ShapeViolationError("attack input has no quadratic part")
    pool = [x for x in field.elements() if x]
    rng.shuffle(pool)

    def next_delta(rounds_so_far: int) -> LinPoly:
        while pool:
            d = difference_poly(E, pool.pop())
            if not d.is_zero:
                return d
        raise AttackFailedError(rounds_so_far, "ran out of fresh shift points")

    L = gcldf(next_delta(0), next_delta(0))[0]
    for r in range(1, max_rounds + 1):
        Lr = L.reduce()
        if Lr.is_permutation():
            f = try_left_factor(Lr, E, bound)
            if f is not None:
                return AttackResult(left=Lr, core=f, rounds=r)
        if r < max_rounds:
            L = gcldf(L, next_delta(r))[0]
    raise AttackFailedError(max_rounds)


def decrypt_with_factors(
    left: LinPoly, core: DOPoly, y: FqElem, max_q: Optional[int] = None
) -> list[FqElem]:
    """Decrypt using a recovered factorisation E = left . core."""
    w = left.reduce().inverse()(y)
    return core_preimages(core, w, max_q=max_q)
