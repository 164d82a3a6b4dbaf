"""Sparse multivariate power series truncated by per-variable degree caps.

A :class:`SeriesContext` fixes an ordered tuple of variable names and a
cap for each.  All arithmetic happens in the quotient by the monomial
ideal generated by the first out-of-cap power of each variable: any
product monomial exceeding a cap in any variable is simply dropped.
Because that rule is an ideal quotient it is exactly associative, and
every surviving coefficient equals the coefficient of the untruncated
series.  Coefficients are unbounded Python integers.

Pochhammer factors whose leading monomial already exceeds the caps are
identified with 1, so "infinite" products only ever multiply finitely
many factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

ALLOWED_VARIABLES = ("q", "t1", "t2", "s", "z")

__all__ = [
    "ALLOWED_VARIABLES",
    "Monomial",
    "SeriesContext",
    "Series",
    "SubstitutionResult",
    "geometric_inverse",
    "poch_finite",
    "poch_infinite",
    "poch_infinite_inverse",
    "gaussian_binomial_coeffs",
    "gaussian_multinomial_coeffs",
    "q_binomial",
    "q_multinomial",
    "substitute_one",
]


class Monomial(tuple):
    """An exponent vector; multiplication adds exponents componentwise."""

    def __new__(cls, exponents):
        t = tuple(int(e) for e in exponents)
        if any(e < 0 for e in t):
            raise ValueError(f"exponents must be nonnegative, got {t}")
        return super().__new__(cls, t)

    def __mul__(self, other):
        if len(self) != len(other):
            raise ValueError("monomials from different contexts")
        return Monomial(a + b for a, b in zip(self, other))

    def __pow__(self, k):
        if k < 0:
            raise ValueError(f"monomial powers must be nonnegative, got {k}")
        return Monomial(e * k for e in self)

    @property
    def degree(self):
        return sum(self)

    def is_constant(self):
        return not any(self)

    def within(self, caps):
        return all(e <= c for e, c in zip(self, caps))


@dataclass(frozen=True)
class SeriesContext:
    """An ordered variable list together with one degree cap per variable."""

    variables: tuple
    caps: tuple

    def __post_init__(self):
        variables = tuple(self.variables)
        caps = tuple(int(c) for c in self.caps)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "caps", caps)
        if len(variables) != len(set(variables)):
            raise ValueError(f"duplicate variables in {variables}")
        for v in variables:
            if v not in ALLOWED_VARIABLES:
                raise ValueError(f"unknown variable {v!r}; choose from {ALLOWED_VARIABLES}")
        if len(caps) != len(variables):
            raise ValueError("need exactly one cap per variable")
        if any(c < 0 for c in caps):
            raise ValueError(f"caps must be nonnegative, got {caps}")

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"variable {name!r} not in context {self.variables}") from None

    def monomial(self, **exponents):
        exps = [0] * len(self.variables)
        for name, e in exponents.items():
            exps[self.index(name)] = e
        return Monomial(exps)

    def zero(self):
        return Series(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Series(self, {self.monomial(): c})

    def term(self, coeff, monomial):
        return Series(self, {monomial: coeff})


class Series:
    """A finite sum of integer-coefficient monomials inside one context.

    The constructor accepts any mapping or iterable of (exponent tuple,
    coefficient) pairs, merges duplicates, drops zero coefficients, and
    rejects terms outside the context caps.
    """

    __slots__ = ("_context", "_terms")

    def __init__(self, context, terms=()):
        if not isinstance(context, SeriesContext):
            raise TypeError(f"expected a SeriesContext, got {context!r}")
        items = terms.items() if hasattr(terms, "items") else terms
        width, caps = len(context.variables), context.caps
        acc = {}
        for mon, coeff in items:
            key = tuple(int(e) for e in mon)
            if len(key) != width:
                raise ValueError(f"monomial {key} has wrong arity for {context.variables}")
            if any(e < 0 for e in key):
                raise ValueError(f"exponents must be nonnegative, got {key}")
            if not all(e <= c for e, c in zip(key, caps)):
                raise ValueError(f"monomial {key} exceeds caps {caps}")
            coeff = int(coeff)
            if coeff:
                acc[key] = acc.get(key, 0) + coeff
        self._context = context
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, context, terms):
        # Internal fast path: terms is a freshly built dict of in-cap
        # exponent tuples, zeros already possible but nothing else to check.
        obj = object.__new__(cls)
        obj._context = context
        obj._terms = {k: v for k, v in terms.items() if v}
        return obj

    @property
    def context(self):
        return self._context

    def coefficient(self, monomial):
        key = tuple(int(e) for e in monomial)
        return self._terms.get(key, 0)

    def coefficient_at(self, **exponents):
        return self.coefficient(self._context.monomial(**exponents))

    def sorted_terms(self):
        """Terms as (Monomial, coefficient) pairs, by total degree then exponents."""
        return [
            (Monomial(k), self._terms[k])
            for k in sorted(self._terms, key=lambda t: (sum(t), t))
        ]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _require_same_context(self, other):
        if self._context != other._context:
            raise ValueError(
                f"context mismatch: {self._context} vs {other._context}"
            )

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._context == other._context and self._terms == other._terms

    def __add__(self, other):
        if isinstance(other, int):
            other = self._context.constant(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_context(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Series._raw(self._context, out)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self._context, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self._context.constant(other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Series._raw(
                self._context, {k: other * v for k, v in self._terms.items()}
            )
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_context(other)
        caps = self._context.caps
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                key = tuple(x + y for x, y in zip(m1, m2))
                if all(e <= c for e, c in zip(key, caps)):
                    out[key] = out.get(key, 0) + c1 * c2
        return Series._raw(self._context, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"series powers must be nonnegative integers, got {k!r}")
        result = self._context.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        names = self._context.variables
        chunks = []
        for mon, coeff in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, mon)
                if e
            ]
            body = "*".join(factors)
            mag = abs(coeff)
            if not factors:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, text))
        first_sign, first_text = chunks[0]
        out = (first_sign if first_sign == "-" else "") + first_text
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"<Series {self!s} | {self._context.variables} caps {self._context.caps}>"

    def to_json_dict(self):
        """Canonical form with coefficients as decimal strings."""
        return {
            "variables": list(self._context.variables),
            "caps": list(self._context.caps),
            "terms": [
                {"exponents": list(mon), "coefficient": str(coeff)}
                for mon, coeff in self.sorted_terms()
            ],
        }

    def to_json_text(self):
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def geometric_inverse(context, monomial):
    """The truncation of ``1 / (1 - monomial)``, i.e. the geometric sum of its powers.

    The monomial must involve at least one variable so that the sum is
    finite under the caps.
    """
    mon = Monomial(monomial)
    if len(mon) != len(context.variables):
        raise ValueError(f"monomial {mon} has wrong arity for {context.variables}")
    if mon.is_constant():
        raise ValueError("cannot invert 1 - 1; the monomial must be nonconstant")
    caps = context.caps
    out = {}
    cur = tuple([0] * len(caps))
    while all(e <= c for e, c in zip(cur, caps)):
        out[cur] = 1
        cur = tuple(x + y for x, y in zip(cur, mon))
    return Series._raw(context, out)


def _as_monomial(context, monomial):
    mon = Monomial(monomial)
    if len(mon) != len(context.variables):
        raise ValueError(f"monomial {mon} has wrong arity for {context.variables}")
    return mon


def poch_finite(context, z, g, n, coefficient=1):
    """The product of ``1 - coefficient * z * g**k`` over ``k = 0..n-1``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"factor count must be a nonnegative integer, got {n!r}")
    z = _as_monomial(context, z)
    g = _as_monomial(context, g)
    caps = context.caps
    result = context.one()
    cur = z
    for _ in range(n):
        if cur.within(caps):
            result = result * Series._raw(
                context, {tuple([0] * len(caps)): 1, tuple(cur): -coefficient}
            )
        elif not g.is_constant():
            break
        cur = cur * g
    return result


def poch_infinite(context, z, g, coefficient=1):
    """The product of ``1 - coefficient * z * g**k`` over all ``k >= 0``.

    ``z`` and ``g`` must be nonconstant, so that only finitely many
    factors survive the caps.
    """
    z = _as_monomial(context, z)
    g = _as_monomial(context, g)
    if z.is_constant() or g.is_constant():
        raise ValueError("base and ratio must both be nonconstant monomials")
    caps = context.caps
    result = context.one()
    cur = z
    while cur.within(caps):
        result = result * Series._raw(
            context, {tuple([0] * len(caps)): 1, tuple(cur): -coefficient}
        )
        cur = cur * g
    return result


def poch_infinite_inverse(context, z, g):
    """The product of ``1 / (1 - z * g**k)`` over all ``k >= 0``."""
    z = _as_monomial(context, z)
    g = _as_monomial(context, g)
    if z.is_constant() or g.is_constant():
        raise ValueError("base and ratio must both be nonconstant monomials")
    caps = context.caps
    result = context.one()
    cur = z
    while cur.within(caps):
        result = result * geometric_inverse(context, cur)
        cur = cur * g
    return result


def _dense_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


@lru_cache(maxsize=None)
def gaussian_binomial_coeffs(n, k):
    """Dense coefficient tuple of the Gaussian binomial, via the q-Pascal rule.

    Uses ``[n, k] = [n-1, k-1] + q^k [n-1, k]``; the result has degree
    ``k * (n - k)`` and nonnegative coefficients.  Out-of-range ``k`` is
    the empty selection, a zero polynomial.
    """
    if not (isinstance(n, int) and isinstance(k, int)) or n < 0:
        raise ValueError(f"need integers with n >= 0, got n={n!r}, k={k!r}")
    if k < 0 or k > n:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    left = gaussian_binomial_coeffs(n - 1, k - 1)
    right = gaussian_binomial_coeffs(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + k] += c
    return tuple(out)


def gaussian_multinomial_coeffs(n, parts):
    """Dense coefficients of the Gaussian multinomial with the given composition."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition entries must be nonnegative, got {parts}")
    if sum(parts) != n:
        raise ValueError(f"composition {parts} does not sum to {n}")
    out = (1,)
    rem = n
    for p in parts:
        out = _dense_mul(out, gaussian_binomial_coeffs(rem, p))
        rem -= p
    return out


def _embed_q_poly(context, coeffs):
    qi = context.index("q")
    qcap = context.caps[qi]
    width = len(context.variables)
    terms = {}
    for e, c in enumerate(coeffs):
        if c and e <= qcap:
            key = [0] * width
            key[qi] = e
            terms[tuple(key)] = c
    return Series._raw(context, terms)


def q_binomial(context, n, k):
    """The Gaussian binomial as a series in the context's ``q`` variable."""
    return _embed_q_poly(context, gaussian_binomial_coeffs(n, k))


def q_multinomial(context, n, parts):
    """The Gaussian multinomial as a series in the context's ``q`` variable."""
    return _embed_q_poly(context, gaussian_multinomial_coeffs(n, parts))


class SubstitutionResult(NamedTuple):
    series: "Series"
    saturated: bool


def substitute_one(a, var):
    """Set one variable to 1 by erasing its exponents.

    Returns the collapsed series together with a ``saturated`` flag that
    is true when some term already sat at the variable's cap, in which
    case contributions beyond the cap may have been truncated away and
    the collapsed coefficients are only lower-bound evidence.
    """
    ctx = a.context
    vi = ctx.index(var)
    cap = ctx.caps[vi]
    out = {}
    saturated = False
    for mon, coeff in a._terms.items():
        if mon[vi] == cap:
            saturated = True
        key = mon[:vi] + (0,) + mon[vi + 1 :]
        out[key] = out.get(key, 0) + coeff
    return SubstitutionResult(Series._raw(ctx, out), saturated)
