"""Exact scalar arithmetic over odd-characteristic prime fields, the
rationals, and cyclotomic extensions of the rationals.

Scalars are stored in canonical form so that equality is structural:

* prime field F_p     -- python ints reduced to the range [0, p)
* rationals           -- ``fractions.Fraction`` (always normalised)
* cyclotomic Q(zeta_m)-- :class:`Cyclo`, a fixed-length tuple of Fractions
                         giving the residue in the power basis modulo the
                         m-th cyclotomic polynomial

Arrays of scalars are numpy arrays: ``int64`` for prime fields, ``object``
otherwise.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

__all__ = [
    "Field",
    "PrimeField",
    "RationalField",
    "CyclotomicField",
    "Cyclo",
    "FieldScalar",
    "field_from_json",
    "roots_of_unity",
    "nu_order",
    "scalar_arith",
]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and residue arithmetic
# ---------------------------------------------------------------------------

def _poly_divmod(num, den):
    """Exact division of integer/Fraction coefficient lists (ascending)."""
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    lead = Fraction(den[-1])
    for i in range(len(num) - len(den), -1, -1):
        c = Fraction(num[i + len(den) - 1]) / lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] = Fraction(num[i + j]) - c * Fraction(d)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of Phi_m (ascending), computed by the recursive
    division Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d."""
    if m < 1:
        raise ValueError(f"conductor must be >= 1, got {m}")
    if m == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (m + 1)
    num[0], num[m] = Fraction(-1), Fraction(1)
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert rem == [0], "cyclotomic division must be exact"
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple:
    """Row k gives x^(phi+k) mod Phi_m for k = 0 .. phi-2, as a tuple of
    Fractions of length phi."""
    phi = len(cyclotomic_polynomial(m)) - 1
    rows = []
    # x^phi = -(lower coefficients) since Phi_m is monic
    base = [-c for c in cyclotomic_polynomial(m)[:-1]]
    cur = list(base)
    for _ in range(phi - 1):
        rows.append(tuple(cur))
        # multiply current residue by x and reduce once
        nxt = [Fraction(0)] + cur[:-1]
        top = cur[-1]
        if top:
            nxt = [a + top * b for a, b in zip(nxt, base)]
        cur = nxt
    return tuple(rows)


class Cyclo:
    """Residue of a rational polynomial modulo Phi_m, in the power basis.

    ``coeffs`` always has length phi(m); reduction happens in the
    constructor, so every reachable value is canonical.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        phi = len(cyclotomic_polynomial(m)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) <= 2 * phi - 1:
            # fast path: the degree range produced by products
            if len(cs) > phi:
                rows = _reduction_rows(m)
                red = cs[:phi]
                for k, c in enumerate(cs[phi:]):
                    if c:
                        row = rows[k]
                        red = [a + c * b for a, b in zip(red, row)]
                cs = red
        else:
            _, cs = _poly_divmod(cs, list(cyclotomic_polynomial(m)))
        cs = cs[:phi] + [Fraction(0)] * (phi - len(cs))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Cyclo values are immutable")

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.m != self.m:
                raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.m, [Fraction(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclo(self.m, [-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclo(self.m, prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclo(self.m, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Extended Euclid against Phi_m; Phi_m is irreducible over Q so
        every nonzero residue is a unit."""
        if not any(self.coeffs):
            raise ZeroDivisionError("division by zero in cyclotomic field")
        # r0 = Phi_m, r1 = self; track s only against r1
        r0 = list(cyclotomic_polynomial(self.m))
        r1 = [c for c in self.coeffs]
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            if len(r1) == 1:
                c = r1[0]
                return Cyclo(self.m, [x / c for x in s1])
            q, r = _poly_divmod(r0, r1)
            # s_next = s0 - q*s1
            qs = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs[i + j] += qi * sj
            s_next = [Fraction(0)] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                s_next[i] += c
            for i, c in enumerate(qs):
                s_next[i] -= c
            r0, r1, s0, s1 = r1, r, s1, s_next

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"Cyclo({self.m}, {[str(c) for c in self.coeffs]})"


# ---------------------------------------------------------------------------
# field specs
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface of the three exact field kinds."""

    is_prime = False
    p = 0  # prime modulus, 0 for characteristic zero
    dtype = object

    # -- scalar arithmetic ---------------------------------------------------
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == self.zero:
            raise ZeroDivisionError("division by zero")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # -- array helpers -------------------------------------------------------
    def zeros(self, shape):
        if self.dtype is object:
            a = np.empty(shape, dtype=object)
            a[...] = self.zero
            return a
        return np.zeros(shape, dtype=np.int64)

    def asarray(self, data):
        if self.dtype is object:
            a = np.empty(np.shape(data), dtype=object)
            flat = a.reshape(-1)
            for i, v in enumerate(np.asarray(data, dtype=object).reshape(-1)):
                flat[i] = self.coerce(v)
            return a
        return np.asarray(data, dtype=np.int64) % self.p

    def eye(self, d):
        a = self.zeros((d, d))
        for i in range(d):
            a[i, i] = self.one
        return a

    # -- overridables ----------------------------------------------------------
    def coerce(self, v):
        raise NotImplementedError

    def from_int(self, k: int):
        return self.coerce(k)

    def scalar_to_json(self, v):
        raise NotImplementedError

    def scalar_from_json(self, obj):
        raise NotImplementedError

    def sort_key(self, v):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


@dataclass(frozen=True)
class PrimeField(Field):
    modulus: int

    def __post_init__(self):
        if not _is_prime(self.modulus):
            raise ValueError(f"{self.modulus} is not prime")
        if self.modulus == 2:
            raise ValueError("characteristic 2 is not supported")

    is_prime = True
    dtype = np.int64

    @property
    def p(self):  # noqa: A003 - short name used throughout
        return self.modulus

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, v):
        if isinstance(v, Fraction):
            if v.denominator == 1:
                return v.numerator % self.modulus
            return self.div(v.numerator % self.modulus,
                            v.denominator % self.modulus)
        return int(v) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def div(self, a, b):
        if b % self.modulus == 0:
            raise ZeroDivisionError("division by zero")
        return (a * pow(int(b), -1, self.modulus)) % self.modulus

    def scalar_to_json(self, v):
        return int(v)

    def scalar_from_json(self, obj):
        return int(obj) % self.modulus

    def sort_key(self, v):
        return (int(v),)

    def to_json(self):
        return {"kind": "prime", "p": self.modulus}

    def __repr__(self):
        return f"F{self.modulus}"


@dataclass(frozen=True)
class RationalField(Field):
    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, v):
        return Fraction(v)

    def scalar_to_json(self, v):
        v = Fraction(v)
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def scalar_from_json(self, obj):
        return Fraction(obj)

    def sort_key(self, v):
        return (Fraction(v),)

    def to_json(self):
        return {"kind": "rationals"}

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class CyclotomicField(Field):
    conductor: int

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError(f"conductor must be >= 1, got {self.conductor}")
        cyclotomic_polynomial(self.conductor)  # validate eagerly

    @property
    def degree(self):
        return len(cyclotomic_polynomial(self.conductor)) - 1

    @property
    def zero(self):
        return Cyclo(self.conductor, [0])

    @property
    def one(self):
        return Cyclo(self.conductor, [1])

    @property
    def zeta(self):
        """The class of x, a primitive conductor-th root of unity (for
        conductor > 1)."""
        return Cyclo(self.conductor, [0, 1])

    def coerce(self, v):
        if isinstance(v, Cyclo):
            if v.m != self.conductor:
                raise ValueError("conductor mismatch")
            return v
        return Cyclo(self.conductor, [Fraction(v)])

    def div(self, a, b):
        b = self.coerce(b)
        if not b:
            raise ZeroDivisionError("division by zero")
        return self.coerce(a) * b.inverse()

    def scalar_to_json(self, v):
        rat = RationalField()
        return [rat.scalar_to_json(c) for c in self.coerce(v).coeffs]

    def scalar_from_json(self, obj):
        if isinstance(obj, (int, str)):
            return Cyclo(self.conductor, [Fraction(obj)])
        return Cyclo(self.conductor, [Fraction(c) for c in obj])

    def sort_key(self, v):
        return tuple(self.coerce(v).coeffs)

    def to_json(self):
        return {"kind": "cyclotomic", "m": self.conductor}

    def __repr__(self):
        return f"Q(zeta_{self.conductor})"


def field_from_json(obj) -> Field:
    kind = obj.get("kind")
    if kind == "prime":
        return PrimeField(int(obj["p"]))
    if kind == "rationals":
        return RationalField()
    if kind == "cyclotomic":
        return CyclotomicField(int(obj["m"]))
    raise ValueError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def roots_of_unity(field: Field, n: int) -> list:
    """All solutions of w^n = 1 in the field, sorted canonically.

    Always contains 1, and the result is a cyclic group under
    multiplication.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if isinstance(field, PrimeField):
        p = field.modulus
        roots = [x for x in range(1, p) if pow(x, n, p) == 1]
    elif isinstance(field, RationalField):
        roots = [Fraction(1)] + ([Fraction(-1)] if n % 2 == 0 else [])
    elif isinstance(field, CyclotomicField):
        m = field.conductor
        # the full group of roots of unity in Q(zeta_m) is cyclic of order
        # lcm(2, m), generated by zeta_m (m even) or -zeta_m (m odd)
        big = m if m % 2 == 0 else 2 * m
        gen = field.zeta if m % 2 == 0 else -field.zeta
        g = math.gcd(n, big)
        step = gen ** (big // g)
        roots, cur = [], field.one
        for _ in range(g):
            roots.append(cur)
            cur = cur * step
    else:
        raise TypeError(f"unsupported field {field!r}")
    return sorted(roots, key=field.sort_key)


def _mult_order(field: Field, w, bound: int) -> int:
    cur = w
    for k in range(1, bound + 1):
        if cur == field.one:
            return k
        cur = field.mul(cur, w)
    raise ValueError("element order exceeds bound")


def nu_order(field: Field, n: int):
    """Order nu of the group of n-th roots of unity, together with the
    canonical generator: the root of maximal multiplicative order with the
    smallest encoding."""
    roots = roots_of_unity(field, n)
    nu = len(roots)
    gens = [w for w in roots if _mult_order(field, w, nu) == nu]
    xi = min(gens, key=field.sort_key)
    return nu, xi


# ---------------------------------------------------------------------------
# spec-level scalar wrapper
# ---------------------------------------------------------------------------

ScalarValue = Union[int, Fraction, Cyclo]


@dataclass(frozen=True)
class FieldScalar:
    """A scalar tagged with its field, for the external interface."""

    field: Field
    value: ScalarValue

    def to_json(self):
        return self.field.scalar_to_json(self.value)


def scalar_arith(a: FieldScalar, b: FieldScalar, op: str) -> FieldScalar:
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field!r} vs {b.field!r}")
    f = a.field
    table = {"+": f.add, "-": f.sub, "*": f.mul, "/": f.div}
    if op not in table:
        raise ValueError(f"unknown operation {op!r}")
    return FieldScalar(f, table[op](a.value, b.value))
