"""Finite-dimensional Hopf algebras as structure-constant tensors.

A :class:`HopfAlgebra` stores dense tensors over a fixed basis:

* ``mult[i, j, k]``   -- coefficient of b_k in b_i b_j
* ``unit[k]``         -- coordinates of 1
* ``comult[i, s, t]`` -- coefficient of b_s (x) b_t in Delta(b_i)
* ``counit[i]``       -- eps(b_i)
* ``antipode[k, j]``  -- coefficient of b_k in S(b_j), acting by S @ v

Constructors attach, when possible, a :class:`Presentation`: a small set of
algebra generators ("atoms") together with a factorization of every basis
element into atoms.  Morphism enumeration relies on it.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .fields import Field


@dataclass(frozen=True)
class Presentation:
    atoms: tuple                 # basis indices of the algebra generators
    words: tuple                 # words[i] = tuple of atom indices with product b_i


@dataclass
class CheckResult:
    ok: bool
    detail: Optional[str] = None

    def __bool__(self):
        return self.ok


@dataclass
class HopfReport:
    algebra: CheckResult
    coalgebra: CheckResult
    bialgebra: CheckResult
    antipode: CheckResult

    @property
    def ok(self) -> bool:
        return all((self.algebra.ok, self.coalgebra.ok, self.bialgebra.ok,
                    self.antipode.ok))

    def lines(self):
        out = []
        for name in ("algebra", "coalgebra", "bialgebra", "antipode"):
            res = getattr(self, name)
            out.append(f"{name}: " + ("ok" if res.ok else f"FAIL {res.detail}"))
        return out


@dataclass(eq=False)
class HopfAlgebra:
    field: Field
    labels: tuple
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    presentation: Optional[Presentation] = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __post_init__(self):
        d = self.dim
        shapes = {
            "mult": (self.mult.shape, (d, d, d)),
            "unit": (self.unit.shape, (d,)),
            "comult": (self.comult.shape, (d, d, d)),
            "counit": (self.counit.shape, (d,)),
            "antipode": (self.antipode.shape, (d, d)),
        }
        for name, (got, want) in shapes.items():
            if got != want:
                raise ValueError(f"{name} tensor has shape {got}, expected {want}")

    # -- basic operations ------------------------------------------------
    def multiply(self, u, v):
        return backend.mulvec(self.field, self.mult, u, v)

    def power(self, v, e: int):
        out = self.unit.copy()
        for _ in range(e):
            out = self.multiply(out, v)
        return out

    def basis_vector(self, i: int):
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def comult_of(self, v):
        return np.einsum("i,ist->st", v, self.comult)

    def counit_of(self, v):
        return np.einsum("i,i->", v, self.counit)

    def antipode_of(self, v):
        w = self.antipode.dot(v)
        return w % self.field.p if self.field.is_prime else w

    def is_commutative(self) -> bool:
        return bool((self.mult == self.mult.transpose(1, 0, 2)).all())

    def is_cocommutative(self) -> bool:
        return bool((self.comult == self.comult.transpose(0, 2, 1)).all())

    def structure_equal(self, other: "HopfAlgebra") -> bool:
        return (self.field == other.field and self.dim == other.dim
                and (self.mult == other.mult).all()
                and (self.unit == other.unit).all()
                and (self.comult == other.comult).all()
                and (self.counit == other.counit).all()
                and (self.antipode == other.antipode).all())

    def key(self) -> bytes:
        h = hashlib.sha256()
        h.update(repr(self.field.to_json()).encode())
        for arr in (self.mult, self.unit, self.comult, self.counit,
                    self.antipode):
            if self.field.is_prime:
                h.update(arr.tobytes())
            else:
                h.update(repr([self.field.scalar_to_json(x)
                               for x in arr.reshape(-1)]).encode())
        return h.digest()

    def __repr__(self):
        return f"HopfAlgebra(dim={self.dim}, field={self.field!r})"


def verify_hopf_axioms(H: HopfAlgebra) -> HopfReport:
    """Exhaustive check of all Hopf axioms; reports the first failing
    identity of each block."""
    f, lab = H.field, H.labels

    bad = backend.assoc_failure(f, H.mult)
    if bad is not None:
        i, j, k = bad
        alg = CheckResult(False, f"associativity at ({lab[i]},{lab[j]},{lab[k]})")
    else:
        bad = backend.unit_failure(f, H.mult, H.unit)
        alg = (CheckResult(True) if bad is None else
               CheckResult(False, f"{bad[0]} unit law at {lab[bad[1]]}"))

    bad = backend.coassoc_failure(f, H.comult)
    if bad is not None:
        coa = CheckResult(False, f"coassociativity at {lab[bad]}")
    else:
        bad = backend.counit_failure(f, H.comult, H.counit)
        coa = (CheckResult(True) if bad is None else
               CheckResult(False, f"{bad[0]} counit law at {lab[bad[1]]}"))

    bad = backend.bialgebra_failure(f, H.mult, H.comult, H.unit, H.counit)
    if bad is None:
        bia = CheckResult(True)
    elif bad[0] in ("comult-mult", "counit-mult"):
        bia = CheckResult(False, f"{bad[0]} at ({lab[bad[1]]},{lab[bad[2]]})")
    else:
        bia = CheckResult(False, bad[0])

    bad = backend.antipode_failure(f, H.mult, H.comult, H.antipode, H.unit,
                                   H.counit)
    anti = (CheckResult(True) if bad is None else
            CheckResult(False, f"{bad[0]} antipode law at {lab[bad[1]]}"))

    return HopfReport(alg, coa, bia, anti)


# ---------------------------------------------------------------------------
# finite groups
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class FiniteGroupTable:
    order: int
    table: np.ndarray            # table[i, j] = index of g_i g_j
    labels: tuple

    def __post_init__(self):
        n = self.order
        t = self.table
        if t.shape != (n, n):
            raise ValueError("multiplication table has wrong shape")
        ident = [e for e in range(n)
                 if all(t[e, j] == j and t[j, e] == j for j in range(n))]
        if len(ident) != 1:
            raise ValueError("table has no unique identity")
        self.identity = ident[0]
        inv = np.full(n, -1, np.int64)
        for i in range(n):
            for j in range(n):
                if t[i, j] == self.identity and t[j, i] == self.identity:
                    inv[i] = j
        if (inv < 0).any():
            raise ValueError("table has non-invertible elements")
        self.inverse = inv
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if t[t[i, j], k] != t[i, t[j, k]]:
                        raise ValueError(
                            f"table is not associative at ({i},{j},{k})")

    def conjugate(self, g: int, h: int) -> int:
        """g h g^-1."""
        return int(self.table[self.table[g, h], self.inverse[g]])

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = int(self.table[cur, g])
            k += 1
        return k

    def generating_set(self):
        """A small generating set found by greedy search (subsets of size
        1, then 2, ...)."""
        n = self.order
        if n == 1:
            return ()
        candidates = [g for g in range(n) if g != self.identity]
        for size in range(1, n):
            for gens in itertools.combinations(candidates, size):
                if len(self._closure(gens)) == n:
                    return gens
        raise AssertionError("unreachable")

    def _closure(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def words(self, gens):
        """BFS factorization of every element as a word in ``gens``."""
        words = {self.identity: ()}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in words:
                        words[y] = words[x] + (g,)
                        nxt.append(y)
            frontier = nxt
        if len(words) != self.order:
            raise ValueError("given set does not generate the group")
        return [words[i] for i in range(self.order)]

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroupTable":
        t = np.array([[(i + j) % n for j in range(n)] for i in range(n)],
                     np.int64)
        labels = tuple("1" if i == 0 else ("c" if i == 1 else f"c^{i}")
                       for i in range(n))
        return cls(n, t, labels)

    @classmethod
    def direct_product(cls, G: "FiniteGroupTable",
                       K: "FiniteGroupTable") -> "FiniteGroupTable":
        n, m = G.order, K.order
        t = np.zeros((n * m, n * m), np.int64)
        for (i, a), (j, b) in itertools.product(
                itertools.product(range(n), range(m)), repeat=2):
            t[i * m + a, j * m + b] = G.table[i, j] * m + K.table[a, b]
        labels = tuple(f"({G.labels[i]},{K.labels[a]})"
                       for i in range(n) for a in range(m))
        return cls(n * m, t, labels)

    @classmethod
    def klein_four(cls) -> "FiniteGroupTable":
        t = np.array([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
                     np.int64)
        return cls(4, t, ("1", "a", "b", "ab"))

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroupTable":
        perms = sorted(itertools.permutations(range(n)))
        idx = {p: i for i, p in enumerate(perms)}
        size = len(perms)
        t = np.zeros((size, size), np.int64)
        for i, p in enumerate(perms):
            for j, q in enumerate(perms):
                t[i, j] = idx[tuple(p[q[k]] for k in range(n))]
        labels = tuple("".join(map(str, p)) for p in perms)
        return cls(size, t, labels)

    def to_json(self):
        return {"order": self.order, "table": self.table.tolist(),
                "labels": list(self.labels)}

    @classmethod
    def from_json(cls, obj):
        n = int(obj["order"])
        labels = tuple(obj.get("labels") or (f"g{i}" for i in range(n)))
        return cls(n, np.asarray(obj["table"], np.int64), labels)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def group_algebra(G: FiniteGroupTable, field: Field) -> HopfAlgebra:
    """k[G]: basis {g}, Delta(g) = g (x) g, S(g) = g^-1."""
    n = G.order
    one, zeros = field.one, field.zeros
    mult = zeros((n, n, n))
    comult = zeros((n, n, n))
    anti = zeros((n, n))
    for i in range(n):
        comult[i, i, i] = one
        anti[G.inverse[i], i] = one
        for j in range(n):
            mult[i, j, G.table[i, j]] = one
    unit = zeros(n)
    unit[G.identity] = one
    counit = zeros(n)
    counit[:] = one
    gens = G.generating_set()
    pres = Presentation(gens, tuple(tuple(w) for w in G.words(gens)))
    return HopfAlgebra(field, G.labels, mult, unit, comult, counit, anti,
                       presentation=pres)


def dual_group_algebra(G: FiniteGroupTable, field: Field,
                       co_opposite: bool = False) -> HopfAlgebra:
    """k[G]^* on the dual basis {e_g}; with ``co_opposite`` the printed
    (k[G]^*)^cop convention Delta(e_g) = sum_x e_x (x) e_{g x^-1}."""
    n = G.order
    one, zeros = field.one, field.zeros
    mult = zeros((n, n, n))
    comult = zeros((n, n, n))
    anti = zeros((n, n))
    for g in range(n):
        mult[g, g, g] = one
        anti[G.inverse[g], g] = one
        for x in range(n):
            if co_opposite:
                # e_x (x) e_{g x^-1}
                comult[g, x, G.table[g, G.inverse[x]]] = one
            else:
                comult[g, x, G.table[G.inverse[x], g]] = one
    unit = zeros(n)
    unit[:] = one
    counit = zeros(n)
    counit[G.identity] = one
    labels = tuple(f"e_{lbl}" for lbl in G.labels)
    return HopfAlgebra(field, labels, mult, unit, comult, counit, anti)


def sweedler_h4(field: Field) -> HopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra on the basis {1, g, x, gx},
    with g^2 = 1, x^2 = 0, xg = -gx."""
    one = field.one
    m_one = field.neg(one)
    zeros = field.zeros
    I, Gg, X, GX = 0, 1, 2, 3
    mult = zeros((4, 4, 4))
    table = {
        (I, I): [(I, one)], (I, Gg): [(Gg, one)], (I, X): [(X, one)],
        (I, GX): [(GX, one)],
        (Gg, I): [(Gg, one)], (Gg, Gg): [(I, one)], (Gg, X): [(GX, one)],
        (Gg, GX): [(X, one)],
        (X, I): [(X, one)], (X, Gg): [(GX, m_one)], (X, X): [],
        (X, GX): [],
        (GX, I): [(GX, one)], (GX, Gg): [(X, m_one)], (GX, X): [],
        (GX, GX): [],
    }
    for (i, j), terms in table.items():
        for k, c in terms:
            mult[i, j, k] = c
    unit = zeros(4)
    unit[I] = one
    comult = zeros((4, 4, 4))
    comult[I, I, I] = one
    comult[Gg, Gg, Gg] = one
    comult[X, X, I] = one          # x (x) 1
    comult[X, Gg, X] = one         # g (x) x
    comult[GX, GX, Gg] = one       # gx (x) g
    comult[GX, I, GX] = one        # 1 (x) gx
    counit = zeros(4)
    counit[I] = one
    counit[Gg] = one
    anti = zeros((4, 4))
    anti[I, I] = one
    anti[Gg, Gg] = one
    anti[GX, X] = m_one            # S(x) = -gx
    anti[X, GX] = one              # S(gx) = S(x)S(g) = -gx g = x
    pres = Presentation((Gg, X), ((), (Gg,), (X,), (Gg, X)))
    return HopfAlgebra(field, ("1", "g", "x", "gx"), mult, unit, comult,
                       counit, anti, presentation=pres)


def _tensor_labels(A, B):
    def wrap(s):
        return s if s != "1" else ""
    out = []
    for la in A.labels:
        for lb in B.labels:
            s = wrap(la) + ("" if la == "1" or lb == "1" else "#") + wrap(lb)
            out.append(s if s else "1")
    return tuple(out)


def _tensor_presentation(A: HopfAlgebra, B: HopfAlgebra):
    """Atoms of A (x) B are the embedded atoms of both factors, provided
    both units are basis vectors."""
    if A.presentation is None or B.presentation is None:
        return None
    ua = np.flatnonzero(A.unit != A.field.zero)
    ub = np.flatnonzero(B.unit != B.field.zero)
    if len(ua) != 1 or A.unit[ua[0]] != A.field.one:
        return None
    if len(ub) != 1 or B.unit[ub[0]] != B.field.one:
        return None
    ia, ib = int(ua[0]), int(ub[0])
    dB = B.dim
    atoms = tuple(a * dB + ib for a in A.presentation.atoms) + \
        tuple(ia * dB + b for b in B.presentation.atoms)
    words = []
    for i in range(A.dim):
        for j in range(B.dim):
            w = tuple(a * dB + ib for a in A.presentation.words[i]) + \
                tuple(ia * dB + b for b in B.presentation.words[j])
            words.append(w)
    return Presentation(atoms, tuple(words))


def tensor_hopf(A: HopfAlgebra, B: HopfAlgebra) -> HopfAlgebra:
    """Componentwise tensor product, basis ordered left factor major."""
    if A.field != B.field:
        raise ValueError("field mismatch in tensor product")
    fd = A.field
    dA, dB, d = A.dim, B.dim, A.dim * B.dim
    mult = np.einsum("ikm,jln->ijklmn", A.mult, B.mult).reshape(d, d, d)
    comult = np.einsum("ikm,jln->ijklmn", A.comult,
                       B.comult).reshape(d, d, d)
    unit = np.einsum("i,j->ij", A.unit, B.unit).reshape(d)
    counit = np.einsum("i,j->ij", A.counit, B.counit).reshape(d)
    anti = np.einsum("ik,jl->ijkl", A.antipode,
                     B.antipode).reshape(d, d)
    if fd.is_prime:
        p = fd.p
        mult, comult, unit = mult % p, comult % p, unit % p
        counit, anti = counit % p, anti % p
    return HopfAlgebra(fd, _tensor_labels(A, B), mult, unit, comult, counit,
                       anti, presentation=_tensor_presentation(A, B))


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """Dual Hopf algebra on the dual basis: multiplication is the
    transpose of comultiplication and vice versa."""
    mult = H.comult.transpose(1, 2, 0).copy()
    comult = H.mult.transpose(2, 0, 1).copy()
    labels = tuple(f"({lbl})*" for lbl in H.labels)
    return HopfAlgebra(H.field, labels, mult, H.counit.copy(), comult,
                       H.unit.copy(), H.antipode.T.copy())


def op_cop(H: HopfAlgebra, flip_mult: bool, flip_comult: bool) -> HopfAlgebra:
    """Opposite / co-opposite structures; a one-sided flip replaces the
    antipode by its inverse and requires it to be invertible."""
    from .exact_linalg import inverse

    mult = H.mult.transpose(1, 0, 2).copy() if flip_mult else H.mult.copy()
    comult = (H.comult.transpose(0, 2, 1).copy() if flip_comult
              else H.comult.copy())
    if flip_mult != flip_comult:
        anti = inverse(H.antipode, H.field)
        if anti is None:
            raise ValueError("antipode is singular; one-sided flip undefined")
    else:
        anti = H.antipode.copy()
    return HopfAlgebra(H.field, H.labels, mult, H.unit.copy(), comult,
                       H.counit.copy(), anti,
                       presentation=H.presentation if not flip_mult else None)
