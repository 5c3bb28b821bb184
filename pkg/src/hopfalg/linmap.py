"""Linear maps between based Hopf algebras, the convolution algebra, and
the enumeration machinery for unitary coalgebra maps.

Enumeration is strata-based: the basis of a pointed fixture splits into
grouplike elements and skew-primitive elements, a unitary coalgebra map
sends grouplikes to grouplikes and a (a,b)-primitive into the
(u(a),u(b))-primitive space.  This family is complete for inputs whose
basis consists of grouplikes and skew primitives (all fixtures here); for
anything else the enumerators raise instead of silently under-counting.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .exact_linalg import kernel_basis
from .fields import Field
from .hopf import HopfAlgebra


DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    pass


def search_budget() -> int:
    return int(os.environ.get("HOPF_SEARCH_BUDGET", DEFAULT_BUDGET))


@dataclass(eq=False)
class LinMap:
    dom: HopfAlgebra
    cod: HopfAlgebra
    mat: np.ndarray

    def __post_init__(self):
        if self.dom.field != self.cod.field:
            raise ValueError("field mismatch between domain and codomain")
        if self.mat.shape != (self.cod.dim, self.dom.dim):
            raise ValueError(
                f"matrix shape {self.mat.shape} does not match "
                f"({self.cod.dim}, {self.dom.dim})")

    @property
    def field(self) -> Field:
        return self.dom.field

    def __call__(self, v):
        w = self.mat.dot(v)
        return w % self.field.p if self.field.is_prime else w

    def compose(self, other: "LinMap") -> "LinMap":
        if other.cod is not self.dom and other.cod.dim != self.dom.dim:
            raise ValueError("composition shape mismatch")
        m = self.mat.dot(other.mat)
        if self.field.is_prime:
            m = m % self.field.p
        return LinMap(other.dom, self.cod, m)

    def key(self):
        if self.field.is_prime:
            return self.mat.tobytes()
        return tuple(self.field.sort_key(x) for x in self.mat.reshape(-1))

    def equal(self, other: "LinMap") -> bool:
        return self.mat.shape == other.mat.shape and bool(
            (self.mat == other.mat).all())

    def __repr__(self):
        return f"LinMap({self.dom.dim}->{self.cod.dim})"


def identity_map(H: HopfAlgebra) -> LinMap:
    return LinMap(H, H, H.field.eye(H.dim))


def trivial_map(dom: HopfAlgebra, cod: HopfAlgebra) -> LinMap:
    """unit_cod . counit_dom, the convolution identity."""
    f = dom.field
    m = np.einsum("k,i->ki", cod.unit, dom.counit)
    if f.is_prime:
        m = m % f.p
    return LinMap(dom, cod, m)


def convolve(f: LinMap, g: LinMap) -> LinMap:
    if f.dom.dim != g.dom.dim or f.cod.dim != g.cod.dim:
        raise ValueError("convolution requires equal domains and codomains")
    m = backend.convolve_mats(f.field, f.mat, g.mat, f.dom.comult, f.cod.mult)
    return LinMap(f.dom, f.cod, m)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

@dataclass
class MapFlags:
    is_coalgebra_map: bool
    is_algebra_map: bool
    is_unitary: bool
    is_counitary: bool


def is_unitary(f: LinMap) -> bool:
    return bool((f(f.dom.unit) == f.cod.unit).all())


def is_counitary(f: LinMap) -> bool:
    lhs = f.cod.counit.dot(f.mat)
    if f.field.is_prime:
        lhs = lhs % f.field.p
    return bool((lhs == f.dom.counit).all())


def is_coalgebra_map(f: LinMap) -> bool:
    bad = backend.coalgebra_map_failure(
        f.field, f.mat, f.dom.comult, f.cod.comult, f.dom.counit,
        f.cod.counit)
    return bad is None or bad[0] == "counit"


def is_algebra_map(f: LinMap) -> bool:
    bad = backend.algebra_map_failure(
        f.field, f.mat, f.dom.mult, f.cod.mult, f.dom.unit, f.cod.unit)
    return bad is None or bad[0] == "unit"


def map_predicates(f: LinMap) -> MapFlags:
    return MapFlags(is_coalgebra_map(f), is_algebra_map(f), is_unitary(f),
                    is_counitary(f))


def is_hopf_map(f: LinMap) -> bool:
    """Algebra + coalgebra + unit + counit; antipode compatibility is
    implied for bialgebra maps between Hopf algebras but checked anyway."""
    flags = map_predicates(f)
    if not (flags.is_algebra_map and flags.is_coalgebra_map
            and flags.is_unitary and flags.is_counitary):
        return False
    L = f.cod.antipode.dot(f.mat)
    R = f.mat.dot(f.dom.antipode)
    if f.field.is_prime:
        L, R = L % f.field.p, R % f.field.p
    return bool((L == R).all())


def is_cocentral(r: LinMap) -> bool:
    """r(h1) (x) h2 = r(h2) (x) h1 on every basis element (requires r to
    be a coalgebra map)."""
    if not is_coalgebra_map(r):
        return False
    f = r.field
    L = np.einsum("ist,as->iat", r.dom.comult, r.mat)
    R = np.einsum("ist,at->ias", r.dom.comult, r.mat)
    if f.is_prime:
        L, R = L % f.p, R % f.p
    return bool((L == R).all())


# ---------------------------------------------------------------------------
# grouplikes and skew primitives
# ---------------------------------------------------------------------------

def is_grouplike(H: HopfAlgebra, v) -> bool:
    f = H.field
    D = H.comult_of(v)
    O = np.einsum("s,t->st", v, v)
    eps = H.counit_of(v)
    if f.is_prime:
        D, O, eps = D % f.p, O % f.p, eps % f.p
    return bool((D == O).all()) and eps == f.one


def grouplikes(H: HopfAlgebra, hint=None, budget: Optional[int] = None):
    """All grouplike elements; exhaustive scan over prime fields within
    budget, otherwise a verified hint is required."""
    f = H.field
    budget = search_budget() if budget is None else budget
    if hint is not None:
        out = []
        for v in hint:
            v = np.asarray(v) if f.is_prime else v
            if not is_grouplike(H, v):
                raise ValueError("hinted vector is not grouplike")
            out.append(v)
    else:
        if not f.is_prime:
            raise ValueError("grouplike search needs a hint over "
                             "non-finite fields")
        if f.p ** H.dim > budget:
            raise BudgetExceeded(
                f"{f.p}^{H.dim} candidates exceed the search budget; "
                "pass a hint")
        out = [v for v in backend.grouplike_scan(f, H.comult, H.counit)]
    # closure and invertibility, per output contract
    keys = {tuple(f.sort_key(x) for x in v) for v in out}
    for a in out:
        has_inverse = False
        for b in out:
            prod = H.multiply(a, b)
            if tuple(f.sort_key(x) for x in prod) not in keys:
                raise ValueError("grouplike set is not closed under product")
            if (prod == H.unit).all():
                has_inverse = True
        if not has_inverse:
            raise ValueError("grouplike without inverse")
    return sorted(out, key=lambda v: tuple(f.sort_key(x) for x in v))


def skew_primitives(H: HopfAlgebra, g, h):
    """Kernel basis of x -> Delta(x) - x (x) g - h (x) x for grouplikes
    g, h."""
    if not is_grouplike(H, g) or not is_grouplike(H, h):
        raise ValueError("anchors must be grouplike")
    f, d = H.field, H.dim
    eye = f.eye(d)
    M = (H.comult.transpose(1, 2, 0)
         - np.einsum("sj,t->stj", eye, g)
         - np.einsum("s,tj->stj", h, eye)).reshape(d * d, d)
    if f.is_prime:
        M = M % f.p
    return kernel_basis(M, f)


@dataclass
class Strata:
    grouplike_idx: tuple          # basis indices that are grouplike
    skew: dict                    # basis index -> (a_idx, b_idx) anchors
    complete: bool                # every basis element classified


def basis_strata(H: HopfAlgebra) -> Strata:
    """Classify basis elements as grouplike or skew-primitive between
    basis grouplikes."""
    f, d = H.field, H.dim
    zero, one = f.zero, f.one
    gl = []
    for i in range(d):
        D = H.comult[i]
        ok = H.counit[i] == one
        if ok:
            for s in range(d):
                for t in range(d):
                    want = one if (s == i and t == i) else zero
                    if D[s, t] != want:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            gl.append(i)
    glset = set(gl)
    skew = {}
    complete = True
    for i in range(d):
        if i in glset:
            continue
        D = H.comult[i]
        if H.counit[i] != zero:
            complete = False
            continue
        # expect D = e_i (x) e_a + e_b (x) e_i with a, b basis grouplikes
        row = [t for t in range(d) if t != i and D[i, t] != zero]
        col = [s for s in range(d) if s != i and D[s, i] != zero]
        if len(row) != 1 or len(col) != 1:
            complete = False
            continue
        a, b = row[0], col[0]
        if a not in glset or b not in glset:
            complete = False
            continue
        if D[i, a] != one or D[b, i] != one:
            complete = False
            continue
        expect = f.zeros((d, d))
        expect[i, a] = one
        expect[b, i] = one
        if not (D == expect).all():
            complete = False
            continue
        skew[i] = (a, b)
    return Strata(tuple(gl), skew, complete)


def basis_grouplike_vectors(H: HopfAlgebra):
    st = basis_strata(H)
    if not st.complete:
        raise ValueError("basis is not pointed (grouplikes/skew-primitives); "
                         "cannot enumerate grouplikes from strata")
    return [H.basis_vector(i) for i in st.grouplike_idx]


# ---------------------------------------------------------------------------
# structured enumerations
# ---------------------------------------------------------------------------

def _coeff_grid(field: Field, k: int, budget):
    """All coefficient vectors of length k; finite fields only when k > 0."""
    if k == 0:
        yield ()
        return
    if not field.is_prime:
        raise ValueError("coefficient grid is infinite over this field; "
                         "finite field required")
    if field.p ** k > budget:
        raise BudgetExceeded("skew-primitive coefficient grid too large")
    yield from itertools.product(range(field.p), repeat=k)


def unitary_coalgebra_maps(dom: HopfAlgebra, cod: HopfAlgebra,
                           budget: Optional[int] = None):
    """Generator over all unitary coalgebra maps dom -> cod, via strata.

    Complete when dom and cod both have pointed bases; raises otherwise.
    """
    budget = search_budget() if budget is None else budget
    st = basis_strata(dom)
    if not st.complete:
        raise ValueError("domain basis is not pointed; enumeration "
                         "incomplete -- supply candidates explicitly")
    cod_st = basis_strata(cod)
    if not cod_st.complete:
        raise ValueError("codomain basis is not pointed; enumeration "
                         "incomplete -- supply candidates explicitly")
    f = dom.field
    unit_idx = [i for i in st.grouplike_idx
                if (dom.unit == dom.basis_vector(i)).all()]
    if len(unit_idx) != 1:
        raise ValueError("domain unit is not a basis grouplike")
    unit_idx = unit_idx[0]
    free_gl = [i for i in st.grouplike_idx if i != unit_idx]
    gl_cod = [cod.basis_vector(i) for i in cod_st.grouplike_idx]
    skew_items = sorted(st.skew.items())

    count = 0
    for assign in itertools.product(range(len(gl_cod)), repeat=len(free_gl)):
        images = {unit_idx: cod.unit}
        for i, gi in zip(free_gl, assign):
            images[i] = gl_cod[gi]
        # stratum spaces for the skew elements under this assignment
        bases = []
        for i, (a, b) in skew_items:
            space = skew_primitives(cod, images[a], images[b])
            bases.append(space)
        dims = [len(s) for s in bases]
        for coeffs in itertools.product(
                *[_coeff_grid(f, k, budget) for k in dims]):
            count += 1
            if count > budget:
                raise BudgetExceeded("unitary coalgebra map family "
                                     "exceeds budget")
            mat = f.zeros((cod.dim, dom.dim))
            for i, v in images.items():
                mat[:, i] = v
            for (i, _), space, cs in zip(skew_items, bases, coeffs):
                v = f.zeros(cod.dim)
                for c, w in zip(cs, space):
                    if c:
                        v = v + f.coerce(c) * w if not f.is_prime \
                            else (v + c * w) % f.p
                mat[:, i] = v
            yield LinMap(dom, cod, mat)


def unitary_coalgebra_maps_exhaustive(dom: HopfAlgebra, cod: HopfAlgebra):
    """Independent oracle: filter every matrix.  Only for tiny instances
    (cod.dim * dom.dim <= 16 entries, p <= 5)."""
    f = dom.field
    if not f.is_prime or f.p > 5 or cod.dim * dom.dim > 16:
        raise ValueError("exhaustive fallback restricted to tiny instances")
    n = cod.dim * dom.dim
    out = []
    for entries in itertools.product(range(f.p), repeat=n):
        mat = np.array(entries, np.int64).reshape(cod.dim, dom.dim)
        m = LinMap(dom, cod, mat)
        if is_unitary(m) and is_coalgebra_map(m) and is_counitary(m):
            out.append(m)
    return out


def unitary_algebra_coalgebra_maps(dom: HopfAlgebra, cod: HopfAlgebra,
                                   budget: Optional[int] = None):
    """All unitary maps that are simultaneously algebra and coalgebra maps,
    enumerated from dom's presentation (generator images in cod strata,
    other basis images derived multiplicatively) and then verified
    exhaustively.  Sound by the final verification; complete for pointed
    fixtures with a presentation."""
    budget = search_budget() if budget is None else budget
    if dom.presentation is None:
        raise ValueError("domain carries no presentation; supply candidates")
    st = basis_strata(dom)
    if not st.complete:
        raise ValueError("domain basis is not pointed")
    cod_st = basis_strata(cod)
    if not cod_st.complete:
        raise ValueError("codomain basis is not pointed")
    f = dom.field
    atoms = dom.presentation.atoms
    words = dom.presentation.words
    gl_atoms = [a for a in atoms if a in st.grouplike_idx]
    skew_atoms = [a for a in atoms if a in st.skew]
    if len(gl_atoms) + len(skew_atoms) != len(atoms):
        raise ValueError("atom outside the pointed strata")
    for a in skew_atoms:
        for anchor in st.skew[a]:
            if any(w not in gl_atoms for w in words[anchor]):
                raise ValueError("skew anchor not generated by grouplike "
                                 "atoms")
    gl_cod = [cod.basis_vector(i) for i in cod_st.grouplike_idx]

    def word_image(word, img):
        v = cod.unit
        for a in word:
            v = cod.multiply(v, img[a])
        return v

    count = 0
    seen = set()
    for assign in itertools.product(range(len(gl_cod)),
                                    repeat=len(gl_atoms)):
        img = {a: gl_cod[gi] for a, gi in zip(gl_atoms, assign)}
        spaces = []
        for a in skew_atoms:
            aa, bb = st.skew[a]
            va = word_image(words[aa], img)
            vb = word_image(words[bb], img)
            spaces.append(skew_primitives(cod, va, vb))
        for coeffs in itertools.product(
                *[_coeff_grid(f, len(s), budget) for s in spaces]):
            count += 1
            if count > budget:
                raise BudgetExceeded("generator-image family exceeds budget")
            full = dict(img)
            for a, space, cs in zip(skew_atoms, spaces, coeffs):
                v = f.zeros(cod.dim)
                for c, w in zip(cs, space):
                    if c:
                        v = (v + c * w) % f.p if f.is_prime \
                            else v + f.coerce(c) * w
                full[a] = v
            mat = f.zeros((cod.dim, dom.dim))
            for i in range(dom.dim):
                mat[:, i] = word_image(words[i], full)
            m = LinMap(dom, cod, mat)
            k = m.key()
            if k in seen:
                continue
            if (is_algebra_map(m) and is_coalgebra_map(m)
                    and is_unitary(m) and is_counitary(m)):
                seen.add(k)
                yield m


def hopf_algebra_maps(dom: HopfAlgebra, cod: HopfAlgebra,
                      budget: Optional[int] = None):
    """All Hopf algebra maps dom -> cod (fixture-complete enumeration)."""
    return [m for m in unitary_algebra_coalgebra_maps(dom, cod, budget)
            if is_hopf_map(m)]


# ---------------------------------------------------------------------------
# the convolution group CoZ^1(H, A)
# ---------------------------------------------------------------------------

@dataclass
class ConvolutionGroupTable:
    elements: list               # LinMaps, canonically sorted
    table: np.ndarray            # table[i, j] = index of elements[i]*elements[j]
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)


def coz1_group(H: HopfAlgebra, A: HopfAlgebra,
               candidates=None) -> ConvolutionGroupTable:
    """The group of unitary cocentral maps H -> A under convolution.

    Filters the candidate family (default: the structured enumeration of
    unitary coalgebra maps) by cocentrality, then closes the table and
    verifies the group axioms and S^2 . r = r for every member.
    """
    if candidates is None:
        candidates = unitary_coalgebra_maps(H, A)
    members = {}
    for m in candidates:
        if is_cocentral(m) and is_unitary(m):
            members.setdefault(m.key(), m)
    elements = sorted(members.values(), key=lambda m: m.key())
    index = {m.key(): i for i, m in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), np.int64)
    for i in range(n):
        for j in range(n):
            prod = convolve(elements[i], elements[j])
            k = prod.key()
            if k not in index:
                raise ValueError("convolution left the candidate family: "
                                 "enumeration incomplete")
            table[i, j] = index[k]
    ident = trivial_map(H, A)
    if ident.key() not in index:
        raise ValueError("convolution identity missing from the family")
    identity = index[ident.key()]
    for i in range(n):
        if not any(table[i, j] == identity for j in range(n)):
            raise ValueError("member without convolution inverse")
    f = H.field
    for m in elements:
        S2r = A.antipode.dot(A.antipode).dot(m.mat)
        if f.is_prime:
            S2r = S2r % f.p
        if not (S2r == m.mat).all():
            raise ValueError("S^2 . r != r for a cocentral member")
    return ConvolutionGroupTable(elements, table, identity)
