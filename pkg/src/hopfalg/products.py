"""Matched pairs of Hopf algebras and the products built from them:
bicrossed products, one-sided smash products, Drinfel'd doubles, the
generalized quantum double attached to a skew pairing, the mirror matched
pair, and factorization of a Hopf algebra through two subalgebras.

Action tables are dense: ``left[h, a, :]`` are the coordinates of h acting
on a in A (the left action |>), ``right[h, a, :]`` the coordinates in H of
the right action <|.  All products order their basis left factor major:
basis element (i, j) of A bowtie H has flat index i * H.dim + j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .exact_linalg import inverse, rank
from .fields import Field
from .hopf import CheckResult, HopfAlgebra
from .linmap import LinMap, is_hopf_map

_MP_AXIOMS = ("left-action-coalgebra", "right-action-coalgebra",
              "left-module", "right-module", "mp1", "mp2", "mp3", "mp4")


@dataclass(eq=False)
class MatchedPair:
    A: HopfAlgebra
    H: HopfAlgebra
    left: np.ndarray             # (H.dim, A.dim, A.dim), h |> a
    right: np.ndarray            # (H.dim, A.dim, H.dim), h <| a

    def __post_init__(self):
        if self.A.field != self.H.field:
            raise ValueError("field mismatch in matched pair")
        dA, dH = self.A.dim, self.H.dim
        if self.left.shape != (dH, dA, dA):
            raise ValueError(f"left action table has shape "
                             f"{self.left.shape}, expected {(dH, dA, dA)}")
        if self.right.shape != (dH, dA, dH):
            raise ValueError(f"right action table has shape "
                             f"{self.right.shape}, expected {(dH, dA, dH)}")

    @property
    def field(self) -> Field:
        return self.A.field

    def act_left(self, hvec, avec):
        return backend.apply_action(self.field, self.left, hvec, avec)

    def act_right(self, hvec, avec):
        return backend.apply_action(self.field, self.right, hvec, avec)

    def actions_equal(self, other: "MatchedPair") -> bool:
        return bool((self.left == other.left).all()
                    and (self.right == other.right).all())

    def has_trivial_right(self) -> bool:
        return bool((self.right == trivial_right_table(self.A, self.H)).all())

    def has_trivial_left(self) -> bool:
        return bool((self.left == trivial_left_table(self.A, self.H)).all())


def trivial_left_table(A: HopfAlgebra, H: HopfAlgebra):
    t = np.einsum("h,ak->hak", H.counit, A.field.eye(A.dim))
    return t % A.field.p if A.field.is_prime else t


def trivial_right_table(A: HopfAlgebra, H: HopfAlgebra):
    t = np.einsum("a,hk->hak", A.counit, H.field.eye(H.dim))
    return t % A.field.p if A.field.is_prime else t


def trivial_matched_pair(A: HopfAlgebra, H: HopfAlgebra) -> MatchedPair:
    return MatchedPair(A, H, trivial_left_table(A, H),
                       trivial_right_table(A, H))


@dataclass
class MatchedPairReport:
    checks: list                 # (axiom name, CheckResult)

    @property
    def ok(self) -> bool:
        return all(res.ok for _, res in self.checks)

    @property
    def first_failure(self):
        for name, res in self.checks:
            if not res.ok:
                return name, res.detail
        return None

    def lines(self):
        return [f"{name}: " + ("ok" if res.ok else f"FAIL {res.detail}")
                for name, res in self.checks]


def verify_matched_pair(mp: MatchedPair) -> MatchedPairReport:
    """Exhaustive check of the matched-pair axioms on basis tuples,
    reporting the first failing axiom with indices."""
    A, H, f = mp.A, mp.H, mp.field
    checks = []

    def res(bad, fmt):
        return CheckResult(True) if bad is None else CheckResult(False,
                                                                 fmt(bad))

    bad = backend.action_coalgebra_failure(
        f, mp.left, H.comult, A.comult, A.comult, H.counit, A.counit,
        A.counit)
    checks.append(("left-action-coalgebra", res(
        bad, lambda b: f"{b[0]} at ({H.labels[b[1]]},{A.labels[b[2]]})")))

    bad = backend.action_coalgebra_failure(
        f, mp.right, H.comult, A.comult, H.comult, H.counit, A.counit,
        H.counit)
    checks.append(("right-action-coalgebra", res(
        bad, lambda b: f"{b[0]} at ({H.labels[b[1]]},{A.labels[b[2]]})")))

    bad = backend.left_module_failure(f, mp.left, H.mult, H.unit)
    checks.append(("left-module", res(
        bad, lambda b: f"{b[0]} at {b[1:]}")))

    bad = backend.right_module_failure(f, mp.right, A.mult, A.unit)
    checks.append(("right-module", res(
        bad, lambda b: f"{b[0]} at {b[1:]}")))

    bad = backend.mp1_failure(f, mp.left, mp.right, A.unit, H.unit,
                              A.counit, H.counit)
    checks.append(("mp1", res(
        bad, lambda b: f"{b[0]} normalization at index {b[1]}")))

    bad = backend.mp2_failure(f, mp.left, mp.right, A.mult, H.comult,
                              A.comult)
    checks.append(("mp2", res(
        bad,
        lambda b: f"({H.labels[b[0]]},{A.labels[b[1]]},{A.labels[b[2]]})")))

    bad = backend.mp3_failure(f, mp.left, mp.right, H.mult, H.comult,
                              A.comult)
    checks.append(("mp3", res(
        bad,
        lambda b: f"({H.labels[b[0]]},{H.labels[b[1]]},{A.labels[b[2]]})")))

    bad = backend.mp4_failure(f, mp.left, mp.right, H.comult, A.comult)
    checks.append(("mp4", res(
        bad, lambda b: f"({H.labels[b[0]]},{A.labels[b[1]]})")))

    return MatchedPairReport(checks)


# ---------------------------------------------------------------------------
# bicrossed product
# ---------------------------------------------------------------------------

def _product_labels(A, H):
    out = []
    for la in A.labels:
        for lh in H.labels:
            if la == "1" and lh == "1":
                out.append("1")
            elif la == "1":
                out.append(lh)
            elif lh == "1":
                out.append(la)
            else:
                out.append(f"{la}#{lh}")
    return tuple(out)


def _product_presentation(A: HopfAlgebra, H: HopfAlgebra):
    from .hopf import _tensor_presentation
    return _tensor_presentation(A, H)


def bicrossed_product(mp: MatchedPair, check: bool = True) -> HopfAlgebra:
    """A bowtie H with the twisted multiplication
    (a # h)(c # g) = a (h1 |> c1) # (h2 <| c2) g, tensor-product coalgebra,
    and the matched-pair antipode."""
    if check:
        rep = verify_matched_pair(mp)
        if not rep.ok:
            name, detail = rep.first_failure
            raise ValueError(f"matched pair axiom {name} fails: {detail}")
    A, H, f = mp.A, mp.H, mp.field
    dA, dH, d = A.dim, H.dim, A.dim * H.dim

    mult = backend.bicrossed_mult(f, A.mult, H.mult, A.comult, H.comult,
                                  mp.left, mp.right)
    comult = np.einsum("ikm,jln->ijklmn", A.comult,
                       H.comult).reshape(d, d, d)
    unit = np.einsum("i,j->ij", A.unit, H.unit).reshape(d)
    counit = np.einsum("i,j->ij", A.counit, H.counit).reshape(d)
    # S(a # h) = S_H(h2) |> S_A(a2)  #  S_H(h1) <| S_A(a1)
    X = np.einsum("sh,ta,stn->nha", H.antipode, A.antipode, mp.left)
    Y = np.einsum("sh,ta,stq->qha", H.antipode, A.antipode, mp.right)
    if f.is_prime:
        comult, unit, counit = comult % f.p, unit % f.p, counit % f.p
        X, Y = X % f.p, Y % f.p
    anti = np.einsum("iab,jcd,ndb,qca->nqij", A.comult, H.comult, X, Y,
                     optimize=True)
    if f.is_prime:
        anti = anti % f.p
    anti = anti.reshape(d, d)

    return HopfAlgebra(f, _product_labels(A, H), mult, unit, comult, counit,
                       anti, presentation=_product_presentation(A, H))


def inclusion_A(mp: MatchedPair, E: HopfAlgebra) -> LinMap:
    """i_A : A -> A bowtie H, a -> a # 1."""
    A, H, f = mp.A, mp.H, mp.field
    m = f.zeros((E.dim, A.dim))
    for i in range(A.dim):
        m[:, i] = np.kron(A.basis_vector(i), H.unit)
    return LinMap(A, E, m % f.p if f.is_prime else m)


def inclusion_H(mp: MatchedPair, E: HopfAlgebra) -> LinMap:
    """i_H : H -> A bowtie H, h -> 1 # h."""
    A, H, f = mp.A, mp.H, mp.field
    m = f.zeros((E.dim, H.dim))
    for j in range(H.dim):
        m[:, j] = np.kron(A.unit, H.basis_vector(j))
    return LinMap(H, E, m % f.p if f.is_prime else m)


# ---------------------------------------------------------------------------
# smash products
# ---------------------------------------------------------------------------

def _smash_symmetry_failure(mp: MatchedPair, side: str):
    """The extra compatibility a one-sided smash product needs."""
    f, A, H = mp.field, mp.A, mp.H
    if side == "left":
        # g1 (x) (g2 |> a) = g2 (x) (g1 |> a)
        L = np.einsum("gxy,yak->gxak", H.comult, mp.left)
        R = np.einsum("gxy,xak->gyak", H.comult, mp.left)
    else:
        # (g <| a1) (x) a2 = (g <| a2) (x) a1
        L = np.einsum("acd,gck->gakd", A.comult, mp.right)
        R = np.einsum("acd,gdk->gakc", A.comult, mp.right)
    if f.is_prime:
        L, R = L % f.p, R % f.p
    bad = np.argwhere(L != R)
    return None if bad.size == 0 else tuple(int(x) for x in bad[0][:2])


def smash_product(A: HopfAlgebra, H: HopfAlgebra, action: np.ndarray,
                  side: str = "left") -> HopfAlgebra:
    """One-sided smash product: the given action with the other action
    trivial.  Checks the module-coalgebra/-algebra axioms plus the
    symmetry compatibility before building."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if side == "left":
        mp = MatchedPair(A, H, action, trivial_right_table(A, H))
    else:
        mp = MatchedPair(A, H, trivial_left_table(A, H), action)
    bad = _smash_symmetry_failure(mp, side)
    if bad is not None:
        raise ValueError(
            f"smash compatibility fails at ({mp.H.labels[bad[0]]},"
            f"{mp.A.labels[bad[1]]})")
    rep = verify_matched_pair(mp)
    if not rep.ok:
        name, detail = rep.first_failure
        raise ValueError(f"smash product axiom {name} fails: {detail}")
    return bicrossed_product(mp, check=False)


def smash_matched_pair(A: HopfAlgebra, H: HopfAlgebra, action: np.ndarray,
                       side: str = "left") -> MatchedPair:
    if side == "left":
        return MatchedPair(A, H, action, trivial_right_table(A, H))
    return MatchedPair(A, H, trivial_left_table(A, H), action)


# ---------------------------------------------------------------------------
# Drinfel'd double
# ---------------------------------------------------------------------------

def drinfeld_double(H: HopfAlgebra):
    """D(H) = (H*)^cop bowtie H with the canonical actions.

    Returns (matched pair, D(H)); the matched pair is verified and the
    product passes the Hopf axioms.
    """
    from .hopf import dual_hopf, op_cop

    Sinv = inverse(H.antipode, H.field)
    if Sinv is None:
        raise ValueError("antipode is singular; Drinfel'd double undefined")
    A = op_cop(dual_hopf(H), flip_mult=False, flip_comult=True)
    f = H.field
    D2 = np.einsum("ium,mvw->iuvw", H.comult, H.comult)
    if f.is_prime:
        D2 = D2 % f.p
    # h <| h* = <h*, S^-1(h3) h1> h2
    right = np.einsum("iuvw,zw,zuj->ijv", D2, Sinv, H.mult, optimize=True)
    # (h |> h*)(b_k) = <h*, S^-1(h2) b_k h1>
    left = np.einsum("iuv,zv,zkm,muj->ijk", H.comult, Sinv, H.mult, H.mult,
                     optimize=True)
    if f.is_prime:
        right, left = right % f.p, left % f.p
    mp = MatchedPair(A, H, left, right)
    rep = verify_matched_pair(mp)
    if not rep.ok:
        name, detail = rep.first_failure
        raise AssertionError(f"double matched pair fails {name}: {detail}")
    return mp, bicrossed_product(mp, check=False)


def double_group_matched_pair(Gtab, field: Field):
    """D(k[G]) actions in closed form: g |> e_h = e_{g h g^-1}, right
    action trivial (used as an independent cross-check)."""
    from .hopf import dual_group_algebra, group_algebra

    H = group_algebra(Gtab, field)
    A = dual_group_algebra(Gtab, field, co_opposite=True)
    n = Gtab.order
    left = field.zeros((n, n, n))
    for g in range(n):
        for h in range(n):
            left[g, h, Gtab.conjugate(g, h)] = field.one
    return MatchedPair(A, H, left, trivial_right_table(A, H))


# ---------------------------------------------------------------------------
# skew pairings and the generalized quantum double
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class SkewPairing:
    A: HopfAlgebra
    H: HopfAlgebra
    lam: np.ndarray              # (H.dim, A.dim), lambda(h, a)
    lam_inv: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.lam.shape != (self.H.dim, self.A.dim):
            raise ValueError("pairing matrix has wrong shape")
        if self.lam_inv is None:
            self.lam_inv = convolution_inverse_pairing(self.A, self.H,
                                                       self.lam)

    @property
    def field(self):
        return self.A.field


def convolution_inverse_pairing(A: HopfAlgebra, H: HopfAlgebra, lam):
    """Convolution inverse of a functional on H (x) A, by an exact linear
    solve; raises if the pairing is not convolution invertible."""
    from .exact_linalg import solve

    f = A.field
    dH, dA = H.dim, A.dim
    M = np.einsum("ist,juv,su->ijtv", H.comult, A.comult, lam,
                  optimize=True)
    if f.is_prime:
        M = M % f.p
    M = M.reshape(dH * dA, dH * dA)
    rhs = np.einsum("i,j->ij", H.counit, A.counit).reshape(-1)
    if f.is_prime:
        rhs = rhs % f.p
    mu = solve(M, rhs, f)
    if mu is None:
        raise ValueError("pairing is not convolution invertible")
    mu = mu.reshape(dH, dA)
    # two-sided check: mu * lam = eps as well
    other = np.einsum("ist,juv,su,tv->ij", H.comult, A.comult, mu, lam,
                      optimize=True)
    eps = np.einsum("i,j->ij", H.counit, A.counit)
    if f.is_prime:
        other, eps = other % f.p, eps % f.p
    if not (other == eps).all():
        raise ValueError("pairing has no two-sided convolution inverse")
    return mu


def skew_pairing_axiom_failure(sp: SkewPairing):
    """The adopted skew-pairing convention:
    lam(hg, a) = lam(h, a1) lam(g, a2); lam(h, ab) = lam(h2, a) lam(h1, b);
    lam(1, a) = eps(a); lam(h, 1) = eps(h).  The matched-pair verifier, not
    this check, is what certifies a pairing's usability."""
    A, H, f, lam = sp.A, sp.H, sp.field, sp.lam
    L = np.einsum("hgm,ma->hga", H.mult, lam)
    R = np.einsum("acd,hc,gd->hga", A.comult, lam, lam, optimize=True)
    if f.is_prime:
        L, R = L % f.p, R % f.p
    if not (L == R).all():
        return "multiplicative-in-H"
    L = np.einsum("abm,hm->hab", A.mult, lam)
    R = np.einsum("hst,ta,sb->hab", H.comult, lam, lam, optimize=True)
    if f.is_prime:
        L, R = L % f.p, R % f.p
    if not (L == R).all():
        return "multiplicative-in-A"
    u = np.einsum("h,ha->a", H.unit, lam)
    v = lam.dot(A.unit)
    if f.is_prime:
        u, v = u % f.p, v % f.p
    if not (u == A.counit).all():
        return "unit-in-H"
    if not (v == H.counit).all():
        return "unit-in-A"
    return None


def double_from_skew_pairing(sp: SkewPairing):
    """Matched pair and generalized quantum double D_lambda(A, H) from a
    convolution-invertible pairing."""
    A, H, f = sp.A, sp.H, sp.field
    lam, linv = sp.lam, sp.lam_inv
    D2H = np.einsum("ium,mvw->iuvw", H.comult, H.comult)
    D2A = np.einsum("jum,mvw->juvw", A.comult, A.comult)
    if f.is_prime:
        D2H, D2A = D2H % f.p, D2A % f.p
    right = np.einsum("iuvw,jab,ua,wb->ijv", D2H, A.comult, linv, lam,
                      optimize=True)
    left = np.einsum("iuv,jabc,ua,vc->ijb", H.comult, D2A, linv, lam,
                     optimize=True)
    if f.is_prime:
        right, left = right % f.p, left % f.p
    mp = MatchedPair(A, H, left, right)
    rep = verify_matched_pair(mp)
    if not rep.ok:
        name, detail = rep.first_failure
        raise ValueError(f"pairing does not induce a matched pair "
                         f"({name} fails: {detail})")
    return mp, bicrossed_product(mp, check=False)


# ---------------------------------------------------------------------------
# mirror matched pair
# ---------------------------------------------------------------------------

def mirror_pair(mp: MatchedPair):
    """The matched pair on (H, A) induced by (A, H) when both antipodes
    are bijective, together with the verified Hopf isomorphism
    psi = phi . S : A bowtie H -> H bowtie' A, phi(a (x) h) =
    S_H(h) (x) S_A(a).

    The mirrored actions are extracted from the swapped factorization
    E = i_H(H) i_A(A) by the counit recipe (one exact linear solve);
    bijectivity of the antipode makes the swapped multiplication map
    invertible.
    """
    A, H, f = mp.A, mp.H, mp.field
    if inverse(A.antipode, f) is None or inverse(H.antipode, f) is None:
        raise ValueError("mirror pair needs bijective antipodes")
    E = bicrossed_product(mp, check=False)
    mirrored = factorize(E, iA=inclusion_H(mp, E), iH=inclusion_A(mp, E))
    E2 = bicrossed_product(mirrored, check=False)
    phi = _mirror_phi(f, A, H)
    psi = phi.dot(E.antipode)
    if f.is_prime:
        psi = psi % f.p
    iso = LinMap(E, E2, psi)
    if not is_hopf_map(iso):
        raise AssertionError("mirror isomorphism is not a Hopf map")
    if rank(psi, f) != E.dim:
        raise AssertionError("mirror isomorphism is not bijective")
    return mirrored, iso


def _mirror_phi(f, A, H):
    """phi(a_i (x) h_j) = S_H(h_j) (x) S_A(a_i) as a matrix into the
    H-major basis of H bowtie' A."""
    dA, dH = A.dim, H.dim
    phi = np.einsum("sj,ti->stij", H.antipode, A.antipode)
    if f.is_prime:
        phi = phi % f.p
    return phi.reshape(dH * dA, dA * dH)


# ---------------------------------------------------------------------------
# factorization (Majid's characterization)
# ---------------------------------------------------------------------------

def factorize(E: HopfAlgebra, iA: LinMap, iH: LinMap) -> MatchedPair:
    """Recover the matched pair from a factorization E = i_A(A) i_H(H).

    The actions are extracted by applying the counits to the unique
    expression of j(h) i(a) in the A (x) H coordinates.
    """
    A, H, f = iA.dom, iH.dom, E.field
    if iA.cod is not E or iH.cod is not E:
        if iA.cod.dim != E.dim or iH.cod.dim != E.dim:
            raise ValueError("inclusion codomain mismatch")
    if not is_hopf_map(iA) or not is_hopf_map(iH):
        raise ValueError("inclusions must be Hopf algebra maps")
    if rank(iA.mat, f) != A.dim or rank(iH.mat, f) != H.dim:
        raise ValueError("inclusions must be injective")
    dA, dH = A.dim, H.dim
    if E.dim != dA * dH:
        raise ValueError("dimensions do not multiply up; no factorization")
    M = f.zeros((E.dim, dA * dH))
    for i in range(dA):
        for j in range(dH):
            M[:, i * dH + j] = E.multiply(iA.mat[:, i], iH.mat[:, j])
    Minv = inverse(M, f)
    if Minv is None:
        raise ValueError("multiplication map A (x) H -> E is singular; "
                         "E does not factorize through the images")
    left = f.zeros((dH, dA, dA))
    right = f.zeros((dH, dA, dH))
    for j in range(dH):
        for i in range(dA):
            z = E.multiply(iH.mat[:, j], iA.mat[:, i])
            w = Minv.dot(z)
            if f.is_prime:
                w = w % f.p
            w = w.reshape(dA, dH)
            right[j, i] = A.counit.dot(w) % f.p if f.is_prime \
                else A.counit.dot(w)
            left[j, i] = w.dot(H.counit) % f.p if f.is_prime \
                else w.dot(H.counit)
    mp = MatchedPair(A, H, left, right)
    rep = verify_matched_pair(mp)
    if not rep.ok:
        name, detail = rep.first_failure
        raise ValueError(f"extracted actions fail {name}: {detail}")
    EB = bicrossed_product(mp, check=False)
    mult_map = LinMap(EB, E, M)
    if not is_hopf_map(mult_map):
        raise AssertionError("multiplication map is not a Hopf isomorphism")
    return mp
