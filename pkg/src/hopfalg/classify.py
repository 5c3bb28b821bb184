"""Construction and classification of the 4n-dimensional quantum groups
built from Sweedler's algebra and a cyclic group.

The generators g, x, c satisfy g^2 = c^n = 1, x^2 = 0, xg = -gx, cg = gc
and cx = w xc for an n-th root of unity w; the isomorphism type is
governed by pure arithmetic in Z_n.  Everything quantitative here is
cross-checked in the test-suite against brute-force morphism
enumeration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fields import Field, nu_order, roots_of_unity
from .hopf import FiniteGroupTable, HopfAlgebra, group_algebra, sweedler_h4
from .linmap import BudgetExceeded, search_budget
from .morphisms import StabilizingPair, check_cohomologous
from .products import (MatchedPair, smash_product, trivial_matched_pair,
                       trivial_right_table, verify_matched_pair)


# ---------------------------------------------------------------------------
# building H_{4n, omega}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class H4nSpec:
    n: int
    t: int
    field: Field

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        nu, _ = nu_order(self.field, self.n)
        if not 0 <= self.t < nu:
            raise ValueError(f"t must lie in [0, {nu}), got {self.t}")

    @property
    def nu(self) -> int:
        return nu_order(self.field, self.n)[0]

    @property
    def xi(self):
        return nu_order(self.field, self.n)[1]

    @property
    def omega(self):
        return self.field.pow(self.xi, self.t)


def omega_left_table(field: Field, n: int, omega):
    """c^i acts on the Sweedler basis (1, g, x, gx) by
    (1, g, w^i x, w^i gx)."""
    if field.pow(omega, n) != field.one:
        raise ValueError("omega is not an n-th root of unity")
    left = field.zeros((n, 4, 4))
    for i in range(n):
        w = field.pow(omega, i)
        left[i, 0, 0] = field.one
        left[i, 1, 1] = field.one
        left[i, 2, 2] = w
        left[i, 3, 3] = w
    return left


def h4n_matched_pair(spec: H4nSpec) -> MatchedPair:
    A = sweedler_h4(spec.field)
    H = group_algebra(FiniteGroupTable.cyclic(spec.n), spec.field)
    left = omega_left_table(spec.field, spec.n, spec.omega)
    return MatchedPair(A, H, left, trivial_right_table(A, H))


def build_h4n(spec: H4nSpec) -> HopfAlgebra:
    """The smash product H_4 # k[C_n] for omega = xi^t; dim 4n, basis
    (1, g, x, gx) major over powers of c."""
    A = sweedler_h4(spec.field)
    H = group_algebra(FiniteGroupTable.cyclic(spec.n), spec.field)
    left = omega_left_table(spec.field, spec.n, spec.omega)
    return smash_product(A, H, left, side="left")


# ---------------------------------------------------------------------------
# matched-pair census for (H_4, k[G])
# ---------------------------------------------------------------------------

# Delta on the Sweedler basis, as (a1, a2) index pairs (coefficients 1)
_H4_DELTA = {0: ((0, 0),), 1: ((1, 1),),
             2: ((2, 0), (1, 2)), 3: ((3, 1), (0, 3))}


def _h4_generator_candidates(field: Field, order: int):
    """Unitary coalgebra endomorphisms phi of H_4 with phi^order = Id.

    Strata family: phi(g) = 1 forces the trivial map eps(.)1 (which never
    powers to the identity), phi(g) = g leaves phi(x) = al(1-g) + be x
    and phi(gx) = ga(1-g) + de gx free.  Prime fields scan the whole
    (al, be, ga, de) grid; infinite fields take be, de over the roots of
    unity with al = ga = 0 (see the census ledger note).
    """
    if field.is_prime:
        p = field.p
        al, be, ga, de = [g.reshape(-1) for g in np.meshgrid(
            *[np.arange(p, dtype=np.int64)] * 4, indexing="ij")]
        N = al.size
        mats = np.zeros((N + 1, 4, 4), np.int64)
        mats[:N, 0, 0] = 1
        mats[:N, 1, 1] = 1
        mats[:N, 0, 2] = al
        mats[:N, 1, 2] = (-al) % p
        mats[:N, 2, 2] = be
        mats[:N, 0, 3] = ga
        mats[:N, 1, 3] = (-ga) % p
        mats[:N, 3, 3] = de
        mats[N, 0, :] = (1, 1, 0, 0)            # the trivial map eps(.)1
        power = np.broadcast_to(np.eye(4, dtype=np.int64),
                                (N + 1, 4, 4)).copy()
        for _ in range(order):
            power = np.matmul(power, mats) % p
        keep = (power == np.eye(4, dtype=np.int64)).all(axis=(1, 2))
        return [mats[i] for i in np.nonzero(keep)[0]]
    out = []
    for be in roots_of_unity(field, order):
        for de in roots_of_unity(field, order):
            m = field.zeros((4, 4))
            m[0, 0] = field.one
            m[1, 1] = field.one
            m[2, 2] = be
            m[3, 3] = de
            power = field.eye(4)
            for _ in range(order):
                power = power.dot(m)
            if (power == field.eye(4)).all():
                out.append(m)
    return out


def _mp4_residual(field, n, kappa, left_rows, rrows, a_idx):
    """L - R of the mp4 axiom at (e_kappa, basis a_idx) in k[G] (x) H_4;
    only the kappa-row of each action enters because e_kappa is
    grouplike."""
    f = field
    L = f.zeros((n, 4))
    R = f.zeros((n, 4))
    for a1, a2 in _H4_DELTA[a_idx]:
        L = L + np.einsum("s,t->st", rrows[a1], left_rows[a2])
        R = R + np.einsum("s,t->st", rrows[a2], left_rows[a1])
    res = L - R
    return res % f.p if f.is_prime else res


def _solve_affine_coeff(field, n, kappa, left_rows, base_rows, var_vec,
                        var_slot, a_idx):
    """Solutions c of _mp4_residual == 0 where rrows[var_slot] =
    c * var_vec; the residual is affine in c.  Returns a list of
    admissible coefficients (possibly 'all') or []."""
    f = field
    rows0 = dict(base_rows)
    rows0[var_slot] = f.zeros(n)
    R0 = _mp4_residual(f, n, kappa, left_rows, rows0, a_idx)
    rows1 = dict(base_rows)
    rows1[var_slot] = var_vec
    R1 = _mp4_residual(f, n, kappa, left_rows, rows1, a_idx) - R0
    if f.is_prime:
        R1 = R1 % f.p
    if (R1 == f.zero).all():
        return "all" if (R0 == f.zero).all() else []
    # solve R0 + c R1 = 0 componentwise and check consistency
    sol = None
    for idx in zip(*np.nonzero(R1 != f.zero)):
        c = f.div(f.neg(R0[idx]), R1[idx])
        if sol is None:
            sol = c
        elif sol != c:
            return []
    rows = dict(base_rows)
    rows[var_slot] = sol * var_vec if not f.is_prime \
        else (sol * var_vec) % f.p
    if (_mp4_residual(f, n, kappa, left_rows, rows, a_idx) == f.zero).all():
        return [sol]
    return []


def _row_key(field, kappa, vecs):
    if field.is_prime:
        return (kappa,) + tuple(v.tobytes() for v in vecs)
    return (kappa,) + tuple(tuple(field.sort_key(x) for x in v)
                            for v in vecs)


def _grid_or_raise(field, sols):
    if sols != "all":
        return sols
    if not field.is_prime:
        raise BudgetExceeded("right-action coefficient unconstrained over "
                             "an infinite field")
    return [field.coerce(c) for c in range(field.p)]


def _right_row_candidates(field, G, kappa, left_rows, budget, caches):
    """Per-element candidates (sigma, lam, mu) for the right action row of
    e_kappa, pruned by mp4 at (e_kappa, x) and (e_kappa, gx).

    The strata give kappa <| g = e_sigma, kappa <| x in the span of
    e_kappa - e_sigma, kappa <| gx in the span of e_sigma - e_kappa.
    The two solves depend only on the x-row (resp. gx-row) of the left
    action, so they are cached on that data.
    """
    f, n = field, G.order
    x_cache, gx_cache = caches
    e = {i: _unit_vec(f, n, i) for i in range(n)}

    kx = _row_key(f, kappa, (left_rows[0], left_rows[1], left_rows[2]))
    if kx not in x_cache:
        per_sigma = []
        for sigma in range(n):
            base = {0: e[kappa], 1: e[sigma], 3: f.zeros(n)}
            if sigma == kappa:
                rows = dict(base)
                rows[2] = f.zeros(n)
                ok = (_mp4_residual(f, n, kappa, left_rows, rows, 2)
                      == f.zero).all()
                per_sigma.append([f.zero] if ok else [])
                continue
            span = e[kappa] - e[sigma]
            if f.is_prime:
                span = span % f.p
            per_sigma.append(_grid_or_raise(f, _solve_affine_coeff(
                f, n, kappa, left_rows, base, span, 2, 2)))
        x_cache[kx] = per_sigma
    lams_by_sigma = x_cache[kx]

    kgx = _row_key(f, kappa, (left_rows[0], left_rows[1], left_rows[3]))
    if kgx not in gx_cache:
        per_sigma = []
        for sigma in range(n):
            base = {0: e[kappa], 1: e[sigma], 2: f.zeros(n)}
            if sigma == kappa:
                rows = dict(base)
                rows[3] = f.zeros(n)
                ok = (_mp4_residual(f, n, kappa, left_rows, rows, 3)
                      == f.zero).all()
                per_sigma.append([f.zero] if ok else [])
                continue
            span = e[sigma] - e[kappa]
            if f.is_prime:
                span = span % f.p
            per_sigma.append(_grid_or_raise(f, _solve_affine_coeff(
                f, n, kappa, left_rows, base, span, 3, 3)))
        gx_cache[kgx] = per_sigma
    mus_by_sigma = gx_cache[kgx]

    out = []
    for sigma in range(n):
        for lam in lams_by_sigma[sigma]:
            for mu in mus_by_sigma[sigma]:
                out.append((sigma, lam, mu))
                if len(out) > budget:
                    raise BudgetExceeded("right-action candidate family "
                                         "exceeds budget")
    return out


def _unit_vec(field, n, i):
    v = field.zeros(n)
    v[i] = field.one
    return v


def enumerate_matched_pairs_h4_group(G: FiniteGroupTable, field: Field,
                                     budget: Optional[int] = None):
    """All matched pairs (H_4, k[G]), discovered by structured search.

    Left actions are generated by unitary coalgebra endomorphisms of H_4
    assigned to group generators (order relations imposed by a matrix
    power filter); right-action rows are built per group element from the
    strata of k[G] and pruned by the mp4 axiom; every surviving table
    pair runs the full matched-pair verifier.  Deterministic order.
    """
    budget = search_budget() if budget is None else budget
    A = sweedler_h4(field)
    H = group_algebra(G, field)
    n = G.order
    if n == 1:
        return [trivial_matched_pair(A, H)]
    gens = list(G.generating_set())
    words = G.words(gens)
    per_gen = {g: _h4_generator_candidates(field, G.element_order(g))
               for g in gens}
    n_combos = 1
    for g in gens:
        n_combos *= len(per_gen[g])
    if n_combos > budget:
        raise BudgetExceeded("left-action generator grid exceeds budget")

    results = []
    seen = set()
    caches = ({}, {})
    for combo in itertools.product(*[range(len(per_gen[g])) for g in gens]):
        chosen = {g: per_gen[g][c] for g, c in zip(gens, combo)}
        left = field.zeros((n, 4, 4))
        for kappa in range(n):
            M = field.eye(4)
            for gi in words[kappa]:
                M = M.dot(chosen[gi])
                if field.is_prime:
                    M = M % field.p
            left[kappa] = M.T                  # row a holds kappa |> a
        per_kappa = []
        feasible = True
        total = 1
        for kappa in range(n):
            if kappa == G.identity:
                continue
            rows = {a: left[kappa, a] for a in range(4)}
            cands = _right_row_candidates(field, G, kappa, rows, budget,
                                          caches)
            if not cands:
                feasible = False
                break
            per_kappa.append((kappa, cands))
            total *= len(cands)
            if total > budget:
                raise BudgetExceeded("right-action combination count "
                                     "exceeds budget")
        if not feasible:
            continue
        for pick in itertools.product(*[c for _, c in per_kappa]):
            right = trivial_right_table(A, H).copy()
            for (kappa, _), (sigma, lam, mu) in zip(per_kappa, pick):
                right[kappa, 0] = _unit_vec(field, n, kappa)
                right[kappa, 1] = _unit_vec(field, n, sigma)
                vx = lam * (_unit_vec(field, n, kappa)
                            - _unit_vec(field, n, sigma))
                vgx = mu * (_unit_vec(field, n, sigma)
                            - _unit_vec(field, n, kappa))
                if field.is_prime:
                    vx, vgx = vx % field.p, vgx % field.p
                right[kappa, 2] = vx
                right[kappa, 3] = vgx
            mp = MatchedPair(A, H, left.copy(), right)
            if verify_matched_pair(mp).ok:
                key = _mp_key(mp)
                if key not in seen:
                    seen.add(key)
                    results.append(mp)
    results.sort(key=_mp_key)
    return results


def _mp_key(mp: MatchedPair):
    f = mp.field
    if f.is_prime:
        return mp.left.tobytes() + mp.right.tobytes()
    return (tuple(f.sort_key(x) for x in mp.left.reshape(-1)),
            tuple(f.sort_key(x) for x in mp.right.reshape(-1)))


def enumerate_matched_pairs_h4_cn(n: int, field: Field,
                                  budget: Optional[int] = None):
    """Matched pairs (H_4, k[C_n]); the census parameterized by the n-th
    roots of unity."""
    return enumerate_matched_pairs_h4_group(FiniteGroupTable.cyclic(n),
                                            field, budget)


# ---------------------------------------------------------------------------
# isomorphism arithmetic
# ---------------------------------------------------------------------------

@dataclass
class IsoVerdict:
    isomorphic: bool
    witness_s: Optional[int]


def iso_criterion(l: int, t: int, n: int, field: Field) -> IsoVerdict:
    """H_{4n, xi^l} = H_{4n, xi^t} as Hopf algebras iff some unit s of
    Z_n satisfies nu | l - ts, or (n and nu both even) 2(l - ts) = nu q
    with q odd.  Returns the smallest witness s."""
    nu, _ = nu_order(field, n)
    l, t = l % nu, t % nu
    both_even = n % 2 == 0 and nu % 2 == 0
    for s in range(n):
        if math.gcd(s, n) != 1:
            continue
        d = l - t * s
        if d % nu == 0:
            return IsoVerdict(True, s)
        if both_even:
            two = 2 * d
            if two % nu == 0 and (two // nu) % 2 != 0:
                return IsoVerdict(True, s)
    return IsoVerdict(False, None)


def _factorization(m: int):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            a = 0
            while m % d == 0:
                m //= d
                a += 1
            out.append((d, a))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


def _divisors(m: int):
    return sorted(d for d in range(1, m + 1) if m % d == 0)


@dataclass
class IsoClasses:
    nu: int
    count: int
    representatives: list        # exponents d of the class reps xi^d

    def canonical(self, t: int) -> int:
        """The representative exponent of the class of xi^t."""
        d = math.gcd(t % self.nu if self.nu else t, self.nu)
        if self.nu % 2 == 1:
            return d
        half = self.nu // 2
        if d == self.nu:
            return half
        if half % d == 0:
            return d
        return d // 2


def iso_classes(n: int, field: Field) -> IsoClasses:
    """Number and representatives of the isomorphism types among
    {H_{4n, w}}: divisors of nu (nu odd) or of nu/2 (nu even), counted by
    the divisor formula on the prime factorization of nu."""
    nu, _ = nu_order(field, n)
    fact = _factorization(nu)
    if nu % 2 == 1:
        count = 1
        for _, a in fact:
            count *= a + 1
        reps = _divisors(nu)
    else:
        count = 1
        for q, a in fact:
            count *= a if q == 2 else a + 1
        reps = _divisors(nu // 2)
    return IsoClasses(nu, count, reps)


def unit_lift(a: int, m: int, n: int) -> int:
    """The smallest s in [0, n) with gcd(s, n) = 1 and s = a (mod m);
    the canonical projection maps U(Z_n) onto U(Z_m), so a lift exists
    whenever m | n and gcd(a, m) = 1 (realized by a finite residue
    scan)."""
    if n % m != 0:
        raise ValueError("m must divide n")
    if math.gcd(a, m) != 1:
        raise ValueError("a must be a unit modulo m")
    for s in range(a % m, n, m) if m > 0 else []:
        if math.gcd(s, n) == 1:
            return s
    raise AssertionError("no unit lift found; unreachable for m | n")


# ---------------------------------------------------------------------------
# automorphism groups
# ---------------------------------------------------------------------------

@dataclass
class ArithmeticProfile:
    n: int
    nu: int
    factorization: list
    units: list
    U_t: list
    V_t: list
    Ut_tilde: list


def arithmetic_profile(n: int, t: int, field: Field) -> ArithmeticProfile:
    nu, _ = nu_order(field, n)
    units = [s for s in range(n) if math.gcd(s, n) == 1]
    U_t = [s for s in units if (t * (s - 1)) % nu == 0]
    V_t = []
    for s in units:
        two = 2 * t * (s - 1)
        if two % nu == 0 and (two // nu) % 2 != 0:
            V_t.append(s)
    prof = ArithmeticProfile(n, nu, _factorization(nu), units, U_t, V_t,
                             sorted(set(U_t) | set(V_t)))
    _check_subgroup(prof.U_t, n, "U_t")
    _check_subgroup(prof.Ut_tilde, n, "Ut_tilde")
    if set(U_t) & set(V_t):
        raise AssertionError("U_t and V_t are not disjoint")
    return prof


def _check_subgroup(elems, n, name):
    s = set(elems)
    if 1 % n not in s:
        raise AssertionError(f"{name} misses the identity")
    for a in elems:
        if pow(a, -1, n) not in s:
            raise AssertionError(f"{name} not closed under inverses")
        for b in elems:
            if (a * b) % n not in s:
                raise AssertionError(f"{name} not closed under products")


@dataclass
class AutProfile:
    profile: ArithmeticProfile
    structure: str
    arithmetic_part: list
    order_over_field: Optional[int]


def aut_group_profile(n: int, t: int, field: Field) -> AutProfile:
    """Aut_Hopf(H_{4n, xi^t}) = k* x U_t(Z_n), or k* x U~_t(Z_n) exactly
    when n and nu are both even."""
    prof = arithmetic_profile(n, t, field)
    both_even = n % 2 == 0 and prof.nu % 2 == 0
    part = prof.Ut_tilde if both_even else prof.U_t
    structure = (f"k* x U~_{t}(Z_{n})" if both_even
                 else f"k* x U_{t}(Z_{n})")
    order = (field.p - 1) * len(part) if field.is_prime else None
    return AutProfile(prof, structure, part, order)


# ---------------------------------------------------------------------------
# the Klein-group survey
# ---------------------------------------------------------------------------

@dataclass
class KleinSurvey:
    pairs: list                  # the discovered matched pairs
    witnesses: list              # StabilizingPair or None per pair
    all_products_trivial: bool


def klein_survey(field: Field, budget: Optional[int] = None) -> KleinSurvey:
    """Matched pairs (H_4, k[C_2 x C_2]) and the check that every product
    is isomorphic to the plain tensor product."""
    K = FiniteGroupTable.klein_four()
    pairs = enumerate_matched_pairs_h4_group(K, field, budget)
    A = sweedler_h4(field)
    H = group_algebra(K, field)
    trivial = trivial_matched_pair(A, H)
    witnesses = []
    for mp in pairs:
        if mp.actions_equal(trivial):
            witnesses.append(StabilizingPair(
                r=_trivial_r(H, A), v=_identity_v(H)))
            continue
        witnesses.append(check_cohomologous(mp, trivial, budget))
    return KleinSurvey(pairs, witnesses,
                       all(w is not None for w in witnesses))


def _trivial_r(H, A):
    from .linmap import trivial_map
    return trivial_map(H, A)


def _identity_v(H):
    from .linmap import identity_map
    return identity_map(H)


# ---------------------------------------------------------------------------
# field helpers for the quantitative grids
# ---------------------------------------------------------------------------

def prime_with_full_roots(n: int, limit: int = 10000) -> int:
    """Smallest odd prime p with p = 1 (mod n), so that nu(n) = n over
    F_p."""
    from .fields import _is_prime
    p = 3
    while p <= limit:
        if _is_prime(p) and p % n == 1 % n:
            return p
        p += 2
    raise ValueError(f"no prime = 1 mod {n} below {limit}")
