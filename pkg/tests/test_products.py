import numpy as np
import pytest

from hopfalg.classify import H4nSpec, h4n_matched_pair, omega_left_table
from hopfalg.fields import nu_order
from hopfalg.hopf import (FiniteGroupTable, dual_group_algebra,
                          group_algebra, sweedler_h4, tensor_hopf,
                          verify_hopf_axioms)
from hopfalg.linmap import LinMap, is_hopf_map, map_predicates
from hopfalg.products import (MatchedPair, SkewPairing, bicrossed_product,
                              double_from_skew_pairing,
                              double_group_matched_pair, drinfeld_double,
                              factorize, inclusion_A, inclusion_H,
                              mirror_pair, skew_pairing_axiom_failure,
                              smash_product, trivial_matched_pair,
                              trivial_left_table, trivial_right_table,
                              verify_matched_pair)


def test_trivial_actions_always_match(F5, F7):
    cases = [
        (sweedler_h4(F5), group_algebra(FiniteGroupTable.cyclic(3), F5)),
        (group_algebra(FiniteGroupTable.cyclic(2), F7), sweedler_h4(F7)),
        (sweedler_h4(F7), group_algebra(FiniteGroupTable.klein_four(), F7)),
    ]
    for A, H in cases:
        rep = verify_matched_pair(trivial_matched_pair(A, H))
        assert rep.ok, rep.lines()


def test_omega_pair_verifies(F7):
    mp = h4n_matched_pair(H4nSpec(3, 1, F7))
    assert verify_matched_pair(mp).ok


def test_bad_omega_fails_at_module_axiom(F7):
    # omega = 3 is not a cube root of unity over F7, so c^3 |> x != x
    H4 = sweedler_h4(F7)
    kc3 = group_algebra(FiniteGroupTable.cyclic(3), F7)
    left = F7.zeros((3, 4, 4))
    for i in range(3):
        w = pow(3, i, 7)
        left[i, 0, 0] = 1
        left[i, 1, 1] = 1
        left[i, 2, 2] = w
        left[i, 3, 3] = w
    mp = MatchedPair(H4, kc3, left, trivial_right_table(H4, kc3))
    rep = verify_matched_pair(mp)
    assert not rep.ok
    assert rep.first_failure[0] == "left-module"


def test_bicrossed_trivial_is_tensor(F7):
    H4 = sweedler_h4(F7)
    kc3 = group_algebra(FiniteGroupTable.cyclic(3), F7)
    E = bicrossed_product(trivial_matched_pair(H4, kc3))
    T = tensor_hopf(H4, kc3)
    assert (E.mult == T.mult).all() and (E.comult == T.comult).all()
    assert (E.antipode == T.antipode).all()


def test_bicrossed_omega_relation(F7):
    nu, xi = nu_order(F7, 3)
    mp = h4n_matched_pair(H4nSpec(3, 1, F7))
    E = bicrossed_product(mp)
    assert verify_hopf_axioms(E).ok
    c = E.basis_vector(1)        # 1 # c
    x = E.basis_vector(2 * 3)    # x # 1
    cx = E.multiply(c, x)
    xc = E.multiply(x, c)
    assert (cx == (xi * xc) % 7).all()


def test_double_product_formula(F7):
    """(e_h # g)(e_x # y) = delta_{h, g x g^-1} e_h # g y, checked
    entry-for-entry against an independently built tensor."""
    G = FiniteGroupTable.symmetric(3)
    mp, D = drinfeld_double(group_algebra(G, F7))
    n = G.order
    expected = F7.zeros((D.dim, D.dim, D.dim))
    for h in range(n):
        for g in range(n):
            for x in range(n):
                for y in range(n):
                    if h == G.conjugate(g, x):
                        expected[h * n + g, x * n + y,
                                 h * n + G.table[g, y]] = 1
    assert (D.mult == expected).all()
    # comultiplication: Delta(e_h # g) = sum_x (e_x # g) (x) (e_{h x^-1} # g)
    exp_c = F7.zeros((D.dim, D.dim, D.dim))
    for h in range(n):
        for g in range(n):
            for x in range(n):
                exp_c[h * n + g, x * n + g,
                      G.table[h, G.inverse[x]] * n + g] = 1
    assert (D.comult == exp_c).all()


@pytest.mark.parametrize("make,dim", [
    (lambda f: group_algebra(FiniteGroupTable.cyclic(2), f), 4),
    (lambda f: group_algebra(FiniteGroupTable.cyclic(3), f), 9),
    (lambda f: sweedler_h4(f), 16),
])
def test_doubles_pass_axioms(F7, make, dim):
    mp, D = drinfeld_double(make(F7))
    assert D.dim == dim
    assert verify_hopf_axioms(D).ok


def test_double_group_actions_are_conjugation(F7):
    for G in (FiniteGroupTable.cyclic(3), FiniteGroupTable.symmetric(3)):
        mp, _ = drinfeld_double(group_algebra(G, F7))
        assert mp.actions_equal(double_group_matched_pair(G, F7))


def test_smash_left_equals_h4n(F7):
    H4 = sweedler_h4(F7)
    kc3 = group_algebra(FiniteGroupTable.cyclic(3), F7)
    nu, xi = nu_order(F7, 3)
    left = omega_left_table(F7, 3, xi)
    E = smash_product(H4, kc3, left, side="left")
    E2 = bicrossed_product(MatchedPair(H4, kc3, left,
                                       trivial_right_table(H4, kc3)))
    assert E.structure_equal(E2)


def test_smash_right_version(F7):
    # mirror of an omega pair has trivial |>' and nontrivial <|'
    mp = h4n_matched_pair(H4nSpec(3, 1, F7))
    mirrored, _ = mirror_pair(mp)
    assert mirrored.has_trivial_left()
    assert not mirrored.has_trivial_right()
    E = smash_product(mirrored.A, mirrored.H, mirrored.right, side="right")
    assert E.structure_equal(bicrossed_product(mirrored, check=False))


def test_smash_trivial_action_is_tensor(F5):
    H4 = sweedler_h4(F5)
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F5)
    E = smash_product(H4, kc2, trivial_left_table(H4, kc2), side="left")
    T = tensor_hopf(H4, kc2)
    assert (E.mult == T.mult).all()


def test_smash_rejects_bad_action(F7):
    H4 = sweedler_h4(F7)
    kc3 = group_algebra(FiniteGroupTable.cyclic(3), F7)
    left = F7.zeros((3, 4, 4))
    for i in range(3):
        w = pow(3, i, 7)
        for a, s in ((0, 1), (1, 1), (2, w), (3, w)):
            left[i, a, a] = s
    with pytest.raises(ValueError):
        smash_product(H4, kc3, left, side="left")


def test_skew_pairing_trivial_gives_tensor(F7):
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F7)
    mpD, D = drinfeld_double(kc2)
    A = mpD.A
    lam0 = np.einsum("h,a->ha", kc2.counit, A.counit) % 7
    mp, E = double_from_skew_pairing(SkewPairing(A=A, H=kc2, lam=lam0))
    assert mp.has_trivial_left() and mp.has_trivial_right()


@pytest.mark.parametrize("n", [2, 3])
def test_evaluation_pairing_reproduces_double(F7, n):
    G = FiniteGroupTable.cyclic(n)
    kg = group_algebra(G, F7)
    mpD, D = drinfeld_double(kg)
    sp = SkewPairing(A=mpD.A, H=kg, lam=F7.eye(n))
    assert skew_pairing_axiom_failure(sp) is None
    mp, E = double_from_skew_pairing(sp)
    assert mp.actions_equal(mpD)
    assert E.structure_equal(D)
    # lambda(h, a) = lambda(S h, S a)
    L = (kg.antipode.T @ sp.lam @ mpD.A.antipode) % 7
    assert (L == sp.lam).all()


def test_skew_pairing_rejects_noninvertible(F7):
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F7)
    A = dual_group_algebra(FiniteGroupTable.cyclic(2), F7, co_opposite=True)
    with pytest.raises(ValueError):
        SkewPairing(A=A, H=kc2, lam=F7.zeros((2, 2)))


def test_mirror_trivial(F7):
    H4 = sweedler_h4(F7)
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F7)
    mirrored, iso = mirror_pair(trivial_matched_pair(H4, kc2))
    assert mirrored.has_trivial_left() and mirrored.has_trivial_right()
    assert is_hopf_map(iso)


def test_mirror_omega_pair(F7):
    mp = h4n_matched_pair(H4nSpec(3, 1, F7))
    mirrored, iso = mirror_pair(mp)
    assert verify_matched_pair(mirrored).ok
    assert not mirrored.has_trivial_right()
    # three independent checks: algebra map, coalgebra map, bijective
    flags = map_predicates(iso)
    assert flags.is_algebra_map and flags.is_coalgebra_map
    from hopfalg.exact_linalg import rank
    assert rank(iso.mat, F7) == iso.dom.dim
    assert is_hopf_map(iso)
    # mirror of mirror composes to a Hopf isomorphism with the original
    m2, iso2 = mirror_pair(mirrored)
    comp = iso2.compose(iso)
    assert is_hopf_map(comp)
    from hopfalg.exact_linalg import is_invertible
    assert is_invertible(comp.mat, F7)


def test_factorize_roundtrips(F7):
    cases = [trivial_matched_pair(
        sweedler_h4(F7), group_algebra(FiniteGroupTable.cyclic(2), F7)),
        h4n_matched_pair(H4nSpec(3, 1, F7)),
        drinfeld_double(group_algebra(FiniteGroupTable.cyclic(2), F7))[0]]
    for mp in cases:
        E = bicrossed_product(mp, check=False)
        rec = factorize(E, inclusion_A(mp, E), inclusion_H(mp, E))
        assert rec.actions_equal(mp)


def test_factorize_recovers_conjugation(F7):
    G = FiniteGroupTable.cyclic(2)
    mp, D = drinfeld_double(group_algebra(G, F7))
    rec = factorize(D, inclusion_A(mp, D), inclusion_H(mp, D))
    assert rec.actions_equal(double_group_matched_pair(G, F7))


def test_factorize_rejects_bad_inclusions(F7):
    H4 = sweedler_h4(F7)
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F7)
    mp = trivial_matched_pair(H4, kc2)
    E = bicrossed_product(mp)
    bad = LinMap(H4, E, F7.zeros((8, 4)))
    with pytest.raises(ValueError):
        factorize(E, bad, inclusion_H(mp, E))


def test_antipode_formula_on_product(F7):
    """S(a # h) = S_H(h2) |> S_A(a2) # S_H(h1) <| S_A(a1), spot-checked
    symbolically on x # c in H_{12, omega}."""
    nu, xi = nu_order(F7, 3)
    mp = h4n_matched_pair(H4nSpec(3, 1, F7))
    E = bicrossed_product(mp, check=False)
    # S(x # c) = S(1 # c) S(x # 1) = (1 # c^2)(S(x) # 1)
    # = c^2 |> (-gx) # c^2 = -w^2 gx # c^2
    idx = 2 * 3 + 1              # x # c
    expected = F7.zeros(12)
    expected[3 * 3 + 2] = (-pow(int(xi), 2, 7)) % 7    # gx # c^2
    assert (E.antipode[:, idx] == expected).all()
