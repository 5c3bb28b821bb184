import numpy as np
import pytest

from hopfalg.fields import PrimeField, RationalField
from hopfalg.hopf import (FiniteGroupTable, dual_group_algebra, group_algebra,
                          sweedler_h4, tensor_hopf)
from hopfalg.linmap import (BudgetExceeded, LinMap, basis_strata,
                            coz1_group, convolve, grouplikes,
                            hopf_algebra_maps, identity_map, is_cocentral,
                            map_predicates, skew_primitives, trivial_map,
                            unitary_coalgebra_maps,
                            unitary_coalgebra_maps_exhaustive)
from hopfalg.exact_linalg import rref
from hopfalg.products import (bicrossed_product, inclusion_A,
                              trivial_matched_pair)


def u_scaling(H4, beta):
    """The Hopf endomorphism of H_4 fixing 1, g and scaling x, gx."""
    f = H4.field
    m = f.eye(4)
    m[2, 2] = f.coerce(beta)
    m[3, 3] = f.coerce(beta)
    return LinMap(H4, H4, m)


def test_convolution_identity(F7):
    H4 = sweedler_h4(F7)
    f = u_scaling(H4, 3)
    e = trivial_map(H4, H4)
    assert convolve(f, e).equal(f)
    assert convolve(e, f).equal(f)


def test_convolution_characters_pointwise(F7):
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F7)
    triv = F7.zeros((1, 2))
    triv[0, :] = 1
    sgn = F7.zeros((1, 2))
    sgn[0, 0], sgn[0, 1] = 1, 6
    one_dim = group_algebra(FiniteGroupTable.cyclic(1), F7)
    chi1 = LinMap(kc2, one_dim, triv)
    chi2 = LinMap(kc2, one_dim, sgn)
    prod = convolve(chi1, chi2)
    # characters multiply pointwise on grouplikes
    assert (prod.mat == sgn).all()
    assert (convolve(chi2, chi2).mat == triv).all()


def test_convolution_antipode_axiom(F7):
    H4 = sweedler_h4(F7)
    S = LinMap(H4, H4, H4.antipode)
    assert convolve(identity_map(H4), S).equal(trivial_map(H4, H4))
    assert convolve(S, identity_map(H4)).equal(trivial_map(H4, H4))


def test_convolution_associative_on_structured_family(F3):
    H4 = sweedler_h4(F3)
    fam = list(unitary_coalgebra_maps(H4, H4))
    assert len(fam) == 1 + 3 ** 4
    sample = fam[::9]
    for a in sample:
        for b in sample:
            for c in sample:
                assert convolve(convolve(a, b), c).equal(
                    convolve(a, convolve(b, c)))


def test_map_predicates(F7):
    H4 = sweedler_h4(F7)
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F7)
    mp = trivial_matched_pair(H4, kc2)
    E = bicrossed_product(mp)
    iA = inclusion_A(mp, E)
    flags = map_predicates(iA)
    assert flags.is_coalgebra_map and flags.is_algebra_map
    assert flags.is_unitary and flags.is_counitary

    zero = LinMap(H4, H4, F7.zeros((4, 4)))
    assert not map_predicates(zero).is_counitary

    triv = trivial_map(H4, H4)
    flags = map_predicates(triv)
    assert flags.is_coalgebra_map and flags.is_algebra_map
    assert flags.is_unitary and flags.is_counitary


def test_is_cocentral(F7):
    H4 = sweedler_h4(F7)
    kc3 = group_algebra(FiniteGroupTable.cyclic(3), F7)
    # any unitary coalgebra map from a cocommutative domain is cocentral
    for r in unitary_coalgebra_maps(kc3, H4):
        assert is_cocentral(r)
    # the nontrivial unitary coalgebra endomap of H4 with u(x) = x is not
    u = u_scaling(H4, 1)
    assert not is_cocentral(u)
    assert is_cocentral(trivial_map(H4, H4))


def test_grouplikes_h4(F3):
    H4 = sweedler_h4(F3)
    gl = grouplikes(H4)
    assert len(gl) == 2
    keys = {tuple(int(x) for x in v) for v in gl}
    assert keys == {(1, 0, 0, 0), (0, 1, 0, 0)}


def test_grouplikes_cyclic(F3):
    kc4 = group_algebra(FiniteGroupTable.cyclic(4), F3)
    assert len(grouplikes(kc4)) == 4


def test_grouplikes_tensor(F3):
    T = tensor_hopf(sweedler_h4(F3),
                    group_algebra(FiniteGroupTable.cyclic(2), F3))
    assert len(grouplikes(T)) == 4


def test_grouplikes_hint_and_budget(F7):
    H4 = sweedler_h4(F7)
    gl = grouplikes(H4, hint=[H4.basis_vector(0), H4.basis_vector(1)])
    assert len(gl) == 2
    with pytest.raises(ValueError):
        grouplikes(H4, hint=[H4.basis_vector(2)])
    with pytest.raises(BudgetExceeded):
        grouplikes(H4, budget=10)
    with pytest.raises(ValueError):
        grouplikes(sweedler_h4(RationalField()))


def subspace_key(vectors, field):
    if not vectors:
        return b""
    M = np.stack(vectors)
    R, _ = rref(M, field)
    return R.tobytes()


def test_skew_primitives(F7):
    H4 = sweedler_h4(F7)
    one, g = H4.basis_vector(0), H4.basis_vector(1)
    assert skew_primitives(H4, one, one) == []
    assert skew_primitives(H4, g, g) == []
    P = skew_primitives(H4, one, g)
    assert len(P) == 2
    # spanned by 1 - g and x
    span = [(one - g) % 7, H4.basis_vector(2)]
    assert subspace_key(P, F7) == subspace_key(span, F7)
    Pg1 = skew_primitives(H4, g, one)
    span = [(one - g) % 7, H4.basis_vector(3)]
    assert subspace_key(Pg1, F7) == subspace_key(span, F7)

    kc5 = group_algebra(FiniteGroupTable.cyclic(5), F7)
    for i in range(5):
        for j in range(5):
            P = skew_primitives(kc5, kc5.basis_vector(i),
                                kc5.basis_vector(j))
            assert len(P) == (0 if i == j else 1)
            for v in P:
                # re-substitution gives zero exactly
                D = kc5.comult_of(v)
                D = (D - np.einsum("s,t->st", v, kc5.basis_vector(i))
                     - np.einsum("s,t->st", kc5.basis_vector(j), v)) % 7
                assert (D == 0).all()
    with pytest.raises(ValueError):
        skew_primitives(H4, H4.basis_vector(2), g)


def test_strata_detection(F7):
    st = basis_strata(sweedler_h4(F7))
    assert st.complete
    assert st.grouplike_idx == (0, 1)
    assert st.skew == {2: (0, 1), 3: (1, 0)}
    # the dual of a group algebra is not pointed in this basis
    A = dual_group_algebra(FiniteGroupTable.cyclic(2), F7)
    assert not basis_strata(A).complete


def test_structured_vs_exhaustive_enumeration(F3):
    kc2 = group_algebra(FiniteGroupTable.cyclic(2), F3)
    H4 = sweedler_h4(F3)
    for dom, cod in [(kc2, kc2), (kc2, H4)]:
        structured = {m.key() for m in unitary_coalgebra_maps(dom, cod)}
        exhaustive = {m.key()
                      for m in unitary_coalgebra_maps_exhaustive(dom, cod)}
        assert structured == exhaustive


def test_coz1_orders(F7):
    H4 = sweedler_h4(F7)
    for n, want in [(2, 2), (3, 4), (4, 8)]:
        kcn = group_algebra(FiniteGroupTable.cyclic(n), F7)
        table = coz1_group(kcn, H4)
        assert table.order == want == 2 ** (n - 1)
    assert coz1_group(H4, H4).order == 1
    for n in (2, 3):
        kcn = group_algebra(FiniteGroupTable.cyclic(n), F7)
        assert coz1_group(H4, kcn).order == 1


def test_coz1_is_a_group(F5):
    H4 = sweedler_h4(F5)
    kc3 = group_algebra(FiniteGroupTable.cyclic(3), F5)
    tab = coz1_group(kc3, H4)
    n = tab.order
    # identity and associativity on the table
    for i in range(n):
        assert tab.table[tab.identity, i] == i
        assert tab.table[i, tab.identity] == i
        for j in range(n):
            for k in range(n):
                assert (tab.table[tab.table[i, j], k]
                        == tab.table[i, tab.table[j, k]])


def test_hopf_map_counts_match_lemma(F5, F7):
    # Aut_Hopf(H4) = k*; Hom into/out of k[C_n] per parity
    H4 = sweedler_h4(F5)
    from hopfalg.exact_linalg import is_invertible
    maps = hopf_algebra_maps(H4, H4)
    assert len(maps) == 1 + 5          # trivial + scalings (beta in F5)
    assert sum(is_invertible(m.mat, F5) for m in maps) == 4
    for n, want in [(3, 1), (5, 1), (2, 2), (4, 2)]:
        field = F7
        kcn = group_algebra(FiniteGroupTable.cyclic(n), field)
        assert len(hopf_algebra_maps(sweedler_h4(field), kcn)) == want
        assert len(hopf_algebra_maps(kcn, sweedler_h4(field))) == want
    # r(c^i) = g^i is the nontrivial map for even n
    kc4 = group_algebra(FiniteGroupTable.cyclic(4), F7)
    maps = hopf_algebra_maps(kc4, sweedler_h4(F7))
    nontriv = [m for m in maps if not m.equal(trivial_map(kc4,
                                                          sweedler_h4(F7)))]
    assert len(nontriv) == 1
    m = nontriv[0]
    H4 = sweedler_h4(F7)
    for i in range(4):
        expect = H4.basis_vector(1) if i % 2 else H4.basis_vector(0)
        assert (m.mat[:, i] == expect).all()


def test_basis_grouplikes_exhaust_in_dividing_characteristic():
    """Completeness of the strata family rests on basis grouplikes being
    all grouplikes; exhaustive scans confirm it even when the
    characteristic divides the group order."""
    from hopfalg.classify import H4nSpec, build_h4n

    for n, p in [(3, 3), (6, 3), (5, 5)]:
        F = PrimeField(p)
        kg = group_algebra(FiniteGroupTable.cyclic(n), F)
        gl = grouplikes(kg, budget=10 ** 9)
        assert {tuple(map(int, v)) for v in gl} \
            == {tuple(map(int, kg.basis_vector(i))) for i in range(n)}
    E = build_h4n(H4nSpec(3, 0, PrimeField(3)))
    st = basis_strata(E)
    gl = grouplikes(E, budget=10 ** 9)
    assert {tuple(map(int, v)) for v in gl} \
        == {tuple(map(int, E.basis_vector(i))) for i in st.grouplike_idx}
