"""The numba kernels and the pure-numpy fallback must agree exactly;
the fallback is selected by the HOPF_PURE_NUMPY environment variable."""

import numpy as np
import pytest

import hopfalg.backend as backend
from hopfalg import _kernels_numpy as knp
from hopfalg.fields import PrimeField
from hopfalg.hopf import (FiniteGroupTable, group_algebra, sweedler_h4,
                          verify_hopf_axioms)
from hopfalg.classify import H4nSpec, h4n_matched_pair
from hopfalg.products import drinfeld_double

numba_kernels = pytest.importorskip("hopfalg._kernels_numba")


def test_env_flag_selects_fallback(monkeypatch, F7):
    assert backend.use_numba()
    monkeypatch.setenv("HOPF_PURE_NUMPY", "1")
    assert not backend.use_numba()
    H = sweedler_h4(F7)
    assert verify_hopf_axioms(H).ok
    monkeypatch.delenv("HOPF_PURE_NUMPY")
    assert backend.use_numba()


def test_kernel_agreement(F7):
    mpD, D = drinfeld_double(group_algebra(FiniteGroupTable.cyclic(3), F7))
    p = 7
    assert (numba_kernels.assoc_failure(D.mult, p) == -1).all()
    assert knp.assoc_failure(D.mult, p) is None
    assert (numba_kernels.bialgebra_mult_failure(D.mult, D.comult, p)
            == -1).all()
    tgt = np.einsum("i,k->ik", D.counit, D.unit) % p
    assert (numba_kernels.antipode_failure(D.mult, D.comult, D.antipode,
                                           tgt, p) == -1).all()
    # a corrupted tensor fails identically in both backends
    bad = D.mult.copy()
    bad[1, 2, 3] = (bad[1, 2, 3] + 1) % p
    nb = tuple(int(x) for x in numba_kernels.assoc_failure(bad, p))
    np_ = knp.assoc_failure(bad, p)
    assert nb == np_

    mp = h4n_matched_pair(H4nSpec(4, 1, PrimeField(5)))
    for name in ("mp2_failure", "mp3_failure", "mp4_failure"):
        args = {
            "mp2_failure": (mp.left, mp.right, mp.A.mult, mp.H.comult,
                            mp.A.comult, 5),
            "mp3_failure": (mp.left, mp.right, mp.H.mult, mp.H.comult,
                            mp.A.comult, 5),
            "mp4_failure": (mp.left, mp.right, mp.H.comult, mp.A.comult, 5),
        }[name]
        nb = getattr(numba_kernels, name)(*args)
        np_ = getattr(knp, name)(*args)
        assert (np_ is None) == (nb[0] == -1)

    u, v = D.basis_vector(2), D.basis_vector(5)
    assert (numba_kernels.mulvec(D.mult, u, v, p)
            == knp.mulvec(D.mult, u, v, p)).all()
    bic_nb = numba_kernels.bicrossed_mult(mp.A.mult, mp.H.mult, mp.A.comult,
                                          mp.H.comult, mp.left, mp.right, 5)
    bic_np = knp.bicrossed_mult(mp.A.mult, mp.H.mult, mp.A.comult,
                                mp.H.comult, mp.left, mp.right, 5)
    assert (bic_nb == bic_np).all()


def test_full_pipeline_agreement(monkeypatch, F7):
    """A representative computation gives identical answers on both
    backends."""
    from hopfalg.classify import enumerate_matched_pairs_h4_cn
    fast = [mp.left.tobytes()
            for mp in enumerate_matched_pairs_h4_cn(3, F7)]
    monkeypatch.setenv("HOPF_PURE_NUMPY", "1")
    slow = [mp.left.tobytes()
            for mp in enumerate_matched_pairs_h4_cn(3, F7)]
    assert fast == slow


def test_rref_agreement():
    from hopfalg.exact_linalg import _rref_modp_numpy
    rng = np.random.default_rng(3)
    for shape in [(5, 8), (8, 5), (6, 6)]:
        M = rng.integers(0, 7, size=shape).astype(np.int64)
        R1, piv1 = numba_kernels.rref(M.copy(), 7)
        R2, piv2 = _rref_modp_numpy(M.copy(), 7)
        assert (R1 == R2).all() and (piv1 == piv2).all()
