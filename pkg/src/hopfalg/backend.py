"""Dispatch layer between the numba kernels and the pure-numpy fallback.

Prime-field data (int64 arrays) runs through ``_kernels_numba`` unless the
environment variable ``HOPF_PURE_NUMPY`` is set to a non-empty value, in
which case the numpy implementations are used.  Object-dtype data
(rationals, cyclotomics) always uses the numpy implementations, which are
exact for any scalar type.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy as knp
from .fields import Field

_numba_mod = None
_numba_failed = False


def _numba():
    global _numba_mod, _numba_failed
    if _numba_mod is None and not _numba_failed:
        try:
            from . import _kernels_numba as knb
            _numba_mod = knb
        except ImportError:
            _numba_failed = True
    return _numba_mod


def use_numba() -> bool:
    if os.environ.get("HOPF_PURE_NUMPY"):
        return False
    return _numba() is not None


def _fast(field: Field):
    if field.is_prime and use_numba():
        return _numba()
    return None


def _idx(arr):
    """Sentinel int64 array -> tuple or None."""
    t = tuple(int(x) for x in np.atleast_1d(arr))
    return None if t[0] < 0 else t


# -- products and actions ----------------------------------------------------

def mulvec(field, mult, u, v):
    k = _fast(field)
    if k is not None:
        return k.mulvec(mult, u, v, field.p)
    return knp.mulvec(mult, u, v, field.p)


def apply_action(field, tab, hvec, avec):
    k = _fast(field)
    if k is not None:
        return k.apply_action(tab, hvec, avec, field.p)
    return knp.apply_action(tab, hvec, avec, field.p)


def convolve_mats(field, F, G, comultD, multC):
    k = _fast(field)
    if k is not None:
        return k.convolve_mats(F, G, comultD, multC, field.p)
    return knp.convolve_mats(F, G, comultD, multC, field.p)


def bicrossed_mult(field, multA, multH, comultA, comultH, left, right):
    k = _fast(field)
    if k is not None:
        return k.bicrossed_mult(multA, multH, comultA, comultH, left, right,
                                field.p)
    return knp.bicrossed_mult(multA, multH, comultA, comultH, left, right,
                              field.p)


# -- axiom checks ------------------------------------------------------------

def assoc_failure(field, mult):
    k = _fast(field)
    if k is not None:
        return _idx(k.assoc_failure(mult, field.p))
    return knp.assoc_failure(mult, field.p)


def unit_failure(field, mult, unit):
    return knp.unit_failure(mult, unit, field.p)


def coassoc_failure(field, comult):
    k = _fast(field)
    if k is not None:
        i = int(k.coassoc_failure(comult, field.p))
        return None if i < 0 else i
    return knp.coassoc_failure(comult, field.p)


def counit_failure(field, comult, counit):
    return knp.counit_failure(comult, counit, field.p)


def bialgebra_failure(field, mult, comult, unit, counit):
    k = _fast(field)
    if k is not None:
        bad = _idx(k.bialgebra_mult_failure(mult, comult, field.p))
        if bad is not None:
            return ("comult-mult",) + bad
        return knp.bialgebra_small_failure(mult, comult, unit, counit,
                                           field.p)
    return knp.bialgebra_failure(mult, comult, unit, counit, field.p)


def antipode_failure(field, mult, comult, antipode, unit, counit):
    k = _fast(field)
    if k is not None:
        p = field.p
        tgt = np.einsum("i,k->ik", counit, unit) % p
        bad = _idx(k.antipode_failure(mult, comult, antipode, tgt, p))
        if bad is None:
            return None
        return ("left" if bad[0] == 0 else "right", bad[1])
    return knp.antipode_failure(mult, comult, antipode, unit, counit, field.p)


def algebra_map_failure(field, M, multD, multC, unitD, unitC):
    p = field.p
    u = M.dot(unitD) % p if p else M.dot(unitD)
    if knp._first_mismatch(u, unitC, 1) is not None:
        return ("unit",)
    k = _fast(field)
    if k is not None:
        bad = _idx(k.algebra_map_failure(M, multD, multC, p))
        return None if bad is None else ("mult",) + bad
    return knp.algebra_map_failure(M, multD, multC, unitD, unitC, p)


def coalgebra_map_failure(field, M, comultD, comultC, counitD, counitC):
    p = field.p
    e = counitC.dot(M) % p if p else counitC.dot(M)
    bad = knp._first_mismatch(e, counitD, 1)
    if bad is not None:
        return ("counit", bad[0])
    k = _fast(field)
    if k is not None:
        i = int(k.coalgebra_map_failure(M, comultD, comultC, p))
        return None if i < 0 else ("comult", i)
    return knp.coalgebra_map_failure(M, comultD, comultC, counitD, counitC, p)


def action_coalgebra_failure(field, tab, comultH, comultA, comultOut,
                             counitH, counitA, counitOut):
    p = field.p
    k = _fast(field)
    if k is not None:
        bad = _idx(k.action_coalgebra_failure(tab, comultH, comultA,
                                              comultOut, p))
        if bad is not None:
            return ("comult",) + bad
        L = np.einsum("ijk,k->ij", tab, counitOut) % p
        R = np.einsum("i,j->ij", counitH, counitA) % p
        bad = knp._first_mismatch(L, R, 2)
        return None if bad is None else ("counit",) + bad
    return knp.action_coalgebra_failure(tab, comultH, comultA, comultOut,
                                        counitH, counitA, counitOut, p)


def left_module_failure(field, left, multH, unitH):
    p = field.p
    k = _fast(field)
    if k is not None:
        U = np.einsum("h,hak->ak", unitH, left) % p
        bad = knp._first_mismatch(U, np.eye(left.shape[1], dtype=np.int64), 1)
        if bad is not None:
            return ("unit", bad[0])
        bad = _idx(k.left_module_failure(left, multH, p))
        return None if bad is None else ("assoc",) + bad
    return knp.left_module_failure(left, multH, unitH, p)


def right_module_failure(field, right, multA, unitA):
    p = field.p
    k = _fast(field)
    if k is not None:
        U = np.einsum("a,hak->hk", unitA, right) % p
        bad = knp._first_mismatch(U, np.eye(right.shape[0], dtype=np.int64), 1)
        if bad is not None:
            return ("unit", bad[0])
        bad = _idx(k.right_module_failure(right, multA, p))
        return None if bad is None else ("assoc",) + bad
    return knp.right_module_failure(right, multA, unitA, p)


def mp1_failure(field, left, right, unitA, unitH, counitA, counitH):
    return knp.mp1_failure(left, right, unitA, unitH, counitA, counitH,
                           field.p)


def mp2_failure(field, left, right, multA, comultH, comultA):
    k = _fast(field)
    if k is not None:
        return _idx(k.mp2_failure(left, right, multA, comultH, comultA,
                                  field.p))
    return knp.mp2_failure(left, right, multA, comultH, comultA, field.p)


def mp3_failure(field, left, right, multH, comultH, comultA):
    k = _fast(field)
    if k is not None:
        return _idx(k.mp3_failure(left, right, multH, comultH, comultA,
                                  field.p))
    return knp.mp3_failure(left, right, multH, comultH, comultA, field.p)


def mp4_failure(field, left, right, comultH, comultA):
    k = _fast(field)
    if k is not None:
        return _idx(k.mp4_failure(left, right, comultH, comultA, field.p))
    return knp.mp4_failure(left, right, comultH, comultA, field.p)


def grouplike_scan(field, comult, counit):
    k = _fast(field)
    if k is not None:
        return k.grouplike_scan(comult, counit, field.p)
    return knp.grouplike_scan(comult, counit, field.p)
