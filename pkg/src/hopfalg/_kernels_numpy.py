"""Vectorized numpy implementations of the hot tensor kernels.

Every function takes structure-constant arrays plus a modulus ``p``;
``p == 0`` means "no reduction" and is used for the exact object-dtype
fields (rationals, cyclotomics), where numpy dispatches to the scalars'
own arithmetic.  ``p > 0`` arrays are int64 with entries in [0, p).

Index conventions (shared with the numba twins in ``_kernels_numba``):

* ``mult[i, j, k]``    -- coefficient of b_k in b_i * b_j
* ``comult[i, s, t]``  -- coefficient of b_s (x) b_t in Delta(b_i)
* a linear map is a (cod_dim, dom_dim) matrix acting by ``M @ v``
* an action table ``tab[h, a, k]`` gives the coordinates of h acting on a

Failure checks return the smallest offending index tuple, or None.
"""

from __future__ import annotations

import numpy as np


def _red(a, p):
    return a % p if p else a


def _first_mismatch(L, R, ndim):
    bad = np.argwhere(L != R)
    if bad.size == 0:
        return None
    return tuple(int(x) for x in bad[0][:ndim])


def mulvec(mult, u, v, p):
    return _red(np.einsum("i,j,ijk->k", u, v, mult), p)


def apply_action(tab, hvec, avec, p):
    return _red(np.einsum("i,j,ijk->k", hvec, avec, tab), p)


def assoc_failure(mult, p):
    L = _red(np.einsum("ijm,mkl->ijkl", mult, mult), p)
    R = _red(np.einsum("jkm,iml->ijkl", mult, mult), p)
    return _first_mismatch(L, R, 3)


def unit_failure(mult, unit, p):
    d = mult.shape[0]
    eye = np.zeros((d, d), dtype=mult.dtype) if p else _obj_eye(d, mult)
    if p:
        eye[np.arange(d), np.arange(d)] = 1
    L = _red(np.einsum("i,ijk->jk", unit, mult), p)
    R = _red(np.einsum("j,ijk->ik", unit, mult), p)
    bad = _first_mismatch(L, eye, 1)
    if bad is not None:
        return ("left", bad[0])
    bad = _first_mismatch(R, eye, 1)
    if bad is not None:
        return ("right", bad[0])
    return None


def _obj_eye(d, like):
    eye = np.zeros((d, d), dtype=object)
    zero = like.reshape(-1)[0] * 0
    one = zero + 1
    eye[...] = zero
    for i in range(d):
        eye[i, i] = one
    return eye


def coassoc_failure(comult, p):
    L = _red(np.einsum("iab,acd->icdb", comult, comult), p)
    R = _red(np.einsum("iab,bcd->iacd", comult, comult), p)
    bad = _first_mismatch(L, R, 1)
    return None if bad is None else bad[0]


def counit_failure(comult, counit, p):
    d = comult.shape[0]
    eye = _obj_eye(d, comult) if not p else np.eye(d, dtype=np.int64)
    L = _red(np.einsum("iab,a->ib", comult, counit), p)
    R = _red(np.einsum("iab,b->ia", comult, counit), p)
    bad = _first_mismatch(L, eye, 1)
    if bad is not None:
        return ("left", bad[0])
    bad = _first_mismatch(R, eye, 1)
    if bad is not None:
        return ("right", bad[0])
    return None


def bialgebra_small_failure(mult, comult, unit, counit, p):
    """Unit/counit compatibilities of a bialgebra (cheap part)."""
    L = _red(np.einsum("ijm,m->ij", mult, counit), p)
    R = _red(np.einsum("i,j->ij", counit, counit), p)
    bad = _first_mismatch(L, R, 2)
    if bad is not None:
        return ("counit-mult",) + bad
    L = _red(np.einsum("i,ist->st", unit, comult), p)
    R = _red(np.einsum("s,t->st", unit, unit), p)
    if _first_mismatch(L, R, 2) is not None:
        return ("comult-unit",)
    lhs = _red(np.einsum("i,i->", unit, counit), p)
    one = 1 if p else (lhs * 0 + 1)
    if lhs != one:
        return ("counit-unit",)
    return None


def bialgebra_failure(mult, comult, unit, counit, p):
    d = mult.shape[0]
    # Delta(b_i b_j) = Delta(b_i) Delta(b_j), via two staged contractions
    L = _red(np.einsum("ijm,mst->ijst", mult, comult), p)
    P = _red(np.einsum("ikl,lnt->iknt", comult, mult), p)
    G = _red(np.einsum("jmn,kms->jnks", comult, mult), p)
    G2 = G.transpose(0, 3, 2, 1).reshape(d * d, d * d)  # (j,s),(k,n)
    P2 = P.transpose(1, 2, 0, 3).reshape(d * d, d * d)  # (k,n),(i,t)
    R2 = _red(G2.dot(P2), p).reshape(d, d, d, d)        # j,s,i,t
    R = R2.transpose(2, 0, 1, 3)
    bad = _first_mismatch(L, R, 2)
    if bad is not None:
        return ("comult-mult",) + bad
    return bialgebra_small_failure(mult, comult, unit, counit, p)


def antipode_failure(mult, comult, antipode, unit, counit, p):
    tgt = _red(np.einsum("i,k->ik", counit, unit), p)
    L = _red(np.einsum("ist,us,utk->ik", comult, antipode, mult), p)
    bad = _first_mismatch(L, tgt, 1)
    if bad is not None:
        return ("left", bad[0])
    R = _red(np.einsum("ist,ut,suk->ik", comult, antipode, mult), p)
    bad = _first_mismatch(R, tgt, 1)
    if bad is not None:
        return ("right", bad[0])
    return None


def algebra_map_failure(M, multD, multC, unitD, unitC, p):
    if _first_mismatch(_red(M.dot(unitD), p), unitC, 1) is not None:
        return ("unit",)
    L = _red(np.einsum("ijm,am->ija", multD, M), p)
    R = _red(np.einsum("ai,bj,abk->ijk", M, M, multC, optimize=True), p)
    bad = _first_mismatch(L, R, 2)
    return None if bad is None else ("mult",) + bad


def coalgebra_map_failure(M, comultD, comultC, counitD, counitC, p):
    bad = _first_mismatch(_red(counitC.dot(M), p), counitD, 1)
    if bad is not None:
        return ("counit", bad[0])
    L = _red(np.einsum("ai,ast->ist", M, comultC), p)
    R = _red(np.einsum("ist,as,bt->iab", comultD, M, M, optimize=True), p)
    bad = _first_mismatch(L, R, 1)
    return None if bad is None else ("comult", bad[0])


# -- matched-pair axioms -----------------------------------------------------

def action_coalgebra_failure(tab, comultH, comultA, comultOut, counitH,
                             counitA, counitOut, p):
    L = _red(np.einsum("ijk,kst->ijst", tab, comultOut), p)
    X = _red(np.einsum("iab,acs->ibcs", comultH, tab, optimize=True), p)
    R = _red(np.einsum("ibcs,jcd,bdt->ijst", X, comultA, tab, optimize=True), p)
    bad = _first_mismatch(L, R, 2)
    if bad is not None:
        return ("comult",) + bad
    L = _red(np.einsum("ijk,k->ij", tab, counitOut), p)
    R = _red(np.einsum("i,j->ij", counitH, counitA), p)
    bad = _first_mismatch(L, R, 2)
    return None if bad is None else ("counit",) + bad


def left_module_failure(left, multH, unitH, p):
    dA = left.shape[1]
    eye = _obj_eye(dA, left) if not p else np.eye(dA, dtype=np.int64)
    U = _red(np.einsum("h,hak->ak", unitH, left), p)
    bad = _first_mismatch(U, eye, 1)
    if bad is not None:
        return ("unit", bad[0])
    L = _red(np.einsum("ghm,mak->ghak", multH, left), p)
    R = _red(np.einsum("ham,gmk->ghak", left, left, optimize=True), p)
    bad = _first_mismatch(L, R, 3)
    return None if bad is None else ("assoc",) + bad


def right_module_failure(right, multA, unitA, p):
    dH = right.shape[0]
    eye = _obj_eye(dH, right) if not p else np.eye(dH, dtype=np.int64)
    U = _red(np.einsum("a,hak->hk", unitA, right), p)
    bad = _first_mismatch(U, eye, 1)
    if bad is not None:
        return ("unit", bad[0])
    L = _red(np.einsum("abm,hmk->habk", multA, right), p)
    R = _red(np.einsum("ham,mbk->habk", right, right, optimize=True), p)
    bad = _first_mismatch(L, R, 3)
    return None if bad is None else ("assoc",) + bad


def mp1_failure(left, right, unitA, unitH, counitA, counitH, p):
    L = _red(np.einsum("hak,a->hk", left, unitA), p)
    R = _red(np.einsum("h,k->hk", counitH, unitA), p)
    bad = _first_mismatch(L, R, 1)
    if bad is not None:
        return ("left", bad[0])
    L = _red(np.einsum("hak,h->ak", right, unitH), p)
    R = _red(np.einsum("a,k->ak", counitA, unitH), p)
    bad = _first_mismatch(L, R, 1)
    return None if bad is None else ("right", bad[0])


def mp2_failure(left, right, multA, comultH, comultA, p):
    L = _red(np.einsum("abm,gmk->gabk", multA, left), p)
    # (g1 |> a1) ((g2 <| a2) |> b), staged to keep int64 magnitudes small
    X = _red(np.einsum("gxy,xcA->gycA", comultH, left, optimize=True), p)
    Y = _red(np.einsum("ydh,hbB->ydbB", right, left, optimize=True), p)
    Z = _red(np.einsum("gycA,acd,ydbB->gabAB", X, comultA, Y, optimize=True), p)
    R = _red(np.einsum("gabAB,ABk->gabk", Z, multA, optimize=True), p)
    return _first_mismatch(L, R, 3)


def mp3_failure(left, right, multH, comultH, comultA, p):
    L = _red(np.einsum("ghm,mak->ghak", multH, right), p)
    # (g <| (h1 |> a1)) (h2 <| a2)
    X = _red(np.einsum("hxy,xcA->hycA", comultH, left, optimize=True), p)
    W = _red(np.einsum("hycA,gAB->hycgB", X, right, optimize=True), p)
    Z = _red(np.einsum("ydC,BCk->ydBk", right, multH, optimize=True), p)
    R = _red(np.einsum("hycgB,acd,ydBk->ghak", W, comultA, Z, optimize=True), p)
    return _first_mismatch(L, R, 3)


def mp4_failure(left, right, comultH, comultA, p):
    L = _red(np.einsum("gxy,acd,xcs,ydt->gast", comultH, comultA, right, left,
                       optimize=True), p)
    R = _red(np.einsum("gxy,acd,yds,xct->gast", comultH, comultA, right, left,
                       optimize=True), p)
    return _first_mismatch(L, R, 2)


# -- construction kernels ----------------------------------------------------

def convolve_mats(F, G, comultD, multC, p):
    X = _red(np.einsum("ist,as->ita", comultD, F, optimize=True), p)
    return _red(np.einsum("ita,bt,abk->ki", X, G, multC, optimize=True), p)


def grouplike_scan(comult, counit, p):
    """Chunked exhaustive enumeration of grouplike coordinate vectors over
    F_p (prime fields only)."""
    d = comult.shape[0]
    total = p ** d
    found = []
    chunk = 1 << 14
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        V = np.empty((idx.size, d), np.int64)
        t = idx.copy()
        for q in range(d):
            V[:, q] = t % p
            t //= p
        V = V[(V @ counit) % p == 1]
        if V.size == 0:
            continue
        D = np.einsum("qst,cq->cst", comult, V) % p
        O = np.einsum("cs,ct->cst", V, V) % p
        ok = (D == O).all(axis=(1, 2))
        found.extend(V[ok])
    if not found:
        return np.zeros((0, d), np.int64)
    return np.array(found, np.int64)


def bicrossed_mult(multA, multH, comultA, comultH, left, right, p):
    dA, dH = multA.shape[0], multH.shape[0]
    X = _red(np.einsum("jab,acm->jbcm", comultH, left, optimize=True), p)
    X = _red(np.einsum("jbcm,imn->jbcin", X, multA, optimize=True), p)
    Y = _red(np.einsum("kcd,bdz->kcbz", comultA, right, optimize=True), p)
    Y = _red(np.einsum("kcbz,zlq->kcblq", Y, multH, optimize=True), p)
    R = _red(np.einsum("jbcin,kcblq->ijklnq", X, Y, optimize=True), p)
    return R.reshape(dA * dH, dA * dH, dA * dH)
