"""Numba-compiled twins of the kernels in ``_kernels_numpy``.

All kernels work on int64 arrays over a prime field F_p and skip zero
coefficients, which makes them effectively sparse on the structure
constants that show up in practice.  Failure checks return int64 index
arrays with -1 sentinels instead of None.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _modinv(a, p):
    # p is prime, so a^(p-2) inverts a
    a %= p
    r = 1
    e = p - 2
    while e:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


@njit(cache=True)
def mulvec(mult, u, v, p):
    d = mult.shape[0]
    out = np.zeros(d, np.int64)
    for i in range(d):
        if u[i] == 0:
            continue
        for j in range(d):
            c = (u[i] * v[j]) % p
            if c == 0:
                continue
            for k in range(d):
                m = mult[i, j, k]
                if m:
                    out[k] = (out[k] + c * m) % p
    return out


@njit(cache=True)
def apply_action(tab, hvec, avec, p):
    dH, dA, dO = tab.shape
    out = np.zeros(dO, np.int64)
    for i in range(dH):
        if hvec[i] == 0:
            continue
        for j in range(dA):
            c = (hvec[i] * avec[j]) % p
            if c == 0:
                continue
            for k in range(dO):
                t = tab[i, j, k]
                if t:
                    out[k] = (out[k] + c * t) % p
    return out


@njit(cache=True)
def assoc_failure(mult, p):
    d = mult.shape[0]
    L = np.zeros(d, np.int64)
    R = np.zeros(d, np.int64)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                L[:] = 0
                R[:] = 0
                for m in range(d):
                    c = mult[i, j, m]
                    if c:
                        for s in range(d):
                            t = mult[m, k, s]
                            if t:
                                L[s] = (L[s] + c * t) % p
                for m in range(d):
                    c = mult[j, k, m]
                    if c:
                        for s in range(d):
                            t = mult[i, m, s]
                            if t:
                                R[s] = (R[s] + c * t) % p
                for s in range(d):
                    if L[s] != R[s]:
                        return np.array([i, j, k], np.int64)
    return np.array([-1, -1, -1], np.int64)


@njit(cache=True)
def coassoc_failure(comult, p):
    d = comult.shape[0]
    L = np.zeros((d, d, d), np.int64)
    R = np.zeros((d, d, d), np.int64)
    for i in range(d):
        L[:, :, :] = 0
        R[:, :, :] = 0
        for a in range(d):
            for b in range(d):
                c = comult[i, a, b]
                if c == 0:
                    continue
                for x in range(d):
                    for y in range(d):
                        u = comult[a, x, y]
                        if u:
                            L[x, y, b] = (L[x, y, b] + c * u) % p
                        v = comult[b, x, y]
                        if v:
                            R[a, x, y] = (R[a, x, y] + c * v) % p
        for x in range(d):
            for y in range(d):
                for z in range(d):
                    if L[x, y, z] != R[x, y, z]:
                        return i
    return -1


@njit(cache=True)
def bialgebra_mult_failure(mult, comult, p):
    d = mult.shape[0]
    lhs = np.zeros((d, d), np.int64)
    rhs = np.zeros((d, d), np.int64)
    for i in range(d):
        for j in range(d):
            lhs[:, :] = 0
            rhs[:, :] = 0
            for m in range(d):
                c = mult[i, j, m]
                if c == 0:
                    continue
                for s in range(d):
                    for t in range(d):
                        cc = comult[m, s, t]
                        if cc:
                            lhs[s, t] = (lhs[s, t] + c * cc) % p
            for k in range(d):
                for l in range(d):
                    u = comult[i, k, l]
                    if u == 0:
                        continue
                    for m in range(d):
                        for n in range(d):
                            v = comult[j, m, n]
                            if v == 0:
                                continue
                            uv = (u * v) % p
                            for s in range(d):
                                a = mult[k, m, s]
                                if a == 0:
                                    continue
                                w = (uv * a) % p
                                for t in range(d):
                                    b = mult[l, n, t]
                                    if b:
                                        rhs[s, t] = (rhs[s, t] + w * b) % p
            for s in range(d):
                for t in range(d):
                    if lhs[s, t] != rhs[s, t]:
                        return np.array([i, j], np.int64)
    return np.array([-1, -1], np.int64)


@njit(cache=True)
def antipode_failure(mult, comult, antipode, tgt, p):
    d = mult.shape[0]
    acc = np.zeros(d, np.int64)
    for side in range(2):
        for i in range(d):
            acc[:] = 0
            for s in range(d):
                for t in range(d):
                    c = comult[i, s, t]
                    if c == 0:
                        continue
                    if side == 0:
                        # m(S b_s, b_t)
                        for u in range(d):
                            su = antipode[u, s]
                            if su == 0:
                                continue
                            cc = (c * su) % p
                            for k in range(d):
                                m = mult[u, t, k]
                                if m:
                                    acc[k] = (acc[k] + cc * m) % p
                    else:
                        # m(b_s, S b_t)
                        for u in range(d):
                            su = antipode[u, t]
                            if su == 0:
                                continue
                            cc = (c * su) % p
                            for k in range(d):
                                m = mult[s, u, k]
                                if m:
                                    acc[k] = (acc[k] + cc * m) % p
            for k in range(d):
                if acc[k] != tgt[i, k]:
                    return np.array([side, i], np.int64)
    return np.array([-1, -1], np.int64)


@njit(cache=True)
def algebra_map_failure(M, multD, multC, p):
    dD = multD.shape[0]
    dC = multC.shape[0]
    L = np.zeros(dC, np.int64)
    R = np.zeros(dC, np.int64)
    for i in range(dD):
        for j in range(dD):
            L[:] = 0
            R[:] = 0
            for m in range(dD):
                c = multD[i, j, m]
                if c == 0:
                    continue
                for a in range(dC):
                    v = M[a, m]
                    if v:
                        L[a] = (L[a] + c * v) % p
            for a in range(dC):
                ma = M[a, i]
                if ma == 0:
                    continue
                for b in range(dC):
                    mb = M[b, j]
                    if mb == 0:
                        continue
                    c = (ma * mb) % p
                    for k in range(dC):
                        m = multC[a, b, k]
                        if m:
                            R[k] = (R[k] + c * m) % p
            for k in range(dC):
                if L[k] != R[k]:
                    return np.array([i, j], np.int64)
    return np.array([-1, -1], np.int64)


@njit(cache=True)
def coalgebra_map_failure(M, comultD, comultC, p):
    dD = comultD.shape[0]
    dC = comultC.shape[0]
    L = np.zeros((dC, dC), np.int64)
    R = np.zeros((dC, dC), np.int64)
    for i in range(dD):
        L[:, :] = 0
        R[:, :] = 0
        for a in range(dC):
            c = M[a, i]
            if c == 0:
                continue
            for s in range(dC):
                for t in range(dC):
                    u = comultC[a, s, t]
                    if u:
                        L[s, t] = (L[s, t] + c * u) % p
        for s in range(dD):
            for t in range(dD):
                c = comultD[i, s, t]
                if c == 0:
                    continue
                for a in range(dC):
                    ms = M[a, s]
                    if ms == 0:
                        continue
                    cc = (c * ms) % p
                    for b in range(dC):
                        mt = M[b, t]
                        if mt:
                            R[a, b] = (R[a, b] + cc * mt) % p
        for s in range(dC):
            for t in range(dC):
                if L[s, t] != R[s, t]:
                    return i
    return -1


@njit(cache=True)
def action_coalgebra_failure(tab, comultH, comultA, comultOut, p):
    dH, dA, dO = tab.shape
    L = np.zeros((dO, dO), np.int64)
    R = np.zeros((dO, dO), np.int64)
    for i in range(dH):
        for j in range(dA):
            L[:, :] = 0
            R[:, :] = 0
            for k in range(dO):
                c = tab[i, j, k]
                if c == 0:
                    continue
                for s in range(dO):
                    for t in range(dO):
                        u = comultOut[k, s, t]
                        if u:
                            L[s, t] = (L[s, t] + c * u) % p
            for a in range(dH):
                for b in range(dH):
                    ch = comultH[i, a, b]
                    if ch == 0:
                        continue
                    for c2 in range(dA):
                        for e in range(dA):
                            ca = comultA[j, c2, e]
                            if ca == 0:
                                continue
                            cc = (ch * ca) % p
                            for s in range(dO):
                                x = tab[a, c2, s]
                                if x == 0:
                                    continue
                                w = (cc * x) % p
                                for t in range(dO):
                                    y = tab[b, e, t]
                                    if y:
                                        R[s, t] = (R[s, t] + w * y) % p
            for s in range(dO):
                for t in range(dO):
                    if L[s, t] != R[s, t]:
                        return np.array([i, j], np.int64)
    return np.array([-1, -1], np.int64)


@njit(cache=True)
def left_module_failure(left, multH, p):
    dH, dA = left.shape[0], left.shape[1]
    L = np.zeros(dA, np.int64)
    R = np.zeros(dA, np.int64)
    for g in range(dH):
        for h in range(dH):
            for a in range(dA):
                L[:] = 0
                R[:] = 0
                for m in range(dH):
                    c = multH[g, h, m]
                    if c:
                        for k in range(dA):
                            t = left[m, a, k]
                            if t:
                                L[k] = (L[k] + c * t) % p
                for m in range(dA):
                    c = left[h, a, m]
                    if c:
                        for k in range(dA):
                            t = left[g, m, k]
                            if t:
                                R[k] = (R[k] + c * t) % p
                for k in range(dA):
                    if L[k] != R[k]:
                        return np.array([g, h, a], np.int64)
    return np.array([-1, -1, -1], np.int64)


@njit(cache=True)
def right_module_failure(right, multA, p):
    dH, dA = right.shape[0], right.shape[1]
    L = np.zeros(dH, np.int64)
    R = np.zeros(dH, np.int64)
    for h in range(dH):
        for a in range(dA):
            for b in range(dA):
                L[:] = 0
                R[:] = 0
                for m in range(dA):
                    c = multA[a, b, m]
                    if c:
                        for k in range(dH):
                            t = right[h, m, k]
                            if t:
                                L[k] = (L[k] + c * t) % p
                for m in range(dH):
                    c = right[h, a, m]
                    if c:
                        for k in range(dH):
                            t = right[m, b, k]
                            if t:
                                R[k] = (R[k] + c * t) % p
                for k in range(dH):
                    if L[k] != R[k]:
                        return np.array([h, a, b], np.int64)
    return np.array([-1, -1, -1], np.int64)


@njit(cache=True)
def mp2_failure(left, right, multA, comultH, comultA, p):
    dH, dA = left.shape[0], left.shape[1]
    L = np.zeros(dA, np.int64)
    R = np.zeros(dA, np.int64)
    z = np.zeros(dA, np.int64)
    for g in range(dH):
        for a in range(dA):
            for b in range(dA):
                L[:] = 0
                R[:] = 0
                for m in range(dA):
                    c = multA[a, b, m]
                    if c:
                        for k in range(dA):
                            t = left[g, m, k]
                            if t:
                                L[k] = (L[k] + c * t) % p
                for x in range(dH):
                    for y in range(dH):
                        ch = comultH[g, x, y]
                        if ch == 0:
                            continue
                        for c2 in range(dA):
                            for e in range(dA):
                                ca = comultA[a, c2, e]
                                if ca == 0:
                                    continue
                                coef = (ch * ca) % p
                                z[:] = 0
                                for h2 in range(dH):
                                    w = right[y, e, h2]
                                    if w:
                                        for k in range(dA):
                                            t = left[h2, b, k]
                                            if t:
                                                z[k] = (z[k] + w * t) % p
                                for A in range(dA):
                                    u = left[x, c2, A]
                                    if u == 0:
                                        continue
                                    cu = (coef * u) % p
                                    for B in range(dA):
                                        if z[B] == 0:
                                            continue
                                        cz = (cu * z[B]) % p
                                        for k in range(dA):
                                            m = multA[A, B, k]
                                            if m:
                                                R[k] = (R[k] + cz * m) % p
                for k in range(dA):
                    if L[k] != R[k]:
                        return np.array([g, a, b], np.int64)
    return np.array([-1, -1, -1], np.int64)


@njit(cache=True)
def mp3_failure(left, right, multH, comultH, comultA, p):
    dH, dA = left.shape[0], left.shape[1]
    L = np.zeros(dH, np.int64)
    R = np.zeros(dH, np.int64)
    w = np.zeros(dH, np.int64)
    for g in range(dH):
        for h in range(dH):
            for a in range(dA):
                L[:] = 0
                R[:] = 0
                for m in range(dH):
                    c = multH[g, h, m]
                    if c:
                        for k in range(dH):
                            t = right[m, a, k]
                            if t:
                                L[k] = (L[k] + c * t) % p
                for x in range(dH):
                    for y in range(dH):
                        ch = comultH[h, x, y]
                        if ch == 0:
                            continue
                        for c2 in range(dA):
                            for e in range(dA):
                                ca = comultA[a, c2, e]
                                if ca == 0:
                                    continue
                                coef = (ch * ca) % p
                                # w = g <| (x |> c2)
                                w[:] = 0
                                for A in range(dA):
                                    u = left[x, c2, A]
                                    if u:
                                        for k in range(dH):
                                            t = right[g, A, k]
                                            if t:
                                                w[k] = (w[k] + u * t) % p
                                for B in range(dH):
                                    if w[B] == 0:
                                        continue
                                    cb = (coef * w[B]) % p
                                    for C in range(dH):
                                        zc = right[y, e, C]
                                        if zc == 0:
                                            continue
                                        cz = (cb * zc) % p
                                        for k in range(dH):
                                            m = multH[B, C, k]
                                            if m:
                                                R[k] = (R[k] + cz * m) % p
                for k in range(dH):
                    if L[k] != R[k]:
                        return np.array([g, h, a], np.int64)
    return np.array([-1, -1, -1], np.int64)


@njit(cache=True)
def mp4_failure(left, right, comultH, comultA, p):
    dH, dA = left.shape[0], left.shape[1]
    L = np.zeros((dH, dA), np.int64)
    R = np.zeros((dH, dA), np.int64)
    for g in range(dH):
        for a in range(dA):
            L[:, :] = 0
            R[:, :] = 0
            for x in range(dH):
                for y in range(dH):
                    ch = comultH[g, x, y]
                    if ch == 0:
                        continue
                    for c2 in range(dA):
                        for e in range(dA):
                            ca = comultA[a, c2, e]
                            if ca == 0:
                                continue
                            coef = (ch * ca) % p
                            for s in range(dH):
                                u = right[x, c2, s]
                                if u:
                                    cu = (coef * u) % p
                                    for t in range(dA):
                                        v = left[y, e, t]
                                        if v:
                                            L[s, t] = (L[s, t] + cu * v) % p
                            for s in range(dH):
                                u = right[y, e, s]
                                if u:
                                    cu = (coef * u) % p
                                    for t in range(dA):
                                        v = left[x, c2, t]
                                        if v:
                                            R[s, t] = (R[s, t] + cu * v) % p
            for s in range(dH):
                for t in range(dA):
                    if L[s, t] != R[s, t]:
                        return np.array([g, a], np.int64)
    return np.array([-1, -1], np.int64)


@njit(cache=True)
def convolve_mats(F, G, comultD, multC, p):
    dD = comultD.shape[0]
    dC = multC.shape[0]
    out = np.zeros((dC, dD), np.int64)
    for i in range(dD):
        for s in range(dD):
            for t in range(dD):
                c = comultD[i, s, t]
                if c == 0:
                    continue
                for a in range(dC):
                    fa = F[a, s]
                    if fa == 0:
                        continue
                    cf = (c * fa) % p
                    for b in range(dC):
                        gb = G[b, t]
                        if gb == 0:
                            continue
                        cg = (cf * gb) % p
                        for k in range(dC):
                            m = multC[a, b, k]
                            if m:
                                out[k, i] = (out[k, i] + cg * m) % p
    return out


@njit(cache=True)
def bicrossed_mult(multA, multH, comultA, comultH, left, right, p):
    dA, dH = multA.shape[0], multH.shape[0]
    d = dA * dH
    out = np.zeros((d, d, d), np.int64)
    u = np.zeros(dA, np.int64)
    w = np.zeros(dH, np.int64)
    for j in range(dH):
        for k in range(dA):
            for a in range(dH):
                for b in range(dH):
                    ch = comultH[j, a, b]
                    if ch == 0:
                        continue
                    for c in range(dA):
                        for e in range(dA):
                            ca = comultA[k, c, e]
                            if ca == 0:
                                continue
                            coef = (ch * ca) % p
                            # u-part: i * (a |> c) over all i below; w = (b <| e) * l
                            for i in range(dA):
                                u[:] = 0
                                for m in range(dA):
                                    lm = left[a, c, m]
                                    if lm:
                                        for n in range(dA):
                                            t = multA[i, m, n]
                                            if t:
                                                u[n] = (u[n] + lm * t) % p
                                for l in range(dH):
                                    w[:] = 0
                                    for z in range(dH):
                                        rz = right[b, e, z]
                                        if rz:
                                            for q in range(dH):
                                                t = multH[z, l, q]
                                                if t:
                                                    w[q] = (w[q] + rz * t) % p
                                    row = i * dH + j
                                    col = k * dH + l
                                    for n in range(dA):
                                        if u[n] == 0:
                                            continue
                                        cu = (coef * u[n]) % p
                                        for q in range(dH):
                                            if w[q]:
                                                out[row, col, n * dH + q] = (
                                                    out[row, col, n * dH + q]
                                                    + cu * w[q]) % p
    return out


@njit(cache=True)
def rref(M, p):
    R = M.copy() % p
    rows, cols = R.shape
    piv = np.full(cols, -1, np.int64)
    r = 0
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            for j in range(cols):
                t = R[r, j]
                R[r, j] = R[pr, j]
                R[pr, j] = t
        inv = _modinv(R[r, c], p)
        for j in range(cols):
            R[r, j] = (R[r, j] * inv) % p
        for i in range(rows):
            if i != r and R[i, c] != 0:
                f = R[i, c]
                for j in range(cols):
                    R[i, j] = (R[i, j] - f * R[r, j]) % p
        piv[c] = r
        r += 1
        if r == rows:
            break
    return R, piv


@njit(cache=True)
def grouplike_scan(comult, counit, p):
    """Exhaustively enumerate vectors x with eps(x) = 1 and
    Delta(x) = x (x) x.  Distinct grouplikes are linearly independent, so
    at most d exist."""
    d = comult.shape[0]
    total = 1
    for _ in range(d):
        total *= p
    out = np.zeros((d, d), np.int64)
    cnt = 0
    vec = np.zeros(d, np.int64)
    for idx in range(total):
        t = idx
        for q in range(d):
            vec[q] = t % p
            t //= p
        e = 0
        for q in range(d):
            e = (e + counit[q] * vec[q]) % p
        if e != 1:
            continue
        ok = True
        for s in range(d):
            for t2 in range(d):
                acc = 0
                for q in range(d):
                    c = comult[q, s, t2]
                    if c:
                        acc = (acc + c * vec[q]) % p
                if acc != (vec[s] * vec[t2]) % p:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out[cnt] = vec
            cnt += 1
    return out[:cnt]
