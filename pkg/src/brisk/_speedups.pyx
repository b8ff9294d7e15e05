# cython: language_level=3
"""Compiled polynomial kernel: same semantics as _kernel_py, C loops.

Coefficients stay generic Python objects (Fraction or prime-field
elements); the speedup comes from typed exponent-tuple loops and tighter
dict handling in the reduction hot path.
"""

import heapq

KERNEL_NAME = "cython"


# ---------------------------------------------------------------- monomials


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <object> a[i] + <object> b[i]
    return tuple(out)


cpdef tuple mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <object> a[i] - <object> b[i]
    return tuple(out)


cpdef bint mono_divides(tuple b, tuple a):
    cdef Py_ssize_t i, n = len(b)
    for i in range(n):
        if <object> b[i] > <object> a[i]:
            return False
    return True


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] if <object> a[i] > <object> b[i] else b[i]
    return tuple(out)


cpdef object mono_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef object s = 0
    for i in range(n):
        s = s + <object> a[i]
    return s


# --------------------------------------------------------------- order keys


cdef inline tuple _permute(tuple exp, perm):
    if perm is None:
        return exp
    cdef Py_ssize_t i, n = len(perm)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = exp[<Py_ssize_t> perm[i]]
    return tuple(out)


cdef inline tuple _negrev(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = -(<object> e[n - 1 - i])
    return tuple(out)


cdef inline tuple _rev(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = e[n - 1 - i]
    return tuple(out)


def key_of(tuple exp, spec):
    kind, block, perm = spec
    cdef tuple e = _permute(exp, perm)
    if kind == 0:
        return (mono_deg(e), _negrev(e))
    if kind == 1:
        return e
    cdef tuple a = e[:block]
    cdef tuple b = e[block:]
    return (mono_deg(a), _negrev(a), mono_deg(b), _negrev(b))


def neg_key_of(tuple exp, spec):
    kind, block, perm = spec
    cdef tuple e = _permute(exp, perm)
    if kind == 0:
        return (-mono_deg(e), _rev(e))
    if kind == 1:
        return tuple([-(<object> x) for x in e])
    cdef tuple a = e[:block]
    cdef tuple b = e[block:]
    return (-mono_deg(a), _rev(a), -mono_deg(b), _rev(b))


def leading_exponent(dict terms, spec):
    if not terms:
        return None
    cdef object best = None
    cdef object best_key = None
    cdef object k
    for e in terms:
        k = key_of(<tuple> e, spec)
        if best_key is None or k > best_key:
            best = e
            best_key = k
    return best


# --------------------------------------------------------------- arithmetic


def poly_add(dict a, dict b):
    if len(b) > len(a):
        a, b = b, a
    cdef dict out = dict(a)
    cdef object s
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def poly_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object s
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def poly_neg(dict a):
    cdef dict out = {}
    for e, c in a.items():
        out[e] = -c
    return out


def poly_scale(dict a, c):
    if not c:
        return {}
    cdef dict out = {}
    for e, v in a.items():
        out[e] = v * c
    return out


def poly_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(b) > len(a):
        a, b = b, a
    cdef dict out = {}
    cdef object s, c
    cdef tuple e
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = mono_mul(<tuple> ea, <tuple> eb)
            c = ca * cb
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


# -------------------------------------------------------------- normal form


def normal_form(dict terms, reducers, spec):
    """Full multivariate division; see _kernel_py.normal_form."""
    cdef dict work = dict(terms)
    if not work or not reducers:
        return work
    cdef dict out = {}
    cdef list heap = [(neg_key_of(<tuple> e, spec), e) for e in work]
    heapq.heapify(heap)
    cdef list red = list(reducers)
    cdef Py_ssize_t nred = len(red)
    cdef Py_ssize_t r
    cdef tuple m, lead, shift, t
    cdef object c, s, q
    cdef object hit_tail
    cdef tuple hit_lead
    heappop = heapq.heappop
    heappush = heapq.heappush
    while heap:
        m = <tuple> (heappop(heap)[1])
        c = work.pop(m, None)
        if c is None:
            continue
        hit_lead = None
        hit_tail = None
        for r in range(nred):
            lead = <tuple> (<tuple> red[r])[0]
            if mono_divides(lead, m):
                hit_lead = lead
                hit_tail = (<tuple> red[r])[1]
                break
        if hit_lead is None:
            out[m] = c
            continue
        shift = mono_div(m, hit_lead)
        for item in hit_tail:
            t = mono_mul(<tuple> (<tuple> item)[0], shift)
            q = (<tuple> item)[1]
            s = work.get(t)
            if s is None:
                work[t] = -(c * q)
                heappush(heap, (neg_key_of(t, spec), t))
            else:
                s = s - c * q
                if s:
                    work[t] = s
                else:
                    del work[t]
    return out
