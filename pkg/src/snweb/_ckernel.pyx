# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``; same data layout, same results."""


cpdef dict apply_local(dict state, Py_ssize_t pos, Py_ssize_t arity, dict table):
    cdef dict out = {}
    cdef dict acc
    cdef dict coeff
    cdef dict c
    cdef tuple idx, head, tail, key, block
    cdef object images, ea, ca, eb, cb, e, prev
    cdef Py_ssize_t end = pos + arity
    for idx, coeff in state.items():
        images = table.get(idx[pos:end])
        if not images:
            continue
        head = idx[:pos]
        tail = idx[end:]
        for block, c in images:
            key = head + block + tail
            acc = <dict>out.get(key)
            if acc is None:
                acc = {}
                out[key] = acc
            for ea, ca in coeff.items():
                for eb, cb in c.items():
                    e = ea + eb
                    prev = acc.get(e)
                    if prev is None:
                        acc[e] = ca * cb
                    else:
                        acc[e] = prev + ca * cb
    return prune(out)


cpdef dict prune(dict state):
    cdef dict clean = {}
    cdef dict poly, p
    cdef object key, e, c
    for key, poly in state.items():
        p = {}
        for e, c in poly.items():
            if c:
                p[e] = c
        if p:
            clean[key] = p
    return clean


cpdef dict add_into(dict acc, dict other, object scale=None):
    cdef dict tgt, poly
    cdef object key, e, c, ea, ca, eb, cb
    for key, poly in other.items():
        tgt = <dict>acc.get(key)
        if tgt is None:
            tgt = {}
            acc[key] = tgt
        if scale is None:
            for e, c in poly.items():
                tgt[e] = tgt.get(e, 0) + c
        else:
            for ea, ca in poly.items():
                for eb, cb in (<dict>scale).items():
                    e = ea + eb
                    tgt[e] = tgt.get(e, 0) + ca * cb
    return acc
