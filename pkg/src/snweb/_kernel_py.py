"""Pure-Python contraction kernel.

A state is ``{index tuple: {exponent: coeff}}``; a local table maps an input
index block to ``((output block, {exponent: coeff}), ...)``.  Polynomials are
raw dicts here; wrapping into ``LaurentPoly`` happens at the API boundary.
"""


def apply_local(state, pos, arity, table):
    """Apply a local operator on positions ``pos .. pos+arity-1`` of every key."""
    out = {}
    end = pos + arity
    for idx, coeff in state.items():
        images = table.get(idx[pos:end])
        if not images:
            continue
        head = idx[:pos]
        tail = idx[end:]
        for block, c in images:
            key = head + block + tail
            acc = out.get(key)
            if acc is None:
                acc = {}
                out[key] = acc
            for ea, ca in coeff.items():
                for eb, cb in c.items():
                    e = ea + eb
                    acc[e] = acc.get(e, 0) + ca * cb
    return prune(out)


def prune(state):
    clean = {}
    for key, poly in state.items():
        p = {e: c for e, c in poly.items() if c}
        if p:
            clean[key] = p
    return clean


def add_into(acc, other, scale=None):
    """``acc += scale * other`` on states; ``scale`` a poly dict or None."""
    for key, poly in other.items():
        tgt = acc.get(key)
        if tgt is None:
            tgt = {}
            acc[key] = tgt
        if scale is None:
            for e, c in poly.items():
                tgt[e] = tgt.get(e, 0) + c
        else:
            for ea, ca in poly.items():
                for eb, cb in scale.items():
                    e = ea + eb
                    tgt[e] = tgt.get(e, 0) + ca * cb
    return acc
