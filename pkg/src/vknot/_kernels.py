"""Integer kernels for the move search.

Both kernels work on batches of codes packed as one flat ``int64`` token
array plus a ``(batch, n_components)`` matrix of component lengths.

They are compiled with numba when it is importable, unless the
environment variable ``VKNOT_DISABLE_NUMBA`` is set to a non-empty value
other than ``0``.  Without numba the same functions run as plain
Python over numpy arrays (correct, much slower).
"""

import os

import numpy as np

_flag = os.environ.get("VKNOT_DISABLE_NUMBA", "")
_disabled = bool(_flag) and _flag != "0"

try:
    if _disabled:
        raise ImportError
    import numba
except ImportError:
    numba = None

USING_NUMBA = numba is not None


def maybe_njit(f):
    if numba is None:
        return f
    return numba.njit(cache=True)(f)


ID_MASK = (1 << 31) - 1
ROLE_SHIFT = 32


@maybe_njit
def _canonical_one(toks, lens, out):
    n = toks.shape[0]
    ncomp = lens.shape[0]
    offs = np.zeros(ncomp, np.int64)
    acc = 0
    for c in range(ncomp):
        offs[c] = acc
        acc += lens[c]
    ids = (toks >> 1) & ID_MASK
    uniq = np.unique(ids)
    dense = np.searchsorted(uniq, ids)
    mapping = np.empty(uniq.shape[0], np.int64)
    cur = np.empty(n, np.int64)
    rot = np.zeros(ncomp, np.int64)
    have = False
    while True:
        mapping[:] = -1
        nxt = 1
        state = 0 if have else -1  # 0: equal to best so far, -1: already smaller
        aborted = False
        pos = 0
        for c in range(ncomp):
            length = lens[c]
            for j in range(length):
                src = offs[c] + (rot[c] + j) % length
                dd = dense[src]
                if mapping[dd] < 0:
                    mapping[dd] = nxt
                    nxt += 1
                t = ((toks[src] >> ROLE_SHIFT) << ROLE_SHIFT) | (mapping[dd] << 1) | (toks[src] & 1)
                cur[pos] = t
                if state == 0:
                    if t < out[pos]:
                        state = -1
                    elif t > out[pos]:
                        aborted = True
                        break
                pos += 1
            if aborted:
                break
        if not aborted and state == -1:
            out[:] = cur
            have = True
        c = ncomp - 1
        while c >= 0:
            rot[c] += 1
            if rot[c] < max(lens[c], 1):
                break
            rot[c] = 0
            c -= 1
        if c < 0:
            break


@maybe_njit
def canonical_batch(toks, lens, starts):
    """Canonical relabelled, rotation-minimal tokens for every code in a batch.

    Token ids are renamed by first occurrence and each component rotation
    combination is tried; the lexicographically least token sequence wins.
    """
    out = np.empty_like(toks)
    for b in range(lens.shape[0]):
        s = starts[b]
        e = s + lens[b].sum()
        _canonical_one(toks[s:e], lens[b], out[s:e])
    return out


@maybe_njit
def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


@maybe_njit
def _slot(t, incoming):
    # local slot in the disk rotation: positive (oi, ui, oo, uo), negative (oi, uo, oo, ui)
    over = (t >> ROLE_SHIFT) == 0
    if over:
        return 0 if incoming else 2
    positive = (t & 1) == 0
    if positive:
        return 1 if incoming else 3
    return 3 if incoming else 1


@maybe_njit
def _genus_one(toks, lens):
    n = toks.shape[0]
    if n == 0:
        return 0
    ids = (toks >> 1) & ID_MASK
    uniq = np.unique(ids)
    dense = np.searchsorted(uniq, ids)
    nd = uniq.shape[0]
    alpha = np.empty(4 * nd, np.int64)
    parent = np.arange(nd)
    off = 0
    for c in range(lens.shape[0]):
        length = lens[c]
        for j in range(length):
            a = off + j
            b = off + (j + 1) % length
            ha = 4 * dense[a] + _slot(toks[a], False)
            hb = 4 * dense[b] + _slot(toks[b], True)
            alpha[ha] = hb
            alpha[hb] = ha
            ra = _find(parent, dense[a])
            rb = _find(parent, dense[b])
            if ra != rb:
                parent[ra] = rb
        off += length
    faces = np.zeros(nd, np.int64)
    verts = np.zeros(nd, np.int64)
    for v in range(nd):
        verts[_find(parent, v)] += 1
    seen = np.zeros(4 * nd, np.bool_)
    for h0 in range(4 * nd):
        if seen[h0]:
            continue
        faces[_find(parent, h0 // 4)] += 1
        h = h0
        while not seen[h]:
            seen[h] = True
            k = alpha[h]
            h = 4 * (k // 4) + (k % 4 + 1) % 4
    g = 0
    for r in range(nd):
        if verts[r] > 0:
            # chi = V - E = -V on a piece whose disks all have four slots
            g += (2 + verts[r] - faces[r]) // 2
    return g


@maybe_njit
def genus_batch(toks, lens, starts):
    """Canonical genus (summed over connected pieces) for every code in a batch."""
    out = np.empty(lens.shape[0], np.int64)
    for b in range(lens.shape[0]):
        s = starts[b]
        e = s + lens[b].sum()
        out[b] = _genus_one(toks[s:e], lens[b])
    return out


def pack(codes):
    """Pack a list of codes (tuples of token tuples) for the batch kernels."""
    ncomp = len(codes[0]) if codes else 0
    lens = np.array([[len(c) for c in code] for code in codes], dtype=np.int64).reshape(len(codes), ncomp)
    flat = np.fromiter(
        (t for code in codes for comp in code for t in comp), dtype=np.int64, count=int(lens.sum())
    )
    starts = np.zeros(len(codes), dtype=np.int64)
    if len(codes) > 1:
        np.cumsum(lens.sum(axis=1)[:-1], out=starts[1:])
    return flat, lens, starts


def interpreted_copy():
    """A separate instance of this module with numba switched off."""
    import importlib.util

    spec = importlib.util.spec_from_file_location("vknot._kernels_interpreted", __file__)
    mod = importlib.util.module_from_spec(spec)
    old = os.environ.get("VKNOT_DISABLE_NUMBA")
    os.environ["VKNOT_DISABLE_NUMBA"] = "1"
    try:
        spec.loader.exec_module(mod)
    finally:
        if old is None:
            del os.environ["VKNOT_DISABLE_NUMBA"]
        else:
            os.environ["VKNOT_DISABLE_NUMBA"] = old
    return mod
