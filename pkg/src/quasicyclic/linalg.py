"""Row reduction over F_q on packed integer vectors.

A vector of ``width`` coordinates is packed as ``sum c_i q**i``, the same
packing :class:`quasicyclic.gf.GF` uses for field elements. Pivots are taken
at the highest nonzero coordinate, so the reduced basis is returned sorted by
decreasing pivot and is unique for the row space.
"""


def _rref2(vectors):
    rows = []  # (pivot_bit, row)
    for v in vectors:
        for piv, r in rows:
            if v >> piv & 1:
                v ^= r
        if not v:
            continue
        piv = v.bit_length() - 1
        rows = [(p, r ^ v) if r >> piv & 1 else (p, r) for p, r in rows]
        rows.append((piv, v))
    rows.sort(reverse=True)
    return tuple(r for _, r in rows)


def _unpack(v, q, width):
    out = []
    for _ in range(width):
        v, r = divmod(v, q)
        out.append(r)
    return out


def _pack(digits, q):
    code = 0
    for c in reversed(digits):
        code = code * q + c
    return code


def rref(fq, width, vectors):
    """Reduced row echelon basis of the span of ``vectors``."""
    if fq.q == 2:
        return _rref2(vectors)
    q = fq.q
    add, mul, neg, inv = fq.add_t, fq.mul_t, fq.neg_t, fq.inv_t
    rows = []  # (pivot, digits)
    for v in vectors:
        d = _unpack(v, q, width)
        for piv, r in rows:
            c = d[piv]
            if c:
                nc = neg[c]
                d = [add[x][mul[nc][y]] for x, y in zip(d, r)]
        piv = next((i for i in range(width - 1, -1, -1) if d[i]), None)
        if piv is None:
            continue
        s = inv[d[piv]]
        d = [mul[s][x] for x in d]
        new_rows = []
        for p, r in rows:
            c = r[piv]
            if c:
                nc = neg[c]
                r = [add[x][mul[nc][y]] for x, y in zip(r, d)]
            new_rows.append((p, r))
        new_rows.append((piv, d))
        rows = new_rows
    rows.sort(key=lambda pr: pr[0], reverse=True)
    return tuple(_pack(r, q) for _, r in rows)


def rank(fq, width, vectors):
    return len(rref(fq, width, vectors))


def nullspace(fq, width_in, images, width_out):
    """Basis of {c : sum c_i e_i maps to 0} for the linear map e_i -> images[i].

    Reduces the stacked rows [image_i | e_i]; rows whose image part vanishes
    after reduction span the kernel.
    """
    q = fq.q
    shift = q**width_in
    combined = [img * shift + q**i for i, img in enumerate(images)]
    reduced = rref(fq, width_in + width_out, combined)
    return [r for r in reduced if r < shift]
