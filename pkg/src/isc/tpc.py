"""Tensor-product code over the M x L_M array of rows (anchor, free data).

Per-row BCH syndromes are grouped g rows at a time into super-symbols of
GF(2^(r1*g)), and those must form a Reed-Solomon codeword with 2t parity
super-symbols. The first row of a group sits in the most significant bits.
"""

from dataclasses import dataclass
from functools import lru_cache

from .algebra import BchCode, RSCode, bch_build, field_new
from .errors import DecodeFailure


@dataclass(frozen=True)
class TpcLayout:
    M: int
    t: int
    c1: BchCode
    g: int
    c2: object  # RSCode, or None when r1 == 0

    @property
    def r1(self):
        return self.c1.r1

    @property
    def parity_rows(self):
        if self.c2 is None:
            return range(0)
        return range(self.M - 2 * self.t * self.g, self.M)

    @property
    def parity_bits(self):
        return self.r1 * len(self.parity_rows)


@lru_cache(maxsize=None)
def build_layout(M, L_M, t, e2, g):
    c1 = bch_build(L_M, e2)
    if c1.r1 == 0:
        return TpcLayout(M, t, c1, 1, None)
    n2 = M // g
    c2 = RSCode(field_new(c1.r1 * g), n2, n2 - 2 * t)
    return TpcLayout(M, t, c1, g, c2)


def tpc_layout(params):
    return build_layout(params.M, params.L_M, params.t, params.e2, params.g)


def _group(synd, r1, g):
    out = []
    for j in range(0, len(synd), g):
        v = 0
        for s in synd[j:j + g]:
            v = (v << r1) | s
        out.append(v)
    return out


def _ungroup(symbols, r1, g):
    mask = (1 << r1) - 1
    out = []
    for v in symbols:
        out.extend((v >> (r1 * (g - 1 - k))) & mask for k in range(g))
    return out


def tpc_encode(rows, layout):
    """Fill the parity bits of the parity rows so the syndrome word is in C2."""
    rows = list(rows)
    if layout.c2 is None:
        return rows
    c1, c2, g = layout.c1, layout.c2, layout.g
    n_data = c2.k * g
    synd = [c1.syndrome(u) for u in rows[:n_data]]
    word = c2.encode(_group(synd, c1.r1, g))
    targets = _ungroup(word[c2.k:], c1.r1, g)
    for i, target in zip(layout.parity_rows, targets):
        rows[i] = c1.solve_parity(rows[i], target)
    return rows


def tpc_check(rows, layout):
    if layout.c2 is None:
        return True
    c1 = layout.c1
    return layout.c2.is_codeword(_group([c1.syndrome(u) for u in rows], c1.r1, layout.g))


def tpc_decode(rows, layout):
    """Correct up to t rows with up to eps2 bit errors each."""
    rows = list(rows)
    if layout.c2 is None:
        return rows
    c1, c2, g = layout.c1, layout.c2, layout.g
    synd = [c1.syndrome(u) for u in rows]
    try:
        word = c2.decode(_group(synd, c1.r1, g))
    except DecodeFailure as exc:
        raise DecodeFailure("TPC failure", f"outer code: {exc.detail}") from None
    targets = _ungroup(word, c1.r1, g)
    for i, (s, target) in enumerate(zip(synd, targets)):
        if s != target:
            try:
                rows[i] = c1.decode_to_syndrome(rows[i], target)
            except DecodeFailure as exc:
                raise DecodeFailure("TPC failure", f"row {i + 1}: {exc.detail}") from None
    return rows
