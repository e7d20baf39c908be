"""Encoder and three-stage decoder for anchored indexed sets.

A strand is an L-bit int laid out as (index | anchor | free data), index
first. Decoding recovers the anchors from the index tally, uses them to put
every received strand back in its slot, then runs the tensor-product decoder.
"""

from dataclasses import dataclass
from functools import lru_cache

from .anchors import (
    AnchorTuple, anchor_code, anchor_encode, anchor_payload, anchor_recover,
    constraint_check, flip_masks, index_tally,
)
from .errors import AmbiguousMatch, DecodeFailure
from .params import CodeParams, params_derive
from .tpc import tpc_check, tpc_decode, tpc_encode, tpc_layout

__all__ = [
    "CodeParams", "IndexedSet", "ReceivedSet", "params_derive", "encode", "decode",
    "position_match", "is_codeword", "strand_fields",
]


@dataclass(frozen=True)
class IndexedSet:
    """M strands of L bits, strand i (0-based) carrying index i, kept in index order."""

    strands: tuple
    L: int

    def __post_init__(self):
        M = len(self.strands)
        logM = M.bit_length() - 1
        if M == 0 or M & (M - 1):
            raise ValueError("an indexed set needs a power-of-two number of strands")
        for i, x in enumerate(self.strands):
            if x >> self.L or x >> (self.L - logM) != i:
                raise ValueError(f"strand {i} does not carry index {i}")

    @classmethod
    def from_strands(cls, strands, L):
        M = len(strands)
        logM = M.bit_length() - 1
        return cls(tuple(sorted(strands, key=lambda x: x >> (L - logM))), L)

    def lines(self):
        return [format(x, f"0{self.L}b") for x in self.strands]

    def received(self):
        return ReceivedSet.of(self.strands, self.L)


@dataclass(frozen=True)
class ReceivedSet:
    """Unordered set of L-bit strands, stored in canonical (sorted) order."""

    strands: tuple
    L: int

    @classmethod
    def of(cls, strands, L):
        strands = set(strands)
        if any(x < 0 or x >> L for x in strands):
            raise ValueError(f"strand wider than L={L} bits")
        return cls(tuple(sorted(strands)), L)

    def __len__(self):
        return len(self.strands)

    def lines(self):
        return [format(x, f"0{self.L}b") for x in self.strands]


def strand_fields(x, params):
    p = params
    v_mask = (1 << p.v_len) - 1
    return x >> p.L_M, (x >> p.v_len) & ((1 << p.l) - 1), x & v_mask


def _runs(columns):
    runs = []
    for c in columns:
        if runs and runs[-1][0] + runs[-1][1] == c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
    return [tuple(r) for r in runs]


@lru_cache(maxsize=None)
def _row_runs(params):
    layout = tpc_layout(params)
    free = _runs(range(params.l, params.L_M))
    parity_cols = set(layout.c1.parity_positions)
    par = _runs([c for c in range(params.l, params.L_M) if c not in parity_cols])
    prow = set(layout.parity_rows)
    return tuple(par if i in prow else free for i in range(params.M))


def _payload_int(payload, params):
    cap = params.capacity_bits
    nbits = 8 * len(payload)
    if nbits > cap:
        raise ValueError(f"payload of {nbits} bits exceeds capacity {cap} bits")
    return int.from_bytes(payload, "big") << (cap - nbits)


def encode(payload, params):
    """Encode payload bytes into an IndexedSet (may raise EncodingRejection)."""
    p = params
    bits = _payload_int(bytes(payload), p)
    anchor_width = p.data_symbols * p.l
    rest = p.capacity_bits - anchor_width
    anchors = anchor_encode(bits >> rest, p)
    pos = rest
    rows = []
    for i, runs in enumerate(_row_runs(p)):
        u = anchors.symbols[i] << p.v_len
        for start, n in runs:
            pos -= n
            u |= ((bits >> pos) & ((1 << n) - 1)) << (p.L_M - start - n)
        rows.append(u)
    rows = tpc_encode(rows, tpc_layout(p))
    return IndexedSet(tuple((i << p.L_M) | u for i, u in enumerate(rows)), p.L)


def _unpack(anchors, rows, params):
    p = params
    bits = anchor_payload(anchors)
    for u, runs in zip(rows, _row_runs(p)):
        for start, n in runs:
            bits = (bits << n) | ((u >> (p.L_M - start - n)) & ((1 << n) - 1))
    return bits


def position_match(anchors, received, params):
    """Assign each slot the single strand within e1 (index) and e2 (anchor) of it."""
    p = params
    by_index = {}
    for x in getattr(received, "strands", received):
        by_index.setdefault(x >> p.L_M, []).append(x)
    amask = (1 << p.l) - 1
    flips = flip_masks(p.logM, p.e1)
    out = []
    used = set()
    for i, a in enumerate(anchors.symbols):
        found = [x for m in flips for x in by_index.get(i ^ m, ())
                 if (((x >> p.v_len) & amask) ^ a).bit_count() <= p.e2]
        if len(found) != 1:
            raise AmbiguousMatch(f"slot {i + 1} has {len(found)} candidates")
        if found[0] in used:
            raise AmbiguousMatch(f"strand claimed by two slots (second: {i + 1})")
        used.add(found[0])
        out.append(found[0])
    return out


def decode(received, params, payload_bytes=None):
    """Recover payload bytes from a received set, or raise DecodeFailure."""
    p = params
    strands = getattr(received, "strands", received)
    if len(strands) != p.M:
        raise DecodeFailure("size mismatch", f"received {len(strands)} strands, expected {p.M}")
    if any(x >> p.L for x in strands):
        raise DecodeFailure("size mismatch", f"strand wider than L={p.L}")
    anchors = anchor_recover(index_tally(strands, p), p)
    matched = position_match(anchors, strands, p)
    vmask = (1 << p.v_len) - 1
    rows = [(a << p.v_len) | (x & vmask) for a, x in zip(anchors.symbols, matched)]
    rows = tpc_decode(rows, tpc_layout(p))
    bits = _unpack(anchors, rows, p)
    nbytes = p.capacity_bits // 8 if payload_bytes is None else payload_bytes
    if nbytes * 8 > p.capacity_bits:
        raise ValueError("requested payload length exceeds capacity")
    return (bits >> (p.capacity_bits - 8 * nbytes)).to_bytes(nbytes, "big")


def is_codeword(indexed_set, params):
    """Check index layout, anchor constraint, anchor RS membership and TPC membership."""
    p = params
    s = indexed_set.strands
    if len(s) != p.M or any(x >> p.L_M != i for i, x in enumerate(s)):
        return False
    amask = (1 << p.l) - 1
    anchors = AnchorTuple(tuple((x >> p.v_len) & amask for x in s), p)
    if constraint_check(anchors):
        return False
    if not anchor_code(p.M, p.l, p.t).is_codeword(list(anchors.symbols)):
        return False
    rows = [x & ((1 << p.L_M) - 1) for x in s]
    return tpc_check(rows, tpc_layout(p))
