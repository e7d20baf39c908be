"""Anchor vectors: scramble, RS-encode, check the distance constraint, recover."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import RSCode, field_new
from .errors import DecodeFailure, EncodingRejection
from .rng import scrambler_word

ERASED = None


@dataclass(frozen=True)
class AnchorTuple:
    symbols: tuple
    params: object


@dataclass(frozen=True)
class AnchorWord:
    slots: tuple
    params: object

    @property
    def erasures(self):
        return [i for i, s in enumerate(self.slots) if s is ERASED]

    @property
    def erasure_count(self):
        return len(self.erasures)


@lru_cache(maxsize=None)
def anchor_code(M, l, t):
    return RSCode(field_new(l), M, M - 2 * t)


@lru_cache(maxsize=None)
def flip_masks(n, r):
    """All n-bit masks of weight <= r, by weight then lexicographic support."""
    out = []
    for w in range(min(r, n) + 1):
        for support in combinations(range(n), w):
            m = 0
            for p in support:
                m |= 1 << (n - 1 - p)
            out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def scrambler_masks(code_seed, count, l):
    mask = (1 << l) - 1
    return tuple(scrambler_word(code_seed, i) & mask for i in range(1, count + 1))


def constraint_check(anchors):
    """Pairs (i, j), 1-based, i < j, whose indices are within 2*e1 and anchors within 2*e2."""
    p = anchors.params
    sym = anchors.symbols
    lim = 2 * p.e2
    neigh = [m for m in flip_masks(p.logM, 2 * p.e1) if m]
    bad = []
    for i in range(p.M):
        a = sym[i]
        for m in neigh:
            j = i ^ m
            if j > i and (a ^ sym[j]).bit_count() <= lim:
                bad.append((i + 1, j + 1))
    bad.sort()
    return bad


def anchor_encode(payload_bits, params):
    """Encode (M-2t)*l payload bits (an int, MSB first) into an AnchorTuple.

    Raises EncodingRejection when the scrambled anchors break the constraint.
    """
    p = params
    k, l = p.data_symbols, p.l
    width = k * l
    if payload_bits < 0 or payload_bits >> width:
        raise ValueError(f"anchor payload must fit in {width} bits")
    masks = scrambler_masks(p.code_seed, k, l)
    lm = (1 << l) - 1
    data = [((payload_bits >> (l * (k - 1 - i))) & lm) ^ masks[i] for i in range(k)]
    tup = AnchorTuple(tuple(anchor_code(p.M, l, p.t).encode(data)), p)
    bad = constraint_check(tup)
    if bad:
        raise EncodingRejection(bad)
    return tup


def anchor_payload(anchors):
    """Invert anchor_encode: unscrambled data symbols packed MSB first."""
    p = anchors.params
    masks = scrambler_masks(p.code_seed, p.data_symbols, p.l)
    out = 0
    for i in range(p.data_symbols):
        out = (out << p.l) | (anchors.symbols[i] ^ masks[i])
    return out


def index_tally(strands, params):
    p = params
    shift = p.L_M
    ashift = p.L_M - p.l
    amask = (1 << p.l) - 1
    counts = [0] * p.M
    claim = [ERASED] * p.M
    for x in getattr(strands, "strands", strands):
        i = x >> shift
        counts[i] += 1
        claim[i] = (x >> ashift) & amask
    slots = tuple(claim[i] if counts[i] == 1 else ERASED for i in range(p.M))
    return AnchorWord(slots, p)


def anchor_recover(word, params):
    code = anchor_code(params.M, params.l, params.t)
    filled = [0 if s is ERASED else s for s in word.slots]
    try:
        sym = code.decode(filled, word.erasures)
    except DecodeFailure as exc:
        raise DecodeFailure("anchor RS failure", exc.detail) from None
    return AnchorTuple(tuple(sym), params)
