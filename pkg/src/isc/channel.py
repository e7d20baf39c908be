"""The (t, e1, e2) substitution channel on indexed sets.

Up to t strands get at most e1 index flips and e2 data flips each; the result
is an unordered set, so strands that collide merge into one.
"""

import json
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .anchors import flip_masks
from .codec import ReceivedSet
from .errors import GuardExceeded
from .rng import XorShift64Star

ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class ErrorPattern:
    positions: tuple  # 1-based, ascending
    index_errors: tuple
    data_errors: tuple
    logM: int
    L_M: int

    def to_json(self):
        return json.dumps({
            "positions": list(self.positions),
            "index_errors": [format(e, f"0{self.logM}b") for e in self.index_errors],
            "data_errors": [format(e, f"0{self.L_M}b") for e in self.data_errors],
        }, indent=2)


def sample_bounded_weight(rng, n, cap):
    """Uniform n-bit vector of weight <= cap."""
    cap = min(cap, n)
    total = sum(comb(n, w) for w in range(cap + 1))
    r = rng.below(total)
    w = 0
    while r >= comb(n, w):
        r -= comb(n, w)
        w += 1
    pool = list(range(n))
    v = 0
    for k in range(w):
        j = k + rng.below(n - k)
        pool[k], pool[j] = pool[j], pool[k]
        v |= 1 << (n - 1 - pool[k])
    return v


def corrupt(indexed_set, params, rng_seed):
    """Apply one random channel realization; deterministic in rng_seed."""
    p = params
    rng = XorShift64Star(rng_seed)
    pool = list(range(p.M))
    for k in range(p.t):
        j = k + rng.below(p.M - k)
        pool[k], pool[j] = pool[j], pool[k]
    positions = sorted(pool[:p.t])
    strands = list(indexed_set.strands)
    eI, eD = [], []
    for f in positions:
        ei = sample_bounded_weight(rng, p.logM, p.e1)
        ed = sample_bounded_weight(rng, p.L_M, p.e2)
        eI.append(ei)
        eD.append(ed)
        strands[f] ^= (ei << p.L_M) | ed
    pattern = ErrorPattern(tuple(f + 1 for f in positions), tuple(eI), tuple(eD), p.logM, p.L_M)
    return ReceivedSet.of(strands, p.L), pattern


def pattern_count(params):
    p = params
    per = len(flip_masks(p.logM, p.e1)) * sum(comb(p.L_M, w) for w in range(min(p.e2, p.L_M) + 1))
    return comb(p.M, p.t) * per ** p.t


def _check_guard(params, guard):
    n = pattern_count(params)
    if n > guard:
        raise GuardExceeded(f"{n} error patterns exceed the enumeration guard {guard}")


def enumerate_outputs(indexed_set, params, guard=ENUMERATION_GUARD):
    """Yield every distinct channel output, first occurrence order."""
    p = params
    _check_guard(p, guard)
    idx_masks = flip_masks(p.logM, p.e1)
    data_masks = flip_masks(p.L_M, p.e2)
    per_strand = [(ei << p.L_M) | ed for ei in idx_masks for ed in data_masks]
    base = list(indexed_set.strands)
    seen = set()
    for F in combinations(range(p.M), p.t):
        for errs in product(per_strand, repeat=p.t):
            strands = list(base)
            for f, e in zip(F, errs):
                strands[f] ^= e
            key = frozenset(strands)
            if key not in seen:
                seen.add(key)
                yield ReceivedSet(tuple(sorted(key)), p.L)


def balls_disjoint(s1, s2, params, guard=ENUMERATION_GUARD):
    ball = {r.strands for r in enumerate_outputs(s1, params, guard)}
    return not any(r.strands in ball for r in enumerate_outputs(s2, params, guard))


def is_indexed(received, params):
    p = params
    return len(received) == p.M and sorted(x >> p.L_M for x in received.strands) == list(range(p.M))


def count_indexed_outputs(indexed_set, params, guard=ENUMERATION_GUARD):
    return sum(1 for r in enumerate_outputs(indexed_set, params, guard) if is_indexed(r, params))
