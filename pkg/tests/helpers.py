"""Independent reference routines used as test oracles."""

from isc.codec import encode
from isc.errors import EncodingRejection
from isc.rng import XorShift64Star


def clmul_mod(a, b, poly, m):
    """Schoolbook GF(2)[x] multiply then reduce mod poly (no tables)."""
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    for d in range(prod.bit_length() - 1, m - 1, -1):
        if prod >> d & 1:
            prod ^= poly << (d - m)
    return prod


def popcount(x):
    return bin(x).count("1")


def encodable_payloads(params, count, seed, max_attempts=10_000):
    """Draw random payloads until `count` encode; returns (pairs, attempts)."""
    rng = XorShift64Star(seed)
    out, attempts = [], 0
    while len(out) < count and attempts < max_attempts:
        attempts += 1
        payload = rng.random_bytes(params.capacity_bits // 8)
        try:
            out.append((payload, encode(payload, params)))
        except EncodingRejection:
            pass
    return out, attempts
