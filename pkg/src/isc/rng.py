"""xorshift64* generator shared by the anchor scrambler and the channel."""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MULT = 0x2545F4914F6CDD1D


class XorShift64Star:
    """Bit-exact xorshift64* stream.

    A zero state stays zero forever; that is kept as-is so streams match
    other implementations of the same recurrence.
    """

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & MASK64

    def below(self, n):
        """Uniform integer in [0, n) by rejection; n may exceed 2**64."""
        if n <= 0:
            raise ValueError("n must be positive")
        words = max(1, (n.bit_length() + 63) // 64)
        span = 1 << (64 * words)
        limit = span - span % n
        while True:
            x = 0
            for _ in range(words):
                x = (x << 64) | self.next_u64()
            if x < limit:
                return x % n

    def random_bytes(self, count):
        out = bytearray()
        while len(out) < count:
            out += self.next_u64().to_bytes(8, "big")
        return bytes(out[:count])


def scrambler_word(code_seed, position):
    """First xorshift64* output for anchor position `position` (1-based)."""
    return XorShift64Star(code_seed + position * GOLDEN).next_u64()
