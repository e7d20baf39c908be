"""GF(2^m) arithmetic with log/antilog tables.

Elements are ints in [0, 2^m); bit k is the coefficient of x^k.
"""

from functools import lru_cache

# Standard primitive polynomials, bit-encoded, indexed by degree.
DEFAULT_POLYS = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x89, 8: 0x11D,
    9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201B, 14: 0x4443,
    15: 0x8003, 16: 0x1100B,
}


class FieldError(ValueError):
    pass


class FieldContext:
    """Tables for GF(2^m) built from a primitive polynomial."""

    def __init__(self, m, poly=None):
        if not 2 <= m <= 16:
            raise FieldError(f"degree m={m} out of range [2, 16]")
        if poly is None:
            poly = DEFAULT_POLYS[m]
        if poly >> m != 1:
            raise FieldError(f"polynomial {poly:#x} does not have degree {m}")
        if not poly & 1:
            raise FieldError(f"polynomial {poly:#x} is reducible (x divides it)")
        self.m = m
        self.poly = poly
        self.size = 1 << m
        self.order = self.size - 1
        exp = [0] * (2 * self.order)
        log = [-1] * self.size
        x = 1
        for i in range(self.order):
            if log[x] != -1:
                raise FieldError(f"polynomial {poly:#x} is not primitive over GF(2)")
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.size:
                x ^= poly
        if x != 1:
            raise FieldError(f"polynomial {poly:#x} is not primitive over GF(2)")
        for i in range(self.order, 2 * self.order):
            exp[i] = exp[i - self.order]
        self.exp = exp
        self.log = log

    def __repr__(self):
        return f"FieldContext(m={self.m}, poly={self.poly:#x})"

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % self.order]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(self.order - self.log[a]) % self.order]

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % self.order]

    def alpha_pow(self, e):
        return self.exp[e % self.order]

    # polynomials: coefficient lists, lowest degree first

    def poly_eval(self, p, x):
        y = 0
        for c in reversed(p):
            y = self.mul(y, x) ^ c
        return y

    def poly_mul(self, p, q):
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    out[i + j] ^= self.mul(a, b)
        return out

    def poly_scale(self, p, c):
        return [self.mul(a, c) for a in p]

    def poly_add(self, p, q):
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, b in enumerate(q):
            out[i] ^= b
        return out


@lru_cache(maxsize=None)
def field_new(m, poly=None):
    return FieldContext(m, poly)


def gf_add(a, b, ctx=None):
    return a ^ b


def gf_mul(a, b, ctx):
    return ctx.mul(a, b)


def gf_inv(a, ctx):
    return ctx.inv(a)


def gf_pow(a, e, ctx):
    return ctx.pow(a, e)


def poly_degree(p):
    d = len(p) - 1
    while d > 0 and p[d] == 0:
        d -= 1
    return d if p and p[d] else -1
