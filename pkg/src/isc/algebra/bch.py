"""Shortened narrow-sense binary BCH codes with syndrome-targeted decoding.

Rows are ints of ``length`` bits, position p (0 = leftmost) at bit
``length - 1 - p``. Position p carries the polynomial degree length-1-p of the
parent cyclic code, whose leading positions are fixed to zero by shortening.
"""

from functools import lru_cache

from ..errors import DecodeFailure
from .field import field_new, poly_degree


def _bit(p, length):
    return 1 << (length - 1 - p)


class BchCode:
    """Parity-check description of a shortened BCH code.

    ``H`` holds r1 row masks in reduced echelon form: row k has a one at
    column ``parity_positions[k]`` and zeros at every other parity column.
    Syndrome bit k is the most significant bit first (bit r1-1-k of the int).
    """

    def __init__(self, length, eps2):
        if length < 1:
            raise ValueError("BCH length must be >= 1")
        if eps2 < 0:
            raise ValueError("eps2 must be >= 0")
        if eps2 > 0 and 2 * eps2 + 1 > length:
            raise ValueError(
                f"designed distance {2 * eps2 + 1} exceeds length {length}")
        self.length = length
        self.eps2 = eps2
        if eps2 == 0:
            self.m1 = 0
            self.field = None
            self.H = []
            self.parity_positions = []
            self.r1 = 0
            self._tables = []
            return
        self.m1 = length.bit_length()
        self.field = field_new(self.m1)
        rows = self._algebraic_rows()
        self.H, self.parity_positions = _reduce_right_to_left(rows, length)
        self.r1 = len(self.H)
        self._col_syn = [self._column_syndrome(p) for p in range(length)]
        self._tables = self._byte_tables()

    def __repr__(self):
        return f"BchCode(length={self.length}, eps2={self.eps2}, r1={self.r1})"

    def _algebraic_rows(self):
        f, n, m1 = self.field, self.length, self.m1
        rows = []
        for i in range(1, 2 * self.eps2, 2):
            block = [0] * m1
            for p in range(n):
                v = f.alpha_pow(i * (n - 1 - p))
                for b in range(m1):
                    if v >> (m1 - 1 - b) & 1:
                        block[b] |= _bit(p, n)
            rows.extend(block)
        return rows

    def _column_syndrome(self, p):
        s = 0
        mask = _bit(p, self.length)
        for h in self.H:
            s = (s << 1) | (1 if h & mask else 0)
        return s

    def _byte_tables(self):
        tables = []
        for c in range((self.length + 7) // 8):
            cols = []
            for b in range(8):
                bit = 8 * c + b
                if bit < self.length:
                    cols.append((b, self._col_syn[self.length - 1 - bit]))
            table = [0] * 256
            for v in range(1, 256):
                low = v & -v
                b = low.bit_length() - 1
                s = table[v ^ low]
                for bb, cs in cols:
                    if bb == b:
                        s ^= cs
                table[v] = s
            tables.append(table)
        return tables

    def syndrome(self, row):
        s = 0
        for table in self._tables:
            s ^= table[row & 0xFF]
            row >>= 8
        return s

    def parity_pattern(self, syn):
        """The unique vector supported on parity positions with syndrome ``syn``."""
        z = 0
        for k, p in enumerate(self.parity_positions):
            if syn >> (self.r1 - 1 - k) & 1:
                z |= _bit(p, self.length)
        return z

    def solve_parity(self, row, target):
        row &= ~self.parity_pattern((1 << self.r1) - 1)
        return row | self.parity_pattern(self.syndrome(row) ^ target)

    def decode_to_syndrome(self, row, target):
        diff = self.syndrome(row) ^ target
        if diff == 0:
            return row
        err = self._locate(self.parity_pattern(diff))
        if err is None:
            raise DecodeFailure(
                "bch", f"no pattern of weight <= {self.eps2} explains the syndrome")
        return row ^ err

    def _locate(self, z):
        """Error vector of weight <= eps2 with the same syndrome as z, or None."""
        f, n, t = self.field, self.length, self.eps2
        support = [n - 1 - p for p in range(n) if z & _bit(p, n)]
        synd = []
        for i in range(1, 2 * t + 1):
            s = 0
            for d in support:
                s ^= f.alpha_pow(i * d)
            synd.append(s)
        lam = _berlekamp_massey(f, synd)
        deg = poly_degree(lam)
        if deg < 1 or deg > t:
            return None
        err = 0
        roots = 0
        for d in range(n):
            if f.poly_eval(lam, f.alpha_pow(-d)) == 0:
                err |= 1 << d
                roots += 1
        if roots != deg:
            return None
        if self.syndrome(err) != self.syndrome(z):
            return None
        return err


def _reduce_right_to_left(rows, length):
    rows = [r for r in rows]
    pivots = []
    rank = 0
    for p in range(length - 1, -1, -1):
        mask = _bit(p, length)
        sel = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= rows[rank]
        pivots.append(p)
        rank += 1
        if rank == len(rows):
            break
    pairs = sorted(zip(pivots, rows[:rank]))
    return [r for _, r in pairs], [p for p, _ in pairs]


def _berlekamp_massey(f, synd):
    lam, prev = [1], [1]
    L = 0
    for r in range(1, len(synd) + 1):
        delta = 0
        for j in range(min(len(lam), r)):
            if lam[j]:
                delta ^= f.mul(lam[j], synd[r - j - 1])
        shifted = [0] + prev
        if delta == 0:
            prev = shifted
        elif 2 * L <= r - 1:
            new = f.poly_add(lam, f.poly_scale(shifted, delta))
            prev = f.poly_scale(lam, f.inv(delta))
            L = r - L
            lam = new
        else:
            lam = f.poly_add(lam, f.poly_scale(shifted, delta))
            prev = shifted
    return lam


def bch_redundancy(length, eps2):
    """Rank of the shortened BCH parity-check matrix, by cyclotomic cosets."""
    if eps2 == 0:
        return 0
    m1 = length.bit_length()
    order = (1 << m1) - 1
    roots = set()
    for i in range(1, 2 * eps2 + 1):
        e = i % order
        while e not in roots:
            roots.add(e)
            e = (2 * e) % order
    return min(len(roots), length)


@lru_cache(maxsize=None)
def bch_build(length, eps2):
    return BchCode(length, eps2)


def bch_syndrome(row, code):
    return code.syndrome(row)


def bch_decode_to_syndrome(row, target, code):
    return code.decode_to_syndrome(row, target)


def solve_parity_bits(partial_row, target, code):
    return code.solve_parity(partial_row, target)
