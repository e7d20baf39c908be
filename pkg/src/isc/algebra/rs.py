"""Systematic Reed-Solomon codes with error-and-erasure decoding.

Codeword symbol j is the coefficient of x^(n-1-j); the generator has roots
alpha^1 .. alpha^(n-k). Data occupies the first k symbols, parity the rest.
"""

from ..errors import DecodeFailure
from .field import poly_degree


class RSCode:
    def __init__(self, field, n, k):
        if not 1 <= n <= field.order:
            raise ValueError(f"RS length n={n} needs 1 <= n <= {field.order}")
        if not 0 <= k <= n:
            raise ValueError(f"RS dimension k={k} out of range for n={n}")
        self.field = field
        self.n = n
        self.k = k
        self.nk = n - k
        g = [1]
        for i in range(1, self.nk + 1):
            g = field.poly_mul(g, [field.alpha_pow(i), 1])
        # high-degree-first, monic, without the leading 1
        self._gen = list(reversed(g))[1:]
        # locator of symbol j is alpha^(n-1-j)
        self._loc_log = [n - 1 - j for j in range(n)]

    def __repr__(self):
        return f"RSCode(n={self.n}, k={self.k}, m={self.field.m})"

    @property
    def min_distance(self):
        return self.nk + 1

    def encode(self, data):
        if len(data) != self.k:
            raise ValueError(f"RS encode expects {self.k} symbols, got {len(data)}")
        if self.nk == 0:
            return list(data)
        f = self.field
        exp, log = f.exp, f.log
        gen_logs = [log[c] if c else None for c in self._gen]
        rem = [0] * self.nk
        for d in data:
            fb = d ^ rem[0]
            rem = rem[1:] + [0]
            if fb:
                lf = log[fb]
                for i, gl in enumerate(gen_logs):
                    if gl is not None:
                        rem[i] ^= exp[lf + gl]
        return list(data) + rem

    def syndromes(self, word):
        f = self.field
        exp, log = f.exp, f.log
        out = []
        for i in range(1, self.nk + 1):
            s = 0
            for c in word:
                # Horner with x = alpha^i
                if s:
                    s = exp[(log[s] + i) % f.order]
                s ^= c
            out.append(s)
        return out

    def is_codeword(self, word):
        return len(word) == self.n and not any(self.syndromes(word))

    def decode(self, word, erasures=()):
        """Return the corrected codeword or raise DecodeFailure.

        Guaranteed when 2*errors + len(erasures) <= n - k.
        """
        n, nk, f = self.n, self.nk, self.field
        if len(word) != n:
            raise ValueError(f"RS decode expects {n} symbols, got {len(word)}")
        erasures = sorted(set(erasures))
        if any(not 0 <= p < n for p in erasures):
            raise ValueError("erasure position out of range")
        if len(erasures) > nk:
            raise DecodeFailure("rs", f"{len(erasures)} erasures exceed redundancy {nk}")
        word = list(word)
        for p in erasures:
            word[p] = 0
        synd = self.syndromes(word)
        if not any(synd):
            return word

        # erasure locator Gamma(x) = prod (1 - X_p x)
        gamma = [1]
        for p in erasures:
            gamma = f.poly_mul(gamma, [1, f.alpha_pow(self._loc_log[p])])
        lam, L = self._berlekamp_massey(synd, gamma, len(erasures))
        deg = poly_degree(lam)
        if deg != L or deg > nk:
            raise DecodeFailure("rs", "errata locator degree mismatch")

        positions = []
        for j in range(n):
            if f.poly_eval(lam, f.alpha_pow(-self._loc_log[j])) == 0:
                positions.append(j)
        if len(positions) != deg:
            raise DecodeFailure("rs", "Chien search found wrong number of roots")

        s_poly = synd
        omega = f.poly_mul(s_poly, lam)[:nk]
        dlam = [lam[i] if i % 2 == 1 else 0 for i in range(1, len(lam))]
        for j in positions:
            xinv = f.alpha_pow(-self._loc_log[j])
            den = f.poly_eval(dlam, xinv)
            if den == 0:
                raise DecodeFailure("rs", "Forney denominator vanished")
            word[j] ^= f.div(f.poly_eval(omega, xinv), den)
        if any(self.syndromes(word)):
            raise DecodeFailure("rs", "corrected word is not a codeword")
        return word

    def _berlekamp_massey(self, synd, gamma, n_erasures):
        f = self.field
        lam = list(gamma)
        prev = list(gamma)
        L = n_erasures
        for r in range(n_erasures + 1, self.nk + 1):
            delta = 0
            for j in range(min(len(lam), r)):
                if lam[j]:
                    delta ^= f.mul(lam[j], synd[r - j - 1])
            shifted = [0] + prev
            if delta == 0:
                prev = shifted
            elif 2 * L <= r - 1 + n_erasures:
                new = f.poly_add(lam, f.poly_scale(shifted, delta))
                prev = f.poly_scale(lam, f.inv(delta))
                L = r - L + n_erasures
                lam = new
            else:
                lam = f.poly_add(lam, f.poly_scale(shifted, delta))
                prev = shifted
        return lam, L


def rs_encode(data, code):
    return code.encode(data)


def rs_decode(word, erasures, code):
    return code.decode(word, erasures)
