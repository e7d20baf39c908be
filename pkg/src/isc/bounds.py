"""Redundancy of the anchored construction and sphere-packing / GV bounds.

Counts are exact Python ints; a logarithm is taken only once per quantity,
on an exact integer or a ratio of exact integers.
"""

import csv
import io
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from math import comb, factorial, log2

from .algebra.bch import bch_redundancy
from .errors import ParameterError
from .params import group_size, params_derive


def ball_size(n, r):
    """Number of n-bit vectors of weight <= r."""
    if n < 0 or r < 0:
        raise ValueError("ball_size needs n, r >= 0")
    return sum(comb(n, i) for i in range(min(r, n) + 1))


def _log2q(q):
    q = Fraction(q)
    return log2(q.numerator) - log2(q.denominator)


def _logM(M):
    if M < 2 or M & (M - 1):
        raise ParameterError(f"M={M} must be a power of two >= 2")
    return M.bit_length() - 1


def sphere_packing(M, L_M, t, e2):
    """(exact, simplified) lower bounds on redundancy in bits.

    The exact value is None when e2 = 0 and t > 0: no data error is possible,
    so the counting argument gives nothing.
    """
    if t == 0:
        return 0.0, 0.0
    logM = log2(M)
    simplified = t * logM + t * e2 * log2(L_M) - t * log2(t * e2 ** e2)
    b = ball_size(L_M, e2) - 1
    if b <= 0:
        return None, simplified
    return log2(comb(M, t) * b ** t), simplified


def gilbert_varshamov(M, L_M, t, e1, e2):
    """(exact, asymptotic) achievable redundancy in bits."""
    if M <= t:
        raise ParameterError(f"GV bound needs M > t (M={M}, t={t})")
    logM = _logM(M)
    asym = 2 * t * logM + 2 * t * e2 * log2(L_M) - 2 * t * log2(factorial(e2)) if t else 0.0
    if t == 0:
        return 0.0, asym
    bd = ball_size(L_M, e2)
    bi = ball_size(logM, e1)
    num = comb(M, t) ** 2 * bd ** (2 * t) * (factorial(t) ** 2 * (M - t) + t * bi ** (2 * t))
    return _log2q(Fraction(num, M - t)), asym


def closed_form_r1_r2(M, L_M, t, e2):
    logM = _logM(M)
    r1 = e2 * (L_M - 1).bit_length()
    if r1 == 0:
        return 0, 0
    r2 = 2 * t * -(-logM // r1) if r1 <= logM else 2 * t
    return r1, r2


def anchor_violation_fraction(M, l, e1, e2):
    """2^-l * B_{2e1}(log M) * B_{2e2}(l), exactly."""
    return Fraction(ball_size(_logM(M), 2 * e1) * ball_size(l, 2 * e2), 1 << l)


def construction_redundancy(M, L_M, l, t, e1, e2):
    """(r_A, r_constr_paper, r_constr_implemented); the first two are None
    when the anchor log argument is not positive."""
    x = anchor_violation_fraction(M, l, e1, e2)
    r1, r2 = closed_form_r1_r2(M, L_M, t, e2)
    if x < 1:
        r_A = 2 * t * l - M * _log2q(1 - x)
        r_closed = r_A + r1 * r2
    else:
        r_A = r_closed = None
    r1_impl = bch_redundancy(L_M, e2)
    g = group_size(M, r1_impl)
    r_impl = 2 * t * l + r1_impl * 2 * t * g
    return r_A, r_closed, float(r_impl)


@dataclass(frozen=True)
class BoundsReport:
    M: int
    L: int
    l: int
    t: int
    e1: int
    e2: int
    logM: int
    L_M: int
    r_sp_exact: object
    r_sp_paper: float
    r_gv_exact: float
    r_gv_asym: float
    r_A: object
    r_constr_paper: object
    r_constr_implemented: float
    delta: float
    r_A_defined: bool
    r_sp_defined: bool
    codec_valid: bool

    def to_dict(self):
        return asdict(self)


CSV_COLUMNS = [f.name for f in fields(BoundsReport)]


def bounds_report(M, L, l, t, e1, e2):
    logM = _logM(M)
    L_M = L - logM
    if L_M < 1:
        raise ParameterError(f"L={L} leaves no data part after the index")
    if min(t, e1, e2) < 0 or l < 1:
        raise ParameterError("t, e1, e2 must be >= 0 and l >= 1")
    sp_exact, sp_simplified = sphere_packing(M, L_M, t, e2)
    gv_exact, gv_asym = gilbert_varshamov(M, L_M, t, e1, e2)
    r_A, r_closed, r_impl = construction_redundancy(M, L_M, l, t, e1, e2)
    try:
        params_derive(M, L, l, t, e1, e2)
        valid = True
    except ParameterError:
        valid = False
    return BoundsReport(
        M=M, L=L, l=l, t=t, e1=e1, e2=e2, logM=logM, L_M=L_M,
        r_sp_exact=sp_exact, r_sp_paper=sp_simplified,
        r_gv_exact=gv_exact, r_gv_asym=gv_asym,
        r_A=r_A, r_constr_paper=r_closed, r_constr_implemented=r_impl,
        delta=l / logM - 1, r_A_defined=r_A is not None,
        r_sp_defined=sp_exact is not None, codec_valid=valid,
    )


def reports_to_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.to_dict()
        w.writerow(["" if d[c] is None else (repr(d[c]) if isinstance(d[c], float) else d[c])
                    for c in CSV_COLUMNS])
    return buf.getvalue()
