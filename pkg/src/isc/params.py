"""Parameter validation and derived quantities for the indexed-set code."""

from dataclasses import asdict, dataclass

from .algebra.bch import bch_redundancy
from .errors import ParameterError
from .rng import MASK64

MAX_FIELD_DEGREE = 16


@dataclass(frozen=True)
class CodeParams:
    M: int
    L: int
    l: int
    t: int
    e1: int
    e2: int
    code_seed: int
    logM: int
    L_M: int
    beta: float
    r1: int
    g: int
    parity_rows: int
    anchor_parity: int
    capacity_bits: int

    @property
    def v_len(self):
        return self.L_M - self.l

    @property
    def data_symbols(self):
        return self.M - 2 * self.t

    def to_dict(self):
        return asdict(self)


def group_size(M, r1):
    """Smallest power-of-two g dividing M with M/g <= 2^(r1*g) - 1."""
    if r1 == 0:
        return 1
    g = 1
    while M // g > (1 << (r1 * g)) - 1:
        g *= 2
    return g


def params_derive(M, L, l, t, e1, e2, code_seed=1):
    def bad(msg):
        raise ParameterError(msg)

    for name, v in (("M", M), ("L", L), ("l", l), ("t", t), ("e1", e1), ("e2", e2),
                    ("code_seed", code_seed)):
        if not isinstance(v, int) or isinstance(v, bool):
            bad(f"{name} must be an integer")
    if M < 4 or M & (M - 1):
        bad(f"M={M} must be a power of two >= 4")
    if min(t, e1, e2) < 0:
        bad("t, e1, e2 must be non-negative")
    if not 0 <= code_seed <= MASK64:
        bad("code_seed must fit in 64 bits")
    logM = M.bit_length() - 1
    L_M = L - logM
    if L_M < 1:
        bad(f"L={L} leaves no data part after the {logM}-bit index")
    if e1 > logM:
        bad(f"e1={e1} exceeds index length logM={logM}")
    if e2 > L_M:
        bad(f"e2={e2} exceeds data length L_M={L_M}")
    if l < logM + 1:
        bad(f"anchor length l={l} violates l >= logM+1 = {logM + 1}")
    if l > MAX_FIELD_DEGREE:
        bad(f"anchor length l={l} exceeds field limit {MAX_FIELD_DEGREE}")
    if M - 2 * t < 1:
        bad(f"M - 2t = {M - 2 * t} must be >= 1")
    if e2 > 0:
        if 2 * e2 + 1 > L_M:
            bad(f"designed distance 2*e2+1 = {2 * e2 + 1} exceeds L_M={L_M}")
        if L_M.bit_length() > MAX_FIELD_DEGREE:
            bad(f"L_M={L_M} too long for a BCH locator field <= GF(2^16)")
    r1 = bch_redundancy(L_M, e2)
    if L_M - l < r1:
        bad(f"L_M - l = {L_M - l} < r1 = {r1}: no room for row parity")
    g = group_size(M, r1)
    if r1 * g > MAX_FIELD_DEGREE:
        bad(f"r1*g = {r1 * g} exceeds field limit {MAX_FIELD_DEGREE}")
    if M % g or M // g < 2 * t + 1:
        bad(f"M/g = {M // g} must be an integer >= 2t+1 = {2 * t + 1}")
    capacity = (M - 2 * t) * l + M * (L_M - l) - r1 * 2 * t * g
    return CodeParams(
        M=M, L=L, l=l, t=t, e1=e1, e2=e2, code_seed=code_seed,
        logM=logM, L_M=L_M, beta=logM / L, r1=r1, g=g,
        parity_rows=2 * t * g, anchor_parity=2 * t, capacity_bits=capacity,
    )
