"""ISC1 text format: a header line, then one L-character 0/1 strand per line."""

import re

from .errors import FormatError
from .params import params_derive

_HEADER = re.compile(
    r"ISC1 M=(\d+) L=(\d+) l=(\d+) t=(\d+) e1=(\d+) e2=(\d+) seed=(\d+) payload_bytes=(\d+)")


def header_line(params, payload_bytes):
    p = params
    return (f"ISC1 M={p.M} L={p.L} l={p.l} t={p.t} e1={p.e1} e2={p.e2} "
            f"seed={p.code_seed} payload_bytes={payload_bytes}")


def dump_set(lines, params, payload_bytes):
    return "\n".join([header_line(params, payload_bytes), *lines]) + "\n"


def load_set(text):
    """Parse ISC1 text into (params, payload_bytes, strands as ints)."""
    rows = text.splitlines()
    if not rows:
        raise FormatError("empty file")
    m = _HEADER.fullmatch(rows[0].strip())
    if m is None:
        raise FormatError(f"bad ISC1 header: {rows[0]!r}")
    M, L, l, t, e1, e2, seed, nbytes = map(int, m.groups())
    params = params_derive(M, L, l, t, e1, e2, seed)
    if nbytes * 8 > params.capacity_bits:
        raise FormatError(f"payload_bytes={nbytes} exceeds capacity")
    strands = []
    for n, row in enumerate(rows[1:], start=2):
        row = row.strip()
        if not row:
            continue
        if len(row) != L or set(row) - {"0", "1"}:
            raise FormatError(f"line {n}: expected {L} characters of 0/1")
        strands.append(int(row, 2))
    return params, nbytes, strands
