from .field import FieldContext, FieldError, field_new, gf_add, gf_inv, gf_mul, gf_pow
from .rs import RSCode, rs_decode, rs_encode
from .bch import (
    BchCode, bch_build, bch_decode_to_syndrome, bch_redundancy, bch_syndrome,
    solve_parity_bits,
)

__all__ = [
    "FieldContext", "FieldError", "field_new", "gf_add", "gf_inv", "gf_mul", "gf_pow",
    "RSCode", "rs_encode", "rs_decode",
    "BchCode", "bch_build", "bch_syndrome", "bch_decode_to_syndrome",
    "bch_redundancy", "solve_parity_bits",
]
