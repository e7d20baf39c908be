"""Error-correcting codes for unordered indexed sets of binary strands."""

from .anchors import (
    AnchorTuple, AnchorWord, anchor_encode, anchor_recover, constraint_check, index_tally,
)
from .bounds import (
    BoundsReport, ball_size, bounds_report, construction_redundancy, gilbert_varshamov,
    sphere_packing,
)
from .channel import (
    ErrorPattern, balls_disjoint, corrupt, count_indexed_outputs, enumerate_outputs,
)
from .codec import IndexedSet, ReceivedSet, decode, encode, is_codeword, position_match
from .errors import (
    AmbiguousMatch, DecodeFailure, EncodingRejection, FormatError, GuardExceeded,
    ParameterError,
)
from .params import CodeParams, params_derive
from .tpc import TpcLayout, tpc_decode, tpc_encode, tpc_layout

__version__ = "0.1.0"
