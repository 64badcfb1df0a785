"""Finite partial orders: validation, linear extension, structured constructions.

The package stores relations in strict form over an ordered ground
sequence, extends any finite partial order to a total one (optionally
through a forced incomparable pair), and builds bipartition, block, and
dense-interleaving orders.  Every operation is deterministic given its
inputs and a tie-break policy.
"""

from .constructions import (
    Bijection,
    Partition,
    bipartition_order,
    dense_interleave,
    is_dense,
    partition_block_order,
)
from .core import (
    LinearOrder,
    Poset,
    check_ground,
    check_token,
    incomparable_pairs,
    is_comparable,
    order_from_enumeration,
    restrict,
    transitive_closure,
    validate,
)
from .errors import (
    AntisymmetryViolation,
    CapExceeded,
    ClosureCreatesReflexivePair,
    DuplicateElement,
    EmptyBlock,
    EmptySubset,
    InvalidToken,
    NotBijective,
    NotClosed,
    NotDisjoint,
    NotIncomparable,
    OrderError,
    ParseError,
    UnknownElement,
)
from .extension import (
    DEFAULT_COUNT_CAP,
    DEFAULT_ENUM_LIMIT,
    Enumeration,
    ExtensionCertificate,
    ForcedPair,
    count_linear_extensions,
    enumerate_linear_extensions,
    extend_with_pair,
    linear_extension,
    szpilrajn,
)
from .formats import (
    format_relation,
    parse_bijection,
    parse_partition,
    parse_relation,
    parse_sequence,
)
from .policy import TieBreakPolicy, TieBreaker

__version__ = "0.1.0"

__all__ = [
    "AntisymmetryViolation",
    "Bijection",
    "CapExceeded",
    "ClosureCreatesReflexivePair",
    "DEFAULT_COUNT_CAP",
    "DEFAULT_ENUM_LIMIT",
    "DuplicateElement",
    "EmptyBlock",
    "EmptySubset",
    "Enumeration",
    "ExtensionCertificate",
    "ForcedPair",
    "InvalidToken",
    "LinearOrder",
    "NotBijective",
    "NotClosed",
    "NotDisjoint",
    "NotIncomparable",
    "OrderError",
    "ParseError",
    "Partition",
    "Poset",
    "TieBreakPolicy",
    "TieBreaker",
    "UnknownElement",
    "bipartition_order",
    "check_ground",
    "check_token",
    "count_linear_extensions",
    "dense_interleave",
    "enumerate_linear_extensions",
    "extend_with_pair",
    "format_relation",
    "incomparable_pairs",
    "is_comparable",
    "is_dense",
    "linear_extension",
    "order_from_enumeration",
    "parse_bijection",
    "parse_partition",
    "parse_relation",
    "parse_sequence",
    "partition_block_order",
    "restrict",
    "szpilrajn",
    "transitive_closure",
    "validate",
]
