"""Universal cycles and s-overlap cycles for weak orders on [n].

Weak orders are handled as height words: tuples whose entry ``j`` is the
level of element ``j + 1``.  Families of such words are turned into
overlap transition graphs, and Euler tours of those graphs spell the
cycles.
"""

from .core import (
    format_relation,
    from_ordered_partition,
    height,
    parse_relation,
    rotate,
    take_prefix,
    take_suffix,
    to_ordered_partition,
    validate,
    weight,
)
from .errors import (
    CycleNotFound,
    EmptyFamily,
    GapError,
    LengthMismatch,
    MissingZero,
    NotBalanced,
    NotConnected,
    OutOfRange,
    ParameterError,
    WeakCycleError,
)
from .euler import CycleResult, euler_tour, generate, spell, ucycle
from .families import (
    Family,
    all_weak_orders,
    binary,
    fixed_height,
    fixed_weight,
    fixed_weight_height,
    fixed_weight_height_prefix,
    fixed_weight_prefix,
    multiset_perms,
    multiset_perms_prefix,
    parse_family,
)
from .graph import TransitionGraph, build, export_dot, is_balanced, weakly_connected_components
from .oracle import decompose_weight, min_vertex_formula, min_vertex_oracle, verify

__version__ = "0.1.0"
