import itertools
import math

from weakcycles.errors import EmptyFamily
from weakcycles.families import (
    all_weak_orders,
    binary,
    fixed_height,
    fixed_weight,
    fixed_weight_height,
    fixed_weight_height_prefix,
    fixed_weight_prefix,
    multiset_perms,
    multiset_perms_prefix,
)


def nonempty(factory, *args):
    try:
        f = factory(*args)
        f.enumerate()
    except EmptyFamily:
        return None
    return f


def families_of_size(n):
    """Every supported family with parameter n (multisets: size n over 0..n-1)."""
    out = [all_weak_orders(n), binary(n)]
    out += [fixed_height(n, h) for h in range(n)]
    for k in range(math.comb(n, 2) + 1):
        out.append(fixed_weight(n, k))
        if n >= 2:
            out.append(fixed_weight_prefix(n, k))
        for h in range(n):
            for factory in (fixed_weight_height, fixed_weight_height_prefix):
                if factory is fixed_weight_height_prefix and n < 2:
                    continue
                f = nonempty(factory, n, k, h)
                if f is not None:
                    out.append(f)
    for m in itertools.combinations_with_replacement(range(n), n):
        out.append(multiset_perms(m))
        if n >= 2:
            out.append(multiset_perms_prefix(m))
    return out
