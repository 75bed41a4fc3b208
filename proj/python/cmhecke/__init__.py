"""Simplest Hecke characters of imaginary quadratic fields.

Construction of the simplest characters of K = Q(sqrt(-D)), their root
numbers, the dimension of the associated CM abelian varieties, and numeric
certification of the vanishing-order law ord_{s=1} L(s, chi) = (1 - W)/2.
"""

try:
    from ._cmhecke import *  # noqa: F401,F403
    from ._cmhecke import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension built out-of-tree (plain CMake build)
    from _cmhecke import *  # noqa: F401,F403
