"""String kernels with a compiled fast path.

Imports the Cython extension when the build produced one, otherwise the
pure-Python fallback. ``IMPLEMENTATION`` records which one won so tests
and the benchmark can report it.
"""

from . import _pure

try:
    from . import _kernels as _impl

    IMPLEMENTATION = "cython"
except ImportError:  # extension not built
    _impl = _pure
    IMPLEMENTATION = "pure-python"

levenshtein = _impl.levenshtein
similarity = _impl.similarity

__all__ = ["IMPLEMENTATION", "levenshtein", "similarity"]
