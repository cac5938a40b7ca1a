"""Exact sparse linear algebra used by the per-degree reduction.

The row-reduction kernel exists twice: a compiled extension built from
``_rowreduce.pyx`` and the pure-Python module ``_rowreduce_py``. Whichever
is importable wins at import time (the compiled one is preferred);
``BACKEND`` records the choice. Both produce bit-identical output, see
``benchmarks/bench_rowreduce.py`` for a timing comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

try:  # pragma: no cover - depends on the build
    from . import _rowreduce as _kernel
except ImportError:  # pragma: no cover
    from . import _rowreduce_py as _kernel

BACKEND: str = _kernel.BACKEND
rref = _kernel.rref


def integer_row(entries: list[tuple[int, Fraction]]) -> list[tuple[int, int]]:
    """Clear denominators and strip the content of a sorted sparse row."""
    if not entries:
        return []
    mult = lcm(*(c.denominator for _, c in entries)) if len(entries) > 1 else entries[0][1].denominator
    row = [(col, int(c * mult)) for col, c in entries]
    g = 0
    for _, v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    return [(col, v // g) for col, v in row]


def rank(rows: list[list[tuple[int, int]]]) -> int:
    """Rank of a collection of sparse integer rows."""
    return len(rref(rows))
