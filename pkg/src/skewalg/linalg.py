"""Incremental exact-rational row reduction with provenance.

The accumulator keeps a forward echelon: each pivot row has coefficient 1
at its pivot column, leads there (the pivot is its minimum column), and
contains no pivot column that existed when it was installed.  Rows are
never modified afterwards, so provenance is computed exactly once per
pivot; reducing a vector walks its columns in ascending order, and
eliminating a pivot column only introduces larger columns, which keeps the
sweep finite.

Provenance expresses each pivot row as an exact combination of the vectors
that were inserted, keyed by insertion id; dependent insertions never
enter provenance.  express_in_span recovers a certificate for any vector
of the span by composing its pivot combination with the stored provenance.

Pivot choice is always the lowest column of the reduced remainder, so
ranks, remainders and certificates are deterministic functions of the
insertion sequence.  Expressing a vector that already lies in the span of
an earlier prefix of insertions gives the same combination no matter how
many further pivots exist: a column that pops nonzero during the sweep
must have its pivot inside any sufficient prefix, otherwise the vector
could not have reduced to zero there.
"""

import heapq
from collections import namedtuple

from .rationals import qq_div

SpanResult = namedtuple("SpanResult", "coefficients witness")
"""coefficients: {insertion id -> coefficient} when in span, else None;
witness: leading column of the nonzero remainder, else None."""


def _axpy(target: dict, c, src: dict):
    """target -= c * src, dropping exact zeros."""
    if c == 1:
        for k, v in src.items():
            nv = target.get(k, 0) - v
            if nv:
                target[k] = nv
            elif k in target:
                del target[k]
    elif c == -1:
        for k, v in src.items():
            nv = target.get(k, 0) + v
            if nv:
                target[k] = nv
            elif k in target:
                del target[k]
    else:
        for k, v in src.items():
            nv = target.get(k, 0) - c * v
            if nv:
                target[k] = nv
            elif k in target:
                del target[k]


class EchelonAccumulator:
    def __init__(self, dimension: int, track_provenance: bool = True):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        self.dimension = dimension
        self.track_provenance = track_provenance
        self.rows = {}  # pivot column -> row dict
        self.provenance = {}  # pivot column -> {insertion id -> coefficient}
        self.n_inserted = 0
        self.log = []  # rank_increased flag per insertion id
        self.last_pivot = None  # pivot column installed by the latest insert

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _check_dim(self, vec: dict):
        for k in vec:
            if not 0 <= k < self.dimension:
                raise ValueError(f"column {k} outside dimension {self.dimension}")

    def _reduce(self, vec: dict, combo: dict | None):
        """Eliminate every pivot column from vec, recording pivot multiples.

        Rows lead at their pivot, so elimination introduces only larger
        columns; an ascending-column sweep therefore terminates.
        """
        heap = [k for k in vec if k in self.rows]
        heapq.heapify(heap)
        seen = set()
        rows = self.rows
        while heap:
            col = heapq.heappop(heap)
            if col in seen or col not in vec:
                continue
            seen.add(col)
            row = rows[col]
            c = vec[col]
            _axpy(vec, c, row)
            for k in row:
                if k in rows and k not in seen and k in vec:
                    heapq.heappush(heap, k)
            if combo is not None:
                combo[col] = combo.get(col, 0) + c
        return vec

    def insert_reduce(self, vec: dict) -> bool:
        """Reduce a vector and install the remainder as a new pivot if nonzero.

        Returns whether the rank increased.  vec is not modified.
        """
        self._check_dim(vec)
        ins_id = self.n_inserted
        self.n_inserted += 1
        work = dict(vec)
        combo = {} if self.track_provenance else None
        self._reduce(work, combo)
        if not work:
            self.log.append(False)
            self.last_pivot = None
            return False
        pivot = min(work)
        inv = qq_div(1, work[pivot])
        self.rows[pivot] = {k: inv * v for k, v in work.items()}
        if self.track_provenance:
            prov = {ins_id: inv}
            for col, c in combo.items():
                _axpy(prov, inv * c, self.provenance[col])
            self.provenance[pivot] = prov
        self.log.append(True)
        self.last_pivot = pivot
        return True

    def residual(self, vec: dict) -> dict:
        """Remainder of vec modulo the current row space (a fresh dict)."""
        self._check_dim(vec)
        work = dict(vec)
        self._reduce(work, None)
        return work

    def rereduce(self, residual: dict):
        """Re-reduce an externally held residual after new pivots appeared."""
        self._reduce(residual, None)

    def express_in_span(self, vec: dict) -> SpanResult:
        """Exact coefficients of vec over the inserted vectors, or a witness.

        When vec lies in the span the returned combination satisfies
        sum(c_k * inserted_k) == vec coefficient-by-coefficient; otherwise
        the witness is the leading (minimum) column of the remainder.
        """
        if not self.track_provenance:
            raise ValueError("accumulator was built without provenance tracking")
        self._check_dim(vec)
        work = dict(vec)
        combo = {}
        self._reduce(work, combo)
        if work:
            return SpanResult(None, min(work))
        coeffs = {}
        for col, c in combo.items():
            _axpy(coeffs, -c, self.provenance[col])  # adds c * provenance
        return SpanResult(coeffs, None)
