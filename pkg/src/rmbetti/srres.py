"""Graded Betti numbers of the Stanley-Reisner ring attached to a linear code.

The simplicial complex has the parity-check columns as vertices; faces are
the independent column sets.  Two backends compute the Betti table:

* betti_hochster sweeps every vertex subset W and sums reduced homology
  dimensions of the restricted complex over a prime field (the slow,
  assumption-free oracle);
* betti_fastpath uses that restrictions of this complex are again of the
  same kind, so homology is concentrated in top degree and its dimension is
  the absolute value of the reduced Euler characteristic.  Euler
  characteristics and ranks for all 2^n restrictions come from two subset
  transforms over the independent-set indicator.

The two must agree wherever both run; purity and linearity verdicts,
closed-form Betti predictions for pure shift types, and weight extraction
from the table live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .bits import (indices_of, mask_of, popcount_table, subset_max_accumulate,
                   subset_sum_accumulate)
from .codes import LinearCode
from .errors import (CrossCheckError, DegenerateTypeError, ParameterError,
                     TooLargeError)
from .gf import GF, field, is_prime


class MatroidComplex:
    """Independence structure of parity-check columns, with memoized ranks."""

    def __init__(self, gf: GF, H):
        self.gf = gf
        self.H = np.asarray(H, dtype=gf.dtype)
        if self.H.ndim != 2:
            raise ParameterError("parity-check matrix must be 2-d")
        self.n = self.H.shape[1]
        self._rank_cache: dict[int, int] = {0: 0}

    @classmethod
    def from_code(cls, code: LinearCode) -> "MatroidComplex":
        return cls(code.gf, code.H)

    def rank(self, subset) -> int:
        mask = subset if isinstance(subset, int) else mask_of(subset)
        if mask >> self.n:
            raise IndexError(f"subset {bin(mask)} exceeds ground set size {self.n}")
        cached = self._rank_cache.get(mask)
        if cached is None:
            cols = list(indices_of(mask))
            cached = linalg.rank(self.gf, self.H[:, cols])
            self._rank_cache[mask] = cached
        return cached

    def is_face(self, subset) -> bool:
        mask = subset if isinstance(subset, int) else mask_of(subset)
        return self.rank(mask) == int(mask).bit_count()


def circuits(complex_or_code, *, max_n: int = 20) -> list[tuple[int, ...]]:
    """Minimal dependent column sets, sorted by (size, indices).

    These generate the Stanley-Reisner ideal; they coincide with the minimal
    supports of nonzero codewords (cross-checked in the test suite).
    """
    gf, H, n = complex_or_code.gf, complex_or_code.H, complex_or_code.n
    if n > max_n:
        raise TooLargeError(f"circuit sweep needs n <= {max_n}, n = {n}")
    ranks = linalg.subset_rank_table(gf, H)
    pc = popcount_table(n)
    nullity = pc.astype(np.int16) - ranks
    masks = np.arange(1 << n, dtype=np.int64)
    minimal = nullity >= 1
    for b in range(n):
        bit = 1 << b
        has_bit = (masks & bit) != 0
        # every one-element deletion must be independent
        minimal &= ~has_bit | (nullity[masks ^ bit] == 0)
    out = [indices_of(int(mask)) for mask in masks[minimal]]
    return sorted(out, key=lambda s: (len(s), s))


# -- reduced simplicial homology ---------------------------------------------


def _homology_dims_from_masks(face_masks, gfl: GF) -> dict[int, int]:
    by_size: dict[int, dict[int, int]] = {}
    for f in face_masks:
        f = int(f)
        by_size.setdefault(f.bit_count(), {})[f] = 0
    by_size.setdefault(0, {})[0] = 0  # the empty face is always present
    for level in by_size.values():
        for pos, f in enumerate(sorted(level)):
            level[f] = pos
    top = max(by_size)
    minus_one = gfl.neg(1)
    boundary_rank: dict[int, int] = {}
    for s in range(1, top + 1):
        upper = sorted(by_size.get(s, {}))
        lower = by_size.get(s - 1, {})
        mat = linalg.zeros(gfl, len(lower), len(upper))
        for col, f in enumerate(upper):
            for pos, v in enumerate(indices_of(f)):
                sub = f ^ (1 << v)
                if sub not in lower:
                    raise ParameterError("faces are not downward closed")
                mat[lower[sub], col] = 1 if pos % 2 == 0 else minus_one
        boundary_rank[s] = linalg.rank(gfl, mat)
    dims = {}
    for s in range(0, top + 1):
        chains = len(by_size.get(s, {}))
        dims[s - 1] = chains - boundary_rank.get(s, 0) - boundary_rank.get(s + 1, 0)
    return dims


def reduced_homology_dims(faces, ell: int) -> dict[int, int]:
    """Reduced homology dimensions by degree over GF(ell), ell prime.

    The empty face is always part of the complex (added if missing), so the
    one-face complex has a single dimension in degree -1 and any complex
    with a vertex has none there.
    """
    if not is_prime(ell):
        raise ParameterError(f"homology coefficients need a prime, got {ell}")
    masks = {0}
    for face in faces:
        masks.add(face if isinstance(face, int) else mask_of(face))
    return _homology_dims_from_masks(sorted(masks), field(ell))


# -- Betti tables ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BettiTable:
    """Sparse graded Betti numbers: entries maps (i, j) to beta_{i,j} >= 1."""
    n: int
    k: int
    entries: dict

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, self.entries[(i, j)]) for i, j in sorted(self.entries)]

    def shifts(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for (i, j) in self.entries:
            out.setdefault(i, []).append(j)
        return {i: tuple(sorted(js)) for i, js in out.items()}

    def proj_dim(self) -> int:
        return max(i for i, _ in self.entries)

    def alternating_sum(self) -> int:
        return sum((-1 if i % 2 else 1) * b for (i, _), b in self.entries.items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, BettiTable) and self.n == other.n
                and self.k == other.k and self.entries == other.entries)

    def to_json_obj(self) -> list[dict]:
        return [{"i": i, "j": j, "beta": b} for i, j, b in self.rows()]


def betti_hochster(code: LinearCode, ell: int = 2, *, max_n: int = 16) -> BettiTable:
    """Restriction sweep: beta_{i,j} sums dim H~_{j-i-1} of Delta restricted
    to each j-subset, homology taken over GF(ell)."""
    n = code.n
    if n > max_n:
        raise TooLargeError(f"2^n restriction sweep needs n <= {max_n}, n = {n}")
    if not is_prime(ell):
        raise ParameterError(f"homology coefficients need a prime, got {ell}")
    gfl = field(ell)
    faces = np.asarray(linalg.independent_column_sets(code.gf, code.H),
                       dtype=np.int64)
    pc = popcount_table(n)
    entries: dict[tuple[int, int], int] = {}
    for w in range(1 << n):
        sub = faces[(faces & ~w) == 0]
        j = int(pc[w])
        for d, h in _homology_dims_from_masks(sub, gfl).items():
            if h:
                key = (j - d - 1, j)
                entries[key] = entries.get(key, 0) + h
    return BettiTable(n=n, k=code.k, entries=entries)


def betti_fastpath(code: LinearCode, *, max_n: int = 20) -> BettiTable:
    """Face-count route: no boundary matrices.

    For every restriction W the only possible homology sits in degree
    rank(W) - 1 and has dimension |chi~(W)|, so one subset-sum transform
    (signed face counts) and one subset-max transform (ranks) give the whole
    table.  The sign of every nonzero chi~ is checked against the rank
    parity; a violation would mean the complex is not of the expected kind
    and raises instead of producing numbers.
    """
    n = code.n
    if n > max_n:
        raise TooLargeError(f"2^n subset transforms need n <= {max_n}, n = {n}")
    faces = np.asarray(linalg.independent_column_sets(code.gf, code.H),
                       dtype=np.int64)
    pc = popcount_table(n)
    sizes = pc[faces].astype(np.int64)

    chi = np.zeros(1 << n, dtype=np.int64)
    chi[faces] = np.where(sizes % 2 == 0, -1, 1)  # (-1)^(|face| - 1)
    subset_sum_accumulate(chi, n)

    ranks = np.zeros(1 << n, dtype=np.int16)
    ranks[faces] = sizes
    subset_max_accumulate(ranks, n)

    nonzero = chi != 0
    expected_sign = np.where(ranks % 2 == 1, 1, -1)
    if not np.array_equal(np.sign(chi[nonzero]), expected_sign[nonzero]):
        raise CrossCheckError(
            "Euler characteristic signs disagree with rank parity")

    all_pc = pc.astype(np.int64)
    i_idx = (all_pc - ranks)[nonzero]
    j_idx = all_pc[nonzero]
    grid = np.zeros((n + 1, n + 1), dtype=np.int64)
    np.add.at(grid, (i_idx, j_idx), np.abs(chi[nonzero]))
    entries = {(int(i), int(j)): int(grid[i, j])
               for i, j in zip(*np.nonzero(grid))}
    return BettiTable(n=n, k=code.k, entries=entries)


# -- purity ------------------------------------------------------------------


@dataclass(frozen=True)
class PurityVerdict:
    pure: bool
    type: tuple[int, ...] | None
    linear: bool
    violations: tuple[tuple[int, tuple[int, ...]], ...]


def purity_verdict(table: BettiTable) -> PurityVerdict:
    """Pure iff each homological position carries a single shift; linear iff
    additionally the shifts d_1..d_k are consecutive."""
    shifts = table.shifts()
    for i in range(table.k + 1):
        if i not in shifts:
            raise CrossCheckError(
                f"Betti table has no entries in homological position {i}")
    violations = tuple((i, js) for i, js in sorted(shifts.items()) if len(js) > 1)
    if violations:
        return PurityVerdict(False, None, False, violations)
    type_ = tuple(shifts[i][0] for i in range(table.k + 1))
    linear = all(type_[i + 1] == type_[i] + 1 for i in range(1, table.k))
    return PurityVerdict(True, type_, linear, ())


def herzog_kuhl_predicted(shift_type) -> list[Fraction]:
    """Closed-form Betti numbers for a pure shift type (d_0, d_1, ..., d_k).

    beta_i = prod over j != i of d_j / |d_j - d_i| (j, i >= 1), as exact
    rationals; for genuine pure resolutions these must come out integral.
    """
    d = [int(x) for x in shift_type]
    if len(d) < 1 or any(d[i] >= d[i + 1] for i in range(len(d) - 1)):
        raise DegenerateTypeError(f"shift type must be strictly increasing, got {d}")
    k = len(d) - 1
    out = []
    for i in range(1, k + 1):
        val = Fraction(1)
        for j in range(1, k + 1):
            if j != i:
                val *= Fraction(d[j], abs(d[j] - d[i]))
        out.append(val)
    return out


def ghw_from_betti(table: BettiTable) -> tuple[int, ...]:
    """d_i = smallest shift with a nonzero entry in homological position i."""
    shifts = table.shifts()
    return tuple(min(shifts[i]) for i in range(1, table.k + 1))
