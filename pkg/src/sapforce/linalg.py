"""Exact rational matrices and the linear-system view of the SAP.

A symmetric matrix A fitting a graph G has the Strong Arnold Property when
the only symmetric X with A o X = O, I o X = O, AX = O is the zero matrix.
Writing X with one variable per non-edge turns AX = O into an n^2 x m
linear system; its coefficient matrix (rows indexed by pairs (i,k), columns
by non-edges) is full column rank exactly when A has the property.

All arithmetic is exact: entries are fractions, rank and determinant go
through fraction-free (Bareiss) elimination after clearing denominators.
There is no tolerance anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .graphs import Graph, bits
from .sapgame import NonEdgePair, sorted_non_edge


class PatternError(ValueError):
    """A matrix entry disagrees with the graph's zero pattern."""


class PerturbationError(RuntimeError):
    """The diagonal perturbation search hit its doubling cap."""


Entry = Fraction | int | str


def _frac(x: Entry) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix of exact rationals (kept in lowest terms)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Entry]]) -> "RationalMatrix":
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged rows")
        return RationalMatrix(len(data), ncols, data)

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def add_scaled_diagonal(self, scale: Entry, positions: Iterable[int]) -> "RationalMatrix":
        """Add ``scale`` to the listed 0-based diagonal positions."""
        s = _frac(scale)
        pos = set(positions)
        data = [list(row) for row in self.entries]
        for i in pos:
            data[i][i] += s
        return RationalMatrix.from_rows(data)

    def _integer_rows(self) -> tuple[list[list[int]], list[int]]:
        out = []
        scales = []
        for row in self.entries:
            mult = lcm(*(x.denominator for x in row)) if row else 1
            scales.append(mult)
            out.append([int(x * mult) for x in row])
        return out, scales

    def rank(self) -> int:
        """Exact rank by fraction-free elimination with first-nonzero pivoting."""
        if self.rows == 0 or self.cols == 0:
            return 0
        m, _ = self._integer_rows()
        rows, cols = self.rows, self.cols
        prev = 1
        r = 0
        for c in range(cols):
            pivot_row = next((i for i in range(r, rows) if m[i][c]), None)
            if pivot_row is None:
                continue
            if pivot_row != r:
                m[r], m[pivot_row] = m[pivot_row], m[r]
            piv = m[r][c]
            mr = m[r]
            for i in range(r + 1, rows):
                mi = m[i]
                mic = mi[c]
                for j in range(c + 1, cols):
                    mi[j] = (mi[j] * piv - mic * mr[j]) // prev
                mi[c] = 0
            prev = piv
            r += 1
            if r == rows:
                break
        return r

    def nullity(self) -> int:
        return self.cols - self.rank()

    def determinant(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return Fraction(1)
        m, scales = self._integer_rows()
        sign = 1
        prev = 1
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if m[i][c]), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                sign = -sign
            piv = m[c][c]
            for i in range(c + 1, n):
                mic = m[i][c]
                mi, mc = m[i], m[c]
                for j in range(c + 1, n):
                    mi[j] = (mi[j] * piv - mic * mc[j]) // prev
                mi[c] = 0
            prev = piv
        det_scaled = Fraction(sign * m[n - 1][n - 1])
        for s in scales:
            det_scaled /= s
        return det_scaled


def rank(m: RationalMatrix) -> int:
    return m.rank()


def nullity(m: RationalMatrix) -> int:
    return m.nullity()


# -- matrix text format -------------------------------------------------
#
# Line 1: "n"; lines 2..n+1: n whitespace-separated entries, integers or
# "p/q" fractions.  Symmetry is checked on load.

def parse_matrix(text: str) -> RationalMatrix:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty matrix text")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"expected {n} entries per row, got {len(parts)}")
        rows.append([Fraction(p) for p in parts])
    m = RationalMatrix.from_rows(rows)
    if not m.is_symmetric():
        raise ValueError("matrix is not symmetric")
    return m


def format_matrix(m: RationalMatrix) -> str:
    lines = [str(m.rows)]
    for row in m.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


# -- pattern families ----------------------------------------------------

class PatternFamily(Enum):
    S = "S"
    S_ELL = "S_ell"
    S_PLUS = "S_plus"

    @staticmethod
    def from_label(label: str) -> "PatternFamily":
        for fam in PatternFamily:
            if fam.value.lower() == label.lower():
                return fam
        raise ValueError(f"unknown family {label!r}")


def validate_pattern(g: Graph, a: RationalMatrix) -> None:
    """Check A is symmetric with off-diagonal support exactly the edge set."""
    if a.rows != g.n or a.cols != g.n:
        raise PatternError(f"matrix is {a.rows}x{a.cols}, graph has {g.n} vertices")
    if not a.is_symmetric():
        raise PatternError("matrix is not symmetric")
    for i in range(g.n):
        for j in range(i + 1, g.n):
            nonzero = a.entries[i][j] != 0
            edge = g.has_edge(i + 1, j + 1)
            if nonzero and not edge:
                raise PatternError(f"entry ({i + 1},{j + 1}) nonzero on a non-edge")
            if edge and not nonzero:
                raise PatternError(f"entry ({i + 1},{j + 1}) zero on an edge")


def sample_matrix(g: Graph, family: PatternFamily, seed: int) -> RationalMatrix:
    """Seeded random matrix fitting the graph pattern.

    Off-diagonal edge entries are nonzero integers in [-10, 10]; diagonals
    are integers in [-10, 10] subject to the family rule.  The PSD family
    shifts the diagonal by the largest absolute row sum, which makes the
    matrix diagonally dominant with nonnegative diagonal, hence positive
    semidefinite, without any eigenvalue computation.
    """
    rng = random.Random(seed)

    def nonzero() -> int:
        while True:
            v = rng.randint(-10, 10)
            if v:
                return v

    n = g.n
    data = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges():
        val = Fraction(nonzero())
        data[u - 1][v - 1] = val
        data[v - 1][u - 1] = val
    for v in range(1, n + 1):
        if family is PatternFamily.S_ELL:
            diag = 0 if g.degree(v) == 0 else nonzero()
        else:
            diag = rng.randint(-10, 10)
        data[v - 1][v - 1] = Fraction(diag)
    m = RationalMatrix.from_rows(data)
    if family is PatternFamily.S_PLUS:
        shift = max(sum(abs(x) for x in row) for row in m.entries)
        m = m.add_scaled_diagonal(shift, range(n))
    return m


# -- the SAP system matrix ------------------------------------------------

@dataclass(frozen=True)
class SapMatrix:
    """Coefficient matrix of AX = O over the non-edge variables of X.

    Rows are indexed by pairs (i,k) ordered by k then i, so the k-th block
    of n rows carries the equations from column k of AX.  In the column of
    non-edge {i,j}, block i holds column j of A, block j holds column i,
    and every other block is zero.
    """

    host: Graph
    nonedge_order: tuple[NonEdgePair, ...]
    psi: RationalMatrix

    def row_index(self, i: int, k: int) -> int:
        return (k - 1) * self.host.n + (i - 1)

    def column_index(self, e: NonEdgePair) -> int:
        return self.nonedge_order.index(_normalize(e))

    def rank(self) -> int:
        return self.psi.rank()

    def is_full_column_rank(self) -> bool:
        return self.rank() == len(self.nonedge_order)

    def to_sparse_text(self) -> str:
        """One line per nonzero entry: ``i k j h value``."""
        lines = []
        n = self.host.n
        for col, (j, h) in enumerate(self.nonedge_order):
            for r in range(self.psi.rows):
                val = self.psi.entries[r][col]
                if val:
                    k, i = divmod(r, n)
                    lines.append(f"{i + 1} {k + 1} {j} {h} {val}")
        return "\n".join(lines) + ("\n" if lines else "")


def _normalize(e: NonEdgePair) -> NonEdgePair:
    u, v = e
    return (u, v) if u < v else (v, u)


def build_sap_matrix(
    g: Graph,
    a: RationalMatrix,
    order: Sequence[NonEdgePair] | None = None,
) -> SapMatrix:
    """Assemble the system matrix for A against a chosen non-edge order."""
    validate_pattern(g, a)
    canonical = [sorted_non_edge(g, u, v) for u, v in (order or g.non_edges())]
    if sorted(canonical) != sorted(g.non_edges()) or len(set(canonical)) != len(canonical):
        raise ValueError("order must list every non-edge exactly once")
    n = g.n
    rows = [[Fraction(0)] * len(canonical) for _ in range(n * n)]
    for col, (j, h) in enumerate(canonical):
        for i in range(1, n + 1):
            # block j gets column h of A, block h gets column j
            rows[(j - 1) * n + (i - 1)][col] = a.entries[i - 1][h - 1]
            rows[(h - 1) * n + (i - 1)][col] = a.entries[i - 1][j - 1]
    return SapMatrix(g, tuple(canonical), RationalMatrix.from_rows(rows))


def has_sap(g: Graph, a: RationalMatrix) -> bool:
    """Exact test: the system matrix has full column rank."""
    return build_sap_matrix(g, a).is_full_column_rank()


def sap_oracle(g: Graph, a: RationalMatrix) -> bool:
    """Independent check that solves AX = O for an explicit symbolic X.

    Materializes the symmetric X with one symbol per non-edge (so the
    Hadamard conditions hold by construction) and asks sympy's linear
    solver whether the zero assignment is the only solution.
    """
    import sympy

    validate_pattern(g, a)
    non_edges = g.non_edges()
    if not non_edges:
        return True
    syms = {e: sympy.Symbol(f"x_{e[0]}_{e[1]}") for e in non_edges}
    n = g.n
    x = sympy.zeros(n, n)
    for (u, v), s in syms.items():
        x[u - 1, v - 1] = s
        x[v - 1, u - 1] = s
    a_s = sympy.Matrix([[sympy.Rational(a.entries[i][j]) for j in range(n)] for i in range(n)])
    product = a_s * x
    equations = [product[i, j] for i in range(n) for j in range(n)]
    solset = sympy.linsolve(equations, list(syms.values()))
    (solution,) = tuple(solset)
    return all(expr == 0 for expr in solution)


# -- odd cycle determinant -------------------------------------------------

def odd_cycle_matrix(a: Sequence[Entry]) -> RationalMatrix:
    """Two-diagonal cyclic matrix: row s carries a_{s+1} on the diagonal and
    a_{s-1} just left of it (indices wrapping around)."""
    vals = [_frac(x) for x in a]
    n = len(vals)
    if n < 3 or n % 2 == 0:
        raise ValueError("cycle length must be odd and at least 3")
    if any(v == 0 for v in vals):
        raise ValueError("cycle entries must be nonzero")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for s in range(n):
        rows[s][s] = vals[(s + 1) % n]
        rows[s][(s - 1) % n] = vals[(s - 1) % n]
    return RationalMatrix.from_rows(rows)


def odd_cycle_det(a: Sequence[Entry]) -> Fraction:
    """Determinant of the odd-cycle matrix; equals twice the entry product."""
    return odd_cycle_matrix(a).determinant()


# -- diagonal perturbation ---------------------------------------------------

def diagonal_indicator(g: Graph, vertices: Iterable[int]) -> RationalMatrix:
    """Diagonal 0/1 matrix marking the given vertices."""
    marked = set(vertices)
    return RationalMatrix.from_rows(
        [[1 if (i == j and i + 1 in marked) else 0 for j in range(g.n)] for i in range(g.n)]
    )


def perturbation_witness(
    g: Graph,
    a: RationalMatrix,
    vertices: Iterable[int],
    max_doublings: int = 64,
) -> tuple[Fraction, RationalMatrix]:
    """Find x in 0, 1, 2, 4, ... so that A + x*D_B gains the property.

    The caller supplies a vertex set B that wins the restricted non-edge
    game; the block-triangular structure that the game certifies makes the
    perturbed system nonsingular for all large x, so doubling terminates.
    Hitting the cap signals a bad input set or an implementation fault.
    """
    validate_pattern(g, a)
    marked = sorted(set(vertices))
    if has_sap(g, a):
        return Fraction(0), a
    positions = [v - 1 for v in marked]
    x = Fraction(1)
    for _ in range(max_doublings):
        candidate = a.add_scaled_diagonal(x, positions)
        if has_sap(g, candidate):
            return x, candidate
        x *= 2
    raise PerturbationError(
        f"no diagonal shift up to 2^{max_doublings - 1} produced the property; "
        "the vertex set is likely not a valid forcing set"
    )
