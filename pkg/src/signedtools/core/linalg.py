"""
Exact linear algebra on small integer matrices.

The rank used throughout the package is computed by fraction-free (Bareiss)
elimination over Python integers. Float elimination is unsuitable here: rank
verdicts must be exact for every matrix the sweeps visit.
"""

from typing import Iterable, List, Sequence, Union

import numpy as np

from ..exceptions import GraphInputError
from .graph import SignedGraph


class IntMatrix:
    """
    Dense integer matrix.

    Entries live in a 2-D numpy array; elimination copies them to Python
    integers, which grow like sub-determinants.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Union[np.ndarray, Sequence[Sequence[int]]]):
        array = np.asarray(entries)
        if array.dtype.kind not in "iu" and array.dtype != object:
            array = array.astype(np.int64)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:
            raise GraphInputError(f"matrix must be 2-dimensional, got shape {array.shape}")
        self._entries = array

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def entries(self) -> np.ndarray:
        return self._entries.copy()

    def to_rows(self) -> List[List[int]]:
        """Entries as nested lists of Python integers."""
        return [[int(x) for x in row] for row in self._entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self._entries.T)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "IntMatrix":
        rows, cols = list(rows), list(cols)
        return IntMatrix(self._entries[np.ix_(rows, cols)].reshape(len(rows), len(cols)))

    def permuted(self, order: Sequence[int]) -> "IntMatrix":
        """Simultaneous row and column permutation."""
        order = list(order)
        return self.submatrix(order, order)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(np.hstack([self._entries, other._entries]))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and bool(np.array_equal(self._entries, self._entries.T))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(self._entries @ other._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._entries.shape == other._entries.shape and bool(
            np.array_equal(self._entries, other._entries)
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()})"


def zeros(rows: int, cols: int) -> IntMatrix:
    return IntMatrix(np.zeros((rows, cols), dtype=np.int64))


def adjacency_matrix(g: SignedGraph) -> IntMatrix:
    """Signed adjacency matrix: +1/-1 on Plus/Minus edges, 0 elsewhere."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.signed_edges():
        a[u, v] = a[v, u] = int(s)
    return IntMatrix(a)


def switching_matrix(n: int, switched: Iterable[int]) -> IntMatrix:
    """Diagonal +-1 matrix with -1 exactly on the switched vertices."""
    d = np.ones(n, dtype=np.int64)
    for v in switched:
        d[v] = -1
    return IntMatrix(np.diag(d))


def rank_exact(m: IntMatrix) -> int:
    """
    Rank over the rationals by fraction-free elimination.

    Full pivoting on the largest absolute value, ties broken by the lowest
    (row, col), so the elimination sequence is deterministic.
    """
    a = m.to_rows()
    n_rows, n_cols = m.rows, m.cols
    previous = 1
    rank = 0

    for k in range(min(n_rows, n_cols)):
        best = 0
        pivot_row = pivot_col = -1
        for i in range(k, n_rows):
            row = a[i]
            for j in range(k, n_cols):
                value = abs(row[j])
                if value > best:
                    best, pivot_row, pivot_col = value, i, j
        if best == 0:
            break

        a[k], a[pivot_row] = a[pivot_row], a[k]
        if pivot_col != k:
            for row in a:
                row[k], row[pivot_col] = row[pivot_col], row[k]

        pivot_line = a[k]
        pivot = pivot_line[k]
        for i in range(k + 1, n_rows):
            row = a[i]
            factor = row[k]
            for j in range(k + 1, n_cols):
                # Exact: every intermediate value is a minor of the permuted matrix
                row[j] = (row[j] * pivot - factor * pivot_line[j]) // previous
            row[k] = 0
        previous = pivot
        rank += 1

    return rank


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def rank_mod_p(m: IntMatrix, p: int) -> int:
    """
    Rank over the field with p elements.

    Used as an independent cross-check of ``rank_exact``; it can only be
    smaller.

    Raises:
        GraphInputError: if p is not prime
    """
    if not is_prime(p):
        raise GraphInputError(f"modulus must be prime, got {p}")

    a = np.array([[x % p for x in row] for row in m.to_rows()], dtype=object)
    if a.size == 0:
        return 0
    if p < 3_000_000_000:
        a = a.astype(np.int64)

    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.nonzero(a[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inverse = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inverse) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[rank])) % p
        rank += 1
    return rank


def signed_rank(g: SignedGraph) -> int:
    """r(G, sigma): rank of the signed adjacency matrix."""
    return rank_exact(adjacency_matrix(g))


def nullity(g: SignedGraph) -> int:
    """Multiplicity of the eigenvalue 0 of A(G, sigma)."""
    return g.n - signed_rank(g)
