"""
Specht modules of S_n in the Kazhdan-Lusztig basis.

The module S^lambda has basis {C_T} indexed by the standard tableaux of
shape lambda.  A simple transposition acts on a basis vector through the
descent set of its tableau and the mu coefficients of column-word
preimages:

    s_j . C_T = -C_T                                  if j in D(T),
    s_j . C_T =  C_T + sum_{j in D(R)} mu(T, R) C_R   otherwise.

`generator_matrix` realizes this action as an integer matrix whose
column T holds the coordinates of s_j . C_T; `matrix_of` multiplies the
generator matrices along a reduced word, so matrix_of(u v) =
matrix_of(u) matrix_of(v) with the rightmost factor acting first.

Rows and columns follow a basis order, by default the total index order.
Ordering by index exposes a filtration: for j <= n-2 the action never
moves a basis vector toward a strictly larger index
(`check_filtration_invariance`), and the diagonal blocks of the
filtration (`quotient_matrices`) reproduce the Specht modules of S_{n-1}
for the shapes with one removable box deleted (`check_branching`), each
shape occurring once.

Matrices are plain lists of rows over exact Python numbers (int or
Fraction); nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import hecke
from .reports import CheckReport
from .symgroup import Perm, check_perm, reduced_word
from .tableaux import (
    Partition,
    Tableau,
    check_partition,
    count_syt,
    delete_largest,
    descent_set,
    enumerate_syt,
    format_tableau,
    removable_boxes,
    tableau_index,
)

__all__ = [
    'Matrix',
    'check_branching',
    'check_filtration_invariance',
    'generator_matrix',
    'identity_matrix',
    'mat_eq',
    'mat_mul',
    'mat_transpose',
    'matrix_entries',
    'matrix_of',
    'matrix_from_generator_word',
    'quotient_matrices',
    'total_index_order',
]

Matrix = list[list]  # rows of int or Fraction entries


# ---------------------------------------------------------------------------
# exact matrix helpers

def identity_matrix(d: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(d)] for i in range(d)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError('inner dimensions do not match')
    cols = len(b[0])
    out = []
    for row in a:
        new = [0] * cols
        for k, coeff in enumerate(row):
            if coeff:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        new[j] += coeff * brow[j]
        out.append(new)
    return out


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def mat_transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matrix_entries(a: Matrix) -> list[list[int | str]]:
    """Row-major entries for serialization: ints, or 'p/q' strings."""
    out: list[list[int | str]] = []
    for row in a:
        line: list[int | str] = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator == 1:
                    line.append(int(x))
                else:
                    line.append(f'{x.numerator}/{x.denominator}')
            else:
                line.append(int(x))
        out.append(line)
    return out


# ---------------------------------------------------------------------------
# the cell data of a shape

class _Cell:
    """Tableaux of one shape with descent sets and cached mu values."""

    def __init__(self, shape: Partition):
        check_partition(shape)
        self.shape = shape
        self.tableaux = enumerate_syt(shape)
        self.position = {t: i for i, t in enumerate(self.tableaux)}
        self.descents = [descent_set(t) for t in self.tableaux]
        self.indexes = [tableau_index(t) for t in self.tableaux]
        self._mu: dict[tuple[int, int], int] = {}

    def mu(self, i: int, j: int) -> int:
        if i == j:
            return 0
        if i > j:
            i, j = j, i
        key = (i, j)
        hit = self._mu.get(key)
        if hit is None:
            hit = hecke.mu_tableaux(self.tableaux[i], self.tableaux[j])
            self._mu[key] = hit
        return hit


@lru_cache(maxsize=None)
def cell(shape: Partition) -> _Cell:
    return _Cell(shape)


def total_index_order(shape: Partition) -> tuple[Tableau, ...]:
    """The default basis order (same as `enumerate_syt`)."""
    return cell(shape).tableaux


def _resolve_order(shape: Partition, order: Sequence[Tableau] | None) -> tuple[Tableau, ...]:
    c = cell(shape)
    if order is None:
        return c.tableaux
    order = tuple(order)
    if sorted(c.position.get(t, -1) for t in order) != list(range(len(c.tableaux))):
        raise ValueError(f'order is not a permutation of the tableaux of {shape}')
    return order


# ---------------------------------------------------------------------------
# matrices of the action

def generator_matrix(shape: Partition, j: int,
                     order: Sequence[Tableau] | None = None) -> Matrix:
    """Matrix of s_j acting on S^shape, columns indexed by `order`.

    >>> generator_matrix((2, 1), 1)
    [[-1, 1], [0, 1]]
    >>> generator_matrix((2, 1), 2)
    [[1, 0], [1, -1]]
    """
    basis = _resolve_order(shape, order)
    n = sum(shape)
    if not 1 <= j <= n - 1:
        raise ValueError(f's_{j} does not act on shape {shape}')
    c = cell(shape)
    d = len(basis)
    ids = [c.position[t] for t in basis]
    mat = [[0] * d for _ in range(d)]
    for col, ti in enumerate(ids):
        if j in c.descents[ti]:
            mat[col][col] = -1
        else:
            mat[col][col] = 1
            for row, ri in enumerate(ids):
                if ri != ti and j in c.descents[ri]:
                    m = c.mu(ti, ri)
                    if m:
                        mat[row][col] = m
    return mat


def matrix_from_generator_word(shape: Partition, word: Sequence[int],
                               order: Sequence[Tableau] | None = None) -> Matrix:
    """Product of generator matrices along a word (leftmost first)."""
    basis = _resolve_order(shape, order)
    out = identity_matrix(len(basis))
    for j in word:
        out = mat_mul(out, generator_matrix(shape, j, basis))
    return out


def matrix_of(shape: Partition, w: Perm,
              order: Sequence[Tableau] | None = None) -> Matrix:
    """Matrix of w acting on S^shape (via any reduced word of w)."""
    check_perm(w)
    if len(w) != sum(shape):
        raise ValueError(f'{w} does not act on shape {shape}')
    return matrix_from_generator_word(shape, reduced_word(w), order)


# ---------------------------------------------------------------------------
# filtration and branching

def check_filtration_invariance(shape: Partition) -> CheckReport:
    """Do all s_j with j <= n-2 keep the span of lower-index basis vectors?

    Checks that generator matrices in the total index order have no entry
    in a row of strictly larger index than its column.
    """
    c = cell(shape)
    n = sum(shape)
    failures = []
    for j in range(1, n - 1):
        mat = generator_matrix(shape, j)
        for col in range(len(mat)):
            for row in range(len(mat)):
                if mat[row][col] and c.indexes[row] > c.indexes[col]:
                    failures.append(
                        f's_{j} moves {format_tableau(c.tableaux[col])} '
                        f'(index {c.indexes[col]}) onto index {c.indexes[row]}'
                    )
    return CheckReport(
        theorem='filtration',
        passed=not failures,
        shape=shape,
        witness={'generators_checked': max(n - 2, 0)},
        failures=failures,
    )


def quotient_matrices(shape: Partition, i: int) -> list[Matrix]:
    """Matrices of s_1, ..., s_{n-2} on the index-i filtration quotient.

    Rows and columns run over the tableaux of index i in total index
    order (their relative order within the full basis).
    """
    c = cell(shape)
    n = sum(shape)
    members = [k for k, idx in enumerate(c.indexes) if idx == i]
    if not members:
        raise ValueError(f'shape {shape} has no removable box labelled {i}')
    out = []
    for j in range(1, n - 1):
        mat = generator_matrix(shape, j)
        out.append([[mat[r][col] for col in members] for r in members])
    return out


def check_branching(shape: Partition) -> CheckReport:
    """Do the filtration quotients reproduce the S_{n-1} Specht modules?

    For each removable box i with reduced shape mu_i, deleting the
    largest entry must map the index-i tableaux bijectively and
    order-preservingly onto SYT(mu_i), and the quotient matrices must
    equal the generator matrices of S^{mu_i} on the nose.  The reduced
    shapes are pairwise distinct, so the restriction is multiplicity
    free.
    """
    c = cell(shape)
    n = sum(shape)
    failures = []
    reduced: list[Partition] = []
    for i, (r, _col) in enumerate(removable_boxes(shape), start=1):
        parts = list(shape)
        parts[r - 1] -= 1
        small = tuple(p for p in parts if p)
        reduced.append(small)
        members = [t for t, idx in zip(c.tableaux, c.indexes) if idx == i]
        if not small:
            if len(members) != 1:
                failures.append(f'index-{i} class has size {len(members)}, expected 1')
            continue
        image = [delete_largest(t)[0] for t in members]
        if image != list(enumerate_syt(small)):
            failures.append(
                f'index-{i} class does not map onto SYT({small}) in order'
            )
            continue
        quots = quotient_matrices(shape, i)
        for j, quot in enumerate(quots, start=1):
            expect = generator_matrix(small, j)
            if not mat_eq(quot, expect):
                failures.append(
                    f'index-{i} quotient of s_{j} differs from S^{small}'
                )
        if len(members) != count_syt(small):
            failures.append(
                f'index-{i} class has size {len(members)}, '
                f'expected {count_syt(small)}'
            )
    if len(set(reduced)) != len(reduced):
        failures.append('restriction is not multiplicity free')
    return CheckReport(
        theorem='branching',
        passed=not failures,
        shape=shape,
        witness={'reduced_shapes': [list(s) for s in reduced]},
        failures=failures,
    )
