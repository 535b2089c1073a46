"""
Exact QR factorization over Q and the theorem verifiers built on it.

`exact_qr` runs Gram-Schmidt in Fraction arithmetic, normalizing only
when every squared column norm is the square of a rational; otherwise Q
would have irrational entries and `IrrationalNormError` is raised (for
the matrices checked here that already rules out a signed-permutation Q,
whose R = Q^T M would be an integer matrix with perfect-square norms).
Singular input raises `SingularMatrixError` instead.  The factorization
(orthonormal Q, upper-triangular R with positive diagonal, QR = M) is
asserted exactly before returning.

The verifiers factor matrices of the Specht module action:

* `verify_thm1`: the long cycle c = (2, ..., n, 1) acts, in any basis
  order weakly increasing in the tableau index, by Q R with Q the signed
  permutation matrix of jeu de taquin promotion, signs constant on index
  classes, and the matrix itself supports columns only on promotions of
  tableaux of weakly smaller index.
* `verify_thm4_chain`: for a chain J_1 < ... < J_k of connected
  generator subsets, w = w_{J_k} ... w_{J_1} acts by Q R with Q the
  signed permutation of the composite partial-evacuation symmetry phi =
  phi_{J_k} ... phi_{J_1}, signs constant on the blocks of the composite
  preorder.
* `verify_counterexample`: for the non-separable w = 2413 on shape
  (3, 1), no basis order at all yields a signed-permutation Q.
* `search_ordering`: brute-force the basis orders of a small module for
  one that makes QR of [w] a signed permutation.

For a connected J = {p, ..., q-1} (positions p..q, block size
m = q-p+1), the tableau symmetry is phi_J = ev_q ev_m ev_q and the
preorder compares, lexicographically, the chain of index labels obtained
by peeling the largest n-m entries off ev_q(T); chains compare their
members' keys outermost first and break final ties by the total index
order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _permutations
from math import isqrt
from random import Random
from typing import Iterable, Sequence

from .jdt import partial_evacuate, promote
from .reports import CheckReport
from .specht import (
    Matrix,
    identity_matrix,
    mat_eq,
    mat_mul,
    mat_transpose,
    matrix_of,
    total_index_order,
)
from .symgroup import (
    Perm,
    long_cycle,
    longest_element,
    multiply,
)
from .tableaux import (
    Partition,
    Tableau,
    delete_largest,
    format_tableau,
    shape_of,
    tableau_index,
    total_index_key,
)

__all__ = [
    'IrrationalNormError',
    'QRFactorization',
    'SignedPermutation',
    'SingularMatrixError',
    'all_connected_chains',
    'as_signed_permutation',
    'exact_qr',
    'phi_connected',
    'preorder_connected',
    'random_index_monotone_order',
    'search_ordering',
    'verify_counterexample',
    'verify_thm1',
    'verify_thm4_chain',
]


class SingularMatrixError(ValueError):
    """The columns are linearly dependent; QR needs full rank."""


class IrrationalNormError(ArithmeticError):
    """A Gram-Schmidt squared norm is not a rational square, so the
    orthonormal factor leaves the rationals."""

    def __init__(self, column: int, norm2: Fraction):
        super().__init__(
            f'column {column}: squared norm {norm2} is not a rational square'
        )
        self.column = column
        self.norm2 = norm2


@dataclass(frozen=True)
class QRFactorization:
    q: Matrix
    r: Matrix


@dataclass(frozen=True)
class SignedPermutation:
    """Q with exactly one entry +-1 per row and column: column c carries
    sign signs[c] into row target[c]."""

    target: tuple[int, ...]
    signs: tuple[int, ...]


def _rational_sqrt(x: Fraction) -> Fraction | None:
    num = isqrt(x.numerator)
    den = isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def exact_qr(m: Matrix) -> QRFactorization:
    """Exact QR with orthonormal Q and positive upper-triangular R.

    >>> f = exact_qr([[0, 1], [1, 0]])
    >>> f.q == [[0, 1], [1, 0]] and f.r == [[1, 0], [0, 1]]
    True
    """
    d = len(m)
    if d == 0 or any(len(row) != d for row in m):
        raise ValueError('exact_qr needs a nonempty square matrix')
    cols = [[Fraction(m[r][c]) for r in range(d)] for c in range(d)]
    us: list[list[Fraction]] = []
    norms2: list[Fraction] = []
    for k, col in enumerate(cols):
        u = list(col)
        for prev, n2 in zip(us, norms2):
            coeff = sum(a * b for a, b in zip(u, prev)) / n2
            if coeff:
                u = [a - coeff * b for a, b in zip(u, prev)]
        n2 = sum(a * a for a in u)
        if n2 == 0:
            raise SingularMatrixError(
                f'column {k} depends linearly on earlier columns'
            )
        us.append(u)
        norms2.append(n2)
    q_cols = []
    for k, (u, n2) in enumerate(zip(us, norms2)):
        root = _rational_sqrt(n2)
        if root is None:
            raise IrrationalNormError(k, n2)
        q_cols.append([a / root for a in u])
    q = [[q_cols[c][r] for c in range(d)] for r in range(d)]
    r_mat = mat_mul(mat_transpose(q), [list(row) for row in m])
    assert mat_eq(mat_mul(mat_transpose(q), q), identity_matrix(d)), \
        'Q is not orthonormal'
    assert mat_eq(mat_mul(q, r_mat), [list(row) for row in m]), 'QR != M'
    for i in range(d):
        assert r_mat[i][i] > 0, 'R diagonal must be positive'
        assert all(r_mat[i][j] == 0 for j in range(i)), 'R must be triangular'
    return QRFactorization(q=q, r=r_mat)


def as_signed_permutation(m: Matrix) -> SignedPermutation | None:
    """Read m as a signed permutation matrix, or None.

    >>> as_signed_permutation([[1, 1], [0, 1]]) is None
    True
    """
    d = len(m)
    target = []
    signs = []
    for c in range(d):
        hits = [r for r in range(d) if m[r][c] != 0]
        if len(hits) != 1:
            return None
        r = hits[0]
        v = m[r][c]
        if v == 1:
            signs.append(1)
        elif v == -1:
            signs.append(-1)
        else:
            return None
        target.append(r)
    if sorted(target) != list(range(d)):
        return None
    return SignedPermutation(tuple(target), tuple(signs))


# ---------------------------------------------------------------------------
# basis orders

def is_index_monotone(order: Sequence[Tableau]) -> bool:
    idx = [tableau_index(t) for t in order]
    return all(a <= b for a, b in zip(idx, idx[1:]))


def random_index_monotone_order(shape: Partition, rng: Random) -> tuple[Tableau, ...]:
    """Shuffle each index class of the total index order in place."""
    out: list[Tableau] = []
    block: list[Tableau] = []
    current = None
    for t in total_index_order(shape):
        i = tableau_index(t)
        if i != current and block:
            rng.shuffle(block)
            out.extend(block)
            block = []
        current = i
        block.append(t)
    rng.shuffle(block)
    out.extend(block)
    return tuple(out)


# ---------------------------------------------------------------------------
# the long-cycle check

def verify_thm1(shape: Partition,
                order: Sequence[Tableau] | None = None) -> CheckReport:
    """QR-factor the long cycle action and compare Q with promotion."""
    t0 = time.perf_counter()
    basis = tuple(order) if order is not None else total_index_order(shape)
    if sorted(basis) != sorted(total_index_order(shape)):
        raise ValueError(f'order is not a basis order for {shape}')
    if not is_index_monotone(basis):
        raise ValueError('order must be weakly increasing in tableau index')
    n = sum(shape)
    cyc = long_cycle(n)
    mat = matrix_of(shape, cyc, basis)
    pos = {t: i for i, t in enumerate(basis)}
    prom = [pos[promote(t)] for t in basis]
    idx = [tableau_index(t) for t in basis]
    origin = [0] * len(basis)  # origin[prom[c]] = c
    for c, r in enumerate(prom):
        origin[r] = c
    failures = []

    # leading-term shape of the matrix itself: column T is supported on
    # rows pr(R) with index(R) <= index(T), and carries +-1 at pr(T)
    for c in range(len(basis)):
        lead = mat[prom[c]][c]
        if lead not in (1, -1):
            failures.append(
                f'column {format_tableau(basis[c])} has {lead} at its promotion row'
            )
        for r in range(len(basis)):
            if mat[r][c] and idx[origin[r]] > idx[c]:
                failures.append(
                    f'column {format_tableau(basis[c])} leaks onto the promotion '
                    f'of a larger-index tableau (row {r})'
                )

    signs: dict[str, int] = {}
    try:
        fact = exact_qr(mat)
    except IrrationalNormError as err:
        failures.append(f'no rational QR: {err}')
        fact = None
    if fact is not None:
        sp = as_signed_permutation(fact.q)
        if sp is None:
            failures.append('Q is not a signed permutation matrix')
        else:
            for c, r in enumerate(sp.target):
                if r != prom[c]:
                    failures.append(
                        f'Q sends {format_tableau(basis[c])} to row {r}, '
                        f'but promotion sits at row {prom[c]}'
                    )
                    break
            else:
                for c, s in enumerate(sp.signs):
                    label = str(idx[c])
                    if label not in signs:
                        signs[label] = s
                    elif signs[label] != s:
                        failures.append(
                            f'sign flips inside index class {label}'
                        )
    return CheckReport(
        theorem='thm1',
        passed=not failures,
        shape=tuple(shape),
        ordering=tuple(format_tableau(t) for t in basis),
        witness={
            'cycle': list(cyc),
            'promotion': prom,
        },
        signs=signs or None,
        failures=failures,
        timing=time.perf_counter() - t0,
    )


def thm1_shape_reports(shape: Partition, seed: int = 0,
                       shuffles: int = 10) -> list[CheckReport]:
    """The canonical order plus seeded random index-monotone reorders."""
    reports = [verify_thm1(shape)]
    rng = Random(f'{seed}:thm1:{"-".join(map(str, shape))}')
    for _ in range(shuffles):
        reports.append(verify_thm1(shape, random_index_monotone_order(shape, rng)))
    return reports


# ---------------------------------------------------------------------------
# connected subsets, partial evacuation symmetries, chains

def _block(j_set: Iterable[int], n: int) -> tuple[int, int]:
    js = sorted(set(j_set))
    if not js:
        raise ValueError('J must be a nonempty set of generator indices')
    if js[0] < 1 or js[-1] > n - 1:
        raise ValueError(f'J must lie in 1..{n - 1}: {js}')
    if js != list(range(js[0], js[-1] + 1)):
        raise ValueError(f'J must be connected: {js}')
    return js[0], js[-1] + 1


def phi_connected(j_set: Iterable[int], t: Tableau) -> Tableau:
    """The tableau symmetry realized by w_J for connected J.

    With positions p..q (p = min J, q = max J + 1) and block size
    m = q-p+1, this is ev_q ev_m ev_q.
    """
    n = sum(shape_of(t))
    p, q = _block(j_set, n)
    m = q - p + 1
    out = partial_evacuate(t, q)
    out = partial_evacuate(out, m)
    return partial_evacuate(out, q)


def preorder_connected(j_set: Iterable[int], shape: Partition) -> dict[Tableau, tuple[int, ...]]:
    """Class keys of the total preorder attached to connected J.

    Keys compare lexicographically; equal keys are the sign-constancy
    classes.  The key of T peels the top n-m entries off ev_q(T),
    recording index labels (so J = {1..n-1} has one class, and smaller
    blocks refine down to the total index order).
    """
    n = sum(shape)
    p, q = _block(j_set, n)
    depth = n - (q - p + 1)
    keys = {}
    for t in total_index_order(shape):
        e = partial_evacuate(t, q)
        key = []
        for _ in range(depth):
            e, i = delete_largest(e)
            key.append(i)
        keys[t] = tuple(key)
    return keys


def all_connected_chains(n: int) -> list[tuple[frozenset[int], ...]]:
    """Every strictly increasing chain of connected generator subsets."""
    intervals = [
        frozenset(range(a, b + 1))
        for a in range(1, n)
        for b in range(a, n)
    ]
    intervals.sort(key=lambda s: (len(s), min(s)))
    chains: list[tuple[frozenset[int], ...]] = []

    def extend(chain: list[frozenset[int]]) -> None:
        chains.append(tuple(chain))
        for iv in intervals:
            if chain[-1] < iv:
                chain.append(iv)
                extend(chain)
                chain.pop()

    for iv in intervals:
        extend([iv])
    return chains


def verify_thm4_chain(shape: Partition,
                      chain: Sequence[Iterable[int]]) -> CheckReport:
    """QR-factor w_{J_k} ... w_{J_1} against the composite symmetry."""
    t0 = time.perf_counter()
    n = sum(shape)
    js = [frozenset(j) for j in chain]
    if not js:
        raise ValueError('chain must be nonempty')
    for j in js:
        _block(j, n)
    for a, b in zip(js, js[1:]):
        if not a < b:
            raise ValueError('chain must strictly increase')
    w = tuple(range(1, n + 1))
    for j in js:
        w = multiply(longest_element(j, n), w)
    key_maps = [preorder_connected(j, shape) for j in js]
    tabs = total_index_order(shape)

    def composite(t: Tableau) -> tuple:
        return tuple(km[t] for km in reversed(key_maps))

    basis = tuple(sorted(tabs, key=lambda t: (composite(t), total_index_key(t))))
    pos = {t: i for i, t in enumerate(basis)}
    phi = {}
    for t in tabs:
        out = t
        for j in js:
            out = phi_connected(j, out)
        phi[t] = out
    mat = matrix_of(shape, w, basis)
    failures = []
    signs: dict[str, int] = {}
    try:
        fact = exact_qr(mat)
    except IrrationalNormError as err:
        failures.append(f'no rational QR: {err}')
        fact = None
    if fact is not None:
        sp = as_signed_permutation(fact.q)
        if sp is None:
            failures.append('Q is not a signed permutation matrix')
        else:
            for c, t in enumerate(basis):
                if sp.target[c] != pos[phi[t]]:
                    failures.append(
                        f'Q sends {format_tableau(t)} to row {sp.target[c]}, '
                        f'but the composite symmetry sits at row {pos[phi[t]]}'
                    )
                    break
            else:
                for c, s in enumerate(sp.signs):
                    label = str(composite(basis[c]))
                    if label not in signs:
                        signs[label] = s
                    elif signs[label] != s:
                        failures.append(f'sign flips inside class {label}')
    return CheckReport(
        theorem='thm4',
        passed=not failures,
        shape=tuple(shape),
        ordering=tuple(format_tableau(t) for t in basis),
        witness={
            'chain': [sorted(j) for j in js],
            'w': list(w),
            'symmetry': {
                format_tableau(t): format_tableau(phi[t]) for t in tabs
            },
        },
        signs=signs or None,
        failures=failures,
        timing=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# the nonseparable counterexample and small searches

def _reindexed(base: Matrix, perm: Sequence[int]) -> Matrix:
    return [[base[r][c] for c in perm] for r in perm]


def verify_counterexample() -> CheckReport:
    """No basis order lets QR work for the pattern 2413 on shape (3, 1).

    Tries all 6 orderings of the 3 tableaux; each must fail, either with
    an irrational Gram-Schmidt norm or with Q not a signed permutation.
    As a sanity check the same harness accepts the long cycle on the same
    shape.
    """
    t0 = time.perf_counter()
    shape = (3, 1)
    w = (2, 4, 1, 3)
    base = matrix_of(shape, w)
    tabs = total_index_order(shape)
    failures = []
    outcomes = {}
    for perm in _permutations(range(len(tabs))):
        label = '|'.join(format_tableau(tabs[i]) for i in perm)
        try:
            fact = exact_qr(_reindexed(base, perm))
        except IrrationalNormError:
            outcomes[label] = 'irrational norm'
            continue
        if as_signed_permutation(fact.q) is None:
            outcomes[label] = 'Q not a signed permutation'
        else:
            outcomes[label] = 'unexpected signed permutation'
            failures.append(
                f'ordering {label} factors [2413] through a signed permutation'
            )
    if len(tabs) != 3:
        failures.append('expected 3 standard tableaux of shape (3, 1)')
    if len(outcomes) != 6:
        failures.append('expected exactly 6 orderings of 3 tableaux')
    sanity = search_ordering(shape, long_cycle(4))
    if sanity is None:
        failures.append('no ordering accepts the long cycle on (3, 1)')
    return CheckReport(
        theorem='counterexample',
        passed=not failures,
        shape=shape,
        witness={
            'w': list(w),
            'orderings': outcomes,
            'long_cycle_ordering':
                None if sanity is None
                else [format_tableau(t) for t in sanity],
        },
        failures=failures,
        timing=time.perf_counter() - t0,
    )


def search_ordering(shape: Partition, w: Perm,
                    max_dim: int = 7) -> tuple[Tableau, ...] | None:
    """First basis order making QR of [w] a signed permutation, or None.

    Orders are tried in lexicographic position order against the total
    index order, so the result is deterministic.  Modules larger than
    `max_dim` are refused (the search is factorial).
    """
    tabs = total_index_order(shape)
    if len(tabs) > max_dim:
        raise ValueError(
            f'dimension {len(tabs)} exceeds the search bound {max_dim}'
        )
    base = matrix_of(shape, w)
    for perm in _permutations(range(len(tabs))):
        try:
            fact = exact_qr(_reindexed(base, perm))
        except IrrationalNormError:
            continue
        if as_signed_permutation(fact.q) is not None:
            return tuple(tabs[i] for i in perm)
    return None
