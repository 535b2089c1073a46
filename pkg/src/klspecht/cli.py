"""
Command line front end.

Compute commands (syt, pr, ev, evk, rsk, rsk-inv, css, klpoly, mu,
mu-tab, matrix, qr) print their result and exit 0.  The verify command
runs a theorem sweep and exits 0 when every check passes, 1 otherwise;
unparseable input exits 2.

Literals: partitions "3,1,1"; tableaux "1,4,5/2/3" (rows split by "/");
permutations "8,5,1,6,2,7,3,4" or digit shorthand "85162734" (n <= 9);
the letter "c" for the long cycle (2, ..., n, 1) where the ambient n is
known from a partition or a sibling permutation.

--format structured emits a single JSON document that is byte-identical
across runs with the same inputs and seed (timings are nulled there;
text mode prints them).  --jobs parallelizes verify sweeps across shapes
in separate processes; output order does not depend on scheduling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from random import Random
from typing import Sequence

from . import hecke, jdt, rsk, specht, symgroup, tableaux
from .qrkit import (
    all_connected_chains,
    exact_qr,
    IrrationalNormError,
    thm1_shape_reports,
    verify_counterexample,
    verify_thm4_chain,
)
from .reports import CheckReport
from .specht import matrix_entries

__all__ = ['main', 'run']

_FAMILY_DEFAULT_MAX_N = {
    'thm1': 6,
    'branching': 6,
    'prop-dmu': 6,
    'lemma-pr': 8,
    'thm4': 5,
    'sep-desc': 6,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='klspecht',
        description='Specht modules in the Kazhdan-Lusztig basis: '
                    'combinatorics, exact matrices, and theorem checks.',
    )
    parser.add_argument('--format', choices=('text', 'structured'),
                        default='text', help='output style')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed for randomized sweeps')
    parser.add_argument('--jobs', type=int, default=1,
                        help='worker processes for verify sweeps')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('syt', help='list the tableaux of a shape in total index order')
    p.add_argument('shape')

    for name, text in (('pr', 'jeu de taquin promotion'),
                       ('ev', 'evacuation')):
        p = sub.add_parser(name, help=text)
        p.add_argument('tableau')

    p = sub.add_parser('evk', help='partial evacuation of the top k entries')
    p.add_argument('tableau')
    p.add_argument('k', type=int)

    p = sub.add_parser('rsk', help='insertion and recording tableaux of a word')
    p.add_argument('word')

    p = sub.add_parser('rsk-inv', help='permutation with given insertion and recording tableaux')
    p.add_argument('p')
    p.add_argument('q')

    p = sub.add_parser('css', help='column superstandard tableau (optionally of index i)')
    p.add_argument('shape')
    p.add_argument('i', type=int, nargs='?')

    p = sub.add_parser('klpoly', help='Kazhdan-Lusztig polynomial P_{v,w}')
    p.add_argument('v')
    p.add_argument('w')

    p = sub.add_parser('mu', help='top KL coefficient mu(v, w)')
    p.add_argument('v')
    p.add_argument('w')

    p = sub.add_parser('mu-tab', help='mu between column-word preimages of two tableaux')
    p.add_argument('shape')
    p.add_argument('t')
    p.add_argument('r')

    p = sub.add_parser('matrix', help='matrix of w on the Specht module of a shape')
    p.add_argument('shape')
    p.add_argument('w')

    p = sub.add_parser('qr', help='matrix of w with its exact QR factorization')
    p.add_argument('shape')
    p.add_argument('w')

    p = sub.add_parser('verify', help='run a theorem check or sweep')
    p.add_argument('what', choices=('thm1', 'branching', 'prop-dmu', 'lemma-pr',
                                    'thm4', 'rhoades', 'counterexample',
                                    'sep-desc'))
    p.add_argument('--max-n', type=int, default=None,
                   help='largest n to sweep (default per family; '
                        'KLSPECHT_MAX_N overrides the default)')
    return parser


def _perm_pair(vtext: str, wtext: str) -> tuple[symgroup.Perm, symgroup.Perm]:
    """Parse two permutations, letting one of them be the literal c."""
    if vtext == 'c' and wtext == 'c':
        raise ValueError('cannot infer n with both arguments equal to "c"')
    if vtext == 'c':
        w = symgroup.parse_perm(wtext)
        return symgroup.long_cycle(len(w)), w
    v = symgroup.parse_perm(vtext)
    return v, symgroup.parse_perm(wtext, len(v))


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.format == 'structured':
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _matrix_lines(mat) -> list[str]:
    return [' '.join(str(tok) for tok in row) for row in matrix_entries(mat)]


# ---------------------------------------------------------------------------
# verify sweeps (worker functions are top level so --jobs can pickle them)

def _thm1_job(job: tuple[tuple[int, ...], int]) -> list[CheckReport]:
    shape, seed = job
    return thm1_shape_reports(shape, seed)


def _branching_job(shape: tuple[int, ...]) -> list[CheckReport]:
    return [specht.check_filtration_invariance(shape),
            specht.check_branching(shape)]


def _dmu_job(shape: tuple[int, ...]) -> list[CheckReport]:
    tabs = tableaux.enumerate_syt(shape)
    failures = []
    pairs = 0
    by_index: dict[int, list] = {}
    for t in tabs:
        by_index.setdefault(tableaux.tableau_index(t), []).append(t)
    for i, members in sorted(by_index.items()):
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                t, r = members[a], members[b]
                pairs += 1
                before = hecke.mu_tableaux(t, r)
                after = hecke.mu_tableaux(tableaux.delete_largest(t)[0],
                                          tableaux.delete_largest(r)[0])
                if before != after:
                    failures.append(
                        f'mu changes under deletion for '
                        f'{tableaux.format_tableau(t)}, {tableaux.format_tableau(r)}'
                        f' (index {i}): {before} vs {after}'
                    )
    return [CheckReport(theorem='prop-dmu', passed=not failures, shape=shape,
                        witness={'same_index_pairs': pairs},
                        failures=failures)]


def _lemma_pr_job(shape: tuple[int, ...]) -> list[CheckReport]:
    n = sum(shape)
    failures = []
    for t in tableaux.enumerate_syt(shape):
        if n == 1:
            expected = t
        else:
            expected = jdt.evacuate(jdt.partial_evacuate(t, n - 1))
        if jdt.promote(t) != expected:
            failures.append(
                f'promotion differs from double evacuation on '
                f'{tableaux.format_tableau(t)}'
            )
    return [CheckReport(theorem='lemma-pr', passed=not failures, shape=shape,
                        witness={'tableaux': len(tableaux.enumerate_syt(shape))},
                        failures=failures)]


def _thm4_job(shape: tuple[int, ...]) -> list[CheckReport]:
    n = sum(shape)
    return [verify_thm4_chain(shape, chain)
            for chain in all_connected_chains(n)]


def _sep_desc_job(n: int) -> list[CheckReport]:
    failures = []
    separable = {w for w in symgroup.all_perms(n) if symgroup.is_separable(w)}
    descending = set(symgroup.descending_table(n)) | {symgroup.identity(n)}
    if separable != descending:
        extra = separable - descending
        missing = descending - separable
        if extra:
            failures.append(
                f'separable but not descending: {sorted(extra)[:3]}'
            )
        if missing:
            failures.append(
                f'descending but not separable: {sorted(missing)[:3]}'
            )
    expected = symgroup.schroeder_number(n - 1)
    if len(separable) != expected:
        failures.append(
            f'{len(separable)} separable permutations in S_{n}, '
            f'Schroeder number says {expected}'
        )
    for w in sorted(separable):
        tree = symgroup.separable_tree(w)
        if tree is None or symgroup.tree_to_perm(tree) != w:
            failures.append(f'decomposition tree fails for {w}')
            break
    return [CheckReport(theorem='sep-desc', passed=not failures,
                        shape=None,
                        witness={'n': n, 'count': len(separable),
                                 'schroeder': expected},
                        failures=failures)]


def _rhoades_reports(seed: int) -> list[CheckReport]:
    failures = []
    checked = 0
    for u in symgroup.all_perms(3):
        for v in symgroup.all_perms(3):
            for k in range(4):
                checked += 1
                if not hecke.check_rhoades_insertion(u, v, k):
                    failures.append(f'mu not preserved for {u}, {v}, slot {k}')
    exhaustive = CheckReport(theorem='rhoades', passed=not failures,
                             witness={'scope': 'exhaustive S_3', 'checked': checked},
                             failures=list(failures))
    failures = []
    rng = Random(f'{seed}:rhoades')
    base = list(range(1, 5))
    checked = 0
    for _ in range(1000):
        u = base[:]
        v = base[:]
        rng.shuffle(u)
        rng.shuffle(v)
        k = rng.randint(0, 4)
        checked += 1
        if not hecke.check_rhoades_insertion(tuple(u), tuple(v), k):
            failures.append(f'mu not preserved for {tuple(u)}, {tuple(v)}, slot {k}')
    sampled = CheckReport(theorem='rhoades', passed=not failures,
                          witness={'scope': 'seeded S_4 samples', 'checked': checked},
                          failures=failures)
    return [exhaustive, sampled]


def _sweep(args, family: str) -> list[CheckReport]:
    max_n = args.max_n
    if max_n is None:
        env = os.environ.get('KLSPECHT_MAX_N')
        max_n = int(env) if env else _FAMILY_DEFAULT_MAX_N.get(family, 6)
    if family == 'counterexample':
        return [verify_counterexample()]
    if family == 'rhoades':
        return _rhoades_reports(args.seed)
    if family == 'sep-desc':
        jobs = list(range(1, max_n + 1))
        worker = _sep_desc_job
    else:
        shapes = [shape
                  for n in range(2, max_n + 1)
                  for shape in tableaux.partitions(n)]
        if family == 'thm1':
            jobs = [(shape, args.seed) for shape in shapes]
            worker = _thm1_job
        elif family == 'branching':
            jobs = shapes
            worker = _branching_job
        elif family == 'prop-dmu':
            jobs = shapes
            worker = _dmu_job
        elif family == 'lemma-pr':
            jobs = shapes
            worker = _lemma_pr_job
        elif family == 'thm4':
            jobs = shapes
            worker = _thm4_job
        else:
            raise ValueError(f'unknown verify family: {family}')
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            batches = list(pool.map(worker, jobs))
    else:
        batches = [worker(job) for job in jobs]
    return [report for batch in batches for report in batch]


def _report_label(report: CheckReport) -> str:
    bits = [report.theorem]
    if report.shape is not None:
        bits.append(f'shape={tableaux.format_partition(report.shape)}')
    if 'chain' in report.witness:
        chain = report.witness['chain']
        bits.append('chain=' + '<'.join(
            '{' + ','.join(str(x) for x in j) + '}' for j in chain))
    if 'n' in report.witness:
        bits.append(f'n={report.witness["n"]}')
    if 'scope' in report.witness:
        bits.append(report.witness['scope'])
    return ' '.join(bits)


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    try:
        return _dispatch(args)
    except ValueError as err:
        print(f'error: {err}', file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == 'syt':
        shape = tableaux.parse_partition(args.shape)
        tabs = tableaux.enumerate_syt(shape)
        _emit(args,
              {'command': 'syt', 'shape': list(shape),
               'result': [tableaux.format_tableau(t) for t in tabs]},
              [tableaux.format_tableau(t) for t in tabs])
        return 0
    if cmd in ('pr', 'ev'):
        t = tableaux.parse_tableau(args.tableau)
        out = jdt.promote(t) if cmd == 'pr' else jdt.evacuate(t)
        _emit(args,
              {'command': cmd, 'tableau': tableaux.format_tableau(t),
               'result': tableaux.format_tableau(out)},
              [tableaux.format_tableau(out)])
        return 0
    if cmd == 'evk':
        t = tableaux.parse_tableau(args.tableau)
        out = jdt.partial_evacuate(t, args.k)
        _emit(args,
              {'command': cmd, 'tableau': tableaux.format_tableau(t),
               'k': args.k, 'result': tableaux.format_tableau(out)},
              [tableaux.format_tableau(out)])
        return 0
    if cmd == 'rsk':
        w = symgroup.parse_perm(args.word)
        p, q = rsk.rsk(w)
        _emit(args,
              {'command': 'rsk', 'word': list(w),
               'result': {'p': tableaux.format_tableau(p),
                          'q': tableaux.format_tableau(q)}},
              [f'P: {tableaux.format_tableau(p)}',
               f'Q: {tableaux.format_tableau(q)}'])
        return 0
    if cmd == 'rsk-inv':
        p = tableaux.parse_tableau(args.p)
        q = tableaux.parse_tableau(args.q)
        w = rsk.inverse_rsk(p, q)
        _emit(args,
              {'command': 'rsk-inv', 'result': list(w)},
              [symgroup.format_perm(w)])
        return 0
    if cmd == 'css':
        shape = tableaux.parse_partition(args.shape)
        out = rsk.css(shape) if args.i is None else rsk.css_i(shape, args.i)
        _emit(args,
              {'command': 'css', 'shape': list(shape), 'i': args.i,
               'result': tableaux.format_tableau(out)},
              [tableaux.format_tableau(out)])
        return 0
    if cmd == 'klpoly':
        v, w = _perm_pair(args.v, args.w)
        poly = hecke.kl_polynomial(v, w)
        _emit(args,
              {'command': 'klpoly', 'v': list(v), 'w': list(w),
               'result': hecke.format_qpoly(poly),
               'coefficients': list(poly)},
              [hecke.format_qpoly(poly)])
        return 0
    if cmd == 'mu':
        v, w = _perm_pair(args.v, args.w)
        value = hecke.mu(v, w)
        _emit(args,
              {'command': 'mu', 'v': list(v), 'w': list(w), 'result': value},
              [str(value)])
        return 0
    if cmd == 'mu-tab':
        shape = tableaux.parse_partition(args.shape)
        t = tableaux.parse_tableau(args.t)
        r = tableaux.parse_tableau(args.r)
        if tableaux.shape_of(t) != shape or tableaux.shape_of(r) != shape:
            raise ValueError('tableaux do not have the stated shape')
        value = hecke.mu_tableaux(t, r)
        _emit(args,
              {'command': 'mu-tab', 'shape': list(shape),
               't': tableaux.format_tableau(t), 'r': tableaux.format_tableau(r),
               'result': value},
              [str(value)])
        return 0
    if cmd == 'matrix':
        shape = tableaux.parse_partition(args.shape)
        w = symgroup.parse_perm(args.w, sum(shape))
        mat = specht.matrix_of(shape, w)
        _emit(args,
              {'command': 'matrix', 'shape': list(shape), 'w': list(w),
               'result': matrix_entries(mat)},
              _matrix_lines(mat))
        return 0
    if cmd == 'qr':
        shape = tableaux.parse_partition(args.shape)
        w = symgroup.parse_perm(args.w, sum(shape))
        mat = specht.matrix_of(shape, w)
        try:
            fact = exact_qr(mat)
        except IrrationalNormError as err:
            _emit(args,
                  {'command': 'qr', 'shape': list(shape), 'w': list(w),
                   'result': None, 'error': str(err)},
                  [f'no rational QR: {err}'])
            return 1
        _emit(args,
              {'command': 'qr', 'shape': list(shape), 'w': list(w),
               'result': {'m': matrix_entries(mat),
                          'q': matrix_entries(fact.q),
                          'r': matrix_entries(fact.r)}},
              ['M'] + _matrix_lines(mat)
              + ['Q'] + _matrix_lines(fact.q)
              + ['R'] + _matrix_lines(fact.r))
        return 0
    if cmd == 'verify':
        t0 = time.perf_counter()
        reports = _sweep(args, args.what)
        elapsed = time.perf_counter() - t0
        passed = all(r.passed for r in reports)
        if args.format == 'structured':
            doc = {
                'command': 'verify',
                'family': args.what,
                'seed': args.seed,
                'passed': passed,
                'reports': [r.record() for r in reports],
            }
            print(json.dumps(doc, sort_keys=True))
        else:
            for r in reports:
                status = 'PASS' if r.passed else 'FAIL'
                line = f'{status} {_report_label(r)}'
                if r.timing is not None:
                    line += f' ({r.timing:.3f}s)'
                print(line)
                for failure in r.failures:
                    print(f'  {failure}')
            ok = sum(1 for r in reports if r.passed)
            print(f'{ok}/{len(reports)} checks passed in {elapsed:.2f}s')
        return 0 if passed else 1
    raise ValueError(f'unknown command: {cmd}')


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
