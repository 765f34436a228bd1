r"""
Command-line front end: batch classification, multiplicity tables,
socle descriptors, cell membership, and the selftest scoreboard.

Output is deterministic: identical invocations produce byte-identical
stdout.  JSON objects are emitted with sorted keys; TSV rows use the
permutation digit form and '^'/'v' weight words so tables stay
grep-able.  Exit codes: 0 success, 1 check failure (an engine
disagreement or a failing selftest), 2 usage error.

The default n ceiling is 8.  It can be raised with --n-max, with a
warning, except for selftest where 8 is a hard bound.  Paths that need
the dense Kazhdan-Lusztig table (the kl and both engines, and any
thinness column outside the maximal case) stop at n = 6.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bigrassmannian import socle_descriptor
from .checks import ALL_CHECKS
from .compositions import Composition, classify_general, is_thin_general
from .cup_diagrams import (
    MaxParContext,
    a_value,
    graded_multiplicity,
    is_kostant_positive_maximal,
    is_thin,
    phi,
    shortest_reps,
)
from .klcells import (
    MAX_KL_N,
    is_small_cell_member,
    kl_table,
    parabolic_verma_multiplicity,
)
from .minimal_parabolic import MinParContext, is_kostant_positive_minimal
from .permutations import (
    Permutation,
    enumerate_group,
    enumerate_shortest_reps,
    is_shortest_coset_rep,
    longest_element,
    parse_permutation,
)
from .tableaux import rsk

DEFAULT_N_MAX = 8


class UsageError(Exception):
    pass


def _guard_n(n: int, n_max: int, hard: bool = False) -> None:
    if n < 1:
        raise UsageError(f'n must be positive, got {n}')
    if n > n_max:
        raise UsageError(
            f'n={n} exceeds the limit {n_max}'
            + ('' if hard else '; raise it with --n-max if you mean it')
        )
    if n_max > DEFAULT_N_MAX and not hard:
        print(
            f'warning: n limit raised to {n_max}; runs beyond n=8 can take '
            'very long and use much memory',
            file=sys.stderr,
        )


def _require_kl(n: int, what: str) -> None:
    if n > MAX_KL_N:
        raise UsageError(
            f'{what} needs the dense Kazhdan-Lusztig table, which is kept '
            f'to n <= {MAX_KL_N}; S_{n} would not fit a desk machine'
        )


def _parse_parabolic(n: int, text: str):
    kind, sep, rest = text.partition(':')
    if not sep:
        raise UsageError(f'malformed parabolic descriptor {text!r}')
    if kind in ('min', 'max'):
        try:
            k = int(rest)
        except ValueError:
            raise UsageError(f'malformed k in {text!r}') from None
        if not 1 <= k <= n - 1:
            raise UsageError(f'k={k} out of range 1..{n - 1}')
        return kind, k
    if kind == 'comp':
        try:
            mu = Composition.from_text(rest)
        except ValueError as e:
            raise UsageError(str(e)) from None
        if mu.n != n:
            raise UsageError(
                f'composition {rest} sums to {mu.n}, expected n={n}'
            )
        return kind, mu
    raise UsageError(f'unknown parabolic kind {kind!r}; use min, max or comp')


def _parse_perm(n: int, text: str) -> Permutation:
    try:
        w = parse_permutation(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(w.window) != n:
        raise UsageError(f'{text!r} is a window of size {len(w.window)}, not {n}')
    return w


def _emit_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + '\n'


def _tsv_cell(value) -> str:
    if value is None:
        return '-'
    if value is True:
        return 'true'
    if value is False:
        return 'false'
    return str(value)


def _emit_tsv(header, rows) -> str:
    lines = ['# ' + '\t'.join(header)]
    for row in rows:
        lines.append('\t'.join(_tsv_cell(row.get(col)) for col in header))
    return '\n'.join(lines) + '\n'


def _mult_text(pairs) -> str:
    return ';'.join(f'{y}:{d}' for y, d in pairs)


def cmd_classify(n: int, parabolic: str, fmt: str, n_max: int):
    """Full classification table over the shortest coset reps."""
    _guard_n(n, n_max)
    kind, arg = _parse_parabolic(n, parabolic)
    rows = []
    if kind == 'max':
        ctx = MaxParContext(n, arg)
        for w in sorted(shortest_reps(ctx), key=lambda u: u.window):
            mults = []
            for y in sorted(shortest_reps(ctx), key=lambda u: u.window):
                d = graded_multiplicity(ctx, w, y)
                if d is not None:
                    mults.append([str(y), d])
            rows.append({
                'w': str(w),
                'word': str(phi(ctx, w)),
                'verdict': (
                    'Positive'
                    if is_kostant_positive_maximal(ctx, w)
                    else 'Negative'
                ),
                'thin': is_thin(ctx, w),
                'a_value': a_value(ctx, w),
                'multiplicities': mults,
            })
    elif kind == 'min':
        _require_kl(n, 'the thinness column for a minimal parabolic')
        ctx = MinParContext(n, arg)
        mu = Composition((1,) * (arg - 1) + (2,) + (1,) * (n - arg - 1))
        for w in sorted(
            enumerate_shortest_reps(n, frozenset({arg})),
            key=lambda u: u.window,
        ):
            rows.append({
                'w': str(w),
                'word': None,
                'verdict': (
                    'Positive'
                    if is_kostant_positive_minimal(ctx, w)
                    else 'Negative'
                ),
                'thin': is_thin_general(mu, w),
                'a_value': None,
                'multiplicities': None,
            })
    else:
        mu = arg
        _require_kl(n, 'classification for a general composition')
        for w in sorted(
            enumerate_shortest_reps(n, mu.simple_reflections()),
            key=lambda u: u.window,
        ):
            rows.append({
                'w': str(w),
                'word': None,
                'verdict': classify_general(mu, w).verdict,
                'thin': is_thin_general(mu, w),
                'a_value': None,
                'multiplicities': None,
            })
    payload = {'context': {'n': n, 'parabolic': parabolic}, 'rows': rows}
    if fmt == 'json':
        return _emit_json(payload), 0
    tsv_rows = [
        dict(row, multiplicities=(
            _mult_text(row['multiplicities'])
            if row['multiplicities'] is not None else None
        ))
        for row in rows
    ]
    header = ['w', 'word', 'verdict', 'thin', 'a_value', 'multiplicities']
    return _emit_tsv(header, tsv_rows), 0


def _cup_mult_rows(ctx: MaxParContext, x: Permutation):
    rows = []
    for y in sorted(shortest_reps(ctx), key=lambda u: u.window):
        d = graded_multiplicity(ctx, x, y)
        if d is not None:
            rows.append({'y': str(y), 'degree': d})
    return rows


def _kl_mult_rows(ctx: MaxParContext, x: Permutation):
    table = kl_table(ctx.n)
    rows = []
    for y in sorted(shortest_reps(ctx), key=lambda u: u.window):
        poly = parabolic_verma_multiplicity(table, ctx.J, x, y)
        if poly.is_zero():
            continue
        exps = poly.exponents()
        if len(exps) == 1 and poly.coefficient(exps[0]) == 1:
            degree = exps[0]
        else:
            degree = str(poly)
        rows.append({'y': str(y), 'degree': degree})
    return rows


def cmd_multiplicities(n: int, k: int, x_text: str, engine: str, fmt: str,
                       n_max: int):
    """Composition factors of one standard module, by either engine."""
    _guard_n(n, n_max)
    if not 1 <= k <= n - 1:
        raise UsageError(f'k={k} out of range 1..{n - 1}')
    ctx = MaxParContext(n, k)
    x = _parse_perm(n, x_text)
    if not is_shortest_coset_rep(x, ctx.J):
        raise UsageError(f'{x_text} is not a shortest coset rep for max:{k}')
    if engine in ('kl', 'both'):
        _require_kl(n, f'engine {engine}')
    agree = None
    if engine == 'cup':
        rows = _cup_mult_rows(ctx, x)
    elif engine == 'kl':
        rows = _kl_mult_rows(ctx, x)
    else:
        rows = _cup_mult_rows(ctx, x)
        agree = rows == _kl_mult_rows(ctx, x)
    payload = {
        'context': {'n': n, 'k': k, 'x': str(x), 'engine': engine},
        'rows': rows,
    }
    if agree is not None:
        payload['agree'] = agree
    code = 1 if agree is False else 0
    if fmt == 'json':
        return _emit_json(payload), code
    lines = [_emit_tsv(['y', 'degree'], rows)]
    if agree is not None:
        lines.append(f'# agree\t{_tsv_cell(agree)}\n')
    return ''.join(lines), code


def cmd_socle(n: int, w_text: str, fmt: str, n_max: int):
    """Generators of the socle descriptor of one element."""
    _guard_n(n, n_max)
    w = _parse_perm(n, w_text)
    generators = sorted(str(b) for b in socle_descriptor(w))
    if fmt == 'json':
        payload = {'context': {'n': n, 'w': str(w)}, 'generators': generators}
        return _emit_json(payload), 0
    return _emit_tsv(['generator'], [{'generator': g} for g in generators]), 0


def cmd_cells(n: int, fmt: str, n_max: int):
    """Cell data for the whole group: shape, small and penultimate flags."""
    _guard_n(n, n_max)
    w0 = longest_element(n)
    rows = []
    for w in enumerate_group(n):
        rows.append({
            'w': str(w),
            'shape': ','.join(str(p) for p in rsk(w).shape),
            'small': is_small_cell_member(w),
            'penultimate': is_small_cell_member(w * w0),
        })
    if fmt == 'json':
        return _emit_json({'context': {'n': n}, 'rows': rows}), 0
    return _emit_tsv(['w', 'shape', 'small', 'penultimate'], rows), 0


def cmd_selftest(n_max: int) -> int:
    """Run every named check up to n_max and print a scoreboard."""
    if n_max > DEFAULT_N_MAX:
        raise UsageError(
            f'selftest is bounded at n_max={DEFAULT_N_MAX}; '
            f'{n_max} would not finish at a desk'
        )
    if n_max < 2:
        raise UsageError('selftest needs n_max >= 2')
    failures = 0
    for name, fn in ALL_CHECKS:
        try:
            ok, detail = fn(n_max)
        except Exception as exc:
            ok, detail = False, f'unexpected {type(exc).__name__}: {exc}'
        print(f'{"ok  " if ok else "FAIL"} {name}: {detail}')
        if not ok:
            failures += 1
    total = len(ALL_CHECKS)
    print(f'{total - failures}/{total} checks passed (n_max={n_max})')
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='kostantpv',
        description='Kostant positivity of parabolic Verma modules for sl_n.',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', help='classification table for one parabolic')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--parabolic', required=True,
                   help='min:k, max:k, or comp:p1,p2,...')
    p.add_argument('--format', choices=('json', 'tsv'), default='json')
    p.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)

    p = sub.add_parser('mult', help='composition factors of a standard module')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--x', required=True, help='shortest coset rep')
    p.add_argument('--engine', choices=('cup', 'kl', 'both'), default='both')
    p.add_argument('--format', choices=('json', 'tsv'), default='json')
    p.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)

    p = sub.add_parser('socle', help='socle descriptor generators')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--w', required=True)
    p.add_argument('--format', choices=('json', 'tsv'), default='json')
    p.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)

    p = sub.add_parser('cells', help='cell membership data for S_n')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--format', choices=('json', 'tsv'), default='json')
    p.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)

    p = sub.add_parser('selftest', help='run the named consistency checks')
    p.add_argument('--n-max', type=int, default=5)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == 'classify':
            out, code = cmd_classify(args.n, args.parabolic, args.format,
                                     args.n_max)
        elif args.command == 'mult':
            out, code = cmd_multiplicities(args.n, args.k, args.x,
                                           args.engine, args.format,
                                           args.n_max)
        elif args.command == 'socle':
            out, code = cmd_socle(args.n, args.w, args.format, args.n_max)
        elif args.command == 'cells':
            out, code = cmd_cells(args.n, args.format, args.n_max)
        else:
            return cmd_selftest(args.n_max)
    except UsageError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == '__main__':
    sys.exit(main())
