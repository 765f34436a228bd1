r"""
Named consistency checks tying the three classification engines and
the supporting machinery together.

Each check function takes an n_max bound, exercises one documented
claim up to that bound (or up to its own natural ceiling, whichever is
smaller), and returns (ok, detail).  Failures are collected and
reported, never thrown, so the selftest command can print a full
scoreboard.  The acceptance test suite calls the same functions at
their full bounds.

Two independent oracles live here because both the CLI selftest and
the test suite need them: an R-polynomial inversion oracle for
Kazhdan-Lusztig polynomials, and a mu-graph strongly-connected
component pass for cells.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .bigrassmannian import (
    complement_bigrassmannians,
    is_bigrassmannian,
    socle_descriptor,
)
from .compositions import (
    Composition,
    classify_general,
    is_thin_general,
    positive_sufficient,
)
from .cup_diagrams import (
    MaxParContext,
    antidominant_rep,
    enumerate_admissible,
    enumerate_oriented,
    enumerate_words,
    graded_multiplicity,
    in_Y,
    is_kostant_positive_maximal,
    is_thin,
    phi,
    shortest_reps,
)
from .groupindex import group_index
from .klcells import (
    is_involution,
    kl_table,
    left_cell_key,
    parabolic_verma_multiplicity,
    right_cell_key,
)
from .laurent import LaurentPolynomial
from .minimal_parabolic import (
    MinParContext,
    case_analysis,
    enumerate_X,
    factorize,
    hat_G,
    is_kostant_positive_minimal,
    ratio,
    tau,
)
from .permutations import (
    Permutation,
    bruhat_leq,
    enumerate_group,
    enumerate_shortest_reps,
    identity,
    longest_element,
    longest_element_parabolic,
    parse_permutation,
    simple_reflection,
)


def _verdict(problems, detail):
    if problems:
        head = problems[0]
        if len(problems) > 1:
            head = f'{len(problems)} failures, first: {head}'
        return False, head
    return True, detail


def check_x_sets(n_max: int):
    """The six minimal-parabolic seeds at (n, k) = (4, 2)."""
    if n_max < 4:
        return True, 'skipped (needs n_max >= 4)'
    problems = []
    plus, minus = enumerate_X(MinParContext(4, 2))
    want_plus = {parse_permutation(t) for t in ('2314', '1234', '1423')}
    want_minus = {parse_permutation(t) for t in ('2134', '1243', '2143')}
    if set(plus) != want_plus:
        problems.append(f'X+ = {sorted(str(w) for w in plus)}')
    if set(minus) != want_minus:
        problems.append(f'X- = {sorted(str(w) for w in minus)}')
    return _verdict(problems, 'X+(4,2) and X-(4,2) both match')


def check_factorization(n_max: int):
    """Unique factorization w = sigma tau covers all shortest reps."""
    problems = []
    top = min(n_max, 6)
    seen = 0
    for n in range(2, top + 1):
        for k in range(1, n):
            ctx = MinParContext(n, k)
            plus, minus = enumerate_X(ctx)
            taus = set(plus) | set(minus)
            ghat = hat_G(ctx)
            products = {g * t for g in ghat for t in taus}
            reps = set(enumerate_shortest_reps(n, frozenset({k})))
            if len(products) != len(ghat) * len(taus):
                problems.append(f'({n},{k}): collision in G x X')
            if products != reps:
                problems.append(f'({n},{k}): image is not the rep set')
            if len(reps) * 2 != _factorial(n):
                problems.append(f'({n},{k}): |reps| != n!/2')
            for w in reps:
                f = factorize(ctx, w)
                if f.sigma * f.tau != w:
                    problems.append(f'({n},{k}): bad factorization of {w}')
                    break
            seen += len(reps)
    return _verdict(problems, f'bijection on {seen} reps, n <= {top}')


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def check_case_chains(n_max: int):
    """Predicted bigrassmannian chains match brute-force complements."""
    problems = []
    top = min(n_max, 6)
    count = 0
    for n in range(3, top + 1):
        for k in range(1, n):
            ctx = MinParContext(n, k)
            s = simple_reflection(n, k)
            for i in range(1, n):
                for j in range(i + 2, n + 1):
                    t = tau(ctx, i, j)
                    predicted = set(case_analysis(ctx, i, j).predicted)
                    brute = complement_bigrassmannians(s * t, t)
                    count += 1
                    if predicted != brute:
                        problems.append(
                            f'({n},{k}) tau({i},{j}): chain mismatch'
                        )
                        continue
                    if len(predicted) < 2:
                        problems.append(
                            f'({n},{k}) tau({i},{j}): chain too short'
                        )
                    descents = [b.right_descents() for b in predicted]
                    if len(set(descents)) != len(descents):
                        problems.append(
                            f'({n},{k}) tau({i},{j}): repeated descent'
                        )
    return _verdict(problems, f'{count} chains verified, n <= {top}')


def check_ratio(n_max: int):
    """Positive-to-negative count is (n-1) : (C(n,2)-(n-1)), any k."""
    problems = []
    top = min(n_max, 7)
    for n in range(3, top + 1):
        expected = Fraction(n - 1, n * (n - 1) // 2 - (n - 1))
        for k in range(1, n):
            ctx = MinParContext(n, k)
            pos = neg = 0
            for w in enumerate_shortest_reps(n, frozenset({k})):
                if is_kostant_positive_minimal(ctx, w):
                    pos += 1
                else:
                    neg += 1
            if Fraction(pos, neg) != expected or ratio(ctx) != expected:
                problems.append(f'({n},{k}): {pos}/{neg} != {expected}')
    return _verdict(problems, f'ratio matches for all k, n <= {top}')


def check_worked_tables(n_max: int):
    """Diagram counts and both graded multiplicity tables at (4, 2)."""
    if n_max < 4:
        return True, 'skipped (needs n_max >= 4)'
    problems = []
    ctx = MaxParContext(4, 2)
    words = {str(w) for w in enumerate_words(ctx)}
    if words != {'^^vv', '^v^v', '^vv^', 'v^^v', 'v^v^', 'vv^^'}:
        problems.append(f'W(4,2) = {sorted(words)}')
    alternating = next(w for w in enumerate_words(ctx) if str(w) == '^v^v')
    if len(enumerate_oriented(alternating)) != 6:
        problems.append('oriented count for ^v^v')
    if len(enumerate_admissible(alternating)) != 5:
        problems.append('admissible count for ^v^v')
    dominant = next(w for w in enumerate_words(ctx) if str(w) == '^^vv')
    degrees = sorted(o.degree for o in enumerate_admissible(dominant))
    if degrees != [0, 1, 2]:
        problems.append(f'degrees for ^^vv: {degrees}')
    for x_text, want in (
        ('1234', {'1234': 0, '1324': 1, '3412': 2}),
        ('1324', {'1324': 0, '3124': 1, '1342': 1, '3412': 1, '3142': 2}),
    ):
        x = parse_permutation(x_text)
        got = {}
        for y in shortest_reps(ctx):
            d = graded_multiplicity(ctx, x, y)
            if d is not None:
                got[str(y)] = d
        if got != want:
            problems.append(f'table for x={x_text}: {got}')
    return _verdict(problems, 'section tables at (4,2) reproduced')


def check_cross_oracle(n_max: int):
    """Cup-diagram multiplicities equal the KL alternating sums."""
    problems = []
    top = min(n_max, 6)
    pairs = 0
    for n in range(2, top + 1):
        table = kl_table(n)
        for k in range(1, n):
            ctx = MaxParContext(n, k)
            J = ctx.J
            reps = shortest_reps(ctx)
            for x in reps:
                for y in reps:
                    cup = graded_multiplicity(ctx, x, y)
                    kl = parabolic_verma_multiplicity(table, J, x, y)
                    pairs += 1
                    if cup is None:
                        if not kl.is_zero():
                            problems.append(
                                f'({n},{k}) x={x} y={y}: cup absent, KL {kl}'
                            )
                    elif kl != LaurentPolynomial.monomial(1, cup):
                        problems.append(
                            f'({n},{k}) x={x} y={y}: cup v^{cup}, KL {kl}'
                        )
    return _verdict(problems, f'{pairs} pairs agree, n <= {top}')


def check_thinness(n_max: int):
    """Thinness is exactly membership of Phi(w) in the Y set."""
    problems = []
    top = min(n_max, 7)
    for n in range(2, top + 1):
        for k in range(1, n):
            ctx = MaxParContext(n, k)
            for w in shortest_reps(ctx):
                if is_thin(ctx, w) != in_Y(ctx, phi(ctx, w)):
                    problems.append(f'({n},{k}) w={w}')
    if top >= 4:
        ctx = MaxParContext(4, 2)
        thin = {str(w) for w in shortest_reps(ctx) if is_thin(ctx, w)}
        if thin != {'1234', '1342', '3124', '3412'}:
            problems.append(f'thin list at (4,2): {sorted(thin)}')
    return _verdict(problems, f'thin iff Y membership, n <= {top}')


def check_branch_consistency(n_max: int):
    """For k in {1, n-1} the closed form and the Y test agree: 2 positives."""
    problems = []
    top = min(n_max, 7)
    for n in range(2, top + 1):
        for k in {1, n - 1}:
            ctx = MaxParContext(n, k)
            closed = {
                w for w in shortest_reps(ctx)
                if is_kostant_positive_maximal(ctx, w)
            }
            via_y = {
                w for w in shortest_reps(ctx) if in_Y(ctx, phi(ctx, w))
            }
            want = {identity(n), antidominant_rep(ctx)}
            if closed != via_y or closed != want or len(closed) != len(want):
                problems.append(f'({n},{k}): {sorted(str(w) for w in closed)}')
    return _verdict(problems, f'branches agree for k in {{1, n-1}}, n <= {top}')


def check_linear_quiver(n_max: int):
    """At k = 1 the standard modules form a linear chain of length n."""
    problems = []
    top = min(n_max, 7)
    for n in range(2, top + 1):
        ctx = MaxParContext(n, 1)
        reps = shortest_reps(ctx)
        succ = {}
        terminal = []
        for x in reps:
            factors = {}
            for y in reps:
                d = graded_multiplicity(ctx, x, y)
                if d is not None:
                    factors[y] = d
            if factors.get(x) != 0:
                problems.append(f'n={n} x={x}: missing head at degree 0')
                continue
            rest = {y: d for y, d in factors.items() if y != x}
            if not rest:
                terminal.append(x)
            elif len(rest) == 1 and set(rest.values()) == {1}:
                succ[x] = next(iter(rest))
            else:
                problems.append(f'n={n} x={x}: factors {len(factors)}')
        if not problems:
            if len(terminal) != 1:
                problems.append(f'n={n}: {len(terminal)} one-step modules')
            else:
                seen = set()
                starts = set(reps) - set(succ.values())
                if len(starts) != 1:
                    problems.append(f'n={n}: chain has {len(starts)} sources')
                else:
                    x = next(iter(starts))
                    while x in succ and x not in seen:
                        seen.add(x)
                        x = succ[x]
                    seen.add(x)
                    if seen != set(reps) or x != terminal[0]:
                        problems.append(f'n={n}: chain does not cover reps')
    return _verdict(problems, f'two-step chains verified, n <= {top}')


def check_socle_shadow(n_max: int):
    """Singleton socle descriptors are exactly the bigrassmannians."""
    problems = []
    top = min(n_max, 6)
    for n in range(2, top + 1):
        for w in enumerate_group(n):
            if (len(socle_descriptor(w)) == 1) != is_bigrassmannian(w):
                problems.append(f'n={n} w={w}')
    return _verdict(problems, f'shadow equivalence exhaustive, n <= {top}')


def check_kl_properties(n_max: int):
    """Normalization, vanishing, degree bound, symmetries, both oracles,
    and one involution per one-sided cell."""
    problems = []
    top = min(n_max, 5)
    for n in range(2, top + 1):
        table = kl_table(n)
        g = table.group
        w0 = longest_element(n)
        for wi in range(g.N):
            for xi in range(g.N):
                coeffs = table._coeffs(xi, wi)
                if xi == wi and coeffs != (1,):
                    problems.append(f'n={n}: P_ww != 1')
                if not g.leq[xi, wi]:
                    if coeffs:
                        problems.append(f'n={n}: nonzero below Bruhat')
                    continue
                diff = int(g.lengths[wi]) - int(g.lengths[xi])
                if xi != wi and any(
                    c for e, c in enumerate(coeffs) if 2 * e > diff - 1
                ):
                    problems.append(f'n={n}: degree bound violated')
                inv_x = g.idx(g.perm(xi).inverse)
                inv_w = g.idx(g.perm(wi).inverse)
                if coeffs != table._coeffs(inv_x, inv_w):
                    problems.append(f'n={n}: inverse symmetry')
                cx = g.idx(w0 * g.perm(xi) * w0)
                cw = g.idx(w0 * g.perm(wi) * w0)
                if coeffs != table._coeffs(cx, cw):
                    problems.append(f'n={n}: w0-conjugation symmetry')
    if n_max >= 4:
        problems.extend(_kl_against_r_oracle(4))
    for n in range(2, top + 1):
        if n >= 4:
            problems.extend(_cells_against_mu_graph(n))
        for key_fn in (left_cell_key, right_cell_key):
            cells: dict = {}
            for w in enumerate_group(n):
                cells.setdefault(key_fn(w), []).append(w)
            for members in cells.values():
                if sum(1 for w in members if is_involution(w)) != 1:
                    problems.append(f'n={n}: cell without unique involution')
    return _verdict(problems, f'tables, oracles, and cells agree, n <= {top}')


def check_reconciliation(n_max: int):
    """The sufficient-condition classifier against both theorems."""
    problems = []
    top = min(n_max, 6)
    for n in range(2, top + 1):
        for k in range(1, n):
            parts = (1,) * (k - 1) + (2,) + (1,) * (n - k - 1)
            mu = Composition(parts)
            ctx = MinParContext(n, k)
            for w in enumerate_shortest_reps(n, frozenset({k})):
                verdict = classify_general(mu, w).verdict
                expect = (
                    'Positive'
                    if is_kostant_positive_minimal(ctx, w)
                    else 'Negative'
                )
                if verdict != expect:
                    problems.append(f'minimal ({n},{k}) w={w}: {verdict}')
        if n % 2 == 0:
            k = n // 2
            mu = Composition((k, k))
            reps = enumerate_shortest_reps(n, mu.simple_reflections())
            pos = {w for w in reps if positive_sufficient(mu, w)}
            want = {
                identity(n),
                longest_element_parabolic(n, mu.simple_reflections())
                * longest_element(n),
            }
            if pos != want:
                problems.append(f'(k,k) with k={k}: {len(pos)} positives')
        for k in range(1, n):
            ctx = MaxParContext(n, k)
            mu = Composition((k, n - k))
            unknowns = set()
            suff = set()
            for w in shortest_reps(ctx):
                verdict = classify_general(mu, w).verdict
                if verdict == 'Positive':
                    suff.add(w)
                    if not is_thin_general(mu, w):
                        problems.append(
                            f'maximal ({n},{k}) w={w}: positive but not thin'
                        )
                elif verdict == 'Unknown':
                    unknowns.add(w)
            thin_nontrivial = {
                w for w in shortest_reps(ctx) if is_thin(ctx, w)
            } - {identity(n), antidominant_rep(ctx)}
            if unknowns != thin_nontrivial:
                problems.append(
                    f'maximal ({n},{k}): unknowns != thin non-trivial set'
                )
            if not suff <= {
                w for w in shortest_reps(ctx)
                if is_kostant_positive_maximal(ctx, w)
            }:
                problems.append(f'maximal ({n},{k}): spurious positive')
    return _verdict(problems, f'classifier reconciled, n <= {top}')


def _poly_add(a: tuple, b: tuple) -> tuple:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_scale_shift(p: tuple, scale: int, shift: int) -> tuple:
    if not p or scale == 0:
        return ()
    return (0,) * shift + tuple(scale * c for c in p)


def _poly_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def r_polynomial(x: Permutation, w: Permutation, _memo=None) -> tuple:
    """R_{x,w} as ascending q-coefficients, by the descent recursion.

    >>> r_polynomial(parse_permutation('12'), parse_permutation('21'))
    (-1, 1)
    """
    if _memo is None:
        _memo = {}
    key = (x.window, w.window)
    if key in _memo:
        return _memo[key]
    if x == w:
        out: tuple = (1,)
    elif not bruhat_leq(x, w):
        out = ()
    else:
        s = simple_reflection(len(w.window), min(w.left_descents()))
        sw = s * w
        sx = s * x
        if sx.length < x.length:
            out = r_polynomial(sx, sw, _memo)
        else:
            out = _poly_add(
                _poly_mul((-1, 1), r_polynomial(x, sw, _memo)),
                _poly_scale_shift(r_polynomial(sx, sw, _memo), 1, 1),
            )
    _memo[key] = out
    return out


def kl_from_r_oracle(n: int) -> dict:
    """Every P_{x,w} for S_n by inverting the R-polynomial identity.

    Independent of the production recursion: only R-polynomials and
    the defining degree truncation are used.
    """
    elements = sorted(enumerate_group(n), key=lambda w: (w.length, w.window))
    memo: dict = {}
    P: dict = {}
    for wi, w in enumerate(elements):
        P[(w, w)] = (1,)
        below = [x for x in elements[:wi] if bruhat_leq(x, w)]
        for x in sorted(below, key=lambda u: -u.length):
            total: tuple = ()
            for y in below + [w]:
                if y.length <= x.length or not bruhat_leq(x, y):
                    continue
                total = _poly_add(
                    total, _poly_mul(r_polynomial(x, y, memo), P[(y, w)])
                )
            bound = (w.length - x.length - 1) // 2
            P[(x, w)] = tuple(-c for c in total[: bound + 1])
            while P[(x, w)] and P[(x, w)][-1] == 0:
                P[(x, w)] = P[(x, w)][:-1]
    return P


def _kl_against_r_oracle(n: int) -> list:
    problems = []
    table = kl_table(n)
    g = table.group
    oracle = kl_from_r_oracle(n)
    for w in enumerate_group(n):
        for x in enumerate_group(n):
            got = table.coeffs(x, w)
            want = oracle.get((x, w), ())
            if got != want:
                problems.append(f'S_{n} oracle: P({x},{w}) = {got} != {want}')
    return problems


def _mu_graph_cells(n: int, side: str) -> list:
    """Cells as strongly connected components of the mu-graph."""
    table = kl_table(n)
    g = table.group
    mult = g.lmul if side == 'left' else g.rmul
    adj: list = [set() for _ in range(g.N)]
    for yi in range(g.N):
        ly = int(g.lengths[yi])
        for s in range(n - 1):
            ti = int(mult[s, yi])
            if int(g.lengths[ti]) > ly:
                adj[yi].add(ti)
        for zi in range(g.N):
            diff = int(g.lengths[yi]) - int(g.lengths[zi])
            if diff <= 0 or diff % 2 == 0 or not g.leq[zi, yi]:
                continue
            coeffs = table._coeffs(zi, yi)
            d = (diff - 1) // 2
            if len(coeffs) <= d or coeffs[d] == 0:
                continue
            for s in range(n - 1):
                down_z = int(g.lengths[int(mult[s, zi])]) < int(g.lengths[zi])
                down_y = int(g.lengths[int(mult[s, yi])]) < ly
                if down_z and not down_y:
                    adj[yi].add(zi)
                    break
    return _scc(adj)


def _scc(adj: list) -> list:
    """Strongly connected components, iterative Kosaraju."""
    size = len(adj)
    order = []
    seen = [False] * size
    for start in range(size):
        if seen[start]:
            continue
        stack = [(start, iter(adj[start]))]
        seen[start] = True
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()
    radj: list = [set() for _ in range(size)]
    for src, dsts in enumerate(adj):
        for dst in dsts:
            radj[dst].add(src)
    comp = [-1] * size
    current = 0
    for start in reversed(order):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = current
        while stack:
            node = stack.pop()
            for nxt in radj[node]:
                if comp[nxt] == -1:
                    comp[nxt] = current
                    stack.append(nxt)
        current += 1
    out: list = [set() for _ in range(current)]
    for node, c in enumerate(comp):
        out[c].add(node)
    return out


def _cells_against_mu_graph(n: int) -> list:
    problems = []
    g = group_index(n)
    for side, key_fn in (('left', left_cell_key), ('right', right_cell_key)):
        graph_cells = {
            frozenset(c) for c in _mu_graph_cells(n, side)
        }
        tableau_cells: dict = {}
        for i in range(g.N):
            tableau_cells.setdefault(key_fn(g.perm(i)), set()).add(i)
        if graph_cells != {frozenset(c) for c in tableau_cells.values()}:
            problems.append(f'S_{n} {side} cells: graph != tableau')
    return problems


ALL_CHECKS = (
    ('x-sets', check_x_sets),
    ('factorization', check_factorization),
    ('case-chains', check_case_chains),
    ('positivity-ratio', check_ratio),
    ('worked-tables', check_worked_tables),
    ('cross-oracle', check_cross_oracle),
    ('thin-y', check_thinness),
    ('branch-consistency', check_branch_consistency),
    ('linear-quiver', check_linear_quiver),
    ('socle-shadow', check_socle_shadow),
    ('kl-properties', check_kl_properties),
    ('reconciliation', check_reconciliation),
)
