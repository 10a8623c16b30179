"""Exhaustive enumeration of small AG-groups and theorem sweeps over them.

The search pins the left identity to 0 (every AG-group has such a
labelling), fixes row 0 to the identity row and fills the remaining cells
row-major in increasing value order, so tables come out lexicographically
sorted.  In ``ag_groups`` mode rows and columns must be permutations:
right cancellation follows from ``ba = ca => (ba)a^-1 = (ca)a^-1 =>
(a^-1 a)b = (a^-1 a)c``, and left cancellation from right cancellation via
``ab = ac => (xb)a = (xc)a`` for every x.
"""

import itertools
import os
import warnings
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .cayley import CayleyTable, check_derived_identities, promote_to_ag_group, relabel
from .errors import AGFuzzError, NotAGGroup, OrderCapExceeded
from .fuzzy import fuzzy_population
from .report import Check

DEFAULT_ORDER_CAP = 6
CAP_ENV = "AGFUZZ_ORDER_CAP"
MODES = ("ag_groups", "ag_groupoids_with_left_identity")


def order_cap():
    return int(os.environ.get(CAP_ENV, DEFAULT_ORDER_CAP))


@dataclass(frozen=True)
class EnumerationTask:
    order: int
    mode: str = "ag_groups"
    canonical_only: bool = True
    cap: int = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


def _search(n, latin):
    t = [[-1] * n for _ in range(n)]
    t[0] = list(range(n))
    cells = [(i, j) for i in range(1, n) for j in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [{j} for j in range(n)]

    def ok(i, j, v):
        if latin:
            w = t[j][i]
            if w >= 0 and (v == 0) != (w == 0):
                return False
        # (a,b) = (i,j): (v c) == ((c j) i)
        for c in range(n):
            vc = t[v][c]
            cj = t[c][j]
            if vc < 0 or cj < 0:
                continue
            r = t[cj][i]
            if r >= 0 and r != vc:
                return False
        # (ab, c) = (i, j): v == ((j b) a) for every ab = i
        for a in range(n):
            ra = t[a]
            for b in range(n):
                if ra[b] != i:
                    continue
                jb = t[j][b]
                if jb < 0:
                    continue
                r = t[jb][a]
                if r >= 0 and r != v:
                    return False
        return True

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[k]
        for v in range(n):
            if latin and (v in row_used[i] or v in col_used[j]):
                continue
            t[i][j] = v
            if ok(i, j, v):
                if latin:
                    row_used[i].add(v)
                    col_used[j].add(v)
                yield from fill(k + 1)
                if latin:
                    row_used[i].discard(v)
                    col_used[j].discard(v)
            t[i][j] = -1

    yield from fill(0)


def _fixing_zero(n):
    return [(0,) + p for p in itertools.permutations(range(1, n))]


def canonical_form(rows, perms=None):
    """Lexicographically least relabelling of ``rows`` among those fixing 0."""
    t = CayleyTable(rows)
    perms = perms if perms is not None else _fixing_zero(t.order)
    return min(relabel(t, p).rows for p in perms)


def enumerate_ag_groups(task, allow_large=False):
    """Stream every AG-group (or AG-groupoid with left identity 0) of
    ``task.order`` with identity 0, or one per isomorphism class when
    ``task.canonical_only`` is set.  Output order is deterministic."""
    if isinstance(task, int):
        task = EnumerationTask(task)
    n = task.order
    cap = task.cap if task.cap is not None else order_cap()
    if n > cap:
        if not allow_large:
            raise OrderCapExceeded(f"order {n} exceeds cap {cap}", witness=n)
        warnings.warn(f"enumerating order {n} beyond cap {cap}; this may not finish",
                      stacklevel=2)
    groups = task.mode == "ag_groups"
    perms = _fixing_zero(n)
    for rows in _search(n, latin=groups):
        if task.canonical_only and canonical_form(rows, perms) != rows:
            continue
        table = CayleyTable(rows)
        yield promote_to_ag_group(table) if groups else table


def naive_ag_group_tables(n):
    """Every AG-group table of order ``n`` by filtering all ``n^(n^2)``
    tables.  Only sensible for n <= 3."""
    out = set()
    for flat in itertools.product(range(n), repeat=n * n):
        rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        try:
            promote_to_ag_group(CayleyTable(rows))
        except NotAGGroup:
            continue
        out.add(rows)
    return out


def population(orders, max_k=None):
    """``(instance_id, group, mu)`` for every canonical AG-group of the given
    orders and every chain-generated fuzzy AG-subgroup of it."""
    for n in orders:
        for gi, g in enumerate(enumerate_ag_groups(EnumerationTask(n))):
            for mi, mu in enumerate(fuzzy_population(g, max_k)):
                yield f"n{n}.g{gi}.mu{mi}", g, mu


@dataclass
class SweepReport:
    counts: dict = field(default_factory=lambda: defaultdict(Counter))
    failures: list = field(default_factory=list)
    records: list = field(default_factory=list)
    groups: Counter = field(default_factory=Counter)
    instances: int = 0

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        return {k: dict(v) for k, v in sorted(self.counts.items())}


def population_sweep(suite, orders, subsets=None, keep_records=False):
    """Run every check in ``suite`` over the enumerated population.

    ``suite`` maps names to callables ``check(mu) -> Check | list | None``
    (``None`` means not applicable, e.g. a normality-only theorem on a
    non-normal mu).  ``subsets(g)`` overrides the fuzzy subsets tried per
    group.  Failures are collected, never raised; an unexpected exception
    inside a check counts as a failure with the exception as witness.
    """
    if not suite:
        raise ValueError("empty suite")
    report = SweepReport()
    for n in orders:
        for gi, g in enumerate(enumerate_ag_groups(EnumerationTask(n))):
            report.groups[n] += 1
            subs = subsets(g) if subsets is not None else fuzzy_population(g)
            for mi, mu in enumerate(subs):
                report.instances += 1
                inst = f"n{n}.g{gi}.mu{mi}:{mu.describe()}"
                for name, check in suite.items():
                    try:
                        result = check(mu)
                    except AGFuzzError as exc:
                        result = Check(name, inst, False, (type(exc).__name__, exc.witness))
                    if result is None:
                        report.counts[name]["skipped"] += 1
                        continue
                    for rec in [result] if isinstance(result, Check) else result:
                        rec.instance = f"n{n}.g{gi}.mu{mi}:{rec.instance}"
                        report.counts[rec.theorem]["pass" if rec.passed else "fail"] += 1
                        if not rec.passed:
                            report.failures.append(rec)
                        if keep_records:
                            report.records.append(rec)
    report.failures.sort(key=Check.sort_key)
    return report


def group_sanity(g):
    """Check a group the enumerator emitted: derived identities and an
    involutive inverse map."""
    rep = check_derived_identities(g)
    involutive = all(g.inv(g.inv(x)) == x for x in g.elements)
    return rep.ok and involutive
