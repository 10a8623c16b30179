"""Finite magmas as Cayley tables, and the AG-group layer on top of them.

Elements are the dense indices ``0..n-1``.  A table is stored as a tuple of
row tuples (fast scalar lookups) with a read-only numpy mirror for the
vectorised axiom checks.  The left identity is always *located*, never
assumed to be ``0``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    EntryOutOfRange,
    MissingInverse,
    MultipleLeftIdentities,
    NoLeftIdentity,
    NonSquare,
    NotAPartition,
    NotHomomorphism,
    NotLeftInvertive,
    ParseError,
)


@dataclass(frozen=True)
class CayleyTable:
    rows: tuple

    @property
    def order(self):
        return len(self.rows)

    def mul(self, a, b):
        return self.rows[a][b]

    @cached_property
    def array(self):
        arr = np.array(self.rows, dtype=np.int64).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_commutative(self):
        return bool((self.array == self.array.T).all())

    def __repr__(self):
        return f"CayleyTable(order={self.order}, rows={self.rows})"


def validate_table(raw):
    """Check a square integer matrix and wrap it as a :class:`CayleyTable`."""
    try:
        rows = [list(r) for r in raw]
    except TypeError as exc:
        raise NonSquare(f"table is not a matrix: {exc}") from None
    n = len(rows)
    if n == 0:
        raise NonSquare("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NonSquare(f"row {i} has {len(row)} entries, expected {n}", witness=i)
    out = []
    for i, row in enumerate(rows):
        clean = []
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise ParseError(f"entry ({i},{j}) is not an integer: {v!r}", witness=(i, j))
            v = int(v)
            if not 0 <= v < n:
                raise EntryOutOfRange(f"entry ({i},{j}) = {v} not in 0..{n - 1}", witness=(i, j))
            clean.append(v)
        out.append(tuple(clean))
    return CayleyTable(tuple(out))


def relabel(t, perm):
    """Table of the same magma after renaming element ``a`` to ``perm[a]``."""
    n = t.order
    rows = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            rows[perm[a]][perm[b]] = perm[t.rows[a][b]]
    return CayleyTable(tuple(tuple(r) for r in rows))


def check_left_invertive(t):
    """Return ``(True, None)`` or ``(False, (a, b, c))`` with the first
    lexicographic triple where ``(ab)c != (cb)a``."""
    T = t.array
    lhs = T[T]  # lhs[a, b, c] = (ab)c
    bad = np.argwhere(lhs != lhs.transpose(2, 1, 0))
    if len(bad):
        return False, tuple(int(v) for v in bad[0])
    return True, None


def left_identities(t):
    ident = tuple(range(t.order))
    return [e for e in range(t.order) if t.rows[e] == ident]


@dataclass(frozen=True)
class AGGroup:
    table: CayleyTable
    identity: int
    inverse: tuple

    @property
    def order(self):
        return self.table.order

    @property
    def elements(self):
        return range(self.table.order)

    def mul(self, a, b):
        return self.table.rows[a][b]

    def inv(self, a):
        return self.inverse[a]


def promote_to_ag_group(t):
    """Verify the AG-group axioms on ``t`` and return the assembled group.

    Raises the exception named after the first failing axiom: the left
    invertive law, existence and uniqueness of the left identity, then
    two-sided inverses.
    """
    ok, triple = check_left_invertive(t)
    if not ok:
        raise NotLeftInvertive(f"(ab)c != (cb)a at (a,b,c) = {triple}", witness=triple)
    ids = left_identities(t)
    if not ids:
        raise NoLeftIdentity("no element e with e*a = a for all a")
    if len(ids) > 1:
        raise MultipleLeftIdentities(f"left identities {ids}", witness=tuple(ids))
    e = ids[0]
    rows = t.rows
    inverse = []
    for a in range(t.order):
        cands = [b for b in range(t.order) if rows[a][b] == e and rows[b][a] == e]
        if not cands:
            raise MissingInverse(f"element {a} has no two-sided inverse", witness=a)
        inverse.append(cands[0])
    return AGGroup(t, e, tuple(inverse))


def ag_group(raw):
    """Shorthand: ``promote_to_ag_group(validate_table(raw))``."""
    return promote_to_ag_group(validate_table(raw))


@dataclass
class IdentityReport:
    # name -> first violating tuple, or None when the identity holds
    violations: dict

    @property
    def ok(self):
        return all(w is None for w in self.violations.values())


def _first(mask):
    bad = np.argwhere(mask)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def check_derived_identities(g):
    """Exhaustively test the three identities the quotient proofs lean on:
    ``a(bc) = b(ac)``, ``(ab.c)d = a(bc.d)`` and ``(xy)^-1 = x^-1 y^-1``."""
    T = g.table.array
    n = g.order
    idx = np.arange(n)
    a_bc = T[idx[:, None, None], T[None, :, :]]  # [a,b,c] -> a(bc)
    medial = a_bc != a_bc.transpose(1, 0, 2)
    abc = T[T[:, :, None], idx[None, None, :]]  # [a,b,c] -> (ab)c
    lhs4 = T[abc[..., None], idx]  # [a,b,c,d] -> (ab.c)d
    bcd = abc  # [b,c,d] -> (bc)d
    rhs4 = T[idx[:, None, None, None], bcd[None]]  # a(bc.d)
    inv = np.array(g.inverse)
    inv_prod = inv[T] != T[inv[:, None], inv[None, :]]
    return IdentityReport({
        "a(bc)=b(ac)": _first(medial),
        "(ab.c)d=a(bc.d)": _first(lhs4 != rhs4),
        "(xy)^-1=x^-1y^-1": _first(inv_prod),
    })


# -- subgroups and right cosets ------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    members: tuple
    group: AGGroup = field(compare=False, repr=False)

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def as_group(self):
        """The subgroup as a standalone AG-group on ``0..k-1``; position ``i``
        stands for ``members[i]``."""
        pos = {x: i for i, x in enumerate(self.members)}
        rows = tuple(tuple(pos[self.group.mul(x, y)] for y in self.members) for x in self.members)
        return promote_to_ag_group(CayleyTable(rows))


def is_subgroup(g, members):
    s = set(members)
    if g.identity not in s:
        return False
    if any(g.inv(x) not in s for x in s):
        return False
    return all(g.mul(x, y) in s for x in s for y in s)


def subgroup(g, members):
    members = tuple(sorted(set(members)))
    if not is_subgroup(g, members):
        raise ValueError(f"{members} is not an AG-subgroup")
    return Subgroup(members, g)


def all_subgroups(g):
    """Every AG-subgroup of ``g``, sorted by size then members."""
    others = [x for x in g.elements if x != g.identity]
    out = []
    for k in range(len(others) + 1):
        for combo in combinations(others, k):
            members = tuple(sorted((g.identity,) + combo))
            if is_subgroup(g, members):
                out.append(Subgroup(members, g))
    return out


def crisp_coset(g, h, x):
    """Right coset ``Hx = {h x : h in H}``."""
    return frozenset(g.mul(m, x) for m in h.members)


def coset_decomposition(g, h):
    """Partition of the carrier into right cosets of ``h``.

    Each coset is a sorted tuple; the list is ordered by representative
    (minimal element).  The partition property is checked, not assumed.
    """
    seen = {}
    for x in g.elements:
        c = tuple(sorted(crisp_coset(g, h, x)))
        seen.setdefault(c, x)
    cosets = sorted(seen, key=lambda c: c[0])
    covered = {}
    for c in cosets:
        for x in c:
            if x in covered:
                raise NotAPartition(
                    f"cosets {covered[x]} and {c} overlap in {x}", witness=(covered[x], c))
            covered[x] = c
    if len(covered) != g.order:
        missing = sorted(set(g.elements) - set(covered))
        raise NotAPartition(f"elements {missing} lie in no coset", witness=tuple(missing))
    return cosets


# -- homomorphisms and isomorphism ----------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    source: AGGroup
    target: AGGroup
    map: tuple

    def __call__(self, x):
        return self.map[x]

    @cached_property
    def image(self):
        return Subgroup(tuple(sorted(set(self.map))), self.target)


def check_homomorphism(f, src, dst):
    f = tuple(int(v) for v in f)
    if len(f) != src.order:
        raise ValueError(f"map has length {len(f)}, source has order {src.order}")
    if any(not 0 <= v < dst.order for v in f):
        raise ValueError("map value outside the target carrier")
    for x in src.elements:
        for y in src.elements:
            if f[src.mul(x, y)] != dst.mul(f[x], f[y]):
                raise NotHomomorphism(f"f({x}*{y}) != f({x})*f({y})", witness=(x, y))
    return Homomorphism(src, dst, f)


def _signature(t, x):
    r = t.rows
    n = t.order
    return (
        r[x][x] == x,
        sum(r[x][y] == r[y][x] for y in range(n)),
        sum(r[x][y] == y for y in range(n)),
        sum(r[y][x] == y for y in range(n)),
        sorted(sum(r[y][z] == x for z in range(n)) for y in range(n)),
    )


def find_isomorphism(t1, t2, fixed=()):
    """Product-preserving bijection ``t1 -> t2`` as a tuple, or ``None``.

    Plain backtracking over element images, pruned by cheap invariants;
    ``fixed`` pins pairs up front (e.g. identity to identity).
    """
    n = t1.order
    if t2.order != n:
        return None
    sig1 = [_signature(t1, x) for x in range(n)]
    sig2 = [_signature(t2, x) for x in range(n)]
    if sorted(map(repr, sig1)) != sorted(map(repr, sig2)):
        return None
    r1, r2 = t1.rows, t2.rows
    phi = [-1] * n
    used = [False] * n

    def consistent(a):
        for u in range(n):
            if phi[u] < 0:
                continue
            for x, y in ((a, u), (u, a)):
                img = phi[r1[x][y]]
                want = r2[phi[x]][phi[y]]
                if img >= 0:
                    if img != want:
                        return False
                elif used[want]:
                    return False
        return True

    for a, b in fixed:
        if phi[a] >= 0 or used[b] or sig1[a] != sig2[b]:
            return None
        phi[a] = b
        used[b] = True
    for a, _ in fixed:
        if not consistent(a):
            return None
    order = [x for x in range(n) if phi[x] < 0]

    def extend(i):
        if i == len(order):
            return True
        a = order[i]
        for b in range(n):
            if used[b] or sig1[a] != sig2[b]:
                continue
            phi[a] = b
            used[b] = True
            if consistent(a) and extend(i + 1):
                return True
            phi[a] = -1
            used[b] = False
        return False

    return tuple(phi) if extend(0) else None


def are_isomorphic(g1, g2):
    """Bijection ``g1 -> g2`` preserving products (identity to identity,
    hence inverse pairs), or ``None``."""
    if g1.order != g2.order:
        return None
    return find_isomorphism(g1.table, g2.table, fixed=((g1.identity, g2.identity),))
