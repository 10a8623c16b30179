"""Fuzzy subsets of an AG-group with exact rational grades.

Predicates return ``(ok, witness)`` pairs; theorem-style checks return
:class:`~agfuzz.report.Check` records and raise only when ``strict=True``.
Witnesses are always the lexicographically first failure.
"""

from dataclasses import dataclass, field
from itertools import islice

from .cayley import Subgroup, all_subgroups, is_subgroup
from .errors import LemmaViolation, PreconditionFailed, PropositionViolation, TheoremViolation
from .grades import as_grade, canonical_chain, format_grade
from .report import Check

LEMMA_IDENTITY_MAX = "lemma-identity-max"
LEMMA_INVERSE_GRADE = "lemma-inverse-grade"
PROP_COMMUTATION = "prop-commutation"
LEMMA_TRANSLATION = "lemma-translation"
THM_PULLBACK = "thm-pullback-normal"


@dataclass(frozen=True)
class FuzzySubset:
    group: object = field(repr=False)
    grades: tuple
    label: str = field(default="", compare=False)

    def __getitem__(self, x):
        return self.grades[x]

    def __len__(self):
        return len(self.grades)

    @property
    def image(self):
        return sorted(set(self.grades))

    def regrade(self, fn, label=None):
        """Apply ``fn`` to every grade value (``fn`` is applied per distinct value)."""
        table = {t: as_grade(fn(t)) for t in set(self.grades)}
        return FuzzySubset(self.group, tuple(table[t] for t in self.grades),
                           self.label if label is None else label)

    def describe(self):
        if self.label:
            return self.label
        return f"order{len(self.grades)}[{','.join(format_grade(t) for t in self.grades)}]"


def fuzzy_subset(group, grades, label=""):
    grades = tuple(as_grade(t) for t in grades)
    if len(grades) != group.order:
        raise ValueError(f"{len(grades)} grades for a carrier of order {group.order}")
    return FuzzySubset(group, grades, label)


def constant_subset(group, t=1, label=""):
    return fuzzy_subset(group, [t] * group.order, label)


def is_fuzzy_ag_subgroup(mu):
    """Definitional check: mu(xy) >= mu(x) ^ mu(y) and mu(x^-1) >= mu(x).

    Returns ``(True, None)``, ``(False, ("product", x, y))`` or
    ``(False, ("inverse", x))``.
    """
    g = mu.group
    m = mu.grades
    for x in g.elements:
        for y in g.elements:
            if m[g.mul(x, y)] < min(m[x], m[y]):
                return False, ("product", x, y)
    for x in g.elements:
        if m[g.inv(x)] < m[x]:
            return False, ("inverse", x)
    return True, None


def is_fuzzy_by_level_sets(mu):
    """Independent route: every upper level set ``{x : mu(x) >= t}`` for t in
    the image is closed under product and inverse."""
    g = mu.group
    for t in mu.image:
        upper = {x for x in g.elements if mu[x] >= t}
        if any(g.inv(x) not in upper for x in upper):
            return False
        if any(g.mul(x, y) not in upper for x in upper for y in upper):
            return False
    return True


def _require_fuzzy(mu):
    ok, w = is_fuzzy_ag_subgroup(mu)
    if not ok:
        raise PreconditionFailed(f"{mu.describe()} is not a fuzzy AG-subgroup ({w})", witness=w)


def _finish(check, strict, exc):
    if strict:
        check.require(exc)
    return check


def check_commutation(mu, strict=False):
    """mu(xy) = mu(yx) for all pairs, with no normality assumed."""
    _require_fuzzy(mu)
    g = mu.group
    m = mu.grades
    witness = next(((x, y) for x in g.elements for y in g.elements
                    if m[g.mul(x, y)] != m[g.mul(y, x)]), None)
    return _finish(Check(PROP_COMMUTATION, mu.describe(), witness is None, witness),
                   strict, PropositionViolation)


def check_elementary_lemmas(mu, strict=False):
    """mu(e) is the maximum grade, mu(x) = mu(x^-1), and mu(xy) = mu(yx)."""
    _require_fuzzy(mu)
    g = mu.group
    m = mu.grades
    e = g.identity
    top = next((x for x in g.elements if m[e] < m[x]), None)
    inv = next((x for x in g.elements if m[x] != m[g.inv(x)]), None)
    checks = [
        Check(LEMMA_IDENTITY_MAX, mu.describe(), top is None, top),
        Check(LEMMA_INVERSE_GRADE, mu.describe(), inv is None, inv),
        check_commutation(mu),
    ]
    if strict:
        for c in checks:
            c.require(LemmaViolation)
    return checks


def is_normal(mu, check_pre=True):
    """Exact test of mu(xy . x^-1) = mu(y); returns ``(ok, (x, y) | None)``."""
    if check_pre:
        _require_fuzzy(mu)
    g = mu.group
    m = mu.grades
    for x in g.elements:
        xi = g.inv(x)
        for y in g.elements:
            if m[g.mul(g.mul(x, y), xi)] != m[y]:
                return False, (x, y)
    return True, None


@dataclass(frozen=True)
class LevelSet:
    parent: FuzzySubset = field(repr=False)
    members: tuple

    @property
    def subgroup(self):
        return Subgroup(self.members, self.parent.group)


def level_set(mu):
    """``{x : mu(x) = mu(e)}``; checked to be an AG-subgroup when mu is fuzzy."""
    g = mu.group
    top = mu[g.identity]
    members = tuple(x for x in g.elements if mu[x] == top)
    if is_fuzzy_ag_subgroup(mu)[0] and not is_subgroup(g, members):
        raise LemmaViolation(f"level set {members} of {mu.describe()} is not a subgroup",
                             witness=members)
    return LevelSet(mu, members)


def check_translation_lemma(mu, strict=False):
    """For each x: (mu(xy) = mu(y) for all y) iff mu(x) = mu(e).

    ``detail["translations"]`` lists the x on the left side and
    ``detail["counter_y"]`` maps every other x to its first breaking y.
    """
    _require_fuzzy(mu)
    g = mu.group
    m = mu.grades
    top = m[g.identity]
    translations, counter, witness = [], {}, None
    for x in g.elements:
        bad_y = next((y for y in g.elements if m[g.mul(x, y)] != m[y]), None)
        left = bad_y is None
        if left:
            translations.append(x)
        else:
            counter[x] = bad_y
        if left != (m[x] == top) and witness is None:
            witness = x
    check = Check(LEMMA_TRANSLATION, mu.describe(), witness is None, witness,
                  {"translations": translations, "counter_y": counter})
    return _finish(check, strict, LemmaViolation)


def pullback(f, mu):
    """``mu . f`` for a homomorphism ``f`` and a normal fuzzy AG-subgroup
    ``mu`` of the image ``f(G)``.

    ``mu`` may be given over the whole target group (it is restricted to
    the image) or over the image relabelled as ``0..k-1`` in sorted order.
    """
    members = f.image.members
    img = f.image.as_group()
    if mu.group == f.target:
        restricted = fuzzy_subset(img, [mu[y] for y in members])
        lookup = {y: mu[y] for y in members}
    elif mu.group == img:
        restricted = mu
        lookup = {y: mu[i] for i, y in enumerate(members)}
    else:
        raise PreconditionFailed("mu is defined neither on the target nor on the image")
    ok, w = is_fuzzy_ag_subgroup(restricted)
    if ok:
        ok, w = is_normal(restricted, check_pre=False)
    if not ok:
        raise PreconditionFailed(f"mu is not a normal fuzzy AG-subgroup of f(G): {w}", witness=w)
    out = FuzzySubset(f.source, tuple(lookup[f(x)] for x in f.source.elements),
                      f"pullback({mu.describe()})")
    ok, w = is_fuzzy_ag_subgroup(out)
    if ok:
        ok, w = is_normal(out, check_pre=False)
    if not ok:
        raise TheoremViolation(f"{THM_PULLBACK}: pulled-back subset fails at {w}", witness=w)
    return out


def subgroup_chains(g, k):
    """Strict chains H_1 < ... < H_k = G of AG-subgroups, deterministic order."""
    subs = all_subgroups(g)
    full = subs[-1]
    below = {s.members: [t for t in subs if len(t) < len(s) and set(t.members) < set(s.members)]
             for s in subs}

    def down(top, depth):
        if depth == 1:
            yield [top]
            return
        for s in below[top.members]:
            for chain in down(s, depth - 1):
                yield chain + [top]

    yield from down(full, k)


def generate_fuzzy_subgroups(g, k, start=0):
    """Fuzzy subsets graded 1 > 1/2 > ... > 1/2^(k-1) along subgroup chains
    of length ``k``.  Each one is re-verified with :func:`is_fuzzy_ag_subgroup`
    before it is yielded; ``start`` skips that many emissions."""
    grades = canonical_chain(k)

    def stream():
        for i, chain in enumerate(subgroup_chains(g, k)):
            vec = [None] * g.order
            for level, h in zip(grades, chain):
                for x in h.members:
                    if vec[x] is None:
                        vec[x] = level
            label = "chain" + "<".join("{" + ",".join(map(str, h.members)) + "}" for h in chain)
            mu = FuzzySubset(g, tuple(vec), label)
            if is_fuzzy_ag_subgroup(mu)[0]:
                yield mu

    return islice(stream(), start, None)


def fuzzy_population(g, max_k=None):
    """All chain-generated fuzzy AG-subgroups of ``g`` for every chain length."""
    k = 1
    while max_k is None or k <= max_k:
        batch = list(generate_fuzzy_subgroups(g, k))
        if not batch:
            return
        yield from batch
        k += 1
