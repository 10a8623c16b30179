"""Fuzzy cosets, quotient AG-groups and the constructions built on them.

Quotients are always built the same way: group the carrier by a key
(fuzzy-coset vector or crisp right coset), take the minimal element of
each class as representative, fill the class table from representatives
and then cross-check every member pair.  Nothing about well-definedness
is assumed, not even for normal mu.
"""

from dataclasses import dataclass, field

from .cayley import (
    CayleyTable,
    Subgroup,
    all_subgroups,
    are_isomorphic,
    check_homomorphism,
    coset_decomposition,
    crisp_coset,
    is_subgroup,
    promote_to_ag_group,
)
from .errors import (
    NotAGGroup,
    NotAPartition,
    NotHomomorphism,
    NotWellDefined,
    PreconditionFailed,
    PropositionViolation,
    TheoremViolation,
)
from .fuzzy import FuzzySubset, _require_fuzzy, is_fuzzy_ag_subgroup, is_normal, level_set
from .report import Check

PROP_NORMAL_COSET = "prop-normal-coset"
THM_QUOTIENT = "thm-quotient-ag-group"
THM_QUOTIENT_FUZZY = "thm-quotient-fuzzy-subgroup"
THM_COSET_EQUALITY = "thm-coset-equality"
THM_NORMAL_GRADE = "thm-normal-grade"
THM_INDUCED = "thm-induced-normal"
THM_ISOMORPHISM = "thm-isomorphism"
THM_KERNEL = "thm-natural-homomorphism"
THM_CORRESPONDENCE = "thm-correspondence"
THM_LAGRANGE = "thm-fuzzy-lagrange"


@dataclass(frozen=True)
class FuzzyCoset:
    """``g -> mu(g x^-1)``.  Equality looks only at the grade vector."""

    determinant: int = field(compare=False)
    grades: tuple


def fuzzy_coset(mu, x):
    g = mu.group
    xi = g.inv(x)
    return FuzzyCoset(x, tuple(mu[g.mul(y, xi)] for y in g.elements))


def fuzzy_cosets(mu):
    return [fuzzy_coset(mu, x) for x in mu.group.elements]


@dataclass(frozen=True)
class QuotientStructure:
    source: object = field(repr=False)
    classes: tuple
    representatives: tuple
    table: CayleyTable
    projection: tuple
    group: object = field(repr=False)
    cosets: tuple = field(default=(), repr=False)  # FuzzyCoset per class, G/mu only

    @property
    def order(self):
        return len(self.classes)

    def class_of(self, x):
        return self.projection[x]


def _quotient_from_keys(g, keys, cosets=None):
    groups = {}
    for x in g.elements:
        groups.setdefault(keys[x], []).append(x)
    classes = tuple(sorted((tuple(v) for v in groups.values()), key=lambda c: c[0]))
    reps = tuple(c[0] for c in classes)
    proj = [0] * g.order
    for i, c in enumerate(classes):
        for x in c:
            proj[x] = i
    proj = tuple(proj)
    rows = tuple(tuple(proj[g.mul(r, s)] for s in reps) for r in reps)
    for x in g.elements:
        for y in g.elements:
            if proj[g.mul(x, y)] != rows[proj[x]][proj[y]]:
                rx, ry = reps[proj[x]], reps[proj[y]]
                raise NotWellDefined(
                    f"classes of {x},{y} equal those of {rx},{ry} but products "
                    f"{g.mul(x, y)} and {g.mul(rx, ry)} fall in different classes",
                    witness=(x, y, rx, ry))
    table = CayleyTable(rows)
    quotient_group = promote_to_ag_group(table)
    if cosets is not None:
        cosets = tuple(cosets[r] for r in reps)
    return QuotientStructure(g, classes, reps, table, proj, quotient_group, cosets or ())


def build_quotient_by_mu(mu):
    """``G/mu`` under ``mu_x o mu_y = mu_xy``.

    Normality is not required; if the product does not descend to cosets
    :class:`NotWellDefined` is raised with a witness quadruple.
    """
    _require_fuzzy(mu)
    cos = fuzzy_cosets(mu)
    return _quotient_from_keys(mu.group, [c.grades for c in cos], cos)


def build_crisp_quotient(g, h):
    """``G/H`` over right cosets ``Hx`` with ``Hx . Hy = H(xy)``."""
    if not is_subgroup(g, h.members):
        raise PreconditionFailed(f"{h.members} is not an AG-subgroup")
    decomposition = coset_decomposition(g, h)
    keys = [None] * g.order
    for c in decomposition:
        for x in c:
            keys[x] = c
    return _quotient_from_keys(g, keys)


def count_fuzzy_cosets(mu):
    return len({c.grades for c in fuzzy_cosets(mu)})


def fuzzy_index(mu):
    """``[G:mu]``, the number of distinct fuzzy cosets; requires the quotient
    to be well defined."""
    return build_quotient_by_mu(mu).order


def _finish(check, strict, exc=TheoremViolation):
    if strict:
        check.require(exc)
    return check


def _require_normal(mu):
    _require_fuzzy(mu)
    ok, w = is_normal(mu, check_pre=False)
    if not ok:
        raise PreconditionFailed(f"{mu.describe()} is not normal (witness {w})", witness=w)


def normal_coset_identity(mu, strict=False):
    """mu_x(xg) = mu_x(gx) = mu(g) for all x, g."""
    _require_normal(mu)
    g = mu.group
    witness = None
    for x in g.elements:
        cx = fuzzy_coset(mu, x).grades
        for y in g.elements:
            if not cx[g.mul(x, y)] == cx[g.mul(y, x)] == mu[y]:
                witness = (x, y)
                break
        if witness:
            break
    return _finish(Check(PROP_NORMAL_COSET, mu.describe(), witness is None, witness),
                   strict, PropositionViolation)


def check_quotient_theorem(mu, strict=False):
    """For normal mu: G/mu is an AG-group, mu_e's class is the left identity
    and the class of mu_{x^-1} inverts the class of mu_x."""
    _require_normal(mu)
    g = mu.group
    detail = {}
    try:
        q = build_quotient_by_mu(mu)
    except (NotWellDefined, NotAGGroup) as exc:
        return _finish(Check(THM_QUOTIENT, mu.describe(), False, exc.witness,
                             {"error": type(exc).__name__}), strict)
    witness = None
    if q.group.identity != q.class_of(g.identity):
        witness = ("identity", g.identity)
    else:
        for x in g.elements:
            if q.group.inv(q.class_of(x)) != q.class_of(g.inv(x)):
                witness = ("inverse", x)
                break
    e_cls = q.group.identity
    # right identity may fail; recorded only
    detail["right_identity_fails_for"] = [
        i for i in range(q.order) if q.group.mul(i, e_cls) != i]
    detail["index"] = q.order
    return _finish(Check(THM_QUOTIENT, mu.describe(), witness is None, witness, detail), strict)


def check_coset_product_law(g, h):
    """First ``(x, y)`` where the complex product ``Hx . Hy`` differs from
    ``H(xy)``, or ``None``."""
    cos = [crisp_coset(g, h, x) for x in g.elements]
    for x in g.elements:
        for y in g.elements:
            prod = {g.mul(u, v) for u in cos[x] for v in cos[y]}
            if prod != cos[g.mul(x, y)]:
                return (x, y)
    return None


def coset_equality_theorem(mu, strict=False):
    """mu_x = mu_y  iff  mu_* x = mu_* y, each side computed on its own.

    ``detail["product_law_witness"]`` records whether the crisp coset
    product ``mu_* x . mu_* y = mu_*(xy)`` holds on this instance.
    """
    _require_fuzzy(mu)
    g = mu.group
    cos = fuzzy_cosets(mu)
    h = level_set(mu).subgroup
    crisp = [crisp_coset(g, h, x) for x in g.elements]
    witness = None
    for x in g.elements:
        for y in g.elements:
            if (cos[x] == cos[y]) != (crisp[x] == crisp[y]):
                witness = (x, y)
                break
        if witness:
            break
    detail = {"level_set": h.members, "product_law_witness": check_coset_product_law(g, h)}
    return _finish(Check(THM_COSET_EQUALITY, mu.describe(), witness is None, witness, detail),
                   strict)


def normal_grade_theorem(mu, strict=False):
    """For normal mu: mu_x = mu_y implies mu(x) = mu(y)."""
    _require_normal(mu)
    g = mu.group
    cos = fuzzy_cosets(mu)
    witness = next(((x, y) for x in g.elements for y in g.elements
                    if cos[x] == cos[y] and mu[x] != mu[y]), None)
    return _finish(Check(THM_NORMAL_GRADE, mu.describe(), witness is None, witness), strict)


@dataclass(frozen=True)
class InducedFuzzySubset:
    quotient: QuotientStructure = field(repr=False)
    subset: FuzzySubset

    @property
    def grades(self):
        return self.subset.grades


def quotient_fuzzy_subgroup(nu, h):
    """``nu/H``: the class ``Hx`` gets the largest grade of nu over ``Hx``."""
    _require_fuzzy(nu)
    q = build_crisp_quotient(nu.group, h)
    grades = tuple(max(nu[z] for z in c) for c in q.classes)
    xi = FuzzySubset(q.group, grades, f"{nu.describe()}/H{{{','.join(map(str, h.members))}}}")
    ok, w = is_fuzzy_ag_subgroup(xi)
    if not ok:
        raise TheoremViolation(f"{THM_QUOTIENT_FUZZY}: nu/H is not a fuzzy AG-subgroup ({w})",
                               witness=w)
    return InducedFuzzySubset(q, xi)


def check_quotient_fuzzy(nu, subgroups=None):
    """Run :func:`quotient_fuzzy_subgroup` for every AG-subgroup ``H``."""
    out = []
    for h in subgroups if subgroups is not None else all_subgroups(nu.group):
        inst = f"{nu.describe()}|H={{{','.join(map(str, h.members))}}}"
        try:
            xi = quotient_fuzzy_subgroup(nu, h)
            out.append(Check(THM_QUOTIENT_FUZZY, inst, True, None, {"grades": xi.grades}))
        except (TheoremViolation, NotWellDefined, NotAGGroup, NotAPartition) as exc:
            out.append(Check(THM_QUOTIENT_FUZZY, inst, False, exc.witness,
                             {"error": type(exc).__name__}))
    return out


def induced_on_quotient(mu):
    """``nu(mu_x) = mu(x)`` on ``G/mu``; must be a normal fuzzy AG-subgroup."""
    _require_normal(mu)
    q = build_quotient_by_mu(mu)
    for c in q.classes:
        for x in c:
            if mu[x] != mu[c[0]]:
                raise NotWellDefined(f"mu differs on {c[0]} and {x} inside one coset class",
                                     witness=(c[0], x))
    nu = FuzzySubset(q.group, tuple(mu[r] for r in q.representatives),
                     f"induced({mu.describe()})")
    ok, w = is_fuzzy_ag_subgroup(nu)
    if ok:
        ok, w = is_normal(nu, check_pre=False)
    if not ok:
        raise TheoremViolation(f"{THM_INDUCED}: induced subset fails at {w}", witness=w)
    return InducedFuzzySubset(q, nu)


def isomorphism_theorem(mu, strict=False):
    """``G/mu ~ G/mu_*``: a searched isomorphism must exist, and the explicit
    map ``mu_x -> mu_* x`` must itself be a well-defined isomorphism."""
    _require_normal(mu)
    g = mu.group
    q = build_quotient_by_mu(mu)
    h = level_set(mu).subgroup
    c = build_crisp_quotient(g, h)
    found = are_isomorphic(q.group, c.group)
    witness = None
    explicit = [None] * q.order
    for x in g.elements:
        i, j = q.class_of(x), c.class_of(x)
        if explicit[i] is None:
            explicit[i] = j
        elif explicit[i] != j:
            witness = ("not-well-defined", x)
            break
    if witness is None and (len(set(explicit)) != c.order or q.order != c.order):
        witness = ("not-bijective", tuple(explicit))
    if witness is None:
        try:
            check_homomorphism(explicit, q.group, c.group)
        except NotHomomorphism as exc:
            witness = ("not-homomorphism", exc.witness)
    if witness is None and found is None:
        witness = ("search-found-none", None)
    detail = {"explicit_map": tuple(explicit), "index": q.order}
    return _finish(Check(THM_ISOMORPHISM, mu.describe(), witness is None, witness, detail),
                   strict)


def natural_homomorphism(mu, strict=False):
    """``theta(x) = mu_x``; returns the homomorphism and a kernel check
    comparing ``{x : theta(x) = theta(e)}`` against the level set."""
    _require_normal(mu)
    g = mu.group
    q = build_quotient_by_mu(mu)
    try:
        theta = check_homomorphism(q.projection, g, q.group)
    except NotHomomorphism as exc:
        check = Check(THM_KERNEL, mu.describe(), False, ("not-homomorphism", exc.witness))
        _finish(check, strict)
        return None, check
    e_cls = q.class_of(g.identity)
    kernel = tuple(x for x in g.elements if theta(x) == e_cls)
    star = level_set(mu).members
    check = Check(THM_KERNEL, mu.describe(), kernel == star,
                  None if kernel == star else ("kernel", kernel, star),
                  {"kernel": kernel, "level_set": star})
    return theta, _finish(check, strict)


def lift_correspondence(mu, zeta):
    """``nu(x) = zeta(mu_x)`` for a normal fuzzy AG-subgroup ``zeta`` of ``G/mu``."""
    _require_normal(mu)
    q = build_quotient_by_mu(mu)
    if zeta.group != q.group:
        raise PreconditionFailed("zeta is not defined on G/mu")
    ok, w = is_fuzzy_ag_subgroup(zeta)
    if ok:
        ok, w = is_normal(zeta, check_pre=False)
    if not ok:
        raise PreconditionFailed(f"zeta is not a normal fuzzy AG-subgroup of G/mu ({w})",
                                 witness=w)
    g = mu.group
    nu = FuzzySubset(g, tuple(zeta[q.class_of(x)] for x in g.elements),
                     f"lift({zeta.describe()})")
    ok, w = is_fuzzy_ag_subgroup(nu)
    if ok:
        ok, w = is_normal(nu, check_pre=False)
    if not ok:
        raise TheoremViolation(f"{THM_CORRESPONDENCE}: lifted subset fails at {w}", witness=w)
    return nu


def fuzzy_lagrange(mu, strict=False):
    """``[G:mu]`` divides ``|G|``, plus the crisp/fuzzy coset bijection.

    ``H = {h : mu_h = mu_e}`` must be an AG-subgroup, its right cosets must
    partition G, and ``Hx -> mu_x`` must be well defined and injective with
    as many crisp cosets as fuzzy ones.  When G/mu is not well defined the
    theorem's hypothesis fails; that is recorded in the detail and the
    divisibility of the raw coset count is still reported.
    """
    _require_fuzzy(mu)
    g = mu.group
    n = g.order
    cos = fuzzy_cosets(mu)
    distinct = len({c.grades for c in cos})
    detail = {
        "order": n,
        "normal": is_normal(mu, check_pre=False)[0],
        "coset_count": distinct,
    }
    try:
        index = build_quotient_by_mu(mu).order
        detail["quotient_well_defined"] = True
    except (NotWellDefined, NotAGGroup) as exc:
        index = None
        detail["quotient_well_defined"] = False
        detail["quotient_error"] = type(exc).__name__
    detail["index"] = index
    detail["divides"] = n % distinct == 0

    witness = None
    h_members = tuple(x for x in g.elements if cos[x] == cos[g.identity])
    detail["H"] = h_members
    if not is_subgroup(g, h_members):
        witness = ("H-not-subgroup", h_members)
    else:
        try:
            decomposition = coset_decomposition(g, Subgroup(h_members, g))
        except NotAPartition as exc:
            decomposition = None
            witness = ("not-a-partition", exc.witness)
        if decomposition is not None:
            detail["crisp_cosets"] = len(decomposition)
            images = []
            for c in decomposition:
                vecs = {cos[x].grades for x in c}
                if len(vecs) != 1:
                    witness = ("not-well-defined", c)
                    break
                images.append(vecs.pop())
            if witness is None and len(set(images)) != len(images):
                witness = ("not-injective", tuple(c[0] for c in decomposition))
            if witness is None and len(decomposition) != distinct:
                witness = ("count-mismatch", (len(decomposition), distinct))
    if witness is None and not detail["divides"]:
        witness = ("index-does-not-divide", (distinct, n))
    return _finish(Check(THM_LAGRANGE, mu.describe(), witness is None, witness, detail), strict)
