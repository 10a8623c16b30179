import itertools

import numpy as np
import pytest

from agfuzz import (
    ag_group,
    all_subgroups,
    are_isomorphic,
    check_derived_identities,
    check_homomorphism,
    check_left_invertive,
    coset_decomposition,
    crisp_coset,
    is_subgroup,
    promote_to_ag_group,
    relabel,
    subgroup,
    validate_table,
)
from agfuzz.errors import (
    EntryOutOfRange,
    MissingInverse,
    NoLeftIdentity,
    NonSquare,
    NotHomomorphism,
    NotLeftInvertive,
)
from agfuzz.search import EnumerationTask, enumerate_ag_groups
from agfuzz.tables import ORDER4_ROWS, cyclic_table, left_projection_table, subtraction_table

import oracles
from conftest import K4_ROWS, Z3S_ROWS


def small_groups(max_order=5):
    for n in range(1, max_order + 1):
        yield from enumerate_ag_groups(EnumerationTask(n, canonical_only=False))


class TestValidate:
    def test_order4_example(self):
        t = validate_table(ORDER4_ROWS)
        assert t.order == 4
        assert t.tolist() == ORDER4_ROWS

    def test_trivial(self):
        assert validate_table([[0]]).order == 1

    def test_entry_out_of_range(self):
        with pytest.raises(EntryOutOfRange) as exc:
            validate_table([[0, 2], [1, 0]])
        assert exc.value.witness == (0, 1)

    @pytest.mark.parametrize("raw", [[[0, 1]], [[0, 1], [1]], []])
    def test_non_square(self, raw):
        with pytest.raises(NonSquare):
            validate_table(raw)

    def test_numpy_input(self):
        t = validate_table(np.array(K4_ROWS))
        assert t.rows == tuple(map(tuple, K4_ROWS))
        assert isinstance(t.rows[0][0], int)

    def test_array_is_read_only(self):
        t = validate_table(K4_ROWS)
        with pytest.raises(ValueError):
            t.array[0, 0] = 1


class TestLeftInvertive:
    def test_order4_example(self):
        assert check_left_invertive(validate_table(ORDER4_ROWS)) == (True, None)

    def test_z2_addition(self):
        assert check_left_invertive(cyclic_table(2)) == (True, None)

    def test_left_projection(self):
        rows = [[0, 0], [1, 1]]
        expect = oracles.first_left_invertive_violation(rows)
        assert expect == (0, 0, 1)
        assert check_left_invertive(left_projection_table(2)) == (False, expect)

    def test_matches_bruteforce_on_random_tables(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            n = int(rng.integers(1, 5))
            rows = rng.integers(0, n, size=(n, n)).tolist()
            ok, w = check_left_invertive(validate_table(rows))
            assert w == oracles.first_left_invertive_violation(rows)
            assert ok == (w is None)


class TestPromote:
    def test_order4_example(self, g4):
        assert g4.identity == 0
        assert g4.inverse == (0, 1, 2, 3)

    def test_klein_four(self, k4):
        assert oracles.ag_group_data(K4_ROWS) == (0, [0, 1, 2, 3])
        assert k4.identity == 0 and k4.inverse == (0, 1, 2, 3)

    def test_z3_subtraction(self, z3s):
        assert oracles.ag_group_data(Z3S_ROWS) == (0, [0, 1, 2])
        assert (z3s.identity, z3s.inverse) == (0, (0, 1, 2))
        assert not z3s.table.is_commutative()

    def test_identity_is_located_not_assumed(self):
        # relabel so that the left identity is 2
        t = relabel(subtraction_table(4), (2, 0, 1, 3))
        g = promote_to_ag_group(t)
        assert g.identity == 2
        assert all(g.mul(g.inv(x), x) == 2 == g.mul(x, g.inv(x)) for x in g.elements)

    def test_not_left_invertive(self):
        with pytest.raises(NotLeftInvertive) as exc:
            promote_to_ag_group(left_projection_table(2))
        assert exc.value.witness == (0, 0, 1)

    def test_no_left_identity(self):
        # constant table: left invertive, nothing acts as identity
        with pytest.raises(NoLeftIdentity):
            ag_group([[0, 0], [0, 0]])

    def test_left_identity_unique_under_left_invertive_law(self):
        # f = ef = (ee)f = (fe)e = ee = e, so MultipleLeftIdentities can only
        # come from tables that already failed the left invertive law
        from agfuzz.cayley import left_identities
        for n in (2, 3):
            for flat in itertools.product(range(n), repeat=n * n):
                t = validate_table([flat[i * n:(i + 1) * n] for i in range(n)])
                if check_left_invertive(t)[0]:
                    assert len(left_identities(t)) <= 1

    def test_missing_inverse(self):
        # Z2 under multiplication: 1 is the identity, 0 has no inverse
        with pytest.raises(MissingInverse) as exc:
            ag_group([[0, 0], [0, 1]])
        assert exc.value.witness == 0

    def test_agrees_with_oracle_on_all_order2_and_3_tables(self):
        for n in (2, 3):
            for flat in itertools.product(range(n), repeat=n * n):
                rows = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
                expect = oracles.ag_group_data(rows)
                try:
                    g = ag_group(rows)
                    got = (g.identity, list(g.inverse))
                except Exception:
                    got = None
                assert got == expect, rows


class TestDerivedIdentities:
    @pytest.mark.parametrize("rows", [ORDER4_ROWS, K4_ROWS, Z3S_ROWS])
    def test_examples(self, rows):
        assert check_derived_identities(ag_group(rows)).ok

    def test_detects_violation_on_a_non_ag_structure(self):
        # hand-built AGGroup object around a plain non-abelian group breaks a(bc)=b(ac)
        from agfuzz.cayley import AGGroup
        s3 = [[0, 1, 2, 3, 4, 5], [1, 0, 3, 2, 5, 4], [2, 4, 0, 5, 1, 3],
              [3, 5, 1, 4, 0, 2], [4, 2, 5, 0, 3, 1], [5, 3, 4, 1, 2, 0]]
        t = validate_table(s3)
        inv = tuple(next(b for b in range(6) if s3[a][b] == 0) for a in range(6))
        rep = check_derived_identities(AGGroup(t, 0, inv))
        assert not rep.ok
        a, b, c = rep.violations["a(bc)=b(ac)"]
        assert s3[a][s3[b][c]] != s3[b][s3[a][c]]

    def test_all_enumerated_groups(self):
        for g in small_groups(6):
            rep = check_derived_identities(g)
            assert rep.ok, rep.violations

    def test_inverse_is_involution(self):
        for g in small_groups(6):
            assert all(g.inv(g.inv(x)) == x for x in g.elements)


class TestSubgroups:
    def test_trivial_and_full(self, g4, k4):
        for g in (g4, k4):
            assert is_subgroup(g, {g.identity})
            assert is_subgroup(g, set(g.elements))

    def test_not_closed(self, g4):
        assert g4.mul(1, 0) == 3
        assert not is_subgroup(g4, {0, 1})

    def test_all_subgroups_matches_oracle(self):
        for g in small_groups(5):
            rows = g.table.tolist()
            expect = oracles.subgroups(rows, g.identity, list(g.inverse))
            assert sorted(s.members for s in all_subgroups(g)) == sorted(expect)

    def test_subgroup_constructor_rejects(self, g4):
        with pytest.raises(ValueError):
            subgroup(g4, [0, 1])

    def test_as_group(self, k4):
        h = subgroup(k4, [0, 3])
        hg = h.as_group()
        assert hg.order == 2 and hg.identity == 0


class TestCosets:
    def test_singleton(self, g4):
        h = subgroup(g4, [0])
        assert all(crisp_coset(g4, h, x) == {x} for x in g4.elements)

    def test_full(self, k4):
        h = subgroup(k4, range(4))
        assert crisp_coset(k4, h, 2) == set(range(4))

    def test_klein_ea_b(self, k4):
        assert oracles.right_coset(K4_ROWS, (0, 1), 2) == {2, 3}
        assert crisp_coset(k4, subgroup(k4, [0, 1]), 2) == {2, 3}

    def test_decomposition(self, k4):
        assert coset_decomposition(k4, subgroup(k4, [0])) == [(0,), (1,), (2,), (3,)]
        assert coset_decomposition(k4, subgroup(k4, [0, 1])) == [(0, 1), (2, 3)]
        assert coset_decomposition(k4, subgroup(k4, range(4))) == [(0, 1, 2, 3)]

    def test_classical_lagrange(self):
        for g in small_groups(6):
            for h in all_subgroups(g):
                cosets = coset_decomposition(g, h)
                assert all(len(c) == len(h) for c in cosets)
                assert len(cosets) * len(h) == g.order


class TestHomomorphism:
    def test_identity(self, g4):
        f = check_homomorphism(range(4), g4, g4)
        assert f.image.members == (0, 1, 2, 3)

    def test_constant(self, g4):
        f = check_homomorphism([0] * 4, g4, g4)
        assert f.image.members == (0,)

    def test_klein_to_z2(self, k4):
        z2 = promote_to_ag_group(cyclic_table(2))
        f = check_homomorphism([0, 1, 0, 1], k4, z2)
        assert len(f.image) == 2

    def test_rejects(self, k4, g4):
        with pytest.raises(NotHomomorphism) as exc:
            check_homomorphism([0, 1, 2, 3], k4, g4)
        x, y = exc.value.witness
        assert K4_ROWS[x][y] != ORDER4_ROWS[x][y]


class TestIsomorphism:
    def test_reflexive(self, g4):
        assert are_isomorphic(g4, g4) == (0, 1, 2, 3)

    def test_order4_example_vs_klein(self, g4, k4):
        assert g4.mul(1, 0) == 3 and g4.mul(0, 1) == 1
        assert not oracles.isomorphic(ORDER4_ROWS, K4_ROWS)
        assert are_isomorphic(g4, k4) is None

    def test_relabelled_z3(self, z3s):
        for perm in itertools.permutations(range(3)):
            other = promote_to_ag_group(relabel(z3s.table, perm))
            phi = are_isomorphic(z3s, other)
            assert phi is not None
            assert oracles.is_product_preserving(z3s.table.tolist(), other.table.tolist(), phi)

    def test_agrees_with_bruteforce(self):
        groups = list(small_groups(4))
        for g1, g2 in itertools.product(groups, repeat=2):
            expect = oracles.isomorphic(g1.table.tolist(), g2.table.tolist())
            phi = are_isomorphic(g1, g2)
            assert (phi is not None) == expect
            if phi is not None:
                assert oracles.is_product_preserving(g1.table.tolist(), g2.table.tolist(), phi)

    def test_symmetric(self):
        groups = list(small_groups(5))
        for g1, g2 in itertools.combinations(groups, 2):
            assert (are_isomorphic(g1, g2) is None) == (are_isomorphic(g2, g1) is None)
