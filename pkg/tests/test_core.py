import itertools
import random

import pytest
from hypothesis import given, strategies as st

from schur.core import (
    EXCEEDS_CAP,
    Coloring,
    ProblemSpec,
    brute_force_value,
    enumerate_tuples,
    find_mono_solution,
    is_solution,
    verify_valid,
)
from schur.constructions import case1_coloring, case2_coloring
from schur.errors import ContractError, MalformedCertificateError, ResourceError

from conftest import all_colorings, naive_mono_solutions


def brute_tuples(k, n):
    # independent of the recursive generator: filter every multiset
    return sorted(
        xs for xs in itertools.combinations_with_replacement(range(1, n + 1), k - 1)
        if sum(xs) <= n
    )


class TestProblemSpec:
    def test_fields(self):
        spec = ProblemSpec(3, (3, 4, 5))
        assert spec.r == 3 and spec.ks == (3, 4, 5)
        assert ProblemSpec.of(3, 4, 5) == spec

    @pytest.mark.parametrize("r, ks", [(0, ()), (2, (3,)), (1, (2,))])
    def test_rejects(self, r, ks):
        with pytest.raises(ContractError):
            ProblemSpec(r, ks)

    def test_canonical(self):
        spec = ProblemSpec.of(5, 3, 4)
        assert not spec.is_canonical
        assert spec.canonical().ks == (3, 4, 5)


class TestColoring:
    def test_json_round_trip(self):
        c = Coloring.from_list([1, 2, 2, 1, 1], r=2)
        assert c.to_dict() == {"n": 5, "r": 2, "colors": [1, 2, 2, 1, 1]}
        assert Coloring.from_json(c.to_json()) == c

    @pytest.mark.parametrize("text", [
        '{"n": 2, "r": 1, "colors": [1, 2]}',
        '{"n": 3, "r": 2, "colors": [1, 2]}',
        '{"n": 2, "colors": [1, 1]}',
        '{"n": 2, "r": 2, "colors": [1, true]}',
        '[1, 2]',
        '{"n": 2',
    ])
    def test_malformed(self, text):
        with pytest.raises(MalformedCertificateError):
            Coloring.from_json(text)

    def test_restrict(self):
        c = Coloring.from_list([1, 2, 3, 1], r=3)
        assert c.restrict(2).colors == (1, 2)
        assert c.restrict(2).r == 3


class TestIsSolution:
    def test_examples(self):
        assert is_solution(ProblemSpec.of(3), 1, [2, 3, 5])
        assert not is_solution(ProblemSpec.of(3), 1, [1, 1, 3])
        assert is_solution(ProblemSpec.of(4), 1, [1, 2, 3, 6])

    def test_order_of_summands_irrelevant(self):
        assert is_solution(ProblemSpec.of(4), 1, [3, 1, 2, 6])

    def test_length_mismatch(self):
        with pytest.raises(ContractError):
            is_solution(ProblemSpec.of(3), 1, [1, 2, 3, 6])


class TestEnumerateTuples:
    def test_k3_n5(self):
        got = list(enumerate_tuples(3, 5))
        assert got == [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]
        assert got == brute_tuples(3, 5)

    def test_k4_n6(self):
        got = list(enumerate_tuples(4, 6))
        assert got == [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 2, 2), (1, 2, 3), (2, 2, 2)]
        assert got == brute_tuples(4, 6)

    def test_k3_n2(self):
        assert list(enumerate_tuples(3, 2)) == [(1, 1)]

    def test_too_short(self):
        assert list(enumerate_tuples(5, 3)) == []

    @given(st.integers(3, 6), st.integers(1, 16))
    def test_matches_filtered_multisets(self, k, n):
        got = list(enumerate_tuples(k, n))
        assert got == brute_tuples(k, n)
        assert all(a < b for a, b in zip(got, got[1:]))

    @pytest.mark.parametrize("n", range(1, 30))
    def test_k3_count_matches_double_loop(self, n):
        count = sum(1 for a in range(1, n + 1) for b in range(a, n + 1) if a + b <= n)
        assert sum(1 for _ in enumerate_tuples(3, n)) == count


class TestFindMonoSolution:
    def test_all_one(self):
        sol = find_mono_solution(Coloring.from_list([1, 1]), ProblemSpec.of(3))
        assert (sol.color, sol.xs) == (1, (1, 1, 2))

    def test_first_in_order(self):
        sol = find_mono_solution(Coloring.from_list([1, 2, 2, 1, 1]), ProblemSpec.of(3, 3))
        assert (sol.color, sol.xs) == (1, (1, 4, 5))

    def test_case1_u5(self):
        assert find_mono_solution(case1_coloring(5), ProblemSpec.of(3, 3, 5)) is None

    def test_color_out_of_range(self):
        with pytest.raises(MalformedCertificateError):
            find_mono_solution(Coloring.from_list([1, 3]), ProblemSpec.of(3, 3))

    @given(st.data())
    def test_agrees_with_naive_search(self, data):
        r = data.draw(st.integers(1, 3))
        ks = data.draw(st.lists(st.integers(3, 5), min_size=r, max_size=r))
        n = data.draw(st.integers(1, 18))
        colors = data.draw(st.lists(st.integers(1, r), min_size=n, max_size=n))
        spec = ProblemSpec(r, tuple(ks))
        coloring = Coloring(n, r, tuple(colors))
        naive = naive_mono_solutions(coloring, spec)
        sol = find_mono_solution(coloring, spec)
        if not naive:
            assert sol is None
        else:
            assert (sol.color, sol.xs) == naive[0]
            assert is_solution(spec, sol.color, sol.xs)
            assert all(coloring(x) == sol.color for x in sol.xs)
            assert sol.xs[-1] > max(sol.xs[:-1])


class TestVerifyValid:
    def test_examples(self):
        assert verify_valid(case1_coloring(5), ProblemSpec.of(3, 3, 5))
        assert not verify_valid(Coloring.from_list([1, 1]), ProblemSpec.of(3))
        assert verify_valid(case2_coloring(4), ProblemSpec.of(3, 4, 4))

    @given(st.data())
    def test_prefix_closure(self, data):
        spec = ProblemSpec.of(3, 4)
        n = data.draw(st.integers(1, 12))
        colors = data.draw(st.lists(st.integers(1, 2), min_size=n, max_size=n))
        coloring = Coloring(n, 2, tuple(colors))
        if verify_valid(coloring, spec):
            assert all(verify_valid(coloring.restrict(m), spec) for m in range(n + 1))

    @given(st.data())
    def test_permutation_symmetry(self, data):
        ks = data.draw(st.lists(st.integers(3, 5), min_size=3, max_size=3))
        perm = data.draw(st.permutations([0, 1, 2]))
        n = data.draw(st.integers(1, 20))
        colors = data.draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
        spec = ProblemSpec.of(*ks)
        # color c becomes perm[c-1]+1, and equation lengths travel with it
        permuted_ks = [0, 0, 0]
        for c in range(3):
            permuted_ks[perm[c]] = ks[c]
        permuted = Coloring(n, 3, tuple(perm[c - 1] + 1 for c in colors))
        assert verify_valid(Coloring(n, 3, tuple(colors)), spec) == verify_valid(
            permuted, ProblemSpec.of(*permuted_ks)
        )


class TestBruteForce:
    @pytest.mark.parametrize("ks, cap, expected", [
        ((3, 3), 10, 5),
        ((4,), 10, 3),
        ((3, 3, 3), 20, 14),
    ])
    def test_examples(self, ks, cap, expected):
        assert brute_force_value(ProblemSpec.of(*ks), cap) == expected

    def test_exceeds_cap(self):
        assert brute_force_value(ProblemSpec.of(3, 3, 3), 10) == EXCEEDS_CAP

    def test_budget(self):
        with pytest.raises(ResourceError) as info:
            brute_force_value(ProblemSpec.of(3, 3, 3), 20, max_states=50)
        assert info.value.partial >= 1

    @pytest.mark.parametrize("ks", [(3,), (5,), (3, 3), (3, 4), (3, 5), (4, 4)])
    def test_oracle_floor(self, ks):
        # exhaustive: some coloring of [1, V-1] is valid, none of [1, V] is
        spec = ProblemSpec.of(*ks)
        v = brute_force_value(spec, 14)
        assert v <= 14
        assert any(verify_valid(c, spec) for c in all_colorings(v - 1, spec.r))
        assert not any(verify_valid(c, spec) for c in all_colorings(v, spec.r))

    def test_random_colorings_respect_value(self):
        rng = random.Random(7)
        spec = ProblemSpec.of(3, 3, 3)
        for _ in range(200):
            c = Coloring(14, 3, tuple(rng.randint(1, 3) for _ in range(14)))
            assert not verify_valid(c, spec)
