import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shallowperm.perms import (
    DuplicateEntry,
    NotAPermutation,
    ParseError,
    StatVector,
    SymmetryClass,
    SymmetryKind,
    apply_symmetry,
    decreasing,
    direct_sum,
    format_permutation,
    identity,
    inverse,
    is_in_class,
    is_permutation,
    parse_permutation,
    reduce_word,
    reverse_complement,
    reverse_complement_inverse,
    skew_sum,
    statistics,
    validate_permutation,
)


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


class TestParsing:
    def test_comma_separated(self):
        assert parse_permutation("4,2,1,6,3,5") == (4, 2, 1, 6, 3, 5)

    def test_digit_string(self):
        assert parse_permutation("421635") == (4, 2, 1, 6, 3, 5)

    def test_singleton(self):
        assert parse_permutation("1") == (1,)

    def test_empty(self):
        assert parse_permutation("") == ()

    def test_whitespace_separated(self):
        assert parse_permutation("3 1 2") == (3, 1, 2)
        assert parse_permutation("3, 1, 2") == (3, 1, 2)

    def test_duplicate_value(self):
        with pytest.raises(NotAPermutation):
            parse_permutation("4,2,13,1,2")

    def test_out_of_range(self):
        with pytest.raises(NotAPermutation):
            parse_permutation("1,3")
        with pytest.raises(NotAPermutation):
            parse_permutation("0,1")

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_permutation("1,x,2")

    def test_long_digit_string_rejected(self):
        with pytest.raises(ParseError):
            parse_permutation("1234567891")

    def test_ten_or_more_needs_separators(self):
        word = tuple(range(10, 0, -1))
        assert parse_permutation(format_permutation(word)) == word

    def test_format_round_trip(self):
        for n in range(5):
            for p in all_perms(n):
                assert parse_permutation(format_permutation(p)) == p

    def test_is_permutation(self):
        assert is_permutation(())
        assert is_permutation((2, 1))
        assert not is_permutation((1, 1))

    def test_validate_reports_duplicate(self):
        with pytest.raises(NotAPermutation, match="duplicate"):
            validate_permutation((2, 1, 2, 3))


class TestStatistics:
    def test_decreasing_three(self):
        assert statistics((3, 2, 1)) == StatVector(4, 3, 2, 1, 2, 1, 1)

    def test_identity(self):
        for n in (0, 1, 4, 7):
            s = statistics(identity(n))
            assert (s.displacement, s.inversions, s.reflection_length) == (0, 0, 0)
            assert s.descents == 0
            assert s.lr_maxima == n

    def test_unique_size4_gap_witness(self):
        s = statistics((3, 4, 1, 2))
        assert (s.displacement, s.inversions, s.reflection_length) == (8, 4, 2)

    def test_empty(self):
        assert statistics(()) == StatVector(0, 0, 0, 0, 0, 0, 0)

    def test_inversions_match_naive(self):
        for n in range(7):
            for p in all_perms(n):
                naive = sum(
                    1
                    for i in range(n)
                    for j in range(i + 1, n)
                    if p[i] > p[j]
                )
                assert statistics(p).inversions == naive

    def test_diaconis_graham_bounds(self):
        # I + T <= D <= 2I, and D is even, for every permutation.
        for n in range(9):
            for p in all_perms(n):
                s = statistics(p)
                assert s.inversions + s.reflection_length <= s.displacement
                assert s.displacement <= 2 * s.inversions
                assert s.displacement % 2 == 0


class TestSymmetries:
    def test_inverse_golden(self):
        # Composing with the original gives the identity.
        p = (4, 2, 1, 6, 3, 5)
        q = inverse(p)
        assert q == (3, 2, 5, 1, 6, 4)
        assert tuple(q[v - 1] for v in p) == identity(6)

    def test_reverse_complement_identity(self):
        for n in range(6):
            assert reverse_complement(identity(n)) == identity(n)

    def test_involutive(self):
        for n in range(8):
            for p in all_perms(n):
                for kind in SymmetryKind:
                    assert apply_symmetry(apply_symmetry(p, kind), kind) == p

    def test_inverse_commutes_with_rc(self):
        for n in range(8):
            for p in all_perms(n):
                assert inverse(reverse_complement(p)) == reverse_complement(inverse(p))

    def test_rci_is_composition(self):
        for p in all_perms(5):
            assert reverse_complement_inverse(p) == inverse(reverse_complement(p))

    def test_statistics_preserved(self):
        for n in range(8):
            for p in all_perms(n):
                s = statistics(p)
                for kind in SymmetryKind:
                    t = statistics(apply_symmetry(p, kind))
                    assert (s.displacement, s.inversions, s.cycles) == (
                        t.displacement,
                        t.inversions,
                        t.cycles,
                    )


class TestSymmetryClasses:
    def test_decreasing_is_involution(self):
        assert is_in_class((4, 3, 2, 1), SymmetryClass.INVOLUTION)

    def test_21_in_all_classes(self):
        for cls in SymmetryClass:
            assert is_in_class((2, 1), cls)

    def test_23451_is_persymmetric_not_centrosymmetric(self):
        p = (2, 3, 4, 5, 1)
        assert reverse_complement(p) == (5, 1, 2, 3, 4)
        assert not is_in_class(p, SymmetryClass.CENTROSYMMETRIC)
        assert is_in_class(p, SymmetryClass.PERSYMMETRIC)

    def test_matches_fixed_point_definition(self):
        pairs = [
            (SymmetryClass.INVOLUTION, inverse),
            (SymmetryClass.CENTROSYMMETRIC, reverse_complement),
            (SymmetryClass.PERSYMMETRIC, reverse_complement_inverse),
        ]
        for p in all_perms(5):
            for cls, op in pairs:
                assert is_in_class(p, cls) == (op(p) == p)


class TestSums:
    def test_direct_sum_golden(self):
        assert direct_sum((4, 3, 1, 2), (5, 3, 1, 4, 2)) == (4, 3, 1, 2, 9, 7, 5, 8, 6)

    def test_skew_sum_golden(self):
        assert skew_sum(direct_sum((3, 1, 2), (1,)), (2, 1)) == (5, 3, 4, 6, 2, 1)

    def test_neutral_element(self):
        for p in all_perms(4):
            assert direct_sum((), p) == p == direct_sum(p, ())
            assert skew_sum(p, ()) == p == skew_sum((), p)

    def test_singletons(self):
        assert direct_sum((1,), (1,)) == (1, 2)
        assert skew_sum((1,), (1,)) == (2, 1)

    def test_statistics_additive_over_direct_sum(self):
        key = lambda s: (s.displacement, s.inversions, s.cycles)
        stats_by_size = {
            n: [(p, key(statistics(p))) for p in all_perms(n)] for n in range(9)
        }
        for a in range(9):
            for b in range(9 - a):
                for p, (dp, ip, cp) in stats_by_size[a]:
                    for q, (dq, iq, cq) in stats_by_size[b]:
                        assert key(statistics(direct_sum(p, q))) == (
                            dp + dq,
                            ip + iq,
                            cp + cq,
                        )


class TestReduce:
    def test_goldens(self):
        assert reduce_word((4, 8, 2, 9, 1)) == (3, 4, 2, 5, 1)
        assert reduce_word((9, 4, 8, 2)) == (4, 2, 3, 1)

    def test_fixed_point_on_permutations(self):
        for p in all_perms(5):
            assert reduce_word(p) == p

    def test_duplicate(self):
        with pytest.raises(DuplicateEntry):
            reduce_word((1, 3, 1))

    @given(st.lists(st.integers(-50, 50), max_size=9, unique=True))
    def test_order_preserving_and_idempotent(self, word):
        out = reduce_word(tuple(word))
        assert is_permutation(out)
        for i in range(len(word)):
            for j in range(len(word)):
                assert (word[i] < word[j]) == (out[i] < out[j])
        assert reduce_word(out) == out


class TestSpecial:
    def test_decreasing(self):
        assert decreasing(4) == (4, 3, 2, 1)
        assert decreasing(0) == ()

    def test_identity(self):
        assert identity(3) == (1, 2, 3)
        assert identity(0) == ()

    def test_negative_size(self):
        with pytest.raises(ValueError):
            decreasing(-1)
