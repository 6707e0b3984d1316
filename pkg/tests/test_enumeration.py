import dataclasses

import pytest

from shallowperm.enumeration import (
    Caps,
    CountQuery,
    CountTable,
    Method,
    MethodDisagreement,
    OracleDomainError,
    SizeCapExceeded,
    count,
    descent_table,
    profile,
    report_from_pairs,
    search_mesh_counterexample,
    verify,
)
from shallowperm.patterns import (
    POSITION_ANCHORED_3412,
    VALUE_ANCHORED_3412,
    avoids,
    classical,
)
from shallowperm.perms import SymmetryClass
from shallowperm.shallow import is_shallow

P132 = classical((1, 3, 2))
P231 = classical((2, 3, 1))
P321 = classical((3, 2, 1))
P123 = classical((1, 2, 3))


def totals(table):
    return {row.n: row.count for row in table.rows}


class TestCount:
    def test_all_shallow_size4(self):
        table = count(CountQuery(sizes=(4,), method=Method.BOTH))
        assert table.value(4) == 23

    def test_231_size4(self):
        table = count(CountQuery(sizes=(4,), avoid=(P231,), method=Method.BOTH))
        assert table.value(4) == 14

    def test_132_involutions_size5(self):
        table = count(
            CountQuery(
                sizes=(5,),
                avoid=(P132,),
                symmetry=SymmetryClass.INVOLUTION,
                method=Method.BOTH,
            )
        )
        assert table.value(5) == 8

    def test_methods_agree_through_6(self):
        for spec in (None, P132, P123):
            query = CountQuery(
                sizes=tuple(range(7)),
                avoid=(spec,) if spec else (),
                method=Method.BOTH,
            )
            count(query)  # raises MethodDisagreement on any mismatch

    def test_methods_agree_refined_symmetric(self):
        count(
            CountQuery(
                sizes=(7,),
                avoid=(P321,),
                symmetry=SymmetryClass.INVOLUTION,
                refine_by="descents",
                method=Method.BOTH,
            )
        )

    def test_all_231_avoiding_involutions_are_shallow(self):
        # The unfiltered involution count already matches the shallow one.
        import itertools

        from shallowperm.perms import inverse

        for n in range(1, 10):
            raw = sum(
                1
                for p in itertools.permutations(range(1, n + 1))
                if p == inverse(p) and avoids(p, (P231,))
            )
            assert raw == 2 ** (n - 1)
            table = count(
                CountQuery(
                    sizes=(n,), avoid=(P231,), symmetry=SymmetryClass.INVOLUTION
                )
            )
            assert table.value(n) == raw

    def test_refinement_sums_to_total(self):
        refined = count(
            CountQuery(sizes=(5,), avoid=(P321,), refine_by="descents")
        )
        plain = count(CountQuery(sizes=(5,), avoid=(P321,)))
        assert sum(row.count for row in refined.rows) == plain.value(5)

    def test_refinement_by_cycles_and_lrmax(self):
        for stat in ("cycles", "lrmax"):
            table = count(CountQuery(sizes=(4,), refine_by=stat))
            assert sum(row.count for row in table.rows) == 23

    def test_size_zero(self):
        table = count(CountQuery(sizes=(0,), avoid=(P132,), method=Method.BOTH))
        assert table.value(0) == 1

    def test_anchored_specs_exclude_nothing_shallow(self):
        # Both anchored patterns are avoided by every shallow permutation.
        table = count(
            CountQuery(
                sizes=(5, 6),
                avoid=(VALUE_ANCHORED_3412, POSITION_ANCHORED_3412),
                method=Method.BOTH,
            )
        )
        assert table.value(5) == 103
        assert table.value(6) == 511

    def test_cap_exceeded(self):
        with pytest.raises(SizeCapExceeded):
            count(CountQuery(sizes=(11,), method=Method.BRUTE_FORCE))
        with pytest.raises(SizeCapExceeded):
            count(CountQuery(sizes=(4,)), caps=Caps(brute_force=3, constructive=3))

    def test_bad_refinement_name(self):
        with pytest.raises(ValueError):
            CountQuery(sizes=(3,), refine_by="ascents")

    def test_rows_sorted_and_timed(self):
        table = count(CountQuery(sizes=(3, 5), avoid=(P132,), refine_by="descents"))
        keys = [(row.n, row.k) for row in table.rows]
        assert keys == sorted(keys)
        assert all(row.elapsed >= 0 for row in table.rows)

    def test_method_disagreement_payload(self):
        exc = MethodDisagreement(3, {None: 5}, {None: 6})
        assert exc.n == 3 and exc.brute == {None: 5}

    def test_both_detects_a_broken_decider(self, monkeypatch):
        import shallowperm.enumeration as en

        monkeypatch.setattr(en, "is_shallow", lambda p: True)
        with pytest.raises(MethodDisagreement) as exc:
            count(CountQuery(sizes=(4,), method=Method.BOTH))
        assert exc.value.brute == {None: 24}
        assert exc.value.constructive == {None: 23}


class TestVerify:
    def test_fibodd_totals_match(self):
        table = count(CountQuery(sizes=tuple(range(1, 8)), avoid=(P132,)))
        report = verify(table, "FibOdd")
        assert report.overall
        assert report.first_mismatch is None

    def test_closed_form_oracle(self):
        table = count(
            CountQuery(
                sizes=tuple(range(1, 8)),
                avoid=(P231,),
                symmetry=SymmetryClass.INVOLUTION,
            )
        )
        assert verify(table, "231_involutions").overall

    def test_corrupted_row_detected(self):
        table = count(CountQuery(sizes=tuple(range(1, 6)), avoid=(P132,)))
        bad_rows = tuple(
            dataclasses.replace(row, count=row.count + 1) if row.n == 4 else row
            for row in table.rows
        )
        corrupted = CountTable(
            query=table.query, rows=bad_rows, provenance=table.provenance
        )
        report = verify(corrupted, "FibOdd")
        assert not report.overall
        assert report.first_mismatch is not None
        assert report.first_mismatch.n == 4

    def test_bivariate_oracle(self):
        table = descent_table(6, P321)
        assert verify(table, "A321xz").overall

    def test_shape_mismatch(self):
        table = count(CountQuery(sizes=(4,), avoid=(P321,)))
        with pytest.raises(OracleDomainError):
            verify(table, "A321xz")
        refined = descent_table(4, P321)
        with pytest.raises(OracleDomainError):
            verify(refined, "FibOdd")

    def test_unknown_oracle(self):
        table = count(CountQuery(sizes=(3,)))
        with pytest.raises(OracleDomainError):
            verify(table, "NoSuchOracle")

    def test_domain_gap(self):
        table = count(
            CountQuery(
                sizes=(3,), avoid=(P231,), symmetry=SymmetryClass.INVOLUTION
            )
        )
        with pytest.raises(OracleDomainError):
            verify(table, "231_leading_pair")

    def test_report_from_pairs_empty(self):
        report = report_from_pairs(())
        assert report.overall and report.first_mismatch is None


class TestDescentTable:
    def test_132_row_golden(self):
        table = descent_table(5, P132)
        assert table.value(4, 1) == 5

    def test_identity_row(self):
        # The identity is the unique zero-descent permutation and is shallow,
        # so the (n, 0) entry is 1 whenever it avoids the pattern. Avoiding
        # 123 is the exception: the identity contains 123 from n = 3 on.
        for spec in (P132, P231, P321):
            table = descent_table(5, spec)
            assert all(table.value(n, 0) == 1 for n in range(1, 6))
        table = descent_table(5, P123)
        assert table.value(1, 0) == 1 and table.value(2, 0) == 1
        assert all(table.value(n, 0) == 0 for n in range(3, 6))

    def test_all_pairs_present(self):
        table = descent_table(4, P321)
        assert [(r.n, r.k) for r in table.rows] == [
            (n, k) for n in range(1, 5) for k in range(n)
        ]

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            descent_table(13, P132)


class TestProfile:
    def test_trivial_size(self):
        pair = profile(1)
        assert pair.consistent
        assert pair.left.counts == (((1, 1), 1),)
        assert pair.right.counts == (((1, 1), 1),)

    def test_totals_match_class_sizes(self):
        pair = profile(3)
        assert pair.left.total() == pair.right.total() == 5

    def test_known_flags(self):
        # The joint multisets coincide only at n=1; the totals always agree.
        assert profile(1).consistent
        assert not profile(2).consistent
        assert not profile(3).consistent

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            profile(13)


class TestMeshSearch:
    def test_no_witness_below_5(self):
        assert search_mesh_counterexample(3) is None
        assert search_mesh_counterexample(4) is None

    def test_first_witness(self):
        witness = search_mesh_counterexample(5)
        assert witness == (1, 4, 5, 2, 3)
        assert not is_shallow(witness)
        assert avoids(witness, (VALUE_ANCHORED_3412, POSITION_ANCHORED_3412))

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            search_mesh_counterexample(11)
