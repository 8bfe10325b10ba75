import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeschur.shapes import (MalformedMaya, Partition, SkewShape, WindowError,
                              deformed_diagonals, from_maya,
                              horizontal_strips_between, is_horizontal_strip,
                              partitions_in_box, strip_chains, to_maya)
from edgeschur.tableaux import enumerate_ssyt


@st.composite
def small_partitions(draw, rows=4, cols=4):
    parts = []
    hi = cols
    for _ in range(draw(st.integers(0, rows))):
        v = draw(st.integers(0, hi))
        parts.append(v)
        hi = v
    extent = len(parts) + draw(st.integers(0, 2))
    return Partition.of([p for p in parts if p > 0], extent=extent)


class TestPartition:
    def test_extent_matters(self):
        assert Partition.of((2,)) != Partition.of((2,), extent=2)

    def test_rejects_increase(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_conjugate_involution(self):
        for lam in partitions_in_box(4, 4):
            pos = Partition.of([p for p in lam.parts if p > 0])
            assert pos.conjugate().conjugate() == pos

    def test_content_sum(self):
        # sum of contents = sum_j C(lam'_j, 2) - sum_i C(lam_i, 2)
        for lam in partitions_in_box(4, 4):
            direct = sum(j - i for i, j in lam.cells())
            conj = lam.conjugate()
            via = (sum(p * (p - 1) // 2 for p in lam.parts)
                   - sum(p * (p - 1) // 2 for p in conj.parts))
            assert direct == via


class TestMaya:
    def test_hook_shape_window(self):
        assert to_maya(Partition.of((3, 3, 1)), -4, 4).bits == \
            (1, 0, 1, 0, 0, 1, 1, 0, 0)

    def test_rectangle_binary_string(self):
        lam = Partition.of((4, 2, 1), extent=4)
        assert to_maya(lam, -4, 5).bits == (1, 0, 1, 0, 1, 0, 0, 1, 0, 0)
        assert from_maya(to_maya(lam, -4, 5), 4) == lam

    def test_vacuum(self):
        assert to_maya(Partition.of((), extent=3), -3, 1).bits == (1, 1, 1, 0, 0)
        empty = from_maya(to_maya(Partition.of((), extent=2), -2, 0), 2)
        assert empty == Partition.of((), extent=2)

    def test_window_too_small(self):
        with pytest.raises(WindowError):
            to_maya(Partition.of((3, 1)), -1, 4)

    def test_malformed(self):
        m = to_maya(Partition.of((2, 1)), -2, 3)
        bad = type(m)(m.lo, m.hi, tuple(1 - b for b in m.bits))
        with pytest.raises(MalformedMaya):
            from_maya(bad, 2)

    @given(small_partitions(), st.integers(0, 2), st.integers(0, 2))
    @settings(max_examples=80, deadline=None)
    def test_roundtrip(self, lam, pad_lo, pad_hi):
        lo = -lam.extent - pad_lo
        hi = lam.first() + pad_hi
        assert from_maya(to_maya(lam, lo, hi), lam.extent) == lam

    def test_roundtrip_full_5x5_box(self):
        for lam in partitions_in_box(5, 5):
            for lo, hi in ((-5, 5), (-6, 7)):
                assert from_maya(to_maya(lam, lo, hi), 5) == lam


class TestStrips:
    def test_interlacing_pair(self):
        assert is_horizontal_strip(Partition.of((4, 4, 1), extent=4),
                                   Partition.of((4, 2), extent=4))

    def test_reflexive(self):
        lam = Partition.of((3, 1))
        assert is_horizontal_strip(lam, lam)

    def test_column_violation(self):
        assert not is_horizontal_strip(Partition.of((2, 2)),
                                       Partition.of((), extent=2))

    def test_chain_count_vs_ssyt(self):
        shape = SkewShape.of((2,), (), extent=2)
        assert len(strip_chains(shape, 2)) == 3
        shape2 = SkewShape.of((2, 1))
        assert len(strip_chains(shape2, 2)) == len(enumerate_ssyt(shape2, 2))

    def test_constant_chain(self):
        lam = Partition.of((2, 1))
        assert len(strip_chains(SkewShape(lam, lam), 3)) == 1

    @given(small_partitions(rows=3, cols=3), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_chain_count_matches_enumeration(self, lam, n):
        shape = SkewShape.of([p for p in lam.parts if p > 0], (),
                             extent=lam.extent)
        assert len(strip_chains(shape, n)) == len(enumerate_ssyt(shape, n))


class TestDeformedDiagonals:
    def test_known_strip(self):
        assert deformed_diagonals(Partition.of((4, 4, 1), extent=4),
                                  Partition.of((4, 2), extent=4),
                                  (-4, 4)) == {-1, 4}

    def test_trivial_strip(self):
        lam = Partition.of((2,), extent=2)
        # columns beyond lambda_1 - 1 are free, particle spots are not
        assert deformed_diagonals(lam, lam, (-2, 3)) == {-1, 0, 2, 3}

    def test_brute_force_states(self):
        # oracle: a column is deformed iff no particle of any index occupies it
        import random
        rng = random.Random(5)
        for _ in range(50):
            ext = rng.randint(1, 3)
            bottom = Partition(tuple(sorted((rng.randint(0, 3)
                                             for _ in range(ext)),
                                            reverse=True)))
            strips = list(horizontal_strips_between(
                bottom, Partition(tuple(p + 1 for p in bottom.parts))))
            top = rng.choice(strips)
            window = (-ext - 1, 5)
            occupied = set()
            for k in range(1, ext + 3):
                occupied.update(range(bottom.part(k) - k, top.part(k) - k + 1))
            expect = set(range(window[0], window[1] + 1)) - occupied
            assert deformed_diagonals(top, bottom, window) == expect
