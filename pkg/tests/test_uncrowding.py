import random

import pytest

from edgeschur.shapes import Partition, SkewShape, partitions_in_box
from edgeschur.tableaux import EdgeLabeledTableau, enumerate_elt
from edgeschur.uncrowding import (MalformedPair, RSKPair, crowd,
                                  check_crystal_commute, hook_tableau_census,
                                  rows_shape, rsk_insert, rsk_remove, uncrowd)


@pytest.fixture
def example_tableau():
    sh = SkewShape.of((3, 3, 2, 2))
    return EdgeLabeledTableau.of(
        sh, 4, (-4, 3),
        {(1, 1): 1, (1, 2): 1, (1, 3): 2, (2, 1): 2, (2, 2): 2, (2, 3): 6,
         (3, 1): 3, (3, 2): 3, (4, 1): 4, (4, 2): 5},
        {(2, 3): (4, 5), (4, 2): (4,), (5, 1): (5,)})


class TestRSK:
    def test_column_insert(self):
        assert rsk_insert((), [5, 4]) == ((4,), (5,))

    def test_empty_word(self):
        P = ((1, 2), (3,))
        assert rsk_insert(P, []) == P

    def test_knuth_invariance(self):
        rng = random.Random(47)
        for _ in range(100):
            word = [rng.randint(1, 4) for _ in range(rng.randint(3, 7))]
            k = rng.randint(0, len(word) - 3)
            x, y, z = word[k:k + 3]
            moved = None
            if x < y <= z:      # y x z ~ y z x reversed pattern checks
                moved = word[:k] + [y, x, z] + word[k + 3:]
                base = word[:k] + [y, z, x] + word[k + 3:]
            elif x <= y < z:    # x z y ~ z x y
                moved = word[:k] + [x, z, y] + word[k + 3:]
                base = word[:k] + [z, x, y] + word[k + 3:]
            if moved is not None:
                assert rsk_insert((), moved) == rsk_insert((), base)

    def test_remove_inverts_insert(self):
        rng = random.Random(53)
        for _ in range(50):
            word = [rng.randint(1, 5) for _ in range(6)]
            P0 = rsk_insert((), word[:-1])
            P1 = rsk_insert(P0, [word[-1]])
            s0, s1 = rows_shape(P0), rows_shape(P1)
            cell = next((r + 1, s1.part(r + 1))
                        for r in range(s1.extent)
                        if s1.part(r + 1) != s0.part(r + 1))
            back, letter = rsk_remove(P1, cell)
            assert back == P0 and letter == word[-1]


class TestWorkedExample:
    def test_trace(self, example_tableau):
        pair, trace = uncrowd(example_tableau, with_trace=True)
        expected = [
            (((4,), (5,)), {(2, 1): 1}),
            (((3, 5), (4,), (5,)), {(3, 1): 1}),
            (((2, 3), (3, 4), (4, 5), (5,)), {(3, 2): 3, (4, 1): 1}),
            (((1, 2), (2, 3), (3, 4), (4, 5), (5,)),
             {(4, 2): 3, (5, 1): 1}),
            (((1, 1, 6), (2, 2), (3, 3), (4, 4), (5, 5)),
             {(5, 1): 1, (5, 2): 3}),
            # step six inserts the diagonal reading word 5,4,2 exactly as
            # defined (the orders 5,4,2 and 5,2,4 are not Knuth equivalent)
            (((1, 1, 2), (2, 2, 4), (3, 3, 5), (4, 4, 6), (5, 5)),
             {(3, 3): 6, (4, 3): 6, (5, 1): 1, (5, 2): 3}),
        ]
        assert len(trace) == 6
        for k, (P_k, Q_k) in enumerate(trace):
            assert P_k == expected[k][0], f"P_{k + 1}"
            assert Q_k == expected[k][1], f"Q_{k + 1}"

    def test_roundtrip(self, example_tableau):
        pair = uncrowd(example_tableau)
        back = crowd(pair, Partition.of((3, 3, 2, 2)), (-4, 3), 4)
        assert back.key() == example_tableau.key()


class TestBijection:
    def test_no_labels_empty_recording(self):
        sh = SkewShape.of((2, 2))
        t = EdgeLabeledTableau.of(sh, 2, (-2, 2),
                                  {(1, 1): 1, (1, 2): 1, (2, 1): 2,
                                   (2, 2): 2}, {})
        pair = uncrowd(t)
        assert not pair.Q
        assert pair.P == ((1, 1), (2, 2))

    def test_exhaustive_roundtrip_small(self):
        for lam in partitions_in_box(2, 2):
            if not lam.size():
                continue
            lam = Partition.of([p for p in lam.parts if p > 0])
            shape = SkewShape.of(lam.parts, (), extent=lam.extent)
            seen = {}
            for t in enumerate_elt(shape, 3, (-2, 2), lam.extent):
                pair = uncrowd(t)
                key = (pair.P, pair.Q)
                assert key not in seen, "uncrowding collided"
                seen[key] = t
                assert crowd(pair, lam, (-2, 2), lam.extent).key() == t.key()

    def test_off_image_raises(self):
        with pytest.raises(MalformedPair):
            crowd(RSKPair(((1,),), ()), Partition.of((2,)), (-1, 2), 1)
        with pytest.raises(MalformedPair):
            crowd(RSKPair(((1, 1), (2,)), (((2, 2), 1),)),
                  Partition.of((2,)), (-1, 2), 1)
        with pytest.raises(MalformedPair):
            crowd(RSKPair(((2, 2),), ()), Partition.of((1, 1)), (-2, 1), 2)


class TestCrystalCommute:
    def test_21(self):
        assert check_crystal_commute(Partition.of((2, 1)), (-2, 2), 2, 3)

    def test_single_box(self):
        assert check_crystal_commute(Partition.of((1,)), (-1, 1), 1, 2)


class TestCensus:
    def test_20_census(self):
        census = hook_tableau_census(Partition.of((2,)), (-2, 1), 2, 2)
        assert Partition.of((2, 0)) in census
        # counts equal Schur-expansion coefficients at a = 1
        from edgeschur.crystal import schur_expansion_crystal
        from edgeschur.poly import MultiPoly, map_vars
        from edgeschur.schur import EdgeSchurParams
        coeffs = schur_expansion_crystal(Partition.of((2,)),
                                         EdgeSchurParams(2, (-2, 1), 2), 2, 4)
        for nu, qs in census.items():
            ones = map_vars(coeffs[nu],
                            lambda v: MultiPoly.one())
            assert sum(qs.values()) == ones.constant_term()

    def test_no_label_scope(self):
        census = hook_tableau_census(Partition.of((1,)), (0, 0), 1, 1)
        assert list(census) == [Partition.of((1,))]
        [(qkey, cnt)] = list(census[Partition.of((1,))].items())
        assert qkey == () and cnt == 1
