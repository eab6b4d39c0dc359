import pytest

from blockrep.partitions import (Partition,
                                 assemble_weight, column_counts_from_partition,
                                 det_monomial_weight_pair, embed_weight,
                                 format_partition, is_dominant,
                                 negative_weight, parse_half_weight,
                                 parse_partition, partition_from_column_counts,
                                 partitions_of, partitions_up_to,
                                 positive_weight, semidominant, split_weight,
                                 weight_to_partition)


def test_partition_canonical_form():
    assert Partition([3, 1, 1, 0, 0]) == (3, 1, 1)
    assert Partition([]) == ()
    assert Partition([0, 0]) == ()
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_partition_properties():
    p = Partition([4, 2, 1])
    assert p.size == 7
    assert p.length == 3
    assert p.row(1) == 4 and p.row(5) == 0
    assert p.contains(Partition([3, 2]))
    assert not p.contains(Partition([5]))
    assert p.conjugate() == Partition([3, 2, 1, 1])
    assert p.conjugate().conjugate() == p


def test_partition_text_round_trip():
    for p in partitions_up_to(6):
        assert parse_partition(format_partition(p)) == p
    assert format_partition(Partition([])) == "[]"
    with pytest.raises(ValueError):
        parse_partition("[2,x]")


def test_partitions_of_counts():
    # p(0..8) = 1 1 2 3 5 7 11 15 22
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for n, count in enumerate(expected):
        assert len(list(partitions_of(n))) == count


def test_column_counts_trivial_and_examples():
    assert partition_from_column_counts((0, 0)) == ()
    # rank 2, counts (1,1): rows are 1+1, 1
    assert partition_from_column_counts((1, 1)) == (2, 1)
    # rank 3, counts (2,0,1): rows 2+0+1, 0+1, 1
    assert partition_from_column_counts((2, 0, 1)) == (3, 1, 1)


def test_column_counts_bijection_round_trip():
    for n in range(1, 7):
        for size in range(13):
            for p in partitions_of(size, max_length=n):
                l = column_counts_from_partition(p, n)
                assert partition_from_column_counts(l) == p


def test_det_monomial_weight_pair_examples():
    zero_minus, zero_plus = det_monomial_weight_pair((0, 0, 0))
    assert zero_minus.is_zero() and zero_plus.is_zero()

    minus, plus = det_monomial_weight_pair((1, 0))
    assert plus == positive_weight((1,))
    assert minus == negative_weight((1,))
    assert minus.slot(0) == -1 and minus.slot(-1) == 0

    minus, plus = det_monomial_weight_pair((1, 1))
    assert plus == positive_weight((2, 1))
    assert minus.slot(0) == -2 and minus.slot(-1) == -1


def test_weight_to_partition_identities():
    from itertools import product
    assert weight_to_partition(negative_weight((2, 1))) == (2, 1)
    # both halves of the pair name the same diagram, for every count vector
    # with sum <= 10 in ranks up to 3 (plus a rank-4 sweep with sum <= 5)
    for n, bound in ((1, 10), (2, 10), (3, 10), (4, 5)):
        for l in product(range(bound + 1), repeat=n):
            if sum(l) > bound:
                continue
            minus, plus = det_monomial_weight_pair(l)
            assert weight_to_partition(minus) == weight_to_partition(plus)
            assert weight_to_partition(plus) == partition_from_column_counts(l)


def test_half_weight_slots_and_json():
    w = negative_weight((3, 1))
    assert [w.slot(s) for s in (-2, -1, 0)] == [0, -1, -3]
    assert parse_half_weight(str(w)) == w
    v = positive_weight((2, 2, 1))
    assert [v.slot(s) for s in (1, 2, 3, 4)] == [2, 2, 1, 0]
    with pytest.raises(ValueError):
        w.slot(1)
    with pytest.raises(ValueError):
        parse_half_weight('{"kind":"*","body":[]}')


def test_split_weight_examples():
    minus, plus = split_weight((0, 0, 0))
    assert minus.is_zero() and plus.is_zero()
    minus, plus = split_weight((1, 0, 0, -1))
    assert plus == positive_weight((1,))
    assert minus == negative_weight((1,))
    minus, plus = split_weight((2, 1, 0, -1))
    assert plus == positive_weight((2, 1))
    assert minus == negative_weight((1,))
    with pytest.raises(ValueError):
        split_weight((0, 1))


def test_split_weight_outputs_dominant_and_stable():
    cases = [(3, 1, 0, 0, -2), (2, 2, -1, -1, -3), (1, 0, 0, 0, 0, -1)]
    for nu in cases:
        minus, plus = split_weight(nu)
        assert is_dominant(tuple(plus.body))
        assert is_dominant(tuple(-r for r in reversed(minus.body)))
        # interior zero padding is invisible
        head = [x for x in nu if x > 0]
        tail = [x for x in nu if x < 0]
        padded = tuple(head) + (0,) * 7 + tuple(tail)
        assert split_weight(padded) == (minus, plus)


def test_embed_and_assemble():
    minus = negative_weight((2, 1))
    plus = positive_weight((3,))
    assert embed_weight(minus, 4) == (0, 0, -1, -2)
    assert embed_weight(plus, 4) == (3, 0, 0, 0)
    assert assemble_weight(minus, plus, 5) == (3, 0, 0, -1, -2)
    nu = assemble_weight(minus, plus, 6)
    assert split_weight(nu) == (minus, plus)
    with pytest.raises(ValueError):
        embed_weight(minus, 1)


def test_semidominant_weight():
    chi = semidominant((2, 1), (3,), central_charge=5)
    assert chi.chi1 == negative_weight((2, 1))
    assert chi.chi2 == positive_weight((3,))
    # chi(E_00) - chi(E_11) + c = -2 - 3 + 5
    assert chi.chi_centr == 0
    assert chi.slot(0) == -2 and chi.slot(1) == 3
    from blockrep.partitions import SemidominantWeight
    with pytest.raises(ValueError):
        SemidominantWeight(positive_weight((1,)), positive_weight((1,)))
    with pytest.raises(ValueError):
        SemidominantWeight(negative_weight((1,)), negative_weight((1,)))
