import pytest

from crankmex import (
    DomainError,
    Partition,
    crank_to_mex,
    from_low_crank,
    mex_to_crank,
    negate_crank,
    partitions_of,
    staircase,
    to_low_crank,
)

import golden_data


def P(text):
    return Partition.from_text(text)


# -- the low-crank map and its inverse ------------------------------------------


@pytest.mark.parametrize("j,source,d,image,crank", golden_data.LOW_CRANK_ROWS)
def test_to_low_crank_reference_rows(j, source, d, image, crank):
    lam = P(source)
    assert lam.durfee_size(j) == d
    out = to_low_crank(j, lam)
    assert out == P(image)
    assert out.crank() == crank == golden_data.crank_oracle(image)


@pytest.mark.parametrize("j,source,d,image,crank", golden_data.LOW_CRANK_ROWS)
def test_from_low_crank_reference_rows(j, source, d, image, crank):
    assert from_low_crank(j, P(image)) == P(source)


def test_from_low_crank_smallest_case():
    assert from_low_crank(0, P("1,1")) == P("2")
    assert to_low_crank(0, P("2")) == P("1,1")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_low_crank_even_staircase_family(k):
    # closed form: k parts 2k-1..k, then k..1, then k extra 1s; crank -3
    lam = staircase(0, 2 * k)
    expected = list(range(2 * k - 1, k - 1, -1)) + list(range(k, 0, -1)) + [1] * k
    out = to_low_crank(0, lam)
    assert out == Partition(sorted(expected, reverse=True))
    assert out.crank() == -3
    assert from_low_crank(0, out) == lam


@pytest.mark.parametrize("j", [1, 2, 3])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_low_crank_part_j_staircase_family(j, k):
    # input (j+2k, ..., j+1, j): one full run ending at j
    lam = Partition(range(j + 2 * k, j - 1, -1))
    if lam.weight <= 1:
        pytest.skip("outside the weight>1 domain")
    assert lam.durfee_size(j) == k
    expected = (
        list(range(2 * k - 1 + j, k + j - 1, -1))
        + list(range(k + j, j, -1))
        + [1] * (k + j)
    )
    out = to_low_crank(j, lam)
    assert out == Partition(sorted(expected, reverse=True))
    assert out.crank() == -j - (1 if k >= 1 else 0)
    assert from_low_crank(j, out) == lam


def test_low_crank_preserves_weight_and_durfee_size():
    for n in range(2, 16):
        for lam in partitions_of(n):
            for j in (0, 1, 2, 3):
                if not (lam.has_part(j) and lam.avoids_arm(j)):
                    continue
                out = to_low_crank(j, lam)
                assert out.weight == n
                assert out.crank() <= -j
                assert out.durfee_size(j) == lam.durfee_size(j)
                assert from_low_crank(j, out) == lam


def test_low_crank_domain_errors():
    with pytest.raises(DomainError):
        to_low_crank(1, P("1"))  # weight 1
    with pytest.raises(DomainError):
        to_low_crank(0, Partition())
    with pytest.raises(DomainError):
        to_low_crank(1, P("4,3"))  # no part 1
    with pytest.raises(DomainError):
        to_low_crank(0, P("7,2"))  # arm 0 present
    with pytest.raises(DomainError):
        from_low_crank(0, P("3"))  # crank 3 > 0
    with pytest.raises(DomainError):
        from_low_crank(0, P("1"))  # weight 1


# -- the crank-negating involution ------------------------------------------------


@pytest.mark.parametrize("source,ones,tall,image", golden_data.NEGATE_CRANK_ROWS)
def test_negate_crank_reference_rows(source, ones, tall, image):
    lam = P(source)
    assert lam.count(1) == ones
    assert lam.count_above(ones) == tall
    out = negate_crank(lam)
    assert out == P(image)
    assert out.crank() == -lam.crank()
    assert negate_crank(out) == lam


def test_negate_crank_no_ones_case():
    # the all-equal cases pair up across the two easy branches
    assert negate_crank(P("2,2")) == P("2,1,1")
    assert negate_crank(P("2,1,1")) == P("2,2")
    assert negate_crank(P("4")) == P("1,1,1,1")
    assert negate_crank(P("1,1,1,1")) == P("4")


def test_negate_crank_is_involution_small_weights():
    for n in range(2, 19):
        for lam in partitions_of(n):
            out = negate_crank(lam)
            assert out.weight == n
            assert out.crank() == -lam.crank()
            assert negate_crank(out) == lam


def test_negate_crank_domain_errors():
    with pytest.raises(DomainError):
        negate_crank(Partition())
    with pytest.raises(DomainError):
        negate_crank(P("1"))


# -- the composed correspondence ----------------------------------------------------


@pytest.mark.parametrize("j,image", sorted(golden_data.COMPOSED_IMAGES.items()))
def test_composed_map_reference_images(j, image):
    lam = P(golden_data.RUNNING_EXAMPLE)
    out = mex_to_crank(j, lam)
    assert out == P(image)
    assert out.crank() >= j
    assert crank_to_mex(j, out) == lam


def test_composed_map_final_table_row():
    assert mex_to_crank(0, P("2,1,1,1,1,1,1,1")) == P("9")
    assert crank_to_mex(0, P("9")) == P("2,1,1,1,1,1,1,1")


def test_composed_map_weight_two():
    assert mex_to_crank(0, P("2")) == P("2")
    assert crank_to_mex(0, P("2")) == P("2")


def test_composed_round_trip_small_weights():
    for n in range(2, 15):
        for lam in partitions_of(n):
            for j in (0, 1, 2, 3):
                if not (lam.has_part(j) and lam.has_odd_mex(j)):
                    continue
                out = mex_to_crank(j, lam)
                assert out.weight == n
                assert out.crank() >= j
                assert crank_to_mex(j, out) == lam


def test_composed_map_domain_errors():
    with pytest.raises(DomainError):
        mex_to_crank(1, P("4,3"))  # lacks the part 1
    with pytest.raises(DomainError):
        mex_to_crank(2, P("5,3,2,2"))  # even mex offset at 2
    with pytest.raises(DomainError):
        crank_to_mex(3, P("2,1"))  # crank 0 < 3
