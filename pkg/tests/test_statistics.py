"""Statistics tests: root systems, inversions, rank/unrank, flag-major index."""

import itertools
import random
from math import factorial

import pytest

from gsg.errors import IndexOutOfRange, RankOutOfRange, UnsupportedRadix
from gsg.group_core import (
    ColoredValue,
    GroupElement,
    canonical_length,
    enumerate_group,
    gen_sigma,
    gen_t,
    identity,
    longest_element,
    multiply,
    parse_window,
    power,
)
from gsg.statistics import (
    QPolynomial,
    Root,
    act,
    all_roots,
    delta,
    delta_block,
    fmaj,
    fmaj_exponents,
    histogram,
    inv_closed,
    inv_oracle,
    inversion_table,
    is_negative,
    length_L,
    phi,
    poincare,
    rank,
    unrank,
)

W_BIG = "[2]3 [4]1 [1]6 5 [1]4 [2]2"


def positive_roots(m, n):
    """Oracle: the positive half built family by family, not via the classifier."""
    out = set()
    for j in range(1, n + 1):
        for a in range(m):
            for b in range(a + 1, m):
                out.add(Root(a, j, b, j))
        for l in range(1, j):
            for b in range(m):
                out.add(Root(0, j, b, l))
        for l in range(j + 1, n + 1):
            for a in range(m):
                for b in range(1, m):
                    out.add(Root(a, j, b, l))
    return out


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_count_identities(m, n):
    roots = all_roots(m, n)
    assert len(roots) == m * n * (m * n - 1)
    pos = positive_roots(m, n)
    neg = {r.negated() for r in pos}
    assert pos | neg == roots
    assert not pos & neg
    assert len(pos) == len(neg) == len(roots) // 2
    for r in roots:
        assert is_negative(r) != is_negative(r.negated())
        assert is_negative(r) == (r in neg)
    d = delta(m, n)
    assert d <= pos
    assert len(d) == n * (m - 1) + m * n * (n - 1) // 2
    blocks = [delta_block(m, n, i) for i in range(1, n + 1)]
    assert [len(b) for b in blocks] == [m * (n - i + 1) - 1 for i in range(1, n + 1)]
    union = set()
    for b in blocks:
        assert not union & b
        union |= b
    assert union == d


def test_example_block_sizes():
    assert len(all_roots(3, 3)) == 72
    assert len(delta(3, 3)) == 15
    assert [len(delta_block(3, 3, i)) for i in (1, 2, 3)] == [8, 5, 2]
    assert [len(delta_block(2, 2, i)) for i in (1, 2)] == [3, 1]


def test_radix_one_rejected():
    with pytest.raises(UnsupportedRadix):
        all_roots(1, 3)
    with pytest.raises(UnsupportedRadix):
        delta(1, 3)
    with pytest.raises(UnsupportedRadix):
        length_L(identity(1, 3))


def test_is_negative_examples():
    assert is_negative(Root(1, 1, 0, 1))
    assert not is_negative(Root(0, 2, 0, 1))
    assert is_negative(Root(0, 1, 0, 2))


def test_act_examples():
    t1 = gen_t(3, 2, 1)
    image = act(t1, Root(0, 1, 2, 1))
    assert image == Root(1, 1, 0, 1)
    assert is_negative(image)
    for r in all_roots(3, 2):
        assert act(identity(3, 2), r) == r
    s1 = parse_window("2 1", 3)
    assert act(s1, Root(0, 2, 0, 1)) == Root(0, 1, 0, 2)


def test_length_examples():
    assert length_L(identity(3, 3)) == 0
    for m, n in [(2, 2), (3, 3), (4, 2), (5, 6)]:
        assert length_L(longest_element(m, n)) == n * (m - 1) + m * n * (n - 1) // 2
    assert length_L(parse_window(W_BIG, 5)) == 43


def test_inversion_examples():
    w = parse_window("[2]3 [1]1 2", 3)
    assert [inv_closed(w, i) for i in (1, 2, 3)] == [1, 2, 2]
    assert [inv_oracle(w, i) for i in (1, 2, 3)] == [1, 2, 2]
    assert all(inv_closed(identity(3, 3), i) == 0 for i in (1, 2, 3))
    big = parse_window(W_BIG, 5)
    assert [inv_closed(big, i) for i in range(1, 7)] == [11, 13, 1, 11, 5, 2]
    assert str(inversion_table(big)) == "11:13:1:11:5:2"
    with pytest.raises(IndexOutOfRange):
        inv_closed(w, 4)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_oracle_matches_closed_form_exhaustive(m, n):
    for w in enumerate_group(m, n):
        for i in range(1, n + 1):
            assert inv_oracle(w, i) == inv_closed(w, i)
        assert sum(inversion_table(w).entries) == length_L(w)


def test_oracle_matches_closed_form_random_big():
    rng = random.Random(20250809)
    betas = list(range(1, 7))
    for _ in range(500):
        rng.shuffle(betas)
        colors = tuple(rng.randrange(5) for _ in range(6))
        w = GroupElement(5, 6, tuple(betas), colors)
        for i in range(1, 7):
            assert inv_oracle(w, i) == inv_closed(w, i)


def test_inversion_table_bounds():
    for w in enumerate_group(3, 3):
        table = inversion_table(w)
        for i, e in enumerate(table.entries, start=1):
            assert 0 <= e <= 3 * (3 - i + 1) - 1


def test_rank_examples():
    assert rank(parse_window("[2]3 [1]1 2", 3)) == 27
    assert rank(longest_element(3, 3)) == 162
    assert rank(parse_window(W_BIG, 5)) == 4321328
    assert rank(identity(4, 4)) == 1


def test_unrank_examples():
    assert unrank(4321328, 5, 6) == parse_window(W_BIG, 5)
    assert unrank(1, 3, 3) == identity(3, 3)
    assert unrank(162, 3, 3) == longest_element(3, 3)
    with pytest.raises(RankOutOfRange):
        unrank(0, 3, 3)
    with pytest.raises(RankOutOfRange):
        unrank(163, 3, 3)


@pytest.mark.parametrize("m,n", [(2, 3), (4, 2), (3, 3)])
def test_rank_order_is_lex_order_of_tables(m, n):
    # the table map covers the whole digit box, and sorting by rank sorts
    # the tables lexicographically
    elems = list(enumerate_group(m, n))
    tables = {tuple(inversion_table(w).entries) for w in elems}
    box = set(
        itertools.product(*(range(m * (n - i + 1)) for i in range(1, n + 1)))
    )
    assert tables == box
    seq = [tuple(inversion_table(w).entries) for w in sorted(elems, key=rank)]
    assert seq == sorted(seq)


def test_rank_unrank_beyond_enumeration_scale():
    # rank/unrank never enumerate, so they work where sweeps would not
    rng = random.Random(7)
    values = list(range(1, 8))
    for _ in range(100):
        rng.shuffle(values)
        colors = tuple(rng.randrange(6) for _ in range(7))
        w = GroupElement(6, 7, tuple(values), colors)
        assert unrank(rank(w), 6, 7) == w


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_rank_bijection_exhaustive(m, n):
    order = m**n * factorial(n)
    ranks = set()
    for w in enumerate_group(m, n):
        r = rank(w)
        assert unrank(r, m, n) == w
        ranks.add(r)
    assert ranks == set(range(1, order + 1))
    for r in range(1, order + 1):
        assert rank(unrank(r, m, n)) == r


def test_fmaj_examples():
    assert fmaj_exponents(identity(4, 3)) == [0, 0, 0]
    assert fmaj(identity(4, 3)) == 0
    assert fmaj_exponents(gen_t(3, 3, 1)) == [1, 0, 0]
    assert fmaj(gen_t(3, 3, 1)) == 1
    assert histogram("fmaj", 2, 2).coeffs == (1, 2, 2, 2, 1)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3), (1, 4)])
def test_fmaj_decomposition_is_the_unique_expression(m, n):
    sigmas = [gen_sigma(m, n, i) for i in range(n)]
    for w in enumerate_group(m, n):
        exps = fmaj_exponents(w)
        for i, k in enumerate(exps):
            assert 0 <= k <= m * i + m - 1
        rebuilt = identity(m, n)
        for i in range(n - 1, -1, -1):
            rebuilt = multiply(rebuilt, power(sigmas[i], exps[i]))
        assert rebuilt == w


def test_flag_generator_images_distinct():
    # the m(i+1) images of i+1 under powers of the i-th flag generator
    for m, n in [(2, 4), (3, 3), (5, 2)]:
        for i in range(1, n):
            sig = gen_sigma(m, n, i)
            images = [ColoredValue(i + 1, 0)]
            for _ in range(m * (i + 1) - 1):
                images.append(sig.apply(images[-1]))
            assert len(set(images)) == m * (i + 1)


def test_phi_examples():
    assert phi(identity(3, 3)) == identity(3, 3)
    w = parse_window("[2]3 [1]1 2", 3)
    assert inversion_table(w).entries == (1, 2, 2)
    img = phi(w)
    expected = multiply(
        power(gen_sigma(3, 3, 2), 1),
        multiply(power(gen_sigma(3, 3, 1), 2), power(gen_sigma(3, 3, 0), 2)),
    )
    assert img == expected
    assert fmaj(img) == 5 == length_L(w)


def test_phi_bijective_and_transports_length():
    images = set()
    for w in enumerate_group(2, 3):
        img = phi(w)
        assert fmaj(img) == length_L(w)
        images.add(img)
    assert len(images) == 48


def test_poincare():
    assert poincare(2, 2).coeffs == (1, 2, 2, 2, 1)
    p = poincare(3, 3)
    assert p.degree == 15
    assert sum(p.coeffs) == 162
    assert poincare(1, 3).coeffs == (1, 2, 2, 1)
    for m, n in [(2, 2), (3, 3), (4, 2), (2, 4)]:
        assert poincare(m, n).degree == length_L(longest_element(m, n))
        assert sum(poincare(m, n).coeffs) == m**n * factorial(n)


def test_qpolynomial_basics():
    assert QPolynomial.q_integer(4).coeffs == (1, 1, 1, 1)
    assert (QPolynomial((1, 1)) * QPolynomial((1, 1, 1, 1))).coeffs == (1, 2, 2, 2, 1)
    assert QPolynomial((1, 0, 0)).coeffs == (1,)
    assert str(QPolynomial((1, 2, 1))) == "1,2,1"


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_equidistribution(m, n):
    expected = poincare(m, n)
    assert histogram("inv", m, n) == expected
    assert histogram("fmaj", m, n) == expected
    assert histogram("L", m, n) == expected


def test_histogram_radix_one():
    assert histogram("inv", 1, 3) == poincare(1, 3)
    assert histogram("fmaj", 1, 3) == poincare(1, 3)


def test_length_functions_coincide_for_radix_two():
    for n in (1, 2, 3):
        for w in enumerate_group(2, n):
            assert length_L(w) == canonical_length(w)


def test_length_functions_diverge_for_radix_three():
    t2 = gen_t(3, 2, 2)
    assert length_L(t2) == 4
    assert canonical_length(t2) == 3
