"""Shared random-instance generators for the test suite."""

from __future__ import annotations

import random

from linkbound import BraidWord, SeifertData, closure_components, \
    seifert_matrix_from_braid, stabilize
from linkbound.linalg import int_det, rational_rank


def random_laurent_dict(rng: random.Random, max_deg=8, max_coeff=9,
                        min_exp=-4) -> dict:
    n_terms = rng.randint(1, 6)
    out = {}
    for _ in range(n_terms):
        e = rng.randint(min_exp, max_deg)
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            out[e] = out.get(e, 0) + c
    return out


def random_seifert_data(rng: random.Random, max_size=6, max_entry=3) -> SeifertData:
    """A valid random SeifertData: any square integer matrix has even skew
    rank 2g, so m = n - 2g + 1 works; reject the m = 1 cases whose skew
    part is not unimodular (those are not knot Seifert matrices)."""
    while True:
        n = rng.randint(1, max_size)
        v = [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(n)]
        skew = [[v[i][j] - v[j][i] for j in range(n)] for i in range(n)]
        rank = rational_rank(skew)
        m = n - rank + 1
        if m == 1 and abs(int_det(skew)) != 1:
            continue
        return SeifertData.from_matrix(v, m)


def random_braid(rng: random.Random, max_strands=4, max_len=10) -> BraidWord:
    """A braid using every generator index at least once."""
    while True:
        strands = rng.randint(2, max_strands)
        length = rng.randint(strands, max_len)
        letters = [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                   for _ in range(length)]
        if {abs(x) for x in letters} == set(range(1, strands)):
            return BraidWord(strands, tuple(letters))


def random_knot_data(rng: random.Random, max_strands=3, max_len=9,
                     stabilizations=0) -> SeifertData:
    """Seifert data of a random braid-closure knot, optionally stabilized."""
    while True:
        b = random_braid(rng, max_strands, max_len)
        if closure_components(b) == 1:
            break
    data = seifert_matrix_from_braid(b)
    for _ in range(stabilizations):
        direction = rng.choice(["row-first", "column-first"])
        column = [rng.randint(-2, 2) for _ in range(data.size)]
        data = stabilize(data, direction, column)
    return data
