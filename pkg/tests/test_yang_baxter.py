"""Yang-Baxter residuals, induced representations, JSON loading."""

import json
import random
from fractions import Fraction

import numpy as np
import pytest

from braidrep.laurent import LaurentPoly, RingMatrix
from braidrep.words import BraidWord, underlying_permutation
from braidrep.yang_baxter import (
    RMatrixSpec,
    YangBaxterError,
    check_braid_ybe,
    check_qybe,
    check_quasitriangular_matrix_axioms,
    compose_flip,
    flip_r,
    identity_r,
    kron_exact,
    r_matrix_from_json,
    r_matrix_to_json,
    rep_from_r,
    rq_r,
)

CORPUS = [identity_r(2), flip_r(2), rq_r()]


@pytest.mark.parametrize("spec", CORPUS, ids=["identity", "flip", "rq"])
def test_corpus_satisfies_braid_ybe_exactly(spec):
    res = check_braid_ybe(spec)
    assert res.norm == 0.0 and res.passes


def test_qybe_examples():
    assert check_qybe(identity_r(2)).norm == 0.0
    two_id = RMatrixSpec(2, "rational", RingMatrix.identity(4).scale(2))
    assert check_qybe(two_id).norm == 0.0  # scaling preserves the QYBE


@pytest.mark.parametrize("spec", CORPUS + [compose_flip(rq_r())], ids=["id", "flip", "rq", "tau_rq"])
def test_qybe_iff_braid_ybe_of_flipped(spec):
    assert (check_qybe(spec).norm == 0.0) == (check_braid_ybe(compose_flip(spec)).norm == 0.0)


def test_generic_rational_matrix_fails():
    rng = random.Random(3)
    grid = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)] for _ in range(4)]
    grid[0][0] += 7  # keep it invertible
    spec = RMatrixSpec(2, "rational", RingMatrix.from_rows(grid))
    assert check_braid_ybe(spec).norm != 0.0
    report = check_quasitriangular_matrix_axioms(spec)
    assert report["braid_ybe"] != 0.0 and not report["passes"]


def test_flip_representation_is_permutation_action():
    w = BraidWord.parse("s1 s2 s1", 3)
    m = rep_from_r(flip_r(2), 3, w)
    assert m == rep_from_r(flip_r(2), 3, BraidWord.parse("s2 s1 s2", 3))
    # full reversal of three tensor legs
    one, zero = LaurentPoly.constant(1), LaurentPoly.constant(0)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                row, col = (c << 2) | (b << 1) | a, (a << 2) | (b << 1) | c
                for r in range(8):
                    want = one if r == row else zero
                    assert m.entries[r][col] == want


def test_identity_word_and_inverse_words():
    assert rep_from_r(rq_r(), 3, BraidWord(3)).is_identity()
    rng = random.Random(12)
    for _ in range(10):
        letters = tuple((rng.randint(1, 2), rng.choice((1, -1))) for _ in range(rng.randint(0, 5)))
        w = BraidWord(3, letters)
        assert rep_from_r(rq_r(), 3, w * w.inverse()).is_identity()


@pytest.mark.parametrize("n", [3, 4])
def test_rq_representation_braid_relations(n):
    for i in range(1, n - 1):
        a = BraidWord(n, ((i, 1), (i + 1, 1), (i, 1)))
        b = BraidWord(n, ((i + 1, 1), (i, 1), (i + 1, 1)))
        assert rep_from_r(rq_r(), n, a) == rep_from_r(rq_r(), n, b)
    for i in range(1, n):
        for j in range(i + 2, n):
            ab = BraidWord(n, ((i, 1), (j, 1)))
            ba = BraidWord(n, ((j, 1), (i, 1)))
            assert rep_from_r(rq_r(), n, ab) == rep_from_r(rq_r(), n, ba)


def test_non_ybe_matrix_is_rejected_for_representations():
    rng = random.Random(3)
    grid = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)] for _ in range(4)]
    grid[0][0] += 7
    spec = RMatrixSpec(2, "rational", RingMatrix.from_rows(grid))
    with pytest.raises(YangBaxterError):
        rep_from_r(spec, 3, BraidWord.parse("s1", 3))
    with pytest.warns(UserWarning):
        rep_from_r(spec, 3, BraidWord.parse("s1", 3), allow_non_ybe=True)


def test_size_cap():
    with pytest.raises(ValueError):
        rep_from_r(flip_r(4), 7, BraidWord(7))


def test_numeric_r_matrix_path():
    # rq at a concrete complex q exercises the numeric branch
    q = 0.8 + 0.3j
    grid = np.zeros((4, 4), dtype=complex)
    grid[0, 0] = grid[3, 3] = q
    grid[1, 2] = grid[2, 1] = 1.0
    grid[2, 2] = q - 1 / q
    spec = RMatrixSpec(2, "complex", grid)
    assert check_braid_ybe(spec).norm <= 1e-10
    assert check_braid_ybe(spec).passes
    m = rep_from_r(spec, 3, BraidWord.parse("s1 s2 s1", 3))
    m2 = rep_from_r(spec, 3, BraidWord.parse("s2 s1 s2", 3))
    assert np.max(np.abs(m - m2)) <= 1e-10


def test_kron_exact_shape_and_identity():
    a = RingMatrix.identity(2)
    b = RingMatrix.identity(3)
    assert kron_exact(a, b).is_identity()


def test_json_roundtrip_all_rings(tmp_path):
    for spec in CORPUS:
        data = r_matrix_to_json(spec)
        path = tmp_path / "r.json"
        path.write_text(json.dumps(data))
        loaded = r_matrix_from_json(json.loads(path.read_text()))
        assert loaded.ring == spec.ring and loaded.matrix == spec.matrix
    numeric = RMatrixSpec(2, "complex", np.eye(4, dtype=complex))
    again = r_matrix_from_json(r_matrix_to_json(numeric))
    assert np.array_equal(again.matrix, numeric.matrix)


def test_singular_matrix_rejected():
    with pytest.raises(ValueError):
        RMatrixSpec(2, "rational", RingMatrix.zero(4, 4))


def test_flip_word_order_matches_permutation_oracle():
    # with word-order products, the accumulated permutation operator matches
    # composing the letters' transpositions right to left
    rng = random.Random(77)
    for _ in range(10):
        letters = tuple((rng.randint(1, 2), 1) for _ in range(rng.randint(1, 6)))
        w = BraidWord(3, letters)
        m = rep_from_r(flip_r(2), 3, w)
        perm = underlying_permutation(BraidWord(3, tuple(reversed(letters))))
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    src = [a, b, c]
                    dst = [0, 0, 0]
                    for leg in range(3):
                        dst[perm.images[leg] - 1] = src[leg]
                    col = (src[0] << 2) | (src[1] << 1) | src[2]
                    row = (dst[0] << 2) | (dst[1] << 1) | dst[2]
                    assert m.entries[row][col].is_one()
