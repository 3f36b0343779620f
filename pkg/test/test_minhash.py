""" Tests of hash families, signature matrices, and the min-hash estimators.
"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import math
import random
import itertools
import unittest

# Import numpy.
import numpy

# Import pytest.
import pytest

# Local imports.
from shingle_similarity.errors import ParameterError
from shingle_similarity.exact import value_jaccard
from shingle_similarity.minhash import SENTINEL
from shingle_similarity.minhash import HashFamily
from shingle_similarity.minhash import SignatureMatrix
from shingle_similarity.minhash import canonical_encode
from shingle_similarity.minhash import eval_hash
from shingle_similarity.minhash import ru_estimate
from shingle_similarity.minhash import rum_estimate
from shingle_similarity.minhash import rum_repeated
from shingle_similarity.minhash import rum_sweep
from shingle_similarity.minhash import signature_fill
from shingle_similarity.minhash import signature_min
from shingle_similarity.minhash import signature_similarity
from shingle_similarity.representation import RepresentationMatrix
from shingle_similarity.representation import build_matrix
from shingle_similarity.shingling import ShingleSequence
from shingle_similarity.shingling import shingle

# Local fixtures.
from .fixtures import disjoint_pair
from .fixtures import rum_pair


def test_eval_hash_examples():
    family = HashFamily(p=1, n=5, a=(1,), b=(1,))
    assert eval_hash(family, 1, 4) == 5
    assert eval_hash(family, 1, 1) == 2
    for i in (0, 2):
        with pytest.raises(ParameterError):
            eval_hash(family, i, 1)



def test_hash_range():
    rng = random.Random(9)
    for seed in range(5):
        family = HashFamily.create(7, 97, seed=seed)
        values = {eval_hash(family, i, rng.randrange(10**9))
                  for i in range(1, 8) for _ in range(10**4 // 7)}
        assert values <= set(range(1, 98))
        assert 97 in values



def test_family_coefficients():
    family = HashFamily.create(200, 12, seed=1)
    assert all(1 <= a <= 11 for a in family.a)
    assert all(0 <= b <= 11 for b in family.b)
    coprime = HashFamily.create(200, 12, seed=1, coprime=True)
    assert all(math.gcd(a, 12) == 1 for a in coprime.a)
    assert HashFamily.create(3, 1).a == (1, 1, 1)
    assert HashFamily.create(5, 50, seed=8) == HashFamily.create(5, 50, seed=8)



@pytest.mark.parametrize('a, b', [((0,), (1,)), ((5,), (1,)), ((1,), (-1,)),
                                  ((1,), (5,)), ((0,), (9,))])
def test_out_of_range_coefficients(a, b):
    """ A constant hash would make every pair of sets look identical. """
    with pytest.raises(ParameterError):
        HashFamily(p=1, n=5, a=a, b=b)



def test_single_element_universe_coefficients():
    assert HashFamily(p=2, n=1, a=(1, 1), b=(0, 0)).n == 1
    with pytest.raises(ParameterError):
        HashFamily(p=1, n=1, a=(2,), b=(0,))



def test_hash_rows_matches_eval_hash():
    for n in (5, 97, 2**31 + 11):
        family = HashFamily.create(4, n, seed=2)
        xs = [0, 1, 2, n - 1, n, 10**12 + 3]
        rows = family.hash_rows(xs)
        for i in range(1, 5):
            assert rows[i - 1].tolist() == [eval_hash(family, i, x) for x in xs]



def test_canonical_encode():
    assert canonical_encode('') == 14695981039346656037
    assert canonical_encode('a') == 0xaf63dc4c8601ec8c
    assert canonical_encode('foobar') == 0x85944171f73967e8
    assert canonical_encode('abc') == canonical_encode('ab' + 'c')
    assert 0 <= canonical_encode('ééé') < 2**64



def test_encoding_collisions():
    """ 10^5 distinct three-character strings do not collide. """
    rng = random.Random(1)
    alphabet = [chr(c) for c in range(0x20, 0x20 + 200)]
    strings = set()
    while len(strings) < 10**5:
        strings.add(''.join(rng.choice(alphabet) for _ in range(3)))
    assert len({canonical_encode(s) for s in strings}) == len(strings)



def test_single_member_column():
    family = HashFamily.create(4, 6, seed=3)
    matrix = build_matrix(range(1, 7), [{4}])
    expected = [eval_hash(family, i, 4) for i in range(1, 5)]
    assert signature_fill(matrix, family).entries[:, 0].tolist() == expected
    assert signature_min(matrix, family).entries[:, 0].tolist() == expected



def test_empty_column_is_degenerate():
    family = HashFamily.create(3, 4, seed=0)
    matrix = build_matrix(range(1, 5), [set(), {1, 2}])
    signature = signature_fill(matrix, family)
    assert (signature.entries[:, 0] == SENTINEL).all()
    assert signature.degenerate == [0]
    assert signature_min(matrix, family) == signature



def test_dimension_mismatch():
    matrix = build_matrix(range(1, 5), [{1}])
    family = HashFamily.create(3, 5, seed=0)
    with pytest.raises(ParameterError):
        signature_fill(matrix, family)
    with pytest.raises(ParameterError):
        signature_min(matrix, family)



def test_criterion_exhaustive():
    """ Filling and coordinate-wise minimum agree on every two-column matrix
        with at most five rows.
    """
    for n in range(1, 6):
        for (seed, bits) in enumerate(itertools.product((0, 1), repeat=2 * n)):
            matrix = RepresentationMatrix(numpy.array(bits).reshape(n, 2))
            family = HashFamily.create(3, n, seed=seed)
            assert signature_fill(matrix, family) \
                == signature_min(matrix, family)



def test_criterion_random():
    rng = numpy.random.default_rng(5)
    for seed in range(500):
        matrix = RepresentationMatrix(rng.random((64, 4)) < 0.3)
        family = HashFamily.create(4, 64, seed=seed)
        assert signature_fill(matrix, family) == signature_min(matrix, family)



def test_identical_columns():
    matrix = build_matrix(range(1, 9), [{1, 5, 7}, {1, 5, 7}])
    signature = signature_min(matrix, HashFamily.create(6, 8, seed=1))
    assert signature_similarity(signature, 0, 1) == 1.0



def test_signature_similarity():
    signature = SignatureMatrix([[1, 1], [2, 9], [3, 3], [4, 9]], n=10)
    assert signature_similarity(signature, 0, 1) == 0.5
    assert signature_similarity(signature, 1, 1) == 1.0
    with pytest.raises(ParameterError):
        signature_similarity(signature, 0, 2)



def test_estimator_quality():
    """ With p = 512 functions, nearly every estimate falls within three
        standard deviations of the true Jaccard similarity.
    """
    (n, p) = (1009, 512)
    rng = numpy.random.default_rng(42)
    hits = 0
    for trial in range(50):
        union = rng.choice(numpy.arange(1, n + 1), size=rng.integers(40, 400),
                           replace=False)
        target = rng.uniform(0.1, 0.9)
        shared = max(1, int(round(target * len(union))))
        rest = union[shared:]
        cut = len(rest) // 2
        a = set(union[:shared].tolist()) | set(rest[:cut].tolist())
        b = set(union[:shared].tolist()) | set(rest[cut:].tolist())
        jaccard = len(a & b) / len(a | b)
        matrix = build_matrix(range(1, n + 1), [a, b])
        family = HashFamily.create(p, n, seed=trial)
        estimate = signature_similarity(signature_min(matrix, family), 0, 1)
        hits += abs(estimate - jaccard) <= 3 * math.sqrt(jaccard
                                                         * (1 - jaccard) / p)
    assert hits >= 0.95 * 50



# Define test case.
class TestRUM(unittest.TestCase):
    """ Test case for the min-hash estimate over the combined collection. """

    def test_identical_multisets(self):
        a = ShingleSequence.from_values(['abc', 'bcd', 'abc', 'xyz'])
        b = ShingleSequence.from_values(['xyz', 'abc', 'abc', 'bcd'])
        for seed in range(20):
            self.assertEqual(rum_estimate(a, b, 20, seed=seed), 1.0)
        estimate = rum_repeated(a, b, 20, reps=5, seed=1)
        self.assertEqual((estimate.mean, estimate.std_dev), (1.0, 0.0))

    def test_determinism(self):
        a = shingle('the quick brown fox', 3)
        b = shingle('the quick brown cat', 3)
        self.assertEqual(rum_estimate(a, b, 10, seed=4),
                         rum_estimate(a, b, 10, seed=4))

    def test_empty_inputs(self):
        a = shingle('abcdef', 3)
        empty = ShingleSequence(k=3)
        self.assertEqual(rum_estimate(a, empty, 5), 0.0)
        self.assertEqual(rum_estimate(empty, empty, 5), 1.0)
        self.assertEqual(ru_estimate(empty, a, 5), 0.0)

    def test_mismatched_lengths(self):
        with self.assertRaises(ParameterError):
            rum_estimate(shingle('abcd', 2), shingle('abcd', 3), 5)

    def test_disjoint_values(self):
        (a, b) = disjoint_pair()
        low = sum(rum_estimate(a, b, 20, seed=seed) <= 0.2
                  for seed in range(1000))
        self.assertGreaterEqual(low, 990)

    def test_single_repetition(self):
        a = shingle('abcdefgh', 3)
        b = shingle('abcdxyzw', 3)
        estimate = rum_repeated(a, b, 5, reps=1, seed=0)
        self.assertEqual(estimate.std_dev, 0.0)
        self.assertFalse(estimate.std_defined)



def test_rum_tracks_value_jaccard(rum_pair):
    (a, b) = rum_pair
    assert value_jaccard(a, b) == 0.5
    estimate = rum_repeated(a, b, 20, reps=50, seed=0)
    assert abs(estimate.mean - 0.5) <= 0.10
    assert all(0.0 <= value <= 1.0 for value in estimate.values)



def test_dispersion_falls_with_more_functions(rum_pair):
    (a, b) = rum_pair
    sweep = rum_sweep(a, b, ps=(5, 20), reps=50, seed=0)
    assert sweep[20].std_dev < sweep[5].std_dev



def test_ru_estimate_targets_value_jaccard():
    rng = random.Random(8)
    labels = rng.sample([f"{i:03d}" for i in range(200)], 90)
    (shared, only_a, only_b) = (labels[:30], labels[30:60], labels[60:])
    a = ShingleSequence.from_values(shared + only_a + only_a)
    b = ShingleSequence.from_values(shared + only_b)
    assert value_jaccard(a, b) == pytest.approx(1 / 3)
    values = [ru_estimate(a, b, 64, seed=seed, coprime=True)
              for seed in range(40)]
    assert abs(numpy.mean(values) - 1 / 3) <= 0.1
