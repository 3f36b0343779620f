""" Min-hash signatures and the estimators built on them.

A family of p congruence functions h_i(x) = (a_i x + b_i) mod n maps the
elements 1..n of a universe back into 1..n; a remainder of zero is mapped to n.
The signature of a set keeps, for each function, the smallest value it takes
over the members of the set. The fraction of functions on which two
signatures agree estimates the Jaccard similarity of the two sets.

Examples
--------

A single function with a = b = 1 on a universe of five elements.

>>> family = HashFamily(p=1, n=5, a=(1,), b=(1,))
>>> eval_hash(family, 1, 1)
2
>>> eval_hash(family, 1, 4)
5

Signatures of a small representation matrix. The filling procedure and the
coordinate-wise minimum agree.

>>> from shingle_similarity.representation import build_matrix
>>> matrix = build_matrix([1, 2, 3, 4, 5], [{1, 2}, {2, 3}, {5}])
>>> family = HashFamily(p=2, n=5, a=(1, 2), b=(1, 3))
>>> signature_min(matrix, family).entries.tolist()
[[2, 3, 1], [2, 2, 3]]
>>> signature_fill(matrix, family) == signature_min(matrix, family)
True
>>> signature_similarity(signature_min(matrix, family), 0, 1)
0.5

Shingle values are hashed through a 64-bit FNV-1a fingerprint.

>>> canonical_encode('')
14695981039346656037
>>> hex(canonical_encode('a'))
'0xaf63dc4c8601ec8c'

Estimate the similarity of two shingle sequences with identical values.

>>> a = ShingleSequence.from_values(['abc', 'bcd', 'abc'])
>>> b = ShingleSequence.from_values(['bcd', 'abc'])
>>> rum_estimate(a, b, p=10, seed=1)
1.0

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import math
import logging
import functools
import dataclasses

# Import numpy.
import numpy

# Local imports.
from shingle_similarity.config import RUM_P_GRID
from shingle_similarity.config import DEFAULT_RUM_REPS
from shingle_similarity.errors import ParameterError
from shingle_similarity.estimate import summarize
from shingle_similarity.exact import check_compatible
from shingle_similarity.seeding import derive_seed
from shingle_similarity.shingling import ShingleSequence
from shingle_similarity.representation import build_matrix


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Initial value of signature entries; never reported for non-empty columns.
SENTINEL = numpy.iinfo(numpy.int64).max

# FNV-1a parameters (64 bits).
FNV_OFFSET_BASIS = 14695981039346656037
FNV_PRIME = 1099511628211
FNV_MASK = 2**64 - 1

# Moduli from this value upward are evaluated with Python integers, so that
# a_i * x cannot overflow 64 bits.
LARGE_MODULUS = 2**31


# Canonical encoding.
@functools.lru_cache(maxsize=2**16)
def canonical_encode(value):
    """ 64-bit FNV-1a fingerprint of the UTF-8 bytes of `value`.

    The result is the same on every platform and in every process.
    """
    state = FNV_OFFSET_BASIS
    for byte in value.encode('utf-8'):
        state = ((state ^ byte) * FNV_PRIME) & FNV_MASK
    return state



# Hash family.
@dataclasses.dataclass(frozen=True)
class HashFamily:
    """ A family of p congruence hash functions onto 1..n.

    Attributes
    ----------
    p : int
        Number of functions.
    n : int
        Modulus (universe size).
    a : tuple of int
        Multipliers, each in [1, n - 1].
    b : tuple of int
        Offsets, each in [0, n - 1].
    seed : int or None
        Seed the coefficients were drawn with, if any.
    """
    p: int
    n: int
    a: tuple
    b: tuple
    seed: int = None

    def __post_init__(self):
        if self.p < 1: raise ParameterError(f'p must be >= 1, got {self.p}')
        if self.n < 1: raise ParameterError(f'n must be >= 1, got {self.n}')
        if len(self.a) != self.p or len(self.b) != self.p:
            raise ParameterError('expected p multipliers and p offsets')

        # A universe of one element admits only the constant function.
        if self.n == 1:
            if any(x != 1 for x in self.a) or any(x != 0 for x in self.b):
                raise ParameterError('with n = 1, multipliers must be 1 and '
                                     'offsets 0')
            return

        for (i, (a, b)) in enumerate(zip(self.a, self.b), start=1):
            if not 1 <= a <= self.n - 1:
                raise ParameterError(f'multiplier a_{i}={a} outside '
                                     f'[1, {self.n - 1}]')
            if not 0 <= b <= self.n - 1:
                raise ParameterError(f'offset b_{i}={b} outside '
                                     f'[0, {self.n - 1}]')

    @classmethod
    def create(cls, p, n, seed=0, coprime=False):
        """ Draw a family from a seeded generator.

        Multipliers are uniform on [1, n - 1] and offsets uniform on
        [0, n - 1]. With `coprime`, multipliers that share a factor with n are
        drawn again, so that every function permutes 1..n. A universe of one
        element has no valid multiplier; its single function is the constant 1.
        """

        # Validate the parameters.
        if p < 1: raise ParameterError(f'p must be >= 1, got {p}')
        if n < 1: raise ParameterError(f'n must be >= 1, got {n}')

        # Degenerate universe.
        if n == 1: return cls(p=p, n=n, a=(1,) * p, b=(0,) * p, seed=seed)

        # Draw the coefficients.
        rng = numpy.random.default_rng(seed)
        a = [int(x) for x in rng.integers(1, n, size=p)]
        b = [int(x) for x in rng.integers(0, n, size=p)]

        # Redraw multipliers that share a factor with the modulus.
        if coprime:
            for i in range(p):
                while math.gcd(a[i], n) != 1: a[i] = int(rng.integers(1, n))

        # Return the result.
        return cls(p=p, n=n, a=tuple(a), b=tuple(b), seed=seed)

    def reduce(self, xs):
        """ Integers `xs` reduced modulo n, as an array suitable for
            `hash_rows`.
        """
        dtype = numpy.int64 if self.n < LARGE_MODULUS else object
        return numpy.array([int(x) % self.n for x in xs], dtype=dtype)

    def hash_rows(self, xs):
        """ Array of shape (p, len(xs)) holding h_i(x) for every function and
            every integer x.
        """
        x = self.reduce(xs)
        dtype = x.dtype
        a = numpy.array(self.a, dtype=dtype)[:, None]
        b = numpy.array(self.b, dtype=dtype)[:, None]
        values = (a * x[None, :] + b) % self.n
        values[values == 0] = self.n
        return values.astype(numpy.int64)



# Hash evaluation.
def eval_hash(family, i, x):
    """ h_i(x) = (a_i (x mod n) + b_i) mod n, with a zero remainder mapped to
        n. Functions are numbered from 1.

    Raises
    ------
    ParameterError
        If `i` is outside [1, p].
    """
    if not (1 <= i <= family.p):
        raise ParameterError(f'hash index {i} outside [1, {family.p}]')
    r = (family.a[i-1] * (int(x) % family.n) + family.b[i-1]) % family.n
    return family.n if r == 0 else r



# Signature matrix class.
class SignatureMatrix:
    """ Table of min-hash values c_rj: one row per function, one column per
        set.

    Attributes
    ----------
    entries : numpy.ndarray
        Integer array of shape (p, m).
    n : int
        Modulus of the hash family.
    """

    def __init__(self, entries, n):
        self.entries = numpy.array(entries, dtype=numpy.int64, ndmin=2)
        self.n = n

    @property
    def p(self):
        return self.entries.shape[0]

    @property
    def m(self):
        return self.entries.shape[1]

    @property
    def degenerate(self):
        """ Columns that still hold the sentinel (empty sets). """
        return [j for j in range(self.m)
                  if (self.entries[:, j] == SENTINEL).any()]

    def check_column(self, j):
        """ Raise a `ParameterError` unless `j` indexes a column. """
        if isinstance(j, bool) or not isinstance(j, (int, numpy.integer)) \
          or not (0 <= j < self.m):
            raise ParameterError(f'column {j!r} outside [0, {self.m})')
        return int(j)

    def __eq__(self, other):
        if not isinstance(other, SignatureMatrix): return NotImplemented
        return (self.n == other.n) \
           and numpy.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f'{type(self).__name__}(p={self.p}, m={self.m}, n={self.n})'



def _check_dimensions(matrix, family):
    if family.n != matrix.n:
        raise ParameterError(f'hash modulus {family.n} does not match the '
                             f'{matrix.n} rows of the matrix')



# Signature filling.
def signature_fill(matrix, family):
    """ Signature matrix by the column-filling procedure.

    All entries start at the sentinel. For each column and each element i
    from 1 to n, the values h_1(i), ..., h_p(i) are computed. If i belongs to
    the column, every entry of the column is lowered to min(c_rj, h_r(i)).

    Raises
    ------
    ParameterError
        If the modulus of the family differs from the row count.
    """
    _check_dimensions(matrix, family)

    # Set every entry to the sentinel.
    entries = numpy.full((family.p, matrix.m), SENTINEL, dtype=numpy.int64)

    # Fill the columns one at a time.
    for j in range(matrix.m):
        for i in range(1, matrix.n + 1):
            hashes = [eval_hash(family, r, i) for r in range(1, family.p + 1)]
            if not matrix.cells[i-1, j]: continue
            for r in range(family.p):
                entries[r, j] = min(entries[r, j], hashes[r])

    # Return the result.
    return SignatureMatrix(entries, family.n)



def signature_min(matrix, family):
    """ Signature matrix as the coordinate-wise minimum of the hash rows
        (h_1(i), ..., h_p(i)) over the members i of each column.

    The result equals `signature_fill` exactly.
    """
    _check_dimensions(matrix, family)

    # Hash every row number once.
    hashes = family.hash_rows(range(1, matrix.n + 1))

    # Take the minimum over the members of each column.
    entries = numpy.full((family.p, matrix.m), SENTINEL, dtype=numpy.int64)
    for j in range(matrix.m):
        members = matrix.cells[:, j]
        if members.any(): entries[:, j] = hashes[:, members].min(axis=1)

    # Return the result.
    return SignatureMatrix(entries, family.n)



# Signature similarity.
def signature_similarity(signature, j1, j2):
    """ Fraction of hash functions on which columns `j1` and `j2` agree. """
    (j1, j2) = (signature.check_column(j1), signature.check_column(j2))
    if signature.p < 1: raise ParameterError('signature has no rows')
    agree = signature.entries[:, j1] == signature.entries[:, j2]
    return float(numpy.count_nonzero(agree)) / signature.p



# Value encoding.
def encode_values(sequence):
    """ Sorted distinct canonical codes of the values of a shingle sequence.
    """
    return sorted({canonical_encode(v) for v in sequence.distinct_values()})



def _degenerate_estimate(a, b, name):
    """ Estimate for pairs with an empty sequence: 1 if both are empty,
        0 otherwise.
    """
    logger.warning('%s estimate on an empty shingle sequence '
                   '(n_a=%d, n_b=%d)', name, len(a), len(b))
    return 1.0 if (len(a) == len(b) == 0) else 0.0



# RUM signature.
def rum_signature(a, b, p, seed=0, coprime=False):
    """ Two-column signature of the combined collection of A and B.

    The collection holds the n = n_a + n_b shingles of both sequences, shared
    values included twice. The family is drawn with modulus n, and each
    shingle is hashed through the canonical code of its value. Column 0 is the
    coordinate-wise minimum over the shingles of A, column 1 over those of B.
    Repeated values cannot change a minimum, so each side is hashed once per
    distinct value.
    """
    check_compatible(a, b)
    if p < 1: raise ParameterError(f'p must be >= 1, got {p}')

    # Draw the hash family over the combined collection.
    family = HashFamily.create(p, len(a) + len(b), seed=seed, coprime=coprime)

    # Take the coordinate-wise minima of each side.
    columns = [family.hash_rows(encode_values(s)).min(axis=1) for s in (a, b)]
    signature = SignatureMatrix(numpy.column_stack(columns), family.n)
    assert not signature.degenerate

    # Return the result.
    return signature



# RUM estimate.
def rum_estimate(a, b, p, seed=0, coprime=False):
    """ Min-hash estimate of the similarity of two shingle sequences over
        their combined collection.

    Deterministic given the seed. Identical value sets give exactly 1. An
    empty sequence gives 0 (1 if both are empty), with a logged warning.
    """
    check_compatible(a, b)
    if p < 1: raise ParameterError(f'p must be >= 1, got {p}')
    if not (len(a) and len(b)): return _degenerate_estimate(a, b, 'RUM')
    signature = rum_signature(a, b, p, seed=seed, coprime=coprime)
    return signature_similarity(signature, 0, 1)



def rum_repeated(a, b, p, reps=DEFAULT_RUM_REPS, seed=0, coprime=False):
    """ `rum_estimate` over `reps` independent hash families.

    Repetition r uses the seed `derive_seed(seed, r)`.

    Returns
    -------
    estimate : RepeatedEstimate
        Mean, sample standard deviation (0 when reps = 1), and per-repetition
        values.
    """
    if reps < 1: raise ParameterError(f'reps must be >= 1, got {reps}')
    values = [rum_estimate(a, b, p, seed=derive_seed(seed, r),
                           coprime=coprime)
              for r in range(reps)]
    return summarize(values)



def rum_sweep(a, b, ps=RUM_P_GRID, reps=DEFAULT_RUM_REPS, seed=0,
              coprime=False):
    """ `rum_repeated` for each hash count in `ps`, as a dict keyed by p. """
    return {p: rum_repeated(a, b, p, reps=reps, seed=seed, coprime=coprime)
            for p in ps}



# Classical RU estimate.
def ru_estimate(a, b, p, seed=0, coprime=False):
    """ Min-hash estimate over the representation matrix of the distinct
        values of A and B.

    Rows are the sorted distinct values of both sequences, hashed by row
    number. The estimate targets the Jaccard similarity of the value sets.
    """
    check_compatible(a, b)
    (values_a, values_b) = (a.distinct_values(), b.distinct_values())
    if not (values_a and values_b): return _degenerate_estimate(a, b, 'RU')

    # Build the representation matrix of the value sets.
    universe = sorted(values_a | values_b)
    matrix = build_matrix(universe, [values_a, values_b])

    # Sign the columns and compare them.
    family = HashFamily.create(p, matrix.n, seed=seed, coprime=coprime)
    return signature_similarity(signature_min(matrix, family), 0, 1)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



