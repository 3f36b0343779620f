""" Exact similarity between shingle sequences and between sets.

Two shingle sequences are compared by matching their shingles one to one: a
shingle of A can be married to at most one shingle of B with the same value,
and vice versa. The number of marriages, kc, gives the similarity
kc / (n_a + n_b - kc).

Examples
--------

>>> a = ShingleSequence.from_values(['ab', 'ab', 'cd'])
>>> b = ShingleSequence.from_values(['ab', 'ef'])
>>> result = match_similarity(a, b)
>>> (result.kc, result.n_a, result.n_b, result.similarity)
(1, 3, 2, 0.25)

The multiplicity counts give the same answer without the quadratic scan.

>>> multiplicity_oracle(a, b) == result
True

Identical and disjoint sequences sit at the ends of the scale.

>>> match_similarity(a, a).similarity
1.0
>>> match_similarity(a, ShingleSequence.from_values(['xy', 'zz'])).similarity
0.0

Plain set similarity and its complementary distance.

>>> round(set_jaccard({1, 2}, {2, 3}), 4)
0.3333
>>> round(jaccard_distance({1, 2}, {2, 3}), 4)
0.6667
>>> set_jaccard(set(), set())
1.0

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import logging
import collections
import dataclasses

# Local imports.
from shingle_similarity.errors import ParameterError
from shingle_similarity.shingling import ShingleSequence
from shingle_similarity.shingling import StreamShingler
from shingle_similarity.shingling import check_length
from shingle_similarity.shingling import iter_stream_shingles


# Initialize a module logger.
logger = logging.getLogger(__name__)


# Match result.
@dataclasses.dataclass(frozen=True)
class MatchResult:
    """ Outcome of an exact comparison.

    Attributes
    ----------
    kc : int
        Number of matched shingles.
    n_a : int
        Number of shingles of A.
    n_b : int
        Number of shingles of B.
    similarity : float
        kc / (n_a + n_b - kc); 1 when both sequences are empty.
    """
    kc: int
    n_a: int
    n_b: int
    similarity: float

    @classmethod
    def from_counts(cls, kc, n_a, n_b):
        """ Result with the similarity derived from the counts. """
        total = n_a + n_b - kc
        similarity = kc / total if (n_a + n_b) > 0 else 1.0
        return cls(kc=kc, n_a=n_a, n_b=n_b, similarity=similarity)

    def as_dict(self):
        return dataclasses.asdict(self)



# Compatibility check.
def check_compatible(a, b):
    """ Raise a `ParameterError` unless `a` and `b` share a shingle length. """
    if a.k != b.k:
        raise ParameterError(f'shingle lengths differ: {a.k} != {b.k}')



# Monogamous matcher.
def match_similarity(a, b):
    """ Exact similarity by monogamous matching of shingles.

    Each shingle of A is compared with the shingles of B in rank order and
    married to the first unmarried shingle with the same value. The sentinel
    vectors `test_a` and `test_b` mark married shingles. The running time is
    proportional to n_a * n_b.

    Raises
    ------
    ParameterError
        If the sequences were built with different shingle lengths.
    """
    check_compatible(a, b)

    # Initialize the sentinel vectors.
    (values_a, values_b) = (a.values, b.values)
    test_a = bytearray(len(values_a))
    test_b = bytearray(len(values_b))
    kc = 0

    # Marry each husband to the first available wife of the same value.
    for i in range(len(values_a)):
        if test_a[i]: continue
        for j in range(len(values_b)):
            if test_b[j]: continue
            if values_a[i] == values_b[j]:
                kc += 1
                test_a[i] = test_b[j] = 1
                break

    # Return the result.
    return MatchResult.from_counts(kc, len(values_a), len(values_b))



# Multiplicity oracle.
def multiplicity_oracle(a, b):
    """ Exact similarity from per-value multiplicities.

    kc is the sum, over distinct values, of the smaller of the two
    multiplicities. The result equals `match_similarity` exactly.
    """
    check_compatible(a, b)
    (counts_a, counts_b) = (a.counts(), b.counts())
    if len(counts_a) > len(counts_b): (counts_a, counts_b) = (counts_b, counts_a)
    kc = sum(min(count, counts_b[value]) for (value, count) in counts_a.items())
    return MatchResult.from_counts(kc, len(a), len(b))



# By-file matcher.
def file_match_similarity(lines_a, open_lines_b, k):
    """ Exact similarity computed row by row from files.

    The rows of A are read one at a time. For every row that completes at
    least one shingle, B is read again from its first row and its shingles are
    offered to the unmarried shingles of the row. B's marriage flags persist
    across passes. Incomplete line ends are carried over on both sides, so the
    result equals `match_similarity` on the whole sequences.

    Arguments
    ---------
    lines_a : iterable of str
        Edited lines of A.
    open_lines_b : callable
        Returns a fresh iterable over the edited lines of B on every call.
    k : int
        Shingle length.
    """
    check_length(k)

    # Initialize the state of the scan.
    test_b = bytearray()
    n_b = None
    (kc, n_a) = (0, 0)

    # Scan the rows of A.
    for row in _iter_rows(lines_a, k):
        n_a += len(row)
        wanting = collections.Counter(row)

        # Re-read B, offering each unmarried wife to the row.
        rank_b = 0
        for (rank_b, value) in iter_stream_shingles(open_lines_b(), k):
            if rank_b > len(test_b): test_b.append(0)
            if test_b[rank_b - 1] or not wanting[value]: continue
            wanting[value] -= 1
            test_b[rank_b - 1] = 1
            kc += 1
        n_b = rank_b

    # Count B if no row of A ever required a pass.
    if n_b is None:
        n_b = sum(1 for _ in iter_stream_shingles(open_lines_b(), k))

    # Return the result.
    logger.debug('by-file match: kc=%d n_a=%d n_b=%d', kc, n_a, n_b)
    return MatchResult.from_counts(kc, n_a, n_b)



def _iter_rows(lines, k):
    """ Generator of the non-empty lists of shingle values completed by each
        line.
    """
    shingler = StreamShingler(k)
    for line in lines:
        row = [value for (_, value) in shingler.feed(line)]
        if row: yield row



# Set similarity.
def set_jaccard(a, b):
    """ Jaccard similarity |a & b| / |a | b| of two finite sets; 1 when both
        are empty.
    """
    (a, b) = (set(a), set(b))
    union = len(a | b)
    return len(a & b) / union if union else 1.0



def jaccard_distance(a, b):
    """ Jaccard distance, 1 - `set_jaccard(a, b)`. """
    return 1.0 - set_jaccard(a, b)



def value_jaccard(a, b):
    """ Jaccard similarity of the distinct shingle values of two sequences.

    >>> a = ShingleSequence.from_values(['ab', 'ab', 'cd'])
    >>> b = ShingleSequence.from_values(['ab', 'ef'])
    >>> round(value_jaccard(a, b), 4)
    0.3333
    """
    check_compatible(a, b)
    return set_jaccard(a.distinct_values(), b.distinct_values())



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



