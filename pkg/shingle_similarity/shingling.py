""" Positional k-shingles of a text.

A k-shingle is a run of k consecutive characters. A text of n characters holds
n - k + 1 of them. Each is identified by its value and its 1-based rank, so
repeated values remain distinct elements.

Examples
--------

>>> sequence = shingle('abcde', 3)
>>> sequence.entries
[(1, 'abc'), (2, 'bcd'), (3, 'cde')]
>>> shingle('ab', 3).entries
[]
>>> shingle('aaaa', 2).entries
[(1, 'aa'), (2, 'aa'), (3, 'aa')]

A document can also be shingled one line at a time. The last k - 1
characters of each line are carried over to the front of the next, so the
result matches the whole-text scan of the concatenated lines.

>>> stream_shingle(['abc', 'de'], 3) == shingle('abcde', 3)
True
>>> stream_shingle(['ab'], 3).entries
[]

The shingler keeps its carry-over between lines.

>>> shingler = StreamShingler(3)
>>> shingler.feed('ab')
[]
>>> shingler.carry
'ab'
>>> shingler.feed('cd')
[(1, 'abc'), (2, 'bcd')]
>>> shingler.carry
'cd'

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import collections
import dataclasses

# Local imports.
from shingle_similarity.errors import ParameterError


# Shingle length validation.
def check_length(k):
    """ Raise a `ParameterError` unless `k` is a positive integer. """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ParameterError(f'shingle length must be a positive integer, '
                             f'got {k!r}')
    return k



# Shingle sequence.
@dataclasses.dataclass(frozen=True)
class ShingleSequence:
    """ Ordered positional shingles of a text.

    Attributes
    ----------
    k : int
        Shingle length, in characters.
    ranks : tuple of int
        1-based start position of each shingle.
    values : tuple of str
        Shingle values, each `k` characters long.
    """
    k: int
    ranks: tuple = ()
    values: tuple = ()

    def __post_init__(self):
        check_length(self.k)
        if len(self.ranks) != len(self.values):
            raise ParameterError('ranks and values differ in length')

    def __len__(self):
        return len(self.values)

    @property
    def entries(self):
        """ List of (rank, value) pairs. """
        return list(zip(self.ranks, self.values))

    def counts(self):
        """ Multiplicity of each distinct value. """
        return collections.Counter(self.values)

    def distinct_values(self):
        """ Set of distinct values. """
        return frozenset(self.values)

    @classmethod
    def from_values(cls, values, k=None):
        """ Sequence with ranks 1..n for the given values.

        The shingle length defaults to the length of the first value.

        >>> ShingleSequence.from_values(['ab', 'ab', 'cd']).entries
        [(1, 'ab'), (2, 'ab'), (3, 'cd')]
        """
        values = tuple(values)
        if k is None: k = len(values[0]) if values else 1
        if any(len(v) != k for v in values):
            raise ParameterError(f'every value must have {k} characters')
        return cls(k=k, ranks=tuple(range(1, len(values) + 1)), values=values)

    @classmethod
    def from_entries(cls, entries, k):
        """ Sequence from (rank, value) pairs. """
        entries = tuple(entries)
        ranks = tuple(rank for (rank, _) in entries)
        values = tuple(value for (_, value) in entries)
        return cls(k=k, ranks=ranks, values=values)



# Whole-text shingling.
def shingle(text, k):
    """ Positional k-shingles of `text`.

    Entry i holds the k characters that start at position i (1-based). The
    sequence is empty when the text is shorter than `k`.

    Raises
    ------
    ParameterError
        If `k` is not a positive integer.
    """
    check_length(k)
    count = max(0, len(text) - k + 1)
    values = tuple(text[i:i+k] for i in range(count))
    return ShingleSequence(k=k, ranks=tuple(range(1, count + 1)),
                           values=values)



# Streaming shingler.
class StreamShingler:
    """ Incremental shingling of a text delivered line by line.

    The shingler keeps the last k - 1 characters of the text consumed so far
    (`carry`), which cannot start a shingle yet, and prepends them to the next
    line. Memory use is bounded by k plus the length of the longest line.

    Attributes
    ----------
    k : int
        Shingle length.
    carry : str
        Unconsumed tail of the text seen so far (at most k - 1 characters).
    rank : int
        Rank of the last emitted shingle.
    """

    def __init__(self, k):
        self.k = check_length(k)
        self.carry = ''
        self.rank = 0

    def feed(self, line):
        """ Consume a line and return the shingles it completes, as a list of
            (rank, value) pairs.
        """

        # Prepend the carry-over to the new line.
        buffer = self.carry + line
        count = max(0, len(buffer) - self.k + 1)

        # Extract the shingles that are now complete.
        shingles = [(self.rank + i + 1, buffer[i:i+self.k])
                    for i in range(count)]
        self.rank += count

        # Carry the incomplete end over to the next line.
        self.carry = buffer[len(buffer) - (self.k - 1):] if self.k > 1 else ''
        if len(buffer) < self.k - 1: self.carry = buffer

        # Return the result.
        return shingles

    def iter_shingles(self, lines):
        """ Generator of (rank, value) pairs for a sequence of lines. """
        for line in lines: yield from self.feed(line)



# Streaming shingling.
def iter_stream_shingles(line_source, k):
    """ Generator of the (rank, value) shingles of a line source. """
    return StreamShingler(k).iter_shingles(line_source)



def stream_shingle(line_source, k):
    """ Positional k-shingles of a document delivered as a sequence of lines.

    The output is identical to `shingle` applied to the concatenation of the
    lines, without separators.
    """
    check_length(k)
    return ShingleSequence.from_entries(iter_stream_shingles(line_source, k), k)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



