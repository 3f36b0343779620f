""" Test [fixtures] for using the [pytest] framework to test the
    `shingle_similarity` package.

[fixtures]: https://docs.pytest.org/en/6.2.x/fixture.html
[pytest]: https://docs.pytest.org

Examples
--------

>>> (a, b) = multiset_pair()
>>> (len(a), len(b))
(60000, 60000)
>>> multiplicity_oracle(a, b).similarity
0.5

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import numpy.
import numpy

# Import pytest.
import pytest

# Local imports.
from shingle_similarity.exact import multiplicity_oracle
from shingle_similarity.shingling import ShingleSequence
from shingle_similarity.synthetic import generate_corpus


# Build a shingle sequence from (value, copies) pairs, in shuffled order.
# This is NOT A PYTEST FIXTURE.
def repeated_sequence(counts, seed=0):
    """ Shingle sequence holding `copies` shingles of each value, shuffled
        with a seeded generator.
    """
    values = [value for (value, copies) in counts for _ in range(copies)]
    order = numpy.random.default_rng(seed).permutation(len(values))
    return ShingleSequence.from_values([values[i] for i in order], k=3)



# A pair of large sequences with exact similarity 0.5.
# This is NOT A PYTEST FIXTURE.
def multiset_pair():
    """ Two sequences of 60000 shingles whose exact similarity is 0.5.

    A holds 1250 copies of each of 40 shared values and 1000 copies of 10
    private values; B holds 1000 copies of the 40 shared values and of 20
    private values. The matched count is 40000.
    """
    shared = [f'{i:03d}' for i in range(40)]
    private_a = [f'{i:03d}' for i in range(40, 50)]
    private_b = [f'{i:03d}' for i in range(50, 70)]
    a = repeated_sequence([(v, 1250) for v in shared]
                          + [(v, 1000) for v in private_a], seed=1)
    b = repeated_sequence([(v, 1000) for v in shared + private_b], seed=2)
    return (a, b)



# A pair whose distinct values have Jaccard similarity 0.5.
# This is NOT A PYTEST FIXTURE.
def value_set_pair(copies=50):
    """ A holds values 0..59 and B values 20..79, each repeated `copies`
        times; 40 of the 80 distinct values are shared.
    """
    a = repeated_sequence([(f'{i:03d}', copies) for i in range(0, 60)], seed=3)
    b = repeated_sequence([(f'{i:03d}', copies) for i in range(20, 80)], seed=4)
    return (a, b)



# A pair with no value in common.
# This is NOT A PYTEST FIXTURE.
def disjoint_pair(copies=100):
    a = repeated_sequence([(f'{i:03d}', copies) for i in range(0, 30)], seed=5)
    b = repeated_sequence([(f'{i:03d}', copies) for i in range(100, 130)],
                          seed=6)
    return (a, b)



@pytest.fixture
def gc_pair():
    """ Sequences of 60000 shingles with exact similarity 0.5. """
    return multiset_pair()



@pytest.fixture
def rum_pair():
    """ Sequences whose distinct values have Jaccard similarity 0.5. """
    return value_set_pair()



@pytest.fixture
def corpus_directory(tmp_path):
    """ Directory of four related synthetic documents. """
    directory = tmp_path / 'corpus'
    generate_corpus(directory, documents=4, size=5000, seed=3)
    yield directory



@pytest.fixture
def identical_directory(tmp_path):
    """ Directory holding two copies of the same text. """
    directory = tmp_path / 'identical'
    directory.mkdir()
    text = 'In the beginning was the Word\nand the Word was with God\n'
    for name in ('first', 'second'):
        (directory / f'{name}.txt').write_text(text, encoding='utf-8')
    yield directory



@pytest.fixture(scope='module')
def protocol_directory(tmp_path_factory):
    """ Directory of four related synthetic documents of about 100 KB. """
    directory = tmp_path_factory.mktemp('protocol')
    generate_corpus(directory, documents=4, size=100000, seed=0)
    yield directory



# __main__
if __name__ == '__main__':
    import doctest
    doctest.testmod()

