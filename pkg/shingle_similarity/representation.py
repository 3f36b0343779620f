""" Representation matrices: element-by-set membership grids.

Row i of the matrix stands for the i-th element of a universe, and column j
for a set S_j. A cell holds 1 when the element belongs to the set. The
similarity of two columns is the fraction of rows holding a 1 in both, among
the rows holding a 1 in at least one. This is a conditional probability over
a randomly drawn row, and it equals the Jaccard similarity of the two sets.

Examples
--------

>>> matrix = build_matrix([1, 2], [{1}, {2}])
>>> matrix.cells.astype(int).tolist()
[[1, 0], [0, 1]]
>>> matrix_similarity(matrix, 0, 1)
0.0

>>> matrix = build_matrix(['a', 'b', 'c', 'd'], [{'a', 'b'}, {'b', 'c'}, set()])
>>> round(matrix_similarity(matrix, 0, 1), 4)
0.3333
>>> matrix.support(1) == {'b', 'c'}
True
>>> bool(matrix.cells[:, 2].any())
False

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import numpy.
import numpy

# Local imports.
from shingle_similarity.errors import ParameterError


# Representation matrix class.
class RepresentationMatrix:
    """ Boolean membership grid of m sets over a universe of n elements.

    Attributes
    ----------
    cells : numpy.ndarray
        Boolean array of shape (n, m).
    universe : tuple
        Universe elements, in row order. Defaults to 1..n.
    """

    def __init__(self, cells, universe=None):

        # Record the cells as a two-dimensional boolean array.
        self.cells = numpy.array(cells, dtype=bool, ndmin=2)
        if self.cells.ndim != 2:
            raise ParameterError('cells must form a two-dimensional grid')

        # Initialize the universe.
        n = self.cells.shape[0]
        self.universe = tuple(range(1, n + 1) if universe is None else universe)
        if len(self.universe) != n:
            raise ParameterError('universe and cells differ in row count')

    @property
    def n(self):
        """ Number of rows (universe elements). """
        return self.cells.shape[0]

    @property
    def m(self):
        """ Number of columns (sets). """
        return self.cells.shape[1]

    def check_column(self, j):
        """ Raise a `ParameterError` unless `j` indexes a column. """
        if isinstance(j, bool) or not isinstance(j, (int, numpy.integer)) \
          or not (0 <= j < self.m):
            raise ParameterError(f'column {j!r} outside [0, {self.m})')
        return int(j)

    def members(self, j):
        """ 1-based row numbers of the members of column `j`. """
        j = self.check_column(j)
        return numpy.flatnonzero(self.cells[:, j]) + 1

    def support(self, j):
        """ The set of universe elements that belong to column `j`. """
        return {self.universe[i - 1] for i in self.members(j)}

    def __repr__(self):
        return f'{type(self).__name__}(n={self.n}, m={self.m})'



# Matrix construction.
def build_matrix(universe, sets):
    """ Representation matrix of `sets` over the ordered `universe`.

    Raises
    ------
    ParameterError
        If the universe repeats an element, or a set holds an element outside
        the universe.
    """

    # Index the universe.
    universe = tuple(universe)
    index = {element: i for (i, element) in enumerate(universe)}
    if len(index) != len(universe):
        raise ParameterError('universe elements must be distinct')

    # Fill the cells.
    sets = list(sets)
    cells = numpy.zeros((len(universe), len(sets)), dtype=bool)
    for (j, members) in enumerate(sets):
        for element in members:
            if element not in index:
                raise ParameterError(f'{element!r} is not in the universe')
            cells[index[element], j] = True

    # Return the result.
    return RepresentationMatrix(cells, universe=universe)



# Column similarity.
def matrix_similarity(matrix, h, k):
    """ Similarity of columns `h` and `k` as a conditional frequency.

    Rows with 1 in both columns are divided by rows with 1 in at least one.
    Rows empty in both columns play no part. Two all-zero columns have
    similarity 1.
    """
    (h, k) = (matrix.check_column(h), matrix.check_column(k))
    (column_h, column_k) = (matrix.cells[:, h], matrix.cells[:, k])
    both = int(numpy.count_nonzero(column_h & column_k))
    either = int(numpy.count_nonzero(column_h | column_k))
    return both / either if either else 1.0



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



