""" Exceptions raised by the `shingle_similarity` package.

Examples
--------

Parameter errors are also value errors, so callers that only know about the
standard library can still catch them.

>>> issubclass(ParameterError, ValueError)
True

Ingestion errors carry the path of the offending file.

>>> error = IngestionError('missing.txt', 'no such file')
>>> error.path
'missing.txt'
>>> str(error)
'missing.txt: no such file'

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Base exception class.
class ShingleSimilarityError(Exception):
    """ Base class for all errors raised by this package. """



# Invalid arguments.
class ParameterError(ShingleSimilarityError, ValueError):
    """ An argument lies outside the domain of an operation (e.g., a zero
        shingle length, a subset larger than its universe, or two shingle
        sequences built with different shingle lengths).
    """



# Corpus-level misuse.
class UsageError(ShingleSimilarityError):
    """ A request that cannot be served as posed (e.g., a corpus with fewer
        than two documents, or an unknown comparison method).
    """



# File-bound errors.
class _PathError(ShingleSimilarityError, OSError):
    """ Error tied to a file system path.

    Attributes
    ----------
    path : str
        The offending path.
    reason : str
        Human-readable description of the failure.
    """

    def __init__(self, path, reason):

        # Record the path and the reason.
        self.path = str(path)
        self.reason = str(reason)

        # Invoke the superclass constructor.
        super().__init__(f'{self.path}: {self.reason}')

        # Keep the constructor arguments so that the error survives pickling
        # across worker processes.
        self.args = (self.path, self.reason)

    def __str__(self):
        return f'{self.path}: {self.reason}'



class IngestionError(_PathError):
    """ A document could not be read or decoded. """



class EmissionError(_PathError):
    """ A report could not be written to its destination. """



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()


