""" Defaults, environment settings, and logging setup.

The default values mirror the experimental protocol used to compare long
texts: 3-shingles, subsamples of 10000 shingles averaged over 10 draws, and
min-hash signatures of 5 to 20 rows repeated 50 times.

Examples
--------

>>> DEFAULT_K
3
>>> params = MethodParams.for_method('gc')
>>> (params.ng, params.reps)
(10000, 10)
>>> MethodParams.for_method('rum').reps
50

The worker count honours the `SHINGLE_SIM_WORKERS` environment variable, but
never drops below one.

>>> worker_count(4, environ={'SHINGLE_SIM_WORKERS': '2'})
2
>>> worker_count(0, environ={})
1

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import os
import logging
import dataclasses

# Local imports.
from shingle_similarity.errors import ParameterError


# Initialize a module logger.
logger = logging.getLogger(__name__)


# Shingle length.
DEFAULT_K = 3

# Subsampling estimator: subsample size and repetitions.
DEFAULT_NG = 10000
DEFAULT_GC_REPS = 10

# Min-hash estimator: signature rows and repetitions.
DEFAULT_RUM_P = 20
DEFAULT_RUM_REPS = 50
RUM_P_GRID = (5, 10, 15, 20)

# Seed used when none is given.
DEFAULT_SEED = 0

# Largest universe for which the overlap law is computed with exact rationals.
EXACT_RATIONAL_LIMIT = 30

# Environment variable that caps pair-level parallelism.
WORKERS_ENVIRONMENT_VARIABLE = 'SHINGLE_SIM_WORKERS'

# Comparison methods understood by the corpus driver, mapped to the name
# recorded in reports.
METHODS = {'exact': 'exact',
           'stream': 'exact-stream',
           'file': 'exact-file',
           'gc': 'gc',
           'rum': 'rum'}

# Engines for exact comparisons.
ENGINES = ('oracle', 'matcher')


# Method parameters.
@dataclasses.dataclass(frozen=True)
class MethodParams:
    """ Parameters of one comparison method.

    Attributes
    ----------
    k : int
        Shingle length.
    ng : int
        Subsample size per document (subsampling estimator).
    reps : int
        Number of repetitions (subsampling and min-hash estimators).
    p : int
        Number of hash functions (min-hash estimator).
    seed : int
        Seed of the random generators.
    engine : str
        Exact engine: `oracle` (multiplicity counts) or `matcher` (the
        quadratic monogamous matcher).
    casefold : bool
        Whether documents are case-folded during editing.
    """
    k: int = DEFAULT_K
    ng: int = DEFAULT_NG
    reps: int = DEFAULT_GC_REPS
    p: int = DEFAULT_RUM_P
    seed: int = DEFAULT_SEED
    engine: str = 'oracle'
    casefold: bool = False

    def __post_init__(self):

        # Validate the parameters.
        if self.k < 1: raise ParameterError(f'k must be >= 1, got {self.k}')
        if self.ng < 1: raise ParameterError(f'ng must be >= 1, got {self.ng}')
        if self.reps < 1:
            raise ParameterError(f'reps must be >= 1, got {self.reps}')
        if self.p < 1: raise ParameterError(f'p must be >= 1, got {self.p}')
        if self.engine not in ENGINES:
            raise ParameterError(f'unknown engine {self.engine!r}; '
                                 f'expected one of {ENGINES}')

    @classmethod
    def for_method(cls, method, **kwargs):
        """ Parameters with the repetition default that suits `method`. """
        reps = DEFAULT_RUM_REPS if method == 'rum' else DEFAULT_GC_REPS
        kwargs = {'reps': reps, **{k: v for (k, v) in kwargs.items()
                                   if v is not None}}
        return cls(**kwargs)

    def as_dict(self):
        """ Parameters as a plain dictionary. """
        return dataclasses.asdict(self)



# Worker count.
def worker_count(requested=None, environ=None):
    """ Resolve the number of worker processes.

    The explicit request (or the CPU count, if there is none) is capped by the
    `SHINGLE_SIM_WORKERS` environment variable and floored at one.
    """

    # Initialize the environment.
    environ = os.environ if environ is None else environ

    # Start from the request, or from the CPU count.
    count = requested if requested is not None else (os.cpu_count() or 1)

    # Apply the environment cap, if one is set.
    cap = environ.get(WORKERS_ENVIRONMENT_VARIABLE)
    if cap:
        try:
            count = min(count, int(cap))
        except ValueError:
            logger.warning('ignoring non-integer %s=%r',
                           WORKERS_ENVIRONMENT_VARIABLE, cap)

    # Return the result.
    return max(1, count)



# Logging setup.
def configure_logging(verbosity=0, stream=None):
    """ Configure root logging for command-line use.

    Library code never calls this; it only emits records through module
    loggers.

    Arguments
    ---------
    verbosity : int
        0 for warnings, 1 for informational messages, 2 or more for debugging.
    stream : file-like, optional
        Destination of log records (stderr by default).
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=stream,
                        format='%(levelname)s %(name)s: %(message)s')



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



