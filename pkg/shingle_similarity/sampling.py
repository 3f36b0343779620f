""" Similarity estimated on random subsamples of two shingle sequences.

Each repetition draws a subsample of at most `ng` shingles from each
sequence, uniformly and without replacement, and computes the exact
similarity of the two subsamples. The mean over repetitions is the estimate.

Examples
--------

Subsamples keep the original ranks, in their original order.

>>> sequence = ShingleSequence.from_values(['ab', 'bc', 'cd', 'de'])
>>> sample = subsample(sequence, 2, seed=7)
>>> len(sample)
2
>>> list(sample.ranks) == sorted(sample.ranks)
True
>>> subsample(sequence, 10, seed=7) == sequence
True

A subsample size that covers both sequences reproduces the exact similarity.

>>> a = ShingleSequence.from_values(['ab', 'ab', 'cd'])
>>> b = ShingleSequence.from_values(['ab', 'ef'])
>>> estimate = gc_estimate(a, b, SubsampleSpec(ng=5, reps=3, seed=0))
>>> (estimate.mean, estimate.std_dev)
(0.25, 0.0)

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import logging
import dataclasses

# Import numpy.
import numpy

# Local imports.
from shingle_similarity.config import DEFAULT_NG
from shingle_similarity.config import DEFAULT_SEED
from shingle_similarity.config import DEFAULT_GC_REPS
from shingle_similarity.errors import ParameterError
from shingle_similarity.estimate import summarize
from shingle_similarity.exact import check_compatible
from shingle_similarity.exact import multiplicity_oracle
from shingle_similarity.seeding import derive_seed
from shingle_similarity.shingling import ShingleSequence


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Document tags mixed into the seeds of each side of a pair.
TAG_A = 0
TAG_B = 1


# Subsample specification.
@dataclasses.dataclass(frozen=True)
class SubsampleSpec:
    """ Subsample size, repetition count and seed of a subsampling estimate.

    Attributes
    ----------
    ng : int
        Number of shingles drawn from each sequence.
    reps : int
        Number of repetitions.
    seed : int
        Base seed; repetition r of side t draws with `derive_seed(seed, t, r)`.
    """
    ng: int = DEFAULT_NG
    reps: int = DEFAULT_GC_REPS
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.ng < 1: raise ParameterError(f'ng must be >= 1, got {self.ng}')
        if self.reps < 1:
            raise ParameterError(f'reps must be >= 1, got {self.reps}')



# Subsampling.
def subsample(sequence, size, seed=0):
    """ Uniform sample without replacement of min(size, len(sequence))
        entries of `sequence`.

    Ranks are retained and entries keep their original order. A size that
    covers the whole sequence returns it unchanged.

    Raises
    ------
    ParameterError
        If `size` is below 1.
    """
    if size < 1: raise ParameterError(f'subsample size must be >= 1, got {size}')
    if size >= len(sequence): return sequence

    # Draw the positions to keep.
    rng = numpy.random.default_rng(seed)
    positions = numpy.sort(rng.choice(len(sequence), size=size, replace=False))

    # Return the result.
    return ShingleSequence(k=sequence.k,
                           ranks=tuple(sequence.ranks[i] for i in positions),
                           values=tuple(sequence.values[i] for i in positions))



# Subsampling estimator.
def gc_estimate(a, b, spec=None):
    """ Mean exact similarity of independent subsamples of `a` and `b`.

    Within repetition r, `a` is subsampled with `derive_seed(seed, 0, r)` and
    `b` with `derive_seed(seed, 1, r)`; the exact similarity of the two
    subsamples comes from `multiplicity_oracle`.

    Returns
    -------
    estimate : RepeatedEstimate
        Mean, sample standard deviation, and per-repetition values.
    """
    check_compatible(a, b)
    spec = SubsampleSpec() if spec is None else spec

    # Empty sequences follow the exact conventions.
    if not (len(a) and len(b)):
        logger.warning('subsampling estimate on an empty shingle sequence '
                       '(n_a=%d, n_b=%d)', len(a), len(b))

    # Compare one pair of subsamples per repetition.
    values = []
    for r in range(spec.reps):
        sample_a = subsample(a, spec.ng, derive_seed(spec.seed, TAG_A, r))
        sample_b = subsample(b, spec.ng, derive_seed(spec.seed, TAG_B, r))
        values.append(multiplicity_oracle(sample_a, sample_b).similarity)

    # Return the result.
    logger.debug('subsampling estimate over %d repetitions of %d shingles',
                 spec.reps, spec.ng)
    return summarize(values)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



