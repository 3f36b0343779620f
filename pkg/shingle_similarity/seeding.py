""" Derivation of independent, reproducible seeds for repetitions and shards.

Seeds are mixed with `numpy.random.SeedSequence`. The derived seed depends only
on the base seed and the integer keys (e.g. a document tag and a repetition
index), so results do not depend on the order in which repetitions run.

Examples
--------

>>> derive_seed(7, 0) == derive_seed(7, 0)
True
>>> derive_seed(7, 0) == derive_seed(7, 1)
False
>>> derive_seed(7, 0, 3) == derive_seed(7, 1, 3)
False
>>> 0 <= derive_seed(7, 5) < 2**63
True

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import numpy.
import numpy


# Seed derivation.
def derive_seed(seed, *keys):
    """ Mix a base seed with integer keys into a new 63-bit seed.

    Arguments
    ---------
    seed : int
        Non-negative base seed.
    *keys : int
        Non-negative integers identifying the consumer (document tag,
        repetition index, shard index, ...).

    Returns
    -------
    seed : int
        A derived seed in the range [0, 2**63).
    """
    sequence = numpy.random.SeedSequence([int(seed), *map(int, keys)])
    (state,) = sequence.generate_state(1, dtype=numpy.uint64)
    return int(state) >> 1



# Generator construction.
def generator(seed, *keys):
    """ A `numpy.random.Generator` seeded with `derive_seed(seed, *keys)`, or
        with `seed` itself when no keys are given.
    """
    seed = derive_seed(seed, *keys) if keys else seed
    return numpy.random.default_rng(seed)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



