""" Similarity expected from chance alone.

Draw a subset X of size k and, independently, a subset Y of size m from a
universe of n elements. The overlap |X & Y| then follows the hypergeometric
law

    P(|X & Y| = j) = C(k, j) C(n - k, m - j) / C(n, m),

and the Jaccard similarity of the pair is j / (k + m - j). Its expectation
p_R is the floor against which an observed text similarity is judged. For two
texts of sizes n_a and n_b, the universe holds both texts, so p_R uses
n = n_a + n_b, k = n_a, m = n_b.

Examples
--------

The overlap of two pairs drawn from four elements.

>>> distribution = overlap_pmf(4, 2, 2)
>>> distribution.exact_pmf
(Fraction(1, 6), Fraction(2, 3), Fraction(1, 6))
>>> distribution.probability(3)
0.0
>>> exact_expected_similarity(4, 2, 2)
Fraction(7, 18)
>>> round(expected_similarity(4, 2, 2), 4)
0.3889

When both subsets are the whole universe, they always coincide.

>>> overlap_pmf(5, 5, 5).pmf
(0.0, 0.0, 0.0, 0.0, 0.0, 1.0)
>>> expected_similarity(5, 5, 5)
1.0

Texts of equal size sit near one third.

>>> round(text_baseline(100000, 100000), 2)
0.33

The overlap law as sometimes written, with C(n, k) C(n, m) in the denominator,
does not sum to one.

>>> unnormalized_overlap_mass(4, 2, 2)
Fraction(1, 6)

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import math
import typing
import logging
import fractions
import dataclasses
import concurrent.futures

# Import numpy and scipy.
import numpy
import scipy.special

# Local imports.
from shingle_similarity.config import EXACT_RATIONAL_LIMIT
from shingle_similarity.errors import ParameterError
from shingle_similarity.seeding import derive_seed


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Upper bound on the number of membership cells held in memory per Monte Carlo
# chunk.
MONTE_CARLO_CHUNK_CELLS = 2**20


# Overlap distribution.
@dataclasses.dataclass(frozen=True)
class OverlapDistribution:
    """ Law of the overlap of two random subsets.

    Attributes
    ----------
    n : int
        Universe size.
    k : int
        Size of the first subset.
    m : int
        Size of the second subset.
    pmf : tuple of float
        Probability of each overlap j = 0..min(k, m).
    exact_pmf : tuple of fractions.Fraction or None
        The same law as exact rationals, for small universes.
    """
    n: int
    k: int
    m: int
    pmf: tuple
    exact_pmf: tuple = None

    @property
    def support(self):
        """ Smallest and largest overlap with non-zero probability. """
        return (max(0, self.k + self.m - self.n), min(self.k, self.m))

    def probability(self, j):
        """ P(|X & Y| = j); zero outside the support. """
        (low, high) = self.support
        return self.pmf[j] if low <= j <= high else 0.0

    def similarities(self):
        """ Jaccard similarity j / (k + m - j) for each overlap j. """
        return tuple(_similarity(j, self.k, self.m)
                     for j in range(len(self.pmf)))



# Validation.
def _check_sizes(n, k, m):
    """ Raise a `ParameterError` unless 0 <= k, m <= n. """
    for (name, value) in (('n', n), ('k', k), ('m', m)):
        if isinstance(value, bool) or not isinstance(value, (int, numpy.integer)):
            raise ParameterError(f'{name} must be an integer, got {value!r}')
    if n < 0: raise ParameterError(f'universe size must be >= 0, got {n}')
    if not (0 <= k <= n):
        raise ParameterError(f'subset size k={k} outside [0, n={n}]')
    if not (0 <= m <= n):
        raise ParameterError(f'subset size m={m} outside [0, n={n}]')
    return (int(n), int(k), int(m))



def _similarity(j, k, m):
    """ Jaccard similarity of two subsets of sizes k and m that share j
        elements; 1 for two empty subsets.
    """
    return j / (k + m - j) if (k + m) else 1.0



# Log binomial coefficients.
def log_binomial(a, b):
    """ Natural logarithm of C(a, b), evaluated with `scipy.special.gammaln`.

    >>> round(float(numpy.exp(log_binomial(10, 3))), 6)
    120.0
    """
    return (scipy.special.gammaln(a + 1)
            - scipy.special.gammaln(b + 1)
            - scipy.special.gammaln(a - b + 1))



# Overlap law.
def overlap_pmf(n, k, m):
    """ Law of |X & Y| for random subsets of sizes k and m of an n-universe.

    Universes of at most `EXACT_RATIONAL_LIMIT` elements are evaluated with
    exact integer rationals. Larger universes are evaluated in log-gamma space
    and renormalized so that the probabilities sum to one.

    Raises
    ------
    ParameterError
        If k or m is negative or exceeds n.
    """
    (n, k, m) = _check_sizes(n, k, m)
    (low, high) = (max(0, k + m - n), min(k, m))

    # Exact rational path.
    if n <= EXACT_RATIONAL_LIMIT:
        total = math.comb(n, m)
        exact = tuple(fractions.Fraction(math.comb(k, j)
                                         * math.comb(n - k, m - j), total)
                      for j in range(high + 1))
        return OverlapDistribution(n=n, k=k, m=m,
                                   pmf=tuple(float(p) for p in exact),
                                   exact_pmf=exact)

    # Log-gamma path.
    j = numpy.arange(low, high + 1)
    log_p = log_binomial(k, j) + log_binomial(n - k, m - j) \
          - log_binomial(n, m)
    weights = numpy.exp(log_p - log_p.max())
    weights = weights / math.fsum(weights)
    pmf = numpy.zeros(high + 1)
    pmf[low:] = weights

    # Return the result.
    return OverlapDistribution(n=n, k=k, m=m, pmf=tuple(pmf.tolist()))



# Expected similarity.
def expected_similarity(n, k, m):
    """ Expected Jaccard similarity p_R of two random subsets of sizes k and m
        drawn from an n-universe.

    Two empty subsets count as identical, so `expected_similarity(n, 0, 0)`
    is 1.
    """
    distribution = overlap_pmf(n, k, m)
    if distribution.exact_pmf is not None:
        return float(_exact_expectation(distribution))
    similarities = distribution.similarities()
    return math.fsum(s * p for (s, p) in zip(similarities, distribution.pmf))



def exact_expected_similarity(n, k, m):
    """ `expected_similarity` as an exact `fractions.Fraction`.

    The cost grows quickly with n; intended for small universes.
    """
    (n, k, m) = _check_sizes(n, k, m)
    total = math.comb(n, m)
    exact = [fractions.Fraction(math.comb(k, j) * math.comb(n - k, m - j),
                                total)
             for j in range(min(k, m) + 1)]
    distribution = OverlapDistribution(n=n, k=k, m=m,
                                       pmf=tuple(map(float, exact)),
                                       exact_pmf=tuple(exact))
    return _exact_expectation(distribution)



def _exact_expectation(distribution):
    (k, m) = (distribution.k, distribution.m)
    if k + m == 0: return fractions.Fraction(1)
    return sum((fractions.Fraction(j, k + m - j) * p
                for (j, p) in enumerate(distribution.exact_pmf)),
               fractions.Fraction(0))



def text_baseline(n_a, n_b):
    """ Baseline p_R for two texts of n_a and n_b shingles, whose universe is
        taken to hold both texts.
    """
    return expected_similarity(n_a + n_b, n_a, n_b)



def baseline_table(sizes):
    """ List of (N, p_R) pairs for texts of equal size N.

    >>> [(N, round(p, 2)) for (N, p) in baseline_table([100, 1000])]
    [(100, 0.33), (1000, 0.33)]
    """
    return [(size, text_baseline(size, size)) for size in sizes]



def unnormalized_overlap_mass(n, k, m):
    """ Total mass of the overlap law when it is normalized by
        C(n, k) C(n, m) and averaged over both drawing orders.

    The mass is the mean of 1 / C(n, k) and 1 / C(n, m) rather than 1, hence
    the hypergeometric normalization of `overlap_pmf`.
    """
    (n, k, m) = _check_sizes(n, k, m)
    denominator = math.comb(n, k) * math.comb(n, m)
    mass = fractions.Fraction(0)
    for j in range(min(k, m) + 1):
        mass += fractions.Fraction(math.comb(m, j) * math.comb(n - m, k - j)
                                   + math.comb(k, j) * math.comb(n - k, m - j),
                                   2 * denominator)
    return mass



# Monte Carlo estimate.
class MonteCarloEstimate(typing.NamedTuple):
    """ Sample mean of the similarity of random subset pairs, with its
        standard error.
    """
    estimate: float
    standard_error: float



def _random_subsets(rng, count, n, size):
    """ Boolean matrix of `count` rows, each marking a uniform subset of
        `size` elements of range(n).
    """
    mask = numpy.zeros((count, n), dtype=bool)
    if size == 0: return mask
    if size == n: return ~mask
    keys = rng.random((count, n))
    chosen = numpy.argpartition(keys, size - 1, axis=1)[:, :size]
    numpy.put_along_axis(mask, chosen, True, axis=1)
    return mask



def _monte_carlo_shard(n, k, m, trials, seed):
    """ (trials, mean, sum of squared deviations) for one shard. """

    # Initialize the generator and the chunk size.
    rng = numpy.random.default_rng(seed)
    chunk = max(1, MONTE_CARLO_CHUNK_CELLS // max(n, 1))

    # Draw subset pairs chunk by chunk.
    samples = []
    for start in range(0, trials, chunk):
        count = min(chunk, trials - start)
        x = _random_subsets(rng, count, n, k)
        y = _random_subsets(rng, count, n, m)
        j = (x & y).sum(axis=1)
        samples.append(j / (k + m - j))
    samples = numpy.concatenate(samples)

    # Return the summary statistics.
    mean = float(samples.mean())
    return (trials, mean, float(((samples - mean)**2).sum()))



def monte_carlo_expected_similarity(n, k, m, trials, seed=0, shards=1,
                                    workers=1):
    """ Monte Carlo estimate of `expected_similarity(n, k, m)`.

    Each trial draws independent uniform subsets of sizes k and m and records
    their Jaccard similarity. Trials are split across `shards`; shard s uses
    the seed `derive_seed(seed, s)`, so the estimate depends only on the seed
    and the shard count. Shards are evaluated in `workers` processes and
    merged by trial-weighted mean and pooled variance.

    Returns
    -------
    estimate : MonteCarloEstimate
        Sample mean and standard error.

    Raises
    ------
    ParameterError
        If the sizes are invalid, or `trials` or `shards` is smaller than one.
    """
    (n, k, m) = _check_sizes(n, k, m)
    if trials < 1: raise ParameterError(f'trials must be >= 1, got {trials}')
    if shards < 1: raise ParameterError(f'shards must be >= 1, got {shards}')
    if k + m == 0: return MonteCarloEstimate(1.0, 0.0)

    # Split the trials across shards.
    shards = min(shards, trials)
    sizes = [trials // shards + (s < trials % shards) for s in range(shards)]
    jobs = [(n, k, m, size, derive_seed(seed, s))
            for (s, size) in enumerate(sizes)]

    # Evaluate the shards.
    if workers > 1 and shards > 1:
        with concurrent.futures.ProcessPoolExecutor(workers) as executor:
            results = list(executor.map(_monte_carlo_shard, *zip(*jobs)))
    else:
        results = [_monte_carlo_shard(*job) for job in jobs]

    # Merge the shards.
    count = sum(c for (c, _, _) in results)
    mean = sum(c * mu for (c, mu, _) in results) / count
    squares = sum(ss + c * (mu - mean)**2 for (c, mu, ss) in results)
    error = math.sqrt(squares / (count - 1) / count) if count > 1 else 0.0

    # Return the result.
    logger.debug('monte carlo (%d, %d, %d): %d trials, mean %.6f, se %.6f',
                 n, k, m, count, mean, error)
    return MonteCarloEstimate(mean, error)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



