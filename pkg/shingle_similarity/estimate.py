""" Summary of an estimator repeated over independent draws.

Examples
--------

>>> estimate = summarize([0.5, 0.7, 0.6])
>>> (round(estimate.mean, 4), round(estimate.std_dev, 4))
(0.6, 0.1)
>>> (mean, std_dev, values) = estimate
>>> values
[0.5, 0.7, 0.6]

A single repetition has no sample standard deviation; it is reported as zero
and flagged.

>>> single = summarize([0.25])
>>> (single.std_dev, single.std_defined)
(0.0, False)

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import typing

# Import numpy.
import numpy


# Repeated estimate.
class RepeatedEstimate(typing.NamedTuple):
    """ Mean, sample standard deviation, and per-repetition values.

    The standard deviation is a ratio; multiply by 100 for percentage points.
    """
    mean: float
    std_dev: float
    values: list

    @property
    def std_defined(self):
        """ Whether at least two repetitions back the standard deviation. """
        return len(self.values) > 1

    def as_dict(self):
        return dict(mean=self.mean, std=self.std_dev, per_rep=list(self.values))



def summarize(values):
    """ `RepeatedEstimate` of a non-empty list of values. """
    values = [float(v) for v in values]
    array = numpy.asarray(values)
    std_dev = float(array.std(ddof=1)) if len(values) > 1 else 0.0
    return RepeatedEstimate(float(array.mean()), std_dev, values)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



