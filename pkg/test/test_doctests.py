""" Run the docstring examples of every module of the package. """

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import doctest.
import doctest

# Import pytest.
import pytest

# Import the package modules.
import shingle_similarity
from shingle_similarity import baseline
from shingle_similarity import cli
from shingle_similarity import config
from shingle_similarity import errors
from shingle_similarity import estimate
from shingle_similarity import exact
from shingle_similarity import ingest
from shingle_similarity import minhash
from shingle_similarity import report
from shingle_similarity import representation
from shingle_similarity import sampling
from shingle_similarity import seeding
from shingle_similarity import shingling
from shingle_similarity import synthetic

# Local fixtures.
from . import fixtures


MODULES = [shingle_similarity, baseline, cli, config, errors, estimate, exact,
           ingest, minhash, report, representation, sampling, seeding,
           shingling, synthetic, fixtures]


@pytest.mark.parametrize('module', MODULES, ids=lambda m: m.__name__)
def test_docstrings(module):
    (failure_count, test_count) = doctest.testmod(module)
    print(f'Tests: {test_count}; Failures: {failure_count}')
    assert failure_count == 0

