""" Tests of configuration, seeding, and error types. """

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import pickle

# Import pytest.
import pytest

# Local imports.
from shingle_similarity import config
from shingle_similarity.errors import EmissionError
from shingle_similarity.errors import IngestionError
from shingle_similarity.errors import ParameterError
from shingle_similarity.seeding import derive_seed


def test_method_defaults():
    assert config.MethodParams.for_method('gc').reps == 10
    assert config.MethodParams.for_method('rum').reps == 50
    params = config.MethodParams.for_method('rum', reps=None, p=5)
    assert (params.reps, params.p, params.k) == (50, 5, 3)



@pytest.mark.parametrize('kwargs', [dict(k=0), dict(ng=0), dict(reps=0),
                                    dict(p=0), dict(engine='fast')])
def test_invalid_parameters(kwargs):
    with pytest.raises(ParameterError):
        config.MethodParams(**kwargs)



def test_worker_count():
    assert config.worker_count(4, environ={}) == 4
    assert config.worker_count(4, environ={'SHINGLE_SIM_WORKERS': '2'}) == 2
    assert config.worker_count(1, environ={'SHINGLE_SIM_WORKERS': '8'}) == 1
    assert config.worker_count(3, environ={'SHINGLE_SIM_WORKERS': 'x'}) == 3
    assert config.worker_count(0, environ={}) == 1
    assert config.worker_count(environ={}) >= 1



def test_derive_seed():
    assert derive_seed(0, 1) == derive_seed(0, 1)
    assert derive_seed(0, 1) != derive_seed(0, 2)
    assert derive_seed(0, 0, 1) != derive_seed(0, 1, 0)
    assert 0 <= derive_seed(123, 4, 5) < 2**63



@pytest.mark.parametrize('error_type', [IngestionError, EmissionError])
def test_path_errors_pickle(error_type):
    error = pickle.loads(pickle.dumps(error_type('a.txt', 'denied')))
    assert isinstance(error, OSError)
    assert (error.path, str(error)) == ('a.txt', 'a.txt: denied')

