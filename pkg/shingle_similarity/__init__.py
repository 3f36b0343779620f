""" Shingle-based similarity of text documents.

Documents are edited, cut into positional k-shingles, and compared exactly
(by matching equal shingles one to one) or approximately (by min-hash
signatures or by subsampling). A combinatorial baseline gives the similarity
expected between random texts of the same sizes.

Examples
--------

>>> from shingle_similarity import shingle, multiplicity_oracle
>>> a = shingle('the quick brown fox', 3)
>>> b = shingle('the quick brown cat', 3)
>>> result = multiplicity_oracle(a, b)
>>> (result.kc, result.n_a, result.n_b)
(14, 17, 17)
>>> round(result.similarity, 4)
0.7

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Define the version.
try:
    from importlib.metadata import version, PackageNotFoundError
    __version__ = version('shingle_similarity')
except PackageNotFoundError:
    __version__ = '0.0.0'

# Local imports.
from .errors import ShingleSimilarityError
from .errors import ParameterError
from .errors import IngestionError
from .errors import UsageError
from .errors import EmissionError
from .config import MethodParams
from .ingest import edit_text
from .ingest import load_document
from .ingest import corpus_stats
from .ingest import EditedDocument
from .ingest import Corpus
from .shingling import ShingleSequence
from .shingling import StreamShingler
from .shingling import shingle
from .shingling import stream_shingle
from .exact import MatchResult
from .exact import match_similarity
from .exact import multiplicity_oracle
from .exact import file_match_similarity
from .exact import set_jaccard
from .exact import jaccard_distance
from .exact import value_jaccard
from .baseline import OverlapDistribution
from .baseline import overlap_pmf
from .baseline import expected_similarity
from .baseline import exact_expected_similarity
from .baseline import text_baseline
from .baseline import monte_carlo_expected_similarity
from .representation import RepresentationMatrix
from .representation import build_matrix
from .representation import matrix_similarity
from .estimate import RepeatedEstimate
from .minhash import HashFamily
from .minhash import SignatureMatrix
from .minhash import canonical_encode
from .minhash import eval_hash
from .minhash import signature_fill
from .minhash import signature_min
from .minhash import signature_similarity
from .minhash import rum_estimate
from .minhash import rum_repeated
from .minhash import ru_estimate
from .sampling import SubsampleSpec
from .sampling import subsample
from .sampling import gc_estimate
from .report import SimilarityReport
from .report import pairwise_matrix
from .report import emit


