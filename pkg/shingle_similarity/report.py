""" Pairwise similarity reports over a corpus of documents.

A report records one comparison of two documents: the method and its
parameters, the similarity value and its dispersion, the matched-shingle
count of exact methods, the wall time, and the similarity expected between
random texts of the same sizes. A pair is flagged significant when its value
exceeds that baseline.

Examples
--------

Compare two in-memory documents exactly.

>>> from shingle_similarity.ingest import EditedDocument
>>> a = EditedDocument.from_text('a', 'the quick brown fox')
>>> b = EditedDocument.from_text('b', 'the quick brown fox')
>>> report = compare_pair(a, b, 'exact', MethodParams(k=3))
>>> (report.method, report.value, report.kc, report.significant)
('exact', 1.0, 17, True)

Reports are emitted as CSV or JSON.

>>> import io
>>> stream = io.StringIO()
>>> emit([], 'csv', stream)
>>> stream.getvalue().strip()
'doc_a,doc_b,method,k,value,std_dev,kc,elapsed_ms,baseline,significant'
>>> stream = io.StringIO()
>>> emit([], 'json', stream)
>>> stream.getvalue().strip()
'[]'

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import io
import csv
import sys
import json
import time
import logging
import functools
import itertools
import contextlib
import dataclasses
import concurrent.futures

# Import tqdm.
from tqdm import tqdm

# Local imports.
from shingle_similarity.config import METHODS
from shingle_similarity.config import MethodParams
from shingle_similarity.config import worker_count
from shingle_similarity.errors import UsageError
from shingle_similarity.errors import EmissionError
from shingle_similarity.ingest import Corpus
from shingle_similarity.exact import match_similarity
from shingle_similarity.exact import multiplicity_oracle
from shingle_similarity.exact import file_match_similarity
from shingle_similarity.baseline import text_baseline
from shingle_similarity.minhash import rum_repeated
from shingle_similarity.sampling import SubsampleSpec
from shingle_similarity.sampling import gc_estimate
from shingle_similarity.shingling import shingle
from shingle_similarity.shingling import stream_shingle


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Supported output formats.
FORMATS = ('json', 'csv')

# CSV columns, in order.
CSV_FIELDS = ('doc_a', 'doc_b', 'method', 'k', 'value', 'std_dev', 'kc',
              'elapsed_ms', 'baseline', 'significant')

# Decimal places of emitted numbers.
DECIMALS = 4

# Parameters that each method records in its reports.
METHOD_PARAMETERS = {'exact': ('k', 'engine'),
                     'stream': ('k', 'engine'),
                     'file': ('k',),
                     'gc': ('k', 'ng', 'reps', 'seed'),
                     'rum': ('k', 'p', 'reps', 'seed')}


# Similarity report.
@dataclasses.dataclass(frozen=True)
class SimilarityReport:
    """ Outcome of one comparison of two documents.

    Attributes
    ----------
    doc_a, doc_b : str
        Document identifiers, with doc_a < doc_b.
    method : str
        One of exact, exact-stream, exact-file, gc or rum.
    params : dict
        Method parameters (k, and ng, p, reps, seed where relevant).
    value : float
        Similarity, in [0, 1].
    std_dev : float
        Sample standard deviation over repetitions; 0 for exact methods.
    kc : int or None
        Matched-shingle count (exact methods only).
    elapsed_ms : float
        Wall time of the comparison, in milliseconds.
    baseline : float
        Expected similarity of random texts of the same sizes.
    significant : bool
        Whether `value` exceeds `baseline`.
    """
    doc_a: str
    doc_b: str
    method: str
    params: dict
    value: float
    std_dev: float
    kc: int
    elapsed_ms: float
    baseline: float
    significant: bool

    def as_record(self):
        """ JSON-ready dictionary, with numbers rounded to four decimals. """
        return dict(doc_a=self.doc_a,
                    doc_b=self.doc_b,
                    method=self.method,
                    params=dict(self.params),
                    value=round(self.value, DECIMALS),
                    std_dev=round(self.std_dev, DECIMALS),
                    kc=self.kc,
                    elapsed_ms=round(self.elapsed_ms, DECIMALS),
                    baseline=round(self.baseline, DECIMALS),
                    significant=self.significant)

    def as_row(self):
        """ CSV row, in the order of `CSV_FIELDS`. """
        number = f'{{:.{DECIMALS}f}}'.format
        return [self.doc_a,
                self.doc_b,
                self.method,
                self.params['k'],
                number(self.value),
                number(self.std_dev),
                '' if self.kc is None else self.kc,
                number(self.elapsed_ms),
                number(self.baseline),
                'true' if self.significant else 'false']



# Baseline cache.
@functools.lru_cache(maxsize=None)
def _baseline(n_a, n_b):
    return text_baseline(n_a, n_b)



def check_method(method):
    """ Raise a `UsageError` unless `method` is a known comparison method. """
    if method not in METHODS:
        raise UsageError(f'unknown method {method!r}; expected one of '
                         f'{", ".join(METHODS)}')
    return method



# Pair comparison.
def compare_pair(document_a, document_b, method, params=None):
    """ Compare two edited documents with one method.

    Arguments
    ---------
    document_a, document_b : EditedDocument
        Documents to compare.
    method : str
        One of the keys of `config.METHODS`: exact, stream, file, gc or rum.
    params : MethodParams, optional
        Method parameters; defaults suit the method.

    Returns
    -------
    report : SimilarityReport
    """
    check_method(method)
    params = MethodParams.for_method(method) if params is None else params
    (k, std_dev, kc) = (params.k, 0.0, None)

    # Time the comparison, shingling included.
    start = time.perf_counter()

    # The by-file method streams both documents row by row.
    if method == 'file':
        result = file_match_similarity(document_a.iter_lines(),
                                       document_b.iter_lines, k)
        (value, kc, n_a, n_b) = (result.similarity, result.kc,
                                 result.n_a, result.n_b)

    # Other methods work on whole shingle sequences.
    else:
        if method == 'stream':
            a = stream_shingle(document_a.iter_lines(), k)
            b = stream_shingle(document_b.iter_lines(), k)
        else:
            (a, b) = (shingle(document_a.text, k), shingle(document_b.text, k))
        (n_a, n_b) = (len(a), len(b))

        if method in ('exact', 'stream'):
            engine = match_similarity if params.engine == 'matcher' \
                                      else multiplicity_oracle
            result = engine(a, b)
            (value, kc) = (result.similarity, result.kc)
        elif method == 'gc':
            spec = SubsampleSpec(ng=params.ng, reps=params.reps,
                                 seed=params.seed)
            (value, std_dev, _) = gc_estimate(a, b, spec)
        else:
            (value, std_dev, _) = rum_repeated(a, b, params.p,
                                               reps=params.reps,
                                               seed=params.seed)

    elapsed_ms = (time.perf_counter() - start) * 1000.0

    # Compare with the random baseline.
    baseline = _baseline(n_a, n_b)

    # Return the result.
    recorded = {name: getattr(params, name) for name in METHOD_PARAMETERS[method]}
    logger.debug('%s / %s (%s): %.4f in %.1f ms', document_a.id, document_b.id,
                 method, value, elapsed_ms)
    return SimilarityReport(doc_a=document_a.id,
                            doc_b=document_b.id,
                            method=METHODS[method],
                            params=recorded,
                            value=value,
                            std_dev=std_dev,
                            kc=kc,
                            elapsed_ms=elapsed_ms,
                            baseline=baseline,
                            significant=value > baseline)



def _compare_task(task):
    return compare_pair(*task)



# Corpus driver.
def pairwise_matrix(corpus_dir, method, params=None, workers=None,
                    progress=False, pattern='*.txt'):
    """ Compare every unordered pair of documents of a directory.

    Every file matching `pattern` is read and edited once. Pairs are compared
    inline with a single worker and in a process pool otherwise; the worker
    count is resolved by `config.worker_count`. The reports are sorted by
    (doc_a, doc_b) whatever the worker count.

    Raises
    ------
    UsageError
        If the method is unknown or the directory holds fewer than two
        documents.
    IngestionError
        If a document cannot be read.
    """
    check_method(method)
    params = MethodParams.for_method(method) if params is None else params

    # Ingest the corpus.
    corpus = Corpus.from_directory(corpus_dir, pattern=pattern,
                                   casefold=params.casefold)
    if len(corpus) < 2:
        raise UsageError(f'{corpus_dir}: at least two documents are required, '
                         f'found {len(corpus)}')

    # Enumerate the pairs.
    ids = sorted(corpus)
    tasks = [(corpus[id_a], corpus[id_b], method, params)
             for (id_a, id_b) in itertools.combinations(ids, 2)]
    workers = min(worker_count(workers), len(tasks))
    logger.info('comparing %d pairs of %d documents with %s on %d worker(s)',
                len(tasks), len(ids), method, workers)

    # Compare the pairs.
    bar = functools.partial(tqdm, total=len(tasks), unit='pairs',
                            dynamic_ncols=True, disable=not progress)
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(workers) as executor:
            reports = list(bar(executor.map(_compare_task, tasks)))
    else:
        reports = [compare_pair(*task) for task in bar(tasks)]

    # Return the result.
    return sorted(reports, key=lambda report: (report.doc_a, report.doc_b))



# Emission.
def render(reports, format='json'):
    """ The reports as JSON or CSV text. """
    if format not in FORMATS:
        raise UsageError(f'unknown format {format!r}; expected json or csv')
    buffer = io.StringIO()
    if format == 'json':
        json.dump([report.as_record() for report in reports], buffer, indent=2)
        buffer.write('\n')
    else:
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_FIELDS)
        writer.writerows(report.as_row() for report in reports)
    return buffer.getvalue()



@contextlib.contextmanager
def _open_destination(destination):
    """ Text stream for `destination`: a path, a file-like object, or None
        or '-' for stdout.
    """
    if destination is None or destination == '-':
        yield sys.stdout
    elif hasattr(destination, 'write'):
        yield destination
    else:
        try:
            f = open(destination, 'w', encoding='utf-8', newline='')
        except OSError as exception:
            raise EmissionError(destination, exception.strerror or exception)
        with f: yield f



def emit(reports, format='json', destination=None):
    """ Write reports as JSON or CSV.

    JSON is an array of report objects; CSV has the header
    `doc_a,doc_b,method,k,value,std_dev,kc,elapsed_ms,baseline,significant`.
    Numbers carry four decimal places. Field and row order are fixed.

    Raises
    ------
    EmissionError
        If the destination cannot be written.
    """
    text = render(reports, format)
    try:
        with _open_destination(destination) as f: f.write(text)
    except EmissionError:
        raise
    except OSError as exception:
        raise EmissionError(destination, exception.strerror or exception)



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



