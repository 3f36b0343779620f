""" Command-line interface.

Usage examples:

`shingle-sim stats a.txt b.txt`

`shingle-sim sim exact a.txt b.txt -k 3`

`shingle-sim sim rum a.txt b.txt -k 3 -p 20 --reps 50 --seed 1`

`shingle-sim baseline -n 200 -k 100 -m 100 --mc 10000`

`shingle-sim matrix corpus/ --method gc --ng 10000 --format csv -o out.csv`

Exit status is 0 on success, 2 on a usage or parameter error, and 1 when a
file cannot be read or written.

Examples
--------

>>> main(['baseline', '-n', '4', '-k', '2', '-m', '2'])
{
  "expected_sim": 0.3888888888888889,
  "method": "exact",
  "pmf_head": [
    [
      0,
      0.16666666666666666
    ],
    [
      1,
      0.6666666666666666
    ],
    [
      2,
      0.16666666666666666
    ]
  ]
}
0
>>> main(['baseline', '-n', '4', '-k', '5', '-m', '2'])
2

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import sys
import json
import time
import logging
import argparse

# Local imports.
from shingle_similarity import __version__
from shingle_similarity import config
from shingle_similarity.errors import UsageError
from shingle_similarity.errors import ParameterError
from shingle_similarity.errors import IngestionError
from shingle_similarity.errors import EmissionError
from shingle_similarity.ingest import load_document
from shingle_similarity.shingling import shingle
from shingle_similarity.shingling import iter_stream_shingles
from shingle_similarity.exact import match_similarity
from shingle_similarity.exact import multiplicity_oracle
from shingle_similarity.exact import file_match_similarity
from shingle_similarity.exact import value_jaccard
from shingle_similarity.baseline import overlap_pmf
from shingle_similarity.baseline import expected_similarity
from shingle_similarity.baseline import baseline_table
from shingle_similarity.baseline import monte_carlo_expected_similarity
from shingle_similarity.minhash import rum_repeated
from shingle_similarity.minhash import rum_sweep
from shingle_similarity.sampling import SubsampleSpec
from shingle_similarity.sampling import gc_estimate
from shingle_similarity.report import FORMATS
from shingle_similarity.report import emit
from shingle_similarity.report import pairwise_matrix
from shingle_similarity.synthetic import generate_corpus


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Program name used in messages.
PROG = 'shingle-sim'

# Exit codes.
EXIT_SUCCESS = 0
EXIT_IO_ERROR = 1
EXIT_USAGE_ERROR = 2

# Number of overlap probabilities reported by the baseline command.
PMF_HEAD = 10


def _print_json(document):
    print(json.dumps(document, indent=2))



def _elapsed_ms(start):
    return round((time.perf_counter() - start) * 1000.0, 4)



# Subcommand handlers.
def run_stats(args):
    """ One JSON object per document: id, rows, letters before and after. """
    for path in args.files:
        document = load_document(path, casefold=args.casefold)
        print(json.dumps(document.as_stats()))



def run_shingle(args):
    """ One `rank<TAB>value` line per shingle of a document. """
    document = load_document(args.file, casefold=args.casefold)
    for (rank, value) in iter_stream_shingles(document.iter_lines(), args.k):
        print(f'{rank}\t{value}')



def _load_pair(args):
    return (load_document(args.file_a, casefold=args.casefold),
            load_document(args.file_b, casefold=args.casefold))



def _shingle_pair(args):
    (document_a, document_b) = _load_pair(args)
    return (shingle(document_a.text, args.k), shingle(document_b.text, args.k))



def run_sim_exact(args):
    """ Exact similarity of two documents. """
    (a, b) = _shingle_pair(args)
    start = time.perf_counter()
    engine = match_similarity if args.engine == 'matcher' else multiplicity_oracle
    result = engine(a, b)
    _print_json(dict(sim=result.similarity, kc=result.kc, n_a=result.n_a,
                     n_b=result.n_b, elapsed_ms=_elapsed_ms(start)))



def run_sim_file(args):
    """ Exact similarity of two documents, streamed row by row. """
    (document_a, document_b) = _load_pair(args)
    start = time.perf_counter()
    result = file_match_similarity(document_a.iter_lines(),
                                   document_b.iter_lines, args.k)
    _print_json(dict(sim=result.similarity, kc=result.kc, n_a=result.n_a,
                     n_b=result.n_b, elapsed_ms=_elapsed_ms(start)))



def _estimate_record(estimate, start=None):
    record = dict(mean=estimate.mean, std=estimate.std_dev,
                  per_rep=estimate.values)
    if not estimate.std_defined: record['std_defined'] = False
    if start is not None: record['elapsed_ms'] = _elapsed_ms(start)
    return record



def run_sim_rum(args):
    """ Min-hash estimate over the combined shingle collection. """
    (a, b) = _shingle_pair(args)
    start = time.perf_counter()

    # Sweep the hash counts of the protocol grid.
    if args.sweep:
        sweep = rum_sweep(a, b, reps=args.reps, seed=args.seed)
        record = {str(p): _estimate_record(estimate)
                  for (p, estimate) in sweep.items()}
        record['elapsed_ms'] = _elapsed_ms(start)

    # Estimate with a single hash count.
    else:
        estimate = rum_repeated(a, b, args.p, reps=args.reps, seed=args.seed)
        record = _estimate_record(estimate, start)

    # Report the value-set similarity the estimator targets.
    record['value_jaccard'] = value_jaccard(a, b)
    _print_json(record)



def run_sim_gc(args):
    """ Subsampling estimate of the exact similarity. """
    (a, b) = _shingle_pair(args)
    start = time.perf_counter()
    spec = SubsampleSpec(ng=args.ng, reps=args.reps, seed=args.seed)
    _print_json(_estimate_record(gc_estimate(a, b, spec), start))



def run_baseline(args):
    """ Expected similarity of random subsets, exact or by simulation. """

    # Tabulate equal-size texts.
    if args.table:
        _print_json([dict(N=size, expected_sim=value)
                     for (size, value) in baseline_table(args.table)])
        return

    # Validate the sizes.
    if None in (args.n, args.k, args.m):
        raise UsageError('baseline requires -n, -k and -m (or --table)')

    # Compute the overlap law and the expectation.
    distribution = overlap_pmf(args.n, args.k, args.m)
    (low, high) = distribution.support
    pmf_head = [[j, distribution.pmf[j]]
                for j in range(low, min(high, low + PMF_HEAD - 1) + 1)]
    record = dict(expected_sim=expected_similarity(args.n, args.k, args.m),
                  method='exact', pmf_head=pmf_head)

    # Add a Monte Carlo estimate, if requested.
    if args.mc:
        estimate = monte_carlo_expected_similarity(
            args.n, args.k, args.m, args.mc, seed=args.seed,
            shards=args.workers, workers=args.workers)
        record.update(method='exact+monte-carlo', mc_estimate=estimate.estimate,
                      mc_standard_error=estimate.standard_error)

    # Print the result.
    _print_json(record)



def run_matrix(args):
    """ Pairwise similarity reports over a directory of documents. """
    params = config.MethodParams.for_method(
        args.method, k=args.k, ng=args.ng, p=args.p, reps=args.reps,
        seed=args.seed, engine=args.engine, casefold=args.casefold)
    reports = pairwise_matrix(args.directory, args.method, params,
                              workers=args.workers, progress=args.progress)
    emit(reports, args.format, args.output)



def run_synth(args):
    """ Write a synthetic corpus of related documents. """
    for path in generate_corpus(args.directory, documents=args.documents,
                                size=args.size, seed=args.seed):
        print(path)



# Parser.
def _positive(text):
    """ argparse type for integers >= 1. """
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid integer: {text!r}')
    if value < 1: raise argparse.ArgumentTypeError(f'must be >= 1: {text}')
    return value



def build_parser():
    """ Argument parser with one subcommand per operation. """

    # Initialize the parser.
    parser = argparse.ArgumentParser(
        prog=PROG,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        description='Shingle-based similarity of text documents.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log informational (-v) or debugging (-vv) '
                             'messages to stderr')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    # Options shared by commands that read documents.
    reading = argparse.ArgumentParser(add_help=False)
    reading.add_argument('--casefold', action='store_true',
                         help='case-fold documents before editing')
    shingling = argparse.ArgumentParser(add_help=False)
    shingling.add_argument('-k', type=_positive, default=config.DEFAULT_K,
                           help='shingle length, in characters')
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument('--seed', type=int, default=config.DEFAULT_SEED,
                        help='seed of the random generators')
    pair = argparse.ArgumentParser(add_help=False,
                                   parents=[reading, shingling])
    pair.add_argument('file_a', help='first document')
    pair.add_argument('file_b', help='second document')

    # stats
    command = commands.add_parser('stats', parents=[reading],
                                  help='corpus statistics of documents')
    command.add_argument('files', nargs='+', help='documents')
    command.set_defaults(handler=run_stats)

    # shingle
    command = commands.add_parser('shingle', parents=[reading, shingling],
                                  help='list the shingles of a document')
    command.add_argument('file', help='document')
    command.set_defaults(handler=run_shingle)

    # sim
    command = commands.add_parser('sim', help='similarity of two documents')
    methods = command.add_subparsers(dest='method', metavar='method')
    methods.required = True

    method = methods.add_parser('exact', parents=[pair],
                                help='exact similarity')
    method.add_argument('--engine', choices=config.ENGINES, default='oracle',
                        help='multiplicity counts or the quadratic matcher')
    method.set_defaults(handler=run_sim_exact)

    method = methods.add_parser('file', parents=[pair],
                                help='exact similarity, streamed by row')
    method.set_defaults(handler=run_sim_file)

    method = methods.add_parser('rum', parents=[pair, seeded],
                                help='min-hash estimate')
    method.add_argument('-p', type=_positive, default=config.DEFAULT_RUM_P,
                        help='number of hash functions')
    method.add_argument('--reps', type=_positive,
                        default=config.DEFAULT_RUM_REPS,
                        help='number of repetitions')
    method.add_argument('--sweep', action='store_true',
                        help=f'estimate for every p in {config.RUM_P_GRID}')
    method.set_defaults(handler=run_sim_rum)

    method = methods.add_parser('gc', parents=[pair, seeded],
                                help='subsampling estimate')
    method.add_argument('--ng', type=_positive, default=config.DEFAULT_NG,
                        help='subsample size per document')
    method.add_argument('--reps', type=_positive,
                        default=config.DEFAULT_GC_REPS,
                        help='number of repetitions')
    method.set_defaults(handler=run_sim_gc)

    # baseline
    command = commands.add_parser('baseline', parents=[seeded],
                                  help='similarity expected by chance')
    command.add_argument('-n', type=int, help='universe size')
    command.add_argument('-k', type=int, help='size of the first subset')
    command.add_argument('-m', type=int, help='size of the second subset')
    command.add_argument('--mc', type=_positive, metavar='TRIALS',
                         help='add a Monte Carlo estimate')
    command.add_argument('--workers', type=_positive, default=1,
                         help='Monte Carlo worker processes')
    command.add_argument('--table', type=_positive, nargs='+', metavar='N',
                         help='tabulate texts of equal size N')
    command.set_defaults(handler=run_baseline)

    # matrix
    command = commands.add_parser('matrix', parents=[reading, seeded],
                                  help='pairwise reports over a directory')
    command.add_argument('directory', help='directory of .txt documents')
    command.add_argument('--method', choices=tuple(config.METHODS),
                         default='exact', help='comparison method')
    command.add_argument('-k', type=_positive, default=config.DEFAULT_K,
                         help='shingle length, in characters')
    command.add_argument('--ng', type=_positive, default=config.DEFAULT_NG,
                         help='subsample size per document (gc)')
    command.add_argument('-p', type=_positive, default=config.DEFAULT_RUM_P,
                         help='number of hash functions (rum)')
    command.add_argument('--reps', type=_positive,
                         help='repetitions (default 10 for gc, 50 for rum)')
    command.add_argument('--engine', choices=config.ENGINES, default='oracle',
                         help='exact engine')
    command.add_argument('--format', choices=FORMATS, default='json',
                         help='output format')
    command.add_argument('-o', '--output', default='-',
                         help='output file ("-" for stdout)')
    command.add_argument('--workers', type=_positive,
                         help='worker processes (default: CPU count, capped '
                              f'by {config.WORKERS_ENVIRONMENT_VARIABLE})')
    command.add_argument('--progress', action='store_true',
                         help='show a progress bar on stderr')
    command.set_defaults(handler=run_matrix)

    # synth
    command = commands.add_parser('synth', parents=[seeded],
                                  help='write a synthetic corpus')
    command.add_argument('directory', help='output directory')
    command.add_argument('--documents', type=_positive, default=4,
                         help='number of documents')
    command.add_argument('--size', type=_positive, default=100000,
                         help='approximate characters per document')
    command.set_defaults(handler=run_synth)

    # Return the result.
    return parser



# Entry point.
def main(argv=None):
    """ Run the command line and return the exit status. """

    # Parse the arguments; argparse exits with status 2 on its own errors.
    args = build_parser().parse_args(argv)
    config.configure_logging(args.verbose)

    # Run the command, mapping errors to exit codes.
    try:
        args.handler(args)
    except (ParameterError, UsageError) as error:
        print(f'{PROG}: error: {error}', file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (IngestionError, EmissionError) as error:
        print(f'{PROG}: error: {error}', file=sys.stderr)
        return EXIT_IO_ERROR

    # Return the result.
    return EXIT_SUCCESS



# Main.
if __name__ == '__main__':
    sys.exit(main())



