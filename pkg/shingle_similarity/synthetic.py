""" Seeded generation of related synthetic documents.

A corpus starts from one source text of random words. Each document is a copy
of the source in which every word is kept, replaced, dropped, or followed by
an inserted word, at rates that grow with the document index. Documents are
therefore pairwise related, and the first ones are closer to the source than
the last ones.

Examples
--------

>>> texts = related_texts(documents=3, size=2000, seed=1)
>>> len(texts)
3
>>> all(1500 < len(text) < 2500 for text in texts)
True
>>> related_texts(documents=3, size=2000, seed=1) == texts
True

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import string
import logging
import pathlib

# Import numpy.
import numpy

# Local imports.
from shingle_similarity.errors import ParameterError
from shingle_similarity.errors import EmissionError
from shingle_similarity.seeding import generator


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Vocabulary size and word lengths.
VOCABULARY_SIZE = 2000
WORD_LENGTHS = (2, 10)

# Words per line of a generated document.
WORDS_PER_LINE = 12

# Edit rates of the first document, and their increase per document.
BASE_EDIT_RATE = 0.05
EDIT_RATE_STEP = 0.05

LETTERS = numpy.array(list(string.ascii_lowercase))


# Vocabulary.
def vocabulary(rng, size=VOCABULARY_SIZE):
    """ Array of `size` random lowercase words. Words of two letters are
        included so that the editing pass has something to drop.
    """
    lengths = rng.integers(WORD_LENGTHS[0], WORD_LENGTHS[1], size=size,
                           endpoint=True)
    return numpy.array([''.join(rng.choice(LETTERS, size=length))
                        for length in lengths])



def _edit(words, lexicon, rate, rng):
    """ Copy of `words` with word-level replacements, deletions and
        insertions, each at probability `rate`.
    """
    edited = []
    for word in words:
        draw = rng.random()
        if draw < rate: continue
        edited.append(rng.choice(lexicon) if draw < 2 * rate else word)
        if rng.random() < rate: edited.append(rng.choice(lexicon))
    return edited



def _layout(words):
    lines = [' '.join(words[i:i+WORDS_PER_LINE])
             for i in range(0, len(words), WORDS_PER_LINE)]
    return '\n'.join(lines) + '\n'



# Related texts.
def related_texts(documents=4, size=100000, seed=0):
    """ List of `documents` related texts of about `size` characters each.

    The output depends only on the arguments.
    """
    if documents < 1:
        raise ParameterError(f'documents must be >= 1, got {documents}')
    if size < 1: raise ParameterError(f'size must be >= 1, got {size}')

    # Draw the vocabulary and the source text.
    rng = generator(seed, 0)
    lexicon = vocabulary(rng)
    mean_length = numpy.mean([len(word) + 1 for word in lexicon])
    source = list(rng.choice(lexicon, size=max(1, int(size / mean_length))))

    # Derive each document from the source.
    texts = []
    for d in range(documents):
        rate = min(0.45, BASE_EDIT_RATE + EDIT_RATE_STEP * d)
        words = _edit(source, lexicon, rate, generator(seed, 1, d))
        texts.append(_layout([str(word) for word in words]))

    # Return the result.
    return texts



# Corpus generation.
def generate_corpus(directory, documents=4, size=100000, seed=0):
    """ Write `related_texts` to `directory` as document_1.txt,
        document_2.txt, and so on.

    Returns
    -------
    paths : list of pathlib.Path
        The files written, in order.

    Raises
    ------
    EmissionError
        If a file cannot be written.
    """
    directory = pathlib.Path(directory)
    paths = []
    for (d, text) in enumerate(related_texts(documents, size, seed), start=1):
        path = directory / f'document_{d}.txt'
        try:
            directory.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
        except OSError as exception:
            raise EmissionError(path, exception.strerror or exception)
        paths.append(path)
    logger.info('wrote %d synthetic documents to %s', len(paths), directory)
    return paths



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



