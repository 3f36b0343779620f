""" Loading and editing of raw text documents.

Editing drops every whitespace-delimited token that holds fewer than three
alphabetic characters, then rejoins the surviving tokens of each line with a
single space. Line boundaries are preserved, so a document can be consumed
either as a whole or row by row.

Examples
--------

Edit a line of text. Tokens of one or two letters disappear.

>>> edit_text('I am the way')
'the way'
>>> edit_text('to be or not')
'not'
>>> edit_text('')
''

Punctuation attached to a long enough word is kept verbatim, but does not count
as a letter.

>>> edit_text('Verily, I say: go!')
'Verily, say:'

Line boundaries survive editing.

>>> edit_text('In the beginning\\nwas the Word')
'the beginning\\nwas the Word'

Editing is idempotent.

>>> text = 'a bb ccc dddd, e.f.g'
>>> edit_text(edit_text(text)) == edit_text(text)
True

Build a small corpus in memory. A corpus is a dictionary of edited documents,
keyed by document identifier.

>>> corpus = Corpus()
>>> document = corpus.initialize_document('abc', text='abc de')
>>> list(corpus)
['abc']
>>> document.lines
('abc',)
>>> corpus_stats(document)
(1, 5, 3)
>>> document.as_stats()
{'id': 'abc', 'rows': 1, 'letters_before': 5, 'letters_after': 3}

Remove the document.

>>> corpus.destroy_document('abc')
>>> corpus
{}

"""

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import logging
import pathlib
import dataclasses

# Local imports.
from shingle_similarity.errors import IngestionError
from shingle_similarity.errors import ParameterError


# Initialize a module logger.
logger = logging.getLogger(__name__)

# Minimum number of alphabetic characters for a token to survive editing.
MINIMUM_TOKEN_LETTERS = 3


# Letter counting.
def count_letters(text):
    """ Number of alphabetic characters (Unicode letter categories) in `text`.

    >>> count_letters('abc de, 12!')
    5
    >>> count_letters('éçà')
    3
    """
    return sum(1 for character in text if character.isalpha())



# Line editing.
def edit_line(line, casefold=False):
    """ Edit one line: drop short tokens and rejoin the rest with one space.

    Arguments
    ---------
    line : str
        A single line of text (no line breaks).
    casefold : bool
        Case-fold the line before filtering. Off by default.
    """
    line = line.casefold() if casefold else line
    tokens = (t for t in line.split()
                if count_letters(t) >= MINIMUM_TOKEN_LETTERS)
    return ' '.join(tokens)



# Text editing.
def edit_text(raw, casefold=False):
    """ Apply the editing pass to each line of `raw`, preserving line
        boundaries.
    """
    return '\n'.join(edit_line(line, casefold) for line in raw.splitlines())



# Raw line reader.
def read_lines(path):
    """ Generator of the raw lines of a UTF-8 text file, without line breaks.

    Raises
    ------
    IngestionError
        If the file cannot be opened, read, or decoded as UTF-8.
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            for row in f:
                # Split on every line boundary that `str.splitlines` knows,
                # so that files and in-memory text agree on the row count.
                yield from row.splitlines()
    except UnicodeDecodeError as error:
        raise IngestionError(path, f'not valid UTF-8 ({error.reason})') \
          from error
    except OSError as error:
        raise IngestionError(path, error.strerror or str(error)) from error



# Edited line reader.
def iter_edited_lines(path, casefold=False):
    """ Generator of the edited lines of a text file, read one row at a time.
    """
    for line in read_lines(path):
        yield edit_line(line, casefold)



# Edited document.
@dataclasses.dataclass(frozen=True)
class EditedDocument:
    """ A document after the editing pass.

    Attributes
    ----------
    id : str
        Document identifier (the file stem, for files).
    lines : tuple of str
        Edited lines, in order; one entry per source line.
    letter_count_before : int
        Alphabetic characters before editing.
    letter_count_after : int
        Alphabetic characters after editing.
    path : str or None
        Source file, if the document was read from disk.
    casefold : bool
        Whether the document was case-folded during editing.
    """
    id: str
    lines: tuple
    letter_count_before: int
    letter_count_after: int
    path: str = None
    casefold: bool = False

    @property
    def row_count(self):
        """ Number of lines of the source. """
        return len(self.lines)

    @property
    def text(self):
        """ The edited text, with lines concatenated without a separator. """
        return ''.join(self.lines)

    def iter_lines(self):
        """ Row-by-row access to the edited lines.

        Documents read from disk are streamed from the file again; documents
        built in memory replay their stored lines.
        """
        if self.path is None: return iter(self.lines)
        return iter_edited_lines(self.path, self.casefold)

    def as_stats(self):
        """ Corpus statistics as a JSON-ready dictionary. """
        return dict(id=self.id,
                    rows=self.row_count,
                    letters_before=self.letter_count_before,
                    letters_after=self.letter_count_after)

    @classmethod
    def from_lines(cls, doc_id, raw_lines, casefold=False, path=None):
        """ Edit raw lines (without line breaks) into a document. """

        # Initialize counters.
        lines = []
        before = after = 0

        # Edit each line, counting letters on the way.
        for raw in raw_lines:
            before += count_letters(raw)
            line = edit_line(raw, casefold)
            after += count_letters(line)
            lines.append(line)

        # Return the result.
        return cls(id=doc_id, lines=tuple(lines), letter_count_before=before,
                   letter_count_after=after, path=path, casefold=casefold)

    @classmethod
    def from_text(cls, doc_id, raw, casefold=False):
        """ Edit an in-memory text into a document. """
        return cls.from_lines(doc_id, raw.splitlines(), casefold=casefold)



# Document loader.
def load_document(path, casefold=False, doc_id=None):
    """ Read and edit a UTF-8 text file.

    Arguments
    ---------
    path : str or pathlib.Path
        File to read.
    casefold : bool
        Case-fold the text before editing.
    doc_id : str, optional
        Identifier of the document; defaults to the file stem.

    Raises
    ------
    IngestionError
        If the file cannot be read or decoded.
    """

    # Initialize the document identifier.
    path = pathlib.Path(path)
    doc_id = path.stem if doc_id is None else doc_id

    # Read and edit the document.
    document = EditedDocument.from_lines(doc_id, read_lines(path),
                                         casefold=casefold, path=str(path))

    # Log the corpus statistics.
    logger.info('ingested %s: %d rows, %d letters before editing, '
                '%d after', doc_id, document.row_count,
                document.letter_count_before, document.letter_count_after)

    # Return the result.
    return document



# Corpus statistics.
def corpus_stats(document):
    """ The triple (row_count, letter_count_before, letter_count_after).

    Arguments
    ---------
    document : EditedDocument or str or pathlib.Path
        An edited document, or the path of a file to load.
    """
    if not isinstance(document, EditedDocument):
        document = load_document(document)
    return (document.row_count,
            document.letter_count_before,
            document.letter_count_after)



# Corpus class.
class Corpus(dict):
    """ A collection of edited documents, keyed by identifier. """

    document_type = EditedDocument

    def __init__(self, *args, casefold=False, **kwargs):

        # Record the editing options shared by all documents.
        self.casefold = casefold

        # Invoke the superclass constructor.
        super().__init__(*args, **kwargs)

    def initialize_document(self, key, text=None, path=None):
        """ Add a document, either from an in-memory text or from a file. """

        # Exactly one source is expected.
        if (text is None) == (path is None):
            raise ParameterError('exactly one of text or path is required')

        # Edit the document.
        if path is None:
            document = self.document_type.from_text(key, text, self.casefold)
        else:
            document = load_document(path, self.casefold, doc_id=key)

        # Store and return the document.
        self[key] = document
        return document

    def destroy_document(self, key):
        """ Remove a document from the corpus. """
        del self[key]

    def stats(self):
        """ Statistics of every document, sorted by identifier. """
        return [self[key].as_stats() for key in sorted(self)]

    @classmethod
    def from_directory(cls, directory, pattern='*.txt', casefold=False):
        """ Load every file of `directory` that matches `pattern`.

        Documents are keyed by file stem and loaded in sorted order.

        Raises
        ------
        IngestionError
            If the directory cannot be listed or a file cannot be read.
        """

        # Initialize the corpus.
        corpus = cls(casefold=casefold)

        # List the candidate files.
        directory = pathlib.Path(directory)
        if not directory.is_dir():
            raise IngestionError(directory, 'not a directory')
        paths = sorted(p for p in directory.glob(pattern) if p.is_file())

        # Load each document.
        for path in paths: corpus.initialize_document(path.stem, path=path)

        # Return the result.
        return corpus



# Main.
if __name__ == '__main__':
    import doctest
    doctest.testmod()



