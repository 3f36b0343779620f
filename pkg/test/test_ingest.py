""" Tests of document loading, editing, and corpus statistics. """

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import standard Python packages.
import random
import unittest

# Import pytest.
import pytest

# Local imports.
from shingle_similarity.errors import IngestionError
from shingle_similarity.errors import ParameterError
from shingle_similarity.ingest import Corpus
from shingle_similarity.ingest import EditedDocument
from shingle_similarity.ingest import count_letters
from shingle_similarity.ingest import corpus_stats
from shingle_similarity.ingest import edit_text
from shingle_similarity.ingest import load_document


@pytest.mark.parametrize('raw, expected', [
    ('', ''),
    ('I am the way', 'the way'),
    ('to be or not', 'not'),
    ('  spaced    out   words  ', 'spaced out words'),
    ('a1b2c3 x9', 'a1b2c3'),
])
def test_edit_text(raw, expected):
    assert edit_text(raw) == expected



def test_edit_text_properties():
    """ Idempotence, token soundness, and letter accounting on random text. """
    rng = random.Random(11)
    alphabet = 'abcXYZé,.;!1 \t'
    for _ in range(300):
        lines = [''.join(rng.choice(alphabet) for _ in range(rng.randrange(40)))
                 for _ in range(rng.randrange(1, 5))]
        raw = '\n'.join(lines)
        edited = edit_text(raw)
        assert edit_text(edited) == edited
        assert all(count_letters(token) >= 3 for token in edited.split())
        assert count_letters(edited) <= count_letters(raw)
        assert len(edited.split('\n')) == len(raw.splitlines()) or not raw



def test_casefold():
    assert edit_text('The WAY', casefold=True) == 'the way'
    assert edit_text('The WAY') == 'The WAY'



def test_casefold_counts_raw_letters():
    """ Letters before editing are counted on the text as read. """
    folded = EditedDocument.from_text('street', 'Straße', casefold=True)
    plain = EditedDocument.from_text('street', 'Straße')
    assert folded.letter_count_before == plain.letter_count_before == 6
    assert folded.lines == ('strasse',)
    assert folded.letter_count_after == 7



def test_corpus_stats_one_line(tmp_path):
    path = tmp_path / 'one.txt'
    path.write_text('abc de\n', encoding='utf-8')
    assert corpus_stats(path) == (1, 5, 3)



def test_corpus_stats_empty(tmp_path):
    path = tmp_path / 'empty.txt'
    path.write_text('', encoding='utf-8')
    assert corpus_stats(path) == (0, 0, 0)



def test_missing_file_names_path(tmp_path):
    path = tmp_path / 'missing.txt'
    with pytest.raises(IngestionError) as info:
        load_document(path)
    assert info.value.path == str(path)
    assert 'missing.txt' in str(info.value)



def test_invalid_utf8(tmp_path):
    path = tmp_path / 'latin.txt'
    path.write_bytes('café noir'.encode('latin-1'))
    with pytest.raises(IngestionError):
        load_document(path)



# Define test case.
class TestEditedDocument(unittest.TestCase):
    """ Test case for edited documents and corpora. """

    def setUp(self):
        self.raw = 'In the beginning was the Word,\nand the Word was with God.\n'
        self.document = EditedDocument.from_text('john', self.raw)

    def test_rows_and_letters(self):
        document = self.document
        self.assertEqual(document.row_count, 2)
        self.assertEqual(document.letter_count_before, count_letters(self.raw))
        self.assertEqual(document.letter_count_after,
                         count_letters(document.text))
        self.assertLessEqual(document.letter_count_after,
                             document.letter_count_before)

    def test_lines(self):
        self.assertEqual(self.document.lines,
                         ('the beginning was the Word,',
                          'and the Word was with God.'))
        self.assertEqual(list(self.document.iter_lines()),
                         list(self.document.lines))

    def test_file_matches_memory(self):
        import tempfile, pathlib
        with tempfile.TemporaryDirectory() as directory:
            path = pathlib.Path(directory) / 'john.txt'
            path.write_text(self.raw, encoding='utf-8')
            document = load_document(path)
            self.assertEqual(document.id, 'john')
            self.assertEqual(document.lines, self.document.lines)
            self.assertEqual(list(document.iter_lines()),
                             list(self.document.lines))

    def test_corpus(self):
        corpus = Corpus()
        corpus.initialize_document('john', text=self.raw)
        self.assertEqual(corpus.stats(),
                         [dict(id='john', rows=2,
                               letters_before=self.document.letter_count_before,
                               letters_after=self.document.letter_count_after)])
        with self.assertRaises(ParameterError):
            corpus.initialize_document('empty')
        corpus.destroy_document('john')
        self.assertEqual(len(corpus), 0)

    def test_corpus_from_directory(self):
        import tempfile, pathlib
        with tempfile.TemporaryDirectory() as directory:
            directory = pathlib.Path(directory)
            for name in ('b', 'a'):
                (directory / f'{name}.txt').write_text(self.raw,
                                                       encoding='utf-8')
            (directory / 'notes.md').write_text('ignored', encoding='utf-8')
            corpus = Corpus.from_directory(directory)
            self.assertEqual(sorted(corpus), ['a', 'b'])
        with self.assertRaises(IngestionError):
            Corpus.from_directory(pathlib.Path(directory) / 'nowhere')



# Main.
if __name__ == '__main__': unittest.main()

