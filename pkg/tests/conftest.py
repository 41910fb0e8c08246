"""Shared paths and pre-parsed corpora."""

from pathlib import Path

import pytest

from cookbook_compiler.table_ingest import group_recipes, parse_table
from cookbook_compiler.vocabulary import load_vocabulary, resolve_corpus

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def vocab_dir() -> Path:
    return FIXTURES / "vocab"


@pytest.fixture(scope="session")
def photos_dir() -> Path:
    return FIXTURES / "photos"


def load_corpus(table: Path, vocab_path: Path):
    """parse + group + resolve, asserting the fixture stays diagnostics-free."""
    rows, parse_report = parse_table(table.read_bytes())
    cookbooks, group_report = group_recipes(rows)
    vocab, vocab_report = load_vocabulary(vocab_path)
    assert not parse_report.entries
    assert not group_report.entries
    assert not vocab_report.entries
    resolve_corpus(cookbooks, vocab)
    return cookbooks, vocab


@pytest.fixture
def two_recipe_corpus(vocab_dir):
    return load_corpus(FIXTURES / "zia_dina.tsv", vocab_dir)


@pytest.fixture
def annotated_corpus(vocab_dir):
    return load_corpus(FIXTURES / "zia_dina_full.tsv", vocab_dir)
