"""
Test configuration and fixtures for the free braid toolkit
"""
import pytest
from click.testing import CliRunner

from app.core.config import Settings
from app.models.word import GroupContext
from app.services.invariants import InvariantService
from app.services.oracle import RewritingOracle
from app.services.words import parse

from tests.fixtures.samples import EXAMPLE_BRAID


@pytest.fixture
def settings():
    """Settings with small search bounds so failing searches end quickly"""
    return Settings(extra_len=4, max_states=200_000, seed=7)


@pytest.fixture
def oracle(settings):
    return RewritingOracle(settings)


@pytest.fixture
def invariant_service(settings, oracle):
    return InvariantService(settings, oracle)


@pytest.fixture
def contexts():
    """One context of every kind on three strands"""
    return {
        "plain": GroupContext.plain(3),
        "parity": GroupContext.parity(3),
        "dotted": GroupContext.dotted(3),
        "quotient": GroupContext.quotient(3),
    }


@pytest.fixture
def example_braid():
    """The three-strand braid whose deletions are trivial once dots are forgotten"""
    return parse(EXAMPLE_BRAID, GroupContext.plain(3))


@pytest.fixture(scope="module")
def cli_runner():
    """
    Create a CLI runner.
    Share a single runner across the entire test module.
    """
    return CliRunner()
