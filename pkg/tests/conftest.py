import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import random_corpus  # noqa: E402

from causex import load_diagram  # noqa: E402

CORPUS_SEED = 20100823
CORPUS_SIZE = 500

_acceptance_lines = []


def record_criterion(number, title, ok, detail=""):
    line = f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def diagram():
    return load_diagram()


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(CORPUS_SEED, CORPUS_SIZE)
