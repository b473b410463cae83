import pytest

from wordprint.fingerprint import ComparisonTables, Scheme, Variant
from wordprint.letters import LetterSet, english_default_letters

ENGLISH = english_default_letters().encode()

# letter counts used by the worked "instance" examples
EXAMPLE_LETTERS = {
    Variant.OCCURRENCE: 16,
    Variant.OCCURRENCE_HALVED: 8,
    Variant.COUNT: 8,
    Variant.POSITION: 6,
}


def english_scheme(variant, letters=ENGLISH):
    variant = Variant(variant)
    return Scheme(variant, LetterSet(letters[: EXAMPLE_LETTERS[variant]]))


@pytest.fixture(params=list(Variant), ids=lambda v: v.value)
def scheme(request):
    return english_scheme(request.param)


@pytest.fixture
def tables(scheme):
    return ComparisonTables.build(scheme)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, status: str, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
