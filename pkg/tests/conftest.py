import pytest

from colored_motzkin import parse_path, parse_word

# Reference pairs for d=1 and d=2, and a 25-step d=3 path whose critical
# and exceeding sets are checked by hand.
D1_PATH = "U1 U1 L D1 L U1 D1 D1 U1 U1 D1 D1"
D1_WORD = "1 1 2 3 2 1 3 2 1 1 2 2"
D2_PATH = "U1 U1 U2 D2 U2 U2 L D2 D2 U2 U2 D2 D1 D2 D1"
D2_WORD = "1 1 2 3 2 1 3 4 2 1 1 2 5 2 4"
D3_PATH = "U1 U1 U2 U2 U3 L D2 D3 U3 U2 D3 D2 U2 U3 U3 U1 D3 D1 D2 U2 D2 D3 D1 D2 D1"


@pytest.fixture
def d1_pair():
    return parse_path(D1_PATH), parse_word(D1_WORD)


@pytest.fixture
def d2_pair():
    return parse_path(D2_PATH), parse_word(D2_WORD)


@pytest.fixture
def d3_path():
    return parse_path(D3_PATH)


@pytest.fixture
def d3_after_first(d3_path):
    """The working sequence after the first iteration on the d=3 path."""
    from colored_motzkin import phi_trace

    return phi_trace(d3_path, 3).records[0].after


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
