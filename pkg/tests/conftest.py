from fractions import Fraction

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from radon_partition.errors import InvalidInputError
from radon_partition.geometry import PointSet, is_general_position

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))


@st.composite
def general_position_sets(draw, min_dim=1, max_dim=4):
    d = draw(st.integers(min_dim, max_dim))
    pts = draw(st.lists(st.lists(rationals, min_size=d, max_size=d), min_size=d + 2, max_size=d + 2))
    try:
        ps = PointSet(pts, dim=d)
    except InvalidInputError:
        assume(False)
    assume(is_general_position(ps))
    return ps


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split('criterion ')[1].split(':')[0])):
            terminalreporter.write_line(line)
