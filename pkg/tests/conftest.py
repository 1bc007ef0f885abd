import pytest
from hypothesis import settings

from funcdeg import Group, Polyfract

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SAMPLE_TEXT = """\
vars: 3
codomain: 2,9,7,7
3,0,0 : 1,0,0,0
1,0,0 : 1,0,0,0
0,1,0 : 0,6,0,0
0,0,0 : 0,3,4,5
"""


@pytest.fixture
def sample():
    return Polyfract(
        3,
        Group((2, 9, 7, 7)),
        {
            (3, 0, 0): (1, 0, 0, 0),
            (1, 0, 0): (1, 0, 0, 0),
            (0, 1, 0): (0, 6, 0, 0),
            (0, 0, 0): (0, 3, 4, 5),
        },
    )


@pytest.fixture
def sample_domain():
    return Group((4, 3, 5))
