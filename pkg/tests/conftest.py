import pytest

from desattack import parse_model

F1_TEXT = """\
[events]
a o c
g o c
b o c
d uo uc
[compromised]
ins: a
era: g b
ena: b
[plant]
initial: 0
unsafe: 3
0 a 1
1 g 2
1 d 2
2 b 3
[supervisor]
initial: y0
y0 a y1
y1 g y2
y0 d y0
y1 d y1
y2 d y2
"""

# Same closed loop, but nothing compromised: the supervisor keeps the plant
# away from state 3, so this model must verify as robust.
SAFE_TEXT = """\
[events]
a o c
g o c
b o c
d uo uc
[compromised]
[plant]
initial: 0
unsafe: 3
0 a 1
1 g 2
1 d 2
2 b 3
[supervisor]
initial: y0
y0 a y1
y1 g y2
y0 d y0
y1 d y1
y2 d y2
"""


@pytest.fixture(scope="session")
def f1():
    return parse_model(F1_TEXT)


@pytest.fixture(scope="session")
def safe_model():
    return parse_model(SAFE_TEXT)
