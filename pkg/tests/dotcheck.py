"""Minimal structural validator for the DOT text we emit."""

import re

_NODE = re.compile(r'^\s*("(?:[^"\\]|\\.)*"|\w+)\s*(\[[^\]]*\])?;$')
_EDGE = re.compile(
    r'^\s*("(?:[^"\\]|\\.)*"|\w+)\s*->\s*("(?:[^"\\]|\\.)*"|\w+)\s*(\[[^\]]*\])?;$'
)


def check_dot(text: str) -> None:
    lines = text.strip().splitlines()
    assert lines[0].strip() == "digraph {"
    assert lines[-1].strip() == "}"
    for line in lines[1:-1]:
        line = line.strip()
        if not line:
            continue
        if line in ("rankdir=LR;",):
            continue
        assert _EDGE.match(line) or _NODE.match(line), f"bad DOT line: {line!r}"
        assert line.count('"') % 2 == 0
    assert text.count("{") == text.count("}")
