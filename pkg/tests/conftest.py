from hypothesis import strategies as st

from nps_tableaux.shapes import Partition
from nps_tableaux.tableaux import Tabloid


@st.composite
def partitions(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    remaining, largest = n, n
    while remaining:
        p = draw(st.integers(min_value=1, max_value=min(remaining, largest)))
        parts.append(p)
        remaining -= p
        largest = p
    return Partition(tuple(parts))


@st.composite
def tabloids(draw, max_n=7, min_n=1):
    shape = draw(partitions(max_n=max_n, min_n=min_n))
    values = draw(st.permutations(range(1, shape.n + 1)))
    rows, pos = [], 0
    for p in shape.parts:
        rows.append(tuple(values[pos:pos + p]))
        pos += p
    return Tabloid(tuple(rows))
