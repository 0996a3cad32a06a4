from __future__ import annotations

from hypothesis import strategies as st

from domlab import graph as gc
from domlab.graph import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = [p for p in pairs if draw(st.booleans())]
    g = Graph(n, chosen)
    if connected:
        # chain the components together so the draw stays shrinkable
        comps = [min(c) for c in gc.components(g)]
        g = Graph(n, chosen + list(zip(comps, comps[1:])))
    return g
