"""Hypothesis strategies for small uniform families"""

from itertools import combinations

from hypothesis import strategies as st

from family.models import SetFamily


@st.composite
def families(draw, max_n: int = 8, max_s: int = 3, max_size: int = 10, min_size: int = 0):
    """(family, u) pairs with 1 <= u <= s"""
    s = draw(st.integers(min_value=1, max_value=max_s))
    n = draw(st.integers(min_value=s, max_value=max(s, max_n)))
    universe = list(combinations(range(n), s))
    chosen = draw(
        st.lists(
            st.sampled_from(universe),
            min_size=min(min_size, len(universe)),
            max_size=min(max_size, len(universe)),
            unique=True,
        )
    )
    u = draw(st.integers(min_value=1, max_value=s))
    return SetFamily.build(chosen, s=s, n=n), u
