import networkx as nx
from hypothesis import strategies as st

from shellkit import Poset, build_poset
from shellkit.labelings import EdgeLabeling
from shellkit.orderings import ChainAtomOrdering


def diamond():
    """Boolean lattice of rank two: ``0 < a, b < 1``."""
    return build_poset([("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def chain(length):
    """Chain ``0 < c1 < ... < 1`` with ``length`` covers."""
    names = ["0"] + [f"c{i}" for i in range(1, length)] + ["1"]
    return build_poset(list(zip(names, names[1:])))


def two_chains():
    """Two maximal chains of length three sharing only the end points."""
    return build_poset(
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "d"), ("d", "1")]
    )


def diamond_el():
    """EL-labeling of the diamond: ``0a1`` reads 1 2, ``0b1`` reads 2 1."""
    return EdgeLabeling(
        diamond(), {("0", "a"): 1, ("a", "1"): 2, ("0", "b"): 2, ("b", "1"): 1}
    )


@st.composite
def graded_posets(draw, max_levels=3, max_width=3):
    """Graded bounded posets with at most ``2 + max_levels * max_width``
    elements. Covers only join consecutive levels, so every listed pair is a
    cover relation."""
    levels = draw(st.integers(min_value=1, max_value=max_levels))
    layers = [["0"]]
    for level in range(1, levels + 1):
        width = draw(st.integers(min_value=1, max_value=max_width))
        layers.append([f"x{level}{i}" for i in range(width)])
    layers.append(["1"])

    covers = set()
    for lower, upper in zip(layers, layers[1:]):
        for y in upper:
            below = draw(
                st.lists(st.sampled_from(lower), min_size=1, max_size=len(lower))
            )
            covers.update((x, y) for x in below)
        for x in lower:
            if not any((x, y) in covers for y in upper):
                covers.add((x, draw(st.sampled_from(upper))))

    elements = [x for layer in layers for x in layer]
    return Poset(elements, sorted(covers))


@st.composite
def bounded_posets(draw, max_inner=7):
    """Bounded posets that need not be graded.

    Inner elements ``x0, x1, ...`` get random relations ``xi < xj`` for
    ``i < j``, reduced to covers by :py:func:`networkx.transitive_reduction`;
    ``0`` and ``1`` go below the minimal and above the maximal ones."""
    size = draw(st.integers(min_value=1, max_value=max_inner))
    inner = [f"x{i}" for i in range(size)]
    pairs = [(inner[i], inner[j]) for i in range(size) for j in range(i + 1, size)]
    relations = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []

    graph = nx.DiGraph()
    graph.add_nodes_from(inner)
    graph.add_edges_from(relations)
    reduced = nx.transitive_reduction(graph)

    covers = set(reduced.edges())
    covers.update(("0", x) for x in inner if reduced.in_degree(x) == 0)
    covers.update((x, "1") for x in inner if reduced.out_degree(x) == 0)
    return Poset(["0"] + inner + ["1"], sorted(covers))


@st.composite
def edge_labelings(draw, posets=graded_posets(), max_label=3):
    poset = draw(posets)
    labels = {
        cover: draw(st.integers(min_value=1, max_value=max_label))
        for cover in sorted(poset.covers)
    }
    return EdgeLabeling(poset, labels)


@st.composite
def element_orderings(draw, posets=graded_posets()):
    """Root independent chain-atom orderings with random atom orders."""
    poset = draw(posets)
    orders = {
        u: draw(st.permutations(poset.upper_covers(u)))
        for u in poset.elements
        if u != poset.top
    }
    return ChainAtomOrdering.from_element_orders(poset, orders)
