import networkx as nx

from crossings.models import FamilyKind, Graph, GraphFamily
from crossings.services.families import make_family
from crossings.services.graph_parser import graph_from_networkx


def family(kind: str, n: int) -> Graph:
    return make_family(GraphFamily(FamilyKind(kind), n))


def random_graphs(count: int, max_n: int, seed: int = 0) -> list[Graph]:
    """Seeded G(n, p) graphs with 4 <= n <= max_n and p in {0.3, 0.5, 0.7}."""
    graphs = []
    for i in range(count):
        n = 4 + i % (max_n - 3)
        p = (0.3, 0.5, 0.7)[i % 3]
        graphs.append(graph_from_networkx(nx.gnp_random_graph(n, p, seed=seed + i)))
    return graphs


def complete(n: int) -> Graph:
    return graph_from_networkx(nx.complete_graph(n))
