"""Independent reference values frozen into the C++ tests.

Uses networkx for graph6 and matchings, sympy for exact characteristic
polynomials and eigenvalue locations, and brute force for domination.
Run: python3 tests/oracles/make_oracles.py
"""
from fractions import Fraction
from itertools import combinations

import networkx as nx
import sympy as sp


def figure1():
    g = nx.Graph()
    g.add_node(0)
    nxt = 1
    for _ in range(4):
        apex = nxt
        nxt += 1
        g.add_edge(0, apex)
        for _ in range(3):
            mid = nxt
            nxt += 1
            g.add_edge(apex, mid)
            for _ in range(2):
                inner, pendant = nxt, nxt + 1
                nxt += 2
                g.add_edge(mid, inner)
                g.add_edge(inner, pendant)
    return g


def wheel6():
    g = nx.cycle_graph(range(1, 6))
    for v in range(1, 6):
        g.add_edge(0, v)
    return g


GRAPHS = {
    "petersen": nx.petersen_graph(),
    "kbip23": nx.complete_bipartite_graph(2, 3),
    "cycle6": nx.cycle_graph(6),
    "wheel6": wheel6(),
    "path5": nx.path_graph(5),
    "bull": nx.from_edgelist([(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
    "fig1": figure1(),
}

# (label, lo, lo_closed, hi, hi_closed); "n" stands for the order.
INTERVALS = [
    ("[0,1)", 0, True, 1, False),
    ("[1,n]", 1, True, "n", True),
    ("[2,n]", 2, True, "n", True),
    ("[0,2)", 0, True, 2, False),
    ("[1,2)", 1, True, 2, False),
    ("(n-1,n]", "n-1", False, "n", True),
    ("[1/2,3/2]", Fraction(1, 2), True, Fraction(3, 2), True),
    ("(2,n]", 2, False, "n", True),
]


def resolve(x, n):
    if x == "n":
        return sp.Integer(n)
    if x == "n-1":
        return sp.Integer(n - 1)
    return sp.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sp.Integer(x)


def laplacian(g, signless=False):
    nodes = sorted(g.nodes())
    a = nx.to_numpy_array(g, nodelist=nodes, dtype=int)
    d = sp.diag(*[int(x) for x in a.sum(axis=1)])
    a = sp.Matrix(a.astype(int))
    return d + a if signless else d - a


def exact_count(poly, x, lo, lo_closed, hi, hi_closed):
    total = 0
    for factor, mult in sp.factor_list(poly)[1]:
        for r in sp.Poly(factor, x).real_roots():
            inside_lo = r >= lo if lo_closed else r > lo
            inside_hi = r <= hi if hi_closed else r < hi
            if bool(inside_lo) and bool(inside_hi):
                total += mult
    return total


def count_table(signless=False):
    x = sp.symbols("x")
    out = {}
    for name, g in GRAPHS.items():
        m = laplacian(g, signless)
        n = m.shape[0]
        poly = (m.charpoly(x)).as_expr()
        out[name] = [exact_count(poly, x, resolve(lo, n), lc, resolve(hi, n), hc)
                     for _, lo, lc, hi, hc in INTERVALS]
    return out


def char_poly_ascending(g):
    x = sp.symbols("x")
    p = sp.Poly(laplacian(g).charpoly(x).as_expr(), x)
    return list(reversed([int(c) for c in p.all_coeffs()]))


def gamma_brute(g):
    nodes = sorted(g.nodes())
    closed = {v: {v} | set(g[v]) for v in nodes}
    for k in range(1, len(nodes) + 1):
        for s in combinations(nodes, k):
            covered = set().union(*(closed[v] for v in s))
            if len(covered) == len(nodes):
                return k
    return 0


def main():
    print("// graph6")
    for name in ["path5", "petersen", "kbip23", "wheel6", "bull"]:
        print(name, nx.to_graph6_bytes(GRAPHS[name], header=False).decode().strip())
    print("path3", nx.to_graph6_bytes(nx.path_graph(3), header=False).decode().strip())
    print("k1", nx.to_graph6_bytes(nx.empty_graph(1), header=False).decode().strip())
    print("k4", nx.to_graph6_bytes(nx.complete_graph(4), header=False).decode().strip())
    p70 = nx.to_graph6_bytes(nx.path_graph(70), header=False).decode().strip()
    print("path70", p70)

    print("// Laplacian counts over", [i[0] for i in INTERVALS])
    for name, row in count_table().items():
        print(name, row)
    print("// signless counts")
    for name, row in count_table(signless=True).items():
        print(name, row)

    print("// characteristic polynomials, ascending")
    for name in ["petersen", "kbip23", "wheel6", "bull"]:
        print(name, char_poly_ascending(GRAPHS[name]))

    print("// gamma by brute force, matching number, diameter")
    for name, g in GRAPHS.items():
        if name == "fig1":
            continue
        print(name, gamma_brute(g), len(nx.max_weight_matching(g, maxcardinality=True)), nx.diameter(g))
    print("fig1 matching", len(nx.max_weight_matching(GRAPHS["fig1"], maxcardinality=True)))


if __name__ == "__main__":
    main()
