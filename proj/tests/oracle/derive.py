"""Independent reference values for the C++ tests (networkx + brute force).

Run: python3 tests/oracle/derive.py
"""
from fractions import Fraction
from itertools import combinations, permutations
import networkx as nx


def circulant(m):
    g = nx.DiGraph()
    g.add_nodes_from(range(m))
    for i in range(m):
        for j in range(1, (m - 1) // 2 + 1):
            g.add_edge(i, (i + j) % m)
    return g


def haggkvist(m):
    a = list(range(m)); b = list(range(m, 2 * m + 2))
    c = list(range(2 * m + 2, 3 * m + 2)); d = list(range(3 * m + 2, 4 * m + 3))
    g = nx.DiGraph(); g.add_nodes_from(range(4 * m + 3))
    for blk in (a, c):
        for i in range(m):
            for j in range(1, (m - 1) // 2 + 1):
                g.add_edge(blk[i], blk[(i + j) % m])
    for x, y in [(a, b), (b, c), (c, d), (d, a)]:
        for u in x:
            for v in y:
                g.add_edge(u, v)
    # any near-regular B-D bipartite tournament with B-out-degree (m+1)/2
    for i, u in enumerate(b):
        for j, v in enumerate(d):
            if (j - i) % (m + 1) < (m + 1) // 2:
                g.add_edge(u, v)
            else:
                g.add_edge(v, u)
    return g, (a, b, c, d)


def semidegree(g):
    return min(min(d for _, d in g.out_degree()), min(d for _, d in g.in_degree()))


def delta_star(g):
    n = g.number_of_nodes()
    tot = min(g.out_degree(v) + g.in_degree(v) for v in g)
    return tot + min(d for _, d in g.out_degree()) + min(d for _, d in g.in_degree())


def hamiltonian(g):
    n = g.number_of_nodes()
    full = (1 << n) - 1
    reach = {(1, 0)}
    layer = {(1, 0)}
    for _ in range(n - 1):
        nxt = set()
        for mask, v in layer:
            for w in g.successors(v):
                if not mask >> w & 1:
                    nxt.add((mask | 1 << w, w))
        layer = nxt
    return any(mask == full and g.has_edge(v, 0) for mask, v in layer)


def cover_matching(g):
    h = nx.Graph()
    left = [("L", v) for v in g]
    h.add_nodes_from(left); h.add_nodes_from(("R", v) for v in g)
    h.add_edges_from((("L", u), ("R", v)) for u, v in g.edges())
    return len(nx.bipartite.hopcroft_karp_matching(h, top_nodes=left)) // 2


def expansion_ok(g, alpha):
    n = g.number_of_nodes()
    for k in range(1, n + 1):
        if k > (1 - alpha) * n:
            break
        for x in combinations(range(n), k):
            out = set()
            for v in x:
                out.update(g.successors(v))
            if 2 * len(out) < 2 * k + alpha * n:
                return False
    return True


print("semidegree/delta_star circulants:")
for m in (3, 5, 7, 9, 11):
    g = circulant(m)
    ds = delta_star(g)
    alpha = Fraction(ds, m) - Fraction(3, 2)
    print(f"  n={m} delta0={semidegree(g)} delta*={ds} alpha={alpha}"
          + (f" floor(2/alpha)={int(2 / alpha)} ceil(n/alpha)={-(-m // 1 * alpha.denominator // alpha.numerator)}" if alpha > 0 else ""))

print("haggkvist:")
for m in (3, 5, 7):
    g, (a, b, c, d) = haggkvist(m)
    n = g.number_of_nodes()
    ebd = sum(1 for u in b for v in d if g.has_edge(u, v))
    dout = sorted(sum(1 for u in b if g.has_edge(v, u)) for v in d)
    print(f"  m={m} n={n} delta0={semidegree(g)} formula={Fraction(3 * n - 5, 8)} e(B,D)={ebd} "
          f"D->B degrees={dout} matching={cover_matching(g)}")
    if m == 3:
        print(f"  m=3 hamiltonian={hamiltonian(g)}")

print("two-block m=1:")
t = nx.DiGraph(); t.add_nodes_from(range(6))
for blk in ((0, 1, 2), (3, 4, 5)):
    for i in range(3):
        t.add_edge(blk[i], blk[(i + 1) % 3])
for u in range(3):
    for v in range(3, 6):
        t.add_edge(u, v)
print(f"  strong={nx.is_strongly_connected(t)} hamiltonian={hamiltonian(t)} matching={cover_matching(t)}")

print("expansion circulant n=7 alpha=3/14:", expansion_ok(circulant(7), Fraction(3, 14)))

# half graph 8+8: b_i -> a_j iff j <= i; the pair (B, A) counted B->A
A = list(range(8)); B = list(range(8, 16))
half = lambda i, j: j <= i  # b_i -> a_j
dens = Fraction(sum(1 for i in range(8) for j in range(8) if half(i, j)), 64)
eps = Fraction(1, 4)
best = None
for kx in range(3, 9):
    for x in combinations(range(8), kx):
        for ky in range(3, 9):
            for y in combinations(range(8), ky):
                e = sum(1 for i in x for j in y if half(i, j))
                dev = abs(Fraction(e, kx * ky) - dens)
                if dev >= eps and (best is None or (kx, ky) < best[0]):
                    best = ((kx, ky), x, y, dev)
    if best:
        break
print(f"half graph d(B,A)={dens} irregular at eps=1/4: {best is not None}; smallest witness sizes {best[0]} dev={best[3]}")

# Kelly decompositions
for m in (3, 5, 7):
    g = circulant(m)
    edges = set(g.edges())

    def cycles(rem):
        n = m
        res = []
        for p in permutations(range(1, n)):
            c = (0,) + p
            if all((c[i], c[(i + 1) % n]) in rem for i in range(n)):
                res.append(c)
        return res

    def decompose(rem, k):
        if not rem:
            return k
        for c in cycles(rem):
            es = {(c[i], c[(i + 1) % m]) for i in range(m)}
            r = decompose(rem - es, k + 1)
            if r:
                return r
        return 0

    print(f"  kelly n={m}: {decompose(edges, 0)} cycles")
