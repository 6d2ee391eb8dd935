#!/usr/bin/env python3
"""Brute-force reference values for the corpus groups.

Independent of the C++ library: groups are built with plain tuples, commuting
tuples are enumerated directly, and orbits of componentwise conjugation are
counted with Burnside's lemma over the enumerated sets.  The printed values
are frozen into the C++ unit and acceptance tests.
"""
import itertools
from fractions import Fraction


def perm_mul(a, b):  # (ab)(x) = a(b(x))
    return tuple(a[b[i]] for i in range(len(a)))


def mat_mul(p, n):
    def mul(a, b):
        return tuple(
            sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p
            for i in range(n) for j in range(n))
    return mul


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        for g in gens:
            h = mul(g, elems[i])
            if h not in seen:
                seen.add(h)
                elems.append(h)
        i += 1
    return elems


def make(name):
    if name == "S3":
        return closure([(1, 0, 2), (1, 2, 0)], perm_mul, (0, 1, 2)), perm_mul
    if name == "D4":
        return closure([(1, 2, 3, 0), (0, 3, 2, 1)], perm_mul, (0, 1, 2, 3)), perm_mul
    if name == "S4":
        return closure([(1, 0, 2, 3), (1, 2, 3, 0)], perm_mul, (0, 1, 2, 3)), perm_mul
    if name == "Q8":
        m = mat_mul(3, 2)
        return closure([(0, 2, 1, 0), (1, 1, 1, 2)], m, (1, 0, 0, 1)), m
    if name == "GL2_2":
        m = mat_mul(2, 2)
        return closure([(1, 1, 0, 1), (0, 1, 1, 0)], m, (1, 0, 0, 1)), m
    if name == "GL2_3":
        m = mat_mul(3, 2)
        return closure([(2, 0, 0, 1), (2, 1, 2, 0)], m, (1, 0, 0, 1)), m
    if name == "GL3_2":
        m = mat_mul(2, 3)
        return closure([(1, 1, 0, 0, 1, 0, 0, 0, 1), (0, 0, 1, 1, 0, 0, 0, 1, 0)],
                       m, (1, 0, 0, 0, 1, 0, 0, 0, 1)), m
    raise KeyError(name)


def commuting_tuples(G, mul, d):
    """All commuting d-tuples, enumerated by extension."""
    idx = {g: i for i, g in enumerate(G)}
    n = len(G)
    comm = [[mul(G[a], G[b]) == mul(G[b], G[a]) for b in range(n)] for a in range(n)]
    out = [()]
    for _ in range(d):
        nxt = []
        for t in out:
            for x in range(n):
                if all(comm[x][y] for y in t):
                    nxt.append(t + (x,))
        out = nxt
    return out, idx


def orbit_count(G, mul, d):
    """Number of G-orbits on commuting d-tuples via Burnside."""
    tuples, idx = commuting_tuples(G, mul, d)
    n = len(G)
    inv = {}
    e = G[0]
    for g in G:
        for h in G:
            if mul(g, h) == e:
                inv[g] = h
    conj = [[idx[mul(mul(G[g], G[x]), inv[G[g]])] for x in range(n)] for g in range(n)]
    fixed = 0
    for g in range(n):
        for t in tuples:
            if all(conj[g][x] == x for x in t):
                fixed += 1
    assert fixed % n == 0
    return fixed // n, len(tuples)


def max_abelian(G, mul):
    """Largest set of pairwise commuting elements (maximum clique search)."""
    n = len(G)
    comm = [{b for b in range(n) if mul(G[a], G[b]) == mul(G[b], G[a])} for a in range(n)]
    best = [0]

    def expand(clique, cand):
        if len(clique) + len(cand) <= best[0]:
            return
        if not cand:
            best[0] = max(best[0], len(clique))
            return
        for v in sorted(cand):
            if len(clique) + len(cand) <= best[0]:
                return
            expand(clique | {v}, (cand & comm[v]) - {v})
            cand = cand - {v}
        best[0] = max(best[0], len(clique))

    expand(frozenset(), frozenset(range(n)))
    return best[0]


if __name__ == "__main__":
    for name in ["S3", "D4", "Q8", "S4", "GL2_2", "GL2_3", "GL3_2"]:
        G, mul = make(name)
        dmax = 4 if len(G) <= 50 else 3
        counts = []
        for d in range(1, dmax + 1):
            c, _ = orbit_count(G, mul, d)
            counts.append(c)
        sizes = [len(commuting_tuples(G, mul, d)[0]) for d in (1, 2, 3)]
        a = max_abelian(G, mul)
        cps = [Fraction(s, len(G) ** d) for d, s in zip((1, 2, 3), sizes)]
        print(name, "order", len(G), "c(d)", counts, "|C_d|", sizes, "cp", [str(c) for c in cps], "a", a)
    # centralizer of the regular unipotent in GL3(F2)
    G, mul = make("GL3_2")
    u = (1, 1, 0, 0, 1, 1, 0, 0, 1)
    print("GL3_2 regular unipotent centralizer order",
          sum(1 for g in G if mul(g, u) == mul(u, g)))
    G, mul = make("GL2_3")
    u = (1, 1, 0, 1)
    print("GL2_3 unipotent centralizer order", sum(1 for g in G if mul(g, u) == mul(u, g)))
