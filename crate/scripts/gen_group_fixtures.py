#!/usr/bin/env python3
"""Generate Cayley tables for every group of order <= 24, up to isomorphism.

Candidates come from direct products, semidirect products N x| H over all
homomorphisms H -> Aut(N), and dicyclic groups. Isomorphism classes are
deduplicated by exhaustive search and the per-order counts are checked
against the known census before anything is written.

Usage: gen_group_fixtures.py OUTDIR
"""
import itertools
import sys
from collections import Counter
from pathlib import Path

MAX_ORDER = 24
KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
                13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2,
                23: 1, 24: 15}


class Group:
    """Cayley table with identity 0."""

    def __init__(self, table, label):
        self.t = table
        self.n = len(table)
        self.label = label
        self.inv = [row.index(0) for row in table]
        self._gens = None

    def is_associative(self):
        r = range(self.n)
        return all(self.t[self.t[a][b]][c] == self.t[a][self.t[b][c]] for a in r for b in r for c in r)

    def mul(self, a, b):
        return self.t[a][b]

    def order_of(self, a):
        k, x = 1, a
        while x != 0:
            x = self.t[x][a]
            k += 1
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.t[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def generators(self):
        if self._gens is None:
            # greedy, preferring high-order elements
            gens, span = [], {0}
            for a in sorted(range(self.n), key=lambda a: -self.order_of(a)):
                if a not in span:
                    gens.append(a)
                    span = self.closure(gens)
            self._gens = gens
        return self._gens

    def is_abelian(self):
        return all(self.t[a][b] == self.t[b][a] for a in range(self.n) for b in range(a))

    def invariant(self):
        orders = tuple(sorted(Counter(self.order_of(a) for a in range(self.n)).items()))
        center = sum(all(self.t[a][b] == self.t[b][a] for b in range(self.n)) for a in range(self.n))
        comms = {self.t[self.t[self.inv[a]][self.inv[b]]][self.t[a][b]]
                 for a in range(self.n) for b in range(self.n)}
        derived = len(self.closure(list(comms)))
        squares = len({self.t[a][a] for a in range(self.n)})
        return (self.n, orders, center, derived, squares)


def from_elements(elements, mul, label):
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return Group(table, label)


def generated(gens, mul, identity, label):
    elements, seen, frontier = [identity], {identity}, [identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                frontier.append(y)
    return from_elements(elements, mul, label)


def cyclic(n):
    return Group([[(i + j) % n for j in range(n)] for i in range(n)], f"C{n}")


def direct(g, h):
    els = [(a, b) for a in range(g.n) for b in range(h.n)]
    return from_elements(els, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
                         f"{g.label} x {h.label}")



def extend_hom(g, gens, images, h_mul, h_identity):
    """Extend generator images to a homomorphism g -> h; None if ill-defined."""
    phi = {0: h_identity}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s, img in zip(gens, images):
            y = g.mul(x, s)
            v = h_mul(phi[x], img)
            if y in phi:
                if phi[y] != v:
                    return None
            else:
                phi[y] = v
                frontier.append(y)
    return phi


def automorphisms(n):
    """All automorphisms of n as tuples mapping element -> element."""
    gens = n.generators()
    ords = [n.order_of(s) for s in gens]
    choices = [[a for a in range(n.n) if n.order_of(a) == o] for o in ords]
    auts = []
    for imgs in itertools.product(*choices):
        phi = extend_hom(n, gens, imgs, n.mul, 0)
        if phi is None or len(set(phi.values())) != n.n:
            continue
        auts.append(tuple(phi[i] for i in range(n.n)))
    return auts


def semidirect_products(n, h):
    """N x| H for every homomorphism H -> Aut(N)."""
    auts = automorphisms(n)
    compose = lambda p, q: tuple(p[q[i]] for i in range(len(p)))  # p after q
    ident = tuple(range(n.n))
    gens = h.generators()
    out = []
    for imgs in itertools.product(auts, repeat=len(gens)):
        phi = extend_hom(h, gens, imgs, compose, ident)
        if phi is None:
            continue
        # (a, x)(b, y) = (a * x.b, xy) with x acting through phi
        def mul(p, q, phi=phi):
            return (n.mul(p[0], phi[p[1]][q[0]]), h.mul(p[1], q[1]))
        els = [(a, x) for a in range(n.n) for x in range(h.n)]
        out.append(from_elements(els, mul, f"{n.label} x| {h.label}"))
    return out


def dicyclic(m):
    """Dic_m of order 4m: <a, x | a^{2m}, x^2 = a^m, x a x^-1 = a^-1>."""
    def mul(p, q):
        (i, s), (j, t) = p, q
        if s == 0:
            return ((i + j) % (2 * m), t)
        if t == 0:
            return ((i - j) % (2 * m), 1)
        return ((i - j + m) % (2 * m), 0)
    els = [(i, s) for s in range(2) for i in range(2 * m)]
    return from_elements(els, mul, f"Dic{m}")


def isomorphic(g, h):
    if g.invariant() != h.invariant():
        return False
    gens = g.generators()
    choices = [[a for a in range(h.n) if h.order_of(a) == g.order_of(s)] for s in gens]
    for imgs in itertools.product(*choices):
        phi = extend_hom(g, gens, imgs, h.mul, 0)
        if phi is not None and len(set(phi.values())) == h.n:
            return True
    return False


def main():
    outdir = Path(sys.argv[1])
    classes = {}

    def add(g):
        if g.n > MAX_ORDER:
            return
        bucket = classes.setdefault(g.n, [])
        if not any(isomorphic(g, k) for k in bucket):
            bucket.append(g)

    for n in range(1, MAX_ORDER + 1):
        add(cyclic(n))
    for m in range(2, MAX_ORDER // 4 + 1):
        add(dicyclic(m))
    # grow until stable: products and extensions of what is known so far
    changed = True
    while changed:
        before = sum(len(v) for v in classes.values())
        known = [g for v in classes.values() for g in v if g.n > 1]
        for a, b in itertools.product(known, repeat=2):
            if a.n * b.n <= MAX_ORDER:
                add(direct(a, b))
                for g in semidirect_products(a, b):
                    add(g)
        changed = sum(len(v) for v in classes.values()) != before

    for bucket in classes.values():
        for g in bucket:
            assert g.is_associative(), g.label
    counts = {k: len(v) for k, v in classes.items()}
    if counts != KNOWN_COUNTS:
        sys.exit(f"census mismatch: {counts}")

    outdir.mkdir(parents=True, exist_ok=True)
    for n in sorted(classes):
        groups = sorted(classes[n], key=lambda g: (not g.is_abelian(), g.invariant()))
        for k, g in enumerate(groups, 1):
            kind = "abelian" if g.is_abelian() else "nonabelian"
            lines = [f"# order {n}, {kind}, built as {g.label}", f"table {n}"]
            lines += [" ".join(map(str, row)) for row in g.t]
            (outdir / f"order{n:02d}_{k:02d}.grp").write_text("\n".join(lines) + "\n")
    total = sum(counts.values())
    print(f"wrote {total} groups to {outdir}")


if __name__ == "__main__":
    main()
