"""Graded nilpotent quotients of 2-generated presentations over GF(2).

The quotient is built degree by degree.  At each stage the next degree is
presented by frontier symbols [b, x], [b, y] over the current top degree's
basis, and three families of GF(2) relations are imposed: alternation and
antisymmetry of the bracket, Jacobi instances landing in the new degree,
and the defining relators of that weight.  Surviving symbols become the new
basis, so every basis element keeps a (parent, generator) definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GEN_ORDER, BasisElement, GradedAlgebra
from .gf2 import echelonize, iter_bits
from .words import CommutatorWord, GeneratorSymbol, X, Y, Z, make_word

GEN_BITS = {X: 0b01, Y: 0b10, Z: 0b11}


@dataclass(frozen=True)
class Presentation:
    """Relators (left-normed commutator words) over the fixed generators x, y."""

    relators: tuple[CommutatorWord, ...]

    def __init__(self, relators=()):
        rels = tuple(relators)
        for r in rels:
            if not isinstance(r, CommutatorWord):
                raise TypeError(f"relator is not a commutator word: {r!r}")
            if r.weight < 2:
                raise ValueError(f"relator of weight {r.weight}; need weight >= 2")
        object.__setattr__(self, "relators", rels)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.relators)


def nq_compute(pres: Presentation, class_bound: int, full_jacobi: bool = False) -> GradedAlgebra:
    """Largest graded quotient of the presentation with the given class bound.

    By default Jacobi relations are imposed for triples containing a
    generator; with the defining relators this is enough to cut the next
    degree down exactly (antisymmetry plus generator-triple Jacobi force the
    general identity degree by degree).  `full_jacobi=True` imposes every
    basis triple instead.
    """
    if class_bound < 1:
        raise ValueError("class bound must be at least 1")

    by_weight: dict[int, list[CommutatorWord]] = {}
    for r in pres.relators:
        by_weight.setdefault(r.weight, []).append(r)

    dims = [0, 2]
    x0 = BasisElement(1, 0, X, "x")
    y0 = BasisElement(1, 1, Y, "y")
    basis: list[list[BasisElement]] = [[], [x0, y0]]
    act: list[list[tuple[int, int]]] = [[]]  # act[d] appended once degree d+1 is cut

    pair_memo: dict[tuple[int, int, int, int], int] = {}

    def pair(i: int, a: int, j: int, b: int) -> int:
        """Completed-table mask of [basis(i,a), basis(j,b)] (i + j <= top degree)."""
        if j == 1:
            return act[i][a][b]
        key = (i, a, j, b)
        got = pair_memo.get(key)
        if got is not None:
            return got
        p, g = basis[j][b].definition
        p = p.index
        g = 0 if g is X else 1
        out = 0
        for w in iter_bits(pair(i, a, j - 1, p)):
            out ^= act[i + j - 1][w][g]
        for w in iter_bits(act[i][a][g]):
            out ^= pair(i + 1, w, j - 1, p)
        pair_memo[key] = out
        return out

    for n in range(1, class_bound):
        if dims[n] == 0:
            dims.append(0)
            basis.append([])
            act.append([])  # degree n is empty, so its action layer is too
            continue
        nsym = 2 * dims[n]

        sym_memo: dict[tuple[int, int, int, int], int] = {}

        def sym(i: int, a: int, j: int, b: int) -> int:
            """Frontier-symbol mask of [basis(i,a), basis(j,b)], i + j = n + 1."""
            if j == 1:
                return 1 << (2 * a + b)
            key = (i, a, j, b)
            got = sym_memo.get(key)
            if got is not None:
                return got
            p, g = basis[j][b].definition
            p = p.index
            g = 0 if g is X else 1
            out = 0
            for w in iter_bits(pair(i, a, j - 1, p)):
                out ^= 1 << (2 * w + g)
            for w in iter_bits(act[i][a][g]):
                out ^= sym(i + 1, w, j - 1, p)
            sym_memo[key] = out
            return out

        def jrow(d1: int, a: int, d2: int, b: int, d3: int, c: int) -> int:
            out = 0
            for u, ui, v, vi, w, wi in (
                (d1, a, d2, b, d3, c),
                (d2, b, d3, c, d1, a),
                (d3, c, d1, a, d2, b),
            ):
                for m in iter_bits(pair(u, ui, v, vi)):
                    out ^= sym(u + v, m, w, wi)
            return out

        rows = []

        # alternation: [u, u] = 0 for u of half the new degree
        if (n + 1) % 2 == 0:
            h = (n + 1) // 2
            for a in range(dims[h]):
                rows.append(sym(h, a, h, a))

        # antisymmetry: [u, v] = [v, u] across all degree splits
        for i in range(1, (n + 1) // 2 + 1):
            j = n + 1 - i
            if i < j:
                for a in range(dims[i]):
                    for b in range(dims[j]):
                        rows.append(sym(i, a, j, b) ^ sym(j, b, i, a))
            else:
                for a in range(dims[i]):
                    for b in range(a + 1, dims[j]):
                        rows.append(sym(i, a, j, b) ^ sym(j, b, i, a))

        # Jacobi instances landing in degree n + 1
        if full_jacobi:
            for d1 in range(1, n):
                for d2 in range(d1, n + 1 - d1):
                    d3 = n + 1 - d1 - d2
                    if d3 < d2:
                        continue
                    for a in range(dims[d1]):
                        for b in range(dims[d2]):
                            if d2 == d1 and b <= a:
                                continue
                            for c in range(dims[d3]):
                                if d3 == d2 and c <= b:
                                    continue
                                rows.append(jrow(d1, a, d2, b, d3, c))
        else:
            for d1 in range(1, n // 2 + 1):
                d2 = n - d1
                for a in range(dims[d1]):
                    for b in range(dims[d2]):
                        if d2 == d1 and b <= a:
                            continue
                        for g in (0, 1):
                            if (d1, a) == (1, g) or (d2, b) == (1, g):
                                continue
                            rows.append(jrow(d1, a, d2, b, 1, g))

        # defining relators of the new weight
        for r in by_weight.get(n + 1, ()):
            letters = r.letters()
            mask = GEN_BITS[letters[0]]
            deg = 1
            for letter in letters[1:-1]:
                nxt = 0
                bits = GEN_BITS[letter]
                for w in iter_bits(mask):
                    if bits & 0b01:
                        nxt ^= act[deg][w][0]
                    if bits & 0b10:
                        nxt ^= act[deg][w][1]
                mask = nxt
                deg += 1
                if not mask:
                    break
            if not mask:
                continue
            row = 0
            bits = GEN_BITS[letters[-1]]
            for w in iter_bits(mask):
                if bits & 0b01:
                    row ^= 1 << (2 * w)
                if bits & 0b10:
                    row ^= 1 << (2 * w + 1)
            rows.append(row)

        rel = echelonize(rows, nsym)
        killed = set(rel.pivots)
        survivors = [s for s in range(nsym) if s not in killed]
        pos = {s: k for k, s in enumerate(survivors)}

        layer = []
        for new_index, s in enumerate(survivors):
            parent = basis[n][s >> 1]
            gen = GEN_ORDER[s & 1]
            label = str(make_word(*(parent.letters() + (gen,))))
            layer.append(BasisElement(n + 1, new_index, (parent, gen), label))

        def remap(sym_id: int) -> int:
            out = 0
            for s in iter_bits(rel.reduce(1 << sym_id)):
                out |= 1 << pos[s]
            return out

        act.append([(remap(2 * k), remap(2 * k + 1)) for k in range(dims[n])])
        dims.append(len(survivors))
        basis.append(layer)

    action_layers = []
    for d in range(1, class_bound + 1):
        if d < class_bound:
            action_layers.append(act[d])
        else:
            action_layers.append([(0, 0)] * dims[d])
    return GradedAlgebra(class_bound, basis[1:], action_layers)
