"""Graded Lie algebras over GF(2), generated in degree 1 by x and y.

An algebra is stored as structure-constant tables: for every basis element
b of degree d < class_bound, the masks of [b,x] and [b,y] in degree d+1.
Every basis element of degree >= 2 carries a definition (parent, generator),
so arbitrary brackets can be recovered from the action tables alone by
expanding the right factor along its definition chain.  Brackets whose
degree sum exceeds class_bound are truncated to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gf2 import EchelonBasis, SpanSolver, iter_bits, kernel
from .words import (
    CommutatorWord,
    GeneratorSymbol,
    X,
    Y,
    Z,
    make_word,
)

GEN_ORDER = (X, Y)
GEN_INDEX = {X: 0, Y: 1}


def _as_symbol(g) -> GeneratorSymbol:
    if isinstance(g, GeneratorSymbol):
        return g
    if isinstance(g, str) and g in ("x", "y", "z"):
        return GeneratorSymbol(g)
    raise ValueError(f"not a generator: {g!r}")


@dataclass(frozen=True)
class BasisElement:
    """One graded basis element.

    For degree 1 the definition is the generator symbol itself; for degree
    >= 2 it is (parent, generator) with parent one degree lower, so every
    element is a left-normed chain of generators.
    """

    degree: int
    index: int
    definition: object
    label: str

    @property
    def parent(self) -> "BasisElement | None":
        return self.definition[0] if self.degree >= 2 else None

    @property
    def generator(self) -> GeneratorSymbol:
        return self.definition[1] if self.degree >= 2 else self.definition

    def letters(self) -> tuple[GeneratorSymbol, ...]:
        chain: list[GeneratorSymbol] = []
        elt: BasisElement | None = self
        while elt is not None:
            chain.append(elt.generator)
            elt = elt.parent
        return tuple(reversed(chain))


class Element:
    """A homogeneous element: a degree plus a coefficient mask."""

    __slots__ = ("algebra", "degree", "bits")

    def __init__(self, algebra: "GradedAlgebra", degree: int, bits: int):
        self.algebra = algebra
        self.degree = degree
        self.bits = bits

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if self.bits == 0 and other.bits == 0:
            return True
        return (
            self.algebra is other.algebra
            and self.degree == other.degree
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((id(self.algebra), self.degree, self.bits))

    def __add__(self, other: "Element") -> "Element":
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")
        if self.bits == 0:
            return other
        if other.bits == 0:
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degrees")
        return self.algebra.element(self.degree, self.bits ^ other.bits)

    def labels(self) -> list[str]:
        return [self.algebra.basis_at(self.degree)[i].label for i in iter_bits(self.bits)]

    def __repr__(self) -> str:
        if self.bits == 0:
            return f"<0 (degree {self.degree})>"
        return "<" + " + ".join(self.labels()) + f" (degree {self.degree})>"


class GradedAlgebra:
    """Structure-constant table of a class-bounded graded Lie algebra.

    `basis` and `action` are sequences over degrees 1..class_bound; action
    rows are (mask of [b,x], mask of [b,y]) over the next degree's basis,
    with all-zero rows at the top degree.
    """

    def __init__(
        self,
        class_bound: int,
        basis: Sequence[Sequence[BasisElement]],
        action: Sequence[Sequence[tuple[int, int]]],
    ):
        if class_bound < 1:
            raise ValueError("class bound must be at least 1")
        if len(basis) != class_bound or len(action) != class_bound:
            raise ValueError("need exactly one basis/action layer per degree")
        self.class_bound = class_bound
        self._basis: list[tuple[BasisElement, ...]] = [()]
        self._action: list[tuple[tuple[int, int], ...]] = [()]
        for d in range(1, class_bound + 1):
            layer = tuple(basis[d - 1])
            rows = tuple((int(mx), int(my)) for mx, my in action[d - 1])
            if len(rows) != len(layer):
                raise ValueError(f"degree {d}: action rows do not match basis size")
            nxt = len(basis[d]) if d < class_bound else 0
            for i, elt in enumerate(layer):
                if elt.degree != d or elt.index != i:
                    raise ValueError(f"degree {d}: basis element out of place")
                if d >= 2:
                    parent, gen = elt.definition
                    if parent is not self._basis[d - 1][parent.index]:
                        raise ValueError(f"degree {d}: definition parent not in previous layer")
                    if gen not in GEN_INDEX:
                        raise ValueError(f"degree {d}: definition generator must be x or y")
            for mx, my in rows:
                if mx >> nxt or my >> nxt:
                    raise ValueError(f"degree {d}: action mask outside next degree")
            self._basis.append(layer)
            self._action.append(rows)
        if self.dim(1) != 2:
            raise ValueError("degree 1 must be two-dimensional")
        self._pair_memo: dict[tuple[int, int, int, int], int] = {}

    # -- structure access ------------------------------------------------

    def dim(self, degree: int) -> int:
        if 1 <= degree <= self.class_bound:
            return len(self._basis[degree])
        return 0

    @property
    def dims(self) -> tuple[int, ...]:
        """Per-degree dimensions, indexed by degree (entry 0 is a sentinel)."""
        return tuple(len(layer) for layer in self._basis)

    def basis_at(self, degree: int) -> tuple[BasisElement, ...]:
        return self._basis[degree] if 1 <= degree <= self.class_bound else ()

    @property
    def basis(self) -> tuple[tuple[BasisElement, ...], ...]:
        return tuple(self._basis)

    @property
    def action(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return tuple(self._action)

    @property
    def labels(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(e.label for e in layer) for layer in self._basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (
            self.class_bound == other.class_bound
            and self._action == other._action
            and self._basis == other._basis
        )

    __hash__ = None

    # -- elements ----------------------------------------------------------

    def element(self, degree: int, bits: int) -> Element:
        if degree < 1:
            raise ValueError("degree must be positive")
        if degree > self.class_bound:
            if bits:
                raise ValueError("nonzero element beyond the class bound")
        elif bits >> self.dim(degree):
            raise ValueError("mask outside the degree's basis")
        return Element(self, degree, bits)

    def zero(self, degree: int = 1) -> Element:
        return Element(self, degree, 0)

    def generator(self, g) -> Element:
        sym = _as_symbol(g)
        if sym is Z:
            return Element(self, 1, 0b11)
        return Element(self, 1, 1 << GEN_INDEX[sym])

    # -- bracket machinery ---------------------------------------------------

    def act_index(self, degree: int, index: int, gen_index: int) -> int:
        return self._action[degree][index][gen_index]

    def act_mask(self, degree: int, mask: int, g) -> int:
        """Mask of [v, g] in degree+1 for v given by mask in `degree`."""
        sym = _as_symbol(g)
        out = 0
        if sym is Z:
            for i in iter_bits(mask):
                mx, my = self._action[degree][i]
                out ^= mx ^ my
        else:
            gi = GEN_INDEX[sym]
            for i in iter_bits(mask):
                out ^= self._action[degree][i][gi]
        return out

    def bracket_gen(self, v: Element, g) -> Element:
        if v.degree >= self.class_bound:
            return Element(self, v.degree + 1, 0)
        return Element(self, v.degree + 1, self.act_mask(v.degree, v.bits, g))

    def _pair(self, i: int, a: int, j: int, b: int) -> int:
        """Mask of [basis(i,a), basis(j,b)] in degree i+j (requires i+j <= bound)."""
        if j == 1:
            return self._action[i][a][b]
        key = (i, a, j, b)
        got = self._pair_memo.get(key)
        if got is not None:
            return got
        parent, gen = self._basis[j][b].definition
        p, g = parent.index, GEN_INDEX[gen]
        out = 0
        for w in iter_bits(self._pair(i, a, j - 1, p)):
            out ^= self._action[i + j - 1][w][g]
        for w in iter_bits(self._action[i][a][g]):
            out ^= self._pair(i + 1, w, j - 1, p)
        self._pair_memo[key] = out
        return out

    def bracket(self, u: Element, v: Element) -> Element:
        if u.algebra is not self or v.algebra is not self:
            raise ValueError("elements of a different algebra")
        degree = u.degree + v.degree
        if degree > self.class_bound:
            return Element(self, degree, 0)
        bits = 0
        for a in iter_bits(u.bits):
            for b in iter_bits(v.bits):
                bits ^= self._pair(u.degree, a, v.degree, b)
        return Element(self, degree, bits)

    def eval_word(self, w: CommutatorWord) -> Element:
        """Evaluate a left-normed word; z letters evaluate as x+y."""
        letters = w.letters()
        weight = len(letters)
        first = letters[0]
        mask = 0b11 if first is Z else 1 << GEN_INDEX[first]
        degree = 1
        for letter in letters[1:]:
            if degree >= self.class_bound or mask == 0:
                return Element(self, weight, 0)
            mask = self.act_mask(degree, mask, letter)
            degree += 1
        return Element(self, weight, mask)

    def eval_letters(self, v: Element, letters: Iterable[GeneratorSymbol]) -> Element:
        out = v
        for letter in letters:
            out = self.bracket_gen(out, letter)
        return out

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        basis_rows = []
        for d in range(1, self.class_bound + 1):
            for elt in self._basis[d]:
                basis_rows.append(
                    {
                        "degree": d,
                        "index": elt.index,
                        "label": elt.label,
                        "parent": elt.parent.index if d >= 2 else None,
                        "generator": str(elt.generator),
                    }
                )
        action = {
            str(d): [[format(mx, "x"), format(my, "x")] for mx, my in self._action[d]]
            for d in range(1, self.class_bound + 1)
        }
        return {
            "format": "graded-algebra/1",
            "class_bound": self.class_bound,
            "dims": list(self.dims[1:]),
            "basis": basis_rows,
            "action": action,
        }


# -- well-definedness ------------------------------------------------------


@dataclass
class JacobiReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)

    def __str__(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.failures)} failing triples)"
        return f"jacobi check: {status}, {self.checked} instances"


def jacobi_check(A: GradedAlgebra, max_degree: int | None = None) -> JacobiReport:
    """Check [u,u]=0 and the Jacobi identity on all in-range basis triples."""
    bound = min(A.class_bound, max_degree) if max_degree else A.class_bound
    checked = 0
    failures = []
    for d in range(1, bound // 2 + 1):
        for e in A.basis_at(d):
            u = A.element(d, 1 << e.index)
            sq = A.bracket(u, u)
            checked += 1
            if sq.bits:
                failures.append(("square", e.label, sq))
    for d1 in range(1, bound - 1):
        for d2 in range(d1, bound - d1):
            for d3 in range(d2, bound - d1 - d2 + 1):
                for a in A.basis_at(d1):
                    u = A.element(d1, 1 << a.index)
                    for b in A.basis_at(d2):
                        if d2 == d1 and b.index < a.index:
                            continue
                        v = A.element(d2, 1 << b.index)
                        uv = A.bracket(u, v)
                        for c in A.basis_at(d3):
                            if d3 == d2 and c.index < b.index:
                                continue
                            w = A.element(d3, 1 << c.index)
                            jac = (
                                A.bracket(uv, w).bits
                                ^ A.bracket(A.bracket(v, w), u).bits
                                ^ A.bracket(A.bracket(w, u), v).bits
                            )
                            checked += 1
                            if jac:
                                failures.append(
                                    ("jacobi", (a.label, b.label, c.label), A.element(d1 + d2 + d3, jac))
                                )
    return JacobiReport(not failures, checked, failures)


# -- graded subspaces -------------------------------------------------------


@dataclass
class GradedSubspaceFamily:
    """One subspace per degree, valid only up to valid_up_to."""

    algebra: GradedAlgebra
    per_degree: dict[int, EchelonBasis]
    valid_up_to: int

    def at(self, degree: int) -> EchelonBasis:
        if not 1 <= degree <= self.valid_up_to:
            raise ValueError(f"degree {degree} outside the validity range")
        return self.per_degree[degree]

    def dim(self, degree: int) -> int:
        return self.at(degree).rank

    def weights(self) -> list[int]:
        return [d for d in range(1, self.valid_up_to + 1) if self.per_degree[d].rank]

    def contains(self, v: Element) -> bool:
        return self.at(v.degree).contains(v.bits)


def graded_center(A: GradedAlgebra) -> GradedSubspaceFamily:
    """Per-degree kernel of v -> ([v,x], [v,y]).

    The top degree is excluded from the validity range: its action rows are
    zero by truncation, so centrality there is not observable.
    """
    valid = A.class_bound - 1
    per = {}
    for d in range(1, valid + 1):
        width = A.dim(d + 1)
        images = [
            A.act_index(d, i, 0) | (A.act_index(d, i, 1) << width)
            for i in range(A.dim(d))
        ]
        per[d] = kernel(images, 2 * width)
    return GradedSubspaceFamily(A, per, valid)


def second_center(A: GradedAlgebra) -> GradedSubspaceFamily:
    """Per-degree preimage of the graded center under both generators."""
    Z = graded_center(A)
    valid = A.class_bound - 2
    per = {}
    for d in range(1, valid + 1):
        width = A.dim(d + 1)
        znext = Z.per_degree[d + 1]
        images = [
            znext.reduce(A.act_index(d, i, 0)) | (znext.reduce(A.act_index(d, i, 1)) << width)
            for i in range(A.dim(d))
        ]
        per[d] = kernel(images, 2 * width)
    return GradedSubspaceFamily(A, per, valid)


def quotient(A: GradedAlgebra, ideal: GradedSubspaceFamily) -> GradedAlgebra:
    """Quotient of A by a graded ideal family, up to the family's validity bound.

    The family must vanish in degree 1 (the quotient keeps both generators)
    and must be closed under bracketing with the generators inside its
    validity range.  The new basis is re-derived canonically: candidate
    spanning vectors [b, x], [b, y] are taken in basis order, a dependency
    eliminates its lowest-indexed participant, and the survivors become the
    defined basis of the next degree.
    """
    if ideal.algebra is not A:
        raise ValueError("subspace family belongs to a different algebra")
    bound = ideal.valid_up_to
    if bound < 2:
        raise ValueError("validity range too small to build a quotient")
    if ideal.at(1).rank:
        raise ValueError("ideal meets degree 1; the quotient would not be 2-generated")
    for d in range(1, bound):
        nxt = ideal.at(d + 1)
        for row in ideal.at(d):
            for gi in (0, 1):
                if not nxt.contains(A.act_mask(d, row, GEN_ORDER[gi])):
                    raise ValueError(f"family is not an ideal at degree {d}")

    x0 = BasisElement(1, 0, X, "x")
    y0 = BasisElement(1, 1, Y, "y")
    basis: list[list[BasisElement]] = [[x0, y0]]
    action: list[list[tuple[int, int]]] = []
    reps = [0b01, 0b10]
    for d in range(2, bound + 1):
        idl = ideal.at(d)
        parents = basis[-1]
        cands = []
        for rep in reps:
            for gi in (0, 1):
                cands.append(idl.reduce(A.act_mask(d - 1, rep, GEN_ORDER[gi])))
        killed = set(kernel(cands, A.dim(d)).pivots)
        survivors = [k for k in range(len(cands)) if k not in killed]
        if len(survivors) != A.dim(d) - idl.rank:
            raise AssertionError("quotient candidates failed to span")
        layer = []
        for new_index, k in enumerate(survivors):
            p, gi = divmod(k, 2)
            parent = parents[p]
            gen = GEN_ORDER[gi]
            label = str(make_word(*(parent.letters() + (gen,))))
            layer.append(BasisElement(d, new_index, (parent, gen), label))
        solver = SpanSolver([cands[k] for k in survivors], A.dim(d))
        rows = []
        for p in range(len(parents)):
            masks = []
            for gi in (0, 1):
                m = solver.express(cands[2 * p + gi])
                if m is None:
                    raise AssertionError("quotient action row not in surviving span")
                masks.append(m)
            rows.append((masks[0], masks[1]))
        action.append(rows)
        basis.append(layer)
        reps = [cands[k] for k in survivors]
    action.append([(0, 0)] * len(basis[-1]))
    return GradedAlgebra(bound, basis, action)


# -- derived structure -------------------------------------------------------


class NoPreimageError(ValueError):
    pass


class AmbiguousPreimageError(ValueError):
    pass


def adx_preimage(A: GradedAlgebra, v: Element, c: int) -> Element:
    """The unique u with [u x^c] = v, when it exists and is unique."""
    if c < 1:
        raise ValueError("need a positive power")
    d0 = v.degree - c
    if d0 < 1:
        raise ValueError("preimage degree would fall below 1")
    if v.bits == 0:
        raise AmbiguousPreimageError("zero has no distinguished preimage")
    images = []
    for i in range(A.dim(d0)):
        m = 1 << i
        for step in range(c):
            m = A.act_mask(d0 + step, m, X)
        images.append(m)
    if kernel(images, A.dim(v.degree)).rank:
        raise AmbiguousPreimageError(f"x^{c} has a kernel in degree {d0}")
    solver = SpanSolver(images, A.dim(v.degree))
    mask = solver.express(v.bits)
    if mask is None:
        raise NoPreimageError(f"no degree-{d0} element maps onto the target")
    return A.element(d0, mask)


def two_step_centralizers(A: GradedAlgebra) -> list:
    """Centralizer of each component inside degree 1, for degrees 2..bound-1.

    Entry j-2 describes degree j: 'x', 'y' or 'other' when the centralizer
    is one-dimensional (spanned by x, y or x+y), None when it is trivial,
    and 'all' when the whole degree 1 centralizes.
    """
    names = {0b01: "x", 0b10: "y", 0b11: "other"}
    out = []
    for j in range(2, A.class_bound):
        width = A.dim(j) * A.dim(j + 1)
        images = []
        for gi in (0, 1):
            packed = 0
            for i in range(A.dim(j)):
                packed |= A.act_index(j, i, gi) << (i * A.dim(j + 1))
            images.append(packed)
        ker = kernel(images, width)
        if ker.rank == 0:
            out.append(None)
        elif ker.rank == 1:
            out.append(names[ker.row_bits()[0]])
        else:
            out.append("all")
    return out


class InapplicableError(ValueError):
    """The centralizer window needed by a check is not available."""


def z_substitution_holds(A: GradedAlgebra, v: Element, letters) -> bool:
    """Whether [v l_1 ... l_n] = [v z^n], given an {x,y}-centralized window.

    Requires the two-step centralizers at degrees deg(v) .. deg(v)+n-1 to be
    spanned by a generator (the degree-1 window uses the degree-2 entry);
    otherwise InapplicableError is raised.
    """
    syms = [_as_symbol(l) for l in letters]
    if any(s is Z for s in syms):
        raise ValueError("the substituted letters must be x or y")
    n = len(syms)
    if n == 0:
        return True
    last = v.degree + n - 1
    if last > A.class_bound - 1:
        raise InapplicableError("window extends past the known centralizer range")
    cents = two_step_centralizers(A)
    for j in range(v.degree, last + 1):
        entry = cents[max(j, 2) - 2]
        if entry not in ("x", "y"):
            raise InapplicableError(f"degree {j}: centralizer is not a generator")
    plain = A.eval_letters(v, syms)
    zed = A.eval_letters(v, [Z] * n)
    return plain.bits == 0 or plain.bits == zed.bits
