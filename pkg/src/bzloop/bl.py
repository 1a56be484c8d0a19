"""Bi-Zassenhaus loop algebras: parameters, words, direct construction.

The algebra B(g, h) is graded of maximal class over GF(2), so from degree 2
on it is one-dimensional and fully described by its two-step centralizer
sequence: which degree-1 generator kills each component.  The sequence is
periodic after its first two constituents, and all defined words (v_n, the
theta and mu families) and the finite presentation are built from the same
parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BasisElement, GradedAlgebra, two_step_centralizers
from .nq import Presentation
from .words import CommutatorWord, GenPower, GroupPower, X, Y, make_word

FX = "x"
FY = "y"
OTHER = "other"


@dataclass(frozen=True)
class BlParams:
    """Derived constants of B(g, h)."""

    g: int
    h: int
    q: int
    eta: int
    d: int
    m: int


def bl_params(g: int, h: int) -> BlParams:
    if g < 2:
        raise ValueError("need g >= 2")
    if h < 1:
        raise ValueError("need h >= 1")
    q = 2 ** h
    eta = 2 ** g - 1
    d = 2 ** (g + h + 1) - 2
    m = 2 * q * (eta + 2)
    return BlParams(g, h, q, eta, d, m)


def _params(g, h=None) -> BlParams:
    if isinstance(g, BlParams):
        return g
    return bl_params(g, h)


# -- centralizer and constituent sequences -----------------------------------


@dataclass(frozen=True)
class CentralizerSequence:
    """Two-step centralizers by degree, starting at degree 2.

    Entry k describes degree k+2.  By convention the degree-1 value equals
    the degree-2 value, and degree 2 must be centralized by y.
    """

    entries: tuple[str, ...]

    def __post_init__(self):
        for e in self.entries:
            if e not in (FX, FY, OTHER):
                raise ValueError(f"bad centralizer entry: {e!r}")
        if self.entries and self.entries[0] != FY:
            raise ValueError("degree 2 must be centralized by y")

    @property
    def max_degree(self) -> int:
        return len(self.entries) + 1

    def at(self, degree: int) -> str:
        if degree == 1:
            degree = 2
        if not 2 <= degree <= self.max_degree:
            raise ValueError(f"degree {degree} outside the known range")
        return self.entries[degree - 2]

    def with_virtual_first(self) -> tuple[str, ...]:
        """Entries for degrees 1..max_degree (degree 1 copies degree 2)."""
        return (self.entries[0],) + self.entries


def bl_constituent_lengths(g, h=None, count: int = 0) -> tuple[int, ...]:
    """First `count` constituent lengths of B(g, h): 2q, 2q-1, then the cycle."""
    p = _params(g, h)
    twoq = 2 * p.q
    out = [twoq, twoq - 1]
    cycle = [twoq] * (p.eta - 1) + [twoq - 1] * 2
    while len(out) < count:
        out.extend(cycle)
    return tuple(out[:count])


def bl_centralizer_sequence(g, h=None, up_to: int = 0) -> CentralizerSequence:
    """Two-step centralizer sequence of B(g, h) for degrees 2..up_to."""
    p = _params(g, h)
    if up_to < 2:
        raise ValueError("need up_to >= 2")
    entries: list[str] = []  # degree 1 onward; trimmed below

    def emit(length: int):
        entries.extend([FY] * (length - 1))
        entries.append(FX)

    twoq = 2 * p.q
    emit(twoq)
    emit(twoq - 1)
    cycle = [twoq] * (p.eta - 1) + [twoq - 1] * 2
    while len(entries) < up_to:
        for length in cycle:
            emit(length)
    return CentralizerSequence(tuple(entries[1:up_to]))


def centralizer_sequence(A: GradedAlgebra) -> CentralizerSequence:
    """Two-step centralizer sequence of a maximal-class table.

    Every component in degrees 2..class_bound-1 must have a one-dimensional
    centralizer inside degree 1, and degree 2 must be centralized by y.
    """
    entries = two_step_centralizers(A)
    for j, e in enumerate(entries, start=2):
        if e not in (FX, FY, OTHER):
            raise ValueError(f"degree {j}: centralizer is not one-dimensional")
    return CentralizerSequence(tuple(entries))


@dataclass(frozen=True)
class ConstituentSequence:
    lengths: tuple[int, ...]


def constituent_lengths(seq) -> ConstituentSequence:
    """Split a centralizer sequence into complete constituents.

    A constituent is a run of y-entries closed off by its first non-y entry
    (counted inclusively); the count starts at the virtual degree-1 entry.
    A trailing run with no terminator is dropped as incomplete.
    """
    if isinstance(seq, CentralizerSequence):
        entries = seq.with_virtual_first()
    else:
        entries = tuple(seq)
    lengths = []
    run = 0
    for e in entries:
        run += 1
        if e != FY:
            lengths.append(run)
            run = 0
    return ConstituentSequence(tuple(lengths))


def check_CL(lengths, g, h=None) -> bool:
    """Whether every constituent length lies in {2q} | {2q - 2^s : 0 <= s <= h}."""
    p = _params(g, h)
    twoq = 2 * p.q
    allowed = {twoq} | {twoq - 2 ** s for s in range(p.h + 1)}
    if isinstance(lengths, ConstituentSequence):
        lengths = lengths.lengths
    return all(l in allowed for l in lengths)


# -- direct construction ------------------------------------------------------


def construct_bl(g, h=None, class_bound: int = 0) -> GradedAlgebra:
    """B(g, h) truncated at class_bound, as explicit structure-constant tables."""
    p = _params(g, h)
    if class_bound < 2:
        raise ValueError("need class_bound >= 2")
    x0 = BasisElement(1, 0, X, "x")
    y0 = BasisElement(1, 1, Y, "y")
    basis: list[list[BasisElement]] = [[x0, y0]]
    action: list[list[tuple[int, int]]] = [[(0, 1), (1, 0)]]
    cents = bl_centralizer_sequence(p, up_to=class_bound - 1) if class_bound >= 3 else None
    prev = BasisElement(2, 0, (y0, X), "y x")
    basis.append([prev])
    for i in range(2, class_bound):
        gen = X if cents.at(i) == FY else Y
        action.append([(1, 0) if gen is X else (0, 1)])
        label = str(make_word(*(prev.letters() + (gen,))))
        nxt = BasisElement(i + 1, 0, (prev, gen), label)
        basis.append([nxt])
        prev = nxt
    action.append([(0, 0)])
    return GradedAlgebra(class_bound, basis, action)


# -- defined words -------------------------------------------------------------


def _v_parts(p: BlParams, n: int) -> tuple:
    if n < 0:
        raise ValueError("need n >= 0")
    head = (Y, GenPower(X, 2 * p.q - 1))
    if n == 0:
        return head
    block = (
        Y,
        GenPower(X, 2 * p.q - 2),
        GroupPower((Y, GenPower(X, 2 * p.q - 1)), p.eta - 1),
        Y,
        GenPower(X, 2 * p.q - 2),
    )
    return head + (GroupPower(block, n),)


def v_word(g, h=None, n: int = 0) -> CommutatorWord:
    """v_n, of weight 2q + dn."""
    p = _params(g, h)
    return make_word(*_v_parts(p, n))


def theta_word(g, h=None, kind=1, n: int = 0) -> CommutatorWord:
    """The theta word of the given kind: an int 1..g+h, or "omega"."""
    p = _params(g, h)
    if kind == "omega":
        return make_word(*_v_parts(p, 2 * n + 1), X, Y)
    t = int(kind)
    if t == 1:
        return make_word(*_v_parts(p, n), X)
    if 2 <= t <= p.h + 1:
        e = 2 ** (p.h + 2 - t)
        return make_word(*_v_parts(p, n), Y, GenPower(X, 2 * p.q - e - 1), Y)
    if p.h + 2 <= t <= p.g + p.h:
        e = 2 ** (p.g + p.h + 1 - t)
        return make_word(
            *_v_parts(p, n),
            Y,
            GenPower(X, 2 * p.q - 2),
            GroupPower((Y, GenPower(X, 2 * p.q - 1)), p.eta - e),
            Y,
            GenPower(X, 2 * p.q - 2),
            Y,
        )
    raise ValueError(f"no theta of kind {kind!r}")


def mu_word(g, h=None, n: int = 0, i: int = 1) -> CommutatorWord:
    """mu_{n,i}, of weight 4q - 2 + dn for i = 1 and 2qi + 2q - 2 + dn for i >= 2."""
    p = _params(g, h)
    if i < 1:
        raise ValueError("need i >= 1")
    if i == 1:
        return make_word(*_v_parts(p, n), Y, GenPower(X, 2 * p.q - 3))
    return make_word(
        *_v_parts(p, n),
        Y,
        GenPower(X, 2 * p.q - 2),
        GroupPower((Y, GenPower(X, 2 * p.q - 1)), i - 2),
        Y,
        GenPower(X, 2 * p.q - 2),
    )


@dataclass(frozen=True)
class ThetaSpec:
    """One central element prediction: which theta word sits at which weight."""

    kind: object
    n: int
    word: CommutatorWord
    weight: int


def theta_specs(g, h=None, max_weight: int = 0) -> list[ThetaSpec]:
    """All theta words of weight <= max_weight, sorted by weight."""
    p = _params(g, h)
    out = []
    n = 0
    while 2 * p.q + 1 + p.d * n <= max_weight:
        for t in range(1, p.g + p.h + 1):
            w = theta_word(p, kind=t, n=n)
            if w.weight <= max_weight:
                out.append(ThetaSpec(t, n, w, w.weight))
        n += 1
    n = 0
    while 2 * p.q + 2 + p.d * (2 * n + 1) <= max_weight:
        w = theta_word(p, kind="omega", n=n)
        out.append(ThetaSpec("omega", n, w, w.weight))
        n += 1
    out.sort(key=lambda s: s.weight)
    return out


# -- the finite presentation ---------------------------------------------------


def presentation_R(g, h=None) -> Presentation:
    """The defining relators of B(g, h): exactly q + h + eta words."""
    p = _params(g, h)
    rels: list[CommutatorWord] = []
    for j in range(p.q - 1):
        rels.append(make_word(Y, GenPower(X, 2 * j + 1), Y))
    for t in range(1, p.g + p.h + 1):
        rels.append(make_word(*theta_word(p, kind=t, n=0).letters(), X))
    rels.append(make_word(*_v_parts(p, 1), X, Y, X))
    powers = {2 ** a for a in range(1, p.g)}
    for t in range(p.eta - 1):
        if p.eta - t in powers:
            continue
        rels.append(make_word(*mu_word(p, n=0, i=t + 2).letters(), Y))
    assert len(rels) == p.q + p.h + p.eta
    return Presentation(tuple(rels))
