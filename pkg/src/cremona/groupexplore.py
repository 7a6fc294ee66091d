"""Finitely generated subgroups of the Cremona group: words, commutators, derived series.

Every generator carries an explicit inverse, so no map is ever inverted by
elimination.  Derived subgroups are sampled, not enumerated: level 0 is a
ball of the Cayley graph, level ``j + 1`` the pairwise commutators of level
``j``, deduplicated and cut down to a fixed breadth.  A nontrivial element
found at level ``k`` proves that the soluble length is at least ``k + 1``;
nothing here ever certifies an upper bound.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .birmap import DEFAULT_DEGREE_CAP, BirMap, compose, compose_all, equals
from .errors import BadInverse, BadMobius, DegreeCapExceeded
from .exactalg import RatFunc


@dataclass(frozen=True)
class Generator:
    name: str
    map: BirMap
    inverse: BirMap


@dataclass
class Presentation:
    generators: List[Generator]
    provenance: str = ""
    name: str = ""
    expected_length: Optional[int] = None

    def letter_map(self, letter):
        i, sign = letter
        g = self.generators[i]
        return g.map if sign > 0 else g.inverse

    def names(self):
        return [g.name for g in self.generators]


class Word:
    """A freely reduced word; letters are ``(generator index, +1 or -1)``.

    Evaluation is right to left: ``Word([a, b])`` is the map ``a o b``.
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        out = []
        for i, s in letters:
            if s not in (1, -1):
                raise ValueError("letter exponents are +1 or -1")
            if out and out[-1] == (i, -s):
                out.pop()
            else:
                out.append((int(i), s))
        self.letters = tuple(out)

    @classmethod
    def gen(cls, i, sign=1):
        return cls([(i, sign)])

    def inverse(self):
        return Word([(i, -s) for i, s in reversed(self.letters)])

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def render(self, names=None):
        if not self.letters:
            return "id"
        parts = []
        for i, s in self.letters:
            n = names[i] if names else f"g{i + 1}"
            parts.append(n if s > 0 else f"{n}^-1")
        return "*".join(parts)

    def __repr__(self):
        return f"Word({self.render()})"

    def to_json(self):
        return [[i, s] for i, s in self.letters]


def commutator_word(u, v):
    return u * v * u.inverse() * v.inverse()


def validate(pres):
    for g in pres.generators:
        if not (compose(g.map, g.inverse, None).is_identity() and compose(g.inverse, g.map, None).is_identity()):
            raise BadInverse(g.name)
    return True


def word_eval(pres, w, degree_cap=DEFAULT_DEGREE_CAP):
    result = BirMap.identity()
    letters = w.letters
    for pos in range(len(letters) - 1, -1, -1):
        try:
            result = compose(pres.letter_map(letters[pos]), result, degree_cap)
        except DegreeCapExceeded as exc:
            raise DegreeCapExceeded(exc.degree, exc.cap, prefix=Word(letters[pos + 1:])) from None
    return result


def commutator(pres, u, v, degree_cap=DEFAULT_DEGREE_CAP):
    w = commutator_word(u, v)
    return w, word_eval(pres, w, degree_cap)


@dataclass(frozen=True)
class Caps:
    max_word_length: int = 6
    breadth: int = 64
    degree_cap: int = DEFAULT_DEGREE_CAP
    max_level: int = 6

    def to_json(self):
        return {
            "max_word_length": self.max_word_length,
            "breadth": self.breadth,
            "degree_cap": self.degree_cap,
            "max_level": self.max_level,
        }


@dataclass
class SampleElement:
    """One sampled group element with its word, value, inverse and commutator tree.

    ``tree`` is ``("word", Word)`` at level 0 and ``("comm", left, right)`` above.
    """

    word: Word
    map: BirMap
    inverse: BirMap
    tree: tuple


@dataclass
class LevelStats:
    level: int
    size: int
    candidates: int = 0
    identities: int = 0
    duplicates: int = 0
    over_degree_cap: int = 0
    truncated: int = 0

    def to_json(self):
        return dict(self.__dict__)


@dataclass
class DerivedSample:
    level: int
    elements: List[Tuple[Word, BirMap]]
    caps: Caps
    trace: List[LevelStats] = field(default_factory=list)
    records: List[SampleElement] = field(default_factory=list, repr=False)

    def exhausted(self):
        """Which caps cut something off on the way to this level."""
        out = []
        if any(s.over_degree_cap for s in self.trace):
            out.append("degree")
        if any(s.truncated for s in self.trace):
            out.append("breadth")
        return out


def _letters(pres):
    return [(i, s) for i in range(len(pres.generators)) for s in (1, -1)]


def _ball(pres, caps, stats):
    """Distinct non-identity elements of the Cayley ball, shortlex by first word found."""
    ident = BirMap.identity()
    seen = {ident.key()}
    frontier = [(Word(), ident, ident)]
    out = []
    for _length in range(caps.max_word_length):
        nxt = []
        for letter in _letters(pres):
            lmap = pres.letter_map(letter)
            linv = pres.letter_map((letter[0], -letter[1]))
            for w, m, minv in frontier:
                if w.letters and w.letters[0] == (letter[0], -letter[1]):
                    continue
                stats.candidates += 1
                try:
                    new = compose(lmap, m, caps.degree_cap)
                except DegreeCapExceeded:
                    stats.over_degree_cap += 1
                    continue
                if new.key() in seen:
                    stats.duplicates += 1
                    continue
                seen.add(new.key())
                neww = Word(((letter),) + w.letters)
                rec = (neww, new, compose(minv, linv, None))
                nxt.append(rec)
                out.append(SampleElement(neww, new, rec[2], ("word", neww)))
                if len(out) >= caps.breadth:
                    stats.truncated = 1
                    return out
        if not nxt:
            break
        frontier = nxt
    return out


def _commutator_level(prev, caps, stats):
    found = {}
    for i in range(len(prev)):
        a = prev[i]
        for j in range(i + 1, len(prev)):
            b = prev[j]
            stats.candidates += 1
            try:
                m = compose_all([a.map, b.map, a.inverse, b.inverse], caps.degree_cap)
            except DegreeCapExceeded:
                stats.over_degree_cap += 1
                continue
            if m.is_identity():
                stats.identities += 1
                continue
            if m.key() in found:
                stats.duplicates += 1
                continue
            found[m.key()] = (m, a, b)
    ordered = sorted(found.values(), key=lambda t: t[0].sort_key())
    if len(ordered) > caps.breadth:
        stats.truncated = len(ordered) - caps.breadth
        ordered = ordered[: caps.breadth]
    out = []
    for m, a, b in ordered:
        inv = compose_all([b.map, a.map, b.inverse, a.inverse], None)
        out.append(SampleElement(commutator_word(a.word, b.word), m, inv, ("comm", a.tree, b.tree)))
    return out


def derived_levels(pres, caps=Caps()):
    """Yield ``(level, elements, stats)`` for levels 0, 1, ... up to ``caps.max_level``."""
    stats = LevelStats(0, 0)
    current = _ball(pres, caps, stats)
    stats.size = len(current)
    yield 0, current, stats
    for level in range(1, caps.max_level + 1):
        if not current:
            return
        stats = LevelStats(level, 0)
        current = _commutator_level(current, caps, stats)
        stats.size = len(current)
        yield level, current, stats


def derived_sample(pres, k, caps=Caps()):
    if k < 0:
        raise ValueError("level must be non-negative")
    caps = Caps(caps.max_word_length, caps.breadth, caps.degree_cap, max(caps.max_level, k))
    trace = []
    elements = []
    for level, elems, stats in derived_levels(pres, caps):
        trace.append(stats)
        elements = elems
        if level == k:
            break
    else:
        elements = []
    if len(trace) <= k:
        elements = []
    return DerivedSample(k, [(e.word, e.map) for e in elements], caps, trace, elements)


@dataclass
class Certificate:
    bound: int
    witness_word: Optional[Word]
    witness_map: Optional[BirMap]
    witness_tree: Optional[tuple]
    level_trace: List[LevelStats]
    caps: Caps

    def to_json(self, names=None):
        return {
            "bound": self.bound,
            "witness_word": None if self.witness_word is None else self.witness_word.render(names),
            "witness_letters": None if self.witness_word is None else self.witness_word.to_json(),
            "witness_length": None if self.witness_word is None else len(self.witness_word),
            "witness_map": None if self.witness_map is None else self.witness_map.to_json(),
            "level_trace": [s.to_json() for s in self.level_trace],
            "caps": self.caps.to_json(),
        }


def solvable_length_lower_bound(pres, caps=Caps()):
    """Largest sampled level with a nontrivial element, plus one, with its witness."""
    validate(pres)
    trace = []
    best = None
    bound = 0
    for level, elems, stats in derived_levels(pres, caps):
        trace.append(stats)
        if elems:
            bound = level + 1
            best = elems[0]
    if best is None:
        return Certificate(0, None, None, None, trace, caps)
    return Certificate(bound, best.word, best.map, best.tree, trace, caps)


def evaluate_tree(pres, tree, degree_cap=None, leaf_override=None):
    """Evaluate a commutator tree bottom-up, returning ``(map, inverse)``.

    ``leaf_override`` maps leaf positions (pre-order index) to a replacement
    ``(map, inverse)`` pair, which lets tests swap single leaves for the identity.
    """
    counter = [0]

    def go(t):
        if t[0] == "word":
            idx = counter[0]
            counter[0] += 1
            if leaf_override and idx in leaf_override:
                return leaf_override[idx]
            w = t[1]
            return word_eval(pres, w, degree_cap), word_eval(pres, w.inverse(), degree_cap)
        a, ai = go(t[1])
        b, bi = go(t[2])
        return (
            compose_all([a, b, ai, bi], degree_cap),
            compose_all([b, a, bi, ai], degree_cap),
        )

    return go(tree)


def tree_leaves(tree):
    if tree[0] == "word":
        return [tree[1]]
    return tree_leaves(tree[1]) + tree_leaves(tree[2])


def tree_depth(tree):
    if tree[0] == "word":
        return 0
    return 1 + max(tree_depth(tree[1]), tree_depth(tree[2]))


def tree_word(tree):
    if tree[0] == "word":
        return tree[1]
    return commutator_word(tree_word(tree[1]), tree_word(tree[2]))


# Baumslag-Solitar embeddings


def mobius_coefficients(nu):
    """``(a, b, c, d)`` with ``nu = (a x + b) / (c x + d)``; raises BadMobius otherwise."""
    nu = RatFunc.coerce(nu)
    if "y" in nu.variables():
        raise BadMobius("a Mobius map in x may not involve y")
    for part in (nu.num, nu.den):
        if any(i > 1 for i, _j in part):
            raise BadMobius(f"{nu} is not of degree 1")
    a = nu.num.get((1, 0), 0)
    b = nu.num.get((0, 0), 0)
    c = nu.den.get((1, 0), 0)
    d = nu.den.get((0, 0), 0)
    if a * d - b * c == 0:
        raise BadMobius(f"{nu} is degenerate")
    return a, b, c, d


def mobius_inverse(nu):
    a, b, c, d = mobius_coefficients(nu)
    x = RatFunc.x()
    return (x * d - b) / (x * (-c) + a)


@dataclass
class BSReport:
    n: int
    presentation: Presentation
    relation_holds: bool
    lhs: BirMap
    rhs: BirMap

    def to_json(self):
        return {
            "n": self.n,
            "relation": "r*s*r^-1 = s^n",
            "relation_holds": self.relation_holds,
            "r": [str(f) for f in self.presentation.generators[0].map.to_affine()],
            "s": [str(f) for f in self.presentation.generators[1].map.to_affine()],
            "r_s_rinv": self.lhs.to_json(),
            "s_n": self.rhs.to_json(),
        }


def bs_presentation(n, nu, a, a_for_inverse=None):
    """Generators ``r = (nu(x), n (y + a(x)))`` and ``s = (x, y + 1)`` with their inverses."""
    n = int(n)
    if n in (0, 1):
        raise ValueError("n must differ from 0 and 1")
    x, y = RatFunc.x(), RatFunc.y()
    nu = RatFunc.coerce(nu)
    a = RatFunc.coerce(a)
    a_inv_src = a if a_for_inverse is None else RatFunc.coerce(a_for_inverse)
    for f in (a, a_inv_src):
        if "y" in f.variables():
            raise ValueError("a(x) may not involve y")
    nu_inv = mobius_inverse(nu)
    r = BirMap.from_affine(nu, (y + a) * n)
    r_inv = BirMap.from_affine(nu_inv, y / n - a_inv_src.substitute(nu_inv, y))
    s = BirMap.from_affine(x, y + 1)
    s_inv = BirMap.from_affine(x, y - 1)
    return Presentation(
        [Generator("r", r, r_inv), Generator("s", s, s_inv)],
        provenance=f"BS(1,{n}) with nu = {nu}, a = {a}",
        name=f"bs(1,{n})",
    )


def bs_embedding(n, nu, a, a_for_inverse=None):
    pres = bs_presentation(n, nu, a, a_for_inverse)
    validate(pres)
    r = pres.generators[0]
    s = pres.generators[1]
    lhs = compose_all([r.map, s.map, r.inverse], None)
    step = s.map if n > 0 else s.inverse
    rhs = compose_all([step] * abs(n), None)
    return BSReport(n, pres, equals(lhs, rhs), lhs, rhs)
