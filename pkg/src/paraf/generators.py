"""Parametric framework families and the hand-coded worked examples.

Stable-roommates encoding used by ``gen_srp``
---------------------------------------------
* One argument per acceptable pair, named by concatenating the two sorted
  person names (joined with ``_`` unless both are single characters).  A
  pair is acceptable when both persons rank each other, or when one of them
  is a *loner* (their whole ranking is ``alone``) and the other ranks them.
* One argument per person who lists ``alone``, named after the person.
* Pair P attacks pair Q when they share a person who ranks their P-partner
  strictly above their Q-partner.
* Every pair attacks the ``alone`` argument of each member who has one.
  Alone arguments attack nothing.

This reproduces the two drawn SRP frameworks exactly (see ``fixtures``).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import combinations

from .af import Framework
from .errors import InputError, ParseError

ALONE = "alone"


def gen_radial_star(n: int) -> Framework:
    """Cycle a1..an, each a_i attacking b_i and b_{i+1}, every b_i attacking c."""
    if n < 3:
        raise InputError(f"radial star needs n >= 3, got {n}")
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        nxt = (i + 1) % n
        edges += [(a[i], a[nxt]), (a[i], b[i]), (a[i], b[nxt]), (b[i], "c")]
    return Framework.from_edges(a + b + ["c"], edges)


def radial_star_family(n: int) -> list[frozenset[str]]:
    """Closed-form paracoherent extensions of the odd radial star.

    A_i = {c} ∪ {a_{i-2h mod n} : h = 0..(n-3)/2} for i = 1..n.
    """
    if n < 3 or n % 2 == 0:
        raise InputError(f"closed form is stated for odd n >= 3, got {n}")
    return [
        frozenset({"c"} | {f"a{(i - 2 * h - 1) % n + 1}" for h in range((n - 3) // 2 + 1)})
        for i in range(1, n + 1)
    ]


def gen_cycle(n: int) -> Framework:
    if n < 1:
        raise InputError(f"cycle needs n >= 1, got {n}")
    a = [f"a{i}" for i in range(1, n + 1)]
    return Framework.from_edges(a, [(a[i], a[(i + 1) % n]) for i in range(n)])


def gen_random(n: int, p: float, seed: int) -> Framework:
    """Each ordered pair (self-loops included) is an attack with probability p."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = random.Random(seed)
    args = [f"a{i}" for i in range(1, n + 1)]
    edges = [(x, y) for x in args for y in args if rng.random() < p]
    return Framework.from_edges(args, edges)


@dataclass(frozen=True)
class PreferenceProfile:
    """``prefs[x]`` is x's strict ranking, best first; may end in ``alone``."""

    persons: tuple[str, ...]
    prefs: dict[str, tuple[str, ...]] = field(hash=False)

    def __post_init__(self):
        persons = set(self.persons)
        if len(persons) != len(self.persons):
            raise InputError("duplicate person in profile")
        for x in self.persons:
            ranking = self.prefs.get(x, ())
            if len(set(ranking)) != len(ranking):
                raise InputError(f"{x}: ranking repeats a name")
            if x in ranking:
                raise InputError(f"{x} ranks themselves")
            if ALONE in ranking[:-1]:
                raise InputError(f"{x}: 'alone' can only be the last option")
            for y in ranking:
                if y != ALONE and y not in persons:
                    raise InputError(f"{x} ranks unknown person {y!r}")

    @classmethod
    def parse(cls, text: str) -> PreferenceProfile:
        """One line per person: ``name: p1 > p2 > ... [> alone]``."""
        persons, prefs = [], {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("%", 1)[0].strip()
            if not line:
                continue
            m = re.fullmatch(r"([A-Za-z0-9_]+)\s*:\s*(.*)", line)
            if not m:
                raise ParseError(f"expected 'name: p1 > p2 ...', got {line!r}", lineno)
            name, rest = m.groups()
            ranking = tuple(p.strip() for p in rest.split(">")) if rest.strip() else ()
            if any(not re.fullmatch(r"[A-Za-z0-9_]+", p) for p in ranking):
                raise ParseError(f"malformed ranking for {name}", lineno)
            if name in prefs:
                raise ParseError(f"person {name!r} listed twice", lineno)
            persons.append(name)
            prefs[name] = ranking
        return cls(tuple(persons), prefs)

    def is_loner(self, x: str) -> bool:
        return self.prefs.get(x, ()) == (ALONE,)

    def ranks(self, x: str, y: str) -> bool:
        return y in self.prefs.get(x, ())

    def prefers(self, x: str, y: str, z: str) -> bool:
        """Does x strictly prefer partner y over partner z?"""
        r = self.prefs.get(x, ())
        return y in r and z in r and r.index(y) < r.index(z)


def _pair_name(x: str, y: str) -> str:
    x, y = sorted((x, y))
    return x + y if len(x) == len(y) == 1 else f"{x}_{y}"


def gen_srp(profile: PreferenceProfile) -> Framework:
    pairs = []
    for x, y in combinations(profile.persons, 2):
        mutual = profile.ranks(x, y) and profile.ranks(y, x)
        with_loner = (profile.is_loner(x) and profile.ranks(y, x)) or (
            profile.is_loner(y) and profile.ranks(x, y)
        )
        if mutual or with_loner:
            pairs.append((x, y))
    names = {p: _pair_name(*p) for p in pairs}
    alone = [x for x in profile.persons if ALONE in profile.prefs.get(x, ())]
    args = [names[p] for p in pairs] + alone
    if len(set(args)) != len(args):
        raise InputError("pair names collide with person names; rename persons")

    edges = []
    for p in pairs:
        for q in pairs:
            if p == q:
                continue
            for person in set(p) & set(q):
                mine = p[0] if p[1] == person else p[1]
                theirs = q[0] if q[1] == person else q[1]
                if profile.prefers(person, mine, theirs):
                    edges.append((names[p], names[q]))
        for person in p:
            if person in alone:
                edges.append((names[p], person))
    return Framework.from_edges(args, dict.fromkeys(edges))


SRP_A_PROFILE = """\
m: j > a > s
j: r > m > s
r: a > j > s
a: m > r > s
s: alone
"""

SRP_B_PROFILE = """\
m: j > a > s
j: a > m > s
a: m > j > s
s: alone
"""


def _srp_a() -> Framework:
    outer = ["jm", "am", "ar", "jr"]
    inner = ["js", "ms", "as", "rs"]
    edges = [(outer[i], outer[(i + 1) % 4]) for i in range(4)]
    edges += [
        ("jm", "js"), ("jm", "ms"), ("am", "ms"), ("am", "as"),
        ("ar", "as"), ("ar", "rs"), ("jr", "rs"), ("jr", "js"),
    ]
    edges += [(x, "s") for x in inner]
    return Framework.from_edges(outer + inner + ["s"], edges)


def _srp_b() -> Framework:
    outer = ["jm", "am", "aj"]
    inner = ["js", "ms", "as"]
    edges = [(outer[i], outer[(i + 1) % 3]) for i in range(3)]
    edges += [
        ("jm", "js"), ("jm", "ms"), ("am", "ms"), ("am", "as"), ("aj", "as"), ("aj", "js"),
    ]
    edges += [(x, "s") for x in inner]
    return Framework.from_edges(outer + inner + ["s"], edges)


def fixtures() -> dict[str, Framework]:
    """The worked examples, keyed by name."""
    return {
        "fig1a": Framework.from_edges("abcd", [("a", "b"), ("c", "b"), ("b", "d")]),
        "fig1b": Framework.from_edges("abcd", [("a", "a"), ("a", "b"), ("c", "b"), ("b", "d")]),
        "fig3": Framework.from_edges(
            "abcdefg",
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "c"), ("d", "e"),
             ("e", "f"), ("f", "f"), ("f", "g"), ("g", "e")],
        ),
        "fig4": Framework.from_edges(
            "abcde",
            [("b", "d"), ("b", "c"), ("a", "d"), ("a", "b"), ("c", "d"), ("c", "a"), ("d", "e")],
        ),
        "sec61_loop": Framework.from_edges(
            "abcde", [("a", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")]
        ),
        "sec62_unattacked": Framework.from_edges(
            "abcde", [("a", "b"), ("b", "c"), ("c", "c"), ("c", "d"), ("d", "e")]
        ),
        "srp_a": _srp_a(),
        "srp_b": _srp_b(),
    }
