"""Propositional disjunctive logic programs and their answer sets.

Answer sets are found in two stages.  A DPLL-style search enumerates the
supported models of the program (every answer set is one); each candidate
``M`` is then accepted iff no ``M' ⊂ M`` is a model of the reduct ``P^M``.
Both stages work on bitmasks over a fixed atom layout.

Atom text encoding (shared with ``paraf.io``)::

    a          plain atom
    k__a       belief atom Ka
    l__3_1     auxiliary atom for rule 3, head position 1
    s__a       shadow atom
    n__a       complement of a shadow atom
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator

from .errors import InputError, ParseError, PreconditionError, SizeError

DEFAULT_MAX_ATOMS = 48
MAX_ATOMS_ENV = "PARAF_MAX_ATOMS"


class AtomKind(IntEnum):
    PLAIN = 0
    BELIEF = 1
    AUX = 2
    SHADOW = 3
    COMPLEMENT = 4


PREFIX = {
    AtomKind.BELIEF: "k__",
    AtomKind.AUX: "l__",
    AtomKind.SHADOW: "s__",
    AtomKind.COMPLEMENT: "n__",
}
_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_AUX_RE = re.compile(r"(\d+)_(\d+)\Z")


@dataclass(frozen=True, order=True)
class Atom:
    kind: AtomKind
    name: str

    @classmethod
    def plain(cls, name: str) -> Atom:
        return cls(AtomKind.PLAIN, name)

    @classmethod
    def belief(cls, name: str) -> Atom:
        return cls(AtomKind.BELIEF, name)

    @classmethod
    def aux(cls, rule: int, position: int) -> Atom:
        return cls(AtomKind.AUX, f"{rule}_{position}")

    @classmethod
    def shadow(cls, name: str) -> Atom:
        return cls(AtomKind.SHADOW, name)

    @classmethod
    def complement(cls, name: str) -> Atom:
        return cls(AtomKind.COMPLEMENT, name)

    def __str__(self) -> str:
        return PREFIX.get(self.kind, "") + self.name

    def __repr__(self) -> str:
        return str(self)


def decode_atom(text: str, line: int | None = None) -> Atom:
    """Inverse of ``str(atom)``; rejects malformed reserved-prefix usage."""
    if not _NAME_RE.match(text):
        raise ParseError(f"invalid atom {text!r}", line)
    for kind, prefix in PREFIX.items():
        if text.startswith(prefix):
            payload = text[len(prefix):]
            if not payload or any(payload.startswith(p) for p in PREFIX.values()):
                raise ParseError(f"misuse of reserved prefix in {text!r}", line)
            if kind is AtomKind.AUX and not _AUX_RE.match(payload):
                raise ParseError(f"auxiliary atom {text!r} must look like l__<rule>_<pos>", line)
            return Atom(kind, payload)
    return Atom.plain(text)


def atoms_of(*texts: str) -> frozenset[Atom]:
    """``atoms_of("a", "k__f")`` -> interpretation; handy in tests and scripts."""
    return frozenset(decode_atom(t) for t in texts)


Interpretation = frozenset  # of Atom


@dataclass(frozen=True)
class Rule:
    """``head1 | head2 :- pos..., not neg...``; empty head means constraint."""

    head: frozenset[Atom]
    pos: frozenset[Atom] = frozenset()
    neg: frozenset[Atom] = frozenset()

    def __post_init__(self):
        for attr in ("head", "pos", "neg"):
            object.__setattr__(self, attr, frozenset(getattr(self, attr)))
        if not (self.head or self.pos or self.neg):
            raise InputError("a rule needs a head or a body")

    @property
    def is_normal(self) -> bool:
        return len(self.head) <= 1

    @property
    def is_constraint(self) -> bool:
        return not self.head

    def atoms(self) -> frozenset[Atom]:
        return self.head | self.pos | self.neg

    def __str__(self) -> str:
        head = " | ".join(str(a) for a in sorted(self.head))
        body = [str(a) for a in sorted(self.pos)] + [f"not {a}" for a in sorted(self.neg)]
        if not body:
            return f"{head}."
        if not head:
            return f":- {', '.join(body)}."
        return f"{head} :- {', '.join(body)}."


def rule(head: Iterable[str] | str = (), pos: Iterable[str] = (), neg: Iterable[str] = ()) -> Rule:
    """Build a rule from atom texts: ``rule("a", neg=["b"])``."""
    if isinstance(head, str):
        head = [head]
    return Rule(
        frozenset(decode_atom(t) for t in head),
        frozenset(decode_atom(t) for t in pos),
        frozenset(decode_atom(t) for t in neg),
    )


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...]

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)

    def atoms(self) -> list[Atom]:
        """Atom layout: by kind (plain first), then order of first occurrence."""
        seen: dict[Atom, int] = {}
        for r in self.rules:
            for group in (r.head, r.pos, r.neg):
                for a in sorted(group):
                    seen.setdefault(a, len(seen))
        return sorted(seen, key=lambda a: (a.kind, seen[a]))

    def signature(self) -> list[Atom]:
        return [a for a in self.atoms() if a.kind is AtomKind.PLAIN]

    @property
    def is_normal(self) -> bool:
        return all(r.is_normal for r in self.rules)

    @property
    def has_negation(self) -> bool:
        return any(r.neg for r in self.rules)


def canonical(models: Iterable[frozenset[Atom]]) -> list[frozenset[Atom]]:
    return sorted(set(models), key=lambda m: (len(m), sorted(m)))


# -- classical semantics -----------------------------------------------------


def satisfies_rule(interp: frozenset[Atom], r: Rule) -> bool:
    if r.pos <= interp and not (r.neg & interp):
        return bool(r.head & interp)
    return True


def satisfies(interp: Iterable[Atom], program: Program) -> bool:
    interp = frozenset(interp)
    return all(satisfies_rule(interp, r) for r in program)


def gl_reduct(program: Program, interp: Iterable[Atom]) -> Program:
    """Drop rules whose negative body meets ``interp``; strip the rest."""
    interp = frozenset(interp)
    return Program(
        tuple(Rule(r.head, r.pos) for r in program if not (r.neg & interp) and (r.head or r.pos))
    )


# -- search engine -----------------------------------------------------------


def max_atoms_limit(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(MAX_ATOMS_ENV)
    return int(raw) if raw else DEFAULT_MAX_ATOMS


class _Compiled:
    def __init__(self, program: Program, max_atoms: int | None):
        self.atoms = program.atoms()
        limit = max_atoms_limit(max_atoms)
        if len(self.atoms) > limit:
            raise SizeError(f"{len(self.atoms)} atoms exceeds the engine cap of {limit}")
        index = {a: i for i, a in enumerate(self.atoms)}

        def mask(group):
            return sum(1 << index[a] for a in group)

        self.n = len(self.atoms)
        self.rules = [(mask(r.head), mask(r.pos), mask(r.neg)) for r in program]
        # Clause view of each rule: (atoms that must be false, atoms that must be true)
        # with tautologies and never-applicable rules removed.
        self.clauses = [(p, h | g) for h, p, g in self.rules if not p & (h | g)]
        self.support = [[] for _ in range(self.n)]
        for h, p, g in self.rules:
            if p & g:
                continue
            for a in range(self.n):
                if h >> a & 1 and not g >> a & 1:
                    self.support[a].append((h & ~(1 << a), p, g))

    def interp(self, mask: int) -> frozenset[Atom]:
        atoms = self.atoms
        return frozenset(atoms[i] for i in range(self.n) if mask >> i & 1)


def _propagate(c: _Compiled, true: int, false: int):
    full = (1 << c.n) - 1
    while True:
        changed = False
        for neg_lits, pos_lits in c.clauses:
            if neg_lits & false or pos_lits & true:
                continue
            open_ = (neg_lits | pos_lits) & ~(true | false)
            if not open_:
                return None
            if open_ & (open_ - 1) == 0:
                if open_ & pos_lits:
                    true |= open_
                else:
                    false |= open_
                changed = True
        for a in range(c.n):
            bit = 1 << a
            if false & bit:
                continue
            viable = [s for s in c.support[a] if not (s[1] & false or s[2] & true or s[0] & true)]
            if not viable:
                if true & bit:
                    return None
                false |= bit
                changed = True
            elif len(viable) == 1 and true & bit:
                others, pos, neg = viable[0]
                if pos & ~true or (neg | others) & ~false:
                    true |= pos
                    false |= neg | others
                    changed = True
        if true & false:
            return None
        if not changed:
            return true, false & full


def _supported_models(c: _Compiled) -> Iterator[int]:
    full = (1 << c.n) - 1

    def rec(true: int, false: int):
        state = _propagate(c, true, false)
        if state is None:
            return
        true, false = state
        open_ = full & ~(true | false)
        if not open_:
            yield true
            return
        bit = open_ & -open_
        yield from rec(true, false | bit)
        yield from rec(true | bit, false)

    yield from rec(0, 0)


def _has_model(variables: int, clauses: list[tuple[int, int]]) -> bool:
    """Tiny DPLL: is there an assignment of ``variables`` satisfying all
    ``(must_false_any, must_true_any)`` clauses?"""

    def rec(true: int, false: int) -> bool:
        while True:
            changed = False
            for neg_lits, pos_lits in clauses:
                if neg_lits & false or pos_lits & true:
                    continue
                open_ = (neg_lits | pos_lits) & ~(true | false)
                if not open_:
                    return False
                if open_ & (open_ - 1) == 0:
                    if open_ & pos_lits:
                        true |= open_
                    else:
                        false |= open_
                    changed = True
            if not changed:
                break
        open_ = variables & ~(true | false)
        if not open_:
            return True
        bit = open_ & -open_
        return rec(true, false | bit) or rec(true | bit, false)

    return rec(0, 0)


def _minimal_for_reduct(c: _Compiled, m: int) -> bool:
    """Is ``m`` a minimal model of the reduct ``P^m``?  ``m`` must model ``P``."""
    # Rules with a body atom outside m, or a head atom in their own body, hold in every subset.
    relevant = [(h & m, p) for h, p, g in c.rules if not g & m and not p & ~m and h and not p & h]
    if all(h & (h - 1) == 0 for h, _ in relevant):
        least = 0
        changed = True
        while changed:
            changed = False
            for h, p in relevant:
                if not p & ~least and not h & least:
                    least |= h
                    changed = True
        return least == m
    clauses = [(p, h) for h, p in relevant]
    clauses.append((m, 0))  # some atom of m is false
    return not _has_model(m, clauses)


def answer_sets(program: Program, max_atoms: int | None = None) -> list[frozenset[Atom]]:
    """All answer sets, canonically ordered (size, then sorted atoms)."""
    c = _Compiled(program, max_atoms)
    return canonical(c.interp(m) for m in _supported_models(c) if _minimal_for_reduct(c, m))


def minimal_models(program: Program, max_atoms: int | None = None) -> list[frozenset[Atom]]:
    """Subset-minimal classical models of a negation-free program."""
    if program.has_negation:
        raise PreconditionError("minimal_models needs a program without default negation")
    return answer_sets(program, max_atoms)
