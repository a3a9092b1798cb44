"""Exhaustive enumerators for the classical semantics.

``extensions`` is the fast path: conflict-free sets are generated by
backtracking, stable extensions by a labelling search, and the maximality
semantics filter by range.  ``reference_extensions`` checks each definition
subset by subset and exists only to cross-check the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

from .af import (
    ArgSet,
    Framework,
    attacked_mask,
    check_cap,
    iter_bits,
    same_framework,
)
from .errors import BindingError, DispatchError, InputError


class Semantics(Enum):
    CF = "cf"
    ADM = "adm"
    COMP = "com"
    STB = "stb"
    SEM = "sem"
    STAGE = "stage"
    PARA = "para"

    @classmethod
    def parse(cls, text: str) -> Semantics:
        key = text.strip().lower()
        aliases = {"comp": "com", "cmp": "com", "stable": "stb", "semi-stable": "sem"}
        key = aliases.get(key, key)
        for sem in cls:
            if sem.value == key or sem.name.lower() == key:
                return sem
        raise InputError(f"unknown semantics {text!r}")


def extension_key(framework: Framework, mask: int) -> tuple[int, list[str]]:
    """Canonical order: cardinality first, then the sorted member names."""
    args = framework.args
    return mask.bit_count(), sorted(args[i] for i in iter_bits(mask))


@dataclass(frozen=True)
class ExtensionSet:
    """Canonically ordered, duplicate-free extensions of one framework."""

    framework: Framework
    extensions: tuple[ArgSet, ...]

    @classmethod
    def from_masks(cls, framework: Framework, masks: Iterable[int]) -> ExtensionSet:
        ordered = sorted(set(masks), key=lambda m: extension_key(framework, m))
        return cls(framework, tuple(ArgSet(framework, m) for m in ordered))

    def __iter__(self) -> Iterator[ArgSet]:
        return iter(self.extensions)

    def __len__(self) -> int:
        return len(self.extensions)

    def __getitem__(self, i: int) -> ArgSet:
        return self.extensions[i]

    def __contains__(self, a: ArgSet) -> bool:
        if not isinstance(a, ArgSet):
            return False
        if not same_framework(a.framework, self.framework):
            raise BindingError("argument set is bound to a different framework")
        return a in self.extensions

    def __bool__(self) -> bool:
        return bool(self.extensions)

    def masks(self) -> set[int]:
        return {a.mask for a in self.extensions}

    def as_sets(self) -> set[frozenset[str]]:
        return {frozenset(a) for a in self.extensions}

    def names(self) -> list[list[str]]:
        return [a.names() for a in self.extensions]


# -- fast path ---------------------------------------------------------------


def conflict_free_masks(framework: Framework) -> list[int]:
    n = len(framework)
    out, inn = framework.out_masks, framework.in_masks
    selfatt = framework.self_attacking
    found: list[int] = []

    def rec(i: int, mask: int, blocked: int) -> None:
        if i == n:
            found.append(mask)
            return
        rec(i + 1, mask, blocked)
        bit = 1 << i
        if not (blocked | selfatt) & bit:
            rec(i + 1, mask | bit, blocked | out[i] | inn[i])

    rec(0, 0, 0)
    return found


def defended_mask(framework: Framework, mask: int) -> int:
    """Arguments all of whose attackers are attacked by ``mask``."""
    hit = attacked_mask(framework, mask)
    inn = framework.in_masks
    return sum(1 << a for a in range(len(framework)) if inn[a] & ~hit == 0)


def stable_masks(framework: Framework) -> list[int]:
    """Stable extensions by labelling search (no cap check here)."""
    n = len(framework)
    out, inn = framework.out_masks, framework.in_masks
    selfatt = framework.self_attacking
    found: list[int] = []

    def rec(i: int, inside: int, hit: int, blocked: int, pending: int) -> None:
        # pending: arguments labelled out that nothing inside attacks yet;
        # each needs a still-addable attacker with index >= i.
        rest = ~((1 << i) - 1) & ~blocked
        p = pending
        while p:
            low = p & -p
            if not inn[low.bit_length() - 1] & rest:
                return
            p ^= low
        if i == n:
            found.append(inside)
            return
        bit = 1 << i
        if not blocked & bit:
            new_hit = hit | out[i]
            rec(i + 1, inside | bit, new_hit, blocked | out[i] | inn[i], pending & ~new_hit)
        if not hit & bit:
            rec(i + 1, inside, hit, blocked, pending | bit)
        else:
            rec(i + 1, inside, hit, blocked, pending)

    rec(0, 0, 0, selfatt, 0)
    return found


def maximal_by_range(framework: Framework, masks: Iterable[int]) -> list[int]:
    """Keep the masks whose range is not strictly contained in another's."""
    masks = list(masks)
    ranges = {m: m | attacked_mask(framework, m) for m in masks}
    maximal: list[int] = []
    for r in sorted(set(ranges.values()), key=lambda r: -r.bit_count()):
        if not any(r & ~big == 0 for big in maximal):
            maximal.append(r)
    keep = set(maximal)
    return [m for m in masks if ranges[m] in keep]


def extension_masks(framework: Framework, sem: Semantics) -> list[int]:
    if sem is Semantics.PARA:
        raise DispatchError("paracoherent semantics is handled by paraf.stabilizer")
    if sem is Semantics.STB:
        return stable_masks(framework)
    cf = conflict_free_masks(framework)
    if sem is Semantics.CF:
        return cf
    if sem is Semantics.STAGE:
        return maximal_by_range(framework, cf)
    adm = [m for m in cf if m & ~defended_mask(framework, m) == 0]
    if sem is Semantics.ADM:
        return adm
    comp = [m for m in adm if defended_mask(framework, m) == m]
    if sem is Semantics.COMP:
        return comp
    return maximal_by_range(framework, comp)


def extensions(framework: Framework, sem: Semantics, max_args: int | None = None) -> ExtensionSet:
    """All ``sem``-extensions of ``framework`` in canonical order."""
    if sem is Semantics.PARA:
        raise DispatchError("paracoherent semantics is handled by paraf.stabilizer")
    check_cap(len(framework), max_args)
    return ExtensionSet.from_masks(framework, extension_masks(framework, sem))


def is_extension(framework: Framework, a: ArgSet, sem: Semantics, max_args: int | None = None) -> bool:
    if not same_framework(framework, a.framework):
        raise BindingError("argument set is bound to a different framework")
    return a in extensions(framework, sem, max_args)


# -- reference path ----------------------------------------------------------


def _all_subsets(args):
    for k in range(len(args) + 1):
        yield from (frozenset(c) for c in combinations(args, k))


def reference_extensions(framework: Framework, sem: Semantics) -> set[frozenset[str]]:
    """Literal subset-by-subset reading of each definition, over names."""
    if sem is Semantics.PARA:
        raise DispatchError("paracoherent semantics is handled by paraf.stabilizer")
    ar = set(framework.args)
    att = framework.edges()

    def plus(s):
        return {b for (a, b) in att if a in s}

    def cf(s):
        return not any((a, b) in att for a in s for b in s)

    def defends(s, x):
        return all(any((c, b) in att for c in s) for (b, y) in att if y == x)

    def adm(s):
        return cf(s) and all(defends(s, x) for x in s)

    def comp(s):
        return adm(s) and all(x in s for x in ar if defends(s, x))

    def stb(s):
        return plus(s) == ar - s

    def maximal(cands):
        rng = {s: s | plus(s) for s in cands}
        return {s for s in cands if not any(rng[s] < rng[t] for t in cands)}

    subsets = list(_all_subsets(framework.args))
    if sem is Semantics.CF:
        return {s for s in subsets if cf(s)}
    if sem is Semantics.ADM:
        return {s for s in subsets if adm(s)}
    if sem is Semantics.COMP:
        return {s for s in subsets if comp(s)}
    if sem is Semantics.STB:
        return {s for s in subsets if stb(s)}
    if sem is Semantics.SEM:
        return maximal([s for s in subsets if comp(s)])
    return maximal([s for s in subsets if cf(s)])
