"""Argumentation frameworks and bit-indexed argument sets.

Arguments are interned to dense indices at construction time; an argument
set is an ``int`` bitmask bound to its framework.  Everything downstream is
subset enumeration, so the mask helpers in this module (``attacked_mask``,
``popcount``, ``iter_bits``) are the hot path.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import BindingError, InputError, SizeError

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

DEFAULT_MAX_ARGS = 24
MAX_ARGS_ENV = "PARAF_MAX_ARGS"


def max_args_limit(override: int | None = None) -> int:
    """Enumeration cap: explicit override, else ``$PARAF_MAX_ARGS``, else 24."""
    if override is not None:
        return override
    raw = os.environ.get(MAX_ARGS_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"{MAX_ARGS_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_ARGS


def check_cap(n: int, max_args: int | None = None) -> None:
    limit = max_args_limit(max_args)
    if n > limit:
        raise SizeError(
            f"{n} arguments exceeds the enumeration cap of {limit} "
            f"(raise it with --max-args or {MAX_ARGS_ENV})"
        )


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def validate(args: Sequence[str], attacks: Iterable[tuple[str, str]]) -> list[str]:
    """Report structural defects of a raw (name-level) framework description.

    Returns an empty list when the input is well formed.  Duplicate attacks
    are reported here even though ``Framework`` silently collapses them.
    """
    defects = []
    seen: set[str] = set()
    for name in args:
        if not isinstance(name, str) or not NAME_RE.match(name):
            defects.append(f"invalid argument name {name!r}")
        if name in seen:
            defects.append(f"duplicate argument {name!r}")
        seen.add(name)
    seen_attacks: set[tuple[str, str]] = set()
    for src, tgt in attacks:
        for end in (src, tgt):
            if end not in seen:
                defects.append(f"unknown argument {end!r} in attack ({src},{tgt})")
        if (src, tgt) in seen_attacks:
            defects.append(f"duplicate attack ({src},{tgt})")
        seen_attacks.add((src, tgt))
    return defects


@dataclass(frozen=True)
class Framework:
    """Immutable attack graph; ``attacks`` holds (attacker, target) index pairs."""

    args: tuple[str, ...]
    attacks: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        seen = set()
        for name in self.args:
            if not isinstance(name, str) or not NAME_RE.match(name):
                raise InputError(f"invalid argument name {name!r}")
            if name in seen:
                raise InputError(f"duplicate argument {name!r}")
            seen.add(name)
        n = len(self.args)
        for a, b in self.attacks:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"attack ({a},{b}) references a missing argument")

    @classmethod
    def from_edges(cls, args: Iterable[str], attacks: Iterable[tuple[str, str]] = ()) -> Framework:
        args = tuple(args)
        attacks = list(attacks)
        index = {name: i for i, name in enumerate(args)}
        for src, tgt in attacks:
            for end in (src, tgt):
                if end not in index:
                    raise InputError(f"unknown argument {end!r} in attack ({src},{tgt})")
        return cls(args, frozenset((index[s], index[t]) for s, t in attacks))

    def __len__(self) -> int:
        return len(self.args)

    def __repr__(self) -> str:
        edges = ", ".join(f"{s}->{t}" for s, t in sorted(self.edges()))
        return f"Framework([{', '.join(self.args)}]; {edges})"

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.args)}

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * len(self.args)
        for a, b in self.attacks:
            out[a] |= 1 << b
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * len(self.args)
        for a, b in self.attacks:
            inn[b] |= 1 << a
        return tuple(inn)

    @cached_property
    def self_attacking(self) -> int:
        return sum(1 << a for a, b in self.attacks if a == b)

    @property
    def full(self) -> int:
        return (1 << len(self.args)) - 1

    def edges(self) -> set[tuple[str, str]]:
        return {(self.args[a], self.args[b]) for a, b in self.attacks}

    def same_graph(self, other: Framework) -> bool:
        """Equal up to the order in which arguments were declared."""
        return set(self.args) == set(other.args) and self.edges() == other.edges()

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            try:
                mask |= 1 << self.index[name]
            except KeyError:
                raise InputError(f"unknown argument {name!r}") from None
        return mask

    def argset(self, *names: str | Iterable[str]) -> ArgSet:
        """``F.argset("a", "c")`` or ``F.argset(["a", "c"])``."""
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return ArgSet(self, self.mask_of(names))

    def from_mask(self, mask: int) -> ArgSet:
        return ArgSet(self, mask)

    @property
    def empty(self) -> ArgSet:
        return ArgSet(self, 0)

    @property
    def everything(self) -> ArgSet:
        return ArgSet(self, self.full)


def same_framework(f: Framework, g: Framework) -> bool:
    return f is g or f == g


class ArgSet:
    """A set of arguments of one framework, stored as a bitmask."""

    __slots__ = ("framework", "mask")

    def __init__(self, framework: Framework, mask: int):
        if mask < 0 or mask & ~framework.full:
            raise BindingError(f"mask {mask:#x} outside the framework's argument range")
        self.framework = framework
        self.mask = mask

    def _check(self, other: ArgSet) -> None:
        if not isinstance(other, ArgSet):
            raise TypeError(f"expected ArgSet, got {type(other).__name__}")
        if not same_framework(self.framework, other.framework):
            raise BindingError("argument sets belong to different frameworks")

    def __eq__(self, other):
        if not isinstance(other, ArgSet):
            return NotImplemented
        return self.mask == other.mask and same_framework(self.framework, other.framework)

    def __hash__(self):
        return hash(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[str]:
        args = self.framework.args
        return (args[i] for i in iter_bits(self.mask))

    def __contains__(self, name: str) -> bool:
        i = self.framework.index.get(name)
        return i is not None and bool(self.mask >> i & 1)

    def __le__(self, other: ArgSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ArgSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: ArgSet) -> bool:
        return other <= self

    def __gt__(self, other: ArgSet) -> bool:
        return other < self

    def __or__(self, other: ArgSet) -> ArgSet:
        self._check(other)
        return ArgSet(self.framework, self.mask | other.mask)

    def __and__(self, other: ArgSet) -> ArgSet:
        self._check(other)
        return ArgSet(self.framework, self.mask & other.mask)

    def __sub__(self, other: ArgSet) -> ArgSet:
        self._check(other)
        return ArgSet(self.framework, self.mask & ~other.mask)

    def names(self) -> list[str]:
        """Members sorted by name."""
        return sorted(self)

    def __repr__(self) -> str:
        return "{" + ",".join(self.names()) + "}"


def attacked_mask(framework: Framework, mask: int) -> int:
    out = framework.out_masks
    hit = 0
    while mask:
        low = mask & -mask
        hit |= out[low.bit_length() - 1]
        mask ^= low
    return hit


def attackers_mask(framework: Framework, mask: int) -> int:
    inn = framework.in_masks
    hit = 0
    while mask:
        low = mask & -mask
        hit |= inn[low.bit_length() - 1]
        mask ^= low
    return hit


def _bound(framework: Framework, a: ArgSet) -> int:
    if not isinstance(a, ArgSet):
        raise TypeError(f"expected ArgSet, got {type(a).__name__}")
    if not same_framework(framework, a.framework):
        raise BindingError("argument set is bound to a different framework")
    return a.mask


def attacked_set(framework: Framework, a: ArgSet) -> ArgSet:
    """Every argument attacked by some member of ``a``."""
    return ArgSet(framework, attacked_mask(framework, _bound(framework, a)))


def is_conflict_free(framework: Framework, a: ArgSet) -> bool:
    mask = _bound(framework, a)
    return attacked_mask(framework, mask) & mask == 0


def range_of(framework: Framework, a: ArgSet) -> ArgSet:
    """``a`` together with everything it attacks."""
    mask = _bound(framework, a)
    return ArgSet(framework, mask | attacked_mask(framework, mask))
