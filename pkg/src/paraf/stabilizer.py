"""Stabilizers and paracoherent extensions.

A set ``S`` stabilizes ``A`` when ``A+ | S+ == Ar - A``.  That equation splits
into two independent demands: ``S`` must attack every argument of
``U = Ar - (A | A+)``, and ``S`` must not attack ``A``.  So the minimal
stabilizers of ``A`` are exactly the minimal set covers of ``U`` drawn from
the pool of arguments that attack nothing in ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .af import (
    ArgSet,
    Framework,
    attacked_mask,
    check_cap,
    iter_bits,
    same_framework,
)
from .errors import BindingError, InputError
from .semantics import ExtensionSet, conflict_free_masks, stable_masks

SHADOW_PREFIX = "s__"
GUARD_PREFIX = "g__"


@dataclass(frozen=True)
class StabilizerWitness:
    extension: ArgSet
    stabilizer: ArgSet


@dataclass(frozen=True)
class SigmaF:
    """The subset-minimal stabilizers of a framework.

    ``per_extension`` maps every conflict-free set that admits a stabilizer
    to its locally minimal stabilizers.
    """

    framework: Framework
    minimal: tuple[ArgSet, ...]
    per_extension: Mapping[ArgSet, tuple[ArgSet, ...]] = field(repr=False)

    def as_sets(self) -> set[frozenset[str]]:
        return {frozenset(s) for s in self.minimal}


def _mask(framework: Framework, a: ArgSet) -> int:
    if not same_framework(framework, a.framework):
        raise BindingError("argument set is bound to a different framework")
    return a.mask


def is_stabilizer(framework: Framework, s: ArgSet, a: ArgSet) -> bool:
    sm, am = _mask(framework, s), _mask(framework, a)
    hit = attacked_mask(framework, am) | attacked_mask(framework, sm)
    return hit == framework.full & ~am


def minimal_covers(universe: int, cover: dict[int, int]) -> list[int]:
    """All subset-minimal sets ``S`` of keys with ``OR cover[x] ⊇ universe``.

    ``cover`` maps candidate index -> bitmask of the elements it covers.
    Branches on the uncovered element with fewest candidates; in branch k the
    earlier candidates for that element are banned, so each cover is produced
    once.  A partial choice in which some member has lost all its private
    elements cannot grow into a minimal cover and is cut.
    """
    cover = {x: c & universe for x, c in cover.items() if c & universe}
    found: list[int] = []

    def rec(uncovered: int, chosen: list[int], avail: set[int]) -> None:
        if not uncovered:
            found.append(sum(1 << x for x in chosen))
            return
        best = None
        for u in iter_bits(uncovered):
            cands = [x for x in sorted(avail) if cover[x] >> u & 1]
            if best is None or len(cands) < len(best):
                best = cands
                if not cands:
                    return
        avail = set(avail)
        for x in best:
            avail.discard(x)
            picked = chosen + [x]
            if _all_have_private(picked, cover, universe):
                rec(uncovered & ~cover[x], picked, avail)

    rec(universe, [], set(cover))
    return found


def _all_have_private(chosen: list[int], cover: dict[int, int], universe: int) -> bool:
    for i, y in enumerate(chosen):
        others = 0
        for j, z in enumerate(chosen):
            if i != j:
                others |= cover[z]
        if not cover[y] & ~others & universe:
            return False
    return True


def _local_minimal_masks(framework: Framework, am: int) -> list[int]:
    hit = attacked_mask(framework, am)
    if hit & am:
        return []
    universe = framework.full & ~(am | hit)
    out = framework.out_masks
    pool = {x: out[x] for x in range(len(framework)) if not out[x] & am}
    reachable = 0
    for c in pool.values():
        reachable |= c
    if universe & ~reachable:
        return []
    return minimal_covers(universe, pool)


def minimal_stabilizers_of(framework: Framework, a: ArgSet) -> frozenset[ArgSet]:
    """Subset-minimal stabilizers of ``a``; empty when ``a`` admits none."""
    am = _mask(framework, a)
    return frozenset(ArgSet(framework, s) for s in _local_minimal_masks(framework, am))


def _subset_minimal(masks) -> list[int]:
    ordered = sorted(set(masks), key=int.bit_count)
    kept: list[int] = []
    for m in ordered:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def _sigma(framework: Framework) -> tuple[list[int], dict[int, list[int]]]:
    local = {}
    for am in conflict_free_masks(framework):
        stabs = _local_minimal_masks(framework, am)
        if stabs:
            local[am] = stabs
    minimal = _subset_minimal(s for stabs in local.values() for s in stabs)
    return minimal, local


def global_minimal_stabilizers(framework: Framework, max_args: int | None = None) -> SigmaF:
    check_cap(len(framework), max_args)
    minimal, local = _sigma(framework)
    order = ExtensionSet.from_masks(framework, minimal)
    per = {
        ArgSet(framework, am): ExtensionSet.from_masks(framework, stabs).extensions
        for am, stabs in local.items()
    }
    return SigmaF(framework, order.extensions, per)


def paracoherent_witnesses(framework: Framework, max_args: int | None = None) -> list[StabilizerWitness]:
    """Every (extension, globally minimal stabilizer) pair."""
    check_cap(len(framework), max_args)
    minimal, local = _sigma(framework)
    glob = set(minimal)
    return [
        StabilizerWitness(ArgSet(framework, am), ArgSet(framework, s))
        for am, stabs in local.items()
        for s in stabs
        if s in glob
    ]


def paracoherent_extensions(framework: Framework, max_args: int | None = None) -> ExtensionSet:
    check_cap(len(framework), max_args)
    minimal, local = _sigma(framework)
    glob = set(minimal)
    return ExtensionSet.from_masks(
        framework, (am for am, stabs in local.items() if glob.intersection(stabs))
    )


def guarded_shadow_framework(framework: Framework) -> Framework:
    """Add, per attacking argument ``x``, a shadow ``s__x`` hitting x's targets.

    Each shadow is paired with a guard ``g__x`` in mutual attack, so a stable
    extension of the result may take the shadow or leave it out.  The
    original arguments keep their indices.
    """
    for name in framework.args:
        if name.startswith((SHADOW_PREFIX, GUARD_PREFIX)):
            raise InputError(f"argument {name!r} collides with a reserved prefix")
    args = list(framework.args)
    edges = [(framework.args[a], framework.args[b]) for a, b in sorted(framework.attacks)]
    for i, name in enumerate(framework.args):
        targets = framework.out_masks[i]
        if not targets:
            continue
        shadow, guard = SHADOW_PREFIX + name, GUARD_PREFIX + name
        args += [shadow, guard]
        edges += [(shadow, framework.args[t]) for t in iter_bits(targets)]
        edges += [(shadow, guard), (guard, shadow)]
    return Framework.from_edges(args, edges)


def paracoherent_via_shadow(framework: Framework, max_args: int | None = None) -> ExtensionSet:
    """Paracoherent extensions as shadow-minimal stable extensions.

    The cap applies to the input framework; the enlarged one is searched by
    the labelling enumerator rather than by subset enumeration.
    """
    check_cap(len(framework), max_args)
    enlarged = guarded_shadow_framework(framework)
    shadows = enlarged.mask_of(
        SHADOW_PREFIX + framework.args[i] for i in range(len(framework)) if framework.out_masks[i]
    )
    stable = stable_masks(enlarged)
    parts = _subset_minimal(m & shadows for m in stable)
    keep = set(parts)
    original = framework.full
    return ExtensionSet.from_masks(framework, (m & original for m in stable if m & shadows in keep))
