"""The logic-programming route to paracoherent extensions.

An AF becomes the normal program P_F (one rule per argument, attackers in
the negative body).  Semi-stable models come from the epistemic
kappa-transformation, semi-equilibrium models from the HT-transformation;
both keep the answer sets whose gap (beliefs ``Ka`` with ``a`` false) is
subset-minimal.  ``mes_models`` is the externally-supported variant that
minimizes shadow atoms instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .af import Framework
from .errors import InputError, PreconditionError
from .lp import Atom, AtomKind, Program, Rule, answer_sets, canonical
from .semantics import ExtensionSet


@dataclass(frozen=True)
class GapProfile:
    model: frozenset[Atom]
    gap: frozenset[Atom]

    @classmethod
    def of(cls, model: Iterable[Atom]) -> GapProfile:
        model = frozenset(model)
        return cls(model, gap(model))


def af_to_program(framework: Framework) -> Program:
    rules = []
    for i, name in enumerate(framework.args):
        attackers = [framework.args[j] for j in range(len(framework)) if framework.in_masks[i] >> j & 1]
        rules.append(Rule(frozenset({Atom.plain(name)}), neg=frozenset(Atom.plain(c) for c in attackers)))
    return Program(tuple(rules))


def _plain_only(program: Program, what: str) -> None:
    for r in program:
        for a in r.atoms():
            if a.kind is not AtomKind.PLAIN:
                raise InputError(f"{what} expects a program over plain atoms, found {a}")


def kappa_transform(program: Program) -> Program:
    """Epistemic kappa-transformation.

    Aux atoms are named ``l__<rule>_<pos>`` from the 1-based rule index and
    the 1-based position of the head atom in sorted order.  The
    self-referential instances ``λ_i ← a_i, λ_i`` are inert and omitted.
    """
    _plain_only(program, "kappa_transform")
    out: list[Rule] = []
    for idx, r in enumerate(program, start=1):
        if not r.neg:
            out.append(r)
            continue
        heads = sorted(r.head)
        lams = [Atom.aux(idx, i) for i in range(1, len(heads) + 1)]
        beliefs = frozenset(Atom.belief(c.name) for c in r.neg)
        out.append(Rule(frozenset(lams) | beliefs, r.pos))
        for a, lam in zip(heads, lams):
            out.append(Rule(frozenset({a}), frozenset({lam})))
        for lam in lams:
            for c in sorted(r.neg):
                out.append(Rule(frozenset(), frozenset({lam, c})))
        for a, lam in zip(heads, lams):
            for other in lams:
                if other != lam:
                    out.append(Rule(frozenset({lam}), frozenset({a, other})))
    return Program(tuple(out))


def is_af_shaped(program: Program) -> bool:
    """Normal, positive bodies empty, exactly one rule per head atom."""
    heads = set()
    for r in program:
        if len(r.head) != 1 or r.pos:
            return False
        (a,) = r.head
        if a in heads or a.kind is not AtomKind.PLAIN:
            return False
        heads.add(a)
    return all(c.kind is AtomKind.PLAIN for r in program for c in r.neg)


def _require_af_shape(program: Program, what: str) -> None:
    if not is_af_shaped(program):
        raise PreconditionError(
            f"{what} needs an AF-shaped program: one normal rule per head atom, empty positive bodies"
        )


def kappa_simplified(program: Program) -> Program:
    """``a | Kc1 | ... | Kcn.`` plus ``:- a, cj.`` for each AF-shaped rule."""
    _require_af_shape(program, "kappa_simplified")
    out: list[Rule] = []
    for r in program:
        if not r.neg:
            out.append(r)
            continue
        (a,) = r.head
        out.append(Rule(r.head | frozenset(Atom.belief(c.name) for c in r.neg)))
        for c in sorted(r.neg):
            out.append(Rule(frozenset(), frozenset({a, c})))
    return Program(tuple(out))


def ht_transform(program: Program) -> Program:
    """kappa_transform plus ``Ka :- a`` per signature atom plus belief copies."""
    kappa = kappa_transform(program)
    closure = [Rule(frozenset({Atom.belief(a.name)}), frozenset({a})) for a in program.signature()]
    copies = [
        Rule(
            frozenset(Atom.belief(a.name) for a in r.head | r.neg),
            frozenset(Atom.belief(b.name) for b in r.pos),
        )
        for r in program
        if r.head or r.neg or r.pos
    ]
    return Program(kappa.rules + tuple(closure) + tuple(r for r in copies if r.head or r.pos))


def gap(model: Iterable[Atom]) -> frozenset[Atom]:
    model = frozenset(model)
    return frozenset(
        a for a in model if a.kind is AtomKind.BELIEF and Atom.plain(a.name) not in model
    )


def maximal_canonical(models: Iterable[frozenset[Atom]]) -> list[frozenset[Atom]]:
    """Models whose gap is not a strict superset of another model's gap."""
    models = list(dict.fromkeys(frozenset(m) for m in models))
    gaps = [gap(m) for m in models]
    distinct = set(gaps)
    return [m for m, g in zip(models, gaps) if not any(h < g for h in distinct)]


def _epistemic(model: frozenset[Atom]) -> frozenset[Atom]:
    return frozenset(a for a in model if a.kind in (AtomKind.PLAIN, AtomKind.BELIEF))


def sst_models(program: Program, max_atoms: int | None = None) -> list[frozenset[Atom]]:
    """Semi-stable models over plain and belief atoms."""
    found = maximal_canonical(answer_sets(kappa_transform(program), max_atoms))
    return canonical(_epistemic(m) for m in found)


def seq_models(program: Program, max_atoms: int | None = None) -> list[frozenset[Atom]]:
    """Semi-equilibrium models over plain and belief atoms."""
    found = maximal_canonical(answer_sets(ht_transform(program), max_atoms))
    return canonical(_epistemic(m) for m in found)


def projected_models(models: Iterable[Iterable[Atom]]) -> list[frozenset[Atom]]:
    """Keep only the true plain atoms of each model; de-duplicate."""
    return canonical(frozenset(a for a in m if a.kind is AtomKind.PLAIN) for m in models)


def belief_view(model: Iterable[Atom]) -> frozenset[Atom]:
    """True plain atoms plus the gap: the compact form ``{a, c, e, Kf}``."""
    model = frozenset(model)
    return frozenset(a for a in model if a.kind is AtomKind.PLAIN) | gap(model)


def to_extensions(framework: Framework, interps: Iterable[Iterable[Atom]]) -> ExtensionSet:
    return ExtensionSet.from_masks(
        framework,
        (framework.mask_of(a.name for a in m if a.kind is AtomKind.PLAIN) for m in interps),
    )


def mes_program(program: Program) -> Program:
    """Externally-supported rewriting of an AF-shaped program.

    Each rule gains ``not s__c`` for every negated ``c``; each choice over a
    shadow is encoded as ``s__c :- not n__c.`` / ``n__c :- not s__c.``.
    """
    _require_af_shape(program, "mes_program")
    out: list[Rule] = []
    shadowed: dict[str, None] = {}
    for r in program:
        shadows = frozenset(Atom.shadow(c.name) for c in r.neg)
        out.append(Rule(r.head, r.pos, r.neg | shadows))
        for c in sorted(r.neg):
            shadowed.setdefault(c.name)
    order = {a.name: i for i, a in enumerate(program.signature())}
    for name in sorted(shadowed, key=order.__getitem__):
        s, n = Atom.shadow(name), Atom.complement(name)
        out.append(Rule(frozenset({s}), neg=frozenset({n})))
        out.append(Rule(frozenset({n}), neg=frozenset({s})))
    return Program(tuple(out))


def mes_models(program: Program, max_atoms: int | None = None) -> list[frozenset[Atom]]:
    """Answer sets of ``mes_program`` with subset-minimal shadow support,
    reported over plain and shadow atoms."""
    found = answer_sets(mes_program(program), max_atoms)

    def shadows(m):
        return frozenset(a for a in m if a.kind is AtomKind.SHADOW)

    parts = {shadows(m) for m in found}
    keep = [m for m in found if not any(p < shadows(m) for p in parts)]
    return canonical(frozenset(a for a in m if a.kind in (AtomKind.PLAIN, AtomKind.SHADOW)) for m in keep)
