"""Route-equivalence and taxonomy checks over a single framework.

``check_framework`` returns a mapping ``check name -> passed``; the CLI's
``xcheck`` command and the acceptance suite both run it over seeded random
frameworks.
"""

from __future__ import annotations

from .af import Framework, attacked_mask, range_of
from .lp import answer_sets
from .paraco import (
    af_to_program,
    kappa_simplified,
    kappa_transform,
    mes_models,
    projected_models,
    seq_models,
    sst_models,
)
from .semantics import Semantics, extension_masks, reference_extensions
from .stabilizer import (
    global_minimal_stabilizers,
    paracoherent_extensions,
    paracoherent_via_shadow,
    paracoherent_witnesses,
)

S = Semantics


def _names(models) -> set[frozenset[str]]:
    return {frozenset(a.name for a in m) for m in projected_models(models)}


def _epistemic(models) -> set[frozenset]:
    return {frozenset(a for a in m if a.kind.name in ("PLAIN", "BELIEF")) for m in models}


def check_framework(framework: Framework, reference_up_to: int = 12) -> dict[str, bool]:
    F = framework
    sets = {sem: set(extension_masks(F, sem)) for sem in Semantics if sem is not S.PARA}
    para = paracoherent_extensions(F).masks()
    sets[S.PARA] = para
    names = lambda masks: {frozenset(F.from_mask(m)) for m in masks}  # noqa: E731
    stb = sets[S.STB]
    results: dict[str, bool] = {}

    results["taxonomy: sem ⊆ comp ⊆ adm ⊆ cf"] = sets[S.SEM] <= sets[S.COMP] <= sets[S.ADM] <= sets[S.CF]
    results["taxonomy: stb ⊆ sem, stb ⊆ stage ⊆ cf"] = stb <= sets[S.SEM] and stb <= sets[S.STAGE] <= sets[S.CF]
    results["taxonomy: stb ⊆ para ⊆ cf"] = stb <= para <= sets[S.CF]
    results["stb ≠ ∅ ⇒ stb = sem = stage"] = not stb or stb == sets[S.SEM] == sets[S.STAGE]
    results["stable extensions have full range"] = all(
        range_of(F, F.from_mask(m)).mask == F.full for m in stb
    )
    results["sem, stage nonempty"] = bool(sets[S.SEM]) and bool(sets[S.STAGE])
    if len(F) <= reference_up_to:
        results["fast enumerator = reference enumerator"] = all(
            names(sets[sem]) == reference_extensions(F, sem) for sem in Semantics if sem is not S.PARA
        )

    sigma = global_minimal_stabilizers(F)
    witnesses = paracoherent_witnesses(F)
    pairs = [(a, s) for a, stabs in sigma.per_extension.items() for s in stabs]
    results["stabilized sets are conflict-free"] = all(a.mask in sets[S.CF] for a, _ in pairs)
    results["stabilized sets avoid S+"] = all(
        attacked_mask(F, s.mask) & a.mask == 0 for a, s in pairs
    )
    results["∅ ∈ Σ_F ⇔ stb ≠ ∅"] = (F.empty in sigma.minimal) == bool(stb)
    results["witnesses cover para"] = {w.extension.mask for w in witnesses} == para
    results["stb ⊆ para"] = stb <= para
    results["stb ≠ ∅ ⇒ para = stb"] = not stb or para == stb
    results["para ≠ ∅"] = bool(para)

    program = af_to_program(F)
    sst, seq = sst_models(program), seq_models(program)
    para_names = names(para)
    results["answer sets of P_F = stb"] = _names(answer_sets(program)) == names(stb)
    results["SST^t = SEQ^t"] = _names(sst) == _names(seq)
    results["SEQ^t = para"] = _names(seq) == para_names
    results["shadow route = para"] = paracoherent_via_shadow(F).masks() == para
    results["MES^t = para"] = _names(mes_models(program)) == para_names
    results["kappa simplified ≡ kappa"] = _epistemic(answer_sets(kappa_simplified(program))) == _epistemic(
        answer_sets(kappa_transform(program))
    )
    if stb:
        results["congruence: SEQ^t = AS(P_F)"] = _names(seq) == names(stb)
    return results


def failed(results: dict[str, bool]) -> list[str]:
    return [name for name, ok in results.items() if not ok]
