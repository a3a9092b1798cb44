from itertools import combinations

import pytest
from hypothesis import given, settings

from paraf.af import Framework, attacked_set, is_conflict_free
from paraf.errors import InputError
from paraf.generators import gen_cycle
from paraf.semantics import Semantics as S
from paraf.semantics import extensions
from paraf.stabilizer import (
    global_minimal_stabilizers,
    guarded_shadow_framework,
    is_stabilizer,
    minimal_covers,
    minimal_stabilizers_of,
    paracoherent_extensions,
    paracoherent_via_shadow,
    paracoherent_witnesses,
)

from conftest import frameworks
from oracles import brute_para, brute_sigma_minimal, brute_stabilizer_pairs


def sets(*groups):
    return {frozenset(g) for g in groups}


def test_is_stabilizer_examples(fx):
    f = fx["fig4"]
    assert is_stabilizer(f, f.argset("b", "d"), f.argset("a"))
    assert is_stabilizer(f, f.argset("b"), f.argset("a", "e"))
    g = fx["fig1a"]
    assert is_stabilizer(g, g.empty, g.argset("a", "c", "d"))


def test_sets_with_internal_attack_have_no_stabilizer(fx):
    f = fx["fig4"]
    for mask in range(f.full + 1):
        assert not is_stabilizer(f, f.from_mask(mask), f.argset("a", "b"))
    assert minimal_stabilizers_of(f, f.argset("a", "b")) == frozenset()


def test_all_stabilizers_of_a_in_fig4(fx):
    f = fx["fig4"]
    a = f.argset("a")
    found = {frozenset(f.from_mask(m)) for m in range(f.full + 1) if is_stabilizer(f, f.from_mask(m), a)}
    assert found == sets("bd", "abd", "bde", "abde")


def test_minimal_stabilizers_of_examples(fx):
    f = fx["fig4"]
    assert {frozenset(s) for s in minimal_stabilizers_of(f, f.argset("a"))} == sets("bd")
    assert {frozenset(s) for s in minimal_stabilizers_of(f, f.argset("a", "e"))} == sets("b")
    g = fx["fig1a"]
    assert minimal_stabilizers_of(g, g.argset("a", "c", "d")) == frozenset({g.empty})


def test_global_minimal_stabilizers(fx):
    assert global_minimal_stabilizers(fx["fig1a"]).as_sets() == sets("")
    assert global_minimal_stabilizers(fx["fig3"]).as_sets() == sets("e", "f")
    assert global_minimal_stabilizers(fx["fig4"]).as_sets() == sets("a", "b", "c")


def test_per_extension_index(fx):
    f = fx["fig4"]
    sigma = global_minimal_stabilizers(f)
    assert sigma.per_extension[f.argset("a", "e")] == (f.argset("b"),)
    assert f.argset("a", "b") not in sigma.per_extension


@pytest.mark.parametrize(
    "name, expected",
    [
        ("fig3", ["ad", "ace", "acg", "adg"]),
        ("sec62_unattacked", ["ad", "ae"]),
        ("sec61_loop", ["ce"]),
        ("fig1a", ["acd"]),
        ("fig1b", ["cd"]),
        ("fig4", ["ae", "be", "ce"]),
    ],
)
def test_paracoherent_extensions(fx, name, expected):
    f = fx[name]
    assert paracoherent_extensions(f).as_sets() == sets(*expected)
    assert paracoherent_via_shadow(f).as_sets() == sets(*expected)


def test_empty_framework():
    f = Framework.from_edges([], [])
    assert paracoherent_extensions(f).as_sets() == {frozenset()}
    assert paracoherent_via_shadow(f).as_sets() == {frozenset()}


def test_self_loop_singleton():
    assert paracoherent_extensions(gen_cycle(1)).as_sets() == {frozenset()}


def test_guarded_shadow_single_attack():
    f = Framework.from_edges("ab", [("a", "b")])
    g = guarded_shadow_framework(f)
    assert g.args[:2] == ("a", "b")
    assert set(g.args) == {"a", "b", "s__a", "g__a"}
    assert g.edges() == {("a", "b"), ("s__a", "b"), ("s__a", "g__a"), ("g__a", "s__a")}


def test_guarded_shadow_without_attacks_is_unchanged():
    f = Framework.from_edges("abc", [])
    assert guarded_shadow_framework(f) == f


def test_guarded_shadow_fig3_size(fx):
    g = guarded_shadow_framework(fx["fig3"])
    assert sum(x.startswith("s__") for x in g.args) == 7
    assert sum(x.startswith("g__") for x in g.args) == 7
    assert fx["fig3"].edges() <= g.edges()


def test_reserved_prefix_collision():
    with pytest.raises(InputError):
        guarded_shadow_framework(Framework.from_edges(["s__a", "b"], [("s__a", "b")]))


def test_stable_case_selects_no_shadows(fx):
    f = fx["fig1a"]
    from paraf.semantics import stable_masks

    g = guarded_shadow_framework(f)
    shadows = g.mask_of(x for x in g.args if x.startswith("s__"))
    stable = stable_masks(g)
    assert min((m & shadows).bit_count() for m in stable) == 0
    assert paracoherent_via_shadow(f).as_sets() == sets("acd")


def test_minimal_covers_small():
    # universe {0,1,2}; 10 -> {0,1}, 11 -> {1,2}, 12 -> {2}, 13 -> {0}
    cover = {10: 0b011, 11: 0b110, 12: 0b100, 13: 0b001}
    got = {frozenset(i for i in range(14) if m >> i & 1) for m in minimal_covers(0b111, cover)}
    assert got == {frozenset({10, 11}), frozenset({10, 12}), frozenset({11, 13})}
    assert minimal_covers(0, cover) == [0]
    assert minimal_covers(0b1000, cover) == []


# -- properties ----------------------------------------------------------------


@settings(max_examples=80)
@given(frameworks(max_args=5))
def test_direct_route_matches_brute_force(f):
    assert global_minimal_stabilizers(f).as_sets() == brute_sigma_minimal(f)
    assert paracoherent_extensions(f).as_sets() == brute_para(f)


@settings(max_examples=40)
@given(frameworks(max_args=5))
def test_local_minimal_stabilizers_match_brute_force(f):
    pairs = brute_stabilizer_pairs(f)
    for mask in range(f.full + 1):
        a = f.from_mask(mask)
        mine = {frozenset(s) for s in minimal_stabilizers_of(f, a)}
        stabs = {s for x, s in pairs if x == frozenset(a)}
        assert mine == {s for s in stabs if not any(t < s for t in stabs)}


@given(frameworks(max_args=6))
def test_reported_minimal_stabilizers_are_locally_minimal(f):
    for a, stabs in global_minimal_stabilizers(f).per_extension.items():
        for s in stabs:
            assert is_stabilizer(f, s, a)
            members = list(s)
            for k in range(len(members)):
                for sub in combinations(members, k):
                    assert not is_stabilizer(f, f.argset(sub), a)


@given(frameworks(max_args=7))
def test_witness_and_stable_coincidence_properties(f):
    stb = extensions(f, S.STB).masks()
    para = paracoherent_extensions(f).masks()
    for w in paracoherent_witnesses(f):
        assert is_conflict_free(f, w.extension)
        assert not (w.extension & attacked_set(f, w.stabilizer)).mask
    assert (f.empty in global_minimal_stabilizers(f).minimal) == bool(stb)
    assert stb <= para
    if stb:
        assert para == stb
    assert para <= extensions(f, S.CF).masks()
    assert para


@settings(max_examples=80)
@given(frameworks(max_args=7))
def test_shadow_route_equals_direct_route(f):
    assert paracoherent_via_shadow(f) == paracoherent_extensions(f)
