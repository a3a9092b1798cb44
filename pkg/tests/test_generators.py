import pytest

from paraf.errors import InputError, ParseError
from paraf.generators import (
    SRP_A_PROFILE,
    SRP_B_PROFILE,
    PreferenceProfile,
    fixtures,
    gen_cycle,
    gen_radial_star,
    gen_random,
    gen_srp,
    radial_star_family,
)
from paraf.semantics import Semantics as S
from paraf.semantics import extensions
from paraf.stabilizer import paracoherent_extensions


def sets(*groups):
    return {frozenset(g) for g in groups}


def test_radial_star_size():
    f = gen_radial_star(5)
    assert len(f) == 11
    # n cycle edges, 2n a->b edges, n b->c edges
    assert len(f.attacks) == 20
    assert ("a5", "b1") in f.edges() and ("a5", "a1") in f.edges()


def test_radial_star_even():
    got = extensions(gen_radial_star(6), S.STB).as_sets()
    assert got == {frozenset({"a1", "a3", "a5", "c"}), frozenset({"a2", "a4", "a6", "c"})}


def test_radial_star_three():
    got = paracoherent_extensions(gen_radial_star(3)).as_sets()
    assert got == {frozenset({"c", "a1"}), frozenset({"c", "a2"}), frozenset({"c", "a3"})}
    assert set(radial_star_family(3)) == got


def test_radial_star_bounds():
    with pytest.raises(InputError):
        gen_radial_star(2)
    with pytest.raises(InputError):
        radial_star_family(4)


def test_cycles():
    assert extensions(gen_cycle(4), S.STB).as_sets() == {frozenset({"a1", "a3"}), frozenset({"a2", "a4"})}
    one = gen_cycle(1)
    assert one.edges() == {("a1", "a1")}
    assert len(extensions(one, S.STB)) == 0
    assert paracoherent_extensions(one).as_sets() == {frozenset()}
    assert extensions(gen_cycle(2), S.STB).as_sets() == {frozenset({"a1"}), frozenset({"a2"})}


def test_random_is_deterministic():
    assert gen_random(8, 0.3, 42) == gen_random(8, 0.3, 42)
    f = gen_random(5, 0.0, 7)
    assert not f.attacks
    assert extensions(f, S.STB).as_sets() == {frozenset(f.args)}
    assert len(gen_random(2, 1.0, 7).attacks) == 4


def test_fixtures_are_stable():
    one, two = fixtures(), fixtures()
    assert one == two
    assert set(one) == {"fig1a", "fig1b", "fig3", "fig4", "sec61_loop", "sec62_unattacked", "srp_a", "srp_b"}
    assert one["fig1a"].edges() == {("a", "b"), ("c", "b"), ("b", "d")}
    assert one["sec61_loop"].edges() == {("a", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")}
    assert extensions(one["fig3"], S.SEM).as_sets() == sets("ad")


def test_srp_generator_matches_fixtures(fx):
    assert gen_srp(PreferenceProfile.parse(SRP_A_PROFILE)).same_graph(fx["srp_a"])
    assert gen_srp(PreferenceProfile.parse(SRP_B_PROFILE)).same_graph(fx["srp_b"])


def test_srp_solutions(fx):
    assert extensions(fx["srp_a"], S.STB).as_sets() == {
        frozenset({"jm", "ar", "s"}), frozenset({"am", "jr", "s"})
    }
    assert len(extensions(fx["srp_b"], S.STB)) == 0
    assert paracoherent_extensions(fx["srp_b"]).as_sets() == {
        frozenset({"jm", "s"}), frozenset({"am", "s"}), frozenset({"aj", "s"})
    }


def test_profile_parse_errors():
    with pytest.raises(ParseError, match="line 2"):
        PreferenceProfile.parse("a: b\nthis is wrong\n")
    with pytest.raises(InputError):
        PreferenceProfile.parse("a: a\n")
    with pytest.raises(InputError):
        PreferenceProfile.parse("a: alone > b\nb: a\n")
    with pytest.raises(InputError):
        PreferenceProfile.parse("a: zed\n")
    with pytest.raises(ParseError):
        PreferenceProfile.parse("a: b\na: b\nb: a\n")


def test_profile_queries():
    p = PreferenceProfile.parse(SRP_B_PROFILE)
    assert p.is_loner("s")
    assert p.prefers("m", "j", "a")
    assert not p.prefers("m", "a", "j")
    assert p.ranks("j", "s") and not p.ranks("s", "j")
