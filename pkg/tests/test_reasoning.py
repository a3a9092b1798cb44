import pytest

from paraf.errors import InputError
from paraf.generators import gen_radial_star
from paraf.reasoning import Query, Task, answer, credulous, skeptical, solve
from paraf.semantics import Semantics as S


def test_credulous_examples(fx):
    assert credulous(gen_radial_star(5), S.PARA, "c")
    assert not credulous(gen_radial_star(3), S.STAGE, "c")
    assert not credulous(fx["fig1a"], S.STB, "b")


def test_skeptical_examples(fx):
    f = fx["sec62_unattacked"]
    assert skeptical(f, S.PARA, "a")
    assert not skeptical(f, S.STAGE, "a")


@pytest.mark.parametrize("n", [3, 5, 7])
def test_radial_star_center_is_para_skeptical(n):
    assert skeptical(gen_radial_star(n), S.PARA, "c")


def test_skeptical_is_vacuous_without_extensions(fx):
    assert skeptical(fx["fig1b"], S.STB, "b")
    assert not credulous(fx["fig1b"], S.STB, "c")


def test_unknown_argument(fx):
    with pytest.raises(InputError):
        credulous(fx["fig1a"], S.STB, "zz")


def test_answer_dispatch(fx):
    f = fx["fig3"]
    assert len(answer(f, Query(S.PARA, Task.EE))) == 4
    assert answer(f, Query(S.SEM, Task.SE)) == f.argset("a", "d")
    assert answer(fx["fig1b"], Query(S.STB, Task.SE)) is None
    assert answer(f, Query(S.PARA, Task.DC, "g")) is True
    with pytest.raises(InputError):
        answer(f, Query(S.PARA, Task.DS))


def test_solve_covers_all_semantics(fx):
    for sem in S:
        assert isinstance(len(solve(fx["fig4"], sem)), int)
