import pytest

from mfw import MFWError, generate, hom_dim, valid_specs
from mfw.corpus import FamilySpec, program_text
from mfw.dsl import parse_program
from mfw.oracle import coker_presentation, stable_hom_dim
from mfw.runner import build


def test_valid_specs():
    assert [(s.n, s.c, s.a) for s in valid_specs()] == [
        (1, 2, 1), (2, 3, 1), (3, 2, 2), (3, 4, 1), (4, 5, 1), (5, 2, 3), (5, 3, 2), (5, 6, 1)]


@pytest.mark.parametrize("n, c, a", [(3, 3, 1), (3, 1, 4), (0, 2, 1)])
def test_invalid_specs(n, c, a):
    with pytest.raises(MFWError):
        FamilySpec(n, c, a)


def test_generate_examples():
    sec, objs = generate(FamilySpec(1, 2, 1))
    assert str(sec.F) == "x^2 + w^2" and len(objs) == 1
    sec, objs = generate(FamilySpec(2, 3, 1))
    assert str(sec.F) == "x^3 + w^3" and len(objs) == 2
    sec, objs = generate(FamilySpec(3, 2, 2))
    assert str(sec.F) == "x^4 + w^2" and sec.a == 2 and len(objs) == 3


@pytest.mark.parametrize("spec", valid_specs(), ids=lambda s: s.name)
def test_directed_law_confirmed_by_oracle(spec):
    _, objs = generate(spec)
    for s, E in enumerate(objs, 1):
        for t, T in enumerate(objs, 1):
            expected = 1 if s >= t else 0
            assert hom_dim(E, T) == expected
            assert stable_hom_dim(coker_presentation(E), coker_presentation(T), 0) == expected


@pytest.mark.parametrize("spec", valid_specs(), ids=lambda s: s.name)
def test_program_text_builds_the_same_objects(spec):
    env = build(parse_program(program_text(spec)))
    sec, objs = generate(spec)
    assert [env.mfs[f"E{s}"] for s in range(1, spec.n + 1)] == objs
    assert env.sections["S"].F == sec.F
