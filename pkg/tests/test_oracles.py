import pytest

from conftest import random_class
from suboplex import (
    CapExceededError,
    FunctionClass,
    IdealGenerators,
    SquarefreeMonomial,
    Subset,
    betti_oracle,
    dual_ideal,
    homological_dimension,
    regularity_oracle,
    suboplex_ideal,
    vc_dimension,
    vc_oracle,
)
from suboplex.bundled import U11_U23_BETTI_TEXT, delta_class, u11_u23_class


def mono(n: int, s0: str, s1: str) -> SquarefreeMonomial:
    return SquarefreeMonomial(Subset.from_string(s0), Subset.from_string(s1))


class TestBettiOracle:
    def test_principal_ideal(self):
        # one generator using both variables of a single ground element
        gens = IdealGenerators(1, (mono(1, "1", "1"),))
        table = betti_oracle(gens)
        assert table.entries == {(0, mono(1, "1", "1")): 1}

    def test_two_overlapping_generators(self):
        # x(0,0)x(0,1) and x(0,1)x(1,0): one first syzygy at the lcm
        gens = IdealGenerators.minimal(
            2, [mono(2, "10", "10"), mono(2, "01", "10")]
        )
        table = betti_oracle(gens)
        assert table.total(0) == 2
        assert table.get(1, mono(2, "11", "10")) == 1
        assert table.projective_dimension == 1

    def test_flagship_dual_ideal(self):
        table = betti_oracle(dual_ideal(u11_u23_class()))
        assert table.render() == U11_U23_BETTI_TEXT

    def test_arity_cap(self):
        gens = dual_ideal(FunctionClass.from_masks(7, [0]))
        with pytest.raises(CapExceededError):
            betti_oracle(gens)


class TestRegularityOracle:
    def test_flagship(self):
        c = u11_u23_class()
        assert regularity_oracle(suboplex_ideal(c)) == 4

    def test_principal(self):
        gens = IdealGenerators(1, (mono(1, "1", "1"),))
        assert regularity_oracle(gens) == 2

    def test_delta_functions(self):
        assert regularity_oracle(suboplex_ideal(delta_class(4))) == 4

    def test_regularity_relation(self, rng):
        # reg of the class ideal is one more than the projective dimension of
        # the dual, both sides computed independently
        for _ in range(40):
            c = random_class(rng, max_n=4)
            lhs = regularity_oracle(suboplex_ideal(c))
            rhs = betti_oracle(dual_ideal(c)).projective_dimension
            assert lhs == rhs + 1


class TestVcOracle:
    def test_flagship(self):
        assert vc_oracle(u11_u23_class()) == 3

    def test_delta_functions(self):
        assert vc_oracle(delta_class(4)) == 1

    def test_full_class(self):
        assert vc_oracle(FunctionClass.full_class(3)) == 3

    def test_matches_fast_path(self, rng):
        for _ in range(120):
            c = random_class(rng)
            assert vc_oracle(c) == vc_dimension(c)

    def test_vc_at_most_hdim(self, rng):
        for _ in range(60):
            c = random_class(rng, max_n=4)
            assert vc_oracle(c) <= homological_dimension(c)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            vc_oracle(FunctionClass.from_masks(21, [0]))
