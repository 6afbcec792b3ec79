from math import comb

import pytest

from suboplex import (
    CapExceededError,
    Subset,
    ValidationError,
    class_from_poset,
    homological_dimension,
    vc_dimension,
    vc_oracle,
)
from suboplex.builders import (
    CellComplexInput,
    FormulaClassSpec,
    LinearMatroid,
    UniformMatroid,
    cube_complex,
    face_poset,
    formula_class,
    lattice_of_flats,
    matroid_minor,
    simplex_input,
)
from suboplex.bundled import (
    bundled_matroids,
    triangle_square_input,
    u11_u23_direct_sum,
    u11_u23_graph,
    u11_u23_matrix,
)


def S(s: str) -> Subset:
    return Subset.from_string(s)


class TestMatroidRank:
    def test_uniform(self):
        m = UniformMatroid(2, 3)
        assert m.rank(S("111")) == 2
        assert m.rank(S("100")) == 1

    def test_flagship_matrix(self):
        m = u11_u23_matrix()
        assert m.rank(S("1111")) == 3

    def test_graphic_triangle(self):
        m = u11_u23_graph()
        assert m.rank(S("0111")) == 2

    def test_rank_axioms_spot_check(self, rng):
        for name, m in bundled_matroids().items():
            for _ in range(30):
                a = rng.getrandbits(m.m)
                b = rng.getrandbits(m.m)
                ra, rb = m.rank_mask(a), m.rank_mask(b)
                assert 0 <= ra <= bin(a).count("1"), name
                if a & b == a:
                    assert ra <= rb, name
                assert m.rank_mask(a | b) + m.rank_mask(a & b) <= ra + rb, name


class TestMatroidClosure:
    def test_uniform_singleton_closed(self):
        assert UniformMatroid(2, 3).closure(S("100")) == S("100")

    def test_flagship_pair_closes_to_triangle(self):
        assert u11_u23_matrix().closure(S("0110")) == S("0111")

    def test_flats_are_fixed_points(self):
        m = u11_u23_direct_sum()
        for f in m.flats().elements:
            assert m.closure(f) == f

    def test_poset_closure_agrees_with_matroid(self, rng):
        for name, m in bundled_matroids().items():
            if m.m > 6:
                continue
            p = m.flats()
            for _ in range(20):
                a = Subset(m.m, rng.getrandbits(m.m))
                assert p.closure(a) == m.closure(a), name


class TestLatticeOfFlats:
    def test_flagship_ten_flats(self):
        assert len(lattice_of_flats(u11_u23_direct_sum())) == 10

    def test_u23_five_flats(self):
        p = UniformMatroid(2, 3).flats()
        assert len(p) == 5
        assert p.rank() == 2

    def test_gf2_plane_with_zero_vector(self):
        cols = [tuple(v >> j & 1 for j in range(2)) for v in range(4)]
        p = LinearMatroid(2, cols).flats()
        assert len(p) == 5  # loop bottom, three lines, plane

    def test_intersection_closed(self):
        for name, m in bundled_matroids().items():
            assert m.flats().is_intersection_closed(), name

    def test_rank_matches_matroid(self):
        for name, m in bundled_matroids().items():
            assert m.flats().rank() == m.full_rank, name

    def test_cap(self):
        with pytest.raises(CapExceededError):
            UniformMatroid(2, 17).flats()


class TestMinor:
    def test_identity_minor(self):
        m = u11_u23_direct_sum()
        minor = matroid_minor(m, m.loops(), S("1111"))
        assert minor.flats() == m.flats()

    def test_flagship_interval_minor_is_u23(self):
        m = u11_u23_direct_sum()
        minor = matroid_minor(m, S("0000"), S("0111"))
        assert minor.flats() == UniformMatroid(2, 3).flats()

    def test_minor_mobius(self):
        m = u11_u23_direct_sum()
        mf = matroid_minor(m, S("0000"), S("0111")).flats()
        assert abs(mf.mobius(mf.bottom(), mf.top())) == 2

    def test_minor_lattice_is_interval(self, rng):
        # the minor's flat count and rank match the interval [F, G]
        for name, m in list(bundled_matroids().items())[:8]:
            p = m.flats()
            for f in p.elements:
                for g in p.elements:
                    if f.bits & g.bits == f.bits and f != g:
                        iv = p.interval(f, g).members
                        minor = matroid_minor(m, f, g)
                        mp = minor.flats()
                        assert len(mp) == len(iv), name
                        assert mp.rank() == iv.rank(), name

    def test_non_flat_rejected(self):
        m = u11_u23_direct_sum()
        with pytest.raises(ValidationError):
            matroid_minor(m, S("0000"), S("0110"))


class TestBasisShattering:
    def test_every_basis_is_shattered(self, rng):
        from itertools import combinations

        from suboplex import is_shattered

        for name, m in bundled_matroids().items():
            if m.m > 6:
                continue
            c = class_from_poset(m.flats())
            r = m.full_rank
            bases = [
                Subset.from_indices(m.m, combo)
                for combo in combinations(range(m.m), r)
                if m.rank(Subset.from_indices(m.m, combo)) == r
            ]
            assert bases, name
            for b in bases:
                assert is_shattered(c, b), (name, str(b))


class TestFacePoset:
    def test_segment(self):
        x = CellComplexInput.from_vertex_lists(2, [[0], [1], [0, 1]])
        p = face_poset(x)
        assert len(p) == 4  # both vertices, the segment, and the empty face

    def test_three_cube(self):
        assert len(cube_complex(3)) == 28

    def test_triangle_with_faces_is_boolean(self):
        p = face_poset(simplex_input(3))
        assert len(p) == 8
        assert p.rank() == 3

    def test_triangle_square(self):
        p = face_poset(triangle_square_input())
        assert p.is_intersection_closed()
        assert p.rank() == 3
        assert homological_dimension(class_from_poset(p)) == 3

    def test_cube_range(self):
        with pytest.raises(ValidationError):
            cube_complex(0)
        with pytest.raises(CapExceededError):
            cube_complex(5)


class TestCubeClasses:
    def test_square_count(self):
        assert len(cube_complex(2)) == 10

    def test_square_class_dimensions(self):
        c = class_from_poset(cube_complex(2))
        assert homological_dimension(c) == 3
        assert vc_dimension(c) == 2

    def test_cube_vc(self):
        c = class_from_poset(cube_complex(3))
        assert vc_oracle(c) == 3


class TestFormulaClasses:
    def test_parity_small(self):
        c, p = formula_class(FormulaClassSpec("parity_conj", 2))
        assert len(p) == 5
        assert vc_dimension(c) == 2
        assert homological_dimension(c) == 2

    def test_poly_conj_values(self):
        for d, k in [(2, 1), (2, 2), (3, 1)]:
            c, _ = formula_class(FormulaClassSpec("poly_conj", d, k=k))
            want = sum(comb(d, i) for i in range(k + 1))
            assert vc_oracle(c) == want
            assert homological_dimension(c) == want

    def test_monotone_one_cnf_three_vars(self):
        c, p = formula_class(FormulaClassSpec("monotone_kcnf", 3, k=1))
        assert 3 <= vc_oracle(c) <= homological_dimension(c) <= 4
        assert vc_oracle(c) == 3
        assert homological_dimension(c) == 3

    def test_kcnf_bounds(self):
        for d, k in [(2, 1), (3, 1)]:
            cm, _ = formula_class(FormulaClassSpec("monotone_kcnf", d, k=k))
            cg, _ = formula_class(FormulaClassSpec("kcnf", d, k=k))
            assert comb(d, k) <= vc_oracle(cm) <= homological_dimension(cm)
            assert homological_dimension(cm) <= sum(comb(d, i) for i in range(k + 1))
            assert comb(d, k) <= vc_oracle(cg) <= homological_dimension(cg)
            assert homological_dimension(cg) <= (1 << k) * comb(d, k)

    def test_csp_respects_generator_bound(self, rng):
        for _ in range(12):
            size = rng.randint(1, 6)
            gens = tuple(rng.getrandbits(8) for _ in range(size))
            c, _ = formula_class(FormulaClassSpec("csp", 3, generators=gens))
            assert homological_dimension(c) <= size

    def test_validation(self):
        with pytest.raises(ValidationError):
            FormulaClassSpec("kcnf", 3)  # missing k
        with pytest.raises(ValidationError):
            FormulaClassSpec("nonsense", 3)
        with pytest.raises(ValidationError):
            FormulaClassSpec("csp", 2)  # missing generators
        with pytest.raises(CapExceededError):
            formula_class(FormulaClassSpec("kcnf", 5, k=1))
