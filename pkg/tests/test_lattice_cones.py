"""Exact integer geometry: cone validation, wedge subdivision, face transforms."""
from __future__ import annotations

import json
import math
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conesine import (
    Cone,
    DomainError,
    ParseError,
    cone_chain_2d,
    contains,
    dual_contains,
    edge_rays,
    face_matrices,
    gorenstein_vector,
    group_action,
    is_good,
    is_primitive,
    lattice_points,
    s_matrix,
    subdivide_wedge,
)
from conesine.lattice_cones import (
    det2,
    identity_matrix,
    int_det,
    mat_mul,
    mat_vec,
    primitive_part,
    smith_normal_form,
    solve_integer_system,
    unimodular_inverse,
    unimodular_with_first_column,
)


# ---------------------------------------------------------------------------
# primitivity


def test_unit_vector_is_primitive():
    assert is_primitive((0, 1))


def test_even_multiple_is_not_primitive():
    assert not is_primitive((2, 4))


def test_coprime_pair_is_primitive():
    assert is_primitive((-3, 2))


def test_zero_vector_is_rejected():
    with pytest.raises(DomainError):
        is_primitive((0, 0))


def test_primitive_part_divides_out_gcd():
    assert primitive_part((4, -6)) == (2, -3)
    assert primitive_part((0, 5, 0)) == (0, 1, 0)


# ---------------------------------------------------------------------------
# cone construction and validation


def test_cone_rejects_non_primitive_normal():
    with pytest.raises(DomainError):
        Cone(2, ((0, 1), (2, -4)))


def test_cone_rejects_redundant_2d_normal():
    with pytest.raises(DomainError):
        Cone(2, ((0, 1), (1, 1), (1, 0)))


def test_cone_rejects_parallel_normals():
    with pytest.raises(DomainError):
        Cone(2, ((0, 1), (0, -1)))


def test_3d_normals_must_be_cyclically_ordered(square):
    shuffled = (square.normals[0], square.normals[2], square.normals[1], square.normals[3])
    with pytest.raises(DomainError):
        Cone(3, shuffled)


def test_cone_json_round_trip(square):
    doc = square.to_json_dict()
    assert doc["dim"] == 3
    assert Cone.from_json_dict(json.loads(json.dumps(doc))) == square


def test_cone_from_json_requires_keys():
    with pytest.raises(ParseError):
        Cone.from_json_dict({"dim": 2})
    with pytest.raises(ParseError):
        Cone.from_json_dict({"normals": [[0, 1], [1, 0]]})


# ---------------------------------------------------------------------------
# goodness and the Gorenstein certificate


def test_standard_2d_cone_is_good(std2):
    assert is_good(std2)


def test_wedge21_is_good(w21):
    assert is_good(w21)


def test_non_saturated_face_pair_is_not_good():
    cone = Cone(3, ((1, 0, 0), (1, 2, 0), (0, 0, 1)))
    assert not is_good(cone)


def test_gorenstein_vector_triangle_cone():
    cone = Cone(3, ((1, 0, 0), (1, -1, 0), (1, 0, -1)))
    assert gorenstein_vector(cone) == (1, 0, 0)


def test_gorenstein_vector_square_cone(square):
    assert gorenstein_vector(square) == (1, 0, 0)


def test_gorenstein_vector_wedge21(w21):
    assert gorenstein_vector(w21) == (0, 1)


def test_gorenstein_vector_standard_3d(std3):
    assert gorenstein_vector(std3) == (1, 1, 1)


def test_wedge53_has_no_gorenstein_vector(w53):
    assert gorenstein_vector(w53) is None


def test_gorenstein_vector_pairs_to_one_on_every_normal(square, std3, w21):
    for cone in (square, std3, w21):
        xi = gorenstein_vector(cone)
        for v in cone.normals:
            assert sum(a * b for a, b in zip(xi, v)) == 1


# ---------------------------------------------------------------------------
# membership and dual membership


def test_interior_point_of_standard_cone(std2):
    assert dual_contains(std2, (1, 1), strict=True)


def test_outside_point_of_standard_cone(std2):
    assert not dual_contains(std2, (-1, 0))


def test_dual_boundary_point_is_not_strict(w21):
    # the normals generate the dual cone, so each normal lies on its boundary
    assert dual_contains(w21, (0, 1))
    assert not dual_contains(w21, (0, 1), strict=True)


def test_edge_rays_of_wedges(w21, w53):
    assert edge_rays(w21) == ((-1, 0), (1, 2))
    assert edge_rays(w53) == ((-1, 0), (3, 5))


def test_edge_rays_pair_to_zero_with_their_normal(square):
    rays = edge_rays(square)
    for ray in rays:
        touched = [v for v in square.normals if sum(a * b for a, b in zip(ray, v)) == 0]
        assert len(touched) == 2  # each edge of a 3d cone lies on two facets
        assert contains(square, ray)


def test_contains_strict_vs_boundary(w21):
    assert contains(w21, (0, 1), strict=True)
    assert contains(w21, (-1, 0))
    assert not contains(w21, (-1, 0), strict=True)


# ---------------------------------------------------------------------------
# wedge subdivision


def test_subdivision_trivial_quarter_turn():
    assert subdivide_wedge((0, 1), (-1, 0)).lines == ((0, 1), (-1, 0))


def test_subdivision_wedge21():
    assert subdivide_wedge((0, 1), (-2, 1)).lines == ((0, 1), (-1, 1), (-2, 1))


def test_subdivision_wedge32():
    assert subdivide_wedge((0, 1), (-3, 2)).lines == ((0, 1), (-1, 1), (-3, 2))


def test_subdivision_wedge53_chain():
    chain = subdivide_wedge((0, 1), (-5, 3))
    assert chain.lines == ((0, 1), (-1, 1), (-3, 2), (-5, 3))
    for a, b in zip(chain.lines, chain.lines[1:]):
        assert det2(a, b) == 1


def test_subdivision_rejects_parallel_inputs():
    with pytest.raises(DomainError):
        subdivide_wedge((0, 1), (0, -1))


def test_subdivision_rejects_negative_orientation():
    with pytest.raises(DomainError):
        subdivide_wedge((-2, 1), (0, 1))


def test_interior_lines_slice():
    chain = subdivide_wedge((0, 1), (-5, 3))
    assert chain.interior == ((-1, 1), (-3, 2))


def test_neighbour_sum_is_multiple_of_interior_line():
    chain = subdivide_wedge((0, 1), (-5, 3)).lines
    for j in range(1, len(chain) - 1):
        s = tuple(a + b for a, b in zip(chain[j - 1], chain[j + 1]))
        u = chain[j]
        # s = a * u for an integer a
        assert s[0] * u[1] == s[1] * u[0]
        k = (s[0] // u[0]) if u[0] != 0 else (s[1] // u[1])
        assert tuple(k * c for c in u) == s


def _brute_partition_ok(chain: tuple, radius: int) -> bool:
    """Every lattice point of the closed wedge must fall in exactly one
    half-open sub-wedge {x: det2(x, u_j) <= 0 < det2(x, u_{j+1})} ... the
    count over sub-wedges is compared against direct membership."""
    v1, v2 = chain[0], chain[-1]
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            p = (x, y)
            in_wedge = det2(v1, p) >= 0 > det2(v2, p) or p == (0, 0)
            hits = 0
            for a, b in zip(chain, chain[1:]):
                if det2(a, p) >= 0 > det2(b, p) or p == (0, 0):
                    hits += 1
            if p == (0, 0):
                # the apex is shared; it belongs to the wedge exactly once
                hits = 1
            if hits != (1 if in_wedge else 0):
                return False
    return True


def test_subdivision_partitions_lattice_ball():
    for v1, v2 in (((0, 1), (-2, 1)), ((0, 1), (-5, 3)), ((1, 1), (-1, 1))):
        chain = subdivide_wedge(v1, v2).lines
        assert _brute_partition_ok(chain, 12)


def test_subdivision_is_sl2_equivariant():
    mats = ([[1, 1], [0, 1]], [[1, 0], [1, 1]], [[2, 1], [1, 1]], [[0, -1], [1, 0]])
    pairs = (((0, 1), (-2, 1)), ((0, 1), (-5, 3)), ((1, 0), (0, 1)))
    for m in mats:
        for v1, v2 in pairs:
            base = subdivide_wedge(v1, v2).lines
            mapped = tuple(
                (m[0][0] * u[0] + m[0][1] * u[1], m[1][0] * u[0] + m[1][1] * u[1])
                for u in base
            )
            direct = subdivide_wedge(mapped[0], mapped[-1]).lines
            assert mapped == direct


@st.composite
def wedge_pairs(draw):
    """Primitive, positively oriented, non-parallel 2d vector pairs."""
    def vec():
        v = (draw(st.integers(-20, 20)), draw(st.integers(-20, 20)))
        if v == (0, 0):
            v = (0, 1)
        return primitive_part(v)

    v1 = vec()
    v2 = vec()
    if det2(v1, v2) < 0:
        v1, v2 = v2, v1
    if det2(v1, v2) == 0:
        v2 = primitive_part((v2[0] + 1, v2[1] + 2))
        if det2(v1, v2) < 0:
            v1, v2 = v2, v1
        if det2(v1, v2) == 0:
            v1, v2 = (0, 1), (-2, 1)
    return v1, v2


@settings(max_examples=60, deadline=None)
@given(wedge_pairs())
def test_property_subdivision_chain_is_unimodular(pair):
    v1, v2 = pair
    chain = subdivide_wedge(v1, v2)
    assert chain.lines[0] == v1
    assert chain.lines[-1] == v2
    for a, b in zip(chain.lines, chain.lines[1:]):
        assert det2(a, b) == 1


@settings(max_examples=15, deadline=None)
@given(wedge_pairs())
def test_property_subdivision_partitions_small_ball(pair):
    v1, v2 = pair
    chain = subdivide_wedge(v1, v2).lines
    assert _brute_partition_ok(chain, 8)


def test_cone_chain_endpoints_and_interior(w21, w53):
    chain21 = cone_chain_2d(w21)
    assert chain21.lines == ((-2, 1), (-1, 0), (0, -1))
    assert chain21.interior == ((-1, 0),)
    chain53 = cone_chain_2d(w53)
    assert chain53.lines == ((-5, 3), (-2, 1), (-1, 0), (0, -1))
    for a, b in zip(chain53.lines, chain53.lines[1:]):
        assert det2(a, b) == 1


# ---------------------------------------------------------------------------
# face transforms


def test_face_transforms_standard_cone(std2):
    fts = {ft.face_id: ft for ft in face_matrices(std2)}
    assert set(fts) == {"edge(1,0)", "edge(0,1)"}
    assert fts["edge(1,0)"].matrix == ((1, 0), (0, 1))
    assert fts["edge(0,1)"].matrix == ((0, 1), (1, 0))
    assert fts["edge(1,0)"].det == 1
    assert fts["edge(0,1)"].det == -1


def test_face_transforms_wedge21(w21):
    fts = {ft.face_id: ft for ft in face_matrices(w21)}
    assert set(fts) == {"edge(-1,0)", "edge(1,2)"}
    ft = fts["edge(1,2)"]
    assert ft.n_vector == (1, 0)
    assert ft.matrix == ((1, 2), (0, 1))
    assert ft.det == 1
    other = fts["edge(-1,0)"]
    assert other.det == -1
    assert other.matrix == ((-1, 0), (0, 1))


def test_face_transform_matrix_inverts_normal_frame(square):
    # matrix is the inverse of the integer frame [n, adjacent normals]
    for ft in face_matrices(square):
        cols = [ft.n_vector, *ft.normals]
        frame = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
        assert mat_mul(ft.matrix, frame) == identity_matrix(3)
        assert ft.det == 1
        assert int_det(ft.matrix) == 1


def test_face_transform_count_matches_edges(square, std3, w21):
    assert len(face_matrices(square)) == 4
    assert len(face_matrices(std3)) == 3
    assert len(face_matrices(w21)) == 2


def test_face_transforms_need_good_cone():
    bad = Cone(3, ((1, 0, 0), (1, 2, 0), (0, 0, 1)))
    with pytest.raises(DomainError):
        face_matrices(bad)


def test_embedded_transform_appends_identity_row(w21):
    ft = face_matrices(w21)[0]
    em = ft.embedded
    assert len(em) == 3 and len(em[0]) == 3
    assert em[2] == (0, 0, 1)
    assert all(em[i][2] == 0 for i in range(2))
    assert tuple(tuple(row[:2]) for row in em[:2]) == ft.matrix


def test_alternative_normal_choice_shifts_parameters_by_integers(w21):
    # replacing n by n + (edge-adjacent normal) keeps the determinant; after
    # the swap-and-divide action the evaluation point is unchanged and the
    # period ratios move by exact integers
    omegas = (0.3 + 0.4j, -0.2 + 0.9j)
    z = 0.17 - 0.23j
    for ft in face_matrices(w21):
        v = ft.normals[0]
        alt_cols = [tuple(n + c for n, c in zip(ft.n_vector, v)), v]
        frame = tuple(tuple(alt_cols[j][i] for j in range(2)) for i in range(2))
        assert int_det(frame) == ft.det
        alt_matrix = unimodular_inverse(frame)
        alt_embedded = tuple(row + (0,) for row in alt_matrix) + ((0, 0, 1),)
        z1, om1 = group_action(mat_mul(s_matrix(3), ft.embedded), z, omegas)
        z2, om2 = group_action(mat_mul(s_matrix(3), alt_embedded), z, omegas)
        assert abs(z1 - z2) < 1e-12
        for a, b in zip(om1, om2):
            d = b - a
            assert abs(d.real - round(d.real)) < 1e-12
            assert abs(d.imag) < 1e-12


# ---------------------------------------------------------------------------
# the antidiagonal swap matrix and the parameter action


def test_swap_matrix_size_2():
    assert s_matrix(2) == ((0, -1), (1, 0))


def test_swap_matrix_size_3():
    assert s_matrix(3) == ((0, 0, -1), (0, 1, 0), (1, 0, 0))


def test_swap_matrix_determinant_is_one():
    for size in (2, 3, 4, 5):
        assert int_det(s_matrix(size)) == 1


def test_identity_action_is_trivial():
    z, om = 0.3 + 0.2j, (1.1 + 0.4j, -0.7 + 0.2j)
    z2, om2 = group_action(identity_matrix(3), z, om)
    assert z2 == z and om2 == om


def test_swap_action_divides_by_first_period():
    z, om = 0.3 + 0.2j, (1.1 + 0.4j, -0.7 + 0.2j)
    z2, om2 = group_action(s_matrix(3), z, om)
    assert abs(z2 - z / om[0]) < 1e-15
    assert abs(om2[0] - (-1 / om[0])) < 1e-15
    assert abs(om2[1] - om[1] / om[0]) < 1e-15


def test_action_composes():
    rng = Random(7)
    a = ((1, 2, 0), (0, 1, 0), (1, 1, 1))
    b = s_matrix(3)
    ab = mat_mul(a, b)
    for _ in range(10):
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        om = (
            complex(rng.uniform(0.5, 1.5), rng.uniform(0.1, 0.9)),
            complex(rng.uniform(-1.5, -0.5), rng.uniform(0.1, 0.9)),
        )
        z1, om1 = group_action(b, z, om)
        z2, om2 = group_action(a, z1, om1)
        z3, om3 = group_action(ab, z, om)
        assert abs(z2 - z3) < 1e-12
        assert all(abs(p - q) < 1e-12 for p, q in zip(om2, om3))


def test_singular_action_is_rejected():
    g = ((1, 0, 0), (0, 1, 0), (1, 1, 0))  # last slot becomes om0 + om1 = 0
    with pytest.raises(DomainError):
        group_action(g, 0.3, (1.0 + 0.5j, -1.0 - 0.5j))


# ---------------------------------------------------------------------------
# integer linear algebra utilities


def test_unimodular_inverse_round_trip():
    m = ((3, 1), (2, 1))
    assert mat_mul(unimodular_inverse(m), m) == identity_matrix(2)


def test_unimodular_completion_of_a_column():
    m = unimodular_with_first_column((2, 1))
    assert (m[0][0], m[1][0]) == (2, 1)
    assert abs(int_det(m)) == 1


def test_smith_normal_form_diagonal():
    diag, _, _ = smith_normal_form(((2, 4), (6, 8)))
    assert diag == (2, 4)  # invariant factors of [[2,4],[6,8]]


def test_solve_integer_system():
    sol = solve_integer_system(((1, 0, 0), (1, -1, 0), (1, 0, -1)), (1, 1, 1))
    assert sol == (1, 0, 0)
    assert solve_integer_system(((0, 1), (-5, 3)), (1, 1)) is None


# ---------------------------------------------------------------------------
# lattice enumeration


def test_lattice_points_standard_small_ball(std2):
    pts = {tuple(p) for p in lattice_points(std2, 2)}
    assert pts == {(x, y) for x in range(3) for y in range(3)}


def test_lattice_points_interior_excludes_boundary(std2):
    pts = {tuple(p) for p in lattice_points(std2, 2, interior=True)}
    assert pts == {(x, y) for x in range(1, 3) for y in range(1, 3)}


def test_lattice_points_match_membership(square):
    pts = {tuple(p) for p in lattice_points(square, 4)}
    brute = {
        (x, y, z)
        for x in range(-4, 5)
        for y in range(-4, 5)
        for z in range(-4, 5)
        if contains(square, (x, y, z))
    }
    assert pts == brute
