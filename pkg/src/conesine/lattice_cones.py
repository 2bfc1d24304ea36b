"""Exact integer geometry of rational convex cones.

Everything in this module runs on Python integers, so all geometric
predicates (primitivity, goodness, adjacency, wedge subdivision, face
transforms) are exact.  Conventions used throughout the package:

* A cone is cut out by inward normals: ``C = {x : x . v >= 0 for all v}``.
* ``det2``/``det3`` are determinants of stacked row vectors, so in 2d
  ``det2(a, b) > 0`` means ``b`` lies counterclockwise of ``a``.
* A half-open wedge with normals ``(v1, v2)`` is
  ``{x : x . v1 >= 0, x . v2 < 0}``; for ``det2(v1, v2) >= 1`` this is the
  counterclockwise sector from the edge ray of ``v1`` (included) to the edge
  ray of ``v2`` (excluded), of angle below 180 degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


# ---------------------------------------------------------------------------
# small exact helpers


def _as_ivec(v: Sequence[int], name: str = "vector") -> IntVector:
    try:
        out = tuple(int(c) for c in v)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a sequence of integers: {v!r}") from exc
    for c, o in zip(v, out):
        if o != c:
            raise DomainError(f"{name} must have integer entries: {v!r}")
    if not out:
        raise DomainError(f"{name} must be non-empty")
    return out


def vec_gcd(v: Sequence[int]) -> int:
    g = 0
    for c in v:
        g = gcd(g, abs(int(c)))
    return g


def is_primitive(v: Sequence[int]) -> bool:
    """True if the integer vector is nonzero with coprime entries."""
    w = _as_ivec(v)
    if all(c == 0 for c in w):
        raise DomainError("the zero vector is neither primitive nor a valid normal")
    return vec_gcd(w) == 1


def primitive_part(v: Sequence[int]) -> IntVector:
    """The primitive vector on the same ray (v divided by the gcd of entries)."""
    w = _as_ivec(v)
    g = vec_gcd(w)
    if g == 0:
        raise DomainError("the zero vector has no primitive part")
    return tuple(c // g for c in w)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def det2(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def cross3(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def det3(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    cx = cross3(b, c)
    return a[0] * cx[0] + a[1] * cx[1] + a[2] * cx[2]


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def mat_vec(m: IntMatrix, v: Sequence) -> tuple:
    """Matrix times vector; entries may be ints or complex numbers."""
    if len(m[0]) != len(v):
        raise DomainError(f"matrix of width {len(m[0])} cannot act on length-{len(v)} vector")
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


def mat_transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m))


def int_det(m: IntMatrix) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return det2(m[0], m[1])
    total = 0
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1 :] for row in m[1:])
        term = m[0][j] * int_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def _adjugate(m: IntMatrix) -> IntMatrix:
    n = len(m)
    if n == 1:
        return ((1,),)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j) for r in range(n) if r != i
            )
            cof[i][j] = (-1) ** (i + j) * int_det(minor)
    return tuple(tuple(cof[j][i] for j in range(n)) for i in range(n))


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    d = int_det(m)
    if d not in (1, -1):
        raise DomainError(f"matrix has determinant {d}, expected +-1")
    adj = _adjugate(m)
    if d == 1:
        return adj
    return tuple(tuple(-e for e in row) for row in adj)


# ---------------------------------------------------------------------------
# Smith normal form (small exact matrices)


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[tuple[int, ...], IntMatrix, IntMatrix]:
    """Smith normal form of an integer matrix.

    Returns ``(d, U, V)`` where ``U M V`` is diagonal with non-negative
    entries ``d`` satisfying the divisibility chain ``d[0] | d[1] | ...`` and
    ``U``, ``V`` unimodular.  Intended for the small matrices that appear in
    cone bookkeeping; the algorithm is the classical pivot-and-reduce loop.
    """
    m = [list(int(e) for e in row) for row in rows]
    nr = len(m)
    nc = len(m[0])
    u = [list(r) for r in identity_matrix(nr)]
    v = [list(r) for r in identity_matrix(nc)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        m[dst] = [a + k * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a + k * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in m:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(nr, nc):
        # locate a pivot of minimal absolute value in the trailing block
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t, restarting if a division leaves a remainder
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    add_row(i, t, -q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    add_col(j, t, -q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(m[i][t] == 0 for i in range(t + 1, nr)) and all(
                m[t][j] == 0 for j in range(t + 1, nc)
            ):
                break
        # enforce divisibility of the trailing block by the pivot
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % m[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if m[t][t] < 0:
            m[t] = [-e for e in m[t]]
            u[t] = [-e for e in u[t]]
        t += 1

    diag = tuple(m[i][i] for i in range(min(nr, nc)))
    return diag, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)


def solve_integer_system(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> IntVector | None:
    """One integer solution x of (rows) x = rhs, or None if none exists."""
    diag, u, v = smith_normal_form(rows)
    nr = len(rows)
    nc = len(rows[0])
    ub = mat_vec(u, tuple(int(b) for b in rhs))
    y = [0] * nc
    for i in range(nr):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % d != 0:
                return None
            y[i] = ub[i] // d
    return mat_vec(v, tuple(y))


def unimodular_with_first_column(xi: Sequence[int]) -> IntMatrix:
    """A determinant +1 integer matrix whose first column is the primitive xi."""
    col = _as_ivec(xi, "xi")
    if vec_gcd(col) != 1:
        raise DomainError(f"{col} is not primitive, cannot extend to a unimodular basis")
    n = len(col)
    # reduce col to e1 by row operations, accumulating them in u
    work = list(col)
    u = [list(r) for r in identity_matrix(n)]
    for i in range(1, n):
        if work[i] == 0:
            continue
        g, s, t = xgcd(work[0], work[i])
        # rows 0 and i are replaced by the Bezout combination and the
        # complementary one; the 2x2 block [[s, t], [-work[i]/g, work[0]/g]]
        # has determinant +1
        a0, ai = work[0], work[i]
        r0 = [s * u[0][k] + t * u[i][k] for k in range(n)]
        ri = [(-ai // g) * u[0][k] + (a0 // g) * u[i][k] for k in range(n)]
        u[0], u[i] = r0, ri
        work[0], work[i] = g, 0
    if work[0] == -1:
        u[0] = [-e for e in u[0]]
        work[0] = 1
    assert work[0] == 1
    a = unimodular_inverse(tuple(tuple(r) for r in u))
    # first column of a is xi by construction; fix the determinant sign
    if int_det(a) == -1:
        a = tuple(tuple(-row[j] if j == n - 1 else row[j] for j in range(n)) for row in a)
    assert tuple(row[0] for row in a) == col
    assert int_det(a) == 1
    return a


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class Cone:
    """A full-dimensional, strictly convex rational cone given by inward normals.

    ``normals`` must be primitive, minimal (each one carves an actual facet)
    and, in 3d, listed in cyclic facet order.  These structural invariants are
    checked exactly at construction; properties that are preconditions of
    individual operations (goodness, Gorenstein) are separate predicates.
    """

    dim: int
    normals: tuple[IntVector, ...]

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise DomainError(f"only cones of dimension 2 or 3 are supported, got {self.dim}")
        normals = tuple(_as_ivec(v, "normal") for v in self.normals)
        object.__setattr__(self, "normals", normals)
        for v in normals:
            if len(v) != self.dim:
                raise DomainError(f"normal {v} does not have {self.dim} entries")
            if not is_primitive(v):
                raise DomainError(f"normal {v} is not primitive")
        if len(set(normals)) != len(normals):
            raise DomainError("duplicate normals")
        if self.dim == 2:
            if len(normals) != 2:
                raise DomainError("a 2d cone needs exactly two normals")
            if det2(normals[0], normals[1]) == 0:
                raise DomainError("2d normals are parallel: cone is degenerate or a half-plane")
            object.__setattr__(self, "_edge_rays", self._edge_rays_2d())
        else:
            if len(normals) < 3:
                raise DomainError("a 3d cone needs at least three normals")
            object.__setattr__(self, "_edge_rays", self._validate_3d())

    # -- construction-time geometry ------------------------------------

    def _edge_rays_2d(self) -> tuple[IntVector, ...]:
        rays = []
        v_all = self.normals
        for i, v in enumerate(v_all):
            other = v_all[1 - i]
            x = (v[1], -v[0])
            s = x[0] * other[0] + x[1] * other[1]
            if s < 0:
                x = (-x[0], -x[1])
            elif s == 0:  # unreachable: normals non-parallel
                raise DomainError("degenerate 2d cone")
            rays.append(x)
        return tuple(rays)

    def _validate_3d(self) -> tuple[IntVector, ...]:
        normals = self.normals
        n = len(normals)
        # strict convexity: the normals must span all of R^3
        rank3 = any(
            det3(normals[i], normals[j], normals[k]) != 0
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(j + 1, n)
        )
        if not rank3:
            raise DomainError("normals do not span 3d space: cone contains a line")
        rays: list[IntVector] = []
        sign = 0
        for i in range(n):
            a, b = normals[i], normals[(i + 1) % n]
            w = cross3(a, b)
            if all(c == 0 for c in w):
                raise DomainError(f"consecutive normals {a}, {b} are parallel")
            x = primitive_part(w)
            dots = [sum(x[k] * v[k] for k in range(3)) for v in normals]
            if all(d >= 0 for d in dots):
                s = 1
            elif all(d <= 0 for d in dots):
                s = -1
                x = tuple(-c for c in x)
                dots = [-d for d in dots]
            else:
                raise DomainError(
                    f"normals {a} and {b} are listed as facet neighbours but share no edge: "
                    "normals are not in cyclic order or the cone is not minimal"
                )
            if sign == 0:
                sign = s
            elif s != sign and any(d != 0 for d in dots):
                raise DomainError("inconsistent facet orientation in normal list")
            for j, d in enumerate(dots):
                if j not in (i, (i + 1) % n) and d == 0:
                    raise DomainError(
                        f"edge between facets {i} and {(i + 1) % n} lies on facet {j}: "
                        "normal list is redundant or mis-ordered"
                    )
            rays.append(x)
        for i in range(n):
            if all(c == 0 for c in cross3(rays[i], rays[(i + 1) % n])) and n > 2:
                raise DomainError(f"facet {(i + 1) % n} is not two-dimensional: cone not minimal")
        return tuple(rays)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "normals": [list(v) for v in self.normals]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Cone":
        try:
            dim = data["dim"]
            normals = tuple(tuple(v) for v in data["normals"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"cone JSON must have 'dim' and 'normals': {data!r}") from exc
        return cls(dim=dim, normals=normals)


def edge_rays(cone: Cone) -> tuple[IntVector, ...]:
    """Primitive generators of the 1d faces.

    In 2d, entry i lies on the line where normal i vanishes.  In 3d, entry i
    is the edge shared by facets i and i+1 (cyclically).
    """
    return cone._edge_rays  # computed and cached at construction


def dual_contains(cone: Cone, y: Sequence, strict: bool = False) -> bool:
    """Whether y lies in the dual cone (non-negative on all of C).

    The dual is spanned by the normals; membership is tested against the edge
    rays, which is exact for integer y and a half-plane test for float y.
    With ``strict=True`` the test is for the interior.
    """
    if len(y) != cone.dim:
        raise DomainError(f"point {y!r} does not have {cone.dim} entries")
    for ray in edge_rays(cone):
        s = sum(ray[k] * y[k] for k in range(cone.dim))
        if strict:
            if not s > 0:
                return False
        else:
            if s < 0:
                return False
    return True


def contains(cone: Cone, point: Sequence[int], strict: bool = False) -> bool:
    """Exact membership of an integer point in the cone (or its interior)."""
    p = _as_ivec(point, "point")
    if len(p) != cone.dim:
        raise DomainError(f"point {p} does not have {cone.dim} entries")
    for v in cone.normals:
        s = sum(v[k] * p[k] for k in range(cone.dim))
        if (s <= 0) if strict else (s < 0):
            return False
    return True


def is_good(cone: Cone) -> bool:
    """Whether every proper face's normal set spans a saturated sublattice.

    Checked at faces of codimension below the dimension (the apex does not
    count).  For facets this is primitivity of the single normal, guaranteed
    at construction, so in 2d every valid cone qualifies.  In 3d each edge's
    pair of adjacent normals must have Smith invariants all equal to one.
    """
    if cone.dim == 2:
        return True
    n = len(cone.normals)
    for i in range(n):
        pair = (cone.normals[i], cone.normals[(i + 1) % n])
        diag, _, _ = smith_normal_form(pair)
        if any(d != 1 for d in diag):
            return False
    return True


def gorenstein_vector(cone: Cone) -> IntVector | None:
    """The integer vector pairing to 1 with every normal, if one exists.

    Such a vector is automatically primitive.  Returns None when the system
    has no integer solution.
    """
    rhs = tuple(1 for _ in cone.normals)
    sol = solve_integer_system(cone.normals, rhs)
    if sol is None:
        return None
    assert vec_gcd(sol) == 1
    return sol


# ---------------------------------------------------------------------------
# wedge subdivision


@dataclass(frozen=True)
class WedgeSubdivision:
    """A chain of primitive normals u_0 .. u_{n+1} with det2(u_i, u_{i+1}) = 1.

    The half-open wedges of consecutive pairs tile the half-open wedge of the
    endpoints; ``interior`` lists the inserted lines only.
    """

    lines: tuple[IntVector, ...]

    @property
    def interior(self) -> tuple[IntVector, ...]:
        return self.lines[1:-1]

    def __len__(self) -> int:
        return len(self.lines)


def subdivide_wedge(v1: Sequence[int], v2: Sequence[int]) -> WedgeSubdivision:
    """Unimodular subdivision of the half-open wedge {x.v1 >= 0, x.v2 < 0}.

    Requires primitive non-parallel normals with det2(v1, v2) >= 1 (the wedge
    is then the counterclockwise sector from ray(v1) to ray(v2)).  Each step
    inserts the unique primitive w with det2(g, w) = 1 whose determinant
    against the far end is reduced modulo the current one, which strictly
    decreases it; the result is the minimal chain with unit consecutive
    determinants.
    """
    g = _as_ivec(v1, "v1")
    h = _as_ivec(v2, "v2")
    if len(g) != 2 or len(h) != 2:
        raise DomainError("wedge normals must be 2d integer vectors")
    if not is_primitive(g):
        raise DomainError(f"wedge normal {g} is not primitive")
    if not is_primitive(h):
        raise DomainError(f"wedge normal {h} is not primitive")
    d = det2(g, h)
    if d == 0:
        raise DomainError(f"normals {g} and {h} are parallel: degenerate wedge")
    if d < 0:
        raise DomainError(
            f"det2({g}, {h}) = {d} < 0: the half-open wedge convention requires "
            "positive orientation (swap or negate a normal)"
        )
    lines = [g]
    while d > 1:
        gg, s, t = xgcd(g[0], g[1])
        assert gg == 1
        w0 = (-t, s)  # det2(g, w0) = g0*s + g1*t = 1
        a = det2(w0, h)
        k = a // d
        w = (w0[0] - k * g[0], w0[1] - k * g[1])
        a -= k * d
        assert 1 <= a <= d - 1 and det2(g, w) == 1
        lines.append(w)
        g = w
        d = a
    lines.append(h)
    return WedgeSubdivision(tuple(lines))


def cone_chain_2d(cone: Cone) -> WedgeSubdivision:
    """The canonical unimodular chain sweeping a 2d cone.

    Normals are labeled so det2(v1, v2) < 0; the chain runs from v1 to -v2,
    so its half-open wedges together with the closed wedge of the final pair
    cover the cone, the lower edge ray belonging to the first wedge.
    """
    if cone.dim != 2:
        raise DomainError("cone_chain_2d needs a 2d cone")
    a, b = cone.normals
    if det2(a, b) > 0:
        a, b = b, a
    return subdivide_wedge(a, (-b[0], -b[1]))


# ---------------------------------------------------------------------------
# face transforms


@dataclass(frozen=True)
class FaceTransform:
    """Unimodular change of variables attached to a 1d face.

    ``matrix`` is the (dim x dim) integer block whose inverse stacks the
    auxiliary vector ``n`` and the adjacent normals as columns; ``embedded``
    is the same block extended by a trailing 1 so it can act on parameter
    vectors with an appended constant.  ``det`` is +1 except for the one 2d
    face where the orientation forces -1.
    """

    face_id: str
    edge_ray: IntVector
    normals: tuple[IntVector, ...]
    n_vector: IntVector
    matrix: IntMatrix
    det: int

    @property
    def embedded(self) -> IntMatrix:
        d = len(self.matrix)
        rows = [tuple(row) + (0,) for row in self.matrix]
        rows.append(tuple(0 for _ in range(d)) + (1,))
        return tuple(rows)


def _min_norm_coset_rep(n: IntVector, basis: tuple[IntVector, ...]) -> IntVector:
    """Smallest representative of n + Z<basis> by squared norm, then lex order."""
    dim = len(n)
    # real least-squares shift, then search the rounded neighbourhood
    import itertools

    gram = [[sum(a[k] * b[k] for k in range(dim)) for b in basis] for a in basis]
    rhs = [-sum(a[k] * n[k] for k in range(dim)) for a in basis]
    m = len(basis)
    # solve gram * c = rhs in floats (gram is positive definite)
    if m == 1:
        c = [rhs[0] / gram[0][0]]
    else:
        det_g = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]
        c = [
            (rhs[0] * gram[1][1] - gram[0][1] * rhs[1]) / det_g,
            (gram[0][0] * rhs[1] - rhs[0] * gram[1][0]) / det_g,
        ]
    best = None
    for deltas in itertools.product(*[range(-2, 3)] * m):
        coeffs = [round(c[i]) + deltas[i] for i in range(m)]
        cand = tuple(
            n[k] + sum(coeffs[i] * basis[i][k] for i in range(m)) for k in range(dim)
        )
        key = (sum(e * e for e in cand), cand)
        if best is None or key < best:
            best = key
    return best[1]


def face_matrices(cone: Cone) -> list[FaceTransform]:
    """One unimodular transform per 1d face, in facet order.

    Each transform depends only on the face's edge ray and its adjacent
    normals.  Preconditions: the cone must be good (otherwise no integral
    transform exists at some face and a DomainError is raised).
    """
    rays = edge_rays(cone)
    out: list[FaceTransform] = []
    if cone.dim == 2:
        for i, v in enumerate(cone.normals):
            x = rays[i]
            eps = 1 if det2(x, v) > 0 else -1
            g, s, t = xgcd(v[1], -v[0])
            assert g == 1
            n0 = (eps * s, eps * t)  # det2(n0, v) = eps
            n = _min_norm_coset_rep(n0, (v,))
            cols = (n, v)
            mat = tuple(tuple(col[r] for col in cols) for r in range(2))
            kt = unimodular_inverse(mat)
            assert n[0] * x[0] + n[1] * x[1] > 0
            out.append(
                FaceTransform(
                    face_id=f"edge({x[0]},{x[1]})",
                    edge_ray=x,
                    normals=(v,),
                    n_vector=n,
                    matrix=kt,
                    det=eps,
                )
            )
        return out
    nn = len(cone.normals)
    for i in range(nn):
        a, b = cone.normals[i], cone.normals[(i + 1) % nn]
        x = rays[i]
        if det3(x, a, b) < 0:
            a, b = b, a
        w = cross3(a, b)
        if vec_gcd(w) != 1:
            raise DomainError(
                f"face with edge {x} is not good: normals {a}, {b} span a non-saturated lattice"
            )
        g2, p, q = xgcd(w[0], w[1])
        g3, s, t = xgcd(g2, w[2])
        assert g3 == 1
        n0 = (s * p, s * q, t)  # n0 . w = 1, i.e. det3(n0, a, b) = 1
        n = _min_norm_coset_rep(n0, (a, b))
        cols = (n, a, b)
        mat = tuple(tuple(col[r] for col in cols) for r in range(3))
        kt = unimodular_inverse(mat)
        assert sum(n[k] * x[k] for k in range(3)) > 0
        out.append(
            FaceTransform(
                face_id=f"edge({x[0]},{x[1]},{x[2]})",
                edge_ray=x,
                normals=(a, b),
                n_vector=n,
                matrix=kt,
                det=1,
            )
        )
    return out


def s_matrix(size: int) -> IntMatrix:
    """The determinant +1 matrix with -1 in the top right, +1 in the bottom
    left and an identity block in between."""
    if size < 2:
        raise DomainError("s_matrix needs size >= 2")
    rows = []
    for i in range(size):
        row = [0] * size
        if i == 0:
            row[size - 1] = -1
        elif i == size - 1:
            row[0] = 1
        else:
            row[i] = 1
        rows.append(tuple(row))
    return tuple(rows)


def group_action(g: IntMatrix, z: complex, omegas: Sequence[complex]) -> tuple[complex, tuple[complex, ...]]:
    """Fractional-linear action of an integer matrix on (z | omegas).

    The matrix acts on the column (omegas, 1); the last component of the
    image rescales everything.  Raises DomainError when that component
    vanishes (the action is singular there).
    """
    m = len(g)
    if len(omegas) != m - 1:
        raise DomainError(f"matrix of size {m} acts on {m - 1} parameters, got {len(omegas)}")
    w = mat_vec(g, tuple(omegas) + (1,))
    denom = w[-1]
    if abs(denom) < 1e-12:
        raise DomainError("singular action: the transformed scale vanishes")
    return z / denom, tuple(wi / denom for wi in w[:-1])


# ---------------------------------------------------------------------------
# Gorenstein frame for 3d cones


@dataclass(frozen=True)
class GorensteinFrame:
    """A 3d cone straightened so its Gorenstein vector becomes (1, 0, 0).

    ``basis`` has determinant +1 with the Gorenstein vector as first column;
    transformed normals are (1, -ell_i).  ``ell`` lists the 2d apex vectors
    of the facets in counterclockwise order (the input facet order, reversed
    if it wound clockwise), and ``chains[i]`` subdivides the half-open
    dominance wedge of facet i, spanned between the successive difference
    vectors t_{i-1} = ell_i - ell_{i-1} and t_i = ell_{i+1} - ell_i.
    """

    cone: Cone
    xi: IntVector
    basis: IntMatrix
    ell: tuple[IntVector, ...]
    chains: tuple[WedgeSubdivision, ...]

    def transformed_omegas(self, omegas: Sequence[complex]) -> tuple[complex, ...]:
        return mat_vec(mat_transpose(self.basis), omegas)

    def facet_omegas(self, omegas: Sequence[complex]) -> tuple[tuple[complex, complex], ...]:
        """Per-facet 2d parameters (w2 + ell^1 w1, w3 + ell^2 w1)."""
        w1, w2, w3 = self.transformed_omegas(omegas)
        return tuple((w2 + l[0] * w1, w3 + l[1] * w1) for l in self.ell)


def gorenstein_frame(cone: Cone) -> GorensteinFrame:
    """Straightening data for a good Gorenstein 3d cone.

    Raises DomainError when the cone is not 3d, not good, or has no
    Gorenstein vector.
    """
    if cone.dim != 3:
        raise DomainError("gorenstein_frame needs a 3d cone")
    if not is_good(cone):
        raise DomainError("cone is not good: some edge lattice is not saturated")
    xi = gorenstein_vector(cone)
    if xi is None:
        raise DomainError("cone has no Gorenstein vector")
    a = unimodular_with_first_column(xi)
    at = mat_transpose(a)

    def straighten(normals: Sequence[IntVector]) -> tuple[IntVector, ...]:
        out = []
        for v in normals:
            vp = mat_vec(at, v)
            assert vp[0] == 1
            out.append((-vp[1], -vp[2]))
        return tuple(out)

    ell = straighten(cone.normals)
    n = len(ell)
    t = [tuple(ell[(i + 1) % n][k] - ell[i][k] for k in range(2)) for i in range(n)]
    dets = [det2(t[i - 1], t[i]) for i in range(n)]
    if all(d < 0 for d in dets):
        ell = tuple(reversed(ell))
        t = [tuple(ell[(i + 1) % n][k] - ell[i][k] for k in range(2)) for i in range(n)]
        dets = [det2(t[i - 1], t[i]) for i in range(n)]
    if not all(d > 0 for d in dets):
        raise DomainError("facet apex vectors do not wind once counterclockwise")
    chains = tuple(subdivide_wedge(t[i - 1], t[i]) for i in range(n))
    return GorensteinFrame(cone=cone, xi=xi, basis=a, ell=ell, chains=chains)


# ---------------------------------------------------------------------------
# lattice enumeration (numpy, for oracles and property tests)


def lattice_points(cone: Cone, radius: int, interior: bool = False):
    """Integer points of the cone (or its interior) with sup-norm <= radius.

    Returns a numpy integer array of shape (count, dim).  Enumerates the
    cube in slices to bound memory.
    """
    import numpy as np

    normals = np.asarray(cone.normals, dtype=np.int64)
    rng = np.arange(-radius, radius + 1, dtype=np.int64)
    if cone.dim == 2:
        pts = np.stack(np.meshgrid(rng, rng, indexing="ij"), axis=-1).reshape(-1, 2)
        vals = pts @ normals.T
        mask = (vals >= 1).all(axis=1) if interior else (vals >= 0).all(axis=1)
        return pts[mask]
    slice_pts = np.stack(np.meshgrid(rng, rng, indexing="ij"), axis=-1).reshape(-1, 2)
    slice_vals = slice_pts @ normals[:, 1:].T
    chunks = []
    for x0 in range(-radius, radius + 1):
        vals = slice_vals + x0 * normals[:, 0]
        mask = (vals >= 1).all(axis=1) if interior else (vals >= 0).all(axis=1)
        if mask.any():
            sel = slice_pts[mask]
            full = np.empty((sel.shape[0], 3), dtype=np.int64)
            full[:, 0] = x0
            full[:, 1:] = sel
            chunks.append(full)
    if not chunks:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(chunks, axis=0)
