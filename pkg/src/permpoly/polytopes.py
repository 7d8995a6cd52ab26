"""Geometry of permutation polytopes with exact rational arithmetic.

The polytope of a representation is the convex hull of its vertex
matrices.  All face tests run in affine-hull coordinates: expressing
vertices in the reduced-echelon basis of span{M_g - M_e} turns each
face decision into a small strict-separation LP (dimension dim+1, not
degree^2), and the witness functional lifts back to ambient
coordinates through the basis pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, isqrt

from .intlinalg import determinant, hermite_form, saturation, smith_divisors, \
    solve_in_lattice
from .linalg import F0, express_in_rowspace, rank
from .lp import maximize, strict_separation_lp
from .reps import PermRep, difference_space


class UnsupportedShapeError(ValueError):
    pass


class PermutationPolytope:
    """Vertices are the flattened 0/1 matrices of a faithful representation,
    labelled by group-element index; vertex 0 (identity) is the base point."""

    def __init__(self, rep: PermRep):
        self.rep = rep
        self.group = rep.group
        self.degree = rep.degree
        self.vertices = rep.vertices
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex matrices are not pairwise distinct")
        space = difference_space(rep)
        self.affine_basis = space.basis
        self.pivots = space.pivots
        self.dim = space.dim
        base = self.vertices[0]
        # affine coordinates: with an echelon basis, the coefficient on
        # basis vector k is just the pivot entry of v - v_base
        self.coords = [tuple(v[p] - base[p] for p in self.pivots)
                       for v in self.vertices]
        self._lattice = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def __repr__(self):
        return "<PermutationPolytope: %d vertices, dim %d, ambient %d^2>" % (
            self.vertex_count, self.dim, self.degree)


def build_polytope(rep: PermRep, table=None) -> PermutationPolytope:
    """Polytope model of a representation; when a character table is
    supplied the rank-based dimension is cross-checked against the sum
    of schur_fraction * degree^2 over nontrivial real constituents."""
    poly = PermutationPolytope(rep)
    if table is not None:
        from .characters import constituents, real_irreducibles
        cons = constituents(rep, table)
        pred = Fraction(0)
        for real in real_irreducibles(table):
            if real.is_trivial:
                continue
            if any(i in cons.nontrivial for i in real.complex_indices):
                pred += real.schur_fraction * real.degree * real.degree
        if pred != poly.dim:
            raise RuntimeError(
                "rank dimension %d disagrees with character prediction %s"
                % (poly.dim, pred))
    return poly


def polytopes_equal(repA: PermRep, repB: PermRep) -> bool:
    """Equality of vertex sets as sets of integer vectors; differing
    ambient degrees simply compare unequal."""
    if repA.degree != repB.degree:
        return False
    return set(repA.vertices) == set(repB.vertices)


class FaceResult:
    """Outcome of a face test.

    For faces, functional is an ambient pair (vector a, offset beta)
    with a.v = beta on the subset and a.v < beta off it.  For
    non-faces, counterexample lists (element, weight) pairs: a convex
    combination of vertices equal to the subset barycenter that puts
    positive weight outside the subset.
    """

    def __init__(self, is_face, functional=None, counterexample=None):
        self.is_face = is_face
        self.functional = functional
        self.counterexample = counterexample

    def __bool__(self):
        return self.is_face


def is_face(poly: PermutationPolytope, subset) -> FaceResult:
    """Decide whether the given vertex labels are exactly the vertex set
    of a face (the full set counts: improper face)."""
    labels = sorted(set(subset))
    if not labels:
        raise ValueError("empty vertex subset")
    if labels[0] < 0 or labels[-1] >= poly.vertex_count:
        raise ValueError("vertex label out of range")
    inside = [False] * poly.vertex_count
    for g in labels:
        inside[g] = True

    eqs = [list(poly.coords[g]) + [-1] for g in labels]
    stricts = [[-c for c in poly.coords[h]] + [1]
               for h in range(poly.vertex_count) if not inside[h]]
    feasible, witness, _eps = strict_separation_lp(eqs, stricts,
                                                   ncols=poly.dim + 1)
    if feasible:
        base = poly.vertices[0]
        n2 = poly.degree * poly.degree
        a = [F0] * n2
        shift = F0
        for c, p in zip(witness[:-1], poly.pivots):
            a[p] = c
            shift += c * base[p]
        beta = witness[-1] + shift
        return FaceResult(True, functional=(tuple(a), beta))

    # not separable: exhibit a representation of the subset barycenter
    # with positive weight outside the subset
    m = len(labels)
    bary = [sum(poly.coords[g][k] for g in labels) / Fraction(m)
            for k in range(poly.dim)]
    eq_rows = [[1] * poly.vertex_count]
    rhs = [Fraction(1)]
    for k in range(poly.dim):
        eq_rows.append([poly.coords[g][k] for g in range(poly.vertex_count)])
        rhs.append(bary[k])
    obj = [0 if inside[g] else 1 for g in range(poly.vertex_count)]
    sol = maximize(eq_rows, rhs, obj)
    if sol is None or sol[0] <= 0:
        raise RuntimeError("separation failed but barycenter LP found no witness")
    weights = [(g, w) for g, w in enumerate(sol[1]) if w]
    return FaceResult(False, counterexample=tuple(weights))


class FaceCensusEntry:
    def __init__(self, elements, is_face, face_dim, witness):
        self.elements = tuple(elements)
        self.is_face = is_face
        self.face_dim = face_dim
        self.witness = witness

    @property
    def vertex_count(self) -> int:
        return len(self.elements)

    def __repr__(self):
        if self.is_face:
            return "<FaceCensusEntry: %d vertices, face of dim %d>" % (
                self.vertex_count, self.face_dim)
        return "<FaceCensusEntry: %d vertices, not a face>" % self.vertex_count


def subgroup_face_census(rep: PermRep, order: int, node_cap=10_000_000,
                         poly: PermutationPolytope | None = None):
    """Test every subgroup of the given order for being a vertex set of
    a face; entries come back in canonical subgroup order."""
    if poly is None:
        poly = build_polytope(rep)
    group = rep.group
    if group.order % order:
        raise ValueError("order %d does not divide the group order %d"
                         % (order, group.order))
    entries = []
    for sub in group.subgroups_of_order(order, node_cap=node_cap):
        res = is_face(poly, sub.elements)
        fdim = None
        if res.is_face:
            base = sub.elements[0]
            rows = [[a - b for a, b in zip(poly.coords[h], poly.coords[base])]
                    for h in sub.elements[1:]]
            fdim = rank(rows) if rows else 0
        entries.append(FaceCensusEntry(sub.elements, res.is_face, fdim,
                                       res.functional))
    return entries


class LatticeData:
    """Vertex-difference lattice vs its saturation.

    vertex_lattice and saturation_lattice are Hermite bases of
    Z-span{v - v_base} and of (R-span of the same) intersected with the
    integer lattice; index is the subgroup index of the first in the
    second; normalized_volume is set only for simplices.
    """

    def __init__(self, vertex_lattice, saturation_lattice, index,
                 normalized_volume, dim):
        self.vertex_lattice = vertex_lattice
        self.saturation_lattice = saturation_lattice
        self.index = index
        self.normalized_volume = normalized_volume
        self.dim = dim

    @property
    def euclidean_volume(self):
        if self.normalized_volume is None:
            return None
        return Fraction(self.normalized_volume, factorial(self.dim))


def lattice_structure(poly: PermutationPolytope) -> LatticeData:
    if poly._lattice is not None:
        return poly._lattice
    base = poly.vertices[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in poly.vertices[1:]]
    if not diffs:
        data = LatticeData([], [], 1, 1, 0)
        poly._lattice = data
        return data
    vlat = hermite_form(diffs)
    sat = saturation(diffs)
    coords = []
    for row in vlat:
        c = solve_in_lattice(sat, row)
        if c is None:
            raise RuntimeError("vertex lattice escapes its saturation")
        coords.append(c)
    divisors = smith_divisors(coords)
    index = 1
    for d in divisors:
        index *= d
    vol = None
    if poly.vertex_count == poly.dim + 1:
        simplex = []
        for row in diffs:
            c = solve_in_lattice(sat, row)
            if c is None:
                raise RuntimeError("vertex difference escapes the saturation")
            simplex.append(c)
        vol = abs(determinant(simplex))
        if vol.denominator != 1:
            raise RuntimeError("simplex determinant is not an integer")
        vol = int(vol)
    data = LatticeData(vlat, sat, index, vol, poly.dim)
    poly._lattice = data
    return data


def normalized_volume(poly: PermutationPolytope) -> int:
    data = lattice_structure(poly)
    if data.normalized_volume is None:
        raise UnsupportedShapeError(
            "normalized volume supports simplices only; polytope has "
            "%d vertices and dimension %d" % (poly.vertex_count, poly.dim))
    return data.normalized_volume


class Membership:
    def __init__(self, in_affine_hull, integral, in_saturation, in_vertex_lattice):
        self.in_affine_hull = in_affine_hull
        self.integral = integral
        self.in_saturation = in_saturation
        self.in_vertex_lattice = in_vertex_lattice

    def as_tuple(self):
        return (self.in_affine_hull, self.integral,
                self.in_saturation, self.in_vertex_lattice)

    def __repr__(self):
        return "Membership(aff=%s, integral=%s, saturation=%s, vertex=%s)" % \
            self.as_tuple()


def point_membership(poly: PermutationPolytope, point) -> Membership:
    """Four exact membership tests for an ambient rational vector."""
    n2 = poly.degree * poly.degree
    pt = [Fraction(v) for v in point]
    if len(pt) != n2:
        raise ValueError("point must have length %d" % n2)
    base = poly.vertices[0]
    diff = [v - b for v, b in zip(pt, base)]
    in_aff = express_in_rowspace(poly.affine_basis, poly.pivots, diff) is not None
    integral = all(v.denominator == 1 for v in pt)
    in_sat = False
    in_vert = False
    if integral:
        data = lattice_structure(poly)
        idiff = [int(v) for v in diff]
        in_sat = solve_in_lattice(data.saturation_lattice, idiff) is not None
        in_vert = solve_in_lattice(data.vertex_lattice, idiff) is not None
    return Membership(in_aff, integral, in_sat, in_vert)


class ShapeDescriptor:
    def __init__(self, kind, params, vertex_count, dim):
        self.kind = kind
        self.params = tuple(params)
        self.vertex_count = vertex_count
        self.dim = dim

    def __str__(self):
        if self.kind == "simplex":
            return "simplex(%d)" % self.params
        if self.kind == "product":
            return "product(%d, %d)" % self.params
        return "unclassified"

    def __repr__(self):
        return "<ShapeDescriptor: %s, %d vertices, dim %d>" % (
            str(self), self.vertex_count, self.dim)


def _subset_dim(poly, labels):
    base = labels[0]
    rows = [[a - b for a, b in zip(poly.coords[h], poly.coords[base])]
            for h in labels[1:]]
    return rank(rows) if rows else 0


def _is_subgroup_set(group, labels):
    if 0 not in labels:
        return False
    members = set(labels)
    return all(group.table[a][b] in members for a in labels for b in labels)


def shape_descriptor(poly: PermutationPolytope, subset=None) -> ShapeDescriptor:
    """Classify a polytope or one of its faces.

    simplex when count = dim+1; product of two simplices when the count
    and dimension match (a+1)(b+1) = v, a+b = d and the edge graph is
    (a+b)-regular; unclassified otherwise.  Edges are face tests on
    vertex pairs; for subgroup vertex sets left multiplication is a
    linear automorphism of the polytope making the skeleton
    vertex-transitive, so the degree at the identity decides regularity.
    """
    if subset is None:
        labels = list(range(poly.vertex_count))
    else:
        labels = sorted(set(subset))
    v = len(labels)
    d = _subset_dim(poly, labels) if subset is not None else poly.dim
    if v == d + 1:
        return ShapeDescriptor("simplex", (d,), v, d)
    # a + b = d and (a+1)(b+1) = v force a, b to be the roots of
    # t^2 - d t + (v - d - 1)
    disc = d * d - 4 * (v - d - 1)
    shape = ShapeDescriptor("unclassified", (), v, d)
    if disc < 0 or isqrt(disc) ** 2 != disc:
        return shape
    root = isqrt(disc)
    if (d - root) % 2:
        return shape
    a, b = (d - root) // 2, (d + root) // 2
    if a < 1 or (a + 1) * (b + 1) != v:
        return shape
    if _is_subgroup_set(poly.group, labels):
        anchor = labels[0]
        others = [h for h in labels if h != anchor]
        degree = sum(1 for h in others if is_face(poly, (anchor, h)).is_face)
        regular = degree == a + b
    else:
        degrees = []
        for x in labels:
            deg = sum(1 for y in labels
                      if y != x and is_face(poly, (x, y)).is_face)
            degrees.append(deg)
        regular = all(deg == a + b for deg in degrees)
    if regular:
        return ShapeDescriptor("product", (a, b), v, d)
    return shape
