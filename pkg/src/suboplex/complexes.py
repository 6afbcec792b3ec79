"""Simplicial complexes, order complexes, and exact reduced homology.

Faces are bit masks over a vertex universe.  The augmented chain
complex always carries the empty face in dimension -1, so the
(-1)-st reduced homology is nonzero exactly for the empty complex
{emptyset}.  Two degenerate complexes are kept distinct throughout:

* the null complex (no faces at all), and
* the empty complex {emptyset} (one face, the empty set).

Boundary signs come from ascending vertex order within each face,
which matters over fields other than GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .linalg import GF2, FieldSpec, rank_from_columns
from .posets import Interval, SubsetPoset


def _submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """An abstract simplicial complex with faces stored as bit masks."""

    __slots__ = ("num_vertices", "_facets", "_face_set", "_faces_by_dim")

    def __init__(self, num_vertices: int, facets: tuple[int, ...]) -> None:
        self.num_vertices = num_vertices
        self._facets = facets
        self._face_set: set[int] | None = None
        self._faces_by_dim: dict[int, list[int]] | None = None

    @classmethod
    def null(cls) -> "SimplicialComplex":
        return cls(0, ())

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The empty complex {emptyset}."""
        return cls(0, (0,))

    @classmethod
    def from_facets(cls, num_vertices: int, facets) -> "SimplicialComplex":
        masks = sorted(set(facets))
        for f in masks:
            if f < 0 or f >> num_vertices:
                raise ValidationError(
                    f"facet 0x{f:x} uses vertices outside range({num_vertices})"
                )
        maximal = [
            f
            for f in masks
            if not any(f != g and f & g == f for g in masks)
        ]
        return cls(num_vertices, tuple(sorted(maximal)))

    @classmethod
    def from_faces(cls, num_vertices: int, faces) -> "SimplicialComplex":
        """Build from an explicit subset-closed family of faces.

        The empty face is implied whenever the family is nonempty.
        """
        face_set = set(faces)
        if not face_set:
            return cls.null()
        face_set.add(0)
        for f in face_set:
            if f < 0 or f >> num_vertices:
                raise ValidationError(
                    f"face 0x{f:x} uses vertices outside range({num_vertices})"
                )
        k = cls(num_vertices, ())
        k._face_set = face_set
        by_dim: dict[int, list[int]] = {}
        for f in face_set:
            by_dim.setdefault(f.bit_count() - 1, []).append(f)
        for faces_d in by_dim.values():
            faces_d.sort()
        k._faces_by_dim = by_dim
        k._facets = k._compute_facets()
        return k

    def _compute_facets(self) -> tuple[int, ...]:
        assert self._face_set is not None
        faces = self._face_set
        nv = self.num_vertices
        maximal = []
        for f in faces:
            if not any(
                f | (1 << v) in faces for v in range(nv) if not f >> v & 1
            ):
                maximal.append(f)
        return tuple(sorted(maximal))

    @property
    def facets(self) -> tuple[int, ...]:
        return self._facets

    @property
    def is_null(self) -> bool:
        return not self._facets and self._face_set is None

    @property
    def is_empty_complex(self) -> bool:
        return self._facets == (0,)

    def face_set(self) -> set[int]:
        if self._face_set is None:
            faces: set[int] = set()
            for f in self._facets:
                for sub in _submasks(f):
                    faces.add(sub)
            self._face_set = faces
        return self._face_set

    def faces_by_dim(self) -> dict[int, list[int]]:
        """Faces grouped by dimension; includes {-1: [0]} for nonnull complexes."""
        if self._faces_by_dim is None:
            by_dim: dict[int, list[int]] = {}
            for f in self.face_set():
                by_dim.setdefault(f.bit_count() - 1, []).append(f)
            for faces_d in by_dim.values():
                faces_d.sort()
            self._faces_by_dim = by_dim
        return self._faces_by_dim

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex, -2 for the null complex."""
        if self.is_null:
            return -2
        return max(f.bit_count() for f in self._facets) - 1

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.faces_by_dim().items()}

    def __contains__(self, face: int) -> bool:
        return face in self.face_set()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self.is_null or other.is_null:
            return self.is_null and other.is_null
        return self.face_set() == other.face_set()

    def link(self, face: int) -> "SimplicialComplex":
        """The link of ``face``: all G disjoint from it with G | face a face."""
        faces = self.face_set()
        if face not in faces:
            raise ValidationError(f"link of a non-face 0x{face:x}")
        return SimplicialComplex.from_faces(
            self.num_vertices, [h ^ face for h in faces if h & face == face]
        )


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    """Alternating face-count sum over dimensions >= -1; 0 for the null complex."""
    if k.is_null:
        return 0
    total = 0
    for d, faces in k.faces_by_dim().items():
        total += len(faces) if d % 2 == 0 else -len(faces)
    return total


@dataclass(frozen=True)
class HomologyProfile:
    """Dimensions of reduced homology per degree, zeros omitted from storage."""

    nonzero: dict[int, int] = field(default_factory=dict)
    complex_dim: int = -2

    def __getitem__(self, degree: int) -> int:
        return self.nonzero.get(degree, 0)

    @property
    def is_zero(self) -> bool:
        return not self.nonzero

    def degrees(self) -> range:
        return range(-1, self.complex_dim + 1)

    def render(self) -> str:
        if self.complex_dim < -1:
            return "H~ = []"
        body = ", ".join(str(self[d]) for d in self.degrees())
        return f"H~[-1..{self.complex_dim}] = [{body}]"


class ChainHomology:
    """Lazy Betti numbers of the augmented chain complex of a face family.

    Boundary ranks are computed and cached per dimension on demand, so a
    caller that only needs the top few degrees never pays for the rest.
    """

    def __init__(self, faces_by_dim: dict[int, list[int]], fieldspec: FieldSpec) -> None:
        self.faces = faces_by_dim
        self.field = fieldspec
        self._ranks: dict[int, int] = {}
        self._indexes: dict[int, dict[int, int]] = {}

    def _index(self, d: int) -> dict[int, int]:
        if d not in self._indexes:
            self._indexes[d] = {f: i for i, f in enumerate(self.faces.get(d, ()))}
        return self._indexes[d]

    def boundary_rank(self, d: int) -> int:
        """Rank of the boundary map from dimension d to dimension d-1."""
        if d in self._ranks:
            return self._ranks[d]
        rows = self.faces.get(d - 1, ())
        cols = self.faces.get(d, ())
        if not rows or not cols:
            self._ranks[d] = 0
            return 0
        row_index = self._index(d - 1)
        columns = []
        for f in cols:
            col = []
            sign = 1
            rest = f
            while rest:
                low = rest & -rest
                rest ^= low
                col.append((row_index[f ^ low], sign))
                sign = -sign
            columns.append(col)
        r = rank_from_columns(columns, len(rows), self.field)
        self._ranks[d] = r
        return r

    def betti(self, d: int) -> int:
        n_d = len(self.faces.get(d, ()))
        if n_d == 0:
            return 0
        return n_d - self.boundary_rank(d) - self.boundary_rank(d + 1)


def reduced_homology(k: SimplicialComplex, fieldspec: FieldSpec = GF2) -> HomologyProfile:
    """Reduced simplicial homology dimensions over the given field."""
    if k.is_null:
        return HomologyProfile({}, -2)
    chain = ChainHomology(k.faces_by_dim(), fieldspec)
    nonzero = {}
    for d in range(-1, k.dim + 1):
        b = chain.betti(d)
        if b:
            nonzero[d] = b
    return HomologyProfile(nonzero, k.dim)


def order_complex(p: SubsetPoset) -> SimplicialComplex:
    """The complex of chains of ``p``; vertex i is the i-th poset element."""
    return SimplicialComplex.from_faces(len(p), p.chain_masks())


def truncated_order_complex(interval: Interval) -> SimplicialComplex:
    """Order complex of the open interior of a closed interval.

    Degenerate cases: a rank-1 interval gives the empty complex
    {emptyset}, a rank-0 interval gives the null complex.
    """
    if interval.is_open:
        raise ValidationError("truncated order complex is taken on a closed interval")
    r = interval.members.rank()
    if r == 0:
        return SimplicialComplex.null()
    if r == 1:
        return SimplicialComplex.empty()
    return order_complex(interval.open_members())


def is_cohen_macaulay(k: SimplicialComplex, fieldspec: FieldSpec = GF2) -> bool:
    """Reisner's criterion: every link has vanishing homology below its dimension."""
    if k.is_null:
        return True
    for face in sorted(k.face_set(), key=lambda f: f.bit_count()):
        lk = k.link(face)
        d = lk.dim
        if d <= -1:
            continue
        profile = reduced_homology(lk, fieldspec)
        if any(profile[i] for i in range(-1, d)):
            return False
    return True


def is_interval_cm(p: SubsetPoset, fieldspec: FieldSpec = GF2) -> bool:
    """True iff every open interval of ``p`` has a Cohen-Macaulay order complex.

    Rank-0 and rank-1 intervals give the null and empty complexes, which
    count as Cohen-Macaulay.
    """
    size = len(p)
    for i in range(size):
        rest = p._up_strict[i]
        while rest:
            j = rest.bit_length() - 1
            rest ^= 1 << j
            iv = p.interval(p.elements[i], p.elements[j])
            if iv.members.rank() <= 1:
                continue
            if not is_cohen_macaulay(truncated_order_complex(iv), fieldspec):
                return False
    return True
