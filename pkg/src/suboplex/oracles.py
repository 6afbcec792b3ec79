"""Brute-force verifiers, independent of the theorem-driven fast paths.

The Betti oracle enumerates every squarefree multidegree b of the
polynomial ring and computes the reduced homology of the complex
K^b = { tau subset supp(b) : b with tau removed lies in the ideal },
whose (i-1)-st homology dimension is beta_{i,b}.  Complex construction
here goes through ideal membership only, never through order-complex
chains, so agreement with the interval method is a genuine cross-check.
"""

from __future__ import annotations

from .betti import BettiTable
from .bitsets import SquarefreeMonomial, Subset
from .classes import FunctionClass, IdealGenerators
from .complexes import SimplicialComplex, reduced_homology
from .errors import CapExceededError
from .linalg import GF2, FieldSpec

ORACLE_MAX_VARIABLES = 12
VC_ORACLE_MAX_GROUND = 20


def _generator_masks(gens: IdealGenerators) -> list[int]:
    # Variable order: x(i,0) at bit 2i, x(i,1) at bit 2i+1.
    masks = []
    for g in gens:
        m = 0
        for i in range(gens.n):
            if g.support0.bits >> i & 1:
                m |= 1 << (2 * i)
            if g.support1.bits >> i & 1:
                m |= 1 << (2 * i + 1)
        masks.append(m)
    return masks


def _monomial_from_mask(n: int, mask: int) -> SquarefreeMonomial:
    s0 = 0
    s1 = 0
    for i in range(n):
        if mask >> (2 * i) & 1:
            s0 |= 1 << i
        if mask >> (2 * i + 1) & 1:
            s1 |= 1 << i
    return SquarefreeMonomial(Subset(n, s0), Subset(n, s1))


def upper_koszul_slice(member: bytearray, b: int) -> list[int]:
    """Faces of K^b: subsets tau of supp(b) with b minus tau in the ideal.

    ``member`` is the ideal-membership table over squarefree monomial
    masks.  The family is closed under taking subsets (removing less
    keeps the quotient a multiple of a generator), and it is null
    exactly when b itself is not in the ideal.
    """
    faces = []
    tau = b
    while True:
        if member[b ^ tau]:
            faces.append(tau)
        if tau == 0:
            return faces
        tau = (tau - 1) & b


def betti_oracle(gens: IdealGenerators, fieldspec: FieldSpec = GF2) -> BettiTable:
    """Full multigraded Betti table of a squarefree ideal, by exhaustion.

    Every squarefree multidegree b is visited; beta_{i,b} is the
    (i-1)-st reduced homology dimension of the slice K^b.  Membership
    of a monomial in the ideal (some generator divides it) is
    tabulated once up front.  Capped at 2n <= 12 variables.
    """
    nvars = 2 * gens.n
    if nvars > ORACLE_MAX_VARIABLES:
        raise CapExceededError(
            f"Betti oracle is capped at {ORACLE_MAX_VARIABLES} variables, got {nvars}"
        )
    gmasks = _generator_masks(gens)
    size = 1 << nvars
    member = bytearray(size)
    for m in range(size):
        for g in gmasks:
            if g & m == g:
                member[m] = 1
                break
    entries: dict[tuple[int, SquarefreeMonomial], int] = {}
    for b in range(size):
        if not member[b]:
            continue  # K^b has no faces at all: nothing in this degree
        faces = upper_koszul_slice(member, b)
        profile = reduced_homology(
            SimplicialComplex.from_faces(nvars, faces), fieldspec
        )
        if profile.is_zero:
            continue
        deg = _monomial_from_mask(gens.n, b)
        for d, v in profile.nonzero.items():
            entries[(d + 1, deg)] = v
    return BettiTable(n=gens.n, entries=entries)


def regularity_oracle(gens: IdealGenerators, fieldspec: FieldSpec = GF2) -> int:
    """Castelnuovo-Mumford regularity: max of (total degree - index) over the table."""
    table = betti_oracle(gens, fieldspec)
    return max(m.degree - i for (i, m) in table.entries)


def vc_oracle(c: FunctionClass) -> int:
    """VC dimension by exhaustive check of all 2^n subsets, no pruning."""
    n = c.n
    if n > VC_ORACLE_MAX_GROUND:
        raise CapExceededError(
            f"VC oracle is capped at ground size {VC_ORACLE_MAX_GROUND}, got {n}"
        )
    masks = c._masks
    best = 0
    for u in range(1 << n):
        size = u.bit_count()
        patterns = {m & u for m in masks}
        if len(patterns) == 1 << size and size > best:
            best = size
    return best
