"""Subbundles of split bundles and the splitting-type calculus.

Everything on the projective line splits, so each computation here reduces
to a sorted multiset of twist integers.  Kernels are computed degreewise:
the kernel of a map of free graded modules over a two-variable polynomial
ring is free, and its Hilbert function pins down the generator degrees, so
the scan below terminates with a certificate rather than a heuristic.
Cokernel types come from the dual kernel (for a map with locally free
cokernel, the dual of the cokernel is the kernel of the transposed map).
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import linalg
from .forms import BinaryForm
from .frames import GradedMatrix

__all__ = [
    "SplittingType",
    "Positivity",
    "positivity",
    "tensor_type",
    "dual_type",
    "wedge2_type",
    "Pairing",
    "Subbundle",
    "Column",
    "lift_through",
    "kernel_free",
    "cokernel_type",
    "quotient_type",
    "sub_lift",
    "pairing_map",
    "perp",
    "is_isotropic",
    "same_subsheaf",
]


@dataclass(frozen=True)
class SplittingType:
    """Multiset of twists e1 >= ... >= er of a split bundle."""

    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(sorted(self.twists, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def degree(self) -> int:
        return sum(self.twists)

    def dual(self) -> "SplittingType":
        return SplittingType(tuple(-e for e in self.twists))

    def tensor(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(tuple(a + b for a in self.twists for b in other.twists))

    def direct_sum(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(self.twists + other.twists)

    def wedge2(self) -> "SplittingType":
        if self.rank != 2:
            raise ValueError("wedge2 is only defined for rank-2 types")
        return SplittingType((self.twists[0] + self.twists[1],))

    def scaled(self, d: int) -> "SplittingType":
        return SplittingType(tuple(d * e for e in self.twists))

    @property
    def is_ample(self) -> bool:
        return all(e >= 1 for e in self.twists)

    @property
    def is_globally_generated(self) -> bool:
        return all(e >= 0 for e in self.twists)

    def __iter__(self):
        return iter(self.twists)

    def __repr__(self):
        return "{" + ", ".join(map(str, self.twists)) + "}"


class Positivity(NamedTuple):
    ample: bool
    globally_generated: bool
    degree: int
    rank: int


def positivity(t: SplittingType) -> Positivity:
    return Positivity(t.is_ample, t.is_globally_generated, t.degree, t.rank)


def tensor_type(s: SplittingType, t: SplittingType) -> SplittingType:
    return s.tensor(t)


def dual_type(t: SplittingType) -> SplittingType:
    return t.dual()


def wedge2_type(t: SplittingType) -> SplittingType:
    return t.wedge2()


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pairing:
    """Nondegenerate symmetric or skew-symmetric scalar pairing."""

    flavor: str  # "symmetric" | "skew"
    matrix: tuple  # n x n Gram matrix, rows of scalars
    field: object

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            raise ValueError("pairing matrix must be square")
        if self.flavor not in ("symmetric", "skew"):
            raise ValueError(f"unknown pairing flavor {self.flavor!r}")
        f = self.field
        for i in range(n):
            for j in range(n):
                m, mt = self.matrix[i][j], self.matrix[j][i]
                want = mt if self.flavor == "symmetric" else f.neg(mt)
                if m != want:
                    raise ValueError(f"pairing matrix is not {self.flavor}")
        if self.flavor == "skew" and n % 2:
            raise ValueError("a nondegenerate skew pairing needs even dimension")
        if linalg.rank(f, [list(r) for r in self.matrix], n) != n:
            raise ValueError("pairing matrix is degenerate")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def hyperbolic(cls, field, b: int, flavor: str) -> "Pairing":
        """Dimension 2b, basis e_1..e_b, x_1..x_b with <e_i, x_j> = delta_ij
        and <x_j, e_i> = +-delta_ij per flavor."""
        one, zero = field.one, field.zero
        n = 2 * b
        rows = [[zero] * n for _ in range(n)]
        for i in range(b):
            rows[i][b + i] = one
            rows[b + i][i] = one if flavor == "symmetric" else field.neg(one)
        return cls(flavor, rows, field)

    @classmethod
    def diagonal_ones(cls, field, n: int) -> "Pairing":
        """Symmetric filler block: the identity Gram matrix."""
        rows = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        return cls("symmetric", rows, field)

    @classmethod
    def one_dim(cls, field) -> "Pairing":
        return cls("symmetric", ((field.one,),), field)

    @classmethod
    def orthogonal_sum(cls, *pairings: "Pairing") -> "Pairing":
        pairings = [p for p in pairings if p.dim > 0]
        if not pairings:
            raise ValueError("empty orthogonal sum")
        f = pairings[0].field
        flavor = pairings[0].flavor
        if any(p.flavor != flavor or p.field != f for p in pairings):
            raise ValueError("orthogonal sum needs one flavor over one field")
        n = sum(p.dim for p in pairings)
        rows = [[f.zero] * n for _ in range(n)]
        off = 0
        for p in pairings:
            for i in range(p.dim):
                for j in range(p.dim):
                    rows[off + i][off + j] = p.matrix[i][j]
            off += p.dim
        return cls(flavor, rows, f)


# ---------------------------------------------------------------------------


class Column(NamedTuple):
    twist: int
    forms: tuple


class Subbundle:
    """A locally split subsheaf of a trivial-frame bundle.

    Held as an everywhere-injective generator matrix from a free frame
    into the ambient frame, so the splitting type is the source frame.
    """

    __slots__ = ("gen", "type")

    def __init__(self, gen: GradedMatrix, check: bool = True):
        if check and gen.ncols:
            profile = gen.rank_everywhere()
            if profile != (gen.ncols, True):
                raise ValueError(
                    f"generator matrix is not everywhere injective: {profile}"
                )
        self.gen = gen
        self.type = SplittingType(gen.src)

    @classmethod
    def zero(cls, field, ambient) -> "Subbundle":
        return cls(GradedMatrix.zero(field, (), ambient), check=False)

    @classmethod
    def full(cls, field, ambient) -> "Subbundle":
        return cls(GradedMatrix.identity(field, ambient), check=False)

    @property
    def field(self):
        return self.gen.field

    @property
    def ambient(self):
        return self.gen.dst

    @property
    def rank(self) -> int:
        return self.gen.ncols

    @property
    def degree(self) -> int:
        return self.type.degree

    def columns(self):
        return [Column(tw, forms) for tw, forms in self.gen.columns()]

    def contains(self, col: Column) -> bool:
        return lift_through(self.gen, col) is not None

    def __repr__(self):
        return f"Subbundle(type={self.type}, ambient rank {len(self.ambient)})"


def lift_through(phi: GradedMatrix, col: Column) -> Optional[Column]:
    """The unique x with phi*x = col, or None if col is not in the image.

    phi must be everywhere injective; the lift lives in a single degree
    piece, so one exact linear solve settles membership.
    """
    n = -col.twist
    piece = phi.degree_piece(n)
    rhs = _column_coordinates(phi.field, phi.dst, n, col)
    if rhs is None:
        return None
    x = linalg.solve(phi.field, [list(r) for r in piece.matrix], piece.ncols, rhs)
    if x is None:
        return None
    forms = _coordinates_to_forms(phi.field, phi.src, n, x)
    # degreewise solving is only consistent if the polynomial identity holds
    lifted = phi @ GradedMatrix.from_columns(phi.field, phi.src, [(col.twist, forms)])
    target = GradedMatrix.from_columns(phi.field, phi.dst, [col])
    if lifted != target:
        return None
    return Column(col.twist, tuple(forms))


def _column_coordinates(field, frame, n, col: Column):
    """Coordinates of a column in the degree-n piece of the frame."""
    if len(col.forms) != len(frame):
        raise ValueError("column length does not match the frame rank")
    coords = []
    for a, f in zip(frame, col.forms):
        d = n + a
        if f.degree != n + a:
            raise ValueError("column entry degree does not match the frame")
        if d < 0:
            if not f.is_zero():
                return None
            continue
        coords.extend(f.coeffs)
    return coords


def _coordinates_to_forms(field, frame, n, coords):
    forms = []
    pos = 0
    for a in frame:
        d = n + a
        if d < 0:
            forms.append(BinaryForm.zero(field, d))
            continue
        forms.append(BinaryForm(field, d, coords[pos : pos + d + 1]))
        pos += d + 1
    return forms


# ---------------------------------------------------------------------------
# kernel of a graded matrix, as a free subbundle of the source frame


def kernel_free(m: GradedMatrix) -> Subbundle:
    """Free generators of ker(m) inside the source frame of m.

    Scans section degrees upward.  At degree n the full kernel piece is the
    nullspace of the degree piece; the span of T0, T1 times the previous
    kernel piece is completed to it, and any complement vectors are new
    minimal generators.  Since the kernel module K is free of known rank c,
    its Hilbert function satisfies dim K_n - dim K_(n-1) = #{generators of
    degree <= n}; the first time that difference hits c every generator has
    been seen, which is the certified stopping rule.
    """
    f = m.field
    src = m.src
    s = len(src)
    if s == 0:
        return Subbundle.zero(f, src)
    r = _generic_rank(m)
    c = s - r
    if c == 0:
        return Subbundle.zero(f, src)

    n = -max(src)
    guard = _generator_degree_bound(m, r, c) + 2
    prev_null = []
    prev_nullity = 0
    gens = []  # (degree n, coordinate vector at degree n)
    while True:
        piece = m.degree_piece(n)
        null = linalg.nullspace(f, [list(row) for row in piece.matrix], piece.ncols)
        span = _EchelonSpan(f, piece.ncols)
        for v in _shift_up(f, src, n, prev_null):
            span.add(v)
        for v in null:
            reduced = span.add(v)
            if reduced is not None:
                gens.append((n, reduced))
        if len(null) - prev_nullity == c:
            break
        if n > guard:
            raise RuntimeError("kernel scan exceeded its degree bound")
        prev_null = null
        prev_nullity = len(null)
        n += 1
    assert len(gens) == c, "kernel generator count disagrees with the generic rank"
    cols = []
    for d, vec in gens:
        forms = _coordinates_to_forms(f, src, d, vec)
        cols.append((-d, forms))
    return Subbundle(GradedMatrix.from_columns(f, src, cols))


def _generic_rank(m: GradedMatrix) -> int:
    if not m.src or not m.dst:
        return 0
    return m.rank_everywhere().generic_rank


def _generator_degree_bound(m: GradedMatrix, r: int, c: int) -> int:
    # deg(kernel) = deg(source) - deg(image), each kernel twist is at most
    # max(source twists), and a rank-r subsheaf of the target has degree at
    # most the sum of the r largest target twists
    max_a = max(m.src)
    top_b = sum(sorted(m.dst, reverse=True)[:r]) if r else 0
    return (c - 1) * max_a - sum(m.src) + top_b


def _shift_up(field, src, n, vectors):
    """Images of degree-(n-1) piece vectors under multiplication by T0, T1."""
    if not vectors:
        return []
    prev_dims = [max(0, n - 1 + a + 1) for a in src]
    dims = [max(0, n + a + 1) for a in src]
    prev_off = []
    off = 0
    for d in prev_dims:
        prev_off.append(off)
        off += d
    offs = []
    off = 0
    for d in dims:
        offs.append(off)
        off += d
    total = off
    out = []
    for v in vectors:
        for shift in (0, 1):  # T0 keeps the T1-exponent, T1 raises it
            w = [field.zero] * total
            for j, dprev in enumerate(prev_dims):
                for i in range(dprev):
                    w[offs[j] + i + shift] = v[prev_off[j] + i]
            out.append(w)
    return out


class _EchelonSpan:
    """Incremental reduced span with deterministic normalized remainders."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []  # (pivot_col, row)

    def add(self, v):
        """Reduce v; absorb and return the normalized remainder if new."""
        f = self.field
        v = list(v)
        for pc, row in self.rows:
            cv = v[pc]
            if not f.is_zero(cv):
                for j in range(pc, self.ncols):
                    v[j] = f.sub(v[j], f.mul(cv, row[j]))
        for pc in range(self.ncols):
            if not f.is_zero(v[pc]):
                inv = f.inv(v[pc])
                v = [f.mul(inv, x) for x in v]
                self.rows.append((pc, v))
                self.rows.sort(key=lambda t: t[0])
                return v
        return None


# ---------------------------------------------------------------------------


def cokernel_type(m: GradedMatrix) -> SplittingType:
    """Splitting type of coker(m); m must have constant pointwise rank."""
    profile = m.rank_everywhere()
    if not profile.constant:
        raise ValueError("cokernel not locally free: pointwise rank is not constant")
    ker = kernel_free(m.transpose_dual())
    return ker.type.dual()


def sub_lift(inner: Subbundle, outer: Subbundle) -> GradedMatrix:
    """The matrix L with outer.gen @ L = inner.gen (membership certified)."""
    if inner.ambient != outer.ambient:
        raise ValueError("subbundles live in different ambient frames")
    cols = []
    for col in inner.columns():
        lifted = lift_through(outer.gen, col)
        if lifted is None:
            raise ValueError("E1 not contained in E2")
        cols.append((lifted.twist, list(lifted.forms)))
    return GradedMatrix.from_columns(inner.field, outer.gen.src, cols)


def quotient_type(inner: Subbundle, outer: Subbundle) -> SplittingType:
    """Splitting type of outer/inner for nested subbundles of one ambient."""
    if inner.rank == 0:
        return outer.type
    lift = sub_lift(inner, outer)
    profile = lift.rank_everywhere()
    if profile != (inner.rank, True):
        raise ValueError("E1 not a subbundle of E2")
    return cokernel_type(lift)


def pairing_map(e: Subbundle, beta: Pairing) -> GradedMatrix:
    """The map ambient -> dual of e's frame sending x to beta(gen_j, x)_j."""
    f = e.field
    amb = e.ambient
    if len(amb) != beta.dim:
        raise ValueError("pairing dimension does not match the ambient frame")
    rows = []
    for tw, forms in e.gen.columns():
        row = []
        for i in range(beta.dim):
            acc = BinaryForm.zero(f, -tw)
            for k in range(beta.dim):
                b = beta.matrix[k][i]
                if not f.is_zero(b) and not forms[k].is_zero():
                    acc = acc + forms[k].scale(b)
            row.append(acc)
        rows.append(row)
    return GradedMatrix(f, amb, tuple(-tw for tw, _ in e.gen.columns()), rows)


def perp(e: Subbundle, beta: Pairing) -> Subbundle:
    """Annihilator subbundle of e under beta."""
    if e.rank == 0:
        return Subbundle.full(e.field, e.ambient)
    return kernel_free(pairing_map(e, beta))


def is_isotropic(e: Subbundle, beta: Pairing) -> bool:
    if e.rank == 0:
        return True
    product = pairing_map(e, beta) @ e.gen
    return product.is_zero()


def same_subsheaf(e1: Subbundle, e2: Subbundle) -> bool:
    """Mutual membership of generators (equality as subsheaves)."""
    if e1.ambient != e2.ambient or e1.rank != e2.rank:
        return False
    try:
        sub_lift(e1, e2)
        sub_lift(e2, e1)
    except ValueError:
        return False
    return True
