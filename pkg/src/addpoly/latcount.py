"""Exact counting of invariant subspaces, chains, and right components.

Line counts and maximal-chain counts come from closed forms over the
species; full subspace generating functions are obtained by exhaustive
lattice enumeration of a reduced single-eigenfactor matrix over the field
of size r^m, then recombined by polynomial multiplication and the z -> z^m
substitution. All counts are arbitrary-precision integers.
"""

from functools import lru_cache

from . import oracle, upoly
from .additive import projective_part, strip_inseparable
from .errors import BudgetExceeded, InputError, InternalInconsistency
from .ffield import tower_create
from .frobjordan import jordan_block, rational_jordan_form
from .upoly import UPoly

DEFAULT_DIM_BUDGET = 6
DEFAULT_BASE_CAP = 9
DEFAULT_ENUM_BUDGET = 1 << 21

Partition = tuple  # weakly decreasing positive integers


def q_bracket(n, b):
    """[n]_b = (b^n - 1)/(b - 1), the number of lines in an n-space over GF(b)."""
    if n < 0 or b < 2:
        raise InputError("q_bracket needs n >= 0 and base >= 2")
    return (b**n - 1) // (b - 1)


def partitions(m, _max=None):
    """Unordered partitions of m as weakly decreasing tuples."""
    if m == 0:
        yield ()
        return
    top = m if _max is None else min(m, _max)
    for first in range(top, 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def mhat(n, r):
    """Superset of the achievable counts of exponent-1 right components.

    Built by closing {0} under bracket sums of partitions of every i <= n;
    values that coincide numerically at this r are merged.
    """
    if n < 0:
        raise InputError("n must be nonnegative")
    out = {0}
    for i in range(1, n + 1):
        for part in partitions(i):
            out.add(sum(q_bracket(j, r) for j in part))
    return out


def count_lines(species, r):
    """Invariant lines: sum of [s_i]_r over the degree-one signatures only."""
    total = 0
    for m, lam in species:
        if m == 1:
            total += q_bracket(sum(lam), r)
    return total


class GeneratingFunction:
    """Coefficients g_0..g_n counting invariant subspaces by dimension."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    def __getitem__(self, d):
        return self.coeffs[d]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, GeneratingFunction) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"GeneratingFunction({list(self.coeffs)})"

    def to_json(self):
        return list(self.coeffs)


def _prime_of(r):
    if r < 2:
        raise InputError("r must be a prime power >= 2")
    p = 2
    while p * p <= r:
        if r % p == 0:
            break
        p += 1
    else:
        p = r
    t = r
    while t % p == 0:
        t //= p
    if t != 1:
        raise InputError(f"r = {r} is not a prime power")
    return p


@lru_cache(maxsize=None)
def _field_of_size(size):
    p = _prime_of(size)
    deg = 0
    t = 1
    while t < size:
        t *= p
        deg += 1
    return tower_create(p, deg, 1).fr


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def generating_function(
    species,
    r,
    dim_budget=DEFAULT_DIM_BUDGET,
    base_cap=DEFAULT_BASE_CAP,
    enum_budget=DEFAULT_ENUM_BUDGET,
):
    """Invariant-subspace counts by dimension for a species over GF(r).

    Each eigenfactor of degree m contributes the lattice of a reduced
    nilpotent matrix over the field of size r^m (counted by exhaustive
    echelon enumeration), with z replaced by z^m; the per-eigenfactor
    polynomials are then multiplied. Raises BudgetExceeded, naming the
    offending eigenfactor, when a reduced dimension or base exceeds its cap.
    """
    g = [1]
    for m, lam in species:
        dim = sum(j * l for j, l in enumerate(lam, start=1))
        base = r**m
        if dim > dim_budget:
            raise BudgetExceeded(
                f"eigenfactor of degree {m} has reduced dimension {dim} > budget {dim_budget}"
            )
        if base > base_cap:
            raise BudgetExceeded(
                f"eigenfactor of degree {m} counts over base {base} > cap {base_cap}"
            )
        field = _field_of_size(base)
        mat = _nilpotent_matrix(field, lam)
        gi = [
            len(oracle.invariant_subspaces(field, mat, d, enum_budget=enum_budget))
            for d in range(dim + 1)
        ]
        if gi != gi[::-1] or gi[0] != 1:
            raise InternalInconsistency(f"per-eigenfactor counts {gi} are not palindromic")
        spaced = [0] * (m * dim + 1)
        for d, c in enumerate(gi):
            spaced[m * d] = c
        g = _poly_mul_int(g, spaced)
    if g != g[::-1] or g[0] != 1:
        raise InternalInconsistency(f"generating function {g} is not palindromic")
    return GeneratingFunction(g)


def _nilpotent_matrix(field, lam):
    y = UPoly.y(field)
    pieces = []
    for j in range(len(lam), 0, -1):
        pieces.extend([jordan_block(y, j)] * lam[j - 1])
    size = sum(len(p) for p in pieces)
    mat = [[field.zero] * size for _ in range(size)]
    off = 0
    for piece in pieces:
        for i, row in enumerate(piece):
            mat[off + i][off : off + len(piece)] = row
        off += len(piece)
    return mat


def depth_counts(lam, i, base):
    """Number of minimal invariant subspaces of depth i: base^(lam_(i+1)+..) * [lam_i]_base."""
    lam = tuple(lam)
    if not 1 <= i <= len(lam):
        raise InputError(f"depth {i} out of range for {lam}")
    return base ** sum(lam[i:]) * q_bracket(lam[i - 1], base)


def quotient_species(lam, i):
    """Signature after quotienting by a depth-i minimal subspace, trailing zeros trimmed."""
    lam = list(lam)
    if not 1 <= i <= len(lam) or lam[i - 1] < 1:
        raise InputError(f"no depth-{i} subspace for signature {lam}")
    if i == 1:
        lam[0] -= 1
    else:
        lam[i - 2] += 1
        lam[i - 1] -= 1
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


@lru_cache(maxsize=None)
def _chains(entries, r):
    if not entries:
        return 1
    total = 0
    seen = set()
    for idx, (m, lam) in enumerate(entries):
        if (m, lam) in seen:
            continue  # identical signatures contribute identically
        seen.add((m, lam))
        mult = entries.count((m, lam))
        rest = list(entries)
        rest.remove((m, lam))
        base = r**m
        for i in range(1, len(lam) + 1):
            if lam[i - 1] == 0:
                continue
            count = depth_counts(lam, i, base)
            qlam = quotient_species(lam, i)
            child = rest + ([(m, qlam)] if qlam else [])
            total += mult * count * _chains(tuple(sorted(child)), r)
    return total


def count_chains(species, r):
    """Number of maximal chains of invariant subspaces (complete decompositions).

    Memoized recursion over species multisets: each step quotients by one
    minimal invariant subspace, whose count depends on its depth, with
    bracket base r^m for an eigenfactor of degree m.
    """
    return _chains(tuple(species), r)


def count_right_components(
    f,
    d,
    seed=0,
    dim_budget=DEFAULT_DIM_BUDGET,
    base_cap=DEFAULT_BASE_CAP,
    enum_budget=DEFAULT_ENUM_BUDGET,
):
    """Number of monic right components of exponent d of a monic squarefree f.

    Zero outside 0 <= d <= n; closed forms serve d in {0, 1, n-1, n}; other
    dimensions read g_d off the generating function and may raise
    BudgetExceeded on large species.
    """
    if not f.is_monic or not f.is_squarefree:
        raise InputError("input must be monic squarefree")
    n = f.exponent
    if d < 0 or d > n:
        return 0
    if d in (0, n):
        return 1
    species = rational_jordan_form(f, seed).species
    return count_from_species(species, f.tower.r, d, dim_budget, base_cap, enum_budget)


def count_from_species(
    species,
    r,
    d,
    dim_budget=DEFAULT_DIM_BUDGET,
    base_cap=DEFAULT_BASE_CAP,
    enum_budget=DEFAULT_ENUM_BUDGET,
):
    """Right-component count for a known species: closed forms at the edges,
    the generating function in between."""
    n = species.dimension()
    if d < 0 or d > n:
        return 0
    if d in (0, n):
        return 1
    if d == 1 or d == n - 1:  # the lattice is self-dual, so g_(n-1) = g_1
        return count_lines(species, r)
    return generating_function(species, r, dim_budget, base_cap, enum_budget)[d]


def count_right_components_general(f_general, d, seed=0, **budgets):
    """Right-component count for an arbitrary monic additive polynomial.

    Strips the inseparable part x^(r^m) and sums the squarefree counts over
    the window d-m..d; empty above exponent n + m.
    """
    m, f = strip_inseparable(f_general)
    if d < 0:
        return 0
    n = f.exponent
    total = 0
    for i in range(max(0, d - m), min(d, n) + 1):
        total += count_right_components(f, i, seed=seed, **budgets)
    return total


def ore_criterion_count(f, dense_cap=None):
    """Exponent-1 component count via roots of the projective image.

    Counts a in F_q* with projective_part(f, r-1)(a) = 0; each such root
    corresponds to the right component x^r - a x. Agrees with
    count_right_components(f, 1).
    """
    if not f.is_monic or not f.is_squarefree:
        raise InputError("input must be monic squarefree")
    tower = f.tower
    kwargs = {} if dense_cap is None else {"dense_cap": dense_cap}
    pi = projective_part(f, tower.r - 1, **kwargs)
    zero = tower.fq.zero
    return sum(1 for a in upoly.roots(pi) if a != zero)
