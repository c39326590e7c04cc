"""Brute-force ground truth at desk scale.

Everything the fast paths avoid is done explicitly here: root spaces are
materialized inside a concrete extension field, the Frobenius becomes an
explicit matrix, invariant subspaces are enumerated one reduced echelon
form at a time, and right components are rebuilt as literal root products.
All of it is gated by explicit budgets; BudgetExceeded is an expected,
typed outcome, never a correctness escape hatch.
"""

from dataclasses import dataclass
from itertools import combinations, product

from . import linalg, upoly
from .additive import AdditivePoly, central_to_upoly, evaluate, minimal_central_left_component, right_divmod
from .errors import (
    BudgetExceeded,
    DescentFailure,
    ExtensionTooLarge,
    InputError,
    InternalInconsistency,
    Overflow,
)
from .frobjordan import Species, lambdas_from_nullities
from .upoly import UPoly

DEFAULT_MAX_EXT = 32
DEFAULT_ENUM_BUDGET = 1 << 21
DEFAULT_POINT_BUDGET = 1 << 20


@dataclass(frozen=True)
class RootSpace:
    """Explicit root space: extension degree, F_r-basis, and the Frobenius matrix.

    basis[j] is an element of F_(q^E) whose F_r-coordinate row is
    basis_coords[j]; frobenius_matrix column j holds the coordinates of
    sigma_q(basis[j]) in that basis.
    """

    tower: object
    poly: object
    ext_degree: int
    field: object
    basis: tuple
    basis_coords: tuple
    frobenius_matrix: tuple


def root_space(f, max_ext=DEFAULT_MAX_EXT):
    """Materialize V_f inside F_(q^E), E the order of y modulo the central image.

    The kernel of f as an F_r-linear map on F_(q^E) is extracted by Gaussian
    elimination and must have dimension equal to the exponent of f.
    """
    if not f.is_monic or not f.is_squarefree:
        raise InputError("input must be monic squarefree")
    tower = f.tower
    fr = tower.fr
    n = f.exponent
    tau_fstar = central_to_upoly(minimal_central_left_component(f)) if n else UPoly.one(fr)
    try:
        ext_degree = upoly.order_of_y_mod(tau_fstar, cap=max_ext)
    except Overflow as exc:
        raise ExtensionTooLarge(
            f"root space needs an extension of degree > {max_ext} over F_q"
        ) from exc
    field = tower.extension(ext_degree)
    dim = ext_degree * tower.k  # [F_(q^E) : F_r]
    images = []
    for t in range(dim):
        unit = [fr.zero] * dim
        unit[t] = fr.one
        alpha = tower.from_r_coords(field, unit)
        images.append(tower.r_coords(field, evaluate(f, alpha, field)))
    # kernel of the map alpha -> f(alpha); columns index the domain basis
    mat = [[images[t][s] for t in range(dim)] for s in range(dim)]
    ker = linalg.kernel(fr, mat)
    if len(ker) != n:
        raise InternalInconsistency(f"kernel dimension {len(ker)} differs from exponent {n}")
    rows, pivots = linalg.rref(fr, ker)
    basis = tuple(tower.from_r_coords(field, row) for row in rows)
    for alpha in basis:
        if evaluate(f, alpha, field) != field.zero:
            raise InternalInconsistency("basis element is not a root")
    cols = []
    for alpha in basis:
        image = tower.r_coords(field, field.pow(alpha, tower.q))
        coords = linalg.span_coords(fr, image, rows, pivots)
        if coords is None:
            raise InternalInconsistency("Frobenius image left the root space")
        cols.append(coords)
    frob = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return RootSpace(tower, f, ext_degree, field, basis, tuple(tuple(r) for r in rows), frob)


def gaussian_binomial(n, d, b):
    """Number of d-dimensional subspaces of an n-space over a size-b field."""
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= b ** (n - i) - 1
        den *= b ** (i + 1) - 1
    return num // den


def invariant_subspaces(field, mat, d, enum_budget=DEFAULT_ENUM_BUDGET):
    """All d-dimensional invariant subspaces, one canonical echelon basis each.

    Enumerates every reduced echelon form (pivot columns, then free entries
    in field order) and keeps the bases whose rows map back into the row
    span; the enumeration size b^(d(n-d))-ish is checked against the budget
    first.
    """
    n = len(mat)
    if d < 0 or d > n:
        return []
    if d == 0:
        return [()]
    total = gaussian_binomial(n, d, field.size)
    if total > enum_budget:
        raise BudgetExceeded(
            f"enumerating {total} candidate {d}-subspaces exceeds budget {enum_budget}"
        )
    elements = list(field.elements())
    out = []
    for pivots in combinations(range(n), d):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(d)
            for j in range(pivots[i] + 1, n)
            if j not in pivot_set
        ]
        for values in product(elements, repeat=len(free)):
            rows = [[field.zero] * n for _ in range(d)]
            for i, p in enumerate(pivots):
                rows[i][p] = field.one
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            if _is_invariant(field, mat, rows, pivots):
                out.append(tuple(tuple(r) for r in rows))
    return out


def _is_invariant(field, mat, rows, pivots):
    zero = field.zero
    for row in rows:
        image = linalg.mat_vec(field, mat, row)
        for prow, p in zip(rows, pivots):
            c = image[p]
            if c != zero:
                image = field.vec_submul(image, c, prow)
        if any(c != zero for c in image):
            return False
    return True


def right_components_brute(f, d, max_ext=DEFAULT_MAX_EXT, enum_budget=DEFAULT_ENUM_BUDGET):
    """All exponent-d right components, rebuilt as literal root products.

    For each invariant d-subspace W of the root space, expands
    prod_(alpha in W) (x - alpha) over the extension, checks that only
    r-power exponents survive and that every coefficient descends to F_q,
    and certifies the result by an exact right division.
    """
    space = root_space(f, max_ext)
    tower = f.tower
    fq, fr = tower.fq, tower.fr
    field = space.field
    n = f.exponent
    if d < 0 or d > n:
        return []
    r = tower.r
    if r**d > enum_budget:
        raise BudgetExceeded(f"expanding subspaces of {r**d} roots exceeds budget {enum_budget}")
    components = []
    for sub in invariant_subspaces(fr, space.frobenius_matrix, d, enum_budget):
        gens = []
        for row in sub:
            acc = field.zero
            for c, alpha in zip(row, space.basis):
                if c != fr.zero:
                    acc = field.add(acc, field.mul(tower.embed_r_to(field, c), alpha))
            gens.append(acc)
        poly = UPoly.one(field)
        for coeffs in product(list(fr.elements()), repeat=d):
            alpha = field.zero
            for c, gen in zip(coeffs, gens):
                if c != fr.zero:
                    alpha = field.add(alpha, field.mul(tower.embed_r_to(field, c), gen))
            poly = poly * UPoly(field, (field.neg(alpha), field.one))
        skew = [fq.zero] * (d + 1)
        for i, c in enumerate(poly.coeffs):
            if c == field.zero:
                continue
            exp = _r_power_index(i, r, d)
            if exp is None:
                raise DescentFailure(f"root product has support at degree {i}")
            try:
                cq = c if field is fq else field.project(c)
            except InputError as exc:
                raise DescentFailure("root product coefficient is not in F_q") from exc
            skew[exp] = cq
        h = AdditivePoly(tower, skew)
        if not right_divmod(f, h)[1].is_zero:
            raise DescentFailure("reconstructed component does not divide on the right")
        components.append(h)
    components.sort(key=lambda h: tuple(fq.to_index(c) for c in h.coeffs))
    return components


def _r_power_index(i, r, d):
    for e in range(d + 1):
        if r**e == i:
            return e
    return None


def maximal_chains_brute(field, mat, point_budget=DEFAULT_POINT_BUDGET):
    """Count saturated chains of invariant subspaces from 0 to the full space.

    Walks the lattice by quotienting out one minimal invariant subspace at a
    time (minimality checked by cyclic closures of projective points) and
    memoizes on the literal quotient matrices. Chain lengths are asserted
    equal along the way.
    """
    memo = {}

    def key(m):
        return tuple(tuple(field.to_index(c) for c in row) for row in m)

    def rec(m):
        n = len(m)
        if n == 0:
            return 1, 0
        k = key(m)
        if k in memo:
            return memo[k]
        if field.size**n > point_budget:
            raise BudgetExceeded(
                f"chain walk over {field.size}^{n} vectors exceeds budget {point_budget}"
            )
        total = 0
        depth = None
        for sub in _minimal_invariant_subspaces(field, m):
            count, sub_depth = rec(_quotient_matrix(field, m, sub))
            if depth is None:
                depth = sub_depth + 1
            elif depth != sub_depth + 1:
                raise InternalInconsistency("maximal chains of unequal length")
            total += count
        if depth is None:
            raise InternalInconsistency("no minimal invariant subspace found")
        memo[k] = (total, depth)
        return memo[k]

    return rec([list(row) for row in mat])[0]


def _projective_points(field, n):
    elements = list(field.elements())
    for pivot in range(n):
        for tail in product(elements, repeat=n - pivot - 1):
            yield [field.zero] * pivot + [field.one] + list(tail)


def _cyclic_closure(field, mat, vec):
    rows, pivots = [], []
    stack = [vec]
    while stack:
        v = linalg.reduce_vector(field, stack.pop(), rows, pivots)
        pivot = next((j for j, c in enumerate(v) if c != field.zero), None)
        if pivot is None:
            continue
        v = field.vec_scale(field.inv(v[pivot]), v)
        for t in range(len(rows)):
            c = rows[t][pivot]
            if c != field.zero:
                rows[t] = field.vec_submul(rows[t], c, v)
        rows.append(v)
        pivots.append(pivot)
        stack.append(linalg.mat_vec(field, mat, v))
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    return [rows[i] for i in order], [pivots[i] for i in order]


def _minimal_invariant_subspaces(field, mat):
    n = len(mat)
    closures = {}
    for point in _projective_points(field, n):
        rows, pivots = _cyclic_closure(field, mat, point)
        k = tuple(tuple(field.to_index(c) for c in row) for row in rows)
        closures.setdefault(k, (rows, pivots))
    minimal = []
    for rows, pivots in closures.values():
        if len(rows) == 1 or _is_simple(field, mat, rows, pivots):
            minimal.append((rows, pivots))
    return minimal


def _is_simple(field, mat, rows, pivots):
    dim = len(rows)
    for point in _projective_points(field, dim):
        w = [field.zero] * len(rows[0])
        for c, row in zip(point, rows):
            if c != field.zero:
                w = [field.add(a, field.mul(c, b)) for a, b in zip(w, row)]
        if len(_cyclic_closure(field, mat, w)[0]) != dim:
            return False
    return True


def _quotient_matrix(field, mat, sub):
    rows, pivots = sub
    n = len(mat)
    nonpiv = [j for j in range(n) if j not in pivots]
    cols = []
    for j in nonpiv:
        image = linalg.mat_vec(field, mat, [field.one if t == j else field.zero for t in range(n)])
        image = linalg.reduce_vector(field, image, rows, pivots)
        cols.append([image[t] for t in nonpiv])
    return [[cols[j][i] for j in range(len(nonpiv))] for i in range(len(nonpiv))]


def minpoly_of_matrix(field, mat, seed=0):
    """Minimal polynomial via per-basis-vector Krylov closures and lcm."""
    n = len(mat)
    result = UPoly.one(field)
    for t in range(n):
        unit = [field.one if i == t else field.zero for i in range(n)]
        part = UPoly(field, linalg.vector_minpoly_coeffs(field, mat, unit))
        g = upoly.gcd(result, part)
        result = (result * part) // g
        if result.degree == n:
            break
    return result.monic()


def species_from_matrix(field, mat, seed=0):
    """Species read directly off a matrix: factor the minimal polynomial and
    take second differences of the nullity sequences of eigenfactor powers."""
    n = len(mat)
    if n == 0:
        return Species(())
    minpoly = minpoly_of_matrix(field, mat, seed)
    items = []
    for u, mult in upoly.factor(minpoly, seed):
        u_at = _poly_at_matrix(field, u, mat)
        nu = [0]
        power = linalg.identity(field, n)
        for _ in range(mult + 1):
            power = linalg.mat_mul(field, power, u_at)
            nu.append(n - linalg.rank(field, power))
        items.append((u.degree, lambdas_from_nullities(nu, u.degree)))
    species = Species.make(items)
    if species.dimension() != n:
        raise InternalInconsistency(
            f"species dimension {species.dimension()} differs from matrix size {n}"
        )
    return species


def _poly_at_matrix(field, poly, mat):
    n = len(mat)
    acc = [[field.zero] * n for _ in range(n)]
    for c in reversed(poly.coeffs):
        acc = linalg.mat_mul(field, acc, mat)
        for i in range(n):
            acc[i][i] = field.add(acc[i][i], c)
    return acc
