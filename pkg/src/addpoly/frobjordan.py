"""Rational Jordan form and species of the q-power Frobenius on a root space.

Everything here is computed from the additive polynomial alone: the minimal
central left component gives the minimal polynomial of the Frobenius, and
per-eigenfactor kernel dimensions come from gcrc computations, so the root
space itself (which may live in an enormous extension) is never touched.
"""

from dataclasses import dataclass

from . import upoly
from .additive import central_to_upoly, gcrc, minimal_central_left_component, upoly_to_central
from .errors import InputError, InternalInconsistency
from .upoly import UPoly


@dataclass(frozen=True)
class Species:
    """Multiset of eigenfactor signatures (degree m; lambda_1..lambda_k).

    lambda_j counts the Jordan blocks of order j; trailing zeros are
    trimmed and the entries are kept canonically sorted, so equal species
    compare equal. The arrangement of blocks and the actual eigenfactors
    are abstracted away.
    """

    entries: tuple

    @staticmethod
    def make(items):
        entries = []
        for m, lambdas in items:
            lam = list(lambdas)
            while lam and lam[-1] == 0:
                lam.pop()
            if not lam:
                raise InputError("empty signature in species")
            if m < 1 or any(l < 0 for l in lam):
                raise InputError("malformed species signature")
            entries.append((m, tuple(lam)))
        return Species(tuple(sorted(entries)))

    def dimension(self):
        return sum(m * sum(j * l for j, l in enumerate(lam, start=1)) for m, lam in self.entries)

    def to_json(self):
        return [[m, list(lam)] for m, lam in self.entries]

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class RationalJordanForm:
    """Block data (eigenfactor, weakly decreasing orders) plus nullity sequences.

    Blocks are kept in the canonical order (eigenfactor degree, coefficient
    indices); nullities[i] is the sequence nu_0..nu_(k_i+1) used to derive
    the block orders of eigenfactor i.
    """

    field: object
    blocks: tuple
    nullities: tuple

    @property
    def species(self):
        items = []
        for u, orders in self.blocks:
            lam = [0] * orders[0]
            for o in orders:
                lam[o - 1] += 1
            items.append((u.degree, lam))
        return Species.make(items)

    def dimension(self):
        return sum(u.degree * sum(orders) for u, orders in self.blocks)

    def minimal_polynomial(self):
        out = UPoly.one(self.field)
        for u, orders in self.blocks:
            out = out * u ** orders[0]
        return out

    def to_json(self):
        return {
            "minpoly_factors": [[u.encode(), orders[0]] for u, orders in self.blocks],
            "species": self.species.to_json(),
            "nullities": {str(i): list(nu) for i, nu in enumerate(self.nullities)},
        }


def lambdas_from_nullities(nu, m):
    """Block-order counts from a nullity sequence: lambda_j = (2nu_j - nu_(j-1) - nu_(j+1))/m."""
    lams = []
    for j in range(1, len(nu) - 1):
        val = 2 * nu[j] - nu[j - 1] - nu[j + 1]
        if val < 0 or val % m:
            raise InternalInconsistency(
                f"nullity sequence {nu} is not consistent with eigenfactor degree {m}"
            )
        lams.append(val // m)
    return lams


def _nullity_sequence(f, u, k):
    tower = f.tower
    nu = [0]  # gcrc(f, x) = x
    power = UPoly.one(tower.fr)
    for _ in range(k + 1):
        power = power * u
        nu.append(gcrc(f, upoly_to_central(tower, power)).exponent)
    return nu


def nullity_sequence(f, u, k):
    """Kernel dimensions nu_j of u(Frobenius)^j on the root space, j = 0..k+1.

    Each nu_j is the exponent of gcrc(f, the central preimage of u^j);
    validates that u is an eigenfactor of f of multiplicity exactly k.
    """
    tau_fstar = central_to_upoly(minimal_central_left_component(f))
    if not (tau_fstar % u**k).is_zero or (tau_fstar % u ** (k + 1)).is_zero:
        raise InputError("u is not an eigenfactor of the stated multiplicity")
    nu = _nullity_sequence(f, u, k)
    if any(nu[j] > nu[j + 1] for j in range(k + 1)) or nu[k] != nu[k + 1]:
        raise InternalInconsistency(f"nullity sequence {nu} is not monotone-stable")
    return nu


def rational_jordan_form(f, seed=0):
    """Species and block structure of the q-power Frobenius on the root space of f.

    Steps: minimal central left component, complete factorization of its
    commutative image, then one gcrc-driven nullity sequence per
    eigenfactor. The u^j are built incrementally, and nu_(k+1) is computed
    even though the sequence stabilizes at k, keeping the second-difference
    formula uniform at j = k.
    """
    if not f.is_monic or not f.is_squarefree or f.exponent < 1:
        raise InputError("input must be monic squarefree of exponent >= 1")
    fstar = minimal_central_left_component(f)
    tau_fstar = central_to_upoly(fstar)
    blocks = []
    nullities = []
    for u, mult in upoly.factor(tau_fstar, seed):
        nu = _nullity_sequence(f, u, mult)
        lams = lambdas_from_nullities(nu, u.degree)
        orders = []
        for j in range(len(lams), 0, -1):
            orders.extend([j] * lams[j - 1])
        if not orders or orders[0] != mult:
            raise InternalInconsistency(
                f"top block order {orders[:1]} disagrees with eigenfactor multiplicity {mult}"
            )
        blocks.append((u, tuple(orders)))
        nullities.append(tuple(nu))
    form = RationalJordanForm(f.tower.fr, tuple(blocks), tuple(nullities))
    if form.dimension() != f.exponent:
        raise InternalInconsistency(
            f"block dimensions sum to {form.dimension()}, expected {f.exponent}"
        )
    return form


def companion_matrix(u):
    """Companion matrix of a monic u: ones on the subdiagonal, -coeffs in the last column."""
    if not u.is_monic or u.degree < 1:
        raise InputError("companion matrix needs a monic polynomial of degree >= 1")
    field = u.field
    m = u.degree
    mat = [[field.zero] * m for _ in range(m)]
    for i in range(1, m):
        mat[i][i - 1] = field.one
    for i in range(m):
        mat[i][m - 1] = field.neg(u.coeffs[i])
    return mat


def jordan_block(u, order):
    """Rational Jordan block: `order` copies of the companion matrix chained by identities."""
    if order < 1:
        raise InputError("block order must be positive")
    field = u.field
    m = u.degree
    comp = companion_matrix(u)
    size = order * m
    mat = [[field.zero] * size for _ in range(size)]
    for b in range(order):
        off = b * m
        for i in range(m):
            for j in range(m):
                mat[off + i][off + j] = comp[i][j]
        if b + 1 < order:
            for i in range(m):
                mat[off + i][off + m + i] = field.one
    return mat


def block_matrix(form):
    """Explicit block-diagonal matrix over F_r realizing a rational Jordan form."""
    field = form.field
    pieces = []
    for u, orders in form.blocks:
        for order in orders:
            pieces.append(jordan_block(u, order))
    size = sum(len(p) for p in pieces)
    mat = [[field.zero] * size for _ in range(size)]
    off = 0
    for piece in pieces:
        for i, row in enumerate(piece):
            mat[off + i][off : off + len(piece)] = row
        off += len(piece)
    return mat


def realize_species(field, species):
    """A rational Jordan form over `field` with the given species.

    Eigenfactors are assigned in lexicographic order per degree; raises
    InputError when the field has too few irreducibles of some degree.
    """
    need = {}
    for m, _lam in species:
        need[m] = need.get(m, 0) + 1
    pool = {}
    for m, count in need.items():
        gen = upoly.irreducible_polynomials(field, m)
        polys = []
        try:
            for _ in range(count):
                polys.append(next(gen))
        except StopIteration:
            raise InputError(
                f"species needs {count} distinct irreducibles of degree {m} over GF({field.size})"
            ) from None
        pool[m] = polys
    blocks = []
    for m, lam in species:
        u = pool[m].pop(0)
        orders = []
        for j in range(len(lam), 0, -1):
            orders.extend([j] * lam[j - 1])
        blocks.append((u, tuple(orders)))
    nullities = tuple(_nullities_from_orders(u.degree, orders) for u, orders in blocks)
    return RationalJordanForm(field, tuple(blocks), nullities)


def _nullities_from_orders(m, orders):
    k = orders[0]
    nu = [0]
    for j in range(1, k + 2):
        nu.append(m * sum(min(j, o) for o in orders))
    return nu
