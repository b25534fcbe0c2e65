"""Orders and classification data for SU(n)-gauge groups over CP^2.

Each computed quantity is paired with its closed form so callers can check
agreement.  Lattices are kept in raw (x, y, z) coordinates of Z^3; the
subgroup orders are basis-free indices, so no change to the Im(a) basis is
needed except for cross-checks.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Literal

from .chern import (
    CohomVector,
    KClass,
    ParityMismatch,
    RingContext,
    Space,
    c_space,
    generators,
    phi,
)
from .exact_linalg import (
    Lattice,
    hnf_rows,
    lattice_contains,
    minimal_multiplier,
    subgroup_order_in_quotient,
)

Parity = Literal["odd", "even"]


class NotPrime(ValueError):
    pass


@dataclass(frozen=True)
class OrderResult:
    n: int
    computed: int | float
    closed_form: int
    k: int | None = None
    agrees: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "agrees", self.computed == self.closed_form)


def _require_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")


def _family(n: int, family: Space | str) -> Space:
    if isinstance(family, Space):
        return family
    key = family.lower()
    if key == "cpn":
        return Space.SMASH_CPN
    if key == "c":
        return c_space(n)
    try:
        return Space(key)
    except ValueError:
        raise ValueError(f"unknown family {family!r}") from None


# ---------------------------------------------------------------------------
# Lattices


def phi_rows(n: int, family: Space | str = Space.SMASH_CPN) -> list[tuple[int, int, int]]:
    """Phi of every generator of the family, in generator order."""
    _require_n(n)
    ctx = RingContext(n, _family(n, family))
    return [phi(KClass.of(ctx, g)).as_tuple() for g in generators(ctx)]


def im_phi_lattice(n: int, family: Space | str = Space.SMASH_CPN) -> Lattice:
    """Canonical lattice spanned by Phi of all generators of the family.

    Raises ParityMismatch when a C-family does not match the parity of n.
    """
    return _im_phi(n, _family(n, family))


@functools.lru_cache(maxsize=256)
def _im_phi(n: int, space: Space) -> Lattice:
    return hnf_rows(phi_rows(n, space), ambient_dim=3)


def reduced_phi_generators(n: int) -> list[tuple[int, int, int]]:
    _require_n(n)
    return [
        (n * (n - 1) // 2, n, n * (n + 1) // 2),
        (n * (n - 1), 0, 0),
        (0, 2 * n, 0),
    ]


def reduced_phi_span(n: int) -> Lattice:
    return hnf_rows(reduced_phi_generators(n), ambient_dim=3)


def im_a_basis(n: int) -> list[tuple[int, int, int]]:
    """Basis of the image of a: x+y = z mod 2 for n odd, y even for n even."""
    _require_n(n)
    if n % 2:
        return [(1, 0, 1), (0, 1, 1), (0, 0, 2)]
    return [(1, 0, 0), (0, 2, 0), (0, 0, 1)]


def im_a_lattice(n: int) -> Lattice:
    return hnf_rows(im_a_basis(n), ambient_dim=3)


# ---------------------------------------------------------------------------
# Orders


def order_bound_closed_form(n: int) -> int:
    m = n * (n * n - 1)
    return m // 2 if n % 2 else m


def restricted_boundary_order(n: int) -> OrderResult:
    """Order of the restriction of the boundary map to the bottom cells.

    This is the smallest multiple of (1, 0, 1) lying in Im(Phi).  It is a lower
    bound on the "order" m' of the boundary map over CP^2, not its exact value.
    """
    _require_n(n)
    m = minimal_multiplier(im_phi_lattice(n, Space.SMASH_CPN), (1, 0, 1))
    if m is None:
        raise ArithmeticError(f"(1,0,1) has infinite order modulo Im(Phi) for n={n}")
    return OrderResult(n, m, order_bound_closed_form(n))


def even_order_bound_over_s4(n: int) -> int | None:
    """Lower bound n(n^2-1) on the order m over S^4, available for even n only."""
    if n < 3 or n % 2:
        return None
    # m >= m' >= order of the restriction
    return restricted_boundary_order(n).computed


def alpha_lift_coords(n: int, k: int, i: int) -> CohomVector:
    """Coordinates of the lift of the image of the i-th generator under the k-th boundary map."""
    _require_n(n)
    if i not in (1, 2):
        raise ValueError(f"i must be 1 or 2, got {i}")
    low = math.factorial(n - 2) * k
    top = math.factorial(n - 1) * k
    if i == 2:
        return CohomVector(0, 0, top)
    if n % 2:
        if top % 2:
            raise ArithmeticError(f"(n-1)!k/2 is not integral for n={n}, k={k}")
        return CohomVector(low, 0, top // 2)
    return CohomVector(low, 0, 0)


def boundary_image_closed_form(n: int, k: int) -> int:
    if n % 2:
        h = n * (n * n - 1) // 2
        return (h // math.gcd(h, k)) * (n // math.gcd(n, k))
    a = n * (n - 1) // 2
    b = n * (n + 1)
    return (a // math.gcd(a, k)) * (b // math.gcd(b, k))


def boundary_image_order(n: int, k: int, *, relations: Lattice | None = None,
                       check_im_a: bool = True) -> OrderResult:
    """Order of the image of the k-th boundary map inside Im(a)/Im(Phi).

    ``relations`` may be passed to reuse a precomputed C-family Im(Phi).
    """
    _require_n(n)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if relations is None:
        relations = im_phi_lattice(n, c_space(n))
    gens = [alpha_lift_coords(n, k, 1).as_tuple(), alpha_lift_coords(n, k, 2).as_tuple()]
    if check_im_a:
        ima = im_a_lattice(n)
        for g in gens:
            if not lattice_contains(ima, g):
                raise ArithmeticError(f"lift {g} is not in Im(a) for n={n}, k={k}")
    computed = subgroup_order_in_quotient(relations, gens)
    return OrderResult(n, computed, boundary_image_closed_form(n, k), k=k)


# ---------------------------------------------------------------------------
# Classification predicates


def necessary_modulus(n: int) -> int:
    m = n * (n * n - 1)
    return m // 2 if n % 2 else m


def necessary_equiv_condition(n: int, k: int, l: int) -> bool:
    """Gcd condition every homotopy equivalence G_k ~ G_l over CP^2 must satisfy.

    False certifies the two gauge groups are not homotopy equivalent.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    m = necessary_modulus(n)
    return math.gcd(m, k) == math.gcd(m, l)


def sufficient_equiv_condition(m_prime: int, k: int, l: int) -> bool:
    """(m', k) == (m', l); implies a local homotopy equivalence at every prime."""
    if m_prime < 1:
        raise ValueError(f"m' must be positive, got {m_prime}")
    return math.gcd(m_prime, k) == math.gcd(m_prime, l)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def p_component(p: int, a: int) -> int:
    """Largest power of p dividing a, e.g. p_component(2, 12) == 4."""
    if not _is_prime(p):
        raise NotPrime(p)
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    out = 1
    while a % p == 0:
        a //= p
        out *= p
    return out


def p_component_implication(n: int, k: int, l: int, p: int) -> bool:
    """Truth of the p-component implication for one instance (n even)."""
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    h = n // 2
    lhs = p_component(p, math.gcd(h, k)) * p_component(p, math.gcd(n, k))
    rhs = p_component(p, math.gcd(h, l)) * p_component(p, math.gcd(n, l))
    if lhs != rhs:
        return True
    return p_component(p, math.gcd(n, k)) == p_component(p, math.gcd(n, l))


# ---------------------------------------------------------------------------
# Static data


@dataclass(frozen=True)
class KnownOrderRecord:
    group: str
    m: int | None
    m_prime: int | None
    source: str

    def consistent(self) -> bool:
        if self.m is None or self.m_prime is None:
            return True
        return self.m in (self.m_prime, 2 * self.m_prime)


_KNOWN = (
    KnownOrderRecord("SU(2)", 12, 6, "Kono 1991 (m); Kono-Tsukuda 1996 (m')"),
    KnownOrderRecord("SU(3)", 24, 12, "Hamanaka-Kono 2006 (m); Theriault 2012 (m')"),
    KnownOrderRecord("SU(5)", 120, None, "Theriault 2015 (m)"),
    KnownOrderRecord("Sp(2)", 40, 40, "Theriault 2010 (m); unpublished preprint (m')"),
)


def known_orders() -> list[KnownOrderRecord]:
    return list(_KNOWN)


def known_order(group: str) -> KnownOrderRecord | None:
    return next((r for r in _KNOWN if r.group == group), None)


@dataclass(frozen=True)
class WnHomotopyEntry:
    parity: Parity
    offset: int
    group: str


_WN = {
    "odd": {0: "0", 1: "Z", 2: "0", 3: "Z"},
    "even": {0: "0", 1: "Z", 2: "Z/2", 3: "Z+Z/2"},
}


def wn_homotopy(parity: Parity, offset: int) -> WnHomotopyEntry:
    """pi_i(SU(inf)/SU(n)) for i - 2n = offset; every offset <= 0 gives 0."""
    if parity not in _WN:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if offset > 3:
        raise ValueError(f"offset {offset} is beyond the tabulated range")
    return WnHomotopyEntry(parity, offset, _WN[parity][max(offset, 0)])
