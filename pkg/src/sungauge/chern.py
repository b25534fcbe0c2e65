"""Chern characters in the truncated cohomology of CP^2 smashed with CP^{n-1} or C.

Elements are exact-rational combinations of monomials ``u^a v^b`` with
``a in {1, 2}``.  For the smash with CP^{n-1} the v-exponent runs over
``1..n-1``; for the smash with C = CP^{n-1}/CP^{n-3}, only the two top
classes survive and ``v^(n-2)``, ``v^(n-1)`` stand for ``v_{2n-4}``,
``v_{2n-2}``.  Every monomial has cohomological degree ``2a + 2b``.
"""

from __future__ import annotations

import enum
import functools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

Monomial = tuple[int, int]


class UnknownGenerator(KeyError):
    pass


class NonIntegralResult(ArithmeticError):
    pass


class ParityMismatch(ValueError):
    pass


class Space(enum.Enum):
    SMASH_CPN = "cpn"
    SMASH_C_ODD = "c_odd"
    SMASH_C_EVEN = "c_even"


def c_space(n: int) -> Space:
    """The C-family matching the parity of n."""
    return Space.SMASH_C_ODD if n % 2 else Space.SMASH_C_EVEN


@dataclass(frozen=True)
class RingContext:
    n: int
    space: Space = Space.SMASH_CPN

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")
        if self.space is Space.SMASH_C_ODD and self.n % 2 == 0:
            raise ParityMismatch(f"C-odd family needs n odd, got n={self.n}")
        if self.space is Space.SMASH_C_EVEN and self.n % 2:
            raise ParityMismatch(f"C-even family needs n even, got n={self.n}")

    def v_exponents(self) -> range:
        if self.space is Space.SMASH_CPN:
            return range(1, self.n)
        return range(self.n - 2, self.n)

    def allows(self, mono: Monomial) -> bool:
        a, b = mono
        return a in (1, 2) and b in self.v_exponents()


def degree(mono: Monomial) -> int:
    a, b = mono
    return 2 * a + 2 * b


@dataclass(frozen=True)
class GradedElement:
    context: RingContext
    coefficients: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in self.coefficients.items():
            c = Fraction(c)
            if not c:
                continue
            if not self.context.allows(mono):
                raise ValueError(f"monomial u^{mono[0]} v^{mono[1]} is outside {self.context}")
            clean[mono] = c
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @classmethod
    def outer(cls, context: RingContext, u_part: Mapping[int, Fraction],
              v_part: Mapping[int, Fraction]) -> GradedElement:
        """Product of a class from CP^2 and a class from the second factor, truncated."""
        coeffs: dict[Monomial, Fraction] = {}
        for a, x in u_part.items():
            for b, y in v_part.items():
                if context.allows((a, b)):
                    coeffs[(a, b)] = coeffs.get((a, b), 0) + Fraction(x) * Fraction(y)
        return cls(context, coeffs)

    def __getitem__(self, mono: Monomial) -> Fraction:
        return self.coefficients.get(mono, Fraction(0))

    def _combine(self, other: GradedElement, sign: int) -> GradedElement:
        if other.context != self.context:
            raise ValueError("elements from different rings")
        out = dict(self.coefficients)
        for mono, c in other.coefficients.items():
            out[mono] = out.get(mono, 0) + sign * c
        return GradedElement(self.context, out)

    def __add__(self, other: GradedElement) -> GradedElement:
        return self._combine(other, 1)

    def __sub__(self, other: GradedElement) -> GradedElement:
        return self._combine(other, -1)

    def __rmul__(self, scalar) -> GradedElement:
        s = Fraction(scalar)
        return GradedElement(self.context, {m: s * c for m, c in self.coefficients.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedElement):
            return self.__rmul__(other)
        if other.context != self.context:
            raise ValueError("elements from different rings")
        out: dict[Monomial, Fraction] = {}
        for (a1, b1), x in self.coefficients.items():
            for (a2, b2), y in other.coefficients.items():
                mono = (a1 + a2, b1 + b2)
                if self.context.allows(mono):
                    out[mono] = out.get(mono, 0) + x * y
        return GradedElement(self.context, out)

    def part(self, deg: int) -> dict[Monomial, Fraction]:
        return {m: c for m, c in self.coefficients.items() if degree(m) == deg}

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        v = "v" if self.context.space is Space.SMASH_CPN else "v_"
        for (a, b), c in self.coefficients.items():
            u = "u" if a == 1 else "u^2"
            if self.context.space is Space.SMASH_CPN:
                vv = "v" if b == 1 else f"v^{b}"
            else:
                vv = f"{v}{{{2 * b}}}"
            coef = "" if c == 1 else f"({c})"
            terms.append(f"{coef}{u}{vv}")
        return " + ".join(terms)


@functools.lru_cache(maxsize=64)
def _egf_powers(max_degree: int) -> tuple[tuple[int, ...], ...]:
    # m!-scaled coefficients of (e^v - 1)^i for i = 1..max_degree; products of
    # exponential generating series are binomial convolutions of integers
    base = (0,) + (1,) * max_degree
    powers = [base]
    for _ in range(max_degree - 1):
        prev = powers[-1]
        nxt = tuple(
            sum(math.comb(m, j) * prev[j] * base[m - j] for j in range(m + 1))
            for m in range(max_degree + 1)
        )
        powers.append(nxt)
    return tuple(powers)


def exp_power_series(i: int, max_degree: int) -> list[Fraction]:
    """Coefficients of v^0 .. v^max_degree in (e^v - 1)^i, by series multiplication."""
    if i < 1 or max_degree < 0:
        raise ValueError("need i >= 1 and max_degree >= 0")
    if i > max_degree:
        return [Fraction(0)] * (max_degree + 1)
    scaled = _egf_powers(max_degree)[i - 1]
    return [Fraction(c, math.factorial(m)) for m, c in enumerate(scaled)]


def binomial_power_sums(i: int, n: int) -> tuple[int, int]:
    """The binomial sums A_i (power n-2) and B_i (power n-1)."""
    if n < 3 or not 1 <= i <= n - 1:
        raise ValueError(f"need n >= 3 and 1 <= i <= n-1, got i={i}, n={n}")
    a = sum((-1) ** (i + j) * math.comb(i, j) * j ** (n - 2) for j in range(1, i + 1))
    b = sum((-1) ** (i + j) * math.comb(i, j) * j ** (n - 1) for j in range(1, i + 1))
    return a, b


# ---------------------------------------------------------------------------
# Generators and K-classes


@dataclass(frozen=True, order=True)
class Generator:
    index: int
    primed: bool = False

    @classmethod
    def parse(cls, name: str) -> Generator:
        m = re.fullmatch(r"L(')?_?(\d+)", name.strip())
        if not m:
            raise UnknownGenerator(name)
        return cls(int(m.group(2)), bool(m.group(1)))

    def __str__(self):
        return f"L{chr(39) if self.primed else ''}{self.index}"


def generators(context: RingContext) -> list[Generator]:
    if context.space is Space.SMASH_CPN:
        return [Generator(i, p) for i in range(1, context.n) for p in (False, True)]
    return [Generator(i) for i in range(1, 5)]


_HALF = Fraction(1, 2)
_U = {1: 1, 2: _HALF}   # u + u^2/2
_U2 = {2: 1}            # u^2


def ch_generator(context: RingContext, gen: Generator | str) -> GradedElement:
    """Truncated Chern character of a named generator."""
    if isinstance(gen, str):
        gen = Generator.parse(gen)
    n = context.n
    top, low = n - 1, n - 2
    if context.space is Space.SMASH_CPN:
        if not 1 <= gen.index <= n - 1:
            raise UnknownGenerator(f"{gen} (valid indices 1..{n - 1})")
        series = exp_power_series(gen.index, n - 1)
        v_part = {b: c for b, c in enumerate(series) if b >= 1}
        return GradedElement.outer(context, _U if gen.primed else _U2, v_part)

    if gen.primed or not 1 <= gen.index <= 4:
        raise UnknownGenerator(f"{gen} is not one of L1..L4")
    if context.space is Space.SMASH_C_ODD:
        table = {
            1: (_U, {low: 1, top: _HALF}),
            2: (_U, {top: 1}),
            3: (_U2, {low: 1, top: _HALF}),
            4: (_U2, {top: 1}),
        }
    else:
        table = {
            1: (_U, {low: 1}),
            2: (_U2, {low: 1}),
            3: (_U, {top: 1}),
            4: (_U2, {top: 1}),
        }
    u_part, v_part = table[gen.index]
    return GradedElement.outer(context, u_part, v_part)


@dataclass(frozen=True)
class KClass:
    context: RingContext
    combination: Mapping[Generator, int] = field(default_factory=dict)

    def __post_init__(self):
        valid = set(generators(self.context))
        clean = {}
        for g, c in self.combination.items():
            if isinstance(g, str):
                g = Generator.parse(g)
            if g not in valid:
                raise UnknownGenerator(f"{g} in {self.context}")
            if c:
                clean[g] = clean.get(g, 0) + int(c)
        object.__setattr__(self, "combination", dict(sorted(clean.items())))

    @classmethod
    def of(cls, context: RingContext, gen: Generator | str, coeff: int = 1) -> KClass:
        return cls(context, {gen: coeff})

    def __add__(self, other: KClass) -> KClass:
        if other.context != self.context:
            raise ValueError("K-classes from different spaces")
        out = dict(self.combination)
        for g, c in other.combination.items():
            out[g] = out.get(g, 0) + c
        return KClass(self.context, out)

    def __rmul__(self, k: int) -> KClass:
        return KClass(self.context, {g: k * c for g, c in self.combination.items()})

    def __neg__(self) -> KClass:
        return (-1) * self

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def ch(self) -> GradedElement:
        total = GradedElement(self.context)
        for g, c in self.combination.items():
            total = total + c * ch_generator(self.context, g)
        return total


@dataclass(frozen=True)
class CohomVector:
    """Coordinates (x, y, z) on u^2 v^{n-2}, u v^{n-1}, u^2 v^{n-1}."""

    x: int
    y: int
    z: int

    @classmethod
    def from_rationals(cls, x, y, z) -> CohomVector:
        vals = [Fraction(t) for t in (x, y, z)]
        for t in vals:
            if t.denominator != 1:
                raise NonIntegralResult(f"non-integral coordinate {t} in {tuple(map(str, vals))}")
        return cls(*(int(t) for t in vals))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.as_tuple())

    def __add__(self, other: CohomVector) -> CohomVector:
        return CohomVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __rmul__(self, k: int) -> CohomVector:
        return CohomVector(k * self.x, k * self.y, k * self.z)


def phi_of_element(elem: GradedElement) -> CohomVector:
    """n! * ch_{2n} + (n+1)! * ch_{2n+2} read off in (x, y, z) coordinates."""
    n = elem.context.n
    coords = {"x": Fraction(0), "y": Fraction(0), "z": Fraction(0)}
    for deg, scale in ((2 * n, math.factorial(n)), (2 * n + 2, math.factorial(n + 1))):
        for (a, b), c in elem.part(deg).items():
            # a == 2 in degree 2n is u^2 v^{n-2}; a == 1 is u v^{n-1}
            if deg == 2 * n:
                key = "x" if a == 2 else "y"
            else:
                key = "z"
            coords[key] += scale * c
    return CohomVector.from_rationals(coords["x"], coords["y"], coords["z"])


def phi(k: KClass) -> CohomVector:
    return phi_of_element(k.ch())
