"""Prime field arithmetic and the multinomial coefficients used in divisibility checks."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial


class ConfigurationError(ValueError):
    """Raised when values from different prime fields are mixed."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class PrimeConfig:
    """The characteristic of the ground field, fixed for a session."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ConfigurationError(f"{self.p!r} is not a prime")

    def __call__(self, value: int) -> "Fp":
        return Fp(value % self.p, self)

    def elements(self):
        return [Fp(v, self) for v in range(self.p)]


@dataclass(frozen=True)
class Fp:
    """An element of F_p stored as its canonical residue in [0, p)."""

    value: int
    config: PrimeConfig

    def __post_init__(self):
        if not 0 <= self.value < self.config.p:
            object.__setattr__(self, "value", self.value % self.config.p)

    @property
    def p(self) -> int:
        return self.config.p

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.config != self.config:
                raise ConfigurationError(
                    f"cannot combine elements of F_{self.p} and F_{other.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((self.value + v) % self.p, self.config)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((self.value - v) % self.p, self.config)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((v - self.value) % self.p, self.config)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((self.value * v) % self.p, self.config)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value % self.p, self.config)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.value, k, self.p), self.config)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, -1, self.p), self.config)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * Fp(v, self.config).inverse()

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.config == other.config and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.config.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def add(a: Fp, b: Fp) -> Fp:
    return a + b


def mul_inverse(a: Fp) -> Fp:
    return a.inverse()


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{p}")
    return pow(a, -1, p)


def multinomial_exact(total: int, parts) -> int:
    """The multinomial coefficient total! / prod(parts!) over the integers."""
    parts = list(parts)
    if any(k < 0 for k in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    out = factorial(total)
    for k in parts:
        out //= factorial(k)
    return out


def multinomial(p_top: int, parts, config: PrimeConfig) -> Fp:
    """Multinomial coefficient reduced mod p.

    Computed exactly first; no Lucas-theorem shortcut.
    """
    return config(multinomial_exact(p_top, parts))


def weighted_multinomial_vanishes(p_top: int, parts, i: int, config: PrimeConfig) -> bool:
    """Whether multinomial(p_top; parts) * parts[i]! is divisible by p."""
    parts = list(parts)
    if not 0 <= i < len(parts):
        raise IndexError(f"index {i} out of range for {len(parts)} parts")
    value = multinomial_exact(p_top, parts) * factorial(parts[i])
    return value % config.p == 0


def compositions(total: int, length: int):
    """All tuples of `length` nonnegative integers summing to `total`."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest
