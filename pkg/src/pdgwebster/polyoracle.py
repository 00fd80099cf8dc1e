"""The polynomial ring F_p[t_1..t_n] with the derivation t_i -> t_i^2, and symmetric functions.

Exponent vectors are dense tuples of length n.  Besides being a small p-DG
algebra in its own right, this module serves as an independent oracle for
identities involving elementary and complete symmetric functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .modp import PrimeConfig, compositions


@dataclass(frozen=True)
class Polynomial:
    n: int
    p: int
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            if len(exps) != self.n:
                raise ValueError(f"exponent vector {exps} has wrong length for n={self.n}")
            c %= self.p
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "terms", clean)

    # constructors
    @classmethod
    def zero(cls, n, p):
        return cls(n, p, {})

    @classmethod
    def constant(cls, c, n, p):
        return cls(n, p, {(0,) * n: c})

    @classmethod
    def variable(cls, i, n, p, power=1):
        """t_i ** power, with 1-based i."""
        exps = [0] * n
        exps[i - 1] = power
        return cls(n, p, {tuple(exps): 1})

    def _check(self, other):
        if (self.n, self.p) != (other.n, other.p):
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.n, self.p)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.n, self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, self.p, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % self.p
        return Polynomial(self.n, self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial.constant(1, self.n, self.p)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.n, self.p)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.n, self.p) == (other.n, other.p) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.p, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Common degree (deg t_i = 2) or None when inhomogeneous or zero."""
        degs = {2 * sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"t{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            c = self.terms[e]
            parts.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(parts)


def deriv(f: Polynomial) -> Polynomial:
    """Apply t_i -> t_i^2 extended by Leibniz: t^a -> a_i t^(a + e_i) summed over i."""
    out = {}
    for e, c in f.terms.items():
        for i, k in enumerate(e):
            if k:
                new = list(e)
                new[i] += 1
                new = tuple(new)
                out[new] = (out.get(new, 0) + c * k) % f.p
    return Polynomial(f.n, f.p, out)


def iterate_deriv(f: Polynomial, k: int) -> Polynomial:
    for _ in range(k):
        f = deriv(f)
    return f


def elementary(i: int, n: int, p: int) -> Polynomial:
    """The i-th elementary symmetric polynomial in n variables; zero for i > n."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    terms = {}
    for subset in combinations(range(n), i):
        e = [0] * n
        for j in subset:
            e[j] = 1
        terms[tuple(e)] = 1
    return Polynomial(n, p, terms)


def complete_homogeneous(k: int, n: int, p: int) -> Polynomial:
    """Sum of all degree-k monomials in n variables, built by enumeration."""
    return Polynomial(n, p, {e: 1 for e in compositions(k, n)})


def check_elementary_derivative(i: int, n: int, p: int) -> bool:
    lhs = deriv(elementary(i, n, p))
    rhs = elementary(1, n, p) * elementary(i, n, p) - (i + 1) * elementary(i + 1, n, p)
    return lhs == rhs


def check_p_nilpotent_on(f: Polynomial) -> bool:
    return iterate_deriv(f, f.p).is_zero()


def monomials_up_to(n: int, max_total: int):
    for total in range(max_total + 1):
        yield from compositions(total, n)


@dataclass(frozen=True)
class SymFunExpr:
    """A polynomial in the symbols E_1..E_cap (E_0 = 1, E_d = 0 for d > cap).

    Keys are exponent tuples (a_1, ..., a_cap) for E_1^a_1 ... E_cap^a_cap.
    """

    cap: int
    p: int
    terms: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            c %= self.p
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def symbol(cls, d, cap, p):
        if d == 0:
            return cls(cap, p, {(0,) * cap: 1})
        if d > cap:
            return cls(cap, p, {})
        e = [0] * cap
        e[d - 1] = 1
        return cls(cap, p, {tuple(e): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SymFunExpr(self.cap, self.p, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunExpr(self.cap, self.p, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymFunExpr(self.cap, self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunExpr):
            return NotImplemented
        return (self.cap, self.p, self.terms) == (other.cap, other.p, other.terms)

    def __hash__(self):
        return hash((self.cap, self.p, frozenset(self.terms.items())))

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def evaluate(self, n: int) -> Polynomial:
        """Substitute E_d -> elementary(d, n)."""
        es = [elementary(d, n, self.p) for d in range(1, self.cap + 1)]
        out = Polynomial.zero(n, self.p)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, n, self.p)
            for base, k in zip(es, e):
                term = term * base ** k
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"E{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            c = self.terms[e]
            parts.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(parts)


def complete_h_in_elementary(k: int, cap: int, p: int) -> SymFunExpr:
    """h_k in the elementary basis via h_k = sum_{i=1..k} (-1)^(i-1) E_i h_{k-i}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    h = [SymFunExpr.symbol(0, cap, p)]
    for kk in range(1, k + 1):
        acc = SymFunExpr(cap, p, {})
        for i in range(1, kk + 1):
            acc = acc + SymFunExpr.symbol(i, cap, p) * h[kk - i] * (-1) ** (i - 1)
        h.append(acc)
    return h[k]


def sym_deriv(f: SymFunExpr) -> SymFunExpr:
    """The derivation on F_p[E_1..E_cap]: E_d -> E_1 E_d - (d+1) E_{d+1}, E_{cap+1} = 0."""
    out = SymFunExpr(f.cap, f.p, {})
    e1 = SymFunExpr.symbol(1, f.cap, f.p)
    for e, c in f.terms.items():
        for idx, k in enumerate(e):
            if not k:
                continue
            d = idx + 1
            rest = list(e)
            rest[idx] -= 1
            rest = SymFunExpr(f.cap, f.p, {tuple(rest): c * k})
            image = e1 * SymFunExpr.symbol(d, f.cap, f.p) + SymFunExpr.symbol(d + 1, f.cap, f.p) * (-(d + 1))
            out = out + rest * image
    return out


def check_leibniz_power(a: Polynomial, b: Polynomial) -> bool:
    p = a.p
    lhs = iterate_deriv(a * b, p)
    return lhs == iterate_deriv(a, p) * b + a * iterate_deriv(b, p)


# Divided-difference representation of the nilHecke algebra on F_p[t_1..t_n].

def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (t_i - t_{i+1}), computed monomial by monomial; i is 1-based."""
    a_idx, b_idx = i - 1, i
    out = {}
    for e, c in f.terms.items():
        a, b = e[a_idx], e[b_idx]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        # (t_i^hi t_{i+1}^lo - t_i^lo t_{i+1}^hi)/(t_i - t_{i+1}) = (t_i t_{i+1})^lo * h_{hi-lo-1}(t_i, t_{i+1})
        for k in range(hi - lo):
            new = list(e)
            new[a_idx] = lo + (hi - lo - 1 - k)
            new[b_idx] = lo + k
            new = tuple(new)
            out[new] = (out.get(new, 0) + sign * c) % f.p
    return Polynomial(f.n, f.p, out)


def multiply_by_variable(f: Polynomial, i: int) -> Polynomial:
    out = {}
    for e, c in f.terms.items():
        new = list(e)
        new[i - 1] += 1
        out[tuple(new)] = c
    return Polynomial(f.n, f.p, out)


__all__ = [
    "Polynomial",
    "SymFunExpr",
    "PrimeConfig",
    "deriv",
    "iterate_deriv",
    "elementary",
    "complete_homogeneous",
    "check_elementary_derivative",
    "check_p_nilpotent_on",
    "complete_h_in_elementary",
    "sym_deriv",
    "check_leibniz_power",
    "divided_difference",
    "multiply_by_variable",
    "monomials_up_to",
]
