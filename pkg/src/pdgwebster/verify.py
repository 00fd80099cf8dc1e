"""Verification suites over grids of (p, s, n).

Every suite returns a list of report rows {id, sequence, p, status,
trace_length}; a suite passes iff every row has status "proven".
Instances run sequentially in a fixed order, so reports are deterministic.
"""

from __future__ import annotations

import itertools
from math import factorial

from .algebra import D, NH, W, Algebra
from .derivation import (
    DerivationTable,
    check_p_nilpotent_generators,
    check_relation_preservation,
    iterate,
)
from .modp import PrimeConfig, compositions, weighted_multinomial_vanishes
from .morphisms import (
    DOWN,
    UP,
    SplitMap,
    SplitterBimodule,
    bimodule_nilpotency_rows,
    compatibility_rows,
    quotient_intertwines,
)
from .polyoracle import (
    Polynomial,
    check_elementary_derivative,
    complete_h_in_elementary,
    elementary,
    iterate_deriv,
)
from .relations import relation_instances
from .rewrite import PROVEN, UNKNOWN, prove_zero
from .seqcore import merge_spec

FAILED = "failed"
SUITES = ("polyring", "nilhecke", "webster", "deformed", "inclusion", "bimodules", "quotient")


def _row(ident, sequence, p, ok, steps=0):
    status = ok if isinstance(ok, str) else (PROVEN if ok else FAILED)
    return {"id": ident, "sequence": sequence, "p": p, "status": status, "trace_length": steps}


def spec_grid(s_max: int, m_max: int, m_min: int = 1):
    for m in range(m_min, m_max + 1):
        yield from itertools.product(range(s_max + 1), repeat=m)


def polyring_rows(p: int, n_max: int) -> list:
    rows = []
    for n in range(1, n_max + 1):
        for i in range(1, n + 1):
            t = Polynomial.variable(i, n, p)
            rows.append(_row(f"poly:d^p(t{i})", f"n={n}", p, iterate_deriv(t, p).is_zero()))
            rows.append(_row(f"poly:dE{i}", f"n={n}", p, check_elementary_derivative(i, n, p)))
            e = elementary(i, n, p)
            rows.append(_row(f"poly:d^p(E{i})", f"n={n}", p, iterate_deriv(e, p).is_zero()))
    cfg = PrimeConfig(p)
    for parts in compositions(p, p):
        if sum(1 for k in parts if k) < 2:
            continue
        for i, k in enumerate(parts):
            if k:
                ok = weighted_multinomial_vanishes(p, parts, i, cfg)
                rows.append(_row(f"multinomial:{list(parts)}[{i}]", "-", p, ok))
    return rows


def derivation_rows(algebra: Algebra, budget: int = 0) -> list:
    T = DerivationTable(algebra)
    tag = f"{algebra.kind}{algebra.labels}n{algebra.n}"
    rows = check_relation_preservation(T, budget) + check_p_nilpotent_generators(T, budget)
    for r in rows:
        r["id"] = f"{tag}:{r['id']}"
    return rows


def nilhecke_rows(p: int, n_max: int, budget: int = 0) -> list:
    rows = []
    for n in range(1, n_max + 1):
        rows += derivation_rows(Algebra(NH, (), n, p), budget)
    if n_max >= 2:
        A = Algebra(NH, (), 2, p)
        psi = A.psi(1, "b,b")
        T = DerivationTable(A)
        two = A.x(1) * A.psi(1) * A.x(2) * A.e("b,b")
        rows.append(_row("NH:d^2(psi)=2 x psi x'", "b,b", p, iterate(T, psi, 2) == two.scale(2)))
        rows.append(_row("NH:d^3(psi)=0", "b,b", p, iterate(T, psi, 3).is_zero()))
    return rows


def webster_rows(p: int, specs, n_values, budget: int = 0) -> list:
    rows = []
    for s in specs:
        for n in n_values:
            rows += derivation_rows(Algebra(W, s, n, p), budget)
            rows += red_black_product_rows(Algebra(W, s, n, p))
    return rows


def red_black_product_rows(A: Algebra) -> list:
    """d^p(psi) on (red s, b) equals prod_{a<p}(s+a) psi x^p, and that coefficient is 0 mod p."""
    rows = []
    p = A.p
    T = DerivationTable(A)
    for seq in A.sequences:
        for j in range(1, A.strands):
            if seq[j - 1] == 0 or seq[j] != 0:
                continue
            psi = A.psi(j, seq)
            if not psi:
                continue
            s = A.label(seq[j - 1])
            coeff = 1
            for a in range(p):
                coeff *= s + a
            xs = A.one()
            for _ in range(p):
                xs = A.x(j + 1) * xs
            expected = (psi * xs).scale(coeff)
            ok = iterate(T, psi, p) == expected and coeff % p == 0
            rows.append(_row(f"{A.kind}:d^p(psi red-black)=prod(s+a)", A.seq_str(seq), p, ok))
    return rows


def deformed_rows(p: int, specs, n_values, budget: int = 0) -> list:
    rows = []
    for s in specs:
        for n in n_values:
            rows += derivation_rows(Algebra(D, s, n, p), budget)
    rows += h_pattern_rows(p)
    return rows


def h_pattern_rows(p: int, k_max: int = 4, s_max: int = 3) -> list:
    """d^k(psi e(b, s)) = k! psi h_k(E) with E_d = 0 for d > s, compared to the symmetric-function oracle."""
    rows = []
    for s in range(1, s_max + 1):
        A = Algebra(D, (s,), 1, p)
        psi = A.psi(1, "b," + str(s))
        T = DerivationTable(A)
        for k in range(k_max + 1):
            got = iterate(T, psi, k)
            h = complete_h_in_elementary(k, s, p) * factorial(k)
            expected = A.zero()
            for exps, c in h.terms.items():
                word = A.one()
                for d, mult in enumerate(exps, start=1):
                    for _ in range(mult):
                        word = A.E(d, 2) * word
                expected = expected + (psi * word).scale(c)
            diff = got - expected
            rows.append(_row(f"D:d^{k}(psi b-red)=k! psi h_{k}", A.seq_str((0, 1)), p, prove_zero(diff)))
    return rows


def inclusion_rows(p: int, specs, n_values, budget: int = 0) -> list:
    rows = []
    for s in specs:
        for n in n_values:
            A = Algebra(D, s, n, p)
            insts = relation_instances(A)
            for j in range(1, A.m + 1):
                for a in range(A.label(j) + 1):
                    phi = SplitMap(A, j, a)
                    for inst in insts:
                        rows.append(
                            _row(
                                f"Phi{j},{a}{A.labels}n{n}:{inst.name}",
                                A.seq_str(inst.sequence),
                                p,
                                prove_zero(phi(inst.element), budget),
                            )
                        )
            for j in range(1, A.m):
                back = merge_spec(A.spec, j)
                target = SplitMap(Algebra(D, back.labels, n, p), j, A.label(j + 1)).target
                rows.append(_row(f"roundtrip{A.labels}j{j}", "-", p, target == A))
    return rows


def bimodule_rows(p: int, specs, n_values, budget: int = 0) -> list:
    rows = []
    for s in specs:
        for n in n_values:
            for j in range(1, len(s)):
                for side in (UP, DOWN):
                    bm = SplitterBimodule(side, s, n, j, p)
                    tag = f"{side}{tuple(s)}n{n}j{j}"
                    for r in compatibility_rows(bm, budget) + bimodule_nilpotency_rows(bm, budget):
                        r["id"] = f"{tag}:{r['id']}"
                        rows.append(r)
    return rows


def quotient_rows(p: int, specs, n_values, budget: int = 0) -> list:
    rows = []
    for s in specs:
        for n in n_values:
            for r in quotient_intertwines(Algebra(D, s, n, p), budget):
                r["id"] = f"q{tuple(s)}n{n}:{r['id']}"
                rows.append(r)
    return rows


def run_suite(name: str, primes, s=None, n=None, s_max=3, n_max=2, m_max=2, budget=0) -> list:
    """Run one named suite (or "all") over the configured grid."""
    if name == "all":
        out = []
        for suite in SUITES:
            out += run_suite(suite, primes, s, n, s_max, n_max, m_max, budget)
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    n_values = [n] if n is not None else list(range(0, n_max + 1))
    if name == "bimodules":
        specs = [tuple(s)] if s is not None else [(2, 1), (1, 1)]
    elif s is not None:
        specs = [tuple(s)]
    else:
        specs = list(spec_grid(s_max, m_max))
    rows = []
    for p in primes:
        if name == "polyring":
            rows += polyring_rows(p, n if n is not None else max(n_max, 1))
        elif name == "nilhecke":
            rows += nilhecke_rows(p, n if n is not None else max(n_max, 1), budget)
        elif name == "webster":
            rows += webster_rows(p, specs, n_values, budget)
        elif name == "deformed":
            rows += deformed_rows(p, specs, n_values, budget)
        elif name == "inclusion":
            rows += inclusion_rows(p, specs, [v for v in n_values if v <= 1] or n_values, budget)
        elif name == "bimodules":
            rows += bimodule_rows(p, specs, n_values, budget)
        elif name == "quotient":
            rows += quotient_rows(p, specs, n_values, budget)
    return rows


def failures(rows) -> list:
    return [r for r in rows if r["status"] != PROVEN]


__all__ = ["run_suite", "failures", "SUITES", "FAILED", "UNKNOWN"]


# -- cross-validation of the zero prover against the linear-algebra oracle

def identity_corpus(primes=(2, 3), s_max=3, m_max=2, n_max=2):
    """(label, element) pairs asserted to vanish by the derivation, inclusion,
    bimodule and quotient checks."""
    from .derivation import table_for
    from .morphisms import QuotientMap, SplitMap, merged_source

    for p in primes:
        for n in range(1, 4):
            A = Algebra(NH, (), n, p)
            yield from _derivation_identities(A, table_for(A))
        for kind in (W, D):
            for s in spec_grid(s_max, m_max):
                for n in range(n_max + 1):
                    A = Algebra(kind, s, n, p)
                    yield from _derivation_identities(A, table_for(A))
                    if kind == D and n <= 1:
                        insts = relation_instances(A)
                        for j in range(1, A.m + 1):
                            for a in range(A.label(j) + 1):
                                phi = SplitMap(A, j, a)
                                for inst in insts:
                                    yield (f"Phi{j},{a}:{inst.name}", phi(inst.element))
                    if kind == D:
                        q = QuotientMap(A)
                        dD, dW = table_for(A), table_for(q.target)
                        for layer, seq in A.generators():
                            g = A.generator(layer, seq)
                            yield ("quotient", q(dD(g)) - dW(q(g)))
    for s in ((2, 1), (1, 1)):
        for n in range(n_max + 1):
            big = Algebra(D, s, n, 3)
            small = merged_source(big, 1)
            phi = SplitMap(small, 1, big.label(2))
            dS, dB = table_for(small), table_for(big)
            for layer, seq in small.generators():
                g = small.generator(layer, seq)
                yield ("bimodule-compat", phi(dS(g)) - dB(phi(g)))


def _derivation_identities(A, T):
    for inst in relation_instances(A):
        yield (f"{A.kind}:d({inst.name})", T(inst.element))
    for layer, seq in A.generators():
        yield (f"{A.kind}:d^p", iterate(T, A.generator(layer, seq), A.p))


def cross_validate(identities, caps=None) -> dict:
    """For each identity proven zero, ask the oracle; count agreements."""
    from .oracle import ResourceError, oracle_equal

    stats = {"agree": 0, "nontrivial": 0, "disagree": 0, "skipped": 0, "unproven": 0, "disagreements": []}
    for label, el in identities:
        if prove_zero(el) != PROVEN:
            stats["unproven"] += 1
            continue
        try:
            ok = oracle_equal(el, el.algebra.zero(), caps)
        except ResourceError:
            stats["skipped"] += 1
            continue
        if ok:
            stats["agree"] += 1
            stats["nontrivial"] += bool(el.terms)
        else:
            stats["disagree"] += 1
            stats["disagreements"].append((label, str(el)))
    return stats
