"""Strand labelings: sequences of black strands and ordered red strands.

A sequence is stored as a tuple of ints: 0 for a black strand and k >= 1 for
the k-th red strand of the red spec s.  Storing ordinals rather than labels
keeps red strands with equal labels distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

BLACK = 0


@dataclass(frozen=True)
class RedSpec:
    """The labels (s_1, ..., s_m) of the red strands."""

    labels: tuple = ()

    def __post_init__(self):
        labels = tuple(int(v) for v in self.labels)
        if any(v < 0 for v in labels):
            raise ValueError(f"red labels must be nonnegative, got {labels}")
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.labels)

    def label(self, ordinal: int) -> int:
        return self.labels[ordinal - 1]

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __str__(self):
        return "(" + ",".join(map(str, self.labels)) + ")"


def as_spec(s) -> RedSpec:
    return s if isinstance(s, RedSpec) else RedSpec(tuple(s))


@dataclass(frozen=True)
class StrandSequence:
    """An element of Seq(s, n)."""

    entries: tuple
    spec: RedSpec

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "spec", as_spec(self.spec))
        reds = [k for k in self.entries if k != BLACK]
        if reds != list(range(1, self.spec.m + 1)):
            raise ValueError(
                f"red ordinals {reds} must be 1..{self.spec.m} in increasing order"
            )

    @property
    def n(self) -> int:
        return sum(1 for k in self.entries if k == BLACK)

    def __len__(self):
        return len(self.entries)

    def is_black(self, pos: int) -> bool:
        """1-based position test."""
        return self.entries[pos - 1] == BLACK

    def label_at(self, pos: int):
        """Red label at a 1-based position, or None for a black strand."""
        k = self.entries[pos - 1]
        return None if k == BLACK else self.spec.label(k)

    def __str__(self):
        return format_entries(self.entries, self.spec)

    @classmethod
    def parse(cls, text: str, spec) -> "StrandSequence":
        return cls(parse_entries(text, spec), spec)


def format_entries(entries, spec) -> str:
    spec = as_spec(spec)
    return ",".join("b" if k == BLACK else str(spec.label(k)) for k in entries)


def parse_entries(text: str, spec) -> tuple:
    """Parse `b,2,1,b`; the k-th red label in the text is red ordinal k."""
    spec = as_spec(spec)
    items = [t.strip() for t in text.split(",")] if text.strip() else []
    out = []
    ordinal = 0
    for tok in items:
        if tok == "b":
            out.append(BLACK)
            continue
        if not tok.isdigit():
            raise ValueError(f"bad strand token {tok!r}")
        ordinal += 1
        if ordinal > spec.m:
            raise ValueError(f"too many red strands in {text!r} for spec {spec}")
        if int(tok) != spec.label(ordinal):
            raise ValueError(
                f"red strand {ordinal} has label {spec.label(ordinal)}, not {tok}"
            )
        out.append(ordinal)
    if ordinal != spec.m:
        raise ValueError(f"{text!r} has {ordinal} red strands, spec {spec} needs {spec.m}")
    return tuple(out)


def enumerate_entries(m: int, n: int) -> list:
    """All interleavings as raw tuples, black positions in lexicographic order."""
    total = m + n
    out = []
    for blacks in combinations(range(total), n):
        seq = []
        k = 0
        bset = set(blacks)
        for pos in range(total):
            if pos in bset:
                seq.append(BLACK)
            else:
                k += 1
                seq.append(k)
        out.append(tuple(seq))
    return out


def enumerate_seq(spec, n: int) -> list:
    spec = as_spec(spec)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [StrandSequence(e, spec) for e in enumerate_entries(spec.m, n)]


def seq_count(m: int, n: int) -> int:
    return comb(m + n, n)


def transpose_entries(entries: tuple, j: int):
    """Swap 1-based positions j, j+1; None when two red strands would swap."""
    if not 1 <= j < len(entries):
        raise IndexError(f"transposition position {j} out of range")
    a, b = entries[j - 1], entries[j]
    if a != BLACK and b != BLACK:
        return None
    return entries[: j - 1] + (b, a) + entries[j + 1:]


def transpose(seq: StrandSequence, j: int):
    """Apply sigma_j.  Returns None (the invalid marker) if reds would leave their order."""
    out = transpose_entries(seq.entries, j)
    return None if out is None else StrandSequence(out, seq.spec)


def merge_spec(spec, j: int) -> RedSpec:
    """Replace (s_j, s_{j+1}) by s_j + s_{j+1}; j is 1-based."""
    spec = as_spec(spec)
    if not 1 <= j <= spec.m - 1:
        raise IndexError(f"merge index {j} out of range for m={spec.m}")
    s = spec.labels
    return RedSpec(s[: j - 1] + (s[j - 1] + s[j],) + s[j + 1:])


def split_spec(spec, j: int, a: int) -> RedSpec:
    """Replace s_j by the pair (s_j - a, a)."""
    spec = as_spec(spec)
    if not 1 <= j <= spec.m:
        raise IndexError(f"split index {j} out of range for m={spec.m}")
    s = spec.labels
    if not 0 <= a <= s[j - 1]:
        raise ValueError(f"split amount {a} not in [0, {s[j - 1]}]")
    return RedSpec(s[: j - 1] + (s[j - 1] - a, a) + s[j:])


def split_entries(entries: tuple, j: int) -> tuple:
    """Raw version of split_sequence: red ordinal j becomes ordinals j, j+1."""
    out = []
    for k in entries:
        if k == BLACK or k < j:
            out.append(k)
        elif k == j:
            out.extend((j, j + 1))
        else:
            out.append(k + 1)
    return tuple(out)


def split_sequence(seq: StrandSequence, j: int, a: int) -> StrandSequence:
    target = split_spec(seq.spec, j, a)
    return StrandSequence(split_entries(seq.entries, j), target)


def merge_entries(entries: tuple, j: int) -> tuple:
    """Inverse of split_entries on sequences where reds j, j+1 are adjacent."""
    out = []
    i = 0
    while i < len(entries):
        k = entries[i]
        if k == j:
            if i + 1 >= len(entries) or entries[i + 1] != j + 1:
                raise ValueError("red strands j and j+1 are not adjacent")
            out.append(j)
            i += 2
            continue
        out.append(k if k == BLACK or k < j else k - 1)
        i += 1
    return tuple(out)


def merge_sequence(seq: StrandSequence, j: int) -> StrandSequence:
    return StrandSequence(merge_entries(seq.entries, j), merge_spec(seq.spec, j))


def red_position(entries: tuple, ordinal: int) -> int:
    """1-based position of the given red ordinal."""
    return entries.index(ordinal) + 1


def is_adjacent_pair(entries: tuple, j: int) -> bool:
    pos = entries.index(j)
    return pos + 1 < len(entries) and entries[pos + 1] == j + 1


def adjacent_pair_idempotents(spec, n: int, j: int) -> list:
    """Seq^j(s, n): sequences where red j sits immediately left of red j+1."""
    spec = as_spec(spec)
    if not 1 <= j <= spec.m - 1:
        raise IndexError(f"pair index {j} out of range for m={spec.m}")
    return [sq for sq in enumerate_seq(spec, n) if is_adjacent_pair(sq.entries, j)]
