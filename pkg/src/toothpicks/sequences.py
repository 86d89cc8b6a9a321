"""Finite integer-sequence prefixes with provenance.

Every generator in this package (simulation, recurrence, closed form,
generating function, bundled fixture) hands back the same small value
type so the verification harness can compare them pairwise.
"""

from dataclasses import dataclass, field

GENERATOR_TAGS = ("simulate", "recurrence", "closedform", "genfunc", "fixture")


@dataclass(frozen=True)
class IntSequence:
    """A finite prefix a(offset), a(offset+1), ... of an integer sequence."""

    offset: int
    terms: tuple[int, ...]
    label: str = ""
    generator: str = ""

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.generator and self.generator not in GENERATOR_TAGS:
            raise ValueError(f"unknown generator tag: {self.generator!r}")

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def last_index(self) -> int:
        return self.offset + len(self.terms) - 1

    def value(self, n: int) -> int:
        if not self.offset <= n <= self.last_index:
            raise IndexError(f"index {n} outside [{self.offset}, {self.last_index}]")
        return self.terms[n - self.offset]

    def partial_sums(self, label: str = "") -> "IntSequence":
        """Running totals, keeping offset and assuming zero terms below it."""
        out = []
        acc = 0
        for t in self.terms:
            acc += t
            out.append(acc)
        return IntSequence(self.offset, tuple(out), label or self.label, self.generator)

    def truncated(self, n_max: int) -> "IntSequence":
        """Restrict to indices <= n_max."""
        keep = max(0, n_max - self.offset + 1)
        return IntSequence(self.offset, self.terms[:keep], self.label, self.generator)


def first_divergence(a: IntSequence, b: IntSequence) -> tuple[int, int, int] | None:
    """First (n, a(n), b(n)) where the two prefixes disagree on their overlap.

    Returns None when they agree everywhere both are defined.
    """
    lo = max(a.offset, b.offset)
    hi = min(a.last_index, b.last_index)
    for n in range(lo, hi + 1):
        va, vb = a.value(n), b.value(n)
        if va != vb:
            return n, va, vb
    return None


def overlap_range(a: IntSequence, b: IntSequence) -> tuple[int, int] | None:
    lo = max(a.offset, b.offset)
    hi = min(a.last_index, b.last_index)
    return (lo, hi) if lo <= hi else None
