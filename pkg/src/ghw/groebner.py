"""Reduced Groebner bases of binary code ideals by coset-leader enumeration.

The code ideal is generated by X^w - 1 for generator rows w together with
the quadrics x_i^2 - 1.  Under any degree-compatible order all monomials
reduce to square-free ones, so the whole computation happens on the 2^n
exponent masks: enumerate them in increasing order, record one leader per
syndrome, and emit a binomial whenever a mask lands in an occupied coset.
The emitted square-free binomials plus the surviving quadrics form the
reduced basis; lead XOR trail of each binomial is a codeword of minimal
support, and the deduplicated set of those codewords is the test set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import Code
from .errors import CapExceeded, TheoremViolation, size_cap
from .gf2 import word_to_string

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class TermOrder:
    """A degree-compatible monomial order on square-free exponent masks.

    kind is "deglex" or "degrevlex"; priority lists the 0-based variable
    indices from highest precedence to lowest.  Ties inside a degree:

    * deglex reads the exponents in priority order; the first variable
      where the words differ makes the word containing it larger.
    * degrevlex reads them in reverse priority order; the first variable
      where the words differ makes the word containing it smaller.
    """

    kind: str
    priority: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("deglex", "degrevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation of 0..n-1")

    @classmethod
    def default(cls, n: int, kind: str = "degrevlex") -> "TermOrder":
        """x_1 > x_2 > ... > x_n."""
        return cls(kind, tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.priority)

    def sort_key(self, word: int) -> tuple[int, int]:
        """Key that sorts masks into increasing order under this order."""
        if self.kind == "deglex":
            t = 0
            for idx in self.priority:
                t = (t << 1) | ((word >> idx) & 1)
            return (word.bit_count(), t)
        t = 0
        for idx in reversed(self.priority):
            t = (t << 1) | ((word >> idx) & 1)
        return (word.bit_count(), -t)

    def compare(self, a: int, b: int) -> int:
        """LESS, EQUAL or GREATER for a versus b."""
        if a == b:
            return EQUAL
        return LESS if self.sort_key(a) < self.sort_key(b) else GREATER

    def min_word(self, words) -> int:
        return min(words, key=self.sort_key)

    def describe(self) -> str:
        vars_1based = ",".join(str(i + 1) for i in self.priority)
        return f"{self.kind} vars={vars_1based}"


def compare(order: TermOrder, a: int, b: int) -> int:
    return order.compare(a, b)


@dataclass(frozen=True)
class Binomial:
    """X^lead - X^trail with lead > trail under the producing order."""

    lead: int
    trail: int

    @property
    def word(self) -> int:
        """lead XOR trail: a codeword of the originating code."""
        return self.lead ^ self.trail

    @property
    def support(self) -> int:
        return self.lead | self.trail

    def in_standard_form(self) -> bool:
        return self.lead & self.trail == 0


@dataclass(frozen=True)
class GroebnerBasis:
    """Square-free part of a reduced Groebner basis of a code ideal.

    binomials are listed with leads in increasing order.  The quadrics
    x_i^2 - 1 are implicit; x_i^2 - 1 belongs to the reduced basis only
    when x_i is not itself a degree-1 lead (otherwise x_i^2 is reducible),
    so quadric_count() can be below n.  standard_form_violations records
    any binomial whose lead and trail share a variable; it is provably
    empty and verified rather than normalized away.
    """

    order: TermOrder
    n: int
    binomials: tuple[Binomial, ...]
    standard_form_violations: tuple[Binomial, ...] = field(default=())

    def degree_one_leads(self) -> tuple[int, ...]:
        return tuple(b.lead for b in self.binomials if b.lead.bit_count() == 1)

    def quadric_count(self) -> int:
        return self.n - len(self.degree_one_leads())

    def total_size(self) -> int:
        """Number of elements of the full reduced basis, quadrics included."""
        return len(self.binomials) + self.quadric_count()


@dataclass(frozen=True)
class CosetTable:
    """Syndrome -> canonical coset leader, one entry per coset.

    Leaders are the order-minimal (hence minimum-weight) coset elements;
    the zero syndrome maps to 0.  Syndromes are keyed by the canonical
    rref parity matrix, so the partition is independent of the generator
    presentation.
    """

    n: int
    order: TermOrder
    parity_rows: tuple[int, ...]
    leaders: dict[int, int]

    def syndrome(self, word: int) -> int:
        s = 0
        for i, h in enumerate(self.parity_rows):
            s |= ((h & word).bit_count() & 1) << i
        return s


def reduced_groebner_basis(c: Code, order: TermOrder) -> tuple[GroebnerBasis, CosetTable]:
    """Compute the reduced Groebner basis and coset-leader table.

    Every square-free mask is visited in increasing order.  A mask
    divisible by a recorded lead is skipped; otherwise its syndrome
    either claims a fresh coset (the mask becomes that coset's leader)
    or hits an occupied one (emit lead-minus-leader and record the lead).
    """
    if order.n != c.n:
        raise ValueError(f"order on {order.n} variables, code length {c.n}")
    cap = size_cap()
    if c.n > cap or c.n - c.k > cap:
        raise CapExceeded(f"2^{c.n} enumeration exceeds cap {cap}")

    parity_rows = c.parity.rows
    nparity = len(parity_rows)

    key = order.sort_key
    masks = sorted(range(1 << c.n), key=key)

    leaders: dict[int, int] = {}
    leads: list[int] = []
    binomials: list[Binomial] = []
    violations: list[Binomial] = []
    for a in masks:
        reducible = False
        for lead in leads:
            if lead & a == lead:
                reducible = True
                break
        if reducible:
            continue
        s = 0
        for i in range(nparity):
            s |= ((parity_rows[i] & a).bit_count() & 1) << i
        b = leaders.get(s)
        if b is None:
            leaders[s] = a
        else:
            binom = Binomial(a, b)
            binomials.append(binom)
            leads.append(a)
            if not binom.in_standard_form():
                violations.append(binom)

    if len(leaders) != 1 << (c.n - c.k):
        raise TheoremViolation(
            f"found {len(leaders)} coset leaders, expected 2^{c.n - c.k}")
    basis = GroebnerBasis(order, c.n, tuple(binomials), tuple(violations))
    table = CosetTable(c.n, order, parity_rows, leaders)
    return basis, table


def test_set(g: GroebnerBasis, c: Code) -> tuple[int, ...]:
    """Codewords lead XOR trail of the square-free basis binomials.

    Distinct binomials can share a codeword; the result is deduplicated
    and sorted by bitstring.
    """
    words = {b.word for b in g.binomials}
    for w in words:
        if not c.contains(w):
            raise ValueError(f"basis word {word_to_string(w, c.n)} not in code")
    return tuple(sorted(words, key=lambda w: word_to_string(w, c.n)))


def normal_form(t: CosetTable, w: int) -> int:
    """Canonical coset leader of w's coset under the table's order."""
    return t.leaders[t.syndrome(w)]


def decode(t: CosetTable, w: int) -> tuple[int, int, int]:
    """(coset leader, decoded codeword, error weight) for a received word."""
    leader = normal_form(t, w)
    return leader, w ^ leader, leader.bit_count()
