"""Truncated arithmetical functions under regular divisor-system convolutions.

A homogeneous regular convolution is determined by one partition of the
positive integers into parts that, together with 0, form arithmetic
progressions: the parts group the admissible *exponents* of every prime.
The admissible divisors A(n) of n = prod p_i^{b_i} are the products
prod p_i^{a_i} where each a_i is 0 or lies in the same part as b_i and
a_i <= b_i.  The classical Dirichlet convolution is the single-infinite-part
case; the greedy partitions of ``greedy`` supply the bounded cases, of which
length 1 is the unitary convolution and length 2 the ternary one.

Function values are exact rationals (ints and ``fractions.Fraction``), so
every identity checked by the test-suite holds exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf, isqrt

from .greedy import GreedyTable, build_greedy
from .primes import factorize

DEFAULT_EXPONENT_RANGE = 64

Rational = int | Fraction


class ConvolutionRule:
    """A divisor system n -> A(n) given by an exponent partition.

    Bounded rules carry a greedy exponent table; the Dirichlet rule admits
    every exponent; custom rules take an explicit list of parts (exponents
    not covered by any given part become singletons).  Divisor sets are
    memoized per rule.
    """

    def __init__(self, kind: str, d: int | None = None,
                 exponent_table: GreedyTable | None = None,
                 custom_parts: dict[int, tuple[int, ...]] | None = None):
        self.kind = kind
        self.d = d
        self.exponent_table = exponent_table
        self._custom_parts = custom_parts
        self._divisor_cache: dict[int, tuple[int, ...]] = {}

    # -- constructors -------------------------------------------------

    @classmethod
    def dirichlet(cls) -> "ConvolutionRule":
        """All divisors admissible (one infinite exponent part)."""
        return cls("dirichlet")

    @classmethod
    def greedy(cls, d: int,
               max_exponent: int = DEFAULT_EXPONENT_RANGE) -> "ConvolutionRule":
        """Greedy exponent partition of length bound d."""
        kind = {1: "unitary", 2: "ternary"}.get(d, f"greedy({d})")
        return cls(kind, d=d, exponent_table=build_greedy(d, max_exponent))

    @classmethod
    def unitary(cls, max_exponent: int = DEFAULT_EXPONENT_RANGE) -> "ConvolutionRule":
        return cls.greedy(1, max_exponent)

    @classmethod
    def ternary(cls, max_exponent: int = DEFAULT_EXPONENT_RANGE) -> "ConvolutionRule":
        return cls.greedy(2, max_exponent)

    @classmethod
    def from_exponent_parts(cls, parts: list[tuple[int, ...]]) -> "ConvolutionRule":
        """Rule from explicit exponent parts, e.g. [(1, 3)].

        Exponents not covered become singleton parts.  No validity check is
        done here; feed the result to ``check_axioms`` to test regularity.
        """
        lookup: dict[int, tuple[int, ...]] = {}
        for part in parts:
            ordered = tuple(sorted(part))
            if any(e < 1 for e in ordered):
                raise ValueError(f"exponents must be >= 1: {part}")
            for e in ordered:
                if e in lookup:
                    raise ValueError(f"exponent {e} in two parts")
                lookup[e] = ordered
        return cls("custom", custom_parts=lookup)

    def __repr__(self) -> str:
        return f"ConvolutionRule({self.kind})"

    # -- exponent structure -------------------------------------------

    def exponent_part(self, b: int) -> tuple[int, ...]:
        """The part of the exponent partition containing b >= 1."""
        if b < 1:
            raise ValueError(f"exponent must be >= 1, got {b}")
        if self.kind == "dirichlet":
            raise ValueError("the Dirichlet rule has one infinite part")
        if self._custom_parts is not None:
            return self._custom_parts.get(b, (b,))
        table = self.exponent_table
        if b > table.n_max:
            raise ValueError(
                f"exponent {b} beyond the rule's exponent range {table.n_max}")
        return table.part_elements(table.leader_of(b))

    def exponent_type(self, b: int) -> int:
        """Type of the exponent b: the smallest element of its part (1 for Dirichlet)."""
        if self.kind == "dirichlet":
            return 1
        return self.exponent_part(b)[0]

    def allowed_exponents(self, b: int) -> tuple[int, ...]:
        """Admissible exponents a <= b for a prime appearing with exponent b."""
        if b == 0:
            return (0,)
        if self.kind == "dirichlet":
            return tuple(range(b + 1))
        return (0,) + tuple(a for a in self.exponent_part(b) if a <= b)

    # -- divisor sets --------------------------------------------------

    def divisor_set(self, n: int) -> tuple[int, ...]:
        """A(n): the admissible divisors of n, ascending."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        cached = self._divisor_cache.get(n)
        if cached is not None:
            return cached
        divs = [1]
        for p, b in factorize(n):
            powers = [p**a for a in self.allowed_exponents(b)]
            divs = [d * pk for d in divs for pk in powers]
        result = tuple(sorted(divs))
        self._divisor_cache[n] = result
        return result


def divisor_set(rule: ConvolutionRule, n: int) -> tuple[int, ...]:
    return rule.divisor_set(n)


class ArithFn:
    """An arithmetical function truncated to [1..n_max], exact rational values."""

    __slots__ = ("n_max", "_values")

    def __init__(self, values: list[Rational], n_max: int | None = None):
        """values[i] is the value at i + 1."""
        if n_max is None:
            n_max = len(values)
        if n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {n_max}")
        if len(values) != n_max:
            raise ValueError(f"expected {n_max} values, got {len(values)}")
        self.n_max = n_max
        self._values = [0] + list(values)

    @classmethod
    def zeta(cls, n_max: int) -> "ArithFn":
        """Constant 1."""
        return cls([1] * n_max)

    @classmethod
    def zero(cls, n_max: int) -> "ArithFn":
        return cls([0] * n_max)

    @classmethod
    def indicator(cls, j: int, n_max: int) -> "ArithFn":
        """e_j: 1 at j, 0 elsewhere."""
        if j < 1:
            raise ValueError(f"index must be >= 1, got {j}")
        values: list[Rational] = [0] * n_max
        if j <= n_max:
            values[j - 1] = 1
        return cls(values)

    @classmethod
    def from_callable(cls, fn, n_max: int) -> "ArithFn":
        return cls([fn(n) for n in range(1, n_max + 1)])

    def __getitem__(self, n: int) -> Rational:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"n={n} outside [1..{self.n_max}]")
        return self._values[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithFn):
            return NotImplemented
        return self.n_max == other.n_max and all(
            a == b for a, b in zip(self._values[1:], other._values[1:]))

    def __hash__(self):
        return hash((self.n_max, tuple(self._values[1:])))

    def __add__(self, other: "ArithFn") -> "ArithFn":
        self._match(other)
        return ArithFn([a + b for a, b in
                        zip(self._values[1:], other._values[1:])])

    def __sub__(self, other: "ArithFn") -> "ArithFn":
        self._match(other)
        return ArithFn([a - b for a, b in
                        zip(self._values[1:], other._values[1:])])

    def _match(self, other: "ArithFn") -> None:
        if self.n_max != other.n_max:
            raise ValueError(
                f"truncation mismatch: {self.n_max} vs {other.n_max}")

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self._values[1:9])
        tail = ", ..." if self.n_max > 8 else ""
        return f"ArithFn([{head}{tail}], n_max={self.n_max})"

    def values(self) -> list[Rational]:
        return self._values[1:]

    def order(self) -> Rational:
        """Smallest n with a nonzero value; inf for the zero function."""
        for n in range(1, self.n_max + 1):
            if self._values[n] != 0:
                return n
        return inf

    def is_multiplicative(self) -> bool:
        """f(1) = 1 and f(mn) = f(m) f(n) for coprime m, n with mn <= n_max."""
        v = self._values
        if v[1] != 1:
            return False
        for m in range(2, isqrt(self.n_max) + 1):
            vm = v[m]
            for k in range(m + 1, self.n_max // m + 1):
                if gcd(m, k) == 1 and v[m * k] != vm * v[k]:
                    return False
        return True


def convolve(f: ArithFn, g: ArithFn, rule: ConvolutionRule) -> ArithFn:
    """(f * g)(n) = sum of f(d) g(n/d) over d in A(n).

    Exact at every n <= n_max because A(n) only contains divisors of n.
    """
    f._match(g)
    fv = f._values
    gv = g._values
    dset = rule.divisor_set
    out: list[Rational] = []
    for n in range(1, f.n_max + 1):
        acc = 0
        for d in dset(n):
            acc += fv[d] * gv[n // d]
        out.append(acc)
    return ArithFn(out)


def mobius(rule: ConvolutionRule, n_max: int) -> ArithFn:
    """The convolution inverse of the constant-1 function, by triangular inversion."""
    mu: list[Rational] = [0] * (n_max + 1)
    mu[1] = 1
    dset = rule.divisor_set
    for n in range(2, n_max + 1):
        acc = 0
        for d in dset(n):
            if d < n:
                acc += mu[d]
        mu[n] = -acc
    return ArithFn(mu[1:])


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of regularity-axiom checking; the first failure stops the scan."""

    ok: bool
    n_max: int
    failed_axiom: str | None = None
    counterexample: tuple | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"all divisor-system axioms hold on [1..{self.n_max}]"
        return (f"axiom '{self.failed_axiom}' fails at "
                f"{self.counterexample} (n_max={self.n_max})")


def check_axioms(rule: ConvolutionRule, n_max: int) -> AxiomReport:
    """Verify the divisor-system axioms on [1..n_max].

    Per n: 1 in A(n); n in A(n); d in A(n) implies n/d in A(n); d in A(n)
    implies A(d) a subset of A(n).  Then A(mk) = A(m) A(k) for all coprime
    pairs with mk <= n_max.  Returns the first counterexample found.
    """
    sets: list[frozenset[int]] = [frozenset()] * (n_max + 1)
    for n in range(1, n_max + 1):
        a_n = frozenset(rule.divisor_set(n))
        sets[n] = a_n
        if 1 not in a_n:
            return AxiomReport(False, n_max, "simple", (n,))
        if n not in a_n:
            return AxiomReport(False, n_max, "reflexive", (n,))
        for d in a_n:
            if n // d not in a_n:
                return AxiomReport(False, n_max, "symmetric", (n, d))
        for d in a_n:
            if not sets[d] <= a_n:
                return AxiomReport(False, n_max, "transitive", (n, d))
    for m in range(2, isqrt(n_max) + 1):
        for k in range(m + 1, n_max // m + 1):
            if gcd(m, k) == 1:
                direct = sets[m * k]
                product = {a * b for a in sets[m] for b in sets[k]}
                if direct != product:
                    return AxiomReport(False, n_max, "multiplicative", (m, k))
    return AxiomReport(True, n_max)


def is_multiplicative(f: ArithFn) -> bool:
    return f.is_multiplicative()


def order(f: ArithFn) -> Rational:
    return f.order()
