"""Graded-commutative polynomial algebra over exact rationals.

Elements are sparse rational combinations of monomials in a fixed ordered
family of graded generators. Odd-degree generators anticommute and square
to zero; even-degree generators are central. A finitely presented quotient
is reduced degree by degree: all relation multiples of a given degree are
row-reduced exactly, which yields an additive monomial basis and a rewrite
table (the normal-form map) for that degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from . import linalg

Scalar = Union[int, Fraction]


class PresentationError(ValueError):
    """Malformed generator family, relation, or ring presentation."""


class CutoffExceededError(ValueError):
    """A degree beyond the ring's computed range was requested."""


@dataclass(frozen=True)
class GeneratorSymbol:
    """A named generator with a positive cohomological degree.

    ``rewrite_priority`` steers pivot selection during elimination: monomials
    containing high-priority generators are rewritten in terms of the others
    whenever the relations allow it (2 = complement classes, 1 = Euler
    classes, 0 = canonical classes, kept in the basis when possible).
    """

    name: str
    degree: int
    rewrite_priority: int = 0

    def __post_init__(self) -> None:
        if not self.name or not self.name.replace("_", "").isalnum() or self.name[0].isdigit():
            raise PresentationError(f"bad generator name {self.name!r}")
        if self.degree < 1:
            raise PresentationError(f"generator {self.name}: degree must be a positive integer")
        if self.rewrite_priority not in (0, 1, 2):
            raise PresentationError(f"generator {self.name}: rewrite_priority must be 0, 1 or 2")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


class Generators:
    """Ordered generator universe shared by monomials and elements."""

    __slots__ = ("symbols", "degrees", "names", "_index", "_odd", "_weights", "_mono_cache")

    def __init__(self, symbols: Iterable[GeneratorSymbol]):
        self.symbols: tuple[GeneratorSymbol, ...] = tuple(symbols)
        self.names: tuple[str, ...] = tuple(s.name for s in self.symbols)
        if len(set(self.names)) != len(self.names):
            dup = sorted({n for n in self.names if self.names.count(n) > 1})
            raise PresentationError(f"duplicate generator name(s): {', '.join(dup)}")
        self.degrees: tuple[int, ...] = tuple(s.degree for s in self.symbols)
        self._index = {s.name: i for i, s in enumerate(self.symbols)}
        self._odd = tuple(i for i, s in enumerate(self.symbols) if s.is_odd)
        # weights per rewrite priority, used by the elimination column order
        self._weights = tuple(
            tuple(s.degree if s.rewrite_priority == p else 0 for s in self.symbols)
            for p in (2, 1)
        )
        self._mono_cache: dict[int, tuple[tuple[int, ...], ...]] = {}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[GeneratorSymbol]:
        return iter(self.symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Generators) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Generators({', '.join(f'{s.name}:{s.degree}' for s in self.symbols)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PresentationError(f"undeclared generator {name!r}") from None

    def monomial_degree(self, exps: Sequence[int]) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def zero(self) -> GradedElement:
        return GradedElement(self, {})

    def one(self) -> GradedElement:
        return self.scalar(1)

    def scalar(self, value: Scalar) -> GradedElement:
        value = Fraction(value)
        if not value:
            return GradedElement(self, {})
        return GradedElement(self, {(0,) * len(self.symbols): value})

    def gen(self, name: str) -> GradedElement:
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.symbols)))
        return GradedElement(self, {exps: Fraction(1)})

    def element(self, terms: Mapping[Sequence[int], Scalar]) -> GradedElement:
        """Build an element from an exponent-vector -> coefficient mapping."""
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(self.symbols):
                raise PresentationError(f"exponent vector {exps} has wrong length")
            if any(e < 0 for e in exps):
                raise PresentationError(f"negative exponent in {exps}")
            if any(exps[i] > 1 for i in self._odd):
                raise PresentationError(f"odd generator squared in {exps}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
        return GradedElement(self, {e: c for e, c in clean.items() if c})

    def parse(self, text: str) -> GradedElement:
        from .expressions import parse_element

        return parse_element(self, text)

    def monomial(self, exps: Sequence[int]) -> Monomial:
        return Monomial(self, tuple(exps))

    def monomials_of_degree(self, d: int) -> tuple[tuple[int, ...], ...]:
        """All exponent vectors of total degree d, in display order."""
        cached = self._mono_cache.get(d)
        if cached is None:
            out: list[tuple[int, ...]] = []
            n = len(self.symbols)
            degs = self.degrees
            exps = [0] * n

            def rec(i: int, remaining: int) -> None:
                if remaining == 0:
                    out.append(tuple(exps))
                    return
                if i == n:
                    return
                top = remaining // degs[i]
                if i in self._odd:
                    top = min(top, 1)
                for e in range(top, -1, -1):
                    exps[i] = e
                    rec(i + 1, remaining - e * degs[i])
                exps[i] = 0

            rec(0, d)
            out.sort(key=_display_key)
            cached = self._mono_cache.setdefault(d, tuple(out))
        return cached

    def extend(self, extra: Iterable[GeneratorSymbol]) -> Generators:
        return Generators(self.symbols + tuple(extra))

    def _mul_terms(
        self,
        a: Mapping[tuple[int, ...], Fraction],
        b: Mapping[tuple[int, ...], Fraction],
    ) -> dict[tuple[int, ...], Fraction]:
        """Koszul-signed product of two term dictionaries."""
        odd = self._odd
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.items():
            odd_a = [i for i in odd if ea[i]]
            for eb, cb in b.items():
                sign = 1
                if odd_a:
                    skip = False
                    flips = 0
                    for i in odd:
                        if not eb[i]:
                            continue
                        if ea[i]:
                            skip = True
                            break
                        # moving b's odd factor left past a's higher-index odd factors
                        flips += sum(1 for j in odd_a if j > i)
                    if skip:
                        continue
                    if flips % 2:
                        sign = -1
                exps = tuple(x + y for x, y in zip(ea, eb))
                c = out.get(exps, Fraction(0)) + sign * ca * cb
                if c:
                    out[exps] = c
                else:
                    out.pop(exps, None)
        return out


def _display_key(exps: tuple[int, ...]):
    # within a degree: descending lexicographic, earlier generators dominant
    return tuple(-e for e in exps)


@dataclass(frozen=True)
class Monomial:
    """A single monomial bound to its generator universe."""

    gens: Generators
    exps: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.gens.monomial_degree(self.exps)

    def exponents(self) -> dict[str, int]:
        return {n: e for n, e in zip(self.gens.names, self.exps) if e}

    def as_element(self) -> GradedElement:
        return GradedElement(self.gens, {self.exps: Fraction(1)})

    def __str__(self) -> str:
        return format_monomial(self.gens, self.exps)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def format_monomial(gens: Generators, exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(gens.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class GradedElement:
    """Sparse rational combination of monomials over a generator universe."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Generators, terms: dict[tuple[int, ...], Fraction]):
        self.gens = gens
        self.terms = terms

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degrees = {self.gens.monomial_degree(e) for e in self.terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def is_homogeneous(self) -> bool:
        return len({self.gens.monomial_degree(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, GradedElement]:
        parts: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for exps, c in self.terms.items():
            parts.setdefault(self.gens.monomial_degree(exps), {})[exps] = c
        return {d: GradedElement(self.gens, t) for d, t in sorted(parts.items())}

    def homogeneous_part(self, d: int) -> GradedElement:
        terms = {e: c for e, c in self.terms.items() if self.gens.monomial_degree(e) == d}
        return GradedElement(self.gens, terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.gens, e) for e in self._sorted_exps())

    def _sorted_exps(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=lambda e: (self.gens.monomial_degree(e), _display_key(e)))

    # -- arithmetic ------------------------------------------------------

    def _check_universe(self, other: GradedElement) -> None:
        if self.gens != other.gens:
            raise ValueError("elements live over different generator universes")

    def __add__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            other = self.gens.scalar(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        self._check_universe(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return GradedElement(self.gens, terms)

    __radd__ = __add__

    def __neg__(self) -> GradedElement:
        return GradedElement(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            other = self.gens.scalar(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> GradedElement:
        return (-self).__add__(other)

    def __mul__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.gens.zero()
            return GradedElement(self.gens, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, GradedElement):
            return NotImplemented
        self._check_universe(other)
        return GradedElement(self.gens, self.gens._mul_terms(self.terms, other.terms))

    def __rmul__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            return self.__mul__(Fraction(1, 1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> GradedElement:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.gens.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.gens.scalar(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def reindex(self, target: Generators) -> GradedElement:
        """Re-express over `target`, matching generators by name and degree."""
        if target == self.gens:
            return self
        mapping = []
        for i, s in enumerate(self.gens.symbols):
            if any(e[i] for e in self.terms):
                j = target.index(s.name)
                if target.symbols[j].degree != s.degree:
                    raise PresentationError(
                        f"generator {s.name} has degree {target.symbols[j].degree} "
                        f"in the target universe, expected {s.degree}"
                    )
                mapping.append((i, j))
        terms: dict[tuple[int, ...], Fraction] = {}
        width = len(target)
        for exps, c in self.terms.items():
            out = [0] * width
            for i, j in mapping:
                out[j] = exps[i]
            terms[tuple(out)] = terms.get(tuple(out), Fraction(0)) + c
        return GradedElement(target, {e: c for e, c in terms.items() if c})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps in self._sorted_exps():
            c = self.terms[exps]
            mono = format_monomial(self.gens, exps)
            if mono == "1":
                body = format_coefficient(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_coefficient(abs(c))}*{mono}"
            chunks.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"GradedElement({self})"


# The normal form of an element is itself an element supported on basis
# monomials only; no separate wrapper type is needed.
NormalForm = GradedElement


@dataclass(frozen=True)
class RingPresentation:
    """Ordered generators plus homogeneous relations of positive degree."""

    generators: Generators
    relations: tuple[GradedElement, ...]
    label: str = ""

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    def describe(self) -> str:
        gens = ", ".join(f"{s.name}({s.degree})" for s in self.generators)
        rels = "; ".join(str(r) for r in self.relations)
        return f"[{gens} | {rels}]"


def make_presentation(
    generators: Iterable[GeneratorSymbol] | Generators,
    relations: Iterable[GradedElement] = (),
    label: str = "",
) -> RingPresentation:
    """Validate and normalize a presentation.

    Relations may be inhomogeneous (total-class equations); they are split
    into homogeneous components here. A nonzero component of degree zero
    means the equation is inconsistent and is rejected.
    """
    gens = generators if isinstance(generators, Generators) else Generators(generators)
    split: list[GradedElement] = []
    seen: set[frozenset] = set()
    for rel in relations:
        rel = rel.reindex(gens)
        for d, comp in rel.homogeneous_components().items():
            if d == 0:
                raise PresentationError(
                    f"relation has a nonzero degree-0 component ({comp}); "
                    "the presentation is inconsistent"
                )
            key = frozenset(comp.terms.items())
            if key not in seen:
                seen.add(key)
                split.append(comp)
    return RingPresentation(gens, tuple(split), label)


def relation_rows(presentation: RingPresentation, d: int) -> list[dict[tuple[int, ...], Fraction]]:
    """All degree-d multiples of the relations, as term dictionaries.

    Their span is the degree-d slice of the ideal: graded commutativity
    makes one-sided monomial multiples sufficient.
    """
    gens = presentation.generators
    rows = []
    one = Fraction(1)
    for rel in presentation.relations:
        r = rel.degree()
        if r > d:
            continue
        for m in gens.monomials_of_degree(d - r):
            prod = gens._mul_terms({m: one}, rel.terms)
            if prod:
                rows.append(prod)
    return rows


def _elimination_key(gens: Generators):
    w2, w1 = gens._weights

    def key(exps: tuple[int, ...]):
        return (
            -sum(e * w for e, w in zip(exps, w2)),
            -sum(e * w for e, w in zip(exps, w1)),
            _display_key(exps),
        )

    return key


def rank_of_degree(presentation: RingPresentation, d: int, column_key=None) -> tuple[int, int]:
    """(rank of the degree-d relation span, number of degree-d monomials).

    `column_key` overrides the elimination column order; the rank is
    independent of it, which the test suite checks.
    """
    gens = presentation.generators
    cols = sorted(gens.monomials_of_degree(d), key=column_key or _elimination_key(gens))
    index = {m: i for i, m in enumerate(cols)}
    int_rows = []
    for row in relation_rows(presentation, d):
        entries = sorted(((index[e], c) for e, c in row.items()))
        int_rows.append(linalg.integer_row(entries))
    return linalg.rank(int_rows), len(cols)


class _DegreeTable:
    __slots__ = ("basis", "rewrite")

    def __init__(self, basis, rewrite):
        self.basis = basis  # exponent vectors in display order
        self.rewrite = rewrite  # pivot exps -> {basis exps: coefficient}


class QuotientRing:
    """A presented graded-commutative ring with per-degree normal forms.

    Values are immutable once built; the per-degree cache is write-once and
    its entries are deterministic, so concurrent computation of the same
    degree is harmless (last writer stores an identical table).
    """

    def __init__(self, presentation: RingPresentation, cutoff: int):
        if cutoff is None or cutoff < 0:
            raise PresentationError("a nonnegative cutoff degree is required")
        self.presentation = presentation
        self.cutoff = cutoff
        self._tables: dict[int, _DegreeTable] = {}

    @property
    def gens(self) -> Generators:
        return self.presentation.generators

    @property
    def label(self) -> str:
        return self.presentation.label

    def __repr__(self) -> str:
        name = self.label or self.presentation.describe()
        return f"QuotientRing({name}, cutoff={self.cutoff})"

    def _table(self, d: int) -> _DegreeTable:
        if d > self.cutoff:
            raise CutoffExceededError(f"degree {d} exceeds cutoff {self.cutoff}")
        table = self._tables.get(d)
        if table is None:
            table = self._compute_table(d)
            table = self._tables.setdefault(d, table)
        return table

    def _compute_table(self, d: int) -> _DegreeTable:
        gens = self.gens
        cols = sorted(gens.monomials_of_degree(d), key=_elimination_key(gens))
        index = {m: i for i, m in enumerate(cols)}
        int_rows = []
        for row in relation_rows(self.presentation, d):
            entries = sorted(((index[e], c) for e, c in row.items()))
            int_rows.append(linalg.integer_row(entries))
        reduced = linalg.rref(int_rows)
        rewrite: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        pivot_cols = set()
        for row in reduced:
            lead_col, lead = row[0]
            pivot_cols.add(lead_col)
            rewrite[cols[lead_col]] = {
                cols[c]: Fraction(-v, lead) for c, v in row[1:]
            }
        basis = tuple(
            sorted((m for i, m in enumerate(cols) if i not in pivot_cols), key=_display_key)
        )
        return _DegreeTable(basis, rewrite)

    # -- public queries ----------------------------------------------------

    def dimension(self, d: int) -> int:
        return len(self._table(d).basis)

    def dimensions(self, upto: int | None = None) -> list[int]:
        upto = self.cutoff if upto is None else upto
        return [self.dimension(d) for d in range(upto + 1)]

    def degree_basis(self, d: int) -> tuple[Monomial, ...]:
        """Monomials whose residues form a basis of the degree-d component."""
        return tuple(Monomial(self.gens, e) for e in self._table(d).basis)

    def normal_form(self, element: GradedElement) -> NormalForm:
        """The canonical representative supported on basis monomials."""
        element = element.reindex(self.gens)
        out: dict[tuple[int, ...], Fraction] = {}

        def absorb(exps, coeff):
            s = out.get(exps, Fraction(0)) + coeff
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)

        for d, comp in element.homogeneous_components().items():
            table = self._table(d)
            for exps, coeff in comp.terms.items():
                row = table.rewrite.get(exps)
                if row is None:
                    absorb(exps, coeff)
                else:
                    for bexps, c in row.items():
                        absorb(bexps, coeff * c)
        return GradedElement(self.gens, out)

    def is_zero(self, element: GradedElement) -> bool:
        return self.normal_form(element).is_zero

    def multiply(self, a: GradedElement, b: GradedElement) -> NormalForm:
        return self.normal_form(a.reindex(self.gens) * b.reindex(self.gens))
