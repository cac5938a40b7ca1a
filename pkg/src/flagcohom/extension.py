"""Ring extensions over a presented base: Grassmannian, projectivization,
sphere and flag bundles, Whitney complement recursion, torus-equivariant
bases, towers of iterated extensions, and pushouts of presented rings.

Every constructor returns a fresh QuotientRing whose presentation is the
base presentation extended by new generators and the Whitney-type
relations, with right-hand sides taken from the bundle's total classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .algebra import (
    GeneratorSymbol,
    Generators,
    GradedElement,
    PresentationError,
    QuotientRing,
    make_presentation,
)
from .catalog import SpaceDescriptor, top_degree

ElementLike = Union[GradedElement, str, int]

_STEP = {"complex": 2, "real": 4, "oriented": 4}
_CANON = {"complex": "c", "real": "p", "oriented": "p"}


class BundleError(ValueError):
    """Invalid bundle data or extension parameters."""


@dataclass
class BundleData:
    """A vector bundle over a presented base ring, given by its classes.

    `total_class` is the full total characteristic class (including the 1)
    as an element of the base ring; `euler_class` is required exactly for
    oriented bundles of even rank (it may be the zero element).
    """

    base: QuotientRing
    kind: str
    rank: int
    total_class: GradedElement
    euler_class: GradedElement | None = None

    def __post_init__(self):
        if self.kind not in _STEP:
            raise BundleError(f"unknown bundle kind {self.kind!r}")
        if self.rank < 1:
            raise BundleError("rank must be a positive integer")
        gens = self.base.gens
        self.total_class = _as_element(gens, self.total_class)
        if self.total_class.homogeneous_part(0) != gens.one():
            raise BundleError("total class must have degree-0 component 1")
        step = _STEP[self.kind]
        limit = step * (self.rank if self.kind == "complex" else self.rank // 2)
        for d in self.total_class.homogeneous_components():
            if d == 0:
                continue
            if d % step or d > limit:
                raise BundleError(
                    f"total class component in degree {d} is invalid for a "
                    f"{self.kind} bundle of rank {self.rank}"
                )
        needs_euler = self.kind == "oriented" and self.rank % 2 == 0
        if needs_euler:
            if self.euler_class is None:
                raise BundleError("oriented bundle of even rank needs an euler_class")
            self.euler_class = _as_element(gens, self.euler_class)
            if not self.euler_class.is_zero and self.euler_class.degree() != self.rank:
                raise BundleError(f"euler class must be homogeneous of degree {self.rank}")
        elif self.euler_class is not None:
            raise BundleError(f"euler_class is only meaningful for oriented even rank")

    def component(self, i: int) -> GradedElement:
        """The i-th characteristic class of the bundle (degree step*i)."""
        return self.total_class.homogeneous_part(_STEP[self.kind] * i)


def _as_element(gens: Generators, value: ElementLike) -> GradedElement:
    if isinstance(value, GradedElement):
        return value.reindex(gens)
    if isinstance(value, str):
        return gens.parse(value)
    return gens.scalar(value)


def _extend(base: Generators, extra: Sequence[GeneratorSymbol]) -> Generators:
    clash = set(base.names) & {s.name for s in extra}
    if clash:
        raise BundleError(
            f"generator name(s) {sorted(clash)} already exist in the base; "
            "pass a suffix to namespace the new generators"
        )
    return base.extend(extra)


def _ring(base: QuotientRing, gens, relations, label, cutoff, fibre_top) -> QuotientRing:
    carried = [r.reindex(gens) for r in base.presentation.relations]
    pres = make_presentation(gens, carried + list(relations), label)
    if cutoff is None:
        cutoff = max(base.cutoff + fibre_top, pres.max_relation_degree())
    return QuotientRing(pres, cutoff)


@dataclass(frozen=True)
class WhitneyData:
    """Solved complement classes and the residual relations they force."""

    gens: Generators  # base generators followed by the canonical classes
    canonical: tuple[str, ...]
    complements: tuple[GradedElement, ...]
    residuals: tuple[GradedElement, ...]


def whitney_complement(
    total_class: GradedElement,
    k: int,
    n: int,
    kind: str = "complex",
    names: Sequence[str] | None = None,
) -> WhitneyData:
    """Solve c*cbar = c(V) for the complement classes, degree by degree.

    Returns the solved cbar_1..cbar_(n-k) in terms of the canonical classes
    and the bundle's classes, plus the residual expressions (indices
    n-k+1..n) that must vanish in the quotient; the residuals are sign
    normalized so the pure power of the first canonical class is positive.
    """
    if not 0 <= k <= n:
        raise BundleError(f"need 0 <= k <= n, got k={k}, n={n}")
    step = _STEP[kind]
    if names is None:
        names = [f"{_CANON[kind]}{i}" for i in range(1, k + 1)]
    gens = _extend(total_class.gens, [GeneratorSymbol(nm, step * i) for i, nm in enumerate(names, 1)])
    total = total_class.reindex(gens)
    canon = [gens.gen(nm) for nm in names]

    solved: list[GradedElement] = [gens.one()]
    for j in range(1, n + 1):
        value = total.homogeneous_part(step * j)
        for i in range(1, min(j, k) + 1):
            value = value - canon[i - 1] * solved[j - i]
        solved.append(value)
    complements = tuple(solved[1 : n - k + 1])
    residuals = tuple(
        solved[j] if j % 2 == 0 else -solved[j] for j in range(n - k + 1, n + 1)
    )
    return WhitneyData(gens, tuple(names), complements, residuals)


def _reduced_k(kind: str, rank: int, k: int) -> int:
    """Map a subspace dimension to the reduced presentation parameter."""
    if kind == "complex":
        return k
    if rank % 2 == 0 and k % 2 == 1:
        raise BundleError(
            f"a rank-{rank} {kind} bundle has no displayed presentation for "
            f"odd subspace dimension {k}"
        )
    return k // 2


def grassmannian_bundle(
    bundle: BundleData, k: int, suffix: str = "", cutoff: int | None = None
) -> QuotientRing:
    """The associated Grassmannian bundle of k-dimensional subspaces.

    Extends the base by canonical and complement classes subject to
    c*cbar = c(V) (Chern or Pontryagin), plus the Euler relations in the
    oriented case. k = 0 or k = rank returns the base ring unchanged.
    """
    if not 0 <= k <= bundle.rank:
        raise BundleError(f"need 0 <= k <= rank, got k={k}, rank={bundle.rank}")
    if k in (0, bundle.rank):
        return bundle.base
    kind, rank = bundle.kind, bundle.rank
    kr = _reduced_k(kind, rank, k)
    nr = rank if kind == "complex" else rank // 2
    canon = _CANON[kind]
    step = _STEP[kind]

    symbols = [GeneratorSymbol(f"{canon}{i}{suffix}", step * i) for i in range(1, kr + 1)]
    symbols += [
        GeneratorSymbol(f"{canon}b{j}{suffix}", step * j, rewrite_priority=2)
        for j in range(1, nr - kr + 1)
    ]
    oriented_kind = None
    if kind == "oriented":
        if rank % 2 == 0:
            oriented_kind = "even-even"
        else:
            oriented_kind = "even-odd" if k % 2 == 0 else "odd-odd"
        if oriented_kind in ("even-even", "even-odd"):
            if kr < 1:
                raise BundleError("oriented canonical Euler class needs k >= 2")
            symbols.append(GeneratorSymbol(f"e{suffix}", 2 * kr, rewrite_priority=1))
        if oriented_kind in ("even-even", "odd-odd"):
            symbols.append(GeneratorSymbol(f"eb{suffix}", 2 * (nr - kr), rewrite_priority=1))

    gens = _extend(bundle.base.gens, symbols)
    total = gens.one()
    for i in range(1, kr + 1):
        total = total + gens.gen(f"{canon}{i}{suffix}")
    total_bar = gens.one()
    for j in range(1, nr - kr + 1):
        total_bar = total_bar + gens.gen(f"{canon}b{j}{suffix}")
    relations = [total * total_bar - bundle.total_class.reindex(gens)]
    if oriented_kind in ("even-even", "even-odd"):
        e = gens.gen(f"e{suffix}")
        relations.append(e * e - gens.gen(f"{canon}{kr}{suffix}"))
    if oriented_kind in ("even-even", "odd-odd"):
        eb = gens.gen(f"eb{suffix}")
        relations.append(eb * eb - gens.gen(f"{canon}b{nr - kr}{suffix}"))
    if oriented_kind == "even-even":
        relations.append(
            gens.gen(f"e{suffix}") * gens.gen(f"eb{suffix}") - bundle.euler_class.reindex(gens)
        )

    fibre = _fibre_descriptor(kind, kr, nr, oriented_kind)
    label = f"{fibre.label} bundle over {bundle.base.label or 'base'}"
    return _ring(bundle.base, gens, relations, label, cutoff, top_degree(fibre))


def _fibre_descriptor(kind, kr, nr, oriented_kind) -> SpaceDescriptor:
    if kind == "complex":
        return SpaceDescriptor("complex-grassmannian", kr, nr)
    if kind == "real":
        return SpaceDescriptor("real-grassmannian-even", kr, nr)
    return SpaceDescriptor("oriented-grassmannian", kr, nr, oriented_kind)


def projectivization(
    bundle: BundleData, gen_name: str | None = None, cutoff: int | None = None
) -> QuotientRing:
    """Projectivization (complex) or rank-2 Grassmannianization (real) in
    the reduced single-generator form: one new generator g satisfying
    g^n - v_1 g^(n-1) + v_2 g^(n-2) -+ ... + (-1)^n v_n = 0."""
    kind = bundle.kind
    if kind not in ("complex", "real"):
        raise BundleError("projectivization applies to complex or real bundles")
    n = bundle.rank if kind == "complex" else bundle.rank // 2
    if n < 1:
        raise BundleError(f"rank {bundle.rank} is too small to projectivize")
    name = gen_name or f"{_CANON[kind]}1"
    data = whitney_complement(bundle.total_class, 1, n, kind, names=[name])
    fibre_top = _STEP[kind] * (n - 1)
    label = f"P(V^{bundle.rank}) over {bundle.base.label or 'base'}"
    return _ring(bundle.base, data.gens, data.residuals, label, cutoff, fibre_top)


def sphere_bundle(
    bundle: BundleData, gen_name: str = "eb", cutoff: int | None = None
) -> QuotientRing:
    """Sphere bundle of an oriented odd-rank bundle: one generator eb of
    degree rank-1 with eb^2 = p_n(V)."""
    if bundle.kind != "oriented" or bundle.rank % 2 == 0:
        raise BundleError("sphere_bundle needs an oriented bundle of odd rank")
    n = bundle.rank // 2
    gens = _extend(bundle.base.gens, [GeneratorSymbol(gen_name, 2 * n)])
    eb = gens.gen(gen_name)
    relation = eb * eb - bundle.component(n).reindex(gens)
    label = f"S(V^{bundle.rank}) over {bundle.base.label or 'base'}"
    return _ring(bundle.base, gens, [relation], label, cutoff, 2 * n)


def flag_bundle(
    bundle: BundleData, full: bool = False, suffix: str = "", cutoff: int | None = None
) -> QuotientRing:
    """The associated complete (even-rank) flag bundle.

    Complex: generators x_i of degree 2 with prod(1+x_i) = c(V). Real:
    u_i of degree 4 with prod(1+u_i) = p(V). Oriented: the reduced form on
    Euler generators e_i with prod(1+e_i^2) = p(V) (and prod e_i = e(V)
    for even rank); full=True also carries the redundant u_i = e_i^2.
    """
    kind, rank = bundle.kind, bundle.rank
    n = rank if kind == "complex" else rank // 2
    if n < 1:
        raise BundleError(f"rank {rank} has no even-rank flag")

    if kind == "complex":
        symbols = [GeneratorSymbol(f"x{i}{suffix}", 2) for i in range(1, n + 1)]
        gens = _extend(bundle.base.gens, symbols)
        product = gens.one()
        for s in symbols:
            product = product * (gens.one() + gens.gen(s.name))
        relations = [product - bundle.total_class.reindex(gens)]
        fibre_top = n * (n - 1)
    elif kind == "real":
        symbols = [GeneratorSymbol(f"u{i}{suffix}", 4) for i in range(1, n + 1)]
        gens = _extend(bundle.base.gens, symbols)
        product = gens.one()
        for s in symbols:
            product = product * (gens.one() + gens.gen(s.name))
        relations = [product - bundle.total_class.reindex(gens)]
        fibre_top = 2 * n * (n - 1)
    else:
        symbols = [GeneratorSymbol(f"e{i}{suffix}", 2) for i in range(1, n + 1)]
        if full:
            symbols += [
                GeneratorSymbol(f"u{i}{suffix}", 4, rewrite_priority=2) for i in range(1, n + 1)
            ]
        gens = _extend(bundle.base.gens, symbols)
        product = gens.one()
        euler = gens.one()
        for i in range(1, n + 1):
            e = gens.gen(f"e{i}{suffix}")
            square = gens.gen(f"u{i}{suffix}") if full else e * e
            product = product * (gens.one() + square)
            euler = euler * e
        relations = [product - bundle.total_class.reindex(gens)]
        if full:
            for i in range(1, n + 1):
                e = gens.gen(f"e{i}{suffix}")
                relations.append(e * e - gens.gen(f"u{i}{suffix}"))
        if rank % 2 == 0:
            relations.append(euler - bundle.euler_class.reindex(gens))
            fibre_top = 2 * n * (n - 1)
        else:
            fibre_top = 2 * n * n

    label = f"Fl(V^{rank}) over {bundle.base.label or 'base'}"
    return _ring(bundle.base, gens, relations, label, cutoff, fibre_top)


# -- torus-equivariant rings -------------------------------------------------


def equivariant_base(torus_rank: int, cutoff: int) -> QuotientRing:
    """The polynomial base ring on degree-2 generators a_1..a_n.

    The ring is infinite dimensional, so the cutoff is mandatory.
    """
    if cutoff is None:
        raise PresentationError("equivariant rings need an explicit cutoff")
    gens = Generators([GeneratorSymbol(f"a{i}", 2) for i in range(1, torus_rank + 1)])
    pres = make_presentation(gens, (), f"H_T^{torus_rank}(pt)")
    return QuotientRing(pres, cutoff)


def equivariant_space(
    kind: str,
    torus_rank: int,
    construction: str = "flag",
    k: int | None = None,
    variant: str = "even",
    cutoff: int | None = None,
) -> QuotientRing:
    """Equivariant flag or Grassmannian ring over the Borel base.

    The bundle's equivariant total class is prod(1+a_i) (complex) or
    prod(1+a_i^2) (real, oriented), with Euler class prod(a_i) in the
    oriented even case.
    """
    if cutoff is None:
        raise PresentationError("equivariant rings need an explicit cutoff")
    base = equivariant_base(torus_rank, cutoff)
    gens = base.gens
    total = gens.one()
    euler = None
    if kind == "complex":
        rank = torus_rank
        for name in gens.names:
            total = total * (gens.one() + gens.gen(name))
    elif kind in ("real", "oriented"):
        rank = 2 * torus_rank + (1 if variant == "odd" else 0)
        for name in gens.names:
            g = gens.gen(name)
            total = total * (gens.one() + g * g)
        if kind == "oriented" and variant == "even":
            euler = gens.one()
            for name in gens.names:
                euler = euler * gens.gen(name)
    else:
        raise BundleError(f"unknown bundle kind {kind!r}")
    bundle = BundleData(base, kind, rank, total, euler)
    if construction == "flag":
        ring = flag_bundle(bundle, cutoff=cutoff)
    elif construction == "grassmannian":
        if k is None:
            raise BundleError("equivariant Grassmannian needs the subspace dimension k")
        ring = grassmannian_bundle(bundle, k, cutoff=cutoff)
    else:
        raise BundleError(f"unknown construction {construction!r}")
    return ring


def zero_generators(ring: QuotientRing, names: Sequence[str], cutoff: int | None = None) -> QuotientRing:
    """Specialize the named generators to zero and re-present the ring."""
    drop = {ring.gens.index(name) for name in names}
    kept = [s for i, s in enumerate(ring.gens.symbols) if i not in drop]
    gens = Generators(kept)
    keep_idx = [i for i in range(len(ring.gens)) if i not in drop]
    relations = []
    for rel in ring.presentation.relations:
        terms = {}
        for exps, c in rel.terms.items():
            if any(exps[i] for i in drop):
                continue
            out = tuple(exps[i] for i in keep_idx)
            terms[out] = terms.get(out, Fraction(0)) + c
        relations.append(GradedElement(gens, {e: c for e, c in terms.items() if c}))
    pres = make_presentation(gens, relations, f"{ring.label} at 0")
    return QuotientRing(pres, ring.cutoff if cutoff is None else cutoff)


# -- towers ------------------------------------------------------------------


@dataclass
class TowerStage:
    """One stage of a tower: how to extend, and the bundle over the
    previous stage, with class expressions in the generators accumulated
    so far."""

    extension: str  # projectivize | grassmannianize | complete-flag
    kind: str = "complex"
    rank: int = 2
    total_class: ElementLike = 1
    euler_class: ElementLike | None = None
    k: int | None = None


def point_ring(cutoff: int = 0) -> QuotientRing:
    return QuotientRing(make_presentation(Generators(()), (), "pt"), cutoff)


def bott_tower(
    stages: Sequence[TowerStage],
    base: QuotientRing | None = None,
    start_index: int = 1,
    cutoff: int | None = None,
) -> QuotientRing:
    """Iterated tower of associated bundles, starting from `base` (default a
    point). Stage i's new generators carry the stage index: x{i} for a
    complex projectivization, u{i} real, and suffix _{i} otherwise."""
    ring = base if base is not None else point_ring()
    for offset, stage in enumerate(stages):
        idx = start_index + offset
        gens = ring.gens
        euler = None if stage.euler_class is None else _as_element(gens, stage.euler_class)
        bundle = BundleData(ring, stage.kind, stage.rank, _as_element(gens, stage.total_class), euler)
        if stage.extension == "projectivize":
            name = ("x" if stage.kind == "complex" else "u") + str(idx)
            ring = projectivization(bundle, gen_name=name)
        elif stage.extension == "grassmannianize":
            if stage.k is None:
                raise BundleError(f"stage {idx}: grassmannianize needs k")
            ring = grassmannian_bundle(bundle, stage.k, suffix=f"_{idx}")
        elif stage.extension == "complete-flag":
            ring = flag_bundle(bundle, suffix=f"_{idx}")
        else:
            raise BundleError(f"stage {idx}: unknown extension {stage.extension!r}")
    if cutoff is not None:
        ring = QuotientRing(ring.presentation, cutoff)
    return ring


# -- pushouts and the odd Grassmannian extension -----------------------------


def _apply_map(
    element: GradedElement, images: Mapping[str, GradedElement], target: QuotientRing
) -> GradedElement:
    out = target.gens.zero()
    for exps, coeff in element.terms.items():
        value = target.gens.scalar(coeff)
        for i, e in enumerate(exps):
            if not e:
                continue
            name = element.gens.names[i]
            if name not in images:
                raise BundleError(f"map has no image for generator {name!r}")
            value = value * images[name] ** e
        out = out + value
    return out


def _prepare_map(
    source: QuotientRing, target: QuotientRing, images: Mapping[str, ElementLike]
) -> dict[str, GradedElement]:
    prepared = {}
    for name, value in images.items():
        i = source.gens.index(name)
        img = _as_element(target.gens, value)
        if not img.is_zero and img.degree() != source.gens.degrees[i]:
            raise BundleError(
                f"image of {name} has degree {img.degree()}, "
                f"expected {source.gens.degrees[i]}"
            )
        prepared[name] = img
    missing = set(source.gens.names) - set(prepared)
    if missing:
        raise BundleError(f"map is missing images for generator(s) {sorted(missing)}")
    return prepared


def ring_pushout(
    b0: QuotientRing,
    b1: QuotientRing,
    e0: QuotientRing,
    map_to_b1: Mapping[str, ElementLike],
    map_to_e0: Mapping[str, ElementLike],
    cutoff: int | None = None,
) -> QuotientRing:
    """Tensor product of b1 and e0 over b0, as a presented ring.

    Generators are the disjoint union of b1's and e0's (e0 names that
    clash get an `_r` suffix); relations are both relation sets plus one
    identification per generator of b0. Both maps must be ring maps: the
    images of b0's relations are checked to vanish, up to the target
    cutoffs.
    """
    phi1 = _prepare_map(b0, b1, map_to_b1)
    phi0 = _prepare_map(b0, e0, map_to_e0)
    for rel in b0.presentation.relations:
        for target, phi, side in ((b1, phi1, "b1"), (e0, phi0, "e0")):
            image = _apply_map(rel, phi, target)
            if not target.is_zero(image):
                raise BundleError(
                    f"map to {side} is not a ring map: relation {rel} has "
                    f"nonzero image {target.normal_form(image)}"
                )

    taken = set(b1.gens.names)
    rename: dict[str, str] = {}
    for s in e0.gens.symbols:
        name = s.name
        while name in taken:
            name += "_r"
        taken.add(name)
        rename[s.name] = name
    symbols = b1.gens.symbols + tuple(
        GeneratorSymbol(rename[s.name], s.degree, s.rewrite_priority) for s in e0.gens.symbols
    )
    gens = Generators(symbols)
    offset = len(b1.gens)

    def from_b1(el: GradedElement) -> GradedElement:
        terms = {
            exps + (0,) * len(e0.gens): c for exps, c in el.terms.items()
        }
        return GradedElement(gens, terms)

    def from_e0(el: GradedElement) -> GradedElement:
        terms = {
            (0,) * offset + exps: c for exps, c in el.terms.items()
        }
        return GradedElement(gens, terms)

    relations = [from_b1(r) for r in b1.presentation.relations]
    relations += [from_e0(r) for r in e0.presentation.relations]
    for name in b0.gens.names:
        relations.append(from_b1(phi1[name]) - from_e0(phi0[name]))

    label = f"{b1.label or 'b1'} (x)_{{{b0.label or 'b0'}}} {e0.label or 'e0'}"
    pres = make_presentation(gens, relations, label)
    if cutoff is None:
        cutoff = max(b1.cutoff, e0.cutoff)
    return QuotientRing(pres, cutoff)


def odd_grassmannian_bundle(
    projective_or_sphere_ring: QuotientRing,
    bundle: BundleData,
    k: int,
    suffix: str = "",
    cutoff: int | None = None,
) -> QuotientRing:
    """Pontryagin extension presenting G_(2k+1)(V^(2n+2)) over the ring of
    the real projectivization RP(V) (or of S(V) in the oriented case).

    The caller supplies that ring; producing it from the base is a Gysin
    computation that does not determine the ring structure, hence out of
    scope here. k = 0 and k = n return the input ring unchanged.
    """
    if bundle.base is not projective_or_sphere_ring:
        raise BundleError("bundle.base must be the supplied projectivization/sphere ring")
    if bundle.kind not in ("real", "oriented"):
        raise BundleError("odd Grassmannian extension needs a real or oriented bundle")
    if bundle.rank % 2 or bundle.rank < 2:
        raise BundleError("odd Grassmannian extension needs even rank 2n+2")
    n = (bundle.rank - 2) // 2
    if not 0 <= k <= n:
        raise BundleError(f"need 0 <= k <= n = {n}, got k={k}")
    if k in (0, n):
        return projective_or_sphere_ring

    symbols = [GeneratorSymbol(f"p{i}{suffix}", 4 * i) for i in range(1, k + 1)]
    symbols += [
        GeneratorSymbol(f"pb{j}{suffix}", 4 * j, rewrite_priority=2)
        for j in range(1, n - k + 1)
    ]
    gens = _extend(bundle.base.gens, symbols)
    total = gens.one()
    for i in range(1, k + 1):
        total = total + gens.gen(f"p{i}{suffix}")
    total_bar = gens.one()
    for j in range(1, n - k + 1):
        total_bar = total_bar + gens.gen(f"pb{j}{suffix}")
    relations = [total * total_bar - bundle.total_class.reindex(gens)]
    label = f"G_{2 * k + 1}(V^{bundle.rank}) over {bundle.base.label or 'base'}"
    return _ring(bundle.base, gens, relations, label, cutoff, 4 * k * (n - k))
