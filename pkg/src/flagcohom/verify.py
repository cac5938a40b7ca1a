"""Verification suites behind `flagcohom verify`.

Each suite returns (description, ok) pairs; the CLI prints them and maps
any failure to a nonzero exit status. The pytest acceptance module runs
the same identities at the full documented parameter ranges.
"""

from __future__ import annotations

from . import catalog, extension
from .catalog import SpaceDescriptor, verify_space
from .series import (
    ClosedFormSeries,
    complex_grassmannian_series,
    odd_grassmannian_series,
    real_even_grassmannian_series,
    series_from_ring,
)

Check = tuple[str, bool]


def _catalog_descriptors(max_n: int):
    for n in range(max_n + 1):
        for k in range(n + 1):
            yield SpaceDescriptor("complex-grassmannian", k, n)
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            for variant in catalog.VARIANTS:
                yield SpaceDescriptor("real-grassmannian-even", k, n, variant)
    for n in range(1, max_n + 1):
        for variant in catalog.VARIANTS:
            lo, hi = {"even-even": (1, n - 1), "even-odd": (1, n), "odd-odd": (0, n - 1)}[variant]
            for k in range(lo, hi + 1):
                yield SpaceDescriptor("oriented-grassmannian", k, n, variant)
    for n in range(min(max_n, 3) + 1):
        for k in range(n + 1):
            yield SpaceDescriptor("odd-real-grassmannian", k, n)
            yield SpaceDescriptor("odd-oriented-grassmannian", k, n)
    for n in range(1, max_n + 1):
        yield SpaceDescriptor("complete-flag-complex", 0, n)
        yield SpaceDescriptor("complete-flag-real", 0, n, "even")
        yield SpaceDescriptor("complete-flag-oriented", 0, n, "even")
        yield SpaceDescriptor("complete-flag-oriented", 0, n, "odd")
        yield SpaceDescriptor("projective-space-complex", 0, n)
        yield SpaceDescriptor("projective-space-real", 0, min(n, 2))
        yield SpaceDescriptor("sphere", 0, n)
    yield SpaceDescriptor("point")


def suite_catalog(max_n: int) -> list[Check]:
    checks: list[Check] = []
    seen = set()
    for desc in _catalog_descriptors(max_n):
        if desc in seen:
            continue
        seen.add(desc)
        report = verify_space(desc)
        for c in report.checks:
            detail = f" ({c.detail})" if c.detail and not c.ok else ""
            checks.append((f"{desc.label}: {c.name}{detail}", c.ok))
    # the three ambient variants share one presentation
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            presentations = [
                catalog.build_space(SpaceDescriptor("real-grassmannian-even", k, n, v))[0]
                for v in catalog.VARIANTS
            ]
            same = all(
                p.generators == presentations[0].generators
                and p.relations == presentations[0].relations
                for p in presentations
            )
            checks.append((f"real even (k={k}, n={n}): ambient variants agree", same))
    # complex duality k <-> n-k at the level of closed forms
    for n in range(max_n + 1):
        for k in range(n // 2 + 1):
            a = complex_grassmannian_series(k, n)
            b = complex_grassmannian_series(n - k, n)
            ok = a.symbolic_equal(b) and a.truncate(2 * n) == b.truncate(2 * n)
            checks.append((f"complex duality G_{k} vs G_{n - k} in C^{n}", ok))
    return checks


def suite_odd_identity(max_n: int) -> list[Check]:
    checks = []
    for n in range(min(max_n, 3) + 1):
        for k in range(n + 1):
            stated = odd_grassmannian_series(k, n)
            product = ClosedFormSeries.one_plus(2 * n + 1) * real_even_grassmannian_series(k, n)
            top = 4 * k * (n - k) + 2 * n + 1
            sym = stated.symbolic_equal(product)
            num = stated.truncate(top) == product.truncate(top)
            checks.append((f"odd factorization G_{2 * k + 1}(R^{2 * n + 2}): symbolic", sym))
            checks.append((f"odd factorization G_{2 * k + 1}(R^{2 * n + 2}): numeric", num))
            ring = catalog.build_ring(SpaceDescriptor("odd-real-grassmannian", k, n))
            ok = series_from_ring(ring, top) == stated.truncate(top)
            checks.append((f"odd engine dims G_{2 * k + 1}(R^{2 * n + 2})", ok))
    return checks


def suite_extensions(max_n: int) -> list[Check]:
    checks = []
    # Leray-Hirsch product over a projective base with nontrivial classes
    base = catalog.build_ring(SpaceDescriptor("projective-space-complex", 0, 3))
    h = base.gens.gen("c1")
    total = (1 + h) * (1 + h)  # rank-2 classes c1=2h, c2=h^2, padded to rank 3
    bundle = extension.BundleData(base, "complex", 3, total)
    ring = extension.grassmannian_bundle(bundle, 1, suffix="f")
    n = min(ring.cutoff, 10)
    got = series_from_ring(ring, n)
    expected = series_from_ring(base, base.cutoff).convolve(
        complex_grassmannian_series(1, 3).truncate(n), cutoff=None
    )
    ok = all(got[d] == expected[d] for d in range(min(n, expected.cutoff) + 1))
    checks.append(("Leray-Hirsch product over CP^2 base", ok))

    # Whitney residuals regenerate the ideal
    data = extension.whitney_complement(total, 1, 3, "complex", names=["g1"])
    gens = data.gens
    total_bar = gens.one()
    for c in data.complements:
        total_bar = total_bar + c
    residue = (gens.one() + gens.gen("g1")) * total_bar - total.reindex(gens)
    proj = extension.projectivization(bundle, gen_name="g1")
    ok = all(c.is_zero for d, c in residue.homogeneous_components().items() if d <= 2 * (3 - 1))
    ok = ok and proj.is_zero(residue)
    checks.append(("Whitney complement residual expansion", ok))

    # pushout over a point multiplies dimensions
    b1 = catalog.build_ring(SpaceDescriptor("projective-space-complex", 0, 2))
    e0 = catalog.build_ring(SpaceDescriptor("sphere", 0, 2))
    pt = extension.point_ring()
    push = extension.ring_pushout(pt, b1, e0, {}, {})
    sb = series_from_ring(b1, 2)
    se = series_from_ring(e0, 4)
    conv = sb.convolve(se, cutoff=2)
    ok = all(push.dimension(d) == conv[d] for d in range(3))
    checks.append(("pushout over a point multiplies dimensions", ok))

    # staged tower equals the single call
    stages = [
        extension.TowerStage("projectivize", "complex", 2, "1"),
        extension.TowerStage("projectivize", "complex", 2, "1 + 2*x1"),
    ]
    whole = extension.bott_tower(stages)
    first = extension.bott_tower(stages[:1])
    second = extension.bott_tower(
        [extension.TowerStage("projectivize", "complex", 2, first.gens.parse("1 + 2*x1"))],
        base=first,
        start_index=2,
    )
    ok = whole.dimensions(4) == second.dimensions(4) == [1, 0, 2, 0, 1]
    checks.append(("tower staged vs single call", ok))
    return checks


def suite_equivariant(max_n: int) -> list[Check]:
    checks = []
    rank, cutoff = 2, 8
    ring = extension.equivariant_space("complex", rank, "flag", cutoff=cutoff)
    flag = SpaceDescriptor("complete-flag-complex", 0, rank)
    fibre = catalog.build_space(flag)[1].truncate(cutoff)
    borel = ClosedFormSeries.from_factors(den=(2,) * rank).truncate(cutoff)
    ok = series_from_ring(ring, cutoff) == borel.convolve(fibre)
    checks.append((f"equivariant flag rank {rank}: dims = Borel convolution", ok))
    plain = extension.zero_generators(ring, [f"a{i}" for i in range(1, rank + 1)])
    fl_ring = catalog.build_ring(flag)
    ok = all(
        plain.dimension(d) == (fl_ring.dimension(d) if d <= fl_ring.cutoff else 0)
        for d in range(cutoff + 1)
    )
    checks.append((f"equivariant flag rank {rank}: a_i -> 0 recovers the fibre", ok))
    return checks


SUITES = {
    "catalog": suite_catalog,
    "odd-identity": suite_odd_identity,
    "extensions": suite_extensions,
    "equivariant": suite_equivariant,
}


def run_suites(names, max_n: int = 4) -> list[Check]:
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITES[name](max_n))
    return checks
