"""Bundle-level constructions: Whitney recursion, associated bundles,
flag bundles, equivariant rings, towers and pushouts."""

import pytest

from flagcohom import (
    BundleData,
    BundleError,
    GeneratorSymbol,
    Generators,
    QuotientRing,
    SpaceDescriptor,
    TowerStage,
    bott_tower,
    build_ring,
    build_space,
    complex_grassmannian_series,
    equivariant_base,
    equivariant_space,
    flag_bundle,
    grassmannian_bundle,
    make_presentation,
    odd_grassmannian_bundle,
    point_ring,
    projectivization,
    ring_pushout,
    series_from_ring,
    sphere_bundle,
    whitney_complement,
    zero_generators,
)
from flagcohom.algebra import PresentationError
from flagcohom.series import ClosedFormSeries


def free_ring(name: str, degree: int, cutoff: int, relation_power: int | None = None):
    gens = Generators([GeneratorSymbol(name, degree)])
    rels = [gens.gen(name) ** relation_power] if relation_power else []
    label = f"Q[{name}]" + (f"/{name}^{relation_power}" if relation_power else "")
    return QuotientRing(make_presentation(gens, rels, label), cutoff)


def projective_base(m: int) -> QuotientRing:
    """CP^m with its generator named h, so fibre classes keep c-names."""
    return free_ring("h", 2, 2 * m + 2, relation_power=m + 1)


# -- bundle data validation ------------------------------------------------------


def test_total_class_needs_unit():
    base = projective_base(2)
    h = base.gens.gen("h")
    with pytest.raises(BundleError, match="degree-0"):
        BundleData(base, "complex", 2, h)


def test_total_class_degrees_checked():
    base = projective_base(3)
    h = base.gens.gen("h")
    with pytest.raises(BundleError, match="degree 2"):
        BundleData(base, "real", 4, 1 + h)  # Pontryagin parts live in degree 4i
    with pytest.raises(BundleError, match="degree 6"):
        BundleData(base, "complex", 2, 1 + h ** 3)  # above 2*rank


def test_euler_class_rules():
    base = projective_base(2)
    with pytest.raises(BundleError, match="euler"):
        BundleData(base, "oriented", 4, 1)  # even rank needs one
    with pytest.raises(BundleError, match="euler"):
        BundleData(base, "oriented", 5, 1, euler_class=base.gens.zero())
    with pytest.raises(BundleError, match="degree"):
        BundleData(base, "oriented", 4, 1, euler_class=base.gens.gen("h"))
    ok = BundleData(base, "oriented", 4, 1, euler_class=base.gens.gen("h") ** 2)
    assert ok.euler_class.degree() == 4


# -- Whitney complement recursion --------------------------------------------------


def test_whitney_trivial_class_first_step():
    pt = point_ring()
    data = whitney_complement(pt.gens.one(), 2, 4, "complex")
    c1 = data.gens.gen("c1")
    assert data.complements[0] == -c1


def test_whitney_projective_residual():
    pt = point_ring()
    data = whitney_complement(pt.gens.one(), 1, 4, "complex")
    c1 = data.gens.gen("c1")
    assert list(data.complements) == [(-c1) ** j for j in (1, 2, 3)]
    assert list(data.residuals) == [c1 ** 4]


def test_whitney_general_residual_display_form():
    base = projective_base(3)
    h = base.gens.gen("h")
    total = (1 + h) ** 2  # c1(V) = 2h, c2(V) = h^2 for a rank-2 bundle
    data = whitney_complement(total, 1, 2, "complex", names=["g"])
    g = data.gens.gen("g")
    hh = base.gens.gen("h").reindex(data.gens)
    assert list(data.residuals) == [g ** 2 - 2 * hh * g + hh ** 2]


def test_whitney_remultiplication_reduces_to_zero():
    base = projective_base(3)
    h = base.gens.gen("h")
    total = 1 + 3 * h + h ** 2 + 2 * h ** 3
    n, k = 4, 2
    bundle = BundleData(base, "complex", n, total)
    ring = grassmannian_bundle(bundle, k, suffix="f")
    data = whitney_complement(total, k, n, "complex", names=["c1f", "c2f"])
    gens = data.gens
    total_canon = gens.one() + gens.gen("c1f") + gens.gen("c2f")
    total_bar = gens.one()
    for c in data.complements:
        total_bar = total_bar + c
    residue = total_canon * total_bar - total.reindex(gens)
    # components at or below the last solved index vanish identically
    for d, comp in residue.homogeneous_components().items():
        if d <= 2 * (n - k):
            assert comp.is_zero
    # and the rest lies in the ideal generated by the residual relations
    assert ring.is_zero(residue.reindex(ring.gens))


def test_whitney_range_check():
    with pytest.raises(BundleError):
        whitney_complement(point_ring().gens.one(), 3, 2)


# -- associated bundles -------------------------------------------------------------


def test_fibre_case_recovers_catalog():
    pt = point_ring()
    bundle = BundleData(pt, "complex", 4, 1)
    ring = grassmannian_bundle(bundle, 2)
    catalog_ring = build_ring(SpaceDescriptor("complex-grassmannian", 2, 4))
    assert ring.dimensions(8) == catalog_ring.dimensions(8)


def test_degenerate_k_returns_base():
    base = projective_base(2)
    bundle = BundleData(base, "complex", 3, 1)
    assert grassmannian_bundle(bundle, 0) is base
    assert grassmannian_bundle(bundle, 3) is base


def test_projectivization_spec_example():
    # V = gamma + trivial over CP^m: single relation c1^2 - h*c1
    base = projective_base(2)
    h = base.gens.gen("h")
    ring = projectivization(BundleData(base, "complex", 2, 1 + h))
    assert [str(r) for r in ring.presentation.relations] == ["h^3", "-h*c1 + c1^2"]


def test_projectivization_over_point_is_projective_space():
    ring = projectivization(BundleData(point_ring(), "complex", 4, 1))
    assert ring.dimensions(8) == [1, 0, 1, 0, 1, 0, 1, 0, 0]


def test_real_rank_two_grassmannianization_over_point():
    ring = projectivization(BundleData(point_ring(), "real", 6, 1))
    assert [str(r) for r in ring.presentation.relations] == ["p1^3"]
    assert ring.dimensions(8) == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_sphere_bundle_over_point():
    ring = sphere_bundle(BundleData(point_ring(), "oriented", 5, 1))
    assert [(s.name, s.degree) for s in ring.gens.symbols] == [("eb", 4)]
    assert ring.dimensions(4) == [1, 0, 0, 0, 1]


def test_sphere_bundle_needs_oriented_odd():
    with pytest.raises(BundleError):
        sphere_bundle(BundleData(point_ring(), "real", 5, 1))


def test_oriented_fibre_euler_relation():
    pt = point_ring()
    bundle = BundleData(pt, "oriented", 4, 1, euler_class=pt.gens.zero())
    ring = grassmannian_bundle(bundle, 2)
    e, eb = ring.gens.gen("e"), ring.gens.gen("eb")
    assert ring.is_zero(e * eb)
    assert ring.dimensions(4) == [1, 0, 2, 0, 1]


def test_oriented_odd_subspace_in_even_rank_rejected():
    pt = point_ring()
    bundle = BundleData(pt, "oriented", 4, 1, euler_class=pt.gens.zero())
    with pytest.raises(BundleError):
        grassmannian_bundle(bundle, 1)


def test_leray_hirsch_dimensions_product():
    base = projective_base(3)
    h = base.gens.gen("h")
    for rank, k, total in ((2, 1, 1 + h), (3, 1, (1 + h) ** 3), (4, 2, 1 + h + h ** 2)):
        ring = grassmannian_bundle(BundleData(base, "complex", rank, total), k, suffix="f")
        n = base.cutoff
        base_series = series_from_ring(base, n)
        fibre_series = complex_grassmannian_series(k, rank).truncate(n)
        assert series_from_ring(ring, n) == base_series.convolve(fibre_series)


# -- flag bundles -------------------------------------------------------------------


def test_complex_flag_manifold():
    ring = flag_bundle(BundleData(point_ring(), "complex", 3, 1))
    assert ring.dimensions(6) == [1, 0, 2, 0, 2, 0, 1]
    series = build_space(SpaceDescriptor("complete-flag-complex", 0, 3))[1]
    assert series_from_ring(ring, 6) == series.truncate(6)


def test_oriented_flag_over_point_has_euler_product_relation():
    pt = point_ring()
    ring = flag_bundle(BundleData(pt, "oriented", 4, 1, euler_class=pt.gens.zero()))
    e1, e2 = ring.gens.gen("e1"), ring.gens.gen("e2")
    assert ring.is_zero(e1 * e2)
    assert ring.dimensions(4) == [1, 0, 2, 0, 1]


def test_oriented_flag_full_presentation_agrees_with_reduced():
    pt = point_ring()
    bundle = BundleData(pt, "oriented", 4, 1, euler_class=pt.gens.zero())
    reduced = flag_bundle(bundle)
    full = flag_bundle(bundle, full=True)
    assert reduced.dimensions(8) == full.dimensions(8)
    # the carried u_i really is e_i^2
    u1, e1 = full.gens.gen("u1"), full.gens.gen("e1")
    assert full.is_zero(u1 - e1 * e1)


def test_flag_bundle_series_product():
    base = projective_base(2)
    h = base.gens.gen("h")
    ring = flag_bundle(BundleData(base, "complex", 3, 1 + h))
    flag_series = build_space(SpaceDescriptor("complete-flag-complex", 0, 3))[1]
    n = base.cutoff
    assert series_from_ring(ring, n) == series_from_ring(base, n).convolve(
        flag_series.truncate(n)
    )


# -- equivariant rings ----------------------------------------------------------------


def test_equivariant_base_is_free_polynomial_ring():
    ring = equivariant_base(2, 8)
    assert ring.dimensions(8) == [1, 0, 2, 0, 3, 0, 4, 0, 5]


def test_equivariant_needs_cutoff():
    with pytest.raises(PresentationError):
        equivariant_base(2, None)
    with pytest.raises(PresentationError):
        equivariant_space("complex", 2, "flag")


def test_equivariant_flag_relations_identify_symmetric_functions():
    ring = equivariant_space("complex", 2, "flag", cutoff=8)
    g = ring.gens
    x1, x2, a1, a2 = g.gen("x1"), g.gen("x2"), g.gen("a1"), g.gen("a2")
    assert ring.is_zero(x1 + x2 - a1 - a2)
    assert ring.is_zero(x1 * x2 - a1 * a2)
    assert not ring.is_zero(x1 - a1)


def test_equivariant_oriented_flag_euler_identity():
    ring = equivariant_space("oriented", 2, "flag", variant="even", cutoff=8)
    g = ring.gens
    prod_e = g.gen("e1") * g.gen("e2")
    prod_a = g.gen("a1") * g.gen("a2")
    assert ring.is_zero(prod_e - prod_a)


def test_equivariant_dimensions_are_borel_convolution():
    cutoff = 10
    for kind, fam, variant in (
        ("complex", "complete-flag-complex", ""),
        ("real", "complete-flag-real", "even"),
        ("oriented", "complete-flag-oriented", "even"),
    ):
        ring = equivariant_space(kind, 2, "flag", variant=variant or "even", cutoff=cutoff)
        borel = ClosedFormSeries.from_factors(den=(2, 2)).truncate(cutoff)
        fibre = build_space(SpaceDescriptor(fam, 0, 2, variant))[1].truncate(cutoff)
        assert series_from_ring(ring, cutoff) == borel.convolve(fibre)


def test_zeroing_alphas_recovers_fibre():
    ring = equivariant_space("complex", 3, "flag", cutoff=12)
    plain = zero_generators(ring, ["a1", "a2", "a3"])
    fibre = build_ring(SpaceDescriptor("complete-flag-complex", 0, 3))
    for d in range(13):
        expected = fibre.dimension(d) if d <= fibre.cutoff else 0
        assert plain.dimension(d) == expected


# -- towers ------------------------------------------------------------------------


def test_cp1_tower_presentation_and_dims():
    stages = [
        TowerStage("projectivize", "complex", 2, "1"),
        TowerStage("projectivize", "complex", 2, "1 + 3*x1"),
    ]
    ring = bott_tower(stages)
    assert [str(r) for r in ring.presentation.relations] == ["x1^2", "-3*x1*x2 + x2^2"]
    assert ring.dimensions(4) == [1, 0, 2, 0, 1]


def test_tower_stage_expression_over_missing_generator_rejected():
    stages = [TowerStage("projectivize", "complex", 2, "1 + x7")]
    with pytest.raises(PresentationError):
        bott_tower(stages)


def test_tower_heights_give_binomial_series():
    stages = []
    classes = ["1", "1 + 2*x1", "1 + x1 - x2", "1 + x1 + x2 - 3*x3 + x1^2"]
    for height in range(1, 5):
        stages = [
            TowerStage("projectivize", "complex", 2, classes[i]) for i in range(height)
        ]
        ring = bott_tower(stages)
        dims = ring.dimensions(2 * height)
        from math import comb

        assert dims == [comb(height, d // 2) if d % 2 == 0 else 0 for d in range(2 * height + 1)]


def test_staged_tower_equals_single_call():
    stages = [
        TowerStage("projectivize", "complex", 2, "1"),
        TowerStage("grassmannianize", "complex", 3, "1 + x1", k=1),
    ]
    whole = bott_tower(stages)
    first = bott_tower(stages[:1])
    second = bott_tower(
        [TowerStage("grassmannianize", "complex", 3, "1 + x1", k=1)],
        base=first,
        start_index=2,
    )
    assert whole.dimensions(6) == second.dimensions(6)
    assert whole.gens == second.gens
    a = whole.gens.gen("x1") * whole.gens.gen("c1_2")
    assert whole.normal_form(a) == second.normal_form(a)


def test_mixed_real_tower_runs():
    stages = [
        TowerStage("projectivize", "real", 4, "1"),
        TowerStage("projectivize", "real", 4, "1 + 2*u1"),
    ]
    ring = bott_tower(stages)
    assert ring.dimensions(8) == [1, 0, 0, 0, 2, 0, 0, 0, 1]


# -- pushouts ----------------------------------------------------------------------


def test_pushout_over_point_multiplies_dimensions():
    b1 = free_ring("s", 2, 4, relation_power=2)  # CP^1 with generator s
    e0 = free_ring("w", 2, 6, relation_power=3)  # CP^2 with generator w
    push = ring_pushout(point_ring(), b1, e0, {}, {})
    conv = series_from_ring(b1, 4).convolve(series_from_ring(e0, 4))
    assert series_from_ring(push, 4) == conv


def test_pushout_identity_pullback_keeps_e0():
    b0 = free_ring("h", 2, 10)
    e0 = projectivization(BundleData(b0, "complex", 3, 1 + b0.gens.gen("h")))
    push = ring_pushout(b0, b0, e0, {"h": "h"}, {"h": "h"})
    assert series_from_ring(push, 8) == series_from_ring(e0, 8)


def test_pushout_bu1_elimination_recovers_fibre():
    b0 = free_ring("h", 2, 10)
    e0 = projectivization(BundleData(b0, "complex", 4, 1 + b0.gens.gen("h")))
    push = ring_pushout(b0, point_ring(), e0, {"h": "0"}, {"h": "h"})
    fibre = build_ring(SpaceDescriptor("projective-space-complex", 0, 4))
    assert push.dimensions(8) == fibre.dimensions(8)


def test_pushout_symmetry_in_dimensions():
    b1 = free_ring("s", 2, 6, relation_power=3)
    e0 = free_ring("w", 4, 8, relation_power=2)
    a = ring_pushout(point_ring(), b1, e0, {}, {})
    b = ring_pushout(point_ring(), e0, b1, {}, {})
    assert a.dimensions(6) == b.dimensions(6)


def test_pushout_degree_mismatch_rejected():
    b0 = free_ring("h", 2, 8)
    e0 = free_ring("w", 4, 8)
    with pytest.raises(BundleError, match="degree"):
        ring_pushout(b0, point_ring(), e0, {"h": "0"}, {"h": "w"})


def test_pushout_non_ring_map_rejected():
    b0 = free_ring("s", 2, 8, relation_power=2)  # s^2 = 0
    e0 = free_ring("w", 2, 8, relation_power=4)  # w^2 != 0
    with pytest.raises(BundleError, match="ring map"):
        ring_pushout(b0, point_ring(), e0, {"s": "0"}, {"s": "w"})


def test_pushout_missing_image_rejected():
    b0 = free_ring("h", 2, 8)
    with pytest.raises(BundleError, match="missing"):
        ring_pushout(b0, point_ring(), point_ring(), {}, {})


def test_pushout_renames_colliding_generators():
    b1 = free_ring("s", 2, 4, relation_power=2)
    e0 = free_ring("s", 2, 4, relation_power=2)
    push = ring_pushout(point_ring(), b1, e0, {}, {})
    assert push.gens.names == ("s", "s_r")
    assert push.dimensions(4) == [1, 0, 2, 0, 1]


# -- odd Grassmannian bundle version --------------------------------------------------


def test_odd_extension_over_point_matches_catalog():
    rp = free_ring("r", 5, 13)  # H*(RP^5;Q) = Q[r]/r^2 (r odd, square structural)
    bundle = BundleData(rp, "real", 6, 1)
    ring = odd_grassmannian_bundle(rp, bundle, 1)
    catalog_ring = build_ring(SpaceDescriptor("odd-real-grassmannian", 1, 2))
    assert ring.dimensions(9) == catalog_ring.dimensions(9)


def test_odd_extension_series_identity():
    from flagcohom import odd_grassmannian_series

    rp = free_ring("r", 7, 23)  # RP(V^8) over a point
    bundle = BundleData(rp, "real", 8, 1)
    ring = odd_grassmannian_bundle(rp, bundle, 1)
    top = 4 * 1 * 2 + 7
    assert series_from_ring(ring, top) == odd_grassmannian_series(1, 3).truncate(top)


def test_odd_extension_degenerate_k_returns_input():
    rp = free_ring("r", 5, 13)
    bundle = BundleData(rp, "real", 6, 1)
    assert odd_grassmannian_bundle(rp, bundle, 0) is rp
    assert odd_grassmannian_bundle(rp, bundle, 2) is rp


def test_odd_extension_requires_matching_base():
    rp = free_ring("r", 5, 13)
    other = free_ring("r", 5, 13)
    bundle = BundleData(rp, "real", 6, 1)
    with pytest.raises(BundleError):
        odd_grassmannian_bundle(other, bundle, 1)


# -- name clashes -----------------------------------------------------------------


def test_extension_name_clash_needs_suffix():
    base = build_ring(SpaceDescriptor("projective-space-complex", 0, 3))  # generator c1
    bundle = BundleData(base, "complex", 2, 1)
    with pytest.raises(BundleError, match="suffix"):
        grassmannian_bundle(bundle, 1)
    ring = grassmannian_bundle(bundle, 1, suffix="f")
    assert "c1f" in ring.gens.names


def test_equivariant_grassmannian_borel_convolution():
    cutoff = 10
    ring = equivariant_space("complex", 3, "grassmannian", k=1, cutoff=cutoff)
    borel = ClosedFormSeries.from_factors(den=(2, 2, 2)).truncate(cutoff)
    fibre = complex_grassmannian_series(1, 3).truncate(cutoff)
    assert series_from_ring(ring, cutoff) == borel.convolve(fibre)
    # relation components of (1+c1)(1+cb1+cb2) = prod(1+a_i) hold
    g = ring.gens
    lhs = (1 + g.gen("c1")) * (1 + g.gen("cb1") + g.gen("cb2"))
    rhs = (1 + g.gen("a1")) * (1 + g.gen("a2")) * (1 + g.gen("a3"))
    assert ring.is_zero(lhs - rhs)


def test_sphere_bundle_series_product_over_base():
    base = free_ring("h", 2, 8, relation_power=4)  # CP^3 with generator h
    h = base.gens.gen("h")
    bundle = BundleData(base, "oriented", 5, 1 + h ** 2)
    ring = sphere_bundle(bundle)
    upto = 8
    expected = series_from_ring(base, upto).convolve(
        ClosedFormSeries.one_plus(4).truncate(upto)
    )
    assert series_from_ring(ring, upto) == expected


def test_fibre_specialization_sweep():
    """Every bundle constructor over a point with trivial classes matches
    the catalog fibre's dimensions."""
    pt = point_ring()

    def compare(built, desc):
        reference = build_ring(desc)
        upto = min(built.cutoff, reference.cutoff)
        assert built.dimensions(upto) == reference.dimensions(upto), desc.label

    for n in range(1, 5):
        for k in range(1, n):
            compare(
                grassmannian_bundle(BundleData(pt, "complex", n, 1), k),
                SpaceDescriptor("complex-grassmannian", k, n),
            )
    for n in range(1, 4):
        for k in range(1, n):
            compare(
                grassmannian_bundle(BundleData(pt, "real", 2 * n, 1), 2 * k),
                SpaceDescriptor("real-grassmannian-even", k, n, "even-even"),
            )
            compare(
                grassmannian_bundle(
                    BundleData(pt, "oriented", 2 * n, 1, euler_class=pt.gens.zero()), 2 * k
                ),
                SpaceDescriptor("oriented-grassmannian", k, n, "even-even"),
            )
        for k in range(1, n + 1):
            compare(
                grassmannian_bundle(BundleData(pt, "oriented", 2 * n + 1, 1), 2 * k),
                SpaceDescriptor("oriented-grassmannian", k, n, "even-odd"),
            )
        for k in range(n):
            compare(
                grassmannian_bundle(BundleData(pt, "oriented", 2 * n + 1, 1), 2 * k + 1),
                SpaceDescriptor("oriented-grassmannian", k, n, "odd-odd"),
            )
    for n in range(1, 4):
        compare(
            flag_bundle(BundleData(pt, "complex", n, 1)),
            SpaceDescriptor("complete-flag-complex", 0, n),
        )
        compare(
            flag_bundle(BundleData(pt, "real", 2 * n, 1)),
            SpaceDescriptor("complete-flag-real", 0, n, "even"),
        )
        compare(
            flag_bundle(BundleData(pt, "oriented", 2 * n, 1, euler_class=pt.gens.zero())),
            SpaceDescriptor("complete-flag-oriented", 0, n, "even"),
        )
        compare(
            flag_bundle(BundleData(pt, "oriented", 2 * n + 1, 1)),
            SpaceDescriptor("complete-flag-oriented", 0, n, "odd"),
        )
        compare(
            sphere_bundle(BundleData(pt, "oriented", 2 * n + 1, 1)),
            SpaceDescriptor("sphere", 0, n),
        )
        compare(
            projectivization(BundleData(pt, "complex", n + 1, 1)),
            SpaceDescriptor("projective-space-complex", 0, n + 1),
        )


def test_real_grassmannian_bundle_over_quaternionic_base():
    base = free_ring("q", 4, 12, relation_power=2)  # HP^1-style base
    q = base.gens.gen("q")
    bundle = BundleData(base, "real", 4, 1 + q)
    ring = grassmannian_bundle(bundle, 2)
    fibre = build_space(SpaceDescriptor("real-grassmannian-even", 1, 2, "even-even"))[1]
    upto = 8
    expected = series_from_ring(base, upto).convolve(fibre.truncate(upto))
    assert series_from_ring(ring, upto) == expected
    # Whitney relation p1 + pb1 = p1(V) holds in the quotient
    g = ring.gens
    assert ring.is_zero(g.gen("p1") + g.gen("pb1") - q.reindex(g))
