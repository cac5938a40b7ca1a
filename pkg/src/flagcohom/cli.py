"""Command-line interface: build rings from a declarative config or from
catalog shorthand, print presentations, bases, series and normal forms,
and run the verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import catalog, extension
from .algebra import (
    GeneratorSymbol,
    Generators,
    GradedElement,
    QuotientRing,
    RingPresentation,
    make_presentation,
)
from .series import ClosedFormSeries, series_from_ring
from .catalog import BasisFamily, SpaceDescriptor

LARGE_OUTPUT_CAP = 64


class ConfigError(ValueError):
    """Schema violation in a job config, with a field path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")


@dataclass
class BuiltJob:
    ring: QuotientRing
    series: ClosedFormSeries | None = None
    family: BasisFamily | None = None


def _field(doc: dict, path: str, key: str, kind, required: bool = True, default=None):
    if key not in doc:
        if required:
            raise ConfigError(f"{path}.{key}", "missing required field")
        return default
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise ConfigError(f"{path}.{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _parse_elements(gens: Generators, value, path: str) -> list[GradedElement]:
    """An element is a string, or a list of component strings."""
    if isinstance(value, str):
        value = [value]
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ConfigError(path, "expected an expression string or a list of them")
    out = []
    for i, text in enumerate(value):
        try:
            out.append(gens.parse(text))
        except ValueError as exc:
            raise ConfigError(f"{path}[{i}]", str(exc)) from exc
    return out


def _sum_elements(gens, value, path) -> GradedElement:
    total = gens.zero()
    for el in _parse_elements(gens, value, path):
        total = total + el
    return total


def build_job(doc: dict, path: str = "config", cutoff: int | None = None) -> BuiltJob:
    """Build a ring (plus closed form and basis family when known) from a
    config document: one of space | presentation | bundle | tower | pushout."""
    if not isinstance(doc, dict):
        raise ConfigError(path, "expected an object")
    kinds = [k for k in ("space", "presentation", "bundle", "tower", "pushout") if k in doc]
    if len(kinds) != 1:
        raise ConfigError(path, "need exactly one of space/presentation/bundle/tower/pushout")
    cutoff = doc.get("cutoff", cutoff)
    if cutoff is not None and (not isinstance(cutoff, int) or cutoff < 0):
        raise ConfigError(f"{path}.cutoff", "must be a nonnegative integer")
    kind = kinds[0]
    sub = doc[kind]
    path = f"{path}.{kind}"

    if kind == "space":
        return _build_space_job(sub, path, cutoff)
    if kind == "presentation":
        pres = parse_presentation(sub, path)
        if cutoff is None:
            raise ConfigError(path, "inline presentations need an explicit cutoff")
        return BuiltJob(QuotientRing(pres, cutoff))
    if kind == "bundle":
        return _build_bundle_job(sub, path, cutoff)
    if kind == "tower":
        return _build_tower_job(sub, path, cutoff)
    return _build_pushout_job(sub, path, cutoff)


def _build_space_job(sub, path, cutoff) -> BuiltJob:
    family = _field(sub, path, "family", str)
    try:
        desc = SpaceDescriptor(
            family,
            _field(sub, path, "k", int, required=False, default=0),
            _field(sub, path, "n", int, required=False, default=0),
            _field(sub, path, "variant", str, required=False, default=""),
        )
        pres, series, basis_family = catalog.build_space(desc)
        ring = QuotientRing(pres, cutoff if cutoff is not None else catalog.default_cutoff(desc))
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from exc
    return BuiltJob(ring, series, basis_family)


def parse_presentation(sub, path) -> RingPresentation:
    gen_docs = _field(sub, path, "generators", list)
    symbols = []
    for i, g in enumerate(gen_docs):
        if not (isinstance(g, list) and len(g) == 2 and isinstance(g[0], str) and isinstance(g[1], int)):
            raise ConfigError(f"{path}.generators[{i}]", "expected [name, degree]")
        symbols.append(GeneratorSymbol(g[0], g[1]))
    try:
        gens = Generators(symbols)
        relations = []
        for i, rel in enumerate(_field(sub, path, "relations", list, required=False, default=[])):
            relations.extend(_parse_elements(gens, rel, f"{path}.relations[{i}]"))
        return make_presentation(gens, relations, _field(sub, path, "label", str, required=False, default=""))
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from exc


def _build_bundle_job(sub, path, cutoff) -> BuiltJob:
    base_job = build_job(_field(sub, path, "base", dict), f"{path}.base")
    base = base_job.ring
    kind = _field(sub, path, "kind", str)
    rank = _field(sub, path, "rank", int)
    try:
        total = _sum_elements(base.gens, _field(sub, path, "total_class", None), f"{path}.total_class")
        euler = None
        if sub.get("euler_class") is not None:
            euler = _sum_elements(base.gens, sub["euler_class"], f"{path}.euler_class")
        bundle = extension.BundleData(base, kind, rank, total, euler)
        ext = _field(sub, path, "extension", str)
        suffix = _field(sub, path, "suffix", str, required=False, default="")
        if ext == "grassmannian":
            k = _field(sub, path, "k", int)
            ring = extension.grassmannian_bundle(bundle, k, suffix=suffix, cutoff=cutoff)
            fibre = extension._fibre_descriptor(
                kind,
                extension._reduced_k(kind, rank, k),
                rank if kind == "complex" else rank // 2,
                _oriented_kind(kind, rank, k),
            )
            fseries = catalog.build_space(fibre)[1] if 0 < k < rank else ClosedFormSeries.one()
        elif ext == "projectivize":
            ring = extension.projectivization(bundle, cutoff=cutoff)
            n = rank if kind == "complex" else rank // 2
            step = 2 if kind == "complex" else 4
            fseries = ClosedFormSeries.from_factors(num=(step * n,), den=(step,))
        elif ext == "sphere":
            ring = extension.sphere_bundle(bundle, cutoff=cutoff)
            fseries = ClosedFormSeries.one_plus(rank - 1)
        elif ext == "flag":
            ring = extension.flag_bundle(
                bundle, full=bool(sub.get("full", False)), suffix=suffix, cutoff=cutoff
            )
            fseries = _flag_fibre_series(kind, rank)
        elif ext == "odd-grassmannian":
            k = _field(sub, path, "k", int)
            ring = extension.odd_grassmannian_bundle(base, bundle, k, suffix=suffix, cutoff=cutoff)
            fseries = None
        else:
            raise ConfigError(f"{path}.extension", f"unknown extension {ext!r}")
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from exc
    series = base_job.series * fseries if (base_job.series and fseries) else None
    return BuiltJob(ring, series)


def _oriented_kind(kind, rank, k):
    if kind != "oriented":
        return ""
    if rank % 2 == 0:
        return "even-even"
    return "even-odd" if k % 2 == 0 else "odd-odd"


def _flag_fibre_series(kind, rank):
    n = rank if kind == "complex" else rank // 2
    fam = {
        "complex": ("complete-flag-complex", ""),
        "real": ("complete-flag-real", "even" if rank % 2 == 0 else "odd"),
        "oriented": ("complete-flag-oriented", "even" if rank % 2 == 0 else "odd"),
    }[kind]
    return catalog.build_space(SpaceDescriptor(fam[0], 0, n, fam[1]))[1]


def _build_tower_job(sub, path, cutoff) -> BuiltJob:
    stage_docs = _field(sub, path, "stages", list)
    base_job = None
    if "base" in sub:
        base_job = build_job(sub["base"], f"{path}.base")
    ring = base_job.ring if base_job else extension.point_ring()
    series = base_job.series if base_job else ClosedFormSeries.one()
    try:
        for i, s in enumerate(stage_docs):
            spath = f"{path}.stages[{i}]"
            if not isinstance(s, dict):
                raise ConfigError(spath, "expected an object")
            stage = extension.TowerStage(
                extension=_field(s, spath, "extension", str),
                kind=_field(s, spath, "kind", str, required=False, default="complex"),
                rank=_field(s, spath, "rank", int),
                total_class=_sum_elements(
                    ring.gens, s.get("total_class", "1"), f"{spath}.total_class"
                ),
                euler_class=None
                if s.get("euler_class") is None
                else _sum_elements(ring.gens, s["euler_class"], f"{spath}.euler_class"),
                k=_field(s, spath, "k", int, required=False),
            )
            ring = extension.bott_tower([stage], base=ring, start_index=i + 1)
            if series is not None:
                fib = _stage_fibre_series(stage)
                series = series * fib if fib is not None else None
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from exc
    if cutoff is not None:
        ring = QuotientRing(ring.presentation, cutoff)
    return BuiltJob(ring, series)


def _stage_fibre_series(stage: extension.TowerStage):
    kind, rank = stage.kind, stage.rank
    if stage.extension == "projectivize":
        n = rank if kind == "complex" else rank // 2
        step = 2 if kind == "complex" else 4
        return ClosedFormSeries.from_factors(num=(step * n,), den=(step,))
    if stage.extension == "complete-flag":
        return _flag_fibre_series(kind, rank)
    if stage.extension == "grassmannianize" and stage.k is not None:
        if stage.k in (0, rank):
            return ClosedFormSeries.one()
        fibre = extension._fibre_descriptor(
            kind,
            extension._reduced_k(kind, rank, stage.k),
            rank if kind == "complex" else rank // 2,
            _oriented_kind(kind, rank, stage.k),
        )
        return catalog.build_space(fibre)[1]
    return None


def _build_pushout_job(sub, path, cutoff) -> BuiltJob:
    b0 = build_job(_field(sub, path, "b0", dict), f"{path}.b0").ring
    b1 = build_job(_field(sub, path, "b1", dict), f"{path}.b1").ring
    e0 = build_job(_field(sub, path, "e0", dict), f"{path}.e0").ring
    map_b1 = _field(sub, path, "map_b1", dict, required=False, default={})
    map_e0 = _field(sub, path, "map_e0", dict, required=False, default={})
    try:
        ring = extension.ring_pushout(b0, b1, e0, map_b1, map_e0, cutoff=cutoff)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from exc
    return BuiltJob(ring)


# -- rendering ----------------------------------------------------------------


def element_doc(el: GradedElement) -> list:
    return [
        [list(exps), el.terms[exps].numerator, el.terms[exps].denominator]
        for exps in el._sorted_exps()
    ]


def presentation_doc(pres: RingPresentation) -> dict:
    return {
        "label": pres.label,
        "generators": [[s.name, s.degree] for s in pres.generators],
        "relations": [element_doc(r) for r in pres.relations],
    }


def presentation_from_doc(doc: dict) -> RingPresentation:
    gens = Generators([GeneratorSymbol(n, d) for n, d in doc["generators"]])
    relations = []
    for rel in doc["relations"]:
        from fractions import Fraction

        relations.append(gens.element({tuple(e): Fraction(num, den) for e, num, den in rel}))
    return make_presentation(gens, relations, doc.get("label", ""))


def render_presentation(pres: RingPresentation, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(presentation_doc(pres), indent=2)
    lines = [f"ring {pres.label or '(unlabelled)'}"]
    gens = ", ".join(f"{s.name}({s.degree})" for s in pres.generators) or "(none)"
    lines.append(f"generators: {gens}")
    if pres.relations:
        lines.append("relations:")
        lines.extend(f"  {r}" for r in pres.relations)
    else:
        lines.append("relations: (none)")
    return "\n".join(lines)


# -- subcommands ---------------------------------------------------------------


def _job_from_args(args, parser) -> BuiltJob:
    if args.config:
        try:
            with open(args.config) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise ConfigError(args.config, str(exc))
        except json.JSONDecodeError as exc:
            raise ConfigError(args.config, f"invalid JSON: line {exc.lineno} col {exc.colno}")
        return build_job(doc, cutoff=args.cutoff)
    if args.family:
        doc = {"space": {"family": args.family, "k": args.k, "n": args.n, "variant": args.variant}}
        return build_job(doc, cutoff=args.cutoff)
    parser.error("give a catalog FAMILY or --config PATH")


def cmd_present(args, parser) -> int:
    job = _job_from_args(args, parser)
    print(render_presentation(job.ring.presentation, args.format))
    return 0


def cmd_series(args, parser) -> int:
    job = _job_from_args(args, parser)
    n = args.cutoff if args.cutoff is not None else job.ring.cutoff
    if n > LARGE_OUTPUT_CAP and not args.force_large:
        raise ConfigError("cutoff", f"{n} exceeds the cap {LARGE_OUTPUT_CAP}; pass --force-large")
    ts = series_from_ring(job.ring, min(n, job.ring.cutoff))
    if args.format == "structured":
        doc = {
            "label": job.ring.label,
            "cutoff": ts.cutoff,
            "coefficients": list(ts.coefficients),
            "closed_form": None
            if job.series is None
            else [
                {"coeff": t.coeff, "shift": t.shift, "num": list(t.num), "den": list(t.den)}
                for t in job.series.terms
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"poincare series of {job.ring.label or 'ring'} up to degree {ts.cutoff}:")
        print("  " + str(ts))
        if job.series is not None:
            print(f"closed form: {job.series}")
    return 0


def cmd_basis(args, parser) -> int:
    job = _job_from_args(args, parser)
    d = args.degree
    if d > LARGE_OUTPUT_CAP and not args.force_large:
        raise ConfigError("degree", f"{d} exceeds the cap {LARGE_OUTPUT_CAP}; pass --force-large")
    basis = job.ring.degree_basis(d)
    family = job.family.monomials_of_degree(d) if job.family is not None else None
    if args.format == "structured":
        doc = {
            "label": job.ring.label,
            "degree": d,
            "basis": [{"exponents": list(m.exps), "text": str(m)} for m in basis],
            "family": None if family is None else [{"exponents": list(m.exps), "text": str(m)} for m in family],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"degree-{d} basis of {job.ring.label or 'ring'} ({len(basis)} monomials):")
        for m in basis:
            mark = ""
            if job.family is not None:
                mark = "  [family]" if job.family.contains(m) else ""
            print(f"  {m}{mark}")
        if family is not None:
            print(f"characteristic family in degree {d}: {', '.join(str(m) for m in family) or '(empty)'}")
    return 0


def cmd_mul(args, parser) -> int:
    job = _job_from_args(args, parser)
    try:
        a = job.ring.gens.parse(args.a)
        b = job.ring.gens.parse(args.b)
    except ValueError as exc:
        raise ConfigError("element", str(exc)) from exc
    nf = job.ring.multiply(a, b)
    if args.format == "structured":
        print(
            json.dumps(
                {"label": job.ring.label, "a": args.a, "b": args.b, "normal_form": element_doc(nf)},
                indent=2,
            )
        )
    else:
        print(f"({args.a}) * ({args.b}) = {nf}")
    return 0


def cmd_verify(args, parser) -> int:
    from . import verify as verify_mod

    known = ("catalog", "odd-identity", "extensions", "equivariant")
    suites = args.suites
    for s in suites:
        if s not in known:
            raise ConfigError("suite", f"unknown suite {s!r}; known: {', '.join(known)}")
    checks = verify_mod.run_suites(suites, max_n=args.max_n)
    failed = 0
    for line, ok in checks:
        print(("PASS " if ok else "FAIL ") + line)
        failed += 0 if ok else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def cmd_tower(args, parser) -> int:
    job = _job_from_args(args, parser)
    if "tower" not in _peek_config(args, parser):
        raise ConfigError("config", "the tower command needs a config with a 'tower' entry")
    print(render_presentation(job.ring.presentation, args.format))
    return 0


def cmd_pushout(args, parser) -> int:
    job = _job_from_args(args, parser)
    if "pushout" not in _peek_config(args, parser):
        raise ConfigError("config", "the pushout command needs a config with a 'pushout' entry")
    print(render_presentation(job.ring.presentation, args.format))
    return 0


def _peek_config(args, parser) -> dict:
    if not args.config:
        return {}
    with open(args.config) as fh:
        return json.load(fh)


def _add_target_args(sp, with_degree=False, with_elements=False):
    sp.add_argument("family", nargs="?", help="catalog space family")
    sp.add_argument("-k", type=int, default=0)
    sp.add_argument("-n", type=int, default=0)
    sp.add_argument("--variant", default="")
    sp.add_argument("--config", help="path to a JSON job config")
    sp.add_argument("--cutoff", type=int, default=None)
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.add_argument("--force-large", action="store_true")
    if with_degree:
        sp.add_argument("--degree", type=int, required=True)
    if with_elements:
        sp.add_argument("a")
        sp.add_argument("b")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcohom",
        description="presentations, bases and Poincare series of flag-bundle cohomology rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    commands = {
        "present": (cmd_present, "print a ring presentation", {}),
        "series": (cmd_series, "print Poincare series coefficients", {}),
        "basis": (cmd_basis, "print an additive basis in one degree", {"with_degree": True}),
        "mul": (cmd_mul, "multiply two elements and print the normal form", {"with_elements": True}),
        "tower": (cmd_tower, "build a tower config and print its presentation", {}),
        "pushout": (cmd_pushout, "build a pushout config and print its presentation", {}),
    }
    for name, (func, help_text, extra) in commands.items():
        sp = sub.add_parser(name, help=help_text)
        _add_target_args(sp, **extra)
        sp.set_defaults(func=func)

    vp = sub.add_parser("verify", help="run verification suites")
    vp.add_argument("suites", nargs="*", help="catalog | odd-identity | extensions | equivariant")
    vp.add_argument("--max-n", type=int, default=4)
    vp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
