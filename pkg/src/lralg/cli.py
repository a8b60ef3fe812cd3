"""Command line interface.

Exit codes: 0 when the requested property holds or the construction
succeeds, 1 when the mathematics says no (invalid algebra, failed
identity, unmet structural requirement), 2 for unusable input (parse
errors, bad parameters, missing data).  All indices in output are
1-based; output is deterministic for a given input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .catalog import known_lr, known_lr_names, named_algebra
from .construct import complete_any, two_generator_lr
from .errors import (
    FileFormatError,
    InternalConsistencyError,
    LrAlgError,
    PreconditionError,
    UnknownFixtureError,
)
from .io import emit_file, parse_file
from .lie import series, is_two_step_solvable, validate_lie
from .linalg import Matrix
from .lr import check_lr, check_lemma14, sample_triples


def _frac_str(x: Fraction) -> str:
    return str(x)


def _defect_json(defect):
    if isinstance(defect, Matrix):
        return [[_frac_str(x) for x in row] for row in defect.row_list()]
    return [_frac_str(x) for x in defect]


def _defect_text(defect) -> str:
    if isinstance(defect, Matrix):
        rows = defect.row_list()
        return "[" + "; ".join("(" + ", ".join(map(_frac_str, r)) + ")" for r in rows) + "]"
    return "(" + ", ".join(map(_frac_str, defect)) + ")"


def _violation_json(v) -> dict:
    return {
        "identity": v.identity,
        "indices": [i + 1 for i in v.indices],
        "defect": _defect_json(v.defect),
    }


def _violation_text(v) -> str:
    if v.identity.endswith(" (sampled)"):
        where = f"sample {v.indices[0] + 1}"
    else:
        where = "(" + ", ".join(str(i + 1) for i in v.indices) + ")"
    return f"{v.identity} at {where}: defect {_defect_text(v.defect)}"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _print_violations(violations) -> None:
    print(f"violations: {len(violations)}")
    for v in violations:
        print(f"  {_violation_text(v)}")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(path: str):
    return parse_file(path)


def _load_with_product(path: str):
    g, p = parse_file(path)
    if p is None:
        raise FileFormatError(f"{path}: missing 'product'")
    return g, p


def _parse_coords(text: str, dim: int, flag: str):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != dim:
        raise FileFormatError(f"{flag}: expected {dim} comma-separated rationals")
    try:
        return tuple(Fraction(s) for s in parts)
    except (ValueError, ZeroDivisionError):
        raise FileFormatError(f"{flag}: bad rational in {text!r}") from None


def cmd_validate(args) -> int:
    g, _ = _load(args.file)
    ok, violations = validate_lie(g)
    if args.json:
        _emit_json(
            {
                "dim": g.dim,
                "valid": ok,
                "violations": [_violation_json(v) for v in violations],
            }
        )
    else:
        print(f"dim: {g.dim}")
        print(f"valid: {_yn(ok)}")
        if violations:
            _print_violations(violations)
    return 0 if ok else 1


def cmd_analyze(args) -> int:
    g, _ = _load(args.file)
    rep = series(g)
    lower = [s.dim for s in rep.lower_central]
    derived = [s.dim for s in rep.derived]
    two_step = is_two_step_solvable(g)
    if args.json:
        _emit_json(
            {
                "dim": g.dim,
                "lower_central_dims": lower,
                "g_infinity_dim": rep.g_infinity.dim,
                "derived_dims": derived,
                "nilpotent": rep.nilpotent,
                "solvable": rep.solvable,
                "solvable_class": rep.solvable_class,
                "two_step_solvable": two_step,
            }
        )
    else:
        print(f"dim: {g.dim}")
        print("lower central dims: " + ", ".join(map(str, lower)))
        print(f"g-infinity dim: {rep.g_infinity.dim}")
        print("derived dims: " + ", ".join(map(str, derived)))
        print(f"nilpotent: {_yn(rep.nilpotent)}")
        if rep.solvable:
            print(f"solvable: yes (class {rep.solvable_class})")
        else:
            print("solvable: no")
        print(f"two-step solvable: {_yn(two_step)}")
    return 0


def cmd_check_lr(args) -> int:
    g, p = _load_with_product(args.file)
    rep = check_lr(g, p)
    holds = rep.is_lr and rep.is_compatible
    if args.require_complete:
        holds = holds and rep.is_complete
    if args.json:
        _emit_json(
            {
                "dim": g.dim,
                "lr": rep.is_lr,
                "compatible": rep.is_compatible,
                "complete": rep.is_complete,
                "holds": holds,
                "violations": [_violation_json(v) for v in rep.violations],
            }
        )
    else:
        print(f"dim: {g.dim}")
        print(f"lr: {_yn(rep.is_lr)}")
        print(f"compatible: {_yn(rep.is_compatible)}")
        print(f"complete: {_yn(rep.is_complete)}")
        _print_violations(rep.violations)
    return 0 if holds else 1


def cmd_complete(args) -> int:
    g, p = _load_with_product(args.file)
    cert = complete_any(g, p)
    changed = cert.completed != cert.original
    ginf_dim = series(g).g_infinity.dim
    emit_file(args.output, g, cert.completed)
    if args.json:
        _emit_json(
            {
                "dim": g.dim,
                "g_infinity_dim": ginf_dim,
                "nilpotent_component_dim": cert.fitting.v_n.dim,
                "invertible_component_dim": cert.fitting.v_0.dim,
                "containment": cert.containment_witness.holds,
                "changed": changed,
                "output": args.output,
            }
        )
    else:
        print(f"dim: {g.dim}")
        print(f"g-infinity dim: {ginf_dim}")
        print(f"nilpotent component dim: {cert.fitting.v_n.dim}")
        print(f"invertible component dim: {cert.fitting.v_0.dim}")
        print(f"containment: {_yn(cert.containment_witness.holds)}")
        print(f"changed: {_yn(changed)}")
        print(f"wrote: {args.output}")
    return 0


def cmd_two_gen(args) -> int:
    g, _ = _load(args.file)
    x = _parse_coords(args.x, g.dim, "--x")
    y = _parse_coords(args.y, g.dim, "--y")
    p = two_generator_lr(g, x, y)
    rep = check_lr(g, p)
    out_product = p
    if args.complete and not rep.is_complete:
        out_product = complete_any(g, p).completed
    emit_file(args.output, g, out_product)
    if args.json:
        _emit_json(
            {
                "dim": g.dim,
                "complete": rep.is_complete,
                "completion_applied": out_product is not p,
                "output": args.output,
            }
        )
    else:
        print(f"dim: {g.dim}")
        print(f"complete: {_yn(rep.is_complete)}")
        print(f"completion applied: {_yn(out_product is not p)}")
        print(f"wrote: {args.output}")
    return 0


def cmd_catalog(args) -> int:
    name = args.name
    product = None
    if name in known_lr_names():
        if args.param is not None:
            print(f"error: fixture {name} takes no parameter", file=sys.stderr)
            return 2
        g, product = known_lr(name)
    else:
        try:
            g = named_algebra(name, args.param)
        except UnknownFixtureError as exc:
            print(f"error: unknown name {exc}", file=sys.stderr)
            return 2
        except PreconditionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    emit_file(args.output, g, product)
    if args.json:
        _emit_json(
            {
                "name": name,
                "dim": g.dim,
                "has_product": product is not None,
                "output": args.output,
            }
        )
    else:
        print(f"name: {name}")
        print(f"dim: {g.dim}")
        print(f"product: {_yn(product is not None)}")
        print(f"wrote: {args.output}")
    return 0


def cmd_lemma14(args) -> int:
    g, p = _load_with_product(args.file)
    g.ensure_valid()
    if args.samples < 0:
        raise FileFormatError("--samples: must be non-negative")
    triples = sample_triples(p.dim, args.samples, args.seed)
    violations = check_lemma14(p, triples)
    holds = not violations
    if args.json:
        _emit_json(
            {
                "dim": p.dim,
                "samples": args.samples,
                "seed": args.seed,
                "holds": holds,
                "violations": [_violation_json(v) for v in violations],
            }
        )
    else:
        print(f"dim: {p.dim}")
        print(f"samples: {args.samples}")
        print(f"seed: {args.seed}")
        print(f"holds: {_yn(holds)}")
        _print_violations(violations)
    return 0 if holds else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lralg",
        description="Decide, verify and construct LR-structures on Lie algebras "
        "given by rational structure constants.",
    )
    parser.add_argument("--version", action="version", version=f"lralg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("validate", "check antisymmetry and the Jacobi identity")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = add("analyze", "series dimensions and structural flags")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_analyze)

    sp = add("check-lr", "verify the LR identities, compatibility and completeness")
    sp.add_argument("file")
    sp.add_argument(
        "--require-complete",
        action="store_true",
        help="also require every right multiplication to be nilpotent",
    )
    sp.set_defaults(func=cmd_check_lr)

    sp = add("complete", "turn an LR-structure into a complete one")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True, help="where to write the result")
    sp.set_defaults(func=cmd_complete)

    sp = add("two-gen", "build an LR-structure from two generators")
    sp.add_argument("file")
    sp.add_argument("--x", required=True, help="first generator, comma-separated rationals")
    sp.add_argument("--y", required=True, help="second generator, comma-separated rationals")
    sp.add_argument("-o", "--output", required=True, help="where to write the result")
    sp.add_argument(
        "--complete",
        action="store_true",
        help="complete the product before writing it out",
    )
    sp.set_defaults(func=cmd_two_gen)

    sp = add("catalog", "write a named algebra or fixture to a file")
    sp.add_argument("name", help="fixture or family name; see the documentation")
    sp.add_argument("param", nargs="?", help="family parameter, when one is needed")
    sp.add_argument("-o", "--output", required=True, help="where to write the result")
    sp.set_defaults(func=cmd_catalog)

    sp = add("lemma14", "verify the six derived operator identities")
    sp.add_argument("file")
    sp.add_argument("--samples", type=int, default=25, help="number of random triples")
    sp.add_argument("--seed", type=int, default=0, help="seed for the random triples")
    sp.set_defaults(func=cmd_lemma14)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownFixtureError as exc:
        print(f"error: unknown name {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except LrAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
