"""Command line front end.

The JSON report goes to stdout; human-readable tables go to stderr.
Exit codes: 0 success (an Undecided verdict included), 1 usage or input
error, 2 violated mathematical precondition.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import linalg
from .cartan import (
    cartan_of,
    check_unimodular,
    injective_dim_vectors,
    projective_dim_vectors,
    require_unimodular,
    tensor_cartan,
)
from .coxeter import coxeter_matrix, form_identity_check, nakayama_check, order, random_pairs
from .errors import InputError, MathError
from .forms import euler_form, find_value_vectors, fixed_isotropic_check, is_positive_definite
from .orbits import DEFAULT_MAX_STEPS, all_injective_orbits, classify, injective_orbit, order_witness_from_orbits
from .quiver import AlgebraSpec, format_spec, parse_spec, tensor_quiver
from .report import (
    Report,
    classification_payload,
    definiteness_payload,
    digest,
    order_payload,
    orbit_payload,
    witness_payload,
)

ASSUMPTION = "n-hereditary (gl.dim <= n): assumed, not verified"


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _table(title: str, rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(x) for x in r] for r in rows]
    width = max((len(c) for r in cells for c in r), default=1)
    body = "\n".join("  " + " ".join(c.rjust(width) for c in r) for r in cells)
    return f"{title}\n{body}\n"


def _load(path: str) -> tuple[AlgebraSpec, bytes]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not UTF-8: {exc.reason}") from None
    return parse_spec(text), data


def _base(cmd: str, data: bytes, spec: AlgebraSpec) -> Report:
    rep = Report(cmd, digest(data))
    rep.payload["name"] = spec.name
    rep.payload["degree_n"] = spec.degree_n
    rep.payload["assumptions"] = [ASSUMPTION]
    return rep


def cmd_cartan(args, out) -> Report:
    spec, data = _load(args.file)
    c = cartan_of(spec)
    rep = _base("cartan", data, spec)
    unimodular = check_unimodular(c)
    rep.payload.update(
        cartan=c.matrix,
        determinant=linalg.determinant(c.matrix),
        unimodular=unimodular,
        projective_dim_vectors=projective_dim_vectors(c),
        injective_dim_vectors=injective_dim_vectors(c),
    )
    out(_table("Cartan matrix (columns = dim P_j)", c.matrix))
    if not unimodular:
        require_unimodular(c)
    return rep


def cmd_coxeter(args, out) -> Report:
    spec, data = _load(args.file)
    c = cartan_of(spec)
    phi = coxeter_matrix(c, spec.degree_n)
    rep = _base("coxeter", data, spec)
    rep.seed = args.seed
    rep.payload.update(
        coxeter=phi.matrix,
        nakayama_check=nakayama_check(c, phi),
        form_identity_check=form_identity_check(c, phi, random_pairs(c.m, 100, args.seed)),
        form_identity_samples=100,
    )
    out(_table(f"Coxeter matrix (n={spec.degree_n})", phi.matrix))
    return rep


def cmd_order(args, out) -> Report:
    spec, data = _load(args.file)
    phi = coxeter_matrix(cartan_of(spec), spec.degree_n)
    res = order(phi)
    rep = _base("order", data, spec)
    rep.payload.update(order_payload(res))
    out(f"Coxeter order: {res.order if res.finite else 'infinite'}\n")
    return rep


def cmd_form(args, out) -> Report:
    spec, data = _load(args.file)
    c = cartan_of(spec)
    e = euler_form(c)
    phi = coxeter_matrix(c, spec.degree_n)
    rep = _base("form", data, spec)
    rep.payload["euler_form"] = e.matrix
    rep.payload["fixed_vectors"] = [
        {"vector": list(v), "q": qv} for v, qv in fixed_isotropic_check(phi, e)
    ]
    out(_table("Euler form E = (C^-1)^t", e.matrix))
    if args.definite:
        d = is_positive_definite(e)
        rep.payload["definiteness"] = definiteness_payload(d)
        out(f"positive definite: {d.positive_definite}\n")
    if args.roots is not None:
        vecs = find_value_vectors(e, args.roots, args.bound)
        rep.payload["roots"] = {"target": args.roots, "bound": args.bound, "vectors": vecs, "count": len(vecs)}
        out(f"{len(vecs)} vectors with q = {args.roots} and |x_i| <= {args.bound}\n")
    return rep


def cmd_orbit(args, out) -> Report:
    spec, data = _load(args.file)
    c = cartan_of(spec)
    phi = coxeter_matrix(c, spec.degree_n)
    if args.injective is None:
        records = all_injective_orbits(c, phi, args.steps)
    else:
        records = [injective_orbit(c, phi, args.injective, args.steps)]
    rep = _base("orbit", data, spec)
    rep.payload.update(steps=args.steps, orbits=[orbit_payload(r) for r in records])
    if records and all(r.landed for r in records) and len(records) == c.m:
        rep.payload["exponent_witness"] = witness_payload(order_witness_from_orbits(records, phi))
    for r in records:
        out(_table(f"orbit of I{r.injective_index}: {r.status.value}", r.vectors))
    return rep


def cmd_classify(args, out) -> Report:
    spec, data = _load(args.file)
    result = classify(spec, args.steps)
    rep = _base("classify", data, spec)
    rep.payload.update(classification_payload(result))
    out(f"verdict: {result.verdict.value}\n")
    for line in result.evidence:
        out(f"  {line}\n")
    return rep


def cmd_tensor(args, out) -> Report:
    spec_a, data_a = _load(args.file_a)
    spec_b, data_b = _load(args.file_b)
    n = spec_a.degree_n + spec_b.degree_n
    name = f"({spec_a.name or args.file_a}) x ({spec_b.name or args.file_b})"
    if spec_a.quiver is not None and spec_b.quiver is not None:
        product = AlgebraSpec(n, quiver=tensor_quiver(spec_a.quiver, spec_b.quiver), name=name)
    else:
        ct = tensor_cartan(cartan_of(spec_a), cartan_of(spec_b))
        product = AlgebraSpec(n, cartan=ct.matrix, name=name)
    text = format_spec(product)
    rep = Report("tensor", digest(data_a + b"\0" + data_b))
    rep.payload.update(
        name=name,
        degree_n=n,
        assumptions=[ASSUMPTION, "degree of the product is the sum of the factor degrees"],
        cartan=tensor_cartan(cartan_of(spec_a), cartan_of(spec_b)).matrix,
    )
    if product.quiver is not None:
        q = product.quiver
        rep.payload.update(vertices=len(q.vertices), arrows=len(q.arrows), relations=len(q.relations))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        rep.payload["out"] = args.out
    else:
        rep.payload["dsl"] = text
    out(text)
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quivercox", description=__doc__.splitlines()[0])
    p.add_argument("-q", "--quiet", action="store_true", help="suppress tables on stderr")
    # SUPPRESS keeps a subcommand from resetting a -q given before it
    common = _Parser(add_help=False)
    common.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress tables on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.set_defaults(func=func)
        return sp

    add("cartan", cmd_cartan, "Cartan matrix and projective/injective dimension vectors").add_argument("file")
    sp = add("coxeter", cmd_coxeter, "Coxeter matrix with self-checks")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0)
    add("order", cmd_order, "exact multiplicative order of the Coxeter matrix").add_argument("file")
    sp = add("form", cmd_form, "Euler form, definiteness and value search")
    sp.add_argument("file")
    sp.add_argument("--definite", action="store_true")
    sp.add_argument("--roots", type=int, metavar="TARGET")
    sp.add_argument("--bound", type=_positive, default=1, metavar="B")
    sp = add("orbit", cmd_orbit, "Coxeter iteration of injective dimension vectors")
    sp.add_argument("file")
    sp.add_argument("--injective", type=_positive, metavar="I")
    sp.add_argument("--steps", type=_positive, default=DEFAULT_MAX_STEPS, metavar="S")
    sp = add("classify", cmd_classify, "decide n-representation-finiteness")
    sp.add_argument("file")
    sp.add_argument("--steps", type=_positive, default=DEFAULT_MAX_STEPS, metavar="S")
    sp = add("tensor", cmd_tensor, "tensor product of two algebras, written as DSL")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--out")
    return p


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout, stderr = sys.stdout, sys.stderr
    command = argv[0] if argv and not argv[0].startswith("-") else "usage"
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        out = (lambda s: None) if args.quiet else stderr.write
        report = args.func(args, out)
        stdout.write(report.to_json())
        return 0
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InputError as exc:
        code, err = 1, exc
    except MathError as exc:
        code, err = 2, exc
    except Exception as exc:  # still report in the structured format
        code, err = 2, exc
    report = Report(command, "", payload={"error": {"type": type(err).__name__, "message": str(err)}})
    report.diagnostics.append(f"{type(err).__name__}: {err}")
    stdout.write(report.to_json())
    stderr.write(f"error: {err}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
