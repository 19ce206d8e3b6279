"""``schur-kit``: batch command-line front end.

Exit codes: 0 success, 2 parse or validation error, 3 resource limit, 1 integrity failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import cache
from .characters import character_table, dim_gl, dim_sym_det, dim_sym_hook, kronecker, mn_character
from .config import FORMATS, CliConfig, load_config
from .errors import IntegrityError, ResourceLimitError, ValidationError
from .lr import lr_coefficient, lr_tableaux, pieri, reading_word, restrict_branch, tensor_expand
from .partitions import Partition
from .resolutions import (
    betti_csv,
    betti_text,
    efw_plan,
    exactness_report,
    koszul_complex,
    plan_betti_table,
    plan_from_degree_sequence,
    validate_plan,
)
from .tca import PolynomialTcaSpec, tca_decompose
from .vcat import (
    BiVObject,
    VObject,
    coaddition,
    comultiplication,
    compose,
    compose_transpose,
    enhanced_hilbert,
    higher_derivative,
    hilbert_series,
    matchings,
    parse_object,
    pointwise_tensor,
    transpose_object,
)

EXIT_OK, EXIT_INTEGRITY, EXIT_VALIDATION, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class Output:
    """One result, renderable in every output format."""

    data: object
    rows: list[list] = field(default_factory=list)
    text: str = ""

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, ensure_ascii=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(self.rows)
            return buf.getvalue()
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _scalar(value: object, name: str = "value") -> Output:
    return Output(value, [[name], [value]], str(value))


def _fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _decomposition(v: VObject) -> Output:
    rows = [["partition", "multiplicity"]] + [[str(lam), c] for lam, c in v.items()]
    if v.truncation_degree is not None:
        rows.append(["truncation_degree", v.truncation_degree])
    return Output(v.to_json_dict(), rows, str(v))


def _bi(b: BiVObject) -> Output:
    rows = [["left", "right", "multiplicity"]] + [[str(a), str(c), m] for (a, c), m in b.items()]
    text = "\n".join(f"{m} x (S{a} (x) S{c})" for (a, c), m in b.items()) or "0"
    return Output(b.to_json_dict(), rows, text)


def _decomp_dict(d: dict[Partition, int]) -> Output:
    return _decomposition(VObject(d))


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValidationError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _object(text: str) -> VObject:
    try:
        return parse_object(text)
    except (ValidationError, ValueError, KeyError) as exc:
        raise argparse.ArgumentTypeError(f"bad object {text!r}: {exc}") from exc


def _degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.strip("()[] ").split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad degree sequence {text!r}") from exc


# ---------------------------------------------------------------- handlers

def cmd_lr(a, cfg: CliConfig) -> Output:
    if a.tableaux:
        fillings = lr_tableaux(a.nu, a.lam, a.mu)
        words = [reading_word(f) for f in fillings]
        data = {"coefficient": len(fillings), "fillings": [[list(r) for r in f] for f in fillings], "reading_words": words}
        return Output(data, [["reading_word"]] + [[w] for w in words], "\n".join([str(len(fillings))] + words))
    return _scalar(lr_coefficient(a.nu, a.lam, a.mu), "coefficient")


def cmd_tensor(a, cfg: CliConfig) -> Output:
    return _decomp_dict(tensor_expand(a.lam, a.mu))


def cmd_kron(a, cfg: CliConfig) -> Output:
    if a.lam.size != a.mu.size:
        raise ValidationError("Kronecker products need partitions of the same size")
    if a.nu is not None:
        return _scalar(kronecker(a.lam, a.mu, a.nu), "coefficient")
    return _decomposition(pointwise_tensor(VObject({a.lam: 1}), VObject({a.mu: 1})))


def cmd_pieri(a, cfg: CliConfig) -> Output:
    if a.m < 0:
        raise ValidationError("strip size must be non-negative")
    return _decomp_dict(pieri(a.lam, a.m, a.orientation))


def cmd_branch(a, cfg: CliConfig) -> Output:
    return _bi(BiVObject(restrict_branch(a.nu, a.n, a.m)))


def cmd_dim(a, cfg: CliConfig) -> Output:
    if (a.sym is None) == (a.gl is None):
        raise ValidationError("give exactly one of --sym or --gl")
    if a.sym is not None:
        f = dim_sym_det if a.method == "det" else dim_sym_hook
        return _scalar(f(a.sym), "dimension")
    if a.rank is None:
        raise ValidationError("--gl needs --rank")
    return _scalar(dim_gl(a.gl, a.rank), "dimension")


def cmd_char(a, cfg: CliConfig) -> Output:
    return _scalar(mn_character(a.lam, a.rho), "character")


def cmd_table(a, cfg: CliConfig) -> Output:
    t = character_table(a.n, cfg.max_table_n)
    data = {
        "n": t.n,
        "classes": [list(r) for r in t.classes],
        "rows": [{"irrep": list(lam), "values": t.row(lam)} for lam in t.irreps],
    }
    rows = list(csv.reader(io.StringIO(t.to_csv())))
    width = max(len(c) for r in rows for c in r)
    text = "\n".join(" ".join(c.rjust(width) for c in r) for r in rows)
    return Output(data, rows, text)


def _max_degree(a, cfg: CliConfig) -> int:
    d = cfg.max_degree_default if a.max_degree is None else a.max_degree
    if d < 0:
        raise ValidationError("max degree must be non-negative")
    return d


def cmd_plethysm(a, cfg: CliConfig) -> Output:
    d = _max_degree(a, cfg)
    if a.transpose:
        return _decomposition(compose_transpose(a.outer, a.inner, d))
    return _decomposition(compose(a.outer, a.inner, d, allow_constant=a.allow_constant))


def cmd_derive(a, cfg: CliConfig) -> Output:
    return _decomposition(higher_derivative(a.nu, a.object))


def cmd_coadd(a, cfg: CliConfig) -> Output:
    return _bi(coaddition(a.object))


def cmd_comult(a, cfg: CliConfig) -> Output:
    return _bi(comultiplication(a.object))


def cmd_transpose(a, cfg: CliConfig) -> Output:
    return _decomposition(transpose_object(a.object))


def cmd_hilbert(a, cfg: CliConfig) -> Output:
    coeffs = hilbert_series(a.object, a.order)
    rows = [["degree", "coefficient"]] + [[n, _fraction(c)] for n, c in enumerate(coeffs)]
    text = " + ".join(f"{_fraction(c)} t^{n}" for n, c in enumerate(coeffs) if c) or "0"
    return Output([_fraction(c) for c in coeffs], rows, text)


def cmd_ehilbert(a, cfg: CliConfig) -> Output:
    h = enhanced_hilbert(a.object, a.order)
    data = [{"class": list(rho), "coefficient": _fraction(c)} for rho, c in h.items()]
    rows = [["class", "coefficient"]] + [[str(rho), _fraction(c)] for rho, c in h.items()]
    text = " + ".join(f"{_fraction(c)} t^{rho}" for rho, c in h.items()) or "0"
    return Output(data, rows, text)


def cmd_tca(a, cfg: CliConfig) -> Output:
    if (a.generators is None) == (a.u is None):
        raise ValidationError("give exactly one of --generators or --u")
    spec = PolynomialTcaSpec.sym_u1(a.u) if a.u is not None else PolynomialTcaSpec(a.generators)
    return _decomposition(tca_decompose(spec, _max_degree(a, cfg), generic=a.generic))


def _plan(a):
    if a.degrees is not None:
        if a.alpha is not None or a.beta is not None:
            raise ValidationError("give either --degrees or --alpha/--beta/--n-rows")
        return plan_from_degree_sequence(a.degrees)
    if a.alpha is None or a.beta is None or a.n_rows is None:
        raise ValidationError("need --alpha, --beta and --n-rows (or --degrees)")
    return efw_plan(a.alpha, a.beta, a.n_rows)


def cmd_efw(a, cfg: CliConfig) -> Output:
    p = _plan(a)
    report = validate_plan(p)
    data = p.to_json_dict()
    data["valid"] = report.ok
    data["checks"] = report.checks
    rows = [["i", "degree", "shape"]] + [[i, p.d[i], str(s)] for i, s in enumerate(p.shapes)]
    text = "\n".join(
        [f"alpha={p.alpha} beta={p.beta} n_rows={p.n_rows}", f"e={list(p.e)} d={list(p.d.degrees)}"]
        + [f"F_{i}: S{s} (x) A(-{p.d[i]})" for i, s in enumerate(p.shapes)]
        + [f"valid: {'yes' if report.ok else 'no'}"]
    )
    return Output(data, rows, text)


def cmd_betti(a, cfg: CliConfig) -> Output:
    if a.rank < 0:
        raise ValidationError("rank must be non-negative")
    table = plan_betti_table(_plan(a), a.rank)
    data = [{"index": i, "degree": d, "betti": b} for i, (d, b) in enumerate(table)]
    rows = list(csv.reader(io.StringIO(betti_csv(table))))
    return Output(data, rows, betti_text(table))


def cmd_koszul(a, cfg: CliConfig) -> Output:
    report = exactness_report(koszul_complex(a.rank, a.max_degree, jobs=a.jobs))
    rows = [["index", "degree", "dimension"]] + [[i, D, v] for (i, D), v in sorted(report.homology.items())]
    return Output(report.to_json_dict(), rows, report.summary())


def cmd_matchings(a, cfg: CliConfig) -> Output:
    return _decomposition(matchings(a.n))


# ---------------------------------------------------------------- parser

def _formats(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format (default json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur-kit",
        description="Partition combinatorics, Schur functor decompositions and resolutions.",
        epilog="Partitions are written [5,3,2], (5,3,1^3) or [] ; objects as '2*[2,1] + [3]'.",
    )
    parser.add_argument("--format", choices=FORMATS, default=None, help="output format (default json)")
    parser.add_argument("--config", default=None, help="config file (default: $SCHURKIT_CONFIG)")
    parser.add_argument("--batch", default=None, metavar="FILE",
                        help="run one subcommand per line of FILE ('-' for stdin); blank and # lines skipped")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for --batch")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name: str, handler: Callable, help_: str, desc: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_, description=desc)
        _formats(p)
        p.set_defaults(handler=handler)
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient",
            "c^nu_{lambda,mu}: number of semistandard fillings of nu/lambda with content mu whose "
            "reverse reading word is a lattice word. Symmetric in lambda and mu; zero unless "
            "|nu| = |lambda| + |mu| and lambda is inside nu.")
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--tableaux", action="store_true", help="list the fillings and their reading words")

    p = add("tensor", cmd_tensor, "decompose S_lambda (x) S_mu",
            "Full Littlewood-Richardson expansion nu -> c^nu_{lambda,mu}, ordered by degree then reverse-lex.")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)

    p = add("kron", cmd_kron, "Kronecker coefficient or pointwise tensor",
            "g_{lambda,mu,nu}: multiplicity of M_nu in M_lambda (x) M_mu for partitions of the same n. "
            "Without --nu, prints the whole decomposition.")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, default=None)

    p = add("pieri", cmd_pieri, "Pieri rule",
            "S_lambda (x) Sym^m (horizontal strips) or (x) wedge^m (vertical strips); multiplicity free.")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--orientation", choices=("horizontal", "vertical"), default="horizontal")

    p = add("branch", cmd_branch, "restriction to S_n x S_m",
            "Restriction of M_nu to S_n x S_m: (lambda, mu) with multiplicity c^nu_{lambda,mu}. "
            "Without --n/--m, every split is listed.")
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)

    p = add("dim", cmd_dim, "dimensions of irreducibles",
            "--sym: dimension of M_lambda (hook-length or determinantal formula). "
            "--gl with --rank: dimension of S_lambda(C^rank) (hook-content formula; 0 if too many rows).")
    p.add_argument("--sym", type=_partition, default=None)
    p.add_argument("--gl", type=_partition, default=None)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--method", choices=("hook", "det"), default="hook")

    p = add("char", cmd_char, "symmetric group character value",
            "chi_lambda(rho) by the Murnaghan-Nakayama rule; |lambda| must equal |rho|.")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--class", dest="rho", type=_partition, required=True)

    p = add("table", cmd_table, "character table of S_n",
            "Rows are irreducibles and columns classes, both in reverse-lex order. "
            "n above the configured max_table_n exits with code 3.")
    p.add_argument("--n", type=int, required=True)

    p = add("plethysm", cmd_plethysm, "composition W o V",
            "Plethysm of polynomial functors, truncated at --max-degree (default from config). "
            "V may not have a degree-0 part unless --allow-constant and V is finite. "
            "--transpose returns (W o V)^T by the parity rule.")
    p.add_argument("--outer", type=_object, required=True)
    p.add_argument("--inner", type=_object, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--allow-constant", action="store_true")
    p.add_argument("--transpose", action="store_true")

    p = add("derive", cmd_derive, "Schur derivative D_nu",
            "D_nu(S_lambda) = sum_mu c^lambda_{mu,nu} S_mu; --nu defaults to [1] (the Schur derivative D).")
    p.add_argument("--object", type=_object, required=True)
    p.add_argument("--nu", type=_partition, default=Partition([1]))

    p = add("coadd", cmd_coadd, "co-addition",
            "S_lambda -> sum c^lambda_{mu,nu} S_mu (x) S_nu in the two-variable category.")
    p.add_argument("--object", type=_object, required=True)

    p = add("comult", cmd_comult, "co-multiplication",
            "S_lambda -> sum g_{lambda,mu,nu} S_mu (x) S_nu (Kronecker multiplicities).")
    p.add_argument("--object", type=_object, required=True)

    p = add("transpose", cmd_transpose, "transpose functor", "S_lambda -> S_lambda^T termwise.")
    p.add_argument("--object", type=_object, required=True)

    p = add("hilbert", cmd_hilbert, "Hilbert series",
            "Coefficients dim(V_n)/n! of t^n for n <= --order, as exact fractions.")
    p.add_argument("--object", type=_object, required=True)
    p.add_argument("--order", type=int, required=True)

    p = add("ehilbert", cmd_ehilbert, "enhanced Hilbert series",
            "Coefficient of t^rho: trace of the class rho on V divided by prod m_i(rho)!, for |rho| <= --order.")
    p.add_argument("--object", type=_object, required=True)
    p.add_argument("--order", type=int, required=True)

    p = add("tca-decompose", cmd_tca, "decompose a polynomial tca",
            "Sym(F) through --max-degree. --u N takes F = C^N (x) C<1> (Cauchy decomposition); "
            "--generators takes any finite F without degree-0 part. --generic forces plethysm.")
    p.add_argument("--generators", type=_object, default=None)
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--generic", action="store_true")

    def plan_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--alpha", type=_partition, default=None)
        p.add_argument("--beta", type=_partition, default=None)
        p.add_argument("--n-rows", type=int, default=None)
        p.add_argument("--degrees", type=_degrees, default=None, help="degree sequence, e.g. 0,2,4")

    p = add("efw", cmd_efw, "equivariant pure resolution plan",
            "Build the plan from (alpha, beta, n_rows) or from a degree sequence: e_i, d_i, the shapes "
            "alpha(d,i), and the validity report (horizontal strips, unique Pieri map, no map two steps down).")
    plan_args(p)

    p = add("betti", cmd_betti, "Betti table of a pure resolution plan",
            "(d_i, dim S_{alpha(d,i)}(C^rank)) per homological index; rows index i, columns internal degree.")
    plan_args(p)
    p.add_argument("--rank", type=int, required=True)

    p = add("koszul-check", cmd_koszul, "exactness of the Koszul complex",
            "Builds the Koszul complex over a polynomial ring in --rank variables in internal degrees "
            "<= --max-degree and reports all nonzero homology by exact rank computation.")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="threads over internal degrees")

    p = add("matchings", cmd_matchings, "perfect matchings representation",
            "sum over lambda |- n of S_{2 lambda}: the permutation representation on perfect matchings of 2n points.")
    p.add_argument("--n", type=int, required=True)

    return parser


# ---------------------------------------------------------------- driver

def _execute(args: argparse.Namespace, cfg: CliConfig, fmt: str) -> tuple[int, str, str]:
    try:
        out = args.handler(args, cfg)
        return EXIT_OK, out.render(fmt), ""
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, "", f"schur-kit: resource limit: {exc}\n"
    except IntegrityError as exc:
        return EXIT_INTEGRITY, "", f"schur-kit: integrity error: {exc}\n"
    except (ValidationError, ValueError) as exc:
        return EXIT_VALIDATION, "", f"schur-kit: error: {exc}\n"


def _parse(parser: argparse.ArgumentParser, argv: Sequence[str]) -> tuple[argparse.Namespace | None, int, str]:
    err = io.StringIO()
    old = sys.stderr
    sys.stderr = err
    try:
        return parser.parse_args(list(argv)), EXIT_OK, ""
    except SystemExit as exc:
        return None, int(exc.code or 0), err.getvalue()
    finally:
        sys.stderr = old


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if any(a in ("-h", "--help") for a in argv):
        parser.parse_args(argv)  # prints help and exits 0
    args, code, msg = _parse(parser, argv)
    if args is None:
        stderr.write(msg)
        return code
    try:
        cfg = load_config(args.config)
    except ValidationError as exc:
        stderr.write(f"schur-kit: error: {exc}\n")
        return EXIT_VALIDATION
    cache.set_cache_size(cfg.cache_size)
    top_fmt = args.format or cfg.output_format

    if args.batch is not None:
        if args.command is not None:
            stderr.write("schur-kit: error: --batch cannot be combined with a subcommand\n")
            return EXIT_VALIDATION
        if args.jobs < 1:
            stderr.write("schur-kit: error: --jobs must be >= 1\n")
            return EXIT_VALIDATION
        return _run_batch(parser, args.batch, cfg, top_fmt, args.jobs, stdout, stderr)

    if args.command is None:
        parser.print_usage(stderr)
        stderr.write("schur-kit: error: a subcommand is required\n")
        return EXIT_VALIDATION
    code, out, err = _execute(args, cfg, getattr(args, "format", None) or top_fmt)
    stdout.write(out)
    stderr.write(err)
    return code


def _run_batch(parser, path: str, cfg: CliConfig, fmt: str, jobs: int, stdout, stderr) -> int:
    try:
        if path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(path, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
    except OSError as exc:
        stderr.write(f"schur-kit: error: cannot read batch file: {exc}\n")
        return EXIT_VALIDATION
    queries = [(n, line) for n, line in enumerate(lines, start=1) if line.strip() and not line.lstrip().startswith("#")]

    def one(item: tuple[int, str]) -> tuple[int, str, str]:
        n, _ = item
        args, code, msg = parsed[n]
        if args is None:
            return code or EXIT_VALIDATION, "", f"line {n}: {msg}"
        if args.command is None:
            return EXIT_VALIDATION, "", f"line {n}: missing subcommand\n"
        code, out, err = _execute(args, cfg, getattr(args, "format", None) or fmt)
        return code, out, (f"line {n}: {err}" if err else "")

    # parsing swaps sys.stderr, so it stays on this thread
    parsed = {}
    for n, line in queries:
        try:
            parsed[n] = _parse(parser, shlex.split(line))
        except ValueError as exc:
            parsed[n] = (None, EXIT_VALIDATION, f"{exc}\n")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(one, queries))
    else:
        results = [one(q) for q in queries]
    worst = EXIT_OK
    for code, out, err in results:
        stdout.write(out)
        stderr.write(err)
        worst = max(worst, code)
    return worst


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
