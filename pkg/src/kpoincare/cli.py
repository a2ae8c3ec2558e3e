"""Command line interface: ``kpoincare <command> ...``.

Settings are resolved with the precedence

    command-line flag  >  environment variable  >  config file  >  default

Environment variables are ``KPOINCARE_<SETTING>`` (for example
``KPOINCARE_N=3`` or ``KPOINCARE_FORMAT=json``).  The config file is given
by ``--config PATH`` or ``KPOINCARE_CONFIG`` and holds ``key = value``
lines with the same setting names (dashes or underscores).

Exit codes: 0 success or all checks pass, 1 usage or expression error,
2 a check failed, 3 a check was inconclusive.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys

from . import __version__
from .parser import Context, ExpressionError, evaluate, parse, parse_latex, render

SETTINGS = {
    # name: (type, default)
    "algebra": (str, "poincare"),
    "n": (int, 4),
    "degree": (int, None),
    "max_degree": (int, None),
    "seed": (int, 1994),
    "format": (str, "text"),
    "samples_per_component": (int, 3),
    "samples": (int, None),
    "timings": (bool, False),
}
CHOICES = {"algebra": ("poincare", "minkowski"), "format": ("text", "json", "latex")}

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _convert(name: str, raw):
    kind = SETTINGS[name][0]
    if raw is None or not isinstance(raw, str):
        return raw
    raw = raw.strip()
    if kind is bool:
        if raw.lower() in ("1", "true", "yes", "on"):
            return True
        if raw.lower() in ("0", "false", "no", "off", ""):
            return False
        raise UsageError(f"{name}: expected a boolean, got {raw!r}")
    if kind is int:
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{name}: expected an integer, got {raw!r}") from None
    if name in CHOICES and raw not in CHOICES[name]:
        raise UsageError(f"{name}: expected one of {', '.join(CHOICES[name])}, got {raw!r}")
    return raw


def read_config_file(path: str) -> dict:
    cp = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_string("[kpoincare]\n" + fh.read())
    except OSError as e:
        raise UsageError(f"cannot read config file {path}: {e.strerror}") from None
    except configparser.Error as e:
        raise UsageError(f"malformed config file {path}: {e}") from None
    out = {}
    for key, value in cp["kpoincare"].items():
        name = key.replace("-", "_")
        if name not in SETTINGS:
            raise UsageError(f"unknown setting {key!r} in {path}")
        out[name] = _convert(name, value)
    return out


def resolve_settings(args: argparse.Namespace, environ=None) -> dict:
    environ = os.environ if environ is None else environ
    settings = {k: d for k, (_, d) in SETTINGS.items()}
    path = getattr(args, "config", None) or environ.get("KPOINCARE_CONFIG")
    if path:
        settings.update(read_config_file(path))
    for name in SETTINGS:
        env = environ.get(f"KPOINCARE_{name.upper()}")
        if env is not None:
            settings[name] = _convert(name, env)
    for name in SETTINGS:
        v = getattr(args, name, None)
        if v is not None:
            settings[name] = v
    if settings["n"] < 2:
        raise UsageError("n must be at least 2")
    return settings


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--algebra", choices=CHOICES["algebra"], default=S, help="expression context (default poincare)")
    p.add_argument("--n", type=int, default=S, help="dimension (default 4)")
    p.add_argument("--degree", type=int, default=S, help="verification degree of a suite")
    p.add_argument("--max-degree", dest="max_degree", type=int, default=S, help="filtration degree for ideal checks")
    p.add_argument("--seed", type=int, default=S, help="seed of every random choice (default 1994)")
    p.add_argument("--format", choices=CHOICES["format"], default=S, help="output format (default text)")
    p.add_argument("--samples-per-component", dest="samples_per_component", type=int, default=S,
                   help="Lorentz sample points per connected component (default 3)")
    p.add_argument("--samples", type=int, default=S, help="random samples per randomized check")
    p.add_argument("--timings", action="store_const", const=True, default=S, help="include wall times in reports")
    p.add_argument("--config", default=S, help="key = value settings file")
    p.add_argument("--latex-input", dest="latex_input", action="store_true", default=S,
                   help="read expressions as LaTeX")
    return p


def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITE_NAMES

    common = _common()
    ap = argparse.ArgumentParser(
        prog="kpoincare",
        description="Exact symbolic computations on the kappa-Poincare group and kappa-Minkowski space.",
        parents=[common],
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def cmd(name, help_, nargs=1):
        p = sub.add_parser(name, help=help_, parents=[common])
        if nargs == 1:
            p.add_argument("expr", help="expression")
        elif nargs == 2:
            p.add_argument("expr", help="first expression")
            p.add_argument("expr2", help="second expression")
        return p

    cmd("normalize", "normal form of an expression")
    cmd("comm", "commutator [a, b]", 2)
    cmd("delta", "coproduct")
    cmd("antipode", "antipode S")
    cmd("counit", "counit eps")
    cmd("star", "star involution")
    cmd("ad", "adjoint action ad(a)")
    cmd("d", "exterior derivative of an element or a one-form")
    cmd("wedge", "wedge product of two one-form expressions", 2)
    cmd("limit", "classical limit 1/kappa -> 0 of an expression")
    p = sub.add_parser("chi", help="quantum Lie algebra fields", parents=[common])
    p.add_argument("action", choices=("apply",))
    p.add_argument("field", help="chi_{01}, chi_2, chi, lambda_3, l_1 or m_2")
    p.add_argument("expr", help="kappa-Poincare expression")
    p = sub.add_parser("verify", help="run a verification suite", parents=[common])
    p.add_argument("suite", choices=SUITE_NAMES, metavar="SUITE", help=", ".join(SUITE_NAMES))
    sub.add_parser("repl", help="interactive session", parents=[common])
    return ap


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _context(s: dict) -> Context:
    return Context(s["algebra"], s["n"])


def _parse(text: str, latex: bool):
    return parse_latex(text) if latex else parse(text)


def _classical_limit(value):
    from .algebra import AlgebraElement, TensorElement
    from .forms import Form
    from .scalars import Scalar

    def lim(c: Scalar) -> Scalar:
        g = c.classical_limit()
        return Scalar.from_gauss(g.re, g.im)

    def clean(d):
        return {k: v for k, v in d.items() if v}

    if isinstance(value, Scalar):
        return lim(value)
    if isinstance(value, AlgebraElement):
        return AlgebraElement(value.alg, clean({m: lim(c) for m, c in value.terms.items()}))
    if isinstance(value, TensorElement):
        return TensorElement(value.algs, clean({m: lim(c) for m, c in value.terms.items()}))
    if isinstance(value, Form):
        out = value._new({})
        for sym, coeff in value.terms.items():
            out = out + value._new({sym: _classical_limit(coeff)})
        return out
    raise UsageError(f"no classical limit for {type(value).__name__}")


FIELD_ALIASES = {"l": "boost", "m": "rotation"}


def parse_field(text: str):
    """Functional named by ``text``."""
    from . import qla

    t = text.replace("{", "").replace("}", "").replace("\\", "").strip()
    name, _, idx = t.partition("_")
    digits = [int(c) for c in idx] if idx.isdigit() else None
    if idx and digits is None:
        raise UsageError(f"bad field index in {text!r}")
    if any(v > 3 for v in digits or ()):
        raise UsageError(f"field index out of range 0..3 in {text!r}")
    if name == "chi":
        if not digits:
            return qla.CHI
        if len(digits) == 1:
            return qla.chi1(digits[0])
        if len(digits) == 2 and digits[0] != digits[1]:
            return qla.chi2(*digits)
    elif name == "lambda" and digits and len(digits) == 1:
        return qla.lam(digits[0])
    elif name in ("l", "m") and digits and len(digits) == 1 and digits[0] in (1, 2, 3):
        return qla.boost(digits[0]) if name == "l" else qla.rotation(digits[0])
    raise UsageError(f"unknown field {text!r}; use chi_{{ab}}, chi_m, chi, lambda_m, l_i or m_i")


def run_expression_command(command: str, exprs: list[str], s: dict, latex_input: bool = False):
    ctx = _context(s)
    trees = [_parse(e, latex_input) for e in exprs]
    if command == "normalize":
        return evaluate(trees[0], ctx)
    if command == "limit":
        return _classical_limit(evaluate(trees[0], ctx))
    from .parser import Call

    name = {"comm": "comm", "delta": "Delta", "antipode": "S", "counit": "eps", "star": "star",
            "ad": "ad", "d": "d", "wedge": "wedge"}[command]
    return evaluate(Call(name, tuple(trees)), ctx)


def emit(value, command: str, exprs: list[str], s: dict, out=None) -> None:
    out = out or sys.stdout
    fmt = s["format"]
    if fmt == "json":
        payload = {
            "tool_version": __version__,
            "command": command,
            "input": exprs,
            "config": {"algebra": s["algebra"], "n": s["n"]},
            "result": str(value),
            "latex": render(value, "latex"),
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(render(value, fmt) + "\n")


def run_verify(suite: str, s: dict, out=None) -> int:
    out = out or sys.stdout
    from .suites import Config, run_suites

    cfg = Config(
        algebra=s["algebra"], n=s["n"], degree=s["degree"], max_degree=s["max_degree"], seed=s["seed"],
        samples_per_component=s["samples_per_component"], samples=s["samples"], timings=s["timings"],
    )
    report = run_suites(suite, cfg)
    if s["format"] == "json":
        out.write(report.to_json() + "\n")
    elif s["format"] == "latex":
        out.write(report.to_latex() + "\n")
    else:
        out.write(report.to_text() + "\n")
    return report.exit_code()


REPL_HELP = """\
Enter an expression to normalize it, or one of
  comm A ; B | delta A | antipode A | counit A | star A | ad A | d A
  wedge A ; B | limit A | chi FIELD A | verify SUITE
  set KEY VALUE   (algebra, n, format, seed, ...)   show   help   quit
Expressions use the text grammar, e.g. comm(x[0], x[1]) or d(L[0,1]*x[2])."""


def repl(s: dict, latex_input: bool = False, stdin=None, out=None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    interactive = stdin.isatty()
    while True:
        if interactive:
            out.write("kpoincare> ")
            out.flush()
        line = stdin.readline()
        if not line:
            return EXIT_OK
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, _, rest = line.partition(" ")
        try:
            if word in ("quit", "exit"):
                return EXIT_OK
            if word == "help":
                out.write(REPL_HELP + "\n")
            elif word == "show":
                out.write(" ".join(f"{k}={v}" for k, v in s.items()) + "\n")
            elif word == "set":
                key, _, value = rest.strip().partition(" ")
                key = key.replace("-", "_")
                if key not in SETTINGS:
                    raise UsageError(f"unknown setting {key!r}")
                s[key] = _convert(key, value)
            elif word == "verify":
                run_verify(rest.strip(), s, out)
            elif word == "chi":
                field_, _, expr = rest.strip().partition(" ")
                if field_ == "apply":
                    field_, _, expr = expr.strip().partition(" ")
                emit(_apply_chi(field_, expr, s, latex_input), "chi", [expr], s, out)
            elif word in ("comm", "wedge"):
                exprs = [e.strip() for e in rest.split(";")]
                if len(exprs) != 2:
                    raise UsageError(f"{word} needs two expressions separated by ';'")
                emit(run_expression_command(word, exprs, s, latex_input), word, exprs, s, out)
            elif word in ("delta", "antipode", "counit", "star", "ad", "d", "limit", "normalize"):
                emit(run_expression_command(word, [rest], s, latex_input), word, [rest], s, out)
            else:
                emit(run_expression_command("normalize", [line], s, latex_input), "normalize", [line], s, out)
        except (ExpressionError, UsageError, KeyError) as e:
            out.write(f"error: {e}\n")


def _apply_chi(field_text: str, expr: str, s: dict, latex_input: bool):
    if s["algebra"] != "poincare" or s["n"] != 4:
        raise UsageError("the quantum Lie algebra is defined on the kappa-Poincare algebra with n = 4")
    phi = parse_field(field_text)
    return phi(evaluate(_parse(expr, latex_input), _context(s)))


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        s = resolve_settings(args)
        latex_input = bool(getattr(args, "latex_input", False))
        from .lorentz import configure

        configure(s["samples_per_component"], s["seed"])
        cmd = args.command
        if cmd == "verify":
            return run_verify(args.suite, s)
        if cmd == "repl":
            return repl(s, latex_input)
        if cmd == "chi":
            emit(_apply_chi(args.field, args.expr, s, latex_input), "chi", [args.expr], s)
            return EXIT_OK
        exprs = [args.expr] + ([args.expr2] if hasattr(args, "expr2") else [])
        emit(run_expression_command(cmd, exprs, s, latex_input), cmd, exprs, s)
        return EXIT_OK
    except (ExpressionError, UsageError) as e:
        print(f"kpoincare: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as e:
        print(f"kpoincare: error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
