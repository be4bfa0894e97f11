"""Command-line driver: ``zetatails {constants,bound,verify,threshold,optimize}``.

Exit status: 0 when every requested check passes, 1 when one fails, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import reference
from .errors import ConfigError, ZetaTailsError
from .interval import precision
from .rounding import fmt

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

CONSTANT_FAMILIES = ("thm31", "thm43", "thm45", "thm46", "headline", "all")
BOUND_FAMILIES = ("thm31", "thm46", "meansquare", "headline-meansquare", "headline-tail-first",
                  "headline-tail-second")
VERIFY_FAMILIES = ("meansquare", "thm31", "thm46")
THRESHOLD_FAMILIES = ("headline", "refined", "tables")


@dataclass
class RunConfig:
    command: str
    sigmas: list = field(default_factory=list)
    ts: list = field(default_factory=list)
    families: list = field(default_factory=list)
    fmt: str = "text"
    precision: int = 96
    polynomial: str | None = None
    out: str | None = None
    options: dict = field(default_factory=dict)


# -- parsing -------------------------------------------------------------------

def _fraction(text: str, what: str) -> Fraction:
    """Accepts 0.75, 3/4, 1e37 and integer powers such as 10^37 or 10**37."""
    text = text.strip().replace("**", "^")
    try:
        if "^" in text:
            base, _, expo = text.partition("^")
            return Fraction(base) ** int(expo)
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{what}: cannot read {text!r} as a number") from None


def _split(value: str) -> list:
    return [x for x in (p.strip() for p in value.replace(";", ",").split(",")) if x]


def _read_config_file(path: str) -> dict:
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}: expected a [section] header, got {exc.line.strip()!r}") from None
    except configparser.ParsingError as exc:
        lines = ", ".join(f"line {ln}: {txt.strip()}" for ln, txt in exc.errors)
        raise ConfigError(f"{path}: parse error ({lines})") from None
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    out = {}
    if cp.has_section("run"):
        for key, value in cp["run"].items():
            if key not in ("sigma", "t", "family", "format", "precision", "out", "polynomial",
                           "tmin", "tmax", "n", "step", "rounds"):
                raise ConfigError(f"{path}: [run] unknown field {key!r}")
            out[key] = value
    if cp.has_section("polynomial"):
        out["polynomial"] = path
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    file_cfg = _read_config_file(args.config) if args.config else {}
    sigmas = args.sigma or _split(file_cfg.get("sigma", ""))
    ts = args.t or _split(file_cfg.get("t", ""))
    families = args.family or _split(file_cfg.get("family", ""))
    fmt_ = args.format or file_cfg.get("format", "text")
    if fmt_ not in ("text", "json"):
        raise ConfigError(f"format: expected text or json, got {fmt_!r}")
    prec_text = str(args.precision) if args.precision else file_cfg.get("precision", "96")
    try:
        prec = int(prec_text)
    except ValueError:
        raise ConfigError(f"precision: expected an integer number of bits, got {prec_text!r}") from None
    if not 53 <= prec <= 4096:
        raise ConfigError("precision: must lie between 53 and 4096 bits")
    cfg = RunConfig(
        command=args.command,
        sigmas=[_fraction(s, "sigma") for s in sigmas],
        ts=[_fraction(t, "t") for t in ts],
        families=families,
        fmt=fmt_,
        precision=prec,
        polynomial=file_cfg.get("polynomial"),
        out=args.out or file_cfg.get("out"),
    )
    for key in ("tmin", "tmax", "n", "rounds"):
        v = getattr(args, key, None)
        v = v if v is not None else file_cfg.get(key)
        if v is not None:
            try:
                cfg.options[key] = int(v)
            except ValueError:
                raise ConfigError(f"{key}: expected an integer, got {v!r}") from None
    step = getattr(args, "step", None) or file_cfg.get("step")
    if step is not None:
        cfg.options["step"] = _fraction(str(step), "step")
    if getattr(args, "reference_form", False):
        cfg.options["reference_form"] = True
    allowed = {"constants": CONSTANT_FAMILIES, "bound": BOUND_FAMILIES, "verify": VERIFY_FAMILIES,
               "threshold": THRESHOLD_FAMILIES, "optimize": ()}[cfg.command]
    for fam in cfg.families:
        if fam not in allowed:
            raise ConfigError(f"family: {fam!r} is not one of {', '.join(allowed) or '(none)'}")
    return cfg


# -- commands ------------------------------------------------------------------

def _const_value(v):
    if isinstance(v, tuple):
        return [fmt(x, 5) for x in v]
    return fmt(v, 5)


def _check_rows(title, computed, expected):
    return {"title": title, "rows": [
        {"name": k, "computed": _const_value(got) if got is not None else None,
         "published": list(exp) if isinstance(exp, tuple) else exp, "status": "PASS" if ok else "FAIL"}
        for k, got, exp, ok in reference.compare(computed, expected)]}


def cmd_constants(cfg: RunConfig):
    from .meanvalue import assemble_thm_4_3, assemble_thm_4_5, assemble_thm_4_6, simplify_to_headline
    from .smoothing import first_approach_constants, leading_coefficient_certified

    fams = cfg.families or ["all"]
    if "all" in fams:
        fams = list(CONSTANT_FAMILIES[:-1])
    sections = []
    for fam in fams:
        if fam == "thm31":
            sec = _check_rows("smoothing tail constants", first_approach_constants().published,
                              reference.SMOOTHING)
            ok = leading_coefficient_certified()
            sec["rows"].append({"name": "2 beta r / d_min <= 3/5", "computed": "certified" if ok else "not certified",
                                "published": None, "status": "PASS" if ok else "FAIL"})
        elif fam == "thm43":
            pub = assemble_thm_4_3().published
            sec = {"title": "mean-square constants, 1/2 <= sigma <= 1",
                   "rows": [{"name": k, "computed": _const_value(v), "published": None, "status": "INFO"}
                            for k, v in pub.items()]}
        elif fam == "thm45":
            sec = _check_rows("mean-square constants, 0 <= sigma < 1/2", assemble_thm_4_5().published,
                              reference.MEAN_VALUE_LOW)
        elif fam == "thm46":
            sec = _check_rows("mean-value tail constants", assemble_thm_4_6().published, reference.TAIL_SECOND)
        else:
            pub = simplify_to_headline().published
            sec = _check_rows("simplified tail constants", pub, reference.HEADLINE_TAIL)
            sec["rows"] += _check_rows("", pub, reference.HEADLINE_MEAN_SQUARE)["rows"]
            sec["title"] = "simplified constants"
        sections.append(sec)
    failed = any(r["status"] == "FAIL" for s in sections for r in s["rows"])
    if cfg.fmt == "json":
        text = json.dumps({"sections": sections}, indent=2)
    else:
        lines = []
        for s in sections:
            lines.append(f"# {s['title']}")
            for r in s["rows"]:
                comp = r["computed"] if not isinstance(r["computed"], list) else "(" + ", ".join(r["computed"]) + ")"
                pub = r["published"] if not isinstance(r["published"], list) else "(" + ", ".join(r["published"]) + ")"
                tail = "" if r["published"] is None else f"  published {pub}"
                lines.append(f"{r['status']:4} {r['name']} = {comp}{tail}")
        lines.append("rounding: upper-bound constants rounded up, subtracted constants rounded down")
        text = "\n".join(lines)
    return text, EXIT_FAIL if failed else EXIT_OK


def _bound_report(family, sigma, T):
    from .meanvalue import headline_mean_square, headline_tail_bound, mean_square_bounds, tail_bound_second_approach
    from .smoothing import tail_bound_first_approach

    if family == "thm31":
        return tail_bound_first_approach(sigma, T)
    if family == "thm46":
        return tail_bound_second_approach(sigma, T).report()
    if family == "meansquare":
        return mean_square_bounds(sigma, T)
    if family == "headline-meansquare":
        return headline_mean_square(sigma, T)
    return headline_tail_bound(sigma, T, form=family.rsplit("-", 1)[1])


def cmd_bound(cfg: RunConfig):
    if not cfg.sigmas or not cfg.ts:
        raise ConfigError("bound: need at least one --sigma and one --t")
    fams = cfg.families or ["thm46"]
    grid = [(f, s, t) for f in fams for s in cfg.sigmas for t in cfg.ts]
    prec = cfg.precision

    def run(item):
        f, s, t = item
        with precision(prec):
            try:
                return _bound_report(f, s, t), None
            except ZetaTailsError as exc:
                return None, f"skipped family={f} sigma={s} T={t}: {exc}"

    with ThreadPoolExecutor(max_workers=4) as ex:
        results = list(ex.map(run, grid))
    if cfg.fmt == "json":
        text = json.dumps([r.to_dict() if r else {"notice": note} for r, note in results], indent=2)
    else:
        text = "\n\n".join(r.to_text() if r else f"notice: {note}" for r, note in results)
    return text, EXIT_OK


def cmd_verify(cfg: RunConfig):
    from .verify import DEFAULT_GRID, check_bound_containment

    if cfg.sigmas or cfg.ts or cfg.families:
        fams = cfg.families or ["meansquare"]
        sig = cfg.sigmas or [Fraction(1, 2)]
        ts = cfg.ts or [Fraction(50)]
        grid = [(s, t, f) for f in fams for s in sig for t in ts]
    else:
        grid = list(DEFAULT_GRID)
    prec = cfg.precision

    def run(item):
        with precision(prec):
            try:
                return check_bound_containment(*item), None
            except ZetaTailsError as exc:
                return None, f"skipped sigma={item[0]} T={item[1]} family={item[2]}: {exc}"

    with ThreadPoolExecutor(max_workers=2) as ex:
        results = list(ex.map(run, grid))
    failed = any(r is not None and not r.passed for r, _ in results)
    if cfg.fmt == "json":
        payload = []
        for r, note in results:
            if r is None:
                payload.append({"notice": note})
                continue
            q = r.quadrature.enclosure
            payload.append({
                "family": r.family, "sigma": str(r.sigma), "T": str(r.T), "passed": r.passed,
                "quadrature": [repr(float(q.lo)), repr(float(q.hi))], "panels": r.quadrature.panels,
                "lower": None if r.lower is None else repr(float(r.lower.lo)), "upper": repr(float(r.upper.hi)),
            })
        text = json.dumps(payload, indent=2)
    else:
        text = "\n".join(r.line() if r else f"notice: {note}" for r, note in results)
    return text, EXIT_FAIL if failed else EXIT_OK


def cmd_threshold(cfg: RunConfig):
    from . import thresholds as th

    ref_form = cfg.options.get("reference_form", False)
    fams = cfg.families or (["headline"] if cfg.sigmas else ["tables"])
    out, records = [], []
    for fam in fams:
        if fam == "tables":
            strip = th.table_strip(reference_form=ref_form)
            low = th.table_low()
            half = th.half_line_threshold(bits=cfg.precision)
            out.append("# 1/2 < sigma < 1: sigma, headline pair, sigma, refined pair")
            out.append(th.render_table(strip))
            out.append("# 0 < sigma < 1/2: sigma, headline pair, refined pair")
            out.append(th.render_table(low))
            out.append(f"# sigma = 1/2: {half}")
            records += [{"sigma": str(a), "pair": "headline", "threshold": str(x)} for a, x, _, _ in strip]
            records += [{"sigma": str(b), "pair": "refined", "threshold": str(y)} for _, _, b, y in strip]
            records += [{"sigma": str(s), "pair": p, "threshold": str(v)}
                        for s, x, y in low for p, v in (("headline", x), ("refined", y))]
            records.append({"sigma": "1/2", "pair": "headline", "threshold": str(half)})
            continue
        if not cfg.sigmas:
            raise ConfigError("threshold: need --sigma for a single query")
        for s in cfg.sigmas:
            q = th.ThresholdQuery(s, fam, cfg.options.get("tmin", 100), cfg.options.get("tmax", 10 ** 6))
            try:
                r = th.find_threshold(q, reference_form=ref_form, bits=cfg.precision)
            except ZetaTailsError as exc:
                out.append(f"notice: skipped sigma={s}: {exc}")
                continue
            note = f" (unresolved at {len(r.indeterminate)} points)" if r.indeterminate else ""
            out.append(f"sigma={float(s):g} pair={fam} threshold={r}{note}")
            records.append({"sigma": str(s), "pair": fam, "threshold": str(r),
                            "unresolved": [str(x) for x in r.indeterminate]})
    text = json.dumps(records, indent=2) if cfg.fmt == "json" else "\n".join(out)
    return text, EXIT_OK


def cmd_optimize(cfg: RunConfig):
    from .smoothing import (DEFAULT_POLYNOMIAL, leading_objective, optimize_coefficients, polynomial_to_config,
                            read_polynomial)

    seed = read_polynomial(cfg.polynomial) if cfg.polynomial else DEFAULT_POLYNOMIAL
    n = cfg.options.get("n", seed.n)
    step = cfg.options.get("step", Fraction(1, 10 ** 7))
    rounds = cfg.options.get("rounds", 200)
    g = optimize_coefficients(n, seed=seed, step=step, max_rounds=rounds)
    body = polynomial_to_config(g)
    if cfg.fmt == "json":
        text = json.dumps({"n": g.n, "a": [str(x) for x in g.a], "r": str(g.r),
                           "objective": leading_objective(g)}, indent=2)
    else:
        text = body.rstrip("\n") + f"\n# objective 2 beta r / d_min = {leading_objective(g):.8f}"
    return text, EXIT_OK


COMMANDS = {"constants": cmd_constants, "bound": cmd_bound, "verify": cmd_verify,
            "threshold": cmd_threshold, "optimize": cmd_optimize}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", action="append", help="sigma value (repeatable; 3/4 or 0.75)")
    common.add_argument("--t", action="append", help="T value (repeatable)")
    common.add_argument("--family", action="append", help="bound family or constant set (repeatable)")
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--precision", type=int, help="working precision in bits (default 96)")
    common.add_argument("--config", help="configparser file with a [run] and optional [polynomial] section")
    common.add_argument("--out", help="write output to this file")
    p = argparse.ArgumentParser(prog="zetatails", description="Explicit mean-square and tail bounds for zeta.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("constants", parents=[common], help="derive and check the constant sets")
    sub.add_parser("bound", parents=[common], help="evaluate a bound at (sigma, T)")
    sub.add_parser("verify", parents=[common], help="compare bounds with certified quadrature")
    th = sub.add_parser("threshold", parents=[common], help="crossover points between tail bounds")
    th.add_argument("--tmin", type=int)
    th.add_argument("--tmax", type=int)
    th.add_argument("--reference-form", action="store_true",
                    help="use N(sigma) instead of N(1-sigma) in the refined pair for 1/2 < sigma < 1")
    op = sub.add_parser("optimize", parents=[common], help="search smoothing polynomial coefficients")
    op.add_argument("--n", type=int)
    op.add_argument("--step")
    op.add_argument("--rounds", type=int)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        with precision(cfg.precision):
            text, code = COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
