"""Command-line front end.

Exit codes: 0 ok, 2 configuration error, 3 range error, 4 verification
failure.  Set ``TILTCHAR_CACHE_DIR`` to persist computed KL tables as JSON.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import balance as bal
from . import characters as ch
from .affine_weyl import BUILTIN_CARTAN, AlcoveElement, RootDatum, weight_of
from .errors import BalanceError, ConfigError, RangeError
from .hecke import Parity
from .kl import TablePair
from .render import ascii_rows, ascii_trace, latex_blocks, latex_rows
from .verify import sweep

EXIT_OK, EXIT_CONFIG, EXIT_RANGE, EXIT_VERIFY = 0, 2, 3, 4
DEFAULT_MAX_LEN = 6


@dataclass
class JobConfig:
    datum: RootDatum
    max_len: int
    l: int | None
    fmt: str
    alcove: AlcoveElement | None
    args: argparse.Namespace


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--type", dest="type", default=d(None), help=f"built-in root system: {', '.join(BUILTIN_CARTAN)}")
    parser.add_argument("--cartan", default=d(None), help="file with a custom Cartan matrix, one row per line")
    parser.add_argument("--max-len", type=int, default=d(None), help="length bound for tables")
    parser.add_argument("--l", type=int, default=d(None), help="order of the root of unity (adds weight labels)")
    parser.add_argument("--alcove", default=d(None), help='alcove as a generator word, e.g. "0121"; "" or "e" is the bottom alcove')
    parser.add_argument("--parity", default=d("asph"), help="sph or asph")
    parser.add_argument("--format", dest="fmt", choices=("json", "ascii", "latex"), default=d("json"))
    parser.add_argument("--blocks", default=d(None), help="JSON file of abstract parity blocks (balance)")
    parser.add_argument("--outline-blocks", action="store_true", default=d(False), help="draw Weyl blocks in LaTeX output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiltchar", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_options(p, suppress=True)
        return p

    p = add("kl", "dump KL, tilde or inverse polynomials")
    p.add_argument("--kind", choices=("kl", "tilde", "inverse"), default="kl")
    add("tilt", "balanced tilting polynomials t_{B,A}")
    add("weyl", "Weyl-in-simple and tilting-in-Weyl multiplicities")
    add("layers", "graded tilting character")
    p = add("partial", "partial characters of the Weyl filtration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--anchor", default=None, help="second index of n (default: the alcove itself)")
    add("balance", "run the balancing algorithm")
    add("verify", "sweep all invariants up to --max-len")
    return parser


# -- helpers ---------------------------------------------------------------


def _datum(args) -> RootDatum:
    if args.type and args.cartan:
        raise ConfigError("give only one of --type and --cartan")
    if args.cartan:
        return RootDatum.from_file(args.cartan)
    return RootDatum.builtin(args.type or "A1")


def make_config(args) -> JobConfig:
    datum = _datum(args)
    if args.l is not None and args.l < datum.coxeter_number:
        raise ConfigError(f"--l must be at least the Coxeter number {datum.coxeter_number}")
    alcove = datum.alcoves.parse(args.alcove) if args.alcove is not None else None
    max_len = args.max_len
    if max_len is None:
        max_len = alcove.length if alcove is not None else DEFAULT_MAX_LEN
    if max_len < 0:
        raise ConfigError("--max-len must be non-negative")
    if alcove is not None and alcove.length > max_len:
        raise RangeError(f"alcove {alcove} has length {alcove.length} > --max-len {max_len}")
    return JobConfig(datum, max_len, args.l, args.fmt, alcove, args)


def _cache_path(datum: RootDatum, parity: Parity) -> Path | None:
    root = os.environ.get("TILTCHAR_CACHE_DIR")
    if not root:
        return None
    digest = hashlib.sha1(json.dumps(datum.cartan).encode()).hexdigest()[:12]
    return Path(root) / f"{datum.label}-{digest}-{parity.value}.json"


def make_tables(cfg: JobConfig) -> TablePair:
    tables = TablePair(cfg.datum, cfg.max_len)
    for table in (tables.sph, tables.asph):
        path = _cache_path(cfg.datum, table.parity)
        if path and path.exists():
            try:
                table.load(path)
            except (ValueError, KeyError, ConfigError):
                pass
    return tables


def save_tables(tables: TablePair) -> None:
    for table in (tables.sph, tables.asph):
        path = _cache_path(tables.datum, table.parity)
        if path:
            path.parent.mkdir(parents=True, exist_ok=True)
            table.save(path)


def _factor(cfg: JobConfig, x: AlcoveElement, **extra) -> dict:
    out = {"word": x.word_str, **extra}
    if cfg.l is not None:
        out["weight"] = list(weight_of(x, cfg.l))
    return out


def _targets(cfg: JobConfig, tables: TablePair) -> list[AlcoveElement]:
    return [cfg.alcove] if cfg.alcove is not None else tables.elements()


def _emit(cfg: JobConfig, payload, ascii_text: str, latex_text: str | None = None) -> str:
    if cfg.fmt == "json":
        return json.dumps(payload, indent=2)
    if cfg.fmt == "latex" and latex_text is not None:
        return latex_text
    return ascii_text


# -- subcommands -----------------------------------------------------------


def cmd_kl(cfg: JobConfig, tables: TablePair) -> tuple[int, str]:
    parity = Parity.parse(cfg.args.parity)
    table = tables.table(parity)
    kind = cfg.args.kind
    entries = []
    for x in table.elements():
        if kind == "inverse":
            col = table.inverse_column(x)
            for z in sorted(col):
                entries.append({"x": z.word_str, "y": x.word_str, "poly": col[z].to_json()})
            continue
        vec = table.kl_basis(x) if kind == "kl" else table.tilde_basis(x)
        for y in vec.support():
            entries.append({"x": x.word_str, "y": y.word_str, "poly": vec[y].to_json()})
    payload = {"parity": parity.value, "kind": kind, "max_len": cfg.max_len, "entries": entries}
    from .laurent import LaurentPoly

    rows = [f"{e['x']:>12} {e['y']:>12}  {LaurentPoly.from_json(e['poly'])}" for e in entries]
    ascii_text = "\n".join([f"{'x':>12} {'y':>12}  poly", *rows])
    latex = "\n".join(
        ["\\begin{tabular}{llc}", "$x$ & $y$ & polynomial \\\\ \\hline"]
        + [f"{e['x']} & {e['y']} & ${LaurentPoly.from_json(e['poly'])}$ \\\\" for e in entries]
        + ["\\end{tabular}"]
    )
    return EXIT_OK, _emit(cfg, payload, ascii_text, latex)


def cmd_tilt(cfg, tables):
    payload, lines = [], []
    for A in _targets(cfg, tables):
        col = ch.tilting_column(tables, A)
        payload.append({"alcove": A.word_str, "column": [_factor(cfg, B, poly=p.to_json()) for B, p in col.items()]})
        lines += [f"t[{B},{A}] = {p}" for B, p in col.items()]
    return EXIT_OK, _emit(cfg, payload if cfg.alcove is None else payload[0], "\n".join(lines))


def cmd_weyl(cfg, tables):
    payload, lines = [], []
    for A in _targets(cfg, tables):
        simple = ch.weyl_simple_mults(tables, A)
        tilt = ch.tilting_weyl_mults(tables, A)
        payload.append(
            {
                "alcove": A.word_str,
                "weyl_in_simples": [_factor(cfg, B, mult=k) for B, k in sorted(simple.items(), reverse=True)],
                "tilting_in_weyls": [_factor(cfg, B, mult=k) for B, k in sorted(tilt.items(), reverse=True)],
            }
        )
        fmt = lambda d: " + ".join(f"{k}*[{B}]" for B, k in sorted(d.items(), reverse=True))
        lines += [f"Delta({A}) = {fmt(simple)}", f"T({A}) = {fmt(tilt)}"]
    return EXIT_OK, _emit(cfg, payload if cfg.alcove is None else payload[0], "\n".join(lines))


def cmd_layers(cfg, tables):
    payload, text, latex = [], [], []
    for A in _targets(cfg, tables):
        g = ch.tilting_layers(tables, A)
        rows = []
        for row in g.to_json():
            rows.append({"offset": row["offset"], "factors": [
                _factor(cfg, tables.datum.alcoves.parse(f["word"]), mult=f["mult"]) for f in row["factors"]
            ]})
        payload.append({"alcove": A.word_str, "layers": rows})
        counter_rows = [(o, g.layer(o)) for o in g.offsets()]
        text.append(f"T({A}):\n" + ascii_rows(counter_rows, AlcoveElement.sort_key))
        latex.append(latex_rows(counter_rows, AlcoveElement.sort_key))
    return EXIT_OK, _emit(cfg, payload if cfg.alcove is None else payload[0], "\n\n".join(text), "\n\n".join(latex))


def cmd_partial(cfg, tables):
    if cfg.alcove is None:
        raise ConfigError("partial needs --alcove")
    A = cfg.alcove
    order = ch.delta_order(tables, A)
    anchor = tables.datum.alcoves.parse(cfg.args.anchor) if cfg.args.anchor is not None else None
    if not 0 <= cfg.args.k <= len(order):
        raise RangeError(f"--k must be in 0..{len(order)}")
    result = ch.partial_character(tables, A, cfg.args.k, cfg.args.i, anchor)
    payload = {
        "alcove": A.word_str,
        "k": cfg.args.k,
        "i": cfg.args.i,
        "anchor": (anchor or A).word_str,
        "order": [x.word_str for x in order],
        "character": [_factor(cfg, lam, mult=c) for lam, c in result.items()],
    }
    text = "\n".join(f"[{lam}] {c}" for lam, c in result.items()) or "(empty)"
    return EXIT_OK, _emit(cfg, payload, text)


def _balance_payload(state: bal.BalanceState, equal, error) -> dict:
    from .render import label_str

    return {
        "top": label_str(state.top_label) if state else None,
        "trace": [{"label": label_str(lab), "head_offset": off} for lab, off in state.trace] if state else [],
        "layers": [
            {"offset": o, "factors": [{"word": label_str(lab), "mult": m} for lab, m in layer.items()]}
            for o, layer in state.rows()
        ] if state else [],
        "equal": equal,
        "error": str(error) if error else None,
    }


def load_blocks(path) -> tuple[dict, list, str]:
    try:
        data = json.loads(Path(path).read_text())
        raw, top = data["blocks"], str(data["top"])
        order = [str(x) for x in data.get("order", [])] or None
        blocks = {
            str(lab): bal.ParityBlock.from_lists(str(lab), [[str(x) for x in row] for row in rows])
            for lab, rows in raw.items()
        }
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot read blocks file: {exc}") from None
    return blocks, order, top


def cmd_balance(cfg, tables):
    outline = cfg.args.outline_blocks
    if cfg.args.blocks:
        blocks, order, top = load_blocks(cfg.args.blocks)
        rank = {lab: -i for i, lab in enumerate(order)} if order else None
        key = (lambda lab: rank.get(lab, -len(rank))) if rank else (lambda lab: lab)
        try:
            state = bal.balance_run(blocks, top, order=order)
        except BalanceError as err:
            return EXIT_VERIFY, _emit(cfg, _balance_payload(err.state, None, err), f"balance failed: {err}")
        equal, error = None, None
    else:
        A = cfg.alcove if cfg.alcove is not None else tables.datum.alcoves.identity
        report = bal.balance_from_alcove(tables, A)
        state, equal, error = report.state, report.equal, report.error
        blocks = bal.alcove_blocks(tables, A)
        key = AlcoveElement.sort_key
        if state is None or error is not None:
            return EXIT_VERIFY, _emit(cfg, _balance_payload(state, False, error), f"balance failed: {error}")
    text = [f"trace: {ascii_trace(state)}", ascii_rows(state.rows(), key)]
    if equal is not None:
        text.append(f"equal to t-layers: {'yes' if equal else 'NO'}")
    latex = latex_blocks(state, blocks, key) if outline else latex_rows(state.rows(), key)
    code = EXIT_OK if equal in (True, None) else EXIT_VERIFY
    return code, _emit(cfg, _balance_payload(state, equal, error), "\n".join(text), latex)


def cmd_verify(cfg, tables):
    results = list(sweep(tables))
    ok = all(r.ok for r in results)
    first = next((r for r in results if not r.ok), None)
    payload = {
        "type": tables.datum.label,
        "max_len": cfg.max_len,
        "properties": [{"name": r.name, "passed": r.passed, "failed": r.failed} for r in results],
        "counterexample": first.counterexamples[0] if first else None,
        "ok": ok,
    }
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.passed} passed, {r.failed} failed" for r in results]
    if first:
        lines.append("first counterexample: " + json.dumps(first.counterexamples[0]))
    return (EXIT_OK if ok else EXIT_VERIFY), _emit(cfg, payload, "\n".join(lines))


COMMANDS = {
    "kl": cmd_kl,
    "tilt": cmd_tilt,
    "weyl": cmd_weyl,
    "layers": cmd_layers,
    "partial": cmd_partial,
    "balance": cmd_balance,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        tables = make_tables(cfg)
        code, out = COMMANDS[args.command](cfg, tables)
        save_tables(tables)
    except ConfigError as exc:
        print(f"tiltchar: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RangeError as exc:
        print(f"tiltchar: range error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
