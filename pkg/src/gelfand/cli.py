"""Command-line front end: listings, matrices, verification suites, exports.

Exit codes: 0 on success, 1 when a verification or identity check fails,
2 on usage errors (including requests beyond the size caps).  All payload
output goes to stdout, diagnostics to stderr.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import model_hecke, model_sn, perm, rsk, typeb
from .errors import CapacityError, InternalConsistencyError
from .perm import Partition
from .report import Report

_CAPS = {
    "involutions": 9,
    "matrix_sn": 8,
    "matrix_hecke": 8,
    "matrix_typeb": 5,
    "poset": 8,
    "verify_sn": 7,
    "verify_sn_slow": 8,
    "verify_hecke": 6,
    "verify_typeb": 4,
    "verify_typeb_slow": 5,
    "verify_rsk": 8,
    "characters_sn": 7,
    "characters_hecke": 6,
    "characters_lambda": 5,
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    mu: Partition | None = None
    lam: Partition | None = None
    fmt: str = "text"
    kind: str | None = None
    scope: str | None = None
    generator: int | None = None
    element: tuple[int, ...] | None = None
    seed: int = 0
    slow: bool = False


def _cap(name: str) -> int:
    default = _CAPS[name]
    raised = os.environ.get("GELFAND_CAP")
    if raised is not None:
        try:
            return max(default, int(raised))
        except ValueError:
            raise UsageError(f"GELFAND_CAP must be an integer, got {raised!r}")
    return default


def _require_cap(n: int, name: str, what: str) -> None:
    cap = _cap(name)
    if n > cap:
        raise UsageError(f"{what} is capped at n={cap} (got n={n}); set GELFAND_CAP to raise")


def _parse_partition(text: str, n: int, flag: str) -> Partition:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} must be comma-separated integers, got {text!r}")
    if any(x < 1 for x in parts):
        raise UsageError(f"{flag} parts must be positive, got {text!r}")
    if sum(parts) != n:
        raise UsageError(f"{flag}={text} does not sum to n={n}")
    if not perm.is_partition(parts):
        print(f"warning: sorting {flag}={text} into weakly decreasing order", file=sys.stderr)
        parts = tuple(sorted(parts, reverse=True))
    return parts


def _parse_element(text: str, n: int, signed: bool) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--element must be comma-separated integers, got {text!r}")
    if len(vals) != n:
        raise UsageError(f"--element has {len(vals)} entries, expected n={n}")
    if signed:
        if not typeb.is_signed_window(vals):
            raise UsageError(f"--element {text} is not a signed window")
    elif not perm.is_window(vals):
        raise UsageError(f"--element {text} is not a window of 1..{n}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfand",
        description="Exact involution models for S_n, its Hecke algebra, and B_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
        p.add_argument("--n", type=int, required=True, help="rank of the group")
        p.add_argument("--format", dest="fmt", choices=formats, default=default)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--slow", action="store_true", help="raise the slow-sweep caps")

    p = sub.add_parser("involutions", help="list the involution basis")
    common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("matrix", help="emit one representation matrix")
    common(p, ("json", "text"), "json")
    p.add_argument("--kind", choices=("sn", "hecke", "typeb"), required=True)
    p.add_argument("--generator", type=int, default=None)
    p.add_argument("--element", type=str, default=None)
    p.add_argument("--mu", type=str, default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, ("text", "json"), "text")
    p.add_argument("--scope", choices=("sn", "hecke", "rsk", "typeb", "all"), required=True)

    p = sub.add_parser("characters", help="character table with independent cross-checks")
    common(p, ("text", "json", "csv"), "text")
    p.add_argument("--kind", choices=("sn", "hecke"), required=True)
    p.add_argument("--mu", type=str, default=None)
    p.add_argument("--lambda", dest="lam", type=str, default=None)

    p = sub.add_parser("poset", help="DOT export of the involutive weak order")
    common(p, ("dot",), "dot")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    mu = _parse_partition(args.mu, args.n, "--mu") if getattr(args, "mu", None) else None
    lam = _parse_partition(args.lam, args.n, "--lambda") if getattr(args, "lam", None) else None
    element = None
    if getattr(args, "element", None):
        element = _parse_element(args.element, args.n, signed=args.kind == "typeb")
    return RunConfig(
        command=args.command,
        n=args.n,
        mu=mu,
        lam=lam,
        fmt=args.fmt,
        kind=getattr(args, "kind", None),
        scope=getattr(args, "scope", None),
        generator=getattr(args, "generator", None),
        element=element,
        seed=args.seed,
        slow=args.slow,
    )


def _emit_table(fmt: str, header: list[str], rows: list[list[str]], json_rows: list[dict]) -> None:
    if fmt == "json":
        print(json.dumps(json_rows, indent=2, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [
            max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
            for c in range(len(header))
        ]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for r in rows:
            print("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())


def cmd_involutions(cfg: RunConfig) -> int:
    _require_cap(cfg.n, "involutions", "involution listing")
    header = ["index", "window", "cycles", "length", "descents", "pairs"]
    rows = []
    json_rows = []
    for idx, w in enumerate(perm.enumerate_involutions(cfg.n)):
        pairs = perm.involution_pairs(w)
        descents = sorted(perm.descent_set(w))
        lh = model_hecke.involutive_length(w)
        rows.append(
            [
                str(idx),
                ",".join(map(str, w)),
                perm.cycle_notation(w),
                str(lh),
                " ".join(map(str, descents)) or "-",
                "".join(f"({a},{b})" for a, b in pairs) or "-",
            ]
        )
        json_rows.append(
            {
                "index": idx,
                "window": list(w),
                "cycles": perm.cycle_notation(w),
                "length": lh,
                "descents": descents,
                "pairs": [list(p) for p in pairs],
            }
        )
    _emit_table(cfg.fmt, header, rows, json_rows)
    return 0


def _matrix_for_config(cfg: RunConfig):
    n = cfg.n
    given = [x for x in (cfg.generator, cfg.element, cfg.mu) if x is not None]
    if cfg.kind == "sn":
        _require_cap(n, "matrix_sn", "sn matrices")
        if len(given) != 1 or cfg.mu is not None:
            raise UsageError("matrix --kind sn needs exactly one of --generator/--element")
        basis = model_sn.model_basis(n)
        p = perm.generator(n, cfg.generator) if cfg.generator is not None else cfg.element
        return model_sn.rho_matrix(p, basis).to_poly_matrix()
    if cfg.kind == "hecke":
        _require_cap(n, "matrix_hecke", "hecke matrices")
        if len(given) != 1 or cfg.element is not None:
            raise UsageError("matrix --kind hecke needs exactly one of --generator/--mu")
        basis = model_sn.model_basis(n)
        if cfg.generator is not None:
            if not 1 <= cfg.generator <= n - 1:
                raise UsageError(f"--generator must be in 1..{n - 1}")
            return model_hecke.rho_q_generator(cfg.generator, basis)
        return model_hecke.rho_q_of_word(model_hecke.t_mu_word(cfg.mu), basis)
    _require_cap(n, "matrix_typeb", "typeb matrices")
    if len(given) != 1 or cfg.mu is not None:
        raise UsageError("matrix --kind typeb needs exactly one of --generator/--element")
    basis = typeb.b_model_basis(n)
    if cfg.generator is not None:
        if not 0 <= cfg.generator <= n - 1:
            raise UsageError(f"--generator must be in 0..{n - 1}")
        return typeb.rho_b_generator(cfg.generator, basis).to_poly_matrix()
    return typeb.rho_b_of_element(cfg.element, basis).to_poly_matrix()


def cmd_matrix(cfg: RunConfig) -> int:
    if cfg.kind in ("sn", "hecke") and cfg.generator is not None:
        if not 1 <= cfg.generator <= cfg.n - 1:
            raise UsageError(f"--generator must be in 1..{cfg.n - 1}")
    mat = _matrix_for_config(cfg)
    if cfg.fmt == "json":
        print(mat.to_json())
    else:
        print(f"dim {mat.dim}")
        for (r, c) in sorted(mat.entries):
            print(f"({r},{c}) {mat.entries[(r, c)]}")
    return 0


def _verify_reports(cfg: RunConfig) -> list[Report]:
    scope = cfg.scope
    n = cfg.n
    reports = []
    if scope in ("sn", "all"):
        cap = _cap("verify_sn_slow" if cfg.slow else "verify_sn")
        _require_cap(n if scope == "sn" else min(n, cap), "verify_sn_slow" if cfg.slow else "verify_sn", "sn verification")
        reports.append(model_sn.verify_sn_model(min(n, cap) if scope == "all" else n, seed=cfg.seed, cap=cap))
    if scope in ("hecke", "all"):
        cap = _cap("verify_hecke")
        _require_cap(n if scope == "hecke" else min(n, cap), "verify_hecke", "hecke verification")
        reports.append(model_hecke.verify_hecke_model(min(n, cap) if scope == "all" else n, cap=cap))
    if scope in ("rsk", "all"):
        cap = _cap("verify_rsk")
        _require_cap(n if scope == "rsk" else min(n, cap), "verify_rsk", "rsk verification")
        reports.append(rsk.verify_rsk(min(n, cap) if scope == "all" else n))
    if scope in ("typeb", "all"):
        cap = _cap("verify_typeb_slow" if cfg.slow else "verify_typeb")
        _require_cap(n if scope == "typeb" else min(n, cap), "verify_typeb_slow" if cfg.slow else "verify_typeb", "typeb verification")
        reports.append(typeb.verify_b_model(min(n, cap) if scope == "all" else n, cap=cap))
    return reports


def cmd_verify(cfg: RunConfig) -> int:
    reports = _verify_reports(cfg)
    if cfg.fmt == "json":
        payload = [r.as_dict() for r in reports]
        print(json.dumps(payload if len(payload) > 1 else payload[0], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.text())
    return 0 if all(r.passed for r in reports) else 1


def _sn_character_rows(cfg: RunConfig):
    basis = model_sn.model_basis(cfg.n)
    rows, json_rows, ok = [], [], True
    classes = perm.conjugacy_class_reps(cfg.n)
    if cfg.mu is not None:
        classes = [(ct, rep) for ct, rep in classes if ct == cfg.mu]
    for ct, rep in classes:
        tr = model_sn.rho_character(rep, basis)
        brute = perm.square_roots_count(rep)
        formula = model_sn.fs_count_formula(perm.multiplicities(ct))
        match = tr == brute == formula
        ok = ok and match
        ct_str = ",".join(map(str, ct))
        rows.append([ct_str, str(tr), str(brute), str(formula), "ok" if match else "MISMATCH"])
        json_rows.append(
            {
                "class": list(ct),
                "trace": tr,
                "square_roots": brute,
                "formula": formula,
                "match": match,
            }
        )
    return ["class", "trace", "square_roots", "formula", "match"], rows, json_rows, ok


def _hecke_character_rows(cfg: RunConfig):
    basis = model_sn.model_basis(cfg.n)
    mus = list(perm.partitions(cfg.n))
    if cfg.mu is not None:
        mus = [mu for mu in mus if mu == cfg.mu]
    rows, json_rows, ok = [], [], True
    if cfg.lam is not None:
        for mu in mus:
            val = rsk.irreducible_hecke_character(cfg.lam, mu)
            at1 = val.evaluate(1)
            oracle = rsk.mn_character(cfg.lam, mu)
            match = at1 == oracle
            ok = ok and match
            rows.append(
                [",".join(map(str, mu)), str(val), str(at1), str(oracle), "ok" if match else "MISMATCH"]
            )
            json_rows.append(
                {
                    "mu": list(mu),
                    "value": str(val),
                    "value_at_1": at1,
                    "classical_oracle": oracle,
                    "match": match,
                }
            )
        return ["mu", "value", "value_at_1", "classical_oracle", "match"], rows, json_rows, ok
    for mu in mus:
        tr = model_hecke.hecke_model_character(mu, basis)
        um = model_hecke.mu_unimodal_character(mu)
        match = tr == um
        ok = ok and match
        rows.append([",".join(map(str, mu)), str(tr), str(um), "ok" if match else "MISMATCH"])
        json_rows.append(
            {
                "mu": list(mu),
                "trace": str(tr),
                "unimodal_sum": str(um),
                "match": match,
            }
        )
    return ["mu", "trace", "unimodal_sum", "match"], rows, json_rows, ok


def cmd_characters(cfg: RunConfig) -> int:
    if cfg.kind == "sn":
        _require_cap(cfg.n, "characters_sn", "sn character table")
        header, rows, json_rows, ok = _sn_character_rows(cfg)
    else:
        if cfg.lam is not None:
            _require_cap(cfg.n, "characters_lambda", "irreducible character table")
        else:
            _require_cap(cfg.n, "characters_hecke", "hecke character table")
        header, rows, json_rows, ok = _hecke_character_rows(cfg)
    _emit_table(cfg.fmt, header, rows, json_rows)
    return 0 if ok else 1


def cmd_poset(cfg: RunConfig) -> int:
    _require_cap(cfg.n, "poset", "poset export")
    sys.stdout.write(model_hecke.poset_dot(cfg.n))
    return 0


_DISPATCH = {
    "involutions": cmd_involutions,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "characters": cmd_characters,
    "poset": cmd_poset,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if cfg.n < 1:
            raise UsageError(f"--n must be positive, got {cfg.n}")
        return _DISPATCH[cfg.command](cfg)
    except (UsageError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
