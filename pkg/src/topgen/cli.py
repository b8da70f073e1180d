"""Command-line front end: ``topgen <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import acceptance, classdata, fpr, gencrit, kernels, subsys, torsion
from .chars import check_characteristic
from .errors import BudgetExceeded, InvalidGroupType, InvalidOrder, NotCurated
from .rootsys import EXCEPTIONAL, TORSION_GROUPS, GroupType, build_root_system, weyl_group_order

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3


class UsageError(Exception):
    """Bad argument value; reported with exit code 2."""


def jsonable(obj):
    """Recursively convert results to JSON-safe values; rationals become "num/den"."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, GroupType):
        return str(obj)
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    return obj


def to_json(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def _cell(v) -> str:
    v = jsonable(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return " ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


def _rows_of(result) -> tuple[list[str], list[dict]]:
    """Columns and rows for tabular output."""
    if isinstance(result, dict) and "rows" in result and isinstance(result["rows"], list):
        rows = result["rows"]
    elif isinstance(result, list):
        rows = result
    else:
        rows = [{"field": k, "value": v} for k, v in result.items()]
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols, rows


def to_csv(result) -> str:
    cols, rows = _rows_of(result)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def to_table(result) -> str:
    out = []
    if isinstance(result, dict) and "rows" in result:
        for k, v in result.items():
            if k != "rows":
                out.append(f"{k}: {_cell(v)}")
    cols, rows = _rows_of(result)
    if rows:
        cells = [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        out.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        out.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)
    return "\n".join(out) + "\n"


RENDER = {"json": to_json, "csv": to_csv, "table": to_table}


# argument helpers


def _group(name: str, allowed) -> GroupType:
    try:
        gt = GroupType.parse(name)
    except (InvalidGroupType, ValueError):
        gt = None
    if gt is None or str(gt) not in allowed:
        raise UsageError(f"unknown group {name!r}; valid names: {', '.join(allowed)}")
    return gt


def _char(p: int) -> int:
    try:
        return check_characteristic(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _class_known(gt: GroupType, label: str, p: int) -> None:
    try:
        classdata.find_class(gt, label, p)
    except NotCurated:
        names = ", ".join(classdata.class_labels(gt, p))
        raise UsageError(f"unknown class {label!r} for {gt} at p={p}; valid names: {names}") from None


def _subgroup_known(gt: GroupType, label: str, p: int) -> subsys.SubgroupRecord:
    hits = subsys.find_subgroup(gt, label, p)
    if not hits:
        names = ", ".join(dict.fromkeys(r.label for r in subsys.catalog_maximal(gt, p)))
        raise UsageError(f"unknown subgroup {label!r} of {gt} at p={p}; valid names: {names}")
    return hits[0]


# commands: each returns (result, exit_code)


def cmd_roots(a):
    rs = build_root_system(_group(a.group, _all_groups()))
    result = {
        "group": str(rs.group_type),
        "rank": rs.rank,
        "dim": rs.dim,
        "roots": len(rs.roots),
        "positive_roots": len(rs.positive_roots),
        "long_roots": len(rs.long_roots),
        "coxeter_number": rs.coxeter_number,
        "highest_root": list(rs.highest_root),
        "marks": list(rs.marks),
        "weyl_order": weyl_group_order(rs),
    }
    if a.list:
        result = {**result, "rows": [{"root": list(r), "height": sum(r), "long": rs.is_long(r)} for r in rs.positive_roots]}
    return result, EXIT_OK


def cmd_parabolic_dims(a):
    gt = _group(a.group, _all_groups())
    pds = [subsys.ParabolicDescriptor(gt, i) for i in range(1, gt.rank + 1)]
    if a.format == "table":
        return [{pd.label: subsys.coset_dim_parabolic(pd) for pd in pds}], EXIT_OK
    rows = [
        {
            "parabolic": pd.label,
            "dim_G_over_P": subsys.coset_dim_parabolic(pd),
            "dim_P": subsys.parabolic_dim(pd),
            "levi": subsys.levi_subsystem(pd).label,
        }
        for pd in pds
    ]
    return {"group": str(gt), "rows": rows}, EXIT_OK


def cmd_maxrank(a):
    rs = build_root_system(_group(a.group, _all_groups()))
    rows = [
        {"subsystem": sd.label, "dim": sd.dim, "roots": sd.root_count}
        for sd in subsys.bds_maximal_subsystems(rs)
    ]
    result = {"group": str(rs.group_type), "method": "prime-mark deletion", "rows": rows}
    if a.iterated:
        result["rows"] = [
            {"subsystem": lab, "dim": subsys.parse_label(lab).dim, "roots": subsys.parse_label(lab).root_count}
            for lab in sorted(subsys.bds_iterated(rs), key=lambda s: (-subsys.parse_label(s).dim, s))
        ]
        result["method"] = "iterated deletion"
    return result, EXIT_OK


def cmd_catalog(a):
    gt = _group(a.group, subsys.supported_catalogs())
    p = _char(a.char)
    rows = [r.to_dict() for r in subsys.catalog_maximal(gt, p)]
    return {"group": str(gt), "p": p, "rows": rows}, EXIT_OK


def cmd_torsion(a):
    gt = _group(a.group, TORSION_GROUPS)
    rs = build_root_system(gt)
    summ = torsion.torsion_summary(rs, a.r)
    w = summ.witness
    result = {
        "group": str(gt),
        "r": a.r,
        "dim_G_r": summ.max_class_dim,
        "centralizer_dim": summ.centralizer_dim,
        "centralizer_type": summ.witness_type,
        "kac_witness": list(w.kac.s) if isinstance(w, torsion.TorsionClass) else None,
        "kac_solutions": summ.class_count,
        "method": summ.method,
    }
    code = EXIT_OK
    if a.oracle:
        orc = torsion.brute_force_torsion(rs, a.r, a.budget)
        agree = (orc.max_class_dim, orc.centralizer_dim) == (summ.max_class_dim, summ.centralizer_dim)
        result.update(
            oracle_dim=orc.max_class_dim,
            oracle_witness=list(orc.witness),
            oracle_backend=kernels.BACKEND,
            oracle_agreement="yes" if agree else "no",
        )
        code = EXIT_OK if agree else EXIT_FAIL
    return result, code


def cmd_gamma(a):
    gt = _group(a.group, TORSION_GROUPS)
    p = _char(a.char)
    v = torsion.check_main6_i(gt, a.r, p)
    result = {
        "group": str(gt),
        "r": a.r,
        "p": p,
        "relevant": v.relevant,
        "gamma": v.gamma,
        "achieved": v.achieved,
        "source": v.source,
        "witness": v.witness,
        "passed": v.passed,
    }
    return result, EXIT_OK if v.passed else EXIT_FAIL


def cmd_alpha(a):
    gt = _group(a.group, EXCEPTIONAL)
    p = _char(a.char)
    sub = _subgroup_known(gt, a.subgroup, p)
    _class_known(gt, a.cls, p)
    rec = classdata.find_alpha(gt, sub.label, a.cls, p)
    val = rec.alpha(p)
    result = {
        "group": str(gt),
        "subgroup": sub.label,
        "class": rec.class_label,
        "p": p,
        "alpha": val,
        "form": rec.form,
        "dim_X": sub.coset_dim,
        "dim_fixed": val * sub.coset_dim,
        "citation": rec.citation,
    }
    return result, EXIT_OK


def cmd_kappa(a):
    gt = _group(a.group, EXCEPTIONAL)
    p = _char(a.char)
    rows = [
        {"subgroup": w.subgroup_label, "class": w.class_label, "alpha": w.alpha(p), "citation": w.citation}
        for w in classdata.kappa_witnesses(gt, p)
    ]
    return {"group": str(gt), "p": p, "kappa": classdata.kappa(gt, p), "rows": rows}, EXIT_OK


def cmd_gen_check(a):
    gt = _group(a.group, EXCEPTIONAL)
    p = _char(a.char)
    classes = tuple(c.strip() for c in a.classes.split(",") if c.strip())
    if not a.allow_uncurated:
        for c in classes:
            _class_known(gt, c, p)
    rep = gencrit.check_t_tuple(gencrit.GenerationQuery(gt, p, classes))
    result = rep.to_dict()
    result["tightest_sum"] = rep.tightest.sum_alpha
    return result, EXIT_OK if rep.verdict == "pass" else EXIT_FAIL


def cmd_minimal_t(a):
    gt = _group(a.group, EXCEPTIONAL)
    p = _char(a.char)
    t = gencrit.minimal_t(gt, p)
    if a.format == "table":
        return {"minimal_t": t}, EXIT_OK
    return {"group": str(gt), "p": p, "kappa": classdata.kappa(gt, p), "minimal_t": t}, EXIT_OK


def cmd_sharpness(a):
    gt = _group(a.group, EXCEPTIONAL)
    p = _char(a.char)
    return gencrit.sharpness_fixed_space(gt, a.t, p).to_dict(), EXIT_OK


def cmd_cor1(a):
    gt = _group(a.group, TORSION_GROUPS)
    p = None if a.char is None else _char(a.char)
    rep = gencrit.check_cor1(gt, a.r, a.s, p)
    result = rep.to_dict()
    result["tightest_total"] = rep.tightest.total
    return result, EXIT_OK if rep.passed else EXIT_FAIL


def cmd_perm_char(a):
    value, degree = fpr.perm_char_eval(a.i, a.q)
    poly = fpr.perm_char_polynomials()[a.i]
    result = {
        "parabolic_index": a.i,
        "q": a.q,
        "value": value,
        "degree": degree,
        "monic": poly.is_monic,
        "polynomial": poly.factored(),
        "citation": poly.citation,
    }
    return result, EXIT_OK


def cmd_generic_free(a):
    gt = _group(a.group, EXCEPTIONAL)
    p = _char(a.char)
    classes = tuple(c.strip() for c in (a.classes or "").split(",") if c.strip())
    for c in classes:
        _class_known(gt, c, p)
    if not a.dimv > a.fixed >= 0:
        raise UsageError("need --dimv > --fixed >= 0")
    v = gencrit.generic_free_check(gt, a.dimv, a.fixed, classes, p)
    result = v.to_dict()
    if classes:
        result["rows"] = result.pop("classes")
    else:
        result.pop("classes")
    return result, EXIT_OK


def cmd_dump_data(a):
    data = classdata.dump_all()
    if a.format == "json":
        return data, EXIT_OK
    rows = []
    for section, items in sorted(data.items()):
        if isinstance(items, list):
            rows.extend({"section": section, **item} for item in items)
    return rows, EXIT_OK


def cmd_verify_all(a):
    results = acceptance.run_all()
    rows = [r.to_dict() for r in results]
    ok = all(r.ok for r in results)
    if a.format == "table":
        lines = [f"{r.line()}\n      citation: {r.citation}" for r in results]
        lines.append(f"{sum(r.ok for r in results)}/{len(results)} criteria pass (backend: {kernels.BACKEND})")
        return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL
    return {"all_passed": ok, "backend": kernels.BACKEND, "rows": rows}, EXIT_OK if ok else EXIT_FAIL


def _all_groups() -> list[str]:
    return list(TORSION_GROUPS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topgen", description=__doc__)
    parser.add_argument("--format", choices=sorted(RENDER), default="table")
    # accepted after the subcommand too, without clobbering a global value
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=sorted(RENDER), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[fmt])
        sp.set_defaults(func=func)
        return sp

    sp = add("roots", cmd_roots, "root system data")
    sp.add_argument("group")
    sp.add_argument("--list", action="store_true", help="list the positive roots")
    sp = add("parabolic-dims", cmd_parabolic_dims, "dim G/P_i for every maximal parabolic")
    sp.add_argument("group")
    sp = add("maxrank", cmd_maxrank, "maximal-rank subsystems by prime-mark deletion")
    sp.add_argument("group")
    sp.add_argument("--iterated", action="store_true", help="close under repeated deletion")
    sp = add("catalog", cmd_catalog, "positive-dimensional maximal subgroups")
    sp.add_argument("group")
    sp.add_argument("--char", type=int, required=True)
    sp = add("torsion", cmd_torsion, "maximal dimension of an order-r semisimple class")
    sp.add_argument("group")
    sp.add_argument("r", type=int)
    sp.add_argument("--oracle", action="store_true", help="cross-check by sweeping the torus")
    sp.add_argument("--budget", type=int, default=None, help="oracle work budget")
    sp = add("gamma", cmd_gamma, "gamma(G, r) and the class achieving it")
    sp.add_argument("group")
    sp.add_argument("r", type=int)
    sp.add_argument("--char", type=int, required=True)
    sp = add("alpha", cmd_alpha, "a stored fixed point ratio")
    sp.add_argument("group")
    sp.add_argument("subgroup")
    sp.add_argument("cls", metavar="class")
    sp.add_argument("--char", type=int, required=True)
    sp = add("kappa", cmd_kappa, "largest stored fixed point ratio")
    sp.add_argument("group")
    sp.add_argument("--char", type=int, default=0)
    sp = add("gen-check", cmd_gen_check, "generation criterion for a tuple of classes")
    sp.add_argument("group")
    sp.add_argument("--classes", required=True, help="comma-separated class labels")
    sp.add_argument("--char", type=int, required=True)
    sp.add_argument("--allow-uncurated", action="store_true", help="fall back to kappa for unknown classes")
    sp = add("minimal-t", cmd_minimal_t, "least t that the kappa bound certifies")
    sp.add_argument("group")
    sp.add_argument("--char", type=int, default=0)
    sp = add("sharpness", cmd_sharpness, "whether t root elements must share a fixed vector")
    sp.add_argument("group")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--char", type=int, default=0)
    sp = add("cor1", cmd_cor1, "large-class pair bound over the subgroup catalog")
    sp.add_argument("group")
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    sp.add_argument("--char", type=int, default=None, help="restrict to one characteristic")
    sp = add("perm-char", cmd_perm_char, "permutation character at a B4-type involution")
    sp.add_argument("i", type=int)
    sp.add_argument("q", type=int)
    sp = add("generic-free", cmd_generic_free, "sufficient condition for a generically free module")
    sp.add_argument("group")
    sp.add_argument("--dimv", type=int, required=True)
    sp.add_argument("--fixed", type=int, default=0, help="dim V^G")
    sp.add_argument("--classes", default="", help="comma-separated class labels")
    sp.add_argument("--char", type=int, default=0)
    add("dump-data", cmd_dump_data, "every curated row with its citation")
    add("verify-all", cmd_verify_all, "run every acceptance check")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result, code = args.func(args)
    except UsageError as exc:
        print(f"topgen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotCurated, BudgetExceeded) as exc:
        print(f"topgen: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (InvalidGroupType, InvalidOrder, ValueError) as exc:
        print(f"topgen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(result if isinstance(result, str) else RENDER[args.format](result))
    return code


if __name__ == "__main__":
    sys.exit(main())
