"""Command line front end.

Subcommands: sym-table, normalizer, wreath, blocks, isometry, sylow.  Output
is deterministic; --json switches to machine-readable form with exact values
(fractions as "p/q" strings, irrational values as order/coefficient objects).
Exit codes: 0 success or verification pass, 1 verification failure, 2 usage.
"""

import argparse
import json
import sys

from .chartable import block_partition
from .cyclotomic import value_str, value_to_json
from .isometry import (check_normalizer_wreath_blocks, sylow_ell_structure,
                       verify_kor_isometry, verify_main_isometry)
from .normalizer import (CliffordLabel, clifford_irr, normalizer_blocks,
                         normalizer_group_data)
from .symgroup import sn_blocks, sn_character_table
from .wreath import cyclic_wreath, normalizer_wreath


def _partition_str(p):
    return "[" + ",".join(str(x) for x in p) + "]"


def _label_str(label):
    if isinstance(label, CliffordLabel):
        return "psi(d=%d,t=%d)" % (label.d, label.theta)
    if isinstance(label, int):
        return str(label)
    if label and isinstance(label[0], tuple):
        return "[" + ",".join(_partition_str(p) for p in label) + "]"
    return _partition_str(label)


def _label_json(label):
    if isinstance(label, CliffordLabel):
        return {"d": label.d, "theta": label.theta}
    if isinstance(label, int):
        return label
    if label and isinstance(label[0], tuple):
        return [list(p) for p in label]
    return list(label)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _table_text(table, title):
    lines = [title, "order %d, %d classes" % (table.order, table.num_classes())]
    lines.append("classes: " + " ".join(_label_str(c) for c in table.class_labels))
    lines.append("sizes:   " + " ".join(str(s) for s in table.class_sizes))
    if table.singular_classes:
        lines.append("singular classes: "
                      + " ".join(str(c) for c in table.singular_classes))
    for i, lab in enumerate(table.row_labels):
        vals = " ".join(value_str(v) for v in table.values[i])
        lines.append("%s: %s" % (_label_str(lab), vals))
    return "\n".join(lines)


def _table_json(table):
    return {
        "order": table.order,
        "classes": [{"label": _label_json(c), "size": s, "centralizer": z}
                    for c, s, z in zip(table.class_labels, table.class_sizes,
                                       table.centralizer_orders)],
        "characters": [{"label": _label_json(lab),
                        "values": [value_to_json(v) for v in row]}
                       for lab, row in zip(table.row_labels, table.values)],
        "trivial_index": table.trivial_index,
        "singular_classes": list(table.singular_classes or ()),
    }


def _blocks_text(table, bp, title):
    lines = [title]
    for i, block in enumerate(bp.blocks):
        mark = " (principal)" if i == bp.principal_index else ""
        labs = " ".join(_label_str(table.row_labels[j]) for j in block)
        lines.append("block %d%s: %s" % (i, mark, labs))
    return "\n".join(lines)


def _blocks_json(table, bp):
    return {
        "blocks": [[_label_json(table.row_labels[j]) for j in block]
                   for block in bp.blocks],
        "principal_index": bp.principal_index,
    }


def _wreath_group(base_spec, w):
    kind, _, num = base_spec.partition(":")
    if not num.isdigit():
        raise ValueError("base must look like cyclic:L or normalizer:L")
    ell = int(num)
    if kind == "cyclic":
        return cyclic_wreath(ell, w), "Z%d wr S%d" % (ell, w)
    if kind == "normalizer":
        return normalizer_wreath(ell, w), "N(%d) wr S%d" % (ell, w)
    raise ValueError("unknown base kind %r" % kind)


def _cmd_sym_table(args):
    table = sn_character_table(args.n)
    if args.json:
        _emit(json.dumps({"n": args.n, **_table_json(table)}, sort_keys=True),
              args.out)
    else:
        _emit(_table_text(table, "character table of S%d" % args.n), args.out)
    return 0


def _cmd_normalizer(args):
    table = clifford_irr(args.ell)
    parts = []
    if args.table:
        parts.append(("table", table))
    if args.blocks:
        parts.append(("blocks", normalizer_blocks(args.ell)))
    if not parts:
        parts.append(("table", table))
    if args.json:
        payload = {"ell": args.ell}
        for kind, obj in parts:
            payload[kind] = (_table_json(obj) if kind == "table"
                             else _blocks_json(table, obj))
        _emit(json.dumps(payload, sort_keys=True), args.out)
        return 0
    chunks = []
    for kind, obj in parts:
        if kind == "table":
            chunks.append(_table_text(obj, "character table of N(%d)" % args.ell))
        else:
            chunks.append(_blocks_text(table, obj,
                                       "blocks of N(%d) across singular classes" % args.ell))
    _emit("\n".join(chunks), args.out)
    return 0


def _cmd_wreath(args):
    group, name = _wreath_group(args.base, args.w)
    if args.classes:
        if args.json:
            payload = {"group": name, "order": group.order,
                       "classes": [{"label": _label_json(lab), "size": s,
                                    "centralizer": z}
                                   for lab, s, z in zip(group.class_labels,
                                                        group.class_sizes,
                                                        group.centralizer_orders)]}
            _emit(json.dumps(payload, sort_keys=True), args.out)
        else:
            lines = ["classes of %s (order %d)" % (name, group.order)]
            for lab, s, z in zip(group.class_labels, group.class_sizes,
                                 group.centralizer_orders):
                lines.append("%s size %d centralizer %d" % (_label_str(lab), s, z))
            _emit("\n".join(lines), args.out)
        return 0
    table = group.character_table()
    if args.blocks:
        bp = block_partition(table, table.regular_classes())
        if args.json:
            _emit(json.dumps({"group": name, **_blocks_json(table, bp)},
                             sort_keys=True), args.out)
        else:
            _emit(_blocks_text(table, bp,
                               "blocks of %s across regular classes" % name), args.out)
        return 0
    if args.json:
        _emit(json.dumps({"group": name, **_table_json(table)}, sort_keys=True),
              args.out)
    else:
        _emit(_table_text(table, "character table of %s" % name), args.out)
    return 0


def _cmd_blocks(args):
    spec = args.group.split(":")
    if spec[0] == "sym" and len(spec) == 2:
        n = int(spec[1])
        table, bp = sn_blocks(n, args.ell)
        title = "%d-blocks of S%d" % (args.ell, n)
    elif spec[0] == "normalizer" and len(spec) == 2:
        ell = int(spec[1])
        if args.ell != ell:
            raise ValueError("--ell must match the normalizer parameter")
        table = clifford_irr(ell)
        bp = normalizer_blocks(ell)
        title = "%d-blocks of N(%d)" % (ell, ell)
    elif spec[0] == "wreath" and len(spec) == 4:
        group, name = _wreath_group(spec[1] + ":" + spec[2], int(spec[3]))
        table = group.character_table()
        bp = block_partition(table, table.regular_classes())
        title = "%d-blocks of %s" % (args.ell, name)
    else:
        raise ValueError("group must be sym:N, normalizer:L, or wreath:KIND:L:W")
    if args.json:
        _emit(json.dumps({"group": args.group, "ell": args.ell,
                          **_blocks_json(table, bp)}, sort_keys=True), args.out)
    else:
        _emit(_blocks_text(table, bp, title), args.out)
    return 0


def _cmd_isometry(args):
    report = (verify_kor_isometry if args.kor_only else verify_main_isometry)(
        args.ell, args.w, args.r)
    if args.json:
        _emit(json.dumps(report.to_json(), sort_keys=True), args.out)
    else:
        lines = ["isometry check ell=%d w=%d r=%d (%s)"
                 % (args.ell, args.w, args.r, report.params["mode"])]
        for key, ok in sorted(report.checks.items()):
            lines.append("%s: %s" % (key, "ok" if ok else "FAILED"))
        for p in report.pairs:
            lines.append("%s %s: lhs %s rhs %s %s"
                         % (_label_str(tuple(p["labels"][0])),
                            _label_str(tuple(p["labels"][1])),
                            p["lhs"], p["rhs"], "ok" if p["ok"] else "FAILED"))
        lines.append("PASS" if report.passed else "FAIL")
        _emit("\n".join(lines), args.out)
    return 0 if report.passed else 1


def _cmd_sylow(args):
    info = sylow_ell_structure(args.n, args.ell)
    if args.json:
        info = dict(info)
        info["digits"] = list(info["digits"])
        info["factors"] = [list(f) for f in info["factors"]]
        _emit(json.dumps(info, sort_keys=True), args.out)
        return 0
    lines = ["generalized %d-Sylow of S%d" % (args.ell, args.n),
             "digits: " + " ".join(str(d) for d in info["digits"]),
             "factors: " + (" ".join("L%d^%d" % f for f in info["factors"]) or "trivial"),
             "order: %d" % info["order"],
             "abelian: %s" % ("yes" if info["abelian"] else "no"),
             "cyclic: %s" % ("yes" if info["cyclic"] else "no")]
    _emit("\n".join(lines), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genblocks",
        description="generalized ell-blocks of symmetric groups, wreath "
                    "products, and Sylow normalizers, in exact arithmetic")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="PATH", help="write output to a file")

    p = sub.add_parser("sym-table", help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_sym_table)

    p = sub.add_parser("normalizer", help="the normalizer N of Z_ell in S_ell")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--table", action="store_true")
    p.add_argument("--blocks", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_normalizer)

    p = sub.add_parser("wreath", help="wreath products H wr S_w")
    p.add_argument("--base", required=True, metavar="KIND:L",
                   help="cyclic:L or normalizer:L")
    p.add_argument("--w", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--classes", action="store_true")
    mode.add_argument("--table", action="store_true")
    mode.add_argument("--blocks", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_wreath)

    p = sub.add_parser("blocks", help="ell-blocks of a supported group")
    p.add_argument("--group", required=True,
                   help="sym:N, normalizer:L, or wreath:KIND:L:W")
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("isometry", help="verify the signed correspondence")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kor-only", action="store_true",
                   help="stop at the symmetric-group / L wr S_w comparison")
    common(p)
    p.set_defaults(func=_cmd_isometry)

    p = sub.add_parser("sylow", help="shape of the generalized ell-Sylow subgroup")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_sylow)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
