"""Batch command-line front end.

Exit codes: 0 success / verified, 1 verification failure, 2 usage or IO
errors.  Reports are deterministic: identical inputs give byte-identical
output (timestamps only with --timestamps).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import serialize
from .fields import CyclotomicField, Field, PrimeField, RationalField, nu_order
from .hopf import (FiniteGroupTable, group_algebra, sweedler_h4, tensor_hopf,
                   verify_hopf_axioms)
from .linmap import coz1_group
from .classify import (H4nSpec, aut_group_profile, build_h4n,
                       enumerate_matched_pairs_h4_cn, iso_classes,
                       iso_criterion, klein_survey)
from .morphisms import (DoubleMorphismData, check_double_morphism_data,
                        enumerate_morphisms)
from .products import (bicrossed_product, drinfeld_double, factorize,
                       verify_matched_pair)


class CliError(Exception):
    pass


def parse_field(text: str) -> Field:
    if text in ("Q", "rationals"):
        return RationalField()
    if text.startswith("cyclotomic:"):
        return CyclotomicField(int(text.split(":", 1)[1]))
    try:
        return PrimeField(int(text))
    except ValueError as e:
        raise CliError(f"bad field {text!r}: {e}") from None


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise CliError(f"malformed JSON in {path} at line {e.lineno} "
                       f"column {e.colno}") from None


def _write_json(path: str, obj: dict):
    with open(path, "w") as fh:
        fh.write(serialize.dump(obj))


def _emit(args, lines):
    print("\n".join(lines))
    if getattr(args, "timestamps", False):
        print(f"generated-at: {time.strftime('%Y-%m-%dT%H:%M:%S')}")


def _omega_label(d, nu):
    if d % nu == 0:
        return "1"
    if d == 1:
        return "xi"
    return f"xi^{d}"


# -- subcommand handlers -----------------------------------------------------

def cmd_verify(args):
    H = serialize.hopf_from_json(_load_json(args.file))
    rep = verify_hopf_axioms(H)
    if args.json:
        print(serialize.dump({
            "ok": rep.ok,
            "report": {name: {"ok": getattr(rep, name).ok,
                              "detail": getattr(rep, name).detail}
                       for name in ("algebra", "coalgebra", "bialgebra",
                                    "antipode")}}), end="")
    else:
        _emit(args, rep.lines())
    return 0 if rep.ok else 1


def cmd_build(args):
    field = parse_field(args.field)
    if args.what == "h4":
        H = sweedler_h4(field)
    elif args.what == "h4n":
        if args.n is None or args.t is None:
            raise CliError("h4n needs --n and --t")
        H = build_h4n(H4nSpec(args.n, args.t, field))
    elif args.what == "double-group":
        if not args.group:
            raise CliError("double-group needs --group TABLE.json")
        G = serialize.group_table_from_json(_load_json(args.group))
        _, H = drinfeld_double(group_algebra(G, field))
    elif args.what == "klein":
        K = FiniteGroupTable.klein_four()
        H = tensor_hopf(sweedler_h4(field), group_algebra(K, field))
    else:
        raise CliError(f"unknown fixture {args.what!r}")
    rep = verify_hopf_axioms(H)
    if not rep.ok:
        _emit(args, rep.lines())
        return 1
    payload = serialize.hopf_to_json(H)
    if args.out:
        _write_json(args.out, payload)
        _emit(args, [f"wrote {args.out} (dim {H.dim})"])
    else:
        print(serialize.dump(payload), end="")
    return 0


def cmd_bicrossed(args):
    mp = serialize.matched_pair_from_json(_load_json(args.file))
    rep = verify_matched_pair(mp)
    if not rep.ok:
        _emit(args, rep.lines())
        return 1
    E = bicrossed_product(mp, check=False)
    hrep = verify_hopf_axioms(E)
    lines = rep.lines() + hrep.lines() + [f"dim: {E.dim}"]
    if args.out:
        _write_json(args.out, serialize.hopf_to_json(E))
        lines.append(f"wrote {args.out}")
    _emit(args, lines)
    return 0 if hrep.ok else 1


def cmd_double(args):
    field = parse_field(args.field)
    if args.kind == "group":
        G = serialize.group_table_from_json(_load_json(args.file))
        H = group_algebra(G, field)
    else:
        H = serialize.hopf_from_json(_load_json(args.file))
    mp, D = drinfeld_double(H)
    rep = verify_hopf_axioms(D)
    lines = [f"dim: {D.dim}"] + rep.lines()
    if args.out:
        _write_json(args.out, serialize.hopf_to_json(D))
        lines.append(f"wrote {args.out}")
    _emit(args, lines)
    return 0 if rep.ok else 1


def cmd_factorize(args):
    E = serialize.hopf_from_json(_load_json(args.file))
    iA = serialize.hopf_map_from_json(_load_json(args.a_image), E)
    iH = serialize.hopf_map_from_json(_load_json(args.h_image), E)
    try:
        mp = factorize(E, iA, iH)
    except ValueError as e:
        _emit(args, [f"factorization failed: {e}"])
        return 1
    lines = [f"A dim: {mp.A.dim}", f"H dim: {mp.H.dim}",
             f"left action trivial: {mp.has_trivial_left()}",
             f"right action trivial: {mp.has_trivial_right()}"]
    if args.out:
        _write_json(args.out, serialize.matched_pair_to_json(mp))
        lines.append(f"wrote {args.out}")
    _emit(args, lines)
    return 0


def cmd_morphisms(args):
    mp1 = serialize.matched_pair_from_json(_load_json(args.source))
    mp2 = serialize.matched_pair_from_json(_load_json(args.target))
    ws = enumerate_morphisms(mp1, mp2)
    if args.stabilize_a:
        f = mp1.field
        eye = f.eye(mp1.A.dim)
        triv = np.einsum("k,i->ki", mp2.H.unit, mp1.A.counit)
        if f.is_prime:
            triv = triv % f.p
        ws = [w for w in ws
              if (w.quadruple.u.mat == eye).all()
              and (w.quadruple.p.mat == triv).all()]
    lines = [f"morphisms: {len(ws)}",
             f"isomorphisms: {sum(w.bijective for w in ws)}"]
    if args.json:
        payload = [{"bijective": w.bijective,
                    "psi": serialize.linmap_to_json(w.psi),
                    "quadruple": {name: serialize.linmap_to_json(m)
                                  for name, m in w.quadruple.maps()}}
                   for w in ws]
        print(serialize.dump({"count": len(ws), "witnesses": payload}),
              end="")
    else:
        _emit(args, lines)
    return 0


def cmd_coz1(args):
    H = serialize.hopf_from_json(_load_json(args.h_file))
    A = serialize.hopf_from_json(_load_json(args.a_file))
    table = coz1_group(H, A)
    lines = [f"order: {table.order}", f"identity: {table.identity}"]
    for row in table.table:
        lines.append(" ".join(str(int(x)) for x in row))
    _emit(args, lines)
    return 0


def cmd_classify(args):
    field = parse_field(args.field)
    ic = iso_classes(args.n, field)
    reps = ["1"] + [_omega_label(d, ic.nu) for d in ic.representatives
                    if d != ic.nu and (ic.nu % 2 == 1 or d != ic.nu // 2
                                       or ic.nu == 2)]
    reps = reps[:ic.count]
    lines = [f"nu={ic.nu}", f"classes={ic.count}",
             "representatives=[" + ", ".join(reps) + "]"]
    if args.partition:
        lines.append("partition (l x t, 1 = isomorphic):")
        for l in range(ic.nu):
            row = "".join("1" if iso_criterion(l, t, args.n,
                                               field).isomorphic else "0"
                          for t in range(ic.nu))
            lines.append(row)
    if args.json:
        print(serialize.dump({
            "nu": ic.nu, "classes": ic.count,
            "representatives": reps,
            "canonical": [ic.canonical(t) for t in range(ic.nu)]}), end="")
    else:
        _emit(args, lines)
    return 0


def cmd_aut(args):
    field = parse_field(args.field)
    prof = aut_group_profile(args.n, args.t, field)
    lines = [f"structure = {prof.structure}"]
    if prof.order_over_field is not None:
        lines.append(f"order = {prof.order_over_field}")
    lines.append("arithmetic part = "
                 + "[" + ", ".join(map(str, prof.arithmetic_part)) + "]")
    _emit(args, lines)
    return 0


def cmd_klein(args):
    field = parse_field(args.field)
    ks = klein_survey(field)
    lines = [f"matched pairs: {len(ks.pairs)}",
             f"all products isomorphic to the tensor product: "
             f"{ks.all_products_trivial}"]
    _emit(args, lines)
    return 0 if ks.all_products_trivial else 1


def cmd_double_hom(args):
    field = parse_field(args.field)
    G = serialize.group_table_from_json(_load_json(args.g_file))
    Ht = serialize.group_table_from_json(_load_json(args.h_file))
    d = _load_json(args.data)
    try:
        data = DoubleMorphismData(
            G, Ht,
            field.asarray(d["lambda"]), field.asarray(d["omega"]),
            field.asarray(d["theta"]), np.asarray(d["v"], np.int64))
    except ValueError as e:
        raise CliError(str(e)) from None
    rep = check_double_morphism_data(data, field)
    lines = [f"valid: {rep.valid}"]
    if not rep.valid:
        lines.append("failed: " + ", ".join(rep.failures))
    _emit(args, lines)
    return 0 if rep.valid else 1


def cmd_census(args):
    field = parse_field(args.field)
    pairs = enumerate_matched_pairs_h4_cn(args.n, field)
    nu, _ = nu_order(field, args.n)
    lines = [f"matched pairs: {len(pairs)}", f"nu: {nu}",
             f"all right actions trivial: "
             f"{all(mp.has_trivial_right() for mp in pairs)}"]
    _emit(args, lines)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hopf",
        description="exact construction, verification and classification "
                    "of bicrossed products of Hopf algebras")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--timestamps", action="store_true")
        return sp

    sp = add("verify", cmd_verify, help="verify the Hopf axioms of a file")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")

    sp = add("build", cmd_build, help="export a fixture as hopf-v1 JSON")
    sp.add_argument("what", choices=["h4", "h4n", "double-group", "klein"])
    sp.add_argument("--field", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--group")
    sp.add_argument("--out")

    sp = add("bicrossed", cmd_bicrossed,
             help="build the bicrossed product of a matched pair")
    sp.add_argument("file")
    sp.add_argument("--out")

    sp = add("double", cmd_double, help="build a Drinfel'd double")
    sp.add_argument("kind", choices=["group", "hopf"])
    sp.add_argument("file")
    sp.add_argument("--field", default="7")
    sp.add_argument("--out")

    sp = add("factorize", cmd_factorize,
             help="recover the matched pair of a factorization")
    sp.add_argument("file")
    sp.add_argument("--a-image", required=True)
    sp.add_argument("--h-image", required=True)
    sp.add_argument("--out")

    sp = add("morphisms", cmd_morphisms,
             help="enumerate Hopf maps between two bicrossed products")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--stabilize-a", action="store_true")
    sp.add_argument("--json", action="store_true")

    sp = add("coz1", cmd_coz1,
             help="the convolution group of unitary cocentral maps")
    sp.add_argument("h_file")
    sp.add_argument("a_file")

    sp = add("classify", cmd_classify,
             help="isomorphism classes of the H_{4n,w} family")
    sp.add_argument("what", choices=["h4n"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--field", required=True)
    sp.add_argument("--partition", action="store_true")
    sp.add_argument("--json", action="store_true")

    sp = add("aut", cmd_aut, help="automorphism group of H_{4n,xi^t}")
    sp.add_argument("what", choices=["h4n"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--field", required=True)

    sp = add("klein", cmd_klein, help="the (H_4, k[C_2 x C_2]) survey")
    sp.add_argument("--field", required=True)

    sp = add("double-hom", cmd_double_hom,
             help="check Drinfel'd-double morphism data")
    sp.add_argument("g_file")
    sp.add_argument("h_file")
    sp.add_argument("--data", required=True)
    sp.add_argument("--field", default="7")

    sp = add("census", cmd_census,
             help="matched-pair census for (H_4, k[C_n])")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--field", required=True)
    return ap


def main(argv=None) -> int:
    from .linmap import BudgetExceeded

    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"error: search budget exceeded: {e} "
              "(raise HOPF_SEARCH_BUDGET)", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
