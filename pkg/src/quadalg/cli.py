"""Batch command-line front end.

Single results are emitted as compact JSON on stdout; discriminant tables as
CSV (or JSON with --format json).  Exit codes: 0 success, 2 validation or
usage error, 1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import algebras, forms, glue, picard
from .errors import InvalidRange, QuadalgError
from .ring import (
    IntegerRing,
    QuotientRing,
    Ring,
    TableRing,
    construct_ring,
    quadratic_table_ring,
)

_BIQUAD8_TABLE = [
    [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
    [(0, 1, 0, 0), (8, 0, 0, 0), (0, 0, 0, 1), (0, 0, 8, 0)],
    [(0, 0, 1, 0), (0, 0, 0, 1), (8, 0, 0, 0), (0, 8, 0, 0)],
    [(0, 0, 0, 1), (0, 0, 8, 0), (0, 8, 0, 0), (64, 0, 0, 0)],
]


def builtin_ring(name: str) -> Ring:
    """Ring aliases for the worked examples; falls back to a JSON descriptor."""
    if name == "z":
        return IntegerRing()
    if name == "zsqrt2":
        return quadratic_table_ring(2)
    if name == "zsqrt8":
        return quadratic_table_ring(8)
    if name == "zmod4":
        return QuotientRing(IntegerRing(), 4)
    if name == "zmod8":
        return QuotientRing(IntegerRing(), 8)
    if name == "f4":
        base = TableRing([[(1, 0), (0, 1)], [(0, 1), (-1, -1)]],
                         one=(1, 0), symbols=("1", "x"))
        return QuotientRing(base, 2)
    if name == "biquad8":
        return TableRing(_BIQUAD8_TABLE, one=(1, 0, 0, 0),
                         symbols=("1", "X", "Y", "XY"))
    return construct_ring(json.loads(name))


_TERM = re.compile(r"([+-]?)(\d*)([A-Za-z]+\d*)?")


def parse_element(ring: Ring, text: str):
    """Read an element from JSON coordinates or a symbolic sum like '3+w'."""
    text = text.strip()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, bool):
        raise ValueError(f"cannot parse element {text!r}")
    if isinstance(data, int):
        return ring.from_int(data)
    if isinstance(data, (list, dict)):
        return ring.element_from_json(data)
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element")
    index_of = {sym: i for i, sym in enumerate(ring.symbols)}
    coords = [0] * ring.rank
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        digits, sym = m.group(2), m.group(3)
        if sym is None:
            if not digits:
                raise ValueError(f"cannot parse element {text!r}")
            coords[0] += sign * int(digits)
        else:
            if sym not in index_of:
                raise ValueError(f"unknown symbol {sym!r} in {text!r}")
            coords[index_of[sym]] += sign * (int(digits) if digits else 1)
        pos = m.end()
    return ring.element(coords)


def _split_commas(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[{":
            depth += 1
        elif ch in "]}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_algebra(ring: Ring, text: str) -> algebras.FreeQuadraticAlgebra:
    """Read 'r=...,s=...' into a free quadratic algebra."""
    fields = {}
    for part in _split_commas(text):
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    if set(fields) != {"r", "s"}:
        raise ValueError(f"algebra spec must be 'r=...,s=...', got {text!r}")
    return algebras.FreeQuadraticAlgebra(ring, parse_element(ring, fields["r"]),
                                         parse_element(ring, fields["s"]))


def parse_form(ring: Ring, text: str) -> forms.TwistedForm:
    data = json.loads(text)
    if not isinstance(data, list) or len(data) != 3:
        raise ValueError(f"form must be a JSON triple, got {text!r}")
    a, b, c = (ring.element_from_json(entry) for entry in data)
    return forms.TwistedForm(ring, a, b, c)


def render_element(x) -> object:
    if isinstance(x.ring, IntegerRing):
        return int(x)
    return x.ring.element_to_json(x)


def render_form(q: forms.TwistedForm) -> list:
    return [render_element(q.a), render_element(q.b), render_element(q.c)]


def render_type(t: algebras.AlgebraType) -> dict:
    return {"delta": render_element(t.delta), "parity": list(t.parity.residue)}


def render_hom(hom: algebras.AlgebraHom | None) -> dict:
    if hom is None:
        return {"isomorphic": False}
    return {"isomorphic": True,
            "hom": {"u": render_element(hom.u), "v": render_element(hom.v)}}


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# -- subcommand handlers -------------------------------------------------------

def _cmd_reduce(args) -> str:
    q = parse_form(IntegerRing(), args.form)
    return _dump(render_form(forms.reduce_posdef(q)))


def _cmd_compose(args) -> str:
    group = picard.class_group(args.delta)
    z = IntegerRing()
    q1, q2 = parse_form(z, args.form1), parse_form(z, args.form2)
    return _dump(render_form(group.compose(q1, q2)))


def _cmd_classgroup(args) -> str:
    group = picard.class_group(args.delta)
    return _dump({"h": group.h,
                  "reps": [render_form(q) for q in group.representatives]})


def _cmd_picmodconj(args) -> str:
    orbits = picard.pic_mod_conjugation(args.delta)
    return _dump({"count": len(orbits),
                  "orbits": [[render_form(q) for q in orbit] for orbit in orbits]})


def _cmd_type(args) -> str:
    ring = builtin_ring(args.ring)
    alg = parse_algebra(ring, args.alg)
    return _dump(render_type(algebras.type_of(alg)))


def _cmd_natural_type(args) -> str:
    ring = builtin_ring(args.ring)
    q = parse_form(ring, args.form)
    return _dump(render_type(forms.natural_type(q)))


def _cmd_iso(args) -> str:
    ring = builtin_ring(args.ring)
    a = parse_algebra(ring, args.alg1)
    b = parse_algebra(ring, args.alg2)
    if ring.is_finite() and not ring.two_regular:
        hom = algebras.isomorphic_bruteforce(a, b)
    else:
        hom = algebras.algebras_isomorphic(a, b)
    return _dump(render_hom(hom))


def _cmd_oriented_iso(args) -> str:
    ring = builtin_ring(args.ring)
    a = parse_algebra(ring, args.alg1)
    b = parse_algebra(ring, args.alg2)
    t1 = algebras.Orientation(parse_element(ring, args.theta1))
    t2 = algebras.Orientation(parse_element(ring, args.theta2))
    return _dump(render_hom(algebras.oriented_isomorphic(a, t1, b, t2)))


def _cmd_autos(args) -> str:
    ring = builtin_ring(args.ring)
    alg = parse_algebra(ring, args.alg)
    if args.oriented:
        theta = algebras.Orientation(parse_element(ring, args.theta))
        homs = algebras.oriented_automorphisms_bruteforce(alg, theta)
    else:
        homs = algebras.automorphisms_bruteforce(alg)
    return _dump({"count": len(homs),
                  "automorphisms": [{"u": render_element(h.u),
                                     "v": render_element(h.v)} for h in homs]})


def _cmd_validate_triple(args) -> str:
    ring = builtin_ring(args.ring)
    delta = parse_element(ring, args.delta)
    parity = ring.mod2(parse_element(ring, args.parity))
    ok = algebras.is_valid_triple(ring, algebras.AlgebraType(delta, parity))
    return _dump({"valid": ok})


def _cmd_form2ideal(args) -> str:
    pitilde = args.pitilde if args.pitilde is not None else args.delta % 2
    order = picard.order_from_type(args.delta, pitilde)
    q = parse_form(IntegerRing(), args.form)
    return _dump(picard.form_to_ideal(q, order).to_json())


def _cmd_ideal2form(args) -> str:
    data = json.loads(_read_payload(args))
    order = picard.order_from_type(int(data["delta"]), int(data["pitilde"]))
    hnf = data["hnf"]
    ideal = picard.OrderIdeal(order, int(hnf[0][0]), int(hnf[0][1]), int(hnf[1][1]))
    return _dump(render_form(picard.ideal_to_form(ideal)))


def _parse_glue_payload(data: dict):
    cover = glue.PrincipalCover(data["cover"])
    eps = {}
    for key, value in data["cocycle"].items():
        i, j = (int(t) for t in key.split(","))
        eps[(i - 1, j - 1)] = glue._as_fraction(value)  # 1-based keys in JSON
    cocycle = glue.LineBundleCocycle(cover, eps)
    payload = data["data"]
    return cover, cocycle, glue.GluedTypeData(payload["d"], payload["p"])


def _cmd_glue_check(args) -> str:
    cover, cocycle, data = _parse_glue_payload(json.loads(_read_payload(args)))
    report = glue.verification_report(cover, cocycle, data)
    if all(item["ok"] for item in report):
        glued = glue.build_glued(cover, cocycle, data)
        k = cover.size
        for i in range(k):
            for j in range(k):
                if i != j:
                    report.append({"check": "transition_hom", "indices": [i, j],
                                   "ok": glue.check_transition_hom(glued, i, j)})
        for i in range(k):
            for j in range(i + 1, k):
                for t in range(j + 1, k):
                    report.append({"check": "cocycle_transitions",
                                   "indices": [i, j, t],
                                   "ok": glue.check_cocycle_transitions(glued, i, j, t)})
    return _dump(report)


def _read_payload(args) -> str:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    if args.payload is None:
        raise ValueError("provide inline JSON or --input FILE")
    return args.payload


def emit_table(min_delta: int, max_delta: int, fmt: str = "csv") -> str:
    """One row per valid discriminant in [min, max]: delta, pitilde, h,
    pic-mod-conjugation count, reduced representatives."""
    if min_delta > max_delta or max_delta >= 0:
        raise InvalidRange(f"need min <= max < 0, got [{min_delta}, {max_delta}]")
    rows = []
    for delta in range(min_delta, max_delta + 1):
        if delta % 4 not in (0, 1):
            continue
        group = picard.class_group(delta)
        orbits = picard.pic_mod_conjugation(delta)
        reps = [render_form(q) for q in group.representatives]
        rows.append((delta, delta % 2, group.h, len(orbits), reps))
    if fmt == "json":
        return _dump([{"delta": d, "pitilde": p, "h": h, "picmod": pm, "reps": r}
                      for d, p, h, pm, r in rows])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["delta", "pitilde", "h", "picmod", "reps"])
    for d, p, h, pm, reps in rows:
        writer.writerow([d, p, h, pm, _dump(reps)])
    return buf.getvalue().rstrip("\n")


def _cmd_table(args) -> str:
    return emit_table(args.min, args.max, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadalg",
        description="classify quadratic algebras and map forms to Picard classes")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("reduce", _cmd_reduce, "reduce a positive-definite form over Z")
    p.add_argument("form", help="form as a JSON triple, e.g. [9,10,4]")

    p = add("compose", _cmd_compose, "compose two form classes of one discriminant")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("form1")
    p.add_argument("form2")

    p = add("classgroup", _cmd_classgroup, "class group of a negative discriminant")
    p.add_argument("--delta", type=int, required=True)

    p = add("picmodconj", _cmd_picmodconj, "class set modulo conjugation")
    p.add_argument("--delta", type=int, required=True)

    p = add("type", _cmd_type, "type (discriminant, parity) of an algebra")
    p.add_argument("--ring", required=True)
    p.add_argument("--alg", required=True, help="e.g. 'r=w,s=-4'")

    p = add("natural-type", _cmd_natural_type, "natural type of a twisted form")
    p.add_argument("--ring", default="z")
    p.add_argument("form")

    p = add("iso", _cmd_iso, "decide isomorphism of two quadratic algebras")
    p.add_argument("--ring", required=True)
    p.add_argument("--alg1", required=True)
    p.add_argument("--alg2", required=True)

    p = add("oriented-iso", _cmd_oriented_iso, "decide oriented isomorphism")
    p.add_argument("--ring", required=True)
    p.add_argument("--alg1", required=True)
    p.add_argument("--alg2", required=True)
    p.add_argument("--theta1", required=True, help="orientation unit")
    p.add_argument("--theta2", required=True, help="orientation unit")

    p = add("autos", _cmd_autos, "automorphisms of an algebra (finite ring)")
    p.add_argument("--ring", required=True)
    p.add_argument("--alg", required=True)
    p.add_argument("--oriented", action="store_true")
    p.add_argument("--theta", default="1")

    p = add("validate-triple", _cmd_validate_triple, "is (delta, parity) a type?")
    p.add_argument("--ring", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--parity", required=True)

    p = add("form2ideal", _cmd_form2ideal, "form to HNF ideal (Cor.-style map)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--pitilde", type=int, default=None)
    p.add_argument("form")

    p = add("ideal2form", _cmd_ideal2form, "HNF ideal to a form in its class")
    p.add_argument("payload", nargs="?", help="ideal JSON")
    p.add_argument("--input", help="read ideal JSON from a file")

    p = add("glue-check", _cmd_glue_check, "verify cover/cocycle/type data")
    p.add_argument("payload", nargs="?", help="glue data JSON")
    p.add_argument("--input", help="read glue data JSON from a file")

    p = add("table", _cmd_table, "class-number table over a discriminant range")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        print(args.func(args))
    except (QuadalgError, ValueError, KeyError, IndexError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal error
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
