"""Recompute corpus expectations from the group files with sympy.

Independent of the C++ library: groups are read from the .grp text, every
quantity comes from sympy's permutation groups or from plain element-set
arithmetic below.

  corpus_oracle.py --check DIR/manifest.json   compare against the manifest
  corpus_oracle.py --emit-inc OUT DIR/manifest.json   write frozen values
"""

import argparse
import json
import sys
from pathlib import Path

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.ntheory import factorint

KNOWN_ORDERS = {
    "c2": 2, "c3xc3": 9, "c2xc2xc2": 8, "c4xc2": 8, "d8": 8, "q8": 8, "d16": 16,
    "q16": 16, "sd16": 16, "s3": 6, "s4": 24, "a4": 12, "s5": 120, "a5": 60,
    "a6": 360, "sl23": 24, "gl23": 48, "psl27": 168, "c7c3": 21, "f20": 20,
    "s3xs3": 36, "s3xc3": 18, "s4xc2": 48, "agl-3-2": 144, "agl-2-3": 168,
    "agl-5-2": 1200,
}


def parse_line(degree, line):
    line = line.strip()
    if "(" not in line:
        return Permutation([int(t) - 1 for t in line.split()], size=degree)
    cycles = []
    for chunk in line.replace(")", ")\n").split("\n"):
        chunk = chunk.strip().strip("()")
        if chunk:
            cycles.append([int(t) - 1 for t in chunk.split()])
    perm = Permutation(list(range(degree)))
    for c in cycles:
        perm = perm * Permutation([c], size=degree)
    return perm


def read_group(path):
    lines = [l.strip() for l in Path(path).read_text().splitlines()]
    lines = [l for l in lines if l and not l.startswith("#")]
    degree = int(lines[0])
    return degree, [parse_line(degree, l) for l in lines[1:]]


def p_part(n, p):
    return p ** factorint(n).get(p, 0)


def subgroup_count(elements):
    # all subgroups of a small group, by joining one element at a time
    elements = [tuple(e.array_form) for e in elements]
    def mul(a, b):
        return tuple(b[i] for i in a)
    def close(gens):
        ident = tuple(range(len(elements[0])))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)
    found = {close([])}
    todo = list(found)
    while todo:
        h = todo.pop()
        for x in elements:
            if x in h:
                continue
            k = close(list(h) + [x])
            if k not in found:
                found.add(k)
                todo.append(k)
    return len(found)


def expectations(name, degree, gens, primes):
    g = PermutationGroup(gens)
    order = g.order()
    out = [("order", KNOWN_ORDERS.get(name, order), "known" if name in KNOWN_ORDERS else "oracle")]
    out.append(("center_order", g.center().order(), "oracle"))
    derived = g.derived_subgroup()
    out.append(("derived_order", derived.order(), "oracle"))
    elements = list(g.generate())
    for p in primes:
        s = g.sylow_subgroup(p)
        s_elems = list(s.generate())
        pprime = [x for x in elements if x.order() % p != 0]
        op = PermutationGroup(pprime) if pprime else PermutationGroup([Permutation(list(range(degree)))])
        hyp = sum(1 for x in s_elems if op.contains(x))
        foc = sum(1 for x in s_elems if derived.contains(x))
        # normal p-complement exists iff the p'-elements number |G|_{p'}
        # and are closed under products
        nilp = len(pprime) == order // p_part(order, p)
        if nilp:
            pset = set(pprime)
            nilp = all(a * b in pset for a in pprime for b in pprime)
        out += [
            (f"sylow_order@{p}", s.order(), "oracle"),
            (f"op_order@{p}", op.order(), "oracle"),
            (f"hyperfocal_order@{p}", hyp, "oracle"),
            (f"focal_order@{p}", foc, "oracle"),
            (f"p_nilpotent@{p}", int(nilp), "oracle"),
            (f"subgroup_count@{p}", subgroup_count(s_elems), "oracle"),
        ]
    return order, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("manifest")
    ap.add_argument("--check", action="store_true")
    ap.add_argument("--emit-inc")
    args = ap.parse_args()
    manifest = json.loads(Path(args.manifest).read_text())
    base = Path(args.manifest).parent
    failures = 0
    inc = []
    for e in manifest["entries"]:
        degree, gens = read_group(base / e["file"])
        order, exp = expectations(e["name"], degree, gens, e["primes"])
        if order != KNOWN_ORDERS.get(e["name"], order):
            print(f"{e['name']}: order {order} differs from the known {KNOWN_ORDERS[e['name']]}")
            failures += 1
        if sorted(factorint(order)) != sorted(e["primes"]):
            print(f"{e['name']}: primes {e['primes']} but |G| = {order}")
            failures += 1
        if args.check:
            have = {x["key"]: x["value"] for x in e["expected"]}
            for key, value, _ in exp:
                if have.get(key) != value:
                    print(f"{e['name']}: {key} manifest {have.get(key)} oracle {value}")
                    failures += 1
            extra = set(have) - {k for k, _, _ in exp}
            for key in sorted(extra):
                print(f"{e['name']}: {key} not recomputed by the oracle")
                failures += 1
        items = ", ".join(f'{{"{k}", {v}, "{s}"}}' for k, v, s in exp)
        inc.append(f'    {{"{e["name"]}", {{{items}}}}},')
    if args.emit_inc:
        Path(args.emit_inc).write_text("\n".join(inc) + "\n")
    print(f"{len(manifest['entries'])} entries, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
