#!/usr/bin/env python3
"""Generate catalog.json and selfdual_expected.json.

The catalog lists named real forms of simple groups of rank <= 8 together
with the extended-diagram node (equal rank), family tag (unequal rank) or
complex marker that realizes each. The expected verdicts follow the
classification rules written out in `verdict` below; nothing here calls the
C++ engine.
"""
import json
import pathlib

MAX_RANK = 8
HERE = pathlib.Path(__file__).resolve().parent


def sig(head, a, b):
    a, b = sorted((a, b))
    return f"{head}({a},{b})"


def types():
    out = [("A", n) for n in range(1, MAX_RANK + 1)]
    out += [("B", n) for n in range(2, MAX_RANK + 1)]
    out += [("C", n) for n in range(3, MAX_RANK + 1)]
    out += [("D", n) for n in range(4, MAX_RANK + 1)]
    out += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    return out


entries = []


def add(name, series, rank, lattice, expected, rule, node=None, family=None,
        variant="equal_rank", aliases=()):
    e = {"name": name, "aliases": list(aliases), "series": series, "rank": rank,
         "lattice": lattice, "variant": variant}
    if node is not None:
        e["node"] = node
    if family is not None:
        e["family"] = family
    e["_expected"] = expected
    e["_rule"] = rule
    entries.append(e)


def type_a(n):
    m = n + 1
    for lat, head in (("sc", "SU"), ("ad", "PSU")):
        rule = ("A1: SU(2), SO(3) and SO(2,1) only" if n == 1
                else "A_n, n >= 2: no self-dual forms")
        ok = lambda node: n == 1 and (lat == "ad" or node == 0)
        aliases = [f"{head}(0,{m})"]
        if n == 1:
            aliases += ["Spin(3)"] if lat == "sc" else ["SO(3)", "PSO(3)", "SO(0,3)"]
        add(f"{head}({m})", "A", n, lat, ok(0), rule, node=0, aliases=aliases)
        for p in range(1, m // 2 + 1):
            aliases = []
            if n == 1:
                aliases = (["SL(2,R)", "Spin(1,2)"] if lat == "sc"
                           else ["SO(1,2)", "PGL(2,R)", "PSL(2,R)"])
            add(sig(head, p, m - p), "A", n, lat, ok(p), rule, node=p, aliases=aliases)
        if n >= 2:
            split = "SL" if lat == "sc" else "PGL"
            add(f"{split}({m},R)", "A", n, lat, False, rule, family="split",
                variant="unequal_rank")
            if m % 2 == 0:
                add(f"{head}*({m})", "A", n, lat, False, rule, family="quaternionic",
                    variant="unequal_rank")


def type_b(n):
    m = 2 * n + 1
    for lat, head in (("sc", "Spin"), ("ad", "SO")):
        if lat == "ad":
            rule, ok = "B_n adjoint: every real form", (lambda p: True)
        else:
            rule, ok = "B_n simply connected: Spin(2p,2q+1) iff p even", (lambda p: p % 2 == 0)
        aliases = [f"{head}(0,{m})"]
        if n == 2:
            aliases += ["Sp(2)", "Sp(0,2)"] if lat == "sc" else ["PSp(2)", "PSp(0,2)"]
        add(f"{head}({m})", "B", n, lat, ok(0), rule, node=0, aliases=aliases)
        for p in range(1, n + 1):
            aliases = []
            if n == 2 and p == 1:
                aliases = ["Sp(4,R)"] if lat == "sc" else ["PSp(4,R)"]
            if n == 2 and p == 2:
                aliases = ["Sp(1,1)"] if lat == "sc" else ["PSp(1,1)"]
            add(sig(head, 2 * p, m - 2 * p), "B", n, lat, ok(p), rule, node=p,
                aliases=aliases)


def type_c(n):
    for lat, head in (("sc", "Sp"), ("ad", "PSp")):
        adj = lat == "ad"
        rule = ("C_n adjoint: every real form" if adj
                else "C_n simply connected: all Sp(p,q)")
        add(f"{head}({n})", "C", n, lat, True, rule, node=0, aliases=[f"{head}(0,{n})"])
        for p in range(1, n // 2 + 1):
            add(sig(head, p, n - p), "C", n, lat, True, rule, node=p)
        add(f"{head}({2 * n},R)", "C", n, lat, adj, rule, node=n)


def type_d(n):
    even = n % 2 == 0
    m = 2 * n
    lattices = [("sc", "Spin"), ("so", "SO"), ("ad", "PSO")]
    if even:
        lattices.insert(2, ("sobar", "SO-bar"))
    for lat, head in lattices:
        if not even:
            rule = "D_n, n odd: no self-dual forms"
            ok = lambda p: False
            star = False
        elif lat == "sc":
            rule = "D_2n simply connected: Spin(2p,2q) iff p,q even"
            ok = lambda p: p % 2 == 0
            star = False
        elif lat == "so":
            rule = "D_2n, SO: all SO(2p,2q)"
            ok = lambda p: True
            star = False
        elif lat == "sobar":
            rule = "D_2n, SO-bar: SO-bar(2p,2q) iff p,q even; SO-bar*(4n) iff disconnected"
            ok = lambda p: p % 2 == 0
            star = None
        else:
            rule = "D_2n adjoint: every real form"
            ok = lambda p: True
            star = True
        add(f"{head}({m})", "D", n, lat, ok(0), rule, node=0, aliases=[f"{head}(0,{m})"])
        for p in range(1, n // 2 + 1):
            add(sig(head, 2 * p, m - 2 * p), "D", n, lat, ok(p), rule, node=p)
        if lat == "sobar":
            # The disconnected SO-bar*(4k) sits at the half-spin node carrying
            # the pure element: node n when k = n/2 is even, node n-1 otherwise.
            k = n // 2
            disc = n if k % 2 == 0 else n - 1
            conn = n - 1 if disc == n else n
            add(f"SO-bar*({m},disconnected)", "D", n, lat, True, rule, node=disc)
            add(f"SO-bar*({m},connected)", "D", n, lat, False, rule, node=conn)
        else:
            star_head = {"sc": "Spin*", "so": "SO*", "ad": "PSO*"}[lat]
            add(f"{star_head}({m})", "D", n, lat, bool(star), rule, node=n)
        urule = ("D_2n, unequal rank: every form locally isomorphic to SO(2p+1,2q+1)"
                 if even else rule)
        for a in range(1, n + 1, 2):
            b = m - a
            if a > b:
                break
            add(sig(head, a, b), "D", n, lat, even, urule, family=f"odd-signature({a},{b})",
                variant="unequal_rank")


EXCEPTIONAL = {
    ("E", 6): [("E6(-78)", 0), ("E6(2)", 2), ("E6(-14)", 1)],
    ("E", 7): [("E7(-133)", 0), ("E7(-5)", 1), ("E7(7)", 2), ("E7(-25)", 7)],
    ("E", 8): [("E8(-248)", 0), ("E8(8)", 1), ("E8(-24)", 8)],
    ("F", 4): [("F4(-52)", 0), ("F4(4)", 1), ("F4(-20)", 4)],
    ("G", 2): [("G2(-14)", 0), ("G2(2)", 2)],
}
COMPACT_ALIAS = {"E6(-78)": "E6", "E7(-133)": "E7", "E8(-248)": "E8", "F4(-52)": "F4",
                 "G2(-14)": "G2"}


def type_exceptional(series, n):
    forms = EXCEPTIONAL[(series, n)]
    if series == "E" and n in (6, 7):
        for lat in ("sc", "ad"):
            if n == 6:
                rule, ok = "E6: no self-dual forms", (lambda node: False)
            elif lat == "ad":
                rule, ok = "E7 adjoint: every real form", (lambda node: True)
            else:
                rule, ok = ("E7 simply connected: compact form only", (lambda node: node == 0))
            for name, node in forms:
                aliases = [f"{COMPACT_ALIAS[name]}[{lat}]"] if name in COMPACT_ALIAS else []
                add(f"{name}[{lat}]", series, n, lat, ok(node), rule, node=node, aliases=aliases)
            if n == 6:
                for fam in ("E6(6)", "E6(-26)"):
                    add(f"{fam}[{lat}]", series, n, lat, False, rule, family=fam,
                        variant="unequal_rank")
    else:
        rule = f"{series}{n}: every real form"
        for name, node in forms:
            aliases = [COMPACT_ALIAS[name]] if name in COMPACT_ALIAS else []
            add(name, series, n, "sc", True, rule, node=node, aliases=aliases)


COMPLEX_OK = lambda s, n: (s == "A" and n == 1) or s in "BCGF" or (s == "D" and n % 2 == 0) \
    or (s == "E" and n in (7, 8))


def main():
    for s, n in types():
        {"A": type_a, "B": type_b, "C": type_c, "D": type_d}.get(s, lambda k: type_exceptional(s, k))(n)
    for s, n in types():
        add(f"Complex({s}{n})", s, n, "sc", COMPLEX_OK(s, n),
            "complex groups: -1 in the Weyl group", variant="complex")

    seen = set()
    for e in entries:
        for nm in [e["name"]] + e["aliases"]:
            assert nm not in seen, nm
            seen.add(nm)

    catalog = [{k: v for k, v in e.items() if not k.startswith("_")} for e in entries]
    expected = [{"name": e["name"], "expected": e["_expected"], "rule": e["_rule"]}
                for e in entries]
    (HERE / "catalog.json").write_text(json.dumps({"version": 1, "forms": catalog}, indent=1) + "\n")
    (HERE / "selfdual_expected.json").write_text(
        json.dumps({"version": 1, "rows": expected}, indent=1) + "\n")
    print(f"{len(catalog)} forms")


if __name__ == "__main__":
    main()
