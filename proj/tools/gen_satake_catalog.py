#!/usr/bin/env python3
"""Writes data/satake_catalog.txt: Satake diagrams of the real forms used by properlie.

Nodes are numbered 1..n in Bourbaki order. Run from the repository root.
"""


def fmt(nodes):
    return ",".join(str(i) for i in nodes) if nodes else "-"


def fmt_arrows(arrows):
    return ",".join(f"{a}-{b}" for a, b in arrows) if arrows else "-"


def rows():
    # type A_n
    for n in range(1, 10):
        yield f"sl({n + 1},R)", f"A{n}", [], [], f"A{n}", n
        m = n + 1
        if m % 2 == 0 and m >= 4:
            k = m // 2
            yield f"su*({m})", f"A{n}", list(range(1, n + 1, 2)), [], f"A{k - 1}", k - 1
        for p in range(1, m // 2 + 1):
            q = m - p
            if p < q:
                white = list(range(1, p + 1)) + list(range(n - p + 1, n + 1))
                black = [i for i in range(1, n + 1) if i not in white]
                arrows = [(i, n + 1 - i) for i in range(1, p + 1)]
                yield f"su({p},{q})", f"A{n}", black, arrows, f"BC{p}", p
            else:
                arrows = [(i, 2 * p - i) for i in range(1, p)]
                yield f"su({p},{p})", f"A{n}", [], arrows, f"C{p}" if p > 1 else "A1", p
        yield f"su({m})", f"A{n}", list(range(1, n + 1)), [], "0", 0
    # type B_n
    for n in range(2, 9):
        for p in range(1, n + 1):
            q = 2 * n + 1 - p
            black = list(range(p + 1, n + 1))
            rt = f"B{p}" if p > 1 else "A1"
            yield f"so({p},{q})", f"B{n}", black, [], rt, p
        yield f"so({2 * n + 1})", f"B{n}", list(range(1, n + 1)), [], "0", 0
    # type C_n
    for n in range(2, 9):
        yield f"sp({n},R)", f"C{n}", [], [], f"C{n}", n
        for p in range(1, n // 2 + 1):
            q = n - p
            black = [i for i in range(1, n + 1) if i % 2 == 1 or i > 2 * p]
            rt = (f"C{p}" if p > 1 else "A1") if p == q else f"BC{p}"
            yield f"sp({p},{q})", f"C{n}", black, [], rt, p
        yield f"sp({n})", f"C{n}", list(range(1, n + 1)), [], "0", 0
    # type D_n
    yield "so(3,3)", "D3", [], [], "A3", 3
    for n in range(4, 9):
        for p in range(1, n - 1):
            black = list(range(p + 1, n + 1))
            rt = f"B{p}" if p > 1 else "A1"
            yield f"so({p},{2 * n - p})", f"D{n}", black, [], rt, p
        yield f"so({n - 1},{n + 1})", f"D{n}", [], [(n - 1, n)], f"B{n - 1}", n - 1
        yield f"so({n},{n})", f"D{n}", [], [], f"D{n}", n
        if n % 2 == 0:
            k = n // 2
            yield f"so*({2 * n})", f"D{n}", list(range(1, n, 2)), [], f"C{k}", k
        else:
            k = (n - 1) // 2
            yield f"so*({2 * n})", f"D{n}", list(range(1, n - 1, 2)), [(n - 1, n)], f"BC{k}", k
        yield f"so({2 * n})", f"D{n}", list(range(1, n + 1)), [], "0", 0
    # exceptional
    yield "e6(6)", "E6", [], [], "E6", 6
    yield "e6(2)", "E6", [], [(1, 6), (3, 5)], "F4", 4
    yield "e6(-14)", "E6", [3, 4, 5], [(1, 6)], "BC2", 2
    yield "e6(-26)", "E6", [2, 3, 4, 5], [], "A2", 2
    yield "e6(-78)", "E6", list(range(1, 7)), [], "0", 0
    yield "e7(7)", "E7", [], [], "E7", 7
    yield "e7(-5)", "E7", [2, 5, 7], [], "F4", 4
    yield "e7(-25)", "E7", [2, 3, 4, 5], [], "C3", 3
    yield "e7(-133)", "E7", list(range(1, 8)), [], "0", 0
    yield "e8(8)", "E8", [], [], "E8", 8
    yield "e8(-24)", "E8", [2, 3, 4, 5], [], "F4", 4
    yield "e8(-248)", "E8", list(range(1, 9)), [], "0", 0
    yield "f4(4)", "F4", [], [], "F4", 4
    yield "f4(-20)", "F4", [1, 2, 3], [], "BC1", 1
    yield "f4(-52)", "F4", [1, 2, 3, 4], [], "0", 0
    yield "g2(2)", "G2", [], [], "G2", 2
    yield "g2(-14)", "G2", [1, 2], [], "0", 0


def main():
    out = [
        "# Satake diagrams of real forms.",
        "# name | complex_type | rank | black_nodes | arrows | restricted_type | real_rank",
        "# Nodes use Bourbaki numbering from 1; '-' marks an empty list; restricted_type 0 is the",
        "# rank-zero system of a compact form. The restricted type and real rank are recomputed",
        "# on load and must agree with the last two fields.",
    ]
    for name, ctype, black, arrows, rtype, rank in rows():
        out.append(f"{name} | {ctype} | {ctype.lstrip('ABCDEFG')} | {fmt(black)} | {fmt_arrows(arrows)} | {rtype} | {rank}")
    with open("data/satake_catalog.txt", "w") as f:
        f.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
