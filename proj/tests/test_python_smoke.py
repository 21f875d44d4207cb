"""Smoke tests for the python bindings; exact values cross as "p/q" strings."""

import sys
from fractions import Fraction

import fgc


def check(name, got, want):
    if got != want:
        print(f"FAIL {name}: expected {want!r}, got {got!r}")
        return False
    print(f"ok   {name}")
    return True


def main():
    ok = True

    c0 = fgc.OrderedSet.cyclic([0])
    c1 = fgc.OrderedSet.cyclic([0, 1])
    c2 = fgc.OrderedSet.cyclic([0, 2, 1])
    s = fgc.ZSimplex([fgc.OrderedMono.inclusion(c0, c1), fgc.OrderedMono.inclusion(c1, c2)])
    ok &= check("worked 2-simplex", Fraction(fgc.c_z(s, 1)), Fraction(1, 12))
    ok &= check("tuple sign", fgc.tuple_sign([0, 1, 2], c2), -1)

    g = fgc.FatGraph({0: [0, 1, 2, 3]}, {0: 1, 1: 0, 2: 3, 3: 2})
    ok &= check("figure-eight validates", fgc.validate(g), [])
    top = fgc.topology(g)
    ok &= check("figure-eight topology", (top["euler_char"], top["genus"], top["punctures"]), (-1, 0, 3))
    ok &= check("c_Fat^0 = -2 chi", Fraction(fgc.c_fat_0(g)), Fraction(2))

    round_trip = fgc.parse_graph(fgc.graph_to_json(g))
    ok &= check("graph json round-trip", fgc.topology(round_trip), top)

    ok &= check("|A_5|", fgc.enumerate_chord_sets(5), 11)
    ok &= check("chains n=5", fgc.maximal_chain_count(5), 10)
    ok &= check("boundary consistency n=5", fgc.boundary_consistency(5), None)
    ok &= check("|B_1|", fgc.b_chain_count(1), 10)

    bk = fgc.eval_bk(1)
    ok &= check("Witten constant k=1", (bk["match"], Fraction(bk["exact"])), (True, Fraction(-1, 6)))
    kap = fgc.kappa_constant(1)
    ok &= check("kappa k=1", (kap["match"], Fraction(kap["exact"])), (True, Fraction(1, 12)))
    ok &= check("Kontsevich {1^1}", Fraction(fgc.kontsevich_coeff([(1, 1)])[1]), Fraction(12))

    suite = fgc.verify_cyclic_cocycle(1, 100, 7, 2)
    ok &= check("cyclic cocycle suite", suite["pass"], True)

    exact = Fraction(fgc.simplex_integral_exact(1, [1, 1, 1]))
    grid = fgc.simplex_integral_grid(1, [1, 1, 1])
    ok &= check("simplex integral exact", exact, Fraction(1, 12))
    ok &= check("grid close to exact", abs(grid["estimate"] - float(exact)) < 1e-6, True)
    euler = fgc.euler_2form(s)
    ok &= check("euler form", abs(euler["estimate"] - 1 / 12) < 1e-6, True)

    mc1 = fgc.simplex_integral_mc(1, [1, 1, 1], 1 << 17, 42, 1)
    mc4 = fgc.simplex_integral_mc(1, [1, 1, 1], 1 << 17, 42, 4)
    ok &= check("thread-count invariance", mc1["estimate"], mc4["estimate"])

    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
