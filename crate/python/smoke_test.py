"""Quick check that the extension module imports and agrees with known values.

Build it first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import json
import sys

import adinkra_py as ak


def check(label, got, want):
    ok = got == want
    print(f"{'ok  ' if ok else 'FAIL'} {label}: {got!r}")
    if not ok:
        print(f"     expected {want!r}")
    return ok


def main():
    results = []

    d4 = ak.BinaryCode.named("d4")
    results.append(check("d4 dimension", (d4.length, d4.dimension), (4, 1)))
    results.append(check("d4 doubly even", d4.is_doubly_even(), True))
    results.append(check("text round trip", ak.BinaryCode.from_text(d4.to_text()) == d4, True))

    a = ak.Adinkra.from_code(d4)
    results.append(check("d4 vertices", a.num_vertices, 8))
    results.append(check("d4 profiles", a.profiles(), ("(1^2,2^2,6^2,12^2)", "(1,2^2,4)")))
    results.append(check("json round trip", ak.Adinkra.from_json(a.to_json()) == a, True))
    results.append(check("signature classes", len(a.signature_classes()), 2))

    e8 = ak.Adinkra.from_code(ak.BinaryCode.named("e8"))
    results.append(check("e8 laplacian profile", ak.snf_profile(e8.laplacian()), "(1^2,2^6,28^6,56^2)"))
    switched = e8.vertex_switch([0, 5, 9])
    results.append(check("switching keeps the profile", switched.profiles(), e8.profiles()))

    cube = ak.Adinkra.hypercube(5)
    results.append(check("2-corank of the 5-cube", ak.p_corank(cube.laplacian(), 2), 16))

    m = [[2, 4, 4], [-6, 6, 12]]
    diag, b, c = ak.snf_with_witnesses(m)
    bmc = [[sum(b[i][k] * m[k][l] * c[l][j] for k in range(2) for l in range(3)) for j in range(3)] for i in range(2)]
    results.append(check("B M C is diagonal", bmc, [[2, 0, 0], [0, 6, 0]]))
    results.append(check("big determinant", ak.det([[10**30, 1], [1, 10**30]]), 10**60 - 1))

    # diag(x - 1, x^2 + x + 1) and x^2 + x + 1 = (x - 1)^2 over F_3
    _, mult = ak.snf_fpx([[[2, 1], [0]], [[0], [1, 1, 1]]], 3)
    results.append(check("(x-1)-multiplicity over F_3", mult, 3))

    try:
        ak.Adinkra.from_code(ak.BinaryCode(4, ["1100"]))
        results.append(check("non doubly even code raises", False, True))
    except ak.InfeasibleError as e:
        results.append(check("non doubly even code raises", "doubly even" in str(e), True))

    table = ak.reproduce_table(6, 2)
    results.append(check("table rows for N <= 6", sorted({r["code"] for r in table}),
                         sorted(["t", "t2", "t3", "t4", "d4", "t5", "d4+t", "t6", "d4+t2", "d6"])))

    reports = ak.run_suite("oddprime", [ak.BinaryCode.named("d6")])
    results.append(check("odd prime suite on d6", [(r["theorem"], r["pass"]) for r in reports], [("oddprime d6 p=3", True)]))
    json.dumps(reports)

    failed = results.count(False)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
