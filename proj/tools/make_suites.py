#!/usr/bin/env python3
"""Regenerates suites/*.json. Points are fixed; rerunning gives identical files."""

import json
import math
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "suites"


def c(re, im=0.0):
    return [float(re), float(im)]


def case(theorem, s1, s2, criterion, tol, label, relative=False, **params):
    d = {"theorem": theorem, "s1": s1, "s2": s2, "criterion": criterion, "tolerance": tol, "label": label}
    if relative:
        d["relative"] = True
    if params:
        d["params"] = params
    return d


def refuse(theorem, s1, s2, reason, label, **params):
    d = {"theorem": theorem, "s1": s1, "s2": s2, "expect": "refuse", "reason": reason, "criterion": 11,
         "label": label}
    if params:
        d["params"] = params
    return d


def classical():
    out = []
    # Riemann: Re s in (-2.5, 3.5), |Im s| <= 10, away from s = 0, 1.
    for k in range(20):
        sigma = -2.4 + 5.8 * k / 19
        t = -10 + 20 * ((7 * k) % 20) / 19
        out.append(case("riemann", c(sigma, t), 0.0, 1, 1e-9, f"riemann #{k}"))
    alphas = [0.3, 0.5, 0.7, 0.25, 0.9]
    for k in range(20):
        sigma = -2.5 + 3.0 * k / 19
        t = -9.5 + 19 * ((3 * k) % 20) / 19
        out.append(case("hurwitz", c(sigma, t), 0.0, 1, 1e-9, f"hurwitz #{k}", alpha=alphas[k % 5]))
    return out


def f_relation():
    out = []
    kinds = [("const", "const"), ("exp:0.3", "exp"), ("delta:5", "delta5")]
    for seq, name in kinds:
        for k in range(20):
            s1 = c(-2.6 + 0.15 * (k % 5), -1.5 + 0.75 * (k // 5))
            s2 = c(3.4 + 0.1 * (k % 3), 0.2 * ((k % 4) - 1.5))
            out.append(case("F-relation", s1, s2, 3, 1e-9, f"F-relation {name} #{k}", relative=True, alpha=0.3,
                            sign=1 if k % 2 == 0 else -1, seq=seq))
    return out


def thm5_delta():
    out = []
    pts = [(c(-1.5), c(3.2)), (c(-0.6, 0.8), c(2.5, -0.3))]
    for n in (1, 2, 3, 5, 7):
        for j, (s1, s2) in enumerate(pts):
            out.append(case("T5", s1, s2, 4, 1e-8, f"T5 delta{n} #{j}", relative=True, alpha=0.5,
                            seq=f"delta:{n}"))
    return out


def thm2():
    out = []
    pts = [(c(-1.5), c(3.1)), (c(-0.5, 0.7), c(2.8)), (c(-2.2, -0.4), c(3.6, 0.3)), (c(0.3, 1.2), c(2.4, -0.5)),
           (c(-1.1, 2.0), c(3.3, -1.0))]
    for j, (s1, s2) in enumerate(pts):
        out.append(case("T2", s1, s2, 5, 1e-8, f"T2 symmetric #{j}", alpha=1.0, beta=1.0, omega=2.0))
    for j, (s1, s2) in enumerate(pts):
        out.append(case("T2", s1, s2, 5, 1e-8, f"T2 general #{j}", alpha=0.3, beta=0.7, omega=1.0))
    return out


def thm3():
    out = []
    for w1, w2, tag in ((c(1), c(1.5), "(1,1.5)"), (c(1, 0.3), c(1), "(1+0.3i,1)")):
        for k in (1, -1):
            total = 2 * k + 1
            for j in range(5):
                s1 = c(0.4 - 0.3 * j + (0.0 if k == 1 else -1.0), 1.1 - 0.5 * j)
                s2 = c(total - s1[0], -s1[1])
                out.append(case("T3", s1, s2, 6, 1e-7, f"T3 k={k} {tag} #{j}", omega1=w1, omega2=w2))
    return out


def thm4():
    out = []
    for j, s1 in enumerate((c(1.3, 0.7), c(2.2, -0.4), c(0.8, 1.5))):
        s2 = c(5 - s1[0], -s1[1])
        out.append(case("T4", s1, s2, 7, 1e-7, f"T4 chi4 #{j}", a1="char:4:1", a2="char:4:1"))
    return out


def thm6():
    return [case("T6", c(-6, 0.3), c(5.2), 8, 1e-6, "T6 Delta #0", relative=True, seq="delta-form"),
            case("T6", c(-5.5), c(4.7, 0.4), 8, 1e-6, "T6 Delta #1", relative=True, seq="delta-form")]


def oracle():
    sets = [((1.5, 2.5), "const", 1.0, 1.0), ((1.2, 2.2), "delta:2", 0.5, 1.2), ((1.3, 2.4), "exp:0.3", 0.7, 1.0),
            ((0.8, 2.1), "delta:1", 0.25, 0.9), ((1.7, 2.6), "const", 0.5, 1.5)]
    return [case("oracle", c(s[0]), c(s[1]), 9, 1e-6, f"oracle #{j}", relative=True, seq=seq, alpha=a, omega=w)
            for j, (s, seq, a, w) in enumerate(sets)]


def modular():
    out = []
    for j in range(10):
        th = math.pi / 6 + (2 * math.pi / 3) * j / 9
        out.append(case("modular", 0.0, 0.0, 10, 1e-9, f"modular #{j}", seq="delta-form",
                        tau=c(math.cos(th), math.sin(th))))
    return out


def refusals():
    return [
        refuse("T5", c(5), c(0.1), "Re s2 > (kappa+1)/2", "T5 outside convergence region"),
        refuse("T5", c(-1.5), c(2.2), "Re(s1+s2) > 1", "T5 with a finite sequence below its abscissa",
               seq="delta:2"),
        refuse("T1", c(-0.5), c(2.6), "|arg omega| < pi/2", "F route with omega on the wrong side",
               alpha=0.5, beta=0.25, omega=c(-1, 0.2)),
        refuse("T3", c(0.4), c(2.0), "s1 + s2", "T3 off the symmetry hyperplane", omega1=c(1), omega2=c(1.5)),
        refuse("T4", c(1.3, 0.7), c(3.7, -0.7), "parity", "T4 with mixed parity",
               a1="char:5:1", a2="char:5:2"),
        refuse("T6", c(0.5), c(5.2), "sigma1 < 0", "T6 outside region", seq="delta-form"),
        refuse("oracle", c(-0.5), c(3.0), "sigma1 > 0", "oracle with sigma1 <= 0", seq="const"),
        refuse("oracle", c(1.5), c(2.5), "|arg omega| <= pi/4", "oracle with steep omega", seq="const",
               omega=c(1, 1.5)),
        refuse("modular", 0.0, 0.0, "Im tau", "cusp form too close to the real axis", seq="delta-form",
               tau=c(0.1, 5e-4)),
        refuse("hurwitz", c(1.0), 0.0, "pole", "Hurwitz zeta at s = 1", alpha=0.5),
    ]


def main():
    OUT.mkdir(exist_ok=True)
    suites = {
        "acceptance": ("every functional-equation criterion with its tolerance",
                       classical() + f_relation() + thm5_delta() + thm2() + thm3() + thm4() + thm6() + oracle()
                       + modular()),
        "default": ("Theorem 5 delta-sequence checks", thm5_delta()),
        "refusals": ("points outside the documented regions; each must be refused", refusals()),
    }
    for name, (desc, cases) in suites.items():
        doc = {"name": name, "description": desc, "cases": cases}
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print(f"{name}: {len(cases)} cases")


if __name__ == "__main__":
    main()
