#!/usr/bin/env python3
# Regenerates the .cert corpus. Run from the data/ directory.
import os

OUT = os.path.join(os.path.dirname(__file__), "certs")
os.makedirs(OUT, exist_ok=True)

def write(name, src, dst, rows, postiso=None, origin="published", notes=(),
          matrix="g_inverse"):
    lines = [f"source: {src}", f"target: {dst}", f"origin: {origin}"]
    for n in notes:
        lines.append(f"note: {n}")
    lines.append(f"matrix: {matrix}")
    for r in rows:
        lines.append(" ".join(r))
    if postiso:
        lines.append("postiso:")
        for r in postiso:
            lines.append(" ".join(r))
    with open(os.path.join(OUT, name + ".cert"), "w") as f:
        f.write("\n".join(lines) + "\n")

def diag(*entries):
    n = len(entries)
    return [[entries[i] if i == j else "0" for j in range(n)] for i in range(n)]

def tp(e):
    if e == 0:
        return "1"
    if e == 1:
        return "t"
    return f"t^{e}" if e > 0 else f"t^-{-e}"

def dt(*exps):
    return diag(*[tp(e) for e in exps])

def ident(n):
    return [["1" if i == j else "0" for j in range(n)] for i in range(n)]

# --- seven-dimensional corpus ---------------------------------------------

# swap of the second and third basis vector with a sign, undoing the
# relabelling the diagonal limits produce on two-chain targets
P23 = ident(7)
P23[1] = ["0", "0", "1", "0", "0", "0", "0"]
P23[2] = ["0", "-1", "0", "0", "0", "0", "0"]

write("gF_to_gE", "gF", "gE", [
    ["t", "0", "0", "0", "0", "0", "0"],
    ["0", "t^3", "0", "0", "0", "0", "0"],
    ["0", "0", "t^4", "0", "0", "0", "0"],
    ["0", "t^4/2", "0", "t^5", "0", "0", "0"],
    ["0", "0", "t^5/2", "0", "t^6", "0", "0"],
    ["0", "0", "0", "t^6/2", "0", "t^7", "0"],
    ["0", "0", "0", "0", "t^7/2", "0", "t^8"],
])
write("gF_to_gC", "gF", "gC", dt(-1, -2, -3, -4, -5, -6, -7))
write("gF_to_gD", "gF", "gD", dt(1, 3, 4, 5, 6, 7, 8))
g13m = dt(-1, -3, -4, -5, -6, -7, -9)
g13m[6][6] = "-t^-9"
write("gF_to_g13", "gF", "g13", g13m)

write("gE_to_gD", "gE", "gD", dt(-1, -3, -4, -5, -6, -7, -8))
write("gE_to_gB", "gE", "gB", dt(1, 4, 5, 6, 7, 8, 9))
write("gE_to_gA", "gE", "gA", dt(1, 5, 6, 7, 8, 9, 10))
write("gE_to_g19", "gE", "g19", dt(0, 0, -1, -1, -1, -1, -1), postiso=P23,
      notes=["the limit is the target after swapping the two generators"])
write("gE_to_g30", "gE", "g30", dt(-1, -3, -5, -6, -7, -8, -9), postiso=P23,
      notes=["the limit is the target after swapping the two generators"])

P567 = ident(7)  # cyclic relabelling x5 -> x6 -> x7 -> x5 of the limit
P567[4] = ["0", "0", "0", "0", "0", "0", "1"]
P567[5] = ["0", "0", "0", "0", "1", "0", "0"]
P567[6] = ["0", "0", "0", "0", "0", "1", "0"]
write("gE_to_g29", "gE", "g29", dt(2, 7, 9, 11, 13, 15, 16), postiso=P567,
      notes=["limit brackets are the chain with [y2,y3]=y7; relabel the top"])

write("gE_to_g20", "gE", "g20", [
    ["-t", "0", "0", "0", "0", "0", "0"],
    ["0", "-t^2", "0", "0", "0", "0", "0"],
    ["0", "0", "t^3", "0", "0", "0", "0"],
    ["0", "t^2", "0", "-t^4", "0", "0", "0"],
    ["0", "0", "-t^3", "0", "t^4", "0", "0"],
    ["0", "0", "0", "t^4", "t^4", "-t^5", "0"],
    ["0", "0", "0", "0", "0", "-t^5", "t^6"],
], postiso=[
    ["1", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "-1", "0", "0"],
    ["0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "1"],
], notes=["the limit is the target after renumbering the chain"])
write("gE_to_g21", "gE", "g21", [
    ["-t", "0", "0", "0", "0", "0", "0"],
    ["0", "-t^2", "0", "0", "0", "0", "0"],
    ["0", "0", "t^3", "0", "0", "0", "0"],
    ["0", "0", "0", "-t^4", "0", "0", "0"],
    ["0", "0", "0", "0", "t^5", "0", "0"],
    ["0", "0", "0", "0", "0", "-t^5", "0"],
    ["0", "0", "0", "0", "0", "-t^5", "t^6"],
], postiso=[
    ["1", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "1"],
], notes=["the limit is the target after swapping the two middle vectors"])
write("gE_to_g28", "gE", "g28", [
    ["t", "0", "0", "0", "0", "0", "0"],
    ["0", "t^3", "0", "0", "0", "0", "0"],
    ["0", "0", "t^3", "0", "0", "0", "0"],
    ["0", "-t", "-t^2", "t^3", "0", "0", "0"],
    ["0", "0", "0", "-t^2", "t^4", "0", "0"],
    ["0", "0", "0", "0", "-t^3", "t^5", "0"],
    ["0", "0", "0", "0", "0", "-t^4", "t^6"],
])

# the printed diagonal for this one has a transcription defect (the fourth
# entry makes [x1,x4] blow up); the weights below realize the limit, with
# the same generator swap as the other two-chain targets
write("gE_to_g31", "gE", "g31", dt(1, 4, 2, 3, 4, 5, 6), postiso=P23,
      origin="derived",
      notes=["replaces a defective printed diagonal (pole at [x1,x4])"])

write("gC_to_g22", "gC", "g22", [
    ["1", "0", "0", "0", "0", "0", "0"],
    ["0", "t^-1", "0", "0", "0", "0", "0"],
    ["0", "0", "t^-1", "0", "0", "0", "0"],
    ["0", "0", "0", "t^-1", "0", "0", "0"],
    ["0", "0", "0", "0", "t^-1", "0", "0"],
    ["0", "0", "0", "0", "0", "t^-1", "0"],
    ["0", "0", "0", "0", "0", "0", "-t^-2"],
])
write("gC_to_g25", "gC", "g25", dt(0, -1, -1, -1, -1, -2, -2))

write("g10_to_g24", "g10", "g24", [
    ["t^-1", "0", "0", "0", "0", "0", "0"],
    ["-t^2", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "t^-1", "0", "0", "0", "0"],
    ["0", "0", "0", "t^-2", "0", "0", "0"],
    ["0", "0", "0", "0", "t^-3", "0", "0"],
    ["0", "0", "0", "-t", "1", "t^-1", "0"],
    ["0", "0", "0", "0", "-2", "0", "t^-3"],
])

# --- six-dimensional filiform diagram --------------------------------------

write("n6_g6E_to_g6C", "g6E", "g6C", dt(-1, -1, -2, -3, -4, -5), origin="derived")
write("n6_g6E_to_g6D", "g6E", "g6D", dt(1, 2, 3, 4, 5, 6), origin="derived")
write("n6_g6C_to_g6B", "g6C", "g6B", [
    ["t", "0", "0", "0", "0", "0"],
    ["0", "t^3", "0", "0", "0", "0"],
    ["0", "0", "t^4", "0", "0", "0"],
    ["0", "t^3/2", "0", "t^5", "0", "0"],
    ["0", "0", "t^4/2", "0", "t^6", "0"],
    ["0", "0", "0", "t^5/2", "0", "t^7"],
], origin="derived")
write("n6_g6D_to_g6B", "g6D", "g6B", [
    ["1", "0", "0", "0", "0", "0"],
    ["-1/2*t^-1", "t", "0", "0", "0", "0"],
    ["0", "0", "t", "0", "0", "0"],
    ["0", "0", "0", "t", "0", "0"],
    ["0", "0", "0", "-1/2", "t", "0"],
    ["0", "0", "0", "0", "-1", "t"],
], origin="derived")
write("n6_g6B_to_g6A", "g6B", "g6A", dt(1, 4, 5, 6, 7, 8), origin="derived")

# --- five-dimensional diagram ----------------------------------------------

write("n5_g56_to_g53", "g5_6", "g5_3", [
    ["0", "-t", "0", "0", "0"],
    ["1", "0", "0", "0", "0"],
    ["0", "0", "0", "t", "0"],
    ["0", "0", "-1", "0", "0"],
    ["0", "0", "0", "0", "t"],
], origin="derived")
write("n5_g56_to_g54", "g5_6", "g5_4", dt(1, 1, 2, 3, 3), origin="derived")
write("n5_g56_to_g55", "g5_6", "g5_5", dt(1, 3, 4, 5, 6), origin="derived")
write("n5_g53_to_g51", "g5_3", "g5_1", [
    ["1", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "0", "t^-1", "0"],
    ["0", "0", "t^-1", "0", "0"],
    ["0", "0", "0", "0", "t^-1"],
], origin="derived")
write("n5_g53_to_n4c1", "g5_3", "n4_c1", [
    ["1", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "t"],
    ["0", "0", "1", "0", "0"],
    ["0", "0", "0", "1", "0"],
], origin="derived")
write("n5_g54_to_n4c1", "g5_4", "n4_c1", dt(1, 1, 2, 3, 2), origin="derived")
write("n5_g55_to_n4c1", "g5_5", "n4_c1", dt(1, 1, 2, 3, 3), origin="derived")
write("n5_g55_to_g52", "g5_5", "g5_2", [
    ["1", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "t^-1", "1", "0"],
    ["0", "0", "0", "0", "t^-1"],
    ["0", "0", "t^-3", "0", "0"],
], origin="derived")
write("n5_g51_to_n3c2", "g5_1", "n3_c2", [
    ["1", "0", "0", "0", "0"],
    ["0", "0", "0", "t", "0"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "1"],
    ["0", "0", "1", "0", "0"],
], origin="derived")
write("n5_n4c1_to_g52", "n4_c1", "g5_2", [
    ["1", "0", "0", "0", "0"],
    ["0", "t", "0", "0", "0"],
    ["0", "0", "1", "t", "0"],
    ["0", "0", "0", "0", "1"],
    ["0", "0", "1", "0", "0"],
], origin="derived",
    notes=["the horizontal arrow of the printed diagram"])
write("n5_n4c1_to_n3c2", "n4_c1", "n3_c2", dt(1, 1, 2, 2, 0), origin="derived")
write("n5_g52_to_n3c2", "g5_2", "n3_c2", [
    ["1", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "0", "t", "0"],
    ["0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "1"],
], origin="derived")
write("n5_n3c2_to_c5", "n3_c2", "c5", dt(1, 1, 1, 1, 1), origin="derived")

# --- three-dimensional closures --------------------------------------------

write("l3_n3_to_c3", "n3", "c3", dt(1, 1, 1), origin="derived")
write("l3_r31_to_c3", "r3_1", "c3", dt(1, 1, 1), origin="derived")
write("l3_r2c1_to_n3", "r2_c1", "n3", [
    ["t", "0", "0"],
    ["0", "t", "t^2"],
    ["0", "t", "0"],
], origin="derived")
write("l3_r3_to_n3", "r3", "n3", [
    ["t", "0", "0"],
    ["0", "0", "t^2"],
    ["0", "t", "t^2"],
], origin="derived")
write("l3_r3_to_r31", "r3", "r3_1", dt(0, 0, 1), origin="derived",
      notes=["contracts the off-diagonal of the adjoint block"])
write("l3_r3a_half_to_n3", "r3a (a=1/2)", "n3", [
    ["t", "0", "0"],
    ["0", "1", "t"],
    ["0", "1", "1/2*t"],
], origin="derived")
write("l3_r3a_2_to_n3", "r3a (a=2)", "n3", [
    ["t", "0", "0"],
    ["0", "1", "t"],
    ["0", "1", "2*t"],
], origin="derived")
write("l3_r3m1_to_n3", "r3_m1", "n3", [
    ["t", "0", "0"],
    ["0", "1", "t"],
    ["0", "1", "-t"],
], origin="derived")
write("l3_sl2_to_r3m1", "sl2", "r3_m1", [
    ["0", "t", "0"],
    ["0", "0", "t"],
    ["1/2", "0", "0"],
], origin="derived")

# --- four-dimensional essential arrows --------------------------------------

write("l4_g4_35_to_n4", "l4g4 (a=3, b=5)", "n4", [
    ["t", "0", "0", "0"],
    ["0", "0", "0", "t^2"],
    ["0", "0", "t", "8*t^2"],
    ["0", "1", "5*t", "25*t^2"],
], origin="derived")
write("l4_n4_to_n3c1", "n4", "n3_c1", dt(1, 1, 2, 2), origin="derived")
write("l4_n3c1_to_c4", "n3_c1", "c4", dt(1, 1, 1, 1), origin="derived")
write("l4_g4_31_to_g2_3", "l4g4 (a=3, b=1)", "l4g2 (a=3)", [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "1"],
    ["0", "0", "-1/2*t", "2"],
    ["0", "0", "t", "0"],
], postiso=[
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "1/2"],
    ["0", "0", "0", "1"],
], origin="derived")
write("l4_g2_3_to_n3c1", "l4g2 (a=3)", "n3_c1", [
    ["t", "0", "0", "0"],
    ["0", "1", "t", "0"],
    ["0", "0", "t", "1"],
    ["0", "1", "3*t", "0"],
], origin="derived")
write("l4_g4_00_to_r2c2", "l4g4 (a=0, b=0)", "r2_c2", [
    ["1", "0", "0", "0"],
    ["0", "1", "1", "0"],
    ["0", "0", "-1", "0"],
    ["0", "0", "0", "t"],
], origin="derived")
write("l4_r2c2_to_n3c1", "r2_c2", "n3_c1", [
    ["t", "0", "0", "0"],
    ["0", "1", "t", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "0", "1"],
], origin="derived")
write("l4_g2_1_to_g1", "l4g2 (a=1)", "l4g1", dt(0, 0, 0, 1), origin="derived")
write("l4_g1_to_c4", "l4g1", "c4", dt(1, 1, 1, 1), origin="derived")
write("l4_g5_1_to_g3", "l4g5 (a=1)", "l4g3", dt(0, 0, 1, 1), origin="derived")
write("l4_g3_to_g2_2", "l4g3", "l4g2 (a=2)", dt(0, 1, 1, 1), postiso=[
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["0", "0", "1", "1"],
    ["0", "0", "0", "1"],
], origin="derived")
write("l4_g5_2_to_g4_23", "l4g5 (a=2)", "l4g4 (a=2, b=3)", [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "-1/2"],
    ["0", "0", "1", "-1"],
    ["0", "0", "0", "t^-1"],
], origin="derived")
write("l4_sl2c1_to_g5_m1", "sl2_c1", "l4g5 (a=-1)", [
    ["1", "0", "0", "0"],
    ["0", "2*t", "t", "0"],
    ["0", "0", "t", "0"],
    ["1", "0", "0", "-2*t^2"],
], origin="derived")
write("l4_r2r2_to_g4_30", "r2_r2", "l4g4 (a=3, b=0)", [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"],
    ["3", "0", "t", "0"],
    ["0", "0", "0", "1"],
], postiso=[
    ["1", "0", "0", "0"],
    ["0", "1", "1/3", "1/2"],
    ["0", "0", "-1/3", "1"],
    ["0", "0", "1", "0"],
], origin="derived")
write("l4_r2r2_to_g5_0", "r2_r2", "l4g5 (a=0)", [
    ["1", "0", "-t", "0"],
    ["0", "1", "0", "t"],
    ["1", "0", "t", "0"],
    ["0", "1", "0", "-t"],
], postiso=[
    ["1", "0", "0", "0"],
    ["0", "1", "-1", "0"],
    ["0", "0", "1", "0"],
    ["0", "0", "0", "1"],
], origin="derived")

print(f"wrote {len(os.listdir(OUT))} files to {OUT}")
