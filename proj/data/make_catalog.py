#!/usr/bin/env python3
# Regenerates the .alg catalog files. Run from the data/ directory.
import os

OUT = os.path.join(os.path.dirname(__file__), "catalog")
os.makedirs(OUT, exist_ok=True)

def write(name, lines):
    with open(os.path.join(OUT, name + ".alg"), "w") as f:
        f.write("\n".join(lines) + "\n")

def chain7(upto=6):
    # [x1, xi] = x_{i+1} for 2 <= i <= upto
    return [f"bracket 1 {i} = 1 x{i+1}" for i in range(2, upto + 1)]

# --- seven-dimensional catalog: indecomposable, class 5 and 6 -------------

seven = {
  "gI": dict(alias=["g_I", "g_{7,1.1(i_lambda)}"], params="a (exclude: 0)", type1=True,
             note=["family member a = 0 coincides with gG"],
             extra=["bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                    "bracket 2 5 = (1-a) x7", "bracket 3 4 = a x7"], chain=True),
  "gF": dict(alias=["g_F", "g_{7,0.1}"], type1=True,
             extra=["bracket 2 3 = 1 x6", "bracket 2 4 = 1 x7",
                    "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"], chain=True),
  "gH": dict(alias=["g_H", "g_{7,0.2}"], type1=True,
             extra=["bracket 2 3 = 1 x5 + 1 x7", "bracket 2 4 = 1 x6",
                    "bracket 2 5 = 1 x7"], chain=True),
  "g1": dict(alias=["g_1", "g_{7,0.4(lambda)}"], params="l", excluded=True,
             extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                    "bracket 1 4 = 1 x6 + l x7", "bracket 1 5 = 1 x7",
                    "bracket 1 6 = 1 x7", "bracket 2 3 = 1 x5",
                    "bracket 2 4 = 1 x7", "bracket 2 5 = 1 x6",
                    "bracket 3 5 = 1 x7"]),
  "g2": dict(alias=["g_2", "g_{7,0.5}"], excluded=True,
             extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                    "bracket 1 4 = 1 x6 + 1 x7", "bracket 1 6 = 1 x7",
                    "bracket 2 3 = 1 x5", "bracket 2 5 = 1 x6",
                    "bracket 3 5 = 1 x7"]),
  "g3": dict(alias=["g_3", "g_{7,0.6}"], type1=True,
             extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                    "bracket 1 4 = 1 x7", "bracket 1 5 = 1 x6",
                    "bracket 1 6 = 1 x7", "bracket 2 3 = 1 x5",
                    "bracket 2 4 = 1 x6", "bracket 2 5 = 1 x7",
                    "bracket 3 4 = 1 x7"]),
  "g4": dict(alias=["g_4", "g_{7,0.7}"], type1=True,
             extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                    "bracket 1 4 = 1 x5", "bracket 1 6 = 1 x7",
                    "bracket 2 3 = 1 x5 + 1 x6", "bracket 2 4 = 1 x7",
                    "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"]),
  "g5": dict(alias=["g_5", "g_{7,0.8}"], excluded=True,
             extra=["bracket 1 2 = 1 x4", "bracket 1 3 = 1 x7",
                    "bracket 1 4 = 1 x5", "bracket 1 5 = 1 x6",
                    "bracket 2 3 = 1 x6", "bracket 2 4 = 1 x6",
                    "bracket 2 6 = 1 x7", "bracket 4 5 = -1 x7"]),
  "g6": dict(alias=["g_6", "g_{7,1.1(iii)}"], type1=True,
             extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                    "bracket 1 4 = 1 x5", "bracket 1 5 = 1 x6",
                    "bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                    "bracket 2 5 = -1 x7", "bracket 3 4 = 1 x7"]),
  "g7": dict(alias=["g_7", "g_{7,1.1(v)}"], type1=True,
             extra=["bracket 1 3 = 1 x4", "bracket 1 4 = 1 x5",
                    "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                    "bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                    "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"]),
  "gC": dict(alias=["g_C", "g_{7,1.1(ii)}"], type1=True,
             extra=["bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"], chain=True),
  "gG": dict(alias=["g_G", "g_{7,1.1(i_0)}"], type1=True,
             extra=["bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                    "bracket 2 5 = 1 x7"], chain=True),
  "gE": dict(alias=["g_E", "g_{7,0.3}"], type1=True,
             extra=["bracket 2 3 = 1 x6 + 1 x7", "bracket 2 4 = 1 x7"], chain=True),
  "g8": dict(alias=["g_8", "g_{7,1.01(i)}"], type1=True,
             extra=["bracket 1 3 = 1 x4", "bracket 1 4 = 1 x5",
                    "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                    "bracket 2 3 = 1 x5 + 1 x7", "bracket 2 4 = 1 x6",
                    "bracket 2 5 = 1 x7"]),
  "g9": dict(alias=["g_9", "g_{7,1.02}"], type1=True,
             extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4 + 1 x6",
                    "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                    "bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                    "bracket 3 4 = 1 x7"]),
  "g10": dict(alias=["g_10", "g_{7,1.03}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x6", "bracket 2 4 = 1 x7",
                     "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"]),
  "g11": dict(alias=["g_11", "g_{7,1.1(iv)}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                     "bracket 2 5 = 1 x7", "bracket 3 4 = 1 x7"]),
  "g12": dict(alias=["g_12", "g_{7,1.1(vi)}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5", "bracket 2 5 = 1 x7",
                     "bracket 3 4 = -1 x7"]),
  "g13": dict(alias=["g_13", "g_{7,1.5}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5", "bracket 1 5 = 1 x6",
                     "bracket 2 3 = 1 x6", "bracket 2 5 = -1 x7",
                     "bracket 3 4 = 1 x7"]),
  "g14": dict(alias=["g_14", "g_{7,1.10}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5", "bracket 2 5 = 1 x7"]),
  "g15": dict(alias=["g_15", "g_{7,1.11}"], type1=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x6", "bracket 2 4 = 1 x6",
                     "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"]),
  "g16": dict(alias=["g_16", "g_{7,1.14}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5 + 1 x6", "bracket 2 3 = 1 x5",
                     "bracket 2 5 = -1 x7", "bracket 3 4 = 1 x7"]),
  "g17": dict(alias=["g_17", "g_{7,1.17}"], excluded=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5", "bracket 2 5 = 1 x6",
                     "bracket 2 6 = 1 x7", "bracket 3 4 = -1 x7",
                     "bracket 3 5 = 1 x7"]),
  "g18": dict(alias=["g_18", "g_{7,1.21}"], excluded=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 2 3 = 1 x6",
                     "bracket 2 4 = 1 x6", "bracket 2 6 = 1 x7",
                     "bracket 4 5 = -1 x7"]),
  "gD": dict(alias=["g_D", "g_{7,1.4}"], type1=True,
             extra=["bracket 2 3 = 1 x6", "bracket 2 4 = 1 x7"], chain=True),
  "gB": dict(alias=["g_B", "g_{7,1.6}"], type1=True,
             extra=["bracket 2 3 = 1 x7"], chain=True),
  "g19": dict(alias=["g_19", "g_{7,1.01(ii)}"], type1=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x6 + 1 x7", "bracket 3 4 = -1 x7"]),
  "g20": dict(alias=["g_20", "g_{7,1.12}"], type1=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x7", "bracket 2 4 = 1 x6",
                     "bracket 2 5 = 1 x7"]),
  "g21": dict(alias=["g_21", "g_{7,1.13}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x6", "bracket 1 5 = 1 x7",
                     "bracket 1 6 = 1 x7", "bracket 2 3 = 1 x5",
                     "bracket 2 4 = 1 x7"]),
  "g22": dict(alias=["g_22", "g_{7,2.4}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5", "bracket 1 5 = 1 x6",
                     "bracket 2 5 = -1 x7", "bracket 3 4 = 1 x7"]),
  "g23": dict(alias=["g_23", "g_{7,2.5}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                     "bracket 3 4 = 1 x7"]),
  "g24": dict(alias=["g_24", "g_{7,2.6}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5", "bracket 2 3 = 1 x6",
                     "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"]),
  "g25": dict(alias=["g_25", "g_{7,2.10}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x5", "bracket 1 6 = 1 x7",
                     "bracket 2 5 = 1 x7", "bracket 3 4 = -1 x7"]),
  "g26": dict(alias=["g_26", "g_{7,2.13}"], excluded=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 2 3 = 1 x6",
                     "bracket 2 6 = 1 x7", "bracket 4 5 = -1 x7"]),
  "g27": dict(alias=["g_27", "g_{7,2.14}"], type1=True,
              extra=["bracket 1 3 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                     "bracket 2 5 = 1 x7"]),
  "gA": dict(alias=["g_A", "g_{7,2.3}"], type1=True, extra=[], chain=True),
  "g28": dict(alias=["g_28", "g_{7,1.15}"], type1=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x7", "bracket 2 4 = 1 x7"]),
  "g29": dict(alias=["g_29", "g_{7,2.7}"], type1=True,
              extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4",
                     "bracket 1 4 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x5"]),
  "g30": dict(alias=["g_30", "g_{7,2.15}"], type1=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x6", "bracket 3 4 = -1 x7"]),
  "g31": dict(alias=["g_31", "g_{7,2.16}"], type1=True,
              extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5",
                     "bracket 1 5 = 1 x6", "bracket 1 6 = 1 x7",
                     "bracket 2 3 = 1 x7"]),
}

for name, spec in seven.items():
    lines = [f"name: {name}"]
    for a in spec.get("alias", []):
        lines.append(f"alias: {a}")
    lines.append("dim: 7")
    if spec.get("params"):
        lines.append(f"params: {spec['params']}")
    flags = []
    if spec.get("type1"):
        flags.append("type1")
    if spec.get("excluded"):
        flags.append("excluded")
    if flags:
        lines.append("flags: " + " ".join(flags))
    for nt in spec.get("note", []):
        lines.append(f"note: {nt}")
    if spec.get("chain"):
        lines += chain7()
    lines += spec["extra"]
    write(name, lines)

# --- six-dimensional filiform algebras ------------------------------------

def chain6():
    return [f"bracket 1 {i} = 1 x{i+1}" for i in range(2, 6)]

six = {
  "g6A": dict(alias=["g_{6,A}"], extra=[]),
  "g6B": dict(alias=["g_{6,B}"], extra=["bracket 2 3 = 1 x6"]),
  "g6C": dict(alias=["g_{6,C}"],
              extra=["bracket 2 5 = 1 x6", "bracket 3 4 = -1 x6"]),
  "g6D": dict(alias=["g_{6,D}"],
              extra=["bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6"]),
  "g6E": dict(alias=["g_{6,E}"],
              extra=["bracket 2 3 = 1 x5", "bracket 2 4 = 1 x6",
                     "bracket 2 5 = 1 x6", "bracket 3 4 = -1 x6"]),
}
for name, spec in six.items():
    lines = [f"name: {name}"] + [f"alias: {a}" for a in spec["alias"]]
    lines.append("dim: 6")
    lines += chain6() + spec["extra"]
    write(name, lines)

# --- five-dimensional nilpotent orbits ------------------------------------

five = {
  "g5_1": dict(alias=["g_{5,1}"], extra=["bracket 1 3 = 1 x5", "bracket 2 4 = 1 x5"]),
  "g5_2": dict(alias=["g_{5,2}"], extra=["bracket 1 2 = 1 x4", "bracket 1 3 = 1 x5"]),
  "g5_3": dict(alias=["g_{5,3}"],
               extra=["bracket 1 2 = 1 x4", "bracket 1 4 = 1 x5", "bracket 2 3 = 1 x5"]),
  "g5_4": dict(alias=["g_{5,4}"],
               extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4", "bracket 2 3 = 1 x5"]),
  "g5_5": dict(alias=["g_{5,5}"],
               extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4", "bracket 1 4 = 1 x5"]),
  "g5_6": dict(alias=["g_{5,6}"],
               extra=["bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4", "bracket 1 4 = 1 x5",
                      "bracket 2 3 = 1 x5"]),
}
for name, spec in five.items():
    lines = [f"name: {name}"] + [f"alias: {a}" for a in spec["alias"]]
    lines.append("dim: 5")
    lines += spec["extra"]
    write(name, lines)

# --- abelian, Heisenberg-type and solvable building blocks ----------------

for n in range(2, 8):
    lines = [f"name: c{n}", f"alias: C^{n}", f"dim: {n}"]
    if n == 7:
        lines.append("flags: type1")  # vacuously: no brackets at all
    write(f"c{n}", lines)

write("n3", ["name: n3", "alias: n_3", "dim: 3", "bracket 1 2 = 1 x3"])
write("n4", ["name: n4", "alias: n_4", "dim: 4",
             "bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4"])
write("n3_c1", ["name: n3_c1", "alias: n3+C", "dim: 4", "bracket 1 2 = 1 x3"])
write("n3_c2", ["name: n3_c2", "alias: n3+C^2", "dim: 5", "bracket 1 2 = 1 x3"])
write("n4_c1", ["name: n4_c1", "alias: n4+C", "dim: 5",
                "bracket 1 2 = 1 x3", "bracket 1 3 = 1 x4"])

write("r2", ["name: r2", "alias: r_2", "dim: 2", "bracket 1 2 = 1 x2"])
write("r2_c1", ["name: r2_c1", "alias: r2+C", "dim: 3", "bracket 1 2 = 1 x2"])
write("r2_c2", ["name: r2_c2", "alias: r2+C^2", "dim: 4", "bracket 1 2 = 1 x2"])
write("r2_r2", ["name: r2_r2", "alias: r2+r2", "dim: 4",
                "bracket 1 2 = 1 x2", "bracket 3 4 = 1 x4"])

write("r3", ["name: r3", "alias: r_3", "dim: 3",
             "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x2 + 1 x3"])
write("r3a", ["name: r3a", "alias: r_3,alpha", "dim: 3",
              "params: a (exclude: 0, 1, -1)",
              "note: |a| < 1 normalizes the family; not enforceable over Q",
              "bracket 1 2 = 1 x2", "bracket 1 3 = a x3"])
write("r3_1", ["name: r3_1", "alias: r_3,1", "dim: 3",
               "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x3"])
write("r3_m1", ["name: r3_m1", "alias: r_3,-1", "dim: 3",
                "bracket 1 2 = 1 x2", "bracket 1 3 = -1 x3"])
write("r3a_c1", ["name: r3a_c1", "alias: r3a+C", "dim: 4",
                 "params: a (exclude: 0, 1, -1)",
                 "bracket 1 2 = 1 x2", "bracket 1 3 = a x3"])
write("r31_c1", ["name: r31_c1", "alias: r31+C", "dim: 4",
                 "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x3"])
write("r3_c1", ["name: r3_c1", "alias: r3+C", "dim: 4",
                "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x2 + 1 x3"])

write("sl2", ["name: sl2", "alias: sl_2", "dim: 3",
              "bracket 1 2 = 1 x3", "bracket 1 3 = -2 x1", "bracket 2 3 = 2 x2"])
write("sl2_c1", ["name: sl2_c1", "alias: sl2+C", "dim: 4",
                 "bracket 1 2 = 1 x2", "bracket 1 3 = -1 x3", "bracket 2 3 = 1 x1"])

# --- four-dimensional solvable orbit representatives ----------------------

write("l4g1", ["name: l4g1", "alias: g_4.1", "dim: 4",
               "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x3", "bracket 1 4 = 1 x4"])
write("l4g2", ["name: l4g2", "alias: g_4.2", "dim: 4",
               "params: a (exclude: 0, 1)",
               "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x3",
               "bracket 1 4 = 1 x3 + a x4"])
write("l4g3", ["name: l4g3", "alias: g_4.3", "dim: 4",
               "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x3",
               "bracket 1 4 = 2 x4", "bracket 2 3 = 1 x4"])
write("l4g4", ["name: l4g4", "alias: g_4.4", "dim: 4",
               "params: a (exclude: 0, 1), b (exclude: 0, 1)",
               "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x2 + a x3",
               "bracket 1 4 = 1 x3 + b x4"])
write("l4g5", ["name: l4g5", "alias: g_4.5", "dim: 4",
               "params: a (exclude: 0, 1, -1)",
               "bracket 1 2 = 1 x2", "bracket 1 3 = 1 x2 + a x3",
               "bracket 1 4 = (a+1) x4", "bracket 2 3 = 1 x4"])

print(f"wrote {len(os.listdir(OUT))} files to {OUT}")
