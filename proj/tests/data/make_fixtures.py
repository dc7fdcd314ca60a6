"""Regenerates the synthetic HMD-layout fixtures in this directory.

The tables are model life tables (constant hazard and Gompertz-Makeham with an
infant term), not real HMD data. Rows follow the HMD 1x1 column layout.
"""
import math

HEADER_LT = "   Year          Age         mx       qx    ax      lx      dx      Lx       Tx     ex"
HEADER_MX = "   Year          Age             Female            Male           Total"


def life_table_rows(year, mx_of_age):
    rows = []
    lx = 100000.0
    for age in range(0, 111):
        mx = mx_of_age(age)
        qx = 1.0 if age == 110 else 1.0 - math.exp(-mx)
        rows.append((year, age, mx, qx, lx))
        lx = lx * (1.0 - qx)
    out = []
    for (year, age, mx, qx, lx) in rows:
        lx_i = round(lx)
        dx = round(lx * qx)
        Lx = round(lx * (1 - qx / 2))
        age_tok = "110+" if age == 110 else str(age)
        out.append(f"{year:>7}{age_tok:>13}{mx:>11.5f}{qx:>9.5f}{0.5:>6.2f}{lx_i:>8d}"
                   f"{dx:>7d}{Lx:>8d}{0:>9d}{0.0:>7.2f}")
    return out


def write(path, title, header, lines):
    with open(path, "w") as f:
        f.write(title + "\n\n" + header + "\n")
        for line in lines:
            f.write(line + "\n")


def gompertz_makeham(a, b, c, d, g):
    return lambda x: a * math.exp(-b * x) + c + d * math.exp(g * x)


write("constant_mx.txt",
      "Synthetic, Life tables (period 1x1), Total\tconstant hazard 0.02",
      HEADER_LT, life_table_rows(2000, lambda x: 0.02))

old = gompertz_makeham(0.10, 1.2, 0.004, 0.00006, 0.10)
new = gompertz_makeham(0.006, 1.5, 0.0003, 0.000012, 0.108)
write("model_two_years.txt",
      "Modelland, Life tables (period 1x1), Total\tsynthetic Gompertz-Makeham",
      HEADER_LT, life_table_rows(1921, old) + life_table_rows(2009, new))

lines = []
for year, f in ((1921, old), (2009, new)):
    for age in range(0, 111):
        age_tok = "110+" if age == 110 else str(age)
        m = f(age)
        lines.append(f"{year:>7}{age_tok:>13}{m * 0.9:>19.6f}{m * 1.1:>16.6f}{m:>16.6f}")
write("model_mx.txt", "Modelland, Death rates (period 1x1)\tsynthetic", HEADER_MX, lines)
