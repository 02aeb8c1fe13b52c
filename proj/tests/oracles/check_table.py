"""Compare `kce table` over 5..999 with the brute-force oracles."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from oracle import class_number_forms, hj_cycle, is_prime, zeta_bernoulli, zeta_siegel  # noqa: E402


def least_rotation(seq):
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def main():
    kce = sys.argv[1]
    out = subprocess.run([kce, "table", "--D-from", "5", "--D-to", "999"], check=True,
                         capture_output=True, text=True).stdout
    table = json.loads(out)
    rows = {r["D"]: r for r in table["rows"]}
    skipped = {s["D"] for s in table["skipped"]}

    failures = []
    for D in range(5, 1000, 4):
        admissible = is_prime(D) and class_number_forms(D) == 1
        if not admissible:
            if D not in skipped or D in rows:
                failures.append(f"{D}: expected skipped")
            continue
        r = rows.get(D)
        if r is None:
            failures.append(f"{D}: missing row")
            continue
        z = zeta_siegel(D)
        if z != zeta_bernoulli(D):
            failures.append(f"{D}: oracle formulas disagree")
        if Fraction(r["zeta_minus1"]) != z:
            failures.append(f"{D}: zeta {r['zeta_minus1']} != {z}")
        if Fraction(r["q_exponent"]) != -1 / (2 * z):
            failures.append(f"{D}: q {r['q_exponent']}")
        cyc = least_rotation(list(hj_cycle(D)))
        if tuple(r["cycle"]) != cyc or r["n"] != len(cyc):
            failures.append(f"{D}: cycle {r['cycle']} != {cyc}")
        if r["h_plus"] != 1:
            failures.append(f"{D}: h_plus {r['h_plus']}")
    if len(rows) != 74:
        failures.append(f"row count {len(rows)} != 74")

    for f in failures:
        print("FAIL", f)
    print(f"{len(rows)} rows checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
