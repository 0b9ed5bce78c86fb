#!/usr/bin/env python3
"""Writes the synthetic demo corpus and a matching prestige order.

The corpus mimics the shape of a JCR edition (174 subject categories, skewed
indicator values, journals listed under several categories, a few missing
cells) without using any proprietary data.

    python3 tools/gen_demo_corpus.py --out data
"""

import argparse
import csv
import pathlib

import numpy as np

NAMED = [
    "Cell Biology",
    "Biochemistry & Molecular Biology",
    "Neurosciences",
    "Endocrinology & Metabolism",
    "Immunology",
    "Genetics & Heredity",
    "Oncology",
    "Biophysics",
    "Microbiology",
    "Hematology",
    "Cardiac & Cardiovascular Systems",
    "Biochemical Research Methods",
    "Nanoscience & Nanotechnology",
    "Chemistry, Physical",
    "Computer Science, Information Systems",
    "Computer Science, Artificial Intelligence",
    "Computer Science, Interdisciplinary Applications",
    "Computer Science, Theory & Methods",
    "Computer Science, Software Engineering",
    "Statistics & Probability",
    "Zoology",
    "Food Science & Technology",
    "Mathematics, Interdisciplinary Applications",
    "Management",
    "Health Care Sciences & Services",
    "Engineering, Electrical & Electronic",
    "Information Science & Library Science",
]


def category_names(total):
    names = list(NAMED)
    i = 1
    while len(names) < total:
        names.append(f"Synthetic Field {i:03d}")
        i += 1
    return names


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data")
    ap.add_argument("--seed", type=int, default=2010)
    ap.add_argument("--categories", type=int, default=174)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    names = category_names(args.categories)
    # Log-scale location of each category's impact factor distribution.
    mu = rng.normal(0.3, 0.45, size=len(names))
    mu[0] = 1.6  # the cell biology stand-in leads
    for j in range(1, 12):
        mu[j] = 1.6 - 0.06 * j + rng.normal(0, 0.05)
    sigma = rng.uniform(0.5, 0.9, size=len(names))

    journals = []  # (journal id, home category)
    rows = []
    serial = 0
    for c, name in enumerate(names):
        n = int(rng.integers(20, 151))
        for _ in range(n):
            serial += 1
            jid = f"J{serial:05d}"
            journals.append((jid, c))
            rows.append(make_row(rng, jid, name, mu[c], sigma[c]))

    # Roughly one journal in ten is also listed under a second category.
    for jid, home in journals:
        if rng.random() < 0.1:
            other = int(rng.integers(0, len(names)))
            if other != home:
                rows.append(make_row(rng, jid, names[other], mu[home], sigma[home]))

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "demo_corpus.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["journal", "category", "impact_factor", "eigenfactor", "immediacy"])
        w.writerows(rows)

    order = sorted(range(len(names)), key=lambda c: (-mu[c], names[c]))
    with open(out / "demo_prestige.txt", "w", encoding="utf-8") as f:
        f.write("# Synthetic prestige order, highest first\n")
        for c in order:
            f.write(names[c] + "\n")


def make_row(rng, jid, category, mu, sigma):
    impact = float(rng.lognormal(mu, sigma))
    eigen = impact * 0.002 * float(rng.lognormal(0.0, 1.0))
    immediacy = impact * 0.2 * float(rng.lognormal(0.0, 0.5))
    cells = [f"{impact:.3f}", f"{eigen:.5f}", f"{immediacy:.3f}"]
    for i in range(3):
        if rng.random() < 0.03:
            cells[i] = ""
    return [jid, category, *cells]


if __name__ == "__main__":
    main()
