"""Build data/registry.csv from a Glottolog languoid table.

usage: build_registry.py <glottolog-languoids.csv> <name_to_iso.csv> <iso-list-file>... > registry.csv

The languoid table is the one shipped inside the `lingtypology` wheel
(glottolog-languoids-v4.0-26-gb2138530b3.csv). Every ISO code found in the
list files (one code per line, '#' comments allowed) gets a row.

family      top-level Glottolog family; blank for isolates and for
            Glottolog pseudo-families (artificial, sign, pidgin, ...)
endangerment  Glottolog AES status folded onto safe/vulnerable/endangered/extinct
"""
import csv
import sys

PSEUDO_FAMILIES = {
    "Artificial Language", "Sign Language", "Unclassifiable", "Pidgin",
    "Mixed Language", "Speech Register", "Bookkeeping", "Unattested",
}
AES = {
    "not endangered": "safe",
    "threatened": "vulnerable",
    "shifting": "endangered",
    "moribund": "endangered",
    "nearly extinct": "endangered",
    "extinct": "extinct",
}


def main(argv):
    glotto = {}
    with open(argv[1], encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            if row["ISO639P3code"] and row["Level"] == "language":
                glotto[row["ISO639P3code"]] = row
    fallback_names = {}
    with open(argv[2], encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            fallback_names.setdefault(row["iso"], row["name"])
    codes = set()
    for path in argv[3:]:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if len(line) == 3 and line.isalpha() and line.islower():
                    codes.add(line)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["iso", "name", "family", "endangerment", "script_scale"])
    for iso in sorted(codes):
        row = glotto.get(iso)
        if row is None:
            out.writerow([iso, fallback_names.get(iso, iso), "", "", ""])
            continue
        family = row["Family_Name"]
        if family in PSEUDO_FAMILIES:
            family = ""
        out.writerow([iso, row["Name"], family, AES.get(row["Status"], ""), ""])


if __name__ == "__main__":
    main(sys.argv)
