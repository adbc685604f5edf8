"""Dump URIEL syntax_knn (103 binary features) for a set of languages.

usage: extract_syntax_knn.py <lang2vec-data-dir> <iso-list-file>... > syntax_knn.csv

Reads feature_predictions.npz from the lang2vec 1.1.2 wheel, i.e. the same
kNN-completed values lang2vec returns for the "syntax_knn" feature set.
"""
import csv
import sys

import numpy as np


def main(argv):
    data = np.load(f"{argv[1]}/feature_predictions.npz", allow_pickle=True)
    feats = [str(f) for f in data["feats"]]
    cols = [i for i, f in enumerate(feats) if f.startswith("S_")]
    index = {str(l): i for i, l in enumerate(data["langs"])}
    codes = set()
    for path in argv[2:]:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if len(line) == 3 and line.isalpha():
                    codes.add(line)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["iso"] + [feats[c] for c in cols])
    for iso in sorted(codes):
        if iso not in index:
            print(f"warning: {iso} not in lang2vec", file=sys.stderr)
            continue
        values = data["data"][index[iso], cols, 0]
        out.writerow([iso] + [str(int(round(float(v)))) for v in values])


if __name__ == "__main__":
    main(sys.argv)
