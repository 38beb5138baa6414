# SPDX-License-Identifier: Apache-2.0
"""Regenerates the frozen evaluation golden from the fixture run and qrels.

Independent reference implementation of MAP / NDCG / P@10 used only to
produce tests/fixtures/golden_eval.tsv. Run from anywhere:

    python3 tests/support/make_goldens.py
"""

import math
import os
from collections import defaultdict

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def read_qrels(path):
    grades = defaultdict(dict)
    with open(path) as f:
        for line in f:
            parts = line.split()
            if not parts:
                continue
            topic, _, docno, grade = parts
            grades[topic][docno] = int(grade)
    return grades


def read_run(path):
    ranked = defaultdict(list)
    with open(path) as f:
        for line in f:
            parts = line.split()
            if not parts:
                continue
            topic, _, docno, _, score, _ = parts
            ranked[topic].append((docno, float(score)))
    for topic in ranked:
        ranked[topic].sort(key=lambda e: (-e[1], e[0]))
    return ranked


def average_precision(docs, grades):
    n_rel = sum(1 for g in grades.values() if g > 0)
    hits, total = 0, 0.0
    for k, (docno, _) in enumerate(docs, start=1):
        if grades.get(docno, 0) > 0:
            hits += 1
            total += hits / k
    return total / n_rel


def ndcg(docs, grades):
    dcg = sum(
        grades.get(docno, 0) / math.log2(k + 1)
        for k, (docno, _) in enumerate(docs, start=1)
    )
    ideal = sorted(grades.values(), reverse=True)
    idcg = sum(g / math.log2(k + 1) for k, g in enumerate(ideal, start=1))
    return dcg / idcg


def precision_at_10(docs, grades):
    return sum(1 for docno, _ in docs[:10] if grades.get(docno, 0) > 0) / 10.0


def topic_key(t):
    return (0, int(t), "") if t.isdigit() else (1, 0, t)


def main():
    qrels = read_qrels(os.path.join(FIXTURES, "qrels.txt"))
    run = read_run(os.path.join(FIXTURES, "run_eval.txt"))
    evaluable = sorted(
        (t for t, g in qrels.items() if any(v > 0 for v in g.values())),
        key=topic_key,
    )
    fns = [("map", average_precision), ("ndcg", ndcg), ("p10", precision_at_10)]
    lines = []
    for name, fn in fns:
        values = [fn(run.get(t, []), qrels[t]) for t in evaluable]
        for t, v in zip(evaluable, values):
            lines.append(f"{name}\t{t}\t{v:.4f}")
        lines.append(f"{name}\tall\t{sum(values) / len(values):.4f}")
    out = os.path.join(FIXTURES, "golden_eval.tsv")
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
