"""
Offset-based scoring
====================

Extractions are judged against BRAT standoff gold by character offsets.
Exact inLoc hits earn a TP, overlapping-but-inexact hits cost half an
FP plus half an FN, and the strict mode additionally bills exact hits
on outLoc/ambLoc spans as false positives.
"""

import tempfile
from pathlib import Path

from locspot import aggregate, load_annotations, match_spans

text = "We r lucky where I am in New Iberia. #PrayForLouisiana #lawx"
workdir = Path(tempfile.mkdtemp())
(workdir / "t2.txt").write_text(text, encoding="utf-8")
(workdir / "t2.ann").write_text(
    "T1\tinLoc 25 35\tNew Iberia\n"
    "T2\tinLoc 37 54\t#PrayForLouisiana\n"
    "T3\tambLoc 55 60\t#lawx\n",
    encoding="utf-8")

gold = load_annotations(workdir / "t2.ann", workdir / "t2.txt")
for g in gold:
    print(g)

# Perfect predictions on the two inLoc spans.
exact = match_spans([(25, 35), (37, 54)], gold)
print("exact hits:  ", exact.to_dict())

# "in New Iberia" instead of "New Iberia": the half-penalty case.
partial = match_spans([(22, 35), (37, 54)], gold)
print("partial hit: ", partial.to_dict())

# Hitting the ambiguous "#lawx" too: free in standard mode, an FP in
# strict mode.
spans = [(25, 35), (37, 54), (55, 60)]
print("standard:    ", match_spans(spans, gold, mode="standard").to_dict())
print("lnex_strict: ", match_spans(spans, gold, mode="lnex_strict").to_dict())

# Corpus-level numbers are micro-averaged from raw counts.
print("aggregate:   ", aggregate([exact, partial]).to_dict())
