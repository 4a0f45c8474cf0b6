"""Mutation networks: proteins joined when they differ by one substitution."""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .degrees import fit_power_law, histogram
from .graph import WeightedGraph
from .subgraph import pa_diagnostics

__all__ = [
    "AMINO_ACIDS",
    "SequenceError",
    "SequenceRecord",
    "MutationNetwork",
    "load_sequences",
    "parse_sequences",
    "build_network",
    "pa_compatibility_report",
]

AMINO_ACIDS = "ACDEFGHIKLMNPQRSTVWY"


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    residues: str

    @property
    def length(self) -> int:
        return len(self.residues)


def _validate(rec_id, residues, allowed, where):
    bad = sorted(set(residues) - allowed)
    if bad:
        raise SequenceError(f"{where}: record {rec_id!r} contains invalid residue(s) {bad}")


def parse_sequences(text: str, format="fasta", *, extras="", source="<text>"):
    """Parse FASTA or plain text (one sequence per line, id = line number).

    Residues are upper-cased and checked against the 20 amino acids plus
    ``extras``.  Input order is preserved and duplicates are kept.
    """
    allowed = set(AMINO_ACIDS) | set(extras.upper())
    records = []
    if format == "plain":
        for lineno, line in enumerate(text.splitlines(), start=1):
            seq = line.strip().upper()
            if not seq:
                continue
            _validate(str(lineno), seq, allowed, f"{source}:{lineno}")
            records.append(SequenceRecord(str(lineno), seq))
    elif format == "fasta":
        rec_id, chunks, start = None, [], 0
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith(">"):
                if rec_id is not None:
                    records.append(_finish(rec_id, chunks, allowed, source, start))
                header = line[1:].split()
                rec_id = header[0] if header else str(len(records) + 1)
                chunks, start = [], lineno
            elif rec_id is None:
                raise SequenceError(f"{source}:{lineno}: sequence data before first '>' header")
            else:
                chunks.append(line.upper())
        if rec_id is not None:
            records.append(_finish(rec_id, chunks, allowed, source, start))
    else:
        raise SequenceError(f"unknown sequence format {format!r}; use 'fasta' or 'plain'")
    if not records:
        raise SequenceError(f"{source}: no sequences found")
    return records


def _finish(rec_id, chunks, allowed, source, lineno):
    seq = "".join(chunks)
    if not seq:
        raise SequenceError(f"{source}:{lineno}: record {rec_id!r} has no residues")
    _validate(rec_id, seq, allowed, f"{source}:{lineno}")
    return SequenceRecord(rec_id, seq)


def load_sequences(path, format="fasta", *, extras=""):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_sequences(text, format, extras=extras, source=os.fspath(path))


@dataclass
class MutationNetwork:
    """Unit-weight graph; node ``k`` is ``records[k - 1]``."""

    graph: WeightedGraph
    records: list

    @property
    def labels(self) -> dict[int, str]:
        return {k: r.id for k, r in enumerate(self.records, start=1)}


def build_network(seqs) -> MutationNetwork:
    """Join every pair of equal-length sequences at Hamming distance exactly 1.

    Sequences are bucketed by length and each bucket is compared as a byte
    matrix.  Identical sequences stay separate, unconnected nodes.
    """
    seqs = list(seqs)
    if not seqs:
        raise SequenceError("need at least one sequence")
    buckets = defaultdict(list)
    for idx, rec in enumerate(seqs):
        buckets[rec.length].append(idx)
    src, dst = [], []
    for idx in buckets.values():
        if len(idx) < 2:
            continue
        M = np.frombuffer("".join(seqs[i].residues for i in idx).encode("ascii"),
                          dtype=np.uint8).reshape(len(idx), -1)
        ids = np.asarray(idx)
        for r in range(len(idx) - 1):
            diff = np.count_nonzero(M[r + 1:] != M[r], axis=1)
            hits = np.flatnonzero(diff == 1) + r + 1
            src.extend([ids[r]] * hits.size)
            dst.extend(ids[hits].tolist())
    g = WeightedGraph(len(seqs), np.asarray(src, dtype=np.int64) + 1,
                      np.asarray(dst, dtype=np.int64) + 1)
    return MutationNetwork(graph=g, records=seqs)


def pa_compatibility_report(net, k_min=None) -> dict:
    """Can this network be a PA(m, delta) graph?

    PA graphs are connected and have mean degree 2m, an even integer.  The
    report also carries a power-law fit of the degree tail (``tau_fit`` is
    ``None`` when the tail is too small to fit).
    """
    g = net.graph if isinstance(net, MutationNetwork) else net
    report = pa_diagnostics(g)
    try:
        fit = fit_power_law(histogram(g), k_min)
        report["tau_fit"] = {"tau": fit.tau, "k_min": fit.k_min, "n_tail": fit.n_tail}
    except ValueError as exc:
        report["tau_fit"] = None
        report["tau_fit_error"] = str(exc)
    return report
