#!/usr/bin/env python3
"""Blow up points on a minimal surface and watch a T-chain appear.

Starts from a (-3)-section A and a nodal fibre B on an elliptic surface,
resolves the node and one more point, then checks the resulting chain and
the intersection bookkeeping.  Finally replays every stored construction.
"""
from pathlib import Path

from tsing.blowup import (
    Intersection,
    Node,
    blow_up,
    extract_chain,
    init_config,
    k_degree,
    kx_squared,
    load_document,
    pairing,
    replay,
    search_scripts,
)

REPLAYS = Path(__file__).resolve().parents[1] / "src" / "tsing" / "fixtures" / "replay"


def main():
    state = init_config({
        "ks2": 0,
        "curves": [{"label": "A", "self": -3, "k_dot": 1}, {"label": "B", "self": 0, "nodes": 1}],
        "intersections": [{"a": "A", "b": "B", "mult": 1}],
    })
    for step in (Node("B"), Intersection("E1", "B")):
        state = blow_up(state, step)
        selfs = {lab: pairing(state, lab, lab) for lab in state.curves}
        print(f"after {step}: self-intersections {selfs}, K_X² = {kx_squared(state)}")
    chain = extract_chain(state, ["A", "B", "E1"])
    print("chain A-B-E1:", chain)
    print("E2 meets", {lab: pairing(state, "E2", lab) for lab in ("A", "B", "E1")},
          "and has K-degree", k_degree(state, "E2"))
    print()

    for path in sorted(REPLAYS.glob("*.json")):
        rep = replay(load_document(path))
        print(f"{path.stem:<12} {str(rep.chain):<18} m={rep.num_blowups} K_W²={rep.kw2} "
              f"φ(F)·K_W={rep.f_degree} {'ok' if rep.ok else 'FAIL'}")
    print()

    # the four-point script for the first κ=0 case is not unique
    doc = load_document(REPLAYS / "kappa0_A.json")
    found = list(search_scripts(doc, 4, doc["expect"]["chain"]))
    print(f"{len(found)} scripts of 4 blow-ups give {doc['expect']['chain']}; first one:")
    for step in found[0][0]:
        print("  ", step)


if __name__ == "__main__":
    main()
