"""Regenerate the embedded graph6 strings for Gewirtz, M22 and Higman-Sims.

All three come from the Steiner system S(3,6,22), obtained as the octads of
the extended binary Golay code through two fixed coordinates.

    python scripts/build_named_data.py > src/unisat/_data.py
"""

from __future__ import annotations

import json
from itertools import combinations

from unisat.graph import from_edges, to_graph6
from unisat.srg import srg_params

# generator polynomial of the [23,12] binary quadratic-residue code
GOLAY_POLY = 0b110001110101  # x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1


def golay_codewords() -> list[int]:
    gens = [GOLAY_POLY << i for i in range(12)]
    words = [0]
    for g in gens:
        words += [w ^ g for w in words]
    out = []
    for w in words:
        parity = bin(w).count("1") & 1
        out.append(w | parity << 23)
    return out


def hexads() -> list[frozenset[int]]:
    octads = [w for w in golay_codewords() if bin(w).count("1") == 8]
    assert len(octads) == 759
    fixed = (1 << 22) | (1 << 23)
    blocks = [w & ~fixed for w in octads if w & fixed == fixed]
    assert len(blocks) == 77
    return [frozenset(i for i in range(22) if b >> i & 1) for b in blocks]


def m22_graph(blocks):
    edges = [(i, j) for i, j in combinations(range(len(blocks)), 2) if not blocks[i] & blocks[j]]
    return from_edges(len(blocks), edges)


def gewirtz_graph(blocks):
    keep = [b for b in blocks if 0 not in b]
    edges = [(i, j) for i, j in combinations(range(len(keep)), 2) if not keep[i] & keep[j]]
    return from_edges(len(keep), edges)


def higman_sims_graph(blocks):
    # vertex 0 = infinity, 1..22 = points, 23..99 = hexads
    edges = [(0, 1 + p) for p in range(22)]
    for h, b in enumerate(blocks):
        edges += [(1 + p, 23 + h) for p in b]
    edges += [(23 + i, 23 + j) for i, j in combinations(range(len(blocks)), 2) if not blocks[i] & blocks[j]]
    return from_edges(100, edges)


def main() -> None:
    blocks = hexads()
    graphs = {
        "gewirtz": (gewirtz_graph(blocks), (56, 10, 0, 2)),
        "m22": (m22_graph(blocks), (77, 16, 0, 4)),
        "higman_sims": (higman_sims_graph(blocks), (100, 22, 0, 6)),
    }
    print('"""Embedded graph6 data; regenerate with scripts/build_named_data.py."""')
    print()
    print("GRAPH6 = {")
    for name, (g, expected) in graphs.items():
        params = srg_params(g)
        assert params is not None and params.as_tuple() == expected, (name, params)
        print(f'    "{name}": (')
        text = to_graph6(g).decode()
        for i in range(0, len(text), 72):
            print(f"        {json.dumps(text[i:i + 72])}")
        print("    ),")
    print("}")


if __name__ == "__main__":
    main()
