"""Build every book-graph family member we know about and print the verification table."""

from __future__ import annotations

import argparse
import json

from unisat import named
from unisat.constructions import BookFamilySpec, ConstructionError, verify_claim
from unisat.graph import disjoint_union


def specs():
    t2 = named.named("triangles2")
    for name, p in (("k33", 3), ("folded_5cube", 2), ("c4", 2), ("petersen", 1), ("gewirtz", 2)):
        yield f"srg {name} p={p}", BookFamilySpec("srg_girth4", p, {"graph": named.named(name)})
    for r, k in ((2, 3), (3, 2), (3, 3), (4, 2), (2, 5)):
        yield f"multipartite r={r} k={k}", BookFamilySpec("multipartite", None, {"r": r, "k": k})
    yield "clique deletion 2 x 2K3", BookFamilySpec("clique_deletion", None, {"r": 2, "removed": [t2, t2]})
    k4s = disjoint_union(named.complete(4), named.complete(4))
    yield "clique deletion 3 x 2K4", BookFamilySpec("clique_deletion", None, {"r": 3, "removed": [k4s] * 3})
    for base, p in (("k2", 2), ("k3", 3), ("k4", 4), ("c4", 3), ("k33", 4), ("multipartite:2,2,2", 5)):
        yield f"cone {base} p={p}", BookFamilySpec("cone", p, {"base": named.named(base)})


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="emit full reports as JSON lines")
    args = ap.parse_args()
    for label, spec in specs():
        try:
            rep = verify_claim(spec)
        except ConstructionError as exc:
            print(f"{label:28s} precondition failed: {exc}")
            continue
        if args.json:
            print(json.dumps({"label": label, **rep.to_dict()}, sort_keys=True))
            continue
        failed = [k for k, v in rep.checks.items() if not v]
        status = "ok" if rep.ok else "FAILED " + ", ".join(failed)
        extra = rep.witnesses.get("nonedge", "")
        print(f"{label:28s} n={rep.graph.n:3d} p={rep.p}  {status} {extra}")


if __name__ == "__main__":
    main()
