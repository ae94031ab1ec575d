"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (bad code, odd n, invalid
move, failed verification), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Sequence

from .parity import (
    TranspositionMove,
    count_inversions,
    parity_free,
    parity_rooted,
    transpose,
)
from .rotation import clean_tree, rotation_report, sigma_parities
from .perm import sign
from .spectra import char_poly, find_cospectral
from .treegraph import build_tree_graph, export, planar_embedding, planarity
from .trees import (
    BracketParseError,
    FreeTree,
    PlaneRootedTree,
    canonical_key,
    decode_bracket,
    encode_bracket,
    enumerate_free_tree_keys,
    free_to_plane,
    plane_to_free,
)


class DomainError(Exception):
    pass


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _tree_inputs(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--code", help="bracket code of a plane rooted tree")
    src.add_argument("--edges", metavar="PATH", help='JSON file {"n": N, "edges": [[u, v], ...]} ("-" for stdin)')


def _load(args) -> tuple[PlaneRootedTree, FreeTree]:
    if args.code is not None:
        rooted = decode_bracket(args.code)
        return rooted, plane_to_free(rooted)
    tree = FreeTree.from_json(_read_json(args.edges))
    return free_to_plane(tree, 0), tree


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_parity(args) -> int:
    rooted, tree = _load(args)
    if args.edges is not None:
        parity_free(tree)  # rejects odd n for unrooted input
    code = encode_bracket(rooted)
    inv = count_inversions(code)
    par = parity_rooted(rooted)
    _emit(args, {"code": code, "inversions": inv, "parity": str(par)}, f"inversions={inv} parity={par}")
    return 0


def cmd_encode(args) -> int:
    rooted, tree = _load(args)
    if args.canonical:
        code = canonical_key(tree)
    else:
        code = encode_bracket(free_to_plane(tree, args.root) if args.edges is not None else rooted)
    _emit(args, {"code": code}, code)
    return 0


def cmd_decode(args) -> int:
    rooted = decode_bracket(args.code)
    tree = plane_to_free(rooted)
    payload = tree.to_json() | {"root": rooted.root, "children": [list(c) for c in rooted.children]}
    _emit(args, payload, json.dumps(tree.to_json()))
    return 0


def cmd_transpose(args) -> int:
    _, tree = _load(args)
    if not 0 <= args.leaf < tree.n or tree.degree(args.leaf) != 1:
        raise DomainError(f"vertex {args.leaf} is not a leaf")
    move = TranspositionMove(args.leaf, tree.adjacency[args.leaf][0], args.target)
    result = transpose(tree, move)
    payload = {"before": tree.to_json(), "after": result.to_json(), "code": encode_bracket(free_to_plane(result))}
    lines = [json.dumps(result.to_json())]
    if tree.n % 2 == 0:
        before, after = parity_free(tree), parity_free(result)
        payload |= {"parity_before": str(before), "parity_after": str(after)}
        lines.append(f"parity {before} -> {after}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_enumerate(args) -> int:
    keys = enumerate_free_tree_keys(args.n)
    records = []
    for k in keys:
        rec = {"code": k}
        if args.n % 2 == 0:
            rec["parity"] = str(parity_rooted(decode_bracket(k)))
        records.append(rec)
    text = "\n".join(f"{r['code']} {r['parity']}" if "parity" in r else r["code"] for r in records)
    _emit(args, {"n": args.n, "count": len(keys), "trees": records}, f"count={len(keys)}\n{text}")
    return 0


def cmd_graph(args) -> int:
    g = build_tree_graph(args.n)
    if args.format:
        data = export(g, args.format)
        if args.output:
            Path(args.output).write_bytes(data)
        else:
            sys.stdout.write(data.decode())
        return 0
    s = g.stats()
    text = f"nodes={s['nodes']} edges={s['edges']} bipartite={str(s['bipartite']).lower()} planar={str(s['planar']).lower()}"
    _emit(args, s, text)
    return 0


def cmd_planarity(args) -> int:
    if args.n is not None:
        g = build_tree_graph(args.n)
        graph = (len(g.nodes), g.edges)
    elif args.graph is not None:
        data = _read_json(args.graph)
        graph = (int(data["n"]), [tuple(e) for e in data["edges"]])
    else:
        raise DomainError("give --n or --graph")
    planar = planarity(graph)
    payload: dict = {"vertices": graph[0], "edges": len(graph[1]), "planar": planar}
    if planar and args.embedding:
        payload["rotation"] = {str(v): nbrs for v, nbrs in sorted(planar_embedding(graph).items())}
    _emit(args, payload, f"planar={str(planar).lower()}")
    return 0


def cmd_charpoly(args) -> int:
    _, tree = _load(args)
    poly = char_poly(tree)
    _emit(args, {"polynomial": str(poly), "coefficients": poly.to_json()}, str(poly))
    return 0


def cmd_cospectral(args) -> int:
    groups = find_cospectral(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "groups": [g.to_json() for g in groups]}, sort_keys=True))
        return 0
    print(f"groups={len(groups)}")
    for g in groups:
        members = ", ".join(
            canonical_key(t) + ("" if g.parities is None else f" {p}")
            for t, p in zip(g.trees, g.parities or [None] * len(g.trees))
        )
        print(f"{g.polynomial}: {members}")
    return 0


def cmd_rotation(args) -> int:
    rooted, _ = _load(args)
    rep = rotation_report(rooted)
    text = (f"m={rep['m']} s_w={rep['s_w']} s_b={rep['s_b']} order={rep['order']} "
            f"in_alternating={str(rep['in_alternating']).lower()}")
    _emit(args, rep, text)
    return 0


def cmd_clean(args) -> int:
    _, tree = _load(args)
    split = clean_tree(tree)
    sw, sb = sigma_parities(split)
    payload = {
        "m": 2 * (tree.n - 1),
        "s_w": str(split.pair.s_w),
        "s_b": str(split.pair.s_b),
        "sign_s_w": sign(split.pair.s_w),
        "sign_s_b": sign(split.pair.s_b),
        "N_w": [e + 1 for e in split.n_w],
        "N_b": [e + 1 for e in split.n_b],
        "sign_sigma_w": sw,
        "sign_sigma_b": sb,
    }
    text = (f"m={payload['m']} sign(s_w)={payload['sign_s_w']:+d} sign(s_b)={payload['sign_s_b']:+d} "
            f"sign(sigma_w)={sw:+d} sign(sigma_b)={sb:+d}")
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    from .verify import random_checks, run_all

    outcomes = run_all()
    if args.seed is not None:
        outcomes.append(random_checks(random.Random(args.seed)))
    if args.json:
        print(json.dumps({"criteria": [
            {"name": o.name, "passed": o.ok, "detail": o.detail, "seconds": round(o.seconds, 4), "budget": o.budget}
            for o in outcomes]}, sort_keys=True))
    else:
        for o in outcomes:
            print(o.line())
        failed = sum(not o.ok for o in outcomes)
        print(f"{len(outcomes) - failed}/{len(outcomes)} criteria passed")
    return 0 if all(o.ok for o in outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treeparity", description="Parity of plane trees, rotation groups and G_n.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(func=func)
        return p

    p = add("parity", cmd_parity, "inversion count and parity")
    _tree_inputs(p)

    p = add("encode", cmd_encode, "bracket code of a tree")
    _tree_inputs(p)
    p.add_argument("--root", type=int, default=0, help="root vertex for --edges input")
    p.add_argument("--canonical", action="store_true", help="print the canonical (centroid) code")

    p = add("decode", cmd_decode, "edge list of a bracket code")
    p.add_argument("--code", required=True)

    p = add("transpose", cmd_transpose, "move a leaf to a neighbour of its support")
    _tree_inputs(p)
    p.add_argument("--leaf", type=int, required=True)
    p.add_argument("--target", type=int, required=True)

    p = add("enumerate", cmd_enumerate, "all free trees on n vertices")
    p.add_argument("--n", type=int, required=True)

    p = add("graph", cmd_graph, "the graph of trees G_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", action="store_true", help="print counts, bipartiteness and planarity (default)")
    p.add_argument("--format", choices=["dot", "json"])
    p.add_argument("--output", metavar="PATH")

    p = add("planarity", cmd_planarity, "planarity of G_n or of a graph file")
    p.add_argument("--n", type=int)
    p.add_argument("--graph", metavar="PATH", help='JSON file {"n": N, "edges": [[u, v], ...]}')
    p.add_argument("--embedding", action="store_true", help="include a rotation system when planar")

    p = add("charpoly", cmd_charpoly, "characteristic polynomial")
    _tree_inputs(p)

    p = add("cospectral", cmd_cospectral, "cospectral classes of n-vertex trees")
    p.add_argument("--n", type=int, required=True)

    p = add("rotation", cmd_rotation, "edge rotations s_w, s_b and R(T)")
    _tree_inputs(p)

    p = add("clean", cmd_clean, "clean tree and sigma parities")
    _tree_inputs(p)

    p = add("verify", cmd_verify, "check every acceptance criterion")
    p.add_argument("--seed", type=int, help="also run randomized property checks with this seed")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BracketParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
    except (DomainError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
