"""Command-line front end: stable line-oriented JSON over the library.

Every record is a single JSON object with sorted keys (``--pretty``
re-indents for humans).  Exit codes: 0 success, 2 usage/validation,
3 domain error, 4 verification failure.  ``UPKIT_MAX_N`` caps every
enumeration bound accepted on the command line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .components import (
    CharFn,
    block_structure,
    canonical_subgroup,
    char_group,
    char_group_order,
)
from .errors import UpkitError
from .moeglin import arthur_character, merge_chain, tempered_intersection
from .params import (
    near_tempered_table,
    packets_containing,
    verify_almost_intro,
    weak_packet,
)
from .partitions import (
    ClassPartition,
    GroupType,
    Partition,
    classify,
    enumerate_classes,
)
from .pieces import T_up, bvls_dual, is_special, piece_data, special_closure, special_piece
from .springer import (
    defect,
    delta_tau,
    gamma_seq,
    green_tableaux,
    is_springer_type,
    leq_dominance,
    p_set,
    springer_bipartition,
    springer_data,
    weakly_spherical,
    weakly_spherical_general,
)
from .wreps import bipartitions_of, e_rep, induce_table, invariant_dim, oracle_mult

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4

DEFAULT_MAX_N = 60

SUITES = ("dprop", "spc", "js", "almost", "firstrow", "theoremC", "oracle")


@dataclass(frozen=True)
class QuerySpec:
    """Validated command inputs; built before any computation runs."""

    dual_type: str
    cp: ClassPartition
    eps: CharFn | None = None
    z: int = 1
    J: frozenset[int] | None = None


def _max_n_cap() -> int:
    raw = os.environ.get("UPKIT_MAX_N", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_N
    except ValueError:
        raise SystemExit(EXIT_USAGE)


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _fail(code: int, message: str) -> int:
    print(f"upkit: {message}", file=sys.stderr)
    return code


def _parse_J(text: str) -> frozenset[int]:
    body = text.strip().strip("{}")
    return frozenset(int(tok) for tok in body.split(",") if tok.strip())


def _build_query(args) -> QuerySpec:
    lam = Partition.from_text(args.partition)
    gt = GroupType.from_letter(args.dual, lam.size)
    cp = classify(lam, gt)
    eps = None
    eps_text = getattr(args, "eps", None)
    if eps_text is not None:
        if not isinstance(eps_text, str):  # argparse eats a bare "--"
            raise ValueError("empty --eps value")
        eps = CharFn.from_text(cp, eps_text)
    J = None
    if getattr(args, "J", None) is not None:
        J = _parse_J(args.J)
    return QuerySpec(
        dual_type=gt.letter, cp=cp, eps=eps, z=getattr(args, "z", 1), J=J
    )


def _eps_fields(eps: CharFn) -> dict:
    return {"eps": sorted(eps.subset), "eps_signs": eps.to_text()}


# ---------------------------------------------------------------- commands


def cmd_classes(args) -> int:
    if args.N > _max_n_cap():
        return _fail(EXIT_USAGE, f"N={args.N} exceeds UPKIT_MAX_N cap")
    try:
        gt = GroupType.from_letter(args.dual, args.N)
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    for cp in enumerate_classes(gt):
        bs = block_structure(cp)
        _emit(
            {
                "I": sorted(bs.I_set),
                "J": sorted(bs.J_set),
                "partition": cp.lam.to_text(),
                "special": bs.special,
            },
            args.pretty,
        )
    return EXIT_OK


def cmd_class_info(q: QuerySpec, args) -> int:
    cp = q.cp
    bs = block_structure(cp)
    piece = sorted(special_piece(cp), key=lambda t: (len(t[0]), sorted(t[0])))
    _emit(
        {
            "A0_size": char_group_order(cp),
            "A_dagger": [sorted(e.subset) for e in canonical_subgroup(cp)],
            "A_dagger_signs": [e.to_text() for e in canonical_subgroup(cp)],
            "I": sorted(bs.I_set),
            "J": sorted(bs.J_set),
            "S": list(cp.S),
            "S0": list(cp.S0),
            "Spc": [mu.lam.to_text() for _, mu in piece],
            "blocks": [list(b) for b in bs.blocks],
            "d": bvls_dual(cp).lam.to_text(),
            "dual": q.dual_type,
            "partition": cp.lam.to_text(),
            "special": bs.special,
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_weak_packet(q: QuerySpec, args) -> int:
    rows = sorted(weak_packet(q.cp, q.z), key=lambda r: (len(r.J), sorted(r.J)))
    for row in rows:
        _emit(
            {
                "J": sorted(row.J),
                "lpacket_size": row.lpacket_size,
                "mu": row.mu.lam.to_text(),
                "phi": row.phi.to_json(),
                "record": "lpacket",
                "table": row.table.to_json(),
            },
            args.pretty,
        )
    _emit(
        {
            "lpacket_sizes": [r.lpacket_size for r in rows],
            "packets": len(rows),
            "record": "summary",
            "total": sum(r.lpacket_size for r in rows),
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_membership(q: QuerySpec, args) -> int:
    hits = packets_containing(q.cp, q.eps, q.z)
    hits.sort(key=lambda t: (len(t[0]), sorted(t[0])))
    if q.J is not None:
        near_tempered_table(q.cp, q.J, q.z)  # validates J against J(lam)
        _emit(
            {
                "J": sorted(q.J),
                "contains": q.J in {J for J, _ in hits},
                **_eps_fields(q.eps),
                "partition": q.cp.lam.to_text(),
                "record": "membership",
            },
            args.pretty,
        )
        return EXIT_OK
    for J, table in hits:
        _emit(
            {"J": sorted(J), "record": "packet", "table": table.to_json()},
            args.pretty,
        )
    _emit({"count": len(hits), "record": "summary"}, args.pretty)
    return EXIT_OK


def cmd_springer(q: QuerySpec, args) -> int:
    eps = q.eps if q.eps is not None else CharFn(q.cp, frozenset())
    sd = springer_data(q.cp, eps)
    sigma = springer_bipartition(sd)
    _emit(
        {
            "S_max": sorted(sd.S_max),
            "S_min": sorted(sd.S_min),
            "X": list(sd.X),
            "X_eps": list(sd.X_eps),
            "alpha": list(sigma.alpha),
            "beta": list(sigma.beta),
            "defect0": defect(sd, 0),
            "dual": q.dual_type,
            **_eps_fields(eps),
            "gamma": list(gamma_seq(sd)),
            "partition": q.cp.lam.to_text(),
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_sphericity(q: QuerySpec, args) -> int:
    eps = q.eps if q.eps is not None else CharFn(q.cp, frozenset())
    _emit(
        {
            "dual": q.dual_type,
            **_eps_fields(eps),
            "partition": q.cp.lam.to_text(),
            "weakly_spherical": weakly_spherical_general(q.cp, eps),
        },
        args.pretty,
    )
    return EXIT_OK


# ------------------------------------------------------------ verification


def _pure_good_parity(gt: GroupType):
    return (cp for cp in enumerate_classes(gt) if not cp.bp)


def _check_dprop(gt: GroupType) -> int:
    checked = 0
    fibers: dict[ClassPartition, set[ClassPartition]] = {}
    for cp in enumerate_classes(gt):
        d = bvls_dual(cp)
        assert is_special(d), f"d({cp.lam.to_text()}) not special"
        back = bvls_dual(d)
        assert back == special_closure(cp)
        assert back == T_up(cp, block_structure(cp).I_set)
        fibers.setdefault(d, set()).add(cp)
        checked += 1
    for image, fiber in fibers.items():
        top = bvls_dual(image)
        assert fiber == {mu for _, mu in special_piece(top)}, (
            f"fiber over {image.lam.to_text()} is not the special piece"
        )
    return checked


def _check_spc(gt: GroupType) -> int:
    checked = 0
    for cp in enumerate_classes(gt):
        piece = special_piece(cp)
        assert len(piece) == 2 ** len(piece_data(cp).J), cp.lam.to_text()
        checked += 1
    return checked


def _check_js(gt: GroupType) -> int:
    checked = 0
    for cp in enumerate_classes(gt):
        J_all = sorted(block_structure(cp).J_set)
        zs = (1,) if gt.s == 1 else (1, -1)
        subsets = [frozenset()] + [
            frozenset(J_all[i] for i in range(len(J_all)) if mask >> i & 1)
            for mask in range(1, 1 << len(J_all))
        ]
        for J in subsets:
            for z in zs:
                target = near_tempered_table(cp, J, z)
                inside = set(tempered_intersection(cp, z, J))
                for eps in char_group(cp):
                    if eps not in inside:
                        continue
                    m, ao, p = merge_chain(cp, eps, J, z)
                    assert m == target
                    ch = arthur_character(ao, p)
                    for i in m.gp_indices():
                        a, b = m.entries[i]
                        if b == 1:  # untouched entry keeps its sign
                            assert p.eta_of(i) == eps.sign(a)
                            assert ch.indicator((a, 1)) == eps.indicator(a)
                        else:  # merged entry: eta = (-1)^eps(a-1)
                            low = eps.indicator(a - 1) if a > 1 else 0
                            assert p.eta_of(i) == (-1) ** low
                    checked += 1
    return checked


def _check_almost(gt: GroupType) -> int:
    checked = 0
    for cp in enumerate_classes(gt):
        report = verify_almost_intro(cp)
        assert report.ok, cp.lam.to_text()
        assert len(report.found) == len(special_piece(cp))
        checked += 1
    return checked


def _check_firstrow(gt: GroupType) -> int:
    checked = 0
    for cp in _pure_good_parity(gt):
        dt = delta_tau(gt)
        for eps in char_group(cp):
            sd = springer_data(cp, eps)
            if not is_springer_type(sd):
                continue
            tabs = green_tableaux(sd, *dt)
            for t in tabs:
                rest = tuple(
                    sorted(set(range(1, sd.ell + 1)) - set(t.rows[0]))
                )
                assert rest == sd.X_eps, (cp.lam.to_text(), sorted(eps.subset))
            ps = {t.bipartition for t in tabs}
            for x in ps:
                for y in ps:
                    if x != y:
                        assert not leq_dominance(x, y, *dt)
            checked += 1
    return checked


def _check_theoremC(gt: GroupType) -> int:
    checked = 0
    for cp in _pure_good_parity(gt):
        adag = set(canonical_subgroup(cp))
        for eps in char_group(cp):
            sd = springer_data(cp, eps)
            assert weakly_spherical(sd) == (eps in adag), (
                cp.lam.to_text(),
                sorted(eps.subset),
            )
            checked += 1
    return checked


def _check_oracle(n: int) -> int:
    checked = 0
    for i in range(n + 1):
        for x in bipartitions_of(i):
            for y in bipartitions_of(n - i):
                assert oracle_mult(x, y) == induce_table(x, y), (x, y)
                checked += 1
    # fixed vectors under W_{n,i}: formula vs induced-trivial brute force
    for i in range(n + 1):
        brute = oracle_mult(e_rep(1, i, 0), e_rep(1, n - i, 0))
        for pi in bipartitions_of(n):
            assert invariant_dim(pi, i) == brute.get(pi, 0), (pi, i)
            checked += 1
    return checked


_PARTITION_SUITES = {
    "dprop": _check_dprop,
    "spc": _check_spc,
    "js": _check_js,
    "almost": _check_almost,
    "firstrow": _check_firstrow,
    "theoremC": _check_theoremC,
}

ORACLE_CAP = 5


def _verify_cell(cell: tuple[str, int, int]) -> dict:
    suite, s, N = cell
    record = {
        "N": N,
        "dual": GroupType(s, N).letter if s else "-",
        "record": "check",
        "suite": suite,
    }
    try:
        if suite == "oracle":
            record["checked"] = _check_oracle(N)
        else:
            record["checked"] = _PARTITION_SUITES[suite](GroupType(s, N))
        record["status"] = "pass"
    except AssertionError as exc:
        record["checked"] = 0
        record["status"] = "fail"
        record["detail"] = str(exc)
    return record


def _verify_cells(suites, max_n: int) -> list[tuple[str, int, int]]:
    cells = []
    for suite in suites:
        if suite == "oracle":
            cells.extend(("oracle", 0, n) for n in range(min(max_n, ORACLE_CAP) + 1))
            continue
        for N in range(1, max_n + 1):
            s = 1 if N % 2 else -1
            cells.append((suite, s, N))
    return cells


def cmd_verify(args) -> int:
    if args.maxN > _max_n_cap():
        return _fail(EXIT_USAGE, f"maxN={args.maxN} exceeds UPKIT_MAX_N cap")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    cells = _verify_cells(suites, args.maxN)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_verify_cell, cells))
    else:
        records = [_verify_cell(cell) for cell in cells]
    failed = False
    for record in records:
        failed = failed or record["status"] == "fail"
        _emit(record, args.pretty)
    _emit(
        {
            "maxN": args.maxN,
            "record": "summary",
            "status": "fail" if failed else "pass",
            "suites": suites,
        },
        args.pretty,
    )
    return EXIT_VERIFY if failed else EXIT_OK


# -------------------------------------------------------------- the parser


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="upkit",
        description="unipotent classes, canonical quotients, weak packets",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, partition=True):
        p.add_argument("--dual", required=True, choices=("B", "C"))
        if partition:
            p.add_argument("--partition", required=True)
        p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("classes", help="enumerate classes for a dual group")
    common(p, partition=False)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(fn=cmd_classes, query=False)

    p = sub.add_parser("class-info", help="canonical quotient data of a class")
    common(p)
    p.set_defaults(fn=cmd_class_info, query=True)

    p = sub.add_parser("weak-packet", help="L-packet rows of the weak packet")
    common(p)
    p.add_argument("--z", type=int, default=1, choices=(1, -1))
    p.set_defaults(fn=cmd_weak_packet, query=True)

    p = sub.add_parser("membership", help="packets containing a member")
    common(p)
    p.add_argument("--eps", required=True)
    p.add_argument("--z", type=int, default=1, choices=(1, -1))
    p.add_argument("--J")
    p.set_defaults(fn=cmd_membership, query=True)

    p = sub.add_parser("springer", help="Springer bipartition of (lam, eps)")
    common(p)
    p.add_argument("--eps")
    p.set_defaults(fn=cmd_springer, query=True)

    p = sub.add_parser("sphericity", help="weak sphericity of (lam, eps)")
    common(p)
    p.add_argument("--eps")
    p.set_defaults(fn=cmd_sphericity, query=True)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--maxN", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_verify, query=False)

    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if not args.query:
        try:
            return args.fn(args)
        except (UpkitError, ValueError) as exc:
            return _fail(EXIT_DOMAIN, str(exc))
    try:
        q = _build_query(args)
    except (UpkitError, ValueError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    try:
        return args.fn(q, args)
    except (UpkitError, ValueError) as exc:
        return _fail(EXIT_DOMAIN, str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
