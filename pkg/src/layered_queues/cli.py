"""Command-line interface: ``lq <verb> ...``.

Every verb prints a JSON report on stdout.  Exit status is 0 on success,
1 when a validation fails (including non-planar input), 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .embedding import dumps_embedding, loads_embedding, planar_embed
from .errors import BadParameters, LayeredQueuesError, NonPlanar, ParseError, TooLarge
from .generators import KINDS, GeneratorSpec, generate
from .graph import Graph, format_graph, parse_graph
from .layering import bfs_layering
from .layout import (
    dumps_layout,
    loads_layout,
    low_treewidth_colouring,
    planar_partition,
    planar_pipeline,
    product_injection,
    queue_bound,
    validate_queue_layout,
)
from .layout.colouring import colouring_width_bound
from .oracle import exact_queue_number, exact_treewidth
from .partition import (
    dumps_partition,
    loads_partition,
    validate_partition,
    validate_tree_decomposition,
)
from .render import render_svg
from .triangulate import triangulate

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


@dataclass
class RunReport:
    verb: str
    n: int | None = None
    m: int | None = None
    mode: str | None = None
    measured_layered_width: int | None = None
    quotient_td_width: int | None = None
    host_queue_count: int | None = None
    final_queue_count: int | None = None
    bound: int | None = None
    wall_time: float = 0.0
    verdicts: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v not in (None, {})}
        return json.dumps(data, sort_keys=True, indent=2)


def _read_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _stats(report: RunReport, graph: Graph) -> None:
    report.n, report.m = graph.n, graph.m


# -- verbs ------------------------------------------------------------------


def cmd_gen(args, report: RunReport) -> None:
    params = {k: getattr(args, k) for k in ("n", "ell", "k") if getattr(args, k) is not None}
    graph, emb = generate(GeneratorSpec(args.kind, params, args.seed))
    _stats(report, graph)
    report.details["kind"] = args.kind
    text = format_graph(graph)
    if args.out:
        _write(args.out, text)
        if emb is not None:
            _write(args.out + ".emb.json", dumps_embedding(emb))
    else:
        report.details["graph"] = text


def cmd_embed(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    emb = planar_embed(graph)
    report.verdicts["embedding_valid"] = emb.is_valid()
    report.details["faces"] = len(emb.faces)
    _write(args.out, dumps_embedding(emb))


def cmd_triangulate(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    emb = _load_embedding(args, graph)
    plus = triangulate(emb, args.root)
    report.verdicts["triangulation"] = plus.is_triangulation() and plus.is_valid()
    report.details["added_edges"] = len(plus.added_edges)
    _write(args.out, dumps_embedding(plus))


def cmd_layering(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    layering, tree = bfs_layering(graph)
    report.verdicts["layering_valid"] = layering.is_valid_for(graph)
    report.details["layers"] = len(layering.layers)
    _write(args.out, json.dumps({"layer_of": list(layering.layer_of),
                                 "parent": list(tree.parent)}, sort_keys=True))


def _load_embedding(args, graph: Graph):
    if getattr(args, "embedding", None):
        emb = loads_embedding(Path(args.embedding).read_text())
        if emb.graph.edges != graph.edges:
            raise ParseError("embedding does not match the graph")
        return emb
    return planar_embed(graph)


def cmd_partition(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    report.mode = args.mode
    _, layering, _, partition, td = planar_partition(graph, args.mode)
    p_rep = validate_partition(graph, partition, layering)
    t_rep = validate_tree_decomposition(partition.quotient, td)
    report.measured_layered_width = p_rep.measured_layered_width
    report.quotient_td_width = t_rep.width
    report.verdicts["partition_valid"] = p_rep.is_valid
    report.verdicts["td_valid"] = t_rep.is_valid
    _write(args.out, dumps_partition(partition, td))


def _layout_one(path: str, mode: str, assign: str) -> tuple[RunReport, str]:
    report = RunReport("layout")
    start = time.perf_counter()
    graph = _read_graph(path)
    _stats(report, graph)
    report.mode = mode
    res = planar_pipeline(graph, mode, strategy=assign)
    p_rep = validate_partition(graph, res.partition, res.layering)
    t_rep = validate_tree_decomposition(res.partition.quotient, res.td)
    h_rep = validate_queue_layout(res.partition.quotient, res.host_layout)
    l_rep = validate_queue_layout(graph, res.layout)
    report.measured_layered_width = p_rep.measured_layered_width
    report.quotient_td_width = t_rep.width
    report.host_queue_count = h_rep.queue_count
    report.final_queue_count = l_rep.queue_count
    report.bound = queue_bound(res.ell, h_rep.queue_count)
    report.verdicts = {
        "partition_valid": p_rep.is_valid,
        "td_valid": t_rep.is_valid,
        "host_layout_valid": h_rep.is_valid,
        "layout_valid": l_rep.is_valid,
        "within_bound": l_rep.queue_count <= report.bound,
    }
    report.details["assign"] = assign
    report.wall_time = round(time.perf_counter() - start, 4)
    return report, dumps_layout(res.layout)


def _layout_batch_item(path: str, mode: str, assign: str) -> tuple[RunReport, str | None]:
    try:
        return _layout_one(path, mode, assign)
    except LayeredQueuesError as exc:
        report = RunReport("layout", mode=mode)
        report.verdicts["completed"] = False
        report.details["error"] = f"{type(exc).__name__}: {exc}"
        return report, None


def cmd_layout(args, report: RunReport) -> None:
    if len(args.input) == 1:
        one, text = _layout_one(args.input[0], args.mode, args.assign)
        report.__dict__.update(one.__dict__)
        _write(args.out, text)
        return
    # batch mode: --out names a directory
    jobs = max(1, args.jobs)
    work = [(p, args.mode, args.assign) for p in args.input]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_layout_batch_item, *zip(*work)))
    else:
        results = [_layout_batch_item(*w) for w in work]
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
    for path, (one, text) in zip(args.input, results):
        if args.out and text is not None:
            _write(str(Path(args.out) / (Path(path).stem + ".layout.json")), text)
        report.details[path] = json.loads(one.to_json())
        report.verdicts[path] = one.ok


def cmd_verify(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    if args.layout:
        layout = loads_layout(Path(args.layout).read_text())
        rep = validate_queue_layout(graph, layout)
        report.final_queue_count = rep.queue_count
        report.verdicts["layout_valid"] = rep.is_valid
        if rep.first_violation:
            report.details["violation"] = rep.first_violation
    if args.partition:
        partition, td = loads_partition(Path(args.partition).read_text())
        p_rep = validate_partition(graph, partition, partition.layering)
        report.measured_layered_width = p_rep.measured_layered_width
        report.verdicts["partition_valid"] = p_rep.is_valid
        if p_rep.problems:
            report.details["partition_problems"] = p_rep.problems[:10]
        if td is not None:
            t_rep = validate_tree_decomposition(partition.quotient, td)
            report.quotient_td_width = t_rep.width
            report.verdicts["td_valid"] = t_rep.is_valid
    if not report.verdicts:
        raise BadParameters("verify needs --layout and/or --partition")


def cmd_oracle(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    if args.what in ("queue", "both"):
        report.details["queue_number"] = exact_queue_number(graph)
    if args.what in ("treewidth", "both"):
        report.details["treewidth"] = exact_treewidth(graph)


def cmd_product(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    report.mode = args.mode
    _, layering, _, partition, td = planar_partition(graph, args.mode)
    inj = product_injection(graph, partition, layering)
    problems = inj.problems(graph)
    t_rep = validate_tree_decomposition(inj.host, td)
    report.quotient_td_width = t_rep.width
    report.measured_layered_width = partition.measured_layered_width()
    report.verdicts["injective_and_adjacency_preserving"] = not problems
    report.verdicts["host_td_valid"] = t_rep.is_valid
    if problems:
        report.details["problems"] = problems[:10]
    _write(args.out, json.dumps({
        "host_edges": [list(e) for e in inj.host.edges],
        "path_length": inj.path_length,
        "ell": inj.ell,
        "map": [list(c) for c in inj.map],
    }, sort_keys=True))


def cmd_colour(args, report: RunReport) -> None:
    graph = _read_graph(args.input)
    _stats(report, graph)
    col = low_treewidth_colouring(graph, args.c)
    bound = colouring_width_bound(args.c)
    widths = []
    for j, piece in enumerate(col.complements, 1):
        rep = validate_tree_decomposition(piece.graph, piece.td)
        widths.append(rep.width)
        report.verdicts[f"X{j}_td_valid"] = rep.is_valid
        report.verdicts[f"X{j}_within_bound"] = rep.width <= bound
    report.bound = bound
    report.details["complement_widths"] = widths
    _write(args.out, json.dumps({
        "c": args.c,
        "classes": [sorted(c) for c in col.classes],
        "vertex_colour": [col.vertex_colour()[v] for v in range(graph.n)],
    }, sort_keys=True))


def cmd_render(args, report: RunReport) -> None:
    layout = loads_layout(Path(args.layout).read_text())
    svg = render_svg(layout)
    report.final_queue_count = layout.queue_count
    report.details["vertices"] = len(layout.ordering)
    _write(args.out, svg)


VERBS = {
    "gen": cmd_gen, "embed": cmd_embed, "triangulate": cmd_triangulate,
    "layering": cmd_layering, "partition": cmd_partition, "layout": cmd_layout,
    "verify": cmd_verify, "oracle": cmd_oracle, "product": cmd_product,
    "colour": cmd_colour, "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lq", description="Layered partitions and queue layouts of planar graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, help_text, graph_input=True):
        p = sub.add_parser(name, help=help_text)
        if graph_input:
            p.add_argument("input", help="graph file ('n m' header, one edge per line)")
        p.add_argument("--out", help="artifact path")
        p.add_argument("--seed", type=int, default=0)
        return p

    p = add("gen", "generate a graph", graph_input=False)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int)

    add("embed", "planar embedding (rotation system)")
    p = add("triangulate", "augment to a plane triangulation")
    p.add_argument("--embedding", help="embedding JSON (default: compute one)")
    p.add_argument("--root", type=int, default=0, help="vertex kept on the outer face")
    add("layering", "BFS layering")

    for name, text in (("partition", "layered partition with quotient decomposition"),
                       ("product", "injection into a strong product")):
        p = add(name, text)
        p.add_argument("--mode", choices=("width1", "tripod"), default="width1")

    p = sub.add_parser("layout", help="queue layout via the planar pipeline")
    p.add_argument("input", nargs="+")
    p.add_argument("--mode", choices=("width1", "tripod"), default="width1")
    p.add_argument("--assign", choices=("depth", "structured"), default="depth")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)

    p = add("verify", "validate stored artifacts against a graph")
    p.add_argument("--layout")
    p.add_argument("--partition")

    p = add("oracle", "exact queue-number / treewidth of a tiny graph")
    p.add_argument("--what", choices=("queue", "treewidth", "both"), default="both")

    p = add("colour", "low-treewidth colouring")
    p.add_argument("--c", type=int, default=2)

    p = sub.add_parser("render", help="SVG arc diagram of a layout")
    p.add_argument("--layout", required=True)
    p.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(args.verb)
    start = time.perf_counter()
    status = EXIT_OK
    try:
        VERBS[args.verb](args, report)
        if not report.ok:
            status = EXIT_INVALID
    except NonPlanar as exc:
        report.verdicts["planar"] = False
        report.details["error"] = f"NonPlanar: {exc}"
        if exc.certificate:
            report.details["certificate"] = [list(e) for e in exc.certificate]
        status = EXIT_INVALID
    except (ParseError, BadParameters, TooLarge, OSError, json.JSONDecodeError) as exc:
        report.details["error"] = f"{type(exc).__name__}: {exc}"
        status = EXIT_USAGE
    except LayeredQueuesError as exc:
        report.details["error"] = f"{type(exc).__name__}: {exc}"
        status = EXIT_INVALID
    if not report.wall_time:
        report.wall_time = round(time.perf_counter() - start, 4)
    print(report.to_json())
    return status


if __name__ == "__main__":
    sys.exit(main())
