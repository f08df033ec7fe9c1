"""
Cli.py
====================================
The `cycleduality` command line tool.

Every subcommand prints its answer on stdout and returns an exit code: 0 for a positive answer
or success, 1 for a negative answer, 2 for usage and validation errors and 3 when the run cannot
complete: a resource guard stops a brute-force routine, the log file cannot be opened or an internal
contract breaks. Log output goes to stderr (and optionally to a file) so that
stdout only depends on the arguments and input files.
"""
from argparse import ArgumentParser
from typing import List, Optional
import logging
import sys

from .ACDecider import decide_ac
from .Certificate import Certificate, certificate_violations
from .Digraph import Digraph, UndirectedGraph
from .DualityVerification import SampleSpec, check_duality_pair
from .Errors import CertificateError, ContractViolationError, GraphValidationError, ResourceGuardError
from .Families import FamilyId, FamilyTag, make_q_path
from .GraphFormat import dump_graph, format_graph, load_graph
from .Homomorphism import core_of, exists_hom
from .ImageSet import surjective_images
from .TreeDuals import tree_dual
from .UnorientedBridge import (ColouringMethod, ContainmentMode, ForbiddenSet, cycle_colourable,
                               find_f_free_orientation, rghv_colourability)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INVALID = 2
EXIT_GUARD = 3

PACKAGE_LOGGER = "cycleduality"


class _Output:
    """collects stdout lines of one command"""

    def __init__(self):
        self._lines = []

    def line(self, text: str = ""):
        self._lines.append(text)

    def block(self, text: str):
        self._lines.append(text.rstrip("\n"))

    def flush(self):
        if self._lines:
            sys.stdout.write("\n".join(self._lines) + "\n")
        self._lines = []


def _configure_logging(verbose: bool, log_file: Optional[str]):
    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    formatter = logging.Formatter('%(asctime)s.%(msecs)03d | %(levelname)s | %(message)s', datefmt='%H:%M:%S')
    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setLevel(logging.INFO if verbose else logging.WARNING)
    stderr_handler.setFormatter(formatter)
    logger.addHandler(stderr_handler)
    if log_file is not None:
        file_handler = logging.FileHandler(log_file, mode='w')
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)


def _digraph(path: str) -> Digraph:
    g = load_graph(path)
    if isinstance(g, UndirectedGraph):
        raise GraphValidationError("{}: expected a digraph, got an undirected graph".format(path))
    return g


def _graph(path: str) -> UndirectedGraph:
    g = load_graph(path)
    if not isinstance(g, UndirectedGraph):
        raise GraphValidationError("{}: expected an undirected graph, got a digraph".format(path))
    return g


def _as_digraph(g) -> Digraph:
    return g.as_symmetric_digraph() if isinstance(g, UndirectedGraph) else g


def _join(values) -> str:
    return " ".join(str(x) for x in values)


def _gen(args, out: _Output) -> int:
    g = FamilyId(FamilyTag(args.family), args.n).build()
    if args.out is not None:
        dump_graph(g, args.out)
    else:
        out.block(format_graph(g))
    return EXIT_YES


def _decide(args, out: _Output) -> int:
    g = _as_digraph(load_graph(args.g))
    h = _as_digraph(load_graph(args.h))
    hom = exists_hom(g, h)
    if hom is None:
        out.line("no")
        return EXIT_NO
    out.line("yes")
    out.line("mapping: {}".format(_join(hom.mapping)))
    return EXIT_YES


def _write_certificate(cert: Certificate, as_json: bool, out: _Output):
    if as_json:
        out.line(cert.to_json())
    elif cert.is_yes:
        out.line("yes")
        out.line("mapping: {}".format(_join(cert.mapping)))
    else:
        out.line("no")
        out.line("l: {}".format(cert.l))
        out.line("walk: {}".format(_join(cert.walk.vertices)))
        out.line("directions: {}".format(cert.walk.directions))


def _certify_ac(args, out: _Output) -> int:
    cert = decide_ac(_digraph(args.g), args.n)
    _write_certificate(cert, args.json, out)
    return EXIT_YES if cert.is_yes else EXIT_NO


def _verify_cert(args, out: _Output) -> int:
    g = _digraph(args.g)
    with open(args.cert, encoding="utf-8") as f:
        cert = Certificate.from_json(f.read())
    problems = certificate_violations(g, args.n, cert)
    if problems:
        out.line("invalid: {}".format("; ".join(problems)))
        return EXIT_NO
    out.line("valid {} certificate".format(cert.verdict.value))
    return EXIT_YES


def _images(args, out: _Output) -> int:
    images = surjective_images(make_q_path(args.n), n=args.n)
    out.line("# {} surjective images of Q_{}".format(len(images), args.n))
    for g in images:
        out.line()
        out.block(format_graph(g))
    return EXIT_YES


def _core(args, out: _Output) -> int:
    g = _digraph(args.g)
    core = core_of(g)
    out.line("# core on vertices {}".format(_join(core.vertex_ids)))
    out.block(format_graph(core))
    return EXIT_YES


def _duality(args, out: _Output) -> int:
    left = _digraph(args.left)
    right = _digraph(args.right)
    sample_spec = None
    if args.samples:
        if args.seed is None:
            raise GraphValidationError("sampled sweeps need an explicit --seed")
        sample_order = args.sample_order if args.sample_order is not None else args.max_order + 1
        sample_spec = SampleSpec(args.samples, min(args.max_order + 1, sample_order), sample_order, args.seed)
    report = check_duality_pair(left, right, args.max_order, sample_spec)
    out.line(report.to_json() if args.json else report.to_text())
    return EXIT_YES if report.holds else EXIT_NO


def _cycle_color(args, out: _Output) -> int:
    result = cycle_colourable(_graph(args.g), args.cycle, ColouringMethod(args.method))
    if not result.colourable:
        out.line("no")
        return EXIT_NO
    out.line("yes")
    out.line("mapping: {}".format(_join(result.mapping)))
    if result.orientation is not None:
        out.line("orientation: {}".format(_join("{}>{}".format(u, v) for (u, v) in result.orientation.arcs)))
    return EXIT_YES


def _orient_search(args, out: _Output) -> int:
    mode = ContainmentMode.INDUCED if args.induced else ContainmentMode.SUBGRAPH
    forbidden = ForbiddenSet.from_images(args.fn, mode, args.acyclic)
    o = find_f_free_orientation(_graph(args.g), forbidden)
    if o is None:
        out.line("no")
        return EXIT_NO
    out.line("# orientation free of the {} images of Q_{}".format(len(forbidden), args.fn))
    out.block(format_graph(o.oriented_graph))
    return EXIT_YES


def _rghv(args, out: _Output) -> int:
    result = rghv_colourability(_graph(args.g), args.k)
    out.line("colourable: {}".format("yes" if result.colourable else "no"))
    if result.colouring is not None:
        out.line("colouring: {}".format(_join(result.colouring)))
    if result.orientation is not None:
        out.line("orientation: {}".format(_join("{}>{}".format(u, v) for (u, v) in result.orientation.arcs)))
    out.line("agree: {}".format("yes" if result.agree else "no"))
    return EXIT_YES if result.colourable else EXIT_NO


def _tree_dual(args, out: _Output) -> int:
    out.block(format_graph(tree_dual(_digraph(args.t))))
    return EXIT_YES


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="cycleduality",
                            description="Homomorphism dualities of oriented paths and cycles.")
    parser.add_argument("--verbose", action="store_true", help="log progress on stderr")
    parser.add_argument("--log-file", default=None, help="write a debug log to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="print a family member in the text format")
    gen.add_argument("--family", required=True, choices=[t.value for t in FamilyTag])
    gen.add_argument("--n", required=True, type=int)
    gen.add_argument("--out", default=None)
    gen.set_defaults(handler=_gen)

    decide = commands.add_parser("decide", help="search a homomorphism G -> H")
    decide.add_argument("--g", required=True)
    decide.add_argument("--h", required=True)
    decide.set_defaults(handler=_decide)

    certify = commands.add_parser("certify-ac", help="decide G -> AC_n with a certificate")
    certify.add_argument("--g", required=True)
    certify.add_argument("--n", required=True, type=int)
    certify.add_argument("--json", action="store_true")
    certify.set_defaults(handler=_certify_ac)

    verify = commands.add_parser("verify-cert", help="check an AC_n certificate")
    verify.add_argument("--g", required=True)
    verify.add_argument("--n", required=True, type=int)
    verify.add_argument("--cert", required=True)
    verify.set_defaults(handler=_verify_cert)

    images = commands.add_parser("images", help="list the surjective images of Q_n")
    images.add_argument("--n", required=True, type=int)
    images.set_defaults(handler=_images)

    core = commands.add_parser("core", help="print the core of G")
    core.add_argument("--g", required=True)
    core.set_defaults(handler=_core)

    duality = commands.add_parser("duality", help="test a duality pair on small and sampled graphs")
    duality.add_argument("--left", required=True)
    duality.add_argument("--right", required=True)
    duality.add_argument("--max-order", required=True, type=int)
    duality.add_argument("--samples", type=int, default=0)
    duality.add_argument("--sample-order", type=int, default=None)
    duality.add_argument("--seed", type=int, default=None)
    duality.add_argument("--json", action="store_true")
    duality.set_defaults(handler=_duality)

    colour = commands.add_parser("cycle-color", help="decide G -> C_n for an undirected G")
    colour.add_argument("--g", required=True)
    colour.add_argument("--cycle", required=True, type=int)
    colour.add_argument("--method", default=ColouringMethod.HOM.value, choices=[m.value for m in ColouringMethod])
    colour.set_defaults(handler=_cycle_color)

    orient = commands.add_parser("orient-search", help="search an orientation free of the images of Q_n")
    orient.add_argument("--g", required=True)
    orient.add_argument("--fn", required=True, type=int)
    orient.add_argument("--induced", action="store_true")
    orient.add_argument("--acyclic", action="store_true")
    orient.set_defaults(handler=_orient_search)

    rghv = commands.add_parser("rghv", help="compare k-colourings with short-path orientations")
    rghv.add_argument("--g", required=True)
    rghv.add_argument("--k", required=True, type=int)
    rghv.set_defaults(handler=_rghv)

    dual = commands.add_parser("tree-dual", help="print the dual of an oriented tree of height <= 3")
    dual.add_argument("--t", required=True)
    dual.set_defaults(handler=_tree_dual)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Runs one command.

    :param argv: the arguments without the program name, defaults to sys.argv[1:]
    :type argv: list of str
    :return: the exit code
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_YES
    logger = logging.getLogger(PACKAGE_LOGGER)
    out = _Output()
    try:
        _configure_logging(args.verbose, args.log_file)
    except OSError as e:
        sys.stderr.write("cycleduality: cannot open log file: {}\n".format(e))
        return EXIT_GUARD
    try:
        code = args.handler(args, out)
    except ResourceGuardError as e:
        sys.stderr.write("cycleduality: resource guard: {}\n".format(e))
        return EXIT_GUARD
    except ContractViolationError as e:
        sys.stderr.write("cycleduality: internal error: {}\n".format(e))
        return EXIT_GUARD
    except (GraphValidationError, CertificateError, ValueError, OSError) as e:
        sys.stderr.write("cycleduality: {}\n".format(e))
        return EXIT_INVALID
    out.flush()
    logger.info("{} finished with exit code {}".format(args.command, code))
    return code


def main():
    sys.exit(run())
