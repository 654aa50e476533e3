"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error (bad n, malformed
transcript, illegal request), 3 internal invariant breach (the theoretically
winning side lost, or an engine guarantee failed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import run_full_analysis
from .decomposition import decompose, decompose_naive, decomposition_doc
from .engine import (
    engine_move,
    evaluate_position,
    plan_first_player,
    plan_second_player,
    winning_openings,
)
from .errors import DomainError, InternalInvariantError
from .game import (
    CONSTRAINTS,
    ONGOING,
    Ruleset,
    apply_move,
    graph_for,
    legal_moves,
    load_transcript,
    new_game,
    transcript_doc,
)
from .solver import ExhaustiveSolver, SolverKey, solve_openings, solve_report_doc

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for domain errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(prog="junipergreen", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[], help="D/A/C partition of G_n as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--naive", action="store_true", help="use the vertex-deletion oracle")

    p = sub.add_parser("openings", help="winning opening moves of G_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--constraint", choices=CONSTRAINTS, default="none")

    p = sub.add_parser("solve", help="winning openings by exhaustive search (n <= 20)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--constraint", choices=CONSTRAINTS, default="none")
    p.add_argument("--json", action="store_true", help="emit the full solve report")

    p = sub.add_parser("analyze", help="write sweep/membership/bands/lemoine CSV files")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bestmove", help="winning moves for a transcript position")
    p.add_argument("--transcript", required=True)

    p = sub.add_parser("selfplay", help="engine versus exhaustive-solver adversary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--opening", type=int, required=True)
    p.add_argument("--constraint", choices=CONSTRAINTS, default="none")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--n-limit", type=int, default=None)

    return parser


def _cmd_decompose(args) -> int:
    g = graph_for(args.n)
    dec = decompose_naive(g) if args.naive else decompose(g)
    print(json.dumps(decomposition_doc(args.n, dec)))
    return EXIT_OK


def _cmd_openings(args) -> int:
    print(" ".join(str(v) for v in winning_openings(graph_for(args.n), args.constraint)))
    return EXIT_OK


def _cmd_solve(args) -> int:
    report = solve_openings(args.n, args.constraint)
    if args.json:
        print(json.dumps(solve_report_doc(report)))
    else:
        print(" ".join(str(v) for v in report.winning_openings))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    run = run_full_analysis(args.n_max, args.out)
    for path in run.paths:
        print(path)
    status = "holds" if run.band_summary.mid_band_empty else "violated"
    print(f"mid-band emptiness (no A members strictly between n/3 and n/2): {status}")
    return EXIT_OK


def _cmd_bestmove(args) -> int:
    state = load_transcript(args.transcript)
    _, winning = evaluate_position(graph_for(state.ruleset.n), state)
    print(" ".join(str(v) for v in winning) if winning else "none")
    return EXIT_OK


def _cmd_selfplay(args) -> int:
    g = graph_for(args.n)
    rs = Ruleset(n=args.n, first_move_constraint=args.constraint)
    state = new_game(rs)
    if args.opening not in legal_moves(state):
        raise DomainError(f"{args.opening} is not a legal opening for n={args.n}")
    solver = ExhaustiveSolver(g)

    engine_opens = args.opening in set(winning_openings(g, args.constraint))
    if engine_opens:
        plan = plan_first_player(g, args.opening)
        engine_player = 1
    else:
        plan = plan_second_player(g, args.opening)
        engine_player = 2

    state = apply_move(state, args.opening)
    if not engine_opens and state.status == ONGOING:
        state = apply_move(state, engine_move(plan, state))
    while state.status == ONGOING:
        # Adversary move (optimal), then the engine's planned reply.
        used_mask = 0
        for k in state.used:
            used_mask |= 1 << (k - 1)
        adversary = solver.optimal_move(SolverKey(used=used_mask, current=state.current))
        state = apply_move(state, adversary)
        if state.status != ONGOING:
            break
        state = apply_move(state, engine_move(plan, state))

    print(json.dumps(transcript_doc(state)))
    winner = 1 if state.status == "won-by-player-1" else 2
    if winner != engine_player:
        raise InternalInvariantError(
            f"engine held the theoretically winning side (player {engine_player}) but lost"
        )
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    n_limit = args.n_limit
    if n_limit is None and "JG_N_LIMIT" in os.environ:
        n_limit = int(os.environ["JG_N_LIMIT"])
    uvicorn.run(create_app(n_limit), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


_HANDLERS = {
    "decompose": _cmd_decompose,
    "openings": _cmd_openings,
    "solve": _cmd_solve,
    "analyze": _cmd_analyze,
    "bestmove": _cmd_bestmove,
    "selfplay": _cmd_selfplay,
    "serve": _cmd_serve,
}


def cli_dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except InternalInvariantError as exc:
        sys.stderr.write(f"internal invariant breach: {exc}\n")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
