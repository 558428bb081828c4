"""
petalkit command-line interface.

Every subcommand reads permutation words as comma-separated decimal levels,
given inline, as a file path, or on stdin ("-"). Domain errors exit with
status 1 and print {"error": <name>, "message": <text>}; usage errors exit
with status 2.
"""
import json
import logging
from functools import wraps
from typing import Any, Callable, List, Optional

import click
import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from config.settings import get_cli_config, get_sampling_config
from core.errors import PetalkitError
from core.permutations import (
    PetalPermutation,
    Side,
    StemPermutation,
    pairing,
    parse_word,
    permutation_from_json,
    petal_to_stem,
    stem_to_petal,
)
from diagram.codes import gauss_code, pd_code
from diagram.stem_diagram import build_diagram, writhe
from invariants.alexander import alexander_from_diagram, alexander_of_petal
from moves.models import move_to_json
from moves.petal_moves import enumerate_legal_moves
from moves.scripts import replay_script
from search.path_search import MovePath, SearchConfig, find_path
from search.sampling import iter_random_petals
from search.verify import verify_path
from utils.input_source import read_json, read_text
from utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="petalkit",
    help="Petal permutations, petal moves, stem diagrams and knot invariants.",
    add_completion=False,
    no_args_is_help=True,
)

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)

JSON_OPTION = typer.Option(False, "--json", help="Emit JSON instead of text.")


def _dumps(data: Any) -> str:
    config = get_cli_config()
    return json.dumps(data, indent=config["json_indent"], separators=config["json_separators"])


def _word_text(word) -> str:
    return get_cli_config()["word_separator"].join(str(v) for v in word)


def _emit(data: Any) -> None:
    typer.echo(_dumps(data))


def _read_word(source: str):
    return parse_word(read_text(source).strip())


def _read_petal(source: str) -> PetalPermutation:
    return PetalPermutation(word=_read_word(source))


def _read_either(source: str):
    return permutation_from_json(_read_word(source))


def handles_errors(func: Callable) -> Callable:
    """Turn PetalkitError into exit status 1 with a structured message."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PetalkitError as exc:
            logger.debug("command failed", exc_info=True)
            _emit(exc.to_dict())
            if not kwargs.get("as_json", False):
                err_console.print(f"[red]{exc.name}[/red]: {escape(exc.message)}")
            raise typer.Exit(code=1)

    return wrapper


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug detail to stderr."),
) -> None:
    try:
        configure_logging(verbose=verbose)
    except PetalkitError as exc:
        _emit(exc.to_dict())
        raise typer.Exit(code=1)


@app.command("canon")
@handles_errors
def canon(word: str = typer.Argument(..., help="Petal word, any rotation."), as_json: bool = JSON_OPTION) -> None:
    """Print the canonical rotation (starting at 0) of a petal word."""
    sigma = _read_petal(word)
    if as_json:
        _emit(sigma.to_json_dict())
    else:
        typer.echo(_word_text(sigma.word))


@app.command("pairs")
@handles_errors
def pairs(
    word: str = typer.Argument(..., help="Petal word."),
    rotation: int = typer.Option(0, "--rotation", "-r", help="Offset into the canonical word."),
    side: Optional[Side] = typer.Option(None, "--side", help="L or R; both when omitted."),
    as_json: bool = JSON_OPTION,
) -> None:
    """Print the left- and right-pairs of a rotation of a petal word."""
    sigma = _read_petal(word)
    sides = [side] if side is not None else [Side.LEFT, Side.RIGHT]
    result = {s.value: [list(p) for p in pairing(sigma, rotation, s).pairs] for s in sides}
    if as_json:
        _emit({"rotation": rotation, **result})
        return
    for name, groups in result.items():
        typer.echo(f"{name}: " + " ".join("(" + _word_text(g) + ")" for g in groups))


@app.command("to-stem")
@handles_errors
def to_stem(
    word: str = typer.Argument(..., help="Petal word."),
    rotation: int = typer.Option(0, "--rotation", "-r", help="Basepoint petal as an offset into the canonical word."),
    t0: int = typer.Option(0, "--t0", help="Basepoint level."),
    as_json: bool = JSON_OPTION,
) -> None:
    """Convert a petal permutation to a stem permutation."""
    tau = petal_to_stem(_read_petal(word), rotation, t0)
    if as_json:
        _emit(tau.to_json_dict())
    else:
        typer.echo(_word_text(tau.word))


@app.command("to-petal")
@handles_errors
def to_petal(word: str = typer.Argument(..., help="Stem word."), as_json: bool = JSON_OPTION) -> None:
    """Convert a stem permutation to its petal permutation."""
    sigma = stem_to_petal(StemPermutation(word=_read_word(word)))
    if as_json:
        _emit(sigma.to_json_dict())
    else:
        typer.echo(_word_text(sigma.word))


@app.command("apply")
@handles_errors
def apply(
    script: str = typer.Argument("-", help="Move script JSON, a file holding it, or '-' for stdin."),
    as_json: bool = JSON_OPTION,
) -> None:
    """Replay a move script (or the script of a MovePath) and print every intermediate word."""
    given = MovePath.from_json(read_json(script))
    start, moves = given.start, given.moves
    steps = replay_script(start, moves)
    path = MovePath(start=start, moves=moves, steps=tuple(steps), end=steps[-1] if steps else start)
    if as_json:
        _emit(path.to_json_dict())
        return
    typer.echo(_word_text(start.word))
    for step in steps:
        typer.echo(_word_text(step.word))


@app.command("enumerate")
@handles_errors
def enumerate_moves(
    word: str = typer.Argument(..., help="Petal word."),
    petal_bound: Optional[int] = typer.Option(
        None, "--petal-bound", help="Offer additions whose result has at most this many petals."
    ),
    as_json: bool = JSON_OPTION,
) -> None:
    """List the legal moves on a petal permutation, one per resulting word."""
    sigma = _read_petal(word)
    moves = enumerate_legal_moves(sigma, petal_bound)
    if as_json:
        _emit([{"move": move_to_json(move), "result": list(result.word)} for move, result in moves])
        return
    table = Table("move", "result")
    for move, result in moves:
        table.add_row(escape(move.describe()), _word_text(result.word))
    console.print(table)


@app.command("diagram")
@handles_errors
def diagram(
    word: str = typer.Argument(..., help="Petal word (odd length) or stem word (even length)."),
    rotation: int = typer.Option(0, "--rotation", "-r", help="Basepoint petal for petal input."),
    t0: int = typer.Option(0, "--t0", help="Basepoint level for petal input."),
    as_json: bool = JSON_OPTION,
) -> None:
    """Print the Gauss and PD codes of the reduced stem diagram."""
    perm = _read_either(word)
    tau = petal_to_stem(perm, rotation, t0) if isinstance(perm, PetalPermutation) else perm
    built = build_diagram(tau)
    gauss, pd = gauss_code(built), pd_code(built)
    if as_json:
        _emit(
            {
                "stem": list(tau.word),
                "crossings": len(built.crossings),
                "writhe": writhe(built),
                "gauss": {"passages": list(gauss.passages), "signs": list(gauss.signs)},
                "pd": [list(quad) for quad in pd.crossings],
            }
        )
        return
    typer.echo(f"stem: {_word_text(tau.word)}")
    typer.echo(f"crossings: {len(built.crossings)}, writhe: {writhe(built)}")
    typer.echo(f"gauss: {gauss.to_text()}")
    typer.echo(f"pd: {pd.to_text()}")


@app.command("invariant")
@handles_errors
def invariant(
    word: str = typer.Argument(..., help="Petal word (odd length) or stem word (even length)."),
    as_json: bool = typer.Option(True, "--json/--text", help="JSON (default) or a readable polynomial."),
) -> None:
    """Print the Alexander polynomial (lowest degree first) and the determinant."""
    perm = _read_either(word)
    if isinstance(perm, PetalPermutation):
        result = alexander_of_petal(perm)
    else:
        result = alexander_from_diagram(build_diagram(perm))
    if as_json:
        _emit(result.to_json_dict())
    else:
        typer.echo(f"{result.polynomial} (determinant {result.determinant})")


@app.command("connect")
@handles_errors
def connect(
    source: str = typer.Argument(..., help="Starting petal word."),
    target: str = typer.Argument(..., help="Goal petal word."),
    petal_bound: Optional[int] = typer.Option(None, "--petal-bound", help="Longest word the search may visit (odd)."),
    depth_bound: Optional[int] = typer.Option(None, "--depth-bound", help="Most moves in a path."),
    bidirectional: Optional[bool] = typer.Option(
        None, "--bidirectional/--unidirectional", help="Search from both ends."
    ),
    prefilter: Optional[bool] = typer.Option(
        None, "--prefilter/--no-prefilter", help="Compare Alexander polynomials before searching."
    ),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads for frontier expansion."),
    as_json: bool = JSON_OPTION,
) -> None:
    """Find a shortest move sequence between two petal permutations."""
    cfg = SearchConfig.from_settings(
        petal_bound=petal_bound,
        depth_bound=depth_bound,
        bidirectional=bidirectional,
        invariant_prefilter=prefilter,
        threads=threads,
    )
    path = find_path(_read_petal(source), _read_petal(target), cfg)
    if as_json:
        _emit(path.to_json_dict())
        return
    typer.echo(_word_text(path.start.word))
    for move, step in zip(path.moves, path.steps):
        typer.echo(f"{_dumps(move_to_json(move))} -> {_word_text(step.word)}")


@app.command("verify")
@handles_errors
def verify(
    path_source: str = typer.Argument("-", help="MovePath or move script JSON, a file holding it, or '-'."),
    check_invariants: bool = typer.Option(
        True, "--invariants/--no-invariants", help="Check the Alexander polynomial after every move."
    ),
    as_json: bool = JSON_OPTION,
) -> None:
    """Check that every move of a path is legal and replays to the recorded words."""
    report = verify_path(MovePath.from_json(read_json(path_source)), check_invariants)
    if as_json:
        _emit(
            {
                "ok": report.ok,
                "moves": report.moves,
                "end": list(report.end.word),
                "invariant_checked": report.invariant_checked,
            }
        )
    else:
        typer.echo(report.summary())


@app.command("random")
@handles_errors
def random_words(
    n: int = typer.Argument(..., help="Number of petal pairs; words have 2n+1 entries."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Generator seed (default PETALKIT_SEED)."),
    count: int = typer.Option(1, "--count", "-c", min=1, help="Number of words to draw."),
    as_json: bool = JSON_OPTION,
) -> None:
    """Draw uniform random petal permutations."""
    if seed is None:
        seed = get_sampling_config()["seed"]
    words: List[PetalPermutation] = list(iter_random_petals(n, seed, count))
    if as_json:
        _emit([list(sigma.word) for sigma in words])
        return
    for sigma in words:
        typer.echo(_word_text(sigma.word))


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on argv and return the exit status instead of exiting."""
    try:
        result = app(args=argv, prog_name="petalkit", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        err_console.print("Aborted!")
        return 1
    return result if isinstance(result, int) else 0
