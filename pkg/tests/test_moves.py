import numpy as np
import pytest

from core.errors import (
    BadLevels,
    BasepointPairInvolved,
    LevelOutOfRange,
    MoveScriptError,
    NestingViolation,
    NotApplicable,
    NotConsecutivePair,
    PairsNotFound,
    PositionOutOfRange,
    SingletonUnderflow,
)
from core.permutations import Orientation, PetalPermutation, Side, StemPermutation, stem_to_petal
from moves.models import CrossingExchange, TrivialAddition, TrivialDeletion, move_key, move_to_json, parse_move
from moves.petal_moves import (
    apply_crossing_exchange,
    apply_move,
    apply_stem_trivial_addition,
    apply_trivial_addition,
    apply_trivial_deletion,
    enumerate_legal_moves,
    find_deletable_pairs,
    invert_move,
    validate_crossing_exchange,
)
from moves.scripts import dump_move_script, load_move_script, replay_script
from search.sampling import iter_random_petals
from tests.knots import FIGURE_EIGHT, TREFOIL, TREFOIL_STEM


def petal(*word):
    return PetalPermutation(word=word)


def test_addition_adds_petal_between_three_and_one(trefoil):
    move = TrivialAddition(rotation=0, position=1, m=2, orientation=Orientation.DESCENDING)
    assert apply_trivial_addition(trefoil, move) == petal(5, 3, 2, 1, 6, 4, 0)


def test_addition_first_step_of_figure_eight_chain(figure_eight):
    move = TrivialAddition(rotation=0, position=3, m=0, orientation="asc")
    assert apply_trivial_addition(figure_eight, move) == petal(2, 5, 7, 3, 0, 1, 8, 6, 4)


def test_addition_to_single_petal():
    move = TrivialAddition(rotation=0, position=0, m=1, orientation=Orientation.ASCENDING)
    assert apply_trivial_addition(petal(0), move).word == (0, 1, 2)


def test_addition_respects_rotation(trefoil):
    # inserting after index 0 of rotation 1 is inserting after index 1 of rotation 0
    rotated = TrivialAddition(rotation=1, position=0, m=2, orientation=Orientation.DESCENDING)
    assert apply_trivial_addition(trefoil, rotated) == petal(5, 3, 2, 1, 6, 4, 0)


def test_addition_bounds(trefoil):
    with pytest.raises(PositionOutOfRange):
        apply_trivial_addition(trefoil, TrivialAddition(position=5, m=0, orientation="asc"))
    with pytest.raises(LevelOutOfRange):
        apply_trivial_addition(trefoil, TrivialAddition(position=0, m=6, orientation="asc"))
    top = apply_trivial_addition(trefoil, TrivialAddition(position=4, m=5, orientation="asc"))
    assert top.word == (0, 3, 1, 4, 2, 5, 6)


def test_find_deletable_pairs():
    assert find_deletable_pairs(petal(0)) == []
    chain_one = petal(2, 5, 7, 3, 0, 1, 8, 6, 4)
    assert TrivialDeletion(rotation=0, position=0) in find_deletable_pairs(chain_one)
    chain_three = petal(0, 2, 9, 8, 6, 4, 7, 10, 1, 3, 5)
    positions = [d.position for d in find_deletable_pairs(chain_three)]
    assert chain_three.word[positions[0]: positions[0] + 2] == (9, 8)


def test_deletion_examples():
    chain_three = petal(0, 2, 9, 8, 6, 4, 7, 10, 1, 3, 5)
    assert apply_trivial_deletion(chain_three, TrivialDeletion(position=2)) == petal(0, 2, 6, 4, 7, 8, 1, 3, 5)
    assert apply_trivial_deletion(petal(0, 1, 2), TrivialDeletion(position=1)) == petal(0)
    chain_one = petal(2, 5, 7, 3, 0, 1, 8, 6, 4)
    assert apply_trivial_deletion(chain_one, TrivialDeletion(position=0)).word == FIGURE_EIGHT


def test_deletion_wraps_around():
    # last and first entries of (0,2,3,4,1) are the consecutive pair (1,0)
    assert apply_trivial_deletion(petal(0, 2, 3, 4, 1), TrivialDeletion(position=4)) == petal(0, 1, 2)


def test_deletion_errors(trefoil):
    with pytest.raises(SingletonUnderflow):
        apply_trivial_deletion(petal(0), TrivialDeletion(position=0))
    with pytest.raises(NotConsecutivePair):
        apply_trivial_deletion(trefoil, TrivialDeletion(position=0))
    with pytest.raises(PositionOutOfRange):
        apply_trivial_deletion(trefoil, TrivialDeletion(position=9))


def test_validate_exchange_ok():
    sigma = petal(0, 1, 10, 8, 6, 4, 7, 9, 2, 3, 5)
    assert validate_crossing_exchange(sigma, CrossingExchange(side=Side.LEFT, m=1, w=9)).ok
    fig3 = petal(4, 2, 0, 6, 5, 1, 3)
    rotation = fig3.word.index(4)
    assert validate_crossing_exchange(fig3, CrossingExchange(rotation=rotation, side="R", m=1, w=4)).ok


@pytest.mark.parametrize(
    "word, side, m, w, error",
    [
        ((0, 1, 4, 2, 3), Side.LEFT, 1, 2, BadLevels),
        ((0, 1, 4, 2, 3), Side.LEFT, 1, 4, LevelOutOfRange),
        ((0, 2, 1, 4, 3), Side.LEFT, 1, 3, PairsNotFound),
        ((0, 3, 1, 4, 2), Side.LEFT, 0, 3, BasepointPairInvolved),
        ((0, 1, 6, 2, 5, 3, 7, 4, 8), Side.LEFT, 1, 5, NestingViolation),
    ],
)
def test_exchange_violations(word, side, m, w, error):
    sigma = petal(*word)
    exchange = CrossingExchange(side=side, m=m, w=w)
    report = validate_crossing_exchange(sigma, exchange)
    assert not report.ok
    assert report.error == error.name
    with pytest.raises(error):
        apply_crossing_exchange(sigma, exchange)


def test_nesting_violation_reports_pair():
    sigma = petal(0, 1, 6, 2, 5, 3, 7, 4, 8)
    report = validate_crossing_exchange(sigma, CrossingExchange(side=Side.LEFT, m=1, w=5))
    assert report.offending_pair == (3, 7)
    with pytest.raises(NestingViolation) as info:
        apply_crossing_exchange(sigma, CrossingExchange(side=Side.LEFT, m=1, w=5))
    assert info.value.to_dict()["offending_pair"] == [3, 7]


def test_exchange_examples():
    fig3 = petal(4, 2, 0, 6, 5, 1, 3)
    exchange = CrossingExchange(rotation=fig3.word.index(4), side=Side.RIGHT, m=1, w=4)
    assert apply_crossing_exchange(fig3, exchange) == petal(5, 1, 0, 6, 4, 2, 3)

    chain_two = petal(0, 1, 10, 8, 6, 4, 7, 9, 2, 3, 5)
    result = apply_crossing_exchange(chain_two, CrossingExchange(side=Side.LEFT, m=1, w=9))
    assert result.word == (0, 2, 9, 8, 6, 4, 7, 10, 1, 3, 5)

    small = apply_crossing_exchange(petal(0, 1, 4, 2, 3), CrossingExchange(side=Side.LEFT, m=1, w=3))
    assert small == petal(0, 2, 3, 1, 4)


def test_exchange_is_self_inverse():
    chain_two = petal(0, 1, 10, 8, 6, 4, 7, 9, 2, 3, 5)
    exchange = CrossingExchange(side=Side.LEFT, m=1, w=9)
    after = apply_crossing_exchange(chain_two, exchange)
    back = invert_move(exchange, chain_two)
    assert isinstance(back, CrossingExchange)
    assert (back.side, back.m, back.w) == (exchange.side, exchange.m, exchange.w)
    assert apply_move(after, back) == chain_two


def test_enumerate_single_petal():
    results = [result.word for _, result in enumerate_legal_moves(petal(0), level_cap=3)]
    assert results == [(0, 1, 2), (0, 2, 1)]
    assert enumerate_legal_moves(petal(0)) == []


def test_enumerate_includes_known_moves():
    results = {result.word for _, result in enumerate_legal_moves(petal(0, 1, 2))}
    assert (0,) in results
    chain_two = petal(0, 1, 10, 8, 6, 4, 7, 9, 2, 3, 5)
    results = {result.word for _, result in enumerate_legal_moves(chain_two)}
    assert (0, 2, 9, 8, 6, 4, 7, 10, 1, 3, 5) in results


def test_enumerate_is_sorted_and_deduplicated(figure_eight):
    results = [result.word for _, result in enumerate_legal_moves(figure_eight, level_cap=9)]
    assert results == sorted(set(results))
    for move, result in enumerate_legal_moves(figure_eight, level_cap=9):
        assert apply_move(figure_eight, move) == result


def test_enumerate_finds_every_legal_exchange():
    chain_two = petal(0, 1, 10, 8, 6, 4, 7, 9, 2, 3, 5)
    results = {result.word for _, result in enumerate_legal_moves(chain_two)}
    size = len(chain_two.word)
    found = 0
    for rotation in range(size):
        for side in (Side.LEFT, Side.RIGHT):
            for m in range(size):
                for w in range(m + 2, size - 1):
                    exchange = CrossingExchange(rotation=rotation, side=side, m=m, w=w)
                    if validate_crossing_exchange(chain_two, exchange).ok:
                        assert apply_crossing_exchange(chain_two, exchange).word in results
                        found += 1
    assert found > 0


def test_enumerate_respects_level_cap(figure_eight):
    assert all(len(r) <= 7 for _, r in enumerate_legal_moves(figure_eight, level_cap=8))
    assert any(len(r) == 9 for _, r in enumerate_legal_moves(figure_eight, level_cap=9))


def test_invert_addition_from_figure():
    addition = TrivialAddition(rotation=0, position=1, m=2, orientation=Orientation.DESCENDING)
    inverse = invert_move(addition, petal(*TREFOIL))
    assert inverse == TrivialDeletion(rotation=0, position=2)


def test_invert_deletion_rebuilds_previous_word():
    chain_three = petal(0, 2, 9, 8, 6, 4, 7, 10, 1, 3, 5)
    deletion = TrivialDeletion(position=2)
    after = apply_trivial_deletion(chain_three, deletion)
    inverse = invert_move(deletion, chain_three)
    assert isinstance(inverse, TrivialAddition)
    assert apply_move(after, inverse) == chain_three


def test_invert_not_applicable(trefoil):
    with pytest.raises(NotApplicable):
        invert_move(TrivialDeletion(position=0), trefoil)


def test_move_inverse_identity_on_random_moves():
    rng = np.random.default_rng(7)
    checked = 0
    for n in (1, 2, 3, 4):
        for sigma in iter_random_petals(n, seed=11 + n, count=125):
            options = enumerate_legal_moves(sigma, level_cap=len(sigma) + 2)
            move, after = options[int(rng.integers(len(options)))]
            assert apply_move(after, invert_move(move, sigma)) == sigma, (sigma, move)
            checked += 1
    assert checked == 500


def test_move_json_round_trip_names():
    move = parse_move({"type": "add", "rotation": 0, "pos": 3, "m": 0, "orient": "asc"})
    assert isinstance(move, TrivialAddition)
    assert move_to_json(move) == {"type": "add", "rotation": 0, "pos": 3, "m": 0, "orient": "asc"}
    exchange = parse_move({"type": "xchg", "rotation": 2, "side": "R", "m": 1, "w": 4})
    assert move_key(exchange) == '{"type":"xchg","rotation":2,"side":"R","m":1,"w":4}'


@pytest.mark.parametrize(
    "data",
    [
        {"type": "twist", "rotation": 0},
        {"type": "del", "rotation": 0},
        {"type": "xchg", "side": "X", "m": 1, "w": 4},
        "add",
    ],
)
def test_parse_move_rejects(data):
    with pytest.raises(MoveScriptError):
        parse_move(data)


def test_script_load_dump_replay(chain_data):
    start, moves = load_move_script(chain_data["script"])
    assert start.word == FIGURE_EIGHT
    assert dump_move_script(start, moves) == chain_data["script"]
    steps = replay_script(start, moves)
    assert [list(s.word) for s in steps] == chain_data["steps"]


def test_script_accepts_text_head():
    start, moves = load_move_script(["3,1,4,2,0"])
    assert start.word == TREFOIL and moves == []
    with pytest.raises(MoveScriptError):
        load_move_script([])
    with pytest.raises(MoveScriptError):
        load_move_script([[0, 1]])
    with pytest.raises(MoveScriptError):
        load_move_script([{"type": "del", "pos": 0}])


def test_stem_trivial_addition():
    tau = StemPermutation(word=TREFOIL_STEM)
    grown = apply_stem_trivial_addition(tau, 2, 0, Orientation.ASCENDING)
    assert grown.word == (4, 6, 3, 0, 1, 7, 5, 2)
    sigma = stem_to_petal(tau)
    grown_petal = stem_to_petal(grown)
    deletions = find_deletable_pairs(grown_petal)
    assert any(apply_trivial_deletion(grown_petal, d) == sigma for d in deletions)
    with pytest.raises(PositionOutOfRange):
        apply_stem_trivial_addition(tau, 6, 0, Orientation.ASCENDING)
    with pytest.raises(LevelOutOfRange):
        apply_stem_trivial_addition(tau, 0, 7, Orientation.ASCENDING)
