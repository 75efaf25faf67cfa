import pytest

from zeckgame.core import (
    MERGE_ONES,
    apply_move,
    combine,
    initial_state,
    legal_moves,
    zeckendorf,
)
from zeckgame.rng import SplitMix64
from zeckgame.strategies import (
    GameRecord,
    Winner,
    conjectured_longest_move,
    greedy_largest_move,
    make_policy,
    play_game,
    random_move,
)
from tests.test_core import state_of


class TestGreedy:
    def test_only_move(self):
        assert greedy_largest_move(initial_state(6)) == MERGE_ONES

    def test_combines_below_largest(self):
        assert greedy_largest_move(state_of(5, {1: 3, 2: 1})) == combine(1)

    def test_prefers_largest_summand(self):
        # largest summand 3 combines with the 2, not 1 with 2
        assert greedy_largest_move(state_of(6, {1: 1, 2: 1, 3: 1})) == combine(2)

    def test_terminal_raises(self):
        with pytest.raises(ValueError):
            greedy_largest_move(state_of(4, {1: 1, 3: 1}))

    def test_length_is_n_minus_z(self):
        for n in range(1, 501):
            record = play_game(n, make_policy("greedy"))
            assert record.length == n - zeckendorf(n).z, n


class TestConjecturedLongest:
    def test_only_move(self):
        assert conjectured_longest_move(initial_state(4)) == MERGE_ONES

    def test_merge_precedes_combine(self):
        assert conjectured_longest_move(state_of(4, {1: 2, 2: 1})) == MERGE_ONES

    def test_split_precedes_combine(self):
        from zeckgame.core import SPLIT_TWOS

        assert conjectured_longest_move(state_of(4, {2: 2})) == SPLIT_TWOS

    def test_terminal_raises(self):
        with pytest.raises(ValueError):
            conjectured_longest_move(state_of(4, {1: 1, 3: 1}))


class TestRandom:
    def test_single_move_certain(self):
        rng = SplitMix64(123)
        assert random_move(initial_state(4), rng) == MERGE_ONES

    def test_uniform_over_two_moves(self):
        s = state_of(4, {1: 2, 2: 1})
        rng = SplitMix64(99)
        hits = sum(random_move(s, rng) == MERGE_ONES for _ in range(10000))
        assert abs(hits / 10000 - 0.5) <= 0.02

    def test_seeded_record_reproducible(self):
        a = play_game(10, make_policy("random", seed=42))
        b = play_game(10, make_policy("random", seed=42))
        assert a == b
        c = play_game(10, make_policy("random", seed=43))
        # different seeds normally diverge; just require a is well-formed
        assert a.length >= 10 - zeckendorf(10).z
        assert isinstance(c, GameRecord)


class TestPlayGame:
    def test_n2(self):
        for name in ("greedy", "longest", "random"):
            record = play_game(2, make_policy(name, seed=1))
            assert record.length == 1
            assert record.winner is Winner.PLAYER1

    def test_n3_unique_game(self):
        record = play_game(3, make_policy("random", seed=5))
        assert [str(m) for m in record.moves] == ["merge_ones", "combine(1)"]
        assert record.winner is Winner.PLAYER2

    def test_n1_no_moves(self):
        record = play_game(1, make_policy("greedy"))
        assert record.length == 0
        assert record.winner is Winner.NO_MOVES

    def test_replayable(self):
        record = play_game(60, make_policy("random", seed=9))
        s = initial_state(60)
        for m in record.moves:
            assert m in legal_moves(s)
            s = apply_move(s, m)
        assert not legal_moves(s)

    def test_record_round_trip(self):
        record = play_game(20, make_policy("longest"))
        assert GameRecord.from_json(record.to_json()) == record
