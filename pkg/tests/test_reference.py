import pytest

from pirlab.exceptions import BudgetExceeded, InvalidParameters, NotPrime
from pirlab.reference import (
    ReferenceKey,
    build_reference_table,
    evaluation_points,
    interference_term,
    power_block,
    reference_decoder,
    reference_key_count,
    reference_keys,
)
from pirlab.scheme import MessageVector, SchemeTable, respond, selector_matrix
from pirlab.verifier import check_privacy_standard, query_counts
from tests.conftest import make_table

REFERENCE_2_2 = {
    (1, 0): ((0, 0), (1, 0)),
    (1, 1): ((1, 0), (0, 0)),
    (1, 2): ((0, 1), (1, 1)),
    (1, 3): ((1, 1), (0, 1)),
    (2, 0): ((0, 0), (0, 1)),
    (2, 1): ((0, 1), (0, 0)),
    (2, 2): ((1, 0), (1, 1)),
    (2, 3): ((1, 1), (1, 0)),
}


class TestKeys:
    @pytest.mark.parametrize(("servers", "messages", "count"), [(2, 2, 4), (2, 3, 8), (3, 2, 18), (3, 3, 54)])
    def test_key_count(self, servers: int, messages: int, count: int):
        assert reference_key_count(servers, messages) == count
        assert len(reference_keys(servers, messages)) == count

    def test_generation_order(self):
        assert reference_keys(2, 2) == [
            ReferenceKey((0,), (0, 1)),
            ReferenceKey((0,), (1, 0)),
            ReferenceKey((1,), (0, 1)),
            ReferenceKey((1,), (1, 0)),
        ]

    def test_repeated_nodes_rejected(self):
        with pytest.raises(InvalidParameters):
            ReferenceKey((0,), (1, 1))


def test_power_block(f3):
    assert power_block(f3(2), 2) == (2, 1)
    assert power_block(f3(0), 2) == (0, 0)
    assert power_block(f3(1), 3) == (1, 1, 1)


class TestBuild:
    def test_reference_2_2_rows(self, reference_2_2: SchemeTable):
        assert {(m, f): query.to_rows() for m, f, query in reference_2_2.realizations()} == REFERENCE_2_2

    def test_shape(self, reference_3_2: SchemeTable):
        params = reference_3_2.params
        assert (params.field.modulus, params.sub_length, params.width, params.rows_per_server) == (3, 2, 4, (1, 1, 1))
        assert reference_3_2.key_count == 18

    def test_message_indices_use_disjoint_queries(self, reference_2_3: SchemeTable):
        for m in reference_2_3.message_indices:
            for other in reference_2_3.message_indices:
                if m == other:
                    continue
                mine = {reference_2_3.query(m, f) for f in reference_2_3.keys}
                theirs = {reference_2_3.query(other, f) for f in reference_2_3.keys}
                assert mine.isdisjoint(theirs)

    def test_single_server_sees_each_query_equally_often(self, reference_3_2: SchemeTable):
        for server in reference_3_2.server_indices:
            counts = query_counts(reference_3_2, [server])
            assert set(counts.values()) == {(2, 2)}
            assert {sum(per_index) for per_index in counts.values()} == {4}

        assert check_privacy_standard(reference_3_2).classes == ((2, 4),)

    @pytest.mark.parametrize("servers", [4, 6])
    def test_composite_server_count(self, servers: int):
        with pytest.raises(NotPrime):
            build_reference_table(servers, 2)

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as exc_info:
            build_reference_table(3, 3, budget=53)

        assert exc_info.value.required == 54

    def test_budget_from_environment(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("PIR_REFERENCE_BUDGET", "3")

        with pytest.raises(BudgetExceeded):
            build_reference_table(2, 2)

    def test_budget_stops_at_first_partial_product(self):
        with pytest.raises(BudgetExceeded) as exc_info:
            build_reference_table(1601, 2, budget=10**6)

        assert exc_info.value.required == 1601 * 720
        assert str(exc_info.value) == "enumeration needs at least 1152720 cells, budget is 1000000"

    def test_largest_prime_field_is_refused_before_enumeration(self):
        with pytest.raises(BudgetExceeded) as exc_info:
            build_reference_table(2**31 - 1, 2, budget=10**6)

        assert exc_info.value.required == 2**31 - 1


class TestDecoder:
    def test_binary_decoder_sums_answers(self, reference_2_2: SchemeTable):
        for m, f, _ in reference_2_2.realizations():
            assert reference_decoder(reference_2_2, m, f).to_rows() == ((1, 1),)

    def test_decoder_isolates_desired_block(self, reference_3_2: SchemeTable):
        for m, f, query in reference_3_2.realizations():
            decoder = reference_decoder(reference_3_2, m, f)

            assert decoder.shape == (2, 3)
            assert decoder @ query == selector_matrix(reference_3_2.params, m)

    def test_evaluation_points_follow_key(self, reference_3_2: SchemeTable):
        keys = reference_keys(3, 2)
        for f, key in enumerate(keys):
            assert [point.value for point in evaluation_points(reference_3_2, 1, f)] == list(key.nodes)

    def test_non_reference_table(self):
        table = make_table(3, 2, 2, {1: [[[1, 0], [0, 1]]], 2: [[[0, 1], [1, 0]]]})

        with pytest.raises(InvalidParameters, match="reference-shaped"):
            reference_decoder(table, 1, 0)


def test_answers_are_interference_plus_desired_polynomial(reference_3_2: SchemeTable):
    symbols = (1, 2, 2, 1)
    w = MessageVector.from_symbols(reference_3_2.params, symbols)
    p = reference_3_2.field.modulus

    for m in reference_3_2.message_indices:
        desired = w.block(m)
        for f, key in enumerate(reference_keys(3, 2)):
            beta = interference_term(reference_3_2, key, m, symbols)
            answers = respond(reference_3_2, m, f, w)
            for j, z in enumerate(key.nodes, start=1):
                polynomial = sum(z**t * desired[t - 1] for t in range(1, 3))
                assert answers.server(j) == ((beta + polynomial) % p,)
