"""Integrity and scientific regression checks for the shipped quartic data."""
import json

import pytest

import spinvariants.fixtures as fx
from spinvariants._intmat import det_bareiss, multiplicative_order
from spinvariants.fixtures import fixture_names, fixture_text, klein_data
from spinvariants.surface_action import (count_invariant,
                                         group_invariant_spins,
                                         is_symplectic_mod2, standard_pairing,
                                         v_vector)


class TestIntegrity:
    def test_names(self):
        assert fixture_names() == ("klein_R.json", "klein_S.json",
                                   "klein_T.json", "klein_vectors.json")

    def test_all_files_parse_as_json(self):
        for name in fixture_names():
            json.loads(fixture_text(name))

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError, match="unknown fixture"):
            fixture_text("klein_U.json")

    def test_checksums_cover_exactly_the_data_files(self):
        expected = json.loads(
            (fx.resources.files("spinvariants.fixtures") / "data"
             / "checksums.json").read_text(encoding="utf-8"))
        assert set(expected) == set(fixture_names())

    def test_tampering_is_detected(self, tmp_path, monkeypatch):
        data = tmp_path / "data"
        data.mkdir()
        real_dir = fx.resources.files("spinvariants.fixtures") / "data"
        original = (real_dir / "klein_R.json").read_text(encoding="utf-8")
        (data / "klein_R.json").write_text(original.replace("-1", "1", 1),
                                           encoding="utf-8")
        (data / "checksums.json").write_text(
            (real_dir / "checksums.json").read_text(encoding="utf-8"),
            encoding="utf-8")

        class StubResources:
            @staticmethod
            def files(_package):
                return tmp_path

        monkeypatch.setattr(fx, "resources", StubResources)
        with pytest.raises(RuntimeError, match="checksum"):
            fixture_text("klein_R.json")


class TestKleinData:
    def test_loads_and_caches(self):
        assert klein_data() is klein_data()

    def test_genus_and_pairing(self):
        data = klein_data()
        assert data.R.genus == data.S.genus == data.T.genus == 3
        assert data.pairing == standard_pairing(3)

    def test_generator_orders(self):
        data = klein_data()
        assert multiplicative_order(data.R.matrix, 10) == 2
        assert multiplicative_order(data.S.matrix, 10) == 3
        assert multiplicative_order(data.T.matrix, 10) == 7

    def test_product_rst_is_identity(self):
        # a property of this transcription, locked in as a regression test
        from spinvariants._intmat import is_identity_int, matmul_int
        data = klein_data()
        assert is_identity_int(
            matmul_int(matmul_int(data.R.matrix, data.S.matrix), data.T.matrix))

    def test_unimodular_and_symplectic(self):
        data = klein_data()
        for action in (data.R, data.S, data.T):
            assert det_bareiss(action.matrix) in (1, -1)
            assert is_symplectic_mod2(action, data.pairing)

    def test_printed_vectors_match_recomputation(self):
        data = klein_data()
        for action, printed in ((data.R, data.V_R), (data.S, data.V_S),
                                (data.T, data.V_T)):
            assert v_vector(action, data.pairing).to_ints() \
                == [x % 2 for x in printed]

    def test_printed_vectors_exact_values(self):
        data = klein_data()
        assert data.V_R == (0, 0, 0, 0, 0, 0)
        assert data.V_S == (-1, 1, 1, 0, 0, 0)
        assert data.V_T == (0, 0, 0, -1, 0, 0)

    def test_counts(self):
        data = klein_data()
        assert count_invariant(data.R, data.pairing) == 16
        assert count_invariant(data.S, data.pairing) == 4
        assert count_invariant(data.T, data.pairing) == 1

    def test_group_has_unique_invariant_structure(self):
        data = klein_data()
        sols = group_invariant_spins([data.R, data.S, data.T], data.pairing)
        assert sols.cardinality() == 1
        [only] = sols.vectors()
        assert only.to_ints() == [0, 0, 1, 0, 0, 0]
