"""Round-trip and validation tests for the JSON formats."""

import numpy as np
import pytest

from gaussfock import fock, serialization as ser, siegel, states
from gaussfock import symplectic as sp
from gaussfock.errors import ConstraintViolationError, GaussFockError
from gaussfock.linalg import hs_norm

rng = np.random.default_rng(97)


class TestScalars:
    def test_complex_round_trip(self):
        z = 1.5 - 2.25j
        assert ser.decode_complex(ser.encode_complex(z)) == z

    def test_complex_rejects_wrong_shape(self):
        with pytest.raises(GaussFockError, match="re, im"):
            ser.decode_complex([1.0])
        with pytest.raises(GaussFockError):
            ser.decode_complex("1+2j")
        with pytest.raises(GaussFockError):
            ser.decode_complex([1.0, "x"])

    def test_vector_round_trip(self):
        f = rng.normal(size=4) + 1j * rng.normal(size=4)
        out = ser.decode_vector(ser.encode_vector(f))
        assert np.array_equal(out, f)

    def test_vector_rejects_non_array(self):
        with pytest.raises(GaussFockError, match="array"):
            ser.decode_vector({"0": [1.0, 0.0]})


class TestMatrix:
    def test_round_trip(self):
        A = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
        out = ser.decode_matrix(ser.encode_matrix(A))
        assert out.shape == (3, 2)
        assert np.array_equal(out, A)

    def test_missing_key(self):
        with pytest.raises(GaussFockError, match="missing key"):
            ser.decode_matrix({"rows": 1, "data": [[0.0, 0.0]]})

    def test_wrong_entry_count(self):
        with pytest.raises(GaussFockError, match="entries"):
            ser.decode_matrix({"rows": 2, "cols": 2, "data": [[0.0, 0.0]]})

    def test_encode_rejects_non_matrix(self):
        with pytest.raises(GaussFockError, match="matrix"):
            ser.encode_matrix(np.zeros(3))


class TestComposites:
    def test_symplectic_round_trip(self):
        r = sp.random_element(3, rng)
        out = ser.decode_symplectic(ser.encode_symplectic(r))
        assert hs_norm(out.U - r.U) < 1e-12
        assert hs_norm(out.V - r.V) < 1e-12

    def test_symplectic_revalidates(self):
        r = sp.random_element(2, rng)
        obj = ser.encode_symplectic(r)
        obj["V"]["data"][0] = [10.0, 0.0]
        with pytest.raises(ConstraintViolationError):
            ser.decode_symplectic(obj)

    def test_symplectic_dim_mismatch(self):
        obj = ser.encode_symplectic(sp.identity(2))
        obj["dim"] = 3
        with pytest.raises(GaussFockError, match="declares dim"):
            ser.decode_symplectic(obj)

    def test_point_round_trip(self):
        p = siegel.random_point(3, rng, max_norm=0.7)
        out = ser.decode_point(ser.encode_point(p))
        assert hs_norm(out.Z - p.Z) == 0.0

    def test_point_missing_keys(self):
        with pytest.raises(GaussFockError, match="missing keys"):
            ser.decode_point({"dim": 1})

    def test_state_round_trip(self):
        x = states.random_state(2, rng)
        out = ser.decode_state(ser.encode_state(x))
        assert states.state_residual(out, x) == 0.0

    def test_state_revalidates_disc(self):
        x = states.random_state(1, rng)
        obj = ser.encode_state(x)
        obj["Z"]["data"][0] = [1.5, 0.0]
        with pytest.raises(GaussFockError):
            ser.decode_state(obj)


class TestTensor:
    def test_round_trip_sparse(self):
        F = fock.exp_vector(np.array([0.5, -0.25j]), 6)
        out = ser.decode_tensor(ser.encode_tensor(F))
        assert fock.tensor_residual(out, F) == 0.0

    def test_threshold_drops_small_entries(self):
        F = fock.exp_vector(np.array([0.1 + 0j]), 8)
        obj = ser.encode_tensor(F, threshold=1e-6)
        out = ser.decode_tensor(obj)
        assert len(obj["entries"]) < np.count_nonzero(F.coeffs)
        assert fock.tensor_residual(out, F) < 1e-6

    def test_bad_index_rejected(self):
        obj = {"dim": 2, "cutoff": 3,
               "entries": [[[0, 9], [1.0, 0.0]]]}
        with pytest.raises(GaussFockError, match="occupation index"):
            ser.decode_tensor(obj)

    def test_bad_entry_shape_rejected(self):
        obj = {"dim": 1, "cutoff": 3, "entries": [[1, 2, 3]]}
        with pytest.raises(GaussFockError, match="tensor entry"):
            ser.decode_tensor(obj)

    def test_revalidates_degree_invariant(self):
        # an index inside the grid but above the total-degree cutoff
        obj = {"dim": 2, "cutoff": 3,
               "entries": [[[3, 3], [1.0, 0.0]]]}
        with pytest.raises(GaussFockError, match="cutoff"):
            ser.decode_tensor(obj)


class TestFiles:
    def test_dump_and_load(self, tmp_path):
        path = str(tmp_path / "state.json")
        x = states.random_state(2, rng)
        ser.dump_json(ser.encode_state(x), path)
        out = ser.decode_state(ser.load_json(path))
        assert states.state_residual(out, x) == 0.0

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(GaussFockError, match="cannot read"):
            ser.load_json(str(tmp_path / "nope.json"))

    def test_load_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(GaussFockError, match="malformed"):
            ser.load_json(str(path))
